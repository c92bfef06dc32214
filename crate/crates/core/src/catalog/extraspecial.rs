use std::sync::Arc;

use super::CatalogAlgebra;
use crate::algebra::validate_algebra;
use crate::error::{Error, Result};
use crate::exactla::FieldSpec;

/// The Heisenberg group of order `p^3`: triples with
/// `(a,b,c)(a',b',c') = (a+a', b+b', c+c'+b a')`.
///
/// The element `(a,b,c)` equals `g^a h^b z^c` for `g = (1,0,0)`, `h = (0,1,0)`,
/// `z = (0,0,1)`, and has index `a + p b + p^2 c`.
#[derive(Clone, Copy, Debug)]
pub struct HeisenbergGroup {
    p: u32,
}

pub type Triple = (u32, u32, u32);

impl HeisenbergGroup {
    pub fn new(p: u32) -> Self {
        HeisenbergGroup { p }
    }

    pub fn order(&self) -> usize {
        (self.p as usize).pow(3)
    }

    pub fn mul(&self, u: Triple, v: Triple) -> Triple {
        let p = self.p;
        ((u.0 + v.0) % p, (u.1 + v.1) % p, (u.2 + v.2 + u.1 * v.0) % p)
    }

    pub fn identity(&self) -> Triple {
        (0, 0, 0)
    }

    pub fn inverse(&self, u: Triple) -> Triple {
        let p = self.p;
        let a = (p - u.0) % p;
        let b = (p - u.1) % p;
        // c + c' + b a' = 0 with a' = -a
        let c = (u.1 * u.0 % p + p * p - u.2) % p;
        (a, b, c % p)
    }

    pub fn pow(&self, u: Triple, e: u32) -> Triple {
        (0..e).fold(self.identity(), |acc, _| self.mul(acc, u))
    }

    pub fn index(&self, u: Triple) -> usize {
        let p = self.p as usize;
        u.0 as usize + p * u.1 as usize + p * p * u.2 as usize
    }

    pub fn element(&self, i: usize) -> Triple {
        let p = self.p as usize;
        ((i % p) as u32, ((i / p) % p) as u32, (i / (p * p)) as u32)
    }

    pub fn elements(&self) -> impl Iterator<Item = Triple> + '_ {
        (0..self.order()).map(|i| self.element(i))
    }

    pub fn g(&self) -> Triple {
        (1, 0, 0)
    }
    pub fn h(&self) -> Triple {
        (0, 1, 0)
    }
    pub fn z(&self) -> Triple {
        (0, 0, 1)
    }

    /// `u v u^-1 v^-1`.
    pub fn commutator(&self, u: Triple, v: Triple) -> Triple {
        let uv = self.mul(u, v);
        self.mul(self.mul(uv, self.inverse(u)), self.inverse(v))
    }

    /// Exhaustive certification of the group axioms and the extraspecial shape.
    pub fn certify(&self) -> Result<()> {
        let p = self.p;
        let all: Vec<Triple> = self.elements().collect();
        let fail = |msg: String| Err(Error::BadParameter(format!("Heisenberg group check failed: {msg}")));
        for &u in &all {
            if self.mul(u, self.identity()) != u || self.mul(self.identity(), u) != u {
                return fail(format!("{u:?} identity law"));
            }
            if self.mul(u, self.inverse(u)) != self.identity() {
                return fail(format!("{u:?} inverse law"));
            }
            if self.pow(u, p) != self.identity() {
                return fail(format!("{u:?} does not have exponent {p}"));
            }
            for &v in &all {
                for &w in &all {
                    if self.mul(self.mul(u, v), w) != self.mul(u, self.mul(v, w)) {
                        return fail(format!("associativity at {u:?} {v:?} {w:?}"));
                    }
                }
            }
        }
        let mut distinct: Vec<usize> = all.iter().map(|&u| self.index(u)).collect();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() != self.order() {
            return fail("order is not p^3".into());
        }
        let center: Vec<Triple> =
            all.iter().copied().filter(|&u| all.iter().all(|&v| self.mul(u, v) == self.mul(v, u))).collect();
        if center.len() != p as usize || center.iter().any(|u| u.0 != 0 || u.1 != 0) {
            return fail(format!("center is {center:?}"));
        }
        if self.commutator(self.h(), self.g()) != self.z() {
            return fail("h g h^-1 g^-1 != z".into());
        }
        Ok(())
    }
}

/// The group algebra `kG` of the extraspecial group of order `p^3` and exponent `p`,
/// with basis `1` and `u - 1` for `u ≠ 1`. Named elements: `x1..xp` (`1 - g^i h`),
/// `x{p+1}` (`1 - g`), `y` (`1 - z`), and `g`, `h`, `z` as `u - 1`.
pub fn extraspecial_group_algebra(p: u32) -> Result<CatalogAlgebra> {
    if p == 2 {
        return Err(Error::BadParameter("the extraspecial family needs an odd prime".into()));
    }
    let f = FieldSpec::new(p)?;
    let grp = HeisenbergGroup::new(p);
    grp.certify()?;
    let d = grp.order();
    let names: Vec<String> = (0..d)
        .map(|i| {
            if i == 0 {
                return "1".to_string();
            }
            let (a, b, c) = grp.element(i);
            let mut s = String::new();
            for (sym, e) in [("g", a), ("h", b), ("z", c)] {
                match e {
                    0 => {}
                    1 => s.push_str(sym),
                    _ => s.push_str(&format!("{sym}^{e}")),
                }
            }
            format!("{s}-1")
        })
        .collect();
    // (u-1)(v-1) = (uv-1) - (u-1) - (v-1)
    let minus_one = f.neg(1);
    let mut table = vec![0u32; d * d * d];
    for i in 0..d {
        table[i * d + i] = 1;
        table[(i * d) * d + i] = 1;
    }
    for i in 1..d {
        for j in 1..d {
            let k = grp.index(grp.mul(grp.element(i), grp.element(j)));
            let cell = &mut table[(i * d + j) * d..(i * d + j + 1) * d];
            if k != 0 {
                cell[k] = f.add(cell[k], 1);
            }
            cell[i] = f.add(cell[i], minus_one);
            cell[j] = f.add(cell[j], minus_one);
        }
    }
    let gi = grp.index(grp.g());
    let hi = grp.index(grp.h());
    let algebra = Arc::new(validate_algebra(f, names, vec![gi, hi], table)?);
    let one_minus = |u: Triple| {
        let mut v = vec![0u32; d];
        let i = grp.index(u);
        if i != 0 {
            v[i] = minus_one;
        }
        v
    };
    let mut elements = Vec::new();
    for i in 1..=p {
        elements.push((format!("x{i}"), one_minus(grp.mul(grp.pow(grp.g(), i), grp.h()))));
    }
    elements.push((format!("x{}", p + 1), one_minus(grp.g())));
    elements.push(("y".to_string(), one_minus(grp.z())));
    for (name, u) in [("g", grp.g()), ("h", grp.h()), ("z", grp.z())] {
        elements.push((name.to_string(), algebra.basis_element(grp.index(u))));
    }
    Ok(CatalogAlgebra { name: format!("extraspecial:p={p}"), algebra, elements })
}
