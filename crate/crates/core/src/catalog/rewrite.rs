use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactla::FieldSpec;

/// Normal-form monomials in `x, y` for the dihedral (`delta = None`) and
/// semidihedral (`delta = Some(δ)`) algebras with parameter `q`.
///
/// Basis: `1`, then for each length `1..2q` the two alternating words
/// (x-first, then y-first), then the socle word `(yx)^q`.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    field: FieldSpec,
    q: usize,
    delta: Option<u32>,
    words: Vec<String>,
}

fn alternating(first: char, len: usize) -> String {
    let other = if first == 'x' { 'y' } else { 'x' };
    (0..len).map(|i| if i % 2 == 0 { first } else { other }).collect()
}

impl MonomialBasis {
    pub fn new(field: FieldSpec, q: usize, delta: Option<u32>) -> Self {
        let mut words = vec![String::new()];
        for len in 1..2 * q {
            words.push(alternating('x', len));
            words.push(alternating('y', len));
        }
        words.push(alternating('y', 2 * q));
        MonomialBasis { field, q, delta, words }
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn words(&self) -> &[String] {
        &self.words
    }

    pub fn names(&self) -> Vec<String> {
        self.words.iter().map(|w| if w.is_empty() { "1".to_string() } else { w.clone() }).collect()
    }

    pub fn index(&self, word: &str) -> Option<usize> {
        let w = if word == "1" { "" } else { word };
        self.words.iter().position(|v| v == w)
    }

    /// Reduce an arbitrary word to a combination of basis words.
    pub fn reduce(&self, word: &str) -> Result<BTreeMap<usize, u32>> {
        let f = self.field;
        let q = self.q;
        let cap = 8 * q;
        let mut steps = 0;
        let mut out: BTreeMap<usize, u32> = BTreeMap::new();
        let mut work: Vec<(String, u32)> = vec![(word.to_string(), 1)];
        while let Some((w, c)) = work.pop() {
            if c == 0 || w.len() > 2 * q || w.contains("xx") {
                continue;
            }
            if let Some(pos) = w.find("yy") {
                let Some(delta) = self.delta else { continue };
                steps += 1;
                if steps > cap {
                    return Err(Error::RewriteDiverged { steps: cap });
                }
                let (head, tail) = (&w[..pos], &w[pos + 2..]);
                let first = format!("{head}{}{tail}", alternating('x', 2 * q - 1));
                work.push((first, c));
                if delta != 0 {
                    let second = format!("{head}{}{tail}", alternating('y', 2 * q));
                    work.push((second, f.mul(c, delta)));
                }
                continue;
            }
            let normal = if w.len() == 2 * q { alternating('y', 2 * q) } else { w };
            let idx = self.index(&normal).expect("alternating word of admissible length");
            let e = out.entry(idx).or_insert(0);
            *e = f.add(*e, c);
        }
        out.retain(|_, c| *c != 0);
        Ok(out)
    }

    /// Structure constants by concatenating and reducing basis words.
    pub fn table(&self) -> Result<Vec<u32>> {
        let d = self.dim();
        let mut table = vec![0u32; d * d * d];
        for i in 0..d {
            for j in 0..d {
                let word = format!("{}{}", self.words[i], self.words[j]);
                for (k, c) in self.reduce(&word)? {
                    table[(i * d + j) * d + k] = c;
                }
            }
        }
        Ok(table)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_basis_layout() {
        let b = MonomialBasis::new(FieldSpec::new(2).unwrap(), 2, None);
        assert_eq!(b.names(), ["1", "x", "y", "xy", "yx", "xyx", "yxy", "yxyx"]);
        assert_eq!(b.reduce("xyxy").unwrap(), BTreeMap::from([(7, 1)]));
        assert!(b.reduce("xyxyx").unwrap().is_empty());
        assert!(b.reduce("yy").unwrap().is_empty());
    }

    #[test]
    fn semidihedral_square_of_y() {
        let b = MonomialBasis::new(FieldSpec::new(3).unwrap(), 2, Some(2));
        let yy = b.reduce("yy").unwrap();
        assert_eq!(yy, BTreeMap::from([(b.index("xyx").unwrap(), 1), (b.index("yxyx").unwrap(), 2)]));
        assert!(b.reduce("yyyy").unwrap().is_empty());
    }
}
