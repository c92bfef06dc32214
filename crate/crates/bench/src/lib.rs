//! Fixtures shared by the engine benchmarks.

use stw_core::catalog::catalog_by_name;
use stw_core::twist::TwistContext;
use stw_core::Module;

/// A twist context over a catalog algebra with the simple module at hand.
pub struct Fixture {
    pub name: &'static str,
    pub ctx: TwistContext,
    pub simple: Module,
}

impl Fixture {
    /// Build from a catalog name; `y` is the element named `y` when requested.
    pub fn new(name: &'static str, x: &str, with_y: bool) -> Fixture {
        let c = catalog_by_name(name).expect("catalog name");
        let xv = c.element(x).expect("x element");
        let yv = with_y.then(|| c.element("y").expect("y element"));
        let ctx = TwistContext::new(c.algebra.clone(), &xv, yv.as_deref(), 0).expect("twist hypotheses");
        let simple = Module::simple(c.algebra.clone());
        Fixture { name, ctx, simple }
    }

    /// `T` with a free summand attached, so that stripping has work to do.
    pub fn padded_t(&self) -> Module {
        let reg = Module::regular(self.ctx.algebra().clone());
        Module::direct_sum(&[self.ctx.t(), &reg]).expect("same algebra")
    }
}

pub fn spherical_fixtures() -> Vec<Fixture> {
    vec![
        Fixture::new("dihedral:q=2:p=2", "x", false),
        Fixture::new("dihedral:q=3:p=2", "x", false),
        Fixture::new("semidihedral:q=3:p=2:delta=1", "x", false),
    ]
}

pub fn pn_fixtures() -> Vec<Fixture> {
    vec![Fixture::new("klein:p=5", "x", true), Fixture::new("extraspecial:p=3", "x3", true)]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_build() {
        for f in spherical_fixtures().iter().chain(pn_fixtures().iter()) {
            assert_eq!(f.simple.dim(), 1, "{}", f.name);
            assert_eq!(f.padded_t().core().dim(), f.ctx.t().dim());
        }
    }
}
