use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactla::Mat;
use crate::module::Module;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    X,
    XInv,
    Y,
    YInv,
}

impl Letter {
    fn base(self) -> char {
        match self {
            Letter::X | Letter::XInv => 'x',
            Letter::Y | Letter::YInv => 'y',
        }
    }
    fn direct(self) -> bool {
        matches!(self, Letter::X | Letter::Y)
    }
}

/// A walk in the arrows `x, y` and their formal inverses.
///
/// Written with lowercase letters for arrows and uppercase for inverses,
/// so `xYXY` is `x y^-1 x^-1 y^-1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct StringWord {
    pub letters: Vec<Letter>,
}

impl StringWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        StringWord { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `x (y^-1 x^-1)^(q-1) y^-1`, the word `x (xy)^(1-q) y^-1`.
    pub fn twisted_simple(q: usize) -> Self {
        let mut letters = vec![Letter::X];
        for _ in 1..q {
            letters.extend([Letter::YInv, Letter::XInv]);
        }
        letters.push(Letter::YInv);
        StringWord { letters }
    }

    /// Reject walks that use a zero relation, retrace an arrow, or run past the socle.
    pub fn check(&self, q: usize) -> Result<()> {
        let mut run = 0;
        for (i, pair) in self.letters.windows(2).enumerate() {
            let (a, b) = (pair[0], pair[1]);
            if a.base() == b.base() {
                let what = if a.direct() == b.direct() { "repeats a letter" } else { "retraces a letter" };
                return Err(Error::InvalidWord(format!("{self} {what} at position {}", i + 1)));
            }
        }
        let mut last_direct = None;
        for l in &self.letters {
            run = if last_direct == Some(l.direct()) { run + 1 } else { 1 };
            last_direct = Some(l.direct());
            if run >= 2 * q {
                return Err(Error::InvalidWord(format!("{self} contains a path of length {run}")));
            }
        }
        Ok(())
    }
}

impl fmt::Display for StringWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            let c = match l {
                Letter::X => 'x',
                Letter::XInv => 'X',
                Letter::Y => 'y',
                Letter::YInv => 'Y',
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for StringWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                'x' => Ok(Letter::X),
                'X' => Ok(Letter::XInv),
                'y' => Ok(Letter::Y),
                'Y' => Ok(Letter::YInv),
                other => Err(Error::InvalidWord(format!("unknown letter {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(StringWord { letters })
    }
}

/// The string module of a word over a dihedral or semidihedral algebra.
///
/// Basis `v_0..v_n`; letter `i` joins `v_{i-1}` and `v_i`. A direct letter
/// acts `v_i -> v_{i-1}`, an inverse letter acts `v_{i-1} -> v_i`.
pub fn string_module(algebra: &Arc<Algebra>, word: &StringWord) -> Result<Module> {
    let x = algebra.index_of("x");
    let y = algebra.index_of("y");
    let (Some(x), Some(y)) = (x, y) else {
        return Err(Error::InvalidWord("algebra has no basis elements named x and y".into()));
    };
    if algebra.generators() != [x, y] {
        return Err(Error::InvalidWord("algebra is not generated by x and y".into()));
    }
    let q = algebra.dim() / 4;
    word.check(q)?;
    let f = algebra.field();
    let n = word.len() + 1;
    let mut gx = Mat::zeros(f, n, n);
    let mut gy = Mat::zeros(f, n, n);
    for (pos, &l) in word.letters.iter().enumerate() {
        let i = pos + 1;
        let target = if l.base() == 'x' { &mut gx } else { &mut gy };
        if l.direct() {
            target.set(i, i - 1, 1);
        } else {
            target.set(i - 1, i, 1);
        }
    }
    Module::from_generator_action(algebra.clone(), vec![gx, gy])
        .map_err(|e| Error::InvalidWord(format!("{word} does not define a module: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::dihedral_algebra;

    #[test]
    fn parse_and_display_round_trip() {
        let w: StringWord = "xYXY".parse().unwrap();
        assert_eq!(w, StringWord::twisted_simple(2));
        assert_eq!(w.to_string(), "xYXY");
    }

    #[test]
    fn simple_and_invalid_words() {
        let a = dihedral_algebra(2, 2).unwrap().algebra;
        let k = string_module(&a, &StringWord::default()).unwrap();
        assert_eq!(k, Module::simple(a.clone()));
        assert!(matches!(string_module(&a, &"xx".parse().unwrap()), Err(Error::InvalidWord(_))));
        assert!(matches!(string_module(&a, &"xX".parse().unwrap()), Err(Error::InvalidWord(_))));
        let m = string_module(&a, &StringWord::twisted_simple(2)).unwrap();
        assert_eq!(m.dim(), 5);
    }
}
