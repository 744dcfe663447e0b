//! The fields GF(2), GF(3) and GF(4).
//!
//! Elements are `0..q`. GF(4) elements are `a + b·x` encoded as `a | b << 1`
//! with `x² = x + 1`.

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Field {
    q: u8,
}

const GF4_MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];

impl Field {
    pub fn new(q: usize) -> Result<Self> {
        match q {
            2..=4 => Ok(Field { q: q as u8 }),
            _ => Err(Error::OutOfRange(format!("only GF(2), GF(3) and GF(4) are supported, got q = {q}"))),
        }
    }

    pub fn order(self) -> usize {
        self.q as usize
    }

    pub fn elements(self) -> impl Iterator<Item = u8> {
        0..self.q
    }

    pub fn add(self, a: u8, b: u8) -> u8 {
        match self.q {
            3 => (a + b) % 3,
            _ => a ^ b,
        }
    }

    pub fn neg(self, a: u8) -> u8 {
        match self.q {
            3 => (3 - a) % 3,
            _ => a,
        }
    }

    pub fn sub(self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    pub fn mul(self, a: u8, b: u8) -> u8 {
        match self.q {
            2 => a & b,
            3 => (a * b) % 3,
            _ => GF4_MUL[a as usize][b as usize],
        }
    }

    pub fn inv(self, a: u8) -> Option<u8> {
        (a != 0).then(|| self.elements().find(|&b| self.mul(a, b) == 1).expect("fields have inverses"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms() {
        for q in 2..=4 {
            let f = Field::new(q).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements() {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                    }
                }
            }
        }
        assert!(Field::new(5).is_err());
    }
}
