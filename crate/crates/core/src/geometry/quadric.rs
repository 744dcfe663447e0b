//! The elliptic quadric of PG(5,q) and its generalized quadrangle GQ(q,q²).

use std::collections::{BTreeSet, HashMap};

use crate::error::Result;

use super::field::Field;
use super::incidence::IncidenceStructure;

/// The form `x0x1 + x2x3 + x4² + x4x5 + a·x5²` over GF(q), with `a` the
/// smallest element making the binary part anisotropic.
#[derive(Clone, Copy, Debug)]
pub struct EllipticForm {
    pub field: Field,
    pub a: u8,
}

impl EllipticForm {
    pub fn new(q: usize) -> Result<Self> {
        let field = Field::new(q)?;
        let a = field
            .elements()
            .find(|&a| field.elements().all(|z| field.add(field.add(field.mul(z, z), z), a) != 0))
            .expect("every finite field has an irreducible quadratic z² + z + a");
        Ok(EllipticForm { field, a })
    }

    /// `y² + yz + a·z²`.
    pub fn binary(&self, y: u8, z: u8) -> u8 {
        let f = self.field;
        f.add(f.add(f.mul(y, y), f.mul(y, z)), f.mul(self.a, f.mul(z, z)))
    }

    pub fn eval(&self, x: &[u8; 6]) -> u8 {
        let f = self.field;
        f.add(f.add(f.mul(x[0], x[1]), f.mul(x[2], x[3])), self.binary(x[4], x[5]))
    }

    /// The associated bilinear form `Q(x+y) - Q(x) - Q(y)`.
    pub fn polar(&self, x: &[u8; 6], y: &[u8; 6]) -> u8 {
        let f = self.field;
        let mut s = [0u8; 6];
        for i in 0..6 {
            s[i] = f.add(x[i], y[i]);
        }
        f.sub(f.sub(self.eval(&s), self.eval(x)), self.eval(y))
    }
}

/// Scales `x` so that its first non-zero coordinate is 1.
fn normalize(f: Field, x: &[u8; 6]) -> [u8; 6] {
    let lead = x.iter().copied().find(|&c| c != 0).expect("non-zero vector");
    let inv = f.inv(lead).expect("non-zero");
    x.map(|c| f.mul(c, inv))
}

/// Normalised singular points of the form, in lexicographic order.
pub fn singular_points(form: &EllipticForm) -> Vec<[u8; 6]> {
    let q = form.field.order() as u32;
    let mut out = Vec::new();
    for code in 1..q.pow(6) {
        let mut x = [0u8; 6];
        let mut c = code;
        for i in (0..6).rev() {
            x[i] = (c % q) as u8;
            c /= q;
        }
        if x.iter().copied().find(|&c| c != 0) == Some(1) && form.eval(&x) == 0 {
            out.push(x);
        }
    }
    out
}

/// GQ(q, q²): singular points of the elliptic quadric with its totally singular lines.
pub fn elliptic_quadric_gq(q: usize) -> Result<IncidenceStructure> {
    let form = EllipticForm::new(q)?;
    let f = form.field;
    let points = singular_points(&form);
    let index: HashMap<[u8; 6], usize> = points.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    let mut lines: BTreeSet<Vec<usize>> = BTreeSet::new();
    for (i, p) in points.iter().enumerate() {
        for (j, r) in points.iter().enumerate().skip(i + 1) {
            if form.polar(p, r) != 0 {
                continue;
            }
            let mut line = vec![i, j];
            for lambda in f.elements().skip(1) {
                let mut x = [0u8; 6];
                for c in 0..6 {
                    x[c] = f.add(p[c], f.mul(lambda, r[c]));
                }
                line.push(index[&normalize(f, &x)]);
            }
            line.sort_unstable();
            line.dedup();
            lines.insert(line);
        }
    }
    IncidenceStructure::new(points.len(), lines.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binary_part_is_anisotropic() {
        for (q, a) in [(2, 1), (3, 2), (4, 2)] {
            let form = EllipticForm::new(q).unwrap();
            assert_eq!(form.a, a);
            for y in form.field.elements() {
                for z in form.field.elements() {
                    assert_eq!(form.binary(y, z) == 0, y == 0 && z == 0);
                }
            }
        }
    }

    #[test]
    fn point_counts() {
        for (q, count) in [(2, 27), (3, 112), (4, 325)] {
            assert_eq!(singular_points(&EllipticForm::new(q).unwrap()).len(), count);
        }
    }

    #[test]
    fn gq_2_4_lines() {
        let gq = elliptic_quadric_gq(2).unwrap();
        assert_eq!(gq.point_count(), 27);
        assert_eq!(gq.lines().len(), 45);
        assert!(gq.lines().iter().all(|l| l.len() == 3));
    }
}
