//! Sparse multivariate polynomials with Scalar coefficients, used for the
//! symbolic expansions (near-integrability quartic, structure-tensor
//! identities, determinant comparisons).

use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

/// Monomial = exponent vector (fixed variable count per polynomial).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    pub vars: usize,
    pub terms: BTreeMap<Vec<u8>, Scalar>,
}

impl Poly {
    pub fn zero(vars: usize) -> Self {
        Poly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: usize, c: Scalar) -> Self {
        let mut p = Poly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars], c);
        }
        p
    }

    /// The variable x_i (0-based).
    pub fn var(vars: usize, i: usize) -> Self {
        assert!(i < vars);
        let mut exp = vec![0u8; vars];
        exp[i] = 1;
        let mut p = Poly::zero(vars);
        p.terms.insert(exp, Scalar::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exp: Vec<u8>, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.vars);
        }
        let mut p = Poly::zero(self.vars);
        for (e, k) in &self.terms {
            p.terms.insert(e.clone(), k * c);
        }
        p
    }

    pub fn eval(&self, xs: &[Scalar]) -> Scalar {
        assert_eq!(xs.len(), self.vars);
        let mut acc = Scalar::zero();
        for (e, c) in &self.terms {
            let mut m = c.clone();
            for (i, &p) in e.iter().enumerate() {
                for _ in 0..p {
                    m = &m * &xs[i];
                }
            }
            acc += &m;
        }
        acc
    }

    /// Coefficients of all nonzero terms, sorted by monomial.
    pub fn coefficients(&self) -> impl Iterator<Item = (&Vec<u8>, &Scalar)> {
        self.terms.iter()
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.vars, rhs.vars);
        let mut p = self.clone();
        for (e, c) in &rhs.terms {
            p.add_term(e.clone(), c);
        }
        p
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        assert_eq!(self.vars, rhs.vars);
        let mut p = self.clone();
        for (e, c) in &rhs.terms {
            p.add_term(e.clone(), &-c);
        }
        p
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.vars, rhs.vars);
        let mut p = Poly::zero(self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<u8> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                p.add_term(e, &(c1 * c2));
            }
        }
        p
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Scalar::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expand_square() {
        let n = 2;
        let x = Poly::var(n, 0);
        let y = Poly::var(n, 1);
        let s = &x + &y;
        let sq = &s * &s;
        // x^2 + 2xy + y^2
        assert_eq!(sq.terms.len(), 3);
        assert_eq!(sq.terms[&vec![1, 1]], Scalar::from_int(2));
        assert_eq!(sq.eval(&[Scalar::from_int(2), Scalar::from_int(3)]), Scalar::from_int(25));
    }

    #[test]
    fn cancellation_drops_terms() {
        let x = Poly::var(1, 0);
        let d = &x - &x;
        assert!(d.is_zero());
    }
}
