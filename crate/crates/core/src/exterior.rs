//! Exterior algebra of R^n (n <= 8) with Scalar coefficients in an
//! orthonormal oriented frame. Multi-indices are strictly increasing and
//! forms are kept canonical: no stored zero coefficients, keys sorted
//! lexicographically, sign normalization at construction.

use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::fmt;

/// Strictly increasing sequence of frame indices in 1..=n.
pub type MultiIndex = Vec<u8>;

/// Sort an index word and return the permutation parity (+1/-1), or None
/// when an index repeats.
pub fn sort_indices(word: &[u8]) -> Option<(MultiIndex, i32)> {
    let mut idx = word.to_vec();
    let mut sign = 1i32;
    // insertion sort, counting transpositions
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some((idx, sign))
    }
}

/// Parity of the shuffle merging two disjoint increasing words (number of
/// pairs (i, j) with i in `a`, j in `b`, j < i).
fn merge_sign(a: &[u8], b: &[u8]) -> (MultiIndex, i32) {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut inversions = 0usize;
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] < b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            // b[j] jumps over the remaining entries of a
            inversions += a.len() - i;
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    (out, if inversions % 2 == 0 { 1 } else { -1 })
}

/// Vector of R^n in the adapted frame.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vector {
    pub components: Vec<Scalar>,
}

impl Vector {
    pub fn zero(n: u8) -> Self {
        Vector {
            components: vec![Scalar::zero(); n as usize],
        }
    }

    /// Basis vector e_i, 1-based.
    pub fn basis(n: u8, i: u8) -> Self {
        assert!(1 <= i && i <= n);
        let mut v = Vector::zero(n);
        v.components[i as usize - 1] = Scalar::one();
        v
    }

    pub fn from_components(components: Vec<Scalar>) -> Self {
        Vector { components }
    }

    pub fn dim(&self) -> u8 {
        self.components.len() as u8
    }

    pub fn get(&self, i: u8) -> &Scalar {
        &self.components[i as usize - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &Vector) -> Vector {
        assert_eq!(self.dim(), other.dim());
        Vector {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector {
            components: self.components.iter().map(|a| a * c).collect(),
        }
    }

    /// Euclidean inner product in the orthonormal frame.
    pub fn dot(&self, other: &Vector) -> Scalar {
        assert_eq!(self.dim(), other.dim());
        let mut acc = Scalar::zero();
        for (a, b) in self.components.iter().zip(&other.components) {
            acc += &(a * b);
        }
        acc
    }
}

/// Alternating k-form on R^n.
#[derive(Clone, PartialEq, Eq)]
pub struct KForm {
    pub n: u8,
    pub k: u8,
    pub coeffs: BTreeMap<MultiIndex, Scalar>,
}

impl KForm {
    pub fn zero(n: u8, k: u8) -> Self {
        KForm {
            n,
            k,
            coeffs: BTreeMap::new(),
        }
    }

    /// c * e^{word}; the word is sorted with sign normalization.
    pub fn term(n: u8, word: &[u8], c: Scalar) -> Self {
        let mut f = KForm::zero(n, word.len() as u8);
        f.add_term(word, &c);
        f
    }

    /// Basis covector e^i.
    pub fn basis_one_form(n: u8, i: u8) -> Self {
        KForm::term(n, &[i], Scalar::one())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, word: &[u8], c: &Scalar) {
        if c.is_zero() {
            return;
        }
        assert!(word.iter().all(|&i| 1 <= i && i <= self.n));
        assert_eq!(word.len(), self.k as usize);
        let Some((idx, sign)) = sort_indices(word) else {
            return;
        };
        let signed = if sign < 0 { -c } else { c.clone() };
        match self.coeffs.entry(idx) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(signed);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &signed;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn coeff(&self, word: &[u8]) -> Scalar {
        match sort_indices(word) {
            None => Scalar::zero(),
            Some((idx, sign)) => {
                let c = self.coeffs.get(&idx).cloned().unwrap_or_else(Scalar::zero);
                if sign < 0 {
                    -c
                } else {
                    c
                }
            }
        }
    }

    pub fn add(&self, other: &KForm) -> Result<KForm> {
        if self.n != other.n || self.k != other.k {
            return Err(Error::DegreeMismatch(format!(
                "add: ({},{}) vs ({},{})",
                self.n, self.k, other.n, other.k
            )));
        }
        let mut out = self.clone();
        for (idx, c) in &other.coeffs {
            out.add_term(idx, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &KForm) -> Result<KForm> {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> KForm {
        let mut out = KForm::zero(self.n, self.k);
        if c.is_zero() {
            return out;
        }
        for (idx, k) in &self.coeffs {
            out.coeffs.insert(idx.clone(), k * c);
        }
        out
    }

    /// Wedge product, graded anticommutative.
    pub fn wedge(&self, other: &KForm) -> Result<KForm> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!(
                "wedge: n = {} vs {}",
                self.n, other.n
            )));
        }
        let k = self.k + other.k;
        if k > self.n {
            return Ok(KForm::zero(self.n, k.min(self.n + 1)));
        }
        let mut out = KForm::zero(self.n, k);
        for (i1, c1) in &self.coeffs {
            for (i2, c2) in &other.coeffs {
                if i1.iter().any(|x| i2.contains(x)) {
                    continue;
                }
                let (merged, sign) = merge_sign(i1, i2);
                let mut c = c1 * c2;
                if sign < 0 {
                    c = -c;
                }
                if let Some(existing) = out.coeffs.get_mut(&merged) {
                    *existing += &c;
                    if existing.is_zero() {
                        out.coeffs.remove(&merged);
                    }
                } else if !c.is_zero() {
                    out.coeffs.insert(merged, c);
                }
            }
        }
        Ok(out)
    }

    /// Hodge star for the orientation e^{1...n}: *(e^I) = s e^J with J the
    /// complement of I and s such that e^I ^ *(e^I) = e^{1...n}.
    pub fn hodge(&self) -> KForm {
        let mut out = KForm::zero(self.n, self.n - self.k);
        for (idx, c) in &self.coeffs {
            let complement: MultiIndex = (1..=self.n).filter(|i| !idx.contains(i)).collect();
            let (_, sign) = merge_sign(idx, &complement);
            let coeff = if sign < 0 { -c } else { c.clone() };
            if let Some(existing) = out.coeffs.get_mut(&complement) {
                *existing += &coeff;
            } else {
                out.coeffs.insert(complement, coeff);
            }
        }
        out.coeffs.retain(|_, c| !c.is_zero());
        out
    }

    /// Interior product x -| u with (x -| u)(Y...) = u(x, Y...).
    pub fn contract(&self, x: &Vector) -> Result<KForm> {
        if x.dim() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "contract: n = {} vs {}",
                self.n,
                x.dim()
            )));
        }
        if self.k == 0 {
            return Ok(KForm::zero(self.n, 0));
        }
        let mut out = KForm::zero(self.n, self.k - 1);
        for (idx, c) in &self.coeffs {
            for (pos, &i) in idx.iter().enumerate() {
                let xi = x.get(i);
                if xi.is_zero() {
                    continue;
                }
                let mut rest: MultiIndex = idx.clone();
                rest.remove(pos);
                let mut coeff = c * xi;
                if pos % 2 == 1 {
                    coeff = -coeff;
                }
                out.add_term(&rest, &coeff);
            }
        }
        Ok(out)
    }

    /// Full alternating evaluation u(x_1, ..., x_k).
    pub fn evaluate(&self, xs: &[Vector]) -> Result<Scalar> {
        if xs.len() != self.k as usize {
            return Err(Error::DegreeMismatch(format!(
                "evaluate: degree {} form applied to {} vectors",
                self.k,
                xs.len()
            )));
        }
        if xs.iter().any(|x| x.dim() != self.n) {
            return Err(Error::DimensionMismatch("evaluate: vector dimension".into()));
        }
        let mut acc = Scalar::zero();
        for (idx, c) in &self.coeffs {
            // det of [ e^{i_r}(x_s) ]_{r,s}
            let m = Mat::from_rows(
                idx.iter()
                    .map(|&i| xs.iter().map(|x| x.get(i).clone()).collect())
                    .collect(),
            );
            acc += &(c * &m.det());
        }
        Ok(acc)
    }

    /// Degree-1 forms viewed as covectors.
    pub fn as_covector(&self) -> Vec<Scalar> {
        assert_eq!(self.k, 1);
        (1..=self.n).map(|i| self.coeff(&[i])).collect()
    }
}

impl fmt::Display for KForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .map(|(idx, c)| {
                if idx.is_empty() {
                    format!("{c}")
                } else {
                    let list: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
                    format!("{}*e{{{}}}", c, list.join(","))
                }
            })
            .collect();
        write!(f, "{}", terms.join("+"))
    }
}

impl fmt::Debug for KForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
