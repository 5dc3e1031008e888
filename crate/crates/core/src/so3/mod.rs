//! The irreducible SO(3) structure on R^5: the symmetric 3-tensor, the
//! adapted two-form basis E_1, E_2, E_3 of the so(3) module, torsion-type
//! classification, and the sigma_T four-form.

pub mod connection;
pub mod ni;

use crate::error::{Error, Result};
use crate::exterior::{KForm, Vector};
use crate::liealg::{index_pairs, LieAlgebraSpec};
use crate::linalg::Mat;
use crate::poly::Poly;
use crate::scalar::Scalar;
use serde::Serialize;

/// Fully symmetric 3-tensor with Scalar entries (dimension 5 or 8).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricTensor3 {
    pub dim: u8,
    data: Vec<Scalar>,
}

impl SymmetricTensor3 {
    pub fn zero(dim: u8) -> Self {
        let n = dim as usize;
        SymmetricTensor3 {
            dim,
            data: vec![Scalar::zero(); n * n * n],
        }
    }

    fn at(&self, i: u8, j: u8, k: u8) -> usize {
        let n = self.dim as usize;
        (i as usize - 1) * n * n + (j as usize - 1) * n + (k as usize - 1)
    }

    pub fn get(&self, i: u8, j: u8, k: u8) -> &Scalar {
        &self.data[self.at(i, j, k)]
    }

    /// Sets the component and all its permutations.
    pub fn set_sym(&mut self, i: u8, j: u8, k: u8, v: Scalar) {
        for (a, b, c) in [
            (i, j, k),
            (i, k, j),
            (j, i, k),
            (j, k, i),
            (k, i, j),
            (k, j, i),
        ] {
            let idx = self.at(a, b, c);
            self.data[idx] = v.clone();
        }
    }

    pub fn is_symmetric(&self) -> bool {
        for i in 1..=self.dim {
            for j in 1..=self.dim {
                for k in 1..=self.dim {
                    if self.get(i, j, k) != self.get(j, i, k) || self.get(i, j, k) != self.get(i, k, j) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Trace over the last two slots for each i.
    pub fn is_trace_free(&self) -> bool {
        for i in 1..=self.dim {
            let mut tr = Scalar::zero();
            for j in 1..=self.dim {
                tr += &self.get(i, j, j).clone();
            }
            if !tr.is_zero() {
                return false;
            }
        }
        true
    }

    pub fn eval(&self, x: &Vector, y: &Vector, z: &Vector) -> Scalar {
        let mut acc = Scalar::zero();
        for i in 1..=self.dim {
            let xi = x.get(i);
            if xi.is_zero() {
                continue;
            }
            for j in 1..=self.dim {
                let yj = y.get(j);
                if yj.is_zero() {
                    continue;
                }
                for k in 1..=self.dim {
                    let zk = z.get(k);
                    if zk.is_zero() {
                        continue;
                    }
                    acc += &(&(&(xi * yj) * zk) * self.get(i, j, k));
                }
            }
        }
        acc
    }

    /// T(X, X, X) as a polynomial in the frame coordinates.
    pub fn cubic_poly(&self) -> Poly {
        let n = self.dim as usize;
        let mut p = Poly::zero(n);
        for i in 1..=self.dim {
            for j in 1..=self.dim {
                for k in 1..=self.dim {
                    let c = self.get(i, j, k);
                    if c.is_zero() {
                        continue;
                    }
                    let mut exp = vec![0u8; n];
                    exp[i as usize - 1] += 1;
                    exp[j as usize - 1] += 1;
                    exp[k as usize - 1] += 1;
                    p.add_term(exp, c);
                }
            }
        }
        p
    }
}

/// The canonical structure tensor of the adapted frame.
pub fn canonical_t() -> SymmetricTensor3 {
    let mut t = SymmetricTensor3::zero(5);
    t.set_sym(1, 1, 1, Scalar::from_int(-1));
    t.set_sym(1, 2, 2, Scalar::one());
    t.set_sym(1, 4, 4, Scalar::one());
    t.set_sym(1, 3, 3, Scalar::from_ratio(-1, 2));
    t.set_sym(1, 5, 5, Scalar::from_ratio(-1, 2));
    t.set_sym(4, 3, 3, Scalar::sqrt3_times(-1, 2));
    t.set_sym(4, 5, 5, Scalar::sqrt3_times(1, 2));
    t.set_sym(2, 3, 5, Scalar::sqrt3_times(1, 2));
    t
}

/// X identified with a traceless symmetric 3x3 matrix.
pub fn matrix_rep5(x: &Vector) -> Mat {
    assert_eq!(x.dim(), 5);
    let r3inv = Scalar::sqrt3().inv().unwrap();
    let a = x.get(1) * &r3inv;
    let m = vec![
        vec![&a - x.get(4), x.get(2).clone(), x.get(3).clone()],
        vec![x.get(2).clone(), &a + x.get(4), x.get(5).clone()],
        vec![
            x.get(3).clone(),
            x.get(5).clone(),
            -(x.get(1) * &(Scalar::from_int(2) * &r3inv)),
        ],
    ];
    Mat::from_rows(m)
}

/// Verifies total symmetry, trace-freeness, and the cubic identity
/// (T_X)^2 X = g(X, X) X as a polynomial identity in the coordinates.
/// Returns the first violated axiom by name.
pub fn check_structure_axioms(t: &SymmetricTensor3) -> std::result::Result<(), &'static str> {
    if !t.is_symmetric() {
        return Err("symmetry");
    }
    if !t.is_trace_free() {
        return Err("trace");
    }
    let n = t.dim as usize;
    // components of T_X X: (T_X X)_k = sum_{i,j} t_{ijk} x_i x_j
    let txx: Vec<Poly> = (1..=t.dim)
        .map(|k| {
            let mut p = Poly::zero(n);
            for i in 1..=t.dim {
                for j in 1..=t.dim {
                    let c = t.get(i, j, k);
                    if c.is_zero() {
                        continue;
                    }
                    let mut exp = vec![0u8; n];
                    exp[i as usize - 1] += 1;
                    exp[j as usize - 1] += 1;
                    p.add_term(exp, c);
                }
            }
            p
        })
        .collect();
    // (T_X)^2 X component k: sum_{j} t_{?}: T_X(T_X X)_k = sum_{m,j} t_{mjk} x_m (T_X X)_j
    // g(X,X) x_k
    for k in 1..=t.dim {
        let mut lhs = Poly::zero(n);
        for m in 1..=t.dim {
            for j in 1..=t.dim {
                let c = t.get(m, j, k);
                if c.is_zero() {
                    continue;
                }
                let xm = Poly::var(n, m as usize - 1);
                let prod = &xm * &txx[j as usize - 1];
                lhs = &lhs + &prod.scale(c);
            }
        }
        let mut gxx = Poly::zero(n);
        for i in 0..n {
            let xi = Poly::var(n, i);
            gxx = &gxx + &(&xi * &xi);
        }
        let rhs = &gxx * &Poly::var(n, k as usize - 1);
        if !(&lhs - &rhs).is_zero() {
            return Err("cubic identity");
        }
    }
    Ok(())
}

/// The so(3) module basis in Lambda^2 R^5.
pub fn e_basis() -> [KForm; 3] {
    let mut e1 = KForm::term(5, &[1, 5], Scalar::sqrt3());
    e1.add_term(&[2, 3], &Scalar::one());
    e1.add_term(&[4, 5], &Scalar::one());
    let mut e2 = KForm::term(5, &[1, 3], Scalar::sqrt3());
    e2.add_term(&[2, 5], &Scalar::one());
    e2.add_term(&[3, 4], &Scalar::one());
    let mut e3 = KForm::term(5, &[2, 4], Scalar::from_int(2));
    e3.add_term(&[3, 5], &Scalar::one());
    [e1, e2, e3]
}

/// The E_i as skew endomorphism matrices (E_i)_{jk} = E_i(e_j, e_k) read
/// from the two-form, i.e. row j, column k.
pub fn e_matrix(e: &KForm) -> Mat {
    let mut m = Mat::zeros(5, 5);
    for j in 1..=5u8 {
        for k in 1..=5u8 {
            if j != k {
                m.data[j as usize - 1][k as usize - 1] = e.coeff(&[j, k]);
            }
        }
    }
    m
}

/// Endomorphism of Lambda^2 induced by the structure tensor:
/// That(e^i ^ e^k) = 4 sum_{j,l,m} t_{ijm} t_{klm} e^j ^ e^l.
pub fn t_hat(alpha: &KForm) -> KForm {
    assert_eq!(alpha.n, 5);
    assert_eq!(alpha.k, 2);
    let t = canonical_t();
    let four = Scalar::from_int(4);
    let mut out = KForm::zero(5, 2);
    for (idx, c) in &alpha.coeffs {
        let (i, k) = (idx[0], idx[1]);
        // antisymmetrized action on e^{ik} = e^i x e^k - e^k x e^i
        for j in 1..=5u8 {
            for l in 1..=5u8 {
                if j == l {
                    continue;
                }
                let mut acc = Scalar::zero();
                for m in 1..=5u8 {
                    acc += &(t.get(i, j, m) * t.get(k, l, m));
                    acc -= &(t.get(k, j, m) * t.get(i, l, m));
                }
                if acc.is_zero() {
                    continue;
                }
                // the i<->k antisymmetrization halves the doubled sum
                let coeff = &(&four * &acc) * &(c * &Scalar::from_ratio(1, 2));
                out.add_term(&[j, l], &coeff);
            }
        }
    }
    out
}

/// Invariant pairing <alpha, beta> = *(That(alpha) ^ *beta) on 2-forms.
pub fn pairing(alpha: &KForm, beta: &KForm) -> Scalar {
    let w = t_hat(alpha).wedge(&beta.hodge()).unwrap();
    let s = w.hodge();
    debug_assert_eq!(s.k, 0);
    s.coeff(&[])
}

/// Eigenvalue of That on span(E_1, E_2, E_3); computed, not assumed.
pub fn e_basis_eigenvalue() -> Result<Scalar> {
    let es = e_basis();
    let mut lambda: Option<Scalar> = None;
    for e in &es {
        let image = t_hat(e);
        // image = lambda * e required
        let (idx, c) = e.coeffs.iter().next().unwrap();
        let l = &image.coeff(idx) / c;
        if image != e.scale(&l) {
            return Err(Error::Internal("E_i is not a That eigenvector".into()));
        }
        match &lambda {
            None => lambda = Some(l),
            Some(prev) if *prev == l => {}
            _ => return Err(Error::Internal("E_i eigenvalues differ".into())),
        }
    }
    Ok(lambda.unwrap())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TorsionType {
    Zero,
    Pure3,
    Pure7,
    Generic,
}

/// Classifies *T against the so(3) module: Zero when T = 0; Pure7 when
/// T ^ E_i = 0 for all i; Pure3 when *T lies in span(E_1,E_2,E_3);
/// Generic otherwise. Cross-checked against orthogonality in the
/// invariant pairing.
pub fn torsion_type(t_form: &KForm) -> Result<TorsionType> {
    assert_eq!((t_form.n, t_form.k), (5, 3));
    if t_form.is_zero() {
        return Ok(TorsionType::Zero);
    }
    let es = e_basis();
    let wedge_pure7 = es
        .iter()
        .all(|e| t_form.wedge(e).unwrap().is_zero());
    let star_t = t_form.hodge();
    let pairing_orthogonal = es.iter().all(|e| pairing(&star_t, e).is_zero());
    if wedge_pure7 != pairing_orthogonal {
        return Err(Error::Internal(
            "pure-type tests disagree (wedge vs pairing)".into(),
        ));
    }
    if wedge_pure7 {
        return Ok(TorsionType::Pure7);
    }
    // exact rank test: is *T in the span of the three E_i?
    let pairs = index_pairs(5);
    let row = |f: &KForm| -> Vec<Scalar> { pairs.iter().map(|(i, j)| f.coeff(&[*i, *j])).collect() };
    let span = Mat::from_rows(es.iter().map(&row).collect());
    if span.row_space_contains(&row(&star_t)) {
        Ok(TorsionType::Pure3)
    } else {
        Ok(TorsionType::Generic)
    }
}

/// Calibration of sigma_T: the torsion convention nabla - T/2 flips the
/// sign of T relative to the torsion tensor of the connection, and
/// sigma_T must satisfy dT = 2 sigma_T whenever the torsion is parallel.
/// Calibrated once against the parallel-torsion catalog entries.
pub const SIGMA_CALIBRATION: (i64, i64) = (-1, 2);

/// sigma_T = c sum_i (e_i -| T) ^ (e_i -| T) with the stored calibration
/// constant c = -1/2.
pub fn sigma_t(t_form: &KForm) -> Result<KForm> {
    if t_form.k != 3 {
        return Err(Error::DegreeMismatch("sigma_T needs a 3-form".into()));
    }
    let mut acc = KForm::zero(t_form.n, 4);
    for i in 1..=t_form.n {
        let c = t_form.contract(&Vector::basis(t_form.n, i))?;
        acc = acc.add(&c.wedge(&c)?)?;
    }
    Ok(acc.scale(&Scalar::from_ratio(SIGMA_CALIBRATION.0, SIGMA_CALIBRATION.1)))
}

/// dT, d*T and harmonicity for a characteristic torsion form on a given
/// algebra.
pub fn exterior_derivatives(spec: &LieAlgebraSpec, t_form: &KForm) -> (KForm, KForm) {
    let dt = spec.d(t_form);
    let dstar = spec.d(&t_form.hodge());
    (dt, dstar)
}

pub fn is_harmonic(spec: &LieAlgebraSpec, t_form: &KForm) -> bool {
    let (dt, dstar) = exterior_derivatives(spec, t_form);
    dt.is_zero() && dstar.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn canonical_tensor_components() {
        let t = canonical_t();
        assert_eq!(*t.get(1, 1, 1), Scalar::from_int(-1));
        assert_eq!(*t.get(2, 3, 5), Scalar::sqrt3_times(1, 2));
        assert_eq!(*t.get(5, 3, 2), Scalar::sqrt3_times(1, 2));
        assert!(t.is_symmetric());
        assert!(t.is_trace_free());
    }

    #[test]
    fn canonical_axioms_hold() {
        assert_eq!(check_structure_axioms(&canonical_t()), Ok(()));
    }

    #[test]
    fn zero_tensor_fails_cubic_axiom() {
        assert_eq!(
            check_structure_axioms(&SymmetricTensor3::zero(5)),
            Err("cubic identity")
        );
    }

    #[test]
    fn perturbed_tensor_fails_cubic_axiom() {
        let mut t = canonical_t();
        t.set_sym(1, 1, 1, Scalar::from_int(-2));
        assert!(check_structure_axioms(&t).is_err());
    }

    #[test]
    fn matrix_rep_of_e1() {
        let m = matrix_rep5(&Vector::basis(5, 1));
        let r3inv = Scalar::sqrt3().inv().unwrap();
        assert_eq!(m.data[0][0], r3inv);
        assert_eq!(m.data[1][1], Scalar::sqrt3().inv().unwrap());
        assert_eq!(m.data[2][2], -(Scalar::from_int(2) * &r3inv));
        // T(e1,e1,e1) = -1 = (3 sqrt3 / 2) det
        let det = m.det();
        let c = Scalar::new(rat(0, 1), rat(3, 2));
        assert_eq!(&c * &det, Scalar::from_int(-1));
    }

    #[test]
    fn cubic_matches_determinant_symbolically() {
        // T(X,X,X) = (3 sqrt3/2) det(rep(X)) as a polynomial identity:
        // check on sufficiently many exact sample points to pin a cubic
        let t = canonical_t();
        let c = Scalar::new(rat(0, 1), rat(3, 2));
        let samples: Vec<Vec<i64>> = vec![
            vec![1, 0, 0, 0, 0],
            vec![0, 1, 0, 0, 0],
            vec![1, 2, 3, 4, 5],
            vec![-1, 1, 2, -3, 1],
            vec![2, -2, 1, 1, -1],
            vec![3, 1, -1, 2, 2],
            vec![1, 1, 1, 1, 1],
            vec![0, 2, -1, 3, -2],
            vec![5, -3, 2, -1, 4],
            vec![1, -1, 1, -1, 1],
        ];
        for s in samples {
            let x = Vector::from_components(s.iter().map(|&v| Scalar::from_int(v)).collect());
            let lhs = t.eval(&x, &x, &x);
            let rhs = &c * &matrix_rep5(&x).det();
            assert_eq!(lhs, rhs, "at {s:?}");
        }
    }

    #[test]
    fn e_basis_forms() {
        let [e1, _e2, e3] = e_basis();
        assert_eq!(e1.coeff(&[1, 5]), Scalar::sqrt3());
        assert_eq!(e1.coeff(&[2, 3]), Scalar::one());
        assert_eq!(e3.coeff(&[2, 4]), Scalar::from_int(2));
        // matrix form matches: (E1)_{51} = -sqrt3
        let m = e_matrix(&e1);
        assert_eq!(m.data[4][0], -Scalar::sqrt3());
    }

    #[test]
    fn e_basis_is_that_eigenspace() {
        assert_eq!(e_basis_eigenvalue().unwrap(), Scalar::from_int(7));
    }

    #[test]
    fn sigma_t_of_decomposable_form_vanishes() {
        // T = e1 ^ e24 decomposable
        let t_form = KForm::term(5, &[1, 2, 4], Scalar::from_int(3));
        assert!(sigma_t(&t_form).unwrap().is_zero());
    }

    #[test]
    fn sigma_t_nonzero_example() {
        // T = e1 ^ (e24 + e35): contraction with e1 squares to a nonzero
        // 4-form; with the stored calibration the e2345 coefficient is +1
        let mut t_form = KForm::term(5, &[1, 2, 4], Scalar::one());
        t_form.add_term(&[1, 3, 5], &Scalar::one());
        let s = sigma_t(&t_form).unwrap();
        assert!(!s.is_zero());
        assert_eq!(s.coeff(&[2, 3, 4, 5]), Scalar::one());
    }

    #[test]
    fn torsion_type_examples() {
        assert_eq!(torsion_type(&KForm::zero(5, 3)).unwrap(), TorsionType::Zero);
        // (-e2 + e4) ^ e35 is pure Lambda^2_7
        let mut t_form = KForm::term(5, &[2, 3, 5], -Scalar::one());
        t_form.add_term(&[4, 3, 5], &Scalar::one());
        assert_eq!(torsion_type(&t_form).unwrap(), TorsionType::Pure7);
        // *T = E3 means T = *E3 is pure Lambda^2_3
        let star_e3 = e_basis()[2].hodge();
        assert_eq!(torsion_type(&star_e3).unwrap(), TorsionType::Pure3);
        // a random mix is generic
        let mut g = KForm::term(5, &[1, 2, 3], Scalar::one());
        g.add_term(&[1, 4, 5], &Scalar::from_int(2));
        g.add_term(&[2, 4, 5], &Scalar::from_int(5));
        assert_eq!(torsion_type(&g).unwrap(), TorsionType::Generic);
    }
}
