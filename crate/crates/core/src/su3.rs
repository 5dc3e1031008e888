//! The 8-dimensional nearly integrable SU(3) layer on the product of a
//! 5-dimensional group with R^3 or SO(3), plus the hypo-SU(2) and
//! half-flat checks in dimensions 5 and 6.

use crate::error::{Error, Result};
use crate::exterior::{KForm, Vector};
use crate::liealg::LieAlgebraSpec;
use crate::linalg::Mat;
use crate::poly::Poly;
use crate::riemann::koszul_connection;
use crate::scalar::Scalar;
use crate::so3::ni::is_ni;
use crate::so3::{canonical_t, e_basis, e_matrix, SymmetricTensor3};
use serde::{Deserialize, Serialize};

/// Structure tensor of the 8-dimensional extension: restricts to the
/// 5-dimensional one and adds the components mixing the factor
/// directions.
pub fn canonical_t8() -> SymmetricTensor3 {
    let five = canonical_t();
    let mut t = SymmetricTensor3::zero(8);
    for i in 1..=5u8 {
        for j in i..=5u8 {
            for k in j..=5u8 {
                let v = five.get(i, j, k);
                if !v.is_zero() {
                    t.set_sym(i, j, k, v.clone());
                }
            }
        }
    }
    t.set_sym(1, 6, 6, Scalar::from_ratio(-1, 2));
    t.set_sym(1, 7, 7, Scalar::from_ratio(-1, 2));
    t.set_sym(1, 8, 8, Scalar::one());
    t.set_sym(4, 6, 6, Scalar::sqrt3_times(1, 2));
    t.set_sym(4, 7, 7, Scalar::sqrt3_times(-1, 2));
    t.set_sym(2, 6, 7, Scalar::sqrt3_times(1, 2));
    t.set_sym(3, 6, 8, Scalar::sqrt3_times(-1, 2));
    t.set_sym(5, 7, 8, Scalar::sqrt3_times(1, 2));
    t
}

/// Complex polynomial as (real, imaginary) parts.
#[derive(Clone)]
struct CPoly(Poly, Poly);

impl CPoly {
    fn mul(&self, other: &CPoly) -> CPoly {
        CPoly(
            &(&self.0 * &other.0) - &(&self.1 * &other.1),
            &(&self.0 * &other.1) + &(&self.1 * &other.0),
        )
    }

    fn add(&self, other: &CPoly) -> CPoly {
        CPoly(&self.0 + &other.0, &self.1 + &other.1)
    }

    fn sub(&self, other: &CPoly) -> CPoly {
        CPoly(&self.0 - &other.0, &self.1 - &other.1)
    }
}

/// The 3x3 Hermitian traceless matrix of the identification of R^8, with
/// entries linear in the coordinates (symbolically).
fn rep8_symbolic() -> Vec<Vec<CPoly>> {
    let n = 8usize;
    let x = |i: usize| Poly::var(n, i - 1);
    let zero = || Poly::zero(n);
    let r3 = Scalar::sqrt3();
    let c = |re: Poly, im: Poly| CPoly(re, im);
    vec![
        vec![
            c(&x(1) - &x(4).scale(&r3), zero()),
            c(x(2).scale(&r3), x(8).scale(&r3)),
            c(x(3).scale(&r3), x(7).scale(&r3)),
        ],
        vec![
            c(x(2).scale(&r3), x(8).scale(&-&r3)),
            c(&x(1) + &x(4).scale(&r3), zero()),
            c(x(5).scale(&r3), x(6).scale(&r3)),
        ],
        vec![
            c(x(3).scale(&r3), x(7).scale(&-&r3)),
            c(x(5).scale(&r3), x(6).scale(&-&r3)),
            c(x(1).scale(&Scalar::from_int(-2)), zero()),
        ],
    ]
}

fn det3(m: &[Vec<CPoly>]) -> CPoly {
    let minor = |a: &CPoly, b: &CPoly, c: &CPoly, d: &CPoly| a.mul(d).sub(&b.mul(c));
    let m00 = minor(&m[1][1], &m[1][2], &m[2][1], &m[2][2]);
    let m01 = minor(&m[1][0], &m[1][2], &m[2][0], &m[2][2]);
    let m02 = minor(&m[1][0], &m[1][1], &m[2][0], &m[2][1]);
    m[0][0]
        .mul(&m00)
        .sub(&m[0][1].mul(&m01))
        .add(&m[0][2].mul(&m02))
}

/// Matrix of a concrete 8-vector, as (real, imaginary) Scalar pairs.
pub fn matrix_rep8(x: &Vector) -> Vec<Vec<(Scalar, Scalar)>> {
    assert_eq!(x.dim(), 8);
    let sym = rep8_symbolic();
    let xs = &x.components;
    sym.iter()
        .map(|row| {
            row.iter()
                .map(|CPoly(re, im)| (re.eval(xs), im.eval(xs)))
                .collect()
        })
        .collect()
}

/// det of the matrix of a concrete 8-vector; the imaginary part vanishes
/// identically for Hermitian input.
pub fn det_rep8(x: &Vector) -> Scalar {
    let sym = rep8_symbolic();
    let CPoly(re, im) = det3(&sym);
    debug_assert!(im.eval(&x.components).is_zero());
    re.eval(&x.components)
}

/// Residual of the cubic identity: T8(X,X,X) - (1/2) det(rep8(X)) as a
/// polynomial in 8 variables. Empty iff the identity holds.
pub fn cubic_det_residual() -> Poly {
    let t = canonical_t8();
    let cubic = t.cubic_poly();
    let CPoly(re, im) = det3(&rep8_symbolic());
    assert!(im.is_zero(), "determinant of a Hermitian matrix is real");
    &cubic - &re.scale(&Scalar::from_ratio(1, 2))
}

/// psi = E_1 ^ e6 + E_2 ^ e7 + E_3 ^ e8 + e678 on R^8.
pub fn psi() -> KForm {
    let lift = |f: &KForm| lift_form(f, 8);
    let [e1, e2, e3] = e_basis();
    let mut out = lift(&e1)
        .wedge(&KForm::basis_one_form(8, 6))
        .unwrap();
    out = out
        .add(&lift(&e2).wedge(&KForm::basis_one_form(8, 7)).unwrap())
        .unwrap();
    out = out
        .add(&lift(&e3).wedge(&KForm::basis_one_form(8, 8)).unwrap())
        .unwrap();
    out.add_term(&[6, 7, 8], &Scalar::one());
    out
}

/// Reinterprets a form on R^m inside R^n (n >= m), keeping coefficients.
pub fn lift_form(f: &KForm, n: u8) -> KForm {
    assert!(n >= f.n);
    let mut out = KForm::zero(n, f.k);
    for (idx, c) in &f.coeffs {
        out.add_term(idx, c);
    }
    out
}

/// Derivation action of a matrix A on a form: A e^i = -sum_j A_{ij} e^j,
/// extended as a derivation of the exterior algebra.
pub fn act_on_form(a: &Mat, u: &KForm) -> KForm {
    let n = u.n;
    assert_eq!(a.rows as u8, n);
    let mut out = KForm::zero(n, u.k);
    for (idx, c) in &u.coeffs {
        for (pos, &i) in idx.iter().enumerate() {
            for j in 1..=n {
                let aij = &a.data[i as usize - 1][j as usize - 1];
                if aij.is_zero() {
                    continue;
                }
                let mut word = idx.clone();
                word[pos] = j;
                out.add_term(&word, &-(c * aij));
            }
        }
    }
    out
}

/// The diagonal so(3) generators of the adapted action on R^8: the E_i
/// matrices on the first five coordinates extended by rotation generators
/// on the factor directions. The factor blocks are the unique ones making
/// the generators annihilate psi; they close like the E_i themselves
/// ([E1, E2] = E3 cyclically).
pub fn diagonal_so3_generators() -> [Mat; 3] {
    let es = e_basis();
    let mut out = Vec::new();
    let k = |a: usize, b: usize, c: i64| -> Mat {
        let mut m = Mat::zeros(3, 3);
        m.data[a][b] = Scalar::from_int(c);
        m.data[b][a] = Scalar::from_int(-c);
        m
    };
    let factors = [
        k(1, 2, -1), // with E1: rotation in (e7, e8)
        k(0, 2, 1),  // with E2: rotation in (e6, e8)
        k(0, 1, -1), // with E3: rotation in (e6, e7)
    ];
    for (e, kf) in es.iter().zip(factors) {
        let em = e_matrix(e);
        let mut m = Mat::zeros(8, 8);
        for i in 0..5 {
            for j in 0..5 {
                m.data[i][j] = em.data[i][j].clone();
            }
        }
        for i in 0..3 {
            for j in 0..3 {
                m.data[5 + i][5 + j] = kf.data[i][j].clone();
            }
        }
        out.push(m);
    }
    out.try_into().unwrap()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Factor {
    Abelian3,
    So3,
}

/// Product of a 5-dimensional algebra with R^3 or so(3), with the block
/// metric.
#[derive(Clone, Debug)]
pub struct ProductSpec {
    pub base: LieAlgebraSpec,
    pub factor: Factor,
}

impl ProductSpec {
    pub fn new(base: LieAlgebraSpec, factor: Factor) -> Result<Self> {
        if base.dim != 5 {
            return Err(Error::DimensionMismatch("product base must have dimension 5".into()));
        }
        Ok(ProductSpec { base, factor })
    }

    /// The 8-dimensional structure equations. For the so(3) factor,
    /// [e6,e7] = e8 cyclically, i.e. de6 = -e78, de7 = e68, de8 = -e67.
    pub fn to_spec8(&self) -> LieAlgebraSpec {
        let mut d: Vec<KForm> = self.base.d.iter().map(|f| lift_form(f, 8)).collect();
        match self.factor {
            Factor::Abelian3 => {
                d.push(KForm::zero(8, 2));
                d.push(KForm::zero(8, 2));
                d.push(KForm::zero(8, 2));
            }
            Factor::So3 => {
                d.push(KForm::term(8, &[7, 8], -Scalar::one()));
                d.push(KForm::term(8, &[6, 8], Scalar::one()));
                d.push(KForm::term(8, &[6, 7], -Scalar::one()));
            }
        }
        LieAlgebraSpec { dim: 8, d }
    }
}

/// The quartic T8(nabla_X X, X, X) on the product, expanded over all 8
/// coordinates. Zero iff the product structure is nearly integrable.
pub fn ni8_quartic(product: &ProductSpec) -> Poly {
    let spec8 = product.to_spec8();
    let t = canonical_t8();
    let n = 8usize;
    let lam = |i: u8| Poly::var(n, i as usize - 1);
    let y: Vec<Poly> = (1..=8u8)
        .map(|k| {
            let mut p = Poly::zero(n);
            for i in 1..=8u8 {
                for m in 1..=8u8 {
                    let c = spec8.dcoeff(m, i, k);
                    if c.is_zero() {
                        continue;
                    }
                    let prod = &lam(i) * &lam(m);
                    p = &p + &prod.scale(&c);
                }
            }
            p
        })
        .collect();
    let mut q = Poly::zero(n);
    for k in 1..=8u8 {
        for a in 1..=8u8 {
            for b in 1..=8u8 {
                let c = t.get(k, a, b);
                if c.is_zero() {
                    continue;
                }
                let term = &(&y[k as usize - 1] * &lam(a)) * &lam(b);
                q = &q + &term.scale(c);
            }
        }
    }
    q
}

/// Near-integrability of the product structure. For a nearly integrable
/// base the criterion is the geodesic condition on the base; a
/// deterministic sample of the product quartic cross-checks it, and
/// `deep` expands the full 8-variable quartic instead. A base that is not
/// nearly integrable can never give a nearly integrable product (setting
/// the factor coordinates to zero restricts the product quartic to the
/// base one).
pub fn ni8_check(product: &ProductSpec, deep: bool) -> Result<bool> {
    product.base.require_jacobi()?;
    if !is_ni(&product.base) {
        if deep {
            let direct = ni8_quartic(product).is_zero();
            if direct {
                return Err(Error::Internal(
                    "product quartic vanishes although the base is not nearly integrable".into(),
                ));
            }
        }
        return Ok(false);
    }
    let lemma = koszul_connection(&product.base).geodesic_condition();
    if deep {
        let direct = ni8_quartic(product).is_zero();
        if direct != lemma {
            return Err(Error::Internal(format!(
                "product quartic ({direct}) disagrees with the geodesic criterion ({lemma})"
            )));
        }
        return Ok(lemma);
    }
    // sampled cross-check on the product connection
    let spec8 = product.to_spec8();
    let conn8 = koszul_connection(&spec8);
    let t8 = canonical_t8();
    let samples: [[i64; 8]; 4] = [
        [1, 1, 1, 1, 1, 1, 1, 1],
        [1, -2, 3, 1, -1, 2, 1, -1],
        [2, 1, -1, 3, 1, -2, 2, 1],
        [0, 1, 2, -1, 1, 1, -1, 2],
    ];
    let mut witness = false;
    for s in samples {
        let x = Vector::from_components(s.iter().map(|&v| Scalar::from_int(v)).collect());
        let y = conn8.derive(&x, &x);
        let val = t8.eval(&y, &x, &x);
        if lemma && !val.is_zero() {
            return Err(Error::Internal(
                "geodesic criterion holds but a product sample violates near-integrability".into(),
            ));
        }
        if !val.is_zero() {
            witness = true;
        }
    }
    if !lemma && !witness {
        return Err(Error::Internal(
            "geodesic criterion fails but no sampled witness found".into(),
        ));
    }
    Ok(lemma)
}

/// Is d(psi) zero on the product algebra? Reported as a computed fact.
pub fn psi_closed(product: &ProductSpec) -> bool {
    let spec8 = product.to_spec8();
    spec8.d(&psi()).is_zero()
}

/// Hypo conditions for the SU(2) structure (alpha, omega_1, omega_2,
/// omega_3) on a 5-dimensional algebra: d omega_1 = 0,
/// d(omega_2 ^ alpha) = d(omega_3 ^ alpha) = 0.
pub fn hypo_check(spec: &LieAlgebraSpec) -> Result<bool> {
    if spec.dim != 5 {
        return Err(Error::DimensionMismatch("hypo check needs dimension 5".into()));
    }
    let (alpha, o1, o2, o3) = su2_structure_forms();
    Ok(spec.d(&o1).is_zero()
        && spec.d(&o2.wedge(&alpha).unwrap()).is_zero()
        && spec.d(&o3.wedge(&alpha).unwrap()).is_zero())
}

/// alpha = e5, omega_1 = e12 + e34, omega_2 = e13 + e42, omega_3 = e14 + e23.
pub fn su2_structure_forms() -> (KForm, KForm, KForm, KForm) {
    let alpha = KForm::basis_one_form(5, 5);
    let mut o1 = KForm::term(5, &[1, 2], Scalar::one());
    o1.add_term(&[3, 4], &Scalar::one());
    let mut o2 = KForm::term(5, &[1, 3], Scalar::one());
    o2.add_term(&[4, 2], &Scalar::one());
    let mut o3 = KForm::term(5, &[1, 4], Scalar::one());
    o3.add_term(&[2, 3], &Scalar::one());
    (alpha, o1, o2, o3)
}

/// Half-flat conditions on the 6-dimensional extension by a closed e6:
/// omega = omega_3 + alpha ^ e6, psi_+ = omega_2 ^ alpha - omega_1 ^ e6;
/// requires d psi_+ = 0 and d(omega ^ omega) = 0.
pub fn halfflat_check(spec: &LieAlgebraSpec) -> Result<bool> {
    if spec.dim != 5 {
        return Err(Error::DimensionMismatch("half-flat check needs dimension 5".into()));
    }
    let mut d6: Vec<KForm> = spec.d.iter().map(|f| lift_form(f, 6)).collect();
    d6.push(KForm::zero(6, 2));
    let spec6 = LieAlgebraSpec { dim: 6, d: d6 };
    let (alpha, o1, o2, o3) = su2_structure_forms();
    let lift = |f: &KForm| lift_form(f, 6);
    let e6 = KForm::basis_one_form(6, 6);
    let omega = lift(&o3).add(&lift(&alpha).wedge(&e6).unwrap()).unwrap();
    let psi_plus = lift(&o2)
        .wedge(&lift(&alpha))
        .unwrap()
        .sub(&lift(&o1).wedge(&e6).unwrap())
        .unwrap();
    Ok(spec6.d(&psi_plus).is_zero() && spec6.d(&omega.wedge(&omega).unwrap()).is_zero())
}

/// Builds the hypo family: parameters (b7 != 0, b37, b45).
pub fn hypo_family(b7: &Scalar, b37: &Scalar, b45: &Scalar) -> Result<LieAlgebraSpec> {
    if b7.is_zero() {
        return Err(Error::ConstraintViolation("hypo family needs b7 != 0".into()));
    }
    let q = &(&(b37 * b37) + &(b45 * b45)) / b7;
    let f = |terms: &[(&[u8], Scalar)]| -> KForm {
        let mut out = KForm::zero(5, 2);
        for (w, c) in terms {
            out.add_term(w, c);
        }
        out
    };
    LieAlgebraSpec::new(
        5,
        vec![
            f(&[(&[2, 5], b7.clone()), (&[3, 5], -b37), (&[4, 5], -b45)]),
            f(&[(&[1, 5], -b7), (&[3, 5], b45.clone()), (&[4, 5], -b37)]),
            f(&[(&[1, 5], b37.clone()), (&[2, 5], -b45), (&[4, 5], q.clone())]),
            f(&[(&[1, 5], b45.clone()), (&[2, 5], b37.clone()), (&[3, 5], -&q)]),
            f(&[
                (&[1, 2], b7.clone()),
                (&[2, 4], -b37),
                (&[1, 4], -b45),
                (&[1, 3], -b37),
                (&[2, 3], b45.clone()),
                (&[3, 4], q.clone()),
            ]),
        ],
    )
}
