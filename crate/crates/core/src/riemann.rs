//! Left-invariant Riemannian geometry in the orthonormal adapted frame:
//! Levi-Civita connection by the Koszul formula, curvature and Ricci
//! tensors, the base curvature k(p) of the h/p fibration, and the
//! split-connection predicates.

use crate::error::{Error, Result};
use crate::exterior::Vector;
use crate::liealg::{LieAlgebraSpec, Subspace};
use crate::linalg::Mat;
use crate::scalar::Scalar;

/// Metric connection as a Christoffel array: nabla_{e_i} e_j =
/// sum_k gamma[i][j][k] e_k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Connection {
    pub dim: u8,
    pub gamma: Vec<Vec<Vec<Scalar>>>,
}

impl Connection {
    pub fn zero(dim: u8) -> Self {
        let n = dim as usize;
        Connection {
            dim,
            gamma: vec![vec![vec![Scalar::zero(); n]; n]; n],
        }
    }

    /// Gamma^k_{ij} with 1-based indices.
    pub fn christoffel(&self, k: u8, i: u8, j: u8) -> &Scalar {
        &self.gamma[i as usize - 1][j as usize - 1][k as usize - 1]
    }

    pub fn set(&mut self, k: u8, i: u8, j: u8, v: Scalar) {
        self.gamma[i as usize - 1][j as usize - 1][k as usize - 1] = v;
    }

    pub fn derive_basis(&self, i: u8, j: u8) -> Vector {
        Vector::from_components(self.gamma[i as usize - 1][j as usize - 1].clone())
    }

    pub fn derive(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::zero(self.dim);
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
                let c = xi * yj;
                out = out.add(&self.derive_basis(i, j).scale(&c));
            }
        }
        out
    }

    /// Metric compatibility in an orthonormal frame: gamma^k_{ij} +
    /// gamma^j_{ik} = 0.
    pub fn is_metric(&self) -> bool {
        for i in 1..=self.dim {
            for j in 1..=self.dim {
                for k in 1..=self.dim {
                    let s = self.christoffel(k, i, j) + self.christoffel(j, i, k);
                    if !s.is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// nabla_X X = 0 for all X, i.e. gamma^k_{ij} + gamma^k_{ji} = 0.
    pub fn geodesic_condition(&self) -> bool {
        for i in 1..=self.dim {
            for j in 1..=self.dim {
                for k in 1..=self.dim {
                    let s = self.christoffel(k, i, j) + self.christoffel(k, j, i);
                    if !s.is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Koszul connection of the left-invariant metric g = sum (e^i)^2,
/// without a Jacobi gate (the formula is pointwise linear algebra).
pub fn koszul_connection(spec: &LieAlgebraSpec) -> Connection {
    let n = spec.dim;
    let mut conn = Connection::zero(n);
    // cache g([e_i, e_j], e_k) = -de^k(e_i, e_j)
    let bk = |i: u8, j: u8, k: u8| -> Scalar { -spec.dcoeff(k, i, j) };
    let half = Scalar::from_ratio(1, 2);
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                // 2 g(nabla_i e_j, e_k) = g([i,j],k) - g([j,k],i) + g([k,i],j)
                let v = bk(i, j, k) - bk(j, k, i) + bk(k, i, j);
                conn.set(k, i, j, &v * &half);
            }
        }
    }
    conn
}

/// Levi-Civita connection; refuses structure constants that fail the
/// Jacobi identity.
pub fn levi_civita(spec: &LieAlgebraSpec) -> Result<Connection> {
    spec.require_jacobi()?;
    Ok(koszul_connection(spec))
}

/// Curvature tensor R[i][j][k][l] = g(R(e_i, e_j) e_k, e_l) with
/// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_{[X,Y]} Z.
pub type Curvature = Vec<Vec<Vec<Vec<Scalar>>>>;

pub fn curvature(conn: &Connection, spec: &LieAlgebraSpec) -> Curvature {
    let n = conn.dim;
    let mut r = vec![vec![vec![vec![Scalar::zero(); n as usize]; n as usize]; n as usize]; n as usize];
    for i in 1..=n {
        for j in 1..=n {
            let bracket = spec.bracket_basis(i, j);
            for k in 1..=n {
                let a = conn.derive(&Vector::basis(n, i), &conn.derive_basis(j, k));
                let b = conn.derive(&Vector::basis(n, j), &conn.derive_basis(i, k));
                let c = conn.derive(&bracket, &Vector::basis(n, k));
                for l in 1..=n {
                    let v = a.get(l) - b.get(l) - c.get(l);
                    r[i as usize - 1][j as usize - 1][k as usize - 1][l as usize - 1] = v;
                }
            }
        }
    }
    r
}

pub fn curvature_component(r: &Curvature, i: u8, j: u8, k: u8, l: u8) -> &Scalar {
    &r[i as usize - 1][j as usize - 1][k as usize - 1][l as usize - 1]
}

/// Ric(X, Y) = sum_i g(R(e_i, X) Y, e_i).
pub fn ricci(r: &Curvature) -> Mat {
    let n = r.len();
    let mut m = Mat::zeros(n, n);
    for j in 0..n {
        for k in 0..n {
            let mut acc = Scalar::zero();
            for i in 0..n {
                acc += &r[i][j][k][i];
            }
            m.data[j][k] = acc;
        }
    }
    m
}

/// First Bianchi identity for a torsion-free connection on every basis
/// triple: R(x,y)z + R(y,z)x + R(z,x)y = 0.
pub fn first_bianchi_holds(r: &Curvature) -> bool {
    let n = r.len();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let s = &(&r[i][j][k][l] + &r[j][k][i][l]) + &r[k][i][j][l];
                    if !s.is_zero() {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// The adapted splitting of R^5.
pub fn adapted_h() -> Subspace {
    Subspace::coordinate(5, &[1, 2, 4])
}

pub fn adapted_p() -> Subspace {
    Subspace::coordinate(5, &[3, 5])
}

const H_IDX: [u8; 3] = [1, 2, 4];
const P_IDX: [u8; 2] = [3, 5];

pub fn in_h(i: u8) -> bool {
    H_IDX.contains(&i)
}

pub fn in_p(i: u8) -> bool {
    P_IDX.contains(&i)
}

/// Base curvature of the h/p fibration, computed two independent ways:
/// from the double bracket -g(e5, [[e3,e5]_h, e3]_p) and from the
/// structure-coefficient polynomial
/// b9 (b6/2 + b13/2 - b9 - sqrt3 b47) - b19 b45 + b39 b48.
/// The two agree for every nearly integrable spec; disagreement means the
/// slot conventions have drifted and is reported as an internal error.
pub fn k_p(spec: &LieAlgebraSpec) -> Result<Scalar> {
    if spec.dim != 5 {
        return Err(Error::DimensionMismatch("k(p) needs dimension 5".into()));
    }
    let h = adapted_h();
    let p = adapted_p();
    let e3 = Vector::basis(5, 3);
    let e5 = Vector::basis(5, 5);
    let inner = h.project(&spec.bracket(&e3, &e5)?);
    let outer = p.project(&spec.bracket(&inner, &e3)?);
    let intrinsic = -e5.dot(&outer);

    let b = spec.to_bvector()?;
    let half = Scalar::from_ratio(1, 2);
    let poly = b.get(9)
        * &(&(&(&half * b.get(6)) + &(&half * b.get(13))) - &(b.get(9) + &(Scalar::sqrt3() * b.get(47))))
        - b.get(19) * b.get(45)
        + b.get(39) * b.get(48);

    if intrinsic != poly {
        return Err(Error::Internal(format!(
            "k(p) routes disagree: bracket formula {intrinsic} vs coefficient polynomial {poly}"
        )));
    }
    Ok(intrinsic)
}

/// The coefficient polynomial route alone (used by the audit tests).
pub fn k_p_poly(spec: &LieAlgebraSpec) -> Result<Scalar> {
    let b = spec.to_bvector()?;
    let half = Scalar::from_ratio(1, 2);
    Ok(b.get(9)
        * &(&(&(&half * b.get(6)) + &(&half * b.get(13))) - &(b.get(9) + &(Scalar::sqrt3() * b.get(47))))
        - b.get(19) * b.get(45)
        + b.get(39) * b.get(48))
}

/// Quadratic form Ric(X, X) = -sum_{a in {1,2,4}} ([X, [X, e_a]_p]_h, e_a)
/// on h, for the fibration over a 3-dimensional base; requires (l, p) to
/// be a symmetric pair. Returns the 3x3 matrix on (e1, e2, e4) and its
/// trace.
pub fn base_ricci(spec: &LieAlgebraSpec) -> Result<(Mat, Scalar)> {
    let h = adapted_h();
    let p = adapted_p();
    if !spec.is_symmetric_pair(&p, &h)? {
        return Err(Error::NotSymmetricPair("l, p".into()));
    }
    base_ricci_unchecked(spec)
}

/// The printed formula without the symmetric-pair gate (used to probe
/// degenerate cases in tests).
pub fn base_ricci_unchecked(spec: &LieAlgebraSpec) -> Result<(Mat, Scalar)> {
    let h = adapted_h();
    let p = adapted_p();
    let q = |x: &Vector, y: &Vector| -> Result<Scalar> {
        // polarized: -sum_a 1/2 [ ([x,[y,e_a]_p]_h + [y,[x,e_a]_p]_h , e_a) ]
        let mut acc = Scalar::zero();
        for a in [1u8, 2, 4] {
            let ea = Vector::basis(5, a);
            let t1 = h.project(&spec.bracket(x, &p.project(&spec.bracket(y, &ea)?))?);
            let t2 = h.project(&spec.bracket(y, &p.project(&spec.bracket(x, &ea)?))?);
            acc += &-(&(t1.dot(&ea) + t2.dot(&ea)) * &Scalar::from_ratio(1, 2));
        }
        Ok(acc)
    };
    let basis = [1u8, 2, 4];
    let mut m = Mat::zeros(3, 3);
    for (r, &i) in basis.iter().enumerate() {
        for (c, &j) in basis.iter().enumerate() {
            m.data[r][c] = q(&Vector::basis(5, i), &Vector::basis(5, j))?;
        }
    }
    let mut trace = Scalar::zero();
    for i in 0..3 {
        trace += &m.data[i][i].clone();
    }
    Ok((m, trace))
}

fn split_inclusions_hold(conn: &Connection, swap: bool) -> bool {
    // straight: nabla_h h in h, nabla_h p in p, nabla_p h in p, nabla_p p in h
    // swapped ("inverse"): nabla_h h in p, nabla_h p in h, nabla_p h in h,
    // nabla_p p in p
    for i in 1..=5u8 {
        for j in 1..=5u8 {
            for k in 1..=5u8 {
                if conn.christoffel(k, i, j).is_zero() {
                    continue;
                }
                let allowed = match (in_h(i), in_h(j), in_h(k)) {
                    (true, jh, kh) => {
                        if swap {
                            jh != kh
                        } else {
                            jh == kh
                        }
                    }
                    (false, jh, kh) => {
                        if swap {
                            jh == kh
                        } else {
                            jh != kh
                        }
                    }
                };
                if !allowed {
                    return false;
                }
            }
        }
    }
    true
}

/// Slots that vanish exactly when the Levi-Civita connection preserves
/// h along h and swaps along p.
pub const LC_SPLIT_SLOTS: [usize; 13] = [7, 8, 10, 12, 15, 17, 23, 29, 35, 37, 40, 43, 49];

/// Levi-Civita split predicate, via the Christoffel inclusions and via
/// the coefficient list; for nearly integrable structure constants the
/// two are equivalent and both are evaluated.
pub fn lc_split_check(spec: &LieAlgebraSpec) -> Result<bool> {
    let conn = koszul_connection(spec);
    Ok(split_inclusions_hold(&conn, false))
}

pub fn lc_split_slots_vanish(spec: &LieAlgebraSpec) -> Result<bool> {
    let b = spec.to_bvector()?;
    Ok(LC_SPLIT_SLOTS.iter().all(|&s| b.get(s).is_zero()))
}

/// The swapped ("dual") inclusions for the Levi-Civita connection.
pub fn inverse_lc_check(spec: &LieAlgebraSpec) -> Result<bool> {
    let conn = koszul_connection(spec);
    Ok(split_inclusions_hold(&conn, true))
}

pub fn geodesic_condition(conn: &Connection) -> bool {
    conn.geodesic_condition()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::KForm;
    use crate::liealg::{s2_plus_abelian, LieAlgebraSpec};

    fn so3_cyclic(dim: u8, i: u8, j: u8, k: u8) -> LieAlgebraSpec {
        // [e_i, e_j] = e_k cyclically
        let mut d: Vec<KForm> = (0..dim).map(|_| KForm::zero(dim, 2)).collect();
        d[k as usize - 1] = KForm::term(dim, &[i, j], -Scalar::one());
        d[i as usize - 1] = KForm::term(dim, &[j, k], -Scalar::one());
        d[j as usize - 1] = KForm::term(dim, &[k, i], -Scalar::one());
        LieAlgebraSpec::new(dim, d).unwrap()
    }

    #[test]
    fn abelian_connection_vanishes() {
        let a = LieAlgebraSpec::abelian(5);
        let conn = levi_civita(&a).unwrap();
        assert_eq!(conn, Connection::zero(5));
    }

    #[test]
    fn so3_half_bracket_connection_and_curvature() {
        let so3 = so3_cyclic(3, 1, 2, 3);
        let conn = levi_civita(&so3).unwrap();
        // nabla_{e1} e2 = (1/2) e3
        assert_eq!(
            conn.derive_basis(1, 2),
            Vector::basis(3, 3).scale(&Scalar::from_ratio(1, 2))
        );
        assert!(conn.is_metric());
        assert!(conn.geodesic_condition());
        let r = curvature(&conn, &so3);
        // sectional curvature of the (e1, e2) plane is 1/4
        assert_eq!(
            *curvature_component(&r, 1, 2, 2, 1),
            Scalar::from_ratio(1, 4)
        );
        assert!(first_bianchi_holds(&r));
        // Ricci = (1/2) identity
        let ric = ricci(&r);
        for i in 0..3 {
            for j in 0..3 {
                let expected = if i == j {
                    Scalar::from_ratio(1, 2)
                } else {
                    Scalar::zero()
                };
                assert_eq!(ric.data[i][j], expected);
            }
        }
    }

    #[test]
    fn s2_connection_by_hand() {
        // de^2 = e^12, [e1,e2] = -e2: hyperbolic plane
        let s2 = s2_plus_abelian(2);
        let conn = levi_civita(&s2).unwrap();
        assert_eq!(conn.derive_basis(2, 2), Vector::basis(2, 1).scale(&-Scalar::one()));
        assert_eq!(conn.derive_basis(2, 1), Vector::basis(2, 2));
        assert!(conn.derive_basis(1, 1).is_zero());
        assert!(conn.derive_basis(1, 2).is_zero());
        assert!(!conn.geodesic_condition());
        let r = curvature(&conn, &s2);
        // K(e1, e2) = -1
        assert_eq!(*curvature_component(&r, 1, 2, 2, 1), -Scalar::one());
    }

    #[test]
    fn ricci_is_symmetric_for_levi_civita() {
        let so3 = so3_cyclic(5, 1, 2, 4);
        let conn = levi_civita(&so3).unwrap();
        let ric = ricci(&curvature(&conn, &so3));
        assert!(ric.is_symmetric());
    }

    #[test]
    fn abelian_k_p_and_base_ricci() {
        let a = LieAlgebraSpec::abelian(5);
        assert!(k_p(&a).unwrap().is_zero());
        let (m, trace) = base_ricci(&a).unwrap();
        assert!(trace.is_zero());
        assert!(m.data.iter().flatten().all(Scalar::is_zero));
    }

    #[test]
    fn geodesic_condition_fails_for_s2() {
        let s2 = s2_plus_abelian(5);
        let conn = levi_civita(&s2).unwrap();
        assert!(!geodesic_condition(&conn));
    }
}
