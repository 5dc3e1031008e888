//! The characteristic connection of a nearly integrable structure:
//! torsion three-form (printed coefficient formula cross-checked against
//! the intrinsic preservation solve), connection forms, curvature,
//! flatness, the model constant F, parallel torsion and parallel vectors,
//! and the Ricci tensor of the connection.

use crate::error::{Error, Result};
use crate::exterior::{KForm, Vector};
use crate::liealg::{LieAlgebraSpec, Subspace};
use crate::linalg::Mat;
use crate::riemann::{curvature, in_h, koszul_connection, ricci, Connection, Curvature};
use crate::scalar::Scalar;
use crate::so3::ni::require_ni;
use crate::so3::{canonical_t, e_basis, SymmetricTensor3};
use serde::Serialize;

fn r3() -> Scalar {
    Scalar::sqrt3()
}

fn half() -> Scalar {
    Scalar::from_ratio(1, 2)
}

/// The printed coefficient formula for the characteristic torsion.
pub fn printed_torsion(spec: &LieAlgebraSpec) -> Result<KForm> {
    let b = spec.to_bvector()?;
    let g = |i: usize| b.get(i).clone();
    let mut t = KForm::zero(5, 3);
    t.add_term(&[1, 2, 3], &(g(43) - g(10) + g(12)));
    t.add_term(&[1, 2, 4], &-g(6));
    t.add_term(&[1, 2, 5], &(r3() * g(15) - g(7)));
    t.add_term(&[1, 3, 4], &(r3() * g(15) - g(8)));
    t.add_term(
        &[1, 3, 5],
        &(g(24) - r3() * g(47) - half() * g(13) - half() * g(6)),
    );
    t.add_term(&[1, 4, 5], &(r3() * g(40) - g(10)));
    t.add_term(&[2, 3, 4], &(Scalar::from_int(2) * g(29) - g(17) - g(35)));
    t.add_term(&[2, 3, 5], &(g(28) - g(50) - g(19)));
    t.add_term(&[2, 4, 5], &(g(37) - g(15) - Scalar::from_int(2) * g(49)));
    let sixth = Scalar::sqrt3_times(1, 6);
    let third = Scalar::sqrt3_times(1, 3);
    t.add_term(
        &[3, 4, 5],
        &(&sixth * &g(13) + &sixth * &g(6) - &third * &g(9) - &third * &g(24) + g(39) - g(47)),
    );
    Ok(t)
}

fn three_combos() -> Vec<Vec<u8>> {
    let mut combos = Vec::new();
    for i in 1..=5u8 {
        for j in i + 1..=5 {
            for k in j + 1..=5 {
                combos.push(vec![i, j, k]);
            }
        }
    }
    combos
}

/// Position and sign of T(e_i, e_j, e_k) among the sorted coefficients of
/// an unknown 3-form, or None when an index repeats.
fn three_form_slot(i: u8, j: u8, k: u8, combos: &[Vec<u8>]) -> Option<(usize, i32)> {
    let (sorted, sign) = crate::exterior::sort_indices(&[i, j, k])?;
    let pos = combos.iter().position(|c| *c == sorted)?;
    Some((pos, sign))
}

/// Solves for the unique torsion three-form T such that nabla - T/2
/// preserves the structure tensor. Requires near-integrability; a missing
/// or non-unique solution after the NI gate indicates internal
/// inconsistency.
pub fn torsion_by_preservation(spec: &LieAlgebraSpec) -> Result<KForm> {
    require_ni(spec)?;
    let tt = canonical_t();
    let lc = koszul_connection(spec);
    let combos = three_combos();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for i in 1..=5u8 {
        for j in 1..=5u8 {
            for k in j..=5u8 {
                for l in k..=5u8 {
                    let mut row = vec![Scalar::zero(); combos.len()];
                    let mut cst = Scalar::zero();
                    for m in 1..=5u8 {
                        // (a, tt-value with m in the a-slot)
                        let terms = [
                            (j, tt.get(m, k, l)),
                            (k, tt.get(j, m, l)),
                            (l, tt.get(j, k, m)),
                        ];
                        for (a, tval) in terms {
                            if tval.is_zero() {
                                continue;
                            }
                            cst += &(lc.christoffel(m, i, a) * tval);
                            if let Some((pos, sign)) = three_form_slot(i, a, m, &combos) {
                                let mut coeff = -(tval * &half());
                                if sign < 0 {
                                    coeff = -coeff;
                                }
                                row[pos] = &row[pos] + &coeff;
                            }
                        }
                    }
                    rows.push(row);
                    rhs.push(-cst);
                }
            }
        }
    }
    let m = Mat::from_rows(rows);
    let Some((solution, unique)) = m.solve(&rhs) else {
        return Err(Error::Internal(
            "structure is flagged nearly integrable but the preservation system is inconsistent"
                .into(),
        ));
    };
    if !unique {
        return Err(Error::Internal(
            "torsion solve is under-determined (preservation system lost rank)".into(),
        ));
    }
    let mut t = KForm::zero(5, 3);
    for (c, idx) in solution.into_iter().zip(&combos) {
        t.add_term(idx, &c);
    }
    Ok(t)
}

/// Characteristic torsion with the cross-check record: the preservation
/// solve is authoritative; the printed coefficient formula agrees with it
/// exactly on the subspace cut out by the printed relation list (their
/// difference is -sqrt3 (b15 + b38) e^{134}, which that list kills).
pub struct TorsionData {
    pub form: KForm,
    pub printed_matches: bool,
}

pub fn characteristic_torsion_detailed(spec: &LieAlgebraSpec) -> Result<TorsionData> {
    let solved = torsion_by_preservation(spec)?;
    let printed = printed_torsion(spec)?;
    let printed_matches = solved == printed;
    if !printed_matches && crate::so3::ni::satisfies_printed_system(spec)? {
        // on the printed subspace the two formulas are identities of each
        // other; disagreement there means the transcription is corrupted
        return Err(Error::Internal(format!(
            "torsion routes disagree on the printed relation subspace: solved {solved} vs printed {printed}"
        )));
    }
    Ok(TorsionData {
        form: solved,
        printed_matches,
    })
}

pub fn characteristic_torsion(spec: &LieAlgebraSpec) -> Result<KForm> {
    Ok(characteristic_torsion_detailed(spec)?.form)
}

/// Characteristic connection Gt^k_{ij} = Gamma^k_{ij} - (1/2) T(e_i, e_j, e_k),
/// returned together with its torsion form.
pub fn characteristic_connection(spec: &LieAlgebraSpec) -> Result<(Connection, KForm)> {
    let t = characteristic_torsion(spec)?;
    let lc = koszul_connection(spec);
    Ok((connection_minus_half_torsion(&lc, &t), t))
}

pub fn connection_minus_half_torsion(lc: &Connection, t: &KForm) -> Connection {
    let n = lc.dim;
    let mut conn = lc.clone();
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                let tv = t.coeff(&[i, j, k]);
                if tv.is_zero() {
                    continue;
                }
                let v = conn.christoffel(k, i, j) - &(&tv * &half());
                conn.set(k, i, j, v);
            }
        }
    }
    conn
}

/// (gamma^1, gamma^2, gamma^3) = (Gt^2_{.3}, Gt^2_{.5}, Gt^3_{.5}) as
/// one-forms on the algebra.
pub fn connection_forms(conn: &Connection) -> [KForm; 3] {
    let gamma = |upper: u8, lower: u8| -> KForm {
        let mut f = KForm::zero(5, 1);
        for k in 1..=5u8 {
            f.add_term(&[k], conn.christoffel(upper, k, lower));
        }
        f
    };
    [gamma(2, 3), gamma(2, 5), gamma(3, 5)]
}

/// Printed coefficient formulas for the three connection forms.
pub fn printed_connection_forms(spec: &LieAlgebraSpec) -> Result<[KForm; 3]> {
    let b = spec.to_bvector()?;
    let g = |i: usize| b.get(i).clone();
    let mut g1 = KForm::zero(5, 1);
    g1.add_term(&[1], &(g(43) - g(10)));
    g1.add_term(&[2], &-g(15));
    let third = Scalar::sqrt3_times(1, 3);
    g1.add_term(
        &[3],
        &(&third * &(-g(9) + half() * g(13) + half() * g(6) - g(24))),
    );
    g1.add_term(&[4], &-g(40));
    g1.add_term(&[5], &-g(50));
    let mut g2 = KForm::zero(5, 1);
    g2.add_term(&[1], &-(g(23) + g(8)));
    g2.add_term(&[2], &-g(17));
    g2.add_term(&[3], &-g(28));
    g2.add_term(&[4], &g(15));
    g2.add_term(&[5], &-g(47));
    let mut g3 = KForm::zero(5, 1);
    g3.add_term(&[1], &-(&half() * &(g(6) + g(13))));
    g3.add_term(&[2], &(g(45) - g(50) - g(19)));
    g3.add_term(&[3], &-g(29));
    g3.add_term(&[4], &(g(47) - g(39) - g(48)));
    g3.add_term(&[5], &-g(49));
    Ok([g1, g2, g3])
}

/// The proportionality relations tying the full so(3)-valued connection
/// matrix to the three gamma forms:
/// Gt^2_5 = (1/r3) Gt^1_3 = Gt^3_4, Gt^2_3 = (1/r3) Gt^1_5 = Gt^4_5,
/// Gt^3_5 = (1/2) Gt^2_4.
pub fn gamma_proportionality_holds(conn: &Connection) -> bool {
    let form = |upper: u8, lower: u8| -> Vec<Scalar> {
        (1..=5u8)
            .map(|k| conn.christoffel(upper, k, lower).clone())
            .collect()
    };
    let scale = |v: &[Scalar], c: &Scalar| -> Vec<Scalar> { v.iter().map(|x| x * c).collect() };
    let r3inv = r3().inv().unwrap();
    form(2, 5) == scale(&form(1, 3), &r3inv)
        && form(2, 5) == form(3, 4)
        && form(2, 3) == scale(&form(1, 5), &r3inv)
        && form(2, 3) == form(4, 5)
        && form(3, 5) == scale(&form(2, 4), &half())
}

/// Curvature two-forms r^i = d gamma_i + gamma_j ^ gamma_k (cyclic).
pub fn so3_curvature(spec: &LieAlgebraSpec, gammas: &[KForm; 3]) -> [KForm; 3] {
    let [g1, g2, g3] = gammas;
    let r1 = spec.d(g1).add(&g2.wedge(g3).unwrap()).unwrap();
    let r2 = spec.d(g2).add(&g3.wedge(g1).unwrap()).unwrap();
    let r3 = spec.d(g3).add(&g1.wedge(g2).unwrap()).unwrap();
    [r1, r2, r3]
}

/// Printed flatness conditions: all connection components vanish exactly
/// when these coefficient relations hold.
pub fn printed_flatness_conditions(spec: &LieAlgebraSpec) -> Result<bool> {
    let b = spec.to_bvector()?;
    let g = |i: usize| b.get(i).clone();
    let zero = [15usize, 17, 29, 40, 49, 28, 47, 50];
    Ok(g(43) == g(10)
        && g(23) == -g(8)
        && zero.iter().all(|&s| g(s).is_zero())
        && g(45) == g(19)
        && g(48) == -g(39)
        && g(13) == -g(6)
        && g(24) == -g(9))
}

/// gamma = 0 test cross-checked against the printed coefficient list.
/// The list is equivalent to the vanishing of the printed gamma formulas,
/// so disagreement is only possible (and is an internal error) on the
/// printed relation subspace where those formulas are exact.
pub fn flatness_check(spec: &LieAlgebraSpec, gammas: &[KForm; 3]) -> Result<bool> {
    let intrinsic = gammas.iter().all(KForm::is_zero);
    let printed = printed_flatness_conditions(spec)?;
    if intrinsic != printed && crate::so3::ni::satisfies_printed_system(spec)? {
        return Err(Error::Internal(format!(
            "flatness tests disagree: gamma = 0 is {intrinsic}, printed list is {printed}"
        )));
    }
    Ok(intrinsic)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ModelSpace {
    R5,
    Sl3rQuotient,
    Su3Quotient,
}

/// For torsion-free structures the curvature is F E_j for a single
/// constant F whose sign picks the model space.
pub fn f_constant(
    spec: &LieAlgebraSpec,
    gammas: &[KForm; 3],
    t: &KForm,
) -> Result<(Scalar, ModelSpace)> {
    if !t.is_zero() {
        return Err(Error::ConstraintViolation(
            "F constant requires vanishing characteristic torsion".into(),
        ));
    }
    let rs = so3_curvature(spec, gammas);
    let es = e_basis();
    let mut f: Option<Scalar> = None;
    for (r, e) in rs.iter().zip(es.iter()) {
        let candidate = if r.is_zero() {
            Scalar::zero()
        } else {
            let (idx, c) = e.coeffs.iter().next().unwrap();
            &r.coeff(idx) / c
        };
        if *r != e.scale(&candidate) {
            return Err(Error::Internal(format!(
                "curvature form {r} is not proportional to its module basis element {e}"
            )));
        }
        match &f {
            None => f = Some(candidate),
            Some(prev) if *prev == candidate => {}
            Some(prev) => {
                return Err(Error::Internal(format!(
                    "curvature constants differ: {prev} vs {candidate}"
                )))
            }
        }
    }
    let f = f.unwrap();
    let model = match f.sign() {
        0 => ModelSpace::R5,
        s if s < 0 => ModelSpace::Sl3rQuotient,
        _ => ModelSpace::Su3Quotient,
    };
    Ok((f, model))
}

/// Intrinsic split behaviour of the characteristic connection:
/// h-derivatives preserve the h/p splitting, p-derivatives swap it.
pub fn so3_conditions_intrinsic(conn: &Connection) -> bool {
    for i in 1..=5u8 {
        for j in 1..=5u8 {
            for k in 1..=5u8 {
                if conn.christoffel(k, i, j).is_zero() {
                    continue;
                }
                let ok = if in_h(i) {
                    in_h(j) == in_h(k)
                } else {
                    in_h(j) != in_h(k)
                };
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}

/// Printed coefficient form of the split conditions (the variant without
/// a b37 requirement; the stricter printed variant additionally demands
/// b37 = 0 and is exposed separately because it disagrees with the
/// intrinsic inclusions on flat-connection families).
pub fn printed_so3_conditions(spec: &LieAlgebraSpec) -> Result<bool> {
    let b = spec.to_bvector()?;
    let zero = [15usize, 17, 29, 40, 49];
    Ok(*b.get(43) == *b.get(10)
        && *b.get(23) == -b.get(8)
        && zero.iter().all(|&s| b.get(s).is_zero()))
}

pub fn printed_so3_conditions_strict(spec: &LieAlgebraSpec) -> Result<bool> {
    Ok(printed_so3_conditions(spec)? && spec.to_bvector()?.get(37).is_zero())
}

/// Split-condition check: evaluates the Christoffel inclusions and the
/// printed coefficient list and requires agreement on the printed
/// relation subspace, where the coefficient list is exact.
pub fn so3_conditions_check(spec: &LieAlgebraSpec, conn: &Connection) -> Result<bool> {
    let intrinsic = so3_conditions_intrinsic(conn);
    let printed = printed_so3_conditions(spec)?;
    if intrinsic != printed && crate::so3::ni::satisfies_printed_system(spec)? {
        return Err(Error::Internal(format!(
            "split-condition tests disagree: inclusions {intrinsic}, coefficient list {printed}"
        )));
    }
    Ok(intrinsic)
}

/// Does the connection annihilate the (antisymmetric) torsion form?
pub fn is_parallel_form(conn: &Connection, t: &KForm) -> bool {
    let n = conn.dim;
    for i in 1..=n {
        for j in 1..=n {
            for k in j + 1..=n {
                for l in k + 1..=n {
                    let mut acc = Scalar::zero();
                    for m in 1..=n {
                        acc += &(conn.christoffel(m, i, j) * &t.coeff(&[m, k, l]));
                        acc += &(conn.christoffel(m, i, k) * &t.coeff(&[j, m, l]));
                        acc += &(conn.christoffel(m, i, l) * &t.coeff(&[j, k, m]));
                    }
                    if !acc.is_zero() {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Does the connection annihilate the symmetric structure tensor?
pub fn preserves_structure_tensor(conn: &Connection, t: &SymmetricTensor3) -> bool {
    let n = conn.dim;
    for i in 1..=n {
        for j in 1..=n {
            for k in j..=n {
                for l in k..=n {
                    let mut acc = Scalar::zero();
                    for m in 1..=n {
                        acc += &(conn.christoffel(m, i, j) * t.get(m, k, l));
                        acc += &(conn.christoffel(m, i, k) * t.get(j, m, l));
                        acc += &(conn.christoffel(m, i, l) * t.get(j, k, m));
                    }
                    if !acc.is_zero() {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Exact kernel of xi -> nabla xi: 25 linear equations in 5 unknowns.
pub fn parallel_vectors(conn: &Connection) -> Subspace {
    let n = conn.dim;
    let mut rows = Vec::new();
    for i in 1..=n {
        for k in 1..=n {
            rows.push(
                (1..=n)
                    .map(|j| conn.christoffel(k, i, j).clone())
                    .collect::<Vec<_>>(),
            );
        }
    }
    let kernel: Vec<Vector> = Mat::from_rows(rows)
        .kernel_basis()
        .into_iter()
        .map(Vector::from_components)
        .collect();
    Subspace::span(n, &kernel)
}

/// The torsion form of the connection determines and is determined by T
/// under the nabla - T/2 convention used throughout: slotwise
/// 2 (Gamma - Gt) = T, equivalently
/// g(nabla_X Y - nabla_Y X - [X,Y], Z) = -T(X,Y,Z). Both identities are
/// checked.
pub fn torsion_matches(conn: &Connection, spec: &LieAlgebraSpec, t: &KForm) -> bool {
    let lc = koszul_connection(spec);
    for i in 1..=5u8 {
        for j in 1..=5u8 {
            let br = spec.bracket_basis(i, j);
            for k in 1..=5u8 {
                let tv = t.coeff(&[i, j, k]);
                let two = Scalar::from_int(2);
                let dev = &two * &(lc.christoffel(k, i, j) - conn.christoffel(k, i, j));
                if dev != tv {
                    return false;
                }
                let tor = conn.christoffel(k, i, j) - conn.christoffel(k, j, i) - br.get(k);
                if tor != -tv {
                    return false;
                }
            }
        }
    }
    true
}

/// Ricci tensor of the characteristic connection (generally asymmetric).
pub fn characteristic_ricci(conn: &Connection, spec: &LieAlgebraSpec) -> (Curvature, Mat) {
    let r = curvature(conn, spec);
    let ric = ricci(&r);
    (r, ric)
}

/// Which variant (if any) of the relation tying the connection Ricci to
/// the metric Ricci, the codifferential term, and a quadratic torsion
/// term holds for this algebra. Reported, never asserted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RicciRelation {
    SingleSumMinusQuarter,
    SingleSumPlusQuarter,
    DoubleSumMinusQuarter,
    DoubleSumPlusQuarter,
    None,
}

pub fn ricci_relation_variant(
    spec: &LieAlgebraSpec,
    ric_char: &Mat,
    ric_lc: &Mat,
    t: &KForm,
) -> RicciRelation {
    let codust = spec.d(&t.hodge()).hodge();
    let mut cod = Mat::zeros(5, 5);
    for j in 1..=5u8 {
        for k in 1..=5u8 {
            cod.data[j as usize - 1][k as usize - 1] = codust.coeff(&[j, k]);
        }
    }
    let mut single = Mat::zeros(5, 5);
    let mut double = Mat::zeros(5, 5);
    for j in 1..=5u8 {
        for k in 1..=5u8 {
            let mut s = Scalar::zero();
            for i in 1..=5u8 {
                for m in 1..=5u8 {
                    s += &(&t.coeff(&[j, i, m]) * &t.coeff(&[k, i, m]));
                }
            }
            single.data[j as usize - 1][k as usize - 1] = s;
            let mut d = Scalar::zero();
            for m in 1..=5u8 {
                let mut left = Scalar::zero();
                let mut right = Scalar::zero();
                for i in 1..=5u8 {
                    left += &t.coeff(&[j, i, m]);
                    right += &t.coeff(&[k, i, m]);
                }
                d += &(&left * &right);
            }
            double.data[j as usize - 1][k as usize - 1] = d;
        }
    }
    let quarter = Scalar::from_ratio(1, 4);
    let candidates = [
        (RicciRelation::SingleSumMinusQuarter, &single, -&quarter),
        (RicciRelation::SingleSumPlusQuarter, &single, quarter.clone()),
        (RicciRelation::DoubleSumMinusQuarter, &double, -&quarter),
        (RicciRelation::DoubleSumPlusQuarter, &double, quarter.clone()),
    ];
    for (name, q, qc) in candidates {
        for half_sign in [half(), -half()] {
            let mut ok = true;
            'outer: for j in 0..5 {
                for k in 0..5 {
                    let rhs = &ric_lc.data[j][k]
                        + &(&half_sign * &cod.data[j][k])
                        + &(&qc * &q.data[j][k]);
                    if ric_char.data[j][k] != rhs {
                        ok = false;
                        break 'outer;
                    }
                }
            }
            if ok {
                return name;
            }
        }
    }
    RicciRelation::None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::BVector;
    use crate::so3::ni::ni_kernel_basis;

    #[test]
    fn abelian_has_zero_torsion_and_connection() {
        let a = LieAlgebraSpec::abelian(5);
        let (conn, t) = characteristic_connection(&a).unwrap();
        assert!(t.is_zero());
        assert_eq!(conn, Connection::zero(5));
        let gammas = connection_forms(&conn);
        assert!(flatness_check(&a, &gammas).unwrap());
        let (f, model) = f_constant(&a, &gammas, &t).unwrap();
        assert!(f.is_zero());
        assert_eq!(model, ModelSpace::R5);
        assert_eq!(parallel_vectors(&conn).dim(), 5);
        assert!(so3_conditions_check(&a, &conn).unwrap());
    }

    #[test]
    fn characteristic_axioms_on_ni_samples() {
        // grid-sample the nearly integrable subspace and verify the
        // defining properties of the characteristic connection exactly
        let basis = ni_kernel_basis();
        let tt = canonical_t();
        let mut state: u64 = 0x243F6A8885A308D3;
        let mut next = move || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((state >> 33) % 7) as i64 - 3
        };
        for trial in 0..12 {
            let mut b = BVector::zero();
            for kb in &basis {
                let c = Scalar::from_int(next());
                for s in 1..=50usize {
                    let v = b.get(s) + &(&c * kb.get(s));
                    b.set(s, v);
                }
            }
            let spec = b.to_spec();
            assert!(crate::so3::ni::is_ni(&spec), "trial {trial} not NI");
            let (conn, t) = characteristic_connection(&spec).unwrap();
            assert!(conn.is_metric(), "nabla g = 0 fails");
            assert!(preserves_structure_tensor(&conn, &tt), "structure tensor not parallel");
            assert!(torsion_matches(&conn, &spec, &t), "torsion mismatch");
            assert!(gamma_proportionality_holds(&conn), "gamma proportionality");
            // the printed connection-form formulas are exact on the printed
            // relation subspace
            if crate::so3::ni::satisfies_printed_system(&spec).unwrap() {
                let gammas = connection_forms(&conn);
                let printed = printed_connection_forms(&spec).unwrap();
                assert_eq!(gammas, printed, "printed gamma formulas");
            }
        }
    }

    #[test]
    fn printed_gamma_formulas_on_printed_subspace() {
        // intersect the direct NI kernel with the four extra printed
        // relations; there the printed torsion and gamma formulas are exact
        let mut rows = crate::so3::ni::direct_system().data;
        rows.extend(crate::so3::ni::printed_system().data);
        let joint = Mat::from_rows(rows);
        let basis: Vec<BVector> = joint.kernel_basis().into_iter().map(BVector).collect();
        assert!(basis.len() >= 20);
        let mut state: u64 = 0x9E3779B97F4A7C15;
        let mut next = move || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((state >> 33) % 9) as i64 - 4
        };
        for _ in 0..6 {
            let mut b = BVector::zero();
            for kb in &basis {
                let c = Scalar::from_int(next());
                for s in 1..=50usize {
                    let v = b.get(s) + &(&c * kb.get(s));
                    b.set(s, v);
                }
            }
            let spec = b.to_spec();
            let data = characteristic_torsion_detailed(&spec).unwrap();
            assert!(data.printed_matches, "printed torsion formula on its subspace");
            let lc = koszul_connection(&spec);
            let conn = connection_minus_half_torsion(&lc, &data.form);
            assert_eq!(
                connection_forms(&conn),
                printed_connection_forms(&spec).unwrap()
            );
        }
    }

    #[test]
    fn non_ni_spec_is_refused() {
        let mut b = BVector::zero();
        b.set(33, Scalar::one());
        assert!(matches!(
            characteristic_torsion(&b.to_spec()),
            Err(Error::NotNearlyIntegrable(_))
        ));
    }
}
