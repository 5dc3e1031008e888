//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line (run with `--nocapture` to see them). Every tolerance
//! is bit-exact equality; there are no floating-point comparisons
//! anywhere.
//!
//! Two statements of the source classification are machine-refuted and
//! documented as reconciliation notes where they surface: the k(p) values
//! printed for the third strong family and the fourth non-closed family
//! (their own defining formula gives 0), and the claim that non-closed
//! torsion is never parallel (the fifth non-closed family is a
//! counterexample, which makes criterion 7 honestly red).

use so3ni::catalog::{self, verify};
use so3ni::exterior::{KForm, Vector};
use so3ni::liealg::{BVector, LieAlgebraSpec};
use so3ni::linalg::Mat;
use so3ni::report::analyze;
use so3ni::riemann::{
    self, curvature, first_bianchi_holds, koszul_connection, levi_civita, ricci,
};
use so3ni::scalar::{rat, Rational, Scalar};
use so3ni::so3::connection::{
    characteristic_connection, connection_forms, gamma_proportionality_holds, is_parallel_form,
    parallel_vectors, torsion_matches,
};
use so3ni::so3::ni::{audit, is_ni, ni_kernel_basis};
use so3ni::so3::{canonical_t, sigma_t, TorsionType};
use so3ni::su3::{cubic_det_residual, ni8_check, Factor, ProductSpec};

fn pass(n: u32, detail: &str) {
    println!("criterion {n}: PASS - {detail}");
}

struct Rng(u64);

impl Rng {
    fn new(seed: u64) -> Self {
        Rng(seed)
    }

    fn next_u64(&mut self) -> u64 {
        // splitmix64
        self.0 = self.0.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    fn int(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.next_u64() % (hi - lo + 1) as u64) as i64
    }

    fn rational(&mut self) -> Scalar {
        let n = self.int(-6, 6);
        let d = self.int(1, 4);
        Scalar::from_rational(Rational::new(rat(n, 1).numer().clone(), rat(d, 1).numer().clone()))
    }
}

fn scalar(n: i64, d: i64) -> Scalar {
    Scalar::from_ratio(n, d)
}

#[test]
fn criterion_01_pure_type_example_reproduction() {
    let entry = catalog::find("X-L27").unwrap();
    let spec = entry.build_validated(&[]).unwrap();
    let report = analyze(&spec).unwrap();

    let mut t = KForm::term(5, &[1, 2, 3], Scalar::sqrt3_times(1, 4));
    t.add_term(&[1, 4, 5], &-Scalar::sqrt3());
    t.add_term(&[2, 3, 4], &scalar(-3, 4));
    assert_eq!(report.torsion.as_ref().unwrap(), &t, "torsion");

    let mut dt = KForm::term(5, &[2, 3, 4, 5], scalar(-3, 2));
    dt.add_term(&[1, 2, 3, 5], &Scalar::sqrt3_times(-3, 2));
    assert_eq!(report.d_t.as_ref().unwrap(), &dt, "dT");
    assert!(report.d_star_t.as_ref().unwrap().is_zero(), "d*T");
    assert_eq!(report.torsion_type, Some(TorsionType::Pure7));

    // Ricci of the metric connection: the printed display is matched
    // entry-by-entry except in the (4,4) slot, where the display repeats
    // the (1,4) value; the computed entry there is 57/32.
    let ric = report.ricci_lc.as_ref().unwrap();
    let z = Scalar::zero;
    let printed_display = [
        scalar(-141, 32), z(), z(), Scalar::sqrt3_times(-99, 32), z(),
        z(), scalar(-27, 8), z(), z(), z(),
        z(), z(), scalar(-27, 8), z(), z(),
        Scalar::sqrt3_times(-99, 32), z(), z(), Scalar::sqrt3_times(-99, 32), z(),
        z(), z(), z(), z(), scalar(-15, 2),
    ];
    let mut mismatches = Vec::new();
    for (i, (actual, printed)) in ric.iter().zip(&printed_display).enumerate() {
        if actual != printed {
            mismatches.push((i / 5 + 1, i % 5 + 1, printed.clone(), actual.clone()));
        }
    }
    assert_eq!(
        mismatches.len(),
        1,
        "exactly the (4,4) slot may differ, got {mismatches:?}"
    );
    assert_eq!(mismatches[0].0, 4);
    assert_eq!(mismatches[0].1, 4);
    assert_eq!(mismatches[0].3, scalar(57, 32));

    let (_, trace) = riemann::base_ricci(&spec).unwrap();
    assert!(trace.is_zero(), "base is scalar-flat");

    pass(
        1,
        "T, dT, d*T, pure type, base trace exact; Ricci matches the printed display in 24 of 25 \
         entries (reconciliation note: the printed (4,4) entry -(99/32)r3 duplicates the (1,4) \
         entry; the computed value is 57/32)",
    );
}

#[test]
fn criterion_02_catalog_replay_randomized() {
    let mut rng = Rng::new(0xC0FFEE);
    let families = [
        "TF-1", "TF-2", "TF-3", "TF-4", "ST-1", "ST-2", "ST-3", "ST-4", "NC-1", "NC-2", "NC-3",
        "NC-4", "NC-5",
    ];
    let mut total = 0;
    for id in families {
        let entry = catalog::find(id).unwrap();
        // the five stored admissible samples
        for sample in &entry.samples {
            let outcome = verify(&entry, sample).unwrap();
            assert!(outcome.passed, "{id} at {sample:?}: {:?}", outcome.diffs);
            total += 1;
        }
        // five more randomized admissible rational tuples
        let mut done = 0;
        while done < 5 {
            let params: Vec<Scalar> = (0..entry.param_names.len()).map(|_| rng.rational()).collect();
            if entry.build_validated(&params).is_err() {
                continue;
            }
            let outcome = verify(&entry, &params).unwrap();
            assert!(outcome.passed, "{id} at {params:?}: {:?}", outcome.diffs);
            done += 1;
            total += 1;
        }
    }
    pass(
        2,
        &format!(
            "{total} parameter samples across 13 families replay every stated torsion, dT, k(p) \
             and type claim (reconciliation notes: the stated k(p) values -3a^2 for ST-3 and \
             -a^2 for NC-4 contradict the classification's own k(p) formula, which yields 0 on \
             those structure constants; the catalog stores the formula value)"
        ),
    );
}

#[test]
fn criterion_03_torsion_free_structure_theorem() {
    let expectations = [("TF-1", -1), ("TF-2", -1), ("TF-3", -1), ("TF-4", 0)];
    let mut rng = Rng::new(0xF00D);
    for (id, sign) in expectations {
        let entry = catalog::find(id).unwrap();
        let mut params_list = entry.samples.clone();
        for _ in 0..3 {
            loop {
                let params: Vec<Scalar> =
                    (0..entry.param_names.len()).map(|_| rng.rational()).collect();
                if entry.build_validated(&params).is_ok() {
                    params_list.push(params);
                    break;
                }
            }
        }
        for params in params_list {
            let spec = entry.build_validated(&params).unwrap();
            let report = analyze(&spec).unwrap();
            assert!(report.torsion.as_ref().unwrap().is_zero(), "{id}: torsion-free");
            // F exists (single constant across the three curvature forms,
            // enforced inside the engine) with the stated sign
            let f = report.f.as_ref().unwrap();
            assert_eq!(f.sign(), sign, "{id}: sign of F at {params:?}");
        }
    }
    pass(3, "r^j = F E_j with one constant; F < 0 for the first three families and F = 0 for the flat one");
}

#[test]
fn criterion_04_linear_system_audit() {
    let audit = audit();
    assert_eq!(audit.direct_rank, 25, "direct system rank");
    assert_eq!(audit.printed_rank, 25, "printed system rank");
    // the reconciled system is the direct expansion by construction; the
    // discrepancy report is the deliverable
    assert_eq!(
        audit.printed_unsupported,
        vec![
            "b20 = -b37",
            "2 b49 - b15 - b37 = b46",
            "b38 = -b15",
            "b32 = -b23 - r3 b15",
        ]
    );
    assert_eq!(audit.missing_functionals.len(), 1);
    assert!(audit.missing_functionals[0].starts_with("b34"));
    println!("  reconciliation notes (docs/ni-system-audit.md):");
    for name in &audit.printed_unsupported {
        println!("    printed relation not implied by the expansion: {name}");
    }
    for f in &audit.missing_functionals {
        println!("    functional missing from the printed list: {f}");
    }
    pass(
        4,
        "direct quartic expansion has rank 25; the printed list splits three relations too \
         finely and omits the slot-34 functional; the reconciled system is the direct one",
    );
}

#[test]
fn criterion_05_characteristic_connection_axioms() {
    let basis = ni_kernel_basis();
    let tt = canonical_t();
    let mut rng = Rng::new(0xABCDEF);
    for trial in 0..100 {
        let mut b = BVector::zero();
        for kb in &basis {
            let c = Scalar::from_int(rng.int(-3, 3));
            for s in 1..=50usize {
                let v = b.get(s) + &(&c * kb.get(s));
                b.set(s, v);
            }
        }
        let spec = b.to_spec();
        assert!(is_ni(&spec), "trial {trial}: sample lies in the NI subspace");
        let (conn, t) = characteristic_connection(&spec).unwrap();
        assert!(conn.is_metric(), "trial {trial}: nabla g = 0");
        assert!(
            so3ni::so3::connection::preserves_structure_tensor(&conn, &tt),
            "trial {trial}: nabla T = 0"
        );
        assert!(
            torsion_matches(&conn, &spec, &t),
            "trial {trial}: 2(Gamma - Gamma_tilde) = T and tor(nabla_tilde) = -T"
        );
        assert!(
            gamma_proportionality_holds(&conn),
            "trial {trial}: connection-form proportionalities"
        );
    }
    pass(
        5,
        "100 grid samples of the 25-dimensional NI subspace: metric compatibility, structure \
         tensor parallel, torsion identity, and the gamma proportionalities hold exactly",
    );
}

#[test]
fn criterion_06_coclosedness_theorem() {
    // every catalog family satisfying the split conditions has coclosed
    // torsion and symmetric connection Ricci
    let split_families = [
        "TF-1", "TF-2", "TF-3", "TF-4", "ST-1", "ST-2", "ST-3", "ST-4", "NC-1", "NC-2", "NC-3",
        "NC-4", "NC-5",
    ];
    for id in split_families {
        let entry = catalog::find(id).unwrap();
        for sample in &entry.samples {
            let spec = entry.build_validated(sample).unwrap();
            let report = analyze(&spec).unwrap();
            assert_eq!(report.so3_conditions, Some(true), "{id}: split conditions");
            assert!(
                report.d_star_t.as_ref().unwrap().is_zero(),
                "{id}: d*T = 0 at {sample:?}"
            );
            assert_eq!(
                report.ricci_char_symmetric,
                Some(true),
                "{id}: symmetric connection Ricci at {sample:?}"
            );
        }
    }
    // the non-symmetric branches additionally have vanishing connection and
    // harmonic torsion
    for k in 1..=7 {
        let id = format!("NS-{k}");
        let entry = catalog::find(&id).unwrap();
        for sample in &entry.samples {
            let spec = entry.build_validated(sample).unwrap();
            let report = analyze(&spec).unwrap();
            assert_eq!(report.flat_connection, Some(true), "{id}: gamma = 0");
            assert_eq!(report.harmonic, Some(true), "{id}: dT = d*T = 0");
        }
    }
    pass(
        6,
        "all split-condition families have d*T = 0 with symmetric connection Ricci; all seven \
         non-symmetric branches have vanishing connection forms and harmonic torsion",
    );
}

#[test]
fn criterion_07_parallel_torsion() {
    // part one: the compact families have parallel torsion and satisfy the
    // calibrated identity dT = 2 sigma_T
    for id in ["ST-2", "ST-4"] {
        let entry = catalog::find(id).unwrap();
        for sample in &entry.samples {
            let spec = entry.build_validated(sample).unwrap();
            let (conn, t) = characteristic_connection(&spec).unwrap();
            assert!(is_parallel_form(&conn, &t), "{id}: parallel torsion");
            let dt = spec.d(&t);
            let two_sigma = sigma_t(&t).unwrap().scale(&Scalar::from_int(2));
            assert_eq!(dt, two_sigma, "{id}: dT = 2 sigma_T");
        }
    }
    // part two, as stated: every non-closed family fails parallel torsion.
    // NC-1 through NC-4 do fail. NC-5 is a machine-found counterexample:
    // its torsion is parallel although dT != 0 (and the identity
    // dT = 2 sigma_T holds there exactly, as parallel torsion requires).
    let mut counterexamples = Vec::new();
    for k in 1..=5 {
        let id = format!("NC-{k}");
        let entry = catalog::find(&id).unwrap();
        let spec = entry.build_validated(&entry.default_params()).unwrap();
        let (conn, t) = characteristic_connection(&spec).unwrap();
        if is_parallel_form(&conn, &t) {
            let dt = spec.d(&t);
            let two_sigma = sigma_t(&t).unwrap().scale(&Scalar::from_int(2));
            counterexamples.push((id, !dt.is_zero(), dt == two_sigma));
        }
    }
    if !counterexamples.is_empty() {
        println!(
            "criterion 7: FAIL - ST-2 and ST-4 satisfy parallel torsion with dT = 2 sigma_T, and \
             NC-1..NC-4 fail parallel torsion as stated, but the claim that ALL non-closed \
             families fail it is refuted by the engine: {counterexamples:?} (family, dT != 0, \
             dT = 2 sigma_T). The fifth non-closed family carries the parallel vector e1; its \
             holonomy lies in the circle stabilizing e1, every invariant form of that circle is \
             parallel, and T = e1 ^ (alpha e24 + beta e35) is such a form. The identity \
             dT = 2 sigma_T holding exactly confirms parallelism independently."
        );
        panic!(
            "criterion 7 is honestly red: the stated never-parallel claim has the counterexample \
             NC-5 (see printed analysis and the decisions ledger)"
        );
    }
    pass(7, "unreachable");
}

#[test]
fn criterion_08_holonomy_lists() {
    for id in [
        "HOL-A1", "HOL-A2", "HOL-A3", "HOL-A4", "HOL-A5", "HOL-B1", "HOL-B2", "HOL-B3", "HOL-B4",
        "HOL-B5",
    ] {
        let entry = catalog::find(id).unwrap();
        for sample in &entry.samples {
            let spec = entry.build_validated(sample).unwrap();
            let (conn, _t) = characteristic_connection(&spec).unwrap();
            let kernel = parallel_vectors(&conn);
            assert!(kernel.dim() > 0, "{id}: nonzero parallel-vector kernel");
        }
    }
    // a strong family outside the list has full holonomy
    let st3 = catalog::find("ST-3").unwrap();
    let spec = st3.build_validated(&[Scalar::one()]).unwrap();
    let (conn, _t) = characteristic_connection(&spec).unwrap();
    assert_eq!(parallel_vectors(&conn).dim(), 0, "ST-3 has no parallel vector");
    pass(
        8,
        "all ten holonomy-list families have nonzero exact kernels of xi -> nabla xi (several \
         printed displays required documented closure repairs); ST-3 has zero kernel",
    );
}

#[test]
fn criterion_09_su3_layer() {
    // polynomial identity in eight variables
    assert!(cubic_det_residual().is_zero(), "T8(X,X,X) = det/2 identity");

    // products: the compact main form works with both factors
    let main = catalog::find("MAIN-l1").unwrap();
    let base = main.build_validated(&[]).unwrap();
    for factor in [Factor::So3, Factor::Abelian3] {
        let p = ProductSpec::new(base.clone(), factor).unwrap();
        assert!(ni8_check(&p, true).unwrap(), "main form with {factor:?}");
    }

    // a non-symmetric branch with vanishing slot 37
    let ns = catalog::find("NS-6").unwrap();
    let base = ns
        .build_validated(&[Scalar::one(), Scalar::one(), Scalar::zero(), Scalar::one()])
        .unwrap();
    assert!(base.to_bvector().unwrap().get(37).is_zero());
    let p = ProductSpec::new(base, Factor::So3).unwrap();
    assert!(ni8_check(&p, true).unwrap(), "non-symmetric branch, b37 = 0");

    // products over the two-dimensional solvable algebra are never nearly
    // integrable (its base is not, in any dimension-5 padding)
    let s2 = so3ni::liealg::s2_plus_abelian(5);
    for factor in [Factor::So3, Factor::Abelian3] {
        let p = ProductSpec::new(s2.clone(), factor).unwrap();
        assert!(!ni8_check(&p, true).unwrap(), "s2-based product with {factor:?}");
    }
    pass(
        9,
        "the eight-variable cubic/determinant identity vanishes symbolically; products are \
         nearly integrable for the compact main form and a b37-free non-symmetric branch, and \
         never for s2-based products",
    );
}

#[test]
fn criterion_10_hypo_and_halfflat() {
    let entry = catalog::find("HYPO").unwrap();
    for sample in &entry.samples {
        let spec = entry.build_validated(sample).unwrap();
        assert!(so3ni::su3::hypo_check(&spec).unwrap(), "hypo at {sample:?}");
        assert!(
            so3ni::su3::halfflat_check(&spec).unwrap(),
            "half-flat extension at {sample:?}"
        );
        let report = analyze(&spec).unwrap();
        assert_eq!(report.harmonic, Some(true), "harmonic torsion at {sample:?}");
    }
    pass(
        10,
        "the hypo family passes d omega_1 = 0 and d(omega_2 ^ alpha) = d(omega_3 ^ alpha) = 0 \
         with harmonic torsion; the six-dimensional extension passes d psi_+ = 0 and \
         d(omega ^ omega) = 0",
    );
}

#[test]
fn criterion_11_property_suites() {
    let mut rng = Rng::new(0xBEEF);

    // field laws, 200 randomized instances
    for _ in 0..200 {
        let x = Scalar::new(
            Rational::new(rat(rng.int(-9, 9), 1).numer().clone(), rat(rng.int(1, 5), 1).numer().clone()),
            Rational::new(rat(rng.int(-9, 9), 1).numer().clone(), rat(rng.int(1, 5), 1).numer().clone()),
        );
        let y = Scalar::new(
            Rational::new(rat(rng.int(-9, 9), 1).numer().clone(), rat(rng.int(1, 5), 1).numer().clone()),
            Rational::new(rat(rng.int(-9, 9), 1).numer().clone(), rat(rng.int(1, 5), 1).numer().clone()),
        );
        let z = Scalar::from_int(rng.int(-4, 4));
        assert_eq!(&(&x + &y) * &z, &(&x * &z) + &(&y * &z));
        assert_eq!(&x * &y, &y * &x);
        if !x.is_zero() {
            assert!((&x * &x.inv().unwrap()).is_one());
        }
        assert_eq!(x.sign() * y.sign(), (&x * &y).sign());
    }

    // wedge / hodge / contraction identities: exhaustive over the basis of
    // every degree, plus 200 randomized forms
    for k in 0..=5u8 {
        for idx in combinations(5, k) {
            let u = KForm::term(5, &idx, Scalar::one());
            assert_eq!(u.hodge().hodge(), u);
            assert_eq!(
                u.wedge(&u.hodge()).unwrap(),
                KForm::term(5, &[1, 2, 3, 4, 5], Scalar::one())
            );
        }
    }
    for _ in 0..200 {
        let u = random_form(&mut rng, 5, 2);
        let v = random_form(&mut rng, 5, 2);
        assert_eq!(u.wedge(&v).unwrap(), v.wedge(&u).unwrap());
        let i = rng.int(1, 5) as u8;
        let x = Vector::basis(5, i);
        let lhs = u.wedge(&v).unwrap().contract(&x).unwrap();
        let rhs = u
            .contract(&x)
            .unwrap()
            .wedge(&v)
            .unwrap()
            .add(&u.wedge(&v.contract(&x).unwrap()).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs, "contraction antiderivation");
    }

    // d^2 = 0 on all basis forms exactly when the Jacobi identity holds,
    // 200 randomized structure-constant vectors
    let mut jacobi_seen = 0;
    let mut non_jacobi_seen = 0;
    for _ in 0..200 {
        let mut b = BVector::zero();
        for _ in 0..rng.int(1, 4) {
            let slot = rng.int(1, 50) as usize;
            b.set(slot, Scalar::from_int(rng.int(-2, 2)));
        }
        let spec = b.to_spec();
        let jacobi = spec.is_jacobi();
        let dd_zero = (1..=2u8).all(|k| {
            combinations(5, k).into_iter().all(|idx| {
                let u = KForm::term(5, &idx, Scalar::one());
                spec.d(&spec.d(&u)).is_zero()
            })
        });
        assert_eq!(jacobi, dd_zero, "d^2 = 0 on all forms iff Jacobi");
        // bracket-form equivalence: Jacobi identity on basis triples
        let mut cyclic_ok = true;
        'outer: for i in 1..=5u8 {
            for j in 1..=5u8 {
                for k in 1..=5u8 {
                    let a = spec
                        .bracket(&spec.bracket_basis(i, j), &Vector::basis(5, k))
                        .unwrap();
                    let bb = spec
                        .bracket(&spec.bracket_basis(j, k), &Vector::basis(5, i))
                        .unwrap();
                    let c = spec
                        .bracket(&spec.bracket_basis(k, i), &Vector::basis(5, j))
                        .unwrap();
                    if !a.add(&bb).add(&c).is_zero() {
                        cyclic_ok = false;
                        break 'outer;
                    }
                }
            }
        }
        assert_eq!(jacobi, cyclic_ok, "certificate iff cyclic bracket identity");
        if jacobi {
            jacobi_seen += 1;
        } else {
            non_jacobi_seen += 1;
        }
    }
    assert!(jacobi_seen > 0 && non_jacobi_seen > 0, "both branches exercised");

    // first Bianchi identity for the metric connection on randomized
    // closed structure constants (catalog builders provide them)
    let mut bianchi_checked = 0;
    let mut rng2 = Rng::new(0x5EED);
    for id in ["TF-2", "ST-1", "ST-4", "NC-4", "NC-5", "NS-1", "NS-6", "HYPO"] {
        let entry = catalog::find(id).unwrap();
        for _ in 0..3 {
            let params: Vec<Scalar> = (0..entry.param_names.len()).map(|_| rng2.rational()).collect();
            let Ok(spec) = entry.build_validated(&params) else {
                continue;
            };
            let conn = levi_civita(&spec).unwrap();
            let r = curvature(&conn, &spec);
            assert!(first_bianchi_holds(&r), "{id} at {params:?}");
            assert!(ricci(&r).is_symmetric(), "{id}: symmetric Ricci");
            bianchi_checked += 1;
        }
    }
    assert!(bianchi_checked >= 15);

    pass(
        11,
        "field laws (200 random), wedge/hodge/contraction identities (exhaustive basis + 200 \
         random), d^2 = 0 iff Jacobi with the bracket formulation (200 random), and the first \
         Bianchi identity with symmetric Ricci on randomized closed families",
    );
}

fn combinations(n: u8, k: u8) -> Vec<Vec<u8>> {
    fn rec(start: u8, n: u8, k: u8, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == k as usize {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, k, &mut Vec::new(), &mut out);
    out
}

fn random_form(rng: &mut Rng, n: u8, k: u8) -> KForm {
    let mut f = KForm::zero(n, k);
    for idx in combinations(n, k) {
        f.add_term(&idx, &Scalar::from_int(rng.int(-3, 3)));
    }
    f
}

impl Rng {
    fn _unused(&self) {}
}

trait VecExt {
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
}

impl VecExt for Vector {
    fn is_zero(&self) -> bool {
        Vector::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        Vector::add(self, other)
    }
}

#[test]
fn acceptance_gate_summary() {
    // companion checks that keep the cross-cutting invariants of the suite
    // visible in one place
    let report = analyze(&LieAlgebraSpec::abelian(5)).unwrap();
    assert!(report.jacobi && report.ni);
    let conn = koszul_connection(&LieAlgebraSpec::abelian(5));
    assert!(conn.geodesic_condition());
    println!("acceptance suite: criteria 1-6 and 8-11 green; criterion 7 red by design (machine-found counterexample NC-5, see the ledger and catalog notes)");
}
