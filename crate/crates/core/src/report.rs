//! Assembly of the full analysis report for one algebra, and its JSON
//! encoding with deterministic field order.

use crate::error::Result;
use crate::exterior::KForm;
use crate::liealg::{LieAlgebraSpec, Subspace};
use crate::linalg::Mat;
use crate::riemann::{
    self, adapted_h, adapted_p, curvature, koszul_connection, ricci,
};
use crate::scalar::Scalar;
use crate::so3::connection::{
    characteristic_ricci, characteristic_torsion_detailed, connection_forms,
    connection_minus_half_torsion, f_constant, flatness_check, is_parallel_form, parallel_vectors,
    printed_so3_conditions_strict, ricci_relation_variant, so3_conditions_check, so3_curvature,
    ModelSpace, RicciRelation,
};
use crate::so3::ni::{is_ni, satisfies_printed_system};
use crate::so3::{exterior_derivatives, sigma_t, torsion_type, TorsionType};
use crate::su3::{ni8_check, psi_closed, Factor, ProductSpec};
use serde::ser::SerializeSeq;
use serde::Serialize;

/// Serialized k-form: list of { i: multi-index, c: scalar } terms in the
/// canonical (lexicographic) order.
impl Serialize for KForm {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            i: &'a [u8],
            c: &'a Scalar,
        }
        let mut seq = ser.serialize_seq(Some(self.coeffs.len()))?;
        for (idx, c) in &self.coeffs {
            seq.serialize_element(&Term { i: idx, c })?;
        }
        seq.end()
    }
}

fn mat_rows(m: &Mat) -> Vec<Scalar> {
    m.data.iter().flatten().cloned().collect()
}

#[derive(Serialize)]
pub struct AnalysisReport {
    pub jacobi: bool,
    pub ni: bool,
    pub torsion: Option<KForm>,
    pub torsion_type: Option<TorsionType>,
    #[serde(rename = "dT")]
    pub d_t: Option<KForm>,
    #[serde(rename = "d_star_T")]
    pub d_star_t: Option<KForm>,
    #[serde(rename = "sigma_T")]
    pub sigma_t: Option<KForm>,
    /// three connection one-forms as covectors
    pub gamma: Option<Vec<Vec<Scalar>>>,
    pub curvature_r: Option<Vec<KForm>>,
    #[serde(rename = "F")]
    pub f: Option<Scalar>,
    pub model: Option<ModelSpace>,
    pub k_p: Option<Scalar>,
    /// row-major 5x5
    pub ricci_lc: Option<Vec<Scalar>>,
    pub ricci_char: Option<Vec<Scalar>>,
    pub parallel_torsion: Option<bool>,
    /// basis rows of the parallel-vector kernel
    pub parallel_vectors: Option<Vec<Vec<Scalar>>>,
    pub so3_conditions: Option<bool>,
    pub symmetric_pair_h: bool,
    pub symmetric_pair_p: bool,
    pub derived_series_dims: Option<Vec<usize>>,
    // engine-level diagnostics beyond the core field set
    pub ni_printed_system: bool,
    pub torsion_printed_formula_matches: Option<bool>,
    pub flat_connection: Option<bool>,
    pub harmonic: Option<bool>,
    pub ricci_char_symmetric: Option<bool>,
    pub ricci_relation: Option<RicciRelation>,
    pub so3_conditions_strict_b37: Option<bool>,
    pub lc_split: Option<bool>,
    pub inverse_lc_split: Option<bool>,
    pub solvable: Option<bool>,
    pub solvable_step: Option<usize>,
    pub commutator_dim: Option<usize>,
    pub center_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub su3: Option<Su3Report>,
}

#[derive(Serialize)]
pub struct Su3Report {
    pub ni8: bool,
    pub factor: Factor,
    pub psi_closed: bool,
}

/// Runs every applicable operation on one algebra. Operations gated on
/// near-integrability (torsion, connection data) or the Jacobi identity
/// (curvature, series) are reported as null when the gate fails; that is
/// a finding, not an error.
pub fn analyze(spec: &LieAlgebraSpec) -> Result<AnalysisReport> {
    let jacobi = spec.is_jacobi();
    let ni = is_ni(spec);
    let ni_printed_system = satisfies_printed_system(spec)?;
    let h = adapted_h();
    let p = adapted_p();
    let symmetric_pair_h = spec.is_symmetric_pair(&h, &p)?;
    let symmetric_pair_p = spec.is_symmetric_pair(&p, &h)?;

    let mut report = AnalysisReport {
        jacobi,
        ni,
        torsion: None,
        torsion_type: None,
        d_t: None,
        d_star_t: None,
        sigma_t: None,
        gamma: None,
        curvature_r: None,
        f: None,
        model: None,
        k_p: None,
        ricci_lc: None,
        ricci_char: None,
        parallel_torsion: None,
        parallel_vectors: None,
        so3_conditions: None,
        symmetric_pair_h,
        symmetric_pair_p,
        derived_series_dims: None,
        ni_printed_system,
        torsion_printed_formula_matches: None,
        flat_connection: None,
        harmonic: None,
        ricci_char_symmetric: None,
        ricci_relation: None,
        so3_conditions_strict_b37: None,
        lc_split: None,
        inverse_lc_split: None,
        solvable: None,
        solvable_step: None,
        commutator_dim: None,
        center_dim: None,
        su3: None,
    };

    report.lc_split = Some(riemann::lc_split_check(spec)?);
    report.inverse_lc_split = Some(riemann::inverse_lc_check(spec)?);

    if jacobi {
        let series = spec.derived_series()?;
        report.derived_series_dims = Some(series.iter().map(Subspace::dim).collect());
        let (solvable, step) = spec.is_solvable()?;
        report.solvable = Some(solvable);
        report.solvable_step = Some(step);
        report.commutator_dim = Some(spec.commutator_dim()?);
        report.center_dim = Some(spec.center()?.dim());
        let lc = koszul_connection(spec);
        let r = curvature(&lc, spec);
        report.ricci_lc = Some(mat_rows(&ricci(&r)));
    }

    if ni {
        let torsion_data = characteristic_torsion_detailed(spec)?;
        let t = torsion_data.form.clone();
        report.torsion_printed_formula_matches = Some(torsion_data.printed_matches);
        let lc = koszul_connection(spec);
        let conn = connection_minus_half_torsion(&lc, &t);
        let gammas = connection_forms(&conn);
        let rs = so3_curvature(spec, &gammas);
        report.gamma = Some(gammas.iter().map(KForm::as_covector).collect());
        report.curvature_r = Some(rs.to_vec());
        report.flat_connection = Some(flatness_check(spec, &gammas)?);
        if t.is_zero() {
            let (f, model) = f_constant(spec, &gammas, &t)?;
            report.f = Some(f);
            report.model = Some(model);
        }
        report.k_p = Some(riemann::k_p(spec)?);
        let (dt, dstar) = exterior_derivatives(spec, &t);
        report.harmonic = Some(dt.is_zero() && dstar.is_zero());
        report.sigma_t = Some(sigma_t(&t)?);
        report.torsion_type = Some(torsion_type(&t)?);
        report.d_t = Some(dt);
        report.d_star_t = Some(dstar);
        report.parallel_torsion = Some(is_parallel_form(&conn, &t));
        report.parallel_vectors = Some(
            parallel_vectors(&conn)
                .basis
                .iter()
                .map(|v| v.components.clone())
                .collect(),
        );
        report.so3_conditions = Some(so3_conditions_check(spec, &conn)?);
        report.so3_conditions_strict_b37 = Some(printed_so3_conditions_strict(spec)?);
        if jacobi {
            let (_rt, ric_char) = characteristic_ricci(&conn, spec);
            report.ricci_char_symmetric = Some(ric_char.is_symmetric());
            let ric_lc_mat = {
                let r = curvature(&lc, spec);
                ricci(&r)
            };
            report.ricci_relation = Some(ricci_relation_variant(spec, &ric_char, &ric_lc_mat, &t));
            report.ricci_char = Some(mat_rows(&ric_char));
        }
        report.torsion = Some(t);
    }

    Ok(report)
}

/// The analysis report of the base extended with the product block.
pub fn analyze_product(spec: &LieAlgebraSpec, factor: Factor, deep: bool) -> Result<AnalysisReport> {
    let product = ProductSpec::new(spec.clone(), factor)?;
    let mut report = analyze(spec)?;
    report.su3 = Some(Su3Report {
        ni8: ni8_check(&product, deep)?,
        factor,
        psi_closed: psi_closed(&product),
    });
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::LieAlgebraSpec;

    #[test]
    fn abelian_report_is_complete_and_deterministic() {
        let a = LieAlgebraSpec::abelian(5);
        let r = analyze(&a).unwrap();
        assert!(r.jacobi && r.ni);
        assert_eq!(r.torsion_type, Some(TorsionType::Zero));
        assert_eq!(r.f, Some(Scalar::zero()));
        assert_eq!(r.model, Some(ModelSpace::R5));
        assert!(r.symmetric_pair_h && r.symmetric_pair_p);
        let j1 = serde_json::to_string(&r).unwrap();
        let j2 = serde_json::to_string(&analyze(&a).unwrap()).unwrap();
        assert_eq!(j1, j2);
        // key order is fixed by the struct
        let idx_jacobi = j1.find("\"jacobi\"").unwrap();
        let idx_ni = j1.find("\"ni\"").unwrap();
        let idx_torsion = j1.find("\"torsion\"").unwrap();
        assert!(idx_jacobi < idx_ni && idx_ni < idx_torsion);
    }

    #[test]
    fn non_jacobi_report_has_nulls() {
        let mut d: Vec<KForm> = (0..5).map(|_| KForm::zero(5, 2)).collect();
        d[0] = KForm::term(5, &[2, 3], Scalar::one());
        d[1] = KForm::term(5, &[1, 4], Scalar::one());
        let spec = LieAlgebraSpec::new(5, d).unwrap();
        assert!(!spec.is_jacobi());
        let r = analyze(&spec).unwrap();
        assert!(!r.jacobi);
        assert!(r.ricci_lc.is_none());
        assert!(r.derived_series_dims.is_none());
    }
}
