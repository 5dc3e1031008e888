//! Bounded grid search over structure constants: enumerate b-vectors on a
//! support pattern, keep the nearly integrable ones, then the closed
//! ones, then apply an optional structure filter. A finite-grid oracle,
//! not a symbolic solver.

use crate::error::{Error, Result};
use crate::liealg::BVector;
use crate::report::{analyze, AnalysisReport};
use crate::scalar::Scalar;
use crate::so3::TorsionType;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchFilter {
    Pure7,
    Pure3,
    Strong,
    Parallel,
}

impl std::str::FromStr for SearchFilter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pure7" => Ok(SearchFilter::Pure7),
            "pure3" => Ok(SearchFilter::Pure3),
            "strong" => Ok(SearchFilter::Strong),
            "parallel" => Ok(SearchFilter::Parallel),
            other => Err(Error::Parse(format!("unknown filter {other:?}"))),
        }
    }
}

pub struct SearchConfig {
    /// slots (1-based, in 1..=50) allowed to be nonzero
    pub support: Vec<usize>,
    /// value set for each supported slot
    pub values: Vec<Scalar>,
    pub filter: Option<SearchFilter>,
    /// abort above this many grid points
    pub cap: u128,
}

pub struct SearchHit {
    pub b: BVector,
    pub report: AnalysisReport,
}

fn filter_accepts(filter: SearchFilter, report: &AnalysisReport) -> bool {
    match filter {
        SearchFilter::Pure7 => report.torsion_type == Some(TorsionType::Pure7),
        SearchFilter::Pure3 => report.torsion_type == Some(TorsionType::Pure3),
        SearchFilter::Strong => {
            report.d_t.as_ref().is_some_and(|d| d.is_zero())
                && report.torsion.as_ref().is_some_and(|t| !t.is_zero())
        }
        SearchFilter::Parallel => report.parallel_torsion == Some(true),
    }
}

/// Enumerates the grid in odometer order and returns the accepted points
/// sorted by their full b-vector.
pub fn search(config: &SearchConfig) -> Result<Vec<SearchHit>> {
    for &slot in &config.support {
        if !(1..=50).contains(&slot) {
            return Err(Error::Parse(format!("support slot {slot} out of range 1..=50")));
        }
    }
    if config.values.is_empty() || config.support.is_empty() {
        return Ok(Vec::new());
    }
    let size = (config.values.len() as u128)
        .checked_pow(config.support.len() as u32)
        .unwrap_or(u128::MAX);
    if size > config.cap {
        return Err(Error::SearchTooLarge(size, config.cap));
    }
    let mut support = config.support.clone();
    support.sort_unstable();
    support.dedup();

    let mut hits = Vec::new();
    let n = config.values.len();
    let mut odometer = vec![0usize; support.len()];
    loop {
        let mut b = BVector::zero();
        for (slot, &v) in support.iter().zip(&odometer) {
            b.set(*slot, config.values[v].clone());
        }
        let spec = b.to_spec();
        if crate::so3::ni::is_ni(&spec) && spec.is_jacobi() {
            let report = analyze(&spec)?;
            let keep = config.filter.is_none_or(|f| filter_accepts(f, &report));
            if keep {
                hits.push(SearchHit { b, report });
            }
        }
        // advance
        let mut i = 0;
        loop {
            if i == odometer.len() {
                // done
                hits.sort_by(|x, y| x.b.0.cmp(&y.b.0));
                return Ok(hits);
            }
            odometer[i] += 1;
            if odometer[i] < n {
                break;
            }
            odometer[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    #[test]
    fn empty_bounds_give_empty_results() {
        let config = SearchConfig {
            support: vec![6, 13],
            values: vec![],
            filter: None,
            cap: 1000,
        };
        assert!(search(&config).unwrap().is_empty());
    }

    #[test]
    fn cap_is_enforced() {
        let config = SearchConfig {
            support: (1..=20).collect(),
            values: vec![Scalar::zero(), Scalar::one()],
            filter: None,
            cap: 1000,
        };
        assert!(matches!(search(&config), Err(Error::SearchTooLarge(_, _))));
    }

    #[test]
    fn finds_the_compact_strong_family_point() {
        // support of the second strong family: slots 6 (e24 of de1 is -a,
        // via value -1), 13, 31; values {0, 1, -1}
        let config = SearchConfig {
            support: vec![6, 13, 31],
            values: vec![Scalar::zero(), Scalar::one(), -Scalar::one()],
            filter: Some(SearchFilter::Strong),
            cap: 1000,
        };
        let hits = search(&config).unwrap();
        // the ST-2 point b6 = -1, b13 = 1, b31 = -1 (a = 1) must be found
        let target = {
            let mut b = crate::liealg::BVector::zero();
            b.set(6, -Scalar::one());
            b.set(13, Scalar::one());
            b.set(31, -Scalar::one());
            b
        };
        assert!(hits.iter().any(|h| h.b == target), "{} hits", hits.len());
        // determinism: running twice gives the same order
        let again = search(&config).unwrap();
        assert_eq!(
            hits.iter().map(|h| h.b.0.clone()).collect::<Vec<_>>(),
            again.iter().map(|h| h.b.0.clone()).collect::<Vec<_>>()
        );
    }

    #[test]
    fn pure7_filter_rediscovers_a_branch_point() {
        // the fifth pure-type branch lives on slots 19/45 (= b19) and
        // 30/39/48 (= b39): search its support
        let config = SearchConfig {
            support: vec![19, 27, 30, 39, 45, 48],
            values: vec![Scalar::zero(), Scalar::one(), -Scalar::one()],
            filter: Some(SearchFilter::Pure7),
            cap: 10000,
        };
        let hits = search(&config).unwrap();
        let target = crate::catalog::find("NS-P7-5")
            .unwrap()
            .build_validated(&[Scalar::one(), Scalar::one()])
            .unwrap()
            .to_bvector()
            .unwrap();
        assert!(hits.iter().any(|h| h.b == target));
    }
}
