//! Named verification suites.

mod abelian;
mod artin;
mod extension;
mod quotients;

use serde::{Deserialize, Serialize};

use crate::report::Report;

pub const DEFAULT_SEED: u64 = 20_240_601;
pub const DEFAULT_DMAX: u64 = 60;
pub const DEFAULT_MAXLEN: usize = 9;
pub const DEFAULT_SAMPLES: usize = 50;
/// Relator evaluations allowed for the degree-six classification.
pub const DEGREE_SIX_BUDGET: u64 = 20_000_000;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub n: Option<usize>,
    pub dmax: Option<u64>,
    pub maxlen: Option<usize>,
    pub seed: Option<u64>,
    /// Number of random words for `gtcomm`.
    pub samples: Option<usize>,
    #[serde(default)]
    pub enable_n6: bool,
}

impl Params {
    pub fn seed(&self) -> u64 {
        self.seed.unwrap_or(DEFAULT_SEED)
    }

    pub fn dmax(&self) -> u64 {
        self.dmax.unwrap_or(DEFAULT_DMAX)
    }

    pub fn maxlen(&self) -> usize {
        self.maxlen.unwrap_or(DEFAULT_MAXLEN)
    }

    pub fn samples(&self) -> usize {
        self.samples.unwrap_or(DEFAULT_SAMPLES)
    }

    /// `n` if given, otherwise `default`.
    pub fn strand_counts(&self, default: &[usize]) -> Vec<usize> {
        match self.n {
            Some(n) => vec![n],
            None => default.to_vec(),
        }
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SuiteError {
    #[error("unknown suite {0:?}; run `outbraid list` for the catalog")]
    Unknown(String),
}

pub struct SuiteInfo {
    pub name: &'static str,
    pub summary: &'static str,
    run: fn(&Params) -> Report,
}

const CATALOG: &[SuiteInfo] = &[
    SuiteInfo {
        name: "artin4",
        summary: "surjections B4 -> S4: three classes, epsilon values and kernels",
        run: artin::artin4,
    },
    SuiteInfo {
        name: "artin_n",
        summary: "surjections B_n -> S_n for n = 3, 5 (6 with --enable-n6): classes and kernels",
        run: artin::artin_n,
    },
    SuiteInfo {
        name: "b4s3",
        summary: "surjections B4 -> S3: one class, equal kernels, full twist in every kernel",
        run: artin::b4s3,
    },
    SuiteInfo {
        name: "beta43",
        summary: "the four-to-three strand maps, their compatibility, and the sphere diagram",
        run: quotients::beta43,
    },
    SuiteInfo {
        name: "p43ab",
        summary: "linking-number table of beta43 on pure braids and its kernel rank",
        run: quotients::p43ab,
    },
    SuiteInfo {
        name: "pi04",
        summary: "index-4 subgroup of the free product of three Z/2: table, presentation, abelianization",
        run: quotients::pi04,
    },
    SuiteInfo {
        name: "s4rep",
        summary: "S4 acting on Z^4 modulo the diagonal: 24 distinct integer matrices",
        run: quotients::s4rep,
    },
    SuiteInfo {
        name: "torsion",
        summary: "involutions in the free product of three Z/2 up to --maxlen",
        run: quotients::torsion,
    },
    SuiteInfo {
        name: "phinu",
        summary: "twists s_i -> s_i z^e: relators, image of the full twist, composition law",
        run: extension::phinu,
    },
    SuiteInfo {
        name: "splitting",
        summary: "sections of B_n/<z^d> -> B_n/<z> for d up to --dmax",
        run: extension::splitting,
    },
    SuiteInfo {
        name: "classorder",
        summary: "order of the extension class at level d, by search and by gcd",
        run: extension::classorder,
    },
    SuiteInfo {
        name: "transgression",
        summary: "cokernel of restriction Hom(B_n, Z/N) -> Hom(<z>, Z/N)",
        run: extension::transgression,
    },
    SuiteInfo {
        name: "gtcomm",
        summary: "commutation identity for seeded random commutator words f",
        run: extension::gtcomm,
    },
    SuiteInfo {
        name: "abelianizations",
        summary: "abelianizations of B_n, B_n/<z>, the free product and P4",
        run: abelian::abelianizations,
    },
];

/// Every suite with a one-line summary, in catalog order.
pub fn list_suites() -> Vec<(&'static str, &'static str)> {
    CATALOG.iter().map(|s| (s.name, s.summary)).collect()
}

/// Runs a catalog suite, or `all` for every suite in order.
pub fn run_suite(name: &str, params: &Params) -> Result<Report, SuiteError> {
    if name == "all" {
        let parts = CATALOG.iter().map(|s| (s.run)(params)).collect();
        return Ok(Report::merge("all", params_json(params), parts));
    }
    let suite = CATALOG
        .iter()
        .find(|s| s.name == name)
        .ok_or_else(|| SuiteError::Unknown(name.to_string()))?;
    Ok((suite.run)(params))
}

pub(crate) fn params_json(p: &Params) -> serde_json::Value {
    serde_json::to_value(p).expect("params serialize")
}

pub(crate) fn is_budget(e: &outbraid_core::Error) -> bool {
    matches!(e, outbraid_core::Error::BudgetExceeded { .. })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog() {
        let names: Vec<&str> = list_suites().iter().map(|s| s.0).collect();
        assert!(names.len() >= 13);
        assert!(names.contains(&"artin4"));
        assert!(names.contains(&"gtcomm"));
        assert_eq!(
            run_suite("nope", &Params::default()).unwrap_err(),
            SuiteError::Unknown("nope".into())
        );
    }
}
