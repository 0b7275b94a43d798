//! One executable check per identity, each comparing two independent
//! computations as exact polynomials.

mod checks;
mod dense;
mod report;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use checks::*;
pub use report::{Failure, GridPoint, IdentityReport, Observation, Params, ReportRecord, Status};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum IdentityId {
    /// `G_n(x) = sum_k C(n,k) G_k x^(n-k)`
    GenoBinom,
    /// `G'_n(x) = sum_k C(n,k) x^(n-k) G'_k` for the second-kind family
    SkgBinom,
    /// second-kind `G'_n(x) = 2^(n-1) G_n((x+1)/2)`
    SkgRescale,
    /// the same rescaling expanded as a trinomial double sum
    SkgTripleMultinomial,
    /// second-kind `G'_n(x) = n E'_(n-1)(x)`
    SkgEulerRatio,
    /// addition theorem in the order and the argument
    Lemma1Addition,
    /// Euler-Genocchi convolution with a shifted argument
    Lemma1EulerConv,
    /// Hermite-based Genocchi over `n` equals Hermite-based Euler at `n - 1`
    HgEulerQuotient,
    /// `d/dx _H G_n = n _H G_(n-1)`
    HgDerivative,
    /// `j = 2`, `a = 1` floor sum over second-kind Genocchi polynomials
    Thm1FloorSum,
    /// addition theorem in order and both arguments
    Thm2Addition,
    /// Hermite-based Genocchi as a convolution of numbers with `H^(2)`
    Thm3Convolution,
    /// Gould-Hopper heat equation `dF/dy = d^jF/dx^j`, `F(x, 0) = x^n`
    HeatEquation,
}

impl IdentityId {
    pub const ALL: [IdentityId; 13] = [
        IdentityId::GenoBinom,
        IdentityId::SkgBinom,
        IdentityId::SkgRescale,
        IdentityId::SkgTripleMultinomial,
        IdentityId::SkgEulerRatio,
        IdentityId::Lemma1Addition,
        IdentityId::Lemma1EulerConv,
        IdentityId::HgEulerQuotient,
        IdentityId::HgDerivative,
        IdentityId::Thm1FloorSum,
        IdentityId::Thm2Addition,
        IdentityId::Thm3Convolution,
        IdentityId::HeatEquation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::GenoBinom => "GENO_BINOM",
            IdentityId::SkgBinom => "SKG_BINOM",
            IdentityId::SkgRescale => "SKG_RESCALE",
            IdentityId::SkgTripleMultinomial => "SKG_TRIPLE_MULTINOMIAL",
            IdentityId::SkgEulerRatio => "SKG_EULER_RATIO",
            IdentityId::Lemma1Addition => "LEMMA1_ADDITION",
            IdentityId::Lemma1EulerConv => "LEMMA1_EULER_CONV",
            IdentityId::HgEulerQuotient => "HG_EULER_QUOTIENT",
            IdentityId::HgDerivative => "HG_DERIVATIVE",
            IdentityId::Thm1FloorSum => "THM1_FLOOR_SUM",
            IdentityId::Thm2Addition => "THM2_ADDITION",
            IdentityId::Thm3Convolution => "THM3_CONVOLUTION",
            IdentityId::HeatEquation => "HEAT_EQUATION",
        }
    }

    /// Parses `all` or a comma-separated list of names, returned in
    /// canonical order without duplicates.
    pub fn parse_list(s: &str) -> Result<Vec<IdentityId>> {
        if s.trim() == "all" {
            return Ok(IdentityId::ALL.to_vec());
        }
        let mut ids = s
            .split(',')
            .map(|part| part.trim().parse())
            .collect::<Result<Vec<IdentityId>>>()?;
        ids.sort();
        ids.dedup();
        Ok(ids)
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| {
                let valid: Vec<_> = IdentityId::ALL.iter().map(|id| id.name()).collect();
                Error::InvalidParameter(format!(
                    "unknown identity {s:?}; valid names: all, {}",
                    valid.join(", ")
                ))
            })
    }
}

/// Which kernels the order-addition identities are checked with. They
/// hold for the second-kind and the classical kernels alike.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LemmaReading {
    SecondKind,
    Classical,
    Both,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifierConfig {
    pub n_max: usize,
    pub a_max: u32,
    pub b_max: u32,
    /// Values of `j`; each must be at least 2.
    pub j_set: Vec<u32>,
    pub identities: Vec<IdentityId>,
    pub lemma_reading: LemmaReading,
    /// Orders at which the Hermite Euler quotient is run. Order 1 is a
    /// strict check; higher orders are recorded as observations.
    pub quotient_orders: Vec<u32>,
    /// Worker threads across identities; 1 runs sequentially.
    pub jobs: usize,
}

impl Default for VerifierConfig {
    fn default() -> Self {
        VerifierConfig {
            n_max: 24,
            a_max: 3,
            b_max: 3,
            j_set: vec![2, 3],
            identities: IdentityId::ALL.to_vec(),
            lemma_reading: LemmaReading::Both,
            quotient_orders: vec![1, 2],
            jobs: 1,
        }
    }
}

impl VerifierConfig {
    pub fn validate(&self) -> Result<()> {
        if let Some(j) = self.j_set.iter().find(|&&j| j < 2) {
            return Err(Error::InvalidParameter(format!(
                "identity checks need j >= 2, got {j}"
            )));
        }
        if self.jobs == 0 {
            return Err(Error::InvalidParameter("jobs must be at least 1".into()));
        }
        Ok(())
    }
}

/// Runs a single check and stamps its elapsed time.
pub fn run_one(id: IdentityId, config: &VerifierConfig) -> IdentityReport {
    let start = Instant::now();
    let mut report = match id {
        IdentityId::GenoBinom => check_genocchi_binomial(config.n_max),
        IdentityId::SkgBinom => check_second_kind_binomial(config.n_max),
        IdentityId::SkgRescale => check_rescale(config.n_max),
        IdentityId::SkgTripleMultinomial => check_triple_multinomial(config.n_max),
        IdentityId::SkgEulerRatio => check_euler_ratio(config.n_max),
        IdentityId::Lemma1Addition => check_lemma1_addition(
            config.n_max,
            config.a_max,
            config.b_max,
            config.lemma_reading,
        ),
        IdentityId::Lemma1EulerConv => {
            check_lemma1_euler_conv(config.n_max, config.a_max, config.lemma_reading)
        }
        IdentityId::HgEulerQuotient => {
            check_hermite_euler_quotient(config.n_max, &config.j_set, &config.quotient_orders)
        }
        IdentityId::HgDerivative => check_derivative(config.n_max, &config.j_set, config.a_max),
        IdentityId::Thm1FloorSum => check_thm1_floor_sum(config.n_max),
        IdentityId::Thm2Addition => {
            check_thm2_addition(config.n_max, &config.j_set, config.a_max, config.b_max)
        }
        IdentityId::Thm3Convolution => check_thm3_convolution(config.n_max, config.a_max),
        IdentityId::HeatEquation => check_heat_equation(config.n_max, &config.j_set),
    };
    report.elapsed = start.elapsed();
    report
}

/// Runs every selected identity; reports come back in canonical order
/// whatever the completion order.
pub fn run_all(config: &VerifierConfig) -> Result<Vec<IdentityReport>> {
    config.validate()?;
    let mut ids = config.identities.clone();
    ids.sort();
    ids.dedup();
    if config.jobs <= 1 {
        return Ok(ids.into_iter().map(|id| run_one(id, config)).collect());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
    Ok(pool.install(|| ids.par_iter().map(|&id| run_one(id, config)).collect()))
}
