//! Self-check suite: oracle agreement and the structural theorems on the
//! shipped fixtures and a batch of seeded random codes.

use std::collections::HashSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::code::{Cap, Z2Z4Code};
use crate::constructions::{random_code, random_self_orthogonal, from_self_orthogonal};
use crate::duality::{analyze, is_acd, is_gray_image_linear, sufficient_acd_by_rows, gram_matrix};
use crate::error::Result;
use crate::fixtures::Fixture;
use crate::oracle::{self, OracleConfig};
use crate::zring::MixedVector;

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub cap: Cap,
    pub seed: u64,
    pub random_codes: usize,
    pub oracle: OracleConfig,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { cap: Cap::DEFAULT, seed: 0, random_codes: 200, oracle: OracleConfig::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    /// First failing input, when one exists.
    pub detail: Option<String>,
}

impl CheckOutcome {
    fn from_failures(name: &'static str, failures: Vec<String>) -> Self {
        CheckOutcome { name, passed: failures.is_empty(), detail: failures.into_iter().next() }
    }
}

fn sample(cfg: &VerifyConfig) -> Vec<(String, Z2Z4Code)> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut codes: Vec<(String, Z2Z4Code)> = Fixture::ALL.iter().map(|f| (f.name().to_string(), f.code())).collect();
    let mut i = 0;
    while codes.len() < Fixture::ALL.len() + cfg.random_codes {
        let alpha = (i % 6) as usize;
        let beta = (i / 6 % 5) as usize;
        i += 1;
        if alpha + 2 * beta > cfg.oracle.ambient_bit_cap as usize {
            continue;
        }
        codes.push((format!("random #{i}"), random_code(&mut rng, alpha, beta)));
    }
    codes
}

fn describe(name: &str, c: &Z2Z4Code) -> String {
    let rows: Vec<String> = c.generators().iter().map(MixedVector::to_string).collect();
    format!("{name} {} [{}]", c.code_type(), rows.join("; "))
}

/// Runs every check. Errors (a cap hit) abort the suite.
pub fn run(cfg: &VerifyConfig) -> Result<Vec<CheckOutcome>> {
    let codes = sample(cfg);
    let mut dual = Vec::new();
    let mut acd = Vec::new();
    let mut linear = Vec::new();
    let mut vi = Vec::new();
    let mut dual_type = Vec::new();
    let mut statements = Vec::new();
    let mut sufficiency = Vec::new();

    for (name, c) in &codes {
        let d = c.dual();
        let brute: HashSet<MixedVector> = oracle::brute_dual(c, &cfg.oracle)?.into_iter().collect();
        let structural: HashSet<MixedVector> = d.codewords(cfg.cap)?.into_iter().collect();
        if brute != structural {
            dual.push(describe(name, c));
        }
        let is = is_acd(c, cfg.cap)?;
        if is != oracle::brute_is_acd(c, &cfg.oracle)? {
            acd.push(describe(name, c));
        }
        let image = oracle::brute_image(c, &cfg.oracle)?;
        if is_gray_image_linear(c) != oracle::brute_linearity(&image, &cfg.oracle)? {
            linear.push(describe(name, c));
        }
        let report = analyze(c, cfg.cap)?;
        if report.dual_image_equals_binary_dual != oracle::brute_dual_image_is_binary_dual(c, &cfg.oracle)? {
            vi.push(describe(name, c));
        }
        if d.code_type() != c.code_type().dual() || d.dual() != *c || c.log2_size() + d.log2_size() != c.ambient_log2_size() {
            dual_type.push(describe(name, c));
        }
        if is && !report.statements.all_agree() {
            statements.push(describe(name, c));
        }
        if (sufficient_acd_by_rows(c) || gram_matrix(c).is_invertible()) && !is {
            sufficiency.push(describe(name, c));
        }
    }

    let mut constructions = Vec::new();
    for alpha in 1..=8 {
        for delta in 0..=alpha / 2 {
            let gx = random_self_orthogonal(alpha, delta, cfg.seed ^ (alpha * 16 + delta) as u64)?;
            let c = from_self_orthogonal(alpha, &gx)?;
            let want = crate::code::CodeType { alpha, beta: delta, gamma: 0, delta, kappa: 0 };
            if c.code_type() != want || !is_acd(&c, cfg.cap)? || !is_acd(&c.dual(), cfg.cap)? {
                constructions.push(describe("self-orthogonal-x", &c));
            }
        }
    }

    Ok(vec![
        CheckOutcome::from_failures("dual matches ambient scan", dual),
        CheckOutcome::from_failures("ACD decision matches oracle", acd),
        CheckOutcome::from_failures("image linearity matches oracle", linear),
        CheckOutcome::from_failures("dual image vs binary dual matches oracle", vi),
        CheckOutcome::from_failures("dual type and double dual", dual_type),
        CheckOutcome::from_failures("six statements agree on ACD codes", statements),
        CheckOutcome::from_failures("sufficient conditions imply ACD", sufficiency),
        CheckOutcome::from_failures("self-orthogonal construction", constructions),
    ])
}
