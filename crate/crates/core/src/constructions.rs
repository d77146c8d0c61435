//! Families of ACD codes with known type, and random inputs for tests.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::code::{build_code, BinaryCode, CodeType, QuaternaryCode, Z2Z4Code};
use crate::error::{Error, Result};
use crate::linalg::gf2_rank;
use crate::zring::{BinaryVector, MixedVector, Z4};

fn check_lengths(alpha: usize, rows: &[BinaryVector]) -> Result<()> {
    match rows.iter().find(|r| r.len() != alpha) {
        Some(r) => Err(Error::LengthMismatch { expected: alpha, found: r.len() }),
        None => Ok(()),
    }
}

fn independent(rows: &[BinaryVector]) -> bool {
    let width = rows.first().map_or(0, BinaryVector::len);
    gf2_rank(rows.iter().map(|r| r.bits().to_vec()), width) == rows.len()
}

/// `(G_X | I_delta)` with the basis rows on top and zero binary parts below.
fn with_identity(alpha: usize, gx: &[BinaryVector], delta: usize) -> Result<Z2Z4Code> {
    let rows: Vec<MixedVector> = (0..delta)
        .map(|i| {
            let binary = gx.get(i).map_or_else(|| vec![false; alpha], |b| b.bits().to_vec());
            let mut quaternary = vec![Z4::ZERO; delta];
            quaternary[i] = Z4::ONE;
            MixedVector::new(binary, quaternary)
        })
        .collect();
    build_code(alpha, delta, &rows)
}

/// ACD code of type `(alpha, delta; 0, delta; 0)` from independent binary rows.
pub fn free_acd_from_basis(alpha: usize, basis: &[BinaryVector], delta: usize) -> Result<Z2Z4Code> {
    check_lengths(alpha, basis)?;
    if !independent(basis) {
        return Err(Error::DependentBasis);
    }
    if delta < basis.len() {
        return Err(Error::DeltaTooSmall { delta, basis: basis.len() });
    }
    with_identity(alpha, basis, delta)
}

/// `(G_X | I_delta)` for a generator matrix of a binary self-orthogonal code.
pub fn from_self_orthogonal(alpha: usize, gx: &[BinaryVector]) -> Result<Z2Z4Code> {
    check_lengths(alpha, gx)?;
    for (i, u) in gx.iter().enumerate() {
        for (j, v) in gx.iter().enumerate().skip(i) {
            if u.dot(v) {
                return Err(Error::NotSelfOrthogonal(i, j));
            }
        }
    }
    if !independent(gx) {
        return Err(Error::DependentBasis);
    }
    with_identity(alpha, gx, gx.len())
}

/// `(I_alpha | 2 I_alpha)`.
pub fn double_identity(alpha: usize) -> Result<Z2Z4Code> {
    if alpha == 0 {
        return Err(Error::Infeasible("alpha must be positive".into()));
    }
    let rows: Vec<MixedVector> = (0..alpha)
        .map(|i| {
            let mut binary = vec![false; alpha];
            binary[i] = true;
            let mut quaternary = vec![Z4::ZERO; alpha];
            quaternary[i] = Z4::TWO;
            MixedVector::new(binary, quaternary)
        })
        .collect();
    build_code(alpha, alpha, &rows)
}

/// `B x Q` with block-diagonal generators.
pub fn separable_product(b: &BinaryCode, q: &QuaternaryCode) -> Z2Z4Code {
    let (alpha, beta) = (b.length(), q.length());
    let mut rows: Vec<MixedVector> =
        b.basis().iter().map(|r| MixedVector::new(r.bits().to_vec(), vec![Z4::ZERO; beta])).collect();
    rows.extend(q.code().generators().iter().map(|g| MixedVector::new(vec![false; alpha], g.quaternary().to_vec())));
    build_code(alpha, beta, &rows).expect("rows have the product shape")
}

/// `k` independent, pairwise orthogonal, even-weight vectors of length `alpha`.
///
/// Disjoint weight-2 pairs, mixed by a random invertible matrix and a column
/// shuffle.
pub fn random_self_orthogonal(alpha: usize, k: usize, seed: u64) -> Result<Vec<BinaryVector>> {
    if 2 * k > alpha {
        return Err(Error::Infeasible(format!("{k} self-orthogonal rows need length at least {}", 2 * k)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<Vec<bool>> = (0..k).map(|i| (0..alpha).map(|j| j / 2 == i && j < 2 * k).collect()).collect();
    let mixer = loop {
        let m: Vec<Vec<bool>> = (0..k).map(|_| (0..k).map(|_| rng.gen()).collect()).collect();
        if gf2_rank(m.clone(), k) == k {
            break m;
        }
    };
    let mut columns: Vec<usize> = (0..alpha).collect();
    columns.shuffle(&mut rng);
    Ok(mixer
        .iter()
        .map(|coeffs| {
            let mut row = vec![false; alpha];
            for (pair, _) in pairs.iter().zip(coeffs).filter(|(_, &c)| c) {
                for (x, &p) in row.iter_mut().zip(pair) {
                    *x ^= p;
                }
            }
            BinaryVector::new(columns.iter().map(|&c| row[c]).collect())
        })
        .collect())
}

/// Random generator rows; each row is zero with small probability so
/// degenerate inputs appear.
pub fn random_rows<R: Rng>(rng: &mut R, alpha: usize, beta: usize, count: usize) -> Vec<MixedVector> {
    (0..count)
        .map(|_| {
            let binary = (0..alpha).map(|_| rng.gen()).collect();
            let quaternary = (0..beta).map(|_| Z4::new(rng.gen_range(0..4))).collect();
            let mut v = MixedVector::new(binary, quaternary);
            if rng.gen_ratio(1, 4) {
                v = v.scale(Z4::TWO);
            }
            v
        })
        .collect()
}

/// A random code of the given shape spanned by up to `alpha + beta` rows.
pub fn random_code<R: Rng>(rng: &mut R, alpha: usize, beta: usize) -> Z2Z4Code {
    let count = rng.gen_range(0..=alpha + beta);
    build_code(alpha, beta, &random_rows(rng, alpha, beta, count)).expect("rows have the requested shape")
}

/// A random code with shape drawn from `alpha <= max_alpha`, `beta <= max_beta`.
pub fn random_shaped_code<R: Rng>(rng: &mut R, max_alpha: usize, max_beta: usize) -> Z2Z4Code {
    let alpha = rng.gen_range(0..=max_alpha);
    let beta = rng.gen_range(0..=max_beta);
    random_code(rng, alpha, beta)
}

pub fn random_binary_code<R: Rng>(rng: &mut R, length: usize) -> BinaryCode {
    let count = rng.gen_range(0..=length);
    let rows = (0..count).map(|_| BinaryVector::new((0..length).map(|_| rng.gen()).collect()));
    BinaryCode::from_generators(length, rows).expect("rows have the requested length")
}

pub fn random_quaternary_code<R: Rng>(rng: &mut R, length: usize) -> QuaternaryCode {
    QuaternaryCode(random_code(rng, 0, length))
}

#[derive(Clone, Debug)]
pub enum ConstructionRecipe {
    FreeAcd { alpha: usize, basis: Vec<BinaryVector>, delta: usize },
    SelfOrthogonalX { alpha: usize, gx: Vec<BinaryVector> },
    DoubleIdentity { alpha: usize },
    SeparableProduct { binary: BinaryCode, quaternary: QuaternaryCode },
}

impl ConstructionRecipe {
    pub const NAMES: [&'static str; 4] = ["free-acd", "self-orthogonal-x", "double-identity", "separable-product"];

    pub fn name(&self) -> &'static str {
        match self {
            ConstructionRecipe::FreeAcd { .. } => "free-acd",
            ConstructionRecipe::SelfOrthogonalX { .. } => "self-orthogonal-x",
            ConstructionRecipe::DoubleIdentity { .. } => "double-identity",
            ConstructionRecipe::SeparableProduct { .. } => "separable-product",
        }
    }

    /// The type the construction promises.
    pub fn claimed_type(&self) -> CodeType {
        match self {
            ConstructionRecipe::FreeAcd { alpha, delta, .. } => CodeType { alpha: *alpha, beta: *delta, gamma: 0, delta: *delta, kappa: 0 },
            ConstructionRecipe::SelfOrthogonalX { alpha, gx } => {
                CodeType { alpha: *alpha, beta: gx.len(), gamma: 0, delta: gx.len(), kappa: 0 }
            }
            ConstructionRecipe::DoubleIdentity { alpha } => CodeType { alpha: *alpha, beta: *alpha, gamma: *alpha, delta: 0, kappa: *alpha },
            ConstructionRecipe::SeparableProduct { binary, quaternary } => {
                let q = quaternary.code().code_type();
                CodeType {
                    alpha: binary.length(),
                    beta: q.beta,
                    gamma: binary.dimension() + q.gamma,
                    delta: q.delta,
                    kappa: binary.dimension(),
                }
            }
        }
    }

    pub fn build(&self) -> Result<Z2Z4Code> {
        match self {
            ConstructionRecipe::FreeAcd { alpha, basis, delta } => free_acd_from_basis(*alpha, basis, *delta),
            ConstructionRecipe::SelfOrthogonalX { alpha, gx } => from_self_orthogonal(*alpha, gx),
            ConstructionRecipe::DoubleIdentity { alpha } => double_identity(*alpha),
            ConstructionRecipe::SeparableProduct { binary, quaternary } => Ok(separable_product(binary, quaternary)),
        }
    }
}
