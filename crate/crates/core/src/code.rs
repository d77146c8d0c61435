//! Z2Z4-additive codes: subgroups of `Z2^alpha x Z4^beta`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{gf2_rank, gf2_rref, Z4Matrix};
use crate::zring::{BinaryVector, MixedVector, Z4};

/// Upper bound on the number of elements any enumeration may visit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cap(pub u64);

impl Cap {
    pub const DEFAULT: Cap = Cap(1 << 24);

    /// Fails unless `2^log2` elements fit under the cap.
    pub fn check(self, log2: u32) -> Result<()> {
        if log2 >= 64 || (1u64 << log2) > self.0 {
            return Err(Error::CapExceeded { required_log2: log2, cap: self.0 });
        }
        Ok(())
    }
}

impl Default for Cap {
    fn default() -> Self {
        Cap::DEFAULT
    }
}

/// The type `(alpha, beta; gamma, delta; kappa)` of a code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CodeType {
    pub alpha: usize,
    pub beta: usize,
    pub gamma: usize,
    pub delta: usize,
    pub kappa: usize,
}

impl CodeType {
    /// Type of the dual code.
    pub fn dual(self) -> CodeType {
        let CodeType { alpha, beta, gamma, delta, kappa } = self;
        CodeType {
            alpha,
            beta,
            gamma: alpha + gamma - 2 * kappa,
            delta: beta + kappa - gamma - delta,
            kappa: alpha - kappa,
        }
    }
}

impl fmt::Display for CodeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{};{},{};{})", self.alpha, self.beta, self.gamma, self.delta, self.kappa)
    }
}

/// Reduced generators used for membership tests.
///
/// `quads` are order-4 rows normalised to 1 at their pivot column and zero
/// at every other pivot column. `twos` are order-2 rows in reduced echelon
/// form over the bit encoding of [`half_bits`]; they vanish at the
/// quaternary pivot columns.
#[derive(Clone, Debug)]
struct Echelon {
    alpha: usize,
    beta: usize,
    quads: Vec<(usize, MixedVector)>,
    twos: Vec<(usize, MixedVector)>,
}

/// Bit encoding of an order-2 vector: the `beta` quaternary entries halved,
/// then the `alpha` binary entries.
fn half_bits(v: &MixedVector) -> Vec<bool> {
    v.quaternary().iter().map(|q| q.value() & 2 != 0).chain(v.binary().iter().copied()).collect()
}

fn from_half_bits(bits: &[bool], alpha: usize, beta: usize) -> MixedVector {
    MixedVector::new(bits[beta..beta + alpha].to_vec(), bits[..beta].iter().map(|&b| Z4::new(2 * b as u8)).collect())
}

/// Eliminates unit pivots over `quat_order`, returning the pivot rows and
/// the leftover rows, which all have even quaternary parts.
fn unit_pivots(mut rows: Vec<MixedVector>, quat_order: impl IntoIterator<Item = usize>) -> (Vec<(usize, MixedVector)>, Vec<MixedVector>) {
    let mut quads: Vec<(usize, MixedVector)> = Vec::new();
    for col in quat_order {
        let Some(k) = rows.iter().position(|r| r.quaternary()[col].is_unit()) else { continue };
        let mut pivot = rows.remove(k);
        if pivot.quaternary()[col] == Z4::THREE {
            pivot = pivot.scale(Z4::THREE);
        }
        for r in rows.iter_mut().chain(quads.iter_mut().map(|(_, r)| r)) {
            let f = r.quaternary()[col];
            if !f.is_zero() {
                r.add_scaled(-f, &pivot);
            }
        }
        quads.push((col, pivot));
    }
    rows.retain(|r| !r.is_zero());
    (quads, rows)
}

impl Echelon {
    fn build(alpha: usize, beta: usize, rows: Vec<MixedVector>) -> Echelon {
        let (quads, rest) = unit_pivots(rows, 0..beta);
        let order: Vec<usize> = (0..alpha + beta).collect();
        let twos = gf2_rref(rest.iter().map(half_bits), &order)
            .into_iter()
            .map(|(p, bits)| (p, from_half_bits(&bits, alpha, beta)))
            .collect();
        Echelon { alpha, beta, quads, twos }
    }

    /// Coefficients `(mu, lambda)` expressing `x` over `quads` and `twos`.
    fn coordinates(&self, x: &MixedVector) -> Option<(Vec<Z4>, Vec<bool>)> {
        if x.shape() != (self.alpha, self.beta) {
            return None;
        }
        let mut r = x.clone();
        let mut mu = Vec::with_capacity(self.quads.len());
        for (col, v) in &self.quads {
            let m = r.quaternary()[*col];
            if !m.is_zero() {
                r.add_scaled(-m, v);
            }
            mu.push(m);
        }
        if !r.has_order_at_most_two() {
            return None;
        }
        let mut lambda = Vec::with_capacity(self.twos.len());
        for (pos, w) in &self.twos {
            let set = half_bits(&r)[*pos];
            if set {
                r.add_scaled(Z4::ONE, w);
            }
            lambda.push(set);
        }
        r.is_zero().then_some((mu, lambda))
    }
}

/// A Z2Z4-additive code, stored by a generator matrix whose rows give every
/// codeword a unique expression `sum lambda_i u_i + sum mu_j v_j`,
/// `lambda_i in Z2`, `mu_j in Z4`.
#[derive(Clone, Debug)]
pub struct Z2Z4Code {
    alpha: usize,
    beta: usize,
    order2: Vec<MixedVector>,
    order4: Vec<MixedVector>,
    echelon: Echelon,
    code_type: CodeType,
}

/// Additive span of `rows` in `Z2^alpha x Z4^beta`.
///
/// When the nonzero input rows already form a generator matrix (their
/// order-2 and order-4 counts equal gamma and delta of the span) they are
/// kept verbatim, order-2 rows first. Otherwise the reduced generators are
/// used: order-4 rows with unit pivots found left to right, then order-2
/// rows in reduced echelon form with pivots on the quaternary block first.
pub fn build_code(alpha: usize, beta: usize, rows: &[MixedVector]) -> Result<Z2Z4Code> {
    if let Some(bad) = rows.iter().find(|r| r.shape() != (alpha, beta)) {
        return Err(Error::ShapeMismatch { expected: (alpha, beta), found: bad.shape() });
    }
    let echelon = Echelon::build(alpha, beta, rows.to_vec());
    let gamma = echelon.twos.len();
    let delta = echelon.quads.len();
    let kappa = gf2_rank(echelon.twos.iter().map(|(_, w)| w.binary().to_vec()), alpha);

    let input2: Vec<_> = rows.iter().filter(|r| r.order() == 2).cloned().collect();
    let input4: Vec<_> = rows.iter().filter(|r| r.order() == 4).cloned().collect();
    let verbatim = rows.iter().all(|r| !r.is_zero()) && input2.len() == gamma && input4.len() == delta;
    let (order2, order4) = if verbatim {
        (input2, input4)
    } else {
        (
            echelon.twos.iter().map(|(_, w)| w.clone()).collect(),
            echelon.quads.iter().map(|(_, v)| v.clone()).collect(),
        )
    };
    Ok(Z2Z4Code {
        alpha,
        beta,
        order2,
        order4,
        echelon,
        code_type: CodeType { alpha, beta, gamma, delta, kappa },
    })
}

impl Z2Z4Code {
    pub fn new(alpha: usize, beta: usize, rows: &[MixedVector]) -> Result<Self> {
        build_code(alpha, beta, rows)
    }

    pub fn zero(alpha: usize, beta: usize) -> Self {
        build_code(alpha, beta, &[]).expect("empty generator list")
    }

    /// The whole ambient space.
    pub fn full(alpha: usize, beta: usize) -> Self {
        let rows: Vec<MixedVector> = (0..alpha)
            .map(|i| unit_vector(alpha, beta, i, false))
            .chain((0..beta).map(|j| unit_vector(alpha, beta, j, true)))
            .collect();
        build_code(alpha, beta, &rows).expect("unit vectors have the right shape")
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn beta(&self) -> usize {
        self.beta
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.alpha, self.beta)
    }

    pub fn order2_generators(&self) -> &[MixedVector] {
        &self.order2
    }

    pub fn order4_generators(&self) -> &[MixedVector] {
        &self.order4
    }

    /// Generator rows, order-2 rows first.
    pub fn generators(&self) -> Vec<MixedVector> {
        self.order2.iter().chain(&self.order4).cloned().collect()
    }

    pub fn code_type(&self) -> CodeType {
        self.code_type
    }

    /// `log2 |C| = gamma + 2 delta`.
    pub fn log2_size(&self) -> u32 {
        (self.code_type.gamma + 2 * self.code_type.delta) as u32
    }

    /// `|C|`, saturating at `u128::MAX`.
    pub fn size(&self) -> u128 {
        1u128.checked_shl(self.log2_size()).unwrap_or(u128::MAX)
    }

    pub fn ambient_log2_size(&self) -> u32 {
        (self.alpha + 2 * self.beta) as u32
    }

    pub fn contains(&self, x: &MixedVector) -> bool {
        self.echelon.coordinates(x).is_some()
    }

    /// Every codeword, in mixed-radix order of its coefficients over
    /// [`generators`](Self::generators).
    pub fn codewords(&self, cap: Cap) -> Result<Vec<MixedVector>> {
        cap.check(self.log2_size())?;
        let mut words = vec![MixedVector::zeros(self.alpha, self.beta)];
        for (g, radix) in self.order2.iter().map(|g| (g, 2u8)).chain(self.order4.iter().map(|g| (g, 4u8))) {
            let mut next = Vec::with_capacity(words.len() * radix as usize);
            for lambda in 0..radix {
                let shift = g.scale(Z4::new(lambda));
                next.extend(words.iter().map(|w| w + &shift));
            }
            words = next;
        }
        Ok(words)
    }

    /// `C_b`: codewords of order at most two. Spanned by the order-2
    /// generators and the doubles of the order-4 generators.
    pub fn order_two_subcode(&self) -> Z2Z4Code {
        let rows: Vec<_> = self.order2.iter().cloned().chain(self.order4.iter().map(|v| v.scale(Z4::TWO))).collect();
        build_code(self.alpha, self.beta, &rows).expect("rows come from this code")
    }

    /// `C_X`, the projection onto the binary coordinates.
    pub fn puncture_x(&self) -> BinaryCode {
        BinaryCode::from_generators(self.alpha, self.generators().iter().map(|g| g.binary_part()))
            .expect("binary parts have length alpha")
    }

    /// `C_Y`, the projection onto the quaternary coordinates.
    pub fn puncture_y(&self) -> QuaternaryCode {
        let rows: Vec<_> =
            self.generators().iter().map(|g| MixedVector::new(Vec::new(), g.quaternary().to_vec())).collect();
        QuaternaryCode(build_code(0, self.beta, &rows).expect("quaternary parts have length beta"))
    }

    pub fn puncture(&self, side: Side) -> Punctured {
        match side {
            Side::X => Punctured::Binary(self.puncture_x()),
            Side::Y => Punctured::Quaternary(self.puncture_y()),
        }
    }

    /// The dual code under `[u, v] = 2[u, v]_2 + [u', v']_4`.
    ///
    /// Solves `[2 G_X | G_Y] x = 0` over `Z4` and reduces the first `alpha`
    /// coordinates of each kernel generator modulo 2.
    pub fn dual(&self) -> Z2Z4Code {
        let gens = self.generators();
        let lifted: Vec<Vec<Z4>> = gens
            .iter()
            .map(|g| {
                g.binary().iter().map(|&b| Z4::TWO * Z4::from_bit(b)).chain(g.quaternary().iter().copied()).collect()
            })
            .collect();
        let a = Z4Matrix::from_rows(lifted, self.alpha + self.beta);
        let kernel: Vec<MixedVector> = a
            .kernel()
            .into_iter()
            .map(|x| MixedVector::new(x[..self.alpha].iter().map(|e| e.parity()).collect(), x[self.alpha..].to_vec()))
            .collect();
        build_code(self.alpha, self.beta, &kernel).expect("kernel vectors have the ambient shape")
    }

    /// Set equality.
    pub fn same_code(&self, other: &Z2Z4Code) -> bool {
        self.shape() == other.shape()
            && self.log2_size() == other.log2_size()
            && other.generators().iter().all(|g| self.contains(g))
    }

    /// `C = C_X x C_Y`, decided by comparing `|C|` with `|C_X| |C_Y|`.
    pub fn is_separable(&self) -> bool {
        let x = self.puncture_x().dimension() as u32;
        let y = self.puncture_y().0.log2_size();
        x + y == self.log2_size()
    }

    pub fn apply_transform(&self, t: &MonomialTransform) -> Result<Z2Z4Code> {
        let rows = self.generators().iter().map(|g| t.apply(g)).collect::<Result<Vec<_>>>()?;
        if t.shape() != self.shape() {
            return Err(Error::ShapeMismatch { expected: self.shape(), found: t.shape() });
        }
        build_code(self.alpha, self.beta, &rows)
    }

    /// Generator matrix in the standard block form
    ///
    /// ```text
    /// ( I_k  T_b | 2T_2  0        0   )
    /// ( 0    0   | 2T_1  2I_{g-k} 0   )
    /// ( 0    S_b | S_q   R        I_d )
    /// ```
    ///
    /// together with the transform carrying this code onto the code it
    /// generates.
    pub fn standard_form(&self) -> StandardForm {
        let (alpha, beta) = self.shape();
        let (quads, rest) = unit_pivots(self.generators(), (0..beta).rev());
        // Binary pivots first so the top rows carry I_kappa.
        let order: Vec<usize> = (beta..beta + alpha).chain(0..beta).collect();
        let reduced: Vec<(usize, MixedVector)> = gf2_rref(rest.iter().map(half_bits), &order)
            .into_iter()
            .map(|(p, bits)| (p, from_half_bits(&bits, alpha, beta)))
            .collect();
        let (top, twos): (Vec<_>, Vec<_>) = reduced.into_iter().partition(|(p, _)| *p >= beta);

        let mut quads = quads;
        for (_, v) in quads.iter_mut() {
            for (p, u) in &top {
                if v.binary()[p - beta] {
                    v.add_scaled(Z4::ONE, u);
                }
            }
            for (q, w) in &twos {
                if v.quaternary()[*q].value() >= 2 {
                    v.add_scaled(Z4::ONE, w);
                }
            }
        }

        let top_cols: Vec<usize> = top.iter().map(|(p, _)| p - beta).collect();
        let two_cols: Vec<usize> = twos.iter().map(|(q, _)| *q).collect();
        let quad_cols: Vec<usize> = quads.iter().map(|(c, _)| *c).collect();
        let binary_perm: Vec<usize> =
            top_cols.iter().copied().chain((0..alpha).filter(|c| !top_cols.contains(c))).collect();
        let quaternary_perm: Vec<usize> = (0..beta)
            .filter(|c| !two_cols.contains(c) && !quad_cols.contains(c))
            .chain(two_cols.iter().copied())
            .chain(quad_cols.iter().copied())
            .collect();
        let transform = MonomialTransform::new(binary_perm, quaternary_perm, Vec::new())
            .expect("standard-form permutations are bijective");
        let rows = top
            .iter()
            .chain(&twos)
            .chain(&quads)
            .map(|(_, r)| transform.apply(r).expect("rows have the code's shape"))
            .collect();
        let code_type = CodeType { gamma: top.len() + twos.len(), delta: quads.len(), kappa: top.len(), ..self.code_type };
        StandardForm { code_type, rows, transform }
    }
}

impl PartialEq for Z2Z4Code {
    fn eq(&self, other: &Self) -> bool {
        self.same_code(other)
    }
}

impl Eq for Z2Z4Code {}

fn unit_vector(alpha: usize, beta: usize, i: usize, quaternary: bool) -> MixedVector {
    let mut v = MixedVector::zeros(alpha, beta);
    if quaternary {
        v.quaternary_mut()[i] = Z4::ONE;
    } else {
        v.binary_mut()[i] = true;
    }
    v
}

pub fn enumerate_codewords(c: &Z2Z4Code, cap: Cap) -> Result<Vec<MixedVector>> {
    c.codewords(cap)
}

pub fn code_type(c: &Z2Z4Code) -> CodeType {
    c.code_type()
}

pub fn order_two_subcode(c: &Z2Z4Code) -> Z2Z4Code {
    c.order_two_subcode()
}

pub fn dual(c: &Z2Z4Code) -> Z2Z4Code {
    c.dual()
}

pub fn puncture(c: &Z2Z4Code, side: Side) -> Punctured {
    c.puncture(side)
}

pub fn standard_form(c: &Z2Z4Code) -> StandardForm {
    c.standard_form()
}

pub fn is_separable(c: &Z2Z4Code) -> bool {
    c.is_separable()
}

pub fn apply_transform(c: &Z2Z4Code, t: &MonomialTransform) -> Result<Z2Z4Code> {
    c.apply_transform(t)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    X,
    Y,
}

#[derive(Clone, Debug)]
pub enum Punctured {
    Binary(BinaryCode),
    Quaternary(QuaternaryCode),
}

/// A binary linear code with a basis in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryCode {
    length: usize,
    basis: Vec<BinaryVector>,
    pivots: Vec<usize>,
}

impl BinaryCode {
    pub fn from_generators(length: usize, gens: impl IntoIterator<Item = BinaryVector>) -> Result<Self> {
        let rows = gens
            .into_iter()
            .map(|g| {
                if g.len() != length {
                    Err(Error::LengthMismatch { expected: length, found: g.len() })
                } else {
                    Ok(g.bits().to_vec())
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let order: Vec<usize> = (0..length).collect();
        let mut rref = gf2_rref(rows, &order);
        rref.sort_by_key(|(p, _)| *p);
        let pivots = rref.iter().map(|(p, _)| *p).collect();
        let basis = rref.into_iter().map(|(_, r)| BinaryVector::new(r)).collect();
        Ok(BinaryCode { length, basis, pivots })
    }

    pub fn zero(length: usize) -> Self {
        BinaryCode { length, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(length: usize) -> Self {
        let gens = (0..length).map(|i| {
            let mut bits = vec![false; length];
            bits[i] = true;
            BinaryVector::new(bits)
        });
        Self::from_generators(length, gens).expect("unit vectors")
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BinaryVector] {
        &self.basis
    }

    pub fn contains(&self, x: &BinaryVector) -> bool {
        if x.len() != self.length {
            return false;
        }
        let mut r = x.clone();
        for (p, b) in self.pivots.iter().zip(&self.basis) {
            if r.bit(*p) {
                r.xor_assign(b);
            }
        }
        r.is_zero()
    }

    pub fn dual(&self) -> BinaryCode {
        let kernel = crate::linalg::gf2_kernel(self.basis.iter().map(|b| b.bits().to_vec()), self.length);
        Self::from_generators(self.length, kernel).expect("kernel vectors have the code length")
    }

    pub fn codewords(&self, cap: Cap) -> Result<Vec<BinaryVector>> {
        cap.check(self.dimension() as u32)?;
        let mut words = vec![BinaryVector::zeros(self.length)];
        for b in &self.basis {
            let shifted: Vec<_> = words.iter().map(|w| w.xor(b)).collect();
            words.extend(shifted);
        }
        Ok(words)
    }

    /// `Z2^alpha`-only view as an additive code with `beta = 0`.
    pub fn as_additive(&self) -> Z2Z4Code {
        let rows: Vec<_> = self.basis.iter().map(|b| MixedVector::new(b.bits().to_vec(), Vec::new())).collect();
        build_code(self.length, 0, &rows).expect("binary rows")
    }
}

/// A quaternary linear code: an additive code with `alpha = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuaternaryCode(pub Z2Z4Code);

impl QuaternaryCode {
    pub fn new(beta: usize, rows: &[Vec<Z4>]) -> Result<Self> {
        let rows: Vec<_> = rows.iter().map(|r| MixedVector::new(Vec::new(), r.clone())).collect();
        Ok(QuaternaryCode(build_code(0, beta, &rows)?))
    }

    pub fn full(beta: usize) -> Self {
        QuaternaryCode(Z2Z4Code::full(0, beta))
    }

    pub fn length(&self) -> usize {
        self.0.beta()
    }

    pub fn code(&self) -> &Z2Z4Code {
        &self.0
    }
}

/// A coordinate permutation within each alphabet block followed by sign
/// changes on quaternary coordinates.
///
/// Coordinate `i` of the image is coordinate `perm[i]` of the source.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonomialTransform {
    binary_perm: Vec<usize>,
    quaternary_perm: Vec<usize>,
    /// Quaternary positions of the image that are negated.
    sign_flips: Vec<usize>,
}

impl MonomialTransform {
    pub fn new(binary_perm: Vec<usize>, quaternary_perm: Vec<usize>, sign_flips: Vec<usize>) -> Result<Self> {
        let is_perm = |p: &[usize]| {
            let mut seen = vec![false; p.len()];
            p.iter().all(|&i| i < p.len() && !std::mem::replace(&mut seen[i], true))
        };
        if !is_perm(&binary_perm) || !is_perm(&quaternary_perm) {
            return Err(Error::Precondition("transform columns are not a permutation".into()));
        }
        if sign_flips.iter().any(|&i| i >= quaternary_perm.len()) {
            return Err(Error::Precondition("sign flip outside the quaternary block".into()));
        }
        Ok(MonomialTransform { binary_perm, quaternary_perm, sign_flips })
    }

    pub fn identity(alpha: usize, beta: usize) -> Self {
        MonomialTransform { binary_perm: (0..alpha).collect(), quaternary_perm: (0..beta).collect(), sign_flips: Vec::new() }
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.binary_perm.len(), self.quaternary_perm.len())
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.binary_perm.len(), self.quaternary_perm.len())
    }

    pub fn binary_permutation(&self) -> &[usize] {
        &self.binary_perm
    }

    pub fn quaternary_permutation(&self) -> &[usize] {
        &self.quaternary_perm
    }

    pub fn sign_flips(&self) -> &[usize] {
        &self.sign_flips
    }

    /// Permutation of all `alpha + beta` positions, quaternary positions
    /// offset by `alpha`.
    pub fn column_permutation(&self) -> Vec<usize> {
        let a = self.binary_perm.len();
        self.binary_perm.iter().copied().chain(self.quaternary_perm.iter().map(|q| q + a)).collect()
    }

    pub fn apply(&self, v: &MixedVector) -> Result<MixedVector> {
        if v.shape() != self.shape() {
            return Err(Error::ShapeMismatch { expected: self.shape(), found: v.shape() });
        }
        let binary = self.binary_perm.iter().map(|&i| v.binary()[i]).collect();
        let mut quaternary: Vec<Z4> = self.quaternary_perm.iter().map(|&i| v.quaternary()[i]).collect();
        for &i in &self.sign_flips {
            quaternary[i] = -quaternary[i];
        }
        Ok(MixedVector::new(binary, quaternary))
    }
}

/// Output of [`Z2Z4Code::standard_form`].
#[derive(Clone, Debug)]
pub struct StandardForm {
    pub code_type: CodeType,
    /// `kappa` top rows, `gamma - kappa` rows of twos, then `delta` rows.
    pub rows: Vec<MixedVector>,
    pub transform: MonomialTransform,
}

impl StandardForm {
    /// Checks every block of the standard shape against `code_type`.
    pub fn has_standard_shape(&self) -> bool {
        let CodeType { alpha, beta, gamma, delta, kappa } = self.code_type;
        if self.rows.len() != gamma + delta || kappa > gamma || gamma - kappa + delta > beta || kappa > alpha {
            return false;
        }
        let g2 = gamma - kappa;
        let t_cols = beta - g2 - delta;
        self.rows.iter().enumerate().all(|(i, r)| {
            let b = r.binary();
            let q = r.quaternary();
            let block = |range: std::ops::Range<usize>, f: &dyn Fn(usize, Z4) -> bool| range.clone().all(|j| f(j, q[j]));
            if i < kappa {
                (0..kappa).all(|j| b[j] == (i == j))
                    && block(0..t_cols, &|_, e| e.is_even())
                    && block(t_cols..beta, &|_, e| e.is_zero())
            } else if i < gamma {
                let k = i - kappa;
                b.iter().all(|&x| !x)
                    && block(0..t_cols, &|_, e| e.is_even())
                    && block(t_cols..t_cols + g2, &|j, e| e == if j - t_cols == k { Z4::TWO } else { Z4::ZERO })
                    && block(t_cols + g2..beta, &|_, e| e.is_zero())
            } else {
                let k = i - gamma;
                (0..kappa).all(|j| !b[j])
                    && block(t_cols..t_cols + g2, &|_, e| e.value() <= 1)
                    && block(t_cols + g2..beta, &|j, e| e == if j - t_cols - g2 == k { Z4::ONE } else { Z4::ZERO })
            }
        })
    }
}
