//! Complementary duality: ACD and LCD decisions, the Gram product, the set
//! `D_C = {2u*v : u in C, v in C^perp}`, linearity of Gray images and the
//! six-way classification of an ACD code's images.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::Serialize;

use crate::code::{build_code, BinaryCode, Cap, CodeType, QuaternaryCode, Z2Z4Code};
use crate::error::{Error, Result};
use crate::linalg::{gf2_rank, Z4Matrix};
use crate::zring::{BinaryVector, MixedVector, Z4};

/// `G . G^T = 2 G_X G_X^T + G_Y G_Y^T` over `Z4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramMatrix(Z4Matrix);

impl GramMatrix {
    pub fn of_rows(rows: &[MixedVector]) -> GramMatrix {
        let entries = rows.iter().map(|u| rows.iter().map(|v| u.dot(v)).collect()).collect();
        GramMatrix(Z4Matrix::from_rows(entries, rows.len()))
    }

    pub fn size(&self) -> usize {
        self.0.num_rows()
    }

    pub fn entry(&self, i: usize, j: usize) -> Z4 {
        self.0[(i, j)]
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        self.0.to_rows().into_iter().map(|r| r.into_iter().map(Z4::value).collect()).collect()
    }

    pub fn determinant(&self) -> Z4 {
        self.0.determinant()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..i).all(|j| self.entry(i, j) == self.entry(j, i)))
    }

    /// Unit of the matrix ring over `Z4`: the determinant is odd.
    pub fn is_invertible(&self) -> bool {
        self.determinant().is_unit()
    }

    /// Off-diagonal entries in `{0, 2}` and diagonal entries outside it.
    pub fn meets_row_condition(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..n).all(|j| self.entry(i, j).is_even() == (i != j)))
    }

    pub(crate) fn matrix(&self) -> &Z4Matrix {
        &self.0
    }
}

impl fmt::Display for GramMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.size() {
            let row: Vec<String> = (0..self.size()).map(|j| self.entry(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Gram matrix of the code's generator list, order-2 rows first.
pub fn gram_matrix(c: &Z2Z4Code) -> GramMatrix {
    GramMatrix::of_rows(&c.generators())
}

pub fn is_gram_invertible(m: &GramMatrix) -> bool {
    m.is_invertible()
}

/// Sufficient row condition for ACD: Gram off-diagonal entries in `{0,2}`,
/// diagonal entries not in `{0,2}`. Implies both ACD and `C_Y` LCD.
pub fn sufficient_acd_by_rows(c: &Z2Z4Code) -> bool {
    gram_matrix(c).meets_row_condition()
}

/// A nonzero vector of `C ∩ C^perp`, found by enumerating the smaller of the
/// two codes and testing membership in the other.
pub fn acd_witness(c: &Z2Z4Code, cap: Cap) -> Result<Option<MixedVector>> {
    let d = c.dual();
    let (small, large) = if c.log2_size() <= d.log2_size() { (c, &d) } else { (&d, c) };
    Ok(small.codewords(cap)?.into_iter().find(|w| !w.is_zero() && large.contains(w)))
}

pub fn is_acd(c: &Z2Z4Code, cap: Cap) -> Result<bool> {
    Ok(acd_witness(c, cap)?.is_none())
}

/// `C ∩ C^perp` without enumeration: the images of the kernel of the Gram
/// matrix under the coefficient map.
pub fn hull(c: &Z2Z4Code) -> Z2Z4Code {
    let gens = c.generators();
    let gram = GramMatrix::of_rows(&gens);
    let rows: Vec<MixedVector> = gram.matrix().kernel().iter().map(|k| combine(&gens, k, c)).collect();
    build_code(c.alpha(), c.beta(), &rows).expect("combinations of codewords")
}

fn combine(gens: &[MixedVector], coeffs: &[Z4], c: &Z2Z4Code) -> MixedVector {
    let mut out = MixedVector::zeros(c.alpha(), c.beta());
    for (g, &k) in gens.iter().zip(coeffs) {
        out.add_scaled(k, g);
    }
    out
}

/// Binary LCD test through nonsingularity of `G G^T` over `Z2`.
pub fn is_binary_lcd(b: &BinaryCode) -> bool {
    let basis = b.basis();
    let gram = basis.iter().map(|u| basis.iter().map(|v| u.dot(v)).collect::<Vec<bool>>());
    gf2_rank(gram, basis.len()) == basis.len()
}

/// A nonzero vector of `B ∩ B^perp`, by direct intersection.
pub fn binary_lcd_witness(b: &BinaryCode, cap: Cap) -> Result<Option<BinaryVector>> {
    let d = b.dual();
    let (small, large) = if b.dimension() <= d.dimension() { (b, &d) } else { (&d, b) };
    Ok(small.codewords(cap)?.into_iter().find(|w| !w.is_zero() && large.contains(w)))
}

pub fn quaternary_lcd_witness(q: &QuaternaryCode, cap: Cap) -> Result<Option<MixedVector>> {
    acd_witness(q.code(), cap)
}

pub fn is_quaternary_lcd(q: &QuaternaryCode, cap: Cap) -> Result<bool> {
    is_acd(q.code(), cap)
}

/// The unique `(w1, w2)` with `w1 in C`, `w2 in C^perp`, `w1 + w2 = w`.
///
/// Solves `Gram x = ([w, g_k])_k` for the coefficients of `w1`.
pub fn decompose(c: &Z2Z4Code, w: &MixedVector) -> Result<(MixedVector, MixedVector)> {
    if w.shape() != c.shape() {
        return Err(Error::ShapeMismatch { expected: c.shape(), found: w.shape() });
    }
    if let Some(witness) = hull(c).generators().into_iter().next() {
        return Err(Error::NotAcd { witness });
    }
    let gens = c.generators();
    let gram = GramMatrix::of_rows(&gens);
    let target: Vec<Z4> = gens.iter().map(|g| w.dot(g)).collect();
    let x = gram
        .matrix()
        .solve(&target)
        .ok_or_else(|| Error::Inconsistency("no decomposition for an ACD code".into()))?;
    let w1 = combine(&gens, &x, c);
    let w2 = w - &w1;
    Ok((w1, w2))
}

/// `D_C` and its additive span.
#[derive(Clone, Debug)]
pub struct DSet {
    /// Nonzero products `2 g * h` over generators `g` of `C`, `h` of `C^perp`.
    pub generators: Vec<MixedVector>,
    pub subgroup: Z2Z4Code,
    /// The literal set over all codeword pairs, when requested.
    pub full_set: Option<Vec<MixedVector>>,
}

impl DSet {
    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn contained_in(&self, c: &Z2Z4Code) -> bool {
        self.generators.iter().all(|g| c.contains(g))
    }
}

/// `twice_star` is bilinear, so the span of `D_C` is spanned by products of
/// generator pairs.
pub fn d_set(c: &Z2Z4Code, exhaustive: bool, cap: Cap) -> Result<DSet> {
    let dual = c.dual();
    let mut seen = HashSet::new();
    let mut generators = Vec::new();
    for g in c.generators() {
        for h in dual.generators() {
            let p = g.twice_star(&h);
            if !p.is_zero() && seen.insert(p.clone()) {
                generators.push(p);
            }
        }
    }
    let subgroup = build_code(c.alpha(), c.beta(), &generators)?;
    let full_set = if exhaustive {
        cap.check(c.log2_size() + dual.log2_size())?;
        let words = c.codewords(cap)?;
        let dual_words = dual.codewords(cap)?;
        let mut set: Vec<MixedVector> = words
            .iter()
            .flat_map(|u| dual_words.iter().map(move |v| u.twice_star(v)))
            .collect::<HashSet<_>>()
            .into_iter()
            .collect();
        set.sort();
        Some(set)
    } else {
        None
    };
    Ok(DSet { generators, subgroup, full_set })
}

/// A generator pair `(g, h)` with `2 g * h` outside `C`, if any.
pub fn gray_image_nonlinearity(c: &Z2Z4Code) -> Option<(MixedVector, MixedVector)> {
    let gens = c.generators();
    for (i, g) in gens.iter().enumerate() {
        for h in &gens[i..] {
            if !c.contains(&g.twice_star(h)) {
                return Some((g.clone(), h.clone()));
            }
        }
    }
    None
}

/// `Phi(C)` is linear iff `2 v * w in C` for all `v, w in C`; by
/// bilinearity generator pairs suffice.
pub fn is_gray_image_linear(c: &Z2Z4Code) -> bool {
    gray_image_nonlinearity(c).is_none()
}

#[derive(Clone, Debug)]
pub enum BinaryImage {
    Linear(BinaryCode),
    Nonlinear {
        codewords: Vec<BinaryVector>,
        /// `Phi(g)`, `Phi(h)` whose sum is not in the image.
        witness: (BinaryVector, BinaryVector),
    },
}

impl BinaryImage {
    pub fn is_linear(&self) -> bool {
        matches!(self, BinaryImage::Linear(_))
    }
}

pub fn binary_image(c: &Z2Z4Code, cap: Cap) -> Result<BinaryImage> {
    let words = c.codewords(cap)?;
    let images: Vec<BinaryVector> = words.iter().map(MixedVector::gray).collect();
    match gray_image_nonlinearity(c) {
        None => Ok(BinaryImage::Linear(BinaryCode::from_generators(c.ambient_log2_size() as usize, images)?)),
        Some((g, h)) => Ok(BinaryImage::Nonlinear { codewords: images, witness: (g.gray(), h.gray()) }),
    }
}

/// Span of `Phi(C)`; equal to `Phi(C)` exactly when the image is linear.
fn image_span(c: &Z2Z4Code, cap: Cap) -> Result<BinaryCode> {
    let images = c.codewords(cap)?.iter().map(MixedVector::gray).collect::<Vec<_>>();
    BinaryCode::from_generators(c.ambient_log2_size() as usize, images)
}

/// Writes `x = Phi(u) + Phi(v)` with `u in C`, `v in C^perp`.
///
/// Requires `C` ACD and the span of `D_C` inside `C` or inside `C^perp`.
pub fn unique_gray_decomposition(c: &Z2Z4Code, x: &BinaryVector) -> Result<(BinaryVector, BinaryVector)> {
    if let Some(witness) = hull(c).generators().into_iter().next() {
        return Err(Error::NotAcd { witness });
    }
    let d = d_set(c, false, Cap::DEFAULT)?;
    let dual = c.dual();
    if !d.contained_in(c) && !d.contained_in(&dual) {
        return Err(Error::Precondition("D_C is contained in neither the code nor its dual".into()));
    }
    let w = MixedVector::from_gray(x, c.alpha(), c.beta())?;
    let (w1, w2) = decompose(c, &w)?;
    let p = w1.twice_star(&w2);
    let (u, v) = if c.contains(&p) { (&w1 + &p, w2) } else { (w1, &w2 + &p) };
    Ok((u.gray(), v.gray()))
}

/// No codeword has zero binary part and nonzero quaternary part. Returns a
/// violating codeword if one exists.
pub fn support_violation(c: &Z2Z4Code, cap: Cap) -> Result<Option<MixedVector>> {
    Ok(c.codewords(cap)?.into_iter().find(|w| w.binary().iter().all(|&b| !b) && !w.is_zero()))
}

pub fn support_condition(c: &Z2Z4Code, cap: Cap) -> Result<bool> {
    Ok(support_violation(c, cap)?.is_none())
}

/// The six statements about an ACD code `C`, `C = Phi(C)`, `C_perp = Phi(C^perp)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Statements {
    /// Image linear and `D_C ⊆ C`.
    pub i: bool,
    /// Dual image linear and `D_C ⊆ C^perp`.
    pub ii: bool,
    /// Both images linear.
    pub iii: bool,
    /// `D_C = {0}`.
    pub iv: bool,
    /// Both images LCD.
    pub v: bool,
    /// `Phi(C^perp)` is the binary dual of `Phi(C)`.
    pub vi: bool,
}

impl Statements {
    pub fn as_array(&self) -> [bool; 6] {
        [self.i, self.ii, self.iii, self.iv, self.v, self.vi]
    }

    pub fn all_agree(&self) -> bool {
        let a = self.as_array();
        a.iter().all(|&s| s == a[0])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub code_type: CodeType,
    pub is_acd: bool,
    pub cx_lcd: bool,
    pub cy_lcd: bool,
    pub image_linear: bool,
    pub dual_image_linear: bool,
    /// `None` when the image is not linear.
    pub image_lcd: Option<bool>,
    pub dual_image_lcd: Option<bool>,
    pub d_trivial: bool,
    pub d_in_code: bool,
    pub d_in_dual: bool,
    pub dual_image_equals_binary_dual: bool,
    pub statements: Statements,
    /// Evidence for false entries, in the vector text syntax.
    pub witnesses: BTreeMap<String, String>,
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}

/// LCD status of a linear image plus a witness in `B ∩ B^perp`.
fn lcd_with_witness(b: &BinaryCode, cap: Cap) -> Result<(bool, Option<BinaryVector>)> {
    let lcd = is_binary_lcd(b);
    let witness = if lcd { None } else { binary_lcd_witness(b, cap)? };
    Ok((lcd, witness))
}

/// Evaluates every entry of the report independently. Works for any code;
/// see [`equivalence_report`] for the checked ACD version.
pub fn analyze(c: &Z2Z4Code, cap: Cap) -> Result<AnalysisReport> {
    let dual = c.dual();
    let mut witnesses = BTreeMap::new();
    let mut note = |key: &str, value: String| {
        witnesses.insert(key.to_string(), value);
    };

    let acd = acd_witness(c, cap)?;
    if let Some(w) = &acd {
        note("is_acd", w.to_string());
    }
    let cx = c.puncture_x();
    let cx_lcd = is_binary_lcd(&cx);
    if let Some(w) = binary_lcd_witness(&cx, cap)? {
        note("cx_lcd", w.to_string());
    }
    let cy = c.puncture_y();
    let cy_witness = quaternary_lcd_witness(&cy, cap)?;
    if let Some(w) = &cy_witness {
        note("cy_lcd", w.to_string());
    }

    let image_nonlinear = gray_image_nonlinearity(c);
    if let Some((g, h)) = &image_nonlinear {
        note("image_linear", g.twice_star(h).to_string());
    }
    let dual_nonlinear = gray_image_nonlinearity(&dual);
    if let Some((g, h)) = &dual_nonlinear {
        note("dual_image_linear", g.twice_star(h).to_string());
    }

    let span = image_span(c, cap)?;
    let image_lcd = if image_nonlinear.is_none() {
        let (lcd, w) = lcd_with_witness(&span, cap)?;
        if let Some(w) = w {
            note("image_lcd", w.to_string());
        }
        Some(lcd)
    } else {
        None
    };
    let dual_image_lcd = if dual_nonlinear.is_none() {
        let (lcd, w) = lcd_with_witness(&image_span(&dual, cap)?, cap)?;
        if let Some(w) = w {
            note("dual_image_lcd", w.to_string());
        }
        Some(lcd)
    } else {
        None
    };

    let d = d_set(c, false, cap)?;
    if let Some(g) = d.generators.first() {
        note("d_trivial", g.to_string());
    }
    let d_in_code = d.contained_in(c);
    let d_in_dual = d.contained_in(&dual);

    // Phi(C^perp) against the binary dual of Phi(C).
    let binary_dual = span.dual();
    let dual_images: Vec<BinaryVector> = dual.codewords(cap)?.iter().map(MixedVector::gray).collect();
    let outside = dual_images.iter().find(|y| !binary_dual.contains(y));
    let vi = outside.is_none() && binary_dual.dimension() as u32 == dual.log2_size();
    if !vi {
        let w = match outside {
            Some(y) => y.clone(),
            None => {
                let have: HashSet<&BinaryVector> = dual_images.iter().collect();
                binary_dual
                    .codewords(cap)?
                    .into_iter()
                    .find(|z| !have.contains(z))
                    .ok_or_else(|| Error::Inconsistency("binary dual sizes disagree without a witness".into()))?
            }
        };
        note("dual_image_equals_binary_dual", w.to_string());
    }

    let image_linear = image_nonlinear.is_none();
    let dual_image_linear = dual_nonlinear.is_none();
    let statements = Statements {
        i: image_linear && d_in_code,
        ii: dual_image_linear && d_in_dual,
        iii: image_linear && dual_image_linear,
        iv: d.is_trivial(),
        v: image_lcd == Some(true) && dual_image_lcd == Some(true),
        vi,
    };
    Ok(AnalysisReport {
        schema: 1,
        code_type: c.code_type(),
        is_acd: acd.is_none(),
        cx_lcd,
        cy_lcd: cy_witness.is_none(),
        image_linear,
        dual_image_linear,
        image_lcd,
        dual_image_lcd,
        d_trivial: d.is_trivial(),
        d_in_code,
        d_in_dual,
        dual_image_equals_binary_dual: vi,
        statements,
        witnesses,
    })
}

/// [`analyze`] for an ACD code, checking that the six statements agree.
pub fn equivalence_report(c: &Z2Z4Code, cap: Cap) -> Result<AnalysisReport> {
    let report = analyze(c, cap)?;
    if !report.is_acd {
        let witness = report.witnesses["is_acd"].parse()?;
        return Err(Error::NotAcd { witness });
    }
    if !report.statements.all_agree() {
        return Err(Error::Inconsistency(format!("statements disagree: {:?}", report.statements)));
    }
    if report.dual_image_equals_binary_dual && !report.image_linear {
        return Err(Error::Inconsistency("dual image equals the binary dual of a nonlinear image".into()));
    }
    Ok(report)
}
