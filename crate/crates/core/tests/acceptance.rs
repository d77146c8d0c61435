//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the verdicts are always printed; exits nonzero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::panic;

use common::{binary_dual, binary_hull, binary_span, bits_of, is_binary_lcd, is_binary_linear, parse_bits, Shape};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use z2z4::code::build_code;
use z2z4::constructions::{
    double_identity, free_acd_from_basis, from_self_orthogonal, random_binary_code, random_code, random_quaternary_code,
    random_rows, random_self_orthogonal, separable_product,
};
use z2z4::duality::{self, BinaryImage, GramMatrix};
use z2z4::fixtures::Fixture;
use z2z4::oracle::{self, OracleConfig};
use z2z4::{BinaryCode, BinaryVector, Cap, CodeType, MixedVector, Z2Z4Code};

const CAP: Cap = Cap::DEFAULT;

type Criterion = (&'static str, fn() -> Result<(), String>);

/// Collects every failed clause of a criterion.
#[derive(Default)]
struct Clauses(Vec<String>);

impl Clauses {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.0.push(what());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, got: T, want: T, what: &str) {
        if got != want {
            self.0.push(format!("{what}: got {got:?}, want {want:?}"));
        }
    }

    fn finish(self) -> Result<(), String> {
        if self.0.is_empty() {
            Ok(())
        } else {
            let shown = self.0.len().min(4);
            let mut text = self.0[..shown].join("; ");
            if self.0.len() > shown {
                text.push_str(&format!("; and {} more", self.0.len() - shown));
            }
            Err(text)
        }
    }
}

fn mv(s: &str) -> MixedVector {
    s.parse().unwrap()
}

fn code(alpha: usize, beta: usize, rows: &[&str]) -> Z2Z4Code {
    build_code(alpha, beta, &rows.iter().map(|r| mv(r)).collect::<Vec<_>>()).unwrap()
}

/// `C ∩ C^perp` by closure and ambient scan.
fn oracle_hull(c: &Z2Z4Code) -> BTreeSet<u64> {
    let s = Shape::of(c);
    let set = s.span_of_code(c);
    let rows: Vec<u64> = c.generators().iter().map(|g| s.pack(g)).collect();
    s.dual(&rows).intersection(&set).copied().collect()
}

fn oracle_acd(c: &Z2Z4Code) -> bool {
    oracle_hull(c).len() == 1
}

fn image_set(c: &Z2Z4Code) -> BTreeSet<u64> {
    let s = Shape::of(c);
    s.image(&s.span_of_code(c))
}

fn dual_image_set(c: &Z2Z4Code) -> BTreeSet<u64> {
    let s = Shape::of(c);
    let rows: Vec<u64> = c.generators().iter().map(|g| s.pack(g)).collect();
    s.image(&s.dual(&rows))
}

fn printed_binary(rows: &[&str]) -> BTreeSet<u64> {
    binary_span(&rows.iter().map(|r| parse_bits(r)).collect::<Vec<_>>())
}

fn binary_code(n: usize, rows: &[&str]) -> BinaryCode {
    BinaryCode::from_generators(n, rows.iter().map(|r| r.parse::<BinaryVector>().unwrap())).unwrap()
}

fn criterion_1_fixture_classifications() -> Result<(), String> {
    let mut c = Clauses::default();
    for (f, acd) in [
        (Fixture::F1, true),
        (Fixture::F2, false),
        (Fixture::F4, true),
        (Fixture::F5, false),
        (Fixture::F7, true),
        (Fixture::FC1, true),
        (Fixture::FC2, true),
        (Fixture::FC3, true),
    ] {
        let code = f.code();
        let lib = duality::is_acd(&code, CAP).unwrap();
        let brute = oracle_acd(&code);
        c.eq(lib, brute, &format!("{} library vs oracle", f.name()));
        c.check(lib == acd, || {
            let witness = duality::acd_witness(&code, CAP).unwrap().map(|w| w.to_string()).unwrap_or_default();
            format!("{} ACD = {lib}, expected {acd} (witness {witness})", f.name())
        });
    }
    for (f, w) in [(Fixture::F2, "1 1 | 2 2"), (Fixture::F5, "0 0 0 | 2 2 2 2")] {
        let code = f.code();
        let s = Shape::of(&code);
        c.eq(duality::acd_witness(&code, CAP).unwrap(), Some(mv(w)), &format!("{} witness", f.name()));
        c.eq(oracle_hull(&code), BTreeSet::from([0, s.parse(w)]), &format!("{} oracle intersection", f.name()));
    }
    let f4 = Fixture::F4.code();
    let r = duality::analyze(&f4, CAP).unwrap();
    c.check(r.cx_lcd && r.cy_lcd, || format!("f4 C_X LCD {} C_Y LCD {}", r.cx_lcd, r.cy_lcd));
    let cx: BTreeSet<u64> = f4.puncture_x().codewords(CAP).unwrap().iter().map(bits_of).collect();
    c.check(is_binary_lcd(&cx, 3), || "f4 oracle: C_X not LCD".into());
    c.check(oracle_acd(f4.puncture_y().code()), || "f4 oracle: C_Y not LCD".into());
    c.finish()
}

const F1_IMAGE: [&str; 3] = ["1 1 0 0 0 0 1", "0 0 1 1 1 0 1", "0 0 0 0 0 1 1"];
const F1_IMAGE_CHECK: [&str; 4] = ["1 0 0 0 1 1 1", "0 1 0 0 1 1 1", "0 0 1 0 1 0 0", "0 0 0 1 1 0 0"];
const FC2_IMAGE: [&str; 4] = ["1 0 0 0 1 1 1 1", "0 1 0 0 0 0 1 1", "0 0 1 0 1 0 1 0", "0 0 0 1 0 1 0 1"];
const FC2_IMAGE_CHECK: [&str; 4] = ["1 0 0 1 0 1 0 0", "0 1 0 0 0 1 0 1", "0 0 1 1 0 0 1 1", "0 0 0 0 1 1 1 1"];

fn criterion_2_gray_images() -> Result<(), String> {
    let mut c = Clauses::default();

    let f1 = Fixture::F1.code();
    let r = duality::analyze(&f1, CAP).unwrap();
    match duality::binary_image(&f1, CAP).unwrap() {
        BinaryImage::Linear(b) => c.eq(b, binary_code(7, &F1_IMAGE), "f1 image vs printed generators"),
        BinaryImage::Nonlinear { .. } => c.check(false, || "f1 image nonlinear".into()),
    }
    c.eq(image_set(&f1), printed_binary(&F1_IMAGE), "f1 oracle image vs printed generators");
    c.eq(binary_dual(&image_set(&f1), 7), printed_binary(&F1_IMAGE_CHECK), "f1 oracle binary dual vs printed check matrix");
    c.eq(r.image_lcd, Some(true), "f1 image LCD");
    c.check(is_binary_lcd(&image_set(&f1), 7), || "f1 oracle: image not LCD".into());
    c.check(r.dual_image_equals_binary_dual, || "f1 statement (vi)".into());
    c.eq(dual_image_set(&f1), binary_dual(&image_set(&f1), 7), "f1 oracle statement (vi)");

    let fc1 = Fixture::FC1.code();
    let r = duality::analyze(&fc1, CAP).unwrap();
    c.check(!r.image_linear && !r.dual_image_linear, || "fc1 images should both be nonlinear".into());
    c.check(!is_binary_linear(&image_set(&fc1)), || "fc1 oracle: image linear".into());
    c.check(!is_binary_linear(&dual_image_set(&fc1)), || "fc1 oracle: dual image linear".into());

    let fc2 = Fixture::FC2.code();
    let r = duality::analyze(&fc2, CAP).unwrap();
    match duality::binary_image(&fc2, CAP).unwrap() {
        BinaryImage::Linear(b) => c.eq(b, binary_code(8, &FC2_IMAGE), "fc2 image vs printed generators"),
        BinaryImage::Nonlinear { .. } => c.check(false, || "fc2 image nonlinear".into()),
    }
    c.eq(image_set(&fc2), printed_binary(&FC2_IMAGE), "fc2 oracle image vs printed generators");
    c.eq(binary_dual(&image_set(&fc2), 8), printed_binary(&FC2_IMAGE_CHECK), "fc2 oracle binary dual vs printed check matrix");
    c.eq(r.image_lcd, Some(true), "fc2 image LCD");
    c.check(is_binary_lcd(&image_set(&fc2), 8), || "fc2 oracle: image not LCD".into());
    c.check(!r.dual_image_linear, || "fc2 dual image linear".into());
    c.check(!is_binary_linear(&dual_image_set(&fc2)), || "fc2 oracle: dual image linear".into());

    let fc3 = Fixture::FC3.code();
    let r = duality::analyze(&fc3, CAP).unwrap();
    let image = image_set(&fc3);
    c.check(r.image_linear && is_binary_linear(&image), || "fc3 image nonlinear".into());
    c.eq(r.image_lcd, Some(false), "fc3 image LCD");
    let want = BTreeSet::from([0, parse_bits("0 0 0 0 0 1 1 1 1 1 1")]);
    c.eq(binary_hull(&image, 11), want, "fc3 oracle image ∩ image^perp");
    c.eq(r.witnesses.get("image_lcd").map(String::as_str), Some("0 0 0 0 0 1 1 1 1 1 1"), "fc3 library witness");
    c.finish()
}

fn criterion_3_d_sets() -> Result<(), String> {
    let mut c = Clauses::default();
    let cases: [(Fixture, &[&str]); 4] = [
        (Fixture::F1, &[]),
        (Fixture::FC1, &["0 0 | 2 0 0 2", "0 0 | 0 2 0 2", "0 0 | 0 0 2 2"]),
        (Fixture::FC2, &["0 0 | 2 0 2", "0 0 | 0 2 2"]),
        (Fixture::FC3, &["0 0 0 | 2 0 0 2", "0 0 0 | 0 2 0 2"]),
    ];
    for (f, printed) in cases {
        let code = f.code();
        let s = Shape::of(&code);
        let want = code_from(&code, printed);
        c.eq(duality::d_set(&code, false, CAP).unwrap().subgroup, want, &format!("{} D_C span", f.name()));
        // Literal D_C over all pairs, then its span.
        let set = s.span_of_code(&code);
        let rows: Vec<u64> = code.generators().iter().map(|g| s.pack(g)).collect();
        let dual = s.dual(&rows);
        let d: Vec<u64> = set.iter().flat_map(|&u| dual.iter().map(move |&v| s.star2(u, v))).collect();
        let printed_rows: Vec<u64> = printed.iter().map(|p| s.parse(p)).collect();
        c.eq(s.span(&d), s.span(&printed_rows), &format!("{} oracle D_C span", f.name()));
    }
    c.finish()
}

fn code_from(like: &Z2Z4Code, rows: &[&str]) -> Z2Z4Code {
    code(like.alpha(), like.beta(), rows)
}

fn criterion_4_single_generator() -> Result<(), String> {
    let mut c = Clauses::default();
    let f6 = Fixture::F6.code();
    let s = Shape::of(&f6);
    let mut words = f6.codewords(CAP).unwrap();
    words.sort();
    c.eq(words, ["0 | 0", "0 | 2", "1 | 1", "1 | 3"].map(mv).to_vec(), "codewords");
    let mut dual = f6.dual().codewords(CAP).unwrap();
    dual.sort();
    c.eq(dual, vec![mv("0 | 0"), mv("1 | 2")], "dual");
    c.eq(s.dual(&[s.parse("1 | 1")]), BTreeSet::from([s.parse("0 | 0"), s.parse("1 | 2")]), "oracle dual");

    let image = ["0 0 0", "1 1 0", "0 1 1", "1 0 1"].map(parse_bits);
    c.eq(image_set(&f6), BTreeSet::from(image), "oracle image");
    c.eq(dual_image_set(&f6), BTreeSet::from(["0 0 0", "1 1 1"].map(parse_bits)), "oracle dual image");
    match duality::binary_image(&f6, CAP).unwrap() {
        BinaryImage::Linear(b) => {
            let got: BTreeSet<u64> = b.codewords(CAP).unwrap().iter().map(bits_of).collect();
            c.eq(got, BTreeSet::from(image), "library image");
        }
        BinaryImage::Nonlinear { .. } => c.check(false, || "library image nonlinear".into()),
    }
    let r = duality::analyze(&f6, CAP).unwrap();
    c.eq((r.image_lcd, r.dual_image_lcd), (Some(true), Some(true)), "library LCD images");
    c.check(is_binary_lcd(&image_set(&f6), 3) && is_binary_lcd(&dual_image_set(&f6), 3), || "oracle LCD images".into());
    c.finish()
}

fn criterion_5_dual_type_formulas() -> Result<(), String> {
    let mut c = Clauses::default();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for i in 0..500 {
        let (alpha, beta) = (rng.gen_range(0..=6), rng.gen_range(0..=5));
        let code = random_code(&mut rng, alpha, beta);
        let s = Shape::of(&code);
        let t = code.code_type();
        let d = code.dual();
        let label = || format!("code #{i} {t}");
        c.eq(d.code_type(), t.dual(), &format!("{} dual type", label()));
        c.check(d.dual() == code, || format!("{} double dual", label()));
        c.eq(code.log2_size() + d.log2_size(), s.bits() as u32, &format!("{} library size product", label()));

        let set = s.span_of_code(&code);
        let rows: Vec<u64> = code.generators().iter().map(|g| s.pack(g)).collect();
        let dual = s.dual(&rows);
        let (g, dl, k) = s.code_type(&set);
        let (gd, dd, kd) = s.code_type(&dual);
        c.eq((g, dl, k), (t.gamma, t.delta, t.kappa), &format!("{} oracle type", label()));
        let want = (s.alpha + g - 2 * k, s.beta + k - g - dl, s.alpha - k);
        c.eq((gd, dd, kd), want, &format!("{} oracle dual type formula", label()));
        c.eq(set.len() * dual.len(), 1 << s.bits(), &format!("{} oracle size product", label()));
        c.eq(s.dual(&s.generators(&dual)), set, &format!("{} oracle double dual", label()));
        if c.0.len() > 5 {
            break;
        }
    }
    c.finish()
}

/// Statements (iii), (iv), (vi) from sets alone.
fn oracle_statements(code: &Z2Z4Code) -> (bool, bool, bool) {
    let s = Shape::of(code);
    let set = s.span_of_code(code);
    let rows: Vec<u64> = code.generators().iter().map(|g| s.pack(g)).collect();
    let dual = s.dual(&rows);
    let image = s.image(&set);
    let dual_image = s.image(&dual);
    let iii = is_binary_linear(&image) && is_binary_linear(&dual_image);
    let iv = set.iter().all(|&u| dual.iter().all(|&v| s.star2(u, v) == 0));
    let vi = dual_image == binary_dual(&image, s.bits());
    (iii, iv, vi)
}

fn criterion_6_six_statements() -> Result<(), String> {
    let mut c = Clauses::default();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut acd_codes: Vec<(String, Z2Z4Code)> = Vec::new();
    let mut attempts = 0;
    while acd_codes.len() < 200 {
        attempts += 1;
        let (alpha, beta) = (rng.gen_range(0..=5), rng.gen_range(0..=4));
        let code = random_code(&mut rng, alpha, beta);
        if oracle_acd(&code) {
            acd_codes.push((format!("random ACD code {}", acd_codes.len()), code));
        }
        assert!(attempts < 100_000, "too few ACD codes");
    }
    for (name, code) in &acd_codes {
        let r = duality::equivalence_report(code, CAP);
        let Ok(r) = r else {
            c.check(false, || format!("{name}: {:?}", r.unwrap_err()));
            continue;
        };
        c.check(r.statements.all_agree(), || format!("{name}: statements {:?}", r.statements));
        let (iii, iv, vi) = oracle_statements(code);
        c.eq((r.statements.iii, r.statements.iv, r.statements.vi), (iii, iv, vi), &format!("{name} oracle (iii),(iv),(vi)"));
    }
    // One-way check: an LCD image forces an LCD dual image equal to the binary dual.
    let fixtures = Fixture::ALL.iter().filter(|f| oracle_acd(&f.code())).map(|f| (f.name().to_string(), f.code()));
    let mut implication_cases = 0;
    for (name, code) in fixtures.chain(acd_codes) {
        let s = Shape::of(&code);
        let image = image_set(&code);
        if !is_binary_lcd(&image, s.bits()) {
            continue;
        }
        implication_cases += 1;
        let dual_image = dual_image_set(&code);
        let holds = is_binary_lcd(&dual_image, s.bits()) && dual_image == binary_dual(&image, s.bits());
        c.check(holds, || {
            let rows: Vec<String> = code.generators().iter().map(|g| g.to_string()).collect();
            format!("LCD image but dual image not the LCD binary dual for {name} [{}]", rows.join("; "))
        });
    }
    c.check(implication_cases > 0, || "no LCD images exercised".into());
    c.finish()
}

fn criterion_7_sufficient_conditions() -> Result<(), String> {
    let mut c = Clauses::default();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut hits = 0;
    for i in 0..500 {
        let (alpha, beta) = (rng.gen_range(0..=5), rng.gen_range(1..=4));
        let count = rng.gen_range(1..=3);
        let rows = random_rows(&mut rng, alpha, beta, count);
        let code = build_code(alpha, beta, &rows).unwrap();
        let raw = GramMatrix::of_rows(&rows);
        let sufficient = duality::sufficient_acd_by_rows(&code)
            || duality::is_gram_invertible(&duality::gram_matrix(&code))
            || raw.meets_row_condition()
            || raw.is_invertible();
        if sufficient {
            hits += 1;
            c.check(oracle_acd(&code), || {
                let text: Vec<String> = rows.iter().map(|r| r.to_string()).collect();
                format!("code #{i} [{}] passes a sufficient test but is not ACD", text.join("; "))
            });
        }
    }
    c.check(hits >= 50, || format!("only {hits} codes met a sufficient condition"));
    let f1 = Fixture::F1.code();
    let gram = duality::gram_matrix(&f1);
    c.check(oracle_acd(&f1), || "f1 oracle: not ACD".into());
    c.check(!duality::sufficient_acd_by_rows(&f1), || "f1 meets the row condition".into());
    c.eq(gram.entry(0, 0).value(), 2, "f1 Gram (1,1) entry");
    c.check(!gram.is_invertible(), || "f1 Gram invertible".into());
    c.finish()
}

fn criterion_8_constructions() -> Result<(), String> {
    let mut c = Clauses::default();
    let mut seed = 0u64;
    for alpha in 1..=8 {
        for delta in 0..=alpha / 2 {
            seed += 1;
            let gx = random_self_orthogonal(alpha, delta, seed).unwrap();
            let code = from_self_orthogonal(alpha, &gx).unwrap();
            let s = Shape::of(&code);
            let set = s.span_of_code(&code);
            let (g, d, k) = s.code_type(&set);
            c.eq((g, d, k), (0, delta, 0), &format!("self-orthogonal ({alpha},{delta}) oracle type"));
            c.eq(code.code_type(), CodeType { alpha, beta: delta, gamma: 0, delta, kappa: 0 }, "library type");
            c.check(oracle_acd(&code), || format!("self-orthogonal ({alpha},{delta}) not ACD"));
            let dual = code.dual();
            let dual_type = CodeType { alpha, beta: delta, gamma: alpha - 2 * delta, delta, kappa: alpha - delta };
            c.eq(dual.code_type(), dual_type, &format!("self-orthogonal ({alpha},{delta}) dual type"));
            let rows: Vec<u64> = code.generators().iter().map(|g| s.pack(g)).collect();
            let dual_set = s.dual(&rows);
            c.eq(s.code_type(&dual_set), (alpha - 2 * delta, delta, alpha - delta), "oracle dual type");
            c.check(oracle_acd(&dual), || format!("self-orthogonal ({alpha},{delta}) dual not ACD"));
            c.check(is_binary_lcd(&s.image(&set), s.bits()), || format!("self-orthogonal ({alpha},{delta}) image not LCD"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..100 {
        let alpha = rng.gen_range(1..=6);
        let k = rng.gen_range(0..=alpha.min(3));
        let basis: Vec<BinaryVector> = loop {
            let b = random_binary_code(&mut rng, alpha);
            if b.dimension() >= k {
                break b.basis()[..k].to_vec();
            }
        };
        let delta = k + rng.gen_range(0..=2);
        let code = free_acd_from_basis(alpha, &basis, delta).unwrap();
        let s = Shape::of(&code);
        c.check(oracle_acd(&code), || format!("free ACD alpha {alpha} delta {delta} not ACD"));
        c.check(is_binary_lcd(&image_set(&code), s.bits()), || format!("free ACD alpha {alpha} delta {delta} image not LCD"));
    }
    for alpha in 1..=8 {
        let code = double_identity(alpha).unwrap();
        let acd = if alpha <= 6 { oracle_acd(&code) } else { duality::is_acd(&code, CAP).unwrap() };
        c.check(acd, || format!("double identity {alpha} not ACD"));
        let cy = code.puncture_y().code().clone();
        c.check(cy.dual() == cy, || format!("double identity {alpha}: C_Y not self-dual"));
        if alpha <= 6 {
            let s = Shape::of(&cy);
            let set = s.span_of_code(&cy);
            c.eq(s.dual(&s.generators(&set)), set, &format!("double identity {alpha} oracle C_Y self-dual"));
        }
    }
    for i in 0..100 {
        let (n, m) = (rng.gen_range(0..=4), rng.gen_range(0..=4));
        let b = random_binary_code(&mut rng, n);
        let q = random_quaternary_code(&mut rng, m);
        let product = separable_product(&b, &q);
        c.check(product.is_separable(), || format!("pair #{i}: product not separable"));
        let bset: BTreeSet<u64> = b.codewords(CAP).unwrap().iter().map(bits_of).collect();
        let lcd_b = is_binary_lcd(&bset, b.length());
        let lcd_q = oracle_acd(q.code());
        c.eq(duality::is_binary_lcd(&b), lcd_b, &format!("pair #{i} binary LCD"));
        c.eq(oracle_acd(&product), lcd_b && lcd_q, &format!("pair #{i} product ACD iff both LCD"));
    }
    c.finish()
}

fn criterion_9_oracle_agreement() -> Result<(), String> {
    let mut c = Clauses::default();
    let cfg = OracleConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut codes: Vec<(String, Z2Z4Code)> = Fixture::ALL.iter().map(|f| (f.name().to_string(), f.code())).collect();
    while codes.len() < Fixture::ALL.len() + 200 {
        let alpha = rng.gen_range(0..=8);
        let beta = rng.gen_range(0..=(20 - alpha) / 2);
        // Small enough for the quadratic closure test on the image.
        let count = rng.gen_range(0..=(alpha + beta).min(5));
        let code = build_code(alpha, beta, &random_rows(&mut rng, alpha, beta, count)).unwrap();
        codes.push((format!("random #{} ({alpha},{beta})", codes.len()), code));
    }
    for (name, code) in &codes {
        assert!(code.alpha() + 2 * code.beta() <= 20);
        let structural: BTreeSet<MixedVector> = code.dual().codewords(CAP).unwrap().into_iter().collect();
        let brute: BTreeSet<MixedVector> = oracle::brute_dual(code, &cfg).unwrap().into_iter().collect();
        c.check(structural == brute, || format!("{name}: dual"));
        c.eq(duality::is_acd(code, CAP).unwrap(), oracle::brute_is_acd(code, &cfg).unwrap(), &format!("{name}: ACD"));
        let image = oracle::brute_image(code, &cfg).unwrap();
        c.eq(duality::is_gray_image_linear(code), oracle::brute_linearity(&image, &cfg).unwrap(), &format!("{name}: linearity"));
        let report = duality::analyze(code, CAP).unwrap();
        let vi = oracle::brute_dual_image_is_binary_dual(code, &cfg).unwrap();
        c.eq(report.dual_image_equals_binary_dual, vi, &format!("{name}: statement (vi)"));
    }
    c.finish()
}

fn criterion_10_gram_f1_recomputed_printed_2_0_entry_is_typo_and_f7_printed_2x2_is_typo() -> Result<(), String> {
    let mut c = Clauses::default();
    let f1 = Fixture::F1.code();
    c.eq(duality::gram_matrix(&f1).to_rows(), vec![vec![2, 2], vec![2, 3]], "f1 Gram");
    let s = Shape::of(&f1);
    let rows: Vec<u64> = f1.generators().iter().map(|g| s.pack(g)).collect();
    let gram: Vec<Vec<u64>> = rows.iter().map(|&u| rows.iter().map(|&v| s.ip(u, v)).collect()).collect();
    c.eq(gram, vec![vec![2, 2], vec![2, 3]], "f1 Gram by direct products");

    let f7 = Fixture::F7.file();
    c.eq(f7.rows.len(), 3, "f7 printed rows");
    let g7 = GramMatrix::of_rows(&f7.rows);
    c.eq(g7.to_rows(), vec![vec![2, 0, 0], vec![0, 1, 2], vec![0, 2, 0]], "f7 Gram");
    c.eq(g7.determinant().value(), 0, "f7 Gram determinant");
    let s = Shape { alpha: f7.alpha, beta: f7.beta };
    let rows: Vec<u64> = f7.rows.iter().map(|r| s.pack(r)).collect();
    let gram: Vec<Vec<u64>> = rows.iter().map(|&u| rows.iter().map(|&v| s.ip(u, v)).collect()).collect();
    c.eq(common::det_mod4(&gram), 0, "f7 Leibniz determinant");
    c.finish()
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("criterion_1_fixture_classifications", criterion_1_fixture_classifications),
        ("criterion_2_gray_images", criterion_2_gray_images),
        ("criterion_3_d_sets", criterion_3_d_sets),
        ("criterion_4_single_generator", criterion_4_single_generator),
        ("criterion_5_dual_type_formulas", criterion_5_dual_type_formulas),
        ("criterion_6_six_statements", criterion_6_six_statements),
        ("criterion_7_sufficient_conditions", criterion_7_sufficient_conditions),
        ("criterion_8_constructions", criterion_8_constructions),
        ("criterion_9_oracle_agreement", criterion_9_oracle_agreement),
        (
            "criterion_10_gram_f1_recomputed_printed_2_0_entry_is_typo_and_f7_printed_2x2_is_typo",
            criterion_10_gram_f1_recomputed_printed_2_0_entry_is_typo_and_f7_printed_2x2_is_typo,
        ),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (name, run) in criteria {
        if !filter.is_empty() && !filter.iter().any(|f| name.contains(f.as_str())) {
            continue;
        }
        let start = std::time::Instant::now();
        let outcome = panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS {name} ({secs:.1}s)"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name} ({secs:.1}s): {why}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
