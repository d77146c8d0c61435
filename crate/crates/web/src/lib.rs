//! Browser bindings. Each export takes and returns plain strings so the page
//! needs no glue beyond the generated module.

use wasm_bindgen::prelude::*;
use z2z4::code::Cap;
use z2z4::constructions::{random_self_orthogonal, ConstructionRecipe};
use z2z4::duality::{self, BinaryImage};
use z2z4::{CodeFile, Z2Z4Code};

/// Enumeration cap for the page; keeps every call interactive.
const PAGE_CAP: Cap = Cap(1 << 20);

fn parse(text: &str) -> Result<Z2Z4Code, String> {
    let file: CodeFile = text.parse().map_err(|e: z2z4::Error| e.to_string())?;
    file.to_code().map_err(|e| e.to_string())
}

pub fn analyze_text(text: &str) -> Result<String, String> {
    let code = parse(text)?;
    duality::analyze(&code, PAGE_CAP).map(|r| r.to_json()).map_err(|e| e.to_string())
}

pub fn gray_text(text: &str) -> Result<String, String> {
    let code = parse(text)?;
    let image = duality::binary_image(&code, PAGE_CAP).map_err(|e| e.to_string())?;
    Ok(match image {
        BinaryImage::Linear(b) => {
            let rows: Vec<String> = b.basis().iter().map(ToString::to_string).collect();
            format!("linear, dimension {}\n{}", b.dimension(), rows.join("\n"))
        }
        BinaryImage::Nonlinear { codewords, witness: (a, b) } => {
            format!("nonlinear, {} codewords\n{a} + {b} is not in the image", codewords.len())
        }
    })
}

/// `recipe` is `free-acd`, `self-orthogonal-x` or `double-identity`; the
/// binary rows are drawn at random from `seed` where the recipe needs them.
pub fn construct_text(recipe: &str, alpha: usize, delta: usize, seed: u64) -> Result<String, String> {
    let recipe = match recipe {
        "double-identity" => ConstructionRecipe::DoubleIdentity { alpha },
        "self-orthogonal-x" => {
            let gx = random_self_orthogonal(alpha, delta, seed).map_err(|e| e.to_string())?;
            ConstructionRecipe::SelfOrthogonalX { alpha, gx }
        }
        "free-acd" => {
            let gx = random_self_orthogonal(alpha, delta.min(alpha / 2), seed).map_err(|e| e.to_string())?;
            ConstructionRecipe::FreeAcd { alpha, basis: gx, delta }
        }
        other => return Err(format!("unknown recipe `{other}`")),
    };
    let code = recipe.build().map_err(|e| e.to_string())?;
    Ok(CodeFile::from_code(&code).to_string())
}

#[wasm_bindgen]
pub fn analyze(text: &str) -> Result<String, JsError> {
    analyze_text(text).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn gray(text: &str) -> Result<String, JsError> {
    gray_text(text).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn construct(recipe: &str, alpha: usize, delta: usize, seed: u64) -> Result<String, JsError> {
    construct_text(recipe, alpha, delta, seed).map_err(|e| JsError::new(&e))
}
