use serde::Deserialize;
use serde_json::Value;
use ufdlab::coeff::Field;
use ufdlab::constructions::{pham_brieskorn, present_extension, trinomial_ring, Presentation, PresentedRing, TrinomialData};

use crate::params::Params;
use crate::runner::{fail, ClaimError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Json,
    CasText,
}

#[derive(Deserialize)]
struct BuilderInput {
    builder: String,
    #[serde(default)]
    params: Value,
}

/// Renders a ring given either as a serialized [`Presentation`] or as
/// `{"builder": name, "params": {...}}` with builders `pham-brieskorn`,
/// `trinomial`, `samuel` and `free`.
pub fn export_ring(input: &Value, format: ExportFormat) -> Result<String, ClaimError> {
    if input.get("builder").is_some() {
        let b: BuilderInput = serde_json::from_value(input.clone()).map_err(|e| ClaimError::Params(e.to_string()))?;
        let params = if b.params.is_null() { Value::Object(Default::default()) } else { b.params };
        let p = Params::new(&params)?;
        with_field!(p.field("QQ")?, F => build::<F>(&b.builder, &p).map(|r| render(&r, format)))
    } else {
        let pres: Presentation = serde_json::from_value(input.clone()).map_err(|e| ClaimError::Params(format!("not a presentation: {e}")))?;
        let field = pres.field.clone();
        with_field!(field.as_str(), F => PresentedRing::<F>::from_presentation(&pres).map_err(fail).map(|r| render(&r, format)))
    }
}

fn render<F: Field>(ring: &PresentedRing<F>, format: ExportFormat) -> String {
    match format {
        ExportFormat::CasText => ring.cas_text(),
        ExportFormat::Json => {
            let mut s = serde_json::to_string_pretty(&ring.to_presentation()).expect("presentations serialize");
            s.push('\n');
            s
        }
    }
}

fn build<F: Field>(builder: &str, p: &Params) -> Result<PresentedRing<F>, ClaimError> {
    match builder {
        "pham-brieskorn" => Ok(pham_brieskorn::<F>(&p.i64_list("exponents")?).map_err(fail)?.ring),
        "trinomial" => {
            let data = TrinomialData {
                partition: p.i64_list("partition")?.iter().map(|&n| n.max(0) as usize).collect(),
                exponents: p.i64_lists("exponents")?,
                constants: p.scalars::<F>("constants")?,
                names: if p.has("names") { Some(p.str_lists("names")?) } else { None },
            };
            Ok(trinomial_ring(&data).map_err(fail)?.ring)
        }
        "samuel" => {
            let vars = p.vars("variables", &["u", "v"])?;
            let base = PresentedRing::free(&vars, None, "polynomial ring").map_err(fail)?;
            let (a, b) = (p.poly::<F>(&vars, "a")?, p.poly::<F>(&vars, "b")?);
            Ok(present_extension(&base, &a, &b).map_err(fail)?.ring)
        }
        "free" => {
            let vars = p.vars("variables", &[])?;
            let grading = if p.has("weights") { Some(ufdlab::poly::Grading::new(&vars, p.i64_list("weights")?).map_err(fail)?) } else { None };
            PresentedRing::free(&vars, grading, "").map_err(fail)
        }
        other => Err(ClaimError::Params(format!("unknown builder `{other}`; expected pham-brieskorn, trinomial, samuel or free"))),
    }
}
