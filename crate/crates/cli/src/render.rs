//! Exact JSON and text rendering. Rationals are always `"p/q"` strings in JSON.

use cherednik_core::rational::format_decimal;
use cherednik_core::weights::{formal_weyl_dim, is_dominant};
use cherednik_core::{ModuleDecomp, Rational, Weight};
use serde_json::{json, Value};

pub fn rational(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn rationals(rs: &[Rational]) -> Value {
    Value::Array(rs.iter().map(rational).collect())
}

pub fn weight(w: &Weight) -> Value {
    json!({
        "weight": rationals(w.coords()),
        "weight_plus_rho": rationals(&w.shifted()),
    })
}

/// Summands in descending order, each with its formal dimension.
pub fn decomposition(d: &ModuleDecomp) -> Value {
    Value::Array(
        d.iter()
            .map(|(w, m)| {
                let mut v = weight(w);
                v["multiplicity"] = json!(m);
                v["dim"] = rational(&formal_weyl_dim(w));
                v["virtual"] = json!(!is_dominant(w));
                v
            })
            .collect(),
    )
}

pub struct TextStyle {
    pub decimal: bool,
}

impl TextStyle {
    pub fn num(&self, r: &Rational) -> String {
        if self.decimal {
            format_decimal(r)
        } else {
            r.to_string()
        }
    }

    pub fn tuple(&self, coords: &[Rational]) -> String {
        let parts: Vec<String> = coords.iter().map(|c| self.num(c)).collect();
        format!("({})", parts.join(", "))
    }

    pub fn list(&self, coords: &[Rational]) -> String {
        if coords.is_empty() {
            return "0".into();
        }
        coords.iter().map(|c| self.num(c)).collect::<Vec<_>>().join(", ")
    }

    /// Aligned table of summands in ρ-shifted and plain coordinates.
    pub fn decomposition(&self, d: &ModuleDecomp) -> String {
        let rows: Vec<[String; 4]> = d
            .iter()
            .map(|(w, m)| {
                let note = if is_dominant(w) { String::new() } else { "virtual".into() };
                [self.tuple(&w.shifted()), self.tuple(w.coords()), format!("×{m}"), note]
            })
            .collect();
        let header = ["μ+ρ".to_string(), "μ".into(), "mult".into(), String::new()];
        aligned(std::iter::once(header).chain(rows))
    }
}

pub fn aligned<const K: usize>(rows: impl IntoIterator<Item = [String; K]>) -> String {
    let rows: Vec<[String; K]> = rows.into_iter().collect();
    let mut widths = [0usize; K];
    for r in &rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for r in &rows {
        let mut line = String::from("  ");
        for (k, cell) in r.iter().enumerate() {
            line.push_str(cell);
            if k + 1 < K {
                line.push_str(&" ".repeat(widths[k] - cell.chars().count() + 2));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
