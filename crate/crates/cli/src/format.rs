//! Matrix files in, text or JSON out.
//!
//! A matrix file is a header line `d r` followed by `d` lines of `r`
//! whitespace-separated integers. Blank lines and `#` comments are skipped.

use std::fmt::Write as _;

use serde_json::{json, Value};
use toric_core::{
    Binomial, DegreeReport, ExponentVector, Fiber, GrobnerBasis, ModelMatrix, NablaComplex, SemigroupDegree,
    Verdict,
};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

fn parse_ints(line: &str, line_no: usize) -> Result<Vec<i64>, CliError> {
    let mut out = Vec::new();
    let mut search_from = 0;
    for token in line.split_whitespace() {
        let offset = line[search_from..].find(token).map(|p| p + search_from).unwrap_or(0);
        search_from = offset + token.len();
        let value = token.parse::<i64>().map_err(|_| CliError::Parse {
            line: line_no,
            column: line[..offset].chars().count() + 1,
            message: format!("`{token}` is not an integer"),
        })?;
        out.push(value);
    }
    Ok(out)
}

/// Content lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("");
        (!line.trim().is_empty()).then_some((i + 1, line))
    })
}

/// An integer grid in the `d r` header format, unvalidated.
pub fn parse_grid(text: &str) -> Result<Vec<Vec<i64>>, CliError> {
    let mut lines = content_lines(text);
    let (header_no, header) =
        lines.next().ok_or(CliError::Parse { line: 1, column: 1, message: "missing `d r` header".into() })?;
    let dims = parse_ints(header, header_no)?;
    let [d, r] = dims[..] else {
        return Err(CliError::Parse {
            line: header_no,
            column: 1,
            message: format!("header must be `d r`, found {} values", dims.len()),
        });
    };
    if d < 0 || r < 0 {
        return Err(CliError::Parse { line: header_no, column: 1, message: "negative dimension".into() });
    }
    let (d, r) = (d as usize, r as usize);
    let mut rows = Vec::with_capacity(d);
    let mut last_line = header_no;
    for (line_no, line) in lines {
        last_line = line_no;
        if rows.len() == d {
            return Err(CliError::Parse { line: line_no, column: 1, message: format!("more than {d} rows") });
        }
        let row = parse_ints(line, line_no)?;
        if row.len() != r {
            return Err(CliError::Parse {
                line: line_no,
                column: 1,
                message: format!("expected {r} entries, found {}", row.len()),
            });
        }
        rows.push(row);
    }
    if rows.len() != d {
        return Err(CliError::Parse {
            line: last_line + 1,
            column: 1,
            message: format!("expected {d} rows, found {}", rows.len()),
        });
    }
    Ok(rows)
}

pub fn parse_matrix(text: &str) -> Result<ModelMatrix, CliError> {
    Ok(ModelMatrix::new(parse_grid(text)?)?)
}

/// `d` integers separated by whitespace or commas.
pub fn parse_degree(text: &str, model: &ModelMatrix) -> Result<SemigroupDegree, CliError> {
    let coords = parse_ints(&text.replace(',', " "), 1)?;
    Ok(model.parse_degree(coords)?)
}

fn vector(u: &ExponentVector) -> Value {
    json!(u.as_slice())
}

fn finish(value: Value) -> String {
    let mut s = value.to_string();
    s.push('\n');
    s
}

pub fn emit_model(model: &ModelMatrix, format: Format) -> String {
    match format {
        Format::Text => model.to_string(),
        Format::Json => finish(json!({
            "rows": model.rows(),
            "weights": model.weights().as_slice(),
        })),
    }
}

pub fn emit_binomials(binomials: &[Binomial], format: Format) -> String {
    match format {
        Format::Text => binomials.iter().map(|b| format!("{b}\n")).collect(),
        Format::Json => finish(json!({
            "binomials": binomials
                .iter()
                .map(|b| json!({"plus": vector(b.plus()), "minus": vector(b.minus())}))
                .collect::<Vec<_>>(),
        })),
    }
}

/// Reduced basis elements with the leading term first.
pub fn emit_grobner(gb: &GrobnerBasis, format: Format) -> String {
    match format {
        Format::Text => gb.elements().iter().map(|g| format!("{} - {}\n", g.lead, g.trail)).collect(),
        Format::Json => finish(json!({
            "order": gb.order().rows(),
            "binomials": gb
                .elements()
                .iter()
                .map(|g| json!({"plus": vector(&g.lead), "minus": vector(&g.trail)}))
                .collect::<Vec<_>>(),
        })),
    }
}

pub fn emit_monomials(monomials: &[ExponentVector], format: Format) -> String {
    match format {
        Format::Text => monomials.iter().map(|u| format!("{u}\n")).collect(),
        Format::Json => finish(json!({ "monomials": monomials.iter().map(vector).collect::<Vec<_>>() })),
    }
}

pub fn emit_fiber(fiber: &Fiber, format: Format) -> String {
    match format {
        Format::Text => {
            let mut s = format!("degree {} size {}\n", fiber.degree(), fiber.len());
            s.push_str(&emit_monomials(fiber.monomials(), Format::Text));
            s
        }
        Format::Json => finish(json!({
            "degree": fiber.degree().as_slice(),
            "monomials": fiber.monomials().iter().map(vector).collect::<Vec<_>>(),
        })),
    }
}

pub fn emit_nabla(nabla: &NablaComplex, format: Format) -> String {
    let monomials = nabla.fiber().monomials();
    let edges = nabla.edges();
    let components = nabla.connected_components();
    match format {
        Format::Text => {
            let mut s = format!(
                "degree {} vertices {} edges {} components {}\n",
                nabla.fiber().degree(),
                monomials.len(),
                edges.len(),
                components.len()
            );
            s.push_str("vertices:\n");
            for (i, u) in monomials.iter().enumerate() {
                let _ = writeln!(s, "  {i}: {u}");
            }
            s.push_str("edges:\n");
            for (i, j) in &edges {
                let _ = writeln!(s, "  {i} {j}");
            }
            s.push_str("components:\n");
            for c in &components {
                let names: Vec<String> = c.iter().map(|&i| monomials[i].to_string()).collect();
                let _ = writeln!(s, "  {{{}}}", names.join(", "));
            }
            s
        }
        Format::Json => finish(json!({
            "degree": nabla.fiber().degree().as_slice(),
            "monomials": monomials.iter().map(vector).collect::<Vec<_>>(),
            "edges": edges.iter().map(|&(i, j)| json!([i, j])).collect::<Vec<_>>(),
            "components": components,
        })),
    }
}

pub fn emit_reports(reports: &[DegreeReport], format: Format) -> String {
    match format {
        Format::Text => reports
            .iter()
            .map(|r| {
                let mut flags = Vec::new();
                if r.minimal {
                    flags.push("minimal");
                }
                if r.indispensable {
                    flags.push("indispensable");
                }
                if r.quasi_indispensable {
                    flags.push("quasi-indispensable");
                }
                format!(
                    "degree {} fiber {} components {} {}\n",
                    r.degree,
                    r.fiber_size,
                    r.component_count,
                    flags.join(" ")
                )
            })
            .collect(),
        Format::Json => finish(Value::Array(
            reports
                .iter()
                .map(|r| {
                    json!({
                        "degree": r.degree.as_slice(),
                        "fiber_size": r.fiber_size,
                        "components": r.component_count,
                        "minimal": r.minimal,
                        "indispensable": r.indispensable,
                    })
                })
                .collect(),
        )),
    }
}

pub fn emit_verdict(verdict: &Verdict, format: Format) -> String {
    let (label, witness) = match verdict {
        Verdict::Unique => ("UNIQUE", None),
        Verdict::NotUnique { witness } => ("NOT_UNIQUE", Some(witness)),
    };
    match format {
        Format::Text => match witness {
            Some(w) => format!("{label} witness {w}\n"),
            None => format!("{label}\n"),
        },
        Format::Json => finish(json!({
            "verdict": label,
            "witness": witness.map(|w| w.as_slice().to_vec()),
        })),
    }
}
