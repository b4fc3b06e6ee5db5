//! Decomposition files, bound tables and their JSON forms.
//!
//! A decomposition file names its module on a `module` line, then lists one
//! Stanley space per line as `generator ; free variables`:
//!
//! ```text
//! # sdepth 1
//! module n=2; (x1^2, x1*x2)
//! x1^2 ; x1
//! x1*x2 ; x1, x2
//! ```

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use stanley_core::bounds::{BoundReport, Violation};
use stanley_core::ideal::SupportShape;
use stanley_core::stanley::{Mismatch, StanleyDecomposition, StanleySpace};
use stanley_core::Sdepth;
use thiserror::Error;

use crate::parse::{parse_module, parse_monomial, parse_variable, print_module, ParseError};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("missing 'module' line")]
    MissingModule,
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
}

impl FormatError {
    fn at(line: usize, e: impl ToString) -> Self {
        FormatError::Line {
            line,
            message: e.to_string(),
        }
    }
}

pub fn var_name(j: usize) -> String {
    format!("x{}", j + 1)
}

fn var_names(s: &StanleySpace) -> Vec<String> {
    s.free_vars().map(var_name).collect()
}

/// Integer or the string `"infinite"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SdepthJson {
    Finite(usize),
    Infinite(Infinite),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Infinite {
    Infinite,
}

impl From<Sdepth> for SdepthJson {
    fn from(s: Sdepth) -> Self {
        match s {
            Sdepth::Finite(v) => SdepthJson::Finite(v),
            Sdepth::Infinite => SdepthJson::Infinite(Infinite::Infinite),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SpaceJson {
    pub generator: String,
    pub free_vars: Vec<String>,
}

impl From<&StanleySpace> for SpaceJson {
    fn from(s: &StanleySpace) -> Self {
        SpaceJson {
            generator: s.generator.to_string(),
            free_vars: var_names(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub module: String,
    pub sdepth: SdepthJson,
    pub spaces: Vec<SpaceJson>,
}

impl From<&StanleyDecomposition> for DecompositionJson {
    fn from(d: &StanleyDecomposition) -> Self {
        DecompositionJson {
            module: print_module(&d.module),
            sdepth: d.sdepth().into(),
            spaces: d.spaces.iter().map(SpaceJson::from).collect(),
        }
    }
}

fn space_from_parts(generator: &str, vars: &[&str], n: usize) -> Result<StanleySpace, String> {
    let g = parse_monomial(generator, n).map_err(|e| e.to_string())?;
    let mut free = 0u64;
    for v in vars {
        let j = parse_variable(v).map_err(|e: ParseError| e.to_string())?;
        if j >= n {
            return Err(format!("{v} is outside the ring"));
        }
        free |= 1 << j;
    }
    StanleySpace::new(g, free).map_err(|e| e.to_string())
}

impl DecompositionJson {
    pub fn to_decomposition(&self) -> Result<StanleyDecomposition, FormatError> {
        let module = parse_module(&self.module).map_err(|e| FormatError::at(0, e))?;
        let spaces = self
            .spaces
            .iter()
            .enumerate()
            .map(|(k, s)| {
                let vars: Vec<&str> = s.free_vars.iter().map(String::as_str).collect();
                space_from_parts(&s.generator, &vars, module.n()).map_err(|e| FormatError::at(k + 1, e))
            })
            .collect::<Result<_, _>>()?;
        StanleyDecomposition::new(module, spaces).map_err(|e| FormatError::at(0, e))
    }
}

pub fn space_line(s: &StanleySpace) -> String {
    let vars = var_names(s).join(", ");
    if vars.is_empty() {
        format!("{} ;", s.generator)
    } else {
        format!("{} ; {vars}", s.generator)
    }
}

/// The text form of a decomposition; [`read_decomposition`] reads it back.
pub fn write_decomposition(d: &StanleyDecomposition) -> String {
    let mut out = format!("# sdepth {}\nmodule {}\n", d.sdepth(), print_module(&d.module));
    for s in &d.spaces {
        out.push_str(&space_line(s));
        out.push('\n');
    }
    out
}

/// Reads the text form, or the JSON form when the input starts with `{`.
pub fn read_decomposition(text: &str) -> Result<StanleyDecomposition, FormatError> {
    if text.trim_start().starts_with('{') {
        let doc: DecompositionJson = serde_json::from_str(text)?;
        return doc.to_decomposition();
    }
    let mut module = None;
    let mut spaces = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let lineno = k + 1;
        if let Some(rest) = line.strip_prefix("module") {
            if module.is_some() {
                return Err(FormatError::at(lineno, "second 'module' line"));
            }
            module = Some(parse_module(rest).map_err(|e| FormatError::at(lineno, e))?);
            continue;
        }
        let Some(m) = &module else {
            return Err(FormatError::MissingModule);
        };
        let Some((g, vars)) = line.split_once(';') else {
            return Err(FormatError::at(lineno, "expected 'generator ; variables'"));
        };
        let vars: Vec<&str> = vars
            .split(',')
            .map(str::trim)
            .filter(|v| !v.is_empty())
            .collect();
        spaces.push(space_from_parts(g.trim(), &vars, m.n()).map_err(|e| FormatError::at(lineno, e))?);
    }
    let module = module.ok_or(FormatError::MissingModule)?;
    StanleyDecomposition::new(module, spaces).map_err(|e| FormatError::at(0, e))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MismatchJson {
    pub degree: String,
    pub count: usize,
    pub expected: usize,
}

impl From<&Mismatch> for MismatchJson {
    fn from(m: &Mismatch) -> Self {
        MismatchJson {
            degree: m.degree.to_string(),
            count: m.count,
            expected: m.expected,
        }
    }
}

pub fn describe_mismatch(m: &Mismatch) -> String {
    let what = if m.expected == 0 {
        "outside the module"
    } else {
        "in the module"
    };
    format!(
        "{} is {what} but lies in {} space{}",
        m.degree,
        m.count,
        if m.count == 1 { "" } else { "s" }
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeJson {
    pub t: usize,
    pub r: usize,
    pub p: usize,
    pub n: usize,
}

impl From<SupportShape> for ShapeJson {
    fn from(s: SupportShape) -> Self {
        ShapeJson {
            t: s.t,
            r: s.r,
            p: s.p,
            n: s.n,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryJson {
    pub name: String,
    pub order: String,
    pub kind: String,
    pub applicable: bool,
    /// Exact form (`7/2`, `4..5`, `3`), absent when not applicable.
    pub value: Option<String>,
    /// Integer used in comparisons.
    pub floor: Option<usize>,
    pub citation: String,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationJson {
    pub name: String,
    pub order: String,
    pub kind: String,
    pub value: String,
    pub exact: SdepthJson,
}

impl From<&Violation> for ViolationJson {
    fn from(v: &Violation) -> Self {
        ViolationJson {
            name: v.name.into(),
            order: order_name(v.order).into(),
            kind: v.kind.to_string(),
            value: v.value.to_string(),
            exact: v.exact.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct BoundReportJson {
    pub intersection: String,
    pub shape: ShapeJson,
    pub swapped_shape: ShapeJson,
    pub irreducible: bool,
    pub entries: Vec<EntryJson>,
    pub exact: Option<SdepthJson>,
    pub best_upper: Option<usize>,
    pub best_lower: Option<usize>,
    pub violations: Vec<ViolationJson>,
}

fn order_name(o: stanley_core::bounds::PairOrder) -> &'static str {
    match o {
        stanley_core::bounds::PairOrder::Given => "given",
        stanley_core::bounds::PairOrder::Swapped => "swapped",
    }
}

impl From<&BoundReport> for BoundReportJson {
    fn from(r: &BoundReport) -> Self {
        BoundReportJson {
            intersection: crate::parse::print_ideal(&r.intersection),
            shape: r.shape.into(),
            swapped_shape: r.swapped_shape.into(),
            irreducible: r.irreducible,
            entries: r
                .entries
                .iter()
                .map(|e| EntryJson {
                    name: e.name.into(),
                    order: order_name(e.order).into(),
                    kind: e.kind.to_string(),
                    applicable: e.applicable,
                    value: e.value.map(|v| v.to_string()),
                    floor: e.value.and_then(|v| v.floor()),
                    citation: e.citation.into(),
                    note: e.note.map(str::to_owned),
                })
                .collect(),
            exact: r.exact.map(SdepthJson::from),
            best_upper: r.best_upper(),
            best_lower: r.best_lower(),
            violations: r.violations().iter().map(ViolationJson::from).collect(),
        }
    }
}

fn shape_text(s: SupportShape) -> String {
    format!("(t, r, p, n) = ({}, {}, {}, {})", s.t, s.r, s.p, s.n)
}

/// Aligned table of every bound with a summary underneath.
pub fn bound_table(r: &BoundReport) -> String {
    let header = ["name", "order", "kind", "value", "applicable", "citation"];
    let rows: Vec<[String; 6]> = r
        .entries
        .iter()
        .map(|e| {
            [
                e.name.to_string(),
                order_name(e.order).to_string(),
                e.kind.to_string(),
                e.value.map_or_else(|| "-".to_string(), |v| v.to_string()),
                if e.applicable { "yes" } else { "no" }.to_string(),
                e.citation.to_string(),
            ]
        })
        .collect();
    let mut widths = header.map(|h| h.chars().count());
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let _ = writeln!(out, "Q ∩ Q' = {}", r.intersection);
    let _ = writeln!(out, "shape {}", shape_text(r.shape));
    if r.swapped_shape != r.shape {
        let _ = writeln!(out, "swapped shape {}", shape_text(r.swapped_shape));
    }
    let _ = writeln!(out, "irreducible: {}", if r.irreducible { "yes" } else { "no" });
    out.push('\n');
    let mut line = |cells: &[String]| {
        let mut l = String::new();
        for (k, (cell, w)) in cells.iter().zip(widths).enumerate() {
            if k + 1 == cells.len() {
                l.push_str(cell);
            } else {
                let pad = w - cell.chars().count();
                let _ = write!(l, "{cell}{}  ", " ".repeat(pad));
            }
        }
        out.push_str(l.trim_end());
        out.push('\n');
    };
    line(&header.map(String::from));
    for row in &rows {
        line(row);
    }
    out.push('\n');
    match (r.best_lower(), r.best_upper()) {
        (Some(lo), Some(hi)) => {
            let _ = writeln!(out, "bounds: {lo} <= sdepth <= {hi}");
        }
        (Some(lo), None) => {
            let _ = writeln!(out, "bounds: sdepth >= {lo}");
        }
        (None, Some(hi)) => {
            let _ = writeln!(out, "bounds: sdepth <= {hi}");
        }
        (None, None) => {
            let _ = writeln!(out, "bounds: none applicable");
        }
    }
    if let Some(exact) = r.exact {
        let _ = writeln!(out, "exact sdepth: {exact}");
        let violations = r.violations();
        if violations.is_empty() {
            let _ = writeln!(out, "violations: none");
        }
        for v in violations {
            let _ = writeln!(
                out,
                "VIOLATION: {} ({}, {}) = {} but exact = {}",
                v.name,
                order_name(v.order),
                v.kind,
                v.value,
                v.exact
            );
        }
    }
    out
}
