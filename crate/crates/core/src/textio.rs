//! Text formats: the equation input format, human-readable solutions, and a
//! JSON document for machines.
//!
//! Input is one equation per line, terms on either side of `=`:
//!
//! ```text
//! # comment
//! 6x1 - 12x2 - 8x3 + 22x4 = 14
//! 3*a + 2b = c - 4
//! ```
//!
//! Variables are numbered by first appearance. A variable repeated within an
//! equation has its coefficients summed.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::Integer;
use crate::model::{GeneralSolution, LinearSystem, NoSolution, SolveOutcome, SolverTrace, Witness};

/// 1-based position in the input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SourceSpan {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{span}: {message}")]
    Syntax { span: SourceSpan, message: String },
    #[error("line {line}: equation has no '='")]
    MissingEquals { line: usize },
    #[error("input contains no equations")]
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(Integer),
    Ident(String),
    Plus,
    Minus,
    Star,
    Equals,
}

fn tokenize(line: &str, lineno: usize) -> Result<Vec<(Tok, SourceSpan)>, ParseError> {
    let chars: Vec<char> = line.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let span = SourceSpan {
            line: lineno,
            column: i + 1,
        };
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' | '·' => Tok::Star,
            '=' => Tok::Equals,
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push((Tok::Int(digits.parse().expect("ascii digits")), span));
                continue;
            }
            a if a.is_alphabetic() => {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((Tok::Ident(chars[start..i].iter().collect()), span));
                continue;
            }
            other => {
                return Err(ParseError::Syntax {
                    span,
                    message: format!("unexpected character '{other}'"),
                })
            }
        };
        out.push((tok, span));
        i += 1;
    }
    Ok(out)
}

/// Terms of one side: coefficients by variable name (in order of first
/// appearance) and the constant.
struct Side {
    terms: Vec<(String, Integer)>,
    constant: Integer,
}

fn parse_side(toks: &[(Tok, SourceSpan)], end: SourceSpan) -> Result<Side, ParseError> {
    let mut side = Side {
        terms: Vec::new(),
        constant: Integer::zero(),
    };
    let mut pos = 0;
    let err = |span: SourceSpan, message: &str| ParseError::Syntax {
        span,
        message: message.to_string(),
    };
    if toks.is_empty() {
        return Err(err(end, "expected a term"));
    }
    let mut first = true;
    while pos < toks.len() {
        let mut negative = false;
        match &toks[pos].0 {
            Tok::Plus => pos += 1,
            Tok::Minus => {
                negative = true;
                pos += 1;
            }
            _ if first => {}
            _ => return Err(err(toks[pos].1, "expected '+' or '-' between terms")),
        }
        first = false;
        let span = toks.get(pos).map_or(end, |t| t.1);
        let mut coeff: Option<Integer> = None;
        if let Some((Tok::Int(v), _)) = toks.get(pos) {
            coeff = Some(v.clone());
            pos += 1;
            if let Some((Tok::Star, s)) = toks.get(pos) {
                pos += 1;
                if !matches!(toks.get(pos), Some((Tok::Ident(_), _))) {
                    return Err(err(*s, "expected a variable after '*'"));
                }
            }
        }
        let var = if let Some((Tok::Ident(name), _)) = toks.get(pos) {
            pos += 1;
            Some(name.clone())
        } else {
            None
        };
        let mut value = match (&coeff, &var) {
            (Some(c), _) => c.clone(),
            (None, Some(_)) => Integer::one(),
            (None, None) => return Err(err(span, "expected a number or a variable")),
        };
        if negative {
            value = -value;
        }
        match var {
            Some(name) => side.terms.push((name, value)),
            None => side.constant += value,
        }
    }
    Ok(side)
}

/// Parses the equation format described at the top of this module.
pub fn parse_system(text: &str) -> Result<LinearSystem, ParseError> {
    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut rows: Vec<BTreeMap<usize, Integer>> = Vec::new();
    let mut rhs: Vec<Integer> = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let lineno = ln + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let toks = tokenize(raw, lineno)?;
        let eqs: Vec<usize> = toks
            .iter()
            .enumerate()
            .filter(|(_, t)| t.0 == Tok::Equals)
            .map(|(i, _)| i)
            .collect();
        let split = match eqs.as_slice() {
            [] => return Err(ParseError::MissingEquals { line: lineno }),
            [one] => *one,
            [_, second, ..] => {
                return Err(ParseError::Syntax {
                    span: toks[*second].1,
                    message: "more than one '='".into(),
                })
            }
        };
        let line_end = SourceSpan {
            line: lineno,
            column: raw.chars().count() + 1,
        };
        let lhs = parse_side(&toks[..split], toks[split].1)?;
        let rhs_side = parse_side(&toks[split + 1..], line_end)?;
        let mut row: BTreeMap<usize, Integer> = BTreeMap::new();
        let mut place = |name: String, c: Integer| {
            let next = names.len();
            let j = *index.entry(name.clone()).or_insert_with(|| {
                names.push(name);
                next
            });
            *row.entry(j).or_default() += c;
        };
        for (name, c) in lhs.terms {
            place(name, c);
        }
        for (name, c) in rhs_side.terms {
            place(name, -c);
        }
        rows.push(row);
        rhs.push(rhs_side.constant - lhs.constant);
    }
    if rows.is_empty() {
        return Err(ParseError::Empty);
    }
    let n = names.len();
    if n == 0 {
        return Err(ParseError::Syntax {
            span: SourceSpan { line: 1, column: 1 },
            message: "no variables in the system".into(),
        });
    }
    let a = rows
        .into_iter()
        .map(|row| (0..n).map(|j| row.get(&j).cloned().unwrap_or_default()).collect())
        .collect();
    Ok(LinearSystem::new(names, a, rhs).expect("rows are padded to the variable count"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Human,
    Machine,
}

/// Writes `Σ c_j name_j + constant` the way a person would.
fn affine_text(coeffs: &[Integer], names: &[String], constant: &Integer) -> String {
    let mut out = String::new();
    let push = |mag: String, negative: bool, out: &mut String| {
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        out.push_str(&mag);
    };
    for (c, name) in coeffs.iter().zip(names) {
        if c.is_zero() {
            continue;
        }
        let mag = if c.abs().is_one() {
            name.clone()
        } else {
            format!("{}{}", c.abs(), name)
        };
        push(mag, c.is_negative(), &mut out);
    }
    if !constant.is_zero() || out.is_empty() {
        push(constant.abs().to_string(), constant.is_negative(), &mut out);
    }
    out
}

pub fn render_solution_human(gs: &GeneralSolution) -> String {
    let params: Vec<String> = (1..=gs.num_params()).map(|j| format!("k{j}")).collect();
    let mut out = String::new();
    for ((name, row), d) in gs.vars().iter().zip(gs.matrix()).zip(gs.offset()) {
        out.push_str(&format!("{name} = {}\n", affine_text(row, &params, d)));
    }
    out
}

fn witness_human(w: &Witness) -> String {
    match w {
        Witness::GcdDoesNotDivide { gcd, rhs } => format!("gcd {gcd} does not divide {rhs}"),
        Witness::Contradiction { rhs } => format!("0 = {rhs}"),
        Witness::Inconsistent { multipliers, value } => {
            let ys: Vec<String> = multipliers.iter().map(ToString::to_string).collect();
            format!("multipliers ({}) combine the equations into 0 = {value}", ys.join(", "))
        }
        Witness::Modular { multipliers, modulus } => {
            let ys: Vec<String> = multipliers.iter().map(ToString::to_string).collect();
            format!(
                "multipliers ({}) combine the equations into one whose coefficients are \
                 divisible by {modulus} but whose right-hand side is not",
                ys.join(", ")
            )
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct TraceDoc {
    iterations: u64,
    substitutions: u64,
    peak_coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct MachineDoc {
    status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vars: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    p: Option<usize>,
    #[serde(rename = "C", default, skip_serializing_if = "Option::is_none")]
    c: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    d: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    witness: Option<BTreeMap<String, serde_json::Value>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    trace: Option<TraceDoc>,
}

fn strings(xs: &[Integer]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn witness_doc(w: &Witness) -> BTreeMap<String, serde_json::Value> {
    use serde_json::Value;
    let mut m = BTreeMap::new();
    match w {
        Witness::GcdDoesNotDivide { gcd, rhs } => {
            m.insert("gcd".into(), Value::String(gcd.to_string()));
            m.insert("b".into(), Value::String(rhs.to_string()));
        }
        Witness::Contradiction { rhs } => {
            m.insert("b".into(), Value::String(rhs.to_string()));
        }
        Witness::Inconsistent { multipliers, value } => {
            m.insert(
                "multipliers".into(),
                Value::Array(strings(multipliers).into_iter().map(Value::String).collect()),
            );
            m.insert("value".into(), Value::String(value.to_string()));
        }
        Witness::Modular { multipliers, modulus } => {
            m.insert(
                "multipliers".into(),
                Value::Array(strings(multipliers).into_iter().map(Value::String).collect()),
            );
            m.insert("modulus".into(), Value::String(modulus.to_string()));
        }
    }
    m
}

/// Renders an outcome. With `trace`, the run statistics are appended.
pub fn render_with_trace(outcome: &SolveOutcome, format: Format, trace: Option<&SolverTrace>) -> String {
    match format {
        Format::Human => {
            let mut out = match outcome {
                SolveOutcome::Solution(gs) => render_solution_human(gs),
                SolveOutcome::NoSolution(ns) => format!(
                    "no integer solution: {}\nwitness: {}\n",
                    ns.reason,
                    witness_human(&ns.witness)
                ),
            };
            if let Some(t) = trace {
                out.push_str(&format!(
                    "iterations: {}\nsubstitutions: {}\npeak_coeff: {}\n",
                    t.iterations, t.substitutions, t.peak_coeff
                ));
            }
            out
        }
        Format::Machine => {
            let mut doc = match outcome {
                SolveOutcome::Solution(gs) => MachineDoc {
                    status: "solution".into(),
                    vars: Some(gs.vars().to_vec()),
                    p: Some(gs.num_params()),
                    c: Some(gs.matrix().iter().map(|r| strings(r)).collect()),
                    d: Some(strings(gs.offset())),
                    reason: None,
                    witness: None,
                    trace: None,
                },
                SolveOutcome::NoSolution(ns) => MachineDoc {
                    status: "no_solution".into(),
                    vars: None,
                    p: None,
                    c: None,
                    d: None,
                    reason: Some(ns.reason.clone()),
                    witness: Some(witness_doc(&ns.witness)),
                    trace: None,
                },
            };
            doc.trace = trace.map(|t| TraceDoc {
                iterations: t.iterations,
                substitutions: t.substitutions,
                peak_coeff: t.peak_coeff.to_string(),
            });
            let mut s = serde_json::to_string_pretty(&doc).expect("plain data serializes");
            s.push('\n');
            s
        }
    }
}

pub fn render(outcome: &SolveOutcome, format: Format) -> String {
    render_with_trace(outcome, format, None)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed solution document: {0}")]
pub struct MachineFormatError(pub String);

fn bad(msg: impl Into<String>) -> MachineFormatError {
    MachineFormatError(msg.into())
}

fn int_of(s: &str) -> Result<Integer, MachineFormatError> {
    s.trim().parse().map_err(|_| bad(format!("`{s}` is not an integer")))
}

fn ints_of(xs: &[String]) -> Result<Vec<Integer>, MachineFormatError> {
    xs.iter().map(|s| int_of(s)).collect()
}

fn witness_str(
    w: &BTreeMap<String, serde_json::Value>,
    key: &str,
) -> Result<Integer, MachineFormatError> {
    match w.get(key) {
        Some(serde_json::Value::String(s)) => int_of(s),
        _ => Err(bad(format!("witness field `{key}` missing"))),
    }
}

/// Reads back a machine document produced by [`render`].
pub fn parse_machine(text: &str) -> Result<SolveOutcome, MachineFormatError> {
    let doc: MachineDoc = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    match doc.status.as_str() {
        "solution" => {
            let vars = doc.vars.ok_or_else(|| bad("missing `vars`"))?;
            let c = doc.c.ok_or_else(|| bad("missing `C`"))?;
            let d = doc.d.ok_or_else(|| bad("missing `d`"))?;
            let c: Vec<Vec<Integer>> = c.iter().map(|r| ints_of(r)).collect::<Result<_, _>>()?;
            let gs = GeneralSolution::new(vars, c, ints_of(&d)?).map_err(|e| bad(e.to_string()))?;
            if let Some(p) = doc.p {
                if p != gs.num_params() {
                    return Err(bad(format!("`p` is {p} but C has {} columns", gs.num_params())));
                }
            }
            Ok(SolveOutcome::Solution(gs))
        }
        "no_solution" => {
            let w = doc.witness.ok_or_else(|| bad("missing `witness`"))?;
            let witness = if w.contains_key("gcd") {
                Witness::GcdDoesNotDivide {
                    gcd: witness_str(&w, "gcd")?,
                    rhs: witness_str(&w, "b")?,
                }
            } else if w.contains_key("multipliers") {
                let ys = match w.get("multipliers") {
                    Some(serde_json::Value::Array(a)) => a
                        .iter()
                        .map(|v| v.as_str().ok_or_else(|| bad("multiplier is not a string")).and_then(int_of))
                        .collect::<Result<Vec<_>, _>>()?,
                    _ => return Err(bad("`multipliers` must be an array")),
                };
                if w.contains_key("modulus") {
                    Witness::Modular {
                        multipliers: ys,
                        modulus: witness_str(&w, "modulus")?,
                    }
                } else {
                    Witness::Inconsistent {
                        multipliers: ys,
                        value: witness_str(&w, "value")?,
                    }
                }
            } else {
                Witness::Contradiction {
                    rhs: witness_str(&w, "b")?,
                }
            };
            Ok(SolveOutcome::NoSolution(NoSolution {
                reason: doc.reason.unwrap_or_default(),
                witness,
            }))
        }
        other => Err(bad(format!("unknown status `{other}`"))),
    }
}
