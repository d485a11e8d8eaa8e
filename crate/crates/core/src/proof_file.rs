//! Line-oriented text format for proofs.
//!
//! ```text
//! hyp: (p -> q) ; p
//! ext: r
//! 1. p | HYP 1
//! 2. (p -> q) | HYP 0
//! 3. q | MP 2 1
//! 4. (q -> (p -> q)) | AX1{A:=q,B:=p}
//! ```
//!
//! The `hyp:` and `ext:` headers are optional and list formulas separated by
//! ` ; `. Steps are numbered from 1; `MP i j` cites the major premise `i` and
//! the minor premise `j` by step number, while `HYP k` and `EXT k` are 0-based
//! positions in the respective header list. Blank lines and lines starting
//! with `#` are ignored on input. [`print_proof_file`] emits the canonical
//! form, which [`parse_proof_file`] reads back to an identical string.

use std::fmt::Write as _;

use thiserror::Error;

use crate::formula::Formula;
use crate::parser::{parse, ParseError};
use crate::proof::{Extension, Justification, Proof, Step};
use crate::scheme::{MetaVar, SchemeId, Substitution};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ProofFile {
    pub ext: Extension,
    pub proof: Proof,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct FormatError {
    pub line: usize,
    pub kind: FormatErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatErrorKind {
    #[error("{0}")]
    Formula(#[from] ParseError),
    #[error("expected step number {expected}, found '{found}'")]
    StepNumber { expected: usize, found: String },
    #[error("missing '|' between formula and justification")]
    MissingSeparator,
    #[error("malformed justification '{0}'")]
    Justification(String),
    #[error("header '{0}' after the first step")]
    LateHeader(String),
    #[error("duplicate '{0}' header")]
    DuplicateHeader(String),
    #[error("step index must be at least 1")]
    ZeroStep,
}

fn print_list(out: &mut String, key: &str, items: &[Formula]) {
    if items.is_empty() {
        return;
    }
    out.push_str(key);
    out.push_str(": ");
    for (i, f) in items.iter().enumerate() {
        if i > 0 {
            out.push_str(" ; ");
        }
        write!(out, "{f}").unwrap();
    }
    out.push('\n');
}

pub fn print_justification(j: &Justification) -> String {
    match j {
        Justification::AxiomInstance { scheme, sub } => format!("{scheme}{{{sub}}}"),
        Justification::Hypothesis(k) => format!("HYP {k}"),
        Justification::ExtensionAxiom(k) => format!("EXT {k}"),
        Justification::ModusPonens { major, minor } => format!("MP {} {}", major + 1, minor + 1),
    }
}

pub fn print_proof_file(file: &ProofFile) -> String {
    let mut out = String::new();
    print_list(&mut out, "hyp", &file.proof.hypotheses);
    print_list(&mut out, "ext", &file.ext.added_axioms);
    for (i, step) in file.proof.steps.iter().enumerate() {
        writeln!(
            out,
            "{}. {} | {}",
            i + 1,
            step.formula,
            print_justification(&step.justification)
        )
        .unwrap();
    }
    out
}

/// Shorthand for printing a proof together with the extension it lives in.
pub fn print_proof(proof: &Proof, ext: &Extension) -> String {
    print_proof_file(&ProofFile {
        ext: ext.clone(),
        proof: proof.clone(),
    })
}

fn parse_list(text: &str) -> Result<Vec<Formula>, ParseError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(';').map(|part| parse(part.trim())).collect()
}

fn parse_index(s: &str, whole: &str) -> Result<usize, FormatErrorKind> {
    s.parse()
        .map_err(|_| FormatErrorKind::Justification(whole.to_string()))
}

fn parse_substitution(body: &str, whole: &str) -> Result<Substitution, FormatErrorKind> {
    let mut sub = Substitution::new();
    let bad = || FormatErrorKind::Justification(whole.to_string());
    for binding in body.split(',') {
        let (name, formula) = binding.split_once(":=").ok_or_else(bad)?;
        let m = match name.trim() {
            "A" => MetaVar::A,
            "B" => MetaVar::B,
            "C" => MetaVar::C,
            _ => return Err(bad()),
        };
        if sub.get(m).is_some() {
            return Err(bad());
        }
        sub.set(m, parse(formula.trim())?);
    }
    Ok(sub)
}

pub fn parse_justification(text: &str) -> Result<Justification, FormatErrorKind> {
    let text = text.trim();
    let bad = || FormatErrorKind::Justification(text.to_string());
    if let Some(rest) = text.strip_prefix("AX") {
        let open = rest.find('{').ok_or_else(bad)?;
        let scheme: SchemeId = text[..2 + open].parse().map_err(|_| bad())?;
        let body = rest[open + 1..].strip_suffix('}').ok_or_else(bad)?;
        let sub = parse_substitution(body, text)?;
        return Ok(Justification::AxiomInstance { scheme, sub });
    }
    let words: Vec<&str> = text.split_whitespace().collect();
    match words.as_slice() {
        ["HYP", k] => Ok(Justification::Hypothesis(parse_index(k, text)?)),
        ["EXT", k] => Ok(Justification::ExtensionAxiom(parse_index(k, text)?)),
        ["MP", i, j] => {
            let (i, j) = (parse_index(i, text)?, parse_index(j, text)?);
            if i == 0 || j == 0 {
                return Err(FormatErrorKind::ZeroStep);
            }
            Ok(Justification::ModusPonens {
                major: i - 1,
                minor: j - 1,
            })
        }
        _ => Err(bad()),
    }
}

pub fn parse_proof_file(text: &str) -> Result<ProofFile, FormatError> {
    let mut file = ProofFile::default();
    let mut seen_hyp = false;
    let mut seen_ext = false;
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let err = |kind| FormatError { line, kind };
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let header = [("hyp:", &mut seen_hyp), ("ext:", &mut seen_ext)]
            .into_iter()
            .find_map(|(key, seen)| trimmed.strip_prefix(key).map(|rest| (key, seen, rest)));
        if let Some((key, seen, rest)) = header {
            if !file.proof.steps.is_empty() {
                return Err(err(FormatErrorKind::LateHeader(key.into())));
            }
            if *seen {
                return Err(err(FormatErrorKind::DuplicateHeader(key.into())));
            }
            *seen = true;
            let list = parse_list(rest).map_err(|e| err(e.into()))?;
            if key == "hyp:" {
                file.proof.hypotheses = list;
            } else {
                file.ext.added_axioms = list;
            }
            continue;
        }

        let expected = file.proof.steps.len() + 1;
        let (number, rest) = trimmed.split_once('.').ok_or_else(|| {
            err(FormatErrorKind::StepNumber {
                expected,
                found: trimmed.to_string(),
            })
        })?;
        if number.trim().parse::<usize>() != Ok(expected) {
            return Err(err(FormatErrorKind::StepNumber {
                expected,
                found: number.to_string(),
            }));
        }
        let (formula, justification) = rest
            .rsplit_once('|')
            .ok_or_else(|| err(FormatErrorKind::MissingSeparator))?;
        let formula = parse(formula.trim()).map_err(|e| err(e.into()))?;
        let justification = parse_justification(justification).map_err(err)?;
        file.proof.steps.push(Step {
            formula,
            justification,
        });
    }
    Ok(file)
}
