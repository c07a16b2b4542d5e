use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Write;

use crate::generators::path;
use crate::ops::{apply_operation, OpKind, OperationStep};
use crate::{canonical_code, CanonicalCode, Error, Result, Tree};

/// A sequence of operations that builds a tree from `P_4` (labeled
/// `0-1-2-3`). Its length is the number of operations used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub steps: Vec<OperationStep>,
    pub final_code: CanonicalCode,
}

impl Certificate {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn kinds(&self) -> Vec<OpKind> {
        self.steps.iter().map(|s| s.kind).collect()
    }

    /// Replays every step from `P_4`, checking preconditions as it goes.
    /// Also returns each intermediate tree, the base included.
    pub fn replay(&self) -> Result<Vec<Tree>> {
        let mut trees = Vec::with_capacity(self.steps.len() + 1);
        trees.push(path(4)?);
        for (index, step) in self.steps.iter().enumerate() {
            let cur = trees.last().expect("base tree");
            let next = apply_operation(cur, step).map_err(|e| Error::InvalidStep {
                index,
                reason: e.to_string(),
            })?;
            trees.push(next);
        }
        Ok(trees)
    }

    /// Text form: a `base=P4` header, one step per line, and a
    /// `canon=<hex>` trailer.
    pub fn to_text(&self) -> String {
        let mut out = String::from("base=P4\n");
        for step in &self.steps {
            let _ = writeln!(out, "{step}");
        }
        let _ = writeln!(out, "canon={}", self.final_code);
        out
    }

    pub fn parse(text: &str) -> Result<Certificate> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        match lines.next() {
            Some((_, "base=P4")) => {}
            Some((no, _)) => return Err(Error::parse(no, "expected header base=P4")),
            None => return Err(Error::EmptyInput),
        }
        let mut steps = Vec::new();
        let mut final_code = None;
        for (no, line) in lines {
            if final_code.is_some() {
                return Err(Error::parse(no, "content after the canon= trailer"));
            }
            if let Some(hex) = line.strip_prefix("canon=") {
                final_code = Some(CanonicalCode::from_hex(hex).map_err(|_| Error::parse(no, "bad canon hex"))?);
                continue;
            }
            steps.push(parse_step(no, line)?);
        }
        let final_code = final_code.ok_or_else(|| Error::parse(0, "missing canon= trailer"))?;
        Ok(Certificate { steps, final_code })
    }
}

fn parse_step(no: usize, line: &str) -> Result<OperationStep> {
    let mut parts = line.split_whitespace();
    let kind: OpKind = parts
        .next()
        .ok_or_else(|| Error::parse(no, "empty step"))?
        .parse()
        .map_err(|_| Error::parse(no, "unknown operation"))?;
    let attach = parts
        .next()
        .and_then(|p| p.strip_prefix("attach="))
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| Error::parse(no, "expected attach=<vertex>"))?;
    let new_vertices = parts
        .next()
        .and_then(|p| p.strip_prefix("new="))
        .ok_or_else(|| Error::parse(no, "expected new=<v1,...>"))?
        .split(',')
        .map(|v| v.parse().map_err(|_| Error::parse(no, "bad vertex in new=")))
        .collect::<Result<Vec<_>>>()?;
    if parts.next().is_some() {
        return Err(Error::parse(no, "trailing tokens"));
    }
    Ok(OperationStep {
        kind,
        attach,
        new_vertices,
    })
}

/// Replays `cert` and checks the result against its recorded code and
/// against `target`.
pub fn verify_certificate(cert: &Certificate, target: &Tree) -> Result<()> {
    let trees = cert.replay()?;
    let built = canonical_code(trees.last().expect("base tree"));
    if built != cert.final_code || built != canonical_code(target) {
        return Err(Error::Mismatch);
    }
    Ok(())
}
