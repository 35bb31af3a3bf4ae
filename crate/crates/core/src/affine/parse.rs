//! Text grammar for elements and composition expressions.
//!
//! ```text
//! element    := "zero" | "const:" p "," q | "ss:(" k "," l ")->(" p "," q ")"
//!             | "ns:" p "," q ";" permutation
//! expression := element (" . " element)*
//! ```
//!
//! Indices are 1-based. Permutations use image-list `[2,3,1]` or cycle
//! `(1 2 3)` form. In an expression the left factor is applied first.

use std::fmt;

use thiserror::Error;

use crate::brandt::Permutation;

use super::AffMap;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    fn at(position: usize, message: impl fmt::Display) -> Self {
        ParseError {
            position,
            message: message.to_string(),
        }
    }
}

fn index(text: &str, n: usize) -> Result<usize, String> {
    let i: usize = text
        .trim()
        .parse()
        .map_err(|_| format!("expected an index, found {:?}", text.trim()))?;
    if i == 0 || i > n {
        return Err(format!("index {i} outside 1..={n}"));
    }
    Ok(i - 1)
}

fn pair(text: &str, n: usize) -> Result<(usize, usize), String> {
    let (a, b) = text
        .split_once(',')
        .ok_or_else(|| format!("expected \"a,b\", found {text:?}"))?;
    Ok((index(a, n)?, index(b, n)?))
}

fn parenthesized_pair(text: &str, n: usize) -> Result<(usize, usize), String> {
    let body = text
        .trim()
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| format!("expected \"(a,b)\", found {text:?}"))?;
    pair(body, n)
}

fn element(text: &str, n: usize) -> Result<AffMap, String> {
    let text = text.trim();
    let map = if text == "zero" {
        AffMap::Zero
    } else if let Some(body) = text.strip_prefix("const:") {
        let (p, q) = pair(body, n)?;
        AffMap::Constant { p, q }
    } else if let Some(body) = text.strip_prefix("ss:") {
        let (from, to) = body
            .split_once("->")
            .ok_or_else(|| "expected \"->\" in singleton-support map".to_string())?;
        let (k, l) = parenthesized_pair(from, n)?;
        let (p, q) = parenthesized_pair(to, n)?;
        AffMap::Singleton { k, l, p, q }
    } else if let Some(body) = text.strip_prefix("ns:") {
        let (pq, perm) = body
            .split_once(';')
            .ok_or_else(|| "expected \";\" before the permutation".to_string())?;
        let (p, q) = pair(pq, n)?;
        let sigma = Permutation::parse(perm, Some(n)).map_err(|e| e.to_string())?;
        AffMap::NSupport { p, q, sigma }
    } else {
        return Err(format!("unknown element {text:?}"));
    };
    map.canonical(n).map_err(|e| e.to_string())
}

impl AffMap {
    /// Parses one element of `A⁺(Bₙ)`.
    pub fn parse(text: &str, n: usize) -> Result<AffMap, ParseError> {
        let offset = text.len() - text.trim_start().len();
        element(text, n).map_err(|m| ParseError::at(offset, m))
    }
}

/// Parses and evaluates `f₁ . f₂ . … . f_k`, returning `f₁ ∘ f₂ ∘ … ∘ f_k`.
pub fn parse_expression(text: &str, n: usize) -> Result<AffMap, ParseError> {
    let mut result: Option<AffMap> = None;
    let mut start = 0;
    for part in text.split(" . ") {
        let lead = part.len() - part.trim_start().len();
        let f = element(part, n).map_err(|m| ParseError::at(start + lead, m))?;
        result = Some(match result {
            None => f,
            Some(acc) => acc
                .compose(&f)
                .map_err(|e| ParseError::at(start + lead, e))?,
        });
        start += part.len() + 3;
    }
    result.ok_or_else(|| ParseError::at(0, "empty expression"))
}
