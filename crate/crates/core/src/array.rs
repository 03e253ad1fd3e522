//! Intersection arrays `{b_0, .., b_{d-1}; c_1, .., c_d}`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArrayError {
    #[error("intersection array needs d >= 1 entries on each side")]
    Empty,
    #[error("b has {b} entries but c has {c}")]
    LengthMismatch { b: usize, c: usize },
    #[error("c_1 must be 1, got {0}")]
    FirstC(u64),
    #[error("b_{0} must be positive")]
    NonPositiveB(usize),
    #[error("c_{0} must be positive")]
    NonPositiveC(usize),
    #[error("cannot parse intersection array: {0}")]
    Syntax(String),
}

/// A well-formed intersection array. Well-formed means equal lengths,
/// `c_1 = 1` and positive listed entries; the arithmetic conditions live in
/// [`IntersectionArray::feasibility`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawArray", into = "RawArray")]
pub struct IntersectionArray {
    b: Vec<u64>,
    c: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct RawArray {
    b: Vec<u64>,
    c: Vec<u64>,
}

impl TryFrom<RawArray> for IntersectionArray {
    type Error = ArrayError;
    fn try_from(raw: RawArray) -> Result<Self, ArrayError> {
        IntersectionArray::new(raw.b, raw.c)
    }
}

impl From<IntersectionArray> for RawArray {
    fn from(a: IntersectionArray) -> Self {
        RawArray { b: a.b, c: a.c }
    }
}

/// Outcome of the basic arithmetic checks on an array.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrayFeasibility {
    pub feasible: bool,
    pub reasons: Vec<String>,
    /// Layer sizes `k_0..k_d`, present when all of them are integers.
    pub layer_sizes: Option<Vec<u64>>,
    pub vertex_count: Option<u64>,
}

impl IntersectionArray {
    /// `b` is `b_0..b_{d-1}`, `c` is `c_1..c_d`.
    pub fn new(b: Vec<u64>, c: Vec<u64>) -> Result<Self, ArrayError> {
        if b.is_empty() && c.is_empty() {
            return Err(ArrayError::Empty);
        }
        if b.len() != c.len() {
            return Err(ArrayError::LengthMismatch {
                b: b.len(),
                c: c.len(),
            });
        }
        if c[0] != 1 {
            return Err(ArrayError::FirstC(c[0]));
        }
        if let Some(i) = b.iter().position(|&x| x == 0) {
            return Err(ArrayError::NonPositiveB(i));
        }
        if let Some(i) = c.iter().position(|&x| x == 0) {
            return Err(ArrayError::NonPositiveC(i + 1));
        }
        Ok(IntersectionArray { b, c })
    }

    pub fn diameter(&self) -> usize {
        self.b.len()
    }

    pub fn degree(&self) -> u64 {
        self.b[0]
    }

    /// `b_i` for `0 <= i <= d`, with `b_d = 0`.
    pub fn b(&self, i: usize) -> u64 {
        self.b.get(i).copied().unwrap_or(0)
    }

    /// `c_i` for `0 <= i <= d`, with `c_0 = 0`.
    pub fn c(&self, i: usize) -> u64 {
        if i == 0 {
            0
        } else {
            self.c[i - 1]
        }
    }

    /// `a_i = b_0 - b_i - c_i`, negative when the array is infeasible.
    pub fn a(&self, i: usize) -> i64 {
        self.b[0] as i64 - self.b(i) as i64 - self.c(i) as i64
    }

    pub fn b_values(&self) -> &[u64] {
        &self.b
    }

    pub fn c_values(&self) -> &[u64] {
        &self.c
    }

    /// `k_i = k_{i-1} b_{i-1} / c_i`; `None` at the first non-integral layer.
    pub fn layer_sizes(&self) -> Option<Vec<u64>> {
        let mut k = vec![1u64];
        for i in 1..=self.diameter() {
            let num = k[i - 1] as u128 * self.b(i - 1) as u128;
            let den = self.c(i) as u128;
            if !num.is_multiple_of(den) {
                return None;
            }
            k.push(u64::try_from(num / den).ok()?);
        }
        Some(k)
    }

    pub fn vertex_count(&self) -> Option<u64> {
        self.layer_sizes().map(|k| k.iter().sum())
    }

    /// Basic feasibility: every `k_i` a positive integer and every `a_i >= 0`.
    pub fn feasibility(&self) -> ArrayFeasibility {
        let mut reasons = Vec::new();
        for i in 0..=self.diameter() {
            if self.a(i) < 0 {
                reasons.push(format!("a_{i} = {} is negative", self.a(i)));
            }
        }
        let layer_sizes = self.layer_sizes();
        if layer_sizes.is_none() {
            let mut k = 1u128;
            for i in 1..=self.diameter() {
                let num = k * self.b(i - 1) as u128;
                if !num.is_multiple_of(self.c(i) as u128) {
                    reasons.push(format!(
                        "k_{i} = {num}/{} is not an integer",
                        self.c(i)
                    ));
                    break;
                }
                k = num / self.c(i) as u128;
            }
        }
        ArrayFeasibility {
            feasible: reasons.is_empty(),
            vertex_count: layer_sizes.as_ref().map(|k| k.iter().sum()),
            layer_sizes,
            reasons,
        }
    }
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[u64]| {
            xs.iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "{{{};{}}}", join(&self.b), join(&self.c))
    }
}

impl FromStr for IntersectionArray {
    type Err = ArrayError;

    /// Parses `{5,2,1;1,2,5}`; braces and whitespace are optional.
    fn from_str(s: &str) -> Result<Self, ArrayError> {
        let body = s.trim().trim_start_matches('{').trim_end_matches('}');
        let (b, c) = body
            .split_once(';')
            .ok_or_else(|| ArrayError::Syntax(format!("missing ';' in {s:?}")))?;
        let parse = |part: &str| -> Result<Vec<u64>, ArrayError> {
            part.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u64>()
                        .map_err(|e| ArrayError::Syntax(format!("{t:?}: {e}")))
                })
                .collect()
        };
        IntersectionArray::new(parse(b)?, parse(c)?)
    }
}
