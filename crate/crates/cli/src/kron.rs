//! Model matrices built as stacked Kronecker products.

use std::fmt;
use std::str::FromStr;

use toric_core::ModelMatrix;

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factor {
    /// The `1 x k` all-ones row.
    Ones(usize),
    /// The `k x k` identity.
    Identity(usize),
}

impl Factor {
    fn matrix(self) -> Vec<Vec<i64>> {
        match self {
            Factor::Ones(k) => vec![vec![1; k]],
            Factor::Identity(k) => (0..k).map(|i| (0..k).map(|j| i64::from(i == j)).collect()).collect(),
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Ones(k) => write!(f, "ones({k})"),
            Factor::Identity(k) => write!(f, "id({k})"),
        }
    }
}

/// Blocks stacked vertically; each block is the Kronecker product of its factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KroneckerSpec {
    pub blocks: Vec<Vec<Factor>>,
}

impl KroneckerSpec {
    /// `(1 1) (x) I_4 (x) I_2` over `I_4 (x) (1 1) (x) I_2`.
    pub fn independence_model() -> Self {
        use Factor::*;
        KroneckerSpec {
            blocks: vec![vec![Ones(2), Identity(4), Identity(2)], vec![Identity(4), Ones(2), Identity(2)]],
        }
    }
}

pub fn kronecker(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let bcols = b.first().map(Vec::len).unwrap_or(0);
    let mut out = Vec::with_capacity(a.len() * b.len());
    for arow in a {
        for brow in b {
            let mut row = Vec::with_capacity(arow.len() * bcols);
            for &x in arow {
                row.extend(brow.iter().map(|&y| x * y));
            }
            out.push(row);
        }
    }
    out
}

pub fn build_kronecker(spec: &KroneckerSpec) -> Result<ModelMatrix, CliError> {
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let mut width: Option<usize> = None;
    for (idx, block) in spec.blocks.iter().enumerate() {
        let Some((first, rest)) = block.split_first() else {
            return Err(CliError::ShapeMismatch(format!("block {} is empty", idx + 1)));
        };
        let product = rest.iter().fold(first.matrix(), |acc, f| kronecker(&acc, &f.matrix()));
        let cols = product[0].len();
        match width {
            Some(w) if w != cols => {
                return Err(CliError::ShapeMismatch(format!(
                    "block {} has {cols} columns, expected {w}",
                    idx + 1
                )))
            }
            _ => width = Some(cols),
        }
        rows.extend(product);
    }
    Ok(ModelMatrix::new(rows)?)
}

impl FromStr for Factor {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || CliError::Usage(format!("unrecognised Kronecker factor `{s}`"));
        let (name, rest) = s.split_once('(').ok_or_else(bad)?;
        let arg = rest.strip_suffix(')').ok_or_else(bad)?;
        let k: usize = arg.trim().parse().map_err(|_| bad())?;
        if k == 0 {
            return Err(bad());
        }
        match name.trim() {
            "ones" | "1" => Ok(Factor::Ones(k)),
            "id" | "identity" | "I" => Ok(Factor::Identity(k)),
            _ => Err(bad()),
        }
    }
}

/// Blocks separated by `;`, factors by `*`, e.g. `ones(2)*id(4); id(4)*ones(2)`.
impl FromStr for KroneckerSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let blocks = s
            .split(';')
            .filter(|b| !b.trim().is_empty())
            .map(|b| b.split(['*', '⊗']).map(str::parse).collect::<Result<Vec<Factor>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        if blocks.is_empty() {
            return Err(CliError::Usage("empty Kronecker specification".into()));
        }
        Ok(KroneckerSpec { blocks })
    }
}

impl fmt::Display for KroneckerSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(Factor::to_string).collect::<Vec<_>>().join("*"))
            .collect();
        f.write_str(&blocks.join("; "))
    }
}
