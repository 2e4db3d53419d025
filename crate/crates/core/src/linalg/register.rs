use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};

/// Name of a single qubit subsystem: a particle (`1`..) or a cloning machine (`M1`..).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Qubit(u8),
    Machine(u8),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Qubit(n) => write!(f, "{n}"),
            Label::Machine(n) => write!(f, "M{n}"),
        }
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnknownLabel(s.to_string());
        match s.strip_prefix('M') {
            Some(rest) => rest.parse().map(Label::Machine).map_err(|_| bad()),
            None => s.parse().map(Label::Qubit).map_err(|_| bad()),
        }
    }
}

impl From<u8> for Label {
    fn from(n: u8) -> Self {
        Label::Qubit(n)
    }
}

/// Ordered list of qubit labels. `labels[0]` is the most significant bit of a basis index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QubitRegister {
    labels: Vec<Label>,
}

impl QubitRegister {
    pub fn new(labels: Vec<Label>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::EmptySelection);
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.to_string()));
            }
        }
        Ok(Self { labels })
    }

    /// Register of plain particle labels, e.g. `qubits(&[1, 5])`.
    pub fn qubits(ids: &[u8]) -> Result<Self> {
        Self::new(ids.iter().copied().map(Label::Qubit).collect())
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn dim(&self) -> usize {
        1 << self.labels.len()
    }

    pub fn position(&self, label: Label) -> Result<usize> {
        self.labels
            .iter()
            .position(|&l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Bit offset (from the least significant end) of the qubit at `pos`.
    #[inline]
    pub(crate) fn shift(&self, pos: usize) -> usize {
        self.labels.len() - 1 - pos
    }

    /// Register obtained by inserting `new` right after position `pos`.
    pub(crate) fn inserted_after(&self, pos: usize, new: &[Label]) -> Result<Self> {
        let mut labels = self.labels.clone();
        labels.splice(pos + 1..pos + 1, new.iter().copied());
        Self::new(labels)
    }
}

impl fmt::Display for QubitRegister {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.labels.iter().map(|l| l.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn check_dim(rho: &ComplexMatrix, register: &QubitRegister) -> Result<()> {
    if rho.dim() != register.dim() {
        return Err(Error::DimensionMismatch {
            expected: register.dim(),
            actual: rho.dim(),
        });
    }
    Ok(())
}

/// Spreads the low bits of `compact` onto the bit offsets in `shifts` (most significant first).
#[inline]
fn scatter(compact: usize, shifts: &[usize]) -> usize {
    let k = shifts.len();
    shifts.iter().enumerate().fold(0, |acc, (i, &s)| {
        acc | (((compact >> (k - 1 - i)) & 1) << s)
    })
}

/// Reduced operator on `keep`. Kept qubits retain their relative order in `register`.
pub fn partial_trace(
    rho: &ComplexMatrix,
    register: &QubitRegister,
    keep: &[Label],
) -> Result<(ComplexMatrix, QubitRegister)> {
    check_dim(rho, register)?;
    if keep.is_empty() {
        return Err(Error::EmptySelection);
    }
    let mut keep_pos = Vec::with_capacity(keep.len());
    for &l in keep {
        let p = register.position(l)?;
        if keep_pos.contains(&p) {
            return Err(Error::DuplicateLabel(l.to_string()));
        }
        keep_pos.push(p);
    }
    keep_pos.sort_unstable();

    let kept_shifts: Vec<usize> = keep_pos.iter().map(|&p| register.shift(p)).collect();
    let traced_shifts: Vec<usize> = (0..register.len())
        .filter(|p| !keep_pos.contains(p))
        .map(|p| register.shift(p))
        .collect();

    let out_dim = 1 << kept_shifts.len();
    let env_dim = 1 << traced_shifts.len();
    let env: Vec<usize> = (0..env_dim).map(|e| scatter(e, &traced_shifts)).collect();
    let kept: Vec<usize> = (0..out_dim).map(|k| scatter(k, &kept_shifts)).collect();

    let mut out = ComplexMatrix::zeros(out_dim);
    for (i, &row_base) in kept.iter().enumerate() {
        for (j, &col_base) in kept.iter().enumerate() {
            let sum: Complex64 = env.iter().map(|&e| rho[(row_base | e, col_base | e)]).sum();
            out[(i, j)] = sum;
        }
    }
    let reduced = QubitRegister::new(keep_pos.iter().map(|&p| register.labels[p]).collect())?;
    Ok((out, reduced))
}

/// Swaps the bra and ket index of one subsystem. Applying it twice is the identity.
pub fn partial_transpose(
    rho: &ComplexMatrix,
    register: &QubitRegister,
    transposed: Label,
) -> Result<ComplexMatrix> {
    check_dim(rho, register)?;
    let bit = 1 << register.shift(register.position(transposed)?);
    let n = rho.dim();
    let mut out = ComplexMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let (ti, tj) = if (i & bit) != (j & bit) {
                (i ^ bit, j ^ bit)
            } else {
                (i, j)
            };
            out[(ti, tj)] = rho[(i, j)];
        }
    }
    Ok(out)
}
