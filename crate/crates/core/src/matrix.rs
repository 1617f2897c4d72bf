//! Small exact matrices over the natural numbers or the boolean semiring.

use std::fmt;

use crate::error::{Error, Result};

/// Default overflow bound for natural-number entries.
pub const DEFAULT_ENTRY_BOUND: u64 = 1 << 62;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Semiring {
    /// Ordinary `+` and `*` on nonnegative integers.
    Natural,
    /// `or` and `and` on `{0, 1}`.
    Boolean,
}

impl Semiring {
    pub fn name(self) -> &'static str {
        match self {
            Semiring::Natural => "nat",
            Semiring::Boolean => "bool",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "nat" => Some(Semiring::Natural),
            "bool" => Some(Semiring::Boolean),
            _ => None,
        }
    }
}

/// Row-major square or rectangular matrix with exact entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SmallMatrix {
    rows: usize,
    cols: usize,
    semiring: Semiring,
    entries: Vec<u64>,
}

impl SmallMatrix {
    /// Boolean matrices normalise every nonzero entry to 1.
    pub fn new(semiring: Semiring, rows: Vec<Vec<u64>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::MatrixShape {
                index: 0,
                rows: nrows,
                cols: ncols,
            });
        }
        let entries = rows
            .into_iter()
            .flatten()
            .map(|x| match semiring {
                Semiring::Boolean => u64::from(x != 0),
                Semiring::Natural => x,
            })
            .collect();
        Ok(SmallMatrix {
            rows: nrows,
            cols: ncols,
            semiring,
            entries,
        })
    }

    pub fn identity(semiring: Semiring, k: usize) -> Self {
        let mut entries = vec![0; k * k];
        for i in 0..k {
            entries[i * k + i] = 1;
        }
        SmallMatrix {
            rows: k,
            cols: k,
            semiring,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn semiring(&self) -> Semiring {
        self.semiring
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.cols + j]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> SmallMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j));
            }
        }
        SmallMatrix {
            rows: self.cols,
            cols: self.rows,
            semiring: self.semiring,
            entries,
        }
    }

    /// Matrix product in the semiring. Natural-number entries above `bound`
    /// are rejected rather than wrapped.
    pub fn mul(&self, other: &SmallMatrix, bound: u64) -> Result<SmallMatrix> {
        if self.cols != other.rows {
            return Err(Error::MatrixShape {
                index: 1,
                rows: other.rows,
                cols: other.cols,
            });
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let v = match self.semiring {
                    Semiring::Boolean => {
                        u64::from((0..self.cols).any(|k| self.get(i, k) & other.get(k, j) != 0))
                    }
                    Semiring::Natural => {
                        let mut acc: u64 = 0;
                        for k in 0..self.cols {
                            acc = self
                                .get(i, k)
                                .checked_mul(other.get(k, j))
                                .and_then(|p| acc.checked_add(p))
                                .filter(|&s| s <= bound)
                                .ok_or(Error::EntryOverflow { bound })?;
                        }
                        acc
                    }
                };
                entries.push(v);
            }
        }
        Ok(SmallMatrix {
            rows: self.rows,
            cols: other.cols,
            semiring: self.semiring,
            entries,
        })
    }

    /// Row-list label, e.g. `[[1,0],[0,0]]`.
    pub fn label(&self) -> String {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let r: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
                format!("[{}]", r.join(","))
            })
            .collect();
        format!("[{}]", rows.join(","))
    }
}

impl fmt::Display for SmallMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}
