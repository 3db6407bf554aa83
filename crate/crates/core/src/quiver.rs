//! Quivers as arrow multiplicity matrices.

use std::fmt::Write;

use crate::error::Result;
use crate::matrix::SkewIntMatrix;

/// `arr[i][j]` arrows `i → j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    pub n: usize,
    pub arr: Vec<Vec<u32>>,
}

impl Quiver {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            arr: vec![vec![0; n]; n],
        }
    }

    /// The smallest quiver with signed adjacency `a`: `max(a_ij, 0)` arrows
    /// `i → j`.
    pub fn of(a: &SkewIntMatrix) -> Self {
        let n = a.n();
        let arr = (0..n)
            .map(|i| a.row(i).iter().map(|&v| v.max(0) as u32).collect())
            .collect();
        Self { n, arr }
    }

    /// `Arr − Arrᵀ`.
    pub fn signed_adjacency(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| i64::from(self.arr[i][j]) - i64::from(self.arr[j][i]))
                    .collect()
            })
            .collect()
    }

    /// Fails when some net multiplicity exceeds 2.
    pub fn to_shade_matrix(&self) -> Result<SkewIntMatrix> {
        SkewIntMatrix::from_rows(&self.signed_adjacency())
    }

    /// All arrows reversed.
    pub fn opposite(&self) -> Self {
        let arr = (0..self.n)
            .map(|i| (0..self.n).map(|j| self.arr[j][i]).collect())
            .collect();
        Self { n: self.n, arr }
    }

    pub fn num_arrows(&self) -> u32 {
        self.arr.iter().flatten().sum()
    }

    /// No loops and no 2-cycles.
    pub fn is_minimal(&self) -> bool {
        (0..self.n).all(|i| {
            self.arr[i][i] == 0 && (0..self.n).all(|j| self.arr[i][j].min(self.arr[j][i]) == 0)
        })
    }

    /// DOT text with vertices `1..n` and one edge line per arrow.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph Q {\n");
        for v in 1..=self.n {
            let _ = writeln!(out, "  {v};");
        }
        for i in 0..self.n {
            for j in 0..self.n {
                for _ in 0..self.arr[i][j] {
                    let _ = writeln!(out, "  {} -> {};", i + 1, j + 1);
                }
            }
        }
        out.push_str("}\n");
        out
    }
}
