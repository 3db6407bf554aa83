//! Skew-symmetric integer matrices, the row-major order on them, and the
//! permutation action `A_σ = (a_{σ(i)σ(j)})`.
//!
//! Indices in this API are 0-based.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Result, ShadowError};

/// Largest supported matrix size.
pub const MAX_N: usize = 8;

/// Outcome of [`compare_lex`].
pub type LexOrdering = Ordering;

/// A skew-symmetric matrix with entries in `[-2, 2]`, stored row-major.
///
/// Only the first `n * n` slots of the backing array are used; the rest are
/// kept at zero so that equality and hashing can look at the whole array.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SkewIntMatrix {
    n: u8,
    entries: [i8; MAX_N * MAX_N],
}

impl SkewIntMatrix {
    pub fn zero(n: usize) -> Result<Self> {
        check_size(n)?;
        Ok(Self {
            n: n as u8,
            entries: [0; MAX_N * MAX_N],
        })
    }

    /// Builds a matrix from rows, validating shape, skew-symmetry and range.
    pub fn from_rows<R, T>(rows: &[R]) -> Result<Self>
    where
        R: AsRef<[T]>,
        T: Copy + Into<i64>,
    {
        let n = rows.len();
        check_size(n)?;
        let mut entries = [0i8; MAX_N * MAX_N];
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(ShadowError::Dimension {
                    expected: n,
                    found: row.len(),
                });
            }
            for (j, &v) in row.iter().enumerate() {
                let v: i64 = v.into();
                if !(-2..=2).contains(&v) {
                    return Err(ShadowError::EntryOutOfRange {
                        row: i,
                        col: j,
                        value: v,
                    });
                }
                entries[i * n + j] = v as i8;
            }
        }
        for i in 0..n {
            for j in i..n {
                if entries[i * n + j] != -entries[j * n + i] {
                    return Err(ShadowError::NotSkewSymmetric { row: i, col: j });
                }
            }
        }
        Ok(Self {
            n: n as u8,
            entries,
        })
    }

    /// Builds a matrix from its strict upper triangle in raster order.
    pub fn from_upper(n: usize, upper: &[i8]) -> Result<Self> {
        check_size(n)?;
        let expected = n * (n - 1) / 2;
        if upper.len() != expected {
            return Err(ShadowError::Arity {
                expected,
                found: upper.len(),
            });
        }
        let mut m = Self::zero(n)?;
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                let v = upper[k];
                if !(-2..=2).contains(&v) {
                    return Err(ShadowError::EntryOutOfRange {
                        row: i,
                        col: j,
                        value: v.into(),
                    });
                }
                m.entries[i * n + j] = v;
                m.entries[j * n + i] = -v;
                k += 1;
            }
        }
        Ok(m)
    }

    /// Assembles a matrix from complete rows that are already known to be
    /// skew-symmetric and in range.
    pub(crate) fn from_trusted_rows(n: usize, rows: &[[i8; MAX_N]]) -> Self {
        debug_assert_eq!(rows.len(), n);
        let mut entries = [0i8; MAX_N * MAX_N];
        for (i, row) in rows.iter().enumerate() {
            entries[i * n..(i + 1) * n].copy_from_slice(&row[..n]);
        }
        let m = Self {
            n: n as u8,
            entries,
        };
        debug_assert!(m.is_skew());
        m
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.n() + j]
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[i8] {
        let n = self.n();
        &self.entries[i * n..(i + 1) * n]
    }

    /// Entries in row-major order.
    #[inline]
    pub fn as_slice(&self) -> &[i8] {
        &self.entries[..self.n() * self.n()]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.n())
            .map(|i| self.row(i).iter().map(|&v| v as i64).collect())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.as_slice().iter().all(|&v| v == 0)
    }

    fn is_skew(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| (0..n).all(|j| self.get(i, j) == -self.get(j, i)))
    }

    /// `−A`, which for a skew-symmetric matrix is also `Aᵀ`.
    pub fn opposite(&self) -> Self {
        let mut out = *self;
        for v in out.entries.iter_mut() {
            *v = -*v;
        }
        out
    }

    /// `A_σ` with `A_σ[i][j] = A[σ(i)][σ(j)]`.
    pub fn permute(&self, sigma: &Permutation) -> Result<Self> {
        if sigma.len() != self.n() {
            return Err(ShadowError::Dimension {
                expected: self.n(),
                found: sigma.len(),
            });
        }
        Ok(self.permute_unchecked(sigma.images()))
    }

    pub(crate) fn permute_unchecked(&self, sigma: &[usize]) -> Self {
        let n = self.n();
        let mut out = Self {
            n: self.n,
            entries: [0; MAX_N * MAX_N],
        };
        for i in 0..n {
            for j in 0..n {
                out.entries[i * n + j] = self.entries[sigma[i] * n + sigma[j]];
            }
        }
        out
    }
}

impl PartialOrd for SkewIntMatrix {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sizes first, then the row-major order on entries.
impl Ord for SkewIntMatrix {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.as_slice().cmp(other.as_slice()))
    }
}

impl fmt::Debug for SkewIntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_rows())
    }
}

impl fmt::Display for SkewIntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n() {
            f.write_str("[")?;
            for (j, v) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v:2}")?;
            }
            f.write_str("]\n")?;
        }
        Ok(())
    }
}

/// The order `⪯`: the first differing entry in row-major scan decides.
pub fn compare_lex(a: &SkewIntMatrix, b: &SkewIntMatrix) -> Result<LexOrdering> {
    if a.n() != b.n() {
        return Err(ShadowError::Dimension {
            expected: a.n(),
            found: b.n(),
        });
    }
    Ok(a.as_slice().cmp(b.as_slice()))
}

fn check_size(n: usize) -> Result<()> {
    if (1..=MAX_N).contains(&n) {
        Ok(())
    } else {
        Err(ShadowError::SizeOutOfRange(n))
    }
}

/// A bijection of `{0, …, n−1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &k in &images {
            if k >= n || seen[k] {
                return Err(ShadowError::InvalidPermutation(format!("{images:?}")));
            }
            seen[k] = true;
        }
        Ok(Self { images })
    }

    /// Builds a permutation from 1-based images, e.g. `[1, 3, 2]`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(ShadowError::InvalidPermutation(format!("{images:?}")));
        }
        Self::new(images.iter().map(|&k| k - 1).collect())
    }

    /// The transposition exchanging `i` and `j`.
    pub fn swap(n: usize, i: usize, j: usize) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        if i >= n || j >= n {
            return Err(ShadowError::InvalidPermutation(format!(
                "swap({i}, {j}) on {n}"
            )));
        }
        images.swap(i, j);
        Ok(Self { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.len() != other.len() {
            return Err(ShadowError::Dimension {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(Self {
            images: other.images.iter().map(|&k| self.images[k]).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.len()];
        for (i, &k) in self.images.iter().enumerate() {
            images[k] = i;
        }
        Self { images }
    }
}
