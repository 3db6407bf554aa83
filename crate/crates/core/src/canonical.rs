//! Orbit representatives under the permutation action.
//!
//! [`canonical_min`] and [`canonical_max`] scan all `n!` permutations and are
//! the reference definitions. The enumerator instead asks a cheaper
//! question, "is there any `σ` with `B_σ ≺ A`?", answered by
//! [`has_smaller_image`] with a backtracking search that fixes `σ` one index
//! at a time and compares the first row as soon as its entries are known. The
//! same search also works on partially filled matrices, which is what the
//! optional prefix pruning in the enumerator relies on.

use crate::matrix::{SkewIntMatrix, MAX_N};

/// Calls `f` with every permutation of `0..n` (Heap's algorithm).
pub(crate) fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    f(&perm);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            f(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// The `⪯`-smallest matrix in the orbit of `a`.
pub fn canonical_min(a: &SkewIntMatrix) -> SkewIntMatrix {
    let mut best = *a;
    for_each_permutation(a.n(), |sigma| {
        let image = a.permute_unchecked(sigma);
        if image < best {
            best = image;
        }
    });
    best
}

/// The `⪯`-largest matrix in the orbit of `a`.
pub fn canonical_max(a: &SkewIntMatrix) -> SkewIntMatrix {
    let mut best = *a;
    for_each_permutation(a.n(), |sigma| {
        let image = a.permute_unchecked(sigma);
        if image > best {
            best = image;
        }
    });
    best
}

/// `a` is the minimum of its orbit and is not above the minimum of the orbit
/// of `−a`.
pub fn is_basic_orbit_rep(a: &SkewIntMatrix) -> bool {
    let full = PartialMatrix::complete(a);
    !has_smaller_image(&full, &full) && !has_smaller_image(&full, &full.negated())
}

/// A skew-symmetric matrix of which only the first `rows` rows (and, by
/// skew-symmetry, the first `rows` columns and the diagonal) are known.
#[derive(Clone, Copy, Debug)]
pub(crate) struct PartialMatrix {
    n: usize,
    rows: usize,
    entries: [i8; MAX_N * MAX_N],
}

impl PartialMatrix {
    pub(crate) fn complete(m: &SkewIntMatrix) -> Self {
        let n = m.n();
        let mut entries = [0i8; MAX_N * MAX_N];
        entries[..n * n].copy_from_slice(m.as_slice());
        Self {
            n,
            rows: n,
            entries,
        }
    }

    /// `rows` must satisfy the partial skew condition.
    pub(crate) fn from_prefix(n: usize, rows: &[[i8; MAX_N]]) -> Self {
        let mut entries = [0i8; MAX_N * MAX_N];
        for (i, row) in rows.iter().enumerate() {
            for j in 0..n {
                entries[i * n + j] = row[j];
                entries[j * n + i] = -row[j];
            }
        }
        Self {
            n,
            rows: rows.len(),
            entries,
        }
    }

    pub(crate) fn negated(&self) -> Self {
        let mut out = *self;
        for v in out.entries.iter_mut() {
            *v = -*v;
        }
        out
    }

    #[inline]
    fn get(&self, i: usize, j: usize) -> Option<i8> {
        if i < self.rows || j < self.rows || i == j {
            Some(self.entries[i * self.n + j])
        } else {
            None
        }
    }
}

/// Whether some permutation `σ` gives `source_σ ≺ target`, decided on the
/// row-major prefix where both matrices are known. A `true` answer holds for
/// every completion of the two partial matrices.
pub(crate) fn has_smaller_image(target: &PartialMatrix, source: &PartialMatrix) -> bool {
    debug_assert_eq!(target.n, source.n);
    let mut search = ImageSearch {
        target,
        source,
        sigma: [0; MAX_N],
        used: 0,
    };
    search.extend(0)
}

struct ImageSearch<'a> {
    target: &'a PartialMatrix,
    source: &'a PartialMatrix,
    sigma: [usize; MAX_N],
    used: u32,
}

impl ImageSearch<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        let n = self.target.n;
        for v in 0..n {
            if self.used & (1 << v) != 0 {
                continue;
            }
            self.sigma[depth] = v;
            if depth > 0 {
                // entry (0, depth) of the image is a_{σ(0) v}
                let img = self.source.get(self.sigma[0], v);
                let tgt = self.target.get(0, depth);
                match (img, tgt) {
                    (Some(x), Some(y)) if x < y => return true,
                    (Some(x), Some(y)) if x == y => {}
                    _ => continue,
                }
            }
            if depth + 1 == n {
                if self.compare_tail() {
                    return true;
                }
            } else {
                self.used |= 1 << v;
                let found = self.extend(depth + 1);
                self.used &= !(1 << v);
                if found {
                    return true;
                }
            }
        }
        false
    }

    /// Rows 1.. of the fully determined image against the target.
    fn compare_tail(&self) -> bool {
        let n = self.target.n;
        for i in 1..n {
            for j in 0..n {
                let img = self.source.get(self.sigma[i], self.sigma[j]);
                let tgt = self.target.get(i, j);
                match (img, tgt) {
                    (Some(x), Some(y)) if x < y => return true,
                    (Some(x), Some(y)) if x > y => return false,
                    (Some(_), Some(_)) => {}
                    _ => return false,
                }
            }
        }
        false
    }
}
