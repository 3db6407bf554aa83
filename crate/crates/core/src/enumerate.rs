//! Row-by-row generation of basic shades.
//!
//! Rows are built one at a time. Row `r + 1` is forced on its first `r + 1`
//! entries by skew-symmetry and free on the rest; free entries run through
//! `-2, -1, 0, 1, 2` in that order, so complete matrices come out in
//! increasing `⪯` order. A complete matrix is kept when it is singular and is
//! the chosen representative of its orbit under permutation and negation.

use rayon::prelude::*;

use crate::canonical::{has_smaller_image, is_basic_orbit_rep, PartialMatrix};
use crate::error::{Result, ShadowError};
use crate::matrix::{SkewIntMatrix, MAX_N};

const ENTRY_VALUES: [i8; 5] = [-2, -1, 0, 1, 2];

/// The row conditions: mixed signs for nonzero rows, no `2` next to another
/// positive entry (nor `-2` next to another negative one), and at most four
/// `1`s and four `-1`s.
pub fn is_admissible_row(row: &[i8]) -> Result<bool> {
    if let Some((j, &v)) = row.iter().enumerate().find(|(_, v)| !(-2..=2).contains(*v)) {
        return Err(ShadowError::EntryOutOfRange {
            row: 0,
            col: j,
            value: v.into(),
        });
    }
    Ok(row_ok(row))
}

#[inline]
pub(crate) fn row_ok(row: &[i8]) -> bool {
    let mut counts = [0u8; 5];
    for &v in row {
        counts[(v + 2) as usize] += 1;
    }
    let [minus_two, minus_one, _, one, two] = counts;
    let positive = one + two;
    let negative = minus_one + minus_two;
    if (positive == 0) != (negative == 0) {
        return false;
    }
    if two > 0 && positive >= 2 {
        return false;
    }
    if minus_two > 0 && negative >= 2 {
        return false;
    }
    one <= 4 && minus_one <= 4
}

/// The first `r` rows of a candidate `n × n` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowPrefix {
    n: usize,
    rows: Vec<[i8; MAX_N]>,
}

impl RowPrefix {
    pub fn new(n: usize) -> Result<Self> {
        if !(1..=MAX_N).contains(&n) {
            return Err(ShadowError::SizeOutOfRange(n));
        }
        Ok(Self {
            n,
            rows: Vec::with_capacity(n),
        })
    }

    /// Validates the partial skew condition and row admissibility.
    pub fn from_rows<R: AsRef<[i8]>>(n: usize, rows: &[R]) -> Result<Self> {
        let mut prefix = Self::new(n)?;
        for row in rows {
            prefix.push(row.as_ref())?;
        }
        Ok(prefix)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn row(&self, i: usize) -> &[i8] {
        &self.rows[i][..self.n]
    }

    /// Appends a row after checking it against the rows already present.
    pub fn push(&mut self, row: &[i8]) -> Result<()> {
        let r = self.rows.len();
        if row.len() != self.n {
            return Err(ShadowError::Dimension {
                expected: self.n,
                found: row.len(),
            });
        }
        if r >= self.n {
            return Err(ShadowError::Arity {
                expected: 0,
                found: 1,
            });
        }
        if !is_admissible_row(row)? {
            return Err(ShadowError::InadmissibleRow(r));
        }
        if row[r] != 0 {
            return Err(ShadowError::NotSkewSymmetric { row: r, col: r });
        }
        for (j, prev) in self.rows.iter().enumerate() {
            if row[j] != -prev[r] {
                return Err(ShadowError::NotSkewSymmetric { row: r, col: j });
            }
        }
        let mut stored = [0i8; MAX_N];
        stored[..self.n].copy_from_slice(row);
        self.rows.push(stored);
        Ok(())
    }

    /// The next row: forced entries from the transpose, a zero diagonal, then
    /// the `n − r − 1` free entries.
    pub fn compose_row(&self, free: &[i8]) -> Result<Vec<i8>> {
        let r = self.rows.len();
        if r >= self.n {
            return Err(ShadowError::Arity {
                expected: 0,
                found: free.len(),
            });
        }
        let expected = self.n - r - 1;
        if free.len() != expected {
            return Err(ShadowError::Arity {
                expected,
                found: free.len(),
            });
        }
        let mut row = [0i8; MAX_N];
        compose_into(&self.rows, free, &mut row);
        Ok(row[..self.n].to_vec())
    }
}

#[inline]
fn compose_into(rows: &[[i8; MAX_N]], free: &[i8], out: &mut [i8; MAX_N]) {
    let r = rows.len();
    for (j, prev) in rows.iter().enumerate() {
        out[j] = -prev[r];
    }
    out[r] = 0;
    out[r + 1..r + 1 + free.len()].copy_from_slice(free);
}

/// Determinant by fraction-free (Bareiss) elimination.
///
/// Every intermediate value is a minor of the input, so for entries in
/// `[-2, 2]` and `n ≤ 8` the magnitudes stay below `(2·√7)^8`.
pub fn determinant(a: &SkewIntMatrix) -> i128 {
    let n = a.n();
    let mut m: Vec<Vec<i128>> = (0..n)
        .map(|i| a.row(i).iter().map(|&v| v as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(p) => {
                    m.swap(k, p);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Odd-order skew-symmetric matrices are always singular.
pub fn is_singular(a: &SkewIntMatrix) -> bool {
    a.n() % 2 == 1 || determinant(a) == 0
}

/// Singular, `⪯`-minimal in its orbit, and not above the minimum of the
/// orbit of `−A`.
pub fn is_basic(a: &SkewIntMatrix) -> bool {
    is_singular(a) && is_basic_orbit_rep(a)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationOptions {
    pub n: usize,
    /// Stop once the zero matrix (the last basic shade) has been produced.
    pub stop_at_zero: bool,
    pub workers: usize,
    /// Skip prefixes that already have a smaller permuted or negated image.
    pub pruning: bool,
}

impl EnumerationOptions {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            stop_at_zero: false,
            workers: 1,
            pruning: false,
        }
    }

    pub fn workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn pruning(mut self, pruning: bool) -> Self {
        self.pruning = pruning;
        self
    }

    pub fn stop_at_zero(mut self, stop: bool) -> Self {
        self.stop_at_zero = stop;
        self
    }
}

/// All basic shades of size `opts.n`, strictly increasing under `⪯`.
pub fn enumerate_basic_shades(opts: &EnumerationOptions) -> Result<Vec<SkewIntMatrix>> {
    let n = opts.n;
    if !(1..=MAX_N).contains(&n) {
        return Err(ShadowError::SizeOutOfRange(n));
    }
    if opts.workers == 0 {
        return Err(ShadowError::NoWorkers);
    }
    if opts.workers == 1 || n < 3 {
        let mut search = Search::new(n, opts.pruning, opts.stop_at_zero);
        search.set_row();
        return Ok(search.found);
    }

    let split_depth = if n >= 5 { 2 } else { 1 };
    let mut splitter = Search::new(n, opts.pruning, false);
    splitter.split_depth = Some(split_depth);
    splitter.set_row();
    let mut prefixes = splitter.prefixes;
    if opts.stop_at_zero {
        // subtrees after the all-zero prefix only hold matrices above zero
        prefixes.retain(|p| {
            p.iter()
                .flat_map(|row| &row[..n])
                .find(|&&v| v != 0)
                .is_none_or(|&v| v < 0)
        });
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers)
        .build()
        .expect("failed to build worker pool");
    let parts: Vec<Vec<SkewIntMatrix>> = pool.install(|| {
        prefixes
            .par_iter()
            .map(|prefix| {
                let mut search = Search::new(n, opts.pruning, false);
                search.rows = prefix.clone();
                search.set_row();
                search.found
            })
            .collect()
    });
    let mut out: Vec<SkewIntMatrix> = parts.into_iter().flatten().collect();
    if opts.stop_at_zero {
        if let Some(pos) = out.iter().position(|m| m.is_zero()) {
            out.truncate(pos + 1);
        }
    }
    Ok(out)
}

struct Search {
    n: usize,
    pruning: bool,
    stop_at_zero: bool,
    stopped: bool,
    rows: Vec<[i8; MAX_N]>,
    found: Vec<SkewIntMatrix>,
    split_depth: Option<usize>,
    prefixes: Vec<Vec<[i8; MAX_N]>>,
}

impl Search {
    fn new(n: usize, pruning: bool, stop_at_zero: bool) -> Self {
        Self {
            n,
            pruning,
            stop_at_zero,
            stopped: false,
            rows: Vec::with_capacity(n),
            found: Vec::new(),
            split_depth: None,
            prefixes: Vec::new(),
        }
    }

    fn set_row(&mut self) {
        let n = self.n;
        let r = self.rows.len();
        if self.split_depth == Some(r) {
            self.prefixes.push(self.rows.clone());
            return;
        }
        if r + 1 == n {
            let mut last = [0i8; MAX_N];
            compose_into(&self.rows, &[], &mut last);
            if row_ok(&last[..n]) {
                self.rows.push(last);
                let m = SkewIntMatrix::from_trusted_rows(n, &self.rows);
                self.rows.pop();
                if is_basic(&m) {
                    self.found.push(m);
                    if self.stop_at_zero && m.is_zero() {
                        self.stopped = true;
                    }
                }
            }
            return;
        }

        let width = n - r - 1;
        let mut digits = [0usize; MAX_N];
        let mut free = [0i8; MAX_N];
        loop {
            for k in 0..width {
                free[k] = ENTRY_VALUES[digits[k]];
            }
            let mut next = [0i8; MAX_N];
            compose_into(&self.rows, &free[..width], &mut next);
            if row_ok(&next[..n]) {
                self.rows.push(next);
                if !self.pruning || self.prefix_viable() {
                    self.set_row();
                }
                self.rows.pop();
                if self.stopped {
                    return;
                }
            }
            // odometer, last free entry fastest
            let mut k = width;
            loop {
                if k == 0 {
                    return;
                }
                k -= 1;
                digits[k] += 1;
                if digits[k] < ENTRY_VALUES.len() {
                    break;
                }
                digits[k] = 0;
            }
        }
    }

    fn prefix_viable(&self) -> bool {
        let partial = PartialMatrix::from_prefix(self.n, &self.rows);
        !has_smaller_image(&partial, &partial) && !has_smaller_image(&partial, &partial.negated())
    }
}
