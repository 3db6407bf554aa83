//! Exact rational linear algebra: reduced row echelon form, the generic
//! nullspace vector of a shade, and the generic symmetric solution of
//! `A C = 0`.
//!
//! Parameters are numbered from 0 internally and rendered 1-based (`v1`,
//! `c1`, …). Free unknowns are the non-pivot columns of the reduced system,
//! taken in increasing column order.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Result, ShadowError};
use crate::matrix::SkewIntMatrix;

pub type Rational = num_rational::BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// A homogeneous linear form `Σ coeff_k · p_k` over numbered parameters.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LinearForm {
    coeffs: BTreeMap<usize, Rational>,
}

impl LinearForm {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn param(k: usize) -> Self {
        Self::term(k, Rational::one())
    }

    pub fn term(k: usize, coeff: Rational) -> Self {
        let mut f = Self::zero();
        f.add_term(k, coeff);
        f
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        let mut f = Self::zero();
        for (k, c) in terms {
            f.add_term(k, c);
        }
        f
    }

    pub fn add_term(&mut self, k: usize, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(k).or_insert_with(Rational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    pub fn scaled(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(&k, c)| (k, c * factor)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scaled(&-Rational::one())
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in other.terms() {
            out.add_term(k, c.clone());
        }
        out
    }

    pub fn evaluate(&self, assignment: &[Rational]) -> Result<Rational> {
        let mut total = Rational::zero();
        for (k, c) in self.terms() {
            let value = assignment
                .get(k)
                .ok_or(ShadowError::IncompleteAssignment(k))?;
            total += c * value;
        }
        Ok(total)
    }

    /// Renders the form with 1-based parameter names, e.g. `3/2 v1 - v2`.
    pub fn display<'a>(&'a self, prefix: &'a str) -> impl fmt::Display + 'a {
        FormDisplay { form: self, prefix }
    }
}

struct FormDisplay<'a> {
    form: &'a LinearForm,
    prefix: &'a str,
}

impl fmt::Display for FormDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.form.is_zero() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.form.terms().enumerate() {
            let magnitude = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !magnitude.is_one() {
                write!(f, "{magnitude} ")?;
            }
            write!(f, "{}{}", self.prefix, k + 1)?;
        }
        Ok(())
    }
}

/// `Σ_j a_j · forms_j`.
pub fn combine(coeffs: &[i8], forms: &[LinearForm]) -> LinearForm {
    let mut out = LinearForm::zero();
    for (&a, form) in coeffs.iter().zip(forms) {
        if a != 0 {
            for (k, c) in form.terms() {
                out.add_term(k, c * int(a.into()));
            }
        }
    }
    out
}

/// A generic vector of the nullspace: each entry a form in `v1 … vd`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParametricVector {
    pub entries: Vec<LinearForm>,
    pub num_params: usize,
}

impl ParametricVector {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// One basis vector per parameter: the coefficients of that parameter.
    pub fn basis(&self) -> Vec<Vec<Rational>> {
        (0..self.num_params)
            .map(|k| self.entries.iter().map(|e| e.coeff(k)).collect())
            .collect()
    }

    pub fn evaluate(&self, assignment: &[Rational]) -> Result<Vec<Rational>> {
        check_assignment(self.num_params, assignment)?;
        self.entries
            .iter()
            .map(|e| e.evaluate(assignment))
            .collect()
    }
}

/// A generic symmetric matrix in `c1 … cm`, stored as its upper triangle in
/// raster order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParametricSymmetricMatrix {
    n: usize,
    upper: Vec<LinearForm>,
    pub num_params: usize,
}

impl ParametricSymmetricMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &LinearForm {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        &self.upper[upper_index(self.n, i, j)]
    }

    /// Upper triangle including the diagonal, row by row.
    pub fn upper(&self) -> &[LinearForm] {
        &self.upper
    }

    pub fn column(&self, j: usize) -> Vec<LinearForm> {
        (0..self.n).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn evaluate(&self, assignment: &[Rational]) -> Result<Vec<Vec<Rational>>> {
        check_assignment(self.num_params, assignment)?;
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| self.get(i, j).evaluate(assignment))
                    .collect()
            })
            .collect()
    }
}

fn check_assignment(num_params: usize, assignment: &[Rational]) -> Result<()> {
    if assignment.len() < num_params {
        Err(ShadowError::IncompleteAssignment(assignment.len()))
    } else {
        Ok(())
    }
}

/// Position of `(i, j)`, `i ≤ j`, in the raster order of the upper triangle.
pub fn upper_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i <= j && j < n);
    // rows before i hold n, n−1, …, n−i+1 entries
    i * n - i * i.saturating_sub(1) / 2 + (j - i)
}

/// Reduces `m` in place to reduced row echelon form and returns the pivot
/// columns. The pivot for each column is the first nonzero entry at or below
/// the current row.
pub fn rref(m: &mut [Vec<Rational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for v in m[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &factor * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Solves the homogeneous system `m · u = 0` generically: returns one form
/// per unknown, with free unknowns becoming parameters in increasing order.
fn solve_homogeneous(mut m: Vec<Vec<Rational>>, unknowns: usize) -> (Vec<LinearForm>, usize) {
    let pivots = if m.is_empty() {
        Vec::new()
    } else {
        rref(&mut m)
    };
    let mut is_pivot = vec![false; unknowns];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let free: Vec<usize> = (0..unknowns).filter(|&c| !is_pivot[c]).collect();
    let mut forms = vec![LinearForm::zero(); unknowns];
    for (k, &c) in free.iter().enumerate() {
        forms[c] = LinearForm::param(k);
    }
    for (row, &c) in pivots.iter().enumerate() {
        forms[c] = LinearForm::from_terms(
            free.iter()
                .enumerate()
                .map(|(k, &f)| (k, -m[row][f].clone())),
        );
    }
    (forms, free.len())
}

fn rational_matrix(a: &SkewIntMatrix) -> Vec<Vec<Rational>> {
    (0..a.n())
        .map(|i| a.row(i).iter().map(|&v| int(v.into())).collect())
        .collect()
}

pub fn rank(a: &SkewIntMatrix) -> usize {
    rref(&mut rational_matrix(a)).len()
}

/// The generic vector `x` of `𝒩(A)`.
pub fn nullspace_generic(a: &SkewIntMatrix) -> ParametricVector {
    let (entries, num_params) = solve_homogeneous(rational_matrix(a), a.n());
    ParametricVector {
        entries,
        num_params,
    }
}

/// The generic symmetric `C` with `A C = 0`.
pub fn symmetric_kernel_generic(a: &SkewIntMatrix) -> ParametricSymmetricMatrix {
    let n = a.n();
    let unknowns = n * (n + 1) / 2;
    let mut system = Vec::with_capacity(n * n);
    for i in 0..n {
        for col in 0..n {
            // (A C)[i][col] = Σ_j a_ij c_{j,col}
            let mut eq = vec![Rational::zero(); unknowns];
            for j in 0..n {
                let a_ij = a.get(i, j);
                if a_ij != 0 {
                    let (p, q) = if j <= col { (j, col) } else { (col, j) };
                    eq[upper_index(n, p, q)] += int(a_ij.into());
                }
            }
            if eq.iter().any(|v| !v.is_zero()) {
                system.push(eq);
            }
        }
    }
    let (upper, num_params) = solve_homogeneous(system, unknowns);
    ParametricSymmetricMatrix {
        n,
        upper,
        num_params,
    }
}
