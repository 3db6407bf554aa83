//! Deciding which shades are tame periodicity shadows, and which of those
//! are essential.
//!
//! Ground truth is an exact feasibility problem on the generic symmetric
//! solution `C` of `A C = 0`: find parameters making every entry `≥ 0` and
//! every column sum `≥ 1`. Alongside it the classifier records the cheaper
//! deletion rules on the generic nullspace vector `x` (a zero entry, a pair
//! of opposite entries, a vanishing natural combination of entries), each
//! with a certificate that can be checked independently.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::canonical::canonical_min;
use crate::exactla::{
    combine, int, nullspace_generic, symmetric_kernel_generic, LinearForm,
    ParametricSymmetricMatrix, ParametricVector, Rational,
};
use crate::lp::{LinearProgram, LpOutcome, Relation};
use crate::matrix::SkewIntMatrix;

/// Which deletion rule fired on `x`, if any, with its certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FilterVerdict {
    Pass,
    /// Entry `index` of `x` is identically zero.
    ZeroEntry {
        index: usize,
    },
    /// `x[first] = −x[second]` identically.
    OppositePair {
        first: usize,
        second: usize,
    },
    /// `Σ coefficients[i] · x[i] = 0` identically, with natural coefficients
    /// not all zero.
    VanishingNaturalCombination {
        coefficients: Vec<u64>,
    },
}

impl FilterVerdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, FilterVerdict::Pass)
    }

    /// Re-checks the certificate against `x`.
    pub fn certifies(&self, x: &ParametricVector) -> bool {
        match self {
            FilterVerdict::Pass => true,
            FilterVerdict::ZeroEntry { index } => {
                x.entries.get(*index).is_some_and(LinearForm::is_zero)
            }
            FilterVerdict::OppositePair { first, second } => {
                first != second
                    && match (x.entries.get(*first), x.entries.get(*second)) {
                        (Some(a), Some(b)) => a.add(b).is_zero(),
                        _ => false,
                    }
            }
            FilterVerdict::VanishingNaturalCombination { coefficients } => {
                if coefficients.len() != x.len() || coefficients.iter().all(|&a| a == 0) {
                    return false;
                }
                let mut sum = LinearForm::zero();
                for (a, e) in coefficients.iter().zip(&x.entries) {
                    sum = sum.add(&e.scaled(&Rational::from_integer(BigInt::from(*a))));
                }
                sum.is_zero()
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationRecord {
    pub matrix: SkewIntMatrix,
    pub is_shadow: bool,
    pub is_essential: bool,
    pub self_opposite: bool,
    pub filter: FilterVerdict,
    pub x: ParametricVector,
    pub c_generic: ParametricSymmetricMatrix,
    /// Symmetric natural matrix with nonzero columns and `A · W = 0`.
    pub witness: Option<Vec<Vec<u64>>>,
}

/// The deletion rules in order: zero entry, opposite pair, then a vanishing
/// natural combination, decided by asking whether all entries of `x` can be
/// made positive at once (they cannot exactly when such a combination
/// exists).
pub fn ps3_filter_verdict(x: &ParametricVector) -> FilterVerdict {
    if let Some(index) = x.entries.iter().position(LinearForm::is_zero) {
        return FilterVerdict::ZeroEntry { index };
    }
    for first in 0..x.len() {
        for second in first + 1..x.len() {
            if x.entries[first].add(&x.entries[second]).is_zero() {
                return FilterVerdict::OppositePair { first, second };
            }
        }
    }
    if entries_can_be_positive(x) {
        FilterVerdict::Pass
    } else {
        let coefficients = vanishing_combination(x)
            .expect("no positive assignment, so a vanishing combination must exist");
        FilterVerdict::VanishingNaturalCombination { coefficients }
    }
}

/// Whether some assignment makes every entry of `x` at least 1.
pub fn entries_can_be_positive(x: &ParametricVector) -> bool {
    let mut lp = LinearProgram::feasibility(x.num_params, true);
    for e in &x.entries {
        lp.add(row_of(e, x.num_params), Relation::Ge, Rational::one());
    }
    lp.solve() != LpOutcome::Infeasible
}

/// Natural coefficients, not all zero, with `Σ a_i x_i = 0` identically.
pub fn vanishing_combination(x: &ParametricVector) -> Option<Vec<u64>> {
    let n = x.len();
    let mut lp = LinearProgram::feasibility(n, false);
    for k in 0..x.num_params {
        lp.add(
            x.entries.iter().map(|e| e.coeff(k)).collect(),
            Relation::Eq,
            Rational::zero(),
        );
    }
    lp.add(vec![Rational::one(); n], Relation::Eq, Rational::one());
    let point = lp.solve().point()?.to_vec();
    Some(to_naturals(&point))
}

/// Searches for a natural witness `C` in the generic symmetric kernel.
///
/// Among feasible points the one minimising the diagonal sum plus three
/// times the off-diagonal sum is taken, then scaled to the smallest integer
/// matrix.
pub fn ps3_feasible(c: &ParametricSymmetricMatrix) -> Option<Vec<Vec<u64>>> {
    let n = c.n();
    let m = c.num_params;
    let mut lp = LinearProgram::feasibility(m, true);
    let mut objective = LinearForm::zero();
    for i in 0..n {
        for j in i..n {
            let entry = c.get(i, j);
            lp.add(row_of(entry, m), Relation::Ge, Rational::zero());
            objective = objective.add(&entry.scaled(&int(if i == j { 1 } else { 3 })));
        }
    }
    for j in 0..n {
        let sum = c
            .column(j)
            .iter()
            .fold(LinearForm::zero(), |acc, e| acc.add(e));
        lp.add(row_of(&sum, m), Relation::Ge, Rational::one());
    }
    lp.objective = row_of(&objective, m);
    let point = match lp.solve() {
        LpOutcome::Optimal(p) => p,
        LpOutcome::Unbounded(_) => unreachable!("objective is bounded below by zero"),
        LpOutcome::Infeasible => return None,
    };
    let values = c.evaluate(&point).expect("point covers every parameter");
    let flat: Vec<Rational> = values.into_iter().flatten().collect();
    let naturals = to_naturals(&flat);
    Some(naturals.chunks(n).map(<[u64]>::to_vec).collect())
}

/// Essential: the Markov shadow, or no row holding both `2` and `−2` and no
/// `a_ij = 2, a_jk = 1` without `a_ki > 0` (nor the negated pattern without
/// `a_ki < 0`).
pub fn is_essential(a: &SkewIntMatrix) -> bool {
    if a.n() == 3 && *a == markov() {
        return true;
    }
    let n = a.n();
    for i in 0..n {
        let row = a.row(i);
        if row.contains(&2) && row.contains(&-2) {
            return false;
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (ij, jk, ki) = (a.get(i, j), a.get(j, k), a.get(k, i));
                if ij == 2 && jk == 1 && ki <= 0 {
                    return false;
                }
                if ij == -2 && jk == -1 && ki >= 0 {
                    return false;
                }
            }
        }
    }
    true
}

pub fn markov() -> SkewIntMatrix {
    SkewIntMatrix::from_rows(&[[0i8, -2, 2], [2, 0, -2], [-2, 2, 0]]).expect("valid matrix")
}

pub fn classify(a: &SkewIntMatrix) -> ClassificationRecord {
    let x = nullspace_generic(a);
    let c_generic = symmetric_kernel_generic(a);
    let filter = ps3_filter_verdict(&x);
    let witness = ps3_feasible(&c_generic);
    let is_shadow = witness.is_some();
    ClassificationRecord {
        matrix: *a,
        is_shadow,
        is_essential: is_shadow && is_essential(a),
        self_opposite: canonical_min(&a.opposite()) == *a,
        filter,
        x,
        c_generic,
        witness,
    }
}

/// Natural symmetric matrix, nonzero columns, `A · W = 0`.
pub fn witness_is_valid(a: &SkewIntMatrix, w: &[Vec<u64>]) -> bool {
    let n = a.n();
    if w.len() != n || w.iter().any(|r| r.len() != n) {
        return false;
    }
    let symmetric = (0..n).all(|i| (0..n).all(|j| w[i][j] == w[j][i]));
    let columns_nonzero = (0..n).all(|j| (0..n).any(|i| w[i][j] != 0));
    let annihilated = (0..n).all(|i| {
        (0..n).all(|j| {
            (0..n)
                .map(|k| i128::from(a.get(i, k)) * i128::from(w[k][j]))
                .sum::<i128>()
                == 0
        })
    });
    symmetric && columns_nonzero && annihilated
}

/// Scales a nonnegative rational vector to naturals: clear denominators,
/// then divide by the gcd of the entries.
fn to_naturals(values: &[Rational]) -> Vec<u64> {
    debug_assert!(values.iter().all(|v| !v.is_negative()));
    let lcm = values
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let scaled: Vec<BigInt> = values
        .iter()
        .map(|v| (v * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let gcd = scaled.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    scaled
        .into_iter()
        .map(|v| {
            let v = if gcd.is_zero() { v } else { v / &gcd };
            u64::try_from(v).expect("witness entry fits in u64")
        })
        .collect()
}

fn row_of(form: &LinearForm, num_params: usize) -> Vec<Rational> {
    (0..num_params).map(|k| form.coeff(k)).collect()
}

/// Checks `A · x = 0` for every entry form.
pub fn annihilates(a: &SkewIntMatrix, x: &[LinearForm]) -> bool {
    (0..a.n()).all(|i| combine(a.row(i), x).is_zero())
}
