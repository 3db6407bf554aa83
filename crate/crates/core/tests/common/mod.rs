//! Fixture loading shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;

use serde::Deserialize;
use shadows::{LinearForm, Rational, SkewIntMatrix};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("fixtures")
        .join(name)
}

fn read(name: &str) -> String {
    std::fs::read_to_string(fixture_path(name)).expect("fixture readable")
}

pub fn matrix_list(name: &str) -> Vec<SkewIntMatrix> {
    let grids: Vec<Vec<Vec<i8>>> = serde_json::from_str(&read(name)).expect("fixture parses");
    grids
        .iter()
        .map(|g| SkewIntMatrix::from_rows(g).expect("fixture matrix is a valid shade"))
        .collect()
}

pub fn matrix_set(name: &str) -> BTreeSet<SkewIntMatrix> {
    matrix_list(name).into_iter().collect()
}

#[derive(Deserialize)]
struct RawItem {
    matrix: Vec<Vec<i8>>,
    x: Vec<BTreeMap<String, String>>,
    c_upper: Vec<Vec<BTreeMap<String, String>>>,
}

/// A reference `(A, x, C)` triple with parameters renumbered from 0 in name
/// order.
pub struct ReferenceItem {
    pub number: usize,
    pub matrix: SkewIntMatrix,
    pub x: Vec<LinearForm>,
    pub x_params: usize,
    /// Full symmetric matrix rebuilt from the stored upper triangle.
    pub c: Vec<Vec<LinearForm>>,
    pub c_params: usize,
}

fn to_forms(raw: &[&BTreeMap<String, String>]) -> (Vec<LinearForm>, usize) {
    let names: BTreeSet<&String> = raw.iter().flat_map(|m| m.keys()).collect();
    let index: BTreeMap<&String, usize> = names.iter().enumerate().map(|(i, &n)| (n, i)).collect();
    let forms = raw
        .iter()
        .map(|m| {
            LinearForm::from_terms(m.iter().map(|(name, c)| {
                (
                    index[name],
                    c.parse::<Rational>().expect("coefficient parses"),
                )
            }))
        })
        .collect();
    (forms, names.len())
}

pub fn reference_items(name: &str) -> Vec<ReferenceItem> {
    let raw: Vec<RawItem> = serde_json::from_str(&read(name)).expect("fixture parses");
    raw.iter()
        .enumerate()
        .map(|(k, item)| {
            let matrix = SkewIntMatrix::from_rows(&item.matrix).expect("valid shade");
            let n = matrix.n();
            let (x, x_params) = to_forms(&item.x.iter().collect::<Vec<_>>());
            let upper: Vec<&BTreeMap<String, String>> = item.c_upper.iter().flatten().collect();
            assert_eq!(upper.len(), n * (n + 1) / 2);
            let (flat, c_params) = to_forms(&upper);
            let mut c = vec![vec![LinearForm::zero(); n]; n];
            let mut it = flat.into_iter();
            for i in 0..n {
                for j in i..n {
                    let f = it.next().expect("upper triangle complete");
                    c[j][i] = f.clone();
                    c[i][j] = f;
                }
            }
            ReferenceItem {
                number: k + 1,
                matrix,
                x,
                x_params,
                c,
                c_params,
            }
        })
        .collect()
}
