mod common;

use std::collections::BTreeSet;

use shadows::classifier::{annihilates, classify};
use shadows::exactla::{nullspace_generic, rref, symmetric_kernel_generic};
use shadows::{enumerate_basic_shades, EnumerationOptions, LinearForm, Rational, SkewIntMatrix};

use common::{matrix_set, reference_items};

fn shades(n: usize) -> Vec<SkewIntMatrix> {
    enumerate_basic_shades(&EnumerationOptions::new(n)).unwrap()
}

#[test]
fn three_by_three_list() {
    let got: BTreeSet<_> = shades(3).into_iter().collect();
    assert_eq!(got, matrix_set("n3_shades.json"));
}

#[test]
fn four_by_four_list() {
    let got: BTreeSet<_> = shades(4).into_iter().collect();
    assert_eq!(got, matrix_set("n4_shades.json"));
}

#[test]
fn five_by_five_essential_list() {
    let essential: BTreeSet<_> = shades(5)
        .iter()
        .map(classify)
        .filter(|r| r.is_essential)
        .map(|r| r.matrix)
        .collect();
    let reference: BTreeSet<_> = reference_items("n5_essential.json")
        .into_iter()
        .map(|i| i.matrix)
        .collect();
    assert_eq!(reference.len(), 26);
    assert_eq!(essential, reference);
}

fn coefficient_vectors(forms: &[LinearForm], params: usize) -> Vec<Vec<Rational>> {
    (0..params)
        .map(|k| forms.iter().map(|f| f.coeff(k)).collect())
        .collect()
}

fn rank(rows: &[Vec<Rational>]) -> usize {
    if rows.is_empty() {
        0
    } else {
        rref(&mut rows.to_vec()).len()
    }
}

#[test]
fn reference_solutions_solve_the_system() {
    for item in reference_items("n5_essential.json") {
        let a = item.matrix;
        let n = a.n();
        assert!(annihilates(&a, &item.x), "item {}: A·x ≠ 0", item.number);

        // the reference x spans the computed nullspace
        let basis = nullspace_generic(&a).basis();
        let reference = coefficient_vectors(&item.x, item.x_params);
        let joint: Vec<_> = basis.iter().chain(&reference).cloned().collect();
        assert_eq!(rank(&reference), basis.len(), "item {}", item.number);
        assert_eq!(rank(&joint), basis.len(), "item {}", item.number);

        for col in 0..n {
            let column: Vec<LinearForm> = (0..n).map(|i| item.c[i][col].clone()).collect();
            assert!(annihilates(&a, &column), "item {}: A·C ≠ 0", item.number);
        }
        for i in 0..n {
            for j in 0..n {
                assert_eq!(item.c[i][j], item.c[j][i]);
            }
        }
        // and has as many free parameters as the generic symmetric kernel
        assert_eq!(
            symmetric_kernel_generic(&a).num_params,
            item.c_params,
            "item {}",
            item.number
        );
    }
}
