//! Frozen golden values, each confirmed twice: once by the brute-force
//! element-set oracle in `common`, once by the library under test.

mod common;

use algext::{
    enumerate_actions, enumerate_algebras, weak_actor, Algebra, Field, Matrix, Scalar, Subspace,
};
use common::Table;

fn f2() -> Field {
    Field::prime(2).unwrap()
}

/// Builds an F_2 algebra from the positions of the nonzero structure
/// constants, entry (i, j, k) meaning e_i e_j contains e_k.
fn algebra_f2(names: &[&str], ones: &[(usize, usize, usize)]) -> Algebra {
    let d = names.len();
    let mut table = vec![f2().zero(); d * d * d];
    for &(i, j, k) in ones {
        table[(i * d + j) * d + k] = f2().one();
    }
    Algebra::new(f2(), names.iter().map(|s| s.to_string()).collect(), table).unwrap()
}

fn e1() -> Algebra {
    algebra_f2(&["u", "t"], &[(0, 0, 0), (0, 1, 1), (1, 0, 1)])
}

fn e2() -> Algebra {
    algebra_f2(&["u", "t"], &[(0, 0, 0), (0, 1, 1)])
}

fn idem() -> Algebra {
    algebra_f2(&["b"], &[(0, 0, 0)])
}

fn zero_mult(dim: usize) -> Algebra {
    Algebra::zero_mult(f2(), dim)
}

#[test]
fn golden_associative_table_counts() {
    assert_eq!(common::count_associative_tables(2, 1), 2);
    assert_eq!(common::count_associative_tables(3, 1), 3);
    assert_eq!(common::count_associative_tables(2, 2), 28);
    assert_eq!(
        enumerate_algebras(f2(), 2, 1_000_000).unwrap().len(),
        28,
        "library count disagrees with the all-element oracle"
    );
    let f3 = Field::prime(3).unwrap();
    assert_eq!(common::count_associative_tables(3, 2), 121);
    assert_eq!(enumerate_algebras(f3, 2, 1_000_000).unwrap().len(), 121);
}

#[test]
fn golden_commutator_ideal_of_e2() {
    let a = e2();
    let t = Table::of(&a);
    let ideal = common::commutator_ideal_elements(&t);
    let span_t: std::collections::BTreeSet<Vec<u64>> =
        [vec![0, 0], vec![0, 1]].into_iter().collect();
    assert_eq!(ideal, span_t);

    let lib = a.commutator_ideal();
    assert_eq!(lib.dim(), 1);
    assert!(lib.contains(&[f2().zero(), f2().one()]));

    // Comm(E2): two cosets, and the nonzero one squares to itself.
    assert!(!ideal.contains(&vec![1, 0]));
    assert_eq!(t.mul(&[1, 0], &[1, 0]), vec![1, 0]);
    let refl = a.comm_reflection();
    assert_eq!(refl.quotient.dim(), 1);
    assert_eq!(*refl.quotient.structure_constant(0, 0, 0), f2().one());
    assert!(refl.quotient.is_commutative());
    let span = Subspace::from_spanning(
        &a,
        &Matrix::from_rows(f2(), vec![vec![f2().zero(), f2().one()]], 2).unwrap(),
    );
    assert!(refl.commutator.same_subspace(&span));
}

#[test]
fn golden_commutator_ideal_of_m2_is_everything() {
    let a = Algebra::matrix_units(f2(), 2);
    let t = Table::of(&a);
    let ideal = common::commutator_ideal_elements(&t);
    assert_eq!(ideal.len(), 16);
    assert_eq!(a.commutator_ideal().dim(), 4);
    assert_eq!(a.comm_reflection().quotient.dim(), 0);
}

#[test]
fn golden_weak_actor_dimensions() {
    for (x, dim) in [(zero_mult(1), 2usize), (idem(), 1), (zero_mult(2), 8)] {
        let count = common::weak_actor_pair_count(&Table::of(&x));
        assert_eq!(count, 1usize << dim, "oracle count for dim {}", x.dim());
        let w = weak_actor(&x).unwrap();
        assert_eq!(w.algebra.dim(), dim);
        assert_eq!(w.subspace.dim(), dim);
    }
}

#[test]
fn golden_action_counts() {
    let z1 = zero_mult(1);
    let cases = [
        (z1.clone(), z1.clone(), 1usize),
        (idem(), z1, 4),
    ];
    for (b, x, expected) in cases {
        let oracle = common::action_count_by_semidirect(&Table::of(&b), &Table::of(&x));
        assert_eq!(oracle, expected);
        let lib = enumerate_actions(&b, &x, 1_000_000).unwrap();
        assert_eq!(lib.len(), expected);
        for act in &lib {
            assert!(act.is_valid());
        }
    }
}

#[test]
fn oracle_and_library_agree_on_every_small_table() {
    // Associativity by basis triples must match associativity on all
    // elements across the complete dim-2 candidate space.
    let f = f2();
    for digits in common::all_tuples(2, 8) {
        let t = Table::from_digits(2, 2, &digits);
        let table: Vec<Scalar> = digits.iter().map(|&d| Scalar::Prime(d)).collect();
        let lib_assoc = Algebra::new(
            f,
            vec!["e0".into(), "e1".into()],
            table,
        )
        .is_ok();
        assert_eq!(lib_assoc, t.is_associative_on_elements());
    }
}

#[test]
fn e1_is_commutative_and_e2_is_not() {
    assert!(e1().is_commutative());
    assert!(!e2().is_commutative());
    let t = Table::of(&e2());
    assert_ne!(t.mul(&[1, 0], &[0, 1]), t.mul(&[0, 1], &[1, 0]));
}
