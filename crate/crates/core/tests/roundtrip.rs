//! Randomized law checking: exact linear algebra over F_p and Q, canonical
//! serialization, and the action/extension round trip on small inputs.

use once_cell::sync::Lazy;
use proptest::prelude::*;

use algext::extension::{extract_action, semidirect};
use algext::format::{self, Parsed};
use algext::{enumerate_actions, enumerate_algebras, Algebra, Field, Matrix, Scalar};

fn arb_field() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::prime(2).unwrap()),
        Just(Field::prime(3).unwrap()),
        Just(Field::prime(5).unwrap()),
        Just(Field::Rational),
    ]
}

fn arb_scalar(f: Field) -> BoxedStrategy<Scalar> {
    match f {
        Field::Prime { p } => (0..p).prop_map(Scalar::Prime).boxed(),
        Field::Rational => (-4i64..=4, 1i64..=3)
            .prop_map(|(n, d)| {
                Field::Rational
                    .parse_scalar(&format!("{n}/{d}"))
                    .unwrap()
            })
            .boxed(),
    }
}

fn arb_matrix() -> impl Strategy<Value = Matrix> {
    (arb_field(), 1usize..=4, 1usize..=4).prop_flat_map(|(f, r, c)| {
        proptest::collection::vec(arb_scalar(f), r * c)
            .prop_map(move |v| Matrix::from_fn(f, r, c, |i, j| v[i * c + j].clone()))
    })
}

fn arb_vector(f: Field, len: usize) -> BoxedStrategy<Vec<Scalar>> {
    proptest::collection::vec(arb_scalar(f), len).boxed()
}

/// Every associative table of dim <= 2 over F_2, the exhaustive pool the
/// serialization property draws from.
static SMALL_F2: Lazy<Vec<Algebra>> = Lazy::new(|| {
    let f = Field::prime(2).unwrap();
    (0..=2)
        .flat_map(|d| enumerate_algebras(f, d, 1_000_000).unwrap())
        .collect()
});

proptest! {
    #[test]
    fn rref_is_idempotent(m in arb_matrix()) {
        let r = m.rref();
        let again = r.matrix.rref();
        prop_assert_eq!(&again.matrix, &r.matrix);
        prop_assert_eq!(again.pivots, r.pivots);
        prop_assert_eq!(r.matrix.rank(), m.rank());
    }

    #[test]
    fn kernel_rows_are_annihilated(m in arb_matrix()) {
        let k = m.kernel_basis();
        prop_assert_eq!(m.rank() + k.rows(), m.cols());
        for i in 0..k.rows() {
            let image = m.mul_vec(k.row(i));
            prop_assert!(image.iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn solve_finds_a_preimage(pair in arb_matrix().prop_flat_map(|m| {
        let f = m.field();
        let n = m.cols();
        (Just(m), arb_vector(f, n))
    })) {
        let (m, x) = pair;
        let b = m.mul_vec(&x);
        let y = m.solve(&b).expect("b lies in the column space by construction");
        prop_assert_eq!(m.mul_vec(&y), b);
    }

    #[test]
    fn inverse_is_two_sided(m in arb_matrix().prop_filter("square", |m| m.rows() == m.cols())) {
        let n = m.rows();
        match m.inverse() {
            Some(inv) => {
                let id = Matrix::identity(m.field(), n);
                prop_assert_eq!(m.mul(&inv), id.clone());
                prop_assert_eq!(inv.mul(&m), id);
            }
            None => prop_assert!(m.rank() < n),
        }
    }

    #[test]
    fn rational_field_laws(nums in proptest::collection::vec((-6i64..=6, 1i64..=4), 3)) {
        let f = Field::Rational;
        let s: Vec<Scalar> = nums
            .iter()
            .map(|(n, d)| f.parse_scalar(&format!("{n}/{d}")).unwrap())
            .collect();
        let (a, b, c) = (&s[0], &s[1], &s[2]);
        prop_assert_eq!(f.add(&f.add(a, b), c), f.add(a, &f.add(b, c)));
        prop_assert_eq!(f.mul(a, &f.add(b, c)), f.add(&f.mul(a, b), &f.mul(a, c)));
        if !a.is_zero() {
            prop_assert_eq!(f.mul(&f.inv(a).unwrap(), a), f.one());
        }
    }

    #[test]
    fn canonical_serialization_round_trips(ix in 0usize..31) {
        let a = &SMALL_F2[ix];
        let text = format::algebra_to_json(a);
        let Parsed::Algebra(back) = format::parse_str(&text, None, "mem").unwrap() else {
            panic!("kind changed in flight");
        };
        prop_assert_eq!(&back, a);
        prop_assert_eq!(format::algebra_to_json(&back), text);
    }

    #[test]
    fn commutative_reflection_is_commutative(ix in 0usize..31) {
        let a = &SMALL_F2[ix];
        let refl = a.comm_reflection();
        prop_assert!(refl.quotient.is_commutative());
        prop_assert!(refl.unit.is_surjective());
        prop_assert_eq!(refl.unit.kernel().dim(), refl.commutator.dim());
    }
}

#[test]
fn one_dimensional_actions_round_trip_exhaustively() {
    let f = Field::prime(2).unwrap();
    let bases = enumerate_algebras(f, 1, 100).unwrap();
    let spaces = bases.clone();
    let mut seen = 0;
    for b in &bases {
        for x in &spaces {
            for act in enumerate_actions(b, x, 100).unwrap() {
                let e = semidirect(&act);
                assert_eq!(extract_action(&e), act);
                seen += 1;
            }
        }
    }
    assert!(seen >= 4, "expected several actions, saw {seen}");
}
