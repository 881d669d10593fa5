//! Regenerates the canonical files under data/. Run from the workspace
//! root: cargo run -p algext --example make_data -- data

use std::path::Path;

use algext::format::{action_to_json, algebra_to_json, extension_to_json, hom_to_json};
use algext::{semidirect, Action, Algebra, AlgebraHom, Field, Matrix};

fn sparse(field: Field, names: &[&str], entries: &[(usize, usize, &[(usize, i64)])]) -> Algebra {
    let dim = names.len();
    let mut table = vec![field.zero(); dim * dim * dim];
    for &(i, j, terms) in entries {
        for &(k, v) in terms {
            table[(i * dim + j) * dim + k] = field.from_i64(v);
        }
    }
    Algebra::new(field, names.iter().map(|s| s.to_string()).collect(), table).unwrap()
}

fn main() {
    let dir = std::env::args().nth(1).unwrap_or_else(|| "data".to_string());
    let dir = Path::new(&dir);
    std::fs::create_dir_all(dir).unwrap();
    let f2 = Field::prime(2).unwrap();

    // the two-dimensional unital commutative example, u the unit, t² = 0
    let e1 = sparse(
        f2,
        &["u", "t"],
        &[(0, 0, &[(0, 1)]), (0, 1, &[(1, 1)]), (1, 0, &[(1, 1)])],
    );
    // its one-sided cousin: ut = t but tu = 0
    let e2 = sparse(f2, &["u", "t"], &[(0, 0, &[(0, 1)]), (0, 1, &[(1, 1)])]);
    let m2 = Algebra::matrix_units(f2, 2);
    let zero1 = Algebra::zero_mult(f2, 1);
    let zero2 = Algebra::zero_mult(f2, 2);
    let idem = sparse(f2, &["b"], &[(0, 0, &[(0, 1)])]);
    let e1_q = sparse(
        Field::Rational,
        &["u", "t"],
        &[(0, 0, &[(0, 1)]), (0, 1, &[(1, 1)]), (1, 0, &[(1, 1)])],
    );

    let write = |name: &str, text: String| {
        std::fs::write(dir.join(name), text).unwrap();
        eprintln!("wrote {name}");
    };

    write("e1.json", algebra_to_json(&e1));
    write("e2.json", algebra_to_json(&e2));
    write("m2_f2.json", algebra_to_json(&m2));
    write("zero1_f2.json", algebra_to_json(&zero1));
    write("zero2_f2.json", algebra_to_json(&zero2));
    write("idem_f2.json", algebra_to_json(&idem));
    write("e1_q.json", algebra_to_json(&e1_q));

    // the surjection E1 -> idem killing t; classically but not
    // annihilator-centrally central
    let alpha = AlgebraHom::new(
        e1.clone(),
        idem.clone(),
        Matrix::from_rows(f2, vec![vec![f2.one(), f2.zero()]], 2).unwrap(),
    )
    .unwrap();
    write("alpha_e1.json", hom_to_json(&alpha));

    // idem acting on a one-dimensional zero-multiplication space by 1 on
    // both sides; its semidirect product is E1 again
    let one = Matrix::identity(f2, 1);
    let act = Action::new(idem, zero1, vec![one.clone()], vec![one]).unwrap();
    write("action_e1.json", action_to_json(&act));
    write("ext_e1.json", extension_to_json(&semidirect(&act)));
}
