//! Exhaustive generation of small objects over a prime field: all
//! associative structure-constant tables of a given dimension, and all (or
//! a deterministic sample of) surjective homomorphisms between two fixed
//! algebras. No isomorphism reduction anywhere; the theorems quantify over
//! presentations, so we check presentations.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, AlgebraHom};
use crate::error::{Error, Result};
use crate::extension::{checked_power, Odometer};
use crate::field::Field;
use crate::matrix::Matrix;

fn require_prime(field: Field) -> Result<u64> {
    match field {
        Field::Prime { p } => Ok(p),
        Field::Rational => Err(Error::InfiniteField(field)),
    }
}

/// All associative multiplication tables of the given dimension over F_p,
/// in lexicographic order of the flattened table. Basis names are e0, e1,
/// and so on. The nominal candidate count p^(dim³) must fit the budget.
pub fn enumerate_algebras(field: Field, dim: usize, budget: u64) -> Result<Vec<Algebra>> {
    let p = require_prime(field)?;
    let digits = dim * dim * dim;
    let candidates = checked_power(p, digits);
    if candidates > budget as u128 {
        return Err(Error::BudgetExceeded {
            what: format!("multiplication tables of dimension {dim}"),
            candidates,
            budget,
        });
    }
    let names: Vec<String> = (0..dim).map(|i| format!("e{i}")).collect();
    let mut out = Vec::new();
    for table_digits in Odometer::new(p, digits) {
        let table = table_digits.iter().map(|&v| field.from_i64(v as i64)).collect();
        let a = Algebra::candidate(field, names.clone(), table);
        if a.is_associative() {
            out.push(a);
        }
    }
    Ok(out)
}

/// Multiplicativity probe on a bare matrix, cheap enough to run over every
/// candidate: bails at the first basis pair where f(e_i e_j) != f(e_i) f(e_j).
fn is_multiplicative(source: &Algebra, target: &Algebra, m: &Matrix) -> bool {
    for i in 0..source.dim() {
        let fi = m.col(i);
        for j in 0..source.dim() {
            let lhs = m.mul_vec(&source.multiply(&source.basis_vector(i), &source.basis_vector(j)));
            if lhs != target.multiply(&fi, &m.col(j)) {
                return false;
            }
        }
    }
    true
}

fn hom_from_digits(
    field: Field,
    source: &Algebra,
    target: &Algebra,
    digits: &[u64],
) -> Option<AlgebraHom> {
    let matrix = Matrix::from_fn(field, target.dim(), source.dim(), |r, c| {
        field.from_i64(digits[r * source.dim() + c] as i64)
    });
    if !is_multiplicative(source, target, &matrix) {
        return None;
    }
    Some(AlgebraHom::new_unchecked(source.clone(), target.clone(), matrix))
}

/// Every homomorphism source -> target (surjective or not), lexicographic
/// in the row-major matrix. The matrix space p^(dim T · dim S) must fit the
/// budget; there is no sampling fallback here.
pub fn all_homs(source: &Algebra, target: &Algebra, budget: u64) -> Result<Vec<AlgebraHom>> {
    let field = source.field();
    if field != target.field() {
        return Err(Error::FieldMismatch(field, target.field()));
    }
    let p = require_prime(field)?;
    let digits = source.dim() * target.dim();
    let candidates = checked_power(p, digits);
    if candidates > budget as u128 {
        return Err(Error::BudgetExceeded {
            what: format!(
                "homomorphism matrices {} -> {}",
                source.dim(),
                target.dim()
            ),
            candidates,
            budget,
        });
    }
    let mut out = Vec::new();
    for d in Odometer::new(p, digits) {
        out.extend(hom_from_digits(field, source, target, &d));
    }
    Ok(out)
}

/// All surjective homomorphisms source -> target when the matrix space
/// p^(dim T · dim S) fits the budget, in lexicographic order of the
/// row-major matrix; otherwise `budget` deterministically sampled matrices
/// (deduplicated, seeded) filtered the same way.
pub fn surjective_homs(
    source: &Algebra,
    target: &Algebra,
    budget: u64,
    seed: u64,
) -> Result<Vec<AlgebraHom>> {
    let field = source.field();
    if field != target.field() {
        return Err(Error::FieldMismatch(field, target.field()));
    }
    let p = require_prime(field)?;
    if target.dim() > source.dim() {
        return Ok(Vec::new());
    }
    let digits = source.dim() * target.dim();
    let candidates = checked_power(p, digits);
    let mut out = Vec::new();
    if candidates <= budget as u128 {
        out = all_homs(source, target, budget)?;
        out.retain(|h| h.is_surjective());
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut seen = std::collections::HashSet::new();
        for _ in 0..budget {
            let d: Vec<u64> = (0..digits).map(|_| rng.gen_range(0..p)).collect();
            if seen.insert(d.clone()) {
                out.extend(hom_from_digits(field, source, target, &d).filter(|h| h.is_surjective()));
            }
        }
    }
    Ok(out)
}
