//! Finite-dimensional non-unital associative algebras presented by structure
//! constants, together with their homomorphisms, ideals, quotients, products,
//! pullbacks, and the reflection onto commutative algebras.
//!
//! The structure-constant table stores e_i * e_j = sum_k c[i][j][k] e_k in a
//! flat row-major vector. Associativity is checked on basis triples only;
//! that suffices because multiplication is trilinear in the coordinates.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::{coords_in_rows, reduce_mod_rows, row_span_contains, Matrix, Rref};

/// A non-unital associative algebra over an exact field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    field: Field,
    dim: usize,
    basis_names: Vec<String>,
    /// c[(i * dim + j) * dim + k] is the e_k coefficient of e_i * e_j.
    table: Vec<Scalar>,
}

/// Which flavour of "central" the elements of a subspace must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CentreMode {
    /// x commutes with everything: ax = xa for all a.
    Commuting,
    /// x annihilates everything: ax = xa = 0 for all a.
    Annihilating,
}

impl Algebra {
    /// Validates names, scalar membership, and associativity.
    pub fn new(field: Field, basis_names: Vec<String>, table: Vec<Scalar>) -> Result<Algebra> {
        let dim = basis_names.len();
        if table.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "structure table has {} entries, expected {}",
                table.len(),
                dim * dim * dim
            )));
        }
        for (i, name) in basis_names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::InvalidAlgebra(format!("basis name {i} is empty")));
            }
            if basis_names[..i].contains(name) {
                return Err(Error::InvalidAlgebra(format!(
                    "duplicate basis name {name:?}"
                )));
            }
        }
        for (n, s) in table.iter().enumerate() {
            if !field.contains(s) {
                return Err(Error::InvalidAlgebra(format!(
                    "table entry {n} is not an element of {field}"
                )));
            }
        }
        let a = Algebra {
            field,
            dim,
            basis_names,
            table,
        };
        match a.associativity_violations().first() {
            Some(&(i, j, k)) => Err(Error::NotAssociative(i, j, k)),
            None => Ok(a),
        }
    }

    /// Skips validation in release builds; callers promise associativity.
    pub fn new_unchecked(field: Field, basis_names: Vec<String>, table: Vec<Scalar>) -> Algebra {
        let dim = basis_names.len();
        debug_assert_eq!(table.len(), dim * dim * dim);
        let a = Algebra {
            field,
            dim,
            basis_names,
            table,
        };
        debug_assert!(a.associativity_violations().is_empty(), "not associative");
        a
    }

    /// No checks at all; enumeration probes associativity after the fact.
    pub(crate) fn candidate(field: Field, basis_names: Vec<String>, table: Vec<Scalar>) -> Algebra {
        Algebra {
            field,
            dim: basis_names.len(),
            basis_names,
            table,
        }
    }

    /// The zero-multiplication algebra of the given dimension.
    pub fn zero_mult(field: Field, dim: usize) -> Algebra {
        Algebra {
            field,
            dim,
            basis_names: (0..dim).map(|i| format!("z{i}")).collect(),
            table: vec![field.zero(); dim * dim * dim],
        }
    }

    /// The full matrix algebra M_n on the matrix-unit basis e_{rc},
    /// multiplication e_{ab} e_{cd} = [b == c] e_{ad}.
    pub fn matrix_units(field: Field, n: usize) -> Algebra {
        let dim = n * n;
        let names = (0..n)
            .flat_map(|r| (0..n).map(move |c| format!("e{}{}", r + 1, c + 1)))
            .collect();
        let mut table = vec![field.zero(); dim * dim * dim];
        for a in 0..n {
            for b in 0..n {
                for d in 0..n {
                    let i = a * n + b;
                    let j = b * n + d;
                    let k = a * n + d;
                    table[(i * dim + j) * dim + k] = field.one();
                }
            }
        }
        Algebra {
            field,
            dim,
            basis_names: names,
            table,
        }
    }

    /// The opposite algebra: same space, reversed multiplication.
    pub fn opposite(&self) -> Algebra {
        let dim = self.dim;
        let mut table = vec![self.field.zero(); dim * dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    table[(i * dim + j) * dim + k] = self.structure_constant(j, i, k).clone();
                }
            }
        }
        Algebra {
            field: self.field,
            dim,
            basis_names: self.basis_names.clone(),
            table,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.table[(i * self.dim + j) * self.dim + k]
    }

    /// The coordinate vector of e_i * e_j.
    pub fn product_of_basis(&self, i: usize, j: usize) -> &[Scalar] {
        let base = (i * self.dim + j) * self.dim;
        &self.table[base..base + self.dim]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    /// Bilinear product of coordinate vectors.
    pub fn multiply(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(u.len(), self.dim);
        assert_eq!(v.len(), self.dim);
        let f = self.field;
        let mut out = vec![f.zero(); self.dim];
        for i in 0..self.dim {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if v[j].is_zero() {
                    continue;
                }
                let uv = f.mul(&u[i], &v[j]);
                let prod = self.product_of_basis(i, j);
                for k in 0..self.dim {
                    if prod[k].is_zero() {
                        continue;
                    }
                    out[k] = f.add_mul(&out[k], &uv, &prod[k]);
                }
            }
        }
        out
    }

    /// All basis triples where (e_i e_j) e_k differs from e_i (e_j e_k).
    pub fn associativity_violations(&self) -> Vec<(usize, usize, usize)> {
        let f = self.field;
        let d = self.dim;
        let mut out = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    for l in 0..d {
                        // lhs_l = sum_m c[i][j][m] c[m][k][l]
                        let mut lhs = f.zero();
                        let mut rhs = f.zero();
                        for m in 0..d {
                            let cij = self.structure_constant(i, j, m);
                            if !cij.is_zero() {
                                lhs = f.add_mul(&lhs, cij, self.structure_constant(m, k, l));
                            }
                            let cjk = self.structure_constant(j, k, m);
                            if !cjk.is_zero() {
                                rhs = f.add_mul(&rhs, cjk, self.structure_constant(i, m, l));
                            }
                        }
                        if lhs != rhs {
                            out.push((i, j, k));
                            break;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_violations().is_empty()
    }

    pub fn is_commutative(&self) -> bool {
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                if self.product_of_basis(i, j) != self.product_of_basis(j, i) {
                    return false;
                }
            }
        }
        true
    }

    /// The matrix of x |-> e_i * x in the standard basis.
    pub fn left_mult_matrix(&self, i: usize) -> Matrix {
        Matrix::from_fn(self.field, self.dim, self.dim, |k, j| {
            self.structure_constant(i, j, k).clone()
        })
    }

    /// The matrix of x |-> x * e_i.
    pub fn right_mult_matrix(&self, i: usize) -> Matrix {
        Matrix::from_fn(self.field, self.dim, self.dim, |k, j| {
            self.structure_constant(j, i, k).clone()
        })
    }

    /// Smallest two-sided ideal containing the given spanning rows. Closes
    /// under left and right multiplication by basis elements until the
    /// dimension stops growing (at most dim rounds).
    pub fn ideal_closure(&self, spanning_rows: &Matrix) -> Subspace {
        assert_eq!(spanning_rows.cols(), self.dim);
        let mut current = spanning_rows.rref();
        loop {
            let mut rows: Vec<Vec<Scalar>> = current.matrix.row_vecs();
            rows.truncate(current.rank());
            let before = current.rank();
            let mut extended = rows.clone();
            for r in &rows {
                for i in 0..self.dim {
                    extended.push(self.multiply(&self.basis_vector(i), r));
                    extended.push(self.multiply(r, &self.basis_vector(i)));
                }
            }
            let m = Matrix::from_rows(self.field, extended, self.dim)
                .expect("closure rows are well formed");
            current = m.rref();
            if current.rank() == before {
                return Subspace {
                    ambient: self.clone(),
                    basis: current,
                };
            }
        }
    }

    /// The commutator ideal R(A): the ideal generated by all uv - vu.
    pub fn commutator_ideal(&self) -> Subspace {
        let mut rows = Vec::new();
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                let ij = self.product_of_basis(i, j);
                let ji = self.product_of_basis(j, i);
                let row: Vec<Scalar> = ij
                    .iter()
                    .zip(ji)
                    .map(|(a, b)| self.field.sub(a, b))
                    .collect();
                rows.push(row);
            }
        }
        let m = Matrix::from_rows(self.field, rows, self.dim).expect("commutator rows");
        self.ideal_closure(&m)
    }

    /// Quotient by a two-sided ideal. The quotient basis is the canonical
    /// complement (non-pivot coordinates of the ideal's RREF basis); returns
    /// the quotient algebra and the projection.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(Algebra, AlgebraHom)> {
        assert!(std::ptr::eq(self, ideal.ambient()) || *self == ideal.ambient, "quotient by a subspace of a different algebra");
        if let Some((index, row)) = ideal.first_ideal_violation() {
            return Err(Error::NotAnIdeal { index, row });
        }
        let f = self.field;
        let mut is_pivot = vec![false; self.dim];
        for &p in &ideal.basis.pivots {
            is_pivot[p] = true;
        }
        let complement: Vec<usize> = (0..self.dim).filter(|&c| !is_pivot[c]).collect();
        let qdim = complement.len();
        let class_coords = |v: &[Scalar]| -> Vec<Scalar> {
            let red = reduce_mod_rows(&ideal.basis, v);
            complement.iter().map(|&c| red[c].clone()).collect()
        };
        let mut table = Vec::with_capacity(qdim * qdim * qdim);
        for &i in &complement {
            for &j in &complement {
                table.extend(class_coords(self.product_of_basis(i, j)));
            }
        }
        let names = complement
            .iter()
            .map(|&c| self.basis_names[c].clone())
            .collect();
        let q = Algebra::new_unchecked(f, names, table);
        let proj = Matrix::from_fn(f, qdim, self.dim, |r, c| {
            class_coords(&self.basis_vector(c))[r].clone()
        });
        let hom = AlgebraHom::new_unchecked(self.clone(), q.clone(), proj);
        Ok((q, hom))
    }

    /// The reflection of A into commutative algebras: Comm(A) = A / R(A)
    /// with its unit eta.
    pub fn comm_reflection(&self) -> CommReflection {
        let commutator = self.commutator_ideal();
        let (quotient, unit) = self
            .quotient(&commutator)
            .expect("commutator ideal is an ideal");
        debug_assert!(quotient.is_commutative());
        CommReflection {
            commutator,
            quotient,
            unit,
        }
    }

    /// The largest ideal contained in the commuting centre (elements that
    /// commute with all of A) or the annihilating centre (elements killed by
    /// multiplication on both sides), per `mode`.
    pub fn largest_central_ideal(&self, mode: CentreMode) -> Subspace {
        let f = self.field;
        let d = self.dim;
        // Linear conditions cutting out the centre itself.
        let mut blocks: Vec<Matrix> = Vec::new();
        for i in 0..d {
            let l = self.left_mult_matrix(i);
            let r = self.right_mult_matrix(i);
            match mode {
                CentreMode::Commuting => blocks.push(l.sub(&r)),
                CentreMode::Annihilating => {
                    blocks.push(l);
                    blocks.push(r);
                }
            }
        }
        let stacked = blocks
            .into_iter()
            .fold(Matrix::zeros(f, 0, d), |acc, b| acc.vstack(&b));
        let mut current = stacked.kernel_basis().rref();
        // Shrink to the largest ideal inside the centre: keep the vectors
        // whose basis multiples stay inside, repeat until stable.
        loop {
            let k = current.rank();
            if k == 0 {
                break;
            }
            let rows: Vec<&[Scalar]> = (0..k).map(|r| current.matrix.row(r)).collect();
            let mut cond_rows: Vec<Vec<Scalar>> = Vec::new();
            for i in 0..d {
                let e = self.basis_vector(i);
                for side in 0..2 {
                    // cond matrix: d x k, column s = reduce(e_i * b_s) resp. b_s * e_i
                    let cols: Vec<Vec<Scalar>> = rows
                        .iter()
                        .map(|b| {
                            let prod = if side == 0 {
                                self.multiply(&e, b)
                            } else {
                                self.multiply(b, &e)
                            };
                            reduce_mod_rows(&current, &prod)
                        })
                        .collect();
                    for coord in 0..d {
                        cond_rows.push(cols.iter().map(|c| c[coord].clone()).collect());
                    }
                }
            }
            let cond = Matrix::from_rows(f, cond_rows, k).expect("condition rows");
            let t = cond.kernel_basis();
            if t.rows() == k {
                break; // everything survived: stable
            }
            let basis_matrix = Matrix::from_rows(
                f,
                (0..k).map(|r| current.matrix.row(r).to_vec()).collect(),
                d,
            )
            .expect("basis rows");
            let next = t.mul(&basis_matrix);
            current = next.rref();
        }
        let sub = Subspace {
            ambient: self.clone(),
            basis: current,
        };
        debug_assert!(sub.is_ideal());
        sub
    }
}

/// The commutative reflection Comm(A) together with R(A) and the unit map.
#[derive(Debug, Clone)]
pub struct CommReflection {
    pub commutator: Subspace,
    pub quotient: Algebra,
    pub unit: AlgebraHom,
}

/// A linear subspace of an algebra, stored as an RREF row basis. The RREF
/// normal form makes equal subspaces structurally equal.
#[derive(Debug, Clone)]
pub struct Subspace {
    ambient: Algebra,
    basis: Rref,
}

impl Subspace {
    /// Span of the given rows (not closed under anything).
    pub fn from_spanning(ambient: &Algebra, rows: &Matrix) -> Subspace {
        assert_eq!(rows.cols(), ambient.dim());
        Subspace {
            ambient: ambient.clone(),
            basis: rows.rref(),
        }
    }

    pub fn zero(ambient: &Algebra) -> Subspace {
        Subspace::from_spanning(ambient, &Matrix::zeros(ambient.field(), 0, ambient.dim()))
    }

    pub fn full(ambient: &Algebra) -> Subspace {
        Subspace::from_spanning(ambient, &Matrix::identity(ambient.field(), ambient.dim()))
    }

    pub fn ambient(&self) -> &Algebra {
        &self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rank()
    }

    /// The RREF basis, one row per basis vector (rank rows, no zero rows).
    pub fn basis_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim()).map(|r| self.basis.matrix.row(r).to_vec()).collect()
    }

    pub fn rref(&self) -> &Rref {
        &self.basis
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        row_span_contains(&self.basis, v)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis_rows().iter().all(|r| self.contains(r))
    }

    /// Structural equality of subspaces via the RREF normal form.
    pub fn same_subspace(&self, other: &Subspace) -> bool {
        self.dim() == other.dim() && self.contains_subspace(other)
    }

    fn first_ideal_violation(&self) -> Option<(usize, usize)> {
        let a = &self.ambient;
        for (row, b) in self.basis_rows().iter().enumerate() {
            for i in 0..a.dim() {
                let e = a.basis_vector(i);
                if !self.contains(&a.multiply(&e, b)) || !self.contains(&a.multiply(b, &e)) {
                    return Some((i, row));
                }
            }
        }
        None
    }

    pub fn is_ideal(&self) -> bool {
        self.first_ideal_violation().is_none()
    }
}

/// Presents the span of `basis` (an RREF of rows inside `ambient`) as an
/// algebra in its own right, with products re-expressed in the row basis.
/// Errors with `NotClosed` if two basis rows multiply outside the span.
pub fn subalgebra_presentation(ambient: &Algebra, basis: &Rref, prefix: &str) -> Result<Algebra> {
    let f = ambient.field();
    let k = basis.rank();
    let rows: Vec<&[Scalar]> = (0..k).map(|r| basis.matrix.row(r)).collect();
    let mut table = Vec::with_capacity(k * k * k);
    for (s, u) in rows.iter().enumerate() {
        for (t, v) in rows.iter().enumerate() {
            let w = ambient.multiply(u, v);
            match coords_in_rows(basis, &w) {
                Some(coords) => table.extend(coords),
                None => return Err(Error::NotClosed(s, t)),
            }
        }
    }
    let names = (0..k).map(|i| format!("{prefix}{i}")).collect();
    Ok(Algebra::new_unchecked(f, names, table))
}

/// A homomorphism of algebras, stored as its matrix in the standard bases
/// (target dim x source dim; column j is the image of source basis j).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraHom {
    source: Algebra,
    target: Algebra,
    matrix: Matrix,
}

impl AlgebraHom {
    pub fn new(source: Algebra, target: Algebra, matrix: Matrix) -> Result<AlgebraHom> {
        if source.field() != target.field() || matrix.field() != source.field() {
            return Err(Error::FieldMismatch(source.field(), target.field()));
        }
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::DimensionMismatch(format!(
                "hom matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.dim(),
                source.dim()
            )));
        }
        let h = AlgebraHom {
            source,
            target,
            matrix,
        };
        match h.multiplicativity_violations().first() {
            Some(&(i, j)) => Err(Error::NotMultiplicative(i, j)),
            None => Ok(h),
        }
    }

    pub fn new_unchecked(source: Algebra, target: Algebra, matrix: Matrix) -> AlgebraHom {
        debug_assert_eq!(matrix.rows(), target.dim());
        debug_assert_eq!(matrix.cols(), source.dim());
        let h = AlgebraHom {
            source,
            target,
            matrix,
        };
        debug_assert!(
            h.multiplicativity_violations().is_empty(),
            "not multiplicative"
        );
        h
    }

    pub fn identity(a: &Algebra) -> AlgebraHom {
        AlgebraHom {
            source: a.clone(),
            target: a.clone(),
            matrix: Matrix::identity(a.field(), a.dim()),
        }
    }

    pub fn zero(source: &Algebra, target: &Algebra) -> AlgebraHom {
        assert_eq!(source.field(), target.field());
        AlgebraHom {
            source: source.clone(),
            target: target.clone(),
            matrix: Matrix::zeros(source.field(), target.dim(), source.dim()),
        }
    }

    pub fn source(&self) -> &Algebra {
        &self.source
    }

    pub fn target(&self) -> &Algebra {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// Basis pairs where f(e_i e_j) != f(e_i) f(e_j).
    pub fn multiplicativity_violations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.source.dim() {
            for j in 0..self.source.dim() {
                let lhs = self.matrix.mul_vec(self.source.product_of_basis(i, j));
                let rhs = self
                    .target
                    .multiply(&self.matrix.col(i), &self.matrix.col(j));
                if lhs != rhs {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.matrix.mul_vec(v)
    }

    /// Composition next ∘ self (self first). The intermediate algebras must
    /// agree as presentations (same field, dimension, table).
    pub fn then(&self, next: &AlgebraHom) -> AlgebraHom {
        assert_eq!(self.target.field(), next.source.field());
        assert_eq!(self.target.dim(), next.source.dim(), "composition mismatch");
        debug_assert_eq!(self.target.table, next.source.table, "composition mismatch");
        AlgebraHom {
            source: self.source.clone(),
            target: next.target.clone(),
            matrix: next.matrix.mul(&self.matrix),
        }
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }

    pub fn is_bijective(&self) -> bool {
        self.source.dim() == self.target.dim() && self.is_injective()
    }

    /// The kernel as a subspace of the source (always an ideal).
    pub fn kernel(&self) -> Subspace {
        let sub = Subspace::from_spanning(&self.source, &self.matrix.kernel_basis());
        debug_assert!(sub.is_ideal());
        sub
    }

    /// Factors self through its image subalgebra.
    pub fn image(&self) -> Result<ImageFactorization> {
        let f = self.source.field();
        let col_rows = self.matrix.transpose();
        let basis = col_rows.rref();
        let algebra = subalgebra_presentation(&self.target, &basis, "im")?;
        let k = basis.rank();
        // corestriction: coords of f(e_j) in the image basis
        let core = Matrix::from_fn(f, k, self.source.dim(), |r, c| {
            coords_in_rows(&basis, &self.matrix.col(c)).expect("image contains its columns")[r]
                .clone()
        });
        let incl = Matrix::from_fn(f, self.target.dim(), k, |r, c| basis.matrix[(c, r)].clone());
        let subspace = Subspace {
            ambient: self.target.clone(),
            basis,
        };
        Ok(ImageFactorization {
            corestriction: AlgebraHom::new_unchecked(self.source.clone(), algebra.clone(), core),
            inclusion: AlgebraHom::new_unchecked(algebra.clone(), self.target.clone(), incl),
            algebra,
            subspace,
        })
    }

    /// The induced map Comm(source) -> Comm(target) on commutative
    /// reflections. Well-defined because homomorphisms carry commutators to
    /// commutators; asserted at runtime.
    pub fn comm_induced(&self) -> AlgebraHom {
        let src = self.source.comm_reflection();
        let tgt = self.target.comm_reflection();
        for row in src.commutator.basis_rows() {
            assert!(
                tgt.commutator.contains(&self.apply(&row)),
                "commutator ideal not preserved"
            );
        }
        let m = Matrix::from_fn(
            self.source.field(),
            tgt.quotient.dim(),
            src.quotient.dim(),
            |r, c| {
                // image of the c-th quotient basis class: push a preimage
                // through f and project. Quotient basis classes come from the
                // complement coordinates, recoverable from the unit matrix.
                let pre = preimage_of_class(&src.unit, c);
                tgt.unit.apply(&self.apply(&pre))[r].clone()
            },
        );
        AlgebraHom::new_unchecked(src.quotient, tgt.quotient, m)
    }
}

/// A canonical preimage of the i-th basis class of a quotient projection.
/// The projection arises from `Algebra::quotient`, whose classes are indexed
/// by complement coordinates: the standard basis vector at the matching
/// ambient index projects onto the class.
fn preimage_of_class(proj: &AlgebraHom, class_index: usize) -> Vec<Scalar> {
    let m = proj.matrix();
    for c in 0..m.cols() {
        let col = m.col(c);
        let ok = col
            .iter()
            .enumerate()
            .all(|(r, s)| (r == class_index && s.is_one()) || (r != class_index && s.is_zero()));
        if ok {
            let mut v = vec![proj.source().field().zero(); m.cols()];
            v[c] = proj.source().field().one();
            return v;
        }
    }
    panic!("projection has no unit column for class {class_index}");
}

/// A hom factored through its image: source ->> image algebra >-> target.
#[derive(Debug, Clone)]
pub struct ImageFactorization {
    pub subspace: Subspace,
    pub algebra: Algebra,
    pub corestriction: AlgebraHom,
    pub inclusion: AlgebraHom,
}

/// A x B with componentwise multiplication, plus its projections and the
/// canonical injections (which are algebra maps here since products of an
/// element with the other factor vanish... they land in complementary
/// ideals).
#[derive(Debug, Clone)]
pub struct DirectProduct {
    pub algebra: Algebra,
    pub proj_left: AlgebraHom,
    pub proj_right: AlgebraHom,
    pub inj_left: AlgebraHom,
    pub inj_right: AlgebraHom,
}

/// Componentwise product algebra.
pub fn direct_product(a: &Algebra, b: &Algebra) -> Result<DirectProduct> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch(a.field(), b.field()));
    }
    let f = a.field();
    let (na, nb) = (a.dim(), b.dim());
    let dim = na + nb;
    let mut names: Vec<String> = a.basis_names().to_vec();
    for n in b.basis_names() {
        let mut candidate = n.clone();
        while names.contains(&candidate) {
            candidate.push('\'');
        }
        names.push(candidate);
    }
    let mut table = vec![f.zero(); dim * dim * dim];
    for i in 0..na {
        for j in 0..na {
            for k in 0..na {
                table[(i * dim + j) * dim + k] = a.structure_constant(i, j, k).clone();
            }
        }
    }
    for i in 0..nb {
        for j in 0..nb {
            for k in 0..nb {
                table[((na + i) * dim + (na + j)) * dim + (na + k)] =
                    b.structure_constant(i, j, k).clone();
            }
        }
    }
    let p = Algebra::new_unchecked(f, names, table);
    let proj_left = Matrix::from_fn(f, na, dim, |r, c| {
        if c == r {
            f.one()
        } else {
            f.zero()
        }
    });
    let proj_right = Matrix::from_fn(f, nb, dim, |r, c| {
        if c == na + r {
            f.one()
        } else {
            f.zero()
        }
    });
    let inj_left = Matrix::from_fn(f, dim, na, |r, c| {
        if r == c {
            f.one()
        } else {
            f.zero()
        }
    });
    let inj_right = Matrix::from_fn(f, dim, nb, |r, c| {
        if r == na + c {
            f.one()
        } else {
            f.zero()
        }
    });
    Ok(DirectProduct {
        proj_left: AlgebraHom::new_unchecked(p.clone(), a.clone(), proj_left),
        proj_right: AlgebraHom::new_unchecked(p.clone(), b.clone(), proj_right),
        inj_left: AlgebraHom::new_unchecked(a.clone(), p.clone(), inj_left),
        inj_right: AlgebraHom::new_unchecked(b.clone(), p.clone(), inj_right),
        algebra: p,
    })
}

/// The pullback A x_C B of f: A -> C and g: B -> C, presented on the
/// canonical basis of the subalgebra {(a, b) : f(a) = g(b)} of A x B.
/// `carrier` is that basis as RREF rows in the A (+) B coordinates, kept so
/// callers can express further elements of the pullback in its basis.
#[derive(Debug, Clone)]
pub struct Pullback {
    pub algebra: Algebra,
    pub to_left: AlgebraHom,
    pub to_right: AlgebraHom,
    pub carrier: Rref,
}

pub fn pullback(f: &AlgebraHom, g: &AlgebraHom) -> Result<Pullback> {
    if f.target().field() != g.target().field()
        || f.target().dim() != g.target().dim()
        || f.target().table != g.target().table
    {
        return Err(Error::DimensionMismatch(
            "pullback legs have different codomains".into(),
        ));
    }
    let field = f.source().field();
    let prod = direct_product(f.source(), g.source())?;
    let constraint = f.matrix().hstack(&g.matrix().neg());
    let carrier = constraint.kernel_basis().rref();
    let algebra = subalgebra_presentation(&prod.algebra, &carrier, "p").map_err(|e| {
        Error::Internal(format!("pullback carrier not multiplicatively closed: {e}"))
    })?;
    let (na, k) = (f.source().dim(), carrier.rank());
    let to_left = Matrix::from_fn(field, na, k, |r, c| carrier.matrix[(c, r)].clone());
    let to_right = Matrix::from_fn(field, g.source().dim(), k, |r, c| {
        carrier.matrix[(c, na + r)].clone()
    });
    Ok(Pullback {
        to_left: AlgebraHom::new_unchecked(algebra.clone(), f.source().clone(), to_left),
        to_right: AlgebraHom::new_unchecked(algebra.clone(), g.source().clone(), to_right),
        algebra,
        carrier,
    })
}
