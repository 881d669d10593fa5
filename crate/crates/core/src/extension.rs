//! Actions of one algebra on another, semidirect products, split extensions,
//! and the translations between them.
//!
//! An action of B on X is a pair of linear families l, r: B -> End(X) where
//! l is a homomorphism, r is an antihomomorphism, and the four mixed
//! identities hold for all b, b' in B and x, x' in X:
//!
//!   b(xb') = (bx)b'    b(xx') = (bx)x'    x(bx') = (xb)x'    x(x'b) = (xx')b
//!
//! Exactly these make the semidirect product (b, x)(b', x') =
//! (bb', bx' + xb' + xx') associative. A split extension is the abstract
//! counterpart: alpha: A -> B with a section beta and kernel kappa: X -> A;
//! `extract_action` and `semidirect` convert back and forth.

use std::fmt;

use crate::algebra::{Algebra, AlgebraHom, Subspace};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::Matrix;

/// An action of `base` on `space`: left operators l_i and right operators
/// r_i, one per basis element of the base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Action {
    base: Algebra,
    space: Algebra,
    left: Vec<Matrix>,
    right: Vec<Matrix>,
}

/// A failed action axiom, by the basis indices that break it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ActionViolation {
    /// l(b_i b_j) != l(b_i) l(b_j)
    LeftNotHom(usize, usize),
    /// r(b_i b_j) != r(b_j) r(b_i)
    RightNotAntihom(usize, usize),
    /// b_i (x b_j) != (b_i x) b_j
    MixedOuter(usize, usize),
    /// b_i (x_s x_t) != (b_i x_s) x_t
    LeftOverProduct(usize, usize, usize),
    /// x_s (b_i x_t) != (x_s b_i) x_t
    MiddleOverProduct(usize, usize, usize),
    /// x_s (x_t b_i) != (x_s x_t) b_i
    RightOverProduct(usize, usize, usize),
}

impl fmt::Display for ActionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ActionViolation::LeftNotHom(i, j) => {
                write!(f, "l(b{i} b{j}) != l(b{i}) l(b{j})")
            }
            ActionViolation::RightNotAntihom(i, j) => {
                write!(f, "r(b{i} b{j}) != r(b{j}) r(b{i})")
            }
            ActionViolation::MixedOuter(i, j) => {
                write!(f, "b{i} (x b{j}) != (b{i} x) b{j}")
            }
            ActionViolation::LeftOverProduct(i, s, t) => {
                write!(f, "b{i} (x{s} x{t}) != (b{i} x{s}) x{t}")
            }
            ActionViolation::MiddleOverProduct(s, i, t) => {
                write!(f, "x{s} (b{i} x{t}) != (x{s} b{i}) x{t}")
            }
            ActionViolation::RightOverProduct(s, t, i) => {
                write!(f, "x{s} (x{t} b{i}) != (x{s} x{t}) b{i}")
            }
        }
    }
}

impl Action {
    pub fn new(
        base: Algebra,
        space: Algebra,
        left: Vec<Matrix>,
        right: Vec<Matrix>,
    ) -> Result<Action> {
        if base.field() != space.field() {
            return Err(Error::FieldMismatch(base.field(), space.field()));
        }
        let (n, m) = (base.dim(), space.dim());
        if left.len() != n || right.len() != n {
            return Err(Error::InvalidAction(format!(
                "expected {n} left and right operators, got {} and {}",
                left.len(),
                right.len()
            )));
        }
        for op in left.iter().chain(&right) {
            if op.rows() != m || op.cols() != m || op.field() != space.field() {
                return Err(Error::InvalidAction(format!(
                    "operators must be {m}x{m} over {}",
                    space.field()
                )));
            }
        }
        let a = Action {
            base,
            space,
            left,
            right,
        };
        match a.violations().first() {
            Some(v) => Err(Error::InvalidAction(v.to_string())),
            None => Ok(a),
        }
    }

    pub fn new_unchecked(
        base: Algebra,
        space: Algebra,
        left: Vec<Matrix>,
        right: Vec<Matrix>,
    ) -> Action {
        let a = Action {
            base,
            space,
            left,
            right,
        };
        debug_assert!(a.violations().is_empty(), "invalid action");
        a
    }

    /// Internal constructor for enumeration candidates that have passed the
    /// one-sided filters but not yet the mixed ones.
    fn candidate(base: &Algebra, space: &Algebra, left: Vec<Matrix>, right: Vec<Matrix>) -> Action {
        Action {
            base: base.clone(),
            space: space.clone(),
            left,
            right,
        }
    }

    /// The zero action (all operators zero); valid for any pair.
    pub fn zero(base: &Algebra, space: &Algebra) -> Action {
        assert_eq!(base.field(), space.field());
        let z = Matrix::zeros(space.field(), space.dim(), space.dim());
        Action {
            base: base.clone(),
            space: space.clone(),
            left: vec![z.clone(); base.dim()],
            right: vec![z; base.dim()],
        }
    }

    pub fn base(&self) -> &Algebra {
        &self.base
    }

    pub fn space(&self) -> &Algebra {
        &self.space
    }

    pub fn left(&self) -> &[Matrix] {
        &self.left
    }

    pub fn right(&self) -> &[Matrix] {
        &self.right
    }

    /// l(v) for an arbitrary base vector v.
    pub fn left_operator(&self, v: &[Scalar]) -> Matrix {
        linear_combination(self.space.field(), self.space.dim(), &self.left, v)
    }

    pub fn right_operator(&self, v: &[Scalar]) -> Matrix {
        linear_combination(self.space.field(), self.space.dim(), &self.right, v)
    }

    /// All axiom violations, in a deterministic order.
    pub fn violations(&self) -> Vec<ActionViolation> {
        let mut out = self.one_sided_left_violations();
        out.extend(self.one_sided_right_violations());
        out.extend(self.mixed_violations());
        out
    }

    pub fn is_valid(&self) -> bool {
        self.violations().is_empty()
    }

    /// l = r as operator families. (Whether the space is commutative is a
    /// separate question; see the symmetric-action conditions.)
    pub fn is_symmetric(&self) -> bool {
        self.left == self.right
    }

    /// Violations that only involve the left family: l multiplicative and
    /// b(xx') = (bx)x'.
    fn one_sided_left_violations(&self) -> Vec<ActionViolation> {
        let n = self.base.dim();
        let m = self.space.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let lhs = self.left_operator(self.base.product_of_basis(i, j));
                let rhs = self.left[i].mul(&self.left[j]);
                if lhs != rhs {
                    out.push(ActionViolation::LeftNotHom(i, j));
                }
            }
        }
        for i in 0..n {
            for s in 0..m {
                for t in 0..m {
                    let lhs = self.left[i].mul_vec(self.space.product_of_basis(s, t));
                    let bx = self.left[i].col(s);
                    let rhs = self.space.multiply(&bx, &self.space.basis_vector(t));
                    if lhs != rhs {
                        out.push(ActionViolation::LeftOverProduct(i, s, t));
                    }
                }
            }
        }
        out
    }

    /// Violations that only involve the right family: r antimultiplicative
    /// and x(x'b) = (xx')b.
    fn one_sided_right_violations(&self) -> Vec<ActionViolation> {
        let n = self.base.dim();
        let m = self.space.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let lhs = self.right_operator(self.base.product_of_basis(i, j));
                let rhs = self.right[j].mul(&self.right[i]);
                if lhs != rhs {
                    out.push(ActionViolation::RightNotAntihom(i, j));
                }
            }
        }
        for i in 0..n {
            for s in 0..m {
                for t in 0..m {
                    let xb = self.right[i].col(t);
                    let lhs = self.space.multiply(&self.space.basis_vector(s), &xb);
                    let rhs = self.right[i].mul_vec(self.space.product_of_basis(s, t));
                    if lhs != rhs {
                        out.push(ActionViolation::RightOverProduct(s, t, i));
                    }
                }
            }
        }
        out
    }

    /// Violations mixing the two families.
    fn mixed_violations(&self) -> Vec<ActionViolation> {
        let n = self.base.dim();
        let m = self.space.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                // b_i (x b_j) = (b_i x) b_j for all x reduces to l_i r_j = r_j l_i
                if self.left[i].mul(&self.right[j]) != self.right[j].mul(&self.left[i]) {
                    out.push(ActionViolation::MixedOuter(i, j));
                }
            }
        }
        for s in 0..m {
            for i in 0..n {
                for t in 0..m {
                    let bx = self.left[i].col(t);
                    let lhs = self.space.multiply(&self.space.basis_vector(s), &bx);
                    let xb = self.right[i].col(s);
                    let rhs = self.space.multiply(&xb, &self.space.basis_vector(t));
                    if lhs != rhs {
                        out.push(ActionViolation::MiddleOverProduct(s, i, t));
                    }
                }
            }
        }
        out
    }
}

fn linear_combination(field: Field, m: usize, mats: &[Matrix], v: &[Scalar]) -> Matrix {
    assert_eq!(mats.len(), v.len());
    let mut out = Matrix::zeros(field, m, m);
    for (c, mat) in v.iter().zip(mats) {
        if c.is_zero() {
            continue;
        }
        for r in 0..m {
            for s in 0..m {
                let val = field.add_mul(&out[(r, s)], c, &mat[(r, s)]);
                out[(r, s)] = val;
            }
        }
    }
    out
}

/// A split extension: alpha: A -> B with section beta and kernel kappa,
/// so alpha . beta = 1_B and kappa embeds X as ker(alpha).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitExtension {
    alpha: AlgebraHom,
    beta: AlgebraHom,
    kappa: AlgebraHom,
}

/// A failed split-extension law.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtensionViolation {
    /// beta must go B -> A.
    SectionShape,
    /// kappa must go X -> A.
    KernelShape,
    /// alpha . beta != 1_B.
    NotASection,
    /// kappa has a nonzero kernel.
    KernelNotInjective,
    /// im(kappa) != ker(alpha).
    ImageNotKernel,
    /// dim A != dim B + dim X.
    DimensionsDontAdd,
}

impl fmt::Display for ExtensionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            ExtensionViolation::SectionShape => "section does not go from base to total",
            ExtensionViolation::KernelShape => "kernel map does not go from kernel to total",
            ExtensionViolation::NotASection => "alpha . beta is not the identity on the base",
            ExtensionViolation::KernelNotInjective => "kernel map is not injective",
            ExtensionViolation::ImageNotKernel => "image of kappa differs from kernel of alpha",
            ExtensionViolation::DimensionsDontAdd => "dim(total) != dim(base) + dim(kernel)",
        };
        f.write_str(msg)
    }
}

impl SplitExtension {
    /// Builds from the three structure maps; the algebras ride along inside
    /// the homs (total = source of alpha, base = target of alpha, kernel =
    /// source of kappa).
    pub fn new(alpha: AlgebraHom, beta: AlgebraHom, kappa: AlgebraHom) -> Result<SplitExtension> {
        let e = SplitExtension { alpha, beta, kappa };
        match e.violations().first() {
            Some(v) => Err(Error::InvalidExtension(v.to_string())),
            None => Ok(e),
        }
    }

    pub fn new_unchecked(
        alpha: AlgebraHom,
        beta: AlgebraHom,
        kappa: AlgebraHom,
    ) -> SplitExtension {
        let e = SplitExtension { alpha, beta, kappa };
        debug_assert!(e.violations().is_empty(), "invalid split extension");
        e
    }

    pub fn violations(&self) -> Vec<ExtensionViolation> {
        let mut out = Vec::new();
        let total = self.alpha.source();
        let base = self.alpha.target();
        if self.beta.source() != base || self.beta.target() != total {
            out.push(ExtensionViolation::SectionShape);
            return out;
        }
        if self.kappa.target() != total {
            out.push(ExtensionViolation::KernelShape);
            return out;
        }
        if total.dim() != base.dim() + self.kappa.source().dim() {
            out.push(ExtensionViolation::DimensionsDontAdd);
        }
        let composite = self.beta.then(&self.alpha);
        if composite.matrix() != &Matrix::identity(base.field(), base.dim()) {
            out.push(ExtensionViolation::NotASection);
        }
        if !self.kappa.is_injective() {
            out.push(ExtensionViolation::KernelNotInjective);
        }
        let image = Subspace::from_spanning(total, &self.kappa.matrix().transpose());
        let kernel = self.alpha.kernel();
        if !image.same_subspace(&kernel) {
            out.push(ExtensionViolation::ImageNotKernel);
        }
        out
    }

    pub fn total(&self) -> &Algebra {
        self.alpha.source()
    }

    pub fn base(&self) -> &Algebra {
        self.alpha.target()
    }

    pub fn kernel_algebra(&self) -> &Algebra {
        self.kappa.source()
    }

    pub fn alpha(&self) -> &AlgebraHom {
        &self.alpha
    }

    pub fn beta(&self) -> &AlgebraHom {
        &self.beta
    }

    pub fn kappa(&self) -> &AlgebraHom {
        &self.kappa
    }

    /// The linear retraction sigma: A -> X with kappa . sigma = 1 - beta .
    /// alpha (and sigma . kappa = 1_X). Unique because kappa is injective.
    pub fn kernel_retraction(&self) -> Matrix {
        let total = self.total();
        let f = total.field();
        let m = self.kernel_algebra().dim();
        Matrix::from_fn(f, m, total.dim(), |r, c| {
            let e = basis_vec(f, total.dim(), c);
            let back = self.beta.apply(&self.alpha.apply(&e));
            let v: Vec<Scalar> = e.iter().zip(&back).map(|(a, b)| f.sub(a, b)).collect();
            self.kappa
                .matrix()
                .solve(&v)
                .expect("1 - beta alpha lands in the kernel image")[r]
                .clone()
        })
    }
}

fn basis_vec(field: Field, dim: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); dim];
    v[i] = field.one();
    v
}

/// The semidirect product of a valid action: carrier B + X with
/// (b, x)(b', x') = (bb', bx' + xb' + xx'), base coordinates first.
pub fn semidirect(act: &Action) -> SplitExtension {
    let b = act.base();
    let x = act.space();
    let f = b.field();
    let (n, m) = (b.dim(), x.dim());
    let dim = n + m;
    let mut names: Vec<String> = b.basis_names().to_vec();
    for name in x.basis_names() {
        let mut candidate = name.clone();
        while names.contains(&candidate) {
            candidate.push('\'');
        }
        names.push(candidate);
    }
    let mut table = vec![f.zero(); dim * dim * dim];
    let mut set = |i: usize, j: usize, k: usize, v: Scalar| {
        table[(i * dim + j) * dim + k] = v;
    };
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                set(i, j, k, b.structure_constant(i, j, k).clone());
            }
        }
    }
    for i in 0..n {
        for t in 0..m {
            for k in 0..m {
                set(i, n + t, n + k, act.left()[i][(k, t)].clone());
                set(n + t, i, n + k, act.right()[i][(k, t)].clone());
            }
        }
    }
    for s in 0..m {
        for t in 0..m {
            for k in 0..m {
                set(n + s, n + t, n + k, x.structure_constant(s, t, k).clone());
            }
        }
    }
    let a = Algebra::new_unchecked(f, names, table);
    let alpha = Matrix::from_fn(f, n, dim, |r, c| if c == r { f.one() } else { f.zero() });
    let beta = Matrix::from_fn(f, dim, n, |r, c| if r == c { f.one() } else { f.zero() });
    let kappa = Matrix::from_fn(f, dim, m, |r, c| {
        if r == n + c {
            f.one()
        } else {
            f.zero()
        }
    });
    SplitExtension::new_unchecked(
        AlgebraHom::new_unchecked(a.clone(), b.clone(), alpha),
        AlgebraHom::new_unchecked(b.clone(), a.clone(), beta),
        AlgebraHom::new_unchecked(x.clone(), a, kappa),
    )
}

/// Reads the action of the base on the kernel off a split extension:
/// kappa(l(b) x) = beta(b) kappa(x) and kappa(r(b) x) = kappa(x) beta(b).
pub fn extract_action(e: &SplitExtension) -> Action {
    let total = e.total();
    let b = e.base();
    let x = e.kernel_algebra();
    let f = total.field();
    let (n, m) = (b.dim(), x.dim());
    let operator = |i: usize, on_left: bool| -> Matrix {
        let lifted = e.beta().apply(&basis_vec(f, n, i));
        Matrix::from_fn(f, m, m, |r, t| {
            let xt = e.kappa().apply(&basis_vec(f, m, t));
            let w = if on_left {
                total.multiply(&lifted, &xt)
            } else {
                total.multiply(&xt, &lifted)
            };
            e.kappa()
                .matrix()
                .solve(&w)
                .expect("products with kernel elements stay in the kernel")[r]
                .clone()
        })
    };
    let left = (0..n).map(|i| operator(i, true)).collect();
    let right = (0..n).map(|i| operator(i, false)).collect();
    Action::new_unchecked(b.clone(), x.clone(), left, right)
}

/// A morphism of split extensions: f on totals, g on bases, h on kernels,
/// with alpha' f = g alpha, f beta = beta' g, f kappa = kappa' h.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtMorphism {
    pub f: AlgebraHom,
    pub g: AlgebraHom,
    pub h: AlgebraHom,
}

/// A failed morphism square.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MorphismViolation {
    WrongEnds,
    AlphaSquare,
    BetaSquare,
    KappaSquare,
}

impl fmt::Display for MorphismViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            MorphismViolation::WrongEnds => "component maps do not match the two extensions",
            MorphismViolation::AlphaSquare => "alpha' f != g alpha",
            MorphismViolation::BetaSquare => "f beta != beta' g",
            MorphismViolation::KappaSquare => "f kappa != kappa' h",
        };
        f.write_str(msg)
    }
}

impl ExtMorphism {
    pub fn violations(&self, from: &SplitExtension, to: &SplitExtension) -> Vec<MorphismViolation> {
        let mut out = Vec::new();
        if self.f.source() != from.total()
            || self.f.target() != to.total()
            || self.g.source() != from.base()
            || self.g.target() != to.base()
            || self.h.source() != from.kernel_algebra()
            || self.h.target() != to.kernel_algebra()
        {
            out.push(MorphismViolation::WrongEnds);
            return out;
        }
        if self.f.then(to.alpha()).matrix() != from.alpha().then(&self.g).matrix() {
            out.push(MorphismViolation::AlphaSquare);
        }
        if from.beta().then(&self.f).matrix() != self.g.then(to.beta()).matrix() {
            out.push(MorphismViolation::BetaSquare);
        }
        if from.kappa().then(&self.f).matrix() != self.h.then(to.kappa()).matrix() {
            out.push(MorphismViolation::KappaSquare);
        }
        out
    }
}

/// Tries to fill in the total-algebra component over g and h: the unique
/// linear candidate is f = kappa' h sigma + beta' g alpha, which satisfies
/// all three squares by construction; it is a morphism exactly when it is
/// multiplicative. Returns `None` when it is not.
pub fn complete_morphism(
    g: &AlgebraHom,
    h: &AlgebraHom,
    from: &SplitExtension,
    to: &SplitExtension,
) -> Option<ExtMorphism> {
    assert_eq!(g.source(), from.base(), "g must start at the base of `from`");
    assert_eq!(g.target(), to.base(), "g must land in the base of `to`");
    assert_eq!(h.source(), from.kernel_algebra());
    assert_eq!(h.target(), to.kernel_algebra());
    let sigma = from.kernel_retraction();
    let through_kernel = to.kappa().matrix().mul(&h.matrix().mul(&sigma));
    let through_base = to.beta().matrix().mul(&g.matrix().mul(from.alpha().matrix()));
    let f_matrix = through_kernel.add(&through_base);
    match AlgebraHom::new(from.total().clone(), to.total().clone(), f_matrix) {
        Ok(f) => {
            let m = ExtMorphism {
                f,
                g: g.clone(),
                h: h.clone(),
            };
            debug_assert!(m.violations(from, to).is_empty());
            Some(m)
        }
        Err(Error::NotMultiplicative(..)) => None,
        Err(e) => unreachable!("completion candidate is well shaped: {e}"),
    }
}

/// Pushes an action of B on X forward along a surjection g: B -> B'. Exists
/// exactly when ker(g) acts by zero on both sides; errors otherwise.
pub fn induced_action(act: &Action, g: &AlgebraHom) -> Result<Action> {
    assert_eq!(g.source(), act.base(), "g must start at the acting algebra");
    if !g.is_surjective() {
        return Err(Error::NotSurjective {
            rank: g.rank(),
            dim: g.target().dim(),
        });
    }
    for row in g.kernel().basis_rows() {
        if !act.left_operator(&row).is_zero() || !act.right_operator(&row).is_zero() {
            return Err(Error::NoFactorization(
                "kernel of the surjection does not act by zero".into(),
            ));
        }
    }
    let target = g.target().clone();
    let n = target.dim();
    let f = target.field();
    let lift = |i: usize| -> Vec<Scalar> {
        g.matrix()
            .solve(&basis_vec(f, n, i))
            .expect("surjection has preimages")
    };
    let left = (0..n).map(|i| act.left_operator(&lift(i))).collect();
    let right = (0..n).map(|i| act.right_operator(&lift(i))).collect();
    Ok(Action::new_unchecked(
        target,
        act.space().clone(),
        left,
        right,
    ))
}

/// Walks all digit vectors of length `len` over 0..p in lexicographic order.
pub(crate) struct Odometer {
    digits: Vec<u64>,
    p: u64,
    fresh: bool,
    done: bool,
}

impl Odometer {
    pub(crate) fn new(p: u64, len: usize) -> Odometer {
        Odometer {
            digits: vec![0; len],
            p,
            fresh: true,
            done: false,
        }
    }
}

impl Iterator for Odometer {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        if self.done {
            return None;
        }
        if self.fresh {
            self.fresh = false;
            return Some(self.digits.clone());
        }
        for d in self.digits.iter_mut().rev() {
            if *d + 1 < self.p {
                *d += 1;
                return Some(self.digits.clone());
            }
            *d = 0;
        }
        self.done = true;
        None
    }
}

pub(crate) fn checked_power(p: u64, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(p as u128);
    }
    acc
}

/// Enumerates every action of `base` on `space` over F_p, in lexicographic
/// order of the concatenated operator entries (left family first). The
/// nominal candidate space p^(2 n m^2) must fit the budget. Internally the
/// two families are filtered separately through their one-sided axioms, so
/// the walk touches far fewer candidates than the bound suggests.
pub fn enumerate_actions(base: &Algebra, space: &Algebra, budget: u64) -> Result<Vec<Action>> {
    assert_eq!(base.field(), space.field());
    let f = base.field();
    let Field::Prime { p } = f else {
        return Err(Error::InfiniteField(f));
    };
    let (n, m) = (base.dim(), space.dim());
    let candidates = checked_power(p, 2 * n * m * m);
    if candidates > budget as u128 {
        return Err(Error::BudgetExceeded {
            what: format!("actions of a {n}-dim algebra on a {m}-dim algebra over F_{p}"),
            candidates,
            budget,
        });
    }
    let family = |digits: &[u64]| -> Vec<Matrix> {
        (0..n)
            .map(|i| {
                Matrix::from_fn(f, m, m, |r, c| {
                    Scalar::Prime(digits[i * m * m + r * m + c])
                })
            })
            .collect()
    };
    let mut lefts = Vec::new();
    let mut rights = Vec::new();
    for digits in Odometer::new(p, n * m * m) {
        let fam = family(&digits);
        let probe = Action::candidate(base, space, fam.clone(), vec![Matrix::zeros(f, m, m); n]);
        if probe.one_sided_left_violations().is_empty() {
            lefts.push(fam.clone());
        }
        let probe = Action::candidate(base, space, vec![Matrix::zeros(f, m, m); n], fam.clone());
        if probe.one_sided_right_violations().is_empty() {
            rights.push(fam);
        }
    }
    let mut out = Vec::new();
    for l in &lefts {
        for r in &rights {
            let candidate = Action::candidate(base, space, l.clone(), r.clone());
            if candidate.mixed_violations().is_empty() {
                out.push(candidate);
            }
        }
    }
    Ok(out)
}
