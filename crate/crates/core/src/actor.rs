//! The weak-representation machinery: the target M = End(X) x End(X)^op,
//! the weak actor [X] inside it, acting morphisms <l, r>, faithfulness, and
//! the accessibility construction that maps any split extension onto a
//! faithful one.

use crate::algebra::{direct_product, subalgebra_presentation, Algebra, AlgebraHom, Subspace};
use crate::error::{Error, Result};
use crate::extension::{
    complete_morphism, extract_action, induced_action, semidirect, Action, ExtMorphism,
    SplitExtension,
};
use crate::field::Scalar;
use crate::matrix::Matrix;

/// End_K(X) as a structure-constant algebra on the matrix-unit basis
/// (composition as multiplication).
pub fn end_algebra(x: &Algebra) -> Algebra {
    Algebra::matrix_units(x.field(), x.dim())
}

/// The canonical target M = End_K(X) x End_K(X)^op that every action of
/// anything on X maps into. Coordinates: the first dim(X)^2 entries are the
/// left component's matrix units row-major, the rest the right component's.
#[derive(Debug, Clone)]
pub struct ActorTarget {
    space: Algebra,
    algebra: Algebra,
    endo_dim: usize,
}

impl ActorTarget {
    pub fn new(x: &Algebra) -> ActorTarget {
        let end = end_algebra(x);
        let product = direct_product(&end, &end.opposite()).expect("same field");
        ActorTarget {
            space: x.clone(),
            algebra: product.algebra,
            endo_dim: x.dim() * x.dim(),
        }
    }

    pub fn space(&self) -> &Algebra {
        &self.space
    }

    /// M itself, of dimension 2 dim(X)^2.
    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn endo_dim(&self) -> usize {
        self.endo_dim
    }

    /// Flattens an endomorphism pair into M coordinates.
    pub fn embed_pair(&self, phi: &Matrix, psi: &Matrix) -> Vec<Scalar> {
        let m = self.space.dim();
        assert_eq!((phi.rows(), phi.cols()), (m, m));
        assert_eq!((psi.rows(), psi.cols()), (m, m));
        let mut v = Vec::with_capacity(2 * self.endo_dim);
        for mat in [phi, psi] {
            for r in 0..m {
                v.extend(mat.row(r).iter().cloned());
            }
        }
        v
    }

    /// Reads an endomorphism pair back out of M coordinates.
    pub fn split_pair(&self, v: &[Scalar]) -> (Matrix, Matrix) {
        assert_eq!(v.len(), 2 * self.endo_dim);
        let m = self.space.dim();
        let f = self.space.field();
        let phi = Matrix::from_fn(f, m, m, |r, c| v[r * m + c].clone());
        let psi = Matrix::from_fn(f, m, m, |r, c| v[self.endo_dim + r * m + c].clone());
        (phi, psi)
    }
}

/// Spec'd alias for the target construction.
pub fn endo_pair_algebra(x: &Algebra) -> ActorTarget {
    ActorTarget::new(x)
}

/// The weak actor [X]: all (phi, psi) in M with x phi(x') = psi(x) x' for
/// all x, x' in X, presented as a subalgebra of M.
#[derive(Debug, Clone)]
pub struct WeakActor {
    pub target: ActorTarget,
    pub subspace: Subspace,
    pub algebra: Algebra,
}

/// Solves the defining linear system of [X] and presents the solution space
/// as an algebra. Closure under M's multiplication is a theorem; a closure
/// failure therefore reports an implementation bug.
pub fn weak_actor(x: &Algebra) -> Result<WeakActor> {
    let target = ActorTarget::new(x);
    let f = x.field();
    let m = x.dim();
    let e2 = target.endo_dim();
    // Row per (s, t, k): sum_u c[s][u][k] phi_{u t} - sum_u c[u][t][k] psi_{u s} = 0
    let mut rows = Vec::with_capacity(m * m * m);
    for s in 0..m {
        for t in 0..m {
            for k in 0..m {
                let mut row = vec![f.zero(); 2 * e2];
                for u in 0..m {
                    row[u * m + t] = x.structure_constant(s, u, k).clone();
                    row[e2 + u * m + s] = f.neg(x.structure_constant(u, t, k));
                }
                rows.push(row);
            }
        }
    }
    let system = Matrix::from_rows(f, rows, 2 * e2).expect("weak actor system rows");
    let basis = system.kernel_basis().rref();
    let algebra = subalgebra_presentation(target.algebra(), &basis, "w").map_err(|e| {
        Error::TheoremViolation(format!("weak actor is not multiplicatively closed: {e}"))
    })?;
    let subspace = Subspace::from_spanning(target.algebra(), &basis.matrix);
    Ok(WeakActor {
        target,
        subspace,
        algebra,
    })
}

/// The acting morphism of an action: b |-> (l(b), r(b)) as a map B -> M.
pub fn acting_morphism(act: &Action) -> AlgebraHom {
    let target = ActorTarget::new(act.space());
    let b = act.base();
    let matrix = Matrix::from_fn(
        b.field(),
        2 * target.endo_dim(),
        b.dim(),
        |r, c| target.embed_pair(&act.left()[c], &act.right()[c])[r].clone(),
    );
    AlgebraHom::new_unchecked(b.clone(), target.algebra().clone(), matrix)
}

/// Reads an action off a homomorphism B -> M by splitting each image column
/// into an endomorphism pair. Errors when the pairs do not satisfy the
/// action axioms against X's multiplication.
pub fn action_from_hom(xi: &AlgebraHom, x: &Algebra) -> Result<Action> {
    let target = ActorTarget::new(x);
    if xi.target() != target.algebra() {
        return Err(Error::DimensionMismatch(
            "homomorphism does not land in End(X) x End(X)^op".into(),
        ));
    }
    let b = xi.source().clone();
    let mut left = Vec::with_capacity(b.dim());
    let mut right = Vec::with_capacity(b.dim());
    for i in 0..b.dim() {
        let (phi, psi) = target.split_pair(&xi.matrix().col(i));
        left.push(phi);
        right.push(psi);
    }
    Action::new(b, x.clone(), left, right)
}

/// An action is faithful when its acting morphism is injective.
pub fn is_faithful(act: &Action) -> bool {
    acting_morphism(act).is_injective()
}

/// Quotients a split extension onto a faithful one: g kills the kernel of
/// the acting morphism, the action descends, and the identity on X lifts to
/// a morphism of extensions (f, g, 1_X).
pub fn accessify(e: &SplitExtension) -> Result<(ExtMorphism, SplitExtension)> {
    let act = extract_action(e);
    let mu = acting_morphism(&act);
    let kernel = mu.kernel();
    let (_, g) = act.base().quotient(&kernel)?;
    let descended = induced_action(&act, &g)?;
    debug_assert!(is_faithful(&descended));
    let faithful_ext = semidirect(&descended);
    let h = AlgebraHom::identity(e.kernel_algebra());
    let morphism = complete_morphism(&g, &h, e, &faithful_ext).ok_or_else(|| {
        Error::TheoremViolation("canonical completion onto the faithful quotient failed".into())
    })?;
    Ok((morphism, faithful_ext))
}
