//! The three notions of central extension and the equivalence theorems that
//! tie them together.
//!
//! For a surjective alpha: A -> B:
//!
//! * classic: aa' = a'a whenever alpha(a') = 0; checked on basis elements
//!   against a kernel basis, which suffices by bilinearity.
//! * algebraic: for parallel u, v with alpha u = alpha v the commutator
//!   ideals satisfy R(u) = R(v). Any such pair factors through the kernel
//!   pair (u = pi1 w, v = pi2 w), and R is functorial, so agreement of pi1
//!   and pi2 on R(A x_B A) is necessary and sufficient; that instance is
//!   what gets checked.
//! * categorical: the naturality square of the commutative-reflection unit
//!   at a kernel-pair projection is a pullback.
//!
//! A fourth, strictly stronger flavour replaces aa' = a'a by aa' = 0 = a'a
//! (the annihilator variant); it implies the classic notion but not
//! conversely.

use serde::Serialize;

use crate::algebra::{pullback, AlgebraHom};
use crate::error::{Error, Result};
use crate::extension::{
    complete_morphism, extract_action, induced_action, semidirect, SplitExtension,
};
use crate::matrix::coords_in_rows;

/// Outcome of a witnessed centrality check. Witness pairs are (ambient basis
/// index, kernel basis row index) of a failing product comparison.
#[derive(Debug, Clone, Serialize)]
pub struct CentralityCheck {
    pub holds: bool,
    pub witnesses: Vec<(usize, usize)>,
}

fn require_surjective(alpha: &AlgebraHom) -> Result<()> {
    if !alpha.is_surjective() {
        return Err(Error::NotSurjective {
            rank: alpha.rank(),
            dim: alpha.target().dim(),
        });
    }
    Ok(())
}

/// aa' = a'a for all a' in ker(alpha).
pub fn classically_central(alpha: &AlgebraHom) -> Result<CentralityCheck> {
    require_surjective(alpha)?;
    let a = alpha.source();
    let kernel = alpha.kernel();
    let mut witnesses = Vec::new();
    for (s, k) in kernel.basis_rows().iter().enumerate() {
        for i in 0..a.dim() {
            let e = a.basis_vector(i);
            if a.multiply(&e, k) != a.multiply(k, &e) {
                witnesses.push((i, s));
            }
        }
    }
    Ok(CentralityCheck {
        holds: witnesses.is_empty(),
        witnesses,
    })
}

/// aa' = 0 = a'a for all a' in ker(alpha): the annihilator variant.
pub fn annihilator_central(alpha: &AlgebraHom) -> Result<CentralityCheck> {
    require_surjective(alpha)?;
    let a = alpha.source();
    let kernel = alpha.kernel();
    let mut witnesses = Vec::new();
    for (s, k) in kernel.basis_rows().iter().enumerate() {
        for i in 0..a.dim() {
            let e = a.basis_vector(i);
            let left = a.multiply(&e, k);
            let right = a.multiply(k, &e);
            if left.iter().any(|c| !c.is_zero()) || right.iter().any(|c| !c.is_zero()) {
                witnesses.push((i, s));
            }
        }
    }
    Ok(CentralityCheck {
        holds: witnesses.is_empty(),
        witnesses,
    })
}

/// The kernel-pair projections agree on the commutator ideal of A x_B A.
pub fn algebraically_central(alpha: &AlgebraHom) -> Result<bool> {
    require_surjective(alpha)?;
    let pair = pullback(alpha, alpha)?;
    let commutators = pair.algebra.commutator_ideal();
    for row in commutators.basis_rows() {
        if pair.to_left.apply(&row) != pair.to_right.apply(&row) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether the commuting square
///
/// ```text
///        p
///    P ------> Q
///    |         |
///  f |         | q
///    v         v
///    A ------> C
///        eta
/// ```
///
/// is a pullback: the induced map P -> A x_C Q must be bijective.
pub fn is_pullback_square(
    f: &AlgebraHom,
    p: &AlgebraHom,
    eta: &AlgebraHom,
    q: &AlgebraHom,
) -> Result<bool> {
    assert_eq!(f.source(), p.source(), "square corners disagree at P");
    assert_eq!(eta.source(), f.target(), "square corners disagree at A");
    assert_eq!(q.source(), p.target(), "square corners disagree at Q");
    assert_eq!(eta.target(), q.target(), "square corners disagree at C");
    if f.then(eta).matrix() != p.then(q).matrix() {
        return Err(Error::SquareNotCommuting);
    }
    let w = pullback(eta, q)?;
    let dim_p = f.source().dim();
    if w.algebra.dim() != dim_p {
        return Ok(false);
    }
    // induced map P -> W, column per basis vector of P
    let mut columns = Vec::with_capacity(dim_p);
    for i in 0..dim_p {
        let mut v = f.matrix().col(i);
        v.extend(p.matrix().col(i));
        let coords = coords_in_rows(&w.carrier, &v)
            .expect("commuting square factors through the pullback");
        columns.push(coords);
    }
    let induced = crate::matrix::Matrix::from_fn(
        f.source().field(),
        dim_p,
        dim_p,
        |r, c| columns[c][r].clone(),
    );
    Ok(induced.rank() == dim_p)
}

/// Definition 1.1(c): the unit's naturality square at a kernel-pair
/// projection is a pullback.
pub fn categorically_central(alpha: &AlgebraHom) -> Result<bool> {
    require_surjective(alpha)?;
    let pair = pullback(alpha, alpha)?;
    let projection = &pair.to_left;
    let refl_pair = pair.algebra.comm_reflection();
    let refl_a = alpha.source().comm_reflection();
    let comm_projection = projection.comm_induced();
    is_pullback_square(projection, &refl_pair.unit, &refl_a.unit, &comm_projection)
}

/// All four centrality verdicts for one surjection, cross-checked.
#[derive(Debug, Clone, Serialize)]
pub struct CentralityReport {
    pub classic: bool,
    pub algebraic: bool,
    pub categorical: bool,
    pub annihilator: bool,
    pub classic_witnesses: Vec<(usize, usize)>,
    pub annihilator_witnesses: Vec<(usize, usize)>,
}

/// Runs all four checks and enforces the equivalences: classic, algebraic,
/// and categorical must agree (three-way equivalence), and the annihilator
/// variant must imply the classic one. Disagreement is an implementation
/// bug, reported as `TheoremViolation`.
pub fn centrality_agreement(alpha: &AlgebraHom) -> Result<CentralityReport> {
    let classic = classically_central(alpha)?;
    let algebraic = algebraically_central(alpha)?;
    let categorical = categorically_central(alpha)?;
    let annihilator = annihilator_central(alpha)?;
    if classic.holds != algebraic || classic.holds != categorical {
        return Err(Error::TheoremViolation(format!(
            "centrality notions disagree: classic {}, algebraic {}, categorical {}",
            classic.holds, algebraic, categorical
        )));
    }
    if annihilator.holds && !classic.holds {
        return Err(Error::TheoremViolation(
            "annihilator-central extension that is not classically central".into(),
        ));
    }
    Ok(CentralityReport {
        classic: classic.holds,
        algebraic,
        categorical,
        annihilator: annihilator.holds,
        classic_witnesses: classic.witnesses,
        annihilator_witnesses: annihilator.witnesses,
    })
}

/// Lemma 3.2 on one pullback square: centrality descends along pullbacks,
/// and ascends when the comparison map is surjective.
#[derive(Debug, Clone, Serialize)]
pub struct PullbackStability {
    /// alpha' (the leg being pulled back) is classically central.
    pub original_central: bool,
    /// the pulled-back projection is classically central.
    pub pulled_central: bool,
    pub g_surjective: bool,
}

impl PullbackStability {
    /// If alpha' is central then so is its pullback.
    pub fn descent_holds(&self) -> bool {
        !self.original_central || self.pulled_central
    }

    /// If the pullback is central and g is surjective, alpha' was central.
    pub fn ascent_holds(&self) -> bool {
        !self.g_surjective || !self.pulled_central || self.original_central
    }

    pub fn holds(&self) -> bool {
        self.descent_holds() && self.ascent_holds()
    }
}

/// Builds the pullback of alpha' along g and compares centrality of alpha'
/// with centrality of the pulled-back projection onto g's source.
pub fn pullback_stability(alpha_prime: &AlgebraHom, g: &AlgebraHom) -> Result<PullbackStability> {
    require_surjective(alpha_prime)?;
    let square = pullback(alpha_prime, g)?;
    debug_assert!(square.to_right.is_surjective());
    let original = classically_central(alpha_prime)?;
    let pulled = classically_central(&square.to_right)?;
    Ok(PullbackStability {
        original_central: original.holds,
        pulled_central: pulled.holds,
        g_surjective: g.is_surjective(),
    })
}

/// The seven equivalent conditions of the symmetric-action lemma, evaluated
/// independently on one split extension.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Lemma31Report {
    /// alpha is classically central.
    pub a: bool,
    /// every a in A commutes with every kernel element.
    pub b: bool,
    /// (b, x)(0, x') = (0, x')(b, x) in the semidirect presentation.
    pub c: bool,
    /// X is commutative and the action is symmetric.
    pub d: bool,
    /// (d) and l kills the commutator ideal of B (factors through eta_B).
    pub e: bool,
    /// (d) and the action descends along eta_B to a symmetric action.
    pub f: bool,
    /// (f) and the semidirect product over Comm(B) is commutative.
    pub g: bool,
}

impl Lemma31Report {
    pub fn flags(&self) -> [bool; 7] {
        [self.a, self.b, self.c, self.d, self.e, self.f, self.g]
    }

    pub fn unanimous(&self) -> bool {
        let all = self.flags();
        all.iter().all(|&x| x == all[0])
    }
}

/// Commutation of the whole algebra with the embedded kernel, checked on
/// basis elements.
fn kernel_commutes(e: &SplitExtension) -> bool {
    let total = e.total();
    for t in 0..e.kernel_algebra().dim() {
        let kx = e.kappa().matrix().col(t);
        for i in 0..total.dim() {
            let a = total.basis_vector(i);
            if total.multiply(&a, &kx) != total.multiply(&kx, &a) {
                return false;
            }
        }
    }
    true
}

pub fn lemma31_report(e: &SplitExtension) -> Lemma31Report {
    let act = extract_action(e);
    let a = classically_central(e.alpha())
        .expect("alpha of a split extension is surjective")
        .holds;
    let b = kernel_commutes(e);
    let c = kernel_commutes(&semidirect(&act));
    let d = act.space().is_commutative() && act.is_symmetric();
    let refl = act.base().comm_reflection();
    let e_flag = d
        && refl
            .commutator
            .basis_rows()
            .iter()
            .all(|row| act.left_operator(row).is_zero());
    let descended = induced_action(&act, &refl.unit).ok();
    let f = d && matches!(&descended, Some(ind) if ind.is_symmetric());
    let g = f
        && semidirect(descended.as_ref().expect("f implies the action descended"))
            .total()
            .is_commutative();
    Lemma31Report {
        a,
        b,
        c,
        d,
        e: e_flag,
        f,
        g,
    }
}

/// The five equivalent conditions of the central-extension theorem.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Thm33Report {
    /// alpha is classically central.
    pub a: bool,
    /// (a) and the extension maps onto the induced extension over Comm(B)
    /// through (f, eta_B, 1_X).
    pub b: bool,
    /// the unit naturality square at alpha is a pullback.
    pub c: bool,
    /// a pullback presentation over commutative algebras exists; decided by
    /// the canonical candidate (c), which the theorem makes equivalent.
    pub d: bool,
    /// (d) with every map in the square surjective.
    pub e: bool,
}

impl Thm33Report {
    pub fn flags(&self) -> [bool; 5] {
        [self.a, self.b, self.c, self.d, self.e]
    }

    pub fn unanimous(&self) -> bool {
        let all = self.flags();
        all.iter().all(|&x| x == all[0])
    }
}

pub fn thm33_report(e: &SplitExtension) -> Thm33Report {
    let act = extract_action(e);
    let a = classically_central(e.alpha())
        .expect("alpha of a split extension is surjective")
        .holds;
    let refl_b = act.base().comm_reflection();
    let b = a && act.space().is_commutative() && {
        match induced_action(&act, &refl_b.unit) {
            Ok(ind) if ind.is_symmetric() => {
                let target = semidirect(&ind);
                let h = AlgebraHom::identity(e.kernel_algebra());
                complete_morphism(&refl_b.unit, &h, e, &target).is_some()
            }
            _ => false,
        }
    };
    let refl_a = e.total().comm_reflection();
    let comm_alpha = e.alpha().comm_induced();
    let c = is_pullback_square(e.alpha(), &refl_a.unit, &refl_b.unit, &comm_alpha)
        .expect("unit naturality square commutes");
    let d = c;
    let e_flag = c
        && e.alpha().is_surjective()
        && refl_a.unit.is_surjective()
        && refl_b.unit.is_surjective()
        && comm_alpha.is_surjective();
    Thm33Report {
        a,
        b,
        c,
        d,
        e: e_flag,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::extension::Action;
    use crate::field::Field;
    use crate::matrix::Matrix;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    fn sparse(
        field: Field,
        names: &[&str],
        entries: &[(usize, usize, &[(usize, i64)])],
    ) -> Algebra {
        let dim = names.len();
        let mut table = vec![field.zero(); dim * dim * dim];
        for &(i, j, terms) in entries {
            for &(k, v) in terms {
                table[(i * dim + j) * dim + k] = field.from_i64(v);
            }
        }
        Algebra::new(field, names.iter().map(|s| s.to_string()).collect(), table).unwrap()
    }

    fn idem1() -> Algebra {
        sparse(f2(), &["b"], &[(0, 0, &[(0, 1)])])
    }

    fn zero1() -> Algebra {
        sparse(f2(), &["t"], &[])
    }

    fn mat1(v: i64) -> Matrix {
        Matrix::from_rows(f2(), vec![vec![f2().from_i64(v)]], 1).unwrap()
    }

    fn e1_extension() -> SplitExtension {
        semidirect(&Action::new(idem1(), zero1(), vec![mat1(1)], vec![mat1(1)]).unwrap())
    }

    fn e2_extension() -> SplitExtension {
        semidirect(&Action::new(idem1(), zero1(), vec![mat1(1)], vec![mat1(0)]).unwrap())
    }

    #[test]
    fn classic_centrality_of_the_two_examples() {
        let c1 = classically_central(e1_extension().alpha()).unwrap();
        assert!(c1.holds);
        assert!(c1.witnesses.is_empty());
        let c2 = classically_central(e2_extension().alpha()).unwrap();
        assert!(!c2.holds);
        // witness: u (index 0) against the kernel vector t
        assert_eq!(c2.witnesses, vec![(0, 0)]);
    }

    #[test]
    fn annihilator_is_strictly_stronger() {
        let e1 = e1_extension();
        let classic = classically_central(e1.alpha()).unwrap();
        let annih = annihilator_central(e1.alpha()).unwrap();
        assert!(classic.holds);
        assert!(!annih.holds); // u t = t != 0
        assert_eq!(annih.witnesses, vec![(0, 0)]);
        // zero action on zero-multiplication kernel: annihilator-central
        let z = semidirect(&Action::zero(&idem1(), &zero1()));
        assert!(annihilator_central(z.alpha()).unwrap().holds);
    }

    #[test]
    fn surjectivity_is_required() {
        let b = idem1();
        let incl = AlgebraHom::zero(&zero1(), &b);
        assert!(matches!(
            classically_central(&incl),
            Err(Error::NotSurjective { .. })
        ));
    }

    #[test]
    fn algebraic_centrality_matches_classic_on_examples() {
        assert!(algebraically_central(e1_extension().alpha()).unwrap());
        assert!(!algebraically_central(e2_extension().alpha()).unwrap());
    }

    #[test]
    fn categorical_centrality_matches_classic_on_examples() {
        assert!(categorically_central(e1_extension().alpha()).unwrap());
        assert!(!categorically_central(e2_extension().alpha()).unwrap());
    }

    #[test]
    fn bijections_are_central_every_way() {
        let b = idem1();
        let id = AlgebraHom::identity(&b);
        let report = centrality_agreement(&id).unwrap();
        assert!(report.classic && report.algebraic && report.categorical && report.annihilator);
    }

    #[test]
    fn agreement_reports_for_examples() {
        let r1 = centrality_agreement(e1_extension().alpha()).unwrap();
        assert!(r1.classic && r1.algebraic && r1.categorical && !r1.annihilator);
        let r2 = centrality_agreement(e2_extension().alpha()).unwrap();
        assert!(!r2.classic && !r2.algebraic && !r2.categorical && !r2.annihilator);
    }

    #[test]
    fn pullback_square_smoke() {
        // With p and q identities the corners force eta . f = id, and the
        // square is a pullback exactly when f is bijective.
        let ext = e2_extension();
        let (beta, alpha) = (ext.beta(), ext.alpha());
        let id_b = AlgebraHom::identity(ext.base());
        assert!(!is_pullback_square(beta, &id_b, alpha, &id_b).unwrap());
        let id_a = AlgebraHom::identity(ext.total());
        assert!(is_pullback_square(&id_a, &id_a, &id_a, &id_a).unwrap());
        // non-commuting square errors out
        let zero = AlgebraHom::zero(ext.total(), ext.base());
        assert!(matches!(
            is_pullback_square(beta, &id_b, &zero, &id_b),
            Err(Error::SquareNotCommuting)
        ));
    }

    #[test]
    fn lemma31_unanimity_on_named_examples() {
        let r1 = lemma31_report(&e1_extension());
        assert!(r1.unanimous());
        assert!(r1.a);
        let r2 = lemma31_report(&e2_extension());
        assert!(r2.unanimous());
        assert!(!r2.a);
        // zero action with commutative kernel: direct product, all true
        let z = semidirect(&Action::zero(&idem1(), &zero1()));
        let rz = lemma31_report(&z);
        assert!(rz.unanimous() && rz.a);
    }

    #[test]
    fn thm33_unanimity_on_named_examples() {
        let r1 = thm33_report(&e1_extension());
        assert!(r1.unanimous());
        assert!(r1.a);
        let r2 = thm33_report(&e2_extension());
        assert!(r2.unanimous());
        assert!(!r2.a);
        // identity-shaped extension: X = 0
        let b = idem1();
        let trivial = semidirect(&Action::zero(&b, &Algebra::zero_mult(f2(), 0)));
        let rt = thm33_report(&trivial);
        assert!(rt.unanimous() && rt.a);
    }

    #[test]
    fn lemma32_stability_on_squares() {
        // central leg, non-surjective g: descent must hold
        let e1 = e1_extension();
        let g = AlgebraHom::zero(&idem1(), e1.base());
        let s = pullback_stability(e1.alpha(), &g).unwrap();
        assert!(s.original_central && s.pulled_central && !s.g_surjective);
        assert!(s.holds());
        // non-central leg, surjective g = id: both sides false, lemma holds
        let e2 = e2_extension();
        let s2 = pullback_stability(e2.alpha(), &AlgebraHom::identity(e2.base())).unwrap();
        assert!(!s2.original_central && !s2.pulled_central && s2.g_surjective);
        assert!(s2.holds());
    }
}
