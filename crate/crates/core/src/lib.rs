//! Actions, split extensions, and central extensions of non-unital
//! associative algebras over exact fields.

pub mod actor;
pub mod algebra;
pub mod central;
pub mod enumerate;
pub mod error;
pub mod extension;
pub mod field;
pub mod format;
pub mod matrix;
pub mod verify;

pub use actor::{
    accessify, acting_morphism, action_from_hom, end_algebra, endo_pair_algebra, is_faithful,
    weak_actor, ActorTarget, WeakActor,
};
pub use central::{
    algebraically_central, annihilator_central, categorically_central, centrality_agreement,
    classically_central, is_pullback_square, lemma31_report, pullback_stability, thm33_report,
    CentralityCheck, CentralityReport, Lemma31Report, PullbackStability, Thm33Report,
};

pub use algebra::{
    direct_product, pullback, Algebra, AlgebraHom, CentreMode, CommReflection, DirectProduct,
    ImageFactorization, Pullback, Subspace,
};
pub use enumerate::{all_homs, enumerate_algebras, surjective_homs};
pub use error::{Error, Result};
pub use extension::{
    complete_morphism, enumerate_actions, extract_action, induced_action, semidirect, Action,
    ExtMorphism, SplitExtension,
};
pub use field::{Field, Scalar};
pub use matrix::{Matrix, Rref};
pub use verify::{verify_corpus, CheckOutcome, CorpusSpec, Counterexample, VerifyReport};
