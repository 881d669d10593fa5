//! The corpus verification driver. Builds a corpus of small algebras over
//! F_p (exhaustive enumeration up to a dimension bound plus curated files),
//! then grinds every theorem battery over every applicable configuration:
//! centrality agreement on all surjective homomorphisms, action round
//! trips, flag unanimity, weak actor containment, transport of actions
//! along surjections, completion criteria, accessibility, and pullback
//! stability. Aggregation is order independent, so reports are identical
//! across thread counts.

use std::collections::{BTreeMap, HashSet};
use std::path::PathBuf;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::actor::{accessify, acting_morphism, action_from_hom, is_faithful, weak_actor, WeakActor};
use crate::algebra::{Algebra, AlgebraHom, Subspace};
use crate::central::{
    algebraically_central, annihilator_central, categorically_central, classically_central,
    lemma31_report, pullback_stability, thm33_report,
};
use crate::enumerate::{all_homs, enumerate_algebras, surjective_homs};
use crate::error::{Error, Result};
use crate::extension::{
    checked_power, complete_morphism, extract_action, induced_action, semidirect, Action,
    SplitExtension,
};
use crate::extension::enumerate_actions;
use crate::field::Field;
use crate::format::{action_to_json, extension_to_json, hom_to_json, parse_file, Parsed};
use crate::matrix::Matrix;

/// Homomorphism tally into weak actor presentations stays cheap regardless
/// of the main budget.
const WEAK_HOM_CAP: u64 = 4096;

/// What to verify and how hard to try.
#[derive(Debug, Clone)]
pub struct CorpusSpec {
    pub prime: u64,
    /// Every algebra of dimension <= max_dim over F_p joins the corpus.
    pub max_dim: usize,
    /// Extra algebra files, included after the enumerated slice.
    pub curated: Vec<PathBuf>,
    /// Cap on candidate enumerations (tables, matrices, operator families).
    pub budget: u64,
    /// Seed for the sampled fallback of surjective hom enumeration.
    pub seed: u64,
    /// Worker threads; None uses the global default.
    pub jobs: Option<usize>,
}

impl CorpusSpec {
    pub fn new(prime: u64, max_dim: usize) -> CorpusSpec {
        CorpusSpec {
            prime,
            max_dim,
            curated: Vec::new(),
            budget: 1_000_000,
            seed: 0,
            jobs: None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub case: u64,
    pub description: String,
    pub witness: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub cases: u64,
    pub passed: u64,
    pub first_counterexample: Option<Counterexample>,
}

impl CheckOutcome {
    pub fn ok(&self) -> bool {
        self.cases == self.passed && self.first_counterexample.is_none()
    }
}

/// Informational comparison of action counts against plain homomorphism
/// counts into the weak actor, over the pairs where both fit the cap.
#[derive(Debug, Clone, Copy, Default, Serialize)]
pub struct WeakActorTally {
    pub pairs: u64,
    pub actions: u64,
    pub homs: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub prime: u64,
    pub max_dim: usize,
    pub budget: u64,
    pub seed: u64,
    pub corpus_size: usize,
    pub checks: Vec<CheckOutcome>,
    /// Surjections whose kernel commutes with everything but is not
    /// annihilated by everything; strictness witnesses for the two notions.
    pub classic_without_annihilator: u64,
    pub weak_actor_tally: WeakActorTally,
    pub ok: bool,
    /// Excluded from the canonical serialization so reports compare equal
    /// across runs.
    #[serde(skip)]
    pub wall_seconds: f64,
}

impl VerifyReport {
    /// Canonical machine form; wall time deliberately absent.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn render_human(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "corpus: p={} max_dim={} budget={} seed={} ({} algebras)\n",
            self.prime, self.max_dim, self.budget, self.seed, self.corpus_size
        ));
        for c in &self.checks {
            out.push_str(&format!(
                "  {:<42} {:>9}/{:<9} {}\n",
                c.name,
                c.passed,
                c.cases,
                if c.ok() { "ok" } else { "FAIL" }
            ));
            if let Some(ce) = &c.first_counterexample {
                out.push_str(&format!("    case {}: {}\n", ce.case, ce.description));
                for line in ce.witness.lines() {
                    out.push_str(&format!("    | {line}\n"));
                }
            }
        }
        out.push_str(&format!(
            "  classic-without-annihilator witnesses: {}\n",
            self.classic_without_annihilator
        ));
        out.push_str(&format!(
            "  weak actor tally: {} pairs, {} actions vs {} homomorphisms\n",
            self.weak_actor_tally.pairs, self.weak_actor_tally.actions, self.weak_actor_tally.homs
        ));
        out.push_str(&format!(
            "result: {} ({:.2}s)\n",
            if self.ok { "PASS" } else { "FAIL" },
            self.wall_seconds
        ));
        out
    }
}

type Failure = (String, String);

#[derive(Debug, Clone, Default)]
struct Tally {
    cases: u64,
    passed: u64,
    worst: Option<Counterexample>,
}

impl Tally {
    fn record(&mut self, case: u64, failure: Option<Failure>) {
        self.cases += 1;
        match failure {
            None => self.passed += 1,
            Some((description, witness)) => {
                let ce = Counterexample {
                    case,
                    description,
                    witness,
                };
                self.take_worst(Some(ce));
            }
        }
    }

    fn take_worst(&mut self, other: Option<Counterexample>) {
        match (&self.worst, &other) {
            (Some(a), Some(b)) if a.case <= b.case => {}
            (_, Some(_)) => self.worst = other,
            _ => {}
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.cases += other.cases;
        self.passed += other.passed;
        self.take_worst(other.worst);
        self
    }

    fn outcome(self, name: &str) -> CheckOutcome {
        CheckOutcome {
            name: name.to_string(),
            cases: self.cases,
            passed: self.passed,
            first_counterexample: self.worst,
        }
    }
}

fn table_key(a: &Algebra) -> Vec<u64> {
    let mut key = vec![a.dim() as u64];
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            for k in 0..a.dim() {
                key.push(a.structure_constant(i, j, k).residue());
            }
        }
    }
    key
}

fn build_corpus(spec: &CorpusSpec, field: Field) -> Result<Vec<Algebra>> {
    let mut corpus = Vec::new();
    for dim in 0..=spec.max_dim {
        corpus.extend(enumerate_algebras(field, dim, spec.budget)?);
    }
    for path in &spec.curated {
        let label = path.display().to_string();
        match parse_file(path)? {
            Parsed::Algebra(a) => {
                if a.field() != field {
                    return Err(Error::InvalidFile {
                        file: label,
                        message: format!("curated algebra is over {}, expected {}", a.field(), field),
                    });
                }
                corpus.push(a);
            }
            other => {
                return Err(Error::InvalidFile {
                    file: label,
                    message: format!("curated corpus entries must be algebras, found {}", other.kind()),
                })
            }
        }
    }
    let mut seen = HashSet::new();
    corpus.retain(|a| seen.insert(table_key(a)));
    Ok(corpus)
}

/// An invertible change of basis used to present semidirect products in
/// scrambled coordinates: basis reversal composed with a shear.
fn scramble_matrix(field: Field, d: usize) -> Matrix {
    let reversal = Matrix::from_fn(field, d, d, |r, c| {
        if r + c + 1 == d {
            field.one()
        } else {
            field.zero()
        }
    });
    if d < 2 {
        return reversal;
    }
    let shear = Matrix::from_fn(field, d, d, |r, c| {
        if r == c || (r == 0 && c == 1) {
            field.one()
        } else {
            field.zero()
        }
    });
    reversal.mul(&shear)
}

/// Transports the total algebra of an extension along the basis change t
/// (columns of t express the new basis in old coordinates).
fn conjugate_extension(e: &SplitExtension, t: &Matrix) -> SplitExtension {
    let a = e.total();
    let f = a.field();
    let d = a.dim();
    let tinv = t.inverse().expect("basis changes are invertible");
    let mut table = Vec::with_capacity(d * d * d);
    for i in 0..d {
        let u = t.col(i);
        for j in 0..d {
            let w = a.multiply(&u, &t.col(j));
            table.extend(tinv.mul_vec(&w));
        }
    }
    let names = (0..d).map(|i| format!("s{i}")).collect();
    let total = Algebra::new_unchecked(f, names, table);
    let alpha = AlgebraHom::new_unchecked(total.clone(), e.base().clone(), e.alpha().matrix().mul(t));
    let beta = AlgebraHom::new_unchecked(e.base().clone(), total.clone(), tinv.mul(e.beta().matrix()));
    let kappa = AlgebraHom::new_unchecked(
        e.kernel_algebra().clone(),
        total,
        tinv.mul(e.kappa().matrix()),
    );
    SplitExtension::new_unchecked(alpha, beta, kappa)
}

struct Caches {
    /// All homomorphisms per ordered corpus pair, where exhaustive
    /// enumeration fits the budget.
    homs: BTreeMap<(usize, usize), Vec<AlgebraHom>>,
    /// Surjective homomorphisms per ordered pair (sampled beyond budget).
    surj: BTreeMap<(usize, usize), Vec<AlgebraHom>>,
    /// Enumerated actions per (base, space) pair within budget.
    actions: BTreeMap<(usize, usize), Vec<Action>>,
    /// Semidirect products aligned with `actions`.
    exts: BTreeMap<(usize, usize), Vec<SplitExtension>>,
    /// Acting morphisms aligned with `actions`.
    mus: BTreeMap<(usize, usize), Vec<AlgebraHom>>,
    /// Weak actors for every space that occurs in `actions`.
    weak: BTreeMap<usize, WeakActor>,
    /// Commutator ideals, one per corpus algebra.
    commutators: Vec<Subspace>,
    commutative: Vec<bool>,
}

fn build_caches(spec: &CorpusSpec, corpus: &[Algebra]) -> Result<Caches> {
    let p = spec.prime;
    let budget = spec.budget;
    let n = corpus.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();

    let homs: BTreeMap<(usize, usize), Vec<AlgebraHom>> = pairs
        .par_iter()
        .filter(|&&(i, j)| checked_power(p, corpus[i].dim() * corpus[j].dim()) <= budget as u128)
        .map(|&(i, j)| {
            let hs = all_homs(&corpus[i], &corpus[j], budget).expect("gated by budget");
            ((i, j), hs)
        })
        .collect();

    let surj: BTreeMap<(usize, usize), Vec<AlgebraHom>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let hs = match homs.get(&(i, j)) {
                Some(hs) => hs.iter().filter(|h| h.is_surjective()).cloned().collect(),
                None => surjective_homs(&corpus[i], &corpus[j], budget, spec.seed)
                    .expect("prime field"),
            };
            ((i, j), hs)
        })
        .collect();

    let actions: BTreeMap<(usize, usize), Vec<Action>> = pairs
        .par_iter()
        .filter(|&&(b, x)| {
            checked_power(p, 2 * corpus[b].dim() * corpus[x].dim() * corpus[x].dim())
                <= budget as u128
        })
        .map(|&(b, x)| {
            let acts = enumerate_actions(&corpus[b], &corpus[x], budget).expect("gated by budget");
            ((b, x), acts)
        })
        .collect();

    let exts: BTreeMap<(usize, usize), Vec<SplitExtension>> = actions
        .par_iter()
        .map(|(&k, v)| (k, v.iter().map(semidirect).collect()))
        .collect();

    let mus: BTreeMap<(usize, usize), Vec<AlgebraHom>> = actions
        .par_iter()
        .map(|(&k, v)| (k, v.iter().map(acting_morphism).collect()))
        .collect();

    let mut weak = BTreeMap::new();
    let spaces: Vec<usize> = {
        let mut s: Vec<usize> = actions.keys().map(|&(_, x)| x).collect();
        s.sort_unstable();
        s.dedup();
        s
    };
    for x in spaces {
        weak.insert(x, weak_actor(&corpus[x])?);
    }

    let commutators: Vec<Subspace> = corpus.par_iter().map(|a| a.commutator_ideal()).collect();
    let commutative: Vec<bool> = corpus.iter().map(|a| a.is_commutative()).collect();

    Ok(Caches {
        homs,
        surj,
        actions,
        exts,
        mus,
        weak,
        commutators,
        commutative,
    })
}

#[derive(Default)]
struct CentralTallies {
    agree: Tally,
    annih: Tally,
    classic_without_annihilator: u64,
}

impl CentralTallies {
    fn merge(mut self, o: CentralTallies) -> CentralTallies {
        self.agree = self.agree.merge(o.agree);
        self.annih = self.annih.merge(o.annih);
        self.classic_without_annihilator += o.classic_without_annihilator;
        self
    }
}

fn eval_centrality(case: u64, alpha: &AlgebraHom) -> CentralTallies {
    let mut t = CentralTallies::default();
    let flags = (|| -> Result<(bool, bool, bool, bool)> {
        Ok((
            classically_central(alpha)?.holds,
            algebraically_central(alpha)?,
            categorically_central(alpha)?,
            annihilator_central(alpha)?.holds,
        ))
    })();
    match flags {
        Ok((classic, algebraic, categorical, annihilator)) => {
            let agree = classic == algebraic && algebraic == categorical;
            t.agree.record(
                case,
                (!agree).then(|| {
                    (
                        format!(
                            "centrality notions disagree: classic={classic} algebraic={algebraic} categorical={categorical}"
                        ),
                        hom_to_json(alpha),
                    )
                }),
            );
            t.annih.record(
                case,
                (annihilator && !classic).then(|| {
                    (
                        "annihilator centrality without classic centrality".to_string(),
                        hom_to_json(alpha),
                    )
                }),
            );
            if classic && !annihilator {
                t.classic_without_annihilator += 1;
            }
        }
        Err(e) => {
            let fail = Some((format!("centrality evaluation failed: {e}"), hom_to_json(alpha)));
            t.agree.record(case, fail.clone());
            t.annih.record(case, fail);
        }
    }
    t
}

#[derive(Default)]
struct ActionTallies {
    roundtrip: Tally,
    lemma31: Tally,
    thm33: Tally,
    weak_image: Tally,
    access: Tally,
}

impl ActionTallies {
    fn merge(mut self, o: ActionTallies) -> ActionTallies {
        self.roundtrip = self.roundtrip.merge(o.roundtrip);
        self.lemma31 = self.lemma31.merge(o.lemma31);
        self.thm33 = self.thm33.merge(o.thm33);
        self.weak_image = self.weak_image.merge(o.weak_image);
        self.access = self.access.merge(o.access);
        self
    }
}

fn eval_action_battery(
    case: u64,
    act: &Action,
    e: &SplitExtension,
    mu: &AlgebraHom,
    weak: &WeakActor,
) -> ActionTallies {
    let mut t = ActionTallies::default();
    let field = act.base().field();

    // round trip on the block presentation
    let rt1 = (extract_action(e) != *act).then(|| {
        (
            "extract after semidirect changed the action".to_string(),
            action_to_json(act),
        )
    });
    t.roundtrip.record(2 * case, rt1);

    // and on a scrambled presentation, up to (f, 1, 1) isomorphism
    let scrambled = conjugate_extension(e, &scramble_matrix(field, e.total().dim()));
    let back = semidirect(&extract_action(&scrambled));
    let id_b = AlgebraHom::identity(scrambled.base());
    let id_x = AlgebraHom::identity(scrambled.kernel_algebra());
    let rt2 = match complete_morphism(&id_b, &id_x, &scrambled, &back) {
        Some(m) if m.f.is_bijective() => None,
        Some(_) => Some((
            "completion onto the semidirect presentation is not bijective".to_string(),
            extension_to_json(&scrambled),
        )),
        None => Some((
            "no (f, 1, 1) completion onto the semidirect presentation".to_string(),
            extension_to_json(&scrambled),
        )),
    };
    t.roundtrip.record(2 * case + 1, rt2);

    for (slot, ext) in [(2 * case, e), (2 * case + 1, &scrambled)] {
        let l = lemma31_report(ext);
        t.lemma31.record(
            slot,
            (!l.unanimous()).then(|| {
                (
                    format!("lemma31 flags split: {:?}", l.flags()),
                    extension_to_json(ext),
                )
            }),
        );
        let th = thm33_report(ext);
        t.thm33.record(
            slot,
            (!th.unanimous()).then(|| {
                (
                    format!("thm33 flags split: {:?}", th.flags()),
                    extension_to_json(ext),
                )
            }),
        );
    }

    let outside = (0..mu.source().dim()).find(|&i| !weak.subspace.contains(&mu.matrix().col(i)));
    t.weak_image.record(
        case,
        outside.map(|i| {
            (
                format!("acting morphism sends basis element {i} outside the weak actor"),
                hom_to_json(mu),
            )
        }),
    );

    let access_fail = match accessify(e) {
        Ok((m, faithful)) => {
            if !is_faithful(&extract_action(&faithful)) {
                Some(("accessibility produced an unfaithful extension".to_string(), extension_to_json(&faithful)))
            } else if !m.violations(e, &faithful).is_empty() {
                Some(("accessibility morphism fails its squares".to_string(), extension_to_json(&faithful)))
            } else if *m.h.matrix() != Matrix::identity(field, act.space().dim()) {
                Some(("accessibility morphism moves the kernel".to_string(), extension_to_json(&faithful)))
            } else {
                None
            }
        }
        Err(err) => Some((format!("accessibility failed: {err}"), extension_to_json(e))),
    };
    t.access.record(case, access_fail);

    t
}

#[derive(Default)]
struct PairTallies {
    distinct: Tally,
    tally: WeakActorTally,
}

impl PairTallies {
    fn merge(mut self, o: PairTallies) -> PairTallies {
        self.distinct = self.distinct.merge(o.distinct);
        self.tally.pairs += o.tally.pairs;
        self.tally.actions += o.tally.actions;
        self.tally.homs += o.tally.homs;
        self
    }
}

fn eval_pair(
    case: u64,
    p: u64,
    base: &Algebra,
    mus: &[AlgebraHom],
    weak: &WeakActor,
) -> PairTallies {
    let mut t = PairTallies::default();
    let mut seen = HashSet::new();
    let mut clash = None;
    for (i, mu) in mus.iter().enumerate() {
        let key: Vec<u64> = (0..mu.matrix().rows())
            .flat_map(|r| mu.matrix().row(r).iter().map(|s| s.residue()))
            .collect();
        if !seen.insert(key) {
            clash = Some(i);
            break;
        }
    }
    t.distinct.record(
        case,
        clash.map(|i| {
            (
                format!("two distinct actions share acting morphism (second at index {i})"),
                hom_to_json(&mus[i]),
            )
        }),
    );
    if checked_power(p, base.dim() * weak.algebra.dim()) <= WEAK_HOM_CAP as u128 {
        let homs = all_homs(base, &weak.algebra, WEAK_HOM_CAP).expect("gated by cap");
        t.tally.pairs = 1;
        t.tally.actions = mus.len() as u64;
        t.tally.homs = homs.len() as u64;
    }
    t
}

fn eval_completion(
    g: &AlgebraHom,
    e: &SplitExtension,
    ep: &SplitExtension,
    mu: &AlgebraHom,
    mup: &AlgebraHom,
    space: &Algebra,
) -> Option<Failure> {
    let compatible = mup.matrix().mul(g.matrix()) == *mu.matrix();
    let completion = complete_morphism(g, &AlgebraHom::identity(space), e, ep);
    if completion.is_some() == compatible {
        return None;
    }
    let description = if compatible {
        "acting morphisms agree along g but no completion exists"
    } else {
        "completion exists though acting morphisms disagree along g"
    };
    Some((
        description.to_string(),
        format!("{}{}{}", hom_to_json(g), extension_to_json(e), extension_to_json(ep)),
    ))
}

fn eval_transport_restrict(g: &AlgebraHom, mup: &AlgebraHom, space: &Algebra) -> Option<Failure> {
    let xi = g.then(mup);
    match action_from_hom(&xi, space) {
        Ok(_) => None,
        Err(e) => Some((
            format!("composite of an acting morphism with a surjection is not acting: {e}"),
            format!("{}{}", hom_to_json(g), hom_to_json(mup)),
        )),
    }
}

fn eval_transport_induce(g: &AlgebraHom, act: &Action, mu: &AlgebraHom) -> Option<Failure> {
    let factors = g
        .kernel()
        .basis_rows()
        .iter()
        .all(|v| mu.apply(v).iter().all(|s| s.is_zero()));
    match induced_action(act, g) {
        Ok(ind) => {
            if !factors {
                Some((
                    "action descended along g though its acting morphism does not factor".to_string(),
                    format!("{}{}", hom_to_json(g), action_to_json(act)),
                ))
            } else if acting_morphism(&ind).matrix().mul(g.matrix()) != *mu.matrix() {
                Some((
                    "descended action does not restrict back to the original".to_string(),
                    format!("{}{}", hom_to_json(g), action_to_json(act)),
                ))
            } else {
                None
            }
        }
        Err(Error::NoFactorization(_)) => factors.then(|| {
            (
                "acting morphism factors through g but the action failed to descend".to_string(),
                format!("{}{}", hom_to_json(g), action_to_json(act)),
            )
        }),
        Err(e) => Some((
            format!("induced action machinery errored: {e}"),
            format!("{}{}", hom_to_json(g), action_to_json(act)),
        )),
    }
}

fn eval_stability(alpha: &AlgebraHom, g: &AlgebraHom) -> Option<Failure> {
    match pullback_stability(alpha, g) {
        Ok(s) if s.holds() => None,
        Ok(s) => Some((
            format!(
                "pullback stability violated: original={} pulled={} g_surjective={}",
                s.original_central, s.pulled_central, s.g_surjective
            ),
            format!("{}{}", hom_to_json(alpha), hom_to_json(g)),
        )),
        Err(e) => Some((
            format!("pullback stability evaluation failed: {e}"),
            format!("{}{}", hom_to_json(alpha), hom_to_json(g)),
        )),
    }
}

fn verify_inner(spec: &CorpusSpec) -> Result<VerifyReport> {
    let field = Field::prime(spec.prime)?;
    let corpus = build_corpus(spec, field)?;
    let caches = build_caches(spec, &corpus)?;
    let budget = spec.budget;
    let mut checks = Vec::new();

    // one pass over all surjective homomorphisms covers both centrality checks
    let surj_cases: Vec<(&AlgebraHom, u64)> = {
        let mut v = Vec::new();
        for hs in caches.surj.values() {
            for h in hs {
                let idx = v.len() as u64;
                v.push((h, idx));
            }
        }
        v
    };
    let central = surj_cases
        .par_iter()
        .map(|&(alpha, case)| eval_centrality(case, alpha))
        .reduce(CentralTallies::default, CentralTallies::merge);
    checks.push(central.agree.outcome("centrality-three-way-agreement"));
    checks.push(central.annih.outcome("annihilator-implies-classic"));

    // homomorphisms into commutative algebras kill commutators
    let kill_cases: Vec<(&AlgebraHom, usize, u64)> = {
        let mut v = Vec::new();
        for (&(i, j), hs) in &caches.homs {
            if !caches.commutative[j] {
                continue;
            }
            for h in hs {
                let idx = v.len() as u64;
                v.push((h, i, idx));
            }
        }
        v
    };
    let kill = kill_cases
        .par_iter()
        .map(|&(h, i, case)| {
            let mut t = Tally::default();
            let leak = caches.commutators[i]
                .basis_rows()
                .iter()
                .position(|row| !h.apply(row).iter().all(|s| s.is_zero()));
            t.record(
                case,
                leak.map(|r| {
                    (
                        format!("commutator basis row {r} survives a map into a commutative algebra"),
                        hom_to_json(h),
                    )
                }),
            );
            t
        })
        .reduce(Tally::default, Tally::merge);
    checks.push(kill.outcome("commutative-images-kill-commutators"));

    // per-action battery
    let action_cases: Vec<((usize, usize), usize, u64)> = {
        let mut v = Vec::new();
        for (&key, acts) in &caches.actions {
            for i in 0..acts.len() {
                let idx = v.len() as u64;
                v.push((key, i, idx));
            }
        }
        v
    };
    let battery = action_cases
        .par_iter()
        .map(|&(key, i, case)| {
            eval_action_battery(
                case,
                &caches.actions[&key][i],
                &caches.exts[&key][i],
                &caches.mus[&key][i],
                &caches.weak[&key.1],
            )
        })
        .reduce(ActionTallies::default, ActionTallies::merge);
    checks.push(battery.roundtrip.outcome("action-extension-round-trip"));
    checks.push(battery.lemma31.outcome("lemma31-unanimity"));
    checks.push(battery.thm33.outcome("thm33-unanimity"));

    // per-(base, space) pass: distinctness plus the informational tally
    let pair_cases: Vec<((usize, usize), u64)> = caches
        .actions
        .keys()
        .enumerate()
        .map(|(i, &k)| (k, i as u64))
        .collect();
    let pairs = pair_cases
        .par_iter()
        .map(|&((b, x), case)| {
            eval_pair(case, spec.prime, &corpus[b], &caches.mus[&(b, x)], &caches.weak[&x])
        })
        .reduce(PairTallies::default, PairTallies::merge);
    checks.push(pairs.distinct.outcome("acting-morphisms-distinct"));
    checks.push(battery.weak_image.outcome("acting-morphisms-land-in-weak-actor"));

    // completion exists iff acting morphisms are compatible
    let spaces: Vec<usize> = caches.weak.keys().copied().collect();
    let completion_cases: Vec<[u32; 6]> = {
        let mut v: Vec<[u32; 6]> = Vec::new();
        'outer: for &x in &spaces {
            for b in 0..corpus.len() {
                let Some(acts) = caches.actions.get(&(b, x)) else { continue };
                for bp in 0..corpus.len() {
                    let Some(actsp) = caches.actions.get(&(bp, x)) else { continue };
                    let Some(gs) = caches.homs.get(&(b, bp)) else { continue };
                    for ai in 0..acts.len() {
                        for aj in 0..actsp.len() {
                            for gi in 0..gs.len() {
                                if v.len() as u64 >= budget {
                                    break 'outer;
                                }
                                v.push([x as u32, b as u32, bp as u32, ai as u32, aj as u32, gi as u32]);
                            }
                        }
                    }
                }
            }
        }
        v
    };
    let completion = completion_cases
        .par_iter()
        .enumerate()
        .map(|(case, &[x, b, bp, ai, aj, gi])| {
            let (x, b, bp) = (x as usize, b as usize, bp as usize);
            let (ai, aj, gi) = (ai as usize, aj as usize, gi as usize);
            let mut t = Tally::default();
            t.record(
                case as u64,
                eval_completion(
                    &caches.homs[&(b, bp)][gi],
                    &caches.exts[&(b, x)][ai],
                    &caches.exts[&(bp, x)][aj],
                    &caches.mus[&(b, x)][ai],
                    &caches.mus[&(bp, x)][aj],
                    &corpus[x],
                ),
            );
            t
        })
        .reduce(Tally::default, Tally::merge);
    checks.push(completion.outcome("completion-iff-compatible"));

    // actions transport along surjections, both directions
    // tag 0: restrict an action of the quotient; tag 1: descend an action of the source
    let transport_cases: Vec<[u32; 6]> = {
        let mut v: Vec<[u32; 6]> = Vec::new();
        'outer: for &x in &spaces {
            for b in 0..corpus.len() {
                let Some(acts) = caches.actions.get(&(b, x)) else { continue };
                for bp in 0..corpus.len() {
                    let Some(actsp) = caches.actions.get(&(bp, x)) else { continue };
                    let gs = &caches.surj[&(b, bp)];
                    for gi in 0..gs.len() {
                        for aj in 0..actsp.len() {
                            if v.len() as u64 >= budget {
                                break 'outer;
                            }
                            v.push([0, x as u32, b as u32, bp as u32, gi as u32, aj as u32]);
                        }
                        for ai in 0..acts.len() {
                            if v.len() as u64 >= budget {
                                break 'outer;
                            }
                            v.push([1, x as u32, b as u32, bp as u32, gi as u32, ai as u32]);
                        }
                    }
                }
            }
        }
        v
    };
    let transport = transport_cases
        .par_iter()
        .enumerate()
        .map(|(case, &[tag, x, b, bp, gi, a])| {
            let (x, b, bp, gi, a) = (x as usize, b as usize, bp as usize, gi as usize, a as usize);
            let g = &caches.surj[&(b, bp)][gi];
            let mut t = Tally::default();
            let fail = if tag == 0 {
                eval_transport_restrict(g, &caches.mus[&(bp, x)][a], &corpus[x])
            } else {
                eval_transport_induce(g, &caches.actions[&(b, x)][a], &caches.mus[&(b, x)][a])
            };
            t.record(case as u64, fail);
            t
        })
        .reduce(Tally::default, Tally::merge);
    checks.push(transport.outcome("actions-transport-along-surjections"));

    checks.push(battery.access.outcome("accessibility"));

    // pullback stability of classic centrality
    let stability_cases: Vec<[u32; 5]> = {
        let mut v: Vec<[u32; 5]> = Vec::new();
        'outer: for (&(i, j), alphas) in &caches.surj {
            if alphas.is_empty() {
                continue;
            }
            for ai in 0..alphas.len() {
                for c in 0..corpus.len() {
                    let Some(gs) = caches.homs.get(&(c, j)) else { continue };
                    for gi in 0..gs.len() {
                        if v.len() as u64 >= budget {
                            break 'outer;
                        }
                        v.push([i as u32, j as u32, ai as u32, c as u32, gi as u32]);
                    }
                }
            }
        }
        v
    };
    let stability = stability_cases
        .par_iter()
        .enumerate()
        .map(|(case, &[i, j, ai, c, gi])| {
            let (i, j, ai, c, gi) = (i as usize, j as usize, ai as usize, c as usize, gi as usize);
            let mut t = Tally::default();
            t.record(
                case as u64,
                eval_stability(&caches.surj[&(i, j)][ai], &caches.homs[&(c, j)][gi]),
            );
            t
        })
        .reduce(Tally::default, Tally::merge);
    checks.push(stability.outcome("pullback-stability"));

    let ok = checks.iter().all(CheckOutcome::ok);
    Ok(VerifyReport {
        prime: spec.prime,
        max_dim: spec.max_dim,
        budget: spec.budget,
        seed: spec.seed,
        corpus_size: corpus.len(),
        checks,
        classic_without_annihilator: central.classic_without_annihilator,
        weak_actor_tally: pairs.tally,
        ok,
        wall_seconds: 0.0,
    })
}

/// Runs the whole battery, optionally on a dedicated thread pool. The
/// canonical report is independent of thread count and wall time.
pub fn verify_corpus(spec: &CorpusSpec) -> Result<VerifyReport> {
    let start = Instant::now();
    let mut report = match spec.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Internal(format!("thread pool: {e}")))?
            .install(|| verify_inner(spec))?,
        None => verify_inner(spec)?,
    };
    report.wall_seconds = start.elapsed().as_secs_f64();
    Ok(report)
}
