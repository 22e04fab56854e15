//! Compositions of the matching Rota-Baxter relations and their triviality,
//! checked exhaustively over bounded parameter corpora.

use num_traits::One;

use crate::exec::Execution;
use crate::linear::{Coefficient, LinComb};
use crate::rewrite::{RewriteSystem, Strategy};
use crate::signature::{Operator, Signature};
use crate::word::{enumerate_star_words, enumerate_words, StarWord, Word};

/// `f_{α,β}(x, y) = ⌊x⌋_α⌊y⌋_β − ⌊x⌊y⌋_β⌋_α − ⌊⌊x⌋_α y⌋_β − λ_β⌊xy⌋_α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SRelation {
    pub x: Word,
    pub y: Word,
    pub alpha: Operator,
    pub beta: Operator,
}

impl SRelation {
    pub fn new(alpha: Operator, x: Word, beta: Operator, y: Word) -> Self {
        SRelation { x, y, alpha, beta }
    }

    /// `⌊x⌋_α⌊y⌋_β`.
    pub fn leading(&self) -> Word {
        Word::bracket(self.alpha, self.x.clone()).concat(&Word::bracket(self.beta, self.y.clone()))
    }

    pub fn value(&self, sig: &Signature) -> LinComb<Word> {
        let rhs = RewriteSystem::new(sig.clone()).rule((self.alpha, &self.x), (self.beta, &self.y));
        LinComb::basis(self.leading()) - rhs
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CompositionKind {
    Intersection,
    /// The inner relation sits in the left bracket of the outer one.
    IncludingLeft,
    /// The inner relation sits in the right bracket of the outer one.
    IncludingRight,
}

impl CompositionKind {
    pub fn name(self) -> &'static str {
        match self {
            CompositionKind::Intersection => "intersection",
            CompositionKind::IncludingLeft => "including-left",
            CompositionKind::IncludingRight => "including-right",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionReport {
    pub kind: CompositionKind,
    /// The ambiguity `w`.
    pub ambiguity: Word,
    pub composition: LinComb<Word>,
    /// What is left after reduction; zero for a trivial composition.
    pub remainder: LinComb<Word>,
    /// Number of rewrite steps.
    pub steps: usize,
    /// True when some rewritten monomial was not strictly below `w`.
    pub exceeded_bound: bool,
}

impl CompositionReport {
    pub fn is_trivial(&self) -> bool {
        self.remainder.is_zero() && !self.exceeded_bound
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GsbError {
    #[error("the relations do not share the middle bracket")]
    NoOverlap,
    #[error("the inner leading monomial does not occur in the outer one")]
    NoInclusion,
}

/// Forms compositions from the true relations and reduces them with `reducer`.
#[derive(Clone, Debug)]
pub struct Verifier {
    sig: Signature,
    reducer: RewriteSystem,
}

impl Verifier {
    pub fn new(sig: Signature) -> Self {
        Verifier {
            reducer: RewriteSystem::new(sig.clone()),
            sig,
        }
    }

    /// Reduces with the weight term missing from the rule, which must produce
    /// nontrivial compositions.
    pub fn mutated(sig: Signature) -> Self {
        Verifier {
            reducer: RewriteSystem::without_weight_term(sig.clone()),
            sig,
        }
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    fn finish(
        &self,
        kind: CompositionKind,
        ambiguity: Word,
        composition: LinComb<Word>,
    ) -> CompositionReport {
        let mut steps = 0;
        let mut exceeded_bound = false;
        let remainder = self
            .reducer
            .reduce(&composition, Strategy::LargestFirst, &mut |m| {
                steps += 1;
                exceeded_bound |= *m >= ambiguity;
            });
        exceeded_bound |= composition.basis_elements().any(|m| *m >= ambiguity);
        CompositionReport {
            kind,
            ambiguity,
            composition,
            remainder,
            steps,
            exceeded_bound,
        }
    }

    /// `(f, g)_w = f⌊z⌋_γ − ⌊x⌋_α g` for `w = ⌊x⌋_α⌊y⌋_β⌊z⌋_γ`.
    pub fn intersection(
        &self,
        f: &SRelation,
        g: &SRelation,
    ) -> Result<CompositionReport, GsbError> {
        if f.beta != g.alpha || f.y != g.x {
            return Err(GsbError::NoOverlap);
        }
        let right = Word::bracket(g.beta, g.y.clone());
        let left = Word::bracket(f.alpha, f.x.clone());
        let w = f.leading().concat(&right);
        let fv = f.value(&self.sig).map_keys(|m| m.concat(&right));
        let gv = g.value(&self.sig).map_keys(|m| left.concat(m));
        Ok(self.finish(CompositionKind::Intersection, w, fv - gv))
    }

    /// `f − q|_g` where the leading monomial of `g` sits inside that of `f`
    /// at the hole of `q`.
    pub fn including(
        &self,
        f: &SRelation,
        q: &StarWord,
        g: &SRelation,
        kind: CompositionKind,
    ) -> Result<CompositionReport, GsbError> {
        let w = f.leading();
        if q.substitute(&g.leading()) != w {
            return Err(GsbError::NoInclusion);
        }
        let gv = g.value(&self.sig).map_keys(|m| q.substitute(m));
        Ok(self.finish(kind, w, f.value(&self.sig) - gv))
    }

    /// Case with `w = ⌊u|_{⌊x⌋_β⌊y⌋_γ}⌋_α ⌊z⌋_δ` (left) or
    /// `w = ⌊z⌋_δ ⌊u|_{⌊x⌋_β⌊y⌋_γ}⌋_α` (right).
    pub fn including_in_context(
        &self,
        u: &StarWord,
        g: &SRelation,
        alpha: Operator,
        delta: Operator,
        z: &Word,
        left: bool,
    ) -> CompositionReport {
        let inner = u.substitute(&g.leading());
        let zb = Word::bracket(delta, z.clone());
        let (f, q, kind) = if left {
            (
                SRelation::new(alpha, inner, delta, z.clone()),
                StarWord::nest(&Word::one(), alpha, u.clone(), &zb),
                CompositionKind::IncludingLeft,
            )
        } else {
            (
                SRelation::new(delta, z.clone(), alpha, inner),
                StarWord::nest(&zb, alpha, u.clone(), &Word::one()),
                CompositionKind::IncludingRight,
            )
        };
        self.including(&f, &q, g, kind)
            .expect("the context places g inside f by construction")
    }

    /// Runs every composition within `bounds`.
    pub fn verify(&self, bounds: &Bounds, exec: Execution) -> GsbSummary {
        let corpus = Corpus::new(&self.sig, bounds);
        let tasks = corpus.tasks();
        let mut summary = GsbSummary::default();
        for r in exec
            .map(&tasks, |t| self.run_task(&corpus, t))
            .into_iter()
            .flatten()
        {
            summary.record(r, bounds.keep_reports);
        }
        summary
    }

    /// The first nontrivial composition within `bounds`, in the order of
    /// [`Verifier::verify`]; stops as soon as one is found.
    pub fn find_nontrivial(&self, bounds: &Bounds) -> Option<CompositionReport> {
        let corpus = Corpus::new(&self.sig, bounds);
        corpus.tasks().iter().find_map(|t| {
            self.run_task(&corpus, t)
                .into_iter()
                .find(|r| !r.is_trivial())
        })
    }

    fn run_task(&self, corpus: &Corpus, task: &Task<'_>) -> Vec<CompositionReport> {
        match *task {
            // (x, y, α, β, γ), iterating z.
            Task::Intersection(x, y, a, b, c) => {
                let f = SRelation::new(a, x.clone(), b, y.clone());
                corpus
                    .inter_params
                    .iter()
                    .map(|z| {
                        let g = SRelation::new(b, y.clone(), c, z.clone());
                        self.intersection(&f, &g).expect("shared middle bracket")
                    })
                    .collect()
            }
            // (u, x, y, β, γ), iterating (z, α, δ, side).
            Task::Including(u, x, y, b, c) => {
                let g = SRelation::new(b, x.clone(), c, y.clone());
                let mut out = Vec::new();
                for z in &corpus.incl_params {
                    for &alpha in &corpus.ops {
                        for &delta in &corpus.ops {
                            for left in [true, false] {
                                out.push(self.including_in_context(u, &g, alpha, delta, z, left));
                            }
                        }
                    }
                }
                out
            }
        }
    }
}

struct Corpus {
    ops: Vec<Operator>,
    inter_params: Vec<Word>,
    incl_params: Vec<Word>,
    contexts: Vec<StarWord>,
}

enum Task<'a> {
    Intersection(&'a Word, &'a Word, Operator, Operator, Operator),
    Including(&'a StarWord, &'a Word, &'a Word, Operator, Operator),
}

impl Corpus {
    fn new(sig: &Signature, bounds: &Bounds) -> Self {
        Corpus {
            ops: sig.operators().collect(),
            inter_params: enumerate_words(sig, bounds.intersection_degree),
            incl_params: enumerate_words(sig, bounds.including_degree),
            contexts: enumerate_star_words(sig, bounds.context_depth, bounds.context_degree),
        }
    }

    fn tasks(&self) -> Vec<Task<'_>> {
        let ops = &self.ops;
        let mut tasks = Vec::new();
        for x in &self.inter_params {
            for y in &self.inter_params {
                for &a in ops {
                    for &b in ops {
                        for &c in ops {
                            tasks.push(Task::Intersection(x, y, a, b, c));
                        }
                    }
                }
            }
        }
        for u in &self.contexts {
            for x in &self.incl_params {
                for y in &self.incl_params {
                    for &b in ops {
                        for &c in ops {
                            tasks.push(Task::Including(u, x, y, b, c));
                        }
                    }
                }
            }
        }
        tasks
    }
}

/// Corpus bounds for [`Verifier::verify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Total degree bound on `x, y, z` of intersection compositions.
    pub intersection_degree: usize,
    /// Total degree bound on `x, y, z` of including compositions.
    pub including_degree: usize,
    /// Depth bound on the context `u`.
    pub context_depth: usize,
    /// Bound on the total degree of `u` outside its hole.
    pub context_degree: usize,
    /// Keep every report rather than only the nontrivial ones.
    pub keep_reports: bool,
}

impl Bounds {
    /// Intersection parameters up to `max_degree`, including parameters one
    /// below it, contexts of degree up to `max_degree`.
    pub fn from_max_degree(max_degree: usize, context_depth: usize) -> Self {
        Bounds {
            intersection_degree: max_degree,
            including_degree: max_degree.saturating_sub(1),
            context_depth,
            context_degree: max_degree,
            keep_reports: false,
        }
    }
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds::from_max_degree(2, 2)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GsbSummary {
    pub intersection: usize,
    pub including: usize,
    pub total_steps: usize,
    /// Nontrivial compositions in enumeration order.
    pub failures: Vec<CompositionReport>,
    /// Every composition, when requested.
    pub reports: Vec<CompositionReport>,
}

impl GsbSummary {
    fn record(&mut self, r: CompositionReport, keep: bool) {
        match r.kind {
            CompositionKind::Intersection => self.intersection += 1,
            _ => self.including += 1,
        }
        self.total_steps += r.steps;
        if !r.is_trivial() {
            self.failures.push(r.clone());
        }
        if keep {
            self.reports.push(r);
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// The leading coefficient of every relation is 1.
pub fn is_monic(rel: &SRelation, sig: &Signature) -> bool {
    rel.value(sig)
        .leading()
        .map(|(w, c)| *w == rel.leading() && *c == Coefficient::one())
        .unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::q;

    const A: Operator = Operator(0);
    const B: Operator = Operator(1);

    fn one() -> Word {
        Word::one()
    }

    #[test]
    fn relations_are_monic() {
        let sig = Signature::default_corpus();
        for x in enumerate_words(&sig, 1) {
            for y in enumerate_words(&sig, 1) {
                for a in [A, B] {
                    for b in [A, B] {
                        assert!(is_monic(&SRelation::new(a, x.clone(), b, y.clone()), &sig));
                    }
                }
            }
        }
    }

    #[test]
    fn simplest_intersection_is_trivial() {
        let sig = Signature::standard(1, &[q(-1)]).unwrap();
        let v = Verifier::new(sig);
        let f = SRelation::new(A, one(), A, one());
        let r = v.intersection(&f, &f).unwrap();
        assert!(r.is_trivial());
        assert!(r.steps > 0);
        let g = SRelation::new(A, Word::bracket(A, one()), A, one());
        assert_eq!(v.intersection(&f, &g), Err(GsbError::NoOverlap));
    }

    #[test]
    fn simplest_including_compositions_are_trivial() {
        let v = Verifier::new(Signature::standard(1, &[q(1)]).unwrap());
        let g = SRelation::new(A, one(), A, one());
        for left in [true, false] {
            let r = v.including_in_context(&StarWord::hole(), &g, A, A, &one(), left);
            assert!(r.is_trivial(), "{r:?}");
        }
        let f = SRelation::new(A, one(), A, one());
        assert_eq!(
            v.including(
                &f,
                &StarWord::hole().wrap(A),
                &g,
                CompositionKind::IncludingLeft
            ),
            Err(GsbError::NoInclusion)
        );
    }

    #[test]
    fn mutation_breaks_an_intersection() {
        let v = Verifier::mutated(Signature::default_corpus());
        let f = SRelation::new(A, one(), A, one());
        let g = SRelation::new(A, one(), B, one());
        assert!(!v.intersection(&f, &g).unwrap().is_trivial());
    }

    #[test]
    fn small_bounds_pass() {
        let sig = Signature::standard(1, &[q(1)]).unwrap();
        let summary =
            Verifier::new(sig).verify(&Bounds::from_max_degree(1, 1), Execution::Sequential);
        assert!(summary.passed());
        assert!(summary.intersection > 0 && summary.including > 0);
    }

    #[test]
    fn early_exit_agrees_with_full_run() {
        let sig = Signature::default_corpus();
        let bounds = Bounds::from_max_degree(1, 1);
        assert!(Verifier::new(sig.clone())
            .find_nontrivial(&bounds)
            .is_none());
        let broken = Verifier::mutated(sig);
        let first = broken
            .find_nontrivial(&bounds)
            .expect("the mutated rule breaks a composition");
        assert_eq!(
            Some(&first),
            broken
                .verify(&bounds, Execution::Sequential)
                .failures
                .first()
        );
    }
}
