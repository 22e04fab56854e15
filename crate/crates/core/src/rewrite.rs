//! Rewriting modulo the matching Rota-Baxter relations.
//!
//! The rule replaces an adjacent pair `⌊u⌋_α⌊v⌋_β` anywhere in a word by
//! `⌊u⌊v⌋_β⌋_α + ⌊⌊u⌋_α v⌋_β + λ_β⌊uv⌋_α`. Every output monomial is strictly
//! `≤db`-smaller than the input, so repeatedly rewriting the largest reducible
//! monomial terminates in the projection onto irreducible words.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::linear::{q, Coefficient, LinComb};
use crate::order::order_key;
use crate::signature::{Operator, Signature};
use crate::word::{Atom, StarWord, Word};

/// An occurrence of `⌊u⌋_α⌊v⌋_β` inside a word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Redex {
    pub context: StarWord,
    pub left: (Operator, Word),
    pub right: (Operator, Word),
}

impl Redex {
    /// `⌊u⌋_α⌊v⌋_β` itself.
    pub fn word(&self) -> Word {
        Word::bracket(self.left.0, self.left.1.clone())
            .concat(&Word::bracket(self.right.0, self.right.1.clone()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RewriteError {
    #[error("the word has no adjacent brackets to rewrite")]
    Irreducible,
}

/// How redexes and monomials are picked while reducing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Largest monomial first, leftmost-outermost redex.
    LargestFirst,
    /// Smallest reducible monomial first, leftmost-innermost redex.
    SmallestFirst,
}

/// The relation set for a signature, optionally with the weight term removed
/// from the rule (a deliberately broken system used as a negative control).
#[derive(Clone, Debug)]
pub struct RewriteSystem {
    sig: Signature,
    weight_term: bool,
}

impl RewriteSystem {
    pub fn new(sig: Signature) -> Self {
        RewriteSystem {
            sig,
            weight_term: true,
        }
    }

    /// The same signature with `λ_β⌊uv⌋_α` dropped from the rule.
    pub fn without_weight_term(sig: Signature) -> Self {
        RewriteSystem {
            sig,
            weight_term: false,
        }
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn has_weight_term(&self) -> bool {
        self.weight_term
    }

    /// Right-hand side of the rule for `⌊u⌋_α⌊v⌋_β`.
    pub fn rule(&self, left: (Operator, &Word), right: (Operator, &Word)) -> LinComb<Word> {
        LinComb::from_terms(self.rule_terms(left, right))
    }

    fn rule_terms(
        &self,
        (alpha, u): (Operator, &Word),
        (beta, v): (Operator, &Word),
    ) -> Vec<(Word, Coefficient)> {
        let mut out = vec![
            (
                Word::bracket(alpha, u.concat(&Word::bracket(beta, v.clone()))),
                q(1),
            ),
            (
                Word::bracket(beta, Word::bracket(alpha, u.clone()).concat(v)),
                q(1),
            ),
        ];
        if self.weight_term {
            out.push((
                Word::bracket(alpha, u.concat(v)),
                self.sig.weight(beta).clone(),
            ));
        }
        out
    }

    pub fn rewrite_once(&self, w: &Word) -> Result<LinComb<Word>, RewriteError> {
        let redex = find_redex(w).ok_or(RewriteError::Irreducible)?;
        Ok(self.apply(&redex))
    }

    fn apply(&self, redex: &Redex) -> LinComb<Word> {
        LinComb::from_terms(self.apply_terms(redex))
    }

    fn apply_terms(&self, redex: &Redex) -> Vec<(Word, Coefficient)> {
        let mut terms = self.rule_terms(
            (redex.left.0, &redex.left.1),
            (redex.right.0, &redex.right.1),
        );
        for (m, _) in &mut terms {
            *m = redex.context.substitute(m);
        }
        terms
    }

    /// Applies the rule at the leftmost-outermost redex, building the results
    /// directly rather than through a [`Redex`] context.
    fn rewrite_outermost(&self, atoms: &[Atom]) -> Option<Vec<(Word, Coefficient)>> {
        for i in 0..atoms.len().saturating_sub(1) {
            if let (Atom::Bracket(a, u), Atom::Bracket(b, v)) = (&atoms[i], &atoms[i + 1]) {
                let mut terms = self.rule_terms((*a, u), (*b, v));
                for (m, _) in &mut terms {
                    *m = splice(&atoms[..i], std::mem::take(m).into_atoms(), &atoms[i + 2..]);
                }
                return Some(terms);
            }
        }
        atoms.iter().enumerate().find_map(|(i, a)| match a {
            Atom::Bracket(op, body) => self.rewrite_outermost(body.atoms()).map(|mut terms| {
                for (m, _) in &mut terms {
                    let inner = vec![Atom::Bracket(*op, std::mem::take(m))];
                    *m = splice(&atoms[..i], inner, &atoms[i + 1..]);
                }
                terms
            }),
            Atom::Letter(_) => None,
        })
    }

    pub fn normal_form(&self, v: &LinComb<Word>) -> LinComb<Word> {
        self.reduce(v, Strategy::LargestFirst, &mut |_| {})
    }

    pub fn normal_form_word(&self, w: &Word) -> LinComb<Word> {
        self.normal_form(&LinComb::basis(w.clone()))
    }

    /// Reduces `v` with the given strategy, reporting every monomial that is
    /// rewritten.
    pub fn reduce(
        &self,
        v: &LinComb<Word>,
        strategy: Strategy,
        on_rewrite: &mut dyn FnMut(&Word),
    ) -> LinComb<Word> {
        // Keyed by `order_key` so that ordering the work list is cheap.
        let mut work: BTreeMap<Vec<u32>, (Word, Coefficient)> = BTreeMap::new();
        let push =
            |work: &mut BTreeMap<_, _>, w: Word, c: Coefficient| match work.entry(order_key(&w)) {
                Entry::Vacant(e) => {
                    e.insert((w, c));
                }
                Entry::Occupied(mut e) => {
                    let (_, sum): &mut (Word, Coefficient) = e.get_mut();
                    *sum += c;
                    if sum.is_zero() {
                        e.remove();
                    }
                }
            };
        for (w, c) in v.iter() {
            push(&mut work, w.clone(), c.clone());
        }
        let mut done = LinComb::zero();
        loop {
            let next = match strategy {
                Strategy::LargestFirst => work.pop_last(),
                Strategy::SmallestFirst => work.pop_first(),
            };
            let Some((_, (w, c))) = next else { break };
            let rewritten = match strategy {
                Strategy::LargestFirst => self.rewrite_outermost(w.atoms()),
                Strategy::SmallestFirst => find_innermost_redex(&w).map(|r| self.apply_terms(&r)),
            };
            match rewritten {
                None => done.add_term(w, c),
                Some(terms) => {
                    on_rewrite(&w);
                    for (m, k) in terms {
                        let coeff = if k.is_one() { c.clone() } else { &c * k };
                        push(&mut work, m, coeff);
                    }
                }
            }
        }
        done
    }
}

fn splice(before: &[Atom], middle: Vec<Atom>, after: &[Atom]) -> Word {
    let mut atoms = Vec::with_capacity(before.len() + middle.len() + after.len());
    atoms.extend_from_slice(before);
    atoms.extend(middle);
    atoms.extend_from_slice(after);
    Word::from_atoms(atoms)
}

/// The leftmost-outermost adjacent bracket pair.
pub fn find_redex(w: &Word) -> Option<Redex> {
    outermost(w.atoms())
}

fn pair_at(atoms: &[Atom], i: usize) -> Option<Redex> {
    match (&atoms[i], &atoms[i + 1]) {
        (Atom::Bracket(a, u), Atom::Bracket(b, v)) => Some(Redex {
            context: StarWord::around(
                &Word::from_atoms(atoms[..i].to_vec()),
                &Word::from_atoms(atoms[i + 2..].to_vec()),
            ),
            left: (*a, u.clone()),
            right: (*b, v.clone()),
        }),
        _ => None,
    }
}

fn nested(atoms: &[Atom], i: usize, inner: Redex) -> Redex {
    let Atom::Bracket(op, _) = &atoms[i] else {
        unreachable!("only brackets have bodies")
    };
    Redex {
        context: StarWord::nest(
            &Word::from_atoms(atoms[..i].to_vec()),
            *op,
            inner.context,
            &Word::from_atoms(atoms[i + 1..].to_vec()),
        ),
        ..inner
    }
}

fn outermost(atoms: &[Atom]) -> Option<Redex> {
    if let Some(r) = (0..atoms.len().saturating_sub(1)).find_map(|i| pair_at(atoms, i)) {
        return Some(r);
    }
    atoms.iter().enumerate().find_map(|(i, a)| match a {
        Atom::Bracket(_, body) => outermost(body.atoms()).map(|r| nested(atoms, i, r)),
        Atom::Letter(_) => None,
    })
}

/// Searches each bracket body before the pair starting at that bracket.
fn find_innermost_redex(w: &Word) -> Option<Redex> {
    innermost(w.atoms())
}

fn innermost(atoms: &[Atom]) -> Option<Redex> {
    for (i, a) in atoms.iter().enumerate() {
        if let Atom::Bracket(_, body) = a {
            if let Some(r) = innermost(body.atoms()) {
                return Some(nested(atoms, i, r));
            }
            if i + 1 < atoms.len() {
                if let Some(r) = pair_at(atoms, i) {
                    if let Atom::Bracket(_, next) = &atoms[i + 1] {
                        if innermost(next.atoms()).is_none() {
                            return Some(r);
                        }
                    }
                }
            }
        }
    }
    None
}

/// True iff no two brackets are adjacent at any nesting level.
pub fn is_mrbw(w: &Word) -> bool {
    let atoms = w.atoms();
    atoms
        .windows(2)
        .all(|p| !(p[0].is_bracket() && p[1].is_bracket()))
        && atoms.iter().all(|a| match a {
            Atom::Bracket(_, body) => is_mrbw(body),
            Atom::Letter(_) => true,
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    use crate::signature::Letter;
    use crate::word::enumerate_words;

    const X: Letter = Letter(0);
    const Y: Letter = Letter(1);
    const A: Operator = Operator(0);
    const B: Operator = Operator(1);
    const C: Operator = Operator(2);

    fn br(op: Operator, w: Word) -> Word {
        Word::bracket(op, w)
    }

    fn dot(op: Operator) -> Word {
        br(op, Word::one())
    }

    fn system() -> RewriteSystem {
        RewriteSystem::new(Signature::standard(2, &[q(1), q(-1), q(2)]).unwrap())
    }

    /// Membership in `𝔛_∞` via alternating products: the top-level factors
    /// alternate between nonempty letter strings and single brackets whose
    /// bodies are again in `𝔛_∞`.
    fn in_lambda(w: &Word) -> bool {
        let f = w.factorize();
        let inner_blocks_nonempty = f.blocks.len() <= 2
            || f.blocks[1..f.blocks.len() - 1]
                .iter()
                .all(|b| !b.is_empty());
        inner_blocks_nonempty && f.brackets.iter().all(|(_, body)| in_lambda(body))
    }

    #[test]
    fn redex_search() {
        let w = dot(A).concat(&dot(B));
        let r = find_redex(&w).unwrap();
        assert!(r.context.is_hole());
        let x = Word::letter(X);
        assert!(find_redex(&x.concat(&dot(A)).concat(&x).concat(&dot(B))).is_none());
        let nested_word = br(C, w.clone());
        let r = find_redex(&nested_word).unwrap();
        assert_eq!(r.context, StarWord::hole().wrap(C));
        assert_eq!(r.context.substitute(&r.word()), nested_word);
    }

    #[test]
    fn rewrite_examples() {
        let sys = system();
        let expected = LinComb::basis(br(A, dot(B)))
            + LinComb::basis(br(B, dot(A)))
            + LinComb::term(dot(A), q(-1));
        assert_eq!(sys.rewrite_once(&dot(A).concat(&dot(B))).unwrap(), expected);

        let (x, y) = (Word::letter(X), Word::letter(Y));
        let w = x.concat(&dot(A)).concat(&dot(B)).concat(&y);
        let wrap = |m: &Word| x.concat(m).concat(&y);
        assert_eq!(sys.rewrite_once(&w).unwrap(), expected.map_keys(wrap));
        assert_eq!(sys.rewrite_once(&x), Err(RewriteError::Irreducible));
    }

    #[test]
    fn normal_form_examples() {
        let sys = system();
        let nf = sys.normal_form_word(&dot(A).concat(&dot(B)));
        assert_eq!(nf, sys.rewrite_once(&dot(A).concat(&dot(B))).unwrap());
        let mrbw = Word::letter(X)
            .concat(&br(A, Word::letter(X)))
            .concat(&Word::letter(Y));
        assert_eq!(sys.normal_form_word(&mrbw), LinComb::basis(mrbw));
    }

    #[test]
    fn without_weight_term_drops_the_last_summand() {
        let sys = RewriteSystem::without_weight_term(Signature::default_corpus());
        assert_eq!(sys.rewrite_once(&dot(A).concat(&dot(B))).unwrap().len(), 2);
    }

    #[test]
    fn is_mrbw_examples_and_agreement_with_lambda_oracle() {
        assert!(!is_mrbw(&dot(A).concat(&dot(B))));
        let x = Word::letter(X);
        assert!(is_mrbw(
            &x.concat(&br(A, x.clone())).concat(&Word::letter(Y))
        ));
        for w in enumerate_words(&Signature::default_corpus(), 4) {
            assert_eq!(is_mrbw(&w), in_lambda(&w), "{w:?}");
            assert_eq!(
                is_mrbw(&w),
                find_redex(&w).is_none() && find_innermost_redex(&w).is_none()
            );
        }
    }

    #[test]
    fn every_step_decreases_and_strategies_agree() {
        let sys = RewriteSystem::new(Signature::default_corpus());
        for w in enumerate_words(sys.signature(), 3) {
            if let Ok(out) = sys.rewrite_once(&w) {
                assert!(out.basis_elements().all(|m| *m < w));
            }
            let v = LinComb::basis(w);
            let nf = sys.normal_form(&v);
            assert_eq!(nf, sys.reduce(&v, Strategy::SmallestFirst, &mut |_| {}));
            assert!(nf.basis_elements().all(is_mrbw));
            assert_eq!(sys.normal_form(&nf), nf);
        }
    }
}
