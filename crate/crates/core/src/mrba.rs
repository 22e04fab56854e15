//! The free matching Rota-Baxter algebra on matching Rota-Baxter words.
//!
//! Words with no two adjacent brackets at any level form a basis. The product
//! `⋄` is computed natively by recursion on the sum of depths; it never goes
//! through the rewriting engine, which serves as an independent oracle.

use crate::forest::{theta, theta_inv, Decoration, Forest};
use crate::linear::{Coefficient, LinComb};
use crate::rewrite::{is_mrbw, RewriteSystem};
use crate::signature::{Operator, Signature};
use crate::word::{Atom, Word};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MrbaError {
    #[error("the empty word has no alternating decomposition")]
    Unit,
    #[error("the word has adjacent brackets and is not a basis element")]
    NotMrbw,
}

/// The free matching Rota-Baxter algebra over a signature.
#[derive(Clone, Debug)]
pub struct Mrba {
    sig: Signature,
    rewriting: RewriteSystem,
}

/// Factors of the alternating decomposition, i.e. the top-level atoms.
pub fn alternating_decomposition(w: &Word) -> Result<Vec<Atom>, MrbaError> {
    if w.is_one() {
        return Err(MrbaError::Unit);
    }
    if !is_mrbw(w) {
        return Err(MrbaError::NotMrbw);
    }
    Ok(w.atoms().to_vec())
}

impl Mrba {
    pub fn new(sig: Signature) -> Self {
        Mrba {
            rewriting: RewriteSystem::new(sig.clone()),
            sig,
        }
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn rewriting(&self) -> &RewriteSystem {
        &self.rewriting
    }

    /// `w ⋄ w′`, checking that both factors are basis elements.
    pub fn diamond(&self, w: &Word, w2: &Word) -> Result<LinComb<Word>, MrbaError> {
        if !is_mrbw(w) || !is_mrbw(w2) {
            return Err(MrbaError::NotMrbw);
        }
        Ok(self.diamond_words(w, w2))
    }

    /// `w ⋄ w′` for basis elements; the inputs are not re-checked.
    pub fn diamond_words(&self, w: &Word, w2: &Word) -> LinComb<Word> {
        if w.is_one() {
            return LinComb::basis(w2.clone());
        }
        if w2.is_one() || w.depth() + w2.depth() == 0 {
            return LinComb::basis(w.concat(w2));
        }
        let (last, prefix) = w.atoms().split_last().expect("w is not the unit");
        let (first, suffix) = w2.atoms().split_first().expect("w2 is not the unit");
        let (Atom::Bracket(alpha, wb), Atom::Bracket(beta, wb2)) = (last, first) else {
            return LinComb::basis(w.concat(w2));
        };
        let (alpha, beta) = (*alpha, *beta);
        let last = Word::from_atoms(vec![last.clone()]);
        let first = Word::from_atoms(vec![first.clone()]);
        let mut core = self.p_op(alpha, &self.diamond_words(wb, &first));
        core += self.p_op(beta, &self.diamond_words(&last, wb2));
        core.add_scaled(
            self.sig.weight(beta),
            &self.p_op(alpha, &self.diamond_words(wb, wb2)),
        );
        let (prefix, suffix) = (
            Word::from_atoms(prefix.to_vec()),
            Word::from_atoms(suffix.to_vec()),
        );
        core.map_keys(|m| prefix.concat(m).concat(&suffix))
    }

    /// Bilinear `⋄` on combinations of basis words.
    pub fn product(&self, u: &LinComb<Word>, v: &LinComb<Word>) -> LinComb<Word> {
        u.product(v, |a, b| self.diamond_words(a, b))
    }

    /// `P_ω`, bracketing each term.
    pub fn p_op(&self, op: Operator, v: &LinComb<Word>) -> LinComb<Word> {
        v.map_keys(|w| Word::bracket(op, w.clone()))
    }

    /// `ψ = θ ∘ φ ∘ θ⁻¹` on forests.
    pub fn psi(&self, v: &LinComb<Forest>) -> LinComb<Forest> {
        v.map_basis(|f| {
            self.rewriting
                .normal_form_word(&theta_inv(f))
                .map_keys(theta)
        })
    }

    /// `ψ` computed as the operated-algebra map fixing leaves: grafts commute
    /// with `ψ` and tree sequences multiply under `⋄_l`. Agrees with
    /// [`Mrba::psi`]; kept as an independent route.
    pub fn psi_homomorphic(&self, f: &Forest) -> LinComb<Forest> {
        let mut acc = LinComb::basis(Forest::one());
        for tree in f.trees() {
            let image = match tree.decoration() {
                Decoration::Letter(_) => LinComb::basis(Forest::tree(tree.clone())),
                Decoration::Operator(op) => self
                    .psi_homomorphic(tree.children())
                    .map_keys(|g| g.grafted(op)),
            };
            acc = acc.product(&image, |a, b| self.diamond_forest(a, b));
        }
        acc
    }

    /// `F ⋄_l F′`, transported through `θ`.
    pub fn diamond_forest(&self, f: &Forest, f2: &Forest) -> LinComb<Forest> {
        self.diamond_words(&theta_inv(f), &theta_inv(f2))
            .map_keys(theta)
    }

    /// `x ≺_ω y = x P_ω(y) + λ_ω xy`.
    pub fn dendriform_prec(
        &self,
        op: Operator,
        x: &LinComb<Word>,
        y: &LinComb<Word>,
    ) -> LinComb<Word> {
        let mut out = self.product(x, &self.p_op(op, y));
        out.add_scaled(self.sig.weight(op), &self.product(x, y));
        out
    }

    /// `x ≻_ω y = P_ω(x) y`.
    pub fn dendriform_succ(
        &self,
        op: Operator,
        x: &LinComb<Word>,
        y: &LinComb<Word>,
    ) -> LinComb<Word> {
        self.product(&self.p_op(op, x), y)
    }

    /// `x ∗_ω y = P_ω(x) y − y P_ω(x) − λ_ω yx`.
    pub fn pre_lie(&self, op: Operator, x: &LinComb<Word>, y: &LinComb<Word>) -> LinComb<Word> {
        let px = self.p_op(op, x);
        let mut out = self.product(&px, y);
        out -= &self.product(y, &px);
        out.add_scaled(&-self.sig.weight(op), &self.product(y, x));
        out
    }

    /// `x ⋆_ω y = x P_ω(y) + P_ω(x) y + λ_ω xy`.
    pub fn double_product(
        &self,
        op: Operator,
        x: &LinComb<Word>,
        y: &LinComb<Word>,
    ) -> LinComb<Word> {
        self.dendriform_prec(op, x, y) + self.dendriform_succ(op, x, y)
    }

    /// `Σ_ω k_ω P_ω(v)`; `k` is indexed by operator position, missing entries are 0.
    pub fn combined_operator(&self, k: &[Coefficient], v: &LinComb<Word>) -> LinComb<Word> {
        let mut out = LinComb::zero();
        for (op, kw) in self.sig.operators().zip(k) {
            out.add_scaled(kw, &self.p_op(op, v));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::q;
    use crate::signature::Letter;

    const X: Letter = Letter(0);
    const Y: Letter = Letter(1);
    const A: Operator = Operator(0);
    const B: Operator = Operator(1);

    fn alg() -> Mrba {
        Mrba::new(Signature::standard(2, &[q(1), q(-1)]).unwrap())
    }

    fn dot(op: Operator) -> Word {
        Word::bracket(op, Word::one())
    }

    fn b(w: &Word) -> LinComb<Word> {
        LinComb::basis(w.clone())
    }

    #[test]
    fn decomposition_examples() {
        let (x, y) = (Word::letter(X), Word::letter(Y));
        let w = x.concat(&Word::bracket(A, y.clone())).concat(&x);
        assert_eq!(alternating_decomposition(&w).unwrap().len(), 3);
        assert_eq!(
            alternating_decomposition(&Word::one()),
            Err(MrbaError::Unit)
        );
        assert_eq!(
            alternating_decomposition(&dot(A).concat(&dot(B))),
            Err(MrbaError::NotMrbw)
        );
    }

    #[test]
    fn diamond_examples() {
        let m = alg();
        let x = Word::letter(X);
        assert_eq!(m.diamond(&Word::one(), &x).unwrap(), b(&x));
        assert_eq!(m.diamond(&dot(A), &Word::one()).unwrap(), b(&dot(A)));
        let expected = b(&Word::bracket(A, dot(B))) + b(&Word::bracket(B, dot(A))) - b(&dot(A));
        assert_eq!(m.diamond(&dot(A), &dot(B)).unwrap(), expected);
        let lhs = x.concat(&dot(A));
        let rhs = dot(B).concat(&x);
        let wrapped = expected.map_keys(|t| x.concat(t).concat(&x));
        assert_eq!(m.diamond(&lhs, &rhs).unwrap(), wrapped);
        assert_eq!(
            m.diamond(&dot(A).concat(&dot(B)), &x),
            Err(MrbaError::NotMrbw)
        );
        let y = Word::letter(Y);
        assert_eq!(m.diamond(&x, &y).unwrap(), b(&x.concat(&y)));
    }

    #[test]
    fn p_op_examples() {
        let m = alg();
        assert_eq!(m.p_op(A, &b(&Word::one())), b(&dot(A)));
        let (x, y) = (Word::letter(X), Word::letter(Y));
        assert_eq!(
            m.p_op(A, &(b(&x) + b(&y))),
            b(&Word::bracket(A, x)) + b(&Word::bracket(A, y))
        );
        let nested = m.p_op(B, &b(&dot(A)));
        assert!(nested.basis_elements().all(is_mrbw));
    }

    #[test]
    fn derived_products_on_letters() {
        let m = alg();
        let (x, y) = (Word::letter(X), Word::letter(Y));
        let expected = b(&x.concat(&Word::bracket(A, y.clone()))) + b(&x.concat(&y));
        assert_eq!(m.dendriform_prec(A, &b(&x), &b(&y)), expected);
        assert_eq!(
            m.dendriform_succ(A, &b(&x), &b(&y)),
            b(&Word::bracket(A, x.clone()).concat(&y))
        );
        let expected = b(&Word::bracket(A, x.clone()).concat(&y))
            - b(&y.concat(&Word::bracket(A, x.clone())))
            - b(&y.concat(&x));
        assert_eq!(m.pre_lie(A, &b(&x), &b(&y)), expected);
        let one = b(&Word::one());
        assert_eq!(m.pre_lie(A, &one, &one), LinComb::term(Word::one(), q(-1)));
    }

    #[test]
    fn combined_operator_with_indicator_is_p_op() {
        let m = alg();
        let v = b(&Word::letter(X)) + b(&dot(B));
        assert_eq!(m.combined_operator(&[q(1)], &v), m.p_op(A, &v));
        assert_eq!(m.combined_operator(&[q(0), q(1)], &v), m.p_op(B, &v));
    }

    #[test]
    fn psi_examples() {
        let m = alg();
        let leaf = LinComb::basis(theta(&Word::letter(X)));
        assert_eq!(m.psi(&leaf), leaf);
        let pair = theta(&dot(A).concat(&dot(B)));
        let expected = m.diamond_words(&dot(A), &dot(B)).map_keys(theta);
        assert_eq!(m.psi(&LinComb::basis(pair)), expected);
        assert_eq!(m.diamond_forest(&theta(&dot(A)), &theta(&dot(B))), expected);
        let pair = theta(&dot(A).concat(&dot(B)));
        assert_eq!(m.psi_homomorphic(&pair), expected);
    }
}
