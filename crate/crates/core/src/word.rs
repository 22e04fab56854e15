//! Ω-bracketed words, ⋆-contexts and their combinatorial statistics.
//!
//! A [`Word`] is a finite sequence of atoms, each either a generator letter or
//! an operator-labelled bracket around another word. The empty sequence is the
//! identity word `1`. Equality and hashing are structural; the total order is
//! the monomial order `≤db` from [`crate::order`].

use std::collections::HashMap;

use crate::signature::{Letter, Operator, Signature, SignatureError};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Atom {
    Letter(Letter),
    Bracket(Operator, Word),
}

impl Atom {
    pub fn is_bracket(&self) -> bool {
        matches!(self, Atom::Bracket(..))
    }

    /// Letters plus brackets at every nesting level.
    pub fn total_degree(&self) -> usize {
        match self {
            Atom::Letter(_) => 1,
            Atom::Bracket(_, body) => 1 + body.total_degree(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word {
    atoms: Vec<Atom>,
}

impl Word {
    /// The identity word `1`.
    pub fn one() -> Self {
        Word::default()
    }

    pub fn from_atoms(atoms: Vec<Atom>) -> Self {
        Word { atoms }
    }

    pub fn letter(letter: Letter) -> Self {
        Word {
            atoms: vec![Atom::Letter(letter)],
        }
    }

    /// A bracket-free word spelled by `letters`.
    pub fn letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        Word {
            atoms: letters.into_iter().map(Atom::Letter).collect(),
        }
    }

    /// `⌊body⌋_op`.
    pub fn bracket(op: Operator, body: Word) -> Self {
        Word {
            atoms: vec![Atom::Bracket(op, body)],
        }
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn into_atoms(self) -> Vec<Atom> {
        self.atoms
    }

    pub fn is_one(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut atoms = Vec::with_capacity(self.atoms.len() + other.atoms.len());
        atoms.extend_from_slice(&self.atoms);
        atoms.extend_from_slice(&other.atoms);
        Word { atoms }
    }

    /// Number of top-level atoms (`|w|`).
    pub fn breadth(&self) -> usize {
        self.atoms.len()
    }

    /// Minimal `n` with `w ∈ 𝔐_n`.
    pub fn depth(&self) -> usize {
        self.atoms
            .iter()
            .map(|a| match a {
                Atom::Letter(_) => 0,
                Atom::Bracket(_, body) => body.depth() + 1,
            })
            .max()
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> usize {
        self.atoms.iter().map(Atom::total_degree).sum()
    }

    /// Number of brackets at every nesting level (`deg_P`).
    pub fn p_degree(&self) -> usize {
        self.atoms
            .iter()
            .map(|a| match a {
                Atom::Letter(_) => 0,
                Atom::Bracket(_, body) => 1 + body.p_degree(),
            })
            .sum()
    }

    /// Number of top-level brackets (`bre_P`), i.e. `r` in the canonical factorization.
    pub fn p_breadth(&self) -> usize {
        self.atoms.iter().filter(|a| a.is_bracket()).count()
    }

    pub fn is_bracket_free(&self) -> bool {
        !self.atoms.iter().any(Atom::is_bracket)
    }

    /// Letter count of a bracket-free word.
    pub fn x_degree(&self) -> Result<usize, WordError> {
        if self.is_bracket_free() {
            Ok(self.atoms.len())
        } else {
            Err(WordError::NotBracketFree)
        }
    }

    pub fn statistics(&self) -> Statistics {
        Statistics {
            breadth: self.breadth(),
            total_degree: self.total_degree(),
            p_degree: self.p_degree(),
            p_breadth: self.p_breadth(),
            x_degree: self.x_degree().ok(),
        }
    }

    /// The unique factorization `u_0 ⌊ů_1⌋_{α_1} u_1 ⋯ ⌊ů_r⌋_{α_r} u_r`.
    pub fn factorize(&self) -> Factorization {
        let mut blocks = vec![Vec::new()];
        let mut brackets = Vec::new();
        for atom in &self.atoms {
            match atom {
                Atom::Letter(l) => blocks.last_mut().expect("nonempty").push(*l),
                Atom::Bracket(op, body) => {
                    brackets.push((*op, body.clone()));
                    blocks.push(Vec::new());
                }
            }
        }
        Factorization { blocks, brackets }
    }

    /// Checks every symbol against `sig`.
    pub fn validate(&self, sig: &Signature) -> Result<(), SignatureError> {
        for atom in &self.atoms {
            match atom {
                Atom::Letter(l) => sig.check_letter(*l)?,
                Atom::Bracket(op, body) => {
                    sig.check_operator(*op)?;
                    body.validate(sig)?;
                }
            }
        }
        Ok(())
    }

    /// All `(q, v)` with `q|_v = self` where `v` is a nonempty run of sibling
    /// atoms, plus the trivial pair `(⋆, self)`.
    pub fn contexts(&self) -> Vec<(StarWord, Word)> {
        let mut out = vec![(StarWord::hole(), self.clone())];
        collect_contexts(&self.atoms, true, &mut |q, v| out.push((q, v)));
        out
    }
}

/// Calls `emit(context, v)` for each nonempty sibling run of `atoms` and,
/// recursively, of every bracket body. At the top level the full run is
/// skipped since it duplicates the trivial pair.
fn collect_contexts(atoms: &[Atom], top: bool, emit: &mut dyn FnMut(StarWord, Word)) {
    let n = atoms.len();
    for start in 0..n {
        for end in start + 1..=n {
            if top && start == 0 && end == n {
                continue;
            }
            let q = StarWord {
                before: atoms[..start].to_vec(),
                focus: Focus::Hole,
                after: atoms[end..].to_vec(),
            };
            emit(q, Word::from_atoms(atoms[start..end].to_vec()));
        }
    }
    for (i, atom) in atoms.iter().enumerate() {
        if let Atom::Bracket(op, body) = atom {
            collect_contexts(&body.atoms, false, &mut |inner, v| {
                let q = StarWord {
                    before: atoms[..i].to_vec(),
                    focus: Focus::Inside(*op, Box::new(inner)),
                    after: atoms[i + 1..].to_vec(),
                };
                emit(q, v)
            });
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WordError {
    #[error("x-degree is only defined for bracket-free words")]
    NotBracketFree,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Statistics {
    pub breadth: usize,
    pub total_degree: usize,
    pub p_degree: usize,
    pub p_breadth: usize,
    /// `None` when the word contains a bracket.
    pub x_degree: Option<usize>,
}

/// Outer letter blocks `u_0..u_r` separated by the brackets `⌊ů_i⌋_{α_i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub blocks: Vec<Vec<Letter>>,
    pub brackets: Vec<(Operator, Word)>,
}

impl Factorization {
    pub fn reassemble(&self) -> Word {
        let mut atoms = Vec::new();
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                let (op, body) = &self.brackets[i - 1];
                atoms.push(Atom::Bracket(*op, body.clone()));
            }
            atoms.extend(block.iter().copied().map(Atom::Letter));
        }
        Word::from_atoms(atoms)
    }
}

/// A bracketed word with exactly one hole `⋆`.
///
/// The hole sits either directly between `before` and `after`, or inside a
/// bracket placed there; a single hole is guaranteed by construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StarWord {
    before: Vec<Atom>,
    focus: Focus,
    after: Vec<Atom>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Focus {
    Hole,
    Inside(Operator, Box<StarWord>),
}

impl StarWord {
    /// The identity context `⋆`.
    pub fn hole() -> Self {
        StarWord {
            before: Vec::new(),
            focus: Focus::Hole,
            after: Vec::new(),
        }
    }

    /// `prefix ⋆ suffix`.
    pub fn around(prefix: &Word, suffix: &Word) -> Self {
        StarWord {
            before: prefix.atoms.clone(),
            focus: Focus::Hole,
            after: suffix.atoms.clone(),
        }
    }

    /// `prefix ⌊inner⌋_op suffix`.
    pub fn nest(prefix: &Word, op: Operator, inner: StarWord, suffix: &Word) -> Self {
        StarWord {
            before: prefix.atoms.clone(),
            focus: Focus::Inside(op, Box::new(inner)),
            after: suffix.atoms.clone(),
        }
    }

    /// `⌊self⌋_op`.
    pub fn wrap(self, op: Operator) -> Self {
        StarWord::nest(&Word::one(), op, self, &Word::one())
    }

    /// `prefix · self · suffix` at the top level.
    pub fn extend(mut self, prefix: &Word, suffix: &Word) -> Self {
        let mut before = prefix.atoms.clone();
        before.append(&mut self.before);
        self.before = before;
        self.after.extend_from_slice(&suffix.atoms);
        self
    }

    /// `q|_v`: splices the atoms of `v` into the hole.
    pub fn substitute(&self, v: &Word) -> Word {
        let mut atoms = self.before.clone();
        match &self.focus {
            Focus::Hole => atoms.extend_from_slice(&v.atoms),
            Focus::Inside(op, inner) => atoms.push(Atom::Bracket(*op, inner.substitute(v))),
        }
        atoms.extend_from_slice(&self.after);
        Word::from_atoms(atoms)
    }

    /// Depth and total degree, counting `⋆` as a letter.
    pub fn depth(&self) -> usize {
        let outer =
            Word::from_atoms(self.before.iter().chain(&self.after).cloned().collect()).depth();
        match &self.focus {
            Focus::Hole => outer,
            Focus::Inside(_, inner) => outer.max(inner.depth() + 1),
        }
    }

    /// Total degree of the surrounding material, not counting `⋆`.
    pub fn total_degree(&self) -> usize {
        let outer: usize = self
            .before
            .iter()
            .chain(&self.after)
            .map(Atom::total_degree)
            .sum();
        match &self.focus {
            Focus::Hole => outer,
            Focus::Inside(_, inner) => outer + 1 + inner.total_degree(),
        }
    }

    pub fn is_hole(&self) -> bool {
        self.before.is_empty() && self.after.is_empty() && self.focus == Focus::Hole
    }

    /// Renders with `render_word` for the surrounding atoms and `*` for the hole.
    pub fn render(
        &self,
        render_word: &dyn Fn(&Word) -> String,
        name_op: &dyn Fn(Operator) -> String,
    ) -> String {
        let mut parts = Vec::new();
        if !self.before.is_empty() {
            parts.push(render_word(&Word::from_atoms(self.before.clone())));
        }
        parts.push(match &self.focus {
            Focus::Hole => "*".to_string(),
            Focus::Inside(op, inner) => {
                format!("[{}]_{}", inner.render(render_word, name_op), name_op(*op))
            }
        });
        if !self.after.is_empty() {
            parts.push(render_word(&Word::from_atoms(self.after.clone())));
        }
        parts.join(" ")
    }
}

/// Every word with `total_degree ≤ max_total_degree`, each once, sorted by `≤db`.
pub fn enumerate_words(sig: &Signature, max_total_degree: usize) -> Vec<Word> {
    let mut table = WordTable::new(sig);
    let mut all: Vec<Word> = (0..=max_total_degree)
        .flat_map(|d| table.exact(d).to_vec())
        .collect();
    all.sort();
    all
}

/// Words of each exact total degree, built by unrolling the grammar
/// `word := atom word | 1`, `atom := letter | ⌊word⌋_ω`.
struct WordTable<'a> {
    sig: &'a Signature,
    words: HashMap<usize, Vec<Word>>,
    atoms: HashMap<usize, Vec<Atom>>,
}

impl<'a> WordTable<'a> {
    fn new(sig: &'a Signature) -> Self {
        WordTable {
            sig,
            words: HashMap::new(),
            atoms: HashMap::new(),
        }
    }

    fn exact(&mut self, degree: usize) -> &[Word] {
        if !self.words.contains_key(&degree) {
            let words = if degree == 0 {
                vec![Word::one()]
            } else {
                let mut out = Vec::new();
                for head in 1..=degree {
                    let atoms = self.atoms_of(head).to_vec();
                    let tails = self.exact(degree - head).to_vec();
                    for atom in &atoms {
                        for tail in &tails {
                            let mut v = Vec::with_capacity(tail.atoms.len() + 1);
                            v.push(atom.clone());
                            v.extend_from_slice(&tail.atoms);
                            out.push(Word::from_atoms(v));
                        }
                    }
                }
                out
            };
            self.words.insert(degree, words);
        }
        &self.words[&degree]
    }

    fn atoms_of(&mut self, degree: usize) -> &[Atom] {
        if !self.atoms.contains_key(&degree) {
            let mut out = Vec::new();
            if degree == 1 {
                out.extend(self.sig.letters().map(Atom::Letter));
            }
            if degree >= 1 {
                let bodies = self.exact(degree - 1).to_vec();
                for op in self.sig.operators().collect::<Vec<_>>() {
                    out.extend(bodies.iter().map(|b| Atom::Bracket(op, b.clone())));
                }
            }
            self.atoms.insert(degree, out);
        }
        &self.atoms[&degree]
    }
}

/// All ⋆-contexts with depth ≤ `max_depth` and surrounding total degree ≤
/// `max_degree` (the hole counts as a depth-0 letter and adds no degree).
pub fn enumerate_star_words(sig: &Signature, max_depth: usize, max_degree: usize) -> Vec<StarWord> {
    // A context of surrounding degree d corresponds to a word of degree d + 1
    // over X ⊔ {⋆} with exactly one ⋆; build it from words of the real alphabet.
    let words = enumerate_words(sig, max_degree);
    let mut out = Vec::new();
    star_words_into(&words, sig, max_depth, max_degree, &mut out);
    out.retain(|q| q.depth() <= max_depth && q.total_degree() <= max_degree);
    out.sort_by(|a, b| {
        (a.total_degree(), a.depth())
            .cmp(&(b.total_degree(), b.depth()))
            .then_with(|| format!("{a:?}").cmp(&format!("{b:?}")))
    });
    out.dedup();
    out
}

fn star_words_into(
    words: &[Word],
    sig: &Signature,
    max_depth: usize,
    budget: usize,
    out: &mut Vec<StarWord>,
) {
    // prefix ⋆ suffix
    for prefix in words {
        for suffix in words {
            if prefix.total_degree() + suffix.total_degree() <= budget {
                out.push(StarWord::around(prefix, suffix));
            }
        }
    }
    if max_depth == 0 || budget == 0 {
        return;
    }
    // prefix ⌊inner⌋_ω suffix
    let mut inner = Vec::new();
    star_words_into(words, sig, max_depth - 1, budget - 1, &mut inner);
    for prefix in words {
        for suffix in words {
            let outer = prefix.total_degree() + suffix.total_degree();
            if outer + 1 > budget {
                continue;
            }
            for q in &inner {
                if outer + 1 + q.total_degree() > budget {
                    continue;
                }
                for op in sig.operators() {
                    out.push(StarWord::nest(prefix, op, q.clone(), suffix));
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig1() -> Signature {
        Signature::standard(1, &[crate::linear::q(1)]).unwrap()
    }

    const X: Letter = Letter(0);
    const Y: Letter = Letter(1);
    const Z: Letter = Letter(2);
    const A: Operator = Operator(0);
    const B: Operator = Operator(1);

    fn x() -> Word {
        Word::letter(X)
    }

    #[test]
    fn concat_identity_and_append() {
        let w = Word::bracket(A, x());
        assert_eq!(Word::one().concat(&w), w);
        assert_eq!(w.concat(&Word::one()), w);
        let xy = x().concat(&Word::letter(Y));
        assert_eq!(xy, Word::letters([X, Y]));
        let lhs = x().concat(&Word::bracket(A, Word::letter(Y)));
        let got = lhs.concat(&Word::bracket(B, Word::one()));
        assert_eq!(got.atoms().len(), 3);
        assert_eq!(got.atoms()[2], Atom::Bracket(B, Word::one()));
    }

    #[test]
    fn depth_examples() {
        assert_eq!(Word::one().depth(), 0);
        assert_eq!(Word::bracket(A, Word::one()).depth(), 1);
        let inner = x().concat(&Word::bracket(A, Word::letter(Y)));
        assert_eq!(Word::bracket(B, inner).depth(), 2);
    }

    /// `⌊x y ⌊x⌋_a z⌋_a` has total degree 6.
    #[test]
    fn total_degree_counts_letters_and_brackets() {
        let body = Word::letters([X, Y])
            .concat(&Word::bracket(A, x()))
            .concat(&Word::letter(Z));
        assert_eq!(Word::bracket(A, body).total_degree(), 6);
    }

    fn p_breadth_example() -> Word {
        // x0 ⌊x1⌋_α1 x2 ⌊x3 ⌊x4⌋_α3⌋_α2 x5 x6 over a single letter and three operators.
        let (a1, a2, a3) = (Operator(0), Operator(1), Operator(2));
        let inner = x().concat(&Word::bracket(a3, x()));
        x().concat(&Word::bracket(a1, x()))
            .concat(&x())
            .concat(&Word::bracket(a2, inner))
            .concat(&Word::letters([X, X]))
    }

    #[test]
    fn p_degree_and_p_breadth() {
        let stats = p_breadth_example().statistics();
        assert_eq!(stats.p_degree, 3);
        assert_eq!(stats.p_breadth, 2);
        assert_eq!(stats.x_degree, None);
        assert_eq!(
            Word::one().statistics(),
            Statistics {
                breadth: 0,
                total_degree: 0,
                p_degree: 0,
                p_breadth: 0,
                x_degree: Some(0)
            }
        );
        assert_eq!(
            p_breadth_example().x_degree(),
            Err(WordError::NotBracketFree)
        );
    }

    #[test]
    fn factorization_matches_reference_grouping() {
        let w = p_breadth_example();
        let f = w.factorize();
        assert_eq!(f.brackets.len(), 2);
        assert_eq!(
            f.brackets[1].1,
            x().concat(&Word::bracket(Operator(2), x()))
        );
        assert_eq!(f.blocks, vec![vec![X], vec![X], vec![X, X]]);
        assert_eq!(f.reassemble(), w);

        let one = Word::one().factorize();
        assert_eq!(one.blocks, vec![Vec::<Letter>::new()]);
        assert!(one.brackets.is_empty());

        let simple = x()
            .concat(&Word::bracket(A, Word::letter(Y)))
            .concat(&Word::letter(Z))
            .factorize();
        assert_eq!(simple.blocks, vec![vec![X], vec![Z]]);
        assert_eq!(simple.brackets, vec![(A, Word::letter(Y))]);
    }

    #[test]
    fn substitute_splices() {
        let w = Word::letters([X, Y]);
        assert_eq!(StarWord::hole().substitute(&w), w);
        assert_eq!(
            StarWord::hole().wrap(A).substitute(&w),
            Word::bracket(A, w.clone())
        );
        let q = StarWord::around(&x(), &Word::bracket(B, Word::letter(Y)));
        let got = q.substitute(&Word::bracket(A, x()));
        let expected = x()
            .concat(&Word::bracket(A, x()))
            .concat(&Word::bracket(B, Word::letter(Y)));
        assert_eq!(got, expected);
    }

    #[test]
    fn contexts_of_a_letter_is_only_the_trivial_pair() {
        let cs = x().contexts();
        assert_eq!(cs, vec![(StarWord::hole(), x())]);
        assert_eq!(
            Word::one().contexts(),
            vec![(StarWord::hole(), Word::one())]
        );
    }

    #[test]
    fn contexts_of_two_letters() {
        let w = Word::letters([X, Y]);
        let cs = w.contexts();
        assert!(cs.contains(&(StarWord::around(&Word::one(), &Word::letter(Y)), x())));
        assert!(cs.contains(&(StarWord::around(&x(), &Word::one()), Word::letter(Y))));
        assert!(cs.contains(&(StarWord::hole(), w.clone())));
        assert_eq!(cs.len(), 3);
        let bracketed = Word::bracket(A, x());
        assert!(bracketed
            .contexts()
            .contains(&(StarWord::hole().wrap(A), x())));
    }

    #[test]
    fn enumerate_small_degrees() {
        let sig = sig1();
        assert_eq!(enumerate_words(&sig, 0), vec![Word::one()]);
        assert_eq!(
            enumerate_words(&sig, 1),
            vec![Word::one(), x(), Word::bracket(A, Word::one())]
        );
        assert_eq!(enumerate_words(&sig, 2).len(), 9);
    }

    #[test]
    fn star_word_corpus_has_hole_and_respects_bounds() {
        let sig = Signature::default_corpus();
        let qs = enumerate_star_words(&sig, 2, 2);
        assert!(qs[0].is_hole());
        assert!(qs.iter().all(|q| q.depth() <= 2 && q.total_degree() <= 2));
        // ⌊⌊⋆⌋_a⌋_b is depth 2, degree 2.
        let deep = StarWord::hole().wrap(A).wrap(B);
        assert!(qs.contains(&deep));
        let mut unique = qs.clone();
        unique.dedup();
        assert_eq!(unique.len(), qs.len());
    }
}
