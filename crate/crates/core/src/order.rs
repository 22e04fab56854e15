//! The degree-lexicographic order on `M(X)` and its extension `≤db` to all
//! Ω-bracketed words.
//!
//! `u ≤db v` compares, in turn: the number of brackets at every level, the
//! number of top-level brackets, and finally the tuple
//! `(α_1, ů_1, …, α_r, ů_r, u_0, …, u_r)` of the canonical factorization
//! lexicographically, with operators in signature order, bracket bodies
//! recursively and outer letter blocks by degree-lexicographic order.

use std::cmp::Ordering;

use crate::forest::{Decoration, Tree};
use crate::signature::{Letter, Operator};
use crate::word::{Atom, Word, WordError};

/// Uniform read-only view over the atom sequence of a word or a forest.
///
/// A forest is read through the inverse of the word/forest isomorphism: a leaf
/// decorated by a letter is a letter, and any operator-decorated vertex is a
/// bracket around its children.
#[derive(Clone, Copy)]
pub(crate) enum Seq<'a> {
    Word(&'a [Atom]),
    Forest(&'a [Tree]),
}

#[derive(Clone, Copy)]
pub(crate) enum Item<'a> {
    Letter(Letter),
    Bracket(Operator, Seq<'a>),
}

impl<'a> Seq<'a> {
    fn len(self) -> usize {
        match self {
            Seq::Word(atoms) => atoms.len(),
            Seq::Forest(trees) => trees.len(),
        }
    }

    fn get(self, i: usize) -> Item<'a> {
        match self {
            Seq::Word(atoms) => match &atoms[i] {
                Atom::Letter(l) => Item::Letter(*l),
                Atom::Bracket(op, body) => Item::Bracket(*op, Seq::Word(body.atoms())),
            },
            Seq::Forest(trees) => match trees[i].decoration() {
                Decoration::Letter(l) => Item::Letter(l),
                Decoration::Operator(op) => {
                    Item::Bracket(op, Seq::Forest(trees[i].children().trees()))
                }
            },
        }
    }

    fn items(self) -> impl Iterator<Item = Item<'a>> {
        (0..self.len()).map(move |i| self.get(i))
    }

    fn letter(self, i: usize) -> Letter {
        match self.get(i) {
            Item::Letter(l) => l,
            Item::Bracket(..) => unreachable!("block positions hold letters"),
        }
    }

    fn p_degree(self) -> usize {
        self.items()
            .map(|i| match i {
                Item::Letter(_) => 0,
                Item::Bracket(_, body) => 1 + body.p_degree(),
            })
            .sum()
    }

    fn p_breadth(self) -> usize {
        self.items()
            .filter(|i| matches!(i, Item::Bracket(..)))
            .count()
    }

    fn brackets(self) -> impl Iterator<Item = (Operator, Seq<'a>)> {
        self.items().filter_map(|i| match i {
            Item::Bracket(op, body) => Some((op, body)),
            Item::Letter(_) => None,
        })
    }

    /// Index ranges of the outer letter blocks `u_0..u_r`.
    fn blocks(self) -> impl Iterator<Item = (usize, usize)> + 'a {
        let n = self.len();
        let mut start = Some(0);
        std::iter::from_fn(move || {
            let s = start?;
            let mut end = s;
            while end < n && matches!(self.get(end), Item::Letter(_)) {
                end += 1;
            }
            start = (end < n).then_some(end + 1);
            Some((s, end))
        })
    }
}

/// Degree-lexicographic comparison of letter strings; `1` is the minimum.
fn deg_lex_letters(u: &[Letter], v: &[Letter]) -> Ordering {
    u.len().cmp(&v.len()).then_with(|| u.cmp(v))
}

fn deg_lex_blocks(
    u: Seq<'_>,
    (su, eu): (usize, usize),
    v: Seq<'_>,
    (sv, ev): (usize, usize),
) -> Ordering {
    (eu - su).cmp(&(ev - sv)).then_with(|| {
        (su..eu)
            .map(|i| u.letter(i))
            .cmp((sv..ev).map(|i| v.letter(i)))
    })
}

pub(crate) fn compare_seq(u: Seq<'_>, v: Seq<'_>) -> Ordering {
    let ord = u
        .p_degree()
        .cmp(&v.p_degree())
        .then_with(|| u.p_breadth().cmp(&v.p_breadth()));
    if ord != Ordering::Equal {
        return ord;
    }
    for ((op_u, body_u), (op_v, body_v)) in u.brackets().zip(v.brackets()) {
        let ord = op_u.cmp(&op_v).then_with(|| compare_seq(body_u, body_v));
        if ord != Ordering::Equal {
            return ord;
        }
    }
    for (bu, bv) in u.blocks().zip(v.blocks()) {
        let ord = deg_lex_blocks(u, bu, v, bv);
        if ord != Ordering::Equal {
            return ord;
        }
    }
    Ordering::Equal
}

/// Flat encoding whose lexicographic order is `≤db`.
///
/// The encoding is `deg_P, bre_P, (α_i, key(ů_i))_i, (|u_j|, u_j)_j`. It is
/// self-delimiting, so no key is a proper prefix of another.
pub fn order_key(w: &Word) -> Vec<u32> {
    let mut out = Vec::with_capacity(4 * w.breadth() + 8);
    encode(w.atoms(), &mut out);
    out
}

fn encode(atoms: &[Atom], out: &mut Vec<u32>) -> u32 {
    let pos = out.len();
    out.extend([0, 0]);
    let (mut p_degree, mut p_breadth) = (0, 0);
    for a in atoms {
        if let Atom::Bracket(op, body) = a {
            p_breadth += 1;
            out.push(op.0);
            p_degree += 1 + encode(body.atoms(), out);
        }
    }
    let mut block = out.len();
    out.push(0);
    for a in atoms {
        match a {
            Atom::Letter(l) => {
                out.push(l.0);
                out[block] += 1;
            }
            Atom::Bracket(..) => {
                block = out.len();
                out.push(0);
            }
        }
    }
    out[pos] = p_degree;
    out[pos + 1] = p_breadth;
    p_degree
}

/// Degree-lexicographic order on bracket-free words.
pub fn compare_deg_lex(u: &Word, v: &Word) -> Result<Ordering, WordError> {
    if !u.is_bracket_free() || !v.is_bracket_free() {
        return Err(WordError::NotBracketFree);
    }
    let letters = |w: &Word| -> Vec<Letter> {
        w.atoms()
            .iter()
            .map(|a| match a {
                Atom::Letter(l) => *l,
                Atom::Bracket(..) => unreachable!("checked bracket-free"),
            })
            .collect()
    };
    Ok(deg_lex_letters(&letters(u), &letters(v)))
}

/// The monomial order `≤db`.
pub fn compare_db(u: &Word, v: &Word) -> Ordering {
    compare_seq(Seq::Word(u.atoms()), Seq::Word(v.atoms()))
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        compare_db(self, other)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The comparison data `(deg_P, bre_P, tuple)` of a word, compared lazily.
#[derive(Clone, Copy)]
pub struct OrderKey<'a> {
    word: &'a Word,
}

impl<'a> OrderKey<'a> {
    pub fn new(word: &'a Word) -> Self {
        OrderKey { word }
    }

    pub fn p_degree(&self) -> usize {
        self.word.p_degree()
    }

    pub fn p_breadth(&self) -> usize {
        self.word.p_breadth()
    }

    /// Operators and bracket bodies of the factorization, in order.
    pub fn brackets(&self) -> Vec<(Operator, &'a Word)> {
        self.word
            .atoms()
            .iter()
            .filter_map(|a| match a {
                Atom::Bracket(op, body) => Some((*op, body)),
                Atom::Letter(_) => None,
            })
            .collect()
    }

    pub fn blocks(&self) -> Vec<Vec<Letter>> {
        self.word.factorize().blocks
    }
}

impl PartialEq for OrderKey<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for OrderKey<'_> {}

impl PartialOrd for OrderKey<'_> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for OrderKey<'_> {
    fn cmp(&self, other: &Self) -> Ordering {
        compare_db(self.word, other.word)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signature::Signature;
    use crate::word::{enumerate_star_words, enumerate_words, StarWord};

    const X: Letter = Letter(0);
    const Y: Letter = Letter(1);
    const Z: Letter = Letter(2);
    const A: Operator = Operator(0);
    const B: Operator = Operator(1);

    fn br(op: Operator, w: Word) -> Word {
        Word::bracket(op, w)
    }

    #[test]
    fn deg_lex_examples() {
        let x = Word::letter(X);
        assert_eq!(compare_deg_lex(&Word::one(), &x), Ok(Ordering::Less));
        assert_eq!(compare_deg_lex(&x, &Word::letter(Y)), Ok(Ordering::Less));
        assert_eq!(
            compare_deg_lex(&Word::letters([X, Y]), &Word::letters([Y, X])),
            Ok(Ordering::Less)
        );
        assert_eq!(
            compare_deg_lex(&x, &br(A, Word::one())),
            Err(WordError::NotBracketFree)
        );
    }

    #[test]
    fn order_key_agrees_with_comparison() {
        let words = enumerate_words(
            &Signature::standard(2, &[crate::linear::q(1), crate::linear::q(-1)]).unwrap(),
            3,
        );
        for u in &words {
            for v in &words {
                assert_eq!(
                    order_key(u).cmp(&order_key(v)),
                    compare_db(u, v),
                    "{u:?} {v:?}"
                );
            }
        }
    }

    #[test]
    fn db_examples() {
        let x = Word::letter(X);
        let xyz = Word::letters([X, Y, Z]);
        assert_eq!(compare_db(&xyz, &br(A, Word::one())), Ordering::Less);
        assert_eq!(compare_db(&x, &br(A, x.clone())), Ordering::Less);
        // ⌊x⌊y⌋_b⌋_a < ⌊x⌋_a⌊y⌋_b: deg_P ties at 2, bre_P 1 < 2.
        let nested = br(A, x.concat(&br(B, Word::letter(Y))));
        let flat = br(A, x.clone()).concat(&br(B, Word::letter(Y)));
        assert_eq!(compare_db(&nested, &flat), Ordering::Less);
    }

    #[test]
    fn relation_leading_monomial_is_the_adjacent_pair() {
        let sig = Signature::default_corpus();
        let words = enumerate_words(&sig, 2);
        for x in &words {
            for y in &words {
                for a in sig.operators() {
                    for b in sig.operators() {
                        let lead = br(a, x.clone()).concat(&br(b, y.clone()));
                        let others = [
                            br(a, x.concat(&br(b, y.clone()))),
                            br(b, br(a, x.clone()).concat(y)),
                            br(a, x.concat(y)),
                        ];
                        for o in &others {
                            assert_eq!(compare_db(o, &lead), Ordering::Less);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn sorted_corpus_is_a_chain() {
        let sig = Signature::default_corpus();
        let words = enumerate_words(&sig, 3);
        for (i, u) in words.iter().enumerate() {
            assert_eq!(compare_db(u, u), Ordering::Equal);
            for v in &words[i + 1..] {
                assert_eq!(compare_db(u, v), Ordering::Less);
                assert_eq!(compare_db(v, u), Ordering::Greater);
            }
        }
    }

    #[test]
    fn monomial_property_on_small_corpus() {
        let sig = Signature::default_corpus();
        let words = enumerate_words(&sig, 2);
        let contexts = enumerate_star_words(&sig, 1, 1);
        for (i, u) in words.iter().enumerate() {
            for v in &words[i + 1..] {
                for q in &contexts {
                    assert_eq!(
                        compare_db(&q.substitute(u), &q.substitute(v)),
                        Ordering::Less
                    );
                }
            }
        }
        let u = Word::letter(X);
        assert!(u < br(A, u.clone()));
        assert!(Word::one() <= u);
        let q = StarWord::hole().wrap(B);
        assert!(q.substitute(&u) < q.substitute(&br(A, u.clone())));
    }

    #[test]
    fn order_key_agrees_with_compare_db() {
        let sig = Signature::default_corpus();
        let words = enumerate_words(&sig, 2);
        for u in &words {
            for v in &words {
                assert_eq!(OrderKey::new(u).cmp(&OrderKey::new(v)), compare_db(u, v));
            }
        }
        let w = br(A, Word::letter(X)).concat(&Word::letter(Y));
        let key = OrderKey::new(&w);
        assert_eq!((key.p_degree(), key.p_breadth()), (1, 1));
        assert_eq!(key.blocks(), vec![vec![], vec![Y]]);
    }
}
