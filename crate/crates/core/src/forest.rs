//! Planar rooted forests decorated by `X ⊔ Ω`, grafting, subforest
//! enumeration and the isomorphism `θ` with bracketed words.

use std::cmp::Ordering;

use crate::order::{compare_seq, Seq};
use crate::signature::{Letter, Operator, Signature, SignatureError};
use crate::word::{Atom, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Decoration {
    Letter(Letter),
    Operator(Operator),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ForestError {
    #[error("internal vertices must be decorated by operators")]
    LetterWithChildren,
    #[error(transparent)]
    Signature(#[from] SignatureError),
}

/// A planar rooted tree; only operator-decorated vertices may have children.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tree {
    decoration: Decoration,
    children: Forest,
}

/// An ordered list of trees; the empty forest is the unit `1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Forest {
    trees: Vec<Tree>,
}

impl Tree {
    pub fn new(decoration: Decoration, children: Forest) -> Result<Self, ForestError> {
        if matches!(decoration, Decoration::Letter(_)) && !children.is_one() {
            return Err(ForestError::LetterWithChildren);
        }
        Ok(Tree {
            decoration,
            children,
        })
    }

    /// The single vertex `•_x`.
    pub fn letter(letter: Letter) -> Self {
        Tree {
            decoration: Decoration::Letter(letter),
            children: Forest::one(),
        }
    }

    /// `B⁺_ω(children)`: a new ω-decorated root above `children`.
    pub fn graft(op: Operator, children: Forest) -> Self {
        Tree {
            decoration: Decoration::Operator(op),
            children,
        }
    }

    pub fn decoration(&self) -> Decoration {
        self.decoration
    }

    pub fn children(&self) -> &Forest {
        &self.children
    }

    pub fn degree(&self) -> usize {
        1 + self.children.degree()
    }

    pub fn depth(&self) -> usize {
        match self.decoration {
            Decoration::Letter(_) => 0,
            Decoration::Operator(_) => 1 + self.children.depth(),
        }
    }

    fn validate(&self, sig: &Signature) -> Result<(), ForestError> {
        match self.decoration {
            Decoration::Letter(l) => {
                sig.check_letter(l)?;
                if !self.children.is_one() {
                    return Err(ForestError::LetterWithChildren);
                }
            }
            Decoration::Operator(op) => sig.check_operator(op)?,
        }
        self.children.validate(sig)
    }
}

/// Grafting checked against a signature.
pub fn graft(sig: &Signature, op: Operator, forest: Forest) -> Result<Tree, ForestError> {
    sig.check_operator(op)?;
    Ok(Tree::graft(op, forest))
}

impl Forest {
    pub fn one() -> Self {
        Forest::default()
    }

    pub fn from_trees(trees: Vec<Tree>) -> Self {
        Forest { trees }
    }

    pub fn tree(tree: Tree) -> Self {
        Forest { trees: vec![tree] }
    }

    /// `B⁺_ω(self)` as a one-tree forest.
    pub fn grafted(&self, op: Operator) -> Forest {
        Forest::tree(Tree::graft(op, self.clone()))
    }

    pub fn trees(&self) -> &[Tree] {
        &self.trees
    }

    pub fn is_one(&self) -> bool {
        self.trees.is_empty()
    }

    pub fn concat(&self, other: &Forest) -> Forest {
        let mut trees = self.trees.clone();
        trees.extend_from_slice(&other.trees);
        Forest { trees }
    }

    /// Number of vertices.
    pub fn degree(&self) -> usize {
        self.trees.iter().map(Tree::degree).sum()
    }

    /// Number of trees.
    pub fn breadth(&self) -> usize {
        self.trees.len()
    }

    pub fn depth(&self) -> usize {
        self.trees.iter().map(Tree::depth).max().unwrap_or(0)
    }

    pub fn validate(&self, sig: &Signature) -> Result<(), ForestError> {
        self.trees.iter().try_for_each(|t| t.validate(sig))
    }

    /// One `(G, F/G)` per antichain of vertices, with multiplicity. `G` lists
    /// the selected subtrees in preorder.
    pub fn subforest_pairs(&self) -> Vec<(Forest, Forest)> {
        let mut acc = vec![(Forest::one(), Forest::one())];
        for tree in &self.trees {
            let choices = tree_cuts(tree);
            let mut next = Vec::with_capacity(acc.len() * choices.len());
            for (g, q) in &acc {
                for (tg, tq) in &choices {
                    next.push((g.concat(tg), q.concat(tq)));
                }
            }
            acc = next;
        }
        acc
    }

    /// Root-down ASCII drawing, one tree after another.
    pub fn ascii_tree(&self, name: &dyn Fn(Decoration) -> String) -> String {
        if self.is_one() {
            return "1\n".to_string();
        }
        let mut out = String::new();
        for tree in &self.trees {
            out.push_str(&name(tree.decoration));
            out.push('\n');
            draw_children(tree, "", name, &mut out);
        }
        out
    }
}

fn draw_children(tree: &Tree, prefix: &str, name: &dyn Fn(Decoration) -> String, out: &mut String) {
    let n = tree.children.trees.len();
    for (i, child) in tree.children.trees.iter().enumerate() {
        let last = i + 1 == n;
        out.push_str(prefix);
        out.push_str(if last { "└── " } else { "├── " });
        out.push_str(&name(child.decoration));
        out.push('\n');
        let deeper = format!("{prefix}{}", if last { "    " } else { "│   " });
        draw_children(child, &deeper, name, out);
    }
}

/// Antichain choices within one tree: take the whole tree, or keep the root
/// and choose independently among its children.
fn tree_cuts(tree: &Tree) -> Vec<(Forest, Forest)> {
    let mut out = vec![(Forest::tree(tree.clone()), Forest::one())];
    for (g, q) in tree.children.subforest_pairs() {
        out.push((
            g,
            Forest::tree(Tree {
                decoration: tree.decoration,
                children: q,
            }),
        ));
    }
    out
}

/// `θ`: letters become leaves, brackets become grafts.
pub fn theta(word: &Word) -> Forest {
    Forest {
        trees: word
            .atoms()
            .iter()
            .map(|a| match a {
                Atom::Letter(l) => Tree::letter(*l),
                Atom::Bracket(op, body) => Tree::graft(*op, theta(body)),
            })
            .collect(),
    }
}

/// `θ⁻¹`.
pub fn theta_inv(forest: &Forest) -> Word {
    Word::from_atoms(
        forest
            .trees
            .iter()
            .map(|t| match t.decoration {
                Decoration::Letter(l) => Atom::Letter(l),
                Decoration::Operator(op) => Atom::Bracket(op, theta_inv(&t.children)),
            })
            .collect(),
    )
}

impl Ord for Forest {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| compare_seq(Seq::Forest(&self.trees), Seq::Forest(&other.trees)))
    }
}

impl PartialOrd for Forest {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
