//! Coproducts, counits and antipodes on decorated forests and on the free
//! matching Rota-Baxter algebra, with an exhaustive axiom checker.

use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;

use num_traits::{One, Zero};

use crate::exec::Execution;
use crate::forest::{theta, theta_inv, Forest, Tree};
use crate::linear::{Coefficient, LinComb, Tensor3, TensorComb};
use crate::mrba::Mrba;
use crate::signature::Operator;
use crate::word::Word;

/// How `Δ_RT` is computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// Sum of `G ⊗ F/G` over vertex antichains.
    Subforest,
    /// The 1-cocycle recursion, multiplicative over components.
    Cocycle,
}

pub fn coproduct_rt(f: &Forest, route: Route) -> TensorComb<Forest> {
    match route {
        Route::Subforest => f
            .subforest_pairs()
            .into_iter()
            .map(|p| (p, Coefficient::one()))
            .collect(),
        Route::Cocycle => cocycle_coproduct(f),
    }
}

fn cocycle_coproduct(f: &Forest) -> TensorComb<Forest> {
    let unit = Forest::one();
    let mut acc = LinComb::basis((unit.clone(), unit));
    for tree in f.trees() {
        let delta = match tree.decoration() {
            crate::forest::Decoration::Letter(_) => {
                let t = Forest::tree(tree.clone());
                LinComb::basis((t.clone(), Forest::one())) + LinComb::basis((Forest::one(), t))
            }
            crate::forest::Decoration::Operator(op) => {
                let t = Forest::tree(tree.clone());
                let inner = cocycle_coproduct(tree.children());
                LinComb::basis((t, Forest::one()))
                    + inner.map_keys(|(g, q)| (g.clone(), q.grafted(op)))
            }
        };
        acc = acc.tensor_product(&delta, |a, b| LinComb::basis(a.concat(b)));
    }
    acc
}

/// Coefficient of the empty forest.
pub fn counit_rt(v: &LinComb<Forest>) -> Coefficient {
    v.coeff(&Forest::one())
}

/// Coefficient of the empty word.
pub fn counit_mrb(v: &LinComb<Word>) -> Coefficient {
    v.coeff(&Word::one())
}

/// `Δ_L = (ψ ⊗ ψ) Δ_RT i` on a basis word, carried out on words.
pub fn coproduct_mrb(mrba: &Mrba, w: &Word) -> TensorComb<Word> {
    let nf = |f: &Forest| mrba.rewriting().normal_form_word(&theta_inv(f));
    let mut out = LinComb::zero();
    for (g, q) in theta(w).subforest_pairs() {
        out += nf(&g).tensor(&nf(&q));
    }
    out
}

/// `Δ_L` on a matching Rota-Baxter forest.
pub fn coproduct_mrb_forest(mrba: &Mrba, f: &Forest) -> TensorComb<Forest> {
    let delta = coproduct_rt(f, Route::Subforest);
    let psi = |x: &Forest| mrba.psi(&LinComb::basis(x.clone()));
    delta.map_basis(|(g, q)| psi(g).tensor(&psi(q)))
}

/// A connected filtered bialgebra with a distinguished basis.
pub trait Carrier: Sync {
    type Basis: Ord + Clone + Hash + Debug + Send + Sync;

    fn unit(&self) -> Self::Basis;
    fn degree(&self, b: &Self::Basis) -> usize;
    fn product(&self, a: &Self::Basis, b: &Self::Basis) -> LinComb<Self::Basis>;
    fn coproduct(&self, b: &Self::Basis) -> TensorComb<Self::Basis>;
    /// `P_ω` on a basis element.
    fn graft(&self, op: Operator, b: &Self::Basis) -> Self::Basis;
    fn operators(&self) -> Vec<Operator>;

    fn counit(&self, v: &LinComb<Self::Basis>) -> Coefficient {
        v.coeff(&self.unit())
    }

    fn product_lin(
        &self,
        u: &LinComb<Self::Basis>,
        v: &LinComb<Self::Basis>,
    ) -> LinComb<Self::Basis> {
        u.product(v, |a, b| self.product(a, b))
    }

    fn coproduct_lin(&self, v: &LinComb<Self::Basis>) -> TensorComb<Self::Basis> {
        v.map_basis(|b| self.coproduct(b))
    }
}

/// Planar decorated forests under concatenation with `Δ_RT`.
#[derive(Clone, Debug)]
pub struct RtCarrier {
    operators: Vec<Operator>,
    route: Route,
}

impl RtCarrier {
    pub fn new(operators: impl IntoIterator<Item = Operator>, route: Route) -> Self {
        RtCarrier {
            operators: operators.into_iter().collect(),
            route,
        }
    }
}

impl Carrier for RtCarrier {
    type Basis = Forest;

    fn unit(&self) -> Forest {
        Forest::one()
    }

    fn degree(&self, b: &Forest) -> usize {
        b.degree()
    }

    fn product(&self, a: &Forest, b: &Forest) -> LinComb<Forest> {
        LinComb::basis(a.concat(b))
    }

    fn coproduct(&self, b: &Forest) -> TensorComb<Forest> {
        coproduct_rt(b, self.route)
    }

    fn graft(&self, op: Operator, b: &Forest) -> Forest {
        Forest::tree(Tree::graft(op, b.clone()))
    }

    fn operators(&self) -> Vec<Operator> {
        self.operators.clone()
    }
}

/// The free matching Rota-Baxter algebra on matching Rota-Baxter words with
/// `⋄` and `Δ_L`, filtered by total degree.
#[derive(Clone, Debug)]
pub struct MrbCarrier {
    mrba: Mrba,
}

impl MrbCarrier {
    pub fn new(mrba: Mrba) -> Self {
        MrbCarrier { mrba }
    }

    pub fn algebra(&self) -> &Mrba {
        &self.mrba
    }
}

impl Carrier for MrbCarrier {
    type Basis = Word;

    fn unit(&self) -> Word {
        Word::one()
    }

    fn degree(&self, b: &Word) -> usize {
        b.total_degree()
    }

    fn product(&self, a: &Word, b: &Word) -> LinComb<Word> {
        self.mrba.diamond_words(a, b)
    }

    fn coproduct(&self, b: &Word) -> TensorComb<Word> {
        coproduct_mrb(&self.mrba, b)
    }

    fn graft(&self, op: Operator, b: &Word) -> Word {
        Word::bracket(op, b.clone())
    }

    fn operators(&self) -> Vec<Operator> {
        self.mrba.signature().operators().collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HopfError {
    #[error("the reduced coproduct is defined on basis elements other than 1")]
    Unit,
}

/// `Δ(b) − b⊗1 − 1⊗b`.
pub fn reduced_coproduct<C: Carrier>(
    c: &C,
    b: &C::Basis,
) -> Result<TensorComb<C::Basis>, HopfError> {
    let one = c.unit();
    if *b == one {
        return Err(HopfError::Unit);
    }
    let mut out = c.coproduct(b);
    out.add_term((b.clone(), one.clone()), -Coefficient::one());
    out.add_term((one, b.clone()), -Coefficient::one());
    Ok(out)
}

/// Antipode values `S(b) = −b − Σ S(b′) b″`, cached per basis element.
pub struct Antipode<'a, C: Carrier> {
    carrier: &'a C,
    memo: HashMap<C::Basis, LinComb<C::Basis>>,
}

impl<'a, C: Carrier> Antipode<'a, C> {
    pub fn new(carrier: &'a C) -> Self {
        Antipode {
            carrier,
            memo: HashMap::new(),
        }
    }

    pub fn basis(&mut self, b: &C::Basis) -> LinComb<C::Basis> {
        if let Some(v) = self.memo.get(b) {
            return v.clone();
        }
        let c = self.carrier;
        let value = match reduced_coproduct(c, b) {
            Err(HopfError::Unit) => LinComb::basis(b.clone()),
            Ok(reduced) => {
                let mut out = -LinComb::basis(b.clone());
                for ((left, right), coeff) in reduced.iter() {
                    let s = self.basis(left);
                    let term = c.product_lin(&s, &LinComb::basis(right.clone()));
                    out.add_scaled(&-coeff, &term);
                }
                out
            }
        };
        self.memo.insert(b.clone(), value.clone());
        value
    }

    pub fn apply(&mut self, v: &LinComb<C::Basis>) -> LinComb<C::Basis> {
        let mut out = LinComb::zero();
        for (b, coeff) in v.iter() {
            out.add_scaled(coeff, &self.basis(b));
        }
        out
    }
}

/// One-shot antipode of a combination.
pub fn antipode<C: Carrier>(c: &C, v: &LinComb<C::Basis>) -> LinComb<C::Basis> {
    Antipode::new(c).apply(v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    Coassociativity,
    Counit,
    Bialgebra,
    Cocycle,
    EpsilonP,
    Graded,
    Cofiltered,
    Antipode,
}

impl Axiom {
    pub const ALL: [Axiom; 8] = [
        Axiom::Coassociativity,
        Axiom::Counit,
        Axiom::Bialgebra,
        Axiom::Cocycle,
        Axiom::EpsilonP,
        Axiom::Graded,
        Axiom::Cofiltered,
        Axiom::Antipode,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Coassociativity => "coassociativity",
            Axiom::Counit => "counit",
            Axiom::Bialgebra => "bialgebra",
            Axiom::Cocycle => "cocycle",
            Axiom::EpsilonP => "epsP",
            Axiom::Graded => "graded",
            Axiom::Cofiltered => "cofiltered",
            Axiom::Antipode => "antipode",
        }
    }
}

/// Outcome of an exhaustive axiom check; `witness` is the first failing input
/// in corpus order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport<B> {
    pub axiom: Axiom,
    pub checked: usize,
    pub witness: Option<Vec<B>>,
}

impl<B> AxiomReport<B> {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

fn triples_left<B: Ord + Clone>(
    delta: &TensorComb<B>,
    coproduct: &dyn Fn(&B) -> TensorComb<B>,
) -> Tensor3<B> {
    let mut out = LinComb::zero();
    for ((l, r), c) in delta.iter() {
        for ((ll, lr), c2) in coproduct(l).iter() {
            out.add_term((ll.clone(), lr.clone(), r.clone()), c * c2);
        }
    }
    out
}

fn triples_right<B: Ord + Clone>(
    delta: &TensorComb<B>,
    coproduct: &dyn Fn(&B) -> TensorComb<B>,
) -> Tensor3<B> {
    let mut out = LinComb::zero();
    for ((l, r), c) in delta.iter() {
        for ((rl, rr), c2) in coproduct(r).iter() {
            out.add_term((l.clone(), rl.clone(), rr.clone()), c * c2);
        }
    }
    out
}

/// `m(f ⊗ g)` applied to a tensor.
fn multiply_legs<C: Carrier>(
    c: &C,
    delta: &TensorComb<C::Basis>,
    f: &dyn Fn(&C::Basis) -> LinComb<C::Basis>,
    g: &dyn Fn(&C::Basis) -> LinComb<C::Basis>,
) -> LinComb<C::Basis> {
    let mut out = LinComb::zero();
    for ((l, r), coeff) in delta.iter() {
        out.add_scaled(coeff, &c.product_lin(&f(l), &g(r)));
    }
    out
}

/// Checks `axiom` on every element of `corpus` (and on pairs from it whose
/// degrees sum to at most the corpus maximum, for the bialgebra axiom).
pub fn check_axiom<C: Carrier>(
    c: &C,
    axiom: Axiom,
    corpus: &[C::Basis],
    exec: Execution,
) -> AxiomReport<C::Basis> {
    let one = c.unit();
    let id = |b: &C::Basis| LinComb::basis(b.clone());
    let failures: Vec<Option<Vec<C::Basis>>> = match axiom {
        Axiom::Coassociativity => exec.map(corpus, |b| {
            let delta = c.coproduct(b);
            let cop = |x: &C::Basis| c.coproduct(x);
            (triples_left(&delta, &cop) != triples_right(&delta, &cop)).then(|| vec![b.clone()])
        }),
        Axiom::Counit => exec.map(corpus, |b| {
            let delta = c.coproduct(b);
            let left = delta.map_basis(|(l, r)| LinComb::basis(r.clone()).scale(&c.counit(&id(l))));
            let right =
                delta.map_basis(|(l, r)| LinComb::basis(l.clone()).scale(&c.counit(&id(r))));
            (left != id(b) || right != id(b)).then(|| vec![b.clone()])
        }),
        Axiom::Bialgebra => {
            let max = corpus.iter().map(|b| c.degree(b)).max().unwrap_or(0);
            let pairs: Vec<(C::Basis, C::Basis)> = corpus
                .iter()
                .flat_map(|a| {
                    corpus
                        .iter()
                        .filter(move |b| c.degree(a) + c.degree(b) <= max)
                        .map(move |b| (a.clone(), b.clone()))
                })
                .collect();
            let unit_ok = c.coproduct(&one) == LinComb::basis((one.clone(), one.clone()));
            let mut out = vec![(!unit_ok).then(|| vec![one.clone()])];
            out.extend(exec.map(&pairs, |(a, b)| {
                let lhs = c.coproduct_lin(&c.product(a, b));
                let rhs = c
                    .coproduct(a)
                    .tensor_product(&c.coproduct(b), |x, y| c.product(x, y));
                (lhs != rhs).then(|| vec![a.clone(), b.clone()])
            }));
            let checked = out.len();
            return report(axiom, checked, out);
        }
        Axiom::Cocycle => {
            let ops = c.operators();
            exec.map(corpus, |b| {
                for &op in &ops {
                    let pb = c.graft(op, b);
                    let mut rhs = LinComb::basis((pb.clone(), one.clone()));
                    rhs += c
                        .coproduct(b)
                        .map_keys(|(l, r)| (l.clone(), c.graft(op, r)));
                    if c.coproduct(&pb) != rhs {
                        return Some(vec![b.clone()]);
                    }
                }
                None
            })
        }
        Axiom::EpsilonP => {
            let ops = c.operators();
            exec.map(corpus, |b| {
                ops.iter()
                    .any(|&op| !c.counit(&id(&c.graft(op, b))).is_zero())
                    .then(|| vec![b.clone()])
            })
        }
        Axiom::Graded => exec.map(corpus, |b| {
            let n = c.degree(b);
            c.coproduct(b)
                .basis_elements()
                .any(|(l, r)| c.degree(l) + c.degree(r) != n)
                .then(|| vec![b.clone()])
        }),
        Axiom::Cofiltered => exec.map(corpus, |b| {
            let n = c.degree(b);
            let degrees_ok = c
                .coproduct(b)
                .basis_elements()
                .all(|(l, r)| c.degree(l) + c.degree(r) <= n);
            let reduced_ok = match reduced_coproduct(c, b) {
                Err(_) => true,
                Ok(red) => red.basis_elements().all(|(l, r)| *l != one && *r != one),
            };
            (!(degrees_ok && reduced_ok)).then(|| vec![b.clone()])
        }),
        Axiom::Antipode => {
            let mut s = Antipode::new(c);
            for b in corpus {
                for (l, r) in c.coproduct(b).basis_elements() {
                    s.basis(l);
                    s.basis(r);
                }
            }
            let table = s.memo;
            let lookup = |b: &C::Basis| table.get(b).cloned().expect("every leg was tabulated");
            exec.map(corpus, |b| {
                let delta = c.coproduct(b);
                let expected = LinComb::basis(one.clone()).scale(&c.counit(&id(b)));
                let left = multiply_legs(c, &delta, &lookup, &id);
                let right = multiply_legs(c, &delta, &id, &lookup);
                (left != expected || right != expected).then(|| vec![b.clone()])
            })
        }
    };
    let checked = failures.len();
    report(axiom, checked, failures)
}

fn report<B>(axiom: Axiom, checked: usize, failures: Vec<Option<Vec<B>>>) -> AxiomReport<B> {
    AxiomReport {
        axiom,
        checked,
        witness: failures.into_iter().flatten().next(),
    }
}
