//! Exhaustive property checks over bounded corpora, grouped into suites.
//!
//! Each check reports how many cases it examined and the first failing case
//! in corpus order, rendered in plain notation.

use std::cmp::Ordering;

use crate::exec::Execution;
use crate::forest::{theta, theta_inv, Forest};
use crate::gsb::{Bounds, Verifier};
use crate::hopf::{
    check_axiom, coproduct_mrb, coproduct_rt, Axiom, Carrier, MrbCarrier, Route, RtCarrier,
};
use crate::linear::{Coefficient, LinComb};
use crate::mrba::Mrba;
use crate::notation::{plain_forest, plain_lincomb, plain_word};
use crate::order::compare_db;
use crate::rewrite::{is_mrbw, RewriteSystem, Strategy};
use crate::signature::{Operator, Signature};
use crate::word::{enumerate_star_words, enumerate_words, StarWord, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub checked: usize,
    pub witness: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }
}

/// Runs `f` over `items` and keeps the first witness.
pub fn run<T: Sync>(
    name: &str,
    items: &[T],
    exec: Execution,
    f: impl Fn(&T) -> Option<String> + Sync + Send,
) -> Check {
    let results = exec.map(items, f);
    Check {
        name: name.to_string(),
        checked: results.len(),
        witness: results.into_iter().flatten().next(),
    }
}

/// Matching Rota-Baxter words of total degree at most `n`, in `≤db` order.
pub fn mrbw_corpus(sig: &Signature, n: usize) -> Vec<Word> {
    enumerate_words(sig, n)
        .into_iter()
        .filter(is_mrbw)
        .collect()
}

/// Ordered pairs whose total degrees sum to at most `n`.
pub fn pairs_up_to(words: &[Word], n: usize) -> Vec<(Word, Word)> {
    let mut out = Vec::new();
    for a in words {
        for b in words {
            if a.total_degree() + b.total_degree() <= n {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

pub fn triples_up_to(words: &[Word], n: usize) -> Vec<(Word, Word, Word)> {
    let mut out = Vec::new();
    for (a, b) in pairs_up_to(words, n) {
        let used = a.total_degree() + b.total_degree();
        for c in words {
            if used + c.total_degree() <= n {
                out.push((a.clone(), b.clone(), c.clone()));
            }
        }
    }
    out
}

fn basis(w: &Word) -> LinComb<Word> {
    LinComb::basis(w.clone())
}

// ---------------------------------------------------------------- order

/// `words` must be sorted. Every pair `i < j` comparing as `Less` (and the
/// reverse as `Greater`) shows the order is a strict total order on the
/// corpus: antisymmetry and transitivity follow from agreement with positions.
pub fn order_is_total(words: &[Word], exec: Execution) -> Check {
    let idx: Vec<usize> = (0..words.len()).collect();
    run(
        "order: total, antisymmetric, transitive",
        &idx,
        exec,
        |&i| {
            let u = &words[i];
            if compare_db(u, u) != Ordering::Equal {
                return Some(format!("{u:?} is not equal to itself"));
            }
            words[i + 1..].iter().find_map(|v| {
                (compare_db(u, v) != Ordering::Less || compare_db(v, u) != Ordering::Greater)
                    .then(|| format!("corpus positions disagree for {u:?} and {v:?}"))
            })
        },
    )
}

/// `u < v ⇒ q|_u < q|_v` for every pair `i < j` of the sorted `words` and
/// every context in `contexts`.
pub fn monomial_property(
    sig: &Signature,
    words: &[Word],
    contexts: &[StarWord],
    exec: Execution,
) -> Check {
    let results = exec.map(contexts, |q| {
        let image: Vec<Word> = words.iter().map(|w| q.substitute(w)).collect();
        (0..words.len()).find_map(|i| {
            (i + 1..words.len())
                .find(|&j| image[i] >= image[j])
                .map(|j| {
                    format!(
                        "{} < {} but not after substitution",
                        plain_word(sig, &words[i]),
                        plain_word(sig, &words[j])
                    )
                })
        })
    });
    let n = words.len();
    Check {
        name: "order: monomial property".to_string(),
        checked: contexts.len() * n * n.saturating_sub(1) / 2,
        witness: results.into_iter().flatten().next(),
    }
}

pub fn order_minimality(sig: &Signature, words: &[Word], exec: Execution) -> Check {
    let ops: Vec<Operator> = sig.operators().collect();
    run("order: 1 is minimal and u < [u]_w", words, exec, |u| {
        if Word::one() > *u {
            return Some(format!("1 > {}", plain_word(sig, u)));
        }
        ops.iter()
            .find(|&&op| Word::bracket(op, u.clone()) <= *u)
            .map(|_| format!("{} is not below its bracket", plain_word(sig, u)))
    })
}

/// The leading monomial of every relation is the adjacent bracket pair.
pub fn relation_leading_terms(sig: &Signature, params: &[Word], exec: Execution) -> Check {
    let sys = RewriteSystem::new(sig.clone());
    let ops: Vec<Operator> = sig.operators().collect();
    let pairs = pairs_up_to(params, usize::MAX);
    run(
        "order: relation leading monomials",
        &pairs,
        exec,
        |(x, y)| {
            for &a in &ops {
                for &b in &ops {
                    let lead = Word::bracket(a, x.clone()).concat(&Word::bracket(b, y.clone()));
                    if sys
                        .rule((a, x), (b, y))
                        .basis_elements()
                        .any(|m| *m >= lead)
                    {
                        return Some(plain_word(sig, &lead));
                    }
                }
            }
            None
        },
    )
}

// ---------------------------------------------------------------- rewriting

pub fn strict_decrease(sys: &RewriteSystem, words: &[Word], exec: Execution) -> Check {
    let sig = sys.signature();
    run("rewrite: every step decreases", words, exec, |w| {
        let mut bad = None;
        sys.reduce(&basis(w), Strategy::LargestFirst, &mut |m| {
            if bad.is_none() {
                if let Ok(out) = sys.rewrite_once(m) {
                    if out.basis_elements().any(|o| o >= m) {
                        bad = Some(plain_word(sig, m));
                    }
                }
            }
        });
        bad
    })
}

pub fn confluence(sys: &RewriteSystem, words: &[Word], exec: Execution) -> Check {
    let sig = sys.signature();
    run(
        "rewrite: normal form is strategy independent",
        words,
        exec,
        |w| {
            let v = basis(w);
            let a = sys.reduce(&v, Strategy::LargestFirst, &mut |_| {});
            let b = sys.reduce(&v, Strategy::SmallestFirst, &mut |_| {});
            (a != b).then(|| plain_word(sig, w))
        },
    )
}

/// Idempotence, `is_mrbw(w) ⇔ φ(w) = w`, and `w − φ(w)` reducing to 0.
pub fn normal_form_laws(sys: &RewriteSystem, words: &[Word], exec: Execution) -> Check {
    let sig = sys.signature();
    run("rewrite: normal form laws", words, exec, |w| {
        let v = basis(w);
        let nf = sys.normal_form(&v);
        let ok = sys.normal_form(&nf) == nf
            && is_mrbw(w) == (nf == v)
            && nf.basis_elements().all(is_mrbw)
            && sys.normal_form(&(&v - &nf)).is_zero();
        (!ok).then(|| plain_word(sig, w))
    })
}

// ---------------------------------------------------------------- algebra

/// `w ⋄ w′ = φ(ww′)`.
pub fn oracle_equivalence(mrba: &Mrba, pairs: &[(Word, Word)], exec: Execution) -> Check {
    let sig = mrba.signature();
    run(
        "mrba: diamond equals normal form of concatenation",
        pairs,
        exec,
        |(a, b)| {
            let native = mrba.diamond_words(a, b);
            let oracle = mrba.rewriting().normal_form_word(&a.concat(b));
            (native != oracle).then(|| {
                format!(
                    "{} ⋄ {}: {} vs {}",
                    plain_word(sig, a),
                    plain_word(sig, b),
                    plain_lincomb(sig, &native),
                    plain_lincomb(sig, &oracle)
                )
            })
        },
    )
}

fn triple_witness(sig: &Signature, (a, b, c): &(Word, Word, Word)) -> String {
    format!(
        "({}, {}, {})",
        plain_word(sig, a),
        plain_word(sig, b),
        plain_word(sig, c)
    )
}

pub fn associativity(mrba: &Mrba, triples: &[(Word, Word, Word)], exec: Execution) -> Check {
    let sig = mrba.signature();
    run("mrba: diamond is associative", triples, exec, |t| {
        let (a, b, c) = (basis(&t.0), basis(&t.1), basis(&t.2));
        let lhs = mrba.product(&mrba.product(&a, &b), &c);
        let rhs = mrba.product(&a, &mrba.product(&b, &c));
        (lhs != rhs).then(|| triple_witness(sig, t))
    })
}

/// `P_α(x) P_β(y) = P_α(x P_β(y)) + P_β(P_α(x) y) + λ_β P_α(xy)`.
pub fn matching_rota_baxter(mrba: &Mrba, pairs: &[(Word, Word)], exec: Execution) -> Check {
    let sig = mrba.signature();
    let ops: Vec<Operator> = sig.operators().collect();
    run(
        "mrba: matching Rota-Baxter identity",
        pairs,
        exec,
        |(x, y)| {
            let (x, y) = (basis(x), basis(y));
            for &a in &ops {
                for &b in &ops {
                    let (px, py) = (mrba.p_op(a, &x), mrba.p_op(b, &y));
                    let lhs = mrba.product(&px, &py);
                    let mut rhs = mrba.p_op(a, &mrba.product(&x, &py));
                    rhs += mrba.p_op(b, &mrba.product(&px, &y));
                    rhs.add_scaled(sig.weight(b), &mrba.p_op(a, &mrba.product(&x, &y)));
                    if lhs != rhs {
                        return Some(format!(
                            "α = {}, β = {}, x = {}, y = {}",
                            sig.operator_name(a),
                            sig.operator_name(b),
                            plain_lincomb(sig, &x),
                            plain_lincomb(sig, &y)
                        ));
                    }
                }
            }
            None
        },
    )
}

pub fn filtration(mrba: &Mrba, pairs: &[(Word, Word)], exec: Execution) -> Check {
    let sig = mrba.signature();
    let ops: Vec<Operator> = sig.operators().collect();
    run(
        "mrba: products and operators respect total degree",
        pairs,
        exec,
        |(a, b)| {
            let n = a.total_degree() + b.total_degree();
            let product_ok = mrba
                .diamond_words(a, b)
                .basis_elements()
                .all(|m| m.total_degree() <= n);
            let op_ok = ops.iter().all(|&op| {
                mrba.p_op(op, &basis(a))
                    .basis_elements()
                    .all(|m| m.total_degree() == a.total_degree() + 1)
            });
            (!(product_ok && op_ok))
                .then(|| format!("{} ⋄ {}", plain_word(sig, a), plain_word(sig, b)))
        },
    )
}

/// Double product associativity, the dendriform axioms and the pre-Lie
/// identity for each fixed operator.
pub fn fixed_operator_identities(
    mrba: &Mrba,
    triples: &[(Word, Word, Word)],
    exec: Execution,
) -> Check {
    let sig = mrba.signature();
    let ops: Vec<Operator> = sig.operators().collect();
    run(
        "mrba: double product, dendriform and pre-Lie identities",
        triples,
        exec,
        |t| {
            let (x, y, z) = (basis(&t.0), basis(&t.1), basis(&t.2));
            for &op in &ops {
                let star = |u: &LinComb<Word>, v: &LinComb<Word>| mrba.double_product(op, u, v);
                let prec = |u: &LinComb<Word>, v: &LinComb<Word>| mrba.dendriform_prec(op, u, v);
                let succ = |u: &LinComb<Word>, v: &LinComb<Word>| mrba.dendriform_succ(op, u, v);
                let pl = |u: &LinComb<Word>, v: &LinComb<Word>| mrba.pre_lie(op, u, v);
                let checks = [
                    (
                        "double product",
                        star(&star(&x, &y), &z) == star(&x, &star(&y, &z)),
                    ),
                    (
                        "dendriform 1",
                        prec(&prec(&x, &y), &z) == prec(&x, &star(&y, &z)),
                    ),
                    (
                        "dendriform 2",
                        prec(&succ(&x, &y), &z) == succ(&x, &prec(&y, &z)),
                    ),
                    (
                        "dendriform 3",
                        succ(&star(&x, &y), &z) == succ(&x, &succ(&y, &z)),
                    ),
                    (
                        "pre-Lie",
                        pl(&pl(&x, &y), &z) - pl(&x, &pl(&y, &z))
                            == pl(&pl(&y, &x), &z) - pl(&y, &pl(&x, &z)),
                    ),
                ];
                if let Some((name, _)) = checks.iter().find(|(_, ok)| !ok) {
                    return Some(format!(
                        "{name} fails for ω = {} at {}",
                        sig.operator_name(op),
                        triple_witness(sig, t)
                    ));
                }
            }
            None
        },
    )
}

/// With constant weight `λ`, `Σ k_ω P_ω` is a Rota-Baxter operator of weight
/// `λ Σ k_ω`, for each `k` in `ks`.
pub fn combined_operator(
    mrba: &Mrba,
    ks: &[Vec<Coefficient>],
    pairs: &[(Word, Word)],
    exec: Execution,
) -> Check {
    let sig = mrba.signature();
    let lambda = sig.constant_weight().cloned();
    run(
        "mrba: combined operator is Rota-Baxter",
        pairs,
        exec,
        |(x, y)| {
            let Some(lambda) = &lambda else {
                return Some("signature weights are not constant".to_string());
            };
            let (x, y) = (basis(x), basis(y));
            for k in ks {
                let p = |v: &LinComb<Word>| mrba.combined_operator(k, v);
                let weight: Coefficient = lambda * k.iter().sum::<Coefficient>();
                let lhs = mrba.product(&p(&x), &p(&y));
                let mut rhs = p(&mrba.product(&x, &p(&y)));
                rhs += p(&mrba.product(&p(&x), &y));
                rhs.add_scaled(&weight, &p(&mrba.product(&x, &y)));
                if lhs != rhs {
                    let ks: Vec<String> = k.iter().map(|c| c.to_string()).collect();
                    return Some(format!(
                        "k = ({}), x = {}, y = {}",
                        ks.join(", "),
                        plain_lincomb(sig, &x),
                        plain_lincomb(sig, &y)
                    ));
                }
            }
            None
        },
    )
}

/// `ψ(FF′) = ψ(F) ⋄_l ψ(F′)` and `ψ(B⁺_ω F) = B⁺_ω ψ(F)`.
pub fn psi_homomorphism(mrba: &Mrba, pairs: &[(Word, Word)], exec: Execution) -> Check {
    let sig = mrba.signature();
    let ops: Vec<Operator> = sig.operators().collect();
    run(
        "mrba: psi is an operated-algebra map",
        pairs,
        exec,
        |(a, b)| {
            let (f, g) = (theta(a), theta(b));
            let psi = |x: &Forest| mrba.psi(&LinComb::basis(x.clone()));
            let lhs = psi(&f.concat(&g));
            let rhs = psi(&f).product(&psi(&g), |x, y| mrba.diamond_forest(x, y));
            let graft_ok = ops
                .iter()
                .all(|&op| psi(&f.grafted(op)) == psi(&f).map_keys(|h| h.grafted(op)));
            (lhs != rhs || !graft_ok)
                .then(|| format!("{} · {}", plain_forest(sig, &f), plain_forest(sig, &g)))
        },
    )
}

/// `θ` is a bijection preserving depth, degree, concatenation and grafting,
/// and `ψ∘θ = θ∘φ` with `ψ` computed homomorphically.
pub fn theta_transport(mrba: &Mrba, words: &[Word], exec: Execution) -> Check {
    let sig = mrba.signature();
    let ops: Vec<Operator> = sig.operators().collect();
    let mut forests: Vec<Forest> = words.iter().map(theta).collect();
    forests.sort();
    forests.dedup();
    let injective = forests.len() == words.len();
    let mut check = run("theta: transport of words to forests", words, exec, |w| {
        let f = theta(w);
        let structural = theta_inv(&f) == *w
            && theta(&theta_inv(&f)) == f
            && f.degree() == w.total_degree()
            && f.depth() == w.depth()
            && ops
                .iter()
                .all(|&op| theta(&Word::bracket(op, w.clone())) == f.grafted(op))
            && w.atoms().iter().enumerate().all(|(i, _)| {
                let (l, r) = w.atoms().split_at(i);
                theta(&Word::from_atoms(l.to_vec())).concat(&theta(&Word::from_atoms(r.to_vec())))
                    == f
            });
        let square =
            mrba.psi_homomorphic(&f) == mrba.rewriting().normal_form_word(w).map_keys(theta);
        (!(structural && square)).then(|| plain_word(sig, w))
    });
    if !injective && check.witness.is_none() {
        check.witness = Some("theta is not injective on the corpus".to_string());
    }
    check
}

// ---------------------------------------------------------------- Hopf

pub fn route_agreement(sig: &Signature, forests: &[Forest], exec: Execution) -> Check {
    run(
        "hopf: subforest and cocycle coproducts agree",
        forests,
        exec,
        |f| {
            (coproduct_rt(f, Route::Subforest) != coproduct_rt(f, Route::Cocycle))
                .then(|| plain_forest(sig, f))
        },
    )
}

/// `(ψ⊗ψ)Δ_RT = Δ_L ψ` on forests.
pub fn psi_coalgebra_map(mrba: &Mrba, forests: &[Forest], exec: Execution) -> Check {
    let sig = mrba.signature();
    run("hopf: psi intertwines the coproducts", forests, exec, |f| {
        let nf = |x: &Forest| mrba.rewriting().normal_form_word(&theta_inv(x));
        let lhs = coproduct_rt(f, Route::Subforest).map_basis(|(g, q)| nf(g).tensor(&nf(q)));
        let rhs = nf(f).map_basis(|w| coproduct_mrb(mrba, w));
        (lhs != rhs).then(|| plain_forest(sig, f))
    })
}

pub fn axiom_check<C: Carrier>(
    c: &C,
    label: &str,
    axiom: Axiom,
    corpus: &[C::Basis],
    render: &dyn Fn(&C::Basis) -> String,
    exec: Execution,
) -> Check {
    let r = check_axiom(c, axiom, corpus, exec);
    Check {
        name: format!("hopf ({label}): {}", axiom.name()),
        checked: r.checked,
        witness: r
            .witness
            .map(|w| w.iter().map(render).collect::<Vec<_>>().join(", ")),
    }
}

/// Axioms of the forest carrier.
pub const RT_AXIOMS: [Axiom; 7] = [
    Axiom::Coassociativity,
    Axiom::Counit,
    Axiom::Bialgebra,
    Axiom::Cocycle,
    Axiom::EpsilonP,
    Axiom::Graded,
    Axiom::Antipode,
];

/// Axioms of the matching Rota-Baxter carrier.
pub const MRB_AXIOMS: [Axiom; 7] = [
    Axiom::Coassociativity,
    Axiom::Counit,
    Axiom::Bialgebra,
    Axiom::Cocycle,
    Axiom::EpsilonP,
    Axiom::Cofiltered,
    Axiom::Antipode,
];

// ---------------------------------------------------------------- suites

/// Corpus bounds shared by the suites.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteBounds {
    pub max_degree: usize,
    pub context_depth: usize,
}

pub fn order_suite(sig: &Signature, b: &SuiteBounds, exec: Execution) -> SuiteReport {
    let words = enumerate_words(sig, b.max_degree);
    let contexts = enumerate_star_words(sig, b.context_depth, 2.min(b.max_degree));
    let params = enumerate_words(sig, 2.min(b.max_degree));
    let sys = RewriteSystem::new(sig.clone());
    SuiteReport {
        suite: "order".into(),
        checks: vec![
            order_is_total(&words, exec),
            monomial_property(sig, &words, &contexts, exec),
            order_minimality(sig, &words, exec),
            relation_leading_terms(sig, &params, exec),
            strict_decrease(&sys, &words, exec),
            confluence(&sys, &words, exec),
            normal_form_laws(&sys, &words, exec),
        ],
    }
}

pub fn mrba_suite(sig: &Signature, b: &SuiteBounds, exec: Execution) -> SuiteReport {
    let n = b.max_degree;
    let mrba = Mrba::new(sig.clone());
    let basis_words = mrbw_corpus(sig, n);
    let pairs = pairs_up_to(&basis_words, n);
    let triples = triples_up_to(&basis_words, n);
    let half = mrbw_corpus(sig, n / 2);
    let rb_pairs = pairs_up_to(&half, n);
    let all_words = enumerate_words(sig, n);
    let all_pairs = pairs_up_to(&all_words, n);
    let lambda = sig.weights()[0].clone();
    let constant = Mrba::new(sig.with_constant_weight(lambda));
    let ks = combined_operator_choices(sig.num_operators());
    SuiteReport {
        suite: "mrba".into(),
        checks: vec![
            oracle_equivalence(&mrba, &pairs, exec),
            associativity(&mrba, &triples, exec),
            matching_rota_baxter(&mrba, &rb_pairs, exec),
            filtration(&mrba, &pairs, exec),
            fixed_operator_identities(&mrba, &triples, exec),
            combined_operator(&constant, &ks, &rb_pairs, exec),
            psi_homomorphism(&mrba, &all_pairs, exec),
            theta_transport(&mrba, &all_words, exec),
        ],
    }
}

/// Three weight vectors: an indicator, uniform halves, and all ones.
pub fn combined_operator_choices(num_operators: usize) -> Vec<Vec<Coefficient>> {
    let one = Coefficient::from_integer(1.into());
    let half = Coefficient::new(1.into(), 2.into());
    let mut indicator = vec![Coefficient::from_integer(0.into()); num_operators];
    indicator[0] = one.clone();
    vec![
        indicator,
        vec![half; num_operators],
        vec![one; num_operators],
    ]
}

/// `rt_degree` bounds the forest carrier, `max_degree` the matching one.
pub fn hopf_suite(
    sig: &Signature,
    max_degree: usize,
    rt_degree: usize,
    exec: Execution,
) -> SuiteReport {
    let mrba = Mrba::new(sig.clone());
    let forests: Vec<Forest> = enumerate_words(sig, rt_degree).iter().map(theta).collect();
    let small_forests: Vec<Forest> = enumerate_words(sig, max_degree).iter().map(theta).collect();
    let basis_words = mrbw_corpus(sig, max_degree);
    let rt = RtCarrier::new(sig.operators(), Route::Subforest);
    let mrb = MrbCarrier::new(mrba.clone());
    let render_forest = |f: &Forest| plain_forest(sig, f);
    let render_word = |w: &Word| plain_word(sig, w);
    let mut checks = vec![route_agreement(sig, &forests, exec)];
    for axiom in RT_AXIOMS {
        checks.push(axiom_check(
            &rt,
            "forests",
            axiom,
            &forests,
            &render_forest,
            exec,
        ));
    }
    for axiom in MRB_AXIOMS {
        checks.push(axiom_check(
            &mrb,
            "matching",
            axiom,
            &basis_words,
            &render_word,
            exec,
        ));
    }
    checks.push(psi_coalgebra_map(&mrba, &small_forests, exec));
    SuiteReport {
        suite: "hopf".into(),
        checks,
    }
}

pub fn gsb_suite(verifier: &Verifier, bounds: &Bounds, exec: Execution) -> SuiteReport {
    let sig = verifier.signature();
    let summary = verifier.verify(bounds, exec);
    let witness = summary.failures.first().map(|r| {
        format!(
            "{} composition at {} leaves {}",
            r.kind.name(),
            plain_word(sig, &r.ambiguity),
            plain_lincomb(sig, &r.remainder)
        )
    });
    SuiteReport {
        suite: "gsb".into(),
        checks: vec![Check {
            name: format!(
                "gsb: {} intersection and {} including compositions are trivial",
                summary.intersection, summary.including
            ),
            checked: summary.intersection + summary.including,
            witness,
        }],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_at_small_bounds() {
        let sig = Signature::default_corpus();
        let b = SuiteBounds {
            max_degree: 2,
            context_depth: 1,
        };
        let exec = Execution::Sequential;
        for report in [
            order_suite(&sig, &b, exec),
            mrba_suite(&sig, &b, exec),
            hopf_suite(&sig, 2, 3, exec),
        ] {
            for c in &report.checks {
                assert!(c.passed(), "{}: {:?}", c.name, c.witness);
                assert!(c.checked > 0, "{}", c.name);
            }
        }
        let gsb = gsb_suite(
            &Verifier::new(sig.clone()),
            &Bounds::from_max_degree(1, 1),
            exec,
        );
        assert!(gsb.passed());
        let broken = gsb_suite(
            &Verifier::mutated(sig),
            &Bounds::from_max_degree(1, 1),
            exec,
        );
        assert!(!broken.passed());
    }

    #[test]
    fn corpus_helpers() {
        let sig = Signature::standard(1, &[crate::linear::q(1)]).unwrap();
        let words = enumerate_words(&sig, 2);
        assert_eq!(words.len(), 9);
        assert_eq!(mrbw_corpus(&sig, 2).len(), 8);
        assert_eq!(pairs_up_to(&words, 0).len(), 1);
        assert_eq!(triples_up_to(&words, 1).len(), 1 + 3 * 2);
    }
}
