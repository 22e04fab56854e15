use mrb_core::checks::{self, mrbw_corpus, SuiteBounds};
use mrb_core::rewrite::Strategy as Order;
use mrb_core::{q, theta, theta_inv, Execution, LinComb, Mrba, Signature, Word};
use proptest::prelude::*;
use std::sync::OnceLock;

struct Fixture {
    mrba: Mrba,
    basis: Vec<Word>,
    words: Vec<Word>,
}

fn fixture() -> &'static Fixture {
    static F: OnceLock<Fixture> = OnceLock::new();
    F.get_or_init(|| {
        let sig = Signature::default_corpus();
        Fixture {
            basis: mrbw_corpus(&sig, 3),
            words: mrb_core::word::enumerate_words(&sig, 3),
            mrba: Mrba::new(sig),
        }
    })
}

fn basis_word() -> impl Strategy<Value = Word> {
    (0..fixture().basis.len()).prop_map(|i| fixture().basis[i].clone())
}

fn any_word() -> impl Strategy<Value = Word> {
    (0..fixture().words.len()).prop_map(|i| fixture().words[i].clone())
}

fn one(w: &Word) -> LinComb<Word> {
    LinComb::term(w.clone(), q(1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn diamond_is_associative(u in basis_word(), v in basis_word(), w in basis_word()) {
        let m = &fixture().mrba;
        let left = m.product(&m.product(&one(&u), &one(&v)), &one(&w));
        let right = m.product(&one(&u), &m.product(&one(&v), &one(&w)));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn diamond_is_normal_form_of_concatenation(u in basis_word(), v in basis_word()) {
        let m = &fixture().mrba;
        prop_assert_eq!(m.diamond_words(&u, &v), m.rewriting().normal_form_word(&u.concat(&v)));
    }

    #[test]
    fn normal_forms_are_idempotent_and_strategy_free(w in any_word()) {
        let sys = fixture().mrba.rewriting();
        let nf = sys.normal_form_word(&w);
        prop_assert_eq!(sys.normal_form(&nf), nf.clone());
        let other = sys.reduce(&one(&w), Order::SmallestFirst, &mut |_| {});
        prop_assert_eq!(other, nf);
    }

    #[test]
    fn theta_round_trips(w in any_word()) {
        prop_assert_eq!(theta_inv(&theta(&w)), w);
    }
}

#[test]
fn execution_modes_agree() {
    let sig = Signature::default_corpus();
    let bounds = SuiteBounds {
        max_degree: 2,
        context_depth: 1,
    };
    let seq = checks::order_suite(&sig, &bounds, Execution::Sequential);
    let par = checks::order_suite(&sig, &bounds, Execution::Parallel);
    assert_eq!(seq.checks, par.checks);
    assert!(seq.checks.iter().all(|c| c.witness.is_none()));
}
