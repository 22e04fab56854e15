//! Output formats for words, forests and tensors.

use clap::ValueEnum;
use mrb_core::forest::Decoration;
use mrb_core::notation::{
    ascii_forest, coefficient, latex_forest, latex_terms, latex_word, plain_forest, plain_terms,
    plain_word,
};
use mrb_core::{theta, Coefficient, Forest, LinComb, Signature, Tree, Word};
use serde::Serialize;

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Plain,
    Latex,
    AsciiTree,
    Json,
}

/// A value produced by a command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Words(LinComb<Word>),
    Forests(LinComb<Forest>),
    WordPairs(LinComb<(Word, Word)>),
    ForestPairs(LinComb<(Forest, Forest)>),
}

#[derive(Serialize)]
#[serde(untagged)]
enum Monomial {
    Text(String),
    Trees(Vec<TreeJson>),
}

#[derive(Serialize)]
struct TreeJson {
    label: String,
    children: Vec<TreeJson>,
}

#[derive(Serialize)]
struct TermJson {
    coeff: String,
    monomial: Monomial,
}

#[derive(Serialize)]
struct PairJson {
    coeff: String,
    left: Monomial,
    right: Monomial,
}

#[derive(Serialize)]
struct TermsJson {
    basis: &'static str,
    terms: Vec<TermJson>,
}

#[derive(Serialize)]
struct PairsJson {
    basis: &'static str,
    pairs: Vec<PairJson>,
}

fn tree_json(sig: &Signature, t: &Tree) -> TreeJson {
    let label = match t.decoration() {
        Decoration::Letter(l) => sig.letter_name(l),
        Decoration::Operator(op) => sig.operator_name(op),
    };
    TreeJson {
        label: label.to_string(),
        children: t
            .children()
            .trees()
            .iter()
            .map(|c| tree_json(sig, c))
            .collect(),
    }
}

fn forest_json(sig: &Signature, f: &Forest) -> Monomial {
    if f.is_one() {
        Monomial::Text("1".into())
    } else {
        Monomial::Trees(f.trees().iter().map(|t| tree_json(sig, t)).collect())
    }
}

fn word_json(sig: &Signature, w: &Word) -> Monomial {
    Monomial::Text(plain_word(sig, w))
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

fn terms_json<K: Ord + Clone>(
    v: &LinComb<K>,
    basis: &'static str,
    m: impl Fn(&K) -> Monomial,
) -> String {
    let terms = v
        .iter()
        .map(|(k, c)| TermJson {
            coeff: coefficient(c),
            monomial: m(k),
        })
        .collect();
    to_json(&TermsJson { basis, terms })
}

fn pairs_json<K: Ord + Clone>(
    v: &LinComb<(K, K)>,
    basis: &'static str,
    m: impl Fn(&K) -> Monomial,
) -> String {
    let pairs = v
        .iter()
        .map(|((l, r), c)| PairJson {
            coeff: coefficient(c),
            left: m(l),
            right: m(r),
        })
        .collect();
    to_json(&PairsJson { basis, pairs })
}

/// Draws each term as a coefficient header followed by its trees.
fn ascii_terms<'a, K: 'a>(
    terms: impl Iterator<Item = (&'a K, &'a Coefficient)>,
    draw: &dyn Fn(&K) -> String,
) -> String {
    let mut out = String::new();
    for (k, c) in terms {
        out.push_str(&format!("coefficient {}\n", coefficient(c)));
        out.push_str(&draw(k));
    }
    if out.is_empty() {
        out.push_str("0\n");
    }
    out
}

/// Renders `v`; the result never ends with a newline.
pub fn render(sig: &Signature, v: &Value, format: Format) -> String {
    let text = match (v, format) {
        (Value::Words(v), Format::Plain) => plain_terms(v.iter(), &|w| plain_word(sig, w)),
        (Value::Forests(v), Format::Plain) => plain_terms(v.iter(), &|f| plain_forest(sig, f)),
        (Value::WordPairs(v), Format::Plain) => plain_terms(v.iter(), &|(l, r)| {
            format!("{} ⊗ {}", plain_word(sig, l), plain_word(sig, r))
        }),
        (Value::ForestPairs(v), Format::Plain) => plain_terms(v.iter(), &|(l, r)| {
            format!("{} ⊗ {}", plain_forest(sig, l), plain_forest(sig, r))
        }),
        (Value::Words(v), Format::Latex) => latex_terms(v.iter(), &|w| latex_word(sig, w)),
        (Value::Forests(v), Format::Latex) => latex_terms(v.iter(), &|f| latex_forest(sig, f)),
        (Value::WordPairs(v), Format::Latex) => latex_terms(v.iter(), &|(l, r)| {
            format!("{} \\otimes {}", latex_word(sig, l), latex_word(sig, r))
        }),
        (Value::ForestPairs(v), Format::Latex) => latex_terms(v.iter(), &|(l, r)| {
            format!("{} \\otimes {}", latex_forest(sig, l), latex_forest(sig, r))
        }),
        (Value::Words(v), Format::AsciiTree) => {
            ascii_terms(v.iter(), &|w| ascii_forest(sig, &theta(w)))
        }
        (Value::Forests(v), Format::AsciiTree) => ascii_terms(v.iter(), &|f| ascii_forest(sig, f)),
        (Value::WordPairs(v), Format::AsciiTree) => ascii_terms(v.iter(), &|(l, r)| {
            format!(
                "left\n{}right\n{}",
                ascii_forest(sig, &theta(l)),
                ascii_forest(sig, &theta(r))
            )
        }),
        (Value::ForestPairs(v), Format::AsciiTree) => ascii_terms(v.iter(), &|(l, r)| {
            format!(
                "left\n{}right\n{}",
                ascii_forest(sig, l),
                ascii_forest(sig, r)
            )
        }),
        (Value::Words(v), Format::Json) => terms_json(v, "word", |w| word_json(sig, w)),
        (Value::Forests(v), Format::Json) => terms_json(v, "forest", |f| forest_json(sig, f)),
        (Value::WordPairs(v), Format::Json) => pairs_json(v, "word", |w| word_json(sig, w)),
        (Value::ForestPairs(v), Format::Json) => pairs_json(v, "forest", |f| forest_json(sig, f)),
    };
    text.trim_end_matches('\n').to_string()
}
