//! Text renderings of words, forests and their linear combinations.
//!
//! The plain notation writes `⌊u⌋_ω` as `[u]_ω`, separates atoms with spaces
//! and writes the empty word as `1`. Forests use `ω(children)` for internal
//! vertices.

use num_traits::{One, Signed, Zero};

use crate::forest::{theta_inv, Decoration, Forest, Tree};
use crate::linear::{Coefficient, LinComb};
use crate::signature::Signature;
use crate::word::{Atom, Word};

pub fn plain_word(sig: &Signature, w: &Word) -> String {
    if w.is_one() {
        return "1".to_string();
    }
    w.atoms()
        .iter()
        .map(|a| match a {
            Atom::Letter(l) => sig.letter_name(*l).to_string(),
            Atom::Bracket(op, body) => {
                format!("[{}]_{}", plain_word(sig, body), sig.operator_name(*op))
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn latex_word(sig: &Signature, w: &Word) -> String {
    if w.is_one() {
        return "1".to_string();
    }
    w.atoms()
        .iter()
        .map(|a| match a {
            Atom::Letter(l) => sig.letter_name(*l).to_string(),
            Atom::Bracket(op, body) => {
                format!(
                    "\\lfloor {} \\rfloor_{{{}}}",
                    latex_word(sig, body),
                    sig.operator_name(*op)
                )
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn decoration_name(sig: &Signature, d: Decoration) -> &str {
    match d {
        Decoration::Letter(l) => sig.letter_name(l),
        Decoration::Operator(op) => sig.operator_name(op),
    }
}

fn plain_tree(sig: &Signature, t: &Tree) -> String {
    let name = decoration_name(sig, t.decoration());
    if t.children().is_one() {
        name.to_string()
    } else {
        format!("{name}({})", plain_forest(sig, t.children()))
    }
}

/// `a(x y) b` style; the empty forest is `1`.
pub fn plain_forest(sig: &Signature, f: &Forest) -> String {
    if f.is_one() {
        return "1".to_string();
    }
    f.trees()
        .iter()
        .map(|t| plain_tree(sig, t))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Nested `B^+_{ω}` notation with `\bullet` leaves.
pub fn latex_forest(sig: &Signature, f: &Forest) -> String {
    if f.is_one() {
        return "1".to_string();
    }
    f.trees()
        .iter()
        .map(|t| {
            let name = decoration_name(sig, t.decoration());
            if t.children().is_one() {
                format!("\\bullet_{{{name}}}")
            } else {
                format!("B^+_{{{name}}}({})", latex_forest(sig, t.children()))
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn ascii_forest(sig: &Signature, f: &Forest) -> String {
    f.ascii_tree(&|d| decoration_name(sig, d).to_string())
}

/// Writes `Σ c_i m_i` as `m + 2/3 * m' - m''`, largest term first.
pub fn plain_terms<'a, K: 'a>(
    terms: impl Iterator<Item = (&'a K, &'a Coefficient)>,
    render: &dyn Fn(&K) -> String,
) -> String {
    let mut out = String::new();
    for (i, (k, c)) in terms.enumerate() {
        let body = render(k);
        let mag = c.abs();
        let sign = if c.is_negative() { "-" } else { "+" };
        if i == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        if mag.is_one() {
            out.push_str(&body);
        } else {
            out.push_str(&format!("{mag} * {body}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn latex_terms<'a, K: 'a>(
    terms: impl Iterator<Item = (&'a K, &'a Coefficient)>,
    render: &dyn Fn(&K) -> String,
) -> String {
    let mut out = String::new();
    for (i, (k, c)) in terms.enumerate() {
        let mag = c.abs();
        if i == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        if !mag.is_one() {
            if mag.is_integer() {
                out.push_str(&format!("{mag} "));
            } else {
                out.push_str(&format!("\\frac{{{}}}{{{}}} ", mag.numer(), mag.denom()));
            }
        }
        out.push_str(&render(k));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn plain_lincomb(sig: &Signature, v: &LinComb<Word>) -> String {
    plain_terms(v.iter(), &|w| plain_word(sig, w))
}

pub fn plain_tensor(sig: &Signature, v: &LinComb<(Word, Word)>) -> String {
    plain_terms(v.iter(), &|(l, r)| {
        format!("{} ⊗ {}", plain_word(sig, l), plain_word(sig, r))
    })
}

pub fn plain_forest_lincomb(sig: &Signature, v: &LinComb<Forest>) -> String {
    plain_terms(v.iter(), &|f| plain_forest(sig, f))
}

/// Renders a coefficient as `p` or `p/q`.
pub fn coefficient(c: &Coefficient) -> String {
    if c.is_zero() {
        "0".to_string()
    } else {
        c.to_string()
    }
}

/// Words name forests through `θ⁻¹` in witnesses.
pub fn plain_forest_as_word(sig: &Signature, f: &Forest) -> String {
    plain_word(sig, &theta_inv(f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::theta;
    use crate::linear::{q, ratio};
    use crate::signature::{Letter, Operator};

    fn sig() -> Signature {
        Signature::standard(2, &[q(1), q(-1)]).unwrap()
    }

    #[test]
    fn plain_examples() {
        let sig = sig();
        let (a, b) = (Operator(0), Operator(1));
        let w = Word::bracket(a, Word::one()).concat(&Word::bracket(b, Word::one()));
        assert_eq!(plain_word(&sig, &w), "[1]_a [1]_b");
        assert_eq!(plain_word(&sig, &Word::one()), "1");
        let v = LinComb::basis(Word::bracket(a, Word::letters([Letter(0), Letter(1)])))
            + LinComb::term(Word::letter(Letter(0)), ratio(-2, 3));
        assert_eq!(plain_lincomb(&sig, &v), "[x y]_a - 2/3 * x");
        assert_eq!(plain_lincomb(&sig, &LinComb::zero()), "0");
        assert_eq!(plain_lincomb(&sig, &-v.clone()), "-[x y]_a + 2/3 * x");
        assert_eq!(
            latex_terms(v.iter(), &|w| latex_word(&sig, w)),
            "\\lfloor x y \\rfloor_{a} - \\frac{2}{3} x"
        );
    }

    #[test]
    fn forest_notation() {
        let sig = sig();
        let w = Word::bracket(Operator(0), Word::letters([Letter(0), Letter(1)]))
            .concat(&Word::bracket(Operator(1), Word::one()));
        let f = theta(&w);
        assert_eq!(plain_forest(&sig, &f), "a(x y) b");
        assert_eq!(
            latex_forest(&sig, &f),
            "B^+_{a}(\\bullet_{x} \\bullet_{y}) \\bullet_{b}"
        );
    }
}
