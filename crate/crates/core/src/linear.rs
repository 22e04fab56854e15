//! Exact-rational formal linear combinations over an ordered basis.
//!
//! [`LinComb`] stores only nonzero coefficients in a `BTreeMap`, so equality is
//! map equality and iteration order is fixed by the basis order. Tensors are
//! linear combinations over pairs (or triples) of basis elements.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::word::Word;

/// Exact rational scalar.
pub type Coefficient = BigRational;

/// Pairs of basis elements; the values of coproducts.
pub type TensorComb<B> = LinComb<(B, B)>;

/// Right-nested triple tensors, used for coassociativity comparisons.
pub type Tensor3<B> = LinComb<(B, B, B)>;

/// The integer `n` as a coefficient.
pub fn q(n: i64) -> Coefficient {
    Coefficient::from_integer(BigInt::from(n))
}

/// `num / den`, reduced.
///
/// # Panics
/// If `den == 0`.
pub fn ratio(num: i64, den: i64) -> Coefficient {
    Coefficient::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Coefficient>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinearError {
    #[error("the leading monomial of zero is undefined")]
    Zero,
    #[error("the leading monomial of a scalar is undefined")]
    Scalar,
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        LinComb::default()
    }

    /// `1 · basis`.
    pub fn basis(basis: K) -> Self {
        LinComb::term(basis, Coefficient::one())
    }

    pub fn term(basis: K, coeff: Coefficient) -> Self {
        let mut out = LinComb::zero();
        out.add_term(basis, coeff);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (K, Coefficient)>>(terms: I) -> Self {
        let mut out = LinComb::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `coeff · basis`, dropping the entry if it cancels.
    pub fn add_term(&mut self, basis: K, coeff: Coefficient) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(basis) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, c: &Coefficient, other: &LinComb<K>) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), c * v);
        }
    }

    pub fn coeff(&self, basis: &K) -> Coefficient {
        self.terms
            .get(basis)
            .cloned()
            .unwrap_or_else(Coefficient::zero)
    }

    pub fn contains(&self, basis: &K) -> bool {
        self.terms.contains_key(basis)
    }

    /// Terms in canonical (descending basis) order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&K, &Coefficient)> {
        self.terms.iter().rev()
    }

    pub fn basis_elements(&self) -> impl DoubleEndedIterator<Item = &K> {
        self.terms.keys().rev()
    }

    pub fn into_terms(self) -> impl DoubleEndedIterator<Item = (K, Coefficient)> {
        self.terms.into_iter().rev()
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        if c.is_zero() {
            return LinComb::zero();
        }
        LinComb {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), c * v)).collect(),
        }
    }

    /// The largest basis element and its coefficient.
    pub fn max_term(&self) -> Option<(&K, &Coefficient)> {
        self.terms.iter().next_back()
    }

    /// Removes and returns the largest term.
    pub fn pop_max(&mut self) -> Option<(K, Coefficient)> {
        self.terms.pop_last()
    }

    /// Removes and returns the smallest term.
    pub fn pop_min(&mut self) -> Option<(K, Coefficient)> {
        self.terms.pop_first()
    }

    /// Linear extension of `f`: `Σ c_b f(b)`.
    pub fn map_basis<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> LinComb<L>) -> LinComb<L> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(c, &f(k));
        }
        out
    }

    /// Relabels basis elements one-to-one (or many-to-one, merging coefficients).
    pub fn map_keys<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> L) -> LinComb<L> {
        LinComb::from_terms(self.terms.iter().map(|(k, c)| (f(k), c.clone())))
    }

    /// Bilinear extension of a basis product.
    pub fn product<L: Ord + Clone, M: Ord + Clone>(
        &self,
        other: &LinComb<L>,
        mut f: impl FnMut(&K, &L) -> LinComb<M>,
    ) -> LinComb<M> {
        let mut out = LinComb::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_scaled(&(ca * cb), &f(a, b));
            }
        }
        out
    }

    /// `Σ c_i d_j (u_i, v_j)`.
    pub fn tensor<L: Ord + Clone>(&self, other: &LinComb<L>) -> LinComb<(K, L)> {
        let mut out = LinComb::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term((a.clone(), b.clone()), ca * cb);
            }
        }
        out
    }

    /// Keeps the terms whose basis element satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&K) -> bool) -> Self {
        LinComb {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }
}

impl<B: Ord + Clone> LinComb<(B, B)> {
    /// Factor-wise product of tensors: `(a⊗b)(c⊗d) = ac ⊗ bd`.
    pub fn tensor_product(&self, other: &Self, mut mul: impl FnMut(&B, &B) -> LinComb<B>) -> Self {
        let mut out = LinComb::zero();
        for ((a, b), c1) in &self.terms {
            for ((c, d), c2) in &other.terms {
                let left = mul(a, c);
                let right = mul(b, d);
                out.add_scaled(&(c1 * c2), &left.tensor(&right));
            }
        }
        out
    }

    /// `(f ⊗ g)` applied to each pair.
    pub fn map_legs(
        &self,
        mut f: impl FnMut(&B) -> LinComb<B>,
        mut g: impl FnMut(&B) -> LinComb<B>,
    ) -> Self {
        let mut out = LinComb::zero();
        for ((a, b), c) in &self.terms {
            out.add_scaled(c, &f(a).tensor(&g(b)));
        }
        out
    }
}

impl LinComb<Word> {
    /// The `≤db`-largest monomial and its coefficient; undefined on scalars.
    pub fn leading(&self) -> Result<(&Word, &Coefficient), LinearError> {
        match self.max_term() {
            None => Err(LinearError::Zero),
            Some((w, _)) if w.is_one() => Err(LinearError::Scalar),
            Some(t) => Ok(t),
        }
    }
}

impl<K: Ord + Clone> Neg for LinComb<K> {
    type Output = Self;
    fn neg(mut self) -> Self {
        for v in self.terms.values_mut() {
            *v = -v.clone();
        }
        self
    }
}

impl<K: Ord + Clone> Neg for &LinComb<K> {
    type Output = LinComb<K>;
    fn neg(self) -> LinComb<K> {
        -self.clone()
    }
}

impl<K: Ord + Clone> AddAssign<&LinComb<K>> for LinComb<K> {
    fn add_assign(&mut self, rhs: &LinComb<K>) {
        for (k, v) in &rhs.terms {
            self.add_term(k.clone(), v.clone());
        }
    }
}

impl<K: Ord + Clone> AddAssign for LinComb<K> {
    fn add_assign(&mut self, rhs: LinComb<K>) {
        for (k, v) in rhs.terms {
            self.add_term(k, v);
        }
    }
}

impl<K: Ord + Clone> SubAssign<&LinComb<K>> for LinComb<K> {
    fn sub_assign(&mut self, rhs: &LinComb<K>) {
        for (k, v) in &rhs.terms {
            self.add_term(k.clone(), -v.clone());
        }
    }
}

impl<K: Ord + Clone> Add for LinComb<K> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl<K: Ord + Clone> Add<&LinComb<K>> for &LinComb<K> {
    type Output = LinComb<K>;
    fn add(self, rhs: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Ord + Clone> Sub for LinComb<K> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self -= &rhs;
        self
    }
}

impl<K: Ord + Clone> Sub<&LinComb<K>> for &LinComb<K> {
    type Output = LinComb<K>;
    fn sub(self, rhs: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<K: Ord + Clone> FromIterator<(K, Coefficient)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, Coefficient)>>(iter: I) -> Self {
        LinComb::from_terms(iter)
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.terms.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c})·{k:?}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signature::{Letter, Operator};
    use proptest::prelude::*;

    fn x() -> Word {
        Word::letter(Letter(0))
    }

    fn y() -> Word {
        Word::letter(Letter(1))
    }

    #[test]
    fn module_basics() {
        let v = LinComb::from_terms([(x(), q(2)), (y(), ratio(-1, 3))]);
        assert!((&v + &(-&v)).is_zero());
        assert!(v.scale(&q(0)).is_zero());
        let two_w = LinComb::term(x(), q(2));
        assert_eq!(two_w.scale(&ratio(1, 2)), LinComb::basis(x()));
    }

    #[test]
    fn map_basis_examples() {
        let v = LinComb::basis(x()) + LinComb::basis(y());
        assert_eq!(v.map_basis(|b| LinComb::basis(b.clone())), v);
        assert_eq!(
            v.map_basis(|b| LinComb::term(b.clone(), q(2))),
            v.scale(&q(2))
        );
        // Colliding images merge.
        let merged = v.map_basis(|_| LinComb::basis(x()));
        assert_eq!(merged, LinComb::term(x(), q(2)));
        assert_eq!(merged.len(), 1);
    }

    #[test]
    fn leading_examples() {
        let (a, b) = (Operator(0), Operator(1));
        let lead = Word::bracket(a, x()).concat(&Word::bracket(b, y()));
        let f = LinComb::basis(lead.clone())
            - LinComb::basis(Word::bracket(a, x().concat(&Word::bracket(b, y()))))
            - LinComb::basis(Word::bracket(b, Word::bracket(a, x()).concat(&y())))
            - LinComb::term(Word::bracket(a, x().concat(&y())), q(-1));
        assert_eq!(f.leading().unwrap(), (&lead, &q(1)));
        assert_eq!(LinComb::term(x(), q(3)).leading().unwrap(), (&x(), &q(3)));
        let v = LinComb::basis(x()) + LinComb::basis(x().concat(&y()));
        assert_eq!(v.leading().unwrap().0, &x().concat(&y()));
        assert_eq!(LinComb::<Word>::zero().leading(), Err(LinearError::Zero));
        assert_eq!(
            LinComb::basis(Word::one()).leading(),
            Err(LinearError::Scalar)
        );
    }

    #[test]
    fn tensor_is_bilinear() {
        let s = LinComb::basis(y());
        let uv = LinComb::basis(x()) + LinComb::basis(Word::one());
        let t = uv.tensor(&s);
        assert_eq!(t.coeff(&(x(), y())), q(1));
        assert_eq!(t.coeff(&(Word::one(), y())), q(1));
        assert!(uv.tensor(&LinComb::<Word>::zero()).is_zero());
    }

    #[test]
    fn iteration_is_descending() {
        let v = LinComb::from_terms([(Word::one(), q(1)), (x(), q(1)), (x().concat(&x()), q(1))]);
        let order: Vec<_> = v.basis_elements().cloned().collect();
        assert_eq!(order, vec![x().concat(&x()), x(), Word::one()]);
    }

    fn small_comb() -> impl Strategy<Value = LinComb<u8>> {
        proptest::collection::vec((0u8..6, -5i64..6, 1i64..4), 0..6)
            .prop_map(|ts| ts.into_iter().map(|(k, n, d)| (k, ratio(n, d))).collect())
    }

    proptest! {
        #[test]
        fn addition_is_associative_and_commutative(a in small_comb(), b in small_comb(), c in small_comb()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a + &b, &b + &a);
        }

        #[test]
        fn scaling_distributes(a in small_comb(), b in small_comb(), n in -4i64..5, d in 1i64..4) {
            let c = ratio(n, d);
            prop_assert_eq!((&a + &b).scale(&c), &a.scale(&c) + &b.scale(&c));
            prop_assert!(a.iter().all(|(_, v)| !v.is_zero()));
        }
    }
}
