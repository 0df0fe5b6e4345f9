use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::coeff::CoeffSeq;
use super::poly1::Poly1;
use super::PolyError;

/// Exponent pair `(s_exp, t_exp)` of a monomial `s^a t^b`.
pub type Monomial = (u32, u32);

/// Sparse polynomial in the indeterminates `s` and `t` with integer
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Poly2 {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn s() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// `c * s^a * t^b`.
    pub fn monomial(c: impl Into<BigInt>, a: u32, b: u32) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a, b), c);
        }
        Self { terms }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// Builds a polynomial from `(s_exp, t_exp, coeff)` triples, merging
    /// repeated monomials.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (a, b, c) in terms {
            p.add_term((a, b), c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, a: u32, b: u32) -> BigInt {
        self.terms.get(&(a, b)).cloned().unwrap_or_default()
    }

    /// Iterates over `(monomial, coeff)` in lexicographic order of
    /// `(s_exp, t_exp)`, ascending.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> + '_ {
        self.terms.iter()
    }

    /// Terms in display order: `s` exponent descending, then `t` ascending.
    pub fn display_terms(&self) -> Vec<(Monomial, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, c)| (*m, c)).collect();
        v.sort_by(|(x, _), (y, _)| y.0.cmp(&x.0).then(x.1.cmp(&y.1)));
        v
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Sum of all coefficients that are negative, as `(monomial, coeff)`.
    pub fn negative_terms(&self) -> Vec<(Monomial, BigInt)> {
        self.terms
            .iter()
            .filter(|(_, c)| c.is_negative())
            .map(|(m, c)| (*m, c.clone()))
            .collect()
    }

    /// Lexicographically largest monomial with `s > t`.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact evaluation at integer `(s, t)`.
    pub fn eval(&self, s0: &BigInt, t0: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(&(a, b), c)| c * num_traits::pow(s0.clone(), a as usize) * num_traits::pow(t0.clone(), b as usize))
            .sum()
    }

    pub fn eval_i64(&self, s0: i64, t0: i64) -> BigInt {
        self.eval(&BigInt::from(s0), &BigInt::from(t0))
    }

    /// Substitutes `s -> 1 + q`, `t -> -q`.
    pub fn specialize_q(&self) -> Poly1 {
        let one_plus_q = Poly1::from_ints([1, 1]);
        let minus_q = Poly1::from_ints([0, -1]);
        self.substitute(&one_plus_q, &minus_q)
    }

    /// Substitutes univariate polynomials for `s` and `t`.
    pub fn substitute(&self, s_val: &Poly1, t_val: &Poly1) -> Poly1 {
        let max_a = self.terms.keys().map(|m| m.0).max().unwrap_or(0);
        let max_b = self.terms.keys().map(|m| m.1).max().unwrap_or(0);
        let s_pows = powers(s_val, max_a);
        let t_pows = powers(t_val, max_b);
        let mut out = Poly1::zero();
        for (&(a, b), c) in &self.terms {
            let term = (&s_pows[a as usize] * &t_pows[b as usize]).scale_int(c);
            out = &out + &term;
        }
        out
    }

    /// Weighted degree `s_exp + 2 * t_exp` of every monomial, if all agree.
    pub fn homogeneous_weight(&self) -> Option<u32> {
        let mut weights = self.terms.keys().map(|&(a, b)| a + 2 * b);
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }

    pub fn coeff_view(&self) -> Result<CoeffSeq, PolyError> {
        CoeffSeq::from_poly(self)
    }

    /// Exact quotient `self / divisor` over `Z[s, t]`.
    pub fn exact_div(&self, divisor: &Poly2) -> Result<Poly2, PolyError> {
        if divisor.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Poly2::zero());
        }
        if divisor.is_one() {
            return Ok(self.clone());
        }
        if let (Some(_), Some(_)) = (self.homogeneous_weight(), divisor.homogeneous_weight()) {
            let num = CoeffSeq::from_poly(self)?;
            let den = CoeffSeq::from_poly(divisor)?;
            return num.exact_div(&den).map(|q| q.to_poly());
        }
        self.long_div(divisor)
    }

    /// Multivariate division in lex order `s > t`; fails on any nonzero
    /// remainder or non-integral quotient coefficient.
    fn long_div(&self, divisor: &Poly2) -> Result<Poly2, PolyError> {
        let (&(la, lb), lc) = divisor.leading_term().expect("nonzero divisor");
        let mut rem = self.clone();
        let mut quot = Poly2::zero();
        while let Some((&(ra, rb), rc)) = rem.leading_term() {
            if ra < la || rb < lb {
                return Err(PolyError::NotDivisible);
            }
            let (c, r) = rc.div_rem(lc);
            if !r.is_zero() {
                return Err(PolyError::NotDivisible);
            }
            let q_term = Poly2::monomial(c, ra - la, rb - lb);
            rem = &rem - &(&q_term * divisor);
            quot += &q_term;
        }
        Ok(quot)
    }

    /// Serializable form: `{"terms":[{"s":..,"t":..,"c":".."}]}` sorted by
    /// `s` descending then `t` ascending.
    pub fn to_json_value(&self) -> PolyJson {
        PolyJson {
            terms: self
                .display_terms()
                .into_iter()
                .map(|((a, b), c)| TermJson {
                    s: a,
                    t: b,
                    c: c.to_string(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("polynomial json")
    }

    pub fn from_json(text: &str) -> Result<Self, PolyError> {
        let raw: PolyJson = serde_json::from_str(text).map_err(|e| PolyError::Parse(e.to_string()))?;
        raw.try_into()
    }
}

fn powers(base: &Poly1, max: u32) -> Vec<Poly1> {
    let mut v = Vec::with_capacity(max as usize + 1);
    v.push(Poly1::one());
    for i in 0..max as usize {
        let next = &v[i] * base;
        v.push(next);
    }
    v
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub s: u32,
    pub t: u32,
    pub c: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub terms: Vec<TermJson>,
}

impl TryFrom<PolyJson> for Poly2 {
    type Error = PolyError;

    fn try_from(raw: PolyJson) -> Result<Self, Self::Error> {
        let mut p = Poly2::zero();
        for term in raw.terms {
            let c: BigInt = term
                .c
                .parse()
                .map_err(|_| PolyError::Parse(format!("bad coefficient {:?}", term.c)))?;
            p.add_term((term.s, term.t), c);
        }
        Ok(p)
    }
}

impl Serialize for Poly2 {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_json_value().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Poly2 {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = PolyJson::deserialize(deserializer)?;
        raw.try_into().map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, ((a, b), c)) in self.display_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            if !abs.is_one() || (a == 0 && b == 0) {
                factors.push(abs.to_string());
            }
            match a {
                0 => {}
                1 => factors.push("s".to_string()),
                _ => factors.push(format!("s^{a}")),
            }
            match b {
                0 => {}
                1 => factors.push("t".to_string()),
                _ => factors.push(format!("t^{b}")),
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly2({self})")
    }
}

impl Add for &Poly2 {
    type Output = Poly2;

    fn add(self, rhs: &Poly2) -> Poly2 {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Poly2 {
    type Output = Poly2;

    fn add(mut self, rhs: Poly2) -> Poly2 {
        self += &rhs;
        self
    }
}

impl AddAssign<&Poly2> for Poly2 {
    fn add_assign(&mut self, rhs: &Poly2) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl Neg for &Poly2 {
    type Output = Poly2;

    fn neg(self) -> Poly2 {
        Poly2 {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Sub for &Poly2 {
    type Output = Poly2;

    fn sub(self, rhs: &Poly2) -> Poly2 {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Mul for &Poly2 {
    type Output = Poly2;

    fn mul(self, rhs: &Poly2) -> Poly2 {
        let mut out = Poly2::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for Poly2 {
    type Output = Poly2;

    fn mul(self, rhs: Poly2) -> Poly2 {
        &self * &rhs
    }
}

impl std::iter::Sum for Poly2 {
    fn sum<I: Iterator<Item = Poly2>>(iter: I) -> Self {
        iter.fold(Poly2::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl std::iter::Product for Poly2 {
    fn product<I: Iterator<Item = Poly2>>(iter: I) -> Self {
        iter.fold(Poly2::one(), |acc, p| &acc * &p)
    }
}

impl<'a> std::iter::Product<&'a Poly2> for Poly2 {
    fn product<I: Iterator<Item = &'a Poly2>>(iter: I) -> Self {
        iter.fold(Poly2::one(), |acc, p| &acc * p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(u32, u32, i64)]) -> Poly2 {
        Poly2::from_terms(terms.iter().map(|&(a, b, c)| (a, b, c)))
    }

    #[test]
    fn addition_examples() {
        let s = Poly2::s();
        let s2t = p(&[(2, 0, 1), (0, 1, 1)]);
        assert_eq!(&s + &s2t, p(&[(2, 0, 1), (1, 0, 1), (0, 1, 1)]));
        assert_eq!(&s2t + &Poly2::zero(), s2t);
        let q = p(&[(3, 0, 1), (1, 1, 2)]);
        assert!((&q + &(-&q)).is_zero());
    }

    #[test]
    fn multiplication_examples() {
        let s2t = p(&[(2, 0, 1), (0, 1, 1)]);
        assert_eq!(&Poly2::s() * &s2t, p(&[(3, 0, 1), (1, 1, 1)]));
        let prod = &s2t * &p(&[(2, 0, 1), (0, 1, 2)]);
        assert_eq!(prod, p(&[(4, 0, 1), (2, 1, 3), (0, 2, 2)]));
        // cross-check by evaluation at (2,-1) and (1,1)
        assert_eq!(prod.eval_i64(2, -1), BigInt::from(3 * 2));
        assert_eq!(prod.eval_i64(1, 1), BigInt::from(2 * 3));
        assert_eq!(&s2t * &Poly2::one(), s2t);
    }

    #[test]
    fn exact_division_examples() {
        let num = p(&[(4, 0, 1), (2, 1, 3), (0, 2, 2)]);
        let den = p(&[(2, 0, 1), (0, 1, 1)]);
        let q = num.exact_div(&den).unwrap();
        assert_eq!(q, p(&[(2, 0, 1), (0, 1, 2)]));
        assert_eq!(&q * &den, num);
        assert_eq!(num.exact_div(&Poly2::one()).unwrap(), num);
        assert_eq!(den.exact_div(&Poly2::s()), Err(PolyError::NotDivisible));
        assert_eq!(den.exact_div(&Poly2::zero()), Err(PolyError::DivisionByZero));
    }

    #[test]
    fn long_division_on_mixed_weights() {
        // (s + t)(s^2 + 1) is not weighted-homogeneous
        let a = p(&[(1, 0, 1), (0, 1, 1)]);
        let b = p(&[(2, 0, 1), (0, 0, 1)]);
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&b).unwrap(), a);
        assert_eq!(prod.exact_div(&a).unwrap(), b);
        assert_eq!(b.exact_div(&a), Err(PolyError::NotDivisible));
        // non-integral quotient
        let two_s = p(&[(1, 0, 2), (0, 0, 2)]);
        let s1 = p(&[(1, 0, 1), (0, 0, 3)]);
        assert_eq!(two_s.exact_div(&s1), Err(PolyError::NotDivisible));
    }

    #[test]
    fn evaluation_examples() {
        let l5 = p(&[(4, 0, 1), (2, 1, 3), (0, 2, 1)]);
        assert_eq!(l5.eval_i64(1, 1), BigInt::from(5));
        assert_eq!(l5.eval_i64(2, -1), BigInt::from(5));
        assert_eq!(Poly2::zero().eval_i64(7, -3), BigInt::zero());
    }

    #[test]
    fn q_specialization_examples() {
        let l3 = p(&[(2, 0, 1), (0, 1, 1)]);
        assert_eq!(l3.specialize_q(), Poly1::from_ints([1, 1, 1]));
        assert_eq!(Poly2::s().specialize_q(), Poly1::from_ints([1, 1]));
        let b42 = p(&[(4, 0, 1), (2, 1, 3), (0, 2, 2)]);
        assert_eq!(b42.specialize_q(), Poly1::from_ints([1, 1, 2, 1, 1]));
    }

    #[test]
    fn display_order_and_signs() {
        let b42 = p(&[(4, 0, 1), (2, 1, 3), (0, 2, 2)]);
        assert_eq!(b42.to_string(), "s^4 + 3*s^2*t + 2*t^2");
        assert_eq!(p(&[(3, 0, 1), (1, 1, 2)]).to_string(), "s^3 + 2*s*t");
        assert_eq!(p(&[(2, 0, 1), (0, 1, -1)]).to_string(), "s^2 - t");
        assert_eq!(p(&[(0, 0, -3)]).to_string(), "-3");
        assert_eq!(Poly2::zero().to_string(), "0");
        assert_eq!(Poly2::one().to_string(), "1");
    }

    #[test]
    fn json_layout() {
        let b42 = p(&[(4, 0, 1), (2, 1, 3), (0, 2, 2)]);
        assert_eq!(
            b42.to_json(),
            r#"{"terms":[{"s":4,"t":0,"c":"1"},{"s":2,"t":1,"c":"3"},{"s":0,"t":2,"c":"2"}]}"#
        );
        assert_eq!(Poly2::from_json(&b42.to_json()).unwrap(), b42);
        assert!(Poly2::from_json(r#"{"terms":[{"s":1,"t":0,"c":"x"}]}"#).is_err());
    }
}
