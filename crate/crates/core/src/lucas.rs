//! The Lucas sequence `{n}` in `Z[s,t]` and the quantities built from it.

use std::collections::HashMap;
use std::sync::{LazyLock, RwLock};

use num_integer::Integer;

use crate::polyring::{Poly1, Poly2, PolyError};

/// Process-wide memo of `{0}, {1}, ...`. Reads take a shared lock; a miss
/// extends the table under the write lock.
pub struct LucasCache {
    memo: RwLock<Vec<Poly2>>,
}

impl LucasCache {
    fn new() -> Self {
        Self {
            memo: RwLock::new(vec![Poly2::zero(), Poly2::one()]),
        }
    }

    pub fn get(&self, n: u32) -> Poly2 {
        let n = n as usize;
        if let Some(p) = self.memo.read().unwrap().get(n) {
            return p.clone();
        }
        let mut memo = self.memo.write().unwrap();
        let (s, t) = (Poly2::s(), Poly2::t());
        while memo.len() <= n {
            let m = memo.len();
            let next = &(&s * &memo[m - 1]) + &(&t * &memo[m - 2]);
            memo.push(next);
        }
        memo[n].clone()
    }

    pub fn len(&self) -> usize {
        self.memo.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

static LUCAS: LazyLock<LucasCache> = LazyLock::new(LucasCache::new);
static LUCASNOMIAL: LazyLock<RwLock<HashMap<(u32, u32), Poly2>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

pub fn cache() -> &'static LucasCache {
    &LUCAS
}

/// `{n}`.
pub fn lucas(n: u32) -> Poly2 {
    LUCAS.get(n)
}

/// `{n}! = {1}{2}...{n}`.
pub fn lucastorial(n: u32) -> Poly2 {
    (1..=n).map(lucas).product()
}

/// `{a}{a-1}...{a-r+1}`, the empty product when `r = 0`.
pub fn falling_product(a: u32, r: u32) -> Poly2 {
    assert!(r <= a, "falling product runs below {{1}}");
    (0..r).map(|i| lucas(a - i)).product()
}

/// The Lucasnomial `{n}!/({k}!{n-k}!)`; zero when `k` is out of range.
pub fn lucasnomial(n: u32, k: i64) -> Result<Poly2, PolyError> {
    if k < 0 || k > n as i64 {
        return Ok(Poly2::zero());
    }
    let k = k as u32;
    if let Some(p) = LUCASNOMIAL.read().unwrap().get(&(n, k)) {
        return Ok(p.clone());
    }
    // {n}!/{n-k}! cancels to the top k factors
    let value = falling_product(n, k).exact_div(&lucastorial(k))?;
    LUCASNOMIAL.write().unwrap().insert((n, k), value.clone());
    Ok(value)
}

/// `{n brace k} = {k+1}{n-1 brace k} + t{n-k-1}{n-1 brace k-1}` for `0 < k < n`.
pub fn verify_lucasnomial_recursion(n: u32, k: u32) -> bool {
    assert!(0 < k && k < n, "recursion needs 0 < k < n");
    let k_ = k as i64;
    let (Ok(lhs), Ok(a), Ok(b)) = (
        lucasnomial(n, k_),
        lucasnomial(n - 1, k_),
        lucasnomial(n - 1, k_ - 1),
    ) else {
        return false;
    };
    let rhs = &(&lucas(k + 1) * &a) + &(&(&Poly2::t() * &lucas(n - k - 1)) * &b);
    lhs == rhs
}

/// `{k}...{k-r+1} {n brace k} = {n-k+r}...{n-k+1} {n brace n-k+r}` for
/// `0 <= r <= k <= n`.
pub fn verify_symmetry_identity(n: u32, k: u32, r: u32) -> bool {
    assert!(r <= k && k <= n, "symmetry needs 0 <= r <= k <= n");
    match symmetry_sides(n, k, r) {
        Ok((lhs, rhs)) => lhs == rhs,
        Err(_) => false,
    }
}

/// Both sides of the symmetry identity, in that order.
pub fn symmetry_sides(n: u32, k: u32, r: u32) -> Result<(Poly2, Poly2), PolyError> {
    let lhs = &falling_product(k, r) * &lucasnomial(n, k as i64)?;
    let rhs = &falling_product(n - k + r, r) * &lucasnomial(n, (n - k + r) as i64)?;
    Ok((lhs, rhs))
}

/// `{n:d}! = {d}{2d}...{nd}`.
pub fn d_lucastorial(n: u32, d: u32) -> Poly2 {
    assert!(d >= 1, "d must be positive");
    (1..=n).map(|i| lucas(i * d)).product()
}

/// `{n:d}!/({k:d}!{n-k:d}!)`; zero when `k` is out of range.
pub fn d_lucasnomial(n: u32, k: i64, d: u32) -> Result<Poly2, PolyError> {
    assert!(d >= 1, "d must be positive");
    if k < 0 || k > n as i64 {
        return Ok(Poly2::zero());
    }
    let k = k as u32;
    let top: Poly2 = (n - k + 1..=n).map(|i| lucas(i * d)).product();
    top.exact_div(&d_lucastorial(k, d))
}

/// `{n}/{m}` when it is a polynomial, found by attempting the division.
pub fn lucas_divides(m: u32, n: u32) -> Option<Poly2> {
    assert!(m >= 1 && n >= 1, "indices must be positive");
    lucas(n).exact_div(&lucas(m)).ok()
}

/// `{m}` divides `{n}` exactly when `m` divides `n`, and then the quotient
/// has nonnegative coefficients.
pub fn verify_hoggatt_long(m: u32, n: u32) -> bool {
    match lucas_divides(m, n) {
        Some(q) => n.is_multiple_of(m) && q.has_nonnegative_coeffs(),
        None => !n.is_multiple_of(m),
    }
}

/// For every `e <= max(m, n)`: `{e}` divides both `{m}` and `{n}` exactly
/// when `e` divides `gcd(m, n)`.
pub fn verify_gcd_lemma(m: u32, n: u32) -> bool {
    let g = m.gcd(&n);
    (1..=m.max(n)).all(|e| {
        let common = lucas_divides(e, m).is_some() && lucas_divides(e, n).is_some();
        common == g.is_multiple_of(e)
    })
}

/// Chebyshev polynomial of the second kind, `U_n(x)`.
pub fn chebyshev_u(n: u32) -> Poly1 {
    let two_x = Poly1::from_ints([0, 2]);
    let (mut prev, mut cur) = (Poly1::zero(), Poly1::one());
    for _ in 0..n {
        let next = &(&two_x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `{n}` under `s = 2x, t = -1` is `U_{n-1}(x)`.
pub fn verify_chebyshev_bridge(n: u32) -> bool {
    assert!(n >= 1, "bridge starts at n = 1");
    let image = lucas(n).substitute(&Poly1::from_ints([0, 2]), &Poly1::from_ints([-1]));
    image == chebyshev_u(n - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn hoggatt_long_small() {
        for m in 1..=8 {
            for n in 1..=8 {
                assert!(verify_hoggatt_long(m, n), "m={m} n={n}");
            }
        }
    }

    fn p(terms: &[(u32, u32, i64)]) -> Poly2 {
        Poly2::from_terms(terms.iter().copied())
    }

    #[test]
    fn first_lucas_polynomials() {
        assert_eq!(lucas(0), Poly2::zero());
        assert_eq!(lucas(1), Poly2::one());
        assert_eq!(lucas(2), Poly2::s());
        assert_eq!(lucas(3), p(&[(2, 0, 1), (0, 1, 1)]));
        assert_eq!(lucas(4), p(&[(3, 0, 1), (1, 1, 2)]));
        assert_eq!(lucas(5), p(&[(4, 0, 1), (2, 1, 3), (0, 2, 1)]));
    }

    #[test]
    fn lucastorials() {
        assert_eq!(lucastorial(0), Poly2::one());
        assert_eq!(lucastorial(3), p(&[(3, 0, 1), (1, 1, 1)]));
        assert_eq!(lucastorial(4), &lucastorial(3) * &lucas(4));
    }

    #[test]
    fn lucasnomial_examples() {
        assert_eq!(lucasnomial(4, 2).unwrap(), p(&[(4, 0, 1), (2, 1, 3), (0, 2, 2)]));
        for n in 0..8 {
            assert_eq!(lucasnomial(n, 0).unwrap(), Poly2::one());
            assert_eq!(lucasnomial(n, -1).unwrap(), Poly2::zero());
            assert_eq!(lucasnomial(n, n as i64 + 1).unwrap(), Poly2::zero());
        }
        assert_eq!(lucasnomial(6, 3).unwrap().eval_i64(2, -1), BigInt::from(20));
    }

    #[test]
    fn recursion_and_symmetry_small() {
        assert!(verify_lucasnomial_recursion(4, 2));
        assert!(verify_lucasnomial_recursion(2, 1));
        assert!(verify_symmetry_identity(7, 5, 2));
        let (lhs, _) = symmetry_sides(6, 4, 4).unwrap();
        assert_eq!(lhs, &lucastorial(4) * &lucasnomial(6, 4).unwrap());
    }

    #[test]
    fn d_divisible() {
        assert_eq!(d_lucastorial(2, 2), p(&[(4, 0, 1), (2, 1, 2)]));
        assert_eq!(d_lucastorial(0, 3), Poly2::one());
        assert_eq!(d_lucastorial(3, 1), lucastorial(3));
        assert_eq!(d_lucasnomial(4, 2, 2).unwrap().eval_i64(2, -1), BigInt::from(6));
        assert_eq!(d_lucasnomial(5, 0, 3).unwrap(), Poly2::one());
    }

    #[test]
    fn divisibility() {
        assert_eq!(lucas_divides(2, 4).unwrap(), p(&[(2, 0, 1), (0, 1, 2)]));
        assert_eq!(lucas_divides(7, 7).unwrap(), Poly2::one());
        assert!(lucas_divides(2, 3).is_none());
        assert!(verify_gcd_lemma(4, 6));
        assert!(verify_gcd_lemma(5, 7));
        assert!(verify_gcd_lemma(9, 9));
    }

    #[test]
    fn chebyshev() {
        assert_eq!(chebyshev_u(0), Poly1::one());
        assert_eq!(chebyshev_u(1), Poly1::from_ints([0, 2]));
        assert_eq!(chebyshev_u(2), Poly1::from_ints([-1, 0, 4]));
        assert_eq!(chebyshev_u(3), Poly1::from_ints([0, -4, 0, 8]));
        let one = num_rational::BigRational::from_integer(BigInt::from(1));
        assert_eq!(chebyshev_u(5).eval(&one), num_rational::BigRational::from_integer(BigInt::from(6)));
        assert!(verify_chebyshev_bridge(1));
        assert!(verify_chebyshev_bridge(4));
    }

    #[test]
    fn concurrent_cache_reads_agree() {
        let handles: Vec<_> = (0..4)
            .map(|i| std::thread::spawn(move || lucas(40 + i)))
            .collect();
        let got: Vec<Poly2> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        for (i, g) in got.iter().enumerate() {
            let expected = &(&Poly2::s() * &lucas(39 + i as u32)) + &(&Poly2::t() * &lucas(38 + i as u32));
            assert_eq!(g, &expected);
        }
    }
}
