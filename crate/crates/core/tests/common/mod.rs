//! Reference values computed without the library's own formulas.
#![allow(dead_code)]

use std::collections::HashMap;

use lucaskit::Poly2;

fn binom_u128(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

pub fn binomial(n: u32, k: u32) -> u128 {
    binom_u128(n as u64, k as u64)
}

/// `{n}` from the closed form `sum_j C(n-1-j, j) s^(n-1-2j) t^j`.
pub fn lucas(n: u32) -> Poly2 {
    if n == 0 {
        return Poly2::zero();
    }
    let m = n - 1;
    Poly2::from_terms((0..=m / 2).map(|j| (m - 2 * j, j, binomial(m - j, j) as i64)))
}

/// `{n brace k}` through `{n-k+1}{n-1 brace k-1} + t{k-1}{n-1 brace k}`,
/// a recursion that never divides.
pub struct Lucasnomials {
    memo: HashMap<(u32, u32), Poly2>,
}

impl Lucasnomials {
    pub fn new() -> Self {
        Self { memo: HashMap::new() }
    }

    pub fn get(&mut self, n: u32, k: u32) -> Poly2 {
        if k > n {
            return Poly2::zero();
        }
        if k == 0 || k == n {
            return Poly2::one();
        }
        if let Some(p) = self.memo.get(&(n, k)) {
            return p.clone();
        }
        let a = &lucas(n - k + 1) * &self.get(n - 1, k - 1);
        let b = &(&Poly2::t() * &lucas(k - 1)) * &self.get(n - 1, k);
        let p = &a + &b;
        self.memo.insert((n, k), p.clone());
        p
    }
}

/// `{(k+1)n brace n} / {kn+1}`.
pub fn fuss(n: u32, k: u32) -> Poly2 {
    Lucasnomials::new().get((k + 1) * n, n).exact_div(&lucas(k * n + 1)).expect("exact")
}

pub fn catalan(n: u32) -> Poly2 {
    fuss(n, 1)
}

/// `{n:d}! / ({k:d}! {n-k:d}!)` with `{n:d}! = prod {id}`.
pub fn d_lucasnomial(n: u32, k: u32, d: u32) -> Poly2 {
    let fact = |m: u32| -> Poly2 { (1..=m).map(|i| lucas(i * d)).product() };
    let den = &fact(k) * &fact(n - k);
    fact(n).exact_div(&den).expect("exact")
}

pub fn fibonacci(n: u32) -> u64 {
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..n {
        (a, b) = (b, a + b);
    }
    a
}

/// Integer polynomials in `q`, lowest degree first.
fn qmul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn qdiv(num: &[i128], den: &[i128]) -> Vec<i128> {
    let mut rem = num.to_vec();
    let lead = *den.last().unwrap();
    let mut quot = vec![0; num.len() - den.len() + 1];
    for i in (0..quot.len()).rev() {
        let c = rem[i + den.len() - 1] / lead;
        quot[i] = c;
        for (j, d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    assert!(rem.iter().all(|&r| r == 0), "inexact q-division");
    quot
}

fn q_factorial(n: u32) -> Vec<i128> {
    (1..=n).fold(vec![1], |acc, i| qmul(&acc, &vec![1; i as usize]))
}

/// Gaussian binomial `[n, k]_q`.
pub fn gaussian(n: u32, k: u32) -> Vec<i128> {
    qdiv(&q_factorial(n), &qmul(&q_factorial(k), &q_factorial(n - k)))
}

/// Degrees of the finite reflection groups from the classification.
pub fn coxeter_degrees(name: &str) -> Vec<u64> {
    let (family, rank) = name.split_at(1);
    let r: u64 = rank.parse().unwrap_or(0);
    match (family, name) {
        (_, "H3") => vec![2, 6, 10],
        (_, "H4") => vec![2, 12, 20, 30],
        (_, "F4") => vec![2, 6, 8, 12],
        (_, "E6") => vec![2, 5, 6, 8, 9, 12],
        (_, "E7") => vec![2, 6, 8, 10, 12, 14, 18],
        (_, "E8") => vec![2, 8, 12, 14, 18, 20, 24, 30],
        ("A", _) => (2..=r + 1).collect(),
        ("B", _) => (1..=r).map(|i| 2 * i).collect(),
        ("D", _) => (1..r).map(|i| 2 * i).chain([r]).collect(),
        _ => panic!("unknown type {name}"),
    }
}

/// `prod (kh + d_i) / d_i` in exact integer arithmetic.
pub fn coxeter_fuss_number(degrees: &[u64], k: u64) -> u128 {
    let h = *degrees.iter().max().unwrap();
    let num: u128 = degrees.iter().map(|&d| (k * h + d) as u128).product();
    let den: u128 = degrees.iter().map(|&d| d as u128).product();
    assert_eq!(num % den, 0);
    num / den
}
