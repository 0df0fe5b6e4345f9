//! Catalan-family Lucas analogues: Lucas-Catalan and Fuss-Catalan
//! polynomials, Coxeter-Catalan polynomials of every finite irreducible
//! type, rational Catalan and Narayana analogues.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::exec::Exec;
use crate::lucas::{d_lucasnomial, lucas, lucasnomial};
use crate::polyring::{Poly2, PolyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoxError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("gcd({a}, {b}) != 1")]
    NotCoprime { a: u32, b: u32 },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A finite irreducible Coxeter group, up to isomorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoxeterType {
    A(u32),
    B(u32),
    D(u32),
    I2(u32),
    H3,
    H4,
    F4,
    E6,
    E7,
    E8,
}

impl CoxeterType {
    pub const EXCEPTIONAL: [CoxeterType; 6] = [
        CoxeterType::H3,
        CoxeterType::H4,
        CoxeterType::F4,
        CoxeterType::E6,
        CoxeterType::E7,
        CoxeterType::E8,
    ];

    pub fn validate(&self) -> Result<(), CoxError> {
        let bad = |msg: &str| Err(CoxError::InvalidParameters(format!("{self}: {msg}")));
        match *self {
            CoxeterType::A(n) | CoxeterType::B(n) if n == 0 => bad("rank must be positive"),
            CoxeterType::D(n) if n < 3 => bad("type D needs n >= 3"),
            CoxeterType::I2(m) if m < 2 => bad("I2(m) needs m >= 2"),
            _ => Ok(()),
        }
    }

    /// Degrees of the fundamental invariants, in the usual listing order
    /// (for `D_n` the last entry is `n`, so the list need not be sorted).
    pub fn degrees(&self) -> Vec<u32> {
        match *self {
            CoxeterType::A(n) => (2..=n + 1).collect(),
            CoxeterType::B(n) => (1..=n).map(|i| 2 * i).collect(),
            CoxeterType::D(n) => (1..n).map(|i| 2 * i).chain([n]).collect(),
            CoxeterType::I2(m) => vec![2, m],
            CoxeterType::H3 => vec![2, 6, 10],
            CoxeterType::H4 => vec![2, 12, 20, 30],
            CoxeterType::F4 => vec![2, 6, 8, 12],
            CoxeterType::E6 => vec![2, 5, 6, 8, 9, 12],
            CoxeterType::E7 => vec![2, 6, 8, 10, 12, 14, 18],
            CoxeterType::E8 => vec![2, 8, 12, 14, 18, 20, 24, 30],
        }
    }

    /// The Coxeter number: the largest degree.
    pub fn coxeter_number(&self) -> u32 {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn rank(&self) -> usize {
        self.degrees().len()
    }

    /// Builds a type from its family letter and, for the infinite families,
    /// the rank (or `m` for `I2`).
    pub fn from_family(family: &str, param: Option<u32>) -> Result<Self, CoxError> {
        let need = |p: Option<u32>| {
            p.ok_or_else(|| CoxError::InvalidParameters(format!("type {family} needs a parameter")))
        };
        let ty = match family.to_ascii_uppercase().as_str() {
            "A" => CoxeterType::A(need(param)?),
            "B" => CoxeterType::B(need(param)?),
            "D" => CoxeterType::D(need(param)?),
            "I2" => CoxeterType::I2(need(param)?),
            "H3" => CoxeterType::H3,
            "H4" => CoxeterType::H4,
            "F4" => CoxeterType::F4,
            "E6" => CoxeterType::E6,
            "E7" => CoxeterType::E7,
            "E8" => CoxeterType::E8,
            other => return Err(CoxError::InvalidParameters(format!("unknown type {other:?}"))),
        };
        ty.validate()?;
        Ok(ty)
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterType::A(n) => write!(f, "A{n}"),
            CoxeterType::B(n) => write!(f, "B{n}"),
            CoxeterType::D(n) => write!(f, "D{n}"),
            CoxeterType::I2(m) => write!(f, "I2({m})"),
            other => write!(f, "{other:?}"),
        }
    }
}

/// `C_n = {2n brace n} / {n+1}`.
pub fn lucas_catalan(n: u32) -> Result<Poly2, PolyError> {
    lucasnomial(2 * n, n as i64)?.exact_div(&lucas(n + 1))
}

/// `C_n = {2n-1 brace n-1} + t {2n-1 brace n-2}` for `n >= 2`.
pub fn verify_catalan_identity(n: u32) -> bool {
    assert!(n >= 2, "identity needs n >= 2");
    let m = 2 * n - 1;
    let rhs = || -> Result<Poly2, PolyError> {
        Ok(&lucasnomial(m, n as i64 - 1)? + &(&Poly2::t() * &lucasnomial(m, n as i64 - 2)?))
    };
    matches!((lucas_catalan(n), rhs()), (Ok(a), Ok(b)) if a == b)
}

/// `C_{n,k} = {(k+1)n brace n} / {kn+1}`.
pub fn fuss_catalan(n: u32, k: u32) -> Result<Poly2, PolyError> {
    assert!(k >= 1, "Fuss-Catalan needs k >= 1");
    lucasnomial((k + 1) * n, n as i64)?.exact_div(&lucas(k * n + 1))
}

/// `C_{n,k} = {(k+1)n-1 brace n-1}
///   + sum_{m=1..k} t^m {n-1}^(m-1) {(k-m)n+1} {(k+1)n-1 brace n-2}`.
///
/// The `m`-th summand collects the blocks whose path starts `WN` with
/// first-row index `m`: `m` forced dominoes, `m - 1` fixed gaps of `n - 2`
/// cells between them and `(k-m)n` fixed cells after the free run.
pub fn verify_fuss_identity(n: u32, k: u32) -> bool {
    assert!(n >= 2 && k >= 1, "identity needs n >= 2 and k >= 1");
    matches!((fuss_catalan(n, k), fuss_identity_rhs(n, k)), (Ok(a), Ok(b)) if a == b)
}

fn fuss_identity_rhs(n: u32, k: u32) -> Result<Poly2, PolyError> {
    let top = (k + 1) * n - 1;
    let tail = lucasnomial(top, n as i64 - 2)?;
    let mut sum = lucasnomial(top, n as i64 - 1)?;
    for m in 1..=k {
        let first_row = &(&Poly2::t().pow(m) * &lucas(n - 1).pow(m - 1)) * &lucas((k - m) * n + 1);
        sum += &(&first_row * &tail);
    }
    Ok(sum)
}

/// `prod {h + d_i} / prod {d_i}`.
pub fn coxeter_catalan(w: CoxeterType) -> Result<Poly2, CoxError> {
    coxeter_fuss_catalan(w, 1)
}

/// `prod {kh + d_i} / prod {d_i}`.
pub fn coxeter_fuss_catalan(w: CoxeterType, k: u32) -> Result<Poly2, CoxError> {
    w.validate()?;
    if k == 0 {
        return Err(CoxError::InvalidParameters("Fuss parameter must be positive".into()));
    }
    let h = w.coxeter_number();
    let degrees = w.degrees();
    let num: Poly2 = degrees.iter().map(|&d| lucas(k * h + d)).product();
    let den: Poly2 = degrees.iter().map(|&d| lucas(d)).product();
    Ok(num.exact_div(&den)?)
}

/// `{3n-2}/{n} * {2(n-1):2 brace n-1:2}`.
pub fn cat_d_formula(n: u32) -> Result<Poly2, PolyError> {
    assert!(n >= 1, "n must be positive");
    (&lucas(3 * n - 2) * &d_lucasnomial(2 * n - 2, n as i64 - 1, 2)?).exact_div(&lucas(n))
}

/// The Coxeter-Catalan polynomial of `D_n` agrees with the closed form.
pub fn verify_cat_d(n: u32) -> bool {
    assert!(n >= 3, "type D needs n >= 3");
    matches!((coxeter_catalan(CoxeterType::D(n)), cat_d_formula(n)), (Ok(a), Ok(b)) if a == b)
}

/// `{(d+1)n-d}/{n} * {2(n-1):d brace n-1:d}`.
pub fn d_cat_d(n: u32, d: u32) -> Result<Poly2, PolyError> {
    assert!(n >= 1 && d >= 1, "n and d must be positive");
    (&lucas((d + 1) * n - d) * &d_lucasnomial(2 * n - 2, n as i64 - 1, d)?).exact_div(&lucas(n))
}

/// `{(dm-l)n-(m-1)d}/{gn} * {m(n-1):d brace kn-1:d}` with
/// `g = gcd(kd, kd-l)`.
///
/// Needs positive integers with `l < kd < md`. When `kn - 1 > m(n-1)` the
/// d-Lucasnomial factor is out of range and the expression degenerates;
/// that case is rejected rather than reported as zero.
pub fn gen_cat_d(l: u32, k: u32, m: u32, d: u32, n: u32) -> Result<Poly2, CoxError> {
    if l == 0 || k == 0 || d == 0 || n == 0 || !(l < k * d && k * d < m * d) {
        return Err(CoxError::InvalidParameters(format!(
            "need positive l < kd < md, got l={l} k={k} m={m} d={d} n={n}"
        )));
    }
    if k * n - 1 > m * (n - 1) {
        return Err(CoxError::InvalidParameters(format!(
            "kn-1 = {} exceeds m(n-1) = {}",
            k * n - 1,
            m * (n - 1)
        )));
    }
    let g = (k * d).gcd(&(k * d - l));
    let top = (d * m - l) * n - (m - 1) * d;
    let num = &lucas(top) * &d_lucasnomial(m * (n - 1), (k * n - 1) as i64, d)?;
    Ok(num.exact_div(&lucas(g * n))?)
}

/// The generalized expression is a polynomial with nonnegative
/// coefficients.
pub fn verify_gen_cat_d(l: u32, k: u32, m: u32, d: u32, n: u32) -> Result<bool, CoxError> {
    match gen_cat_d(l, k, m, d, n) {
        Ok(p) => Ok(p.has_nonnegative_coeffs()),
        Err(CoxError::Poly(PolyError::NotDivisible)) => Ok(false),
        Err(e) => Err(e),
    }
}

/// `Cat(a, b) = {a+b brace a} / {a+b}` for coprime `a, b`.
pub fn rational_catalan(a: u32, b: u32) -> Result<Poly2, CoxError> {
    if a == 0 || b == 0 {
        return Err(CoxError::InvalidParameters("a and b must be positive".into()));
    }
    if a.gcd(&b) != 1 {
        return Err(CoxError::NotCoprime { a, b });
    }
    Ok(lucasnomial(a + b, a as i64)?.exact_div(&lucas(a + b))?)
}

/// `N_{n,k} = {n brace k}{n brace k-1} / {n}`.
pub fn narayana(n: u32, k: u32) -> Result<Poly2, CoxError> {
    if k == 0 || k > n {
        return Err(CoxError::InvalidParameters(format!("need 1 <= k <= n, got n={n} k={k}")));
    }
    let num = &lucasnomial(n, k as i64)? * &lucasnomial(n, k as i64 - 1)?;
    Ok(num.exact_div(&lucas(n))?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Finding,
}

/// One line of a findings report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Finding {
    pub op: String,
    pub params: serde_json::Value,
    pub status: Status,
    pub detail: String,
}

impl Finding {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("finding serializes")
    }
}

/// One JSON object per line.
pub fn findings_to_json_lines(findings: &[Finding]) -> String {
    findings.iter().map(|f| f.to_json_line() + "\n").collect()
}

fn nonnegativity_finding(op: &str, params: serde_json::Value, result: Result<Poly2, CoxError>) -> Finding {
    let (status, detail) = match result {
        Ok(p) if p.has_nonnegative_coeffs() => (Status::Pass, format!("{} terms, all coefficients nonnegative", p.num_terms())),
        Ok(p) => (
            Status::Finding,
            format!("negative coefficients at {:?}", p.negative_terms().iter().map(|(m, c)| (m, c.to_string())).collect::<Vec<_>>()),
        ),
        Err(CoxError::Poly(PolyError::NotDivisible)) => (Status::Finding, "quotient is not a polynomial".into()),
        Err(e) => (Status::Fail, e.to_string()),
    };
    Finding { op: op.into(), params, status, detail }
}

/// Nonnegativity of `N_{n,k}` for `1 <= k <= n <= max_n`.
pub fn narayana_sweep(max_n: u32, exec: Exec) -> Vec<Finding> {
    let params: Vec<(u32, u32)> = (1..=max_n).flat_map(|n| (1..=n).map(move |k| (n, k))).collect();
    exec.map(&params, |&(n, k)| nonnegativity_finding("narayana", json!({"n": n, "k": k}), narayana(n, k)))
}

/// Polynomiality and nonnegativity of `Cat(a, b)` for coprime
/// `1 <= a < b <= max`.
pub fn rational_catalan_sweep(max: u32, exec: Exec) -> Vec<Finding> {
    let params: Vec<(u32, u32)> = (1..=max)
        .flat_map(|b| (1..b).map(move |a| (a, b)))
        .filter(|(a, b)| a.gcd(b) == 1)
        .collect();
    exec.map(&params, |&(a, b)| {
        nonnegativity_finding("rational_catalan", json!({"a": a, "b": b}), rational_catalan(a, b))
    })
}

/// Coxeter-Catalan and Coxeter-Fuss-Catalan polynomials for the given
/// types and Fuss parameters `1..=max_k`.
pub fn coxeter_sweep(types: &[CoxeterType], max_k: u32, exec: Exec) -> Vec<Finding> {
    let params: Vec<(CoxeterType, u32)> =
        types.iter().flat_map(|&w| (1..=max_k).map(move |k| (w, k))).collect();
    exec.map(&params, |&(w, k)| {
        nonnegativity_finding(
            "coxeter_fuss_catalan",
            json!({"type": w.to_string(), "k": k}),
            coxeter_fuss_catalan(w, k),
        )
    })
}

/// Every valid `(l, k, m, d, n)` with positive `l < kd < md <= max_md`
/// and `n <= max_n`; parameter sets where the expression degenerates are
/// left out.
pub fn gen_cat_d_params(max_md: u32, max_n: u32) -> Vec<(u32, u32, u32, u32, u32)> {
    let mut out = Vec::new();
    for d in 1..=max_md {
        for m in 1..=max_md / d {
            for k in 1..m {
                for l in 1..k * d {
                    for n in 1..=max_n {
                        if k * n - 1 <= m * (n - 1) {
                            out.push((l, k, m, d, n));
                        }
                    }
                }
            }
        }
    }
    out
}

pub fn gen_cat_d_sweep(max_md: u32, max_n: u32, exec: Exec) -> Vec<Finding> {
    let params = gen_cat_d_params(max_md, max_n);
    exec.map(&params, |&(l, k, m, d, n)| {
        let p = json!({"l": l, "k": k, "m": m, "d": d, "n": n});
        let (status, detail) = match gen_cat_d(l, k, m, d, n) {
            Ok(q) if q.has_nonnegative_coeffs() => (Status::Pass, q.to_string()),
            Ok(q) => (Status::Fail, format!("negative coefficients in {q}")),
            Err(e) => (Status::Fail, e.to_string()),
        };
        Finding { op: "gen_cat_d".into(), params: p, status, detail }
    })
}
