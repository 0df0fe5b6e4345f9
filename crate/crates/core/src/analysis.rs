//! Coefficient-sequence diagnostics: unimodality, log-concavity and exact
//! real-rootedness of `f(y) = sum a_k y^k`, where `a_k` is the coefficient
//! of `s^(N-2k) t^k`.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::coxcat::{self, CoxError, CoxeterType};
use crate::lucas;
use crate::polyring::{real_rooted, CoeffSeq, Poly2, PolyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("cannot parse quantity {0:?}; expected e.g. lucasnomial:6:3, catalan:4, coxeter:B3")]
    BadExpr(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Cox(#[from] CoxError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoeffReport {
    pub weight: u32,
    #[serde(serialize_with = "as_strings")]
    pub coeffs: Vec<BigInt>,
    pub unimodal: bool,
    pub log_concave: bool,
    pub real_rooted: bool,
}

fn as_strings<S: serde::Serializer>(v: &[BigInt], ser: S) -> Result<S::Ok, S::Error> {
    ser.collect_seq(v.iter().map(|c| c.to_string()))
}

impl CoeffReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// `k,a_k` rows under a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,a_k\n");
        for (k, a) in self.coeffs.iter().enumerate() {
            out.push_str(&format!("{k},{a}\n"));
        }
        out
    }
}

/// `a_0 <= ... <= a_m >= a_{m+1} >= ...` for some `m`.
pub fn is_unimodal(a: &[BigInt]) -> bool {
    let peak = a.windows(2).take_while(|w| w[0] <= w[1]).count();
    a[peak..].windows(2).all(|w| w[0] >= w[1])
}

/// `a_k^2 >= a_{k-1} a_{k+1}` for all `k`, with zero outside the range.
pub fn is_log_concave(a: &[BigInt]) -> bool {
    // at the ends one neighbour is zero and the inequality is automatic
    a.windows(3).all(|w| &w[1] * &w[1] >= &w[0] * &w[2])
}

pub fn analyze(p: &Poly2) -> Result<CoeffReport, PolyError> {
    let seq = CoeffSeq::from_poly(p)?;
    let a = &seq.coeffs;
    Ok(CoeffReport {
        weight: seq.weight,
        unimodal: is_unimodal(a),
        log_concave: is_log_concave(a),
        real_rooted: real_rooted(&seq.generating_function()),
        coeffs: seq.coeffs,
    })
}

/// Evaluates a named quantity such as `lucas:7`, `lucastorial:5`,
/// `lucasnomial:6:3`, `dlucasnomial:4:2:2`, `catalan:4`, `fuss:3:2`,
/// `coxeter:E6`, `coxeter:D4`, `coxeter:I2:5`, `coxeter-fuss:B3:2`,
/// `narayana:6:3` or `rational:3:5`.
pub fn named_quantity(expr: &str) -> Result<Poly2, AnalysisError> {
    let bad = || AnalysisError::BadExpr(expr.to_string());
    let parts: Vec<&str> = expr.trim().split(':').collect();
    let num = |i: usize| -> Result<u32, AnalysisError> {
        parts.get(i).and_then(|p| p.trim().parse().ok()).ok_or_else(bad)
    };
    let arity = |n: usize| if parts.len() == n + 1 { Ok(()) } else { Err(bad()) };
    let coxeter = |name: &str, extra: Option<&str>| -> Result<CoxeterType, AnalysisError> {
        let name = name.trim();
        let (family, param) = if name.eq_ignore_ascii_case("I2") {
            ("I2", Some(extra.and_then(|m| m.parse().ok()).ok_or_else(bad)?))
        } else if ["H3", "H4", "F4", "E6", "E7", "E8"].iter().any(|x| x.eq_ignore_ascii_case(name)) {
            (name, None)
        } else {
            let (f, n) = name.split_at(1);
            (f, Some(n.parse().map_err(|_| bad())?))
        };
        Ok(CoxeterType::from_family(family, param)?)
    };
    let kind = parts[0].trim().to_ascii_lowercase();
    Ok(match kind.as_str() {
        "lucas" => {
            arity(1)?;
            lucas::lucas(num(1)?)
        }
        "lucastorial" => {
            arity(1)?;
            lucas::lucastorial(num(1)?)
        }
        "lucasnomial" => {
            arity(2)?;
            lucas::lucasnomial(num(1)?, num(2)? as i64)?
        }
        "dlucasnomial" => {
            arity(3)?;
            lucas::d_lucasnomial(num(1)?, num(2)? as i64, num(3)?)?
        }
        "catalan" => {
            arity(1)?;
            coxcat::lucas_catalan(num(1)?)?
        }
        "fuss" => {
            arity(2)?;
            if num(2)? == 0 {
                return Err(bad());
            }
            coxcat::fuss_catalan(num(1)?, num(2)?)?
        }
        "coxeter" => match parts.len() {
            2 | 3 => coxcat::coxeter_catalan(coxeter(parts[1], parts.get(2).copied())?)?,
            _ => return Err(bad()),
        },
        "coxeter-fuss" => {
            let (w, k) = match parts.len() {
                3 => (coxeter(parts[1], None)?, num(2)?),
                4 => (coxeter(parts[1], Some(parts[2]))?, num(3)?),
                _ => return Err(bad()),
            };
            coxcat::coxeter_fuss_catalan(w, k)?
        }
        "narayana" => {
            arity(2)?;
            coxcat::narayana(num(1)?, num(2)?)?
        }
        "rational" => {
            arity(2)?;
            coxcat::rational_catalan(num(1)?, num(2)?)?
        }
        _ => return Err(bad()),
    })
}

/// Runs [`analyze`] on a list of named quantities, in order.
pub fn analyze_all(exprs: &[String]) -> Vec<(String, Result<CoeffReport, AnalysisError>)> {
    exprs
        .iter()
        .map(|e| (e.clone(), named_quantity(e).and_then(|p| Ok(analyze(&p)?))))
        .collect()
}

/// True when the report satisfies real-rooted => log-concave => unimodal,
/// which is only claimed for positive sequences.
pub fn implications_hold(r: &CoeffReport) -> bool {
    if r.coeffs.iter().any(|c| c <= &BigInt::zero()) {
        return true;
    }
    (!r.real_rooted || r.log_concave) && (!r.log_concave || r.unimodal)
}
