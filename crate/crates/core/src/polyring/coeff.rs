use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::poly1::Poly1;
use super::poly2::Poly2;
use super::PolyError;

/// Coefficient sequence of a weighted-homogeneous polynomial: with weight
/// `N`, entry `k` is the coefficient of `s^(N-2k) t^k`.
///
/// Trailing zeros are trimmed; an empty sequence stands for zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffSeq {
    pub weight: u32,
    pub coeffs: Vec<BigInt>,
}

impl CoeffSeq {
    pub fn from_poly(p: &Poly2) -> Result<Self, PolyError> {
        if p.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let weight = p.homogeneous_weight().ok_or(PolyError::NotWeightedHomogeneous)?;
        let mut coeffs = vec![BigInt::zero(); (weight / 2) as usize + 1];
        for (&(_, b), c) in p.terms() {
            coeffs[b as usize] = c.clone();
        }
        Ok(Self::new(weight, coeffs))
    }

    pub fn new(weight: u32, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        assert!(
            coeffs.len() <= (weight / 2) as usize + 1,
            "coefficient sequence longer than its weight allows"
        );
        Self { weight, coeffs }
    }

    pub fn to_poly(&self) -> Poly2 {
        Poly2::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| (self.weight - 2 * k as u32, k as u32, c.clone())),
        )
    }

    /// `f(y) = sum a_k y^k`.
    pub fn generating_function(&self) -> Poly1 {
        Poly1::from_big_ints(self.coeffs.iter().cloned())
    }

    /// Exact division through the generating functions; the weights
    /// subtract.
    pub fn exact_div(&self, den: &CoeffSeq) -> Result<CoeffSeq, PolyError> {
        if den.coeffs.is_empty() {
            return Err(PolyError::DivisionByZero);
        }
        if self.coeffs.is_empty() {
            return Ok(CoeffSeq::new(0, Vec::new()));
        }
        if den.weight > self.weight {
            return Err(PolyError::NotDivisible);
        }
        let weight = self.weight - den.weight;
        let quot = int_poly_exact_div(&self.coeffs, &den.coeffs)?;
        if quot.len() > (weight / 2) as usize + 1 {
            return Err(PolyError::NotDivisible);
        }
        Ok(CoeffSeq::new(weight, quot))
    }
}

/// Exact division in `Z[y]` of dense, trailing-zero-free coefficient lists.
fn int_poly_exact_div(num: &[BigInt], den: &[BigInt]) -> Result<Vec<BigInt>, PolyError> {
    let dd = den.len() - 1;
    if num.len() < den.len() {
        return Err(PolyError::NotDivisible);
    }
    let lead = &den[dd];
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - dd];
    for i in (0..quot.len()).rev() {
        let top = &rem[i + dd];
        if top.is_zero() {
            continue;
        }
        let (q, r) = top.div_rem(lead);
        if !r.is_zero() {
            return Err(PolyError::NotDivisible);
        }
        for (j, d) in den.iter().enumerate() {
            rem[i + j] -= &q * d;
        }
        quot[i] = q;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return Err(PolyError::NotDivisible);
    }
    while quot.last().is_some_and(|c| c.is_zero()) {
        quot.pop();
    }
    Ok(quot)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(w: u32, c: &[i64]) -> CoeffSeq {
        CoeffSeq::new(w, c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn view_examples() {
        let l4 = Poly2::from_terms([(3, 0, 1), (1, 1, 2)]);
        assert_eq!(l4.coeff_view().unwrap(), seq(3, &[1, 2]));
        let s2t = Poly2::from_terms([(2, 0, 1), (0, 1, 1)]);
        assert_eq!(s2t.coeff_view().unwrap(), seq(2, &[1, 1]));
        let mixed = Poly2::from_terms([(1, 0, 1), (0, 1, 1)]);
        assert_eq!(mixed.coeff_view(), Err(PolyError::NotWeightedHomogeneous));
        assert_eq!(Poly2::zero().coeff_view(), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn pure_t_power_has_leading_zeros() {
        let t2 = Poly2::monomial(5, 0, 2);
        let view = t2.coeff_view().unwrap();
        assert_eq!(view, seq(4, &[0, 0, 5]));
        assert_eq!(view.to_poly(), t2);
    }

    #[test]
    fn quotient_degree_bound_is_enforced() {
        // t / s^2 is not a polynomial even though y / 1 divides in Z[y]
        let t = seq(2, &[0, 1]);
        let s2 = seq(2, &[1]);
        assert_eq!(t.exact_div(&s2), Err(PolyError::NotDivisible));
        let s = seq(1, &[1]);
        assert_eq!(t.exact_div(&s), Err(PolyError::NotDivisible));
        let t2 = seq(4, &[0, 0, 1]);
        assert_eq!(t2.exact_div(&t).unwrap(), t);
    }
}
