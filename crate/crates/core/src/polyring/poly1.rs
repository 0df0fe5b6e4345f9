use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense univariate polynomial with rational coefficients, lowest degree
/// first. Trailing zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Poly1 {
    coeffs: Vec<BigRational>,
}

impl Poly1 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_ints([1])
    }

    /// The indeterminate itself.
    pub fn x() -> Self {
        Self::from_ints([0, 1])
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn from_ints<I: IntoIterator<Item = i64>>(coeffs: I) -> Self {
        Self::from_big_ints(coeffs.into_iter().map(BigInt::from))
    }

    pub fn from_big_ints<I: IntoIterator<Item = BigInt>>(coeffs: I) -> Self {
        Self::from_coeffs(coeffs.into_iter().map(BigRational::from_integer).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// Integer coefficients, when every coefficient is integral.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        self.scale(&BigRational::from_integer(c.clone()))
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Quotient and remainder over the rationals.
    pub fn div_rem(&self, den: &Poly1) -> (Poly1, Poly1) {
        let dd = den.degree().expect("division by zero polynomial");
        let lead = den.leading_coeff().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly1::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let q = &rem[i + dd] / lead;
            if q.is_zero() {
                continue;
            }
            for (j, d) in den.coeffs.iter().enumerate() {
                rem[i + j] -= &q * d;
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        (Poly1::from_coeffs(quot), Poly1::from_coeffs(rem))
    }

    /// Positive rational multiple with coprime integer coefficients.
    pub fn primitive_part(&self) -> Poly1 {
        if self.is_zero() {
            return Poly1::zero();
        }
        let denom_lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(denom_lcm.clone())).to_integer())
            .collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        Poly1::from_big_ints(ints.into_iter().map(|c| c / &content))
    }

    /// Monic-free gcd over the rationals, normalized to a primitive integer
    /// polynomial with positive leading coefficient.
    pub fn gcd(&self, other: &Poly1) -> Poly1 {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        if a.leading_coeff().is_some_and(|c| c.is_negative()) {
            a = -&a;
        }
        a
    }

    /// Sturm sequence `f, f', -rem(..), ...`, each term replaced by its
    /// primitive part (a positive multiple, so sign changes are unaffected).
    pub fn sturm_sequence(&self) -> Vec<Poly1> {
        let mut seq = vec![self.primitive_part()];
        let d = self.derivative().primitive_part();
        if d.is_zero() {
            return seq;
        }
        seq.push(d);
        loop {
            let n = seq.len();
            let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push((-&r).primitive_part());
        }
        seq
    }

    /// Number of distinct real roots, by Sturm's theorem on `(-inf, +inf)`.
    pub fn count_distinct_real_roots(&self) -> usize {
        if self.degree().unwrap_or(0) == 0 {
            return 0;
        }
        let seq = self.sturm_sequence();
        let at_neg_inf: Vec<i8> = seq
            .iter()
            .map(|p| {
                let lc = sign(p.leading_coeff().unwrap());
                if p.degree().unwrap() % 2 == 0 {
                    lc
                } else {
                    -lc
                }
            })
            .collect();
        let at_pos_inf: Vec<i8> = seq.iter().map(|p| sign(p.leading_coeff().unwrap())).collect();
        sign_changes(&at_neg_inf) - sign_changes(&at_pos_inf)
    }

    /// Whether every complex root is real. The square-free part is taken
    /// first and its distinct real roots are counted exactly.
    pub fn is_real_rooted(&self) -> bool {
        assert!(!self.is_zero(), "real-rootedness of the zero polynomial");
        let deg = self.degree().unwrap();
        if deg == 0 {
            return true;
        }
        let g = self.gcd(&self.derivative());
        let (square_free, _) = self.div_rem(&g);
        square_free.count_distinct_real_roots() == square_free.degree().unwrap()
    }
}

fn sign(x: &BigRational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

fn sign_changes(signs: &[i8]) -> usize {
    let nonzero: Vec<i8> = signs.iter().copied().filter(|&s| s != 0).collect();
    nonzero.windows(2).filter(|w| w[0] != w[1]).count()
}

impl fmt::Display for Poly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let show_coeff = !abs.is_one() || i == 0;
            let body = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            match (show_coeff, body.is_empty()) {
                (true, true) => write!(f, "{abs}")?,
                (true, false) => write!(f, "{abs}*{body}")?,
                (false, _) => write!(f, "{body}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly1({self})")
    }
}

impl Add for &Poly1 {
    type Output = Poly1;

    fn add(self, rhs: &Poly1) -> Poly1 {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly1::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly1 {
    type Output = Poly1;

    fn sub(self, rhs: &Poly1) -> Poly1 {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly1::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &Poly1 {
    type Output = Poly1;

    fn neg(self) -> Poly1 {
        Poly1::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Poly1 {
    type Output = Poly1;

    fn mul(self, rhs: &Poly1) -> Poly1 {
        if self.is_zero() || rhs.is_zero() {
            return Poly1::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly1::from_coeffs(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn real_rooted_examples() {
        assert!(Poly1::from_ints([1, 3, 2]).is_real_rooted());
        assert!(!Poly1::from_ints([1, 0, 1]).is_real_rooted());
        assert!(Poly1::from_ints([1]).is_real_rooted());
    }

    #[test]
    fn repeated_roots_are_handled() {
        // (y+1)^2 (y+2)
        let p = &(&Poly1::from_ints([1, 1]) * &Poly1::from_ints([1, 1])) * &Poly1::from_ints([2, 1]);
        assert!(p.is_real_rooted());
        // (y^2+1)^2
        let q = &Poly1::from_ints([1, 0, 1]) * &Poly1::from_ints([1, 0, 1]);
        assert!(!q.is_real_rooted());
        // y^3 (y - 1): zero root with multiplicity
        assert!(Poly1::from_ints([0, 0, 0, -1, 1]).is_real_rooted());
    }

    #[test]
    fn sturm_counts() {
        // (y-1)(y-2)(y-3)
        let p = Poly1::from_ints([-6, 11, -6, 1]);
        assert_eq!(p.count_distinct_real_roots(), 3);
        // y^3 - 2 has one real root
        assert_eq!(Poly1::from_ints([-2, 0, 0, 1]).count_distinct_real_roots(), 1);
        // 1 + 6y + 10y^2 + 3y^3
        assert!(Poly1::from_ints([1, 6, 10, 3]).is_real_rooted());
    }

    #[test]
    fn gcd_and_division() {
        let a = &Poly1::from_ints([1, 1]) * &Poly1::from_ints([-3, 2]);
        let b = &Poly1::from_ints([1, 1]) * &Poly1::from_ints([5, 0, 1]);
        assert_eq!(a.gcd(&b), Poly1::from_ints([1, 1]));
        let (q, r) = a.div_rem(&Poly1::from_ints([1, 1]));
        assert_eq!(q, Poly1::from_ints([-3, 2]));
        assert!(r.is_zero());
    }

    #[test]
    fn display() {
        assert_eq!(Poly1::from_ints([-1, 0, 4]).to_string(), "4*x^2 - 1");
        assert_eq!(Poly1::from_ints([0, 2]).to_string(), "2*x");
        assert_eq!(Poly1::zero().to_string(), "0");
    }
}
