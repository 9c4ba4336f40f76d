//! Dense univariate polynomials in `T` over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::rational::{write_signed_term, ExactRational};

/// Coefficients in ascending powers of `T`, without trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UniPoly(Vec<ExactRational>);

impl UniPoly {
    pub fn new(mut coeffs: Vec<ExactRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly(coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| crate::rational::int(c)).collect())
    }

    pub fn zero() -> Self {
        UniPoly(Vec::new())
    }

    pub fn one() -> Self {
        UniPoly(vec![ExactRational::one()])
    }

    pub fn constant(c: ExactRational) -> Self {
        Self::new(vec![c])
    }

    /// `c * T^k`.
    pub fn monomial(c: ExactRational, k: usize) -> Self {
        let mut v = vec![ExactRational::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    /// `1 - T^d`.
    pub fn one_minus_t_pow(d: u32) -> Self {
        let mut v = vec![ExactRational::zero(); d as usize + 1];
        v[0] = ExactRational::one();
        v[d as usize] -= ExactRational::one();
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.0
    }

    pub fn coeff(&self, k: usize) -> ExactRational {
        self.0.get(k).cloned().unwrap_or_else(ExactRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&ExactRational> {
        self.0.last()
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        Self::new(self.0.iter().map(|a| a * c).collect())
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![ExactRational::zero(); k];
        v.extend(self.0.iter().cloned());
        UniPoly(v)
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead_inv = ExactRational::one() / d.leading().unwrap();
        let mut r = self.0.clone();
        let n = r.len();
        if n <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![ExactRational::zero(); n - dd];
        for k in (0..n - dd).rev() {
            let c = &r[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (i, dc) in d.0.iter().enumerate() {
                r[k + i] -= &c * dc;
            }
            q[k] = c;
        }
        (Self::new(q), Self::new(r))
    }

    /// Quotient if `d` divides `self` exactly.
    pub fn exact_div(&self, d: &UniPoly) -> Option<UniPoly> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        match a.leading().cloned() {
            Some(lc) => a.scale(&(ExactRational::one() / lc)),
            None => a,
        }
    }

    /// Power-series coefficients of `self / den` up to `T^n`.
    /// Requires `den(0) != 0`.
    pub fn series_quotient(&self, den: &UniPoly, n: usize) -> Option<Vec<ExactRational>> {
        let d0 = den.coeff(0);
        if d0.is_zero() {
            return None;
        }
        let inv = ExactRational::one() / d0;
        let mut out: Vec<ExactRational> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.coeff(k);
            for j in 1..=k.min(den.0.len().saturating_sub(1)) {
                acc -= &den.0[j] * &out[k - j];
            }
            out.push(acc * &inv);
        }
        Some(out)
    }

    /// Text in ascending powers of `var`, e.g. `1+2*T-1/2*T^3`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        let mut first = true;
        for (k, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let factor = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            write_signed_term(&mut out, c, &factor, first, false);
            first = false;
        }
        out
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.0.iter().filter(|c| !c.is_zero()).count()
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("T"))
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;

    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.0.len().max(rhs.0.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;

    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.0.len().max(rhs.0.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;

    fn neg(self) -> UniPoly {
        UniPoly(self.0.iter().map(|c| -c).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;

    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut v = vec![ExactRational::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        UniPoly::new(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn arithmetic() {
        let a = UniPoly::from_ints(&[1, 1]);
        let b = UniPoly::from_ints(&[1, -1]);
        assert_eq!(&a * &b, UniPoly::one_minus_t_pow(2));
        assert_eq!(&(&a + &b), &UniPoly::from_ints(&[2]));
        assert!((&a - &a).is_zero());
        assert_eq!(a.pow(3), UniPoly::from_ints(&[1, 3, 3, 1]));
        assert_eq!(a.shift(2), UniPoly::from_ints(&[0, 0, 1, 1]));
    }

    #[test]
    fn division_and_gcd() {
        let num = UniPoly::one_minus_t_pow(2);
        let den = UniPoly::one_minus_t_pow(1).pow(2);
        let g = num.gcd(&den);
        assert_eq!(g, UniPoly::from_ints(&[-1, 1])); // monic T - 1
        assert_eq!(num.exact_div(&g), Some(UniPoly::from_ints(&[-1, -1])));
        let (q, r) = UniPoly::from_ints(&[1, 0, 1]).div_rem(&UniPoly::from_ints(&[1, 1]));
        assert_eq!(q, UniPoly::from_ints(&[-1, 1]));
        assert_eq!(r, UniPoly::from_ints(&[2]));
    }

    #[test]
    fn power_series() {
        let one = UniPoly::one();
        let geo = one.series_quotient(&UniPoly::one_minus_t_pow(1), 4).unwrap();
        assert_eq!(geo, vec![int(1); 5]);
        assert!(one.series_quotient(&UniPoly::from_ints(&[0, 1]), 3).is_none());
    }

    #[test]
    fn render() {
        let p = UniPoly::new(vec![int(1), int(2), int(0), frac(-1, 2)]);
        assert_eq!(p.render("T"), "1+2*T-1/2*T^3");
        assert_eq!(UniPoly::from_ints(&[0, -1]).render("T"), "-T");
        assert_eq!(UniPoly::zero().render("T"), "0");
    }
}
