//! Rational generating functions `N(T) / D(T)`.
//!
//! Denominators are normally kept as a multiset of factors `(1 - T^d)^m`,
//! which is what Hilbert series of weighted polynomial rings produce.
//! Division by an arbitrary series can leave a denominator without such a
//! factorisation; that case is stored as a plain polynomial.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::expr::{evaluate, parse_expr, Algebra, Atom, Dialect};
use crate::rational::ExactRational;
use crate::upoly::UniPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Denominator {
    /// `∏ (1 - T^d)^m`, keyed by `d`.
    Factors(BTreeMap<u32, u32>),
    /// Any other nonzero polynomial.
    Poly(UniPoly),
}

impl Denominator {
    pub fn expand(&self) -> UniPoly {
        match self {
            Denominator::Factors(f) => f.iter().fold(UniPoly::one(), |acc, (&d, &m)| {
                &acc * &UniPoly::one_minus_t_pow(d).pow(m)
            }),
            Denominator::Poly(p) => p.clone(),
        }
    }

    fn is_one(&self) -> bool {
        match self {
            Denominator::Factors(f) => f.is_empty(),
            Denominator::Poly(p) => p.is_one(),
        }
    }
}

/// Equality is equality of rational functions, not of representations.
#[derive(Clone, Debug)]
pub struct RationalSeries {
    numerator: UniPoly,
    denominator: Denominator,
}

impl RationalSeries {
    /// `numerator / ∏ (1 - T^d)^m`; entries with `m == 0` are ignored.
    pub fn new(numerator: UniPoly, factors: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut map = BTreeMap::new();
        for (d, m) in factors {
            assert!(d >= 1, "factor (1 - T^0) is zero");
            if m > 0 {
                *map.entry(d).or_insert(0) += m;
            }
        }
        RationalSeries {
            numerator,
            denominator: Denominator::Factors(map),
        }
    }

    pub fn polynomial(p: UniPoly) -> Self {
        Self::new(p, [])
    }

    pub fn zero() -> Self {
        Self::polynomial(UniPoly::zero())
    }

    pub fn one() -> Self {
        Self::polynomial(UniPoly::one())
    }

    /// `numerator / denominator`, recognising `(1 - T^d)` factorisations.
    pub fn from_polys(numerator: UniPoly, denominator: UniPoly) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (numerator, denominator) = normalise(numerator, denominator);
        Ok(match factorise(&denominator) {
            Some(f) => RationalSeries {
                numerator,
                denominator: Denominator::Factors(f),
            },
            None => RationalSeries {
                numerator,
                denominator: Denominator::Poly(denominator),
            },
        })
    }

    pub fn numerator(&self) -> &UniPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &Denominator {
        &self.denominator
    }

    pub fn denominator_poly(&self) -> UniPoly {
        self.denominator.expand()
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        match (&self.denominator, &other.denominator) {
            (Denominator::Factors(a), Denominator::Factors(b)) => {
                let mut lcm = a.clone();
                for (&d, &m) in b {
                    let e = lcm.entry(d).or_insert(0);
                    *e = (*e).max(m);
                }
                let lift = |num: &UniPoly, own: &BTreeMap<u32, u32>| {
                    let missing = lcm.iter().map(|(&d, &m)| (d, m - own.get(&d).copied().unwrap_or(0)));
                    let factor = Denominator::Factors(missing.filter(|&(_, m)| m > 0).collect()).expand();
                    num * &factor
                };
                let numerator = &lift(&self.numerator, a) + &lift(&other.numerator, b);
                RationalSeries {
                    numerator,
                    denominator: Denominator::Factors(lcm),
                }
            }
            _ => {
                let da = self.denominator_poly();
                let db = other.denominator_poly();
                let numerator = &(&self.numerator * &db) + &(&other.numerator * &da);
                RationalSeries {
                    numerator,
                    denominator: Denominator::Poly(&da * &db),
                }
            }
        }
    }

    pub fn neg(&self) -> Self {
        RationalSeries {
            numerator: -&self.numerator,
            denominator: self.denominator.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let numerator = &self.numerator * &other.numerator;
        match (&self.denominator, &other.denominator) {
            (Denominator::Factors(a), Denominator::Factors(b)) => {
                let mut f = a.clone();
                for (&d, &m) in b {
                    *f.entry(d).or_insert(0) += m;
                }
                RationalSeries {
                    numerator,
                    denominator: Denominator::Factors(f),
                }
            }
            _ => RationalSeries {
                numerator,
                denominator: Denominator::Poly(&self.denominator_poly() * &other.denominator_poly()),
            },
        }
    }

    /// Field division.
    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let numerator = &self.numerator * &other.denominator_poly();
        let denominator = &self.denominator_poly() * &other.numerator;
        let (numerator, denominator) = normalise(numerator, denominator);
        Ok(RationalSeries {
            numerator,
            denominator: Denominator::Poly(denominator),
        })
    }

    /// Multiplication by `T^k`.
    pub fn shift(&self, k: usize) -> Self {
        RationalSeries {
            numerator: self.numerator.shift(k),
            denominator: self.denominator.clone(),
        }
    }

    /// Equality as rational functions, by cross-multiplication.
    pub fn series_eq(&self, other: &Self) -> bool {
        &self.numerator * &other.denominator_poly() == &other.numerator * &self.denominator_poly()
    }

    /// Power-series coefficients of `T^0 .. T^n`.
    pub fn expand(&self, n: usize) -> Result<Vec<ExactRational>> {
        self.numerator
            .series_quotient(&self.denominator_poly(), n)
            .ok_or(Error::NotExpandable)
    }

    /// Coefficientwise `self ⪯ other` on `T^0 .. T^n`.
    pub fn leq(&self, other: &Self, n: usize) -> Result<bool> {
        let a = self.expand(n)?;
        let b = other.expand(n)?;
        Ok(a.iter().zip(&b).all(|(x, y)| x <= y))
    }

    /// Cancels common factors of numerator and denominator, and rewrites the
    /// denominator as a product of `(1 - T^d)` factors when it is one.
    pub fn reduce(&self) -> Self {
        if self.numerator.is_zero() {
            return Self::zero();
        }
        let den = self.denominator_poly();
        let g = self.numerator.gcd(&den);
        let num = self.numerator.exact_div(&g).expect("gcd divides numerator");
        let den = den.exact_div(&g).expect("gcd divides denominator");
        Self::from_polys(num, den).expect("nonzero denominator")
    }

    /// Parses a literal such as `(1+2*T)/((1-T)^2*(1-T^2))`. Both `T` and
    /// `t` name the series variable.
    pub fn parse(text: &str) -> Result<Self> {
        let (num, den) = evaluate(&parse_expr(text, Dialect::Plain)?, &SeriesAlgebra)?;
        Self::from_polys(num, den)
    }
}

/// Scales so the denominator has constant term 1 (or is monic when its
/// constant term vanishes).
fn normalise(num: UniPoly, den: UniPoly) -> (UniPoly, UniPoly) {
    let c0 = den.coeff(0);
    let s = if !c0.is_zero() {
        c0
    } else {
        den.leading().cloned().unwrap_or_else(ExactRational::one)
    };
    if s.is_one() {
        return (num, den);
    }
    let inv = ExactRational::one() / s;
    (num.scale(&inv), den.scale(&inv))
}

/// Writes a denominator with constant term 1 as `∏ (1 - T^d)^m`, if possible.
/// The representation is unique, and the largest `d` dividing is always part
/// of it, so peeling off factors in decreasing `d` finds it.
fn factorise(den: &UniPoly) -> Option<BTreeMap<u32, u32>> {
    let mut rest = den.clone();
    let mut out = BTreeMap::new();
    let top = rest.degree()?;
    for d in (1..=top as u32).rev() {
        let f = UniPoly::one_minus_t_pow(d);
        while rest.degree()? >= d as usize {
            match rest.exact_div(&f) {
                Some(q) => {
                    rest = q;
                    *out.entry(d).or_insert(0) += 1;
                }
                None => break,
            }
        }
    }
    rest.is_one().then_some(out)
}

/// Evaluates literals as unreduced fractions `(numerator, denominator)`.
struct SeriesAlgebra;

type Fraction = (UniPoly, UniPoly);

impl Algebra for SeriesAlgebra {
    type Elem = Fraction;

    fn constant(&self, c: &ExactRational) -> Fraction {
        (UniPoly::constant(c.clone()), UniPoly::one())
    }

    fn atom(&self, atom: &Atom, column: usize) -> Result<Fraction> {
        match atom {
            Atom::Ident(n) if n == "T" || n == "t" => Ok((UniPoly::monomial(ExactRational::one(), 1), UniPoly::one())),
            Atom::Ident(n) => Err(Error::UnknownVariable {
                name: n.clone(),
                column,
            }),
            Atom::Kappa(_) => Err(Error::parse(column, "kappa symbol in series literal")),
        }
    }

    fn add(&self, a: &Fraction, b: &Fraction) -> Fraction {
        if a.1 == b.1 {
            return (&a.0 + &b.0, a.1.clone());
        }
        (&(&a.0 * &b.1) + &(&b.0 * &a.1), &a.1 * &b.1)
    }

    fn mul(&self, a: &Fraction, b: &Fraction) -> Fraction {
        (&a.0 * &b.0, &a.1 * &b.1)
    }

    fn neg(&self, a: &Fraction) -> Fraction {
        (-&a.0, a.1.clone())
    }

    fn div(&self, a: &Fraction, b: &Fraction, _column: usize) -> Result<Fraction> {
        if b.0.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok((&a.0 * &b.1, &a.1 * &b.0))
    }

    fn pow(&self, a: &Fraction, n: u32) -> Fraction {
        (a.0.pow(n), a.1.pow(n))
    }
}

impl PartialEq for RationalSeries {
    fn eq(&self, other: &Self) -> bool {
        self.series_eq(other)
    }
}

impl Eq for RationalSeries {}

/// Canonical text: numerator in ascending powers, then
/// `/((1-T)^a*(1-T^2)^b*...)` with factors sorted by `d`.
impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.numerator.render("T");
        if self.denominator.is_one() {
            return f.write_str(&num);
        }
        if self.numerator.term_count() > 1 {
            write!(f, "({num})")?;
        } else {
            f.write_str(&num)?;
        }
        match &self.denominator {
            Denominator::Factors(factors) => {
                let parts: Vec<String> = factors
                    .iter()
                    .map(|(&d, &m)| {
                        if d == 1 {
                            format!("(1-T)^{m}")
                        } else {
                            format!("(1-T^{d})^{m}")
                        }
                    })
                    .collect();
                write!(f, "/({})", parts.join("*"))
            }
            Denominator::Poly(p) => write!(f, "/({})", p.render("T")),
        }
    }
}

pub fn series_add(a: &RationalSeries, b: &RationalSeries) -> RationalSeries {
    a.add(b)
}

pub fn series_mul(a: &RationalSeries, b: &RationalSeries) -> RationalSeries {
    a.mul(b)
}

pub fn series_shift(a: &RationalSeries, k: usize) -> RationalSeries {
    a.shift(k)
}

pub fn series_eq(a: &RationalSeries, b: &RationalSeries) -> bool {
    a.series_eq(b)
}

pub fn series_leq(a: &RationalSeries, b: &RationalSeries, n: usize) -> Result<bool> {
    a.leq(b, n)
}

pub fn expand(a: &RationalSeries, n: usize) -> Result<Vec<ExactRational>> {
    a.expand(n)
}

pub fn reduce(a: &RationalSeries) -> RationalSeries {
    a.reduce()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn s(text: &str) -> RationalSeries {
        RationalSeries::parse(text).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<ExactRational> {
        v.iter().map(|&c| int(c)).collect()
    }

    #[test]
    fn reduce_examples() {
        let a = RationalSeries::new(UniPoly::one_minus_t_pow(2), [(1, 2)]);
        let r = a.reduce();
        assert_eq!(r.to_string(), "(1+T)/((1-T)^1)");
        assert!(r.series_eq(&a));

        let b = RationalSeries::new(UniPoly::one_minus_t_pow(1), [(1, 1)]);
        assert_eq!(b.reduce().to_string(), "1");
        assert_eq!(RationalSeries::zero().reduce().to_string(), "0");
    }

    #[test]
    fn reduce_is_idempotent() {
        let a = s("(1+T+T^2)/((1-T)^3*(1-T^3))");
        let r = a.reduce();
        assert_eq!(r.reduce().to_string(), r.to_string());
        assert!(r.series_eq(&a));
        assert_eq!(r.to_string(), "1/((1-T)^4)");
    }

    #[test]
    fn non_cyclotomic_denominator() {
        let a = s("1/(1+T)");
        assert!(matches!(a.denominator(), Denominator::Poly(_)));
        assert_eq!(a.to_string(), "1/(1+T)");
        assert_eq!(a.expand(3).unwrap(), ints(&[1, -1, 1, -1]));
        let t = s("T");
        assert!(matches!(t.div(&t).unwrap().reduce().denominator(), Denominator::Factors(f) if f.is_empty()));
        assert!(s("1/T").expand(2).is_err());
    }

    #[test]
    fn equality() {
        assert!(s("1/(1-T)").series_eq(&s("(1+T)/(1-T^2)")));
        assert!(!s("1/(1-T)").series_eq(&s("1/(1-T)^2")));
        assert_eq!(s("(1+T)/(1-T^2)"), s("1/((1-T)^1)"));
    }

    #[test]
    fn arithmetic() {
        let a = s("(1+2*T)/((1-T)^2*(1-T^2))");
        assert!(a.add(&RationalSeries::zero()).series_eq(&a));
        let geo_sq = s("1/(1-T)^2");
        assert_eq!(a.mul(&geo_sq), s("(1+2*T)/((1-T)^4*(1-T^2))"));
        assert_eq!(s("1/(1-T)").shift(2).expand(3).unwrap(), ints(&[0, 0, 1, 1]));
        assert!(a.sub(&a).is_zero() || a.sub(&a).series_eq(&RationalSeries::zero()));
        assert_eq!(a.div(&a).unwrap(), RationalSeries::one());
        assert_eq!(a.div(&RationalSeries::zero()).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn expansion() {
        assert_eq!(s("1/((1-T)^1)").expand(4).unwrap(), ints(&[1; 5]));
        assert_eq!(
            s("1+3*T+6*T^2+3*T^3+T^4").expand(5).unwrap(),
            ints(&[1, 3, 6, 3, 1, 0])
        );
    }

    #[test]
    fn leq() {
        let a = s("1/(1-T)");
        let b = s("1/(1-T)^2");
        assert!(a.leq(&a, 100).unwrap());
        assert!(a.leq(&b, 50).unwrap());
        assert!(!b.leq(&a, 50).unwrap());
    }

    #[test]
    fn print_parse_round_trip() {
        for text in [
            "(1+2*T+4*T^2+4*T^3+2*T^4+T^5)/((1-T)^1)",
            "1/((1-T)^1)",
            "1+3*T+6*T^2+3*T^3+T^4",
            "-1/2*T^3/((1-T)^2*(1-T^3)^1)",
            "1/2/((1-T^2)^1)",
            "(1-T)/(1+T+T^2+T^3+T^5)",
        ] {
            let a = s(text);
            assert_eq!(a.to_string(), text);
            assert_eq!(s(&a.to_string()), a);
        }
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(RationalSeries::parse("1/(1-x)"), Err(Error::UnknownVariable { .. })));
        assert!(matches!(RationalSeries::parse("1/(T-T)"), Err(Error::DivisionByZero)));
        assert!(matches!(RationalSeries::parse("(1+T"), Err(Error::Parse { .. })));
    }
}
