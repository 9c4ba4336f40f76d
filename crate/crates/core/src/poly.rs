//! Sparse polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::Result;
#[cfg(test)]
use crate::error::Error;
use crate::monomial::{Monomial, MonomialOrdering};
use crate::rational::{write_signed_term, ExactRational};
use crate::ring::Ring;

/// Grading information of a polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Degree {
    Zero,
    Homogeneous(u64),
    Inhomogeneous,
}

/// A polynomial in canonical sparse form: no zero coefficients, no odd
/// variable with exponent above one.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Ring,
    terms: BTreeMap<Monomial, ExactRational>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, ExactRational::one())
    }

    pub fn constant(ring: &Ring, c: ExactRational) -> Self {
        Self::from_terms(ring, [(Monomial::one(ring.nvars()), c)])
    }

    /// The `i`-th variable of `ring`.
    pub fn var(ring: &Ring, i: usize) -> Self {
        Self::from_terms(ring, [(Monomial::var(ring.nvars(), i), ExactRational::one())])
    }

    /// Variable by name, if the ring has one.
    pub fn var_named(ring: &Ring, name: &str) -> Option<Self> {
        ring.index_of(name).map(|i| Self::var(ring, i))
    }

    /// Collects terms, merging duplicates and dropping zeros and monomials
    /// that square an odd variable.
    pub fn from_terms(
        ring: &Ring,
        terms: impl IntoIterator<Item = (Monomial, ExactRational)>,
    ) -> Self {
        let mut map: BTreeMap<Monomial, ExactRational> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.exponents().len(), ring.nvars(), "monomial arity mismatch");
            if !ring.is_canonical(&m) || c.is_zero() {
                continue;
            }
            accumulate(&mut map, m, c);
        }
        Polynomial {
            ring: ring.clone(),
            terms: map,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, ExactRational> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, ExactRational> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> ExactRational {
        self.terms.get(m).cloned().unwrap_or_else(ExactRational::zero)
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(&other.ring)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut terms, m.clone(), c.clone());
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(&other.ring)?;
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((m, negative)) = self.ring.mul_monomials(ma, mb) {
                    let c = ca * cb;
                    accumulate(&mut terms, m, if negative { -c } else { c });
                }
            }
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn scale(&self, c: &ExactRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, mut n: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.ring);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn weighted_degree(&self) -> Degree {
        let mut degrees = self.terms.keys().map(|m| self.ring.degree_of(m));
        match degrees.next() {
            None => Degree::Zero,
            Some(d) => {
                if degrees.all(|e| e == d) {
                    Degree::Homogeneous(d)
                } else {
                    Degree::Inhomogeneous
                }
            }
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.weighted_degree() != Degree::Inhomogeneous
    }

    /// Sum of the terms of weighted degree exactly `d`.
    pub fn graded_component(&self, d: u64) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| self.ring.degree_of(m) == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Terms sorted in descending order for `ordering`.
    pub fn sorted_terms(&self, ordering: MonomialOrdering) -> Vec<(&Monomial, &ExactRational)> {
        let w = self.ring.weights();
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| ordering.compare(b.0, a.0, w));
        v
    }

    /// Leading monomial and coefficient for `ordering`.
    pub fn leading_term(&self, ordering: MonomialOrdering) -> Option<(&Monomial, &ExactRational)> {
        let w = self.ring.weights();
        self.terms.iter().max_by(|a, b| ordering.compare(a.0, b.0, w))
    }

    /// Canonical-form audit: every stored coefficient nonzero, every monomial
    /// admissible in the ring.
    pub fn is_canonical(&self) -> bool {
        self.terms
            .iter()
            .all(|(m, c)| !c.is_zero() && self.ring.is_canonical(m))
    }

    /// Renders the monomial with the ring's variable names, `""` for 1.
    pub fn monomial_string(ring: &Ring, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (i, &e) in m.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(ring.var_name(i).to_string()),
                _ => parts.push(format!("{}^{}", ring.var_name(i), e)),
            }
        }
        parts.join("*")
    }
}

fn accumulate(map: &mut BTreeMap<Monomial, ExactRational>, m: Monomial, c: ExactRational) {
    use std::collections::btree_map::Entry;
    match map.entry(m) {
        Entry::Vacant(v) => {
            if !c.is_zero() {
                v.insert(c);
            }
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// Prints terms in descending graded-reverse-lexicographic order.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, (m, c)) in self.sorted_terms(MonomialOrdering::Grevlex).into_iter().enumerate() {
            let factor = Polynomial::monomial_string(&self.ring, m);
            write_signed_term(&mut out, c, &factor, i == 0, true);
        }
        f.write_str(&out)
    }
}

/// Canonical text for `p`; inverse of [`crate::expr::parse_poly`].
impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::Zero => f.write_str("zero"),
            Degree::Homogeneous(d) => write!(f, "{d}"),
            Degree::Inhomogeneous => f.write_str("inhomogeneous"),
        }
    }
}

pub fn print_poly(p: &Polynomial) -> String {
    p.to_string()
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        /// Panics if the operands live in different rings; use the
        /// `checked_*` methods to get an error instead.
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;

            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomials from different rings")
            }
        }

        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;

            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }

        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;

            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }

        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;

            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

/// Free-function form of the ring operations.
pub fn add(p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
    p.checked_add(q)
}

pub fn mul(p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
    p.checked_mul(q)
}

pub fn scalar_mul(c: &ExactRational, p: &Polynomial) -> Polynomial {
    p.scale(c)
}

pub fn pow(p: &Polynomial, n: u32) -> Polynomial {
    p.pow(n)
}

pub fn weighted_degree(p: &Polynomial) -> Degree {
    p.weighted_degree()
}

pub fn graded_component(p: &Polynomial, d: u64) -> Polynomial {
    p.graded_component(d)
}
