//! Exponent vectors and monomial orderings.

use std::cmp::Ordering;
use std::fmt;

/// Exponent vector aligned with the variables of a ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, var: usize) -> Self {
        let mut e = vec![0; nvars];
        e[var] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        self.0
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u64 * w as u64)
            .sum()
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// Exponent-wise sum (commutative product, no sign).
    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect()))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }
}

/// Total orderings on monomials. Weighted degree is always compared first;
/// ties are broken by reverse-lexicographic or lexicographic comparison in
/// ring variable order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrdering {
    #[default]
    Grevlex,
    Lex,
}

impl MonomialOrdering {
    pub fn compare(&self, a: &Monomial, b: &Monomial, weights: &[u32]) -> Ordering {
        let da = a.weighted_degree(weights);
        let db = b.weighted_degree(weights);
        da.cmp(&db).then_with(|| match self {
            MonomialOrdering::Lex => a.0.cmp(&b.0),
            // the last differing exponent decides; smaller exponent is larger
            MonomialOrdering::Grevlex => a
                .0
                .iter()
                .zip(&b.0)
                .rev()
                .find(|(x, y)| x != y)
                .map_or(Ordering::Equal, |(x, y)| y.cmp(x)),
        })
    }

    pub const fn name(&self) -> &'static str {
        match self {
            MonomialOrdering::Grevlex => "grevlex",
            MonomialOrdering::Lex => "lex",
        }
    }

    pub const ALL: [MonomialOrdering; 2] = [MonomialOrdering::Grevlex, MonomialOrdering::Lex];
}

impl fmt::Display for MonomialOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for MonomialOrdering {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "grevlex" => Ok(MonomialOrdering::Grevlex),
            "lex" => Ok(MonomialOrdering::Lex),
            other => Err(format!("unknown monomial ordering `{other}`")),
        }
    }
}

/// All monomials of weighted degree exactly `degree`, in lexicographic
/// exponent order. Variables flagged in `bounded` take exponent 0 or 1 only.
pub fn monomials_of_degree(weights: &[u32], bounded: &[bool], degree: u64) -> Vec<Monomial> {
    fn go(
        weights: &[u32],
        bounded: &[bool],
        i: usize,
        left: u64,
        cur: &mut Vec<u32>,
        out: &mut Vec<Monomial>,
    ) {
        if i == weights.len() {
            if left == 0 {
                out.push(Monomial(cur.clone()));
            }
            return;
        }
        let w = weights[i] as u64;
        let mut max = left / w;
        if bounded[i] {
            max = max.min(1);
        }
        for e in 0..=max {
            cur.push(e as u32);
            go(weights, bounded, i + 1, left - e * w, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(weights, bounded, 0, degree, &mut Vec::with_capacity(weights.len()), &mut out);
    out
}
