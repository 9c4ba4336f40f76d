//! Hilbert series of graded quotients `R/I`.
//!
//! The series of `R/I` equals that of `R/LT(I)` for any monomial ordering,
//! so the work reduces to monomial ideals. The numerator over
//! `∏ (1 - T^{w_i})` is computed by pivoting on a variable power `p`:
//!
//! ```text
//! N(M) = N(M + (p)) + T^{deg p} · N(M : p)
//! ```
//!
//! with pairwise-coprime generators as the base case.

use crate::error::{Error, Result};
use crate::groebner::{groebner_basis, Ideal};
use crate::monomial::{Monomial, MonomialOrdering};
use crate::poly::Degree;
use crate::rational::ExactRational;
use crate::series::RationalSeries;
use crate::upoly::UniPoly;

/// Hilbert series of `ring/ideal` over the standard denominator
/// `∏ (1 - T^{w_i})` (unreduced).
pub fn hilbert_series(ideal: &Ideal, ordering: MonomialOrdering) -> Result<RationalSeries> {
    let ring = ideal.ring();
    if !ring.is_commutative() {
        return Err(Error::UnsupportedRing);
    }
    for g in ideal.generators() {
        if g.weighted_degree() == Degree::Inhomogeneous {
            return Err(Error::Inhomogeneous(g.to_string()));
        }
    }
    let gb = groebner_basis(ideal, ordering)?;
    let numerator = monomial_ideal_numerator(ring.weights(), &gb.leading_monomials());
    Ok(RationalSeries::new(
        numerator,
        ring.weights().iter().map(|&w| (w, 1)),
    ))
}

/// Numerator of the Hilbert series of `k[x]/M` over `∏ (1 - T^{w_i})`.
pub fn monomial_ideal_numerator(weights: &[u32], generators: &[Monomial]) -> UniPoly {
    numerator(weights, minimalise(generators.to_vec()))
}

fn minimalise(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.total_degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|m| m.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn t_pow(k: u64) -> UniPoly {
    UniPoly::monomial(ExactRational::from_integer(1.into()), k as usize)
}

fn numerator(weights: &[u32], gens: Vec<Monomial>) -> UniPoly {
    if gens.iter().any(Monomial::is_one) {
        return UniPoly::zero();
    }
    let coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if coprime {
        return gens.iter().fold(UniPoly::one(), |acc, g| {
            &acc * &(&UniPoly::one() - &t_pow(g.weighted_degree(weights)))
        });
    }

    // pivot on the variable shared by the most generators
    let nvars = weights.len();
    let var = (0..nvars)
        .max_by_key(|&i| (gens.iter().filter(|g| g.exponents()[i] > 0).count(), std::cmp::Reverse(i)))
        .expect("non-coprime generators need a variable");
    let exp = gens
        .iter()
        .map(|g| g.exponents()[var])
        .filter(|&e| e > 0)
        .min()
        .unwrap();
    let mut pe = vec![0; nvars];
    pe[var] = exp;
    let pivot = Monomial::new(pe);

    let mut with_pivot: Vec<Monomial> = gens.iter().filter(|g| !pivot.divides(g)).cloned().collect();
    with_pivot.push(pivot.clone());
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let mut e = g.exponents().to_vec();
            e[var] = e[var].saturating_sub(exp);
            Monomial::new(e)
        })
        .collect();

    let a = numerator(weights, minimalise(with_pivot));
    let b = numerator(weights, minimalise(colon));
    &a + &(&t_pow(pivot.weighted_degree(weights)) * &b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_poly;
    use crate::rational::int;
    use crate::ring::{make_ring, RingSpec, VarSpec};

    /// Independent route: inclusion-exclusion style generator recursion
    /// `N(M' + (m)) = N(M') - T^{deg m} N(M' : m)`.
    fn colon_recursion(weights: &[u32], gens: &[Monomial]) -> UniPoly {
        match gens.split_last() {
            None => UniPoly::one(),
            Some((m, rest)) => {
                let colon: Vec<Monomial> = rest
                    .iter()
                    .map(|g| m.gcd(g).quotient_of(g).unwrap())
                    .collect();
                &colon_recursion(weights, rest)
                    - &(&t_pow(m.weighted_degree(weights)) * &colon_recursion(weights, &colon))
            }
        }
    }

    #[test]
    fn free_variable() {
        let r = make_ring(RingSpec::new(vec![VarSpec::even("x", 1)])).unwrap();
        let h = hilbert_series(&Ideal::new(&r, vec![]).unwrap(), MonomialOrdering::Grevlex).unwrap();
        assert_eq!(h.to_string(), "1/((1-T)^1)");
    }

    #[test]
    fn empty_ring() {
        let r = make_ring(RingSpec::default()).unwrap();
        let h = hilbert_series(&Ideal::new(&r, vec![]).unwrap(), MonomialOrdering::Grevlex).unwrap();
        assert_eq!(h.to_string(), "1");
        let unit = Ideal::new(&r, vec![parse_poly(&r, "3").unwrap()]).unwrap();
        assert_eq!(hilbert_series(&unit, MonomialOrdering::Grevlex).unwrap().to_string(), "0");
    }

    #[test]
    fn weighted_complete_intersection() {
        // k[x:1, b:2]/(x^2, b^2): dims 1,1,1,1,1,1 in degrees 0..3? -> (1+T)(1+T^2)
        let r = make_ring(RingSpec::new(vec![VarSpec::even("x", 1), VarSpec::even("b", 2)])).unwrap();
        let i = Ideal::new(&r, vec![parse_poly(&r, "x^2").unwrap(), parse_poly(&r, "b^2").unwrap()]).unwrap();
        let h = hilbert_series(&i, MonomialOrdering::Grevlex).unwrap().reduce();
        assert_eq!(h.to_string(), "1+T+T^2+T^3");
    }

    #[test]
    fn rejects_inhomogeneous() {
        let r = make_ring(RingSpec::new(vec![VarSpec::even("x", 1), VarSpec::even("b", 2)])).unwrap();
        let i = Ideal::new(&r, vec![parse_poly(&r, "x + b").unwrap()]).unwrap();
        assert!(matches!(hilbert_series(&i, MonomialOrdering::Grevlex), Err(Error::Inhomogeneous(_))));
        let e = make_ring(RingSpec::new(vec![VarSpec::odd("a", 1)])).unwrap();
        assert_eq!(
            hilbert_series(&Ideal::new(&e, vec![]).unwrap(), MonomialOrdering::Grevlex).unwrap_err(),
            Error::UnsupportedRing
        );
    }

    #[test]
    fn pivot_matches_colon_recursion() {
        let weights = [1, 2, 1, 3];
        let gens: Vec<Monomial> = [
            [2, 1, 0, 0],
            [0, 2, 1, 0],
            [1, 0, 2, 1],
            [3, 0, 0, 0],
            [0, 0, 1, 2],
            [1, 1, 1, 1],
        ]
        .iter()
        .map(|e| Monomial::new(e.to_vec()))
        .collect();
        for k in 0..=gens.len() {
            let a = monomial_ideal_numerator(&weights, &gens[..k]);
            let b = colon_recursion(&weights, &gens[..k]);
            assert_eq!(a, b, "first {k} generators");
        }
    }

    #[test]
    fn principal_ideal_numerator() {
        let n = monomial_ideal_numerator(&[1, 1], &[Monomial::new(vec![1, 1])]);
        assert_eq!(n, UniPoly::new(vec![int(1), int(0), int(-1)]));
    }
}
