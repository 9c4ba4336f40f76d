//! Buchberger's algorithm, reduced Gröbner bases and normal forms for
//! commutative (all-even) rings.
//!
//! Critical pairs are processed with the normal selection strategy (smallest
//! lcm first) and pruned with Buchberger's coprime and chain criteria.
//! Basis elements are kept monic throughout.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrdering};
use crate::poly::Polynomial;
use crate::rational::ExactRational;
use crate::ring::Ring;

/// An ideal given by generators in one ring.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(ring: &Ring, generators: Vec<Polynomial>) -> Result<Self> {
        for g in &generators {
            ring.check_same(g.ring())?;
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }
}

/// Terms in ascending order for a fixed monomial ordering; the leading term
/// is the last element.
type Terms = Vec<(Monomial, ExactRational)>;

struct Cmp<'a> {
    ordering: MonomialOrdering,
    weights: &'a [u32],
}

impl Cmp<'_> {
    fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.ordering.compare(a, b, self.weights)
    }

    fn sorted(&self, p: &Polynomial) -> Terms {
        let mut t: Terms = p.terms().iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        t.sort_by(|a, b| self.cmp(&a.0, &b.0));
        t
    }

    /// `p - c * m * g`, both ascending.
    fn sub_mul(&self, p: &[(Monomial, ExactRational)], c: &ExactRational, m: &Monomial, g: &Terms) -> Terms {
        let mut out = Vec::with_capacity(p.len() + g.len());
        let mut i = 0;
        let mut shifted = g.iter().map(|(gm, gc)| (gm.mul(m), gc * c)).peekable();
        while i < p.len() || shifted.peek().is_some() {
            let take_p = match shifted.peek() {
                None => true,
                Some((sm, _)) if i < p.len() => match self.cmp(&p[i].0, sm) {
                    Ordering::Less => true,
                    Ordering::Greater => false,
                    Ordering::Equal => {
                        let (sm, sc) = shifted.next().unwrap();
                        let v = &p[i].1 - sc;
                        if !v.is_zero() {
                            out.push((sm, v));
                        }
                        i += 1;
                        continue;
                    }
                },
                Some(_) => false,
            };
            if take_p {
                out.push(p[i].clone());
                i += 1;
            } else {
                let (sm, sc) = shifted.next().unwrap();
                out.push((sm, -sc));
            }
        }
        out
    }

    /// Complete reduction of `p` modulo monic `basis`.
    fn reduce(&self, mut p: Terms, basis: &[Terms]) -> Terms {
        let mut rem: Terms = Vec::new();
        while let Some((lead, c)) = p.last() {
            let reducer = basis
                .iter()
                .find(|g| g.last().is_some_and(|(gl, _)| gl.divides(lead)));
            match reducer {
                Some(g) => {
                    let (gl, _) = g.last().unwrap();
                    let q = gl.quotient_of(lead).unwrap();
                    let c = c.clone();
                    p = self.sub_mul(&p, &c, &q, g);
                }
                None => rem.push(p.pop().unwrap()),
            }
        }
        rem.reverse();
        rem
    }

    fn s_polynomial(&self, f: &Terms, g: &Terms) -> Terms {
        let (fl, fc) = f.last().unwrap();
        let (gl, gc) = g.last().unwrap();
        let l = fl.lcm(gl);
        let uf = fl.quotient_of(&l).unwrap();
        let ug = gl.quotient_of(&l).unwrap();
        let scaled: Terms = f
            .iter()
            .map(|(m, c)| (m.mul(&uf), c / fc))
            .collect();
        let coef = ExactRational::one() / gc;
        self.sub_mul(&scaled, &coef, &ug, g)
    }
}

fn make_monic(mut t: Terms) -> Terms {
    if let Some((_, lc)) = t.last() {
        if !lc.is_one() {
            let inv = ExactRational::one() / lc;
            for (_, c) in t.iter_mut() {
                *c *= &inv;
            }
        }
    }
    t
}

/// A reduced Gröbner basis: monic elements, no monomial of any element
/// divisible by the leading monomial of another.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Ring,
    ordering: MonomialOrdering,
    elements: Vec<Polynomial>,
    sorted: Vec<Terms>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn ordering(&self) -> MonomialOrdering {
        self.ordering
    }

    /// Elements in ascending order of leading monomial.
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.sorted.iter().map(|t| t.last().unwrap().0.clone()).collect()
    }

    fn cmp(&self) -> Cmp<'_> {
        Cmp {
            ordering: self.ordering,
            weights: self.ring.weights(),
        }
    }

    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(p.ring())?;
        let cmp = self.cmp();
        let rem = cmp.reduce(cmp.sorted(p), &self.sorted);
        Ok(Polynomial::from_terms(&self.ring, rem))
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// Checks that every S-polynomial reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let cmp = self.cmp();
        for i in 0..self.sorted.len() {
            for j in i + 1..self.sorted.len() {
                let s = cmp.s_polynomial(&self.sorted[i], &self.sorted[j]);
                if !cmp.reduce(s, &self.sorted).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    /// Checks monicity and mutual irreducibility.
    pub fn is_reduced(&self) -> bool {
        let leads = self.leading_monomials();
        self.sorted.iter().enumerate().all(|(i, t)| {
            t.last().is_some_and(|(_, c)| c.is_one())
                && t.iter().all(|(m, _)| {
                    leads
                        .iter()
                        .enumerate()
                        .all(|(k, l)| k == i || !l.divides(m))
                })
        })
    }
}

/// Computes the reduced Gröbner basis of `ideal` for `ordering`.
pub fn groebner_basis(ideal: &Ideal, ordering: MonomialOrdering) -> Result<GroebnerBasis> {
    let ring = ideal.ring();
    if !ring.is_commutative() {
        return Err(Error::UnsupportedRing);
    }
    let cmp = Cmp {
        ordering,
        weights: ring.weights(),
    };

    let mut basis: Vec<Terms> = Vec::new();
    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for g in ideal.generators() {
        let t = cmp.reduce(cmp.sorted(g), &basis);
        if !t.is_empty() {
            let k = basis.len();
            basis.push(make_monic(t));
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }

    while let Some(&(i, j)) = pairs.iter().min_by(|a, b| {
        let la = basis[a.0].last().unwrap().0.lcm(&basis[a.1].last().unwrap().0);
        let lb = basis[b.0].last().unwrap().0.lcm(&basis[b.1].last().unwrap().0);
        cmp.cmp(&la, &lb).then(a.cmp(b))
    }) {
        pairs.remove(&(i, j));
        let li = &basis[i].last().unwrap().0;
        let lj = &basis[j].last().unwrap().0;
        if li.is_coprime(lj) {
            continue;
        }
        let l = li.lcm(lj);
        let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].last().unwrap().0.divides(&l)
                && !pairs.contains(&key(i, k))
                && !pairs.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let s = cmp.s_polynomial(&basis[i], &basis[j]);
        let h = cmp.reduce(s, &basis);
        if !h.is_empty() {
            let k = basis.len();
            basis.push(make_monic(h));
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }

    // minimise: drop elements whose lead is divisible by another lead
    basis.sort_by(|a, b| cmp.cmp(&a.last().unwrap().0, &b.last().unwrap().0));
    let mut minimal: Vec<Terms> = Vec::new();
    for t in basis {
        let lead = &t.last().unwrap().0;
        if !minimal.iter().any(|m| m.last().unwrap().0.divides(lead)) {
            minimal.push(t);
        }
    }
    // interreduce tails
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let mut t = minimal[i].clone();
        let lead = t.pop().unwrap();
        let others: Vec<Terms> = minimal
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, m)| m.clone())
            .collect();
        let mut tail = cmp.reduce(t, &others);
        tail.push(lead);
        reduced.push(tail);
    }

    let elements = reduced
        .iter()
        .map(|t| Polynomial::from_terms(ring, t.iter().cloned()))
        .collect();
    Ok(GroebnerBasis {
        ring: ring.clone(),
        ordering,
        elements,
        sorted: reduced,
    })
}

pub fn normal_form(p: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    gb.normal_form(p)
}

/// Ideal membership via the default (graded reverse lexicographic) basis.
pub fn is_member(p: &Polynomial, ideal: &Ideal) -> Result<bool> {
    ideal.ring().check_same(p.ring())?;
    groebner_basis(ideal, MonomialOrdering::default())?.contains(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_poly;
    use crate::rational::int;
    use crate::ring::{make_ring, RingSpec, VarSpec};

    fn xyz() -> Ring {
        make_ring(RingSpec::new(vec![
            VarSpec::even("x", 1),
            VarSpec::even("y", 1),
            VarSpec::even("z", 1),
        ]))
        .unwrap()
    }

    fn ideal(r: &Ring, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|g| parse_poly(r, g).unwrap()).collect()).unwrap()
    }

    fn p(r: &Ring, s: &str) -> Polynomial {
        parse_poly(r, s).unwrap()
    }

    #[test]
    fn principal_monomial_ideal() {
        let r = xyz();
        let gb = groebner_basis(&ideal(&r, &["x^2"]), MonomialOrdering::Grevlex).unwrap();
        assert_eq!(gb.elements(), &[p(&r, "x^2")]);
        assert!(gb.normal_form(&p(&r, "x^2")).unwrap().is_zero());
        assert_eq!(gb.normal_form(&p(&r, "1")).unwrap(), p(&r, "1"));
    }

    #[test]
    fn sum_and_difference() {
        let r = xyz();
        for ord in MonomialOrdering::ALL {
            let gb = groebner_basis(&ideal(&r, &["x^2 - y^2", "x^2 + y^2"]), ord).unwrap();
            let mut els: Vec<String> = gb.elements().iter().map(|e| e.to_string()).collect();
            els.sort();
            assert_eq!(els, vec!["x^2", "y^2"]);
            assert!(gb.is_reduced());
            assert!(gb.satisfies_buchberger_criterion());
        }
    }

    #[test]
    fn zero_ideal() {
        let r = xyz();
        let gb = groebner_basis(&ideal(&r, &["0"]), MonomialOrdering::Grevlex).unwrap();
        assert!(gb.is_empty());
        let gb = groebner_basis(&Ideal::new(&r, vec![]).unwrap(), MonomialOrdering::Lex).unwrap();
        assert!(gb.is_empty());
        assert_eq!(gb.normal_form(&p(&r, "x+1")).unwrap(), p(&r, "x+1"));
    }

    #[test]
    fn membership() {
        let r = xyz();
        let i = ideal(&r, &["x^2"]);
        assert!(is_member(&p(&r, "x^2*y"), &i).unwrap());
        assert!(!is_member(&p(&r, "y"), &i).unwrap());
    }

    #[test]
    fn unit_ideal() {
        let r = xyz();
        let gb = groebner_basis(&ideal(&r, &["x + 1", "x"]), MonomialOrdering::Grevlex).unwrap();
        assert_eq!(gb.elements(), &[Polynomial::one(&r)]);
    }

    #[test]
    fn twisted_cubic() {
        // the ideal of the twisted cubic: generated by the 2x2 minors
        let r = make_ring(RingSpec::new(vec![
            VarSpec::even("w", 1),
            VarSpec::even("x", 1),
            VarSpec::even("y", 1),
            VarSpec::even("z", 1),
        ]))
        .unwrap();
        let i = ideal(&r, &["w*y - x^2", "w*z - x*y", "x*z - y^2"]);
        let gb = groebner_basis(&i, MonomialOrdering::Grevlex).unwrap();
        assert_eq!(gb.len(), 3);
        assert!(gb.satisfies_buchberger_criterion());
        let lex = groebner_basis(&i, MonomialOrdering::Lex).unwrap();
        assert!(lex.satisfies_buchberger_criterion());
        assert!(lex.is_reduced());
        for g in i.generators() {
            assert!(lex.contains(g).unwrap());
        }
    }

    #[test]
    fn rejects_odd_rings_and_mixed_input() {
        let e = make_ring(RingSpec::new(vec![VarSpec::odd("a", 1)])).unwrap();
        let i = Ideal::new(&e, vec![Polynomial::var(&e, 0)]).unwrap();
        assert_eq!(groebner_basis(&i, MonomialOrdering::Grevlex).unwrap_err(), Error::UnsupportedRing);
        let r = xyz();
        assert!(Ideal::new(&r, vec![Polynomial::var(&e, 0)]).is_err());
        let gb = groebner_basis(&ideal(&r, &["x"]), MonomialOrdering::Grevlex).unwrap();
        assert_eq!(gb.normal_form(&Polynomial::one(&e)).unwrap_err(), Error::MixedRings);
    }

    #[test]
    fn normal_form_rescaling() {
        let r = xyz();
        let gb = groebner_basis(&ideal(&r, &["3*x*y - 6*z^2"]), MonomialOrdering::Grevlex).unwrap();
        assert_eq!(gb.elements()[0], p(&r, "x*y - 2*z^2"));
        assert_eq!(gb.normal_form(&p(&r, "x*y")).unwrap(), p(&r, "2*z^2"));
        assert_eq!(gb.normal_form(&p(&r, "x*y")).unwrap().coefficient(&Monomial::new(vec![0, 0, 2])), int(2));
    }
}
