use gradus_core::kappa::{kappa_degree, rewrite_to_generators, KappaExpression, KappaSymbol, RewriteConfig};
use gradus_core::monomial::{monomials_of_degree, Monomial};
use gradus_core::rational::{frac, int};
use gradus_core::suite::slice_dimensions;
use gradus_core::upoly::UniPoly;
use gradus_core::{
    groebner_basis, hilbert_series, make_ring, parse_poly, rank_of_span, Degree, Ideal, MonomialOrdering,
    Polynomial, RationalSeries, Ring, RingSpec, VarSpec,
};
use num_traits::Zero;
use proptest::prelude::*;

fn even_ring() -> Ring {
    make_ring(RingSpec::new(vec![
        VarSpec::even("x", 1),
        VarSpec::even("y", 2),
        VarSpec::even("z", 1),
    ]))
    .unwrap()
}

fn mixed_ring() -> Ring {
    make_ring(RingSpec::new(vec![
        VarSpec::odd("a", 1),
        VarSpec::even("t", 2),
        VarSpec::odd("b", 3),
        VarSpec::odd("c", 1),
    ]))
    .unwrap()
}

fn poly_in(ring: Ring, max_exp: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    let n = ring.nvars();
    prop::collection::vec(
        (prop::collection::vec(0..=max_exp, n), -6i64..=6, 1i64..=3),
        0..=max_terms,
    )
    .prop_map(move |terms| {
        Polynomial::from_terms(
            &ring,
            terms
                .into_iter()
                .map(|(e, num, den)| (Monomial::new(e), frac(num, den))),
        )
    })
}

/// Nonzero homogeneous polynomial of the given degree.
fn homogeneous_in(ring: Ring, degree: u64) -> impl Strategy<Value = Polynomial> {
    let monomials = monomials_of_degree(ring.weights(), &vec![false; ring.nvars()], degree);
    let n = monomials.len();
    prop::collection::vec((0..n, 1i64..=5), 1..=4).prop_map(move |picks| {
        Polynomial::from_terms(&ring, picks.into_iter().map(|(i, c)| (monomials[i].clone(), int(c))))
    })
}

fn series() -> impl Strategy<Value = RationalSeries> {
    (
        prop::collection::vec(-4i64..=4, 0..6),
        prop::collection::vec((1u32..=3, 0u32..=2), 0..3),
    )
        .prop_map(|(num, factors)| RationalSeries::new(UniPoly::from_ints(&num), factors))
}

fn odd_count(ring: &Ring, m: &Monomial) -> u32 {
    m.exponents()
        .iter()
        .enumerate()
        .filter(|(i, _)| ring.is_odd(*i))
        .map(|(_, e)| *e)
        .sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms_even(
        p in poly_in(even_ring(), 2, 4),
        q in poly_in(even_ring(), 2, 4),
        r in poly_in(even_ring(), 2, 4),
    ) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p + &q) - &q, p.clone());
    }

    #[test]
    fn ring_axioms_mixed(
        p in poly_in(mixed_ring(), 1, 4),
        q in poly_in(mixed_ring(), 1, 4),
        r in poly_in(mixed_ring(), 1, 4),
    ) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
        prop_assert!((&p * &q).is_canonical());
    }

    #[test]
    fn sign_rule_on_monomials(
        a in prop::collection::vec(0u32..=1, 4),
        b in prop::collection::vec(0u32..=1, 4),
        t1 in 0u32..=2,
        t2 in 0u32..=2,
    ) {
        let ring = mixed_ring();
        let mut ea = a.clone();
        ea[1] = t1;
        let mut eb = b.clone();
        eb[1] = t2;
        let ma = Polynomial::from_terms(&ring, [(Monomial::new(ea.clone()), int(1))]);
        let mb = Polynomial::from_terms(&ring, [(Monomial::new(eb.clone()), int(1))]);
        let ab = &ma * &mb;
        let ba = &mb * &ma;
        let sign = odd_count(&ring, &Monomial::new(ea)) * odd_count(&ring, &Monomial::new(eb)) % 2;
        if sign == 1 {
            prop_assert_eq!(ab, -&ba);
        } else {
            prop_assert_eq!(ab, ba);
        }
    }

    #[test]
    fn odd_elements_square_to_zero(p in poly_in(mixed_ring(), 1, 5)) {
        // the odd part of any element squares to zero
        let ring = mixed_ring();
        let odd = Polynomial::from_terms(
            &ring,
            p.terms()
                .iter()
                .filter(|(m, _)| odd_count(&ring, m) % 2 == 1)
                .map(|(m, c)| (m.clone(), c.clone())),
        );
        prop_assert!((&odd * &odd).is_zero());
    }

    #[test]
    fn canonical_and_round_trip(p in poly_in(mixed_ring(), 2, 6)) {
        prop_assert!(p.is_canonical());
        prop_assert!(p.terms().values().all(|c| !c.is_zero()));
        let back = parse_poly(p.ring(), &p.to_string()).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn degree_additivity(
        (d1, p) in (0u64..=4).prop_flat_map(|d| (Just(d), homogeneous_in(even_ring(), d))),
        (d2, q) in (0u64..=4).prop_flat_map(|d| (Just(d), homogeneous_in(even_ring(), d))),
    ) {
        prop_assert_eq!(p.weighted_degree(), Degree::Homogeneous(d1));
        prop_assert_eq!((&p * &q).weighted_degree(), Degree::Homogeneous(d1 + d2));
    }

    #[test]
    fn rank_invariance(
        ps in prop::collection::vec(poly_in(even_ring(), 2, 4), 1..6),
        scale in 1i64..=5,
    ) {
        let r = rank_of_span(&ps).unwrap();
        prop_assert!(r <= ps.len());
        let mut shuffled: Vec<Polynomial> = ps.iter().rev().map(|p| p.scale(&int(scale))).collect();
        prop_assert_eq!(rank_of_span(&shuffled).unwrap(), r);
        let sum = ps.iter().fold(Polynomial::zero(&even_ring()), |a, p| &a + p);
        shuffled.push(sum);
        prop_assert_eq!(rank_of_span(&shuffled).unwrap(), r);
    }

    #[test]
    fn groebner_invariants(gens in prop::collection::vec(poly_in(even_ring(), 2, 3), 1..=3)) {
        let ring = even_ring();
        let ideal = Ideal::new(&ring, gens.clone()).unwrap();
        for ordering in MonomialOrdering::ALL {
            let gb = groebner_basis(&ideal, ordering).unwrap();
            prop_assert!(gb.is_reduced());
            prop_assert!(gb.satisfies_buchberger_criterion());
            for g in &gens {
                prop_assert!(gb.normal_form(g).unwrap().is_zero());
            }
            for g in gb.elements() {
                prop_assert!(gb.normal_form(g).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn hilbert_ordering_independent_and_matches_slices(
        gens in prop::collection::vec((1u64..=3, poly_in(even_ring(), 3, 5)), 1..=3),
    ) {
        let ring = even_ring();
        let gens: Vec<Polynomial> = gens.into_iter().map(|(d, p)| p.graded_component(d)).collect();
        let ideal = Ideal::new(&ring, gens).unwrap();
        let a = hilbert_series(&ideal, MonomialOrdering::Grevlex).unwrap();
        let b = hilbert_series(&ideal, MonomialOrdering::Lex).unwrap();
        prop_assert!(a.series_eq(&b));
        let coeffs = a.expand(6).unwrap();
        let dims = slice_dimensions(&ideal, 6).unwrap();
        for (c, d) in coeffs.iter().zip(&dims) {
            prop_assert_eq!(c.clone(), int(*d as i64));
        }
    }

    #[test]
    fn series_field_axioms(a in series(), b in series(), c in series()) {
        prop_assert!(a.add(&b).series_eq(&b.add(&a)));
        prop_assert!(a.add(&b).add(&c).series_eq(&a.add(&b.add(&c))));
        prop_assert!(a.mul(&b.add(&c)).series_eq(&a.mul(&b).add(&a.mul(&c))));
        prop_assert!(a.sub(&a).is_zero() || a.sub(&a).series_eq(&RationalSeries::zero()));
        if !b.is_zero() {
            prop_assert!(a.mul(&b).div(&b).unwrap().series_eq(&a));
        }
    }

    #[test]
    fn expansion_is_convolution(a in series(), b in series()) {
        let n = 12;
        let ea = a.expand(n).unwrap();
        let eb = b.expand(n).unwrap();
        let eab = a.mul(&b).expand(n).unwrap();
        for k in 0..=n {
            let conv = (0..=k).fold(int(0), |acc, i| acc + &ea[i] * &eb[k - i]);
            prop_assert_eq!(eab[k].clone(), conv);
        }
        let sum = a.add(&b).expand(n).unwrap();
        for k in 0..=n {
            prop_assert_eq!(sum[k].clone(), &ea[k] + &eb[k]);
        }
    }

    #[test]
    fn reduce_idempotent_and_value_preserving(a in series()) {
        let r = a.reduce();
        prop_assert!(r.series_eq(&a));
        prop_assert_eq!(r.reduce().to_string(), r.to_string());
        prop_assert!(RationalSeries::parse(&r.to_string()).unwrap().series_eq(&a));
        prop_assert!(RationalSeries::parse(&a.to_string()).unwrap().series_eq(&a));
    }

    #[test]
    fn kappa_rewrite_preserves_degree(
        syms in prop::collection::vec((-1i64..=0, 0u32..=4, 0u32..=4), 1..=3),
        d in -3i64..=4,
    ) {
        let syms: Vec<KappaSymbol> = syms.into_iter().map(|(a0, a1, a2)| KappaSymbol::new(a0, a1, a2)).collect();
        let deg: i64 = syms.iter().map(kappa_degree).sum();
        let e = KappaExpression::product(int(1), syms);
        let r = rewrite_to_generators(&e, d, &RewriteConfig::default());
        match r.poly.weighted_degree() {
            Degree::Zero => {}
            Degree::Homogeneous(k) => prop_assert_eq!(k as i64, deg),
            Degree::Inhomogeneous => prop_assert!(false, "inhomogeneous rewrite of {}", e),
        }
    }

    #[test]
    fn kappa_fiber_multiplicativity(m in 0u32..=6, n in 0u32..=6, m2 in 0u32..=6, n2 in 0u32..=6) {
        let cfg = RewriteConfig::default();
        let rw = |m, n| rewrite_to_generators(&KappaExpression::symbol(KappaSymbol::new(0, m, n)), 3, &cfg).poly;
        prop_assert_eq!(&rw(m, n) * &rw(m2, n2), rw(m + m2, n + n2).scale(&int(2)));
    }
}
