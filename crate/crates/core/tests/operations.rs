use gradus_core::groebner::GroebnerBasis;
use gradus_core::kappa::{self, x_generators};
use gradus_core::monomial::Monomial;
use gradus_core::rational::{frac, int};
use gradus_core::specfile::SpecFile;
use gradus_core::suite;
use gradus_core::upoly::UniPoly;
use gradus_core::{
    groebner_basis, hilbert_series, is_member, make_ring, parse_poly, rank_of_span, Degree, ExactRational, Ideal,
    MonomialOrdering, Polynomial, RationalSeries, Ring, RingSpec, VarSpec,
};

fn bun() -> SpecFile {
    SpecFile::parse(suite::BUN_SPEC).unwrap()
}

fn xy() -> Ring {
    make_ring(RingSpec::new(vec![VarSpec::even("x", 1), VarSpec::even("y", 1)])).unwrap()
}

fn s() -> RationalSeries {
    suite::s_series()
}

/// Product of two exterior monomials given as increasing index lists, by
/// counting inversions of the concatenation.
fn wedge(a: &[usize], b: &[usize]) -> Option<(Vec<usize>, i64)> {
    let mut all: Vec<usize> = a.iter().chain(b).copied().collect();
    let mut inversions = 0;
    for i in 0..all.len() {
        for j in i + 1..all.len() {
            if all[i] == all[j] {
                return None;
            }
            if all[i] > all[j] {
                inversions += 1;
            }
        }
    }
    all.sort();
    Some((all, if inversions % 2 == 0 { 1 } else { -1 }))
}

#[test]
fn p1_squared_by_inversion_count() {
    let f = bun();
    let p1 = f.parse_expr("p1").unwrap();
    // p1 = b11 b13 + b12 b14, indices 0..3
    let terms = [vec![0, 2], vec![1, 3]];
    let mut expected: Vec<(Vec<usize>, i64)> = Vec::new();
    for a in &terms {
        for b in &terms {
            if let Some((m, s)) = wedge(a, b) {
                match expected.iter_mut().find(|(k, _)| *k == m) {
                    Some(e) => e.1 += s,
                    None => expected.push((m, s)),
                }
            }
        }
    }
    let oracle = Polynomial::from_terms(
        &f.ring,
        expected.into_iter().map(|(idx, c)| {
            let mut e = vec![0u32; 8];
            for i in idx {
                e[i] = 1;
            }
            (Monomial::new(e), int(c))
        }),
    );
    assert_eq!(&p1 * &p1, oracle);
    assert_eq!((&p1 * &p1).to_string(), "-2*b11*b12*b13*b14");
    assert!(p1.pow(3).is_zero());
}

#[test]
fn exterior_ring_basics() {
    let f = bun();
    let e = |t: &str| f.parse_expr(t).unwrap();
    assert!(e("b11*b11").is_zero());
    assert_eq!(e("b12*b11"), -&e("b11*b12"));
    assert_eq!(e("p2").weighted_degree(), Degree::Homogeneous(6));
    let p1sq = e("p1^2");
    assert_eq!(p1sq.graded_component(4), p1sq);
    assert_eq!(rank_of_span(&[e("p1"), e("2*p1")]).unwrap(), 1);
    assert_eq!(rank_of_span(&[e("0")]).unwrap(), 0);
}

#[test]
fn commutative_basics() {
    let r = make_ring(RingSpec::new(vec![VarSpec::even("x", 1), VarSpec::even("b", 2)])).unwrap();
    let p = |t: &str| parse_poly(&r, t).unwrap();
    assert_eq!(p("x + b").weighted_degree(), Degree::Inhomogeneous);
    assert_eq!(p("5").weighted_degree(), Degree::Homogeneous(0));
    assert_eq!(p("x + b").graded_component(2), p("b"));
    assert!((&p("x - 2*b") + &p("x - 2*b").scale(&int(-1))).is_zero());
    let r = xy();
    assert_eq!(parse_poly(&r, "(x+y)^2").unwrap(), parse_poly(&r, "x^2 + 2*x*y + y^2").unwrap());
    let empty = make_ring(RingSpec::default()).unwrap();
    assert_eq!(parse_poly(&empty, "3/4").unwrap().to_string(), "3/4");
}

#[test]
fn groebner_examples() {
    let r = xy();
    let p = |t: &str| parse_poly(&r, t).unwrap();
    let ideal = Ideal::new(&r, vec![p("x^2 - y^2"), p("x^2 + y^2")]).unwrap();
    let gb = groebner_basis(&ideal, MonomialOrdering::Grevlex).unwrap();
    let mut got: Vec<String> = gb.elements().iter().map(|g| g.to_string()).collect();
    got.sort();
    assert_eq!(got, vec!["x^2", "y^2"]);
    // hand reduction: sum and difference give 2x^2 and -2y^2
    assert!(gb.contains(&(&p("x^2 - y^2") + &p("x^2 + y^2")).scale(&frac(1, 2))).unwrap());

    let x2 = Ideal::new(&r, vec![p("x^2")]).unwrap();
    let gb: GroebnerBasis = groebner_basis(&x2, MonomialOrdering::Lex).unwrap();
    assert_eq!(gb.len(), 1);
    assert!(gb.normal_form(&p("x^2")).unwrap().is_zero());
    assert_eq!(gb.normal_form(&p("1")).unwrap(), p("1"));
    assert!(is_member(&p("x^2*y"), &x2).unwrap());
    assert!(!is_member(&p("y"), &x2).unwrap());
    assert!(groebner_basis(&Ideal::new(&r, vec![p("0")]).unwrap(), MonomialOrdering::Grevlex)
        .unwrap()
        .is_empty());
}

#[test]
fn presentation_relations_reduce_to_zero() {
    let (_, ideal) = suite::build_vb(3);
    let gb = groebner_basis(&ideal, MonomialOrdering::Grevlex).unwrap();
    let [x1, x2, x3] = x_generators(3);
    assert!(gb.normal_form(&x1.pow(3)).unwrap().is_zero());
    assert!(gb.normal_form(&x3.pow(5)).unwrap().is_zero());
    assert!(gb.normal_form(&(&(&x1 * &x1) * &x2 + &x1 * &x3.pow(2))).unwrap().is_zero());
    assert!(!gb.normal_form(&x1.pow(2)).unwrap().is_zero());
    // the generator ring and the bundled file agree
    let file = SpecFile::parse(suite::VB3_SPEC).unwrap();
    assert_eq!(file.ring, kappa::generator_ring());
}

#[test]
fn au_membership() {
    let f = SpecFile::parse(suite::AU_SPEC).unwrap();
    assert!(is_member(&f.parse_expr("T^3").unwrap(), &f.ideal).unwrap());
    assert!(is_member(&f.parse_expr("x*T^3 - 2*b*T^3").unwrap(), &f.ideal).unwrap());
    assert!(!is_member(&f.parse_expr("T^2").unwrap(), &f.ideal).unwrap());
    assert_eq!(f.parse_expr("T").unwrap().to_string(), "3/2*x - 1/2*y");
}

#[test]
fn hilbert_examples() {
    let x = make_ring(RingSpec::new(vec![VarSpec::even("x", 1)])).unwrap();
    let h = hilbert_series(&Ideal::new(&x, vec![]).unwrap(), MonomialOrdering::Grevlex).unwrap();
    assert_eq!(h.to_string(), "1/((1-T)^1)");
    let (_, au) = suite::build_au();
    let raw = hilbert_series(&au, MonomialOrdering::Grevlex).unwrap();
    assert!(raw.series_eq(&s()));
    assert_eq!(raw.reduce().to_string(), "(1+2*T+4*T^2+4*T^3+2*T^4+T^5)/((1-T)^1)");
}

#[test]
fn reduce_examples() {
    let p = |t: &str| RationalSeries::parse(t).unwrap();
    assert_eq!(p("(1-T^2)/(1-T)^2").reduce().to_string(), "(1+T)/((1-T)^1)");
    assert_eq!(p("(1-T)/(1-T)").reduce().to_string(), "1");
}

#[test]
fn series_examples() {
    let p = |t: &str| RationalSeries::parse(t).unwrap();
    let r = p("T^2/(1-T^2)").mul(&suite::strata_series());
    assert!(r.series_eq(&suite::r_series()));
    assert!(s().add(&RationalSeries::zero()).series_eq(&s()));
    assert!(p("1/(1-T)").series_eq(&p("(1+T)/(1-T^2)")));
    assert!(suite::coh_series().series_eq(&s().add(&r)));

    // s != coh by explicit cross-multiplication of cleared forms
    let coh = suite::coh_series();
    let lhs = s().numerator() * &coh.denominator_poly();
    let rhs = coh.numerator() * &s().denominator_poly();
    assert_ne!(lhs, rhs);
    assert!(!s().series_eq(&coh));

    let total = s().add(&r);
    assert!(s().leq(&s(), 100).unwrap());
    assert!(s().leq(&total, 100).unwrap());
    assert!(!total.leq(&s(), 100).unwrap());
    assert!(r.expand(2).unwrap()[2] > int(0));
}

#[test]
fn expansions() {
    let geometric = RationalSeries::parse("1/(1-T)").unwrap();
    assert_eq!(geometric.expand(4).unwrap(), vec![int(1); 5]);
    // cumulative sums of the numerator of s
    let mut acc = 0;
    let cumulative: Vec<ExactRational> = [1, 2, 4, 4, 2, 1, 0]
        .iter()
        .map(|c| {
            acc += c;
            int(acc)
        })
        .collect();
    assert_eq!(s().expand(6).unwrap(), cumulative);
    assert_eq!(
        cumulative,
        [1, 3, 7, 11, 13, 14, 14].map(int).to_vec()
    );
    let strata = RationalSeries::polynomial(UniPoly::from_ints(&[1, 3, 6, 3, 1]));
    assert_eq!(strata.expand(5).unwrap(), [1, 3, 6, 3, 1, 0].map(int).to_vec());
}

#[test]
fn jxj_m_cubed_vanishes() {
    let f = SpecFile::parse(suite::JXJ_SPEC).unwrap();
    // M only involves the four one-forms e_i + f_i
    let m = f.parse_expr("M").unwrap();
    assert!(m.pow(3).is_zero());
    assert!(!m.pow(2).is_zero());
}

#[test]
fn s0_degree_four_slice_by_enumeration() {
    let (_, ideal) = suite::build_s0();
    assert_eq!(suite::slice_dimensions(&ideal, 4).unwrap(), vec![1, 3, 6, 3, 1]);
}
