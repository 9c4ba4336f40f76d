//! Executable checks for the rings and series identities behind the Chow
//! ring presentations in rank two, genus two.
//!
//! Every check is an exact identity. A failing check carries a witness: the
//! nonzero polynomial, or the pair of series that differ.
//!
//! The rank check in the degree-one/degree-three exterior model uses the 14
//! monomials `1, p1, p1^2, p3, p1p3, p2, p1p2, p3^2, p1p3^2, p2p3, p2^2,
//! p3^3, p2p3^2, p3^4`, which must be linearly independent.

mod oracle;

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use crate::error::Result;
use crate::expr::parse_poly_with;
use crate::groebner::{is_member, Ideal};
use crate::hilbert::hilbert_series;
use crate::kappa::{
    self, kappa_degree, rewrite_to_generators, rule_mixed, KappaCalculus, KappaExpression, KappaSymbol,
    RewriteConfig, GENERATORS,
};
use crate::linalg::rank_of_span;
use crate::monomial::MonomialOrdering;
use crate::poly::{Degree, Polynomial};
use crate::ring::Ring;
use crate::series::RationalSeries;
use crate::specfile::SpecFile;
use crate::upoly::UniPoly;

pub use oracle::slice_dimensions;

pub const AU_SPEC: &str = include_str!("specs/au.ring");
pub const COHOM_SPEC: &str = include_str!("specs/cohom.ring");
pub const S0_SPEC: &str = include_str!("specs/s0.ring");
pub const VB3_SPEC: &str = include_str!("specs/vb3.ring");
pub const BUN_SPEC: &str = include_str!("specs/bun.ring");
pub const JXJ_SPEC: &str = include_str!("specs/jxj.ring");

/// Hilbert series of the open stratum.
pub const S_LITERAL: &str = "(1+2*T+4*T^2+4*T^3+2*T^4+T^5)/(1-T)";
/// Hilbert series of the cohomology-side presentation.
pub const COH_LITERAL: &str = "(1+T+2*T^2+2*T^3+2*T^4+2*T^5+2*T^6+T^7+T^8)/((1-T^2)*(1-T)^2)";
/// Contribution of the unstable strata.
pub const R_LITERAL: &str = "T^2*(1+3*T+6*T^2+3*T^3+T^4)/((1-T^2)*(1-T)^2)";
/// Hilbert series of each unstable stratum.
pub const STRATA_LITERAL: &str = "(1+3*T+6*T^2+3*T^3+T^4)/(1-T)^2";
pub const S0_LITERAL: &str = "1+3*T+6*T^2+3*T^3+T^4";

/// Degrees `d` for which the bundle presentation is checked.
pub const VB_DEGREES: [i64; 3] = [0, 2, 3];

/// Truncation used for coefficientwise comparison of series.
pub const LEQ_TERMS: usize = 100;

/// Degree bound for the brute-force slice oracle.
pub const ORACLE_DEGREE: u64 = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub id: String,
    pub status: Status,
    /// Empty on success; a printable witness on failure.
    pub detail: String,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    fn from_bool(id: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) -> Self {
        CheckResult {
            id: id.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: if ok { String::new() } else { witness() },
        }
    }

    fn from_result(id: impl Into<String>, r: Result<CheckResult>) -> Self {
        let id = id.into();
        r.unwrap_or_else(|e| CheckResult {
            id,
            status: Status::Fail,
            detail: format!("error: {e}"),
        })
    }
}

fn zero_check(id: impl Into<String>, p: &Polynomial) -> CheckResult {
    CheckResult::from_bool(id, p.is_zero(), || p.to_string())
}

fn series_check(id: impl Into<String>, got: &RationalSeries, want: &RationalSeries) -> CheckResult {
    CheckResult::from_bool(id, got.series_eq(want), || format!("got {got}, expected {want}"))
}

fn eq_check<T: PartialEq + fmt::Display>(id: impl Into<String>, got: T, want: T) -> CheckResult {
    let ok = got == want;
    CheckResult::from_bool(id, ok, || format!("got {got}, expected {want}"))
}

/// Test hooks.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SuiteOptions {
    /// Flips a sign in one relation of the exterior model, which must then
    /// fail with a nonzero witness.
    pub perturb: bool,
}

fn literal(text: &str) -> RationalSeries {
    RationalSeries::parse(text).expect("bundled series literal parses")
}

pub fn s_series() -> RationalSeries {
    literal(S_LITERAL)
}

pub fn coh_series() -> RationalSeries {
    literal(COH_LITERAL)
}

pub fn r_series() -> RationalSeries {
    literal(R_LITERAL)
}

pub fn strata_series() -> RationalSeries {
    literal(STRATA_LITERAL)
}

fn spec(text: &str) -> SpecFile {
    let f = SpecFile::parse(text).expect("bundled ring specification parses");
    assert!(
        f.ideal.generators().iter().all(Polynomial::is_homogeneous),
        "bundled ideal `{}` is inhomogeneous",
        f.name
    );
    f
}

/// Chow ring of the open stratum `U`: `Q[x, y, z, b] / I`.
pub fn build_au() -> (Ring, Ideal) {
    let f = spec(AU_SPEC);
    (f.ring, f.ideal)
}

/// `Q[a1, p1, p2, p3, a2, c2]` modulo the ten relations in `p1, p2, p3`.
pub fn build_cohom() -> (Ring, Ideal) {
    let f = spec(COHOM_SPEC);
    (f.ring, f.ideal)
}

/// `Q[P1, P2, M]` modulo the seven fibre-product relations.
pub fn build_s0() -> (Ring, Ideal) {
    let f = spec(S0_SPEC);
    (f.ring, f.ideal)
}

/// The ten relations in the six kappa generators, for bundle degree `d`.
pub fn build_vb(d: i64) -> (Ring, Ideal) {
    let ideal = kappa::presentation_ideal(d);
    (ideal.ring().clone(), ideal)
}

/// Encoded quotient rings, by name.
pub fn encoded_rings() -> Vec<(String, Ideal)> {
    let mut out = vec![
        ("au".to_string(), build_au().1),
        ("cohom".to_string(), build_cohom().1),
        ("s0".to_string(), build_s0().1),
    ];
    out.extend(VB_DEGREES.iter().map(|d| (format!("vb{d}"), build_vb(*d).1)));
    out
}

/// Reduced Hilbert series of `ring / ideal` (grevlex).
pub fn hilbert(ideal: &Ideal) -> Result<RationalSeries> {
    Ok(hilbert_series(ideal, MonomialOrdering::Grevlex)?.reduce())
}

fn au_checks(_: &SuiteOptions) -> Vec<CheckResult> {
    let (_, ideal) = build_au();
    let f = spec(AU_SPEC);
    let mut out = Vec::new();
    let h = hilbert(&ideal);
    out.push(CheckResult::from_result(
        "au.hilbert",
        h.as_ref().map(|h| series_check("au.hilbert", h, &s_series())).map_err(Clone::clone),
    ));
    out.push(CheckResult::from_result(
        "au.member_t3",
        f.parse_expr("T^3")
            .and_then(|t3| is_member(&t3, &ideal))
            .map(|m| CheckResult::from_bool("au.member_t3", m, || "T^3 not in I".into())),
    ));
    out.push(CheckResult::from_result(
        "au.total_dimension",
        h.and_then(|h| h.expand(LEQ_TERMS)).map(|c| {
            let last = &c[LEQ_TERMS];
            CheckResult::from_bool("au.total_dimension", *last == crate::rational::int(14), || {
                format!("coefficient of T^{LEQ_TERMS} is {last}")
            })
        }),
    ));
    out
}

fn cohom_checks(_: &SuiteOptions) -> Vec<CheckResult> {
    let (ring, ideal) = build_cohom();
    let mut out = vec![CheckResult::from_result(
        "cohom.hilbert",
        hilbert(&ideal).map(|h| series_check("cohom.hilbert", &h, &coh_series())),
    )];
    let p2 = Polynomial::var_named(&ring, "p2").expect("p2 is a variable");
    out.push(CheckResult::from_result(
        "cohom.member_p2_cubed",
        is_member(&p2.pow(3), &ideal).map(|m| CheckResult::from_bool("cohom.member_p2_cubed", m, || "p2^3".into())),
    ));
    out.push(eq_check(
        "cohom.p2_degree",
        p2.weighted_degree(),
        Degree::Homogeneous(3),
    ));
    out
}

fn s0_checks(_: &SuiteOptions) -> Vec<CheckResult> {
    let (_, ideal) = build_s0();
    let mut out = Vec::new();
    match hilbert(&ideal) {
        Ok(h) => {
            out.push(series_check("s0.hilbert", &h, &literal(S0_LITERAL)));
            let gerbe = literal("1/(1-T)^2");
            out.push(series_check("s0.strata_series", &h.mul(&gerbe), &strata_series()));
        }
        Err(e) => out.push(CheckResult::from_result("s0.hilbert", Err(e))),
    }
    out.push(CheckResult::from_result(
        "s0.slice_degree4",
        slice_dimensions(&ideal, 4).map(|d| eq_check("s0.slice_degree4", d[4], 1)),
    ));
    out
}

fn vb_checks(_: &SuiteOptions) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let mut series = Vec::new();
    for d in VB_DEGREES {
        let (ring, ideal) = build_vb(d);
        let id = format!("vb{d}.hilbert");
        match hilbert(&ideal) {
            Ok(h) => {
                out.push(series_check(&id, &h, &coh_series()));
                series.push(h);
            }
            Err(e) => out.push(CheckResult::from_result(id, Err(e))),
        }
        let xs = kappa::x_generators(d);
        let g = parse_poly_with(&ring, "x1^2*x2 + x1*x3^2", &x_bindings(&xs));
        let id = format!("vb{d}.member_relation");
        out.push(CheckResult::from_result(
            id.clone(),
            g.and_then(|g| is_member(&g, &ideal))
                .map(|m| CheckResult::from_bool(id, m, || "x1^2*x2 + x1*x3^2".into())),
        ));
    }
    let agree = series.windows(2).all(|w| w[0].series_eq(&w[1])) && series.len() == VB_DEGREES.len();
    out.push(CheckResult::from_bool("vb.d_independence", agree, || {
        series.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" | ")
    }));
    let file = spec(VB3_SPEC);
    out.push(eq_check(
        "vb3.spec_matches_builder",
        file.ideal.generators().to_vec() == build_vb(3).1.generators().to_vec(),
        true,
    ));
    out
}

fn x_bindings(xs: &[Polynomial; 3]) -> HashMap<String, Polynomial> {
    ["x1", "x2", "x3"]
        .iter()
        .zip(xs)
        .map(|(n, p)| (n.to_string(), p.clone()))
        .collect()
}

/// The ten relations vanish on `p1, p2, p3` in the exterior model, and the
/// 14 monomials are independent.
pub fn exterior_bun_model(opts: &SuiteOptions) -> Vec<CheckResult> {
    let f = spec(BUN_SPEC);
    let p = |name: &str| f.parse_expr(name).expect("bundled let");
    let xs = [p("p1"), p("p2"), p("p3")];
    let bindings = x_bindings(&xs);
    let mut out = Vec::new();
    for (i, rel) in kappa::PRESENTATION_RELATIONS.iter().enumerate() {
        let rel = if opts.perturb && i == 3 {
            "6*x1*x2*x3 - x3^3"
        } else {
            rel
        };
        let id = format!("bun.relation{:02}", i + 1);
        out.push(CheckResult::from_result(
            id.clone(),
            parse_poly_with(&f.ring, rel, &bindings).map(|v| zero_check(id, &v)),
        ));
    }
    let monomials = [
        "1", "p1", "p1^2", "p3", "p1*p3", "p2", "p1*p2", "p3^2", "p1*p3^2", "p2*p3", "p2^2", "p3^3", "p2*p3^2", "p3^4",
    ];
    out.push(rank_check("bun.rank14", &f, &monomials, 14));
    out
}

fn rank_check(id: &str, f: &SpecFile, exprs: &[&str], want: usize) -> CheckResult {
    let polys: Result<Vec<Polynomial>> = exprs.iter().map(|e| f.parse_expr(e)).collect();
    CheckResult::from_result(id, polys.and_then(|ps| rank_of_span(&ps)).map(|r| eq_check(id, r, want)))
}

/// The fibre-product relations, the theorem of the square, the diagonal
/// class and the 14-element basis, in the exterior model on `e_i, f_i`.
pub fn exterior_jxj_model(_: &SuiteOptions) -> Vec<CheckResult> {
    let f = spec(JXJ_SPEC);
    let s0 = spec(S0_SPEC);
    let bindings: HashMap<String, Polynomial> = ["P1", "P2", "M"]
        .iter()
        .map(|n| (n.to_string(), f.parse_expr(n).expect("bundled let")))
        .collect();
    let mut out = Vec::new();
    for (i, g) in s0.ideal.generators().iter().enumerate() {
        let id = format!("jxj.relation{}", i + 1);
        let text = g.to_string();
        out.push(CheckResult::from_result(
            id.clone(),
            parse_poly_with(&f.ring, &text, &bindings).map(|v| zero_check(id, &v)),
        ));
    }
    let e = |t: &str| f.parse_expr(t).expect("bundled expression");
    out.push(zero_check("jxj.m_cubed", &e("M^3")));
    out.push(zero_check("jxj.square", &e("2*(P1 + P2) - M - D")));
    out.push(zero_check("jxj.diagonal", &e("1/2*D^2 - 1/2*(2*(P1 + P2) - M)^2")));
    let basis = [
        "1", "P1", "P2", "M", "P1^2", "P2^2", "M^2", "P1*P2", "P1*M", "P2*M", "M^2*P1", "P1*P2^2", "P1^2*P2",
        "M^2*P1*P2",
    ];
    out.push(rank_check("jxj.rank14", &f, &basis, 14));
    out
}

/// `coh = s + r`, `s ⪯ s + r`, and cancellation of the Hecke factor `1 + T`.
pub fn excision_and_hecke_checks(_: &SuiteOptions) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let s = match hilbert(&build_au().1) {
        Ok(s) => s,
        Err(e) => return vec![CheckResult::from_result("excision.s", Err(e))],
    };
    let strata = match hilbert(&build_s0().1) {
        Ok(h) => h.mul(&literal("1/(1-T)^2")),
        Err(e) => return vec![CheckResult::from_result("excision.r", Err(e))],
    };
    let r = literal("T^2/(1-T^2)").mul(&strata);
    out.push(series_check("excision.r_closed_form", &r, &r_series()));
    let total = s.add(&r);
    out.push(series_check("excision.coh_eq_s_plus_r", &coh_series(), &total));
    out.push(CheckResult::from_result(
        "excision.s_leq_s_plus_r",
        s.leq(&total, LEQ_TERMS)
            .map(|ok| CheckResult::from_bool("excision.s_leq_s_plus_r", ok, || format!("{s} vs {total}"))),
    ));
    let hecke = RationalSeries::polynomial(UniPoly::from_ints(&[1, 1]));
    out.push(CheckResult::from_result(
        "hecke.cancellation",
        total
            .mul(&hecke)
            .div(&hecke)
            .map(|back| series_check("hecke.cancellation", &back, &total)),
    ));
    out
}

fn kx(text: &str) -> KappaExpression {
    KappaExpression::parse(text).expect("bundled kappa expression")
}

fn gen_poly(text: &str) -> Polynomial {
    crate::expr::parse_poly(&kappa::generator_ring(), text).expect("generator polynomial")
}

/// Rewriting rules, their consistency properties, and normal forms.
pub fn kappa_checks(_: &SuiteOptions) -> Vec<CheckResult> {
    let cfg = RewriteConfig::default();
    let rw = |text: &str, d: i64, cfg: &RewriteConfig| rewrite_to_generators(&kx(text), d, cfg);
    let mut out = vec![
        eq_check("kappa.k000", rw("k[0,0,0]", 3, &cfg).poly, gen_poly("2")),
        eq_check("kappa.k020", rw("k[0,2,0]", 3, &cfg).poly, gen_poly("1/2*k010^2")),
        eq_check("kappa.k-102_fixpoint", rw("k[-1,0,2]", 3, &cfg).poly, gen_poly("k-102")),
        eq_check(
            "kappa.k-103",
            rw("k[-1,0,3]", 3, &cfg).poly,
            gen_poly("3/2*k001*k-102 - 3/4*k001^2*k-101"),
        ),
        eq_check("kappa.k-110", rw("k[-1,1,0]", 3, &cfg).poly, gen_poly("3")),
        eq_check(
            "kappa.degrees",
            GENERATORS.iter().map(|s| kappa_degree(s).to_string()).collect::<Vec<_>>().join(","),
            "1,2,1,1,3,2".to_string(),
        ),
    ];

    let fix_ok: Vec<i64> = VB_DEGREES
        .iter()
        .copied()
        .filter(|&d| rewrite_to_generators(&rule_mixed(1, 1, d), d, &cfg).poly != gen_poly("k-111"))
        .collect();
    out.push(CheckResult::from_bool("kappa.k-111_fixpoint", fix_ok.is_empty(), || {
        format!("fails for d in {fix_ok:?}")
    }));

    let mut vanish_bad = Vec::new();
    for threshold in [1, 2] {
        let c = RewriteConfig {
            vanish_threshold: threshold,
            d3_pack: false,
        };
        for i in 2..=4 {
            for m in 0..=3 {
                for n in 0..=3 {
                    let e = KappaExpression::symbol(KappaSymbol::new(i, m, n));
                    let r = rewrite_to_generators(&e, 3, &c);
                    if !r.poly.is_zero() {
                        vanish_bad.push(format!("k[{i},{m},{n}] -> {}", r.poly));
                    }
                }
            }
        }
    }
    out.push(CheckResult::from_bool("kappa.vanishing", vanish_bad.is_empty(), || vanish_bad.join("; ")));

    let fiber = |m: u32, n: u32| rewrite_to_generators(&KappaExpression::symbol(KappaSymbol::new(0, m, n)), 3, &cfg).poly;
    let mut mult_bad = None;
    'grid: for m in 0..=4 {
        for n in 0..=4 {
            for m2 in 0..=4 {
                for n2 in 0..=4 {
                    let lhs = &fiber(m, n) * &fiber(m2, n2);
                    let rhs = fiber(m + m2, n + n2).scale(&crate::rational::int(2));
                    if lhs != rhs {
                        mult_bad = Some(format!("({m},{n})*({m2},{n2}): {}", &lhs - &rhs));
                        break 'grid;
                    }
                }
            }
        }
    }
    out.push(CheckResult::from_bool("kappa.multiplicativity", mult_bad.is_none(), || {
        mult_bad.clone().unwrap_or_default()
    }));

    let mut inhomogeneous = Vec::new();
    for a0 in [-1i64, 0] {
        for a1 in 0..=5u32 {
            for a2 in 0..=5u32 {
                let s = KappaSymbol::new(a0, a1, a2);
                let r = rewrite_to_generators(&KappaExpression::symbol(s), 3, &cfg);
                let ok = match r.poly.weighted_degree() {
                    Degree::Zero => true,
                    Degree::Homogeneous(d) => d as i64 == kappa_degree(&s),
                    Degree::Inhomogeneous => false,
                };
                if !ok {
                    inhomogeneous.push(format!("{s} -> {}", r.poly));
                }
            }
        }
    }
    out.push(CheckResult::from_bool("kappa.homogeneity", inhomogeneous.is_empty(), || {
        inhomogeneous.join("; ")
    }));

    let calc = KappaCalculus::cached(3, cfg);
    let [x1, _, x3] = kappa::x_generators(3);
    for (id, p) in [("kappa.nf_x1_cubed", x1.pow(3)), ("kappa.nf_x3_fifth", x3.pow(5))] {
        out.push(CheckResult::from_result(
            id,
            calc.normal_form(&kappa::to_kappa_expression(&p)).map(|nf| zero_check(id, &nf)),
        ));
    }
    out.push(CheckResult::from_result(
        "kappa.nf_k010",
        calc.normal_form(&kx("k010")).map(|nf| eq_check("kappa.nf_k010", nf, gen_poly("k010"))),
    ));

    let audit = [
        "k[-1,0,3]",
        "k[-1,2,2]*k[0,1,0]",
        "k[-1,1,3] + k[0,3,1]",
        "k[-1,0,4]*k[-1,0,1]",
        "k[-1,1,1]^3 - 2*k[0,2,2]",
        "k[-1,0,5]",
    ];
    let mut audit_bad = Vec::new();
    for text in audit {
        let e = kx(text);
        let r = calc.rewrite(&e);
        match calc.normal_form(&e) {
            Ok(nf) => match is_member(&(&nf - &r.poly), calc.ideal()) {
                Ok(true) => {}
                Ok(false) => audit_bad.push(format!("{text}: nf - rewrite = {}", &nf - &r.poly)),
                Err(err) => audit_bad.push(format!("{text}: {err}")),
            },
            Err(err) => audit_bad.push(format!("{text}: {err}")),
        }
    }
    out.push(CheckResult::from_bool("kappa.membership_audit", audit_bad.is_empty(), || audit_bad.join("; ")));
    out
}

/// Hilbert series agree under grevlex and lex for every encoded ring.
pub fn ordering_checks(_: &SuiteOptions) -> Vec<CheckResult> {
    encoded_rings()
        .into_par_iter()
        .map(|(name, ideal)| {
            let id = format!("ordering.{name}");
            let r = hilbert_series(&ideal, MonomialOrdering::Grevlex).and_then(|a| {
                let b = hilbert_series(&ideal, MonomialOrdering::Lex)?;
                Ok(series_check(id.clone(), &b, &a))
            });
            CheckResult::from_result(id, r)
        })
        .collect()
}

/// Series coefficients agree with brute-force slice dimensions up to
/// [`ORACLE_DEGREE`] for every encoded ring.
pub fn oracle_checks(_: &SuiteOptions) -> Vec<CheckResult> {
    encoded_rings()
        .into_par_iter()
        .map(|(name, ideal)| {
            let id = format!("oracle.{name}");
            let r = hilbert(&ideal).and_then(|h| {
                let coeffs = h.expand(ORACLE_DEGREE as usize)?;
                let dims = slice_dimensions(&ideal, ORACLE_DEGREE)?;
                let got: Vec<String> = dims.iter().map(|d| d.to_string()).collect();
                let want: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
                Ok(eq_check(id.clone(), got.join(","), want.join(",")))
            });
            CheckResult::from_result(id, r)
        })
        .collect()
}

type Group = fn(&SuiteOptions) -> Vec<CheckResult>;

const GROUPS: [Group; 10] = [
    au_checks,
    cohom_checks,
    s0_checks,
    vb_checks,
    exterior_bun_model,
    exterior_jxj_model,
    excision_and_hecke_checks,
    kappa_checks,
    ordering_checks,
    oracle_checks,
];

/// Runs every check, in parallel, sorted by id.
pub fn run_all() -> Vec<CheckResult> {
    run_all_with(&SuiteOptions::default())
}

pub fn run_all_with(opts: &SuiteOptions) -> Vec<CheckResult> {
    let mut results: Vec<CheckResult> = GROUPS.par_iter().flat_map(|g| g(opts)).collect();
    results.sort_by(|a, b| a.id.cmp(&b.id));
    results
}

/// One line per check, then `total=<n> failed=<k>`.
pub fn format_report(results: &[CheckResult]) -> String {
    let mut out = String::new();
    for r in results {
        out.push_str(&r.id);
        out.push(' ');
        out.push_str(&r.status.to_string());
        if !r.detail.is_empty() {
            out.push(' ');
            out.push_str(&r.detail);
        }
        out.push('\n');
    }
    let failed = results.iter().filter(|r| !r.passed()).count();
    out.push_str(&format!("total={} failed={}\n", results.len(), failed));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_specs_parse() {
        for text in [AU_SPEC, COHOM_SPEC, S0_SPEC, VB3_SPEC, BUN_SPEC, JXJ_SPEC] {
            spec(text);
        }
    }

    #[test]
    fn cohom_file_matches_relation_list() {
        let (ring, ideal) = build_cohom();
        let xs = ["p1", "p2", "p3"].map(|n| Polynomial::var_named(&ring, n).unwrap());
        assert_eq!(ideal.generators(), kappa::presentation_relations(&ring, &xs).as_slice());
    }

    #[test]
    fn perturbation_fails_with_witness() {
        let r = exterior_bun_model(&SuiteOptions { perturb: true });
        let bad: Vec<_> = r.iter().filter(|c| !c.passed()).collect();
        assert_eq!(bad.len(), 1);
        assert_eq!(bad[0].id, "bun.relation04");
        assert!(!bad[0].detail.is_empty() && bad[0].detail != "0");
    }

    #[test]
    fn report_format() {
        let rs = vec![
            CheckResult::from_bool("a", true, String::new),
            CheckResult::from_bool("b", false, || "x".into()),
        ];
        assert_eq!(format_report(&rs), "a PASS\nb FAIL x\ntotal=2 failed=1\n");
    }
}
