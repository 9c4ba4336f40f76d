//! Twisted-kappa classes `κ_{a0,a1,a2}` for rank-two bundles over genus-two
//! curves, and their rewriting in terms of the six ring generators
//!
//! ```text
//! κ_{0,1,0}:1  κ_{0,0,1}:2  κ_{-1,0,1}:1  κ_{-1,2,0}:1  κ_{-1,0,2}:3  κ_{-1,1,1}:2
//! ```
//!
//! (weights are Chow degrees, `deg κ_{a0,a1,a2} = a0 + a1 + 2·a2`).
//!
//! Rewriting rules, applied until only generators remain:
//!
//! * `κ_{i,m,n} = 0` for `i >= threshold` (default 1);
//! * `2^{m+n-1} κ_{0,m,n} = κ_{0,1,0}^m κ_{0,0,1}^n`;
//! * `2^{n-1} κ_{-1,0,n} = κ_{0,0,1}^{n-2} (n(n-1) κ_{-1,0,2} - (n²-2n) κ_{-1,0,1} κ_{0,0,1})`;
//! * for `m, n >= 1`:
//!   `κ_{-1,m,n} = 2^{-n} κ_{0,0,1}^n κ_{-1,m,0} + 2^{-m} κ_{0,1,0}^m κ_{-1,0,n}
//!                + mn 2^{2-m-n} κ_{0,1,0}^{m-1} κ_{0,0,1}^{n-1} (κ_{-1,1,1} - (κ_{-1,0,1} κ_{0,1,0} + d κ_{0,0,1})/2)`;
//! * `κ_{-1,0,0} = 0`, `κ_{-1,1,0} = d`.
//!
//! `κ_{-1,m,0}` for `m >= 3` has no general rule here and is carried as an
//! opaque variable of weight `m - 1`, except that the optional degree-three
//! pack supplies `κ_{-1,3,0} = κ_{0,1,0}(6κ_{-1,2,0} - 9κ_{0,1,0})/4`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::expr::{evaluate, parse_expr, parse_poly_with, Algebra, Atom, Dialect};
use crate::groebner::{groebner_basis, GroebnerBasis, Ideal};
use crate::monomial::{Monomial, MonomialOrdering};
use crate::poly::Polynomial;
use crate::rational::{frac, int, pow2, ExactRational};
use crate::ring::{make_ring, Ring, RingSpec, VarSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KappaSymbol {
    pub a0: i64,
    pub a1: u32,
    pub a2: u32,
}

impl KappaSymbol {
    pub const fn new(a0: i64, a1: u32, a2: u32) -> Self {
        KappaSymbol { a0, a1, a2 }
    }

    pub fn try_new(a0: i64, a1: i64, a2: i64) -> Option<Self> {
        (a0 >= -1 && a1 >= 0 && a2 >= 0).then(|| Self::new(a0, a1 as u32, a2 as u32))
    }

    pub fn degree(&self) -> i64 {
        kappa_degree(self)
    }

    /// Short name used as a ring variable, e.g. `k010`, `k-102`. Falls back
    /// to `k[a0,a1,a2]` when an index has more than one digit.
    pub fn name(&self) -> String {
        if (-1..=9).contains(&self.a0) && self.a1 <= 9 && self.a2 <= 9 {
            format!("k{}{}{}", self.a0, self.a1, self.a2)
        } else {
            self.to_string()
        }
    }

    fn from_compact(name: &str) -> Option<Self> {
        let rest = name.strip_prefix('k')?;
        let (neg, digits) = match rest.strip_prefix('-') {
            Some(d) => (true, d),
            None => (false, rest),
        };
        let d: Vec<u32> = digits.chars().map(|c| c.to_digit(10)).collect::<Option<_>>()?;
        if d.len() != 3 {
            return None;
        }
        let a0 = if neg { -(d[0] as i64) } else { d[0] as i64 };
        Self::try_new(a0, d[1] as i64, d[2] as i64)
    }
}

impl fmt::Display for KappaSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k[{},{},{}]", self.a0, self.a1, self.a2)
    }
}

/// Codimension of `κ_{a0,a1,a2}`: `a0 + a1 + 2·a2`.
pub fn kappa_degree(sym: &KappaSymbol) -> i64 {
    sym.a0 + sym.a1 as i64 + 2 * sym.a2 as i64
}

pub const K010: KappaSymbol = KappaSymbol::new(0, 1, 0);
pub const K001: KappaSymbol = KappaSymbol::new(0, 0, 1);
pub const KM101: KappaSymbol = KappaSymbol::new(-1, 0, 1);
pub const KM120: KappaSymbol = KappaSymbol::new(-1, 2, 0);
pub const KM102: KappaSymbol = KappaSymbol::new(-1, 0, 2);
pub const KM111: KappaSymbol = KappaSymbol::new(-1, 1, 1);

/// The six generators, in ring variable order.
pub const GENERATORS: [KappaSymbol; 6] = [K010, K001, KM101, KM120, KM102, KM111];

/// Relations of the presentation, in `x1, x2, x3`.
pub const PRESENTATION_RELATIONS: [&str; 10] = [
    "x1^3",
    "x1^2*x3",
    "x1^2*x2 + x1*x3^2",
    "6*x1*x2*x3 + x3^3",
    "x1*x3^3",
    "x1*x2^2 + x2*x3^2",
    "x2^2*x3",
    "x2*x3^3",
    "x2^3",
    "x3^5",
];

/// Rational combination of products of kappa symbols.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KappaExpression {
    terms: BTreeMap<Vec<KappaSymbol>, ExactRational>,
}

impl KappaExpression {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: ExactRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        KappaExpression { terms }
    }

    pub fn one() -> Self {
        Self::constant(ExactRational::one())
    }

    pub fn symbol(sym: KappaSymbol) -> Self {
        Self::product(ExactRational::one(), vec![sym])
    }

    /// `c · ∏ syms`.
    pub fn product(c: ExactRational, mut syms: Vec<KappaSymbol>) -> Self {
        syms.sort();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(syms, c);
        }
        KappaExpression { terms }
    }

    pub fn terms(&self) -> &BTreeMap<Vec<KappaSymbol>, ExactRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            let e = terms.entry(k.clone()).or_insert_with(ExactRational::zero);
            *e += c;
            if e.is_zero() {
                terms.remove(k);
            }
        }
        KappaExpression { terms }
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        KappaExpression {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-ExactRational::one())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let mut k = ka.clone();
                k.extend_from_slice(kb);
                out = out.add(&Self::product(ca * cb, k));
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Every symbol occurring in the expression.
    pub fn symbols(&self) -> BTreeSet<KappaSymbol> {
        self.terms.keys().flatten().copied().collect()
    }

    /// Weighted degree if every product has the same degree.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut degs = self
            .terms
            .keys()
            .map(|k| k.iter().map(kappa_degree).sum::<i64>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Parses kappa syntax: `k[a0,a1,a2]` atoms or compact names (`k010`,
    /// `k-102`), rationals, `+ - * ^` and parentheses.
    pub fn parse(text: &str) -> Result<Self> {
        evaluate(&parse_expr(text, Dialect::Kappa)?, &KappaAlgebra)
    }
}

impl fmt::Display for KappaExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let factor: Vec<String> = k.iter().map(|s| s.to_string()).collect();
            crate::rational::write_signed_term(&mut out, c, &factor.join("*"), i == 0, true);
        }
        f.write_str(&out)
    }
}

struct KappaAlgebra;

impl Algebra for KappaAlgebra {
    type Elem = KappaExpression;

    fn constant(&self, c: &ExactRational) -> KappaExpression {
        KappaExpression::constant(c.clone())
    }

    fn atom(&self, atom: &Atom, column: usize) -> Result<KappaExpression> {
        let sym = match atom {
            Atom::Kappa([a0, a1, a2]) => KappaSymbol::try_new(*a0, *a1, *a2)
                .ok_or_else(|| Error::parse(column, "kappa indices need a0 >= -1, a1 >= 0, a2 >= 0"))?,
            Atom::Ident(name) => KappaSymbol::from_compact(name).ok_or_else(|| Error::UnknownVariable {
                name: name.clone(),
                column,
            })?,
        };
        Ok(KappaExpression::symbol(sym))
    }

    fn add(&self, a: &KappaExpression, b: &KappaExpression) -> KappaExpression {
        a.add(b)
    }

    fn mul(&self, a: &KappaExpression, b: &KappaExpression) -> KappaExpression {
        a.mul(b)
    }

    fn neg(&self, a: &KappaExpression) -> KappaExpression {
        a.neg()
    }

    fn div(&self, a: &KappaExpression, b: &KappaExpression, column: usize) -> Result<KappaExpression> {
        match b.terms().iter().next() {
            Some((k, c)) if b.terms().len() == 1 && k.is_empty() => Ok(a.scale(&(ExactRational::one() / c))),
            None => Err(Error::parse(column, "division by zero")),
            _ => Err(Error::parse(column, "can only divide by a nonzero constant")),
        }
    }

    fn pow(&self, a: &KappaExpression, n: u32) -> KappaExpression {
        a.pow(n)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RewriteConfig {
    /// `κ_{i,m,n}` vanishes for `i >= vanish_threshold`; 1 or 2.
    pub vanish_threshold: i64,
    /// Enables the degree-three value of `κ_{-1,3,0}`.
    pub d3_pack: bool,
}

impl Default for RewriteConfig {
    fn default() -> Self {
        RewriteConfig {
            vanish_threshold: 1,
            d3_pack: false,
        }
    }
}

fn sym(s: KappaSymbol) -> KappaExpression {
    KappaExpression::symbol(s)
}

fn num(c: ExactRational) -> KappaExpression {
    KappaExpression::constant(c)
}

/// `κ_{0,m,n} = κ_{0,1,0}^m κ_{0,0,1}^n / 2^{m+n-1}`.
pub fn rule_fiber(m: u32, n: u32) -> KappaExpression {
    let mut syms = vec![K010; m as usize];
    syms.extend(std::iter::repeat_n(K001, n as usize));
    KappaExpression::product(int(2) / pow2(m + n), syms)
}

/// `κ_{-1,0,n}` for `n >= 2`.
pub fn rule_c2_tower(n: u32) -> KappaExpression {
    let n64 = n as i64;
    let inner = sym(KM102)
        .scale(&int(n64 * (n64 - 1)))
        .add(&sym(KM101).mul(&sym(K001)).scale(&int(-(n64 * n64 - 2 * n64))));
    sym(K001).pow(n - 2).mul(&inner).scale(&(ExactRational::one() / pow2(n - 1)))
}

/// `κ_{-1,m,n}` for `m, n >= 1`, in terms of `κ_{-1,m,0}`, `κ_{-1,0,n}` and
/// generators.
pub fn rule_mixed(m: u32, n: u32, d: i64) -> KappaExpression {
    let a = sym(K001).pow(n).mul(&sym(KappaSymbol::new(-1, m, 0))).scale(&(ExactRational::one() / pow2(n)));
    let b = sym(K010).pow(m).mul(&sym(KappaSymbol::new(-1, 0, n))).scale(&(ExactRational::one() / pow2(m)));
    let bracket = sym(KM111).add(
        &sym(KM101)
            .mul(&sym(K010))
            .add(&sym(K001).scale(&int(d)))
            .scale(&frac(-1, 2)),
    );
    let c = sym(K010)
        .pow(m - 1)
        .mul(&sym(K001).pow(n - 1))
        .mul(&bracket)
        .scale(&(int((m * n) as i64) * int(4) / pow2(m + n)));
    a.add(&b).add(&c)
}

/// `κ_{-1,3,0} = κ_{0,1,0}(6κ_{-1,2,0} - 9κ_{0,1,0})/4`, valid for `d = 3`.
pub fn rule_d3_kappa130() -> KappaExpression {
    sym(K010)
        .mul(&sym(KM120).scale(&int(6)).add(&sym(K010).scale(&int(-9))))
        .scale(&frac(1, 4))
}

enum Step {
    Terminal,
    Replace(KappaExpression),
}

fn step(s: KappaSymbol, d: i64, config: &RewriteConfig) -> Step {
    if kappa_degree(&s) < 0 || s.a0 >= config.vanish_threshold {
        return Step::Replace(KappaExpression::zero());
    }
    if GENERATORS.contains(&s) {
        return Step::Terminal;
    }
    match (s.a0, s.a1, s.a2) {
        (0, m, n) => Step::Replace(rule_fiber(m, n)),
        (-1, 1, 0) => Step::Replace(num(int(d))),
        (-1, 0, n) if n >= 2 => Step::Replace(rule_c2_tower(n)),
        (-1, m, n) if m >= 1 && n >= 1 => Step::Replace(rule_mixed(m, n, d)),
        (-1, 3, 0) if config.d3_pack => Step::Replace(rule_d3_kappa130()),
        _ => Step::Terminal,
    }
}

/// Result of rewriting: a polynomial in the six generators plus any opaque
/// symbols that no rule reduces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorPolynomial {
    pub poly: Polynomial,
    pub unreduced: Vec<KappaSymbol>,
}

impl fmt::Display for GeneratorPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

/// The commutative ring on the six generators.
pub fn generator_ring() -> Ring {
    ring_with_opaque(&[])
}

fn ring_with_opaque(opaque: &[KappaSymbol]) -> Ring {
    let vars = GENERATORS
        .iter()
        .chain(opaque)
        .map(|s| {
            let w = kappa_degree(s);
            assert!(w >= 1, "opaque symbol {s} has non-positive degree");
            VarSpec::even(s.name(), w as u32)
        })
        .collect();
    make_ring(RingSpec::new(vars)).expect("generator names are distinct")
}

/// `x1, x2, x3` as polynomials in the generators.
pub fn x_generators(d: i64) -> [Polynomial; 3] {
    x_generators_in(&generator_ring(), d)
}

fn x_generators_in(ring: &Ring, d: i64) -> [Polynomial; 3] {
    let v = |s: KappaSymbol| Polynomial::var_named(ring, &s.name()).unwrap();
    let half = frac(1, 2);
    let x1 = (v(K010).scale(&int(d)) - v(KM120)).scale(&half);
    let x2 = (&v(K001) * &v(KM101) - v(KM102)).scale(&half);
    let x3 = (&v(K010) * &v(KM101) + v(K001).scale(&int(d)) - v(KM111).scale(&int(2))).scale(&half);
    [x1, x2, x3]
}

/// Substitutes `x1, x2, x3` into the relation list.
pub fn presentation_relations(ring: &Ring, xs: &[Polynomial; 3]) -> Vec<Polynomial> {
    let bindings: HashMap<String, Polynomial> = ["x1", "x2", "x3"]
        .iter()
        .zip(xs)
        .map(|(n, p)| (n.to_string(), p.clone()))
        .collect();
    PRESENTATION_RELATIONS
        .iter()
        .map(|r| parse_poly_with(ring, r, &bindings).expect("relation text is well formed"))
        .collect()
}

/// The ten-relation ideal in the generator ring for bundle degree `d`.
pub fn presentation_ideal(d: i64) -> Ideal {
    let ring = generator_ring();
    let xs = x_generators_in(&ring, d);
    let rels = presentation_relations(&ring, &xs);
    assert!(rels.iter().all(Polynomial::is_homogeneous));
    Ideal::new(&ring, rels).expect("same ring")
}

/// Rewrites `e` into the generators (and opaque leftovers).
pub fn rewrite_to_generators(e: &KappaExpression, d: i64, config: &RewriteConfig) -> GeneratorPolynomial {
    let mut memo: HashMap<KappaSymbol, KappaExpression> = HashMap::new();
    let mut rewritten = KappaExpression::zero();
    for (syms, c) in e.terms() {
        let mut acc = KappaExpression::constant(c.clone());
        for s in syms {
            acc = acc.mul(&rewrite_symbol(*s, d, config, &mut memo));
        }
        rewritten = rewritten.add(&acc);
    }
    let opaque: Vec<KappaSymbol> = rewritten
        .symbols()
        .into_iter()
        .filter(|s| !GENERATORS.contains(s))
        .collect();
    let ring = ring_with_opaque(&opaque);
    let index = |s: &KappaSymbol| ring.index_of(&s.name()).expect("terminal symbol has a variable");
    let poly = Polynomial::from_terms(
        &ring,
        rewritten.terms().iter().map(|(syms, c)| {
            let mut e = vec![0u32; ring.nvars()];
            for s in syms {
                e[index(s)] += 1;
            }
            (Monomial::new(e), c.clone())
        }),
    );
    GeneratorPolynomial { poly, unreduced: opaque }
}

fn rewrite_symbol(
    s: KappaSymbol,
    d: i64,
    config: &RewriteConfig,
    memo: &mut HashMap<KappaSymbol, KappaExpression>,
) -> KappaExpression {
    if let Some(e) = memo.get(&s) {
        return e.clone();
    }
    let out = match step(s, d, config) {
        Step::Terminal => KappaExpression::symbol(s),
        Step::Replace(e) => {
            let mut acc = KappaExpression::zero();
            for (syms, c) in e.terms() {
                let mut term = KappaExpression::constant(c.clone());
                for t in syms {
                    let r = if *t == s {
                        // a rule mentioning its own symbol leaves it as a generator
                        KappaExpression::symbol(s)
                    } else {
                        rewrite_symbol(*t, d, config, memo)
                    };
                    term = term.mul(&r);
                }
                acc = acc.add(&term);
            }
            acc
        }
    };
    memo.insert(s, out.clone());
    out
}

type CalcCache = HashMap<(i64, RewriteConfig), Arc<KappaCalculus>>;

/// Rewriting plus reduction modulo the presentation ideal for a fixed `d`.
/// The Gröbner basis is computed once per instance.
#[derive(Clone, Debug)]
pub struct KappaCalculus {
    d: i64,
    config: RewriteConfig,
    ideal: Ideal,
    basis: GroebnerBasis,
}

impl KappaCalculus {
    pub fn new(d: i64, config: RewriteConfig) -> Self {
        Self::with_ordering(d, config, MonomialOrdering::default())
    }

    pub fn with_ordering(d: i64, config: RewriteConfig, ordering: MonomialOrdering) -> Self {
        let ideal = presentation_ideal(d);
        let basis = groebner_basis(&ideal, ordering).expect("generator ring is commutative");
        KappaCalculus {
            d,
            config,
            ideal,
            basis,
        }
    }

    /// Shared instance for `(d, config)`; the basis is computed on first use.
    pub fn cached(d: i64, config: RewriteConfig) -> Arc<KappaCalculus> {
        static CACHE: OnceLock<Mutex<CalcCache>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(c) = cache.lock().expect("cache lock").get(&(d, config)) {
            return c.clone();
        }
        let calc = Arc::new(KappaCalculus::new(d, config));
        cache
            .lock()
            .expect("cache lock")
            .entry((d, config))
            .or_insert(calc)
            .clone()
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn config(&self) -> &RewriteConfig {
        &self.config
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn basis(&self) -> &GroebnerBasis {
        &self.basis
    }

    pub fn rewrite(&self, e: &KappaExpression) -> GeneratorPolynomial {
        rewrite_to_generators(e, self.d, &self.config)
    }

    pub fn normal_form(&self, e: &KappaExpression) -> Result<Polynomial> {
        let g = self.rewrite(e);
        if let Some(s) = g.unreduced.first() {
            return Err(Error::UnreducedSymbol(s.to_string()));
        }
        self.basis.normal_form(&g.poly)
    }
}

/// Normal form modulo the presentation ideal for degree `d`.
pub fn kappa_normal_form(e: &KappaExpression, d: i64, config: &RewriteConfig) -> Result<Polynomial> {
    KappaCalculus::cached(d, *config).normal_form(e)
}

/// Expresses a generator-ring polynomial as a kappa expression.
pub fn to_kappa_expression(p: &Polynomial) -> KappaExpression {
    let ring = p.ring();
    let syms: Vec<KappaSymbol> = (0..ring.nvars())
        .map(|i| {
            let name = ring.var_name(i);
            KappaSymbol::from_compact(name)
                .or_else(|| KappaExpression::parse(name).ok().and_then(|e| e.symbols().into_iter().next()))
                .expect("generator ring variable names are kappa symbols")
        })
        .collect();
    let mut out = KappaExpression::zero();
    for (m, c) in p.terms() {
        let mut factors = Vec::new();
        for (i, &e) in m.exponents().iter().enumerate() {
            factors.extend(std::iter::repeat_n(syms[i], e as usize));
        }
        out = out.add(&KappaExpression::product(c.clone(), factors));
    }
    out
}
