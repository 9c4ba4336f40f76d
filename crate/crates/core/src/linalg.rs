//! Exact rank of a family of polynomials over the rationals.
//!
//! Each polynomial is a coefficient vector in the monomial basis. Rows are
//! kept in echelon form keyed by their largest monomial; a new row is
//! reduced against the pivots until its largest monomial is not a pivot
//! (independent) or it vanishes (dependent).

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::Result;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::rational::ExactRational;

type Row = BTreeMap<Monomial, ExactRational>;

/// Incremental echelon basis of a subspace spanned by polynomials.
#[derive(Debug, Default, Clone)]
pub struct EchelonBasis {
    rows: BTreeMap<Monomial, Row>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds a vector; returns whether it increased the rank.
    pub fn insert(&mut self, terms: &Row) -> bool {
        let mut v = terms.clone();
        while let Some((lead, c)) = v.last_key_value() {
            let Some(row) = self.rows.get(lead) else {
                let c = c.clone();
                let lead = lead.clone();
                let inv = ExactRational::one() / c;
                for val in v.values_mut() {
                    *val *= &inv;
                }
                self.rows.insert(lead, v);
                return true;
            };
            let c = c.clone();
            for (m, r) in row {
                let entry = v.entry(m.clone()).or_insert_with(ExactRational::zero);
                *entry -= &c * r;
                if entry.is_zero() {
                    v.remove(m);
                }
            }
        }
        false
    }
}

/// Dimension of the rational span of `ps`.
pub fn rank_of_span(ps: &[Polynomial]) -> Result<usize> {
    if let Some(first) = ps.first() {
        for p in &ps[1..] {
            first.ring().check_same(p.ring())?;
        }
    }
    let mut basis = EchelonBasis::new();
    for p in ps {
        basis.insert(p.terms());
    }
    Ok(basis.rank())
}
