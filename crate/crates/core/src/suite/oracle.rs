//! Brute-force Hilbert function: `dim (R/I)_k` by linear algebra on the
//! degree-`k` slice, independent of Gröbner bases.

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::linalg::EchelonBasis;
use crate::monomial::{monomials_of_degree, Monomial};
use crate::poly::Degree;

/// `dim (R/I)_k` for `k = 0..=max_degree`.
pub fn slice_dimensions(ideal: &Ideal, max_degree: u64) -> Result<Vec<usize>> {
    let ring = ideal.ring();
    if !ring.is_commutative() {
        return Err(Error::UnsupportedRing);
    }
    let weights = ring.weights();
    let unbounded = vec![false; weights.len()];
    let gens: Vec<(u64, _)> = ideal
        .generators()
        .iter()
        .filter_map(|g| match g.weighted_degree() {
            Degree::Homogeneous(d) => Some(Ok((d, g))),
            Degree::Zero => None,
            Degree::Inhomogeneous => Some(Err(Error::Inhomogeneous(g.to_string()))),
        })
        .collect::<Result<_>>()?;
    (0..=max_degree)
        .map(|k| {
            let total = monomials_of_degree(weights, &unbounded, k).len();
            let mut span = EchelonBasis::new();
            for (d, g) in &gens {
                if *d > k {
                    continue;
                }
                for m in monomials_of_degree(weights, &unbounded, k - d) {
                    let row = g
                        .terms()
                        .iter()
                        .map(|(gm, c)| (gm.mul(&m), c.clone()))
                        .collect::<std::collections::BTreeMap<Monomial, _>>();
                    span.insert(&row);
                    if span.rank() == total {
                        break;
                    }
                }
            }
            Ok(total - span.rank())
        })
        .collect()
}
