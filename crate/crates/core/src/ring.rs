//! Weighted-graded rings with even (commuting) and odd (anticommuting)
//! variables.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monomial::Monomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VarSpec {
    pub name: String,
    pub weight: u32,
    pub parity: Parity,
}

impl VarSpec {
    pub fn even(name: impl Into<String>, weight: u32) -> Self {
        VarSpec {
            name: name.into(),
            weight,
            parity: Parity::Even,
        }
    }

    pub fn odd(name: impl Into<String>, weight: u32) -> Self {
        VarSpec {
            name: name.into(),
            weight,
            parity: Parity::Odd,
        }
    }
}

/// Ordered list of variables. The order fixes the canonical form of
/// monomials and therefore the signs of odd products.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RingSpec {
    pub variables: Vec<VarSpec>,
}

impl RingSpec {
    pub fn new(variables: Vec<VarSpec>) -> Self {
        RingSpec { variables }
    }
}

#[derive(Debug)]
struct RingInner {
    spec: RingSpec,
    index: HashMap<String, usize>,
    weights: Vec<u32>,
    odd: Vec<bool>,
}

/// Shared handle to a validated [`RingSpec`]. Cloning is cheap; two handles
/// compare equal when their specs are equal.
#[derive(Clone, Debug)]
pub struct Ring(Arc<RingInner>);

impl Ring {
    pub fn new(spec: RingSpec) -> Result<Self> {
        let mut index = HashMap::with_capacity(spec.variables.len());
        for (i, v) in spec.variables.iter().enumerate() {
            if v.name.is_empty() || v.name.chars().any(char::is_whitespace) {
                return Err(Error::InvalidVariableName(v.name.clone()));
            }
            if v.weight < 1 {
                return Err(Error::InvalidWeight {
                    name: v.name.clone(),
                    weight: v.weight,
                });
            }
            if index.insert(v.name.clone(), i).is_some() {
                return Err(Error::DuplicateVariable(v.name.clone()));
            }
        }
        let weights = spec.variables.iter().map(|v| v.weight).collect();
        let odd = spec
            .variables
            .iter()
            .map(|v| v.parity == Parity::Odd)
            .collect();
        Ok(Ring(Arc::new(RingInner {
            spec,
            index,
            weights,
            odd,
        })))
    }

    pub fn spec(&self) -> &RingSpec {
        &self.0.spec
    }

    pub fn nvars(&self) -> usize {
        self.0.weights.len()
    }

    pub fn weights(&self) -> &[u32] {
        &self.0.weights
    }

    pub fn is_odd(&self, var: usize) -> bool {
        self.0.odd[var]
    }

    /// True when every variable is even.
    pub fn is_commutative(&self) -> bool {
        !self.0.odd.iter().any(|&o| o)
    }

    pub fn var_name(&self, var: usize) -> &str {
        &self.0.spec.variables[var].name
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.index.get(name).copied()
    }

    pub fn same_as(&self, other: &Ring) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.spec == other.0.spec
    }

    pub(crate) fn check_same(&self, other: &Ring) -> Result<()> {
        if self.same_as(other) {
            Ok(())
        } else {
            Err(Error::MixedRings)
        }
    }

    /// Product of two canonical monomials. Returns `None` when an odd
    /// variable would appear squared, otherwise the product together with
    /// `true` if sorting into canonical order needed an odd number of
    /// transpositions of odd variables.
    pub fn mul_monomials(&self, a: &Monomial, b: &Monomial) -> Option<(Monomial, bool)> {
        let odd = &self.0.odd;
        let mut negative = false;
        // number of odd variables of `a` with index strictly greater than i
        let mut odd_after = a
            .exponents()
            .iter()
            .zip(odd)
            .filter(|(&e, &o)| o && e > 0)
            .count();
        for (i, (&ea, &eb)) in a.exponents().iter().zip(b.exponents()).enumerate() {
            if !odd[i] {
                continue;
            }
            if ea > 0 {
                odd_after -= 1;
            }
            if eb > 0 {
                if ea > 0 {
                    return None;
                }
                if odd_after % 2 == 1 {
                    negative = !negative;
                }
            }
        }
        Some((a.mul(b), negative))
    }

    /// Whether a monomial is admissible (odd exponents at most one).
    pub fn is_canonical(&self, m: &Monomial) -> bool {
        m.exponents().len() == self.nvars()
            && m
                .exponents()
                .iter()
                .zip(&self.0.odd)
                .all(|(&e, &o)| !o || e <= 1)
    }

    pub fn degree_of(&self, m: &Monomial) -> u64 {
        m.weighted_degree(self.weights())
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for Ring {}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QQ[")?;
        for (i, v) in self.0.spec.variables.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}:{}", v.name, v.weight)?;
            if v.parity == Parity::Odd {
                write!(f, " odd")?;
            }
        }
        write!(f, "]")
    }
}

/// Validates a ring description and returns a handle to it.
pub fn make_ring(spec: RingSpec) -> Result<Ring> {
    Ring::new(spec)
}
