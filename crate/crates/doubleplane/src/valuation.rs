//! Prime divisors, divisor maps on fixed generating sets of function-field
//! elements, and the tame-symbol ramification computation.
//!
//! Valuations are supplied by scenario-constructed tables; `table_consistency`
//! plus polynomial-level spot checks validate them against the defining
//! relations of each ring.

use crate::abgroup::{smith_normal_form, IntMatrix};
use crate::polyring::Poly;
use num::{BigInt, Integer, One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ValuationError {
    #[error("unknown element name {0:?}")]
    UnknownElement(String),
    #[error("unknown prime divisor {0:?}")]
    UnknownPrime(String),
    #[error("duplicate name {0:?} in table")]
    DuplicateName(String),
    #[error("the class of {0} has no finite order in the residue table")]
    NoFiniteOrder(String),
}

/// A named height-one prime with its ideal generators (kept for reports).
#[derive(Clone, Debug, Serialize)]
pub struct PrimeDivisor {
    pub name: String,
    #[serde(serialize_with = "ser_polys")]
    pub generators: Vec<Poly>,
}

fn ser_polys<S: Serializer>(polys: &[Poly], s: S) -> Result<S::Ok, S::Error> {
    let strs: Vec<String> = polys.iter().map(|p| p.to_string()).collect();
    strs.serialize(s)
}

impl PrimeDivisor {
    pub fn new(name: &str, generators: Vec<Poly>) -> Self {
        PrimeDivisor {
            name: name.to_string(),
            generators,
        }
    }
}

/// Formal product of named ring elements; represents a function-field
/// element up to units.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MonomialElem {
    factors: BTreeMap<String, i64>,
}

impl MonomialElem {
    pub fn one() -> Self {
        MonomialElem::default()
    }

    pub fn gen(name: &str) -> Self {
        MonomialElem::one().times(name, 1)
    }

    pub fn times(mut self, name: &str, exp: i64) -> Self {
        if exp != 0 {
            let e = self.factors.entry(name.to_string()).or_insert(0);
            *e += exp;
            if *e == 0 {
                self.factors.remove(name);
            }
        }
        self
    }

    pub fn mul(&self, other: &MonomialElem) -> MonomialElem {
        let mut out = self.clone();
        for (name, exp) in &other.factors {
            out = out.times(name, *exp);
        }
        out
    }

    pub fn inverse(&self) -> MonomialElem {
        MonomialElem {
            factors: self.factors.iter().map(|(n, e)| (n.clone(), -e)).collect(),
        }
    }

    pub fn pow(&self, k: i64) -> MonomialElem {
        MonomialElem {
            factors: self
                .factors
                .iter()
                .filter_map(|(n, e)| {
                    let v = e * k;
                    (v != 0).then(|| (n.clone(), v))
                })
                .collect(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> impl Iterator<Item = (&String, &i64)> {
        self.factors.iter()
    }

    /// gcd of the exponents; zero for the empty product.
    pub fn content(&self) -> u64 {
        self.factors
            .values()
            .fold(0u64, |acc, e| acc.gcd(&e.unsigned_abs()))
    }
}

impl fmt::Display for MonomialElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(n, e)| {
                if *e == 1 {
                    format!("({n})")
                } else {
                    format!("({n})^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Named prime divisors plus the divisor map on a fixed generating set of
/// ring elements: each named element gets an integer vector over the primes.
#[derive(Clone, Debug, Default)]
pub struct DivisorTable {
    primes: Vec<PrimeDivisor>,
    elements: Vec<(String, Vec<BigInt>)>,
}

impl DivisorTable {
    pub fn new() -> Self {
        DivisorTable::default()
    }

    pub fn add_prime(&mut self, prime: PrimeDivisor) -> Result<(), ValuationError> {
        if self.primes.iter().any(|p| p.name == prime.name) {
            return Err(ValuationError::DuplicateName(prime.name));
        }
        self.primes.push(prime);
        for (_, vec) in &mut self.elements {
            vec.push(BigInt::zero());
        }
        Ok(())
    }

    /// Register `Div(name) = sum coeffs[i] * prime_i`, coefficients listed
    /// in the order the primes were added.
    pub fn add_element(&mut self, name: &str, coeffs: &[i64]) -> Result<(), ValuationError> {
        if self.elements.iter().any(|(n, _)| n == name) {
            return Err(ValuationError::DuplicateName(name.to_string()));
        }
        assert_eq!(coeffs.len(), self.primes.len(), "divisor vector length");
        self.elements.push((
            name.to_string(),
            coeffs.iter().map(|&c| BigInt::from(c)).collect(),
        ));
        Ok(())
    }

    pub fn primes(&self) -> &[PrimeDivisor] {
        &self.primes
    }

    pub fn elements(&self) -> impl Iterator<Item = (&String, &Vec<BigInt>)> {
        self.elements.iter().map(|(n, v)| (n, v))
    }

    pub fn prime_index(&self, name: &str) -> Result<usize, ValuationError> {
        self.primes
            .iter()
            .position(|p| p.name == name)
            .ok_or_else(|| ValuationError::UnknownPrime(name.to_string()))
    }

    fn element_divisor(&self, name: &str) -> Result<&[BigInt], ValuationError> {
        self.elements
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v.as_slice())
            .ok_or_else(|| ValuationError::UnknownElement(name.to_string()))
    }

    /// Total divisor of a formal product, by linearity.
    pub fn divisor_of(&self, m: &MonomialElem) -> Result<Vec<BigInt>, ValuationError> {
        let mut out = vec![BigInt::zero(); self.primes.len()];
        for (name, exp) in m.factors() {
            let div = self.element_divisor(name)?;
            for (o, d) in out.iter_mut().zip(div) {
                *o += d * BigInt::from(*exp);
            }
        }
        Ok(out)
    }

    /// Valuation of a formal product at one named prime.
    pub fn valuation(&self, m: &MonomialElem, prime: &str) -> Result<BigInt, ValuationError> {
        let idx = self.prime_index(prime)?;
        Ok(self.divisor_of(m)?[idx].clone())
    }

    /// The lattice of known principal divisors: the span of the element rows.
    fn principal_lattice(&self) -> IntMatrix {
        let cols: Vec<Vec<BigInt>> = self.elements.iter().map(|(_, v)| v.clone()).collect();
        IntMatrix::from_columns(self.primes.len(), &cols)
    }

    /// Smallest `t >= 1` with `t * w` inside `d * principal_lattice`, i.e.
    /// the order of the class of a divisor `w` in the divisor class group
    /// taken modulo `d`-th powers of the known principal divisors.
    pub fn class_order_mod(&self, w: &[BigInt], d: u64) -> Option<BigInt> {
        let lat = self.principal_lattice();
        let snf = smith_normal_form(&lat);
        let uw = snf.u.mul_vec(w);
        let d = BigInt::from(d);
        let rank = snf.rank();
        let mut t = BigInt::one();
        for (i, c) in uw.iter().enumerate() {
            if i < rank {
                // need t*c ≡ 0 mod d*s_i
                let modulus = &d * snf.s.get(i, i);
                let ti = &modulus / modulus.gcd(c);
                t = t.lcm(&ti);
            } else if !c.is_zero() {
                return None;
            }
        }
        Some(t)
    }

    pub fn consistency(&self, relations: &[(String, MonomialElem, MonomialElem)]) -> ConsistencyReport {
        let mut checks = Vec::new();
        for (label, lhs, rhs) in relations {
            let entry = match (self.divisor_of(lhs), self.divisor_of(rhs)) {
                (Ok(l), Ok(r)) => ConsistencyEntry {
                    relation: label.clone(),
                    pass: l == r,
                    lhs: l.iter().map(BigInt::to_string).collect(),
                    rhs: r.iter().map(BigInt::to_string).collect(),
                },
                (l, r) => ConsistencyEntry {
                    relation: label.clone(),
                    pass: false,
                    lhs: vec![format!("{l:?}")],
                    rhs: vec![format!("{r:?}")],
                },
            };
            checks.push(entry);
        }
        ConsistencyReport { checks }
    }
}

impl Serialize for DivisorTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("DivisorTable", 2)?;
        st.serialize_field("primes", &self.primes)?;
        let elements: Vec<(String, Vec<String>)> = self
            .elements
            .iter()
            .map(|(n, v)| (n.clone(), v.iter().map(BigInt::to_string).collect()))
            .collect();
        st.serialize_field("divisors", &elements)?;
        st.end()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConsistencyEntry {
    pub relation: String,
    pub pass: bool,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConsistencyReport {
    pub checks: Vec<ConsistencyEntry>,
}

impl ConsistencyReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Result of the tame-symbol computation at a prime divisor.
#[derive(Clone, Debug, Serialize)]
pub struct TameSymbol {
    /// alpha^{nu(beta)} * beta^{-nu(alpha)} as a formal product
    #[serde(serialize_with = "ser_monomial")]
    pub residue: MonomialElem,
    /// divisor of the residue on the residue curve (the r-map data)
    pub residue_divisor: Vec<String>,
    /// order of the induced degree-d cyclic extension class
    pub order: u64,
}

fn ser_monomial<S: Serializer>(m: &MonomialElem, s: S) -> Result<S::Ok, S::Error> {
    m.to_string().serialize(s)
}

/// The tame symbol of `(alpha, beta)_d` at the prime `c`.
///
/// The residue is the formal element `alpha^{nu_c(beta)} beta^{-nu_c(alpha)}`.
/// Its class order is measured on the residue curve: `residue_table` maps the
/// named elements to their divisors there, and the order is the least `t`
/// such that `t * Div(residue)` lands in `d` times the lattice of known
/// principal divisors of the residue curve.
pub fn tame_symbol(
    table: &DivisorTable,
    alpha: &MonomialElem,
    beta: &MonomialElem,
    c: &str,
    d: u64,
    residue_table: &DivisorTable,
) -> Result<TameSymbol, ValuationError> {
    let nu_alpha = table.valuation(alpha, c)?;
    let nu_beta = table.valuation(beta, c)?;
    let na: i64 = (&nu_alpha).try_into().expect("valuation fits in i64");
    let nb: i64 = (&nu_beta).try_into().expect("valuation fits in i64");
    let residue = alpha.pow(nb).mul(&beta.pow(-na));
    let w = residue_table.divisor_of(&residue)?;
    let order_big = residue_table
        .class_order_mod(&w, d)
        .ok_or_else(|| ValuationError::NoFiniteOrder(residue.to_string()))?;
    let order: u64 = (&order_big).try_into().expect("order fits in u64");
    Ok(TameSymbol {
        residue,
        residue_divisor: w.iter().map(BigInt::to_string).collect(),
        order,
    })
}
