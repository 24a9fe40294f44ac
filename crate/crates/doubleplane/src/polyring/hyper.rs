//! Branch data of the double plane `z^2 = y^2 - p(x)`: the factorization
//! `p = l_1^{e_1} ... l_v^{e_v}` into distinct rational linear factors.

use super::{rational_roots, Poly, PolyError, Rat, Var};
use num::Zero;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HyperellipticSpec {
    roots: Vec<Rat>,
    mults: Vec<u64>,
}

impl HyperellipticSpec {
    pub fn new(roots: Vec<Rat>, mults: Vec<u64>) -> Result<Self, PolyError> {
        assert_eq!(roots.len(), mults.len(), "roots and multiplicities must pair up");
        if roots.is_empty() || mults.contains(&0) {
            return Err(PolyError::DegreeTooSmall(2));
        }
        let mut sorted = roots.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != roots.len() {
            return Err(PolyError::RepeatedRoots);
        }
        let spec = HyperellipticSpec { roots, mults };
        if spec.degree() < 2 {
            return Err(PolyError::DegreeTooSmall(2));
        }
        Ok(spec)
    }

    /// Factor a monic univariate `p(x)` over Q.
    pub fn from_poly(p: &Poly) -> Result<Self, PolyError> {
        if p.uses(Var::Y) || p.uses(Var::Z) {
            return Err(PolyError::NotUnivariate);
        }
        let d = p.degree(Var::X).unwrap_or(0);
        if d < 2 {
            return Err(PolyError::DegreeTooSmall(2));
        }
        if !p.coeff_of(Var::X, d).constant_coeff().eq(&Rat::from_integer(1.into())) {
            return Err(PolyError::NotMonic(Var::X));
        }
        let roots = rational_roots(p, Var::X)?;
        let total: u32 = roots.iter().map(|(_, m)| m).sum();
        if total != d {
            return Err(PolyError::NonRationalRoots(p.to_string()));
        }
        let (roots, mults) = roots
            .into_iter()
            .map(|(r, m)| (r, m as u64))
            .unzip();
        HyperellipticSpec::new(roots, mults)
    }

    pub fn v(&self) -> usize {
        self.roots.len()
    }

    pub fn roots(&self) -> &[Rat] {
        &self.roots
    }

    pub fn mults(&self) -> &[u64] {
        &self.mults
    }

    /// D = gcd of the multiplicities.
    pub fn gcd_mult(&self) -> u64 {
        self.mults.iter().fold(0u64, |acc, &e| num::integer::gcd(acc, e))
    }

    pub fn degree(&self) -> u64 {
        self.mults.iter().sum()
    }

    pub fn is_squarefree(&self) -> bool {
        self.mults.iter().all(|&e| e == 1)
    }

    /// l_i = x - lambda_i
    pub fn ell(&self, i: usize) -> Poly {
        Poly::linear_x(&self.roots[i])
    }

    pub fn p(&self) -> Poly {
        let mut out = Poly::one();
        for (i, &e) in self.mults.iter().enumerate() {
            out = out.mul(&self.ell(i).pow(e as u32));
        }
        out
    }

    /// The exact square root of p, available when D is even.
    pub fn q(&self) -> Option<Poly> {
        if !self.gcd_mult().is_multiple_of(2) {
            return None;
        }
        let mut out = Poly::one();
        for (i, &e) in self.mults.iter().enumerate() {
            out = out.mul(&self.ell(i).pow((e / 2) as u32));
        }
        Some(out)
    }

    /// f = y^2 - p(x)
    pub fn f(&self) -> Poly {
        Poly::var(Var::Y).pow(2).sub(&self.p())
    }

    /// Same multiplicities, all roots translated by `delta`.
    pub fn shifted(&self, delta: &Rat) -> Self {
        HyperellipticSpec {
            roots: self.roots.iter().map(|r| r + delta).collect(),
            mults: self.mults.clone(),
        }
    }

    /// Same multiset of multiplicities attached to the reversed root list.
    pub fn permuted(&self) -> Self {
        let mut roots = self.roots.clone();
        let mut mults = self.mults.clone();
        roots.reverse();
        mults.reverse();
        HyperellipticSpec { roots, mults }
    }
}

impl Serialize for HyperellipticSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("HyperellipticSpec", 5)?;
        let roots: Vec<String> = self
            .roots
            .iter()
            .map(|r| {
                if r.denom().is_zero() {
                    unreachable!()
                } else if r.denom() == &num::BigInt::from(1) {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            })
            .collect();
        st.serialize_field("roots", &roots)?;
        st.serialize_field("multiplicities", &self.mults)?;
        st.serialize_field("v", &self.v())?;
        st.serialize_field("d_gcd", &self.gcd_mult())?;
        st.serialize_field("degree", &self.degree())?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::super::{parse_poly, rat_int};
    use super::*;

    #[test]
    fn factors_monic_split_poly() {
        let p = parse_poly("(x-1)^2*(x-2)^4").unwrap();
        let h = HyperellipticSpec::from_poly(&p).unwrap();
        assert_eq!(h.v(), 2);
        assert_eq!(h.mults(), &[2, 4]);
        assert_eq!(h.gcd_mult(), 2);
        assert_eq!(h.degree(), 6);
        assert_eq!(h.p(), p);
        let q = h.q().unwrap();
        assert_eq!(q.mul(&q), p);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(HyperellipticSpec::from_poly(&parse_poly("2*x^2").unwrap()).is_err());
        assert!(HyperellipticSpec::from_poly(&parse_poly("x^2+1").unwrap()).is_err());
        assert!(HyperellipticSpec::from_poly(&parse_poly("x").unwrap()).is_err());
        assert!(HyperellipticSpec::new(vec![rat_int(1), rat_int(1)], vec![1, 1]).is_err());
    }

    #[test]
    fn gcd_of_coprime_mults_is_one() {
        let h = HyperellipticSpec::new(
            vec![rat_int(0), rat_int(1), rat_int(2)],
            vec![6, 10, 15],
        )
        .unwrap();
        assert_eq!(h.gcd_mult(), 1);
        assert!(h.q().is_none());
    }
}
