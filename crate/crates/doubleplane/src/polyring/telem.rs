//! Normal-form arithmetic in `T = k[x,y][z]/(z^2 - f)`.
//!
//! `T` is a free module of rank 2 over `A = k[x,y]`; an element is stored as
//! `low + high*z` with both parts z-free, so reduction is a substitution of
//! `z^2` by `f` and the representation is unique given `f`.

use super::{Poly, PolyError, Var};
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct TRing {
    f: Poly,
}

impl TRing {
    pub fn new(f: Poly) -> Result<Self, PolyError> {
        if f.uses(Var::Z) {
            return Err(PolyError::VariableNotAllowed(Var::Z));
        }
        Ok(TRing { f })
    }

    pub fn f(&self) -> &Poly {
        &self.f
    }

    /// Rewrite an arbitrary polynomial to z-degree <= 1.
    pub fn reduce(&self, p: &Poly) -> TElem {
        let mut low = Poly::zero();
        let mut high = Poly::zero();
        let deg = p.degree(Var::Z).unwrap_or(0);
        for k in 0..=deg {
            let c = p.coeff_of(Var::Z, k);
            if c.is_zero() {
                continue;
            }
            let fk = self.f.pow(k / 2);
            if k % 2 == 0 {
                low = low.add(&c.mul(&fk));
            } else {
                high = high.add(&c.mul(&fk));
            }
        }
        TElem { low, high }
    }

    pub fn elem(&self, low: Poly, high: Poly) -> Result<TElem, PolyError> {
        if low.uses(Var::Z) || high.uses(Var::Z) {
            return Err(PolyError::VariableNotAllowed(Var::Z));
        }
        Ok(TElem { low, high })
    }

    pub fn mul(&self, a: &TElem, b: &TElem) -> TElem {
        TElem {
            low: a.low.mul(&b.low).add(&a.high.mul(&b.high).mul(&self.f)),
            high: a.low.mul(&b.high).add(&a.high.mul(&b.low)),
        }
    }

    /// The covering involution z -> -z.
    pub fn sigma(&self, a: &TElem) -> TElem {
        TElem {
            low: a.low.clone(),
            high: a.high.neg(),
        }
    }
}

/// Element of `T` in normal form `low + high*z`.
#[derive(Clone, PartialEq, Eq)]
pub struct TElem {
    low: Poly,
    high: Poly,
}

impl TElem {
    pub fn zero() -> Self {
        TElem {
            low: Poly::zero(),
            high: Poly::zero(),
        }
    }

    pub fn one() -> Self {
        TElem {
            low: Poly::one(),
            high: Poly::zero(),
        }
    }

    pub fn z() -> Self {
        TElem {
            low: Poly::zero(),
            high: Poly::one(),
        }
    }

    /// A z-free element of T.
    pub fn scalar(p: Poly) -> Self {
        debug_assert!(!p.uses(Var::Z));
        TElem {
            low: p,
            high: Poly::zero(),
        }
    }

    pub fn low(&self) -> &Poly {
        &self.low
    }

    pub fn high(&self) -> &Poly {
        &self.high
    }

    pub fn is_zero(&self) -> bool {
        self.low.is_zero() && self.high.is_zero()
    }

    pub fn add(&self, other: &TElem) -> TElem {
        TElem {
            low: self.low.add(&other.low),
            high: self.high.add(&other.high),
        }
    }

    pub fn sub(&self, other: &TElem) -> TElem {
        TElem {
            low: self.low.sub(&other.low),
            high: self.high.sub(&other.high),
        }
    }

    pub fn neg(&self) -> TElem {
        TElem {
            low: self.low.neg(),
            high: self.high.neg(),
        }
    }

    /// Multiplication by a z-free polynomial (the A-module structure).
    pub fn scale_poly(&self, p: &Poly) -> TElem {
        TElem {
            low: self.low.mul(p),
            high: self.high.mul(p),
        }
    }

    pub fn to_poly(&self) -> Poly {
        self.low.add(&self.high.mul(&Poly::var(Var::Z)))
    }
}

impl fmt::Display for TElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

impl fmt::Debug for TElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::super::{parse_poly, rat_int, Monomial};
    use super::*;
    use proptest::prelude::*;

    fn ring(fs: &str) -> TRing {
        TRing::new(parse_poly(fs).unwrap()).unwrap()
    }

    #[test]
    fn defining_relation() {
        let t = ring("x*y*(x-y)");
        assert_eq!(t.reduce(&parse_poly("z^2").unwrap()), TElem::scalar(t.f().clone()));
        assert_eq!(t.mul(&TElem::z(), &TElem::z()), TElem::scalar(t.f().clone()));
    }

    #[test]
    fn z_minus_y_times_z_plus_y() {
        // with f = y^2 - p the product (z-y)(z+y) reduces to -p, since
        // z^2 - y^2 = -p; the sign is part of the record, see the
        // multiplication-table verification in crossedprod.
        let p = parse_poly("(x-1)^2*(x-2)^4").unwrap();
        let f = parse_poly("y^2").unwrap().sub(&p);
        let t = TRing::new(f).unwrap();
        let zmy = t.reduce(&parse_poly("z-y").unwrap());
        let zpy = t.reduce(&parse_poly("z+y").unwrap());
        assert_eq!(t.mul(&zmy, &zpy), TElem::scalar(p.neg()));
    }

    #[test]
    fn rejects_z_in_f() {
        assert!(TRing::new(parse_poly("z^2").unwrap()).is_err());
    }

    #[test]
    fn reduction_is_idempotent() {
        let t = ring("x^3*y");
        let raw = parse_poly("z^5 + z^2*x - z*y + 7").unwrap();
        let once = t.reduce(&raw);
        let twice = t.reduce(&once.to_poly());
        assert_eq!(once, twice);
    }

    fn arb_elem() -> impl Strategy<Value = TElem> {
        proptest::collection::vec((0u32..3, 0u32..3, -3i64..4), 0..4).prop_flat_map(|lo| {
            proptest::collection::vec((0u32..3, 0u32..3, -3i64..4), 0..4).prop_map(move |hi| {
                let build = |spec: &[(u32, u32, i64)]| {
                    let mut p = Poly::zero();
                    for &(x, y, c) in spec {
                        p = p.add(&Poly::monomial(Monomial { x, y, z: 0 }, rat_int(c)));
                    }
                    p
                };
                TElem {
                    low: build(&lo),
                    high: build(&hi),
                }
            })
        })
    }

    proptest! {
        #[test]
        fn mul_commutative_associative(a in arb_elem(), b in arb_elem(), c in arb_elem()) {
            let t = ring("x*y*(x-y)*(x+2*y)");
            prop_assert_eq!(t.mul(&a, &b), t.mul(&b, &a));
            prop_assert_eq!(t.mul(&t.mul(&a, &b), &c), t.mul(&a, &t.mul(&b, &c)));
        }

        #[test]
        fn sigma_is_ring_involution(a in arb_elem(), b in arb_elem()) {
            let t = ring("x*y*(x-y)*(x+2*y)");
            prop_assert_eq!(t.sigma(&t.sigma(&a)), a.clone());
            prop_assert_eq!(t.sigma(&t.mul(&a, &b)), t.mul(&t.sigma(&a), &t.sigma(&b)));
        }
    }
}
