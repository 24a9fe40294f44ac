//! Exact polynomial arithmetic over the rationals in the variables x, y, z,
//! with resultants, root multiplicities, and normal-form arithmetic in the
//! coordinate ring `T = k[x,y,z]/(z^2 - f)`.
//!
//! Monomial order is lexicographic with z > y > x, fixed crate-wide.

mod hyper;
mod parse;
mod telem;

pub use hyper::HyperellipticSpec;
pub use parse::{parse_poly, PolyParseError};
pub use telem::{TElem, TRing};

use num::{BigInt, BigRational, Integer, One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("operand is not univariate in a single variable")]
    NotUnivariate,
    #[error("{0} does not divide {1} exactly")]
    NotDivisible(String, String),
    #[error("both inputs are constant in {0}")]
    BothConstant(Var),
    #[error("variable {0} is not allowed here")]
    VariableNotAllowed(Var),
    #[error("polynomial is not homogeneous of degree {0} in x, y")]
    NotHomogeneous(u32),
    #[error("polynomial is not monic in {0}")]
    NotMonic(Var),
    #[error("no rational root found for nonconstant factor {0}")]
    NonRationalRoots(String),
    #[error("roots must be pairwise distinct")]
    RepeatedRoots,
    #[error("{0}")]
    Parse(#[from] PolyParseError),
    #[error("degree must be at least {0}")]
    DegreeTooSmall(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Y,
    Z,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X => write!(f, "x"),
            Var::Y => write!(f, "y"),
            Var::Z => write!(f, "z"),
        }
    }
}

/// Exponent triple; the ordering is lex with z > y > x.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
    pub z: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, y: 0, z: 0 };

    fn exponent(&self, v: Var) -> u32 {
        match v {
            Var::X => self.x,
            Var::Y => self.y,
            Var::Z => self.z,
        }
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            x: self.x + other.x,
            y: self.y + other.y,
            z: self.z + other.z,
        }
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.x <= other.x && self.y <= other.y && self.z <= other.z
    }

    fn div(&self, other: &Monomial) -> Monomial {
        Monomial {
            x: self.x - other.x,
            y: self.y - other.y,
            z: self.z - other.z,
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.z
            .cmp(&other.z)
            .then(self.y.cmp(&other.y))
            .then(self.x.cmp(&other.x))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in Q[x, y, z]; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::ONE, c);
        }
        Poly { terms }
    }

    pub fn int(n: i64) -> Self {
        Poly::constant(rat_int(n))
    }

    pub fn var(v: Var) -> Self {
        Poly::monomial(
            match v {
                Var::X => Monomial { x: 1, y: 0, z: 0 },
                Var::Y => Monomial { x: 0, y: 1, z: 0 },
                Var::Z => Monomial { x: 0, y: 0, z: 1 },
            },
            Rat::one(),
        )
    }

    pub fn monomial(m: Monomial, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    /// x - c
    pub fn linear_x(c: &Rat) -> Self {
        Poly::var(Var::X).sub(&Poly::constant(c.clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| *m == Monomial::ONE)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn constant_coeff(&self) -> Rat {
        self.terms.get(&Monomial::ONE).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = out.entry(*m).or_insert_with(Rat::zero);
            *entry += c;
            if entry.is_zero() {
                out.remove(m);
            }
        }
        Poly { terms: out }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out: BTreeMap<Monomial, Rat> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                let entry = out.entry(m).or_insert_with(Rat::zero);
                *entry += c1 * c2;
                if entry.is_zero() {
                    out.remove(&m);
                }
            }
        }
        Poly { terms: out }
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Degree in one variable; `None` for the zero polynomial.
    pub fn degree(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.exponent(v)).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.x + m.y + m.z).max()
    }

    pub fn uses(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exponent(v) > 0)
    }

    /// The coefficient of `v^k`, a polynomial in the remaining variables.
    pub fn coeff_of(&self, v: Var, k: u32) -> Poly {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exponent(v) == k)
            .map(|(m, c)| {
                let mut m2 = *m;
                match v {
                    Var::X => m2.x = 0,
                    Var::Y => m2.y = 0,
                    Var::Z => m2.z = 0,
                }
                (m2, c.clone())
            })
            .collect();
        Poly { terms }
    }

    pub fn leading(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn eval(&self, x: &Rat, y: &Rat, z: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for _ in 0..m.x {
                t *= x;
            }
            for _ in 0..m.y {
                t *= y;
            }
            for _ in 0..m.z {
                t *= z;
            }
            acc += t;
        }
        acc
    }

    pub fn eval_var(&self, v: Var, value: &Rat) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            let mut m2 = *m;
            match v {
                Var::X => m2.x = 0,
                Var::Y => m2.y = 0,
                Var::Z => m2.z = 0,
            }
            let mut coeff = c.clone();
            for _ in 0..e {
                coeff *= value;
            }
            out = out.add(&Poly::monomial(m2, coeff));
        }
        out
    }

    pub fn derivative(&self, v: Var) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e == 0 {
                continue;
            }
            let mut m2 = *m;
            match v {
                Var::X => m2.x -= 1,
                Var::Y => m2.y -= 1,
                Var::Z => m2.z -= 1,
            }
            out = out.add(&Poly::monomial(m2, c * rat_int(e as i64)));
        }
        out
    }

    /// The unique variable this polynomial uses, if it is univariate.
    /// Constants report `None` inside `Ok`.
    pub fn sole_variable(&self) -> Result<Option<Var>, PolyError> {
        let mut found = None;
        for v in [Var::X, Var::Y, Var::Z] {
            if self.uses(v) {
                if found.is_some() {
                    return Err(PolyError::NotUnivariate);
                }
                found = Some(v);
            }
        }
        Ok(found)
    }

    /// Ascending coefficient list with respect to `v`; coefficients may use
    /// the other variables.
    pub fn coeff_vec(&self, v: Var) -> Vec<Poly> {
        let d = match self.degree(v) {
            None => return Vec::new(),
            Some(d) => d,
        };
        (0..=d).map(|k| self.coeff_of(v, k)).collect()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        parse::write_poly(self, f)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Quotient and remainder of univariate polynomials (shared variable).
pub fn divrem(p: &Poly, q: &Poly) -> Result<(Poly, Poly), PolyError> {
    if q.is_zero() {
        return Err(PolyError::DivisionByZero);
    }
    let vp = p.sole_variable()?;
    let vq = q.sole_variable()?;
    let var = match (vp, vq) {
        (Some(a), Some(b)) if a != b => return Err(PolyError::NotUnivariate),
        (Some(a), _) => a,
        (None, Some(b)) => b,
        (None, None) => Var::X,
    };
    let dq = q.degree(var).unwrap_or(0);
    let lead_q = q.coeff_of(var, dq).constant_coeff();
    let mut rem = p.clone();
    let mut quot = Poly::zero();
    while !rem.is_zero() {
        let dr = rem.degree(var).unwrap_or(0);
        if dr < dq && !(dq == 0) {
            break;
        }
        if dq == 0 {
            // constant divisor: divide everything
            quot = quot.add(&rem.scale(&(Rat::one() / &lead_q)));
            rem = Poly::zero();
            break;
        }
        let c = rem.coeff_of(var, dr).constant_coeff() / &lead_q;
        let mut m = Monomial::ONE;
        match var {
            Var::X => m.x = dr - dq,
            Var::Y => m.y = dr - dq,
            Var::Z => m.z = dr - dq,
        }
        let t = Poly::monomial(m, c);
        quot = quot.add(&t);
        rem = rem.sub(&t.mul(q));
    }
    Ok((quot, rem))
}

/// Exact division in `Q[x,y,z]`; errors when `q` does not divide `p`.
pub fn exact_divide(p: &Poly, q: &Poly) -> Result<Poly, PolyError> {
    if q.is_zero() {
        return Err(PolyError::DivisionByZero);
    }
    let (lt_m, lt_c) = q.leading().expect("nonzero divisor has a leading term");
    let (lt_m, lt_c) = (*lt_m, lt_c.clone());
    let mut rem = p.clone();
    let mut quot = Poly::zero();
    let mut tail = Poly::zero();
    while let Some((m, c)) = rem.leading() {
        if lt_m.divides(m) {
            let t = Poly::monomial(m.div(&lt_m), c / &lt_c);
            quot = quot.add(&t);
            rem = rem.sub(&t.mul(q));
        } else {
            // shift the irreducible term out of the way
            let t = Poly::monomial(*m, c.clone());
            tail = tail.add(&t);
            rem = rem.sub(&t);
        }
    }
    if tail.is_zero() {
        Ok(quot)
    } else {
        Err(PolyError::NotDivisible(q.to_string(), p.to_string()))
    }
}

/// Monic gcd of univariate polynomials.
pub fn gcd_univariate(p: &Poly, q: &Poly) -> Result<Poly, PolyError> {
    let mut a = p.clone();
    let mut b = q.clone();
    while !b.is_zero() {
        let (_, r) = divrem(&a, &b)?;
        a = b;
        b = r;
    }
    if a.is_zero() {
        return Ok(a);
    }
    let var = a.sole_variable()?.unwrap_or(Var::X);
    let d = a.degree(var).unwrap_or(0);
    let lead = a.coeff_of(var, d).constant_coeff();
    Ok(a.scale(&(Rat::one() / lead)))
}

/// True when the univariate polynomial has no repeated factor.
pub fn is_squarefree(p: &Poly) -> Result<bool, PolyError> {
    let var = p.sole_variable()?.unwrap_or(Var::X);
    let g = gcd_univariate(p, &p.derivative(var))?;
    Ok(g.degree(var).unwrap_or(0) == 0)
}

fn poly_det(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Poly::zero();
    for k in 0..n {
        if m[0][k].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = (1..n)
            .map(|i| {
                (0..n)
                    .filter(|&j| j != k)
                    .map(|j| m[i][j].clone())
                    .collect()
            })
            .collect();
        let term = m[0][k].mul(&poly_det(&minor));
        if k % 2 == 0 {
            acc = acc.add(&term);
        } else {
            acc = acc.sub(&term);
        }
    }
    acc
}

/// Classical resultant of `g` and `h` with respect to `var`, computed as the
/// Sylvester determinant; coefficients may involve the other variables.
pub fn resultant(g: &Poly, h: &Poly, var: Var) -> Result<Poly, PolyError> {
    if g.is_zero() || h.is_zero() {
        return Ok(Poly::zero());
    }
    let n = g.degree(var).unwrap_or(0) as usize;
    let m = h.degree(var).unwrap_or(0) as usize;
    if n == 0 && m == 0 {
        return Err(PolyError::BothConstant(var));
    }
    if n == 0 {
        return Ok(g.pow(m as u32));
    }
    if m == 0 {
        return Ok(h.pow(n as u32));
    }
    // descending coefficient rows
    let gc: Vec<Poly> = (0..=n).rev().map(|k| g.coeff_of(var, k as u32)).collect();
    let hc: Vec<Poly> = (0..=m).rev().map(|k| h.coeff_of(var, k as u32)).collect();
    let size = n + m;
    let mut syl = vec![vec![Poly::zero(); size]; size];
    for i in 0..m {
        for (j, c) in gc.iter().enumerate() {
            syl[i][i + j] = c.clone();
        }
    }
    for i in 0..n {
        for (j, c) in hc.iter().enumerate() {
            syl[m + i][i + j] = c.clone();
        }
    }
    Ok(poly_det(&syl))
}

/// Largest `m` with `(var - lambda)^m` dividing `p`.
pub fn root_multiplicity(p: &Poly, var: Var, lambda: &Rat) -> Result<u32, PolyError> {
    if p.is_zero() {
        return Err(PolyError::DivisionByZero);
    }
    let lin = Poly::var(var).sub(&Poly::constant(lambda.clone()));
    let mut count = 0;
    let mut cur = p.clone();
    loop {
        let (q, r) = divrem(&cur, &lin)?;
        if !r.is_zero() {
            return Ok(count);
        }
        count += 1;
        cur = q;
    }
}

fn int_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs();
    let limit: BigInt = BigInt::from(10_000_000_000_000_000u64);
    if n > limit {
        return None;
    }
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            out.push(&n / &d);
        }
        d += 1;
    }
    Some(out)
}

/// All rational roots of a univariate polynomial, with multiplicities.
/// Errors if the polynomial does not split into rational linear factors.
pub fn rational_roots(p: &Poly, var: Var) -> Result<Vec<(Rat, u32)>, PolyError> {
    let mut cur = p.clone();
    let mut roots: Vec<(Rat, u32)> = Vec::new();
    // pull out roots at zero first
    let zero = Rat::zero();
    let m0 = root_multiplicity(&cur, var, &zero)?;
    if m0 > 0 {
        roots.push((zero.clone(), m0));
        let lin = Poly::var(var);
        for _ in 0..m0 {
            cur = divrem(&cur, &lin)?.0;
        }
    }
    while cur.degree(var).unwrap_or(0) > 0 {
        // clear denominators to search integer candidates r/s
        let mut denom_lcm = BigInt::one();
        for (_, c) in cur.terms() {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let scaled = cur.scale(&Rat::from_integer(denom_lcm));
        let d = scaled.degree(var).unwrap();
        let a0 = scaled.coeff_of(var, 0).constant_coeff().to_integer();
        let an = scaled.coeff_of(var, d).constant_coeff().to_integer();
        let (num_divs, den_divs) = match (int_divisors(&a0), int_divisors(&an)) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(PolyError::NonRationalRoots(cur.to_string())),
        };
        let mut found = None;
        'outer: for nd in &num_divs {
            for dd in &den_divs {
                for sign in [1, -1] {
                    let cand = Rat::new(nd * BigInt::from(sign), dd.clone());
                    if cur.eval_var(var, &cand).is_zero() {
                        found = Some(cand);
                        break 'outer;
                    }
                }
            }
        }
        let Some(root) = found else {
            return Err(PolyError::NonRationalRoots(cur.to_string()));
        };
        let m = root_multiplicity(&cur, var, &root)?;
        let lin = Poly::var(var).sub(&Poly::constant(root.clone()));
        for _ in 0..m {
            cur = divrem(&cur, &lin)?.0;
        }
        roots.push((root, m));
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(roots)
}

/// Grading weights making `z^2 - f` weighted homogeneous.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct GradingWeights {
    pub w_x: u32,
    pub w_y: u32,
    pub w_z: u32,
    pub total: u32,
}

/// Check that `f` is homogeneous of degree `n` in x, y and return the weights
/// under which `z^2 - f` is weighted homogeneous.
pub fn grading_check(n: u32, f: &Poly) -> Result<GradingWeights, PolyError> {
    if f.uses(Var::Z) {
        return Err(PolyError::VariableNotAllowed(Var::Z));
    }
    for (m, _) in f.terms() {
        if m.x + m.y != n {
            return Err(PolyError::NotHomogeneous(n));
        }
    }
    let w = if n.is_multiple_of(2) {
        GradingWeights {
            w_x: 1,
            w_y: 1,
            w_z: n / 2,
            total: n,
        }
    } else {
        GradingWeights {
            w_x: 2,
            w_y: 2,
            w_z: n,
            total: 2 * n,
        }
    };
    // confirm weighted homogeneity of z^2 - f
    debug_assert_eq!(2 * w.w_z, w.total);
    for (m, _) in f.terms() {
        if m.x * w.w_x + m.y * w.w_y != w.total {
            return Err(PolyError::NotHomogeneous(n));
        }
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Poly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn basic_arithmetic() {
        assert_eq!(p("(x-1)*(x+1)"), p("x^2 - 1"));
        let q = p("(x-1)*(x-2)");
        assert_eq!(p("(y - ((x-1)*(x-2))) * (y + ((x-1)*(x-2)))"),
            Poly::var(Var::Y).pow(2).sub(&q.pow(2)));
    }

    #[test]
    fn divrem_examples() {
        let (q, r) = divrem(&p("x^2-1"), &p("x-1")).unwrap();
        assert_eq!(q, p("x+1"));
        assert!(r.is_zero());
        assert_eq!(divrem(&p("x"), &Poly::zero()), Err(PolyError::DivisionByZero));
        assert!(divrem(&p("x*y"), &p("x")).is_err());
    }

    #[test]
    fn exact_divide_examples() {
        let ell = p("x-3");
        assert_eq!(exact_divide(&ell.pow(2), &ell).unwrap(), ell);
        assert_eq!(exact_divide(&p("x^2-1"), &p("x-1")).unwrap(), p("x+1"));
        assert!(exact_divide(&p("x+1"), &p("x")).is_err());
    }

    #[test]
    fn resultant_examples() {
        // 2x2 Sylvester oracle: res_y(y - q, y + q) = det [[1, -q],[1, q]] = 2q
        let q = p("(x-1)*(x-2)");
        let g = Poly::var(Var::Y).sub(&q);
        let h = Poly::var(Var::Y).add(&q);
        let res = resultant(&g, &h, Var::Y).unwrap();
        assert_eq!(res, q.scale(&rat_int(2)));

        // eliminating y from (x, y - x) gives x, a simple transverse meeting
        let res2 = resultant(&p("x"), &p("y-x"), Var::Y).unwrap();
        assert_eq!(res2, p("x"));
        assert_eq!(root_multiplicity(&res2, Var::X, &rat_int(0)).unwrap(), 1);

        // p = (x-1)^2 (x-2)^4, q = (x-1)(x-2)^2: the multiplicity of the
        // root 1 in res_y(y-q, y+q) is e_1/2 = 1
        let q = p("(x-1)*(x-2)^2");
        let g = Poly::var(Var::Y).sub(&q);
        let h = Poly::var(Var::Y).add(&q);
        let res = resultant(&g, &h, Var::Y).unwrap();
        assert_eq!(root_multiplicity(&res, Var::X, &rat_int(1)).unwrap(), 1);
        assert_eq!(root_multiplicity(&res, Var::X, &rat_int(2)).unwrap(), 2);

        assert!(matches!(
            resultant(&p("2"), &p("3"), Var::X),
            Err(PolyError::BothConstant(Var::X))
        ));
    }

    #[test]
    fn root_multiplicity_examples() {
        let q = p("(x-1)^2*(x-2)^4");
        assert_eq!(root_multiplicity(&q, Var::X, &rat_int(2)).unwrap(), 4);
        assert_eq!(root_multiplicity(&q, Var::X, &rat_int(3)).unwrap(), 0);
        assert_eq!(
            root_multiplicity(&p("x^2-2*x+1"), Var::X, &rat_int(1)).unwrap(),
            2
        );
    }

    #[test]
    fn rational_root_extraction() {
        let roots = rational_roots(&p("(x-1)^2*(x-2)^4"), Var::X).unwrap();
        assert_eq!(roots, vec![(rat_int(1), 2), (rat_int(2), 4)]);
        let roots = rational_roots(&p("x^2 - 1/4"), Var::X).unwrap();
        assert_eq!(roots, vec![(rat(-1, 2), 1), (rat(1, 2), 1)]);
        assert!(rational_roots(&p("x^2+1"), Var::X).is_err());
        assert!(rational_roots(&p("x^2-2"), Var::X).is_err());
    }

    #[test]
    fn grading_examples() {
        // n = 4: x*y*(x-y)*(x+y)
        let f4 = p("x*y*(x-y)*(x+y)");
        assert_eq!(
            grading_check(4, &f4).unwrap(),
            GradingWeights { w_x: 1, w_y: 1, w_z: 2, total: 4 }
        );
        let f3 = p("x*y*(x-y)");
        assert_eq!(
            grading_check(3, &f3).unwrap(),
            GradingWeights { w_x: 2, w_y: 2, w_z: 3, total: 6 }
        );
        assert!(grading_check(5, &p("x^5 + x")).is_err());
    }

    #[test]
    fn squarefree_matches_multiplicities() {
        assert!(is_squarefree(&p("(x-1)*(x-2)*(x-3)")).unwrap());
        assert!(!is_squarefree(&p("(x-1)^2*(x-2)")).unwrap());
    }

    fn arb_poly_xy() -> impl Strategy<Value = Poly> {
        proptest::collection::vec((0u32..3, 0u32..3, -3i64..4), 0..5).prop_map(|terms| {
            let mut out = Poly::zero();
            for (x, y, c) in terms {
                out = out.add(&Poly::monomial(Monomial { x, y, z: 0 }, rat_int(c)));
            }
            out
        })
    }

    fn arb_poly_x() -> impl Strategy<Value = Poly> {
        proptest::collection::vec(-3i64..4, 1..5).prop_map(|coeffs| {
            let mut out = Poly::zero();
            for (i, c) in coeffs.iter().enumerate() {
                out = out.add(&Poly::monomial(
                    Monomial { x: i as u32, y: 0, z: 0 },
                    rat_int(*c),
                ));
            }
            out
        })
    }

    proptest! {
        #[test]
        fn exact_divide_roundtrip(a in arb_poly_xy(), b in arb_poly_xy()) {
            prop_assume!(!b.is_zero());
            let prod = a.mul(&b);
            prop_assert_eq!(exact_divide(&prod, &b).unwrap(), a);
        }

        #[test]
        fn divrem_is_exact(a in arb_poly_x(), b in arb_poly_x()) {
            prop_assume!(!b.is_zero());
            let (q, r) = divrem(&a, &b).unwrap();
            prop_assert_eq!(q.mul(&b).add(&r), a);
            if !r.is_zero() {
                prop_assert!(r.degree(Var::X).unwrap_or(0) < b.degree(Var::X).unwrap_or(0));
            }
        }

        #[test]
        fn resultant_vanishes_iff_common_factor(a in arb_poly_x(), b in arb_poly_x(), c in arb_poly_x()) {
            prop_assume!(a.degree(Var::X).unwrap_or(0) >= 1);
            prop_assume!(b.degree(Var::X).unwrap_or(0) >= 1 || c.degree(Var::X).unwrap_or(0) >= 1);
            // shared factor a: resultant must vanish
            let g = a.mul(&b);
            let h = a.mul(&c);
            if !g.is_zero() && !h.is_zero() {
                let r = resultant(&g, &h, Var::X).unwrap();
                prop_assert!(r.is_zero());
            }
            // coprime by construction: (x) and (x + 1)
            let r = resultant(&p("x"), &p("x+1"), Var::X).unwrap();
            prop_assert!(!r.is_zero());
        }

        #[test]
        fn squarefree_iff_gcd_with_derivative_trivial(a in arb_poly_x()) {
            prop_assume!(a.degree(Var::X).unwrap_or(0) >= 1);
            let sq = is_squarefree(&a).unwrap();
            // oracle: check against rational-root multiplicities when they exist
            if let Ok(roots) = rational_roots(&a, Var::X) {
                let all_simple = roots.iter().all(|(_, m)| *m == 1);
                if !all_simple {
                    prop_assert!(!sq);
                }
            }
        }
    }
}
