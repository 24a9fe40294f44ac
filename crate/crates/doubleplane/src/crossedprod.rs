//! The generalized crossed product `Delta(I_i) = T + I_i` attached to a
//! branch component of `z^2 = y^2 - p(x)`, with the product
//! `(a,b)(c,d) = (ac + b sigma(d) / l_i, b sigma(c) + ad)`.
//!
//! Elements carry ideal-membership witnesses `b = alpha (z-y) + beta l_i`
//! with `alpha, beta` in `A = k[x,y]`; the witness is recomputed (and with
//! it membership re-verified) after every product. An independent oracle
//! multiplies images inside the degree-2 symbol algebra on generators `z, w`
//! with `z^2 = y^2 - p`, `w^2 = l_i`, `wz = -zw`, embedded by
//! `(a, b) -> a + b w / l_i`.

use crate::polyring::{exact_divide, HyperellipticSpec, Poly, PolyError, TElem, TRing, Var};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CrossedError {
    #[error("branch index {0} out of range 1..={1}")]
    IndexOutOfRange(usize, usize),
    #[error("element {0} is not in the ideal (z-y, l_i)")]
    NotInIdeal(String),
    #[error("product left the ideal: division by l_i failed on {0}")]
    DivisionFailed(String),
    #[error("associativity failed on ({0}; {1}; {2})")]
    AssociativityFailure(String, String, String),
}

/// `Delta(I_i)` for `I_i = (z - y, l_i)`.
#[derive(Clone)]
pub struct CrossedAlgebra {
    spec: HyperellipticSpec,
    index: usize,
    ring: TRing,
    ell: Poly,
}

/// Element `(a, b)` of `T + I_i` with the witness `b = alpha (z-y) + beta l`.
#[derive(Clone, PartialEq, Eq)]
pub struct CrossedElem {
    pub a: TElem,
    pub b: TElem,
    alpha: Poly,
    beta: Poly,
}

impl CrossedElem {
    pub fn witness(&self) -> (&Poly, &Poly) {
        (&self.alpha, &self.beta)
    }

    pub fn describe(&self) -> String {
        format!("({}, {})", self.a, self.b)
    }
}

impl std::fmt::Debug for CrossedElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.describe())
    }
}

impl CrossedAlgebra {
    /// `index` is 1-based, matching the branch labels `l_1, ..., l_v`.
    pub fn new(spec: HyperellipticSpec, index: usize) -> Result<Self, CrossedError> {
        if index == 0 || index > spec.v() {
            return Err(CrossedError::IndexOutOfRange(index, spec.v()));
        }
        let ring = TRing::new(spec.f()).expect("f is z-free");
        let ell = spec.ell(index - 1);
        Ok(CrossedAlgebra {
            spec,
            index,
            ring,
            ell,
        })
    }

    pub fn spec(&self) -> &HyperellipticSpec {
        &self.spec
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn ell(&self) -> &Poly {
        &self.ell
    }

    /// Build an element, deriving the membership witness of `b`: writing
    /// `b = b0 + b1 z`, membership in `(z-y, l)` as a free A-module with
    /// basis `z-y, l` forces `alpha = b1` and `beta = (b0 + y b1)/l`.
    pub fn elem(&self, a: TElem, b: TElem) -> Result<CrossedElem, CrossedError> {
        let alpha = b.high().clone();
        let shifted = b.low().add(&Poly::var(Var::Y).mul(b.high()));
        let beta = exact_divide(&shifted, &self.ell)
            .map_err(|_| CrossedError::NotInIdeal(b.to_string()))?;
        let elem = CrossedElem { a, b, alpha, beta };
        debug_assert!(self.witness_reproduces(&elem));
        Ok(elem)
    }

    pub fn from_witness(&self, a: TElem, alpha: Poly, beta: Poly) -> CrossedElem {
        let z_minus_y = self
            .ring
            .elem(Poly::var(Var::Y).neg(), Poly::one())
            .expect("z - y");
        let b = z_minus_y
            .scale_poly(&alpha)
            .add(&TElem::scalar(beta.mul(&self.ell)));
        CrossedElem { a, b, alpha, beta }
    }

    fn witness_reproduces(&self, e: &CrossedElem) -> bool {
        let z_minus_y = self
            .ring
            .elem(Poly::var(Var::Y).neg(), Poly::one())
            .expect("z - y");
        let rebuilt = z_minus_y
            .scale_poly(&e.alpha)
            .add(&TElem::scalar(e.beta.mul(&self.ell)));
        rebuilt == e.b
    }

    pub fn zero(&self) -> CrossedElem {
        self.from_witness(TElem::zero(), Poly::zero(), Poly::zero())
    }

    pub fn one(&self) -> CrossedElem {
        self.from_witness(TElem::one(), Poly::zero(), Poly::zero())
    }

    /// The A-module basis (1,0), (z,0), (0,l), (0,z-y).
    pub fn basis(&self) -> [CrossedElem; 4] {
        [
            self.one(),
            self.from_witness(TElem::z(), Poly::zero(), Poly::zero()),
            self.from_witness(TElem::zero(), Poly::zero(), Poly::one()),
            self.from_witness(TElem::zero(), Poly::one(), Poly::zero()),
        ]
    }

    pub fn basis_labels(&self) -> [String; 4] {
        [
            "(1,0)".into(),
            "(z,0)".into(),
            "(0,l)".into(),
            "(0,z-y)".into(),
        ]
    }

    pub fn add(&self, u: &CrossedElem, w: &CrossedElem) -> CrossedElem {
        CrossedElem {
            a: u.a.add(&w.a),
            b: u.b.add(&w.b),
            alpha: u.alpha.add(&w.alpha),
            beta: u.beta.add(&w.beta),
        }
    }

    /// The raw product formula
    /// `(a,b)(c,d) = (ac + b sigma(d) l^{-1}, b sigma(c) + ad)` on plain
    /// pairs of ring elements, defined whenever the division is exact.
    pub fn mul_formula(
        &self,
        (a, b): (&TElem, &TElem),
        (c, d): (&TElem, &TElem),
    ) -> Result<(TElem, TElem), CrossedError> {
        let r = &self.ring;
        let b_sigma_d = r.mul(b, &r.sigma(d));
        let low = exact_divide(b_sigma_d.low(), &self.ell)
            .map_err(|_| CrossedError::DivisionFailed(b_sigma_d.to_string()))?;
        let high = exact_divide(b_sigma_d.high(), &self.ell)
            .map_err(|_| CrossedError::DivisionFailed(b_sigma_d.to_string()))?;
        let quotient = r.elem(low, high).expect("z-free parts");
        let first = r.mul(a, c).add(&quotient);
        let second = r.mul(b, &r.sigma(c)).add(&r.mul(a, d));
        Ok((first, second))
    }

    /// The crossed-product multiplication on witnessed elements.
    ///
    /// The division is exact because `I sigma(I)` is contained in `(l)`;
    /// a failure signals invalid ideal membership.
    pub fn mul(&self, u: &CrossedElem, w: &CrossedElem) -> Result<CrossedElem, CrossedError> {
        let (first, second) = self.mul_formula((&u.a, &u.b), (&w.a, &w.b))?;
        self.elem(first, second)
    }

    fn pair(&self, a: &str, b: &str) -> CrossedElem {
        let parse = |s: &str| -> TElem {
            self.ring
                .reduce(&crate::polyring::parse_poly(s).expect("table literal"))
        };
        self.elem(parse(a), parse(b)).expect("table literal in ideal")
    }

    /// The sixteen basis products, compared against the published
    /// multiplication table and against the symbol-algebra oracle.
    pub fn verify_table(&self) -> Vec<TableCell> {
        let basis = self.basis();
        let labels = self.basis_labels();
        let p = self.spec.p();
        let p_over_ell = exact_divide(&p, &self.ell).expect("l divides p");
        let ell_s = self.ell.to_string();
        // published table, row-major: display text plus parseable content
        // where the entry is a well-formed element of T + I_i. The cell
        // printed "(0, f_i)" names a symbol from the line-arrangement
        // scenario and carries no content here; the (0,z-y)^2 cell parses
        // but its sign disagrees with the computed product.
        let zero = "0".to_string();
        type Published = (String, Option<(String, String)>, Option<&'static str>);
        let cell = |a: &str, b: &str| -> Published {
            (
                format!("({a}, {b})"),
                Some((a.to_string(), b.to_string())),
                None,
            )
        };
        let published: [[Published; 4]; 4] = [
            [
                cell("1", &zero),
                cell("z", &zero),
                ("(0, f_i)".to_string(), None, Some(NOTATION_NOTE)),
                cell(&zero, "z-y"),
            ],
            [
                cell("z", &zero),
                cell(&self.spec.f().to_string(), &zero),
                cell(&zero, &format!("z*({ell_s})")),
                cell(&zero, "z*(z-y)"),
            ],
            [
                cell(&zero, &ell_s),
                cell(&zero, &format!("-z*({ell_s})")),
                cell(&ell_s, &zero),
                cell("-(z+y)", &zero),
            ],
            [
                cell(&zero, "z-y"),
                cell(&zero, "-z*(z-y)"),
                cell("z-y", &zero),
                (
                    format!("({}, 0)", p_over_ell.neg()),
                    Some((p_over_ell.neg().to_string(), zero.clone())),
                    Some(SIGN_NOTE),
                ),
            ],
        ];
        let mut cells = Vec::with_capacity(16);
        for i in 0..4 {
            for j in 0..4 {
                let computed = self.mul(&basis[i], &basis[j]).expect("basis product");
                let (display, content, note) = &published[i][j];
                let matches_published = content
                    .as_ref()
                    .is_some_and(|(pa, pb)| computed == self.pair(pa, pb));
                let oracle_match = self.oracle_agrees(&basis[i], &basis[j], &computed);
                cells.push(TableCell {
                    row: labels[i].clone(),
                    col: labels[j].clone(),
                    computed: computed.describe(),
                    published: display.clone(),
                    matches_published,
                    oracle_match,
                    note: note.map(str::to_string),
                });
            }
        }
        cells
    }

    fn oracle_agrees(&self, u: &CrossedElem, w: &CrossedElem, product: &CrossedElem) -> bool {
        let qu = SymbolQuat::embed(self, u);
        let qw = SymbolQuat::embed(self, w);
        let qp = SymbolQuat::embed(self, product);
        qu.mul(&qw, self) == qp
    }

    /// Degree-2 symbol relations for `u = (z,0)`, `v = (0,l)`:
    /// `u^2 = (y^2 - p) 1`, `v^2 = l 1`, `uv = -vu`, and `u^2` is central.
    pub fn check_symbol_relations(&self) -> SymbolRelationReport {
        let basis = self.basis();
        let u = &basis[1];
        let v = &basis[2];
        let f_scalar = self.from_witness(
            TElem::scalar(self.spec.f()),
            Poly::zero(),
            Poly::zero(),
        );
        let ell_scalar = self.from_witness(
            TElem::scalar(self.ell.clone()),
            Poly::zero(),
            Poly::zero(),
        );
        let uu = self.mul(u, u).expect("u^2");
        let vv = self.mul(v, v).expect("v^2");
        let uv = self.mul(u, v).expect("uv");
        let vu = self.mul(v, u).expect("vu");
        let u_squared_is_f = uu == f_scalar;
        let v_squared_is_ell = vv == ell_scalar;
        let anticommute = self.add(&uv, &vu).a.is_zero() && self.add(&uv, &vu).b.is_zero();
        let central = basis.iter().all(|w| {
            self.mul(&uu, w).expect("central check") == self.mul(w, &uu).expect("central check")
        });
        SymbolRelationReport {
            u_squared_is_f,
            v_squared_is_ell,
            anticommute,
            u_squared_central: central,
        }
    }

    fn random_elem(&self, rng: &mut ChaCha8Rng) -> CrossedElem {
        let mut rand_poly = |max_deg: u32| {
            let mut p = Poly::zero();
            for _ in 0..rng.gen_range(0..4) {
                let m = crate::polyring::Monomial {
                    x: rng.gen_range(0..=max_deg),
                    y: rng.gen_range(0..=max_deg),
                    z: 0,
                };
                let c = rng.gen_range(-3i64..=3);
                p = p.add(&Poly::monomial(m, crate::polyring::rat_int(c)));
            }
            p
        };
        let a = self
            .ring
            .elem(rand_poly(2), rand_poly(2))
            .expect("z-free parts");
        let alpha = rand_poly(2);
        let beta = rand_poly(2);
        self.from_witness(a, alpha, beta)
    }

    /// Exhaustive associativity over basis triples plus seeded random
    /// triples, with a distributivity spot check.
    pub fn associativity_sample(
        &self,
        trials: usize,
        seed: u64,
    ) -> Result<AssocReport, CrossedError> {
        assert!(trials >= 1);
        let basis = self.basis();
        let mut checked = 0usize;
        for u in &basis {
            for v in &basis {
                for w in &basis {
                    self.assoc_triple(u, v, w)?;
                    checked += 1;
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..trials {
            let u = self.random_elem(&mut rng);
            let v = self.random_elem(&mut rng);
            let w = self.random_elem(&mut rng);
            self.assoc_triple(&u, &v, &w)?;
            // distributivity u(v + w) = uv + uw
            let lhs = self.mul(&u, &self.add(&v, &w))?;
            let rhs = self.add(&self.mul(&u, &v)?, &self.mul(&u, &w)?);
            if lhs != rhs {
                return Err(CrossedError::AssociativityFailure(
                    u.describe(),
                    v.describe(),
                    w.describe(),
                ));
            }
            checked += 1;
        }
        Ok(AssocReport {
            triples_checked: checked,
            seed,
        })
    }

    fn assoc_triple(
        &self,
        u: &CrossedElem,
        v: &CrossedElem,
        w: &CrossedElem,
    ) -> Result<(), CrossedError> {
        let lhs = self.mul(&self.mul(u, v)?, w)?;
        let rhs = self.mul(u, &self.mul(v, w)?)?;
        if lhs != rhs {
            return Err(CrossedError::AssociativityFailure(
                u.describe(),
                v.describe(),
                w.describe(),
            ));
        }
        Ok(())
    }

    /// A-linear independence of the four basis elements, via the unique
    /// witness decomposition: `a1 + a2 z = 0` forces `a1 = a2 = 0` in the
    /// free module `T`, and `(0, b)` decomposes uniquely over `z-y, l`.
    pub fn free_basis_check(&self) -> FreeBasisReport {
        // decompose (0, l (z-y)): must come out as l times (0, z-y)
        let z_minus_y = self
            .ring
            .elem(Poly::var(Var::Y).neg(), Poly::one())
            .expect("z - y");
        let product = z_minus_y.scale_poly(&self.ell);
        let elem = self.elem(TElem::zero(), product).expect("in ideal");
        let decomposition_unique =
            elem.alpha == self.ell && elem.beta == Poly::zero();
        // basis elements decompose as the four unit coordinate vectors
        let basis = self.basis();
        let coords = |e: &CrossedElem| {
            (
                e.a.low().clone(),
                e.a.high().clone(),
                e.beta.clone(),
                e.alpha.clone(),
            )
        };
        let id = [
            (Poly::one(), Poly::zero(), Poly::zero(), Poly::zero()),
            (Poly::zero(), Poly::one(), Poly::zero(), Poly::zero()),
            (Poly::zero(), Poly::zero(), Poly::one(), Poly::zero()),
            (Poly::zero(), Poly::zero(), Poly::zero(), Poly::one()),
        ];
        let rank_four = basis
            .iter()
            .zip(&id)
            .all(|(e, expect)| &coords(e) == expect);
        // a nonzero combination is nonzero
        let combo = self.from_witness(
            self.ring
                .elem(Poly::var(Var::X), Poly::int(3))
                .expect("z-free"),
            Poly::var(Var::Y),
            Poly::int(-2),
        );
        let nonzero_combination_nonzero = !(combo.a.is_zero() && combo.b.is_zero());
        FreeBasisReport {
            decomposition_unique,
            rank_four,
            nonzero_combination_nonzero,
        }
    }
}

const NOTATION_NOTE: &str =
    "published cell prints (0, f_i); context dictates (0, l_i), normalized here";
const SIGN_NOTE: &str = "published cell (-p/l, 0) disagrees with the computed (p/l, 0): \
     (z-y) sigma(z-y) = -(z^2 - y^2) = p under z^2 = y^2 - p; the ring oracle \
     confirms the computed sign";

#[derive(Clone, Debug, Serialize)]
pub struct TableCell {
    pub row: String,
    pub col: String,
    pub computed: String,
    pub published: String,
    pub matches_published: bool,
    pub oracle_match: bool,
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SymbolRelationReport {
    pub u_squared_is_f: bool,
    pub v_squared_is_ell: bool,
    pub anticommute: bool,
    pub u_squared_central: bool,
}

impl SymbolRelationReport {
    pub fn all_pass(&self) -> bool {
        self.u_squared_is_f && self.v_squared_is_ell && self.anticommute && self.u_squared_central
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AssocReport {
    pub triples_checked: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct FreeBasisReport {
    pub decomposition_unique: bool,
    pub rank_four: bool,
    pub nonzero_combination_nonzero: bool,
}

impl FreeBasisReport {
    pub fn all_pass(&self) -> bool {
        self.decomposition_unique && self.rank_four && self.nonzero_combination_nonzero
    }
}

/// Element of the symbol algebra on `z, w` over `k[x,y]` localized at `l`:
/// coordinates over the basis `1, z, w, zw`, each a polynomial divided by a
/// power of `l`. Multiplication uses only `z^2 = f`, `w^2 = l`, `wz = -zw`.
#[derive(Clone, PartialEq, Eq, Debug)]
struct SymbolQuat {
    coords: [LocElem; 4],
}

impl SymbolQuat {
    fn embed(alg: &CrossedAlgebra, e: &CrossedElem) -> SymbolQuat {
        // (a, b) -> a + b w / l with a = a0 + a1 z, b = b0 + b1 z
        SymbolQuat {
            coords: [
                LocElem::from_poly(e.a.low().clone()),
                LocElem::from_poly(e.a.high().clone()),
                LocElem::new(e.b.low().clone(), 1, &alg.ell),
                LocElem::new(e.b.high().clone(), 1, &alg.ell),
            ],
        }
    }

    fn mul(&self, other: &SymbolQuat, alg: &CrossedAlgebra) -> SymbolQuat {
        let ell = &alg.ell;
        let f = alg.spec.f();
        let c = &self.coords;
        let d = &other.coords;
        let m = |a: &LocElem, b: &LocElem| a.mul(b, ell);
        let s = |a: LocElem, b: LocElem| a.add(&b, ell);
        let scale = |a: LocElem, p: &Poly| a.mul(&LocElem::from_poly(p.clone()), ell);
        // 1:  c0 d0 + f c1 d1 + l c2 d2 - f l c3 d3
        let one = s(
            s(m(&c[0], &d[0]), scale(m(&c[1], &d[1]), &f)),
            s(
                scale(m(&c[2], &d[2]), ell),
                scale(m(&c[3], &d[3]), &f.mul(ell)).neg(),
            ),
        );
        // z:  c0 d1 + c1 d0 - l c2 d3 + l c3 d2
        let zc = s(
            s(m(&c[0], &d[1]), m(&c[1], &d[0])),
            s(
                scale(m(&c[2], &d[3]), ell).neg(),
                scale(m(&c[3], &d[2]), ell),
            ),
        );
        // w:  c0 d2 + c2 d0 + f c1 d3 - f c3 d1
        let wc = s(
            s(m(&c[0], &d[2]), m(&c[2], &d[0])),
            s(
                scale(m(&c[1], &d[3]), &f),
                scale(m(&c[3], &d[1]), &f).neg(),
            ),
        );
        // zw: c0 d3 + c3 d0 + c1 d2 - c2 d1
        let zwc = s(
            s(m(&c[0], &d[3]), m(&c[3], &d[0])),
            s(m(&c[1], &d[2]), m(&c[2], &d[1]).neg()),
        );
        SymbolQuat {
            coords: [one, zc, wc, zwc],
        }
    }
}

/// `num / l^den`, normalized by cancelling factors of `l`.
#[derive(Clone, Debug)]
struct LocElem {
    num: Poly,
    den: u32,
}

impl LocElem {
    fn from_poly(num: Poly) -> LocElem {
        LocElem { num, den: 0 }
    }

    fn new(num: Poly, den: u32, ell: &Poly) -> LocElem {
        LocElem { num, den }.normalized(ell)
    }

    fn normalized(mut self, ell: &Poly) -> LocElem {
        if self.num.is_zero() {
            self.den = 0;
            return self;
        }
        while self.den > 0 {
            match exact_divide(&self.num, ell) {
                Ok(q) => {
                    self.num = q;
                    self.den -= 1;
                }
                Err(PolyError::NotDivisible(..)) => break,
                Err(_) => break,
            }
        }
        self
    }

    fn add(&self, other: &LocElem, ell: &Poly) -> LocElem {
        let den = self.den.max(other.den);
        let lift = |e: &LocElem| e.num.mul(&ell.pow(den - e.den));
        LocElem::new(lift(self).add(&lift(other)), den, ell)
    }

    fn mul(&self, other: &LocElem, ell: &Poly) -> LocElem {
        LocElem::new(self.num.mul(&other.num), self.den + other.den, ell)
    }

    fn neg(&self) -> LocElem {
        LocElem {
            num: self.num.neg(),
            den: self.den,
        }
    }
}

impl PartialEq for LocElem {
    fn eq(&self, other: &Self) -> bool {
        // normalized representatives are unique
        self.den == other.den && self.num == other.num
    }
}

impl Eq for LocElem {}
