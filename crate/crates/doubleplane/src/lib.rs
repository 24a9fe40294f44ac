//! Exact-arithmetic invariants of affine double planes `z^2 = f`.
//!
//! The crate computes divisor class groups, Picard groups, unit-group and
//! class-group cohomology of the order-2 covering group, Brauer-group torsion
//! via arrangement graphs and tame symbols, and the degree-2 generalized
//! crossed product attached to a branch component. Two scenario families are
//! supported: `f` a product of linear forms through the origin, and
//! `f = y^2 - p(x)` ramified along an affine hyperelliptic curve.
//!
//! All arithmetic is exact (`BigInt` / `BigRational`); nothing here uses
//! floating point.
//!
//! Module map:
//! - [`abgroup`]: Smith normal form, cokernels, integer solving, canonical
//!   finitely generated abelian groups.
//! - [`polyring`]: sparse polynomials over Q in x, y, z; resultants, root
//!   multiplicities, the coordinate ring `T = k[x,y][z]/(z^2 - f)`, branch
//!   data of `y^2 - p(x)`, and the text grammar.
//! - [`valuation`]: divisor tables on named primes, consistency checks, and
//!   the tame symbol with its residue-class order.
//! - [`arrangement`]: bipartite curve/point incidence graphs, fundamental
//!   cycles, and symbol algebras as weighted cycles.
//! - [`cohomology`]: `H^0`, `H^odd`, `H^even` of the order-2 group acting on
//!   finitely generated modules and on unit groups.
//! - [`classgroup`]: Nagata presentations, Picard kernels, hyperelliptic
//!   two-torsion, quadratic covers, and the finite functors of the
//!   non-finitely-generated cases.
//! - [`crossedprod`]: the algebra `T + I_i` with the twisted product, its
//!   multiplication table and symbol-algebra oracle.
//! - [`scenario`]: report assembly, consistency checks, serialization.

pub mod abgroup;
pub mod arrangement;
pub mod classgroup;
pub mod cohomology;
pub mod crossedprod;
pub mod polyring;
pub mod scenario;
pub mod valuation;

pub use abgroup::{FGAbelianGroup, IntMatrix};
pub use polyring::{HyperellipticSpec, Poly, TElem, TRing};
pub use scenario::{Report, Scenario};
