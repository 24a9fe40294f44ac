//! Cohomology of the order-2 covering group `G = <sigma>` acting on finitely
//! generated modules, through the norm map `N = sigma + 1` and difference map
//! `D = sigma - 1`. Periodicity of cyclic group cohomology means the three
//! values H^0, H^odd, H^even determine every degree.

use crate::abgroup::{
    cokernel, column_lattice_basis, lattice_express, preimage_lattice, solve_integer,
    FGAbelianGroup, IntMatrix,
};
use num::{BigInt, One, Zero};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CohomologyError {
    #[error("action matrix must be {0}x{0}")]
    ActionShape(usize),
    #[error("action does not map the relation lattice into itself")]
    ActionNotStable,
    #[error("action squared is not the identity modulo the relations")]
    NotInvolution,
}

/// A finitely generated `Z[G]`-module for `G` of order 2: a presentation
/// `Z^g / image(relations)` together with an involutive action matrix.
#[derive(Clone, Debug)]
pub struct GModule {
    generators: usize,
    relations: IntMatrix,
    action: IntMatrix,
}

impl GModule {
    pub fn new(relations: IntMatrix, action: IntMatrix) -> Result<Self, CohomologyError> {
        let g = relations.rows();
        if action.rows() != g || action.cols() != g {
            return Err(CohomologyError::ActionShape(g));
        }
        // action maps relations into the relation lattice
        let moved = action.mul(&relations);
        for j in 0..moved.cols() {
            if solve_integer(&relations, &moved.column(j)).is_none() {
                return Err(CohomologyError::ActionNotStable);
            }
        }
        // involution modulo relations
        let sq = action.mul(&action);
        for j in 0..g {
            let mut col = sq.column(j);
            col[j] -= BigInt::one();
            if !col.iter().all(Zero::is_zero) && solve_integer(&relations, &col).is_none() {
                return Err(CohomologyError::NotInvolution);
            }
        }
        Ok(GModule {
            generators: g,
            relations,
            action,
        })
    }

    pub fn with_trivial_action(relations: IntMatrix) -> Self {
        let g = relations.rows();
        GModule::new(relations, IntMatrix::identity(g)).expect("identity action is always valid")
    }

    pub fn with_inversion_action(relations: IntMatrix) -> Self {
        let g = relations.rows();
        GModule::new(relations, IntMatrix::identity(g).negated())
            .expect("negation action is always valid")
    }

    pub fn underlying_group(&self) -> FGAbelianGroup {
        cokernel(&self.relations)
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    fn norm(&self) -> IntMatrix {
        self.action.add_identity(1)
    }

    fn difference(&self) -> IntMatrix {
        self.action.add_identity(-1)
    }

    /// Lattice of representatives of the kernel of `map` acting on the module.
    fn kernel_lattice(&self, map: &IntMatrix) -> IntMatrix {
        preimage_lattice(map, &self.relations)
    }

    /// Quotient of a representative lattice by sublattices, all inside Z^g.
    fn quotient(&self, num: &IntMatrix, dens: &[&IntMatrix]) -> FGAbelianGroup {
        let basis = column_lattice_basis(num);
        let mut combined = self.relations.clone();
        for d in dens {
            combined = combined.hcat(d);
        }
        let expressed = lattice_express(&basis, &combined)
            .expect("denominator must lie inside the numerator lattice");
        cokernel(&expressed)
    }
}

// small private helper on IntMatrix: self + c*I
trait AddIdentity {
    fn add_identity(&self, c: i64) -> IntMatrix;
}

impl AddIdentity for IntMatrix {
    fn add_identity(&self, c: i64) -> IntMatrix {
        let mut out = self.clone();
        for i in 0..out.rows() {
            let v = out.get(i, i) + BigInt::from(c);
            out.set(i, i, v);
        }
        out
    }
}

/// The fixed submodule `M^G`.
pub fn h_zero(m: &GModule) -> FGAbelianGroup {
    let fixed = m.kernel_lattice(&m.difference());
    m.quotient(&fixed, &[])
}

/// `H^{2i}(G, M) = M^G / N M` for `i >= 1`.
pub fn h_even(m: &GModule) -> FGAbelianGroup {
    let fixed = m.kernel_lattice(&m.difference());
    let norm_image = m.norm();
    m.quotient(&fixed, &[&norm_image])
}

/// `H^{2i+1}(G, M) = ker N / D M`.
pub fn h_odd(m: &GModule) -> FGAbelianGroup {
    let ker_n = m.kernel_lattice(&m.norm());
    let diff_image = m.difference();
    m.quotient(&ker_n, &[&diff_image])
}

/// Cohomology triple; by periodicity these are all degrees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyTable {
    pub h0: FGAbelianGroup,
    pub h_odd: FGAbelianGroup,
    pub h_even: FGAbelianGroup,
}

pub fn cohomology_table(m: &GModule) -> CohomologyTable {
    CohomologyTable {
        h0: h_zero(m),
        h_odd: h_odd(m),
        h_even: h_even(m),
    }
}

/// Unit group of a scenario ring, presented modulo the constant field:
/// a free lattice on named generators with sigma acting by signed
/// permutation, together with the order-2 subgroup of constants that the
/// sign twists land in.
///
/// Internally this is the module `Z/2 e ⊕ Z^m` where `e` stands for `-1`;
/// `sigma(u_j) = u_{pi(j)} + t_j e` with `t_j = 1` exactly for negated
/// generators. Because the constant field is algebraically closed, `-1` is a
/// norm (it is a square), so `e` is quotiented out of `H^even`; `H^0` is
/// reported as the fixed named part and carries an implicit `k*` factor.
#[derive(Clone, Debug)]
pub struct UnitGroup {
    names: Vec<String>,
    /// image index and negation flag for each generator under sigma
    action: Vec<(usize, bool)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnitsCohomology {
    /// Free rank of the sigma-fixed part of the named-unit lattice; the true
    /// H^0 is this lattice times `k*`.
    pub h0_fixed_rank: usize,
    pub h0_times_k_star: bool,
    pub h_odd: FGAbelianGroup,
    pub h_even: FGAbelianGroup,
}

impl UnitGroup {
    pub fn new(names: Vec<String>, action: Vec<(usize, bool)>) -> Self {
        assert_eq!(names.len(), action.len());
        let m = names.len();
        assert!(action.iter().all(|&(i, _)| i < m), "permutation out of range");
        UnitGroup { names, action }
    }

    /// Generators all fixed up to sign: `negated[j]` says sigma(u_j) = -u_j.
    pub fn diagonal(names: Vec<String>, negated: Vec<bool>) -> Self {
        let action = negated.iter().enumerate().map(|(i, &n)| (i, n)).collect();
        UnitGroup::new(names, action)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn sigma_signs(&self) -> Vec<i8> {
        self.action
            .iter()
            .map(|&(_, neg)| if neg { -1 } else { 1 })
            .collect()
    }

    /// Generator count of the internal module: names plus the epsilon slot.
    fn dim(&self) -> usize {
        self.names.len() + 1
    }

    fn relations(&self) -> IntMatrix {
        // single relation 2e = 0 in coordinate 0
        let mut r = IntMatrix::zero(self.dim(), 1);
        r.set(0, 0, BigInt::from(2));
        r
    }

    fn action_matrix(&self) -> IntMatrix {
        let mut a = IntMatrix::zero(self.dim(), self.dim());
        a.set(0, 0, BigInt::one());
        for (j, &(img, neg)) in self.action.iter().enumerate() {
            a.set(1 + img, 1 + j, BigInt::one());
            if neg {
                a.set(0, 1 + j, BigInt::one());
            }
        }
        a
    }

    fn as_gmodule(&self) -> GModule {
        GModule::new(self.relations(), self.action_matrix())
            .expect("signed permutation with epsilon twist is involutive")
    }

    pub fn cohomology(&self) -> UnitsCohomology {
        let module = self.as_gmodule();
        // H^0: fixed part of the free named lattice (epsilon lives in k*)
        let fixed = module.kernel_lattice(&module.difference());
        let h0_full = module.quotient(&fixed, &[]);
        let h0_fixed_rank = h0_full.rank();

        // epsilon = -1 is a square in k*, hence a norm from k*: its column is
        // added to the norm image when computing H^even
        let mut eps = IntMatrix::zero(self.dim(), 1);
        eps.set(0, 0, BigInt::one());
        let norm = module.norm();
        let h_even = module.quotient(&fixed, &[&norm, &eps]);

        let ker_n = module.kernel_lattice(&module.norm());
        let diff = module.difference();
        let h_odd = module.quotient(&ker_n, &[&diff]);

        UnitsCohomology {
            h0_fixed_rank,
            h0_times_k_star: true,
            h_odd,
            h_even,
        }
    }
}
