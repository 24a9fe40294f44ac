//! Exact linear algebra over the integers: Smith normal form, cokernels,
//! integer solving, and finitely generated abelian groups in canonical form.
//!
//! Everything here works with unbounded `BigInt` entries; no floating point
//! is used anywhere in the crate.

use num::bigint::Sign;
use num::{BigInt, Integer, One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AbgroupError {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("modulus must be >= 2, got {0}")]
    BadModulus(BigInt),
}

/// Dense integer matrix, row major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn diagonal(diag: &[BigInt]) -> Self {
        let mut m = Self::zero(diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    /// Matrix whose columns are the given vectors in `Z^dim`.
    pub fn from_columns(dim: usize, cols: &[Vec<BigInt>]) -> Self {
        let mut m = Self::zero(dim, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), dim, "column length mismatch");
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in mul_vec");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hcat(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, other.rows, "row mismatch in hcat");
        let mut out = IntMatrix::zero(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    pub fn negated(&self) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += q * row[src]
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let v = self.get(dst, j) + q * self.get(src, j);
            self.set(dst, j, v);
        }
    }

    /// col[dst] += q * col[src]
    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let v = self.get(i, dst) + q * self.get(i, src);
            self.set(i, dst, v);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j);
            self.set(i, j, v);
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect())
            .collect();
        rows.serialize(serializer)
    }
}

/// Smith decomposition `U * M * V = S` with `U`, `V` unimodular and `S`
/// diagonal, nonnegative, satisfying the divisibility chain.
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
    /// Inverse of `u`, tracked during reduction.
    pub u_inv: IntMatrix,
}

impl SmithDecomposition {
    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        let n = self.s.rows().min(self.s.cols());
        (0..n).take_while(|&i| !self.s.get(i, i).is_zero()).count()
    }

    /// Nonzero diagonal entries, in chain order.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rank()).map(|i| self.s.get(i, i).clone()).collect()
    }
}

/// Smith normal form with the smallest-absolute-value pivot rule.
pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let rows = m.rows();
    let cols = m.cols();
    let mut s = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut u_inv = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    let n = rows.min(cols);
    let mut t = 0;
    while t < n {
        // smallest nonzero |entry| in the trailing submatrix
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !s.get(i, j).is_zero()
                    && pivot.is_none_or(|(pi, pj)| s.get(i, j).abs() < s.get(pi, pj).abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        u_inv.swap_cols(t, pi);
        s.swap_cols(t, pj);
        v.swap_cols(t, pj);

        let mut clean = true;
        for i in t + 1..rows {
            if s.get(i, t).is_zero() {
                continue;
            }
            let q = -(s.get(i, t) / s.get(t, t));
            s.add_row(i, t, &q);
            u.add_row(i, t, &q);
            u_inv.add_col(t, i, &-&q);
            if !s.get(i, t).is_zero() {
                clean = false;
            }
        }
        for j in t + 1..cols {
            if s.get(t, j).is_zero() {
                continue;
            }
            let q = -(s.get(t, j) / s.get(t, t));
            s.add_col(j, t, &q);
            v.add_col(j, t, &q);
            if !s.get(t, j).is_zero() {
                clean = false;
            }
        }
        if !clean {
            continue;
        }
        // force the pivot to divide the rest of the submatrix
        let mut offender = None;
        'search: for i in t + 1..rows {
            for j in t + 1..cols {
                if !(s.get(i, j) % s.get(t, t)).is_zero() {
                    offender = Some(i);
                    break 'search;
                }
            }
        }
        if let Some(i) = offender {
            let one = BigInt::one();
            s.add_row(t, i, &one);
            u.add_row(t, i, &one);
            u_inv.add_col(i, t, &-&one);
            continue;
        }
        t += 1;
    }
    for i in 0..n {
        if s.get(i, i).sign() == Sign::Minus {
            s.negate_row(i);
            u.negate_row(i);
            // negating a row of u negates the matching column of u_inv
            for r in 0..rows {
                let val = -u_inv.get(r, i);
                u_inv.set(r, i, val);
            }
        }
    }
    SmithDecomposition { u, s, v, u_inv }
}

/// Exact determinant by fraction-free Bareiss elimination.
pub fn det(m: &IntMatrix) -> Result<BigInt, AbgroupError> {
    if !m.is_square() {
        return Err(AbgroupError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a.get(k, k).is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a.get(i, k).is_zero()) else {
                return Ok(BigInt::zero());
            };
            a.swap_rows(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a.get(k, k) * a.get(i, j) - a.get(i, k) * a.get(k, j);
                a.set(i, j, &num / &prev);
            }
        }
        for i in k + 1..n {
            a.set(i, k, BigInt::zero());
        }
        prev = a.get(k, k).clone();
    }
    Ok(sign * a.get(n - 1, n - 1))
}

/// Solve `M x = b` over the integers. `None` means no integral solution.
pub fn solve_integer(m: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(b.len(), m.rows(), "rhs length must equal row count");
    let snf = smith_normal_form(m);
    let c = snf.u.mul_vec(b);
    let mut y = vec![BigInt::zero(); m.cols()];
    let rank = snf.rank();
    for (i, ci) in c.iter().enumerate() {
        if i < rank {
            let d = snf.s.get(i, i);
            let (q, r) = ci.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        } else if !ci.is_zero() {
            return None;
        }
    }
    Some(snf.v.mul_vec(&y))
}

/// Basis of the integer kernel `{x : Mx = 0}`, as matrix columns.
pub fn kernel_basis(m: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(m);
    let rank = snf.rank();
    let cols: Vec<Vec<BigInt>> = (rank..m.cols()).map(|j| snf.v.column(j)).collect();
    IntMatrix::from_columns(m.cols(), &cols)
}

/// Basis for the lattice spanned by the columns of `a`.
///
/// From `U a V = S`, the column lattice equals the lattice spanned by
/// `s_i * (U^-1 e_i)` over the nonzero diagonal entries.
pub fn column_lattice_basis(a: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(a);
    let cols: Vec<Vec<BigInt>> = (0..snf.rank())
        .map(|i| {
            let d = snf.s.get(i, i);
            snf.u_inv.column(i).iter().map(|x| x * d).collect()
        })
        .collect();
    IntMatrix::from_columns(a.rows(), &cols)
}

/// Express every column of `targets` in the column `basis`: finds `X` with
/// `basis * X = targets`, or `None` if some column is outside the lattice.
pub fn lattice_express(basis: &IntMatrix, targets: &IntMatrix) -> Option<IntMatrix> {
    let mut cols = Vec::with_capacity(targets.cols());
    for j in 0..targets.cols() {
        cols.push(solve_integer(basis, &targets.column(j))?);
    }
    Some(IntMatrix::from_columns(basis.cols(), &cols))
}

/// Basis of the preimage lattice `{x : F x ∈ column-lattice(R)}`.
pub fn preimage_lattice(f: &IntMatrix, r: &IntMatrix) -> IntMatrix {
    assert_eq!(f.rows(), r.rows(), "codomain mismatch");
    let stacked = f.hcat(&r.negated());
    let ker = kernel_basis(&stacked);
    // keep the x-block of each kernel vector
    let cols: Vec<Vec<BigInt>> = (0..ker.cols())
        .map(|j| (0..f.cols()).map(|i| ker.get(i, j).clone()).collect())
        .collect();
    let proj = IntMatrix::from_columns(f.cols(), &cols);
    column_lattice_basis(&proj)
}

/// The quotient lattice(num) / lattice(den); den must lie inside lattice(num).
pub fn subquotient(num: &IntMatrix, den: &IntMatrix) -> FGAbelianGroup {
    let basis = column_lattice_basis(num);
    let expressed = lattice_express(&basis, den)
        .expect("denominator lattice is not contained in numerator lattice");
    cokernel(&expressed)
}

/// `Z^rows / image(M)` in canonical form.
pub fn cokernel(m: &IntMatrix) -> FGAbelianGroup {
    let snf = smith_normal_form(m);
    let mut torsion = Vec::new();
    for d in snf.diagonal() {
        if !d.is_one() {
            torsion.push(d);
        }
    }
    FGAbelianGroup {
        rank: m.rows() - snf.rank(),
        torsion,
    }
}

/// Finitely generated abelian group in canonical form: free rank plus the
/// invariant factor chain `d_1 | d_2 | ... | d_t`, each `d_i >= 2`.
///
/// Two groups are isomorphic iff the representations are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FGAbelianGroup {
    rank: usize,
    torsion: Vec<BigInt>,
}

impl FGAbelianGroup {
    pub fn trivial() -> Self {
        FGAbelianGroup {
            rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        FGAbelianGroup {
            rank,
            torsion: Vec::new(),
        }
    }

    pub fn cyclic(order: u64) -> Self {
        Self::from_orders(&[BigInt::from(order)])
    }

    /// (Z/2)^k
    pub fn elementary_two(k: usize) -> Self {
        Self::from_orders(&vec![BigInt::from(2); k])
    }

    /// Group `⊕ Z/o_i`, canonicalized; an order of 0 contributes a `Z` factor,
    /// an order of 1 contributes nothing.
    pub fn from_orders(orders: &[BigInt]) -> Self {
        let diag: Vec<BigInt> = orders.iter().map(|o| o.abs()).collect();
        cokernel(&IntMatrix::diagonal(&diag))
    }

    pub fn direct_sum(&self, other: &FGAbelianGroup) -> FGAbelianGroup {
        let mut orders: Vec<BigInt> = self.torsion.clone();
        orders.extend(other.torsion.iter().cloned());
        let mut g = Self::from_orders(&orders);
        g.rank = self.rank + other.rank;
        g
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Group order; `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        if self.rank > 0 {
            return None;
        }
        Some(self.torsion.iter().product())
    }

    pub fn is_isomorphic(&self, other: &FGAbelianGroup) -> bool {
        self == other
    }

    /// `Some(k)` iff the group is `(Z/2)^k`.
    pub fn elementary_two_rank(&self) -> Option<usize> {
        if self.rank == 0 && self.torsion.iter().all(|d| *d == BigInt::from(2)) {
            Some(self.torsion.len())
        } else {
            None
        }
    }

    /// `A ⊗ Z/d`.
    pub fn tensor_mod(&self, d: &BigInt) -> Result<FGAbelianGroup, AbgroupError> {
        if *d < BigInt::from(2) {
            return Err(AbgroupError::BadModulus(d.clone()));
        }
        let mut orders: Vec<BigInt> = vec![d.clone(); self.rank];
        orders.extend(self.torsion.iter().map(|t| t.gcd(d)));
        Ok(Self::from_orders(&orders))
    }

    /// The subgroup of `A` annihilated by `d`.
    pub fn annihilator(&self, d: &BigInt) -> Result<FGAbelianGroup, AbgroupError> {
        if *d < BigInt::from(2) {
            return Err(AbgroupError::BadModulus(d.clone()));
        }
        let orders: Vec<BigInt> = self.torsion.iter().map(|t| t.gcd(d)).collect();
        Ok(Self::from_orders(&orders))
    }
}

impl fmt::Display for FGAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        // group equal invariant factors as powers
        let mut i = 0;
        while i < self.torsion.len() {
            let d = &self.torsion[i];
            let mut k = 1;
            while i + k < self.torsion.len() && self.torsion[i + k] == *d {
                k += 1;
            }
            if k == 1 {
                parts.push(format!("Z/{d}"));
            } else {
                parts.push(format!("(Z/{d})^{k}"));
            }
            i += k;
        }
        if self.rank == 1 {
            parts.push("Z".to_string());
        } else if self.rank > 1 {
            parts.push(format!("Z^{}", self.rank));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for FGAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for FGAbelianGroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("FGAbelianGroup", 3)?;
        st.serialize_field("rank", &self.rank)?;
        let torsion: Vec<String> = self.torsion.iter().map(|t| t.to_string()).collect();
        st.serialize_field("torsion", &torsion)?;
        st.serialize_field("pretty", &self.to_string())?;
        st.end()
    }
}

/// The subgroup of `(Z/d)^dim` generated by the columns of `gens`,
/// up to isomorphism.
pub fn subgroup_mod(gens: &IntMatrix, d: &BigInt, dim: usize) -> FGAbelianGroup {
    assert_eq!(gens.rows(), dim);
    let mut scaled = IntMatrix::zero(dim, dim);
    for i in 0..dim {
        scaled.set(i, i, d.clone());
    }
    let lambda = gens.hcat(&scaled);
    subquotient(&lambda, &scaled)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    /// The arrowhead intersection matrix used across the crate:
    /// diagonal -(n+1)/2, -2, ..., -2 with first row/column 1.
    pub(crate) fn arrowhead(n: usize) -> IntMatrix {
        assert!(n >= 3 && n % 2 == 1);
        let mut m = IntMatrix::zero(n + 1, n + 1);
        m.set(0, 0, -BigInt::from((n as i64 + 1) / 2));
        for j in 1..=n {
            m.set(0, j, bi(1));
            m.set(j, 0, bi(1));
            m.set(j, j, bi(-2));
        }
        m
    }

    /// Independent oracle: invariant factors via gcds of k x k minors
    /// (determinantal divisors), determinants by Laplace expansion.
    fn laplace_det(m: &IntMatrix, rows: &[usize], cols: &[usize]) -> BigInt {
        if rows.is_empty() {
            return BigInt::one();
        }
        let mut acc = BigInt::zero();
        let r0 = rows[0];
        let rest: Vec<usize> = rows[1..].to_vec();
        for (k, &c) in cols.iter().enumerate() {
            let sub_cols: Vec<usize> = cols
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != k)
                .map(|(_, &v)| v)
                .collect();
            let minor = laplace_det(m, &rest, &sub_cols);
            let term = m.get(r0, c) * minor;
            if k % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    fn minors_gcd_invariants(m: &IntMatrix) -> Vec<BigInt> {
        fn combos(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for first in 0..n {
                for mut tail in combos(n, k - 1) {
                    if tail.iter().all(|&t| t > first) {
                        let mut v = vec![first];
                        v.append(&mut tail);
                        out.push(v);
                    }
                }
            }
            out.retain(|v| v.len() == k);
            out
        }
        let mut inv = Vec::new();
        let mut prev = BigInt::one();
        for k in 1..=m.rows().min(m.cols()) {
            let mut g = BigInt::zero();
            for rs in combos(m.rows(), k) {
                for cs in combos(m.cols(), k) {
                    g = g.gcd(&laplace_det(m, &rs, &cs));
                }
            }
            if g.is_zero() {
                break;
            }
            inv.push(&g / &prev);
            prev = g;
        }
        inv
    }

    #[test]
    fn snf_identity() {
        let m = IntMatrix::identity(2);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.s, IntMatrix::identity(2));
        assert_eq!(snf.u.mul(&m).mul(&snf.v), snf.s);
    }

    #[test]
    fn snf_diag_2_2() {
        let m = IntMatrix::diagonal(&[bi(2), bi(2)]);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.diagonal(), vec![bi(2), bi(2)]);
    }

    #[test]
    fn snf_arrowhead_n3() {
        // brute-forced by hand and against the minors-gcd oracle:
        // invariants (1, 1, 2, 2)
        let m = arrowhead(3);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.diagonal(), vec![bi(1), bi(1), bi(2), bi(2)]);
        assert_eq!(snf.u.mul(&m).mul(&snf.v), snf.s);
        assert_eq!(minors_gcd_invariants(&m), vec![bi(1), bi(1), bi(2), bi(2)]);
    }

    #[test]
    fn cokernel_examples() {
        let m = IntMatrix::diagonal(&[bi(2), bi(2)]);
        assert_eq!(cokernel(&m), FGAbelianGroup::elementary_two(2));

        assert_eq!(
            cokernel(&arrowhead(3)),
            FGAbelianGroup::elementary_two(2),
            "arrowhead n=3 cokernel is (Z/2)^2"
        );
        assert_eq!(cokernel(&arrowhead(5)), FGAbelianGroup::elementary_two(4));
    }

    #[test]
    fn det_examples() {
        assert_eq!(det(&IntMatrix::identity(3)).unwrap(), bi(1));
        assert_eq!(det(&arrowhead(3)).unwrap().abs(), bi(4));
        assert_eq!(det(&arrowhead(7)).unwrap().abs(), bi(64));
        let rect = IntMatrix::zero(2, 3);
        assert!(matches!(det(&rect), Err(AbgroupError::NotSquare { .. })));
    }

    #[test]
    fn solve_examples() {
        let m = IntMatrix::diagonal(&[bi(2)]);
        assert_eq!(solve_integer(&m, &[bi(4)]), Some(vec![bi(2)]));
        assert_eq!(solve_integer(&m, &[bi(3)]), None);

        let col = IntMatrix::from_i64_rows(&[vec![1], vec![1]]);
        assert_eq!(solve_integer(&col, &[bi(3), bi(3)]), Some(vec![bi(3)]));
        assert_eq!(solve_integer(&col, &[bi(3), bi(4)]), None);
    }

    #[test]
    fn tensor_and_annihilator() {
        let two = bi(2);
        let z = FGAbelianGroup::free(1);
        assert_eq!(z.tensor_mod(&two).unwrap(), FGAbelianGroup::cyclic(2));
        assert!(z.annihilator(&two).unwrap().is_trivial());

        let g = FGAbelianGroup::cyclic(4).direct_sum(&FGAbelianGroup::free(1));
        assert_eq!(g.tensor_mod(&two).unwrap(), FGAbelianGroup::elementary_two(2));
        assert_eq!(g.annihilator(&two).unwrap(), FGAbelianGroup::cyclic(2));

        // Z/D + Z^{v-1} with D = 6, v = 3
        let h = FGAbelianGroup::cyclic(6).direct_sum(&FGAbelianGroup::free(2));
        assert_eq!(h.annihilator(&two).unwrap(), FGAbelianGroup::cyclic(2));
        assert!(h.tensor_mod(&bi(1)).is_err());
    }

    #[test]
    fn canonical_form_display() {
        let g = FGAbelianGroup::from_orders(&[bi(2), bi(4), bi(0), bi(1)]);
        assert_eq!(g.to_string(), "Z/2 + Z/4 + Z");
        assert_eq!(FGAbelianGroup::trivial().to_string(), "0");
        assert_eq!(FGAbelianGroup::elementary_two(3).to_string(), "(Z/2)^3");
    }

    #[test]
    fn kernel_and_preimage() {
        // kernel of (2 -1; 0 0) acting on Z^2 ... x = (t, 2t)
        let m = IntMatrix::from_i64_rows(&[vec![2, -1], vec![0, 0]]);
        let k = kernel_basis(&m);
        assert_eq!(k.cols(), 1);
        let col = k.column(0);
        assert_eq!(&col[1], &(&col[0] * 2));

        // preimage of lattice 2Z^2 under doubling is Z^2
        let f = IntMatrix::diagonal(&[bi(2), bi(2)]);
        let r = IntMatrix::diagonal(&[bi(2), bi(2)]);
        let l = preimage_lattice(&f, &r);
        let full = lattice_express(&l, &IntMatrix::identity(2));
        assert!(full.is_some(), "preimage lattice must be all of Z^2");
    }

    #[test]
    fn subgroup_mod_examples() {
        // span of (1,1) in (Z/2)^2 is Z/2
        let gens = IntMatrix::from_i64_rows(&[vec![1], vec![1]]);
        assert_eq!(subgroup_mod(&gens, &bi(2), 2), FGAbelianGroup::cyclic(2));
        // span of (1,0),(0,1) is everything
        let gens = IntMatrix::identity(2);
        assert_eq!(
            subgroup_mod(&gens, &bi(2), 2),
            FGAbelianGroup::elementary_two(2)
        );
    }

    fn small_matrix() -> impl Strategy<Value = IntMatrix> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-6i64..7, r * c).prop_map(move |vals| {
                let rows: Vec<Vec<i64>> =
                    vals.chunks(c).map(|chunk| chunk.to_vec()).collect();
                IntMatrix::from_i64_rows(&rows)
            })
        })
    }

    fn unimodular(n: usize, seed: Vec<(usize, usize, i64)>) -> IntMatrix {
        let mut m = IntMatrix::identity(n);
        for (i, j, q) in seed {
            let (i, j) = (i % n, j % n);
            if i != j {
                m.add_row(i, j, &bi(q % 3));
            }
        }
        m
    }

    proptest! {
        #[test]
        fn snf_is_exact_decomposition(m in small_matrix()) {
            let snf = smith_normal_form(&m);
            prop_assert_eq!(snf.u.mul(&m).mul(&snf.v), snf.s.clone());
            prop_assert_eq!(det(&snf.u).unwrap().abs(), bi(1));
            prop_assert_eq!(det(&snf.v).unwrap().abs(), bi(1));
            prop_assert_eq!(snf.u.mul(&snf.u_inv), IntMatrix::identity(m.rows()));
            let d = snf.diagonal();
            for w in d.windows(2) {
                prop_assert!((&w[1] % &w[0]).is_zero(), "divisibility chain");
            }
        }

        #[test]
        fn snf_matches_minors_oracle(m in small_matrix()) {
            let snf = smith_normal_form(&m);
            prop_assert_eq!(snf.diagonal(), minors_gcd_invariants(&m));
        }

        #[test]
        fn cokernel_invariant_under_unimodular(
            m in small_matrix(),
            ops1 in proptest::collection::vec((0usize..5, 0usize..5, -2i64..3), 0..6),
            ops2 in proptest::collection::vec((0usize..5, 0usize..5, -2i64..3), 0..6),
        ) {
            let p = unimodular(m.rows(), ops1);
            let q = unimodular(m.cols(), ops2);
            prop_assert_eq!(cokernel(&m), cokernel(&p.mul(&m).mul(&q)));
        }

        #[test]
        fn det_is_snf_product(m in small_matrix()) {
            if m.is_square() {
                let d = det(&m).unwrap();
                let snf = smith_normal_form(&m);
                let prod: BigInt = if snf.rank() == m.rows() {
                    snf.diagonal().iter().product()
                } else {
                    BigInt::zero()
                };
                prop_assert_eq!(d.abs(), prod);
            }
        }

        #[test]
        fn solve_agrees_with_mul(m in small_matrix(), xs in proptest::collection::vec(-4i64..5, 4)) {
            let x: Vec<BigInt> = (0..m.cols()).map(|j| bi(xs[j % xs.len()])).collect();
            let b = m.mul_vec(&x);
            let sol = solve_integer(&m, &b).expect("constructed system must be solvable");
            prop_assert_eq!(m.mul_vec(&sol), b);
        }
    }
}
