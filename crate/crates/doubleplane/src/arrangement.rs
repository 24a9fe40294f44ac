//! Bipartite arrangement graphs of projective curves, their cycle space, and
//! symbol algebras realized as cycles: `_dB(R)` is `H_1(Gamma, Z/d)` and the
//! symbol `(alpha, beta)_d` becomes a weighted cycle through the intersection
//! points of the ramification divisor.

use crate::abgroup::{subgroup_mod, FGAbelianGroup, IntMatrix};
use crate::polyring::{resultant, root_multiplicity, HyperellipticSpec, Poly, Rat, Var};
use num::{BigInt, One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArrangementError {
    #[error("lines {0} and {1} coincide")]
    DuplicateLine(usize, usize),
    #[error("unknown curve {0:?} in symbol divisor")]
    UnknownCurve(String),
    #[error("divisor has nonzero total degree {0}; symbols need degree-zero functions")]
    NotDegreeZero(i64),
    #[error("chain has nonzero boundary; malformed symbol data")]
    MalformedChain,
    #[error("graph is disconnected ({0} components)")]
    Disconnected(usize),
    #[error("branch multiplicities must have even gcd; got D = {0}")]
    OddGcd(u64),
    #[error("resultant multiplicity at root {0} is {1}, expected e_i/2 = {2}")]
    MultiplicityMismatch(String, u32, u64),
}

/// Point of the projective plane with exact rational coordinates
/// `(X : Y : X0)`, normalized so the first nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ProjPoint {
    coords: [Rat; 3],
}

impl ProjPoint {
    pub fn new(x: Rat, y: Rat, x0: Rat) -> Option<Self> {
        let mut coords = [x, y, x0];
        let pivot = coords.iter().find(|c| !c.is_zero())?.clone();
        for c in &mut coords {
            *c /= &pivot;
        }
        Some(ProjPoint { coords })
    }

    pub fn affine(x: Rat, y: Rat) -> Self {
        Self::new(x, y, Rat::one()).expect("affine point is nonzero")
    }

    pub fn is_at_infinity(&self) -> bool {
        self.coords[2].is_zero()
    }

    pub fn label(&self) -> String {
        fn show(r: &Rat) -> String {
            if r.denom().is_one() {
                r.numer().to_string()
            } else {
                format!("{}/{}", r.numer(), r.denom())
            }
        }
        if self.is_at_infinity() {
            format!("({}:{}:0)", show(&self.coords[0]), show(&self.coords[1]))
        } else {
            let x = &self.coords[0] / &self.coords[2];
            let y = &self.coords[1] / &self.coords[2];
            format!("({},{})", show(&x), show(&y))
        }
    }
}

/// Line `aX + bY + cX0 = 0` in the projective plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjLine {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
}

impl ProjLine {
    /// The affine line `ax + by + c = 0`.
    pub fn affine(a: Rat, b: Rat, c: Rat) -> Self {
        assert!(!(a.is_zero() && b.is_zero()), "degenerate line");
        ProjLine { a, b, c }
    }

    /// `a x + b y` through the origin.
    pub fn through_origin(a: Rat, b: Rat) -> Self {
        Self::affine(a, b, Rat::zero())
    }

    pub fn infinity() -> Self {
        ProjLine {
            a: Rat::zero(),
            b: Rat::zero(),
            c: Rat::one(),
        }
    }

    pub fn is_proportional_to(&self, other: &ProjLine) -> bool {
        let cross = [
            &self.a * &other.b - &self.b * &other.a,
            &self.a * &other.c - &self.c * &other.a,
            &self.b * &other.c - &self.c * &other.b,
        ];
        cross.iter().all(Rat::is_zero)
    }

    pub fn intersect(&self, other: &ProjLine) -> Option<ProjPoint> {
        ProjPoint::new(
            &self.b * &other.c - &self.c * &other.b,
            &self.c * &other.a - &self.a * &other.c,
            &self.a * &other.b - &self.b * &other.a,
        )
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        (&self.a * &p.coords[0] + &self.b * &p.coords[1] + &self.c * &p.coords[2]).is_zero()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CurveInfo {
    pub name: String,
    pub degree: i64,
}

#[derive(Clone, Debug)]
pub struct PointInfo {
    pub label: String,
    pub point: ProjPoint,
}

impl Serialize for PointInfo {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.label.serialize(serializer)
    }
}

/// Formal degree-zero divisor supported on named curves; the function whose
/// symbol is being computed, recorded by its zero/pole orders.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CurveDivisor {
    coeffs: BTreeMap<String, i64>,
}

impl CurveDivisor {
    pub fn new() -> Self {
        CurveDivisor::default()
    }

    pub fn with(mut self, curve: &str, mult: i64) -> Self {
        if mult != 0 {
            let e = self.coeffs.entry(curve.to_string()).or_insert(0);
            *e += mult;
            if *e == 0 {
                self.coeffs.remove(curve);
            }
        }
        self
    }

    pub fn add(&self, other: &CurveDivisor) -> CurveDivisor {
        let mut out = self.clone();
        for (c, m) in &other.coeffs {
            out = out.with(c, *m);
        }
        out
    }

    pub fn coeff(&self, curve: &str) -> i64 {
        self.coeffs.get(curve).copied().unwrap_or(0)
    }

    fn support(&self) -> impl Iterator<Item = (&String, &i64)> {
        self.coeffs.iter()
    }
}

/// 1-chain on the incidence edges of an arrangement graph, indexed like
/// `ArrangementGraph::edges`, oriented curve -> point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeChain {
    pub coeffs: Vec<i64>,
}

impl EdgeChain {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &EdgeChain) -> EdgeChain {
        EdgeChain {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn neg(&self) -> EdgeChain {
        EdgeChain {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Coordinates of a Brauer class in the fundamental-cycle basis of
/// `H_1(Gamma, Z/d)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BrauerClassCoords {
    pub modulus: u64,
    /// integer coordinates reduced to `0..modulus`
    pub coords: Vec<u64>,
}

impl BrauerClassCoords {
    /// Least k >= 1 with k * coords = 0 mod d.
    pub fn order(&self) -> u64 {
        let g = self
            .coords
            .iter()
            .fold(self.modulus, |acc, &c| num::integer::gcd(acc, c));
        self.modulus / num::integer::gcd(self.modulus, g)
    }

    pub fn is_trivial(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

/// Bipartite incidence graph of a curve arrangement, with local intersection
/// multiplicities and, optionally, external curves that are tracked for
/// symbol data without becoming graph vertices.
#[derive(Clone, Debug)]
pub struct ArrangementGraph {
    curves: Vec<CurveInfo>,
    points: Vec<PointInfo>,
    edges: Vec<(usize, usize)>,
    /// (min curve, max curve, point) -> local intersection multiplicity
    pair_mult: BTreeMap<(usize, usize, usize), i64>,
    externals: Vec<CurveInfo>,
    /// (external, vertex curve, point) -> local intersection multiplicity
    ext_mult: BTreeMap<(usize, usize, usize), i64>,
}

enum CurveRef {
    Vertex(usize),
    External(usize),
}

impl ArrangementGraph {
    pub fn curves(&self) -> &[CurveInfo] {
        &self.curves
    }

    pub fn points(&self) -> &[PointInfo] {
        &self.points
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.curves.len() + self.points.len()
    }

    fn find_curve(&self, name: &str) -> Result<CurveRef, ArrangementError> {
        if let Some(i) = self.curves.iter().position(|c| c.name == name) {
            return Ok(CurveRef::Vertex(i));
        }
        if let Some(i) = self.externals.iter().position(|c| c.name == name) {
            return Ok(CurveRef::External(i));
        }
        Err(ArrangementError::UnknownCurve(name.to_string()))
    }

    fn curve_degree(&self, r: &CurveRef) -> i64 {
        match r {
            CurveRef::Vertex(i) => self.curves[*i].degree,
            CurveRef::External(i) => self.externals[*i].degree,
        }
    }

    fn local_mult(&self, vertex_curve: usize, other: &CurveRef, point: usize) -> i64 {
        match other {
            CurveRef::Vertex(j) => {
                let key = (
                    vertex_curve.min(*j),
                    vertex_curve.max(*j),
                    point,
                );
                self.pair_mult.get(&key).copied().unwrap_or(0)
            }
            CurveRef::External(e) => self
                .ext_mult
                .get(&(*e, vertex_curve, point))
                .copied()
                .unwrap_or(0),
        }
    }

    fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        // vertex ids: curves 0..C, points C..C+S; entries (neighbor, edge index)
        let c = self.curves.len();
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for (ei, &(cu, pt)) in self.edges.iter().enumerate() {
            adj[cu].push((c + pt, ei));
            adj[c + pt].push((cu, ei));
        }
        for list in &mut adj {
            list.sort();
        }
        adj
    }

    fn bfs_root(&self) -> usize {
        self.curves
            .iter()
            .position(|c| c.name == "F0")
            .unwrap_or(0)
    }

    fn components(&self) -> usize {
        let adj = self.adjacency();
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut comps = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            comps += 1;
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(v) = queue.pop_front() {
                for &(w, _) in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        comps
    }

    /// Cycle rank `e - V + c`; also reports the component count, which is 1
    /// for every arrangement in scope.
    pub fn cycle_rank(&self) -> (i64, usize) {
        let comps = self.components();
        (
            self.edge_count() as i64 - self.vertex_count() as i64 + comps as i64,
            comps,
        )
    }

    /// Spanning tree by deterministic BFS from F0 (or the first curve), as
    /// parent edges; `None` marks the root or unreached vertices.
    fn spanning_tree(&self) -> Vec<Option<(usize, usize)>> {
        let adj = self.adjacency();
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; self.vertex_count()];
        let mut seen = vec![false; self.vertex_count()];
        let root = self.bfs_root();
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &(w, ei) in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some((v, ei));
                    queue.push_back(w);
                }
            }
        }
        parent
    }

    fn non_tree_edges(&self) -> Vec<usize> {
        let parent = self.spanning_tree();
        let tree: Vec<usize> = parent.iter().flatten().map(|&(_, ei)| ei).collect();
        (0..self.edges.len())
            .filter(|ei| !tree.contains(ei))
            .collect()
    }

    /// Fundamental cycle basis of the cycle space, one chain per non-tree
    /// edge, each with zero boundary.
    pub fn fundamental_cycles(&self) -> Vec<EdgeChain> {
        let parent = self.spanning_tree();
        let c = self.curves.len();
        let mut cycles = Vec::new();
        for ei in self.non_tree_edges() {
            let (cu, pt) = self.edges[ei];
            let mut chain = vec![0i64; self.edges.len()];
            chain[ei] += 1; // traversed curve -> point
            // close along the tree path from the point back to the curve
            let path_from = |mut v: usize| {
                let mut anc = vec![v];
                while let Some((p, _)) = parent[v] {
                    anc.push(p);
                    v = p;
                }
                anc
            };
            let up_pt = path_from(c + pt);
            let up_cu = path_from(cu);
            let common: usize = *up_pt
                .iter()
                .find(|v| up_cu.contains(v))
                .expect("connected component shares an ancestor");
            // walk point -> common: traversal v -> parent(v)
            let mut v = c + pt;
            while v != common {
                let (p, e) = parent[v].expect("path to ancestor");
                // orientation of edge e is curve -> point
                if v >= c {
                    chain[e] -= 1; // traversed point -> curve
                } else {
                    chain[e] += 1;
                }
                v = p;
            }
            // walk common -> curve: reverse of curve -> common
            let mut v = cu;
            while v != common {
                let (p, e) = parent[v].expect("path to ancestor");
                // traversal in the cycle goes parent -> v, opposite of v -> parent
                if v >= c {
                    chain[e] += 1;
                } else {
                    chain[e] -= 1;
                }
                v = p;
            }
            cycles.push(EdgeChain { coeffs: chain });
        }
        cycles
    }

    /// Boundary of a chain over the vertices (points then curves get + and -
    /// of the coefficient, respectively).
    pub fn boundary(&self, chain: &EdgeChain) -> Vec<i64> {
        let c = self.curves.len();
        let mut bd = vec![0i64; self.vertex_count()];
        for (ei, &(cu, pt)) in self.edges.iter().enumerate() {
            bd[cu] -= chain.coeffs[ei];
            bd[c + pt] += chain.coeffs[ei];
        }
        bd
    }

    /// The tame-symbol 1-chain of `(alpha, beta)_d`: on the edge from curve
    /// `F_t` into the point `P`, the weight is
    /// `sum_u (a_t b_u - b_t a_u) * (F_t . F_u)_P`.
    ///
    /// Near a simple intersection of `F_i` and `F_j` this is the picture
    /// `F_i --mu--> P --(-mu)--> F_j`, and the divisor-at-infinity entries of
    /// `a` and `b` close the chain into a cycle.
    pub fn symbol_chain(
        &self,
        alpha: &CurveDivisor,
        beta: &CurveDivisor,
    ) -> Result<EdgeChain, ArrangementError> {
        for d in [alpha, beta] {
            let mut total = 0i64;
            for (name, mult) in d.support() {
                let cref = self.find_curve(name)?;
                total += mult * self.curve_degree(&cref);
            }
            if total != 0 {
                return Err(ArrangementError::NotDegreeZero(total));
            }
        }
        let support: Vec<(CurveRef, i64, i64)> = {
            let mut names: Vec<&String> = alpha.support().map(|(n, _)| n).collect();
            names.extend(beta.support().map(|(n, _)| n));
            names.sort();
            names.dedup();
            names
                .into_iter()
                .map(|n| {
                    let cref = self.find_curve(n)?;
                    Ok((cref, alpha.coeff(n), beta.coeff(n)))
                })
                .collect::<Result<_, ArrangementError>>()?
        };
        let mut chain = vec![0i64; self.edges.len()];
        for (ei, &(t, pt)) in self.edges.iter().enumerate() {
            let a_t = alpha.coeff(&self.curves[t].name);
            let b_t = beta.coeff(&self.curves[t].name);
            let mut w = 0i64;
            for (u_ref, a_u, b_u) in &support {
                let skew = a_t * b_u - b_t * a_u;
                if skew == 0 {
                    continue;
                }
                w += skew * self.local_mult(t, u_ref, pt);
            }
            chain[ei] = w;
        }
        let chain = EdgeChain { coeffs: chain };
        if self.boundary(&chain).iter().any(|&b| b != 0) {
            return Err(ArrangementError::MalformedChain);
        }
        Ok(chain)
    }

    /// Coordinates of a zero-boundary chain in the fundamental-cycle basis,
    /// reduced mod `d`.
    pub fn brauer_class(
        &self,
        chain: &EdgeChain,
        d: u64,
    ) -> Result<BrauerClassCoords, ArrangementError> {
        let cycles = self.fundamental_cycles();
        let non_tree = self.non_tree_edges();
        let coords: Vec<i64> = non_tree.iter().map(|&ei| chain.coeffs[ei]).collect();
        // a cycle is determined by its non-tree coefficients; check residual
        let mut residual = chain.clone();
        for (x, cyc) in coords.iter().zip(&cycles) {
            for (r, c) in residual.coeffs.iter_mut().zip(&cyc.coeffs) {
                *r -= x * c;
            }
        }
        if !residual.is_zero() {
            return Err(ArrangementError::MalformedChain);
        }
        Ok(BrauerClassCoords {
            modulus: d,
            coords: coords
                .iter()
                .map(|&c| c.rem_euclid(d as i64) as u64)
                .collect(),
        })
    }

    pub fn symbol_class(
        &self,
        alpha: &CurveDivisor,
        beta: &CurveDivisor,
        d: u64,
    ) -> Result<BrauerClassCoords, ArrangementError> {
        let chain = self.symbol_chain(alpha, beta)?;
        self.brauer_class(&chain, d)
    }

    /// The subgroup of `H_1(Gamma, Z/d)` generated by the given classes.
    pub fn class_span(&self, classes: &[BrauerClassCoords], d: u64) -> FGAbelianGroup {
        let (rank, _) = self.cycle_rank();
        let rank = rank.max(0) as usize;
        let cols: Vec<Vec<BigInt>> = classes
            .iter()
            .map(|c| c.coords.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let gens = IntMatrix::from_columns(rank, &cols);
        subgroup_mod(&gens, &BigInt::from(d), rank)
    }

    /// `H_1(Gamma, Z/d)` itself, as `(Z/d)^rank`.
    pub fn homology(&self, d: u64) -> FGAbelianGroup {
        let (rank, _) = self.cycle_rank();
        let rank = rank.max(0) as usize;
        FGAbelianGroup::from_orders(&vec![BigInt::from(d); rank])
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph arrangement {\n");
        for c in &self.curves {
            let _ = writeln!(out, "  \"{}\" [shape=box];", c.name);
        }
        for p in &self.points {
            let _ = writeln!(out, "  \"{}\" [shape=ellipse];", p.label);
        }
        for &(cu, pt) in &self.edges {
            let _ = writeln!(
                out,
                "  \"{}\" -- \"{}\";",
                self.curves[cu].name, self.points[pt].label
            );
        }
        out.push_str("}\n");
        out
    }
}

impl Serialize for ArrangementGraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("ArrangementGraph", 7)?;
        st.serialize_field("curves", &self.curves)?;
        st.serialize_field("points", &self.points)?;
        let edges: Vec<(String, String)> = self
            .edges
            .iter()
            .map(|&(c, p)| (self.curves[c].name.clone(), self.points[p].label.clone()))
            .collect();
        st.serialize_field("edges", &edges)?;
        let mults: Vec<(String, String, String, i64)> = self
            .pair_mult
            .iter()
            .map(|(&(a, b, p), &m)| {
                (
                    self.curves[a].name.clone(),
                    self.curves[b].name.clone(),
                    self.points[p].label.clone(),
                    m,
                )
            })
            .collect();
        st.serialize_field("intersection_multiplicities", &mults)?;
        st.serialize_field("edge_count", &self.edge_count())?;
        st.serialize_field("point_count", &self.point_count())?;
        st.serialize_field("cycle_rank", &self.cycle_rank().0)?;
        st.end()
    }
}

/// Build the graph of a line arrangement. Point vertices are the distinct
/// pairwise intersection points, merged when several lines share one.
pub fn build_line_graph(
    lines: &[(String, ProjLine)],
    include_infinity: bool,
) -> Result<ArrangementGraph, ArrangementError> {
    let mut all: Vec<(String, ProjLine)> = lines.to_vec();
    if include_infinity {
        all.push(("F0".to_string(), ProjLine::infinity()));
    }
    for i in 0..all.len() {
        for j in i + 1..all.len() {
            if all[i].1.is_proportional_to(&all[j].1) {
                return Err(ArrangementError::DuplicateLine(i, j));
            }
        }
    }
    let mut pts: Vec<ProjPoint> = Vec::new();
    for i in 0..all.len() {
        for j in i + 1..all.len() {
            let p = all[i]
                .1
                .intersect(&all[j].1)
                .expect("distinct lines intersect");
            if !pts.contains(&p) {
                pts.push(p);
            }
        }
    }
    pts.sort();
    let points: Vec<PointInfo> = pts
        .into_iter()
        .map(|p| PointInfo {
            label: p.label(),
            point: p,
        })
        .collect();
    let curves: Vec<CurveInfo> = all
        .iter()
        .map(|(name, _)| CurveInfo {
            name: name.clone(),
            degree: 1,
        })
        .collect();
    let mut edges = Vec::new();
    let mut pair_mult = BTreeMap::new();
    for (pi, pinfo) in points.iter().enumerate() {
        let on: Vec<usize> = all
            .iter()
            .enumerate()
            .filter(|(_, (_, l))| l.contains(&pinfo.point))
            .map(|(i, _)| i)
            .collect();
        for &ci in &on {
            edges.push((ci, pi));
        }
        for a in 0..on.len() {
            for b in a + 1..on.len() {
                pair_mult.insert((on[a], on[b], pi), 1);
            }
        }
    }
    edges.sort();
    Ok(ArrangementGraph {
        curves,
        points,
        edges,
        pair_mult,
        externals: Vec::new(),
        ext_mult: BTreeMap::new(),
    })
}

/// Resultant-verified intersection data for the branch-curve arrangement.
#[derive(Clone, Debug, Serialize)]
pub struct BranchIntersection {
    pub point: String,
    /// local intersection multiplicity of F1 and F2, equal to e_i/2
    pub multiplicity: u64,
}

/// The arrangement `F1 + F2 + F0` of the two branch components
/// `F1 = Z(y - q)`, `F2 = Z(y + q)` of `y^2 - p` with `p = q^2`, plus the
/// vertical lines `L_i = Z(x - alpha_i)` tracked as external curves.
///
/// Finite multiplicities come from the resultant of the two branches; the
/// infinity weights are the Bezout remainders at the shared point at infinity
/// `(0:1:0)` where `y != 0` and `x = 0`.
pub fn hyperelliptic_branch_graph(
    spec: &HyperellipticSpec,
) -> Result<(ArrangementGraph, Vec<BranchIntersection>), ArrangementError> {
    let d_gcd = spec.gcd_mult();
    if !d_gcd.is_multiple_of(2) {
        return Err(ArrangementError::OddGcd(d_gcd));
    }
    let q = spec.q().expect("even gcd has a square root");
    let m = q.degree(Var::X).unwrap_or(0) as i64;
    let f1 = Poly::var(Var::Y).sub(&q);
    let f2 = Poly::var(Var::Y).add(&q);
    // res_y(y - q, y + q) = 2q up to sign; its root multiplicities are the
    // local intersection numbers of the two branches at the P_i
    let res = resultant(&f1, &f2, Var::Y).expect("branches are nonconstant in y");
    let mut mults = Vec::new();
    for (i, root) in spec.roots().iter().enumerate() {
        let mu = root_multiplicity(&res, Var::X, root).expect("resultant is nonzero");
        let expected = spec.mults()[i] / 2;
        if mu as u64 != expected {
            return Err(ArrangementError::MultiplicityMismatch(
                root.to_string(),
                mu,
                expected,
            ));
        }
        mults.push(mu as i64);
    }

    let infinity_of = |poly: &Poly| -> ProjPoint {
        if m >= 2 {
            ProjPoint::new(Rat::zero(), Rat::one(), Rat::zero()).unwrap()
        } else {
            // Z(y + sx + c) is the line y = -sx - c, direction (1 : -s : 0)
            let s = poly.coeff_of(Var::X, 1).constant_coeff();
            ProjPoint::new(Rat::one(), -s, Rat::zero()).unwrap()
        }
    };
    let inf1 = infinity_of(&f1);
    let inf2 = infinity_of(&f2);

    let mut pts: Vec<ProjPoint> = spec
        .roots()
        .iter()
        .map(|r| ProjPoint::affine(r.clone(), Rat::zero()))
        .collect();
    for p in [inf1.clone(), inf2.clone()] {
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    let finite_label = |i: usize| format!("P{}", i + 1);
    let points: Vec<PointInfo> = pts
        .iter()
        .enumerate()
        .map(|(i, p)| PointInfo {
            label: if i < spec.v() {
                finite_label(i)
            } else if m >= 2 {
                "P0".to_string()
            } else {
                p.label()
            },
            point: p.clone(),
        })
        .collect();
    let pt_index = |p: &ProjPoint| pts.iter().position(|q| q == p).unwrap();

    let curves = vec![
        CurveInfo { name: "F1".into(), degree: m },
        CurveInfo { name: "F2".into(), degree: m },
        CurveInfo { name: "F0".into(), degree: 1 },
    ];
    let (ci_f1, ci_f2, ci_f0) = (0usize, 1usize, 2usize);

    let mut edges = Vec::new();
    for i in 0..spec.v() {
        edges.push((ci_f1, i));
        edges.push((ci_f2, i));
    }
    edges.push((ci_f1, pt_index(&inf1)));
    edges.push((ci_f2, pt_index(&inf2)));
    edges.push((ci_f0, pt_index(&inf1)));
    edges.push((ci_f0, pt_index(&inf2)));
    edges.sort();
    edges.dedup();

    let mut pair_mult = BTreeMap::new();
    for (i, &mu) in mults.iter().enumerate() {
        pair_mult.insert((ci_f1, ci_f2, i), mu);
    }
    if inf1 == inf2 {
        // Bezout remainder m^2 - m of F1.F2 sits at the shared infinity point
        let at_inf = m * m - m;
        if at_inf > 0 {
            pair_mult.insert((ci_f1, ci_f2, pt_index(&inf1)), at_inf);
        }
    }
    pair_mult.insert((ci_f1, ci_f0, pt_index(&inf1)), m);
    pair_mult.insert((ci_f2, ci_f0, pt_index(&inf2)), m);

    let externals: Vec<CurveInfo> = (0..spec.v())
        .map(|i| CurveInfo {
            name: format!("L{}", i + 1),
            degree: 1,
        })
        .collect();
    let mut ext_mult = BTreeMap::new();
    let shared_inf = ProjPoint::new(Rat::zero(), Rat::one(), Rat::zero()).unwrap();
    for i in 0..spec.v() {
        // L_i meets each branch once at P_i (verified by the resultant of the
        // branch with the vertical line, which is l_i itself)
        let ell = spec.ell(i);
        let res1 = resultant(&f1, &ell, Var::Y).expect("line is y-constant");
        let mu1 = root_multiplicity(&res1, Var::X, &spec.roots()[i]).unwrap();
        debug_assert_eq!(mu1, 1);
        ext_mult.insert((i, ci_f1, i), mu1 as i64);
        ext_mult.insert((i, ci_f2, i), mu1 as i64);
        if m >= 2 {
            // remaining m - 1 intersections with each branch at (0:1:0)
            let p0 = pt_index(&shared_inf);
            if m > 1 {
                ext_mult.insert((i, ci_f1, p0), m - 1);
                ext_mult.insert((i, ci_f2, p0), m - 1);
            }
            ext_mult.insert((i, ci_f0, p0), 1);
        }
    }

    let graph = ArrangementGraph {
        curves,
        points,
        edges,
        pair_mult,
        externals,
        ext_mult,
    };
    let report = mults
        .iter()
        .enumerate()
        .map(|(i, &mu)| BranchIntersection {
            point: finite_label(i),
            multiplicity: mu as u64,
        })
        .collect();
    Ok((graph, report))
}

/// Divisor of the degree-zero function `prod f_i^{k_i}` on the arrangement of
/// the lines `F_i` with the line at infinity: each `f_i` contributes
/// `F_i - F0`.
pub fn line_function_divisor(exponents: &[(String, i64)]) -> CurveDivisor {
    let mut div = CurveDivisor::new();
    let mut total = 0i64;
    for (name, k) in exponents {
        div = div.with(name, *k);
        total += k;
    }
    div.with("F0", -total)
}
