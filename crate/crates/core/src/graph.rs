//! The essential ideal graph `E(Z_n)` and its structural decompositions.

use crate::error::{Error, Result};
use crate::ring::{
    enumerate_ideals, factorize, ideal_intersection, ideal_sum, FactoredInteger, IdealId,
};
use serde::Serialize;
use std::fmt::Write as _;

/// Default upper bound on the vertex count of a built graph.
pub const DEFAULT_MAX_VERTICES: usize = 4096;

/// Dense symmetric 0/1 matrix with zero diagonal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AdjacencyMatrix {
    order: usize,
    cells: Vec<bool>,
}

impl AdjacencyMatrix {
    pub fn empty(order: usize) -> Self {
        AdjacencyMatrix {
            order,
            cells: vec![false; order * order],
        }
    }

    pub fn complete(order: usize) -> Self {
        let mut a = Self::empty(order);
        for i in 0..order {
            for j in i + 1..order {
                a.set(i, j, true);
            }
        }
        a
    }

    /// Complete bipartite graph `K_{left,right}`.
    pub fn complete_bipartite(left: usize, right: usize) -> Self {
        let mut a = Self::empty(left + right);
        for i in 0..left {
            for j in left..left + right {
                a.set(i, j, true);
            }
        }
        a
    }

    /// Cycle `C_n`, `n >= 3`.
    pub fn cycle(order: usize) -> Self {
        let mut a = Self::empty(order);
        for i in 0..order {
            a.set(i, (i + 1) % order, true);
        }
        a
    }

    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut a = Self::empty(order);
        for &(i, j) in edges {
            if i == j || i >= order || j >= order {
                return Err(Error::Invalid(format!(
                    "bad edge ({i}, {j}) for order {order}"
                )));
            }
            a.set(i, j, true);
        }
        Ok(a)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.cells[i * self.order + j]
    }

    /// Sets both `(i, j)` and `(j, i)`; diagonal writes are ignored.
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        if i != j {
            self.cells[i * self.order + j] = value;
            self.cells[j * self.order + i] = value;
        }
    }

    pub fn row(&self, i: usize) -> &[bool] {
        &self.cells[i * self.order..(i + 1) * self.order]
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(i)
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(j, _)| j)
    }

    pub fn degree(&self, i: usize) -> usize {
        self.row(i).iter().filter(|&&b| b).count()
    }

    pub fn edge_count(&self) -> usize {
        self.cells.iter().filter(|&&b| b).count() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..self.order {
            for j in i + 1..self.order {
                if self.get(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn is_symmetric_irreflexive(&self) -> bool {
        (0..self.order).all(|i| {
            !self.get(i, i) && (i + 1..self.order).all(|j| self.get(i, j) == self.get(j, i))
        })
    }

    /// `Some(r)` when every vertex has degree `r`.
    pub fn regular_degree(&self) -> Option<usize> {
        let r = if self.order == 0 { 0 } else { self.degree(0) };
        (0..self.order).all(|i| self.degree(i) == r).then_some(r)
    }

    pub fn complement(&self) -> Self {
        let mut c = Self::empty(self.order);
        for i in 0..self.order {
            for j in i + 1..self.order {
                c.set(i, j, !self.get(i, j));
            }
        }
        c
    }

    /// `self ∨ other`: disjoint union plus every edge between the two parts.
    /// Vertices of `self` come first.
    pub fn join(&self, other: &Self) -> Self {
        let n1 = self.order;
        let mut a = Self::empty(n1 + other.order);
        for i in 0..a.order {
            for j in i + 1..a.order {
                let v = match (i < n1, j < n1) {
                    (true, true) => self.get(i, j),
                    (false, false) => other.get(i - n1, j - n1),
                    _ => true,
                };
                a.set(i, j, v);
            }
        }
        a
    }

    /// Subgraph induced on `vertices`, in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut a = Self::empty(vertices.len());
        for (x, &i) in vertices.iter().enumerate() {
            for (y, &j) in vertices.iter().enumerate().skip(x + 1) {
                a.set(x, y, self.get(i, j));
            }
        }
        a
    }

    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        (0..self.order)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|&b| if b { 1.0 } else { 0.0 })
                    .collect()
            })
            .collect()
    }
}

/// `E(Z_n)`: nonzero proper ideals, adjacent when their sum is essential.
#[derive(Debug, Clone)]
pub struct IdealGraph {
    ring: FactoredInteger,
    vertices: Vec<IdealId>,
    adjacency: AdjacencyMatrix,
    edge_count: usize,
}

impl IdealGraph {
    pub fn ring(&self) -> &FactoredInteger {
        &self.ring
    }

    pub fn vertices(&self) -> &[IdealId] {
        &self.vertices
    }

    pub fn adjacency(&self) -> &AdjacencyMatrix {
        &self.adjacency
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn generators(&self) -> Vec<u64> {
        self.vertices
            .iter()
            .map(|v| self.ring.generator(v))
            .collect()
    }

    /// Index of the vertex `<g>`.
    pub fn index_of(&self, g: u64) -> Option<usize> {
        let id = self.ring.ideal_of(g).ok()?;
        self.vertices.iter().position(|v| *v == id)
    }

    pub fn degree_sum(&self) -> usize {
        (0..self.order()).map(|i| self.adjacency.degree(i)).sum()
    }

    pub fn export(&self) -> GraphExport {
        GraphExport {
            n: self.ring.value(),
            factorization: self
                .ring
                .primes()
                .iter()
                .zip(self.ring.exponents())
                .map(|(&p, &m)| (p, m))
                .collect(),
            vertices: self.generators(),
            edges: self.adjacency.edges(),
        }
    }

    /// DIMACS edge format with 1-based vertex numbers; comment lines give the
    /// generator of each vertex.
    pub fn to_dimacs(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "c essential ideal graph of Z_{} ({})",
            self.ring.value(),
            self.ring
        );
        for (i, g) in self.generators().iter().enumerate() {
            let _ = writeln!(s, "c v {} {}", i + 1, g);
        }
        let _ = writeln!(s, "p edge {} {}", self.order(), self.edge_count);
        for (i, j) in self.adjacency.edges() {
            let _ = writeln!(s, "e {} {}", i + 1, j + 1);
        }
        s
    }
}

/// JSON form of a graph: vertices by generator, edges as index pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphExport {
    pub n: u64,
    pub factorization: Vec<(u64, u32)>,
    pub vertices: Vec<u64>,
    pub edges: Vec<(usize, usize)>,
}

/// True iff `r_i < m_i` for every `i`. The unit ideal qualifies.
pub fn is_essential(a: &IdealId, f: &FactoredInteger) -> Result<bool> {
    f.check(a.exponents())?;
    if a.is_zero_in(f) {
        return Err(Error::ZeroIdeal);
    }
    Ok(a.exponents().iter().zip(f.exponents()).all(|(r, m)| r < m))
}

/// Essentiality straight from the definition: the intersection with every
/// nonzero ideal of `Z_n` is nonzero.
pub fn is_essential_oracle(a: &IdealId, f: &FactoredInteger) -> Result<bool> {
    f.check(a.exponents())?;
    if a.is_zero_in(f) {
        return Err(Error::ZeroIdeal);
    }
    let zero = f.zero_ideal();
    let mut others = enumerate_ideals(f);
    others.push(f.unit_ideal());
    for l in &others {
        if ideal_intersection(a, l)? == zero {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn adjacent(a: &IdealId, b: &IdealId, f: &FactoredInteger) -> Result<bool> {
    if a == b {
        return Err(Error::SameVertex);
    }
    for x in [a, b] {
        if !x.is_vertex_of(f) {
            return Err(Error::Invalid(format!(
                "{:?} is not a nonzero proper ideal",
                x.exponents()
            )));
        }
    }
    is_essential(&ideal_sum(a, b)?, f)
}

pub fn build_graph(n: u64) -> Result<IdealGraph> {
    build_graph_capped(n, DEFAULT_MAX_VERTICES)
}

pub fn build_graph_capped(n: u64, max_vertices: usize) -> Result<IdealGraph> {
    build_from_ring(factorize(n)?, max_vertices)
}

pub fn build_from_ring(ring: FactoredInteger, max_vertices: usize) -> Result<IdealGraph> {
    let count = ring.vertex_count();
    if count > max_vertices {
        return Err(Error::VertexCap {
            n: ring.value(),
            vertices: count,
            cap: max_vertices,
        });
    }
    let vertices = enumerate_ideals(&ring);
    let mut adjacency = AdjacencyMatrix::empty(vertices.len());
    let bounds = ring.exponents();
    for (i, vi) in vertices.iter().enumerate() {
        let ri = vi.exponents();
        for (j, vj) in vertices.iter().enumerate().skip(i + 1) {
            let rj = vj.exponents();
            let essential_sum = ri
                .iter()
                .zip(rj)
                .zip(bounds)
                .all(|((x, y), m)| x.min(y) < m);
            adjacency.set(i, j, essential_sum);
        }
    }
    let edge_count = adjacency.edge_count();
    Ok(IdealGraph {
        ring,
        vertices,
        adjacency,
        edge_count,
    })
}

/// Vertices adjacent to every other vertex, ascending.
pub fn universal_vertices(g: &IdealGraph) -> Vec<usize> {
    let last = g.order().saturating_sub(1);
    (0..g.order())
        .filter(|&i| g.adjacency.degree(i) == last)
        .collect()
}

/// `E(Z_n) ≅ H ∨ K_m` split.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JoinDecomposition {
    /// Essential ideals; they induce `K_m` with `m = ∏ m_i - 1`.
    pub clique: Vec<usize>,
    /// Everything else; induces the k-partite part `H`.
    pub remainder: Vec<usize>,
}

pub fn join_decomposition(g: &IdealGraph) -> Result<JoinDecomposition> {
    let mut clique = Vec::new();
    let mut remainder = Vec::new();
    for (i, v) in g.vertices.iter().enumerate() {
        if is_essential(v, &g.ring)? {
            clique.push(i);
        } else {
            remainder.push(i);
        }
    }
    let expected = g.ring.essential_count();
    if clique.len() != expected {
        return Err(Error::Structure(format!(
            "clique has {} vertices, expected {expected}",
            clique.len()
        )));
    }
    let a = &g.adjacency;
    for (x, &i) in clique.iter().enumerate() {
        if let Some(&j) = clique[x + 1..].iter().find(|&&j| !a.get(i, j)) {
            return Err(Error::Structure(format!(
                "clique vertices {i} and {j} are not adjacent"
            )));
        }
        if let Some(&j) = remainder.iter().find(|&&j| !a.get(i, j)) {
            return Err(Error::Structure(format!(
                "clique vertex {i} misses remainder vertex {j}"
            )));
        }
    }
    Ok(JoinDecomposition { clique, remainder })
}

/// Disjoint blocks covering the vertex set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexPartition {
    pub blocks: Vec<Vec<usize>>,
    pub labels: Vec<String>,
}

impl VertexPartition {
    /// `counts[a][b]`: number of neighbors in block `b` of a vertex in block
    /// `a`, or `None` if that number is not constant over block `a`.
    pub fn quotient(&self, a: &AdjacencyMatrix) -> Option<Vec<Vec<usize>>> {
        let mut block_of = vec![usize::MAX; a.order()];
        for (b, block) in self.blocks.iter().enumerate() {
            for &v in block {
                block_of[v] = b;
            }
        }
        let nb = self.blocks.len();
        let mut out = Vec::with_capacity(nb);
        for block in &self.blocks {
            let mut counts: Option<Vec<usize>> = None;
            for &v in block {
                let mut c = vec![0usize; nb];
                for w in a.neighbors(v) {
                    c[block_of[w]] += 1;
                }
                match &counts {
                    None => counts = Some(c),
                    Some(prev) if *prev != c => return None,
                    Some(_) => {}
                }
            }
            out.push(counts.unwrap_or_else(|| vec![0; nb]));
        }
        Some(out)
    }
}

/// Blocks `V_t` (generators with exactly `t` prime factors) for squarefree
/// `n`, checked to be equitable with `C(k-t, s)` neighbors of a `V_t` vertex
/// in `V_s`.
pub fn equitable_partition(g: &IdealGraph) -> Result<VertexPartition> {
    if !g.ring.is_squarefree() {
        return Err(Error::NotSquarefree(g.ring.value()));
    }
    let k = g.ring.num_primes();
    let mut blocks = vec![Vec::new(); k - 1];
    for (i, v) in g.vertices.iter().enumerate() {
        blocks[v.support() - 1].push(i);
    }
    let labels = (1..k).map(|t| format!("V_{t}")).collect();
    let partition = VertexPartition { blocks, labels };
    let quotient = partition
        .quotient(&g.adjacency)
        .ok_or_else(|| Error::Structure("partition by prime count is not equitable".into()))?;
    for t in 1..k {
        if partition.blocks[t - 1].len() as u64 != binomial(k as u64, t as u64) {
            return Err(Error::Structure(format!("|V_{t}| != C({k}, {t})")));
        }
        for s in 1..k {
            let want = binomial((k - t) as u64, s as u64);
            let got = quotient[t - 1][s - 1] as u64;
            if got != want {
                return Err(Error::Structure(format!(
                    "V_{t} vertex has {got} neighbors in V_{s}, expected C({}, {s}) = {want}",
                    k - t
                )));
            }
        }
    }
    Ok(partition)
}

pub fn binomial(n: u64, r: u64) -> u64 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    (0..r).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::first_primes;

    fn ideal(f: &FactoredInteger, g: u64) -> IdealId {
        f.ideal_of(g).unwrap()
    }

    #[test]
    fn essential_examples() {
        let f = factorize(36).unwrap();
        assert!(is_essential(&ideal(&f, 6), &f).unwrap());
        assert!(!is_essential(&ideal(&f, 4), &f).unwrap());
        assert!(is_essential(&f.unit_ideal(), &f).unwrap());
        assert_eq!(is_essential(&f.zero_ideal(), &f), Err(Error::ZeroIdeal));
        assert_eq!(
            is_essential_oracle(&f.zero_ideal(), &f),
            Err(Error::ZeroIdeal)
        );

        assert!(is_essential_oracle(&f.ideal(&[1, 0]).unwrap(), &f).unwrap());
        assert!(!is_essential_oracle(&f.ideal(&[0, 2]).unwrap(), &f).unwrap());

        let sq = factorize(30).unwrap();
        for v in enumerate_ideals(&sq) {
            assert!(!is_essential(&v, &sq).unwrap());
            assert!(!is_essential_oracle(&v, &sq).unwrap());
        }

        let p3 = factorize(27).unwrap();
        assert!(is_essential_oracle(&p3.ideal(&[2]).unwrap(), &p3).unwrap());
    }

    #[test]
    fn adjacency_examples() {
        let f = factorize(36).unwrap();
        assert!(adjacent(&ideal(&f, 4), &ideal(&f, 9), &f).unwrap());
        assert!(!adjacent(&ideal(&f, 4), &ideal(&f, 12), &f).unwrap());
        assert_eq!(
            adjacent(&ideal(&f, 4), &ideal(&f, 4), &f),
            Err(Error::SameVertex)
        );
        assert!(adjacent(&ideal(&f, 4), &f.unit_ideal(), &f).is_err());

        let g = factorize(30).unwrap();
        assert!(!adjacent(&ideal(&g, 6), &ideal(&g, 10), &g).unwrap());
        assert!(adjacent(&ideal(&g, 6), &ideal(&g, 5), &g).unwrap());
    }

    /// Edge list transcribed from the drawing of E(Z_36).
    const FIG_EDGES_36: [(u64, u64); 19] = [
        (2, 3),
        (6, 2),
        (3, 6),
        (2, 4),
        (2, 12),
        (2, 9),
        (2, 18),
        (3, 4),
        (3, 12),
        (3, 9),
        (3, 18),
        (6, 4),
        (6, 12),
        (6, 9),
        (6, 18),
        (12, 9),
        (12, 18),
        (18, 4),
        (9, 4),
    ];

    #[test]
    fn z36_matches_drawn_edges() {
        let g = build_graph(36).unwrap();
        assert_eq!(g.order(), 7);
        assert_eq!(g.edge_count(), 19);
        let mut drawn = AdjacencyMatrix::empty(7);
        for (x, y) in FIG_EDGES_36 {
            drawn.set(g.index_of(x).unwrap(), g.index_of(y).unwrap(), true);
        }
        assert_eq!(&drawn, g.adjacency());
    }

    #[test]
    fn small_graphs() {
        let g = build_graph(8).unwrap();
        assert_eq!(g.adjacency(), &AdjacencyMatrix::complete(2));

        let g = build_graph(30).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.edge_count(), 6);
        // triangle on the primes, each prime matched to its cofactor
        let tri: Vec<usize> = [2, 3, 5].iter().map(|&p| g.index_of(p).unwrap()).collect();
        assert_eq!(g.adjacency().induced(&tri), AdjacencyMatrix::complete(3));
        for p in [2u64, 3, 5] {
            let nbrs: Vec<u64> = g
                .adjacency()
                .neighbors(g.index_of(30 / p).unwrap())
                .map(|j| g.generators()[j])
                .collect();
            assert_eq!(nbrs, vec![p]);
        }

        let g = build_graph(4).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn vertex_cap() {
        assert!(matches!(
            build_graph_capped(36, 6),
            Err(Error::VertexCap { vertices: 7, .. })
        ));
        assert!(build_graph_capped(36, 7).is_ok());
    }

    #[test]
    fn universal_examples() {
        let g = build_graph(36).unwrap();
        let gens = g.generators();
        let mut u: Vec<u64> = universal_vertices(&g).iter().map(|&i| gens[i]).collect();
        u.sort();
        assert_eq!(u, vec![2, 3, 6]);
        assert!(universal_vertices(&build_graph(30).unwrap()).is_empty());
        assert_eq!(
            universal_vertices(&build_graph(3u64.pow(6)).unwrap()).len(),
            5
        );
    }

    #[test]
    fn join_examples() {
        let g = build_graph(36).unwrap();
        let jd = join_decomposition(&g).unwrap();
        assert_eq!(jd.clique.len(), 3);
        let h = g.adjacency().induced(&jd.remainder);
        assert_eq!(h.edge_count(), 4);
        assert_eq!(h.regular_degree(), Some(2));

        let g = build_graph(2u64.pow(2) * 3u64.pow(3)).unwrap();
        let jd = join_decomposition(&g).unwrap();
        assert_eq!(jd.clique.len(), 5);
        assert_eq!(g.adjacency().induced(&jd.remainder).edge_count(), 6);

        assert!(join_decomposition(&build_graph(30).unwrap())
            .unwrap()
            .clique
            .is_empty());
    }

    #[test]
    fn equitable_examples() {
        let p = equitable_partition(&build_graph(30).unwrap()).unwrap();
        assert_eq!(
            p.blocks.iter().map(Vec::len).collect::<Vec<_>>(),
            vec![3, 3]
        );
        let g = build_graph(30).unwrap();
        assert_eq!(
            p.quotient(g.adjacency()).unwrap(),
            vec![vec![2, 1], vec![1, 0]]
        );

        let p = equitable_partition(&build_graph(210).unwrap()).unwrap();
        assert_eq!(
            p.blocks.iter().map(Vec::len).collect::<Vec<_>>(),
            vec![4, 6, 4]
        );

        let g = build_graph(6).unwrap();
        let p = equitable_partition(&g).unwrap();
        assert_eq!(p.blocks, vec![vec![0, 1]]);
        assert_eq!(p.quotient(g.adjacency()).unwrap(), vec![vec![1]]);

        assert_eq!(
            equitable_partition(&build_graph(36).unwrap()).unwrap_err(),
            Error::NotSquarefree(36)
        );

        let n: u64 = first_primes(6).iter().product();
        assert!(equitable_partition(&build_graph(n).unwrap()).is_ok());
    }

    #[test]
    fn exports() {
        let g = build_graph(36).unwrap();
        let e = g.export();
        assert_eq!(e.vertices, vec![2, 4, 3, 9, 12, 6, 18]);
        assert_eq!(e.edges.len(), 19);
        let d = g.to_dimacs();
        assert!(d.contains("p edge 7 19\n"));
        assert_eq!(d.lines().filter(|l| l.starts_with("e ")).count(), 19);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(binomial(0, 0), 1);
    }
}
