//! Vertices of the trapezoid polytope with fixed `λ`, `λ̄` and `μ = 0`.
//!
//! A vertex flow has a support that is an undirected forest. Its roots are the top
//! nodes with positive supply and its leaves the bottom nodes with positive demand.
//! Forests are found by backtracking layer by layer. Every node reached from above
//! picks a nonempty set of out-edges, and a union-find rejects cycles.

use num_traits::{Signed, Zero};

use super::{Edge, Flow, FlowGraph};
use crate::array::StripConcaveArray;
use crate::error::{Error, Result};
use crate::rat::{zero, Rat};

/// An edge set of `H_{n,m}` without undirected cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Forest {
    pub graph: FlowGraph,
    pub edges: Vec<Edge>,
}

struct Nodes {
    graph: FlowGraph,
    offset: Vec<usize>,
}

impl Nodes {
    fn new(graph: FlowGraph) -> Self {
        let mut offset = vec![0];
        for i in 0..=graph.n {
            offset.push(offset[i] + graph.width(i));
        }
        Nodes { graph, offset }
    }

    fn id(&self, (i, j): (usize, usize)) -> usize {
        self.offset[i] + j
    }

    fn count(&self) -> usize {
        self.offset[self.graph.n + 1]
    }
}

#[derive(Clone)]
struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&self, mut x: usize) -> usize {
        while self.0[x] != x {
            x = self.0[x];
        }
        x
    }

    /// Joins the classes of `a` and `b`; false if they were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra] = rb;
        true
    }
}

impl Forest {
    /// Net supply (outflow minus inflow) demanded at every node by `λ`, `λ̄`.
    fn supplies(graph: FlowGraph, lambda: &[Rat], lambda_bar: &[Rat]) -> Vec<Vec<Rat>> {
        let n = graph.n;
        let z = zero();
        let top = |j: usize| if j == 0 { &lambda[0] } else { lambda_bar.get(j - 1).unwrap_or(&z) };
        let bottom = |j: usize| if j == 0 { &lambda[0] } else { lambda.get(j - 1).unwrap_or(&z) };
        (0..=n)
            .map(|i| {
                (0..graph.width(i))
                    .map(|j| {
                        if i == 0 {
                            top(j) - top(j + 1)
                        } else if i == n {
                            bottom(j + 1) - bottom(j)
                        } else {
                            zero()
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// The unique flow supported on this forest with the given node supplies,
    /// or `None` if some edge would carry a nonpositive value or a tree is unbalanced.
    fn flow(&self, supply: &[Vec<Rat>]) -> Option<Flow> {
        let nodes = Nodes::new(self.graph);
        let mut value = vec![zero(); nodes.count()];
        for (i, row) in supply.iter().enumerate() {
            for (j, s) in row.iter().enumerate() {
                value[nodes.id((i, j))] = s.clone();
            }
        }
        let ends: Vec<(usize, usize)> =
            self.edges.iter().map(|e| (nodes.id((e.layer, e.col)), nodes.id(e.head()))).collect();
        let mut adj = vec![Vec::new(); nodes.count()];
        for (k, &(u, v)) in ends.iter().enumerate() {
            adj[u].push((v, k));
            adj[v].push((u, k));
        }
        // Sum of supplies on the side of `start` once edge `skip` is removed.
        let side = |start: usize, skip: Option<usize>| -> Rat {
            let mut seen = vec![false; nodes.count()];
            let mut stack = vec![start];
            seen[start] = true;
            let mut acc = zero();
            while let Some(u) = stack.pop() {
                acc += &value[u];
                for &(w, k) in &adj[u] {
                    if Some(k) != skip && !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            acc
        };
        for &(u, _) in &ends {
            if !side(u, None).is_zero() {
                return None;
            }
        }
        let mut g = self.graph.zero_flow();
        for (k, (&(u, _), &e)) in ends.iter().zip(&self.edges).enumerate() {
            let v = side(u, Some(k));
            if !v.is_positive() {
                return None;
            }
            *g.get_mut(e) = v;
        }
        Some(g)
    }
}

struct Search<'a> {
    graph: FlowGraph,
    nodes: Nodes,
    leaves: Vec<bool>,
    supply: &'a [Vec<Rat>],
    found: Vec<(Forest, Flow)>,
}

impl Search<'_> {
    /// Every active node must see a leaf below it, and every leaf some active node above.
    fn reachable(&self, i: usize, active: &[bool]) -> bool {
        let span = self.graph.n - i;
        let leaf_in = |lo: usize, hi: usize| (lo..=hi.min(self.leaves.len() - 1)).any(|c| self.leaves[c]);
        let fed = |c: usize| (c.saturating_sub(span)..=c.min(active.len() - 1)).any(|j| active[j]);
        active.iter().enumerate().all(|(j, &a)| !a || leaf_in(j, j + span))
            && self.leaves.iter().enumerate().all(|(c, &l)| !l || fed(c))
    }

    fn layer(&mut self, i: usize, active: Vec<bool>, edges: Vec<Edge>, uf: UnionFind) {
        if i == self.graph.n {
            if active == self.leaves {
                let forest = Forest { graph: self.graph, edges };
                if let Some(g) = forest.flow(self.supply) {
                    self.found.push((forest, g));
                }
            }
            return;
        }
        if !self.reachable(i, &active) {
            return;
        }
        let cols: Vec<usize> = (0..active.len()).filter(|&j| active[j]).collect();
        let next = vec![false; self.graph.width(i + 1)];
        self.node(i, &cols, 0, next, edges, uf);
    }

    fn node(&mut self, i: usize, cols: &[usize], k: usize, next: Vec<bool>, edges: Vec<Edge>, uf: UnionFind) {
        let Some(&j) = cols.get(k) else {
            if i + 1 == self.graph.n && next != self.leaves {
                return;
            }
            self.layer(i + 1, next, edges, uf);
            return;
        };
        let out = self.graph.out_edges(i, j);
        for mask in 1u32..(1 << out.len()) {
            let mut uf = uf.clone();
            let mut next = next.clone();
            let mut edges = edges.clone();
            let mut ok = true;
            for (b, &e) in out.iter().enumerate() {
                if mask & (1 << b) == 0 {
                    continue;
                }
                let head = e.head();
                if !uf.union(self.nodes.id((i, j)), self.nodes.id(head)) {
                    ok = false;
                    break;
                }
                next[head.1] = true;
                edges.push(e);
            }
            if ok {
                self.node(i, cols, k + 1, next, edges, uf);
            }
        }
    }
}

/// Vertex flows of the trapezoid graph with `m = |λ̄|`, `n = |λ| − m`, paired with their
/// supporting forests, in lexicographic order of edge sets. Needs `λ_{n+m} >= 0`.
pub fn enumerate_vertex_flows(lambda: &[Rat], lambda_bar: &[Rat]) -> Result<Vec<(Forest, Flow)>> {
    let m = lambda_bar.len();
    if lambda.len() <= m {
        return Err(Error::Precondition(format!(
            "lambda has {} entries; it needs more than the {m} of lambda_bar",
            lambda.len()
        )));
    }
    let graph = FlowGraph::trapezoid(lambda.len() - m, m);
    let supply = Forest::supplies(graph, lambda, lambda_bar);
    let n = graph.n;
    if supply[0].iter().any(|s| s.is_negative()) || supply[n].iter().any(|s| s.is_positive()) {
        return Ok(Vec::new());
    }
    let roots: Vec<bool> = supply[0].iter().map(|s| s.is_positive()).collect();
    let leaves: Vec<bool> = supply[n].iter().map(|s| s.is_negative()).collect();
    let nodes = Nodes::new(graph);
    let uf = UnionFind((0..nodes.count()).collect());
    let mut search = Search { graph, nodes, leaves, supply: &supply, found: Vec::new() };
    search.layer(0, roots, Vec::new(), uf);
    let mut found = search.found;
    for (f, _) in found.iter_mut() {
        f.edges.sort();
    }
    found.sort_by(|a, b| a.0.edges.cmp(&b.0.edges));
    Ok(found)
}

/// Vertices of the polytope of arrays on the trapezoid with boundary `λ`, `λ̄` and `μ = 0`.
/// An empty polytope gives an empty list.
pub fn enumerate_vertices(lambda: &[Rat], lambda_bar: &[Rat]) -> Result<Vec<StripConcaveArray>> {
    let t = match lambda.last() {
        Some(v) if v.is_negative() => -v.clone(),
        _ => zero(),
    };
    let lam: Vec<Rat> = lambda.iter().map(|v| v + &t).collect();
    let bar: Vec<Rat> = lambda_bar.iter().map(|v| v + &t).collect();
    enumerate_vertex_flows(&lam, &bar)?
        .into_iter()
        .map(|(_, g)| Ok(super::gamma_inv(&g, &lam)?.derivative().shift(&-&t).integrate()))
        .collect()
}
