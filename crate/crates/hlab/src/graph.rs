//! Simple undirected graphs, a DIMACS-edge parser, a seeded generator with a
//! planted tour, and the canonical eight-vertex instance used throughout the
//! examples and tests.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::mask::{bit, Mask};

/// Largest vertex count a [`Graph`] may have (vertex sets are bit masks).
pub const MAX_VERTICES: usize = 64;

/// An undirected graph without loops or multiple edges.
///
/// Vertices are `0..n` internally and `x1..xn` in labels and file formats.
/// Edge indices follow insertion (file) order and are stable; edge `i` is
/// labelled `e{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>, // normalized u < v, in insertion order
    adj: Vec<Mask>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::Capacity {
                what: "graph vertices",
                max: MAX_VERTICES,
                got: n,
            });
        }
        let mut g = Graph {
            n,
            edges: Vec::with_capacity(edges.len()),
            adj: vec![0; n],
        };
        for &(u, v) in edges {
            g.push_edge(u, v)?;
        }
        Ok(g)
    }

    fn push_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::contract(format!(
                "edge ({u},{v}) outside vertex range 0..{}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::contract(format!("loop edge at vertex {u}")));
        }
        if self.adj[u] & bit(v) != 0 {
            return Err(Error::contract(format!("duplicate edge ({u},{v})")));
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        self.edges.push((u.min(v), u.max(v)));
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edge endpoints `(u, v)` with `u < v`.
    pub fn edge(&self, i: usize) -> (usize, usize) {
        self.edges[i]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbor set of `v` as a vertex mask.
    pub fn neighbors(&self, v: usize) -> Mask {
        self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Index of the edge `{u, v}` in insertion order, if present.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.iter().position(|&e| e == key)
    }

    /// `x1`-style label for a vertex.
    pub fn vertex_label(&self, v: usize) -> String {
        format!("x{}", v + 1)
    }

    /// `e1`-style label for an edge index.
    pub fn edge_label(&self, i: usize) -> String {
        format!("e{}", i + 1)
    }

    /// Serializes in DIMACS edge format with 1-based vertices.
    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p edge {} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("e {} {}\n", u + 1, v + 1));
        }
        out
    }
}

/// Parses DIMACS edge format: a `p edge n m` header, then `m` lines
/// `e u v` with 1-based vertices. `c` lines are comments. Loops, duplicate
/// edges, out-of-range vertices, and header/edge-count mismatches are errors.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut graph: Option<Graph> = None;
    let mut declared_edges = 0usize;
    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut parts = line.split_whitespace();
        match parts.next() {
            Some("p") => {
                if graph.is_some() {
                    return Err(Error::parse(lineno, "duplicate problem line"));
                }
                if parts.next() != Some("edge") {
                    return Err(Error::parse(lineno, "expected `p edge n m`"));
                }
                let n: usize = parts
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| Error::parse(lineno, "bad vertex count"))?;
                declared_edges = parts
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| Error::parse(lineno, "bad edge count"))?;
                graph = Some(Graph::new(n, &[])?);
            }
            Some("e") => {
                let g = graph
                    .as_mut()
                    .ok_or_else(|| Error::parse(lineno, "edge line before problem line"))?;
                let u: usize = parts
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| Error::parse(lineno, "bad endpoint"))?;
                let v: usize = parts
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| Error::parse(lineno, "bad endpoint"))?;
                if u == 0 || v == 0 {
                    return Err(Error::parse(lineno, "vertices are 1-based"));
                }
                g.push_edge(u - 1, v - 1)
                    .map_err(|e| Error::parse(lineno, e.to_string()))?;
            }
            Some(other) => {
                return Err(Error::parse(lineno, format!("unknown line kind {other:?}")));
            }
            None => unreachable!(),
        }
    }
    let graph = graph.ok_or_else(|| Error::parse(0, "missing problem line"))?;
    if graph.edge_count() != declared_edges {
        return Err(Error::parse(
            0,
            format!(
                "header declares {declared_edges} edges, found {}",
                graph.edge_count()
            ),
        ));
    }
    Ok(graph)
}

/// The canonical eight-vertex, twelve-edge instance.
///
/// The graph is defined by its adjacency matrix; the numbered edge list below
/// is the matrix read in row order. The numbering is pinned by the reference
/// cycle `e1 e3 e7 e9 e8 e10 e12 e2`, which walks `x1 x2 x3 x6 x4 x5 x7 x8`
/// back to `x1` — a Hamiltonian tour, so the labels are consistent with the
/// adjacency they came from.
///
/// ```text
/// e1={x1,x2}  e2={x1,x8}  e3={x2,x3}  e4={x2,x5}  e5={x2,x8}  e6={x3,x4}
/// e7={x3,x6}  e8={x4,x5}  e9={x4,x6}  e10={x5,x7} e11={x6,x7} e12={x7,x8}
/// ```
pub fn figure1_graph() -> Graph {
    Graph::new(
        8,
        &[
            (0, 1), // e1
            (0, 7), // e2
            (1, 2), // e3
            (1, 4), // e4
            (1, 7), // e5
            (2, 3), // e6
            (2, 5), // e7
            (3, 4), // e8
            (3, 5), // e9
            (4, 6), // e10
            (5, 6), // e11
            (6, 7), // e12
        ],
    )
    .expect("canonical instance is well-formed")
}

/// Generates a graph with a planted Hamiltonian tour plus `extra_edges`
/// additional random edges. Deterministic per seed: the planted tour's edges
/// come first in walk order, then the extras in acceptance order.
pub fn random_hamiltonian_graph(n: usize, extra_edges: usize, seed: u64) -> Result<Graph> {
    if n < 3 {
        return Err(Error::contract(format!(
            "a planted tour needs at least 3 vertices, got {n}"
        )));
    }
    if n > MAX_VERTICES {
        return Err(Error::Capacity {
            what: "graph vertices",
            max: MAX_VERTICES,
            got: n,
        });
    }
    let capacity = n * (n - 1) / 2 - n;
    if extra_edges > capacity {
        return Err(Error::Capacity {
            what: "extra edges",
            max: capacity,
            got: extra_edges,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut g = Graph::new(n, &[])?;
    for i in 0..n {
        g.push_edge(order[i], order[(i + 1) % n])?;
    }
    let mut added = 0;
    while added < extra_edges {
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        if u != v && !g.has_edge(u, v) {
            g.push_edge(u, v)?;
            added += 1;
        }
    }
    Ok(g)
}

/// Seeded Erdős–Rényi-style graph: each vertex pair becomes an edge with
/// probability `percent / 100`, pairs examined in a fixed order.
pub fn random_graph(n: usize, percent: u32, seed: u64) -> Result<Graph> {
    if n > MAX_VERTICES {
        return Err(Error::Capacity {
            what: "graph vertices",
            max: MAX_VERTICES,
            got: n,
        });
    }
    if percent > 100 {
        return Err(Error::contract("edge probability is a percentage"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n, &[])?;
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_range(0..100) < percent {
                g.push_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// The vertex order of the planted tour for `random_hamiltonian_graph` with
/// the same arguments. The first `n` edges of the generated graph walk this
/// cycle.
pub fn planted_tour(n: usize, seed: u64) -> Result<Vec<usize>> {
    if n < 3 {
        return Err(Error::contract(format!(
            "a planted tour needs at least 3 vertices, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    Ok(order)
}
