//! Vertex-disjoint cycle/edge covers via the assignment relaxation.
//!
//! A cover solution is modelled as a fixed-point-free permutation that
//! respects the graph's 0/1 adjacency matrix: permutation 2-cycles become
//! edge parts, longer orbits become cycle parts. Enumerating all such
//! permutations is the desk-scale substitute for a matching solver — the
//! relaxation is used here as a feasibility device, and exactness is what the
//! tests need. A polynomial bipartite-matching route is a documented
//! extension point, not implemented.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::mask::{bit, bits, Mask};
use crate::oracle::{ExtensionOracle, HcpOracle, MAX_HCP_VERTICES};

/// 0/1 matrix with entry `(i,j) = 1` iff `{x_{i+1}, x_{j+1}}` is an edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssignmentMatrix {
    n: usize,
    rows: Vec<Mask>,
}

/// The adjacency matrix of a simple graph: symmetric with a zero diagonal.
pub fn assignment_matrix(g: &Graph) -> AssignmentMatrix {
    AssignmentMatrix {
        n: g.vertex_count(),
        rows: (0..g.vertex_count()).map(|v| g.neighbors(v)).collect(),
    }
}

impl AssignmentMatrix {
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> bool {
        self.rows[i] & bit(j) != 0
    }

    /// Plain-text 0/1 grid, one row per line, entries space-separated.
    pub fn grid_text(&self) -> String {
        let mut out = String::new();
        for i in 0..self.n {
            let row: Vec<&str> = (0..self.n)
                .map(|j| if self.entry(i, j) { "1" } else { "0" })
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

/// A bijection on the vertices, written as its image array.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Permutation> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &j in &image {
            if j >= n || seen[j] {
                return Err(Error::contract("image array is not a bijection"));
            }
            seen[j] = true;
        }
        Ok(Permutation { image })
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// Orbits, each starting at its smallest vertex, ordered by that vertex.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.image.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                orbit.push(v);
                v = self.image[v];
            }
            out.push(orbit);
        }
        out
    }
}

/// One part of a cover: a single edge or a simple cycle of length >= 3.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum CoverPart {
    Edge(usize, usize),
    Cycle(Vec<usize>),
}

impl CoverPart {
    pub fn vertices(&self) -> Vec<usize> {
        match self {
            CoverPart::Edge(u, v) => vec![*u, *v],
            CoverPart::Cycle(vs) => vs.clone(),
        }
    }

    fn min_vertex(&self) -> usize {
        match self {
            CoverPart::Edge(u, _) => *u,
            CoverPart::Cycle(vs) => vs[0],
        }
    }
}

/// A partition of all vertices into pairwise disjoint edges and/or cycles.
///
/// Canonical form: edges as `(min, max)`; cycles rotated to start at their
/// smallest vertex and oriented so the second vertex is the smaller neighbor;
/// parts sorted by smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleCoverPartition {
    n: usize,
    parts: Vec<CoverPart>,
}

impl CycleCoverPartition {
    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[CoverPart] {
        &self.parts
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Checks the defining conditions against a graph: parts pairwise
    /// vertex-disjoint, their union is the whole vertex set, and every part
    /// edge exists.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if g.vertex_count() != self.n {
            return Err(Error::contract("cover built for a different vertex count"));
        }
        let mut covered: Mask = 0;
        for part in &self.parts {
            let vs = part.vertices();
            if let CoverPart::Cycle(ref c) = part {
                if c.len() < 3 {
                    return Err(Error::contract("cycle part shorter than 3 vertices"));
                }
            }
            for &v in &vs {
                if covered & bit(v) != 0 {
                    return Err(Error::contract(format!(
                        "vertex x{} appears in two parts",
                        v + 1
                    )));
                }
                covered |= bit(v);
            }
            let closed: Vec<(usize, usize)> = match part {
                CoverPart::Edge(u, v) => vec![(*u, *v)],
                CoverPart::Cycle(c) => (0..c.len()).map(|i| (c[i], c[(i + 1) % c.len()])).collect(),
            };
            for (u, v) in closed {
                if !g.has_edge(u, v) {
                    return Err(Error::contract(format!(
                        "part edge {{x{}, x{}}} is not a graph edge",
                        u + 1,
                        v + 1
                    )));
                }
            }
        }
        if covered != crate::mask::full(self.n) {
            return Err(Error::contract("parts do not cover every vertex"));
        }
        Ok(())
    }

    /// The permutation whose orbits are these parts, edges as 2-cycles and
    /// cycles oriented canonically.
    pub fn to_permutation(&self) -> Permutation {
        let mut image = vec![0usize; self.n];
        for part in &self.parts {
            match part {
                CoverPart::Edge(u, v) => {
                    image[*u] = *v;
                    image[*v] = *u;
                }
                CoverPart::Cycle(c) => {
                    for i in 0..c.len() {
                        image[c[i]] = c[(i + 1) % c.len()];
                    }
                }
            }
        }
        Permutation::new(image).expect("parts partition the vertex set")
    }

    /// Flat encoding used for deterministic ordering between covers.
    pub fn canonical_key(&self) -> Vec<Vec<usize>> {
        self.parts.iter().map(|p| p.vertices()).collect()
    }

    /// Human-readable lines, vertices 1-based.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for part in &self.parts {
            match part {
                CoverPart::Edge(u, v) => {
                    out.push_str(&format!("edge x{} x{}\n", u + 1, v + 1));
                }
                CoverPart::Cycle(c) => {
                    let vs: Vec<String> = c.iter().map(|&v| format!("x{}", v + 1)).collect();
                    out.push_str(&format!("cycle {}\n", vs.join(" ")));
                }
            }
        }
        out
    }
}

#[derive(Serialize)]
struct CoverPartJson {
    #[serde(rename = "type")]
    kind: &'static str,
    vertices: Vec<usize>,
}

#[derive(Serialize)]
struct CoverJson {
    parts: Vec<CoverPartJson>,
}

/// JSON form `{"parts": [{"type": "edge"|"cycle", "vertices": [...]}]}` with
/// 1-based vertices.
pub fn cover_to_json(cover: &CycleCoverPartition) -> serde_json::Value {
    let parts = cover
        .parts
        .iter()
        .map(|p| CoverPartJson {
            kind: match p {
                CoverPart::Edge(..) => "edge",
                CoverPart::Cycle(..) => "cycle",
            },
            vertices: p.vertices().iter().map(|&v| v + 1).collect(),
        })
        .collect();
    serde_json::to_value(CoverJson { parts }).expect("serializable")
}

fn canonical_cycle(orbit: &[usize]) -> Vec<usize> {
    let pos = orbit
        .iter()
        .position(|&v| v == *orbit.iter().min().unwrap())
        .unwrap();
    let mut rotated: Vec<usize> = orbit[pos..].iter().chain(orbit[..pos].iter()).copied().collect();
    if rotated[rotated.len() - 1] < rotated[1] {
        rotated[1..].reverse();
    }
    rotated
}

/// Reads a cover off a permutation: 2-cycles become edge parts, longer orbits
/// cycle parts. The permutation must be fixed-point-free and respect the
/// adjacency matrix; the partition conditions are checked before returning.
pub fn cover_from_permutation(g: &Graph, sigma: &Permutation) -> Result<CycleCoverPartition> {
    if sigma.len() != g.vertex_count() {
        return Err(Error::contract(
            "permutation size differs from vertex count",
        ));
    }
    for i in 0..sigma.len() {
        let j = sigma.apply(i);
        if i == j {
            return Err(Error::contract(format!(
                "fixed point at x{}: loops are forbidden",
                i + 1
            )));
        }
        if !g.has_edge(i, j) {
            return Err(Error::contract(format!(
                "assignment entry (x{}, x{}) is 0",
                i + 1,
                j + 1
            )));
        }
    }
    let mut parts: Vec<CoverPart> = sigma
        .cycles()
        .into_iter()
        .map(|orbit| {
            if orbit.len() == 2 {
                CoverPart::Edge(orbit[0].min(orbit[1]), orbit[0].max(orbit[1]))
            } else {
                CoverPart::Cycle(canonical_cycle(&orbit))
            }
        })
        .collect();
    parts.sort_by_key(|p| p.min_vertex());
    let cover = CycleCoverPartition {
        n: g.vertex_count(),
        parts,
    };
    cover.validate(g)?;
    Ok(cover)
}

/// All fixed-point-free permutations respecting the adjacency matrix, in
/// lexicographic image order. Capped at [`MAX_HCP_VERTICES`] vertices.
pub fn enumerate_assignment_solutions(g: &Graph) -> Result<Vec<Permutation>> {
    let n = g.vertex_count();
    if n > MAX_HCP_VERTICES {
        return Err(Error::Capacity {
            what: "assignment-solution enumeration",
            max: MAX_HCP_VERTICES,
            got: n,
        });
    }
    let mut out = Vec::new();
    let mut image = Vec::with_capacity(n);
    let mut used: Mask = 0;
    fn rec(g: &Graph, image: &mut Vec<usize>, used: &mut Mask, out: &mut Vec<Permutation>) {
        let i = image.len();
        if i == g.vertex_count() {
            out.push(Permutation {
                image: image.clone(),
            });
            return;
        }
        for j in bits(g.neighbors(i) & !*used) {
            image.push(j);
            *used |= bit(j);
            rec(g, image, used, out);
            *used &= !bit(j);
            image.pop();
        }
    }
    rec(g, &mut image, &mut used, &mut out);
    Ok(out)
}

/// A cover with the fewest parts, or `None` when the graph admits no cover.
/// Ties break to the lexicographically smallest canonical encoding.
pub fn min_cycle_cover(g: &Graph) -> Result<Option<CycleCoverPartition>> {
    let mut best: Option<CycleCoverPartition> = None;
    for sigma in enumerate_assignment_solutions(g)? {
        let cover = cover_from_permutation(g, &sigma)?;
        let better = match &best {
            None => true,
            Some(b) => {
                (cover.part_count(), cover.canonical_key())
                    < (b.part_count(), b.canonical_key())
            }
        };
        if better {
            best = Some(cover);
        }
    }
    Ok(best)
}

/// Side-by-side check of the tour oracle and the exact cover optimum: if the
/// graph is Hamiltonian, the minimum cover should be a single part that the
/// oracle confirms is a Hamiltonian cycle.
#[derive(Debug, Clone, Serialize)]
pub struct HamiltonianCoverReport {
    pub hamiltonian: bool,
    pub min_parts: Option<usize>,
    pub min_cover_is_hamiltonian_cycle: bool,
    pub holds: bool,
}

pub fn hamiltonian_cover_check(g: &Graph) -> Result<HamiltonianCoverReport> {
    let oracle = HcpOracle::new(g);
    oracle.capacity_check()?;
    let hamiltonian = oracle.member(0).member;
    let cover = min_cycle_cover(g)?;
    let min_parts = cover.as_ref().map(|c| c.part_count());
    let min_cover_is_hamiltonian_cycle = match &cover {
        Some(c) if c.part_count() == 1 => match &c.parts()[0] {
            CoverPart::Cycle(vs) if vs.len() == g.vertex_count() => {
                let mask: Mask = (0..vs.len())
                    .map(|i| bit(g.edge_index(vs[i], vs[(i + 1) % vs.len()]).unwrap()))
                    .sum();
                oracle.member(mask).member
            }
            _ => false,
        },
        _ => false,
    };
    let holds = !hamiltonian || min_cover_is_hamiltonian_cycle;
    Ok(HamiltonianCoverReport {
        hamiltonian,
        min_parts,
        min_cover_is_hamiltonian_cycle,
        holds,
    })
}

/// Outcome of the order-driven greedy cover construction.
#[derive(Debug, Clone)]
pub struct GreedyCoverReport {
    pub accepted_edges: Vec<usize>,
    pub cover: Option<CycleCoverPartition>,
    pub part_count: Option<usize>,
    pub optimal_part_count: Option<usize>,
    pub reached_optimum: bool,
}

/// Greedy cover construction: edges are taken in the given order whenever the
/// running edge set stays a disjoint union of simple paths and closed cycles
/// (degree at most 2, closing only a whole path). No backtracking; the final
/// structure is a valid cover only if every component is a single edge or a
/// cycle and every vertex is covered.
pub fn greedy_cover_probe(g: &Graph, ordering: &[usize]) -> Result<GreedyCoverReport> {
    let m = g.edge_count();
    {
        let mut seen = vec![false; m];
        if ordering.len() != m {
            return Err(Error::contract("ordering must list every edge exactly once"));
        }
        for &e in ordering {
            if e >= m || seen[e] {
                return Err(Error::contract(
                    "ordering must be a permutation of the edge indices",
                ));
            }
            seen[e] = true;
        }
    }
    let n = g.vertex_count();
    let mut deg = vec![0u32; n];
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], v: usize) -> usize {
        let mut r = v;
        while parent[r] != r {
            r = parent[r];
        }
        let mut cur = v;
        while parent[cur] != r {
            let next = parent[cur];
            parent[cur] = r;
            cur = next;
        }
        r
    }
    let mut accepted_edges = Vec::new();
    let mut accepted_mask: Mask = 0;
    for &e in ordering {
        let (u, v) = g.edge(e);
        if deg[u] >= 2 || deg[v] >= 2 {
            continue;
        }
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        // Same component with both endpoints free means u and v are the two
        // ends of one path; closing it makes a cycle part.
        deg[u] += 1;
        deg[v] += 1;
        if ru != rv {
            parent[ru] = rv;
        }
        accepted_edges.push(e);
        accepted_mask |= bit(e);
    }
    // Reconstruct components of the accepted edge set.
    let cover = accepted_cover(g, accepted_mask);
    let optimal = min_cycle_cover(g)?;
    let optimal_part_count = optimal.map(|c| c.part_count());
    let part_count = cover.as_ref().map(|c| c.part_count());
    let reached_optimum =
        part_count.is_some() && optimal_part_count.is_some() && part_count == optimal_part_count;
    Ok(GreedyCoverReport {
        accepted_edges,
        cover,
        part_count,
        optimal_part_count,
        reached_optimum,
    })
}

/// Interprets an accepted edge set as a cover if possible: every component
/// must be a single edge or a closed cycle, and all vertices covered.
fn accepted_cover(g: &Graph, accepted: Mask) -> Option<CycleCoverPartition> {
    let n = g.vertex_count();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for e in bits(accepted) {
        let (u, v) = g.edge(e);
        adj[u].push(v);
        adj[v].push(u);
    }
    if adj.iter().any(|l| l.is_empty()) {
        return None; // uncovered vertex
    }
    let mut seen = vec![false; n];
    let mut parts = Vec::new();
    // Open paths first, walked end to end; only single-edge paths are parts.
    for start in 0..n {
        if seen[start] || adj[start].len() != 1 {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut prev = start;
        let mut cur = adj[start][0];
        loop {
            seen[cur] = true;
            comp.push(cur);
            match adj[cur].iter().copied().find(|&w| w != prev) {
                Some(w) => {
                    prev = cur;
                    cur = w;
                }
                None => break,
            }
        }
        if comp.len() == 2 {
            parts.push(CoverPart::Edge(comp[0].min(comp[1]), comp[0].max(comp[1])));
        } else {
            return None;
        }
    }
    // Everything unseen now lies on closed cycles.
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut prev = start;
        let mut cur = adj[start][0];
        while cur != start {
            seen[cur] = true;
            comp.push(cur);
            let w = adj[cur]
                .iter()
                .copied()
                .find(|&w| w != prev)
                .expect("cycle vertices have two distinct neighbors");
            prev = cur;
            cur = w;
        }
        parts.push(CoverPart::Cycle(canonical_cycle(&comp)));
    }
    parts.sort_by_key(|p| p.min_vertex());
    Some(CycleCoverPartition { n, parts })
}
