//! Instrumented independence oracles for the three problem encodings.
//!
//! Each oracle answers "is this set a member of the solution family Q?" and
//! reports the work it spent, in problem-specific elementary units:
//!
//! * independent sets: adjacency probes (zero for sets of at most one vertex);
//! * tour edge sets: backtracking search nodes, the structural precheck
//!   counting as one;
//! * satisfiable literal sets: solver nodes, the contrary-pair scan counting
//!   as one.
//!
//! Membership for tours and CNF literal sets means *extendability to a full
//! solution* — an edge set is a member exactly when some Hamiltonian cycle
//! contains it, a literal set exactly when some total satisfying assignment
//! contains it. Deciding that honestly requires complete search, which is why
//! the exhaustive operations carry hard instance-size caps.

use std::collections::BTreeSet;

use crate::cnf::{CnfFormula, Lit};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::mask::{bit, bits, card, Mask};

/// Cap for exhaustive tour-oracle operations (vertices).
pub const MAX_HCP_VERTICES: usize = 10;
/// Cap for exhaustive satisfiability-oracle operations (variables).
pub const MAX_SAT_VARS: usize = 12;
/// Cap for exhaustive independent-set-oracle operations (vertices).
pub const MAX_MISP_VERTICES: usize = 16;

/// Answer of a membership or extension query plus the work it cost.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleVerdict {
    pub member: bool,
    pub work: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ProblemKind {
    Misp,
    Hcp,
    Sat,
}

impl std::fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ProblemKind::Misp => write!(f, "misp"),
            ProblemKind::Hcp => write!(f, "hcp"),
            ProblemKind::Sat => write!(f, "sat"),
        }
    }
}

/// A hereditary solution family queried through membership and single-element
/// extension predicates with work counters.
pub trait ExtensionOracle {
    fn kind(&self) -> ProblemKind;

    /// Number of ground elements; sets are masks over `0..ground_size()`.
    fn ground_size(&self) -> usize;

    fn element_label(&self, element: usize) -> String;

    /// Is `set` a member of Q?
    fn member(&self, set: Mask) -> OracleVerdict;

    /// Is `partial ∪ {element}` a member of Q? `element` must not already be
    /// chosen.
    fn extend(&self, partial: Mask, element: usize) -> Result<OracleVerdict>;

    /// Guards the exhaustive operations; `Err(Capacity)` above the cap.
    fn capacity_check(&self) -> Result<()>;

    /// All inclusion-maximal members, ascending by mask.
    fn support_solutions(&self) -> Result<Vec<Mask>>;
}

fn check_extend_args(oracle: &dyn ExtensionOracle, partial: Mask, element: usize) -> Result<()> {
    if element >= oracle.ground_size() {
        return Err(Error::contract(format!(
            "element {element} outside ground of size {}",
            oracle.ground_size()
        )));
    }
    if partial & bit(element) != 0 {
        return Err(Error::contract(format!(
            "element {} already chosen",
            oracle.element_label(element)
        )));
    }
    Ok(())
}

/// Elements `r` with `{r} ∉ Q`: no support solution contains them, so picking
/// one dooms a sequential construction from the start.
pub fn dead_elements(oracle: &dyn ExtensionOracle) -> Result<Mask> {
    oracle.capacity_check()?;
    let mut dead: Mask = 0;
    for r in 0..oracle.ground_size() {
        if !oracle.extend(0, r)?.member {
            dead |= bit(r);
        }
    }
    Ok(dead)
}

// ---------------------------------------------------------------------------
// Independent sets
// ---------------------------------------------------------------------------

/// Oracle for independent vertex sets: a set is a member when its vertices
/// are pairwise non-adjacent. The extension predicate probes each chosen
/// vertex at most once, so its work is bounded by the partial solution size.
pub struct MispOracle<'g> {
    graph: &'g Graph,
}

impl<'g> MispOracle<'g> {
    pub fn new(graph: &'g Graph) -> MispOracle<'g> {
        MispOracle { graph }
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }
}

impl ExtensionOracle for MispOracle<'_> {
    fn kind(&self) -> ProblemKind {
        ProblemKind::Misp
    }

    fn ground_size(&self) -> usize {
        self.graph.vertex_count()
    }

    fn element_label(&self, element: usize) -> String {
        self.graph.vertex_label(element)
    }

    fn member(&self, set: Mask) -> OracleVerdict {
        assert!(
            set & !crate::mask::full(self.ground_size()) == 0,
            "vertex set outside the graph"
        );
        let mut work = 0;
        let verts: Vec<usize> = bits(set).collect();
        for (i, &u) in verts.iter().enumerate() {
            for &v in &verts[i + 1..] {
                work += 1;
                if self.graph.has_edge(u, v) {
                    return OracleVerdict {
                        member: false,
                        work,
                    };
                }
            }
        }
        OracleVerdict { member: true, work }
    }

    fn extend(&self, partial: Mask, element: usize) -> Result<OracleVerdict> {
        check_extend_args(self, partial, element)?;
        let mut work = 0;
        for u in bits(partial) {
            work += 1;
            if self.graph.has_edge(u, element) {
                return Ok(OracleVerdict {
                    member: false,
                    work,
                });
            }
        }
        Ok(OracleVerdict { member: true, work })
    }

    fn capacity_check(&self) -> Result<()> {
        let n = self.graph.vertex_count();
        if n > MAX_MISP_VERTICES {
            return Err(Error::Capacity {
                what: "exhaustive independent-set operations",
                max: MAX_MISP_VERTICES,
                got: n,
            });
        }
        Ok(())
    }

    fn support_solutions(&self) -> Result<Vec<Mask>> {
        self.capacity_check()?;
        let n = self.graph.vertex_count();
        let mut out = Vec::new();
        for set in 0..(1u64 << n) {
            let independent = bits(set).all(|v| self.graph.neighbors(v) & set == 0);
            if !independent {
                continue;
            }
            let maximal =
                (0..n).all(|v| set & bit(v) != 0 || self.graph.neighbors(v) & set != 0);
            if maximal {
                out.push(set);
            }
        }
        Ok(out)
    }
}

// ---------------------------------------------------------------------------
// Hamiltonian-cycle edge sets
// ---------------------------------------------------------------------------

/// Oracle for tour edge sets: a set is a member when some Hamiltonian cycle
/// of the graph contains it. Decided by a backtracking completion search that
/// walks the graph from vertex `x1` and is forced onto unused required edges.
pub struct HcpOracle<'g> {
    graph: &'g Graph,
}

impl<'g> HcpOracle<'g> {
    pub fn new(graph: &'g Graph) -> HcpOracle<'g> {
        assert!(
            graph.edge_count() <= 64,
            "edge sets are 64-bit masks; graph has {} edges",
            graph.edge_count()
        );
        HcpOracle { graph }
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }
}

struct TourWalk<'g> {
    graph: &'g Graph,
    required: Mask,
    req_deg: Vec<u32>,
    req_total: u32,
    visited: Mask,
    path_edges: Mask,
    nodes: u64,
    stop_at_first: bool,
    found: Vec<Mask>,
}

impl<'g> TourWalk<'g> {
    fn new(graph: &'g Graph, required: Mask) -> TourWalk<'g> {
        let mut req_deg = vec![0u32; graph.vertex_count()];
        for e in bits(required) {
            let (u, v) = graph.edge(e);
            req_deg[u] += 1;
            req_deg[v] += 1;
        }
        TourWalk {
            graph,
            required,
            req_total: card(required) as u32,
            req_deg,
            visited: bit(0),
            path_edges: 0,
            nodes: 0,
            stop_at_first: true,
            found: Vec::new(),
        }
    }

    fn run(&mut self) -> bool {
        self.dfs(0, 1)
    }

    fn dfs(&mut self, u: usize, depth: usize) -> bool {
        self.nodes += 1;
        let n = self.graph.vertex_count();
        if depth == n {
            if let Some(closing) = self.graph.edge_index(u, 0) {
                let closing_required = self.required & bit(closing) != 0;
                if self.req_total == u32::from(closing_required) {
                    let cycle = self.path_edges | bit(closing);
                    if !self.found.contains(&cycle) {
                        self.found.push(cycle);
                    }
                    return true;
                }
            }
            return false;
        }
        let first_move = depth == 1;
        let mut hit = false;
        for w in bits(self.graph.neighbors(u)) {
            if self.visited & bit(w) != 0 {
                continue;
            }
            let e = self.graph.edge_index(u, w).expect("neighbor implies edge");
            let r = self.required & bit(e) != 0;
            // A vertex hosts exactly two tour edges, so unused required edges
            // at `u` must leave with us — except the start, which may save
            // one for the closing edge.
            let leftover = self.req_deg[u] - u32::from(r);
            let allowed = if first_move { leftover <= 1 } else { leftover == 0 };
            if !allowed {
                continue;
            }
            self.visited |= bit(w);
            self.path_edges |= bit(e);
            if r {
                self.req_deg[u] -= 1;
                self.req_deg[w] -= 1;
                self.req_total -= 1;
            }
            let sub = self.dfs(w, depth + 1);
            if r {
                self.req_deg[u] += 1;
                self.req_deg[w] += 1;
                self.req_total += 1;
            }
            self.path_edges &= !bit(e);
            self.visited &= !bit(w);
            if sub {
                hit = true;
                if self.stop_at_first {
                    return true;
                }
            }
        }
        hit
    }
}

impl HcpOracle<'_> {
    /// Structural precheck on the required edge set. Returns `Some(verdict)`
    /// when the answer is already decided, `None` when a search is needed.
    fn precheck(&self, set: Mask) -> Option<bool> {
        let n = self.graph.vertex_count();
        if n < 3 {
            return Some(false);
        }
        let mut deg = vec![0u32; n];
        for e in bits(set) {
            let (u, v) = self.graph.edge(e);
            deg[u] += 1;
            deg[v] += 1;
        }
        if deg.iter().any(|&d| d > 2) {
            return Some(false);
        }
        // Components of the required subgraph are paths or cycles. Any cycle
        // short of the whole vertex set kills the query; a full one decides it.
        let mut seen: Mask = 0;
        for start in 0..n {
            if deg[start] == 0 || seen & bit(start) != 0 {
                continue;
            }
            let mut stack = vec![start];
            let mut verts = 0usize;
            let mut deg_sum = 0u32;
            seen |= bit(start);
            while let Some(v) = stack.pop() {
                verts += 1;
                deg_sum += deg[v];
                for e in bits(set) {
                    let (a, b) = self.graph.edge(e);
                    let other = if a == v {
                        b
                    } else if b == v {
                        a
                    } else {
                        continue;
                    };
                    if seen & bit(other) == 0 {
                        seen |= bit(other);
                        stack.push(other);
                    }
                }
            }
            let comp_edges = (deg_sum / 2) as usize;
            if comp_edges == verts {
                // A closed cycle: only acceptable as the full tour.
                return Some(verts == n && card(set) == n);
            }
        }
        None
    }
}

impl ExtensionOracle for HcpOracle<'_> {
    fn kind(&self) -> ProblemKind {
        ProblemKind::Hcp
    }

    fn ground_size(&self) -> usize {
        self.graph.edge_count()
    }

    fn element_label(&self, element: usize) -> String {
        self.graph.edge_label(element)
    }

    fn member(&self, set: Mask) -> OracleVerdict {
        assert!(
            set & !crate::mask::full(self.ground_size()) == 0,
            "edge set outside the graph"
        );
        let mut work = 1; // structural precheck
        if let Some(member) = self.precheck(set) {
            return OracleVerdict { member, work };
        }
        let mut walk = TourWalk::new(self.graph, set);
        let member = walk.run();
        work += walk.nodes;
        OracleVerdict { member, work }
    }

    fn extend(&self, partial: Mask, element: usize) -> Result<OracleVerdict> {
        check_extend_args(self, partial, element)?;
        Ok(self.member(partial | bit(element)))
    }

    fn capacity_check(&self) -> Result<()> {
        let n = self.graph.vertex_count();
        if n > MAX_HCP_VERTICES {
            return Err(Error::Capacity {
                what: "exhaustive tour operations",
                max: MAX_HCP_VERTICES,
                got: n,
            });
        }
        Ok(())
    }

    /// Every Hamiltonian cycle as an edge mask; these are exactly the
    /// inclusion-maximal members.
    fn support_solutions(&self) -> Result<Vec<Mask>> {
        self.capacity_check()?;
        if self.graph.vertex_count() < 3 {
            return Ok(Vec::new());
        }
        let mut walk = TourWalk::new(self.graph, 0);
        walk.stop_at_first = false;
        walk.run();
        let set: BTreeSet<Mask> = walk.found.into_iter().collect();
        Ok(set.into_iter().collect())
    }
}

// ---------------------------------------------------------------------------
// Satisfying literal sets
// ---------------------------------------------------------------------------

/// Oracle for literal sets: a set is a member when some total satisfying
/// assignment of the formula contains it. Decided by backtracking with unit
/// propagation; ground elements are the `2 * num_vars` literals.
pub struct SatOracle<'f> {
    formula: &'f CnfFormula,
}

impl<'f> SatOracle<'f> {
    pub fn new(formula: &'f CnfFormula) -> SatOracle<'f> {
        SatOracle { formula }
    }

    pub fn formula(&self) -> &CnfFormula {
        self.formula
    }

    /// Literal set with both polarities of some variable?
    fn has_contrary_pair(lits: Mask) -> bool {
        const POSITIVE_SLOTS: Mask = 0x5555_5555_5555_5555;
        lits & (lits >> 1) & POSITIVE_SLOTS != 0
    }

    fn dpll(&self, true_vars: Mask, false_vars: Mask, nodes: &mut u64) -> bool {
        *nodes += 1;
        let mut t = true_vars;
        let mut f = false_vars;
        loop {
            let mut changed = false;
            let mut pending = 0usize;
            for clause in self.formula.clauses() {
                let mut satisfied = false;
                let mut unassigned: Option<Lit> = None;
                let mut open = 0;
                for &l in clause {
                    let v = bit(l.var());
                    if t & v != 0 {
                        if l.is_positive() {
                            satisfied = true;
                            break;
                        }
                    } else if f & v != 0 {
                        if !l.is_positive() {
                            satisfied = true;
                            break;
                        }
                    } else {
                        open += 1;
                        if unassigned.is_none() {
                            unassigned = Some(l);
                        }
                    }
                }
                if satisfied {
                    continue;
                }
                match open {
                    0 => return false,
                    1 => {
                        let l = unassigned.expect("open literal");
                        if l.is_positive() {
                            t |= bit(l.var());
                        } else {
                            f |= bit(l.var());
                        }
                        changed = true;
                    }
                    _ => pending += 1,
                }
            }
            if !changed {
                if pending == 0 {
                    return true; // every clause satisfied; free variables are arbitrary
                }
                break;
            }
        }
        let branch = (0..self.formula.num_vars())
            .find(|&v| (t | f) & bit(v) == 0)
            .expect("a pending clause has unassigned variables");
        self.dpll(t | bit(branch), f, nodes) || self.dpll(t, f | bit(branch), nodes)
    }
}

impl ExtensionOracle for SatOracle<'_> {
    fn kind(&self) -> ProblemKind {
        ProblemKind::Sat
    }

    fn ground_size(&self) -> usize {
        2 * self.formula.num_vars()
    }

    fn element_label(&self, element: usize) -> String {
        Lit::from_index(element).to_string()
    }

    fn member(&self, set: Mask) -> OracleVerdict {
        assert!(
            set & !crate::mask::full(self.ground_size()) == 0,
            "literal set outside the formula"
        );
        let mut work = 1; // contrary-pair scan
        if Self::has_contrary_pair(set) {
            return OracleVerdict {
                member: false,
                work,
            };
        }
        let mut true_vars: Mask = 0;
        let mut false_vars: Mask = 0;
        for idx in bits(set) {
            let l = Lit::from_index(idx);
            if l.is_positive() {
                true_vars |= bit(l.var());
            } else {
                false_vars |= bit(l.var());
            }
        }
        let member = self.dpll(true_vars, false_vars, &mut work);
        OracleVerdict { member, work }
    }

    fn extend(&self, partial: Mask, element: usize) -> Result<OracleVerdict> {
        check_extend_args(self, partial, element)?;
        Ok(self.member(partial | bit(element)))
    }

    fn capacity_check(&self) -> Result<()> {
        let n = self.formula.num_vars();
        if n > MAX_SAT_VARS {
            return Err(Error::Capacity {
                what: "exhaustive satisfiability operations",
                max: MAX_SAT_VARS,
                got: n,
            });
        }
        Ok(())
    }

    /// Every total satisfying assignment as a literal mask; these are exactly
    /// the inclusion-maximal members.
    fn support_solutions(&self) -> Result<Vec<Mask>> {
        self.capacity_check()?;
        let n = self.formula.num_vars();
        let mut out = Vec::new();
        for assignment in 0..(1u64 << n) {
            let satisfied = self.formula.clauses().iter().all(|clause| {
                clause.iter().any(|l| {
                    let val = assignment & bit(l.var()) != 0;
                    val == l.is_positive()
                })
            });
            if satisfied {
                let mut lits: Mask = 0;
                for v in 0..n {
                    let l = if assignment & bit(v) != 0 {
                        Lit::pos(v)
                    } else {
                        Lit::neg(v)
                    };
                    lits |= bit(l.index());
                }
                out.push(lits);
            }
        }
        out.sort_unstable();
        Ok(out)
    }
}
