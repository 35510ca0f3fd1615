//! Report-producing command frontends.
//!
//! Every command is deterministic given its inputs and seed, and writes
//! machine-readable reports rather than interacting. The thin `hlab` binary
//! wires these functions to flags; they are equally callable from tests and
//! examples.

use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::cover::{
    assignment_matrix, cover_from_permutation, cover_to_json, enumerate_assignment_solutions,
    hamiltonian_cover_check, min_cycle_cover, Permutation,
};
use crate::error::{Error, Result};
use crate::family::parse_family;
use crate::graph::{figure1_graph, parse_graph, Graph};
use crate::mask::{bits, Mask};
use crate::oracle::{dead_elements, ExtensionOracle, HcpOracle, ProblemKind, MAX_HCP_VERTICES};
use crate::sequential::{classify_growth, GrowthReport};

/// Default seed so that a bare invocation is reproducible.
pub const DEFAULT_SEED: u64 = 0x5EED;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
    Text,
}

/// Reads `HLAB_MAX_N`: an environment override that may only lower size caps.
pub fn env_cap() -> Result<Option<usize>> {
    match std::env::var("HLAB_MAX_N") {
        Ok(raw) => raw
            .parse::<usize>()
            .map(Some)
            .map_err(|_| Error::contract(format!("HLAB_MAX_N must be an integer, got {raw:?}"))),
        Err(_) => Ok(None),
    }
}

fn effective_cap(module_cap: usize) -> Result<usize> {
    Ok(match env_cap()? {
        Some(env) => module_cap.min(env),
        None => module_cap,
    })
}

/// Parses a `A..B` inclusive size range.
pub fn parse_sizes(text: &str) -> Result<(usize, usize)> {
    let parts: Vec<&str> = text.split("..").collect();
    if parts.len() != 2 {
        return Err(Error::contract(format!(
            "sizes must look like A..B, got {text:?}"
        )));
    }
    let a = parts[0]
        .parse()
        .map_err(|_| Error::contract(format!("bad range start {:?}", parts[0])))?;
    let b = parts[1]
        .parse()
        .map_err(|_| Error::contract(format!("bad range end {:?}", parts[1])))?;
    if a > b {
        return Err(Error::contract("range start exceeds range end"));
    }
    Ok((a, b))
}

// ---------------------------------------------------------------------------
// matroid / greedy
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct ViolationReport {
    pub smaller: Vec<String>,
    pub larger: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GreedyReport {
    pub weights: Vec<u64>,
    pub chosen: Vec<String>,
    pub chosen_weight: u64,
    pub optimum: Vec<String>,
    pub optimum_weight: u64,
}

/// The family report record: `{family_id, hereditary, exchange, violation?,
/// greedy_gap?}`, with optional detail blocks.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyReport {
    pub family_id: String,
    pub hereditary: bool,
    pub exchange: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub heredity_violation: Option<ViolationReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<ViolationReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub greedy_gap: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub greedy: Option<GreedyReport>,
}

fn labels_of(family: &crate::family::SetFamily, m: Mask) -> Vec<String> {
    bits(m)
        .map(|i| family.ground().label(i).to_string())
        .collect()
}

impl FamilyReport {
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => {
                serde_json::to_string_pretty(self).expect("serializable") + "\n"
            }
            OutputFormat::Csv => {
                let mut out =
                    String::from("family_id,hereditary,exchange,greedy_gap\n");
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    self.family_id,
                    self.hereditary,
                    self.exchange,
                    self.greedy_gap.map_or(String::new(), |g| g.to_string())
                ));
                out
            }
            OutputFormat::Text => {
                let mut out = format!(
                    "family {}: hereditary={} exchange={}\n",
                    self.family_id, self.hereditary, self.exchange
                );
                if let Some(v) = &self.heredity_violation {
                    out.push_str(&format!(
                        "heredity violation: member {{{}}} lacks subset {{{}}}\n",
                        v.larger.join(", "),
                        v.smaller.join(", ")
                    ));
                }
                if let Some(v) = &self.violation {
                    out.push_str(&format!(
                        "exchange violation: smaller {{{}}} larger {{{}}}\n",
                        v.smaller.join(", "),
                        v.larger.join(", ")
                    ));
                }
                if let Some(g) = &self.greedy {
                    out.push_str(&format!(
                        "greedy {{{}}} weight {} | optimum {{{}}} weight {} | gap {}\n",
                        g.chosen.join(", "),
                        g.chosen_weight,
                        g.optimum.join(", "),
                        g.optimum_weight,
                        self.greedy_gap.unwrap_or(0)
                    ));
                }
                out
            }
        }
    }
}

/// Heredity/exchange verdicts with witnesses. Exit code 0 for a matroid,
/// 1 otherwise; parse failures surface as errors (exit 2 in the binary).
pub fn cmd_matroid(
    input_text: &str,
    family_id: &str,
    format: OutputFormat,
) -> Result<(String, i32)> {
    let family = parse_family(input_text)?;
    let report = family_verdicts(&family, family_id)?;
    let exit = if report.hereditary && report.exchange {
        0
    } else {
        1
    };
    Ok((report.render(format), exit))
}

fn family_verdicts(family: &crate::family::SetFamily, family_id: &str) -> Result<FamilyReport> {
    let heredity = family.heredity_violation();
    let hereditary = heredity.is_none();
    let (exchange, violation) = if hereditary {
        match family.exchange_violation()? {
            Some(v) => (
                false,
                Some(ViolationReport {
                    smaller: labels_of(family, v.smaller),
                    larger: labels_of(family, v.larger),
                }),
            ),
            None => (true, None),
        }
    } else {
        (false, None)
    };
    Ok(FamilyReport {
        family_id: family_id.to_string(),
        hereditary,
        exchange,
        heredity_violation: heredity.map(|h| ViolationReport {
            smaller: labels_of(family, h.missing),
            larger: labels_of(family, h.member),
        }),
        violation,
        greedy_gap: None,
        greedy: None,
    })
}

/// Greedy result, exact optimum, and their gap. Exit code 0 iff the gap is
/// zero. The family must be hereditary and the weight arity must match.
pub fn cmd_greedy(
    input_text: &str,
    family_id: &str,
    weights: &[u64],
    format: OutputFormat,
) -> Result<(String, i32)> {
    let family = parse_family(input_text)?;
    if weights.len() != family.ground().size() {
        return Err(Error::contract(format!(
            "expected {} weights, got {}",
            family.ground().size(),
            weights.len()
        )));
    }
    let w = crate::family::WeightFunction::new(weights.to_vec())?;
    if !family.is_hereditary() {
        return Err(Error::contract(
            "greedy optimization requires a hereditary family",
        ));
    }
    let mut report = family_verdicts(&family, family_id)?;
    let run = family.greedy(&w);
    let chosen_weight = w.weight_of(run.chosen);
    let (optimum, optimum_weight) = family.brute_force_max(&w);
    report.greedy_gap = Some(optimum_weight - chosen_weight);
    report.greedy = Some(GreedyReport {
        weights: weights.to_vec(),
        chosen: labels_of(&family, run.chosen),
        chosen_weight,
        optimum: labels_of(&family, optimum),
        optimum_weight,
    });
    let exit = if optimum_weight == chosen_weight { 0 } else { 1 };
    Ok((report.render(format), exit))
}

// ---------------------------------------------------------------------------
// figure1
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct TourJson {
    edges: Vec<String>,
    vertices: Vec<usize>,
}

#[derive(Serialize)]
struct CertificateJson {
    edges: Vec<(usize, usize)>,
    hamiltonian_cycles: Vec<TourJson>,
    hamiltonian_cycle_count: usize,
    unique_hamiltonian_cycle: bool,
    dead_edges: Vec<String>,
    assignment_solution_count: usize,
    min_cover_parts: usize,
}

/// Vertex sequence of a tour edge-mask, smallest vertex first, oriented
/// toward its smaller neighbor.
fn tour_vertices(g: &Graph, tour: Mask) -> Vec<usize> {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_count()];
    for e in bits(tour) {
        let (u, v) = g.edge(e);
        adj[u].push(v);
        adj[v].push(u);
    }
    for l in adj.iter_mut() {
        l.sort_unstable();
    }
    let mut seq = vec![0usize];
    let mut prev = usize::MAX;
    let mut cur = 0usize;
    while seq.len() < g.vertex_count() {
        let next = adj[cur]
            .iter()
            .copied()
            .find(|&w| w != prev)
            .expect("tour vertices have two neighbors");
        prev = cur;
        cur = next;
        seq.push(cur);
    }
    seq
}

/// Writes the canonical-instance bundle into `out_dir` and returns the file
/// list: the DIMACS graph, both assignment matrices, both selected
/// permutations, both covers, and the tour certificate with the dead-edge
/// set. Byte-for-byte reproducible.
pub fn cmd_figure1(out_dir: &Path) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(out_dir)?;
    let g = figure1_graph();
    let mut files = Vec::new();
    let write = |name: &str, contents: String| -> Result<PathBuf> {
        let path = out_dir.join(name);
        std::fs::write(&path, contents)?;
        Ok(path)
    };

    files.push(write("graph.dimacs", g.to_dimacs())?);

    let matrix = assignment_matrix(&g);
    files.push(write("matrix_c.txt", matrix.grid_text())?);
    files.push(write("matrix_d.txt", matrix.grid_text())?);

    // The two selected assignment solutions (1-based images).
    let sigma_c = Permutation::new(vec![7, 0, 5, 2, 6, 3, 4, 1]).expect("bijection");
    let sigma_d = Permutation::new(vec![1, 2, 5, 4, 6, 3, 7, 0]).expect("bijection");
    for (name, sigma) in [("permutation_c.txt", &sigma_c), ("permutation_d.txt", &sigma_d)] {
        let mut text = String::new();
        for (i, &j) in sigma.image().iter().enumerate() {
            text.push_str(&format!("{} -> {}\n", i + 1, j + 1));
        }
        files.push(write(name, text)?);
    }
    for (name, sigma) in [("cover_c.json", &sigma_c), ("cover_d.json", &sigma_d)] {
        let cover = cover_from_permutation(&g, sigma)?;
        let json = serde_json::to_string_pretty(&cover_to_json(&cover)).expect("serializable");
        files.push(write(name, json + "\n")?);
    }

    let oracle = HcpOracle::new(&g);
    let tours = oracle.support_solutions()?;
    let dead = dead_elements(&oracle)?;
    let solutions = enumerate_assignment_solutions(&g)?;
    let min_cover = min_cycle_cover(&g)?.expect("the canonical instance has covers");
    let certificate = CertificateJson {
        edges: g.edges().iter().map(|&(u, v)| (u + 1, v + 1)).collect(),
        hamiltonian_cycles: tours
            .iter()
            .map(|&t| TourJson {
                edges: bits(t).map(|e| g.edge_label(e)).collect(),
                vertices: tour_vertices(&g, t).iter().map(|&v| v + 1).collect(),
            })
            .collect(),
        hamiltonian_cycle_count: tours.len(),
        unique_hamiltonian_cycle: tours.len() == 1,
        dead_edges: bits(dead).map(|e| g.edge_label(e)).collect(),
        assignment_solution_count: solutions.len(),
        min_cover_parts: min_cover.part_count(),
    };
    let json = serde_json::to_string_pretty(&certificate).expect("serializable");
    files.push(write("certificate.json", json + "\n")?);
    Ok(files)
}

// ---------------------------------------------------------------------------
// mvdccp
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct MvdccpReport {
    vertices: usize,
    edges: usize,
    assignment_solutions: usize,
    feasible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    min_parts: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    min_cover: Option<serde_json::Value>,
    hamiltonian: bool,
    hamiltonian_cover_holds: bool,
}

/// Minimum cover, assignment-solution count, and the Hamiltonian-cover line.
pub fn cmd_mvdccp(input_text: &str, format: OutputFormat) -> Result<String> {
    let g = parse_graph(input_text)?;
    let cap = effective_cap(MAX_HCP_VERTICES)?;
    if g.vertex_count() > cap {
        return Err(Error::Capacity {
            what: "mvdccp",
            max: cap,
            got: g.vertex_count(),
        });
    }
    let solutions = enumerate_assignment_solutions(&g)?;
    let min_cover = min_cycle_cover(&g)?;
    let cover_check = hamiltonian_cover_check(&g)?;
    let report = MvdccpReport {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        assignment_solutions: solutions.len(),
        feasible: min_cover.is_some(),
        min_parts: min_cover.as_ref().map(|c| c.part_count()),
        min_cover: min_cover.as_ref().map(cover_to_json),
        hamiltonian: cover_check.hamiltonian,
        hamiltonian_cover_holds: cover_check.holds,
    };
    Ok(match format {
        OutputFormat::Json => serde_json::to_string_pretty(&report).expect("serializable") + "\n",
        OutputFormat::Csv => {
            let mut out = String::from(
                "vertices,edges,assignment_solutions,feasible,min_parts,hamiltonian,hamiltonian_cover_holds\n",
            );
            out.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                report.vertices,
                report.edges,
                report.assignment_solutions,
                report.feasible,
                report.min_parts.map_or(String::new(), |p| p.to_string()),
                report.hamiltonian,
                report.hamiltonian_cover_holds
            ));
            out
        }
        OutputFormat::Text => {
            let mut out = format!(
                "graph: {} vertices, {} edges\nassignment solutions: {}\n",
                report.vertices, report.edges, report.assignment_solutions
            );
            match &min_cover {
                Some(c) => {
                    out.push_str(&format!("minimum cover: {} part(s)\n", c.part_count()));
                    out.push_str(&c.to_text());
                }
                None => out.push_str("minimum cover: infeasible\n"),
            }
            out.push_str(&format!(
                "hamiltonian={} hamiltonian_cover_holds={}\n",
                report.hamiltonian, report.hamiltonian_cover_holds
            ));
            out
        }
    })
}

// ---------------------------------------------------------------------------
// classify
// ---------------------------------------------------------------------------

/// Growth report over `sizes = a..=b` for one problem kind.
pub fn cmd_classify(
    problem: ProblemKind,
    sizes: (usize, usize),
    seed: u64,
    instances_per_size: usize,
    format: OutputFormat,
) -> Result<String> {
    let env = env_cap()?;
    if let Some(cap) = env {
        if sizes.1 > cap {
            return Err(Error::Capacity {
                what: "classify sizes (HLAB_MAX_N)",
                max: cap,
                got: sizes.1,
            });
        }
    }
    let report: GrowthReport = classify_growth(problem, sizes.0..=sizes.1, seed, instances_per_size)?;
    Ok(match format {
        OutputFormat::Json => serde_json::to_string_pretty(&report).expect("serializable") + "\n",
        OutputFormat::Csv => report.to_csv(),
        OutputFormat::Text => report.to_text(),
    })
}

/// Edge mask of the first tour listed for the canonical instance; used by the
/// examples.
pub fn figure1_reference_tour() -> Mask {
    let g = figure1_graph();
    let oracle = HcpOracle::new(&g);
    oracle.support_solutions().expect("within caps")[0]
}
