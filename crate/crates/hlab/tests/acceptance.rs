//! Acceptance suite: one test per criterion, each printing a single
//! `criterion N (<name>): PASS|FAIL` line (run with `-- --nocapture` to see
//! the lines for passing criteria too).
//!
//! Criteria 2 and 3 pin expectations about the canonical eight-vertex
//! instance that exhaustive enumeration refutes: the graph has two
//! Hamiltonian cycles, not one, so its dead-edge set is {e5} rather than
//! {e4, e5, e6, e11}, and orderings that start at e4/e6/e11 can still reach
//! the one-part optimum by following the second tour. Those two tests assert
//! the pinned expectations as stated and therefore fail; the failure output
//! carries the enumerated counterexamples.

use std::time::Instant;

use hlab::cli::{cmd_classify, cmd_figure1, OutputFormat, DEFAULT_SEED};
use hlab::cnf::random_3cnf;
use hlab::cover::{cover_from_permutation, greedy_cover_probe, min_cycle_cover, CoverPart, Permutation};
use hlab::family::{enumerate_hereditary_families, WeightFunction};
use hlab::graph::{figure1_graph, random_graph, random_hamiltonian_graph, Graph};
use hlab::mask::{bit, bits, card, strict_submasks, Mask};
use hlab::oracle::{
    dead_elements, ExtensionOracle, HcpOracle, MispOracle, ProblemKind, SatOracle,
};
use hlab::sequential::{sequential_build, strict_progress_check, Policy};

struct Criterion {
    number: usize,
    name: &'static str,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Criterion {
    fn new(number: usize, name: &'static str) -> Criterion {
        Criterion {
            number,
            name,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, detail: impl Into<String>) {
        let detail = detail.into();
        if ok {
            self.notes.push(detail);
        } else {
            self.failures.push(detail);
        }
    }

    fn finish(self) {
        if self.failures.is_empty() {
            println!(
                "criterion {} ({}): PASS — {}",
                self.number,
                self.name,
                self.notes.join("; ")
            );
        } else {
            println!(
                "criterion {} ({}): FAIL — {}",
                self.number,
                self.name,
                self.failures.join("; ")
            );
            panic!(
                "criterion {} ({}) failed:\n  {}",
                self.number,
                self.name,
                self.failures.join("\n  ")
            );
        }
    }
}

// ---------------------------------------------------------------------------
// independent oracles used only by this suite
// ---------------------------------------------------------------------------

/// All downward-closed families over `n` elements by brute closure scan,
/// including the empty family, as sorted member lists.
fn downsets_by_scan(n: usize) -> Vec<Vec<Mask>> {
    let num_subsets = 1usize << n;
    let mut out = Vec::new();
    for fam_bits in 0u64..(1u64 << num_subsets) {
        let members: Vec<Mask> = (0..num_subsets as u64)
            .filter(|&s| fam_bits >> s & 1 == 1)
            .collect();
        let closed = members
            .iter()
            .all(|&s| strict_submasks(s).all(|t| members.binary_search(&t).is_ok()));
        if closed {
            out.push(members);
        }
    }
    out
}

/// Number of antichains of subsets of an `n`-set (the empty antichain
/// included), by direct recursion over subsets.
fn count_antichains(n: usize) -> usize {
    fn rec(i: usize, num_subsets: usize, chosen: &mut Vec<Mask>) -> usize {
        if i == num_subsets {
            return 1;
        }
        let mut total = rec(i + 1, num_subsets, chosen);
        let s = i as Mask;
        if !chosen.iter().any(|&c| c & s == c || c & s == s) {
            chosen.push(s);
            total += rec(i + 1, num_subsets, chosen);
            chosen.pop();
        }
        total
    }
    rec(0, 1 << n, &mut Vec::new())
}

/// All Hamiltonian cycles of a graph as edge masks, by filtering vertex
/// permutations — independent of the oracle's constrained walk.
fn tours_by_permutation(g: &Graph) -> Vec<Mask> {
    fn permute(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
        if k == items.len() {
            visit(items);
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            permute(items, k + 1, visit);
            items.swap(k, i);
        }
    }
    let n = g.vertex_count();
    if n < 3 {
        return Vec::new();
    }
    let mut tours = std::collections::BTreeSet::new();
    let mut rest: Vec<usize> = (1..n).collect();
    permute(&mut rest, 0, &mut |perm| {
        let mut seq = vec![0];
        seq.extend_from_slice(perm);
        if (0..n).all(|i| g.has_edge(seq[i], seq[(i + 1) % n])) {
            let mask: Mask = (0..n)
                .map(|i| bit(g.edge_index(seq[i], seq[(i + 1) % n]).unwrap()))
                .sum();
            tours.insert(mask);
        }
    });
    tours.into_iter().collect()
}

fn weight_vectors(n: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let total = 3usize.pow(n as u32);
    for code in 0..total {
        let mut c = code;
        let mut w = Vec::with_capacity(n);
        for _ in 0..n {
            w.push((c % 3 + 1) as u64);
            c /= 3;
        }
        out.push(w);
    }
    out
}

fn edge_mask(indices: &[usize]) -> Mask {
    indices.iter().map(|&i| bit(i)).sum()
}

const PI_STAR: [usize; 8] = [0, 1, 2, 6, 7, 8, 9, 11]; // e1 e2 e3 e7 e8 e9 e10 e12

// ---------------------------------------------------------------------------
// criteria
// ---------------------------------------------------------------------------

#[test]
fn criterion_1_greedy_optimality_equivalence() {
    let start = Instant::now();
    let mut c = Criterion::new(1, "greedy-optimality equivalence, exhaustive n=4");

    // Enumeration completeness against two independent routes.
    let all_downsets = downsets_by_scan(4);
    c.check(
        all_downsets.len() == 168,
        format!(
            "downward-closed families incl. the empty one: {} (expected the 168 antichain count)",
            all_downsets.len()
        ),
    );
    c.check(
        count_antichains(4) == 168,
        format!("antichain enumeration: {}", count_antichains(4)),
    );
    let families = enumerate_hereditary_families(4).expect("within cap");
    let nonempty: Vec<&Vec<Mask>> = all_downsets.iter().filter(|m| !m.is_empty()).collect();
    c.check(
        families.len() == nonempty.len() && families.len() == 167,
        format!(
            "library enumerates {} non-empty families, scan found {}",
            families.len(),
            nonempty.len()
        ),
    );
    let lib_members: Vec<Vec<Mask>> = families.iter().map(|f| f.members().to_vec()).collect();
    let mut scan_members: Vec<Vec<Mask>> = nonempty.iter().map(|m| (*m).clone()).collect();
    scan_members.sort();
    c.check(
        lib_members == scan_members,
        "enumerated families match the scan exactly".to_string(),
    );

    let weights = weight_vectors(4);
    let mut exchange_families = 0usize;
    let mut defeated = 0usize;
    for family in &families {
        match family.exchange_violation().expect("hereditary") {
            None => {
                exchange_families += 1;
                for w in &weights {
                    let wf = WeightFunction::new(w.clone()).unwrap();
                    let g = wf.weight_of(family.greedy(&wf).chosen);
                    let (_, b) = family.brute_force_max(&wf);
                    if g != b {
                        c.check(
                            false,
                            format!(
                                "exchange family {:?} beaten at weights {:?}: greedy {} < optimum {}",
                                family.members(),
                                w,
                                g,
                                b
                            ),
                        );
                    }
                }
            }
            Some(v) => {
                let wf = family.separating_weights(&v).expect("valid violation");
                let g = wf.weight_of(family.greedy(&wf).chosen);
                let (_, b) = family.brute_force_max(&wf);
                if g < b {
                    defeated += 1;
                } else {
                    c.check(
                        false,
                        format!(
                            "witness failed on family {:?}: greedy {} vs optimum {}",
                            family.members(),
                            g,
                            b
                        ),
                    );
                }
            }
        }
    }
    c.check(
        exchange_families + defeated == 167,
        format!(
            "{} exchange families optimal on all 81 weight vectors, {} non-exchange families defeated by their witnesses",
            exchange_families, defeated
        ),
    );
    let elapsed = start.elapsed();
    c.check(
        elapsed.as_secs() < 30,
        format!("runtime {:.2?} (< 30 s)", elapsed),
    );
    c.finish();
}

#[test]
fn criterion_2_figure1_reproduction() {
    let start = Instant::now();
    let mut c = Criterion::new(2, "canonical-instance reproduction");
    let g = figure1_graph();

    let canonical: Vec<(usize, usize)> = vec![
        (0, 1),
        (0, 7),
        (1, 2),
        (1, 4),
        (1, 7),
        (2, 3),
        (2, 5),
        (3, 4),
        (3, 5),
        (4, 6),
        (5, 6),
        (6, 7),
    ];
    c.check(
        g.edge_count() == 12 && g.edges() == canonical.as_slice(),
        "12 edges matching the canonical list".to_string(),
    );

    // Hamiltonian cycles by two routes that must agree.
    let oracle = HcpOracle::new(&g);
    let by_oracle = oracle.support_solutions().expect("within cap");
    let by_permutation = tours_by_permutation(&g);
    c.check(
        by_oracle == by_permutation,
        format!(
            "oracle and permutation enumeration agree on {} tour(s)",
            by_oracle.len()
        ),
    );
    let pi_star = edge_mask(&PI_STAR);
    let cycles_named: Vec<Vec<String>> = by_oracle
        .iter()
        .map(|&t| bits(t).map(|e| g.edge_label(e)).collect())
        .collect();
    c.check(
        by_oracle == vec![pi_star],
        format!(
            "expected exactly one Hamiltonian cycle equal to e1,e2,e3,e7,e8,e9,e10,e12; enumeration found {}: {:?}",
            by_oracle.len(),
            cycles_named
        ),
    );

    // Selected permutation (c): three parts (x1,x8,x2), (x3,x6,x4), {x5,x7}.
    let sigma_c = Permutation::new(vec![7, 0, 5, 2, 6, 3, 4, 1]).unwrap();
    let cover_c = cover_from_permutation(&g, &sigma_c).expect("valid");
    let expected_c = vec![
        CoverPart::Cycle(vec![0, 1, 7]), // (x1, x8, x2) direction-normalized
        CoverPart::Cycle(vec![2, 3, 5]), // (x3, x6, x4) direction-normalized
        CoverPart::Edge(4, 6),           // {x5, x7}
    ];
    c.check(
        cover_c.parts() == expected_c.as_slice(),
        format!("first selection yields the 3-part cover: {:?}", cover_c.parts()),
    );

    // Selected permutation (d): the one-part Hamiltonian cover.
    let sigma_d = Permutation::new(vec![1, 2, 5, 4, 6, 3, 7, 0]).unwrap();
    let cover_d = cover_from_permutation(&g, &sigma_d).expect("valid");
    let is_hamiltonian_part = cover_d.part_count() == 1
        && matches!(&cover_d.parts()[0], CoverPart::Cycle(vs) if vs.len() == 8);
    c.check(
        is_hamiltonian_part,
        format!(
            "second selection yields the 1-part Hamiltonian cover: {:?}",
            cover_d.parts()
        ),
    );

    let elapsed = start.elapsed();
    c.check(elapsed.as_millis() < 1000, format!("runtime {:.2?} (< 1 s)", elapsed));
    c.finish();
}

#[test]
fn criterion_3_dead_edges_and_greedy_probe() {
    let mut c = Criterion::new(3, "dead-edge set and greedy-cover probe");
    let g = figure1_graph();
    let oracle = HcpOracle::new(&g);

    let claimed_dead: Mask = edge_mask(&[3, 4, 5, 10]); // e4, e5, e6, e11
    let computed_dead = dead_elements(&oracle).expect("within cap");
    let named = |m: Mask| -> Vec<String> { bits(m).map(|e| g.edge_label(e)).collect() };
    c.check(
        computed_dead == claimed_dead,
        format!(
            "expected dead-edge set {:?}; the oracle computes {:?} (e4, e6, e11 lie on the second tour)",
            named(claimed_dead),
            named(computed_dead)
        ),
    );

    // "Any ordering starting at a dead edge fails to reach the 1-part
    // optimum", quantified over the pinned set: refuted by completing the
    // second tour after e4 (likewise e6, e11); e5 genuinely never reaches it.
    let second_tour: Vec<usize> = vec![0, 1, 3, 5, 6, 7, 10, 11];
    for &d in &[3usize, 4, 5, 10] {
        let mut orderings: Vec<Vec<usize>> = Vec::new();
        // adversarial: the second tour's edges right after d
        let mut adversarial = vec![d];
        adversarial.extend(second_tour.iter().copied().filter(|&e| e != d));
        let still_missing: Vec<usize> =
            (0..12).filter(|e| !adversarial.contains(e)).collect();
        adversarial.extend(still_missing);
        orderings.push(adversarial);
        // rotations of the remaining edges
        let mut rest: Vec<usize> = (0..12).filter(|&e| e != d).collect();
        for _ in 0..11 {
            rest.rotate_left(1);
            let mut o = vec![d];
            o.extend_from_slice(&rest);
            orderings.push(o);
        }
        let mut reached: Option<Vec<usize>> = None;
        for ordering in &orderings {
            let r = greedy_cover_probe(&g, ordering).expect("valid ordering");
            if r.part_count == Some(1) {
                reached = Some(ordering.clone());
                break;
            }
        }
        let label = g.edge_label(d);
        let is_truly_dead = computed_dead & bit(d) != 0;
        match reached {
            None => c.check(
                true,
                format!("no sampled ordering starting at {label} reached 1 part"),
            ),
            Some(ordering) => c.check(
                false,
                format!(
                    "ordering {ordering:?} starts at {label} and reaches the 1-part optimum{}",
                    if is_truly_dead {
                        ""
                    } else {
                        " (that edge lies on the second tour)"
                    }
                ),
            ),
        }
    }
    c.finish();
}

#[test]
fn criterion_4_hamiltonian_min_covers() {
    let start = Instant::now();
    let mut c = Criterion::new(4, "Hamiltonian graphs have single-cycle minimum covers");

    let mut graphs: Vec<(String, Graph)> = vec![("figure1".to_string(), figure1_graph())];
    for i in 0..30u64 {
        let n = 4 + (i % 4) as usize; // 4..=7
        let extra = (i % 3) as usize;
        let g = random_hamiltonian_graph(n, extra, 1000 + i).expect("valid parameters");
        graphs.push((format!("planted(n={n}, extra={extra}, seed={})", 1000 + i), g));
    }
    let mut verified = 0usize;
    for (name, g) in &graphs {
        let cover = min_cycle_cover(g).expect("within cap");
        let ok = match cover {
            Some(cover) if cover.part_count() == 1 => match &cover.parts()[0] {
                CoverPart::Cycle(vs) if vs.len() == g.vertex_count() => {
                    let mask: Mask = (0..vs.len())
                        .map(|i| bit(g.edge_index(vs[i], vs[(i + 1) % vs.len()]).unwrap()))
                        .sum();
                    HcpOracle::new(g).member(mask).member
                }
                _ => false,
            },
            _ => false,
        };
        if ok {
            verified += 1;
        } else {
            c.check(false, format!("{name}: minimum cover is not a verified tour"));
        }
    }
    c.check(
        verified == graphs.len(),
        format!("{verified}/{} graphs verified", graphs.len()),
    );
    let elapsed = start.elapsed();
    c.check(elapsed.as_secs() < 60, format!("runtime {:.2?} (< 60 s)", elapsed));
    c.finish();
}

#[test]
fn criterion_5_oracle_equivalence() {
    let mut c = Criterion::new(5, "oracle equivalence against exhaustive enumeration");

    // 50 seeded graphs with up to 6 vertices, mixed densities and planted tours.
    let mut mismatches = 0u64;
    let mut queries = 0u64;
    for i in 0..50u64 {
        let n = 3 + (i % 4) as usize; // 3..=6
        let g = if i % 3 == 0 {
            random_hamiltonian_graph(n, (i % 3) as usize, 2000 + i).unwrap()
        } else {
            random_graph(n, 30 + (i % 5) as u32 * 12, 2000 + i).unwrap()
        };
        let oracle = HcpOracle::new(&g);
        let tours = tours_by_permutation(&g);
        let m = g.edge_count();
        for set in 0u64..(1u64 << m) {
            let expected = tours.iter().any(|&t| set & !t == 0);
            queries += 1;
            if oracle.member(set).member != expected {
                mismatches += 1;
            }
        }
    }
    c.check(
        mismatches == 0,
        format!("tour membership: {queries} queries on 50 graphs, {mismatches} mismatches"),
    );

    // 10 seeded 3-CNF formulas with up to 12 variables against truth tables.
    let mut sat_queries = 0u64;
    let mut sat_mismatches = 0u64;
    for i in 0..10u64 {
        let vars = 6 + (i % 7) as usize; // 6..=12
        let f = random_3cnf(vars, 3 * vars, 3000 + i).unwrap();
        let oracle = SatOracle::new(&f);
        // truth table, independent of the solver
        let mut models: Vec<Mask> = Vec::new();
        for assignment in 0u64..(1u64 << vars) {
            let satisfied = f.clauses().iter().all(|clause| {
                clause
                    .iter()
                    .any(|l| (assignment & bit(l.var()) != 0) == l.is_positive())
            });
            if satisfied {
                let mut lits: Mask = 0;
                for v in 0..vars {
                    let idx = 2 * v + usize::from(assignment & bit(v) == 0);
                    lits |= bit(idx);
                }
                models.push(lits);
            }
        }
        // sampled literal sets plus structured ones
        let mut sets: Vec<Mask> = vec![0];
        sets.extend((0..2 * vars).map(bit));
        sets.extend(models.iter().copied());
        let mut s: u64 = 4000 + i;
        for _ in 0..2000 {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            sets.push(s & ((1u64 << (2 * vars)) - 1));
        }
        for set in sets {
            let consistent = {
                const POS: Mask = 0x5555_5555_5555_5555;
                set & (set >> 1) & POS == 0
            };
            let expected = consistent && models.iter().any(|&m| set & !m == 0);
            sat_queries += 1;
            if oracle.member(set).member != expected {
                sat_mismatches += 1;
            }
        }
    }
    c.check(
        sat_mismatches == 0,
        format!("satisfiability membership: {sat_queries} queries on 10 formulas, {sat_mismatches} mismatches"),
    );
    c.finish();
}

#[test]
fn criterion_6_sequential_invariants() {
    let mut c = Criterion::new(6, "sequential trace invariants over 100 seeded builds");
    let mut traces = 0usize;
    let mut i = 0u64;
    while traces < 100 {
        i += 1;
        let seed = 5000 + i;
        let policy = match i % 3 {
            0 => Policy::FirstFeasible,
            1 => Policy::Random(seed),
            _ => Policy::FirstFeasible,
        };
        let result = match i % 3 {
            0 => {
                let n = 4 + (i % 9) as usize; // 4..=12
                let g = random_graph(n, 40, seed).unwrap();
                run_and_check(&mut c, &MispOracle::new(&g), &policy, true)
            }
            1 => {
                let n = 5 + (i % 4) as usize; // 5..=8
                let g = random_hamiltonian_graph(n, (i % 3) as usize, seed).unwrap();
                run_and_check(&mut c, &HcpOracle::new(&g), &policy, false)
            }
            _ => {
                let vars = 4 + (i % 6) as usize; // 4..=9
                let f = random_3cnf(vars, 2 * vars, seed).unwrap();
                let oracle = SatOracle::new(&f);
                match sequential_build(&oracle, &policy) {
                    Ok(trace) => {
                        check_trace(&mut c, &oracle, &trace, false);
                        true
                    }
                    Err(_) => false, // unsatisfiable sample; skip, keep counting up
                }
            }
        };
        if result {
            traces += 1;
        }
    }
    c.check(traces == 100, format!("{traces} traces checked"));
    c.finish();
}

fn run_and_check(
    c: &mut Criterion,
    oracle: &dyn ExtensionOracle,
    policy: &Policy,
    misp_bound: bool,
) -> bool {
    let trace = sequential_build(oracle, policy).expect("feasible instance");
    check_trace(c, oracle, &trace, misp_bound);
    true
}

fn check_trace(
    c: &mut Criterion,
    oracle: &dyn ExtensionOracle,
    trace: &hlab::sequential::SequentialTrace,
    misp_bound: bool,
) {
    let mut prev: Mask = 0;
    for s in &trace.steps {
        if !oracle.member(s.snapshot).member {
            c.check(false, format!("{}: snapshot not a member", oracle.kind()));
        }
        if card(s.snapshot) != card(prev) + 1 {
            c.check(false, format!("{}: snapshot did not grow by 1", oracle.kind()));
        }
        prev = s.snapshot;
    }
    if !strict_progress_check(trace) {
        c.check(
            false,
            format!("{}: construction-time ordering violated", oracle.kind()),
        );
    }
    if misp_bound {
        let mut partial: Mask = 0;
        for q in &trace.queries {
            if q.work > card(partial) as u64 {
                c.check(
                    false,
                    format!(
                        "misp extension work {} exceeds |partial| = {}",
                        q.work,
                        card(partial)
                    ),
                );
            }
            if q.member {
                partial |= bit(q.element);
            }
        }
    }
}

#[test]
fn criterion_7_determinism() {
    let mut c = Criterion::new(7, "byte-identical reports across consecutive runs");

    let dir_a = tempfile::tempdir().unwrap();
    let dir_b = tempfile::tempdir().unwrap();
    let files_a = cmd_figure1(dir_a.path()).unwrap();
    let files_b = cmd_figure1(dir_b.path()).unwrap();
    let mut identical = files_a.len() == files_b.len();
    for (a, b) in files_a.iter().zip(files_b.iter()) {
        identical &= a.file_name() == b.file_name();
        identical &= std::fs::read(a).unwrap() == std::fs::read(b).unwrap();
    }
    c.check(
        identical,
        format!("figure1 bundle: {} files byte-identical", files_a.len()),
    );

    for (kind, hi) in [(ProblemKind::Misp, 10), (ProblemKind::Hcp, 8)] {
        let first = cmd_classify(kind, (4, hi), DEFAULT_SEED, 3, OutputFormat::Json).unwrap();
        let second = cmd_classify(kind, (4, hi), DEFAULT_SEED, 3, OutputFormat::Json).unwrap();
        c.check(
            first == second,
            format!("classify {kind}: {} bytes byte-identical", first.len()),
        );
    }
    c.finish();
}
