//! Property tests for the structural invariants that hold across the crate.

use proptest::prelude::*;

use hlab::cnf::{parse_cnf, random_3cnf};
use hlab::cover::{cover_from_permutation, enumerate_assignment_solutions};
use hlab::family::{GroundSet, SetFamily, WeightFunction};
use hlab::graph::{parse_graph, random_graph, random_hamiltonian_graph};
use hlab::mask::{bit, bits, card, strict_submasks, Mask};
use hlab::oracle::{ExtensionOracle, MispOracle};
use hlab::sequential::{sequential_build, strict_progress_check, Policy};

fn closure_family(n: usize, seeds: &[Mask]) -> SetFamily {
    let full = (1u64 << n) - 1;
    let maximal: Vec<Mask> = seeds.iter().map(|&m| m & full).collect();
    SetFamily::downward_closure(GroundSet::of_size(n).unwrap(), &maximal).unwrap()
}

proptest! {
    /// Every family built by downward closure is hereditary and contains the
    /// empty set.
    #[test]
    fn closure_is_downward_closed(n in 1usize..=8, seeds in prop::collection::vec(any::<Mask>(), 0..4)) {
        let fam = closure_family(n, &seeds);
        prop_assert!(fam.contains(0));
        prop_assert!(fam.is_hereditary());
        for &m in fam.members() {
            for sub in strict_submasks(m) {
                prop_assert!(fam.contains(sub));
            }
        }
    }

    /// Greedy snapshots stay inside the family and the result is maximal.
    #[test]
    fn greedy_trace_feasible_and_maximal(
        n in 1usize..=7,
        seeds in prop::collection::vec(any::<Mask>(), 0..4),
        raw_weights in prop::collection::vec(1u64..=9, 8),
    ) {
        let fam = closure_family(n, &seeds);
        let w = WeightFunction::new(raw_weights[..n].to_vec()).unwrap();
        let run = fam.greedy(&w);
        for snap in &run.trace {
            prop_assert!(fam.contains(*snap));
        }
        for i in 0..n {
            if run.chosen & bit(i) == 0 {
                prop_assert!(!fam.contains(run.chosen | bit(i)));
            }
        }
    }

    /// On families with the exchange property, greedy matches the exact
    /// optimum for every weight vector tried.
    #[test]
    fn exchange_implies_greedy_optimal(
        n in 1usize..=5,
        seeds in prop::collection::vec(any::<Mask>(), 0..4),
        raw_weights in prop::collection::vec(1u64..=5, 5),
    ) {
        let fam = closure_family(n, &seeds);
        if fam.has_exchange_property().unwrap() {
            let w = WeightFunction::new(raw_weights[..n].to_vec()).unwrap();
            let greedy = w.weight_of(fam.greedy(&w).chosen);
            let (_, best) = fam.brute_force_max(&w);
            prop_assert_eq!(greedy, best);
        }
    }

    /// On families without the exchange property, the constructed witness
    /// weights make greedy strictly suboptimal.
    #[test]
    fn witness_defeats_greedy(
        n in 2usize..=6,
        seeds in prop::collection::vec(any::<Mask>(), 1..4),
    ) {
        let fam = closure_family(n, &seeds);
        if let Some(v) = fam.exchange_violation().unwrap() {
            let w = fam.separating_weights(&v).unwrap();
            let greedy = w.weight_of(fam.greedy(&w).chosen);
            let (_, best) = fam.brute_force_max(&w);
            prop_assert!(greedy < best, "greedy {} vs best {}", greedy, best);
        }
    }

    /// DIMACS serialization round-trips for graphs and formulas.
    #[test]
    fn graph_dimacs_round_trip(n in 2usize..10, pct in 0u32..=100, seed in any::<u64>()) {
        let g = random_graph(n, pct, seed).unwrap();
        prop_assert_eq!(parse_graph(&g.to_dimacs()).unwrap(), g);
    }

    #[test]
    fn cnf_dimacs_round_trip(vars in 3usize..10, clauses in 1usize..20, seed in any::<u64>()) {
        let f = random_3cnf(vars, clauses, seed).unwrap();
        prop_assert_eq!(parse_cnf(&f.to_dimacs()).unwrap(), f);
    }

    /// The independent-set extension predicate agrees with membership of the
    /// union and never probes more than the partial solution size.
    #[test]
    fn misp_extend_agrees_with_member(
        n in 2usize..10,
        pct in 0u32..=100,
        seed in any::<u64>(),
        raw in any::<Mask>(),
        v in 0usize..10,
    ) {
        let g = random_graph(n, pct, seed).unwrap();
        let oracle = MispOracle::new(&g);
        let v = v % n;
        let partial = raw & ((1u64 << n) - 1) & !bit(v);
        if oracle.member(partial).member {
            let ext = oracle.extend(partial, v).unwrap();
            prop_assert_eq!(ext.member, oracle.member(partial | bit(v)).member);
            prop_assert!(ext.work <= card(partial) as u64);
        }
    }
}

/// All Hamiltonian cycles by filtering vertex permutations; the independent
/// route used to cross-check the constrained walk.
fn tours_by_permutation(g: &hlab::graph::Graph) -> Vec<Mask> {
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

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// The constrained tour walk agrees with the straight permutation route
    /// on membership for sampled edge sets of larger graphs.
    #[test]
    fn tour_membership_matches_permutation_route(
        n in 5usize..=8,
        pct in 30u32..=70,
        seed in any::<u64>(),
        samples in prop::collection::vec(any::<Mask>(), 32),
    ) {
        let g = random_graph(n, pct, seed).unwrap();
        let oracle = hlab::oracle::HcpOracle::new(&g);
        let tours = tours_by_permutation(&g);
        let full = (1u64 << g.edge_count()) - 1;
        for raw in samples {
            let set = raw & full;
            let expected = tours.iter().any(|&t| set & !t == 0);
            prop_assert_eq!(oracle.member(set).member, expected);
        }
    }

    /// The literal-set solver agrees with truth-table enumeration on sampled
    /// queries.
    #[test]
    fn sat_membership_matches_truth_table(
        vars in 3usize..=8,
        clauses in 3usize..=20,
        seed in any::<u64>(),
        samples in prop::collection::vec(any::<Mask>(), 32),
    ) {
        let f = random_3cnf(vars, clauses, seed).unwrap();
        let oracle = hlab::oracle::SatOracle::new(&f);
        let mut models: Vec<Mask> = Vec::new();
        for assignment in 0u64..(1u64 << vars) {
            let ok = f.clauses().iter().all(|clause| {
                clause
                    .iter()
                    .any(|l| (assignment & bit(l.var()) != 0) == l.is_positive())
            });
            if ok {
                let mut lits: Mask = 0;
                for v in 0..vars {
                    lits |= bit(2 * v + usize::from(assignment & bit(v) == 0));
                }
                models.push(lits);
            }
        }
        let full = (1u64 << (2 * vars)) - 1;
        for raw in samples {
            let set = raw & full;
            const POS: Mask = 0x5555_5555_5555_5555;
            let consistent = set & (set >> 1) & POS == 0;
            let expected = consistent && models.iter().any(|&m| set & !m == 0);
            prop_assert_eq!(oracle.member(set).member, expected);
        }
    }

    /// Every assignment solution maps to a cover that satisfies the
    /// partition conditions and survives the permutation round trip.
    #[test]
    fn covers_satisfy_partition_conditions_and_round_trip(
        n in 3usize..=6,
        extra in 0usize..=2,
        seed in any::<u64>(),
    ) {
        let extra = extra.min(n * (n - 1) / 2 - n);
        let g = random_hamiltonian_graph(n, extra, seed).unwrap();
        for sigma in enumerate_assignment_solutions(&g).unwrap() {
            let cover = cover_from_permutation(&g, &sigma).unwrap();
            cover.validate(&g).unwrap();
            let again = cover_from_permutation(&g, &cover.to_permutation()).unwrap();
            prop_assert_eq!(&again, &cover);
        }
    }

    /// Sequential construction invariants on seeded independent-set
    /// instances: snapshots are members growing one element at a time, and
    /// the construction-time ordering holds.
    #[test]
    fn sequential_invariants_hold(
        n in 3usize..=12,
        pct in 0u32..=80,
        seed in any::<u64>(),
        policy_seed in any::<u64>(),
    ) {
        let g = random_graph(n, pct, seed).unwrap();
        let oracle = MispOracle::new(&g);
        let trace = sequential_build(&oracle, &Policy::Random(policy_seed)).unwrap();
        let mut prev: Mask = 0;
        for s in &trace.steps {
            prop_assert!(oracle.member(s.snapshot).member);
            prop_assert_eq!(card(s.snapshot), card(prev) + 1);
            prev = s.snapshot;
        }
        prop_assert!(strict_progress_check(&trace));
        // the final snapshot is maximal
        let chosen = trace.support().unwrap();
        for v in 0..n {
            if chosen & bit(v) == 0 {
                prop_assert!(bits(chosen).any(|u| g.has_edge(u, v)));
            }
        }
    }
}
