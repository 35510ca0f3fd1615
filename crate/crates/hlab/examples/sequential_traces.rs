//! Instrumented element-by-element constructions on all three problem
//! encodings, dumping every query with its work counter.
//!
//! ```bash
//! cargo run --example sequential_traces
//! ```

use hlab::cnf::parse_cnf;
use hlab::graph::{figure1_graph, Graph};
use hlab::oracle::{HcpOracle, MispOracle, SatOracle};
use hlab::sequential::{sequential_build, strict_progress_check, trace_dump, Policy};

fn main() {
    // Independent sets on the path a-b-c.
    let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
    let oracle = MispOracle::new(&p3);
    let trace = sequential_build(&oracle, &Policy::FirstFeasible).unwrap();
    println!("--- independent sets on P3, first-feasible");
    print!("{}", trace_dump(&oracle, &trace));
    assert!(strict_progress_check(&trace));

    // Tour edges on the canonical instance in ground order: the driver
    // accepts exactly the reference tour and rejects everything that would
    // leave it.
    let g = figure1_graph();
    let oracle = HcpOracle::new(&g);
    let trace = sequential_build(&oracle, &Policy::GivenOrder((0..12).collect())).unwrap();
    println!("\n--- tour edges on the canonical instance, ground order");
    print!("{}", trace_dump(&oracle, &trace));

    // Satisfying literals.
    let f = parse_cnf("p cnf 3 3\n1 -2 0\n2 3 0\n-1 3 0\n").unwrap();
    let oracle = SatOracle::new(&f);
    let trace = sequential_build(&oracle, &Policy::Random(7)).unwrap();
    println!("\n--- satisfying literal sets, random(7)");
    print!("{}", trace_dump(&oracle, &trace));
}
