//! The canonical eight-vertex instance end to end: adjacency matrix, the two
//! selected assignment solutions and their covers, exhaustive tour
//! enumeration, and the dead-edge set.
//!
//! ```bash
//! cargo run --example figure1
//! ```

use hlab::cover::{assignment_matrix, cover_from_permutation, min_cycle_cover, Permutation};
use hlab::graph::figure1_graph;
use hlab::mask::bits;
use hlab::oracle::{dead_elements, ExtensionOracle, HcpOracle};

fn main() {
    let g = figure1_graph();
    println!("{}", g.to_dimacs());
    println!("assignment matrix:\n{}", assignment_matrix(&g).grid_text());

    for (name, image) in [
        ("selection (c)", vec![7, 0, 5, 2, 6, 3, 4, 1]),
        ("selection (d)", vec![1, 2, 5, 4, 6, 3, 7, 0]),
    ] {
        let sigma = Permutation::new(image).unwrap();
        let cover = cover_from_permutation(&g, &sigma).unwrap();
        println!("{name}: {} part(s)\n{}", cover.part_count(), cover.to_text());
    }

    let oracle = HcpOracle::new(&g);
    let tours = oracle.support_solutions().unwrap();
    println!("hamiltonian cycles found: {}", tours.len());
    for t in &tours {
        let labels: Vec<String> = bits(*t).map(|e| g.edge_label(e)).collect();
        println!("  {}", labels.join(" "));
    }

    let dead = dead_elements(&oracle).unwrap();
    let labels: Vec<String> = bits(dead).map(|e| g.edge_label(e)).collect();
    println!("dead edges (on no tour): {}", labels.join(" "));

    let best = min_cycle_cover(&g).unwrap().unwrap();
    println!("minimum cover: {} part(s)\n{}", best.part_count(), best.to_text());
}
