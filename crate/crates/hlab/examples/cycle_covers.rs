//! Assignment solutions and minimum cycle/edge covers on small graphs,
//! including the order-driven greedy probe that shows why a locally optimal
//! edge choice cannot solve the cover problem.
//!
//! ```bash
//! cargo run --example cycle_covers
//! ```

use hlab::cover::{enumerate_assignment_solutions, greedy_cover_probe, min_cycle_cover};
use hlab::graph::{figure1_graph, Graph};

fn survey(name: &str, g: &Graph) {
    let sols = enumerate_assignment_solutions(g).unwrap();
    match min_cycle_cover(g).unwrap() {
        Some(best) => println!(
            "{name}: {} assignment solution(s), minimum cover {} part(s)\n{}",
            sols.len(),
            best.part_count(),
            best.to_text()
        ),
        None => println!("{name}: {} assignment solution(s), no cover exists", sols.len()),
    }
}

fn main() {
    survey("triangle", &Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap());
    survey("single edge K2", &Graph::new(2, &[(0, 1)]).unwrap());
    survey("path P3", &Graph::new(3, &[(0, 1), (1, 2)]).unwrap());
    survey(
        "two disjoint triangles",
        &Graph::new(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap(),
    );
    let g = figure1_graph();
    survey("canonical instance", &g);

    // Greedy probe: following a tour reaches the optimum; committing the
    // dead edge e5 first cannot.
    let tour_first = vec![0, 1, 2, 6, 7, 8, 9, 11, 3, 4, 5, 10];
    let r = greedy_cover_probe(&g, &tour_first).unwrap();
    println!(
        "greedy probe, tour-first order: {:?} part(s), optimal = {}",
        r.part_count, r.reached_optimum
    );
    let dead_first = vec![4, 0, 1, 2, 3, 5, 6, 7, 8, 9, 10, 11];
    let r = greedy_cover_probe(&g, &dead_first).unwrap();
    println!(
        "greedy probe, e5-first order: {:?} part(s), optimal = {}",
        r.part_count, r.reached_optimum
    );
}
