//! Extension-cost growth tables: per-query work of the extension predicate as
//! instances grow, next to the conjectured classifications.
//!
//! ```bash
//! cargo run --example growth_probe
//! ```

use hlab::cnf::random_3cnf;
use hlab::graph::figure1_graph;
use hlab::oracle::{HcpOracle, MispOracle, ProblemKind, SatOracle};
use hlab::sequential::{classify_growth, uf_sheet_csv, uf_verdict_sheet};

fn main() {
    let misp = classify_growth(ProblemKind::Misp, 4..=16, 0x5EED, 5).unwrap();
    print!("{}", misp.to_text());
    println!();
    let hcp = classify_growth(ProblemKind::Hcp, 6..=9, 0x5EED, 5).unwrap();
    print!("{}", hcp.to_text());
    println!();

    // Side-by-side verdict sheet on the canonical instance plus a formula.
    let g = figure1_graph();
    let f = random_3cnf(6, 12, 0x5EED).unwrap();
    let misp_oracle = MispOracle::new(&g);
    let hcp_oracle = HcpOracle::new(&g);
    let sat_oracle = SatOracle::new(&f);
    let rows = uf_verdict_sheet(&[
        ("figure1", &misp_oracle),
        ("figure1", &hcp_oracle),
        ("random-3cnf", &sat_oracle),
    ]);
    print!("{}", uf_sheet_csv(&rows));
    for row in &rows {
        println!("{} on {}: {} | {}", row.problem, row.instance, row.observed, row.claimed);
    }
}
