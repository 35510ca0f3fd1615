//! Heredity and exchange verdicts with witnesses.
//!
//! ```bash
//! cargo run --example matroid_check
//! ```

use hlab::family::{GroundSet, SetFamily};
use hlab::mask::bit;

fn report(name: &str, family: &SetFamily) {
    println!("== {name}");
    println!(
        "   members: {}",
        family
            .members()
            .iter()
            .map(|&m| family.format_subset(m))
            .collect::<Vec<_>>()
            .join(" ")
    );
    match family.heredity_violation() {
        Some(v) => {
            println!(
                "   not hereditary: member {} lacks subset {}",
                family.format_subset(v.member),
                family.format_subset(v.missing)
            );
            return;
        }
        None => println!("   hereditary: yes"),
    }
    match family.exchange_violation().unwrap() {
        None => println!("   exchange: yes -> matroid"),
        Some(v) => println!(
            "   exchange violated: no element of {} extends {}",
            family.format_subset(v.larger),
            family.format_subset(v.smaller)
        ),
    }
}

fn main() {
    // U(2,4): all subsets of size <= 2 of a 4-element ground set.
    let pairs: Vec<u64> = (0..4)
        .flat_map(|i| ((i + 1)..4).map(move |j| bit(i) | bit(j)))
        .collect();
    let u24 = SetFamily::downward_closure(GroundSet::of_size(4).unwrap(), &pairs).unwrap();
    report("uniform matroid U(2,4)", &u24);

    // Independent sets of the path a-b-c: hereditary but not a matroid.
    let ground = GroundSet::with_labels(vec!["a".into(), "b".into(), "c".into()]).unwrap();
    let path = SetFamily::downward_closure(ground, &[0b101, 0b010]).unwrap();
    report("independent sets of the path a-b-c", &path);

    // An explicit family that is not even hereditary.
    let ground = GroundSet::with_labels(vec!["a".into(), "b".into()]).unwrap();
    let broken = SetFamily::new(ground, vec![0b11]).unwrap();
    report("explicit family {{a,b}}", &broken);
}
