//! Exhaustively enumerate small graph families, one representative per
//! isomorphism class.

use unideck::oracle::{enumerate_unlabeled, EnumerationSpec};

fn main() {
    // Connected unicyclic graphs by vertex count. These match the classical
    // counts 1, 2, 5, 13, 33, 89, 240, ...
    println!("connected unicyclic graphs:");
    for n in 3..=10 {
        let graphs = enumerate_unlabeled(&EnumerationSpec::connected_unicyclic(n)).unwrap();
        println!("  n = {n:2}: {}", graphs.len());
    }

    // All graphs (connected or not) are far more numerous; the search is
    // exact but only feasible for tiny n.
    println!("\nall graphs:");
    for n in 1..=7 {
        let graphs = enumerate_unlabeled(&EnumerationSpec::all_graphs(n)).unwrap();
        println!("  n = {n}: {}", graphs.len());
    }

    // The reconstructable class is empty below 15 vertices: a member needs a
    // cycle of length >= 5, at least 5 branches, and 3 branch shapes that
    // each occur exactly once — the smallest budget that allows three
    // pairwise different shapes plus two more branches is 10 extra vertices.
    println!("\nreconstructable class:");
    for n in [13, 14, 15] {
        let graphs = enumerate_unlabeled(&EnumerationSpec::class_u(n)).unwrap();
        println!("  n = {n}: {}", graphs.len());
    }
}
