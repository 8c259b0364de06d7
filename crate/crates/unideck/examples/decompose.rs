//! Split a connected unicyclic graph into its cycle, trunks, and branches.
//!
//! Every connected graph with n vertices and n edges has exactly one cycle.
//! Removing the cycle edges leaves a forest of trees hanging off cycle
//! vertices; each such tree decomposes further into branches, the rooted
//! subtrees meeting the cycle at their root.

use unideck::{decompose, Graph};

fn main() {
    // 4-cycle with three branches at vertex 0.
    let g = Graph::new(
        11,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (0, 3),
            (0, 4),
            (0, 5),
            (5, 6),
            (5, 7),
            (0, 8),
            (8, 9),
            (9, 10),
        ],
    )
    .unwrap();

    let d = decompose(&g).unwrap();
    println!("cycle ({} vertices): {:?}", d.cycle().len(), d.cycle());

    println!("\ntrunks (whole trees hanging off the cycle):");
    for t in d.trunks() {
        println!("  at cycle vertex {}: {} vertices", t.attachment(), t.vertices().len());
    }

    println!("\nbranches (rooted subtrees, one per cycle-vertex degree above 2):");
    for b in d.branches() {
        println!(
            "  root {} | {} edges | cert {}",
            b.root(),
            b.size(),
            b.certificate().to_hex()
        );
    }

    // The branch count equals the sum of (deg - 2) over cycle vertices; here
    // vertex 0 has degree 5 and every other cycle vertex degree 2.
    println!("\nbranch count: {}", d.branches().len());
}
