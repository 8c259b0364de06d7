//! Classify every card of a unicyclic graph's deck by which edge produced it.
//!
//! Deleting an edge of a connected unicyclic graph leaves one of two shapes,
//! and the shape alone reveals a lot about the deleted edge:
//!
//!   * a connected card is a tree — the deleted edge was on the cycle;
//!   * a two-component card splits into one unicyclic piece and one tree —
//!     the deleted edge was in some trunk.
//!
//! For a trunk edge, the branch count of the unicyclic piece tells attachment
//! edges (count drops by one) apart from interior edges (count unchanged).

use unideck::unicyclic::{classify_card, CardClass};
use unideck::{decompose, Graph};

fn main() {
    // Triangle with a pendant and a 2-edge path at 0, two pendants at 1,
    // and a pendant at 2: five branches.
    let g = Graph::new(
        9,
        &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (1, 5), (2, 8), (0, 6), (6, 7)],
    )
    .unwrap();

    let d = decompose(&g).unwrap();
    let branch_count = d.branches().len();
    let attachment: Vec<(usize, usize)> =
        d.branches().iter().map(|b| b.attachment_edge()).collect();
    println!(
        "cycle length {}, {} branches\n",
        d.cycle().len(),
        branch_count
    );

    let mut tree_cards = 0;
    for &(u, v) in g.edges() {
        let card = g.delete_edge(u, v).unwrap();
        match classify_card(&card).unwrap() {
            CardClass::Tree => {
                tree_cards += 1;
                println!("delete ({u}, {v}): tree           (cycle edge)");
            }
            CardClass::Split { branch_count: bc, forest, .. } => {
                let kind = if bc + 1 == branch_count { "attachment edge" } else { "interior edge" };
                let norm = (u.min(v), u.max(v));
                assert_eq!(attachment.contains(&norm), bc + 1 == branch_count);
                println!(
                    "delete ({u}, {v}): split, {} branches left, tree part has {} vertices ({kind})",
                    bc,
                    forest.n()
                );
            }
        }
    }

    // Tree cards correspond exactly to cycle edges, so their count recovers
    // the cycle length from the deck alone.
    assert_eq!(tree_cards, d.cycle().len());
    println!("\ntree cards: {tree_cards} = cycle length");
}
