//! Build the edge deck of a graph and look at its cards.
//!
//! The deck of G is the multiset of one-edge-deleted subgraphs, each kept
//! only as a canonical certificate. Two graphs with the same deck cannot be
//! told apart by any single-edge-deletion observation.

use unideck::{build_deck, deck_equal, Graph};

fn main() {
    // 5-cycle with a pendant at 0, a 2-edge path at 1, a 3-edge star at 2,
    // a 3-edge path at 3, and a pendant at 4.
    let g = Graph::new(
        15,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (0, 4),
            (0, 5),
            (1, 6),
            (6, 7),
            (2, 8),
            (8, 9),
            (8, 10),
            (3, 11),
            (11, 12),
            (12, 13),
            (4, 14),
        ],
    )
    .unwrap();

    let deck = build_deck(&g).unwrap();
    println!("graph: n = {}, m = {}", g.n(), g.m());
    println!("deck:  {} cards\n", deck.m());

    // Cards are stored sorted, so runs of equal certificates are adjacent.
    let cards = deck.cards();
    let mut i = 0;
    while i < cards.len() {
        let run = cards[i..].iter().take_while(|c| c.cert() == cards[i].cert()).count();
        println!("  x{run}  {}", cards[i].cert().to_hex());
        i += run;
    }

    // The deck is label-independent: shuffle the vertex names and the deck
    // comes out identical.
    let perm = [7, 3, 11, 0, 9, 14, 2, 8, 1, 13, 5, 6, 12, 4, 10];
    let relabeled: Vec<(usize, usize)> =
        g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    let h = Graph::new(15, &relabeled).unwrap();
    let deck_h = build_deck(&h).unwrap();
    println!("\nrelabeled graph has an equal deck: {}", deck_equal(&deck, &deck_h));
}
