//! Deck uniqueness, checked by brute force: which graphs share a deck?
//!
//! `deck_preimages` walks an entire family and keeps the graphs whose deck
//! equals a target; `deck_collision_groups` buckets a batch of decks and
//! reports every group of distinct graphs sharing one.

use unideck::oracle::{deck_collision_groups, deck_preimages, enumerate_unlabeled, EnumerationSpec};
use unideck::{build_deck, graph_certificate, Graph};

fn main() {
    // The smallest failure of deck uniqueness: two 4-vertex forests, a
    // perfect matching versus a path plus an isolated vertex. Both decks
    // consist of two copies of (one edge + two isolated vertices).
    let matching = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
    let path = Graph::new(4, &[(0, 1), (1, 2)]).unwrap();
    let deck_m = build_deck(&matching).unwrap();
    let pre = deck_preimages(&deck_m, &EnumerationSpec::all_graphs(4)).unwrap();
    println!("graphs on 4 vertices sharing the matching's deck: {}", pre.len());
    for g in &pre {
        println!(
            "  {} with edges {:?}",
            graph_certificate(g).unwrap().to_hex(),
            g.edges()
        );
    }
    assert_eq!(pre.len(), 2);
    let path_cert = graph_certificate(&path).unwrap();
    assert!(pre.iter().any(|g| graph_certificate(g).unwrap() == path_cert));

    // Among connected unicyclic graphs the picture is clean at small sizes:
    // bucket all decks on eight vertices and look for collisions.
    let family = enumerate_unlabeled(&EnumerationSpec::connected_unicyclic(8)).unwrap();
    let groups = deck_collision_groups(&family);
    println!(
        "\nconnected unicyclic, n = 8: {} graphs, {} deck collisions",
        family.len(),
        groups.len()
    );
    assert!(groups.is_empty());

    // A deck pins down its graph inside the family; a single preimage means
    // no other member could have produced the observations.
    let g = family[17].clone();
    let pre = deck_preimages(
        &build_deck(&g).unwrap(),
        &EnumerationSpec::connected_unicyclic(8),
    )
    .unwrap();
    assert_eq!(pre.len(), 1);
    assert_eq!(
        graph_certificate(&pre[0]).unwrap(),
        graph_certificate(&g).unwrap()
    );
    println!("one sample deck searched: unique preimage, as expected");
}
