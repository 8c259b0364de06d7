//! Read and write graphs and decks as files.
//!
//! Graphs travel as whitespace edge lists ("n m" header, one edge per line)
//! or as JSON; decks travel as JSON with one hex certificate per card,
//! optionally collapsed to (certificate, count) pairs or expanded with each
//! card's own edge list for debugging.

use unideck::format::{
    parse_deck_json, parse_edge_list, write_deck_json, write_edge_list, DeckWriteOptions,
};
use unideck::{build_deck, deck_equal, Graph};

fn main() {
    let g = Graph::new(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (3, 5)]).unwrap();

    let text = write_edge_list(&g);
    println!("edge list:\n{text}");
    let back = parse_edge_list(&text).unwrap();
    assert_eq!(g.edges(), back.edges());

    let deck = build_deck(&g).unwrap();
    let json = write_deck_json(&deck, DeckWriteOptions::default());
    println!("deck file ({} bytes):\n{json}", json.len());
    assert!(deck_equal(&deck, &parse_deck_json(&json).unwrap()));

    // Set mode: repeated cards become one entry with a count.
    let compact = write_deck_json(
        &deck,
        DeckWriteOptions { set_mode: true, ..Default::default() },
    );
    println!("set mode:\n{compact}");
    assert!(deck_equal(&deck, &parse_deck_json(&compact).unwrap()));

    // Debug mode: embed a concrete edge list for every card. The parser
    // recomputes each certificate and cross-checks it.
    let verbose = write_deck_json(
        &deck,
        DeckWriteOptions { debug_cards: true, ..Default::default() },
    );
    assert!(deck_equal(&deck, &parse_deck_json(&verbose).unwrap()));
    println!("debug mode is {} bytes", verbose.len());
}
