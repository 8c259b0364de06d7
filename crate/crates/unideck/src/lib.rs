//! Edge decks of unicyclic graphs.
//!
//! A deck is the multiset of one-edge-deleted subgraphs of a graph, each
//! taken up to isomorphism. This crate builds decks, decomposes a connected
//! unicyclic graph into its cycle and the branches hanging off it, and
//! reconstructs such a graph from its deck alone: branch types occurring
//! exactly once are read off the branch-deleted cards, two overlapping cards
//! are aligned at those branches, and their merge is checked against the
//! deck. Exhaustive enumeration at small sizes provides an independent check
//! that the decks in question determine their graph uniquely.
//!
//! The pieces:
//!
//! - [`graph`]: labeled graphs as sorted edge lists, components, predicates.
//! - [`certificate`]: canonical byte certificates for trees, forests,
//!   unicyclic graphs, and small general graphs; two graphs get equal
//!   certificates exactly when they are isomorphic.
//! - [`unicyclic`]: cycle/trunk/branch decomposition and the class of
//!   reconstruction-friendly inputs.
//! - [`deck`]: building decks and classifying cards.
//! - [`reconstruct`]: the identify / select / align / merge pipeline.
//! - [`oracle`]: brute-force enumeration and deck-preimage search.
//! - [`format`]: edge-list and JSON readers/writers for graphs and decks.
//! - [`cli`]: the `unideck` binary wiring all of the above to files.

pub mod certificate;
pub mod deck;
pub mod format;
pub mod graph;
pub mod oracle;
pub mod reconstruct;
pub mod unicyclic;

pub mod cli;

#[cfg(test)]
pub(crate) mod testutil;

pub use certificate::{are_isomorphic, graph_certificate, CertClass, CertError, Certificate};
pub use deck::{build_deck, deck_equal, Card, Deck, DeckError};
pub use graph::{Graph, GraphError, RootedTree};
pub use reconstruct::{reconstruct, verify, BranchProfile, ReconstructError};
pub use unicyclic::{decompose, in_class_u, ucd, CycleDecomposition, UnicyclicError};
