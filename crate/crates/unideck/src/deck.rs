//! Edge decks: the multiset of one-edge-deleted subgraphs of a graph,
//! represented by certificates so deck equality never peeks at labels.

use thiserror::Error;

use crate::certificate::{certificate_forest, graph_certificate, materialize, CertError, Certificate};
use crate::graph::Graph;
use crate::reconstruct::BranchProfile;
use crate::unicyclic::{classify_card, CardClass};

/// Errors from deck construction.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum DeckError {
    #[error("cannot build the deck of an edgeless graph")]
    EmptyGraph,
    #[error(transparent)]
    Cert(#[from] CertError),
    #[error("card inconsistent with deck: {0}")]
    CardMismatch(String),
}

/// Derived data for a two-component card: the positional branch profile of
/// its unicyclic component and the certificate of the split-off forest.
#[derive(Debug, Clone)]
pub struct SplitInfo {
    profile: BranchProfile,
    forest_cert: Certificate,
}

impl SplitInfo {
    /// Canonical positional branch certificates of the unicyclic component.
    pub fn profile(&self) -> &BranchProfile {
        &self.profile
    }

    /// Certificate of the forest (always a single tree) that split off.
    pub fn forest_cert(&self) -> &Certificate {
        &self.forest_cert
    }

    /// Branch count of the unicyclic component.
    pub fn branch_count(&self) -> usize {
        self.profile.total_branches()
    }
}

/// Structural category of a card, when the card has the shape a unicyclic
/// source produces (n vertices, n-1 edges).
#[derive(Debug, Clone)]
pub enum CardMeta {
    Tree,
    Split(SplitInfo),
}

/// One deck entry: the certificate of the whole edge-deleted subgraph plus
/// derived classification data. Comparison uses the certificate only.
#[derive(Debug, Clone)]
pub struct Card {
    cert: Certificate,
    meta: Option<CardMeta>,
}

impl Card {
    /// Certificate of the whole (possibly disconnected) card.
    pub fn cert(&self) -> &Certificate {
        &self.cert
    }

    /// Classification, when the card is shaped like an edge-deleted
    /// unicyclic graph.
    pub fn meta(&self) -> Option<&CardMeta> {
        self.meta.as_ref()
    }

    /// Split data, when this is a two-component card.
    pub fn split(&self) -> Option<&SplitInfo> {
        match self.meta.as_ref()? {
            CardMeta::Split(info) => Some(info),
            CardMeta::Tree => None,
        }
    }
}

/// A deck: canonically sorted multiset of cards with the source vertex count.
#[derive(Debug, Clone)]
pub struct Deck {
    n: usize,
    cards: Vec<Card>,
}

impl Deck {
    /// Vertex count of the source graph (and of every card).
    pub fn n(&self) -> usize {
        self.n
    }

    /// Card count, which equals the source edge count.
    pub fn m(&self) -> usize {
        self.cards.len()
    }

    /// Cards in canonical certificate order.
    pub fn cards(&self) -> &[Card] {
        &self.cards
    }

    /// Rebuilds a deck from bare certificates (e.g. a parsed deck file),
    /// re-deriving card classification from materialized representatives.
    pub fn from_certificates(n: usize, certs: Vec<Certificate>) -> Result<Deck, DeckError> {
        let mut cards = Vec::with_capacity(certs.len());
        for cert in certs {
            let g = materialize(&cert)?;
            if g.n() != n {
                return Err(DeckError::CardMismatch(format!(
                    "card has {} vertices, deck says {n}",
                    g.n()
                )));
            }
            cards.push(Card { meta: card_meta(&g), cert });
        }
        cards.sort_by(|a, b| a.cert.cmp(&b.cert));
        Ok(Deck { n, cards })
    }
}

fn card_meta(h: &Graph) -> Option<CardMeta> {
    if h.m() + 1 != h.n() {
        return None;
    }
    match classify_card(h) {
        Ok(CardClass::Tree) => Some(CardMeta::Tree),
        Ok(CardClass::Split { unicyclic, forest, .. }) => {
            let profile = BranchProfile::from_graph(&unicyclic)
                .expect("split component is connected unicyclic");
            let forest_cert =
                certificate_forest(&forest).expect("split remainder is a forest");
            Some(CardMeta::Split(SplitInfo { profile, forest_cert }))
        }
        Err(_) => None,
    }
}

/// Builds the deck of `g`: one card per edge, kept with multiplicity,
/// sorted canonically.
pub fn build_deck(g: &Graph) -> Result<Deck, DeckError> {
    if g.m() == 0 {
        return Err(DeckError::EmptyGraph);
    }
    let mut cards = Vec::with_capacity(g.m());
    for &(u, v) in g.edges() {
        let h = g.delete_edge(u, v).expect("iterating existing edges");
        let cert = graph_certificate(&h)?;
        cards.push(Card { meta: card_meta(&h), cert });
    }
    cards.sort_by(|a, b| a.cert.cmp(&b.cert));
    Ok(Deck { n: g.n(), cards })
}

/// Deck equality: same vertex count and the same card-certificate multiset.
pub fn deck_equal(a: &Deck, b: &Deck) -> bool {
    a.n == b.n
        && a.cards.len() == b.cards.len()
        && a.cards
            .iter()
            .zip(&b.cards)
            .all(|(x, y)| x.cert == y.cert)
}

/// The split cards whose unicyclic component has the minimal branch count:
/// for a deck of a unicyclic source these are exactly the cards that lost a
/// whole branch (the others keep the full branch count).
pub fn unicyclic_cards(d: &Deck) -> Vec<&SplitInfo> {
    let splits: Vec<&SplitInfo> = d.cards.iter().filter_map(Card::split).collect();
    let Some(min) = splits.iter().map(|s| s.branch_count()).min() else {
        return Vec::new();
    };
    splits
        .into_iter()
        .filter(|s| s.branch_count() == min)
        .collect()
}

/// Minimum and maximum branch count over all split cards, if any.
pub fn split_branch_count_range(d: &Deck) -> Option<(usize, usize)> {
    let counts: Vec<usize> = d
        .cards
        .iter()
        .filter_map(Card::split)
        .map(SplitInfo::branch_count)
        .collect();
    Some((*counts.iter().min()?, *counts.iter().max()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::{isomorphic_by_search, CertClass};
    use crate::testutil::{fig_triangle_ucd5, fixture_class_u_15, random_permutation};
    use rand::SeedableRng;

    #[test]
    fn cycle_deck_is_five_equal_paths() {
        let d = build_deck(&Graph::cycle(5)).unwrap();
        assert_eq!(d.m(), 5);
        assert!(d.cards().iter().all(|c| c.cert() == d.cards()[0].cert()));
        assert_eq!(d.cards()[0].cert().class(), CertClass::Tree);
        assert!(unicyclic_cards(&d).is_empty());
    }

    #[test]
    fn nine_edge_fixture_deck_shape() {
        let d = build_deck(&fig_triangle_ucd5()).unwrap();
        assert_eq!(d.m(), 9);
        let trees = d
            .cards()
            .iter()
            .filter(|c| matches!(c.meta(), Some(CardMeta::Tree)))
            .count();
        assert_eq!(trees, 3);
        let with_four_branches = d
            .cards()
            .iter()
            .filter_map(Card::split)
            .filter(|s| s.branch_count() == 4)
            .count();
        assert_eq!(with_four_branches, 5);
        assert_eq!(unicyclic_cards(&d).len(), 5);
        assert_eq!(split_branch_count_range(&d), Some((4, 5)));
    }

    #[test]
    fn class_u_fixture_deck_shape() {
        let d = build_deck(&fixture_class_u_15()).unwrap();
        assert_eq!(d.m(), 15);
        let by_count = |k: usize| {
            d.cards()
                .iter()
                .filter_map(Card::split)
                .filter(|s| s.branch_count() == k)
                .count()
        };
        assert_eq!(by_count(4), 5);
        assert_eq!(by_count(5), 5);
        let trees = d
            .cards()
            .iter()
            .filter(|c| matches!(c.meta(), Some(CardMeta::Tree)))
            .count();
        assert_eq!(trees, 5);
        let u = unicyclic_cards(&d);
        assert_eq!(u.len(), 5);
        assert!(u.iter().all(|s| s.profile().cycle_len() == 5));
        assert!(u.iter().all(|s| s.branch_count() == 4));
    }

    #[test]
    fn deck_ignores_labels() {
        let g = fixture_class_u_15();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let h = g
            .apply_permutation(&random_permutation(g.n(), &mut rng))
            .unwrap();
        assert!(deck_equal(&build_deck(&g).unwrap(), &build_deck(&h).unwrap()));
    }

    #[test]
    fn deck_distinguishes_swapped_branches() {
        let g = fixture_class_u_15();
        // Same branch multiset, but the 3-edge star and 3-edge path trade
        // places between cycle vertices 2 and 3.
        let h = Graph::new(
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
                (9, 10),
                (3, 11),
                (11, 12),
                (11, 13),
                (4, 14),
            ],
        )
        .unwrap();
        assert!(!isomorphic_by_search(&g, &h));
        assert!(!deck_equal(&build_deck(&g).unwrap(), &build_deck(&h).unwrap()));
    }

    #[test]
    fn deck_round_trips_through_certificates() {
        let d = build_deck(&fixture_class_u_15()).unwrap();
        let certs: Vec<Certificate> = d.cards().iter().map(|c| c.cert().clone()).collect();
        let d2 = Deck::from_certificates(d.n(), certs).unwrap();
        assert!(deck_equal(&d, &d2));
        // Re-derived classification matches the direct one.
        assert_eq!(unicyclic_cards(&d2).len(), 5);
        let bad = Deck::from_certificates(14, vec![d.cards()[0].cert().clone()]);
        assert!(bad.is_err());
    }

    #[test]
    fn empty_graph_has_no_deck() {
        let g = Graph::new(3, &[]).unwrap();
        assert_eq!(build_deck(&g).unwrap_err(), DeckError::EmptyGraph);
    }
}
