//! Reconstruction of a unicyclic graph from its deck: find the branch types
//! that occur exactly once, pick two branch-deleted cards that between them
//! retain every branch, align their cycles at the unique branches, and merge.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::certificate::{
    certificate_unicyclic, dihedral_min, parse_rooted_payload, CertClass, Certificate,
};
use crate::deck::{build_deck, deck_equal, split_branch_count_range, unicyclic_cards, Deck, SplitInfo};
use crate::graph::Graph;
use crate::unicyclic::{decompose, UnicyclicError};

/// Errors from the reconstruction pipeline and its stages.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReconstructError {
    #[error("deck violates the reconstruction hypotheses: {0}")]
    HypothesesViolated(String),
    #[error("no branch type occurs exactly once")]
    NoUniqueBranchFound,
    #[error("no pair of branch-deleted cards retains every unique branch")]
    NoSuchPair,
    #[error("cards cannot be aligned: {0}")]
    NoAlignment(String),
    #[error("branch multisets at cycle position {position} are incomparable")]
    InconsistentMultisets { position: usize },
    #[error("deck is not reconstructable: {0}")]
    NotReconstructable(NotReconstructableReason),
    #[error("{candidates} non-isomorphic graphs match this deck; uniqueness is violated")]
    Ambiguous { candidates: usize },
}

/// Structured reason why a deck admits no reconstruction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotReconstructableReason {
    NoUnicyclicCards,
    UniformSplitCards,
    TooFewUnicyclicCards { found: usize },
    InconsistentCycleLengths,
    CycleTooShort { len: usize },
    TooFewUniqueBranches { found: usize },
    NoCandidateMatchesDeck,
}

impl std::fmt::Display for NotReconstructableReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NotReconstructableReason::NoUnicyclicCards => write!(f, "no unicyclic cards"),
            NotReconstructableReason::UniformSplitCards => write!(
                f,
                "all split cards share one branch count; the cards that lost a branch cannot be told apart"
            ),
            NotReconstructableReason::TooFewUnicyclicCards { found } => {
                write!(f, "only {found} branch-deleted cards, need at least 5")
            }
            NotReconstructableReason::InconsistentCycleLengths => {
                write!(f, "branch-deleted cards disagree on the cycle length")
            }
            NotReconstructableReason::CycleTooShort { len } => {
                write!(f, "cycle length {len} < 5")
            }
            NotReconstructableReason::TooFewUniqueBranches { found } => {
                write!(f, "only {found} branch types occur exactly once, need at least 3")
            }
            NotReconstructableReason::NoCandidateMatchesDeck => {
                write!(f, "no candidate reproduces the deck")
            }
        }
    }
}

/// Positional view of a connected unicyclic graph: for every cycle position
/// the sorted multiset of rooted branch certificates, stored in the minimal
/// rotation/reflection.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct BranchProfile {
    c: usize,
    slots: Vec<Vec<Certificate>>,
}

impl BranchProfile {
    /// Canonicalizes raw per-position branch certificates.
    pub fn from_slots(c: usize, mut slots: Vec<Vec<Certificate>>) -> BranchProfile {
        assert_eq!(c, slots.len(), "one slot per cycle position");
        for s in &mut slots {
            s.sort();
        }
        BranchProfile { c, slots: dihedral_min(&slots) }
    }

    /// Profile of a connected unicyclic graph.
    pub fn from_graph(g: &Graph) -> Result<BranchProfile, UnicyclicError> {
        let d = decompose(g)?;
        let slots: Vec<Vec<Certificate>> = d
            .cycle()
            .iter()
            .map(|&v| d.branches_at(v).map(|b| b.certificate().clone()).collect())
            .collect();
        Ok(BranchProfile::from_slots(d.cycle().len(), slots))
    }

    /// Cycle length.
    pub fn cycle_len(&self) -> usize {
        self.c
    }

    /// Sorted branch certificates per cycle position.
    pub fn slots(&self) -> &[Vec<Certificate>] {
        &self.slots
    }

    /// Total branch count.
    pub fn total_branches(&self) -> usize {
        self.slots.iter().map(Vec::len).sum()
    }

    /// All branch certificates with multiplicity, sorted.
    pub fn branch_multiset(&self) -> Vec<Certificate> {
        let mut all: Vec<Certificate> = self.slots.iter().flatten().cloned().collect();
        all.sort();
        all
    }

    /// True if every given certificate occurs somewhere in the profile.
    pub fn contains_all(&self, certs: &[&Certificate]) -> bool {
        certs
            .iter()
            .all(|t| self.slots.iter().any(|s| s.contains(t)))
    }

    /// The position holding `t`, provided `t` occurs exactly once in the
    /// whole profile.
    pub fn slot_of_unique(&self, t: &Certificate) -> Option<usize> {
        let mut found: Option<usize> = None;
        for (i, s) in self.slots.iter().enumerate() {
            match s.iter().filter(|&x| x == t).count() {
                0 => {}
                1 if found.is_none() => found = Some(i),
                _ => return None,
            }
        }
        found
    }

    /// Copy of the profile with one extra branch at the given position.
    pub fn with_branch_added(&self, pos: usize, t: &Certificate) -> BranchProfile {
        let mut slots = self.slots.clone();
        slots[pos].push(t.clone());
        BranchProfile::from_slots(self.c, slots)
    }

    /// A concrete labeled graph with this profile: cycle vertices `0..c`,
    /// branch interiors labeled in slot order.
    pub fn to_graph(&self) -> Graph {
        let c = self.c;
        let mut edges: Vec<(usize, usize)> = (0..c).map(|i| (i, (i + 1) % c)).collect();
        let mut next = c;
        for (pos, slot) in self.slots.iter().enumerate() {
            for cert in slot {
                attach_branch(cert, pos, &mut next, &mut edges);
            }
        }
        Graph::new(next, &edges).expect("profile expansion is a valid graph")
    }
}

fn attach_branch(cert: &Certificate, root_label: usize, next: &mut usize, edges: &mut Vec<(usize, usize)>) {
    debug_assert_eq!(cert.class(), CertClass::RootedTree);
    let (bn, bedges) =
        parse_rooted_payload(cert.payload()).expect("branch certificates are well-formed");
    debug_assert!(bn >= 2, "branches have at least one edge");
    let base = *next;
    let relabel = |v: usize| if v == 0 { root_label } else { base + v - 1 };
    edges.extend(bedges.iter().map(|&(u, v)| (relabel(u), relabel(v))));
    *next += bn - 1;
}

/// A dihedral map of one profile's positions onto another's that fixes the
/// unique-branch anchors, plus the chosen anchor pair and its two arcs.
#[derive(Debug, Clone)]
pub struct Alignment {
    c: usize,
    rotation: usize,
    reflected: bool,
    anchors: Vec<(Certificate, usize)>,
    x1: usize,
    x2: usize,
    s_path: Vec<usize>,
    l_path: Vec<usize>,
}

impl Alignment {
    /// Maps a position of the second profile to a position of the first.
    pub fn map_to_first(&self, j: usize) -> usize {
        if self.reflected {
            (self.rotation + self.c - j) % self.c
        } else {
            (self.rotation + j) % self.c
        }
    }

    /// Maps a position of the first profile to a position of the second.
    pub fn map_to_second(&self, i: usize) -> usize {
        if self.reflected {
            // A reflection is its own inverse.
            (self.rotation + self.c - i) % self.c
        } else {
            (i + self.c - self.rotation) % self.c
        }
    }

    /// Anchor certificates with their positions in the first profile.
    pub fn anchors(&self) -> &[(Certificate, usize)] {
        &self.anchors
    }

    /// The chosen anchor pair (positions in the first profile).
    pub fn anchor_pair(&self) -> (usize, usize) {
        (self.x1, self.x2)
    }

    /// Positions of the shorter arc from x1 to x2, endpoints included.
    pub fn s_path(&self) -> &[usize] {
        &self.s_path
    }

    /// Positions of the longer arc from x1 to x2, endpoints included.
    pub fn l_path(&self) -> &[usize] {
        &self.l_path
    }
}

/// Branch types that occur exactly once in the deck's source, read off the
/// branch-deleted cards: a type of source multiplicity 1 appears as a
/// singleton in every card but the one that deleted it (p-1 cards), while a
/// type of multiplicity >= 2 appears as a singleton in at most the 2 cards
/// that deleted one of its copies; with p >= 5 the counts cannot collide.
pub fn identify_unique_branches_from_deck(d: &Deck) -> Result<Vec<Certificate>, ReconstructError> {
    let ucards = unicyclic_cards(d);
    let p = ucards.len();
    if p < 5 {
        return Err(ReconstructError::HypothesesViolated(format!(
            "only {p} branch-deleted cards, need at least 5"
        )));
    }
    let c = ucards[0].profile().cycle_len();
    if ucards.iter().any(|u| u.profile().cycle_len() != c) {
        return Err(ReconstructError::HypothesesViolated(
            "branch-deleted cards disagree on the cycle length".into(),
        ));
    }
    if c < 5 {
        return Err(ReconstructError::HypothesesViolated(format!(
            "cycle length {c} < 5"
        )));
    }
    let mut singleton_count: BTreeMap<Certificate, usize> = BTreeMap::new();
    for u in &ucards {
        let ms = u.profile().branch_multiset();
        let mut i = 0;
        while i < ms.len() {
            let j = ms[i..].iter().take_while(|&t| *t == ms[i]).count();
            if j == 1 {
                *singleton_count.entry(ms[i].clone()).or_default() += 1;
            }
            i += j;
        }
    }
    let uniques: Vec<Certificate> = singleton_count
        .into_iter()
        .filter(|&(_, cnt)| cnt >= p - 1)
        .map(|(t, _)| t)
        .collect();
    if uniques.is_empty() {
        return Err(ReconstructError::NoUniqueBranchFound);
    }
    Ok(uniques)
}

fn admissible_pairs<'a>(
    ucards: &[&'a SplitInfo],
    uniques: &[&Certificate],
) -> Vec<(&'a BranchProfile, &'a BranchProfile)> {
    let holders: Vec<&SplitInfo> = ucards
        .iter()
        .copied()
        .filter(|u| u.profile().contains_all(uniques))
        .collect();
    let mut pairs = Vec::new();
    for i in 0..holders.len() {
        for j in i + 1..holders.len() {
            pairs.push((holders[i].profile(), holders[j].profile()));
        }
    }
    pairs
}

/// Two branch-deleted cards that both retain every unique branch; being two
/// distinct deck entries they deleted different branches, so together they
/// cover every branch of the source.
pub fn select_overlapping_cards(
    d: &Deck,
    uniques: &[Certificate],
) -> Result<(BranchProfile, BranchProfile), ReconstructError> {
    let ucards = unicyclic_cards(d);
    if ucards.len() < 5 {
        return Err(ReconstructError::HypothesesViolated(format!(
            "only {} branch-deleted cards, need at least 5",
            ucards.len()
        )));
    }
    if uniques.len() < 3 {
        return Err(ReconstructError::HypothesesViolated(format!(
            "only {} unique branches, need at least 3",
            uniques.len()
        )));
    }
    let refs: Vec<&Certificate> = uniques.iter().collect();
    admissible_pairs(&ucards, &refs)
        .first()
        .map(|&(a, b)| (a.clone(), b.clone()))
        .ok_or(ReconstructError::NoSuchPair)
}

/// All dihedral maps of `u2` onto `u1` that send every unique-branch anchor
/// onto a position holding the same certificate. Each alignment carries the
/// anchor pair with strictly different arc lengths that the merge walks.
pub fn align(
    u1: &BranchProfile,
    u2: &BranchProfile,
    uniques: &[Certificate],
) -> Result<Vec<Alignment>, ReconstructError> {
    if u1.cycle_len() != u2.cycle_len() {
        return Err(ReconstructError::NoAlignment(format!(
            "cycle lengths {} and {} differ",
            u1.cycle_len(),
            u2.cycle_len()
        )));
    }
    let c = u1.cycle_len();
    let mut anchors1 = Vec::with_capacity(uniques.len());
    let mut anchors2 = Vec::with_capacity(uniques.len());
    for t in uniques {
        let p1 = u1.slot_of_unique(t).ok_or_else(|| {
            ReconstructError::NoAlignment(format!("first card does not hold {} once", t.to_hex()))
        })?;
        let p2 = u2.slot_of_unique(t).ok_or_else(|| {
            ReconstructError::NoAlignment(format!("second card does not hold {} once", t.to_hex()))
        })?;
        anchors1.push((t.clone(), p1));
        anchors2.push(p2);
    }
    for k in 0..anchors1.len() {
        for l in k + 1..anchors1.len() {
            if anchors1[k].1 == anchors1[l].1 || anchors2[k] == anchors2[l] {
                return Err(ReconstructError::NoAlignment(
                    "unique branches share a root".into(),
                ));
            }
        }
    }

    // The anchor pair and its arcs live in u1 coordinates, independent of
    // the particular dihedral map.
    let mut best_key: Option<((usize, usize), (Certificate, Certificate))> = None;
    let mut best: Option<(usize, usize)> = None;
    for k in 0..anchors1.len() {
        for l in k + 1..anchors1.len() {
            let (tk, pk) = &anchors1[k];
            let (tl, pl) = &anchors1[l];
            let fwd = (pl + c - pk) % c;
            let (short, long) = (fwd.min(c - fwd), fwd.max(c - fwd));
            if short == long {
                continue;
            }
            let (ta, tb, pa, pb) = if tk <= tl {
                (tk.clone(), tl.clone(), *pk, *pl)
            } else {
                (tl.clone(), tk.clone(), *pl, *pk)
            };
            let key = ((short, long), (ta, tb));
            if best_key.as_ref().is_none_or(|b| key < *b) {
                best_key = Some(key);
                best = Some((pa, pb));
            }
        }
    }
    let (x1, x2) = best.ok_or_else(|| {
        ReconstructError::NoAlignment("all anchor pairs have equal arcs".into())
    })?;
    let fwd = (x2 + c - x1) % c;
    let walk = |steps: usize, dir_fwd: bool| -> Vec<usize> {
        (0..=steps)
            .map(|k| {
                if dir_fwd {
                    (x1 + k) % c
                } else {
                    (x1 + c - k % c) % c
                }
            })
            .collect()
    };
    let (s_path, l_path) = if fwd < c - fwd {
        (walk(fwd, true), walk(c - fwd, false))
    } else {
        (walk(c - fwd, false), walk(fwd, true))
    };

    let mut out = Vec::new();
    for reflected in [false, true] {
        for rotation in 0..c {
            let a = Alignment {
                c,
                rotation,
                reflected,
                anchors: anchors1.clone(),
                x1,
                x2,
                s_path: s_path.clone(),
                l_path: l_path.clone(),
            };
            let ok = anchors1
                .iter()
                .zip(&anchors2)
                .all(|((_, p1), &p2)| a.map_to_first(p2) == *p1);
            if ok {
                out.push(a);
            }
        }
    }
    if out.is_empty() {
        return Err(ReconstructError::NoAlignment(
            "no dihedral map fixes all anchors".into(),
        ));
    }
    Ok(out)
}

fn multiset_contains(big: &[Certificate], small: &[Certificate]) -> bool {
    // Both sorted.
    let mut i = 0;
    for t in small {
        loop {
            if i >= big.len() {
                return false;
            }
            match big[i].cmp(t) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Equal => {
                    i += 1;
                    break;
                }
                std::cmp::Ordering::Greater => return false,
            }
        }
    }
    true
}

/// Merges two aligned branch-deleted cards into one concrete graph: every
/// position takes the larger of the two branch multisets (each card misses
/// exactly one branch, so the larger multiset is the source's), and the
/// result is assembled by walking the shorter arc, then the longer one,
/// labeling vertices 0.. in walk order.
pub fn merge(
    u1: &BranchProfile,
    u2: &BranchProfile,
    a: &Alignment,
) -> Result<Graph, ReconstructError> {
    let c = u1.cycle_len();
    let mut merged: Vec<Vec<Certificate>> = Vec::with_capacity(c);
    for i in 0..c {
        let j = a.map_to_second(i);
        let s1 = &u1.slots()[i];
        let s2 = &u2.slots()[j];
        if multiset_contains(s1, s2) {
            merged.push(s1.clone());
        } else if multiset_contains(s2, s1) {
            merged.push(s2.clone());
        } else {
            return Err(ReconstructError::InconsistentMultisets { position: i });
        }
    }

    let mut labels: Vec<Option<usize>> = vec![None; c];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut next = 0usize;
    let visit = |pos: usize, next: &mut usize, edges: &mut Vec<(usize, usize)>, labels: &mut Vec<Option<usize>>| -> usize {
        if let Some(l) = labels[pos] {
            return l;
        }
        let l = *next;
        *next += 1;
        labels[pos] = Some(l);
        for cert in &merged[pos] {
            attach_branch(cert, l, next, edges);
        }
        l
    };
    for path in [a.s_path(), a.l_path()] {
        let mut prev = visit(path[0], &mut next, &mut edges, &mut labels);
        for &pos in &path[1..] {
            let cur = visit(pos, &mut next, &mut edges, &mut labels);
            edges.push((prev, cur));
            prev = cur;
        }
    }
    Graph::new(next, &edges).map_err(|e| {
        ReconstructError::NoAlignment(format!("merge produced an invalid graph: {e}"))
    })
}

/// Reconstructs the unique graph whose deck is `d`, searching all admissible
/// card pairs and alignments, then keeping the candidates whose deck equals
/// `d`. Two isomorphic branch-deleted cards can also pin the source down by
/// re-adding their one missing branch at every position, so that completion
/// runs alongside the pairwise merge.
pub fn reconstruct(d: &Deck) -> Result<Graph, ReconstructError> {
    use NotReconstructableReason as Reason;
    let not = |r: Reason| ReconstructError::NotReconstructable(r);

    let Some((min_bc, max_bc)) = split_branch_count_range(d) else {
        return Err(not(Reason::NoUnicyclicCards));
    };
    if min_bc == max_bc {
        return Err(not(Reason::UniformSplitCards));
    }
    let ucards = unicyclic_cards(d);
    let p = ucards.len();
    if p < 5 {
        return Err(not(Reason::TooFewUnicyclicCards { found: p }));
    }
    let c = ucards[0].profile().cycle_len();
    if ucards.iter().any(|u| u.profile().cycle_len() != c) {
        return Err(not(Reason::InconsistentCycleLengths));
    }
    if c < 5 {
        return Err(not(Reason::CycleTooShort { len: c }));
    }
    let uniques = match identify_unique_branches_from_deck(d) {
        Ok(u) => u,
        Err(ReconstructError::NoUniqueBranchFound) => {
            return Err(not(Reason::TooFewUniqueBranches { found: 0 }))
        }
        Err(e) => return Err(e),
    };
    if uniques.len() < 3 {
        return Err(not(Reason::TooFewUniqueBranches { found: uniques.len() }));
    }

    let mut candidates: BTreeMap<Certificate, Graph> = BTreeMap::new();
    let consider = |g: Graph, candidates: &mut BTreeMap<Certificate, Graph>| {
        if g.n() == d.n() && g.m() == d.m() {
            if let Ok(cert) = certificate_unicyclic(&g) {
                candidates.entry(cert).or_insert(g);
            }
        }
    };

    // Pairwise merges over every 3-subset of unique branches, every
    // admissible card pair, and every alignment.
    for a in 0..uniques.len() {
        for b in a + 1..uniques.len() {
            for e in b + 1..uniques.len() {
                let chosen: Vec<&Certificate> = vec![&uniques[a], &uniques[b], &uniques[e]];
                for (p1, p2) in admissible_pairs(&ucards, &chosen) {
                    let chosen_owned: Vec<Certificate> =
                        chosen.iter().map(|&t| t.clone()).collect();
                    let Ok(alignments) = align(p1, p2, &chosen_owned) else {
                        continue;
                    };
                    for al in alignments {
                        if let Ok(g) = merge(p1, p2, &al) {
                            consider(g, &mut candidates);
                        }
                    }
                }
            }
        }
    }

    // Single-card completion: the branch multiset of the source is the
    // positionwise maximum over the branch-deleted cards, so each such card
    // misses exactly one branch; re-add it at every position and let the
    // deck filter decide.
    let mut target: BTreeMap<&Certificate, usize> = BTreeMap::new();
    let multisets: Vec<Vec<Certificate>> =
        ucards.iter().map(|u| u.profile().branch_multiset()).collect();
    for ms in &multisets {
        let mut i = 0;
        while i < ms.len() {
            let run = ms[i..].iter().take_while(|&t| *t == ms[i]).count();
            let e = target.entry(&ms[i]).or_default();
            *e = (*e).max(run);
            i += run;
        }
    }
    for (u, ms) in ucards.iter().zip(&multisets) {
        let mut missing: Option<&Certificate> = None;
        let mut deficit = 0usize;
        for (&t, &want) in &target {
            let have = ms.iter().filter(|&x| x == t).count();
            deficit += want.saturating_sub(have);
            if want > have {
                missing = Some(t);
            }
        }
        let (Some(t), 1) = (missing, deficit) else {
            continue;
        };
        for pos in 0..c {
            consider(u.profile().with_branch_added(pos, t).to_graph(), &mut candidates);
        }
    }

    let mut survivors: Vec<Graph> = Vec::new();
    for g in candidates.into_values() {
        if let Ok(dg) = build_deck(&g) {
            if deck_equal(&dg, d) {
                survivors.push(g);
            }
        }
    }
    match survivors.len() {
        0 => Err(not(Reason::NoCandidateMatchesDeck)),
        1 => Ok(survivors.pop().expect("one survivor")),
        k => Err(ReconstructError::Ambiguous { candidates: k }),
    }
}

/// True if `g`'s deck equals `d`.
pub fn verify(d: &Deck, g: &Graph) -> bool {
    match build_deck(g) {
        Ok(dg) => deck_equal(&dg, d),
        Err(_) => false,
    }
}
