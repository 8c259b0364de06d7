//! Brute-force ground truth: exhaustive enumeration of small unlabeled graph
//! families, deck-preimage search, and seeded random generators.
//!
//! Enumeration is by exhaustive augmentation with certificate dedup, and
//! preimage search literally rebuilds decks and compares them, so results
//! from here are independent of the reconstruction pipeline they back up.

use std::collections::{BTreeMap, HashMap};
use std::hash::{DefaultHasher, Hash, Hasher};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::certificate::{graph_certificate, parse_rooted_payload, Certificate};
use crate::deck::{build_deck, deck_equal, Deck};
use crate::graph::{Graph, RootedTree};
use crate::unicyclic::in_class_u;

/// Hard ceiling for the all-graphs family.
pub const ALL_GRAPHS_MAX_N: usize = 8;
/// Hard ceiling for the connected-unicyclic and class-U families.
pub const UNICYCLIC_MAX_N: usize = 16;
/// Rejection-sampling attempt budget for the class-U generator.
const CLASS_U_ATTEMPTS: usize = 10_000;
/// Largest single branch the class-U generator will draw.
const MAX_RANDOM_BRANCH: usize = 12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("n = {n} exceeds the guard {guard} for the {family} family")]
    GuardExceeded { family: Family, n: usize, guard: usize },
    #[error("spec mismatch: {0}")]
    SpecMismatch(String),
    #[error("budget infeasible: {0}")]
    BudgetInfeasible(String),
}

/// Families the enumerator knows how to exhaust.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    AllGraphs,
    ConnectedUnicyclic,
    ClassU,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Family::AllGraphs => write!(f, "all-graphs"),
            Family::ConnectedUnicyclic => write!(f, "connected-unicyclic"),
            Family::ClassU => write!(f, "class-u"),
        }
    }
}

/// What to enumerate: a family, a vertex count, and optional narrowing.
/// A caller-supplied guard can only lower the built-in ceiling.
#[derive(Debug, Clone)]
pub struct EnumerationSpec {
    pub family: Family,
    pub n: usize,
    pub edge_count: Option<usize>,
    pub max_n_guard: Option<usize>,
}

impl EnumerationSpec {
    pub fn all_graphs(n: usize) -> Self {
        EnumerationSpec { family: Family::AllGraphs, n, edge_count: None, max_n_guard: None }
    }

    pub fn connected_unicyclic(n: usize) -> Self {
        EnumerationSpec {
            family: Family::ConnectedUnicyclic,
            n,
            edge_count: None,
            max_n_guard: None,
        }
    }

    pub fn class_u(n: usize) -> Self {
        EnumerationSpec { family: Family::ClassU, n, edge_count: None, max_n_guard: None }
    }

    pub fn with_edge_count(mut self, m: usize) -> Self {
        self.edge_count = Some(m);
        self
    }

    pub fn with_guard(mut self, guard: usize) -> Self {
        self.max_n_guard = Some(guard);
        self
    }

    fn effective_guard(&self) -> usize {
        let builtin = match self.family {
            Family::AllGraphs => ALL_GRAPHS_MAX_N,
            Family::ConnectedUnicyclic | Family::ClassU => UNICYCLIC_MAX_N,
        };
        self.max_n_guard.map_or(builtin, |g| g.min(builtin))
    }

    pub fn check_guard(&self) -> Result<(), OracleError> {
        let guard = self.effective_guard();
        if self.n > guard {
            return Err(OracleError::GuardExceeded { family: self.family, n: self.n, guard });
        }
        Ok(())
    }
}

/// All rooted-tree certificate payloads up to a vertex count, indexed by
/// vertex count. Children of every node are emitted in ascending byte
/// order, so each payload is byte-identical to the certificate of any of
/// its labelings.
pub struct RootedTreeCatalog {
    by_size: Vec<Vec<Vec<u8>>>,
}

impl RootedTreeCatalog {
    pub fn up_to(max_size: usize) -> RootedTreeCatalog {
        let mut by_size: Vec<Vec<Vec<u8>>> = vec![Vec::new(); max_size + 1];
        if max_size >= 1 {
            by_size[1].push(b"()".to_vec());
        }
        for k in 2..=max_size {
            // A tree on k vertices is a root plus a multiset of child
            // subtrees totalling k-1 vertices; enumerating the children as
            // ascending payload sequences hits each multiset exactly once.
            let mut cands: Vec<&[u8]> = Vec::new();
            for smaller in &by_size[1..k] {
                cands.extend(smaller.iter().map(Vec::as_slice));
            }
            cands.sort();
            let mut out: Vec<Vec<u8>> = Vec::new();
            let mut cur: Vec<u8> = Vec::new();
            fn fill(
                cands: &[&[u8]],
                start: usize,
                remaining: usize,
                cur: &mut Vec<u8>,
                out: &mut Vec<Vec<u8>>,
            ) {
                if remaining == 0 {
                    let mut p = Vec::with_capacity(cur.len() + 2);
                    p.push(b'(');
                    p.extend_from_slice(cur);
                    p.push(b')');
                    out.push(p);
                    return;
                }
                for i in start..cands.len() {
                    let size = cands[i].len() / 2;
                    if size > remaining {
                        continue;
                    }
                    let keep = cur.len();
                    cur.extend_from_slice(cands[i]);
                    fill(cands, i, remaining - size, cur, out);
                    cur.truncate(keep);
                }
            }
            fill(&cands, 0, k - 1, &mut cur, &mut out);
            out.sort();
            by_size[k] = out;
        }
        RootedTreeCatalog { by_size }
    }

    pub fn max_size(&self) -> usize {
        self.by_size.len().saturating_sub(1)
    }

    /// Sorted payloads of all rooted trees on `size` vertices.
    pub fn payloads(&self, size: usize) -> &[Vec<u8>] {
        &self.by_size[size]
    }

    pub fn count(&self, size: usize) -> usize {
        self.by_size[size].len()
    }

    /// Materializes the `index`-th rooted tree on `size` vertices; labels
    /// are assigned in payload reading order with the root at 0.
    pub fn tree(&self, size: usize, index: usize) -> RootedTree {
        let (n, edges) = parse_rooted_payload(&self.by_size[size][index])
            .expect("catalog payloads parse");
        RootedTree::new(Graph::new(n, &edges).expect("catalog trees are simple"), 0)
            .expect("catalog entries are trees")
    }
}

/// One representative per isomorphism class of the selected family.
pub fn enumerate_unlabeled(spec: &EnumerationSpec) -> Result<Vec<Graph>, OracleError> {
    spec.check_guard()?;
    if spec.n == 0 {
        return Err(OracleError::BudgetInfeasible("n must be at least 1".into()));
    }
    let mut graphs = match spec.family {
        Family::AllGraphs => enumerate_all_graphs(spec.n),
        Family::ConnectedUnicyclic => enumerate_connected_unicyclic(spec.n, 3),
        Family::ClassU => enumerate_connected_unicyclic(spec.n, 5)
            .into_iter()
            .filter(|g| in_class_u(g).0)
            .collect(),
    };
    if let Some(m) = spec.edge_count {
        graphs.retain(|g| g.m() == m);
    }
    Ok(graphs)
}

/// Every unlabeled graph on n vertices, grown one edge at a time from the
/// edgeless graph with certificate dedup per level. Deleting an edge of any
/// graph stays in the family, so the growth reaches everything.
fn enumerate_all_graphs(n: usize) -> Vec<Graph> {
    let empty = Graph::new(n, &[]).expect("edgeless graph");
    let mut out = vec![empty.clone()];
    let mut frontier = vec![empty];
    let max_m = n * (n - 1) / 2;
    for _ in 1..=max_m {
        let mut next: BTreeMap<Certificate, Graph> = BTreeMap::new();
        for g in &frontier {
            for u in 0..n {
                for v in u + 1..n {
                    if g.has_edge(u, v) {
                        continue;
                    }
                    let mut edges = g.edges().to_vec();
                    edges.push((u, v));
                    let h = Graph::new(n, &edges).expect("adding a fresh edge");
                    let cert = graph_certificate(&h).expect("n is within the generic bound");
                    next.entry(cert).or_insert(h);
                }
            }
        }
        frontier = next.into_values().collect();
        out.extend(frontier.iter().cloned());
    }
    out
}

/// Connected unicyclic graphs as a cycle of length c with a rooted tree at
/// every cycle position; a graph is kept iff its sequence of rooted-tree
/// payloads is the minimum over rotations and reflections, so each
/// isomorphism class shows up exactly once.
fn enumerate_connected_unicyclic(n: usize, min_cycle: usize) -> Vec<Graph> {
    if n < min_cycle {
        return Vec::new();
    }
    let catalog = RootedTreeCatalog::up_to(n - min_cycle + 1);
    let mut out = Vec::new();
    for c in min_cycle..=n {
        let mut seq: Vec<&[u8]> = Vec::with_capacity(c);
        fill_positions(n - c, c, &catalog, &mut seq, &mut out);
    }
    out
}

fn fill_positions<'a>(
    spare: usize,
    c: usize,
    catalog: &'a RootedTreeCatalog,
    seq: &mut Vec<&'a [u8]>,
    out: &mut Vec<Graph>,
) {
    if seq.len() == c {
        if spare == 0 && crate::certificate::dihedral_min(seq) == *seq {
            out.push(graph_of_tree_sequence(c, seq));
        }
        return;
    }
    let left = c - seq.len();
    for extra in 0..=spare {
        // The remaining positions must be able to absorb the rest.
        if spare - extra > (left - 1) * (catalog.max_size() - 1) {
            continue;
        }
        for payload in catalog.payloads(extra + 1) {
            seq.push(payload);
            fill_positions(spare - extra, c, catalog, seq, out);
            seq.pop();
        }
    }
}

fn graph_of_tree_sequence(c: usize, seq: &[&[u8]]) -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..c).map(|i| (i, (i + 1) % c)).collect();
    let mut next = c;
    for (pos, payload) in seq.iter().enumerate() {
        let (tn, tedges) = parse_rooted_payload(payload).expect("catalog payloads are well-formed");
        let relabel = |v: usize| if v == 0 { pos } else { next + v - 1 };
        edges.extend(tedges.iter().map(|&(u, v)| (relabel(u), relabel(v))));
        next += tn - 1;
    }
    Graph::new(next, &edges).expect("tree sequence expansion is a valid graph")
}

/// All enumerated isomorphism-class representatives whose deck equals `d`.
/// A cheap filter on the multiset of card degree sequences rejects most
/// graphs before any deck is built.
pub fn deck_preimages(d: &Deck, spec: &EnumerationSpec) -> Result<Vec<Graph>, OracleError> {
    if spec.n != d.n() {
        return Err(OracleError::SpecMismatch(format!(
            "spec has n = {} but the deck has n = {}",
            spec.n,
            d.n()
        )));
    }
    let want = card_degree_signature(d);
    let mut out = Vec::new();
    for g in enumerate_unlabeled(spec)? {
        if g.m() != d.m() || graph_card_degree_signature(&g) != want {
            continue;
        }
        if let Ok(dg) = build_deck(&g) {
            if deck_equal(&dg, d) {
                out.push(g);
            }
        }
    }
    Ok(out)
}

/// Sorted multiset of sorted card degree sequences, from the deck.
fn card_degree_signature(d: &Deck) -> Vec<Vec<usize>> {
    let mut sig: Vec<Vec<usize>> = d
        .cards()
        .iter()
        .map(|card| {
            crate::certificate::materialize(card.cert())
                .map(|g| g.degree_sequence())
                .unwrap_or_default()
        })
        .collect();
    sig.sort();
    sig
}

/// The same signature a graph's deck would have, without building any card
/// certificates: deleting (u, v) just decrements two degrees.
fn graph_card_degree_signature(g: &Graph) -> Vec<Vec<usize>> {
    let degs = g.degrees();
    let mut sig: Vec<Vec<usize>> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let mut ds = degs.clone();
            ds[u] -= 1;
            ds[v] -= 1;
            ds.sort_unstable();
            ds
        })
        .collect();
    sig.sort();
    sig
}

fn deck_fingerprint_bytes(g: &Graph) -> Vec<u8> {
    let mut bytes = (g.n() as u64).to_le_bytes().to_vec();
    if g.m() == 0 {
        return bytes;
    }
    let deck = build_deck(g).expect("graphs with edges have decks");
    for card in deck.cards() {
        let b = card.cert().to_bytes();
        bytes.extend_from_slice(&(b.len() as u64).to_le_bytes());
        bytes.extend_from_slice(&b);
    }
    bytes
}

/// Groups of indices (size >= 2) whose graphs share a deck. Hashing the
/// serialized decks buckets the candidates; only colliding buckets get an
/// exact recheck.
pub fn deck_collision_groups(graphs: &[Graph]) -> Vec<Vec<usize>> {
    let mut buckets: HashMap<u64, Vec<usize>> = HashMap::new();
    for (i, g) in graphs.iter().enumerate() {
        let mut h = DefaultHasher::new();
        deck_fingerprint_bytes(g).hash(&mut h);
        buckets.entry(h.finish()).or_default().push(i);
    }
    let mut groups = Vec::new();
    for idxs in buckets.into_values() {
        if idxs.len() < 2 {
            continue;
        }
        let mut exact: BTreeMap<Vec<u8>, Vec<usize>> = BTreeMap::new();
        for &i in &idxs {
            exact.entry(deck_fingerprint_bytes(&graphs[i])).or_default().push(i);
        }
        for (_, mut is) in exact {
            if is.len() >= 2 {
                is.sort_unstable();
                groups.push(is);
            }
        }
    }
    groups.sort();
    groups
}

/// A random connected unicyclic graph: a uniform cycle length, then uniform
/// attachment growth. Reaches every isomorphism class (with no uniformity
/// claim).
pub fn random_connected_unicyclic<R: Rng>(n: usize, rng: &mut R) -> Result<Graph, OracleError> {
    if n < 3 {
        return Err(OracleError::BudgetInfeasible(
            "a unicyclic graph needs at least 3 vertices".into(),
        ));
    }
    let c = rng.random_range(3..=n);
    let mut edges: Vec<(usize, usize)> = (0..c).map(|i| (i, (i + 1) % c)).collect();
    for v in c..n {
        edges.push((rng.random_range(0..v), v));
    }
    Ok(Graph::new(n, &edges).expect("growth produces a valid graph"))
}

/// A random member of the reconstructable class, deterministic per seed:
/// cycle length uniform in [5, min(8, n-10)], at least 5 branches with
/// shapes drawn uniformly from the rooted-tree catalog, roots uniform, and
/// rejection until the class test passes.
pub fn random_class_u(n: usize, seed: u64) -> Result<Graph, OracleError> {
    if n < 15 {
        return Err(OracleError::BudgetInfeasible(format!(
            "class members need at least 15 vertices, got {n}"
        )));
    }
    if n > 64 {
        return Err(OracleError::BudgetInfeasible(format!(
            "the generator is desk-scale and stops at 64 vertices, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let catalog = RootedTreeCatalog::up_to(MAX_RANDOM_BRANCH);
    for _ in 0..CLASS_U_ATTEMPTS {
        let c = rng.random_range(5..=8.min(n - 10));
        let budget = n - c;
        let min_b = 5.max(budget.div_ceil(MAX_RANDOM_BRANCH));
        let max_b = budget.min(min_b.max(2 * c));
        let b = rng.random_range(min_b..=max_b);
        // Branch sizes: start everyone at one edge, sprinkle the rest.
        let mut sizes = vec![1usize; b];
        for _ in 0..budget - b {
            loop {
                let i = rng.random_range(0..b);
                if sizes[i] < MAX_RANDOM_BRANCH {
                    sizes[i] += 1;
                    break;
                }
            }
        }
        let mut edges: Vec<(usize, usize)> = (0..c).map(|i| (i, (i + 1) % c)).collect();
        let mut next = c;
        for &s in &sizes {
            // A branch of s edges is a rooted tree on s vertices hanging
            // off a cycle vertex.
            let root = rng.random_range(0..c);
            let shapes = catalog.payloads(s);
            let payload = &shapes[rng.random_range(0..shapes.len())];
            let (tn, tedges) = parse_rooted_payload(payload).expect("catalog payload");
            let relabel = |v: usize| next + v;
            edges.push((root, relabel(0)));
            edges.extend(tedges.iter().map(|&(u, v)| (relabel(u), relabel(v))));
            next += tn;
        }
        let g = Graph::new(n, &edges).expect("generator produces valid graphs");
        if in_class_u(&g).0 {
            return Ok(g);
        }
    }
    Err(OracleError::BudgetInfeasible(format!(
        "no class member found for n = {n} within {CLASS_U_ATTEMPTS} attempts"
    )))
}

/// Census of labeled connected unicyclic graphs on n vertices: the labeled
/// count and the number of isomorphism classes under the general-graph
/// certificate. An independent derivation of the unlabeled count.
pub fn labeled_unicyclic_census(n: usize) -> Result<(usize, usize), OracleError> {
    if n > ALL_GRAPHS_MAX_N {
        return Err(OracleError::GuardExceeded {
            family: Family::AllGraphs,
            n,
            guard: ALL_GRAPHS_MAX_N,
        });
    }
    if n < 3 {
        return Ok((0, 0));
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    let mut labeled = 0usize;
    let mut classes: std::collections::BTreeSet<Certificate> = std::collections::BTreeSet::new();
    // Walk all C(pairs, n) edge subsets in place.
    let mut idx: Vec<usize> = (0..n).collect();
    loop {
        let edges: Vec<(usize, usize)> = idx.iter().map(|&i| pairs[i]).collect();
        if is_connected_edge_set(n, &edges) {
            labeled += 1;
            let g = Graph::new(n, &edges).expect("subset of valid pairs");
            classes.insert(
                crate::certificate::certificate_generic_small(&g)
                    .expect("n is within the generic bound"),
            );
        }
        // Advance to the next combination.
        let mut i = n;
        loop {
            if i == 0 {
                return Ok((labeled, classes.len()));
            }
            i -= 1;
            if idx[i] != i + pairs.len() - n {
                idx[i] += 1;
                for j in i + 1..n {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn is_connected_edge_set(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut comps = n;
    for &(u, v) in edges {
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru != rv {
            parent[ru] = rv;
            comps -= 1;
        }
    }
    comps == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::{are_isomorphic, certificate_rooted_tree, rooted_payload};
    use crate::graph::RootedTree;

    #[test]
    fn rooted_tree_counts_match_known_values() {
        let catalog = RootedTreeCatalog::up_to(9);
        let counts: Vec<usize> = (1..=9).map(|k| catalog.count(k)).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 9, 20, 48, 115, 286]);
    }

    #[test]
    fn catalog_payloads_are_certificates() {
        let catalog = RootedTreeCatalog::up_to(7);
        for k in 1..=7 {
            for payload in catalog.payloads(k) {
                let (tn, tedges) = parse_rooted_payload(payload).unwrap();
                assert_eq!(tn, k);
                let t = RootedTree::new(Graph::new(tn, &tedges).unwrap(), 0).unwrap();
                assert_eq!(certificate_rooted_tree(&t).payload(), &payload[..]);
            }
        }
    }

    fn labeled_tree_from_pruefer(seq: &[usize], n: usize) -> Graph {
        // Standard decoding: degree = multiplicity in seq + 1.
        let mut degree = vec![1usize; n];
        for &x in seq {
            degree[x] += 1;
        }
        let mut edges = Vec::with_capacity(n - 1);
        let mut used = vec![false; n];
        for &x in seq {
            let leaf = (0..n).find(|&v| degree[v] == 1 && !used[v]).unwrap();
            used[leaf] = true;
            degree[leaf] -= 1;
            degree[x] -= 1;
            edges.push((leaf, x));
        }
        let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1 && !used[v]).collect();
        edges.push((rest[0], rest[1]));
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn catalog_agrees_with_labeled_enumeration() {
        // Every rooted labeled tree on k vertices, canonicalized, must give
        // exactly the catalog payload set.
        let catalog = RootedTreeCatalog::up_to(6);
        for k in 3..=6 {
            let mut seen: std::collections::BTreeSet<Vec<u8>> = std::collections::BTreeSet::new();
            let mut seq = vec![0usize; k - 2];
            loop {
                let g = labeled_tree_from_pruefer(&seq, k);
                for root in 0..k {
                    let t = RootedTree::new(g.clone(), root).unwrap();
                    seen.insert(rooted_payload(&t));
                }
                let mut i = 0;
                loop {
                    if i == k - 2 {
                        break;
                    }
                    seq[i] += 1;
                    if seq[i] < k {
                        break;
                    }
                    seq[i] = 0;
                    i += 1;
                }
                if i == k - 2 {
                    break;
                }
            }
            let expect: std::collections::BTreeSet<Vec<u8>> =
                catalog.payloads(k).iter().cloned().collect();
            assert_eq!(seen, expect, "payload sets differ at size {k}");
        }
    }

    #[test]
    fn unicyclic_counts_match_known_values() {
        let counts: Vec<usize> = (3..=9)
            .map(|n| {
                enumerate_unlabeled(&EnumerationSpec::connected_unicyclic(n))
                    .unwrap()
                    .len()
            })
            .collect();
        assert_eq!(counts, vec![1, 2, 5, 13, 33, 89, 240]);
    }

    #[test]
    fn four_vertex_unicyclic_graphs() {
        let graphs = enumerate_unlabeled(&EnumerationSpec::connected_unicyclic(4)).unwrap();
        assert_eq!(graphs.len(), 2);
        let square = Graph::cycle(4);
        let triangle_pendant = Graph::new(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap();
        assert!(graphs.iter().any(|g| are_isomorphic(g, &square)));
        assert!(graphs.iter().any(|g| are_isomorphic(g, &triangle_pendant)));
    }

    #[test]
    fn all_graph_counts_match_known_values() {
        let counts: Vec<usize> = (1..=6)
            .map(|n| enumerate_unlabeled(&EnumerationSpec::all_graphs(n)).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn enumerated_graphs_are_pairwise_distinct() {
        let graphs = enumerate_unlabeled(&EnumerationSpec::connected_unicyclic(7)).unwrap();
        let certs: std::collections::BTreeSet<Certificate> =
            graphs.iter().map(|g| graph_certificate(g).unwrap()).collect();
        assert_eq!(certs.len(), graphs.len());
        for g in &graphs {
            assert!(g.is_connected());
            assert_eq!(g.m(), g.n());
        }
    }

    #[test]
    fn guards_reject_oversized_requests() {
        assert!(matches!(
            enumerate_unlabeled(&EnumerationSpec::all_graphs(9)),
            Err(OracleError::GuardExceeded { guard: 8, .. })
        ));
        assert!(matches!(
            enumerate_unlabeled(&EnumerationSpec::connected_unicyclic(17)),
            Err(OracleError::GuardExceeded { guard: 16, .. })
        ));
        // A custom guard can lower but never raise the ceiling.
        assert!(matches!(
            enumerate_unlabeled(&EnumerationSpec::connected_unicyclic(12).with_guard(10)),
            Err(OracleError::GuardExceeded { guard: 10, .. })
        ));
        assert!(matches!(
            enumerate_unlabeled(&EnumerationSpec::connected_unicyclic(17).with_guard(20)),
            Err(OracleError::GuardExceeded { guard: 16, .. })
        ));
    }

    #[test]
    fn class_u_is_empty_below_fifteen() {
        for n in 5..=12 {
            assert!(enumerate_unlabeled(&EnumerationSpec::class_u(n)).unwrap().is_empty());
        }
    }

    #[test]
    fn cycle_deck_has_itself_as_only_preimage() {
        let c5 = Graph::cycle(5);
        let d = build_deck(&c5).unwrap();
        let pre = deck_preimages(&d, &EnumerationSpec::all_graphs(5)).unwrap();
        assert_eq!(pre.len(), 1);
        assert!(are_isomorphic(&pre[0], &c5));
    }

    #[test]
    fn preimages_reject_mismatched_spec() {
        let d = build_deck(&Graph::cycle(5)).unwrap();
        assert!(matches!(
            deck_preimages(&d, &EnumerationSpec::all_graphs(6)),
            Err(OracleError::SpecMismatch(_))
        ));
    }

    #[test]
    fn impossible_decks_have_no_preimages() {
        // Cards with inconsistent edge counts can come from no graph.
        let card1 = graph_certificate(&Graph::new(5, &[(0, 1), (1, 2)]).unwrap()).unwrap();
        let card2 = graph_certificate(&Graph::new(5, &[(0, 1), (1, 2), (2, 3)]).unwrap()).unwrap();
        let d = Deck::from_certificates(5, vec![card1, card2]).unwrap();
        assert!(deck_preimages(&d, &EnumerationSpec::all_graphs(5)).unwrap().is_empty());
    }

    #[test]
    fn collision_groups_find_equal_decks() {
        let c5 = Graph::cycle(5);
        let c6 = Graph::cycle(6);
        assert!(deck_collision_groups(&[c5.clone(), c6]).is_empty());
        assert_eq!(deck_collision_groups(&[c5.clone(), c5]), vec![vec![0, 1]]);
    }

    #[test]
    fn random_unicyclic_is_unicyclic() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in [3, 5, 9, 16, 20] {
            let g = random_connected_unicyclic(n, &mut rng).unwrap();
            assert!(g.is_connected());
            assert_eq!(g.m(), g.n());
        }
        assert!(random_connected_unicyclic(2, &mut rng).is_err());
    }

    #[test]
    fn random_class_u_hits_the_class() {
        for seed in 0..5 {
            let g = random_class_u(15, seed).unwrap();
            let (ok, diag) = in_class_u(&g);
            assert!(ok, "seed {seed}: {diag}");
            assert_eq!(g.n(), 15);
        }
        let g = random_class_u(20, 7).unwrap();
        assert!(in_class_u(&g).0);
        assert_eq!(g.n(), 20);
    }

    #[test]
    fn random_class_u_is_deterministic() {
        let a = random_class_u(17, 42).unwrap();
        let b = random_class_u(17, 42).unwrap();
        assert_eq!(a.edges(), b.edges());
    }

    #[test]
    fn random_class_u_rejects_small_budgets() {
        assert!(matches!(
            random_class_u(14, 0),
            Err(OracleError::BudgetInfeasible(_))
        ));
    }

    #[test]
    fn labeled_census_agrees_with_unlabeled_enumeration() {
        // n = 6: 3660 labeled connected unicyclic graphs in 13 classes.
        let (labeled, classes) = labeled_unicyclic_census(6).unwrap();
        assert_eq!(labeled, 3660);
        assert_eq!(
            classes,
            enumerate_unlabeled(&EnumerationSpec::connected_unicyclic(6)).unwrap().len()
        );
    }
}
