//! Canonical certificates: label-independent byte encodings whose equality
//! decides isomorphism on the supported graph classes.
//!
//! Payload grammar, per class:
//! - rooted tree: balanced parentheses; a leaf is `()`, an inner vertex wraps
//!   the sorted concatenation of its children's payloads.
//! - tree: the rooted payload after rooting at the tree center; bicentral
//!   trees take the lexicographically smaller of the two center payloads.
//! - forest: concatenation of the component tree payloads, sorted.
//! - unicyclic: decimal cycle length, `:`, then one `[...]` group per cycle
//!   position holding the sorted branch payloads, the whole sequence taken
//!   in its minimal rotation/reflection.
//! - components: sorted length-prefixed component certificates (mixed
//!   disconnected graphs that contain a cycle).
//! - generic: decimal vertex count, `:`, then the upper-triangle adjacency
//!   bits (colex pair order) minimized over all vertex orderings.

use std::collections::HashSet;

use thiserror::Error;

use crate::graph::{Graph, RootedTree};
use crate::unicyclic;

/// Default vertex bound for [`certificate_generic_small`].
pub const GENERIC_BOUND: usize = 12;

/// Errors from certificate construction and decoding.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CertError {
    #[error("input is not a tree")]
    NotATree,
    #[error("input has a cycle")]
    HasCycle,
    #[error("input is not connected unicyclic")]
    NotUnicyclic,
    #[error("graph on {n} vertices exceeds the generic-certificate bound {bound}")]
    SizeBound { n: usize, bound: usize },
    #[error("malformed certificate: {0}")]
    Malformed(String),
}

/// Graph class a certificate speaks for.
///
/// Variant order matches the tag-byte order, so the derived `Ord` agrees
/// with byte-wise order of serialized certificates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CertClass {
    Components,
    Forest,
    Generic,
    RootedTree,
    Tree,
    Unicyclic,
}

impl CertClass {
    fn tag(self) -> u8 {
        match self {
            CertClass::Components => b'C',
            CertClass::Forest => b'F',
            CertClass::Generic => b'G',
            CertClass::RootedTree => b'R',
            CertClass::Tree => b'T',
            CertClass::Unicyclic => b'U',
        }
    }

    fn from_tag(tag: u8) -> Result<Self, CertError> {
        Ok(match tag {
            b'C' => CertClass::Components,
            b'F' => CertClass::Forest,
            b'G' => CertClass::Generic,
            b'R' => CertClass::RootedTree,
            b'T' => CertClass::Tree,
            b'U' => CertClass::Unicyclic,
            other => return Err(CertError::Malformed(format!("unknown class tag {other:#04x}"))),
        })
    }
}

/// Canonical encoding of an unlabeled (possibly rooted) graph.
///
/// Equal certificates mean isomorphic graphs within one class; certificates
/// of different classes are never equal. The derived order (class, then
/// payload) is the canonical sort order used throughout.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Certificate {
    class: CertClass,
    payload: Vec<u8>,
}

impl Certificate {
    fn new(class: CertClass, payload: Vec<u8>) -> Self {
        Certificate { class, payload }
    }

    /// The class this certificate speaks for.
    pub fn class(&self) -> CertClass {
        self.class
    }

    /// Canonical payload bytes (class tag not included).
    pub fn payload(&self) -> &[u8] {
        &self.payload
    }

    /// Full serialized form: one class-tag byte, then the payload.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(1 + self.payload.len());
        out.push(self.class.tag());
        out.extend_from_slice(&self.payload);
        out
    }

    /// Decodes [`Certificate::to_bytes`].
    pub fn from_bytes(bytes: &[u8]) -> Result<Self, CertError> {
        let (&tag, payload) = bytes
            .split_first()
            .ok_or_else(|| CertError::Malformed("empty certificate".into()))?;
        Ok(Certificate::new(CertClass::from_tag(tag)?, payload.to_vec()))
    }

    /// Lowercase base16 form of [`Certificate::to_bytes`].
    pub fn to_hex(&self) -> String {
        hex::encode(self.to_bytes())
    }

    /// Decodes [`Certificate::to_hex`].
    pub fn from_hex(s: &str) -> Result<Self, CertError> {
        let bytes = hex::decode(s).map_err(|e| CertError::Malformed(format!("bad hex: {e}")))?;
        Certificate::from_bytes(&bytes)
    }
}

/// Lexicographically minimal rotation/reflection of a cyclic sequence.
pub(crate) fn dihedral_min<T: Ord + Clone>(seq: &[T]) -> Vec<T> {
    let c = seq.len();
    let mut best: Option<Vec<T>> = None;
    for r in 0..c {
        for refl in [false, true] {
            let cand: Vec<T> = (0..c)
                .map(|i| {
                    let j = if refl { (r + c - i) % c } else { (r + i) % c };
                    seq[j].clone()
                })
                .collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

fn ahu_payload(adj: &[Vec<usize>], root: usize, parent: Option<usize>) -> Vec<u8> {
    let mut kids: Vec<Vec<u8>> = adj[root]
        .iter()
        .filter(|&&w| Some(w) != parent)
        .map(|&w| ahu_payload(adj, w, Some(root)))
        .collect();
    kids.sort();
    let mut out = Vec::with_capacity(2 + kids.iter().map(Vec::len).sum::<usize>());
    out.push(b'(');
    for k in kids {
        out.extend_from_slice(&k);
    }
    out.push(b')');
    out
}

/// Canonical rooted-tree encoding; equal payloads mean rooted-isomorphic.
pub fn certificate_rooted_tree(t: &RootedTree) -> Certificate {
    let payload = ahu_payload(&t.graph().adjacency(), t.root(), None);
    Certificate::new(CertClass::RootedTree, payload)
}

#[cfg(test)]
pub(crate) fn rooted_payload(t: &RootedTree) -> Vec<u8> {
    ahu_payload(&t.graph().adjacency(), t.root(), None)
}

/// Center vertices of a tree (one or two), found by peeling leaves.
fn tree_centers(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let adj = g.adjacency();
    let mut deg = g.degrees();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut removed = vec![false; n];
    let mut remaining = n;
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            remaining -= 1;
            for &w in &adj[v] {
                if !removed[w] {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    (0..n).filter(|&v| !removed[v]).collect()
}

/// Canonical free-tree encoding: root at the center, bicentral trees take
/// the smaller of the two center payloads.
pub fn certificate_tree(g: &Graph) -> Result<Certificate, CertError> {
    if !g.is_tree() {
        return Err(if g.is_forest() { CertError::NotATree } else { CertError::HasCycle });
    }
    let adj = g.adjacency();
    let payload = tree_centers(g)
        .into_iter()
        .map(|c| ahu_payload(&adj, c, None))
        .min()
        .expect("a tree has at least one center");
    Ok(Certificate::new(CertClass::Tree, payload))
}

/// Canonical forest encoding: sorted component tree payloads.
pub fn certificate_forest(g: &Graph) -> Result<Certificate, CertError> {
    if !g.is_forest() {
        return Err(CertError::HasCycle);
    }
    let mut parts: Vec<Vec<u8>> = g
        .connected_components()
        .into_iter()
        .map(|(c, _)| {
            certificate_tree(&c)
                .expect("forest components are trees")
                .payload
        })
        .collect();
    parts.sort();
    Ok(Certificate::new(CertClass::Forest, parts.concat()))
}

/// Canonical encoding of a connected unicyclic graph: cycle length plus the
/// dihedrally minimal sequence of per-position branch payload multisets.
pub fn certificate_unicyclic(g: &Graph) -> Result<Certificate, CertError> {
    let d = unicyclic::decompose(g).map_err(|_| CertError::NotUnicyclic)?;
    Ok(unicyclic_cert_from_slots(d.cycle().len(), &d.branch_payload_slots()))
}

pub(crate) fn unicyclic_cert_from_slots(c: usize, slots: &[Vec<Vec<u8>>]) -> Certificate {
    debug_assert_eq!(c, slots.len());
    // One byte string per position: sorted branch payloads concatenated.
    // Balanced-parentheses payloads are self-delimiting, so the multiset is
    // recoverable and the comparison is a real total order on slot contents.
    let slot_strings: Vec<Vec<u8>> = slots
        .iter()
        .map(|s| {
            let mut sorted = s.clone();
            sorted.sort();
            sorted.concat()
        })
        .collect();
    let min = dihedral_min(&slot_strings);
    let mut payload = format!("{c}:").into_bytes();
    for s in &min {
        payload.push(b'[');
        payload.extend_from_slice(s);
        payload.push(b']');
    }
    Certificate::new(CertClass::Unicyclic, payload)
}

/// Exact canonical form for arbitrary small graphs with the default bound.
pub fn certificate_generic_small(g: &Graph) -> Result<Certificate, CertError> {
    certificate_generic_small_with_bound(g, GENERIC_BOUND)
}

/// Exact canonical form for arbitrary graphs up to `bound` vertices:
/// the lexicographically minimal adjacency bitstring over all vertex
/// orderings, computed level by level keeping every prefix-minimal state.
pub fn certificate_generic_small_with_bound(g: &Graph, bound: usize) -> Result<Certificate, CertError> {
    let n = g.n();
    let cap = bound.min(31);
    if n > cap {
        return Err(CertError::SizeBound { n, bound: cap });
    }
    let mut payload = format!("{n}:").into_bytes();
    if n > 1 {
        payload.extend_from_slice(&min_adjacency_bits(g));
    }
    Ok(Certificate::new(CertClass::Generic, payload))
}

fn min_adjacency_bits(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let mut adj = vec![0u32; n];
    for &(u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    // States are partial vertex orderings sharing the minimal bit prefix.
    // Two states with the same used-vertex mask and the same adjacency
    // pattern from every unused vertex to the placed sequence have identical
    // futures, so one representative suffices.
    let dedup = |states: Vec<Vec<usize>>| -> Vec<Vec<usize>> {
        let mut seen: HashSet<(u32, Vec<u32>)> = HashSet::new();
        let mut out = Vec::new();
        for st in states {
            let mask: u32 = st.iter().fold(0, |m, &p| m | 1 << p);
            let k = st.len();
            let mut profile = Vec::with_capacity(n - k);
            for v in 0..n {
                if mask >> v & 1 == 0 {
                    let mut bits: u32 = 0;
                    for (i, &p) in st.iter().enumerate() {
                        bits |= ((adj[p] >> v) & 1) << (k - 1 - i);
                    }
                    profile.push(bits);
                }
            }
            if seen.insert((mask, profile)) {
                out.push(st);
            }
        }
        out
    };

    let mut states: Vec<Vec<usize>> = dedup((0..n).map(|v| vec![v]).collect());
    let mut bits = Vec::with_capacity(n * (n - 1) / 2);
    for k in 1..n {
        let mut best: Option<u32> = None;
        let mut next: Vec<Vec<usize>> = Vec::new();
        for st in &states {
            let mask: u32 = st.iter().fold(0, |m, &p| m | 1 << p);
            for v in 0..n {
                if mask >> v & 1 == 1 {
                    continue;
                }
                // Column of k bits: adjacency of v to the placed sequence,
                // earliest placement as the most significant bit.
                let mut col: u32 = 0;
                for (i, &p) in st.iter().enumerate() {
                    col |= ((adj[p] >> v) & 1) << (k - 1 - i);
                }
                if best.is_none_or(|b| col < b) {
                    best = Some(col);
                    next.clear();
                }
                if best == Some(col) {
                    let mut ext = st.clone();
                    ext.push(v);
                    next.push(ext);
                }
            }
        }
        let col = best.expect("states are never empty");
        for i in (0..k).rev() {
            bits.push(b'0' + ((col >> i) & 1) as u8);
        }
        states = dedup(next);
    }
    bits
}

fn component_certificate(c: &Graph) -> Result<Certificate, CertError> {
    if c.is_tree() {
        certificate_tree(c)
    } else if c.m() == c.n() {
        certificate_unicyclic(c)
    } else {
        certificate_generic_small(c)
    }
}

/// Certificate of an arbitrary graph, dispatching per component: trees,
/// unicyclic components and small generic components are all supported;
/// disconnected graphs combine component certificates.
pub fn graph_certificate(g: &Graph) -> Result<Certificate, CertError> {
    let comps = g.connected_components();
    if comps.len() == 1 {
        return component_certificate(&comps[0].0);
    }
    if comps.iter().all(|(c, _)| c.m() + 1 == c.n()) {
        return certificate_forest(g);
    }
    let mut parts: Vec<Vec<u8>> = comps
        .iter()
        .map(|(c, _)| component_certificate(c).map(|cert| cert.to_bytes()))
        .collect::<Result<_, _>>()?;
    parts.sort();
    let mut payload = Vec::new();
    for p in parts {
        payload.extend_from_slice(format!("{}:", p.len()).as_bytes());
        payload.extend_from_slice(&p);
    }
    Ok(Certificate::new(CertClass::Components, payload))
}

/// Rebuilds a concrete labeled graph from a certificate. The result is one
/// canonical representative of the encoded isomorphism class.
pub fn materialize(cert: &Certificate) -> Result<Graph, CertError> {
    match cert.class {
        CertClass::RootedTree | CertClass::Tree => {
            let (n, edges) = parse_rooted_payload(&cert.payload)?;
            Graph::new(n, &edges).map_err(|e| CertError::Malformed(e.to_string()))
        }
        CertClass::Forest => {
            let groups = split_balanced_groups(&cert.payload)?;
            let mut n = 0;
            let mut edges = Vec::new();
            for grp in groups {
                let (tn, tedges) = parse_rooted_payload(grp)?;
                edges.extend(tedges.iter().map(|&(u, v)| (u + n, v + n)));
                n += tn;
            }
            Graph::new(n, &edges).map_err(|e| CertError::Malformed(e.to_string()))
        }
        CertClass::Unicyclic => materialize_unicyclic(&cert.payload),
        CertClass::Components => {
            let mut rest = cert.payload.as_slice();
            let mut n = 0;
            let mut edges = Vec::new();
            while !rest.is_empty() {
                let (len, tail) = parse_decimal_prefix(rest)?;
                if tail.len() < len {
                    return Err(CertError::Malformed("component record truncated".into()));
                }
                let sub = materialize(&Certificate::from_bytes(&tail[..len])?)?;
                edges.extend(sub.edges().iter().map(|&(u, v)| (u + n, v + n)));
                n += sub.n();
                rest = &tail[len..];
            }
            Graph::new(n, &edges).map_err(|e| CertError::Malformed(e.to_string()))
        }
        CertClass::Generic => {
            let (n, bits) = parse_decimal_prefix(&cert.payload)?;
            let want = if n > 1 { n * (n - 1) / 2 } else { 0 };
            if bits.len() != want {
                return Err(CertError::Malformed(format!(
                    "generic payload has {} bits, expected {want}",
                    bits.len()
                )));
            }
            let mut edges = Vec::new();
            let mut idx = 0;
            for v in 1..n {
                for u in 0..v {
                    match bits[idx] {
                        b'1' => edges.push((u, v)),
                        b'0' => {}
                        other => {
                            return Err(CertError::Malformed(format!("bad bit {other:#04x}")))
                        }
                    }
                    idx += 1;
                }
            }
            Graph::new(n, &edges).map_err(|e| CertError::Malformed(e.to_string()))
        }
    }
}

fn materialize_unicyclic(payload: &[u8]) -> Result<Graph, CertError> {
    let (c, mut rest) = parse_decimal_prefix(payload)?;
    if c < 3 {
        return Err(CertError::Malformed(format!("cycle length {c} too short")));
    }
    let mut edges: Vec<(usize, usize)> = (0..c).map(|i| (i, (i + 1) % c)).collect();
    let mut n = c;
    for pos in 0..c {
        if rest.first() != Some(&b'[') {
            return Err(CertError::Malformed("missing slot group".into()));
        }
        let close = slot_group_end(rest)?;
        for branch in split_balanced_groups(&rest[1..close])? {
            // A branch payload is a tree rooted at the cycle vertex; local
            // root 0 is identified with `pos`, the rest get fresh labels.
            let (bn, bedges) = parse_rooted_payload(branch)?;
            if bn < 2 {
                return Err(CertError::Malformed("branch with no edge".into()));
            }
            let relabel = |v: usize| if v == 0 { pos } else { n + v - 1 };
            edges.extend(bedges.iter().map(|&(u, v)| (relabel(u), relabel(v))));
            n += bn - 1;
        }
        rest = &rest[close + 1..];
    }
    if !rest.is_empty() {
        return Err(CertError::Malformed("trailing bytes after slots".into()));
    }
    Graph::new(n, &edges).map_err(|e| CertError::Malformed(e.to_string()))
}

fn slot_group_end(bytes: &[u8]) -> Result<usize, CertError> {
    debug_assert_eq!(bytes.first(), Some(&b'['));
    for (i, &b) in bytes.iter().enumerate().skip(1) {
        if b == b']' {
            return Ok(i);
        }
    }
    Err(CertError::Malformed("unterminated slot group".into()))
}

fn parse_decimal_prefix(bytes: &[u8]) -> Result<(usize, &[u8]), CertError> {
    let colon = bytes
        .iter()
        .position(|&b| b == b':')
        .ok_or_else(|| CertError::Malformed("missing ':' delimiter".into()))?;
    let s = std::str::from_utf8(&bytes[..colon])
        .map_err(|_| CertError::Malformed("non-ascii length".into()))?;
    let v: usize = s
        .parse()
        .map_err(|_| CertError::Malformed(format!("bad decimal prefix {s:?}")))?;
    Ok((v, &bytes[colon + 1..]))
}

/// Parses a balanced-parentheses tree payload into (vertex count, edges)
/// with the root labeled 0 and children labeled in reading order.
pub(crate) fn parse_rooted_payload(payload: &[u8]) -> Result<(usize, Vec<(usize, usize)>), CertError> {
    if payload.first() != Some(&b'(') {
        return Err(CertError::Malformed("tree payload must start with '('".into()));
    }
    let mut edges = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    let mut next = 0usize;
    for &b in payload {
        match b {
            b'(' => {
                let v = next;
                next += 1;
                if let Some(&parent) = stack.last() {
                    edges.push((parent, v));
                }
                stack.push(v);
            }
            b')' => {
                if stack.pop().is_none() {
                    return Err(CertError::Malformed("unbalanced ')'".into()));
                }
            }
            other => return Err(CertError::Malformed(format!("bad byte {other:#04x}"))),
        }
    }
    if !stack.is_empty() {
        return Err(CertError::Malformed("unbalanced '('".into()));
    }
    Ok((next, edges))
}

/// Splits a concatenation of balanced-parentheses payloads into the groups.
fn split_balanced_groups(payload: &[u8]) -> Result<Vec<&[u8]>, CertError> {
    let mut groups = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, &b) in payload.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| CertError::Malformed("unbalanced ')'".into()))?;
                if depth == 0 {
                    groups.push(&payload[start..=i]);
                    start = i + 1;
                }
            }
            other => return Err(CertError::Malformed(format!("bad byte {other:#04x}"))),
        }
    }
    if depth != 0 {
        return Err(CertError::Malformed("unbalanced '('".into()));
    }
    Ok(groups)
}

/// Isomorphism test: certificate comparison whenever both graphs fall in a
/// supported class, otherwise permutation search.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.m() != h.m() || g.degree_sequence() != h.degree_sequence() {
        return false;
    }
    match (graph_certificate(g), graph_certificate(h)) {
        (Ok(a), Ok(b)) => a == b,
        _ => isomorphic_by_search(g, h),
    }
}

/// Brute-force isomorphism by backtracking vertex assignment; independent
/// of all certificate code, for validation.
pub fn isomorphic_by_search(g: &Graph, h: &Graph) -> bool {
    let n = g.n();
    if h.n() != n || g.m() != h.m() || g.degree_sequence() != h.degree_sequence() {
        return false;
    }
    if n == 0 {
        return true;
    }
    let gdeg = g.degrees();
    let hdeg = h.degrees();
    // Order g's vertices so each one touches previously ordered vertices
    // when possible; anchored candidates prune hard.
    let gadj = g.adjacency();
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let pick = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let anchored = gadj[v].iter().filter(|&&w| placed[w]).count();
                (anchored, gdeg[v])
            })
            .expect("vertices remain");
        placed[pick] = true;
        order.push(pick);
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn assign(
        idx: usize,
        order: &[usize],
        g: &Graph,
        h: &Graph,
        gdeg: &[usize],
        hdeg: &[usize],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if idx == order.len() {
            return true;
        }
        let v = order[idx];
        for t in 0..h.n() {
            if used[t] || gdeg[v] != hdeg[t] {
                continue;
            }
            let ok = order[..idx]
                .iter()
                .all(|&w| g.has_edge(v, w) == h.has_edge(t, map[w]));
            if !ok {
                continue;
            }
            map[v] = t;
            used[t] = true;
            if assign(idx + 1, order, g, h, gdeg, hdeg, map, used) {
                return true;
            }
            used[t] = false;
            map[v] = usize::MAX;
        }
        false
    }
    assign(0, &order, g, h, &gdeg, &hdeg, &mut map, &mut used)
}
