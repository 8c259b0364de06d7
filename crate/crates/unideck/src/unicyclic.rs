//! Structure of connected unicyclic graphs: the unique cycle, the trunks
//! hanging from it, their branches, and the classification of one-edge-deleted
//! subgraphs that the reconstruction relies on.

use thiserror::Error;

use crate::certificate::{certificate_rooted_tree, Certificate};
use crate::graph::{Graph, RootedTree};

/// Errors from unicyclic decomposition.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum UnicyclicError {
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is not unicyclic: {n} vertices, {m} edges")]
    NotUnicyclic { n: usize, m: usize },
    #[error("card has an impossible shape: {0}")]
    BadCard(String),
}

/// One branch: a maximal subtree hanging off a single edge at a cycle vertex.
/// The branch is rooted at the cycle vertex itself, so its rooted shape
/// includes the attachment edge.
#[derive(Debug, Clone)]
pub struct Branch {
    root: usize,
    child: usize,
    subtree: RootedTree,
    vertices: Vec<usize>,
    certificate: Certificate,
}

impl Branch {
    /// The cycle vertex the branch shares with the cycle.
    pub fn root(&self) -> usize {
        self.root
    }

    /// The lone edge joining the root to the rest of the branch.
    pub fn attachment_edge(&self) -> (usize, usize) {
        (self.root, self.child)
    }

    /// The branch as a rooted tree with local labels; local 0 is the root.
    pub fn subtree(&self) -> &RootedTree {
        &self.subtree
    }

    /// Original vertex labels: `vertices[local] = original`, root first.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Edge count of the branch (attachment edge included).
    pub fn size(&self) -> usize {
        self.subtree.graph().m()
    }

    /// Rooted-tree certificate of the branch.
    pub fn certificate(&self) -> &Certificate {
        &self.certificate
    }
}

/// One trunk: the whole subtree at one cycle vertex (all of its branches).
#[derive(Debug, Clone)]
pub struct Trunk {
    attachment: usize,
    subtree: RootedTree,
    vertices: Vec<usize>,
}

impl Trunk {
    /// The only vertex the trunk shares with the cycle.
    pub fn attachment(&self) -> usize {
        self.attachment
    }

    /// The trunk as a rooted tree with local labels; local 0 is the
    /// attachment vertex.
    pub fn subtree(&self) -> &RootedTree {
        &self.subtree
    }

    /// Original vertex labels: `vertices[local] = original`.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }
}

/// Full decomposition of a connected unicyclic graph.
#[derive(Debug, Clone)]
pub struct CycleDecomposition {
    cycle: Vec<usize>,
    trunks: Vec<Trunk>,
    branches: Vec<Branch>,
}

impl CycleDecomposition {
    /// Cycle vertices in traversal order; rotation and reflection carry no
    /// meaning.
    pub fn cycle(&self) -> &[usize] {
        &self.cycle
    }

    /// Trunks, ordered by cycle position of their attachment vertex.
    pub fn trunks(&self) -> &[Trunk] {
        &self.trunks
    }

    /// All branches, ordered by (cycle position of root, certificate).
    pub fn branches(&self) -> &[Branch] {
        &self.branches
    }

    /// Branches rooted at the given cycle vertex.
    pub fn branches_at(&self, cycle_vertex: usize) -> impl Iterator<Item = &Branch> {
        self.branches.iter().filter(move |b| b.root == cycle_vertex)
    }

    /// Per-cycle-position sorted branch certificate payloads, aligned with
    /// [`CycleDecomposition::cycle`].
    pub fn branch_payload_slots(&self) -> Vec<Vec<Vec<u8>>> {
        let mut slots = vec![Vec::new(); self.cycle.len()];
        for b in &self.branches {
            let pos = self
                .cycle
                .iter()
                .position(|&v| v == b.root)
                .expect("branch roots lie on the cycle");
            slots[pos].push(b.certificate.payload().to_vec());
        }
        for s in &mut slots {
            s.sort();
        }
        slots
    }
}

/// Finds the unique cycle of a connected unicyclic graph by pruning
/// degree-1 vertices until only the cycle remains.
pub fn find_cycle(g: &Graph) -> Result<Vec<usize>, UnicyclicError> {
    if g.m() != g.n() || g.n() < 3 {
        return Err(UnicyclicError::NotUnicyclic { n: g.n(), m: g.m() });
    }
    if !g.is_connected() {
        return Err(UnicyclicError::NotConnected);
    }
    let adj = g.adjacency();
    let mut deg = g.degrees();
    let mut removed = vec![false; g.n()];
    let mut stack: Vec<usize> = (0..g.n()).filter(|&v| deg[v] == 1).collect();
    while let Some(v) = stack.pop() {
        removed[v] = true;
        for &w in &adj[v] {
            if !removed[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    // Connected with |E| = |V|: what survives pruning is exactly the cycle.
    let start = (0..g.n())
        .find(|&v| !removed[v])
        .expect("a unicyclic graph has a cycle");
    let mut cycle = vec![start];
    let mut prev = start;
    let mut cur = *adj[start]
        .iter()
        .find(|&&w| !removed[w])
        .expect("cycle vertices have two cycle neighbors");
    while cur != start {
        cycle.push(cur);
        let next = *adj[cur]
            .iter()
            .find(|&&w| !removed[w] && w != prev)
            .expect("cycle vertices have two cycle neighbors");
        prev = cur;
        cur = next;
    }
    debug_assert!(cycle.len() >= 3);
    Ok(cycle)
}

/// Decomposes a connected unicyclic graph into its cycle, trunks, and
/// branches.
pub fn decompose(g: &Graph) -> Result<CycleDecomposition, UnicyclicError> {
    let cycle = find_cycle(g)?;
    let mut on_cycle = vec![false; g.n()];
    for &v in &cycle {
        on_cycle[v] = true;
    }
    let adj = g.adjacency();

    // Collect the subtree hanging below `child`, never crossing the cycle.
    let subtree_vertices = |root: usize, child: usize| -> Vec<usize> {
        let mut verts = vec![root, child];
        let mut stack = vec![(child, root)];
        while let Some((v, parent)) = stack.pop() {
            for &w in &adj[v] {
                if w != parent {
                    debug_assert!(!on_cycle[w], "non-cycle subtrees cannot re-enter the cycle");
                    verts.push(w);
                    stack.push((w, v));
                }
            }
        }
        verts
    };

    let as_rooted = |verts: &[usize]| -> RootedTree {
        let mut local = std::collections::HashMap::new();
        for (i, &v) in verts.iter().enumerate() {
            local.insert(v, i);
        }
        let edges: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .filter_map(|&(u, v)| Some((*local.get(&u)?, *local.get(&v)?)))
            .filter(|&(lu, lv)| !(on_cycle[verts[lu]] && on_cycle[verts[lv]]))
            .collect();
        let tree = Graph::new(verts.len(), &edges).expect("subtree edges are valid");
        RootedTree::new(tree, 0).expect("trunks and branches are trees")
    };

    let mut trunks = Vec::new();
    let mut branches = Vec::new();
    for &v in &cycle {
        let kids: Vec<usize> = adj[v].iter().copied().filter(|&w| !on_cycle[w]).collect();
        if kids.is_empty() {
            continue;
        }
        let mut at_v = Vec::new();
        for &child in &kids {
            let verts = subtree_vertices(v, child);
            let subtree = as_rooted(&verts);
            let certificate = certificate_rooted_tree(&subtree);
            at_v.push(Branch {
                root: v,
                child,
                subtree,
                vertices: verts,
                certificate,
            });
        }
        at_v.sort_by(|a, b| a.certificate.cmp(&b.certificate));
        let mut trunk_verts = vec![v];
        for b in &at_v {
            trunk_verts.extend_from_slice(&b.vertices[1..]);
        }
        trunks.push(Trunk {
            attachment: v,
            subtree: as_rooted(&trunk_verts),
            vertices: trunk_verts,
        });
        branches.extend(at_v);
    }
    Ok(CycleDecomposition { cycle, trunks, branches })
}

/// Branch count: the sum of (deg - 2) over cycle vertices of degree >= 3.
pub fn ucd(g: &Graph) -> Result<usize, UnicyclicError> {
    let cycle = find_cycle(g)?;
    let deg = g.degrees();
    Ok(cycle
        .iter()
        .map(|&v| deg[v].saturating_sub(2))
        .sum())
}

/// Shape of a one-edge-deleted subgraph of a connected unicyclic graph.
#[derive(Debug, Clone)]
pub enum CardClass {
    /// Deleting a cycle edge leaves the graph connected, hence a tree.
    Tree,
    /// Deleting a trunk edge splits off a tree and leaves a connected
    /// unicyclic component with `branch_count` branches.
    Split {
        unicyclic: Graph,
        unicyclic_vertices: Vec<usize>,
        forest: Graph,
        forest_vertices: Vec<usize>,
        branch_count: usize,
    },
}

/// Classifies a card purely from its own structure: a connected card is a
/// tree; a two-component card is one unicyclic component plus one tree.
pub fn classify_card(g: &Graph) -> Result<CardClass, UnicyclicError> {
    if g.m() + 1 != g.n() {
        return Err(UnicyclicError::BadCard(format!(
            "{} vertices and {} edges",
            g.n(),
            g.m()
        )));
    }
    let comps = g.connected_components();
    match comps.len() {
        1 => Ok(CardClass::Tree),
        2 => {
            // With |E| = |V| - 1 and two components, exactly one component
            // carries the cycle and the other is a tree.
            let (uni, forest) = if comps[0].0.m() == comps[0].0.n() {
                (&comps[0], &comps[1])
            } else if comps[1].0.m() == comps[1].0.n() {
                (&comps[1], &comps[0])
            } else {
                return Err(UnicyclicError::BadCard(
                    "two components but no unicyclic one".into(),
                ));
            };
            let branch_count = ucd(&uni.0)?;
            Ok(CardClass::Split {
                unicyclic: uni.0.clone(),
                unicyclic_vertices: uni.1.clone(),
                forest: forest.0.clone(),
                forest_vertices: forest.1.clone(),
                branch_count,
            })
        }
        k => Err(UnicyclicError::BadCard(format!("{k} components"))),
    }
}

/// Branches whose rooted certificate occurs exactly once among all branches.
pub fn unique_branches(d: &CycleDecomposition) -> Vec<&Branch> {
    d.branches()
        .iter()
        .filter(|b| {
            d.branches()
                .iter()
                .filter(|o| o.certificate() == b.certificate())
                .count()
                == 1
        })
        .collect()
}

/// Why a graph fails (or passes) the reconstructable-class test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassUDiagnostic {
    Member,
    NotConnected,
    NotUnicyclic,
    CycleTooShort { len: usize },
    TooFewBranches { ucd: usize },
    TooFewUniqueBranches { count: usize },
    UniqueRootsNotDistinct { distinct_roots: usize },
}

impl std::fmt::Display for ClassUDiagnostic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ClassUDiagnostic::Member => write!(f, "member"),
            ClassUDiagnostic::NotConnected => write!(f, "not connected"),
            ClassUDiagnostic::NotUnicyclic => write!(f, "not unicyclic"),
            ClassUDiagnostic::CycleTooShort { len } => {
                write!(f, "cycle length {len} < 5")
            }
            ClassUDiagnostic::TooFewBranches { ucd } => write!(f, "{ucd} branches < 5"),
            ClassUDiagnostic::TooFewUniqueBranches { count } => {
                write!(f, "{count} unique branches < 3")
            }
            ClassUDiagnostic::UniqueRootsNotDistinct { distinct_roots } => {
                write!(f, "unique branches at only {distinct_roots} distinct roots < 3")
            }
        }
    }
}

/// Membership test for the reconstructable class: connected unicyclic,
/// cycle length >= 5, at least 5 branches, and at least 3 unique branches
/// at pairwise distinct cycle vertices. Returns the first failed condition.
pub fn in_class_u(g: &Graph) -> (bool, ClassUDiagnostic) {
    if g.m() != g.n() || g.n() < 3 {
        return (false, ClassUDiagnostic::NotUnicyclic);
    }
    if !g.is_connected() {
        return (false, ClassUDiagnostic::NotConnected);
    }
    let d = match decompose(g) {
        Ok(d) => d,
        Err(UnicyclicError::NotConnected) => return (false, ClassUDiagnostic::NotConnected),
        Err(_) => return (false, ClassUDiagnostic::NotUnicyclic),
    };
    let len = d.cycle().len();
    if len < 5 {
        return (false, ClassUDiagnostic::CycleTooShort { len });
    }
    let p = d.branches().len();
    if p < 5 {
        return (false, ClassUDiagnostic::TooFewBranches { ucd: p });
    }
    let uniques = unique_branches(&d);
    if uniques.len() < 3 {
        return (false, ClassUDiagnostic::TooFewUniqueBranches { count: uniques.len() });
    }
    let mut roots: Vec<usize> = uniques.iter().map(|b| b.root()).collect();
    roots.sort_unstable();
    roots.dedup();
    if roots.len() < 3 {
        return (false, ClassUDiagnostic::UniqueRootsNotDistinct { distinct_roots: roots.len() });
    }
    (true, ClassUDiagnostic::Member)
}
