//! Labeled simple undirected graphs and basic structure predicates.

use thiserror::Error;

/// Errors from graph construction and edge surgery.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range for a graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("edge ({0}, {1}) not present")]
    EdgeNotPresent(usize, usize),
    #[error("input is not a tree")]
    NotATree,
}

/// Simple undirected graph on vertices `0..n`.
///
/// Edges are kept as sorted `(min, max)` pairs, so structural equality of
/// two `Graph` values means equality as labeled graphs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph, normalizing each edge to `(min, max)` and sorting.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut norm = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        for w in norm.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        Ok(Graph { n, edges: norm })
    }

    /// Vertex count.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Edge count.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted `(min, max)` pairs.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// True if `{u, v}` is an edge.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let e = (u.min(v), u.max(v));
        self.edges.binary_search(&e).is_ok()
    }

    /// Adjacency lists, sorted.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// Degree of every vertex.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Degree multiset, sorted ascending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut deg = self.degrees();
        deg.sort_unstable();
        deg
    }

    /// Returns the graph with edge `{u, v}` removed; the vertex set is kept.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let e = (u.min(v), u.max(v));
        match self.edges.binary_search(&e) {
            Ok(i) => {
                let mut edges = self.edges.clone();
                edges.remove(i);
                Ok(Graph { n: self.n, edges })
            }
            Err(_) => Err(GraphError::EdgeNotPresent(e.0, e.1)),
        }
    }

    /// Connected components as separate graphs, each with the list of
    /// original vertex labels (`map[local] = original`), in ascending order
    /// of smallest original vertex.
    pub fn connected_components(&self) -> Vec<(Graph, Vec<usize>)> {
        let adj = self.adjacency();
        let mut comp = vec![usize::MAX; self.n];
        let mut order = Vec::new();
        let mut k = 0;
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let mut stack = vec![s];
            comp[s] = k;
            let mut verts = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = k;
                        stack.push(w);
                        verts.push(w);
                    }
                }
            }
            verts.sort_unstable();
            order.push(verts);
            k += 1;
        }
        order
            .into_iter()
            .map(|verts| {
                let mut local = vec![0usize; self.n];
                for (i, &v) in verts.iter().enumerate() {
                    local[v] = i;
                }
                let edges: Vec<(usize, usize)> = self
                    .edges
                    .iter()
                    .filter(|&&(u, _)| comp[u] == comp[verts[0]])
                    .map(|&(u, v)| (local[u], local[v]))
                    .collect();
                let g = Graph::new(verts.len(), &edges).expect("component edges are valid");
                (g, verts)
            })
            .collect()
    }

    /// True if the graph is connected (the empty graph counts as connected).
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.connected_components().len() == 1
    }

    /// True if acyclic.
    pub fn is_forest(&self) -> bool {
        // A graph is acyclic iff every component has |E| = |V| - 1.
        self.connected_components()
            .iter()
            .all(|(c, _)| c.m() + 1 == c.n())
    }

    /// True if connected and acyclic; a single isolated vertex is a tree.
    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m() + 1 == self.n && self.is_connected()
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn apply_permutation(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        if perm.len() != self.n {
            return Err(GraphError::VertexOutOfRange(perm.len(), self.n));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n {
                return Err(GraphError::VertexOutOfRange(p, self.n));
            }
            if seen[p] {
                return Err(GraphError::DuplicateEdge(p, p));
            }
            seen[p] = true;
        }
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph::new(self.n, &edges)
    }

    /// Cycle on `len` vertices, `0-1-...-(len-1)-0`.
    pub fn cycle(len: usize) -> Graph {
        assert!(len >= 3, "cycles need at least 3 vertices");
        let edges: Vec<(usize, usize)> = (0..len).map(|i| (i, (i + 1) % len)).collect();
        Graph::new(len, &edges).expect("cycle edges are valid")
    }

    /// Path on `len` vertices, `0-1-...-(len-1)`.
    pub fn path(len: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (1..len).map(|i| (i - 1, i)).collect();
        Graph::new(len, &edges).expect("path edges are valid")
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// A tree with a distinguished root vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    graph: Graph,
    root: usize,
}

impl RootedTree {
    /// Wraps a tree and a root; rejects non-trees and out-of-range roots.
    pub fn new(graph: Graph, root: usize) -> Result<Self, GraphError> {
        if root >= graph.n() {
            return Err(GraphError::VertexOutOfRange(root, graph.n()));
        }
        if !graph.is_tree() {
            return Err(GraphError::NotATree);
        }
        Ok(RootedTree { graph, root })
    }

    /// The underlying tree.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// The root vertex.
    pub fn root(&self) -> usize {
        self.root
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::new(3, &[(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(Graph::new(3, &[(0, 3)]), Err(GraphError::VertexOutOfRange(3, 3)));
        assert_eq!(
            Graph::new(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
    }

    #[test]
    fn edge_normalization() {
        let g = Graph::new(4, &[(2, 0), (3, 1), (0, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 3)]);
        assert!(g.has_edge(1, 0));
        assert!(!g.has_edge(2, 3));
    }

    #[test]
    fn delete_edge_keeps_vertices() {
        // A cycle minus one edge is a path on the same vertex set.
        let c5 = Graph::cycle(5);
        let g = c5.delete_edge(4, 0).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.m(), 4);
        assert!(g.is_tree());
        assert_eq!(
            c5.delete_edge(1, 3),
            Err(GraphError::EdgeNotPresent(1, 3))
        );
    }

    #[test]
    fn single_edge_deletion_isolates() {
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        let g = k2.delete_edge(0, 1).unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.m(), 0);
        assert_eq!(g.connected_components().len(), 2);
        assert!(g.is_forest());
        assert!(!g.is_tree());
    }

    #[test]
    fn components_carry_original_labels() {
        let g = Graph::new(5, &[(0, 3), (1, 2)]).unwrap();
        let comps = g.connected_components();
        assert_eq!(comps.len(), 3);
        assert_eq!(comps[0].1, vec![0, 3]);
        assert_eq!(comps[1].1, vec![1, 2]);
        assert_eq!(comps[2].1, vec![4]);
        assert_eq!(comps[2].0.n(), 1);
    }

    #[test]
    fn tree_and_forest_predicates() {
        assert!(Graph::path(5).is_tree());
        assert!(!Graph::cycle(5).is_tree());
        assert!(!Graph::cycle(5).is_forest());
        let two_edges = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(two_edges.is_forest());
        assert!(!two_edges.is_tree());
        let isolated = Graph::new(1, &[]).unwrap();
        assert!(isolated.is_tree());
    }

    #[test]
    fn permutation_preserves_structure() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let h = g.apply_permutation(&[3, 2, 1, 0]).unwrap();
        assert_eq!(h.edges(), &[(0, 1), (1, 2), (2, 3)]);
        assert!(g.apply_permutation(&[0, 0, 1, 2]).is_err());
    }

    #[test]
    fn rooted_tree_validation() {
        let p3 = Graph::path(3);
        assert!(RootedTree::new(p3.clone(), 1).is_ok());
        assert_eq!(RootedTree::new(p3, 3), Err(GraphError::VertexOutOfRange(3, 3)));
        assert_eq!(
            RootedTree::new(Graph::cycle(3), 0),
            Err(GraphError::NotATree)
        );
    }
}
