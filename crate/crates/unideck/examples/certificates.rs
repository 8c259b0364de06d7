//! Canonical certificates: byte strings that are equal exactly when the
//! underlying graphs are isomorphic.
//!
//! Trees, rooted trees, and connected unicyclic graphs each get a linear-time
//! canonical form; everything else falls back to a small exact search. The
//! first byte tags the class, so certificates from different classes never
//! collide.

use unideck::certificate::certificate_rooted_tree;
use unideck::{are_isomorphic, graph_certificate, Graph, RootedTree};

fn main() {
    // Two labelings of the same 6-vertex tree.
    let t1 = Graph::new(6, &[(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
    let t2 = Graph::new(6, &[(5, 2), (2, 0), (2, 4), (4, 3), (4, 1)]).unwrap();
    let c1 = graph_certificate(&t1).unwrap();
    let c2 = graph_certificate(&t2).unwrap();
    println!("tree certs   {}  {}", c1.to_hex(), c2.to_hex());
    assert_eq!(c1, c2);
    assert!(are_isomorphic(&t1, &t2));

    // The same tree rooted at different vertices: rooted certificates see the
    // root, so a leaf root and a center root disagree.
    let r_leaf = certificate_rooted_tree(&RootedTree::new(t1.clone(), 0).unwrap());
    let r_center = certificate_rooted_tree(&RootedTree::new(t1.clone(), 1).unwrap());
    println!("rooted certs {}  {}", r_leaf.to_hex(), r_center.to_hex());
    assert_ne!(r_leaf, r_center);

    // Connected unicyclic graphs: a 6-cycle versus a triangle with a 3-edge
    // path. Same vertex and edge counts, different certificates.
    let c6 = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)]).unwrap();
    let tri = Graph::new(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
    println!(
        "unicyclic    {}  {}",
        graph_certificate(&c6).unwrap().to_hex(),
        graph_certificate(&tri).unwrap().to_hex()
    );
    assert!(!are_isomorphic(&c6, &tri));

    // Disconnected graphs work too — the component multiset is canonicalized.
    let two_k2 = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
    let p3_k1 = Graph::new(4, &[(0, 1), (1, 2)]).unwrap();
    println!(
        "forests      {}  {}",
        graph_certificate(&two_k2).unwrap().to_hex(),
        graph_certificate(&p3_k1).unwrap().to_hex()
    );
    assert!(!are_isomorphic(&two_k2, &p3_k1));
}
