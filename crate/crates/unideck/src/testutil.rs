//! Shared fixtures for unit tests.

use crate::graph::Graph;

/// 4-cycle `0-1-2-3` with three branches at vertex 0: a pendant edge, a
/// 3-edge branch whose stem has two leaf children, and a 3-edge path.
pub fn fig_cycle4_three_branches() -> Graph {
    Graph::new(
        11,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (0, 3),
            (0, 4),
            (0, 5),
            (5, 6),
            (5, 7),
            (0, 8),
            (8, 9),
            (9, 10),
        ],
    )
    .unwrap()
}

/// Triangle `0-1-2` with pendants at 0, 1, 2 and a 2-edge path at 2;
/// four branches in total.
pub fn fig_triangle_ucd4() -> Graph {
    Graph::new(
        8,
        &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5), (2, 6), (6, 7)],
    )
    .unwrap()
}

/// Triangle `0-1-2` with a pendant and a 2-edge path at 0, two pendants
/// at 1, and a pendant at 2; five branches, nine edges.
pub fn fig_triangle_ucd5() -> Graph {
    Graph::new(
        9,
        &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (1, 5), (2, 8), (0, 6), (6, 7)],
    )
    .unwrap()
}

/// The 15-vertex reconstructable fixture: 5-cycle `0..4` carrying a pendant
/// at 0, a 2-edge path at 1, a 3-edge star at 2, a 3-edge path at 3, and a
/// pendant at 4. Three branch shapes occur exactly once, at distinct roots.
pub fn fixture_class_u_15() -> Graph {
    Graph::new(
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
            (8, 10),
            (3, 11),
            (11, 12),
            (12, 13),
            (4, 14),
        ],
    )
    .unwrap()
}

/// Fisher-Yates shuffle of `0..n` from the given rng.
pub fn random_permutation(n: usize, rng: &mut impl rand::Rng) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.random_range(0..=i);
        perm.swap(i, j);
    }
    perm
}
