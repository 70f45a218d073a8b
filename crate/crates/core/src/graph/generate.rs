use rand::seq::SliceRandom;
use rand::Rng;

use super::Graph;

/// All `2^C(d,2)` labeled graphs on `{1..d}`, in order of their edge mask.
pub fn all_labeled_graphs(d: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (1..=d)
        .flat_map(|i| (i + 1..=d).map(move |j| (i, j)))
        .collect();
    let count = 1u64 << pairs.len();
    (0..count).map(move |mask| {
        Graph::new(
            d,
            pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &p)| p),
        )
        .expect("pairs lie in range")
    })
}

/// Erdős-Rényi graph with edge probability one half.
pub fn random_graph<R: Rng + ?Sized>(d: usize, rng: &mut R) -> Graph {
    let edges: Vec<(usize, usize)> = (1..=d)
        .flat_map(|i| (i + 1..=d).map(move |j| (i, j)))
        .filter(|_| rng.gen_bool(0.5))
        .collect();
    Graph::new(d, edges).expect("pairs lie in range")
}

/// Uniform permutation of `1..=d` as an image vector.
pub fn random_permutation<R: Rng + ?Sized>(d: usize, rng: &mut R) -> Vec<usize> {
    let mut p: Vec<usize> = (1..=d).collect();
    p.shuffle(rng);
    p
}

/// Graphs that appear in worked examples and fixtures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Named {
    /// Path 1-2-3-4-5 plus the edge 6-7.
    PathPlusEdge7,
    /// Two triangles 123 and 345 sharing vertex 3.
    Bowtie,
    /// Triangles 123 and 234 sharing edge 23, pendant vertex 5 at 4.
    DiamondPendant,
    /// Path 1-2-3-4.
    Path4,
    /// Star on 4 vertices with center 2.
    Star4,
    /// Triangle on 3 vertices.
    K3,
    /// Edge 1-2 plus isolated vertex 3.
    EdgePlusIsolated,
    /// Seven vertices with edges 13, 23, 37; admits both worked codec examples.
    CodecExample7,
}

impl Named {
    pub const ALL: [Named; 8] = [
        Named::PathPlusEdge7,
        Named::Bowtie,
        Named::DiamondPendant,
        Named::Path4,
        Named::Star4,
        Named::K3,
        Named::EdgePlusIsolated,
        Named::CodecExample7,
    ];

    pub fn graph(self) -> Graph {
        let (d, edges): (usize, &[(usize, usize)]) = match self {
            Named::PathPlusEdge7 => (7, &[(1, 2), (2, 3), (3, 4), (4, 5), (6, 7)]),
            Named::Bowtie => (5, &[(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)]),
            Named::DiamondPendant => (5, &[(1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (4, 5)]),
            Named::Path4 => (4, &[(1, 2), (2, 3), (3, 4)]),
            Named::Star4 => (4, &[(1, 2), (2, 3), (2, 4)]),
            Named::K3 => (3, &[(1, 2), (1, 3), (2, 3)]),
            Named::EdgePlusIsolated => (3, &[(1, 2)]),
            Named::CodecExample7 => (7, &[(1, 3), (2, 3), (3, 7)]),
        };
        Graph::new(d, edges.iter().copied()).expect("fixture graphs are valid")
    }

    /// File name under `fixtures/`.
    pub fn fixture_name(self) -> &'static str {
        match self {
            Named::PathPlusEdge7 => "path5_plus_edge.txt",
            Named::Bowtie => "bowtie.txt",
            Named::DiamondPendant => "diamond_pendant.txt",
            Named::Path4 => "p4.txt",
            Named::Star4 => "star4.txt",
            Named::K3 => "k3.txt",
            Named::EdgePlusIsolated => "edge_plus_isolated.txt",
            Named::CodecExample7 => "codec_example.txt",
        }
    }
}
