//! Labeled simple graphs on `{1..d}` and the brute-force oracles used to
//! check everything else.

mod chromatic;
mod generate;
mod oracle;
mod parse;

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub use chromatic::{chromatic_polynomial, deletion_contraction};
pub use generate::{all_labeled_graphs, random_graph, random_permutation, Named};
pub use oracle::{
    chromatic_class_signature, chromatic_class_signature_with, count_acyclic_orientations,
    count_acyclic_orientations_with, count_colorings, count_colorings_with, AcyclicCount,
    CountMethod, Partition,
};
pub use parse::{encode_graph6, parse_edge_list, parse_graph, parse_graph6};

/// Largest vertex count representable by [`VertexSet`].
pub const MAX_VERTICES: usize = 32;

/// A subset of `{1..d}` stored as a bit mask, vertex `v` at bit `v-1`.
///
/// The universe `d` is carried by the surrounding graph, chain or monomial.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_mask(mask: u32) -> Self {
        VertexSet(mask)
    }

    /// `{1..d}`.
    pub fn full(d: usize) -> Self {
        debug_assert!(d <= MAX_VERTICES);
        if d == 32 {
            VertexSet(u32::MAX)
        } else {
            VertexSet((1u32 << d) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        VertexSet(1 << (v - 1))
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        vs.into_iter()
            .fold(VertexSet::EMPTY, |s, v| s.with(v))
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 & (1 << (v - 1)) != 0
    }

    pub fn with(self, v: usize) -> Self {
        self | VertexSet::singleton(v)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: VertexSet) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn minus(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    /// Members in increasing order, 1-based.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut m = self.0;
        std::iter::from_fn(move || {
            if m == 0 {
                None
            } else {
                let b = m.trailing_zeros() as usize;
                m &= m - 1;
                Some(b + 1)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Whether every member lies in `{1..d}`.
    pub fn within(self, d: usize) -> bool {
        self.is_subset(VertexSet::full(d))
    }
}

impl std::ops::BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl std::ops::BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// An edge `{i, j}` stored with `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge(pub usize, pub usize);

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        if a < b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn as_set(self) -> VertexSet {
        VertexSet::singleton(self.0).with(self.1)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// A simple graph on the vertex set `{1..d}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    d: usize,
    adjacency: Vec<VertexSet>,
    edges: Vec<Edge>,
}

impl Graph {
    /// Builds a graph from 1-based edge pairs; duplicates collapse.
    pub fn new<I>(d: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if d == 0 {
            return Err(Error::Invalid("graph needs at least one vertex".into()));
        }
        if d > MAX_VERTICES {
            return Err(Error::TooManyVertices(d));
        }
        let mut g = Graph {
            d,
            adjacency: vec![VertexSet::EMPTY; d],
            edges: Vec::new(),
        };
        for (a, b) in edges {
            for v in [a, b] {
                if v == 0 || v > d {
                    return Err(Error::VertexOutOfRange {
                        line: 0,
                        vertex: v as i64,
                        d,
                    });
                }
            }
            if a == b {
                return Err(Error::LoopEdge { line: 0, vertex: a });
            }
            g.insert_edge(a, b);
        }
        g.edges.sort();
        Ok(g)
    }

    fn insert_edge(&mut self, a: usize, b: usize) {
        if !self.adjacency[a - 1].contains(b) {
            self.adjacency[a - 1] = self.adjacency[a - 1].with(b);
            self.adjacency[b - 1] = self.adjacency[b - 1].with(a);
            self.edges.push(Edge::new(a, b));
        }
    }

    pub fn edgeless(d: usize) -> Self {
        Graph::new(d, []).expect("valid vertex count")
    }

    pub fn complete(d: usize) -> Self {
        let edges: Vec<_> = (1..=d)
            .flat_map(|i| (i + 1..=d).map(move |j| (i, j)))
            .collect();
        Graph::new(d, edges).expect("valid vertex count")
    }

    /// The path `1 - 2 - ... - d`.
    pub fn path(d: usize) -> Self {
        Graph::new(d, (1..d).map(|i| (i, i + 1))).expect("valid vertex count")
    }

    /// The star with the given center joined to every other vertex.
    pub fn star(d: usize, center: usize) -> Result<Self> {
        Graph::new(d, (1..=d).filter(|&v| v != center).map(|v| (center, v)))
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adjacency[v - 1]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a >= 1 && a <= self.d && self.adjacency[a - 1].contains(b)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.d)
    }

    /// True iff no edge has both endpoints in `s`.
    pub fn is_stable(&self, s: VertexSet) -> bool {
        s.iter().all(|v| (self.adjacency[v - 1] & s).is_empty())
    }

    /// Some edge with both endpoints in `s`, if any.
    pub fn edge_inside(&self, s: VertexSet) -> Option<Edge> {
        s.iter().find_map(|v| {
            (self.adjacency[v - 1] & s)
                .iter()
                .next()
                .map(|w| Edge::new(v, w))
        })
    }

    /// Image under `sigma`, where `sigma[v-1]` is the image of `v`.
    pub fn relabel(&self, sigma: &[usize]) -> Result<Graph> {
        crate::cuts::Permutation::new(sigma.to_vec())?;
        if sigma.len() != self.d {
            return Err(Error::NotPermutation {
                d: self.d,
                detail: format!("length {}", sigma.len()),
            });
        }
        Graph::new(
            self.d,
            self.edges.iter().map(|e| (sigma[e.0 - 1], sigma[e.1 - 1])),
        )
    }

    /// Graph with one more edge.
    pub fn with_edge(&self, a: usize, b: usize) -> Result<Graph> {
        Graph::new(
            self.d,
            self.edges.iter().map(|e| (e.0, e.1)).chain([(a, b)]),
        )
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G(d={}; ", self.d)?;
        for (k, e) in self.edges.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}{}", e.0, e.1)?;
        }
        f.write_str(")")
    }
}

/// A map from vertices to colors `1..=palette`, not necessarily surjective.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring {
    palette: u32,
    colors: Vec<u32>,
}

impl Coloring {
    /// `colors[v-1]` is the color of vertex `v`.
    pub fn new(palette: u32, colors: Vec<u32>) -> Result<Self> {
        if palette == 0 {
            return Err(Error::InvalidColoring("palette must be positive".into()));
        }
        if let Some((v, &c)) = colors
            .iter()
            .enumerate()
            .find(|(_, &c)| c == 0 || c > palette)
        {
            return Err(Error::InvalidColoring(format!(
                "vertex {} has color {c} outside 1..={palette}",
                v + 1
            )));
        }
        Ok(Coloring { palette, colors })
    }

    /// Parses `"1:1,2:2,3:1"`; every vertex of `1..=d` must be assigned once.
    pub fn parse(text: &str, palette: u32, d: usize) -> Result<Self> {
        let mut colors = vec![0u32; d];
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (v, c) = item
                .split_once(':')
                .ok_or_else(|| Error::InvalidColoring(format!("expected v:c, got {item:?}")))?;
            let v: usize = v
                .trim()
                .parse()
                .map_err(|_| Error::InvalidColoring(format!("bad vertex {v:?}")))?;
            let c: u32 = c
                .trim()
                .parse()
                .map_err(|_| Error::InvalidColoring(format!("bad color {c:?}")))?;
            if v == 0 || v > d {
                return Err(Error::InvalidColoring(format!("vertex {v} out of range 1..={d}")));
            }
            if colors[v - 1] != 0 {
                return Err(Error::InvalidColoring(format!("vertex {v} assigned twice")));
            }
            if c == 0 {
                return Err(Error::InvalidColoring(format!("vertex {v} has color 0")));
            }
            colors[v - 1] = c;
        }
        if let Some(v) = colors.iter().position(|&c| c == 0) {
            return Err(Error::InvalidColoring(format!("vertex {} has no color", v + 1)));
        }
        Coloring::new(palette, colors)
    }

    pub fn palette(&self) -> u32 {
        self.palette
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v - 1]
    }

    pub fn d(&self) -> usize {
        self.colors.len()
    }

    /// Nonempty color classes keyed by color.
    pub fn classes(&self) -> BTreeMap<u32, VertexSet> {
        let mut out: BTreeMap<u32, VertexSet> = BTreeMap::new();
        for (v, &c) in self.colors.iter().enumerate() {
            let e = out.entry(c).or_default();
            *e = e.with(v + 1);
        }
        out
    }

    /// Errors with the first monochromatic edge.
    pub fn check_proper(&self, g: &Graph) -> Result<()> {
        if self.colors.len() != g.d() {
            return Err(Error::InvalidColoring(format!(
                "coloring covers {} vertices, graph has {}",
                self.colors.len(),
                g.d()
            )));
        }
        match g
            .edges()
            .iter()
            .find(|e| self.color(e.0) == self.color(e.1))
        {
            Some(e) => Err(Error::ImproperColoring(e.0, e.1, self.color(e.0))),
            None => Ok(()),
        }
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.check_proper(g).is_ok()
    }

    /// Same assignment viewed with a different palette size.
    pub fn with_palette(&self, palette: u32) -> Result<Self> {
        Coloring::new(palette, self.colors.clone())
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, c) in self.colors.iter().enumerate() {
            if v > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}:{}", v + 1, c)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stable_sets_on_path() {
        let p4 = Graph::path(4);
        assert!(p4.is_stable(VertexSet::from_vertices([1, 3])));
        assert!(!p4.is_stable(VertexSet::from_vertices([2, 3])));
        assert!(p4.is_stable(VertexSet::EMPTY));
        for v in 1..=4 {
            assert!(p4.is_stable(VertexSet::singleton(v)));
        }
    }

    #[test]
    fn worked_graph_blocks_are_stable() {
        let g = Named::PathPlusEdge7.graph();
        for s in [vec![2, 5], vec![3, 6], vec![1, 4], vec![7]] {
            assert!(g.is_stable(VertexSet::from_vertices(s)));
        }
    }

    #[test]
    fn relabel_examples() {
        let g = Graph::new(3, [(1, 2)]).unwrap();
        assert_eq!(g.relabel(&[1, 2, 3]).unwrap(), g);
        assert_eq!(
            g.relabel(&[3, 2, 1]).unwrap(),
            Graph::new(3, [(2, 3)]).unwrap()
        );
        let p4 = Graph::path(4);
        let img = p4.relabel(&[2, 1, 4, 3]).unwrap();
        assert_eq!(img.edges(), &[Edge(1, 2), Edge(1, 4), Edge(3, 4)]);
        assert!(matches!(
            p4.relabel(&[1, 1, 2, 3]),
            Err(Error::NotPermutation { .. })
        ));
    }

    #[test]
    fn new_dedupes_and_sorts() {
        let g = Graph::new(4, [(3, 4), (2, 1), (1, 2), (4, 3)]).unwrap();
        assert_eq!(g.edges(), &[Edge(1, 2), Edge(3, 4)]);
        for e in g.edges() {
            assert!(g.neighbors(e.0).contains(e.1));
            assert!(g.neighbors(e.1).contains(e.0));
        }
    }

    #[test]
    fn coloring_parse_and_properness() {
        let g = Graph::new(3, [(1, 2)]).unwrap();
        let c = Coloring::parse("1:1, 2:2,3:1", 2, 3).unwrap();
        assert!(c.is_proper(&g));
        assert_eq!(c.to_string(), "1:1,2:2,3:1");
        let bad = Coloring::parse("1:2,2:2,3:1", 2, 3).unwrap();
        assert_eq!(bad.check_proper(&g), Err(Error::ImproperColoring(1, 2, 2)));
        assert!(Coloring::parse("1:1,2:3,3:1", 2, 3).is_err());
        assert!(Coloring::parse("1:1,3:1", 2, 3).is_err());
    }

    #[test]
    fn vertex_set_display() {
        assert_eq!(VertexSet::from_vertices([5, 2]).to_string(), "{2,5}");
        assert_eq!(VertexSet::EMPTY.to_string(), "{}");
    }
}
