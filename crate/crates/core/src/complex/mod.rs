//! The coloring complex `Δ_G`.
//!
//! Vertices of `Δ_G` are proper nonempty subsets of `[d]` and faces are
//! chains. A chain `S_1 ⊊ ⋯ ⊊ S_k` is a face exactly when one of its blocks
//! `S_1, S_2 ∖ S_1, …, S_k ∖ S_{k-1}, [d] ∖ S_k` contains an edge. The cone
//! points `∅` and `[d]` are dropped throughout, except in
//! [`nontruncated_h_vector_direct`].

mod iso;

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::config::Config;
use crate::cuts::perm;
use crate::error::{Error, Result};
use crate::exec::{fold_range, map_ordered};
use crate::graph::{Edge, Graph, VertexSet};
use crate::ideal::{basic_chains, GSequence};
use crate::poly_lab::{eulerian_polynomial, f_to_h, FVector, HVector};

pub use iso::{complexes_isomorphic, complexes_isomorphic_with, verify_witness, IsoResult};

/// A strictly nested sequence of subsets, smallest first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Chain(Vec<VertexSet>);

impl Chain {
    /// Sorts `sets` and checks they form a chain of proper nonempty subsets
    /// of `[d]`.
    pub fn new(d: usize, sets: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        let chain = Chain::nested(sets)?;
        if let Some(s) = chain
            .0
            .iter()
            .find(|s| s.is_empty() || !s.within(d) || **s == VertexSet::full(d))
        {
            return Err(Error::InvalidChain(format!(
                "{s} is not a proper nonempty subset of [{d}]"
            )));
        }
        Ok(chain)
    }

    fn nested(sets: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        let mut v: Vec<VertexSet> = sets.into_iter().collect();
        v.sort_by_key(|s| (s.len(), *s));
        if let Some(w) = v.windows(2).find(|w| !w[0].is_proper_subset(w[1])) {
            return Err(Error::InvalidChain(format!("{} and {} are not nested", w[0], w[1])));
        }
        Ok(Chain(v))
    }

    pub fn empty() -> Self {
        Chain(Vec::new())
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Difference blocks followed by the remainder `[d] ∖ S_k`.
    pub fn blocks(&self, d: usize) -> Vec<VertexSet> {
        let mut prev = VertexSet::EMPTY;
        let mut out = Vec::with_capacity(self.0.len() + 1);
        for &s in &self.0 {
            out.push(s.minus(prev));
            prev = s;
        }
        out.push(VertexSet::full(d).minus(prev));
        out
    }

    pub fn is_subchain_of(&self, other: &Chain) -> bool {
        self.0.iter().all(|s| other.0.contains(s))
    }

    fn without(&self, k: usize) -> Chain {
        let mut v = self.0.clone();
        v.remove(k);
        Chain(v)
    }

    fn subchains(&self) -> impl Iterator<Item = Chain> + '_ {
        let k = self.0.len();
        (0u64..1 << k).map(move |mask| {
            Chain(
                (0..k)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| self.0[i])
                    .collect(),
            )
        })
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, s) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str(")")
    }
}

impl Serialize for Chain {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter())
    }
}

/// Visits every chain of nonempty subsets of `[d]`, including the empty
/// chain. `[d]` itself may appear only when `with_top` is set.
pub fn for_each_chain(d: usize, with_top: bool, mut visit: impl FnMut(&Chain)) {
    fn rec(d: usize, with_top: bool, chain: &mut Chain, visit: &mut dyn FnMut(&Chain)) {
        visit(chain);
        let full = VertexSet::full(d).mask();
        let base = chain.0.last().map_or(0, |s| s.mask());
        if base == full {
            return;
        }
        let free = full & !base;
        let mut sub = free;
        while sub != 0 {
            let s = base | sub;
            if s != full || with_top {
                chain.0.push(VertexSet::from_mask(s));
                rec(d, with_top, chain, visit);
                chain.0.pop();
            }
            sub = (sub - 1) & free;
        }
    }
    rec(d, with_top, &mut Chain::empty(), &mut visit);
}

/// True iff some block of `ch`, the remainder included, contains an edge.
pub fn is_face(g: &Graph, ch: &Chain) -> Result<bool> {
    let d = g.d();
    if d < 3 {
        return Err(Error::TooFewVertices(d));
    }
    Chain::new(d, ch.0.iter().copied())?;
    Ok(chain_is_face(g, ch))
}

fn chain_is_face(g: &Graph, ch: &Chain) -> bool {
    ch.blocks(g.d()).into_iter().any(|b| !g.is_stable(b))
}

/// A simplicial complex whose faces are chains, stored with its full face set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    facets: Vec<Chain>,
    faces: HashSet<Chain>,
}

impl SimplicialComplex {
    /// The complex generated by `facets`.
    pub fn from_facets(facets: impl IntoIterator<Item = Chain>) -> Self {
        Self::from_facets_with(facets.into_iter().collect(), &Config::default())
    }

    fn from_facets_with(generators: Vec<Chain>, cfg: &Config) -> Self {
        let faces = fold_range(
            cfg.exec,
            generators.len() as u64,
            HashSet::new,
            |mut acc, range| {
                for k in range {
                    acc.extend(generators[k as usize].subchains());
                }
                acc
            },
            |mut a, mut b| {
                if a.len() < b.len() {
                    std::mem::swap(&mut a, &mut b);
                }
                a.extend(b);
                a
            },
        );
        Self::from_face_set(faces)
    }

    /// Takes a set already closed under subchains.
    fn from_face_set(faces: HashSet<Chain>) -> Self {
        let mut covered = HashSet::new();
        for f in &faces {
            for k in 0..f.len() {
                covered.insert(f.without(k));
            }
        }
        let mut facets: Vec<Chain> = faces.iter().filter(|f| !covered.contains(*f)).cloned().collect();
        facets.sort();
        SimplicialComplex { facets, faces }
    }

    /// The complex with no faces at all.
    pub fn void() -> Self {
        SimplicialComplex {
            facets: Vec::new(),
            faces: HashSet::new(),
        }
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn facets(&self) -> &[Chain] {
        &self.facets
    }

    pub fn contains(&self, ch: &Chain) -> bool {
        self.faces.contains(ch)
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// All faces, sorted.
    pub fn faces(&self) -> Vec<Chain> {
        let mut v: Vec<Chain> = self.faces.iter().cloned().collect();
        v.sort();
        v
    }

    pub fn vertices(&self) -> Vec<VertexSet> {
        let set: BTreeSet<VertexSet> = self.facets.iter().flat_map(|f| f.0.iter().copied()).collect();
        set.into_iter().collect()
    }

    /// Faces of size two, as vertex pairs.
    pub fn edges(&self) -> Vec<(VertexSet, VertexSet)> {
        let mut v: Vec<_> = self
            .faces
            .iter()
            .filter(|f| f.len() == 2)
            .map(|f| (f.0[0], f.0[1]))
            .collect();
        v.sort();
        v
    }

    pub fn f_vector(&self) -> FVector {
        let Some(top) = self.faces.iter().map(Chain::len).max() else {
            return FVector::default();
        };
        let mut counts = vec![0u64; top + 1];
        for f in &self.faces {
            counts[f.len()] += 1;
        }
        FVector(counts.into_iter().map(BigInt::from).collect())
    }

    pub fn h_vector(&self) -> Result<HVector> {
        let f = self.f_vector();
        match f.max_face_size() {
            None => Ok(HVector::default()),
            Some(e) => f_to_h(&f, e),
        }
    }

    pub fn intersection(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let faces: HashSet<Chain> = self.faces.intersection(&other.faces).cloned().collect();
        Self::from_face_set(faces)
    }
}

/// Euler characteristic `Σ_{i≥0} (-1)^i f_i` and its reduced form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EulerCharacteristic {
    #[serde(serialize_with = "crate::json::serialize_bigint")]
    pub euler: BigInt,
    #[serde(serialize_with = "crate::json::serialize_bigint")]
    pub reduced: BigInt,
    /// Set for the void complex, where the values are the `(0, -1)` convention.
    pub void: bool,
}

/// The coloring complex of a graph with the edge labelling of its facets.
#[derive(Debug, Clone)]
pub struct ColoringComplex {
    graph: Graph,
    complex: SimplicialComplex,
    facet_edges: Vec<Edge>,
}

/// The edge whose endpoints share the unique two-element block of a facet.
pub fn facet_edge(d: usize, facet: &Chain) -> Option<Edge> {
    let blocks = facet.blocks(d);
    let mut pairs = blocks.iter().filter(|b| b.len() == 2);
    let pair = pairs.next()?;
    if pairs.next().is_some() || blocks.iter().any(|b| b.len() > 2) {
        return None;
    }
    let v = pair.to_vec();
    Some(Edge::new(v[0], v[1]))
}

/// Facets of the edge-sphere of `e`: cumulative unions over each ordering of
/// the singletons outside `e` together with `e` itself, stopping before `[d]`.
fn edge_facets(d: usize, e: Edge) -> Vec<Chain> {
    let mut items: Vec<VertexSet> = VertexSet::full(d)
        .minus(e.as_set())
        .iter()
        .map(VertexSet::singleton)
        .collect();
    items.push(e.as_set());
    let m = items.len();
    let mut out = Vec::with_capacity(perm::factorial(m) as usize);
    perm::for_each_in_range(m, 0..perm::factorial(m), |p| {
        let mut union = VertexSet::EMPTY;
        let sets = p[..m - 1]
            .iter()
            .map(|&k| {
                union = union | items[k as usize - 1];
                union
            })
            .collect();
        out.push(Chain(sets));
    });
    out
}

pub fn build_complex(g: &Graph) -> Result<ColoringComplex> {
    build_complex_with(g, &Config::default())
}

/// The facets of `Δ_G`, sorted and deduplicated, without building faces.
pub fn coloring_facets(g: &Graph, cfg: &Config) -> Result<BTreeSet<Chain>> {
    let d = g.d();
    cfg.limits.check_complex(d)?;
    cfg.limits.check_perms(d - 1)?;
    let per_edge = map_ordered(cfg.exec, g.edges(), |&e| edge_facets(d, e));
    Ok(per_edge.into_iter().flatten().collect())
}

pub fn build_complex_with(g: &Graph, cfg: &Config) -> Result<ColoringComplex> {
    let d = g.d();
    let facets = coloring_facets(g, cfg)?;
    let complex = if facets.is_empty() {
        SimplicialComplex::void()
    } else {
        SimplicialComplex::from_facets_with(facets.into_iter().collect(), cfg)
    };
    let facet_edges = complex
        .facets()
        .iter()
        .map(|f| facet_edge(d, f).expect("generated facets have one edge block"))
        .collect();
    Ok(ColoringComplex {
        graph: g.clone(),
        complex,
        facet_edges,
    })
}

impl ColoringComplex {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn d(&self) -> usize {
        self.graph.d()
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn is_void(&self) -> bool {
        self.complex.is_void()
    }

    pub fn facets(&self) -> &[Chain] {
        self.complex.facets()
    }

    /// The edge of the `k`-th facet.
    pub fn facet_edge(&self, k: usize) -> Edge {
        self.facet_edges[k]
    }

    /// Facet indices grouped by edge.
    pub fn edges_to_facets(&self) -> BTreeMap<Edge, Vec<usize>> {
        let mut out: BTreeMap<Edge, Vec<usize>> = BTreeMap::new();
        for (k, &e) in self.facet_edges.iter().enumerate() {
            out.entry(e).or_default().push(k);
        }
        out
    }

    /// `f_{-1}, …, f_{d-3}`, or empty when void.
    pub fn f_vector(&self) -> FVector {
        self.complex.f_vector()
    }

    /// `h_0, …, h_{d-2}`, or empty when void.
    pub fn h_vector(&self) -> HVector {
        if self.is_void() {
            return HVector::default();
        }
        f_to_h(&self.f_vector(), self.d() - 2).expect("pure of dimension d-3")
    }

    pub fn euler_characteristics(&self) -> EulerCharacteristic {
        if self.is_void() {
            return EulerCharacteristic {
                euler: BigInt::from(0),
                reduced: BigInt::from(-1),
                void: true,
            };
        }
        let f = self.f_vector();
        let euler: BigInt = f.0[1..]
            .iter()
            .enumerate()
            .map(|(i, x)| if i % 2 == 0 { x.clone() } else { -x })
            .sum();
        let reduced = &euler - 1;
        EulerCharacteristic {
            euler,
            reduced,
            void: false,
        }
    }

    /// The subcomplex generated by the facets of one edge.
    pub fn edge_sphere(&self, e: Edge) -> Result<SimplicialComplex> {
        if !self.graph.has_edge(e.0, e.1) {
            return Err(Error::NotAnEdge(e.0, e.1));
        }
        let facets = self
            .facets()
            .iter()
            .zip(&self.facet_edges)
            .filter(|(_, &fe)| fe == e)
            .map(|(f, _)| f.clone());
        Ok(SimplicialComplex::from_facets(facets))
    }

    /// The intersection of the `e`- and `f`-spheres, with the separation
    /// check on the `e`-sphere.
    pub fn sphere_intersection(&self, e: Edge, f: Edge) -> Result<SphereIntersection> {
        if e == f {
            return Err(Error::SameEdge);
        }
        let se = self.edge_sphere(e)?;
        let sf = self.edge_sphere(f)?;
        let complex = se.intersection(&sf);
        let inside: HashSet<VertexSet> = complex.vertices().into_iter().collect();
        let outside: Vec<VertexSet> = se.vertices().into_iter().filter(|v| !inside.contains(v)).collect();
        let components = components(&outside, &se.edges());
        let (i, j) = (f.0, f.1);
        let class = |want: usize, avoid: usize| -> BTreeSet<VertexSet> {
            outside
                .iter()
                .copied()
                .filter(|s| s.contains(want) && !s.contains(avoid))
                .collect()
        };
        let mut expected = vec![class(i, j), class(j, i)];
        expected.sort();
        let separated = expected.iter().all(|c| !c.is_empty()) && components == expected;
        Ok(SphereIntersection {
            complex,
            components,
            separated,
        })
    }

    pub fn to_json(&self) -> ComplexJson {
        ComplexJson {
            d: self.d(),
            facets: self
                .facets()
                .iter()
                .map(|c| c.0.iter().map(|s| s.to_vec()).collect())
                .collect(),
            f: self.f_vector(),
            h: self.h_vector(),
            euler: self.euler_characteristics().euler,
            edges_to_facets: EdgeMap(self.edges_to_facets()),
        }
    }
}

/// The JSON export of a coloring complex.
#[derive(Debug, Clone, Serialize)]
pub struct ComplexJson {
    pub d: usize,
    pub facets: Vec<Vec<Vec<usize>>>,
    pub f: FVector,
    pub h: HVector,
    #[serde(serialize_with = "crate::json::serialize_bigint")]
    pub euler: BigInt,
    pub edges_to_facets: EdgeMap,
}

#[derive(Debug, Clone)]
pub struct EdgeMap(pub BTreeMap<Edge, Vec<usize>>);

impl Serialize for EdgeMap {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_map(self.0.iter().map(|(e, v)| (e.to_string(), v)))
    }
}

/// Result of [`ColoringComplex::sphere_intersection`].
#[derive(Debug, Clone)]
pub struct SphereIntersection {
    pub complex: SimplicialComplex,
    /// Connected components of the `e`-sphere's 1-skeleton after deleting
    /// the intersection's vertices, sorted.
    pub components: Vec<BTreeSet<VertexSet>>,
    /// Whether the components are exactly the sets containing one endpoint
    /// of `f` but not the other.
    pub separated: bool,
}

fn components(vertices: &[VertexSet], edges: &[(VertexSet, VertexSet)]) -> Vec<BTreeSet<VertexSet>> {
    let alive: HashSet<VertexSet> = vertices.iter().copied().collect();
    let mut adj: BTreeMap<VertexSet, Vec<VertexSet>> = BTreeMap::new();
    for &(a, b) in edges {
        if alive.contains(&a) && alive.contains(&b) {
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
        }
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for &v in vertices {
        if !seen.insert(v) {
            continue;
        }
        let mut comp = BTreeSet::from([v]);
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            for &w in adj.get(&u).into_iter().flatten() {
                if seen.insert(w) {
                    comp.insert(w);
                    queue.push_back(w);
                }
            }
        }
        out.push(comp);
    }
    out.sort();
    out
}

/// The order complex of the Boolean algebra on `[m]` with `∅` and `[m]`
/// removed, generated by its `m!` maximal chains.
pub fn truncated_boolean_order_complex(m: usize) -> SimplicialComplex {
    let mut facets = Vec::with_capacity(perm::factorial(m) as usize);
    perm::for_each_in_range(m, 0..perm::factorial(m), |p| {
        let mut union = VertexSet::EMPTY;
        let sets = p[..m.saturating_sub(1)]
            .iter()
            .map(|&v| {
                union = union.with(v as usize);
                union
            })
            .collect();
        facets.push(Chain(sets));
    });
    SimplicialComplex::from_facets(facets)
}

/// Chains of proper nonempty subsets that are not faces but whose every
/// proper subchain is.
pub fn minimal_nonfaces(c: &ColoringComplex) -> BTreeSet<Chain> {
    let mut out = BTreeSet::new();
    for_each_chain(c.d(), false, |ch| {
        if !c.complex.contains(ch) && (0..ch.len()).all(|k| c.complex.contains(&ch.without(k))) {
            out.insert(ch.clone());
        }
    });
    out
}

/// h-vector of the complex that keeps the cone point `[d]`: the Eulerian
/// coefficients of `A_d(t)/t` plus `h(Δ_G)` shifted one place right.
pub fn nontruncated_h_vector(g: &Graph) -> Result<HVector> {
    let d = g.d();
    if d < 3 {
        return Err(Error::TooFewVertices(d));
    }
    let a = eulerian_polynomial(d).padded(d + 1);
    let mut h: Vec<BigInt> = a[1..].to_vec();
    let inner = build_complex(g)?.h_vector();
    for (k, x) in inner.0.into_iter().enumerate() {
        h[k + 1] += x;
    }
    Ok(HVector(h))
}

/// The same h-vector from a direct build: faces are chains of nonempty
/// subsets (with `[d]` allowed) containing no full G-sequence chain.
pub fn nontruncated_h_vector_direct(g: &Graph) -> Result<HVector> {
    nontruncated_h_vector_direct_with(g, &Config::default())
}

pub fn nontruncated_h_vector_direct_with(g: &Graph, cfg: &Config) -> Result<HVector> {
    let d = g.d();
    cfg.limits.check_complex(d)?;
    let minimal: HashSet<Vec<VertexSet>> = basic_chains(g, GSequence::Full, cfg)?.into_iter().collect();
    let mut counts = vec![0u64; d];
    for_each_chain(d, true, |ch| {
        if ch.subchains().all(|sub| !minimal.contains(&sub.0)) {
            if counts.len() <= ch.len() {
                counts.resize(ch.len() + 1, 0);
            }
            counts[ch.len()] += 1;
        }
    });
    f_to_h(&FVector(counts.into_iter().map(BigInt::from).collect()), d - 1)
}
