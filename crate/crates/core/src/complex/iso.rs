//! Exact isomorphism test for chain complexes.
//!
//! Vertices are first split by color refinement on the vertex-facet
//! incidence structure, seeded with each vertex's link f-vector. A
//! backtracking search then extends a partial vertex map one vertex at a
//! time, rejecting any step that breaks 1-skeleton adjacency or sends a
//! completed facet to a non-facet. Subset cardinality is never used.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use super::SimplicialComplex;
use crate::config::Config;
use crate::error::{Error, Result};
use crate::graph::VertexSet;

/// Outcome of [`complexes_isomorphic`]. The witness maps vertices of the
/// first complex to vertices of the second.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoResult {
    pub isomorphic: bool,
    pub witness: Option<BTreeMap<VertexSet, VertexSet>>,
}

impl IsoResult {
    fn no() -> Self {
        IsoResult {
            isomorphic: false,
            witness: None,
        }
    }
}

pub fn complexes_isomorphic(a: &SimplicialComplex, b: &SimplicialComplex) -> Result<IsoResult> {
    complexes_isomorphic_with(a, b, &Config::default())
}

pub fn complexes_isomorphic_with(
    a: &SimplicialComplex,
    b: &SimplicialComplex,
    cfg: &Config,
) -> Result<IsoResult> {
    let va = a.vertices();
    let vb = b.vertices();
    let combined = va.len() + vb.len();
    if combined > cfg.limits.max_iso_vertices {
        return Err(Error::BoundExceeded {
            what: "combined vertex count for isomorphism search",
            limit: cfg.limits.max_iso_vertices as u128,
            actual: combined as u128,
        });
    }
    if a.is_void() || b.is_void() {
        return Ok(if a.is_void() && b.is_void() {
            IsoResult {
                isomorphic: true,
                witness: Some(BTreeMap::new()),
            }
        } else {
            IsoResult::no()
        });
    }
    if va.len() != vb.len() || a.facets().len() != b.facets().len() || a.f_vector() != b.f_vector() {
        return Ok(IsoResult::no());
    }

    let ia = Indexed::new(a, &va);
    let ib = Indexed::new(b, &vb);
    let (ca, cb) = refine(&ia, &ib);
    let mut ha = ca.clone();
    let mut hb = cb.clone();
    ha.sort_unstable();
    hb.sort_unstable();
    if ha != hb {
        return Ok(IsoResult::no());
    }

    let order = search_order(&ia, &ca);
    let mut pos = vec![0usize; ia.n];
    for (k, &v) in order.iter().enumerate() {
        pos[v] = k;
    }
    // facets of `a` to check once their last vertex in `order` is mapped
    let mut closing: Vec<Vec<usize>> = vec![Vec::new(); ia.n];
    for (k, f) in ia.facets.iter().enumerate() {
        let last = *f.iter().max_by_key(|&&v| pos[v]).expect("facets of a non-void complex");
        closing[last].push(k);
    }

    let mut search = Search {
        a: &ia,
        b: &ib,
        ca: &ca,
        cb: &cb,
        order: &order,
        closing: &closing,
        map: vec![usize::MAX; ia.n],
        used: vec![false; ib.n],
    };
    if !search.extend(0) {
        return Ok(IsoResult::no());
    }
    let witness: BTreeMap<VertexSet, VertexSet> = search
        .map
        .iter()
        .enumerate()
        .map(|(i, &j)| (va[i], vb[j]))
        .collect();
    debug_assert!(verify_witness(a, b, &witness));
    Ok(IsoResult {
        isomorphic: true,
        witness: Some(witness),
    })
}

/// Checks that `w` is a bijection between the vertex sets that sends the
/// facets of `a` onto the facets of `b`.
pub fn verify_witness(
    a: &SimplicialComplex,
    b: &SimplicialComplex,
    w: &BTreeMap<VertexSet, VertexSet>,
) -> bool {
    let va = a.vertices();
    let vb = b.vertices();
    if va.len() != vb.len() || w.len() != va.len() || !va.iter().all(|v| w.contains_key(v)) {
        return false;
    }
    let image: HashSet<VertexSet> = w.values().copied().collect();
    if image.len() != vb.len() || !vb.iter().all(|v| image.contains(v)) {
        return false;
    }
    if a.facets().len() != b.facets().len() {
        return false;
    }
    let target: HashSet<Vec<VertexSet>> = b
        .facets()
        .iter()
        .map(|f| {
            let mut v = f.sets().to_vec();
            v.sort();
            v
        })
        .collect();
    a.facets().iter().all(|f| {
        let mut v: Vec<VertexSet> = f.sets().iter().map(|s| w[s]).collect();
        v.sort();
        target.contains(&v)
    })
}

struct Indexed {
    n: usize,
    facets: Vec<Vec<usize>>,
    facet_set: HashSet<Vec<usize>>,
    incident: Vec<Vec<usize>>,
    adjacent: Vec<Vec<bool>>,
    link_f: Vec<Vec<usize>>,
}

impl Indexed {
    fn new(c: &SimplicialComplex, vertices: &[VertexSet]) -> Self {
        let n = vertices.len();
        let index: HashMap<VertexSet, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let to_idx = |f: &super::Chain| -> Vec<usize> {
            let mut v: Vec<usize> = f.sets().iter().map(|s| index[s]).collect();
            v.sort_unstable();
            v
        };
        let facets: Vec<Vec<usize>> = c.facets().iter().map(to_idx).collect();
        let mut incident = vec![Vec::new(); n];
        for (k, f) in facets.iter().enumerate() {
            for &v in f {
                incident[v].push(k);
            }
        }
        let mut adjacent = vec![vec![false; n]; n];
        let mut link_f = vec![Vec::new(); n];
        for face in c.faces.iter() {
            let idx = to_idx(face);
            for &v in &idx {
                let counts = &mut link_f[v];
                if counts.len() < idx.len() {
                    counts.resize(idx.len(), 0);
                }
                counts[idx.len() - 1] += 1;
            }
            if idx.len() == 2 {
                adjacent[idx[0]][idx[1]] = true;
                adjacent[idx[1]][idx[0]] = true;
            }
        }
        Indexed {
            n,
            facet_set: facets.iter().cloned().collect(),
            facets,
            incident,
            adjacent,
            link_f,
        }
    }
}

/// Joint color refinement; colors are comparable across the two complexes.
fn refine(a: &Indexed, b: &Indexed) -> (Vec<usize>, Vec<usize>) {
    let mut palette: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut seed = |c: &Indexed| -> Vec<usize> {
        c.link_f
            .iter()
            .map(|l| {
                let next = palette.len();
                *palette.entry(l.clone()).or_insert(next)
            })
            .collect()
    };
    let mut ca = seed(a);
    let mut cb = seed(b);
    let mut classes = count_classes(&ca, &cb);
    loop {
        let step = |c: &Indexed, col: &[usize]| -> Vec<(usize, Vec<Vec<usize>>)> {
            (0..c.n)
                .map(|v| {
                    let mut around: Vec<Vec<usize>> = c.incident[v]
                        .iter()
                        .map(|&k| {
                            let mut f: Vec<usize> = c.facets[k].iter().map(|&u| col[u]).collect();
                            f.sort_unstable();
                            f
                        })
                        .collect();
                    around.sort();
                    (col[v], around)
                })
                .collect()
        };
        let sa = step(a, &ca);
        let sb = step(b, &cb);
        // ids follow signature order so both sides agree
        let table: BTreeSet<&(usize, Vec<Vec<usize>>)> = sa.iter().chain(sb.iter()).collect();
        let rank: HashMap<&(usize, Vec<Vec<usize>>), usize> =
            table.into_iter().enumerate().map(|(i, k)| (k, i)).collect();
        ca = sa.iter().map(|s| rank[s]).collect();
        cb = sb.iter().map(|s| rank[s]).collect();
        let now = count_classes(&ca, &cb);
        if now == classes {
            return (ca, cb);
        }
        classes = now;
    }
}

fn count_classes(ca: &[usize], cb: &[usize]) -> usize {
    ca.iter().chain(cb).collect::<HashSet<_>>().len()
}

/// Greedy order: rarest color first, then always the vertex with the most
/// already-ordered neighbours.
fn search_order(a: &Indexed, colors: &[usize]) -> Vec<usize> {
    let mut freq: HashMap<usize, usize> = HashMap::new();
    for &c in colors {
        *freq.entry(c).or_default() += 1;
    }
    let mut placed = vec![false; a.n];
    let mut score = vec![0usize; a.n];
    let mut order = Vec::with_capacity(a.n);
    while order.len() < a.n {
        let v = (0..a.n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (std::cmp::Reverse(score[v]), freq[&colors[v]], v))
            .expect("unplaced vertex");
        placed[v] = true;
        order.push(v);
        for (s, &adj) in score.iter_mut().zip(&a.adjacent[v]) {
            if adj {
                *s += 1;
            }
        }
    }
    order
}

struct Search<'a> {
    a: &'a Indexed,
    b: &'a Indexed,
    ca: &'a [usize],
    cb: &'a [usize],
    order: &'a [usize],
    closing: &'a [Vec<usize>],
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for w in 0..self.b.n {
            if self.used[w] || self.cb[w] != self.ca[v] || !self.consistent(depth, v, w) {
                continue;
            }
            self.map[v] = w;
            self.used[w] = true;
            if self.facets_close(v) && self.extend(depth + 1) {
                return true;
            }
            self.used[w] = false;
            self.map[v] = usize::MAX;
        }
        false
    }

    fn consistent(&self, depth: usize, v: usize, w: usize) -> bool {
        self.order[..depth]
            .iter()
            .all(|&u| self.a.adjacent[v][u] == self.b.adjacent[w][self.map[u]])
    }

    fn facets_close(&self, v: usize) -> bool {
        self.closing[v].iter().all(|&k| {
            let mut img: Vec<usize> = self.a.facets[k].iter().map(|&u| self.map[u]).collect();
            img.sort_unstable();
            self.b.facet_set.contains(&img)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::build_complex;
    use crate::graph::{Graph, Named};

    fn complex(g: &Graph) -> SimplicialComplex {
        build_complex(g).unwrap().complex().clone()
    }

    #[test]
    fn two_edge_graphs_on_four() {
        let a = complex(&Graph::new(4, [(1, 2), (3, 4)]).unwrap());
        let b = complex(&Graph::new(4, [(1, 2), (2, 3)]).unwrap());
        let r = complexes_isomorphic(&a, &b).unwrap();
        assert!(r.isomorphic);
        assert!(verify_witness(&a, &b, r.witness.as_ref().unwrap()));
    }

    // Same f-vector, but the vertex {1,2} lies on 8 edges in one and 6 in the other.
    #[test]
    fn two_edge_graphs_on_five_differ() {
        let a = complex(&Graph::new(5, [(1, 2), (3, 4)]).unwrap());
        let b = complex(&Graph::new(5, [(1, 2), (2, 3)]).unwrap());
        assert_eq!(a.f_vector(), b.f_vector());
        assert_eq!(complexes_isomorphic(&a, &b).unwrap(), IsoResult::no());
    }

    #[test]
    fn path_and_star_differ() {
        let a = complex(&Named::Path4.graph());
        let b = complex(&Named::Star4.graph());
        assert_eq!(complexes_isomorphic(&a, &b).unwrap(), IsoResult::no());
    }

    #[test]
    fn self_isomorphic() {
        let a = complex(&Named::Bowtie.graph());
        let r = complexes_isomorphic(&a, &a).unwrap();
        assert!(r.isomorphic);
        assert!(verify_witness(&a, &a, r.witness.as_ref().unwrap()));
    }

    #[test]
    fn relabelled_graph_gives_isomorphic_complex() {
        let g = Named::DiamondPendant.graph();
        let h = g.relabel(&[3, 5, 1, 2, 4]).unwrap();
        let r = complexes_isomorphic(&complex(&g), &complex(&h)).unwrap();
        assert!(r.isomorphic);
    }

    #[test]
    fn bound_and_void() {
        let a = complex(&Named::Bowtie.graph());
        let mut cfg = Config::default();
        cfg.limits.max_iso_vertices = 10;
        assert!(matches!(
            complexes_isomorphic_with(&a, &a, &cfg),
            Err(Error::BoundExceeded { .. })
        ));
        let v = SimplicialComplex::void();
        assert!(complexes_isomorphic(&v, &v).unwrap().isomorphic);
        assert!(!complexes_isomorphic(&v, &complex(&Graph::path(3))).unwrap().isomorphic);
    }

    #[test]
    fn bad_witness_rejected() {
        let a = complex(&Graph::path(4));
        let w = complexes_isomorphic(&a, &a).unwrap().witness.unwrap();
        let v = a.vertices();
        let mut collapsed = w.clone();
        collapsed.insert(v[0], w[&v[1]]);
        assert!(!verify_witness(&a, &a, &collapsed));
        let mut short = w.clone();
        short.remove(&v[0]);
        assert!(!verify_witness(&a, &a, &short));
        // {1,3} is not a vertex of this complex
        let mut stray = w;
        stray.insert(v[0], VertexSet::from_vertices([1, 3]));
        assert!(!verify_witness(&a, &a, &stray));
    }
}
