//! Strict gammoids of directed graphs, transversal matroids, and the
//! conversions between set systems and digraphs.

use crate::alpha::is_flat_geometry;
use crate::error::{input, internal, Result};
use crate::extension::{extend, fresh_label, modular_cuts};
use crate::flow::FlowNetwork;
use crate::matroid::{Backend, Matroid};
use crate::setsystem::SetSystem;
use crate::subset::{Ground, Subset};

/// A loopless digraph on labelled vertices with a distinguished sink set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    ground: Ground,
    /// Sorted, without duplicates.
    edges: Vec<(usize, usize)>,
    sinks: Subset,
}

/// Vertex-disjoint directed paths, each listed from its initial vertex to a sink.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Linkage {
    pub paths: Vec<Vec<usize>>,
}

impl Linkage {
    pub fn initial(&self) -> Subset {
        Subset::from_indices(self.paths.iter().map(|p| p[0]))
    }

    pub fn terminal(&self) -> Subset {
        Subset::from_indices(self.paths.iter().map(|p| *p.last().expect("paths are nonempty")))
    }
}

impl Digraph {
    pub fn new<V, S, E, K, T>(vertices: V, edges: E, sinks: K) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        S: Into<String>,
        E: IntoIterator<Item = (T, T)>,
        K: IntoIterator<Item = T>,
        T: AsRef<str>,
    {
        let ground = Ground::new(vertices)?;
        let find = |l: &str| {
            ground
                .index_of(l)
                .ok_or_else(|| crate::Error::Input(format!("unknown vertex {l:?}")))
        };
        let mut es = Vec::new();
        for (u, v) in edges {
            es.push((find(u.as_ref())?, find(v.as_ref())?));
        }
        let sinks = ground.subset(sinks)?;
        Digraph::from_parts(ground, es, sinks)
    }

    pub fn from_parts(ground: Ground, mut edges: Vec<(usize, usize)>, sinks: Subset) -> Result<Self> {
        let n = ground.len();
        if let Some(&(u, _)) = edges.iter().find(|(u, v)| u == v) {
            return input(format!("loop at vertex {:?}", ground.element(u).label()));
        }
        if edges.iter().any(|&(u, v)| u >= n || v >= n) || !sinks.is_subset_of(ground.full()) {
            return input("edge or sink outside the vertex set");
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Digraph { ground, edges, sinks })
    }

    pub fn ground(&self) -> &Ground {
        &self.ground
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn sinks(&self) -> Subset {
        self.sinks
    }

    fn network(&self, sources: Subset) -> (FlowNetwork, usize, usize) {
        let n = self.ground.len();
        let (s, t) = (2 * n, 2 * n + 1);
        let mut g = FlowNetwork::new(2 * n + 2);
        for v in 0..n {
            g.add_edge(2 * v, 2 * v + 1, 1);
        }
        for &(u, v) in &self.edges {
            g.add_edge(2 * u + 1, 2 * v, 1);
        }
        for x in sources.iter() {
            g.add_edge(s, 2 * x, 1);
        }
        for b in self.sinks.iter() {
            g.add_edge(2 * b + 1, t, 1);
        }
        (g, s, t)
    }

    /// Largest number of vertex-disjoint paths from `x` into the sinks.
    pub fn linkage_rank(&self, x: Subset) -> usize {
        let (mut g, s, t) = self.network(x);
        g.max_flow(s, t) as usize
    }

    /// A linkage of all of `x` into the sinks, if one exists. A sink in `x`
    /// may be linked by the one-vertex path.
    pub fn find_linkage(&self, x: Subset) -> Option<Linkage> {
        let (mut g, s, t) = self.network(x);
        if g.max_flow(s, t) as usize != x.len() {
            return None;
        }
        let mut paths = Vec::new();
        for start in g.flow_successors(s) {
            let mut path = Vec::new();
            let mut node = start;
            loop {
                let v = node / 2;
                path.push(v);
                // in-copy to out-copy, then on to the next vertex or the sink
                let next = g.flow_successors(2 * v + 1)[0];
                if next == t {
                    break;
                }
                node = next;
            }
            paths.push(path);
        }
        Some(Linkage { paths })
    }
}

/// The strict gammoid: `C` is independent iff it links into the sinks.
pub fn strict_gammoid(g: &Digraph) -> Result<Matroid> {
    Matroid::from_rank_fn(g.ground.clone(), Backend::Digraph, |x| g.linkage_rank(x))
}

/// Digraph with edges `t(r) → c` for `c ∈ r ∖ {t(r)}`, sinks outside the
/// image of the canonical transversal `t`. Its strict gammoid is verified to
/// equal the pregeometry of `sys`.
pub fn system_to_digraph(sys: &SetSystem) -> Result<Digraph> {
    sys.require_class_c()?;
    let t = sys
        .find_transversal()
        .expect("class membership implies a transversal");
    let mut edges = Vec::new();
    for (r, &head) in sys.relations().iter().zip(&t.assignment) {
        for c in r.without(head).iter() {
            edges.push((head, c));
        }
    }
    let g = Digraph::from_parts(sys.ground().clone(), edges, sys.full() - t.image())?;
    if strict_gammoid(&g)? != sys.induced_matroid()? {
        return internal("digraph strict gammoid differs from the induced pregeometry");
    }
    Ok(g)
}

/// Independent sets are the partial transversals of the relations. No
/// membership requirement on `sys`.
pub fn transversal_matroid(sys: &SetSystem) -> Result<Matroid> {
    Matroid::from_rank_fn(sys.ground().clone(), Backend::Transversal, |x| {
        sys.partial_transversal_rank(x)
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CotransversalReport {
    /// Bases of the pregeometry are exactly the complements of transversals.
    pub bases_match: bool,
    /// The dual of the pregeometry is the transversal matroid.
    pub dual_match: bool,
    pub transversal_count: usize,
    pub basis_count: usize,
}

impl CotransversalReport {
    pub fn holds(&self) -> bool {
        self.bases_match && self.dual_match
    }
}

pub fn cotransversal_check(sys: &SetSystem) -> Result<CotransversalReport> {
    let m = sys.induced_matroid()?;
    let full = sys.full();
    let transversals = sys.transversals();
    let mut complements: Vec<Subset> = transversals.iter().map(|t| full - t.image()).collect();
    complements.sort();
    complements.dedup();
    let bases = m.bases();
    let tm = transversal_matroid(sys)?;
    Ok(CotransversalReport {
        bases_match: complements == bases,
        dual_match: m.dual() == tm,
        transversal_count: transversals.len(),
        basis_count: bases.len(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GammoidVerdict {
    /// A flat matroid containing the input as a restriction was found.
    Yes,
    /// Every extension by up to `extra` elements was examined; none is flat.
    NoWithinBudget,
    /// Nothing conclusive: no extensions were allowed, or the search was cut short.
    Unknown,
}

#[derive(Clone, Debug)]
pub struct GammoidReport {
    pub verdict: GammoidVerdict,
    /// The flat extension found, when the verdict is `Yes`.
    pub witness: Option<Matroid>,
    pub explored: usize,
}

impl GammoidReport {
    pub fn is_gammoid(&self) -> bool {
        self.verdict == GammoidVerdict::Yes
    }
}

/// Caps on the breadth-first extension search.
#[derive(Clone, Copy, Debug)]
pub struct SearchBudget {
    pub cuts_per_matroid: usize,
    pub frontier: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            cuts_per_matroid: 20_000,
            frontier: 50_000,
        }
    }
}

/// Looks for a flat (strict gammoid) extension of `m` by at most `extra`
/// new elements, breadth first.
pub fn is_gammoid_bruteforce(m: &Matroid, extra: usize) -> Result<GammoidReport> {
    is_gammoid_with_budget(m, extra, SearchBudget::default())
}

pub fn is_gammoid_with_budget(m: &Matroid, extra: usize, budget: SearchBudget) -> Result<GammoidReport> {
    if m.n() + extra > crate::subset::HARD_CAP {
        return input("extension search would exceed the ground-set limit");
    }
    if is_flat_geometry(m).verdict {
        return Ok(GammoidReport {
            verdict: GammoidVerdict::Yes,
            witness: Some(m.clone()),
            explored: 1,
        });
    }
    let mut explored = 1;
    let mut truncated = false;
    let mut frontier = vec![m.clone()];
    for _ in 0..extra {
        let mut next = Vec::new();
        for base in &frontier {
            let lattice = base.flats();
            let label = fresh_label(base.ground(), "_e");
            let cuts = modular_cuts(base, &lattice, budget.cuts_per_matroid);
            truncated |= cuts.truncated;
            let all = lattice.len();
            for cut in cuts.cuts {
                // adding a loop or a coloop never makes a non-flat matroid flat:
                // strict gammoids are closed under deleting loops and coloops
                let size = cut.iter().filter(|&&b| b).count();
                if size == 0 || size == all {
                    continue;
                }
                let ext = extend(base, &lattice, &cut, &label)?;
                explored += 1;
                if is_flat_geometry(&ext).verdict {
                    return Ok(GammoidReport {
                        verdict: GammoidVerdict::Yes,
                        witness: Some(ext),
                        explored,
                    });
                }
                if next.len() < budget.frontier {
                    next.push(ext);
                } else {
                    truncated = true;
                }
            }
        }
        frontier = next;
    }
    let verdict = if extra == 0 || truncated {
        GammoidVerdict::Unknown
    } else {
        GammoidVerdict::NoWithinBudget
    };
    Ok(GammoidReport {
        verdict,
        witness: None,
        explored,
    })
}
