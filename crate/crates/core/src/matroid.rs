//! Finite matroids stored as full rank tables.
//!
//! Whatever a matroid was built from (a basis list, a set system, a digraph),
//! it is materialised once into `2^n` ranks. Every query afterwards is a table
//! lookup, and two matroids on the same ground set are equal exactly when
//! their tables are.

use std::collections::HashMap;

use crate::error::{input, Result};
use crate::subset::{Ground, Subset};

/// Exhaustive rank-axiom validation is run at construction up to this size.
pub const VALIDATE_LIMIT: usize = 16;

/// What a matroid was constructed from. Informational only.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Backend {
    BasisList,
    SetSystem,
    Digraph,
    /// Partial transversals of a set system.
    Transversal,
    /// Restriction, contraction or single-element extension of another matroid.
    Minor,
}

#[derive(Clone, Debug)]
pub struct Matroid {
    ground: Ground,
    rank: Vec<u8>,
    backend: Backend,
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.rank == other.rank
    }
}

impl Eq for Matroid {}

impl std::hash::Hash for Matroid {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ground.hash(state);
        self.rank.hash(state);
    }
}

/// Checks normalisation, unit increase and (local) submodularity.
pub fn validate_rank_table(n: usize, rank: &[u8]) -> std::result::Result<(), String> {
    if rank.len() != 1 << n {
        return Err(format!(
            "rank table has {} entries, expected {}",
            rank.len(),
            1usize << n
        ));
    }
    if rank[0] != 0 {
        return Err("rank of the empty set is not 0".into());
    }
    for x in 0..rank.len() {
        let rx = rank[x];
        for i in 0..n {
            let bi = 1 << i;
            if x & bi != 0 {
                continue;
            }
            let rxi = rank[x | bi];
            if rxi < rx || rxi > rx + 1 {
                return Err(format!("rank jumps from {rx} to {rxi} at mask {x:#b} + {i}"));
            }
            for j in i + 1..n {
                let bj = 1 << j;
                if x & bj != 0 {
                    continue;
                }
                if rxi as u32 + (rank[x | bj] as u32) < rank[x | bi | bj] as u32 + rx as u32 {
                    return Err(format!("submodularity fails at mask {x:#b} with {i}, {j}"));
                }
            }
        }
    }
    Ok(())
}

impl Matroid {
    /// Wraps a rank table, validating the rank axioms for small ground sets.
    pub fn from_rank_table(ground: Ground, rank: Vec<u8>, backend: Backend) -> Result<Self> {
        let n = ground.len();
        if rank.len() != 1 << n {
            return input("rank table length does not match the ground set");
        }
        if n <= VALIDATE_LIMIT {
            if let Err(e) = validate_rank_table(n, &rank) {
                return input(format!("not a matroid rank function: {e}"));
            }
        }
        Ok(Matroid {
            ground,
            rank,
            backend,
        })
    }

    /// Builds a matroid from a rank oracle evaluated on every subset.
    pub fn from_rank_fn(
        ground: Ground,
        backend: Backend,
        mut f: impl FnMut(Subset) -> usize,
    ) -> Result<Self> {
        let rank = ground.full().subsets().map(|x| f(x) as u8).collect();
        Matroid::from_rank_table(ground, rank, backend)
    }

    /// Builds a matroid from its bases. The list must be exactly the basis
    /// family of some matroid: nonempty, equicardinal and exchange-closed.
    pub fn from_bases(ground: Ground, bases: &[Subset]) -> Result<Self> {
        let mut bases = bases.to_vec();
        bases.sort();
        bases.dedup();
        let Some(&first) = bases.first() else {
            return input("a matroid has at least one basis");
        };
        let full = ground.full();
        if bases.iter().any(|b| !b.is_subset_of(full)) {
            return input("basis mentions an element outside the ground set");
        }
        if bases.iter().any(|b| b.len() != first.len()) {
            return input("bases have different sizes");
        }
        let m = Matroid::from_rank_fn(ground, Backend::BasisList, |x| {
            bases.iter().map(|&b| (b & x).len()).max().unwrap_or(0)
        })?;
        let derived = m.bases();
        if derived != bases {
            return input(format!(
                "basis list is not exchange-closed ({} listed, {} implied)",
                bases.len(),
                derived.len()
            ));
        }
        Ok(m)
    }

    /// The matroid in which every subset is independent.
    pub fn free(ground: Ground) -> Self {
        let rank = ground.full().subsets().map(|x| x.len() as u8).collect();
        Matroid {
            ground,
            rank,
            backend: Backend::BasisList,
        }
    }

    /// The uniform matroid `U_{r,n}` on the given labels.
    pub fn uniform<S: Into<String>>(r: usize, labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let ground = Ground::new(labels)?;
        if r > ground.len() {
            return input("uniform rank exceeds ground set size");
        }
        let rank = ground.full().subsets().map(|x| x.len().min(r) as u8).collect();
        Ok(Matroid {
            ground,
            rank,
            backend: Backend::BasisList,
        })
    }

    pub fn ground(&self) -> &Ground {
        &self.ground
    }

    pub fn n(&self) -> usize {
        self.ground.len()
    }

    pub fn full(&self) -> Subset {
        self.ground.full()
    }

    pub fn backend(&self) -> Backend {
        self.backend
    }

    pub fn rank_table(&self) -> &[u8] {
        &self.rank
    }

    #[inline]
    pub fn rank(&self, x: Subset) -> usize {
        self.rank[x.index()] as usize
    }

    /// Rank with a ground-set check, for subsets coming from user input.
    pub fn rank_checked(&self, x: Subset) -> Result<usize> {
        if !x.is_subset_of(self.full()) {
            return input("subset mentions elements outside the ground set");
        }
        Ok(self.rank(x))
    }

    pub fn total_rank(&self) -> usize {
        self.rank(self.full())
    }

    pub fn is_independent(&self, x: Subset) -> bool {
        self.rank(x) == x.len()
    }

    pub fn closure(&self, x: Subset) -> Subset {
        let r = self.rank(x);
        let mut cl = x;
        for y in (self.full() - x).iter() {
            if self.rank(x.with(y)) == r {
                cl = cl.with(y);
            }
        }
        cl
    }

    pub fn is_closed(&self, x: Subset) -> bool {
        let r = self.rank(x);
        (self.full() - x).iter().all(|y| self.rank(x.with(y)) > r)
    }

    /// `cl(∅)`, the loops.
    pub fn loops(&self) -> Subset {
        self.closure(Subset::EMPTY)
    }

    /// All bases, ascending by mask.
    pub fn bases(&self) -> Vec<Subset> {
        let r = self.total_rank();
        self.full()
            .subsets()
            .filter(|&x| x.len() == r && self.rank(x) == r)
            .collect()
    }

    pub fn flats(&self) -> FlatLattice {
        FlatLattice::new(self)
    }

    /// The matroid whose bases are the complements of the bases of `self`.
    pub fn dual(&self) -> Matroid {
        let full = self.full();
        let co: Vec<Subset> = self.bases().into_iter().map(|b| full - b).collect();
        Matroid::from_bases(self.ground.clone(), &co).expect("complements of bases form a matroid")
    }

    /// Deletion of everything outside `c`; ranks unchanged on subsets of `c`.
    pub fn restrict(&self, c: Subset) -> Result<Matroid> {
        if !c.is_subset_of(self.full()) {
            return input("restriction set mentions elements outside the ground set");
        }
        let ground = self.ground.restrict(c);
        let rank = Subset::full(c.len())
            .subsets()
            .map(|x| self.rank[x.expand(c).index()])
            .collect();
        Ok(Matroid {
            ground,
            rank,
            backend: Backend::Minor,
        })
    }

    /// Contraction by `b`: `r'(X) = r(X ∪ B) − r(B)` on `A ∖ B`.
    pub fn contract(&self, b: Subset) -> Result<Matroid> {
        if !b.is_subset_of(self.full()) {
            return input("contraction set mentions elements outside the ground set");
        }
        let rest = self.full() - b;
        let rb = self.rank[b.index()];
        let ground = self.ground.restrict(rest);
        let rank = Subset::full(rest.len())
            .subsets()
            .map(|x| self.rank[(x.expand(rest) | b).index()] - rb)
            .collect();
        Ok(Matroid {
            ground,
            rank,
            backend: Backend::Minor,
        })
    }

    /// Labelled equality of rank tables. Different ground sets are an input error.
    pub fn equals(&self, other: &Matroid) -> Result<bool> {
        if self.ground != other.ground {
            return input("matroids are on different ground sets");
        }
        Ok(self.rank == other.rank)
    }

    /// Relative rank `d(X/B) = r(X ∪ B) − r(B)`.
    pub fn rank_over(&self, x: Subset, b: Subset) -> usize {
        self.rank(x | b) - self.rank(b)
    }
}

/// The closed sets of a matroid, ordered by dimension then mask.
#[derive(Clone, Debug)]
pub struct FlatLattice {
    flats: Vec<Subset>,
    dims: Vec<usize>,
    index: HashMap<Subset, usize>,
    covers: Vec<(usize, usize)>,
}

impl FlatLattice {
    pub fn new(m: &Matroid) -> Self {
        let mut flats: Vec<Subset> = m.full().subsets().filter(|&x| m.is_closed(x)).collect();
        flats.sort_by_key(|&f| (m.rank(f), f));
        let dims: Vec<usize> = flats.iter().map(|&f| m.rank(f)).collect();
        let index = flats.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let mut covers = Vec::new();
        for (i, &f) in flats.iter().enumerate() {
            for (j, &g) in flats.iter().enumerate().skip(i + 1) {
                if dims[j] == dims[i] + 1 && f.is_subset_of(g) {
                    covers.push((i, j));
                }
            }
        }
        FlatLattice {
            flats,
            dims,
            index,
            covers,
        }
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn flats(&self) -> &[Subset] {
        &self.flats
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Pairs `(i, j)` such that flat `j` covers flat `i`.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn index_of(&self, x: Subset) -> Option<usize> {
        self.index.get(&x).copied()
    }

    pub fn contains(&self, x: Subset) -> bool {
        self.index.contains_key(&x)
    }

    pub fn dim(&self, i: usize) -> usize {
        self.dims[i]
    }

    /// Indices of the flats contained in `x`.
    pub fn within(&self, x: Subset) -> impl Iterator<Item = usize> + '_ {
        (0..self.flats.len()).filter(move |&i| self.flats[i].is_subset_of(x))
    }

    /// Union of all flats contained in `x`.
    pub fn union_within(&self, x: Subset) -> Subset {
        self.within(x).fold(Subset::EMPTY, |u, i| u | self.flats[i])
    }

    /// Whether `x` is a union of flats (the empty union included).
    pub fn is_union_of_flats(&self, x: Subset) -> bool {
        self.union_within(x) == x
    }
}
