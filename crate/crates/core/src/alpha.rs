//! Mason's α-function, the inclusion–exclusion quantity Δ over families of
//! flats, and the flatness decision built on them.
//!
//! α is defined on unions of flats by
//! `α(X) = |X| − d(X) − Σ_{G flat, G ⊊ X} α(G)`.
//! A matroid is flat (equivalently, induced by some set system) iff α is
//! nonnegative on every union of flats, iff `Δ(𝓕(X)) ≤ 0` for every such `X`.

use crate::error::{input, precondition, Result};
use crate::matroid::{FlatLattice, Matroid};
use crate::subset::Subset;

/// α on every union of flats of one matroid.
#[derive(Clone, Debug)]
pub struct AlphaTable {
    lattice: FlatLattice,
    /// α of each flat, indexed like `lattice.flats()`.
    flat_alpha: Vec<i32>,
    /// α by mask; `None` when the mask is not a union of flats.
    values: Vec<Option<i32>>,
}

impl AlphaTable {
    pub fn new(m: &Matroid) -> Self {
        let lattice = m.flats();
        let flats = lattice.flats();

        // flats are sorted by dimension, so every proper subflat comes first
        let mut flat_alpha = vec![0i32; flats.len()];
        for (i, &f) in flats.iter().enumerate() {
            let below: i32 = (0..i)
                .filter(|&j| flats[j].is_proper_subset_of(f))
                .map(|j| flat_alpha[j])
                .sum();
            flat_alpha[i] = f.len() as i32 - m.rank(f) as i32 - below;
        }

        let n = m.n();
        let size = 1usize << n;
        let mut sum_below = vec![0i32; size];
        let mut union_below = vec![0u32; size];
        for (i, &f) in flats.iter().enumerate() {
            sum_below[f.index()] = flat_alpha[i];
            union_below[f.index()] = f.bits();
        }
        for b in 0..n {
            let bit = 1 << b;
            for x in 0..size {
                if x & bit != 0 {
                    sum_below[x] += sum_below[x ^ bit];
                    union_below[x] |= union_below[x ^ bit];
                }
            }
        }

        let values = (0..size)
            .map(|x| {
                let s = Subset(x as u32);
                if union_below[x] != s.bits() {
                    return None;
                }
                Some(match lattice.index_of(s) {
                    Some(i) => flat_alpha[i],
                    None => s.len() as i32 - m.rank(s) as i32 - sum_below[x],
                })
            })
            .collect();

        AlphaTable {
            lattice,
            flat_alpha,
            values,
        }
    }

    pub fn lattice(&self) -> &FlatLattice {
        &self.lattice
    }

    /// α of the `i`-th flat of the lattice.
    pub fn flat_alpha(&self, i: usize) -> i32 {
        self.flat_alpha[i]
    }

    pub fn flat_alphas(&self) -> &[i32] {
        &self.flat_alpha
    }

    pub fn get(&self, x: Subset) -> Option<i32> {
        self.values.get(x.index()).copied().flatten()
    }

    /// α(X); an input error unless `X` is a union of flats.
    pub fn alpha(&self, x: Subset) -> Result<i32> {
        match self.get(x) {
            Some(v) => Ok(v),
            None => input("subset is not a union of flats"),
        }
    }

    pub fn is_union_of_flats(&self, x: Subset) -> bool {
        self.get(x).is_some()
    }

    /// Every union of flats with its α, in ascending mask order.
    pub fn unions(&self) -> impl Iterator<Item = (Subset, i32)> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter_map(|(x, v)| v.map(|v| (Subset(x as u32), v)))
    }
}

/// α(X) for a single union of flats.
pub fn alpha(m: &Matroid, x: Subset) -> Result<i32> {
    if !x.is_subset_of(m.full()) {
        return input("subset mentions elements outside the ground set");
    }
    AlphaTable::new(m).alpha(x)
}

/// One intersection flat in the expansion of Δ: `coefficient` is the signed
/// number of nonempty index sets `S` with `F_S` equal to `flat`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionTerm {
    pub flat: Subset,
    pub dim: usize,
    pub coefficient: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaReport {
    pub family: Vec<Subset>,
    pub union: Subset,
    pub union_dim: usize,
    pub intersections: Vec<IntersectionTerm>,
    pub value: i64,
}

/// `Δ(F_1..F_r) = Σ_{S ⊆ I} (−1)^{|S|} d(F_S)` with `F_∅ = ⋃ F_i`.
///
/// Rather than summing over all `2^r` index sets, nonempty index sets are
/// grouped by the flat `F_S` they intersect to. If `h(G)` is the signed count
/// of nonempty `S` with `G ⊆ F_S` (which is `−1` when some `F_i ⊇ G` and 0
/// otherwise), the grouped coefficients are its Möbius inversion down the
/// lattice of flats.
pub fn delta_family(m: &Matroid, family: &[Subset]) -> Result<DeltaReport> {
    let lattice = m.flats();
    delta_with_lattice(m, &lattice, family)
}

pub(crate) fn delta_with_lattice(
    m: &Matroid,
    lattice: &FlatLattice,
    family: &[Subset],
) -> Result<DeltaReport> {
    if family.is_empty() {
        return input("Δ needs a nonempty family of flats");
    }
    for (i, &f) in family.iter().enumerate() {
        if !lattice.contains(f) {
            return input(format!("family member {:?} is not a flat", m.ground().labels(f)));
        }
        if family[..i].contains(&f) {
            return input("family members must be distinct");
        }
    }
    let union = family.iter().fold(Subset::EMPTY, |u, &f| u | f);
    let union_dim = m.rank(union);

    // candidate intersection flats: those below some member, top-down
    let candidates: Vec<usize> = (0..lattice.len())
        .rev()
        .filter(|&i| family.iter().any(|&f| lattice.flats()[i].is_subset_of(f)))
        .collect();
    let mut coeff: Vec<(usize, i64)> = Vec::with_capacity(candidates.len());
    for &g in &candidates {
        let gf = lattice.flats()[g];
        let above: i64 = coeff
            .iter()
            .filter(|&&(h, _)| gf.is_proper_subset_of(lattice.flats()[h]))
            .map(|&(_, c)| c)
            .sum();
        coeff.push((g, -1 - above));
    }

    let mut intersections: Vec<IntersectionTerm> = coeff
        .into_iter()
        .filter(|&(_, c)| c != 0)
        .map(|(g, c)| IntersectionTerm {
            flat: lattice.flats()[g],
            dim: lattice.dim(g),
            coefficient: c,
        })
        .collect();
    intersections.sort_by_key(|t| (t.dim, t.flat));
    let value = union_dim as i64
        + intersections
            .iter()
            .map(|t| t.coefficient * t.dim as i64)
            .sum::<i64>();

    Ok(DeltaReport {
        family: family.to_vec(),
        union,
        union_dim,
        intersections,
        value,
    })
}

/// `𝓕(X)`: the flats strictly contained in `x`.
pub fn flats_strictly_below(lattice: &FlatLattice, x: Subset) -> Vec<Subset> {
    lattice
        .flats()
        .iter()
        .copied()
        .filter(|f| f.is_proper_subset_of(x))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BridgeReport {
    pub subset: Subset,
    pub alpha: i32,
    pub delta: i64,
    pub holds: bool,
}

/// Compares `α(X)` with `−Δ(𝓕(X))` for a union of flats of dimension at least 2.
pub fn alpha_delta_bridge_check(m: &Matroid, x: Subset) -> Result<BridgeReport> {
    let table = AlphaTable::new(m);
    bridge_with_table(m, &table, x)
}

pub(crate) fn bridge_with_table(m: &Matroid, table: &AlphaTable, x: Subset) -> Result<BridgeReport> {
    let a = table.alpha(x)?;
    if m.rank(x) < 2 {
        return precondition("the α/Δ identity is stated for unions of dimension at least 2");
    }
    let family = flats_strictly_below(table.lattice(), x);
    let delta = delta_with_lattice(m, table.lattice(), &family)?.value;
    Ok(BridgeReport {
        subset: x,
        alpha: a,
        delta,
        holds: a as i64 == -delta,
    })
}

/// `Δ(𝓕(X) ∪ {X})` for a closed `X` of dimension at least 2; it should vanish.
pub fn closed_family_delta(m: &Matroid, x: Subset) -> Result<i64> {
    let lattice = m.flats();
    if !lattice.contains(x) {
        return input("subset is not closed");
    }
    if m.rank(x) < 2 {
        return precondition("identity is stated for flats of dimension at least 2");
    }
    let mut family = flats_strictly_below(&lattice, x);
    family.push(x);
    Ok(delta_with_lattice(m, &lattice, &family)?.value)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatnessCertificate {
    pub verdict: bool,
    /// A union of flats with negative α, present iff the verdict is false.
    pub witness: Option<(Subset, i32)>,
}

/// Decides flatness by checking `α ≥ 0` on every union of flats.
pub fn is_flat_geometry(m: &Matroid) -> FlatnessCertificate {
    certificate(&AlphaTable::new(m))
}

pub fn certificate(table: &AlphaTable) -> FlatnessCertificate {
    let witness = table.unions().find(|&(_, a)| a < 0);
    FlatnessCertificate {
        verdict: witness.is_none(),
        witness,
    }
}

/// Smallest `k` such that α vanishes on every flat of dimension at least `k`:
/// one more than the largest dimension of a flat with nonzero α, or 0.
pub fn min_presentation_arity(m: &Matroid) -> Result<usize> {
    let table = AlphaTable::new(m);
    if !certificate(&table).verdict {
        return precondition("matroid is not flat");
    }
    Ok(arity_from_table(&table))
}

pub(crate) fn arity_from_table(table: &AlphaTable) -> usize {
    let lattice = table.lattice();
    (0..lattice.len())
        .filter(|&i| table.flat_alpha(i) != 0)
        .map(|i| lattice.dim(i) + 1)
        .max()
        .unwrap_or(0)
}
