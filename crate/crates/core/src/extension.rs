//! Single-element extensions of a matroid, enumerated through modular cuts
//! of its lattice of flats.
//!
//! A modular cut is an up-closed family `M` of flats such that for every
//! modular pair `F, G ∈ M` (with `r(F) + r(G) = r(F ∪ G) + r(F ∩ G)`) the
//! intersection `F ∩ G` is in `M` too. Adding a new element `e` whose closure
//! behaviour is described by `M` gives `r(X + e) = r(X)` when `cl(X) ∈ M`
//! and `r(X) + 1` otherwise; every single-element extension arises this way.

use crate::error::{input, Result};
use crate::matroid::{Backend, FlatLattice, Matroid};
use crate::subset::{Ground, Subset};

/// Membership vector over the flats of a lattice.
pub type ModularCut = Vec<bool>;

#[derive(Clone, Debug)]
pub struct CutEnumeration {
    pub cuts: Vec<ModularCut>,
    /// True if enumeration stopped at the limit.
    pub truncated: bool,
}

/// All modular cuts (including the empty cut and the cut of all flats), in a
/// fixed order, stopping after `limit` cuts.
pub fn modular_cuts(m: &Matroid, lattice: &FlatLattice, limit: usize) -> CutEnumeration {
    let flats = lattice.flats();
    let k = flats.len();
    let mut upper: Vec<Vec<usize>> = vec![Vec::new(); k];
    for &(lo, hi) in lattice.covers() {
        upper[lo].push(hi);
    }
    // modular pairs meeting exactly in each flat
    let mut meets: Vec<Vec<(usize, usize)>> = vec![Vec::new(); k];
    for i in 0..k {
        for j in i + 1..k {
            let (f, g) = (flats[i], flats[j]);
            let meet = f & g;
            if meet == f || meet == g {
                continue;
            }
            if m.rank(f) + m.rank(g) == m.rank(f | g) + m.rank(meet) {
                if let Some(idx) = lattice.index_of(meet) {
                    meets[idx].push((i, j));
                }
            }
        }
    }

    struct Search<'a> {
        upper: &'a [Vec<usize>],
        meets: &'a [Vec<(usize, usize)>],
        chosen: Vec<bool>,
        out: Vec<ModularCut>,
        limit: usize,
        truncated: bool,
    }

    impl Search<'_> {
        // flats are visited from the top of the lattice down
        fn go(&mut self, pos: usize) {
            if self.out.len() >= self.limit {
                self.truncated = true;
                return;
            }
            let Some(i) = pos.checked_sub(1) else {
                self.out.push(self.chosen.clone());
                return;
            };
            let forced_in = self.meets[i]
                .iter()
                .any(|&(a, b)| self.chosen[a] && self.chosen[b]);
            let may_include = self.upper[i].iter().all(|&u| self.chosen[u]);
            if !forced_in {
                self.chosen[i] = false;
                self.go(i);
            }
            if may_include {
                self.chosen[i] = true;
                self.go(i);
                self.chosen[i] = false;
            }
        }
    }

    let mut s = Search {
        upper: &upper,
        meets: &meets,
        chosen: vec![false; k],
        out: Vec::new(),
        limit,
        truncated: false,
    };
    s.go(k);
    CutEnumeration {
        cuts: s.out,
        truncated: s.truncated,
    }
}

/// Whether `cut` is a modular cut of `lattice` (checked directly from the definition).
pub fn is_modular_cut(m: &Matroid, lattice: &FlatLattice, cut: &[bool]) -> bool {
    let flats = lattice.flats();
    for i in 0..flats.len() {
        if !cut[i] {
            continue;
        }
        for j in 0..flats.len() {
            if flats[i].is_subset_of(flats[j]) && !cut[j] {
                return false;
            }
            if cut[j] {
                let (f, g) = (flats[i], flats[j]);
                let meet = f & g;
                if m.rank(f) + m.rank(g) == m.rank(f | g) + m.rank(meet) {
                    match lattice.index_of(meet) {
                        Some(idx) if cut[idx] => {}
                        _ => return false,
                    }
                }
            }
        }
    }
    true
}

/// The extension of `m` by a new element `label` described by `cut`.
pub fn extend(m: &Matroid, lattice: &FlatLattice, cut: &[bool], label: &str) -> Result<Matroid> {
    if m.ground().index_of(label).is_some() {
        return input(format!("label {label:?} already in the ground set"));
    }
    let mut labels: Vec<String> = m.ground().labels(m.full());
    labels.push(label.to_string());
    let ground = Ground::new(labels)?;
    let pos = ground.index_of(label).expect("label was just added");
    let old = ground.full().without(pos);
    Matroid::from_rank_fn(ground, Backend::Minor, |y| {
        let x = (y - Subset::singleton(pos)).compress(old);
        let r = m.rank(x);
        if !y.contains(pos) {
            return r;
        }
        let cl = lattice.index_of(m.closure(x)).expect("closures are flats");
        if cut[cl] {
            r
        } else {
            r + 1
        }
    })
}

/// A label not yet used in the ground set, derived from `stem`.
pub fn fresh_label(ground: &Ground, stem: &str) -> String {
    (0..)
        .map(|k| format!("{stem}{k}"))
        .find(|l| ground.index_of(l).is_none())
        .expect("some label is free")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cuts_of_free_matroid_are_principal_filters() {
        let m = Matroid::free(Ground::new(["a", "b"]).unwrap());
        let lat = m.flats();
        let cuts = modular_cuts(&m, &lat, usize::MAX);
        assert!(!cuts.truncated);
        // empty cut plus one principal filter per flat
        assert_eq!(cuts.cuts.len(), 1 + lat.len());
        for c in &cuts.cuts {
            assert!(is_modular_cut(&m, &lat, c));
        }
    }

    #[test]
    fn cut_enumeration_matches_definition() {
        let m = Matroid::uniform(2, ["a", "b", "c", "d"]).unwrap();
        let lat = m.flats();
        let found = modular_cuts(&m, &lat, usize::MAX).cuts;
        let k = lat.len();
        let mut brute = Vec::new();
        for bits in 0u64..1 << k {
            let cut: Vec<bool> = (0..k).map(|i| bits >> i & 1 == 1).collect();
            if is_modular_cut(&m, &lat, &cut) {
                brute.push(cut);
            }
        }
        let mut a = found.clone();
        a.sort();
        brute.sort();
        assert_eq!(a, brute);
    }

    #[test]
    fn extensions_are_matroids_restricting_to_original() {
        let m = Matroid::uniform(2, ["a", "b", "c"]).unwrap();
        let lat = m.flats();
        for cut in modular_cuts(&m, &lat, usize::MAX).cuts {
            let e = extend(&m, &lat, &cut, "z").unwrap();
            assert_eq!(e.restrict(Subset(0b0111)).unwrap().rank_table(), m.rank_table());
        }
        assert!(extend(&m, &lat, &vec![false; lat.len()], "a").is_err());
    }
}
