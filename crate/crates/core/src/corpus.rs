//! Reproducible instance families for exhaustive and screening checks.

use std::collections::HashSet;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::amalgam::{free_amalgam, AmalgamResult};
use crate::extension::{extend, modular_cuts};
use crate::matroid::Matroid;
use crate::setsystem::SetSystem;
use crate::subset::{Ground, Subset};

pub const DEFAULT_SEED: u64 = 2024;

/// `a`, `b`, … for small ground sets.
pub fn letters(n: usize) -> Ground {
    Ground::new((0..n).map(|i| ((b'a' + i as u8) as char).to_string())).expect("distinct letters")
}

/// Every set system on `a..` with `n ≤ max_n` elements whose relations have
/// size at least 2 and number at most `n` (more relations than elements
/// already give `δ(A) < 0`). Ordered by `n`, then relation count, then
/// relation lists lexicographically by mask.
pub fn canonical_systems(max_n: usize) -> Vec<SetSystem> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        let ground = letters(n);
        let candidates: Vec<Subset> = ground.full().subsets().filter(|s| s.len() >= 2).collect();
        for k in 0..=n.min(candidates.len()) {
            let mut pick = Vec::with_capacity(k);
            choose(&candidates, k, 0, &mut pick, &mut |rels| {
                out.push(SetSystem::from_parts(ground.clone(), rels.to_vec()).expect("distinct nonempty"));
            });
        }
    }
    out
}

fn choose(items: &[Subset], k: usize, start: usize, pick: &mut Vec<Subset>, f: &mut impl FnMut(&[Subset])) {
    if pick.len() == k {
        f(pick);
        return;
    }
    for i in start..items.len() {
        if items.len() - i < k - pick.len() {
            break;
        }
        pick.push(items[i]);
        choose(items, k, i + 1, pick, f);
        pick.pop();
    }
}

/// `count` random set systems with `1 ≤ |A| ≤ max_n` and `|R| ≤ max_r`.
/// Not all of them lie in the class with nonnegative predimension.
pub fn random_systems(seed: u64, count: usize, max_n: usize, max_r: usize) -> Vec<SetSystem> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(1..=max_n);
            let r = rng.random_range(0..=max_r);
            random_system(&mut rng, letters(n), r)
        })
        .collect()
}

fn random_system(rng: &mut ChaCha8Rng, ground: Ground, r: usize) -> SetSystem {
    let full = ground.full().bits();
    let mut rels = HashSet::new();
    // at most 2^n − 1 distinct relations exist
    let target = r.min(full as usize);
    while rels.len() < target {
        let mask = rng.random_range(1..=full);
        rels.insert(Subset(mask));
    }
    SetSystem::from_parts(ground, rels.into_iter().collect()).expect("distinct nonempty")
}

/// `count` matroids on at most `max_n` elements. Half are column matroids of
/// random matrices over GF(2), GF(3) or GF(5); the rest grow one element at a
/// time through a uniformly chosen modular cut, which also reaches
/// non-representable and non-flat matroids.
pub fn random_matroids(seed: u64, count: usize, max_n: usize) -> Vec<Matroid> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(1..=max_n);
            if rng.random_range(0..2) == 0 {
                column_matroid(&mut rng, n)
            } else {
                grown_matroid(&mut rng, n)
            }
        })
        .collect()
}

fn column_matroid(rng: &mut ChaCha8Rng, n: usize) -> Matroid {
    let rows = rng.random_range(0..=n);
    let p = [2u32, 3, 5][rng.random_range(0..3)];
    let cols: Vec<Vec<u32>> = (0..n)
        .map(|_| (0..rows).map(|_| rng.random_range(0..p)).collect())
        .collect();
    let ground = letters(n);
    let rank = |s: Subset| column_rank(&cols, s, p);
    let r = rank(ground.full());
    let bases: Vec<Subset> = ground
        .full()
        .subsets()
        .filter(|b| b.len() == r && rank(*b) == r)
        .collect();
    Matroid::from_bases(ground, &bases).expect("column matroids are matroids")
}

/// Cap on cuts enumerated per step; small ground sets stay far below it.
const CUT_LIMIT: usize = 1 << 14;

fn grown_matroid(rng: &mut ChaCha8Rng, n: usize) -> Matroid {
    let ground = letters(n);
    let mut m = Matroid::free(letters(0));
    for label in ground.labels(ground.full()) {
        let lattice = m.flats();
        let cuts = modular_cuts(&m, &lattice, CUT_LIMIT).cuts;
        let cut = &cuts[rng.random_range(0..cuts.len())];
        m = extend(&m, &lattice, cut, &label).expect("fresh label");
    }
    m
}

/// Rank over GF(p) of the columns selected by `s`.
fn column_rank(cols: &[Vec<u32>], s: Subset, p: u32) -> usize {
    let mut rows: Vec<Vec<u32>> = s.iter().map(|i| cols[i].clone()).collect();
    let width = cols.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = (1..p).find(|&x| x * rows[rank][c] % p == 1).expect("p is prime");
        for v in rows[rank].iter_mut() {
            *v = *v * inv % p;
        }
        for i in 0..rows.len() {
            if i != rank && rows[i][c] != 0 {
                let f = rows[i][c];
                let pivot = rows[rank].clone();
                for (v, w) in rows[i].iter_mut().zip(pivot) {
                    *v = (*v + p * p - f * w % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Distinct matroids (by ground and rank table), first occurrence kept.
pub fn dedup_matroids(ms: impl IntoIterator<Item = Matroid>) -> Vec<Matroid> {
    let mut seen = HashSet::new();
    ms.into_iter().filter(|m| seen.insert(m.clone())).collect()
}

/// Random free amalgams with at most `max_merged` elements. Each instance
/// takes a random system on `a..`, a self-sufficient base inside it, and a
/// random second system on the base plus fresh elements `x0..` that agrees
/// with the first on the base.
pub fn amalgam_instances(seed: u64, count: usize, max_merged: usize) -> Vec<AmalgamResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count && attempts < count * 200 {
        attempts += 1;
        let n1 = rng.random_range(1..max_merged.max(2));
        let r1 = rng.random_range(0..=n1);
        let s1 = random_system(&mut rng, letters(n1), r1);
        if !s1.is_in_class_c() {
            continue;
        }
        let base = Subset(rng.random_range(0..=s1.full().bits()));
        if !s1.is_self_sufficient(base).expect("class checked") {
            continue;
        }
        let extra = rng.random_range(0..=max_merged - n1);
        let mut labels = s1.ground().labels(base);
        labels.extend((0..extra).map(|i| format!("x{i}")));
        let ground = Ground::new(labels).expect("fresh labels");
        let base2 = ground
            .subset(s1.ground().labels(base))
            .expect("base labels present");
        let mut rels: Vec<Subset> = s1
            .restrict(base)
            .relations()
            .iter()
            .map(|r| r.expand(base2))
            .collect();
        let r2 = rng.random_range(0..=extra);
        for _ in 0..r2 {
            let new = Subset(rng.random_range(1..=ground.full().bits()));
            if !new.is_subset_of(base2) && !rels.contains(&new) {
                rels.push(new);
            }
        }
        let s2 = SetSystem::from_parts(ground, rels).expect("distinct nonempty");
        let names = s1.ground().labels(base);
        if let Ok(r) = free_amalgam(&s1, &s2, &names) {
            out.push(r);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_counts() {
        // n = 2: no relation or {a,b}; n = 3 has 4 candidates, at most 3 chosen
        let all = canonical_systems(3);
        let by_n = |n: usize| all.iter().filter(|s| s.n() == n).count();
        assert_eq!(by_n(0), 1);
        assert_eq!(by_n(1), 1);
        assert_eq!(by_n(2), 2);
        assert_eq!(by_n(3), 1 + 4 + 6 + 4);
    }

    #[test]
    fn random_families_are_reproducible() {
        assert_eq!(random_systems(7, 20, 7, 7), random_systems(7, 20, 7, 7));
        let a = random_matroids(7, 20, 6);
        let b = random_matroids(7, 20, 6);
        assert_eq!(a, b);
        assert!(a.iter().all(|m| m.n() <= 6));
    }

    #[test]
    fn gf2_column_rank() {
        // columns (1,0), (0,1), (1,1) over GF(2): U_{2,3}
        let cols = vec![vec![1, 0], vec![0, 1], vec![1, 1]];
        assert_eq!(column_rank(&cols, Subset(0b111), 2), 2);
        assert_eq!(column_rank(&cols, Subset(0b100), 2), 1);
        // over GF(3) (1,1) and (2,2) are parallel
        let cols = vec![vec![1, 1], vec![2, 2]];
        assert_eq!(column_rank(&cols, Subset(0b11), 3), 1);
    }

    #[test]
    fn amalgams_are_generated() {
        let rs = amalgam_instances(3, 10, 8);
        assert_eq!(rs.len(), 10);
        assert!(rs.iter().all(|r| r.merged.n() <= 8));
    }
}
