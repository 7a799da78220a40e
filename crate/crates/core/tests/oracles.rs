//! Independent brute-force reimplementations checked against the library.

use std::collections::HashMap;

use predim::alpha::{delta_family, is_flat_geometry, AlphaTable};
use predim::corpus::{canonical_systems, dedup_matroids, random_matroids};
use predim::synthesis::{synthesize_presentation, synthesize_relative};
use predim::{Ground, Matroid, SetSystem, Subset};

fn closed(m: &Matroid, x: Subset) -> bool {
    let r = m.rank(x);
    (0..m.n()).all(|y| x.contains(y) || m.rank(x.with(y)) > r)
}

/// α by its defining recursion: `α(X) = |X| − d(X) − Σ α(G)` over closed
/// `G ⊊ X`, for `X` a union of closed sets. Closedness and the union test
/// use only the rank function.
fn alpha_by_recursion(m: &Matroid) -> HashMap<Subset, i32> {
    let mut closed_sets: Vec<Subset> = m.full().subsets().filter(|&x| closed(m, x)).collect();
    closed_sets.sort_by_key(|x| x.len());
    let unions: Vec<Subset> = m
        .full()
        .subsets()
        .filter(|&x| {
            closed_sets
                .iter()
                .filter(|c| c.is_subset_of(x))
                .fold(Subset::EMPTY, |u, &c| u | c)
                == x
        })
        .collect();
    fn go(m: &Matroid, x: Subset, closed_sets: &[Subset], memo: &mut HashMap<Subset, i32>) -> i32 {
        if let Some(&v) = memo.get(&x) {
            return v;
        }
        let below: i32 = closed_sets
            .iter()
            .filter(|g| g.is_proper_subset_of(x))
            .map(|&g| go(m, g, closed_sets, memo))
            .sum();
        let v = x.len() as i32 - m.rank(x) as i32 - below;
        memo.insert(x, v);
        v
    }
    let mut memo = HashMap::new();
    for &x in &unions {
        go(m, x, &closed_sets, &mut memo);
    }
    memo.retain(|x, _| unions.contains(x));
    memo
}

fn k4() -> Matroid {
    let labels = ["12", "13", "14", "23", "24", "34"];
    let ends = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];
    let ground = Ground::new(labels).unwrap();
    // graphic rank: vertices touched minus components
    Matroid::from_rank_fn(ground, predim::Backend::BasisList, |s| {
        let mut parent: Vec<usize> = (0..=4).collect();
        fn find(p: &mut [usize], v: usize) -> usize {
            if p[v] != v {
                let r = find(p, p[v]);
                p[v] = r;
            }
            p[v]
        }
        let mut rank = 0;
        for i in s.iter() {
            let (a, b) = ends[i];
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
                rank += 1;
            }
        }
        rank
    })
    .unwrap()
}

fn corpus_matroids() -> Vec<Matroid> {
    let systems = canonical_systems(4)
        .into_iter()
        .filter(|s| s.is_in_class_c())
        .map(|s| s.induced_matroid().unwrap());
    dedup_matroids(systems.chain(random_matroids(11, 150, 6)).chain([k4()]))
}

#[test]
fn k4_alpha_is_minus_one() {
    let m = k4();
    assert_eq!(m.bases().len(), 16);
    let oracle = alpha_by_recursion(&m);
    assert_eq!(oracle[&m.full()], -1);
    assert_eq!(AlphaTable::new(&m).alpha(m.full()).unwrap(), -1);
    assert!(synthesize_presentation(&m).unwrap().is_none());
}

#[test]
fn alpha_table_matches_recursion() {
    for m in corpus_matroids() {
        let oracle = alpha_by_recursion(&m);
        let table = AlphaTable::new(&m);
        let mine: HashMap<Subset, i32> = table.unions().collect();
        assert_eq!(mine, oracle, "α differs on {:?}", m.ground());
    }
}

/// Δ by summing over every index set, including the empty one (the union).
fn delta_by_index_sets(m: &Matroid, family: &[Subset]) -> i64 {
    let r = family.len();
    (0u64..1 << r)
        .map(|s| {
            let f = if s == 0 {
                family.iter().fold(Subset::EMPTY, |u, &f| u | f)
            } else {
                (0..r)
                    .filter(|i| s >> i & 1 == 1)
                    .fold(m.full(), |acc, i| acc & family[i])
            };
            let sign = if s.count_ones() % 2 == 0 { 1 } else { -1 };
            sign * m.rank(f) as i64
        })
        .sum()
}

#[test]
fn grouped_delta_matches_index_set_sum() {
    for m in corpus_matroids() {
        let flats = m.flats().flats().to_vec();
        // every family of flats strictly below each union, plus small families
        let table = AlphaTable::new(&m);
        for (x, _) in table.unions() {
            let below: Vec<Subset> = flats
                .iter()
                .copied()
                .filter(|f| f.is_proper_subset_of(x))
                .collect();
            if below.is_empty() || below.len() > 16 {
                continue;
            }
            assert_eq!(
                delta_family(&m, &below).unwrap().value,
                delta_by_index_sets(&m, &below)
            );
        }
        for i in 0..flats.len() {
            for j in i + 1..flats.len() {
                let fam = [flats[i], flats[j]];
                assert_eq!(
                    delta_family(&m, &fam).unwrap().value,
                    delta_by_index_sets(&m, &fam)
                );
            }
        }
    }
}

/// Whether some set system with all relations smaller than `k` induces `m`.
fn presentation_below(m: &Matroid, k: usize) -> bool {
    let cands: Vec<Subset> = m
        .full()
        .subsets()
        .filter(|s| !s.is_empty() && s.len() < k)
        .collect();
    let n = m.n();
    // |R| ≤ |A| in any system with nonnegative predimension
    let mut found = false;
    let mut pick = Vec::new();
    fn go(
        cands: &[Subset],
        start: usize,
        left: usize,
        pick: &mut Vec<Subset>,
        m: &Matroid,
        found: &mut bool,
    ) {
        if *found {
            return;
        }
        let sys = SetSystem::from_parts(m.ground().clone(), pick.clone()).unwrap();
        if !sys.is_in_class_c() {
            return;
        }
        if sys.induced_matroid().unwrap() == *m {
            *found = true;
            return;
        }
        if left == 0 {
            return;
        }
        for i in start..cands.len() {
            pick.push(cands[i]);
            go(cands, i + 1, left - 1, pick, m, found);
            pick.pop();
        }
    }
    go(&cands, 0, n, &mut pick, m, &mut found);
    found
}

#[test]
fn uniform_line_presentations_need_size_three() {
    for n in [3, 4] {
        let labels: Vec<String> = (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
        let m = Matroid::uniform(2, labels).unwrap();
        assert!(!presentation_below(&m, 3));
        assert!(presentation_below(&m, 4));
        assert_eq!(predim::alpha::min_presentation_arity(&m).unwrap(), 3);
    }
}

#[test]
fn minimal_arity_is_tight_on_small_flat_matroids() {
    for m in corpus_matroids().into_iter().filter(|m| m.n() <= 4) {
        let Ok(k) = predim::alpha::min_presentation_arity(&m) else {
            continue;
        };
        assert!(presentation_below(&m, k + 1));
        if k > 0 {
            assert!(
                !presentation_below(&m, k),
                "{:?} presented below arity {k}",
                m.ground()
            );
        }
    }
}

/// `C ⊴ m`: some presentation of `m` keeps `C` self-sufficient and restricts
/// to a presentation of `m|C`.
fn anchored(m: &Matroid, c: Subset) -> bool {
    is_flat_geometry(m).verdict && synthesize_relative(m, c).unwrap().is_some()
}

#[test]
fn anchoring_is_transitive() {
    let mut chains = 0;
    for m in corpus_matroids().into_iter().filter(|m| m.n() <= 5) {
        for b in m.full().subsets() {
            if !anchored(&m, b) {
                continue;
            }
            let mb = m.restrict(b).unwrap();
            for c in b.subsets() {
                if anchored(&mb, c.compress(b)) {
                    chains += 1;
                    assert!(
                        anchored(&m, c),
                        "{c:?} ⊴ {b:?} ⊴ {:?} but not {c:?} ⊴ A",
                        m.ground()
                    );
                }
            }
        }
    }
    assert!(chains > 1000, "only {chains} chains");
}
