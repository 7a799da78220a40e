//! Free amalgamation over a self-sufficient base, and the independence,
//! intersection and canonical-base properties of closed sets in induced
//! pregeometries.

use crate::alpha::{certificate, AlphaTable};
use crate::error::{input, internal, precondition, Result};
use crate::matroid::Matroid;
use crate::setsystem::SetSystem;
use crate::subset::{Ground, Subset};

/// `(B1 ∪ B2; R1 ∪ R2)` with `B1 ∩ B2 = A`.
#[derive(Clone, Debug)]
pub struct AmalgamResult {
    pub merged: SetSystem,
    pub base: Subset,
    /// `B1` and `B2` as subsets of the merged ground set.
    pub left: Subset,
    pub right: Subset,
    pub left_system: SetSystem,
    pub right_system: SetSystem,
}

/// Glues `s1` and `s2` along the labels in `base`. Every other label must
/// occur in only one of the two systems.
pub fn free_amalgam<S: AsRef<str>>(s1: &SetSystem, s2: &SetSystem, base: &[S]) -> Result<AmalgamResult> {
    for (name, s) in [("first", s1), ("second", s2)] {
        if !s.is_in_class_c() {
            return input(format!("{name} system has negative predimension somewhere"));
        }
    }
    let a1 = s1.ground().subset(base.iter().map(|l| l.as_ref()))?;
    let a2 = s2.ground().subset(base.iter().map(|l| l.as_ref()))?;
    let l1 = s1.ground().labels(s1.full());
    let l2 = s2.ground().labels(s2.full());
    if let Some(shared) = l1
        .iter()
        .find(|l| l2.contains(l) && !base.iter().any(|b| b.as_ref() == l.as_str()))
    {
        return input(format!(
            "label {shared:?} occurs in both systems but not in the base"
        ));
    }
    if s1.restrict(a1) != s2.restrict(a2) {
        return input("the two systems disagree on the base");
    }
    if !s1.is_self_sufficient(a1)? || !s2.is_self_sufficient(a2)? {
        return input("the base is not self-sufficient in both systems");
    }

    let mut labels = l1.clone();
    labels.extend(l2.iter().filter(|l| !l1.contains(l)).cloned());
    let ground = Ground::new(labels)?;
    let left = ground.embed(s1.ground())?;
    let right = ground.embed(s2.ground())?;
    let mut relations: Vec<Subset> = s1.relations().iter().map(|r| r.expand(left)).collect();
    relations.extend(
        s2.relations()
            .iter()
            .map(|r| r.expand(right))
            .filter(|r| !r.is_subset_of(left & right)),
    );
    let merged = SetSystem::from_parts(ground, relations)?;
    if !merged.is_in_class_c() {
        return internal("amalgam has negative predimension somewhere");
    }
    if !merged.is_self_sufficient(left)? || !merged.is_self_sufficient(right)? {
        return internal("amalgam factors are not self-sufficient");
    }
    Ok(AmalgamResult {
        merged,
        base: left & right,
        left,
        right,
        left_system: s1.clone(),
        right_system: s2.clone(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaReport {
    pub subset: Subset,
    pub zeta: i32,
    pub direct: usize,
    pub matches: bool,
}

/// `η(Y) = d_{B1}(Y ∩ B1) + d_{B2}(Y ∩ B2) − d_A(Y ∩ A)` for every `Y`.
pub fn eta_table(r: &AmalgamResult) -> Result<Vec<i32>> {
    let d1 = r.left_system.dimension_table()?;
    let d2 = r.right_system.dimension_table()?;
    let base_in_left = r.base.compress(r.left);
    let da = r.left_system.restrict(base_in_left).dimension_table()?;
    Ok(r.merged
        .full()
        .subsets()
        .map(|y| {
            d1[(y & r.left).compress(r.left).index()] as i32
                + d2[(y & r.right).compress(r.right).index()] as i32
                - da[(y & r.base).compress(r.base).index()] as i32
        })
        .collect())
}

/// `ζ(X) = min η(Y)` over `X ⊆ Y`, for every `X`.
pub fn zeta_table(r: &AmalgamResult) -> Result<Vec<i32>> {
    let mut z = eta_table(r)?;
    let n = r.merged.n();
    for i in 0..n {
        let bit = 1usize << i;
        for m in 0..z.len() {
            if m & bit == 0 {
                z[m] = z[m].min(z[m | bit]);
            }
        }
    }
    Ok(z)
}

/// ζ(X) by exhaustive minimization, next to the dimension of `X` in the amalgam.
pub fn zeta_dimension(r: &AmalgamResult, x: Subset) -> Result<ZetaReport> {
    if !x.is_subset_of(r.merged.full()) {
        return input("subset mentions elements outside the amalgam");
    }
    let eta = eta_table(r)?;
    let zeta = x
        .supersets_within(r.merged.full())
        .map(|y| eta[y.index()])
        .min()
        .expect("x is its own superset");
    let direct = r.merged.dimension(x)?;
    Ok(ZetaReport {
        subset: x,
        zeta,
        direct,
        matches: zeta == direct as i32,
    })
}

fn require_closed(m: &Matroid, x: Subset) -> Result<()> {
    if !x.is_subset_of(m.full()) || !m.is_closed(x) {
        return input(format!("{:?} is not closed", m.ground().labels(x & m.full())));
    }
    Ok(())
}

/// `d(X ∪ Y) = d(X) + d(Y) − d(X ∩ Y)` for closed `X`, `Y`.
pub fn independent_flats(m: &Matroid, x: Subset, y: Subset) -> Result<bool> {
    require_closed(m, x)?;
    require_closed(m, y)?;
    Ok(modular(m, x, y))
}

fn modular(m: &Matroid, x: Subset, y: Subset) -> bool {
    m.rank(x | y) + m.rank(x & y) == m.rank(x) + m.rank(y)
}

fn freely_amalgamated(sys: &SetSystem, x: Subset, y: Subset) -> bool {
    sys.relations_in(x | y) + sys.relations_in(x & y) == sys.relations_in(x) + sys.relations_in(y)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependenceReport {
    pub independent: bool,
    pub union_self_sufficient: bool,
    pub freely_amalgamated: bool,
    /// `independent ⇔ (union_self_sufficient ∧ freely_amalgamated)`.
    pub holds: bool,
}

/// For closed `X`, `Y` of the induced pregeometry: independence over `X ∩ Y`
/// against self-sufficiency of `X ∪ Y` plus free amalgamation.
pub fn independence_check(sys: &SetSystem, x: Subset, y: Subset) -> Result<IndependenceReport> {
    let m = sys.induced_matroid()?;
    independence_with(sys, &m, x, y)
}

fn independence_with(sys: &SetSystem, m: &Matroid, x: Subset, y: Subset) -> Result<IndependenceReport> {
    let independent = independent_flats(m, x, y)?;
    let union_self_sufficient = sys.is_self_sufficient(x | y)?;
    let freely_amalgamated = freely_amalgamated(sys, x, y);
    Ok(IndependenceReport {
        independent,
        union_self_sufficient,
        freely_amalgamated,
        holds: independent == (union_self_sufficient && freely_amalgamated),
    })
}

/// All pairs of flats for which [`independence_check`] fails.
pub fn independence_failures(sys: &SetSystem) -> Result<Vec<(Subset, Subset)>> {
    let m = sys.induced_matroid()?;
    let lattice = m.flats();
    let flats = lattice.flats();
    let mut out = Vec::new();
    for (i, &x) in flats.iter().enumerate() {
        for &y in &flats[i..] {
            if !independence_with(sys, &m, x, y)?.holds {
                out.push((x, y));
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatMeetReport {
    pub triples_checked: usize,
    /// `(A1, A2, C)` with `A1, A2` independent but `A1 ∩ C, A2 ∩ C` not.
    pub failures: Vec<(Subset, Subset, Subset)>,
}

/// Intersecting an independent pair of flats with any flat keeps them independent.
pub fn flat_meet_check(sys: &SetSystem) -> Result<FlatMeetReport> {
    let m = sys.induced_matroid()?;
    let lattice = m.flats();
    let flats = lattice.flats();
    let mut triples = 0;
    let mut failures = Vec::new();
    for (i, &a1) in flats.iter().enumerate() {
        for &a2 in &flats[i..] {
            if !modular(&m, a1, a2) {
                continue;
            }
            for &c in flats {
                triples += 1;
                if !modular(&m, a1 & c, a2 & c) {
                    failures.push((a1, a2, c));
                }
            }
        }
    }
    Ok(FlatMeetReport {
        triples_checked: triples,
        failures,
    })
}

/// The smallest closed `B0 ⊆ B` over which a tuple keeps its dimension over `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalBase {
    pub base_flat: Subset,
    /// Number of closed `B1 ⊆ B` with `d(ā/B1) = d(ā/B)`.
    pub qualifying: usize,
    pub closed_checked: usize,
}

/// `d(ā/B) = d(āB) − d(B)`.
pub fn relative_dimension(m: &Matroid, a: Subset, b: Subset) -> usize {
    m.rank(a | b) - m.rank(b)
}

/// Computes `B0` as the intersection of all closed `B1 ⊆ B` with
/// `d(ā/B1) = d(ā/B)`, then verifies that these are exactly the closed
/// `B1 ⊇ B0` inside `B` and that each satisfies `cl(āB1) ∩ B = B1`.
pub fn weak_canonical_base(m: &Matroid, b: Subset, tuple: Subset) -> Result<CanonicalBase> {
    if !certificate(&AlphaTable::new(m)).verdict {
        return precondition("matroid is not flat");
    }
    require_closed(m, b)?;
    if !tuple.is_subset_of(m.full()) {
        return input("tuple mentions elements outside the ground set");
    }
    let target = relative_dimension(m, tuple, b);
    let lattice = m.flats();
    let closed: Vec<Subset> = lattice.within(b).map(|i| lattice.flats()[i]).collect();
    let good: Vec<bool> = closed
        .iter()
        .map(|&b1| relative_dimension(m, tuple, b1) == target)
        .collect();
    let b0 = closed
        .iter()
        .zip(&good)
        .filter(|(_, &g)| g)
        .fold(b, |acc, (&b1, _)| acc & b1);
    for (&b1, &g) in closed.iter().zip(&good) {
        if g != b0.is_subset_of(b1) {
            return internal(format!(
                "closed set {:?} breaks the canonical base biconditional",
                m.ground().labels(b1)
            ));
        }
        if g && m.closure(tuple | b1) & b != b1 {
            return internal(format!(
                "closure of the tuple over {:?} meets the base in a larger set",
                m.ground().labels(b1)
            ));
        }
    }
    Ok(CanonicalBase {
        base_flat: b0,
        qualifying: good.iter().filter(|&&g| g).count(),
        closed_checked: closed.len(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureEmbeddingReport {
    pub pairs_checked: usize,
    /// Flats `(F1, F2)` of the restriction with `cl(F1) ∩ cl(F2) ≠ cl(F1 ∩ F2)`.
    pub intersection_failures: Vec<(Subset, Subset)>,
    pub families_checked: usize,
    /// Families of flats of the restriction whose Δ changes under closure.
    pub delta_failures: Vec<Vec<Subset>>,
}

impl ClosureEmbeddingReport {
    pub fn holds(&self) -> bool {
        self.intersection_failures.is_empty() && self.delta_failures.is_empty()
    }
}

/// Δ of a family of flats by direct inclusion–exclusion over index sets.
pub fn delta_direct(m: &Matroid, family: &[Subset]) -> i64 {
    let r = family.len();
    let union = family.iter().fold(Subset::EMPTY, |u, &f| u | f);
    let mut total = m.rank(union) as i64;
    for s in 1u32..1 << r {
        let meet = (0..r)
            .filter(|i| s >> i & 1 == 1)
            .fold(m.full(), |acc, i| acc & family[i]);
        let sign = if s.count_ones() % 2 == 1 { -1 } else { 1 };
        total += sign * m.rank(meet) as i64;
    }
    total
}

/// For `C ≤ A` and flats `F1`, `F2` of the restriction to `C`: closures in
/// the whole pregeometry intersect in the closure of `F1 ∩ F2`. Also
/// compares Δ of every family of at most three such flats with Δ of their
/// closures.
pub fn closure_embedding_check(sys: &SetSystem, c: Subset) -> Result<ClosureEmbeddingReport> {
    if !sys.is_self_sufficient(c)? {
        return precondition("subset is not self-sufficient");
    }
    let m = sys.induced_matroid()?;
    let mc = m.restrict(c)?;
    let lattice_c = mc.flats();
    let flats: Vec<Subset> = lattice_c.flats().to_vec();
    let tilde: Vec<Subset> = flats.iter().map(|f| m.closure(f.expand(c))).collect();

    let mut pairs = 0;
    let mut intersection_failures = Vec::new();
    for i in 0..flats.len() {
        for j in i..flats.len() {
            pairs += 1;
            let meet = (flats[i] & flats[j]).expand(c);
            if tilde[i] & tilde[j] != m.closure(meet) {
                intersection_failures.push((flats[i].expand(c), flats[j].expand(c)));
            }
        }
    }

    let k = flats.len();
    let mut families = 0;
    let mut delta_failures = Vec::new();
    let mut check = |idx: &[usize]| {
        families += 1;
        let fam_c: Vec<Subset> = idx.iter().map(|&i| flats[i]).collect();
        let fam_a: Vec<Subset> = idx.iter().map(|&i| tilde[i]).collect();
        if delta_direct(&mc, &fam_c) != delta_direct(&m, &fam_a) {
            delta_failures.push(fam_c.iter().map(|f| f.expand(c)).collect());
        }
    };
    for i in 0..k {
        check(&[i]);
        for j in i + 1..k {
            check(&[i, j]);
            for l in j + 1..k {
                check(&[i, j, l]);
            }
        }
    }
    Ok(ClosureEmbeddingReport {
        pairs_checked: pairs,
        intersection_failures,
        families_checked: families,
        delta_failures,
    })
}
