//! From a flat matroid back to a set system that induces it.
//!
//! An α-transversal picks pairwise disjoint `X_F ⊆ F` with `|X_F| = α(F)` for
//! every flat `F`. From it, with `S(F) = F ∖ ⋃_{G ⊆ F} X_G`, the relations
//! `R_a = {a} ∪ S(F)` for `a ∈ X_F` form a presentation. The relative
//! variant additionally keeps a chosen subset `C` self-sufficient.

use crate::alpha::{arity_from_table, certificate, AlphaTable};
use crate::error::{internal, precondition, Result};
use crate::matching::saturating_matching;
use crate::matroid::{FlatLattice, Matroid};
use crate::setsystem::SetSystem;
use crate::subset::Subset;

/// Pairwise disjoint parts `X_F ⊆ F`, one per flat, indexed like the lattice.
#[derive(Clone, Debug)]
pub struct GammaTransversal {
    pub lattice: FlatLattice,
    pub parts: Vec<Subset>,
}

impl GammaTransversal {
    pub fn part(&self, flat: Subset) -> Option<Subset> {
        self.lattice.index_of(flat).map(|i| self.parts[i])
    }

    /// `S(F) = F ∖ ⋃_{G ⊆ F} X_G`.
    pub fn basis_part(&self, i: usize) -> Subset {
        let f = self.lattice.flats()[i];
        let used = self
            .lattice
            .within(f)
            .fold(Subset::EMPTY, |u, j| u | self.parts[j]);
        f - used
    }

    /// Elements not used by any part.
    pub fn unused(&self, full: Subset) -> Subset {
        self.parts.iter().fold(full, |rest, &p| rest - p)
    }
}

/// A set system certified to induce `target`.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub system: SetSystem,
    pub target: Matroid,
    /// A subset kept self-sufficient by the construction.
    pub anchored: Option<Subset>,
    /// The α-transversal the relations were built from.
    pub transversal: GammaTransversal,
}

/// Matches `demand[i]` replicas of each flat into `allowed ∩ F_i`. Flats are
/// taken in lattice order and elements in ascending order.
fn fill_demands(lattice: &FlatLattice, demand: &[i32], allowed: Subset) -> Option<Vec<Subset>> {
    let mut owner = Vec::new();
    let mut adj = Vec::new();
    for (i, &f) in lattice.flats().iter().enumerate() {
        for _ in 0..demand[i] {
            owner.push(i);
            adj.push(f & allowed);
        }
    }
    let matched = saturating_matching(&adj)?;
    let mut parts = vec![Subset::EMPTY; lattice.len()];
    for (slot, x) in matched.into_iter().enumerate() {
        parts[owner[slot]] = parts[owner[slot]].with(x);
    }
    Some(parts)
}

/// An α-transversal of the flats, found by bipartite matching; `None` if α
/// is negative on some flat or no matching saturates the demands.
pub fn alpha_transversal(m: &Matroid) -> Option<GammaTransversal> {
    alpha_transversal_from(&AlphaTable::new(m), m.full())
}

fn alpha_transversal_from(table: &AlphaTable, full: Subset) -> Option<GammaTransversal> {
    let demand = table.flat_alphas();
    if demand.iter().any(|&a| a < 0) {
        return None;
    }
    let parts = fill_demands(table.lattice(), demand, full)?;
    Some(GammaTransversal {
        lattice: table.lattice().clone(),
        parts,
    })
}

/// Relations `{a} ∪ S(F)` for every flat `F` and `a ∈ X_F`.
pub fn relations_from(t: &GammaTransversal) -> Vec<Subset> {
    let mut rels = Vec::new();
    for i in 0..t.lattice.len() {
        let s = t.basis_part(i);
        for a in t.parts[i].iter() {
            rels.push(s.with(a));
        }
    }
    rels
}

fn build(m: &Matroid, t: GammaTransversal, anchored: Option<Subset>) -> Result<Presentation> {
    let system = SetSystem::from_parts(m.ground().clone(), relations_from(&t))
        .or_else(|e| internal(format!("constructed relations are invalid: {e}")))?;
    if !system.is_in_class_c() {
        return internal("constructed system has negative predimension somewhere");
    }
    if system.induced_matroid()? != *m {
        return internal("constructed system does not induce the target matroid");
    }
    Ok(Presentation {
        system,
        target: m.clone(),
        anchored,
        transversal: t,
    })
}

/// A presentation of `m`, or `None` when `m` admits no α-transversal.
pub fn synthesize_presentation(m: &Matroid) -> Result<Option<Presentation>> {
    match alpha_transversal(m) {
        None => Ok(None),
        Some(t) => build(m, t, None).map(Some),
    }
}

/// Per-claim violations found by [`claim_checks`]; all lists empty on success.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClaimReport {
    /// Flats `F` for which `S(F)` is not a basis of `F`.
    pub basis_part_not_basis: Vec<Subset>,
    /// Flats with `δ(F) ≠ d(F)`.
    pub flat_predimension: Vec<Subset>,
    /// Pairs `(G, C)` with `S(G) ⊆ C ≤ G` but `δ(C) ≠ δ(G)`.
    pub self_sufficient_core: Vec<(Subset, Subset)>,
    /// Subsets with `δ(X) < d(X)`.
    pub predimension_below_rank: Vec<Subset>,
}

impl ClaimReport {
    pub fn all_pass(&self) -> bool {
        self.basis_part_not_basis.is_empty()
            && self.flat_predimension.is_empty()
            && self.self_sufficient_core.is_empty()
            && self.predimension_below_rank.is_empty()
    }
}

/// Re-checks, exhaustively, the four facts the construction relies on.
pub fn claim_checks(m: &Matroid, p: &Presentation) -> ClaimReport {
    let sys = &p.system;
    let t = &p.transversal;
    let delta = sys.predimension_table();
    let mut rep = ClaimReport::default();
    for (i, &f) in t.lattice.flats().iter().enumerate() {
        let s = t.basis_part(i);
        if !(s.is_subset_of(f) && m.is_independent(s) && s.len() == m.rank(f)) {
            rep.basis_part_not_basis.push(f);
        }
        if delta[f.index()] != m.rank(f) as i32 {
            rep.flat_predimension.push(f);
        }
        for c in s.supersets_within(f) {
            let ss = c
                .supersets_within(f)
                .all(|y| delta[y.index()] >= delta[c.index()]);
            if ss && delta[c.index()] != delta[f.index()] {
                rep.self_sufficient_core.push((f, c));
            }
        }
    }
    for x in m.full().subsets() {
        if delta[x.index()] < m.rank(x) as i32 {
            rep.predimension_below_rank.push(x);
        }
    }
    rep
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaReport {
    /// Flats where the transversal count β differs from α: `(flat, β, α)`.
    pub mismatches: Vec<(Subset, i32, i32)>,
    /// Self-sufficient flats for which the transversal basis formula fails.
    pub basis_failures: Vec<Subset>,
    pub self_sufficient_flats: usize,
}

impl BetaReport {
    pub fn holds(&self) -> bool {
        self.mismatches.is_empty() && self.basis_failures.is_empty()
    }
}

/// For a transversal `t` with image `A ∖ Y`, counts
/// `β(F) = |{x ∈ F ∖ Y : cl(t⁻¹(x)) = F}|` and compares it with α(F). Also
/// checks that `{f ∈ F ∖ Y : t⁻¹(f) ⊄ F} ∪ (F ∩ Y)` is a basis of every
/// self-sufficient flat `F`.
pub fn beta_correspondence_check(sys: &SetSystem) -> Result<BetaReport> {
    let m = sys.induced_matroid()?;
    let table = AlphaTable::new(&m);
    let t = sys
        .find_transversal()
        .expect("class membership implies a transversal");
    let image = t.image();
    let y = sys.full() - image;
    let rels = sys.relations();
    let lattice = table.lattice();

    let mut mismatches = Vec::new();
    let mut basis_failures = Vec::new();
    let mut ss_flats = 0;
    for (i, &f) in lattice.flats().iter().enumerate() {
        let beta = (f & image)
            .iter()
            .filter(|&x| {
                let r = rels[t.preimage(x).expect("x is in the image")];
                m.closure(r) == f
            })
            .count() as i32;
        let a = table.flat_alpha(i);
        if beta != a {
            mismatches.push((f, beta, a));
        }
        if sys.is_self_sufficient(f)? {
            ss_flats += 1;
            let z = (f & image)
                .iter()
                .filter(|&x| !rels[t.preimage(x).expect("x is in the image")].is_subset_of(f))
                .fold(f & y, |z, x| z.with(x));
            if !(m.is_independent(z) && z.len() == m.rank(f)) {
                basis_failures.push(f);
            }
        }
    }
    Ok(BetaReport {
        mismatches,
        basis_failures,
        self_sufficient_flats: ss_flats,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelativeConditionReport {
    /// α of the restriction to `C` is nonnegative on all its unions of flats.
    pub restriction_nonnegative: bool,
    /// Unions `X` violating the inequality: `(X, α_A(X), right-hand side)`.
    pub violations: Vec<(Subset, i32, i32)>,
    /// Unions violating the uncorrected form, where `α_C(X ∩ C)` is always
    /// charged. Informational: that form rejects anchors that do admit a
    /// presentation (a parallel pair plus a coloop, anchored at the pair).
    pub uncorrected_violations: Vec<(Subset, i32, i32)>,
}

impl RelativeConditionReport {
    pub fn holds(&self) -> bool {
        self.restriction_nonnegative && self.violations.is_empty()
    }
}

/// Decides whether `C ⊆ A` can be self-sufficient in some presentation of
/// `m` that restricts to a presentation of `m|C`.
///
/// Requires α of the restriction to be nonnegative and, for every union of
/// flats `X` of `m` with `W = X ∩ C`,
/// `α_A(X) ≥ [W not C-closed]·α_C(W) + Σ {α_C(J) : J a C-flat, J ⊆ W, cl_A(J) not a proper subset of X}`.
/// Each C-flat `J` counts the points of `X_J ∩ C` that cannot be charged to a
/// flat strictly inside `X`; when `W` is itself closed this is the `J = W`
/// summand, which vanishes once `cl_A(W) ⊊ X`.
pub fn relative_condition_check(m: &Matroid, c: Subset) -> Result<RelativeConditionReport> {
    let table = AlphaTable::new(m);
    if !certificate(&table).verdict {
        return precondition("matroid is not flat");
    }
    let mc = m.restrict(c)?;
    let table_c = AlphaTable::new(&mc);
    let c_flats: Vec<(Subset, i32)> = table_c
        .lattice()
        .flats()
        .iter()
        .enumerate()
        .map(|(i, &j)| (j.expand(c), table_c.flat_alpha(i)))
        .collect();

    let mut violations = Vec::new();
    let mut uncorrected_violations = Vec::new();
    for (x, ax) in table.unions() {
        let xc = x & c;
        let a_xc = table_c
            .get(xc.compress(c))
            .expect("traces of unions of flats are unions of flats of the restriction");
        let closed = mc.is_closed(xc.compress(c));
        let escaping = |j: Subset| !m.closure(j).is_proper_subset_of(x);
        let below: i32 = c_flats
            .iter()
            .filter(|&&(j, _)| j.is_proper_subset_of(xc) && escaping(j))
            .map(|&(_, a)| a)
            .sum();
        let own = if !closed || escaping(xc) { a_xc } else { 0 };
        let rhs = own + below;
        if ax < rhs {
            violations.push((x, ax, rhs));
        }
        if ax < a_xc + below {
            uncorrected_violations.push((x, ax, a_xc + below));
        }
    }
    Ok(RelativeConditionReport {
        restriction_nonnegative: certificate(&table_c).verdict,
        violations,
        uncorrected_violations,
    })
}

/// A presentation of `m` in which `C` is self-sufficient and `(C; R|C)`
/// presents the restriction of `m` to `C`; `None` when none exists.
///
/// An α-transversal of the restriction is chosen inside `C`; each flat
/// `F = cl(H)` of `m` coming from a flat `H` of the restriction reuses it as
/// `X_F ∩ C`, and all remaining demand is met from `A ∖ C`.
pub fn synthesize_relative(m: &Matroid, c: Subset) -> Result<Option<Presentation>> {
    let table = AlphaTable::new(m);
    if !certificate(&table).verdict {
        return precondition("matroid is not flat");
    }
    let mc = m.restrict(c)?;
    let Some(tc) = alpha_transversal(&mc) else {
        return Ok(None);
    };
    let lattice = table.lattice();

    let mut fixed = vec![Subset::EMPTY; lattice.len()];
    let mut residual: Vec<i32> = table.flat_alphas().to_vec();
    for (h_idx, &h) in tc.lattice.flats().iter().enumerate() {
        let h_full = h.expand(c);
        let f = m.closure(h_full);
        let i = lattice.index_of(f).expect("closures are flats");
        debug_assert_eq!(f & c, h_full);
        fixed[i] = tc.parts[h_idx].expand(c);
        residual[i] -= fixed[i].len() as i32;
    }
    if residual.iter().any(|&r| r < 0) {
        return Ok(None);
    }
    let Some(outside) = fill_demands(lattice, &residual, m.full() - c) else {
        return Ok(None);
    };
    let parts = fixed.iter().zip(&outside).map(|(&a, &b)| a | b).collect();
    let t = GammaTransversal {
        lattice: lattice.clone(),
        parts,
    };
    let p = build(m, t, Some(c))?;
    if !p.system.is_self_sufficient(c)? {
        return internal("anchor is not self-sufficient in the constructed system");
    }
    if p.system.restrict(c).induced_matroid()? != mc {
        return internal("restricted system does not present the restricted matroid");
    }
    Ok(Some(p))
}

/// A relative presentation whose relations all have size at most `k`.
pub fn relative_arity(m: &Matroid, c: Subset, k: usize) -> Result<Presentation> {
    let table = AlphaTable::new(m);
    if !certificate(&table).verdict {
        return precondition("matroid is not flat");
    }
    let need = arity_from_table(&table);
    if k < need {
        return precondition(format!("arity {k} is below the minimum {need}"));
    }
    let Some(p) = synthesize_relative(m, c)? else {
        return precondition("no presentation keeps the anchor self-sufficient");
    };
    if p.system.relations().iter().any(|r| r.len() > k) {
        return internal("relative presentation exceeds the requested arity");
    }
    Ok(p)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapReport {
    /// Subsets `X` with `δ(X) − d(X) < δ(X ∩ C) − d(X ∩ C)`.
    pub violations: Vec<Subset>,
}

/// Checks `δ(X) − d(X) ≥ δ(X ∩ C) − d(X ∩ C)` for all `X`, given `C ≤ A`.
pub fn self_sufficient_gap_check(sys: &SetSystem, c: Subset) -> Result<GapReport> {
    if !sys.is_self_sufficient(c)? {
        return precondition("subset is not self-sufficient");
    }
    let delta = sys.predimension_table();
    let d = sys.dimension_table()?;
    let gap = |x: Subset| delta[x.index()] - d[x.index()] as i32;
    let violations = sys.full().subsets().filter(|&x| gap(x) < gap(x & c)).collect();
    Ok(GapReport { violations })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircuitArityReport {
    /// `C ≤ A`, `d(C) = |C| − 1` and every `(|C|−1)`-subset independent.
    pub applicable: bool,
    pub alpha_restricted: Option<i32>,
    pub alpha_closure: Option<i32>,
    pub min_arity: Option<usize>,
    /// When applicable: `α_A(cl C) ≥ 1` and no presentation uses relations smaller than `|C|`.
    pub holds: bool,
}

/// A self-sufficient circuit-like `C` of size `n` forces every presentation
/// of the pregeometry to use a relation of size at least `n`.
pub fn circuit_arity_check(sys: &SetSystem, c: Subset) -> Result<CircuitArityReport> {
    let m = sys.induced_matroid()?;
    let n = c.len();
    let applicable = n >= 1
        && sys.is_self_sufficient(c)?
        && m.rank(c) + 1 == n
        && c.subsets()
            .filter(|s| s.len() + 1 == n)
            .all(|s| m.is_independent(s));
    if !applicable {
        return Ok(CircuitArityReport {
            applicable,
            alpha_restricted: None,
            alpha_closure: None,
            min_arity: None,
            holds: true,
        });
    }
    let table = AlphaTable::new(&m);
    let mc = m.restrict(c)?;
    let alpha_c = AlphaTable::new(&mc).alpha(Subset::full(n))?;
    let alpha_cl = table.alpha(m.closure(c))?;
    let arity = arity_from_table(&table);
    Ok(CircuitArityReport {
        applicable,
        alpha_restricted: Some(alpha_c),
        alpha_closure: Some(alpha_cl),
        min_arity: Some(arity),
        holds: alpha_c == 1 && alpha_cl >= 1 && arity >= n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subset::Ground;

    fn labels(sys: &SetSystem) -> Vec<Vec<String>> {
        sys.relations().iter().map(|&r| sys.ground().labels(r)).collect()
    }

    #[test]
    fn u23_transversal_and_presentation() {
        let m = Matroid::uniform(2, ["a", "b", "c"]).unwrap();
        let t = alpha_transversal(&m).unwrap();
        assert_eq!(t.part(m.full()), Some(Subset(0b001)));
        assert_eq!(t.parts.iter().filter(|p| !p.is_empty()).count(), 1);
        let p = synthesize_presentation(&m).unwrap().unwrap();
        assert_eq!(labels(&p.system), vec![vec!["a", "b", "c"]]);
        assert!(claim_checks(&m, &p).all_pass());
    }

    #[test]
    fn free_matroid_presentation_is_empty() {
        let m = Matroid::free(Ground::new(["a", "b", "c"]).unwrap());
        let t = alpha_transversal(&m).unwrap();
        assert!(t.parts.iter().all(|p| p.is_empty()));
        let p = synthesize_presentation(&m).unwrap().unwrap();
        assert!(p.system.relations().is_empty());
        assert!(claim_checks(&m, &p).all_pass());
    }

    #[test]
    fn u24_presentation() {
        let m = Matroid::uniform(2, ["a", "b", "c", "d"]).unwrap();
        let p = synthesize_presentation(&m).unwrap().unwrap();
        assert_eq!(labels(&p.system), vec![vec!["a", "c", "d"], vec!["b", "c", "d"]]);
        assert!(claim_checks(&m, &p).all_pass());
        assert!(beta_correspondence_check(&p.system).unwrap().holds());
    }

    #[test]
    fn beta_examples() {
        let ss1 = SetSystem::new(["a", "b", "c"], [["a", "b", "c"]]).unwrap();
        assert!(beta_correspondence_check(&ss1).unwrap().holds());
        let free = SetSystem::free(Ground::new(["a", "b"]).unwrap());
        assert!(beta_correspondence_check(&free).unwrap().holds());
    }

    #[test]
    fn relative_examples() {
        let u24 = Matroid::uniform(2, ["a", "b", "c", "d"]).unwrap();
        let ab = Subset(0b0011);
        assert!(relative_condition_check(&u24, ab).unwrap().holds());
        let p = synthesize_relative(&u24, ab).unwrap().unwrap();
        assert!(p.system.is_self_sufficient(ab).unwrap());
        assert!(p.system.relations().iter().all(|r| r.len() == 3));

        // empty anchor reduces to the plain construction
        let plain = synthesize_presentation(&u24).unwrap().unwrap();
        let rel = synthesize_relative(&u24, Subset::EMPTY).unwrap().unwrap();
        assert_eq!(plain.system, rel.system);

        let whole = synthesize_relative(&u24, u24.full()).unwrap().unwrap();
        assert!(whole.system.is_self_sufficient(u24.full()).unwrap());

        let u23 = Matroid::uniform(2, ["a", "b", "c"]).unwrap();
        assert!(relative_arity(&u23, Subset(0b001), 3).is_ok());
        assert!(matches!(
            relative_arity(&u23, Subset(0b001), 2),
            Err(crate::Error::Precondition(_))
        ));
        let p = relative_arity(&u24, ab, 3).unwrap();
        assert!(p.system.relations().iter().all(|r| r.len() == 3));
        let free = Matroid::free(Ground::new(["a", "b", "c"]).unwrap());
        assert!(relative_arity(&free, Subset(0b101), 2)
            .unwrap()
            .system
            .relations()
            .is_empty());
    }

    #[test]
    fn closed_trace_strictly_inside_is_not_charged() {
        // a ∥ b with a coloop c; ({a,b,c}; {ab}) keeps {a,b} self-sufficient
        let m = Matroid::from_bases(
            Ground::new(["a", "b", "c"]).unwrap(),
            &[Subset(0b101), Subset(0b110)],
        )
        .unwrap();
        let ab = Subset(0b011);
        let rep = relative_condition_check(&m, ab).unwrap();
        assert!(rep.holds());
        assert_eq!(rep.uncorrected_violations, vec![(m.full(), 0, 1)]);
        let p = synthesize_relative(&m, ab).unwrap().unwrap();
        assert_eq!(labels(&p.system), vec![vec!["a", "b"]]);
    }

    #[test]
    fn gap_and_circuit_arity_examples() {
        let ss1 = SetSystem::new(["a", "b", "c"], [["a", "b", "c"]]).unwrap();
        assert!(self_sufficient_gap_check(&ss1, Subset(0b011))
            .unwrap()
            .violations
            .is_empty());
        assert!(self_sufficient_gap_check(&ss1, ss1.full())
            .unwrap()
            .violations
            .is_empty());

        let u24 = SetSystem::new(["a", "b", "c", "d"], [["a", "c", "d"], ["b", "c", "d"]]).unwrap();
        let c = u24.ground().subset(["a", "c", "d"]).unwrap();
        let rep = circuit_arity_check(&u24, c).unwrap();
        assert!(rep.applicable && rep.holds);
        assert_eq!(rep.min_arity, Some(3));
        assert_eq!(rep.alpha_restricted, Some(1));
    }
}
