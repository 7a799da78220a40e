//! Set systems `(A; R)`, their predimension, transversals, self-sufficiency,
//! and the pregeometry they induce.

use crate::error::{input, precondition, Result};
use crate::matching::{max_matching, saturating_matching};
use crate::matroid::{Backend, Matroid};
use crate::subset::{lex_cmp, Ground, Subset};

/// A finite ground set with a family of distinct nonempty subsets ("relations").
///
/// Relations are stored in canonical order: each relation as an ascending
/// index sequence, the list sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetSystem {
    ground: Ground,
    relations: Vec<Subset>,
}

/// An injective choice of a member from every relation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Transversal {
    /// `assignment[i]` is the element chosen from relation `i`.
    pub assignment: Vec<usize>,
}

impl Transversal {
    pub fn image(&self) -> Subset {
        Subset::from_indices(self.assignment.iter().copied())
    }

    /// The relation index mapped to element `x`, if any.
    pub fn preimage(&self, x: usize) -> Option<usize> {
        self.assignment.iter().position(|&e| e == x)
    }
}

/// Outcome of a membership test for the class of systems with `δ ≥ 0` everywhere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassReport {
    pub member: bool,
    /// First subset (ascending mask order) with negative predimension.
    pub violator: Option<Subset>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PredimReport {
    pub subset: Subset,
    pub delta: i32,
    /// A subset of `subset` with negative predimension, if one exists.
    pub witness_violator: Option<Subset>,
}

impl SetSystem {
    /// Builds a set system from labels. Relations may be listed in any order;
    /// empty or repeated relations and unknown labels are rejected.
    pub fn new<L, S, R, T>(labels: L, relations: R) -> Result<Self>
    where
        L: IntoIterator<Item = S>,
        S: Into<String>,
        R: IntoIterator<Item = T>,
        T: IntoIterator,
        T::Item: AsRef<str>,
    {
        let ground = Ground::new(labels)?;
        let rels = relations
            .into_iter()
            .map(|r| ground.subset(r))
            .collect::<Result<Vec<_>>>()?;
        SetSystem::from_parts(ground, rels)
    }

    pub fn from_parts(ground: Ground, mut relations: Vec<Subset>) -> Result<Self> {
        let full = ground.full();
        for r in &relations {
            if r.is_empty() {
                return input("relations must be nonempty");
            }
            if !r.is_subset_of(full) {
                return input("relation mentions an element outside the ground set");
            }
        }
        relations.sort_by(|a, b| lex_cmp(*a, *b));
        if let Some(w) = relations.windows(2).find(|w| w[0] == w[1]) {
            return input(format!("duplicate relation {:?}", ground.labels(w[0])));
        }
        Ok(SetSystem { ground, relations })
    }

    /// The system with no relations.
    pub fn free(ground: Ground) -> Self {
        SetSystem {
            ground,
            relations: Vec::new(),
        }
    }

    pub fn ground(&self) -> &Ground {
        &self.ground
    }

    pub fn relations(&self) -> &[Subset] {
        &self.relations
    }

    pub fn n(&self) -> usize {
        self.ground.len()
    }

    pub fn full(&self) -> Subset {
        self.ground.full()
    }

    /// Number of relations contained in `x`.
    pub fn relations_in(&self, x: Subset) -> usize {
        self.relations.iter().filter(|r| r.is_subset_of(x)).count()
    }

    /// `δ(X) = |X| − |R[X]|`.
    pub fn predimension(&self, x: Subset) -> i32 {
        x.len() as i32 - self.relations_in(x) as i32
    }

    pub fn predim_report(&self, x: Subset) -> PredimReport {
        PredimReport {
            subset: x,
            delta: self.predimension(x),
            witness_violator: x.subsets().find(|&y| self.predimension(y) < 0),
        }
    }

    /// `δ` for every subset, indexed by mask.
    pub fn predimension_table(&self) -> Vec<i32> {
        let n = self.n();
        let size = 1usize << n;
        let mut inside = vec![0i32; size];
        for r in &self.relations {
            inside[r.index()] += 1;
        }
        // subset-sum transform: inside[X] = |{r : r ⊆ X}|
        for i in 0..n {
            let bit = 1 << i;
            for m in 0..size {
                if m & bit != 0 {
                    inside[m] += inside[m ^ bit];
                }
            }
        }
        (0..size)
            .map(|m| (m as u32).count_ones() as i32 - inside[m])
            .collect()
    }

    /// Membership in the class of systems with nonnegative predimension,
    /// decided by a saturating matching of relations into elements.
    pub fn in_class_c(&self) -> ClassReport {
        if self.has_transversal() {
            ClassReport {
                member: true,
                violator: None,
            }
        } else {
            let violator = self.full().subsets().find(|&x| self.predimension(x) < 0);
            ClassReport {
                member: false,
                violator,
            }
        }
    }

    pub fn is_in_class_c(&self) -> bool {
        self.has_transversal()
    }

    fn has_transversal(&self) -> bool {
        saturating_matching(&self.relations).is_some()
    }

    pub(crate) fn require_class_c(&self) -> Result<()> {
        if self.is_in_class_c() {
            Ok(())
        } else {
            precondition("set system has a subset of negative predimension")
        }
    }

    /// A system of distinct representatives of the relations, if one exists.
    pub fn find_transversal(&self) -> Option<Transversal> {
        saturating_matching(&self.relations).map(|assignment| Transversal { assignment })
    }

    /// Every transversal, in lexicographic order of assignments.
    pub fn transversals(&self) -> Vec<Transversal> {
        fn go(rels: &[Subset], i: usize, used: Subset, cur: &mut Vec<usize>, out: &mut Vec<Transversal>) {
            if i == rels.len() {
                out.push(Transversal {
                    assignment: cur.clone(),
                });
                return;
            }
            for x in (rels[i] - used).iter() {
                cur.push(x);
                go(rels, i + 1, used.with(x), cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(&self.relations, 0, Subset::EMPTY, &mut Vec::new(), &mut out);
        out
    }

    /// `R|B`: the relations contained in `b`, on ground set `b`.
    pub fn restrict(&self, b: Subset) -> SetSystem {
        let ground = self.ground.restrict(b);
        let relations = self
            .relations
            .iter()
            .filter(|r| r.is_subset_of(b))
            .map(|r| r.compress(b))
            .collect();
        SetSystem::from_parts(ground, relations).expect("restriction of a valid system is valid")
    }

    fn check_subset(&self, x: Subset) -> Result<()> {
        if x.is_subset_of(self.full()) {
            Ok(())
        } else {
            input("subset mentions elements outside the ground set")
        }
    }

    /// `X ≤ A`: no superset of `X` has smaller predimension. Exhaustive scan.
    pub fn is_self_sufficient(&self, x: Subset) -> Result<bool> {
        self.check_subset(x)?;
        self.require_class_c()?;
        let dx = self.predimension(x);
        Ok(x.supersets_within(self.full())
            .all(|y| self.predimension(y) >= dx))
    }

    /// Same predicate as [`SetSystem::is_self_sufficient`], decided by
    /// whether the relations not inside `x` have a transversal avoiding `x`.
    pub fn is_self_sufficient_via_transversal(&self, x: Subset) -> Result<bool> {
        self.check_subset(x)?;
        self.require_class_c()?;
        let outside = self.full() - x;
        let adj: Vec<Subset> = self
            .relations
            .iter()
            .filter(|r| !r.is_subset_of(x))
            .map(|&r| r & outside)
            .collect();
        Ok(saturating_matching(&adj).is_some())
    }

    /// The smallest self-sufficient superset of `x`.
    pub fn self_sufficient_closure(&self, x: Subset) -> Result<Subset> {
        self.check_subset(x)?;
        self.require_class_c()?;
        Ok(self.minimizers(x).1)
    }

    /// Minimum of δ over supersets of `x`, and the intersection of all minimizers.
    fn minimizers(&self, x: Subset) -> (i32, Subset) {
        let mut best = i32::MAX;
        let mut meet = self.full();
        for y in x.supersets_within(self.full()) {
            let d = self.predimension(y);
            if d < best {
                best = d;
                meet = y;
            } else if d == best {
                meet = meet & y;
            }
        }
        (best, meet)
    }

    /// `d(X) = min δ(Y)` over `X ⊆ Y ⊆ A`.
    pub fn dimension(&self, x: Subset) -> Result<usize> {
        self.check_subset(x)?;
        self.require_class_c()?;
        let (best, closure) = self.minimizers(x);
        debug_assert_eq!(self.predimension(closure), best);
        Ok(best as usize)
    }

    /// `cl(X) = {y : d(X ∪ {y}) = d(X)}`.
    pub fn closure(&self, x: Subset) -> Result<Subset> {
        self.check_subset(x)?;
        self.require_class_c()?;
        let dx = self.minimizers(x).0;
        Ok(Subset::from_indices(
            (0..self.n()).filter(|&y| self.minimizers(x.with(y)).0 == dx),
        ))
    }

    /// Dimension of every subset, indexed by mask.
    pub fn dimension_table(&self) -> Result<Vec<u8>> {
        self.require_class_c()?;
        let n = self.n();
        let size = 1usize << n;
        let mut d = self.predimension_table();
        // superset-min transform
        for i in 0..n {
            let bit = 1 << i;
            for m in 0..size {
                if m & bit == 0 {
                    d[m] = d[m].min(d[m | bit]);
                }
            }
        }
        Ok(d.into_iter().map(|v| v as u8).collect())
    }

    /// The pregeometry induced by the predimension.
    pub fn induced_matroid(&self) -> Result<Matroid> {
        let table = self.dimension_table()?;
        Matroid::from_rank_table(self.ground.clone(), table, Backend::SetSystem)
    }

    /// Whether the pregeometry of `(B; R|B)` equals the restriction of this
    /// system's pregeometry to `B`. Requires `B ≤ A`.
    pub fn restriction_commutes_check(&self, b: Subset) -> Result<bool> {
        if !self.is_self_sufficient(b)? {
            return precondition("subset is not self-sufficient");
        }
        let local = self.restrict(b).induced_matroid()?;
        let global = self.induced_matroid()?.restrict(b)?;
        local.equals(&global)
    }

    /// Largest number of relations that can be matched into `allowed`.
    pub fn partial_transversal_rank(&self, allowed: Subset) -> usize {
        let adj: Vec<Subset> = self.relations.iter().map(|&r| r & allowed).collect();
        max_matching(&adj).size
    }
}
