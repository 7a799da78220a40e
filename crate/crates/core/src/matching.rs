//! Augmenting-path maximum bipartite matching.
//!
//! Left vertices are given by their neighbourhoods as [`Subset`]s of at most
//! 32 right vertices. Left vertices are processed in order and right
//! neighbours are tried in ascending index order, so the matching returned for
//! a given input is always the same.

use crate::subset::Subset;

/// Result of a maximum matching run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    /// `left[i]` is the right vertex matched to left vertex `i`.
    pub left: Vec<Option<usize>>,
    pub size: usize,
}

impl Matching {
    pub fn is_left_saturating(&self) -> bool {
        self.size == self.left.len()
    }

    /// The set of matched right vertices.
    pub fn right_image(&self) -> Subset {
        Subset::from_indices(self.left.iter().flatten().copied())
    }
}

struct Kuhn<'a> {
    adj: &'a [Subset],
    right_owner: [Option<usize>; 32],
    seen: u32,
}

impl Kuhn<'_> {
    fn augment(&mut self, u: usize) -> bool {
        for v in self.adj[u].iter() {
            if self.seen >> v & 1 == 1 {
                continue;
            }
            self.seen |= 1 << v;
            let free = match self.right_owner[v] {
                None => true,
                Some(w) => self.augment(w),
            };
            if free {
                self.right_owner[v] = Some(u);
                return true;
            }
        }
        false
    }
}

/// Maximum matching of left vertices into right vertices.
pub fn max_matching(adj: &[Subset]) -> Matching {
    let mut k = Kuhn {
        adj,
        right_owner: [None; 32],
        seen: 0,
    };
    let mut size = 0;
    for u in 0..adj.len() {
        k.seen = 0;
        if k.augment(u) {
            size += 1;
        }
    }
    let mut left = vec![None; adj.len()];
    for (v, owner) in k.right_owner.iter().enumerate() {
        if let Some(u) = owner {
            left[*u] = Some(v);
        }
    }
    Matching { left, size }
}

/// A matching covering every left vertex, or `None` if Hall's condition fails.
///
/// Stops at the first left vertex that cannot be augmented.
pub fn saturating_matching(adj: &[Subset]) -> Option<Vec<usize>> {
    if adj.len() > 32 {
        return None;
    }
    let mut k = Kuhn {
        adj,
        right_owner: [None; 32],
        seen: 0,
    };
    for u in 0..adj.len() {
        k.seen = 0;
        if !k.augment(u) {
            return None;
        }
    }
    let mut left = vec![0; adj.len()];
    for (v, owner) in k.right_owner.iter().enumerate() {
        if let Some(u) = owner {
            left[*u] = v;
        }
    }
    Some(left)
}

/// Size of a maximum matching, restricted to right vertices in `allowed`.
pub fn matching_number(adj: &[Subset], allowed: Subset) -> usize {
    let restricted: Vec<Subset> = adj.iter().map(|&a| a & allowed).collect();
    max_matching(&restricted).size
}
