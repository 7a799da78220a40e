//! Labelled ground sets and bitmask subsets over them.
//!
//! Elements are kept sorted by label and a subset is a `u32` mask over that
//! order. Every enumeration in the crate walks masks in ascending numeric
//! order, which makes all results deterministic.

use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{input, Result};

/// Ground sets larger than this are rejected outright.
pub const HARD_CAP: usize = 24;
/// Default ground-set limit used by front ends unless overridden.
pub const SOFT_CAP: usize = 16;

/// A ground-set element, identified by a short label.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Element(String);

impl Element {
    pub fn new(label: impl Into<String>) -> Result<Self> {
        let label = label.into();
        if label.is_empty() {
            return input("element labels must be nonempty");
        }
        if label.chars().any(char::is_whitespace) {
            return input(format!("element label {label:?} contains whitespace"));
        }
        Ok(Element(label))
    }

    pub fn label(&self) -> &str {
        &self.0
    }
}

impl TryFrom<String> for Element {
    type Error = crate::Error;
    fn try_from(s: String) -> Result<Self> {
        Element::new(s)
    }
}

impl From<Element> for String {
    fn from(e: Element) -> String {
        e.0
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A subset of a ground set, as a bitmask over the canonical element order.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subset(pub u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn full(n: usize) -> Subset {
        debug_assert!(n <= 32);
        if n >= 32 {
            Subset(u32::MAX)
        } else {
            Subset((1u32 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Subset {
        Subset(1 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Subset {
        it.into_iter().fold(Subset::EMPTY, |s, i| s.with(i))
    }

    #[inline]
    pub fn bits(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn with(self, i: usize) -> Subset {
        Subset(self.0 | 1 << i)
    }

    #[inline]
    pub fn without(self, i: usize) -> Subset {
        Subset(self.0 & !(1 << i))
    }

    #[inline]
    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_proper_subset_of(self, other: Subset) -> bool {
        self.is_subset_of(other) && self != other
    }

    /// Element indices in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i)
            }
        })
    }

    /// Lowest element index, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// All subsets of `self`, in ascending mask order (starting with the empty set).
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let mask = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == mask {
                None
            } else {
                Some(cur.wrapping_sub(mask) & mask)
            };
            Some(Subset(cur))
        })
    }

    /// All supersets of `self` inside `universe`, in ascending mask order.
    pub fn supersets_within(self, universe: Subset) -> impl Iterator<Item = Subset> {
        let base = self;
        (universe - self).subsets().map(move |extra| base | extra)
    }

    /// Re-index `self` onto the positions of `within` (bit extraction):
    /// the k-th element of `within` becomes bit k.
    pub fn compress(self, within: Subset) -> Subset {
        let mut out = 0u32;
        for (k, i) in within.iter().enumerate() {
            if self.contains(i) {
                out |= 1 << k;
            }
        }
        Subset(out)
    }

    /// Inverse of [`Subset::compress`]: bit k lands on the k-th element of `within`.
    pub fn expand(self, within: Subset) -> Subset {
        let mut out = 0u32;
        for (k, i) in within.iter().enumerate() {
            if self.contains(k) {
                out |= 1 << i;
            }
        }
        Subset(out)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl BitOr for Subset {
    type Output = Subset;
    fn bitor(self, rhs: Subset) -> Subset {
        Subset(self.0 | rhs.0)
    }
}

impl BitAnd for Subset {
    type Output = Subset;
    fn bitand(self, rhs: Subset) -> Subset {
        Subset(self.0 & rhs.0)
    }
}

impl Sub for Subset {
    type Output = Subset;
    fn sub(self, rhs: Subset) -> Subset {
        Subset(self.0 & !rhs.0)
    }
}

/// Sorted, duplicate-free list of elements; the index of an element is its bit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Ground {
    elements: Vec<Element>,
}

impl Ground {
    /// Builds a ground set from labels in any order. Duplicates are an error.
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut elements = labels
            .into_iter()
            .map(|l| Element::new(l))
            .collect::<Result<Vec<_>>>()?;
        elements.sort();
        if let Some(w) = elements.windows(2).find(|w| w[0] == w[1]) {
            return input(format!("duplicate element label {:?}", w[0].label()));
        }
        if elements.len() > HARD_CAP {
            return input(format!(
                "ground set has {} elements; the hard limit is {HARD_CAP}",
                elements.len()
            ));
        }
        Ok(Ground { elements })
    }

    pub fn from_elements(elements: Vec<Element>) -> Result<Self> {
        Ground::new(elements.into_iter().map(String::from))
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Element {
        &self.elements[i]
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.len())
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.elements.binary_search_by(|e| e.label().cmp(label)).ok()
    }

    /// Encodes a list of labels. Unknown labels are an input error; repeats are ignored.
    pub fn subset<I, S>(&self, labels: I) -> Result<Subset>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut s = Subset::EMPTY;
        for l in labels {
            let l = l.as_ref();
            match self.index_of(l) {
                Some(i) => s = s.with(i),
                None => return input(format!("unknown element {l:?}")),
            }
        }
        Ok(s)
    }

    pub fn labels(&self, s: Subset) -> Vec<String> {
        s.iter().map(|i| self.elements[i].label().to_string()).collect()
    }

    /// Sub-ground consisting of the elements of `s`, in order.
    pub fn restrict(&self, s: Subset) -> Ground {
        Ground {
            elements: s.iter().map(|i| self.elements[i].clone()).collect(),
        }
    }

    /// Subset of `self` made of the elements of `other` (which must all be present).
    pub fn embed(&self, other: &Ground) -> Result<Subset> {
        self.subset(other.elements.iter().map(Element::label))
    }
}

/// Lexicographic comparison of two subsets viewed as ascending index sequences.
pub fn lex_cmp(a: Subset, b: Subset) -> std::cmp::Ordering {
    a.iter().cmp(b.iter())
}
