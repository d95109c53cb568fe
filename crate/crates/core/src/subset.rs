//! Bit-indexed subsets of a small finite carrier.
//!
//! A [`SubSet`] stores membership for points `0..n` in the low `n` bits of a
//! word. All set algebra is plain bit arithmetic; the carrier size travels
//! with the value so complements and rendering stay well defined.

use std::fmt;

/// Largest carrier the engine accepts.
pub const MAX_POINTS: usize = 16;

/// A subset of the carrier `{0, .., n-1}`.
///
/// Ordering is by numeric value of the encoding, which is the canonical
/// order used for every family and every witness search in the crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubSet {
    bits: u32,
    n: u8,
}

impl SubSet {
    /// The empty set on an `n`-point carrier.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_POINTS, "carrier of {n} points exceeds {MAX_POINTS}");
        SubSet { bits: 0, n: n as u8 }
    }

    /// The whole carrier.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_POINTS, "carrier of {n} points exceeds {MAX_POINTS}");
        SubSet {
            bits: Self::mask(n),
            n: n as u8,
        }
    }

    /// Builds a set from raw bits; `None` when a bit at index `>= n` is set.
    pub fn from_bits(n: usize, bits: u32) -> Option<Self> {
        if n > MAX_POINTS || bits & !Self::mask(n) != 0 {
            return None;
        }
        Some(SubSet { bits, n: n as u8 })
    }

    pub fn singleton(n: usize, x: usize) -> Self {
        assert!(x < n, "point {x} outside carrier of size {n}");
        SubSet {
            bits: 1 << x,
            n: n as u8,
        }
    }

    /// Panics on out-of-range points.
    pub fn from_points<I: IntoIterator<Item = usize>>(n: usize, points: I) -> Self {
        points
            .into_iter()
            .fold(Self::empty(n), |acc, x| acc.with(x))
    }

    fn mask(n: usize) -> u32 {
        if n >= 32 {
            u32::MAX
        } else {
            (1u32 << n) - 1
        }
    }

    #[inline]
    pub fn bits(self) -> u32 {
        self.bits
    }

    /// Carrier size.
    #[inline]
    pub fn carrier(self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn contains(self, x: usize) -> bool {
        x < self.carrier() && self.bits >> x & 1 == 1
    }

    pub fn with(self, x: usize) -> Self {
        assert!(x < self.carrier(), "point {x} outside carrier of size {}", self.n);
        SubSet {
            bits: self.bits | 1 << x,
            n: self.n,
        }
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn is_full(self) -> bool {
        self.bits == Self::mask(self.carrier())
    }

    #[inline]
    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        SubSet {
            bits: self.bits | other.bits,
            n: self.n,
        }
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        SubSet {
            bits: self.bits & other.bits,
            n: self.n,
        }
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        SubSet {
            bits: self.bits & !other.bits,
            n: self.n,
        }
    }

    #[inline]
    pub fn complement(self) -> Self {
        SubSet {
            bits: !self.bits & Self::mask(self.carrier()),
            n: self.n,
        }
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.bits & !other.bits == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: Self) -> bool {
        self.bits & other.bits == 0
    }

    #[inline]
    pub fn meets(self, other: Self) -> bool {
        !self.is_disjoint(other)
    }

    /// Member indices in ascending order.
    pub fn points(self) -> impl Iterator<Item = usize> {
        let mut rest = self.bits;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let x = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(x)
        })
    }

    /// Every subset of the `n`-point carrier, ascending.
    pub fn all(n: usize) -> impl Iterator<Item = SubSet> {
        assert!(n <= MAX_POINTS);
        (0..=Self::mask(n)).map(move |bits| SubSet { bits, n: n as u8 })
    }

    /// Every subset of `self`, ascending (carry-rippler walk).
    pub fn subsets(self) -> impl Iterator<Item = SubSet> {
        let top = self.bits;
        let n = self.n;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == top {
                None
            } else {
                Some(cur.wrapping_sub(top) & top)
            };
            Some(SubSet { bits: cur, n })
        })
    }

    /// Re-expresses `self ∩ carrier` over the compressed carrier of
    /// `carrier`, where the i-th member of `carrier` becomes point i.
    pub fn compress(self, carrier: SubSet) -> SubSet {
        let mut out = SubSet::empty(carrier.len());
        for (i, x) in carrier.points().enumerate() {
            if self.contains(x) {
                out = out.with(i);
            }
        }
        out
    }

    /// Inverse of [`SubSet::compress`]: lifts a subset of the compressed
    /// carrier back into the ambient one.
    pub fn expand(self, carrier: SubSet) -> SubSet {
        debug_assert_eq!(self.carrier(), carrier.len());
        let mut out = SubSet::empty(carrier.carrier());
        for (i, x) in carrier.points().enumerate() {
            if self.contains(i) {
                out = out.with(x);
            }
        }
        out
    }

    /// Renders as `{a b}` using the given point labels.
    pub fn render(self, names: &[String]) -> String {
        let mut s = String::from("{");
        for (i, x) in self.points().enumerate() {
            if i > 0 {
                s.push(' ');
            }
            match names.get(x) {
                Some(name) => s.push_str(name),
                None => s.push_str(&x.to_string()),
            }
        }
        s.push('}');
        s
    }
}

impl fmt::Debug for SubSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.points().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}/{}", self.n)
    }
}

/// An ordered, deduplicated family of subsets over one carrier.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SetFamily {
    sets: Vec<SubSet>,
}

impl SetFamily {
    /// Sorts into canonical order and drops duplicates.
    pub fn new(mut sets: Vec<SubSet>) -> Self {
        sets.sort_unstable();
        sets.dedup();
        SetFamily { sets }
    }

    pub fn as_slice(&self) -> &[SubSet] {
        &self.sets
    }

    pub fn iter(&self) -> std::slice::Iter<'_, SubSet> {
        self.sets.iter()
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, set: SubSet) -> bool {
        self.sets.binary_search(&set).is_ok()
    }

    pub fn position(&self, set: SubSet) -> Option<usize> {
        self.sets.binary_search(&set).ok()
    }

    pub fn into_vec(self) -> Vec<SubSet> {
        self.sets
    }

    /// Renders as `{{} {a} {a b}}`.
    pub fn render(&self, names: &[String]) -> String {
        let inner: Vec<String> = self.sets.iter().map(|s| s.render(names)).collect();
        format!("{{{}}}", inner.join(" "))
    }
}

impl FromIterator<SubSet> for SetFamily {
    fn from_iter<I: IntoIterator<Item = SubSet>>(iter: I) -> Self {
        SetFamily::new(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a SetFamily {
    type Item = &'a SubSet;
    type IntoIter = std::slice::Iter<'a, SubSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.sets.iter()
    }
}

/// Default point labels: `a`, `b`, `c`, ...
pub fn default_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| ((b'a' + i as u8) as char).to_string())
        .collect()
}
