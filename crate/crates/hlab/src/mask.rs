//! Subsets of small ground sets encoded as bit masks.
//!
//! Every subset handled by this crate — family members, vertex sets, edge
//! sets, literal sets — is a [`Mask`] over element indices `0..n` with
//! `n <= 64`. Bit `i` set means element `i` is in the subset.

/// A subset of up to 64 ground elements.
pub type Mask = u64;

/// The mask containing exactly element `i`.
#[inline]
pub fn bit(i: usize) -> Mask {
    debug_assert!(i < 64);
    1u64 << i
}

/// The mask `{0, 1, ..., n-1}`.
#[inline]
pub fn full(n: usize) -> Mask {
    debug_assert!(n <= 64);
    if n == 64 {
        Mask::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Number of elements in the subset.
#[inline]
pub fn card(m: Mask) -> usize {
    m.count_ones() as usize
}

/// Iterates the element indices of `m` in ascending order.
pub fn bits(m: Mask) -> impl Iterator<Item = usize> {
    BitIter(m)
}

struct BitIter(Mask);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }
}

/// Iterates every strict submask of `m` (including the empty mask, excluding
/// `m` itself) in descending mask order.
pub fn strict_submasks(m: Mask) -> impl Iterator<Item = Mask> {
    StrictSubmasks {
        parent: m,
        next: if m == 0 { None } else { Some((m - 1) & m) },
    }
}

struct StrictSubmasks {
    parent: Mask,
    next: Option<Mask>,
}

impl Iterator for StrictSubmasks {
    type Item = Mask;

    fn next(&mut self) -> Option<Mask> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            Some((cur - 1) & self.parent)
        };
        Some(cur)
    }
}

/// Renders a subset with the given per-element labels, e.g. `{a, c}`.
pub fn format_set(m: Mask, labels: &[String]) -> String {
    let inner: Vec<&str> = bits(m).map(|i| labels[i].as_str()).collect();
    format!("{{{}}}", inner.join(", "))
}
