//! Explicit hereditary set systems over small ground sets.
//!
//! A [`SetFamily`] stores a family of subsets of a ground set outright, each
//! subset a bit mask. The module checks the two structural properties that
//! matter here — downward closure and the exchange condition — runs the
//! weight-greedy optimizer next to an exact brute-force baseline, and, for
//! families where exchange fails, constructs a weight vector on which greedy
//! is provably suboptimal.
//!
//! Ground sets are capped at [`MAX_GROUND`] elements so that families stay
//! explicitly enumerable; the exhaustive family enumeration is capped harder
//! at [`MAX_ENUMERATION_GROUND`].

use crate::error::{Error, Result};
use crate::mask::{bit, bits, card, format_set, full, strict_submasks, Mask};

/// Largest ground set an explicit family may live on.
pub const MAX_GROUND: usize = 24;

/// Largest ground set for which [`enumerate_hereditary_families`] runs.
pub const MAX_ENUMERATION_GROUND: usize = 4;

/// A finite ground set with unique display labels per element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundSet {
    labels: Vec<String>,
}

impl GroundSet {
    /// Ground set of `n` elements labelled `r1..rn`.
    pub fn of_size(n: usize) -> Result<GroundSet> {
        GroundSet::with_labels((1..=n).map(|i| format!("r{i}")).collect())
    }

    /// Ground set with explicit labels; labels must be unique.
    pub fn with_labels(labels: Vec<String>) -> Result<GroundSet> {
        if labels.len() > MAX_GROUND {
            return Err(Error::Capacity {
                what: "ground set",
                max: MAX_GROUND,
                got: labels.len(),
            });
        }
        for (i, a) in labels.iter().enumerate() {
            if labels[..i].contains(a) {
                return Err(Error::contract(format!("duplicate element label {a:?}")));
            }
        }
        Ok(GroundSet { labels })
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Mask of the whole ground set.
    pub fn full_mask(&self) -> Mask {
        full(self.size())
    }
}

/// Strictly positive integer weights, one per ground element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightFunction {
    weights: Vec<u64>,
}

impl WeightFunction {
    /// Weights must all be at least 1; zero or negative weights are rejected
    /// rather than given ad-hoc semantics.
    pub fn new(weights: Vec<u64>) -> Result<WeightFunction> {
        if let Some(i) = weights.iter().position(|&w| w == 0) {
            return Err(Error::contract(format!(
                "weight of element {i} must be strictly positive"
            )));
        }
        Ok(WeightFunction { weights })
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn get(&self, i: usize) -> u64 {
        self.weights[i]
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.weights
    }

    /// Total weight of a subset: the sum of its element weights.
    pub fn weight_of(&self, subset: Mask) -> u64 {
        bits(subset).map(|i| self.weights[i]).sum()
    }
}

/// Witness that downward closure fails: `member` is in the family but its
/// strict subset `missing` is not.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HeredityViolation {
    pub member: Mask,
    pub missing: Mask,
}

/// Witness that the exchange condition fails: `larger` has one element more
/// than `smaller`, both are members, and no element of `larger \ smaller`
/// extends `smaller` inside the family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExchangeViolation {
    pub smaller: Mask,
    pub larger: Mask,
}

/// Result of a greedy run: the chosen member plus the growing snapshots,
/// starting from the empty set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyRun {
    pub chosen: Mask,
    pub trace: Vec<Mask>,
}

/// An explicit, non-empty family of subsets of a ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamily {
    ground: GroundSet,
    members: Vec<Mask>, // sorted ascending, deduplicated
}

impl SetFamily {
    /// Builds a family from an explicit member list. The list must be
    /// non-empty and every mask must fit the ground set.
    pub fn new(ground: GroundSet, members: impl IntoIterator<Item = Mask>) -> Result<SetFamily> {
        let mut members: Vec<Mask> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        if members.is_empty() {
            return Err(Error::contract("a family must have at least one member"));
        }
        let full = ground.full_mask();
        if let Some(&m) = members.iter().find(|&&m| m & !full != 0) {
            return Err(Error::contract(format!(
                "member {m:#b} uses elements outside the ground set of size {}",
                ground.size()
            )));
        }
        Ok(SetFamily { ground, members })
    }

    /// The downward closure of the given sets: exactly their subsets.
    ///
    /// An empty list of maximal sets yields the family containing only the
    /// empty set.
    pub fn downward_closure(ground: GroundSet, maximal_sets: &[Mask]) -> Result<SetFamily> {
        let full = ground.full_mask();
        if let Some(&m) = maximal_sets.iter().find(|&&m| m & !full != 0) {
            return Err(Error::contract(format!(
                "maximal set {m:#b} uses elements outside the ground set of size {}",
                ground.size()
            )));
        }
        let mut members = vec![0];
        for &m in maximal_sets {
            members.push(m);
            members.extend(strict_submasks(m));
        }
        SetFamily::new(ground, members)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    /// Members in ascending mask order.
    pub fn members(&self) -> &[Mask] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty() // never true: construction rejects empty families
    }

    pub fn contains(&self, subset: Mask) -> bool {
        self.members.binary_search(&subset).is_ok()
    }

    /// Members with no strict superset in the family, ascending.
    pub fn maximal_members(&self) -> Vec<Mask> {
        self.members
            .iter()
            .copied()
            .filter(|&m| {
                !self
                    .members
                    .iter()
                    .any(|&other| other != m && other & m == m)
            })
            .collect()
    }

    /// First witness against downward closure in scan order, or `None` if
    /// every subset of every member is a member.
    pub fn heredity_violation(&self) -> Option<HeredityViolation> {
        for &m in &self.members {
            for sub in strict_submasks(m) {
                if !self.contains(sub) {
                    return Some(HeredityViolation {
                        member: m,
                        missing: sub,
                    });
                }
            }
        }
        None
    }

    pub fn is_hereditary(&self) -> bool {
        self.heredity_violation().is_none()
    }

    /// First witness against the exchange condition, scanning member pairs in
    /// ascending mask order. Requires a hereditary family.
    pub fn exchange_violation(&self) -> Result<Option<ExchangeViolation>> {
        if !self.is_hereditary() {
            return Err(Error::contract(
                "exchange check requires a hereditary family",
            ));
        }
        for &smaller in &self.members {
            let want = card(smaller) + 1;
            'larger: for &larger in &self.members {
                if card(larger) != want {
                    continue;
                }
                for r in bits(larger & !smaller) {
                    if self.contains(smaller | bit(r)) {
                        continue 'larger;
                    }
                }
                return Ok(Some(ExchangeViolation { smaller, larger }));
            }
        }
        Ok(None)
    }

    pub fn has_exchange_property(&self) -> Result<bool> {
        Ok(self.exchange_violation()?.is_none())
    }

    /// Hereditary and exchange both hold.
    pub fn is_matroid(&self) -> bool {
        self.is_hereditary() && self.exchange_violation().is_ok_and(|v| v.is_none())
    }

    /// Locally optimal construction: elements are considered in descending
    /// weight order (ties broken by ascending index) and added whenever the
    /// grown set stays a member. Requires a hereditary family; with strictly
    /// positive weights the result is a maximal member.
    pub fn greedy(&self, weights: &WeightFunction) -> GreedyRun {
        assert_eq!(
            weights.len(),
            self.ground.size(),
            "weight arity must match the ground set"
        );
        let mut order: Vec<usize> = (0..self.ground.size()).collect();
        order.sort_by(|&a, &b| weights.get(b).cmp(&weights.get(a)).then(a.cmp(&b)));
        let mut chosen: Mask = 0;
        let mut trace = vec![0];
        for i in order {
            let grown = chosen | bit(i);
            if self.contains(grown) {
                chosen = grown;
                trace.push(grown);
            }
        }
        GreedyRun { chosen, trace }
    }

    /// Exact maximum-weight member by full enumeration; ties broken by the
    /// smallest mask value.
    pub fn brute_force_max(&self, weights: &WeightFunction) -> (Mask, u64) {
        assert_eq!(
            weights.len(),
            self.ground.size(),
            "weight arity must match the ground set"
        );
        let mut best = self.members[0];
        let mut best_w = weights.weight_of(best);
        for &m in &self.members[1..] {
            let w = weights.weight_of(m);
            if w > best_w {
                best = m;
                best_w = w;
            }
        }
        (best, best_w)
    }

    /// Builds a weight vector on which greedy is strictly suboptimal, from an
    /// exchange violation `(smaller, larger)` with `k = |smaller|`.
    ///
    /// Elements of `smaller` get weight `(k+2)*s`, elements of
    /// `larger \ smaller` get `(k+1)*s`, everything else gets 1, where the
    /// scale `s` is one more than the number of weight-1 elements. Greedy
    /// collects exactly `smaller` among the heavy elements and then at most
    /// every weight-1 element, for at most `k*(k+2)*s + (s-1)`; the member
    /// `larger` alone weighs at least `(k+1)^2*s`, which exceeds that by at
    /// least one. When every ground element lies in `smaller ∪ larger` the
    /// scale is 1 and the weights reduce to the plain `k+2 / k+1 / 1` pattern.
    pub fn separating_weights(&self, violation: &ExchangeViolation) -> Result<WeightFunction> {
        let ExchangeViolation { smaller, larger } = *violation;
        if !self.contains(smaller) || !self.contains(larger) {
            return Err(Error::contract("violation sets must both be members"));
        }
        if card(larger) != card(smaller) + 1 {
            return Err(Error::contract(
                "violation requires |larger| = |smaller| + 1",
            ));
        }
        for r in bits(larger & !smaller) {
            if self.contains(smaller | bit(r)) {
                return Err(Error::contract(format!(
                    "element {} of larger\\smaller extends smaller; not a violation",
                    self.ground.label(r)
                )));
            }
        }
        let k = card(smaller) as u64;
        let light = self.ground.size() - card(smaller | larger);
        let scale = light as u64 + 1;
        let weights = (0..self.ground.size())
            .map(|i| {
                if smaller & bit(i) != 0 {
                    (k + 2) * scale
                } else if larger & bit(i) != 0 {
                    (k + 1) * scale
                } else {
                    1
                }
            })
            .collect();
        WeightFunction::new(weights)
    }

    /// Renders a subset with the ground set's labels.
    pub fn format_subset(&self, subset: Mask) -> String {
        format_set(subset, &self.ground.labels)
    }

    /// Serializes the family as its maximal sets in the text format read by
    /// [`parse_family`].
    pub fn to_text(&self) -> String {
        let mut out = format!("ground {}\n", self.ground.size());
        for m in self.maximal_members() {
            let idxs: Vec<String> = bits(m).map(|i| i.to_string()).collect();
            out.push_str("set");
            if !idxs.is_empty() {
                out.push(' ');
                out.push_str(&idxs.join(" "));
            }
            out.push('\n');
        }
        out
    }
}

/// Parses the family text format and applies the downward closure:
///
/// ```text
/// ground 3
/// set 0 2
/// set 1
/// ```
///
/// Line 1 names the ground size, each `set` line lists one maximal set by
/// 0-based element indices. Blank lines are ignored.
pub fn parse_family(text: &str) -> Result<SetFamily> {
    let mut ground: Option<GroundSet> = None;
    let mut maximal: Vec<Mask> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        match parts.next() {
            Some("ground") => {
                if ground.is_some() {
                    return Err(Error::parse(lineno, "duplicate ground line"));
                }
                let n: usize = parts
                    .next()
                    .ok_or_else(|| Error::parse(lineno, "ground line needs a size"))?
                    .parse()
                    .map_err(|_| Error::parse(lineno, "ground size must be an integer"))?;
                if parts.next().is_some() {
                    return Err(Error::parse(lineno, "trailing tokens after ground size"));
                }
                ground = Some(GroundSet::of_size(n)?);
            }
            Some("set") => {
                let g = ground
                    .as_ref()
                    .ok_or_else(|| Error::parse(lineno, "set line before ground line"))?;
                let mut m: Mask = 0;
                for tok in parts {
                    let i: usize = tok.parse().map_err(|_| {
                        Error::parse(lineno, format!("bad element index {tok:?}"))
                    })?;
                    if i >= g.size() {
                        return Err(Error::parse(
                            lineno,
                            format!("element index {i} outside ground of size {}", g.size()),
                        ));
                    }
                    m |= bit(i);
                }
                maximal.push(m);
            }
            Some(other) => {
                return Err(Error::parse(lineno, format!("unknown directive {other:?}")));
            }
            None => unreachable!(),
        }
    }
    let ground = ground.ok_or_else(|| Error::parse(0, "missing ground line"))?;
    SetFamily::downward_closure(ground, &maximal)
}

/// Enumerates every non-empty downward-closed family over `n <= 4` elements
/// exactly once, in ascending member-list order.
///
/// Families correspond one-to-one to the non-empty antichains of maximal
/// sets; over four elements there are 168 antichains in total (including the
/// empty one, whose closure would be the empty family and is skipped), so
/// this yields 167 families for `n = 4`.
pub fn enumerate_hereditary_families(n: usize) -> Result<Vec<SetFamily>> {
    if n > MAX_ENUMERATION_GROUND {
        return Err(Error::Capacity {
            what: "hereditary family enumeration",
            max: MAX_ENUMERATION_GROUND,
            got: n,
        });
    }
    let subsets: Vec<Mask> = (0..(1u64 << n)).collect();
    let mut antichains: Vec<Vec<Mask>> = Vec::new();
    let mut chosen: Vec<Mask> = Vec::new();
    fn rec(i: usize, subsets: &[Mask], chosen: &mut Vec<Mask>, out: &mut Vec<Vec<Mask>>) {
        if i == subsets.len() {
            if !chosen.is_empty() {
                out.push(chosen.clone());
            }
            return;
        }
        rec(i + 1, subsets, chosen, out);
        let s = subsets[i];
        let comparable = chosen.iter().any(|&c| c & s == c || c & s == s);
        if !comparable {
            chosen.push(s);
            rec(i + 1, subsets, chosen, out);
            chosen.pop();
        }
    }
    rec(0, &subsets, &mut chosen, &mut antichains);

    let mut families: Vec<SetFamily> = antichains
        .into_iter()
        .map(|maximal| {
            SetFamily::downward_closure(GroundSet::of_size(n)?, &maximal)
        })
        .collect::<Result<_>>()?;
    families.sort_by(|a, b| a.members.cmp(&b.members));
    Ok(families)
}
