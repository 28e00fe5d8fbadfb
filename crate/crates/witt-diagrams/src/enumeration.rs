//! The even diagram family three ways: brute-force oracle, recursive
//! generator, and the counting and generating-function utilities both share.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::diagram::{Frame, Partition, PlacedDiagram, StrictPartition};
use crate::error::{Error, Result};

/// Largest n accepted by `oracle_enumerate`: 2^(n-1) candidates are scanned.
pub const MAX_ORACLE_N: u32 = 26;

/// Largest rectangle area accepted by `rect_enumerate`.
pub const MAX_RECT_AREA: u64 = 30;

/// The even diagrams in the staircase with m = n - 1 rows, canonically sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramSet {
    n: u32,
    members: Vec<StrictPartition>,
}

impl DiagramSet {
    /// Validates that every member is even in the staircase frame; members
    /// are deduplicated and canonically sorted.
    pub fn from_members(n: u32, members: Vec<StrictPartition>) -> Result<Self> {
        assert!(n >= 1, "spinor parameter must be at least 1");
        let frame = Frame::staircase(n - 1);
        for p in &members {
            let parts: Vec<i64> = p.parts().iter().map(|&v| i64::from(v)).collect();
            let placed = crate::diagram::make_diagram(frame, &parts)?;
            if !placed.is_even() {
                return Err(Error::NotEven { parts });
            }
        }
        let mut members = members;
        members.sort_unstable_by(|a, b| canonical_order(a.parts(), b.parts()));
        members.dedup();
        Ok(DiagramSet { n, members })
    }

    fn from_sorted_unchecked(n: u32, mut members: Vec<StrictPartition>) -> Self {
        members.sort_unstable_by(|a, b| canonical_order(a.parts(), b.parts()));
        DiagramSet { n, members }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn frame(&self) -> Frame {
        Frame::staircase(self.n - 1)
    }

    pub fn members(&self) -> &[StrictPartition] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, StrictPartition> {
        self.members.iter()
    }

    pub fn contains(&self, p: &StrictPartition) -> bool {
        self.members
            .binary_search_by(|probe| canonical_order(probe.parts(), p.parts()))
            .is_ok()
    }

    /// Members as placed diagrams, in canonical order.
    pub fn placed(&self) -> Vec<PlacedDiagram> {
        self.members
            .iter()
            .map(|p| PlacedDiagram::new_unchecked(self.frame(), p.parts().to_vec()))
            .collect()
    }
}

/// Canonical set order: descending lexicographic with rows past the end of a
/// shorter partition read as zero, so prefixes sort after their extensions.
pub(crate) fn canonical_order(a: &[u32], b: &[u32]) -> Ordering {
    let len = a.len().max(b.len());
    for i in 0..len {
        let av = a.get(i).copied().unwrap_or(0);
        let bv = b.get(i).copied().unwrap_or(0);
        match bv.cmp(&av) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

/// Decodes a bitmask over {1, ..., m} into descending parts: bit b-1 selects
/// part b.
pub(crate) fn mask_to_parts(mask: u64, m: u32) -> Vec<u32> {
    (1..=m)
        .rev()
        .filter(|&b| mask >> (b - 1) & 1 == 1)
        .collect()
}

/// Scans all 2^(n-1) strict partitions with parts below n and keeps the even
/// ones. Every such partition fits the staircase, so this is an exhaustive
/// independent check of the evenness predicate.
pub fn oracle_enumerate(n: u32) -> Result<DiagramSet> {
    assert!(n >= 1, "spinor parameter must be at least 1");
    if n > MAX_ORACLE_N {
        return Err(Error::BoundExceeded {
            what: "oracle_enumerate",
            limit: u64::from(MAX_ORACLE_N),
            got: u64::from(n),
        });
    }
    let m = n - 1;
    let frame = Frame::staircase(m);
    let members: Vec<StrictPartition> = (0..1u64 << m)
        .into_par_iter()
        .filter_map(|mask| {
            let d = PlacedDiagram::new_unchecked(frame, mask_to_parts(mask, m));
            d.is_even()
                .then(|| StrictPartition::from_vec_unchecked(d.parts().to_vec()))
        })
        .collect();
    Ok(DiagramSet::from_sorted_unchecked(n, members))
}

/// Builds the family by the two-class recursion: for odd n >= 3 a member
/// either starts with the two longest possible rows (n-1, n-2) over a member
/// for n-2, or leaves its two rightmost columns empty and is such a member
/// unchanged; for even n it either starts with the full first row n-1 over a
/// member for n-1, or leaves its last column empty.
pub fn recursive_enumerate(n: u32) -> DiagramSet {
    assert!(n >= 1, "spinor parameter must be at least 1");
    fn members(n: u32) -> Vec<Vec<u32>> {
        if n == 1 {
            return vec![Vec::new()];
        }
        let (sub, prefix): (Vec<Vec<u32>>, &[u32]) = if n % 2 == 1 {
            (members(n - 2), &[n - 1, n - 2])
        } else {
            (members(n - 1), &[n - 1])
        };
        let mut out = Vec::with_capacity(sub.len() * 2);
        for p in &sub {
            let mut extended = Vec::with_capacity(prefix.len() + p.len());
            extended.extend_from_slice(prefix);
            extended.extend_from_slice(p);
            out.push(extended);
        }
        out.extend(sub);
        out
    }
    let list = members(n)
        .into_iter()
        .map(StrictPartition::from_vec_unchecked)
        .collect();
    DiagramSet::from_sorted_unchecked(n, list)
}

/// Closed-form cardinality of the family: 2^(n/2) rounded down in the
/// exponent. Cross-checked against the recursive generator at small n.
pub fn count(n: u32) -> u64 {
    assert!(n >= 1, "spinor parameter must be at least 1");
    assert!(n <= 127, "count overflows u64 past n = 127");
    let c = 1u64 << (n / 2);
    if n <= 20 {
        assert_eq!(c, recursive_enumerate(n).len() as u64);
    }
    c
}

/// Generating function of box counts over a diagram family.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PoincarePolynomial {
    coeffs: BTreeMap<u64, u64>,
}

impl PoincarePolynomial {
    pub fn from_weights<I: IntoIterator<Item = u64>>(weights: I) -> Self {
        let mut coeffs = BTreeMap::new();
        for w in weights {
            *coeffs.entry(w).or_insert(0) += 1;
        }
        PoincarePolynomial { coeffs }
    }

    pub fn of(set: &DiagramSet) -> Self {
        Self::from_weights(set.iter().map(StrictPartition::weight))
    }

    pub fn coefficient(&self, degree: u64) -> u64 {
        self.coeffs.get(&degree).copied().unwrap_or(0)
    }

    /// Non-zero coefficients in ascending degree order.
    pub fn coefficients(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.coeffs.iter().map(|(&d, &c)| (d, c))
    }

    pub fn eval_at_one(&self) -> u64 {
        self.coeffs.values().sum()
    }

    pub fn max_degree(&self) -> Option<u64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Whether the coefficient list reads the same from both ends.
    pub fn is_palindromic(&self) -> bool {
        let Some(top) = self.max_degree() else {
            return true;
        };
        (0..=top).all(|d| self.coefficient(d) == self.coefficient(top - d))
    }

    /// The product with 1 + q^k.
    pub fn times_one_plus_q_pow(&self, k: u64) -> Self {
        let mut coeffs = self.coeffs.clone();
        for (&d, &c) in &self.coeffs {
            *coeffs.entry(d + k).or_insert(0) += c;
        }
        PoincarePolynomial { coeffs }
    }
}

impl fmt::Display for PoincarePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.coefficients().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match (d, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "q")?,
                (1, c) => write!(f, "{c}q")?,
                (d, 1) => write!(f, "q^{d}")?,
                (d, c) => write!(f, "{c}q^{d}")?,
            }
        }
        Ok(())
    }
}

/// Box-count generating function of the even family for the given n.
pub fn poincare_polynomial(n: u32) -> PoincarePolynomial {
    PoincarePolynomial::of(&recursive_enumerate(n))
}

/// All partitions in a rows-by-cols box whose inner segment runs are all
/// even, canonically sorted. Brute force over every partition in the box.
pub fn rect_enumerate(rows: u32, cols: u32) -> Result<Vec<Partition>> {
    assert!(rows >= 1 && cols >= 1, "rectangle frame must be non-empty");
    let area = u64::from(rows) * u64::from(cols);
    if area > MAX_RECT_AREA {
        return Err(Error::BoundExceeded {
            what: "rect_enumerate area",
            limit: MAX_RECT_AREA,
            got: area,
        });
    }
    let frame = Frame::rectangle(rows, cols);
    let mut members = Vec::new();
    let mut stack = Vec::new();
    collect_box_partitions(rows, cols, &mut stack, &mut |parts| {
        let d = PlacedDiagram::new_unchecked(frame, parts.to_vec());
        if d.is_even() {
            members.push(Partition::from_vec_unchecked(parts.to_vec()));
        }
    });
    members.sort_unstable_by(|a, b| canonical_order(a.parts(), b.parts()));
    Ok(members)
}

fn collect_box_partitions(
    rows_left: u32,
    max_part: u32,
    cur: &mut Vec<u32>,
    visit: &mut impl FnMut(&[u32]),
) {
    visit(cur);
    if rows_left == 0 {
        return;
    }
    for next in 1..=max_part {
        cur.push(next);
        collect_box_partitions(rows_left - 1, next, cur, visit);
        cur.pop();
    }
}
