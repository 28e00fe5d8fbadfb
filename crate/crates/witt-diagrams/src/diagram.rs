//! Partitions placed in a staircase or rectangular frame, the decomposition of
//! their boundary into inner segment runs, and the evenness predicate those
//! runs decide.
//!
//! Drawing coordinates: box (i, c) is the unit square [c, c+1] x [-i, -(i-1)],
//! so row 1 hangs just below the x-axis and rows grow downward.

use std::fmt;

use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Strictly decreasing sequence of positive integers; may be empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrictPartition {
    parts: Vec<u32>,
}

impl StrictPartition {
    /// Validates positivity and strictness; trailing zeros are dropped.
    pub fn new(parts: &[i64]) -> Result<Self> {
        let trimmed = trim_trailing_zeros(parts);
        if trimmed.iter().any(|&p| p <= 0) {
            return Err(Error::NonPositivePart {
                parts: parts.to_vec(),
            });
        }
        if !trimmed.windows(2).all(|w| w[0] > w[1]) {
            return Err(Error::NotStrict {
                parts: parts.to_vec(),
            });
        }
        Ok(Self {
            parts: trimmed.iter().map(|&p| p as u32).collect(),
        })
    }

    pub(crate) fn from_vec_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        debug_assert!(parts.windows(2).all(|w| w[0] > w[1]));
        Self { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes.
    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.parts)
    }
}

impl Serialize for StrictPartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for StrictPartition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<i64>::deserialize(deserializer)?;
        StrictPartition::new(&parts).map_err(D::Error::custom)
    }
}

/// Weakly decreasing sequence of positive integers; may be empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Validates positivity and weak monotonicity; trailing zeros are dropped.
    pub fn new(parts: &[i64]) -> Result<Self> {
        let trimmed = trim_trailing_zeros(parts);
        if trimmed.iter().any(|&p| p <= 0) {
            return Err(Error::NonPositivePart {
                parts: parts.to_vec(),
            });
        }
        if !trimmed.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::NotWeaklyDecreasing {
                parts: parts.to_vec(),
            });
        }
        Ok(Self {
            parts: trimmed.iter().map(|&p| p as u32).collect(),
        })
    }

    pub(crate) fn from_vec_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Self { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Transposed partition: column lengths of the diagram.
    pub fn conjugate(&self) -> Partition {
        let mut conj = Vec::new();
        if let Some(&first) = self.parts.first() {
            for k in 1..=first {
                let col = self.parts.iter().take_while(|&&p| p >= k).count() as u32;
                conj.push(col);
            }
        }
        Partition { parts: conj }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<i64>::deserialize(deserializer)?;
        Partition::new(&parts).map_err(D::Error::custom)
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, parts: &[u32]) -> fmt::Result {
    write!(f, "(")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, ")")
}

fn trim_trailing_zeros(parts: &[i64]) -> &[i64] {
    let mut end = parts.len();
    while end > 0 && parts[end - 1] == 0 {
        end -= 1;
    }
    &parts[..end]
}

/// Outer frame holding a placed diagram.
///
/// Staircase row i (1-based, i <= m) occupies columns i..=m, so the rows are
/// right-justified against a common right wall. Rectangle row i <= rows
/// occupies columns 1..=cols.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Frame {
    Staircase { m: u32 },
    Rectangle { rows: u32, cols: u32 },
}

impl Frame {
    /// Staircase with row lengths m, m-1, ..., 1; m = 0 is the empty frame.
    pub fn staircase(m: u32) -> Frame {
        Frame::Staircase { m }
    }

    pub fn rectangle(rows: u32, cols: u32) -> Frame {
        assert!(rows >= 1 && cols >= 1, "rectangle frame must be non-empty");
        Frame::Rectangle { rows, cols }
    }

    /// Number of rows.
    pub fn depth(&self) -> u32 {
        match *self {
            Frame::Staircase { m } => m,
            Frame::Rectangle { rows, .. } => rows,
        }
    }

    /// Columns occupied by frame row i, or None past the last row.
    pub fn row_cols(&self, i: u32) -> Option<(u32, u32)> {
        match *self {
            Frame::Staircase { m } => (1..=m).contains(&i).then_some((i, m)),
            Frame::Rectangle { rows, cols } => (1..=rows).contains(&i).then_some((1, cols)),
        }
    }

    pub fn contains_box(&self, row: u32, col: u32) -> bool {
        self.row_cols(row)
            .is_some_and(|(lo, hi)| (lo..=hi).contains(&col))
    }

    pub fn box_count(&self) -> u64 {
        match *self {
            Frame::Staircase { m } => u64::from(m) * (u64::from(m) + 1) / 2,
            Frame::Rectangle { rows, cols } => u64::from(rows) * u64::from(cols),
        }
    }

    /// All frame boxes in row-major order.
    pub fn boxes(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for i in 1..=self.depth() {
            let (lo, hi) = self.row_cols(i).expect("row inside frame");
            for c in lo..=hi {
                out.push((i, c));
            }
        }
        out
    }
}

/// A validated partition placed in its frame.
///
/// Staircase row i holds the leftmost `parts[i-1]` boxes of frame row i, so it
/// occupies columns i..i+parts[i-1]. Rectangle row i occupies columns
/// 1..=parts[i-1].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlacedDiagram {
    frame: Frame,
    parts: Vec<u32>,
}

/// Validates `parts` against `frame`; trailing zeros are dropped.
pub fn make_diagram(frame: Frame, parts: &[i64]) -> Result<PlacedDiagram> {
    let trimmed = trim_trailing_zeros(parts);
    if trimmed.iter().any(|&p| p <= 0) {
        return Err(Error::NonPositivePart {
            parts: parts.to_vec(),
        });
    }
    match frame {
        Frame::Staircase { m } => {
            if !trimmed.windows(2).all(|w| w[0] > w[1]) {
                return Err(Error::NotStrict {
                    parts: parts.to_vec(),
                });
            }
            // Strictness plus the first-part bound force every row to fit:
            // parts[i-1] <= m - i + 1.
            if trimmed.first().is_some_and(|&p| p > i64::from(m)) {
                return Err(Error::ExceedsFrame {
                    frame,
                    parts: parts.to_vec(),
                });
            }
        }
        Frame::Rectangle { rows, cols } => {
            if !trimmed.windows(2).all(|w| w[0] >= w[1]) {
                return Err(Error::NotWeaklyDecreasing {
                    parts: parts.to_vec(),
                });
            }
            if trimmed.len() > rows as usize
                || trimmed.first().is_some_and(|&p| p > i64::from(cols))
            {
                return Err(Error::ExceedsFrame {
                    frame,
                    parts: parts.to_vec(),
                });
            }
        }
    }
    Ok(PlacedDiagram {
        frame,
        parts: trimmed.iter().map(|&p| p as u32).collect(),
    })
}

impl PlacedDiagram {
    pub(crate) fn new_unchecked(frame: Frame, parts: Vec<u32>) -> Self {
        debug_assert!(make_diagram(
            frame,
            &parts.iter().map(|&p| i64::from(p)).collect::<Vec<_>>()
        )
        .is_ok());
        PlacedDiagram { frame, parts }
    }

    pub fn frame(&self) -> Frame {
        self.frame
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of boxes; equals the cardinality of `boxes()`.
    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Columns occupied by diagram row i, or None when the row is empty.
    fn row_cols(&self, i: u32) -> Option<(u32, u32)> {
        let lam = *self.parts.get(i as usize - 1)?;
        let (lo, _) = self.frame.row_cols(i).expect("diagram row inside frame");
        Some((lo, lo + lam - 1))
    }

    pub fn contains_box(&self, row: u32, col: u32) -> bool {
        row >= 1
            && self
                .row_cols(row)
                .is_some_and(|(lo, hi)| (lo..=hi).contains(&col))
    }

    /// All diagram boxes in row-major order.
    pub fn boxes(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for i in 1..=self.parts.len() as u32 {
            let (lo, hi) = self.row_cols(i).expect("non-empty row");
            for c in lo..=hi {
                out.push((i, c));
            }
        }
        out
    }

    /// Maximal straight runs of the diagram boundary that do not lie on the
    /// frame boundary, in deterministic order (start point, then orientation).
    ///
    /// A unit segment belongs to the diagram boundary when it bounds exactly
    /// one diagram box, and to the frame boundary when it bounds exactly one
    /// frame box. Left walls and top edges never survive the subtraction:
    /// every diagram row starts on the frame's left wall, row 1 tops lie on
    /// the frame's top edge, and each deeper row sits under the previous one.
    /// That leaves right walls off the frame's right wall and bottom edges
    /// with a frame box directly underneath.
    pub fn inner_segment_runs(&self) -> Vec<SegmentRun> {
        // (y, x) for the horizontal segment [x, x+1] at height y; (x, y) for
        // the vertical segment [y, y+1] on the line x.
        let mut horiz: Vec<(i64, i64)> = Vec::new();
        let mut vert: Vec<(i64, i64)> = Vec::new();
        for i in 1..=self.parts.len() as u32 {
            let (lo, hi) = self.row_cols(i).expect("non-empty row");
            let y = -i64::from(i);
            if self.frame.contains_box(i, hi + 1) {
                vert.push((i64::from(hi) + 1, y));
            }
            let next = self.row_cols(i + 1);
            for c in lo..=hi {
                if next.is_some_and(|(nlo, nhi)| (nlo..=nhi).contains(&c)) {
                    continue;
                }
                if !self.frame.contains_box(i + 1, c) {
                    continue;
                }
                horiz.push((y, i64::from(c)));
            }
        }
        // Rows were visited top to bottom, so horizontal entries are already
        // grouped by line with ascending x. Vertical entries need the sort.
        vert.sort_unstable();
        let mut runs = Vec::new();
        collect_runs(&horiz, &mut runs, |&(y, x), len| SegmentRun {
            orientation: Orientation::Horizontal,
            start: (x, y),
            length: len,
        });
        collect_runs(&vert, &mut runs, |&(x, y), len| SegmentRun {
            orientation: Orientation::Vertical,
            start: (x, y),
            length: len,
        });
        runs.sort_unstable_by_key(|r| (r.start, r.orientation));
        runs
    }

    /// True when every inner segment run has even length.
    pub fn is_even(&self) -> bool {
        self.inner_segment_runs().iter().all(|r| r.length % 2 == 0)
    }
}

impl fmt::Display for PlacedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.parts)
    }
}

/// Groups consecutive unit segments on a common line into maximal runs.
/// Entries must be grouped by line, with the in-line coordinate ascending.
fn collect_runs<F>(units: &[(i64, i64)], runs: &mut Vec<SegmentRun>, mk: F)
where
    F: Fn(&(i64, i64), u32) -> SegmentRun,
{
    let mut i = 0;
    while i < units.len() {
        let (line, coord) = units[i];
        let mut len = 1usize;
        while i + len < units.len() && units[i + len] == (line, coord + len as i64) {
            len += 1;
        }
        runs.push(mk(&units[i], len as u32));
        i += len;
    }
}

impl Serialize for PlacedDiagram {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut record = serializer.serialize_struct("PlacedDiagram", 3)?;
        record.serialize_field("frame", &self.frame)?;
        record.serialize_field("parts", &self.parts)?;
        record.serialize_field("weight", &self.weight())?;
        record.end()
    }
}

impl<'de> Deserialize<'de> for PlacedDiagram {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Record {
            frame: Frame,
            parts: Vec<i64>,
            weight: u64,
        }
        let record = Record::deserialize(deserializer)?;
        let diagram = make_diagram(record.frame, &record.parts).map_err(D::Error::custom)?;
        if diagram.weight() != record.weight {
            return Err(D::Error::custom(format!(
                "stated weight {} does not match parts {:?}",
                record.weight, record.parts
            )));
        }
        Ok(diagram)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Horizontal,
    Vertical,
}

/// A unit grid segment keyed by orientation and its smaller endpoint: the
/// segment runs from (x, y) to (x+1, y) horizontally or to (x, y+1)
/// vertically.
pub type UnitSegment = (Orientation, i64, i64);

/// Maximal straight run of inner boundary unit segments.
///
/// `start` is the lexicographically smaller run endpoint; neither endpoint
/// extends to a further inner unit segment on the same line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SegmentRun {
    pub orientation: Orientation,
    pub start: (i64, i64),
    pub length: u32,
}

impl SegmentRun {
    pub fn end(&self) -> (i64, i64) {
        let (x, y) = self.start;
        match self.orientation {
            Orientation::Horizontal => (x + i64::from(self.length), y),
            Orientation::Vertical => (x, y + i64::from(self.length)),
        }
    }

    /// The run's unit segments.
    pub fn unit_segments(&self) -> Vec<UnitSegment> {
        let (x, y) = self.start;
        (0..i64::from(self.length))
            .map(|k| match self.orientation {
                Orientation::Horizontal => (self.orientation, x + k, y),
                Orientation::Vertical => (self.orientation, x, y + k),
            })
            .collect()
    }
}

impl fmt::Display for SegmentRun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = match self.orientation {
            Orientation::Horizontal => "horizontal",
            Orientation::Vertical => "vertical",
        };
        let (ex, ey) = self.end();
        write!(
            f,
            "{word} run of length {} from ({}, {}) to ({ex}, {ey})",
            self.length, self.start.0, self.start.1
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::mask_to_parts;
    use proptest::prelude::*;
    use std::collections::{BTreeSet, HashMap};

    fn staircase_diagram(m: u32, parts: &[i64]) -> PlacedDiagram {
        make_diagram(Frame::staircase(m), parts).unwrap()
    }

    fn rect_diagram(rows: u32, cols: u32, parts: &[i64]) -> PlacedDiagram {
        make_diagram(Frame::rectangle(rows, cols), parts).unwrap()
    }

    fn run(orientation: Orientation, start: (i64, i64), length: u32) -> SegmentRun {
        SegmentRun {
            orientation,
            start,
            length,
        }
    }

    /// Independent oracle: count box incidences per unit segment and keep the
    /// segments bounding exactly one box; inner = diagram boundary minus
    /// frame boundary.
    fn brute_inner_units(d: &PlacedDiagram) -> BTreeSet<UnitSegment> {
        fn boundary(boxes: &[(u32, u32)]) -> BTreeSet<UnitSegment> {
            let mut counts: HashMap<UnitSegment, u32> = HashMap::new();
            for &(i, c) in boxes {
                let (x, y) = (i64::from(c), -i64::from(i));
                for seg in [
                    (Orientation::Horizontal, x, y + 1),
                    (Orientation::Horizontal, x, y),
                    (Orientation::Vertical, x, y),
                    (Orientation::Vertical, x + 1, y),
                ] {
                    *counts.entry(seg).or_default() += 1;
                }
            }
            counts
                .into_iter()
                .filter_map(|(seg, n)| (n == 1).then_some(seg))
                .collect()
        }
        let diagram = boundary(&d.boxes());
        let frame = boundary(&d.frame().boxes());
        diagram.difference(&frame).copied().collect()
    }

    fn produced_units(d: &PlacedDiagram) -> BTreeSet<UnitSegment> {
        d.inner_segment_runs()
            .iter()
            .flat_map(|r| r.unit_segments())
            .collect()
    }

    fn assert_runs_valid(d: &PlacedDiagram) {
        let runs = d.inner_segment_runs();
        let units = produced_units(d);
        assert_eq!(units, brute_inner_units(d), "diagram {:?}", d.parts());
        let total: u64 = runs.iter().map(|r| u64::from(r.length)).sum();
        assert_eq!(
            total as usize,
            units.len(),
            "runs overlap in {:?}",
            d.parts()
        );
        // Maximality: neither endpoint extends to another inner unit segment.
        for r in &runs {
            let (x, y) = r.start;
            let (before, after) = match r.orientation {
                Orientation::Horizontal => {
                    let (ex, ey) = r.end();
                    ((r.orientation, x - 1, y), (r.orientation, ex, ey))
                }
                Orientation::Vertical => {
                    let (ex, ey) = r.end();
                    ((r.orientation, x, y - 1), (r.orientation, ex, ey))
                }
            };
            assert!(
                !units.contains(&before),
                "run not maximal in {:?}",
                d.parts()
            );
            assert!(
                !units.contains(&after),
                "run not maximal in {:?}",
                d.parts()
            );
        }
    }

    #[test]
    fn make_diagram_accepts_the_example_diagram() {
        let d = staircase_diagram(6, &[6, 5, 2, 1]);
        assert_eq!(d.parts(), &[6, 5, 2, 1]);
        assert_eq!(d.weight(), 14);
    }

    #[test]
    fn make_diagram_drops_trailing_zeros() {
        let d = staircase_diagram(6, &[6, 5, 0, 0]);
        assert_eq!(d.parts(), &[6, 5]);
    }

    #[test]
    fn make_diagram_rejects_equal_parts_on_staircase() {
        assert!(matches!(
            make_diagram(Frame::staircase(6), &[3, 3]),
            Err(Error::NotStrict { .. })
        ));
    }

    #[test]
    fn make_diagram_rejects_first_part_above_frame() {
        assert!(matches!(
            make_diagram(Frame::staircase(6), &[7]),
            Err(Error::ExceedsFrame { .. })
        ));
    }

    #[test]
    fn make_diagram_rejects_zero_in_the_middle_and_negatives() {
        assert!(matches!(
            make_diagram(Frame::staircase(6), &[3, 0, 2]),
            Err(Error::NonPositivePart { .. })
        ));
        assert!(matches!(
            make_diagram(Frame::staircase(6), &[-1]),
            Err(Error::NonPositivePart { .. })
        ));
    }

    #[test]
    fn make_diagram_rectangle_accepts_repeats_and_checks_bounds() {
        let d = rect_diagram(2, 2, &[2, 2]);
        assert_eq!(d.weight(), 4);
        assert!(matches!(
            make_diagram(Frame::rectangle(2, 2), &[1, 2]),
            Err(Error::NotWeaklyDecreasing { .. })
        ));
        assert!(matches!(
            make_diagram(Frame::rectangle(2, 2), &[3]),
            Err(Error::ExceedsFrame { .. })
        ));
        assert!(matches!(
            make_diagram(Frame::rectangle(2, 2), &[2, 1, 1]),
            Err(Error::ExceedsFrame { .. })
        ));
    }

    #[test]
    fn every_strict_partition_with_bounded_first_part_fits() {
        // Containment is implied: exhaust all strict partitions for m <= 13.
        for m in 0u32..=13 {
            for mask in 0u64..(1u64 << m) {
                let parts: Vec<i64> = mask_to_parts(mask, m).into_iter().map(i64::from).collect();
                assert!(make_diagram(Frame::staircase(m), &parts).is_ok());
            }
        }
    }

    #[test]
    fn runs_match_the_eight_even_diagrams_for_m_6() {
        use Orientation::{Horizontal, Vertical};
        let expected: [(&[i64], Vec<SegmentRun>); 8] = [
            (&[6, 5, 4, 3, 2, 1], vec![]),
            (&[6, 5, 4, 3], vec![run(Horizontal, (5, -4), 2)]),
            (
                &[6, 5, 2, 1],
                vec![run(Vertical, (5, -4), 2), run(Horizontal, (5, -2), 2)],
            ),
            (&[6, 5], vec![run(Horizontal, (3, -2), 4)]),
            (&[4, 3, 2, 1], vec![run(Vertical, (5, -4), 4)]),
            (
                &[4, 3],
                vec![run(Horizontal, (3, -2), 2), run(Vertical, (5, -2), 2)],
            ),
            (&[2, 1], vec![run(Vertical, (3, -2), 2)]),
            (&[], vec![]),
        ];
        for (parts, runs) in expected {
            let d = staircase_diagram(6, parts);
            assert_eq!(d.inner_segment_runs(), runs, "diagram {parts:?}");
            assert!(d.is_even(), "diagram {parts:?}");
        }
    }

    #[test]
    fn single_box_has_one_odd_vertical_run() {
        let d = staircase_diagram(6, &[1]);
        assert_eq!(
            d.inner_segment_runs(),
            vec![run(Orientation::Vertical, (2, -1), 1)]
        );
        assert!(!d.is_even());
    }

    #[test]
    fn rectangle_runs_match_hand_computation() {
        use Orientation::{Horizontal, Vertical};
        let d = rect_diagram(2, 2, &[2]);
        assert_eq!(d.inner_segment_runs(), vec![run(Horizontal, (1, -1), 2)]);
        assert!(d.is_even());
        let d = rect_diagram(2, 2, &[1, 1]);
        assert_eq!(d.inner_segment_runs(), vec![run(Vertical, (2, -2), 2)]);
        assert!(d.is_even());
        let d = rect_diagram(2, 2, &[2, 1]);
        assert_eq!(
            d.inner_segment_runs(),
            vec![run(Vertical, (2, -2), 1), run(Horizontal, (2, -1), 1)]
        );
        assert!(!d.is_even());
    }

    #[test]
    fn full_and_empty_diagrams_are_even_for_every_frame() {
        for m in 0u32..=9 {
            let frame = Frame::staircase(m);
            let full: Vec<i64> = (1..=i64::from(m)).rev().collect();
            assert!(make_diagram(frame, &full).unwrap().is_even());
            assert!(make_diagram(frame, &[]).unwrap().is_even());
        }
        for rows in 1u32..=4 {
            for cols in 1u32..=4 {
                let frame = Frame::rectangle(rows, cols);
                let full = vec![i64::from(cols); rows as usize];
                assert!(make_diagram(frame, &full).unwrap().is_even());
                assert!(make_diagram(frame, &[]).unwrap().is_even());
            }
        }
    }

    #[test]
    fn runs_agree_with_brute_force_exhaustively_on_small_staircases() {
        for m in 0u32..=10 {
            for mask in 0u64..(1u64 << m) {
                let d = PlacedDiagram::new_unchecked(Frame::staircase(m), mask_to_parts(mask, m));
                assert_runs_valid(&d);
            }
        }
    }

    #[test]
    fn runs_agree_with_brute_force_exhaustively_on_small_rectangles() {
        for rows in 1u32..=3 {
            for cols in 1u32..=5 {
                for parts in all_box_partitions(rows, cols) {
                    let d = PlacedDiagram::new_unchecked(Frame::rectangle(rows, cols), parts);
                    assert_runs_valid(&d);
                }
            }
        }
    }

    fn all_box_partitions(rows: u32, cols: u32) -> Vec<Vec<u32>> {
        fn go(rows_left: u32, max_part: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            out.push(cur.clone());
            if rows_left == 0 {
                return;
            }
            for next in 1..=max_part {
                cur.push(next);
                go(rows_left - 1, next, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(rows, cols, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn transposing_a_rectangle_preserves_evenness() {
        for rows in 1u32..=3 {
            for cols in 1u32..=4 {
                for parts in all_box_partitions(rows, cols) {
                    let d =
                        PlacedDiagram::new_unchecked(Frame::rectangle(rows, cols), parts.clone());
                    let conj = Partition::from_vec_unchecked(parts).conjugate();
                    let t = PlacedDiagram::new_unchecked(
                        Frame::rectangle(cols, rows),
                        conj.parts().to_vec(),
                    );
                    assert_eq!(d.is_even(), t.is_even());
                }
            }
        }
    }

    #[test]
    fn conjugate_is_an_involution() {
        let p = Partition::new(&[4, 2, 1]).unwrap();
        assert_eq!(p.conjugate().parts(), &[3, 2, 1, 1]);
        assert_eq!(p.conjugate().conjugate(), p);
        assert!(Partition::new(&[]).unwrap().conjugate().is_empty());
    }

    #[test]
    fn weight_equals_box_count() {
        let d = staircase_diagram(6, &[6, 5, 4, 3, 2, 1]);
        assert_eq!(d.weight(), 21);
        assert_eq!(d.boxes().len() as u64, d.weight());
        assert_eq!(staircase_diagram(6, &[6, 5]).weight(), 11);
        assert_eq!(staircase_diagram(6, &[]).weight(), 0);
    }

    #[test]
    fn diagram_json_round_trips() {
        let d = staircase_diagram(6, &[6, 5]);
        let json = serde_json::to_string(&d).unwrap();
        assert_eq!(
            json,
            r#"{"frame":{"kind":"staircase","m":6},"parts":[6,5],"weight":11}"#
        );
        let back: PlacedDiagram = serde_json::from_str(&json).unwrap();
        assert_eq!(back, d);
        assert!(serde_json::from_str::<PlacedDiagram>(
            r#"{"frame":{"kind":"staircase","m":6},"parts":[6,5],"weight":12}"#
        )
        .is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(StrictPartition::new(&[6, 5]).unwrap().to_string(), "(6,5)");
        assert_eq!(StrictPartition::new(&[]).unwrap().to_string(), "()");
        assert_eq!(
            staircase_diagram(6, &[2, 1]).inner_segment_runs()[0].to_string(),
            "vertical run of length 2 from (3, -2) to (3, 0)"
        );
    }

    proptest! {
        #[test]
        fn runs_agree_with_brute_force_on_random_staircases(m in 0u32..=20, mask in any::<u64>()) {
            let mask = if m == 0 { 0 } else { mask & ((1u64 << m) - 1) };
            let d = PlacedDiagram::new_unchecked(Frame::staircase(m), mask_to_parts(mask, m));
            assert_runs_valid(&d);
        }

        #[test]
        fn runs_agree_with_brute_force_on_random_rectangles(
            rows in 1u32..=6,
            cols in 1u32..=6,
            raw in proptest::collection::vec(1u32..=6, 0..=6),
        ) {
            let mut parts: Vec<u32> = raw.iter().map(|&p| p.min(cols)).collect();
            parts.truncate(rows as usize);
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let d = PlacedDiagram::new_unchecked(Frame::rectangle(rows, cols), parts);
            assert_runs_valid(&d);
        }

        #[test]
        fn weight_matches_box_count_on_random_staircases(m in 0u32..=20, mask in any::<u64>()) {
            let mask = if m == 0 { 0 } else { mask & ((1u64 << m) - 1) };
            let d = PlacedDiagram::new_unchecked(Frame::staircase(m), mask_to_parts(mask, m));
            prop_assert_eq!(d.weight(), d.boxes().len() as u64);
        }
    }
}
