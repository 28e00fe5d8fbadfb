//! ASCII and SVG pictures of placed diagrams. Both renderers draw the frame
//! outline, shade the diagram cells, and highlight the inner boundary runs,
//! so a picture shows at a glance why a diagram is or is not even.

use std::collections::HashSet;

use crate::diagram::{Orientation, PlacedDiagram, UnitSegment};
use crate::enumeration::DiagramSet;

/// Rendering knobs shared by the ASCII and SVG backends.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RenderSpec {
    /// Side length of one lattice cell in SVG pixels. Must be at least 4 so
    /// parsed coordinates stay exact.
    pub cell_px: u32,
    /// Shade the cells of the diagram.
    pub shade: bool,
    /// Highlight the inner boundary runs.
    pub mark_inner: bool,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            cell_px: 20,
            shade: true,
            mark_inner: true,
        }
    }
}

const ANSI_INNER: &str = "\x1b[1;31m";
const ANSI_RESET: &str = "\x1b[0m";

/// Every unit segment bounding a box of the frame, interior gridlines
/// included. The inner runs overdraw their part of the grid, so they stand
/// out against it.
fn frame_edges(diagram: &PlacedDiagram) -> HashSet<UnitSegment> {
    let mut edges = HashSet::new();
    for (row, col) in diagram.frame().boxes() {
        let (x, y) = (i64::from(col), -i64::from(row));
        edges.insert((Orientation::Horizontal, x, y));
        edges.insert((Orientation::Horizontal, x, y + 1));
        edges.insert((Orientation::Vertical, x, y));
        edges.insert((Orientation::Vertical, x + 1, y));
    }
    edges
}

/// Plain text picture on the character grid: lattice point (x, y) sits at
/// column 4(x - 1), row -2y.
pub fn render_ascii(diagram: &PlacedDiagram, spec: &RenderSpec) -> String {
    render_ascii_impl(diagram, spec, false)
}

/// Same picture with the inner runs wrapped in ANSI bold red.
pub fn render_ascii_color(diagram: &PlacedDiagram, spec: &RenderSpec) -> String {
    render_ascii_impl(diagram, spec, true)
}

fn render_ascii_impl(diagram: &PlacedDiagram, spec: &RenderSpec, color: bool) -> String {
    assert!(spec.cell_px >= 4, "cell_px must be at least 4");
    let frame = diagram.frame();
    let depth = frame.depth() as usize;
    let width = frame
        .boxes()
        .iter()
        .map(|&(_, c)| c as usize)
        .max()
        .unwrap_or(0);
    let rows = 2 * depth + 1;
    let cols = 4 * width + 1;
    let mut grid = vec![vec![' '; cols]; rows];
    let mut hot = vec![vec![false; cols]; rows];
    let mut drawn_h: HashSet<(i64, i64)> = HashSet::new();
    let mut drawn_v: HashSet<(i64, i64)> = HashSet::new();

    if spec.shade {
        for (row, col) in diagram.boxes() {
            let r = 2 * row as usize - 1;
            let c0 = 4 * (col as usize - 1) + 1;
            grid[r][c0..c0 + 3].fill('#');
        }
    }

    let mut draw = |seg: UnitSegment, grid: &mut Vec<Vec<char>>, mark: bool| {
        let (orientation, x, y) = seg;
        match orientation {
            Orientation::Horizontal => {
                let r = (-2 * y) as usize;
                let c0 = 4 * (x - 1) as usize + 1;
                for c in c0..c0 + 3 {
                    grid[r][c] = if mark { '=' } else { '-' };
                    hot[r][c] = mark;
                }
                drawn_h.insert((x, y));
            }
            Orientation::Vertical => {
                let r = (-2 * y - 1) as usize;
                let c = 4 * (x - 1) as usize;
                grid[r][c] = if mark { 'I' } else { '|' };
                hot[r][c] = mark;
                drawn_v.insert((x, y));
            }
        }
    };

    let mut edges: Vec<UnitSegment> = frame_edges(diagram).into_iter().collect();
    edges.sort_unstable();
    for seg in edges {
        draw(seg, &mut grid, false);
    }
    if spec.mark_inner {
        for run in diagram.inner_segment_runs() {
            for seg in run.unit_segments() {
                draw(seg, &mut grid, true);
            }
        }
    }

    for x in 1..=(width as i64 + 1) {
        for y in -(depth as i64)..=0 {
            let incident = drawn_h.contains(&(x - 1, y))
                || drawn_h.contains(&(x, y))
                || drawn_v.contains(&(x, y - 1))
                || drawn_v.contains(&(x, y));
            if incident {
                grid[(-2 * y) as usize][4 * (x - 1) as usize] = '+';
            }
        }
    }

    let mut out = String::new();
    for (r, line) in grid.iter().enumerate() {
        let end = line.iter().rposition(|&ch| ch != ' ').map_or(0, |p| p + 1);
        let mut in_hot = false;
        for c in 0..end {
            if color && hot[r][c] && !in_hot {
                out.push_str(ANSI_INNER);
                in_hot = true;
            } else if in_hot && !hot[r][c] {
                out.push_str(ANSI_RESET);
                in_hot = false;
            }
            out.push(line[c]);
        }
        if in_hot {
            out.push_str(ANSI_RESET);
        }
        out.push('\n');
    }
    out
}

/// SVG gallery of a whole diagram set, four diagrams per row, deterministic
/// byte for byte. Every diagram sits in its own `<g class="diagram">`; all
/// translate offsets are multiples of `cell_px`.
pub fn render_svg(set: &DiagramSet, spec: &RenderSpec) -> String {
    assert!(spec.cell_px >= 4, "cell_px must be at least 4");
    let cell = i64::from(spec.cell_px);
    let frame = set.frame();
    let depth = i64::from(frame.depth());
    let width = frame
        .boxes()
        .iter()
        .map(|&(_, c)| i64::from(c))
        .max()
        .unwrap_or(0);
    let members = set.placed();
    let columns = members.len().clamp(1, 4) as i64;
    let gallery_rows = members.len().div_ceil(4).max(1) as i64;
    let slot_w = (width + 1) * cell;
    let slot_h = (depth + 1) * cell;
    let total_w = cell + columns * slot_w;
    let total_h = cell + gallery_rows * slot_h;

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         width=\"{total_w}\" height=\"{total_h}\" viewBox=\"0 0 {total_w} {total_h}\">\n"
    ));
    out.push_str(
        "<style>\n\
         .box { fill: #d7d7e8; stroke: none; }\n\
         .frame { fill: none; stroke: #222222; stroke-width: 2; }\n\
         .inner { stroke: #cc2222; stroke-width: 3; stroke-linecap: square; }\n\
         </style>\n",
    );
    for (k, diagram) in members.iter().enumerate() {
        let tx = cell + (k as i64 % 4) * slot_w;
        let ty = cell + (k as i64 / 4) * slot_h;
        out.push_str(&format!(
            "<g class=\"diagram\" transform=\"translate({tx},{ty})\">\n"
        ));
        if spec.shade {
            for (row, col) in diagram.boxes() {
                let x = (i64::from(col) - 1) * cell;
                let y = (i64::from(row) - 1) * cell;
                out.push_str(&format!(
                    "<rect class=\"box\" x=\"{x}\" y=\"{y}\" width=\"{cell}\" height=\"{cell}\"/>\n"
                ));
            }
        }
        out.push_str(&format!(
            "<path class=\"frame\" d=\"{}\"/>\n",
            frame_path(diagram, cell)
        ));
        if spec.mark_inner {
            for run in diagram.inner_segment_runs() {
                let (sx, sy) = run.start;
                let (ex, ey) = run.end();
                out.push_str(&format!(
                    "<line class=\"inner\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n",
                    (sx - 1) * cell,
                    -sy * cell,
                    (ex - 1) * cell,
                    -ey * cell,
                ));
            }
        }
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    out
}

/// Outline of the frame as one closed path, in the group's pixel
/// coordinates.
fn frame_path(diagram: &PlacedDiagram, cell: i64) -> String {
    match diagram.frame() {
        crate::diagram::Frame::Staircase { m } => {
            if m == 0 {
                return String::new();
            }
            let m = i64::from(m);
            let mut d = format!("M 0 0 H {} V {}", m * cell, m * cell);
            for i in (1..=m).rev() {
                d.push_str(&format!(" H {} V {}", (i - 1) * cell, (i - 1) * cell));
            }
            d.push_str(" Z");
            d
        }
        crate::diagram::Frame::Rectangle { rows, cols } => {
            format!(
                "M 0 0 H {} V {} H 0 Z",
                i64::from(cols) * cell,
                i64::from(rows) * cell
            )
        }
    }
}

/// Reads the inner runs back out of a gallery produced by `render_svg`, one
/// list of unit segments per diagram group, in document order. Pixel
/// coordinates must be exact multiples of `cell_px`.
pub fn parse_inner_segments(svg: &str, spec: &RenderSpec) -> Vec<Vec<UnitSegment>> {
    assert!(spec.cell_px >= 4, "cell_px must be at least 4");
    let cell = i64::from(spec.cell_px);
    let mut groups: Vec<Vec<UnitSegment>> = Vec::new();
    for line in svg.lines() {
        let line = line.trim();
        if line.starts_with("<g class=\"diagram\"") {
            groups.push(Vec::new());
        } else if line.starts_with("<line class=\"inner\"") {
            let px = |name: &str| -> i64 {
                let value = attr(line, name)
                    .unwrap_or_else(|| panic!("inner line without attribute {name}: {line}"));
                assert!(
                    value % cell == 0,
                    "pixel coordinate {value} is not a multiple of the cell size {cell}"
                );
                value
            };
            let (x1, y1) = (px("x1") / cell + 1, -(px("y1") / cell));
            let (x2, y2) = (px("x2") / cell + 1, -(px("y2") / cell));
            let group = groups
                .last_mut()
                .expect("inner line outside of a diagram group");
            if y1 == y2 {
                let (lo, hi) = (x1.min(x2), x1.max(x2));
                for x in lo..hi {
                    group.push((Orientation::Horizontal, x, y1));
                }
            } else {
                assert_eq!(x1, x2, "inner line is neither horizontal nor vertical");
                let (lo, hi) = (y1.min(y2), y1.max(y2));
                for y in lo..hi {
                    group.push((Orientation::Vertical, x1, y));
                }
            }
        }
    }
    groups
}

fn attr(tag: &str, name: &str) -> Option<i64> {
    let needle = format!("{name}=\"");
    let start = tag.find(&needle)? + needle.len();
    let rest = &tag[start..];
    let end = rest.find('"')?;
    rest[..end].parse().ok()
}
