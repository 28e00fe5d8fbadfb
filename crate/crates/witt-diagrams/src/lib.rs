//! Even shifted Young diagrams and the graded Witt modules they index.
//!
//! The total Witt group of the spinor variety OG_+(n, E) of a quadratic
//! bundle (E, q) of rank 2n with trivial Arf invariant is a free graded
//! module over W^tot(S). This crate computes that module two independent
//! ways and checks that they agree:
//!
//! * [`enumeration`] lists the even shifted Young diagrams inside the
//!   staircase (n-1, n-2, ..., 1). A diagram is even when every maximal
//!   straight run of its inner boundary, the part of the diagram boundary
//!   in the interior of the staircase, has even length. Each diagram
//!   contributes one generator whose degree is the number of boxes, so the
//!   module has rank 2^floor(n/2) with Poincare polynomial satisfying the
//!   same two-term recursions as the diagram count.
//! * [`derivation`] executes the geometric recursion directly: odd n splits
//!   off a copy of the module for n - 2 shifted by 2n - 3, even n splits
//!   off a copy for n - 1 shifted by n - 1 and twisted by the determinant
//!   of the tautological subbundle. Every rule application is hypothesis
//!   checked and recorded in a citation trace.
//!
//! [`diagram`] holds the geometry (frames, placed diagrams, inner boundary
//! runs), [`twist`] the Pic/2 bookkeeping of line bundle twists, [`witt`]
//! the graded module arithmetic, [`render`] ASCII and SVG pictures, and
//! [`verify`] end-to-end cross-checks. The [`cli`] module exposes all of it
//! as a small command line tool.

pub mod cli;
pub mod derivation;
pub mod diagram;
pub mod enumeration;
pub mod error;
pub mod render;
pub mod twist;
pub mod verify;
pub mod witt;

pub use derivation::{
    cell_count, check_rule, cross_check, decompose, CrossCheckReport, DerivationTrace,
    MismatchReport, Rule, RuleApplication, RuleParams, TraceStep,
};
pub use diagram::{
    make_diagram, Frame, Orientation, Partition, PlacedDiagram, SegmentRun, StrictPartition,
    UnitSegment,
};
pub use enumeration::{
    count, oracle_enumerate, poincare_polynomial, rect_enumerate, recursive_enumerate, DiagramSet,
    PoincarePolynomial, MAX_ORACLE_N, MAX_RECT_AREA,
};
pub use error::{Error, Result};
pub use render::{parse_inner_segments, render_ascii, render_ascii_color, render_svg, RenderSpec};
pub use twist::{
    det_ln_twist, o_twist, omega_iota_twist, omega_theta_twist, relative_canonical_twist,
    twist_add, DegreeClass, LineBundleSymbol, TwistClass,
};
pub use verify::{run_all, CheckResult};
pub use witt::{Generator, GradedWittModule, Provenance};
