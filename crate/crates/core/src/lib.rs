//! Two-channel Haar filter bank with a polyphase fast path.
//!
//! The bank splits a signal into approximation and detail bands and rebuilds
//! it exactly. Each direction exists in two interchangeable forms:
//!
//! * **direct** — the textbook structure: convolve with both filters at full
//!   rate, then decimate (analysis); zero-stuff, convolve, and sum branches
//!   (synthesis).
//! * **fast** — the polyphase restructuring: move the rate change to the
//!   cheap side of the filters, so each output pair costs one sum/difference
//!   butterfly plus a single scaling.
//!
//! Both forms compute the same values to within floating-point operation
//! order; with a counter attached, the fast analysis performs exactly a
//! quarter of the direct path's multiplications. [`multilevel`] iterates the
//! bank over successive approximation bands, [`image2d`] applies it
//! separably to grayscale images, [`metrics`] quantifies path agreement and
//! operation counts, and [`io`] handles the CSV/PGM/SVG file formats used by
//! the `fasthaar` command-line tool.

pub mod count;
pub mod error;
pub mod filters;
pub mod haar;
pub mod image2d;
pub mod io;
pub mod metrics;
pub mod multilevel;
pub mod rng;
pub mod signal;

pub use count::OpCounter;
pub use error::HaarError;
pub use filters::{HaarFilterSet, HAAR, INV_SQRT2};
pub use haar::{
    analyze, direct_analysis, direct_synthesis, fast_analysis, fast_synthesis, merge_polyphase,
    split_polyphase, synthesize, Mode,
};
pub use image2d::{analyze2d, difference_image, lowpass_display, synthesize2d, GrayImage, QuadSubbands};
pub use metrics::{compare_transforms, complexity_report, pointwise_error_db, ComplexityComparison, ErrorReport, OpReport, DB_FLOOR};
pub use multilevel::{decompose, reconstruct, DecompositionTree};
pub use signal::{Signal, SubbandPair};
