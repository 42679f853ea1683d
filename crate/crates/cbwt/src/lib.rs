//! Index for Cartesian tree matching over a collection of circular texts.
//!
//! A pattern `P` occurs at a conjugate (rotation) of a text when the
//! Cartesian tree of `P` equals that of the first `|P|` symbols of the
//! conjugate's infinite repetition. The index answers how many conjugates
//! match (`count`) and which ones (`locate`), and can be extended one text
//! at a time.

pub mod builder;
pub mod dynseq;
pub mod encodings;
mod error;
pub mod index;
pub mod locator;
pub mod oracle;
mod scalar;
pub mod serial;

pub use builder::{build_collection, build_single, extend_with_text};
pub use dynseq::DynSeq;
pub use encodings::{PdString, PdSymbol, RtsSymbol, Symbol};
pub use error::{Error, Result};
pub use index::{CbwtIndex, ConjRange, TextMeta};
pub use locator::{attach_samples, locate, SampleStore};
pub use oracle::TextCollection;
pub use scalar::Scalar;

/// Integer-symbol texts, as read by the command-line tool.
pub type IntCollection = TextCollection<u32>;
/// Real-valued series.
pub type RealCollection = TextCollection<f64>;
pub type IntSymbol = Symbol<u32>;
pub type RealSymbol = Symbol<f64>;
