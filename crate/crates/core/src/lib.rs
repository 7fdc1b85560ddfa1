//! Shortest unique substrings (SUS) for every position of a byte string, exact
//! and with up to `k` Hamming mismatches.
//!
//! The whole computation runs inside two `n`-word index arrays plus the input
//! bytes. It proceeds in three stages, each reinterpreting the same pair of
//! arrays `(A, B)`:
//!
//! 1. [`lsus`]: `B[i]` becomes the end of the left-bounded shortest unique
//!    substring starting at `i`, or [`NIL`]. For `k = 0` this goes through a
//!    suffix array ([`suffix`]) in linear time; for `k >= 1` it compares every
//!    pair of suffixes in `n - 1` diagonal phases.
//! 2. [`sls`]: `A[i]` becomes the start of the rightmost shortest such
//!    substring covering `i`, or [`NIL`].
//! 3. [`sus`]: `(A[i], B[i])` becomes the rightmost shortest unique substring
//!    covering `i`.
//!
//! Positions are 0-based throughout the library. The CLI prints 1-based
//! positions.
//!
//! ```
//! use inplace_sus::find_all_sus;
//!
//! let table = find_all_sus(b"dabcabc", 0).unwrap();
//! // position 5 (0-based) is covered by "abc" at 3..=5
//! assert_eq!(table.get(5), (3, 5));
//! ```

pub mod buffers;
pub mod cli;
mod error;
pub mod lsus;
pub mod oracle;
pub mod sls;
pub mod suffix;
pub mod sus;
mod text;

pub use buffers::{Stage, WorkBuffers, NIL};
pub use error::SusError;
pub use sus::{find_all_sus, find_all_sus_into, SusTable};
pub use text::Text;
