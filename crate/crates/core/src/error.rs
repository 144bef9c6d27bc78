//! Error taxonomy shared by every module.
//!
//! Three failure classes cover the whole toolkit:
//!
//! * [`Error::Domain`] — the caller asked for something outside an operation's
//!   precondition (mismatched lengths, a content outside a face region, a
//!   non-regular multipartition where a regular one is required, ...).
//! * [`Error::Integrity`] — an internal invariant that should hold by theory
//!   was violated at runtime (inexact divided-power division, a negative
//!   defect, a non-bar-symmetric stripping coefficient). These always indicate
//!   a bug, never bad input.
//! * [`Error::Overflow`] — checked 64-bit arithmetic overflowed. Desk-scale
//!   inputs never get near this; an explicit error beats silent wraparound.

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Input violates an operation's precondition.
    #[error("domain error: {0}")]
    Domain(String),
    /// An internal invariant failed; this is a bug, not bad input.
    #[error("integrity error: {0}")]
    Integrity(String),
    /// Checked integer arithmetic overflowed.
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn integrity(msg: impl Into<String>) -> Self {
        Error::Integrity(msg.into())
    }
}
