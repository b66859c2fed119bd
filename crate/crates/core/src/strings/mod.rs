//! Signature and state strings, their lattice paths, and words of all-black boundaries.

pub mod path;
pub mod signature;
pub mod word;

pub use path::{
    first_return_indices, got_from_string, is_dominant, path_from_string, string_from_got,
    DominantPath, Point, StringError,
};
pub use signature::{Color, Entry, ParseStringError, SignatureStateString, State};
pub use word::{syt_from_word, word_from_syt, Word, WordError};
