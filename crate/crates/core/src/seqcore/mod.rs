//! Words, inversion sequences and pattern containment.
//!
//! Letters are `usize`. Sequences print as comma-separated decimals
//! (`0,0,2,3,2,5,2`); parsing also accepts bare digit strings (`0023252`)
//! when every letter is below 10.

mod enumerate;
mod pattern;
mod stats;
mod word;

pub use enumerate::{avoids_all, enumerate, enumerate_from, partition_prefixes, Avoiders};
pub use pattern::{contains, reduce, Pattern};
pub use stats::{drop_last, shift_reduce, stat_profile, StatProfile};
pub use word::{InversionSequence, Word};
