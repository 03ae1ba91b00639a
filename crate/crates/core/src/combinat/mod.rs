//! Partitions, compositions, tableaux and the tableau algorithms used by
//! the symmetric-function and LLT code.
//!
//! Rows are 0-based and row 0 is the longest row, so a tableau is strictly
//! increasing down each column as the row index grows.

mod jdt;
mod kostka;
mod partition;
mod rimhook;
mod rsk;
mod shape;
mod shuffle;
mod tableau;

pub use jdt::{jdt_rectify, lr_coefficient, slide, tableau_switch};
pub use kostka::kostka;
pub use partition::{compositions_of, partitions_of, Composition, Partition};
pub use rimhook::{is_flat, k_star, k_star_refinement, refinements, special_rim_hook_count, SignedCount};
pub use rsk::{inverse_descent_set, rsk, standardize, word_descent_set};
pub use shape::SkewShape;
pub use shuffle::shuffle_words_dk;
pub use tableau::{hook_length_count, row_tableau, ssyt_enumerate, syt_enumerate, Tableau};
