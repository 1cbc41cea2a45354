//! Exact counts of colorful necklaces and bracelets in three colors.
//!
//! A word is *colorful* when no two cyclically adjacent letters share a
//! color. Two colorful words are equivalent when one is obtained from the
//! other by rotating (and, for bracelets, reversing) and permuting the
//! colors. [`counts`] evaluates the number of classes in closed form;
//! [`oracle`] counts them by exhaustive enumeration for small lengths.

pub mod count;
pub mod counts;
pub mod error;
pub mod group;
pub mod number_theory;
pub mod oracle;
pub mod reference;
pub mod sequence;

pub use count::Count;
pub use counts::{
    alpha, bracelet_count, chi, classical_bracelet, classical_necklace, correction_term,
    exact_color_count, exact_period_count, fixed_points, necklace_count, necklace_count_components,
    reflection_term, Arrangement, NecklaceComponents,
};
pub use error::{Error, Result};
pub use group::{CycleType, GroupElement, GroupKind, S3Perm};
pub use oracle::{apply, ColorfulWord, Oracle};
pub use sequence::SequenceKind;
