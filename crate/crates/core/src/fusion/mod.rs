//! Fusion-ring catalogs: Temperley-Lieb (`A_o(F)`, `SU_q(2)`), free fusion
//! (`A_u(F)`) and duals of free abelian and free groups.

mod decomposition;
mod free_unitary;
mod group_dual;
mod label;
mod ring;
mod temperley_lieb;

pub use decomposition::Decomposition;
pub use free_unitary::{word_dimension, word_fuse};
pub use group_dual::{abelian_sum, free_inverse, free_product, reduce_free};
pub use label::{conjugate_word, IrrepLabel, Letter};
pub use ring::{Catalog, FusionRing, GroupKind, Guards};
pub use temperley_lieb::{su_q2_spectrum, tl_dimension, tl_fuse};

#[cfg(test)]
mod tests;
