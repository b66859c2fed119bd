//! Generalized oscillating tableaux and their promotion.

pub mod filling;
pub mod got;
pub mod jdt;
pub mod partition;
pub mod promotion;
pub mod syt;

pub use filling::{Bullet, Cell, FillingError, Label, SetValuedFilling};
pub use got::{Got, GotError};
pub use jdt::{promote_tableau, promote_tableau_filling, promote_tableau_snapshots, TableauPromotionError};
pub use partition::{Direction, GeneralizedPartition, Step};
pub use promotion::{promote_growth, promote_growth_n, PromotionError, PromotionTrace, Rule};
pub use syt::{classical_promotion, StandardYoungTableau, SytError};
