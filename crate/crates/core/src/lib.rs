pub mod bcc;
pub mod cli;
pub mod dot;
pub mod equivalence;
pub mod error;
pub mod exact;
pub mod formats;
pub mod generate;
pub mod graph;
pub mod parity;
pub mod rainbow;
pub mod reduction;
pub mod split_rc;
