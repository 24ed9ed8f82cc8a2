//! Exact computations on finite quasi-ordered sets, topologies and lattices.

pub mod cord;
pub mod finstruct;
pub mod labcli;
pub mod latid;
pub mod morphcat;
pub mod ospace;
pub(crate) mod search;
pub mod topoderive;
