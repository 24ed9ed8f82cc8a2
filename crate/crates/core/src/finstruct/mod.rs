//! Finite carriers, point sets, quasi-orders, topologies, lattices, relations and maps.

pub mod codec;
mod error;
pub mod iso;
mod lattice;
mod map;
mod pointset;
mod qoset;
mod relation;
mod topology;

pub use codec::{are_isomorphic, CodecError, IsoError, Record};
pub use error::ValidationError;
pub use iso::{is_isomorphic, isomorphism, Structure};
pub use lattice::{elem_full, ElemSet, Lattice, MAX_ELEMENTS};
pub use map::SpaceMap;
pub use pointset::{mask_iter, Carrier, PointSet, Points, Subsets, MAX_POINTS};
pub use qoset::Qoset;
pub use relation::BinaryRelation;
pub use topology::{OrderedSpace, Topology};
