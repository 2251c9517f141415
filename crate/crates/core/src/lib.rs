//! Finite pointfree topology: frames, the coframe `S(L)` of sublocales and
//! its fitted subcoframe `S_o(L)`, subcolocale calculus, and the
//! correspondence between Raney extensions and strictly zero-dimensional
//! biframes on finite frames.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bitset;
pub mod calculus;
pub mod correspondence;
pub mod error;
pub mod filters;
pub mod frame_map;
pub mod generators;
pub mod lattice;
pub mod lift;
pub mod precongruence;
pub mod subcolocale;
pub mod sublocale;

pub use bitset::BitSet;
pub use calculus::{Filter, Host, Workbench};
pub use correspondence::{RaneyExtension, Szdbf};
pub use frame_map::FrameMap;
pub use lift::LiftVerdict;
pub use subcolocale::Subcolocale;
pub use error::{Error, Result};
pub use lattice::{Coframe, ElementFamily, Frame, Lattice};
pub use sublocale::{Kind, Limits, SublocaleCoframe};
