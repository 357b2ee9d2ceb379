//! Exact computation of combinatorial and homological invariants attached to
//! the cover ideals of finite simple graphs.
//!
//! The crate provides, all over exact arithmetic:
//!
//! * [`graph`] — simple graphs, matching invariants (including the ordered
//!   matching number), minimal vertex covers, bipartiteness;
//! * [`ideal`] — monomial ideals in a named variable list: minimal generators,
//!   intersection, products, colons, restriction, edge/cover ideals and
//!   symbolic powers of cover ideals;
//! * [`construction`] — polarization of monomial ideals and the layered graph
//!   `G_k` whose cover ideal realizes the polarized symbolic power;
//! * [`simplicial`] and [`homological`] — Stanley–Reisner complexes, reduced
//!   simplicial homology over the rationals, multigraded Betti numbers
//!   (restriction and upper-Koszul engines), Alexander duality, projective
//!   dimension / depth / regularity;
//! * [`stanley`] — Stanley depth and Stanley regularity of monomial ideals and
//!   their quotients by exact interval-partition search on the characteristic
//!   poset.

pub mod config;
pub mod construction;
pub mod error;
pub mod graph;
pub mod homological;
pub mod ideal;
pub mod simplicial;
pub mod stanley;

pub use error::{Error, Result};
