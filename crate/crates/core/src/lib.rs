//! Multidimensional necklaces: words on a d-dimensional torus up to translation.
//!
//! A word of size `n = (n₁, …, n_d)` over `q` symbols is stored as a flat
//! vector of cells in linear index order (first coordinate fastest). Words
//! are compared slice by slice along the last dimension, and a necklace is
//! represented by its smallest translate.
//!
//! The crate provides counting ([`counting`]), ranking ([`ranking`]),
//! unranking ([`unranking`]), successor generation ([`generation`]) and
//! overlap-distance k-centre constructions ([`kcentre`]).

pub mod counting;
pub mod engine;
pub mod error;
pub mod generation;
pub mod group;
pub mod kcentre;
pub mod numtheory;
pub mod order;
pub mod ranking;
pub mod unranking;
pub mod weight;
pub mod word;

pub use error::{Error, Result};
pub use ranking::{rank_fixed_content, rank_necklace, FixedContentRanker, RankResult, Ranker};
pub use word::{SizeVec, Translation, Word};
