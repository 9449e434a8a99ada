//! Hyperplane arrangements attached to ADE Dynkin data with contracted
//! nodes: root restriction, finite and windowed affine arrangements, exact
//! chamber enumeration, positive galleries and atoms, mutation labels, and a
//! presentation of the fundamental groupoid of the complexified complement.
//!
//! All arithmetic is exact. The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod arrangement;
pub mod chambers;
pub mod dynkin;
pub mod error;
pub mod feasibility;
pub mod galleries;
mod linalg;
pub mod permutation;
pub mod pi1;
pub mod poset;
pub mod rational;

pub use arrangement::{
    build_affine, build_finite, product_arrangement, restrict_roots, search_rank_two, Arrangement, ArrangementKind,
    Hyperplane,
};
pub use chambers::{enumerate_chambers, walls, Chamber, ChamberGraph, ChamberId, Edge, EdgeId, Sign, SignVector};
pub use dynkin::{cartan_matrix, positive_roots, DynkinData, DynkinType, Family, Root};
pub use error::{Error, Result};
pub use galleries::{
    atoms, atoms_with_cap, compose, mutation_walk, Atoms, MutationLabel, PositivePath, Summand, DEFAULT_ATOM_CAP,
};
pub use permutation::{GroupElement, Permutation};
pub use pi1::{
    base_chamber, check_representation, crossing_homomorphism, equal_in_groupoid, generators, relations, GroupoidWord,
    Pi1Generator, SignedEdge, WordEquality,
};
pub use poset::region_count_zaslavsky;
pub use rational::{format_decimal, format_rational, parse_rational, Rational};
