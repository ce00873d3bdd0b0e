//! Exact classification of O(n)-structures on primary Hopf surfaces.
//!
//! The model space O(n) is the total space of the degree-`n` line bundle over P¹, acted on
//! by `G(n) = GL(2)/μₙ ⋉ Symⁿ(C²)*`. A structure on a Hopf surface `(C²∖0)/⟨F⟩` is a
//! developing map equivariant for one holonomy element of `G(n)`.

pub mod classify;
pub mod devmaps;
pub mod group;
pub mod hopf;
pub mod normalform;
pub mod scalars;
pub mod sections;
pub mod verify;
