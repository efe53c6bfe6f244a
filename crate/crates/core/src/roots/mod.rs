//! The geometric representation: reflections, roots, depth, words and length.

pub mod action;
pub mod depth;
pub mod length;
pub mod vector;

pub use action::{GroupElement, Word};
pub use depth::DepthLayers;
pub use length::BallSizes;
pub use vector::{Root, RootSign, RootVector, VectorKey};
