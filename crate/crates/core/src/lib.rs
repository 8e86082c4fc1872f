//! Unsupervised deformable 3D registration built around a coarse-to-fine
//! decoding pyramid. Each pyramid level turns multi-head neighborhood
//! attention between fixed and moving feature maps into competing
//! displacement sub-fields, fuses them per voxel, and compounds the result
//! into a dense deformation field.
//!
//! The crate is organized as:
//!
//! - [`volgrid`]: volume/label/field grid types and the `VVOL/1` file format
//! - [`fieldops`]: warping, field composition, upsampling, Jacobian analysis
//! - [`netcore`]: tape-based reverse-mode autodiff, conv/norm building
//!   blocks, the hierarchical encoder, checkpoints, gradient checking
//! - [`modet`]: neighborhood attention and attention-to-sub-field conversion
//! - [`cwm`]: competitive per-voxel fusion of upsampled sub-fields
//! - [`pyramid`]: the end-to-end registration model
//! - [`objective`]: NCC + smoothness training loss, Adam loop, LR schedule
//! - [`evalmetrics`]: Dice, ASSD, folding statistics, report records
//! - [`synthbench`]: synthetic pairs with known ground-truth deformations
//! - [`viz`]: deformed-grid / quiver renderings of displacement slices

pub mod cwm;
pub mod error;
pub mod evalmetrics;
pub mod fieldops;
pub mod modet;
pub mod netcore;
pub mod objective;
pub mod pyramid;
pub mod synthbench;
pub mod viz;
pub mod volgrid;

pub use error::{Error, Result};
