//! A ZZ^2-graded module calculator over `k[x,y]/(xy)` — the coordinate
//! ring of two crossing affine lines — together with the bridge from
//! its orbit-closure sheaves to the quiver blocks of the weight-graded
//! category.
//!
//! The pieces:
//!
//! * [`geometry`]: weights, supports, twisted structure sheaves on the
//!   orbit closures, staggered shifts and skew degrees.
//! * [`towers`]: closed-form minimal resolutions and the two-periodic
//!   Tor/Ext towers against the point, plus extension spaces between
//!   the simple heart objects.
//! * [`oracle`]: windowed brute-force resolutions that independently
//!   reproduce the closed forms; their towers are frozen as fixture
//!   files.
//! * [`block`]: the quiver presentation of each block, with arrows
//!   derived from the graded extension spaces.
//! * [`verify`]: the end-to-end cross-check ladder comparing the
//!   graded side against the quiver side, block by block.

pub mod block;
pub mod geometry;
pub mod oracle;
pub mod towers;
pub mod verify;

pub use block::{build_block, isolated_block, ExpectedTables, NodalBlock};
pub use geometry::{
    costandard_minus, costandard_plus, is_aligned, pairing, restrict_open, simple_minus,
    simple_origin, simple_plus, skew_degree, staggered_shift, whole_sheaf, Cocharacter,
    GradedSheaf, NodalConfig, Support, Weight, PI_MINUS, PI_PLUS, W_X, W_Y,
};
pub use oracle::{
    fixture_panel, minimal_resolution, oracle_ext_tower, oracle_tor_tower, OracleResolution,
};
pub use towers::{ext1_between_simples, ext_tower, tor_tower, ExtTower, TorTower};
pub use verify::{verify_block, verify_blocks, BlockReport, CheckLine, VerifyReport};
