//! Quiver algebras with relations and their finite-dimensional
//! representations.
//!
//! An [`Algebra`] is built from an [`AlgebraSpec`] by enumerating the path
//! basis of the quotient of the path algebra by the relation ideal.  A
//! [`Module`] assigns a vector space to each vertex and a matrix to each
//! arrow; modules are always validated against the relations.  On top of
//! that sit the homological workhorses: Hom bases, first extension groups
//! with explicit cocycle representatives, pushout realisation of extension
//! classes, universal extensions, image/kernel/cokernel subquotients, open
//! and closed restriction with the adjoint triple, and an exact isomorphism
//! decision procedure.

pub(crate) mod algebra;
pub(crate) mod ext;
pub(crate) mod hom;
pub(crate) mod iso;
pub(crate) mod module;
pub(crate) mod ops;
pub(crate) mod path;
pub(crate) mod recollement;
pub(crate) mod spec;

pub use algebra::{Algebra, BasisReport};
pub use ext::{universal_extension, Ext1, UniversalExtension};
pub use hom::{extend_through, factor_through, hom_basis, hom_dim};
pub use iso::is_isomorphic;
pub use module::{Module, ModuleMap, ShortExactSeq};
pub use ops::{
    cokernel_module, image_module, kernel_module, largest_quotient_in, largest_sub_in,
    projective_cover_map, radical_module, radical_series_dims, socle_module, socle_series_dims,
    top_radical_socle, TopRadicalSocle,
};
pub use path::Path;
pub use recollement::{intermediate_extension, ClosedRestriction, OpenRestriction};
pub use spec::{AlgebraSpec, ArrowSpec, OrderingSpec, Relation, RelationTerm};
