//! Deterministic isomorphism testing over a field of characteristic
//! zero.
//!
//! After cheap invariant screens the decision reduces to linear algebra
//! in `E = End(X ⊕ Y)`: the radical of `E` is the kernel of the trace
//! form `(a, b) -> tr(ab)` (Dickson's criterion, valid in characteristic
//! zero), and in the semisimple quotient the summands `X` and `Y`
//! correspond to idempotents with multiplicity vectors `m`, `n` over the
//! simple factors.  The reduced dimensions of `Hom(X, Y)`, `End(X)` and
//! `End(Y)` are `sum d_i m_i n_i`, `sum d_i m_i^2` and `sum d_i n_i^2`,
//! so their equality forces `m = n`; conjugate idempotents modulo the
//! radical lift to an actual isomorphism.  Each reduced dimension is the
//! rank of a Gram matrix of pairwise traces over the hom bases.

use super::hom::hom_basis;
use super::module::{Module, ModuleMap};
use super::ops::{radical_series_dims, socle_series_dims};
use crate::linalg::Mat;
use crate::scalar::Scalar;

/// Whether the two modules are isomorphic.  Deterministic and exact.
pub fn is_isomorphic<S: Scalar>(x: &Module<S>, y: &Module<S>) -> bool {
    assert!(
        x.algebra().same_as(y.algebra()),
        "isomorphism test across different algebras"
    );
    if x.dims() != y.dims() {
        return false;
    }
    if x == y || x.is_zero() {
        return true;
    }
    if radical_series_dims(x) != radical_series_dims(y)
        || socle_series_dims(x) != socle_series_dims(y)
    {
        return false;
    }
    let xy = hom_basis(x, y);
    let yx = hom_basis(y, x);
    if xy.len() != yx.len() {
        return false;
    }
    // Fast positive path: some basis element is itself invertible.
    if xy.iter().any(ModuleMap::is_isomorphism) {
        return true;
    }
    let mixed = gram_rank(&xy, &yx);
    mixed == gram_rank(&hom_basis(x, x), &hom_basis(x, x))
        && mixed == gram_rank(&hom_basis(y, y), &hom_basis(y, y))
}

/// Trace of the composite endomorphism `g . f` (equivalently `f . g`).
fn pair_trace<S: Scalar>(f: &ModuleMap<S>, g: &ModuleMap<S>) -> S {
    let comp = f.then(g);
    let nv = comp.source().algebra().vertex_count();
    let mut total = S::zero();
    for v in 0..nv {
        let m = comp.part(v);
        for i in 0..m.rows() {
            total = total + m[(i, i)].clone();
        }
    }
    total
}

/// Rank of the trace pairing between a basis of `Hom(A, B)` and a basis
/// of `Hom(B, A)`: the dimension of the image of `Hom(A, B)` in the
/// semisimple quotient of `End(A + B)`.
fn gram_rank<S: Scalar>(us: &[ModuleMap<S>], vs: &[ModuleMap<S>]) -> usize {
    if us.is_empty() || vs.is_empty() {
        return 0;
    }
    let rows: Vec<Vec<S>> = us
        .iter()
        .map(|u| vs.iter().map(|v| pair_trace(u, v)).collect())
        .collect();
    Mat::from_rows(rows).rank()
}
