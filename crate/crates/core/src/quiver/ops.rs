//! Constructions on modules: kernels, images, cokernels, the largest
//! quotient or submodule supported on a vertex subset, projective covers,
//! and top/radical/socle structure.

use super::module::{Module, ModuleMap};
use crate::linalg::{quotient_by_subspace, Mat};
use crate::scalar::Scalar;

/// Kernel of a map, with its inclusion into the source.
pub fn kernel_module<S: Scalar>(f: &ModuleMap<S>) -> (Module<S>, ModuleMap<S>) {
    let x = f.source();
    let alg = x.algebra().clone();
    let nv = alg.vertex_count();
    let bases: Vec<Mat<S>> = (0..nv).map(|v| f.part(v).kernel_basis()).collect();
    let dims: Vec<usize> = bases.iter().map(Mat::cols).collect();
    let action: Vec<Mat<S>> = (0..alg.arrow_count())
        .map(|ai| {
            let a = alg.arrow(ai);
            let pushed = x.action(ai).mul(&bases[a.source]);
            bases[a.target]
                .solve_matrix(&pushed)
                .expect("arrow action preserves the kernel")
        })
        .collect();
    let ker = Module::new_unchecked(alg, dims, action);
    let incl = ModuleMap::new_unchecked(ker.clone(), x.clone(), bases);
    (ker, incl)
}

/// Image of a map, with its inclusion into the target and the
/// corestriction of the map onto it.
pub fn image_module<S: Scalar>(
    f: &ModuleMap<S>,
) -> (Module<S>, ModuleMap<S>, ModuleMap<S>) {
    let x = f.source();
    let y = f.target();
    let alg = x.algebra().clone();
    let nv = alg.vertex_count();
    let bases: Vec<Mat<S>> = (0..nv).map(|v| f.part(v).image_basis()).collect();
    let dims: Vec<usize> = bases.iter().map(Mat::cols).collect();
    let action: Vec<Mat<S>> = (0..alg.arrow_count())
        .map(|ai| {
            let a = alg.arrow(ai);
            let pushed = y.action(ai).mul(&bases[a.source]);
            bases[a.target]
                .solve_matrix(&pushed)
                .expect("arrow action preserves the image")
        })
        .collect();
    let img = Module::new_unchecked(alg, dims, action);
    let incl = ModuleMap::new_unchecked(img.clone(), y.clone(), bases.clone());
    let onto_parts: Vec<Mat<S>> = (0..nv)
        .map(|v| bases[v].solve_matrix(f.part(v)).expect("map lands in its image"))
        .collect();
    let onto = ModuleMap::new_unchecked(x.clone(), img.clone(), onto_parts);
    (img, incl, onto)
}

/// Cokernel of a map, with the projection from the target.
pub fn cokernel_module<S: Scalar>(f: &ModuleMap<S>) -> (Module<S>, ModuleMap<S>) {
    let y = f.target();
    quotient_module(y, &(0..y.algebra().vertex_count())
        .map(|v| f.part(v).image_basis())
        .collect::<Vec<_>>())
}

/// Quotient of `x` by the submodule spanned vertexwise by `sub_bases`
/// (which must be arrow-stable).  Returns the quotient and the projection.
pub fn quotient_module<S: Scalar>(
    x: &Module<S>,
    sub_bases: &[Mat<S>],
) -> (Module<S>, ModuleMap<S>) {
    let alg = x.algebra().clone();
    let nv = alg.vertex_count();
    let quots: Vec<_> =
        (0..nv).map(|v| quotient_by_subspace(x.dim_at(v), &sub_bases[v])).collect();
    let dims: Vec<usize> = quots.iter().map(|q| q.dim).collect();
    let action: Vec<Mat<S>> = (0..alg.arrow_count())
        .map(|ai| {
            let a = alg.arrow(ai);
            quots[a.target].proj.mul(&x.action(ai).mul(&quots[a.source].section))
        })
        .collect();
    let q = Module::new_unchecked(alg, dims, action);
    let proj_parts: Vec<Mat<S>> = quots.into_iter().map(|q| q.proj).collect();
    let proj = ModuleMap::new_unchecked(x.clone(), q.clone(), proj_parts);
    (q, proj)
}

fn allowed_mask<S: Scalar>(x: &Module<S>, allowed: &[usize]) -> Vec<bool> {
    let mut mask = vec![false; x.algebra().vertex_count()];
    for &v in allowed {
        mask[v] = true;
    }
    mask
}

/// The largest quotient of `x` all of whose composition factors live at
/// the allowed vertices: `x` modulo the submodule generated by the spaces
/// at all other vertices.  Returns the quotient and the projection.
pub fn largest_quotient_in<S: Scalar>(
    x: &Module<S>,
    allowed: &[usize],
) -> (Module<S>, ModuleMap<S>) {
    let alg = x.algebra().clone();
    let nv = alg.vertex_count();
    let mask = allowed_mask(x, allowed);
    // Start from the full spaces at disallowed vertices; close under the
    // arrow actions.
    let mut bases: Vec<Mat<S>> = (0..nv)
        .map(|v| {
            if mask[v] {
                Mat::zeros(x.dim_at(v), 0)
            } else {
                Mat::identity(x.dim_at(v))
            }
        })
        .collect();
    loop {
        let mut grew = false;
        for ai in 0..alg.arrow_count() {
            let a = alg.arrow(ai);
            let pushed = x.action(ai).mul(&bases[a.source]);
            let stacked = bases[a.target].hstack(&pushed).image_basis();
            if stacked.cols() > bases[a.target].cols() {
                bases[a.target] = stacked;
                grew = true;
            }
        }
        if !grew {
            break;
        }
    }
    quotient_module(x, &bases)
}

/// The largest submodule of `x` all of whose composition factors live at
/// the allowed vertices.  Returns the submodule and its inclusion.
pub fn largest_sub_in<S: Scalar>(
    x: &Module<S>,
    allowed: &[usize],
) -> (Module<S>, ModuleMap<S>) {
    let alg = x.algebra().clone();
    let nv = alg.vertex_count();
    let mask = allowed_mask(x, allowed);
    let mut bases: Vec<Mat<S>> = (0..nv)
        .map(|v| {
            if mask[v] {
                Mat::identity(x.dim_at(v))
            } else {
                Mat::zeros(x.dim_at(v), 0)
            }
        })
        .collect();
    // Shrink each space until every arrow maps it into the current space
    // at the far end.
    loop {
        let mut shrank = false;
        for v in 0..nv {
            if bases[v].cols() == 0 {
                continue;
            }
            let mut constraint_rows: Vec<Mat<S>> = Vec::new();
            for ai in 0..alg.arrow_count() {
                let a = alg.arrow(ai);
                if a.source != v {
                    continue;
                }
                let q = quotient_by_subspace(x.dim_at(a.target), &bases[a.target]);
                if q.dim == 0 {
                    continue;
                }
                constraint_rows.push(q.proj.mul(&x.action(ai).mul(&bases[v])));
            }
            if constraint_rows.is_empty() {
                continue;
            }
            let mut stacked = constraint_rows[0].clone();
            for r in &constraint_rows[1..] {
                stacked = stacked.vstack(r);
            }
            if stacked.is_zero() {
                continue;
            }
            let keep = stacked.kernel_basis();
            if keep.cols() < bases[v].cols() {
                bases[v] = bases[v].mul(&keep).image_basis();
                shrank = true;
            }
        }
        if !shrank {
            break;
        }
    }
    let dims: Vec<usize> = bases.iter().map(Mat::cols).collect();
    let action: Vec<Mat<S>> = (0..alg.arrow_count())
        .map(|ai| {
            let a = alg.arrow(ai);
            let pushed = x.action(ai).mul(&bases[a.source]);
            bases[a.target]
                .solve_matrix(&pushed)
                .expect("arrow action preserves the largest submodule")
        })
        .collect();
    let sub = Module::new_unchecked(alg, dims, action);
    let incl = ModuleMap::new_unchecked(sub.clone(), x.clone(), bases);
    (sub, incl)
}

/// Summary of the semisimple top and socle, plus the radical dimensions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopRadicalSocle {
    /// Multiplicity of each simple in `x / rad x`.
    pub top_dims: Vec<usize>,
    /// Multiplicity of each simple in the socle.
    pub socle_dims: Vec<usize>,
    /// Dimension vector of `rad x`.
    pub radical_dims: Vec<usize>,
}

/// Vertexwise bases of `rad x` (the sum of all arrow images).
fn radical_bases<S: Scalar>(x: &Module<S>) -> Vec<Mat<S>> {
    let alg = x.algebra();
    (0..alg.vertex_count())
        .map(|v| {
            let mut span = Mat::zeros(x.dim_at(v), 0);
            for ai in 0..alg.arrow_count() {
                if alg.arrow(ai).target == v {
                    span = span.hstack(x.action(ai));
                }
            }
            span.image_basis()
        })
        .collect()
}

/// The radical submodule with its inclusion.
pub fn radical_module<S: Scalar>(x: &Module<S>) -> (Module<S>, ModuleMap<S>) {
    let alg = x.algebra().clone();
    let bases = radical_bases(x);
    let dims: Vec<usize> = bases.iter().map(Mat::cols).collect();
    let action: Vec<Mat<S>> = (0..alg.arrow_count())
        .map(|ai| {
            let a = alg.arrow(ai);
            let pushed = x.action(ai).mul(&bases[a.source]);
            bases[a.target]
                .solve_matrix(&pushed)
                .expect("arrow action preserves the radical")
        })
        .collect();
    let rad = Module::new_unchecked(alg, dims, action);
    let incl = ModuleMap::new_unchecked(rad.clone(), x.clone(), bases);
    (rad, incl)
}

/// The socle (largest semisimple submodule) with its inclusion.
pub fn socle_module<S: Scalar>(x: &Module<S>) -> (Module<S>, ModuleMap<S>) {
    let alg = x.algebra().clone();
    let nv = alg.vertex_count();
    let bases: Vec<Mat<S>> = (0..nv)
        .map(|v| {
            let mut stacked = Mat::zeros(0, x.dim_at(v));
            for ai in 0..alg.arrow_count() {
                if alg.arrow(ai).source == v {
                    stacked = stacked.vstack(x.action(ai));
                }
            }
            if stacked.rows() == 0 {
                Mat::identity(x.dim_at(v))
            } else {
                stacked.kernel_basis()
            }
        })
        .collect();
    let dims: Vec<usize> = bases.iter().map(Mat::cols).collect();
    let soc = Module::with_zero_maps(alg, dims);
    let incl = ModuleMap::new_unchecked(soc.clone(), x.clone(), bases);
    (soc, incl)
}

/// Top, socle and radical in one pass.
pub fn top_radical_socle<S: Scalar>(x: &Module<S>) -> TopRadicalSocle {
    let rad = radical_bases(x);
    let top_dims: Vec<usize> =
        (0..x.algebra().vertex_count()).map(|v| x.dim_at(v) - rad[v].cols()).collect();
    let (soc, _) = socle_module(x);
    TopRadicalSocle {
        top_dims,
        socle_dims: soc.dims().to_vec(),
        radical_dims: rad.iter().map(Mat::cols).collect(),
    }
}

/// Dimension vectors of `x, rad x, rad^2 x, ...` down to (but excluding)
/// the zero module.
pub fn radical_series_dims<S: Scalar>(x: &Module<S>) -> Vec<Vec<usize>> {
    let mut series = Vec::new();
    let mut current = x.clone();
    while !current.is_zero() {
        series.push(current.dims().to_vec());
        current = radical_module(&current).0;
    }
    series
}

/// Dimension vectors of the ascending socle series `soc x ⊆ soc^2 x ⊆ ...`
/// up to and including the full module.
pub fn socle_series_dims<S: Scalar>(x: &Module<S>) -> Vec<Vec<usize>> {
    let mut series = Vec::new();
    let mut current = x.clone();
    let mut consumed = vec![0usize; x.algebra().vertex_count()];
    while !current.is_zero() {
        let (soc, incl) = socle_module(&current);
        for v in 0..consumed.len() {
            consumed[v] += soc.dim_at(v);
        }
        series.push(consumed.clone());
        let bases: Vec<Mat<S>> = (0..consumed.len()).map(|v| incl.part(v).clone()).collect();
        current = quotient_module(&current, &bases).0;
    }
    series
}

/// The projective cover `P(top x) -> x`.
///
/// One projective summand per top generator; the generators are the
/// canonical complement of the radical at each vertex.
pub fn projective_cover_map<S: Scalar>(x: &Module<S>) -> ModuleMap<S> {
    let alg = x.algebra().clone();
    let nv = alg.vertex_count();
    let rad = radical_bases(x);
    // Canonical top generators at each vertex: the section of the
    // quotient by the radical.
    let mut summands: Vec<Module<S>> = Vec::new();
    let mut generators: Vec<(usize, Vec<S>)> = Vec::new();
    for v in 0..nv {
        let q = quotient_by_subspace(x.dim_at(v), &rad[v]);
        for c in 0..q.section.cols() {
            summands.push(alg.projective(v));
            generators.push((v, q.section.col(c)));
        }
    }
    if summands.is_empty() {
        let zero = alg.zero_module();
        return ModuleMap::zero(&zero, x);
    }
    let refs: Vec<&Module<S>> = summands.iter().collect();
    let (p, _, _) = Module::direct_sum(&refs);
    // Map each summand P(v) -> x by pushing the generator along paths.
    let mut parts: Vec<Mat<S>> =
        (0..nv).map(|t| Mat::zeros(x.dim_at(t), 0)).collect();
    let mut summand_parts: Vec<Vec<Mat<S>>> = Vec::new();
    for (v, g) in &generators {
        let gvec = Mat::column_vector(g.clone());
        let mut sp = Vec::new();
        for t in 0..nv {
            let paths = alg.pair_basis(*v, t);
            let mut cols = Mat::zeros(x.dim_at(t), 0);
            for &p_idx in paths {
                let act = x.path_action(&alg.basis_paths()[p_idx]);
                cols = cols.hstack(&act.mul(&gvec));
            }
            sp.push(cols);
        }
        summand_parts.push(sp);
    }
    for t in 0..nv {
        for sp in &summand_parts {
            parts[t] = parts[t].hstack(&sp[t]);
        }
    }
    // Column order groups by summand within each vertex, matching the
    // direct-sum layout of `p`.
    let cover = ModuleMap::new_unchecked(p, x.clone(), parts);
    debug_assert!(cover.is_surjective(), "projective cover must be surjective");
    cover
}
