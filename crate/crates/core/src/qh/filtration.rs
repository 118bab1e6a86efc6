//! The canonical filtration of a module by standard-object layers.
//!
//! Peeling from the top: the largest vertex `s` (in the refining total
//! order) with `Hom(x, N(s)) != 0` contributes the trace of `M(s)` as
//! the largest layer, and the construction recurses on the quotient.
//! Layer multiplicities are certified against the brackets
//! `dim Hom(x, N(s))`; on quasi-hereditary inputs every layer is a power
//! of a standard object, and in general each layer is an essential
//! quotient of one.

use crate::linalg::Mat;
use crate::quiver::{
    cokernel_module, hom_basis, hom_dim, image_module, is_isomorphic, Module, ModuleMap,
};
use crate::scalar::Scalar;
use crate::Result;

use super::standard::{costandard_object, standard_object};

/// One layer `X_i / X_{i+1}` of the canonical filtration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationLayer {
    /// The vertex `s` of the standard object tracing out this layer.
    pub vertex: usize,
    /// The bracket `dim Hom(x, N(s))` of the filtered module.
    pub multiplicity: usize,
    /// Dimension vector of the layer.
    pub layer_dims: Vec<usize>,
    /// `[layer : L(s)]` equals the bracket.
    pub multiplicity_certified: bool,
    /// The layer is isomorphic to `M(s)` to the power of the bracket.
    pub is_standard_power: bool,
}

/// The canonical filtration `x = X_1 > X_2 > ... > 0`, listed top-down:
/// the first layer is the top subquotient `X_1 / X_2` and carries the
/// smallest surviving vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StdFiltration {
    /// Dimension vectors of the chain `X_1, X_2, ..., ending at zero
    /// (or at the residue when the peeling gets stuck).
    pub chain_dims: Vec<Vec<usize>>,
    /// Layers top-down, parallel to consecutive pairs of `chain_dims`.
    pub layers: Vec<FiltrationLayer>,
    /// The peeling exhausted the module.
    pub complete: bool,
    /// Dimension vector of the unfiltered residue (zero when complete).
    pub residue_dims: Vec<usize>,
}

/// Computes the canonical filtration of `x` by traces of standard
/// objects, peeling the largest contributing vertex first.
pub fn canonical_std_filtration<S: Scalar>(x: &Module<S>) -> Result<StdFiltration> {
    let alg = x.algebra().clone();
    let ord = alg.require_ordering()?;
    let nv = alg.vertex_count();
    let standards: Vec<Module<S>> = (0..nv)
        .map(|s| standard_object(&alg, s).map(|(m, _, _)| m))
        .collect::<Result<_>>()?;
    let costandards: Vec<Module<S>> = (0..nv)
        .map(|s| costandard_object(&alg, s).map(|(n, _, _)| n))
        .collect::<Result<_>>()?;

    let mut peels: Vec<FiltrationLayer> = Vec::new();
    let mut y = x.clone();
    let complete = loop {
        if y.is_zero() {
            break true;
        }
        let candidates: Vec<usize> =
            (0..nv).filter(|&t| hom_dim(&y, &costandards[t]) > 0).collect();
        let Some(s) = ord.largest(&candidates) else {
            break false;
        };
        let maps = hom_basis(&standards[s], &y);
        if maps.is_empty() {
            break false;
        }
        // The trace of M(s) in y: the image of all maps at once.
        let stacked_parts: Vec<Mat<S>> = (0..nv)
            .map(|v| {
                let mut m = Mat::zeros(y.dim_at(v), 0);
                for f in &maps {
                    m = m.hstack(f.part(v));
                }
                m
            })
            .collect();
        let source = standards[s].power(maps.len()).0;
        let evaluation = ModuleMap::new(source, y.clone(), stacked_parts)
            .expect("stacked hom-basis maps intertwine");
        let (trace, trace_incl, _) = image_module(&evaluation);
        let bracket = hom_dim(x, &costandards[s]);
        peels.push(FiltrationLayer {
            vertex: s,
            multiplicity: bracket,
            layer_dims: trace.dims().to_vec(),
            multiplicity_certified: trace.dim_at(s) == bracket,
            is_standard_power: is_isomorphic(&trace, &standards[s].power(bracket).0),
        });
        y = cokernel_module(&trace_incl).0;
    };

    let residue_dims = y.dims().to_vec();
    let layers: Vec<FiltrationLayer> = peels.into_iter().rev().collect();
    let mut chain_dims = vec![x.dims().to_vec()];
    let mut cur = x.dims().to_vec();
    for layer in &layers {
        for (c, l) in cur.iter_mut().zip(&layer.layer_dims) {
            *c -= l;
        }
        chain_dims.push(cur.clone());
    }
    Ok(StdFiltration { chain_dims, layers, complete, residue_dims })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn big_projective_peels_into_three_standards() {
        let alg = fixtures::fix_d3();
        let filt = canonical_std_filtration(&alg.projective(0)).unwrap();
        assert!(filt.complete);
        assert_eq!(
            filt.chain_dims,
            vec![vec![1, 1, 1], vec![0, 1, 1], vec![0, 0, 1], vec![0, 0, 0]]
        );
        let vertices: Vec<usize> = filt.layers.iter().map(|l| l.vertex).collect();
        assert_eq!(vertices, vec![0, 1, 2]);
        for layer in &filt.layers {
            assert_eq!(layer.multiplicity, 1);
            assert!(layer.multiplicity_certified);
            assert!(layer.is_standard_power);
        }
    }

    #[test]
    fn injective_at_the_top_vertex_peels_into_two_standards() {
        let alg = fixtures::fix_a2();
        let filt = canonical_std_filtration(&alg.injective(1)).unwrap();
        assert!(filt.complete);
        assert_eq!(filt.chain_dims, vec![vec![1, 1], vec![0, 1], vec![0, 0]]);
        let vertices: Vec<usize> = filt.layers.iter().map(|l| l.vertex).collect();
        assert_eq!(vertices, vec![0, 1]);
    }

    #[test]
    fn single_simple_is_one_layer() {
        let alg = fixtures::fix_a2();
        let filt = canonical_std_filtration(&alg.simple(1)).unwrap();
        assert!(filt.complete);
        assert_eq!(filt.layers.len(), 1);
        assert_eq!(filt.layers[0].vertex, 1);
        assert!(filt.layers[0].is_standard_power);
    }

    #[test]
    fn essential_quotient_layer_is_certified_but_not_a_power() {
        // Over the serial three-vertex algebra the top simple is an
        // essential quotient of its standard object, not the whole of it.
        let alg = fixtures::fix_a3();
        let filt = canonical_std_filtration(&alg.simple(2)).unwrap();
        assert!(filt.complete);
        assert_eq!(filt.layers.len(), 1);
        assert_eq!(filt.layers[0].vertex, 2);
        assert!(filt.layers[0].multiplicity_certified);
        assert!(!filt.layers[0].is_standard_power);
    }

    #[test]
    fn zero_module_filters_trivially() {
        let alg = fixtures::fix_a2();
        let filt = canonical_std_filtration(&alg.zero_module()).unwrap();
        assert!(filt.complete);
        assert!(filt.layers.is_empty());
        assert_eq!(filt.chain_dims, vec![vec![0, 0]]);
    }
}
