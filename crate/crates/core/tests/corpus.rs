//! Randomized corpus checks: the canonical filtration certificates and
//! the maximal-vertex equivalence on one hundred seeded modules per
//! suite algebra.

use qhcat::fixtures::{
    fix_a2, fix_a2r, fix_a3, fix_d3, fix_d3_cover, fix_w, random_module,
};
use qhcat::qh::{canonical_std_filtration, check_maxs_equivalence};
use qhcat::quiver::Algebra;
use qhcat::Q;
use std::sync::Arc;

fn suite() -> Vec<Arc<Algebra<Q>>> {
    vec![fix_a2(), fix_a2r(), fix_d3(), fix_d3_cover(), fix_a3(), fix_w()]
}

/// The canonical filtration exhausts every module, its layer dimensions
/// add up to the module vertexwise, and every layer's multiplicity
/// certificate (trace dimension at the peeled vertex equals the
/// costandard bracket) holds.
#[test]
fn filtration_certificates_hold_on_a_hundred_modules_per_algebra() {
    for alg in suite() {
        let nv = alg.vertex_count();
        for seed in 0..100u64 {
            let x = random_module(&alg, seed);
            let filt = canonical_std_filtration(&x).unwrap();
            assert!(filt.complete, "incomplete at seed {seed}");
            assert!(filt.residue_dims.iter().all(|&d| d == 0));

            let mut total = vec![0usize; nv];
            for layer in &filt.layers {
                assert!(
                    layer.multiplicity_certified,
                    "multiplicity certificate fails at seed {seed}: {layer:?}"
                );
                for (t, l) in total.iter_mut().zip(&layer.layer_dims) {
                    *t += l;
                }
            }
            assert_eq!(total, x.dims(), "layer dims not additive at seed {seed}");

            // The recorded chain telescopes from the module down to zero.
            assert_eq!(filt.chain_dims.first().map(Vec::as_slice), Some(x.dims()));
            assert_eq!(
                filt.chain_dims.last().map(Vec::as_slice),
                Some(vec![0; nv].as_slice())
            );
            assert_eq!(filt.chain_dims.len(), filt.layers.len() + 1);
        }
    }
}

/// The three descriptions of "all composition factors at or before `s`"
/// (factor support, vanishing of maps from higher standards, vanishing
/// of maps to higher costandards) agree for every vertex on the corpus.
#[test]
fn maximal_vertex_equivalence_holds_on_the_corpus() {
    for alg in suite() {
        for seed in 0..100u64 {
            let x = random_module(&alg, seed);
            for s in 0..alg.vertex_count() {
                let r = check_maxs_equivalence(&x, s).unwrap();
                assert!(
                    r.agree,
                    "three-way disagreement at seed {seed}, vertex {}: {r:?}",
                    alg.vertex_label(s)
                );
            }
        }
    }
}
