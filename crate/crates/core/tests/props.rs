//! Property-based invariants: exact linear algebra laws, extension-class
//! round trips, direct-sum symmetry, JSON round trips, and the graded
//! piece structure of the nodal sheaves.

use proptest::prelude::*;
use qhcat::fixtures::{fix_a2, fix_cycle, fix_d3_cover, random_module};
use qhcat::io::{module_from_json, module_to_json};
use qhcat::linalg::Mat;
use qhcat::nodal::{GradedSheaf, Support, Weight, W_X, W_Y};
use qhcat::quiver::{
    cokernel_module, hom_basis, image_module, is_isomorphic, kernel_module, Ext1, Module,
};
use qhcat::scalar::Scalar;
use qhcat::Q;

fn to_mat(rows: &[Vec<i64>]) -> Mat<Q> {
    Mat::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&e| Q::from_int(e)).collect())
            .collect(),
    )
}

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(-4i64..=4, c), r)
    })
}

proptest! {
    /// Reduced echelon form is idempotent and rank is transpose-stable.
    #[test]
    fn echelon_laws(rows in small_matrix()) {
        let m = to_mat(&rows);
        let r = m.rref().mat;
        prop_assert_eq!(r.rref().mat, r.clone());
        prop_assert_eq!(m.rank(), m.transpose().rank());
        prop_assert!(m.rank() <= m.rows().min(m.cols()));
    }

    /// The kernel basis is an honest basis of the kernel: the matrix
    /// kills it, its columns are independent, and its size matches the
    /// rank-nullity count.
    #[test]
    fn kernel_basis_laws(rows in small_matrix()) {
        let m = to_mat(&rows);
        let k = m.kernel_basis();
        prop_assert_eq!(k.cols(), m.cols() - m.rank());
        if k.cols() > 0 {
            prop_assert!(m.mul(&k).is_zero());
            prop_assert_eq!(k.rank(), k.cols());
        }
    }

    /// Solving a system built from a known solution succeeds and the
    /// returned solution actually solves it.
    #[test]
    fn solve_recovers_consistent_systems(
        rows in small_matrix(),
        secret in proptest::collection::vec(-4i64..=4, 5),
    ) {
        let m = to_mat(&rows);
        let s: Vec<Q> = secret.iter().take(m.cols()).map(|&e| Q::from_int(e)).collect();
        let rhs = m.mul(&Mat::column_vector(s));
        let sol = m.solve(&rhs).expect("consistent system must solve");
        prop_assert_eq!(m.mul(&sol), rhs);
    }

    /// An extension class survives the round trip through the realised
    /// short exact sequence, and nonzero classes give non-semisimple
    /// middles isomorphic to the projective.
    #[test]
    fn extension_class_round_trip(num in -20i64..=20, den in 1i64..=7) {
        let alg = fix_a2();
        let ext = Ext1::compute(&alg.simple(0), &alg.simple(1));
        let c = Q::new(num.into(), den.into());
        let ses = ext.extension_module(std::slice::from_ref(&c));
        prop_assert_eq!(ext.class_of(&ses).unwrap(), vec![c.clone()]);
        if num == 0 {
            prop_assert!(ses.mid().is_semisimple());
        } else {
            prop_assert!(is_isomorphic(ses.mid(), &alg.projective(0)));
        }
    }

    /// Direct sums commute up to isomorphism, and kernels, images and
    /// cokernels of an arbitrary hom satisfy rank-nullity vertexwise.
    #[test]
    fn module_arithmetic_laws(seed in 0u64..500) {
        let alg = fix_d3_cover();
        let x = random_module(&alg, seed);
        let y = random_module(&alg, seed.wrapping_add(1000));
        let (xy, _, _) = Module::direct_sum(&[&x, &y]);
        let (yx, _, _) = Module::direct_sum(&[&y, &x]);
        prop_assert!(is_isomorphic(&xy, &yx));

        for f in hom_basis(&x, &y).iter().take(3) {
            let (ker, _) = kernel_module(f);
            let (im, _, _) = image_module(f);
            let (coker, _) = cokernel_module(f);
            for v in 0..alg.vertex_count() {
                prop_assert_eq!(ker.dim_at(v) + im.dim_at(v), x.dim_at(v));
                prop_assert_eq!(im.dim_at(v) + coker.dim_at(v), y.dim_at(v));
            }
        }
    }

    /// Modules survive the JSON round trip, including over an algebra
    /// with relations.
    #[test]
    fn module_json_round_trip(seed in 0u64..500) {
        for alg in [fix_d3_cover(), fix_cycle()] {
            let x = random_module(&alg, seed);
            let text = module_to_json(&x);
            let back = module_from_json(&alg, &text).expect("emitted module re-parses");
            prop_assert_eq!(back, x);
        }
    }

    /// Graded pieces of every sheaf class are one-dimensional exactly on
    /// the predicted monomial rays and vanish elsewhere.
    #[test]
    fn graded_pieces_sit_on_the_monomial_rays(
        l0 in -20i64..=20, l1 in -20i64..=20,
        d0 in -8i64..=8, d1 in -8i64..=8,
        shift in -3i64..=3,
    ) {
        let lam = Weight(l0, l1);
        let mu = lam + Weight(d0, d1);
        // k * W_X = (-2k, -k); k * W_Y = (2k, -k), k >= 0.
        let on_x = d0 == 2 * d1 && d1 <= 0;
        let on_y = d0 == -2 * d1 && d1 <= 0;
        for (support, expected) in [
            (Support::Whole, on_x || on_y),
            (Support::BranchPlus, on_x),
            (Support::BranchMinus, on_y),
            (Support::Origin, d0 == 0 && d1 == 0),
        ] {
            let s = GradedSheaf::new(support, lam, shift);
            prop_assert_eq!(
                s.piece_dim(mu),
                usize::from(expected),
                "support {} at offset ({}, {})", support, d0, d1
            );
        }
    }

    /// A coordinate acts between two degrees exactly when both graded
    /// pieces are alive; multiplication never hits zero on this sheaf
    /// class except by leaving the support.
    #[test]
    fn coordinate_action_matches_piece_structure(
        l0 in -10i64..=10, l1 in -10i64..=10,
        d0 in -6i64..=6, d1 in -6i64..=6,
    ) {
        let lam = Weight(l0, l1);
        let mu = lam + Weight(d0, d1);
        for support in [Support::Whole, Support::BranchPlus, Support::BranchMinus, Support::Origin] {
            let s = GradedSheaf::new(support, lam, 0);
            for w in [W_X, W_Y] {
                prop_assert_eq!(
                    s.coordinate_acts(w, mu),
                    s.piece_dim(mu) == 1 && s.piece_dim(mu + w) == 1
                );
            }
        }
    }
}
