//! Structural diagnostics around the standard and costandard objects:
//! the decomposition of standard kernels and costandard cokernels into
//! simples predicted by first extensions, the agreement of simple-simple
//! extensions with hom spaces into those kernels, and the skew-degree
//! constraint on the extension quiver.

use std::sync::Arc;

use crate::error::Error;
use crate::quiver::{cokernel_module, hom_dim, kernel_module, Algebra, Ext1};
use crate::scalar::Scalar;
use crate::Result;

use super::standard::{costandard_object, standard_object};

/// The kernel of `M(s) -> L(s)` (or the cokernel of `L(s) -> N(s)`)
/// compared against the sum of simples predicted by first extensions
/// from strictly lower strata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelDecomposition {
    pub vertex: usize,
    /// Dimension vector of the kernel (resp. cokernel).
    pub dims: Vec<usize>,
    /// The kernel is a sum of simples.
    pub semisimple: bool,
    /// Predicted multiplicity of each simple: the relevant first
    /// extension dimension on strictly lower strata, zero elsewhere.
    pub predicted: Vec<usize>,
    /// Semisimple with exactly the predicted multiplicities.
    pub holds: bool,
}

/// Compares the radical of the standard object at `s` against the
/// predicted sum of `L(t)` with multiplicity `dim Ext^1(L(s), L(t))`
/// over vertices `t` in strata strictly below the stratum of `s`.
pub fn standard_kernel_decomposition<S: Scalar>(
    alg: &Arc<Algebra<S>>,
    s: usize,
) -> Result<KernelDecomposition> {
    let ord = alg.require_ordering()?;
    let (_, phi, _) = standard_object(alg, s)?;
    let (kernel, _) = kernel_module(&phi);
    let predicted: Vec<usize> = (0..alg.vertex_count())
        .map(|t| {
            if ord.stratum_lt(t, s) {
                Ext1::compute(&alg.simple(s), &alg.simple(t)).dim()
            } else {
                0
            }
        })
        .collect();
    let semisimple = kernel.is_semisimple();
    Ok(KernelDecomposition {
        vertex: s,
        holds: semisimple && kernel.dims() == predicted.as_slice(),
        dims: kernel.dims().to_vec(),
        semisimple,
        predicted,
    })
}

/// The dual comparison: the cokernel of `L(s) -> N(s)` against the sum
/// of `L(t)` with multiplicity `dim Ext^1(L(t), L(s))` over strictly
/// lower strata.
pub fn costandard_cokernel_decomposition<S: Scalar>(
    alg: &Arc<Algebra<S>>,
    s: usize,
) -> Result<KernelDecomposition> {
    let ord = alg.require_ordering()?;
    let (_, psi, _) = costandard_object(alg, s)?;
    let (cokernel, _) = cokernel_module(&psi);
    let predicted: Vec<usize> = (0..alg.vertex_count())
        .map(|t| {
            if ord.stratum_lt(t, s) {
                Ext1::compute(&alg.simple(t), &alg.simple(s)).dim()
            } else {
                0
            }
        })
        .collect();
    let semisimple = cokernel.is_semisimple();
    Ok(KernelDecomposition {
        vertex: s,
        holds: semisimple && cokernel.dims() == predicted.as_slice(),
        dims: cokernel.dims().to_vec(),
        semisimple,
        predicted,
    })
}

/// First extensions between the simple at `s` and every other simple,
/// cross-checked against hom spaces into the standard kernel and out of
/// the costandard cokernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ext1SupportReport {
    pub vertex: usize,
    /// `dim Ext^1(L(s), L(t))` by `t`.
    pub out_dims: Vec<usize>,
    /// `dim Ext^1(L(t), L(s))` by `t`.
    pub in_dims: Vec<usize>,
    /// Vertices with `out_dims > 0`.
    pub out_set: Vec<usize>,
    /// Vertices with `in_dims > 0`.
    pub in_set: Vec<usize>,
    /// `dim Hom(rad M(s), L(t))` by `t`.
    pub kernel_hom_dims: Vec<usize>,
    /// `dim Hom(L(t), N(s)/socle)` by `t`.
    pub cokernel_hom_dims: Vec<usize>,
    /// Vertices whose stratum does not lie strictly above the stratum of
    /// `s`; on these the extension dimensions must match the hom spaces.
    pub compared: Vec<usize>,
    /// The identification holds on every compared vertex.
    pub agrees: bool,
}

/// Computes the extension support of the simple at `s` in both
/// directions and verifies that, away from strictly higher strata, the
/// extensions are computed by hom spaces into the standard kernel and
/// from the costandard cokernel.
pub fn ext1_support<S: Scalar>(alg: &Arc<Algebra<S>>, s: usize) -> Result<Ext1SupportReport> {
    let ord = alg.require_ordering()?;
    let nv = alg.vertex_count();
    let (_, phi, _) = standard_object(alg, s)?;
    let (kernel, _) = kernel_module(&phi);
    let (_, psi, _) = costandard_object(alg, s)?;
    let (cokernel, _) = cokernel_module(&psi);
    let simple_s = alg.simple(s);
    let mut out_dims = Vec::with_capacity(nv);
    let mut in_dims = Vec::with_capacity(nv);
    let mut kernel_hom_dims = Vec::with_capacity(nv);
    let mut cokernel_hom_dims = Vec::with_capacity(nv);
    for t in 0..nv {
        let simple_t = alg.simple(t);
        out_dims.push(Ext1::compute(&simple_s, &simple_t).dim());
        in_dims.push(Ext1::compute(&simple_t, &simple_s).dim());
        kernel_hom_dims.push(hom_dim(&kernel, &simple_t));
        cokernel_hom_dims.push(hom_dim(&simple_t, &cokernel));
    }
    let compared: Vec<usize> = (0..nv).filter(|&t| !ord.stratum_lt(s, t)).collect();
    let agrees = compared
        .iter()
        .all(|&t| out_dims[t] == kernel_hom_dims[t] && in_dims[t] == cokernel_hom_dims[t]);
    Ok(Ext1SupportReport {
        vertex: s,
        out_set: (0..nv).filter(|&t| out_dims[t] > 0).collect(),
        in_set: (0..nv).filter(|&t| in_dims[t] > 0).collect(),
        out_dims,
        in_dims,
        kernel_hom_dims,
        cokernel_hom_dims,
        compared,
        agrees,
    })
}

/// A failed skew-degree condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewViolation {
    pub source: usize,
    pub target: usize,
    pub reason: String,
}

/// Outcome of the skew-degree check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewReport {
    pub violations: Vec<SkewViolation>,
    /// Number of vertex pairs carrying a first extension.
    pub checked_pairs: usize,
}

impl SkewReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks a skew-degree labeling `w` of the vertices: every first
/// extension `Ext^1(L(s), L(t)) != 0` must connect distinct,
/// closure-comparable strata and satisfy `w(t) = w(s) - 1`, every
/// composition factor `L(t)` of the standard kernel at `s` must satisfy
/// `w(t) = w(s) - 1`, and dually every factor of the costandard cokernel
/// must satisfy `w(t) = w(s) + 1`.
pub fn check_skew_constraint<S: Scalar>(
    alg: &Arc<Algebra<S>>,
    skdeg: &[i64],
) -> Result<SkewReport> {
    let ord = alg.require_ordering()?;
    let nv = alg.vertex_count();
    if skdeg.len() != nv {
        return Err(Error::input(format!(
            "skew labeling has {} entries for {} vertices",
            skdeg.len(),
            nv
        )));
    }
    let mut violations = Vec::new();
    let mut checked_pairs = 0usize;
    for s in 0..nv {
        for t in 0..nv {
            let d = Ext1::compute(&alg.simple(s), &alg.simple(t)).dim();
            if d == 0 {
                continue;
            }
            checked_pairs += 1;
            let (i, j) = (ord.stratum_of(s), ord.stratum_of(t));
            if i == j {
                violations.push(SkewViolation {
                    source: s,
                    target: t,
                    reason: "extension within a single stratum".to_string(),
                });
            } else if !ord.stratum_below(i, j) && !ord.stratum_below(j, i) {
                violations.push(SkewViolation {
                    source: s,
                    target: t,
                    reason: "strata are not closure-comparable".to_string(),
                });
            }
            if skdeg[t] != skdeg[s] - 1 {
                violations.push(SkewViolation {
                    source: s,
                    target: t,
                    reason: format!(
                        "skew degree must drop by one along an extension: w('{}') = {}, w('{}') = {}",
                        alg.vertex_label(s),
                        skdeg[s],
                        alg.vertex_label(t),
                        skdeg[t]
                    ),
                });
            }
        }
    }
    for s in 0..nv {
        let (_, phi, _) = standard_object(alg, s)?;
        let (kernel, _) = kernel_module(&phi);
        let (_, psi, _) = costandard_object(alg, s)?;
        let (cokernel, _) = cokernel_module(&psi);
        for t in 0..nv {
            if kernel.dim_at(t) > 0 && skdeg[t] != skdeg[s] - 1 {
                violations.push(SkewViolation {
                    source: s,
                    target: t,
                    reason: format!(
                        "factor L('{}') of the standard kernel at '{}' has skew degree {}, expected {}",
                        alg.vertex_label(t),
                        alg.vertex_label(s),
                        skdeg[t],
                        skdeg[s] - 1
                    ),
                });
            }
            if cokernel.dim_at(t) > 0 && skdeg[t] != skdeg[s] + 1 {
                violations.push(SkewViolation {
                    source: s,
                    target: t,
                    reason: format!(
                        "factor L('{}') of the costandard cokernel at '{}' has skew degree {}, expected {}",
                        alg.vertex_label(t),
                        alg.vertex_label(s),
                        skdeg[t],
                        skdeg[s] + 1
                    ),
                });
            }
        }
    }
    Ok(SkewReport { violations, checked_pairs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn reversed_arrow_standard_kernel_is_the_predicted_simple() {
        let alg = fixtures::fix_a2r();
        let d = standard_kernel_decomposition(&alg, 1).unwrap();
        assert_eq!(d.dims, vec![1, 0]);
        assert!(d.semisimple);
        assert_eq!(d.predicted, vec![1, 0]);
        assert!(d.holds);
    }

    #[test]
    fn simple_standard_has_zero_kernel() {
        let alg = fixtures::fix_a2();
        let d = standard_kernel_decomposition(&alg, 1).unwrap();
        assert_eq!(d.dims, vec![0, 0]);
        assert!(d.holds);
    }

    #[test]
    fn serial_standard_kernel_is_not_semisimple() {
        let alg = fixtures::fix_a3();
        let d = standard_kernel_decomposition(&alg, 2).unwrap();
        assert_eq!(d.dims, vec![1, 1, 0]);
        assert!(!d.semisimple);
        assert!(!d.holds);
    }

    #[test]
    fn costandard_cokernel_matches_incoming_extensions() {
        let alg = fixtures::fix_a2();
        let d = costandard_cokernel_decomposition(&alg, 1).unwrap();
        assert_eq!(d.dims, vec![1, 0]);
        assert_eq!(d.predicted, vec![1, 0]);
        assert!(d.holds);
    }

    #[test]
    fn ext_support_of_the_two_vertex_algebra() {
        let alg = fixtures::fix_a2();
        let r = ext1_support(&alg, 0).unwrap();
        assert_eq!(r.out_set, vec![1]);
        assert!(r.in_set.is_empty());
        assert_eq!(r.compared, vec![0]);
        assert!(r.agrees);
        let r = ext1_support(&alg, 1).unwrap();
        assert!(r.out_set.is_empty());
        assert_eq!(r.in_set, vec![0]);
        assert_eq!(r.compared, vec![0, 1]);
        assert_eq!(r.cokernel_hom_dims, vec![1, 0]);
        assert!(r.agrees);
    }

    #[test]
    fn ext_support_sees_through_the_serial_kernel() {
        let alg = fixtures::fix_a3();
        let r = ext1_support(&alg, 2).unwrap();
        assert_eq!(r.out_dims, vec![0, 1, 0]);
        assert_eq!(r.kernel_hom_dims, vec![0, 1, 0]);
        assert_eq!(r.compared, vec![0, 1, 2]);
        assert!(r.agrees);
    }

    #[test]
    fn consistent_labeling_of_the_two_vertex_algebra_passes() {
        let alg = fixtures::fix_a2();
        let report = check_skew_constraint(&alg, &[4, 3]).unwrap();
        assert!(report.holds(), "violations: {:?}", report.violations);
        assert_eq!(report.checked_pairs, 1);
    }

    #[test]
    fn serial_algebra_violates_for_every_labeling() {
        let alg = fixtures::fix_a3();
        // A labeling satisfying both arrow constraints still violates
        // kernel purity; inconsistent labelings violate the arrows.
        for labeling in [[0, 1, 2], [0, 0, 0], [5, 3, 1]] {
            let report = check_skew_constraint(&alg, &labeling).unwrap();
            assert!(!report.holds(), "labeling {labeling:?}");
        }
        let report = check_skew_constraint(&alg, &[0, 1, 2]).unwrap();
        assert_eq!(report.violations.len(), 1);
        assert_eq!(report.violations[0].source, 2);
        assert_eq!(report.violations[0].target, 0);
    }

    #[test]
    fn extension_within_a_stratum_is_flagged() {
        let alg = fixtures::fix_stratum_pair();
        let report = check_skew_constraint(&alg, &[0, -1]).unwrap();
        assert_eq!(report.violations.len(), 1);
        assert!(report.violations[0].reason.contains("single stratum"));
    }

    #[test]
    fn wrong_labeling_length_is_an_input_error() {
        let alg = fixtures::fix_a2();
        assert!(check_skew_constraint(&alg, &[0]).is_err());
    }
}
