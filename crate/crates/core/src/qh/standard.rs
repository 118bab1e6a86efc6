//! Standard and costandard objects over an algebra with ordered simples,
//! together with the multiplicity brackets, the quasi-hereditary test,
//! the maximal-vertex equivalence, and the reciprocity table.
//!
//! The standard object `M(s)` is the largest quotient of the projective
//! `P(s)` whose composition factors sit at or before `s` in the refining
//! total order; dually the costandard object `N(s)` is the largest such
//! submodule of the injective `I(s)`.

use std::sync::Arc;

use crate::linalg::Mat;
use crate::quiver::{
    cokernel_module, hom_dim, largest_quotient_in, largest_sub_in, radical_module, Algebra,
    Ext1, Module, ModuleMap,
};
use crate::scalar::Scalar;
use crate::Result;

/// The standard object at `s`: the largest quotient of `P(s)` with all
/// composition factors at or before `s` in the total order.  Returns the
/// module, the induced surjection onto the simple `L(s)`, and whether the
/// multiplicity `[M(s) : L(s)]` equals one.
pub fn standard_object<S: Scalar>(
    alg: &Arc<Algebra<S>>,
    s: usize,
) -> Result<(Module<S>, ModuleMap<S>, bool)> {
    let ord = alg.require_ordering()?;
    let allowed = ord.order_prefix(s);
    let (m, _) = largest_quotient_in(&alg.projective(s), &allowed);
    let phi = head_map(&m, s);
    let valid = m.dim_at(s) == 1;
    Ok((m, phi, valid))
}

/// The costandard object at `s`: the largest submodule of `I(s)` with all
/// composition factors at or before `s` in the total order.  Returns the
/// module, the inclusion of the simple socle `L(s)`, and whether the
/// multiplicity `[N(s) : L(s)]` equals one.
pub fn costandard_object<S: Scalar>(
    alg: &Arc<Algebra<S>>,
    s: usize,
) -> Result<(Module<S>, ModuleMap<S>, bool)> {
    let ord = alg.require_ordering()?;
    let allowed = ord.order_prefix(s);
    let (n, _) = largest_sub_in(&alg.injective(s), &allowed);
    let psi = socle_map(&n, s);
    let valid = n.dim_at(s) == 1;
    Ok((n, psi, valid))
}

/// The projection of a cyclic module generated at `s` onto its simple
/// top `L(s)`.
fn head_map<S: Scalar>(m: &Module<S>, s: usize) -> ModuleMap<S> {
    let alg = m.algebra().clone();
    let (_, rad_incl) = radical_module(m);
    let (top, proj) = cokernel_module(&rad_incl);
    assert_eq!(
        top.dims(),
        alg.simple(s).dims(),
        "quotient of a projective has simple top at its generating vertex"
    );
    ModuleMap::new(m.clone(), alg.simple(s), proj.parts().to_vec())
        .expect("projection onto the top intertwines")
}

/// The inclusion of the simple socle `L(s)` into a submodule of `I(s)`.
fn socle_map<S: Scalar>(n: &Module<S>, s: usize) -> ModuleMap<S> {
    let alg = n.algebra().clone();
    let mut stack = Mat::zeros(0, n.dim_at(s));
    for ai in 0..alg.arrow_count() {
        if alg.arrow(ai).source == s {
            stack = stack.vstack(n.action(ai));
        }
    }
    let ker = stack.kernel_basis();
    assert!(
        ker.cols() >= 1,
        "a nonzero submodule of an injective meets the socle at its vertex"
    );
    let parts: Vec<Mat<S>> = (0..alg.vertex_count())
        .map(|v| {
            if v == s {
                Mat::column_vector(ker.col(0))
            } else {
                Mat::zeros(n.dim_at(v), 0)
            }
        })
        .collect();
    ModuleMap::new(alg.simple(s), n.clone(), parts)
        .expect("socle vector spans a simple submodule")
}

/// Filtration brackets of `x`: for each vertex `s`, the standard bracket
/// `<x : M(s)> = dim Hom(x, N(s))` and the costandard bracket
/// `<x : N(s)> = dim Hom(M(s), x)`.
pub fn bracket_multiplicities<S: Scalar>(x: &Module<S>) -> Result<(Vec<usize>, Vec<usize>)> {
    let alg = x.algebra().clone();
    alg.require_ordering()?;
    let mut std_brackets = Vec::with_capacity(alg.vertex_count());
    let mut costd_brackets = Vec::with_capacity(alg.vertex_count());
    for s in 0..alg.vertex_count() {
        let (n, _, _) = costandard_object(&alg, s)?;
        let (m, _, _) = standard_object(&alg, s)?;
        std_brackets.push(hom_dim(x, &n));
        costd_brackets.push(hom_dim(&m, x));
    }
    Ok((std_brackets, costd_brackets))
}

/// Outcome of the quasi-hereditary test.
#[derive(Clone, Debug)]
pub struct QuasiHereditaryReport {
    /// All multiplicity and vanishing conditions hold.
    pub holds: bool,
    /// Dimension vectors of the standard objects, by vertex.
    pub standard_dims: Vec<Vec<usize>>,
    /// Dimension vectors of the costandard objects, by vertex.
    pub costandard_dims: Vec<Vec<usize>>,
    /// Human-readable descriptions of every failed condition.
    pub failures: Vec<String>,
}

/// Tests whether the ordered algebra is quasi-hereditary: each standard
/// and costandard object contains its own simple exactly once, and for
/// every pair `(s, t)` whose strata are unrelated in the closure order —
/// or equal with `s` and `t` distinct — the spaces `Hom(M(s), L(t))`,
/// `Ext^1(M(s), L(t))`, `Hom(L(t), N(s))` and `Ext^1(L(t), N(s))` all
/// vanish.
pub fn check_quasihereditary<S: Scalar>(alg: &Arc<Algebra<S>>) -> Result<QuasiHereditaryReport> {
    let ord = alg.require_ordering()?;
    let nv = alg.vertex_count();
    let mut failures = Vec::new();
    let mut standards = Vec::with_capacity(nv);
    let mut costandards = Vec::with_capacity(nv);
    for s in 0..nv {
        let (m, _, m_valid) = standard_object(alg, s)?;
        let (n, _, n_valid) = costandard_object(alg, s)?;
        if !m_valid {
            failures.push(format!(
                "standard object at '{}' contains its simple {} times",
                alg.vertex_label(s),
                m.dim_at(s)
            ));
        }
        if !n_valid {
            failures.push(format!(
                "costandard object at '{}' contains its simple {} times",
                alg.vertex_label(s),
                n.dim_at(s)
            ));
        }
        standards.push(m);
        costandards.push(n);
    }
    for s in 0..nv {
        for t in 0..nv {
            let same = ord.stratum_of(s) == ord.stratum_of(t);
            let applies = !ord.stratum_leq(s, t) || (same && s != t);
            if !applies {
                continue;
            }
            let simple_t = alg.simple(t);
            let pair = |kind: &str, dim: usize| {
                format!(
                    "{kind} between '{}' and '{}' has dimension {dim}",
                    alg.vertex_label(s),
                    alg.vertex_label(t),
                )
            };
            let d = hom_dim(&standards[s], &simple_t);
            if d != 0 {
                failures.push(pair("Hom(standard, simple)", d));
            }
            let d = Ext1::compute(&standards[s], &simple_t).dim();
            if d != 0 {
                failures.push(pair("Ext1(standard, simple)", d));
            }
            let d = hom_dim(&simple_t, &costandards[s]);
            if d != 0 {
                failures.push(pair("Hom(simple, costandard)", d));
            }
            let d = Ext1::compute(&simple_t, &costandards[s]).dim();
            if d != 0 {
                failures.push(pair("Ext1(simple, costandard)", d));
            }
        }
    }
    Ok(QuasiHereditaryReport {
        holds: failures.is_empty(),
        standard_dims: standards.iter().map(|m| m.dims().to_vec()).collect(),
        costandard_dims: costandards.iter().map(|n| n.dims().to_vec()).collect(),
        failures,
    })
}

/// The three equivalent descriptions of "every simple constituent of `x`
/// sits at or before `s`", evaluated independently.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxsEquivalenceReport {
    pub vertex: usize,
    /// Every composition factor of `x` lies in the order prefix of `s`.
    pub factors_in_prefix: bool,
    /// `Hom(M(t), x) = 0` for every `t` after `s` in the total order.
    pub no_maps_from_higher_standards: bool,
    /// `Hom(x, N(t)) = 0` for every `t` after `s` in the total order.
    pub no_maps_to_higher_costandards: bool,
    /// The three conditions agree.
    pub agree: bool,
}

/// Evaluates the three conditions of the maximal-vertex equivalence for
/// `x` at `s` and reports whether they agree.
pub fn check_maxs_equivalence<S: Scalar>(
    x: &Module<S>,
    s: usize,
) -> Result<MaxsEquivalenceReport> {
    let alg = x.algebra().clone();
    let ord = alg.require_ordering()?;
    let above = ord.order_above(s);
    let factors_in_prefix = above.iter().all(|&t| x.dim_at(t) == 0);
    let mut no_from = true;
    let mut no_to = true;
    for &t in &above {
        let (m, _, _) = standard_object(&alg, t)?;
        let (n, _, _) = costandard_object(&alg, t)?;
        if hom_dim(&m, x) != 0 {
            no_from = false;
        }
        if hom_dim(x, &n) != 0 {
            no_to = false;
        }
    }
    Ok(MaxsEquivalenceReport {
        vertex: s,
        factors_in_prefix,
        no_maps_from_higher_standards: no_from,
        no_maps_to_higher_costandards: no_to,
        agree: factors_in_prefix == no_from && no_from == no_to,
    })
}

/// One row of the reciprocity table, indexed by the projective `P(t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReciprocityRow {
    /// The vertex `t` of the projective.
    pub vertex: usize,
    /// Certified standard-layer counts of `M(s)` in the canonical
    /// filtration of `P(t)`, indexed by `s`.
    pub filtration_multiplicities: Vec<usize>,
    /// The brackets `dim Hom(P(t), N(s))`, indexed by `s`.
    pub hom_brackets: Vec<usize>,
    /// The composition multiplicities `[N(s) : L(t)]`, indexed by `s`.
    pub costandard_factors: Vec<usize>,
    /// All three vectors agree and every layer was certified.
    pub matches: bool,
}

/// Builds the reciprocity table: for every pair `(t, s)` the multiplicity
/// of the standard `M(s)` in the canonical filtration of `P(t)` is
/// compared against the bracket `dim Hom(P(t), N(s))` and against the
/// composition multiplicity `[N(s) : L(t)]`.  Returns the rows (one per
/// projective) and whether every row matches.
pub fn reciprocity_table<S: Scalar>(
    alg: &Arc<Algebra<S>>,
) -> Result<(Vec<ReciprocityRow>, bool)> {
    let nv = alg.vertex_count();
    alg.require_ordering()?;
    let costandards: Vec<Module<S>> = (0..nv)
        .map(|s| costandard_object(alg, s).map(|(n, _, _)| n))
        .collect::<Result<_>>()?;
    let mut rows = Vec::with_capacity(nv);
    let mut all = true;
    for t in 0..nv {
        let p = alg.projective(t);
        let filt = super::filtration::canonical_std_filtration(&p)?;
        let mut mults = vec![0usize; nv];
        let mut certified = filt.complete;
        for layer in &filt.layers {
            mults[layer.vertex] += layer.multiplicity;
            certified &= layer.multiplicity_certified;
        }
        let hom_brackets: Vec<usize> = costandards.iter().map(|n| hom_dim(&p, n)).collect();
        let costandard_factors: Vec<usize> =
            costandards.iter().map(|n| n.dim_at(t)).collect();
        let matches = certified && mults == hom_brackets && mults == costandard_factors;
        all &= matches;
        rows.push(ReciprocityRow {
            vertex: t,
            filtration_multiplicities: mults,
            hom_brackets,
            costandard_factors,
            matches,
        });
    }
    Ok((rows, all))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn standards_of_the_two_vertex_algebra_are_simple() {
        let alg = fixtures::fix_a2();
        let (ma, phi, valid) = standard_object(&alg, 0).unwrap();
        assert_eq!(ma.dims(), &[1, 0]);
        assert!(valid);
        assert!(phi.is_isomorphism());
        let (mb, _, valid) = standard_object(&alg, 1).unwrap();
        assert_eq!(mb.dims(), &[0, 1]);
        assert!(valid);
    }

    #[test]
    fn costandard_at_the_top_vertex_is_the_full_injective() {
        let alg = fixtures::fix_a2();
        let (na, _, valid) = costandard_object(&alg, 0).unwrap();
        assert_eq!(na.dims(), &[1, 0]);
        assert!(valid);
        let (nb, psi, valid) = costandard_object(&alg, 1).unwrap();
        assert_eq!(nb.dims(), &[1, 1]);
        assert!(valid);
        assert!(psi.is_injective());
    }

    #[test]
    fn reversed_arrow_makes_the_top_standard_projective() {
        let alg = fixtures::fix_a2r();
        let (mt, _, valid) = standard_object(&alg, 1).unwrap();
        assert_eq!(mt.dims(), &[1, 1]);
        assert!(valid);
        let (nt, _, _) = costandard_object(&alg, 1).unwrap();
        assert_eq!(nt.dims(), &[0, 1]);
    }

    #[test]
    fn three_vertex_costandard_dims() {
        let alg = fixtures::fix_d3();
        // Vertices o, p, m; arrows o -> p and o -> m.
        let (nm, _, _) = costandard_object(&alg, 2).unwrap();
        assert_eq!(nm.dims(), &[1, 0, 1]);
        let (np, _, _) = costandard_object(&alg, 1).unwrap();
        assert_eq!(np.dims(), &[1, 1, 0]);
        let (no, _, _) = costandard_object(&alg, 0).unwrap();
        assert_eq!(no.dims(), &[1, 0, 0]);
    }

    #[test]
    fn fixture_algebras_are_quasihereditary() {
        for alg in [fixtures::fix_a2(), fixtures::fix_a2r(), fixtures::fix_d3(), fixtures::fix_a3()]
        {
            let report = check_quasihereditary(&alg).unwrap();
            assert!(report.holds, "failures: {:?}", report.failures);
        }
    }

    #[test]
    fn maxs_equivalence_on_simple_and_projective() {
        let alg = fixtures::fix_a2();
        let r = check_maxs_equivalence(&alg.simple(0), 0).unwrap();
        assert!(r.factors_in_prefix);
        assert!(r.no_maps_from_higher_standards);
        assert!(r.no_maps_to_higher_costandards);
        assert!(r.agree);
        let r = check_maxs_equivalence(&alg.projective(0), 0).unwrap();
        assert!(!r.factors_in_prefix);
        assert!(!r.no_maps_from_higher_standards);
        assert!(!r.no_maps_to_higher_costandards);
        assert!(r.agree);
    }

    #[test]
    fn brackets_of_projective_and_simple() {
        let alg = fixtures::fix_a2();
        let (std_b, costd_b) = bracket_multiplicities(&alg.projective(0)).unwrap();
        assert_eq!(std_b, vec![1, 1]);
        // P(a) coincides with the costandard N(b), so its costandard
        // bracket sees one copy of N(b) and none of N(a).
        assert_eq!(costd_b, vec![0, 1]);
        let (std_b, _) = bracket_multiplicities(&alg.simple(1)).unwrap();
        assert_eq!(std_b, vec![0, 1]);
    }

    #[test]
    fn reciprocity_on_the_two_vertex_algebra() {
        let alg = fixtures::fix_a2();
        let (rows, pass) = reciprocity_table(&alg).unwrap();
        assert!(pass);
        assert_eq!(rows[0].filtration_multiplicities, vec![1, 1]);
        assert_eq!(rows[0].costandard_factors, vec![1, 1]);
        assert_eq!(rows[1].filtration_multiplicities, vec![0, 1]);
        assert_eq!(rows[1].hom_brackets, vec![0, 1]);
    }

    #[test]
    fn reciprocity_on_the_reversed_and_serial_fixtures() {
        for alg in [fixtures::fix_a2r(), fixtures::fix_a3()] {
            let (rows, pass) = reciprocity_table(&alg).unwrap();
            assert!(pass, "rows: {rows:?}");
        }
        let (rows, pass) = reciprocity_table(&fixtures::fix_d3()).unwrap();
        assert!(pass);
        // The big projective at the closed vertex carries one layer of
        // each standard.
        assert_eq!(rows[0].filtration_multiplicities, vec![1, 1, 1]);
    }

    #[test]
    fn hom_between_standard_and_costandard_is_diagonal() {
        let alg = fixtures::fix_d3();
        for s in 0..3 {
            for t in 0..3 {
                let (m, _, _) = standard_object(&alg, t).unwrap();
                let (n, _, _) = costandard_object(&alg, s).unwrap();
                let expected = usize::from(s == t);
                assert_eq!(hom_dim(&m, &n), expected, "s={s} t={t}");
            }
        }
    }

    #[test]
    fn missing_ordering_is_a_precondition_error() {
        let alg = fixtures::fix_unordered();
        assert!(standard_object(&alg, 0).is_err());
    }
}
