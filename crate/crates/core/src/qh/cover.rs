//! Stratified construction of indecomposable projective covers.
//!
//! The cover of `L(s)` is built level by level along the strata
//! sequence: the base level is the standard object at `s` over the
//! closed union containing `s`; each later level re-embeds the previous
//! cover, extends it universally by the new open-stratum simples, and
//! corrects by a universal extension against the closed simples.  Every
//! level assembles and validates the full ladder of exact sequences
//! relating the correction to the standard objects of the open stratum,
//! and the final candidate is certified projective a posteriori.
//!
//! Injective hulls run the same construction over the opposite algebra
//! and dualise the outcome; a generic universal-extension iteration
//! provides an independent cross-check.

use std::sync::Arc;

use crate::error::Error;
use crate::quiver::{
    factor_through, hom_dim, kernel_module, top_radical_socle, universal_extension, Algebra,
    ClosedRestriction, Ext1, Module, ModuleMap, ShortExactSeq,
};
use crate::scalar::Scalar;
use crate::Result;

use super::standard::standard_object;
use super::structure::standard_kernel_decomposition;

/// One named verification inside a level of the construction.
#[derive(Clone, Debug)]
pub struct CoverCheck {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

/// The validated exact sequences of one inductive step.  Writing `P'`
/// for the re-embedded previous cover, `S` for the open-socle sum, `Q`
/// for the universal extension of `P'` by `S`, `R` for the closed
/// correction sum, `P` for the new cover, `D` for the kernel of
/// `P -> P'`, `M` for the standard sum of the open stratum, `K` for the
/// kernel of `M -> S` and `J` for the kernel of `M -> D`:
#[derive(Clone, Debug)]
pub struct CoverSequences<S: Scalar> {
    /// `0 -> S -> Q -> P' -> 0`
    pub socle_seq: ShortExactSeq<S>,
    /// `0 -> R -> P -> Q -> 0`
    pub correction_seq: ShortExactSeq<S>,
    /// `0 -> R -> D -> S -> 0`
    pub preimage_seq: ShortExactSeq<S>,
    /// `0 -> D -> P -> P' -> 0`
    pub kernel_seq: ShortExactSeq<S>,
    /// `0 -> K -> M -> S -> 0`
    pub standard_seq: ShortExactSeq<S>,
    /// `0 -> J -> K -> R -> 0`
    pub excess_seq: ShortExactSeq<S>,
    /// `0 -> J -> M -> D -> 0`
    pub lift_seq: ShortExactSeq<S>,
}

/// The modules and multiplicity tables of the last inductive step, over
/// the full algebra.  Vertex indices in the tables are ambient.
#[derive(Clone, Debug)]
pub struct CoverDiagram<S: Scalar> {
    /// The previous-level cover, re-embedded.
    pub previous: Module<S>,
    /// The sum of open-stratum simples extending it.
    pub open_socle: Module<S>,
    /// The universal extension of `previous` by `open_socle`.
    pub extension: Module<S>,
    /// The sum of closed simples correcting the extension.
    pub correction: Module<S>,
    /// The new cover candidate.
    pub cover: Module<S>,
    /// The kernel of `cover -> previous` (the preimage of the socle sum).
    pub socle_preimage: Module<S>,
    /// The sum of open-stratum standard objects matching `open_socle`.
    pub standard_sum: Module<S>,
    /// The kernel of `standard_sum -> open_socle`.
    pub standard_kernel: Module<S>,
    /// The kernel of the lift `standard_sum -> socle_preimage`.
    pub excess: Module<S>,
    /// `(vertex, dim Ext^1(previous, L(t)))` over the open stratum.
    pub socle_table: Vec<(usize, usize)>,
    /// `(vertex, dim Ext^1(extension, L(t')))` over the closed part.
    pub correction_table: Vec<(usize, usize)>,
    /// `(vertex, dim Ext^1(open_socle, L(t')))` over the closed part.
    pub socle_ext_table: Vec<(usize, usize)>,
    /// Entrywise difference of the two tables above.
    pub excess_table: Vec<(usize, usize)>,
    pub sequences: CoverSequences<S>,
}

/// Checks and tables of one level, with ambient vertex indices.
#[derive(Clone, Debug)]
pub struct CoverDiagnostic {
    /// Number of strata included at this level.
    pub level: usize,
    /// Ambient vertices of the open stratum of this level.
    pub open_stratum: Vec<usize>,
    pub checks: Vec<CoverCheck>,
    pub socle_table: Vec<(usize, usize)>,
    pub correction_table: Vec<(usize, usize)>,
    pub socle_ext_table: Vec<(usize, usize)>,
    pub excess_table: Vec<(usize, usize)>,
}

impl CoverDiagnostic {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// A failed purity certificate, by vertex label.
#[derive(Clone, Debug)]
pub struct PurityFailure {
    /// The simple concerned.
    pub vertex: String,
    /// Name of the failed certificate.
    pub check: String,
    pub detail: String,
    /// Surviving dimensions by vertex label.
    pub table: Vec<(String, usize)>,
}

/// Outcome of the stratified construction.
#[derive(Clone, Debug)]
pub enum CoverOutcome<S: Scalar> {
    /// The candidate passed every final certificate.
    Cover {
        cover: Module<S>,
        diagram: CoverDiagram<S>,
        levels: Vec<CoverDiagnostic>,
        /// Non-fatal per-level failures (the construction still
        /// terminated, but some structural prediction did not hold).
        warnings: Vec<PurityFailure>,
    },
    /// A final certificate failed; the candidate is returned with the
    /// structured report instead of being passed off as a cover.
    Impure {
        candidate: Module<S>,
        failure: PurityFailure,
        diagram: CoverDiagram<S>,
        levels: Vec<CoverDiagnostic>,
        warnings: Vec<PurityFailure>,
    },
}

impl<S: Scalar> CoverOutcome<S> {
    pub fn is_cover(&self) -> bool {
        matches!(self, CoverOutcome::Cover { .. })
    }

    /// The verified cover, when all certificates passed.
    pub fn cover(&self) -> Option<&Module<S>> {
        match self {
            CoverOutcome::Cover { cover, .. } => Some(cover),
            CoverOutcome::Impure { .. } => None,
        }
    }

    /// The constructed module, verified or not.
    pub fn module(&self) -> &Module<S> {
        match self {
            CoverOutcome::Cover { cover, .. } => cover,
            CoverOutcome::Impure { candidate, .. } => candidate,
        }
    }

    pub fn failure(&self) -> Option<&PurityFailure> {
        match self {
            CoverOutcome::Cover { .. } => None,
            CoverOutcome::Impure { failure, .. } => Some(failure),
        }
    }

    pub fn diagram(&self) -> &CoverDiagram<S> {
        match self {
            CoverOutcome::Cover { diagram, .. } | CoverOutcome::Impure { diagram, .. } => diagram,
        }
    }

    pub fn levels(&self) -> &[CoverDiagnostic] {
        match self {
            CoverOutcome::Cover { levels, .. } | CoverOutcome::Impure { levels, .. } => levels,
        }
    }

    pub fn warnings(&self) -> &[PurityFailure] {
        match self {
            CoverOutcome::Cover { warnings, .. } | CoverOutcome::Impure { warnings, .. } => {
                warnings
            }
        }
    }
}

/// Builds the projective cover of `L(s)` along the strata sequence,
/// validating the full ladder of exact sequences at each level and
/// certifying projectivity of the result a posteriori.
///
/// Preconditions: the algebra carries an ordering and every stratum is
/// internally extension-free.  A failed final certificate returns
/// [`CoverOutcome::Impure`]; a structural collapse on the way (possible
/// only when the ordering is far from quasi-hereditary) is a validation
/// error.
pub fn projective_cover_stratified<S: Scalar>(
    alg: &Arc<Algebra<S>>,
    s: usize,
) -> Result<CoverOutcome<S>> {
    let ord = alg.require_ordering()?.clone();
    for block in ord.strata() {
        for &u in block {
            for &v in block {
                let d = Ext1::compute(&alg.simple(u), &alg.simple(v)).dim();
                if d != 0 {
                    return Err(Error::precondition(format!(
                        "stratum is not extension-free: Ext1(L('{}'), L('{}')) has dimension {d}",
                        alg.vertex_label(u),
                        alg.vertex_label(v)
                    )));
                }
            }
        }
    }
    let nv = alg.vertex_count();
    let ns = ord.stratum_count();
    let base = ord.stratum_of(s) + 1;
    let level_verts: Vec<Vec<usize>> = (0..=ns)
        .map(|j| {
            let mut v: Vec<usize> = ord.strata()[..j].iter().flatten().copied().collect();
            v.sort_unstable();
            v
        })
        .collect();
    // Chain the level algebras downward so each is literally the closed
    // restriction of the next.
    let mut level_algs: Vec<Option<Arc<Algebra<S>>>> = vec![None; ns + 1];
    let mut restrictions: Vec<Option<ClosedRestriction<S>>> = (0..=ns).map(|_| None).collect();
    level_algs[ns] = Some(alg.clone());
    for j in ((base + 1)..=ns).rev() {
        let big = level_algs[j].clone().expect("level algebras are chained downward");
        let prev_local = positions(&level_verts[j - 1], &level_verts[j]);
        let cr = ClosedRestriction::new(&big, &prev_local)?;
        level_algs[j - 1] = Some(cr.algebra().clone());
        restrictions[j] = Some(cr);
    }
    if level_algs[base].is_none() {
        // `s` lies in the open stratum; the base level is the full algebra.
        debug_assert_eq!(base, ns);
    }

    // Base level: the standard object over the closed union containing s.
    let base_alg = level_algs[base].clone().expect("base level algebra exists");
    let s_base = positions(&[s], &level_verts[base])[0];
    let (mut p_cur, _, _) = standard_object(&base_alg, s_base)?;
    let mut warnings: Vec<PurityFailure> = Vec::new();
    let mut levels: Vec<CoverDiagnostic> = Vec::new();
    let mut base_checks = Vec::new();
    stratum_kernel_checks(
        &base_alg,
        &level_verts[base],
        &ord.strata()[base - 1],
        &mut base_checks,
        &mut warnings,
    )?;
    levels.push(CoverDiagnostic {
        level: base,
        open_stratum: ord.strata()[base - 1].clone(),
        checks: base_checks,
        socle_table: Vec::new(),
        correction_table: Vec::new(),
        socle_ext_table: Vec::new(),
        excess_table: Vec::new(),
    });
    let mut diagram = trivial_diagram(&p_cur);

    for j in (base + 1)..=ns {
        let alg_j = level_algs[j].clone().expect("level algebra exists");
        let cr = restrictions[j].as_ref().expect("restriction exists");
        let prev_alg = level_algs[j - 1].clone().expect("previous level algebra exists");
        let ambient = |v: usize| level_verts[j][v];
        let open_local = positions(&ord.strata()[j - 1], &level_verts[j]);
        let closed_local = cr.closed_vertices().to_vec();
        let mut checks = Vec::new();

        // The previous cover must already be projective in its own level.
        let surviving: Vec<(usize, usize)> = (0..prev_alg.vertex_count())
            .map(|t| (t, Ext1::compute(&p_cur, &prev_alg.simple(t)).dim()))
            .filter(|&(_, d)| d > 0)
            .collect();
        push(
            &mut checks,
            "closed-cover-projective",
            surviving.is_empty(),
            if surviving.is_empty() {
                "the previous cover has no extensions by closed simples".to_string()
            } else {
                format!(
                    "extensions by closed simples survive: {}",
                    surviving
                        .iter()
                        .map(|&(t, d)| format!("'{}': {d}", prev_alg.vertex_label(t)))
                        .collect::<Vec<_>>()
                        .join(", ")
                )
            },
        );

        let p_z = cr.to_big(&p_cur);
        let ue_socle = universal_extension(&p_z, &open_local);
        let socle_table: Vec<(usize, usize)> =
            ue_socle.multiplicities.iter().map(|&(t, d)| (ambient(t), d)).collect();
        let q = ue_socle.q().clone();
        let ue_corr = universal_extension(&q, &closed_local);
        let correction_table: Vec<(usize, usize)> =
            ue_corr.multiplicities.iter().map(|&(t, d)| (ambient(t), d)).collect();
        let p_new = ue_corr.q().clone();
        let socle_ext_table: Vec<(usize, usize)> = closed_local
            .iter()
            .map(|&t| (ambient(t), Ext1::compute(&ue_socle.socle, &alg_j.simple(t)).dim()))
            .collect();
        let bounded = correction_table
            .iter()
            .zip(&socle_ext_table)
            .all(|(&(_, e), &(_, f))| e <= f);
        push(
            &mut checks,
            "correction-bounded",
            bounded,
            if bounded {
                "closed extensions of the extension embed into those of the socle sum".to_string()
            } else {
                "the correction exceeds the socle extensions".to_string()
            },
        );
        let excess_table: Vec<(usize, usize)> = socle_ext_table
            .iter()
            .zip(&correction_table)
            .map(|(&(t, f), &(_, e))| (t, f.saturating_sub(e)))
            .collect();

        // D: the preimage of the socle sum inside the new cover.
        let onto_prev = ue_corr.seq.proj.then(&ue_socle.seq.proj);
        let (preimage, preimage_incl) = kernel_module(&onto_prev);
        let kernel_seq = ShortExactSeq::new(preimage_incl.clone(), onto_prev.clone())
            .expect("kernel of the composed projection is exact");
        let corr_to_preimage = factor_through(&ue_corr.seq.incl, &preimage_incl)
            .expect("the correction lies in the kernel of the composed projection");
        let preimage_to_socle =
            factor_through(&preimage_incl.then(&ue_corr.seq.proj), &ue_socle.seq.incl)
                .expect("the preimage maps onto the socle sum");
        let preimage_seq = ShortExactSeq::new(corr_to_preimage.clone(), preimage_to_socle.clone())
            .expect("correction, preimage and socle sum form an exact sequence");

        // M: the standard sum of the open stratum, onto the socle sum.
        let mut summand_standards: Vec<Module<S>> = Vec::new();
        let mut summand_heads: Vec<ModuleMap<S>> = Vec::new();
        let mut socle_simples: Vec<Module<S>> = Vec::new();
        for &(t, mult) in &ue_socle.multiplicities {
            if mult == 0 {
                continue;
            }
            let (mt, head, _) = standard_object(&alg_j, t)?;
            for _ in 0..mult {
                summand_standards.push(mt.clone());
                summand_heads.push(head.clone());
                socle_simples.push(alg_j.simple(t));
            }
        }
        let (standard_sum, _, sum_projs) = direct_sum_or_zero(&alg_j, &summand_standards);
        let (socle_rebuilt, socle_incls, _) = direct_sum_or_zero(&alg_j, &socle_simples);
        assert_eq!(
            socle_rebuilt, ue_socle.socle,
            "socle sum layout matches the universal extension"
        );
        let mut onto_socle = ModuleMap::zero(&standard_sum, &ue_socle.socle);
        for i in 0..summand_heads.len() {
            onto_socle =
                onto_socle.add(&sum_projs[i].then(&summand_heads[i]).then(&socle_incls[i]));
        }
        let (standard_kernel, kernel_incl) = kernel_module(&onto_socle);
        let standard_seq = ShortExactSeq::new(kernel_incl.clone(), onto_socle.clone())
            .expect("standard sum surjects onto the socle sum");

        let predicted: Vec<usize> = {
            let mut p = vec![0usize; alg_j.vertex_count()];
            for &(t, f) in &socle_ext_table {
                let local = positions(&[t], &level_verts[j])[0];
                p[local] = f;
            }
            p
        };
        let kernel_matches =
            standard_kernel.is_semisimple() && standard_kernel.dims() == predicted.as_slice();
        push(
            &mut checks,
            "standard-kernel-matches",
            kernel_matches,
            format!(
                "kernel of the standard sum has dims {:?}, predicted {:?}",
                standard_kernel.dims(),
                predicted
            ),
        );
        let kernel_open_vanishes =
            open_local.iter().all(|&t| hom_dim(&standard_kernel, &alg_j.simple(t)) == 0);
        push(
            &mut checks,
            "standard-kernel-open-vanishing",
            kernel_open_vanishes,
            "the standard-sum kernel admits no maps onto open simples".to_string(),
        );

        // Lift the standard sum through the preimage.
        let lift = factor_through(&onto_socle, &preimage_to_socle).ok_or_else(|| {
            Error::validation(format!(
                "no lift of the standard sum through the socle preimage at level {j}"
            ))
        })?;
        if !lift.is_surjective() {
            return Err(Error::validation(format!(
                "the lifted standard sum does not cover the socle preimage at level {j}"
            )));
        }
        let (excess, excess_incl) = kernel_module(&lift);
        let lift_seq = ShortExactSeq::new(excess_incl.clone(), lift.clone())
            .expect("the lift of the standard sum is exact against its kernel");
        let excess_to_kernel = factor_through(&excess_incl, &kernel_incl)
            .expect("the lift kernel lies in the standard-sum kernel");
        let kernel_to_corr = factor_through(&kernel_incl.then(&lift), &corr_to_preimage)
            .expect("the standard-sum kernel lands in the correction");
        let excess_seq = ShortExactSeq::new(excess_to_kernel, kernel_to_corr)
            .expect("excess, standard kernel and correction form an exact sequence");

        let excess_predicted: Vec<usize> = {
            let mut p = vec![0usize; alg_j.vertex_count()];
            for &(t, f) in &excess_table {
                let local = positions(&[t], &level_verts[j])[0];
                p[local] = f;
            }
            p
        };
        let excess_matches =
            excess.is_semisimple() && excess.dims() == excess_predicted.as_slice();
        push(
            &mut checks,
            "excess-matches",
            excess_matches,
            format!(
                "lift kernel has dims {:?}, predicted {:?}",
                excess.dims(),
                excess_predicted
            ),
        );

        // Hom and Ext certificates for the preimage.
        let hom_closed_ok =
            closed_local.iter().all(|&t| hom_dim(&preimage, &alg_j.simple(t)) == 0);
        push(
            &mut checks,
            "preimage-hom-closed-vanishing",
            hom_closed_ok,
            "the socle preimage admits no maps onto closed simples".to_string(),
        );
        let ext_open_ok = open_local
            .iter()
            .all(|&t| Ext1::compute(&preimage, &alg_j.simple(t)).dim() == 0);
        push(
            &mut checks,
            "preimage-ext-open-vanishing",
            ext_open_ok,
            "the socle preimage has no extensions by open simples".to_string(),
        );
        let hom_open_ok = ue_socle
            .multiplicities
            .iter()
            .all(|&(t, b)| hom_dim(&preimage, &alg_j.simple(t)) == b);
        push(
            &mut checks,
            "preimage-hom-open-matches",
            hom_open_ok,
            "maps from the socle preimage onto open simples match the socle table".to_string(),
        );

        stratum_kernel_checks(
            &alg_j,
            &level_verts[j],
            &ord.strata()[j - 1],
            &mut checks,
            &mut warnings,
        )?;

        diagram = CoverDiagram {
            previous: p_z,
            open_socle: ue_socle.socle.clone(),
            extension: q,
            correction: ue_corr.socle.clone(),
            cover: p_new.clone(),
            socle_preimage: preimage,
            standard_sum,
            standard_kernel,
            excess,
            socle_table: socle_table.clone(),
            correction_table: correction_table.clone(),
            socle_ext_table: socle_ext_table.clone(),
            excess_table: excess_table.clone(),
            sequences: CoverSequences {
                socle_seq: ue_socle.seq.clone(),
                correction_seq: ue_corr.seq.clone(),
                preimage_seq,
                kernel_seq,
                standard_seq,
                excess_seq,
                lift_seq,
            },
        };
        levels.push(CoverDiagnostic {
            level: j,
            open_stratum: ord.strata()[j - 1].clone(),
            checks,
            socle_table,
            correction_table,
            socle_ext_table,
            excess_table,
        });
        p_cur = p_new;
    }

    // Final certificates over the full algebra.
    let surviving: Vec<(String, usize)> = (0..nv)
        .map(|t| (alg.vertex_label(t).to_string(), Ext1::compute(&p_cur, &alg.simple(t)).dim()))
        .filter(|&(_, d)| d > 0)
        .collect();
    if !surviving.is_empty() {
        let failure = PurityFailure {
            vertex: alg.vertex_label(s).to_string(),
            check: "cover-projectivity".to_string(),
            detail: "the candidate has surviving first extensions by simples".to_string(),
            table: surviving,
        };
        return Ok(CoverOutcome::Impure { candidate: p_cur, failure, diagram, levels, warnings });
    }
    let top = top_radical_socle(&p_cur).top_dims;
    let top_simple = top.iter().enumerate().all(|(t, &d)| d == usize::from(t == s));
    if !top_simple {
        let failure = PurityFailure {
            vertex: alg.vertex_label(s).to_string(),
            check: "cover-top".to_string(),
            detail: "the candidate does not have the expected unique simple quotient".to_string(),
            table: (0..nv)
                .filter(|&t| top[t] > 0)
                .map(|t| (alg.vertex_label(t).to_string(), top[t]))
                .collect(),
        };
        return Ok(CoverOutcome::Impure { candidate: p_cur, failure, diagram, levels, warnings });
    }
    if p_cur.dim_at(s) != 1 {
        let failure = PurityFailure {
            vertex: alg.vertex_label(s).to_string(),
            check: "cover-multiplicity".to_string(),
            detail: "the covered simple occurs more than once in the candidate".to_string(),
            table: vec![(alg.vertex_label(s).to_string(), p_cur.dim_at(s))],
        };
        return Ok(CoverOutcome::Impure { candidate: p_cur, failure, diagram, levels, warnings });
    }
    Ok(CoverOutcome::Cover { cover: p_cur, diagram, levels, warnings })
}

/// Builds the injective hull of `L(s)` by running the stratified cover
/// construction over the opposite algebra and dualising the outcome.
/// Each sequence in the returned diagram reads backwards relative to its
/// cover-side name, and the tables carry the opposite-side dimensions
/// (which duality preserves).
pub fn injective_hull_stratified<S: Scalar>(
    alg: &Arc<Algebra<S>>,
    s: usize,
) -> Result<CoverOutcome<S>> {
    let outcome = projective_cover_stratified(&alg.opposite(), s)?;
    Ok(match outcome {
        CoverOutcome::Cover { cover, diagram, levels, warnings } => CoverOutcome::Cover {
            cover: dualized(&cover, alg),
            diagram: dual_diagram(&diagram, alg),
            levels,
            warnings,
        },
        CoverOutcome::Impure { candidate, failure, diagram, levels, warnings } => {
            CoverOutcome::Impure {
                candidate: dualized(&candidate, alg),
                failure,
                diagram: dual_diagram(&diagram, alg),
                levels,
                warnings,
            }
        }
    })
}

/// Builds the projective cover of `L(s)` by repeated universal
/// extensions against all simples, stopping when no first extension
/// survives.  Independent of the stratification; the result must agree
/// with the indecomposable projective at `s`.
pub fn projective_cover_iterative<S: Scalar>(
    alg: &Arc<Algebra<S>>,
    s: usize,
) -> Result<Module<S>> {
    let all: Vec<usize> = (0..alg.vertex_count()).collect();
    let bound = alg.projective(s).total_dim();
    let mut p = alg.simple(s);
    loop {
        let ue = universal_extension(&p, &all);
        if ue.socle.is_zero() {
            return Ok(p);
        }
        p = ue.q().clone();
        if p.total_dim() > bound {
            return Err(Error::validation(
                "universal-extension iteration exceeded the projective dimension bound"
                    .to_string(),
            ));
        }
    }
}

/// Positions of the (sorted) entries of `sub` within the sorted list
/// `sup`; every entry must occur.
fn positions(sub: &[usize], sup: &[usize]) -> Vec<usize> {
    sub.iter()
        .map(|&v| {
            sup.iter().position(|&w| w == v).expect("vertex belongs to the enclosing level")
        })
        .collect()
}

fn push(checks: &mut Vec<CoverCheck>, name: &'static str, pass: bool, detail: String) {
    checks.push(CoverCheck { name, pass, detail });
}

/// Direct sum tolerating an empty summand list, which arises at levels
/// where the open stratum contributes no extensions at all.
fn direct_sum_or_zero<S: Scalar>(
    alg: &Arc<Algebra<S>>,
    summands: &[Module<S>],
) -> (Module<S>, Vec<ModuleMap<S>>, Vec<ModuleMap<S>>) {
    if summands.is_empty() {
        return (alg.zero_module(), Vec::new(), Vec::new());
    }
    Module::direct_sum(&summands.iter().collect::<Vec<_>>())
}

/// Runs the standard-kernel decomposition for every open-stratum vertex
/// of a level, recording failures as warnings.
fn stratum_kernel_checks<S: Scalar>(
    level_alg: &Arc<Algebra<S>>,
    level_verts: &[usize],
    open_ambient: &[usize],
    checks: &mut Vec<CoverCheck>,
    warnings: &mut Vec<PurityFailure>,
) -> Result<()> {
    for &av in open_ambient {
        let local = positions(&[av], level_verts)[0];
        let d = standard_kernel_decomposition(level_alg, local)?;
        let label = level_alg.vertex_label(local).to_string();
        if d.holds {
            push(
                checks,
                "standard-kernel-structure",
                true,
                format!("standard kernel at '{label}' decomposes as predicted"),
            );
        } else {
            let detail = if d.semisimple {
                format!("standard kernel at '{label}' has unpredicted simple multiplicities")
            } else {
                format!("standard kernel at '{label}' is not semisimple")
            };
            push(checks, "standard-kernel-structure", false, detail.clone());
            warnings.push(PurityFailure {
                vertex: label,
                check: "standard-kernel-structure".to_string(),
                detail,
                table: (0..level_alg.vertex_count())
                    .filter(|&t| d.dims[t] > 0)
                    .map(|t| (level_alg.vertex_label(t).to_string(), d.dims[t]))
                    .collect(),
            });
        }
    }
    Ok(())
}

/// The degenerate diagram of a base-level cover: the candidate sits in
/// the identity sequences and every other object is zero.
fn trivial_diagram<S: Scalar>(m: &Module<S>) -> CoverDiagram<S> {
    let alg = m.algebra().clone();
    let zero = alg.zero_module();
    let zz = ShortExactSeq::new(ModuleMap::zero(&zero, &zero), ModuleMap::zero(&zero, &zero))
        .expect("zero sequence is exact");
    let idm = |x: &Module<S>| {
        ShortExactSeq::new(ModuleMap::zero(&zero, x), ModuleMap::identity(x))
            .expect("identity sequence is exact")
    };
    CoverDiagram {
        previous: m.clone(),
        open_socle: zero.clone(),
        extension: m.clone(),
        correction: zero.clone(),
        cover: m.clone(),
        socle_preimage: zero.clone(),
        standard_sum: zero.clone(),
        standard_kernel: zero.clone(),
        excess: zero.clone(),
        socle_table: Vec::new(),
        correction_table: Vec::new(),
        socle_ext_table: Vec::new(),
        excess_table: Vec::new(),
        sequences: CoverSequences {
            socle_seq: idm(m),
            correction_seq: idm(m),
            preimage_seq: zz.clone(),
            kernel_seq: idm(m),
            standard_seq: zz.clone(),
            excess_seq: zz.clone(),
            lift_seq: zz,
        },
    }
}

fn dualized<S: Scalar>(m: &Module<S>, back: &Arc<Algebra<S>>) -> Module<S> {
    m.dual().with_algebra(back).expect("the double opposite is the original algebra")
}

fn dual_map<S: Scalar>(f: &ModuleMap<S>, back: &Arc<Algebra<S>>) -> ModuleMap<S> {
    let d = f.dual();
    let source = d.source().with_algebra(back).expect("dual source rebinds");
    let target = d.target().with_algebra(back).expect("dual target rebinds");
    ModuleMap::new(source, target, d.parts().to_vec()).expect("dual map intertwines")
}

fn dual_seq<S: Scalar>(seq: &ShortExactSeq<S>, back: &Arc<Algebra<S>>) -> ShortExactSeq<S> {
    ShortExactSeq::new(dual_map(&seq.proj, back), dual_map(&seq.incl, back))
        .expect("dual sequence is exact")
}

fn dual_diagram<S: Scalar>(d: &CoverDiagram<S>, back: &Arc<Algebra<S>>) -> CoverDiagram<S> {
    CoverDiagram {
        previous: dualized(&d.previous, back),
        open_socle: dualized(&d.open_socle, back),
        extension: dualized(&d.extension, back),
        correction: dualized(&d.correction, back),
        cover: dualized(&d.cover, back),
        socle_preimage: dualized(&d.socle_preimage, back),
        standard_sum: dualized(&d.standard_sum, back),
        standard_kernel: dualized(&d.standard_kernel, back),
        excess: dualized(&d.excess, back),
        socle_table: d.socle_table.clone(),
        correction_table: d.correction_table.clone(),
        socle_ext_table: d.socle_ext_table.clone(),
        excess_table: d.excess_table.clone(),
        sequences: CoverSequences {
            socle_seq: dual_seq(&d.sequences.socle_seq, back),
            correction_seq: dual_seq(&d.sequences.correction_seq, back),
            preimage_seq: dual_seq(&d.sequences.preimage_seq, back),
            kernel_seq: dual_seq(&d.sequences.kernel_seq, back),
            standard_seq: dual_seq(&d.sequences.standard_seq, back),
            excess_seq: dual_seq(&d.sequences.excess_seq, back),
            lift_seq: dual_seq(&d.sequences.lift_seq, back),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::quiver::is_isomorphic;

    #[test]
    fn two_vertex_cover_of_the_closed_simple() {
        let alg = fixtures::fix_a2();
        let outcome = projective_cover_stratified(&alg, 0).unwrap();
        assert!(outcome.is_cover());
        let d = outcome.diagram();
        assert_eq!(d.previous.dims(), &[1, 0]);
        assert_eq!(d.socle_table, vec![(1, 1)]);
        assert_eq!(d.extension.dims(), &[1, 1]);
        assert!(d.correction.is_zero());
        assert!(is_isomorphic(outcome.module(), &alg.projective(0)));
        assert!(outcome.warnings().is_empty());
        assert_eq!(outcome.levels().len(), 2);
        assert!(outcome.levels().iter().all(CoverDiagnostic::all_pass));
    }

    #[test]
    fn open_stratum_simple_is_its_own_standard_cover() {
        let alg = fixtures::fix_a2();
        let outcome = projective_cover_stratified(&alg, 1).unwrap();
        assert!(outcome.is_cover());
        assert_eq!(outcome.module().dims(), &[0, 1]);
        assert_eq!(outcome.levels().len(), 1);
    }

    #[test]
    fn three_vertex_cover_recursion_through_both_levels() {
        let alg = fixtures::fix_d3_cover();
        let outcome = projective_cover_stratified(&alg, 0).unwrap();
        assert!(outcome.is_cover());
        let d = outcome.diagram();
        assert_eq!(d.previous.dims(), &[1, 0, 1]);
        assert_eq!(d.open_socle.dims(), &[0, 1, 0]);
        assert_eq!(d.extension.dims(), &[1, 1, 1]);
        assert!(d.correction.is_zero());
        assert!(is_isomorphic(outcome.module(), &alg.projective(0)));
        assert_eq!(outcome.levels().len(), 3);
        assert!(outcome.levels().iter().all(CoverDiagnostic::all_pass));
    }

    #[test]
    fn serial_fixture_covers_succeed_with_a_kernel_warning() {
        let alg = fixtures::fix_a3();
        let outcome = projective_cover_stratified(&alg, 2).unwrap();
        assert!(outcome.is_cover());
        assert!(is_isomorphic(outcome.module(), &alg.projective(2)));
        let warnings = outcome.warnings();
        assert!(!warnings.is_empty());
        assert_eq!(warnings[0].check, "standard-kernel-structure");
        assert_eq!(warnings[0].vertex, "c");
    }

    #[test]
    fn cyclic_fixture_fails_the_multiplicity_certificate() {
        let alg = fixtures::fix_cycle();
        let outcome = projective_cover_stratified(&alg, 0).unwrap();
        assert!(!outcome.is_cover());
        let failure = outcome.failure().unwrap();
        assert_eq!(failure.check, "cover-multiplicity");
        assert_eq!(outcome.module().dims(), &[2, 1]);
        assert!(is_isomorphic(outcome.module(), &alg.projective(0)));
        // The ladder itself is clean: every level table and check holds.
        assert!(outcome.levels().iter().all(CoverDiagnostic::all_pass));
        let d = outcome.diagram();
        assert_eq!(d.socle_table, vec![(1, 1)]);
        assert_eq!(d.correction_table, vec![(0, 1)]);
        assert_eq!(d.socle_ext_table, vec![(0, 1)]);
        assert_eq!(d.excess_table, vec![(0, 0)]);
        assert_eq!(d.standard_kernel.dims(), &[1, 0]);
        assert!(d.excess.is_zero());
    }

    #[test]
    fn non_quasihereditary_open_stratum_reports_impurity() {
        let alg = fixtures::fix_nonqh_open();
        let outcome = projective_cover_stratified(&alg, 1).unwrap();
        assert!(!outcome.is_cover());
        let failure = outcome.failure().unwrap();
        assert_eq!(failure.check, "cover-projectivity");
        assert_eq!(failure.table, vec![("t".to_string(), 1)]);
        assert_eq!(outcome.module().dims(), &[1, 1, 0]);
    }

    #[test]
    fn internal_stratum_extension_is_a_precondition_error() {
        let alg = fixtures::fix_stratum_pair();
        assert!(projective_cover_stratified(&alg, 0).is_err());
    }

    #[test]
    fn iterative_cover_agrees_with_the_projective() {
        let alg = fixtures::fix_a2();
        assert!(is_isomorphic(
            &projective_cover_iterative(&alg, 0).unwrap(),
            &alg.projective(0)
        ));
        assert_eq!(projective_cover_iterative(&alg, 1).unwrap().dims(), &[0, 1]);
        let d3 = fixtures::fix_d3();
        for s in 0..3 {
            assert!(is_isomorphic(
                &projective_cover_iterative(&d3, s).unwrap(),
                &d3.projective(s)
            ));
        }
    }

    #[test]
    fn injective_hulls_by_duality() {
        let alg = fixtures::fix_a2();
        let outcome = injective_hull_stratified(&alg, 1).unwrap();
        assert!(outcome.is_cover());
        assert!(is_isomorphic(outcome.module(), &alg.injective(1)));
        assert_eq!(outcome.module().dims(), &[1, 1]);
        let d3 = fixtures::fix_d3();
        let outcome = injective_hull_stratified(&d3, 0).unwrap();
        assert!(outcome.is_cover());
        assert_eq!(outcome.module().dims(), &[1, 0, 0]);
        for s in 0..3 {
            let o = injective_hull_stratified(&d3, s).unwrap();
            assert!(is_isomorphic(o.module(), &d3.injective(s)));
        }
    }
}
