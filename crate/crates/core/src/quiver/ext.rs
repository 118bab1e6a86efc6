//! First extension groups through the canonical projective presentation,
//! with explicit cocycle representatives, pushout extension modules,
//! class extraction from a short exact sequence, and universal
//! extensions against a family of simples.

use super::hom::{factor_through, hom_basis};
use super::module::{Module, ModuleMap, ShortExactSeq};
use super::ops::{kernel_module, projective_cover_map};
use crate::error::Error;
use crate::linalg::{quotient_by_subspace, Mat};
use crate::scalar::Scalar;
use crate::Result;

/// The canonical presentation `0 -> omega -> P0 -> B -> 0` of a module.
#[derive(Clone, Debug)]
pub(crate) struct Presentation<S: Scalar> {
    pub cover: ModuleMap<S>,
    pub omega: Module<S>,
    pub omega_incl: ModuleMap<S>,
}

impl<S: Scalar> Presentation<S> {
    pub fn of(b: &Module<S>) -> Self {
        let cover = projective_cover_map(b);
        let (omega, omega_incl) = kernel_module(&cover);
        Presentation { cover, omega, omega_incl }
    }

    /// `Ext^1(B, A)` as the cokernel of restriction along `omega -> P0`.
    pub fn ext_to(&self, a: &Module<S>) -> Ext1<S> {
        let hom_oa = hom_basis(&self.omega, a);
        let hd = hom_oa.len();
        // Coordinates of the restricted maps Hom(P0, A) -> Hom(omega, A)
        // in the chosen basis of the latter.
        let coords = if hd == 0 {
            Mat::zeros(0, 0)
        } else {
            let basis_mat = flatten_basis(&hom_oa);
            let hom_pa = hom_basis(self.cover.source(), a);
            let mut restricted = Mat::zeros(basis_mat.rows(), 0);
            for f in &hom_pa {
                let res = self.omega_incl.then(f);
                restricted = restricted.hstack(&Mat::column_vector(flatten_map(&res)));
            }
            basis_mat
                .solve_matrix(&restricted)
                .expect("restriction of a map lies in the hom space")
        };
        let q = quotient_by_subspace(hd, &coords);
        Ext1 {
            b: self.cover.target().clone(),
            a: a.clone(),
            cover: self.cover.clone(),
            omega_incl: self.omega_incl.clone(),
            hom_basis: hom_oa,
            proj: q.proj,
            section: q.section,
        }
    }
}

/// `Ext^1(B, A)` with a fixed coordinate system.
///
/// Classes are coordinate vectors of length [`Ext1::dim`]; the zero vector
/// is the split class.  All choices (presentation, hom basis, quotient
/// coordinates) are canonical, so classes are reproducible.
#[derive(Clone, Debug)]
pub struct Ext1<S: Scalar> {
    b: Module<S>,
    a: Module<S>,
    cover: ModuleMap<S>,
    omega_incl: ModuleMap<S>,
    hom_basis: Vec<ModuleMap<S>>,
    /// Hom-coordinates -> class coordinates.
    proj: Mat<S>,
    /// Class coordinates -> hom-coordinates (canonical section).
    section: Mat<S>,
}

fn flatten_map<S: Scalar>(f: &ModuleMap<S>) -> Vec<S> {
    let mut out = Vec::new();
    for v in 0..f.source().algebra().vertex_count() {
        let m = f.part(v);
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                out.push(m[(i, j)].clone());
            }
        }
    }
    out
}

fn flatten_basis<S: Scalar>(maps: &[ModuleMap<S>]) -> Mat<S> {
    if maps.is_empty() {
        return Mat::zeros(0, 0);
    }
    let rows = flatten_map(&maps[0]).len();
    let mut m = Mat::zeros(rows, 0);
    for f in maps {
        m = m.hstack(&Mat::column_vector(flatten_map(f)));
    }
    m
}

impl<S: Scalar> Ext1<S> {
    pub fn compute(b: &Module<S>, a: &Module<S>) -> Ext1<S> {
        Presentation::of(b).ext_to(a)
    }

    /// Dimension of the extension group.
    pub fn dim(&self) -> usize {
        self.proj.rows()
    }

    pub fn b(&self) -> &Module<S> {
        &self.b
    }

    pub fn a(&self) -> &Module<S> {
        &self.a
    }

    /// The cocycle `omega -> A` representing a class.
    pub fn representative(&self, class: &[S]) -> ModuleMap<S> {
        assert_eq!(class.len(), self.dim(), "class has wrong length");
        let coords = self.section.mul(&Mat::column_vector(class.to_vec()));
        let mut g = ModuleMap::zero(&self.omega_incl.source().clone(), &self.a);
        for (i, h) in self.hom_basis.iter().enumerate() {
            let c = coords[(i, 0)].clone();
            if !c.is_zero() {
                g = g.add(&h.scale(&c));
            }
        }
        g
    }

    /// Class coordinates of a cocycle `omega -> A`.
    pub fn class_of_cocycle(&self, g: &ModuleMap<S>) -> Vec<S> {
        let coords = if self.hom_basis.is_empty() {
            Mat::zeros(0, 1)
        } else {
            flatten_basis(&self.hom_basis)
                .solve_matrix(&Mat::column_vector(flatten_map(g)))
                .expect("cocycle lies in the hom space")
        };
        let cls = self.proj.mul(&coords);
        (0..cls.rows()).map(|i| cls[(i, 0)].clone()).collect()
    }

    /// Builds the extension `0 -> A -> E -> B -> 0` with the given class,
    /// as a pushout of the presentation along the representing cocycle.
    pub fn extension_module(&self, class: &[S]) -> ShortExactSeq<S> {
        let g = self.representative(class);
        pushout_extension(&self.cover, &self.omega_incl, &g)
    }

    /// Reads off the class of a short exact sequence `0 -> A -> E -> B -> 0`
    /// whose outer terms are exactly `self.a` and `self.b`.
    pub fn class_of(&self, ses: &ShortExactSeq<S>) -> Result<Vec<S>> {
        if ses.sub() != &self.a || ses.quot() != &self.b {
            return Err(Error::precondition(
                "sequence terms do not match this extension group",
            ));
        }
        // Lift the cover through the surjection (projectivity of P0)...
        let h = factor_through(&self.cover, &ses.proj).ok_or_else(|| {
            Error::precondition("could not lift the projective cover through the sequence")
        })?;
        // ... then corestrict omega -> E onto the submodule A.
        let into_e = self.omega_incl.then(&h);
        let g = factor_through(&into_e, &ses.incl).ok_or_else(|| {
            Error::precondition("lifted cocycle does not land in the submodule")
        })?;
        Ok(self.class_of_cocycle(&g))
    }
}

/// Pushout of `0 -> omega -> P0 -> B -> 0` along `g: omega -> A`, giving
/// `0 -> A -> E -> B -> 0` with `E = (A + P0) / {(-g w, w)}`.
pub(crate) fn pushout_extension<S: Scalar>(
    cover: &ModuleMap<S>,
    omega_incl: &ModuleMap<S>,
    g: &ModuleMap<S>,
) -> ShortExactSeq<S> {
    let a = g.target();
    let p0 = cover.source();
    let b = cover.target();
    let nv = a.algebra().vertex_count();
    let (d, incls, projs) = Module::direct_sum(&[a, p0]);
    // The graph of (-g, incl) on omega, vertexwise.
    let graph: Vec<Mat<S>> = (0..nv)
        .map(|v| {
            g.part(v)
                .scale(&(S::zero() - S::one()))
                .vstack(omega_incl.part(v))
        })
        .collect();
    let (e, to_e) = super::ops::quotient_module(&d, &graph);
    let incl_a = incls[0].then(&to_e);
    // E -> B sends the class of (a, p) to cover(p); compute through a
    // right inverse of the quotient projection (well defined because the
    // cover kills the graph).
    let mut proj_parts = Vec::new();
    for v in 0..nv {
        let section = to_e
            .part(v)
            .solve_matrix(&Mat::identity(to_e.part(v).rows()))
            .expect("quotient projection is surjective");
        proj_parts.push(cover.part(v).mul(projs[1].part(v)).mul(&section));
    }
    let proj_b = ModuleMap::new_unchecked(e.clone(), b.clone(), proj_parts);
    ShortExactSeq::new(incl_a, proj_b).expect("pushout yields a short exact sequence")
}

/// A universal extension `0 -> S -> Q -> B -> 0` against a family of
/// simples: `S` is the sum of `L(t)^{dim Ext^1(B, L(t))}` over the given
/// vertices and the class stacks the canonical basis classes.
#[derive(Clone, Debug)]
pub struct UniversalExtension<S: Scalar> {
    /// `(vertex, multiplicity)` per requested vertex, in request order.
    pub multiplicities: Vec<(usize, usize)>,
    /// The summed simple socle `S`.
    pub socle: Module<S>,
    /// The sequence `0 -> S -> Q -> B -> 0`.
    pub seq: ShortExactSeq<S>,
}

impl<S: Scalar> UniversalExtension<S> {
    pub fn q(&self) -> &Module<S> {
        self.seq.mid()
    }
}

/// Computes the universal extension of `B` against the simples at
/// `targets`.  When no extensions exist the sequence is split with `S = 0`.
pub fn universal_extension<S: Scalar>(
    b: &Module<S>,
    targets: &[usize],
) -> UniversalExtension<S> {
    let alg = b.algebra().clone();
    let pres = Presentation::of(b);
    let mut multiplicities = Vec::new();
    let mut cocycles: Vec<ModuleMap<S>> = Vec::new();
    let mut socle_summands: Vec<Module<S>> = Vec::new();
    for &t in targets {
        let ext = pres.ext_to(&alg.simple(t));
        multiplicities.push((t, ext.dim()));
        for i in 0..ext.dim() {
            let mut class = vec![S::zero(); ext.dim()];
            class[i] = S::one();
            cocycles.push(ext.representative(&class));
            socle_summands.push(alg.simple(t));
        }
    }
    let socle = if socle_summands.is_empty() {
        alg.zero_module()
    } else {
        let refs: Vec<&Module<S>> = socle_summands.iter().collect();
        Module::direct_sum(&refs).0
    };
    // Stack the cocycles into a single map omega -> S.
    let nv = alg.vertex_count();
    let parts: Vec<Mat<S>> = (0..nv)
        .map(|v| {
            let mut m = Mat::zeros(0, pres.omega.dim_at(v));
            for g in &cocycles {
                m = m.vstack(g.part(v));
            }
            m
        })
        .collect();
    let g = ModuleMap::new_unchecked(pres.omega.clone(), socle.clone(), parts);
    let seq = pushout_extension(&pres.cover, &pres.omega_incl, &g);
    UniversalExtension { multiplicities, socle, seq }
}
