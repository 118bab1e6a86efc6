//! Finite-dimensional right modules over a validated quiver algebra,
//! morphisms between them, and short exact sequences.

use std::sync::Arc;

use super::algebra::Algebra;
use super::path::Path;
use crate::error::Error;
use crate::linalg::Mat;
use crate::scalar::Scalar;
use crate::Result;

/// A representation: one vector space per vertex, one matrix per arrow.
///
/// The space at vertex `v` is `X e_v`; an arrow `a: u -> v` acts by a
/// matrix `X_u -> X_v` (rows indexed by the target space).
#[derive(Clone, Debug)]
pub struct Module<S: Scalar> {
    alg: Arc<Algebra<S>>,
    dims: Vec<usize>,
    action: Vec<Mat<S>>,
}

impl<S: Scalar> PartialEq for Module<S> {
    fn eq(&self, other: &Self) -> bool {
        self.alg.same_as(&other.alg) && self.dims == other.dims && self.action == other.action
    }
}

impl<S: Scalar> Module<S> {
    /// Builds a module and checks shapes and all algebra relations.
    pub fn new(alg: Arc<Algebra<S>>, dims: Vec<usize>, action: Vec<Mat<S>>) -> Result<Self> {
        if dims.len() != alg.vertex_count() {
            return Err(Error::validation(format!(
                "expected {} vertex dimensions, got {}",
                alg.vertex_count(),
                dims.len()
            )));
        }
        if action.len() != alg.arrow_count() {
            return Err(Error::validation(format!(
                "expected {} arrow matrices, got {}",
                alg.arrow_count(),
                action.len()
            )));
        }
        for (ai, m) in action.iter().enumerate() {
            let a = alg.arrow(ai);
            if m.rows() != dims[a.target] || m.cols() != dims[a.source] {
                return Err(Error::validation(format!(
                    "arrow '{}' needs a {}x{} matrix, got {}x{}",
                    a.name,
                    dims[a.target],
                    dims[a.source],
                    m.rows(),
                    m.cols()
                )));
            }
        }
        let module = Module { alg, dims, action };
        for (ri, rel) in module.alg.spec().relations.iter().enumerate() {
            let mut resolved: Vec<(S, Path)> = Vec::new();
            for term in rel {
                if term.coeff.is_zero() {
                    continue;
                }
                let mut idxs = Vec::new();
                for name in &term.path {
                    idxs.push(module.alg.arrow_by_name(name)?);
                }
                let start = module.alg.arrow(idxs[0]).source;
                resolved.push((term.coeff.clone(), Path { start, arrows: idxs }));
            }
            if resolved.is_empty() {
                continue;
            }
            let src = resolved[0].1.start;
            let tgt = module.alg.path_end(&resolved[0].1);
            let mut sum = Mat::zeros(module.dims[tgt], module.dims[src]);
            for (c, p) in &resolved {
                sum = sum.add(&module.path_action(p).scale(c));
            }
            if !sum.is_zero() {
                return Err(Error::validation(format!(
                    "relation {ri} is not satisfied by the given matrices"
                )));
            }
        }
        Ok(module)
    }

    /// Internal constructor for matrices already known to satisfy the
    /// relations (projectives, kernels, pushouts and so on).
    pub(crate) fn new_unchecked(
        alg: Arc<Algebra<S>>,
        dims: Vec<usize>,
        action: Vec<Mat<S>>,
    ) -> Self {
        debug_assert_eq!(dims.len(), alg.vertex_count());
        debug_assert_eq!(action.len(), alg.arrow_count());
        Module { alg, dims, action }
    }

    /// The module with given dimensions and all arrows acting by zero.
    pub fn with_zero_maps(alg: Arc<Algebra<S>>, dims: Vec<usize>) -> Self {
        let action = (0..alg.arrow_count())
            .map(|ai| {
                let a = alg.arrow(ai);
                Mat::zeros(dims[a.target], dims[a.source])
            })
            .collect();
        Module { alg, dims, action }
    }

    pub fn algebra(&self) -> &Arc<Algebra<S>> {
        &self.alg
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn action(&self, arrow: usize) -> &Mat<S> {
        &self.action[arrow]
    }

    pub fn actions(&self) -> &[Mat<S>] {
        &self.action
    }

    /// Evaluates a path as a matrix (identity for trivial paths).
    pub fn path_action(&self, p: &Path) -> Mat<S> {
        let mut m = Mat::identity(self.dims[p.start]);
        for &a in &p.arrows {
            m = self.action[a].mul(&m);
        }
        m
    }

    /// A module is semisimple exactly when every arrow acts by zero.
    pub fn is_semisimple(&self) -> bool {
        self.action.iter().all(|m| m.is_zero())
    }

    /// Per-vertex multiplicity of each simple in a composition series;
    /// for quiver representations this is just the dimension vector.
    pub fn composition_multiplicities(&self) -> Vec<usize> {
        self.dims.clone()
    }

    /// Re-tags the module with another handle to the same algebra.
    pub fn with_algebra(&self, alg: &Arc<Algebra<S>>) -> Result<Module<S>> {
        if !alg.same_as(&self.alg) {
            return Err(Error::precondition(
                "cannot move a module to a structurally different algebra",
            ));
        }
        Ok(Module { alg: alg.clone(), dims: self.dims.clone(), action: self.action.clone() })
    }

    /// Direct sum, together with the canonical inclusions and projections.
    pub fn direct_sum(summands: &[&Module<S>]) -> (Module<S>, Vec<ModuleMap<S>>, Vec<ModuleMap<S>>) {
        assert!(!summands.is_empty(), "direct sum needs at least one summand");
        let alg = summands[0].alg.clone();
        for m in summands {
            assert!(m.alg.same_as(&alg), "direct sum across different algebras");
        }
        let nv = alg.vertex_count();
        let dims: Vec<usize> =
            (0..nv).map(|v| summands.iter().map(|m| m.dims[v]).sum()).collect();
        let action: Vec<Mat<S>> = (0..alg.arrow_count())
            .map(|ai| {
                let blocks: Vec<&Mat<S>> = summands.iter().map(|m| &m.action[ai]).collect();
                Mat::block_diag(&blocks)
            })
            .collect();
        let total = Module { alg: alg.clone(), dims, action };
        let mut incls = Vec::new();
        let mut projs = Vec::new();
        for (k, m) in summands.iter().enumerate() {
            let mut iparts = Vec::new();
            let mut pparts = Vec::new();
            for v in 0..nv {
                let before: usize = summands[..k].iter().map(|x| x.dims[v]).sum();
                let mut inc = Mat::zeros(total.dims[v], m.dims[v]);
                let mut prj = Mat::zeros(m.dims[v], total.dims[v]);
                for i in 0..m.dims[v] {
                    inc[(before + i, i)] = S::one();
                    prj[(i, before + i)] = S::one();
                }
                iparts.push(inc);
                pparts.push(prj);
            }
            incls.push(ModuleMap::new_unchecked((*m).clone(), total.clone(), iparts));
            projs.push(ModuleMap::new_unchecked(total.clone(), (*m).clone(), pparts));
        }
        (total, incls, projs)
    }

    /// Direct sum of `n` copies, with inclusions and projections.
    pub fn power(&self, n: usize) -> (Module<S>, Vec<ModuleMap<S>>, Vec<ModuleMap<S>>) {
        if n == 0 {
            let zero = self.alg.zero_module();
            return (zero, Vec::new(), Vec::new());
        }
        let copies: Vec<&Module<S>> = std::iter::repeat(self).take(n).collect();
        Module::direct_sum(&copies)
    }

    /// The dual module over the opposite algebra: same dimensions,
    /// transposed arrow actions (arrow indices line up across the pair).
    pub fn dual(&self) -> Module<S> {
        let op = self.alg.opposite();
        let action = self.action.iter().map(Mat::transpose).collect();
        Module { alg: op, dims: self.dims.clone(), action }
    }
}

/// A homomorphism of modules: one matrix per vertex, commuting with all
/// arrow actions.
#[derive(Clone, Debug)]
pub struct ModuleMap<S: Scalar> {
    source: Module<S>,
    target: Module<S>,
    parts: Vec<Mat<S>>,
}

impl<S: Scalar> PartialEq for ModuleMap<S> {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source && self.target == other.target && self.parts == other.parts
    }
}

impl<S: Scalar> ModuleMap<S> {
    /// Builds a map and verifies it commutes with every arrow.
    pub fn new(source: Module<S>, target: Module<S>, parts: Vec<Mat<S>>) -> Result<Self> {
        let alg = source.algebra().clone();
        if !alg.same_as(target.algebra()) {
            return Err(Error::validation("map between modules over different algebras"));
        }
        if parts.len() != alg.vertex_count() {
            return Err(Error::validation(format!(
                "expected {} vertex matrices, got {}",
                alg.vertex_count(),
                parts.len()
            )));
        }
        for v in 0..alg.vertex_count() {
            if parts[v].rows() != target.dim_at(v) || parts[v].cols() != source.dim_at(v) {
                return Err(Error::validation(format!(
                    "vertex '{}' needs a {}x{} matrix, got {}x{}",
                    alg.vertex_label(v),
                    target.dim_at(v),
                    source.dim_at(v),
                    parts[v].rows(),
                    parts[v].cols()
                )));
            }
        }
        let map = ModuleMap { source, target, parts };
        for ai in 0..alg.arrow_count() {
            if !map.commutes_with(ai) {
                return Err(Error::validation(format!(
                    "map does not commute with arrow '{}'",
                    alg.arrow(ai).name
                )));
            }
        }
        Ok(map)
    }

    pub(crate) fn new_unchecked(
        source: Module<S>,
        target: Module<S>,
        parts: Vec<Mat<S>>,
    ) -> Self {
        let map = ModuleMap { source, target, parts };
        debug_assert!(
            (0..map.source.algebra().arrow_count()).all(|ai| map.commutes_with(ai)),
            "internal module map does not commute with the arrow actions"
        );
        map
    }

    fn commutes_with(&self, arrow: usize) -> bool {
        let a = self.source.algebra().arrow(arrow);
        let lhs = self.target.action(arrow).mul(&self.parts[a.source]);
        let rhs = self.parts[a.target].mul(self.source.action(arrow));
        lhs == rhs
    }

    pub fn identity(module: &Module<S>) -> Self {
        let parts = module.dims().iter().map(|&d| Mat::identity(d)).collect();
        ModuleMap { source: module.clone(), target: module.clone(), parts }
    }

    pub fn zero(source: &Module<S>, target: &Module<S>) -> Self {
        let parts = (0..source.algebra().vertex_count())
            .map(|v| Mat::zeros(target.dim_at(v), source.dim_at(v)))
            .collect();
        ModuleMap { source: source.clone(), target: target.clone(), parts }
    }

    pub fn source(&self) -> &Module<S> {
        &self.source
    }

    pub fn target(&self) -> &Module<S> {
        &self.target
    }

    pub fn part(&self, v: usize) -> &Mat<S> {
        &self.parts[v]
    }

    pub fn parts(&self) -> &[Mat<S>] {
        &self.parts
    }

    /// `other` after `self` (self first): requires `self.target = other.source`.
    pub fn then(&self, other: &ModuleMap<S>) -> ModuleMap<S> {
        assert_eq!(
            self.target, other.source,
            "composition needs matching middle module"
        );
        let parts = self
            .parts
            .iter()
            .zip(&other.parts)
            .map(|(f, g)| g.mul(f))
            .collect();
        ModuleMap { source: self.source.clone(), target: other.target.clone(), parts }
    }

    pub fn add(&self, other: &ModuleMap<S>) -> ModuleMap<S> {
        assert_eq!(self.source, other.source);
        assert_eq!(self.target, other.target);
        let parts = self.parts.iter().zip(&other.parts).map(|(a, b)| a.add(b)).collect();
        ModuleMap { source: self.source.clone(), target: self.target.clone(), parts }
    }

    pub fn sub(&self, other: &ModuleMap<S>) -> ModuleMap<S> {
        assert_eq!(self.source, other.source);
        assert_eq!(self.target, other.target);
        let parts = self.parts.iter().zip(&other.parts).map(|(a, b)| a.sub(b)).collect();
        ModuleMap { source: self.source.clone(), target: self.target.clone(), parts }
    }

    pub fn scale(&self, c: &S) -> ModuleMap<S> {
        let parts = self.parts.iter().map(|m| m.scale(c)).collect();
        ModuleMap { source: self.source.clone(), target: self.target.clone(), parts }
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(Mat::is_zero)
    }

    pub fn is_injective(&self) -> bool {
        self.parts.iter().all(|m| m.rank() == m.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.parts.iter().all(|m| m.rank() == m.rows())
    }

    pub fn is_isomorphism(&self) -> bool {
        self.source.dims() == self.target.dims() && self.is_injective()
    }

    /// Inverse of an isomorphism.
    pub fn inverse(&self) -> Result<ModuleMap<S>> {
        if !self.is_isomorphism() {
            return Err(Error::precondition("map is not invertible"));
        }
        let mut parts = Vec::new();
        for m in &self.parts {
            let inv = m
                .solve_matrix(&Mat::identity(m.rows()))
                .ok_or_else(|| Error::precondition("map is not invertible"))?;
            parts.push(inv);
        }
        Ok(ModuleMap { source: self.target.clone(), target: self.source.clone(), parts })
    }

    /// The dual map over the opposite algebra (direction reverses).
    pub fn dual(&self) -> ModuleMap<S> {
        let parts = self.parts.iter().map(Mat::transpose).collect();
        ModuleMap { source: self.target.dual(), target: self.source.dual(), parts }
    }
}

/// A short exact sequence `0 -> sub -> mid -> quot -> 0`, stored as the
/// inclusion and the projection.
#[derive(Clone, Debug, PartialEq)]
pub struct ShortExactSeq<S: Scalar> {
    pub incl: ModuleMap<S>,
    pub proj: ModuleMap<S>,
}

impl<S: Scalar> ShortExactSeq<S> {
    /// Wraps the two maps and verifies exactness.
    pub fn new(incl: ModuleMap<S>, proj: ModuleMap<S>) -> Result<Self> {
        if incl.target() != proj.source() {
            return Err(Error::validation("sequence maps do not share the middle module"));
        }
        if !incl.is_injective() {
            return Err(Error::validation("sequence inclusion is not injective"));
        }
        if !proj.is_surjective() {
            return Err(Error::validation("sequence projection is not surjective"));
        }
        if !incl.then(&proj).is_zero() {
            return Err(Error::validation("sequence does not compose to zero"));
        }
        for v in 0..incl.source().algebra().vertex_count() {
            if incl.source().dim_at(v) + proj.target().dim_at(v) != incl.target().dim_at(v) {
                return Err(Error::validation("sequence dimensions do not add up"));
            }
        }
        Ok(ShortExactSeq { incl, proj })
    }

    pub fn sub(&self) -> &Module<S> {
        self.incl.source()
    }

    pub fn mid(&self) -> &Module<S> {
        self.incl.target()
    }

    pub fn quot(&self) -> &Module<S> {
        self.proj.target()
    }

    /// The dual sequence over the opposite algebra: sub and quot swap.
    pub fn dual(&self) -> ShortExactSeq<S> {
        ShortExactSeq { incl: self.proj.dual(), proj: self.incl.dual() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::spec::AlgebraSpec;
    use crate::Q;

    fn two_vertex_line() -> Arc<Algebra<Q>> {
        // a -> b, one arrow.
        let spec: AlgebraSpec<Q> = AlgebraSpec::new(vec!["a", "b"]).arrow("r", "a", "b");
        Algebra::new(spec).unwrap()
    }

    #[test]
    fn projective_at_source_has_radical() {
        let alg = two_vertex_line();
        let p = alg.projective(0);
        assert_eq!(p.dims(), &[1, 1]);
        assert!(!p.action(0).is_zero());
        let p_b = alg.projective(1);
        assert_eq!(p_b.dims(), &[0, 1]);
    }

    #[test]
    fn injective_at_target_matches_projective_at_source() {
        let alg = two_vertex_line();
        let i_b = alg.injective(1);
        assert_eq!(i_b.dims(), &[1, 1]);
        assert!(!i_b.action(0).is_zero());
        let i_a = alg.injective(0);
        assert_eq!(i_a.dims(), &[1, 0]);
    }

    #[test]
    fn relation_check_rejects_bad_module() {
        // Commutative square: ac = bd must hold.
        let spec: AlgebraSpec<Q> = AlgebraSpec::new(vec!["1", "2", "3", "4"])
            .arrow("a", "1", "2")
            .arrow("b", "1", "3")
            .arrow("c", "2", "4")
            .arrow("d", "3", "4")
            .relation(vec![
                (Q::from_int(1), vec!["a", "c"]),
                (Q::from_int(-1), vec!["b", "d"]),
            ]);
        let alg = Algebra::new(spec).unwrap();
        assert_eq!(alg.dimension(), 9);
        let one = Mat::identity(1);
        let ok = Module::new(
            alg.clone(),
            vec![1, 1, 1, 1],
            vec![one.clone(), one.clone(), one.clone(), one.clone()],
        );
        assert!(ok.is_ok());
        let bad = Module::new(
            alg.clone(),
            vec![1, 1, 1, 1],
            vec![one.clone(), one.clone(), one.clone(), one.scale(&Q::from_int(2))],
        );
        assert!(bad.is_err());
    }

    #[test]
    fn short_exact_sequence_validates() {
        let alg = two_vertex_line();
        let p = alg.projective(0); // dims (1,1)
        let sub = alg.simple(1);
        let quot = alg.simple(0);
        let incl = ModuleMap::new(
            sub.clone(),
            p.clone(),
            vec![Mat::zeros(1, 0), Mat::identity(1)],
        )
        .unwrap();
        let proj = ModuleMap::new(
            p.clone(),
            quot.clone(),
            vec![Mat::identity(1), Mat::zeros(0, 1)],
        )
        .unwrap();
        let ses = ShortExactSeq::new(incl, proj).unwrap();
        assert_eq!(ses.sub().dims(), &[0, 1]);
        assert_eq!(ses.quot().dims(), &[1, 0]);
        let dual = ses.dual();
        assert_eq!(dual.sub().dims(), &[1, 0]);
        assert_eq!(dual.quot().dims(), &[0, 1]);
    }

    #[test]
    fn dual_of_projective_is_injective_on_opposite() {
        let alg = two_vertex_line();
        let p = alg.projective(0);
        let d = p.dual();
        let op = alg.opposite();
        // Over the opposite algebra the arrow runs b -> a, and the dual of
        // P(a) is the injective at a.
        let i = op.injective(0);
        assert_eq!(d.dims(), i.dims());
        assert_eq!(d.action(0), i.action(0));
    }

    #[test]
    fn direct_sum_assembles_blocks() {
        let alg = two_vertex_line();
        let p = alg.projective(0);
        let s = alg.simple(1);
        let (sum, incls, projs) = Module::direct_sum(&[&p, &s]);
        assert_eq!(sum.dims(), &[1, 2]);
        assert_eq!(incls.len(), 2);
        // Round trip: proj_i . incl_i = id.
        for k in 0..2 {
            let round = incls[k].then(&projs[k]);
            let id = ModuleMap::identity(incls[k].source());
            assert_eq!(round, id);
        }
        // Cross terms vanish.
        assert!(incls[0].then(&projs[1]).is_zero());
    }
}
