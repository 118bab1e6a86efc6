//! Restriction to an open vertex set (the corner algebra `eAe`) with its
//! induction and coinduction functors, the intermediate extension, and
//! restriction to a closed vertex set (the quotient algebra).

use std::collections::BTreeMap;
use std::sync::Arc;

use super::algebra::Algebra;
use super::hom::hom_basis;
use super::module::{Module, ModuleMap};
use super::ops::image_module;
use super::path::Path;
use crate::error::Error;
use crate::linalg::{quotient_by_subspace, Mat};
use crate::scalar::Scalar;
use crate::Result;

/// The corner algebra at an open vertex set, with translation data.
///
/// Valid only when every basis path between open vertices stays inside
/// the open set; then the corner algebra `eAe` is presented by the
/// induced subquiver, which is verified against the multiplication
/// tables during construction.
#[derive(Debug)]
pub struct OpenRestriction<S: Scalar> {
    big: Arc<Algebra<S>>,
    /// Open vertices, ascending big indices.
    open: Vec<usize>,
    /// Position of each big vertex in `open` (if open).
    pos: Vec<Option<usize>>,
    /// The corner algebra on the induced subquiver.
    sub: Arc<Algebra<S>>,
    /// Sub arrow index -> big arrow index.
    arrow_map: Vec<usize>,
}

impl<S: Scalar> OpenRestriction<S> {
    pub fn new(big: &Arc<Algebra<S>>, open_vertices: &[usize]) -> Result<Self> {
        let nv = big.vertex_count();
        let mut open: Vec<usize> = open_vertices.to_vec();
        open.sort_unstable();
        open.dedup();
        if open.is_empty() || open.last().is_some_and(|&v| v >= nv) {
            return Err(Error::input("open vertex set must be a nonempty subset"));
        }
        let mut pos = vec![None; nv];
        for (i, &v) in open.iter().enumerate() {
            pos[v] = Some(i);
        }
        // Every basis path between open endpoints must stay open.
        for p in big.basis_paths() {
            if pos[p.start].is_none() || pos[big.path_end(p)].is_none() {
                continue;
            }
            for &a in &p.arrows {
                let at = big.arrow(a).target;
                if pos[at].is_none() {
                    return Err(Error::precondition(format!(
                        "basis path {} between open vertices leaves the open set at '{}'",
                        big.path_string(p),
                        big.vertex_label(at)
                    )));
                }
            }
        }
        // Build the induced subquiver (relations whose terms all survive).
        let spec = induced_open_spec(big, &pos);
        let sub = Algebra::new(spec)?;
        let arrow_map: Vec<usize> = (0..big.arrow_count())
            .filter(|&ai| {
                let a = big.arrow(ai);
                pos[a.source].is_some() && pos[a.target].is_some()
            })
            .collect();
        debug_assert_eq!(arrow_map.len(), sub.arrow_count());
        let this = OpenRestriction { big: big.clone(), open, pos, sub, arrow_map };
        this.verify_corner_presentation()?;
        Ok(this)
    }

    /// Certifies that the induced subquiver really presents the corner
    /// algebra: basis sizes agree pairwise and the one-arrow products
    /// reduce identically in both presentations.
    fn verify_corner_presentation(&self) -> Result<()> {
        let mut open_dim = 0;
        for &s in &self.open {
            for &t in &self.open {
                open_dim += self.big.pair_basis(s, t).len();
            }
        }
        if open_dim != self.sub.dimension() {
            return Err(Error::precondition(format!(
                "corner algebra has dimension {open_dim} but the induced subquiver has \
                 dimension {}",
                self.sub.dimension()
            )));
        }
        // Each sub basis path must be a big basis path, and multiplying by
        // an arrow must reduce the same way in both algebras.
        for (i, p) in self.sub.basis_paths().iter().enumerate() {
            let big_p = self.path_to_big(p);
            let Some(big_idx) = self.big.index_of_path(&big_p) else {
                return Err(Error::precondition(format!(
                    "corner basis path {} is not a basis path of the ambient algebra",
                    self.sub.path_string(p)
                )));
            };
            for (sub_a, &big_a) in self.arrow_map.iter().enumerate() {
                if self.sub.arrow(sub_a).source != self.sub.path_end(p) {
                    continue;
                }
                let sub_nf = self.sub.right_mul(i, sub_a);
                let big_nf = self.big.right_mul(big_idx, big_a);
                let translated: Vec<(usize, S)> = sub_nf
                    .iter()
                    .map(|(q, c)| {
                        let bq = self.path_to_big(&self.sub.basis_paths()[*q]);
                        (
                            self.big.index_of_path(&bq).expect("translated basis path"),
                            c.clone(),
                        )
                    })
                    .collect();
                let mut sorted = translated;
                sorted.sort_by_key(|(q, _)| *q);
                let mut big_sorted: Vec<(usize, S)> = big_nf.to_vec();
                big_sorted.sort_by_key(|(q, _)| *q);
                if sorted != big_sorted {
                    return Err(Error::precondition(format!(
                        "corner multiplication disagrees with the ambient algebra on \
                         path {} times arrow '{}'",
                        self.sub.path_string(p),
                        self.sub.arrow(sub_a).name
                    )));
                }
            }
        }
        Ok(())
    }

    fn path_to_big(&self, p: &Path) -> Path {
        Path {
            start: self.open[p.start],
            arrows: p.arrows.iter().map(|&a| self.arrow_map[a]).collect(),
        }
    }

    pub fn algebra(&self) -> &Arc<Algebra<S>> {
        &self.sub
    }

    pub fn ambient(&self) -> &Arc<Algebra<S>> {
        &self.big
    }

    pub fn open_vertices(&self) -> &[usize] {
        &self.open
    }

    /// Restriction of an ambient module to the open part (`X e`).
    pub fn restrict(&self, x: &Module<S>) -> Module<S> {
        let dims: Vec<usize> = self.open.iter().map(|&v| x.dim_at(v)).collect();
        let action: Vec<Mat<S>> =
            self.arrow_map.iter().map(|&ai| x.action(ai).clone()).collect();
        Module::new_unchecked(self.sub.clone(), dims, action)
    }

    /// Induction `F (x)_{eAe} eA` (left adjoint of restriction).
    pub fn induce(&self, f: &Module<S>) -> Module<S> {
        self.induce_with_unit(f).0
    }

    /// Induction together with the per-vertex ambient data used to build
    /// the unit `F -> restrict(induce F)`.
    fn induce_with_unit(&self, f: &Module<S>) -> (Module<S>, Vec<Mat<S>>) {
        let big = &self.big;
        let nv = big.vertex_count();
        let layouts: Vec<Layout> = (0..nv).map(|v| self.tensor_layout(f, v)).collect();
        // Balancing relations: (f b) (x) p  =  f (x) (b p), one generator
        // per open arrow, target-path and basis vector of F.
        let mut quots = Vec::new();
        for v in 0..nv {
            let layout = &layouts[v];
            let mut gens = Mat::zeros(layout.total, 0);
            for (sub_a, &big_a) in self.arrow_map.iter().enumerate() {
                let arr = big.arrow(big_a);
                let s_pos = self.pos[arr.source].expect("open arrow source");
                let t_pos = self.pos[arr.target].expect("open arrow target");
                let fb = f.action(sub_a); // F_s -> F_t
                for &(block_v, p_idx, offset) in &layout.blocks {
                    if block_v != arr.target {
                        continue;
                    }
                    // f (x) (b p) for f ranging over the basis of F_s.
                    let bp = big.left_mul(p_idx, big_a);
                    for col in 0..f.dim_at(s_pos) {
                        let mut g = vec![S::zero(); layout.total];
                        for r in 0..f.dim_at(t_pos) {
                            let c = fb[(r, col)].clone();
                            if !c.is_zero() {
                                g[offset + r] = c;
                            }
                        }
                        for (q_idx, c) in bp {
                            let q_off = layout.offset_of(arr.source, *q_idx);
                            g[q_off + col] = g[q_off + col].clone() - c.clone();
                        }
                        gens = gens.hstack(&Mat::column_vector(g));
                    }
                }
            }
            quots.push(quotient_by_subspace(layout.total, &gens));
        }
        let dims: Vec<usize> = quots.iter().map(|q| q.dim).collect();
        let mut action = Vec::new();
        for ai in 0..big.arrow_count() {
            let arr = big.arrow(ai);
            let (u, w) = (arr.source, arr.target);
            let mut raw = Mat::zeros(layouts[w].total, layouts[u].total);
            for &(s, p_idx, off_u) in &layouts[u].blocks {
                let pa = big.right_mul(p_idx, ai);
                let d = f.dim_at(self.pos[s].expect("open block"));
                for (q_idx, c) in pa {
                    let off_w = layouts[w].offset_of(s, *q_idx);
                    for r in 0..d {
                        raw[(off_w + r, off_u + r)] = c.clone();
                    }
                }
            }
            action.push(quots[w].proj.mul(&raw).mul(&quots[u].section));
        }
        let module = Module::new_unchecked(big.clone(), dims, action);
        // Unit data: for each open vertex v, the inclusion of F_v at the
        // trivial-path block followed by the quotient projection.
        let mut unit = Vec::new();
        for (i, &v) in self.open.iter().enumerate() {
            let p_idx = big
                .index_of_path(&Path::trivial(v))
                .expect("trivial path is a basis path");
            let off = layouts[v].offset_of(v, p_idx);
            let mut incl = Mat::zeros(layouts[v].total, f.dim_at(i));
            for r in 0..f.dim_at(i) {
                incl[(off + r, r)] = S::one();
            }
            unit.push(quots[v].proj.mul(&incl));
        }
        (module, unit)
    }

    /// Coinduction `Hom_{eAe}(eA, F)` (right adjoint of restriction).
    pub fn coinduce(&self, f: &Module<S>) -> Module<S> {
        self.coinduce_with_counit(f).0
    }

    fn coinduce_with_counit(&self, f: &Module<S>) -> (Module<S>, Vec<Mat<S>>) {
        let big = &self.big;
        let nv = big.vertex_count();
        let layouts: Vec<Layout> = (0..nv).map(|v| self.cotensor_layout(f, v)).collect();
        // Conditions: phi(nf(p b)) = F_b(phi(p)) for open arrows b.
        let mut solutions: Vec<Mat<S>> = Vec::new();
        for v in 0..nv {
            let layout = &layouts[v];
            let mut rows: Vec<Vec<S>> = Vec::new();
            for (sub_a, &big_a) in self.arrow_map.iter().enumerate() {
                let arr = big.arrow(big_a);
                let s_pos = self.pos[arr.source].expect("open arrow source");
                let t_pos = self.pos[arr.target].expect("open arrow target");
                let fb = f.action(sub_a);
                for &(block_v, p_idx, offset) in &layout.blocks {
                    if block_v != arr.source {
                        continue;
                    }
                    let pb = big.right_mul(p_idx, big_a);
                    for r in 0..f.dim_at(t_pos) {
                        let mut row = vec![S::zero(); layout.total];
                        for (q_idx, c) in pb {
                            let q_off = layout.offset_of(arr.target, *q_idx);
                            row[q_off + r] = row[q_off + r].clone() + c.clone();
                        }
                        for k in 0..f.dim_at(s_pos) {
                            let c = fb[(r, k)].clone();
                            if !c.is_zero() {
                                row[offset + k] = row[offset + k].clone() - c;
                            }
                        }
                        rows.push(row);
                    }
                }
            }
            let sol = if rows.is_empty() {
                Mat::identity(layout.total)
            } else {
                Mat::from_rows(rows).kernel_basis()
            };
            solutions.push(sol);
        }
        let dims: Vec<usize> = solutions.iter().map(Mat::cols).collect();
        let mut action = Vec::new();
        for ai in 0..big.arrow_count() {
            let arr = big.arrow(ai);
            let (u, w) = (arr.source, arr.target);
            // (phi a)(p) = phi(nf(a p)) for p from w.
            let mut raw = Mat::zeros(layouts[w].total, layouts[u].total);
            for &(s, p_idx, off_w) in &layouts[w].blocks {
                let ap = big.left_mul(p_idx, ai);
                let d = f.dim_at(self.pos[s].expect("open block"));
                for (q_idx, c) in ap {
                    let off_u = layouts[u].offset_of(s, *q_idx);
                    for r in 0..d {
                        raw[(off_w + r, off_u + r)] = c.clone();
                    }
                }
            }
            let pushed = raw.mul(&solutions[u]);
            action.push(
                solutions[w]
                    .solve_matrix(&pushed)
                    .expect("coinduced action preserves the solution space"),
            );
        }
        let module = Module::new_unchecked(big.clone(), dims, action);
        // Counit: evaluation at the trivial path, for each open vertex.
        let mut counit = Vec::new();
        for (i, &v) in self.open.iter().enumerate() {
            let p_idx = big
                .index_of_path(&Path::trivial(v))
                .expect("trivial path is a basis path");
            let off = layouts[v].offset_of(v, p_idx);
            let mut eval = Mat::zeros(f.dim_at(i), layouts[v].total);
            for r in 0..f.dim_at(i) {
                eval[(r, off + r)] = S::one();
            }
            counit.push(eval.mul(&solutions[v]));
        }
        (module, counit)
    }

    /// The intermediate extension: the image of the unique map
    /// `induce F -> coinduce F` restricting to the identity on the open
    /// part.
    pub fn intermediate_extension(&self, f: &Module<S>) -> Module<S> {
        let (lower, unit) = self.induce_with_unit(f);
        let (upper, counit) = self.coinduce_with_counit(f);
        if f.is_zero() {
            return self.big.zero_module();
        }
        let basis = hom_basis(&lower, &upper);
        // Solve sum_i x_i (counit . h_i . unit) = identity on each open
        // vertex.
        let mut rows: Vec<Vec<S>> = Vec::new();
        let mut rhs: Vec<S> = Vec::new();
        let entries: Vec<Vec<Mat<S>>> = basis
            .iter()
            .map(|h| {
                self.open
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| counit[i].mul(h.part(v)).mul(&unit[i]))
                    .collect()
            })
            .collect();
        for (i, _) in self.open.iter().enumerate() {
            let d = f.dim_at(i);
            for r in 0..d {
                for c in 0..d {
                    let row: Vec<S> =
                        entries.iter().map(|per_h| per_h[i][(r, c)].clone()).collect();
                    rows.push(row);
                    rhs.push(if r == c { S::one() } else { S::zero() });
                }
            }
        }
        let coeffs = Mat::from_rows(rows)
            .solve(&Mat::column_vector(rhs))
            .expect("canonical map from induction to coinduction exists");
        let mut theta = ModuleMap::zero(&lower, &upper);
        for (x, h) in coeffs.col(0).iter().zip(&basis) {
            if !x.is_zero() {
                theta = theta.add(&h.scale(x));
            }
        }
        image_module(&theta).0
    }

    fn tensor_layout(&self, f: &Module<S>, v: usize) -> Layout {
        // Blocks (s, p) for open s and basis paths p: s -> v.
        let mut blocks = Vec::new();
        let mut total = 0;
        for (i, &s) in self.open.iter().enumerate() {
            for &p_idx in self.big.pair_basis(s, v) {
                blocks.push((s, p_idx, total));
                total += f.dim_at(i);
            }
        }
        Layout { blocks, total }
    }

    fn cotensor_layout(&self, f: &Module<S>, v: usize) -> Layout {
        // Blocks (s, p) for open s and basis paths p: v -> s.
        let mut blocks = Vec::new();
        let mut total = 0;
        for (i, &s) in self.open.iter().enumerate() {
            for &p_idx in self.big.pair_basis(v, s) {
                blocks.push((s, p_idx, total));
                total += f.dim_at(i);
            }
        }
        Layout { blocks, total }
    }
}

/// Free function form of [`OpenRestriction::intermediate_extension`].
pub fn intermediate_extension<S: Scalar>(
    open: &OpenRestriction<S>,
    f: &Module<S>,
) -> Module<S> {
    open.intermediate_extension(f)
}

/// Block layout of a tensor/cotensor ambient space at one vertex.
struct Layout {
    /// `(open big vertex, big basis path index, offset)`.
    blocks: Vec<(usize, usize, usize)>,
    total: usize,
}

impl Layout {
    fn offset_of(&self, s: usize, p_idx: usize) -> usize {
        self.blocks
            .iter()
            .find(|&&(bs, bp, _)| bs == s && bp == p_idx)
            .map(|&(_, _, off)| off)
            .expect("path block present in layout")
    }
}

fn induced_open_spec<S: Scalar>(
    big: &Arc<Algebra<S>>,
    pos: &[Option<usize>],
) -> super::spec::AlgebraSpec<S> {
    let keep: Vec<usize> =
        (0..big.vertex_count()).filter(|&v| pos[v].is_some()).collect();
    big.restricted_spec(&keep)
}

/// The quotient algebra on a closed vertex set, with module translation.
pub struct ClosedRestriction<S: Scalar> {
    big: Arc<Algebra<S>>,
    /// Closed vertices, ascending big indices.
    closed: Vec<usize>,
    pos: Vec<Option<usize>>,
    sub: Arc<Algebra<S>>,
    /// Sub arrow index -> big arrow index.
    arrow_map: Vec<usize>,
}

impl<S: Scalar> ClosedRestriction<S> {
    pub fn new(big: &Arc<Algebra<S>>, closed_vertices: &[usize]) -> Result<Self> {
        let nv = big.vertex_count();
        let mut closed: Vec<usize> = closed_vertices.to_vec();
        closed.sort_unstable();
        closed.dedup();
        if closed.is_empty() || closed.last().is_some_and(|&v| v >= nv) {
            return Err(Error::input("closed vertex set must be a nonempty subset"));
        }
        let mut pos = vec![None; nv];
        for (i, &v) in closed.iter().enumerate() {
            pos[v] = Some(i);
        }
        let sub = Algebra::new(big.restricted_spec(&closed))?;
        let arrow_map: Vec<usize> = (0..big.arrow_count())
            .filter(|&ai| {
                let a = big.arrow(ai);
                pos[a.source].is_some() && pos[a.target].is_some()
            })
            .collect();
        debug_assert_eq!(arrow_map.len(), sub.arrow_count());
        Ok(ClosedRestriction { big: big.clone(), closed, pos, sub, arrow_map })
    }

    pub fn algebra(&self) -> &Arc<Algebra<S>> {
        &self.sub
    }

    pub fn ambient(&self) -> &Arc<Algebra<S>> {
        &self.big
    }

    pub fn closed_vertices(&self) -> &[usize] {
        &self.closed
    }

    pub fn sub_vertex(&self, big_vertex: usize) -> Option<usize> {
        self.pos[big_vertex]
    }

    pub fn big_vertex(&self, sub_vertex: usize) -> usize {
        self.closed[sub_vertex]
    }

    /// Reads an ambient module supported on the closed set as a module
    /// over the quotient algebra.
    pub fn to_sub(&self, x: &Module<S>) -> Result<Module<S>> {
        for v in 0..self.big.vertex_count() {
            if self.pos[v].is_none() && x.dim_at(v) != 0 {
                return Err(Error::precondition(format!(
                    "module is not supported on the closed set: nonzero at '{}'",
                    self.big.vertex_label(v)
                )));
            }
        }
        let dims: Vec<usize> = self.closed.iter().map(|&v| x.dim_at(v)).collect();
        let action: Vec<Mat<S>> =
            self.arrow_map.iter().map(|&ai| x.action(ai).clone()).collect();
        Ok(Module::new_unchecked(self.sub.clone(), dims, action))
    }

    /// Zero-pads a module over the quotient algebra to the ambient one.
    pub fn to_big(&self, x: &Module<S>) -> Module<S> {
        let nv = self.big.vertex_count();
        let dims: Vec<usize> =
            (0..nv).map(|v| self.pos[v].map_or(0, |i| x.dim_at(i))).collect();
        let mut arrow_of_big: BTreeMap<usize, usize> = BTreeMap::new();
        for (sub_a, &big_a) in self.arrow_map.iter().enumerate() {
            arrow_of_big.insert(big_a, sub_a);
        }
        let action: Vec<Mat<S>> = (0..self.big.arrow_count())
            .map(|ai| match arrow_of_big.get(&ai) {
                Some(&sub_a) => x.action(sub_a).clone(),
                None => {
                    let a = self.big.arrow(ai);
                    Mat::zeros(dims[a.target], dims[a.source])
                }
            })
            .collect();
        Module::new_unchecked(self.big.clone(), dims, action)
    }

    /// Transports a map of quotient-algebra modules to the ambient algebra.
    pub fn map_to_big(&self, f: &ModuleMap<S>) -> ModuleMap<S> {
        let source = self.to_big(f.source());
        let target = self.to_big(f.target());
        let nv = self.big.vertex_count();
        let parts: Vec<Mat<S>> = (0..nv)
            .map(|v| match self.pos[v] {
                Some(i) => f.part(i).clone(),
                None => Mat::zeros(0, 0),
            })
            .collect();
        ModuleMap::new_unchecked(source, target, parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::iso::is_isomorphic;
    use crate::quiver::spec::AlgebraSpec;
    use crate::Q;

    fn line() -> Arc<Algebra<Q>> {
        Algebra::new(AlgebraSpec::<Q>::new(vec!["a", "b"]).arrow("r", "a", "b")).unwrap()
    }

    fn path3() -> Arc<Algebra<Q>> {
        Algebra::new(
            AlgebraSpec::<Q>::new(vec!["a", "b", "c"]).arrow("r", "a", "b").arrow("s", "b", "c"),
        )
        .unwrap()
    }

    #[test]
    fn open_restriction_rejects_paths_through_closed_vertices() {
        let alg = path3();
        let err = OpenRestriction::new(&alg, &[0, 2]).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("leaves the open set"), "unexpected message: {msg}");
    }

    #[test]
    fn induction_of_simple_at_open_vertex() {
        let alg = line();
        let open = OpenRestriction::new(&alg, &[1]).unwrap();
        let f = open.algebra().simple(0); // L(b) seen in the corner algebra
        let lower = open.induce(&f);
        assert_eq!(lower.dims(), &[0, 1]);
        let upper = open.coinduce(&f);
        assert_eq!(upper.dims(), &[1, 1]); // the injective hull I(b)
        let ic = open.intermediate_extension(&f);
        assert_eq!(ic.dims(), &[0, 1]);
    }

    #[test]
    fn induction_at_the_source_vertex_gives_the_projective() {
        let alg = line();
        let open = OpenRestriction::new(&alg, &[0]).unwrap();
        let f = open.algebra().simple(0); // L(a)
        let lower = open.induce(&f);
        assert_eq!(lower.dims(), &[1, 1]);
        assert!(is_isomorphic(&lower, &alg.projective(0)));
        let upper = open.coinduce(&f);
        assert_eq!(upper.dims(), &[1, 0]);
        let ic = open.intermediate_extension(&f);
        assert_eq!(ic.dims(), &[1, 0]);
    }

    #[test]
    fn restriction_after_induction_is_identity() {
        let alg = path3();
        let open = OpenRestriction::new(&alg, &[1, 2]).unwrap();
        let f = open.algebra().projective(0); // P(b) in the corner
        let back = open.restrict(&open.induce(&f));
        assert!(is_isomorphic(&back, &f));
        let back2 = open.restrict(&open.coinduce(&f));
        assert!(is_isomorphic(&back2, &f));
    }

    #[test]
    fn closed_restriction_round_trips() {
        let alg = path3();
        let closed = ClosedRestriction::new(&alg, &[0, 1]).unwrap();
        assert_eq!(closed.algebra().dimension(), 3); // two vertices + one arrow
        let p = closed.algebra().projective(0);
        let big = closed.to_big(&p);
        assert_eq!(big.dims(), &[1, 1, 0]);
        let back = closed.to_sub(&big).unwrap();
        assert_eq!(&back, &p);
        let s = alg.simple(2);
        assert!(closed.to_sub(&s).is_err());
    }

    #[test]
    fn induced_projective_matches_ambient_projective() {
        let alg = path3();
        // Open part {c}: inducing the simple gives P(c) = L(c).
        let open = OpenRestriction::new(&alg, &[2]).unwrap();
        let f = open.algebra().simple(0);
        assert!(is_isomorphic(&open.induce(&f), &alg.projective(2)));
        // Open part {b, c}: inducing the corner P(b) gives the ambient P(b).
        let open_bc = OpenRestriction::new(&alg, &[1, 2]).unwrap();
        let pb = open_bc.algebra().projective(0);
        assert!(is_isomorphic(&open_bc.induce(&pb), &alg.projective(1)));
    }
}
