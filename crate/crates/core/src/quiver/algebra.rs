//! Validated quiver algebras: path bases of the quotient by the relation
//! ideal, normal forms, projectives, injectives and the opposite algebra.

use std::collections::hash_map::DefaultHasher;
use std::collections::BTreeMap;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use super::module::Module;
use super::path::Path;
use super::spec::{AlgebraSpec, ArrowSpec, RelationTerm};
use crate::error::Error;
use crate::linalg::Mat;
use crate::qh::OrderedSimples;
use crate::scalar::Scalar;
use crate::Result;

/// An arrow with resolved vertex indices.
#[derive(Clone, Debug)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A finite-dimensional quiver algebra with a fixed monomial path basis.
///
/// Constructed through [`Algebra::new`], which enumerates all paths up to
/// one past the nilpotency bound, spans the relation ideal by exact linear
/// algebra and selects the reduced-echelon complement as the basis.  Basis
/// paths, their indices and all composition tables are immutable after
/// construction, so an `Algebra` can be shared freely behind an [`Arc`].
pub struct Algebra<S: Scalar> {
    spec: AlgebraSpec<S>,
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    bound: usize,
    /// All basis paths, sorted by (length, start, arrow sequence).
    paths: Vec<Path>,
    path_index: BTreeMap<Path, usize>,
    /// `pair_basis[s][t]` lists global indices of basis paths from s to t.
    pair_basis: Vec<Vec<Vec<usize>>>,
    /// Position of each basis path inside its `pair_basis` bucket.
    pos_in_pair: Vec<usize>,
    /// `right_mul[p][a]` = normal form of (basis path p) * (arrow a).
    right_mul: Vec<Vec<Vec<(usize, S)>>>,
    /// `left_mul[p][a]` = normal form of (arrow a) * (basis path p).
    left_mul: Vec<Vec<Vec<(usize, S)>>>,
    ordering: Option<OrderedSimples>,
    fingerprint: u64,
    opposite: OnceLock<Arc<Algebra<S>>>,
}

impl<S: Scalar> std::fmt::Debug for Algebra<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Algebra")
            .field("vertices", &self.vertices)
            .field("arrows", &self.arrows.len())
            .field("dimension", &self.paths.len())
            .finish()
    }
}

/// Validation output: the monomial basis and per-vertex projective sizes.
#[derive(Clone, Debug)]
pub struct BasisReport {
    pub dimension: usize,
    pub basis: Vec<String>,
    /// `(vertex label, total dimension of the projective at that vertex)`.
    pub projective_dims: Vec<(String, usize)>,
}

/// Hard cap on enumerated paths, to fail fast on runaway inputs.
const PATH_CAP: usize = 200_000;

impl<S: Scalar> Algebra<S> {
    /// Validates a specification and builds the algebra.
    pub fn new(spec: AlgebraSpec<S>) -> Result<Arc<Self>> {
        let vertices = spec.vertices.clone();
        if vertices.is_empty() {
            return Err(Error::validation("algebra needs at least one vertex"));
        }
        let mut seen = BTreeMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if v.is_empty() {
                return Err(Error::validation("empty vertex label"));
            }
            if seen.insert(v.clone(), i).is_some() {
                return Err(Error::validation(format!("duplicate vertex label '{v}'")));
            }
        }
        let vertex_of = |label: &str| -> Result<usize> {
            seen.get(label)
                .copied()
                .ok_or_else(|| Error::validation(format!("unknown vertex '{label}'")))
        };

        let mut arrows = Vec::new();
        let mut arrow_names = BTreeMap::new();
        for a in &spec.arrows {
            if arrow_names.insert(a.name.clone(), arrows.len()).is_some() {
                return Err(Error::validation(format!("duplicate arrow name '{}'", a.name)));
            }
            arrows.push(Arrow {
                name: a.name.clone(),
                source: vertex_of(&a.source)?,
                target: vertex_of(&a.target)?,
            });
        }

        // Resolve relations to arrow indices and check composability.
        let mut relations: Vec<Vec<(S, Path)>> = Vec::new();
        for (ri, rel) in spec.relations.iter().enumerate() {
            let mut resolved: Vec<(S, Path)> = Vec::new();
            for term in rel {
                if term.coeff.is_zero() {
                    continue;
                }
                if term.path.is_empty() {
                    return Err(Error::validation(format!(
                        "relation {ri} contains a trivial path; relation terms must have length >= 1"
                    )));
                }
                let mut idxs = Vec::new();
                for name in &term.path {
                    let Some(&ai) = arrow_names.get(name.as_str()) else {
                        return Err(Error::validation(format!(
                            "relation {ri} uses unknown arrow '{name}'"
                        )));
                    };
                    idxs.push(ai);
                }
                for w in idxs.windows(2) {
                    if arrows[w[0]].target != arrows[w[1]].source {
                        return Err(Error::validation(format!(
                            "relation {ri}: arrows '{}' and '{}' do not compose",
                            arrows[w[0]].name, arrows[w[1]].name
                        )));
                    }
                }
                let path = Path { start: arrows[idxs[0]].source, arrows: idxs };
                resolved.push((term.coeff.clone(), path));
            }
            if resolved.is_empty() {
                continue;
            }
            let src = resolved[0].1.start;
            let tgt = path_end(&resolved[0].1, &arrows);
            for (_, p) in &resolved {
                if p.start != src || path_end(p, &arrows) != tgt {
                    return Err(Error::validation(format!(
                        "relation {ri}: terms do not share source and target"
                    )));
                }
            }
            relations.push(resolved);
        }

        let bound = match spec.nilpotency_bound {
            Some(b) => b,
            None => infer_bound(&vertices, &arrows, &relations)?,
        };

        // Enumerate all paths of length <= bound + 1, sorted canonically.
        let mut all_paths: Vec<Path> = (0..vertices.len()).map(Path::trivial).collect();
        let mut level: Vec<Path> = all_paths.clone();
        for _ in 0..bound + 1 {
            let mut next = Vec::new();
            for p in &level {
                let end = path_end(p, &arrows);
                for (ai, a) in arrows.iter().enumerate() {
                    if a.source == end {
                        next.push(p.append(ai));
                    }
                }
            }
            if all_paths.len() + next.len() > PATH_CAP {
                return Err(Error::validation(format!(
                    "more than {PATH_CAP} paths up to length {}; refusing to enumerate",
                    bound + 1
                )));
            }
            if next.is_empty() {
                break;
            }
            all_paths.extend(next.iter().cloned());
            level = next;
        }
        let all_index: BTreeMap<Path, usize> =
            all_paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let n_all = all_paths.len();

        // Span of the relation ideal, truncated at length bound + 1, in
        // reversed column order so pivots land on the longest paths.
        let mut rows: Vec<Vec<S>> = Vec::new();
        for rel in &relations {
            let minlen = rel.iter().map(|(_, p)| p.len()).min().unwrap_or(0);
            let src = rel[0].1.start;
            let tgt = path_end(&rel[0].1, &arrows);
            for u in &all_paths {
                if path_end(u, &arrows) != src || u.len() + minlen > bound + 1 {
                    continue;
                }
                for v in &all_paths {
                    if v.start != tgt || u.len() + minlen + v.len() > bound + 1 {
                        continue;
                    }
                    let mut row = vec![S::zero(); n_all];
                    let mut nontrivial = false;
                    for (c, p) in rel {
                        let total = u.len() + p.len() + v.len();
                        if total > bound + 1 {
                            continue; // beyond the bound, already zero
                        }
                        let comp = u.concat(p).concat(v);
                        let idx = all_index[&comp];
                        let rev = n_all - 1 - idx;
                        row[rev] = row[rev].clone() + c.clone();
                        nontrivial = true;
                    }
                    if nontrivial && row.iter().any(|x| !x.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }

        let mut normal: BTreeMap<Path, Vec<(usize, S)>> = BTreeMap::new();
        let mut reducible = vec![false; n_all];
        if !rows.is_empty() {
            let rref = Mat::from_rows(rows).rref();
            for (r, &pivot_rev) in rref.pivots.iter().enumerate() {
                let pivot_idx = n_all - 1 - pivot_rev;
                reducible[pivot_idx] = true;
                let mut combo: Vec<(usize, S)> = Vec::new();
                for c in 0..n_all {
                    if c == pivot_rev {
                        continue;
                    }
                    let w = rref.mat[(r, c)].clone();
                    if !w.is_zero() {
                        combo.push((n_all - 1 - c, -w));
                    }
                }
                combo.sort_by_key(|(i, _)| *i);
                normal.insert(all_paths[pivot_idx].clone(), combo);
            }
        }

        // Every path one past the bound must be reducible.
        for (i, p) in all_paths.iter().enumerate() {
            if p.len() == bound + 1 && !reducible[i] {
                let rendered = render_path(p, &vertices, &arrows);
                if let Some(cycle) = find_cycle_in_path(p, &arrows) {
                    return Err(Error::validation(format!(
                        "unbounded cycle {cycle}: path {rendered} of length {} is not \
                         annihilated by the relations",
                        bound + 1
                    )));
                }
                return Err(Error::validation(format!(
                    "path {rendered} survives past the declared nilpotency bound {bound}"
                )));
            }
        }

        // Basis = surviving paths of length <= bound, in canonical order.
        let mut paths = Vec::new();
        let mut global_of_all = vec![usize::MAX; n_all];
        for (i, p) in all_paths.iter().enumerate() {
            if !reducible[i] && p.len() <= bound {
                global_of_all[i] = paths.len();
                paths.push(p.clone());
            }
        }
        let path_index: BTreeMap<Path, usize> =
            paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();

        // Re-express normal forms over basis indices.
        let normal: BTreeMap<Path, Vec<(usize, S)>> = normal
            .into_iter()
            .map(|(p, combo)| {
                let mapped = combo
                    .into_iter()
                    .map(|(ai, c)| {
                        let gi = global_of_all[ai];
                        debug_assert!(gi != usize::MAX, "normal form hits reducible path");
                        (gi, c)
                    })
                    .collect();
                (p, mapped)
            })
            .collect();

        let nv = vertices.len();
        let mut pair_basis = vec![vec![Vec::new(); nv]; nv];
        let mut pos_in_pair = vec![0usize; paths.len()];
        for (i, p) in paths.iter().enumerate() {
            let bucket = &mut pair_basis[p.start][path_end(p, &arrows)];
            pos_in_pair[i] = bucket.len();
            bucket.push(i);
        }

        // Composition tables with arrows on either side.
        let reduce = |p: &Path| -> Vec<(usize, S)> {
            if let Some(&i) = path_index.get(p) {
                vec![(i, S::one())]
            } else if let Some(c) = normal.get(p) {
                c.clone()
            } else {
                // Reducible paths of length <= bound+1 are always in
                // `normal`; anything else would be a construction bug.
                unreachable!("path of length {} missing from tables", p.len())
            }
        };
        let mut right_mul = vec![vec![Vec::new(); arrows.len()]; paths.len()];
        let mut left_mul = vec![vec![Vec::new(); arrows.len()]; paths.len()];
        for (i, p) in paths.iter().enumerate() {
            for (ai, a) in arrows.iter().enumerate() {
                if a.source == path_end(p, &arrows) {
                    right_mul[i][ai] = reduce(&p.append(ai));
                }
                if a.target == p.start {
                    left_mul[i][ai] = reduce(&p.prepend(ai, a.source));
                }
            }
        }

        let ordering = match &spec.ordering {
            Some(o) => Some(OrderedSimples::resolve(o, &vertices)?),
            None => None,
        };

        let mut hasher = DefaultHasher::new();
        vertices.hash(&mut hasher);
        for a in &arrows {
            a.name.hash(&mut hasher);
            a.source.hash(&mut hasher);
            a.target.hash(&mut hasher);
        }
        for rel in &relations {
            for (c, p) in rel {
                c.to_string().hash(&mut hasher);
                p.start.hash(&mut hasher);
                p.arrows.hash(&mut hasher);
            }
        }
        bound.hash(&mut hasher);
        let fingerprint = hasher.finish();

        Ok(Arc::new(Algebra {
            spec,
            vertices,
            arrows,
            bound,
            paths,
            path_index,
            pair_basis,
            pos_in_pair,
            right_mul,
            left_mul,
            ordering,
            fingerprint,
            opposite: OnceLock::new(),
        }))
    }

    pub fn spec(&self) -> &AlgebraSpec<S> {
        &self.spec
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_label(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_by_label(&self, label: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == label)
            .ok_or_else(|| Error::input(format!("unknown vertex '{label}'")))
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_by_name(&self, name: &str) -> Result<usize> {
        self.arrows
            .iter()
            .position(|a| a.name == name)
            .ok_or_else(|| Error::input(format!("unknown arrow '{name}'")))
    }

    pub fn nilpotency_bound(&self) -> usize {
        self.bound
    }

    pub fn dimension(&self) -> usize {
        self.paths.len()
    }

    pub fn basis_paths(&self) -> &[Path] {
        &self.paths
    }

    /// Index of a path in the basis, if it is a basis path.
    pub fn index_of_path(&self, p: &Path) -> Option<usize> {
        self.path_index.get(p).copied()
    }

    pub fn path_end(&self, p: &Path) -> usize {
        path_end(p, &self.arrows)
    }

    pub fn path_string(&self, p: &Path) -> String {
        render_path(p, &self.vertices, &self.arrows)
    }

    /// Basis paths from `s` to `t` (global indices).
    pub fn pair_basis(&self, s: usize, t: usize) -> &[usize] {
        &self.pair_basis[s][t]
    }

    /// Normal form of `(basis path) * (arrow)`.
    pub fn right_mul(&self, path: usize, arrow: usize) -> &[(usize, S)] {
        &self.right_mul[path][arrow]
    }

    /// Normal form of `(arrow) * (basis path)`.
    pub fn left_mul(&self, path: usize, arrow: usize) -> &[(usize, S)] {
        &self.left_mul[path][arrow]
    }

    pub fn pos_in_pair(&self, path: usize) -> usize {
        self.pos_in_pair[path]
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn same_as(&self, other: &Algebra<S>) -> bool {
        self.fingerprint == other.fingerprint
    }

    pub fn ordering(&self) -> Option<&OrderedSimples> {
        self.ordering.as_ref()
    }

    pub fn require_ordering(&self) -> Result<&OrderedSimples> {
        self.ordering
            .as_ref()
            .ok_or_else(|| Error::precondition("algebra carries no simple ordering".to_string()))
    }

    pub fn basis_report(&self) -> BasisReport {
        BasisReport {
            dimension: self.paths.len(),
            basis: self.paths.iter().map(|p| self.path_string(p)).collect(),
            projective_dims: (0..self.vertex_count())
                .map(|s| {
                    let dim: usize =
                        (0..self.vertex_count()).map(|t| self.pair_basis[s][t].len()).sum();
                    (self.vertices[s].clone(), dim)
                })
                .collect(),
        }
    }

    /// The simple representation at a vertex.
    pub fn simple(self: &Arc<Self>, v: usize) -> Module<S> {
        let mut dims = vec![0; self.vertex_count()];
        dims[v] = 1;
        Module::with_zero_maps(self.clone(), dims)
    }

    pub fn zero_module(self: &Arc<Self>) -> Module<S> {
        Module::with_zero_maps(self.clone(), vec![0; self.vertex_count()])
    }

    /// The indecomposable projective at `s`: the span of basis paths
    /// starting at `s`, with arrows acting by composition at the far end.
    pub fn projective(self: &Arc<Self>, s: usize) -> Module<S> {
        let nv = self.vertex_count();
        let dims: Vec<usize> = (0..nv).map(|t| self.pair_basis[s][t].len()).collect();
        let mut action = Vec::new();
        for (ai, a) in self.arrows.iter().enumerate() {
            let mut m = Mat::zeros(dims[a.target], dims[a.source]);
            for (col, &p) in self.pair_basis[s][a.source].iter().enumerate() {
                for (q, c) in self.right_mul(p, ai) {
                    m[(self.pos_in_pair[*q], col)] = c.clone();
                }
            }
            action.push(m);
        }
        Module::new_unchecked(self.clone(), dims, action)
    }

    /// The indecomposable injective at `s`: the dual of the span of basis
    /// paths ending at `s`, with arrows acting by dualised composition at
    /// the near end.
    pub fn injective(self: &Arc<Self>, s: usize) -> Module<S> {
        let nv = self.vertex_count();
        let dims: Vec<usize> = (0..nv).map(|t| self.pair_basis[t][s].len()).collect();
        let mut action = Vec::new();
        for (ai, a) in self.arrows.iter().enumerate() {
            // Left multiplication by `a` maps paths target->s to paths
            // source->s; the injective action is its transpose.
            let mut lm = Mat::zeros(dims[a.source], dims[a.target]);
            for (col, &p) in self.pair_basis[a.target][s].iter().enumerate() {
                for (q, c) in self.left_mul(p, ai) {
                    lm[(self.pos_in_pair[*q], col)] = c.clone();
                }
            }
            action.push(lm.transpose());
        }
        Module::new_unchecked(self.clone(), dims, action)
    }

    /// The opposite algebra: same vertices, all arrows reversed, relations
    /// reversed term by term, ordering carried over unchanged.
    pub fn opposite(self: &Arc<Self>) -> Arc<Algebra<S>> {
        self.opposite
            .get_or_init(|| {
                let spec = AlgebraSpec {
                    vertices: self.spec.vertices.clone(),
                    arrows: self
                        .spec
                        .arrows
                        .iter()
                        .map(|a| ArrowSpec {
                            name: a.name.clone(),
                            source: a.target.clone(),
                            target: a.source.clone(),
                        })
                        .collect(),
                    relations: self
                        .spec
                        .relations
                        .iter()
                        .map(|rel| {
                            rel.iter()
                                .map(|term| RelationTerm {
                                    coeff: term.coeff.clone(),
                                    path: term.path.iter().rev().cloned().collect(),
                                })
                                .collect()
                        })
                        .collect(),
                    nilpotency_bound: Some(self.bound),
                    ordering: self.spec.ordering.clone(),
                };
                Algebra::new(spec).expect("opposite of a valid algebra is valid")
            })
            .clone()
    }

    /// Specification of the quotient algebra supported on a vertex subset
    /// (paths leaving the subset are killed).  Used for closed restriction.
    pub fn restricted_spec(&self, keep: &[usize]) -> AlgebraSpec<S> {
        let keep_set: Vec<bool> = {
            let mut v = vec![false; self.vertex_count()];
            for &k in keep {
                v[k] = true;
            }
            v
        };
        let vertices: Vec<String> =
            keep.iter().map(|&k| self.vertices[k].clone()).collect();
        let arrows: Vec<ArrowSpec> = self
            .spec
            .arrows
            .iter()
            .enumerate()
            .filter(|(ai, _)| {
                keep_set[self.arrows[*ai].source] && keep_set[self.arrows[*ai].target]
            })
            .map(|(_, a)| a.clone())
            .collect();
        let kept_arrow_names: Vec<&str> = arrows.iter().map(|a| a.name.as_str()).collect();
        let relations = self
            .spec
            .relations
            .iter()
            .filter_map(|rel| {
                let kept: Vec<RelationTerm<S>> = rel
                    .iter()
                    .filter(|term| {
                        term.path.iter().all(|n| kept_arrow_names.contains(&n.as_str()))
                    })
                    .cloned()
                    .collect();
                if kept.is_empty() {
                    None
                } else {
                    Some(kept)
                }
            })
            .collect();
        AlgebraSpec {
            vertices,
            arrows,
            relations,
            nilpotency_bound: Some(self.bound),
            ordering: self
                .ordering
                .as_ref()
                .map(|o| o.restricted_spec(keep, &self.vertices)),
        }
    }
}

fn path_end(p: &Path, arrows: &[Arrow]) -> usize {
    p.arrows.last().map_or(p.start, |&a| arrows[a].target)
}

fn render_path(p: &Path, vertices: &[String], arrows: &[Arrow]) -> String {
    if p.is_trivial() {
        format!("e_{}", vertices[p.start])
    } else {
        p.arrows.iter().map(|&a| arrows[a].name.clone()).collect::<Vec<_>>().join("*")
    }
}

/// For an error message: the first vertex-repeating segment of a path.
fn find_cycle_in_path(p: &Path, arrows: &[Arrow]) -> Option<String> {
    let mut seq = vec![p.start];
    for &a in &p.arrows {
        seq.push(arrows[a].target);
    }
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] == seq[j] {
                let names: Vec<String> =
                    p.arrows[i..j].iter().map(|&a| arrows[a].name.clone()).collect();
                return Some(format!("'{}'", names.join("*")));
            }
        }
    }
    None
}

/// Longest path in an acyclic quiver, or a conservative bound otherwise.
fn infer_bound<S: Scalar>(
    vertices: &[String],
    arrows: &[Arrow],
    relations: &[Vec<(S, Path)>],
) -> Result<usize> {
    let n = vertices.len();
    let mut indeg = vec![0usize; n];
    for a in arrows {
        indeg[a.target] += 1;
    }
    let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut depth = vec![0usize; n];
    let mut seen = 0;
    let mut qi = 0;
    while qi < queue.len() {
        let v = queue[qi];
        qi += 1;
        seen += 1;
        for a in arrows {
            if a.source == v {
                depth[a.target] = depth[a.target].max(depth[v] + 1);
                indeg[a.target] -= 1;
                if indeg[a.target] == 0 {
                    queue.push(a.target);
                }
            }
        }
    }
    if seen == n {
        return Ok(depth.into_iter().max().unwrap_or(0));
    }
    // The quiver has a directed cycle.
    if relations.is_empty() {
        let cycle = describe_cycle(vertices, arrows);
        return Err(Error::validation(format!(
            "unbounded cycle {cycle}: the quiver is cyclic and there are no relations"
        )));
    }
    let maxrel = relations
        .iter()
        .flat_map(|r| r.iter().map(|(_, p)| p.len()))
        .max()
        .unwrap_or(1);
    Ok(n * (1 + maxrel))
}

fn describe_cycle(vertices: &[String], arrows: &[Arrow]) -> String {
    // Depth-first search keeping the arrow trail; report the cycle segment
    // once a vertex on the current stack is revisited.
    fn dfs(
        v: usize,
        arrows: &[Arrow],
        state: &mut [u8],
        trail: &mut Vec<usize>,
        stack_pos: &mut Vec<Option<usize>>,
    ) -> Option<String> {
        state[v] = 1;
        stack_pos[v] = Some(trail.len());
        for (ai, a) in arrows.iter().enumerate() {
            if a.source != v {
                continue;
            }
            if state[a.target] == 1 {
                let from = stack_pos[a.target].unwrap();
                let mut names: Vec<String> =
                    trail[from..].iter().map(|&t| arrows[t].name.clone()).collect();
                names.push(a.name.clone());
                return Some(format!("'{}'", names.join("*")));
            }
            if state[a.target] == 0 {
                trail.push(ai);
                if let Some(found) = dfs(a.target, arrows, state, trail, stack_pos) {
                    return Some(found);
                }
                trail.pop();
            }
        }
        state[v] = 2;
        stack_pos[v] = None;
        None
    }
    let mut state = vec![0u8; vertices.len()];
    let mut stack_pos = vec![None; vertices.len()];
    for start in 0..vertices.len() {
        if state[start] == 0 {
            let mut trail = Vec::new();
            if let Some(found) = dfs(start, arrows, &mut state, &mut trail, &mut stack_pos) {
                return found;
            }
        }
    }
    "(unnamed)".to_string()
}
