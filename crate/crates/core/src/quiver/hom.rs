//! Homomorphism spaces between modules, computed as the kernel of the
//! intertwining system, plus canonical factorisation of maps through a
//! known map.

use super::module::{Module, ModuleMap};
use crate::linalg::Mat;
use crate::scalar::Scalar;

/// Layout of the unknown map `g: A -> B`: the entries of the vertex
/// matrices `g_v` (row-major), vertex by vertex.
fn var_offsets<S: Scalar>(a: &Module<S>, b: &Module<S>) -> (Vec<usize>, usize) {
    let nv = a.algebra().vertex_count();
    let mut offsets = Vec::with_capacity(nv);
    let mut total = 0;
    for v in 0..nv {
        offsets.push(total);
        total += b.dim_at(v) * a.dim_at(v);
    }
    (offsets, total)
}

/// Rows expressing that `g` commutes with every arrow action.
fn intertwining_rows<S: Scalar>(a: &Module<S>, b: &Module<S>) -> Vec<Vec<S>> {
    let alg = a.algebra();
    let (off, total) = var_offsets(a, b);
    let mut rows = Vec::new();
    for ai in 0..alg.arrow_count() {
        let arr = alg.arrow(ai);
        let (u, v) = (arr.source, arr.target);
        let xa = a.action(ai); // A_u -> A_v
        let yb = b.action(ai); // B_u -> B_v
        // For each entry (i, j) of the (B_v x A_u) condition matrix:
        // sum_k  Y[i,k] g_u[k,j]  -  sum_l  g_v[i,l] X[l,j]  =  0.
        for i in 0..b.dim_at(v) {
            for j in 0..a.dim_at(u) {
                let mut row = vec![S::zero(); total];
                for k in 0..b.dim_at(u) {
                    let c = yb[(i, k)].clone();
                    if !c.is_zero() {
                        let idx = off[u] + k * a.dim_at(u) + j;
                        row[idx] = row[idx].clone() + c;
                    }
                }
                for l in 0..a.dim_at(v) {
                    let c = xa[(l, j)].clone();
                    if !c.is_zero() {
                        let idx = off[v] + i * a.dim_at(v) + l;
                        row[idx] = row[idx].clone() - c;
                    }
                }
                rows.push(row);
            }
        }
    }
    rows
}

fn map_from_vector<S: Scalar>(a: &Module<S>, b: &Module<S>, vec: &[S]) -> ModuleMap<S> {
    let alg = a.algebra();
    let (off, _) = var_offsets(a, b);
    let mut parts = Vec::new();
    for v in 0..alg.vertex_count() {
        let mut m = Mat::zeros(b.dim_at(v), a.dim_at(v));
        for i in 0..b.dim_at(v) {
            for j in 0..a.dim_at(v) {
                m[(i, j)] = vec[off[v] + i * a.dim_at(v) + j].clone();
            }
        }
        parts.push(m);
    }
    ModuleMap::new_unchecked(a.clone(), b.clone(), parts)
}

/// A canonical basis of `Hom(A, B)`, ordered by the reduced-echelon kernel
/// of the intertwining system.  Deterministic for fixed inputs.
pub fn hom_basis<S: Scalar>(a: &Module<S>, b: &Module<S>) -> Vec<ModuleMap<S>> {
    assert!(
        a.algebra().same_as(b.algebra()),
        "hom space between modules over different algebras"
    );
    let (_, total) = var_offsets(a, b);
    if total == 0 {
        return Vec::new();
    }
    let rows = intertwining_rows(a, b);
    let kernel = if rows.is_empty() {
        Mat::identity(total)
    } else {
        Mat::from_rows(rows).kernel_basis()
    };
    (0..kernel.cols()).map(|c| map_from_vector(a, b, &kernel.col(c))).collect()
}

/// Dimension of `Hom(A, B)`.
pub fn hom_dim<S: Scalar>(a: &Module<S>, b: &Module<S>) -> usize {
    hom_basis(a, b).len()
}

/// Solves `g . known = f` for a module map `g: A -> B`, where
/// `f: A -> C` and `known: B -> C`; the canonical solution has all free
/// coordinates zero.  Returns `None` when no factorisation exists.
///
/// With `known` a surjection this lifts `f` through it; with `known` an
/// inclusion it corestricts `f` onto the submodule.
pub fn factor_through<S: Scalar>(
    f: &ModuleMap<S>,
    known: &ModuleMap<S>,
) -> Option<ModuleMap<S>> {
    assert_eq!(f.target(), known.target(), "factor_through: targets differ");
    let a = f.source();
    let b = known.source();
    let (off, total) = var_offsets(a, b);
    let mut rows = intertwining_rows(a, b);
    let mut rhs: Vec<S> = vec![S::zero(); rows.len()];
    let nv = a.algebra().vertex_count();
    for v in 0..nv {
        let k = known.part(v); // C_v x B_v
        let fv = f.part(v); // C_v x A_v
        for i in 0..k.rows() {
            for j in 0..a.dim_at(v) {
                let mut row = vec![S::zero(); total];
                for l in 0..b.dim_at(v) {
                    let c = k[(i, l)].clone();
                    if !c.is_zero() {
                        row[off[v] + l * a.dim_at(v) + j] = c;
                    }
                }
                rows.push(row);
                rhs.push(fv[(i, j)].clone());
            }
        }
    }
    if total == 0 {
        return if rhs.iter().all(|x| x.is_zero()) {
            Some(ModuleMap::zero(a, b))
        } else {
            None
        };
    }
    let sol = Mat::from_rows(rows).solve(&Mat::column_vector(rhs))?;
    Some(map_from_vector(a, b, &sol.col(0)))
}

/// Solves `known . g = f` for a module map `g: B -> C`, where
/// `f: A -> C` and `known: A -> B`.  Canonical solution as above.
pub fn extend_through<S: Scalar>(
    f: &ModuleMap<S>,
    known: &ModuleMap<S>,
) -> Option<ModuleMap<S>> {
    assert_eq!(f.source(), known.source(), "extend_through: sources differ");
    let b = known.target();
    let c = f.target();
    let (off, total) = var_offsets(b, c);
    let mut rows = intertwining_rows(b, c);
    let mut rhs: Vec<S> = vec![S::zero(); rows.len()];
    let nv = b.algebra().vertex_count();
    for v in 0..nv {
        let k = known.part(v); // B_v x A_v
        let fv = f.part(v); // C_v x A_v
        for i in 0..c.dim_at(v) {
            for j in 0..k.cols() {
                let mut row = vec![S::zero(); total];
                for l in 0..b.dim_at(v) {
                    let coeff = k[(l, j)].clone();
                    if !coeff.is_zero() {
                        row[off[v] + i * b.dim_at(v) + l] = coeff;
                    }
                }
                rows.push(row);
                rhs.push(fv[(i, j)].clone());
            }
        }
    }
    if total == 0 {
        return if rhs.iter().all(|x| x.is_zero()) {
            Some(ModuleMap::zero(b, c))
        } else {
            None
        };
    }
    let sol = Mat::from_rows(rows).solve(&Mat::column_vector(rhs))?;
    Some(map_from_vector(b, c, &sol.col(0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::algebra::Algebra;
    use crate::quiver::spec::AlgebraSpec;
    use crate::Q;

    fn line() -> std::sync::Arc<Algebra<Q>> {
        Algebra::new(AlgebraSpec::<Q>::new(vec!["a", "b"]).arrow("r", "a", "b")).unwrap()
    }

    #[test]
    fn hom_dims_on_the_two_vertex_line() {
        let alg = line();
        let pa = alg.projective(0);
        let sa = alg.simple(0);
        let sb = alg.simple(1);
        assert_eq!(hom_dim(&pa, &pa), 1);
        assert_eq!(hom_dim(&pa, &sa), 1);
        // The top of P(a) is S(a), so nothing maps onto S(b).
        assert_eq!(hom_dim(&pa, &sb), 0);
        assert_eq!(hom_dim(&sa, &pa), 0);
        assert_eq!(hom_dim(&sb, &pa), 1);
        assert_eq!(hom_dim(&sa, &sb), 0);
    }

    #[test]
    fn yoneda_dimension_for_projectives() {
        let alg = line();
        let pa = alg.projective(0);
        for v in 0..2 {
            let p = alg.projective(v);
            assert_eq!(hom_dim(&p, &pa), pa.dim_at(v));
        }
    }

    #[test]
    fn factor_through_surjection_recovers_lift() {
        let alg = line();
        let pa = alg.projective(0);
        let sa = alg.simple(0);
        // q: P(a) -> S(a) factors through itself only via the identity,
        // because End(P(a)) is one-dimensional.
        let q = &hom_basis(&pa, &sa)[0];
        let g = factor_through(q, q).unwrap();
        assert_eq!(g, ModuleMap::identity(&pa));
        assert_eq!(&g.then(q), q);
    }

    #[test]
    fn factor_through_fails_when_impossible() {
        let alg = line();
        let pa = alg.projective(0);
        let sb = alg.simple(1);
        let sa = alg.simple(0);
        // S(b) -> P(a) cannot factor through S(a) -> P(a)? There are no
        // nonzero maps S(a) -> P(a) at all, so any nonzero map from S(b)
        // has no factorisation g with g . 0 = f.
        let f = &hom_basis(&sb, &pa)[0];
        let zero = ModuleMap::zero(&sa, &pa);
        assert!(factor_through(f, &zero).is_none());
    }

    #[test]
    fn extend_through_injection() {
        let alg = line();
        let pa = alg.projective(0);
        let sb = alg.simple(1);
        let incl = &hom_basis(&sb, &pa)[0];
        // f = incl extends through incl via the identity of P(a).
        let g = extend_through(incl, incl).unwrap();
        assert_eq!(g, ModuleMap::identity(&pa));
        // The identity of S(b) does not extend: Hom(P(a), S(b)) = 0.
        let f = ModuleMap::identity(&sb);
        assert!(extend_through(&f, incl).is_none());
    }
}
