//! Blocks of the weight-graded category on the nodal curve, presented
//! as quiver algebras together with a dictionary back to the sheaves
//! realising each simple.
//!
//! The quiver of a block is *derived*, not transcribed: its arrows are
//! exactly the nonzero extension spaces computed on the geometric side
//! by [`ext1_between_simples`].  The block builder only fixes which
//! simples live together and in which closure order.

use serde::{Deserialize, Serialize};
use std::sync::Arc;

use crate::error::Error;
use crate::quiver::{Algebra, AlgebraSpec, OrderingSpec};
use crate::scalar::Scalar;
use crate::Result;

use super::geometry::{simple_minus, simple_origin, simple_plus, GradedSheaf};
use super::towers::ext1_between_simples;

/// Dimension vectors, one row per vertex, of the four families of
/// structural modules expected in a block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedTables {
    pub standard_dims: Vec<Vec<usize>>,
    pub costandard_dims: Vec<Vec<usize>>,
    pub projective_dims: Vec<Vec<usize>>,
    pub injective_dims: Vec<Vec<usize>>,
}

/// A block presented as a quiver algebra: the raw presentation, the
/// sheaf realising each vertex's simple, the skew degrees the grading
/// forces, and the expected structural dimension vectors.
pub struct NodalBlock<S: Scalar> {
    /// The integer indexing the block family.
    pub n: i64,
    pub spec: AlgebraSpec<S>,
    /// Vertex label paired with the sheaf realising that simple, in
    /// vertex order.
    pub dictionary: Vec<(String, GradedSheaf)>,
    /// Skew degrees in vertex order.
    pub skew: Vec<i64>,
    pub expected: ExpectedTables,
}

impl<S: Scalar> NodalBlock<S> {
    /// Builds the algebra from the stored presentation.
    pub fn algebra(&self) -> Result<Arc<Algebra<S>>> {
        Algebra::new(self.spec.clone())
    }

    pub fn labels(&self) -> Vec<String> {
        self.dictionary.iter().map(|(l, _)| l.clone()).collect()
    }
}

fn origin_label(n: i64, k: i64) -> String {
    format!("L0({n},{k})")
}

fn branch_label(sign: i64, n: i64) -> String {
    if sign >= 0 {
        format!("L+({n})")
    } else {
        format!("L-({n})")
    }
}

/// The block containing the origin simple `L0(n, |n|)`.  For `n != 0`
/// it also contains one branch simple; for `n == 0` it contains both
/// branch simples in skew degree `-1`.
pub fn build_block<S: Scalar>(n: i64) -> Result<NodalBlock<S>> {
    let a = n.abs();
    let dictionary: Vec<(String, GradedSheaf)> = if n == 0 {
        vec![
            (origin_label(0, 0), simple_origin(0, 0)),
            (branch_label(-1, 0), simple_minus(0)),
            (branch_label(1, 0), simple_plus(0)),
        ]
    } else if n > 0 {
        vec![(origin_label(n, a), simple_origin(n, a)), (branch_label(1, a), simple_plus(a))]
    } else {
        vec![(origin_label(n, a), simple_origin(n, a)), (branch_label(-1, a), simple_minus(a))]
    };
    let labels: Vec<String> = dictionary.iter().map(|(l, _)| l.clone()).collect();

    // Derive the arrows from the geometric extension spaces over all
    // ordered pairs of vertices, the diagonal included.
    let mut spec = AlgebraSpec::<S>::new(labels.iter().map(String::as_str).collect());
    for (i, (src, a_sheaf)) in dictionary.iter().enumerate() {
        for (j, (dst, b_sheaf)) in dictionary.iter().enumerate() {
            let e = ext1_between_simples(a_sheaf, b_sheaf)?;
            assert!(
                e == 0 || i != j,
                "a simple never extends itself within a block"
            );
            for c in 1..=e {
                let name =
                    if e == 1 { format!("{src}->{dst}") } else { format!("{src}->{dst}#{c}") };
                spec = spec.arrow(&name, src, dst);
            }
        }
    }
    // No two arrows compose, so the path algebra needs no relations.
    for x in &spec.arrows {
        for y in &spec.arrows {
            assert!(x.target != y.source, "arrows {} and {} would compose", x.name, y.name);
        }
    }

    let skew: Vec<i64> = if n == 0 { vec![0, -1, -1] } else { vec![2 * a, 2 * a - 1] };
    let ordering = OrderingSpec {
        order: Some(labels.clone()),
        strata: Some(labels.iter().map(|l| vec![l.clone()]).collect()),
        closure: if n == 0 { Some(vec![(0, 1), (0, 2)]) } else { None },
        skew: Some(labels.iter().cloned().zip(skew.iter().copied()).collect()),
    };
    spec = spec.with_ordering(ordering);

    let expected = if n == 0 {
        ExpectedTables {
            standard_dims: vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
            costandard_dims: vec![vec![1, 0, 0], vec![1, 1, 0], vec![1, 0, 1]],
            projective_dims: vec![vec![1, 1, 1], vec![0, 1, 0], vec![0, 0, 1]],
            injective_dims: vec![vec![1, 0, 0], vec![1, 1, 0], vec![1, 0, 1]],
        }
    } else {
        ExpectedTables {
            standard_dims: vec![vec![1, 0], vec![0, 1]],
            costandard_dims: vec![vec![1, 0], vec![1, 1]],
            projective_dims: vec![vec![1, 1], vec![0, 1]],
            injective_dims: vec![vec![1, 0], vec![1, 1]],
        }
    };

    Ok(NodalBlock { n, spec, dictionary, skew, expected })
}

/// The singleton block of an origin simple `L0(m, k)` with `k != |m|`;
/// such a simple extends nothing, so its block is semisimple.
pub fn isolated_block<S: Scalar>(m: i64, k: i64) -> Result<NodalBlock<S>> {
    if k == m.abs() {
        return Err(Error::input(format!(
            "L0({m},{k}) is not isolated: with k = |m| it couples to a branch simple"
        )));
    }
    let label = origin_label(m, k);
    let dictionary = vec![(label.clone(), simple_origin(m, k))];
    let e = ext1_between_simples(&dictionary[0].1, &dictionary[0].1)?;
    assert!(e == 0, "an isolated simple admits no self-extension");
    let ordering = OrderingSpec {
        order: Some(vec![label.clone()]),
        strata: Some(vec![vec![label.clone()]]),
        closure: None,
        skew: Some(vec![(label.clone(), 2 * k)]),
    };
    let spec = AlgebraSpec::<S>::new(vec![&label]).with_ordering(ordering);
    let tables = ExpectedTables {
        standard_dims: vec![vec![1]],
        costandard_dims: vec![vec![1]],
        projective_dims: vec![vec![1]],
        injective_dims: vec![vec![1]],
    };
    Ok(NodalBlock { n: m, spec, dictionary, skew: vec![2 * k], expected: tables })
}
