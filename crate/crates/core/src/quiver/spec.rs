//! Raw, label-based algebra specifications as read from input files.

use crate::scalar::Scalar;

/// An arrow between two named vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowSpec {
    pub name: String,
    pub source: String,
    pub target: String,
}

/// One summand of a relation: a coefficient times a composable sequence of
/// arrow names (read left to right along the path).
#[derive(Clone, Debug, PartialEq)]
pub struct RelationTerm<S> {
    pub coeff: S,
    pub path: Vec<String>,
}

/// A relation is a linear combination of paths that share one source and
/// one target; it is imposed as zero in the algebra.
pub type Relation<S> = Vec<RelationTerm<S>>;

/// Optional highest-weight structure carried with the algebra: a total
/// order on the vertices, an ordered partition into strata (most closed
/// first), an optional strict closure relation between strata, and optional
/// integer skew-degree labels.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OrderingSpec {
    /// Vertex labels in ascending order.  Defaults to declaration order.
    pub order: Option<Vec<String>>,
    /// Strata as lists of vertex labels, most closed first.  Defaults to
    /// singletons in ascending order.
    pub strata: Option<Vec<Vec<String>>>,
    /// Pairs `(i, j)` of stratum indices, meaning stratum `i` lies strictly
    /// in the closure of stratum `j`.  Defaults to the total order given by
    /// the stratum list.
    pub closure: Option<Vec<(usize, usize)>>,
    /// Skew-degree labels per vertex label.
    pub skew: Option<Vec<(String, i64)>>,
}

/// A quiver algebra presentation: vertices, arrows, relations and an
/// optional bound on the length of nonzero paths.
#[derive(Clone, Debug)]
pub struct AlgebraSpec<S> {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowSpec>,
    pub relations: Vec<Relation<S>>,
    /// Maximum path length with nonzero image in the algebra.  When absent
    /// it is inferred: the longest path for an acyclic quiver, otherwise a
    /// conservative bound derived from the relation lengths.
    pub nilpotency_bound: Option<usize>,
    pub ordering: Option<OrderingSpec>,
}

impl<S: Scalar> AlgebraSpec<S> {
    pub fn new(vertices: Vec<&str>) -> Self {
        AlgebraSpec {
            vertices: vertices.into_iter().map(String::from).collect(),
            arrows: Vec::new(),
            relations: Vec::new(),
            nilpotency_bound: None,
            ordering: None,
        }
    }

    pub fn arrow(mut self, name: &str, source: &str, target: &str) -> Self {
        self.arrows.push(ArrowSpec {
            name: name.into(),
            source: source.into(),
            target: target.into(),
        });
        self
    }

    /// Adds a relation given as `(coefficient, [arrow names])` terms.
    pub fn relation(mut self, terms: Vec<(S, Vec<&str>)>) -> Self {
        self.relations.push(
            terms
                .into_iter()
                .map(|(coeff, path)| RelationTerm {
                    coeff,
                    path: path.into_iter().map(String::from).collect(),
                })
                .collect(),
        );
        self
    }

    pub fn with_bound(mut self, bound: usize) -> Self {
        self.nilpotency_bound = Some(bound);
        self
    }

    pub fn with_ordering(mut self, ordering: OrderingSpec) -> Self {
        self.ordering = Some(ordering);
        self
    }
}
