//! The resolved ordering data attached to an algebra: a refining total
//! order on the simples, a stratification into blocks of incomparable
//! simples, and a strict closure relation between strata.

use crate::error::Error;
use crate::quiver::OrderingSpec;
use crate::Result;

/// Resolved ordering: vertex indices everywhere, closure relation
/// transitively closed, and the total order refining the strata sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedSimples {
    /// Vertices from smallest to largest in the refining total order.
    order: Vec<usize>,
    /// Position of each vertex in `order`.
    rank: Vec<usize>,
    /// Strata, most closed first; each stratum sorted by rank.
    strata: Vec<Vec<usize>>,
    stratum_of: Vec<usize>,
    /// `below[i][j]`: stratum `i` lies strictly below (inside the closure
    /// boundary of) stratum `j`.
    below: Vec<Vec<bool>>,
    /// Optional per-vertex skew degree.
    skew: Vec<Option<i64>>,
}

impl OrderedSimples {
    /// Resolves an ordering against the vertex labels of an algebra.
    ///
    /// Defaults: the order is the declaration order; the strata are
    /// singletons along the order; the closure relation is the total
    /// order of the strata sequence.
    pub fn resolve(spec: &OrderingSpec, labels: &[String]) -> Result<OrderedSimples> {
        let nv = labels.len();
        let index_of = |label: &str| -> Result<usize> {
            labels
                .iter()
                .position(|l| l == label)
                .ok_or_else(|| Error::validation(format!("ordering names unknown vertex '{label}'")))
        };
        let order: Vec<usize> = match &spec.order {
            Some(names) => {
                let mut order = Vec::with_capacity(names.len());
                for n in names {
                    order.push(index_of(n)?);
                }
                let mut sorted = order.clone();
                sorted.sort_unstable();
                sorted.dedup();
                if sorted.len() != nv || order.len() != nv {
                    return Err(Error::validation(
                        "ordering must list every vertex exactly once",
                    ));
                }
                order
            }
            None => (0..nv).collect(),
        };
        let mut rank = vec![0usize; nv];
        for (r, &v) in order.iter().enumerate() {
            rank[v] = r;
        }
        let strata: Vec<Vec<usize>> = match &spec.strata {
            Some(blocks) => {
                let mut strata = Vec::with_capacity(blocks.len());
                let mut seen = vec![false; nv];
                for block in blocks {
                    let mut resolved = Vec::with_capacity(block.len());
                    for n in block {
                        let v = index_of(n)?;
                        if seen[v] {
                            return Err(Error::validation(format!(
                                "vertex '{n}' appears in two strata"
                            )));
                        }
                        seen[v] = true;
                        resolved.push(v);
                    }
                    if resolved.is_empty() {
                        return Err(Error::validation("empty stratum"));
                    }
                    resolved.sort_by_key(|&v| rank[v]);
                    strata.push(resolved);
                }
                if seen.iter().any(|s| !s) {
                    return Err(Error::validation("strata do not cover every vertex"));
                }
                strata
            }
            None => order.iter().map(|&v| vec![v]).collect(),
        };
        // The total order must refine the strata sequence.
        for w in strata.windows(2) {
            let max_prev = w[0].iter().map(|&v| rank[v]).max().unwrap();
            let min_next = w[1].iter().map(|&v| rank[v]).min().unwrap();
            if max_prev >= min_next {
                return Err(Error::validation(
                    "total order does not refine the strata sequence",
                ));
            }
        }
        let mut stratum_of = vec![0usize; nv];
        for (i, block) in strata.iter().enumerate() {
            for &v in block {
                stratum_of[v] = i;
            }
        }
        let ns = strata.len();
        let mut below = vec![vec![false; ns]; ns];
        match &spec.closure {
            Some(pairs) => {
                for &(i, j) in pairs {
                    if i >= ns || j >= ns {
                        return Err(Error::validation(format!(
                            "closure pair ({i}, {j}) names a missing stratum"
                        )));
                    }
                    if i == j {
                        return Err(Error::validation("closure relation must be strict"));
                    }
                    if i > j {
                        return Err(Error::validation(
                            "closure pairs must respect the strata sequence (closed first)",
                        ));
                    }
                    below[i][j] = true;
                }
                // Transitive closure.
                for k in 0..ns {
                    for i in 0..ns {
                        for j in 0..ns {
                            if below[i][k] && below[k][j] {
                                below[i][j] = true;
                            }
                        }
                    }
                }
            }
            None => {
                for (i, row) in below.iter_mut().enumerate() {
                    for (j, cell) in row.iter_mut().enumerate() {
                        *cell = i < j;
                    }
                }
            }
        }
        let mut skew = vec![None; nv];
        if let Some(entries) = &spec.skew {
            for (vertex, degree) in entries {
                let v = index_of(vertex)?;
                if skew[v].replace(*degree).is_some() {
                    return Err(Error::validation(format!(
                        "skew degree of '{vertex}' given twice"
                    )));
                }
            }
        }
        Ok(OrderedSimples { order, rank, strata, stratum_of, below, skew })
    }

    pub fn vertex_count(&self) -> usize {
        self.rank.len()
    }

    /// The refining total order, smallest first.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn rank(&self, v: usize) -> usize {
        self.rank[v]
    }

    pub fn strata(&self) -> &[Vec<usize>] {
        &self.strata
    }

    pub fn stratum_of(&self, v: usize) -> usize {
        self.stratum_of[v]
    }

    pub fn stratum_count(&self) -> usize {
        self.strata.len()
    }

    /// Strict closure order between strata.
    pub fn stratum_below(&self, i: usize, j: usize) -> bool {
        self.below[i][j]
    }

    /// The stratum of `s` equals or lies strictly below the stratum of
    /// `t` in the closure order.
    pub fn stratum_leq(&self, s: usize, t: usize) -> bool {
        let (i, j) = (self.stratum_of[s], self.stratum_of[t]);
        i == j || self.below[i][j]
    }

    /// The stratum of `s` lies strictly below the stratum of `t`.
    pub fn stratum_lt(&self, s: usize, t: usize) -> bool {
        self.below[self.stratum_of[s]][self.stratum_of[t]]
    }

    /// All vertices at or before `s` in the refining total order,
    /// ascending by algebra index.  This is the truncation set for the
    /// standard and costandard objects at `s`.
    pub fn order_prefix(&self, s: usize) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&t| self.rank[t] <= self.rank[s]).collect()
    }

    /// All vertices strictly after `s` in the refining total order.
    pub fn order_above(&self, s: usize) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&t| self.rank[t] > self.rank[s]).collect()
    }

    /// The largest element of a candidate set in the refining total
    /// order.  Since the order refines the strata sequence, this element
    /// is also maximal among the candidates in the closure order.
    pub fn largest(&self, candidates: &[usize]) -> Option<usize> {
        candidates.iter().copied().max_by_key(|&s| self.rank[s])
    }

    pub fn skew(&self, v: usize) -> Option<i64> {
        self.skew[v]
    }

    pub fn has_skew(&self) -> bool {
        self.skew.iter().any(Option::is_some)
    }

    /// The ordering specification induced on a vertex subset (ambient
    /// indices), used when truncating to a closed union of strata.
    pub fn restricted_spec(&self, keep: &[usize], labels: &[String]) -> OrderingSpec {
        let kept = |v: usize| keep.contains(&v);
        let order: Vec<String> = self
            .order
            .iter()
            .filter(|&&v| kept(v))
            .map(|&v| labels[v].clone())
            .collect();
        let mut strata_labels = Vec::new();
        let mut surviving = Vec::new();
        for (i, block) in self.strata.iter().enumerate() {
            let names: Vec<String> = block
                .iter()
                .filter(|&&v| kept(v))
                .map(|&v| labels[v].clone())
                .collect();
            if !names.is_empty() {
                surviving.push(i);
                strata_labels.push(names);
            }
        }
        let mut closure = Vec::new();
        for (new_i, &old_i) in surviving.iter().enumerate() {
            for (new_j, &old_j) in surviving.iter().enumerate() {
                if self.below[old_i][old_j] {
                    closure.push((new_i, new_j));
                }
            }
        }
        let skew: Vec<(String, i64)> = (0..self.vertex_count())
            .filter(|&v| kept(v))
            .filter_map(|v| self.skew[v].map(|degree| (labels[v].clone(), degree)))
            .collect();
        OrderingSpec {
            order: Some(order),
            strata: Some(strata_labels),
            closure: Some(closure),
            skew: if skew.is_empty() { None } else { Some(skew) },
        }
    }
}
