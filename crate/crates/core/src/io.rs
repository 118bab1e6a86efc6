//! JSON input and output for algebra presentations and modules, over
//! the exact rational scalars.  Coefficients and matrix entries accept
//! either JSON integers or strings like `"2/3"`; on output, integers
//! are written as numbers and proper fractions as strings.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::Error;
use crate::quiver::{Algebra, AlgebraSpec, ArrowSpec, Module, OrderingSpec, RelationTerm};
use crate::{Q, Result};

/// A rational number as it appears in JSON: a plain integer or a
/// string `"p/q"`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Int(i64),
    Text(String),
}

impl Entry {
    pub fn to_q(&self) -> Result<Q> {
        match self {
            Entry::Int(n) => Ok(Q::from_integer(BigInt::from(*n))),
            Entry::Text(s) => s
                .trim()
                .parse::<Q>()
                .map_err(|e| Error::input(format!("bad rational '{s}': {e}"))),
        }
    }

    pub fn from_q(q: &Q) -> Entry {
        if q.denom().is_one() {
            if let Ok(n) = i64::try_from(q.numer().clone()) {
                return Entry::Int(n);
            }
        }
        Entry::Text(q.to_string())
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ArrowFile {
    pub name: String,
    pub source: String,
    pub target: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RelationTermFile {
    pub coeff: Entry,
    pub path: Vec<String>,
}

/// An algebra presentation as stored on disk.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub arrows: Vec<ArrowFile>,
    #[serde(default)]
    pub relations: Vec<Vec<RelationTermFile>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub strata: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closure: Option<Vec<(usize, usize)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub skew: Option<BTreeMap<String, i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nilpotency_bound: Option<usize>,
}

impl AlgebraFile {
    pub fn to_spec(&self) -> Result<AlgebraSpec<Q>> {
        let mut relations = Vec::with_capacity(self.relations.len());
        for rel in &self.relations {
            let mut terms = Vec::with_capacity(rel.len());
            for t in rel {
                terms.push(RelationTerm { coeff: t.coeff.to_q()?, path: t.path.clone() });
            }
            relations.push(terms);
        }
        let ordering = if self.order.is_some()
            || self.strata.is_some()
            || self.closure.is_some()
            || self.skew.is_some()
        {
            Some(OrderingSpec {
                order: self.order.clone(),
                strata: self.strata.clone(),
                closure: self.closure.clone(),
                skew: self
                    .skew
                    .as_ref()
                    .map(|m| m.iter().map(|(k, v)| (k.clone(), *v)).collect()),
            })
        } else {
            None
        };
        Ok(AlgebraSpec {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| ArrowSpec {
                    name: a.name.clone(),
                    source: a.source.clone(),
                    target: a.target.clone(),
                })
                .collect(),
            relations,
            nilpotency_bound: self.nilpotency_bound,
            ordering,
        })
    }

    pub fn from_spec(spec: &AlgebraSpec<Q>) -> AlgebraFile {
        let mut ordering = spec.ordering.clone().unwrap_or_default();
        // An ordering with every field defaulted means "declaration
        // order with singleton strata"; it would serialize to nothing,
        // so write the order out explicitly to keep the round-tripped
        // algebra ordered.
        if spec.ordering.is_some()
            && ordering.order.is_none()
            && ordering.strata.is_none()
            && ordering.closure.is_none()
            && ordering.skew.is_none()
        {
            ordering.order = Some(spec.vertices.clone());
        }
        AlgebraFile {
            vertices: spec.vertices.clone(),
            arrows: spec
                .arrows
                .iter()
                .map(|a| ArrowFile {
                    name: a.name.clone(),
                    source: a.source.clone(),
                    target: a.target.clone(),
                })
                .collect(),
            relations: spec
                .relations
                .iter()
                .map(|rel| {
                    rel.iter()
                        .map(|t| RelationTermFile {
                            coeff: Entry::from_q(&t.coeff),
                            path: t.path.clone(),
                        })
                        .collect()
                })
                .collect(),
            order: ordering.order,
            strata: ordering.strata,
            closure: ordering.closure,
            skew: ordering.skew.map(|pairs| pairs.into_iter().collect()),
            nilpotency_bound: spec.nilpotency_bound,
        }
    }
}

/// Parses an algebra presentation and builds the validated algebra.
pub fn algebra_from_json(text: &str) -> Result<Arc<Algebra<Q>>> {
    let file: AlgebraFile = serde_json::from_str(text)
        .map_err(|e| Error::input(format!("malformed algebra JSON: {e}")))?;
    Algebra::new(file.to_spec()?)
}

/// Canonical JSON for an algebra presentation.
pub fn algebra_to_json(spec: &AlgebraSpec<Q>) -> String {
    let mut s = serde_json::to_string_pretty(&AlgebraFile::from_spec(spec))
        .expect("algebra files serialize");
    s.push('\n');
    s
}

/// A module as stored on disk: dimensions by vertex label and, for
/// each arrow with nonzero action, its matrix as a list of rows
/// (`target dimension x source dimension`).
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct ModuleFile {
    pub dims: BTreeMap<String, usize>,
    #[serde(default)]
    pub maps: BTreeMap<String, Vec<Vec<Entry>>>,
}

/// Parses a module over the given algebra, validating dimensions,
/// matrix shapes and all algebra relations.
pub fn module_from_json(alg: &Arc<Algebra<Q>>, text: &str) -> Result<Module<Q>> {
    let file: ModuleFile = serde_json::from_str(text)
        .map_err(|e| Error::input(format!("malformed module JSON: {e}")))?;
    module_from_file(alg, &file)
}

pub fn module_from_file(alg: &Arc<Algebra<Q>>, file: &ModuleFile) -> Result<Module<Q>> {
    let mut dims = vec![0usize; alg.vertex_count()];
    for (label, &d) in &file.dims {
        dims[alg.vertex_by_label(label)?] = d;
    }
    let mut action = Vec::with_capacity(alg.arrow_count());
    for ai in 0..alg.arrow_count() {
        let arrow = alg.arrow(ai);
        let rows = dims[arrow.target];
        let cols = dims[arrow.source];
        let mat = match file.maps.get(&arrow.name) {
            None => crate::linalg::Mat::zeros(rows, cols),
            Some(entries) => {
                if entries.len() != rows || entries.iter().any(|r| r.len() != cols) {
                    return Err(Error::input(format!(
                        "matrix for arrow '{}' must be {}x{}",
                        arrow.name, rows, cols
                    )));
                }
                let mut parsed = Vec::with_capacity(rows);
                for row in entries {
                    parsed.push(row.iter().map(Entry::to_q).collect::<Result<Vec<Q>>>()?);
                }
                crate::linalg::Mat::from_rows(parsed)
            }
        };
        action.push(mat);
    }
    // Named arrows not present on the algebra are silently impossible:
    // reject them so typos fail loudly.
    for name in file.maps.keys() {
        alg.arrow_by_name(name)?;
    }
    Module::new(alg.clone(), dims, action)
}

/// Canonical JSON for a module: only nonzero matrices are written.
pub fn module_to_json(m: &Module<Q>) -> String {
    let alg = m.algebra();
    let mut dims = BTreeMap::new();
    for v in 0..alg.vertex_count() {
        if m.dim_at(v) > 0 {
            dims.insert(alg.vertex_label(v).to_string(), m.dim_at(v));
        }
    }
    let mut maps = BTreeMap::new();
    for ai in 0..alg.arrow_count() {
        let mat = m.action(ai);
        if mat.is_zero() {
            continue;
        }
        let rows: Vec<Vec<Entry>> = (0..mat.rows())
            .map(|i| (0..mat.cols()).map(|j| Entry::from_q(&mat[(i, j)])).collect())
            .collect();
        maps.insert(alg.arrow(ai).name.clone(), rows);
    }
    let mut s = serde_json::to_string_pretty(&ModuleFile { dims, maps })
        .expect("module files serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entries_accept_integers_and_fractions() {
        assert_eq!(Entry::Int(3).to_q().unwrap(), Q::from_integer(BigInt::from(3)));
        assert_eq!(
            Entry::Text("2/4".to_string()).to_q().unwrap(),
            Q::new(BigInt::from(1), BigInt::from(2))
        );
        assert!(Entry::Text("2/0".to_string()).to_q().is_err());
        assert_eq!(Entry::from_q(&Q::from_integer(BigInt::from(-5))), Entry::Int(-5));
        assert_eq!(
            Entry::from_q(&Q::new(BigInt::from(1), BigInt::from(3))),
            Entry::Text("1/3".to_string())
        );
    }

    #[test]
    fn algebra_round_trip_preserves_the_presentation() {
        let text = r#"{
            "vertices": ["a", "b"],
            "arrows": [{"name": "f", "source": "a", "target": "b"}],
            "order": ["a", "b"],
            "skew": {"a": 1, "b": 0}
        }"#;
        let alg = algebra_from_json(text).unwrap();
        assert_eq!(alg.vertex_count(), 2);
        let out = algebra_to_json(alg.spec());
        let again = algebra_from_json(&out).unwrap();
        assert_eq!(again.spec().vertices, alg.spec().vertices);
        assert_eq!(again.spec().arrows, alg.spec().arrows);
    }

    #[test]
    fn default_orderings_survive_the_round_trip() {
        let alg = crate::fixtures::fix_d3();
        assert!(alg.ordering().is_some());
        let again = algebra_from_json(&algebra_to_json(alg.spec())).unwrap();
        let ord = again.ordering().expect("ordering survives serialization");
        assert_eq!(ord, alg.ordering().unwrap());

        // Unordered algebras stay unordered.
        let plain = algebra_from_json(r#"{"vertices": ["a"]}"#).unwrap();
        let back = algebra_from_json(&algebra_to_json(plain.spec())).unwrap();
        assert!(back.ordering().is_none());
    }

    #[test]
    fn relation_coefficients_parse_from_both_forms() {
        let text = r#"{
            "vertices": ["u", "v", "w"],
            "arrows": [
                {"name": "p", "source": "u", "target": "v"},
                {"name": "q", "source": "v", "target": "w"},
                {"name": "r", "source": "u", "target": "w"}
            ],
            "relations": [[
                {"coeff": 1, "path": ["p", "q"]},
                {"coeff": "-1/2", "path": ["r"]}
            ]]
        }"#;
        let alg = algebra_from_json(text).unwrap();
        assert_eq!(alg.spec().relations.len(), 1);
        assert_eq!(
            alg.spec().relations[0][1].coeff,
            Q::new(BigInt::from(-1), BigInt::from(2))
        );
    }

    #[test]
    fn module_round_trip_and_validation() {
        let text = r#"{
            "vertices": ["a", "b"],
            "arrows": [{"name": "f", "source": "a", "target": "b"}]
        }"#;
        let alg = algebra_from_json(text).unwrap();
        let m = module_from_json(
            &alg,
            r#"{"dims": {"a": 1, "b": 2}, "maps": {"f": [[1], ["1/2"]]}}"#,
        )
        .unwrap();
        assert_eq!(m.dims(), &[1, 2]);
        let out = module_to_json(&m);
        let back = module_from_json(&alg, &out).unwrap();
        assert_eq!(back, m);

        // Wrong shape: f must be 2x1.
        assert!(module_from_json(&alg, r#"{"dims": {"a": 1, "b": 2}, "maps": {"f": [[1, 2]]}}"#)
            .is_err());
        // Unknown arrow names fail loudly.
        assert!(module_from_json(&alg, r#"{"dims": {"a": 1}, "maps": {"g": [[1]]}}"#).is_err());
        // Unknown vertex labels fail loudly.
        assert!(module_from_json(&alg, r#"{"dims": {"z": 1}}"#).is_err());
    }

    #[test]
    fn modules_violating_relations_are_rejected() {
        let text = r#"{
            "vertices": ["u", "v", "w"],
            "arrows": [
                {"name": "p", "source": "u", "target": "v"},
                {"name": "q", "source": "v", "target": "w"}
            ],
            "relations": [[{"coeff": 1, "path": ["p", "q"]}]]
        }"#;
        let alg = algebra_from_json(text).unwrap();
        let good = r#"{"dims": {"u": 1, "v": 1, "w": 1}, "maps": {"p": [[1]]}}"#;
        assert!(module_from_json(&alg, good).is_ok());
        let bad = r#"{"dims": {"u": 1, "v": 1, "w": 1}, "maps": {"p": [[1]], "q": [[1]]}}"#;
        assert!(module_from_json(&alg, bad).is_err());
    }
}
