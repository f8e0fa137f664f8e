//! JSON instance formats.
//!
//! | kind         | shape                                                         |
//! |--------------|---------------------------------------------------------------|
//! | `lattice`    | `{"size": n, "leq": [[bool]], "labels": [str]?}`              |
//! | `frame-pair` | lattice fields plus `"designated": [index]`                   |
//! | `topology`   | `{"carrier": [str], "opens": [[str]]}`                        |
//! | `space`      | `{"carrier": [str], "smops": [[str]]}`                        |
//! | `space-map`  | `{"source": space, "target": space, "map": {"x": "y"}}`       |
//! | `frame-hom`  | `{"source": pair, "target": pair, "map": [index]}`            |
//! | `real-set`   | `{"pieces": [[endpoint, endpoint]], "periodic": {..}?}`       |
//! | `catalog-map`| `{"map": "-id" \| "sin" \| "arctan" \| "1/exp"}`             |
//!
//! A file may carry `"kind"` explicitly; otherwise the kind is inferred from
//! its keys. Writers emit canonical element order so output diffs are stable.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};
use thiserror::Error;

use crate::bits::{self, PointSet};
use crate::bounds::Bounds;
use crate::frame_pair::{FrameHom, FramePair, FramePairError};
use crate::lattice::{FiniteLattice, LatticeError};
use crate::realline::{CatalogMap, SymbolicRealSet};
use crate::space::{LocallySmallSpace, SpaceError, SpaceMap};
use crate::topology::{TopSpace, TopologyError};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("JSON error at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("cannot tell the instance kind from keys {0:?}")]
    UnknownShape(Vec<String>),
    #[error("unknown kind {0:?}")]
    UnknownKind(String),
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("the map does not assign a value to {0:?}")]
    MissingPoint(String),
    #[error("unknown catalog map {0:?}")]
    UnknownCatalogMap(String),
    #[error("{kind}: {detail}")]
    Invalid { kind: &'static str, detail: String },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Topology(#[from] TopologyError),
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error(transparent)]
    FramePair(#[from] FramePairError),
}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> Self {
        FormatError::Json {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

// ---------------------------------------------------------------------------
// File shapes.

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LatticeFile {
    pub size: usize,
    pub leq: Vec<Vec<bool>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FramePairFile {
    #[serde(flatten)]
    pub lattice: LatticeFile,
    pub designated: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TopologyFile {
    pub carrier: Vec<String>,
    pub opens: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpaceFile {
    pub carrier: Vec<String>,
    pub smops: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpaceMapFile {
    pub source: SpaceFile,
    pub target: SpaceFile,
    pub map: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FrameHomFile {
    pub source: FramePairFile,
    pub target: FramePairFile,
    pub map: Vec<usize>,
}

// ---------------------------------------------------------------------------
// Conversions.

fn check_labels(labels: &[String]) -> Result<(), FormatError> {
    let mut seen = std::collections::HashSet::new();
    for l in labels {
        if !seen.insert(l) {
            return Err(FormatError::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

fn label_index(labels: &[String], l: &str) -> Result<usize, FormatError> {
    labels
        .iter()
        .position(|x| x == l)
        .ok_or_else(|| FormatError::UnknownLabel(l.to_string()))
}

fn set_from_labels(labels: &[String], set: &[String]) -> Result<PointSet, FormatError> {
    set.iter()
        .map(|l| label_index(labels, l).map(bits::singleton))
        .try_fold(0, |m, b| Ok(m | b?))
}

fn set_to_labels(labels: &[String], set: PointSet) -> Vec<String> {
    bits::points(set).map(|i| labels[i].clone()).collect()
}

fn describe_sets(labels: &[String], sets: &[PointSet]) -> String {
    sets.iter()
        .map(|&s| format!("{{{}}}", set_to_labels(labels, s).join(",")))
        .collect::<Vec<_>>()
        .join(" and ")
}

/// Rephrases a space error with labels instead of bit masks.
fn space_error(labels: &[String], e: SpaceError) -> FormatError {
    let detail = match &e {
        SpaceError::NotUnionClosed(u, v) => {
            format!("NotUnionClosed: the union of {} is not a smop", describe_sets(labels, &[*u, *v]))
        }
        SpaceError::NotIntersectionClosed(u, v) => format!(
            "NotIntersectionClosed: the intersection of {} is not a smop",
            describe_sets(labels, &[*u, *v])
        ),
        SpaceError::DoesNotCover(x) => format!("DoesNotCover: point {:?} lies in no smop", labels[*x]),
        _ => return FormatError::Space(e),
    };
    FormatError::Invalid { kind: "space", detail }
}

fn topology_error(labels: &[String], e: TopologyError) -> FormatError {
    let detail = match &e {
        TopologyError::NotUnionClosed(u, v) => {
            format!("NotUnionClosed: the union of {} is not open", describe_sets(labels, &[*u, *v]))
        }
        TopologyError::NotIntersectionClosed(u, v) => format!(
            "NotIntersectionClosed: the intersection of {} is not open",
            describe_sets(labels, &[*u, *v])
        ),
        _ => return FormatError::Topology(e),
    };
    FormatError::Invalid { kind: "topology", detail }
}

impl LatticeFile {
    pub fn build(&self) -> Result<FiniteLattice, FormatError> {
        if self.leq.len() != self.size {
            return Err(FormatError::Invalid {
                kind: "lattice",
                detail: format!("size is {} but leq has {} rows", self.size, self.leq.len()),
            });
        }
        let l = FiniteLattice::new(self.leq.clone())?;
        match &self.labels {
            Some(labels) => {
                check_labels(labels)?;
                Ok(l.with_labels(labels.clone())?)
            }
            None => Ok(l),
        }
    }

    pub fn from_lattice(l: &FiniteLattice) -> Self {
        LatticeFile {
            size: l.size(),
            leq: l.order_matrix(),
            labels: l.labels().map(<[String]>::to_vec),
        }
    }
}

impl FramePairFile {
    pub fn build(&self) -> Result<FramePair, FormatError> {
        Ok(FramePair::new(self.lattice.build()?, &self.designated)?)
    }

    pub fn from_pair(p: &FramePair) -> Self {
        FramePairFile {
            lattice: LatticeFile::from_lattice(p.frame()),
            designated: p.designated().to_vec(),
        }
    }
}

impl TopologyFile {
    pub fn build(&self) -> Result<TopSpace, FormatError> {
        check_labels(&self.carrier)?;
        let opens = self
            .opens
            .iter()
            .map(|o| set_from_labels(&self.carrier, o))
            .collect::<Result<Vec<_>, _>>()?;
        TopSpace::new(self.carrier.clone(), opens).map_err(|e| topology_error(&self.carrier, e))
    }

    pub fn from_topology(t: &TopSpace) -> Self {
        TopologyFile {
            carrier: t.labels().to_vec(),
            opens: t.opens().iter().map(|&o| set_to_labels(t.labels(), o)).collect(),
        }
    }
}

impl SpaceFile {
    pub fn build(&self) -> Result<LocallySmallSpace, FormatError> {
        check_labels(&self.carrier)?;
        let smops = self
            .smops
            .iter()
            .map(|o| set_from_labels(&self.carrier, o))
            .collect::<Result<Vec<_>, _>>()?;
        LocallySmallSpace::new(self.carrier.clone(), smops).map_err(|e| space_error(&self.carrier, e))
    }

    pub fn from_space(x: &LocallySmallSpace) -> Self {
        SpaceFile {
            carrier: x.labels().to_vec(),
            smops: x.smops().iter().map(|&o| set_to_labels(x.labels(), o)).collect(),
        }
    }
}

impl SpaceMapFile {
    pub fn build(&self) -> Result<SpaceMap, FormatError> {
        let source = self.source.build()?;
        let target = self.target.build()?;
        for k in self.map.keys() {
            label_index(source.labels(), k)?;
        }
        let table = source
            .labels()
            .iter()
            .map(|x| {
                let y = self.map.get(x).ok_or_else(|| FormatError::MissingPoint(x.clone()))?;
                label_index(target.labels(), y)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SpaceMap::new(source, target, table)?)
    }

    pub fn from_map(f: &SpaceMap) -> Self {
        let src = f.source().labels();
        let tgt = f.target().labels();
        SpaceMapFile {
            source: SpaceFile::from_space(f.source()),
            target: SpaceFile::from_space(f.target()),
            map: (0..src.len()).map(|x| (src[x].clone(), tgt[f.apply(x)].clone())).collect(),
        }
    }
}

impl FrameHomFile {
    pub fn build(&self, bounds: &Bounds) -> Result<FrameHom, FormatError> {
        let source = self.source.build()?;
        let target = self.target.build()?;
        Ok(FrameHom::new(source, target, self.map.clone(), bounds)?)
    }

    pub fn from_hom(h: &FrameHom) -> Self {
        FrameHomFile {
            source: FramePairFile::from_pair(h.source()),
            target: FramePairFile::from_pair(h.target()),
            map: h.table().to_vec(),
        }
    }
}

fn catalog_map_by_name(name: &str) -> Result<CatalogMap, FormatError> {
    crate::realline::catalog()
        .into_iter()
        .find(|m| m.name() == name)
        .ok_or_else(|| FormatError::UnknownCatalogMap(name.to_string()))
}

// ---------------------------------------------------------------------------
// Bundles.

#[derive(Debug, Clone)]
pub enum Instance {
    Lattice(FiniteLattice),
    FramePair(FramePair),
    Topology(TopSpace),
    Space(LocallySmallSpace),
    SpaceMap(SpaceMap),
    FrameHom(FrameHom),
    RealSet(SymbolicRealSet),
    CatalogMap(CatalogMap),
}

impl Instance {
    pub fn kind(&self) -> &'static str {
        match self {
            Instance::Lattice(_) => "lattice",
            Instance::FramePair(_) => "frame-pair",
            Instance::Topology(_) => "topology",
            Instance::Space(_) => "space",
            Instance::SpaceMap(_) => "space-map",
            Instance::FrameHom(_) => "frame-hom",
            Instance::RealSet(_) => "real-set",
            Instance::CatalogMap(_) => "catalog-map",
        }
    }
}

/// Where an instance came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    File(String),
    Generator { seed: u64, index: usize },
    Enumeration { index: usize },
}

#[derive(Debug, Clone)]
pub struct InstanceBundle {
    pub instance: Instance,
    pub provenance: Option<Provenance>,
}

fn infer_kind(obj: &Map<String, Value>) -> Result<&'static str, FormatError> {
    let has = |k: &str| obj.contains_key(k);
    Ok(if has("leq") && has("designated") {
        "frame-pair"
    } else if has("leq") {
        "lattice"
    } else if has("smops") {
        "space"
    } else if has("opens") {
        "topology"
    } else if has("pieces") {
        "real-set"
    } else if has("source") && has("map") {
        match &obj["map"] {
            Value::Array(_) => "frame-hom",
            _ => "space-map",
        }
    } else if matches!(obj.get("map"), Some(Value::String(_))) {
        "catalog-map"
    } else {
        return Err(FormatError::UnknownShape(obj.keys().cloned().collect()));
    })
}

/// Parses any instance file. Validation errors carry the module's error.
pub fn parse_instance(text: &str, bounds: &Bounds) -> Result<InstanceBundle, FormatError> {
    let value: Value = serde_json::from_str(text)?;
    let Value::Object(mut obj) = value else {
        return Err(FormatError::UnknownShape(Vec::new()));
    };
    let provenance = match obj.remove("provenance") {
        Some(p) => Some(serde_json::from_value(p)?),
        None => None,
    };
    let kind = match obj.remove("kind") {
        Some(Value::String(k)) => k,
        Some(other) => return Err(FormatError::UnknownKind(other.to_string())),
        None => infer_kind(&obj)?.to_string(),
    };
    let v = Value::Object(obj);
    let instance = match kind.as_str() {
        "lattice" => Instance::Lattice(serde_json::from_value::<LatticeFile>(v)?.build()?),
        "frame-pair" => Instance::FramePair(serde_json::from_value::<FramePairFile>(v)?.build()?),
        "topology" => Instance::Topology(serde_json::from_value::<TopologyFile>(v)?.build()?),
        "space" => Instance::Space(serde_json::from_value::<SpaceFile>(v)?.build()?),
        "space-map" => Instance::SpaceMap(serde_json::from_value::<SpaceMapFile>(v)?.build()?),
        "frame-hom" => Instance::FrameHom(serde_json::from_value::<FrameHomFile>(v)?.build(bounds)?),
        "real-set" => Instance::RealSet(serde_json::from_value(v)?),
        "catalog-map" => {
            let name = v.get("map").and_then(Value::as_str).unwrap_or_default();
            Instance::CatalogMap(catalog_map_by_name(name)?)
        }
        other => return Err(FormatError::UnknownKind(other.to_string())),
    };
    Ok(InstanceBundle { instance, provenance })
}

/// Canonical JSON for an instance, tagged with its kind.
pub fn instance_to_value(bundle: &InstanceBundle) -> Value {
    let payload = match &bundle.instance {
        Instance::Lattice(l) => serde_json::to_value(LatticeFile::from_lattice(l)),
        Instance::FramePair(p) => serde_json::to_value(FramePairFile::from_pair(p)),
        Instance::Topology(t) => serde_json::to_value(TopologyFile::from_topology(t)),
        Instance::Space(x) => serde_json::to_value(SpaceFile::from_space(x)),
        Instance::SpaceMap(f) => serde_json::to_value(SpaceMapFile::from_map(f)),
        Instance::FrameHom(h) => serde_json::to_value(FrameHomFile::from_hom(h)),
        Instance::RealSet(s) => serde_json::to_value(s),
        Instance::CatalogMap(m) => Ok(serde_json::json!({ "map": m.name() })),
    }
    .expect("instance formats serialize");
    let mut obj = Map::new();
    obj.insert("kind".into(), Value::String(bundle.instance.kind().into()));
    if let Some(p) = &bundle.provenance {
        obj.insert("provenance".into(), serde_json::to_value(p).expect("provenance serializes"));
    }
    if let Value::Object(fields) = payload {
        obj.extend(fields);
    }
    Value::Object(obj)
}

pub fn instance_to_json(bundle: &InstanceBundle) -> String {
    serde_json::to_string_pretty(&instance_to_value(bundle)).expect("JSON values print")
}

/// Convenience: parse a frame pair, accepting a bare lattice as `(L, L)`.
pub fn parse_frame_pair(text: &str, bounds: &Bounds) -> Result<FramePair, FormatError> {
    match parse_instance(text, bounds)?.instance {
        Instance::FramePair(p) => Ok(p),
        Instance::Lattice(l) => Ok(FramePair::full(Arc::new(l))?),
        other => Err(FormatError::Invalid {
            kind: "frame-pair",
            detail: format!("expected a frame pair or lattice, found {}", other.kind()),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b() -> Bounds {
        Bounds::default()
    }

    #[test]
    fn lattice_roundtrip() {
        let text = r#"{"size": 3, "leq": [[true,true,true],[false,true,true],[false,false,true]], "labels": ["0","a","1"]}"#;
        let bundle = parse_instance(text, &b()).unwrap();
        let Instance::Lattice(l) = &bundle.instance else { panic!() };
        assert_eq!(l.label(1), "a");
        let again = parse_instance(&instance_to_json(&bundle), &b()).unwrap();
        let Instance::Lattice(m) = again.instance else { panic!() };
        assert_eq!(&m, l);
    }

    #[test]
    fn space_and_map_roundtrip() {
        let text = r#"{"source": {"carrier": ["x"], "smops": [[], ["x"]]},
                       "target": {"carrier": ["a", "b"], "smops": [[], ["a"], ["a", "b"]]},
                       "map": {"x": "a"}}"#;
        let bundle = parse_instance(text, &b()).unwrap();
        assert_eq!(bundle.instance.kind(), "space-map");
        let Instance::SpaceMap(f) = &bundle.instance else { panic!() };
        assert!(f.is_continuous());
        let json = instance_to_json(&bundle);
        let Instance::SpaceMap(g) = parse_instance(&json, &b()).unwrap().instance else { panic!() };
        assert_eq!(&g, f);
    }

    #[test]
    fn bad_space_names_the_offending_pair() {
        let text = r#"{"carrier": ["1","2"], "smops": [[], ["1"], ["2"]]}"#;
        let err = parse_instance(text, &b()).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("NotUnionClosed"), "{msg}");
        assert!(msg.contains("{1} and {2}"), "{msg}");
    }

    #[test]
    fn json_errors_carry_positions() {
        let err = parse_instance("{\n  \"size\": 2,\n  \"leq\": [[true,]]\n}", &b()).unwrap_err();
        match err {
            FormatError::Json { line, .. } => assert_eq!(line, 3),
            e => panic!("{e}"),
        }
    }

    #[test]
    fn kinds_inferred_and_explicit() {
        let pair = r#"{"size": 2, "leq": [[true,true],[false,true]], "designated": [0,1]}"#;
        assert_eq!(parse_instance(pair, &b()).unwrap().instance.kind(), "frame-pair");
        let tagged = r#"{"kind": "topology", "carrier": ["x","y"], "opens": [[], ["x"], ["x","y"]]}"#;
        assert_eq!(parse_instance(tagged, &b()).unwrap().instance.kind(), "topology");
        let cat = r#"{"map": "sin"}"#;
        assert_eq!(parse_instance(cat, &b()).unwrap().instance.kind(), "catalog-map");
        let set = r#"{"pieces": [["rat:0/1", "tag:half_pi"]]}"#;
        assert_eq!(parse_instance(set, &b()).unwrap().instance.kind(), "real-set");
        assert!(matches!(parse_instance(r#"{"foo": 1}"#, &b()), Err(FormatError::UnknownShape(_))));
        assert!(matches!(
            parse_instance(r#"{"kind": "sheaf"}"#, &b()),
            Err(FormatError::UnknownKind(_))
        ));
    }

    #[test]
    fn frame_hom_roundtrip() {
        let b2 = r#"{"size": 4, "leq": [[true,true,true,true],[false,true,false,true],[false,false,true,true],[false,false,false,true]], "designated": [0,1,2,3]}"#;
        let c2 = r#"{"size": 2, "leq": [[true,true],[false,true]], "designated": [0,1]}"#;
        let text = format!(r#"{{"source": {b2}, "target": {c2}, "map": [0,1,0,1]}}"#);
        let bundle = parse_instance(&text, &b()).unwrap();
        let Instance::FrameHom(h) = &bundle.instance else { panic!() };
        assert_eq!(h.right_adjoint().unwrap().adjoint(), &[2, 3]);
        let bad = format!(r#"{{"source": {b2}, "target": {c2}, "map": [0,1,1,1]}}"#);
        assert!(matches!(parse_instance(&bad, &b()), Err(FormatError::FramePair(_))));
    }

    #[test]
    fn provenance_is_kept() {
        let text = r#"{"kind": "lattice", "provenance": {"enumeration": {"index": 4}}, "size": 1, "leq": [[true]]}"#;
        let bundle = parse_instance(text, &b()).unwrap();
        assert_eq!(bundle.provenance, Some(Provenance::Enumeration { index: 4 }));
        let v = instance_to_value(&bundle);
        assert_eq!(v["provenance"], serde_json::json!({"enumeration": {"index": 4}}));
    }
}
