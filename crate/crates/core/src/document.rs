//! File formats for relations, mappings and compression results.
//!
//! The interchange format is JSON with grades written as decimal strings:
//!
//! ```json
//! { "universe": ["x1", "x2"], "relations": { "R": [["x1", "x2", "0.8"]] } }
//! { "domain": ["x1", "x2"], "codomain": ["y1"], "map": [["x1", "y1"], ["x2", "y1"]] }
//! ```
//!
//! Relations can also be written in Zadeh notation, one relation per
//! definition; a definition continues on lines starting with `+`:
//!
//! ```text
//! universe: x1, x2, x3
//! R = 1/(x1,x2) + 0.8/(x2,x3)
//!   + 0.5/(x3,x3)
//! Q = ∅
//! ```
//!
//! Errors carry a location: a line (and column) for syntax problems, a
//! field path such as `relations.R[3]` for content problems.

use std::fmt;
use std::sync::Arc;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::consistency::{CompressionResult, Mode, Partition};
use crate::fuzzy::FuzzyRelation;
use crate::grade::{Grade, GradeScale};
use crate::infosystem::{FuzzyInformationSystem, SystemCompression};
use crate::mapping::UniverseMapping;
use crate::universe::Universe;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DocumentError {
    pub location: String,
    pub message: String,
}

impl DocumentError {
    fn new(location: impl Into<String>, message: impl fmt::Display) -> DocumentError {
        DocumentError {
            location: location.into(),
            message: message.to_string(),
        }
    }

    fn json(err: serde_json::Error) -> DocumentError {
        DocumentError::new(
            format!("line {}, column {}", err.line(), err.column()),
            strip_position(&err),
        )
    }
}

/// serde_json appends " at line L column C"; the location already says that.
fn strip_position(err: &serde_json::Error) -> String {
    let text = err.to_string();
    match text.rfind(" at line ") {
        Some(cut) => text[..cut].to_string(),
        None => text,
    }
}

impl fmt::Display for DocumentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.location, self.message)
    }
}

impl std::error::Error for DocumentError {}

pub type DocResult<T> = std::result::Result<T, DocumentError>;

/// A universe and its named relations, in document order.
pub type NamedRelations = (Arc<Universe>, Vec<(String, FuzzyRelation)>);

/// Named relations over one universe. Unlisted pairs have grade 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationDocument {
    pub universe: Vec<String>,
    pub relations: IndexMap<String, Vec<(String, String, String)>>,
}

impl RelationDocument {
    /// Nonzero entries in row-major universe order.
    pub fn from_relations<'a, I>(universe: &Universe, relations: I) -> RelationDocument
    where
        I: IntoIterator<Item = (&'a str, &'a FuzzyRelation)>,
    {
        let relations = relations
            .into_iter()
            .map(|(name, r)| {
                let triples = r
                    .entries()
                    .map(|(i, j, g)| {
                        (
                            universe.label(i).to_string(),
                            universe.label(j).to_string(),
                            g.to_string(),
                        )
                    })
                    .collect();
                (name.to_string(), triples)
            })
            .collect();
        RelationDocument {
            universe: universe.labels().to_vec(),
            relations,
        }
    }

    pub fn single(name: &str, relation: &FuzzyRelation) -> RelationDocument {
        RelationDocument::from_relations(relation.universe(), [(name, relation)])
    }

    pub fn from_system(system: &FuzzyInformationSystem) -> RelationDocument {
        RelationDocument::from_relations(system.universe(), system.attributes())
    }

    /// Reads JSON or Zadeh notation, whichever `text` looks like.
    pub fn parse(text: &str) -> DocResult<RelationDocument> {
        if text.trim_start().starts_with('{') {
            serde_json::from_str(text).map_err(DocumentError::json)
        } else {
            parse_zadeh(text)
        }
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("documents always serialize");
        out.push('\n');
        out
    }

    /// Zadeh notation. Fails when a label cannot be written unambiguously.
    pub fn to_zadeh(&self) -> DocResult<String> {
        for (i, label) in self.universe.iter().enumerate() {
            check_bare(label).map_err(|m| DocumentError::new(format!("universe[{i}]"), m))?;
        }
        let mut out = format!("universe: {}\n", self.universe.join(", "));
        for (name, triples) in &self.relations {
            check_bare(name).map_err(|m| DocumentError::new(format!("relations.{name}"), m))?;
            let terms: Vec<String> = triples
                .iter()
                .map(|(a, b, g)| format!("{g}/({a},{b})"))
                .collect();
            let body = if terms.is_empty() {
                "∅".to_string()
            } else {
                terms.join("\n  + ")
            };
            out.push_str(&format!("{name} = {body}\n"));
        }
        Ok(out)
    }

    /// Builds the universe and every relation, validating labels and grades.
    pub fn to_relations(&self, scale: GradeScale) -> DocResult<NamedRelations> {
        let universe = build_universe(&self.universe, "universe")?;
        if self.relations.is_empty() {
            return Err(DocumentError::new("relations", "no relations given"));
        }
        let n = universe.len();
        let mut out = Vec::new();
        for (name, triples) in &self.relations {
            let mut grades = vec![None::<Grade>; n * n];
            for (k, (a, b, g)) in triples.iter().enumerate() {
                let at = || format!("relations.{name}[{k}]");
                let i = universe
                    .position(a)
                    .ok_or_else(|| DocumentError::new(at(), format!("unknown label `{a}`")))?;
                let j = universe
                    .position(b)
                    .ok_or_else(|| DocumentError::new(at(), format!("unknown label `{b}`")))?;
                let grade = scale.parse(g).map_err(|e| DocumentError::new(at(), e))?;
                if grades[i * n + j].replace(grade).is_some() {
                    return Err(DocumentError::new(
                        at(),
                        format!("pair ({a},{b}) listed twice"),
                    ));
                }
            }
            let grades = grades
                .into_iter()
                .map(|g| g.unwrap_or(Grade::ZERO))
                .collect();
            let relation =
                FuzzyRelation::from_grades(universe.clone(), grades).expect("n * n grades");
            out.push((name.clone(), relation));
        }
        Ok((universe, out))
    }

    /// The only relation in the document.
    pub fn to_single(&self, scale: GradeScale) -> DocResult<(String, FuzzyRelation)> {
        if self.relations.len() != 1 {
            return Err(DocumentError::new(
                "relations",
                format!(
                    "expected exactly one relation, found {}",
                    self.relations.len()
                ),
            ));
        }
        let (_, mut relations) = self.to_relations(scale)?;
        Ok(relations.remove(0))
    }

    pub fn to_system(&self, scale: GradeScale) -> DocResult<FuzzyInformationSystem> {
        let (universe, relations) = self.to_relations(scale)?;
        FuzzyInformationSystem::new(universe, relations)
            .map_err(|e| DocumentError::new("relations", e))
    }
}

fn build_universe(labels: &[String], field: &str) -> DocResult<Arc<Universe>> {
    if labels.is_empty() {
        return Err(DocumentError::new(field, "universe is empty"));
    }
    for (i, label) in labels.iter().enumerate() {
        if label.trim().is_empty() {
            return Err(DocumentError::new(format!("{field}[{i}]"), "empty label"));
        }
        if labels[..i].contains(label) {
            return Err(DocumentError::new(
                format!("{field}[{i}]"),
                format!("duplicate label `{label}`"),
            ));
        }
    }
    Ok(Universe::new(labels.iter().cloned()).expect("labels validated"))
}

const RESERVED: &[char] = &['(', ')', ',', '/', '+', '=', ':', '#', '∅'];

fn check_bare(label: &str) -> Result<(), String> {
    if label.is_empty()
        || label
            .chars()
            .any(|c| c.is_whitespace() || RESERVED.contains(&c))
    {
        Err(format!("`{label}` cannot be written in Zadeh notation"))
    } else {
        Ok(())
    }
}

fn parse_zadeh(text: &str) -> DocResult<RelationDocument> {
    let mut universe: Option<Vec<String>> = None;
    let mut relations: IndexMap<String, Vec<(String, String, String)>> = IndexMap::new();
    let mut current: Option<String> = None;
    // source line of every term, for diagnostics that need the universe
    let mut term_lines: Vec<usize> = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line_no = index + 1;
        let err = |m: String| DocumentError::new(format!("line {line_no}"), m);
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("universe:") {
            if universe.is_some() {
                return Err(err("universe declared twice".into()));
            }
            let labels: Vec<String> = rest.split(',').map(|s| s.trim().to_string()).collect();
            if let Some(bad) = labels.iter().find(|l| check_bare(l).is_err()) {
                return Err(err(format!("bad label `{bad}` in universe")));
            }
            universe = Some(labels);
        } else if let Some(rest) = line.strip_prefix('+') {
            let Some(name) = &current else {
                return Err(err("continuation line outside a definition".into()));
            };
            let terms = parse_terms(rest, line_no)?;
            term_lines.extend(std::iter::repeat_n(line_no, terms.len()));
            relations
                .get_mut(name)
                .expect("current relation exists")
                .extend(terms);
        } else if let Some((name, body)) = line.split_once('=') {
            let name = name.trim();
            check_bare(name).map_err(err)?;
            if relations.contains_key(name) {
                return Err(err(format!("relation `{name}` defined twice")));
            }
            let terms = parse_terms(body, line_no)?;
            term_lines.extend(std::iter::repeat_n(line_no, terms.len()));
            relations.insert(name.to_string(), terms);
            current = Some(name.to_string());
        } else {
            return Err(err(format!(
                "expected `universe:`, `NAME = ...` or `+ ...`, found `{line}`"
            )));
        }
    }
    let universe =
        universe.ok_or_else(|| DocumentError::new("line 1", "missing `universe:` line"))?;
    let terms = relations.values().flatten();
    for ((a, b, grade), line_no) in terms.zip(term_lines) {
        let err = |m: String| DocumentError::new(format!("line {line_no}"), m);
        if let Some(unknown) = [a, b].into_iter().find(|l| !universe.contains(l)) {
            return Err(err(format!("unknown label `{unknown}`")));
        }
        GradeScale::MAX
            .parse(grade)
            .map_err(|e| err(e.to_string()))?;
    }
    Ok(RelationDocument {
        universe,
        relations,
    })
}

/// `g/(a,b) + g/(a,b) + ...`, or `∅` / `0` for no terms.
fn parse_terms(body: &str, line_no: usize) -> DocResult<Vec<(String, String, String)>> {
    let body = body.trim();
    if body.is_empty() || body == "∅" {
        return Ok(Vec::new());
    }
    body.split('+')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|term| {
            let bad = || {
                DocumentError::new(
                    format!("line {line_no}"),
                    format!("malformed term `{term}`"),
                )
            };
            let (grade, pair) = term.split_once('/').ok_or_else(bad)?;
            let inner = pair
                .trim()
                .strip_prefix('(')
                .and_then(|p| p.strip_suffix(')'))
                .ok_or_else(bad)?;
            let (a, b) = inner.split_once(',').ok_or_else(bad)?;
            let (a, b) = (a.trim(), b.trim());
            if check_bare(a).is_err() || check_bare(b).is_err() {
                return Err(bad());
            }
            Ok((a.to_string(), b.to_string(), grade.trim().to_string()))
        })
        .collect()
}

/// A total mapping between two labelled universes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MappingDocument {
    pub domain: Vec<String>,
    pub codomain: Vec<String>,
    pub map: Vec<(String, String)>,
}

impl MappingDocument {
    pub fn from_mapping(f: &UniverseMapping) -> MappingDocument {
        MappingDocument {
            domain: f.domain().labels().to_vec(),
            codomain: f.codomain().labels().to_vec(),
            map: f
                .pairs()
                .map(|(x, y)| (x.to_string(), y.to_string()))
                .collect(),
        }
    }

    pub fn parse(text: &str) -> DocResult<MappingDocument> {
        serde_json::from_str(text).map_err(DocumentError::json)
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("documents always serialize");
        out.push('\n');
        out
    }

    pub fn to_mapping(&self) -> DocResult<UniverseMapping> {
        let domain = build_universe(&self.domain, "domain")?;
        let codomain = build_universe(&self.codomain, "codomain")?;
        let mut assignment = vec![None; domain.len()];
        for (k, (x, y)) in self.map.iter().enumerate() {
            let at = || format!("map[{k}]");
            let xi = domain
                .position(x)
                .ok_or_else(|| DocumentError::new(at(), format!("`{x}` is not in the domain")))?;
            let yi = codomain
                .position(y)
                .ok_or_else(|| DocumentError::new(at(), format!("`{y}` is not in the codomain")))?;
            if assignment[xi].replace(yi).is_some() {
                return Err(DocumentError::new(at(), format!("`{x}` is mapped twice")));
            }
        }
        let assignment = assignment
            .into_iter()
            .enumerate()
            .map(|(x, y)| {
                y.ok_or_else(|| {
                    DocumentError::new("map", format!("`{}` has no image", domain.label(x)))
                })
            })
            .collect::<DocResult<Vec<_>>>()?;
        Ok(UniverseMapping::new(domain, codomain, assignment).expect("assignment validated"))
    }
}

fn partition_labels(partition: &Partition) -> Vec<Vec<String>> {
    (0..partition.len())
        .map(|b| {
            partition
                .block_labels(b)
                .into_iter()
                .map(str::to_string)
                .collect()
        })
        .collect()
}

/// Output of a single-relation compression.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CompressionDocument {
    pub mode: String,
    pub lossless: bool,
    pub partition: Vec<Vec<String>>,
    pub projection: MappingDocument,
    pub quotient: RelationDocument,
}

impl CompressionDocument {
    pub fn new(name: &str, result: &CompressionResult, lossless: bool) -> CompressionDocument {
        CompressionDocument {
            mode: result.mode.to_string(),
            lossless,
            partition: partition_labels(&result.partition),
            projection: MappingDocument::from_mapping(&result.projection),
            quotient: RelationDocument::single(name, &result.quotient),
        }
    }

    pub fn mode(&self) -> DocResult<Mode> {
        self.mode.parse().map_err(|e| DocumentError::new("mode", e))
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("documents always serialize");
        out.push('\n');
        out
    }
}

/// Output of a whole-system compression.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemCompressionDocument {
    pub lossless: bool,
    pub partition: Vec<Vec<String>>,
    pub projection: MappingDocument,
    pub image: RelationDocument,
}

impl SystemCompressionDocument {
    pub fn new(result: &SystemCompression, lossless: bool) -> SystemCompressionDocument {
        SystemCompressionDocument {
            lossless,
            partition: partition_labels(&result.partition),
            projection: MappingDocument::from_mapping(&result.projection),
            image: RelationDocument::from_system(&result.image),
        }
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("documents always serialize");
        out.push('\n');
        out
    }
}
