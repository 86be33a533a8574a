//! Consistent functions and lossless compression.
//!
//! A mapping `f` is *predecessor-consistent* with respect to `R` when any two
//! elements with the same image have the same column in `R`, and
//! *successor-consistent* when they have the same row. It is *blockwise
//! consistent* when `R` is constant on every product of kernel classes. The
//! three verdicts are computed by separate scans so that their relationship
//! (blockwise = pred ∧ succ) can be checked rather than assumed.
//!
//! Grouping elements by identical neighborhood signatures yields the
//! coarsest partition whose natural projection is consistent, and mapping
//! `R` through that projection compresses it without loss.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fuzzy::{FuzzyRelation, FuzzySet, Lattice};
use crate::grade::Grade;
use crate::mapping::UniverseMapping;
use crate::neighborhood::{neighborhood_at, NeighborhoodKind};
use crate::universe::{ensure_same, Universe};

/// Which neighborhoods a mapping must preserve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Pred,
    Succ,
    Both,
}

impl Mode {
    pub const ALL: [Mode; 3] = [Mode::Pred, Mode::Succ, Mode::Both];

    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Pred => "pred",
            Mode::Succ => "succ",
            Mode::Both => "both",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pred" | "predecessor" => Ok(Mode::Pred),
            "succ" | "successor" => Ok(Mode::Succ),
            "both" => Ok(Mode::Both),
            other => Err(Error::Parameter(format!(
                "unknown mode `{other}` (expected pred, succ or both)"
            ))),
        }
    }
}

/// Two elements with the same image whose neighborhoods differ at `z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborhoodWitness {
    pub x: String,
    pub x_prime: String,
    pub z: String,
    pub grade_x: Grade,
    pub grade_x_prime: Grade,
}

/// Two entries of one kernel-class block `[x]_f × [y]_f` with different grades.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockWitness {
    pub first: (String, String),
    pub second: (String, String),
    pub first_grade: Grade,
    pub second_grade: Grade,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsistencyReport {
    pub pred_consistent: bool,
    pub succ_consistent: bool,
    pub blockwise_consistent: bool,
    pub pred_witness: Option<NeighborhoodWitness>,
    pub succ_witness: Option<NeighborhoodWitness>,
    pub blockwise_witness: Option<BlockWitness>,
    /// Grades closer than this were treated as equal. Zero for exact reports.
    pub tolerance: Grade,
}

impl ConsistencyReport {
    pub fn is_exact(&self) -> bool {
        self.tolerance.is_zero()
    }

    pub fn satisfies(&self, mode: Mode) -> bool {
        match mode {
            Mode::Pred => self.pred_consistent,
            Mode::Succ => self.succ_consistent,
            Mode::Both => self.pred_consistent && self.succ_consistent,
        }
    }
}

impl fmt::Display for ConsistencyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "pred={} succ={} blockwise={}",
            self.pred_consistent, self.succ_consistent, self.blockwise_consistent
        )?;
        if !self.is_exact() {
            write!(f, " (approximate, tolerance {})", self.tolerance)?;
        }
        for (name, witness) in [("pred", &self.pred_witness), ("succ", &self.succ_witness)] {
            if let Some(w) = witness {
                write!(
                    f,
                    "\n{name} witness: {} and {} differ at {}: {} vs {}",
                    w.x, w.x_prime, w.z, w.grade_x, w.grade_x_prime
                )?;
            }
        }
        if let Some(w) = &self.blockwise_witness {
            write!(
                f,
                "\nblockwise witness: ({},{})={} but ({},{})={}",
                w.first.0, w.first.1, w.first_grade, w.second.0, w.second.1, w.second_grade
            )?;
        }
        Ok(())
    }
}

/// First pair in a kernel class whose neighborhoods of `kind` differ.
fn neighborhood_scan(
    f: &UniverseMapping,
    relation: &FuzzyRelation,
    kind: NeighborhoodKind,
    same: &impl Fn(Grade, Grade) -> bool,
) -> Option<NeighborhoodWitness> {
    let n = relation.size();
    let entry = |x: usize, z: usize| match kind {
        NeighborhoodKind::Predecessor => relation.get(z, x),
        _ => relation.get(x, z),
    };
    let label = |i: usize| relation.universe().label(i).to_string();
    for class in f.kernel_classes() {
        let rep = class[0];
        for &member in &class[1..] {
            if let Some(z) = (0..n).find(|&z| !same(entry(rep, z), entry(member, z))) {
                return Some(NeighborhoodWitness {
                    x: label(rep),
                    x_prime: label(member),
                    z: label(z),
                    grade_x: entry(rep, z),
                    grade_x_prime: entry(member, z),
                });
            }
        }
    }
    None
}

/// First entry of a block `[x]_f × [y]_f` that differs from the block's corner.
fn block_scan(
    f: &UniverseMapping,
    relation: &FuzzyRelation,
    same: &impl Fn(Grade, Grade) -> bool,
) -> Option<BlockWitness> {
    let classes = f.kernel_classes();
    let label = |i: usize| relation.universe().label(i).to_string();
    for rows in &classes {
        for cols in &classes {
            let corner = relation.get(rows[0], cols[0]);
            for &a in rows.iter() {
                for &b in cols.iter() {
                    if !same(relation.get(a, b), corner) {
                        return Some(BlockWitness {
                            first: (label(rows[0]), label(cols[0])),
                            second: (label(a), label(b)),
                            first_grade: corner,
                            second_grade: relation.get(a, b),
                        });
                    }
                }
            }
        }
    }
    None
}

fn classify_by(
    f: &UniverseMapping,
    relation: &FuzzyRelation,
    tolerance: Grade,
) -> Result<ConsistencyReport> {
    ensure_same(f.domain(), relation.universe())?;
    let same = |a: Grade, b: Grade| a.distance(b) <= tolerance;
    let pred_witness = neighborhood_scan(f, relation, NeighborhoodKind::Predecessor, &same);
    let succ_witness = neighborhood_scan(f, relation, NeighborhoodKind::Successor, &same);
    let blockwise_witness = block_scan(f, relation, &same);
    Ok(ConsistencyReport {
        pred_consistent: pred_witness.is_none(),
        succ_consistent: succ_witness.is_none(),
        blockwise_consistent: blockwise_witness.is_none(),
        pred_witness,
        succ_witness,
        blockwise_witness,
        tolerance,
    })
}

/// Exact classification of `f` with respect to `relation`.
pub fn classify(f: &UniverseMapping, relation: &FuzzyRelation) -> Result<ConsistencyReport> {
    classify_by(f, relation, Grade::ZERO)
}

/// Classification that treats grades within `tolerance` of each other as
/// equal. The result is marked approximate and carries none of the exact
/// round-trip guarantees.
pub fn classify_approx(
    f: &UniverseMapping,
    relation: &FuzzyRelation,
    tolerance: Grade,
) -> Result<ConsistencyReport> {
    classify_by(f, relation, tolerance)
}

/// Classification through round trips of neighborhoods: `f` is
/// predecessor-consistent iff `f⁻¹(f(R_s^x)) = R_s^x` for every `x`, and
/// successor-consistent iff the same holds for every `R_p^x`.
///
/// Returns `(pred, succ)`.
pub fn classify_via_roundtrip(
    f: &UniverseMapping,
    relation: &FuzzyRelation,
) -> Result<(bool, bool)> {
    ensure_same(f.domain(), relation.universe())?;
    let stable = |kind: NeighborhoodKind| -> Result<bool> {
        for x in 0..relation.size() {
            let hood = neighborhood_at(relation, x, kind);
            if f.preimage_set(&f.image_set(&hood)?)? != hood {
                return Ok(false);
            }
        }
        Ok(true)
    };
    Ok((
        stable(NeighborhoodKind::Successor)?,
        stable(NeighborhoodKind::Predecessor)?,
    ))
}

/// A partition of a universe into nonempty blocks.
///
/// Blocks are kept sorted internally and ordered by their first member in
/// universe order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    universe: Arc<Universe>,
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
}

impl Partition {
    /// Builds a partition from `block_of[x]`, an arbitrary block id per element.
    pub fn from_block_ids(universe: Arc<Universe>, ids: &[usize]) -> Result<Partition> {
        if ids.len() != universe.len() {
            return Err(Error::UniverseMismatch {
                left: universe.len(),
                right: ids.len(),
            });
        }
        Ok(group_by_key(universe, |x| ids[x]))
    }

    pub fn from_blocks(universe: Arc<Universe>, blocks: &[Vec<usize>]) -> Result<Partition> {
        let n = universe.len();
        let mut ids = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::Parameter("partition blocks must be nonempty".into()));
            }
            for &x in block {
                if x >= n {
                    return Err(Error::ElementNotInUniverse(format!("index {x}")));
                }
                if ids[x] != usize::MAX {
                    return Err(Error::Parameter(format!(
                        "element `{}` lies in two blocks",
                        universe.label(x)
                    )));
                }
                ids[x] = b;
            }
        }
        if let Some(x) = ids.iter().position(|&b| b == usize::MAX) {
            return Err(Error::Parameter(format!(
                "element `{}` lies in no block",
                universe.label(x)
            )));
        }
        Partition::from_block_ids(universe, &ids)
    }

    /// Every element in its own block.
    pub fn discrete(universe: Arc<Universe>) -> Partition {
        group_by_key(universe, |x| x)
    }

    /// The kernel partition of a mapping.
    pub fn kernel_of(f: &UniverseMapping) -> Partition {
        group_by_key(f.domain().clone(), |x| f.apply(x))
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn is_discrete(&self) -> bool {
        self.blocks.len() == self.universe.len()
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    pub fn block_labels(&self, b: usize) -> Vec<&str> {
        self.blocks[b]
            .iter()
            .map(|&x| self.universe.label(x))
            .collect()
    }

    /// `c-` followed by the lexicographically smallest member label.
    pub fn canonical_label(&self, b: usize) -> String {
        let smallest = self.blocks[b]
            .iter()
            .map(|&x| self.universe.label(x))
            .min()
            .expect("blocks are nonempty");
        format!("c-{smallest}")
    }

    pub fn quotient_universe(&self) -> Arc<Universe> {
        Universe::new((0..self.len()).map(|b| self.canonical_label(b)))
            .expect("canonical labels are distinct")
    }

    /// The natural projection onto the blocks.
    pub fn projection(&self) -> UniverseMapping {
        UniverseMapping::new(
            self.universe.clone(),
            self.quotient_universe(),
            self.block_of.clone(),
        )
        .expect("every element has a block")
    }

    /// Whether every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        self.blocks.iter().all(|block| {
            block
                .iter()
                .all(|&x| other.block_of[x] == other.block_of[block[0]])
        })
    }

    /// Common refinement: `x ~ y` iff they share a block in both.
    pub fn intersect(&self, other: &Partition) -> Result<Partition> {
        ensure_same(&self.universe, &other.universe)?;
        Ok(group_by_key(self.universe.clone(), |x| {
            (self.block_of[x], other.block_of[x])
        }))
    }

    /// Copy of `self` with blocks `a` and `b` merged.
    pub fn merge(&self, a: usize, b: usize) -> Partition {
        group_by_key(self.universe.clone(), |x| {
            let id = self.block_of[x];
            if id == b {
                a
            } else {
                id
            }
        })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in 0..self.len() {
            if b > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{{{}}}", self.block_labels(b).join(","))?;
        }
        Ok(())
    }
}

pub(crate) fn group_by_key<K: Hash + Eq>(
    universe: Arc<Universe>,
    key: impl Fn(usize) -> K,
) -> Partition {
    let mut ids: HashMap<K, usize> = HashMap::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut block_of = Vec::with_capacity(universe.len());
    for x in 0..universe.len() {
        let next = blocks.len();
        let b = *ids.entry(key(x)).or_insert(next);
        if b == next {
            blocks.push(Vec::new());
        }
        blocks[b].push(x);
        block_of.push(b);
    }
    Partition {
        universe,
        blocks,
        block_of,
    }
}

/// The neighborhood signature of `x` under `mode`: its column, its row, or both.
pub(crate) fn signature(relation: &FuzzyRelation, x: usize, mode: Mode) -> Vec<Grade> {
    match mode {
        Mode::Pred => relation.column(x),
        Mode::Succ => relation.row(x).to_vec(),
        Mode::Both => {
            let mut sig = relation.column(x);
            sig.extend_from_slice(relation.row(x));
            sig
        }
    }
}

/// Groups elements with identical neighborhood signatures. The natural
/// projection onto the result is `mode`-consistent, and merging any two of
/// its blocks breaks that.
pub fn coarsest_consistent_partition(relation: &FuzzyRelation, mode: Mode) -> Partition {
    group_by_key(relation.universe().clone(), |x| {
        signature(relation, x, mode)
    })
}

/// An entry where `f⁻¹(f(R))` disagrees with `R`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntryDiff {
    pub from: String,
    pub to: String,
    pub original: Grade,
    pub reconstructed: Grade,
}

impl fmt::Display for EntryDiff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{}): {} -> {}",
            self.from, self.to, self.original, self.reconstructed
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RoundTrip {
    Equal,
    /// Differing entries in row-major order.
    Differs(Vec<EntryDiff>),
}

impl RoundTrip {
    pub fn is_equal(&self) -> bool {
        matches!(self, RoundTrip::Equal)
    }

    fn compare(original: &FuzzyRelation, reconstructed: &FuzzyRelation) -> RoundTrip {
        let n = original.size();
        let diffs: Vec<EntryDiff> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| original.get(i, j) != reconstructed.get(i, j))
            .map(|(i, j)| EntryDiff {
                from: original.universe().label(i).to_string(),
                to: original.universe().label(j).to_string(),
                original: original.get(i, j),
                reconstructed: reconstructed.get(i, j),
            })
            .collect();
        if diffs.is_empty() {
            RoundTrip::Equal
        } else {
            RoundTrip::Differs(diffs)
        }
    }
}

/// Compares `f⁻¹(f(R))` against `R` entry by entry.
pub fn verify_roundtrip(f: &UniverseMapping, relation: &FuzzyRelation) -> Result<RoundTrip> {
    let reconstructed = f.preimage_relation(&f.image_relation(relation)?)?;
    Ok(RoundTrip::compare(relation, &reconstructed))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompressionResult {
    pub mode: Mode,
    pub partition: Partition,
    pub projection: UniverseMapping,
    pub quotient: FuzzyRelation,
}

impl CompressionResult {
    /// Pulls the quotient back onto the source universe.
    pub fn reconstruct(&self) -> FuzzyRelation {
        self.projection
            .preimage_relation(&self.quotient)
            .expect("quotient lives over the projection codomain")
    }

    pub fn roundtrip(&self, original: &FuzzyRelation) -> RoundTrip {
        RoundTrip::compare(original, &self.reconstruct())
    }
}

/// Maps `relation` onto its coarsest `mode`-consistent quotient.
pub fn compress(relation: &FuzzyRelation, mode: Mode) -> CompressionResult {
    let partition = coarsest_consistent_partition(relation, mode);
    compress_onto(relation, partition, mode)
}

pub(crate) fn compress_onto(
    relation: &FuzzyRelation,
    partition: Partition,
    mode: Mode,
) -> CompressionResult {
    let projection = partition.projection();
    let quotient = projection
        .image_relation(relation)
        .expect("projection domain is the relation universe");
    CompressionResult {
        mode,
        partition,
        projection,
        quotient,
    }
}

/// Neighborhood of `y` in `f(R)` computed from the source side, without
/// building `f(R)`: the union of `f(R_p^x)` (or `f(R_s^x)`) over the fiber of
/// `y`. When the fiber's members share their neighborhood, the image of one
/// member suffices. Meet and join kinds combine the two.
pub fn quotient_neighborhood(
    f: &UniverseMapping,
    relation: &FuzzyRelation,
    y: &str,
    kind: NeighborhoodKind,
) -> Result<FuzzySet> {
    ensure_same(f.domain(), relation.universe())?;
    let yi = f.codomain().require(y)?;
    let side = |kind: NeighborhoodKind| -> Result<FuzzySet> {
        let fiber = f.fiber_indices(yi);
        let Some((&first, rest)) = fiber.split_first() else {
            return Ok(FuzzySet::empty(f.codomain().clone()));
        };
        let first_hood = neighborhood_at(relation, first, kind);
        if rest
            .iter()
            .all(|&x| neighborhood_at(relation, x, kind) == first_hood)
        {
            return f.image_set(&first_hood);
        }
        union_of_images(f, relation, fiber, kind)
    };
    match kind {
        NeighborhoodKind::Predecessor | NeighborhoodKind::Successor => side(kind),
        NeighborhoodKind::Meet => {
            side(NeighborhoodKind::Predecessor)?.meet(&side(NeighborhoodKind::Successor)?)
        }
        NeighborhoodKind::Join => {
            side(NeighborhoodKind::Predecessor)?.join(&side(NeighborhoodKind::Successor)?)
        }
    }
}

/// `⋃_{x ∈ members} f(N(x))` for a predecessor or successor kind.
pub fn union_of_images(
    f: &UniverseMapping,
    relation: &FuzzyRelation,
    members: &[usize],
    kind: NeighborhoodKind,
) -> Result<FuzzySet> {
    let mut acc = FuzzySet::empty(f.codomain().clone());
    for &x in members {
        acc = acc.join(&f.image_set(&neighborhood_at(relation, x, kind))?)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{example_relation, f1, f2, f3};
    use crate::neighborhood::neighborhood;

    fn g(k: u8) -> Grade {
        Grade::tenths(k)
    }

    fn block_sets(p: &Partition) -> Vec<Vec<&str>> {
        (0..p.len()).map(|b| p.block_labels(b)).collect()
    }

    #[test]
    fn classify_example_mappings() {
        let r = example_relation();
        let report = classify(&f1(), &r).unwrap();
        assert!(report.pred_consistent && !report.succ_consistent && !report.blockwise_consistent);
        assert_eq!(
            report.succ_witness,
            Some(NeighborhoodWitness {
                x: "x2".into(),
                x_prime: "x3".into(),
                z: "x4".into(),
                grade_x: g(8),
                grade_x_prime: g(9),
            })
        );
        assert!(report.pred_witness.is_none());

        let report = classify(&f2(), &r).unwrap();
        assert!(!report.pred_consistent && report.succ_consistent && !report.blockwise_consistent);
        let w = report.pred_witness.unwrap();
        assert_eq!(
            (w.x.as_str(), w.x_prime.as_str(), w.z.as_str()),
            ("x4", "x5", "x3")
        );
        assert_eq!((w.grade_x, w.grade_x_prime), (g(9), g(8)));

        let report = classify(&f3(), &r).unwrap();
        assert!(report.pred_consistent && report.succ_consistent && report.blockwise_consistent);
        assert!(report.is_exact());

        let id = UniverseMapping::identity(r.universe().clone());
        let report = classify(&id, &r).unwrap();
        assert!(report.satisfies(Mode::Both) && report.blockwise_consistent);
    }

    #[test]
    fn block_witness_lies_in_one_block() {
        let r = example_relation();
        let w = classify(&f1(), &r).unwrap().blockwise_witness.unwrap();
        let f = f1();
        assert_eq!(
            f.image_of(&w.first.0).unwrap(),
            f.image_of(&w.second.0).unwrap()
        );
        assert_eq!(
            f.image_of(&w.first.1).unwrap(),
            f.image_of(&w.second.1).unwrap()
        );
        assert_ne!(w.first_grade, w.second_grade);
        assert_eq!(r.grade(&w.second.0, &w.second.1).unwrap(), w.second_grade);
    }

    #[test]
    fn tolerance_relaxes_grouping() {
        let r = example_relation();
        let report = classify_approx(&f1(), &r, g(1)).unwrap();
        assert!(report.pred_consistent && report.succ_consistent);
        assert!(!report.is_exact());
        assert!(report.to_string().contains("approximate"));
    }

    #[test]
    fn roundtrip_classifier() {
        let r = example_relation();
        assert_eq!(classify_via_roundtrip(&f1(), &r).unwrap(), (true, false));
        assert_eq!(classify_via_roundtrip(&f2(), &r).unwrap(), (false, true));
        assert_eq!(classify_via_roundtrip(&f3(), &r).unwrap(), (true, true));
        let id = UniverseMapping::identity(r.universe().clone());
        assert_eq!(classify_via_roundtrip(&id, &r).unwrap(), (true, true));
    }

    #[test]
    fn coarsest_partitions_of_example() {
        let r = example_relation();
        let both = coarsest_consistent_partition(&r, Mode::Both);
        assert_eq!(
            block_sets(&both),
            vec![
                vec!["x1"],
                vec!["x2"],
                vec!["x3"],
                vec!["x4"],
                vec!["x5"],
                vec!["x6", "x7"],
                vec!["x8"]
            ]
        );
        let pred = coarsest_consistent_partition(&r, Mode::Pred);
        assert_eq!(
            block_sets(&pred),
            vec![
                vec!["x1"],
                vec!["x2", "x3"],
                vec!["x4"],
                vec!["x5"],
                vec!["x6", "x7"],
                vec!["x8"]
            ]
        );
        let succ = coarsest_consistent_partition(&r, Mode::Succ);
        assert_eq!(
            block_sets(&succ),
            vec![
                vec!["x1"],
                vec!["x2"],
                vec!["x3"],
                vec!["x4", "x5"],
                vec!["x6", "x7"],
                vec!["x8"]
            ]
        );
        let zero = FuzzyRelation::zero(r.universe().clone());
        assert_eq!(coarsest_consistent_partition(&zero, Mode::Both).len(), 1);
    }

    #[test]
    fn partition_construction() {
        let u = example_relation().universe().clone();
        let p = Partition::from_blocks(u.clone(), &[vec![7, 0], vec![1, 2, 3, 4, 5, 6]]).unwrap();
        assert_eq!(p.block_labels(0), ["x1", "x8"]);
        assert_eq!(p.canonical_label(1), "c-x2");
        assert!(
            Partition::from_blocks(u.clone(), &[vec![0, 1], vec![1, 2, 3, 4, 5, 6, 7]]).is_err()
        );
        assert!(Partition::from_blocks(u.clone(), &[vec![0, 1]]).is_err());
        assert!(
            Partition::from_blocks(u.clone(), &[vec![0, 1, 2, 3, 4, 5, 6, 7], vec![]]).is_err()
        );
        assert!(Partition::discrete(u.clone()).refines(&p));
        assert!(!p.refines(&Partition::discrete(u.clone())));
        assert_eq!(p.to_string(), "{x1,x8} {x2,x3,x4,x5,x6,x7}");
        assert_eq!(p.merge(0, 1).len(), 1);
    }

    #[test]
    fn canonical_label_is_lexicographic() {
        let u = Universe::new(["x2", "x10", "x1"]).unwrap();
        let p = Partition::from_blocks(u, &[vec![0, 1], vec![2]]).unwrap();
        assert_eq!(p.canonical_label(0), "c-x10");
        assert_eq!(p.quotient_universe().labels(), ["c-x10", "c-x1"]);
    }

    #[test]
    fn compression_of_example_is_lossless() {
        let r = example_relation();
        let result = compress(&r, Mode::Both);
        assert_eq!(result.quotient.size(), 7);
        assert_eq!(result.reconstruct(), r);
        assert!(result.roundtrip(&r).is_equal());
        assert!(result.projection.is_surjective());
        assert_eq!(
            result.quotient,
            result.projection.image_relation(&r).unwrap()
        );
        assert_eq!(result.quotient.grade("c-x4", "c-x6").unwrap(), g(7));

        let zero = FuzzyRelation::zero(r.universe().clone());
        let result = compress(&zero, Mode::Both);
        assert_eq!(result.quotient.size(), 1);
        assert_eq!(result.reconstruct(), zero);
    }

    #[test]
    fn f1_partition_does_not_round_trip() {
        let r = example_relation();
        let kernel = Partition::kernel_of(&f1());
        let result = compress_onto(&r, kernel, Mode::Pred);
        assert_eq!(
            result.roundtrip(&r),
            RoundTrip::Differs(vec![EntryDiff {
                from: "x2".into(),
                to: "x4".into(),
                original: g(8),
                reconstructed: g(9),
            }])
        );
    }

    #[test]
    fn verify_roundtrip_on_examples() {
        let r = example_relation();
        assert_eq!(verify_roundtrip(&f3(), &r).unwrap(), RoundTrip::Equal);
        let id = UniverseMapping::identity(r.universe().clone());
        assert!(verify_roundtrip(&id, &r).unwrap().is_equal());
        let RoundTrip::Differs(diffs) = verify_roundtrip(&f1(), &r).unwrap() else {
            panic!("f1 must not round-trip");
        };
        assert_eq!(diffs.len(), 1);
        assert_eq!(diffs[0].to_string(), "(x2,x4): 0.8 -> 0.9");
    }

    #[test]
    fn quotient_neighborhoods_match_image_relation() {
        let r = example_relation();
        for f in [f1(), f2(), f3()] {
            let image = f.image_relation(&r).unwrap();
            for y in f.codomain().labels() {
                for kind in NeighborhoodKind::ALL {
                    assert_eq!(
                        quotient_neighborhood(&f, &r, y, kind).unwrap(),
                        neighborhood(&image, y, kind).unwrap(),
                        "y={y} kind={kind}"
                    );
                }
            }
        }
    }

    #[test]
    fn mode_parsing() {
        for mode in Mode::ALL {
            assert_eq!(mode.as_str().parse::<Mode>().unwrap(), mode);
        }
        assert!("neither".parse::<Mode>().is_err());
    }
}
