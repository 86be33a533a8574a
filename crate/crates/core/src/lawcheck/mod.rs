//! Executable algebraic laws and a randomized checker for them.
//!
//! Every law in [`LawId`] is a hypothesis/conclusion pair evaluated on an
//! [`Instance`]. [`check_law`] reports whether the law holds, holds
//! vacuously, or fails, and for failures names the first place where the two
//! sides of the conclusion disagree.

mod catalog;
mod generate;
mod search;

use std::fmt;

use crate::consistency::{
    classify, classify_via_roundtrip, union_of_images, verify_roundtrip, RoundTrip,
};
use crate::error::{Error, Result};
use crate::fuzzy::{FuzzyRelation, FuzzySet, Lattice, Property, PropertyWitness};
use crate::grade::Grade;
use crate::mapping::UniverseMapping;
use crate::neighborhood::{neighborhood_at, NeighborhoodKind};
use crate::universe::{ensure_same, Universe};

pub use catalog::{LawId, Needs};
pub use generate::{generate_instance, random_consistent_mapping, random_relation, RelationFlags};
pub use search::{
    known_counterexample, run_suite, search_counterexample, suite_instance, Counterexample,
    LawSummary,
};

/// Inputs for one law evaluation. `q` and `f` are required only by the laws
/// that mention them; `x` narrows pointwise laws to a single element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub r: FuzzyRelation,
    pub q: Option<FuzzyRelation>,
    pub f: Option<UniverseMapping>,
    pub x: Option<String>,
}

impl Instance {
    pub fn new(r: FuzzyRelation) -> Instance {
        Instance {
            r,
            q: None,
            f: None,
            x: None,
        }
    }

    pub fn with_q(mut self, q: FuzzyRelation) -> Instance {
        self.q = Some(q);
        self
    }

    pub fn with_f(mut self, f: UniverseMapping) -> Instance {
        self.f = Some(f);
        self
    }

    pub fn at(mut self, x: impl Into<String>) -> Instance {
        self.x = Some(x.into());
        self
    }

    /// Number of elements in the universe of `R`.
    pub fn size(&self) -> usize {
        self.r.size()
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "U = {{{}}}", self.r.universe().labels().join(", "))?;
        write!(f, "\nR = {}", self.r)?;
        if let Some(q) = &self.q {
            write!(f, "\nQ = {q}")?;
        }
        if let Some(map) = &self.f {
            let pairs: Vec<String> = map.pairs().map(|(x, y)| format!("{x}->{y}")).collect();
            write!(f, "\nf = {}", pairs.join(", "))?;
        }
        if let Some(x) = &self.x {
            write!(f, "\nx = {x}")?;
        }
        Ok(())
    }
}

/// One side of a compared conclusion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Grade(Grade),
    Truth(bool),
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Grade(g) => write!(f, "{g}"),
            Side::Truth(b) => write!(f, "{b}"),
        }
    }
}

/// Where a conclusion fails: the labels indexing the disagreement and the
/// values of its left and right sides there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub at: Vec<String>,
    pub left: Side,
    pub right: Side,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "at ({}): {} vs {}",
            self.at.join(","),
            self.left,
            self.right
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    /// The hypothesis is false on this instance.
    Vacuous,
    Violated(Witness),
}

impl Verdict {
    pub fn is_violated(&self) -> bool {
        matches!(self, Verdict::Violated(_))
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Violated(w) => Some(w),
            _ => None,
        }
    }

    pub fn status(&self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Vacuous => "vacuous",
            Verdict::Violated(_) => "violated",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Violated(w) => write!(f, "violated {w}"),
            other => f.write_str(other.status()),
        }
    }
}

struct Ctx<'a> {
    r: &'a FuzzyRelation,
    q: Option<&'a FuzzyRelation>,
    f: Option<&'a UniverseMapping>,
    x: Option<usize>,
}

impl<'a> Ctx<'a> {
    fn new(law: LawId, inst: &'a Instance) -> Result<Ctx<'a>> {
        let needs = law.needs();
        if needs.second_relation && inst.q.is_none() {
            return Err(Error::MissingComponent("Q"));
        }
        if needs.mapping && inst.f.is_none() {
            return Err(Error::MissingComponent("f"));
        }
        let universe = inst.r.universe();
        if let Some(q) = &inst.q {
            ensure_same(universe, q.universe())?;
        }
        if let Some(f) = &inst.f {
            ensure_same(universe, f.domain())?;
        }
        let x = inst.x.as_deref().map(|x| universe.require(x)).transpose()?;
        Ok(Ctx {
            r: &inst.r,
            q: inst.q.as_ref(),
            f: inst.f.as_ref(),
            x,
        })
    }

    fn q(&self) -> &'a FuzzyRelation {
        self.q.expect("checked in Ctx::new")
    }

    fn f(&self) -> &'a UniverseMapping {
        self.f.expect("checked in Ctx::new")
    }

    fn universe(&self) -> &'a Universe {
        self.r.universe()
    }

    /// The elements a pointwise law is checked at.
    fn points(&self) -> Vec<usize> {
        match self.x {
            Some(x) => vec![x],
            None => (0..self.r.size()).collect(),
        }
    }
}

/// Evaluates `law` on `instance`.
///
/// Fails with [`Error::MissingComponent`] when the law needs `Q` or `f` and the
/// instance lacks it, and with a universe error when the parts disagree.
pub fn check_law(law: LawId, instance: &Instance) -> Result<Verdict> {
    let ctx = Ctx::new(law, instance)?;
    if !hypothesis(law, &ctx)? {
        return Ok(Verdict::Vacuous);
    }
    Ok(match conclusion(law, &ctx)? {
        None => Verdict::Holds,
        Some(w) => Verdict::Violated(w),
    })
}

fn hypothesis(law: LawId, c: &Ctx) -> Result<bool> {
    use LawId::*;
    let preorder =
        || c.r.has_property(Property::Reflexive) && c.r.has_property(Property::Transitive);
    Ok(match law {
        C2_1 => c.r.has_property(Property::Symmetric),
        L2_1 | T2_2 => preorder(),
        T2_3a => classify(c.f(), c.r)?.pred_consistent || classify(c.f(), c.q())?.pred_consistent,
        T2_3b => classify(c.f(), c.r)?.succ_consistent || classify(c.f(), c.q())?.succ_consistent,
        T3_1a => c.r.has_property(Property::Transitive) && classify(c.f(), c.r)?.pred_consistent,
        T3_1b => c.r.has_property(Property::Transitive) && classify(c.f(), c.r)?.succ_consistent,
        T3_1Unconditional => c.r.has_property(Property::Transitive),
        T3_2_1 | T3_3Sufficient => {
            let report = classify(c.f(), c.r)?;
            report.pred_consistent && report.succ_consistent
        }
        T3_2_2 => {
            let report = classify(c.f(), c.q())?;
            report.pred_consistent && report.succ_consistent
        }
        T3_2_3 => classify(c.f(), c.r)?.pred_consistent && classify(c.f(), c.q())?.succ_consistent,
        T3_2_4 => classify(c.f(), c.r)?.succ_consistent && classify(c.f(), c.q())?.pred_consistent,
        T3_3PredOnly => classify(c.f(), c.r)?.pred_consistent,
        T3_3Necessary => verify_roundtrip(c.f(), c.r)?.is_equal(),
        Eq1 | Eq2 | Eq3 | Eq4 | Eq5 | Eq6 | T2_1 | P2_1 | P2_2a | P2_2b | T2_4a | T2_4b | T3_4a
        | T3_4b | T3_2Unconditional => true,
    })
}

fn conclusion(law: LawId, c: &Ctx) -> Result<Option<Witness>> {
    use LawId::*;
    use NeighborhoodKind::{Predecessor as P, Successor as S};
    match law {
        Eq1 => pointwise(c, |x| Ok((nb(c.r, x, P), nb(&c.r.inverse(), x, S)))),
        Eq2 => pointwise(c, |x| Ok((nb(c.r, x, S), nb(&c.r.inverse(), x, P)))),
        Eq3 => pointwise(c, |x| {
            Ok((
                nb(&c.r.join(c.q())?, x, P),
                nb(c.r, x, P).join(&nb(c.q(), x, P))?,
            ))
        }),
        Eq4 => pointwise(c, |x| {
            Ok((
                nb(&c.r.join(c.q())?, x, S),
                nb(c.r, x, S).join(&nb(c.q(), x, S))?,
            ))
        }),
        Eq5 => pointwise(c, |x| {
            Ok((
                nb(&c.r.meet(c.q())?, x, P),
                nb(c.r, x, P).meet(&nb(c.q(), x, P))?,
            ))
        }),
        Eq6 => pointwise(c, |x| {
            Ok((
                nb(&c.r.meet(c.q())?, x, S),
                nb(c.r, x, S).meet(&nb(c.q(), x, S))?,
            ))
        }),
        T2_1 => {
            let report = classify(c.f(), c.r)?;
            Ok(truths(
                "blockwise",
                report.blockwise_consistent,
                report.pred_consistent && report.succ_consistent,
            ))
        }
        P2_1 => {
            let direct = classify(c.f(), c.r)?;
            let inverse = classify(c.f(), &c.r.inverse())?;
            Ok(truths(
                "pred(R)|succ(R⁻¹)",
                direct.pred_consistent,
                inverse.succ_consistent,
            )
            .or_else(|| {
                truths(
                    "succ(R)|pred(R⁻¹)",
                    direct.succ_consistent,
                    inverse.pred_consistent,
                )
            }))
        }
        C2_1 | T2_2 => {
            let report = classify(c.f(), c.r)?;
            Ok(truths(
                "pred|succ",
                report.pred_consistent,
                report.succ_consistent,
            ))
        }
        L2_1 => {
            let n = c.r.size();
            for x in 0..n {
                for y in x + 1..n {
                    let same_pred = c.r.column(x) == c.r.column(y);
                    let same_succ = c.r.row(x) == c.r.row(y);
                    if same_pred != same_succ {
                        return Ok(Some(Witness {
                            at: labels(c.universe(), &[x, y]),
                            left: Side::Truth(same_pred),
                            right: Side::Truth(same_succ),
                        }));
                    }
                }
            }
            Ok(None)
        }
        T2_3a => image_pointwise(c, S, true),
        T2_3b => image_pointwise(c, P, true),
        P2_2a => image_pointwise(c, P, false),
        P2_2b => image_pointwise(c, S, false),
        T2_4a => {
            let (by_roundtrip, _) = classify_via_roundtrip(c.f(), c.r)?;
            Ok(truths(
                "pred|roundtrip(R_s)",
                classify(c.f(), c.r)?.pred_consistent,
                by_roundtrip,
            ))
        }
        T2_4b => {
            let (_, by_roundtrip) = classify_via_roundtrip(c.f(), c.r)?;
            Ok(truths(
                "succ|roundtrip(R_p)",
                classify(c.f(), c.r)?.succ_consistent,
                by_roundtrip,
            ))
        }
        T3_1a | T3_1b | T3_1Unconditional => {
            let image = c.f().image_relation(c.r)?;
            Ok(image.check_property(Property::Transitive).map(|w| match w {
                PropertyWitness::Transitive {
                    x,
                    y,
                    z,
                    direct,
                    via,
                } => Witness {
                    at: vec![x, y, z],
                    left: Side::Grade(direct),
                    right: Side::Grade(via),
                },
                other => unreachable!("transitivity check returned {other:?}"),
            }))
        }
        T3_2_1 | T3_2_2 | T3_2_3 | T3_2_4 | T3_2Unconditional => {
            let f = c.f();
            let left = f.image_relation(&c.r.meet(c.q())?)?;
            let right = f.image_relation(c.r)?.meet(&f.image_relation(c.q())?)?;
            Ok(compare_relations(&left, &right))
        }
        T3_3Sufficient | T3_3PredOnly => Ok(match verify_roundtrip(c.f(), c.r)? {
            RoundTrip::Equal => None,
            RoundTrip::Differs(diffs) => {
                let d = &diffs[0];
                Some(Witness {
                    at: vec![d.from.clone(), d.to.clone()],
                    left: Side::Grade(d.original),
                    right: Side::Grade(d.reconstructed),
                })
            }
        }),
        T3_3Necessary => {
            let report = classify(c.f(), c.r)?;
            let witness = report.pred_witness.or(report.succ_witness);
            Ok(witness.map(|w| Witness {
                at: vec![w.x, w.x_prime, w.z],
                left: Side::Grade(w.grade_x),
                right: Side::Grade(w.grade_x_prime),
            }))
        }
        T3_4a => image_neighborhoods(c, P),
        T3_4b => image_neighborhoods(c, S),
    }
}

fn nb(r: &FuzzyRelation, x: usize, kind: NeighborhoodKind) -> FuzzySet {
    neighborhood_at(r, x, kind)
}

fn labels(universe: &Universe, at: &[usize]) -> Vec<String> {
    at.iter().map(|&i| universe.label(i).to_string()).collect()
}

fn truths(at: &str, left: bool, right: bool) -> Option<Witness> {
    (left != right).then(|| Witness {
        at: vec![at.to_string()],
        left: Side::Truth(left),
        right: Side::Truth(right),
    })
}

fn compare_sets(prefix: &[String], a: &FuzzySet, b: &FuzzySet) -> Option<Witness> {
    let z = (0..a.grades().len()).find(|&z| a.get(z) != b.get(z))?;
    let mut at = prefix.to_vec();
    at.push(a.universe().label(z).to_string());
    Some(Witness {
        at,
        left: Side::Grade(a.get(z)),
        right: Side::Grade(b.get(z)),
    })
}

fn compare_relations(a: &FuzzyRelation, b: &FuzzyRelation) -> Option<Witness> {
    let n = a.size();
    let k = (0..n * n).find(|&k| a.grades()[k] != b.grades()[k])?;
    Some(Witness {
        at: labels(a.universe(), &[k / n, k % n]),
        left: Side::Grade(a.grades()[k]),
        right: Side::Grade(b.grades()[k]),
    })
}

fn pointwise(
    c: &Ctx,
    sides: impl Fn(usize) -> Result<(FuzzySet, FuzzySet)>,
) -> Result<Option<Witness>> {
    for x in c.points() {
        let (left, right) = sides(x)?;
        if let Some(w) = compare_sets(&labels(c.universe(), &[x]), &left, &right) {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// `f((R ∩ Q)_k^x)` against `f(R_k^x) ∩ f(Q_k^x)`, or the same with `∪`.
fn image_pointwise(c: &Ctx, kind: NeighborhoodKind, meet: bool) -> Result<Option<Witness>> {
    let f = c.f();
    let op = |a: &FuzzySet, b: &FuzzySet| if meet { a.meet(b) } else { a.join(b) };
    let combined = if meet {
        c.r.meet(c.q())?
    } else {
        c.r.join(c.q())?
    };
    pointwise(c, |x| {
        let left = f.image_set(&nb(&combined, x, kind))?;
        let right = op(
            &f.image_set(&nb(c.r, x, kind))?,
            &f.image_set(&nb(c.q(), x, kind))?,
        )?;
        Ok((left, right))
    })
}

/// Image-side neighborhoods against the union of member images, and against
/// each single member image when the relevant consistency holds.
fn image_neighborhoods(c: &Ctx, kind: NeighborhoodKind) -> Result<Option<Witness>> {
    let f = c.f();
    let image = f.image_relation(c.r)?;
    let report = classify(f, c.r)?;
    let consistent = match kind {
        NeighborhoodKind::Predecessor => report.pred_consistent,
        _ => report.succ_consistent,
    };
    let targets: Vec<usize> = match c.x {
        Some(x) => vec![f.apply(x)],
        None => (0..f.codomain().len()).collect(),
    };
    for y in targets {
        let left = nb(&image, y, kind);
        let prefix = vec![f.codomain().label(y).to_string()];
        let fiber = f.fiber_indices(y);
        if let Some(w) = compare_sets(&prefix, &left, &union_of_images(f, c.r, fiber, kind)?) {
            return Ok(Some(w));
        }
        if consistent {
            for &x in fiber {
                let single = f.image_set(&nb(c.r, x, kind))?;
                let mut at = prefix.clone();
                at.push(c.universe().label(x).to_string());
                if let Some(w) = compare_sets(&at, &left, &single) {
                    return Ok(Some(w));
                }
            }
        }
    }
    Ok(None)
}
