//! The four fuzzy neighborhoods of an element.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::fuzzy::{FuzzyRelation, FuzzySet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NeighborhoodKind {
    /// `y ↦ R(y, x)`, the column of `x`.
    Predecessor,
    /// `y ↦ R(x, y)`, the row of `x`.
    Successor,
    /// Pointwise minimum of predecessor and successor.
    Meet,
    /// Pointwise maximum of predecessor and successor.
    Join,
}

impl NeighborhoodKind {
    pub const ALL: [NeighborhoodKind; 4] = [
        NeighborhoodKind::Predecessor,
        NeighborhoodKind::Successor,
        NeighborhoodKind::Meet,
        NeighborhoodKind::Join,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            NeighborhoodKind::Predecessor => "pred",
            NeighborhoodKind::Successor => "succ",
            NeighborhoodKind::Meet => "meet",
            NeighborhoodKind::Join => "join",
        }
    }
}

impl fmt::Display for NeighborhoodKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for NeighborhoodKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pred" | "p" | "predecessor" => Ok(NeighborhoodKind::Predecessor),
            "succ" | "s" | "successor" => Ok(NeighborhoodKind::Successor),
            "meet" | "p^s" | "and" => Ok(NeighborhoodKind::Meet),
            "join" | "pvs" | "or" => Ok(NeighborhoodKind::Join),
            other => Err(Error::Parameter(format!(
                "unknown neighborhood kind `{other}`"
            ))),
        }
    }
}

/// Neighborhood of the element at index `x`.
pub fn neighborhood_at(relation: &FuzzyRelation, x: usize, kind: NeighborhoodKind) -> FuzzySet {
    let universe = relation.universe().clone();
    match kind {
        NeighborhoodKind::Predecessor => FuzzySet::from_fn(universe, |y| relation.get(y, x)),
        NeighborhoodKind::Successor => FuzzySet::from_fn(universe, |y| relation.get(x, y)),
        NeighborhoodKind::Meet => {
            FuzzySet::from_fn(universe, |y| relation.get(y, x).meet(relation.get(x, y)))
        }
        NeighborhoodKind::Join => {
            FuzzySet::from_fn(universe, |y| relation.get(y, x).join(relation.get(x, y)))
        }
    }
}

/// Neighborhood of the element labelled `x`.
pub fn neighborhood(relation: &FuzzyRelation, x: &str, kind: NeighborhoodKind) -> Result<FuzzySet> {
    let xi = relation.universe().require(x)?;
    Ok(neighborhood_at(relation, xi, kind))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::example_relation;
    use crate::fuzzy::Lattice;
    use crate::grade::Grade;

    fn set(terms: &[(&str, u8)]) -> FuzzySet {
        let u = example_relation().universe().clone();
        FuzzySet::from_terms(u, terms.iter().map(|&(l, k)| (l, Grade::tenths(k)))).unwrap()
    }

    #[test]
    fn example_neighborhoods() {
        let r = example_relation();
        assert_eq!(
            neighborhood(&r, "x4", NeighborhoodKind::Predecessor).unwrap(),
            set(&[("x2", 8), ("x3", 9)])
        );
        assert_eq!(
            neighborhood(&r, "x1", NeighborhoodKind::Successor).unwrap(),
            set(&[("x2", 10), ("x3", 10)])
        );
        assert!(neighborhood(&r, "x4", NeighborhoodKind::Meet)
            .unwrap()
            .is_empty());
        assert_eq!(
            neighborhood(&r, "x4", NeighborhoodKind::Join).unwrap(),
            set(&[("x2", 8), ("x3", 9), ("x6", 7), ("x7", 7)])
        );
    }

    #[test]
    fn unknown_element() {
        let r = example_relation();
        assert_eq!(
            neighborhood(&r, "x9", NeighborhoodKind::Successor).unwrap_err(),
            Error::ElementNotInUniverse("x9".into())
        );
    }

    #[test]
    fn meet_and_join_kinds_combine_pred_and_succ() {
        let r = example_relation();
        for x in 0..r.size() {
            let p = neighborhood_at(&r, x, NeighborhoodKind::Predecessor);
            let s = neighborhood_at(&r, x, NeighborhoodKind::Successor);
            assert_eq!(
                neighborhood_at(&r, x, NeighborhoodKind::Meet),
                p.meet(&s).unwrap()
            );
            assert_eq!(
                neighborhood_at(&r, x, NeighborhoodKind::Join),
                p.join(&s).unwrap()
            );
        }
    }

    #[test]
    fn kind_round_trips_through_text() {
        for kind in NeighborhoodKind::ALL {
            assert_eq!(kind.as_str().parse::<NeighborhoodKind>().unwrap(), kind);
        }
        assert!("sideways".parse::<NeighborhoodKind>().is_err());
    }
}
