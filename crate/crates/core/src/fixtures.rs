//! The worked example: an eight-element relation and three mappings that
//! merge one pair of elements each.
//!
//! * `f1` merges `x2, x3` (predecessor-consistent only),
//! * `f2` merges `x4, x5` (successor-consistent only),
//! * `f3` merges `x6, x7` (both).

use std::sync::Arc;

use crate::fuzzy::FuzzyRelation;
use crate::grade::Grade;
use crate::mapping::UniverseMapping;
use crate::universe::Universe;

pub fn example_universe() -> Arc<Universe> {
    Universe::numbered("x", 8).expect("valid universe")
}

pub fn example_codomain() -> Arc<Universe> {
    Universe::numbered("y", 8).expect("valid universe")
}

pub fn example_relation() -> FuzzyRelation {
    let t = Grade::tenths;
    FuzzyRelation::from_terms(
        example_universe(),
        [
            ("x1", "x2", Grade::ONE),
            ("x1", "x3", Grade::ONE),
            ("x2", "x4", t(8)),
            ("x2", "x5", t(8)),
            ("x3", "x4", t(9)),
            ("x3", "x5", t(8)),
            ("x4", "x6", t(7)),
            ("x4", "x7", t(7)),
            ("x5", "x6", t(7)),
            ("x5", "x7", t(7)),
            ("x6", "x8", t(9)),
            ("x7", "x8", t(9)),
        ],
    )
    .expect("labels in universe")
}

/// `x_i -> y_merged_into` for `i` in `merged`, `x_i -> y_i` otherwise.
fn merging(merged: [usize; 2], target: usize) -> UniverseMapping {
    let assignment = (1..=8)
        .map(|i| {
            if merged.contains(&i) {
                target - 1
            } else {
                i - 1
            }
        })
        .collect();
    UniverseMapping::new(example_universe(), example_codomain(), assignment).expect("total mapping")
}

pub fn f1() -> UniverseMapping {
    merging([2, 3], 2)
}

pub fn f2() -> UniverseMapping {
    merging([4, 5], 4)
}

pub fn f3() -> UniverseMapping {
    merging([6, 7], 6)
}
