use std::sync::Arc;

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Instance, LawId};
use crate::consistency::{coarsest_consistent_partition, group_by_key, Mode};
use crate::error::{Error, Result};
use crate::fuzzy::{FuzzyRelation, Lattice};
use crate::grade::{eleven_point_alphabet, Grade};
use crate::mapping::UniverseMapping;
use crate::universe::Universe;

/// Structural properties to impose on a generated relation.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RelationFlags {
    pub reflexive: bool,
    pub symmetric: bool,
    pub transitive: bool,
}

impl RelationFlags {
    pub const NONE: RelationFlags = RelationFlags {
        reflexive: false,
        symmetric: false,
        transitive: false,
    };
    pub const PREORDER: RelationFlags = RelationFlags {
        reflexive: true,
        symmetric: false,
        transitive: true,
    };
}

/// A seeded random relation over `x1..xn`.
///
/// Each entry is nonzero with probability `density`, drawing its grade
/// uniformly from the nonzero members of `alphabet`. The flags are then
/// imposed by adding the diagonal, symmetrizing and closing until stable.
pub fn random_relation(
    n: usize,
    alphabet: &[Grade],
    density: f64,
    flags: RelationFlags,
    seed: u64,
) -> Result<FuzzyRelation> {
    if n == 0 {
        return Err(Error::Parameter("size must be at least 1".into()));
    }
    if alphabet.is_empty() {
        return Err(Error::Parameter("alphabet is empty".into()));
    }
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::Parameter(format!(
            "density {density} is outside [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(sample_relation(
        &mut rng,
        Universe::numbered("x", n)?,
        alphabet,
        density,
        flags,
    ))
}

/// A seeded random mapping consistent with `relation` in `mode`: a random
/// refinement of the coarsest consistent partition, followed by its
/// projection onto the quotient labels.
pub fn random_consistent_mapping(
    relation: &FuzzyRelation,
    mode: Mode,
    seed: u64,
) -> UniverseMapping {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    consistent_mapping(&mut rng, relation, mode)
}

fn consistent_mapping(rng: &mut impl Rng, relation: &FuzzyRelation, mode: Mode) -> UniverseMapping {
    let coarse = coarsest_consistent_partition(relation, mode);
    let parts: Vec<usize> = coarse
        .blocks()
        .iter()
        .map(|block| rng.random_range(1..=block.len()))
        .collect();
    let split: Vec<usize> = (0..relation.size())
        .map(|x| rng.random_range(0..parts[coarse.block_of(x)]))
        .collect();
    group_by_key(relation.universe().clone(), |x| {
        (coarse.block_of(x), split[x])
    })
    .projection()
}

pub(crate) fn sample_relation(
    rng: &mut impl Rng,
    universe: Arc<Universe>,
    alphabet: &[Grade],
    density: f64,
    flags: RelationFlags,
) -> FuzzyRelation {
    let nonzero: Vec<Grade> = alphabet.iter().copied().filter(|g| !g.is_zero()).collect();
    let relation = FuzzyRelation::from_fn(universe, |_, _| match nonzero.choose(rng) {
        Some(&g) if rng.random_bool(density) => g,
        _ => Grade::ZERO,
    });
    impose(relation, flags)
}

fn impose(mut relation: FuzzyRelation, flags: RelationFlags) -> FuzzyRelation {
    let identity = FuzzyRelation::identity(relation.universe().clone());
    loop {
        let mut next = relation.clone();
        if flags.reflexive {
            next = next.join(&identity).expect("same universe");
        }
        if flags.symmetric {
            next = next.join(&next.inverse()).expect("same universe");
        }
        if flags.transitive {
            next = next.transitive_closure();
        }
        if next == relation {
            return relation;
        }
        relation = next;
    }
}

fn random_mapping(rng: &mut impl Rng, domain: &Arc<Universe>) -> UniverseMapping {
    let n = domain.len();
    let m = rng.random_range(1..=n + 1);
    let codomain = Universe::numbered("y", m).expect("m >= 1");
    let assignment = (0..n).map(|_| rng.random_range(0..m)).collect();
    UniverseMapping::new(domain.clone(), codomain, assignment).expect("indices in range")
}

/// A relation whose rows and/or columns are constant on the kernel classes
/// of `g`, so that `g` is consistent with it in `shape` (when given).
///
/// Rows are copied from class representatives for `Succ`, columns for `Pred`.
/// Closure and symmetrization keep equal rows and columns equal, so imposing
/// transitivity afterwards does not undo the shape; reflexivity can.
fn shaped_relation(
    rng: &mut impl Rng,
    g: &UniverseMapping,
    shape: Option<Mode>,
    flags: RelationFlags,
    alphabet: &[Grade],
) -> FuzzyRelation {
    let universe = g.domain().clone();
    let density = rng.random::<f64>();
    let base = sample_relation(rng, universe.clone(), alphabet, density, flags);
    let rep = |x: usize| g.kernel_class(x)[0];
    let (rows, cols) = match shape {
        None => return base,
        Some(Mode::Pred) => (false, true),
        Some(Mode::Succ) => (true, false),
        Some(Mode::Both) => (true, true),
    };
    let r = FuzzyRelation::from_fn(universe, |x, y| {
        base.get(if rows { rep(x) } else { x }, if cols { rep(y) } else { y })
    });
    impose(r, flags)
}

/// Shapes that make the law's hypothesis likely to hold: `(R, Q)`.
fn hinted_shapes(law: LawId) -> (Option<Mode>, Option<Mode>) {
    use LawId::*;
    match law {
        T2_3a | T3_1a | T3_3PredOnly => (Some(Mode::Pred), None),
        T2_3b | T3_1b => (Some(Mode::Succ), None),
        T3_2_1 | T3_3Sufficient | T3_3Necessary | T2_2 | L2_1 | C2_1 => (Some(Mode::Both), None),
        T3_2_2 => (None, Some(Mode::Both)),
        T3_2_3 => (Some(Mode::Pred), Some(Mode::Succ)),
        T3_2_4 => (Some(Mode::Succ), Some(Mode::Pred)),
        _ => (None, None),
    }
}

fn hinted_flags(law: LawId) -> RelationFlags {
    use LawId::*;
    match law {
        L2_1 | T2_2 => RelationFlags::PREORDER,
        C2_1 => RelationFlags {
            symmetric: true,
            ..RelationFlags::NONE
        },
        T3_1a | T3_1b | T3_1Unconditional => RelationFlags {
            transitive: true,
            ..RelationFlags::NONE
        },
        _ => RelationFlags::NONE,
    }
}

fn random_shape(rng: &mut impl Rng) -> Option<Mode> {
    [None, Some(Mode::Pred), Some(Mode::Succ), Some(Mode::Both)][rng.random_range(0..4)]
}

fn random_flags(rng: &mut impl Rng) -> RelationFlags {
    RelationFlags {
        reflexive: rng.random_bool(0.25),
        symmetric: rng.random_bool(0.25),
        transitive: rng.random_bool(0.25),
    }
}

/// Draws an instance for `law` over at most `max_size` elements with grades
/// from the eleven-point alphabet.
///
/// Half the draws are steered toward the law's hypothesis (matching shapes
/// and flags); the rest are unconstrained, so vacuous and non-vacuous
/// instances both occur. A quarter of mapping draws instead derive `f` from
/// `R` by refining its coarsest consistent partition.
pub fn generate_instance(law: LawId, max_size: usize, rng: &mut impl Rng) -> Instance {
    let alphabet = eleven_point_alphabet();
    let n = rng.random_range(1..=max_size.max(1));
    let universe = Universe::numbered("x", n).expect("n >= 1");
    let needs = law.needs();
    let steer = rng.random_bool(0.5);
    let (hint_r, hint_q) = hinted_shapes(law);
    let flags = if steer {
        hinted_flags(law)
    } else {
        random_flags(rng)
    };

    let g = random_mapping(rng, &universe);
    let shape_r = if steer { hint_r } else { random_shape(rng) };
    let mut r = shaped_relation(rng, &g, shape_r, flags, &alphabet);
    let mut f = needs.mapping.then(|| g.clone());
    if needs.mapping && rng.random_bool(0.25) {
        let mode = Mode::ALL[rng.random_range(0..3)];
        let density = rng.random::<f64>();
        r = sample_relation(rng, universe.clone(), &alphabet, density, flags);
        f = Some(consistent_mapping(rng, &r, mode));
    }
    let q = needs.second_relation.then(|| {
        let shape_q = if steer { hint_q } else { random_shape(rng) };
        let shaper = f.as_ref().unwrap_or(&g);
        let flags_q = random_flags(rng);
        shaped_relation(rng, shaper, shape_q, flags_q, &alphabet)
    });
    Instance { r, q, f, x: None }
}
