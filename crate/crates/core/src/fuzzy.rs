//! Fuzzy sets and fuzzy binary relations over a finite universe.
//!
//! Both are stored densely; entries that were never given a grade read as
//! zero. All values are immutable once built.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::grade::Grade;
use crate::universe::{ensure_same, Universe};

/// Pointwise lattice structure shared by fuzzy sets and fuzzy relations.
pub trait Lattice: Sized {
    /// Pointwise `max` (fuzzy union).
    fn join(&self, other: &Self) -> Result<Self>;
    /// Pointwise `min` (fuzzy intersection).
    fn meet(&self, other: &Self) -> Result<Self>;
    /// Pointwise `<=` (fuzzy containment).
    fn is_subset(&self, other: &Self) -> Result<bool>;
}

fn zip_with(a: &[Grade], b: &[Grade], op: impl Fn(Grade, Grade) -> Grade) -> Vec<Grade> {
    a.iter().zip(b).map(|(&x, &y)| op(x, y)).collect()
}

#[derive(Clone, PartialEq, Eq)]
pub struct FuzzySet {
    universe: Arc<Universe>,
    grades: Vec<Grade>,
}

impl FuzzySet {
    pub fn empty(universe: Arc<Universe>) -> FuzzySet {
        let grades = vec![Grade::ZERO; universe.len()];
        FuzzySet { universe, grades }
    }

    pub fn from_grades(universe: Arc<Universe>, grades: Vec<Grade>) -> Result<FuzzySet> {
        if grades.len() != universe.len() {
            return Err(Error::UniverseMismatch {
                left: universe.len(),
                right: grades.len(),
            });
        }
        Ok(FuzzySet { universe, grades })
    }

    pub fn from_fn(universe: Arc<Universe>, f: impl FnMut(usize) -> Grade) -> FuzzySet {
        let grades = (0..universe.len()).map(f).collect();
        FuzzySet { universe, grades }
    }

    /// Builds a set from `(label, grade)` terms; later terms overwrite earlier ones.
    pub fn from_terms<'a, I>(universe: Arc<Universe>, terms: I) -> Result<FuzzySet>
    where
        I: IntoIterator<Item = (&'a str, Grade)>,
    {
        let mut grades = vec![Grade::ZERO; universe.len()];
        for (label, grade) in terms {
            grades[universe.require(label)?] = grade;
        }
        Ok(FuzzySet { universe, grades })
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn grades(&self) -> &[Grade] {
        &self.grades
    }

    pub fn get(&self, i: usize) -> Grade {
        self.grades[i]
    }

    pub fn grade(&self, label: &str) -> Result<Grade> {
        Ok(self.grades[self.universe.require(label)?])
    }

    /// Indices with strictly positive grade, in universe order.
    pub fn support(&self) -> Vec<usize> {
        (0..self.grades.len())
            .filter(|&i| !self.grades[i].is_zero())
            .collect()
    }

    pub fn is_empty(&self) -> bool {
        self.grades.iter().all(|g| g.is_zero())
    }

    /// Nonzero `(label, grade)` terms in universe order.
    pub fn terms(&self) -> impl Iterator<Item = (&str, Grade)> + '_ {
        self.support()
            .into_iter()
            .map(move |i| (self.universe.label(i), self.grades[i]))
    }
}

impl Lattice for FuzzySet {
    fn join(&self, other: &Self) -> Result<Self> {
        ensure_same(&self.universe, &other.universe)?;
        Ok(FuzzySet {
            universe: self.universe.clone(),
            grades: zip_with(&self.grades, &other.grades, Grade::join),
        })
    }

    fn meet(&self, other: &Self) -> Result<Self> {
        ensure_same(&self.universe, &other.universe)?;
        Ok(FuzzySet {
            universe: self.universe.clone(),
            grades: zip_with(&self.grades, &other.grades, Grade::meet),
        })
    }

    fn is_subset(&self, other: &Self) -> Result<bool> {
        ensure_same(&self.universe, &other.universe)?;
        Ok(self.grades.iter().zip(&other.grades).all(|(a, b)| a <= b))
    }
}

/// Zadeh notation, e.g. `0.8/x2 + 0.9/x3`; the empty set prints as `∅`.
impl fmt::Display for FuzzySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (label, grade) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            write!(f, "{grade}/{label}")?;
            first = false;
        }
        if first {
            f.write_str("∅")?;
        }
        Ok(())
    }
}

impl fmt::Debug for FuzzySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FuzzySet({self})")
    }
}

/// The structural properties a fuzzy relation may have.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Property {
    Reflexive,
    Symmetric,
    /// Max-min transitivity.
    Transitive,
}

/// The first violation of a [`Property`], in row-major scan order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PropertyWitness {
    /// `R(x, x) < 1`.
    Reflexive { x: String, grade: Grade },
    /// `R(x, y) != R(y, x)`.
    Symmetric {
        x: String,
        y: String,
        forward: Grade,
        backward: Grade,
    },
    /// `R(x, z) < R(x, y) ∧ R(y, z)`.
    Transitive {
        x: String,
        y: String,
        z: String,
        direct: Grade,
        via: Grade,
    },
}

#[derive(Clone, PartialEq, Eq)]
pub struct FuzzyRelation {
    universe: Arc<Universe>,
    grades: Vec<Grade>,
}

impl FuzzyRelation {
    pub fn zero(universe: Arc<Universe>) -> FuzzyRelation {
        let n = universe.len();
        FuzzyRelation {
            universe,
            grades: vec![Grade::ZERO; n * n],
        }
    }

    /// The crisp identity relation.
    pub fn identity(universe: Arc<Universe>) -> FuzzyRelation {
        FuzzyRelation::from_fn(
            universe,
            |i, j| if i == j { Grade::ONE } else { Grade::ZERO },
        )
    }

    pub fn from_fn(
        universe: Arc<Universe>,
        mut f: impl FnMut(usize, usize) -> Grade,
    ) -> FuzzyRelation {
        let n = universe.len();
        let mut grades = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                grades.push(f(i, j));
            }
        }
        FuzzyRelation { universe, grades }
    }

    /// Row-major grade matrix of side `universe.len()`.
    pub fn from_grades(universe: Arc<Universe>, grades: Vec<Grade>) -> Result<FuzzyRelation> {
        let n = universe.len();
        if grades.len() != n * n {
            return Err(Error::UniverseMismatch {
                left: n * n,
                right: grades.len(),
            });
        }
        Ok(FuzzyRelation { universe, grades })
    }

    /// Builds a relation from `(from, to, grade)` terms; later terms overwrite earlier ones.
    pub fn from_terms<'a, I>(universe: Arc<Universe>, terms: I) -> Result<FuzzyRelation>
    where
        I: IntoIterator<Item = (&'a str, &'a str, Grade)>,
    {
        let n = universe.len();
        let mut grades = vec![Grade::ZERO; n * n];
        for (a, b, grade) in terms {
            grades[universe.require(a)? * n + universe.require(b)?] = grade;
        }
        Ok(FuzzyRelation { universe, grades })
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn size(&self) -> usize {
        self.universe.len()
    }

    pub fn grades(&self) -> &[Grade] {
        &self.grades
    }

    pub fn get(&self, i: usize, j: usize) -> Grade {
        self.grades[i * self.size() + j]
    }

    pub fn grade(&self, from: &str, to: &str) -> Result<Grade> {
        Ok(self.get(self.universe.require(from)?, self.universe.require(to)?))
    }

    /// Row `i`: the successor neighborhood of element `i` as a slice.
    pub fn row(&self, i: usize) -> &[Grade] {
        let n = self.size();
        &self.grades[i * n..(i + 1) * n]
    }

    /// Column `j`: the predecessor neighborhood of element `j`.
    pub fn column(&self, j: usize) -> Vec<Grade> {
        (0..self.size()).map(|i| self.get(i, j)).collect()
    }

    /// Nonzero entries `(from, to, grade)` in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, Grade)> + '_ {
        let n = self.size();
        self.grades
            .iter()
            .enumerate()
            .filter(|(_, g)| !g.is_zero())
            .map(move |(k, &g)| (k / n, k % n, g))
    }

    pub fn nonzero_count(&self) -> usize {
        self.grades.iter().filter(|g| !g.is_zero()).count()
    }

    pub fn is_crisp(&self) -> bool {
        self.grades.iter().all(|g| g.is_zero() || g.is_one())
    }

    /// `R⁻¹(x, y) = R(y, x)`.
    pub fn inverse(&self) -> FuzzyRelation {
        FuzzyRelation::from_fn(self.universe.clone(), |i, j| self.get(j, i))
    }

    /// Max-min composition: `(R ∘ Q)(x, z) = max_y min(R(x, y), Q(y, z))`.
    pub fn compose(&self, other: &FuzzyRelation) -> Result<FuzzyRelation> {
        ensure_same(&self.universe, &other.universe)?;
        let n = self.size();
        Ok(FuzzyRelation::from_fn(self.universe.clone(), |x, z| {
            (0..n)
                .map(|y| self.get(x, y).meet(other.get(y, z)))
                .max()
                .unwrap_or(Grade::ZERO)
        }))
    }

    pub fn check_property(&self, property: Property) -> Option<PropertyWitness> {
        let n = self.size();
        let label = |i: usize| self.universe.label(i).to_string();
        match property {
            Property::Reflexive => {
                (0..n)
                    .find(|&x| !self.get(x, x).is_one())
                    .map(|x| PropertyWitness::Reflexive {
                        x: label(x),
                        grade: self.get(x, x),
                    })
            }
            Property::Symmetric => {
                for x in 0..n {
                    for y in 0..n {
                        if self.get(x, y) != self.get(y, x) {
                            return Some(PropertyWitness::Symmetric {
                                x: label(x),
                                y: label(y),
                                forward: self.get(x, y),
                                backward: self.get(y, x),
                            });
                        }
                    }
                }
                None
            }
            Property::Transitive => {
                for x in 0..n {
                    for y in 0..n {
                        let first = self.get(x, y);
                        if first.is_zero() {
                            continue;
                        }
                        for z in 0..n {
                            let via = first.meet(self.get(y, z));
                            if self.get(x, z) < via {
                                return Some(PropertyWitness::Transitive {
                                    x: label(x),
                                    y: label(y),
                                    z: label(z),
                                    direct: self.get(x, z),
                                    via,
                                });
                            }
                        }
                    }
                }
                None
            }
        }
    }

    pub fn has_property(&self, property: Property) -> bool {
        self.check_property(property).is_none()
    }

    /// Smallest max-min transitive relation containing `self`.
    pub fn transitive_closure(&self) -> FuzzyRelation {
        let mut current = self.clone();
        // R ∪ R² ∪ ... is stable after at most n - 1 compositions.
        loop {
            let squared = current.compose(&current).expect("same universe");
            let next = current.join(&squared).expect("same universe");
            if next == current {
                return current;
            }
            current = next;
        }
    }
}

impl Lattice for FuzzyRelation {
    fn join(&self, other: &Self) -> Result<Self> {
        ensure_same(&self.universe, &other.universe)?;
        Ok(FuzzyRelation {
            universe: self.universe.clone(),
            grades: zip_with(&self.grades, &other.grades, Grade::join),
        })
    }

    fn meet(&self, other: &Self) -> Result<Self> {
        ensure_same(&self.universe, &other.universe)?;
        Ok(FuzzyRelation {
            universe: self.universe.clone(),
            grades: zip_with(&self.grades, &other.grades, Grade::meet),
        })
    }

    fn is_subset(&self, other: &Self) -> Result<bool> {
        ensure_same(&self.universe, &other.universe)?;
        Ok(self.grades.iter().zip(&other.grades).all(|(a, b)| a <= b))
    }
}

/// Zadeh notation, e.g. `1/(x1,x2) + 0.8/(x2,x4)`; the zero relation prints as `∅`.
impl fmt::Display for FuzzyRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, j, grade) in self.entries() {
            if !first {
                f.write_str(" + ")?;
            }
            write!(
                f,
                "{grade}/({},{})",
                self.universe.label(i),
                self.universe.label(j)
            )?;
            first = false;
        }
        if first {
            f.write_str("∅")?;
        }
        Ok(())
    }
}

impl fmt::Debug for FuzzyRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FuzzyRelation({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{example_relation, example_universe};

    fn g(k: u8) -> Grade {
        Grade::tenths(k)
    }

    #[test]
    fn join_and_meet_single_entry() {
        let u = example_universe();
        let a = FuzzyRelation::from_terms(u.clone(), [("x2", "x4", g(8))]).unwrap();
        let b = FuzzyRelation::from_terms(u.clone(), [("x2", "x4", g(9))]).unwrap();
        assert_eq!(a.join(&b).unwrap(), b);
        assert_eq!(a.meet(&b).unwrap(), a);
    }

    #[test]
    fn identity_and_absorbing_elements() {
        let r = example_relation();
        let zero = FuzzyRelation::zero(r.universe().clone());
        assert_eq!(r.join(&r).unwrap(), r);
        assert_eq!(r.meet(&r).unwrap(), r);
        assert_eq!(r.join(&zero).unwrap(), r);
        assert_eq!(r.meet(&zero).unwrap(), zero);
    }

    #[test]
    fn example_relation_is_antisymmetric_in_support() {
        // exhaustive scan: no pair has both R(x,y) > 0 and R(y,x) > 0
        let r = example_relation();
        let n = r.size();
        let overlap = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .any(|(i, j)| !r.get(i, j).is_zero() && !r.get(j, i).is_zero());
        assert!(!overlap);
        assert_eq!(
            r.meet(&r.inverse()).unwrap(),
            FuzzyRelation::zero(r.universe().clone())
        );
    }

    #[test]
    fn inverse_reads_transposed() {
        let r = example_relation();
        assert_eq!(r.inverse().grade("x2", "x1").unwrap(), Grade::ONE);
        assert_eq!(r.inverse().inverse(), r);
        let sym = r.join(&r.inverse()).unwrap();
        assert_eq!(sym.inverse(), sym);
    }

    #[test]
    fn universe_mismatch_is_reported() {
        let a = FuzzyRelation::zero(Universe::numbered("x", 2).unwrap());
        let b = FuzzyRelation::zero(Universe::numbered("x", 3).unwrap());
        assert!(matches!(a.join(&b), Err(Error::UniverseMismatch { .. })));
        assert!(matches!(a.compose(&b), Err(Error::UniverseMismatch { .. })));
        let s = FuzzySet::empty(Universe::numbered("y", 2).unwrap());
        assert!(s
            .meet(&FuzzySet::empty(Universe::numbered("x", 2).unwrap()))
            .is_err());
    }

    #[test]
    fn composition() {
        let r = example_relation();
        let u = r.universe().clone();
        assert_eq!(r.compose(&FuzzyRelation::identity(u.clone())).unwrap(), r);
        // via x2: 1 ∧ 0.8, via x3: 1 ∧ 0.9
        assert_eq!(r.compose(&r).unwrap().grade("x1", "x4").unwrap(), g(9));
        let zero = FuzzyRelation::zero(u);
        assert_eq!(zero.compose(&r).unwrap(), zero);
    }

    #[test]
    fn property_witnesses() {
        let r = example_relation();
        assert_eq!(
            r.check_property(Property::Reflexive),
            Some(PropertyWitness::Reflexive {
                x: "x1".into(),
                grade: Grade::ZERO
            })
        );
        assert_eq!(
            r.check_property(Property::Transitive),
            Some(PropertyWitness::Transitive {
                x: "x1".into(),
                y: "x2".into(),
                z: "x4".into(),
                direct: Grade::ZERO,
                via: g(8),
            })
        );
        assert_eq!(
            r.check_property(Property::Symmetric),
            Some(PropertyWitness::Symmetric {
                x: "x1".into(),
                y: "x2".into(),
                forward: Grade::ONE,
                backward: Grade::ZERO
            })
        );
        let id = FuzzyRelation::identity(r.universe().clone());
        for p in [
            Property::Reflexive,
            Property::Symmetric,
            Property::Transitive,
        ] {
            assert!(id.has_property(p));
        }
    }

    #[test]
    fn closure() {
        let r = example_relation();
        let closed = r.transitive_closure();
        assert_eq!(closed.grade("x1", "x4").unwrap(), g(9));
        assert!(closed.has_property(Property::Transitive));
        assert!(r.is_subset(&closed).unwrap());
        assert_eq!(closed.transitive_closure(), closed);
        let zero = FuzzyRelation::zero(r.universe().clone());
        assert_eq!(zero.transitive_closure(), zero);
    }

    #[test]
    fn zadeh_display() {
        let r = example_relation();
        assert!(r
            .to_string()
            .starts_with("1/(x1,x2) + 1/(x1,x3) + 0.8/(x2,x4)"));
        let s = FuzzySet::from_terms(r.universe().clone(), [("x3", g(9)), ("x2", g(8))]).unwrap();
        assert_eq!(s.to_string(), "0.8/x2 + 0.9/x3");
        assert_eq!(FuzzySet::empty(r.universe().clone()).to_string(), "∅");
    }
}
