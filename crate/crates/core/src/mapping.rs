//! Total mappings between finite universes and the maps they induce on
//! fuzzy sets and fuzzy relations via Zadeh's extension principle.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fuzzy::{FuzzyRelation, FuzzySet};
use crate::grade::Grade;
use crate::universe::{ensure_same, Universe};

/// A total function `f: U -> V` with its fibers precomputed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniverseMapping {
    domain: Arc<Universe>,
    codomain: Arc<Universe>,
    assignment: Vec<usize>,
    /// `fibers[y]` lists `{x : f(x) = y}` in domain order.
    fibers: Vec<Vec<usize>>,
}

impl UniverseMapping {
    /// `assignment[x]` is the codomain index of `f(x)`.
    pub fn new(
        domain: Arc<Universe>,
        codomain: Arc<Universe>,
        assignment: Vec<usize>,
    ) -> Result<Self> {
        if assignment.len() < domain.len() {
            return Err(Error::PartialMapping(
                domain.label(assignment.len()).to_string(),
            ));
        }
        if assignment.len() > domain.len() {
            return Err(Error::Parameter(format!(
                "{} images given for a domain of {} elements",
                assignment.len(),
                domain.len()
            )));
        }
        if let Some(&bad) = assignment.iter().find(|&&y| y >= codomain.len()) {
            return Err(Error::ElementNotInUniverse(format!("codomain index {bad}")));
        }
        let mut fibers = vec![Vec::new(); codomain.len()];
        for (x, &y) in assignment.iter().enumerate() {
            fibers[y].push(x);
        }
        Ok(UniverseMapping {
            domain,
            codomain,
            assignment,
            fibers,
        })
    }

    /// Builds a mapping from `(domain label, codomain label)` pairs. Every
    /// domain element must appear exactly once.
    pub fn from_pairs<'a, I>(
        domain: Arc<Universe>,
        codomain: Arc<Universe>,
        pairs: I,
    ) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let mut assignment: Vec<Option<usize>> = vec![None; domain.len()];
        for (x, y) in pairs {
            let xi = domain.require(x)?;
            let yi = codomain.require(y)?;
            if assignment[xi].replace(yi).is_some() {
                return Err(Error::AmbiguousMapping(x.to_string()));
            }
        }
        let assignment = assignment
            .into_iter()
            .enumerate()
            .map(|(x, y)| y.ok_or_else(|| Error::PartialMapping(domain.label(x).to_string())))
            .collect::<Result<Vec<_>>>()?;
        UniverseMapping::new(domain, codomain, assignment)
    }

    pub fn identity(universe: Arc<Universe>) -> Self {
        let assignment = (0..universe.len()).collect();
        UniverseMapping::new(universe.clone(), universe, assignment).expect("identity is total")
    }

    pub fn domain(&self) -> &Arc<Universe> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<Universe> {
        &self.codomain
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn apply(&self, x: usize) -> usize {
        self.assignment[x]
    }

    pub fn image_of(&self, label: &str) -> Result<&str> {
        Ok(self
            .codomain
            .label(self.assignment[self.domain.require(label)?]))
    }

    pub fn fiber_indices(&self, y: usize) -> &[usize] {
        &self.fibers[y]
    }

    /// `{x : f(x) = y}`; empty when `y` lies outside the image.
    pub fn fiber(&self, y: &str) -> Result<Vec<&str>> {
        let yi = self.codomain.require(y)?;
        Ok(self.fibers[yi]
            .iter()
            .map(|&x| self.domain.label(x))
            .collect())
    }

    /// The kernel class `[x]_f = fiber(f(x))`.
    pub fn kernel_class(&self, x: usize) -> &[usize] {
        &self.fibers[self.assignment[x]]
    }

    /// Nonempty fibers ordered by their first member in the domain.
    pub fn kernel_classes(&self) -> Vec<&[usize]> {
        (0..self.domain.len())
            .filter(|&x| self.kernel_class(x)[0] == x)
            .map(|x| self.kernel_class(x))
            .collect()
    }

    pub fn is_surjective(&self) -> bool {
        self.fibers.iter().all(|fiber| !fiber.is_empty())
    }

    pub fn is_injective(&self) -> bool {
        self.fibers.iter().all(|fiber| fiber.len() <= 1)
    }

    /// `(x, f(x))` label pairs in domain order.
    pub fn pairs(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.assignment
            .iter()
            .enumerate()
            .map(|(x, &y)| (self.domain.label(x), self.codomain.label(y)))
    }

    /// Zadeh extension: `f(A)(y) = sup { A(x) : f(x) = y }`, zero on empty fibers.
    pub fn image_set(&self, set: &FuzzySet) -> Result<FuzzySet> {
        ensure_same(&self.domain, set.universe())?;
        Ok(FuzzySet::from_fn(self.codomain.clone(), |y| {
            self.fibers[y]
                .iter()
                .map(|&x| set.get(x))
                .max()
                .unwrap_or(Grade::ZERO)
        }))
    }

    /// `f⁻¹(B)(x) = B(f(x))`.
    pub fn preimage_set(&self, set: &FuzzySet) -> Result<FuzzySet> {
        ensure_same(&self.codomain, set.universe())?;
        Ok(FuzzySet::from_fn(self.domain.clone(), |x| {
            set.get(self.assignment[x])
        }))
    }

    /// Fuzzy relation mapping: `f(R)(y1, y2) = sup { R(x1, x2) : f(x1) = y1, f(x2) = y2 }`.
    pub fn image_relation(&self, relation: &FuzzyRelation) -> Result<FuzzyRelation> {
        ensure_same(&self.domain, relation.universe())?;
        let m = self.codomain.len();
        let mut grades = vec![Grade::ZERO; m * m];
        for (x1, x2, grade) in relation.entries() {
            let slot = &mut grades[self.assignment[x1] * m + self.assignment[x2]];
            *slot = slot.join(grade);
        }
        FuzzyRelation::from_grades(self.codomain.clone(), grades)
    }

    /// Inverse fuzzy relation mapping: `f⁻¹(Q)(x1, x2) = Q(f(x1), f(x2))`.
    pub fn preimage_relation(&self, relation: &FuzzyRelation) -> Result<FuzzyRelation> {
        ensure_same(&self.codomain, relation.universe())?;
        Ok(FuzzyRelation::from_fn(self.domain.clone(), |x1, x2| {
            relation.get(self.assignment[x1], self.assignment[x2])
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{example_relation, example_universe, f1, f3};
    use crate::fuzzy::Lattice;

    fn g(k: u8) -> Grade {
        Grade::tenths(k)
    }

    #[test]
    fn fibers_of_f1() {
        let f = f1();
        assert_eq!(f.fiber("y2").unwrap(), ["x2", "x3"]);
        assert!(f.fiber("y3").unwrap().is_empty());
        assert!(matches!(f.fiber("x1"), Err(Error::ElementNotInUniverse(_))));
        assert!(!f.is_surjective());
        assert!(!f.is_injective());
        let id = UniverseMapping::identity(example_universe());
        assert_eq!(id.fiber("x5").unwrap(), ["x5"]);
        assert!(id.is_surjective() && id.is_injective());
    }

    #[test]
    fn kernel_classes_in_domain_order() {
        let f = f3();
        let classes: Vec<Vec<usize>> = f
            .kernel_classes()
            .into_iter()
            .map(<[usize]>::to_vec)
            .collect();
        assert_eq!(
            classes,
            vec![
                vec![0],
                vec![1],
                vec![2],
                vec![3],
                vec![4],
                vec![5, 6],
                vec![7]
            ]
        );
        assert_eq!(f.kernel_class(6), &[5, 6]);
    }

    #[test]
    fn rejects_partial_and_ambiguous_pairs() {
        let u = Universe::numbered("x", 2).unwrap();
        let v = Universe::numbered("y", 2).unwrap();
        assert_eq!(
            UniverseMapping::from_pairs(u.clone(), v.clone(), [("x1", "y1")]).unwrap_err(),
            Error::PartialMapping("x2".into())
        );
        assert_eq!(
            UniverseMapping::from_pairs(
                u.clone(),
                v.clone(),
                [("x1", "y1"), ("x1", "y2"), ("x2", "y1")]
            )
            .unwrap_err(),
            Error::AmbiguousMapping("x1".into())
        );
        assert!(matches!(
            UniverseMapping::from_pairs(u.clone(), v.clone(), [("x1", "y9"), ("x2", "y1")]),
            Err(Error::ElementNotInUniverse(_))
        ));
        assert!(UniverseMapping::new(u, v, vec![0, 5]).is_err());
    }

    #[test]
    fn image_and_preimage_of_sets() {
        let f = f1();
        let a =
            FuzzySet::from_terms(f.domain().clone(), [("x1", Grade::ONE), ("x2", g(5))]).unwrap();
        let expected =
            FuzzySet::from_terms(f.codomain().clone(), [("y1", Grade::ONE), ("y2", g(5))]).unwrap();
        assert_eq!(f.image_set(&a).unwrap(), expected);
        assert!(f
            .image_set(&FuzzySet::empty(f.domain().clone()))
            .unwrap()
            .is_empty());

        let b = FuzzySet::from_terms(f.codomain().clone(), [("y2", g(5))]).unwrap();
        let pulled =
            FuzzySet::from_terms(f.domain().clone(), [("x2", g(5)), ("x3", g(5))]).unwrap();
        assert_eq!(f.preimage_set(&b).unwrap(), pulled);
        assert!(f
            .preimage_set(&FuzzySet::empty(f.codomain().clone()))
            .unwrap()
            .is_empty());

        assert!(matches!(
            f.image_set(&b),
            Err(Error::UniverseMismatch { .. })
        ));
        assert!(matches!(
            f.preimage_set(&a),
            Err(Error::UniverseMismatch { .. })
        ));
    }

    #[test]
    fn identity_is_neutral() {
        let r = example_relation();
        let id = UniverseMapping::identity(r.universe().clone());
        assert_eq!(id.image_relation(&r).unwrap(), r);
        assert_eq!(id.preimage_relation(&r).unwrap(), r);
        let a = FuzzySet::from_fn(r.universe().clone(), |i| g(i as u8));
        assert_eq!(id.image_set(&a).unwrap(), a);
        assert_eq!(id.preimage_set(&a).unwrap(), a);
    }

    #[test]
    fn relation_image_of_example() {
        let f = f1();
        let image = f.image_relation(&example_relation()).unwrap();
        assert_eq!(image.grade("y2", "y4").unwrap(), g(9));
        assert_eq!(image.grade("y1", "y2").unwrap(), Grade::ONE);
        // y3 has an empty fiber
        assert!(image.row(2).iter().all(|g| g.is_zero()));
        assert!(image.column(2).iter().all(|g| g.is_zero()));
        let back = f.preimage_relation(&image).unwrap();
        assert_eq!(back.grade("x2", "x4").unwrap(), g(9));
        let zero = FuzzyRelation::zero(f.codomain().clone());
        assert_eq!(
            f.preimage_relation(&zero).unwrap(),
            FuzzyRelation::zero(f.domain().clone())
        );
        assert!(example_relation().is_subset(&back).unwrap());
    }
}
