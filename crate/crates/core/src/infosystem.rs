//! Fuzzy information systems: one fuzzy relation per attribute over a shared
//! universe, and their homomorphic images.

use std::collections::HashSet;
use std::sync::Arc;

use crate::consistency::{
    classify, group_by_key, signature, verify_roundtrip, ConsistencyReport, Mode, Partition,
    RoundTrip,
};
use crate::error::{Error, Result};
use crate::fuzzy::FuzzyRelation;
use crate::mapping::UniverseMapping;
use crate::universe::{ensure_same, Universe};

#[derive(Debug, Clone)]
pub struct FuzzyInformationSystem {
    universe: Arc<Universe>,
    attributes: Vec<(String, FuzzyRelation)>,
}

impl FuzzyInformationSystem {
    pub fn new<S: Into<String>>(
        universe: Arc<Universe>,
        attributes: impl IntoIterator<Item = (S, FuzzyRelation)>,
    ) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut list = Vec::new();
        for (name, relation) in attributes {
            let name = name.into();
            ensure_same(&universe, relation.universe())?;
            if !seen.insert(name.clone()) {
                return Err(Error::DuplicateAttribute(name));
            }
            list.push((name, relation));
        }
        if list.is_empty() {
            return Err(Error::NoAttributes);
        }
        Ok(FuzzyInformationSystem {
            universe,
            attributes: list,
        })
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    /// Attributes in insertion order.
    pub fn attributes(&self) -> impl Iterator<Item = (&str, &FuzzyRelation)> {
        self.attributes.iter().map(|(name, r)| (name.as_str(), r))
    }

    pub fn attribute(&self, name: &str) -> Option<&FuzzyRelation> {
        self.attributes
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, r)| r)
    }

    pub fn len(&self) -> usize {
        self.attributes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.attributes.is_empty()
    }

    fn map_attributes(
        &self,
        universe: Arc<Universe>,
        op: impl Fn(&FuzzyRelation) -> Result<FuzzyRelation>,
    ) -> Result<FuzzyInformationSystem> {
        let attributes = self
            .attributes
            .iter()
            .map(|(name, r)| Ok((name.clone(), op(r)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(FuzzyInformationSystem {
            universe,
            attributes,
        })
    }
}

/// Attribute order does not matter for equality.
impl PartialEq for FuzzyInformationSystem {
    fn eq(&self, other: &Self) -> bool {
        self.universe == other.universe
            && self.len() == other.len()
            && self
                .attributes()
                .all(|(name, r)| other.attribute(name) == Some(r))
    }
}

impl Eq for FuzzyInformationSystem {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemReport {
    pub reports: Vec<(String, ConsistencyReport)>,
    /// Every attribute is both predecessor- and successor-consistent.
    pub homomorphism: bool,
}

pub fn classify_system(
    f: &UniverseMapping,
    system: &FuzzyInformationSystem,
) -> Result<SystemReport> {
    ensure_same(f.domain(), system.universe())?;
    let reports = system
        .attributes()
        .map(|(name, r)| Ok((name.to_string(), classify(f, r)?)))
        .collect::<Result<Vec<_>>>()?;
    let homomorphism = reports
        .iter()
        .all(|(_, report)| report.satisfies(Mode::Both));
    Ok(SystemReport {
        reports,
        homomorphism,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemCompression {
    pub partition: Partition,
    pub projection: UniverseMapping,
    pub image: FuzzyInformationSystem,
}

impl SystemCompression {
    /// Pulls every attribute of the image back onto the source universe.
    pub fn reconstruct(&self) -> FuzzyInformationSystem {
        self.image
            .map_attributes(self.projection.domain().clone(), |q| {
                self.projection.preimage_relation(q)
            })
            .expect("image attributes live over the projection codomain")
    }

    /// Per-attribute comparison of the reconstruction against `original`.
    pub fn roundtrip(&self, original: &FuzzyInformationSystem) -> Result<Vec<(String, RoundTrip)>> {
        original
            .attributes()
            .map(|(name, r)| Ok((name.to_string(), verify_roundtrip(&self.projection, r)?)))
            .collect()
    }
}

/// Quotients the system by the common refinement of every attribute's
/// neighborhood signatures. Each attribute round-trips exactly.
pub fn compress_system(system: &FuzzyInformationSystem) -> SystemCompression {
    let partition = group_by_key(system.universe().clone(), |x| {
        system
            .attributes()
            .flat_map(|(_, r)| signature(r, x, Mode::Both))
            .collect::<Vec<_>>()
    });
    let projection = partition.projection();
    let image = system
        .map_attributes(projection.codomain().clone(), |r| {
            projection.image_relation(r)
        })
        .expect("attributes live over the system universe");
    SystemCompression {
        partition,
        projection,
        image,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomomorphicImage {
    pub system: FuzzyInformationSystem,
    /// `f⁻¹(f(a)) = a` for every attribute `a`.
    pub lossless: bool,
    pub report: SystemReport,
}

/// Maps every attribute through `f`. Inconsistent mappings are not refused;
/// the image is computed and flagged as lossy.
pub fn homomorphic_image(
    f: &UniverseMapping,
    system: &FuzzyInformationSystem,
) -> Result<HomomorphicImage> {
    let report = classify_system(f, system)?;
    let image = system.map_attributes(f.codomain().clone(), |r| f.image_relation(r))?;
    Ok(HomomorphicImage {
        system: image,
        lossless: report.homomorphism,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::consistency::coarsest_consistent_partition;
    use crate::fixtures::{example_relation, f1, f3};
    use crate::grade::Grade;

    fn single(r: FuzzyRelation) -> FuzzyInformationSystem {
        FuzzyInformationSystem::new(r.universe().clone(), [("a", r)]).unwrap()
    }

    #[test]
    fn construction_rules() {
        let r = example_relation();
        let u = r.universe().clone();
        assert_eq!(
            FuzzyInformationSystem::new(u.clone(), Vec::<(String, FuzzyRelation)>::new())
                .unwrap_err(),
            Error::NoAttributes
        );
        assert_eq!(
            FuzzyInformationSystem::new(u.clone(), [("a", r.clone()), ("a", r.clone())])
                .unwrap_err(),
            Error::DuplicateAttribute("a".into())
        );
        let other = FuzzyRelation::zero(Universe::numbered("x", 3).unwrap());
        assert!(matches!(
            FuzzyInformationSystem::new(u, [("a", other)]),
            Err(Error::UniverseMismatch { .. })
        ));
    }

    #[test]
    fn equality_ignores_attribute_order() {
        let r = example_relation();
        let u = r.universe().clone();
        let a =
            FuzzyInformationSystem::new(u.clone(), [("a", r.clone()), ("b", r.inverse())]).unwrap();
        let b =
            FuzzyInformationSystem::new(u.clone(), [("b", r.inverse()), ("a", r.clone())]).unwrap();
        let c = FuzzyInformationSystem::new(u, [("a", r.inverse()), ("b", r)]).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn classify_examples() {
        let r = example_relation();
        let report = classify_system(&f3(), &single(r.clone())).unwrap();
        assert!(report.homomorphism);

        let s = FuzzyInformationSystem::new(
            r.universe().clone(),
            [("a", r.clone()), ("b", r.inverse())],
        )
        .unwrap();
        let report = classify_system(&f1(), &s).unwrap();
        assert!(!report.homomorphism);
        let (a, b) = (&report.reports[0].1, &report.reports[1].1);
        assert!(a.pred_consistent && !a.succ_consistent);
        assert!(!b.pred_consistent && b.succ_consistent);

        let id = UniverseMapping::identity(r.universe().clone());
        assert!(classify_system(&id, &s).unwrap().homomorphism);
    }

    #[test]
    fn compress_examples() {
        let r = example_relation();
        let s = single(r.clone());
        let c = compress_system(&s);
        assert_eq!(c.partition, coarsest_consistent_partition(&r, Mode::Both));
        assert_eq!(c.partition.len(), 7);
        assert_eq!(c.reconstruct(), s);
        assert!(c.roundtrip(&s).unwrap().iter().all(|(_, v)| v.is_equal()));

        let with_id = FuzzyInformationSystem::new(
            r.universe().clone(),
            [
                ("a", r.clone()),
                ("b", FuzzyRelation::identity(r.universe().clone())),
            ],
        )
        .unwrap();
        assert!(compress_system(&with_id).partition.is_discrete());

        let zero = single(FuzzyRelation::zero(r.universe().clone()));
        assert_eq!(compress_system(&zero).partition.len(), 1);
    }

    #[test]
    fn homomorphic_images() {
        let r = example_relation();
        let s = single(r.clone());
        let image = homomorphic_image(&f3(), &s).unwrap();
        assert!(image.lossless);
        assert_eq!(image.system.attribute("a").unwrap().nonzero_count(), 9);

        let image = homomorphic_image(&f1(), &s).unwrap();
        assert!(!image.lossless);
        let a = image.system.attribute("a").unwrap();
        assert_eq!(a.grade("y1", "y2").unwrap(), Grade::ONE);
        assert_eq!(a.grade("y2", "y4").unwrap(), Grade::tenths(9));

        let id = UniverseMapping::identity(r.universe().clone());
        let image = homomorphic_image(&id, &s).unwrap();
        assert!(image.lossless);
        assert_eq!(image.system, s);
    }
}
