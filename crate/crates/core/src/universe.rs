use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A finite, nonempty, ordered set of labelled elements.
///
/// Elements are addressed by their index in insertion order everywhere in
/// the crate; labels are only consulted at the edges (parsing, printing,
/// witnesses).
#[derive(Debug, Clone)]
pub struct Universe {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl Universe {
    pub fn new<I, S>(labels: I) -> Result<Arc<Universe>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(Arc::new(Universe { labels, index }))
    }

    /// `{prefix}1, ..., {prefix}n`.
    pub fn numbered(prefix: &str, n: usize) -> Result<Arc<Universe>> {
        Universe::new((1..=n).map(|i| format!("{prefix}{i}")))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn require(&self, label: &str) -> Result<usize> {
        self.position(label)
            .ok_or_else(|| Error::ElementNotInUniverse(label.to_string()))
    }

    pub fn contains(&self, label: &str) -> bool {
        self.index.contains_key(label)
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels
    }
}

impl Eq for Universe {}

pub(crate) fn same(a: &Arc<Universe>, b: &Arc<Universe>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

pub(crate) fn ensure_same(a: &Arc<Universe>, b: &Arc<Universe>) -> Result<()> {
    if same(a, b) {
        Ok(())
    } else {
        Err(Error::UniverseMismatch {
            left: a.len(),
            right: b.len(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preserves_order_and_rejects_duplicates() {
        let u = Universe::new(["b", "a", "c"]).unwrap();
        assert_eq!(u.labels(), ["b", "a", "c"]);
        assert_eq!(u.position("a"), Some(1));
        assert_eq!(
            Universe::new(["a", "a"]).unwrap_err(),
            Error::DuplicateLabel("a".into())
        );
        assert_eq!(
            Universe::new(Vec::<String>::new()).unwrap_err(),
            Error::EmptyUniverse
        );
        assert!(matches!(
            u.require("z"),
            Err(Error::ElementNotInUniverse(_))
        ));
    }

    #[test]
    fn equality_is_by_labels() {
        let a = Universe::numbered("x", 3).unwrap();
        let b = Universe::new(["x1", "x2", "x3"]).unwrap();
        assert!(same(&a, &b));
        assert!(ensure_same(&a, &Universe::numbered("x", 4).unwrap()).is_err());
    }
}
