use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// A finite integer combination of canonical symbols. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(bound(serialize = "S: Serialize", deserialize = "S: Deserialize<'de> + Ord"))]
pub struct ClassVector<S: Ord> {
    terms: BTreeMap<S, i64>,
}

impl<S: Ord> Default for ClassVector<S> {
    fn default() -> Self {
        ClassVector { terms: BTreeMap::new() }
    }
}

impl<S: Ord + Clone> ClassVector<S> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(s: S) -> Self {
        let mut c = Self::zero();
        c.add_term(s, 1);
        c
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (S, i64)>) -> Self {
        let mut c = Self::zero();
        for (s, k) in terms {
            c.add_term(s, k);
        }
        c
    }

    pub fn add_term(&mut self, s: S, k: i64) {
        if k == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(s) {
            Entry::Vacant(v) => {
                v.insert(k);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += k;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&mut self, other: &ClassVector<S>) {
        for (s, &k) in &other.terms {
            self.add_term(s.clone(), k);
        }
    }

    pub fn sub(&mut self, other: &ClassVector<S>) {
        for (s, &k) in &other.terms {
            self.add_term(s.clone(), -k);
        }
    }

    pub fn scaled(&self, k: i64) -> ClassVector<S> {
        ClassVector::from_terms(self.terms.iter().map(|(s, &c)| (s.clone(), c * k)))
    }

    pub fn minus(&self, other: &ClassVector<S>) -> ClassVector<S> {
        let mut c = self.clone();
        c.sub(other);
        c
    }

    pub fn plus(&self, other: &ClassVector<S>) -> ClassVector<S> {
        let mut c = self.clone();
        c.add(other);
        c
    }

    pub fn coeff(&self, s: &S) -> i64 {
        self.terms.get(s).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&S, i64)> {
        self.terms.iter().map(|(s, &k)| (s, k))
    }

    /// Applies `f` to every symbol and collects the images with the same coefficients.
    pub fn map<T: Ord + Clone>(&self, mut f: impl FnMut(&S) -> Option<T>) -> ClassVector<T> {
        ClassVector::from_terms(self.terms.iter().filter_map(|(s, &k)| f(s).map(|t| (t, k))))
    }

    /// Drops the terms for which `keep` is false.
    pub fn filter(&self, mut keep: impl FnMut(&S) -> bool) -> ClassVector<S> {
        ClassVector::from_terms(
            self.terms.iter().filter(|(s, _)| keep(s)).map(|(s, &k)| (s.clone(), k)),
        )
    }
}

impl<S: Ord + Clone> FromIterator<(S, i64)> for ClassVector<S> {
    fn from_iter<I: IntoIterator<Item = (S, i64)>>(iter: I) -> Self {
        ClassVector::from_terms(iter)
    }
}

impl<S: Ord + fmt::Display> fmt::Display for ClassVector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (s, &k)) in self.terms.iter().enumerate() {
            let sign = if k < 0 { "-" } else { "+" };
            match (i, k.abs()) {
                (0, _) if k < 0 => write!(f, "-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            if k.abs() == 1 {
                write!(f, "[{s}]")?;
            } else {
                write!(f, "{}·[{s}]", k.abs())?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_removes_terms() {
        let mut c = ClassVector::from_terms([("a", 2), ("b", 1)]);
        c.add_term("a", -2);
        assert_eq!(c.len(), 1);
        assert_eq!(c.coeff(&"a"), 0);
        assert!(c.minus(&c).is_zero());
    }

    #[test]
    fn display_forms() {
        assert_eq!(ClassVector::from_terms([("(1)", 1), ("(4)", 1)]).to_string(), "[(1)] + [(4)]");
        assert_eq!(ClassVector::from_terms([("(1)", 2)]).to_string(), "2·[(1)]");
        assert_eq!(ClassVector::from_terms([("a", -1), ("b", -3)]).to_string(), "-[a] - 3·[b]");
        assert_eq!(ClassVector::<&str>::zero().to_string(), "0");
    }
}
