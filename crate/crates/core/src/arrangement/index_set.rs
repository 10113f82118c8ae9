use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Strictly increasing set of 1-based hyperplane indices.
///
/// Ordered lexicographically as a tuple, which is the basis order used
/// throughout.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn new(mut v: Vec<usize>) -> Result<Self> {
        if v.contains(&0) {
            return Err(Error::MalformedIndexSet(format!("{v:?} contains 0")));
        }
        let before = v.len();
        v.sort_unstable();
        v.dedup();
        if v.len() != before {
            return Err(Error::MalformedIndexSet(format!("{v:?} has repeated entries")));
        }
        Ok(IndexSet(v))
    }

    pub fn from_mask(mask: u32) -> Self {
        IndexSet((1..32).filter(|&i| mask & (1 << i) != 0).collect())
    }

    pub fn mask(&self) -> u32 {
        self.0.iter().fold(0, |m, &i| m | (1 << i))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &IndexSet) -> bool {
        self.0.iter().all(|&i| other.contains(i))
    }

    pub fn intersection(&self, other: &IndexSet) -> IndexSet {
        IndexSet(self.0.iter().copied().filter(|&i| other.contains(i)).collect())
    }

    pub fn difference(&self, other: &IndexSet) -> IndexSet {
        IndexSet(self.0.iter().copied().filter(|&i| !other.contains(i)).collect())
    }

    pub fn union(&self, other: &IndexSet) -> IndexSet {
        let mut v: Vec<usize> = self.0.iter().chain(&other.0).copied().collect();
        v.sort_unstable();
        v.dedup();
        IndexSet(v)
    }

    /// The set with its `p`-th smallest element (1-based) removed.
    pub fn without_position(&self, p: usize) -> IndexSet {
        let mut v = self.0.clone();
        v.remove(p - 1);
        IndexSet(v)
    }

    pub fn without(&self, i: usize) -> IndexSet {
        IndexSet(self.0.iter().copied().filter(|&x| x != i).collect())
    }

    pub fn with(&self, i: usize) -> IndexSet {
        self.union(&IndexSet(vec![i]))
    }

    /// 1-based position of `i`, if present.
    pub fn position(&self, i: usize) -> Option<usize> {
        self.0.binary_search(&i).ok().map(|p| p + 1)
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    /// Compact label such as `24`, or `{2,10}` once an index exceeds 9.
    pub fn label(&self) -> String {
        if self.0.iter().all(|&i| i < 10) {
            self.0.iter().map(|i| i.to_string()).collect()
        } else {
            self.to_string()
        }
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for IndexSet {
    type Err = Error;

    /// Parses `3,4,5`, `{3,4,5}` or `345` (single digits only).
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('{').trim_end_matches('}');
        let bad = || Error::MalformedIndexSet(s.to_string());
        let v: Vec<usize> = if t.is_empty() {
            Vec::new()
        } else if t.contains(',') || s.trim().starts_with('{') {
            t.split(',').map(|x| x.trim().parse().map_err(|_| bad())).collect::<Result<_>>()?
        } else {
            t.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad)).collect::<Result<_>>()?
        };
        IndexSet::new(v)
    }
}

impl<'a> IntoIterator for &'a IndexSet {
    type Item = &'a usize;
    type IntoIter = std::slice::Iter<'a, usize>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// All `k`-subsets of `lo..=hi` in lexicographic order.
pub fn subsets_of_size(lo: usize, hi: usize, k: usize) -> Vec<IndexSet> {
    let mut out = Vec::new();
    if k == 0 {
        out.push(IndexSet::default());
        return out;
    }
    if hi < lo || hi + 1 - lo < k {
        return out;
    }
    let mut cur: Vec<usize> = (lo..lo + k).collect();
    loop {
        out.push(IndexSet(cur.clone()));
        // advance to the next combination
        let mut i = k;
        while i > 0 && cur[i - 1] == hi + 1 - (k - i + 1) {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        cur[i - 1] += 1;
        for j in i..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_forms() {
        let a: IndexSet = "3,4,5".parse().unwrap();
        assert_eq!(a, "{3,4,5}".parse().unwrap());
        assert_eq!(a, "345".parse().unwrap());
        assert_eq!(a.to_string(), "{3,4,5}");
        assert_eq!(a.label(), "345");
        assert!("3,3".parse::<IndexSet>().is_err());
        assert!("0,1".parse::<IndexSet>().is_err());
    }

    #[test]
    fn combinations_are_lexicographic() {
        let s = subsets_of_size(2, 5, 2);
        let labels: Vec<String> = s.iter().map(|x| x.label()).collect();
        assert_eq!(labels, ["23", "24", "25", "34", "35", "45"]);
        assert_eq!(subsets_of_size(1, 3, 0), vec![IndexSet::default()]);
        assert!(subsets_of_size(1, 2, 3).is_empty());
    }

    #[test]
    fn mask_round_trip() {
        let a: IndexSet = "1,4,13".parse().unwrap();
        assert_eq!(IndexSet::from_mask(a.mask()), a);
        assert_eq!(a.label().parse::<IndexSet>().unwrap(), a);
        assert_eq!("{}".parse::<IndexSet>().unwrap(), IndexSet::default());
    }
}
