use std::collections::{BTreeSet, HashSet};

use super::{subsets_of_size, CombinatorialType, IndexSet};
use crate::error::{Error, Result};

/// A flat of the projective closure, with its density flag.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Flat {
    pub rank: usize,
    pub members: IndexSet,
    pub dense: bool,
}

/// The rank-`(l+1)` matroid on `[n+1]` with bases `ind(T)`.
///
/// Masks use bit `i` for hyperplane `i`, so bit 0 is always clear. The
/// rank of every subset is tabulated up front.
#[derive(Debug, Clone)]
pub struct Matroid {
    n: usize,
    ell: usize,
    bases: Vec<u32>,
    rank: Vec<u8>,
}

fn popcount(m: u32) -> usize {
    m.count_ones() as usize
}

impl Matroid {
    pub fn from_type(t: &CombinatorialType) -> Result<Self> {
        let (n, ell) = (t.n(), t.ell());
        if n + 1 > 24 {
            return Err(Error::InvalidRealization(format!("n = {n} is too large")));
        }
        let bases: Vec<u32> = t.ind().iter().map(|b| b.mask()).collect();
        if bases.is_empty() {
            return Err(Error::NotMatroidal("no independent (l+1)-subset".into()));
        }
        let m = Matroid { n, ell, rank: rank_table(n + 1, &bases), bases };
        m.check_exchange()?;
        Ok(m)
    }

    fn check_exchange(&self) -> Result<()> {
        let set: HashSet<u32> = self.bases.iter().copied().collect();
        for &b1 in &self.bases {
            for &b2 in &self.bases {
                let only1 = b1 & !b2;
                let only2 = b2 & !b1;
                for x in bits(only1) {
                    let ok = bits(only2).any(|y| set.contains(&((b1 & !(1 << x)) | (1 << y))));
                    if !ok {
                        return Err(Error::NotMatroidal(format!(
                            "exchange fails for bases {} and {} at {x}",
                            IndexSet::from_mask(b1),
                            IndexSet::from_mask(b2)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    fn inf_bit(&self) -> u32 {
        1 << (self.n + 1)
    }

    pub fn rank(&self, mask: u32) -> usize {
        self.rank[(mask >> 1) as usize] as usize
    }

    pub fn is_independent(&self, mask: u32) -> bool {
        self.rank(mask) == popcount(mask)
    }

    /// Independence in the affine arrangement: the hyperplanes meet and
    /// are linearly independent.
    pub fn is_affine_independent(&self, mask: u32) -> bool {
        self.is_independent(mask | self.inf_bit())
    }

    pub fn closure(&self, mask: u32) -> u32 {
        let r = self.rank(mask);
        (1..=self.n + 1).fold(mask, |acc, i| {
            if self.rank(mask | (1 << i)) == r {
                acc | (1 << i)
            } else {
                acc
            }
        })
    }

    /// Whether the flat spanned by `mask` lies in hyperplane `i`.
    pub fn spans(&self, mask: u32, i: usize) -> bool {
        self.rank(mask | (1 << i)) == self.rank(mask)
    }

    pub fn bases(&self) -> Vec<IndexSet> {
        let mut v: Vec<IndexSet> = self.bases.iter().map(|&b| IndexSet::from_mask(b)).collect();
        v.sort();
        v
    }

    fn circuit_masks(&self) -> Vec<u32> {
        let ground = 1u32 << (self.n + 1);
        let mut out = Vec::new();
        for s in 1..ground {
            let m = s << 1;
            if self.is_independent(m) {
                continue;
            }
            if bits(m).all(|e| self.is_independent(m & !(1 << e))) {
                out.push(m);
            }
        }
        out
    }

    /// Minimal dependent subsets of `[n+1]`.
    pub fn circuits(&self) -> Vec<IndexSet> {
        sorted_sets(self.circuit_masks())
    }

    fn affine_circuit_masks(&self) -> Vec<u32> {
        self.circuit_masks()
            .into_iter()
            .filter(|&c| c & self.inf_bit() == 0 && !self.spans(c, self.n + 1))
            .collect()
    }

    /// Circuits inside `[n]` whose hyperplanes have a common point, i.e.
    /// the circuits that generate relations in the Orlik-Solomon algebra
    /// of the affine arrangement.
    pub fn affine_circuits(&self) -> Vec<IndexSet> {
        sorted_sets(self.affine_circuit_masks())
    }

    /// Affine circuits with their smallest element removed.
    pub fn broken_circuits(&self) -> Vec<IndexSet> {
        let set: BTreeSet<IndexSet> = self
            .affine_circuit_masks()
            .into_iter()
            .map(|c| IndexSet::from_mask(c & (c - 1)))
            .collect();
        set.into_iter().collect()
    }

    pub(crate) fn broken_circuit_masks(&self) -> Vec<u32> {
        self.broken_circuits().iter().map(|b| b.mask()).collect()
    }

    /// `(C - min(C), C)` for every affine circuit, sorted.
    pub fn broken_circuit_pairs(&self) -> Vec<(IndexSet, IndexSet)> {
        let mut v: Vec<(IndexSet, IndexSet)> = self
            .affine_circuit_masks()
            .into_iter()
            .map(|c| (IndexSet::from_mask(c & (c - 1)), IndexSet::from_mask(c)))
            .collect();
        v.sort();
        v
    }

    /// Affine-independent `q`-subsets of `[n]` containing no broken circuit.
    pub fn nbc_sets(&self, q: usize) -> Vec<IndexSet> {
        let bcs = self.broken_circuit_masks();
        subsets_of_size(1, self.n, q)
            .into_iter()
            .filter(|s| {
                let m = s.mask();
                self.is_affine_independent(m) && bcs.iter().all(|&b| b & !m != 0)
            })
            .collect()
    }

    pub fn is_frame(&self, s: &IndexSet) -> bool {
        s.len() == self.ell && self.is_affine_independent(s.mask())
    }

    pub fn frames(&self) -> Vec<IndexSet> {
        subsets_of_size(1, self.n, self.ell).into_iter().filter(|s| self.is_frame(s)).collect()
    }

    pub fn is_beta_nbc(&self, b: &IndexSet) -> bool {
        self.beta_nbc().contains(b)
    }

    pub fn beta_nbc(&self) -> Vec<IndexSet> {
        let bcs = self.broken_circuit_masks();
        self.frames()
            .into_iter()
            .filter(|b| bcs.iter().all(|&c| c & !b.mask() != 0))
            .filter(|b| {
                b.iter().all(|j| {
                    let rest = b.without(j);
                    (1..j).any(|h| !rest.contains(h) && self.is_frame(&rest.with(h)))
                })
            })
            .collect()
    }

    /// Flats of the projective closure of rank `1..=l`, sorted by rank and
    /// then lexicographically, with the density flag.
    pub fn flats(&self) -> Vec<Flat> {
        let ground = 1u32 << (self.n + 1);
        let mut seen = BTreeSet::new();
        for s in 1..ground {
            let m = s << 1;
            let r = self.rank(m);
            if r >= 1 && r <= self.ell && self.is_independent(m) {
                seen.insert(self.closure(m));
            }
        }
        let circuits = self.circuit_masks();
        let mut out: Vec<Flat> = seen
            .into_iter()
            .map(|f| Flat {
                rank: self.rank(f),
                members: IndexSet::from_mask(f),
                dense: is_connected(f, &circuits),
            })
            .collect();
        out.sort();
        out
    }
}

/// Union-find over the circuits inside `flat`.
fn is_connected(flat: u32, circuits: &[u32]) -> bool {
    let members: Vec<usize> = bits(flat).collect();
    if members.len() <= 1 {
        return true;
    }
    let mut parent: Vec<usize> = (0..32).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for &c in circuits.iter().filter(|&&c| c & !flat == 0) {
        let mut it = bits(c);
        let first = it.next().expect("nonempty circuit");
        for e in it {
            let (a, b) = (find(&mut parent, first), find(&mut parent, e));
            parent[a] = b;
        }
    }
    let root = find(&mut parent, members[0]);
    members.iter().all(|&m| find(&mut parent, m) == root)
}

fn bits(m: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |&i| m & (1 << i) != 0)
}

fn sorted_sets(masks: Vec<u32>) -> Vec<IndexSet> {
    let mut v: Vec<IndexSet> = masks.into_iter().map(IndexSet::from_mask).collect();
    v.sort();
    v
}

/// Rank of every subset of a ground set of size `g`, indexed by `mask >> 1`.
fn rank_table(g: usize, bases: &[u32]) -> Vec<u8> {
    let size = 1usize << g;
    let mut indep = vec![false; size];
    for &b in bases {
        indep[(b >> 1) as usize] = true;
    }
    for s in (0..size).rev() {
        if indep[s] {
            for i in 0..g {
                if s & (1 << i) != 0 {
                    indep[s & !(1 << i)] = true;
                }
            }
        }
    }
    let mut rank = vec![0u8; size];
    for s in 1..size {
        rank[s] = if indep[s] {
            s.count_ones() as u8
        } else {
            (0..g).filter(|&i| s & (1 << i) != 0).map(|i| rank[s & !(1 << i)]).max().unwrap_or(0)
        };
    }
    rank
}
