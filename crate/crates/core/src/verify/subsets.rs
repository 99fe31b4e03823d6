use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// A subset of `{1, ..., n}`, stored as its increasing list of members.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubsetSelector {
    n: usize,
    members: Vec<usize>,
}

impl SubsetSelector {
    /// Accepts the members in any order; rejects repeats and out-of-range indices.
    pub fn new(n: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        for &i in &members {
            if i == 0 || i > n {
                return Err(Error::IndexOutOfRange { index: i, bound: n });
            }
        }
        if members.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument(format!(
                "subset {members:?} repeats an element"
            )));
        }
        Ok(SubsetSelector { n, members })
    }

    pub fn full(n: usize) -> Self {
        SubsetSelector {
            n,
            members: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The members in increasing order.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Sum of the members.
    pub fn sum(&self) -> usize {
        self.members.iter().sum()
    }

    /// `{1, ..., n}` minus this set.
    pub fn complement(&self) -> Self {
        SubsetSelector {
            n: self.n,
            members: (1..=self.n).filter(|i| !self.members.contains(i)).collect(),
        }
    }

    /// All `k`-element subsets of `{1, ..., n}` in lexicographic order.
    pub fn all_of_size(n: usize, k: usize) -> impl Iterator<Item = SubsetSelector> {
        (1..=n)
            .combinations(k)
            .map(move |members| SubsetSelector { n, members })
    }
}

/// A tuple `(i_1, ..., i_n)` of nonnegative integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiIndex {
    parts: Vec<usize>,
}

impl MultiIndex {
    pub fn new(parts: Vec<usize>) -> Self {
        MultiIndex { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of `n`-tuples with sum `m`, i.e. `C(m + n - 1, n - 1)`.
    pub fn count(m: usize, n: usize) -> BigInt {
        if n == 0 {
            return BigInt::from(u8::from(m == 0));
        }
        binomial(m + n - 1, n - 1)
    }

    /// Every `n`-tuple with sum `m`, lexicographically decreasing in the first entry.
    pub fn compositions(m: usize, n: usize) -> Vec<MultiIndex> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(n);
        fill(m, n, &mut current, &mut out);
        out
    }
}

fn fill(left: usize, slots: usize, current: &mut Vec<usize>, out: &mut Vec<MultiIndex>) {
    if slots == 0 {
        if left == 0 {
            out.push(MultiIndex::new(current.clone()));
        }
        return;
    }
    if slots == 1 {
        current.push(left);
        out.push(MultiIndex::new(current.clone()));
        current.pop();
        return;
    }
    for first in (0..=left).rev() {
        current.push(first);
        fill(left - first, slots - 1, current, out);
        current.pop();
    }
}

pub(crate) fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub(crate) fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// The multinomial coefficient `m! / (i_1! ... i_n!)`.
pub fn multinomial(m: usize, parts: &MultiIndex) -> Result<BigInt> {
    if parts.total() != m {
        return Err(Error::InvalidArgument(format!(
            "parts {:?} sum to {}, not {m}",
            parts.parts(),
            parts.total()
        )));
    }
    let denom = parts
        .parts()
        .iter()
        .fold(BigInt::one(), |acc, &i| acc * factorial(i));
    Ok(factorial(m) / denom)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selectors() {
        let p = SubsetSelector::new(4, [3, 1]).unwrap();
        assert_eq!(p.members(), &[1, 3]);
        assert_eq!(p.sum(), 4);
        assert_eq!(p.complement().members(), &[2, 4]);
        assert!(SubsetSelector::new(3, [4]).is_err());
        assert!(SubsetSelector::new(3, [0]).is_err());
        assert!(SubsetSelector::new(3, [2, 2]).is_err());
        assert_eq!(SubsetSelector::all_of_size(4, 2).count(), 6);
        assert!(SubsetSelector::full(0).is_empty());
    }

    #[test]
    fn compositions_are_counted() {
        for n in 0..=4 {
            for m in 0..=5 {
                let all = MultiIndex::compositions(m, n);
                assert_eq!(BigInt::from(all.len()), MultiIndex::count(m, n), "m={m} n={n}");
                assert!(all.iter().all(|c| c.total() == m && c.parts().len() == n));
            }
        }
    }

    #[test]
    fn multinomials() {
        let c = |v: Vec<usize>| multinomial(v.iter().sum(), &MultiIndex::new(v)).unwrap();
        assert_eq!(c(vec![1, 1, 1]), BigInt::from(6));
        assert_eq!(c(vec![4, 0, 0]), BigInt::from(1));
        assert_eq!(c(vec![1, 1]), BigInt::from(2));
        assert_eq!(c(vec![]), BigInt::from(1));
        assert!(multinomial(3, &MultiIndex::new(vec![1, 1])).is_err());
    }
}
