use std::cmp::Ordering;

use super::signature::Signature;

/// A normal-form monomial: factors `(generator index, exponent)` with strictly
/// increasing indices, positive exponents, and exponent 1 on odd generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    factors: Vec<(u32, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { factors: Vec::new() }
    }

    pub fn generator(i: usize) -> Self {
        Monomial { factors: vec![(i as u32, 1)] }
    }

    /// Builds a monomial from factors already in normal form.
    ///
    /// Panics if the factors are not strictly increasing with positive
    /// exponents.
    pub fn from_sorted(factors: Vec<(u32, u32)>) -> Self {
        assert!(factors.windows(2).all(|w| w[0].0 < w[1].0));
        assert!(factors.iter().all(|f| f.1 > 0));
        Monomial { factors }
    }

    pub fn factors(&self) -> &[(u32, u32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self, sig: &Signature) -> usize {
        self.factors
            .iter()
            .map(|&(i, e)| sig.degree(i as usize) * e as usize)
            .sum()
    }

    /// Number of generator factors counted with multiplicity.
    pub fn word_length(&self) -> usize {
        self.factors.iter().map(|f| f.1 as usize).sum()
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.factors
            .iter()
            .find(|f| f.0 as usize == i)
            .map_or(0, |f| f.1)
    }

    pub fn contains(&self, i: usize) -> bool {
        self.exponent(i) > 0
    }

    /// Whether every factor satisfies `pred`.
    pub fn all_in(&self, pred: impl Fn(usize) -> bool) -> bool {
        self.factors.iter().all(|f| pred(f.0 as usize))
    }

    /// Product `self * other` as `(monomial, negative)`, or `None` if it
    /// vanishes because an odd generator repeats.
    pub fn mul(&self, other: &Monomial, sig: &Signature) -> Option<(Monomial, bool)> {
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let mut neg = false;
        // Odd-parity factors of `self` not yet passed by the merge.
        let mut odd_left: usize = self
            .factors
            .iter()
            .filter(|&&(i, e)| sig.is_odd(i as usize) && e % 2 == 1)
            .count();
        let (a, b) = (&self.factors, &other.factors);
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
            let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
            if take_a {
                if sig.is_odd(a[i].0 as usize) && a[i].1 % 2 == 1 {
                    odd_left -= 1;
                }
                out.push(a[i]);
                i += 1;
            } else if take_b {
                if sig.is_odd(b[j].0 as usize) && b[j].1 % 2 == 1 && odd_left % 2 == 1 {
                    neg = !neg;
                }
                out.push(b[j]);
                j += 1;
            } else {
                let g = a[i].0;
                if sig.is_odd(g as usize) {
                    return None;
                }
                out.push((g, a[i].1 + b[j].1));
                i += 1;
                j += 1;
            }
        }
        Some((Monomial { factors: out }, neg))
    }

    /// Normal form of an arbitrary ordered word of factors, with its Koszul
    /// sign. Returns `None` if the word vanishes.
    pub fn normalize(word: &[(usize, u32)], sig: &Signature) -> Option<(Monomial, bool)> {
        let word: Vec<(usize, u32)> = word.iter().copied().filter(|f| f.1 > 0).collect();
        let odd = |f: &(usize, u32)| sig.is_odd(f.0) && f.1 % 2 == 1;
        let mut neg = false;
        for x in 0..word.len() {
            if sig.is_odd(word[x].0) && word[x].1 > 1 {
                return None;
            }
            for y in x + 1..word.len() {
                if word[x].0 > word[y].0 && odd(&word[x]) && odd(&word[y]) {
                    neg = !neg;
                }
            }
        }
        let mut sorted = word;
        sorted.sort_by_key(|f| f.0);
        let mut out: Vec<(u32, u32)> = Vec::with_capacity(sorted.len());
        for (g, e) in sorted {
            match out.last_mut() {
                Some(last) if last.0 as usize == g => {
                    if sig.is_odd(g) {
                        return None;
                    }
                    last.1 += e;
                }
                _ => out.push((g as u32, e)),
            }
        }
        Some((Monomial { factors: out }, neg))
    }

    fn word(&self) -> impl Iterator<Item = u32> + '_ {
        self.factors
            .iter()
            .flat_map(|&(i, e)| std::iter::repeat_n(i, e as usize))
    }
}

impl Ord for Monomial {
    /// Lexicographic order on the expanded words in canonical generator order.
    fn cmp(&self, other: &Self) -> Ordering {
        self.word().cmp(other.word())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
