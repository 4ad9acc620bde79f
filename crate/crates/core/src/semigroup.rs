//! Numerical semigroups stored as the Apéry set of their multiplicity.
//!
//! A numerical semigroup `S` with multiplicity `m` is determined by the table
//! `w(0), …, w(m-1)` where `w(i)` is the least element of `S` congruent to `i`
//! modulo `m`. Membership, the Frobenius number, the genus, the minimal
//! generators and the pseudo-Frobenius numbers all fall out of this table
//! without ever materialising the set itself.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use crate::error::{Error, Result};

/// Largest Frobenius number (and multiplicity) accepted by the validating
/// constructors.
pub const MAX_FROBENIUS: i64 = 1 << 20;

/// Generators above this bound are rejected before any arithmetic happens.
const MAX_GENERATOR: i64 = 1 << 31;

/// A numerical semigroup in canonical form.
///
/// Two values are equal exactly when they describe the same subset of ℕ.
/// The Frobenius number and genus are cached at construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NumericalSemigroup {
    multiplicity: i64,
    apery: Vec<i64>,
    frobenius: i64,
    genus: i64,
}

/// The numeric invariants of a semigroup in one record.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Invariants {
    pub frobenius: i64,
    pub genus: i64,
    pub multiplicity: i64,
    /// `None` for ℕ, which has no ratio.
    pub ratio: Option<i64>,
    pub embedding_dimension: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub symmetric: bool,
    pub pseudo_symmetric: bool,
    pub irreducible: bool,
    /// Maximal embedding dimension: as many minimal generators as the multiplicity.
    pub med: bool,
}

/// Shortest-path distances over the residues modulo `modulus` using the given
/// step lengths: entry `i` is the least sum of steps congruent to `i`, or
/// `None` when the residue is unreachable.
pub(crate) fn residue_distances(modulus: i64, steps: &[i64]) -> Vec<Option<i64>> {
    let n = modulus as usize;
    let mut dist: Vec<Option<i64>> = vec![None; n];
    let steps: Vec<i64> = steps.iter().copied().filter(|s| s % modulus != 0).collect();
    dist[0] = Some(0);
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0i64, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if dist[r] != Some(d) {
            continue;
        }
        for &s in &steps {
            let next = ((r as i64 + s) % modulus) as usize;
            let nd = d + s;
            if dist[next].is_none_or(|cur| nd < cur) {
                dist[next] = Some(nd);
                heap.push(Reverse((nd, next)));
            }
        }
    }
    dist
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.abs()
}

impl NumericalSemigroup {
    /// ℕ itself: multiplicity 1, Frobenius number −1, genus 0.
    pub fn naturals() -> Self {
        NumericalSemigroup {
            multiplicity: 1,
            apery: vec![0],
            frobenius: -1,
            genus: 0,
        }
    }

    /// Builds a value from a table already known to satisfy the invariants.
    pub(crate) fn from_table_unchecked(multiplicity: i64, apery: Vec<i64>) -> Self {
        let frobenius = apery.iter().copied().max().unwrap_or(0) - multiplicity;
        let genus = apery
            .iter()
            .enumerate()
            .map(|(i, &w)| (w - i as i64) / multiplicity)
            .sum();
        let s = NumericalSemigroup {
            multiplicity,
            apery,
            frobenius,
            genus,
        };
        debug_assert!(s.check_table().is_ok(), "{:?}", s.check_table());
        s
    }

    /// Builds a semigroup from its multiplicity and Apéry table, rejecting any
    /// table that does not describe a numerical semigroup of that multiplicity.
    pub fn from_apery_table(multiplicity: i64, apery: Vec<i64>) -> Result<Self> {
        if !(1..=MAX_FROBENIUS + 1).contains(&multiplicity) {
            return Err(Error::usage(format!(
                "multiplicity {multiplicity} outside 1..={}",
                MAX_FROBENIUS + 1
            )));
        }
        if apery.len() as i64 != multiplicity {
            return Err(Error::domain(format!(
                "Apéry table has {} entries, expected {multiplicity}",
                apery.len()
            )));
        }
        let probe = NumericalSemigroup {
            multiplicity,
            apery,
            frobenius: 0,
            genus: 0,
        };
        probe.check_table()?;
        let s = Self::from_table_unchecked(multiplicity, probe.apery);
        if s.frobenius > MAX_FROBENIUS {
            return Err(Error::usage(format!(
                "Frobenius number {} exceeds the supported bound {MAX_FROBENIUS}",
                s.frobenius
            )));
        }
        Ok(s)
    }

    fn check_table(&self) -> Result<()> {
        let m = self.multiplicity;
        let w = &self.apery;
        if w.first() != Some(&0) {
            return Err(Error::domain("Apéry table must start with 0"));
        }
        for (i, &wi) in w.iter().enumerate().skip(1) {
            if wi.rem_euclid(m) != i as i64 {
                return Err(Error::domain(format!(
                    "Apéry entry {wi} is not congruent to {i} mod {m}"
                )));
            }
            if wi <= m {
                return Err(Error::domain(format!(
                    "Apéry entry {wi} is below the multiplicity {m}"
                )));
            }
        }
        let n = w.len();
        for i in 1..n {
            for j in i..n {
                if w[(i + j) % n] > w[i] + w[j] {
                    return Err(Error::domain(format!(
                        "Apéry table is not additively closed: {} + {} < {}",
                        w[i],
                        w[j],
                        w[(i + j) % n]
                    )));
                }
            }
        }
        Ok(())
    }

    /// The semigroup generated by `gens`, which must be positive with gcd 1.
    pub fn from_generators(gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::usage("empty generator list"));
        }
        if let Some(&bad) = gens.iter().find(|&&g| g <= 0 || g > MAX_GENERATOR) {
            return Err(Error::usage(format!(
                "generator {bad} outside 1..={MAX_GENERATOR}"
            )));
        }
        let g = gens.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(Error::domain(format!(
                "not a numerical semigroup: generators have gcd {g}"
            )));
        }
        let m = *gens.iter().min().expect("nonempty");
        if m == 1 {
            return Ok(Self::naturals());
        }
        if m > MAX_FROBENIUS + 1 {
            return Err(Error::usage(format!(
                "multiplicity {m} exceeds the supported bound"
            )));
        }
        let table: Vec<i64> = residue_distances(m, gens)
            .into_iter()
            .map(|d| d.expect("gcd 1 reaches every residue"))
            .collect();
        let s = Self::from_table_unchecked(m, table);
        if s.frobenius > MAX_FROBENIUS {
            return Err(Error::usage(format!(
                "Frobenius number {} exceeds the supported bound {MAX_FROBENIUS}",
                s.frobenius
            )));
        }
        Ok(s)
    }

    /// `⟨m⟩ ∪ {F+1, →}`, the least semigroup with Frobenius number `F` and
    /// multiplicity `m`.
    ///
    /// Requires `m < F` with `m ∤ F`, or the degenerate `F = m − 1` which
    /// yields `{0, m, →}`.
    pub fn delta(frobenius: i64, multiplicity: i64) -> Result<Self> {
        let (f, m) = (frobenius, multiplicity);
        if f < 1 || m < 1 {
            return Err(Error::usage(format!(
                "Frobenius number and multiplicity must be positive (got F={f}, m={m})"
            )));
        }
        if f > MAX_FROBENIUS {
            return Err(Error::usage(format!(
                "Frobenius number {f} exceeds the supported bound {MAX_FROBENIUS}"
            )));
        }
        let degenerate = f == m - 1;
        if !degenerate {
            if m > f {
                return Err(Error::usage(format!(
                    "multiplicity {m} must be below the Frobenius number {f}"
                )));
            }
            if f % m == 0 {
                return Err(Error::usage(format!("m divides F (m={m}, F={f})")));
            }
        }
        let table = (0..m)
            .map(|i| {
                if i == 0 {
                    0
                } else {
                    f + 1 + (i - (f + 1)).rem_euclid(m)
                }
            })
            .collect();
        Ok(Self::from_table_unchecked(m, table))
    }

    pub fn multiplicity(&self) -> i64 {
        self.multiplicity
    }

    /// Largest gap; −1 for ℕ.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// Number of gaps.
    pub fn genus(&self) -> i64 {
        self.genus
    }

    /// The stored Apéry table of the multiplicity, indexed by residue.
    pub fn apery_table(&self) -> &[i64] {
        &self.apery
    }

    pub fn is_naturals(&self) -> bool {
        self.multiplicity == 1
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= 0 && x >= self.apery[x.rem_euclid(self.multiplicity) as usize]
    }

    /// `Ap(S, n)` indexed by residue modulo `n`.
    pub fn apery_list(&self, n: i64) -> Result<Vec<i64>> {
        if n == 0 || !self.contains(n) {
            return Err(Error::domain(format!(
                "{n} is not a nonzero element of {self}"
            )));
        }
        if n == self.multiplicity {
            return Ok(self.apery.clone());
        }
        if n > MAX_FROBENIUS + self.multiplicity {
            return Err(Error::usage(format!("Apéry modulus {n} is too large")));
        }
        Ok((0..n)
            .map(|i| {
                let mut x = i;
                while !self.contains(x) {
                    x += n;
                }
                x
            })
            .collect())
    }

    /// `Ap(S, n)` as a sorted set.
    pub fn apery(&self, n: i64) -> Result<Vec<i64>> {
        let mut list = self.apery_list(n)?;
        list.sort_unstable();
        Ok(list)
    }

    fn require_proper(&self, what: &str) -> Result<()> {
        if self.is_naturals() {
            Err(Error::domain(format!("{what} is undefined for ℕ")))
        } else {
            Ok(())
        }
    }

    /// Least element not divisible by the multiplicity.
    pub fn ratio(&self) -> Result<i64> {
        self.require_proper("the ratio")?;
        Ok(*self.apery[1..].iter().min().expect("m > 1"))
    }

    /// The unique minimal system of generators, ascending.
    ///
    /// A nonzero Apéry element is a minimal generator unless it is the sum of
    /// two nonzero Apéry elements; the multiplicity always is one.
    pub fn minimal_generators(&self) -> Vec<i64> {
        if self.is_naturals() {
            return vec![1];
        }
        let w = &self.apery;
        let n = w.len();
        let mut decomposable = vec![false; n];
        for i in 1..n {
            for j in i..n {
                let k = (i + j) % n;
                if k != 0 && w[i] + w[j] == w[k] {
                    decomposable[k] = true;
                }
            }
        }
        let mut gens: Vec<i64> = std::iter::once(self.multiplicity)
            .chain((1..n).filter(|&k| !decomposable[k]).map(|k| w[k]))
            .collect();
        gens.sort_unstable();
        gens
    }

    pub fn embedding_dimension(&self) -> usize {
        self.minimal_generators().len()
    }

    pub fn invariants(&self) -> Invariants {
        Invariants {
            frobenius: self.frobenius,
            genus: self.genus,
            multiplicity: self.multiplicity,
            ratio: self.ratio().ok(),
            embedding_dimension: self.embedding_dimension(),
        }
    }

    /// Pseudo-Frobenius numbers, read off the Apéry elements that are maximal
    /// for the order `a ≤_S b ⇔ b − a ∈ S`.
    pub fn pseudo_frobenius(&self) -> Result<Vec<i64>> {
        self.require_proper("the pseudo-Frobenius set")?;
        let w = &self.apery;
        let n = w.len();
        let mut pf: Vec<i64> = (1..n)
            .filter(|&i| (1..n).all(|j| w[i] + w[j] != w[(i + j) % n]))
            .map(|i| w[i] - self.multiplicity)
            .collect();
        pf.sort_unstable();
        Ok(pf)
    }

    /// Gaps `x` such that `S ∪ {x}` is again a numerical semigroup, computed
    /// as the pseudo-Frobenius numbers whose double is not pseudo-Frobenius.
    pub fn special_gaps(&self) -> Result<Vec<i64>> {
        let pf = self.pseudo_frobenius()?;
        Ok(pf
            .iter()
            .copied()
            .filter(|&x| pf.binary_search(&(2 * x)).is_err())
            .collect())
    }

    /// `S ∪ {x}` for a special gap `x` above the multiplicity.
    ///
    /// Only the Apéry slot of `x`'s residue changes: it drops from `x + m` to `x`.
    pub fn adjoin(&self, x: i64) -> Result<Self> {
        let sg = self.special_gaps()?;
        if sg.binary_search(&x).is_err() {
            return Err(Error::domain(format!("{x} is not a special gap of {self}")));
        }
        if x < self.multiplicity {
            return Err(Error::Unsupported(format!(
                "adjoining {x} below the multiplicity {} would change the multiplicity",
                self.multiplicity
            )));
        }
        Ok(self.adjoin_unchecked(x))
    }

    /// `S ∪ {x}` for any special gap `x`, including one below the
    /// multiplicity. That case lowers the multiplicity, so the result is
    /// rebuilt from generators instead of patched in place.
    pub fn adjoin_any(&self, x: i64) -> Result<Self> {
        if x > self.multiplicity {
            return self.adjoin(x);
        }
        let sg = self.special_gaps()?;
        if sg.binary_search(&x).is_err() {
            return Err(Error::domain(format!("{x} is not a special gap of {self}")));
        }
        let mut gens = self.minimal_generators();
        gens.push(x);
        Self::from_generators(&gens)
    }

    pub(crate) fn adjoin_unchecked(&self, x: i64) -> Self {
        let m = self.multiplicity;
        debug_assert!(x > m);
        let mut apery = self.apery.clone();
        let slot = (x % m) as usize;
        debug_assert_eq!(apery[slot], x + m);
        apery[slot] = x;
        let frobenius = apery.iter().copied().max().expect("nonempty") - m;
        NumericalSemigroup {
            multiplicity: m,
            apery,
            frobenius,
            genus: self.genus - 1,
        }
    }

    /// `S \ {r(S)}`: the ratio's Apéry slot moves up to `r + m`.
    pub fn remove_ratio(&self) -> Result<Self> {
        let r = self.ratio()?;
        let m = self.multiplicity;
        let mut apery = self.apery.clone();
        let slot = (r % m) as usize;
        debug_assert_eq!(apery[slot], r);
        apery[slot] = r + m;
        let frobenius = self.frobenius.max(r);
        Ok(NumericalSemigroup {
            multiplicity: m,
            apery,
            frobenius,
            genus: self.genus + 1,
        })
    }

    /// `S ∩ T`.
    pub fn intersect(&self, other: &Self) -> Self {
        if self.is_naturals() {
            return other.clone();
        }
        if other.is_naturals() {
            return self.clone();
        }
        let both = |x: i64| self.contains(x) && other.contains(x);
        let bound = self.frobenius.max(other.frobenius) + 1;
        let m = (1..=bound)
            .find(|&x| both(x))
            .expect("everything above both Frobenius numbers is shared");
        let table = (0..m)
            .map(|i| {
                let mut x = i;
                while !both(x) {
                    x += m;
                }
                x
            })
            .collect();
        Self::from_table_unchecked(m, table)
    }

    pub fn classify(&self) -> Result<Classification> {
        self.require_proper("classification")?;
        let (f, g) = (self.frobenius, self.genus);
        let gens = self.minimal_generators();
        let med = gens.len() as i64 == self.multiplicity;
        if med {
            debug_assert_eq!(gens.last().copied().unwrap() - self.multiplicity, f);
        }
        Ok(Classification {
            symmetric: 2 * g == f + 1,
            pseudo_symmetric: 2 * g == f + 2,
            irreducible: g == (f + 2) / 2,
            med,
        })
    }

    /// Elements below the Frobenius number not divisible by the multiplicity.
    /// These are exactly the elements removed along the ratio chain.
    pub fn a_set(&self) -> Result<Vec<i64>> {
        self.require_proper("the A-set")?;
        let m = self.multiplicity;
        Ok((1..self.frobenius)
            .filter(|&x| x % m != 0 && self.contains(x))
            .collect())
    }

    /// Elements up to and including `F + 1`.
    pub fn small_elements(&self) -> Vec<i64> {
        (0..=self.frobenius + 1)
            .filter(|&x| self.contains(x))
            .collect()
    }

    pub fn gaps(&self) -> Vec<i64> {
        (1..=self.frobenius)
            .filter(|&x| !self.contains(x))
            .collect()
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        let bound = self.frobenius.max(other.frobenius) + 1;
        (0..=bound).all(|x| !self.contains(x) || other.contains(x))
    }

    /// Elements of `self` missing from `base`, ascending. Finite whenever
    /// `base` is a numerical semigroup.
    pub fn elements_not_in(&self, base: &Self) -> Vec<i64> {
        (0..=base.frobenius)
            .filter(|&x| self.contains(x) && !base.contains(x))
            .collect()
    }

    /// `⟨4,9,10,11⟩`
    pub fn generator_notation(&self) -> String {
        let gens: Vec<String> = self
            .minimal_generators()
            .iter()
            .map(i64::to_string)
            .collect();
        format!("⟨{}⟩", gens.join(","))
    }

    /// `{0,4,8,→}`
    pub fn set_notation(&self) -> String {
        let elems: Vec<String> = self.small_elements().iter().map(i64::to_string).collect();
        format!("{{{},→}}", elems.join(","))
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.generator_notation(), self.set_notation())
    }
}
