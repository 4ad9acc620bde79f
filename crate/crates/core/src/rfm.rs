//! The family `R(F, m)` of all numerical semigroups with Frobenius number `F`
//! and multiplicity `m`.
//!
//! `R(F, m)` is a ratio-covariety with minimum `Δ(F, m) = ⟨m⟩ ∪ {F+1, →}`.
//! Inside it a candidate child `S ∪ {x}` is a member exactly when `x ≠ F`, so
//! enumeration never has to evaluate the membership predicate.

use std::ops::RangeInclusive;

use crate::covariety::{self, CovarietyDescriptor, CovarietyTree, EnumerationOptions};
use crate::error::{Error, Result};
use crate::semigroup::{residue_distances, NumericalSemigroup};

/// Parameters `(F, m)` with `m < F` and `m ∤ F`, plus the minimum `Δ(F, m)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RfmFamily {
    frobenius: i64,
    multiplicity: i64,
    delta: NumericalSemigroup,
}

impl RfmFamily {
    pub fn new(frobenius: i64, multiplicity: i64) -> Result<Self> {
        if multiplicity < 2 || multiplicity >= frobenius {
            return Err(Error::usage(format!(
                "R(F,m) needs 2 ≤ m < F (got F={frobenius}, m={multiplicity})"
            )));
        }
        let delta = NumericalSemigroup::delta(frobenius, multiplicity)?;
        Ok(RfmFamily {
            frobenius,
            multiplicity,
            delta,
        })
    }

    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn multiplicity(&self) -> i64 {
        self.multiplicity
    }

    /// The minimum `Δ(F, m)`.
    pub fn delta(&self) -> &NumericalSemigroup {
        &self.delta
    }

    pub fn genus_range(&self) -> RangeInclusive<i64> {
        genus_range(self.frobenius, self.multiplicity).expect("validated at construction")
    }

    fn require_member(&self, s: &NumericalSemigroup) -> Result<()> {
        if self.contains(s) {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "{s} is not in R({},{})",
                self.frobenius, self.multiplicity
            )))
        }
    }

    /// The whole family as its ratio tree rooted at `Δ(F, m)`.
    pub fn enumerate(&self, opts: &EnumerationOptions) -> Result<CovarietyTree> {
        covariety::enumerate_tree(self, opts)
    }

    /// The members of genus `g`.
    ///
    /// For `F > 2m` this walks the tree from the root level (genus
    /// `F − ⌊F/m⌋`) down to `g` and stops there; for `m < F < 2m` it filters
    /// the full enumeration.
    pub fn enumerate_genus(&self, genus: i64, opts: &EnumerationOptions) -> Result<GenusLevel> {
        let range = self.genus_range();
        if !range.contains(&genus) {
            return Ok(GenusLevel {
                genus,
                range,
                members: Vec::new(),
            });
        }
        let members = if self.frobenius > 2 * self.multiplicity {
            let mut level = vec![self.delta.clone()];
            let mut current = *range.end();
            while current > genus {
                level = covariety::expand_level(&level, self, opts)?
                    .into_iter()
                    .map(|e| e.child)
                    .collect();
                current -= 1;
            }
            level
        } else {
            let tree = self.enumerate(opts)?;
            let depth = (self.delta.genus() - genus) as usize;
            tree.level(depth).to_vec()
        };
        Ok(GenusLevel {
            genus,
            range,
            members,
        })
    }

    /// Whether `x` is an R-set: disjoint from `Δ(F, m)` and contained in some
    /// member. Decided arithmetically: every element lies strictly between
    /// `m` and `F` off the multiples of `m`, and `F ∉ ⟨{m} ∪ x⟩`.
    pub fn is_r_set(&self, x: &[i64]) -> bool {
        let (f, m) = (self.frobenius, self.multiplicity);
        if !x.iter().all(|&e| m < e && e < f && e % m != 0) {
            return false;
        }
        let mut steps = x.to_vec();
        steps.push(m);
        residue_distances(m, &steps)[(f % m) as usize].is_none_or(|d| d > f)
    }

    /// Validates `x` as an R-set of this family.
    pub fn r_set(&self, x: &[i64]) -> Result<RSet> {
        if !self.is_r_set(x) {
            return Err(Error::domain(format!(
                "{x:?} is not an R-set of R({},{})",
                self.frobenius, self.multiplicity
            )));
        }
        let mut elements = x.to_vec();
        elements.sort_unstable();
        elements.dedup();
        Ok(RSet {
            elements,
            family: self.clone(),
        })
    }

    /// The least member containing `x`: `⟨{m} ∪ x⟩ ∪ {F+1, →}`.
    pub fn closure(&self, x: &[i64]) -> Result<NumericalSemigroup> {
        Ok(self.r_set(x)?.closure())
    }

    /// The unique minimal R-system of generators of `s`: its minimal
    /// generators outside `Δ(F, m)`.
    pub fn minimal_generators(&self, s: &NumericalSemigroup) -> Result<RSet> {
        self.require_member(s)?;
        let elements = s
            .minimal_generators()
            .into_iter()
            .filter(|&g| !self.delta.contains(g))
            .collect();
        Ok(RSet {
            elements,
            family: self.clone(),
        })
    }

    pub fn rank(&self, s: &NumericalSemigroup) -> Result<usize> {
        Ok(self.minimal_generators(s)?.len())
    }
}

impl CovarietyDescriptor for RfmFamily {
    fn minimum(&self) -> &NumericalSemigroup {
        &self.delta
    }

    fn contains(&self, s: &NumericalSemigroup) -> bool {
        s.frobenius() == self.frobenius && s.multiplicity() == self.multiplicity
    }

    fn admits_child(
        &self,
        _parent: &NumericalSemigroup,
        x: i64,
        _child: &NumericalSemigroup,
    ) -> bool {
        x != self.frobenius
    }
}

/// Result of a fixed-genus query, carrying the genus spectrum so that an
/// empty answer can be explained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenusLevel {
    pub genus: i64,
    pub range: RangeInclusive<i64>,
    pub members: Vec<NumericalSemigroup>,
}

impl GenusLevel {
    pub fn in_range(&self) -> bool {
        self.range.contains(&self.genus)
    }

    pub fn diagnostic(&self) -> Option<String> {
        (!self.in_range()).then(|| {
            format!(
                "genus {} lies outside the attainable range {}..={}",
                self.genus,
                self.range.start(),
                self.range.end()
            )
        })
    }
}

/// A validated R-set of an `R(F, m)` family, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RSet {
    elements: Vec<i64>,
    family: RfmFamily,
}

impl RSet {
    pub fn elements(&self) -> &[i64] {
        &self.elements
    }

    pub fn family(&self) -> &RfmFamily {
        &self.family
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `⟨{m} ∪ X⟩ ∪ {F+1, →}`: Apéry entries are the shortest sums over
    /// `{m} ∪ X`, capped by the least element above `F` in each class.
    pub fn closure(&self) -> NumericalSemigroup {
        let (f, m) = (self.family.frobenius, self.family.multiplicity);
        let mut steps = self.elements.clone();
        steps.push(m);
        let table = residue_distances(m, &steps)
            .into_iter()
            .enumerate()
            .map(|(i, d)| {
                let tail = if i == 0 {
                    0
                } else {
                    f + 1 + (i as i64 - (f + 1)).rem_euclid(m)
                };
                d.map_or(tail, |d| d.min(tail))
            })
            .collect();
        NumericalSemigroup::from_table_unchecked(m, table)
    }
}

/// Exact genus spectrum of `R(F, m)`.
///
/// Accepts `F = m − 1` (a single semigroup `{0, m, →}`), `m < F < 2m`, and
/// `F > 2m` with `m ∤ F`.
pub fn genus_range(frobenius: i64, multiplicity: i64) -> Result<RangeInclusive<i64>> {
    let (f, m) = (frobenius, multiplicity);
    if m >= 2 && f == m - 1 {
        Ok(m - 1..=m - 1)
    } else if m >= 2 && m < f && f < 2 * m {
        Ok(m..=f - 1)
    } else if m >= 2 && f > 2 * m && f % m != 0 {
        Ok((f + 2) / 2..=f - f / m)
    } else {
        Err(Error::usage(format!(
            "no family R(F,m) for F={f}, m={m}: need F = m−1, m < F < 2m, or F > 2m with m ∤ F"
        )))
    }
}

/// The inclusion-maximal members of `R(F, m)`.
pub fn maximal_elements(
    frobenius: i64,
    multiplicity: i64,
    opts: &EnumerationOptions,
) -> Result<Vec<NumericalSemigroup>> {
    let (f, m) = (frobenius, multiplicity);
    let range = genus_range(f, m)?;
    if f == m - 1 {
        Ok(vec![NumericalSemigroup::delta(f, m)?])
    } else if f < 2 * m {
        // {0, m, →} \ {F}
        let table = (0..m)
            .map(|i| match i {
                0 => 0,
                i if i == f - m => f + m,
                i => m + i,
            })
            .collect();
        Ok(vec![NumericalSemigroup::from_apery_table(m, table)?])
    } else {
        let fam = RfmFamily::new(f, m)?;
        Ok(fam.enumerate_genus(*range.start(), opts)?.members)
    }
}

/// Whether `s` has maximal rank: `F > 2m` and rank `m − 2` in `R(F, m)`.
///
/// Decided from the minimal generators alone: either `e = m − 1` with every
/// generator below `F`, or `e = m` with exactly one generator above `F`.
pub fn is_mr(s: &NumericalSemigroup) -> Result<bool> {
    if s.is_naturals() {
        return Err(Error::domain("ℕ has no maximal-rank classification"));
    }
    let (f, m) = (s.frobenius(), s.multiplicity());
    if f <= 2 * m {
        return Ok(false);
    }
    let gens = s.minimal_generators();
    let e = gens.len() as i64;
    let above = gens.iter().filter(|&&g| g > f).count();
    let mr = (e == m - 1 && above == 0) || (e == m && above == 1);
    debug_assert_eq!(
        mr,
        RfmFamily::new(f, m).and_then(|fam| fam.rank(s)).ok() == Some((m - 2) as usize)
    );
    Ok(mr)
}

/// `⟨m, F−(m−1), …, F−1⟩ ∪ {F+1, →}`, a member of `R(F, m)` of rank `m − 2`.
pub fn mr_witness(frobenius: i64, multiplicity: i64) -> Result<NumericalSemigroup> {
    let (f, m) = (frobenius, multiplicity);
    if m < 2 || f <= 2 * m || f % m == 0 {
        return Err(Error::usage(format!(
            "maximal-rank witness needs F > 2m and m ∤ F (got F={f}, m={m})"
        )));
    }
    let fam = RfmFamily::new(f, m)?;
    let top: Vec<i64> = (f - m + 1..f).filter(|x| x % m != 0).collect();
    fam.closure(&top)
}
