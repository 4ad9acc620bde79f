//! Ratio-covarieties generated by finitely many semigroups of one multiplicity.
//!
//! With `F` the largest Frobenius number in the family, every generator is
//! walked down to `Δ(F, m)` by repeated ratio removal. The generated
//! covariety is the set of all intersections `⋂_{b∈B} T_b` with `B` a
//! nonempty set of generator indices and each `T_b` taken from the chain of
//! generator `b`.

use std::collections::{HashMap, HashSet};

use crate::covariety::{CovarietyTree, EnumerationOptions};
use crate::error::{Error, Result};
use crate::par;
use crate::semigroup::NumericalSemigroup;

/// Largest family accepted by [`generated_covariety`]; the intersection
/// formula ranges over every nonempty subset of the family.
pub const MAX_FAMILY: usize = 16;

/// The chain `S = S⁰ ⊋ S¹ ⊋ … ⊋ S^P = Δ(F, m)` obtained by removing ratios.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaChain {
    source: NumericalSemigroup,
    target: NumericalSemigroup,
    chain: Vec<NumericalSemigroup>,
}

impl OmegaChain {
    pub fn source(&self) -> &NumericalSemigroup {
        &self.source
    }

    /// `Δ(F, m)`, the last member.
    pub fn target(&self) -> &NumericalSemigroup {
        &self.target
    }

    pub fn members(&self) -> &[NumericalSemigroup] {
        &self.chain
    }

    /// Number of removals, i.e. the index of the first member equal to the target.
    pub fn steps(&self) -> usize {
        self.chain.len() - 1
    }

    /// Elements removed from the source, in removal order.
    pub fn removed(&self) -> Vec<i64> {
        self.chain
            .windows(2)
            .map(|w| w[0].ratio().expect("non-terminal members are not ℕ"))
            .collect()
    }
}

/// The ratio-removal chain from `s` down to `Δ(F, m)`.
///
/// When `F(s) < F` the chain passes through semigroups whose Frobenius number
/// grows until it reaches `F`.
pub fn omega_chain(
    s: &NumericalSemigroup,
    frobenius: i64,
    multiplicity: i64,
) -> Result<OmegaChain> {
    let (f, m) = (frobenius, multiplicity);
    if s.multiplicity() != m {
        return Err(Error::domain(format!(
            "{s} has multiplicity {}, expected {m}",
            s.multiplicity()
        )));
    }
    if s.frobenius() > f {
        return Err(Error::domain(format!(
            "{s} has Frobenius number {} above {f}",
            s.frobenius()
        )));
    }
    let target = NumericalSemigroup::delta(f, m).map_err(|e| Error::domain(e.to_string()))?;
    let steps = target.genus() - s.genus();
    let mut chain = Vec::with_capacity(steps as usize + 1);
    chain.push(s.clone());
    while *chain.last().expect("nonempty") != target {
        let next = chain.last().expect("nonempty").remove_ratio()?;
        chain.push(next);
        debug_assert!(chain.len() as i64 <= steps + 1);
    }
    Ok(OmegaChain {
        source: s.clone(),
        target,
        chain,
    })
}

/// Common multiplicity and largest Frobenius number of a family, validated.
fn family_parameters(family: &[NumericalSemigroup]) -> Result<(i64, i64)> {
    let first = family
        .first()
        .ok_or_else(|| Error::usage("the generating family is empty"))?;
    if family.len() > MAX_FAMILY {
        return Err(Error::usage(format!(
            "at most {MAX_FAMILY} generating semigroups are supported (got {})",
            family.len()
        )));
    }
    let m = first.multiplicity();
    if let Some(odd) = family.iter().find(|s| s.multiplicity() != m) {
        return Err(Error::domain(format!(
            "mixed multiplicities: {first} has {m} but {odd} has {}",
            odd.multiplicity()
        )));
    }
    if m == 1 {
        return Err(Error::domain("ℕ does not generate a ratio-covariety"));
    }
    let f = family
        .iter()
        .map(NumericalSemigroup::frobenius)
        .max()
        .expect("nonempty");
    if f % m == 0 {
        return Err(Error::domain(format!("m divides F (m={m}, F={f})")));
    }
    Ok((f, m))
}

/// The least ratio-covariety with minimum `Δ(F, m)` containing every member
/// of `family`, as a tree.
///
/// Subsets `B` are processed by size; the intersections for `B` extend those
/// already computed for `B` minus its largest index, and all subsets of one
/// size are independent of each other.
pub fn generated_covariety(
    family: &[NumericalSemigroup],
    opts: &EnumerationOptions,
) -> Result<CovarietyTree> {
    let (f, m) = family_parameters(family)?;
    let chains: Vec<OmegaChain> = family
        .iter()
        .map(|s| omega_chain(s, f, m))
        .collect::<Result<_>>()?;
    let k = chains.len();

    let mut by_subset: HashMap<u32, Vec<NumericalSemigroup>> = HashMap::new();
    for size in 1..=k as u32 {
        let masks: Vec<u32> = (1u32..1 << k).filter(|b| b.count_ones() == size).collect();
        let results = par::map(&masks, opts.parallel, |&mask| {
            let top = 31 - mask.leading_zeros() as usize;
            let rest = mask & !(1 << top);
            let chain = chains[top].members();
            if rest == 0 {
                return chain.to_vec();
            }
            let mut seen = HashSet::new();
            by_subset[&rest]
                .iter()
                .flat_map(|x| chain.iter().map(move |t| x.intersect(t)))
                .filter(|s| seen.insert(s.clone()))
                .collect()
        });
        by_subset.extend(masks.into_iter().zip(results));
    }

    let members: HashSet<NumericalSemigroup> = by_subset.into_values().flatten().collect();
    let delta = chains[0].target().clone();
    CovarietyTree::from_members(delta, members)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens(g: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(g).unwrap()
    }

    #[test]
    fn omega_chains_of_the_pair() {
        let s1 = gens(&[5, 7, 9]);
        let c1 = omega_chain(&s1, 13, 5).unwrap();
        assert_eq!(c1.removed(), vec![7, 9, 12]);
        assert_eq!(c1.steps(), 3);
        let s2 = gens(&[5, 6, 8]);
        let c2 = omega_chain(&s2, 13, 5).unwrap();
        assert_eq!(c2.removed(), vec![6, 8, 11, 12, 13]);
        assert_eq!(c2.members().len(), 6);
        assert_eq!(c2.target(), &NumericalSemigroup::delta(13, 5).unwrap());
    }

    #[test]
    fn omega_chain_errors() {
        let s = gens(&[5, 7, 9]);
        assert!(matches!(omega_chain(&s, 13, 4), Err(Error::Domain(_))));
        assert!(matches!(omega_chain(&s, 12, 5), Err(Error::Domain(_))));
        let d = NumericalSemigroup::delta(13, 5).unwrap();
        assert_eq!(
            omega_chain(&d, 13, 5).unwrap().members(),
            std::slice::from_ref(&d)
        );
    }

    #[test]
    fn generated_by_the_pair() {
        let s1 = gens(&[5, 7, 9]);
        let s2 = gens(&[5, 6, 8]);
        let tree =
            generated_covariety(&[s1.clone(), s2.clone()], &EnumerationOptions::default()).unwrap();
        let c1 = omega_chain(&s1, 13, 5).unwrap();
        let c2 = omega_chain(&s2, 13, 5).unwrap();
        let mut expected: HashSet<NumericalSemigroup> =
            c1.members().iter().chain(c2.members()).cloned().collect();
        for a in c1.members() {
            for b in c2.members() {
                expected.insert(a.intersect(b));
            }
        }
        let got: HashSet<NumericalSemigroup> = tree.iter().cloned().collect();
        assert_eq!(got, expected);
        tree.check_axioms().unwrap();
    }

    #[test]
    fn family_validation() {
        let opts = EnumerationOptions::default();
        assert!(generated_covariety(&[], &opts).unwrap_err().is_usage());
        let mixed = [gens(&[5, 7, 9]), gens(&[4, 5])];
        assert!(matches!(
            generated_covariety(&mixed, &opts),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            generated_covariety(&[NumericalSemigroup::naturals()], &opts),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn single_generator_gives_its_ratio_chain() {
        let s = gens(&[6, 8, 13, 15]);
        let tree =
            generated_covariety(std::slice::from_ref(&s), &EnumerationOptions::default()).unwrap();
        let chain = crate::covariety::ratio_chain(&s).unwrap();
        let got: HashSet<_> = tree.iter().cloned().collect();
        assert_eq!(got, chain.into_iter().collect());
    }
}
