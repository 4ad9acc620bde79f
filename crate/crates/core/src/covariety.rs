//! Generic ratio-covariety engine.
//!
//! A ratio-covariety is described by its minimum and a membership test. Its
//! members form a rooted tree in which the parent of `S` is `S \ {r(S)}`; the
//! children of `S` are the `S ∪ {x}` with `x` a special gap strictly between
//! the multiplicity and the ratio that are themselves members. The engine
//! grows that tree level by level from the minimum, level `k` holding the
//! members of genus `g(min) − k`.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::par;
use crate::semigroup::NumericalSemigroup;

/// Minimum plus membership predicate of a family of numerical semigroups.
///
/// The predicate may be called concurrently from several worker threads.
pub trait CovarietyDescriptor: Sync {
    fn minimum(&self) -> &NumericalSemigroup;

    fn contains(&self, s: &NumericalSemigroup) -> bool;

    /// Membership test for a candidate child `parent ∪ {x}`. Families with a
    /// cheaper arithmetic criterion override this; the default defers to
    /// [`contains`](Self::contains).
    fn admits_child(
        &self,
        parent: &NumericalSemigroup,
        x: i64,
        child: &NumericalSemigroup,
    ) -> bool {
        let _ = (parent, x);
        self.contains(child)
    }
}

/// A family given by an arbitrary closure.
pub struct PredicateDescriptor<P> {
    minimum: NumericalSemigroup,
    predicate: P,
}

impl<P> PredicateDescriptor<P>
where
    P: Fn(&NumericalSemigroup) -> bool + Sync,
{
    pub fn new(minimum: NumericalSemigroup, predicate: P) -> Self {
        PredicateDescriptor { minimum, predicate }
    }
}

impl<P> CovarietyDescriptor for PredicateDescriptor<P>
where
    P: Fn(&NumericalSemigroup) -> bool + Sync,
{
    fn minimum(&self) -> &NumericalSemigroup {
        &self.minimum
    }

    fn contains(&self, s: &NumericalSemigroup) -> bool {
        (self.predicate)(s)
    }
}

/// A family given by an explicit list of members.
#[derive(Debug, Clone)]
pub struct FiniteFamily {
    minimum: NumericalSemigroup,
    members: HashSet<NumericalSemigroup>,
}

impl FiniteFamily {
    /// The minimum is added to the member set if it is not already there.
    pub fn new(
        minimum: NumericalSemigroup,
        members: impl IntoIterator<Item = NumericalSemigroup>,
    ) -> Self {
        let mut members: HashSet<_> = members.into_iter().collect();
        members.insert(minimum.clone());
        FiniteFamily { minimum, members }
    }
}

impl CovarietyDescriptor for FiniteFamily {
    fn minimum(&self) -> &NumericalSemigroup {
        &self.minimum
    }

    fn contains(&self, s: &NumericalSemigroup) -> bool {
        self.members.contains(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Traversal {
    #[default]
    BreadthFirst,
    /// Collects members depth-first and sorts afterwards; the resulting tree
    /// is identical to the breadth-first one.
    DepthFirst,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EnumerationOptions {
    /// Expand each level on the rayon pool. Ignored without the `parallel`
    /// feature.
    pub parallel: bool,
    pub traversal: Traversal,
    /// Probe the ratio-removal axiom at every vertex during traversal.
    pub verify_axioms: bool,
}

impl EnumerationOptions {
    pub fn sequential() -> Self {
        Self::default()
    }

    pub fn parallel() -> Self {
        EnumerationOptions {
            parallel: true,
            ..Self::default()
        }
    }
}

/// Sort key inside a level: the elements a member adds to the minimum.
fn canonical_key(s: &NumericalSemigroup, minimum: &NumericalSemigroup) -> Vec<i64> {
    s.elements_not_in(minimum)
}

/// `(x, S ∪ {x})` for every special gap `m < x < r(S)`, ascending in `x`.
fn tree_candidates(s: &NumericalSemigroup) -> Vec<(i64, NumericalSemigroup)> {
    let Ok(ratio) = s.ratio() else {
        return Vec::new();
    };
    let m = s.multiplicity();
    s.special_gaps()
        .expect("not ℕ")
        .into_iter()
        .filter(|&x| m < x && x < ratio)
        .map(|x| (x, s.adjoin_unchecked(x)))
        .collect()
}

/// Local check of the ratio-removal axiom around `s`: any member of the form
/// `s ∪ {x}` with `x` above the ratio must lose `r(s)` and stay a member.
fn probe_ratio_axiom<R: CovarietyDescriptor + ?Sized>(s: &NumericalSemigroup, r: &R) -> Result<()> {
    let Ok(ratio) = s.ratio() else {
        return Ok(());
    };
    for x in s.special_gaps().expect("not ℕ") {
        if x <= ratio {
            continue;
        }
        let t = s.adjoin_unchecked(x);
        if r.contains(&t) {
            let shrunk = t.remove_ratio().expect("not ℕ");
            if !r.contains(&shrunk) {
                return Err(Error::Descriptor(format!(
                    "{t} is a member but removing its ratio gives {shrunk}, which is not"
                )));
            }
        }
    }
    Ok(())
}

/// The children of `s` in the tree of the family, ordered by the adjoined
/// element.
pub fn children<R: CovarietyDescriptor + ?Sized>(
    s: &NumericalSemigroup,
    r: &R,
) -> Result<Vec<NumericalSemigroup>> {
    if !r.contains(s) {
        return Err(Error::domain(format!("{s} is not a member of the family")));
    }
    if s.is_naturals() {
        return Err(Error::domain(
            "ℕ has no ratio, so its children are undefined",
        ));
    }
    Ok(tree_candidates(s)
        .into_iter()
        .filter(|(x, c)| r.admits_child(s, *x, c))
        .map(|(_, c)| c)
        .collect())
}

pub(crate) struct Expansion {
    /// Index of the parent within the expanded level.
    pub parent: usize,
    pub added: i64,
    pub child: NumericalSemigroup,
}

/// All children of one level, sorted canonically.
pub(crate) fn expand_level<R: CovarietyDescriptor + ?Sized>(
    level: &[NumericalSemigroup],
    r: &R,
    opts: &EnumerationOptions,
) -> Result<Vec<Expansion>> {
    let minimum = r.minimum();
    let per_vertex = par::try_map(level, opts.parallel, |s| {
        if opts.verify_axioms {
            probe_ratio_axiom(s, r)?;
        }
        Ok(tree_candidates(s)
            .into_iter()
            .filter(|(x, c)| r.admits_child(s, *x, c))
            .map(|(x, c)| (canonical_key(&c, minimum), x, c))
            .collect::<Vec<_>>())
    })?;
    let mut next: Vec<(Vec<i64>, Expansion)> = per_vertex
        .into_iter()
        .enumerate()
        .flat_map(|(parent, kids)| {
            kids.into_iter().map(move |(key, added, child)| {
                (
                    key,
                    Expansion {
                        parent,
                        added,
                        child,
                    },
                )
            })
        })
        .collect();
    next.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(next.into_iter().map(|(_, e)| e).collect())
}

/// Every member of the family, organised as its ratio tree.
pub fn enumerate_tree<R: CovarietyDescriptor + ?Sized>(
    r: &R,
    opts: &EnumerationOptions,
) -> Result<CovarietyTree> {
    let minimum = r.minimum().clone();
    if !r.contains(&minimum) {
        return Err(Error::Descriptor(format!(
            "the minimum {minimum} is not a member of its own family"
        )));
    }
    match opts.traversal {
        Traversal::BreadthFirst => breadth_first(minimum, r, opts),
        Traversal::DepthFirst => depth_first(minimum, r, opts),
    }
}

fn breadth_first<R: CovarietyDescriptor + ?Sized>(
    minimum: NumericalSemigroup,
    r: &R,
    opts: &EnumerationOptions,
) -> Result<CovarietyTree> {
    let mut vertices = vec![minimum];
    let mut parents = vec![None];
    let mut labels = vec![None];
    let mut level_starts = vec![0];
    let mut start = 0;
    loop {
        let next = expand_level(&vertices[start..], r, opts)?;
        if next.is_empty() {
            break;
        }
        let base = vertices.len();
        level_starts.push(base);
        for e in next {
            vertices.push(e.child);
            parents.push(Some(start + e.parent));
            labels.push(Some(e.added));
        }
        start = base;
    }
    Ok(CovarietyTree::assemble(
        vertices,
        parents,
        labels,
        level_starts,
    ))
}

fn depth_first<R: CovarietyDescriptor + ?Sized>(
    minimum: NumericalSemigroup,
    r: &R,
    opts: &EnumerationOptions,
) -> Result<CovarietyTree> {
    let mut members = Vec::new();
    let mut stack = vec![minimum.clone()];
    while let Some(s) = stack.pop() {
        if opts.verify_axioms {
            probe_ratio_axiom(&s, r)?;
        }
        for (x, c) in tree_candidates(&s) {
            if r.admits_child(&s, x, &c) {
                stack.push(c);
            }
        }
        members.push(s);
    }
    CovarietyTree::from_members(minimum, members)
}

/// The members of a ratio-covariety with their tree structure.
///
/// Vertices are stored level by level (level `k` = genus of the root minus
/// `k`) and, inside a level, by the ascending list of elements they add to
/// the root.
#[derive(Debug, Clone)]
pub struct CovarietyTree {
    vertices: Vec<NumericalSemigroup>,
    parents: Vec<Option<usize>>,
    labels: Vec<Option<i64>>,
    level_starts: Vec<usize>,
    index: HashMap<NumericalSemigroup, usize>,
}

impl PartialEq for CovarietyTree {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices
            && self.parents == other.parents
            && self.labels == other.labels
    }
}

impl Eq for CovarietyTree {}

impl CovarietyTree {
    fn assemble(
        vertices: Vec<NumericalSemigroup>,
        parents: Vec<Option<usize>>,
        labels: Vec<Option<i64>>,
        level_starts: Vec<usize>,
    ) -> Self {
        let index = vertices
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, v)| (v, i))
            .collect();
        CovarietyTree {
            vertices,
            parents,
            labels,
            level_starts,
            index,
        }
    }

    /// Builds the tree from an unordered member set. Fails if the minimum is
    /// missing, a member does not contain it, or some member's ratio removal
    /// falls outside the set.
    pub fn from_members(
        minimum: NumericalSemigroup,
        members: impl IntoIterator<Item = NumericalSemigroup>,
    ) -> Result<Self> {
        let set: HashSet<NumericalSemigroup> = members.into_iter().collect();
        if !set.contains(&minimum) {
            return Err(Error::Descriptor(format!(
                "the minimum {minimum} is not a member"
            )));
        }
        let mut keyed = Vec::with_capacity(set.len());
        for v in set {
            if !minimum.is_subset_of(&v) {
                return Err(Error::Descriptor(format!(
                    "{v} does not contain the minimum {minimum}"
                )));
            }
            let level = minimum.genus() - v.genus();
            keyed.push(((level, canonical_key(&v, &minimum)), v));
        }
        keyed.sort_by(|a, b| a.0.cmp(&b.0));

        let mut level_starts = Vec::new();
        for (i, ((level, _), _)) in keyed.iter().enumerate() {
            if level_starts.len() as i64 == *level {
                level_starts.push(i);
            }
        }
        let vertices: Vec<NumericalSemigroup> = keyed.into_iter().map(|(_, v)| v).collect();
        let index: HashMap<&NumericalSemigroup, usize> =
            vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let mut parents = Vec::with_capacity(vertices.len());
        let mut labels = Vec::with_capacity(vertices.len());
        for v in &vertices {
            if *v == minimum {
                parents.push(None);
                labels.push(None);
                continue;
            }
            let ratio = v.ratio().map_err(|e| Error::Descriptor(e.to_string()))?;
            let parent = v.remove_ratio().expect("ratio exists");
            let Some(&p) = index.get(&parent) else {
                return Err(Error::Descriptor(format!(
                    "{v} is a member but removing its ratio {ratio} gives {parent}, which is not"
                )));
            };
            parents.push(Some(p));
            labels.push(Some(ratio));
        }
        Ok(Self::assemble(vertices, parents, labels, level_starts))
    }

    pub fn root(&self) -> &NumericalSemigroup {
        &self.vertices[0]
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    /// Always false: a tree holds at least its root.
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[NumericalSemigroup] {
        &self.vertices
    }

    pub fn iter(&self) -> std::slice::Iter<'_, NumericalSemigroup> {
        self.vertices.iter()
    }

    pub fn parent(&self, i: usize) -> Option<usize> {
        self.parents[i]
    }

    /// The element adjoined to the parent to obtain vertex `i`; this is also
    /// the ratio of vertex `i`.
    pub fn label(&self, i: usize) -> Option<i64> {
        self.labels[i]
    }

    pub fn children_of(&self, i: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&j| self.parents[j] == Some(i))
            .collect()
    }

    pub fn position(&self, s: &NumericalSemigroup) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn contains(&self, s: &NumericalSemigroup) -> bool {
        self.index.contains_key(s)
    }

    /// Number of levels.
    pub fn depth(&self) -> usize {
        self.level_starts.len()
    }

    pub fn level(&self, k: usize) -> &[NumericalSemigroup] {
        let start = self.level_starts[k];
        let end = self.level_starts.get(k + 1).copied().unwrap_or(self.len());
        &self.vertices[start..end]
    }

    pub fn levels(&self) -> impl Iterator<Item = &[NumericalSemigroup]> {
        (0..self.depth()).map(|k| self.level(k))
    }

    /// Graphviz rendering: one node per member labelled by its minimal
    /// generators, one edge from each member to its parent labelled by the
    /// element that separates them.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph covariety {\n  rankdir=BT;\n  node [shape=box];\n");
        for (i, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(out, "  n{i} [label=\"{}\"];", v.generator_notation());
        }
        for (i, p) in self.parents.iter().enumerate() {
            if let (Some(p), Some(x)) = (p, self.labels[i]) {
                let _ = writeln!(out, "  n{i} -> n{p} [label=\"{x}\"];");
            }
        }
        out.push_str("}\n");
        out
    }

    /// Exhaustive check of the three ratio-covariety axioms on the vertex set.
    /// Quadratic in the number of members.
    pub fn check_axioms(&self) -> Result<()> {
        let root = self.root();
        for v in &self.vertices {
            if !root.is_subset_of(v) {
                return Err(Error::Descriptor(format!("{root} is not below {v}")));
            }
        }
        for (i, a) in self.vertices.iter().enumerate() {
            for b in &self.vertices[i + 1..] {
                let c = a.intersect(b);
                if !self.contains(&c) {
                    return Err(Error::Descriptor(format!(
                        "{a} ∩ {b} = {c} is not a member"
                    )));
                }
            }
            if i > 0 {
                let shrunk = a
                    .remove_ratio()
                    .map_err(|e| Error::Descriptor(e.to_string()))?;
                if !self.contains(&shrunk) {
                    return Err(Error::Descriptor(format!(
                        "removing the ratio of {a} gives {shrunk}, which is not a member"
                    )));
                }
            }
        }
        Ok(())
    }

    /// The least member containing `x`: the intersection of all members that
    /// contain it. `x` must avoid the root and lie in some member.
    pub fn closure(&self, x: &[i64]) -> Result<NumericalSemigroup> {
        if let Some(bad) = x.iter().find(|&&e| self.root().contains(e)) {
            return Err(Error::domain(format!(
                "not an R-set: {bad} lies in the minimum"
            )));
        }
        self.vertices
            .iter()
            .filter(|v| x.iter().all(|&e| v.contains(e)))
            .cloned()
            .reduce(|a, b| a.intersect(&b))
            .ok_or_else(|| Error::domain("not an R-set: no member contains it"))
    }

    /// All inclusion-minimal sets `X` with `closure(X) = s`, ordered by size
    /// then lexicographically.
    pub fn minimal_systems(&self, s: &NumericalSemigroup) -> Result<Vec<Vec<i64>>> {
        if !self.contains(s) {
            return Err(Error::domain(format!("{s} is not a member")));
        }
        let universe = s.elements_not_in(self.root());
        if universe.len() > 20 {
            return Err(Error::usage(format!(
                "{} candidate elements is too many for subset search",
                universe.len()
            )));
        }
        let mut masks: Vec<u32> = (0..1u32 << universe.len()).collect();
        masks.sort_by_key(|m| (m.count_ones(), m.reverse_bits()));
        let subset = |mask: u32| -> Vec<i64> {
            universe
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &e)| e)
                .collect()
        };
        let mut found: Vec<u32> = Vec::new();
        for mask in masks {
            if found.iter().any(|&f| f & !mask == 0) {
                continue;
            }
            if self.closure(&subset(mask))? == *s {
                found.push(mask);
            }
        }
        let mut systems: Vec<Vec<i64>> = found.into_iter().map(subset).collect();
        systems.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(systems)
    }

    /// Least size of a generating set for `s` within the family.
    pub fn rank(&self, s: &NumericalSemigroup) -> Result<usize> {
        Ok(self
            .minimal_systems(s)?
            .iter()
            .map(Vec::len)
            .min()
            .unwrap_or(0))
    }
}

impl<'a> IntoIterator for &'a CovarietyTree {
    type Item = &'a NumericalSemigroup;
    type IntoIter = std::slice::Iter<'a, NumericalSemigroup>;

    fn into_iter(self) -> Self::IntoIter {
        self.vertices.iter()
    }
}

/// `S = S₀ ⊋ S₁ ⊋ … ⊋ Δ(F(S), m(S))`, each step removing the current ratio.
/// The chain has one more member than `S` has elements in its A-set.
pub fn ratio_chain(s: &NumericalSemigroup) -> Result<Vec<NumericalSemigroup>> {
    let steps = s.a_set()?.len();
    let mut chain = Vec::with_capacity(steps + 1);
    chain.push(s.clone());
    for _ in 0..steps {
        let next = chain.last().expect("nonempty").remove_ratio()?;
        chain.push(next);
    }
    debug_assert_eq!(
        chain.last(),
        NumericalSemigroup::delta(s.frobenius(), s.multiplicity())
            .ok()
            .as_ref()
    );
    Ok(chain)
}
