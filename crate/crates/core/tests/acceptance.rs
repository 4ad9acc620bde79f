//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the report is always printed.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use nsgp::oracle::{oracle_closure_among, oracle_rfm};
use nsgp::{
    enumerate_tree, generated_covariety, genus_range, is_mr, maximal_elements, mr_witness,
    omega_chain, ratio_chain, EnumerationOptions, NumericalSemigroup as NS, PredicateDescriptor,
    RfmFamily,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Verdict = Result<(), String>;

fn ensure(cond: bool, detail: impl FnOnce() -> String) -> Verdict {
    if cond {
        Ok(())
    } else {
        Err(detail())
    }
}

fn ok<T>(r: nsgp::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn gens(g: &[i64]) -> NS {
    NS::from_generators(g).expect("valid generators")
}

fn with(base: &NS, added: &[i64]) -> NS {
    added
        .iter()
        .fold(base.clone(), |s, &x| s.adjoin(x).expect("special gap"))
}

fn set<'a>(it: impl IntoIterator<Item = &'a NS>) -> HashSet<NS> {
    it.into_iter().cloned().collect()
}

fn opts() -> EnumerationOptions {
    EnumerationOptions::default()
}

/// `(F, m)` with `2 ≤ m < F ≤ max_f` and `m ∤ F`.
fn sweep(max_f: i64) -> Vec<(i64, i64)> {
    (3..=max_f)
        .flat_map(|f| (2..f).filter(move |m| f % m != 0).map(move |m| (f, m)))
        .collect()
}

struct Suite {
    failed: usize,
}

impl Suite {
    /// Runs `check` once, or keeps the fastest of five runs when the limit is
    /// below a millisecond so a single scheduler hiccup does not dominate.
    fn run(
        &mut self,
        id: u32,
        name: &str,
        limit: Option<Duration>,
        mut check: impl FnMut() -> Verdict,
    ) {
        let reps = match limit {
            Some(l) if l <= Duration::from_millis(1) => 5,
            _ => 1,
        };
        let mut best = Duration::MAX;
        let mut verdict = Ok(());
        for _ in 0..reps {
            let start = Instant::now();
            verdict = check();
            best = best.min(start.elapsed());
            if verdict.is_err() {
                break;
            }
        }
        if let (Ok(()), Some(l)) = (&verdict, limit) {
            if best > l {
                verdict = Err(format!("took {best:?}, limit {l:?}"));
            }
        }
        let timing = match limit {
            Some(l) => format!("{best:.2?} / limit {l:?}"),
            None => format!("{best:.2?}"),
        };
        match verdict {
            Ok(()) => println!("PASS {id:>2} {name} ({timing})"),
            Err(e) => {
                self.failed += 1;
                println!("FAIL {id:>2} {name}: {e}");
            }
        }
    }
}

fn c1() -> Verdict {
    let s = gens(&[3, 5, 7]);
    let pf = ok(s.pseudo_frobenius())?;
    let sg = ok(s.special_gaps())?;
    ensure(pf == [2, 4] && sg == [4], || format!("PF={pf:?} SG={sg:?}"))
}

fn c2() -> Verdict {
    let s = ok(NS::delta(6, 7))?;
    let ap = ok(s.apery(7))?;
    let pf = ok(s.pseudo_frobenius())?;
    let sg = ok(s.special_gaps())?;
    let t = ok(s.adjoin_any(5))?;
    let ap_t = ok(t.apery(7))?;
    ensure(
        ap == [0, 8, 9, 10, 11, 12, 13]
            && pf == [1, 2, 3, 4, 5, 6]
            && sg == [4, 5, 6]
            && ap_t == [0, 5, 8, 9, 10, 11, 13],
        || format!("Ap={ap:?} PF={pf:?} SG={sg:?} Ap(T,7)={ap_t:?}"),
    )
}

fn c3() -> Verdict {
    let fam = ok(RfmFamily::new(7, 4))?;
    let tree = ok(fam.enumerate(&opts()))?;
    let d = fam.delta();
    let expected = [with(d, &[]), with(d, &[5]), with(d, &[6]), with(d, &[6, 5])];
    ensure(set(tree.iter()) == set(&expected), || {
        format!("{} members", tree.len())
    })?;
    let tables: Vec<Vec<i64>> = expected[1..].iter().map(|s| s.apery(4).unwrap()).collect();
    ensure(
        tables == [vec![0, 5, 10, 11], vec![0, 6, 9, 11], vec![0, 5, 6, 11]],
        || format!("Apéry tables {tables:?}"),
    )
}

fn c4() -> Verdict {
    let fam = ok(RfmFamily::new(12, 5))?;
    let d = fam.delta();
    let g8 = ok(fam.enumerate_genus(8, &opts()))?.members;
    let g9 = ok(fam.enumerate_genus(9, &opts()))?.members;
    ensure(
        set(&g8) == set(&[with(d, &[9, 8]), with(d, &[11, 8]), with(d, &[11, 9])]),
        || format!("genus 8: {g8:?}"),
    )?;
    ensure(
        set(&g9) == set(&[with(d, &[8]), with(d, &[9]), with(d, &[11])]),
        || format!("genus 9: {g9:?}"),
    )
}

fn c5() -> Verdict {
    for (f, m) in sweep(18) {
        let tree = ok(ok(RfmFamily::new(f, m))?.enumerate(&opts()))?;
        let oracle = ok(oracle_rfm(f, m))?;
        ensure(set(tree.iter()) == set(&oracle), || {
            format!(
                "R({f},{m}): engine {} vs oracle {}",
                tree.len(),
                oracle.len()
            )
        })?;
    }
    Ok(())
}

fn c6() -> Verdict {
    for (f, m) in sweep(18) {
        let tree = ok(ok(RfmFamily::new(f, m))?.enumerate(&opts()))?;
        for i in 1..tree.len() {
            let child = &tree.vertices()[i];
            let parent = &tree.vertices()[tree.parent(i).ok_or("orphan vertex")?];
            ensure(ok(child.remove_ratio())? == *parent, || {
                format!("R({f},{m}): parent of {child} is {parent}")
            })?;
            ensure(child.genus() == parent.genus() - 1, || {
                format!("R({f},{m}): genus step at {child}")
            })?;
        }
    }
    Ok(())
}

fn c7() -> Verdict {
    for (f, m) in sweep(18) {
        let tree = ok(ok(RfmFamily::new(f, m))?.enumerate(&opts()))?;
        let mut genera: Vec<i64> = tree.iter().map(NS::genus).collect();
        genera.sort_unstable();
        genera.dedup();
        let range: Vec<i64> = ok(genus_range(f, m))?.collect();
        ensure(genera == range, || {
            format!("R({f},{m}): genera {genera:?}, range {range:?}")
        })?;
        if f < 2 * m {
            ensure(tree.len() == 1 << (f - m - 1), || {
                format!(
                    "R({f},{m}): {} members, expected 2^{}",
                    tree.len(),
                    f - m - 1
                )
            })?;
        }
    }
    Ok(())
}

fn c8() -> Verdict {
    for (f, m) in sweep(18) {
        let tree = ok(ok(RfmFamily::new(f, m))?.enumerate(&opts()))?;
        let all = tree.vertices();
        let by_inclusion: HashSet<NS> = all
            .iter()
            .filter(|s| !all.iter().any(|t| t != *s && s.is_subset_of(t)))
            .cloned()
            .collect();
        let max = ok(maximal_elements(f, m, &opts()))?;
        ensure(set(&max) == by_inclusion, || {
            format!("R({f},{m}): maximal elements differ")
        })?;
        let target = if f < 2 * m { m } else { (f + 2) / 2 };
        let by_genus: HashSet<NS> = all
            .iter()
            .filter(|s| s.genus() == target)
            .cloned()
            .collect();
        ensure(by_genus == by_inclusion, || {
            format!("R({f},{m}): genus {target} does not characterize the maximal elements")
        })?;
    }
    Ok(())
}

fn c9() -> Verdict {
    for (f, m) in sweep(18) {
        let fam = ok(RfmFamily::new(f, m))?;
        for s in ok(fam.enumerate(&opts()))?.iter() {
            let system = ok(fam.minimal_generators(s))?;
            let rank = system.len();
            ensure(
                rank as i64 <= m - 2 && rank <= s.embedding_dimension(),
                || format!("R({f},{m}): {s} has rank {rank}"),
            )?;
            ensure(ok(fam.closure(system.elements()))? == *s, || {
                format!("R({f},{m}): closure of {:?} is not {s}", system.elements())
            })?;
        }
    }
    Ok(())
}

fn c10() -> Verdict {
    for (g, f) in [(&[5, 7, 9, 11][..], 13), (&[5, 12, 13, 14, 21], 16)] {
        let s = gens(g);
        let rank = ok(ok(RfmFamily::new(f, 5))?.rank(&s))?;
        let mr = ok(is_mr(&s))?;
        ensure(mr && rank == 3, || format!("{s}: MR={mr}, rank {rank}"))?;
    }
    Ok(())
}

fn c11() -> Verdict {
    for f in 5..=25 {
        for m in (2..f).filter(|&m| f > 2 * m && f % m != 0) {
            let w = ok(mr_witness(f, m))?;
            let rank = ok(ok(RfmFamily::new(f, m))?.rank(&w))?;
            ensure(rank as i64 == m - 2, || {
                format!("R({f},{m}): {w} has rank {rank}")
            })?;
            ensure(ok(is_mr(&w))?, || {
                format!("R({f},{m}): {w} not classified MR")
            })?;
        }
    }
    Ok(())
}

fn c12() -> Verdict {
    let s1 = gens(&[5, 7, 9]);
    let s2 = gens(&[5, 6, 8]);
    let c1 = ok(omega_chain(&s1, 13, 5))?;
    let c2 = ok(omega_chain(&s2, 13, 5))?;
    // Member k of each chain is the source minus the first k removed elements.
    for (chain, source, removed) in [(&c1, &s1, &[7, 9, 12][..]), (&c2, &s2, &[6, 8, 11, 12, 13])] {
        ensure(chain.members().len() == removed.len() + 1, || {
            format!("{source}: chain of {} members", chain.members().len())
        })?;
        for (k, member) in chain.members().iter().enumerate() {
            let same = (0..=30)
                .all(|x| member.contains(x) == (source.contains(x) && !removed[..k].contains(&x)));
            ensure(same, || format!("{source}: member {k} is {member}"))?;
        }
    }
    let tree = ok(generated_covariety(&[s1, s2], &opts()))?;
    let mut expected = set(c1.members().iter().chain(c2.members()));
    for a in c1.members() {
        for b in c2.members() {
            expected.insert(a.intersect(b));
        }
    }
    ensure(set(tree.iter()) == expected, || {
        format!("{} members, expected {}", tree.len(), expected.len())
    })?;
    ok(tree.check_axioms())
}

fn c13() -> Verdict {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut done = 0;
    while done < 50 {
        let m = rng.gen_range(2..=8);
        let extra = rng.gen_range(1..=5);
        let mut g = vec![m];
        g.extend((0..extra).map(|_| rng.gen_range(m + 1..=m + 21)));
        let Ok(s) = NS::from_generators(&g) else {
            continue;
        };
        if s.frobenius() > 20 {
            continue;
        }
        let tree = ok(generated_covariety(std::slice::from_ref(&s), &opts()))?;
        let chain = ok(ratio_chain(&s))?;
        ensure(set(tree.iter()) == set(&chain), || {
            format!("{s}: {} members vs chain of {}", tree.len(), chain.len())
        })?;
        done += 1;
    }
    Ok(())
}

/// All subsets of `xs` with at most `k` elements.
fn small_subsets(xs: &[i64], k: usize) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for &x in xs {
        let grown: Vec<Vec<i64>> = out
            .iter()
            .filter(|s| s.len() < k)
            .map(|s| s.iter().copied().chain([x]).collect())
            .collect();
        out.extend(grown);
    }
    out
}

fn c14() -> Verdict {
    for (f, m) in sweep(14) {
        let fam = ok(RfmFamily::new(f, m))?;
        let members = ok(oracle_rfm(f, m))?;
        let mut seen = HashSet::new();
        for s in &members {
            let extra = s.elements_not_in(fam.delta());
            for x in small_subsets(&extra, 3) {
                if !seen.insert(x.clone()) {
                    continue;
                }
                let engine = ok(fam.closure(&x))?;
                let oracle = ok(oracle_closure_among(&members, &x, f, m))?;
                ensure(engine == oracle, || {
                    format!("R({f},{m}) X={x:?}: {engine} vs {oracle}")
                })?;
            }
        }
    }
    Ok(())
}

fn c15() -> Verdict {
    let minimum = ok(NS::delta(15, 8))?;
    let extra = |xs: &[i64]| {
        ok(NS::from_generators(
            &xs.iter().copied().chain(16..24).collect::<Vec<_>>(),
        ))
    };
    let s1 = extra(&[8, 9, 10, 11, 15])?;
    let s2 = extra(&[8, 9, 13, 15])?;
    let s3 = extra(&[8, 9, 15])?;
    ensure(s1.set_notation() == "{0,8,9,10,11,15,→}", || {
        s1.set_notation()
    })?;
    ensure(s2.set_notation() == "{0,8,9,13,15,→}", || {
        s2.set_notation()
    })?;
    ensure(s3.set_notation() == "{0,8,9,15,→}", || s3.set_notation())?;
    let s3_copy = s3.clone();
    let specials = [s1.clone(), s2, s3];
    let in_family = |s: &NS| {
        specials.contains(s)
            || (s.multiplicity() == 8 && s.frobenius() <= 15 && s.ratio().is_ok_and(|r| r >= 10))
    };
    let descriptor = PredicateDescriptor::new(minimum.clone(), in_family);
    let tree = ok(enumerate_tree(
        &descriptor,
        &EnumerationOptions {
            verify_axioms: true,
            ..opts()
        },
    ))?;
    ok(tree.check_axioms())?;

    // Every multiplicity-8 semigroup with F ≤ 15, filtered by the same rule.
    let mut universe = vec![ok(NS::delta(7, 8))?];
    for f in 9..=15 {
        universe.extend(ok(oracle_rfm(f, 8))?);
    }
    let brute: HashSet<NS> = universe.into_iter().filter(|s| in_family(s)).collect();
    ensure(set(tree.iter()) == brute, || {
        format!("engine {} members, brute force {}", tree.len(), brute.len())
    })?;

    // Closures against the intersection of the brute-force members.
    for x in [&[9][..], &[10], &[11], &[9, 10], &[9, 11]] {
        let engine = ok(tree.closure(x))?;
        let expected = brute
            .iter()
            .filter(|s| x.iter().all(|&e| s.contains(e)))
            .cloned()
            .reduce(|a, b| a.intersect(&b))
            .ok_or("no member contains X")?;
        ensure(engine == expected, || {
            format!("closure of {x:?}: {engine} vs {expected}")
        })?;
    }
    ensure(ok(tree.closure(&[9]))? == s3_copy, || {
        "closure of {9} is not S3".into()
    })?;
    ensure(ok(tree.closure(&[9, 10]))? == s1, || {
        "closure of {9,10} is not S1".into()
    })?;
    let systems = ok(tree.minimal_systems(&s1))?;
    ensure(systems == [vec![9, 10], vec![9, 11]], || {
        format!("minimal systems {systems:?}")
    })
}

fn main() -> ExitCode {
    // libtest flags such as --nocapture are accepted and ignored.
    let mut suite = Suite { failed: 0 };
    let ms = Duration::from_millis;
    suite.run(1, "analyze ⟨3,5,7⟩: PF and SG", Some(ms(1)), c1);
    suite.run(2, "{0,7,→}: Apéry set, PF, SG, adjoin 5", Some(ms(1)), c2);
    suite.run(3, "R(7,4) members and Apéry tables", Some(ms(1)), c3);
    suite.run(4, "R(12,5) at genus 8 and 9", Some(ms(1)), c4);
    suite.run(5, "engine = oracle for F ≤ 18", Some(ms(10_000)), c5);
    suite.run(6, "tree parent links and genus steps, F ≤ 18", None, c6);
    suite.run(7, "genus spectrum and 2^(F−m−1) law, F ≤ 18", None, c7);
    suite.run(
        8,
        "maximal elements by inclusion and by genus, F ≤ 18",
        None,
        c8,
    );
    suite.run(
        9,
        "rank bounds and closure of minimal systems, F ≤ 18",
        None,
        c9,
    );
    suite.run(10, "maximal-rank examples", None, c10);
    suite.run(11, "maximal-rank witnesses, F ≤ 25", Some(ms(1_000)), c11);
    suite.run(
        12,
        "covariety generated by ⟨5,7,9⟩ and ⟨5,6,8⟩",
        Some(ms(100)),
        c12,
    );
    suite.run(
        13,
        "single generator gives its ratio chain (50 random)",
        None,
        c13,
    );
    suite.run(
        14,
        "closure = oracle intersection, F ≤ 14, #X ≤ 3",
        Some(ms(30_000)),
        c14,
    );
    suite.run(15, "bespoke covariety with two minimal systems", None, c15);
    if suite.failed == 0 {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {} criteria failed", suite.failed);
        ExitCode::FAILURE
    }
}
