//! Replays reference examples and sweeps the tree engine against the oracle.

use std::collections::HashSet;

use nsgp::oracle::oracle_rfm;
use nsgp::{
    generated_covariety, genus_range, is_mr, mr_witness, omega_chain, EnumerationOptions,
    NumericalSemigroup, Result, RfmFamily,
};
use serde::Serialize;

use crate::commands::Outcome;
use crate::render::json;
use crate::Format;

#[derive(Serialize)]
struct Check {
    name: String,
    pass: bool,
    detail: String,
}

type Verdict = std::result::Result<(), String>;

fn ensure(cond: bool, detail: impl FnOnce() -> String) -> Verdict {
    if cond {
        Ok(())
    } else {
        Err(detail())
    }
}

fn gens(g: &[i64]) -> Result<NumericalSemigroup> {
    NumericalSemigroup::from_generators(g)
}

fn lift<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn with(delta: &NumericalSemigroup, added: &[i64]) -> Result<NumericalSemigroup> {
    added.iter().try_fold(delta.clone(), |s, &x| s.adjoin(x))
}

fn analyze_357() -> Verdict {
    let s = lift(gens(&[3, 5, 7]))?;
    let pf = lift(s.pseudo_frobenius())?;
    let sg = lift(s.special_gaps())?;
    ensure(
        s.frobenius() == 4 && s.genus() == 3 && pf == [2, 4] && sg == [4],
        || format!("F={} g={} PF={pf:?} SG={sg:?}", s.frobenius(), s.genus()),
    )
}

fn seven_onwards() -> Verdict {
    let s = lift(gens(&[7, 8, 9, 10, 11, 12, 13]))?;
    let ap = lift(s.apery(7))?;
    let pf = lift(s.pseudo_frobenius())?;
    let sg = lift(s.special_gaps())?;
    let t = lift(s.adjoin_any(5))?;
    let ap_t = lift(t.apery(7))?;
    ensure(
        ap == [0, 8, 9, 10, 11, 12, 13]
            && pf == [1, 2, 3, 4, 5, 6]
            && sg == [4, 5, 6]
            && ap_t == [0, 5, 8, 9, 10, 11, 13],
        || format!("Ap={ap:?} PF={pf:?} SG={sg:?} Ap(S∪{{5}})={ap_t:?}"),
    )
}

fn r_7_4(opts: &EnumerationOptions) -> Verdict {
    let fam = lift(RfmFamily::new(7, 4))?;
    let tree = lift(fam.enumerate(opts))?;
    let d = fam.delta();
    let expected: Vec<NumericalSemigroup> = [&[][..], &[5], &[6], &[6, 5]]
        .iter()
        .map(|a| with(d, a))
        .collect::<Result<_>>()
        .map_err(|e| e.to_string())?;
    let got: HashSet<_> = tree.iter().cloned().collect();
    let tables: Vec<Vec<i64>> = expected[1..]
        .iter()
        .map(|s| s.apery(4))
        .collect::<Result<_>>()
        .map_err(|e| e.to_string())?;
    ensure(
        got == expected.iter().cloned().collect::<HashSet<_>>()
            && tables == [vec![0, 5, 10, 11], vec![0, 6, 9, 11], vec![0, 5, 6, 11]],
        || format!("{} members, Apéry tables {tables:?}", tree.len()),
    )
}

fn r_12_5(opts: &EnumerationOptions) -> Verdict {
    let fam = lift(RfmFamily::new(12, 5))?;
    let d = fam.delta();
    let sets = |groups: &[&[i64]]| -> std::result::Result<HashSet<NumericalSemigroup>, String> {
        groups.iter().map(|a| lift(with(d, a))).collect()
    };
    let g8: HashSet<_> = lift(fam.enumerate_genus(8, opts))?
        .members
        .into_iter()
        .collect();
    let g9: HashSet<_> = lift(fam.enumerate_genus(9, opts))?
        .members
        .into_iter()
        .collect();
    ensure(
        g8 == sets(&[&[9, 8], &[11, 8], &[11, 9]])? && g9 == sets(&[&[8], &[9], &[11]])?,
        || {
            format!(
                "genus 8: {} members, genus 9: {} members",
                g8.len(),
                g9.len()
            )
        },
    )
}

fn maximal_rank_examples() -> Verdict {
    for (g, f) in [(&[5, 7, 9, 11][..], 13), (&[5, 12, 13, 14, 21], 16)] {
        let s = lift(gens(g))?;
        let rank = lift(RfmFamily::new(f, 5).and_then(|fam| fam.rank(&s)))?;
        let mr = lift(is_mr(&s))?;
        ensure(mr && rank == 3 && s.frobenius() == f, || {
            format!("{s}: MR={mr}, rank {rank}")
        })?;
    }
    Ok(())
}

fn witnesses() -> Verdict {
    for f in 5..=25 {
        for m in 2..f {
            if f > 2 * m && f % m != 0 {
                let w = lift(mr_witness(f, m))?;
                let rank = lift(RfmFamily::new(f, m).and_then(|fam| fam.rank(&w)))?;
                ensure(rank as i64 == m - 2, || {
                    format!("R({f},{m}): {w} has rank {rank}")
                })?;
            }
        }
    }
    Ok(())
}

fn generated_pair(opts: &EnumerationOptions) -> Verdict {
    let s1 = lift(gens(&[5, 7, 9]))?;
    let s2 = lift(gens(&[5, 6, 8]))?;
    let c1 = lift(omega_chain(&s1, 13, 5))?;
    let c2 = lift(omega_chain(&s2, 13, 5))?;
    ensure(
        c1.removed() == [7, 9, 12] && c2.removed() == [6, 8, 11, 12, 13],
        || format!("removed {:?} and {:?}", c1.removed(), c2.removed()),
    )?;
    let tree = lift(generated_covariety(&[s1, s2], opts))?;
    let mut expected: HashSet<_> = c1.members().iter().chain(c2.members()).cloned().collect();
    for a in c1.members() {
        for b in c2.members() {
            expected.insert(a.intersect(b));
        }
    }
    let got: HashSet<_> = tree.iter().cloned().collect();
    ensure(got == expected, || {
        format!("{} members, expected {}", got.len(), expected.len())
    })?;
    lift(tree.check_axioms())
}

fn sweep(max_f: i64, opts: &EnumerationOptions) -> Verdict {
    for f in 3..=max_f {
        for m in 2..f {
            if f % m == 0 {
                continue;
            }
            let fam = lift(RfmFamily::new(f, m))?;
            let tree = lift(fam.enumerate(opts))?;
            let got: HashSet<_> = tree.iter().cloned().collect();
            let want: HashSet<_> = lift(oracle_rfm(f, m))?.into_iter().collect();
            ensure(got == want, || {
                format!(
                    "R({f},{m}): {} members, oracle has {}",
                    got.len(),
                    want.len()
                )
            })?;
            for i in 1..tree.len() {
                let s = &tree.vertices()[i];
                let p = &tree.vertices()[tree.parent(i).expect("non-root")];
                ensure(
                    lift(s.remove_ratio())? == *p && p.genus() == s.genus() + 1,
                    || format!("R({f},{m}): bad parent link at {s}"),
                )?;
            }
            let genera: Vec<i64> = {
                let mut g: Vec<i64> = got.iter().map(NumericalSemigroup::genus).collect();
                g.sort_unstable();
                g.dedup();
                g
            };
            let range: Vec<i64> = lift(genus_range(f, m))?.collect();
            ensure(genera == range, || format!("R({f},{m}): genera {genera:?}"))?;
        }
    }
    Ok(())
}

pub fn run(max_frobenius: i64, opts: EnumerationOptions, format: Format) -> Outcome {
    let max_f = max_frobenius.min(nsgp::oracle::ORACLE_MAX_FROBENIUS);
    let checks: Vec<(String, Verdict)> = vec![
        ("analyze ⟨3,5,7⟩".into(), analyze_357()),
        ("Apéry set, PF and SG of {0,7,→}".into(), seven_onwards()),
        ("R(7,4) members".into(), r_7_4(&opts)),
        ("R(12,5) genus 8 and 9".into(), r_12_5(&opts)),
        ("maximal-rank examples".into(), maximal_rank_examples()),
        ("maximal-rank witnesses F ≤ 25".into(), witnesses()),
        (
            "covariety generated by ⟨5,7,9⟩, ⟨5,6,8⟩".into(),
            generated_pair(&opts),
        ),
        (format!("oracle sweep F ≤ {max_f}"), sweep(max_f, &opts)),
    ];
    let checks: Vec<Check> = checks
        .into_iter()
        .map(|(name, r)| Check {
            name,
            pass: r.is_ok(),
            detail: r.err().unwrap_or_default(),
        })
        .collect();
    let status = if checks.iter().all(|c| c.pass) { 0 } else { 1 };
    let body = match format {
        Format::Json => json(&checks),
        _ => checks
            .iter()
            .map(|c| match c.pass {
                true => format!("PASS {}\n", c.name),
                false => format!("FAIL {}: {}\n", c.name, c.detail),
            })
            .collect(),
    };
    Outcome {
        body,
        notes: Vec::new(),
        status,
    }
}
