use std::fs;
use std::io::{self, Write};
use std::path::Path;

use nsgp::oracle::{oracle_closure, oracle_rfm};
use nsgp::{
    generated_covariety, genus_range, is_mr, maximal_elements, CovarietyTree, EnumerationOptions,
    Error, NumericalSemigroup, Result, RfmFamily, SemigroupRecord,
};
use serde::Serialize;

use crate::render::{self, braces, json, no_dot};
use crate::{Cli, Command, FamilyArgs, Format};

/// Rendered output plus anything destined for stderr.
pub struct Outcome {
    pub body: String,
    pub notes: Vec<String>,
    pub status: u8,
}

impl Outcome {
    fn ok(body: String) -> Self {
        Outcome {
            body,
            notes: Vec::new(),
            status: 0,
        }
    }

    pub fn emit(&self, out: Option<&Path>) -> io::Result<()> {
        for n in &self.notes {
            eprintln!("{n}");
        }
        match out {
            Some(path) => fs::write(path, &self.body),
            None => {
                let mut stdout = io::stdout().lock();
                stdout.write_all(self.body.as_bytes())?;
                stdout.flush()
            }
        }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let threads = cli.threads as usize;
    let opts = EnumerationOptions {
        parallel: threads > 1 && nsgp::parallel_available(),
        ..EnumerationOptions::default()
    };
    in_pool(threads, || dispatch(cli, opts))
}

#[cfg(feature = "parallel")]
fn in_pool<T: Send>(threads: usize, f: impl FnOnce() -> Result<T> + Send) -> Result<T> {
    if threads <= 1 {
        return f();
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Domain(format!("cannot start worker pool: {e}")))?
        .install(f)
}

#[cfg(not(feature = "parallel"))]
fn in_pool<T: Send>(_threads: usize, f: impl FnOnce() -> Result<T> + Send) -> Result<T> {
    f()
}

fn dispatch(cli: &Cli, opts: EnumerationOptions) -> Result<Outcome> {
    let format = cli.format;
    match &cli.command {
        Command::Analyze { generators } => analyze(&semigroup(&generators.0)?, format),
        Command::Enumerate {
            family,
            genus,
            oracle,
            verify_axioms,
        } => {
            let opts = EnumerationOptions {
                verify_axioms: *verify_axioms,
                ..opts
            };
            enumerate(*family, *genus, *oracle, opts, format)
        }
        Command::GenusRange { family } => {
            let r = genus_range(family.frobenius, family.multiplicity)?;
            let body = match format {
                Format::Text => format!(
                    "genus range of R({},{}): {}..={}\n",
                    family.frobenius,
                    family.multiplicity,
                    r.start(),
                    r.end()
                ),
                Format::Json => json(&GenusRangeReport {
                    frobenius: family.frobenius,
                    multiplicity: family.multiplicity,
                    min: *r.start(),
                    max: *r.end(),
                }),
                Format::Dot => return Err(no_dot("a genus range")),
            };
            Ok(Outcome::ok(body))
        }
        Command::MaxElements { family } => {
            let max = maximal_elements(family.frobenius, family.multiplicity, &opts)?;
            render::list(&max, format).map(Outcome::ok)
        }
        Command::Closure {
            family,
            elements,
            oracle,
        } => {
            let s = if *oracle {
                oracle_closure(&elements.0, family.frobenius, family.multiplicity)?
            } else {
                rfm(*family)?.closure(&elements.0)?
            };
            render::list(&[s], format).map(Outcome::ok)
        }
        Command::Rank {
            generators,
            frobenius,
            multiplicity,
        } => {
            let s = semigroup(&generators.0)?;
            let f = frobenius.unwrap_or(s.frobenius());
            let m = multiplicity.unwrap_or(s.multiplicity());
            let fam = rfm(FamilyArgs {
                frobenius: f,
                multiplicity: m,
            })?;
            let system = fam.minimal_generators(&s)?;
            let body = match format {
                Format::Text => format!(
                    "{s}\nrank in R({f},{m}) = {}\nminimal generating system = {}\n",
                    system.len(),
                    braces(system.elements())
                ),
                Format::Json => json(&RankReport {
                    semigroup: (&s).into(),
                    frobenius: f,
                    multiplicity: m,
                    rank: system.len(),
                    minimal_system: system.elements().to_vec(),
                }),
                Format::Dot => return Err(no_dot("a rank report")),
            };
            Ok(Outcome::ok(body))
        }
        Command::MrCheck { generators } => {
            let s = semigroup(&generators.0)?;
            let mr = is_mr(&s)?;
            let (f, m) = (s.frobenius(), s.multiplicity());
            let rank = RfmFamily::new(f, m).and_then(|fam| fam.rank(&s)).ok();
            let body = match format {
                Format::Text => {
                    let rank = rank.map_or("n/a".to_string(), |r| r.to_string());
                    format!(
                        "{s}\nmaximal rank: {}\nrank in R({f},{m}) = {rank} (maximum {})\n",
                        if mr { "yes" } else { "no" },
                        m - 2
                    )
                }
                Format::Json => json(&MrReport {
                    semigroup: (&s).into(),
                    maximal_rank: mr,
                    rank,
                }),
                Format::Dot => return Err(no_dot("a maximal-rank check")),
            };
            Ok(Outcome::ok(body))
        }
        Command::GenerateCovariety { semigroups } => {
            let family: Vec<NumericalSemigroup> = semigroups
                .0
                .iter()
                .map(|g| semigroup(g))
                .collect::<Result<_>>()?;
            let tree = generated_covariety(&family, &opts)?;
            render::tree(&tree, format).map(Outcome::ok)
        }
        Command::Verify { max_frobenius } => {
            if format == Format::Dot {
                return Err(no_dot("a verification report"));
            }
            Ok(crate::verify::run(*max_frobenius, opts, format))
        }
    }
}

fn semigroup(generators: &[i64]) -> Result<NumericalSemigroup> {
    if generators.is_empty() {
        return Err(Error::Usage(
            "--generators must list at least one integer".into(),
        ));
    }
    NumericalSemigroup::from_generators(generators)
}

fn rfm(family: FamilyArgs) -> Result<RfmFamily> {
    RfmFamily::new(family.frobenius, family.multiplicity)
}

fn enumerate(
    family: FamilyArgs,
    genus: Option<i64>,
    oracle: bool,
    opts: EnumerationOptions,
    format: Format,
) -> Result<Outcome> {
    let fam = rfm(family)?;
    if genus.is_some() && format == Format::Dot {
        return Err(no_dot("a single genus level"));
    }
    let mut notes = Vec::new();
    let tree = if oracle {
        let all = oracle_rfm(fam.frobenius(), fam.multiplicity())?;
        if let Some(g) = genus {
            let members: Vec<_> = all.into_iter().filter(|s| s.genus() == g).collect();
            return render::list(&members, format).map(Outcome::ok);
        }
        CovarietyTree::from_members(fam.delta().clone(), all)?
    } else if let Some(g) = genus {
        let level = fam.enumerate_genus(g, &opts)?;
        if opts.verify_axioms {
            fam.enumerate(&opts)?.check_axioms()?;
        }
        notes.extend(level.diagnostic());
        let body = render::list(&level.members, format)?;
        return Ok(Outcome {
            body,
            notes,
            status: 0,
        });
    } else {
        fam.enumerate(&opts)?
    };
    if opts.verify_axioms {
        tree.check_axioms()?;
        notes.push(format!("axioms verified on {} members", tree.len()));
    }
    let body = render::tree(&tree, format)?;
    Ok(Outcome {
        body,
        notes,
        status: 0,
    })
}

fn analyze(s: &NumericalSemigroup, format: Format) -> Result<Outcome> {
    let inv = s.invariants();
    let pf = s.pseudo_frobenius().unwrap_or_default();
    let sg = s.special_gaps().unwrap_or_default();
    let class = s.classify().ok();
    let m = s.multiplicity();
    let body = match format {
        Format::Text => {
            let mut out = format!("S = {s}\n");
            out += &format!(
                "m={} F={} g={} e={}",
                inv.multiplicity, inv.frobenius, inv.genus, inv.embedding_dimension
            );
            if let Some(r) = inv.ratio {
                out += &format!(" r={r}");
            }
            out += "\n";
            out += &format!("Ap(S,{m})={}\n", braces(&s.apery(m)?));
            out += &format!("PF={}\nSG={}\n", braces(&pf), braces(&sg));
            out += &format!("gaps={}\n", braces(&s.gaps()));
            if let Some(c) = class {
                out += &format!(
                    "symmetric={} pseudo-symmetric={} irreducible={} MED={}\n",
                    c.symmetric, c.pseudo_symmetric, c.irreducible, c.med
                );
            }
            out
        }
        Format::Json => json(&AnalyzeReport {
            record: s.into(),
            embedding_dimension: inv.embedding_dimension,
            ratio: inv.ratio,
            pseudo_frobenius: pf,
            special_gaps: sg,
            gaps: s.gaps(),
            classification: class.map(|c| ClassificationReport {
                symmetric: c.symmetric,
                pseudo_symmetric: c.pseudo_symmetric,
                irreducible: c.irreducible,
                med: c.med,
            }),
        }),
        Format::Dot => return Err(no_dot("a single semigroup")),
    };
    Ok(Outcome::ok(body))
}

#[derive(Serialize)]
struct AnalyzeReport {
    #[serde(flatten)]
    record: SemigroupRecord,
    embedding_dimension: usize,
    ratio: Option<i64>,
    pseudo_frobenius: Vec<i64>,
    special_gaps: Vec<i64>,
    gaps: Vec<i64>,
    classification: Option<ClassificationReport>,
}

#[derive(Serialize)]
struct ClassificationReport {
    symmetric: bool,
    pseudo_symmetric: bool,
    irreducible: bool,
    med: bool,
}

#[derive(Serialize)]
struct GenusRangeReport {
    frobenius: i64,
    multiplicity: i64,
    min: i64,
    max: i64,
}

#[derive(Serialize)]
struct RankReport {
    semigroup: SemigroupRecord,
    frobenius: i64,
    multiplicity: i64,
    rank: usize,
    minimal_system: Vec<i64>,
}

#[derive(Serialize)]
struct MrReport {
    semigroup: SemigroupRecord,
    maximal_rank: bool,
    rank: Option<usize>,
}
