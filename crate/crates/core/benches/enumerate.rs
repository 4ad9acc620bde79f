use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use nsgp::{generated_covariety, EnumerationOptions, NumericalSemigroup, RfmFamily};

fn paths() -> Vec<(&'static str, EnumerationOptions)> {
    let mut v = vec![("sequential", EnumerationOptions::sequential())];
    if nsgp::parallel_available() {
        v.push(("parallel", EnumerationOptions::parallel()));
    }
    v
}

fn rfm_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("rfm_enumerate");
    group.sample_size(10);
    for (f, m) in [(23, 7), (31, 8), (35, 9)] {
        let family = RfmFamily::new(f, m).unwrap();
        for (name, opts) in paths() {
            group.bench_with_input(
                BenchmarkId::new(name, format!("R({f},{m})")),
                &opts,
                |b, o| b.iter(|| family.enumerate(o).unwrap().len()),
            );
        }
    }
    group.finish();
}

fn rfm_single_genus(c: &mut Criterion) {
    let mut group = c.benchmark_group("rfm_genus");
    group.sample_size(10);
    let family = RfmFamily::new(41, 10).unwrap();
    let g = 25;
    for (name, opts) in paths() {
        group.bench_with_input(BenchmarkId::new(name, "R(41,10) g=25"), &opts, |b, o| {
            b.iter(|| family.enumerate_genus(g, o).unwrap().members.len())
        });
    }
    group.finish();
}

fn generated(c: &mut Criterion) {
    let mut group = c.benchmark_group("generated_covariety");
    group.sample_size(10);
    let family: Vec<NumericalSemigroup> = [
        &[7, 9, 11, 13][..],
        &[7, 8, 12],
        &[7, 10, 11, 12, 13],
        &[7, 15, 16, 17, 18, 19, 20],
        &[7, 9, 10],
        &[7, 11, 12, 13],
    ]
    .iter()
    .map(|g| NumericalSemigroup::from_generators(g).unwrap())
    .collect();
    for (name, opts) in paths() {
        group.bench_with_input(
            BenchmarkId::new(name, "six generators, m=7"),
            &opts,
            |b, o| b.iter(|| generated_covariety(&family, o).unwrap().len()),
        );
    }
    group.finish();
}

criterion_group!(benches, rfm_enumeration, rfm_single_genus, generated);
criterion_main!(benches);
