use chibound::certify::verify_general_z_inequality_with;
use chibound::graph::{enumerate_nonisomorphic, enumerate_nonisomorphic_with, generate, write_graph6};
use chibound::survey::{run_survey_with, DEFAULT_TIE_EPS};
use chibound::Execution;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn survey(c: &mut Criterion) {
    let corpus: String = (5..=7)
        .flat_map(|n| enumerate_nonisomorphic(n, false).unwrap())
        .map(|g| write_graph6(&g) + "\n")
        .collect();
    let mut group = c.benchmark_group("survey_5_to_7");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| run_survey_with("bench", &corpus, DEFAULT_TIE_EPS, exec).unwrap())
        });
    }
    group.finish();
}

fn lemma_trials(c: &mut Criterion) {
    let petersen = generate("petersen", &[]).unwrap();
    let mut group = c.benchmark_group("general_z_petersen_200");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| verify_general_z_inequality_with(&petersen, 200, 7, exec).unwrap())
        });
    }
    group.finish();
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_7");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| enumerate_nonisomorphic_with(7, false, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, survey, lemma_trials, enumeration);
criterion_main!(benches);
