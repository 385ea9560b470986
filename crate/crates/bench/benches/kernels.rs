//! Benchmarks for the hot kernels: word rewriting, ordering tables with
//! their oracle, coherent-state construction, and the eigensolver.

use criterion::{black_box, criterion_group, criterion_main, Criterion};
use num_complex::Complex64;

use bkappa::algebra::{word_normalize, Generator};
use bkappa::analytic::coherent_state;
use bkappa::exact::Rational;
use bkappa::fock::exact_action;
use bkappa::ordering::{stirling, wick_verify};
use bkappa::spectral::{discretize, eigenvalues_sturm, GridSpec, PotentialFamily, PotentialSpec};

fn bench_word_normalize(c: &mut Criterion) {
    let word: Vec<Generator> = (0..12)
        .map(|i| {
            if i % 3 == 0 {
                Generator::Lower
            } else {
                Generator::Raise
            }
        })
        .collect();
    c.bench_function("word_normalize_len12", |b| {
        b.iter(|| word_normalize(black_box(&word)))
    });
}

fn bench_exact_action(c: &mut Criterion) {
    let word: Vec<Generator> = (0..10)
        .map(|i| {
            if i % 2 == 0 {
                Generator::Raise
            } else {
                Generator::Lower
            }
        })
        .collect();
    let nf = word_normalize(&word);
    let kappa = Rational::new(5, 7);
    c.bench_function("exact_action_len10", |b| {
        b.iter(|| exact_action(black_box(&nf), 12, &kappa).unwrap())
    });
}

fn bench_stirling_oracle(c: &mut Criterion) {
    c.bench_function("stirling_table_r6", |b| {
        b.iter(|| stirling(black_box(6)).unwrap())
    });
    let table = stirling(6).unwrap();
    c.bench_function("wick_verify_r6_n40", |b| {
        b.iter(|| wick_verify(black_box(&table), 40).unwrap())
    });
}

fn bench_coherent(c: &mut Criterion) {
    let kappa = Rational::new(1, 2);
    let z = Complex64::new(1.1, -0.6);
    c.bench_function("coherent_state_tol24", |b| {
        b.iter(|| coherent_state(black_box(&kappa), z, 1e-24).unwrap())
    });
}

fn bench_sturm(c: &mut Criterion) {
    let spec = PotentialSpec::new(PotentialFamily::V0, 0.4).unwrap();
    let grid = GridSpec::new(40.0, 2000).unwrap();
    let matrix = discretize(&spec, &grid);
    c.bench_function("sturm_5_lowest_m2000", |b| {
        b.iter(|| eigenvalues_sturm(black_box(&matrix), 5, 1e-11).unwrap())
    });
}

criterion_group!(
    benches,
    bench_word_normalize,
    bench_exact_action,
    bench_stirling_oracle,
    bench_coherent,
    bench_sturm
);
criterion_main!(benches);
