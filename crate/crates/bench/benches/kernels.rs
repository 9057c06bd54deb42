use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use krein_frames::construction::{construct_frame, Flavor};
use krein_frames::coupling::couple_frames;
use krein_frames::dilation::{are_similar, dilate};
use krein_frames::frames::validate;
use krein_frames::linalg::hermitian_eig;
use krein_frames_bench::{construction_instance, random_frame, random_hermitian};

fn eig(c: &mut Criterion) {
    let mut group = c.benchmark_group("hermitian_eig");
    for n in [4, 8, 16, 32] {
        let m = random_hermitian(1, n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| {
            b.iter(|| hermitian_eig(m).unwrap())
        });
    }
    group.finish();
}

fn frames(c: &mut Criterion) {
    let mut group = c.benchmark_group("validate");
    for (n, k) in [(4, 8), (8, 16), (16, 32)] {
        let f = random_frame(2, n, k);
        group.bench_with_input(BenchmarkId::new("frame", format!("{n}x{k}")), &f, |b, f| {
            b.iter(|| validate(f).unwrap())
        });
    }
    group.finish();
}

fn construct(c: &mut Criterion) {
    let mut group = c.benchmark_group("construct_frame");
    for (n, k) in [(4, 8), (8, 16), (16, 32)] {
        let (space, s0, norms) = construction_instance(3, n, k);
        group.bench_function(BenchmarkId::from_parameter(format!("{n}x{k}")), |b| {
            b.iter(|| construct_frame(&space, &s0, &norms, Flavor::PontryaginFrame).unwrap())
        });
    }
    group.finish();
}

fn dilation(c: &mut Criterion) {
    let mut group = c.benchmark_group("dilation");
    for (n, k) in [(4, 8), (8, 16), (16, 32)] {
        let f = random_frame(4, n, k);
        let g = random_frame(5, n, k);
        let label = format!("{n}x{k}");
        group.bench_with_input(BenchmarkId::new("dilate", &label), &f, |b, f| {
            b.iter(|| dilate(f).unwrap())
        });
        group.bench_function(BenchmarkId::new("similar", &label), |b| {
            b.iter(|| are_similar(&f, &g).unwrap())
        });
        group.bench_function(BenchmarkId::new("couple", &label), |b| {
            b.iter(|| couple_frames(&f, &g).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, eig, frames, construct, dilation);
criterion_main!(benches);
