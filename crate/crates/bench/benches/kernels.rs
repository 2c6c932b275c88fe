use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use umbral_core::families::{bernoulli_table, carlitz_hermite, euler_poly, w, x};
use umbral_core::stochastic::{mc_moment, quad_bernoulli_even};
use umbral_core::{verify, Bounds, Construction, ExactScalar, IdentityId, MultiPoly, Path, SamplerSpec, Truncation};

fn numbers(c: &mut Criterion) {
    let mut g = c.benchmark_group("bernoulli_table");
    for n in [20u32, 40] {
        for path in [Path::Oracle, Path::Umbral] {
            g.bench_with_input(BenchmarkId::new(path.to_string(), n), &n, |b, &n| {
                b.iter(|| bernoulli_table(black_box(n), path))
            });
        }
    }
    g.finish();
}

fn polynomials(c: &mut Criterion) {
    c.bench_function("euler_poly_umbral_30", |b| b.iter(|| euler_poly(black_box(30), Path::Umbral)));
    c.bench_function("carlitz_umbral_12_12", |b| {
        b.iter(|| carlitz_hermite(black_box(12), black_box(12), Path::Umbral))
    });
}

fn series(c: &mut Criterion) {
    // (1 - 4w)^(-1/2) exp(4xw/(1 - 4w)) in two graded variables
    let tr = Truncation::new([x(), w()], 16);
    let d = &MultiPoly::one() - &MultiPoly::var(w()).scale(&ExactScalar::from_int(4));
    let n = (&MultiPoly::var(x()) * &MultiPoly::var(w())).scale(&ExactScalar::from_int(4));
    let alpha = ExactScalar::ratio(-1, 2);
    c.bench_function("power_exp_rational_order_16", |b| {
        b.iter(|| tr.power_exp_rational(black_box(&d), &alpha, &n).unwrap())
    });
}

fn identities(c: &mut Criterion) {
    let bounds = Bounds::quick();
    let mut g = c.benchmark_group("verify_quick");
    g.sample_size(10);
    for id in [IdentityId::Gessel72, IdentityId::CarlitzMaster, IdentityId::Quintuple] {
        g.bench_function(id.name(), |b| b.iter(|| verify(id, &bounds).unwrap()));
    }
    g.finish();
}

fn stochastic(c: &mut Criterion) {
    let spec = SamplerSpec::of(Construction::LogUniformRatio, 42);
    let mut g = c.benchmark_group("stochastic");
    g.sample_size(10);
    g.bench_function("mc_moment_1e5", |b| b.iter(|| mc_moment(&spec, -0.5, 4, black_box(100_000)).unwrap()));
    g.bench_function("quad_bernoulli_b10", |b| b.iter(|| quad_bernoulli_even(black_box(5)).unwrap()));
    g.finish();
}

criterion_group!(benches, numbers, polynomials, series, identities, stochastic);
criterion_main!(benches);
