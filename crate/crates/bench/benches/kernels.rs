use criterion::{black_box, criterion_group, criterion_main, Criterion};
use feq_core::solver::{Solver, SolverParams};
use feq_core::special::xi;
use feq_core::theta::{hbar, KernelSeriesParams};
use feq_core::{Complex64, QuadratureSpec};

fn special(c: &mut Criterion) {
    let s = Complex64::new(0.5, 14.134_725);
    c.bench_function("xi critical line", |b| b.iter(|| xi(black_box(s))));
    let far = Complex64::new(-3.5, 60.0);
    c.bench_function("xi reflected", |b| b.iter(|| xi(black_box(far))));
    let series = KernelSeriesParams::default();
    c.bench_function("hbar t=1", |b| b.iter(|| hbar(black_box(1.0), &series)));
    c.bench_function("hbar t=0.3", |b| b.iter(|| hbar(black_box(0.3), &series)));
}

fn representations(c: &mut Criterion) {
    let solver = Solver::theta(QuadratureSpec::default()).unwrap();
    let p = SolverParams::with_default_abscissa(
        Complex64::new(1.0, 1.0),
        Complex64::new(0.5, 3.0),
        0.5,
    )
    .unwrap();
    c.bench_function("f real axis", |b| {
        b.iter(|| solver.f_real_rep(black_box(&p)))
    });
    c.bench_function("f contour", |b| {
        b.iter(|| solver.f_contour_rep(black_box(&p)))
    });
}

criterion_group!(benches, special, representations);
criterion_main!(benches);
