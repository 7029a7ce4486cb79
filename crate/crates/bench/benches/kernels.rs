use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use feq_bench::small_grid;
use feq_core::arith::gcd;
use feq_core::corrected::corrected_symmetry;
use feq_core::frobenius_euler::{FeNumberTable, FePolyTable};
use feq_core::identities::{classify, verify_double_integral_ratio};
use feq_core::padic::{fermionic_riemann_sums, PAdicContext};
use feq_core::{BigRational, IdentityId, IntPolynomial};

fn number_tables(c: &mut Criterion) {
    let mut group = c.benchmark_group("fe_table");
    for n in [8, 16, 24] {
        group.bench_with_input(BenchmarkId::new("numbers", n), &n, |b, &n| b.iter(|| FeNumberTable::new(black_box(n))));
        group.bench_with_input(BenchmarkId::new("dual_polys_w3", n), &n, |b, &n| {
            b.iter(|| FePolyTable::new(black_box(n)).dual(3))
        });
    }
    group.finish();
}

fn polynomial_gcd(c: &mut Criterion) {
    // (1 + q^15)^2 and (1 + q^35)(1 + q^21) share 1 + q^5 and 1 + q^7 factors
    let one_plus = |w: usize| &IntPolynomial::one() + &IntPolynomial::monomial(1, w);
    let a = one_plus(15).pow(2);
    let b = &one_plus(35) * &one_plus(21);
    c.bench_function("gcd_cyclotomic_products", |bench| bench.iter(|| gcd(black_box(&a), black_box(&b))));
}

fn identities(c: &mut Criterion) {
    c.bench_function("corrected_symmetry_n6_w5_w7", |b| b.iter(|| corrected_symmetry(black_box(6), 5, 7).unwrap()));
    c.bench_function("double_ratio_w3_w5_t10", |b| b.iter(|| verify_double_integral_ratio(3, 5, 10).unwrap()));
    let grid = small_grid();
    c.bench_function("classify_printed_symmetry", |b| {
        b.iter(|| classify(IdentityId::PrintedSymmetry, black_box(&grid)).unwrap())
    });
}

fn riemann_sums(c: &mut Criterion) {
    let ctx = PAdicContext::new(5, 4).unwrap();
    let q = BigRational::from_integer(6.into());
    c.bench_function("riemann_sums_p5_level6_n6", |b| {
        b.iter(|| fermionic_riemann_sums(6, black_box(&q), 6, &ctx).unwrap())
    });
}

criterion_group!(benches, number_tables, polynomial_gcd, identities, riemann_sums);
criterion_main!(benches);
