// SPDX-License-Identifier: Apache-2.0

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gaussf_bench::group;
use gaussf_core::{automorphisms, gauss, lattice, Limits};

fn subgroups(c: &mut Criterion) {
    let limits = Limits::default();
    let mut bench = c.benchmark_group("all_subgroups");
    for spec in ["Z360", "D64", "Ab[2;1,1,1,1,1]", "Q8xZ9", "Ab[3;1,1,1]"] {
        let g = group(spec);
        bench.bench_with_input(BenchmarkId::from_parameter(spec), &g, |b, g| {
            b.iter(|| lattice::all_subgroups(g, &limits).unwrap().len())
        });
    }
    bench.finish();
}

fn automorphism_search(c: &mut Criterion) {
    let limits = Limits::default();
    let mut bench = c.benchmark_group("aut_order_bruteforce");
    for spec in ["Q8", "D30", "Ab[2;1,2,3]", "SD(7,3,2,r=2)"] {
        let g = group(spec);
        bench.bench_with_input(BenchmarkId::from_parameter(spec), &g, |b, g| {
            b.iter(|| automorphisms::aut_order_bruteforce(g, &limits).unwrap().value)
        });
    }
    bench.finish();
}

fn f_value(c: &mut Criterion) {
    let limits = Limits::default();
    let mut bench = c.benchmark_group("f");
    bench.sample_size(10);
    for spec in ["D128", "Ab[2;1,1,1,1]xSD(7,3,1)", "Ab[2;1,1,1,1,1,1]"] {
        let g = group(spec);
        bench.bench_with_input(BenchmarkId::from_parameter(spec), &g, |b, g| b.iter(|| gauss::f(g, &limits).unwrap()));
    }
    bench.finish();
}

criterion_group!(benches, subgroups, automorphism_search, f_value);
criterion_main!(benches);
