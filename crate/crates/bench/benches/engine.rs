use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use nestdim::catalog::{k_vectors, lookup};
use nestdim::dimension::{dim_for_k, match_w_form, Mode};
use nestdim::rational::{q, qi};
use nestdim::restriction::Analysis;
use nestdim::root_system::build_root_system;

fn root_systems(c: &mut Criterion) {
    let mut g = c.benchmark_group("root_system");
    for (t, n) in [("E6", 6), ("E7", 7), ("E8", 8), ("B8", 8)] {
        let (lt, rank) = nestdim::root_system::parse_type_name(t).unwrap();
        assert_eq!(rank, n);
        g.bench_function(t, |b| b.iter(|| build_root_system(black_box(lt), rank).unwrap()));
    }
    g.finish();
}

fn analysis(c: &mut Criterion) {
    let mut g = c.benchmark_group("analysis");
    g.sample_size(10);
    for id in ["FII", "E6D5", "EVII", "EIX"] {
        let pair = lookup(id).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(id), &pair, |b, p| b.iter(|| Analysis::new(p).unwrap()));
    }
    g.finish();
}

fn dimensions(c: &mut Criterion) {
    let mut g = c.benchmark_group("dim_sweep");
    g.sample_size(10);
    for id in ["D4G2", "E6D5", "EIX"] {
        let an = Analysis::new(&lookup(id).unwrap()).unwrap();
        let ks = k_vectors(an.pair.spherical_rank, 3);
        for (name, mode) in [("fast", Mode::Fast), ("full", Mode::Full)] {
            g.bench_function(format!("{id}/{name}"), |b| {
                b.iter(|| {
                    for k in &ks {
                        black_box(dim_for_k(&an, k, mode).unwrap());
                    }
                })
            });
        }
    }
    g.finish();
}

fn form_matching(c: &mut Criterion) {
    let shifts: Vec<_> = (-7..=7).map(|s| q(s, 2)).chain([qi(0)]).collect();
    let s2: Vec<_> = (-3..=3).map(qi).collect();
    c.bench_function("match_w_form/16,7", |b| {
        b.iter(|| match_w_form(black_box(&q(23, 2)), [&shifts, &s2, &[]]))
    });
}

criterion_group!(benches, root_systems, analysis, dimensions, form_matching);
criterion_main!(benches);
