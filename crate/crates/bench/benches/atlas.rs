use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use hecke_atlas::hecke::{derived_table, Kind};
use hecke_atlas::params::{brute_force_supercuspidals, count_supercuspidals};
use hecke_atlas::support::cuspidal_pairs;
use hecke_atlas::weyl::{orbit_stabilizers_in, weyl_group, LeviNormalizer};
use hecke_atlas::Sign;
use hecke_atlas_bench::{decorated_levis, normed_workload, supercuspidal_workload};

fn counting(c: &mut Criterion) {
    let (inv, params) = supercuspidal_workload(9);
    let mut g = c.benchmark_group("supercuspidal counts");
    g.bench_function("closed form", |b| {
        b.iter(|| {
            params
                .iter()
                .map(|p| count_supercuspidals(&inv, p, Sign::Plus).unwrap())
                .sum::<u64>()
        })
    });
    g.bench_function("brute force", |b| {
        b.iter(|| {
            params
                .iter()
                .map(|p| brute_force_supercuspidals(&inv, p, Sign::Plus).unwrap())
                .sum::<u64>()
        })
    });
    g.finish();
}

fn supports(c: &mut Criterion) {
    let (inv, params) = normed_workload(8);
    c.bench_function("cuspidal pairs of normed corpus", |b| {
        b.iter(|| {
            params
                .iter()
                .map(|p| cuspidal_pairs(&inv, p).unwrap().pairs.len())
                .sum::<usize>()
        })
    });
}

fn tables(c: &mut Criterion) {
    let mut g = c.benchmark_group("derived tables");
    for kind in Kind::all() {
        g.bench_with_input(BenchmarkId::new(kind.name(), 8), &8, |b, &rank| {
            b.iter(|| derived_table(kind, black_box(rank)).unwrap())
        });
    }
    g.finish();
}

fn stabilizers(c: &mut Criterion) {
    let group = weyl_group(3, true).unwrap();
    let cases = decorated_levis(3, 3);
    c.bench_function("orbit stabilizers, rank 3", |b| {
        b.iter(|| {
            let mut n = 0;
            for (levi, decs) in &cases {
                let ln = LeviNormalizer::new(&group, levi);
                for d in decs {
                    n += orbit_stabilizers_in(&ln, d).r;
                }
            }
            n
        })
    });
}

criterion_group!(benches, counting, supports, tables, stabilizers);
criterion_main!(benches);
