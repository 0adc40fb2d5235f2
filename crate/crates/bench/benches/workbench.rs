use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use mtl_core::algebra::{lukasiewicz, nilpotent_minimum};
use mtl_core::enumeration::enumerate_chains;
use mtl_core::modeltheory::find_embeddings;
use mtl_core::{parse, Semantics};

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_chains");
    g.sample_size(10);
    for n in [5, 6, 7] {
        g.bench_function(format!("n={n}"), |b| {
            b.iter(|| enumerate_chains(black_box(n)).unwrap().count())
        });
    }
    g.finish();
}

fn tautology(c: &mut Criterion) {
    let formulas: Vec<_> = [
        "(x -> y) \\/ (y -> x)",
        "((x -> y) -> z) -> (((y -> x) -> z) -> z)",
        "(x & (x -> y)) -> (x /\\ y)",
        "~~x -> x",
    ]
    .iter()
    .map(|s| parse(s).unwrap())
    .collect();
    let chains = enumerate_chains(5).unwrap().into_algebras();
    c.bench_function("tautology sweep over order-5 chains", |b| {
        b.iter(|| {
            let mut valid = 0;
            for a in &chains {
                let sem = Semantics::new(a).unwrap();
                for f in &formulas {
                    valid += usize::from(sem.is_tautology(f).unwrap().holds);
                }
            }
            valid
        })
    });
}

fn embeddings(c: &mut Criterion) {
    let l3 = lukasiewicz(3).unwrap();
    let nm6 = nilpotent_minimum(6).unwrap();
    let l7 = lukasiewicz(7).unwrap();
    c.bench_function("embeddings L3 -> L7", |b| {
        b.iter(|| find_embeddings(&l3, &l7).unwrap().len())
    });
    c.bench_function("embeddings L3 -> NM6", |b| {
        b.iter(|| find_embeddings(&l3, &nm6).unwrap().len())
    });
}

criterion_group!(benches, enumeration, tautology, embeddings);
criterion_main!(benches);
