//! Compares the rayon data-parallel inner loops against the sequential
//! fallback on the three bulk scans: the feasible-element transversal scan,
//! fixed-order subgroup growth, and the low-index homomorphism search.
//!
//! Run with `cargo bench -p heptasym-core` (the default `parallel` feature
//! is required so both paths are compiled).

use criterion::{criterion_group, criterion_main, Criterion};

use heptasym_core::atlas::builtin_group;
use heptasym_core::chain::StabilizerChain;
use heptasym_core::exec::{map_collect_par, map_collect_seq};
use heptasym_core::group::{closure_capped, PermGroup};
use heptasym_core::perm::Permutation;
use heptasym_core::search::{right_transversal, SearchBudget};

/// The per-candidate work of the feasible scan: square test, meet order,
/// generation test.
fn feasible_candidate(m: &PermGroup, mv: &PermGroup, g: &Permutation) -> bool {
    if !mv.contains(&g.compose(g)).unwrap() {
        return false;
    }
    let conj = PermGroup::new(
        m.degree(),
        mv.gens().iter().map(|x| x.conjugate_by(g)).collect(),
    )
    .unwrap();
    let budget = SearchBudget::default();
    let meet = heptasym_core::search::intersection(mv, &conj, &budget).unwrap();
    if meet.order_u64().unwrap() * 7 != mv.order_u64().unwrap() {
        return false;
    }
    let mut span = mv.gens().to_vec();
    span.push(g.clone());
    *StabilizerChain::build(m.degree(), &span).order() == m.order()
}

fn bench_feasible_scan(c: &mut Criterion) {
    let m = builtin_group("A:8").unwrap();
    let mv = m.point_stabilizer(7).unwrap();
    let k = mv.point_stabilizer(6).unwrap();
    let budget = SearchBudget::default();
    let n_k = heptasym_core::search::normalizer(&m, &k, &budget).unwrap();
    let reps = right_transversal(&n_k, &k, &budget).unwrap();
    // replicate the transversal to give the scan some width
    let mut work: Vec<Permutation> = Vec::new();
    for _ in 0..24 {
        work.extend(reps.iter().cloned());
    }
    let mut group = c.benchmark_group("feasible_scan");
    group.bench_function("seq", |b| {
        b.iter(|| {
            map_collect_seq(&work, |g| feasible_candidate(&m, &mv, g))
                .into_iter()
                .filter(|&x| x)
                .count()
        })
    });
    group.bench_function("par", |b| {
        b.iter(|| {
            map_collect_par(&work, |g| feasible_candidate(&m, &mv, g))
                .into_iter()
                .filter(|&x| x)
                .count()
        })
    });
    group.finish();
}

fn bench_order_growth(c: &mut Criterion) {
    let a7 = builtin_group("A:7").unwrap();
    let p7 = PermGroup::from_cycles(7, &["(0 1 2 3 4 5 6)"]).unwrap();
    let budget = SearchBudget::default();
    let reps = right_transversal(&a7, &p7, &budget).unwrap();
    let gens = p7.gens().to_vec();
    let grow = |t: &Permutation| -> Option<usize> {
        let mut cand = gens.clone();
        cand.push(t.clone());
        closure_capped(&cand, 7, 168).map(|s| s.len())
    };
    let mut group = c.benchmark_group("order_growth");
    group.bench_function("seq", |b| {
        b.iter(|| map_collect_seq(&reps, grow).into_iter().flatten().sum::<usize>())
    });
    group.bench_function("par", |b| {
        b.iter(|| map_collect_par(&reps, grow).into_iter().flatten().sum::<usize>())
    });
    group.finish();
}

fn bench_lowindex_pairs(c: &mut Criterion) {
    // the hom-search inner loop: diagonal chain order checks
    let a7 = builtin_group("A:7").unwrap();
    let g1 = a7.gens()[0].clone();
    let g2 = a7.gens()[1].clone();
    let s7 = builtin_group("S:7").unwrap();
    let candidates: Vec<Permutation> = s7
        .elements(5040)
        .unwrap()
        .into_iter()
        .filter(|t| g2.order() % t.order() == 0)
        .take(600)
        .collect();
    let paired = |a: &Permutation, b: &Permutation| -> Permutation {
        let mut images: Vec<usize> = a.images().to_vec();
        images.extend(b.images().iter().map(|&y| y + 7));
        Permutation::from_images(images).unwrap()
    };
    let t1 = Permutation::parse("(0 1 2)", 7).unwrap();
    let first = paired(&g1, &t1);
    let check = |t2: &Permutation| -> bool {
        let gens = vec![first.clone(), paired(&g2, t2)];
        StabilizerChain::build(14, &gens).order_u64() == Some(2520)
    };
    let mut group = c.benchmark_group("lowindex_pairs");
    group.bench_function("seq", |b| {
        b.iter(|| map_collect_seq(&candidates, check).into_iter().filter(|&x| x).count())
    });
    group.bench_function("par", |b| {
        b.iter(|| map_collect_par(&candidates, check).into_iter().filter(|&x| x).count())
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_feasible_scan,
    bench_order_growth,
    bench_lowindex_pairs
);
criterion_main!(benches);
