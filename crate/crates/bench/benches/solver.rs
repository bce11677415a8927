use criterion::{black_box, criterion_group, criterion_main, Criterion};

use domchrom_bench::petersen;
use domchrom_core::{
    chromatic_number, dominated_chromatic_number, make_family, oracle_dominated_chromatic,
    total_dominator_chromatic_number, FamilySpec,
};

fn bench_dominated(c: &mut Criterion) {
    let mut group = c.benchmark_group("chidom");
    for (name, spec) in [
        ("P_12", FamilySpec::Path(12)),
        ("C_16", FamilySpec::Cycle(16)),
        ("W_8", FamilySpec::Wheel(8)),
        ("K_8", FamilySpec::Complete(8)),
    ] {
        let g = make_family(spec).unwrap();
        group.bench_function(name, |b| {
            b.iter(|| black_box(dominated_chromatic_number(black_box(&g)).unwrap().value))
        });
    }
    let spider = {
        let star = make_family(FamilySpec::Star(3)).unwrap();
        domchrom_core::subdivide(&star, 5).unwrap().0
    };
    group.bench_function("star3_sub5", |b| {
        b.iter(|| {
            black_box(
                dominated_chromatic_number(black_box(&spider))
                    .unwrap()
                    .value,
            )
        })
    });
    group.finish();
}

fn bench_chi_and_td(c: &mut Criterion) {
    let pet = petersen();
    c.bench_function("chi/petersen", |b| {
        b.iter(|| black_box(chromatic_number(black_box(&pet)).unwrap().value))
    });
    let w6 = make_family(FamilySpec::Wheel(6)).unwrap();
    c.bench_function("chidt/W_6", |b| {
        b.iter(|| {
            black_box(
                total_dominator_chromatic_number(black_box(&w6))
                    .unwrap()
                    .value,
            )
        })
    });
}

fn bench_oracle(c: &mut Criterion) {
    let c6 = make_family(FamilySpec::Cycle(6)).unwrap();
    c.bench_function("oracle/C_6", |b| {
        b.iter(|| black_box(oracle_dominated_chromatic(black_box(&c6)).unwrap()))
    });
}

criterion_group!(benches, bench_dominated, bench_chi_and_td, bench_oracle);
criterion_main!(benches);
