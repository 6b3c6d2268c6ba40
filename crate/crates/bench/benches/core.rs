use criterion::{black_box, criterion_group, criterion_main, BatchSize, Criterion};

use hws_core::codes::{brute_force_spectra, build_rm22, Budget};
use hws_core::exactalg::field_of_order;
use hws_core::matroid::{cycle_inventory, InventoryMethod, Matroid};
use hws_core::pipeline::{run_pipeline, Method};

fn field_ops(c: &mut Criterion) {
    for q in [4u32, 9, 16] {
        let f = field_of_order(q).unwrap();
        let elems: Vec<_> = f.elements().collect();
        c.bench_function(&format!("field/q{q}/mul_inv_table"), |b| {
            b.iter(|| {
                let mut acc = f.element(1);
                for &x in &elems {
                    for &y in &elems[1..] {
                        acc = f.add(acc, f.mul(x, f.inv(y)));
                    }
                }
                black_box(acc)
            })
        });
    }
}

fn brute_force(c: &mut Criterion) {
    let mut g = c.benchmark_group("brute_force");
    g.sample_size(10);
    for q in [2u32, 3] {
        let code = build_rm22(q).unwrap();
        g.bench_function(format!("q{q}/all_rows"), |b| {
            b.iter(|| brute_force_spectra(black_box(&code), 6, &Budget::default()).unwrap())
        });
    }
    g.finish();
}

fn inventory(c: &mut Criterion) {
    let mut g = c.benchmark_group("inventory");
    g.sample_size(10);
    for q in [3u32, 4] {
        let m = Matroid::from_code(&build_rm22(q).unwrap()).unwrap();
        g.bench_function(format!("q{q}/flats"), |b| {
            b.iter(|| cycle_inventory(&m, InventoryMethod::Flats, &Budget::default()).unwrap())
        });
    }
    g.finish();
}

fn pipeline(c: &mut Criterion) {
    let mut g = c.benchmark_group("pipeline");
    g.sample_size(10);
    for (q, method) in [(3u32, Method::FullMobius), (4, Method::FullMobius), (7, Method::BsAssisted), (9, Method::BsAssisted)] {
        g.bench_function(format!("q{q}/{method}"), |b| {
            b.iter_batched(|| q, |q| run_pipeline(q, method).unwrap(), BatchSize::SmallInput)
        });
    }
    g.finish();
}

criterion_group!(benches, field_ops, brute_force, inventory, pipeline);
criterion_main!(benches);
