use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use mkls_core::formulas::{equiv_y_uniform, equiv_y_uniform_via_definition};
use mkls_core::symfunc::lr_coefficients_uncached;
use mkls_core::{invariants, Matroid, Partition, QContext};

fn littlewood_richardson(c: &mut Criterion) {
    let a = Partition::new([4, 3, 2, 1]).unwrap();
    let b = Partition::new([3, 2, 1]).unwrap();
    c.bench_function("lr (4,3,2,1)x(3,2,1) uncached", |bench| {
        bench.iter(|| lr_coefficients_uncached(black_box(&a), black_box(&b)))
    });
    let hook = Partition::hook(5, 3).unwrap();
    let col = Partition::column(4);
    c.bench_function("lr hook x column uncached", |bench| {
        bench.iter(|| lr_coefficients_uncached(black_box(&hook), black_box(&col)))
    });
}

fn closed_forms(c: &mut Criterion) {
    c.bench_function("equiv Y U_{4,9} product form", |b| b.iter(|| equiv_y_uniform(black_box(4), 9)));
    c.bench_function("equiv Y U_{4,9} flat sum", |b| b.iter(|| equiv_y_uniform_via_definition(black_box(4), 9)));
    let y = equiv_y_uniform(3, 7).unwrap();
    c.bench_function("induced log-concavity Y U_{3,7}", |b| b.iter(|| black_box(&y).strongly_induced_logconcave()));
    let q = QContext::new(2).unwrap();
    c.bench_function("unipotent dim (5,3,2,1) q=2", |b| {
        let l = Partition::new([5, 3, 2, 1]).unwrap();
        b.iter(|| q.unipotent_dim(black_box(&l)))
    });
}

fn lattices(c: &mut Criterion) {
    let u = Matroid::uniform(4, 9).unwrap();
    c.bench_function("lattice invariants U_{4,9}", |b| b.iter(|| invariants(black_box(&u)).unwrap()));
    let sp = Matroid::sparse_paving(8, 4, &[vec![0, 1, 2, 3], vec![0, 1, 4, 5], vec![2, 3, 4, 5]]).unwrap();
    c.bench_function("lattice invariants sparse paving n=8", |b| b.iter(|| invariants(black_box(&sp)).unwrap()));
    let qn = Matroid::qniform(3, 4, 2).unwrap();
    c.bench_function("lattice invariants q-niform (3,4,2)", |b| b.iter(|| invariants(black_box(&qn)).unwrap()));
}

criterion_group!(benches, littlewood_richardson, closed_forms, lattices);
criterion_main!(benches);
