use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use deligne::diagrams::{hom_basis, Object};
use deligne::dims::dim_gl;
use deligne::invariants::harmonic_hilbert;
use deligne::par;
use deligne::partitions::{partitions_of, partitions_up_to, Partition};
use deligne::symfunc::kronecker;

type Mapper<T, R> = fn(&[T], &(dyn Fn(&T) -> R + Sync)) -> Vec<R>;

fn parallel<T: Sync, R: Send>(items: &[T], f: &(dyn Fn(&T) -> R + Sync)) -> Vec<R> {
    par::map(items, f)
}

fn sequential<T: Sync, R: Send>(items: &[T], f: &(dyn Fn(&T) -> R + Sync)) -> Vec<R> {
    par::map_sequential(items, f)
}

fn pairs(ps: &[Partition]) -> Vec<(Partition, Partition)> {
    ps.iter()
        .flat_map(|l| ps.iter().map(move |m| (l.clone(), m.clone())))
        .collect()
}

fn gram(c: &mut Criterion) {
    let obj = Object::o(4);
    let basis = hom_basis(&obj, &obj).unwrap();
    let cells: Vec<(usize, usize)> = (0..basis.len())
        .flat_map(|i| (0..basis.len()).map(move |j| (i, j)))
        .collect();
    let entry = |&(i, j): &(usize, usize)| {
        let (d, loops) = basis[i].compose(&basis[j]).unwrap();
        loops + d.closure_loops().unwrap()
    };
    let mut g = c.benchmark_group("gram_entries_o4");
    for (name, run) in [
        ("parallel", parallel as Mapper<_, _>),
        ("sequential", sequential as Mapper<_, _>),
    ] {
        g.bench_function(name, |b| b.iter(|| black_box(run(&cells, &entry))));
    }
    g.finish();
}

fn kron(c: &mut Criterion) {
    let mut g = c.benchmark_group("kronecker_sweep");
    for n in [5usize, 6] {
        let work = pairs(&partitions_of(n));
        let f = |(l, m): &(Partition, Partition)| kronecker(l, m).unwrap();
        g.bench_with_input(BenchmarkId::new("parallel", n), &work, |b, w| {
            b.iter(|| black_box(parallel(w, &f)))
        });
        g.bench_with_input(BenchmarkId::new("sequential", n), &work, |b, w| {
            b.iter(|| black_box(sequential(w, &f)))
        });
    }
    g.finish();
}

fn kostant_terms(c: &mut Criterion) {
    let trunc = 5;
    let work: Vec<(Partition, Partition)> =
        (0..=trunc).flat_map(|n| pairs(&partitions_of(n))).collect();
    let f = |(l, m): &(Partition, Partition)| {
        let h = harmonic_hilbert(l, m, trunc).unwrap();
        let d = dim_gl(l, m).unwrap();
        h.map(|x| d.scale(x))
    };
    let mut g = c.benchmark_group("kostant_terms");
    for (name, run) in [
        ("parallel", parallel as Mapper<_, _>),
        ("sequential", sequential as Mapper<_, _>),
    ] {
        g.bench_function(name, |b| b.iter(|| black_box(run(&work, &f))));
    }
    g.finish();
}

fn dims(c: &mut Criterion) {
    let work = pairs(&partitions_up_to(5));
    let f = |(l, m): &(Partition, Partition)| dim_gl(l, m).unwrap();
    let mut g = c.benchmark_group("dim_gl_sweep");
    for (name, run) in [
        ("parallel", parallel as Mapper<_, _>),
        ("sequential", sequential as Mapper<_, _>),
    ] {
        g.bench_function(name, |b| b.iter(|| black_box(run(&work, &f))));
    }
    g.finish();
}

criterion_group!(benches, gram, kron, kostant_terms, dims);
criterion_main!(benches);
