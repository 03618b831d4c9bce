use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ncquo::bench::{self, BenchConfig, BenchMethod, BenchRing};
use ncquo::{DensePoly, Execution, GFp, MatrixRing, MulOptions, Refine, Sample};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const EXECUTIONS: [Execution; 2] = [Execution::Sequential, Execution::Parallel];

fn batch_divisions(c: &mut Criterion) {
    let mut group = c.benchmark_group("batch_divisions");
    group.sample_size(10);
    for exec in EXECUTIONS {
        let cfg = BenchConfig {
            degrees: vec![64],
            ring: BenchRing::Matrix { n: 3, p: 127 },
            repeat: 8,
            methods: vec![BenchMethod::Classical, BenchMethod::Refine(Refine::Three)],
            exec,
            timing: false,
            ..Default::default()
        };
        group.bench_function(BenchmarkId::from_parameter(format!("{exec:?}")), |b| {
            b.iter(|| bench::run(&cfg).unwrap())
        });
    }
    group.finish();
}

fn large_product(c: &mut Criterion) {
    let ring = MatrixRing::new(GFp::new(127).unwrap(), 3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut random = |n: usize| {
        DensePoly::new(
            ring.clone(),
            (0..n).map(|_| ring.sample(&mut rng)).collect(),
        )
    };
    let (a, b) = (random(1024), random(1024));
    let mut group = c.benchmark_group("karatsuba_1024");
    group.sample_size(10);
    for exec in EXECUTIONS {
        let opts = MulOptions {
            exec,
            ..MulOptions::default()
        };
        group.bench_function(BenchmarkId::from_parameter(format!("{exec:?}")), |bench| {
            bench.iter(|| a.mul_with(&b, opts))
        });
    }
    group.finish();
}

criterion_group!(benches, batch_divisions, large_product);
criterion_main!(benches);
