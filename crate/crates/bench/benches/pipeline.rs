//! Benchmarks of the heavy pipeline stages: decomposition, bottleneck
//! distance, the brute-force interleaving oracle, and level-set ingestion.

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use arcband_core::homology::VertexMap;
use arcband_core::random::{random_object, random_representation};
use arcband_core::{
    barcode, bottleneck, brute_force_interleaved, decompose, levelset_representation, Barcode,
    Field, OracleConfig, Quiver, SimplicialComplex, ZigzagDiagram,
};

fn zigzag22() -> Quiver {
    Quiver::cycle(vec![(2, 1), (2, 3), (4, 3), (4, 1)])
}

fn bench_decompose(c: &mut Criterion) {
    let quiver = zigzag22();
    for (name, field) in [("f5", Field::fp(5)), ("q", Field::Rational)] {
        c.bench_function(&format!("decompose_dim12_{name}"), |b| {
            let mut rng = ChaCha8Rng::seed_from_u64(1);
            b.iter_batched(
                || random_representation(&quiver, field, 4, 12, &mut rng),
                |rep| decompose(&rep, 0).unwrap(),
                BatchSize::SmallInput,
            )
        });
    }
}

fn bench_bottleneck(c: &mut Criterion) {
    let quiver = zigzag22();
    let field = Field::fp(5);
    c.bench_function("bottleneck_random_barcodes", |b| {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        b.iter_batched(
            || {
                let mk = |rng: &mut ChaCha8Rng| {
                    let objs: Vec<_> = (0..5)
                        .map(|_| random_object(&quiver, &field, 4, 5, rng))
                        .collect();
                    Barcode::new(&quiver, objs)
                };
                (mk(&mut rng), mk(&mut rng))
            },
            |(b1, b2)| bottleneck(&b1, &b2).unwrap(),
            BatchSize::SmallInput,
        )
    });
}

fn bench_oracle(c: &mut Criterion) {
    let quiver = zigzag22();
    let field = Field::fp(2);
    let cfg = OracleConfig::default();
    c.bench_function("oracle_dim6_delta2", |b| {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        b.iter_batched(
            || {
                (
                    random_representation(&quiver, field, 3, 6, &mut rng),
                    random_representation(&quiver, field, 3, 6, &mut rng),
                )
            },
            |(m, n)| brute_force_interleaved(&m, &n, 2, &cfg).unwrap_or(false),
            BatchSize::SmallInput,
        )
    });
}

fn bench_levelset(c: &mut Criterion) {
    // Two disjoint circles sampled at three singular/regular pairs.
    let two_circles = SimplicialComplex::from_maximal(&[
        vec![0, 1],
        vec![1, 2],
        vec![0, 2],
        vec![10, 11],
        vec![11, 12],
        vec![10, 12],
    ])
    .unwrap();
    let points = SimplicialComplex::from_maximal(&[vec![0], vec![10]]).unwrap();
    let id_map = || VertexMap([(0, 0), (10, 10)].into());
    let diagram = ZigzagDiagram {
        singular: vec![two_circles.clone(), two_circles.clone(), two_circles],
        regular: vec![points.clone(), points.clone(), points],
        a_maps: vec![id_map(), id_map(), id_map()],
        b_maps: vec![id_map(), id_map(), id_map()],
    };
    let field = Field::fp(5);
    c.bench_function("levelset_and_barcode", |b| {
        b.iter(|| {
            let rep = levelset_representation(&diagram, 0, field).unwrap();
            barcode(&rep, 0).unwrap()
        })
    });
}

criterion_group!(
    benches,
    bench_decompose,
    bench_bottleneck,
    bench_oracle,
    bench_levelset
);
criterion_main!(benches);
