use ncquo::skew::{lshinv_traced, LshinvTrace};
use ncquo::{
    lshinv, make_lodo, rquo_via_lshinv, rshinv, skew_classical_div, DensePoly, GFp, Orientation,
    PolyRing, Ring, Sample, SkewPoly, SkewRing,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Lodo = SkewRing<PolyRing<GFp>>;
type Op = SkewPoly<PolyRing<GFp>>;

fn lodo() -> Lodo {
    make_lodo(127, "y", "D").unwrap()
}

fn op(l: &Lodo, c: &[&[i64]]) -> Op {
    let f = l.ring().base().clone();
    l.poly(
        c.iter()
            .map(|cs| l.ring().poly(cs.iter().map(|&v| f.elem(v)).collect()))
            .collect(),
    )
}

fn random_op(l: &Lodo, rng: &mut ChaCha8Rng, deg: usize, coeff_deg: usize) -> Op {
    let ring = l.ring().clone().with_sample_degree(coeff_deg);
    let mut c: Vec<_> = (0..deg).map(|_| ring.sample(rng)).collect();
    c.push(ring.one());
    l.poly(c)
}

#[test]
fn associativity() {
    let l = lodo();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..50 {
        let d: [usize; 3] = [
            rng.random_range(0..5),
            rng.random_range(0..5),
            rng.random_range(0..5),
        ];
        let [a, b, c] = d.map(|d| random_op(&l, &mut rng, d, 3));
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }
}

#[test]
fn commutation_with_constants() {
    let l = lodo();
    let ring = l.ring().clone().with_sample_degree(6);
    let x = l.x_pow(1);
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..50 {
        let c = ring.sample(&mut rng);
        let expected = l.poly(vec![c.derivative(), c.clone()]);
        assert_eq!(x.mul(&l.constant(c)), expected);
    }
}

#[test]
fn powers_agree_with_repeated_products() {
    let l = lodo();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let a = random_op(&l, &mut rng, 2, 2);
    let mut acc = l.one();
    for n in 0..6 {
        assert_eq!(a.pow(n), acc);
        acc = acc.mul(&a);
    }
}

#[test]
fn left_and_right_shifted_inverses_differ() {
    let l = lodo();
    // v = D^2 + y D
    let v = op(&l, &[&[], &[0, 1], &[1]]);
    let left = lshinv(&v, 4).unwrap();
    let right = rshinv(&v, 4).unwrap();
    assert_eq!(left, op(&l, &[&[2, 0, 1], &[0, 126], &[1]]));
    assert_eq!(right, op(&l, &[&[125, 0, 1], &[0, 126], &[1]]));
}

#[test]
fn lshinv_can_gain_only_one_term_per_pass() {
    let l = lodo();
    let v = op(&l, &[&[59, 110], &[123, 103, 63, 0, 34], &[1]]);
    let (h, k) = (12, 2);
    let (w, trace) = lshinv_traced(&v, h).unwrap();
    assert_eq!(
        w,
        skew_classical_div(&l.x_pow(h), &v, Orientation::Left)
            .unwrap()
            .0
    );
    // the residual degree falls by exactly one per pass: h - k evaluations
    let expected: Vec<_> = (1..=h - k).rev().map(Some).collect();
    assert_eq!(
        trace,
        LshinvTrace {
            residual_degrees: expected
        }
    );
    assert_eq!(trace.iterations(), h - k - 1);
    assert!(trace.iterations() > (((h - k) as f64).log2().ceil() as usize));
}

#[test]
fn right_quotients_from_lshinv() {
    let l = lodo();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..60 {
        let k = rng.random_range(1..5);
        let v = random_op(&l, &mut rng, k, 4);
        let n = rng.random_range(0..9);
        let u = random_op(&l, &mut rng, n, 4).sub(&l.x_pow(n));
        let (q, r) = rquo_via_lshinv(&u, &v).unwrap();
        assert_eq!(
            (q.clone(), r.clone()),
            skew_classical_div(&u, &v, Orientation::Right).unwrap()
        );
        assert_eq!(q.mul(&v).add(&r), u);
    }
}

#[test]
fn derivative_is_a_derivation() {
    let l = lodo();
    let ring = l.ring().clone().with_sample_degree(8);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100 {
        let a: DensePoly<GFp> = ring.sample(&mut rng);
        let b = ring.sample(&mut rng);
        let d = |p: &DensePoly<GFp>| l.ore().delta(p);
        assert_eq!(d(&ring.add(&a, &b)), ring.add(&d(&a), &d(&b)));
        assert_eq!(
            d(&ring.mul(&a, &b)),
            ring.add(&ring.mul(&a, &d(&b)), &ring.mul(&d(&a), &b))
        );
    }
}
