use ncmono::algebra::operators::Algebra;
use ncmono::algebra::radial::RadialFunction;
use ncmono::algebra::word::{Primitive, Word, WordFactor};
use ncmono::fock::Mode;
use ncmono::residual::Window;
use ncmono::sector::{build_sector, inner_product, MonopoleSector, SectorVector};
use ncmono::C64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_vector(s: MonopoleSector, seed: u64) -> SectorVector {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let data = (0..s.dim())
        .map(|_| C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
        .collect();
    SectorVector::from_vec(s, data).unwrap()
}

fn primitive(code: u8) -> Primitive {
    let mode = if code & 1 == 0 { Mode::ONE } else { Mode::TWO };
    match (code >> 1) % 4 {
        0 => Primitive::a(mode),
        1 => Primitive::a_dag(mode),
        2 => Primitive::b(mode),
        _ => Primitive::b_dag(mode),
    }
}

fn diff(a: &SectorVector, b: &SectorVector) -> f64 {
    a.data().iter().zip(b.data()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

fn sector_strategy() -> impl Strategy<Value = (i32, usize)> {
    (-3i32..=3, 3usize..=7).prop_filter("non-empty", |(k, n)| k.unsigned_abs() as usize <= *n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lazy_matches_materialized(
        (kappa, n_max) in sector_strategy(),
        codes in prop::collection::vec(0u8..8, 1..5),
        radial in any::<bool>(),
        seed in any::<u64>(),
    ) {
        let s = build_sector(kappa, n_max, 1.0).unwrap();
        let mut factors: Vec<WordFactor> = codes.iter().map(|&c| WordFactor::Ladder(primitive(c))).collect();
        if radial {
            factors.insert(1.min(factors.len()), WordFactor::Radial(RadialFunction::inv_r()));
        }
        let w = Word::new(factors);
        let x = random_vector(s, seed);
        let lazy = w.apply(&x);
        let dense = w.materialize(s).apply(&x);
        prop_assert_eq!(lazy.sector(), dense.sector());
        prop_assert!(diff(&lazy, &dense) <= 1e-12);
    }

    #[test]
    fn level_shift_bookkeeping(
        (kappa, n_max) in sector_strategy(),
        codes in prop::collection::vec(0u8..8, 1..5),
    ) {
        let s = build_sector(kappa, n_max, 1.0).unwrap();
        let prims: Vec<Primitive> = codes.iter().map(|&c| primitive(c)).collect();
        let w = Word::ladders(&prims);
        let op = w.materialize(s);
        let dk: i32 = prims.iter().map(Primitive::kappa_shift).sum();
        let dn: i32 = prims.iter().map(Primitive::level_shift).sum();
        prop_assert_eq!(op.tgt().kappa(), kappa + dk);
        prop_assert_eq!(w.kappa_shift(), dk);
        for shift in op.measured_shifts() {
            prop_assert_eq!(shift, dn);
        }
    }

    #[test]
    fn inner_product_is_sesquilinear(
        (kappa, n_max) in sector_strategy(),
        seed in any::<u64>(),
        a in (-2.0f64..2.0, -2.0f64..2.0),
        b in (-2.0f64..2.0, -2.0f64..2.0),
    ) {
        let s = build_sector(kappa, n_max, 0.8).unwrap();
        let (phi, psi, chi) = (random_vector(s, seed), random_vector(s, seed ^ 1), random_vector(s, seed ^ 2));
        let (a, b) = (C64::new(a.0, a.1), C64::new(b.0, b.1));
        let mut comb = SectorVector::zeros(s);
        comb.axpy(a, &psi);
        comb.axpy(b, &chi);
        let lhs = inner_product(&phi, &comb).unwrap();
        let rhs = a * inner_product(&phi, &psi).unwrap() + b * inner_product(&phi, &chi).unwrap();
        let scale = 1f64.max(lhs.norm());
        prop_assert!((lhs - rhs).norm() <= 1e-12 * scale);
        let conj = inner_product(&comb, &phi).unwrap().conj();
        prop_assert!((lhs - conj).norm() <= 1e-12 * scale);
        prop_assert!(inner_product(&phi, &phi).unwrap().re > 0.0);
    }

    #[test]
    fn weighted_adjoint_defines_adjoint(
        (kappa, n_max) in sector_strategy(),
        code in 0u8..8,
        seed in any::<u64>(),
    ) {
        let s = build_sector(kappa, n_max, 1.3).unwrap();
        let op = Word::ladders(&[primitive(code), primitive(code ^ 3)]).materialize(s);
        let adj = op.weighted_adjoint();
        prop_assert_eq!(adj.weighted_adjoint().to_dense(), op.to_dense());
        let (x, y) = (random_vector(*op.tgt(), seed), random_vector(s, seed ^ 7));
        let lhs = inner_product(&x, &op.apply(&y)).unwrap();
        let rhs = inner_product(&adj.apply(&x), &y).unwrap();
        prop_assert!((lhs - rhs).norm() <= 1e-11 * 1f64.max(lhs.norm()));
    }

    #[test]
    fn windows_respect_the_cutoff((kappa, n_max) in sector_strategy(), guard in 0usize..5) {
        let s = build_sector(kappa, n_max, 1.0).unwrap();
        let w = Window::new(s, guard);
        for &n in &w.blocks {
            prop_assert!(s.contains_block(n));
            prop_assert!(n.max(s.out_level(n)) + guard <= n_max);
        }
        prop_assert_eq!(w.blocks.len(), s.blocks().filter(|&n| s.top_level(n) + guard <= n_max).count());
    }

    #[test]
    fn central_element_is_kappa((kappa, n_max) in sector_strategy(), seed in any::<u64>()) {
        let s = build_sector(kappa, n_max, 1.0).unwrap();
        let alg = Algebra::new(s);
        let w = Window::new(s, 1);
        prop_assert!(alg.central_charge(&w).residual <= 1e-14);
        let x = random_vector(s, seed);
        let y = alg.central_shifted().apply(&x);
        for &n in &w.blocks {
            let (a, b) = (x.block(n), y.block(n));
            for (p, q) in a.iter().zip(b.iter()) {
                prop_assert!((*p * kappa as f64 - q).norm() <= 1e-12);
            }
        }
    }
}
