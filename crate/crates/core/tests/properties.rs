use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use jetscheme::field::FieldMap;
use jetscheme::groebner::{ideal_member, ideal_quotient, saturate, GbOptions, Ideal};
use jetscheme::jet::{base_change_ideal, jet_ideal, truncate_arc, TruncatedArc};
use jetscheme::random::{random_nonzero_polynomial, random_polynomial, standard_context};
use jetscheme::{
    parse_field, parse_polynomial, parse_variety, Field, FieldDescriptor, FieldElement, FieldHom, Poly,
    Polynomial, PrimeField, Rationals, VarietySpec,
};

fn fields() -> Vec<FieldDescriptor> {
    vec![
        FieldDescriptor::rationals(),
        FieldDescriptor::prime(2).unwrap(),
        FieldDescriptor::prime(5).unwrap(),
    ]
}

fn random_poly(seed: u64, ctx: &Arc<jetscheme::VariableContext>, k: &FieldDescriptor, degree: u32) -> Poly {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_polynomial(&mut rng, ctx, k, degree, 4)
}

/// `c0 + c1 s + ... ` in `Fp(s)`.
fn element(k: &FieldDescriptor, coeffs: &[i64]) -> FieldElement {
    let s = k.generator("s").unwrap();
    coeffs.iter().rev().fold(k.zero(), |acc, &c| k.add(&k.mul(&acc, &s), &k.from_i64(c)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn expansion_is_multiplicative(seed in any::<u64>(), nvars in 1usize..=3, n in 0usize..=3, which in 0usize..3) {
        let k = &fields()[which];
        let ctx = standard_context(nvars);
        let f = random_poly(seed, &ctx, k, 3);
        let g = random_poly(seed ^ 0xabcdef, &ctx, k, 3);
        let jf = jet_ideal(&ctx, k, &[f.clone(), g.clone(), &f * &g], n).unwrap();
        for i in 0..=n {
            let mut conv = Polynomial::zero(jf.ctx(), k);
            for a in 0..=i {
                conv = &conv + &(jf.generator(a, 0) * jf.generator(i - a, 1));
            }
            prop_assert_eq!(&conv, jf.generator(i, 2));
        }
    }

    #[test]
    fn expansion_is_additive_and_fixes_constants(seed in any::<u64>(), n in 0usize..=3, c in -9i64..=9) {
        let k = FieldDescriptor::rationals();
        let ctx = standard_context(2);
        let f = random_poly(seed, &ctx, &k, 3);
        let g = random_poly(seed.wrapping_add(1), &ctx, &k, 3);
        let konst = Polynomial::constant(&ctx, &k, k.from_i64(c));
        let j = jet_ideal(&ctx, &k, &[f.clone(), g.clone(), &f + &g, konst], n).unwrap();
        for i in 0..=n {
            prop_assert_eq!(&(j.generator(i, 0) + j.generator(i, 1)), j.generator(i, 2));
            let expected = if i == 0 { Polynomial::constant(j.ctx(), &k, k.from_i64(c)) } else { Polynomial::zero(j.ctx(), &k) };
            prop_assert_eq!(j.generator(i, 3), &expected);
        }
    }

    #[test]
    fn leibniz_rule(seed in any::<u64>(), var in 0usize..3, which in 0usize..3) {
        let k = &fields()[which];
        let ctx = standard_context(3);
        let f = random_poly(seed, &ctx, k, 4);
        let g = random_poly(!seed, &ctx, k, 4);
        let lhs = (&f * &g).partial_derivative(var);
        let rhs = &(&f.partial_derivative(var) * &g) + &(&f * &g.partial_derivative(var));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn first_jet_is_the_differential(seed in any::<u64>(), nvars in 1usize..=3, which in 0usize..3) {
        let k = &fields()[which];
        let ctx = standard_context(nvars);
        let f = random_poly(seed, &ctx, k, 4);
        let j = jet_ideal(&ctx, k, &[f.clone()], 2).unwrap();
        let mut d = Polynomial::zero(j.ctx(), k);
        for v in 0..nvars {
            d = &d + &(&j.lift_base(&f.partial_derivative(v)) * &j.variable(v, 1));
        }
        prop_assert_eq!(&d, j.generator(1, 0));
        prop_assert_eq!(&j.lift_base(&f), j.generator(0, 0));
    }

    #[test]
    fn rational_field_axioms(a in -50i64..50, b in -50i64..50, c in 1i64..50, d in -50i64..50) {
        let k = Rationals;
        let x = k.div(&k.from_i64(a), &k.from_i64(c)).unwrap();
        let y = k.from_i64(b);
        let z = k.from_i64(d);
        prop_assert_eq!(k.mul(&x, &k.add(&y, &z)), k.add(&k.mul(&x, &y), &k.mul(&x, &z)));
        prop_assert_eq!(k.add(&x, &k.neg(&x)), k.zero());
        if !k.is_zero(&x) {
            prop_assert_eq!(k.mul(&x, &k.inv(&x).unwrap()), k.one());
        }
    }

    #[test]
    fn prime_field_axioms(p in prop::sample::select(vec![2u64, 3, 5, 7, 101, 65_521]), a in any::<i64>(), b in any::<i64>()) {
        let k = PrimeField::new(p).unwrap();
        let (x, y) = (k.from_i64(a), k.from_i64(b));
        prop_assert_eq!(k.mul(&x, &y), k.mul(&y, &x));
        prop_assert_eq!(k.sub(&k.add(&x, &y), &y), x);
        prop_assert_eq!(k.pow(&x, p), x);
        if !k.is_zero(&x) {
            prop_assert_eq!(k.mul(&x, &k.inv(&x).unwrap()), k.one());
            prop_assert_eq!(k.pow(&x, p - 1), k.one());
        }
    }

    #[test]
    fn rational_function_field_axioms(a in prop::collection::vec(-3i64..=3, 1..4), b in prop::collection::vec(-3i64..=3, 1..4), c in prop::collection::vec(-3i64..=3, 1..4)) {
        let k = parse_field("Fp(3)(s)").unwrap();
        let (x, y, z) = (element(&k, &a), element(&k, &b), element(&k, &c));
        prop_assert_eq!(k.mul(&x, &k.add(&y, &z)), k.add(&k.mul(&x, &y), &k.mul(&x, &z)));
        if !k.is_zero(&y) {
            let q = k.div(&x, &y).unwrap();
            prop_assert_eq!(k.mul(&q, &y), x);
        }
    }

    #[test]
    fn field_hom_laws(a in prop::collection::vec(-3i64..=3, 1..4), b in prop::collection::vec(-3i64..=3, 1..4)) {
        let ks = parse_field("Fp(2)(s)").unwrap();
        let ku = parse_field("Fp(2)(u)").unwrap();
        let u = ku.generator("u").unwrap();
        let h = FieldHom::new(&ks, &ku, vec![ku.mul(&u, &u)]).unwrap();
        let (x, y) = (element(&ks, &a), element(&ks, &b));
        prop_assert_eq!(h.apply(&ks.add(&x, &y)).unwrap(), ku.add(&h.apply(&x).unwrap(), &h.apply(&y).unwrap()));
        prop_assert_eq!(h.apply(&ks.mul(&x, &y)).unwrap(), ku.mul(&h.apply(&x).unwrap(), &h.apply(&y).unwrap()));
        prop_assert_eq!(h.apply(&ks.one()).unwrap(), ku.one());
        if !ks.is_zero(&y) {
            let q = ks.div(&x, &y).unwrap();
            prop_assert_eq!(h.apply(&q).unwrap(), ku.div(&h.apply(&x).unwrap(), &h.apply(&y).unwrap()).unwrap());
        }
    }

    #[test]
    fn base_change_commutes_with_expansion(seed in any::<u64>(), n in 0usize..=2) {
        let ks = parse_field("Fp(2)(s)").unwrap();
        let ku = parse_field("Fp(2)(u)").unwrap();
        let u = ku.generator("u").unwrap();
        let h = FieldHom::new(&ks, &ku, vec![ku.mul(&u, &u)]).unwrap();
        let ctx = standard_context(3);
        let s = Polynomial::constant(&ctx, &ks, ks.generator("s").unwrap());
        let f = &random_poly(seed, &ctx, &ks, 3) + &(&s * &random_poly(!seed, &ctx, &ks, 2));
        let mapped = base_change_ideal(&jet_ideal(&ctx, &ks, &[f.clone()], n).unwrap(), &h).unwrap();
        let direct = jet_ideal(&ctx, &ku, &[f.map_coefficients(&h).unwrap()], n).unwrap();
        prop_assert_eq!(mapped, direct);
    }

    #[test]
    fn polynomial_round_trips_through_text(seed in any::<u64>(), which in 0usize..3) {
        let k = &fields()[which];
        let ctx = standard_context(4);
        let f = random_poly(seed, &ctx, k, 5);
        prop_assert_eq!(parse_polynomial(&f.to_string(), &ctx, k).unwrap(), f);
    }

    #[test]
    fn variety_round_trips_through_text(seed in any::<u64>(), count in 0usize..3, codim in prop::option::of(1usize..=2)) {
        let k = parse_field("Fp(3)(a)").unwrap();
        let ctx = standard_context(3);
        let a = Polynomial::constant(&ctx, &k, k.generator("a").unwrap());
        let gens: Vec<Poly> = (0..count as u64)
            .map(|i| &random_poly(seed.wrapping_add(i), &ctx, &k, 3) - &a)
            .collect();
        let spec = VarietySpec::new(k, ctx, gens, codim);
        let back = parse_variety(&spec.to_string()).unwrap();
        prop_assert_eq!(back.to_string(), spec.to_string());
        prop_assert_eq!(back, spec);
    }

    #[test]
    fn truncation_preserves_jet_points(x1 in -3i64..=3, c in -3i64..=3) {
        // The curve y = x^2 through x = 1 + x1 t + c t^2.
        let k = FieldDescriptor::rationals();
        let ctx = standard_context(2);
        let f = parse_polynomial("y - x^2", &ctx, &k).unwrap();
        let x = [1, x1, c];
        let y = [1, 2 * x1, x1 * x1 + 2 * c];
        let arc = TruncatedArc::new(&k, 2, vec![
            x.iter().map(|&v| k.from_i64(v)).collect(),
            y.iter().map(|&v| k.from_i64(v)).collect(),
        ]).unwrap();
        for n in 0..=2 {
            let jet = jet_ideal(&ctx, &k, &[f.clone()], n).unwrap();
            let values = jetscheme::jet::evaluate_jet_point(&jet, &truncate_arc(&arc, n).unwrap()).unwrap();
            prop_assert!(values.iter().all(|v| k.is_zero(v)));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn saturation_laws(seed in any::<u64>(), which in 0usize..3) {
        let gb = GbOptions::default();
        let k = &fields()[which];
        let ctx = standard_context(3);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let gens: Vec<Poly> = (0..2).map(|_| random_nonzero_polynomial(&mut rng, &ctx, k, 3, 3)).collect();
        let f = random_nonzero_polynomial(&mut rng, &ctx, k, 2, 2);
        let ideal = Ideal::new(&ctx, k, gens.clone()).unwrap();
        let sat = saturate(&ideal, &f, &gb).unwrap();
        for g in &gens {
            prop_assert!(ideal_member(g, &sat, &gb).unwrap());
        }
        let twice = saturate(&sat, &f, &gb).unwrap();
        for g in twice.generators() {
            prop_assert!(ideal_member(g, &sat, &gb).unwrap());
        }
        let quotient = ideal_quotient(&ideal, &f, &gb).unwrap();
        for g in quotient.generators() {
            prop_assert!(ideal_member(&(&f * g), &ideal, &gb).unwrap());
            prop_assert!(ideal_member(g, &sat, &gb).unwrap());
        }
    }

    #[test]
    fn groebner_generators_reduce_to_zero(seed in any::<u64>(), which in 0usize..3) {
        let gb = GbOptions::default();
        let k = &fields()[which];
        let ctx = standard_context(3);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let gens: Vec<Poly> = (0..3).map(|_| random_nonzero_polynomial(&mut rng, &ctx, k, 3, 3)).collect();
        let basis = Ideal::new(&ctx, k, gens.clone()).unwrap().groebner_default(&gb).unwrap();
        prop_assert!(basis.is_reduced() && basis.is_confluent());
        for g in &gens {
            prop_assert!(basis.normal_form(g).unwrap().is_zero());
        }
    }
}

#[test]
fn pth_powers_in_rational_function_fields() {
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(200);
    for p in [2u64, 3, 5] {
        let k = parse_field(&format!("Fp({p})(s)")).unwrap();
        let s = k.generator("s").unwrap();
        let mut seen = 0;
        while seen < 200 {
            let num: Vec<i64> = (0..rng.gen_range(1..5)).map(|_| rng.gen_range(0..p as i64)).collect();
            let den: Vec<i64> = (0..rng.gen_range(1..4)).map(|_| rng.gen_range(0..p as i64)).collect();
            let (num, den) = (element(&k, &num), element(&k, &den));
            if k.is_zero(&num) || k.is_zero(&den) {
                continue;
            }
            let c = k.div(&num, &den).unwrap();
            let power = k.pow(&c, p);
            assert!(k.is_pth_power(&power).unwrap(), "p = {p}: {}", k.format_element(&power));
            // s times a nonzero p-th power has nonzero derivative c^p.
            let shifted = k.mul(&s, &power);
            assert!(!k.is_pth_power(&shifted).unwrap(), "p = {p}: {}", k.format_element(&shifted));
            seen += 1;
        }
    }
}
