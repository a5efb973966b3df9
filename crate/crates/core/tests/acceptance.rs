//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use jetscheme::greenberg::{
    enumerate_jets, greenberg_scan, hensel_cross_check, image_truncation, DEFAULT_BUDGET,
};
use jetscheme::groebner::{
    ideal_member, krull_dimension, radical_member, saturate, GbOptions, GroebnerBasis, MonomialOrder,
};
use jetscheme::jet::{hs_coefficient_char0, iterated_jet_ideal, jet_ideal, TruncatedArc};
use jetscheme::random::{random_nonzero_polynomial, random_polynomial, standard_context};
use jetscheme::{
    parse_field, parse_polynomial, run_scenario, Field, FieldDescriptor, Poly, Polynomial, Rationals,
    ScenarioOptions, VariableContext,
};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn poly(text: &str, ctx: &Arc<VariableContext>, k: &FieldDescriptor) -> Poly {
    parse_polynomial(text, ctx, k).expect("well-formed test polynomial")
}

fn scenario(name: &str, opts: ScenarioOptions) -> Result<(), String> {
    let report = run_scenario(name, &opts).map_err(|e| format!("{name}: {e}"))?;
    let failed: Vec<String> = report
        .checks
        .iter()
        .filter(|c| c.verdict != jetscheme::Verdict::Pass)
        .map(|c| format!("{} ({})", c.name, c.evidence))
        .collect();
    ensure(failed.is_empty(), format!("{}: {}", report.scenario, failed.join("; ")))
}

fn substitution_matches_derivation() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut agreed = 0;
    for case in 0..100 {
        let ctx = standard_context(rng.gen_range(1..=3));
        let f = random_nonzero_polynomial(&mut rng, &ctx, &Rationals, 4, 4);
        let n = rng.gen_range(0..=4);
        let jet = jet_ideal(&ctx, &Rationals, &[f.clone()], n).map_err(|e| e.to_string())?;
        for i in 0..=n {
            let hs = hs_coefficient_char0(&f, i, n).map_err(|e| e.to_string())?;
            ensure(
                &hs == jet.generator(i, 0),
                format!("case {case}: f = {f}, i = {i}: {hs} vs {}", jet.generator(i, 0)),
            )?;
        }
        agreed += 1;
    }
    Ok(format!("{agreed}/100 polynomials agree at every level"))
}

fn count_counterexample() -> Outcome {
    for p in [2u64, 3] {
        scenario("count-counterexample", ScenarioOptions { p: Some(p), ..Default::default() })?;
        // First jet from the chain rule, independent of the expansion.
        let k = parse_field(&format!("Fp({p})(a)")).map_err(|e| e.to_string())?;
        let ctx = VariableContext::new(&["x", "y", "z"]).unwrap();
        let f = poly(&format!("x^{p} + y*z^{p} - a"), &ctx, &k);
        let jet = jet_ideal(&ctx, &k, &[f.clone()], 1).map_err(|e| e.to_string())?;
        let mut chain = Polynomial::zero(jet.ctx(), &k);
        for j in 0..3 {
            chain = &chain + &(&jet.lift_base(&f.partial_derivative(j)) * &jet.variable(j, 1));
        }
        let expected = poly(&format!("y1*z0^{p}"), jet.ctx(), &k);
        ensure(chain == expected, format!("p = {p}: chain rule gives {chain}"))?;
        ensure(jet.generator(1, 0) == &expected, format!("p = {p}: F_1 = {}", jet.generator(1, 0)))?;
    }
    Ok("p = 2, 3: six checks each, F_1 = y1*z0^p".into())
}

fn inseparable_radical() -> Outcome {
    let gb = GbOptions::default();
    let mut checked = 0;
    for p in [2u64, 3] {
        let k = parse_field(&format!("Fp({p})(a)")).map_err(|e| e.to_string())?;
        let ctx = VariableContext::new(&["x"]).unwrap();
        let f = poly(&format!("x^{p} - a"), &ctx, &k);
        for n in 0..=6usize {
            let jet = jet_ideal(&ctx, &k, &[f.clone()], n).map_err(|e| e.to_string())?;
            let ideal = jet.ideal();
            for i in 0..=n {
                let got = radical_member(&jet.variable(0, i), &ideal, &gb).map_err(|e| e.to_string())?;
                let expected = i >= 1 && i as u64 * p <= n as u64;
                ensure(got == expected, format!("p = {p}, n = {n}, i = {i}: got {got}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} radical memberships match"))
}

fn etale_jets() -> Outcome {
    let gb = GbOptions::default();
    let k = FieldDescriptor::rationals();
    let ctx = VariableContext::new(&["x"]).unwrap();
    let f = poly("x^2 + 1", &ctx, &k);
    let mut checked = 0;
    for n in 1..=5 {
        let jet = jet_ideal(&ctx, &k, &[f.clone()], n).map_err(|e| e.to_string())?;
        let ideal = jet.ideal();
        for i in 1..=n {
            let inside = ideal_member(&jet.variable(0, i), &ideal, &gb).map_err(|e| e.to_string())?;
            ensure(inside, format!("x{i} not in J_{n}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} memberships x_i in J_n"))
}

fn cusp_jets() -> Outcome {
    scenario("kolchin-cusp-jets", ScenarioOptions::default())?;
    let gb = GbOptions::default();
    let k = FieldDescriptor::rationals();
    let ctx = VariableContext::new(&["x", "y"]).unwrap();
    let f = poly("y^2 - x^3", &ctx, &k);
    let jet = jet_ideal(&ctx, &k, &[f], 1).map_err(|e| e.to_string())?;
    let j1 = jet.ideal();
    let x0 = jet.variable(0, 0);
    let m = saturate(&j1, &x0, &gb).map_err(|e| e.to_string())?;
    // Outside (x0, y0) means nonzero after setting x0 = y0 = 0.
    let mut images: Vec<Poly> = (0..jet.ctx().len()).map(|v| Polynomial::variable(jet.ctx(), &k, v)).collect();
    images[jet.ctx().jet_index(0, 0).unwrap()] = Polynomial::zero(jet.ctx(), &k);
    images[jet.ctx().jet_index(1, 0).unwrap()] = Polynomial::zero(jet.ctx(), &k);
    let g = m
        .generators()
        .iter()
        .find(|g| !g.substitute(&images).unwrap().is_zero())
        .ok_or("every saturation generator lies in (x0, y0)")?;
    let witnessed = (1..=8).any(|e| ideal_member(&(&x0.pow(e) * g), &j1, &gb).unwrap_or(false));
    ensure(witnessed, format!("no x0^e * ({g}) in J_1"))?;
    let origin = vec![k.zero(); jet.ctx().len()];
    ensure(
        j1.generators().iter().chain(m.generators()).all(|h| k.is_zero(&h.evaluate(&origin))),
        "origin misses a component",
    )?;
    Ok(format!("{g} in J_1 : x0^inf, outside (x0, y0); origin in both parts"))
}

fn affine_dimensions() -> Outcome {
    let gb = GbOptions::default();
    let k = FieldDescriptor::rationals();
    let mut equalities = 0;
    for d in 1..=3 {
        let ctx = standard_context(d);
        for n in 1..=3 {
            let jet = jet_ideal(&ctx, &k, &[], n).map_err(|e| e.to_string())?;
            let dim = krull_dimension(&jet.ideal(), &gb).map_err(|e| e.to_string())?;
            ensure(dim == (n + 1) * d, format!("d = {d}, n = {n}: dim {dim}"))?;
            equalities += 1;
        }
    }
    Ok(format!("{equalities} equalities dim = (n+1)*d"))
}

/// Every level-`n` jet over a prime field, by exhaustive evaluation.
fn brute_force_jets(
    ctx: &Arc<VariableContext>,
    k: &FieldDescriptor,
    gens: &[Poly],
    n: usize,
) -> BTreeSet<TruncatedArc<FieldDescriptor>> {
    let jet = jet_ideal(ctx, k, gens, n).unwrap();
    let elements = k.elements().unwrap();
    let vars = jet.ctx().len();
    let mut digits = vec![0usize; vars];
    let mut out = BTreeSet::new();
    loop {
        let point: Vec<_> = digits.iter().map(|&i| elements[i].clone()).collect();
        if jet.generators().all(|g| k.is_zero(&g.evaluate(&point))) {
            let coeffs = (0..ctx.len())
                .map(|j| (0..=n).map(|i| point[jet.ctx().jet_index(j, i).unwrap()].clone()).collect())
                .collect();
            out.insert(TruncatedArc::new(k, n, coeffs).unwrap());
        }
        let mut pos = 0;
        loop {
            if pos == vars {
                return out;
            }
            digits[pos] += 1;
            if digits[pos] < elements.len() {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
    }
}

fn greenberg() -> Outcome {
    let k = FieldDescriptor::prime(5).unwrap();
    let ctx = VariableContext::new(&["x", "y"]).unwrap();
    let conic = [poly("x^2 + y^2 - 1", &ctx, &k)];
    let report = greenberg_scan(&ctx, &k, &conic, 1, 3, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    let sizes: Vec<usize> = report.sizes.iter().map(|s| s.1).collect();
    ensure(sizes == [4, 4, 4, 4], format!("conic sizes {sizes:?}"))?;
    ensure(report.a_candidate == Some(1), format!("conic a = {:?}", report.a_candidate))?;
    let check = hensel_cross_check(&ctx, &k, &conic, &report).map_err(|e| e.to_string())?;
    ensure(check.liftable == 4 && check.failures.is_empty(), format!("conic cross-check {check:?}"))?;

    let cusp = [poly("y^2 - x^3", &ctx, &k)];
    let brute = brute_force_jets(&ctx, &k, &cusp, 2);
    let listed = enumerate_jets(&ctx, &k, &cusp, 2, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    ensure(brute == listed, format!("level-2 enumeration {} vs brute force {}", listed.len(), brute.len()))?;

    let mut summary = vec![format!("conic {sizes:?}")];
    for nu in [1, 2] {
        let report = greenberg_scan(&ctx, &k, &cusp, nu, 4, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        let sizes: Vec<usize> = report.sizes.iter().map(|s| s.1).collect();
        ensure(sizes.windows(2).all(|w| w[0] >= w[1]), format!("cusp nu = {nu}: {sizes:?}"))?;
        ensure(report.monotone, format!("cusp nu = {nu}: monotone flag unset"))?;
        let m_star = report.stabilization.ok_or(format!("cusp nu = {nu}: no stabilization in {sizes:?}"))?;
        if nu == 2 {
            let oracle = image_truncation(&brute, 1).map_err(|e| e.to_string())?;
            let scanned = report.sizes.iter().find(|s| s.0 == 2).unwrap().1;
            ensure(oracle.len() == scanned, format!("image from level 2: {scanned} vs {}", oracle.len()))?;
        }
        let check = hensel_cross_check(&ctx, &k, &cusp, &report).map_err(|e| e.to_string())?;
        ensure(
            check.failures.is_empty() && check.confirmed == check.liftable,
            format!("cusp nu = {nu} cross-check {check:?}"),
        )?;
        summary.push(format!("cusp nu={nu} {sizes:?} m*={m_star} liftable {}", check.liftable));
    }
    Ok(summary.join("; "))
}

fn random_ideal(rng: &mut ChaCha8Rng, ctx: &Arc<VariableContext>, k: &FieldDescriptor) -> Vec<Poly> {
    let count = rng.gen_range(2..=3);
    (0..count).map(|_| random_nonzero_polynomial(rng, ctx, k, 3, 3)).collect()
}

/// A random ideal that is neither zero nor the whole ring.
fn random_proper_ideal(rng: &mut ChaCha8Rng, ctx: &Arc<VariableContext>, k: &FieldDescriptor) -> Vec<Poly> {
    loop {
        let gens = random_ideal(rng, ctx, k);
        let basis = GroebnerBasis::compute(ctx, k, &gens, &MonomialOrder::degrevlex(ctx.len()), &GbOptions::default());
        if matches!(basis, Ok(b) if !b.is_unit() && !b.is_empty()) {
            return gens;
        }
    }
}

fn groebner_soundness() -> Outcome {
    let gb = GbOptions::default();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let fields = [FieldDescriptor::rationals(), FieldDescriptor::prime(7).unwrap()];
    let ctx = standard_context(3);
    let grevlex = MonomialOrder::degrevlex(3);
    let lex = MonomialOrder::lex(3);
    for case in 0..25 {
        let k = &fields[case % 2];
        let gens = random_proper_ideal(&mut rng, &ctx, k);
        let base = GroebnerBasis::compute(&ctx, k, &gens, &grevlex, &gb).map_err(|e| e.to_string())?;
        ensure(base.is_confluent() && base.is_reduced(), format!("case {case}: basis not reduced or confluent"))?;
        for _ in 0..2 {
            let mut shuffled = gens.clone();
            shuffled.shuffle(&mut rng);
            let other = GroebnerBasis::compute(&ctx, k, &shuffled, &grevlex, &gb).map_err(|e| e.to_string())?;
            ensure(other.is_confluent(), format!("case {case}: permuted basis not confluent"))?;
            ensure(other.polynomials() == base.polynomials(), format!("case {case}: permutation changed the basis"))?;
        }
    }
    let mut members = 0;
    for case in 0..50 {
        let k = &fields[case % 2];
        let gens = random_proper_ideal(&mut rng, &ctx, k);
        let mut f = Polynomial::zero(&ctx, k);
        for g in &gens {
            f = &f + &(&random_polynomial(&mut rng, &ctx, k, 2, 2) * g);
        }
        if case % 3 == 0 {
            f = &f + &random_polynomial(&mut rng, &ctx, k, 2, 2);
        }
        let a = GroebnerBasis::compute(&ctx, k, &gens, &lex, &gb).map_err(|e| e.to_string())?;
        let b = GroebnerBasis::compute(&ctx, k, &gens, &grevlex, &gb).map_err(|e| e.to_string())?;
        ensure(a.is_confluent(), format!("membership case {case}: lex basis not confluent"))?;
        let (in_a, in_b) = (a.contains(&f).unwrap(), b.contains(&f).unwrap());
        ensure(in_a == in_b, format!("membership case {case}: lex {in_a}, degrevlex {in_b}"))?;
        members += in_a as usize;
    }
    Ok(format!("25 proper bases stable under permutation; 50 verdicts agree ({members} members, {} not)", 50 - members))
}

fn naturality_and_sections() -> Outcome {
    scenario("base-change-naturality", ScenarioOptions::default())?;
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let fields = [FieldDescriptor::rationals(), FieldDescriptor::prime(3).unwrap()];
    for case in 0..25 {
        let k = &fields[case % 2];
        let ctx = standard_context(rng.gen_range(1..=3));
        let gens = random_ideal(&mut rng, &ctx, k);
        let n = rng.gen_range(1..=3);
        let jet = jet_ideal(&ctx, k, &gens, n).map_err(|e| e.to_string())?;
        let images: Vec<Poly> = (0..jet.ctx().len())
            .map(|v| match jet.ctx().tag(v) {
                jetscheme::poly::VarTag::Jet { order: 0, .. } => Polynomial::variable(jet.ctx(), k, v),
                _ => Polynomial::zero(jet.ctx(), k),
            })
            .collect();
        for i in 1..=n {
            for g in jet.level_generators(i) {
                let at_constant = g.substitute(&images).map_err(|e| e.to_string())?;
                ensure(at_constant.is_zero(), format!("case {case}: F_{i} = {g} survives constant jets"))?;
            }
        }
    }
    Ok("square commutes at levels 0..=2; 25 varieties annihilated by constant jets".into())
}

fn wedge() -> Outcome {
    let k = FieldDescriptor::rationals();
    let ctx = VariableContext::new(&["x", "y"]).unwrap();
    let gens = [poly("y^2 - x^3", &ctx, &k)];
    let w = iterated_jet_ideal(&ctx, &k, &gens, (1, 1)).map_err(|e| e.to_string())?;
    ensure(w.len() == 4, format!("{} generators", w.len()))?;
    let base = poly("y0_0^2 - x0_0^3", w.ctx(), &k);
    ensure(w.generator(0, 0, 0) == &base, format!("F_(0,0) = {}", w.generator(0, 0, 0)))?;
    ensure(w.swapped().map_err(|e| e.to_string())? == w, "swap changes the (1,1) ideal")?;
    for n in 0..=3 {
        let s = iterated_jet_ideal(&ctx, &k, &gens, (n, 0)).and_then(|w| w.specialize()).map_err(|e| e.to_string())?;
        let j = jet_ideal(&ctx, &k, &gens, n).map_err(|e| e.to_string())?;
        ensure(s == j, format!("(n,0) with n = {n} differs from J_{n}"))?;
    }
    Ok("4 generators, swap invariant, (n,0) = J_n for n <= 3".into())
}

fn main() {
    let criteria: [(&str, u64, fn() -> Outcome); 10] = [
        ("substitution equals differential formula", 10, substitution_matches_derivation),
        ("count counterexample p = 2, 3", 30, count_counterexample),
        ("inseparable radical membership", 10, inseparable_radical),
        ("etale jets", 5, etale_jets),
        ("cusp level-1 reducibility", 10, cusp_jets),
        ("affine fibration dimension", 10, affine_dimensions),
        ("image scan over F_5", 60, greenberg),
        ("Groebner engine soundness", 60, groebner_soundness),
        ("naturality and constant sections", 10, naturality_and_sections),
        ("wedge (1,1) of the cusp", 5, wedge),
    ];
    let mut failures = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(*limit);
        let (ok, detail) = match outcome {
            Ok(d) if in_time => (true, d),
            Ok(d) => (false, format!("{d}; over the {limit} s limit")),
            Err(e) => (false, e),
        };
        failures += !ok as usize;
        println!(
            "{} criterion {:>2} {name} [{:.2} s]: {detail}",
            if ok { "PASS" } else { "FAIL" },
            i + 1,
            elapsed.as_secs_f64()
        );
    }
    println!("acceptance: {}/10 passed", 10 - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
