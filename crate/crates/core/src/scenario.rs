//! Named scenarios: each assembles the library into a list of exact checks
//! and returns a [`ScenarioReport`].

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::field::{Field, FieldDescriptor, FieldElement, FieldError, FieldHom, FieldKind, FieldMap};
use crate::greenberg::{greenberg_scan, hensel_cross_check, GreenbergScanReport, DEFAULT_BUDGET};
use crate::groebner::{ideal_member, krull_dimension, radical_member, saturate, GbOptions, Ideal};
use crate::jet::{
    base_change_ideal, constant_jet, evaluate_jet_point, evaluate_jet_point_via, iterated_jet_ideal, jet_ideal,
    JetIdeal, TruncatedArc,
};
use crate::parse::{parse_field, parse_polynomial, VarietySpec};
use crate::poly::{Polynomial, VariableContext};
use crate::random::{random_polynomial, standard_context};
use crate::report::ScenarioReport;
use crate::smooth::nonsmooth_ideal;
use crate::{Error, Poly};

pub const SCENARIOS: [&str; 10] = [
    "count-counterexample",
    "kolchin-cusp-jets",
    "remark-inseparable-jets",
    "etale-jets",
    "tangent-scheme",
    "nilpotent-shadow",
    "affine-fibration",
    "base-change-naturality",
    "wedge-shadow",
    "greenberg-scan",
];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScenarioError {
    #[error("unknown scenario `{0}`")]
    UnknownScenario(String),
    #[error("invalid scenario option: {0}")]
    InvalidOption(String),
}

/// Scenario parameters; unset values take per-scenario defaults.
#[derive(Debug, Clone)]
pub struct ScenarioOptions {
    pub p: Option<u64>,
    pub n: Option<usize>,
    pub d: Option<usize>,
    pub q: Option<u64>,
    pub nu: Option<usize>,
    pub m_max: Option<usize>,
    pub variety: Option<VarietySpec>,
    pub seed: u64,
    pub gb: GbOptions,
    pub budget: u128,
}

impl Default for ScenarioOptions {
    fn default() -> Self {
        ScenarioOptions {
            p: None,
            n: None,
            d: None,
            q: None,
            nu: None,
            m_max: None,
            variety: None,
            seed: 0x5eed,
            gb: GbOptions::default(),
            budget: DEFAULT_BUDGET,
        }
    }
}

pub fn run_scenario(name: &str, options: &ScenarioOptions) -> Result<ScenarioReport, Error> {
    match name {
        "count-counterexample" => count_counterexample(options.p.unwrap_or(2), options),
        "kolchin-cusp-jets" => Ok(kolchin_cusp_jets(options)),
        "remark-inseparable-jets" => remark_inseparable_jets(options.p.unwrap_or(2), options.n.unwrap_or(4), options),
        "etale-jets" => Ok(etale_jets(options.n.unwrap_or(3), options)),
        "tangent-scheme" => Ok(tangent_scheme(options)),
        "nilpotent-shadow" => Ok(nilpotent_shadow(options.n.unwrap_or(4), options)),
        "affine-fibration" => Ok(affine_fibration(options.d.unwrap_or(3), options.n.unwrap_or(3), options)),
        "base-change-naturality" => Ok(base_change_naturality(options.n.unwrap_or(2))),
        "wedge-shadow" => Ok(wedge_shadow()),
        "greenberg-scan" => greenberg_scenario(options),
        other => Err(ScenarioError::UnknownScenario(other.to_string()).into()),
    }
}

fn parse(text: &str, ctx: &Arc<VariableContext>, field: &FieldDescriptor) -> Poly {
    parse_polynomial(text, ctx, field).expect("built-in polynomial parses")
}

fn plane() -> Arc<VariableContext> {
    VariableContext::new(&["x", "y"]).expect("names")
}

fn cusp() -> (Arc<VariableContext>, FieldDescriptor, Poly) {
    let q = FieldDescriptor::rationals();
    let ctx = plane();
    let f = parse("y^2 - x^3", &ctx, &q);
    (ctx, q, f)
}

fn show(ps: &[Poly]) -> String {
    ps.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")
}

fn all_zero(field: &FieldDescriptor, values: &[FieldElement]) -> bool {
    values.iter().all(|v| field.is_zero(v))
}

/// Smallest `k <= max` with `f^k * sat ⊆ ideal`.
fn saturation_exponent(
    ideal: &Ideal<FieldDescriptor>,
    sat: &Ideal<FieldDescriptor>,
    f: &Poly,
    max: u32,
    gb: &GbOptions,
) -> Result<Option<u32>, Error> {
    let basis = ideal.groebner_default(gb)?;
    for k in 0..=max {
        let fk = f.pow(k);
        let mut inside = true;
        for g in sat.generators() {
            if !basis.contains(&(&fk * g))? {
                inside = false;
                break;
            }
        }
        if inside {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

fn count_counterexample(p: u64, options: &ScenarioOptions) -> Result<ScenarioReport, Error> {
    if p != 2 && p != 3 {
        return Err(ScenarioError::InvalidOption(format!("count-counterexample needs p in {{2, 3}}, got {p}")).into());
    }
    let gb = &options.gb;
    let mut report = ScenarioReport::new(format!("count-counterexample(p={p})"));
    let k = parse_field(&format!("Fp({p})(a)"))?;
    let ctx = VariableContext::new(&["x", "y", "z"])?;
    let f = parse(&format!("x^{p} + y*z^{p} - a"), &ctx, &k);
    let jet = jet_ideal(&ctx, &k, &[f.clone()], 1)?;
    let j1 = jet.ideal();
    let jctx = jet.ctx().clone();
    let z0 = jet.variable(2, 0);
    let y1 = jet.variable(1, 1);

    let expected = parse(&format!("y1*z0^{p}"), &jctx, &k);
    let f1 = jet.generator(1, 0).clone();
    report.check(
        "(i) F_1 = y1*z0^p",
        Ok((f1 == expected, format!("F_1 = {f1}"))),
    );

    // Witness over Fp(u) through a -> u^p.
    let witness = (|| -> Result<(bool, String), Error> {
        let ku = parse_field(&format!("Fp({p})(u)"))?;
        let u = ku.generator("u").expect("generator");
        let h = FieldHom::new(&k, &ku, vec![ku.pow(&u, p)])?;
        let (zero, one) = (ku.zero(), ku.one());
        let arc = TruncatedArc::new(
            &ku,
            1,
            vec![vec![u, zero.clone()], vec![zero.clone(), one], vec![zero.clone(), zero]],
        )?;
        let values = evaluate_jet_point_via(&jet, &arc, &h)?;
        let shown: Vec<String> = values.iter().map(|v| ku.format_element(v)).collect();
        Ok((
            all_zero(&ku, &values),
            format!(
                "a -> u^{p}, arc {} over {}: (F_0, F_1) = ({})",
                arc.format_with(ctx.names()),
                ku.descriptor_text(),
                shown.join(", ")
            ),
        ))
    })();
    let witness_ok = matches!(witness, Ok((true, _)));
    report.check("(ii) witness arc lies on L_1", witness);

    let sat = saturate(&j1, &z0, gb);
    let sat_check = match &sat {
        Ok(sat) => ideal_member(&y1, sat, gb)
            .map(|inside| (inside, format!("y1 in J_1 : z0^inf = ({}); y1 = 1 at the witness", show(sat.generators()))))
            .map_err(Error::from),
        Err(e) => Err(e.clone().into()),
    };
    let sat_ok = matches!(sat_check, Ok((true, _)));
    report.check("(iii) witness lies outside V(J_1 : z0^inf)", sat_check);

    // The point x0 = 0, y0 = a, z0 = 1 with zero first-order jets.
    let a = k.generator("a").expect("generator");
    let point = TruncatedArc::new(
        &k,
        1,
        vec![vec![k.zero(), k.zero()], vec![a, k.zero()], vec![k.one(), k.zero()]],
    )?;
    let point_check = evaluate_jet_point(&jet, &point).map(|values| {
        (
            all_zero(&k, &values),
            format!("{} satisfies J_1 with z0 = 1", point.format_with(ctx.names())),
        )
    });
    let point_ok = matches!(point_check, Ok((true, _)));
    report.check("(iv) point with z0 = 1 lies outside V(J_1 + (z0))", point_check.map_err(Error::from));

    let cover = (|| -> Result<(bool, String), Error> {
        let sat = sat.clone()?;
        let kexp = saturation_exponent(&j1, &sat, &z0, 8, gb)?;
        let values = point.jet_point(&jctx)?;
        let point_in_sat = sat.generators().iter().all(|g| k.is_zero(&g.evaluate(&values)));
        let proper = witness_ok && sat_ok && point_ok && point_in_sat;
        Ok((
            kexp.is_some() && proper,
            match kexp {
                Some(e) => format!(
                    "z0^{e}*(J_1 : z0^inf) in J_1, so V(J_1) = V(J_1 + (z0)) u V(J_1 : z0^inf); \
                     the witness lies only in the first part, the point with z0 = 1 only in the second"
                ),
                None => "no power of z0 carries J_1 : z0^inf into J_1 up to exponent 8".to_string(),
            },
        ))
    })();
    report.check("(v) L_1 is covered by two proper closed subsets", cover);

    let claim = (|| -> Result<(bool, String), Error> {
        let nsm = nonsmooth_ideal(&ctx, &k, &[f.clone()], 1)?;
        let dim = krull_dimension(&nsm, gb)?;
        let z = Polynomial::variable(&ctx, &k, 2);
        let target = Ideal::new(&ctx, &k, vec![f.clone(), z.clone()])?;
        let mut equal = radical_member(&z, &nsm, gb)?;
        for g in nsm.generators() {
            equal &= radical_member(g, &target, gb)?;
        }
        Ok((
            dim == 1 && equal,
            format!("nSm = ({}), dimension {dim}, radical equal to that of ({f}, z)", show(nsm.generators())),
        ))
    })();
    report.check("(vi) non-smooth locus is V(f, z) of dimension 1", claim);
    Ok(report)
}

fn kolchin_cusp_jets(options: &ScenarioOptions) -> ScenarioReport {
    let gb = &options.gb;
    let mut report = ScenarioReport::new("kolchin-cusp-jets");
    let (ctx, q, f) = cusp();
    let built = jet_ideal(&ctx, &q, &[f.clone()], 1).map_err(Error::from);
    let jet = match built {
        Ok(j) => j,
        Err(e) => {
            report.check("jet ideal", Err(e));
            return report;
        }
    };
    let j1 = jet.ideal();
    let (x0, y0) = (jet.variable(0, 0), jet.variable(1, 0));
    let fiber = Ideal::new(jet.ctx(), &q, vec![x0.clone(), y0.clone()]).expect("same ring");
    let m = saturate(&j1, &x0, gb).map_err(Error::from);

    report.check(
        "saturation generator outside (x0, y0)",
        m.clone().and_then(|m| {
            for g in m.generators() {
                if !ideal_member(g, &fiber, gb)? {
                    return Ok((true, format!("{g} in J_1 : x0^inf but not in (x0, y0)")));
                }
            }
            Ok((false, format!("J_1 : x0^inf = ({}) lies in (x0, y0)", show(m.generators()))))
        }),
    );
    report.check(
        "fiber V(x0, y0) lies in L_1",
        (|| -> Result<(bool, String), Error> {
            let inside = j1
                .generators()
                .iter()
                .map(|g| ideal_member(g, &fiber, gb))
                .collect::<Result<Vec<_>, _>>()?
                .into_iter()
                .all(|b| b);
            let y0_rad = radical_member(&y0, &j1.with(&[x0.clone()])?, gb)?;
            Ok((
                inside && y0_rad,
                "J_1 in (x0, y0) and y0 in sqrt(J_1 + (x0)), so V(J_1 + (x0)) = V(x0, y0)".to_string(),
            ))
        })(),
    );
    report.check(
        "L_1 is covered by the fiber and V(J_1 : x0^inf)",
        m.clone().and_then(|m| {
            let e = saturation_exponent(&j1, &m, &x0, 8, gb)?;
            Ok(match e {
                Some(e) => (true, format!("x0^{e}*(J_1 : x0^inf) in J_1")),
                None => (false, "no power of x0 up to 8 works".into()),
            })
        }),
    );
    report.check(
        "V(J_1 : x0^inf) is not inside the fiber",
        m.clone().and_then(|m| {
            let inside = radical_member(&x0, &m, gb)?;
            let dm = krull_dimension(&m, gb)?;
            let df = krull_dimension(&j1.with(&[x0.clone(), y0.clone()])?, gb)?;
            Ok((
                !inside,
                format!("x0 not in sqrt(J_1 : x0^inf); dimensions {dm} (closure of D(x0)) and {df} (fiber)"),
            ))
        }),
    );
    report.check(
        "origin constant jet lies in both parts",
        m.and_then(|m| {
            let zero = q.zero();
            let arc = constant_jet(&ctx, &q, &[f.clone()], &[zero.clone(), zero], 1)?;
            let on = all_zero(&q, &evaluate_jet_point(&jet, &arc)?);
            let pt = arc.jet_point(jet.ctx())?;
            let in_m = m.generators().iter().all(|g| q.is_zero(&g.evaluate(&pt)));
            Ok((on && in_m, format!("{} lies on V(x0, y0) and V(J_1 : x0^inf)", arc.format_with(ctx.names()))))
        }),
    );
    report
}

fn remark_inseparable_jets(p: u64, n: usize, options: &ScenarioOptions) -> Result<ScenarioReport, Error> {
    let mut report = ScenarioReport::new(format!("remark-inseparable-jets(p={p}, n={n})"));
    let k = parse_field(&format!("Fp({p})(a)"))?;
    let ctx = VariableContext::new(&["x"])?;
    let f = parse(&format!("x^{p} - a"), &ctx, &k);
    let jet = jet_ideal(&ctx, &k, &[f], n)?;
    let ideal = jet.ideal();
    for i in 0..=n {
        let expected = i >= 1 && (i as u64) * p <= n as u64;
        let xi = jet.variable(0, i);
        report.check(
            format!("x{i} in sqrt(J_{n}) iff 1 <= i and i*p <= n"),
            radical_member(&xi, &ideal, &options.gb)
                .map(|got| (got == expected, format!("radical membership {got}, expected {expected}")))
                .map_err(Error::from),
        );
    }
    Ok(report)
}

fn etale_jets(n: usize, options: &ScenarioOptions) -> ScenarioReport {
    let mut report = ScenarioReport::new(format!("etale-jets(n={n})"));
    let q = FieldDescriptor::rationals();
    let ctx = VariableContext::new(&["x"]).expect("names");
    let f = parse("x^2 + 1", &ctx, &q);
    match jet_ideal(&ctx, &q, &[f], n) {
        Ok(jet) => {
            let ideal = jet.ideal();
            for i in 1..=n {
                let xi = jet.variable(0, i);
                report.check(
                    format!("x{i} in J_{n}"),
                    ideal_member(&xi, &ideal, &options.gb)
                        .map(|b| (b, format!("ideal membership {b}")))
                        .map_err(Error::from),
                );
            }
        }
        Err(e) => report.check("jet ideal", Err(e.into())),
    }
    report
}

/// `F_1 = Σ_j ∂g/∂x_j(x^(0)) x_j^(1)` for random `g`.
pub fn first_jet_is_linear(jet: &JetIdeal<FieldDescriptor>, g: usize) -> bool {
    let base = &jet.base_generators()[g];
    let mut expected = Polynomial::zero(jet.ctx(), jet.field());
    for j in 0..jet.base_ctx().len() {
        let d = jet.lift_base(&base.partial_derivative(j));
        expected = &expected + &(&d * &jet.variable(j, 1));
    }
    jet.level() >= 1 && *jet.generator(1, g) == expected
}

fn tangent_scheme(options: &ScenarioOptions) -> ScenarioReport {
    let mut report = ScenarioReport::new("tangent-scheme");
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
    let ctx = standard_context(3);
    for text in ["QQ", "Fp(2)", "Fp(5)"] {
        let field = parse_field(text).expect("field");
        let trials = 20;
        let outcome = (|| -> Result<(bool, String), Error> {
            let mut ok = 0;
            for _ in 0..trials {
                let g = random_polynomial(&mut rng, &ctx, &field, 3, 5);
                let jet = jet_ideal(&ctx, &field, &[g], 1)?;
                ok += usize::from(first_jet_is_linear(&jet, 0));
            }
            Ok((ok == trials, format!("{ok}/{trials} random generators")))
        })();
        report.check(format!("F_1 is the differential over {text}"), outcome);
    }
    report
}

fn nilpotent_shadow(n: usize, options: &ScenarioOptions) -> ScenarioReport {
    let mut report = ScenarioReport::new(format!("nilpotent-shadow(n={n})"));
    let q = FieldDescriptor::rationals();
    let ctx = VariableContext::new(&["x"]).expect("names");
    let f = parse("x^2", &ctx, &q);
    match jet_ideal(&ctx, &q, &[f], n) {
        Ok(jet) => {
            let ideal = jet.ideal();
            for i in 0..=n {
                let expected = 2 * i <= n;
                report.check(
                    format!("x{i} in sqrt(J_{n}) iff 2i <= n"),
                    radical_member(&jet.variable(0, i), &ideal, &options.gb)
                        .map(|got| (got == expected, format!("radical membership {got}, expected {expected}")))
                        .map_err(Error::from),
                );
            }
        }
        Err(e) => report.check("jet ideal", Err(e.into())),
    }
    report
}

fn affine_fibration(d: usize, n: usize, options: &ScenarioOptions) -> ScenarioReport {
    let mut report = ScenarioReport::new(format!("affine-fibration(d<={d}, n<={n})"));
    let q = FieldDescriptor::rationals();
    for dd in 1..=d.min(6) {
        let ctx = standard_context(dd);
        for nn in 1..=n {
            let outcome = (|| -> Result<(bool, String), Error> {
                let jet = jet_ideal(&ctx, &q, &[], nn)?;
                let dim = krull_dimension(&jet.ideal(), &options.gb)?;
                Ok((dim == (nn + 1) * dd, format!("dimension {dim}, expected {}", (nn + 1) * dd)))
            })();
            report.check(format!("dim L_{nn}(A^{dd}) = {}", (nn + 1) * dd), outcome);
        }
    }
    report
}

fn strings<F: Field>(jet: &JetIdeal<F>) -> Vec<String> {
    jet.generators().map(|g| g.to_string()).collect()
}

fn base_change_naturality(max_level: usize) -> ScenarioReport {
    let mut report = ScenarioReport::new("base-change-naturality");
    let setup = (|| -> Result<_, Error> {
        let ks = parse_field("Fp(2)(s)")?;
        let ku = parse_field("Fp(2)(u)")?;
        let u = ku.generator("u").expect("generator");
        let h = FieldHom::new(&ks, &ku, vec![ku.mul(&u, &u)])?;
        let ctx = VariableContext::new(&["x", "y", "z"])?;
        let f = parse("x^2 + y*z^2 - s", &ctx, &ks);
        Ok((ks, ku, h, ctx, f))
    })();
    let (ks, ku, h, ctx, f) = match setup {
        Ok(s) => s,
        Err(e) => {
            report.check("setup", Err(e));
            return report;
        }
    };
    for n in 0..=max_level {
        let outcome = (|| -> Result<(bool, String), Error> {
            let mapped = base_change_ideal(&jet_ideal(&ctx, &ks, &[f.clone()], n)?, &h)?;
            let direct = jet_ideal(&ctx, &ku, &[f.map_coefficients(&h)?], n)?;
            let (a, b) = (strings(&mapped), strings(&direct));
            Ok((a == b, a.join(", ")))
        })();
        report.check(format!("square commutes at level {n} under s -> u^2"), outcome);
    }
    report.check(
        "identity map fixes the generators",
        (|| -> Result<(bool, String), Error> {
            let jet = jet_ideal(&ctx, &ks, &[f.clone()], 1)?;
            let same = base_change_ideal(&jet, &FieldHom::identity(&ks))?;
            Ok((strings(&same) == strings(&jet), strings(&jet).join(", ")))
        })(),
    );
    report.check(
        "QQ -> QQ(s) keeps the cusp jet generators",
        (|| -> Result<(bool, String), Error> {
            let (pctx, q, cusp) = cusp();
            let qs = parse_field("QQ(s)")?;
            let inclusion = FieldHom::new(&q, &qs, vec![])?;
            let jet = jet_ideal(&pctx, &q, &[cusp], 2)?;
            let mapped = base_change_ideal(&jet, &inclusion)?;
            Ok((strings(&mapped) == strings(&jet), strings(&mapped).join(", ")))
        })(),
    );
    report
}

fn wedge_shadow() -> ScenarioReport {
    let mut report = ScenarioReport::new("wedge-shadow");
    let (ctx, q, f) = cusp();
    let gens = [f];
    report.check(
        "orders (1,1) give 4 generators",
        iterated_jet_ideal(&ctx, &q, &gens, (1, 1))
            .map(|w| {
                (
                    w.len() == 4,
                    format!("{} generators, F_(0,0) = {}", w.len(), w.generator(0, 0, 0)),
                )
            })
            .map_err(Error::from),
    );
    report.check(
        "index swap is a symmetry",
        (|| -> Result<(bool, String), Error> {
            let w = iterated_jet_ideal(&ctx, &q, &gens, (1, 1))?;
            let square = w.swapped()? == w;
            let a = iterated_jet_ideal(&ctx, &q, &gens, (2, 1))?;
            let b = iterated_jet_ideal(&ctx, &q, &gens, (1, 2))?;
            let rect = a.swapped()? == b;
            Ok((square && rect, format!("(1,1) invariant: {square}; (2,1) swaps to (1,2): {rect}")))
        })(),
    );
    for n in 0..=2 {
        report.check(
            format!("orders ({n},0) specialize to J_{n}"),
            (|| -> Result<(bool, String), Error> {
                let w = iterated_jet_ideal(&ctx, &q, &gens, (n, 0))?;
                let s = w.specialize()?;
                let j = jet_ideal(&ctx, &q, &gens, n)?;
                Ok((s == j, strings(&s).join(", ")))
            })(),
        );
    }
    report
}

/// Reduction of rational coefficients modulo a prime.
struct Reduction {
    source: FieldDescriptor,
    target: FieldDescriptor,
}

impl FieldMap<FieldDescriptor, FieldDescriptor> for Reduction {
    fn source(&self) -> &FieldDescriptor {
        &self.source
    }

    fn target(&self) -> &FieldDescriptor {
        &self.target
    }

    fn apply(&self, x: &FieldElement) -> Result<FieldElement, FieldError> {
        let FieldElement::Rational(r) = x else {
            return Err(FieldError::DescriptorMismatch {
                expected: "QQ".into(),
                found: format!("{x:?}"),
            });
        };
        let t = &self.target;
        t.div(&t.from_bigint(r.numer()), &t.from_bigint(r.denom()))
    }
}

/// The variety over `Fp(q)`: unchanged if already there, reduced mod `q` if
/// given over `QQ`.
pub fn variety_mod_q(spec: &VarietySpec, q: u64) -> Result<VarietySpec, Error> {
    match spec.field.kind() {
        FieldKind::PrimeField(_) if spec.field.characteristic() == q => Ok(spec.clone()),
        FieldKind::Rationals => {
            let map = Reduction {
                source: spec.field.clone(),
                target: FieldDescriptor::prime(q)?,
            };
            let gens = spec
                .gens
                .iter()
                .map(|g| g.map_coefficients(&map))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(VarietySpec::new(map.target, spec.ctx.clone(), gens, spec.codim))
        }
        _ => Err(ScenarioError::InvalidOption(format!(
            "a scan over F_{q} needs a variety over QQ or Fp({q}), found {}",
            spec.field.descriptor_text()
        ))
        .into()),
    }
}

/// Runs a scan on a variety reduced to `Fp(q)`.
pub fn scan_variety(
    spec: &VarietySpec,
    q: u64,
    nu: usize,
    m_max: usize,
    budget: u128,
) -> Result<(VarietySpec, GreenbergScanReport<FieldDescriptor>), Error> {
    let reduced = variety_mod_q(spec, q)?;
    let report = greenberg_scan(&reduced.ctx, &reduced.field, &reduced.gens, nu, m_max, budget)?;
    Ok((reduced, report))
}

fn greenberg_scenario(options: &ScenarioOptions) -> Result<ScenarioReport, Error> {
    let spec = match &options.variety {
        Some(s) => s.clone(),
        None => {
            let (ctx, q, f) = cusp();
            VarietySpec::new(q, ctx, vec![f], None)
        }
    };
    let q = match (options.q, spec.field.characteristic()) {
        (Some(q), _) => q,
        (None, 0) => 5,
        (None, p) => p,
    };
    let nu = options.nu.unwrap_or(1);
    let m_max = options.m_max.unwrap_or(3);
    let mut report = ScenarioReport::new(format!("greenberg-scan(q={q}, nu={nu}, m_max={m_max})"));
    let scan = scan_variety(&spec, q, nu, m_max, options.budget);
    let (reduced, scan) = match scan {
        Ok(s) => s,
        Err(e) => {
            report.check("scan", Err(e));
            return Ok(report);
        }
    };
    let sizes: Vec<String> = scan.sizes.iter().map(|(m, s)| format!("m={m}: {s}")).collect();
    report.check(
        "image sizes weakly decrease",
        Ok((
            scan.monotone,
            format!("|im(L_m -> L_{})| with nu = {nu}: {}", nu - 1, sizes.join(", ")),
        )),
    );
    report.check(
        "image stabilizes within the scan",
        Ok(match (scan.stabilization, scan.a_candidate) {
            (Some(m), Some(a)) => (true, format!("stable from m = {m}; a* = {a} (level a*nu - 1 = {})", a * nu - 1)),
            _ => (false, format!("not observed up to m = {m_max}")),
        }),
    );
    report.check(
        "Hensel lifts of smooth-center jets lie in the stable image",
        hensel_cross_check(&reduced.ctx, &reduced.field, &reduced.gens, &scan)
            .map(|cc| {
                (
                    cc.failures.is_empty(),
                    format!("{}/{} smooth-center jets confirmed", cc.confirmed, cc.liftable),
                )
            })
            .map_err(Error::from),
    );
    Ok(report)
}
