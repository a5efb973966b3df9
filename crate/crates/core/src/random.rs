//! Seeded random polynomials for property checks and scenarios.

use std::sync::Arc;

use rand::Rng;

use crate::field::Field;
use crate::poly::{Monomial, Polynomial, VariableContext};

/// A random polynomial with at most `max_terms` terms of total degree at
/// most `max_degree`, integer coefficients drawn from `-5..=5`.
pub fn random_polynomial<F: Field, R: Rng>(
    rng: &mut R,
    ctx: &Arc<VariableContext>,
    field: &F,
    max_degree: u32,
    max_terms: usize,
) -> Polynomial<F> {
    let n = ctx.len();
    let count = rng.gen_range(1..=max_terms.max(1));
    let terms: Vec<(Monomial, F::Element)> = (0..count)
        .map(|_| {
            let degree = rng.gen_range(0..=max_degree);
            let mut exps = vec![0u32; n];
            if n > 0 {
                for _ in 0..degree {
                    exps[rng.gen_range(0..n)] += 1;
                }
            }
            (Monomial::from(exps), field.from_i64(rng.gen_range(-5..=5)))
        })
        .collect();
    Polynomial::from_terms(ctx, field, terms)
}

/// As [`random_polynomial`], but never zero.
pub fn random_nonzero_polynomial<F: Field, R: Rng>(
    rng: &mut R,
    ctx: &Arc<VariableContext>,
    field: &F,
    max_degree: u32,
    max_terms: usize,
) -> Polynomial<F> {
    loop {
        let p = random_polynomial(rng, ctx, field, max_degree, max_terms);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Plain variables `x, y, z, w, v, u`; at most six.
pub fn standard_context(nvars: usize) -> Arc<VariableContext> {
    const NAMES: [&str; 6] = ["x", "y", "z", "w", "v", "u"];
    assert!(nvars <= NAMES.len(), "at most six standard variables");
    VariableContext::new(&NAMES[..nvars]).expect("distinct names")
}
