use std::sync::Arc;

use super::{GbOptions, GroebnerBasis, GroebnerError, MonomialOrder, OrderKind};
use crate::field::Field;
use crate::poly::{Monomial, Polynomial, VariableContext};

/// An ideal given by generators in a fixed ring.
#[derive(Debug, Clone)]
pub struct Ideal<F: Field> {
    ctx: Arc<VariableContext>,
    field: F,
    generators: Vec<Polynomial<F>>,
}

impl<F: Field> Ideal<F> {
    /// Zero generators are dropped.
    pub fn new(
        ctx: &Arc<VariableContext>,
        field: &F,
        generators: Vec<Polynomial<F>>,
    ) -> Result<Self, GroebnerError> {
        if generators.iter().any(|g| g.ctx() != ctx || g.field() != field) {
            return Err(GroebnerError::ContextMismatch);
        }
        Ok(Ideal {
            ctx: ctx.clone(),
            field: field.clone(),
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
        })
    }

    pub fn zero(ctx: &Arc<VariableContext>, field: &F) -> Self {
        Ideal {
            ctx: ctx.clone(),
            field: field.clone(),
            generators: Vec::new(),
        }
    }

    pub fn ctx(&self) -> &Arc<VariableContext> {
        &self.ctx
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.generators
    }

    /// `self + (extra)`.
    pub fn with(&self, extra: &[Polynomial<F>]) -> Result<Self, GroebnerError> {
        let mut gens = self.generators.clone();
        gens.extend(extra.iter().cloned());
        Ideal::new(&self.ctx, &self.field, gens)
    }

    pub fn groebner(
        &self,
        order: &MonomialOrder,
        options: &GbOptions,
    ) -> Result<GroebnerBasis<F>, GroebnerError> {
        GroebnerBasis::compute(&self.ctx, &self.field, &self.generators, order, options)
    }

    /// Reduced basis under degrevlex in context order.
    pub fn groebner_default(&self, options: &GbOptions) -> Result<GroebnerBasis<F>, GroebnerError> {
        self.groebner(&MonomialOrder::degrevlex(self.ctx.len()), options)
    }

    fn check(&self, f: &Polynomial<F>) -> Result<(), GroebnerError> {
        if f.ctx() != &self.ctx || f.field() != &self.field {
            Err(GroebnerError::ContextMismatch)
        } else {
            Ok(())
        }
    }

    /// Copies the ideal into the context extended by one fresh variable.
    fn extend(&self, stem: &str) -> (Arc<VariableContext>, usize, Vec<Polynomial<F>>) {
        let (ext, w) = self.ctx.with_fresh(stem);
        let map: Vec<usize> = (0..self.ctx.len()).collect();
        let gens = self.generators.iter().map(|g| g.rename(&ext, &map)).collect();
        (ext, w, gens)
    }
}

impl<F: Field> PartialEq for Ideal<F> {
    fn eq(&self, other: &Self) -> bool {
        self.ctx == other.ctx && self.field == other.field && self.generators == other.generators
    }
}

pub fn buchberger_reduced<F: Field>(
    ideal: &Ideal<F>,
    order: &MonomialOrder,
    options: &GbOptions,
) -> Result<GroebnerBasis<F>, GroebnerError> {
    ideal.groebner(order, options)
}

pub fn normal_form<F: Field>(
    f: &Polynomial<F>,
    basis: &GroebnerBasis<F>,
) -> Result<Polynomial<F>, GroebnerError> {
    basis.normal_form(f)
}

pub fn ideal_member<F: Field>(
    f: &Polynomial<F>,
    ideal: &Ideal<F>,
    options: &GbOptions,
) -> Result<bool, GroebnerError> {
    ideal.check(f)?;
    ideal.groebner_default(options)?.contains(f)
}

/// Rabinowitsch test: `f ∈ √I` iff `1 ∈ I + (1 - w f)`.
pub fn radical_member<F: Field>(
    f: &Polynomial<F>,
    ideal: &Ideal<F>,
    options: &GbOptions,
) -> Result<bool, GroebnerError> {
    ideal.check(f)?;
    if f.is_zero() {
        return Ok(true);
    }
    let (ext, w, mut gens) = ideal.extend("w");
    let map: Vec<usize> = (0..ideal.ctx.len()).collect();
    let wf = &Polynomial::variable(&ext, &ideal.field, w) * &f.rename(&ext, &map);
    gens.push(&Polynomial::one(&ext, &ideal.field) - &wf);
    let basis = GroebnerBasis::compute(
        &ext,
        &ideal.field,
        &gens,
        &MonomialOrder::degrevlex(ext.len()),
        options,
    )?;
    Ok(basis.is_unit())
}

/// Drops trailing variables that no term uses.
fn restrict<F: Field>(p: &Polynomial<F>, ctx: &Arc<VariableContext>) -> Polynomial<F> {
    let n = ctx.len();
    let terms = p.terms().iter().map(|(m, c)| {
        debug_assert!(m.exponents()[n..].iter().all(|&e| e == 0));
        (Monomial::from(m.exponents()[..n].to_vec()), c.clone())
    });
    Polynomial::from_terms(ctx, p.field(), terms.collect::<Vec<_>>())
}

/// `I : f^∞`, via elimination of `w` from `I + (1 - w f)`.
pub fn saturate<F: Field>(
    ideal: &Ideal<F>,
    f: &Polynomial<F>,
    options: &GbOptions,
) -> Result<Ideal<F>, GroebnerError> {
    ideal.check(f)?;
    if f.is_zero() {
        return Err(GroebnerError::ZeroSaturator);
    }
    let (ext, w, mut gens) = ideal.extend("w");
    let map: Vec<usize> = (0..ideal.ctx.len()).collect();
    let wf = &Polynomial::variable(&ext, &ideal.field, w) * &f.rename(&ext, &map);
    gens.push(&Polynomial::one(&ext, &ideal.field) - &wf);
    let order = MonomialOrder::block(OrderKind::DegRevLex, ext.len(), &[w]);
    let basis = GroebnerBasis::compute(&ext, &ideal.field, &gens, &order, options)?;
    let kept = basis
        .polynomials()
        .into_iter()
        .filter(|g| !g.uses_variable(w))
        .map(|g| restrict(&g, &ideal.ctx))
        .collect();
    Ideal::new(&ideal.ctx, &ideal.field, kept)
}

/// `I : f = {g : g f ∈ I}`, from `I ∩ (f)` computed by eliminating `t`
/// from `t I + (1 - t) f`.
pub fn ideal_quotient<F: Field>(
    ideal: &Ideal<F>,
    f: &Polynomial<F>,
    options: &GbOptions,
) -> Result<Ideal<F>, GroebnerError> {
    ideal.check(f)?;
    if f.is_zero() {
        return Err(GroebnerError::ZeroSaturator);
    }
    let (ext, t, gens) = ideal.extend("t");
    let map: Vec<usize> = (0..ideal.ctx.len()).collect();
    let tv = Polynomial::variable(&ext, &ideal.field, t);
    let fe = f.rename(&ext, &map);
    let mut mixed: Vec<Polynomial<F>> = gens.iter().map(|g| &tv * g).collect();
    mixed.push(&(&Polynomial::one(&ext, &ideal.field) - &tv) * &fe);
    let order = MonomialOrder::block(OrderKind::DegRevLex, ext.len(), &[t]);
    let basis = GroebnerBasis::compute(&ext, &ideal.field, &mixed, &order, options)?;
    let mut quotient = Vec::new();
    for g in basis.polynomials().into_iter().filter(|g| !g.uses_variable(t)) {
        let g = restrict(&g, &ideal.ctx);
        quotient.push(exact_division(&g, f)?);
    }
    Ideal::new(&ideal.ctx, &ideal.field, quotient)
}

/// `g / f` for `g ∈ (f)`, by repeated leading-term division.
fn exact_division<F: Field>(
    g: &Polynomial<F>,
    f: &Polynomial<F>,
) -> Result<Polynomial<F>, GroebnerError> {
    let field = g.field();
    let (fm, fc) = &f.terms()[0];
    let fc_inv = field.inv(fc)?;
    let mut rest = g.clone();
    let mut q = Polynomial::zero(g.ctx(), field);
    while let Some((m, c)) = rest.terms().first() {
        let qm = m.div(fm).expect("exact division by a generator of a principal ideal");
        let qc = field.mul(c, &fc_inv);
        rest = &rest - &f.mul_term(&qm, &qc);
        q = &q + &Polynomial::from_terms(g.ctx(), field, vec![(qm, qc)]);
    }
    Ok(q)
}

/// `I ∩ k[remaining variables]`, via a block order with `vars` in the outer block.
pub fn eliminate<F: Field>(
    ideal: &Ideal<F>,
    vars: &[usize],
    options: &GbOptions,
) -> Result<Ideal<F>, GroebnerError> {
    let order = MonomialOrder::block(OrderKind::DegRevLex, ideal.ctx.len(), vars);
    let basis = ideal.groebner(&order, options)?;
    let kept = basis
        .polynomials()
        .into_iter()
        .filter(|g| vars.iter().all(|&v| !g.uses_variable(v)))
        .collect();
    Ideal::new(&ideal.ctx, &ideal.field, kept)
}

/// Dimension of the quotient ring: the size of a largest set of variables
/// containing the support of no leading monomial.
pub fn krull_dimension<F: Field>(
    ideal: &Ideal<F>,
    options: &GbOptions,
) -> Result<usize, GroebnerError> {
    let basis = ideal.groebner_default(options)?;
    if basis.is_unit() {
        return Err(GroebnerError::UnitIdeal);
    }
    let n = ideal.ctx.len();
    let supports: Vec<Vec<usize>> = basis
        .leading_monomials()
        .map(|m| m.support().collect())
        .collect();
    let mut chosen = vec![false; n];
    let mut best = 0;
    max_independent(&supports, &mut chosen, 0, 0, &mut best);
    Ok(best)
}

fn max_independent(
    supports: &[Vec<usize>],
    chosen: &mut [bool],
    next: usize,
    size: usize,
    best: &mut usize,
) {
    if size > *best {
        *best = size;
    }
    if next == chosen.len() || size + (chosen.len() - next) <= *best {
        return;
    }
    chosen[next] = true;
    let ok = supports
        .iter()
        .all(|s| !s.iter().all(|&v| chosen[v]));
    if ok {
        max_independent(supports, chosen, next + 1, size + 1, best);
    }
    chosen[next] = false;
    max_independent(supports, chosen, next + 1, size, best);
}

/// Mutual generator membership.
pub fn ideal_equal<F: Field>(
    a: &Ideal<F>,
    b: &Ideal<F>,
    options: &GbOptions,
) -> Result<bool, GroebnerError> {
    if a.ctx != b.ctx || a.field != b.field {
        return Err(GroebnerError::ContextMismatch);
    }
    let ga = a.groebner_default(options)?;
    let gb = b.groebner_default(options)?;
    for g in b.generators() {
        if !ga.contains(g)? {
            return Ok(false);
        }
    }
    for g in a.generators() {
        if !gb.contains(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}
