//! Jet ideals of affine generator sets and the maps between jet levels.
//!
//! Level `n` means "modulo `t^(n+1)`": the level-`n` jet ideal of `g` is
//! generated by the coefficients `F_0 .. F_n` of `g(Σ_i x^(i) t^i)`.

mod arc;
mod wedge;

use std::sync::Arc;

use thiserror::Error;

use crate::field::{Field, FieldError, FieldMap};
use crate::groebner::{GroebnerError, Ideal};
use crate::poly::{PolyError, Polynomial, VarTag, VariableContext};

pub use arc::{constant_jet, evaluate_jet_point, evaluate_jet_point_via, truncate_arc, TruncatedArc};
pub use wedge::{iterated_jet_ideal, WedgeIdeal};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JetError {
    #[error("i! vanishes in characteristic {p} for i = {i}")]
    CharacteristicDividesFactorial { p: u64, i: usize },
    #[error("point does not lie on the variety: generator {0} does not vanish")]
    PointNotOnVariety(usize),
    #[error("level {requested} is out of range (available: {available})")]
    LevelOutOfRange { requested: usize, available: usize },
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("expected {expected} coordinates, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

/// The level-`n` jet ideal of a generator list.
#[derive(Debug, Clone, PartialEq)]
pub struct JetIdeal<F: Field> {
    base_ctx: Arc<VariableContext>,
    field: F,
    base_generators: Vec<Polynomial<F>>,
    level: usize,
    ctx: Arc<VariableContext>,
    /// `generators[i][g]` is `F_{i,g}`.
    generators: Vec<Vec<Polynomial<F>>>,
}

impl<F: Field> JetIdeal<F> {
    pub fn base_ctx(&self) -> &Arc<VariableContext> {
        &self.base_ctx
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn base_generators(&self) -> &[Polynomial<F>] {
        &self.base_generators
    }

    pub fn level(&self) -> usize {
        self.level
    }

    /// The jet variable context.
    pub fn ctx(&self) -> &Arc<VariableContext> {
        &self.ctx
    }

    /// `F_{i,g}`.
    pub fn generator(&self, i: usize, g: usize) -> &Polynomial<F> {
        &self.generators[i][g]
    }

    /// `[F_{i,0}, F_{i,1}, ..]`.
    pub fn level_generators(&self, i: usize) -> &[Polynomial<F>] {
        &self.generators[i]
    }

    /// All `F_{i,g}`, level by level.
    pub fn generators(&self) -> impl Iterator<Item = &Polynomial<F>> {
        self.generators.iter().flatten()
    }

    pub fn ideal(&self) -> Ideal<F> {
        Ideal::new(&self.ctx, &self.field, self.generators().cloned().collect())
            .expect("generators live in the jet context")
    }

    /// The jet variable `x_j^(i)` as a polynomial.
    pub fn variable(&self, base: usize, order: usize) -> Polynomial<F> {
        let idx = self.ctx.jet_index(base, order).expect("jet variable in range");
        Polynomial::variable(&self.ctx, &self.field, idx)
    }

    /// Moves a base polynomial to the level-0 jet variables.
    pub fn lift_base(&self, f: &Polynomial<F>) -> Polynomial<F> {
        at_level_zero(f, &self.ctx)
    }
}

fn at_level_zero<F: Field>(f: &Polynomial<F>, jet_ctx: &Arc<VariableContext>) -> Polynomial<F> {
    let map: Vec<usize> = (0..f.ctx().len())
        .map(|j| jet_ctx.jet_index(j, 0).expect("level 0 exists"))
        .collect();
    f.rename(jet_ctx, &map)
}

/// Expands every generator along `x_j -> Σ_{i≤n} x_j^(i) t^i`.
pub fn jet_ideal<F: Field>(
    ctx: &Arc<VariableContext>,
    field: &F,
    gens: &[Polynomial<F>],
    n: usize,
) -> Result<JetIdeal<F>, JetError> {
    if gens.iter().any(|g| g.ctx() != ctx || g.field() != field) {
        return Err(PolyError::ContextMismatch.into());
    }
    let jet_ctx = VariableContext::jet(ctx, n)?;
    let assignment: Vec<Vec<Polynomial<F>>> = (0..ctx.len())
        .map(|j| {
            (0..=n)
                .map(|i| Polynomial::variable(&jet_ctx, field, jet_ctx.jet_index(j, i).expect("jet var")))
                .collect()
        })
        .collect();
    let mut generators = vec![Vec::with_capacity(gens.len()); n + 1];
    for g in gens {
        for (i, coeff) in g.substitute_truncated(&assignment, n, &jet_ctx)?.into_iter().enumerate() {
            generators[i].push(coeff);
        }
    }
    Ok(JetIdeal {
        base_ctx: ctx.clone(),
        field: field.clone(),
        base_generators: gens.to_vec(),
        level: n,
        ctx: jet_ctx,
        generators,
    })
}

/// The jet derivation `D(x_j^(m)) = (m+1) x_j^(m+1)` on a jet context.
fn jet_derivation<F: Field>(p: &Polynomial<F>) -> Polynomial<F> {
    let ctx = p.ctx();
    let field = p.field();
    let mut acc = Polynomial::zero(ctx, field);
    for v in 0..ctx.len() {
        if !p.uses_variable(v) {
            continue;
        }
        let VarTag::Jet { base, order } = ctx.tag(v) else {
            unreachable!("jet derivation on a non-jet context")
        };
        let next = ctx
            .jet_index(base, order + 1)
            .expect("derivation stays below the context level");
        let factor = field.from_i64(order as i64 + 1);
        let d = p.partial_derivative(v);
        acc = &acc + &(&d * &Polynomial::variable(ctx, field, next)).scale(&factor);
    }
    acc
}

/// `D^i(f~) / i!` in the level-`n` jet context, where `f~` is `f` at level 0.
pub fn hs_coefficient_char0<F: Field>(
    f: &Polynomial<F>,
    i: usize,
    n: usize,
) -> Result<Polynomial<F>, JetError> {
    let field = f.field();
    let p = field.characteristic();
    if p != 0 && (i as u64) >= p {
        return Err(JetError::CharacteristicDividesFactorial { p, i });
    }
    if i > n {
        return Err(JetError::LevelOutOfRange {
            requested: i,
            available: n,
        });
    }
    let jet_ctx = VariableContext::jet(f.ctx(), n)?;
    let mut d = at_level_zero(f, &jet_ctx);
    let mut factorial = field.one();
    for k in 1..=i {
        d = jet_derivation(&d);
        factorial = field.mul(&factorial, &field.from_i64(k as i64));
    }
    Ok(d.scale(&field.inv(&factorial)?))
}

/// Applies a field map to every coefficient of a jet ideal.
pub fn base_change_ideal<F: Field, G: Field, M: FieldMap<F, G>>(
    jet: &JetIdeal<F>,
    map: &M,
) -> Result<JetIdeal<G>, JetError> {
    if map.source() != &jet.field {
        return Err(FieldError::DescriptorMismatch {
            expected: jet.field.descriptor_text(),
            found: map.source().descriptor_text(),
        }
        .into());
    }
    let image = |ps: &[Polynomial<F>]| -> Result<Vec<Polynomial<G>>, JetError> {
        ps.iter()
            .map(|p| p.map_coefficients(map).map_err(JetError::from))
            .collect()
    };
    Ok(JetIdeal {
        base_ctx: jet.base_ctx.clone(),
        field: map.target().clone(),
        base_generators: image(&jet.base_generators)?,
        level: jet.level,
        ctx: jet.ctx.clone(),
        generators: jet
            .generators
            .iter()
            .map(|row| image(row))
            .collect::<Result<_, _>>()?,
    })
}
