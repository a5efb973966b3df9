use std::sync::Arc;

use super::{JetError, JetIdeal};
use crate::field::Field;
use crate::poly::{PolyError, Polynomial, VarTag, VariableContext};

/// Doubly iterated jet ideal: `F_{(i1,i2),g}` is the coefficient of
/// `t1^i1 t2^i2` in `g(Σ x^(a,b) t1^a t2^b)`.
#[derive(Debug, Clone, PartialEq)]
pub struct WedgeIdeal<F: Field> {
    base_ctx: Arc<VariableContext>,
    field: F,
    orders: (usize, usize),
    ctx: Arc<VariableContext>,
    /// `generators[i1][i2][g]`.
    generators: Vec<Vec<Vec<Polynomial<F>>>>,
}

impl<F: Field> WedgeIdeal<F> {
    pub fn orders(&self) -> (usize, usize) {
        self.orders
    }

    pub fn ctx(&self) -> &Arc<VariableContext> {
        &self.ctx
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn generator(&self, i1: usize, i2: usize, g: usize) -> &Polynomial<F> {
        &self.generators[i1][i2][g]
    }

    /// `((i1, i2), g, F_{(i1,i2),g})` in lexicographic index order.
    pub fn generators(&self) -> impl Iterator<Item = ((usize, usize), usize, &Polynomial<F>)> {
        self.generators.iter().enumerate().flat_map(|(i1, row)| {
            row.iter()
                .enumerate()
                .flat_map(move |(i2, gs)| gs.iter().enumerate().map(move |(g, p)| ((i1, i2), g, p)))
        })
    }

    pub fn len(&self) -> usize {
        self.generators().count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Exchanges the roles of `t1` and `t2`: variables `x^(a,b) -> x^(b,a)`
    /// and generator indices `(i1,i2) -> (i2,i1)`.
    pub fn swapped(&self) -> Result<WedgeIdeal<F>, JetError> {
        let (n1, n2) = self.orders;
        let ctx = VariableContext::wedge(&self.base_ctx, n2, n1)?;
        let map: Vec<usize> = (0..self.ctx.len())
            .map(|v| match self.ctx.tag(v) {
                VarTag::Wedge { base, orders: (a, b) } => ctx.wedge_index(base, (b, a)).expect("swapped index"),
                _ => unreachable!("wedge context"),
            })
            .collect();
        let generators = (0..=n2)
            .map(|i2| {
                (0..=n1)
                    .map(|i1| {
                        self.generators[i1][i2]
                            .iter()
                            .map(|p| p.rename(&ctx, &map))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Ok(WedgeIdeal {
            base_ctx: self.base_ctx.clone(),
            field: self.field.clone(),
            orders: (n2, n1),
            ctx,
            generators,
        })
    }

    /// For orders `(n, 0)`, the level-`n` jet ideal obtained by renaming
    /// `x^(i,0) -> x^(i)`.
    pub fn specialize(&self) -> Result<JetIdeal<F>, JetError> {
        let (n1, n2) = self.orders;
        if n2 != 0 {
            return Err(JetError::LevelOutOfRange {
                requested: 0,
                available: n2,
            });
        }
        let ctx = VariableContext::jet(&self.base_ctx, n1)?;
        let map: Vec<usize> = (0..self.ctx.len())
            .map(|v| match self.ctx.tag(v) {
                VarTag::Wedge { base, orders: (a, _) } => ctx.jet_index(base, a).expect("jet index"),
                _ => unreachable!("wedge context"),
            })
            .collect();
        let generators = self
            .generators
            .iter()
            .map(|row| row[0].iter().map(|p| p.rename(&ctx, &map)).collect())
            .collect();
        let base_generators = self.generators[0][0]
            .iter()
            .map(|p| {
                let back: Vec<usize> = (0..self.ctx.len())
                    .map(|v| match self.ctx.tag(v) {
                        VarTag::Wedge { base, .. } => base,
                        _ => unreachable!("wedge context"),
                    })
                    .collect();
                p.rename(&self.base_ctx, &back)
            })
            .collect();
        Ok(JetIdeal {
            base_ctx: self.base_ctx.clone(),
            field: self.field.clone(),
            base_generators,
            level: n1,
            ctx,
            generators,
        })
    }
}

/// Jet expansion in `t1` to level `n1`, then of every jet variable in `t2`
/// to level `n2`.
pub fn iterated_jet_ideal<F: Field>(
    ctx: &Arc<VariableContext>,
    field: &F,
    gens: &[Polynomial<F>],
    (n1, n2): (usize, usize),
) -> Result<WedgeIdeal<F>, JetError> {
    if gens.iter().any(|g| g.ctx() != ctx || g.field() != field) {
        return Err(PolyError::ContextMismatch.into());
    }
    let d = ctx.len();
    // Intermediate ring with one placeholder per (j, i1); the names cannot
    // collide with each other.
    let names: Vec<String> = (0..d)
        .flat_map(|j| (0..=n1).map(move |i| format!("_{j}_{i}")))
        .collect();
    let mid = VariableContext::new(&names)?;
    let first: Vec<Vec<Polynomial<F>>> = (0..d)
        .map(|j| {
            (0..=n1)
                .map(|i| Polynomial::variable(&mid, field, j * (n1 + 1) + i))
                .collect()
        })
        .collect();
    let wedge = VariableContext::wedge(ctx, n1, n2)?;
    let second: Vec<Vec<Polynomial<F>>> = (0..d)
        .flat_map(|j| (0..=n1).map(move |i1| (j, i1)))
        .map(|(j, i1)| {
            (0..=n2)
                .map(|i2| Polynomial::variable(&wedge, field, wedge.wedge_index(j, (i1, i2)).expect("wedge var")))
                .collect()
        })
        .collect();

    let mut generators = vec![vec![Vec::with_capacity(gens.len()); n2 + 1]; n1 + 1];
    for g in gens {
        for (i1, f) in g.substitute_truncated(&first, n1, &mid)?.into_iter().enumerate() {
            for (i2, h) in f.substitute_truncated(&second, n2, &wedge)?.into_iter().enumerate() {
                generators[i1][i2].push(h);
            }
        }
    }
    Ok(WedgeIdeal {
        base_ctx: ctx.clone(),
        field: field.clone(),
        orders: (n1, n2),
        ctx: wedge,
        generators,
    })
}
