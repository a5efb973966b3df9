//! Jacobian matrices and the Jacobian-criterion non-smooth locus.

use std::sync::Arc;

use thiserror::Error;

use crate::field::Field;
use crate::groebner::{GroebnerError, Ideal};
use crate::poly::{PolyError, Polynomial, VariableContext};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SmoothError {
    #[error("codimension {codim} must lie between 1 and min(#generators, #variables) = {max}")]
    BadCodim { codim: usize, max: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

/// Rows are generators, columns base variables.
#[derive(Debug, Clone, PartialEq)]
pub struct JacobianMatrix<F: Field> {
    rows: Vec<Vec<Polynomial<F>>>,
}

impl<F: Field> JacobianMatrix<F> {
    pub fn rows(&self) -> &[Vec<Polynomial<F>>] {
        &self.rows
    }

    pub fn entry(&self, g: usize, v: usize) -> &Polynomial<F> {
        &self.rows[g][v]
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    /// Determinant of the submatrix on the given rows and columns.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Polynomial<F> {
        assert_eq!(rows.len(), cols.len(), "square minor");
        if rows.len() == 1 {
            return self.rows[rows[0]][cols[0]].clone();
        }
        let mut acc: Option<Polynomial<F>> = None;
        for (k, &c) in cols.iter().enumerate() {
            let entry = &self.rows[rows[0]][c];
            if entry.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = entry * &self.minor(&rows[1..], &rest);
            let term = if k % 2 == 1 { -&term } else { term };
            acc = Some(match acc {
                None => term,
                Some(a) => &a + &term,
            });
        }
        acc.unwrap_or_else(|| {
            let e = &self.rows[rows[0]][cols[0]];
            Polynomial::zero(e.ctx(), e.field())
        })
    }
}

pub fn jacobian_matrix<F: Field>(
    ctx: &Arc<VariableContext>,
    gens: &[Polynomial<F>],
) -> Result<JacobianMatrix<F>, SmoothError> {
    if gens.iter().any(|g| g.ctx() != ctx) {
        return Err(PolyError::ContextMismatch.into());
    }
    let rows = gens
        .iter()
        .map(|g| (0..ctx.len()).map(|v| g.partial_derivative(v)).collect())
        .collect();
    Ok(JacobianMatrix { rows })
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// `gens` together with every `codim x codim` minor of the Jacobian.
pub fn nonsmooth_ideal<F: Field>(
    ctx: &Arc<VariableContext>,
    field: &F,
    gens: &[Polynomial<F>],
    codim: usize,
) -> Result<Ideal<F>, SmoothError> {
    let max = gens.len().min(ctx.len());
    if codim == 0 || codim > max {
        return Err(SmoothError::BadCodim { codim, max });
    }
    let jac = jacobian_matrix(ctx, gens)?;
    let mut all = gens.to_vec();
    for rows in subsets(gens.len(), codim) {
        for cols in subsets(ctx.len(), codim) {
            all.push(jac.minor(&rows, &cols));
        }
    }
    Ok(Ideal::new(ctx, field, all)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{FieldDescriptor, Rationals};
    use crate::groebner::{ideal_member, krull_dimension, GbOptions};

    #[test]
    fn cusp_and_conic() {
        let ctx = VariableContext::new(&["x", "y"]).unwrap();
        let x = Polynomial::variable(&ctx, &Rationals, 0);
        let y = Polynomial::variable(&ctx, &Rationals, 1);
        let cusp = &(&y * &y) - &x.pow(3);
        let jac = jacobian_matrix(&ctx, &[cusp.clone()]).unwrap();
        assert_eq!(jac.entry(0, 0).to_string(), "-3*x^2");
        assert_eq!(jac.entry(0, 1).to_string(), "2*y");
        let nsm = nonsmooth_ideal(&ctx, &Rationals, &[cusp], 1).unwrap();
        assert_eq!(krull_dimension(&nsm, &GbOptions::default()).unwrap(), 0);

        let conic = &(&(&x * &x) + &(&y * &y)) - &Polynomial::one(&ctx, &Rationals);
        let nsm = nonsmooth_ideal(&ctx, &Rationals, &[conic], 1).unwrap();
        assert!(ideal_member(&Polynomial::one(&ctx, &Rationals), &nsm, &GbOptions::default()).unwrap());
    }

    #[test]
    fn count_surface_partials() {
        let k = FieldDescriptor::rational_functions(&FieldDescriptor::prime(2).unwrap(), "a").unwrap();
        let ctx = VariableContext::new(&["x", "y", "z"]).unwrap();
        let v = |i| Polynomial::variable(&ctx, &k, i);
        let a = Polynomial::constant(&ctx, &k, k.generator("a").unwrap());
        let f = &(&v(0).pow(2) + &(&v(1) * &v(2).pow(2))) - &a;
        let jac = jacobian_matrix(&ctx, &[f.clone()]).unwrap();
        let shown: Vec<String> = jac.rows()[0].iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, ["0", "z^2", "0"]);
        let nsm = nonsmooth_ideal(&ctx, &k, &[f], 1).unwrap();
        assert_eq!(nsm.generators().len(), 2);
        assert_eq!(
            nonsmooth_ideal(&ctx, &k, &[v(0)], 2).unwrap_err(),
            SmoothError::BadCodim { codim: 2, max: 1 }
        );
    }

    #[test]
    fn two_by_two_minor() {
        let ctx = VariableContext::new(&["x", "y"]).unwrap();
        let x = Polynomial::variable(&ctx, &Rationals, 0);
        let y = Polynomial::variable(&ctx, &Rationals, 1);
        let jac = jacobian_matrix(&ctx, &[&x * &y, &x + &y]).unwrap();
        assert_eq!(jac.minor(&[0, 1], &[0, 1]).to_string(), "-x + y");
    }
}
