use std::sync::Arc;

use super::{PolyError, Polynomial, VariableContext};
use crate::field::Field;

/// Truncated power series `Σ_{i≤n} c_i t^i` with polynomial coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries<F: Field> {
    coeffs: Vec<Polynomial<F>>,
}

impl<F: Field> TruncatedSeries<F> {
    pub fn new(coeffs: Vec<Polynomial<F>>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least one coefficient");
        TruncatedSeries { coeffs }
    }

    pub fn constant(p: Polynomial<F>, level: usize) -> Self {
        let zero = Polynomial::zero(p.ctx(), p.field());
        let mut coeffs = vec![zero; level + 1];
        coeffs[0] = p;
        TruncatedSeries { coeffs }
    }

    pub fn level(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Polynomial<F>] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Polynomial<F>> {
        self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        TruncatedSeries {
            coeffs: series_mul(&self.coeffs, &other.coeffs, self.level()),
        }
    }

    pub fn scale(&self, c: &F::Element) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }
}

/// Convolution product of two coefficient vectors cut at `t^(level+1)`.
pub fn series_mul<F: Field>(
    a: &[Polynomial<F>],
    b: &[Polynomial<F>],
    level: usize,
) -> Vec<Polynomial<F>> {
    let ctx = a[0].ctx();
    let field = a[0].field();
    (0..=level)
        .map(|i| {
            let mut acc = Polynomial::zero(ctx, field);
            for j in 0..=i {
                if let (Some(x), Some(y)) = (a.get(j), b.get(i - j)) {
                    if !x.is_zero() && !y.is_zero() {
                        acc = &acc + &(x * y);
                    }
                }
            }
            acc
        })
        .collect()
}

impl<F: Field> Polynomial<F> {
    /// Coefficients `[F_0, .., F_n]` of `self(Σ_i c_{j,i} t^i)` modulo `t^(n+1)`.
    ///
    /// `assignment[j]` is the coefficient vector for variable `j` of `self`;
    /// unused variables may have empty vectors. Evaluation runs in the truncated
    /// series ring: per-variable power tables, then one truncated product per
    /// term, so nothing is ever expanded beyond degree `n` in `t`.
    pub fn substitute_truncated(
        &self,
        assignment: &[Vec<Polynomial<F>>],
        level: usize,
        target: &Arc<VariableContext>,
    ) -> Result<Vec<Polynomial<F>>, PolyError> {
        let field = self.field();
        let nvars = self.ctx().len();
        if assignment.len() != nvars {
            return Err(PolyError::ContextMismatch);
        }
        let mut powers: Vec<Vec<TruncatedSeries<F>>> = Vec::with_capacity(nvars);
        for (j, coeffs) in assignment.iter().enumerate() {
            let max = self.degree_in(j);
            if max == 0 {
                powers.push(Vec::new());
                continue;
            }
            if coeffs.len() != level + 1 {
                return Err(PolyError::MissingAssignment(self.ctx().name(j).to_string()));
            }
            if coeffs.iter().any(|c| c.ctx() != target || c.field() != field) {
                return Err(PolyError::ContextMismatch);
            }
            let series = TruncatedSeries::new(coeffs.clone());
            let mut table = vec![series.clone()];
            for _ in 1..max {
                let next = table.last().expect("nonempty").mul(&series);
                table.push(next);
            }
            powers.push(table);
        }

        let zero = Polynomial::zero(target, field);
        let mut acc = TruncatedSeries::constant(zero, level);
        for (m, c) in self.terms() {
            let mut term: Option<TruncatedSeries<F>> = None;
            for (j, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = &powers[j][e as usize - 1];
                term = Some(match term {
                    None => p.clone(),
                    Some(t) => t.mul(p),
                });
            }
            let term = match term {
                Some(t) => t.scale(c),
                None => TruncatedSeries::constant(Polynomial::constant(target, field, c.clone()), level),
            };
            acc = acc.add(&term);
        }
        Ok(acc.into_coeffs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use num_rational::BigRational;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn identity_substitution() {
        let base = VariableContext::new(&["x"]).unwrap();
        let jet = VariableContext::jet(&base, 1).unwrap();
        let f = Polynomial::variable(&base, &Rationals, 0);
        let x0 = Polynomial::variable_named(&jet, &Rationals, "x0").unwrap();
        let x1 = Polynomial::variable_named(&jet, &Rationals, "x1").unwrap();
        let out = f
            .substitute_truncated(&[vec![x0.clone(), x1.clone()]], 1, &jet)
            .unwrap();
        assert_eq!(out, vec![x0, x1]);
    }

    #[test]
    fn cusp_tangent_vanishes() {
        let base = VariableContext::new(&["x", "y"]).unwrap();
        let target = VariableContext::new::<&str>(&[]).unwrap();
        let (x, y) = (
            Polynomial::variable(&base, &Rationals, 0),
            Polynomial::variable(&base, &Rationals, 1),
        );
        let f = &(&y * &y) - &x.pow(3);
        let c = |v: BigRational| Polynomial::constant(&target, &Rationals, v);
        let out = f
            .substitute_truncated(
                &[vec![c(q(1, 1)), c(q(1, 1))], vec![c(q(1, 1)), c(q(3, 2))]],
                1,
                &target,
            )
            .unwrap();
        assert!(out.iter().all(|p| p.is_zero()));
    }

    #[test]
    fn product_of_uniformizers() {
        let base = VariableContext::new(&["x", "y"]).unwrap();
        let target = VariableContext::new::<&str>(&[]).unwrap();
        let f = &Polynomial::variable(&base, &Rationals, 0) * &Polynomial::variable(&base, &Rationals, 1);
        let c = |n: i64| Polynomial::constant(&target, &Rationals, q(n, 1));
        let t = vec![c(0), c(1), c(0)];
        let out = f.substitute_truncated(&[t.clone(), t], 2, &target).unwrap();
        assert_eq!(out, vec![c(0), c(0), c(1)]);
    }

    #[test]
    fn missing_assignment_is_reported() {
        let base = VariableContext::new(&["x"]).unwrap();
        let f = Polynomial::variable(&base, &Rationals, 0);
        assert_eq!(
            f.substitute_truncated(&[vec![]], 1, &base),
            Err(PolyError::MissingAssignment("x".into()))
        );
    }
}
