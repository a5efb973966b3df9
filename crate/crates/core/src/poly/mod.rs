//! Sparse multivariate polynomials over a [`Field`].

mod context;
mod monomial;
mod series;

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops;
use std::sync::Arc;

use thiserror::Error;

use crate::field::display::{format_sum, power};
use crate::field::{Field, FieldError, FieldMap};

pub(crate) use context::is_identifier;
pub use context::{VarTag, VariableContext};
pub use monomial::Monomial;
pub use series::{series_mul, TruncatedSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomials live in different variable contexts")]
    ContextMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("no truncated assignment for variable `{0}`")]
    MissingAssignment(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("invalid variable name `{0}`")]
    InvalidName(String),
    #[error("generated variable name `{0}` collides with another variable")]
    NameCollision(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// A polynomial with terms sorted descending under degrevlex in context order.
#[derive(Clone)]
pub struct Polynomial<F: Field> {
    ctx: Arc<VariableContext>,
    field: F,
    terms: Vec<(Monomial, F::Element)>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero(ctx: &Arc<VariableContext>, field: &F) -> Self {
        Polynomial {
            ctx: ctx.clone(),
            field: field.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ctx: &Arc<VariableContext>, field: &F, c: F::Element) -> Self {
        let terms = if field.is_zero(&c) {
            Vec::new()
        } else {
            vec![(Monomial::one(ctx.len()), c)]
        };
        Polynomial {
            ctx: ctx.clone(),
            field: field.clone(),
            terms,
        }
    }

    pub fn one(ctx: &Arc<VariableContext>, field: &F) -> Self {
        Self::constant(ctx, field, field.one())
    }

    pub fn variable(ctx: &Arc<VariableContext>, field: &F, index: usize) -> Self {
        Polynomial {
            ctx: ctx.clone(),
            field: field.clone(),
            terms: vec![(Monomial::variable(ctx.len(), index, 1), field.one())],
        }
    }

    pub fn variable_named(
        ctx: &Arc<VariableContext>,
        field: &F,
        name: &str,
    ) -> Result<Self, PolyError> {
        let i = ctx
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        Ok(Self::variable(ctx, field, i))
    }

    /// Collects terms, merging equal monomials and dropping zeros.
    pub fn from_terms<I>(ctx: &Arc<VariableContext>, field: &F, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, F::Element)>,
    {
        let mut acc: HashMap<Monomial, F::Element> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.len(), ctx.len());
            match acc.get_mut(&m) {
                Some(e) => *e = field.add(e, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !field.is_zero(c)).collect();
        terms.sort_by(|a, b| b.0.cmp_degrevlex(&a.0));
        Polynomial {
            ctx: ctx.clone(),
            field: field.clone(),
            terms,
        }
    }

    pub fn ctx(&self) -> &Arc<VariableContext> {
        &self.ctx
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn terms(&self) -> &[(Monomial, F::Element)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F::Element)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn constant_term(&self) -> F::Element {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => self.field.zero(),
        }
    }

    /// Largest total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m[var]).max().unwrap_or(0)
    }

    pub fn uses_variable(&self, var: usize) -> bool {
        self.terms.iter().any(|(m, _)| m[var] > 0)
    }

    pub fn same_ring(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx == other.ctx) && self.field == other.field
    }

    fn check_ring(&self, other: &Self) -> Result<(), PolyError> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(PolyError::ContextMismatch)
        }
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let f = &self.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let rhs = |c: &F::Element| if negate { f.neg(c) } else { c.clone() };
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ma.cmp_degrevlex(mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb.clone(), rhs(cb)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { f.sub(ca, cb) } else { f.add(ca, cb) };
                    if !f.is_zero(&c) {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|(m, c)| (m.clone(), rhs(c))));
        Polynomial {
            ctx: self.ctx.clone(),
            field: self.field.clone(),
            terms: out,
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    /// Exact product. Fails when the operands live in different rings.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ctx, f));
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return Ok(self.mul_term(m, c));
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return Ok(other.mul_term(m, c));
        }
        let mut acc: HashMap<Monomial, F::Element> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = f.mul(ca, cb);
                let m = ma.mul(mb);
                match acc.get_mut(&m) {
                    Some(e) => *e = f.add(e, &c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !f.is_zero(c)).collect();
        terms.sort_by(|a, b| b.0.cmp_degrevlex(&a.0));
        Ok(Polynomial {
            ctx: self.ctx.clone(),
            field: f.clone(),
            terms,
        })
    }

    /// Multiplies by `c * m`; monomial multiplication preserves the term order.
    pub fn mul_term(&self, m: &Monomial, c: &F::Element) -> Self {
        let f = &self.field;
        if f.is_zero(c) {
            return Self::zero(&self.ctx, f);
        }
        let terms = self
            .terms
            .iter()
            .filter_map(|(mm, cc)| {
                let p = f.mul(cc, c);
                (!f.is_zero(&p)).then(|| (mm.mul(m), p))
            })
            .collect();
        Polynomial {
            ctx: self.ctx.clone(),
            field: f.clone(),
            terms,
        }
    }

    pub fn scale(&self, c: &F::Element) -> Self {
        self.mul_term(&Monomial::one(self.ctx.len()), c)
    }

    pub fn neg(&self) -> Self {
        let f = &self.field;
        Polynomial {
            ctx: self.ctx.clone(),
            field: f.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), f.neg(c))).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ctx, &self.field);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative with respect to the variable at `var`.
    pub fn partial_derivative(&self, var: usize) -> Self {
        let f = &self.field;
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m[var];
            if e == 0 {
                return None;
            }
            let c = f.mul(c, &f.from_i64(e as i64));
            if f.is_zero(&c) {
                return None;
            }
            let mut m = m.clone();
            m.set(var, e - 1);
            Some((m, c))
        });
        Self::from_terms(&self.ctx, f, terms.collect::<Vec<_>>())
    }

    pub fn derivative_by_name(&self, name: &str) -> Result<Self, PolyError> {
        let var = self
            .ctx
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        Ok(self.partial_derivative(var))
    }

    /// Evaluates at a point given by one field element per context variable.
    pub fn evaluate(&self, point: &[F::Element]) -> F::Element {
        let f = &self.field;
        assert_eq!(point.len(), self.ctx.len(), "point dimension");
        let mut acc = f.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    t = f.mul(&t, &f.pow(&point[i], e as u64));
                    if f.is_zero(&t) {
                        break;
                    }
                }
            }
            acc = f.add(&acc, &t);
        }
        acc
    }

    /// Substitutes a polynomial (in a common target ring) for every variable.
    pub fn substitute(&self, images: &[Polynomial<F>]) -> Result<Self, PolyError> {
        assert_eq!(images.len(), self.ctx.len(), "one image per variable");
        let target = images.first().ok_or(PolyError::ContextMismatch)?;
        if images.iter().any(|p| !p.same_ring(target)) {
            return Err(PolyError::ContextMismatch);
        }
        let mut acc = Self::zero(&target.ctx, &self.field);
        let mut cache: HashMap<(usize, u32), Polynomial<F>> = HashMap::new();
        for (m, c) in &self.terms {
            let mut t = Self::constant(&target.ctx, &self.field, c.clone());
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    let p = cache.entry((i, e)).or_insert_with(|| images[i].pow(e));
                    t = &t * p;
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Moves the polynomial into `target`, sending variable `i` to `map[i]`.
    pub fn rename(&self, target: &Arc<VariableContext>, map: &[usize]) -> Self {
        assert_eq!(map.len(), self.ctx.len(), "one image per variable");
        let terms = self.terms.iter().map(|(m, c)| {
            let mut exps = vec![0u32; target.len()];
            for (i, &e) in m.iter().enumerate() {
                exps[map[i]] += e;
            }
            (Monomial::from(exps), c.clone())
        });
        Self::from_terms(target, &self.field, terms.collect::<Vec<_>>())
    }

    /// Moves the polynomial into `target` by matching variable names.
    pub fn rename_by_name(&self, target: &Arc<VariableContext>) -> Result<Self, PolyError> {
        let mut map = Vec::with_capacity(self.ctx.len());
        for (i, name) in self.ctx.names().iter().enumerate() {
            match target.index_of(name) {
                Some(j) => map.push(j),
                None if !self.uses_variable(i) => map.push(usize::MAX),
                None => return Err(PolyError::UnknownVariable(name.clone())),
            }
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let mut exps = vec![0u32; target.len()];
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    exps[map[i]] += e;
                }
            }
            (Monomial::from(exps), c.clone())
        });
        Ok(Self::from_terms(target, &self.field, terms.collect::<Vec<_>>()))
    }

    /// Applies a field map coefficient-wise.
    pub fn map_coefficients<G: Field, M: FieldMap<F, G>>(
        &self,
        map: &M,
    ) -> Result<Polynomial<G>, PolyError> {
        let g = map.target();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let image = map.apply(c)?;
            if !g.is_zero(&image) {
                terms.push((m.clone(), image));
            }
        }
        Ok(Polynomial {
            ctx: self.ctx.clone(),
            field: g.clone(),
            terms,
        })
    }

    /// Renders the polynomial with the given variable names.
    pub fn format_with(&self, names: &[String]) -> String {
        let f = &self.field;
        format_sum(
            f,
            self.terms.iter().map(|(m, c)| {
                let mono: Vec<String> = self
                    .ctx
                    .factor_order()
                    .iter()
                    .filter(|&&i| m[i] > 0)
                    .map(|&i| power(&names[i], m[i]))
                    .collect();
                (c, mono.join("*"))
            }),
        )
    }
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other) && self.terms == other.terms
    }
}

impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(self.ctx.names()))
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

// The operator forms panic on mismatched rings; use the `checked_*` methods
// when the operands come from user input.
impl<F: Field> ops::Add for &Polynomial<F> {
    type Output = Polynomial<F>;

    fn add(self, rhs: Self) -> Polynomial<F> {
        self.checked_add(rhs).expect("polynomials in the same ring")
    }
}

impl<F: Field> ops::Sub for &Polynomial<F> {
    type Output = Polynomial<F>;

    fn sub(self, rhs: Self) -> Polynomial<F> {
        self.checked_sub(rhs).expect("polynomials in the same ring")
    }
}

impl<F: Field> ops::Mul for &Polynomial<F> {
    type Output = Polynomial<F>;

    fn mul(self, rhs: Self) -> Polynomial<F> {
        self.checked_mul(rhs).expect("polynomials in the same ring")
    }
}

impl<F: Field> ops::Neg for &Polynomial<F> {
    type Output = Polynomial<F>;

    fn neg(self) -> Polynomial<F> {
        Polynomial::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{FieldDescriptor, PrimeField, Rationals};

    fn ctx(names: &[&str]) -> Arc<VariableContext> {
        VariableContext::new(names).unwrap()
    }

    fn var<F: Field>(c: &Arc<VariableContext>, f: &F, name: &str) -> Polynomial<F> {
        Polynomial::variable_named(c, f, name).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let c = ctx(&["x0", "y0"]);
        let (x, y) = (var(&c, &Rationals, "x0"), var(&c, &Rationals, "y0"));
        let p = &(&x + &y) * &(&x - &y);
        assert_eq!(p.to_string(), "x0^2 - y0^2");
    }

    #[test]
    fn frobenius_in_char_two() {
        let f2 = PrimeField::new(2).unwrap();
        let c = ctx(&["x", "y"]);
        let s = &var(&c, &f2, "x") + &var(&c, &f2, "y");
        assert_eq!((&s * &s).to_string(), "x^2 + y^2");
    }

    #[test]
    fn product_over_rational_functions() {
        let k = FieldDescriptor::rational_functions(&FieldDescriptor::prime(5).unwrap(), "s")
            .unwrap();
        let c = ctx(&["x"]);
        let x = var(&c, &k, "x");
        let s = k.generator("s").unwrap();
        let lhs = &x.scale(&s) + &Polynomial::one(&c, &k);
        assert_eq!((&lhs * &x).to_string(), "s*x^2 + x");
    }

    #[test]
    fn mismatched_contexts_are_rejected() {
        let a = var(&ctx(&["x"]), &Rationals, "x");
        let b = var(&ctx(&["y"]), &Rationals, "y");
        assert_eq!(a.checked_mul(&b), Err(PolyError::ContextMismatch));
    }

    #[test]
    fn derivative_of_pth_power_vanishes() {
        let f2 = PrimeField::new(2).unwrap();
        let c = ctx(&["x", "y", "z"]);
        let (x, y, z) = (var(&c, &f2, "x"), var(&c, &f2, "y"), var(&c, &f2, "z"));
        let f = &(&x * &x) + &(&y * &(&z * &z));
        assert!(f.derivative_by_name("x").unwrap().is_zero());
        assert_eq!(f.derivative_by_name("y").unwrap().to_string(), "z^2");
        assert_eq!(
            f.derivative_by_name("w"),
            Err(PolyError::UnknownVariable("w".into()))
        );
    }

    #[test]
    fn derivative_of_cusp() {
        let c = ctx(&["x", "y"]);
        let (x, y) = (var(&c, &Rationals, "x"), var(&c, &Rationals, "y"));
        let f = &(&y * &y) - &x.pow(3);
        assert_eq!(f.derivative_by_name("y").unwrap().to_string(), "2*y");
        assert_eq!(f.derivative_by_name("x").unwrap().to_string(), "-3*x^2");
    }
}
