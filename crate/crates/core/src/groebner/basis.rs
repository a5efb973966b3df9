use std::cmp::Ordering;
use std::collections::HashSet;
use std::sync::Arc;

use super::{GbOptions, GroebnerError, MonomialOrder};
use crate::field::Field;
use crate::poly::{Monomial, Polynomial, VariableContext};

/// Terms sorted descending under a fixed monomial order; monic once in a basis.
pub(crate) type Terms<E> = Vec<(Monomial, E)>;

/// A reduced Gröbner basis together with its monomial order.
#[derive(Debug, Clone)]
pub struct GroebnerBasis<F: Field> {
    ctx: Arc<VariableContext>,
    field: F,
    order: MonomialOrder,
    elements: Vec<Terms<F::Element>>,
}

pub(crate) fn sort_terms<E>(order: &MonomialOrder, mut terms: Terms<E>) -> Terms<E> {
    terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
    terms
}

fn make_monic<F: Field>(field: &F, terms: &mut Terms<F::Element>) -> Result<(), GroebnerError> {
    let inv = field.inv(&terms[0].1)?;
    if !field.is_one(&inv) {
        for (_, c) in terms.iter_mut() {
            *c = field.mul(c, &inv);
        }
    }
    Ok(())
}

/// `p - c * m * g` with all operands sorted under `order`.
fn sub_multiple<F: Field>(
    field: &F,
    order: &MonomialOrder,
    p: &[(Monomial, F::Element)],
    c: &F::Element,
    m: &Monomial,
    g: &[(Monomial, F::Element)],
) -> Terms<F::Element> {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let mut i = 0;
    let mut shifted = g.iter().map(|(gm, gc)| (gm.mul(m), gc));
    let mut next = shifted.next();
    while i < p.len() {
        let Some((gm, gc)) = &next else { break };
        match order.cmp(&p[i].0, gm) {
            Ordering::Greater => {
                out.push(p[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((gm.clone(), field.neg(&field.mul(c, gc))));
                next = shifted.next();
            }
            Ordering::Equal => {
                let v = field.sub(&p[i].1, &field.mul(c, gc));
                if !field.is_zero(&v) {
                    out.push((gm.clone(), v));
                }
                i += 1;
                next = shifted.next();
            }
        }
    }
    out.extend(p[i..].iter().cloned());
    while let Some((gm, gc)) = next {
        out.push((gm, field.neg(&field.mul(c, gc))));
        next = shifted.next();
    }
    out
}

/// Full reduction of `p` by monic `basis`; returns the remainder.
pub(crate) fn reduce<F: Field>(
    field: &F,
    order: &MonomialOrder,
    mut p: Terms<F::Element>,
    basis: &[Terms<F::Element>],
) -> Terms<F::Element> {
    let mut rem = Vec::new();
    let mut start = 0;
    while start < p.len() {
        let (m, c) = &p[start];
        let divisor = basis
            .iter()
            .find_map(|g| m.div(&g[0].0).map(|q| (q, g)));
        match divisor {
            Some((q, g)) => {
                let c = c.clone();
                p = sub_multiple(field, order, &p[start..], &c, &q, g);
                start = 0;
            }
            None => {
                rem.push(p[start].clone());
                start += 1;
            }
        }
    }
    rem
}

fn s_polynomial<F: Field>(
    field: &F,
    order: &MonomialOrder,
    f: &[(Monomial, F::Element)],
    g: &[(Monomial, F::Element)],
) -> Terms<F::Element> {
    let lcm = f[0].0.lcm(&g[0].0);
    let uf = lcm.div(&f[0].0).expect("lcm");
    let ug = lcm.div(&g[0].0).expect("lcm");
    let scaled: Terms<F::Element> = f[1..].iter().map(|(m, c)| (m.mul(&uf), c.clone())).collect();
    sub_multiple(field, order, &scaled, &field.one(), &ug, &g[1..])
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

impl<F: Field> GroebnerBasis<F> {
    /// Buchberger's algorithm with the normal selection strategy and both
    /// Buchberger criteria, followed by full interreduction.
    pub fn compute(
        ctx: &Arc<VariableContext>,
        field: &F,
        generators: &[Polynomial<F>],
        order: &MonomialOrder,
        options: &GbOptions,
    ) -> Result<Self, GroebnerError> {
        assert_eq!(order.nvars(), ctx.len(), "order and context disagree");
        let unit = |ctx: &Arc<VariableContext>| GroebnerBasis {
            ctx: ctx.clone(),
            field: field.clone(),
            order: order.clone(),
            elements: vec![vec![(Monomial::one(ctx.len()), field.one())]],
        };

        let mut basis: Vec<Terms<F::Element>> = Vec::new();
        for g in generators {
            if g.ctx() != ctx || g.field() != field {
                return Err(GroebnerError::ContextMismatch);
            }
            if g.is_zero() {
                continue;
            }
            let mut t = sort_terms(order, g.terms().to_vec());
            if t[0].0.is_one() {
                return Ok(unit(ctx));
            }
            make_monic(field, &mut t)?;
            basis.push(t);
        }

        let mut pairs: Vec<Pair> = Vec::new();
        let mut pending: HashSet<(usize, usize)> = HashSet::new();
        for j in 0..basis.len() {
            for i in 0..j {
                pairs.push(Pair {
                    i,
                    j,
                    lcm: basis[i][0].0.lcm(&basis[j][0].0),
                });
                pending.insert((i, j));
            }
        }

        let mut steps = 0usize;
        while !pairs.is_empty() {
            let best = (0..pairs.len())
                .min_by(|&a, &b| {
                    order
                        .cmp(&pairs[a].lcm, &pairs[b].lcm)
                        .then((pairs[a].i, pairs[a].j).cmp(&(pairs[b].i, pairs[b].j)))
                })
                .expect("nonempty");
            let Pair { i, j, lcm } = pairs.swap_remove(best);
            pending.remove(&(i, j));

            if basis[i][0].0.is_coprime(&basis[j][0].0) {
                continue;
            }
            let chain = (0..basis.len()).any(|k| {
                k != i
                    && k != j
                    && basis[k][0].0.divides(&lcm)
                    && !pending.contains(&(i.min(k), i.max(k)))
                    && !pending.contains(&(j.min(k), j.max(k)))
            });
            if chain {
                continue;
            }

            steps += 1;
            if steps > options.step_limit {
                return Err(GroebnerError::StepLimitExceeded(options.step_limit));
            }
            let s = s_polynomial(field, order, &basis[i], &basis[j]);
            let mut r = reduce(field, order, s, &basis);
            if r.is_empty() {
                continue;
            }
            if r[0].0.is_one() {
                return Ok(unit(ctx));
            }
            make_monic(field, &mut r)?;
            let new = basis.len();
            for k in 0..new {
                pairs.push(Pair {
                    i: k,
                    j: new,
                    lcm: basis[k][0].0.lcm(&r[0].0),
                });
                pending.insert((k, new));
            }
            basis.push(r);
        }

        let elements = interreduce(field, order, basis)?;
        Ok(GroebnerBasis {
            ctx: ctx.clone(),
            field: field.clone(),
            order: order.clone(),
            elements,
        })
    }

    pub fn ctx(&self) -> &Arc<VariableContext> {
        &self.ctx
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// True iff the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0][0].0.is_one()
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.elements.iter().map(|t| &t[0].0)
    }

    /// Basis elements as polynomials, in decreasing order of leading monomial.
    pub fn polynomials(&self) -> Vec<Polynomial<F>> {
        self.elements
            .iter()
            .map(|t| Polynomial::from_terms(&self.ctx, &self.field, t.iter().cloned()))
            .collect()
    }

    /// Remainder of `f` on division by the basis.
    pub fn normal_form(&self, f: &Polynomial<F>) -> Result<Polynomial<F>, GroebnerError> {
        if f.ctx() != &self.ctx || f.field() != &self.field {
            return Err(GroebnerError::ContextMismatch);
        }
        let p = sort_terms(&self.order, f.terms().to_vec());
        let r = reduce(&self.field, &self.order, p, &self.elements);
        Ok(Polynomial::from_terms(&self.ctx, &self.field, r))
    }

    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool, GroebnerError> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Checks that every S-polynomial of basis pairs reduces to zero.
    pub fn is_confluent(&self) -> bool {
        let n = self.elements.len();
        (0..n).all(|j| {
            (0..j).all(|i| {
                let s = s_polynomial(&self.field, &self.order, &self.elements[i], &self.elements[j]);
                reduce(&self.field, &self.order, s, &self.elements).is_empty()
            })
        })
    }

    /// Checks the reducedness conditions: monic, and no term of any element is
    /// divisible by the leading monomial of another.
    pub fn is_reduced(&self) -> bool {
        self.elements.iter().enumerate().all(|(i, g)| {
            self.field.is_one(&g[0].1)
                && self.elements.iter().enumerate().all(|(k, h)| {
                    k == i || g.iter().all(|(m, _)| !h[0].0.divides(m))
                })
        })
    }
}

fn interreduce<F: Field>(
    field: &F,
    order: &MonomialOrder,
    basis: Vec<Terms<F::Element>>,
) -> Result<Vec<Terms<F::Element>>, GroebnerError> {
    // minimal basis: drop elements whose leading monomial is divisible by another's
    let keep: Vec<bool> = (0..basis.len())
        .map(|i| {
            !(0..basis.len()).any(|j| {
                j != i
                    && basis[j][0].0.divides(&basis[i][0].0)
                    && (basis[j][0].0 != basis[i][0].0 || j < i)
            })
        })
        .collect();
    let minimal: Vec<Terms<F::Element>> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();

    let mut reduced = Vec::with_capacity(minimal.len());
    for (i, g) in minimal.iter().enumerate() {
        let lead = g[0].clone();
        let others: Vec<Terms<F::Element>> = minimal
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, h)| h.clone())
            .collect();
        let tail = reduce(field, order, g[1..].to_vec(), &others);
        let mut t = Vec::with_capacity(tail.len() + 1);
        t.push(lead);
        t.extend(tail);
        make_monic(field, &mut t)?;
        reduced.push(t);
    }
    reduced.sort_by(|a, b| order.cmp(&b[0].0, &a[0].0));
    Ok(reduced)
}
