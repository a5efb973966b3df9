//! Newton-Hensel lifting of truncated arcs and brute-force jet enumeration
//! over prime fields.
//!
//! Jet levels count from 0 (level `n` is "modulo `t^(n+1)`"); the modulus
//! `ν` of a Greenberg scan is the number of retained coefficients, so the
//! target jets of a scan live at level `ν - 1`.

use std::collections::BTreeSet;
use std::sync::Arc;

use thiserror::Error;

use crate::field::{Field, FieldError};
use crate::jet::{evaluate_jet_point, jet_ideal, JetError, JetIdeal, TruncatedArc};
use crate::poly::{Polynomial, VariableContext};
use crate::smooth::jacobian_matrix;

/// Default cap on the nominal grid size `q^(#vars (n+1))`.
pub const DEFAULT_BUDGET: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GreenbergError {
    #[error("the Jacobian minor on the solved variables vanishes at the residue point")]
    SingularCenter,
    #[error("input arc does not satisfy generator {generator} at level {level}")]
    ResidualNonzero { generator: usize, level: usize },
    #[error("enumeration needs {required} candidate points, budget is {budget}")]
    BudgetExceeded { required: String, budget: u128 },
    #[error("enumeration needs a prime field, found {0}")]
    NotFinite(String),
    #[error("invalid lift problem: {0}")]
    InvalidProblem(String),
    #[error(transparent)]
    Jet(#[from] JetError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Input for [`hensel_lift`].
///
/// `coeffs[j]` holds the known coefficients of variable `j` and may be
/// ragged: solved variables need at least `nu` entries (only the first `nu`
/// are used), other variables are padded with zeros up to the target level.
#[derive(Debug, Clone)]
pub struct LiftProblem<F: Field> {
    pub ctx: Arc<VariableContext>,
    pub field: F,
    pub gens: Vec<Polynomial<F>>,
    pub coeffs: Vec<Vec<F::Element>>,
    pub nu: usize,
    pub solve: Vec<usize>,
    pub target: usize,
}

impl<F: Field> LiftProblem<F> {
    /// `nu` defaults to the shortest coefficient list among solved variables.
    pub fn new(
        ctx: &Arc<VariableContext>,
        field: &F,
        gens: &[Polynomial<F>],
        coeffs: Vec<Vec<F::Element>>,
        solve: Vec<usize>,
        target: usize,
    ) -> Self {
        let nu = solve
            .iter()
            .filter_map(|&j| coeffs.get(j).map(Vec::len))
            .min()
            .unwrap_or(0);
        LiftProblem {
            ctx: ctx.clone(),
            field: field.clone(),
            gens: gens.to_vec(),
            coeffs,
            nu,
            solve,
            target,
        }
    }

    pub fn with_nu(mut self, nu: usize) -> Self {
        self.nu = nu;
        self
    }

    fn validate(&self) -> Result<(), GreenbergError> {
        let bad = |m: String| Err(GreenbergError::InvalidProblem(m));
        if self.coeffs.len() != self.ctx.len() {
            return bad(format!("{} coefficient lists for {} variables", self.coeffs.len(), self.ctx.len()));
        }
        if self.solve.len() != self.gens.len() {
            return bad(format!("{} solved variables for {} generators", self.solve.len(), self.gens.len()));
        }
        let distinct: BTreeSet<usize> = self.solve.iter().copied().collect();
        if distinct.len() != self.solve.len() || self.solve.iter().any(|&j| j >= self.ctx.len()) {
            return bad("solved variables must be distinct context variables".into());
        }
        if self.nu == 0 {
            return bad("the modulus nu must be at least 1".into());
        }
        if self.target + 1 < self.nu {
            return bad(format!("target level {} lies below the input level {}", self.target, self.nu - 1));
        }
        if let Some(&j) = self.solve.iter().find(|&&j| self.coeffs[j].len() < self.nu) {
            return bad(format!("variable {} has fewer than {} coefficients", self.ctx.name(j), self.nu));
        }
        if self.coeffs.iter().any(Vec::is_empty) {
            return bad("every variable needs a residue coefficient".into());
        }
        Ok(())
    }
}

/// Inverse of a square matrix by Gauss-Jordan elimination.
fn invert<F: Field>(field: &F, m: &[Vec<F::Element>]) -> Option<Vec<Vec<F::Element>>> {
    let n = m.len();
    let mut a: Vec<Vec<F::Element>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|k| if k == i { field.one() } else { field.zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !field.is_zero(&a[r][col]))?;
        a.swap(col, pivot);
        let inv = field.inv(&a[col][col]).ok()?;
        for x in a[col].iter_mut() {
            *x = field.mul(x, &inv);
        }
        for r in 0..n {
            if r != col && !field.is_zero(&a[r][col]) {
                let factor = a[r][col].clone();
                for k in 0..2 * n {
                    let v = field.mul(&factor, &a[col][k]);
                    a[r][k] = field.sub(&a[r][k], &v);
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

fn residuals<F: Field>(jet: &JetIdeal<F>, arc: &TruncatedArc<F>, level: usize) -> Result<Vec<F::Element>, JetError> {
    let point = arc.jet_point(jet.ctx())?;
    Ok(jet.level_generators(level).iter().map(|g| g.evaluate(&point)).collect())
}

/// Lifts the input arc to `target` by coefficient-wise Newton steps on the
/// solved variables.
pub fn hensel_lift<F: Field>(problem: &LiftProblem<F>) -> Result<TruncatedArc<F>, GreenbergError> {
    problem.validate()?;
    let field = &problem.field;
    let n = problem.target;
    let nu = problem.nu;
    let mut coeffs: Vec<Vec<F::Element>> = problem
        .coeffs
        .iter()
        .enumerate()
        .map(|(j, c)| {
            let keep = if problem.solve.contains(&j) { nu } else { c.len().min(n + 1) };
            let mut v = c[..keep].to_vec();
            v.resize(n + 1, field.zero());
            v
        })
        .collect();
    let jet = jet_ideal(&problem.ctx, field, &problem.gens, n)?;

    let arc = TruncatedArc::new(field, n, coeffs.clone())?;
    for level in 0..nu {
        if let Some(g) = residuals(&jet, &arc, level)?.iter().position(|r| !field.is_zero(r)) {
            return Err(GreenbergError::ResidualNonzero { generator: g, level });
        }
    }

    let residue = arc.residue_point();
    let jac = jacobian_matrix(&problem.ctx, &problem.gens).map_err(|e| match e {
        crate::smooth::SmoothError::Poly(p) => GreenbergError::Jet(p.into()),
        other => GreenbergError::InvalidProblem(other.to_string()),
    })?;
    let minor: Vec<Vec<F::Element>> = (0..problem.gens.len())
        .map(|g| problem.solve.iter().map(|&j| jac.entry(g, j).evaluate(&residue)).collect())
        .collect();
    let inverse = invert(field, &minor).ok_or(GreenbergError::SingularCenter)?;

    for level in nu..=n {
        let arc = TruncatedArc::new(field, n, coeffs.clone())?;
        let r = residuals(&jet, &arc, level)?;
        for (s, &j) in problem.solve.iter().enumerate() {
            let mut acc = field.zero();
            for (g, rg) in r.iter().enumerate() {
                acc = field.sub(&acc, &field.mul(&inverse[s][g], rg));
            }
            coeffs[j][level] = acc;
        }
    }
    Ok(TruncatedArc::new(field, n, coeffs)?)
}

fn check_budget<F: Field>(field: &F, nvars: usize, level: usize, budget: u128) -> Result<Vec<F::Element>, GreenbergError> {
    let elements = field
        .elements()
        .ok_or_else(|| GreenbergError::NotFinite(field.descriptor_text()))?;
    let exponent = (nvars * (level + 1)) as u32;
    match (elements.len() as u128).checked_pow(exponent) {
        Some(required) if required <= budget => Ok(elements),
        _ => Err(GreenbergError::BudgetExceeded {
            required: format!("{}^{}", elements.len(), exponent),
            budget,
        }),
    }
}

/// All jets of levels `0..=n`, each level sorted, by level-wise extension.
fn jet_levels<F: Field>(
    ctx: &Arc<VariableContext>,
    field: &F,
    gens: &[Polynomial<F>],
    n: usize,
    budget: u128,
) -> Result<Vec<Vec<TruncatedArc<F>>>, GreenbergError> {
    let elements = check_budget(field, ctx.len(), n, budget)?;
    let d = ctx.len();
    let jet = jet_ideal(ctx, field, gens, n)?;
    let jctx = jet.ctx().clone();
    let slots: Vec<Vec<usize>> = (0..=n)
        .map(|k| (0..d).map(|j| jctx.jet_index(j, k).expect("jet var")).collect())
        .collect();

    let mut levels: Vec<Vec<Vec<Vec<F::Element>>>> = Vec::with_capacity(n + 1);
    let mut frontier: Vec<Vec<Vec<F::Element>>> = vec![vec![Vec::new(); d]];
    let mut point = vec![field.zero(); jctx.len()];
    for k in 0..=n {
        let mut next = Vec::new();
        for partial in &frontier {
            for (j, c) in partial.iter().enumerate() {
                for (i, e) in c.iter().enumerate() {
                    point[slots[i][j]] = e.clone();
                }
            }
            let mut choice = vec![0usize; d];
            loop {
                for j in 0..d {
                    point[slots[k][j]] = elements[choice[j]].clone();
                }
                if jet
                    .level_generators(k)
                    .iter()
                    .all(|g| field.is_zero(&g.evaluate(&point)))
                {
                    let mut ext = partial.clone();
                    for j in 0..d {
                        ext[j].push(elements[choice[j]].clone());
                    }
                    next.push(ext);
                }
                // odometer over the q^d choices at this level
                let mut pos = 0;
                while pos < d {
                    choice[pos] += 1;
                    if choice[pos] < elements.len() {
                        break;
                    }
                    choice[pos] = 0;
                    pos += 1;
                }
                if pos == d {
                    break;
                }
            }
        }
        levels.push(next.clone());
        frontier = next;
        for j in 0..d {
            point[slots[k][j]] = field.zero();
        }
    }
    levels
        .into_iter()
        .enumerate()
        .map(|(k, arcs)| {
            let mut out: Vec<TruncatedArc<F>> = arcs
                .into_iter()
                .map(|c| TruncatedArc::new(field, k, c))
                .collect::<Result<_, _>>()?;
            out.sort();
            Ok(out)
        })
        .collect()
}

/// Every point of the level-`n` jet scheme over the (prime) coefficient field.
pub fn enumerate_jets<F: Field>(
    ctx: &Arc<VariableContext>,
    field: &F,
    gens: &[Polynomial<F>],
    n: usize,
    budget: u128,
) -> Result<BTreeSet<TruncatedArc<F>>, GreenbergError> {
    let mut levels = jet_levels(ctx, field, gens, n, budget)?;
    Ok(levels.pop().expect("level n").into_iter().collect())
}

/// Truncations of a uniform-level jet set to level `n`.
pub fn image_truncation<'a, F: Field + 'a>(
    set: impl IntoIterator<Item = &'a TruncatedArc<F>>,
    n: usize,
) -> Result<BTreeSet<TruncatedArc<F>>, GreenbergError> {
    let mut level = None;
    let mut out = BTreeSet::new();
    for arc in set {
        match level {
            None => level = Some(arc.level()),
            Some(l) if l != arc.level() => {
                return Err(GreenbergError::InvalidProblem("jet set has mixed levels".into()))
            }
            _ => {}
        }
        out.insert(arc.truncate(n)?);
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct GreenbergScanReport<F: Field> {
    pub q: usize,
    pub nu: usize,
    pub m_max: usize,
    /// `(m, |image of level-m jets in level nu-1|)` for `m = nu-1 ..= m_max`.
    pub sizes: Vec<(usize, usize)>,
    pub monotone: bool,
    /// Smallest `m` whose image equals the image from `m_max`, if some
    /// `m < m_max` reaches it.
    pub stabilization: Option<usize>,
    /// `ceil((stabilization + 1) / nu)`: the constant `a` of the scan,
    /// measured in multiples of `nu`.
    pub a_candidate: Option<usize>,
    /// Image from level `m_max`.
    pub stable_image: BTreeSet<TruncatedArc<F>>,
    /// All jets at level `nu - 1`.
    pub targets: Vec<TruncatedArc<F>>,
}

pub fn greenberg_scan<F: Field>(
    ctx: &Arc<VariableContext>,
    field: &F,
    gens: &[Polynomial<F>],
    nu: usize,
    m_max: usize,
    budget: u128,
) -> Result<GreenbergScanReport<F>, GreenbergError> {
    if nu == 0 || m_max + 1 < nu {
        return Err(GreenbergError::InvalidProblem(format!(
            "need 1 <= nu <= m_max + 1, got nu = {nu}, m_max = {m_max}"
        )));
    }
    let levels = jet_levels(ctx, field, gens, m_max, budget)?;
    let images: Vec<(usize, BTreeSet<TruncatedArc<F>>)> = (nu - 1..=m_max)
        .map(|m| Ok((m, image_truncation(&levels[m], nu - 1)?)))
        .collect::<Result<_, GreenbergError>>()?;
    let sizes: Vec<(usize, usize)> = images.iter().map(|(m, s)| (*m, s.len())).collect();
    let monotone = sizes.windows(2).all(|w| w[1].1 <= w[0].1);
    let (_, last) = images.last().expect("nonempty scan");
    let first_equal = images.iter().find(|(_, s)| s == last).map(|(m, _)| *m).expect("last");
    let stabilization = (first_equal < m_max).then_some(first_equal);
    Ok(GreenbergScanReport {
        q: field.elements().map_or(0, |e| e.len()),
        nu,
        m_max,
        sizes,
        monotone,
        stabilization,
        a_candidate: stabilization.map(|m| (m + 1).div_ceil(nu)),
        stable_image: last.clone(),
        targets: levels[nu - 1].clone(),
    })
}

/// Outcome of lifting every smooth-center target of a scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheck {
    pub liftable: usize,
    pub confirmed: usize,
    pub failures: Vec<String>,
}

/// First choice of solved variables whose Jacobian minor is a unit at `point`.
pub fn smooth_solve_choice<F: Field>(
    ctx: &Arc<VariableContext>,
    gens: &[Polynomial<F>],
    field: &F,
    point: &[F::Element],
) -> Option<Vec<usize>> {
    let jac = jacobian_matrix(ctx, gens).ok()?;
    let values: Vec<Vec<F::Element>> = jac
        .rows()
        .iter()
        .map(|row| row.iter().map(|p| p.evaluate(point)).collect())
        .collect();
    let mut choice = Vec::new();
    fn go<F: Field>(
        field: &F,
        values: &[Vec<F::Element>],
        nvars: usize,
        start: usize,
        choice: &mut Vec<usize>,
    ) -> bool {
        if choice.len() == values.len() {
            let minor: Vec<Vec<F::Element>> = values
                .iter()
                .map(|row| choice.iter().map(|&j| row[j].clone()).collect())
                .collect();
            return invert(field, &minor).is_some();
        }
        for j in start..nvars {
            choice.push(j);
            if go(field, values, nvars, j + 1, choice) {
                return true;
            }
            choice.pop();
        }
        false
    }
    go(field, &values, ctx.len(), 0, &mut choice).then_some(choice)
}

/// Lifts every target jet with a smooth residue to level `m_max`, checks the
/// lift against the jet ideal and its truncation against the target, and
/// confirms that the target lies in the stable image.
pub fn hensel_cross_check<F: Field>(
    ctx: &Arc<VariableContext>,
    field: &F,
    gens: &[Polynomial<F>],
    report: &GreenbergScanReport<F>,
) -> Result<CrossCheck, GreenbergError> {
    let mut out = CrossCheck {
        liftable: 0,
        confirmed: 0,
        failures: Vec::new(),
    };
    let full = jet_ideal(ctx, field, gens, report.m_max)?;
    for target in &report.targets {
        let Some(solve) = smooth_solve_choice(ctx, gens, field, &target.residue_point()) else {
            continue;
        };
        out.liftable += 1;
        let problem = LiftProblem::new(ctx, field, gens, target.coeffs().to_vec(), solve, report.m_max)
            .with_nu(report.nu);
        let lifted = hensel_lift(&problem)?;
        let sound = evaluate_jet_point(&full, &lifted)?.iter().all(|r| field.is_zero(r));
        let agrees = lifted.truncate(report.nu - 1)? == *target;
        let covered = report.stable_image.contains(target);
        if sound && agrees && covered {
            out.confirmed += 1;
        } else {
            out.failures.push(target.format_with(ctx.names()));
        }
    }
    Ok(out)
}
