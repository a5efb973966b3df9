use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use super::{JetError, JetIdeal};
use crate::field::{Field, FieldMap};
use crate::poly::{Polynomial, VarTag, VariableContext};

/// A point of `X(K[t]/t^(n+1))`: one coefficient vector `(c_0 .. c_n)` per
/// base variable.
///
/// Equality, ordering and hashing look at the level and coefficients only.
#[derive(Clone)]
pub struct TruncatedArc<F: Field> {
    field: F,
    level: usize,
    coeffs: Vec<Vec<F::Element>>,
}

impl<F: Field> TruncatedArc<F> {
    /// Every vector must have length `level + 1`.
    pub fn new(field: &F, level: usize, coeffs: Vec<Vec<F::Element>>) -> Result<Self, JetError> {
        if let Some(bad) = coeffs.iter().find(|c| c.len() != level + 1) {
            return Err(JetError::ArityMismatch {
                expected: level + 1,
                found: bad.len(),
            });
        }
        Ok(TruncatedArc {
            field: field.clone(),
            level,
            coeffs,
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Vec<F::Element>] {
        &self.coeffs
    }

    /// Coefficient vector of base variable `j`.
    pub fn variable(&self, j: usize) -> &[F::Element] {
        &self.coeffs[j]
    }

    /// `(c_{j,0})_j`.
    pub fn residue_point(&self) -> Vec<F::Element> {
        self.coeffs.iter().map(|c| c[0].clone()).collect()
    }

    pub fn truncate(&self, n: usize) -> Result<Self, JetError> {
        if n > self.level {
            return Err(JetError::LevelOutOfRange {
                requested: n,
                available: self.level,
            });
        }
        Ok(TruncatedArc {
            field: self.field.clone(),
            level: n,
            coeffs: self.coeffs.iter().map(|c| c[..=n].to_vec()).collect(),
        })
    }

    /// Values of the jet variables of `ctx`, which must be a jet context of
    /// this arc's base variables at level at most `self.level`.
    pub fn jet_point(&self, ctx: &VariableContext) -> Result<Vec<F::Element>, JetError> {
        (0..ctx.len())
            .map(|v| match ctx.tag(v) {
                VarTag::Jet { base, order } if base < self.nvars() && order <= self.level => {
                    Ok(self.coeffs[base][order].clone())
                }
                VarTag::Jet { order, .. } => Err(JetError::LevelOutOfRange {
                    requested: order,
                    available: self.level,
                }),
                _ => Err(JetError::ArityMismatch {
                    expected: self.nvars(),
                    found: ctx.len(),
                }),
            })
            .collect()
    }

    /// `x:(1,1) y:(1,3/2)` style rendering.
    pub fn format_with(&self, names: &[String]) -> String {
        names
            .iter()
            .zip(&self.coeffs)
            .map(|(name, c)| {
                let parts: Vec<String> = c.iter().map(|e| self.field.format_element(e)).collect();
                format!("{name}:({})", parts.join(","))
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl<F: Field> fmt::Debug for TruncatedArc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TruncatedArc")
            .field("level", &self.level)
            .field("coeffs", &self.coeffs)
            .finish()
    }
}

impl<F: Field> PartialEq for TruncatedArc<F> {
    fn eq(&self, other: &Self) -> bool {
        self.level == other.level && self.coeffs == other.coeffs
    }
}

impl<F: Field> Eq for TruncatedArc<F> {}

impl<F: Field> PartialOrd for TruncatedArc<F> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<F: Field> Ord for TruncatedArc<F> {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.level, &self.coeffs).cmp(&(other.level, &other.coeffs))
    }
}

impl<F: Field> Hash for TruncatedArc<F> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.level.hash(state);
        self.coeffs.hash(state);
    }
}

/// The constant arc at a point of `V(gens)`.
pub fn constant_jet<F: Field>(
    ctx: &Arc<VariableContext>,
    field: &F,
    gens: &[Polynomial<F>],
    point: &[F::Element],
    n: usize,
) -> Result<TruncatedArc<F>, JetError> {
    if point.len() != ctx.len() {
        return Err(JetError::ArityMismatch {
            expected: ctx.len(),
            found: point.len(),
        });
    }
    if let Some(g) = gens.iter().position(|g| !field.is_zero(&g.evaluate(point))) {
        return Err(JetError::PointNotOnVariety(g));
    }
    let coeffs = point
        .iter()
        .map(|c| {
            let mut v = vec![field.zero(); n + 1];
            v[0] = c.clone();
            v
        })
        .collect();
    TruncatedArc::new(field, n, coeffs)
}

/// Values of every `F_{i,g}` at the arc, level by level.
pub fn evaluate_jet_point<F: Field>(
    jet: &JetIdeal<F>,
    arc: &TruncatedArc<F>,
) -> Result<Vec<F::Element>, JetError> {
    check_shape(jet, arc)?;
    if arc.field() != jet.field() {
        return Err(JetError::FieldMismatch(format!(
            "jet ideal over {}, arc over {}",
            jet.field().descriptor_text(),
            arc.field().descriptor_text()
        )));
    }
    let point = arc.jet_point(jet.ctx())?;
    Ok(jet.generators().map(|g| g.evaluate(&point)).collect())
}

/// As [`evaluate_jet_point`] for an arc over another field, reached from the
/// jet ideal's field by `map`.
pub fn evaluate_jet_point_via<F: Field, G: Field, M: FieldMap<F, G>>(
    jet: &JetIdeal<F>,
    arc: &TruncatedArc<G>,
    map: &M,
) -> Result<Vec<G::Element>, JetError> {
    check_shape(jet, arc)?;
    if map.source() != jet.field() || map.target() != arc.field() {
        return Err(JetError::FieldMismatch(format!(
            "map {} -> {} does not connect {} to {}",
            map.source().descriptor_text(),
            map.target().descriptor_text(),
            jet.field().descriptor_text(),
            arc.field().descriptor_text()
        )));
    }
    let point = arc.jet_point(jet.ctx())?;
    jet.generators()
        .map(|g| Ok(g.map_coefficients(map)?.evaluate(&point)))
        .collect()
}

fn check_shape<F: Field, G: Field>(jet: &JetIdeal<F>, arc: &TruncatedArc<G>) -> Result<(), JetError> {
    if arc.nvars() != jet.base_ctx().len() {
        return Err(JetError::ArityMismatch {
            expected: jet.base_ctx().len(),
            found: arc.nvars(),
        });
    }
    if arc.level() != jet.level() {
        return Err(JetError::LevelOutOfRange {
            requested: jet.level(),
            available: arc.level(),
        });
    }
    Ok(())
}

/// `π^m_n`: drops coefficients above index `n`.
pub fn truncate_arc<F: Field>(arc: &TruncatedArc<F>, n: usize) -> Result<TruncatedArc<F>, JetError> {
    arc.truncate(n)
}
