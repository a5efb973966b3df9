use std::collections::HashMap;
use std::sync::Arc;

use super::PolyError;

/// Role of a variable in a jet or wedge context.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VarTag {
    Plain,
    /// `x_base^(order)`
    Jet { base: usize, order: usize },
    /// `x_base^(i1, i2)` of a doubly iterated jet.
    Wedge { base: usize, orders: (usize, usize) },
}

/// Ordered variable names. The order is the canonical variable priority:
/// index 0 is the largest variable.
#[derive(Debug, Clone)]
pub struct VariableContext {
    names: Vec<String>,
    tags: Vec<VarTag>,
    index: HashMap<String, usize>,
    /// Order of factors inside a printed monomial: base variable first, then
    /// jet order ascending.
    factor_order: Vec<usize>,
}

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl VariableContext {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Arc<Self>, PolyError> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        let tags = vec![VarTag::Plain; names.len()];
        Self::build(names, tags, PolyError::DuplicateVariable)
    }

    fn build(
        names: Vec<String>,
        tags: Vec<VarTag>,
        duplicate: fn(String) -> PolyError,
    ) -> Result<Arc<Self>, PolyError> {
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(PolyError::InvalidName(name.clone()));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(duplicate(name.clone()));
            }
        }
        let mut factor_order: Vec<usize> = (0..names.len()).collect();
        factor_order.sort_by_key(|&i| match tags[i] {
            VarTag::Plain => (0, i, 0, 0),
            VarTag::Jet { base, order } => (1, base, order, 0),
            VarTag::Wedge { base, orders } => (1, base, orders.0, orders.1),
        });
        Ok(Arc::new(VariableContext {
            names,
            tags,
            index,
            factor_order,
        }))
    }

    /// Jet variables `x0 .. xn` for each base variable `x`, ordered with
    /// higher jet order first and base order breaking ties.
    pub fn jet(base: &VariableContext, level: usize) -> Result<Arc<Self>, PolyError> {
        let mut names = Vec::new();
        let mut tags = Vec::new();
        for order in (0..=level).rev() {
            for (j, name) in base.names.iter().enumerate() {
                names.push(format!("{name}{order}"));
                tags.push(VarTag::Jet { base: j, order });
            }
        }
        Self::build(names, tags, PolyError::NameCollision)
    }

    /// Doubly indexed variables `x{i1}_{i2}`, higher orders first.
    pub fn wedge(base: &VariableContext, n1: usize, n2: usize) -> Result<Arc<Self>, PolyError> {
        let mut names = Vec::new();
        let mut tags = Vec::new();
        let mut orders: Vec<(usize, usize)> = (0..=n1)
            .flat_map(|a| (0..=n2).map(move |b| (a, b)))
            .collect();
        orders.sort_by(|x, y| (y.0 + y.1, y.0).cmp(&(x.0 + x.1, x.0)));
        for (a, b) in orders {
            for (j, name) in base.names.iter().enumerate() {
                names.push(format!("{name}{a}_{b}"));
                tags.push(VarTag::Wedge {
                    base: j,
                    orders: (a, b),
                });
            }
        }
        Self::build(names, tags, PolyError::NameCollision)
    }

    /// Appends a fresh variable named `stem` (or `stem_k` if taken).
    pub fn with_fresh(&self, stem: &str) -> (Arc<Self>, usize) {
        let mut name = stem.to_string();
        let mut k = 0;
        while self.index.contains_key(&name) {
            k += 1;
            name = format!("{stem}_{k}");
        }
        let mut names = self.names.clone();
        let mut tags = self.tags.clone();
        names.push(name);
        tags.push(VarTag::Plain);
        let ctx = Self::build(names, tags, PolyError::DuplicateVariable).expect("fresh name");
        let i = ctx.len() - 1;
        (ctx, i)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub(crate) fn factor_order(&self) -> &[usize] {
        &self.factor_order
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn tag(&self, i: usize) -> VarTag {
        self.tags[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn jet_index(&self, base: usize, order: usize) -> Option<usize> {
        self.tags
            .iter()
            .position(|t| *t == VarTag::Jet { base, order })
    }

    pub fn wedge_index(&self, base: usize, orders: (usize, usize)) -> Option<usize> {
        self.tags
            .iter()
            .position(|t| *t == VarTag::Wedge { base, orders })
    }
}

impl PartialEq for VariableContext {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.tags == other.tags
    }
}

impl Eq for VariableContext {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jet_context_order() {
        let base = VariableContext::new(&["x", "y"]).unwrap();
        let jet = VariableContext::jet(&base, 2).unwrap();
        assert_eq!(jet.names(), &["x2", "y2", "x1", "y1", "x0", "y0"]);
        assert_eq!(jet.jet_index(1, 0), Some(5));
    }

    #[test]
    fn jet_name_collision_is_rejected() {
        let base = VariableContext::new(&["x", "x1"]).unwrap();
        assert!(VariableContext::jet(&base, 1).is_ok());
        assert_eq!(
            VariableContext::jet(&base, 10).unwrap_err(),
            PolyError::NameCollision("x10".into())
        );
    }

    #[test]
    fn rejects_bad_names() {
        assert!(matches!(
            VariableContext::new(&["x", "x"]),
            Err(PolyError::DuplicateVariable(_))
        ));
        assert!(matches!(
            VariableContext::new(&["2x"]),
            Err(PolyError::InvalidName(_))
        ));
    }

    #[test]
    fn fresh_variable_avoids_clash() {
        let ctx = VariableContext::new(&["w", "x"]).unwrap();
        let (ext, i) = ctx.with_fresh("w");
        assert_eq!(ext.name(i), "w_1");
    }
}
