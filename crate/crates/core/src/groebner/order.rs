use std::cmp::Ordering;

use crate::poly::Monomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderKind {
    Lex,
    DegRevLex,
}

/// A monomial order: lex or degrevlex over a variable priority list,
/// optionally split into an outer elimination block and an inner block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    kind: OrderKind,
    /// Outer block, largest variable first. Empty for a plain order.
    outer: Vec<usize>,
    /// Remaining variables, largest first.
    inner: Vec<usize>,
}

impl MonomialOrder {
    /// Plain order with variable 0 largest.
    pub fn new(kind: OrderKind, nvars: usize) -> Self {
        MonomialOrder {
            kind,
            outer: Vec::new(),
            inner: (0..nvars).collect(),
        }
    }

    pub fn lex(nvars: usize) -> Self {
        Self::new(OrderKind::Lex, nvars)
    }

    pub fn degrevlex(nvars: usize) -> Self {
        Self::new(OrderKind::DegRevLex, nvars)
    }

    /// Plain order with an explicit priority list (a permutation of the variables).
    pub fn with_priority(kind: OrderKind, priority: Vec<usize>) -> Self {
        MonomialOrder {
            kind,
            outer: Vec::new(),
            inner: priority,
        }
    }

    /// Block order: any monomial in `eliminated` dominates everything free of them.
    /// Both blocks use `kind` and context order.
    pub fn block(kind: OrderKind, nvars: usize, eliminated: &[usize]) -> Self {
        let outer: Vec<usize> = (0..nvars).filter(|v| eliminated.contains(v)).collect();
        let inner = (0..nvars).filter(|v| !eliminated.contains(v)).collect();
        MonomialOrder { kind, outer, inner }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn eliminated(&self) -> &[usize] {
        &self.outer
    }

    pub fn nvars(&self) -> usize {
        self.outer.len() + self.inner.len()
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        if !self.outer.is_empty() {
            let o = cmp_on(self.kind, &self.outer, a, b);
            if o != Ordering::Equal {
                return o;
            }
        }
        cmp_on(self.kind, &self.inner, a, b)
    }
}

fn cmp_on(kind: OrderKind, vars: &[usize], a: &Monomial, b: &Monomial) -> Ordering {
    match kind {
        OrderKind::Lex => {
            for &v in vars {
                if a[v] != b[v] {
                    return a[v].cmp(&b[v]);
                }
            }
            Ordering::Equal
        }
        OrderKind::DegRevLex => {
            let da: u32 = vars.iter().map(|&v| a[v]).sum();
            let db: u32 = vars.iter().map(|&v| b[v]).sum();
            if da != db {
                return da.cmp(&db);
            }
            for &v in vars.iter().rev() {
                if a[v] != b[v] {
                    return b[v].cmp(&a[v]);
                }
            }
            Ordering::Equal
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(v: &[u32]) -> Monomial {
        Monomial::from(v.to_vec())
    }

    #[test]
    fn block_order_eliminates() {
        // w is variable 2; w dominates any power of x, y
        let ord = MonomialOrder::block(OrderKind::DegRevLex, 3, &[2]);
        assert_eq!(ord.cmp(&m(&[0, 0, 1]), &m(&[5, 5, 0])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[1, 0, 1]), &m(&[0, 1, 1])), Ordering::Greater);
    }

    #[test]
    fn priority_reorders_lex() {
        let ord = MonomialOrder::with_priority(OrderKind::Lex, vec![1, 0]);
        assert_eq!(ord.cmp(&m(&[5, 0]), &m(&[0, 1])), Ordering::Less);
    }

    fn mono3() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..4, 3).prop_map(Monomial::from)
    }

    proptest! {
        #[test]
        fn orders_are_multiplicative(a in mono3(), b in mono3(), c in mono3()) {
            for ord in [
                MonomialOrder::lex(3),
                MonomialOrder::degrevlex(3),
                MonomialOrder::block(OrderKind::DegRevLex, 3, &[1]),
            ] {
                prop_assert_eq!(ord.cmp(&a, &b), ord.cmp(&a.mul(&c), &b.mul(&c)));
                prop_assert!(ord.cmp(&a, &Monomial::one(3)) != Ordering::Less);
            }
        }
    }
}
