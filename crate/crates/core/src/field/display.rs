use super::Field;

/// Syntactic shape of a printed element, deciding where parentheses go.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    /// Integer, generator, or generator power.
    Atom,
    /// `c*s^k`: safe as a factor.
    Product,
    /// `n/d`: safe as a summand.
    Quotient,
    /// Needs parentheses everywhere except at top level.
    Sum,
}

/// Writes `Σ c_i * m_i` where the monomial strings are already rendered and an
/// empty monomial stands for the constant term. Terms must be in print order.
pub(crate) fn format_sum<'a, F, I>(field: &F, terms: I) -> String
where
    F: Field,
    F::Element: 'a,
    I: IntoIterator<Item = (&'a F::Element, String)>,
{
    let mut out = String::new();
    for (i, (c, mono)) in terms.into_iter().enumerate() {
        let negative = field.is_negative(c);
        let abs = if negative { field.neg(c) } else { c.clone() };
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if mono.is_empty() {
            let s = field.format_element(&abs);
            // after a minus sign a sum must be grouped
            if negative && field.shape(&abs) == Shape::Sum {
                out.push('(');
                out.push_str(&s);
                out.push(')');
            } else {
                out.push_str(&s);
            }
        } else if field.is_one(&abs) {
            out.push_str(&mono);
        } else {
            out.push_str(&coefficient_factor(field, &abs));
            out.push('*');
            out.push_str(&mono);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Renders `c` for use as the left factor of a product.
pub(crate) fn coefficient_factor<F: Field>(field: &F, c: &F::Element) -> String {
    let s = field.format_element(c);
    match field.shape(c) {
        Shape::Atom | Shape::Product => s,
        Shape::Quotient | Shape::Sum => format!("({s})"),
    }
}

/// `x`, `x^3`, or empty for exponent 0.
pub(crate) fn power(name: &str, e: u32) -> String {
    match e {
        0 => String::new(),
        1 => name.to_string(),
        _ => format!("{name}^{e}"),
    }
}

/// Shape of a sum rendered by [`format_sum`] from the given term list.
pub(crate) fn sum_shape<F: Field>(field: &F, terms: &[(&F::Element, bool)]) -> Shape {
    match terms {
        [] => Shape::Atom,
        [(c, is_constant)] => {
            if field.is_negative(c) {
                return Shape::Sum;
            }
            if *is_constant {
                field.shape(c)
            } else if field.is_one(c) {
                Shape::Atom
            } else {
                Shape::Product
            }
        }
        _ => Shape::Sum,
    }
}
