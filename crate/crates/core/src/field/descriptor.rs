use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::univariate as uni;
use super::{Field, FieldError, FieldMap, PrimeField, Rationals, Shape};

/// Whether the minimal polynomial of an extension layer was proven irreducible.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Irreducibility {
    Certified,
    Assumed,
}

#[derive(Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rationals,
    PrimeField(PrimeField),
    RationalFunctions {
        base: FieldDescriptor,
        generator: String,
    },
    SimpleExtension {
        base: FieldDescriptor,
        generator: String,
        /// Monic, coefficients low to high, over `base`.
        modulus: Vec<FieldElement>,
        irreducibility: Irreducibility,
    },
}

/// A field built at runtime as a tower over QQ or Fp.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldDescriptor(Arc<FieldKind>);

/// Element of a [`FieldDescriptor`]; always in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldElement {
    Rational(BigRational),
    Residue(u64),
    /// Reduced ratio with monic denominator.
    Fraction {
        num: Vec<FieldElement>,
        den: Vec<FieldElement>,
    },
    /// Residue of degree below the modulus degree.
    Extension(Vec<FieldElement>),
}

impl FieldDescriptor {
    pub fn rationals() -> Self {
        FieldDescriptor(Arc::new(FieldKind::Rationals))
    }

    pub fn prime(p: u64) -> Result<Self, FieldError> {
        Ok(FieldDescriptor(Arc::new(FieldKind::PrimeField(PrimeField::new(p)?))))
    }

    pub fn rational_functions(base: &FieldDescriptor, generator: &str) -> Result<Self, FieldError> {
        base.check_fresh(generator)?;
        if base.has_assumed_layer() {
            return Err(FieldError::UncertifiedBase);
        }
        Ok(FieldDescriptor(Arc::new(FieldKind::RationalFunctions {
            base: base.clone(),
            generator: generator.to_string(),
        })))
    }

    /// Adjoins a root of `modulus` (coefficients low to high over `base`).
    ///
    /// Irreducibility is certified for degree one, for degree at most three over
    /// a prime field, and for `u^p - c` over `Fp(s)` with `c` not a p-th power.
    /// Otherwise it is recorded as assumed and a reducible modulus surfaces later
    /// as `NonInvertible`.
    pub fn simple_extension(
        base: &FieldDescriptor,
        generator: &str,
        modulus: Vec<FieldElement>,
    ) -> Result<Self, FieldError> {
        base.check_fresh(generator)?;
        let modulus = uni::trim(base, modulus);
        if modulus.len() < 2 {
            return Err(FieldError::ConstantModulus);
        }
        let (_, modulus) = uni::make_monic(base, &modulus)?;
        let irreducibility = base.certify_irreducible(&modulus, generator)?;
        Ok(FieldDescriptor(Arc::new(FieldKind::SimpleExtension {
            base: base.clone(),
            generator: generator.to_string(),
            modulus,
            irreducibility,
        })))
    }

    pub fn kind(&self) -> &FieldKind {
        &self.0
    }

    pub fn base(&self) -> Option<&FieldDescriptor> {
        match &*self.0 {
            FieldKind::Rationals | FieldKind::PrimeField(_) => None,
            FieldKind::RationalFunctions { base, .. } | FieldKind::SimpleExtension { base, .. } => {
                Some(base)
            }
        }
    }

    fn own_generator(&self) -> Option<&str> {
        match &*self.0 {
            FieldKind::RationalFunctions { generator, .. }
            | FieldKind::SimpleExtension { generator, .. } => Some(generator),
            _ => None,
        }
    }

    fn check_fresh(&self, name: &str) -> Result<(), FieldError> {
        if self.generator_names().iter().any(|g| g == name) {
            Err(FieldError::DuplicateGenerator(name.to_string()))
        } else {
            Ok(())
        }
    }

    fn has_assumed_layer(&self) -> bool {
        match &*self.0 {
            FieldKind::SimpleExtension {
                irreducibility: Irreducibility::Assumed,
                ..
            } => true,
            _ => self.base().is_some_and(|b| b.has_assumed_layer()),
        }
    }

    pub fn irreducibility(&self) -> Option<Irreducibility> {
        match &*self.0 {
            FieldKind::SimpleExtension { irreducibility, .. } => Some(*irreducibility),
            _ => None,
        }
    }

    fn certify_irreducible(
        &self,
        modulus: &[FieldElement],
        generator: &str,
    ) -> Result<Irreducibility, FieldError> {
        let degree = modulus.len() - 1;
        if degree == 1 {
            return Ok(Irreducibility::Certified);
        }
        if degree <= 3 {
            if let Some(elements) = self.elements() {
                return match elements.iter().find(|x| self.is_zero(&uni::eval(self, modulus, x))) {
                    Some(root) => Err(FieldError::Reducible(format!(
                        "{} has root {}",
                        uni::format(self, modulus, generator),
                        self.format_element(root)
                    ))),
                    None => Ok(Irreducibility::Certified),
                };
            }
        }
        // u^p - c over Fp(s) is irreducible iff c is not a p-th power
        let p = self.characteristic();
        if p > 0 && degree as u64 == p && self.is_pth_power(&self.zero()).is_ok() {
            let middle_zero = modulus[1..degree].iter().all(|c| self.is_zero(c));
            if middle_zero {
                let c = self.neg(&modulus[0]);
                return if self.is_pth_power(&c)? {
                    Err(FieldError::Reducible(format!(
                        "{} is a p-th power",
                        self.format_element(&c)
                    )))
                } else {
                    Ok(Irreducibility::Certified)
                };
            }
        }
        Ok(Irreducibility::Assumed)
    }

    /// Lifts an element of the base field into this layer.
    pub fn embed(&self, x: &FieldElement) -> FieldElement {
        match &*self.0 {
            FieldKind::RationalFunctions { base, .. } => FieldElement::Fraction {
                num: uni::trim(base, vec![x.clone()]),
                den: vec![base.one()],
            },
            FieldKind::SimpleExtension { base, .. } => {
                FieldElement::Extension(uni::trim(base, vec![x.clone()]))
            }
            _ => x.clone(),
        }
    }

    /// Builds a rational function `num/den` in the generator of this layer.
    pub fn fraction(
        &self,
        num: Vec<FieldElement>,
        den: Vec<FieldElement>,
    ) -> Result<FieldElement, FieldError> {
        match &*self.0 {
            FieldKind::RationalFunctions { base, .. } => normalize_fraction(base, num, den),
            _ => Err(self.mismatch("a rational function field")),
        }
    }

    /// Builds the residue of a polynomial in the generator of this extension layer.
    pub fn residue(&self, poly: Vec<FieldElement>) -> Result<FieldElement, FieldError> {
        match &*self.0 {
            FieldKind::SimpleExtension { base, modulus, .. } => Ok(FieldElement::Extension(
                uni::div_rem(base, &poly, modulus)?.1,
            )),
            _ => Err(self.mismatch("a simple extension")),
        }
    }

    fn mismatch(&self, expected: &str) -> FieldError {
        FieldError::DescriptorMismatch {
            expected: expected.to_string(),
            found: self.descriptor_text(),
        }
    }

    /// Structural membership check of an element in this field.
    pub fn contains(&self, x: &FieldElement) -> bool {
        match (&*self.0, x) {
            (FieldKind::Rationals, FieldElement::Rational(_)) => true,
            (FieldKind::PrimeField(f), FieldElement::Residue(r)) => *r < f.modulus(),
            (FieldKind::RationalFunctions { base, .. }, FieldElement::Fraction { num, den }) => {
                num.iter().chain(den).all(|c| base.contains(c))
            }
            (FieldKind::SimpleExtension { base, modulus, .. }, FieldElement::Extension(r)) => {
                r.len() < modulus.len() && r.iter().all(|c| base.contains(c))
            }
            _ => false,
        }
    }

    /// Decides whether `x` is a p-th power in `Fp(s)` via `d/ds x = 0`.
    pub fn is_pth_power(&self, x: &FieldElement) -> Result<bool, FieldError> {
        if self.characteristic() == 0 {
            return Err(FieldError::WrongCharacteristic);
        }
        let base = match &*self.0 {
            FieldKind::RationalFunctions { base, .. }
                if matches!(base.kind(), FieldKind::PrimeField(_)) =>
            {
                base
            }
            _ => return Err(self.mismatch("a rational function field over a prime field")),
        };
        match x {
            FieldElement::Fraction { num, den } => {
                let lhs = uni::mul(base, &uni::derivative(base, num), den);
                let rhs = uni::mul(base, num, &uni::derivative(base, den));
                Ok(uni::sub(base, &lhs, &rhs).is_empty())
            }
            _ => Err(self.mismatch("an element of a rational function field")),
        }
    }

    fn tower_len(&self) -> usize {
        self.base().map_or(0, |b| b.tower_len()) + usize::from(self.own_generator().is_some())
    }
}

fn normalize_fraction(
    base: &FieldDescriptor,
    num: Vec<FieldElement>,
    den: Vec<FieldElement>,
) -> Result<FieldElement, FieldError> {
    let num = uni::trim(base, num);
    let den = uni::trim(base, den);
    if den.is_empty() {
        return Err(FieldError::ZeroInversion);
    }
    if num.is_empty() {
        return Ok(FieldElement::Fraction {
            num,
            den: vec![base.one()],
        });
    }
    let g = uni::gcd(base, &num, &den)?;
    let (num, den) = if g.len() > 1 {
        (uni::div_rem(base, &num, &g)?.0, uni::div_rem(base, &den, &g)?.0)
    } else {
        (num, den)
    };
    let (lc, den) = uni::make_monic(base, &den)?;
    let num = uni::scale(base, &num, &base.inv(&lc)?);
    Ok(FieldElement::Fraction { num, den })
}

fn fraction_parts(x: &FieldElement) -> (&[FieldElement], &[FieldElement]) {
    match x {
        FieldElement::Fraction { num, den } => (num, den),
        other => panic!("expected a rational function, found {other:?}"),
    }
}

fn residue_part(x: &FieldElement) -> &[FieldElement] {
    match x {
        FieldElement::Extension(r) => r,
        other => panic!("expected an extension residue, found {other:?}"),
    }
}

fn rational(x: &FieldElement) -> &BigRational {
    match x {
        FieldElement::Rational(q) => q,
        other => panic!("expected a rational number, found {other:?}"),
    }
}

fn residue(x: &FieldElement) -> u64 {
    match x {
        FieldElement::Residue(r) => *r,
        other => panic!("expected a residue mod p, found {other:?}"),
    }
}

// Fractions over a tower without assumed layers always have invertible gcd steps.
const CERTIFIED: &str = "rational function base field has no uncertified layer";

impl Field for FieldDescriptor {
    type Element = FieldElement;

    fn zero(&self) -> FieldElement {
        match &*self.0 {
            FieldKind::Rationals => FieldElement::Rational(BigRational::zero()),
            FieldKind::PrimeField(_) => FieldElement::Residue(0),
            FieldKind::RationalFunctions { base, .. } => FieldElement::Fraction {
                num: Vec::new(),
                den: vec![base.one()],
            },
            FieldKind::SimpleExtension { .. } => FieldElement::Extension(Vec::new()),
        }
    }

    fn one(&self) -> FieldElement {
        match &*self.0 {
            FieldKind::Rationals => FieldElement::Rational(BigRational::one()),
            FieldKind::PrimeField(_) => FieldElement::Residue(1),
            FieldKind::RationalFunctions { base, .. } => FieldElement::Fraction {
                num: vec![base.one()],
                den: vec![base.one()],
            },
            FieldKind::SimpleExtension { base, .. } => FieldElement::Extension(vec![base.one()]),
        }
    }

    fn is_zero(&self, a: &FieldElement) -> bool {
        match a {
            FieldElement::Rational(q) => q.is_zero(),
            FieldElement::Residue(r) => *r == 0,
            FieldElement::Fraction { num, .. } => num.is_empty(),
            FieldElement::Extension(r) => r.is_empty(),
        }
    }

    fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        match &*self.0 {
            FieldKind::Rationals => FieldElement::Rational(rational(a) + rational(b)),
            FieldKind::PrimeField(f) => FieldElement::Residue(f.add(&residue(a), &residue(b))),
            FieldKind::RationalFunctions { base, .. } => {
                let (n1, d1) = fraction_parts(a);
                let (n2, d2) = fraction_parts(b);
                if d1 == d2 {
                    return normalize_fraction(base, uni::add(base, n1, n2), d1.to_vec())
                        .expect(CERTIFIED);
                }
                let num = uni::add(base, &uni::mul(base, n1, d2), &uni::mul(base, n2, d1));
                normalize_fraction(base, num, uni::mul(base, d1, d2)).expect(CERTIFIED)
            }
            FieldKind::SimpleExtension { base, .. } => {
                FieldElement::Extension(uni::add(base, residue_part(a), residue_part(b)))
            }
        }
    }

    fn neg(&self, a: &FieldElement) -> FieldElement {
        match &*self.0 {
            FieldKind::Rationals => FieldElement::Rational(-rational(a)),
            FieldKind::PrimeField(f) => FieldElement::Residue(f.neg(&residue(a))),
            FieldKind::RationalFunctions { base, .. } => {
                let (n, d) = fraction_parts(a);
                FieldElement::Fraction {
                    num: uni::neg(base, n),
                    den: d.to_vec(),
                }
            }
            FieldKind::SimpleExtension { base, .. } => {
                FieldElement::Extension(uni::neg(base, residue_part(a)))
            }
        }
    }

    fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        match &*self.0 {
            FieldKind::Rationals => FieldElement::Rational(rational(a) * rational(b)),
            FieldKind::PrimeField(f) => FieldElement::Residue(f.mul(&residue(a), &residue(b))),
            FieldKind::RationalFunctions { base, .. } => {
                let (n1, d1) = fraction_parts(a);
                let (n2, d2) = fraction_parts(b);
                if n1.is_empty() || n2.is_empty() {
                    return self.zero();
                }
                normalize_fraction(base, uni::mul(base, n1, n2), uni::mul(base, d1, d2))
                    .expect(CERTIFIED)
            }
            FieldKind::SimpleExtension { base, modulus, .. } => {
                let prod = uni::mul(base, residue_part(a), residue_part(b));
                // modulus is monic, so the division never inverts anything
                FieldElement::Extension(uni::div_rem(base, &prod, modulus).expect("monic").1)
            }
        }
    }

    fn inv(&self, a: &FieldElement) -> Result<FieldElement, FieldError> {
        if self.is_zero(a) {
            return Err(FieldError::ZeroInversion);
        }
        match &*self.0 {
            FieldKind::Rationals => Ok(FieldElement::Rational(rational(a).recip())),
            FieldKind::PrimeField(f) => Ok(FieldElement::Residue(f.inv(&residue(a))?)),
            FieldKind::RationalFunctions { base, .. } => {
                let (n, d) = fraction_parts(a);
                normalize_fraction(base, d.to_vec(), n.to_vec())
            }
            FieldKind::SimpleExtension {
                base,
                modulus,
                generator,
                ..
            } => Ok(FieldElement::Extension(uni::inverse_mod(
                base,
                residue_part(a),
                modulus,
                generator,
            )?)),
        }
    }

    fn characteristic(&self) -> u64 {
        match &*self.0 {
            FieldKind::Rationals => 0,
            FieldKind::PrimeField(f) => f.modulus(),
            FieldKind::RationalFunctions { base, .. } | FieldKind::SimpleExtension { base, .. } => {
                base.characteristic()
            }
        }
    }

    fn from_bigint(&self, n: &BigInt) -> FieldElement {
        match &*self.0 {
            FieldKind::Rationals => FieldElement::Rational(Rationals.from_bigint(n)),
            FieldKind::PrimeField(f) => FieldElement::Residue(f.from_bigint(n)),
            FieldKind::RationalFunctions { base, .. } | FieldKind::SimpleExtension { base, .. } => {
                self.embed(&base.from_bigint(n))
            }
        }
    }

    fn generator_names(&self) -> Vec<String> {
        let mut names = self.base().map_or_else(Vec::new, |b| b.generator_names());
        names.extend(self.own_generator().map(str::to_string));
        names
    }

    fn generator(&self, name: &str) -> Option<FieldElement> {
        match &*self.0 {
            FieldKind::RationalFunctions { base, generator } if generator == name => {
                Some(FieldElement::Fraction {
                    num: vec![base.zero(), base.one()],
                    den: vec![base.one()],
                })
            }
            FieldKind::SimpleExtension { base, generator, .. } if generator == name => {
                self.residue(vec![base.zero(), base.one()]).ok()
            }
            _ => self
                .base()
                .and_then(|b| b.generator(name))
                .map(|e| self.embed(&e)),
        }
    }

    fn elements(&self) -> Option<Vec<FieldElement>> {
        match &*self.0 {
            FieldKind::PrimeField(f) => Some((0..f.modulus()).map(FieldElement::Residue).collect()),
            _ => None,
        }
    }

    fn format_element(&self, a: &FieldElement) -> String {
        match &*self.0 {
            FieldKind::Rationals => Rationals.format_element(rational(a)),
            FieldKind::PrimeField(f) => f.format_element(&residue(a)),
            FieldKind::RationalFunctions { base, generator } => {
                let (n, d) = fraction_parts(a);
                let num = uni::format(base, n, generator);
                if d.len() == 1 {
                    return num;
                }
                let terms = n.iter().filter(|c| !base.is_zero(c)).count();
                let num = if terms > 1 || uni::shape(base, n) == Shape::Quotient {
                    format!("({num})")
                } else {
                    num
                };
                let den = uni::format(base, d, generator);
                match uni::shape(base, d) {
                    Shape::Atom => format!("{num}/{den}"),
                    _ => format!("{num}/({den})"),
                }
            }
            FieldKind::SimpleExtension { base, generator, .. } => {
                uni::format(base, residue_part(a), generator)
            }
        }
    }

    fn is_negative(&self, a: &FieldElement) -> bool {
        match &*self.0 {
            FieldKind::Rationals => Rationals.is_negative(rational(a)),
            FieldKind::PrimeField(_) => false,
            FieldKind::RationalFunctions { base, .. } => uni::is_negative(base, fraction_parts(a).0),
            FieldKind::SimpleExtension { base, .. } => uni::is_negative(base, residue_part(a)),
        }
    }

    fn shape(&self, a: &FieldElement) -> Shape {
        match &*self.0 {
            FieldKind::Rationals => Rationals.shape(rational(a)),
            FieldKind::PrimeField(_) => Shape::Atom,
            FieldKind::RationalFunctions { base, .. } => {
                let (n, d) = fraction_parts(a);
                if d.len() == 1 {
                    uni::shape(base, n)
                } else if uni::is_negative(base, n) {
                    Shape::Sum
                } else {
                    Shape::Quotient
                }
            }
            FieldKind::SimpleExtension { base, .. } => uni::shape(base, residue_part(a)),
        }
    }

    fn descriptor_text(&self) -> String {
        match &*self.0 {
            FieldKind::Rationals => "QQ".to_string(),
            FieldKind::PrimeField(f) => f.descriptor_text(),
            FieldKind::RationalFunctions { base, generator } => {
                format!("{}({generator})", base.descriptor_text())
            }
            FieldKind::SimpleExtension {
                base,
                generator,
                modulus,
                ..
            } => format!(
                "{}[{generator}]/({})",
                base.descriptor_text(),
                uni::format(base, modulus, generator)
            ),
        }
    }
}

impl fmt::Debug for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.descriptor_text())
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.descriptor_text())
    }
}

/// A field homomorphism given by the images of the source tower generators.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldHom {
    source: FieldDescriptor,
    target: FieldDescriptor,
    images: Vec<FieldElement>,
}

impl FieldHom {
    /// `images[i]` is the image of the i-th source generator, innermost first.
    pub fn new(
        source: &FieldDescriptor,
        target: &FieldDescriptor,
        images: Vec<FieldElement>,
    ) -> Result<Self, FieldError> {
        let names = source.generator_names();
        if names.len() != images.len() {
            return Err(FieldError::InvalidHom(format!(
                "{} generator images given, source has {}",
                images.len(),
                names.len()
            )));
        }
        if source.characteristic() != target.characteristic() {
            return Err(FieldError::InvalidHom(format!(
                "characteristic {} cannot map to characteristic {}",
                source.characteristic(),
                target.characteristic()
            )));
        }
        if let Some(bad) = images.iter().find(|e| !target.contains(e)) {
            return Err(FieldError::InvalidHom(format!(
                "{bad:?} is not an element of {target}"
            )));
        }
        let hom = FieldHom {
            source: source.clone(),
            target: target.clone(),
            images,
        };
        hom.check_layers(source)?;
        Ok(hom)
    }

    pub fn identity(field: &FieldDescriptor) -> Self {
        let images = field
            .generator_names()
            .iter()
            .map(|n| field.generator(n).expect("own generator"))
            .collect();
        FieldHom {
            source: field.clone(),
            target: field.clone(),
            images,
        }
    }

    pub fn images(&self) -> &[FieldElement] {
        &self.images
    }

    fn check_layers(&self, layer: &FieldDescriptor) -> Result<(), FieldError> {
        if let Some(base) = layer.base() {
            self.check_layers(base)?;
        }
        if let FieldKind::SimpleExtension {
            base,
            modulus,
            generator,
            ..
        } = layer.kind()
        {
            let image = &self.images[layer.tower_len() - 1];
            let value = self.horner(base, modulus, image)?;
            if !self.target.is_zero(&value) {
                return Err(FieldError::InvalidHom(format!(
                    "image of `{generator}` is not a root of its minimal polynomial"
                )));
            }
        }
        Ok(())
    }

    fn horner(
        &self,
        base: &FieldDescriptor,
        coeffs: &[FieldElement],
        x: &FieldElement,
    ) -> Result<FieldElement, FieldError> {
        let t = &self.target;
        coeffs.iter().rev().try_fold(t.zero(), |acc, c| {
            Ok(t.add(&t.mul(&acc, x), &self.apply_layer(base, c)?))
        })
    }

    fn apply_layer(
        &self,
        layer: &FieldDescriptor,
        x: &FieldElement,
    ) -> Result<FieldElement, FieldError> {
        if !layer.contains(x) {
            return Err(FieldError::DescriptorMismatch {
                expected: layer.descriptor_text(),
                found: format!("{x:?}"),
            });
        }
        let t = &self.target;
        match (layer.kind(), x) {
            (FieldKind::Rationals, FieldElement::Rational(q)) => {
                t.div(&t.from_bigint(q.numer()), &t.from_bigint(q.denom()))
            }
            (FieldKind::PrimeField(_), FieldElement::Residue(r)) => {
                Ok(t.from_bigint(&BigInt::from(*r)))
            }
            (FieldKind::RationalFunctions { base, .. }, FieldElement::Fraction { num, den }) => {
                let image = &self.images[layer.tower_len() - 1];
                let n = self.horner(base, num, image)?;
                let d = self.horner(base, den, image)?;
                if t.is_zero(&d) {
                    return Err(FieldError::InvalidHom(
                        "denominator maps to zero".to_string(),
                    ));
                }
                t.div(&n, &d)
            }
            (FieldKind::SimpleExtension { base, .. }, FieldElement::Extension(r)) => {
                let image = &self.images[layer.tower_len() - 1];
                self.horner(base, r, image)
            }
            _ => unreachable!("membership checked above"),
        }
    }
}

impl FieldMap<FieldDescriptor, FieldDescriptor> for FieldHom {
    fn source(&self) -> &FieldDescriptor {
        &self.source
    }

    fn target(&self) -> &FieldDescriptor {
        &self.target
    }

    fn apply(&self, x: &FieldElement) -> Result<FieldElement, FieldError> {
        self.apply_layer(&self.source, x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp_s(p: u64, s: &str) -> FieldDescriptor {
        FieldDescriptor::rational_functions(&FieldDescriptor::prime(p).unwrap(), s).unwrap()
    }

    fn gen(f: &FieldDescriptor, name: &str) -> FieldElement {
        f.generator(name).unwrap()
    }

    #[test]
    fn inverse_in_rationals() {
        let q = FieldDescriptor::rationals();
        let two = q.from_i64(2);
        assert_eq!(q.format_element(&q.inv(&two).unwrap()), "1/2");
    }

    #[test]
    fn inverse_in_rational_function_field() {
        let k = fp_s(5, "s");
        let s = gen(&k, "s");
        let inv = k.inv(&s).unwrap();
        assert_eq!(k.format_element(&inv), "1/s");
        assert!(k.is_one(&k.mul(&s, &inv)));
        assert_eq!(k.inv(&k.zero()), Err(FieldError::ZeroInversion));
    }

    #[test]
    fn inverse_in_inseparable_extension() {
        let k = fp_s(2, "a");
        let a = gen(&k, "a");
        let modulus = vec![k.neg(&a), k.zero(), k.one()];
        let ext = FieldDescriptor::simple_extension(&k, "x0", modulus).unwrap();
        assert_eq!(ext.irreducibility(), Some(Irreducibility::Certified));
        let x0 = gen(&ext, "x0");
        let inv = ext.inv(&x0).unwrap();
        // x0 * (x0/a) = x0^2/a = 1
        let expected = ext.mul(&x0, &ext.inv(&ext.embed(&a)).unwrap());
        assert_eq!(inv, expected);
        assert_eq!(ext.format_element(&inv), "(1/a)*x0");
        assert!(ext.is_one(&ext.mul(&x0, &inv)));
    }

    #[test]
    fn reducible_modulus_is_rejected_or_surfaces() {
        let f5 = FieldDescriptor::prime(5).unwrap();
        // s^2 - 1 has roots in F5
        let m = vec![f5.from_i64(-1), f5.zero(), f5.one()];
        assert!(matches!(
            FieldDescriptor::simple_extension(&f5, "r", m),
            Err(FieldError::Reducible(_))
        ));
        // x^4 - 1 over F5 is not certified; the shared factor appears on inversion
        let m = vec![f5.from_i64(-1), f5.zero(), f5.zero(), f5.zero(), f5.one()];
        let ext = FieldDescriptor::simple_extension(&f5, "r", m).unwrap();
        assert_eq!(ext.irreducibility(), Some(Irreducibility::Assumed));
        let r = gen(&ext, "r");
        let r_minus_1 = ext.sub(&r, &ext.one());
        assert!(matches!(ext.inv(&r_minus_1), Err(FieldError::NonInvertible(_))));
    }

    #[test]
    fn pth_power_test() {
        let k = fp_s(5, "s");
        let s = gen(&k, "s");
        assert!(k.is_pth_power(&k.pow(&s, 5)).unwrap());
        assert!(!k.is_pth_power(&s).unwrap());
        let num = k.pow(&k.add(&s, &k.one()), 10);
        let x = k.div(&num, &k.pow(&s, 5)).unwrap();
        assert!(k.is_pth_power(&x).unwrap());
        let q = FieldDescriptor::rationals();
        assert_eq!(q.is_pth_power(&q.one()), Err(FieldError::WrongCharacteristic));
    }

    #[test]
    fn hom_substitutes_generator() {
        let src = fp_s(2, "s");
        let dst = fp_s(2, "u");
        let u = gen(&dst, "u");
        let h = FieldHom::new(&src, &dst, vec![dst.mul(&u, &u)]).unwrap();
        let s = gen(&src, "s");
        let image = h.apply(&src.add(&s, &src.one())).unwrap();
        assert_eq!(dst.format_element(&image), "u^2 + 1");
        let image = h.apply(&src.inv(&s).unwrap()).unwrap();
        assert_eq!(dst.format_element(&image), "1/u^2");
    }

    #[test]
    fn identity_hom_on_rationals() {
        let q = FieldDescriptor::rationals();
        let h = FieldHom::new(&q, &q, vec![]).unwrap();
        let x = q.div(&q.from_i64(3), &q.from_i64(7)).unwrap();
        assert_eq!(h.apply(&x).unwrap(), x);
    }

    #[test]
    fn hom_checks_minimal_polynomial() {
        let q = FieldDescriptor::rationals();
        let m = vec![q.from_i64(-2), q.zero(), q.one()];
        let ext = FieldDescriptor::simple_extension(&q, "r", m).unwrap();
        assert!(FieldHom::new(&ext, &ext, vec![ext.one()]).is_err());
        let r = gen(&ext, "r");
        assert!(FieldHom::new(&ext, &ext, vec![ext.neg(&r)]).is_ok());
        let f2 = FieldDescriptor::prime(2).unwrap();
        assert!(FieldHom::new(&q, &f2, vec![]).is_err());
    }
}
