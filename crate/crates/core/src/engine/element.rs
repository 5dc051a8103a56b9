use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{Cell, Context};
use crate::laurent::Laurent;

/// A finite `Z[v, v^-1]`-combination of basis elements indexed by cells.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Element {
    terms: BTreeMap<Cell, Laurent>,
}

impl Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(c: Cell) -> Self {
        Self::term(c, Laurent::one())
    }

    pub fn term(c: Cell, k: Laurent) -> Self {
        let mut e = Self::zero();
        e.add_term(c, k);
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (Cell, Laurent)>>(it: I) -> Self {
        let mut e = Self::zero();
        for (c, k) in it {
            e.add_term(c, k);
        }
        e
    }

    pub fn add_term(&mut self, c: Cell, k: Laurent) {
        if k.is_zero() {
            return;
        }
        match self.terms.entry(c) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(k);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += k;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += k * other`.
    pub fn add_scaled(&mut self, other: &Element, k: &Laurent) {
        if k.is_zero() {
            return;
        }
        for (c, x) in &other.terms {
            self.add_term(c.clone(), x * k);
        }
    }

    pub fn scaled(&self, k: &Laurent) -> Element {
        let mut e = Element::zero();
        e.add_scaled(self, k);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, c: &Cell) -> Laurent {
        self.terms.get(c).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Cell, &Laurent)> + '_ {
        self.terms.iter()
    }

    pub fn cells(&self) -> impl Iterator<Item = &Cell> + '_ {
        self.terms.keys()
    }

    /// Conjugate every coefficient (not the basis elements).
    pub fn bar_coeffs(&self) -> Element {
        Element::from_terms(self.terms.iter().map(|(c, k)| (c.clone(), k.bar())))
    }

    pub fn div_exact(&self, k: &Laurent) -> Result<Element> {
        let mut e = Element::zero();
        for (c, x) in &self.terms {
            e.add_term(c.clone(), x.div_exact(k)?);
        }
        Ok(e)
    }

    /// Keep only terms whose cell satisfies `keep`.
    pub fn filter<F: Fn(&Cell) -> bool>(&self, keep: F) -> Element {
        Element::from_terms(self.terms.iter().filter(|(c, _)| keep(c)).map(|(c, k)| (c.clone(), k.clone())))
    }

    /// Apply `f` to every cell; `None` drops the term.
    pub fn map_cells<F: Fn(&Cell) -> Option<Cell>>(&self, f: F) -> Element {
        Element::from_terms(self.terms.iter().filter_map(|(c, k)| f(c).map(|d| (d, k.clone()))))
    }

    pub fn into_terms(self) -> BTreeMap<Cell, Laurent> {
        self.terms
    }

    /// JSON-facing form.
    pub fn to_json(&self, context: Context, basis: Basis) -> ElementJson {
        ElementJson {
            context: context.to_string(),
            basis,
            terms: self
                .terms
                .iter()
                .map(|(c, k)| TermJson { cell: c.clone(), coeff: k.clone() })
                .collect(),
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (c, k)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if k.is_one() {
                write!(f, "{c}")?;
            } else {
                write!(f, "({k})*{c}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl AddAssign<&Element> for Element {
    fn add_assign(&mut self, rhs: &Element) {
        for (c, k) in &rhs.terms {
            self.add_term(c.clone(), k.clone());
        }
    }
}

impl SubAssign<&Element> for Element {
    fn sub_assign(&mut self, rhs: &Element) {
        for (c, k) in &rhs.terms {
            self.add_term(c.clone(), -k);
        }
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let mut e = self.clone();
        e += rhs;
        e
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        let mut e = self.clone();
        e -= rhs;
        e
    }
}

impl Add for Element {
    type Output = Element;
    fn add(mut self, rhs: Element) -> Element {
        self += &rhs;
        self
    }
}

impl Sub for Element {
    type Output = Element;
    fn sub(mut self, rhs: Element) -> Element {
        self -= &rhs;
        self
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element::from_terms(self.terms.into_iter().map(|(c, k)| (c, -k)))
    }
}

/// Which basis the coefficients of a serialized element refer to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Standard,
    Canonical,
    Monomial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub cell: Cell,
    pub coeff: Laurent,
}

/// `{"context": .., "basis": .., "terms": [{"cell": rows, "coeff": {exp: c}}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub context: String,
    pub basis: Basis,
    pub terms: Vec<TermJson>,
}

impl ElementJson {
    pub fn context(&self) -> Result<Context> {
        self.context.parse()
    }

    pub fn element(&self) -> Element {
        Element::from_terms(self.terms.iter().map(|t| (t.cell.clone(), t.coeff.clone())))
    }

    pub fn parse(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_cancels() {
        let a = Cell::rows([[1, 0], [0, 1]]);
        let b = Cell::rows([[0, 1], [1, 0]]);
        let x = Element::from_terms([(a.clone(), Laurent::v(1)), (b.clone(), Laurent::one())]);
        let y = Element::basis(b);
        let z = &x - &y;
        assert_eq!(z, Element::term(a, Laurent::v(1)));
        assert!((&z - &z).is_zero());
    }

    #[test]
    fn json_roundtrip() {
        let a = Cell::rows([[0, 1], [1, -3]]);
        let x = Element::term(a, "v^2 - v^-4".parse().unwrap());
        let ctx = Context::ThetaTilde { n: 2 };
        let j = x.to_json(ctx, Basis::Standard);
        let s = serde_json::to_string(&j).unwrap();
        let back = ElementJson::parse(&s).unwrap();
        assert_eq!(back.element(), x);
        assert_eq!(back.context().unwrap(), ctx);
    }
}
