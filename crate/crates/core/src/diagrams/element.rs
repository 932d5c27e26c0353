use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::WheeledDiagram;
use crate::error::Error;
use crate::koszul::Sign;

pub type Coefficient = BigRational;

/// A finite rational combination of basis diagrams of a fixed biarity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Element {
    q: usize,
    l: usize,
    terms: BTreeMap<WheeledDiagram, Coefficient>,
}

impl Element {
    pub fn zero(q: usize, l: usize) -> Element {
        Element {
            q,
            l,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(d: WheeledDiagram) -> Element {
        Element::signed(d, Sign::Plus)
    }

    pub fn signed(d: WheeledDiagram, sign: Sign) -> Element {
        let mut e = Element::zero(d.q(), d.l());
        e.add_signed(d, &Coefficient::one(), sign);
        e
    }

    /// Builds an element from (diagram, coefficient) pairs, summing repeats.
    pub fn from_terms(
        q: usize,
        l: usize,
        terms: impl IntoIterator<Item = (WheeledDiagram, Coefficient)>,
    ) -> Result<Element, Error> {
        let mut e = Element::zero(q, l);
        for (d, c) in terms {
            if d.biarity() != (q, l) {
                return Err(Error::BiarityMismatch(q, l, d.q(), d.l()));
            }
            e.add_signed(d, &c, Sign::Plus);
        }
        Ok(e)
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn biarity(&self) -> (usize, usize) {
        (self.q, self.l)
    }

    pub fn degree(&self) -> usize {
        self.q - self.l
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

    pub fn terms(&self) -> impl Iterator<Item = (&WheeledDiagram, &Coefficient)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, d: &WheeledDiagram) -> Coefficient {
        self.terms.get(d).cloned().unwrap_or_else(Coefficient::zero)
    }

    /// Adds `sign * c * d` in place; `d` must have this element's biarity.
    pub(crate) fn add_signed(&mut self, d: WheeledDiagram, c: &Coefficient, sign: Sign) {
        debug_assert_eq!(d.biarity(), (self.q, self.l));
        if c.is_zero() {
            return;
        }
        let c = match sign {
            Sign::Plus => c.clone(),
            Sign::Minus => -c.clone(),
        };
        match self.terms.entry(d) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Element) -> Result<Element, Error> {
        self.check_same_biarity(other)?;
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_signed(d.clone(), c, Sign::Plus);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Element) -> Result<Element, Error> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Coefficient) -> Element {
        if c.is_zero() {
            return Element::zero(self.q, self.l);
        }
        Element {
            q: self.q,
            l: self.l,
            terms: self.terms.iter().map(|(d, x)| (d.clone(), x * c)).collect(),
        }
    }

    pub fn neg(&self) -> Element {
        Element {
            q: self.q,
            l: self.l,
            terms: self.terms.iter().map(|(d, x)| (d.clone(), -x)).collect(),
        }
    }

    fn check_same_biarity(&self, other: &Element) -> Result<(), Error> {
        if self.biarity() != other.biarity() {
            return Err(Error::BiarityMismatch(self.q, self.l, other.q, other.l));
        }
        Ok(())
    }

    /// Applies a linear map given on basis diagrams.
    pub(crate) fn map_terms<F>(&self, q: usize, l: usize, mut f: F) -> Result<Element, Error>
    where
        F: FnMut(&WheeledDiagram) -> Result<Option<(WheeledDiagram, Sign)>, Error>,
    {
        let mut out = Element::zero(q, l);
        for (d, c) in &self.terms {
            if let Some((image, sign)) = f(d)? {
                out.add_signed(image, c, sign);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (d, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*{d}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn mu2() -> WheeledDiagram {
        WheeledDiagram::new(2, vec![vec![1, 2]], vec![]).unwrap()
    }

    #[test]
    fn arithmetic() {
        let a = Element::basis(mu2());
        let two = Coefficient::from_integer(BigInt::from(2));
        let b = a.scale(&two);
        assert_eq!(b.sub(&a).unwrap(), a);
        assert!(a.sub(&a).unwrap().is_zero());
        assert!(a.scale(&Coefficient::zero()).is_zero());
        assert_eq!(a.neg().coefficient(&mu2()), -Coefficient::one());
        assert!(a.add(&Element::zero(2, 0)).is_err());
        let w = WheeledDiagram::new(1, vec![], vec![vec![1]]).unwrap();
        assert!(Element::from_terms(2, 1, [(w, Coefficient::one())]).is_err());
    }
}
