//! Terms and elements of a free module.
//!
//! A `FreeElement` is a coefficient-sorted combination of terms c * m * eps_i,
//! kept strictly decreasing under the active order; the zero element is the
//! empty list. Arithmetic takes the field and order explicitly so the same
//! type serves the ambient module, syzygy modules, and resolution columns.

use crate::field::PrimeField;
use crate::grading::{Degree, Grading};
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::{Error, Result};
use std::cmp::Ordering;

/// One term: coefficient, monomial, free-module component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleTerm {
    pub coeff: u64,
    pub monomial: Monomial,
    pub component: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FreeElement {
    terms: Vec<ModuleTerm>,
}

impl FreeElement {
    pub fn zero() -> Self {
        FreeElement { terms: Vec::new() }
    }

    /// Build from arbitrary terms: sorts, merges duplicates, drops zeros.
    pub fn from_terms(mut terms: Vec<ModuleTerm>, field: &PrimeField, order: &dyn TermOrder) -> Self {
        terms.retain(|t| t.coeff != 0);
        terms.sort_by(|a, b| order.cmp_parts((&b.monomial, b.component), (&a.monomial, a.component)));
        let mut out: Vec<ModuleTerm> = Vec::with_capacity(terms.len());
        for t in terms {
            if let Some(last) = out.last_mut() {
                if last.monomial == t.monomial && last.component == t.component {
                    last.coeff = field.add(last.coeff, t.coeff);
                    continue;
                }
            }
            out.push(t);
        }
        out.retain(|t| t.coeff != 0);
        FreeElement { terms: out }
    }

    /// Wrap a term list already strictly decreasing under the active order.
    pub fn from_sorted(terms: Vec<ModuleTerm>) -> Self {
        FreeElement { terms }
    }

    /// All terms after the leading one.
    pub fn tail(&self) -> Self {
        FreeElement { terms: self.terms.iter().skip(1).cloned().collect() }
    }

    /// Single term c * m * eps_i (zero if c = 0).
    pub fn term(coeff: u64, monomial: Monomial, component: usize) -> Self {
        if coeff == 0 {
            return FreeElement::zero();
        }
        FreeElement { terms: vec![ModuleTerm { coeff, monomial, component }] }
    }

    pub fn terms(&self) -> &[ModuleTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&ModuleTerm> {
        self.terms.first()
    }

    pub fn scaled(&self, c: u64, field: &PrimeField) -> Self {
        if c == 0 {
            return FreeElement::zero();
        }
        FreeElement {
            terms: self
                .terms
                .iter()
                .map(|t| ModuleTerm { coeff: field.mul(t.coeff, c), ..t.clone() })
                .collect(),
        }
    }

    pub fn monic(&self, field: &PrimeField) -> Self {
        match self.leading_term() {
            None => FreeElement::zero(),
            Some(lt) => self.scaled(field.inv(lt.coeff), field),
        }
    }

    /// Multiply by c * m. Multiplicativity of term orders keeps the term
    /// list sorted, so no re-sort is needed.
    pub fn mul_term(&self, m: &Monomial, c: u64, field: &PrimeField) -> Result<Self> {
        if c == 0 {
            return Ok(FreeElement::zero());
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            terms.push(ModuleTerm {
                coeff: field.mul(t.coeff, c),
                monomial: t.monomial.mul(m)?,
                component: t.component,
            });
        }
        Ok(FreeElement { terms })
    }

    /// self - other, merging two sorted term lists.
    pub fn sub(&self, other: &Self, field: &PrimeField, order: &dyn TermOrder) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let a = &self.terms[i];
            let b = &other.terms[j];
            match order.cmp_parts((&a.monomial, a.component), (&b.monomial, b.component)) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(ModuleTerm { coeff: field.neg(b.coeff), ..b.clone() });
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.sub(a.coeff, b.coeff);
                    if c != 0 {
                        out.push(ModuleTerm { coeff: c, ..a.clone() });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|b| ModuleTerm { coeff: field.neg(b.coeff), ..b.clone() }));
        FreeElement { terms: out }
    }

    pub fn add(&self, other: &Self, field: &PrimeField, order: &dyn TermOrder) -> Self {
        self.sub(&other.scaled(field.neg(1), field), field, order)
    }

    /// Degree of a homogeneous element; errors when terms disagree.
    /// Zero has every degree and returns None.
    pub fn homogeneous_degree(&self, grading: &Grading) -> Result<Option<Degree>> {
        let mut deg: Option<Degree> = None;
        for t in &self.terms {
            let d = grading.term_degree(&t.monomial, t.component);
            match &deg {
                None => deg = Some(d),
                Some(d0) if *d0 == d => {}
                Some(_) => return Err(Error::NonHomogeneous),
            }
        }
        Ok(deg)
    }

    /// Terms in a fixed component, as (monomial, coeff) pairs.
    pub fn component_entries(&self, component: usize) -> Vec<(Monomial, u64)> {
        self.terms
            .iter()
            .filter(|t| t.component == component)
            .map(|t| (t.monomial.clone(), t.coeff))
            .collect()
    }

    /// Debug check that the term list really is strictly decreasing.
    pub fn is_sorted_under(&self, order: &dyn TermOrder) -> bool {
        self.terms.windows(2).all(|w| {
            order.cmp_parts((&w[0].monomial, w[0].component), (&w[1].monomial, w[1].component))
                == Ordering::Greater
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::MonomialOrder;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn from_terms_merges_and_sorts() {
        let f = PrimeField::new(7).unwrap();
        let o = MonomialOrder::grevlex_top();
        let e = FreeElement::from_terms(
            vec![
                ModuleTerm { coeff: 3, monomial: m(&[1, 0]), component: 0 },
                ModuleTerm { coeff: 5, monomial: m(&[0, 1]), component: 0 },
                ModuleTerm { coeff: 4, monomial: m(&[1, 0]), component: 0 },
            ],
            &f,
            &o,
        );
        // 3 + 4 = 0 mod 7: the x1 term vanishes
        assert_eq!(e.terms().len(), 1);
        assert_eq!(e.leading_term().unwrap().monomial, m(&[0, 1]));
        assert!(e.is_sorted_under(&o));
    }

    #[test]
    fn sub_cancels() {
        let f = PrimeField::new(32003).unwrap();
        let o = MonomialOrder::grevlex_top();
        let a = FreeElement::term(1, m(&[2, 0]), 0);
        assert!(a.sub(&a, &f, &o).is_zero());
    }

    #[test]
    fn mul_term_keeps_sorted() {
        let f = PrimeField::new(32003).unwrap();
        let o = MonomialOrder::grevlex_top();
        let e = FreeElement::from_terms(
            vec![
                ModuleTerm { coeff: 1, monomial: m(&[1, 1]), component: 0 },
                ModuleTerm { coeff: 1, monomial: m(&[0, 2]), component: 0 },
            ],
            &f,
            &o,
        );
        let g = e.mul_term(&m(&[3, 1]), 5, &f).unwrap();
        assert!(g.is_sorted_under(&o));
        assert_eq!(g.leading_term().unwrap().monomial, m(&[4, 2]));
    }

    #[test]
    fn homogeneity_detection() {
        let f = PrimeField::new(32003).unwrap();
        let o = MonomialOrder::grevlex_top();
        let g = Grading::standard(2, 1);
        let h = FreeElement::from_terms(
            vec![
                ModuleTerm { coeff: 1, monomial: m(&[1, 1]), component: 0 },
                ModuleTerm { coeff: 1, monomial: m(&[0, 2]), component: 0 },
            ],
            &f,
            &o,
        );
        assert_eq!(h.homogeneous_degree(&g).unwrap(), Some(vec![2]));
        let bad = FreeElement::from_terms(
            vec![
                ModuleTerm { coeff: 1, monomial: m(&[1, 0]), component: 0 },
                ModuleTerm { coeff: 1, monomial: m(&[0, 2]), component: 0 },
            ],
            &f,
            &o,
        );
        assert!(bad.homogeneous_degree(&g).is_err());
    }
}
