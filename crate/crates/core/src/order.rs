//! Monomial orders on free modules.
//!
//! An order compares (monomial, component) pairs. The concrete orders are
//! built from a base order on monomials (grevlex, lex, or weight-then-grevlex),
//! a module extension (term-over-position or position-over-term, with the
//! position tiebreak favouring lower component indices), and an optional
//! grading refinement that compares degrees before anything else.
//!
//! Schreyer orders, induced on syzygy modules by a list of leading terms,
//! implement the same trait so that division and Buchberger run unchanged at
//! every level of a resolution.

use crate::element::ModuleTerm;
use crate::grading::Grading;
use crate::monomial::Monomial;
use std::cmp::Ordering;

/// Total multiplicative order on (monomial, component) pairs.
pub trait TermOrder {
    fn cmp_parts(&self, a: (&Monomial, usize), b: (&Monomial, usize)) -> Ordering;
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseOrder {
    GrevLex,
    Lex,
    /// Compare an explicit weight first, break ties by grevlex.
    WeightGrevLex(Vec<i64>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModuleExtension {
    TermOverPosition,
    PositionOverTerm,
}

#[derive(Debug, Clone)]
pub struct MonomialOrder {
    pub base: BaseOrder,
    pub extension: ModuleExtension,
    /// When set, terms of different degree compare by degree first.
    pub refine: Option<Grading>,
}

impl MonomialOrder {
    /// Default order: grevlex, term over position, lower component first.
    pub fn grevlex_top() -> Self {
        MonomialOrder {
            base: BaseOrder::GrevLex,
            extension: ModuleExtension::TermOverPosition,
            refine: None,
        }
    }

    /// Grevlex refined by the given grading; the workhorse for Gröbner
    /// degenerations, which require an order refining the grading.
    pub fn degree_refined(grading: &Grading) -> Self {
        MonomialOrder {
            base: BaseOrder::GrevLex,
            extension: ModuleExtension::TermOverPosition,
            refine: Some(grading.clone()),
        }
    }

    pub fn compare(&self, a: &ModuleTerm, b: &ModuleTerm) -> Ordering {
        self.cmp_parts((&a.monomial, a.component), (&b.monomial, b.component))
    }
}

fn cmp_grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    match a.total_degree().cmp(&b.total_degree()) {
        Ordering::Equal => {}
        o => return o,
    }
    // Equal total degree: last nonzero entry of a - b negative => a greater.
    for (x, y) in a.exponents().iter().zip(b.exponents()).rev() {
        match x.cmp(y) {
            Ordering::Equal => {}
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

fn cmp_lex(a: &Monomial, b: &Monomial) -> Ordering {
    for (x, y) in a.exponents().iter().zip(b.exponents()) {
        match x.cmp(y) {
            Ordering::Equal => {}
            o => return o,
        }
    }
    Ordering::Equal
}

impl BaseOrder {
    fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            BaseOrder::GrevLex => cmp_grevlex(a, b),
            BaseOrder::Lex => cmp_lex(a, b),
            BaseOrder::WeightGrevLex(w) => {
                let wa: i64 = w.iter().zip(a.exponents()).map(|(w, &e)| w * e as i64).sum();
                let wb: i64 = w.iter().zip(b.exponents()).map(|(w, &e)| w * e as i64).sum();
                wa.cmp(&wb).then_with(|| cmp_grevlex(a, b))
            }
        }
    }
}

impl TermOrder for MonomialOrder {
    fn cmp_parts(&self, a: (&Monomial, usize), b: (&Monomial, usize)) -> Ordering {
        if let Some(g) = &self.refine {
            let da = g.term_degree(a.0, a.1);
            let db = g.term_degree(b.0, b.1);
            match g.cmp_degrees(&da, &db) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        // Position tiebreak: lower component index is the larger term.
        let pos = b.1.cmp(&a.1);
        match self.extension {
            ModuleExtension::TermOverPosition => self.base.cmp_monomials(a.0, b.0).then(pos),
            ModuleExtension::PositionOverTerm => pos.then_with(|| self.base.cmp_monomials(a.0, b.0)),
        }
    }
}

/// Order induced on a syzygy module by the leading terms of a basis:
/// m e_i exceeds m' e_j when m*lt(g_i) exceeds m'*lt(g_j) in the parent,
/// ties going to the smaller index.
pub struct SchreyerOrder {
    leads: Vec<(Monomial, usize)>,
    parent: Box<dyn TermOrder + Send + Sync>,
}

impl SchreyerOrder {
    pub fn new(leads: Vec<(Monomial, usize)>, parent: Box<dyn TermOrder + Send + Sync>) -> Self {
        SchreyerOrder { leads, parent }
    }

    /// The order on the module the basis lives in.
    pub fn parent(&self) -> &(dyn TermOrder + Send + Sync) {
        &*self.parent
    }

}

impl TermOrder for SchreyerOrder {
    fn cmp_parts(&self, a: (&Monomial, usize), b: (&Monomial, usize)) -> Ordering {
        let (la, ca) = &self.leads[a.1];
        let (lb, cb) = &self.leads[b.1];
        let ma = a.0.mul(la).expect("exponent overflow in Schreyer lift");
        let mb = b.0.mul(lb).expect("exponent overflow in Schreyer lift");
        self.parent
            .cmp_parts((&ma, *ca), (&mb, *cb))
            .then_with(|| b.1.cmp(&a.1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn grevlex_basics() {
        // n = 3: x1^2 > x1*x2 at equal degree
        assert_eq!(cmp_grevlex(&m(&[2, 0, 0]), &m(&[1, 1, 0])), Ordering::Greater);
        // degree dominates
        assert_eq!(cmp_grevlex(&m(&[0, 0, 3]), &m(&[1, 1, 0])), Ordering::Greater);
        // classic grevlex: x1*x3 < x2^2
        assert_eq!(cmp_grevlex(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
    }

    #[test]
    fn lex_basics() {
        assert_eq!(cmp_lex(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
    }

    #[test]
    fn position_tiebreak_lower_component_first() {
        let o = MonomialOrder::grevlex_top();
        // x1 e2 vs x1 e1: component 0 (e1) is larger
        assert_eq!(o.cmp_parts((&m(&[1, 0]), 1), (&m(&[1, 0]), 0)), Ordering::Less);
    }

    #[test]
    fn degree_refinement_first() {
        let g = Grading::weighted(2, 1, vec![4, 5]).unwrap();
        let o = MonomialOrder::degree_refined(&g);
        // x2 (weight 5) beats x1 (weight 4) although grevlex says otherwise
        assert_eq!(o.cmp_parts((&m(&[0, 1]), 0), (&m(&[1, 0]), 0)), Ordering::Greater);
        // degree-refining order on standard grading: x1^3 > x2
        let gs = Grading::standard(2, 1);
        let os = MonomialOrder::degree_refined(&gs);
        assert_eq!(os.cmp_parts((&m(&[3, 0]), 0), (&m(&[0, 1]), 0)), Ordering::Greater);
    }

    #[test]
    fn compare_ignores_coefficients() {
        use crate::element::ModuleTerm;
        let o = MonomialOrder::grevlex_top();
        let a = ModuleTerm { coeff: 5, monomial: m(&[2, 0, 0]), component: 0 };
        let b = ModuleTerm { coeff: 9, monomial: m(&[2, 0, 0]), component: 0 };
        assert_eq!(o.compare(&a, &b), Ordering::Equal);
        let c = ModuleTerm { coeff: 1, monomial: m(&[1, 1, 0]), component: 0 };
        assert_eq!(o.compare(&a, &c), Ordering::Greater);
    }

    #[test]
    fn schreyer_order_lifts_parent() {
        // basis leads: g0 -> x e0, g1 -> y e0
        let parent = MonomialOrder::grevlex_top();
        let so = SchreyerOrder::new(
            vec![(m(&[1, 0]), 0), (m(&[0, 1]), 0)],
            Box::new(parent),
        );
        // y E0 lifts to xy e0, x E1 lifts to xy e0: tie, smaller index wins
        assert_eq!(so.cmp_parts((&m(&[0, 1]), 0), (&m(&[1, 0]), 1)), Ordering::Greater);
        // x^2 E1 lifts to x^2 y > xy
        assert_eq!(so.cmp_parts((&m(&[2, 0]), 1), (&m(&[0, 1]), 0)), Ordering::Greater);
    }
}
