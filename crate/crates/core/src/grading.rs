//! Multigradings by weight matrices.
//!
//! A grading assigns to every variable a column of an m x n integer weight
//! matrix and to every free-module basis element a twist in Z^m. Positivity
//! is witnessed by a stored linear functional lambda with lambda(deg x_i) > 0
//! for every variable; this keeps every graded slice of the ring finite
//! dimensional.

use crate::monomial::Monomial;
use crate::{Error, Result};
use std::cmp::Ordering;

/// An element of the grading group Z^m.
pub type Degree = Vec<i64>;

pub fn degree_add(a: &[i64], b: &[i64]) -> Degree {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn degree_sub(a: &[i64], b: &[i64]) -> Degree {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn degree_neg(a: &[i64]) -> Degree {
    a.iter().map(|x| -x).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grading {
    nvars: usize,
    rank: usize,
    /// m x n weight matrix, row major.
    weights: Vec<Vec<i64>>,
    /// Twist of each basis element, rank entries of length m.
    twists: Vec<Vec<i64>>,
    /// Positivity functional: lambda . deg(x_i) > 0 for all i.
    functional: Vec<i64>,
}

impl Grading {
    /// Standard grading: deg(x_i) = 1, all twists zero.
    pub fn standard(nvars: usize, rank: usize) -> Self {
        Grading {
            nvars,
            rank,
            weights: vec![vec![1; nvars]],
            twists: vec![vec![0]; rank],
            functional: vec![1],
        }
    }

    /// Z-grading with positive variable weights, all twists zero.
    pub fn weighted(nvars: usize, rank: usize, w: Vec<i64>) -> Result<Self> {
        if w.len() != nvars {
            return Err(Error::DimensionMismatch("weight vector length != nvars".into()));
        }
        if w.iter().any(|&x| x <= 0) {
            return Err(Error::InvalidInput("variable weights must be positive".into()));
        }
        Ok(Grading {
            nvars,
            rank,
            weights: vec![w],
            twists: vec![vec![0]; rank],
            functional: vec![1],
        })
    }

    /// General Z^m-grading from a weight matrix and per-component twists.
    /// A positivity functional is searched over a small box; inputs without
    /// one are rejected.
    pub fn from_matrix(nvars: usize, rank: usize, weights: Vec<Vec<i64>>, twists: Vec<Vec<i64>>) -> Result<Self> {
        let m = weights.len();
        if m == 0 || weights.iter().any(|row| row.len() != nvars) {
            return Err(Error::DimensionMismatch("weight matrix must be m x nvars".into()));
        }
        if twists.len() != rank || twists.iter().any(|t| t.len() != m) {
            return Err(Error::DimensionMismatch("twists must be rank x m".into()));
        }
        let cols: Vec<Vec<i64>> = (0..nvars).map(|j| weights.iter().map(|row| row[j]).collect()).collect();
        if cols.iter().any(|c| c.iter().all(|&x| x == 0)) {
            return Err(Error::InvalidInput("a variable has zero degree".into()));
        }
        let functional = find_positive_functional(&cols, m)
            .ok_or_else(|| Error::InvalidInput("no positivity functional found for weight matrix".into()))?;
        Ok(Grading { nvars, rank, weights, twists, functional })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn group_rank(&self) -> usize {
        self.weights.len()
    }

    pub fn functional(&self) -> &[i64] {
        &self.functional
    }

    /// Same ambient grading of S (weights), ignoring twists.
    pub fn same_ring_grading(&self, other: &Grading) -> bool {
        self.nvars == other.nvars && self.weights == other.weights
    }

    pub fn variable_degree(&self, i: usize) -> Degree {
        self.weights.iter().map(|row| row[i]).collect()
    }

    /// Sum of all variable degrees; the reflection center of Ext duality.
    pub fn socle_shift(&self) -> Degree {
        self.weights.iter().map(|row| row.iter().sum()).collect()
    }

    pub fn twist(&self, component: usize) -> &[i64] {
        &self.twists[component]
    }

    pub fn monomial_degree(&self, m: &Monomial) -> Degree {
        self.weights
            .iter()
            .map(|row| row.iter().zip(m.exponents()).map(|(w, &e)| w * e as i64).sum())
            .collect()
    }

    /// Degree of a term m * eps_c: weight-matrix degree plus the twist.
    pub fn term_degree(&self, m: &Monomial, component: usize) -> Degree {
        degree_add(&self.monomial_degree(m), &self.twists[component])
    }

    pub fn functional_value(&self, d: &[i64]) -> i64 {
        self.functional.iter().zip(d).map(|(l, x)| l * x).sum()
    }

    /// Largest functional value of a single variable; band width for
    /// vanishing certificates.
    pub fn max_variable_weight(&self) -> i64 {
        (0..self.nvars)
            .map(|i| self.functional_value(&self.variable_degree(i)))
            .max()
            .unwrap_or(1)
    }

    /// Total order on degrees: positivity functional first, then lex.
    /// Refining a monomial order by this comparison keeps it a total,
    /// multiplicative order.
    pub fn cmp_degrees(&self, a: &[i64], b: &[i64]) -> Ordering {
        let fa = self.functional_value(a);
        let fb = self.functional_value(b);
        fa.cmp(&fb).then_with(|| a.cmp(b))
    }
}

/// All monomials of an exact multidegree. Positivity of the functional makes
/// the search space finite.
pub fn monomials_of_degree(grading: &Grading, target: &[i64]) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; grading.nvars()];
    fn rec(g: &Grading, var: usize, rest: Vec<i64>, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        let lam = g.functional_value(&rest);
        if lam < 0 {
            return;
        }
        if var == g.nvars() {
            if rest.iter().all(|&x| x == 0) {
                out.push(Monomial::new(exps.clone()));
            }
            return;
        }
        let dv = g.variable_degree(var);
        let mut cur = rest;
        let mut e = 0u32;
        loop {
            exps[var] = e;
            rec(g, var + 1, cur.clone(), exps, out);
            if g.functional_value(&cur) < g.functional_value(&dv) {
                break;
            }
            cur = degree_sub(&cur, &dv);
            e += 1;
        }
        exps[var] = 0;
    }
    rec(grading, 0, target.to_vec(), &mut exps, &mut out);
    out.sort();
    out
}

/// All monomials whose degree has the given positivity-functional value.
pub fn monomials_of_functional_level(grading: &Grading, level: i64) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; grading.nvars()];
    fn rec(g: &Grading, var: usize, rest: i64, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if rest < 0 {
            return;
        }
        if var == g.nvars() {
            if rest == 0 {
                out.push(Monomial::new(exps.clone()));
            }
            return;
        }
        let w = g.functional_value(&g.variable_degree(var));
        let mut e = 0u32;
        while rest - w * e as i64 >= 0 {
            exps[var] = e;
            rec(g, var + 1, rest - w * e as i64, exps, out);
            e += 1;
        }
        exps[var] = 0;
    }
    rec(grading, 0, level, &mut exps, &mut out);
    out.sort();
    out
}

fn find_positive_functional(cols: &[Vec<i64>], m: usize) -> Option<Vec<i64>> {
    // Try the all-ones functional first, then search a small box.
    let ones = vec![1i64; m];
    let positive = |lam: &[i64]| cols.iter().all(|c| lam.iter().zip(c).map(|(l, x)| l * x).sum::<i64>() > 0);
    if positive(&ones) {
        return Some(ones);
    }
    let bound = 8i64;
    let mut lam = vec![-bound; m];
    loop {
        if positive(&lam) {
            return Some(lam);
        }
        let mut i = 0;
        loop {
            if i == m {
                return None;
            }
            lam[i] += 1;
            if lam[i] > bound {
                lam[i] = -bound;
                i += 1;
            } else {
                break;
            }
        }
    }
}
