//! Graded free resolutions by iterated Schreyer syzygies, with optional
//! minimalization by constant-entry cancellation.
//!
//! Levels are built as follows: the Gröbner basis of K gives F_1 -> F_0 = F;
//! its Schreyer syzygies, a Gröbner basis of the kernel under the induced
//! order, give F_2, and so on. Sorting each level by leading term
//! (lex-descending within a component) makes every syzygy level drop the
//! earliest variable still present from its leading terms, so the iteration
//! stops within the Hilbert bound of n levels.

use crate::field::PrimeField;
use crate::element::FreeElement;
use crate::grading::{degree_add, Degree};
use crate::groebner::{schreyer_sort, schreyer_syzygies, GroebnerConfig};
use crate::monomial::Monomial;
use crate::order::{SchreyerOrder, TermOrder};
use crate::submodule::QuotientModule;
use crate::Result;
use std::collections::BTreeMap;

/// A polynomial matrix entry: canonical (monomial, coefficient) list.
pub type PolyEntry = Vec<(Monomial, u64)>;

#[derive(Debug, Clone)]
pub struct PolyMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<PolyEntry>>,
}

impl PolyMatrix {
    fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix { rows, cols, entries: vec![vec![Vec::new(); cols]; rows] }
    }

    pub fn entry(&self, r: usize, c: usize) -> &PolyEntry {
        &self.entries[r][c]
    }

    fn remove_row(&mut self, r: usize) {
        self.entries.remove(r);
        self.rows -= 1;
    }

    fn remove_col(&mut self, c: usize) {
        for row in &mut self.entries {
            row.remove(c);
        }
        self.cols -= 1;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|row| row.iter().all(|e| e.is_empty()))
    }
}

pub fn poly_scale(a: &PolyEntry, c: u64, f: &PrimeField) -> PolyEntry {
    if c == 0 {
        return Vec::new();
    }
    a.iter().map(|(m, v)| (m.clone(), f.mul(*v, c))).collect()
}

pub fn poly_add(a: &PolyEntry, b: &PolyEntry, f: &PrimeField) -> PolyEntry {
    let mut acc: BTreeMap<Monomial, u64> = a.iter().cloned().collect();
    for (m, v) in b {
        let e = acc.entry(m.clone()).or_insert(0);
        *e = f.add(*e, *v);
    }
    acc.into_iter().filter(|(_, v)| *v != 0).collect()
}

pub fn poly_sub(a: &PolyEntry, b: &PolyEntry, f: &PrimeField) -> PolyEntry {
    let neg: PolyEntry = b.iter().map(|(m, v)| (m.clone(), f.neg(*v))).collect();
    poly_add(a, &neg, f)
}

pub fn poly_mul(a: &PolyEntry, b: &PolyEntry, f: &PrimeField) -> PolyEntry {
    let mut acc: BTreeMap<Monomial, u64> = BTreeMap::new();
    for (ma, va) in a {
        for (mb, vb) in b {
            let m = ma.mul(mb).expect("exponent overflow in resolution entry");
            let e = acc.entry(m).or_insert(0);
            *e = f.add(*e, f.mul(*va, *vb));
        }
    }
    acc.into_iter().filter(|(_, v)| *v != 0).collect()
}

fn poly_constant(a: &PolyEntry) -> Option<u64> {
    a.iter().find(|(m, _)| m.is_one()).map(|(_, v)| *v)
}

fn polymat_mul(a: &PolyMatrix, b: &PolyMatrix, f: &PrimeField) -> PolyMatrix {
    assert_eq!(a.cols, b.rows);
    let mut out = PolyMatrix::zeros(a.rows, b.cols);
    for r in 0..a.rows {
        for c in 0..b.cols {
            let mut acc: PolyEntry = Vec::new();
            for k in 0..a.cols {
                if a.entries[r][k].is_empty() || b.entries[k][c].is_empty() {
                    continue;
                }
                acc = poly_add(&acc, &poly_mul(&a.entries[r][k], &b.entries[k][c], f), f);
            }
            out.entries[r][c] = acc;
        }
    }
    out
}

fn columns_to_matrix(cols: &[FreeElement], rows: usize) -> PolyMatrix {
    let mut out = PolyMatrix::zeros(rows, cols.len());
    for (c, col) in cols.iter().enumerate() {
        for r in 0..rows {
            let mut e = col.component_entries(r);
            e.sort_by(|a, b| a.0.cmp(&b.0));
            out.entries[r][c] = e;
        }
    }
    out
}

#[derive(Debug, Clone)]
pub struct FreeResolution {
    pub nvars: usize,
    /// Generator multidegrees of F_0, F_1, ..., F_len.
    pub twists: Vec<Vec<Degree>>,
    /// `mats[i]` presents d_{i+1}: F_{i+1} -> F_i.
    pub mats: Vec<PolyMatrix>,
    pub minimal: bool,
}

impl FreeResolution {
    pub fn len(&self) -> usize {
        self.twists.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn betti(&self) -> Vec<usize> {
        self.twists.iter().map(|t| t.len()).collect()
    }

    fn assert_complex(&self, f: &PrimeField) {
        for i in 0..self.mats.len().saturating_sub(1) {
            assert!(
                polymat_mul(&self.mats[i], &self.mats[i + 1], f).is_zero(),
                "consecutive differentials do not compose to zero"
            );
        }
    }

    fn assert_minimal(&self) {
        for m in &self.mats {
            for row in &m.entries {
                for e in row {
                    assert!(poly_constant(e).is_none(), "minimal resolution has a unit entry");
                }
            }
        }
    }
}

/// Resolve M = F/K from its stored Gröbner basis.
pub fn resolve_quotient(m: &QuotientModule, minimal: bool, cfg: &GroebnerConfig) -> Result<FreeResolution> {
    let field = *m.field();
    let grading = m.grading().clone();
    let rank = m.rank();
    let mut twists: Vec<Vec<Degree>> = vec![(0..rank).map(|c| grading.twist(c).to_vec()).collect()];
    let mut mats: Vec<PolyMatrix> = Vec::new();
    let mut level_basis = schreyer_sort(m.source_gb().to_vec());
    if !level_basis.is_empty() {
        mats.push(columns_to_matrix(&level_basis, rank));
        twists.push(
            level_basis
                .iter()
                .map(|g| g.homogeneous_degree(&grading).map(|d| d.expect("nonzero basis element")))
                .collect::<Result<_>>()?,
        );
        let mut cur_order: Box<dyn TermOrder + Send + Sync> = Box::new(m.source_order().clone());
        loop {
            let leads: Vec<(Monomial, usize)> = level_basis
                .iter()
                .map(|g| {
                    let lt = g.leading_term().unwrap();
                    (lt.monomial.clone(), lt.component)
                })
                .collect();
            let syz_order = SchreyerOrder::new(leads, cur_order);
            let raw = schreyer_syzygies(&level_basis, &syz_order, &field, cfg)?;
            let min = crate::groebner::minimal_gb(raw, &syz_order);
            let syz: Vec<FreeElement> = schreyer_sort(min.into_iter().map(|s| s.monic(&field)).collect());
            if syz.is_empty() {
                break;
            }
            mats.push(columns_to_matrix(&syz, level_basis.len()));
            let level = twists.len() - 1;
            twists.push(
                syz.iter()
                    .map(|s| {
                        let t = s.leading_term().unwrap();
                        degree_add(&grading.monomial_degree(&t.monomial), &twists[level][t.component])
                    })
                    .collect(),
            );
            assert!(
                twists.len() <= m.nvars() + 2,
                "syzygy iteration exceeded the Hilbert bound"
            );
            level_basis = syz;
            cur_order = Box::new(syz_order);
        }
    }
    let mut res = FreeResolution { nvars: m.nvars(), twists, mats, minimal: false };
    res.assert_complex(&field);
    if minimal {
        minimalize(&mut res, &field);
        res.assert_complex(&field);
        res.assert_minimal();
        res.minimal = true;
    }
    assert!(res.len() <= m.nvars(), "resolution longer than the number of variables");
    Ok(res)
}

/// Cancel unit entries: a constant pivot at (a, b) of d_{k+1} splits off a
/// trivial complex F_k-gen-a <- F_{k+1}-gen-b. Column then row operations
/// clear the pivot's row and column; the basis changes propagate to the
/// neighbouring differentials, and the two generators are deleted.
fn minimalize(res: &mut FreeResolution, f: &PrimeField) {
    loop {
        let mut pivot: Option<(usize, usize, usize, u64)> = None;
        'search: for (k, m) in res.mats.iter().enumerate() {
            for a in 0..m.rows {
                for b in 0..m.cols {
                    if let Some(u) = poly_constant(&m.entries[a][b]) {
                        assert_eq!(
                            m.entries[a][b].len(),
                            1,
                            "homogeneous unit entry must be a pure constant"
                        );
                        pivot = Some((k, a, b, u));
                        break 'search;
                    }
                }
            }
        }
        let Some((k, a, b, u)) = pivot else { break };
        let uinv = f.inv(u);
        // column operations: clear row a left and right of the pivot
        for b2 in 0..res.mats[k].cols {
            if b2 == b || res.mats[k].entries[a][b2].is_empty() {
                continue;
            }
            let q = poly_scale(&res.mats[k].entries[a][b2], uinv, f);
            for r in 0..res.mats[k].rows {
                let upd = poly_sub(
                    &res.mats[k].entries[r][b2],
                    &poly_mul(&q, &res.mats[k].entries[r][b], f),
                    f,
                );
                res.mats[k].entries[r][b2] = upd;
            }
            if k + 1 < res.mats.len() {
                for c in 0..res.mats[k + 1].cols {
                    let upd = poly_add(
                        &res.mats[k + 1].entries[b][c],
                        &poly_mul(&q, &res.mats[k + 1].entries[b2][c], f),
                        f,
                    );
                    res.mats[k + 1].entries[b][c] = upd;
                }
            }
        }
        // row operations: clear column b
        for a2 in 0..res.mats[k].rows {
            if a2 == a || res.mats[k].entries[a2][b].is_empty() {
                continue;
            }
            let s = poly_scale(&res.mats[k].entries[a2][b], uinv, f);
            for c in 0..res.mats[k].cols {
                let upd = poly_sub(
                    &res.mats[k].entries[a2][c],
                    &poly_mul(&s, &res.mats[k].entries[a][c], f),
                    f,
                );
                res.mats[k].entries[a2][c] = upd;
            }
            if k > 0 {
                for r in 0..res.mats[k - 1].rows {
                    let upd = poly_add(
                        &res.mats[k - 1].entries[r][a],
                        &poly_mul(&s, &res.mats[k - 1].entries[r][a2], f),
                        f,
                    );
                    res.mats[k - 1].entries[r][a] = upd;
                }
            }
        }
        res.mats[k].remove_row(a);
        res.mats[k].remove_col(b);
        res.twists[k].remove(a);
        res.twists[k + 1].remove(b);
        if k > 0 {
            res.mats[k - 1].remove_col(a);
        }
        if k + 1 < res.mats.len() {
            res.mats[k + 1].remove_row(b);
        }
    }
    while res.twists.len() > 1 && res.twists.last().unwrap().is_empty() {
        res.twists.pop();
        res.mats.pop();
    }
    for t in &res.twists[1..] {
        assert!(!t.is_empty(), "zero-rank level inside a resolution");
    }
}
