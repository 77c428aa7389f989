//! The verification layer: tangent-space parity, Hom congruences, Ext
//! duality, consecutive-cancellation ledgers, semicontinuity, and the
//! dimension spectra over all monomial points.

use crate::enumeration::enumerate_monomial_submodules;
use crate::ext::{duality_holds, ext_self, ext_table, ExtTable};
use crate::field::PrimeField;
use crate::grading::{degree_neg, degree_sub, Degree};
use crate::groebner::GroebnerConfig;
use crate::hom::{hom_graded, hom_monomial};
use crate::presentation::presentation_graded;
use crate::submodule::{GradedSubmodule, MonomialSubmodule, QuotientModule};
use crate::{Error, Result};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;

/// One tangent-space measurement: hom(K, M) against the expected parity rd.
#[derive(Debug, Clone, Serialize)]
pub struct TangentReport {
    pub nvars: usize,
    pub rank: usize,
    pub colength: u64,
    pub dim: u64,
    pub expected_parity: u64,
    pub parity_ok: bool,
    pub input: String,
}

fn report(nvars: usize, rank: usize, d: u64, dim: u64, input: String) -> TangentReport {
    let expected_parity = (rank as u64 * d) % 2;
    TangentReport {
        nvars,
        rank,
        colength: d,
        dim,
        expected_parity,
        parity_ok: dim % 2 == expected_parity,
        input,
    }
}

pub fn check_parity_monomial(k: &MonomialSubmodule) -> Result<TangentReport> {
    let d = k.colength().finite()?;
    let dim = hom_monomial(k, k)?;
    let input = k
        .generators()
        .iter()
        .map(|(m, c)| crate::text::print_term(
            &crate::element::ModuleTerm { coeff: 1, monomial: m.clone(), component: *c },
            k.rank(),
        ))
        .collect::<Vec<_>>()
        .join(", ");
    Ok(report(k.nvars(), k.rank(), d, dim, input))
}

pub fn check_parity_graded(
    k: &GradedSubmodule,
    field: &PrimeField,
    cfg: &GroebnerConfig,
) -> Result<TangentReport> {
    let m = QuotientModule::from_graded(k, field, cfg)?;
    let pres = presentation_graded(k, field, cfg)?;
    let dim = hom_graded(&pres, &m, field)?;
    let input = k
        .generators()
        .iter()
        .map(|g| crate::text::print_element(g, k.rank()))
        .collect::<Vec<_>>()
        .join(", ");
    Ok(report(k.nvars(), k.rank(), m.dim() as u64, dim, input))
}

/// hom(I, S/J) + hom(J, S/I) == dim(S/I) + dim(S/J) (mod 2), for ideals of
/// finite colength in three variables.
#[derive(Debug, Clone, Serialize)]
pub struct HomIjReport {
    pub hom_i_sj: u64,
    pub hom_j_si: u64,
    pub colength_i: u64,
    pub colength_j: u64,
    pub congruent: bool,
}

pub fn check_hom_ij_monomial(i: &MonomialSubmodule, j: &MonomialSubmodule) -> Result<HomIjReport> {
    if i.nvars() != 3 || j.nvars() != 3 || i.rank() != 1 || j.rank() != 1 {
        return Err(Error::InvalidInput("the Hom congruence check needs two ideals in three variables".into()));
    }
    let di = i.colength().finite()?;
    let dj = j.colength().finite()?;
    let hom_i_sj = hom_monomial(i, j)?;
    let hom_j_si = hom_monomial(j, i)?;
    Ok(HomIjReport {
        hom_i_sj,
        hom_j_si,
        colength_i: di,
        colength_j: dj,
        congruent: (hom_i_sj + hom_j_si) % 2 == (di + dj) % 2,
    })
}

pub fn check_hom_ij_graded(
    i: &GradedSubmodule,
    j: &GradedSubmodule,
    field: &PrimeField,
    cfg: &GroebnerConfig,
) -> Result<HomIjReport> {
    if i.nvars() != 3 || j.nvars() != 3 || i.rank() != 1 || j.rank() != 1 {
        return Err(Error::InvalidInput("the Hom congruence check needs two ideals in three variables".into()));
    }
    let si = QuotientModule::from_graded(i, field, cfg)?;
    let sj = QuotientModule::from_graded(j, field, cfg)?;
    let pres_i = presentation_graded(i, field, cfg)?;
    let pres_j = presentation_graded(j, field, cfg)?;
    let hom_i_sj = hom_graded(&pres_i, &sj, field)?;
    let hom_j_si = hom_graded(&pres_j, &si, field)?;
    let (di, dj) = (si.dim() as u64, sj.dim() as u64);
    Ok(HomIjReport {
        hom_i_sj,
        hom_j_si,
        colength_i: di,
        colength_j: dj,
        congruent: (hom_i_sj + hom_j_si) % 2 == (di + dj) % 2,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct DualityReport {
    pub ok: bool,
    pub sigma: Degree,
}

/// dim [Ext^i(M, N)]_j == dim [Ext^{n-i}(N, M)]_{-j-sigma} entrywise, with
/// sigma the sum of the variable degrees.
pub fn check_duality(
    m: &QuotientModule,
    n_mod: &QuotientModule,
    cfg: &GroebnerConfig,
) -> Result<DualityReport> {
    let sigma = m.grading().socle_shift();
    let ab = ext_table(m, n_mod, cfg)?;
    let ba = ext_table(n_mod, m, cfg)?;
    Ok(DualityReport { ok: duality_holds(&ab, &ba, &sigma), sigma })
}

/// The consecutive-cancellation ledger delta_{i,j} between M = F/K and its
/// Gröbner degeneration M' = F/in(K):
/// dim [Ext^i(M', M')]_j = dim [Ext^i(M, M)]_j + delta_{i,j} + delta_{i-1,j}
/// with delta_{-1} = delta_n = 0. Rows 0..n-1 are stored; validity flags
/// capture nonnegativity and the forced vanishing of row n.
#[derive(Debug, Clone)]
pub struct CancellationTable {
    pub nvars: usize,
    pub delta: BTreeMap<(usize, Degree), i64>,
    pub nonnegative: bool,
    pub boundary_ok: bool,
    pub ext_orig: ExtTable,
    pub ext_degen: ExtTable,
}

impl CancellationTable {
    pub fn delta_at(&self, i: usize, j: &Degree) -> i64 {
        self.delta.get(&(i, j.clone())).copied().unwrap_or(0)
    }

    pub fn row_sum(&self, i: usize) -> i64 {
        self.delta.iter().filter(|((k, _), _)| *k == i).map(|(_, v)| *v).sum()
    }

    /// delta_{i,j} == delta_{n-1-i, -j-sigma} for all i, j.
    pub fn symmetric_under(&self, sigma: &Degree) -> bool {
        let n = self.nvars;
        self.delta.iter().all(|((i, j), v)| {
            let reflected = degree_sub(&degree_neg(j), sigma);
            self.delta_at(n - 1 - *i, &reflected) == *v
        })
    }

    /// The recursion reproduces the degenerate table entrywise.
    pub fn reconstructs_tables(&self) -> bool {
        let n = self.nvars;
        let mut degrees: Vec<Degree> = Vec::new();
        for (_, j, _) in self.ext_orig.iter() {
            degrees.push(j.clone());
        }
        for (_, j, _) in self.ext_degen.iter() {
            degrees.push(j.clone());
        }
        for ((_, j), _) in self.delta.iter() {
            degrees.push(j.clone());
        }
        degrees.sort();
        degrees.dedup();
        for j in &degrees {
            for i in 0..=n {
                let below = if i == 0 { 0 } else { self.delta_at(i - 1, j) };
                let here = if i == n { 0 } else { self.delta_at(i, j) };
                if self.ext_degen.dim(i, j) as i64 != self.ext_orig.dim(i, j) as i64 + here + below {
                    return false;
                }
            }
        }
        true
    }
}

pub fn cancellation_table(
    k: &GradedSubmodule,
    field: &PrimeField,
    cfg: &GroebnerConfig,
) -> Result<CancellationTable> {
    let n = k.nvars();
    let m = QuotientModule::from_graded(k, field, cfg)?;
    let m_degen = QuotientModule::from_monomial(&k.initial_submodule(), k.grading(), field)?;
    let ext_orig = ext_self(&m, cfg)?;
    let ext_degen = ext_self(&m_degen, cfg)?;
    let mut degrees: Vec<Degree> = Vec::new();
    for (_, j, _) in ext_orig.iter() {
        degrees.push(j.clone());
    }
    for (_, j, _) in ext_degen.iter() {
        degrees.push(j.clone());
    }
    degrees.sort();
    degrees.dedup();
    let mut delta: BTreeMap<(usize, Degree), i64> = BTreeMap::new();
    let mut nonnegative = true;
    let mut boundary_ok = true;
    for j in &degrees {
        let mut prev = 0i64;
        for i in 0..n {
            let d = ext_degen.dim(i, j) as i64 - ext_orig.dim(i, j) as i64 - prev;
            if d < 0 {
                nonnegative = false;
            }
            if d != 0 {
                delta.insert((i, j.clone()), d);
            }
            prev = d;
        }
        // row n is forced: delta_{n,j} = E'_n - E_n - delta_{n-1,j} must be 0
        if ext_degen.dim(n, j) as i64 - ext_orig.dim(n, j) as i64 - prev != 0 {
            boundary_ok = false;
        }
    }
    Ok(CancellationTable { nvars: n, delta, nonnegative, boundary_ok, ext_orig, ext_degen })
}

#[derive(Debug, Clone, Serialize)]
pub struct SemicontinuityReport {
    pub hom_orig: u64,
    pub hom_degen: u64,
    pub gap: i64,
    pub delta1_sum: i64,
    pub gap_even: bool,
}

/// hom(K, M) <= hom(K', M') with gap sum_j delta_{1,j}; over three variables
/// the gap is even.
pub fn semicontinuity_check(
    k: &GradedSubmodule,
    field: &PrimeField,
    cfg: &GroebnerConfig,
) -> Result<SemicontinuityReport> {
    let m = QuotientModule::from_graded(k, field, cfg)?;
    let pres = presentation_graded(k, field, cfg)?;
    let hom_orig = hom_graded(&pres, &m, field)?;
    let initial = k.initial_submodule();
    let hom_degen = hom_monomial(&initial, &initial)?;
    let table = cancellation_table(k, field, cfg)?;
    let delta1_sum = if k.nvars() >= 2 { table.row_sum(1) } else { 0 };
    let gap = hom_degen as i64 - hom_orig as i64;
    Ok(SemicontinuityReport {
        hom_orig,
        hom_degen,
        gap,
        delta1_sum,
        gap_even: gap % 2 == 0,
    })
}

/// The multiset of tangent dimensions over all monomial points of fixed
/// (n, r, d).
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SpectrumReport {
    pub nvars: usize,
    pub rank: usize,
    pub colength: u64,
    /// (dimension, multiplicity), sorted by dimension.
    pub values: Vec<(u64, u64)>,
    pub total: u64,
}

impl SpectrumReport {
    pub fn distinct(&self) -> Vec<u64> {
        self.values.iter().map(|(d, _)| *d).collect()
    }
}

pub fn spectrum(nvars: usize, rank: usize, colength: u64) -> Result<SpectrumReport> {
    let stream = enumerate_monomial_submodules(nvars, rank, colength);
    let items = stream.items().to_vec();
    let dims: Vec<u64> = items
        .par_iter()
        .map(|k| hom_monomial(k, k))
        .collect::<Result<_>>()?;
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    for d in dims {
        *counts.entry(d).or_insert(0) += 1;
    }
    let total = counts.values().sum();
    Ok(SpectrumReport {
        nvars,
        rank,
        colength,
        values: counts.into_iter().collect(),
        total,
    })
}
