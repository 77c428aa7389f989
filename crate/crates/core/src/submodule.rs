//! Monomial and graded submodules K of a free module F, and the
//! finite-length quotient M = F/K.
//!
//! A monomial submodule is a direct sum of monomial ideals, one per
//! component, stored as minimal generating antichains. A graded submodule
//! carries homogeneous generators, the Gröbner basis computed at
//! construction, and the order used. Quotients are presented by their
//! standard-monomial basis and one action matrix per variable.

use crate::element::FreeElement;
use crate::field::PrimeField;
use crate::grading::{degree_add, Degree, Grading};
use crate::groebner::{buchberger, normal_form, GroebnerConfig};
use crate::linalg::Mat;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::{Error, Result};
use std::collections::{BTreeSet, HashMap};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Colength {
    Finite(u64),
    Infinite,
}

impl Colength {
    pub fn finite(&self) -> Result<u64> {
        match self {
            Colength::Finite(d) => Ok(*d),
            Colength::Infinite => Err(Error::InfiniteColength),
        }
    }
}

/// K = direct sum of monomial ideals I_i * eps_i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialSubmodule {
    nvars: usize,
    rank: usize,
    /// Minimal generators per component, each an antichain under
    /// divisibility, sorted for determinism.
    components: Vec<Vec<Monomial>>,
}

fn minimalize_antichain(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| (m.total_degree(), m.exponents().to_vec()));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::new();
    for g in gens {
        if !kept.iter().any(|h| h.divides(&g).unwrap_or(false)) {
            kept.push(g);
        }
    }
    kept
}

impl MonomialSubmodule {
    pub fn new(nvars: usize, rank: usize, gens: Vec<(Monomial, usize)>) -> Result<Self> {
        let mut components = vec![Vec::new(); rank];
        for (m, c) in gens {
            if m.nvars() != nvars {
                return Err(Error::DimensionMismatch("generator has wrong variable count".into()));
            }
            if c >= rank {
                return Err(Error::InvalidInput(format!("component {c} out of range")));
            }
            components[c].push(m);
        }
        Ok(MonomialSubmodule {
            nvars,
            rank,
            components: components.into_iter().map(minimalize_antichain).collect(),
        })
    }

    pub fn from_ideals(nvars: usize, ideals: Vec<Vec<Monomial>>) -> Self {
        MonomialSubmodule {
            nvars,
            rank: ideals.len(),
            components: ideals.into_iter().map(minimalize_antichain).collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn component(&self, i: usize) -> &[Monomial] {
        &self.components[i]
    }

    pub fn generators(&self) -> Vec<(Monomial, usize)> {
        self.components
            .iter()
            .enumerate()
            .flat_map(|(c, gens)| gens.iter().map(move |m| (m.clone(), c)))
            .collect()
    }

    pub fn as_free_elements(&self) -> Vec<FreeElement> {
        self.generators()
            .into_iter()
            .map(|(m, c)| FreeElement::term(1, m, c))
            .collect()
    }

    /// Membership of a term in K.
    pub fn contains(&self, m: &Monomial, component: usize) -> bool {
        self.components[component]
            .iter()
            .any(|g| g.divides(m).unwrap_or(false))
    }

    fn component_finite(&self, c: usize) -> bool {
        let gens = &self.components[c];
        if gens.iter().any(|g| g.is_one()) {
            return true; // unit ideal, colength 0
        }
        // finite iff a pure power of every variable appears
        (0..self.nvars).all(|v| {
            gens.iter().any(|g| {
                g.exponents()
                    .iter()
                    .enumerate()
                    .all(|(i, &e)| (i == v) == (e > 0))
            })
        })
    }

    /// Standard monomials of one component, as sorted exponent vectors.
    pub fn component_staircase(&self, c: usize) -> Result<Vec<Vec<u32>>> {
        if !self.component_finite(c) {
            return Err(Error::InfiniteColength);
        }
        let origin = vec![0u32; self.nvars];
        if self.contains(&Monomial::new(origin.clone()), c) {
            return Ok(Vec::new());
        }
        let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
        let mut stack = vec![origin];
        while let Some(e) = stack.pop() {
            if seen.contains(&e) {
                continue;
            }
            if self.contains(&Monomial::new(e.clone()), c) {
                continue;
            }
            seen.insert(e.clone());
            for v in 0..self.nvars {
                let mut e2 = e.clone();
                e2[v] += 1;
                stack.push(e2);
            }
        }
        Ok(seen.into_iter().collect())
    }

    pub fn colength(&self) -> Colength {
        let mut total = 0u64;
        for c in 0..self.rank {
            match self.component_staircase(c) {
                Ok(st) => total += st.len() as u64,
                Err(_) => return Colength::Infinite,
            }
        }
        Colength::Finite(total)
    }

    /// All standard monomials of F/K, sorted by (component, degree, exponents).
    pub fn standard_monomials(&self) -> Result<Vec<(Monomial, usize)>> {
        let mut out = Vec::new();
        for c in 0..self.rank {
            for e in self.component_staircase(c)? {
                out.push((Monomial::new(e), c));
            }
        }
        out.sort_by_key(|(m, c)| (*c, m.total_degree(), m.exponents().to_vec()));
        Ok(out)
    }

    /// Canonical key: per-component sorted staircases.
    pub fn staircase_key(&self) -> Result<Vec<Vec<Vec<u32>>>> {
        (0..self.rank).map(|c| self.component_staircase(c)).collect()
    }
}

/// A graded submodule K of F with its Gröbner basis.
#[derive(Debug, Clone)]
pub struct GradedSubmodule {
    nvars: usize,
    rank: usize,
    grading: Grading,
    generators: Vec<FreeElement>,
    gb: Vec<FreeElement>,
    order: MonomialOrder,
}

impl GradedSubmodule {
    /// Validates homogeneity against the declared grading, computes the
    /// Gröbner basis, and certifies that every generator reduces to zero
    /// against it.
    pub fn new(
        grading: Grading,
        generators: Vec<FreeElement>,
        order: MonomialOrder,
        field: &PrimeField,
        cfg: &GroebnerConfig,
    ) -> Result<Self> {
        let nvars = grading.nvars();
        let rank = grading.rank();
        for g in &generators {
            g.homogeneous_degree(&grading)?;
            if let Some(t) = g.terms().iter().find(|t| t.component >= rank) {
                return Err(Error::InvalidInput(format!("component {} out of range", t.component)));
            }
        }
        let gb = buchberger(&generators, &order, field, cfg)?;
        for g in &generators {
            assert!(
                normal_form(g, &gb, &order, field, cfg)?.is_zero(),
                "generator does not reduce to zero against its own Gröbner basis"
            );
        }
        Ok(GradedSubmodule { nvars, rank, grading, generators, gb, order })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn generators(&self) -> &[FreeElement] {
        &self.generators
    }

    pub fn groebner_basis(&self) -> &[FreeElement] {
        &self.gb
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Leading terms of the Gröbner basis, minimalized per component.
    pub fn initial_submodule(&self) -> MonomialSubmodule {
        let gens = self
            .gb
            .iter()
            .map(|g| {
                let lt = g.leading_term().unwrap();
                (lt.monomial.clone(), lt.component)
            })
            .collect();
        MonomialSubmodule::new(self.nvars, self.rank, gens).expect("leading terms are well formed")
    }

    pub fn colength(&self) -> Colength {
        self.initial_submodule().colength()
    }
}

/// M = F/K presented by its standard-monomial basis and variable actions.
#[derive(Debug, Clone)]
pub struct QuotientModule {
    nvars: usize,
    rank: usize,
    field: PrimeField,
    grading: Grading,
    basis: Vec<(Monomial, usize)>,
    degrees: Vec<Degree>,
    actions: Vec<Mat>,
    source_gb: Vec<FreeElement>,
    source_order: MonomialOrder,
}

impl QuotientModule {
    /// Quotient by a monomial submodule: the action of x_v on a standard
    /// monomial is another standard monomial or zero.
    pub fn from_monomial(
        k: &MonomialSubmodule,
        grading: &Grading,
        field: &PrimeField,
    ) -> Result<Self> {
        let gb = k.as_free_elements();
        let order = MonomialOrder::degree_refined(grading);
        Self::build(k, gb, order, grading.clone(), *field, true)
    }

    /// Quotient by a graded submodule: actions are normal forms against the
    /// Gröbner basis.
    pub fn from_graded(k: &GradedSubmodule, field: &PrimeField, cfg: &GroebnerConfig) -> Result<Self> {
        let initial = k.initial_submodule();
        Self::build_graded(&initial, k.groebner_basis().to_vec(), k.order().clone(), k.grading().clone(), *field, cfg)
    }

    fn build(
        initial: &MonomialSubmodule,
        gb: Vec<FreeElement>,
        order: MonomialOrder,
        grading: Grading,
        field: PrimeField,
        monomial_actions: bool,
    ) -> Result<Self> {
        assert!(monomial_actions);
        let basis = initial.standard_monomials()?;
        let mut index = HashMap::new();
        for (i, (m, c)) in basis.iter().enumerate() {
            index.insert((m.exponents().to_vec(), *c), i);
        }
        let degrees = basis.iter().map(|(m, c)| grading.term_degree(m, *c)).collect();
        let d = basis.len();
        let mut actions = Vec::with_capacity(initial.nvars());
        for v in 0..initial.nvars() {
            let xv = Monomial::variable(initial.nvars(), v);
            let mut mat = Mat::zeros(d, d);
            for (col, (m, c)) in basis.iter().enumerate() {
                let target = m.mul(&xv)?;
                if let Some(&row) = index.get(&(target.exponents().to_vec(), *c)) {
                    mat.set(row, col, 1);
                }
            }
            actions.push(mat);
        }
        let q = QuotientModule {
            nvars: initial.nvars(),
            rank: initial.rank(),
            field,
            grading,
            basis,
            degrees,
            actions,
            source_gb: gb,
            source_order: order,
        };
        q.assert_invariants();
        Ok(q)
    }

    fn build_graded(
        initial: &MonomialSubmodule,
        gb: Vec<FreeElement>,
        order: MonomialOrder,
        grading: Grading,
        field: PrimeField,
        cfg: &GroebnerConfig,
    ) -> Result<Self> {
        let basis = initial.standard_monomials()?;
        let mut index = HashMap::new();
        for (i, (m, c)) in basis.iter().enumerate() {
            index.insert((m.exponents().to_vec(), *c), i);
        }
        let degrees: Vec<Degree> = basis.iter().map(|(m, c)| grading.term_degree(m, *c)).collect();
        let d = basis.len();
        let mut actions = Vec::with_capacity(initial.nvars());
        for v in 0..initial.nvars() {
            let xv = Monomial::variable(initial.nvars(), v);
            let mut mat = Mat::zeros(d, d);
            for (col, (m, c)) in basis.iter().enumerate() {
                let target = m.mul(&xv)?;
                if let Some(&row) = index.get(&(target.exponents().to_vec(), *c)) {
                    mat.set(row, col, 1);
                    continue;
                }
                if initial.contains(&target, *c) {
                    // reduce x_v * m * eps_c to its standard representative
                    let nf = normal_form(
                        &FreeElement::term(1, target, *c),
                        &gb,
                        &order,
                        &field,
                        cfg,
                    )?;
                    for t in nf.terms() {
                        let row = *index
                            .get(&(t.monomial.exponents().to_vec(), t.component))
                            .expect("normal form is supported on standard monomials");
                        mat.set(row, col, t.coeff);
                    }
                }
            }
            actions.push(mat);
        }
        let q = QuotientModule {
            nvars: initial.nvars(),
            rank: initial.rank(),
            field,
            grading,
            basis,
            degrees,
            actions,
            source_gb: gb,
            source_order: order,
        };
        q.assert_invariants();
        Ok(q)
    }

    fn assert_invariants(&self) {
        // action matrices commute pairwise
        for i in 0..self.actions.len() {
            for j in i + 1..self.actions.len() {
                let ab = self.actions[i].mul_mat(&self.actions[j], &self.field);
                let ba = self.actions[j].mul_mat(&self.actions[i], &self.field);
                assert_eq!(ab.rows, ba.rows);
                for r in 0..ab.rows {
                    for c in 0..ab.cols {
                        assert_eq!(ab.get(r, c), ba.get(r, c), "action matrices do not commute");
                    }
                }
            }
        }
        // the action of x_v raises degree by deg(x_v)
        for v in 0..self.nvars {
            let dv = self.grading.variable_degree(v);
            for col in 0..self.dim() {
                for row in 0..self.dim() {
                    if self.actions[v].get(row, col) != 0 {
                        assert_eq!(
                            self.degrees[row],
                            degree_add(&self.degrees[col], &dv),
                            "variable action is not degree-homogeneous"
                        );
                    }
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn basis(&self) -> &[(Monomial, usize)] {
        &self.basis
    }

    pub fn degrees(&self) -> &[Degree] {
        &self.degrees
    }

    pub fn action(&self, v: usize) -> &Mat {
        &self.actions[v]
    }

    pub fn source_gb(&self) -> &[FreeElement] {
        &self.source_gb
    }

    pub fn source_order(&self) -> &MonomialOrder {
        &self.source_order
    }

    /// Apply a monomial to a coordinate vector.
    pub fn apply_monomial(&self, m: &Monomial, vec: &[u64]) -> Vec<u64> {
        let mut v = vec.to_vec();
        for (var, &e) in m.exponents().iter().enumerate() {
            for _ in 0..e {
                v = self.actions[var].mul_vec(&v, &self.field);
            }
        }
        v
    }

    /// Apply a polynomial (as (monomial, coeff) entries) to the basis vector
    /// e_idx.
    pub fn apply_poly_to_basis(&self, entries: &[(Monomial, u64)], idx: usize) -> Vec<u64> {
        let mut unit = vec![0u64; self.dim()];
        unit[idx] = 1;
        let mut acc = vec![0u64; self.dim()];
        for (m, c) in entries {
            let v = self.apply_monomial(m, &unit);
            for (a, x) in acc.iter_mut().zip(v) {
                *a = self.field.add(*a, self.field.mul(*c, x));
            }
        }
        acc
    }

    /// Basis indices grouped by multidegree.
    pub fn degree_groups(&self) -> std::collections::BTreeMap<Degree, Vec<usize>> {
        let mut groups = std::collections::BTreeMap::new();
        for (i, d) in self.degrees.iter().enumerate() {
            groups.entry(d.clone()).or_insert_with(Vec::new).push(i);
        }
        groups
    }
}

/// Colength of a graded submodule computed degreewise by linear algebra on
/// the generators, with no Gröbner machinery: the independent cross-check
/// for Gröbner degeneration preserving colength. Sums `dim [F]_j - rank [K]_j`
/// over ascending functional levels and stops once a full band of width
/// max-variable-weight is zero, which certifies vanishing beyond. Returns
/// None when no certificate is reached within the level budget.
pub fn colength_by_rank(
    grading: &Grading,
    generators: &[FreeElement],
    field: &PrimeField,
    level_budget: i64,
) -> Option<u64> {
    let rank = grading.rank();
    let gen_degrees: Vec<Degree> = generators
        .iter()
        .map(|g| g.homogeneous_degree(grading).ok().flatten())
        .collect::<Option<Vec<_>>>()?;
    let tmin = (0..rank)
        .map(|c| grading.functional_value(grading.twist(c)))
        .min()?;
    let band = grading.max_variable_weight();
    let mut total = 0u64;
    let mut zero_run = 0i64;
    let mut level = tmin;
    loop {
        if level - tmin > level_budget {
            return None;
        }
        // slice bases of F at this functional level, grouped by multidegree
        let mut slices: std::collections::BTreeMap<Degree, Vec<(Monomial, usize)>> =
            std::collections::BTreeMap::new();
        for c in 0..rank {
            let want = level - grading.functional_value(grading.twist(c));
            if want < 0 {
                continue;
            }
            for m in crate::grading::monomials_of_functional_level(grading, want) {
                let deg = grading.term_degree(&m, c);
                slices.entry(deg).or_default().push((m, c));
            }
        }
        let mut level_dim = 0u64;
        for (deg, slice) in &slices {
            let mut pos: HashMap<(Vec<u32>, usize), usize> = HashMap::new();
            for (i, (m, c)) in slice.iter().enumerate() {
                pos.insert((m.exponents().to_vec(), *c), i);
            }
            // span of K in this slice: monomial multiples of the generators
            let mut rows: Vec<Vec<u64>> = Vec::new();
            for (g, gdeg) in generators.iter().zip(&gen_degrees) {
                let shift: Degree = crate::grading::degree_sub(deg, gdeg);
                for m in crate::grading::monomials_of_degree(grading, &shift) {
                    let mut row = vec![0u64; slice.len()];
                    for t in g.terms() {
                        let target = t.monomial.mul(&m).ok()?;
                        let j = pos[&(target.exponents().to_vec(), t.component)];
                        row[j] = field.add(row[j], t.coeff);
                    }
                    rows.push(row);
                }
            }
            let dim_f = slice.len();
            let rk = if rows.is_empty() {
                0
            } else {
                let mut mat = Mat::zeros(rows.len(), dim_f);
                for (r, row) in rows.iter().enumerate() {
                    for (c, &v) in row.iter().enumerate() {
                        mat.set(r, c, v);
                    }
                }
                mat.rank(field)
            };
            level_dim += (dim_f - rk) as u64;
        }
        total += level_dim;
        if level_dim == 0 {
            zero_run += 1;
            if zero_run >= band {
                return Some(total);
            }
        } else {
            zero_run = 0;
        }
        level += 1;
    }
}
