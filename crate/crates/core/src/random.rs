//! Seeded random graded submodules for verification sweeps.
//!
//! A recipe fixes pure-power caps x_i^{a_i} (included in every component, so
//! finite colength is automatic) plus a number of extra homogeneous
//! generators. Each extra generator picks a random target degree by sampling
//! a monomial inside the cap box, then draws uniform GF(p) coefficients on
//! the full basis of that degree slice of F. Identical seeds give identical
//! submodules.

use crate::element::{FreeElement, ModuleTerm};
use crate::field::PrimeField;
use crate::grading::{degree_add, degree_sub, monomials_of_degree, Grading};
use crate::groebner::GroebnerConfig;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::submodule::{Colength, GradedSubmodule};
use crate::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone)]
pub struct RandomRecipe {
    /// Pure-power caps: `x_i^caps[i]` goes into every component.
    pub caps: Vec<u32>,
    pub extra_generators: usize,
    /// Accept only colengths in this range, resampling otherwise.
    pub min_colength: u64,
    pub max_colength: Option<u64>,
    pub retries: u32,
}

impl RandomRecipe {
    pub fn new(caps: Vec<u32>, extra_generators: usize) -> Self {
        RandomRecipe {
            caps,
            extra_generators,
            min_colength: 1,
            max_colength: None,
            retries: 32,
        }
    }

    pub fn with_colength_range(mut self, min: u64, max: Option<u64>) -> Self {
        self.min_colength = min;
        self.max_colength = max;
        self
    }

    /// A cap box adapted to (n, r, d): starts at 2 per variable and grows
    /// until the box alone reaches colength d.
    pub fn for_target(n: usize, r: usize, d: u64) -> Self {
        let mut caps = vec![2u32; n];
        let mut i = 0;
        while caps.iter().map(|&c| c as u64).product::<u64>() * (r as u64) < d {
            caps[i % n] += 1;
            i += 1;
        }
        RandomRecipe::new(caps, 1 + r).with_colength_range(1, Some(d))
    }
}

pub fn random_graded_submodule(
    seed: u64,
    grading: &Grading,
    field: &PrimeField,
    cfg: &GroebnerConfig,
    recipe: &RandomRecipe,
) -> Result<GradedSubmodule> {
    let nvars = grading.nvars();
    let rank = grading.rank();
    if recipe.caps.len() != nvars {
        return Err(Error::DimensionMismatch("cap vector length != nvars".into()));
    }
    let order = MonomialOrder::degree_refined(grading);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..recipe.retries {
        let mut gens: Vec<FreeElement> = Vec::new();
        for comp in 0..rank {
            for (v, &cap) in recipe.caps.iter().enumerate() {
                let mut e = vec![0u32; nvars];
                e[v] = cap;
                gens.push(FreeElement::term(1, Monomial::new(e), comp));
            }
        }
        for _ in 0..recipe.extra_generators {
            let exps: Vec<u32> = recipe
                .caps
                .iter()
                .map(|&c| rng.gen_range(0..c.max(1)))
                .collect();
            let comp = rng.gen_range(0..rank);
            let target = degree_add(&grading.monomial_degree(&Monomial::new(exps)), grading.twist(comp));
            let mut terms = Vec::new();
            for c in 0..rank {
                let mdeg = degree_sub(&target, grading.twist(c));
                for m in monomials_of_degree(grading, &mdeg) {
                    let coeff = rng.gen_range(0..field.characteristic());
                    if coeff != 0 {
                        terms.push(ModuleTerm { coeff, monomial: m, component: c });
                    }
                }
            }
            let g = FreeElement::from_terms(terms, field, &order);
            if !g.is_zero() {
                gens.push(g);
            }
        }
        let k = GradedSubmodule::new(grading.clone(), gens, order.clone(), field, cfg)?;
        match k.colength() {
            Colength::Finite(d)
                if d >= recipe.min_colength
                    && recipe.max_colength.map_or(true, |m| d <= m) =>
            {
                return Ok(k);
            }
            _ => continue,
        }
    }
    Err(Error::RetryBudget(recipe.retries))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup() -> (PrimeField, GroebnerConfig) {
        (PrimeField::new(32003).unwrap(), GroebnerConfig::default())
    }

    #[test]
    fn caps_only_recipe_is_a_complete_intersection_box() {
        let (f, cfg) = setup();
        let g = Grading::standard(3, 1);
        let recipe = RandomRecipe::new(vec![2, 3, 2], 0);
        let k = random_graded_submodule(11, &g, &f, &cfg, &recipe).unwrap();
        assert_eq!(k.colength(), Colength::Finite(12));
    }

    #[test]
    fn identical_seeds_identical_output() {
        let (f, cfg) = setup();
        let g = Grading::standard(3, 2);
        let recipe = RandomRecipe::for_target(3, 2, 10);
        let a = random_graded_submodule(7, &g, &f, &cfg, &recipe).unwrap();
        let b = random_graded_submodule(7, &g, &f, &cfg, &recipe).unwrap();
        assert_eq!(a.generators(), b.generators());
        assert_eq!(a.groebner_basis(), b.groebner_basis());
        let c = random_graded_submodule(8, &g, &f, &cfg, &recipe).unwrap();
        assert!(a.generators() != c.generators());
    }

    #[test]
    fn finite_colength_certified_and_bounded() {
        let (f, cfg) = setup();
        let g = Grading::standard(3, 1);
        let recipe = RandomRecipe::for_target(3, 1, 8);
        for seed in 0..20 {
            let k = random_graded_submodule(seed, &g, &f, &cfg, &recipe).unwrap();
            let d = k.colength().finite().unwrap();
            assert!(d >= 1 && d <= 8, "colength {d} out of range");
        }
    }

    #[test]
    fn nonstandard_gradings_supported() {
        let (f, cfg) = setup();
        for g in [
            Grading::weighted(3, 1, vec![4, 5, 6]).unwrap(),
            Grading::from_matrix(3, 1, vec![vec![1, 0, 0], vec![0, 1, 1]], vec![vec![0, 0]]).unwrap(),
        ] {
            let recipe = RandomRecipe::new(vec![2, 2, 2], 2);
            let k = random_graded_submodule(3, &g, &f, &cfg, &recipe).unwrap();
            for gen in k.generators() {
                assert!(gen.homogeneous_degree(k.grading()).is_ok());
            }
        }
    }
}
