//! Presentations G_1 -> G_0 ->> K by Schreyer syzygies of a Gröbner basis.
//!
//! Hom(K, M) is computed downstream as the kernel of
//! Hom(G_0, M) -> Hom(G_1, M); for that the syzygy columns must generate the
//! full first syzygy module of the chosen generators, which Schreyer's
//! theorem guarantees. The emitted set is the minimal Gröbner basis of the
//! syzygy module under the induced order, and every column is certified by
//! applying it back to the generators.

use crate::element::FreeElement;
use crate::field::PrimeField;
use crate::grading::{Degree, Grading};
use crate::groebner::{apply_combination, schreyer_syzygies, GroebnerConfig};
use crate::monomial::Monomial;
use crate::order::{MonomialOrder, SchreyerOrder};
use crate::submodule::{GradedSubmodule, MonomialSubmodule};
use crate::Result;

#[derive(Debug, Clone)]
pub struct Presentation {
    /// Generators of K, elements of F.
    pub gens: Vec<FreeElement>,
    /// Syzygies among the generators, elements of the free module on them.
    pub syzygies: Vec<FreeElement>,
    /// Multidegrees when a grading applies.
    pub gen_degrees: Option<Vec<Degree>>,
    pub syz_degrees: Option<Vec<Degree>>,
}

use crate::groebner::minimal_gb;

fn presentation_from_gb(
    gb_in: &[FreeElement],
    ambient_order: &MonomialOrder,
    grading: Option<&Grading>,
    field: &PrimeField,
    cfg: &GroebnerConfig,
) -> Result<Presentation> {
    let gb = crate::groebner::schreyer_sort(gb_in.to_vec());
    let gb = &gb[..];
    let leads: Vec<(Monomial, usize)> = gb
        .iter()
        .map(|g| {
            let lt = g.leading_term().unwrap();
            (lt.monomial.clone(), lt.component)
        })
        .collect();
    let syz_order = SchreyerOrder::new(leads, Box::new(ambient_order.clone()));
    let raw = schreyer_syzygies(gb, &syz_order, field, cfg)?;
    let syzygies = minimal_gb(raw, &syz_order);
    for s in &syzygies {
        assert!(
            apply_combination(s, gb, ambient_order, field)?.is_zero(),
            "presentation column is not a syzygy"
        );
    }
    let (gen_degrees, syz_degrees) = match grading {
        None => (None, None),
        Some(g) => {
            let gd: Vec<Degree> = gb
                .iter()
                .map(|e| e.homogeneous_degree(g).map(|d| d.expect("nonzero generator")))
                .collect::<Result<_>>()?;
            let sd: Vec<Degree> = syzygies
                .iter()
                .map(|s| {
                    let t = s.leading_term().unwrap();
                    Ok(crate::grading::degree_add(&g.monomial_degree(&t.monomial), &gd[t.component]))
                })
                .collect::<Result<_>>()?;
            // every term of a syzygy must agree with its leading degree
            for (s, want) in syzygies.iter().zip(&sd) {
                for t in s.terms() {
                    let got = crate::grading::degree_add(&g.monomial_degree(&t.monomial), &gd[t.component]);
                    assert_eq!(&got, want, "syzygy is not homogeneous");
                }
            }
            (Some(gd), Some(sd))
        }
    };
    Ok(Presentation { gens: gb.to_vec(), syzygies, gen_degrees, syz_degrees })
}

/// Presentation of a graded submodule, generated by its Gröbner basis.
pub fn presentation_graded(k: &GradedSubmodule, field: &PrimeField, cfg: &GroebnerConfig) -> Result<Presentation> {
    presentation_from_gb(k.groebner_basis(), k.order(), Some(k.grading()), field, cfg)
}

/// Presentation of a monomial submodule by its minimal generators; the
/// syzygies are the divided-power (Taylor) pairs, minimalized.
pub fn presentation_monomial(
    k: &MonomialSubmodule,
    grading: &Grading,
    field: &PrimeField,
    cfg: &GroebnerConfig,
) -> Result<Presentation> {
    let order = MonomialOrder::degree_refined(grading);
    presentation_from_gb(&k.as_free_elements(), &order, Some(grading), field, cfg)
}
