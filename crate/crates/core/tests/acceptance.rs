//! Acceptance suite: one test per criterion, each printing a PASS line.
//!
//! Every tolerance is exact: set equality for spectra, zero exceptions for
//! parity sweeps, entrywise equality for tables.

use quotlab::enumeration::{
    count_order_ideals, count_submodules, enumerate_monomial_ideals, enumerate_monomial_submodules,
};
use quotlab::ext::{ext_table_from_resolution, tangent_via_ext};
use quotlab::field::PrimeField;
use quotlab::grading::Grading;
use quotlab::groebner::GroebnerConfig;
use quotlab::hom::{hom_graded, hom_monomial};
use quotlab::parity::{
    cancellation_table, check_duality, check_parity_graded, check_parity_monomial,
    semicontinuity_check, spectrum,
};
use quotlab::presentation::presentation_graded;
use quotlab::random::{random_graded_submodule, RandomRecipe};
use quotlab::resolution::resolve_quotient;
use quotlab::submodule::QuotientModule;
use rayon::prelude::*;

fn field() -> PrimeField {
    PrimeField::new(32003).unwrap()
}

fn cfg() -> GroebnerConfig {
    GroebnerConfig::default()
}

#[test]
fn criterion_01_spectrum_hilb10_a4() {
    let s = spectrum(4, 1, 10).unwrap();
    let expected: Vec<u64> = vec![
        40, 41, 46, 48, 49, 50, 51, 52, 53, 55, 56, 57, 60, 61, 65, 66, 69, 70, 76, 80,
    ];
    assert_eq!(s.distinct(), expected, "criterion 1 distinct-dimension set");
    // the two independent enumeration strategies agree at full size
    assert_eq!(s.total, 3122);
    assert_eq!(
        quotlab::enumeration::enumerate_order_ideals_by_slices(4, 10).len(),
        3122
    );
    println!("CRITERION 1 (spectrum Hilb^10(A^4), 20 distinct values): PASS");
}

#[test]
fn criterion_02_spectrum_hilb10_a5() {
    let s = spectrum(5, 1, 10).unwrap();
    let expected: Vec<u64> = vec![
        50, 51, 56, 58, 59, 60, 61, 62, 63, 65, 66, 67, 68, 70, 71, 73, 75, 76, 78, 79, 80, 81,
        82, 83, 85, 86, 90, 95, 98, 101, 104,
    ];
    assert_eq!(s.distinct(), expected, "criterion 2 distinct-dimension set");
    assert_eq!(s.total, 13220);
    assert_eq!(
        quotlab::enumeration::enumerate_order_ideals_by_slices(5, 10).len(),
        13220
    );
    println!("CRITERION 2 (spectrum Hilb^10(A^5), 31 distinct values): PASS");
}

#[test]
fn criterion_03_spectrum_quot20_a2_rank2() {
    let s = spectrum(2, 2, 20).unwrap();
    let mut expected: Vec<u64> = vec![60];
    expected.extend(62..=80);
    assert_eq!(s.distinct(), expected, "criterion 3 distinct-dimension set");
    // total point count matches the convolution oracle
    assert_eq!(s.total, count_submodules(2, 2, 20).unwrap());
    assert_eq!(s.total, 24842);
    println!("CRITERION 3 (spectrum Quot^20 of A^2 rank 2): PASS");
}

#[test]
fn criterion_04_monomial_parity_three_vars() {
    let mut checked = 0u64;
    for d in 0..=12u64 {
        let exceptions: Vec<String> = enumerate_monomial_ideals(3, d)
            .items()
            .par_iter()
            .filter_map(|k| {
                let r = check_parity_monomial(k).unwrap();
                (!r.parity_ok).then(|| r.input)
            })
            .collect();
        assert!(exceptions.is_empty(), "parity exceptions at d = {d}: {exceptions:?}");
        checked += enumerate_monomial_ideals(3, d).len() as u64;
    }
    assert!(checked >= 1000, "sweep too small: {checked}");
    println!("CRITERION 4 (monomial parity, 3 vars, d <= 12, {checked} ideals): PASS");
}

fn z2_grading(rank: usize) -> Grading {
    Grading::from_matrix(
        3,
        rank,
        vec![vec![1, 0, 0], vec![0, 1, 1]],
        vec![vec![0, 0]; rank],
    )
    .unwrap()
}

fn criterion5_inputs(grading_of: &(dyn Fn(usize) -> Grading + Sync), seed_base: u64) -> Vec<quotlab::submodule::GradedSubmodule> {
    let f = field();
    let c = cfg();
    (0..500u64)
        .into_par_iter()
        .map(|t| {
            let rank = [1usize, 2, 3][(t % 3) as usize];
            let grading = grading_of(rank);
            let recipe = RandomRecipe::for_target(3, rank, 12);
            random_graded_submodule(seed_base.wrapping_add(t), &grading, &f, &c, &recipe).unwrap()
        })
        .collect()
}

#[test]
fn criterion_05_graded_parity_three_gradings() {
    let f = field();
    let c = cfg();
    let gradings: Vec<(&str, Box<dyn Fn(usize) -> Grading + Sync>, u64)> = vec![
        ("standard", Box::new(|r| Grading::standard(3, r)), 1000),
        ("weights 4 5 6", Box::new(|r| Grading::weighted(3, r, vec![4, 5, 6]).unwrap()), 2000),
        ("Z^2", Box::new(|r| z2_grading(r)), 3000),
    ];
    for (name, grading_of, seed_base) in &gradings {
        let inputs = criterion5_inputs(grading_of.as_ref(), *seed_base);
        let failures: Vec<String> = inputs
            .par_iter()
            .filter_map(|k| {
                let rep = check_parity_graded(k, &f, &c).unwrap();
                assert!(rep.colength <= 12 && rep.colength >= 1);
                (!rep.parity_ok).then(|| rep.input)
            })
            .collect();
        assert!(failures.is_empty(), "graded parity failed under {name}: {failures:?}");
        println!("CRITERION 5 (graded parity, 500 seeded submodules, {name} grading): PASS");
    }
}

#[test]
fn criterion_06_smooth_surface_control() {
    for d in 0..=15u64 {
        let bad: Vec<String> = enumerate_monomial_ideals(2, d)
            .items()
            .par_iter()
            .filter_map(|k| {
                let r = check_parity_monomial(k).unwrap();
                (r.dim != 2 * d).then(|| format!("{} -> {}", r.input, r.dim))
            })
            .collect();
        assert!(bad.is_empty(), "non-smooth dimension at d = {d}: {bad:?}");
    }
    println!("CRITERION 6 (surface case: tangent dimension exactly 2d, d <= 15): PASS");
}

fn criterion7_pairs() -> Vec<(QuotientModule, QuotientModule)> {
    let f = field();
    let c = cfg();
    (0..100u64)
        .into_par_iter()
        .map(|t| {
            let n = if t % 2 == 0 { 2 } else { 3 };
            let grading = Grading::standard(n, 1);
            let recipe = RandomRecipe::for_target(n, 1, 8);
            let a = random_graded_submodule(5000 + 2 * t, &grading, &f, &c, &recipe).unwrap();
            let b = random_graded_submodule(5001 + 2 * t, &grading, &f, &c, &recipe).unwrap();
            (
                QuotientModule::from_graded(&a, &f, &c).unwrap(),
                QuotientModule::from_graded(&b, &f, &c).unwrap(),
            )
        })
        .collect()
}

#[test]
fn criterion_07_duality_random_pairs() {
    let c = cfg();
    let pairs = criterion7_pairs();
    let failures: usize = pairs
        .par_iter()
        .map(|(m, n)| {
            let rep = check_duality(m, n, &c).unwrap();
            usize::from(!rep.ok)
        })
        .sum();
    assert_eq!(failures, 0, "duality failures on random pairs");
    println!("CRITERION 7 (Ext duality on 100 seeded pairs, n in {{2,3}}): PASS");
}

#[test]
fn criterion_08_euler_characteristic_vanishes() {
    let f = field();
    let c = cfg();
    // every pair from criterion 7
    let pairs = criterion7_pairs();
    let bad: usize = pairs
        .par_iter()
        .map(|(m, n)| {
            let t = quotlab::ext::ext_table(m, n, &c).unwrap();
            usize::from(t.euler_characteristic() != 0)
        })
        .sum();
    assert_eq!(bad, 0, "nonzero Euler characteristic on a random pair");
    // full monomial pair sweep, n = 3, colengths <= 6
    let grading = Grading::standard(3, 1);
    let ideals: Vec<_> = (0..=6u64)
        .flat_map(|d| enumerate_monomial_ideals(3, d).items().to_vec())
        .collect();
    let quotients: Vec<QuotientModule> = ideals
        .par_iter()
        .map(|k| QuotientModule::from_monomial(k, &grading, &f).unwrap())
        .collect();
    let resolutions: Vec<_> = quotients
        .par_iter()
        .map(|m| resolve_quotient(m, true, &c).unwrap())
        .collect();
    let bad_pairs: usize = (0..quotients.len())
        .into_par_iter()
        .map(|i| {
            let mut bad = 0usize;
            for j in 0..quotients.len() {
                let t = ext_table_from_resolution(&resolutions[i], &quotients[j], &f).unwrap();
                if t.euler_characteristic() != 0 {
                    bad += 1;
                }
            }
            bad
        })
        .sum();
    assert_eq!(bad_pairs, 0, "nonzero Euler characteristic in the monomial sweep");
    println!(
        "CRITERION 8 (Euler characteristic zero: 100 pairs + {}^2 monomial pairs): PASS",
        quotients.len()
    );
}

#[test]
fn criterion_09_cancellation_ledger() {
    let f = field();
    let c = cfg();
    let grading = Grading::standard(3, 1);
    let sigma = vec![3i64];
    let failures: Vec<u64> = (0..100u64)
        .into_par_iter()
        .filter_map(|t| {
            let recipe = RandomRecipe::for_target(3, 1, 10);
            let k = random_graded_submodule(9000 + t, &grading, &f, &c, &recipe).unwrap();
            let table = cancellation_table(&k, &f, &c).unwrap();
            let semi = semicontinuity_check(&k, &f, &c).unwrap();
            let ok = table.nonnegative
                && table.boundary_ok
                && table.reconstructs_tables()
                && table.symmetric_under(&sigma)
                && semi.gap == semi.delta1_sum
                && semi.gap_even
                && semi.gap >= 0;
            (!ok).then_some(t)
        })
        .collect();
    assert!(failures.is_empty(), "cancellation ledger failed at trials {failures:?}");
    println!("CRITERION 9 (cancellation ledger on 100 seeded graded ideals): PASS");
}

#[test]
fn criterion_10_two_path_equality() {
    let f = field();
    let c = cfg();
    // every monomial input of criterion 4
    let grading = Grading::standard(3, 1);
    let mut checked = 0u64;
    for d in 0..=12u64 {
        let items = enumerate_monomial_ideals(3, d).items().to_vec();
        let bad: usize = items
            .par_iter()
            .map(|k| {
                let via_hom = hom_monomial(k, k).unwrap();
                let m = QuotientModule::from_monomial(k, &grading, &f).unwrap();
                let via_ext = tangent_via_ext(&m, &c).unwrap();
                usize::from(via_hom != via_ext)
            })
            .sum();
        assert_eq!(bad, 0, "path disagreement at d = {d}");
        checked += items.len() as u64;
    }
    // every graded input family of criterion 5 (standard grading instance)
    let inputs = criterion5_inputs(&|r| Grading::standard(3, r), 1000);
    let bad: usize = inputs
        .par_iter()
        .map(|k| {
            let m = QuotientModule::from_graded(k, &f, &c).unwrap();
            let pres = presentation_graded(k, &f, &c).unwrap();
            let via_hom = hom_graded(&pres, &m, &f).unwrap();
            let via_ext = tangent_via_ext(&m, &c).unwrap();
            usize::from(via_hom != via_ext)
        })
        .sum();
    assert_eq!(bad, 0, "path disagreement on graded inputs");
    checked += inputs.len() as u64;
    println!("CRITERION 10 (hom(K,M) = ext^1 + rd - ext^0 on {checked} inputs): PASS");
}

#[test]
fn criterion_11_enumeration_counts() {
    for d in 0..=12u64 {
        assert_eq!(
            enumerate_monomial_ideals(2, d).len() as u64,
            count_order_ideals(2, d).unwrap(),
            "partition mismatch at d = {d}"
        );
        assert_eq!(
            enumerate_monomial_ideals(3, d).len() as u64,
            count_order_ideals(3, d).unwrap(),
            "plane partition mismatch at d = {d}"
        );
    }
    assert_eq!(count_order_ideals(3, 10).unwrap(), 500);
    // convolution identity for ranks
    for r in 1..=3usize {
        for d in 0..=8u64 {
            assert_eq!(
                enumerate_monomial_submodules(2, r, d).len() as u64,
                count_submodules(2, r, d).unwrap(),
                "rank-{r} convolution mismatch at n = 2, d = {d}"
            );
            assert_eq!(
                enumerate_monomial_submodules(3, r, d).len() as u64,
                count_submodules(3, r, d).unwrap(),
                "rank-{r} convolution mismatch at n = 3, d = {d}"
            );
        }
    }
    println!("CRITERION 11 (enumeration counts vs oracles, d <= 12): PASS");
}

#[test]
fn criterion_12_negative_controls() {
    let s4 = spectrum(4, 1, 10).unwrap();
    let d4 = s4.distinct();
    assert!(d4.contains(&40) && d4.contains(&41), "Hilb^10(A^4) must contain 40 and 41");
    let s2 = spectrum(2, 2, 20).unwrap();
    let d2 = s2.distinct();
    assert!(d2.contains(&62) && d2.contains(&63), "Quot^20(A^2) must contain 62 and 63");
    println!("CRITERION 12 (negative controls: both parities at n = 4 and rank 2 on A^2): PASS");
}
