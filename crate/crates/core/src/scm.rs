//! Depth, projective dimension and sequential Cohen-Macaulayness of
//! `R/I` for square-free `I`, read off the Stanley-Reisner complex `Δ = N(I)`:
//!
//! * `depth R/I = 1 + max{ i : Δ^i is Cohen-Macaulay }` (Fröberg),
//! * `pd R/I = n - depth R/I` (Auslander-Buchsbaum),
//! * `R/I` is sequentially Cohen-Macaulay iff every pure skeleton `Δ_i` is
//!   Cohen-Macaulay (Duval).
//!
//! [`verify_main_theorem`] checks the resulting numbers against the big
//! height: `depth ≤ n - d` and `pd ≥ d` always, with equality when `R/I` is
//! sequentially Cohen-Macaulay.

use serde::{Deserialize, Serialize};

use crate::complex::{SimplicialComplex, SquareFreeIdeal};
use crate::covers::minimal_primes;
use crate::error::Result;
use crate::homology::{is_cohen_macaulay, link_betti_numbers, BettiVector, PrimeField};
use crate::oracle;

/// Cohen-Macaulayness of every skeleton: entry `k` is for `Δ^{k-1}`, so the
/// first entry (the irrelevant complex) is always `true`.
pub fn skeleton_cm_profile(ideal: &SquareFreeIdeal, field: PrimeField) -> Result<Vec<bool>> {
    complex_skeleton_profile(&ideal.stanley_reisner_complex(), field)
}

/// The same profile, built by running Reisner's test on each skeleton
/// separately. Slower; kept as a cross-check.
pub fn skeleton_cm_profile_direct(ideal: &SquareFreeIdeal, field: PrimeField) -> Result<Vec<bool>> {
    let delta = ideal.stanley_reisner_complex();
    let dim = delta.dimension()?;
    (-1..=dim)
        .map(|i| is_cohen_macaulay(&delta.skeleton(i)?, field))
        .collect()
}

/// Smallest `i` with `b̃_i ≠ 0`, if any.
fn first_homology(b: &BettiVector) -> Option<isize> {
    b.iter().find(|&(_, v)| v != 0).map(|(i, _)| i)
}

/// `lk_{Δ^i} F` is the `(i - |F|)`-skeleton of `lk_Δ F`, and a skeleton has
/// the homology of the whole complex below its top degree. So `Δ^i` is CM
/// iff it is pure and every face `F` with `|F| ≤ i` has `b̃_j(lk F) = 0`
/// for `j < i - |F|`. Each link is computed once; every `i` is evaluated.
fn complex_skeleton_profile(delta: &SimplicialComplex, field: PrimeField) -> Result<Vec<bool>> {
    let dim = delta.dimension()?;
    let min_facet_dim = delta.facets().iter().map(|f| f.dim()).min().unwrap_or(-1);
    let links = link_betti_numbers(delta, field)?;
    let bounds: Vec<(isize, Option<isize>)> = links
        .iter()
        .map(|(f, b)| (f.len() as isize, first_homology(b)))
        .collect();
    Ok((-1..=dim)
        .map(|i| {
            // Δ^i is pure exactly when no facet is smaller than dimension i.
            i <= min_facet_dim
                && bounds
                    .iter()
                    .filter(|(size, _)| *size <= i)
                    .all(|&(size, first)| first.is_none_or(|e| size + e >= i))
        })
        .collect())
}

fn depth_from_profile(profile: &[bool]) -> usize {
    // Entry `k` is the skeleton of dimension k - 1, so depth = k. All
    // entries are computed; CM-ness is not assumed monotone in i.
    profile.iter().rposition(|&cm| cm).unwrap_or(0)
}

pub fn depth(ideal: &SquareFreeIdeal, field: PrimeField) -> Result<usize> {
    Ok(depth_from_profile(&skeleton_cm_profile(ideal, field)?))
}

pub fn projective_dimension(ideal: &SquareFreeIdeal, field: PrimeField) -> Result<usize> {
    Ok(ideal.n() - depth(ideal, field)?)
}

/// Whether `R/I` is Cohen-Macaulay, i.e. `Δ` satisfies Reisner's criterion.
pub fn is_cm(ideal: &SquareFreeIdeal, field: PrimeField) -> Result<bool> {
    is_cohen_macaulay(&ideal.stanley_reisner_complex(), field)
}

/// Duval's test given the skeleton profile. For `i` up to the smallest
/// facet dimension the pure skeleton `Δ_i` equals `Δ^i`, so only the
/// larger `i` need their own Reisner check. A pure `Δ` is its own top pure
/// skeleton, so it is sequentially CM iff it is CM.
fn scm_of(delta: &SimplicialComplex, field: PrimeField, profile: &[bool]) -> Result<bool> {
    let dim = delta.dimension()?;
    let min_facet_dim = delta.facets().iter().map(|f| f.dim()).min().unwrap_or(-1);
    // Δ_{-1} = {∅} has R/N({∅}) = k, which is always CM.
    for i in 0..=dim {
        let cm = if i <= min_facet_dim {
            profile[(i + 1) as usize]
        } else {
            is_cohen_macaulay(&delta.pure_skeleton(i)?, field)?
        };
        if !cm {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_sequentially_cm(ideal: &SquareFreeIdeal, field: PrimeField) -> Result<bool> {
    let delta = ideal.stanley_reisner_complex();
    let profile = complex_skeleton_profile(&delta, field)?;
    scm_of(&delta, field, &profile)
}

/// Duval's test run literally: Reisner's criterion on every pure skeleton.
pub fn is_sequentially_cm_direct(ideal: &SquareFreeIdeal, field: PrimeField) -> Result<bool> {
    let delta = ideal.stanley_reisner_complex();
    for i in 0..=delta.dimension()? {
        if !is_cohen_macaulay(&delta.pure_skeleton(i)?, field)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every invariant of one ideal together with the theorem checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub n: usize,
    pub d_min: usize,
    pub d_max: usize,
    /// Krull dimension `n - d_min`.
    pub dim: usize,
    pub depth: usize,
    pub pd: usize,
    pub pd_oracle: Option<usize>,
    pub is_cm: bool,
    pub is_scm: bool,
    pub field_p: u32,
    /// `depth ≤ n - d_max`
    pub inequality_depth_ok: bool,
    /// `pd ≥ d_max`
    pub inequality_pd_ok: bool,
    /// `is_scm ⟹ pd = d_max`
    pub theorem_equality_ok: bool,
    pub oracle_agrees: Option<bool>,
}

impl VerificationReport {
    /// True when every check that was run holds.
    pub fn all_ok(&self) -> bool {
        self.inequality_depth_ok
            && self.inequality_pd_ok
            && self.theorem_equality_ok
            && self.oracle_agrees.unwrap_or(true)
    }
}

/// Computes every report field. With `oracle_cap = Some(cap)` the Hochster
/// oracle also runs (failing with `TooLarge` when `n > cap`).
pub fn verify_main_theorem(
    ideal: &SquareFreeIdeal,
    field: PrimeField,
    oracle_cap: Option<usize>,
) -> Result<VerificationReport> {
    let n = ideal.n();
    let primes = minimal_primes(ideal);
    let delta = ideal.stanley_reisner_complex();
    let profile = complex_skeleton_profile(&delta, field)?;
    let depth = depth_from_profile(&profile);
    let pd = n - depth;
    // Δ^dim = Δ.
    let is_cm = *profile.last().expect("profile covers -1..=dim");
    let is_scm = scm_of(&delta, field, &profile)?;
    let pd_oracle = match oracle_cap {
        Some(cap) => Some(oracle::pd_oracle(ideal, field, cap)?),
        None => None,
    };
    let (d_min, d_max) = (primes.d_min, primes.d_max);
    let report = VerificationReport {
        n,
        d_min,
        d_max,
        dim: n - d_min,
        depth,
        pd,
        pd_oracle,
        is_cm,
        is_scm,
        field_p: field.p(),
        inequality_depth_ok: depth + d_max <= n,
        inequality_pd_ok: pd >= d_max,
        theorem_equality_ok: !is_scm || pd == d_max,
        oracle_agrees: pd_oracle.map(|o| o == pd),
    };
    debug_assert!(report.depth <= report.dim && report.dim <= n);
    Ok(report)
}
