//! Brute-force multigraded Betti numbers via Hochster's formula.
//!
//! `β_{i,σ}(R/I) = b̃_{|σ|-i-1}(Δ|_σ; k)` for every `σ ⊆ {x_1..x_n}`, where
//! `Δ = N(I)`. Sweeping all `2^n` subsets gives the full multigraded Betti
//! table and hence `pd(R/I)` without going through skeletons or depth. It is
//! the reference the combinatorial depth formula is checked against.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::complex::SquareFreeIdeal;
use crate::error::{Error, Result};
use crate::homology::{reduced_betti_numbers, PrimeField};
use crate::subset::Subset;

/// Default limit on the number of variables the oracle will sweep.
pub const DEFAULT_ORACLE_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, Subset), usize>,
    pd: usize,
    field_p: u32,
}

impl BettiTable {
    /// `β_{i,σ}`; zero when absent.
    pub fn get(&self, i: usize, sigma: &Subset) -> usize {
        self.entries.get(&(i, sigma.clone())).copied().unwrap_or(0)
    }

    /// Nonzero entries in `(i, σ)` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, &Subset, usize)> + '_ {
        self.entries.iter().map(|((i, s), &b)| (*i, s, b))
    }

    pub fn pd(&self) -> usize {
        self.pd
    }

    pub fn field_p(&self) -> u32 {
        self.field_p
    }

    /// Total Betti number `β_i = Σ_σ β_{i,σ}`.
    pub fn total(&self, i: usize) -> usize {
        self.entries
            .iter()
            .filter(|((j, _), _)| *j == i)
            .map(|(_, &b)| b)
            .sum()
    }
}

pub fn hochster_betti_table(
    ideal: &SquareFreeIdeal,
    field: PrimeField,
    cap: usize,
) -> Result<BettiTable> {
    let n = ideal.n();
    if n > cap || n >= 64 {
        return Err(Error::TooLarge { n, cap });
    }
    let delta = ideal.stanley_reisner_complex();
    let per_subset: Vec<Vec<((usize, Subset), usize)>> = (0..1u64 << n)
        .into_par_iter()
        .map(|word| {
            let sigma = Subset::from_word(word);
            // A nonempty face restricts to a full simplex, which is acyclic.
            if !sigma.is_empty() && delta.contains(&sigma) {
                return Vec::new();
            }
            let restricted = delta.restriction(&sigma);
            let betti = reduced_betti_numbers(&restricted, field)
                .expect("restrictions of a nonvoid complex are nonvoid");
            let size = sigma.len() as isize;
            betti
                .iter()
                .filter(|&(_, b)| b > 0)
                .map(|(j, b)| (((size - j - 1) as usize, sigma.clone()), b))
                .collect()
        })
        .collect();
    let entries: BTreeMap<(usize, Subset), usize> = per_subset.into_iter().flatten().collect();
    let pd = entries.keys().map(|(i, _)| *i).max().unwrap_or(0);
    Ok(BettiTable {
        entries,
        pd,
        field_p: field.p(),
    })
}

pub fn pd_oracle(ideal: &SquareFreeIdeal, field: PrimeField, cap: usize) -> Result<usize> {
    Ok(hochster_betti_table(ideal, field, cap)?.pd)
}

/// `n - pd` from the oracle table.
pub fn depth_oracle(ideal: &SquareFreeIdeal, field: PrimeField, cap: usize) -> Result<usize> {
    Ok(ideal.n() - pd_oracle(ideal, field, cap)?)
}
