//! Minimal vertex covers and the minimal primes of square-free ideals.
//!
//! For a square-free monomial ideal `I`, the minimal primes are generated by
//! the minimal vertex covers (hypergraph transversals) of the facet complex
//! `F(I)`. Heights are cover sizes, so the big height is the size of the
//! largest minimal cover and `dim R/I = n - (size of the smallest)`.

use crate::complex::{SimplicialComplex, SquareFreeIdeal};
use crate::error::{Error, Result};
use crate::subset::{sort_by_size, Subset};

/// All inclusion-minimal sets meeting every edge, sorted by (size, lex).
///
/// An empty edge admits no transversal and yields an empty list; no edges at
/// all yields the single transversal `∅`.
pub fn minimal_transversals(edges: &[Subset]) -> Vec<Subset> {
    if edges.iter().any(Subset::is_empty) {
        return Vec::new();
    }
    let mut out = Vec::new();
    branch(edges, &Subset::new(), &Subset::new(), &mut out);
    sort_by_size(&mut out);
    out.dedup();
    out
}

fn branch(edges: &[Subset], chosen: &Subset, forbidden: &Subset, out: &mut Vec<Subset>) {
    // Every chosen vertex must keep a private edge, or no superset is minimal.
    let has_private = |v: usize| {
        edges
            .iter()
            .any(|e| e.contains(v) && e.intersection(chosen).len() == 1)
    };
    if !chosen.iter().all(has_private) {
        return;
    }
    let Some(open) = edges.iter().find(|e| !e.intersects(chosen)) else {
        out.push(chosen.clone());
        return;
    };
    if edges
        .iter()
        .any(|e| !e.intersects(chosen) && e.is_subset(forbidden))
    {
        return;
    }
    // Branch on the first vertex of `open` a minimal cover could use; earlier
    // candidates are excluded in later branches so each cover is reached once.
    let mut excluded = forbidden.clone();
    for v in open.difference(forbidden).iter() {
        branch(edges, &chosen.with(v), &excluded, out);
        excluded.insert(v);
    }
}

/// Minimal vertex covers of the facets of `complex`.
pub fn minimal_vertex_covers(complex: &SimplicialComplex) -> Result<Vec<Subset>> {
    if complex.is_void() || complex.is_irrelevant() {
        return Err(Error::VoidOrIrrelevant);
    }
    Ok(minimal_transversals(complex.facets()))
}

/// Minimal primes of a square-free ideal with their heights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimaryDecomposition {
    /// Generator sets of the minimal primes, sorted by (height, lex).
    pub primes: Vec<Subset>,
    /// Heights, ascending, one per prime.
    pub heights: Vec<usize>,
    pub d_min: usize,
    pub d_max: usize,
}

impl PrimaryDecomposition {
    /// The distinct heights `d_1 < d_2 < ... < d_s`.
    pub fn distinct_heights(&self) -> Vec<usize> {
        let mut h = self.heights.clone();
        h.dedup();
        h
    }
}

pub fn minimal_primes(ideal: &SquareFreeIdeal) -> PrimaryDecomposition {
    let primes = minimal_transversals(ideal.generators());
    let heights: Vec<usize> = primes.iter().map(Subset::len).collect();
    // A proper nonzero ideal always has at least one minimal prime.
    let d_min = heights.first().copied().unwrap_or(0);
    let d_max = heights.last().copied().unwrap_or(0);
    PrimaryDecomposition {
        primes,
        heights,
        d_min,
        d_max,
    }
}

/// Maximal height of a minimal prime.
pub fn big_height(ideal: &SquareFreeIdeal) -> usize {
    minimal_primes(ideal).d_max
}

/// `dim R/I = n - d_min`.
pub fn krull_dimension(ideal: &SquareFreeIdeal) -> usize {
    ideal.n() - minimal_primes(ideal).d_min
}
