//! Brute-force references for unit tests. Everything here sweeps all `2^n`
//! subsets directly and shares no code path with the library algorithms.

use crate::complex::{SimplicialComplex, SquareFreeIdeal};
use crate::subset::Subset;

pub fn set(v: &[usize]) -> Subset {
    Subset::from_indices(v.iter().copied())
}

fn all_subsets(n: usize) -> impl Iterator<Item = Subset> {
    (0..(1u64 << n)).map(Subset::from_word)
}

/// Subsets containing no generator.
pub fn brute_faces(ideal: &SquareFreeIdeal) -> Vec<Subset> {
    all_subsets(ideal.n())
        .filter(|s| {
            !ideal
                .generators()
                .iter()
                .any(|g| g.iter().all(|v| s.contains(v)))
        })
        .collect()
}

/// Minimal subsets lying in no facet.
pub fn brute_minimal_nonfaces(complex: &SimplicialComplex) -> Vec<Subset> {
    let n = complex.n();
    let in_complex = |s: &Subset| {
        complex
            .facets()
            .iter()
            .any(|f| s.iter().all(|v| f.contains(v)))
    };
    let mut out: Vec<Subset> = all_subsets(n)
        .filter(|s| !in_complex(s) && s.iter().all(|v| in_complex(&s.without(v))))
        .collect();
    out.sort();
    out
}

/// Inclusion-minimal subsets of `{0..n-1}` meeting every edge, sorted by (size, lex).
pub fn brute_minimal_covers(edges: &[Subset], n: usize) -> Vec<Subset> {
    let covers = |s: &Subset| edges.iter().all(|e| e.iter().any(|v| s.contains(v)));
    let mut out: Vec<Subset> = all_subsets(n)
        .filter(|s| covers(s) && s.iter().all(|v| !covers(&s.without(v))))
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}
