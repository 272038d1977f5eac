//! Simplicial complexes, square-free monomial ideals, and the four
//! correspondences between them.
//!
//! Both [`SimplicialComplex`] and [`SquareFreeIdeal`] are antichains of
//! vertex subsets over a fixed, labelled variable universe. Variables that
//! occur in no facet (or no generator) stay in the universe; the ring
//! `k[x_1..x_n]` is fixed up front and `n` counts all of them.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::covers::minimal_transversals;
use crate::error::{Error, Result};
use crate::subset::{is_antichain, maximal_sets, minimal_sets, Face, Subset};

/// Ordered, labelled variable universe `x_1..x_n`, shared cheaply between values.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Variables {
    labels: Arc<[String]>,
}

impl Variables {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::NoVariables);
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if l.is_empty() || !seen.insert(l.as_str()) {
                return Err(Error::BadLabel(l.clone()));
            }
        }
        Ok(Self {
            labels: labels.into(),
        })
    }

    /// `x1, x2, ..., xn`.
    pub fn numbered(n: usize) -> Result<Self> {
        Self::new((1..=n).map(|i| format!("x{i}")))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Labels of the members of `s`, in index order.
    pub fn names(&self, s: &Subset) -> Vec<String> {
        s.iter().map(|i| self.labels[i].clone()).collect()
    }

    /// `x1*x2*x3`, or `1` for the empty set.
    pub fn monomial(&self, s: &Subset) -> String {
        if s.is_empty() {
            "1".to_string()
        } else {
            self.names(s).join("*")
        }
    }

    fn check(&self, sets: &[Subset]) -> Result<()> {
        let n = self.len();
        for s in sets {
            if let Some(index) = s.max_index().filter(|&m| m >= n) {
                return Err(Error::VertexOutOfRange { index, n });
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Variables {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.labels.iter()).finish()
    }
}

/// A simplicial complex given by its facets.
///
/// The void complex (no facets) and the irrelevant complex `{∅}` (a single
/// empty facet) are distinct values.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vars: Variables,
    facets: Vec<Face>,
}

impl SimplicialComplex {
    /// Builds a complex from an antichain of facets.
    pub fn new(vars: Variables, mut facets: Vec<Face>) -> Result<Self> {
        vars.check(&facets)?;
        if !is_antichain(&facets) {
            return Err(Error::NotAntichain);
        }
        facets.sort();
        Ok(Self { vars, facets })
    }

    /// Builds the complex generated by arbitrary faces, keeping the maximal ones.
    pub fn from_faces(vars: Variables, faces: Vec<Face>) -> Result<Self> {
        vars.check(&faces)?;
        Ok(Self::from_maximal(vars, maximal_sets(faces)))
    }

    fn from_maximal(vars: Variables, facets: Vec<Face>) -> Self {
        debug_assert!(is_antichain(&facets));
        debug_assert!(facets.windows(2).all(|w| w[0] < w[1]));
        Self { vars, facets }
    }

    pub fn void(vars: Variables) -> Self {
        Self {
            vars,
            facets: Vec::new(),
        }
    }

    pub fn irrelevant(vars: Variables) -> Self {
        Self {
            vars,
            facets: vec![Subset::new()],
        }
    }

    /// The full simplex on every variable.
    pub fn simplex(vars: Variables) -> Self {
        let n = vars.len();
        Self {
            vars,
            facets: vec![Subset::full(n)],
        }
    }

    pub fn vars(&self) -> &Variables {
        &self.vars
    }

    /// Number of variables in the universe (not only those in some facet).
    pub fn n(&self) -> usize {
        self.vars.len()
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_irrelevant(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].is_empty()
    }

    /// `face ∈ Δ` iff it lies in some facet.
    pub fn contains(&self, face: &Face) -> bool {
        self.facets.iter().any(|f| face.is_subset(f))
    }

    pub fn dimension(&self) -> Result<isize> {
        self.facets
            .iter()
            .map(Subset::dim)
            .max()
            .ok_or(Error::VoidComplex)
    }

    /// True when all facets have the same dimension. The void complex is pure.
    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// All faces of dimension `k`, sorted lexicographically.
    pub fn faces_of_dim(&self, k: isize) -> Vec<Face> {
        if k < -1 || self.is_void() {
            return Vec::new();
        }
        let size = (k + 1) as usize;
        let mut faces: HashSet<Face> = HashSet::new();
        for f in self.facets.iter().filter(|f| f.len() >= size) {
            if f.len() == size {
                faces.insert(f.clone());
            } else {
                faces.extend(f.subsets_of_size(size));
            }
        }
        let mut faces: Vec<Face> = faces.into_iter().collect();
        faces.sort();
        faces
    }

    /// Faces grouped by dimension: entry `j` holds the faces of dimension `j - 1`.
    pub fn faces_by_dim(&self) -> Vec<Vec<Face>> {
        match self.dimension() {
            Ok(d) => (-1..=d).map(|k| self.faces_of_dim(k)).collect(),
            Err(_) => Vec::new(),
        }
    }

    /// `f_{-1}, f_0, ..., f_d`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_dim().iter().map(Vec::len).collect()
    }

    fn check_range(&self, i: isize) -> Result<()> {
        let dim = self.dimension()?;
        if i < -1 || i > dim {
            return Err(Error::OutOfRange { i, dim });
        }
        Ok(())
    }

    /// The `i`-skeleton `Δ^i`: every face of dimension at most `i`.
    pub fn skeleton(&self, i: isize) -> Result<Self> {
        self.check_range(i)?;
        let size = (i + 1) as usize;
        let mut faces: HashSet<Face> = HashSet::new();
        for f in &self.facets {
            if f.len() <= size {
                faces.insert(f.clone());
            } else {
                faces.extend(f.subsets_of_size(size));
            }
        }
        Ok(Self::from_maximal(
            self.vars.clone(),
            maximal_sets(faces.into_iter().collect()),
        ))
    }

    /// The pure `i`-skeleton `Δ_i`, generated by the `i`-dimensional faces.
    pub fn pure_skeleton(&self, i: isize) -> Result<Self> {
        self.check_range(i)?;
        Ok(Self::from_maximal(self.vars.clone(), self.faces_of_dim(i)))
    }

    /// `lk_Δ(F) = { G ∈ Δ : G ∩ F = ∅, G ∪ F ∈ Δ }`.
    pub fn link(&self, face: &Face) -> Result<Self> {
        if !self.contains(face) {
            return Err(Error::NotAFace);
        }
        let facets: Vec<Face> = self
            .facets
            .iter()
            .filter(|f| face.is_subset(f))
            .map(|f| f.difference(face))
            .collect();
        Ok(Self::from_maximal(self.vars.clone(), maximal_sets(facets)))
    }

    /// `Δ|_W = { F ∈ Δ : F ⊆ W }`, over the same universe.
    pub fn restriction(&self, w: &Subset) -> Self {
        let facets = self.facets.iter().map(|f| f.intersection(w)).collect();
        Self::from_maximal(self.vars.clone(), maximal_sets(facets))
    }

    /// Same facets over a different (at least as large) universe.
    pub fn with_vars(&self, vars: Variables) -> Result<Self> {
        Self::new(vars, self.facets.clone())
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (k, facet) in self.facets.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{{{}}}", self.vars.names(facet).join(","))?;
        }
        write!(f, "⟩ on {} vertices", self.n())
    }
}

/// A nonzero proper square-free monomial ideal, given by the supports of its
/// minimal generators.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SquareFreeIdeal {
    vars: Variables,
    generators: Vec<Subset>,
}

impl SquareFreeIdeal {
    /// Builds an ideal from a minimal generating set.
    pub fn new(vars: Variables, mut generators: Vec<Subset>) -> Result<Self> {
        Self::check_proper(&vars, &generators)?;
        if !is_antichain(&generators) {
            return Err(Error::NotAntichain);
        }
        generators.sort();
        Ok(Self { vars, generators })
    }

    /// Builds an ideal from any generating set, dropping redundant generators.
    pub fn from_generators(vars: Variables, generators: Vec<Subset>) -> Result<Self> {
        Self::check_proper(&vars, &generators)?;
        Ok(Self {
            vars,
            generators: minimal_sets(generators),
        })
    }

    /// Ideal in `k[x1..xn]` from zero-based index lists.
    pub fn numbered(n: usize, generators: &[&[usize]]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|g| Subset::from_indices(g.iter().copied()))
            .collect();
        Self::new(Variables::numbered(n)?, gens)
    }

    fn check_proper(vars: &Variables, generators: &[Subset]) -> Result<()> {
        if generators.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        if generators.iter().any(Subset::is_empty) {
            return Err(Error::UnitIdeal);
        }
        vars.check(generators)
    }

    pub fn vars(&self) -> &Variables {
        &self.vars
    }

    pub fn n(&self) -> usize {
        self.vars.len()
    }

    pub fn generators(&self) -> &[Subset] {
        &self.generators
    }

    /// Whether the square-free monomial `∏_{v ∈ s} x_v` lies in the ideal.
    pub fn contains_monomial(&self, s: &Subset) -> bool {
        self.generators.iter().any(|g| g.is_subset(s))
    }

    /// Same generators over a different (at least as large) universe.
    pub fn with_vars(&self, vars: Variables) -> Result<Self> {
        Self::new(vars, self.generators.clone())
    }

    /// The facet complex `F(I)`.
    pub fn facet_complex(&self) -> SimplicialComplex {
        SimplicialComplex::from_maximal(self.vars.clone(), self.generators.clone())
    }

    /// The Stanley-Reisner complex `N(I)`: the squarefree monomials outside `I`.
    ///
    /// Its facets are the complements of the minimal vertex covers of the
    /// generators, so no sweep over all `2^n` subsets is needed.
    pub fn stanley_reisner_complex(&self) -> SimplicialComplex {
        let n = self.n();
        let facets = minimal_transversals(&self.generators)
            .into_iter()
            .map(|c| c.complement(n))
            .collect::<Vec<_>>();
        SimplicialComplex::from_maximal(self.vars.clone(), maximal_sets(facets))
    }
}

impl fmt::Debug for SquareFreeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self
            .generators
            .iter()
            .map(|g| self.vars.monomial(g))
            .collect();
        write!(f, "({}) in k{:?}", gens.join(", "), self.vars)
    }
}

pub fn facet_complex(ideal: &SquareFreeIdeal) -> SimplicialComplex {
    ideal.facet_complex()
}

pub fn stanley_reisner_complex(ideal: &SquareFreeIdeal) -> SimplicialComplex {
    ideal.stanley_reisner_complex()
}

/// The facet ideal `F(Δ)`, one generator per facet.
pub fn facet_ideal(complex: &SimplicialComplex) -> Result<SquareFreeIdeal> {
    if complex.is_void() || complex.is_irrelevant() {
        return Err(Error::VoidOrIrrelevant);
    }
    SquareFreeIdeal::new(complex.vars.clone(), complex.facets.clone())
}

/// The Stanley-Reisner ideal `N(Δ)`, generated by the minimal non-faces.
pub fn stanley_reisner_ideal(complex: &SimplicialComplex) -> Result<SquareFreeIdeal> {
    if complex.is_void() {
        // Every set, the empty one included, is a non-face.
        return Err(Error::UnitIdeal);
    }
    let n = complex.n();
    let complements: Vec<Subset> = complex.facets.iter().map(|f| f.complement(n)).collect();
    if complements.iter().any(Subset::is_empty) {
        return Err(Error::FullSimplex);
    }
    // S is a non-face iff it meets the complement of every facet.
    SquareFreeIdeal::new(complex.vars.clone(), minimal_transversals(&complements))
}
