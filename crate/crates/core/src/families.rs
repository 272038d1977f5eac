//! Ideal families known to be sequentially Cohen-Macaulay (edge ideals of
//! trees, forests and chordal graphs, facet ideals of simplicial trees),
//! cycles, path ideals, and random samplers.
//!
//! Every generator is a pure function of its [`FamilySpec`]; randomness comes
//! from a ChaCha8 stream seeded with `spec.seed`.

use std::collections::{BTreeSet, VecDeque};

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{facet_ideal, SimplicialComplex, SquareFreeIdeal, Variables};
use crate::error::{Error, Result};
use crate::polar::MonomialIdeal;
use crate::subset::Subset;

/// Simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::BadGraph(format!("loop at vertex {a}")));
            }
            if a.max(b) >= n {
                return Err(Error::BadGraph(format!(
                    "edge {a}-{b} outside {n} vertices"
                )));
            }
            if !set.insert((a.min(b), a.max(b))) {
                return Err(Error::BadGraph(format!("duplicate edge {a}-{b}")));
            }
        }
        Ok(Self { n, edges: set })
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|v| (v - 1, v))).expect("path edges are simple")
    }

    /// # Panics
    /// Panics for `n < 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least 3 vertices");
        Self::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle edges are simple")
    }

    pub fn complete(n: usize) -> Self {
        Self::new(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)))).expect("simple")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n)
            .filter(|&w| w != v && self.has_edge(v, w))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Chordality by repeatedly deleting a simplicial vertex.
    pub fn is_chordal(&self) -> bool {
        let mut alive: Vec<usize> = (0..self.n).collect();
        while !alive.is_empty() {
            let simplicial = alive.iter().position(|&v| {
                let nbrs: Vec<usize> = alive
                    .iter()
                    .copied()
                    .filter(|&w| w != v && self.has_edge(v, w))
                    .collect();
                nbrs.iter()
                    .enumerate()
                    .all(|(k, &a)| nbrs[k + 1..].iter().all(|&b| self.has_edge(a, b)))
            });
            match simplicial {
                Some(k) => {
                    alive.remove(k);
                }
                None => return false,
            }
        }
        true
    }
}

/// `(x_i x_j : ij ∈ E)` in `k[x1..xn]`.
pub fn edge_ideal(graph: &Graph) -> Result<SquareFreeIdeal> {
    if graph.edges.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let gens = graph
        .edges()
        .map(|(a, b)| Subset::from_indices([a, b]))
        .collect();
    SquareFreeIdeal::new(Variables::numbered(graph.n)?, gens)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// Edge ideal of a uniform random labelled tree (Prüfer sequence).
    Tree,
    /// A random tree with some edges deleted.
    Forest,
    /// Connected chordal graph built by attaching each vertex to a clique.
    Chordal,
    Cycle,
    Complete,
    /// Facet ideal of a simplicial tree grown by leaf attachment.
    SimplicialTree {
        max_facet: usize,
    },
    /// Ideal of all paths on `len` vertices in a random tree.
    PathIdeal {
        len: usize,
    },
    RandomSquareFree {
        gens: usize,
        max_degree: usize,
    },
    RandomMonomial {
        gens: usize,
        max_exp: u32,
    },
}

impl FamilyKind {
    pub const NAMES: [&'static str; 9] = [
        "tree",
        "forest",
        "chordal",
        "cycle",
        "complete",
        "simplicial_tree",
        "path_ideal",
        "random_squarefree",
        "random_monomial",
    ];

    pub fn name(&self) -> &'static str {
        match self {
            FamilyKind::Tree => "tree",
            FamilyKind::Forest => "forest",
            FamilyKind::Chordal => "chordal",
            FamilyKind::Cycle => "cycle",
            FamilyKind::Complete => "complete",
            FamilyKind::SimplicialTree { .. } => "simplicial_tree",
            FamilyKind::PathIdeal { .. } => "path_ideal",
            FamilyKind::RandomSquareFree { .. } => "random_squarefree",
            FamilyKind::RandomMonomial { .. } => "random_monomial",
        }
    }

    /// Families whose ideals are known to be sequentially Cohen-Macaulay.
    pub fn is_known_scm(&self) -> bool {
        matches!(
            self,
            FamilyKind::Tree
                | FamilyKind::Forest
                | FamilyKind::Chordal
                | FamilyKind::SimplicialTree { .. }
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub n: usize,
    pub seed: u64,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, n: usize, seed: u64) -> Self {
        Self { kind, n, seed }
    }

    fn validate(&self) -> Result<()> {
        let n = self.n;
        let bad = |msg: String| Err(Error::BadSpec(msg));
        match self.kind {
            FamilyKind::Cycle if n < 3 => bad(format!("cycle needs n >= 3, got {n}")),
            FamilyKind::Tree | FamilyKind::Forest | FamilyKind::Chordal | FamilyKind::Complete
                if n < 2 =>
            {
                bad(format!("{} needs n >= 2, got {n}", self.kind.name()))
            }
            FamilyKind::SimplicialTree { max_facet } if n < 2 || max_facet < 2 => {
                bad(format!("simplicial_tree needs n >= 2 and max_facet >= 2, got {n}, {max_facet}"))
            }
            FamilyKind::PathIdeal { len } if len < 2 || len > n => {
                bad(format!("path_ideal needs 2 <= len <= n, got len {len} with n {n}"))
            }
            FamilyKind::RandomSquareFree { gens, max_degree }
                if n < 1 || gens < 1 || max_degree < 1 || max_degree > n =>
            {
                bad(format!(
                    "random_squarefree needs n, gens >= 1 and 1 <= max_degree <= n, got {n}, {gens}, {max_degree}"
                ))
            }
            FamilyKind::RandomMonomial { gens, max_exp } if n < 1 || gens < 1 || max_exp < 1 => {
                bad(format!("random_monomial needs n, gens, max_exp >= 1, got {n}, {gens}, {max_exp}"))
            }
            _ => Ok(()),
        }
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

/// A generated ideal; only `random_monomial` produces non-square-free ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyIdeal {
    SquareFree(SquareFreeIdeal),
    Monomial(MonomialIdeal),
}

impl FamilyIdeal {
    pub fn as_square_free(&self) -> Option<&SquareFreeIdeal> {
        match self {
            FamilyIdeal::SquareFree(i) => Some(i),
            FamilyIdeal::Monomial(_) => None,
        }
    }

    pub fn into_monomial(self) -> MonomialIdeal {
        match self {
            FamilyIdeal::SquareFree(i) => MonomialIdeal::from_square_free(&i),
            FamilyIdeal::Monomial(m) => m,
        }
    }
}

/// The graph behind a graph family (tree, forest, chordal, cycle, complete).
pub fn generate_graph(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let mut rng = spec.rng();
    let n = spec.n;
    Ok(match spec.kind {
        FamilyKind::Tree => random_tree(n, &mut rng),
        FamilyKind::Forest => random_forest(n, &mut rng),
        FamilyKind::Chordal => random_chordal(n, &mut rng),
        FamilyKind::Cycle => Graph::cycle(n),
        FamilyKind::Complete => Graph::complete(n),
        other => {
            return Err(Error::BadSpec(format!(
                "{} is not a graph family",
                other.name()
            )))
        }
    })
}

pub fn generate(spec: &FamilySpec) -> Result<FamilyIdeal> {
    spec.validate()?;
    let mut rng = spec.rng();
    let n = spec.n;
    let ideal = match spec.kind {
        FamilyKind::Tree
        | FamilyKind::Forest
        | FamilyKind::Chordal
        | FamilyKind::Cycle
        | FamilyKind::Complete => edge_ideal(&generate_graph(spec)?)?,
        FamilyKind::SimplicialTree { max_facet } => {
            facet_ideal(&random_simplicial_tree(n, max_facet, &mut rng)?)?
        }
        FamilyKind::PathIdeal { len } => random_path_ideal(n, len, &mut rng)?,
        FamilyKind::RandomSquareFree { gens, max_degree } => {
            let gens = (0..gens)
                .map(|_| {
                    let k = rng.gen_range(1..=max_degree);
                    index::sample(&mut rng, n, k)
                        .into_iter()
                        .collect::<Subset>()
                })
                .collect();
            SquareFreeIdeal::from_generators(Variables::numbered(n)?, gens)?
        }
        FamilyKind::RandomMonomial { gens, max_exp } => {
            let gens = (0..gens)
                .map(|_| loop {
                    let g: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=max_exp)).collect();
                    if g.iter().any(|&e| e > 0) {
                        break g;
                    }
                })
                .collect();
            let (ideal, _) = MonomialIdeal::minimalized(Variables::numbered(n)?, gens)?;
            return Ok(FamilyIdeal::Monomial(ideal));
        }
    };
    Ok(FamilyIdeal::SquareFree(ideal))
}

fn random_tree(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let code: Vec<usize> = (0..n.saturating_sub(2))
        .map(|_| rng.gen_range(0..n))
        .collect();
    prufer_decode(n, &code)
}

/// Tree with the given Prüfer code (length `n - 2`).
pub fn prufer_decode(n: usize, code: &[usize]) -> Graph {
    let mut degree = vec![1usize; n];
    for &v in code {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in code {
        let leaf = (0..n)
            .find(|&u| degree[u] == 1)
            .expect("a leaf always exists");
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, edges).expect("Prüfer decoding yields a simple tree")
}

fn random_forest(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let tree = random_tree(n, rng);
    let all: Vec<(usize, usize)> = tree.edges().collect();
    let mut kept: Vec<(usize, usize)> = all
        .iter()
        .copied()
        .filter(|_| !rng.gen_bool(1.0 / 3.0))
        .collect();
    if kept.is_empty() {
        kept.push(all[0]);
    }
    Graph::new(n, kept).expect("subgraph of a tree")
}

fn random_chordal(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    let adjacent =
        |e: &BTreeSet<(usize, usize)>, a: usize, b: usize| e.contains(&(a.min(b), a.max(b)));
    for v in 1..n {
        let u = rng.gen_range(0..v);
        let mut clique = vec![u];
        let mut candidates: Vec<usize> = (0..v).filter(|&w| adjacent(&edges, u, w)).collect();
        candidates.shuffle(rng);
        for w in candidates {
            if clique.iter().all(|&c| adjacent(&edges, c, w)) && rng.gen_bool(0.5) {
                clique.push(w);
            }
        }
        edges.extend(clique.into_iter().map(|c| (c, v)));
    }
    Graph::new(n, edges).expect("constructed edges are simple")
}

// Beyond this many facets only single-vertex attachments are used, which
// keep the complex a tree without running the exhaustive check.
const CHECKED_FACETS: usize = 16;

fn random_simplicial_tree(
    n: usize,
    max_facet: usize,
    rng: &mut ChaCha8Rng,
) -> Result<SimplicialComplex> {
    let first = rng.gen_range(2..=max_facet.min(n));
    let mut facets = vec![Subset::from_indices(0..first)];
    let mut next = first;
    let vars = Variables::numbered(n)?;
    while next < n {
        let mut placed = false;
        if facets.len() < CHECKED_FACETS {
            for _ in 0..8 {
                let anchor = facets.choose(rng).expect("nonempty").clone();
                let fresh = rng.gen_range(1..=(max_facet - 1).min(n - next));
                let shared = rng.gen_range(1..=(anchor.len() - 1).min(max_facet - fresh));
                let members: Vec<usize> = anchor.iter().collect();
                let mut facet: Subset = members.choose_multiple(rng, shared).copied().collect();
                for v in next..next + fresh {
                    facet.insert(v);
                }
                let mut candidate = facets.clone();
                candidate.push(facet);
                let complex = SimplicialComplex::new(vars.clone(), candidate.clone())?;
                if is_simplicial_forest(&complex)? {
                    facets = candidate;
                    next += fresh;
                    placed = true;
                    break;
                }
            }
        }
        if !placed {
            let anchor = facets.choose(rng).expect("nonempty");
            let v = *anchor
                .iter()
                .collect::<Vec<_>>()
                .choose(rng)
                .expect("facets are nonempty");
            facets.push(Subset::from_indices([v, next]));
            next += 1;
        }
    }
    SimplicialComplex::new(vars, facets)
}

fn random_path_ideal(n: usize, len: usize, rng: &mut ChaCha8Rng) -> Result<SquareFreeIdeal> {
    for _ in 0..64 {
        let tree = random_tree(n, rng);
        let paths = paths_with_vertices(&tree, len);
        if !paths.is_empty() {
            return SquareFreeIdeal::from_generators(Variables::numbered(n)?, paths);
        }
    }
    Err(Error::BadSpec(format!(
        "no random tree on {n} vertices with a {len}-vertex path found"
    )))
}

/// Vertex sets of all paths in a tree with exactly `len` vertices.
fn paths_with_vertices(tree: &Graph, len: usize) -> Vec<Subset> {
    let n = tree.n();
    let mut out = Vec::new();
    for start in 0..n {
        // BFS parents from `start`; the tree path to any vertex is unique.
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![usize::MAX; n];
        depth[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for w in tree.neighbors(v) {
                if depth[w] == usize::MAX {
                    depth[w] = depth[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        for (end, &d) in depth.iter().enumerate().skip(start + 1) {
            if d == len - 1 {
                let mut path = Subset::singleton(end);
                let mut v = end;
                while v != start {
                    v = parent[v];
                    path.insert(v);
                }
                out.push(path);
            }
        }
    }
    out
}

pub const MAX_FOREST_FACETS: usize = 20;

/// Whether every nonempty subcollection of facets has a leaf: a facet `F`
/// with `F ∩ G ⊆ H` for all other members `G` and a fixed other member `H`.
pub fn is_simplicial_forest(complex: &SimplicialComplex) -> Result<bool> {
    let facets = complex.facets();
    if facets.is_empty() {
        return Err(Error::VoidComplex);
    }
    if facets.len() > MAX_FOREST_FACETS {
        return Err(Error::TooManyFacets {
            count: facets.len(),
            limit: MAX_FOREST_FACETS,
        });
    }
    let m = facets.len();
    let has_leaf = |mask: u32| {
        let members: Vec<usize> = (0..m).filter(|k| mask >> k & 1 == 1).collect();
        members.len() == 1
            || members.iter().any(|&f| {
                let shared = members
                    .iter()
                    .filter(|&&g| g != f)
                    .fold(Subset::new(), |acc, &g| {
                        acc.union(&facets[f].intersection(&facets[g]))
                    });
                members
                    .iter()
                    .any(|&h| h != f && shared.is_subset(&facets[h]))
            })
    };
    Ok((1u32..1 << m).all(has_leaf))
}
