//! General monomial ideals and polarization.
//!
//! Polarization replaces `x_j^a` by `x_{j,1} x_{j,2} ... x_{j,a}` in every
//! generator. The result is square-free with the same projective dimension
//! and the same maximal height of an associated prime, so the square-free
//! machinery answers both questions for any monomial ideal.

use crate::complex::{SquareFreeIdeal, Variables};
use crate::covers::big_height;
use crate::error::{Error, Result};
use crate::homology::PrimeField;
use crate::scm::projective_dimension;
use crate::subset::Subset;

/// Exponent vector of a monomial, one entry per variable.
pub type Exponents = Vec<u32>;

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// A nonzero proper monomial ideal given by its minimal generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    vars: Variables,
    generators: Vec<Exponents>,
}

impl MonomialIdeal {
    /// Builds an ideal from a minimal generating set.
    pub fn new(vars: Variables, mut generators: Vec<Exponents>) -> Result<Self> {
        Self::check(&vars, &generators)?;
        for (a, ga) in generators.iter().enumerate() {
            for (b, gb) in generators.iter().enumerate() {
                if a != b && divides(ga, gb) {
                    return Err(Error::NotMinimal {
                        divisor: a,
                        multiple: b,
                    });
                }
            }
        }
        generators.sort();
        Ok(Self { vars, generators })
    }

    /// Builds an ideal from any generating set. Returns the ideal and the
    /// generators dropped because another generator divides them.
    pub fn minimalized(
        vars: Variables,
        generators: Vec<Exponents>,
    ) -> Result<(Self, Vec<Exponents>)> {
        Self::check(&vars, &generators)?;
        let mut gens = generators;
        gens.sort_by_key(|g| (g.iter().sum::<u32>(), g.clone()));
        let mut kept: Vec<Exponents> = Vec::new();
        let mut dropped = Vec::new();
        for g in gens {
            if kept.iter().any(|k| divides(k, &g)) {
                dropped.push(g);
            } else {
                kept.push(g);
            }
        }
        kept.sort();
        Ok((
            Self {
                vars,
                generators: kept,
            },
            dropped,
        ))
    }

    fn check(vars: &Variables, generators: &[Exponents]) -> Result<()> {
        if generators.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        for g in generators {
            if g.len() != vars.len() {
                return Err(Error::ExponentLength {
                    got: g.len(),
                    expected: vars.len(),
                });
            }
            if g.iter().all(|&e| e == 0) {
                return Err(Error::UnitIdeal);
            }
        }
        Ok(())
    }

    pub fn vars(&self) -> &Variables {
        &self.vars
    }

    pub fn n(&self) -> usize {
        self.vars.len()
    }

    pub fn generators(&self) -> &[Exponents] {
        &self.generators
    }

    pub fn is_square_free(&self) -> bool {
        self.generators.iter().flatten().all(|&e| e <= 1)
    }

    /// The same ideal as a [`SquareFreeIdeal`], if every exponent is at most one.
    pub fn to_square_free(&self) -> Option<SquareFreeIdeal> {
        if !self.is_square_free() {
            return None;
        }
        let gens = self.generators.iter().map(|g| support(g)).collect();
        Some(SquareFreeIdeal::new(self.vars.clone(), gens).expect("validated on construction"))
    }

    pub fn from_square_free(ideal: &SquareFreeIdeal) -> Self {
        let n = ideal.n();
        let generators = ideal
            .generators()
            .iter()
            .map(|g| (0..n).map(|v| u32::from(g.contains(v))).collect())
            .collect();
        Self::new(ideal.vars().clone(), generators).expect("square-free ideals are minimal")
    }

    /// `x^2*y`-style rendering of generator `k`.
    pub fn monomial(&self, k: usize) -> String {
        format_monomial(&self.vars, &self.generators[k])
    }
}

fn support(g: &[u32]) -> Subset {
    g.iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(v, _)| v)
        .collect()
}

/// `x^2*y`-style rendering of an exponent vector.
pub fn format_monomial(vars: &Variables, g: &[u32]) -> String {
    let factors: Vec<String> = g
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(v, &e)| match e {
            1 => vars.label(v).to_string(),
            _ => format!("{}^{}", vars.label(v), e),
        })
        .collect();
    factors.join("*")
}

/// A monomial ideal together with its polarization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolarizationMap {
    pub source: MonomialIdeal,
    pub target: SquareFreeIdeal,
    /// `var_map[j]` lists the target indices of `x_j.1, ..., x_j.e_j`.
    pub var_map: Vec<Vec<usize>>,
}

/// Polarizes `ideal`. Source variable `x` with largest exponent `e` becomes
/// target variables `x.1 .. x.e`, ordered by (source index, t). A variable
/// dividing no generator still gets the single target `x.1`.
pub fn polarize(ideal: &MonomialIdeal) -> PolarizationMap {
    let n = ideal.n();
    let mut labels = Vec::new();
    let mut var_map = Vec::with_capacity(n);
    for j in 0..n {
        let e = ideal
            .generators
            .iter()
            .map(|g| g[j])
            .max()
            .unwrap_or(0)
            .max(1);
        let first = labels.len();
        labels.extend((1..=e).map(|t| format!("{}.{}", ideal.vars.label(j), t)));
        var_map.push((first..first + e as usize).collect::<Vec<_>>());
    }
    let vars = Variables::new(labels).expect("polarized labels are distinct");
    let generators = ideal
        .generators
        .iter()
        .map(|g| {
            g.iter()
                .enumerate()
                .flat_map(|(j, &a)| var_map[j][..a as usize].iter().copied())
                .collect::<Subset>()
        })
        .collect();
    let target = SquareFreeIdeal::new(vars, generators).expect("polarization preserves minimality");
    PolarizationMap {
        source: ideal.clone(),
        target,
        var_map,
    }
}

pub fn big_height_general(ideal: &MonomialIdeal) -> usize {
    big_height(&polarize(ideal).target)
}

/// `pd(R/I)`, computed on the polarization.
pub fn pd_general(ideal: &MonomialIdeal, field: PrimeField) -> Result<usize> {
    projective_dimension(&polarize(ideal).target, field)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::set;
    use proptest::prelude::*;

    fn vars(labels: &[&str]) -> Variables {
        Variables::new(labels.iter().copied()).unwrap()
    }

    fn mono(labels: &[&str], gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(vars(labels), gens.iter().map(|g| g.to_vec()).collect()).unwrap()
    }

    #[test]
    fn validation() {
        assert_eq!(
            MonomialIdeal::new(vars(&["x"]), vec![]),
            Err(Error::ZeroIdeal)
        );
        assert_eq!(
            MonomialIdeal::new(vars(&["x"]), vec![vec![0]]),
            Err(Error::UnitIdeal)
        );
        assert_eq!(
            MonomialIdeal::new(vars(&["x", "y"]), vec![vec![1]]),
            Err(Error::ExponentLength {
                got: 1,
                expected: 2
            })
        );
        assert!(matches!(
            MonomialIdeal::new(vars(&["x", "y"]), vec![vec![1, 0], vec![2, 1]]),
            Err(Error::NotMinimal { .. })
        ));
        let (i, dropped) =
            MonomialIdeal::minimalized(vars(&["x", "y"]), vec![vec![2, 1], vec![1, 0]]).unwrap();
        assert_eq!(i.generators(), &[vec![1, 0]]);
        assert_eq!(dropped, vec![vec![2, 1]]);
    }

    #[test]
    fn polarize_single_power() {
        let m = polarize(&mono(&["x"], &[&[2]]));
        assert_eq!(m.target.vars().labels(), &["x.1", "x.2"]);
        assert_eq!(m.target.generators(), &[set(&[0, 1])]);
        assert_eq!(m.var_map, vec![vec![0, 1]]);
    }

    #[test]
    fn polarize_mixed() {
        let m = polarize(&mono(&["x", "y"], &[&[2, 0], &[1, 1]]));
        assert_eq!(m.target.vars().labels(), &["x.1", "x.2", "y.1"]);
        // x.1 x.2 and x.1 y.1
        let mut gens = m.target.generators().to_vec();
        gens.sort();
        assert_eq!(gens, vec![set(&[0, 1]), set(&[0, 2])]);
    }

    #[test]
    fn polarize_square_free_is_a_relabelling() {
        let i = mono(&["x1", "x2"], &[&[1, 1]]);
        let m = polarize(&i);
        assert_eq!(m.target.vars().labels(), &["x1.1", "x2.1"]);
        assert_eq!(
            m.target.generators(),
            i.to_square_free().unwrap().generators()
        );
    }

    #[test]
    fn unused_variables_survive() {
        let m = polarize(&mono(&["x", "y", "z"], &[&[2, 0, 0]]));
        assert_eq!(m.target.vars().labels(), &["x.1", "x.2", "y.1", "z.1"]);
    }

    #[test]
    fn big_height_general_examples() {
        assert_eq!(
            big_height_general(&mono(&["x", "y"], &[&[2, 0], &[1, 1]])),
            2
        );
        assert_eq!(big_height_general(&mono(&["x1", "x2"], &[&[1, 1]])), 1);
        assert_eq!(big_height_general(&mono(&["x"], &[&[3]])), 1);
    }

    #[test]
    fn pd_general_examples() {
        let f = PrimeField::GF2;
        assert_eq!(
            pd_general(&mono(&["x", "y"], &[&[2, 0], &[1, 1]]), f).unwrap(),
            2
        );
        assert_eq!(pd_general(&mono(&["x"], &[&[2]]), f).unwrap(), 1);
        let m = mono(&["a", "b", "c"], &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(pd_general(&m, f).unwrap(), 3);
    }

    #[test]
    fn rendering() {
        let i = mono(&["x", "y"], &[&[2, 0], &[1, 1]]);
        assert_eq!(i.monomial(0), "x*y");
        assert_eq!(i.monomial(1), "x^2");
    }

    fn arb_monomial_ideal() -> impl Strategy<Value = MonomialIdeal> {
        (1usize..=3).prop_flat_map(|n| {
            prop::collection::vec(prop::collection::vec(0u32..=3, n), 1..5).prop_filter_map(
                "unit generator",
                move |gens| {
                    if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
                        return None;
                    }
                    let v = Variables::numbered(n).unwrap();
                    Some(MonomialIdeal::minimalized(v, gens).unwrap().0)
                },
            )
        })
    }

    proptest! {
        #[test]
        fn degrees_are_preserved(i in arb_monomial_ideal()) {
            let m = polarize(&i);
            prop_assert_eq!(m.target.generators().len(), i.generators().len());
            let mut src: Vec<u32> = i.generators().iter().map(|g| g.iter().sum()).collect();
            let mut dst: Vec<u32> = m.target.generators().iter().map(|g| g.len() as u32).collect();
            src.sort_unstable();
            dst.sort_unstable();
            prop_assert_eq!(src, dst);
        }

        #[test]
        fn polarizing_twice_is_a_fixed_point(i in arb_monomial_ideal()) {
            let once = polarize(&i).target;
            let twice = polarize(&MonomialIdeal::from_square_free(&once)).target;
            prop_assert_eq!(once.generators(), twice.generators());
            prop_assert_eq!(once.n(), twice.n());
            prop_assert_eq!(big_height_general(&i), big_height(&twice));
        }
    }
}
