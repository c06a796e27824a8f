//! Ideal builders and closed-form predictions for `J_{K_m,G}`, `G` complete
//! multipartite.
//!
//! Everything in [`predict`] is computed from `(m; n_1, …, n_r)` alone. The
//! instance is split the usual way: `s` is the first part with `n_s ≥ 2`,
//! `V_k` are consecutive vertex blocks and `T_k` is everything outside `V_k`.
//! The minimal primes are `J_{K_m,G̃}` (all 2-minors of the `m × n` matrix)
//! and `A_k = (x_{ij} : j ∈ T_k)` for each `k ≥ s`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::algebra::{Ideal, PolyRing, RingDescriptor, TermOrder};
use crate::error::{Error, Result};
use crate::graph::{konig_path, PartiteSpec, PathWitness, SimpleGraph};
use crate::monomial::{binomial, HilbertSeries};

/// `J_{G1,G2}`: one 2-minor `x_{ik}x_{jl} - x_{il}x_{jk}` per pair of edges
/// `{i<j} ∈ E(G1)`, `{k<l} ∈ E(G2)`, in edge order of `G1` then `G2`.
pub fn pair_ideal(g1: &SimpleGraph, g2: &SimpleGraph, ring: RingDescriptor) -> Result<Ideal> {
    if g1.n_vertices() != ring.rows || g2.n_vertices() != ring.cols || ring.aux != 0 {
        return Err(Error::InvalidSpec(format!(
            "graphs on {} and {} vertices do not fit a {}x{} grid",
            g1.n_vertices(),
            g2.n_vertices(),
            ring.rows,
            ring.cols
        )));
    }
    let pr = PolyRing::new(ring, TermOrder::LexRowMajor);
    let mut gens = Vec::with_capacity(g1.edge_count() * g2.edge_count());
    for (i, j) in g1.edges() {
        for (k, l) in g2.edges() {
            gens.push(pr.minor(i, j, k, l));
        }
    }
    Ideal::new(ring, gens)
}

/// `J_{K_m,G}` over `GF(prime)`.
pub fn generalized_bei(m: usize, g: &SimpleGraph, prime: u32) -> Result<Ideal> {
    if m < 2 {
        return Err(Error::InvalidSpec(format!("m = {m}, need m >= 2")));
    }
    let ring = RingDescriptor::new(m, g.n_vertices(), prime)?;
    pair_ideal(&SimpleGraph::complete(m)?, g, ring)
}

/// `P_T(K_m, G)`: the variables in the columns of `T` plus all 2-minors on
/// the columns of each connected component of `G \ T`.
pub fn prime_component(m: usize, g: &SimpleGraph, t: &[usize], prime: u32) -> Result<Ideal> {
    let ring = RingDescriptor::new(m, g.n_vertices(), prime)?;
    let pr = PolyRing::new(ring, TermOrder::LexRowMajor);
    let mut gens = Vec::new();
    for &j in t {
        for i in 1..=m {
            gens.push(pr.monomial(ring.x(i, j)));
        }
    }
    for comp in g.components_without(t) {
        for (a, &k) in comp.iter().enumerate() {
            for &l in &comp[a + 1..] {
                for i in 1..=m {
                    for j in i + 1..=m {
                        gens.push(pr.minor(i, j, k, l));
                    }
                }
            }
        }
    }
    Ideal::new(ring, gens)
}

/// `P_T` described by its cut set and the components of `G \ T`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ComponentDescriptor {
    pub cut_set: Vec<usize>,
    pub cliques: Vec<Vec<usize>>,
}

/// Cohomological dimension of `J_{K_m,G}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Cd {
    /// Positive characteristic.
    Exact {
        exact: usize,
    },
    /// Characteristic zero.
    Interval {
        lower: usize,
        upper: usize,
    },
    Unsupported {
        unsupported: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MultiplicitySource {
    /// The bipartite case table.
    CaseTable,
    /// `N(1)` of the predicted series; no table exists for `r ≥ 3`.
    SeriesAtOne,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Prediction {
    pub spec: PartiteSpec,
    pub dim: usize,
    pub depth: usize,
    pub reg: usize,
    pub mult: u64,
    pub mult_source: MultiplicitySource,
    pub cd: Cd,
    /// `mn - dim`.
    pub height: usize,
    /// Path of length equal to the height of the classical `J_G` (`m = 2`).
    pub path: PathWitness,
    pub hilbert: HilbertSeries,
    pub cut_sets: Vec<Vec<usize>>,
    pub components: Vec<ComponentDescriptor>,
}

/// Series of `S/I_2` for the generic `m × n` matrix:
/// `Σ_i C(m-1,i) C(n-1,i) t^i / (1-t)^{m+n-1}`.
pub fn determinantal_hilbert(m: usize, n: usize) -> HilbertSeries {
    let top = m.min(n) as u64;
    let num: Vec<BigInt> = (0..top)
        .map(|i| binomial(m as u64 - 1, i) * binomial(n as u64 - 1, i))
        .collect();
    HilbertSeries::new(num, m + n - 1)
}

/// Predicted Hilbert series of `S/J_{K_m,G}`: the determinantal series on all
/// `n` columns plus, for every `k ≥ s`,
/// `1/(1-t)^{m n_k} - Σ_i C(m-1,i) C(n_k-1,i) t^i / (1-t)^{m+n_k-1}`.
pub fn predicted_hilbert(spec: &PartiteSpec) -> HilbertSeries {
    let m = spec.m();
    let mut h = determinantal_hilbert(m, spec.n());
    for &nk in spec.parts().iter().filter(|&&nk| nk >= 2) {
        h = h
            .add(&HilbertSeries::free(m * nk))
            .sub(&determinantal_hilbert(m, nk));
    }
    h
}

pub fn predicted_dim(spec: &PartiteSpec) -> usize {
    let (m, n) = (spec.m(), spec.n());
    if spec.all_ones() {
        m + spec.r() - 1
    } else {
        (m + n - 1).max(m * spec.largest())
    }
}

pub fn predicted_depth(spec: &PartiteSpec) -> usize {
    match spec.n_s() {
        Some(ns) => spec.m() + ns,
        None => spec.m() + spec.r() - 1,
    }
}

/// The three regularity regimes: `n - 1` if `m ≥ n`, `m - 1` if
/// `n > m > n_r`, `m` if `n_r ≥ m`. Complete graphs give `min{m-1, r-1}`.
pub fn predicted_reg(spec: &PartiteSpec) -> usize {
    let (m, n, nr) = (spec.m(), spec.n(), spec.largest());
    if spec.all_ones() {
        (m - 1).min(spec.r() - 1)
    } else if m >= n {
        n - 1
    } else if m > nr {
        m - 1
    } else {
        m
    }
}

pub fn predicted_cd(spec: &PartiteSpec, char_zero: bool) -> Cd {
    let Some(ns) = spec.n_s() else {
        return Cd::Unsupported {
            unsupported: "complete graph: the formula needs a part of size at least 2".into(),
        };
    };
    let (m, n) = (spec.m(), spec.n());
    let lower = m * n - m - ns;
    if char_zero {
        Cd::Interval {
            lower,
            upper: m * n - 3,
        }
    } else {
        Cd::Exact { exact: lower }
    }
}

/// Bipartite multiplicity table; `None` unless `r = 2` and `n_2 ≥ 2`.
pub fn multiplicity_case_table(spec: &PartiteSpec) -> Option<u64> {
    if spec.r() != 2 || spec.all_ones() {
        return None;
    }
    let (m, n1, n2) = (spec.m(), spec.parts()[0], spec.parts()[1]);
    let det = m + n1 + n2 - 1;
    let e = if det.max(m * n1) < m * n2 {
        1
    } else if det < m * n1 && m * n1 == m * n2 {
        2
    } else if m * n2 < det {
        2 * n2 as u64
    } else if det == m * n1 && m * n1 == m * n2 {
        12
    } else if m * n1 < det && det == m * n2 {
        let sum: BigInt = (0..=m.min(n1 + n2) as u64)
            .map(|k| binomial(m as u64 - 1, k) * binomial((n1 + n2 - 1) as u64, k))
            .sum();
        sum.to_u64()? + 1
    } else {
        return None;
    };
    Some(e)
}

/// `C(G) = {∅, T_s, …, T_r}` in the order of [`crate::graph::cut_sets`].
pub fn predicted_cut_sets(spec: &PartiteSpec) -> Vec<Vec<usize>> {
    let mut sets = vec![Vec::new()];
    for k in 1..=spec.r() {
        if spec.parts()[k - 1] >= 2 {
            sets.push(spec.complement(k));
        }
    }
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    sets
}

pub fn predicted_components(spec: &PartiteSpec) -> Vec<ComponentDescriptor> {
    predicted_cut_sets(spec)
        .into_iter()
        .map(|t| {
            let cliques = if t.is_empty() {
                vec![(1..=spec.n()).collect()]
            } else {
                (1..=spec.n())
                    .filter(|v| !t.contains(v))
                    .map(|v| vec![v])
                    .collect()
            };
            ComponentDescriptor {
                cut_set: t,
                cliques,
            }
        })
        .collect()
}

pub fn predict(spec: &PartiteSpec, char_zero: bool) -> Prediction {
    let hilbert = predicted_hilbert(spec);
    let dim = predicted_dim(spec);
    let (mult, mult_source) = match multiplicity_case_table(spec) {
        Some(e) => (e, MultiplicitySource::CaseTable),
        None => (
            hilbert.at_one().to_u64().unwrap_or(0),
            MultiplicitySource::SeriesAtOne,
        ),
    };
    Prediction {
        spec: spec.clone(),
        dim,
        depth: predicted_depth(spec),
        reg: predicted_reg(spec),
        mult,
        mult_source,
        cd: predicted_cd(spec, char_zero),
        height: spec.m() * spec.n() - dim,
        path: konig_path(spec).expect("path construction is validated by tests"),
        hilbert,
        cut_sets: predicted_cut_sets(spec),
        components: predicted_components(spec),
    }
}

/// Closed forms for the classical binomial edge ideal `J_G` of `K_{n1,n2}`
/// (the `m = 2` case), stated independently of [`predict`].
pub mod bipartite {
    use super::*;

    pub fn depth(n1: usize, n2: usize) -> usize {
        if n1 == 1 {
            n2 + 2
        } else {
            n1 + 2
        }
    }

    /// `(1+(n1+n2-1)t)/(1-t)^{n1+n2+1} + 1/(1-t)^{2n1} + 1/(1-t)^{2n2}
    ///  - (1+(n1-1)t)/(1-t)^{n1+1} - (1+(n2-1)t)/(1-t)^{n2+1}`.
    pub fn hilbert(n1: usize, n2: usize) -> HilbertSeries {
        let lin = |a: usize, pole: usize| HilbertSeries::from_i64(&[1, a as i64], pole);
        lin(n1 + n2 - 1, n1 + n2 + 1)
            .add(&HilbertSeries::free(2 * n1))
            .add(&HilbertSeries::free(2 * n2))
            .sub(&lin(n1 - 1, n1 + 1))
            .sub(&lin(n2 - 1, n2 + 1))
    }

    pub fn multiplicity(n1: usize, n2: usize) -> u64 {
        if n2 > n1 + 1 {
            1
        } else {
            2 * n2 as u64
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_multipartite;

    fn spec(m: usize, parts: &[usize]) -> PartiteSpec {
        PartiteSpec::new(m, parts.to_vec()).unwrap()
    }

    #[test]
    fn generator_counts() {
        let p = 32003;
        let k2 = SimpleGraph::complete(2).unwrap();
        let ring = RingDescriptor::new(2, 2, p).unwrap();
        let one = pair_ideal(&k2, &k2, ring).unwrap();
        let pr = PolyRing::new(ring, TermOrder::LexRowMajor);
        assert_eq!(one.generators(), &[pr.minor(1, 2, 1, 2)]);

        let path = SimpleGraph::path(3).unwrap();
        let ring23 = RingDescriptor::new(2, 3, p).unwrap();
        assert_eq!(
            pair_ideal(&k2, &path, ring23).unwrap().generators().len(),
            2
        );
        assert!(pair_ideal(&path, &k2, ring23).is_err());

        let k22 = complete_multipartite(&spec(3, &[2, 2]));
        assert_eq!(generalized_bei(3, &k22, p).unwrap().generators().len(), 12);
        let star = complete_multipartite(&spec(2, &[1, 2]));
        assert_eq!(generalized_bei(2, &star, p).unwrap().generators().len(), 2);
        let k3 = SimpleGraph::complete(3).unwrap();
        assert_eq!(generalized_bei(2, &k3, p).unwrap().generators().len(), 3);
    }

    #[test]
    fn prime_components() {
        let p = 32003;
        let k22 = complete_multipartite(&spec(2, &[2, 2]));
        let a = prime_component(2, &k22, &[3, 4], p).unwrap();
        assert_eq!(a.generators().len(), 4);
        assert!(a.generators().iter().all(|g| g.len() == 1));

        let path = SimpleGraph::path(3).unwrap();
        assert_eq!(
            prime_component(2, &path, &[2], p)
                .unwrap()
                .generators()
                .len(),
            2
        );

        // T = ∅ on a connected graph is the ideal of all 2-minors.
        let full = prime_component(2, &path, &[], p).unwrap();
        assert_eq!(full.generators().len(), 3);
    }

    #[test]
    fn predict_m3_k22() {
        let p = predict(&spec(3, &[2, 2]), false);
        assert_eq!((p.dim, p.depth, p.reg, p.mult, p.height), (6, 5, 2, 12, 6));
        assert_eq!(p.cd, Cd::Exact { exact: 7 });
        let z = predict(&spec(3, &[2, 2]), true);
        assert_eq!(z.cd, Cd::Interval { lower: 7, upper: 9 });
    }

    #[test]
    fn predict_stars() {
        for q in 2..7 {
            let p = predict(&spec(2, &[1, q]), false);
            assert_eq!(p.depth, q + 2);
            assert_eq!(p.dim, (q + 2).max(2 * q));
            assert_eq!(p.reg, 2);
        }
        assert_eq!(predict(&spec(5, &[1, 2]), false).reg, 2);
        assert_eq!(predict(&spec(2, &[2, 5]), false).mult, 1);
    }

    #[test]
    fn complete_graph_branch() {
        let p = predict(&spec(3, &[1, 1, 1, 1]), false);
        assert_eq!(p.dim, 3 + 4 - 1);
        assert_eq!(p.depth, p.dim);
        assert_eq!(p.reg, 2);
        assert!(matches!(p.cd, Cd::Unsupported { .. }));
        assert_eq!(p.cut_sets, vec![Vec::<usize>::new()]);
        assert_eq!(p.mult_source, MultiplicitySource::SeriesAtOne);
    }

    #[test]
    fn series_examples() {
        assert_eq!(
            predicted_hilbert(&spec(2, &[1, 1])),
            HilbertSeries::from_i64(&[1, 1], 3)
        );
        let expected = HilbertSeries::from_i64(&[1, 3], 5)
            .add(&HilbertSeries::free(6))
            .sub(&HilbertSeries::from_i64(&[1, 2], 4));
        assert_eq!(predicted_hilbert(&spec(2, &[1, 3])), expected);
        assert_eq!(bipartite::hilbert(1, 3), expected);
    }

    #[test]
    fn cut_sets_and_components() {
        let s = spec(2, &[1, 1, 2]);
        assert_eq!(predicted_cut_sets(&s), vec![vec![], vec![1, 2]]);
        let comps = predicted_components(&s);
        assert_eq!(comps[0].cliques, vec![vec![1, 2, 3, 4]]);
        assert_eq!(comps[1].cliques, vec![vec![3], vec![4]]);
    }

    #[test]
    fn json_field_names() {
        let v = serde_json::to_value(predict(&spec(3, &[2, 2]), true)).unwrap();
        for key in [
            "dim",
            "depth",
            "reg",
            "mult",
            "cd",
            "height",
            "path",
            "hilbert",
            "cutSets",
            "components",
        ] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(v["cd"], serde_json::json!({"lower": 7, "upper": 9}));
        assert_eq!(v["hilbert"]["pole"], 6);
    }
}
