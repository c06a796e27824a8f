use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::homology::{reduced_homology_ranks, SimplicialComplex};
use super::MonomialIdeal;
use crate::error::{Error, Result};

/// Default cap on the number of variables for [`betti_table`].
pub const HOCHSTER_MAX_VARS: usize = 15;

/// Multigraded Betti numbers `β_{i,σ}(S/I)` of a squarefree quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    nvars: usize,
    entries: BTreeMap<(usize, u64), usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiEntry {
    pub i: usize,
    /// 0-based variable indices.
    pub sigma: Vec<usize>,
    pub rank: usize,
}

impl BettiTable {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn get(&self, i: usize, sigma: u64) -> usize {
        self.entries.get(&(i, sigma)).copied().unwrap_or(0)
    }

    /// `β_{i,j} = Σ_{|σ| = j} β_{i,σ}`.
    pub fn graded(&self, i: usize, j: usize) -> usize {
        self.entries
            .iter()
            .filter(|((k, s), _)| *k == i && s.count_ones() as usize == j)
            .map(|(_, r)| r)
            .sum()
    }

    pub fn entries(&self) -> impl Iterator<Item = BettiEntry> + '_ {
        self.entries.iter().map(|(&(i, s), &rank)| BettiEntry {
            i,
            sigma: (0..64).filter(|b| s >> b & 1 == 1).collect(),
            rank,
        })
    }

    /// Projective dimension of `S/I`.
    pub fn pd(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// `#vars - pd`.
    pub fn depth(&self) -> usize {
        self.nvars - self.pd()
    }

    /// `max{|σ| - i : β_{i,σ} ≠ 0}`.
    pub fn reg(&self) -> usize {
        self.entries
            .keys()
            .map(|&(i, s)| s.count_ones() as usize - i)
            .max()
            .unwrap_or(0)
    }

    /// `Σ (-1)^i β_{i,σ} t^{|σ|}`, the unreduced Hilbert numerator over
    /// `(1-t)^{#vars}`.
    pub fn euler_numerator(&self) -> Vec<i128> {
        let mut out = vec![0i128; self.nvars + 1];
        for (&(i, s), &r) in &self.entries {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            out[s.count_ones() as usize] += sign * r as i128;
        }
        out
    }
}

impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.entries())
    }
}

/// All Betti numbers of `S/I` for squarefree `I` via Hochster's formula,
/// `β_{i,σ} = dim H̃_{|σ|-i-1}(Δ|_σ; GF(p))`.
///
/// Only `σ` in which every vertex lies in a generator contained in `σ` are
/// examined: any other vertex is a cone point of `Δ|_σ`, which is then
/// acyclic. Candidates are processed in parallel; the table does not depend
/// on scheduling.
pub fn betti_table(i: &MonomialIdeal, p: u32, cap: usize) -> Result<BettiTable> {
    if !i.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if i.is_unit() {
        return Err(Error::ZeroModule);
    }
    let nvars = i.nvars();
    if nvars > cap || nvars > 32 {
        return Err(Error::SizeLimit {
            what: "Hochster variable count",
            size: nvars,
            limit: cap.min(32),
        });
    }
    let complex = SimplicialComplex::stanley_reisner(i)?;
    let supports = complex.minimal_nonfaces().to_vec();
    let mut candidates: Vec<u64> = (0..1u64 << nvars)
        .filter(|&sigma| {
            let covered = supports
                .iter()
                .filter(|&&g| g & !sigma == 0)
                .fold(0u64, |acc, &g| acc | g);
            covered == sigma
        })
        .collect();
    candidates.sort_by_key(|&s| (s.count_ones(), s));

    let found: Vec<Vec<((usize, u64), usize)>> = candidates
        .par_iter()
        .map(|&sigma| {
            let size = sigma.count_ones() as usize;
            let ranks = reduced_homology_ranks(&complex, sigma, p)?;
            // ranks[d + 1] = H̃_d, and d = |σ| - i - 1.
            Ok(ranks
                .iter()
                .enumerate()
                .filter(|(_, &r)| r > 0)
                .map(|(k, &r)| ((size - k, sigma), r))
                .collect())
        })
        .collect::<Result<_>>()?;
    Ok(BettiTable {
        nvars,
        entries: found.into_iter().flatten().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Monomial;

    fn ideal(nvars: usize, gens: &[&[u8]]) -> MonomialIdeal {
        MonomialIdeal::new(nvars, gens.iter().map(|e| Monomial::from_exponents(e)))
    }

    #[test]
    fn one_quadric() {
        let t = betti_table(&ideal(2, &[&[1, 1]]), 32003, 15).unwrap();
        assert_eq!(t.get(0, 0), 1);
        assert_eq!(t.get(1, 0b11), 1);
        assert_eq!((t.pd(), t.depth(), t.reg()), (1, 1, 1));
    }

    #[test]
    fn maximal_ideal() {
        let t = betti_table(&ideal(2, &[&[1, 0], &[0, 1]]), 32003, 15).unwrap();
        assert_eq!((t.pd(), t.depth(), t.reg()), (2, 0, 0));
        assert_eq!(t.get(2, 0b11), 1);
    }

    #[test]
    fn zero_ideal() {
        let t = betti_table(&ideal(3, &[]), 32003, 15).unwrap();
        assert_eq!((t.pd(), t.depth(), t.reg()), (0, 3, 0));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            betti_table(&ideal(2, &[&[2, 0]]), 32003, 15),
            Err(Error::NotSquarefree)
        );
        assert!(matches!(
            betti_table(&ideal(16, &[&[1, 1]]), 32003, 15),
            Err(Error::SizeLimit { .. })
        ));
        assert_eq!(
            betti_table(&ideal(2, &[&[0, 0]]), 32003, 15),
            Err(Error::ZeroModule)
        );
    }

    #[test]
    fn serializes_entries() {
        let t = betti_table(&ideal(2, &[&[1, 1]]), 32003, 15).unwrap();
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(
            json,
            r#"[{"i":0,"sigma":[],"rank":1},{"i":1,"sigma":[0,1],"rank":1}]"#
        );
    }
}
