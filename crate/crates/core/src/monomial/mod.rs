//! Monomial ideals: Hilbert series by pivot recursion and, for squarefree
//! ideals, graded Betti numbers by Hochster's formula.

mod betti;
mod hilbert;
mod homology;

use serde::Serialize;

use crate::algebra::Monomial;

pub use betti::{betti_table, BettiEntry, BettiTable, HOCHSTER_MAX_VARS};
pub(crate) use hilbert::binomial;
pub use hilbert::{hilbert_series, krull_dimension, multiplicity, HilbertSeries};
pub use homology::{boundary_matrix, rank_mod_p, reduced_homology_ranks, SimplicialComplex};

/// A monomial ideal given by its minimal generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

/// Drops duplicates and multiples, sorts what is left.
pub(crate) fn minimize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out.sort();
    out
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let gens = minimize(gens.into_iter().collect());
        debug_assert!(gens
            .iter()
            .all(|g| g.highest_used().is_none_or(|i| i < nvars)));
        MonomialIdeal { nvars, gens }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Generators as exponent vectors of length `nvars`, for reports.
    pub fn exponent_rows(&self) -> Vec<Vec<u8>> {
        self.gens
            .iter()
            .map(|g| g.exponents()[..self.nvars].to_vec())
            .collect()
    }
}

/// Whether every generator has all exponents at most one.
pub fn is_squarefree(i: &MonomialIdeal) -> bool {
    i.is_squarefree()
}

impl Serialize for MonomialIdeal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("MonomialIdeal", 2)?;
        st.serialize_field("nvars", &self.nvars)?;
        st.serialize_field("generators", &self.exponent_rows())?;
        st.end()
    }
}
