use super::groebner::{buchberger, reduce};
use super::monomial::Monomial;
use super::order::TermOrder;
use super::poly::{PolyRing, Polynomial, RingDescriptor};
use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;

/// Generators in a grid ring plus an optional cached reduced Gröbner basis.
#[derive(Debug, Clone)]
pub struct Ideal {
    ring: RingDescriptor,
    gens: Vec<Polynomial>,
    cached: Option<(TermOrder, Vec<Polynomial>)>,
}

impl Ideal {
    pub fn new(ring: RingDescriptor, gens: Vec<Polynomial>) -> Result<Self> {
        let check = PolyRing::new(ring, TermOrder::LexRowMajor);
        for g in &gens {
            check.check(g)?;
        }
        Ok(Ideal {
            ring,
            gens,
            cached: None,
        })
    }

    /// The ideal generated by the given variables.
    pub fn variables(ring: RingDescriptor, vars: impl IntoIterator<Item = usize>) -> Result<Self> {
        let pr = PolyRing::new(ring, TermOrder::LexRowMajor);
        Self::new(
            ring,
            vars.into_iter()
                .map(|v| pr.monomial(Monomial::var(v)))
                .collect(),
        )
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    /// Reduced Gröbner basis under `order`, computed once per order.
    pub fn groebner_basis(&mut self, order: TermOrder) -> Result<&[Polynomial]> {
        if self.cached.as_ref().map(|(o, _)| *o) != Some(order) {
            let gb = self.reduced_basis(order)?;
            self.cached = Some((order, gb));
        }
        Ok(&self.cached.as_ref().unwrap().1)
    }

    /// Reduced Gröbner basis under `order`, bypassing the cache.
    pub fn reduced_basis(&self, order: TermOrder) -> Result<Vec<Polynomial>> {
        if let Some((o, gb)) = &self.cached {
            if *o == order {
                return Ok(gb.clone());
            }
        }
        buchberger(&PolyRing::new(self.ring, order), &self.gens)
    }

    /// Membership test by reduction against the reduced basis.
    pub fn contains(&self, f: &Polynomial, order: TermOrder) -> Result<bool> {
        let pr = PolyRing::new(self.ring, order);
        pr.check(f)?;
        let gb = self.reduced_basis(order)?;
        Ok(reduce(&pr, &pr.sorted(f), &gb).is_zero())
    }

    /// `I + J`.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(self.ring, gens)
    }
}

/// `I ∩ J` by elimination: adjoin `t`, take `t·I + (1-t)·J`, compute a
/// Gröbner basis with `t` above the grid, and keep the `t`-free elements.
/// The returned generators form a Gröbner basis under lex-row-major.
pub fn intersect(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    if i.ring != j.ring || i.ring.aux != 0 {
        return Err(Error::RingMismatch);
    }
    let grid = i.ring;
    let big = grid.extended(1)?;
    let pr = PolyRing::new(big, TermOrder::BlockElimination);
    let t = pr.monomial(Monomial::var(0));
    let one_minus_t = pr.poly([(1, Monomial::ONE), (-1, Monomial::var(0))]);
    let mut gens = Vec::with_capacity(i.gens.len() + j.gens.len());
    for f in &i.gens {
        gens.push(pr.mul(&pr.lift(f, &grid), &t));
    }
    for g in &j.gens {
        gens.push(pr.mul(&pr.lift(g, &grid), &one_minus_t));
    }
    let gb = buchberger(&pr, &gens)?;
    let out_ring = PolyRing::new(grid, TermOrder::LexRowMajor);
    let kept: Vec<Polynomial> = gb
        .iter()
        .filter_map(|g| pr.project(g, 1))
        .map(|g| out_ring.sorted(&g))
        .collect();
    Ideal::new(grid, kept)
}

/// Equality of ideals as equality of reduced Gröbner bases under `order`.
pub fn ideals_equal(i: &Ideal, j: &Ideal, order: TermOrder) -> Result<bool> {
    if i.ring != j.ring {
        return Err(Error::RingMismatch);
    }
    Ok(i.reduced_basis(order)? == j.reduced_basis(order)?)
}

/// Leading monomials of a reduced Gröbner basis.
pub fn initial_ideal(ring: &RingDescriptor, gb: &[Polynomial]) -> MonomialIdeal {
    MonomialIdeal::new(ring.nvars(), gb.iter().filter_map(|g| g.leading_monomial()))
}
