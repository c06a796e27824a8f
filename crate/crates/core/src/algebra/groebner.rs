use std::collections::{BTreeSet, HashSet};

use super::monomial::{Monomial, MAX_VARS};
use super::poly::{PolyRing, Polynomial};
use crate::error::Result;

/// Remainder of `f` on division by `basis`.
///
/// The highest reducible term is always reduced first, by the first basis
/// element (in list order) whose leading monomial divides it. No term of the
/// result is divisible by a leading monomial of the basis.
pub fn normal_form(ring: &PolyRing, f: &Polynomial, basis: &[Polynomial]) -> Result<Polynomial> {
    ring.check(f)?;
    for g in basis {
        ring.check(g)?;
    }
    let f = ring.sorted(f);
    let basis: Vec<Polynomial> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| ring.sorted(g))
        .collect();
    Ok(reduce(ring, &f, &basis))
}

/// [`normal_form`] for inputs already sorted in `ring`'s order.
pub(crate) fn reduce(ring: &PolyRing, f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let field = ring.field();
    let leads: Vec<(Monomial, u32)> = basis
        .iter()
        .map(|g| {
            let t = g.leading().expect("nonzero basis element");
            (t.mono, field.inv(t.coeff))
        })
        .collect();
    let mut rest = f.clone();
    let mut done = Vec::new();
    while let Some(&lead) = rest.leading() {
        let hit = leads.iter().position(|(lm, _)| lm.divides(&lead.mono));
        match hit {
            Some(k) => {
                let (lm, inv) = leads[k];
                let shift = lead.mono.div(&lm).expect("divisible");
                let c = field.mul(lead.coeff, inv);
                let tail = Polynomial::from_sorted(rest.terms()[1..].to_vec());
                rest = ring.sub_mul_term(&tail, c, &shift, &basis[k].terms()[1..]);
            }
            None => {
                done.push(lead);
                rest = Polynomial::from_sorted(rest.terms()[1..].to_vec());
            }
        }
    }
    Polynomial::from_sorted(done)
}

/// `S(f, g)` with both leading terms cancelled; inputs sorted and nonzero.
pub fn s_polynomial(ring: &PolyRing, f: &Polynomial, g: &Polynomial) -> Polynomial {
    let field = ring.field();
    let (a, b) = (f.leading().unwrap(), g.leading().unwrap());
    let l = a.mono.lcm(&b.mono);
    let fa = ring.scale(
        &ring.mul_monomial(f, &l.div(&a.mono).unwrap()),
        field.inv(a.coeff),
    );
    let gb = ring.mul_monomial(g, &l.div(&b.mono).unwrap());
    let gb_terms = gb.terms();
    ring.sub_mul_term(&fa, field.inv(b.coeff), &Monomial::ONE, gb_terms)
}

type PairKey = (u32, u32, [u8; MAX_VARS], usize, usize);

/// Reduced Gröbner basis of the ideal generated by `gens`.
///
/// Buchberger's algorithm with the coprime-leading-monomial criterion and the
/// chain criterion. S-pairs leave the queue by sugar degree, then degree of
/// their lcm, then the lcm in the term order, then index, so the run is
/// reproducible. The result is monic, inter-reduced and sorted by descending
/// leading monomial.
pub fn buchberger(ring: &PolyRing, gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
    for g in gens {
        ring.check(g)?;
    }
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut sugar: Vec<u32> = Vec::new();
    for g in gens {
        let g = ring.monic(&ring.sorted(g));
        if !g.is_zero() && !basis.contains(&g) {
            sugar.push(g.monomials().map(Monomial::degree).max().unwrap());
            basis.push(g);
        }
    }
    let lead = |p: &Polynomial| p.leading_monomial().unwrap();

    let mut queue: BTreeSet<PairKey> = BTreeSet::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let push_pair = |queue: &mut BTreeSet<PairKey>,
                     pending: &mut HashSet<(usize, usize)>,
                     basis: &[Polynomial],
                     sugar: &[u32],
                     i: usize,
                     j: usize| {
        let (li, lj) = (lead(&basis[i]), lead(&basis[j]));
        let l = li.lcm(&lj);
        let s = (sugar[i] + l.degree() - li.degree()).max(sugar[j] + l.degree() - lj.degree());
        queue.insert((s, l.degree(), ring.key(&l), i, j));
        pending.insert((i, j));
    };
    for j in 0..basis.len() {
        for i in 0..j {
            push_pair(&mut queue, &mut pending, &basis, &sugar, i, j);
        }
    }

    while let Some((s_deg, _, _, i, j)) = queue.pop_first() {
        pending.remove(&(i, j));
        let (li, lj) = (lead(&basis[i]), lead(&basis[j]));
        if li.is_coprime(&lj) {
            continue;
        }
        let l = li.lcm(&lj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lead(&basis[k]).divides(&l)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(ring, &basis[i], &basis[j]);
        let r = reduce(ring, &s, &basis);
        if !r.is_zero() {
            basis.push(ring.monic(&r));
            sugar.push(s_deg);
            let new = basis.len() - 1;
            for k in 0..new {
                push_pair(&mut queue, &mut pending, &basis, &sugar, k, new);
            }
        }
    }
    Ok(interreduce(ring, basis))
}

/// Minimal, then fully reduced, monic, sorted by descending leading monomial.
fn interreduce(ring: &PolyRing, basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let lg = g.leading_monomial().unwrap();
        let redundant = basis.iter().enumerate().any(|(q, h)| {
            let lh = h.leading_monomial().unwrap();
            q != k && lh.divides(&lg) && (lh != lg || q < k)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    minimal.sort_by(|a, b| {
        ring.cmp(
            &b.leading_monomial().unwrap(),
            &a.leading_monomial().unwrap(),
        )
    });
    let mut reduced = minimal.clone();
    for k in 0..reduced.len() {
        let others: Vec<Polynomial> = reduced
            .iter()
            .enumerate()
            .filter(|&(q, _)| q != k)
            .map(|(_, g)| g.clone())
            .collect();
        reduced[k] = ring.monic(&reduce(ring, &reduced[k], &others));
    }
    reduced
}
