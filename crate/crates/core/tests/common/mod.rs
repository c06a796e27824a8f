#![allow(dead_code)]

use bei::algebra::{
    buchberger, intersect, normal_form, s_polynomial, Fp, Ideal, Monomial, PolyRing, Polynomial,
    RingDescriptor, TermOrder,
};
use bei::monomial::{
    betti_table, boundary_matrix, hilbert_series, krull_dimension, reduced_homology_ranks,
    HilbertSeries, MonomialIdeal, SimplicialComplex,
};
use num_bigint::BigInt;
use proptest::prelude::*;

pub const P: u32 = 32003;

pub fn small_ring() -> PolyRing {
    PolyRing::new(
        RingDescriptor::new(2, 2, P).unwrap(),
        TermOrder::LexRowMajor,
    )
}

fn monomial(nvars: usize, max_exp: u8) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, nvars).prop_map(|e| Monomial::from_exponents(&e))
}

/// Polynomials in 4 variables with at most 3 squarefree terms.
pub fn polynomial() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-5i64..=5, monomial(4, 1)), 1..=3)
        .prop_map(|terms| small_ring().poly(terms))
}

pub fn generators() -> impl Strategy<Value = Vec<Polynomial>> {
    prop::collection::vec(polynomial(), 1..=3)
}

/// Generators plus a permutation of them.
pub fn shuffled_generators() -> impl Strategy<Value = (Vec<Polynomial>, Vec<Polynomial>)> {
    generators().prop_flat_map(|g| {
        let shuffled = Just(g.clone()).prop_shuffle();
        (Just(g), shuffled)
    })
}

/// Reduced bases agree under shuffling; S-polynomials and the inputs
/// reduce to zero.
pub fn check_buchberger(gens: &[Polynomial], shuffled: &[Polynomial]) -> Result<(), String> {
    let ring = small_ring();
    let a = buchberger(&ring, gens).map_err(|e| e.to_string())?;
    let b = buchberger(&ring, shuffled).map_err(|e| e.to_string())?;
    if a != b {
        return Err("reduced basis depends on generator order".into());
    }
    for (i, f) in a.iter().enumerate() {
        for g in &a[i + 1..] {
            let s = s_polynomial(&ring, f, g);
            if !normal_form(&ring, &s, &a).unwrap().is_zero() {
                return Err("S-polynomial does not reduce to zero".into());
            }
        }
    }
    if gens
        .iter()
        .any(|g| !normal_form(&ring, g, &a).unwrap().is_zero())
    {
        return Err("generator not in the ideal of its basis".into());
    }
    Ok(())
}

pub fn check_normal_form_idempotent(f: &Polynomial, gens: &[Polynomial]) -> Result<(), String> {
    let ring = small_ring();
    let once = normal_form(&ring, f, gens).unwrap();
    let twice = normal_form(&ring, &once, gens).unwrap();
    if once != twice {
        return Err("normal form is not idempotent".into());
    }
    Ok(())
}

pub fn check_intersection(a: &[Polynomial], b: &[Polynomial]) -> Result<(), String> {
    let ring = small_ring();
    let i = Ideal::new(*ring.ring(), a.to_vec()).unwrap();
    let j = Ideal::new(*ring.ring(), b.to_vec()).unwrap();
    let k = intersect(&i, &j).map_err(|e| e.to_string())?;
    let gi = i.reduced_basis(TermOrder::LexRowMajor).unwrap();
    let gj = j.reduced_basis(TermOrder::LexRowMajor).unwrap();
    for f in k.generators() {
        if !normal_form(&ring, f, &gi).unwrap().is_zero()
            || !normal_form(&ring, f, &gj).unwrap().is_zero()
        {
            return Err("intersection generator outside an operand".into());
        }
    }
    // The product lies in the intersection.
    let gk = k.reduced_basis(TermOrder::LexRowMajor).unwrap();
    for f in a {
        for g in b {
            if !normal_form(&ring, &ring.mul(f, g), &gk).unwrap().is_zero() {
                return Err("product outside the intersection".into());
            }
        }
    }
    Ok(())
}

/// Simplicial complexes on up to 7 vertices by random minimal non-faces.
pub fn complex() -> impl Strategy<Value = SimplicialComplex> {
    (2usize..=7).prop_flat_map(|n| {
        prop::collection::vec(1u64..(1 << n), 0..=4).prop_map(move |gens| {
            let ideal = MonomialIdeal::new(n, gens.into_iter().map(Monomial::from_mask));
            SimplicialComplex::stanley_reisner(&ideal).unwrap()
        })
    })
}

pub fn check_boundary_squares_to_zero(c: &SimplicialComplex) -> Result<(), String> {
    let f = Fp::new(P).unwrap();
    let all = (1u64 << c.nvars()) - 1;
    for k in 1..=c.nvars() {
        let upper = boundary_matrix(c, all, k + 1, f);
        let lower = boundary_matrix(c, all, k, f);
        let ncols = lower.first().map_or(0, Vec::len);
        for row in &upper {
            for col in 0..ncols {
                let s = row
                    .iter()
                    .zip(&lower)
                    .fold(0, |acc, (&a, l)| f.add(acc, f.mul(a, l[col])));
                if s != 0 {
                    return Err(format!("∂∂ ≠ 0 at k = {k}"));
                }
            }
        }
    }
    Ok(())
}

/// Reduced homology of a simplex vanishes; the boundary of a simplex on
/// `n` vertices has a single class in degree `n - 2`.
pub fn check_sphere_and_simplex(n: usize) -> Result<(), String> {
    let all = (1u64 << n) - 1;
    let simplex = reduced_homology_ranks(&SimplicialComplex::simplex(n), all, P).unwrap();
    if simplex.iter().any(|&r| r != 0) {
        return Err(format!("simplex on {n} vertices has homology {simplex:?}"));
    }
    let sphere = SimplicialComplex::from_nonfaces(n, vec![all]);
    let ranks = reduced_homology_ranks(&sphere, all, P).unwrap();
    let mut expected = vec![0; n + 1];
    expected[n - 1] = 1;
    if ranks != expected {
        return Err(format!("sphere on {n} vertices has homology {ranks:?}"));
    }
    Ok(())
}

/// Monomial ideals in up to 10 variables with small generators.
pub fn monomial_ideal() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=10).prop_flat_map(|n| {
        prop::collection::vec(monomial(n, 2), 0..=5)
            .prop_map(move |g| MonomialIdeal::new(n, g.into_iter().filter(|m| !m.is_one())))
    })
}

pub fn squarefree_ideal() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=8).prop_flat_map(|n| {
        prop::collection::vec(1u64..(1 << n), 0..=5)
            .prop_map(move |g| MonomialIdeal::new(n, g.into_iter().map(Monomial::from_mask)))
    })
}

/// Standard monomials of each degree up to `max_deg`, by enumeration.
pub fn count_standard_monomials(i: &MonomialIdeal, max_deg: usize) -> Vec<u64> {
    fn walk(i: &MonomialIdeal, exps: &mut Vec<u8>, left: usize, var: usize, out: &mut u64) {
        let n = i.nvars();
        if var == n - 1 {
            exps[var] = left as u8;
            if !i.contains(&Monomial::from_exponents(exps)) {
                *out += 1;
            }
            exps[var] = 0;
            return;
        }
        for e in 0..=left {
            exps[var] = e as u8;
            walk(i, exps, left - e, var + 1, out);
        }
        exps[var] = 0;
    }
    (0..=max_deg)
        .map(|d| {
            let mut count = 0;
            walk(i, &mut vec![0; i.nvars()], d, 0, &mut count);
            count
        })
        .collect()
}

pub fn check_hilbert_counts(i: &MonomialIdeal) -> Result<(), String> {
    let series = hilbert_series(i).expand(7);
    let counts = count_standard_monomials(i, 6);
    let expected: Vec<BigInt> = counts.into_iter().map(BigInt::from).collect();
    if series != expected {
        return Err(format!("series {series:?} vs counts {expected:?}"));
    }
    Ok(())
}

pub fn check_euler_numerator(i: &MonomialIdeal) -> Result<(), String> {
    if i.is_unit() {
        return Ok(());
    }
    let table = betti_table(i, P, 15).map_err(|e| e.to_string())?;
    let euler = HilbertSeries::new(
        table
            .euler_numerator()
            .into_iter()
            .map(BigInt::from)
            .collect(),
        i.nvars(),
    );
    if euler != hilbert_series(i) {
        return Err("alternating Betti sum differs from the Hilbert series".into());
    }
    if table.depth() + table.pd() != i.nvars() {
        return Err("depth + pd ≠ #vars".into());
    }
    Ok(())
}

pub fn check_dimension_is_face_size(i: &MonomialIdeal) -> Result<(), String> {
    let c = SimplicialComplex::stanley_reisner(i).unwrap();
    let dim = krull_dimension(&hilbert_series(i));
    if dim != c.max_face_size() {
        return Err(format!("dim {dim} vs largest face {}", c.max_face_size()));
    }
    Ok(())
}
