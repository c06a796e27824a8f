use std::cmp::Ordering;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::field::Fp;
use super::monomial::{Monomial, MAX_VARS};
use super::order::TermOrder;
use crate::error::{Error, Result};

/// `GF(p)[t_1, …, t_aux, x_{1,1}, …, x_{rows,cols}]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RingDescriptor {
    pub rows: usize,
    pub cols: usize,
    pub prime: u32,
    pub aux: usize,
}

impl RingDescriptor {
    pub fn new(rows: usize, cols: usize, prime: u32) -> Result<Self> {
        Self::with_aux(rows, cols, prime, 0)
    }

    pub fn with_aux(rows: usize, cols: usize, prime: u32, aux: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidSpec(format!("{rows}x{cols} grid is empty")));
        }
        Fp::new(prime)?;
        let nvars = rows * cols + aux;
        if nvars > MAX_VARS {
            return Err(Error::SizeLimit {
                what: "ring variable count",
                size: nvars,
                limit: MAX_VARS,
            });
        }
        Ok(RingDescriptor {
            rows,
            cols,
            prime,
            aux,
        })
    }

    pub fn nvars(&self) -> usize {
        self.aux + self.rows * self.cols
    }

    pub fn grid_vars(&self) -> usize {
        self.rows * self.cols
    }

    pub fn field(&self) -> Fp {
        Fp::new(self.prime).expect("validated at construction")
    }

    /// Storage index of `x_{i,j}`, 1-based `i, j`.
    pub fn var(&self, i: usize, j: usize) -> usize {
        assert!(
            (1..=self.rows).contains(&i) && (1..=self.cols).contains(&j),
            "x[{i},{j}] outside the {}x{} grid",
            self.rows,
            self.cols
        );
        self.aux + (i - 1) * self.cols + (j - 1)
    }

    pub fn x(&self, i: usize, j: usize) -> Monomial {
        Monomial::var(self.var(i, j))
    }

    /// `(i, j)` of a grid variable, or `None` for an auxiliary.
    pub fn grid_position(&self, index: usize) -> Option<(usize, usize)> {
        let g = index.checked_sub(self.aux)?;
        (g < self.grid_vars()).then(|| (g / self.cols + 1, g % self.cols + 1))
    }

    pub fn var_name(&self, index: usize) -> String {
        match self.grid_position(index) {
            Some((i, j)) => format!("x[{i},{j}]"),
            None => format!("t[{}]", index + 1),
        }
    }

    /// Same grid and prime with `aux` auxiliary variables.
    pub fn extended(&self, aux: usize) -> Result<Self> {
        Self::with_aux(self.rows, self.cols, self.prime, aux)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: u32,
    pub mono: Monomial,
}

/// Terms with nonzero coefficients, strictly descending in the term order of
/// the [`PolyRing`] that produced them. The zero polynomial has no terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.mono)
    }

    pub(crate) fn from_sorted(terms: Vec<Term>) -> Self {
        Polynomial { terms }
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter().map(|t| &t.mono)
    }
}

/// A ring together with a term order: every arithmetic routine runs through
/// one of these so term lists stay sorted.
#[derive(Debug, Clone)]
pub struct PolyRing {
    ring: RingDescriptor,
    order: TermOrder,
    field: Fp,
    precedence: Vec<usize>,
    /// The precedence is the storage order, so array comparison is lex.
    storage_order: bool,
}

impl PolyRing {
    pub fn new(ring: RingDescriptor, order: TermOrder) -> Self {
        let precedence = order.precedence(&ring);
        let storage_order = precedence.iter().enumerate().all(|(k, &v)| k == v);
        PolyRing {
            ring,
            order,
            field: ring.field(),
            precedence,
            storage_order,
        }
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        if self.storage_order {
            return a.cmp(b);
        }
        for &v in &self.precedence {
            match a.exponent(v).cmp(&b.exponent(v)) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }

    /// Exponents permuted into precedence order; comparing keys as arrays is
    /// comparing monomials in the term order.
    pub fn key(&self, m: &Monomial) -> [u8; MAX_VARS] {
        let mut k = [0u8; MAX_VARS];
        for (slot, &v) in k.iter_mut().zip(&self.precedence) {
            *slot = m.exponent(v);
        }
        k
    }

    /// Builds a polynomial from arbitrary `(coefficient, monomial)` pairs:
    /// reduces coefficients mod `p`, merges like terms, drops zeros, sorts.
    pub fn poly(&self, terms: impl IntoIterator<Item = (i64, Monomial)>) -> Polynomial {
        let mut v: Vec<Term> = terms
            .into_iter()
            .map(|(c, mono)| Term {
                coeff: self.field.from_i64(c),
                mono,
            })
            .collect();
        self.canonicalize(&mut v);
        Polynomial { terms: v }
    }

    fn canonicalize(&self, v: &mut Vec<Term>) {
        v.sort_by(|a, b| self.cmp(&b.mono, &a.mono));
        let mut out: Vec<Term> = Vec::with_capacity(v.len());
        for t in v.drain(..) {
            match out.last_mut() {
                Some(last) if last.mono == t.mono => {
                    last.coeff = self.field.add(last.coeff, t.coeff);
                }
                _ => out.push(t),
            }
        }
        out.retain(|t| t.coeff != 0);
        *v = out;
    }

    /// Re-sorts a polynomial produced under another order.
    pub fn sorted(&self, f: &Polynomial) -> Polynomial {
        let mut terms = f.terms.clone();
        terms.sort_by(|a, b| self.cmp(&b.mono, &a.mono));
        Polynomial { terms }
    }

    pub fn monomial(&self, m: Monomial) -> Polynomial {
        Polynomial {
            terms: vec![Term { coeff: 1, mono: m }],
        }
    }

    /// `x_{ik} x_{jl} - x_{il} x_{jk}`.
    pub fn minor(&self, i: usize, j: usize, k: usize, l: usize) -> Polynomial {
        let r = &self.ring;
        self.poly([
            (1, r.x(i, k).mul(&r.x(j, l))),
            (-1, r.x(i, l).mul(&r.x(j, k))),
        ])
    }

    /// Fails with [`Error::RingMismatch`] if `f` uses a variable outside the
    /// ring.
    pub fn check(&self, f: &Polynomial) -> Result<()> {
        let n = self.ring.nvars();
        if f.terms
            .iter()
            .any(|t| t.mono.highest_used().is_some_and(|i| i >= n))
        {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn add(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.sub_mul_term(
            f,
            self.field.neg(1 % self.field.prime()),
            &Monomial::ONE,
            &g.terms,
        )
    }

    pub fn sub(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.sub_mul_term(f, 1, &Monomial::ONE, &g.terms)
    }

    pub fn scale(&self, f: &Polynomial, c: u32) -> Polynomial {
        let c = c % self.field.prime();
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: f
                .terms
                .iter()
                .map(|t| Term {
                    coeff: self.field.mul(t.coeff, c),
                    mono: t.mono,
                })
                .collect(),
        }
    }

    pub fn mul_monomial(&self, f: &Polynomial, m: &Monomial) -> Polynomial {
        Polynomial {
            terms: f
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff,
                    mono: t.mono.mul(m),
                })
                .collect(),
        }
    }

    pub fn mul(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        for t in &g.terms {
            let neg = self.field.neg(t.coeff);
            acc = self.sub_mul_term(&acc, neg, &t.mono, &f.terms);
        }
        acc
    }

    /// Scales to leading coefficient one.
    pub fn monic(&self, f: &Polynomial) -> Polynomial {
        match f.leading() {
            None => Polynomial::zero(),
            Some(t) if t.coeff == 1 => f.clone(),
            Some(t) => self.scale(f, self.field.inv(t.coeff)),
        }
    }

    /// `f - c * m * g` by a single merge; `f` and `g` must be sorted.
    pub(crate) fn sub_mul_term(
        &self,
        f: &Polynomial,
        c: u32,
        m: &Monomial,
        g: &[Term],
    ) -> Polynomial {
        let fld = self.field;
        let mut out = Vec::with_capacity(f.terms.len() + g.len());
        let mut fi = f.terms.iter().peekable();
        let mut gi = g.iter().map(|t| Term {
            coeff: fld.neg(fld.mul(c, t.coeff)),
            mono: t.mono.mul(m),
        });
        let mut gnext = gi.next();
        loop {
            match (fi.peek(), gnext) {
                (None, None) => break,
                (Some(&&a), None) => {
                    out.push(a);
                    fi.next();
                }
                (None, Some(b)) => {
                    if b.coeff != 0 {
                        out.push(b);
                    }
                    gnext = gi.next();
                }
                (Some(&&a), Some(b)) => match self.cmp(&a.mono, &b.mono) {
                    Ordering::Greater => {
                        out.push(a);
                        fi.next();
                    }
                    Ordering::Less => {
                        if b.coeff != 0 {
                            out.push(b);
                        }
                        gnext = gi.next();
                    }
                    Ordering::Equal => {
                        let s = fld.add(a.coeff, b.coeff);
                        if s != 0 {
                            out.push(Term {
                                coeff: s,
                                mono: a.mono,
                            });
                        }
                        fi.next();
                        gnext = gi.next();
                    }
                },
            }
        }
        Polynomial { terms: out }
    }

    /// Moves a polynomial of the grid ring into `self`, which must be the
    /// same grid with auxiliaries prepended.
    pub fn lift(&self, f: &Polynomial, from: &RingDescriptor) -> Polynomial {
        let shift = self.ring.aux - from.aux;
        let mut terms: Vec<Term> = f
            .terms
            .iter()
            .map(|t| Term {
                coeff: t.coeff,
                mono: t.mono.shifted_up(shift),
            })
            .collect();
        terms.sort_by(|a, b| self.cmp(&b.mono, &a.mono));
        Polynomial { terms }
    }

    /// Drops `shift` leading auxiliaries; `None` if the polynomial uses them.
    pub(crate) fn project(&self, f: &Polynomial, shift: usize) -> Option<Polynomial> {
        let terms = f
            .terms
            .iter()
            .map(|t| {
                t.mono.shifted_down(shift).map(|mono| Term {
                    coeff: t.coeff,
                    mono,
                })
            })
            .collect::<Option<Vec<_>>>()?;
        Some(Polynomial { terms })
    }

    /// Human-readable form, e.g. `x[1,1]*x[2,2] + -x[1,2]*x[2,1]`.
    pub fn format(&self, f: &Polynomial) -> String {
        if f.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = f.terms.iter().map(|t| self.format_term(t)).collect();
        parts.join(" + ")
    }

    fn format_term(&self, t: &Term) -> String {
        let c = self.field.to_symmetric(t.coeff);
        let mut vars = Vec::new();
        for v in 0..self.ring.nvars() {
            let e = t.mono.exponent(v);
            if e == 1 {
                vars.push(self.ring.var_name(v));
            } else if e > 1 {
                vars.push(format!("{}^{e}", self.ring.var_name(v)));
            }
        }
        let body = vars.join("*");
        let mut s = String::new();
        match (c, body.is_empty()) {
            (_, true) => {
                let _ = write!(s, "{c}");
            }
            (1, false) => s.push_str(&body),
            (-1, false) => {
                let _ = write!(s, "-{body}");
            }
            (_, false) => {
                let _ = write!(s, "{c}*{body}");
            }
        }
        s
    }
}
