//! Exact model of the double cover of `S_n` inside the Clifford algebra on
//! `n` anticommuting generators with `e_i² = +1`.
//!
//! A transposition `(i,j)` lifts to `v = (e_i − e_j)/√2`. Products of an
//! even number of such factors have rational coefficients, so only even
//! products are exposed. The lift of a permutation acts on generators by
//! `e_k ↦ x⁻¹ e_k x`, which matches the left-to-right composition used for
//! permutations: the product of lifts of `σ` and `τ` lifts `σ·τ`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::nielsen::{NielsenTuple, Shape};
use crate::perm::Perm;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpinError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("bad generator indices {indices:?} for degree {degree}")]
    BadIndices { indices: Vec<usize>, degree: usize },
    #[error("odd number ({0}) of transposition factors has no rational lift")]
    OddProduct(usize),
    #[error("empty product has no degree")]
    EmptyProduct,
    #[error("lifting invariant needs a tuple of 3-cycles, got {0:?}")]
    WrongShape(Shape),
    #[error("lifting invariant needs degree at least 4, got {0}")]
    DegreeTooSmall(usize),
    #[error("degree {0} exceeds the 64 generators supported")]
    DegreeTooLarge(usize),
    #[error("product of lifts is not ±1: {0}")]
    NotScalar(String),
}

/// Monomials are strictly increasing index sets, stored as bitmasks over
/// 0-based generator indices.
type Monomial = u64;

/// Sign of `e_A · e_B` after sorting, with repeated generators contracted.
fn monomial_sign(a: Monomial, b: Monomial) -> bool {
    let mut swaps = 0u32;
    let mut rest = b;
    while rest != 0 {
        let bit = rest.trailing_zeros();
        rest &= rest - 1;
        let above = if bit == 63 { 0 } else { a >> (bit + 1) };
        swaps += above.count_ones();
    }
    swaps % 2 == 1
}

#[derive(Clone, PartialEq, Eq)]
pub struct CliffordElement {
    degree: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl CliffordElement {
    fn check_degree(degree: usize) -> Result<(), SpinError> {
        if degree > 64 {
            Err(SpinError::DegreeTooLarge(degree))
        } else {
            Ok(())
        }
    }

    pub fn zero(degree: usize) -> Result<CliffordElement, SpinError> {
        Self::check_degree(degree)?;
        Ok(CliffordElement { degree, terms: BTreeMap::new() })
    }

    pub fn scalar(degree: usize, value: BigRational) -> Result<CliffordElement, SpinError> {
        let mut out = Self::zero(degree)?;
        if !value.is_zero() {
            out.terms.insert(0, value);
        }
        Ok(out)
    }

    pub fn one(degree: usize) -> Result<CliffordElement, SpinError> {
        Self::scalar(degree, BigRational::one())
    }

    /// The generator `e_i`, 1-based.
    pub fn generator(i: usize, degree: usize) -> Result<CliffordElement, SpinError> {
        Self::check_degree(degree)?;
        if i == 0 || i > degree {
            return Err(SpinError::BadIndices { indices: vec![i], degree });
        }
        let mut terms = BTreeMap::new();
        terms.insert(1u64 << (i - 1), BigRational::one());
        Ok(CliffordElement { degree, terms })
    }

    /// Element with the given terms; each monomial is a list of 1-based
    /// generator indices (any order, repeats contracted).
    pub fn from_terms(degree: usize, terms: &[(&[usize], BigRational)]) -> Result<CliffordElement, SpinError> {
        let mut out = Self::zero(degree)?;
        for (idx, coeff) in terms {
            let mut mono = Self::one(degree)?;
            for &i in idx.iter() {
                mono = mono.mul(&Self::generator(i, degree)?);
            }
            out = out.add(&mono.scale(coeff));
        }
        Ok(out)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms as (1-based sorted indices, coefficient).
    pub fn terms(&self) -> Vec<(Vec<usize>, BigRational)> {
        self.terms
            .iter()
            .map(|(&m, c)| ((0..64).filter(|b| m >> b & 1 == 1).map(|b| b + 1).collect(), c.clone()))
            .collect()
    }

    pub fn as_scalar(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn accumulate(terms: &mut BTreeMap<Monomial, BigRational>, m: Monomial, c: BigRational) {
        use std::collections::btree_map::Entry;
        match terms.entry(m) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &CliffordElement) -> CliffordElement {
        assert_eq!(self.degree, other.degree);
        let mut terms = self.terms.clone();
        for (&m, c) in &other.terms {
            Self::accumulate(&mut terms, m, c.clone());
        }
        CliffordElement { degree: self.degree, terms }
    }

    pub fn neg(&self) -> CliffordElement {
        CliffordElement {
            degree: self.degree,
            terms: self.terms.iter().map(|(&m, c)| (m, -c)).collect(),
        }
    }

    pub fn scale(&self, s: &BigRational) -> CliffordElement {
        if s.is_zero() {
            return CliffordElement { degree: self.degree, terms: BTreeMap::new() };
        }
        CliffordElement {
            degree: self.degree,
            terms: self.terms.iter().map(|(&m, c)| (m, c * s)).collect(),
        }
    }

    /// Product for operands already known to share a degree.
    pub(crate) fn mul(&self, other: &CliffordElement) -> CliffordElement {
        debug_assert_eq!(self.degree, other.degree);
        let mut terms = BTreeMap::new();
        for (&ma, ca) in &self.terms {
            for (&mb, cb) in &other.terms {
                let c = ca * cb;
                let c = if monomial_sign(ma, mb) { -c } else { c };
                Self::accumulate(&mut terms, ma ^ mb, c);
            }
        }
        CliffordElement { degree: self.degree, terms }
    }

    pub fn pow(&self, k: u32) -> CliffordElement {
        let mut out = CliffordElement::one(self.degree).expect("degree already checked");
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Largest `k` such that some coefficient has denominator `2^k`; `None`
    /// if some denominator is not a power of two.
    pub fn max_dyadic_exponent(&self) -> Option<u64> {
        let mut best = 0;
        for c in self.terms.values() {
            let d = c.denom();
            if d.is_negative() || d.is_zero() {
                return None;
            }
            let k = d.trailing_zeros().unwrap_or(0);
            if d >> k != BigInt::one() {
                return None;
            }
            best = best.max(k);
        }
        Some(best)
    }
}

impl fmt::Display for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms()
            .into_iter()
            .map(|(idx, c)| {
                if idx.is_empty() {
                    c.to_string()
                } else {
                    let mono: Vec<String> = idx.iter().map(|i| format!("e{i}")).collect();
                    format!("{c}*{}", mono.join(""))
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cl{}[{}]", self.degree, self)
    }
}

pub fn clifford_mul(a: &CliffordElement, b: &CliffordElement) -> Result<CliffordElement, SpinError> {
    if a.degree != b.degree {
        return Err(SpinError::DegreeMismatch(a.degree, b.degree));
    }
    Ok(a.mul(b))
}

/// The lift `(e_i − e_j)/√2` of the transposition `(i,j)`. It has no
/// rational representation on its own and is only usable in even products.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairFactor {
    i: usize,
    j: usize,
    degree: usize,
}

pub fn lift_transposition(i: usize, j: usize, degree: usize) -> Result<PairFactor, SpinError> {
    CliffordElement::check_degree(degree)?;
    if i == 0 || j == 0 || i > degree || j > degree || i >= j {
        return Err(SpinError::BadIndices { indices: vec![i, j], degree });
    }
    Ok(PairFactor { i, j, degree })
}

impl PairFactor {
    /// The unnormalized vector `e_i − e_j`.
    fn vector(&self) -> CliffordElement {
        let ei = CliffordElement::generator(self.i, self.degree).expect("checked");
        let ej = CliffordElement::generator(self.j, self.degree).expect("checked");
        ei.add(&ej.neg())
    }

    pub fn points(&self) -> (usize, usize) {
        (self.i, self.j)
    }
}

/// Product `v_1 ⋯ v_{2k}` of transposition lifts, computed as the product
/// of the unnormalized vectors divided by `2^k`.
pub fn even_product(factors: &[PairFactor]) -> Result<CliffordElement, SpinError> {
    if factors.len() % 2 == 1 {
        return Err(SpinError::OddProduct(factors.len()));
    }
    let degree = match factors.first() {
        Some(f) => f.degree,
        None => return Err(SpinError::EmptyProduct),
    };
    let mut acc = CliffordElement::one(degree)?;
    for f in factors {
        if f.degree != degree {
            return Err(SpinError::DegreeMismatch(degree, f.degree));
        }
        acc = acc.mul(&f.vector());
    }
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    for _ in 0..factors.len() / 2 {
        acc = acc.scale(&half);
    }
    Ok(acc)
}

/// The unique order-3 lift of the 3-cycle `(a,b,c)` (`a→b→c→a`).
pub fn lift_3cycle(a: usize, b: usize, c: usize, degree: usize) -> Result<CliffordElement, SpinError> {
    if a == b || b == c || a == c {
        return Err(SpinError::BadIndices { indices: vec![a, b, c], degree });
    }
    let pair = |x: usize, y: usize| lift_transposition(x.min(y), x.max(y), degree);
    // (a,b,c) = (a,b)·(a,c) left to right
    let w0 = even_product(&[pair(a, b)?, pair(a, c)?])?;
    let one = CliffordElement::one(degree)?;
    let w = if w0.pow(3) == one { w0 } else { w0.neg() };
    assert!(w.pow(3) == one, "no order-3 lift found for ({a},{b},{c})");
    Ok(w)
}

fn lift_of_three_cycle(p: &Perm) -> Result<CliffordElement, SpinError> {
    let cycles = p.cycles();
    match cycles.as_slice() {
        [c] if c.len() == 3 => lift_3cycle(c[0], c[1], c[2], p.degree()),
        _ => Err(SpinError::WrongShape(Shape::Mixed)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LiftingInvariant {
    Plus,
    Minus,
}

impl LiftingInvariant {
    pub fn value(self) -> i8 {
        match self {
            LiftingInvariant::Plus => 1,
            LiftingInvariant::Minus => -1,
        }
    }
}

impl Serialize for LiftingInvariant {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_i8(self.value())
    }
}

impl fmt::Display for LiftingInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:+}", self.value())
    }
}

/// Sign of the product of order-3 lifts of a tuple of 3-cycles whose
/// product is the identity.
pub fn lifting_invariant(t: &NielsenTuple) -> Result<LiftingInvariant, SpinError> {
    if t.shape() != Shape::ThreeCycles {
        return Err(SpinError::WrongShape(t.shape()));
    }
    lifting_invariant_of(t.entries(), t.degree())
}

/// Same as [`lifting_invariant`] for raw entries (all 3-cycles, product 1).
pub fn lifting_invariant_of(entries: &[Perm], degree: usize) -> Result<LiftingInvariant, SpinError> {
    if degree < 4 {
        return Err(SpinError::DegreeTooSmall(degree));
    }
    let mut acc = CliffordElement::one(degree)?;
    for e in entries {
        if e.degree() != degree {
            return Err(SpinError::DegreeMismatch(degree, e.degree()));
        }
        acc = acc.mul(&lift_of_three_cycle(e)?);
    }
    match acc.as_scalar() {
        Some(s) if s.is_one() => Ok(LiftingInvariant::Plus),
        Some(s) if (-&s).is_one() => Ok(LiftingInvariant::Minus),
        _ => Err(SpinError::NotScalar(acc.to_string())),
    }
}
