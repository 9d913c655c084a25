//! The finite field `F_q = F_p[t]/(m(t))` and its multiplicative group.
//!
//! A [`FieldSpec`] pins one concrete model of `F_q` by the triple
//! `(p, n, m)`. Elements carry a handle to their spec and exactly `n`
//! coefficients; two elements interoperate only when their triples agree.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::num;
use crate::polynomial::{self, CoeffField, Poly};
use crate::prime_field::PrimeModulus;

pub use crate::prime_field::ArithOp;

/// Largest field size [`enumerate_units`] will walk by default.
pub const ENUMERATION_CAP: u64 = 1 << 20;

/// Baby-step table for discrete logarithms to the canonical generator.
#[derive(Debug)]
pub(crate) struct DlogTable {
    /// Number of baby steps `s`; the table holds `gamma^j` for `j < s`.
    pub step: u64,
    /// Element index of `gamma^j` mapped to `j`.
    pub baby: HashMap<u64, u64>,
    /// Coefficients of `gamma^(-s)`.
    pub giant: Vec<u64>,
}

#[derive(Debug)]
struct SpecInner {
    p: PrimeModulus,
    n: usize,
    modulus: Poly<PrimeModulus>,
    /// `p - m_i` for the lower coefficients of `m`.
    neg_modulus: Vec<u64>,
    q: u64,
    // write-once memos
    order_factors: OnceLock<Vec<(u64, u32)>>,
    generator: OnceLock<u64>,
    dlog: OnceLock<DlogTable>,
}

/// A validated field description `(p, n, m)`, cheap to clone.
#[derive(Clone)]
pub struct FieldSpec(Arc<SpecInner>);

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.n == other.0.n && self.0.modulus == other.0.modulus)
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.descriptor())
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.descriptor())
    }
}

/// Builds `F_{p^n}`, defaulting the modulus to [`polynomial::find_irreducible`].
pub fn make_field(p: u64, n: usize, modulus: Option<Poly<PrimeModulus>>) -> Result<FieldSpec> {
    let prime = PrimeModulus::new(p)?;
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    let q = num::checked_pow_63(p, n).ok_or(Error::FieldTooLarge { p, n })?;
    let modulus = match modulus {
        None => polynomial::find_irreducible(prime, n)?,
        Some(m) => {
            if *m.field() != prime {
                return Err(Error::FieldMismatch);
            }
            if m.degree() != Some(n) {
                return Err(Error::DegreeMismatch {
                    modulus: m.to_string(),
                    expected: n,
                    found: m.degree().unwrap_or(0),
                });
            }
            if !m.is_monic() {
                return Err(Error::NotMonic(m.to_string()));
            }
            if !polynomial::is_irreducible(&m)? {
                return Err(Error::Reducible(m.to_string()));
            }
            m
        }
    };
    let neg_modulus = modulus.coeffs()[..n].iter().map(|&c| prime.neg(c)).collect();
    Ok(FieldSpec(Arc::new(SpecInner {
        p: prime,
        n,
        modulus,
        neg_modulus,
        q,
        order_factors: OnceLock::new(),
        generator: OnceLock::new(),
        dlog: OnceLock::new(),
    })))
}

impl FieldSpec {
    pub fn prime(&self) -> PrimeModulus {
        self.0.p
    }

    pub fn p(&self) -> u64 {
        self.0.p.get()
    }

    pub fn degree(&self) -> usize {
        self.0.n
    }

    pub fn q(&self) -> u64 {
        self.0.q
    }

    /// Order of the multiplicative group, `q - 1`.
    pub fn unit_count(&self) -> u64 {
        self.0.q - 1
    }

    pub fn modulus(&self) -> &Poly<PrimeModulus> {
        &self.0.modulus
    }

    /// `F(p^n; m)` with `m` in the polynomial text format.
    pub fn descriptor(&self) -> String {
        format!("F({}^{}; {})", self.p(), self.degree(), self.modulus())
    }

    /// Prime factorization of `q - 1`, computed once by trial division.
    pub fn order_factors(&self) -> &[(u64, u32)] {
        self.0
            .order_factors
            .get_or_init(|| num::factorize(self.unit_count()))
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            spec: self.clone(),
            coeffs: vec![0; self.degree()],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.constant(1)
    }

    /// Image of the integer `c` in the prime subfield.
    pub fn constant(&self, c: u64) -> FieldElement {
        let mut e = self.zero();
        e.coeffs[0] = c % self.p();
        e
    }

    /// Image of the integer `c` in the prime subfield; negative values allowed.
    pub fn constant_i64(&self, c: i64) -> FieldElement {
        let mut e = self.zero();
        e.coeffs[0] = self.prime().reduce_i128(c as i128);
        e
    }

    /// The class of `t` (reduced, so `t = -m(0)` when `n = 1`).
    pub fn t(&self) -> FieldElement {
        self.from_poly(&Poly::x(self.prime()))
            .expect("t lies in the field")
    }

    /// Reduces a polynomial over `F_p` modulo `m`.
    pub fn from_poly(&self, f: &Poly<PrimeModulus>) -> Result<FieldElement> {
        let r = f.rem(self.modulus())?;
        self.from_coeffs(r.coeffs())
    }

    /// Element from up to `n` coefficients (low degree first), reduced mod p.
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() > self.degree() {
            return Err(Error::Parse(format!(
                "{} coefficients given for a degree-{} field",
                coeffs.len(),
                self.degree()
            )));
        }
        let mut e = self.zero();
        for (slot, &c) in e.coeffs.iter_mut().zip(coeffs) {
            *slot = c % self.p();
        }
        Ok(e)
    }

    /// Inverse of [`FieldElement::index`].
    pub fn element_at(&self, index: ElementIndex) -> Result<FieldElement> {
        if index.0 >= self.q() {
            return Err(Error::Parse(format!(
                "index {} out of range for q = {}",
                index.0,
                self.q()
            )));
        }
        let mut e = self.zero();
        let mut v = index.0;
        for slot in e.coeffs.iter_mut() {
            *slot = v % self.p();
            v /= self.p();
        }
        Ok(e)
    }

    pub(crate) fn dlog_table(&self, init: impl FnOnce() -> DlogTable) -> &DlogTable {
        self.0.dlog.get_or_init(init)
    }

    fn check_same(&self, other: &FieldSpec) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    // Coefficient kernels on raw slices of length n.

    /// Product of two coefficient vectors reduced modulo `m`.
    ///
    /// Accumulation is lazy: `q < 2^63` forces `n p^2 < 2^64` for the
    /// convolution and `(n-1) p^2 + p < 2^64` during reduction, so `%` runs
    /// only once per output slot.
    fn mul_raw(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let p = self.p();
        let n = self.degree();
        // n <= 62 because 2^n <= q < 2^63
        let mut buf = [0u64; 128];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (slot, &bj) in buf[i..i + n].iter_mut().zip(b) {
                *slot += ai * bj;
            }
        }
        for slot in &mut buf[..2 * n - 1] {
            *slot %= p;
        }
        // m is monic: t^n = -(m_0 + ... + m_{n-1} t^{n-1})
        let neg_m = &self.0.neg_modulus;
        for i in (n..2 * n - 1).rev() {
            let c = buf[i] % p;
            if c == 0 {
                continue;
            }
            for (slot, &nm) in buf[i - n..i].iter_mut().zip(neg_m) {
                *slot += c * nm;
            }
        }
        buf[..n].iter().map(|&c| c % p).collect()
    }

    fn pow_raw(&self, a: &[u64], mut e: u64) -> Vec<u64> {
        let mut acc = self.one().coeffs;
        let mut base = a.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_raw(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul_raw(&base, &base);
            }
        }
        acc
    }

    fn is_one_raw(a: &[u64]) -> bool {
        a[0] == 1 && a[1..].iter().all(|&c| c == 0)
    }

    /// Multiplicative order of a unit, by stripping prime factors from `q - 1`.
    fn order_raw(&self, a: &[u64]) -> u64 {
        let mut order = self.unit_count();
        for &(prime, exp) in self.order_factors() {
            for _ in 0..exp {
                if Self::is_one_raw(&self.pow_raw(a, order / prime)) {
                    order /= prime;
                } else {
                    break;
                }
            }
        }
        order
    }

    /// The unit of least [`ElementIndex`] whose order is `q - 1`.
    pub fn generator(&self) -> FieldElement {
        let index = *self.0.generator.get_or_init(|| {
            let target = self.unit_count();
            (1..self.q())
                .find(|&i| {
                    let e = self.element_at(ElementIndex(i)).unwrap();
                    self.order_raw(&e.coeffs) == target
                })
                .expect("the multiplicative group is cyclic")
        });
        self.element_at(ElementIndex(index)).unwrap()
    }
}

impl CoeffField for FieldSpec {
    type Elem = FieldElement;
    const VAR: &'static str = "x";

    fn zero(&self) -> FieldElement {
        FieldSpec::zero(self)
    }
    fn one(&self) -> FieldElement {
        FieldSpec::one(self)
    }
    fn is_zero(&self, a: &FieldElement) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        a.add_unchecked(b)
    }
    fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        a.sub_unchecked(b)
    }
    fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        FieldElement {
            spec: self.clone(),
            coeffs: self.mul_raw(&a.coeffs, &b.coeffs),
        }
    }
    fn inv(&self, a: &FieldElement) -> Option<FieldElement> {
        a.inv().ok()
    }
    fn format_elem(&self, a: &FieldElement) -> String {
        a.to_string()
    }
}

/// Canonical integer encoding `c0 + c1 p + ... + c_{n-1} p^(n-1)` of an element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementIndex(pub u64);

/// A residue class of `F_p[t]` modulo `m`, stored as exactly `n` coefficients.
#[derive(Clone)]
pub struct FieldElement {
    spec: FieldSpec,
    coeffs: Vec<u64>,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.spec == other.spec
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElement({})", self)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_poly().to_string())
    }
}

impl FieldElement {
    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    /// Fixed-width coefficients, `t^i` at index `i`.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        FieldSpec::is_one_raw(&self.coeffs)
    }

    /// True for elements of the prime subfield `F_p`.
    pub fn is_prime_subfield(&self) -> bool {
        self.coeffs[1..].iter().all(|&c| c == 0)
    }

    pub fn index(&self) -> ElementIndex {
        let p = self.spec.p();
        ElementIndex(self.coeffs.iter().rev().fold(0, |acc, &c| acc * p + c))
    }

    /// The normalized representative polynomial over `F_p`.
    pub fn to_poly(&self) -> Poly<PrimeModulus> {
        Poly::from_coeffs(self.spec.prime(), self.coeffs.clone())
    }

    fn add_unchecked(&self, other: &Self) -> Self {
        let p = self.spec.prime();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| p.add(a, b))
            .collect();
        FieldElement {
            spec: self.spec.clone(),
            coeffs,
        }
    }

    fn sub_unchecked(&self, other: &Self) -> Self {
        let p = self.spec.prime();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| p.sub(a, b))
            .collect();
        FieldElement {
            spec: self.spec.clone(),
            coeffs,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.spec.check_same(&other.spec)?;
        Ok(self.add_unchecked(other))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.spec.check_same(&other.spec)?;
        Ok(self.sub_unchecked(other))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.spec.check_same(&other.spec)?;
        Ok(FieldElement {
            spec: self.spec.clone(),
            coeffs: self.spec.mul_raw(&self.coeffs, &other.coeffs),
        })
    }

    /// `self^e` by square-and-multiply; `0^0 = 1`.
    pub fn pow(&self, e: u64) -> Self {
        FieldElement {
            spec: self.spec.clone(),
            coeffs: self.spec.pow_raw(&self.coeffs, e),
        }
    }

    /// Inverse via extended Euclid on the representative modulo `m`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::NotInvertible);
        }
        let (d, s, _) = self.to_poly().ext_gcd(self.spec.modulus())?;
        debug_assert!(d.is_constant());
        self.spec.from_poly(&s)
    }

    /// Least `k >= 1` with `self^k = 1`.
    pub fn order(&self) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        Ok(self.spec.order_raw(&self.coeffs))
    }
}

/// `a op b` in `F_q`.
pub fn ff_arith(op: ArithOp, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
    match op {
        ArithOp::Add => a.add(b),
        ArithOp::Sub => a.sub(b),
        ArithOp::Mul => a.mul(b),
    }
}

pub fn ff_inv(a: &FieldElement) -> Result<FieldElement> {
    a.inv()
}

pub fn ff_pow(a: &FieldElement, e: u64) -> FieldElement {
    a.pow(e)
}

pub fn element_order(a: &FieldElement) -> Result<u64> {
    a.order()
}

pub fn find_generator(spec: &FieldSpec) -> FieldElement {
    spec.generator()
}

/// All units of `spec` in [`ElementIndex`] order, refusing fields above `cap`.
pub fn enumerate_units_capped(
    spec: &FieldSpec,
    cap: u64,
) -> Result<impl Iterator<Item = FieldElement> + '_> {
    if spec.q() > cap {
        return Err(Error::CapExceeded {
            what: "unit enumeration",
            size: spec.q(),
            cap,
        });
    }
    Ok((1..spec.q()).map(move |i| spec.element_at(ElementIndex(i)).unwrap()))
}

/// [`enumerate_units_capped`] with the default [`ENUMERATION_CAP`].
pub fn enumerate_units(spec: &FieldSpec) -> Result<impl Iterator<Item = FieldElement> + '_> {
    enumerate_units_capped(spec, ENUMERATION_CAP)
}

/// Parses `5+3*t+7*t^2`, an index list `[5,3,7]`, or a bare integer.
///
/// Terms of degree `>= n` are accepted and reduced modulo `m`.
pub fn parse_element(spec: &FieldSpec, text: &str) -> Result<FieldElement> {
    let trimmed = text.trim();
    if let Some(inner) = trimmed.strip_prefix('[') {
        let inner = inner
            .strip_suffix(']')
            .ok_or_else(|| Error::Parse(format!("unterminated list {text:?}")))?;
        let p = spec.prime();
        let coeffs = if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(|part| {
                    let part = part.trim();
                    part.parse::<i128>()
                        .map(|v| p.reduce_i128(v))
                        .map_err(|_| Error::Parse(format!("bad coefficient {part:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        return spec.from_coeffs(&coeffs);
    }
    let p = spec.prime();
    let mut acc = spec.zero();
    let t = Poly::x(p);
    for term in polynomial::parse_terms(p, trimmed)? {
        let mono = if (term.exp as usize) < spec.degree() {
            let mut e = spec.zero();
            e.coeffs[term.exp as usize] = 1;
            e
        } else {
            spec.from_poly(&t.pow_mod(term.exp, spec.modulus())?)?
        };
        acc = acc.add_unchecked(&FieldElement {
            spec: spec.clone(),
            coeffs: spec.mul_raw(&mono.coeffs, &spec.constant(term.coeff).coeffs),
        });
    }
    Ok(acc)
}

pub fn format_element(a: &FieldElement) -> String {
    a.to_string()
}

/// Parses a field descriptor `F(p^n; m)`, `F(p^n)`, `F(p; m)` or `F(p)`.
///
/// Without a modulus the canonical default is used.
pub fn parse_field(text: &str) -> Result<FieldSpec> {
    let bad = || Error::Parse(format!("bad field descriptor {text:?}"));
    let inner = text
        .trim()
        .strip_prefix("F(")
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(bad)?;
    let (size, modulus) = match inner.split_once(';') {
        Some((size, m)) => (size, Some(m.trim())),
        None => (inner, None),
    };
    let (p, n) = match size.split_once('^') {
        Some((p, n)) => (p.trim(), n.trim()),
        None => (size.trim(), "1"),
    };
    let p: u64 = p.parse().map_err(|_| bad())?;
    let n: usize = n.parse().map_err(|_| bad())?;
    let prime = PrimeModulus::new(p)?;
    let modulus = modulus
        .map(|m| polynomial::parse_poly(prime, m))
        .transpose()?;
    make_field(p, n, modulus)
}
