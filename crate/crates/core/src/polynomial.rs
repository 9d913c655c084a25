//! Dense univariate polynomials over an abstract coefficient field.
//!
//! The same engine runs over `F_p` (moduli `m(t)`) and over `F_q` (the
//! division `x^q - x = h(x)(x^r - a) + c x`). Coefficient index `i` holds the
//! coefficient of `x^i`; stored vectors never end in a zero.

use std::fmt;

use crate::error::{Error, Result};
use crate::num;
use crate::prime_field::PrimeModulus;

/// Field operations a coefficient domain must provide.
pub trait CoeffField: Clone + PartialEq + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug;

    /// Variable name used when printing polynomials over this field.
    const VAR: &'static str;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn format_elem(&self, a: &Self::Elem) -> String;

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.sub(&self.zero(), a)
    }
}

impl CoeffField for PrimeModulus {
    type Elem = u64;
    const VAR: &'static str = "t";

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        PrimeModulus::add(*self, *a, *b)
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        PrimeModulus::sub(*self, *a, *b)
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        PrimeModulus::mul(*self, *a, *b)
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        PrimeModulus::inv(*self, *a)
    }
    fn neg(&self, a: &u64) -> u64 {
        PrimeModulus::neg(*self, *a)
    }
    fn format_elem(&self, a: &u64) -> String {
        a.to_string()
    }
}

/// Arithmetic selector for [`poly_arith`].
pub use crate::prime_field::ArithOp;

#[derive(Clone, PartialEq)]
pub struct Poly<F: CoeffField> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: CoeffField> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.to_text(F::VAR))
    }
}

impl<F: CoeffField> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(F::VAR))
    }
}

impl<F: CoeffField> Poly<F> {
    pub fn zero(field: F) -> Self {
        Poly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: F) -> Self {
        let one = field.one();
        Self::from_coeffs(field, vec![one])
    }

    /// Builds a polynomial from low-to-high coefficients, trimming trailing zeros.
    pub fn from_coeffs(field: F, coeffs: Vec<F::Elem>) -> Self {
        let mut p = Poly { field, coeffs };
        p.normalize();
        p
    }

    /// `c * x^degree`.
    pub fn monomial(field: F, c: F::Elem, degree: usize) -> Self {
        if field.is_zero(&c) {
            return Self::zero(field);
        }
        let mut coeffs = vec![field.zero(); degree + 1];
        coeffs[degree] = c;
        Poly { field, coeffs }
    }

    /// The polynomial `x`.
    pub fn x(field: F) -> Self {
        let one = field.one();
        Self::monomial(field, one, 1)
    }

    fn normalize(&mut self) {
        while let Some(last) = self.coeffs.last() {
            if self.field.is_zero(last) {
                self.coeffs.pop();
            } else {
                break;
            }
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&F::Elem> {
        self.coeffs.last()
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> F::Elem {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| *c == self.field.one())
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| f.add(&self.coeff(i), &other.coeff(i)))
            .collect();
        Ok(Self::from_coeffs(f.clone(), coeffs))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| f.sub(&self.coeff(i), &other.coeff(i)))
            .collect();
        Ok(Self::from_coeffs(f.clone(), coeffs))
    }

    /// Schoolbook product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(f.clone()));
        }
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if f.is_zero(b) {
                    continue;
                }
                out[i + j] = f.add(&out[i + j], &f.mul(a, b));
            }
        }
        Ok(Self::from_coeffs(f.clone(), out))
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.field;
        let coeffs = self.coeffs.iter().map(|a| f.mul(a, c)).collect();
        Self::from_coeffs(f.clone(), coeffs)
    }

    /// Scales to leading coefficient one; the zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) => {
                let inv = self.field.inv(lc).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Euclidean division `self = q * divisor + r` with `deg r < deg divisor`.
    ///
    /// Zero coefficients of the divisor are skipped, so dividing by a sparse
    /// polynomial such as `x^r - a` costs `O(deg self)` field operations.
    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.check_field(divisor)?;
        let f = &self.field;
        let dg = divisor.degree().ok_or(Error::DivisionByZero)?;
        let Some(df) = self.degree() else {
            return Ok((Self::zero(f.clone()), Self::zero(f.clone())));
        };
        if df < dg {
            return Ok((Self::zero(f.clone()), self.clone()));
        }
        let lc_inv = f
            .inv(&divisor.coeffs[dg])
            .expect("nonzero leading coefficient");
        let lower: Vec<(usize, &F::Elem)> = divisor.coeffs[..dg]
            .iter()
            .enumerate()
            .filter(|(_, c)| !f.is_zero(c))
            .collect();

        let mut rem = self.coeffs.clone();
        let mut quot = vec![f.zero(); df - dg + 1];
        for i in (dg..=df).rev() {
            if f.is_zero(&rem[i]) {
                continue;
            }
            let qc = f.mul(&rem[i], &lc_inv);
            let shift = i - dg;
            for &(j, gj) in &lower {
                rem[shift + j] = f.sub(&rem[shift + j], &f.mul(&qc, gj));
            }
            rem[i] = f.zero();
            quot[shift] = qc;
        }
        rem.truncate(dg);
        Ok((
            Self::from_coeffs(f.clone(), quot),
            Self::from_coeffs(f.clone(), rem),
        ))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Monic greatest common divisor by Euclid's algorithm.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroGcd);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Extended Euclid: returns `(d, s, u)` with `s*self + u*other = d`, `d` monic.
    pub fn ext_gcd(&self, other: &Self) -> Result<(Self, Self, Self)> {
        self.check_field(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroGcd);
        }
        let f = self.field.clone();
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(f.clone()), Self::zero(f.clone()));
        let (mut u0, mut u1) = (Self::zero(f.clone()), Self::one(f));
        while !r1.is_zero() {
            let (quot, rem) = r0.divmod(&r1)?;
            let s2 = s0.sub(&quot.mul(&s1)?)?;
            let u2 = u0.sub(&quot.mul(&u1)?)?;
            (r0, r1) = (r1, rem);
            (s0, s1) = (s1, s2);
            (u0, u1) = (u1, u2);
        }
        let inv = self.field.inv(r0.leading().unwrap()).unwrap();
        Ok((r0.scale(&inv), s0.scale(&inv), u0.scale(&inv)))
    }

    /// `self^e mod modulus` by repeated squaring.
    pub fn pow_mod(&self, mut e: u64, modulus: &Self) -> Result<Self> {
        let mut base = self.rem(modulus)?;
        let mut acc = Self::one(self.field.clone()).rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?.rem(modulus)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?.rem(modulus)?;
            }
        }
        Ok(acc)
    }

    /// Text form `c0+c1*v+c2*v^2+...` in ascending degree, zero terms omitted,
    /// unit coefficients elided on non-constant terms.
    pub fn to_text(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let f = &self.field;
        let one = f.one();
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            let coeff = f.format_elem(c);
            let coeff = if coeff.parse::<u64>().is_ok() {
                coeff
            } else {
                format!("({coeff})")
            };
            terms.push(if i == 0 {
                coeff
            } else if *c == one {
                mono
            } else {
                format!("{coeff}*{mono}")
            });
        }
        terms.join("+")
    }
}

/// `f op g` for polynomials over the same coefficient field.
pub fn poly_arith<F: CoeffField>(op: ArithOp, f: &Poly<F>, g: &Poly<F>) -> Result<Poly<F>> {
    match op {
        ArithOp::Add => f.add(g),
        ArithOp::Sub => f.sub(g),
        ArithOp::Mul => f.mul(g),
    }
}

pub fn poly_divmod<F: CoeffField>(f: &Poly<F>, g: &Poly<F>) -> Result<(Poly<F>, Poly<F>)> {
    f.divmod(g)
}

pub fn poly_gcd<F: CoeffField>(f: &Poly<F>, g: &Poly<F>) -> Result<Poly<F>> {
    f.gcd(g)
}

/// Rabin's irreducibility test over `F_p`.
///
/// `m` of degree `d` is irreducible iff `x^(p^d) = x (mod m)` and
/// `gcd(x^(p^(d/l)) - x, m) = 1` for every prime `l | d`.
pub fn is_irreducible(m: &Poly<PrimeModulus>) -> Result<bool> {
    let d = match m.degree() {
        None | Some(0) => return Err(Error::ConstantPolynomial),
        Some(d) => d,
    };
    if d == 1 {
        return Ok(true);
    }
    let m = m.monic();
    let field = *m.field();
    let p = field.get();
    let x = Poly::x(field).rem(&m)?;

    let maximal: Vec<usize> = num::factorize(d as u64)
        .into_iter()
        .map(|(l, _)| d / l as usize)
        .collect();

    // frob = x^(p^i) mod m, advanced one Frobenius step at a time
    let mut frob = x.clone();
    for i in 1..=d {
        frob = frob.pow_mod(p, &m)?;
        if maximal.contains(&i) && !frob.sub(&x)?.gcd(&m)?.is_constant() {
            return Ok(false);
        }
    }
    Ok(frob == x)
}

/// The monic irreducible polynomial of degree `n` over `F_p` whose lower
/// coefficients have the smallest encoding `c0 + c1 p + ... + c_{n-1} p^(n-1)`.
pub fn find_irreducible(p: PrimeModulus, n: usize) -> Result<Poly<PrimeModulus>> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    let base = p.get();
    let mut digits = vec![0u64; n];
    loop {
        let mut coeffs = digits.clone();
        coeffs.push(1);
        let cand = Poly::from_coeffs(p, coeffs);
        if is_irreducible(&cand)? {
            return Ok(cand);
        }
        // odometer increment, constant term least significant
        let mut i = 0;
        loop {
            digits[i] += 1;
            if digits[i] < base {
                break;
            }
            digits[i] = 0;
            i += 1;
            assert!(i < n, "irreducible polynomials exist in every degree");
        }
    }
}

/// Upper bound on exponents accepted by the polynomial parser.
pub const MAX_PARSED_DEGREE: u64 = 1 << 24;

/// One parsed monomial: coefficient already reduced mod p, and exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Term {
    pub coeff: u64,
    pub exp: u64,
}

/// Tokenizes `c0 + c1*t + c2*t^2 + ...` (any order, optional whitespace,
/// `-` allowed, variable `t` or `x`, `*` optional) into monomials.
pub(crate) fn parse_terms(p: PrimeModulus, text: &str) -> Result<Vec<Term>> {
    let err = |msg: &str| Error::Parse(format!("{msg} in {text:?}"));
    let mut s: Vec<char> = Vec::with_capacity(text.len());
    let mut gap = false;
    for c in text.chars() {
        if c.is_whitespace() {
            gap = true;
            continue;
        }
        if gap && c.is_ascii_digit() && s.last().is_some_and(|l| l.is_ascii_digit()) {
            return Err(err("whitespace inside a number"));
        }
        gap = false;
        s.push(c);
    }
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut pos = 0;
    let mut terms = Vec::new();
    let mut first = true;

    // reads a decimal literal, reducing modulo `modulus` as it goes
    let read_int = |pos: &mut usize, modulus: Option<u64>| -> Option<u64> {
        let start = *pos;
        let mut acc: u64 = 0;
        while *pos < s.len() && s[*pos].is_ascii_digit() {
            let d = s[*pos].to_digit(10).unwrap() as u64;
            acc = match modulus {
                Some(m) => ((acc as u128 * 10 + d as u128) % m as u128) as u64,
                None => acc.checked_mul(10)?.checked_add(d)?,
            };
            *pos += 1;
        }
        (*pos > start).then_some(acc)
    };

    while pos < s.len() {
        let mut negative = false;
        match s[pos] {
            '+' => pos += 1,
            '-' => {
                negative = true;
                pos += 1
            }
            _ if first => {}
            c => return Err(err(&format!("expected '+' or '-' before {c:?}"))),
        }
        first = false;

        let coeff = read_int(&mut pos, Some(p.get()));
        let mut exp = 0;
        let has_var = if pos < s.len() && s[pos] == '*' {
            pos += 1;
            if coeff.is_none() {
                return Err(err("'*' without a coefficient"));
            }
            if pos >= s.len() || !matches!(s[pos], 't' | 'x') {
                return Err(err("expected variable after '*'"));
            }
            true
        } else {
            pos < s.len() && matches!(s[pos], 't' | 'x')
        };
        if has_var {
            pos += 1;
            exp = 1;
            if pos < s.len() && s[pos] == '^' {
                pos += 1;
                exp = read_int(&mut pos, None).ok_or_else(|| err("bad exponent"))?;
                if exp > MAX_PARSED_DEGREE {
                    return Err(err("exponent too large"));
                }
            }
        } else if coeff.is_none() {
            return Err(err("expected a term"));
        }
        let mut coeff = coeff.unwrap_or(1) % p.get();
        if negative {
            coeff = p.neg(coeff);
        }
        terms.push(Term { coeff, exp });
    }
    Ok(terms)
}

/// Parses a polynomial over `F_p` from its text form.
pub fn parse_poly(p: PrimeModulus, text: &str) -> Result<Poly<PrimeModulus>> {
    let terms = parse_terms(p, text)?;
    let deg = terms.iter().map(|t| t.exp).max().unwrap_or(0) as usize;
    let mut coeffs = vec![0u64; deg + 1];
    for t in terms {
        let slot = &mut coeffs[t.exp as usize];
        *slot = p.add(*slot, t.coeff);
    }
    Ok(Poly::from_coeffs(p, coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fp(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    fn poly(p: u64, c: &[u64]) -> Poly<PrimeModulus> {
        Poly::from_coeffs(fp(p), c.iter().map(|v| v % p).collect())
    }

    #[test]
    fn arith_examples() {
        let prod = poly_arith(ArithOp::Mul, &poly(3, &[1, 1]), &poly(3, &[2, 1])).unwrap();
        assert_eq!(prod, poly(3, &[2, 0, 1]));

        let f = poly(7, &[3, 0, 5, 1]);
        assert_eq!(f.add(&Poly::zero(fp(7))).unwrap(), f);

        let diff = poly(5, &[5 - 2, 1]).mul(&poly(5, &[2, 1])).unwrap();
        assert_eq!(diff, poly(5, &[1, 0, 1]));

        assert_eq!(
            poly(5, &[1]).add(&poly(7, &[1])),
            Err(Error::FieldMismatch)
        );
    }

    #[test]
    fn divmod_examples() {
        // x^9 - x by x^2 - 2 over F_3
        let mut f = vec![0u64; 10];
        f[9] = 1;
        f[1] = 2;
        let f = poly(3, &f);
        let g = poly(3, &[1, 0, 1]);
        let (q, r) = f.divmod(&g).unwrap();
        assert_eq!(q, poly(3, &[0, 2, 0, 1, 0, 2, 0, 1]));
        assert!(r.is_zero());

        // x^q - x by x
        let mut big = vec![0u64; 26];
        big[25] = 1;
        big[1] = 4;
        let (q, r) = poly(5, &big).divmod(&poly(5, &[0, 1])).unwrap();
        let mut expect = vec![0u64; 25];
        expect[24] = 1;
        expect[0] = 4;
        assert_eq!(q, poly(5, &expect));
        assert!(r.is_zero());

        let small = poly(5, &[1, 2]);
        let (q, r) = small.divmod(&poly(5, &[1, 0, 3])).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, small);

        assert_eq!(small.divmod(&Poly::zero(fp(5))), Err(Error::DivisionByZero));
    }

    #[test]
    fn gcd_examples() {
        let g = poly(5, &[4, 0, 1]).gcd(&poly(5, &[4, 1])).unwrap();
        assert_eq!(g, poly(5, &[4, 1]));

        let f = poly(7, &[3, 2, 4]);
        assert_eq!(f.gcd(&Poly::zero(fp(7))).unwrap(), f.monic());

        let g = poly(3, &[1, 0, 1]).gcd(&poly(3, &[1, 1, 1])).unwrap();
        assert_eq!(g, poly(3, &[1]));

        assert_eq!(
            Poly::zero(fp(3)).gcd(&Poly::zero(fp(3))),
            Err(Error::ZeroGcd)
        );
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = poly(13, &[3, 7, 1]);
        let m = poly(13, &[11, 2, 0, 1]);
        let (d, s, u) = a.ext_gcd(&m).unwrap();
        assert_eq!(d, poly(13, &[1]));
        assert_eq!(s.mul(&a).unwrap().add(&u.mul(&m).unwrap()).unwrap(), d);
    }

    #[test]
    fn irreducibility_examples() {
        assert!(is_irreducible(&poly(3, &[1, 0, 1])).unwrap());
        assert!(is_irreducible(&poly(13, &[11, 2, 0, 1])).unwrap());
        assert!(!is_irreducible(&poly(5, &[1, 0, 1])).unwrap());
        assert!(is_irreducible(&poly(5, &[1, 1, 1])).unwrap());
        assert_eq!(
            is_irreducible(&poly(5, &[3])),
            Err(Error::ConstantPolynomial)
        );
        assert_eq!(
            is_irreducible(&Poly::zero(fp(5))),
            Err(Error::ConstantPolynomial)
        );
    }

    #[test]
    fn find_irreducible_examples() {
        assert_eq!(find_irreducible(fp(3), 1).unwrap(), poly(3, &[0, 1]));
        assert_eq!(find_irreducible(fp(3), 2).unwrap(), poly(3, &[1, 0, 1]));
        assert_eq!(find_irreducible(fp(5), 2).unwrap(), poly(5, &[2, 0, 1]));
        assert_eq!(find_irreducible(fp(5), 0), Err(Error::ZeroDegree));
    }

    /// All monic polynomials of exactly `deg` over F_p, in canonical order.
    fn monic_of_degree(p: u64, deg: usize) -> Vec<Poly<PrimeModulus>> {
        let count = p.pow(deg as u32);
        (0..count)
            .map(|mut code| {
                let mut c = Vec::with_capacity(deg + 1);
                for _ in 0..deg {
                    c.push(code % p);
                    code /= p;
                }
                c.push(1);
                poly(p, &c)
            })
            .collect()
    }

    fn brute_irreducible(m: &Poly<PrimeModulus>) -> bool {
        let p = m.field().get();
        let d = m.degree().unwrap();
        (1..=d / 2).all(|k| {
            monic_of_degree(p, k)
                .iter()
                .all(|g| !m.rem(g).unwrap().is_zero())
        })
    }

    #[test]
    fn rabin_matches_trial_division() {
        for p in [2u64, 3, 5, 7] {
            for d in 1..=4 {
                for m in monic_of_degree(p, d) {
                    assert_eq!(is_irreducible(&m).unwrap(), brute_irreducible(&m), "{m}");
                }
            }
        }
    }

    #[test]
    fn find_irreducible_is_minimal() {
        for p in [2u64, 3, 5, 7] {
            for n in 1..=3 {
                let found = find_irreducible(fp(p), n).unwrap();
                assert!(is_irreducible(&found).unwrap());
                for cand in monic_of_degree(p, n) {
                    if cand == found {
                        break;
                    }
                    assert!(!is_irreducible(&cand).unwrap(), "{cand} precedes {found}");
                }
            }
        }
    }

    #[test]
    fn text_format() {
        assert_eq!(poly(13, &[11, 2, 0, 1]).to_string(), "11+2*t+t^3");
        assert_eq!(Poly::zero(fp(3)).to_string(), "0");
        assert_eq!(poly(13, &[0, 1]).to_string(), "t");
        for s in ["t^3+2*t+11", "11 + 2t + t^3", "t^3 + 2 * t + 11", "-2+t^3+2*t+13"] {
            assert_eq!(parse_poly(fp(13), s).unwrap(), poly(13, &[11, 2, 0, 1]), "{s}");
        }
        assert_eq!(parse_poly(fp(5), "0").unwrap(), Poly::zero(fp(5)));
        assert_eq!(parse_poly(fp(5), "x^2+x").unwrap(), poly(5, &[0, 1, 1]));
        for bad in ["", "t^", "3*", "2 3", "t+*2", "t^99999999999", "y"] {
            assert!(parse_poly(fp(5), bad).is_err(), "{bad:?}");
        }
    }

    fn arb_poly(p: u64, max_len: usize) -> impl Strategy<Value = Poly<PrimeModulus>> {
        proptest::collection::vec(0..p, 0..max_len).prop_map(move |c| poly(p, &c))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn division_reconstructs(
            (f, g) in prop_oneof![Just(2u64), Just(3), Just(13), Just(65_537)]
                .prop_flat_map(|p| (arb_poly(p, 24), arb_poly(p, 10)))
        ) {
            prop_assume!(!g.is_zero());
            let (q, r) = f.divmod(&g).unwrap();
            prop_assert_eq!(q.mul(&g).unwrap().add(&r).unwrap(), f);
            prop_assert!(r.degree().is_none_or(|dr| dr < g.degree().unwrap()));
        }

        #[test]
        fn gcd_divides_both(f in arb_poly(7, 12), g in arb_poly(7, 12)) {
            prop_assume!(!(f.is_zero() && g.is_zero()));
            let d = f.gcd(&g).unwrap();
            prop_assert!(d.is_monic());
            prop_assert!(f.rem(&d).unwrap().is_zero());
            prop_assert!(g.rem(&d).unwrap().is_zero());
        }

        #[test]
        fn text_round_trip(f in arb_poly(13, 8)) {
            prop_assert_eq!(parse_poly(fp(13), &f.to_string()).unwrap(), f);
        }
    }
}
