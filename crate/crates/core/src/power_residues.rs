//! Power-residue queries on `F_q`.
//!
//! With `d = gcd(r, q - 1)`, a unit `a` is an r-th power iff
//! `a^((q-1)/d) = 1`. When `r | q - 1` this is the classical criterion
//! with exponent `(q-1)/r`; when `d = 1` every unit is an r-th power. The
//! set of r-th powers is the subgroup of index `d`, so there are
//! `(q-1)/d` of them and each has exactly `d` roots.
//!
//! Zero is treated as the r-th power of itself with the single root 0 and
//! is left out of every count.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::ext_field::{DlogTable, FieldElement, FieldSpec, ENUMERATION_CAP};
use crate::num;
use crate::polynomial::Poly;
use crate::prime_field::{PrimeModulus, Residue};

/// Largest `q` accepted by [`discrete_log`].
pub const BSGS_CAP: u64 = 1 << 40;

/// Largest `q` for which the division identity is materialized and checked.
pub const IDENTITY_DEGREE_CAP: u64 = 1_000_000;

/// Outcome of an r-th power query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueReport {
    pub a: FieldElement,
    pub r: u64,
    /// `gcd(r, q - 1)`.
    pub d: u64,
    /// `a^((q-1)/d)`.
    pub euler_value: FieldElement,
    pub is_power: bool,
    /// `d` when `a` is a nonzero r-th power, 0 when it is not, 1 for `a = 0`.
    pub num_roots: u64,
    /// Root of least element index, present iff `is_power`.
    pub canonical_root: Option<FieldElement>,
}

fn check_r(r: u64) -> Result<()> {
    if r == 0 {
        Err(Error::ZeroExponent)
    } else {
        Ok(())
    }
}

/// `a^((q-1)/r)` for `r | q - 1`; always a root of unity of order dividing `r`.
pub fn euler_exponent_value(a: &FieldElement, r: u64) -> Result<FieldElement> {
    check_r(r)?;
    if a.is_zero() {
        return Err(Error::ZeroElement);
    }
    let order = a.spec().unit_count();
    if !order.is_multiple_of(r) {
        return Err(Error::NotDivisor { r, order });
    }
    Ok(a.pow(order / r))
}

/// Decides whether `a` is an r-th power in `F_q` for any `r >= 1`.
pub fn is_rth_power(a: &FieldElement, r: u64) -> Result<ResidueReport> {
    check_r(r)?;
    let spec = a.spec();
    let order = spec.unit_count();
    let d = num::gcd(r, order);
    if a.is_zero() {
        return Ok(ResidueReport {
            a: a.clone(),
            r,
            d,
            euler_value: a.clone(),
            is_power: true,
            num_roots: 1,
            canonical_root: Some(a.clone()),
        });
    }
    let euler_value = a.pow(order / d);
    let is_power = euler_value.is_one();
    let canonical_root = if is_power {
        let root = rth_root(a, r)?;
        debug_assert_eq!(root.count, d);
        root.canonical_root
    } else {
        None
    };
    Ok(ResidueReport {
        a: a.clone(),
        r,
        d,
        euler_value,
        is_power,
        num_roots: if is_power { d } else { 0 },
        canonical_root,
    })
}

/// Number of r-th powers among the units.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PowerCount {
    /// `(q - 1) / gcd(r, q - 1)`.
    pub total: u64,
    /// For `r = 2`: squares other than 0 and 1, i.e. `total - 1`.
    pub nontrivial_squares: Option<u64>,
    /// Set when `r = 2` and `p = 2`, where squaring is a bijection and the
    /// odd-characteristic count `(q-1)/2 - 1` does not apply.
    pub outside_odd_hypothesis: bool,
}

/// Closed-form count; no enumeration.
pub fn count_rth_powers(spec: &FieldSpec, r: u64) -> Result<PowerCount> {
    check_r(r)?;
    let order = spec.unit_count();
    let total = order / num::gcd(r, order);
    let (nontrivial_squares, outside_odd_hypothesis) = if r == 2 {
        (Some(total - 1), spec.p() == 2)
    } else {
        (None, false)
    };
    Ok(PowerCount {
        total,
        nontrivial_squares,
        outside_odd_hypothesis,
    })
}

/// `{ gamma^(j r) : j = 1..(q-1)/d }` for the canonical generator `gamma`,
/// sorted by element index.
pub fn list_rth_powers(spec: &FieldSpec, r: u64) -> Result<Vec<FieldElement>> {
    list_rth_powers_capped(spec, r, ENUMERATION_CAP)
}

pub fn list_rth_powers_capped(spec: &FieldSpec, r: u64, cap: u64) -> Result<Vec<FieldElement>> {
    check_r(r)?;
    if spec.q() > cap {
        return Err(Error::CapExceeded {
            what: "power table",
            size: spec.q(),
            cap,
        });
    }
    let order = spec.unit_count();
    let k = order / num::gcd(r, order);
    let step = spec.generator().pow(r % order);
    let mut out = Vec::with_capacity(k as usize);
    let mut cur = spec.one();
    for _ in 0..k {
        cur = cur.mul(&step)?;
        out.push(cur.clone());
    }
    out.sort_by_key(FieldElement::index);
    Ok(out)
}

fn build_dlog_table(spec: &FieldSpec) -> DlogTable {
    let order = spec.unit_count();
    let step = (order as f64).sqrt().ceil() as u64;
    let step = (step.max(1)..).find(|s| s * s >= order).unwrap();
    let gamma = spec.generator();
    let mut baby = HashMap::with_capacity(step as usize);
    let mut cur = spec.one();
    for j in 0..step {
        baby.entry(cur.index().0).or_insert(j);
        cur = cur.mul(&gamma).unwrap();
    }
    let giant = cur.inv().expect("gamma^s is a unit").coeffs().to_vec();
    DlogTable { step, baby, giant }
}

/// `k in [1, q-1]` with `gamma^k = a`, by baby-step giant-step against the
/// canonical generator.
pub fn discrete_log(a: &FieldElement) -> Result<u64> {
    if a.is_zero() {
        return Err(Error::ZeroElement);
    }
    let spec = a.spec();
    if spec.q() > BSGS_CAP {
        return Err(Error::CapExceeded {
            what: "discrete logarithm",
            size: spec.q(),
            cap: BSGS_CAP,
        });
    }
    let order = spec.unit_count();
    let table = spec.dlog_table(|| build_dlog_table(spec));
    let giant = spec.from_coeffs(&table.giant)?;
    let mut y = a.clone();
    for i in 0..=table.step {
        if let Some(&j) = table.baby.get(&y.index().0) {
            let k = (i * table.step + j) % order;
            return Ok(if k == 0 { order } else { k });
        }
        y = y.mul(&giant)?;
    }
    unreachable!("every unit is a power of the generator")
}

/// Result of [`rth_root`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootResult {
    /// Root of least element index, if any root exists.
    pub canonical_root: Option<FieldElement>,
    /// Number of distinct roots in `F_q`.
    pub count: u64,
}

/// Exponents `k` (mod `q-1`) of all roots `gamma^k` of `x^r = a`, or `None`.
fn root_exponents(a: &FieldElement, r: u64) -> Result<Option<(u64, u64, u64)>> {
    let order = a.spec().unit_count();
    let d = num::gcd(r, order);
    let log = discrete_log(a)? % order;
    if !log.is_multiple_of(d) {
        return Ok(None);
    }
    // r k = log (mod q-1)  <=>  (r/d) k = log/d (mod (q-1)/d)
    let sub_order = order / d;
    let inv = num::inv_mod((r / d) % sub_order, sub_order).expect("r/d is coprime to (q-1)/d");
    let k0 = num::mul_mod(log / d, inv, sub_order);
    Ok(Some((k0, sub_order, d)))
}

/// All roots of `x^r = a`, sorted by element index.
pub fn all_rth_roots(a: &FieldElement, r: u64) -> Result<Vec<FieldElement>> {
    check_r(r)?;
    if a.is_zero() {
        return Ok(vec![a.clone()]);
    }
    let Some((k0, sub_order, d)) = root_exponents(a, r)? else {
        return Ok(Vec::new());
    };
    if d > ENUMERATION_CAP {
        return Err(Error::CapExceeded {
            what: "root enumeration",
            size: d,
            cap: ENUMERATION_CAP,
        });
    }
    let gamma = a.spec().generator();
    // consecutive roots differ by a primitive d-th root of unity
    let zeta = gamma.pow(sub_order);
    let mut cur = gamma.pow(k0);
    let mut roots = Vec::with_capacity(d as usize);
    for _ in 0..d {
        roots.push(cur.clone());
        cur = cur.mul(&zeta)?;
    }
    roots.sort_by_key(FieldElement::index);
    Ok(roots)
}

/// Solves `x^r = a` through the discrete logarithm of `a`.
pub fn rth_root(a: &FieldElement, r: u64) -> Result<RootResult> {
    let roots = all_rth_roots(a, r)?;
    let canonical_root = roots.first().cloned();
    if let Some(root) = &canonical_root {
        assert_eq!(root.pow(r), *a, "root extraction postcondition");
    }
    Ok(RootResult {
        canonical_root,
        count: roots.len() as u64,
    })
}

/// `x^q - x = h(x) (x^r - a) + c x` over `F_q`, for `r | q - 1`.
#[derive(Debug, Clone)]
pub struct DivisionIdentity {
    pub a: FieldElement,
    pub r: u64,
    /// Number of terms `k = (q-1)/r` of the quotient.
    pub terms: u64,
    /// `h(x) = sum_{j=1..k} a^(j-1) x^(q - j r)`; `None` above the degree cap.
    pub quotient: Option<Poly<FieldSpec>>,
    /// `c = a^k - 1`.
    pub remainder_coeff: FieldElement,
    /// Outcome of the independent long division; `None` when skipped.
    pub verified: Option<bool>,
}

impl DivisionIdentity {
    /// `x^q - x` over `F_q`.
    fn dividend(spec: &FieldSpec) -> Poly<FieldSpec> {
        let mut coeffs = vec![spec.zero(); spec.q() as usize + 1];
        coeffs[spec.q() as usize] = spec.one();
        coeffs[1] = spec.constant_i64(-1);
        Poly::from_coeffs(spec.clone(), coeffs)
    }

    /// `x^r - a` over `F_q`.
    fn divisor(a: &FieldElement, r: u64) -> Poly<FieldSpec> {
        let spec = a.spec();
        let mut coeffs = vec![spec.zero(); r as usize + 1];
        coeffs[r as usize] = spec.one();
        coeffs[0] = spec.zero().sub(a).unwrap();
        Poly::from_coeffs(spec.clone(), coeffs)
    }
}

impl fmt::Display for DivisionIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.quotient {
            Some(h) => write!(f, "{h}"),
            None => {
                let q = self.a.spec().q();
                write!(
                    f,
                    "sum_{{j=1..{}}} ({})^(j-1)*x^({}-{}*j)",
                    self.terms, self.a, q, self.r
                )
            }
        }
    }
}

pub fn euler_division_identity(a: &FieldElement, r: u64) -> Result<DivisionIdentity> {
    euler_division_identity_capped(a, r, IDENTITY_DEGREE_CAP)
}

/// Builds `h` in closed form and, when `q <= degree_cap`, checks it against
/// an independent long division of `x^q - x` by `x^r - a`.
pub fn euler_division_identity_capped(
    a: &FieldElement,
    r: u64,
    degree_cap: u64,
) -> Result<DivisionIdentity> {
    check_r(r)?;
    if a.is_zero() {
        return Err(Error::ZeroElement);
    }
    let spec = a.spec();
    let q = spec.q();
    let order = spec.unit_count();
    if !order.is_multiple_of(r) {
        return Err(Error::NotDivisor { r, order });
    }
    let terms = order / r;
    let remainder_coeff = a.pow(terms).sub(&spec.one())?;

    if q > degree_cap {
        return Ok(DivisionIdentity {
            a: a.clone(),
            r,
            terms,
            quotient: None,
            remainder_coeff,
            verified: None,
        });
    }

    let mut coeffs = vec![spec.zero(); (q - r) as usize + 1];
    let mut a_pow = spec.one();
    for j in 1..=terms {
        coeffs[(q - j * r) as usize] = a_pow.clone();
        a_pow = a_pow.mul(a)?;
    }
    let h = Poly::from_coeffs(spec.clone(), coeffs);

    let f = DivisionIdentity::dividend(spec);
    let g = DivisionIdentity::divisor(a, r);
    let cx = Poly::monomial(spec.clone(), remainder_coeff.clone(), 1);
    let (quot, rem) = f.divmod(&g)?;
    let reconstructed = h.mul(&g)?.add(&cx)?;
    let verified = quot == h && rem == cx && reconstructed == f;

    Ok(DivisionIdentity {
        a: a.clone(),
        r,
        terms,
        quotient: Some(h),
        remainder_coeff,
        verified: Some(verified),
    })
}

/// Decides whether the prime-subfield constant `c` is an r-th power in
/// `F_{p^n}` without building the extension.
///
/// `c^(p-1) = 1`, so only `e = ((p^n - 1)/d) mod (p - 1)` matters, with
/// `d = gcd(r, p^n - 1)`. Both are computed by modular exponentiation, so `n`
/// is unbounded. For `r = 2` and odd `p` this gives `e = n (p-1)/2 mod (p-1)`.
pub fn constant_power_in_extension(p: PrimeModulus, c: Residue, n: u64, r: u64) -> Result<bool> {
    check_r(r)?;
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    if c.modulus() != p {
        return Err(Error::FieldMismatch);
    }
    if c.is_zero() {
        return Err(Error::ZeroElement);
    }
    let base = p.get();
    let unit_count_mod_r = (num::pow_mod(base, n, r) + r - 1) % r;
    let d = num::gcd(r, unit_count_mod_r);
    let window = d as u128 * (base as u128 - 1);
    let unit_count_mod_window = (num::pow_mod_u128(base as u128, n, window) + window - 1) % window;
    let e = (unit_count_mod_window / d as u128) as u64;
    Ok(c.pow(e).value() == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ext_field::{make_field, parse_element, parse_field};
    use crate::oracle;

    fn f9() -> FieldSpec {
        parse_field("F(3^2; t^2+1)").unwrap()
    }
    fn f25() -> FieldSpec {
        parse_field("F(5^2; t^2+t+1)").unwrap()
    }
    fn f13_3() -> FieldSpec {
        parse_field("F(13^3; t^3+2*t+11)").unwrap()
    }
    fn el(spec: &FieldSpec, s: &str) -> FieldElement {
        parse_element(spec, s).unwrap()
    }
    fn texts(v: &[FieldElement]) -> Vec<String> {
        v.iter().map(|e| e.to_string()).collect()
    }
    fn unit_at(spec: &FieldSpec, index: u64) -> Result<FieldElement> {
        spec.element_at(crate::ext_field::ElementIndex(index))
    }

    #[test]
    fn euler_value_examples() {
        let f = f13_3();
        assert!(euler_exponent_value(&el(&f, "5+t+8*t^2"), 2).unwrap().is_one());
        assert!(euler_exponent_value(&el(&f, "5+3*t+7*t^2"), 61).unwrap().is_one());
        let f5 = make_field(5, 1, None).unwrap();
        assert_eq!(euler_exponent_value(&f5.constant(2), 2).unwrap(), f5.constant(4));
        assert_eq!(
            euler_exponent_value(&f5.constant(2), 3),
            Err(Error::NotDivisor { r: 3, order: 4 })
        );
        assert_eq!(euler_exponent_value(&f5.zero(), 2), Err(Error::ZeroElement));
        assert_eq!(euler_exponent_value(&f5.one(), 0), Err(Error::ZeroExponent));
    }

    #[test]
    fn is_power_examples() {
        let rep = is_rth_power(&el(&f13_3(), "5+7*t"), 12).unwrap();
        assert!(rep.is_power);
        assert_eq!(rep.d, 12);
        assert_eq!(rep.num_roots, 12);
        assert_eq!(rep.canonical_root.unwrap().pow(12), el(&f13_3(), "5+7*t"));

        let f = f25();
        assert!(!is_rth_power(&f.constant(2), 4).unwrap().is_power);
        let four = is_rth_power(&f.constant(4), 4).unwrap();
        assert!(four.is_power && four.euler_value.is_one());

        // r = 9 over F_25 behaves like r = 3
        for i in 1..25 {
            let a = unit_at(&f, i).unwrap();
            assert_eq!(
                is_rth_power(&a, 9).unwrap().is_power,
                is_rth_power(&a, 3).unwrap().is_power
            );
        }
    }

    #[test]
    fn zero_is_its_own_root() {
        let rep = is_rth_power(&f9().zero(), 5).unwrap();
        assert!(rep.is_power);
        assert_eq!(rep.num_roots, 1);
        assert_eq!(rep.canonical_root, Some(f9().zero()));
        assert_eq!(rep.d, 1);
    }

    #[test]
    fn count_examples() {
        let c = count_rth_powers(&f9(), 2).unwrap();
        assert_eq!((c.total, c.nontrivial_squares), (4, Some(3)));
        let f13 = make_field(13, 1, None).unwrap();
        assert_eq!(count_rth_powers(&f13, 2).unwrap().nontrivial_squares, Some(5));
        assert_eq!(count_rth_powers(&f25(), 12).unwrap().total, 2);
        assert_eq!(count_rth_powers(&f25(), 12).unwrap().nontrivial_squares, None);

        let f8 = make_field(2, 3, None).unwrap();
        let c = count_rth_powers(&f8, 2).unwrap();
        assert_eq!((c.total, c.nontrivial_squares, c.outside_odd_hypothesis), (7, Some(6), true));
        assert!(!count_rth_powers(&f9(), 2).unwrap().outside_odd_hypothesis);
    }

    #[test]
    fn list_examples() {
        assert_eq!(texts(&list_rth_powers(&f9(), 2).unwrap()), ["1", "2", "t", "2*t"]);
        let sixth = list_rth_powers(&f25(), 6).unwrap();
        for c in [2, 3, 4] {
            assert!(sixth.contains(&f25().constant(c)));
        }
        for f in [f9(), f25(), make_field(2, 5, None).unwrap()] {
            assert_eq!(list_rth_powers(&f, f.q() - 1).unwrap(), vec![f.one()]);
        }
        assert!(matches!(
            list_rth_powers_capped(&f13_3(), 2, 1000),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn dlog_examples() {
        let f = f9();
        assert_eq!(discrete_log(&f.one()).unwrap(), 8);
        assert_eq!(discrete_log(&f.generator()).unwrap(), 1);
        assert_eq!(discrete_log(&f.constant(2)).unwrap(), 4);
        assert_eq!(discrete_log(&f.zero()), Err(Error::ZeroElement));
        let big = make_field(2_147_483_647, 2, None).unwrap();
        assert!(matches!(
            discrete_log(&big.one()),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn dlog_inverts_pow() {
        for f in [f9(), f25(), f13_3(), make_field(2, 10, None).unwrap(), make_field(101, 3, None).unwrap()] {
            let g = f.generator();
            let order = f.q() - 1;
            for k in [1, 2, 3, order / 2, order / 3 + 1, order - 1, order] {
                assert_eq!(discrete_log(&g.pow(k)).unwrap(), k, "{f}, k = {k}");
            }
        }
    }

    #[test]
    fn root_examples() {
        let f = f9();
        let res = rth_root(&f.constant(2), 2).unwrap();
        assert_eq!(res.canonical_root, Some(f.t()));
        assert_eq!(res.count, 2);

        let big = f13_3();
        let a = el(&big, "5+3*t+7*t^2");
        let roots = all_rth_roots(&a, 61).unwrap();
        assert_eq!(roots.len(), 61);
        assert!(roots.contains(&el(&big, "6+2*t")));
        let res = rth_root(&a, 61).unwrap();
        assert_eq!(res.canonical_root.as_ref(), roots.first());

        let f5 = make_field(5, 1, None).unwrap();
        let res = rth_root(&f5.constant(2), 2).unwrap();
        assert_eq!((res.canonical_root, res.count), (None, 0));
    }

    #[test]
    fn roots_match_oracle() {
        for f in [f9(), f25(), make_field(2, 4, None).unwrap(), make_field(3, 3, None).unwrap()] {
            for r in 1..=f.q() {
                for i in 0..f.q() {
                    let a = unit_at(&f, i).unwrap();
                    assert_eq!(
                        all_rth_roots(&a, r).unwrap(),
                        oracle::brute_roots(&f, &a, r).unwrap(),
                        "{a}, r = {r}"
                    );
                }
            }
        }
    }

    #[test]
    fn identity_examples() {
        let f = f9();
        let id = euler_division_identity(&f.constant(2), 2).unwrap();
        assert_eq!(id.quotient.as_ref().unwrap().to_string(), "2*x+x^3+2*x^5+x^7");
        assert!(id.remainder_coeff.is_zero());
        assert_eq!(id.verified, Some(true));

        let id = euler_division_identity(&f.t(), 2).unwrap();
        assert!(id.remainder_coeff.is_zero());
        assert_eq!(id.verified, Some(true));

        let id = euler_division_identity(&f25().constant(2), 4).unwrap();
        assert_eq!(id.remainder_coeff, f25().constant(3));
        assert_eq!(id.verified, Some(true));

        let skipped = euler_division_identity_capped(&f25().constant(2), 4, 10).unwrap();
        assert_eq!(skipped.verified, None);
        assert!(skipped.quotient.is_none());
        assert_eq!(skipped.remainder_coeff, f25().constant(3));
        assert_eq!(skipped.to_string(), "sum_{j=1..6} (2)^(j-1)*x^(25-4*j)");

        assert_eq!(
            euler_division_identity(&f.one(), 3).unwrap_err(),
            Error::NotDivisor { r: 3, order: 8 }
        );
    }

    #[test]
    fn long_division_oracle_for_identity() {
        // x^25 - x divided by x^4 - 2 over F_25, done with the generic engine only
        let f = f25();
        let a = f.constant(2);
        let (q, r) = DivisionIdentity::dividend(&f)
            .divmod(&DivisionIdentity::divisor(&a, 4))
            .unwrap();
        assert_eq!(q.degree(), Some(21));
        assert_eq!(r, Poly::monomial(f.clone(), f.constant(3), 1));
    }

    #[test]
    fn constant_power_examples() {
        let p3 = PrimeModulus::new(3).unwrap();
        let two = p3.residue(2);
        assert!(constant_power_in_extension(p3, two, 2, 2).unwrap());
        assert!(!constant_power_in_extension(p3, two, 3, 2).unwrap());
        assert!(!constant_power_in_extension(p3, two, 1, 2).unwrap());
        for n in 1..=200 {
            assert_eq!(constant_power_in_extension(p3, two, n, 2).unwrap(), n % 2 == 0);
        }
        // n far beyond any constructible field
        assert!(constant_power_in_extension(p3, two, 1 << 60, 2).unwrap());
        assert_eq!(
            constant_power_in_extension(p3, p3.residue(0), 2, 2),
            Err(Error::ZeroElement)
        );
    }

    #[test]
    fn constant_power_matches_explicit_extension() {
        for p in [2u64, 3, 5, 7, 11] {
            let prime = PrimeModulus::new(p).unwrap();
            for n in 1..=6u64 {
                let Ok(f) = make_field(p, n as usize, None) else { continue };
                if f.q() > 20_000 {
                    continue;
                }
                for r in [1u64, 2, 3, 4, 5, 6, 8, 9, 12, 13, 16, 24, 26, 40, 48, 80] {
                    for c in 1..p {
                        let fast = constant_power_in_extension(prime, prime.residue(c), n, r).unwrap();
                        let slow = is_rth_power(&f.constant(c), r).unwrap().is_power;
                        assert_eq!(fast, slow, "p={p} n={n} r={r} c={c}");
                    }
                }
            }
        }
    }
}
