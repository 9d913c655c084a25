//! Brute-force ground truth by full scans of the field.
//!
//! Only field arithmetic from [`crate::ext_field`] is used here; nothing from
//! [`crate::power_residues`], so agreement between the two is meaningful.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ext_field::{ElementIndex, FieldElement, FieldSpec};

/// Largest field size the oracle will scan by default.
pub const ORACLE_CAP: u64 = 1 << 16;

fn check_cap(spec: &FieldSpec, cap: u64) -> Result<()> {
    if spec.q() > cap {
        return Err(Error::CapExceeded {
            what: "oracle scan",
            size: spec.q(),
            cap,
        });
    }
    Ok(())
}

/// `{ x^r : x in F_q^* }`, sorted by element index.
pub fn brute_rth_powers(spec: &FieldSpec, r: u64) -> Result<Vec<FieldElement>> {
    brute_rth_powers_capped(spec, r, ORACLE_CAP)
}

pub fn brute_rth_powers_capped(spec: &FieldSpec, r: u64, cap: u64) -> Result<Vec<FieldElement>> {
    if r == 0 {
        return Err(Error::ZeroExponent);
    }
    check_cap(spec, cap)?;
    let mut seen = BTreeMap::new();
    for i in 1..spec.q() {
        let y = spec.element_at(ElementIndex(i))?.pow(r);
        seen.entry(y.index()).or_insert(y);
    }
    Ok(seen.into_values().collect())
}

/// Every `x` in `F_q` (zero included) with `x^r = a`, sorted by element index.
pub fn brute_roots(spec: &FieldSpec, a: &FieldElement, r: u64) -> Result<Vec<FieldElement>> {
    brute_roots_capped(spec, a, r, ORACLE_CAP)
}

pub fn brute_roots_capped(
    spec: &FieldSpec,
    a: &FieldElement,
    r: u64,
    cap: u64,
) -> Result<Vec<FieldElement>> {
    if r == 0 {
        return Err(Error::ZeroExponent);
    }
    if a.spec() != spec {
        return Err(Error::FieldMismatch);
    }
    check_cap(spec, cap)?;
    let mut out = Vec::new();
    for i in 0..spec.q() {
        let x = spec.element_at(ElementIndex(i))?;
        if x.pow(r) == *a {
            out.push(x);
        }
    }
    Ok(out)
}

/// Every r-th power in `F_q` (zero included) mapped to its sorted roots, from
/// a single scan. Answers many [`brute_roots`] queries for one `r` at once.
pub fn brute_preimages(
    spec: &FieldSpec,
    r: u64,
) -> Result<BTreeMap<ElementIndex, Vec<FieldElement>>> {
    if r == 0 {
        return Err(Error::ZeroExponent);
    }
    check_cap(spec, ORACLE_CAP)?;
    let mut map: BTreeMap<ElementIndex, Vec<FieldElement>> = BTreeMap::new();
    for i in 0..spec.q() {
        let x = spec.element_at(ElementIndex(i))?;
        map.entry(x.pow(r).index()).or_default().push(x);
    }
    Ok(map)
}
