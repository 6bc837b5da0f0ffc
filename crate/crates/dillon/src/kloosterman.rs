//! Kloosterman sums over binary fields, zero detection, and the trace /
//! subtrace necessary condition.
//!
//! The sum over `F_{2^m}` at `a` is
//!
//! ```text
//! K(a) = 1 + sum over nonzero x of (-1)^( Tr^m_1(1/x + a x) )
//! ```
//!
//! A nonzero `a` with `K(a) = 0` is a Kloosterman zero. Whole-field
//! tables are built with one fast Walsh-Hadamard transform instead of the
//! quadratic double loop; [`kloosterman_sum`] keeps the literal defining
//! sum (over the subfield `F_{2^m}` of whatever ambient field `a` lives
//! in) as the reference path.
//!
//! Divisibility gives a cheap pre-filter: when `16 | K(a)` both the trace
//! and the subtrace of `a` vanish, so any `a` failing that condition is
//! certainly not a zero. The filter is necessary-only; every zero claim
//! is confirmed by an exact sum or table value.

use std::collections::BTreeSet;
use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::walsh::{fwht_in_place, DualBasis};

/// Largest degree for whole-field table construction.
pub const MAX_TABLE_DEGREE: u32 = 20;

fn validate_subfield_point(field: &Field, m: u32, a: Fe) -> Result<()> {
    if m == 0 || field.degree() % m != 0 {
        return Err(Error::NotADivisor { divisor: m, of: field.degree() });
    }
    if field.frobenius(a, m as i64) != a {
        return Err(Error::NotInSubfield { bits: a.0, degree: m });
    }
    Ok(())
}

/// Kloosterman sum at `a` by the defining summation.
///
/// `a` must lie in the subfield `F_{2^m}` of `field` (`a = 0` allowed,
/// giving 0). When the field degree equals `m` the sum runs over the
/// whole field; otherwise it walks the subfield via generator powers, so
/// the same routine serves ambient-field coset checks without any
/// embedding maps.
pub fn kloosterman_sum(field: &Field, m: u32, a: Fe) -> Result<i64> {
    validate_subfield_point(field, m, a)?;
    let mut acc = 1i64;
    if field.degree() == m {
        for x in field.elements().skip(1) {
            let v = field.add(field.inv(x)?, field.mul(a, x));
            acc += 1 - 2 * field.abs_trace_bit(v, m) as i64;
        }
    } else {
        let h = field.subfield(m)?.generator();
        let mut x = Fe::ONE;
        for _ in 0..(1u64 << m) - 1 {
            let v = field.add(field.inv(x)?, field.mul(a, x));
            acc += 1 - 2 * field.abs_trace_bit(v, m) as i64;
            x = field.mul(x, h);
        }
        debug_assert_eq!(x, Fe::ONE);
    }
    Ok(acc)
}

/// All Kloosterman sums over one field, indexed by element bitmask.
#[derive(Clone)]
pub struct KloostermanTable {
    m: u32,
    modulus: u64,
    values: Vec<i32>,
}

impl KloostermanTable {
    /// Builds the whole table with a single FWHT.
    ///
    /// `K(a) - 1` is the Walsh transform of `x -> Tr(1/x)` at the dual
    /// coordinates of `a`, so one length-2^m transform covers every `a`.
    /// The sign-vector fill is an elementwise parallel map; output order
    /// is by bitmask regardless of scheduling.
    pub fn build(field: &Field) -> Result<KloostermanTable> {
        let m = field.degree();
        if m > MAX_TABLE_DEGREE {
            return Err(Error::DegreeTooLarge { degree: m, limit: MAX_TABLE_DEGREE });
        }
        // Absolute trace as a bit dot product: Tr(y) = popcount(y & tvec) mod 2.
        let mut tvec = 0u64;
        for i in 0..m {
            tvec |= (field.abs_trace_bit(Fe(1 << i), m) as u64) << i;
        }
        let mut signs = vec![0i32; 1usize << m];
        signs[1..]
            .par_iter_mut()
            .enumerate()
            .for_each(|(i, slot)| {
                let x = Fe(i as u64 + 1);
                let inv = field.inv(x).expect("nonzero element");
                *slot = 1 - 2 * ((inv.0 & tvec).count_ones() & 1) as i32;
            });
        fwht_in_place(&mut signs);
        let index_to_element = DualBasis::of(field).index_to_element_table(field);
        let mut values = vec![0i32; 1usize << m];
        for (w, &s) in signs.iter().enumerate() {
            values[index_to_element[w] as usize] = 1 + s;
        }
        debug_assert_eq!(values[0], 0, "K(0) must vanish");
        Ok(KloostermanTable { m, modulus: field.modulus(), values })
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn value(&self, a: Fe) -> i32 {
        self.values[a.0 as usize]
    }

    pub fn values(&self) -> &[i32] {
        &self.values
    }

    /// Kloosterman zeros: nonzero `a` with `K(a) = 0`, sorted by bitmask.
    /// `a = 0` has `K(0) = 0` identically and is excluded by definition.
    pub fn zeros(&self) -> Vec<Fe> {
        (1..self.values.len())
            .filter(|&a| self.values[a] == 0)
            .map(|a| Fe(a as u64))
            .collect()
    }

    /// Deterministic cache filename derived from the table parameters.
    pub fn cache_file_name(m: u32, modulus: u64) -> String {
        format!("kloosterman-m{m:02}-{modulus:x}.csv")
    }

    /// CSV with a parameter header row, then `element,kloosterman` rows
    /// in bitmask order.
    pub fn write_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "m,{},modulus,{:x}", self.m, self.modulus)?;
        writeln!(out, "element,kloosterman")?;
        for (a, v) in self.values.iter().enumerate() {
            writeln!(out, "{a:x},{v}")?;
        }
        Ok(())
    }

    pub fn read_csv<R: BufRead>(input: R) -> Result<KloostermanTable> {
        let mut lines = input.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::BadTableFile("empty file".into()))??;
        let parts: Vec<&str> = header.split(',').collect();
        if parts.len() != 4 || parts[0] != "m" || parts[2] != "modulus" {
            return Err(Error::BadTableFile(format!("bad header row {header:?}")));
        }
        let m: u32 = parts[1]
            .parse()
            .map_err(|_| Error::BadTableFile(format!("bad degree {:?}", parts[1])))?;
        let modulus = u64::from_str_radix(parts[3], 16)
            .map_err(|_| Error::BadTableFile(format!("bad modulus {:?}", parts[3])))?;
        let columns = lines
            .next()
            .ok_or_else(|| Error::BadTableFile("missing column row".into()))??;
        if columns != "element,kloosterman" {
            return Err(Error::BadTableFile(format!("bad column row {columns:?}")));
        }
        if m == 0 || m > MAX_TABLE_DEGREE {
            return Err(Error::BadTableFile(format!("degree {m} out of range")));
        }
        let mut values = vec![0i32; 1usize << m];
        let mut seen = 0usize;
        for line in lines {
            let line = line?;
            if line.is_empty() {
                continue;
            }
            let (elem, value) = line
                .split_once(',')
                .ok_or_else(|| Error::BadTableFile(format!("bad row {line:?}")))?;
            let a = usize::from_str_radix(elem, 16)
                .map_err(|_| Error::BadTableFile(format!("bad element {elem:?}")))?;
            if a >= values.len() {
                return Err(Error::BadTableFile(format!("element {elem:?} out of range")));
            }
            values[a] = value
                .parse()
                .map_err(|_| Error::BadTableFile(format!("bad value {value:?}")))?;
            seen += 1;
        }
        if seen != values.len() {
            return Err(Error::BadTableFile(format!(
                "expected {} rows, found {seen}",
                values.len()
            )));
        }
        Ok(KloostermanTable { m, modulus, values })
    }

    /// Reads the cached table for `field` from `cache_dir`, or builds it
    /// and writes the cache. Returns the table and whether it came from
    /// the cache.
    pub fn load_or_build(field: &Field, cache_dir: &Path) -> Result<(KloostermanTable, bool)> {
        let path: PathBuf =
            cache_dir.join(Self::cache_file_name(field.degree(), field.modulus()));
        if path.is_file() {
            let file = std::io::BufReader::new(std::fs::File::open(&path)?);
            let table = Self::read_csv(file)?;
            if table.m == field.degree() && table.modulus == field.modulus() {
                return Ok((table, true));
            }
            return Err(Error::BadTableFile(format!(
                "cache {} does not match field parameters",
                path.display()
            )));
        }
        let table = Self::build(field)?;
        std::fs::create_dir_all(cache_dir)?;
        let mut out = std::io::BufWriter::new(std::fs::File::create(&path)?);
        table.write_csv(&mut out)?;
        out.flush()?;
        Ok((table, false))
    }
}

/// Necessary condition for `16 | K(a)` (and in particular for a zero):
/// both the trace and the subtrace of `a` vanish. Requires `m >= 4` and
/// nonzero `a`. A `false` certifies that `a` is not a Kloosterman zero;
/// `true` decides nothing by itself.
pub fn mod16_necessary(field: &Field, m: u32, a: Fe) -> Result<bool> {
    if m < 4 {
        return Err(Error::DegreeTooSmall { degree: m, minimum: 4 });
    }
    if a.is_zero() {
        return Err(Error::ZeroCoefficient);
    }
    validate_subfield_point(field, m, a)?;
    Ok(field.absolute_trace(a, m)? == 0 && field.subtrace(a, m)? == 0)
}

/// Whether every element of the coset `a F_{2^k}^*` is a Kloosterman zero
/// in `F_{2^m}`. Applies the trace/subtrace pre-filter before each exact
/// sum; a zero verdict always rests on exact sums.
pub fn coset_all_zeros(field: &Field, m: u32, k: u32, a: Fe) -> Result<bool> {
    if a.is_zero() {
        return Err(Error::ZeroCoefficient);
    }
    if k == 0 || m % k != 0 {
        return Err(Error::NotADivisor { divisor: k, of: m });
    }
    validate_subfield_point(field, m, a)?;
    for u in field.subfield(k)?.star_elements() {
        let point = field.mul(a, u);
        if m >= 4 && !mod16_necessary(field, m, point)? {
            return Ok(false);
        }
        if kloosterman_sum(field, m, point)? != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A proper-subfield element whose Kloosterman sum vanishes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubfieldZero {
    pub m: u32,
    /// Smallest proper subfield containing the element.
    pub subfield_degree: u32,
    pub element: Fe,
}

/// Sweeps every degree `m <= max_m`, every proper subfield of `F_{2^m}`,
/// and every nonzero subfield element, returning the elements whose
/// Kloosterman sum vanishes. The expected outcome is the single pair
/// `(m, a) = (4, 1)`; anything else is a finding for the caller to judge.
pub fn check_subfield_zero_theorem(max_m: u32) -> Result<Vec<SubfieldZero>> {
    if max_m > MAX_TABLE_DEGREE {
        return Err(Error::DegreeTooLarge { degree: max_m, limit: MAX_TABLE_DEGREE });
    }
    let mut findings = Vec::new();
    for m in 2..=max_m {
        let field = Field::new(m)?;
        let table = KloostermanTable::build(&field)?;
        let mut tested: BTreeSet<Fe> = BTreeSet::new();
        for k in (1..m).filter(|k| m % k == 0) {
            for a in field.subfield(k)?.star_elements() {
                if tested.insert(a) && table.value(a) == 0 {
                    let smallest = (1..m)
                        .filter(|&d| m % d == 0 && field.is_in_subfield(a, d))
                        .min()
                        .expect("element came from a proper subfield");
                    findings.push(SubfieldZero { m, subfield_degree: smallest, element: a });
                }
            }
        }
    }
    findings.sort_by_key(|f| (f.m, f.element));
    Ok(findings)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kloosterman_at_zero_vanishes() {
        for m in 1..=12 {
            let field = Field::new(m).unwrap();
            assert_eq!(kloosterman_sum(&field, m, Fe::ZERO).unwrap(), 0, "m = {m}");
        }
    }

    #[test]
    fn known_values_at_one() {
        // Computed by the defining sum; the only vanishing entry is m = 4.
        let expected = [(2, 4), (3, -4), (4, 0), (5, 12), (6, -8), (7, -12), (8, 32)];
        for (m, want) in expected {
            let field = Field::new(m).unwrap();
            assert_eq!(kloosterman_sum(&field, m, Fe::ONE).unwrap(), want, "m = {m}");
        }
    }

    #[test]
    fn table_agrees_with_defining_sum_up_to_degree_10() {
        for m in 1..=10 {
            let field = Field::new(m).unwrap();
            let table = KloostermanTable::build(&field).unwrap();
            for a in field.elements() {
                assert_eq!(
                    table.value(a) as i64,
                    kloosterman_sum(&field, m, a).unwrap(),
                    "m = {m}, a = {a:x}"
                );
            }
        }
    }

    #[test]
    fn table_values_are_even_and_frobenius_symmetric() {
        for m in 1..=12 {
            let field = Field::new(m).unwrap();
            let table = KloostermanTable::build(&field).unwrap();
            for a in field.elements() {
                let v = table.value(a);
                assert_eq!(v.rem_euclid(2), 0, "K must be even");
                assert_eq!(table.value(field.square(a)), v, "K(a^2) = K(a)");
            }
        }
    }

    #[test]
    fn zeros_for_small_degrees_match_frozen_sets() {
        let f4 = Field::new(4).unwrap();
        let z4 = KloostermanTable::build(&f4).unwrap().zeros();
        assert_eq!(z4, vec![Fe(1), Fe(2), Fe(3), Fe(4), Fe(5)]);

        let f6 = Field::new(6).unwrap();
        let z6 = KloostermanTable::build(&f6).unwrap().zeros();
        assert_eq!(z6.len(), 12);
        // Every primitive 9th root of unity is a zero.
        for a in f6.elements().skip(1) {
            if f6.pow(a, 9) == Fe::ONE && f6.pow(a, 3) != Fe::ONE {
                assert!(z6.contains(&a), "a = {a:x}");
            }
        }
    }

    #[test]
    fn subfield_sum_matches_standalone_table_intrinsically() {
        // F_{2^6} inside GF(2^12) versus the standalone GF(2^6): the
        // bitmasks differ, but the multiset of Kloosterman values and the
        // values on order-9 elements are intrinsic.
        let ambient = Field::new(12).unwrap();
        let standalone = Field::new(6).unwrap();
        let table = KloostermanTable::build(&standalone).unwrap();
        let mut inside: Vec<i64> = ambient
            .subfield_elements(6)
            .unwrap()
            .iter()
            .map(|&a| kloosterman_sum(&ambient, 6, a).unwrap())
            .collect();
        let mut outside: Vec<i64> = table.values().iter().map(|&v| v as i64).collect();
        inside.sort_unstable();
        outside.sort_unstable();
        assert_eq!(inside, outside);
        for a in ambient.subfield_elements(6).unwrap() {
            if ambient.pow(a, 9) == Fe::ONE && a != Fe::ONE && ambient.pow(a, 3) != Fe::ONE {
                assert_eq!(kloosterman_sum(&ambient, 6, a).unwrap(), 0);
            }
        }
    }

    #[test]
    fn mod16_filter_validates_inputs() {
        let field = Field::new(3).unwrap();
        assert!(matches!(
            mod16_necessary(&field, 3, Fe::ONE),
            Err(Error::DegreeTooSmall { .. })
        ));
        let field = Field::new(4).unwrap();
        assert!(matches!(
            mod16_necessary(&field, 4, Fe::ZERO),
            Err(Error::ZeroCoefficient)
        ));
        // a = 1, m = 4: T = 0 and S = C(4,2) mod 2 = 0, consistent with K(1) = 0.
        assert!(mod16_necessary(&field, 4, Fe::ONE).unwrap());
    }

    #[test]
    fn mod16_filter_is_necessary_for_divisibility_small_degrees() {
        for m in 4..=9 {
            let field = Field::new(m).unwrap();
            let table = KloostermanTable::build(&field).unwrap();
            for a in field.elements().skip(1) {
                if table.value(a) % 16 == 0 {
                    assert!(
                        mod16_necessary(&field, m, a).unwrap(),
                        "m = {m}, a = {a:x}, K = {}",
                        table.value(a)
                    );
                }
            }
        }
    }

    #[test]
    fn coset_zero_checks_on_known_instances() {
        let f6 = Field::new(6).unwrap();
        let ninth = f6
            .elements()
            .find(|&a| f6.pow(a, 9) == Fe::ONE && f6.pow(a, 3) != Fe::ONE && !a.is_zero())
            .unwrap();
        assert!(coset_all_zeros(&f6, 6, 2, ninth).unwrap());
        assert!(!coset_all_zeros(&f6, 6, 2, Fe::ONE).unwrap());

        let f9 = Field::new(9).unwrap();
        for a in [Fe(1), Fe(2), Fe(0x42), Fe(0x155)] {
            assert!(!coset_all_zeros(&f9, 9, 3, a).unwrap());
        }
        assert!(matches!(
            coset_all_zeros(&f6, 6, 2, Fe::ZERO),
            Err(Error::ZeroCoefficient)
        ));
    }

    #[test]
    fn subfield_zero_sweep_finds_only_the_classical_exception() {
        let findings = check_subfield_zero_theorem(12).unwrap();
        assert_eq!(findings.len(), 1);
        assert_eq!(findings[0].m, 4);
        assert_eq!(findings[0].element, Fe::ONE);
        assert_eq!(findings[0].subfield_degree, 1);
    }

    #[test]
    fn csv_roundtrip_is_exact_and_deterministic() {
        let field = Field::new(6).unwrap();
        let table = KloostermanTable::build(&field).unwrap();
        let mut bytes = Vec::new();
        table.write_csv(&mut bytes).unwrap();
        let reread = KloostermanTable::read_csv(&bytes[..]).unwrap();
        assert_eq!(reread.degree(), 6);
        assert_eq!(reread.modulus(), field.modulus());
        assert_eq!(reread.values(), table.values());
        let mut again = Vec::new();
        reread.write_csv(&mut again).unwrap();
        assert_eq!(bytes, again);
    }

    #[test]
    fn csv_rejects_malformed_input() {
        assert!(KloostermanTable::read_csv(&b"bogus"[..]).is_err());
        assert!(KloostermanTable::read_csv(&b"m,4,modulus,13\nwrong\n"[..]).is_err());
        // Truncated body.
        assert!(
            KloostermanTable::read_csv(&b"m,4,modulus,13\nelement,kloosterman\n0,0\n"[..])
                .is_err()
        );
    }
}
