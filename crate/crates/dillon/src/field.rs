//! Binary finite fields GF(2^n) in polynomial-basis representation.
//!
//! Elements are bitmasks: bit `i` of an [`Fe`] is the coefficient of `x^i`
//! in the representative polynomial. A [`Field`] fixes the degree, the
//! irreducible modulus and a multiplicative generator, and (for small
//! degrees) carries log/antilog tables so that multiplication, inversion
//! and Frobenius maps are table lookups.
//!
//! Subfields are never separate objects: `F_{2^k}` for `k | n` is realized
//! inside the ambient field as the fixed set of the k-fold Frobenius,
//! `{x : x^{2^k} = x}`. All traces, subtraces and coset enumerations work
//! on that subset, which removes any need for embedding maps between
//! separately constructed fields.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported field degree.
pub const MAX_DEGREE: u32 = 24;

/// Degrees up to this threshold get eager log/antilog tables.
pub const LOG_TABLE_THRESHOLD: u32 = 20;

/// Element of a binary field, as a coefficient bitmask.
///
/// An `Fe` is meaningful only relative to the [`Field`] it was produced
/// for; operations mixing elements of different fields are not detected.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fe(pub u64);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Lowercase-hex encoding of the coefficient bitmask.
    pub fn hex(self) -> String {
        format!("{:x}", self.0)
    }

    /// Parses a lowercase/uppercase hex bitmask. Range checking against a
    /// field happens in [`Field::parse_element`].
    pub fn from_hex(s: &str) -> Result<Fe> {
        u64::from_str_radix(s.trim(), 16)
            .map(Fe)
            .map_err(|_| Error::BadElementHex(s.to_string()))
    }
}

impl fmt::Debug for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fe({:#x})", self.0)
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:x}", self.0)
    }
}

impl fmt::LowerHex for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::LowerHex::fmt(&self.0, f)
    }
}

/// Carryless (GF(2)[x]) product of two polynomial bitmasks.
///
/// Degrees stay below [`MAX_DEGREE`], so the product fits in a `u64`.
pub(crate) fn clmul(a: u64, mut b: u64) -> u64 {
    debug_assert!(a < 1 << 32 && b < 1 << 32);
    let mut acc = 0u64;
    let mut shifted = a;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= shifted;
        }
        shifted <<= 1;
        b >>= 1;
    }
    acc
}

/// Degree of a nonzero polynomial bitmask.
fn poly_degree(p: u64) -> u32 {
    debug_assert!(p != 0);
    63 - p.leading_zeros()
}

/// Remainder of `a` modulo the nonconstant polynomial `m`.
pub(crate) fn poly_rem(mut a: u64, m: u64) -> u64 {
    let dm = poly_degree(m);
    while a != 0 && poly_degree(a) >= dm {
        a ^= m << (poly_degree(a) - dm);
    }
    a
}

/// Smallest nontrivial monic divisor of `p`, if any.
///
/// Trial division over all polynomials of degree 1..=deg/2; at desk-scale
/// degrees this is instant and trivially auditable.
fn find_poly_factor(p: u64) -> Option<u64> {
    let d = poly_degree(p);
    for e in 1..=d / 2 {
        for q in 1u64 << e..1u64 << (e + 1) {
            if poly_rem(p, q) == 0 {
                return Some(q);
            }
        }
    }
    None
}

/// Lexicographically smallest (as an integer bitmask) irreducible
/// polynomial of degree `n` over GF(2).
fn smallest_irreducible(n: u32) -> u64 {
    for p in 1u64 << n..1u64 << (n + 1) {
        if find_poly_factor(p).is_none() {
            return p;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn prime_factors(mut v: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= v {
        if v % d == 0 {
            out.push(d);
            while v % d == 0 {
                v /= d;
            }
        }
        d += 1;
    }
    if v > 1 {
        out.push(v);
    }
    out
}

/// A binary field GF(2^n) with a fixed modulus and generator.
#[derive(Clone, Debug)]
pub struct Field {
    n: u32,
    modulus: u64,
    order: u64,
    generator: Fe,
    // log[bits] and exp[i] with exp[log[x]] = x; empty above the threshold.
    log: Vec<u32>,
    exp: Vec<u32>,
}

impl Field {
    /// Field with the deterministic default modulus (the smallest
    /// irreducible of degree `n`) and eager log tables.
    pub fn new(n: u32) -> Result<Field> {
        Field::with_options(n, None, LOG_TABLE_THRESHOLD)
    }

    /// Field with an explicit modulus, which must be irreducible of exact
    /// degree `n`.
    pub fn with_modulus(n: u32, modulus: u64) -> Result<Field> {
        Field::with_options(n, Some(modulus), LOG_TABLE_THRESHOLD)
    }

    /// Full-control constructor: optional modulus override and the degree
    /// threshold up to which log/antilog tables are built.
    pub fn with_options(n: u32, modulus: Option<u64>, table_threshold: u32) -> Result<Field> {
        if n == 0 || n > MAX_DEGREE {
            return Err(Error::DegreeOutOfRange { degree: n, max: MAX_DEGREE });
        }
        let modulus = match modulus {
            Some(m) => {
                if m >> n != 1 {
                    return Err(Error::WrongModulusDegree { modulus: m, degree: n });
                }
                if let Some(factor) = find_poly_factor(m) {
                    return Err(Error::ReducibleModulus { modulus: m, factor });
                }
                m
            }
            None => smallest_irreducible(n),
        };
        let mut field = Field {
            n,
            modulus,
            order: (1u64 << n) - 1,
            generator: Fe::ONE,
            log: Vec::new(),
            exp: Vec::new(),
        };
        field.generator = field.find_generator();
        if n <= table_threshold {
            field.build_tables();
        }
        Ok(field)
    }

    fn mul_raw(&self, a: Fe, b: Fe) -> Fe {
        Fe(poly_rem(clmul(a.0, b.0), self.modulus))
    }

    fn pow_raw(&self, mut base: Fe, mut e: u64) -> Fe {
        let mut acc = Fe::ONE;
        while e != 0 {
            if e & 1 == 1 {
                acc = self.mul_raw(acc, base);
            }
            base = self.mul_raw(base, base);
            e >>= 1;
        }
        acc
    }

    /// Smallest-bitmask element of multiplicative order exactly 2^n - 1.
    fn find_generator(&self) -> Fe {
        if self.order == 1 {
            return Fe::ONE;
        }
        let primes = prime_factors(self.order);
        for c in 2..1u64 << self.n {
            let c = Fe(c);
            if primes.iter().all(|&q| self.pow_raw(c, self.order / q) != Fe::ONE) {
                return c;
            }
        }
        unreachable!("the multiplicative group of a finite field is cyclic")
    }

    fn build_tables(&mut self) {
        let size = 1usize << self.n;
        let mut log = vec![0u32; size];
        let mut exp = vec![0u32; self.order as usize];
        let mut x = Fe::ONE;
        for i in 0..self.order {
            exp[i as usize] = x.0 as u32;
            log[x.0 as usize] = i as u32;
            x = self.mul_raw(x, self.generator);
        }
        debug_assert_eq!(x, Fe::ONE, "generator order must be exactly 2^n - 1");
        self.log = log;
        self.exp = exp;
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Multiplicative group order, 2^n - 1.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Number of elements, 2^n.
    pub fn size(&self) -> u64 {
        1u64 << self.n
    }

    pub fn generator(&self) -> Fe {
        self.generator
    }

    pub fn has_log_tables(&self) -> bool {
        !self.exp.is_empty()
    }

    /// All 2^n elements in bitmask order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.size()).map(Fe)
    }

    pub fn contains(&self, x: Fe) -> bool {
        x.0 < self.size()
    }

    /// Parses a hex bitmask and range-checks it against this field.
    pub fn parse_element(&self, s: &str) -> Result<Fe> {
        let x = Fe::from_hex(s)?;
        if !self.contains(x) {
            return Err(Error::ElementOutOfRange { bits: x.0, degree: self.n });
        }
        Ok(x)
    }

    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        debug_assert!(self.contains(a) && self.contains(b));
        Fe(a.0 ^ b.0)
    }

    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        debug_assert!(self.contains(a) && self.contains(b));
        if a.is_zero() || b.is_zero() {
            return Fe::ZERO;
        }
        if self.has_log_tables() {
            let mut e = self.log[a.0 as usize] as u64 + self.log[b.0 as usize] as u64;
            if e >= self.order {
                e -= self.order;
            }
            Fe(self.exp[e as usize] as u64)
        } else {
            self.mul_raw(a, b)
        }
    }

    pub fn square(&self, a: Fe) -> Fe {
        self.mul(a, a)
    }

    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        if self.has_log_tables() {
            let l = self.log[a.0 as usize] as u64;
            let e = if l == 0 { 0 } else { self.order - l };
            Ok(Fe(self.exp[e as usize] as u64))
        } else {
            Ok(self.pow_raw(a, self.order - 1))
        }
    }

    /// `a^e` with the exponent reduced modulo 2^n - 1 for nonzero base.
    ///
    /// `pow(0, 0) = 1` and `pow(0, e) = 0` for `e > 0`; a negative
    /// exponent of zero is a programming error and panics.
    pub fn pow(&self, a: Fe, e: i64) -> Fe {
        if a.is_zero() {
            if e == 0 {
                return Fe::ONE;
            }
            assert!(e > 0, "zero base with negative exponent");
            return Fe::ZERO;
        }
        let e = e.rem_euclid(self.order as i64) as u64;
        if self.has_log_tables() {
            let l = self.log[a.0 as usize] as u64;
            Fe(self.exp[(l * e % self.order) as usize] as u64)
        } else {
            self.pow_raw(a, e)
        }
    }

    /// `x^{2^j}`, with `j` reduced modulo n.
    pub fn frobenius(&self, x: Fe, j: i64) -> Fe {
        let j = j.rem_euclid(self.n as i64) as u32;
        if x.is_zero() || j == 0 {
            return x;
        }
        if self.has_log_tables() {
            let e = (self.log[x.0 as usize] as u64) << j;
            Fe(self.exp[(e % self.order) as usize] as u64)
        } else {
            let mut y = x;
            for _ in 0..j {
                y = self.mul_raw(y, y);
            }
            y
        }
    }

    /// Relative trace from `F_{2^s}` down to `F_{2^t}`:
    /// the sum of the `x^{2^{it}}` for `0 <= i < s/t`.
    ///
    /// `x` must lie in the degree-`s` subfield, `t` must divide `s` and
    /// `s` must divide the ambient degree.
    pub fn relative_trace(&self, x: Fe, s: u32, t: u32) -> Result<Fe> {
        if t == 0 || s == 0 || s % t != 0 {
            return Err(Error::NotADivisor { divisor: t, of: s });
        }
        if self.n % s != 0 {
            return Err(Error::NotADivisor { divisor: s, of: self.n });
        }
        if self.frobenius(x, s as i64) != x {
            return Err(Error::NotInSubfield { bits: x.0, degree: s });
        }
        let mut acc = Fe::ZERO;
        for i in 0..s / t {
            acc = self.add(acc, self.frobenius(x, (i * t) as i64));
        }
        Ok(acc)
    }

    /// Absolute trace of `a` in `F_{2^t}`, returned as a bit.
    pub fn absolute_trace(&self, a: Fe, t: u32) -> Result<u8> {
        let v = self.relative_trace(a, t, 1)?;
        debug_assert!(v.0 <= 1);
        Ok(v.0 as u8)
    }

    /// Trust-the-caller absolute trace used in hot loops: `x` must already
    /// be known to lie in the degree-`s` subfield.
    pub(crate) fn abs_trace_bit(&self, x: Fe, s: u32) -> u8 {
        let mut acc = Fe::ZERO;
        for i in 0..s {
            acc = self.add(acc, self.frobenius(x, i as i64));
        }
        debug_assert!(acc.0 <= 1, "trace of a subfield element must land in GF(2)");
        acc.0 as u8
    }

    /// Subtrace of `a` in `F_{2^t}`: the second elementary symmetric
    /// function of the Frobenius conjugates, `sum_{i<j} a^{2^i + 2^j}`.
    ///
    /// The field-element sum always lands in GF(2); anything else means
    /// the field implementation is broken and aborts the process.
    pub fn subtrace(&self, a: Fe, t: u32) -> Result<u8> {
        if t == 0 || self.n % t != 0 {
            return Err(Error::NotADivisor { divisor: t, of: self.n });
        }
        if self.frobenius(a, t as i64) != a {
            return Err(Error::NotInSubfield { bits: a.0, degree: t });
        }
        let conjugates: Vec<Fe> = (0..t).map(|i| self.frobenius(a, i as i64)).collect();
        let mut acc = Fe::ZERO;
        for i in 0..t as usize {
            for j in i + 1..t as usize {
                acc = self.add(acc, self.mul(conjugates[i], conjugates[j]));
            }
        }
        match acc {
            Fe::ZERO => Ok(0),
            Fe::ONE => Ok(1),
            other => panic!(
                "subtrace of {:x} in F_2^{} landed outside GF(2): {:x}",
                a, t, other
            ),
        }
    }

    /// Discrete logarithm to the base [`Field::generator`]. Requires the
    /// log tables.
    pub fn discrete_log(&self, x: Fe) -> Result<u64> {
        if x.is_zero() {
            return Err(Error::ZeroDiscreteLog);
        }
        if !self.has_log_tables() {
            return Err(Error::LogTablesUnavailable);
        }
        Ok(self.log[x.0 as usize] as u64)
    }

    /// Whether `x` lies in the subfield `F_{2^k}`, i.e. `x^{2^k} = x`.
    /// `k` must divide the field degree.
    pub fn is_in_subfield(&self, x: Fe, k: u32) -> bool {
        assert!(k >= 1 && self.n % k == 0, "subfield degree must divide {}", self.n);
        self.frobenius(x, k as i64) == x
    }

    /// View of the subfield `F_{2^k}` inside this field.
    pub fn subfield(&self, k: u32) -> Result<Subfield<'_>> {
        if k == 0 || self.n % k != 0 {
            return Err(Error::NotADivisor { divisor: k, of: self.n });
        }
        Ok(Subfield { field: self, k })
    }

    /// The 2^k elements of `F_{2^k}`, sorted by bitmask: `{0}` together
    /// with the powers `g^{i (2^n-1)/(2^k-1)}`.
    pub fn subfield_elements(&self, k: u32) -> Result<Vec<Fe>> {
        Ok(self.subfield(k)?.elements())
    }

    /// The coset `a F_{2^k}^*` of the subfield's multiplicative group,
    /// sorted by bitmask. `a` must be nonzero.
    pub fn coset_of_subfield_star(&self, a: Fe, k: u32) -> Result<Vec<Fe>> {
        self.subfield(k)?.coset_star(a)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GF(2^{}) modulus {:x} generator {:x}",
            self.n, self.modulus, self.generator
        )
    }
}

/// Handle to a subfield `F_{2^k}` realized as the Frobenius-fixed subset
/// of its parent field.
#[derive(Clone, Copy)]
pub struct Subfield<'a> {
    field: &'a Field,
    k: u32,
}

impl Subfield<'_> {
    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn size(&self) -> u64 {
        1u64 << self.k
    }

    pub fn contains(&self, x: Fe) -> bool {
        self.field.frobenius(x, self.k as i64) == x
    }

    /// Generator of the subfield's multiplicative group:
    /// `g^{(2^n-1)/(2^k-1)}` for the parent generator `g`.
    pub fn generator(&self) -> Fe {
        let step = self.field.order / ((1u64 << self.k) - 1);
        self.field.pow(self.field.generator, step as i64)
    }

    /// The 2^k - 1 nonzero elements, sorted by bitmask.
    pub fn star_elements(&self) -> Vec<Fe> {
        let h = self.generator();
        let count = (1u64 << self.k) - 1;
        let mut out = Vec::with_capacity(count as usize);
        let mut x = Fe::ONE;
        for _ in 0..count {
            out.push(x);
            x = self.field.mul(x, h);
        }
        debug_assert_eq!(x, Fe::ONE);
        out.sort_unstable();
        out
    }

    /// All 2^k elements, sorted by bitmask.
    pub fn elements(&self) -> Vec<Fe> {
        let mut out = self.star_elements();
        out.insert(0, Fe::ZERO);
        out
    }

    /// The coset `a F_{2^k}^*` in the parent group, sorted by bitmask.
    pub fn coset_star(&self, a: Fe) -> Result<Vec<Fe>> {
        if a.is_zero() {
            return Err(Error::ZeroCoefficient);
        }
        let mut out: Vec<Fe> = self
            .star_elements()
            .into_iter()
            .map(|u| self.field.mul(a, u))
            .collect();
        out.sort_unstable();
        debug_assert!(out.windows(2).all(|w| w[0] != w[1]), "coset members must be distinct");
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Test-side reducibility oracle that never divides: a polynomial of
    /// degree d is reducible iff it appears among the carryless products
    /// of two smaller nonconstant polynomials.
    fn irreducible_by_product_sieve(p: u64) -> bool {
        let d = poly_degree(p);
        for da in 1..d {
            let db = d - da;
            for a in 1u64 << da..1u64 << (da + 1) {
                for b in 1u64 << db..1u64 << (db + 1) {
                    if clmul(a, b) == p {
                        return false;
                    }
                }
            }
        }
        true
    }

    #[test]
    fn default_modulus_is_smallest_irreducible_of_degree_4() {
        let expected = (1u64 << 4..1u64 << 5)
            .find(|&p| irreducible_by_product_sieve(p))
            .unwrap();
        assert_eq!(expected, 0b10011);
        assert_eq!(Field::new(4).unwrap().modulus(), 0b10011);
    }

    #[test]
    fn default_moduli_match_sieve_up_to_degree_12() {
        for n in 1..=12 {
            let expected = (1u64 << n..1u64 << (n + 1))
                .find(|&p| irreducible_by_product_sieve(p))
                .unwrap();
            assert_eq!(Field::new(n).unwrap().modulus(), expected, "degree {n}");
        }
    }

    #[test]
    fn degree_one_field_is_gf2() {
        let f = Field::new(1).unwrap();
        assert_eq!(f.modulus(), 0b10);
        assert_eq!(f.elements().collect::<Vec<_>>(), vec![Fe(0), Fe(1)]);
        assert_eq!(f.generator(), Fe::ONE);
        assert_eq!(f.mul(Fe::ONE, Fe::ONE), Fe::ONE);
    }

    #[test]
    fn reducible_or_wrong_degree_moduli_are_rejected() {
        // x^4 + x^2 + 1 = (x^2 + x + 1)^2
        match Field::with_modulus(4, 0b10101) {
            Err(Error::ReducibleModulus { factor, .. }) => assert_eq!(factor, 0b111),
            other => panic!("expected reducible modulus rejection, got {other:?}"),
        }
        assert!(matches!(
            Field::with_modulus(4, 0b100101),
            Err(Error::WrongModulusDegree { .. })
        ));
        assert!(matches!(Field::new(0), Err(Error::DegreeOutOfRange { .. })));
        assert!(matches!(Field::new(25), Err(Error::DegreeOutOfRange { .. })));
    }

    #[test]
    fn gf16_product_matches_hand_reduction() {
        // x * x^3 = x^4 = x + 1 mod x^4 + x + 1.
        let f = Field::new(4).unwrap();
        assert_eq!(f.mul(Fe(0b0010), Fe(0b1000)), Fe(0b0011));
        // Same product through the raw carryless path (no tables).
        let raw = Field::with_options(4, None, 0).unwrap();
        assert!(!raw.has_log_tables());
        assert_eq!(raw.mul(Fe(0b0010), Fe(0b1000)), Fe(0b0011));
    }

    #[test]
    fn multiplication_by_zero_and_inverse_of_generator() {
        let f = Field::new(6).unwrap();
        let g = f.generator();
        assert_eq!(f.mul(g, Fe::ZERO), Fe::ZERO);
        assert_eq!(f.mul(f.inv(g).unwrap(), g), Fe::ONE);
        assert!(matches!(f.inv(Fe::ZERO), Err(Error::ZeroInverse)));
    }

    #[test]
    fn every_nonzero_element_has_an_inverse_up_to_degree_12() {
        for n in [1, 2, 3, 6, 8, 12] {
            let f = Field::new(n).unwrap();
            for x in f.elements().skip(1) {
                assert_eq!(f.mul(f.inv(x).unwrap(), x), Fe::ONE);
            }
        }
    }

    #[test]
    fn generator_has_full_order() {
        for n in [2, 4, 8, 11, 12] {
            let f = Field::new(n).unwrap();
            let g = f.generator();
            assert_eq!(f.pow(g, f.order() as i64), Fe::ONE);
            for q in prime_factors(f.order()) {
                assert_ne!(f.pow(g, (f.order() / q) as i64), Fe::ONE, "n = {n}");
            }
        }
    }

    #[test]
    fn tabled_and_raw_arithmetic_agree() {
        let fast = Field::new(10).unwrap();
        let slow = Field::with_options(10, None, 0).unwrap();
        for x in 0..1u64 << 10 {
            let a = Fe(x);
            let b = Fe((x * 7 + 13) % (1 << 10));
            assert_eq!(fast.mul(a, b), slow.mul(a, b));
            assert_eq!(fast.frobenius(a, 3), slow.frobenius(a, 3));
            assert_eq!(fast.pow(a, 100), slow.pow(a, 100));
        }
    }

    #[test]
    fn pow_handles_negative_and_oversized_exponents() {
        let f = Field::new(8).unwrap();
        let g = f.generator();
        assert_eq!(f.pow(g, -1), f.inv(g).unwrap());
        assert_eq!(f.pow(g, f.order() as i64 + 5), f.pow(g, 5));
        assert_eq!(f.pow(Fe::ZERO, 0), Fe::ONE);
        assert_eq!(f.pow(Fe::ZERO, 17), Fe::ZERO);
    }

    #[test]
    fn frobenius_fixes_order_and_additivity() {
        let f = Field::new(9).unwrap();
        for x in [Fe(1), Fe(0x17), Fe(0x1ff), Fe(0x123)] {
            assert_eq!(f.frobenius(x, 0), x);
            assert_eq!(f.frobenius(x, 9), x);
            assert_eq!(f.frobenius(x, 2), f.square(f.square(x)));
        }
        for s in 0..200u64 {
            let x = Fe(s * 37 % 512);
            let y = Fe(s * 101 % 512);
            assert_eq!(
                f.frobenius(f.add(x, y), 5),
                f.add(f.frobenius(x, 5), f.frobenius(y, 5))
            );
        }
    }

    #[test]
    fn trace_lands_in_target_subfield_and_is_transitive() {
        for n in [4u32, 6, 8, 12] {
            let f = Field::new(n).unwrap();
            for x in f.elements() {
                for t in (1..=n).filter(|t| n % t == 0) {
                    let tr = f.relative_trace(x, n, t).unwrap();
                    assert_eq!(f.frobenius(tr, t as i64), tr);
                    // Tr^n_1 = Tr^t_1 ∘ Tr^n_t
                    let outer = f.relative_trace(tr, t, 1).unwrap();
                    assert_eq!(outer, f.relative_trace(x, n, 1).unwrap());
                }
            }
        }
    }

    #[test]
    fn trace_of_one_counts_parity_of_extension_degree() {
        let f = Field::new(4).unwrap();
        assert_eq!(f.relative_trace(Fe::ONE, 4, 1).unwrap(), Fe::ZERO);
        assert_eq!(f.relative_trace(Fe::ZERO, 4, 1).unwrap(), Fe::ZERO);
        let f5 = Field::new(5).unwrap();
        assert_eq!(f5.relative_trace(Fe::ONE, 5, 1).unwrap(), Fe::ONE);
    }

    #[test]
    fn trace_rejects_bad_divisor_chains() {
        let f = Field::new(6).unwrap();
        assert!(matches!(
            f.relative_trace(Fe::ONE, 6, 4),
            Err(Error::NotADivisor { .. })
        ));
        assert!(matches!(
            f.relative_trace(Fe::ONE, 5, 1),
            Err(Error::NotADivisor { .. })
        ));
        // Element outside F_4 inside GF(2^6).
        let g = f.generator();
        assert!(matches!(
            f.relative_trace(g, 2, 1),
            Err(Error::NotInSubfield { .. })
        ));
    }

    #[test]
    fn trace_is_balanced_on_every_field_up_to_degree_10() {
        for t in 1..=10 {
            let f = Field::new(t).unwrap();
            let zeros = f
                .elements()
                .filter(|&a| f.absolute_trace(a, t).unwrap() == 0)
                .count() as u64;
            assert_eq!(zeros, 1 << (t - 1), "t = {t}");
        }
    }

    #[test]
    fn subtrace_of_zero_and_one() {
        // S(1) over F_{2^t} is C(t,2) mod 2.
        for (t, expect) in [(4u32, 0u8), (5, 0), (6, 1)] {
            let f = Field::new(t).unwrap();
            assert_eq!(f.subtrace(Fe::ZERO, t).unwrap(), 0);
            assert_eq!(f.subtrace(Fe::ONE, t).unwrap(), expect, "t = {t}");
        }
    }

    #[test]
    fn subtrace_is_frobenius_invariant_up_to_degree_12() {
        for t in 1..=12 {
            let f = Field::new(t).unwrap();
            for a in f.elements() {
                let s = f.subtrace(a, t).unwrap();
                assert!(s <= 1);
                assert_eq!(f.subtrace(f.square(a), t).unwrap(), s);
            }
        }
    }

    #[test]
    fn discrete_log_roundtrips() {
        let f = Field::new(10).unwrap();
        let g = f.generator();
        assert_eq!(f.discrete_log(Fe::ONE).unwrap(), 0);
        assert_eq!(f.discrete_log(g).unwrap(), 1);
        for x in f.elements().skip(1) {
            assert_eq!(f.pow(g, f.discrete_log(x).unwrap() as i64), x);
        }
        assert!(matches!(f.discrete_log(Fe::ZERO), Err(Error::ZeroDiscreteLog)));
        let raw = Field::with_options(10, None, 0).unwrap();
        assert!(matches!(raw.discrete_log(Fe::ONE), Err(Error::LogTablesUnavailable)));
    }

    #[test]
    fn subfield_generator_power_has_small_order() {
        // ord of g^{(2^{3k}-1)/(2^k-1)} divides 2^k - 1.
        for k in [2u32, 3, 4] {
            let f = Field::new(3 * k).unwrap();
            let h = f.subfield(k).unwrap().generator();
            assert_eq!(f.pow(h, (1i64 << k) - 1), Fe::ONE);
        }
    }

    #[test]
    fn subfields_by_frobenius_and_by_generator_powers_coincide() {
        for n in [2u32, 4, 6, 8, 9, 10, 12] {
            let f = Field::new(n).unwrap();
            for k in (1..=n).filter(|k| n % k == 0) {
                let by_power = f.subfield_elements(k).unwrap();
                let by_frobenius: Vec<Fe> =
                    f.elements().filter(|&x| f.is_in_subfield(x, k)).collect();
                assert_eq!(by_power, by_frobenius, "n = {n}, k = {k}");
                assert_eq!(by_power.len() as u64, 1 << k);
            }
        }
    }

    #[test]
    fn gf_2_12_contains_64_sixth_degree_subfield_elements() {
        let f = Field::new(12).unwrap();
        assert_eq!(f.subfield_elements(6).unwrap().len(), 64);
    }

    #[test]
    fn cosets_partition_the_multiplicative_group() {
        let f = Field::new(6).unwrap();
        let mut seen = std::collections::BTreeSet::new();
        let mut coset_count = 0;
        for a in f.elements().skip(1) {
            if seen.contains(&a) {
                continue;
            }
            let coset = f.coset_of_subfield_star(a, 2).unwrap();
            assert_eq!(coset.len(), 3);
            for u in &coset {
                assert!(seen.insert(*u), "cosets must be disjoint");
            }
            coset_count += 1;
        }
        assert_eq!(coset_count, 21);
        assert_eq!(seen.len(), 63);
    }

    #[test]
    fn coset_of_one_is_the_subfield_star() {
        let f = Field::new(6).unwrap();
        let coset = f.coset_of_subfield_star(Fe::ONE, 3).unwrap();
        let star: Vec<Fe> = f.subfield_elements(3).unwrap()[1..].to_vec();
        assert_eq!(coset, star);
        assert!(matches!(
            f.coset_of_subfield_star(Fe::ZERO, 3),
            Err(Error::ZeroCoefficient)
        ));
    }

    #[test]
    fn field_axioms_on_pseudorandom_triples() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
        let f = Field::new(12).unwrap();
        for _ in 0..2000 {
            let a = Fe(rng.random_range(0..f.size()));
            let b = Fe(rng.random_range(0..f.size()));
            let c = Fe(rng.random_range(0..f.size()));
            assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
            assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            assert_eq!(f.add(a, f.add(b, c)), f.add(f.add(a, b), c));
            assert_eq!(
                f.relative_trace(f.add(a, b), 12, 3).unwrap(),
                f.add(
                    f.relative_trace(a, 12, 3).unwrap(),
                    f.relative_trace(b, 12, 3).unwrap()
                )
            );
        }
    }

    #[test]
    fn element_hex_roundtrip() {
        let f = Field::new(8).unwrap();
        let x = f.parse_element("1f").unwrap();
        assert_eq!(x, Fe(0x1f));
        assert_eq!(x.hex(), "1f");
        assert!(matches!(f.parse_element("100"), Err(Error::ElementOutOfRange { .. })));
        assert!(matches!(f.parse_element("zz"), Err(Error::BadElementHex(_))));
    }
}
