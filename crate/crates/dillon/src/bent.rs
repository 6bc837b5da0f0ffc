//! Dillon-type monomial maps and their bentness.
//!
//! The map under study is `f(x) = Tr^{2m}_k(a x^{2^m - 1})` from
//! `F_{2^{2m}}` to `F_{2^k}` with `k | m`. Bentness of `f` is equivalent
//! to every element of the coset `a F_{2^k}^*` being a Kloosterman zero
//! in `F_{2^m}`, which turns spectrum computations into coset checks and
//! makes exhaustive coefficient searches cheap. Both routes are
//! implemented and cross-checked: full Walsh spectra on the `2m`-bit
//! domain, and the coset criterion over `F_{2^m}`.

use rayon::prelude::*;

use crate::cyclotomic::unit_coset_reps;
use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::kloosterman::{coset_all_zeros, kloosterman_sum};
use crate::walsh::{is_bent, BooleanMap, OutputEncoding};

/// Largest input dimension for the direct hyperbent sweep.
pub const MAX_HYPERBENT_DEGREE: u32 = 12;

/// Largest `m` for exhaustive bent-coefficient searches.
pub const MAX_SEARCH_DEGREE: u32 = 12;

/// The triple `(m, k, a)` of a Dillon monomial map, with the coefficient
/// normalized into `F_{2^m}^*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DillonMonomial {
    m: u32,
    k: u32,
    a: Fe,
}

impl DillonMonomial {
    /// Builds the triple inside the ambient field `GF(2^{2m})`, replacing
    /// `a` by its normalization into `F_{2^m}^*` (which preserves
    /// bentness of the associated map).
    pub fn new(ambient: &Field, m: u32, k: u32, a: Fe) -> Result<DillonMonomial> {
        if ambient.degree() != 2 * m {
            return Err(Error::NotADivisor { divisor: 2 * m, of: ambient.degree() });
        }
        if k == 0 || m % k != 0 {
            return Err(Error::NotADivisor { divisor: k, of: m });
        }
        let a = normalize_coefficient(ambient, m, a)?;
        Ok(DillonMonomial { m, k, a })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn coefficient(&self) -> Fe {
        self.a
    }

    /// The monomial exponent 2^m - 1.
    pub fn exponent(&self) -> u64 {
        (1u64 << self.m) - 1
    }
}

/// Truth table of `x -> Tr^{2m}_k(a x^{2^m - 1})` over the ambient field
/// `GF(2^{2m})`, outputs encoded as k-bit codes.
///
/// The coefficient may be any nonzero ambient element; `f(0) = 0` always.
pub fn evaluate_dillon(ambient: &Field, m: u32, k: u32, a: Fe) -> Result<BooleanMap> {
    if ambient.degree() != 2 * m {
        return Err(Error::NotADivisor { divisor: 2 * m, of: ambient.degree() });
    }
    if k == 0 || m % k != 0 {
        return Err(Error::NotADivisor { divisor: k, of: m });
    }
    if a.is_zero() {
        return Err(Error::ZeroCoefficient);
    }
    let n = ambient.degree();
    let enc = OutputEncoding::new(ambient, k)?;
    let exponent = (1i64 << m) - 1;
    let table: std::result::Result<Vec<u16>, Error> = (0..ambient.size())
        .into_par_iter()
        .map(|x| {
            let y = ambient.mul(a, ambient.pow(Fe(x), exponent));
            Ok(enc.encode(ambient.relative_trace(y, n, k)?))
        })
        .collect();
    BooleanMap::new(n, k, table?)
}

/// Canonical representative of `a` in `F_{2^m}^*`: the square root of
/// `a^{2^m + 1}`, i.e. `(a^{2^m+1})^{2^{2m-1}}`.
///
/// The result lies in `F_{2^m}^*`, differs from `a` by a (2^m + 1)-th
/// root of unity, and the Dillon map for the result is bent exactly when
/// the map for `a` is. Elements already in `F_{2^m}^*` are fixed.
pub fn normalize_coefficient(ambient: &Field, m: u32, a: Fe) -> Result<Fe> {
    if ambient.degree() != 2 * m {
        return Err(Error::NotADivisor { divisor: 2 * m, of: ambient.degree() });
    }
    if a.is_zero() {
        return Err(Error::ZeroCoefficient);
    }
    let norm = ambient.pow(a, (1i64 << m) + 1);
    let root = ambient.pow(norm, 1i64 << (2 * m - 1));
    debug_assert_eq!(ambient.frobenius(root, m as i64), root);
    debug_assert!(!root.is_zero());
    Ok(root)
}

/// Bentness of the Dillon map through the coset criterion: every element
/// of `a F_{2^k}^*` must be a Kloosterman zero in `F_{2^m}`.
///
/// `a` must already lie in `F_{2^m}^*` of `field` (normalize first when
/// starting from an ambient coefficient); `field` may be `GF(2^m)` itself
/// or any field containing it.
pub fn is_bent_via_coset(field: &Field, m: u32, k: u32, a: Fe) -> Result<bool> {
    coset_all_zeros(field, m, k, a)
}

/// Scalar (k = 1) hyperbentness criterion: the map
/// `Tr^{2m}_1(a x^{2^m - 1})` is hyperbent exactly when `K_{2^m}(a) = 0`.
pub fn is_hyperbent_dillon_scalar(field: &Field, m: u32, a: Fe) -> Result<bool> {
    if a.is_zero() {
        return Err(Error::ZeroCoefficient);
    }
    Ok(kloosterman_sum(field, m, a)? == 0)
}

/// Hyperbentness by direct sweep: `f(x^d)` must be bent for every
/// substitution exponent `d` coprime to 2^n - 1, reduced to one
/// representative per cyclotomic coset (exponents in one coset give
/// linearly equivalent maps, so bentness is shared).
pub fn is_hyperbent_direct(field: &Field, f: &BooleanMap) -> Result<bool> {
    let n = field.degree();
    if n != f.input_degree() {
        return Err(Error::NotADivisor { divisor: f.input_degree(), of: n });
    }
    if n > MAX_HYPERBENT_DEGREE {
        return Err(Error::DegreeTooLarge { degree: n, limit: MAX_HYPERBENT_DEGREE });
    }
    for d in unit_coset_reps(field.order()) {
        let table: Vec<u16> = (0..field.size())
            .map(|x| f.value(field.pow(Fe(x), d as i64).0))
            .collect();
        let substituted = BooleanMap::new(n, f.output_degree(), table)?;
        if !is_bent(field, &substituted)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exhaustive search for bent Dillon coefficients over `F_{2^m}^*`,
/// returned sorted by bitmask.
///
/// Bentness is a property of the coset `a F_{2^k}^*`, so the search walks
/// one representative per coset (smallest discrete log) and expands hits
/// to all members. Representatives are tested in parallel; the merged
/// result order is fixed.
pub fn search_bent_dillon(field: &Field, k: u32) -> Result<Vec<Fe>> {
    let m = field.degree();
    if m > MAX_SEARCH_DEGREE {
        return Err(Error::DegreeTooLarge { degree: m, limit: MAX_SEARCH_DEGREE });
    }
    if k == 0 || m % k != 0 {
        return Err(Error::NotADivisor { divisor: k, of: m });
    }
    let g = field.generator();
    let coset_count = field.order() / ((1u64 << k) - 1);
    let hits: Result<Vec<Vec<Fe>>> = (0..coset_count)
        .into_par_iter()
        .map(|i| {
            let rep = field.pow(g, i as i64);
            if coset_all_zeros(field, m, k, rep)? {
                Ok(field.coset_of_subfield_star(rep, k)?)
            } else {
                Ok(Vec::new())
            }
        })
        .collect();
    let mut out: Vec<Fe> = hits?.into_iter().flatten().collect();
    out.sort_unstable();
    Ok(out)
}
