//! Walsh spectra of vectorial Boolean maps.
//!
//! A map `f : F_{2^n} -> F_{2^k}` is stored as a truth table of k-bit
//! codes ([`BooleanMap`]). Its Walsh transform at `(a, b)` is
//!
//! ```text
//! W_f(a, b) = sum over x of (-1)^( Tr^k_1(b f(x)) + Tr^n_1(a x) )
//! ```
//!
//! with `b` ranging over the nonzero elements of the output subfield.
//! [`walsh_transform_direct`] evaluates this sum literally and serves as
//! the reference; [`full_walsh_spectrum`] computes all values per
//! component with an in-place fast Walsh-Hadamard transform, using a dual
//! basis to translate `Tr^n_1(a x)` into a bit dot product so that the
//! transform index order corresponds exactly to field elements.

use rayon::prelude::*;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::{Fe, Field};

/// Largest input dimension accepted by the fast spectrum path.
pub const MAX_SPECTRUM_DEGREE: u32 = 20;

/// Truth table of a map from `F_{2^n}` to `F_{2^k}`; entry `x` holds the
/// k-bit output code of the input with bitmask `x`.
#[derive(Clone)]
pub struct BooleanMap {
    n: u32,
    k: u32,
    table: Vec<u16>,
}

impl BooleanMap {
    pub fn new(n: u32, k: u32, table: Vec<u16>) -> Result<BooleanMap> {
        if table.len() != 1usize << n {
            return Err(Error::BadTableLength { len: table.len(), n });
        }
        if let Some(&bad) = table.iter().find(|&&v| (v as u64) >> k != 0) {
            return Err(Error::EntryOutOfRange { entry: bad as u64, k });
        }
        Ok(BooleanMap { n, k, table })
    }

    pub fn input_degree(&self) -> u32 {
        self.n
    }

    pub fn output_degree(&self) -> u32 {
        self.k
    }

    pub fn value(&self, x: u64) -> u16 {
        self.table[x as usize]
    }

    pub fn table(&self) -> &[u16] {
        &self.table
    }
}

/// Pair of GF(2)-bases of the field with `Tr(primal_i * dual_j) = δ_ij`.
pub struct DualBasis {
    primal: Vec<Fe>,
    dual: Vec<Fe>,
}

impl DualBasis {
    /// Dual of the polynomial basis `1, x, ..., x^{n-1}`.
    pub fn of(field: &Field) -> DualBasis {
        let primal: Vec<Fe> = (0..field.degree()).map(|i| Fe(1 << i)).collect();
        DualBasis::relative_to(field, &primal)
    }

    /// Dual of an arbitrary GF(2)-basis, by inverting the trace Gram
    /// matrix over GF(2). The trace form is non-degenerate, so a singular
    /// system can only mean a broken field implementation; that panics.
    pub fn relative_to(field: &Field, primal: &[Fe]) -> DualBasis {
        let n = field.degree() as usize;
        assert_eq!(primal.len(), n, "basis must have {n} elements");
        // rows[i]: low n bits = Gram row Tr(p_i p_j), high n bits = identity.
        let mut rows: Vec<u64> = (0..n)
            .map(|i| {
                let mut row = 1u64 << (n + i);
                for j in 0..n {
                    let bit = field.abs_trace_bit(field.mul(primal[i], primal[j]), field.degree());
                    row |= (bit as u64) << j;
                }
                row
            })
            .collect();
        // Gauss-Jordan over GF(2).
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| rows[r] >> col & 1 == 1)
                .expect("trace form is non-degenerate; field implementation is broken");
            rows.swap(col, pivot);
            for r in 0..n {
                if r != col && rows[r] >> col & 1 == 1 {
                    rows[r] ^= rows[col];
                }
            }
        }
        // Column j of the inverse gives the dual element d_j = Σ_l inv[l][j] p_l.
        let dual: Vec<Fe> = (0..n)
            .map(|j| {
                let mut d = Fe::ZERO;
                for (l, row) in rows.iter().enumerate() {
                    if row >> (n + j) & 1 == 1 {
                        d = field.add(d, primal[l]);
                    }
                }
                d
            })
            .collect();
        let out = DualBasis { primal: primal.to_vec(), dual };
        for i in 0..n {
            for j in 0..n {
                let bit = field.abs_trace_bit(field.mul(out.primal[i], out.dual[j]), field.degree());
                assert_eq!(
                    bit,
                    (i == j) as u8,
                    "dual basis pairing failed; field implementation is broken"
                );
            }
        }
        out
    }

    pub fn primal(&self) -> &[Fe] {
        &self.primal
    }

    pub fn dual(&self) -> &[Fe] {
        &self.dual
    }

    /// Coordinates of `a` against the dual basis, i.e. the bit vector
    /// `w_i = Tr(a * primal_i)`, packed as an integer index.
    pub fn coordinates(&self, field: &Field, a: Fe) -> u64 {
        let mut w = 0u64;
        for (i, &p) in self.primal.iter().enumerate() {
            w |= (field.abs_trace_bit(field.mul(a, p), field.degree()) as u64) << i;
        }
        w
    }

    /// Permutation sending a transform index `w` to the bitmask of the
    /// element `Σ w_j dual_j`, extended linearly in O(2^n).
    pub(crate) fn index_to_element_table(&self, field: &Field) -> Vec<u32> {
        let n = field.degree();
        let mut out = vec![0u32; 1 << n];
        for w in 1usize..1 << n {
            let low = w.trailing_zeros() as usize;
            out[w] = out[w ^ (1 << low)] ^ self.dual[low].0 as u32;
        }
        out
    }
}

/// In-place fast Walsh-Hadamard transform; length must be a power of two.
///
/// On output, `data[w] = Σ_x input[x] * (-1)^popcount(w & x)`.
pub fn fwht_in_place(data: &mut [i32]) {
    let len = data.len();
    assert!(len.is_power_of_two());
    let mut half = 1;
    while half < len {
        let mut block = 0;
        while block < len {
            for i in block..block + half {
                let (u, v) = (data[i], data[i + half]);
                data[i] = u + v;
                data[i + half] = u - v;
            }
            block += half * 2;
        }
        half *= 2;
    }
}

/// Fixed encoding of the output field `F_{2^k}` inside its ambient field:
/// the subfield generator `h` yields the GF(2)-basis `h^0, ..., h^{k-1}`,
/// and a k-bit code holds the coordinates against that basis. Spectra are
/// basis-independent; the encoding only pins down truth-table I/O.
pub struct OutputEncoding {
    k: u32,
    decode: Vec<Fe>,
    encode: HashMap<u64, u16>,
}

impl OutputEncoding {
    pub fn new(field: &Field, k: u32) -> Result<OutputEncoding> {
        let sub = field.subfield(k)?;
        let h = sub.generator();
        let basis: Vec<Fe> = (0..k).map(|i| field.pow(h, i as i64)).collect();
        let mut decode = vec![Fe::ZERO; 1 << k];
        for code in 1usize..1 << k {
            let low = code.trailing_zeros() as usize;
            decode[code] = field.add(decode[code ^ (1 << low)], basis[low]);
        }
        let mut encode = HashMap::with_capacity(1 << k);
        for (code, &y) in decode.iter().enumerate() {
            let clash = encode.insert(y.0, code as u16);
            assert!(clash.is_none(), "subfield generator powers must form a basis");
        }
        Ok(OutputEncoding { k, decode, encode })
    }

    pub fn output_degree(&self) -> u32 {
        self.k
    }

    /// Field element for a k-bit code.
    pub fn decode(&self, code: u16) -> Fe {
        self.decode[code as usize]
    }

    /// k-bit code of a subfield element; panics if `y` is not in the
    /// output subfield (an internal invariant for trace-produced values).
    pub fn encode(&self, y: Fe) -> u16 {
        *self
            .encode
            .get(&y.0)
            .unwrap_or_else(|| panic!("{y:?} is not an element of the output subfield"))
    }

    /// Signs `(-1)^{Tr^k_1(b * decode(code))}` for every code.
    fn component_signs(&self, field: &Field, b: Fe) -> Vec<i32> {
        self.decode
            .iter()
            .map(|&y| 1 - 2 * field.abs_trace_bit(field.mul(b, y), self.k) as i32)
            .collect()
    }
}

/// All Walsh values of a map, per component `b`, with a bent summary.
pub struct WalshSpectrum {
    n: u32,
    k: u32,
    b_elements: Vec<Fe>,
    values: Vec<Vec<i32>>,
    max_abs: i32,
    min_abs: i32,
    is_bent: bool,
}

impl WalshSpectrum {
    pub fn input_degree(&self) -> u32 {
        self.n
    }

    pub fn output_degree(&self) -> u32 {
        self.k
    }

    /// The nonzero components `b`, sorted by bitmask, aligned with
    /// [`WalshSpectrum::component`].
    pub fn b_elements(&self) -> &[Fe] {
        &self.b_elements
    }

    /// Walsh values for one component, indexed by the bitmask of `a`.
    pub fn component(&self, i: usize) -> &[i32] {
        &self.values[i]
    }

    pub fn value(&self, a: Fe, b: Fe) -> Option<i32> {
        let i = self.b_elements.iter().position(|&x| x == b)?;
        self.values[i].get(a.0 as usize).copied()
    }

    pub fn max_abs(&self) -> i32 {
        self.max_abs
    }

    pub fn min_abs(&self) -> i32 {
        self.min_abs
    }

    /// Whether every |W(a, b)| equals 2^{n/2} (requires even n).
    pub fn is_bent(&self) -> bool {
        self.is_bent
    }

    /// Parseval sums per component; each must equal 2^{2n}.
    pub fn parseval_sums(&self) -> Vec<i64> {
        self.values
            .iter()
            .map(|vs| vs.iter().map(|&w| (w as i64) * (w as i64)).sum())
            .collect()
    }

    pub fn parseval_holds(&self) -> bool {
        let want = 1i64 << (2 * self.n);
        self.parseval_sums().iter().all(|&s| s == want)
    }

    /// CSV rows `a,b,w` (element bitmasks in hex), components in bitmask
    /// order of `b`, then `a` ascending.
    pub fn write_csv<W: std::io::Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "a,b,w")?;
        for (i, b) in self.b_elements.iter().enumerate() {
            for (a, w) in self.values[i].iter().enumerate() {
                writeln!(out, "{:x},{:x},{}", a, b.0, w)?;
            }
        }
        Ok(())
    }
}

fn validate_spectrum_inputs(field: &Field, f: &BooleanMap) -> Result<()> {
    if field.degree() != f.input_degree() {
        return Err(Error::NotADivisor { divisor: f.input_degree(), of: field.degree() });
    }
    if f.input_degree() > MAX_SPECTRUM_DEGREE {
        return Err(Error::DegreeTooLarge {
            degree: f.input_degree(),
            limit: MAX_SPECTRUM_DEGREE,
        });
    }
    Ok(())
}

/// Walsh transform at a single `(a, b)` by direct summation over the
/// whole domain. Reference oracle for the fast path; `b` must be a
/// nonzero element of the output subfield.
pub fn walsh_transform_direct(field: &Field, f: &BooleanMap, a: Fe, b: Fe) -> Result<i64> {
    validate_spectrum_inputs(field, f)?;
    if b.is_zero() {
        return Err(Error::ZeroComponent);
    }
    let k = f.output_degree();
    let sub = field.subfield(k)?;
    if !sub.contains(b) {
        return Err(Error::NotInSubfield { bits: b.0, degree: k });
    }
    let enc = OutputEncoding::new(field, k)?;
    let signs = enc.component_signs(field, b);
    let n = field.degree();
    let mut acc = 0i64;
    for x in field.elements() {
        let input_bit = field.abs_trace_bit(field.mul(a, x), n) as i32;
        let s = signs[f.value(x.0) as usize] * (1 - 2 * input_bit);
        acc += s as i64;
    }
    Ok(acc)
}

/// A single component spectrum by FWHT, indexed by the bitmask of `a`.
fn component_spectrum(
    field: &Field,
    f: &BooleanMap,
    enc: &OutputEncoding,
    index_to_element: &[u32],
    b: Fe,
) -> Vec<i32> {
    let signs = enc.component_signs(field, b);
    let mut data: Vec<i32> = f.table().iter().map(|&code| signs[code as usize]).collect();
    fwht_in_place(&mut data);
    // data[w] = W(a, b) for the element a with dual coordinates w.
    let mut out = vec![0i32; data.len()];
    for (w, &v) in data.iter().enumerate() {
        out[index_to_element[w] as usize] = v;
    }
    out
}

/// Full Walsh spectrum over every `a` and every nonzero component `b`,
/// one FWHT per component. Components are independent and run in
/// parallel; the output ordering is fixed by bitmask regardless.
pub fn full_walsh_spectrum(field: &Field, f: &BooleanMap) -> Result<WalshSpectrum> {
    validate_spectrum_inputs(field, f)?;
    let k = f.output_degree();
    let enc = OutputEncoding::new(field, k)?;
    let index_to_element = DualBasis::of(field).index_to_element_table(field);
    let b_elements: Vec<Fe> = field.subfield(k)?.star_elements();
    let values: Vec<Vec<i32>> = b_elements
        .par_iter()
        .map(|&b| component_spectrum(field, f, &enc, &index_to_element, b))
        .collect();
    let n = field.degree();
    let max_abs = values.iter().flatten().map(|w| w.abs()).max().unwrap_or(0);
    let min_abs = values.iter().flatten().map(|w| w.abs()).min().unwrap_or(0);
    let is_bent = n % 2 == 0 && max_abs == min_abs && max_abs == 1 << (n / 2);
    Ok(WalshSpectrum { n, k, b_elements, values, max_abs, min_abs, is_bent })
}

/// Bent test with short-circuit: stops at the first component whose
/// spectrum is not flat at 2^{n/2}. Errors on odd `n`.
pub fn is_bent(field: &Field, f: &BooleanMap) -> Result<bool> {
    validate_spectrum_inputs(field, f)?;
    let n = field.degree();
    if n % 2 != 0 {
        return Err(Error::OddDimension { n });
    }
    let k = f.output_degree();
    let enc = OutputEncoding::new(field, k)?;
    let index_to_element = DualBasis::of(field).index_to_element_table(field);
    let want = 1i32 << (n / 2);
    for b in field.subfield(k)?.star_elements() {
        let spectrum = component_spectrum(field, f, &enc, &index_to_element, b);
        if spectrum.iter().any(|w| w.abs() != want) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fwht_matches_quadratic_definition() {
        let input: Vec<i32> = vec![3, -1, 4, 1, -5, 9, 2, -6];
        let mut data = input.clone();
        fwht_in_place(&mut data);
        for w in 0..8usize {
            let direct: i32 = input
                .iter()
                .enumerate()
                .map(|(x, &v)| if (w & x).count_ones() % 2 == 0 { v } else { -v })
                .sum();
            assert_eq!(data[w], direct);
        }
    }

    #[test]
    fn dual_basis_pairing_is_identity_up_to_degree_12() {
        for n in [1u32, 2, 3, 4, 6, 8, 9, 12] {
            let field = Field::new(n).unwrap();
            let basis = DualBasis::of(&field);
            // The constructor itself asserts the pairing; spot-check the
            // bilinear expansion Tr(a x) = <coords(a), bits(x)>.
            for s in 0..200u64 {
                let a = Fe(s.wrapping_mul(2654435761) % field.size());
                let x = Fe(s.wrapping_mul(40503) % field.size());
                let dot = (basis.coordinates(&field, a) & x.0).count_ones() % 2;
                assert_eq!(dot as u8, field.abs_trace_bit(field.mul(a, x), n));
            }
        }
    }

    #[test]
    fn dual_of_the_dual_is_the_primal() {
        for n in [4u32, 6, 9] {
            let field = Field::new(n).unwrap();
            let first = DualBasis::of(&field);
            let second = DualBasis::relative_to(&field, first.dual());
            assert_eq!(second.dual(), first.primal());
        }
    }

    #[test]
    fn zero_map_spectrum_is_a_point_mass() {
        let field = Field::new(6).unwrap();
        let f = BooleanMap::new(6, 2, vec![0; 64]).unwrap();
        let spectrum = full_walsh_spectrum(&field, &f).unwrap();
        for (i, _) in spectrum.b_elements().iter().enumerate() {
            let comp = spectrum.component(i);
            assert_eq!(comp[0], 64);
            assert!(comp[1..].iter().all(|&w| w == 0));
        }
        assert!(spectrum.parseval_holds());
        assert!(!is_bent(&field, &f).unwrap());
    }

    #[test]
    fn direct_transform_matches_fwht_exhaustively_small() {
        let field = Field::new(6).unwrap();
        // An arbitrary nonlinear map to F_4.
        let table: Vec<u16> = (0..64u64)
            .map(|x| {
                let y = field.mul(Fe(x), field.mul(Fe(x), Fe(x)));
                let t = field.relative_trace(y, 6, 2).unwrap();
                OutputEncoding::new(&field, 2).unwrap().encode(t)
            })
            .collect();
        let f = BooleanMap::new(6, 2, table).unwrap();
        let spectrum = full_walsh_spectrum(&field, &f).unwrap();
        for b in spectrum.b_elements().to_vec() {
            for a in field.elements() {
                let direct = walsh_transform_direct(&field, &f, a, b).unwrap();
                assert_eq!(direct, spectrum.value(a, b).unwrap() as i64);
            }
        }
        assert!(spectrum.parseval_holds());
    }

    #[test]
    fn direct_transform_rejects_bad_components() {
        let field = Field::new(6).unwrap();
        let f = BooleanMap::new(6, 2, vec![0; 64]).unwrap();
        assert!(matches!(
            walsh_transform_direct(&field, &f, Fe::ZERO, Fe::ZERO),
            Err(Error::ZeroComponent)
        ));
        // b must lie in the output subfield F_4.
        let g = field.generator();
        assert!(matches!(
            walsh_transform_direct(&field, &f, Fe::ZERO, g),
            Err(Error::NotInSubfield { .. })
        ));
    }

    #[test]
    fn is_bent_requires_even_dimension() {
        let field = Field::new(5).unwrap();
        let f = BooleanMap::new(5, 1, vec![0; 32]).unwrap();
        assert!(matches!(is_bent(&field, &f), Err(Error::OddDimension { n: 5 })));
    }

    #[test]
    fn boolean_map_validates_shape() {
        assert!(matches!(
            BooleanMap::new(4, 2, vec![0; 15]),
            Err(Error::BadTableLength { .. })
        ));
        assert!(matches!(
            BooleanMap::new(4, 2, vec![4; 16]),
            Err(Error::EntryOutOfRange { .. })
        ));
    }

    #[test]
    fn output_encoding_roundtrips_subfield_elements() {
        let field = Field::new(12).unwrap();
        let enc = OutputEncoding::new(&field, 3).unwrap();
        for code in 0..8u16 {
            assert_eq!(enc.encode(enc.decode(code)), code);
        }
        let sub: std::collections::BTreeSet<u64> = field
            .subfield_elements(3)
            .unwrap()
            .iter()
            .map(|e| e.0)
            .collect();
        let decoded: std::collections::BTreeSet<u64> =
            (0..8u16).map(|c| enc.decode(c).0).collect();
        assert_eq!(sub, decoded);
    }
}
