//! Cyclotomic cosets of exponents modulo 2^n - 1.
//!
//! Doubling an exponent corresponds to composing a monomial substitution
//! with the GF(2)-linear squaring map, so all exponents in one coset give
//! linearly equivalent substitutions. Sweeps over substitution exponents
//! therefore only need one representative per coset.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// The cyclotomic coset of `d` modulo `modulus`: the orbit of `d` under
/// doubling, in orbit order starting from `d`.
pub fn coset_of(d: u64, modulus: u64) -> Vec<u64> {
    assert!(modulus > 0 && d < modulus);
    let mut orbit = vec![d];
    let mut x = d * 2 % modulus;
    while x != d {
        orbit.push(x);
        x = x * 2 % modulus;
    }
    orbit
}

/// Smallest representatives of the cyclotomic cosets of the units modulo
/// `modulus` (exponents coprime to it), sorted ascending.
pub fn unit_coset_reps(modulus: u64) -> Vec<u64> {
    let mut seen = vec![false; modulus as usize];
    let mut reps = Vec::new();
    for d in 1..modulus {
        if seen[d as usize] || gcd(d, modulus) != 1 {
            continue;
        }
        for x in coset_of(d, modulus) {
            seen[x as usize] = true;
        }
        reps.push(d);
    }
    reps
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coset_orbits_close_under_doubling() {
        let orbit = coset_of(1, 15);
        assert_eq!(orbit, vec![1, 2, 4, 8]);
        let orbit = coset_of(7, 15);
        assert_eq!(orbit, vec![7, 14, 13, 11]);
    }

    #[test]
    fn unit_reps_mod_255_count_is_sixteen() {
        // phi(255) = 128 units; every unit orbit has the full length
        // ord_255(2) = 8, leaving 16 cosets.
        let reps = unit_coset_reps(255);
        assert_eq!(reps.len(), 16);
        assert_eq!(reps[0], 1);
        let mut total = 0;
        for &d in &reps {
            assert_eq!(gcd(d, 255), 1);
            total += coset_of(d, 255).len();
        }
        assert_eq!(total, 128);
    }

    #[test]
    fn representatives_are_minimal_and_disjoint() {
        for modulus in [7u64, 15, 31, 63, 127] {
            let reps = unit_coset_reps(modulus);
            let mut seen = std::collections::BTreeSet::new();
            for &d in &reps {
                let orbit = coset_of(d, modulus);
                assert_eq!(*orbit.iter().min().unwrap(), d);
                for x in orbit {
                    assert!(seen.insert(x));
                }
            }
            let units = (1..modulus).filter(|&d| gcd(d, modulus) == 1).count();
            assert_eq!(seen.len(), units);
        }
    }
}
