//! Tabulated excluded primes and goodness conditions by root datum.
//!
//! These are the type-by-type lists; the rank computations in the parent
//! module are checked against them.

use crate::linalg::prime_factors;
use crate::rootdata::{CartanType, RootDatum, SimpleType};
use num_bigint::BigInt;

fn factor_primes(f: &SimpleType) -> &'static [u64] {
    match (f.cartan_type, f.rank) {
        (CartanType::B, r) if r >= 3 => &[2],
        (CartanType::D, _) | (CartanType::G, _) => &[2],
        (CartanType::F, _) | (CartanType::E, 6) | (CartanType::E, 7) => &[2, 3],
        (CartanType::E, 8) => &[2, 3, 5],
        _ => &[],
    }
}

/// Primes excluded by the type of the simply connected cover and by
/// `pi_1(G_der)`, ascending.
pub fn excluded_prime_list(datum: &RootDatum) -> Vec<u64> {
    let mut primes: Vec<u64> = datum
        .root_system()
        .factors()
        .iter()
        .flat_map(|f| factor_primes(f).iter().copied())
        .collect();
    primes.extend(prime_factors(&BigInt::from(datum.fundamental_group_order())));
    primes.sort_unstable();
    primes.dedup();
    primes
}

pub fn excluded_n(datum: &RootDatum) -> u64 {
    excluded_prime_list(datum).iter().product()
}

pub fn is_n_good(datum: &RootDatum, p: u64) -> bool {
    !excluded_prime_list(datum).contains(&p)
}

/// `C_2` and `B_2` are the same root system, so both count as type `C`.
pub fn is_g_good(datum: &RootDatum, p: u64) -> bool {
    let factors = datum.root_system().factors();
    let has_c = factors
        .iter()
        .any(|f| f.cartan_type == CartanType::C || (f.cartan_type == CartanType::B && f.rank == 2));
    let has_g2 = factors.iter().any(|f| f.cartan_type == CartanType::G);
    is_n_good(datum, p)
        && !(p == 2 && has_c)
        && !(p == 3 && has_g2)
        && !datum.fundamental_group_order().is_multiple_of(p)
        && !datum.center_component_order().is_multiple_of(p)
}
