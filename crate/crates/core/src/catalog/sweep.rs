//! The default catalogue used by sweeps.

use super::spec::{ActionSpec, Family, GroupSpec};
use crate::numtheory::{gcd, primes_up_to};

fn fam(f: Family, params: &[u64]) -> GroupSpec {
    GroupSpec::family(f, params)
}

/// Least `e > 1` of multiplicative order exactly `d` modulo the prime `p`.
fn unit_of_order(p: u64, d: u64) -> Option<u64> {
    (2..p).find(|&e| {
        let mut x = 1;
        for k in 1..=d {
            x = x * e % p;
            if x == 1 {
                return k == d;
            }
        }
        false
    })
}

/// The sweep catalogue restricted to orders `<= max_order`, sorted by order
/// and then by spec string. Isomorphic entries are not merged.
pub fn default_catalogue(max_order: u64) -> Vec<GroupSpec> {
    let mut specs = Vec::new();
    let top = max_order.min(200);
    for n in 1..=top {
        specs.push(fam(Family::Cyclic, &[n]));
    }
    for n in (6..=top).step_by(2) {
        specs.push(fam(Family::Dihedral, &[n]));
    }
    let mut q = 8;
    while q <= top {
        specs.push(fam(Family::Quaternion, &[q]));
        q *= 2;
    }
    for p in primes_up_to(top) {
        let mut k = 2;
        while p.pow(k) <= top {
            specs.push(fam(Family::ElementaryAbelian, &[p, k as u64]));
            k += 1;
        }
    }
    let cyclic = |n| fam(Family::Cyclic, &[n]);
    let odd_primes: Vec<u64> = primes_up_to(top).into_iter().filter(|&p| p > 2).collect();
    // Z_q : Z_p with a faithful action.
    for &p in &odd_primes {
        for &q in odd_primes.iter().filter(|&&q| q > p && p * q <= top && (q - 1) % p == 0) {
            let e = unit_of_order(q, p).unwrap();
            specs.push(GroupSpec::semidirect(cyclic(q), cyclic(p), ActionSpec::Exponents(vec![e as i64])));
        }
    }
    // Z_p : Z_{2^n}, one action of each nontrivial order, and Z_p : Q_{2^n}.
    for &p in &odd_primes {
        let mut m = 2;
        while p * m <= top {
            let mut d = 2;
            while d <= gcd(m, p - 1) {
                if (p - 1) % d == 0 && m % d == 0 {
                    let e = unit_of_order(p, d).unwrap();
                    specs.push(GroupSpec::semidirect(cyclic(p), cyclic(m), ActionSpec::Exponents(vec![e as i64])));
                }
                d *= 2;
            }
            if m >= 8 {
                for exps in [[1, 1], [1, -1], [-1, 1], [-1, -1]] {
                    specs.push(GroupSpec::semidirect(
                        cyclic(p),
                        fam(Family::Quaternion, &[m]),
                        ActionSpec::Exponents(exps.to_vec()),
                    ));
                }
            }
            m *= 2;
        }
    }
    for (f, params) in [
        (Family::Alternating, &[4u64][..]),
        (Family::Symmetric, &[4]),
        (Family::Alternating, &[5]),
        (Family::Symmetric, &[5]),
        (Family::Sl2, &[3]),
        (Family::Sl2, &[5]),
        (Family::Psl2, &[7]),
        (Family::BinaryOctahedral, &[]),
    ] {
        specs.push(fam(f, params));
    }
    let factors = [
        cyclic(2),
        cyclic(3),
        cyclic(4),
        cyclic(5),
        fam(Family::ElementaryAbelian, &[2, 2]),
        fam(Family::Dihedral, &[6]),
        fam(Family::Dihedral, &[8]),
        fam(Family::Quaternion, &[8]),
        fam(Family::Alternating, &[4]),
        fam(Family::Sl2, &[3]),
        fam(Family::Symmetric, &[4]),
        fam(Family::Alternating, &[5]),
    ];
    for (i, a) in factors.iter().enumerate() {
        for b in &factors[i..] {
            specs.push(GroupSpec::product(a.clone(), b.clone()));
        }
    }
    specs.push(GroupSpec::product(cyclic(5), cyclic(8)));
    debug_assert!(specs.iter().all(|s| s.expected_order().is_some()));

    let mut keyed: Vec<(u64, String, GroupSpec)> = specs
        .into_iter()
        .filter_map(|s| {
            let n = s.expected_order()?;
            (n <= max_order).then(|| (n, s.to_string(), s))
        })
        .collect();
    keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    keyed.dedup_by(|a, b| a.1 == b.1);
    keyed.into_iter().map(|(_, _, s)| s).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalogue_shape() {
        let all = default_catalogue(200);
        assert!(all.windows(2).all(|w| w[0].expected_order() <= w[1].expected_order()));
        assert_eq!(default_catalogue(1).len(), 1);
        let names: Vec<String> = all.iter().map(ToString::to_string).collect();
        for must in [
            "semidirect:cyclic:7:cyclic:3:exp=2",
            "semidirect:cyclic:11:cyclic:5:exp=3",
            "product:cyclic:5*cyclic:8",
            "product:cyclic:3*quaternion:8",
            "binary_octahedral",
        ] {
            assert!(names.iter().any(|n| n == must), "{must} missing");
        }
        assert!(all.iter().all(|s| s.expected_order().unwrap() <= 200));
        assert_eq!(unit_of_order(7, 3), Some(2));
        assert_eq!(unit_of_order(5, 4), Some(2));
    }
}
