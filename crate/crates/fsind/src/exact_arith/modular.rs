//! Small modular-arithmetic helpers shared by the whole crate.

/// Greatest common divisor; `gcd(0, 0) = 0`.
pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Least common multiple, panicking on overflow.
pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// Extended Euclid: returns `(g, x, y)` with `a*x + b*y = g = gcd(a, b)`.
pub fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = egcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// `a * b mod m` without overflow; `m` must be nonzero.
pub fn mod_mul(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `base^exp mod m`; `m` must be nonzero. `x^0 = 1` even mod 1 (i.e. 0).
pub fn mod_pow(base: u64, exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut result = 1u64;
    let mut base = base % m;
    let mut exp = exp;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mod_mul(result, base, m);
        }
        base = mod_mul(base, base, m);
        exp >>= 1;
    }
    result
}

/// Multiplicative inverse of `a` mod `m`, when `gcd(a, m) = 1`.
pub fn mod_inv(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (g, x, _) = egcd((a % m) as i128, m as i128);
    if g != 1 {
        return None;
    }
    Some(x.rem_euclid(m as i128) as u64)
}

/// Reduce a signed value into `[0, m)`.
pub fn mod_signed(a: i128, m: u64) -> u64 {
    a.rem_euclid(m as i128) as u64
}

/// Trial-division primality test, adequate for the parameter ranges here.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Solve `u * a = gcd(a, k) (mod k)` with `u` a unit mod `k`.
///
/// Total for every `a` and every `k >= 1`; returns `(gcd(a, k), u)`. The
/// unit is found by lifting the inverse of `a / g` mod `k / g` through the
/// candidates `u0 + t * (k / g)`, the first of which coprime to `k` is kept.
pub fn solve_unit_congruence(a: u64, k: u64) -> (u64, u64) {
    assert!(k >= 1, "modulus must be positive");
    if k == 1 {
        return (1, 0);
    }
    let a = a % k;
    if a == 0 {
        return (k, 1);
    }
    let g = gcd(a, k);
    let k1 = k / g;
    let a1 = (a / g) % k1;
    let u0 = if k1 == 1 {
        0
    } else {
        mod_inv(a1, k1).expect("a/g is a unit mod k/g")
    };
    for t in 0..g {
        let u = u0 + t * k1;
        if gcd(u, k) == 1 {
            debug_assert_eq!(mod_mul(u, a, k), g % k);
            return (g, u);
        }
    }
    unreachable!("a lift of the inverse to a unit mod k always exists");
}
