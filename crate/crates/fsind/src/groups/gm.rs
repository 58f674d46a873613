//! The sets `G_m(x) = { a in G : prod_{j=0}^{m-1} a^-j x a^j = 1 }`,
//! computed both from the defining product and by closed-form membership
//! tests.

use super::element::GroupElement;
use super::group::Group;
use super::spec::GroupSpec;
use crate::exact_arith::{mod_mul, mod_pow, mod_signed};

/// Members of `G_m(x)` evaluated via the defining product, one literal
/// multiplication per factor.
pub fn gm_set_product(group: &Group, x: u32, m: u64) -> Vec<u32> {
    let mut members = Vec::new();
    for a in 0..group.order() as u32 {
        let a_inv = group.inv_idx(a);
        let mut product = 0u32;
        let mut conj = x;
        for _ in 0..m {
            product = group.mul_idx(product, conj);
            conj = group.mul_idx(group.mul_idx(a_inv, conj), a);
        }
        if product == 0 {
            members.push(a);
        }
    }
    members
}

/// Incremental evaluation of `G_m(x)` for `m = 0, 1, 2, ...`: each
/// [`advance`](GmSweep::advance) extends every candidate's partial product
/// by one factor.
pub struct GmSweep<'g> {
    group: &'g Group,
    products: Vec<u32>,
    conjugates: Vec<u32>,
    m: u64,
}

impl<'g> GmSweep<'g> {
    pub fn new(group: &'g Group, x: u32) -> GmSweep<'g> {
        GmSweep {
            group,
            products: vec![0; group.order()],
            conjugates: vec![x; group.order()],
            m: 0,
        }
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn advance(&mut self) {
        let g = self.group;
        for a in 0..g.order() as u32 {
            let idx = a as usize;
            self.products[idx] = g.mul_idx(self.products[idx], self.conjugates[idx]);
            self.conjugates[idx] =
                g.mul_idx(g.mul_idx(g.inv_idx(a), self.conjugates[idx]), a);
        }
        self.m += 1;
    }

    pub fn is_member(&self, a: u32) -> bool {
        self.products[a as usize] == 0
    }
}

/// Closed-form membership test for `a in G_m(x)`.
pub fn gm_member_formula(group: &Group, x: GroupElement, a: GroupElement, m: u64) -> bool {
    match group.spec() {
        GroupSpec::Metacyclic { k, q, n, l } => {
            let gc = group.constants().expect("metacyclic constants");
            let d = gc.d_mod_kq;
            let kq = k * q;
            let ql = q * l;
            let (i, u) = (x.i, x.j);
            let (s, v) = (a.i, a.j);
            if mod_mul(m % ql, u, ql) != 0 {
                return false;
            }
            let kq_divides_mdi =
                || mod_mul(mod_mul(m % kq, d, kq), i, kq) == 0;
            match (u % q == 0, v % q == 0) {
                (true, true) => mod_mul(m % k, i, k) == 0,
                (true, false) => {
                    if m.is_multiple_of(q) {
                        kq_divides_mdi()
                    } else {
                        let w = mod_pow(n, (q - v % q) % q, k);
                        let mut sum = mod_mul(m / q % k, d % k, k);
                        let mut wpow = 1u64;
                        for _ in 0..m % q {
                            sum = (sum + wpow) % k;
                            wpow = mod_mul(wpow, w, k);
                        }
                        mod_mul(i, sum, k) == 0
                    }
                }
                (false, true) => {
                    let lhs = mod_mul(mod_mul(m / q % k, d % k, k), i, k);
                    let factor =
                        mod_signed(m as i128 - (m / q) as i128 * d as i128, k);
                    (lhs + mod_mul(s, factor, k)).is_multiple_of(k)
                }
                (false, false) => {
                    if u % q != v % q {
                        kq_divides_mdi()
                    } else {
                        let lhs = mod_mul(m % k, i, k);
                        let factor =
                            mod_signed((m / q) as i128 * d as i128 - m as i128, k);
                        (lhs + mod_mul(s, factor, k)).is_multiple_of(k)
                    }
                }
            }
        }
        GroupSpec::Quaternion { n } => {
            let nn = 2 * n;
            match (x.j, a.j) {
                (0, 0) => mod_mul(m % nn, x.i, nn) == 0,
                (0, _) => m.is_multiple_of(2) || x.i == 0,
                (_, 0) => {
                    m.is_multiple_of(2)
                        && if m.is_multiple_of(4) {
                            mod_mul(m % nn, a.i, nn) == 0
                        } else {
                            (n + mod_mul(m % nn, a.i, nn)).is_multiple_of(nn)
                        }
                }
                (_, _) => {
                    let diff = mod_signed(x.i as i128 - a.i as i128, nn);
                    m.is_multiple_of(2)
                        && if m.is_multiple_of(4) {
                            mod_mul(m % nn, diff, nn) == 0
                        } else {
                            (n + mod_mul(m % nn, diff, nn)).is_multiple_of(nn)
                        }
                }
            }
        }
    }
}
