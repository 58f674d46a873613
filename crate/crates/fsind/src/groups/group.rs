//! Table-backed group arithmetic. Conjugacy data is computed by brute force
//! and then cross-checked against the closed-form class descriptions, so a
//! successfully constructed `Group` has verified structure.

use super::element::GroupElement;
use super::spec::GroupSpec;
use super::{GroupError, MAX_TABLE_ORDER};
use crate::exact_arith::{lcm, GroupConstants};

/// A conjugacy class listed by element index, together with a transversal:
/// `transversal[t]^-1 * rep * transversal[t] = elements[t]`.
#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    pub rep: u32,
    pub elements: Vec<u32>,
    pub transversal: Vec<u32>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.elements.len()
    }
}

/// A fully materialized group with multiplication and inverse tables,
/// element orders, conjugacy classes, and center.
pub struct Group {
    spec: GroupSpec,
    constants: Option<GroupConstants>,
    order: usize,
    imod: u64,
    jmod: u64,
    elements: Vec<GroupElement>,
    mul: Vec<u32>,
    inv: Vec<u32>,
    orders: Vec<u64>,
    exponent: u64,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<u32>,
    center: Vec<u32>,
}

impl Group {
    pub fn new(spec: GroupSpec) -> Result<Group, GroupError> {
        spec.validate()?;
        let order64 = spec.order();
        if order64 > MAX_TABLE_ORDER {
            return Err(GroupError::TooLarge(order64));
        }
        let order = order64 as usize;
        let constants = match spec {
            GroupSpec::Metacyclic { k, q, n, l } => Some(GroupConstants::new(k, q, n, l)?),
            GroupSpec::Quaternion { .. } => None,
        };
        let (imod, jmod) = match spec {
            GroupSpec::Metacyclic { k, q, l, .. } => (k, q * l),
            GroupSpec::Quaternion { n } => (2 * n, 2),
        };

        let mut elements = Vec::with_capacity(order);
        for j in 0..jmod {
            for i in 0..imod {
                elements.push(GroupElement::new(i, j));
            }
        }

        let mut group = Group {
            spec,
            constants,
            order,
            imod,
            jmod,
            elements,
            mul: Vec::new(),
            inv: Vec::new(),
            orders: Vec::new(),
            exponent: 1,
            classes: Vec::new(),
            class_of: Vec::new(),
            center: Vec::new(),
        };
        group.build_tables()?;
        group.build_orders();
        group.build_classes();
        group.check_class_forms()?;
        group.check_centralizer_forms()?;
        Ok(group)
    }

    fn raw_mul(&self, x: GroupElement, y: GroupElement) -> GroupElement {
        match self.spec {
            GroupSpec::Metacyclic { k, q, n, l } => {
                let mut npow = 1u64;
                for _ in 0..x.j % q {
                    npow = npow * n % k;
                }
                GroupElement::new((x.i + y.i * npow) % k, (x.j + y.j) % (q * l))
            }
            GroupSpec::Quaternion { n } => {
                let m = 2 * n;
                if x.j == 0 {
                    GroupElement::new((x.i + y.i) % m, y.j)
                } else if y.j == 0 {
                    GroupElement::new((x.i + m - y.i) % m, 1)
                } else {
                    GroupElement::new((x.i + m - y.i + n) % m, 0)
                }
            }
        }
    }

    fn raw_inv(&self, x: GroupElement) -> GroupElement {
        match self.spec {
            GroupSpec::Metacyclic { k, q, n, l } => {
                let ql = q * l;
                let mut npow = 1u64;
                for _ in 0..(ql - x.j) % q {
                    npow = npow * n % k;
                }
                GroupElement::new((k - x.i * npow % k) % k, (ql - x.j) % ql)
            }
            GroupSpec::Quaternion { n } => {
                let m = 2 * n;
                if x.j == 0 {
                    GroupElement::new((m - x.i) % m, 0)
                } else {
                    GroupElement::new((n + x.i) % m, 1)
                }
            }
        }
    }

    fn build_tables(&mut self) -> Result<(), GroupError> {
        let order = self.order;
        let mut mul = vec![0u32; order * order];
        for x in 0..order {
            for y in 0..order {
                let prod = self.raw_mul(self.elements[x], self.elements[y]);
                mul[x * order + y] = self.index_of(prod);
            }
        }
        self.mul = mul;
        let mut inv = vec![0u32; order];
        for (x, slot) in inv.iter_mut().enumerate() {
            *slot = self.index_of(self.raw_inv(self.elements[x]));
        }
        self.inv = inv;
        for x in 0..order as u32 {
            let xi = self.inv[x as usize];
            if self.mul_idx(x, xi) != 0 || self.mul_idx(xi, x) != 0 {
                return Err(GroupError::ClosedFormMismatch(format!(
                    "inverse table wrong at element {}",
                    self.elements[x as usize]
                )));
            }
        }
        Ok(())
    }

    fn build_orders(&mut self) {
        let order64 = self.order as u64;
        let divisors: Vec<u64> = (1..=order64).filter(|d| order64.is_multiple_of(*d)).collect();
        let mut orders = Vec::with_capacity(self.order);
        for x in 0..self.order as u32 {
            let ord = divisors
                .iter()
                .copied()
                .find(|&h| self.pow_idx(x, h) == 0)
                .expect("element order divides group order");
            orders.push(ord);
        }
        self.exponent = orders.iter().fold(1, |acc, &o| lcm(acc, o));
        self.orders = orders;
    }

    fn build_classes(&mut self) {
        let order = self.order;
        let mut class_of = vec![u32::MAX; order];
        let mut classes = Vec::new();
        let mut found_by: Vec<Option<u32>> = vec![None; order];
        for x in 0..order as u32 {
            if class_of[x as usize] != u32::MAX {
                continue;
            }
            let mut members = Vec::new();
            for g in 0..order as u32 {
                let y = self.conjugate(x, g);
                if found_by[y as usize].is_none() {
                    found_by[y as usize] = Some(g);
                    members.push(y);
                }
            }
            members.sort_unstable();
            let transversal = members
                .iter()
                .map(|&y| found_by[y as usize].expect("member recorded"))
                .collect();
            let class_index = classes.len() as u32;
            for &y in &members {
                class_of[y as usize] = class_index;
                found_by[y as usize] = None;
            }
            classes.push(ConjugacyClass { rep: x, elements: members, transversal });
        }
        self.classes = classes;
        self.class_of = class_of;
        self.center = (0..order as u32)
            .filter(|&x| self.classes[self.class_of[x as usize] as usize].size() == 1)
            .collect();
    }

    fn check_class_forms(&self) -> Result<(), GroupError> {
        let mismatch = |what: &str, el: GroupElement| {
            Err(GroupError::ClosedFormMismatch(format!(
                "{what} for class of {el} in {}",
                self.spec
            )))
        };
        match self.spec {
            GroupSpec::Metacyclic { k, q, n, l } => {
                let c = self.constants.as_ref().expect("metacyclic constants").c;
                let central =
                    |el: GroupElement| el.i.is_multiple_of(k / c) && el.j.is_multiple_of(q);
                let expected_center: Vec<u32> = (0..self.order as u32)
                    .filter(|&x| central(self.elements[x as usize]))
                    .collect();
                if self.center != expected_center {
                    return mismatch("center", GroupElement::IDENTITY);
                }
                for class in &self.classes {
                    let rep = self.elements[class.rep as usize];
                    let expected: Vec<u32> = if central(rep) {
                        vec![class.rep]
                    } else if rep.j.is_multiple_of(q) {
                        let mut npow = 1u64;
                        let mut v: Vec<u32> = (0..q)
                            .map(|_| {
                                let idx =
                                    self.index_of(GroupElement::new(rep.i * npow % k, rep.j));
                                npow = npow * n % k;
                                idx
                            })
                            .collect();
                        v.sort_unstable();
                        v
                    } else {
                        let mut v: Vec<u32> = (0..k / c)
                            .map(|t| {
                                self.index_of(GroupElement::new((rep.i + t * c) % k, rep.j))
                            })
                            .collect();
                        v.sort_unstable();
                        v
                    };
                    if class.elements != expected {
                        return mismatch("class members", rep);
                    }
                }
                let expected_count = c * l + l * (k - c) / q + c * l * (q - 1);
                if self.classes.len() as u64 != expected_count {
                    return mismatch("class count", GroupElement::IDENTITY);
                }
            }
            GroupSpec::Quaternion { n } => {
                let m = 2 * n;
                let expected_center =
                    vec![self.index_of(GroupElement::new(0, 0)), self.index_of(GroupElement::new(n, 0))];
                if self.center != expected_center {
                    return mismatch("center", GroupElement::IDENTITY);
                }
                for class in &self.classes {
                    let rep = self.elements[class.rep as usize];
                    let expected: Vec<u32> = if rep.j == 0 {
                        if rep.i == 0 || rep.i == n {
                            vec![class.rep]
                        } else {
                            let mut v = vec![
                                self.index_of(rep),
                                self.index_of(GroupElement::new(m - rep.i, 0)),
                            ];
                            v.sort_unstable();
                            v
                        }
                    } else {
                        let mut v: Vec<u32> = (0..n)
                            .map(|t| self.index_of(GroupElement::new((rep.i + 2 * t) % m, 1)))
                            .collect();
                        v.sort_unstable();
                        v
                    };
                    if class.elements != expected {
                        return mismatch("class members", rep);
                    }
                }
                if self.classes.len() as u64 != n + 3 {
                    return mismatch("class count", GroupElement::IDENTITY);
                }
            }
        }
        Ok(())
    }

    fn check_centralizer_forms(&self) -> Result<(), GroupError> {
        for class in &self.classes {
            let rep = self.elements[class.rep as usize];
            let cent = self.centralizer(class.rep);
            if cent.len() * class.size() != self.order {
                return Err(GroupError::ClosedFormMismatch(format!(
                    "orbit-stabilizer count fails for {rep} in {}",
                    self.spec
                )));
            }
            let expected: Vec<u32> = if class.size() == 1 {
                (0..self.order as u32).collect()
            } else {
                match self.spec {
                    GroupSpec::Metacyclic { k, q, .. } => {
                        let c = self.constants.as_ref().expect("metacyclic constants").c;
                        if rep.j.is_multiple_of(q) {
                            (0..self.order as u32)
                                .filter(|&x| self.elements[x as usize].j.is_multiple_of(q))
                                .collect()
                        } else {
                            self.subgroup_closure(&[
                                class.rep,
                                self.index_of(GroupElement::new(k / c, 0)),
                                self.index_of(GroupElement::new(0, q)),
                            ])
                        }
                    }
                    GroupSpec::Quaternion { .. } => {
                        if rep.j == 0 {
                            (0..self.imod as u32).collect()
                        } else {
                            self.subgroup_closure(&[class.rep])
                        }
                    }
                }
            };
            if cent != expected {
                return Err(GroupError::ClosedFormMismatch(format!(
                    "centralizer of {rep} in {}",
                    self.spec
                )));
            }
        }
        Ok(())
    }

    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn constants(&self) -> Option<&GroupConstants> {
        self.constants.as_ref()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn element_at(&self, idx: u32) -> GroupElement {
        self.elements[idx as usize]
    }

    pub fn index_of(&self, el: GroupElement) -> u32 {
        let i = el.i % self.imod;
        let j = el.j % self.jmod;
        (j * self.imod + i) as u32
    }

    pub fn mul_idx(&self, x: u32, y: u32) -> u32 {
        self.mul[x as usize * self.order + y as usize]
    }

    pub fn inv_idx(&self, x: u32) -> u32 {
        self.inv[x as usize]
    }

    /// `x^e` by binary powering over the multiplication table.
    pub fn pow_idx(&self, x: u32, e: u64) -> u32 {
        let mut base = x;
        let mut e = e;
        let mut acc = 0u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_idx(acc, base);
            }
            base = self.mul_idx(base, base);
            e >>= 1;
        }
        acc
    }

    /// `g^-1 x g`.
    pub fn conjugate(&self, x: u32, g: u32) -> u32 {
        self.mul_idx(self.mul_idx(self.inv_idx(g), x), g)
    }

    pub fn element_order(&self, x: u32) -> u64 {
        self.orders[x as usize]
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_index_of(&self, x: u32) -> u32 {
        self.class_of[x as usize]
    }

    pub fn center(&self) -> &[u32] {
        &self.center
    }

    pub fn is_central(&self, x: u32) -> bool {
        self.classes[self.class_of[x as usize] as usize].size() == 1
    }

    /// All elements commuting with `x`, ascending.
    pub fn centralizer(&self, x: u32) -> Vec<u32> {
        (0..self.order as u32)
            .filter(|&g| self.mul_idx(g, x) == self.mul_idx(x, g))
            .collect()
    }

    /// The subgroup generated by `gens`, as a sorted index list.
    pub fn subgroup_closure(&self, gens: &[u32]) -> Vec<u32> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut frontier = vec![0u32];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                for y in [self.mul_idx(x, g), self.mul_idx(x, self.inv_idx(g))] {
                    if !seen[y as usize] {
                        seen[y as usize] = true;
                        frontier.push(y);
                    }
                }
            }
        }
        (0..self.order as u32).filter(|&x| seen[x as usize]).collect()
    }
}
