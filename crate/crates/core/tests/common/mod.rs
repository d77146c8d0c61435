//! Test-side reference arithmetic on packed integers. Shares nothing with the
//! library beyond conversion of its vector types.
//!
//! A mixed vector packs binary coordinate `j` at bit `j` and quaternary
//! coordinate `k` at bits `alpha + 2k .. alpha + 2k + 2`. A Gray image packs
//! bit `i` of the image at bit `i`.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use z2z4::{BinaryVector, MixedVector, Z2Z4Code};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Shape {
    pub alpha: usize,
    pub beta: usize,
}

impl Shape {
    pub fn of(c: &Z2Z4Code) -> Shape {
        Shape { alpha: c.alpha(), beta: c.beta() }
    }

    pub fn bits(self) -> usize {
        self.alpha + 2 * self.beta
    }

    fn bmask(self) -> u64 {
        (1 << self.alpha) - 1
    }

    fn q(self, u: u64, k: usize) -> u64 {
        u >> (self.alpha + 2 * k) & 3
    }

    pub fn add(self, u: u64, v: u64) -> u64 {
        let mut r = (u ^ v) & self.bmask();
        for k in 0..self.beta {
            r |= ((self.q(u, k) + self.q(v, k)) & 3) << (self.alpha + 2 * k);
        }
        r
    }

    pub fn neg(self, u: u64) -> u64 {
        let mut r = u & self.bmask();
        for k in 0..self.beta {
            r |= ((4 - self.q(u, k)) & 3) << (self.alpha + 2 * k);
        }
        r
    }

    pub fn ip(self, u: u64, v: u64) -> u64 {
        let mut t = 2 * (u & v & self.bmask()).count_ones() as u64;
        for k in 0..self.beta {
            t += self.q(u, k) * self.q(v, k);
        }
        t & 3
    }

    /// `2 u * v`: zero binary part, `2 u_k v_k` in each quaternary slot.
    pub fn star2(self, u: u64, v: u64) -> u64 {
        let mut r = 0;
        for k in 0..self.beta {
            r |= ((2 * self.q(u, k) * self.q(v, k)) & 3) << (self.alpha + 2 * k);
        }
        r
    }

    /// 0 -> 00, 1 -> 01, 2 -> 11, 3 -> 10, first image bit at the lower position.
    pub fn gray(self, u: u64) -> u64 {
        let mut r = u & self.bmask();
        for k in 0..self.beta {
            let pair = [0b00, 0b10, 0b11, 0b01][self.q(u, k) as usize];
            r |= pair << (self.alpha + 2 * k);
        }
        r
    }

    pub fn pack(self, v: &MixedVector) -> u64 {
        assert_eq!(v.shape(), (self.alpha, self.beta));
        let mut r = 0;
        for (j, &b) in v.binary().iter().enumerate() {
            r |= (b as u64) << j;
        }
        for (k, q) in v.quaternary().iter().enumerate() {
            r |= (q.value() as u64) << (self.alpha + 2 * k);
        }
        r
    }

    pub fn parse(self, s: &str) -> u64 {
        self.pack(&s.parse().unwrap())
    }

    /// Subgroup generated by `rows`, by closure.
    pub fn span(self, rows: &[u64]) -> BTreeSet<u64> {
        let mut set: HashSet<u64> = HashSet::from([0]);
        let mut frontier = vec![0];
        while let Some(x) = frontier.pop() {
            for &g in rows {
                let y = self.add(x, g);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        set.into_iter().collect()
    }

    pub fn span_of_code(self, c: &Z2Z4Code) -> BTreeSet<u64> {
        let rows: Vec<u64> = c.generators().iter().map(|g| self.pack(g)).collect();
        self.span(&rows)
    }

    /// Every ambient vector orthogonal to every row.
    pub fn dual(self, rows: &[u64]) -> BTreeSet<u64> {
        (0..1u64 << self.bits()).filter(|&v| rows.iter().all(|&g| self.ip(g, v) == 0)).collect()
    }

    /// `(gamma, delta, kappa)` read off the subgroup sizes.
    pub fn code_type(self, set: &BTreeSet<u64>) -> (usize, usize, usize) {
        let log = |n: usize| n.trailing_zeros() as usize;
        let order2: Vec<u64> = set.iter().copied().filter(|&x| self.add(x, x) == 0).collect();
        let projected: HashSet<u64> = order2.iter().map(|&x| x & self.bmask()).collect();
        let delta = log(set.len()) - log(order2.len());
        (log(order2.len()) - delta, delta, log(projected.len()))
    }

    /// A generating subset of a subgroup.
    pub fn generators(self, set: &BTreeSet<u64>) -> Vec<u64> {
        let mut gens = Vec::new();
        let mut span = self.span(&gens);
        for &x in set {
            if !span.contains(&x) {
                gens.push(x);
                span = self.span(&gens);
            }
        }
        gens
    }

    pub fn image(self, set: &BTreeSet<u64>) -> BTreeSet<u64> {
        set.iter().map(|&x| self.gray(x)).collect()
    }
}

pub fn bits_of(v: &BinaryVector) -> u64 {
    v.bits().iter().enumerate().fold(0, |acc, (i, &b)| acc | (b as u64) << i)
}

pub fn parse_bits(s: &str) -> u64 {
    bits_of(&s.parse().unwrap())
}

pub fn binary_span(rows: &[u64]) -> BTreeSet<u64> {
    let mut set = BTreeSet::from([0]);
    for &r in rows {
        let shifted: Vec<u64> = set.iter().map(|&x| x ^ r).collect();
        set.extend(shifted);
    }
    set
}

pub fn is_binary_linear(set: &BTreeSet<u64>) -> bool {
    set.contains(&0) && set.iter().all(|&a| set.iter().all(|&b| set.contains(&(a ^ b))))
}

pub fn binary_dual(set: &BTreeSet<u64>, n: usize) -> BTreeSet<u64> {
    (0..1u64 << n).filter(|&v| set.iter().all(|&w| (v & w).count_ones() % 2 == 0)).collect()
}

/// `S ∩ S^perp` for a binary set.
pub fn binary_hull(set: &BTreeSet<u64>, n: usize) -> BTreeSet<u64> {
    binary_dual(set, n).intersection(set).copied().collect()
}

pub fn is_binary_lcd(set: &BTreeSet<u64>, n: usize) -> bool {
    is_binary_linear(set) && binary_hull(set, n).len() == 1
}

/// Leibniz expansion modulo 4.
pub fn det_mod4(m: &[Vec<u64>]) -> u64 {
    fn perms(n: usize) -> Vec<(Vec<usize>, bool)> {
        if n == 0 {
            return vec![(vec![], true)];
        }
        let mut out = Vec::new();
        for (p, even) in perms(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push((q, even == ((n - 1 - pos).is_multiple_of(2))));
            }
        }
        out
    }
    let n = m.len();
    let mut total = 0u64;
    for (p, even) in perms(n) {
        let prod = (0..n).fold(1u64, |acc, i| acc * m[i][p[i]] % 4);
        total = (total + if even { prod } else { (4 - prod) % 4 }) % 4;
    }
    total
}
