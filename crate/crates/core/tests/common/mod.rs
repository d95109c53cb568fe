//! Brute-force oracles on raw bitmasks. They read a space only through
//! its open list and operation table and recompute everything pointwise.

#![allow(dead_code)]

use std::collections::BTreeMap;

use gammatop::{ClosedMode, Space, SubSet};

pub struct Raw {
    pub n: usize,
    pub full: u32,
    pub opens: Vec<u32>,
    pub gamma: BTreeMap<u32, u32>,
}

impl Raw {
    pub fn of(s: &Space) -> Raw {
        let n = s.carrier();
        let opens: Vec<u32> = s.topology().opens().iter().map(|u| u.bits()).collect();
        let gamma = opens
            .iter()
            .map(|&u| (u, s.gamma(SubSet::from_bits(n, u).unwrap()).bits()))
            .collect();
        Raw {
            n,
            full: if n == 0 { 0 } else { (1u32 << n) - 1 },
            opens,
            gamma,
        }
    }

    pub fn g(&self, u: u32) -> u32 {
        self.gamma[&u]
    }

    pub fn subsets(&self) -> impl Iterator<Item = u32> {
        0..=self.full
    }

    pub fn nbhds(&self, x: usize) -> impl Iterator<Item = u32> + '_ {
        self.opens.iter().copied().filter(move |u| u >> x & 1 == 1)
    }

    pub fn closure(&self, a: u32) -> u32 {
        (0..self.n)
            .filter(|&x| self.nbhds(x).all(|u| u & a != 0))
            .fold(0, |acc, x| acc | 1 << x)
    }

    pub fn int_g(&self, a: u32) -> u32 {
        (0..self.n)
            .filter(|&x| a >> x & 1 == 1 && self.nbhds(x).any(|u| self.g(u) & !a == 0))
            .fold(0, |acc, x| acc | 1 << x)
    }

    pub fn cl_g(&self, a: u32) -> u32 {
        (0..self.n)
            .filter(|&x| self.nbhds(x).all(|u| self.g(u) & a != 0))
            .fold(0, |acc, x| acc | 1 << x)
    }

    pub fn tau_g(&self) -> Vec<u32> {
        self.subsets().filter(|&a| self.int_g(a) == a).collect()
    }

    pub fn closed(&self, mode: ClosedMode) -> Vec<u32> {
        match mode {
            ClosedMode::Tau => self.subsets().filter(|&a| self.opens.contains(&(self.full & !a))).collect(),
            ClosedMode::Gamma => self.subsets().filter(|&a| self.cl_g(a) & !a == 0).collect(),
        }
    }

    fn regular_with(&self, exact: bool) -> bool {
        (0..self.n).all(|x| {
            self.nbhds(x).all(|u| {
                self.nbhds(x).all(|v| {
                    let m = self.g(u) & self.g(v);
                    self.nbhds(x)
                        .any(|w| if exact { self.g(w) == m } else { self.g(w) & !m == 0 })
                })
            })
        })
    }

    pub fn regular(&self) -> bool {
        self.regular_with(false)
    }

    pub fn strictly_regular(&self) -> bool {
        self.regular_with(true)
    }

    pub fn open_op(&self) -> bool {
        self.opens.iter().all(|&v| self.int_g(self.g(v)) == self.g(v))
    }

    pub fn t1(&self) -> bool {
        (0..self.n).all(|x| {
            (0..self.n)
                .filter(|&y| y != x)
                .all(|y| self.nbhds(x).any(|u| self.g(u) >> y & 1 == 0))
        })
    }

    pub fn t2(&self) -> bool {
        (0..self.n).all(|x| {
            (0..self.n)
                .filter(|&y| y != x)
                .all(|y| self.nbhds(x).any(|u| self.nbhds(y).any(|v| self.g(u) & self.g(v) == 0)))
        })
    }

    /// Some pair of opens covering `a` and `b` has disjoint values.
    pub fn separable(&self, a: u32, b: u32) -> bool {
        self.opens.iter().any(|&u| {
            u & a == a && self.opens.iter().any(|&v| v & b == b && self.g(u) & self.g(v) == 0)
        })
    }

    pub fn gs_regular(&self, mode: ClosedMode) -> bool {
        self.closed(mode).into_iter().all(|a| {
            (0..self.n)
                .filter(|&x| a >> x & 1 == 0)
                .all(|x| self.separable(1 << x, a))
        })
    }

    /// Every disjoint closed pair `(A, B)` with no separating opens.
    pub fn normal_failures(&self, mode: ClosedMode) -> Vec<(u32, u32)> {
        let closed = self.closed(mode);
        let mut out = Vec::new();
        for &a in &closed {
            for &b in &closed {
                if a & b == 0 && !self.separable(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

/// Every family of subsets of an `n`-point set that is a topology.
pub fn brute_force_topology_count(n: usize) -> usize {
    let sets = 1usize << n;
    let full = (sets - 1) as u32;
    let mut count = 0;
    for fam in 0u64..(1u64 << sets) {
        if fam & 1 == 0 || fam >> full & 1 == 0 {
            continue;
        }
        let members: Vec<u32> = (0..sets as u32).filter(|&a| fam >> a & 1 == 1).collect();
        let ok = members.iter().all(|&a| {
            members
                .iter()
                .all(|&b| fam >> (a | b) & 1 == 1 && fam >> (a & b) & 1 == 1)
        });
        if ok {
            count += 1;
        }
    }
    count
}

pub fn set(n: usize, pts: &[usize]) -> SubSet {
    SubSet::from_points(n, pts.iter().copied())
}
