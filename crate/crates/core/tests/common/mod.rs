//! From-definition recomputation over raw bit patterns, sharing nothing with
//! the engine beyond reading the open sets and primal members of a space.

#![allow(dead_code)]

use primaltop::PrimalSpace;

pub struct Naive {
    pub n: usize,
    pub full: u16,
    pub opens: Vec<u16>,
    in_primal: Vec<bool>,
}

impl Naive {
    pub fn of(space: &PrimalSpace) -> Self {
        let n = space.universe().size();
        let full = ((1u32 << n) - 1) as u16;
        let opens = space.topology().opens().iter().map(|s| s.bits()).collect();
        let mut in_primal = vec![false; 1 << n];
        for m in space.primal().members().iter() {
            in_primal[m.bits() as usize] = true;
        }
        Naive {
            n,
            full,
            opens,
            in_primal,
        }
    }

    pub fn all(&self) -> impl Iterator<Item = u16> {
        0..=self.full
    }

    pub fn primal(&self, a: u16) -> bool {
        self.in_primal[a as usize]
    }

    /// Union of the open sets inside `a`.
    pub fn interior(&self, a: u16) -> u16 {
        self.opens
            .iter()
            .filter(|&&u| u & !a == 0)
            .fold(0, |acc, &u| acc | u)
    }

    /// Intersection of the closed sets containing `a`.
    pub fn closure(&self, a: u16) -> u16 {
        self.opens
            .iter()
            .map(|&u| !u & self.full)
            .filter(|&c| a & !c == 0)
            .fold(self.full, |acc, c| acc & c)
    }

    pub fn regular_open(&self) -> Vec<u16> {
        self.all()
            .filter(|&a| self.interior(self.closure(a)) == a)
            .collect()
    }

    pub fn delta_interior(&self, a: u16) -> u16 {
        self.regular_open()
            .into_iter()
            .filter(|&r| r & !a == 0)
            .fold(0, |acc, r| acc | r)
    }

    pub fn tau_delta(&self) -> Vec<u16> {
        self.all()
            .filter(|&a| self.delta_interior(a) == a)
            .collect()
    }

    /// `{x : ∀U ∈ nbhds with x ∈ U, A^c ∪ U^c ∈ 𝒫}`.
    pub fn diamond_over(&self, a: u16, nbhds: &[u16]) -> u16 {
        (0..self.n)
            .filter(|&x| {
                nbhds
                    .iter()
                    .filter(|&&u| u >> x & 1 == 1)
                    .all(|&u| self.primal((!a | !u) & self.full))
            })
            .fold(0, |acc, x| acc | 1 << x)
    }

    pub fn diamond(&self, a: u16) -> u16 {
        self.diamond_over(a, &self.opens)
    }

    pub fn diamond_r(&self, a: u16) -> u16 {
        self.diamond_over(a, &self.regular_open())
    }

    pub fn tau_from(&self, op: impl Fn(u16) -> u16) -> Vec<u16> {
        self.all()
            .filter(|&a| {
                let ac = !a & self.full;
                (ac | op(ac)) == ac
            })
            .collect()
    }

    pub fn tau_diamond(&self) -> Vec<u16> {
        self.tau_from(|a| self.diamond(a))
    }

    pub fn tau_diamond_r(&self) -> Vec<u16> {
        self.tau_from(|a| self.diamond_r(a))
    }
}

/// Number of families over `n` points that satisfy the topology axioms,
/// by checking every family of subsets.
pub fn count_topologies(n: usize) -> usize {
    let subsets = 1usize << n;
    let full = subsets - 1;
    (0u64..1 << subsets)
        .filter(|&fam| {
            let has = |s: usize| fam >> s & 1 == 1;
            has(0)
                && has(full)
                && (0..subsets)
                    .all(|a| !has(a) || (0..subsets).all(|b| !has(b) || (has(a | b) && has(a & b))))
        })
        .count()
}

/// Number of families over `n` points that satisfy the primal axioms.
pub fn count_primals(n: usize) -> usize {
    let subsets = 1usize << n;
    let full = subsets - 1;
    (0u64..1 << subsets)
        .filter(|&fam| {
            let has = |s: usize| fam >> s & 1 == 1;
            !has(full)
                && (0..subsets).all(|a| !has(a) || (0..subsets).all(|b| b & !a != 0 || has(b)))
                && (0..subsets).all(|a| (0..subsets).all(|b| !has(a & b) || has(a) || has(b)))
        })
        .count()
}
