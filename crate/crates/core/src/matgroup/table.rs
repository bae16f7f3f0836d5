//! Finite groups given by a Cayley table.
//!
//! Subgroups are sorted index lists into the ambient table.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    inv: Vec<u32>,
    identity: usize,
}

/// Isomorphism invariants used to bucket groups before exhaustive
/// isomorphism testing.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fingerprint {
    pub order: usize,
    /// `None` when the group is not nilpotent.
    pub class: Option<usize>,
    pub exponent: usize,
    /// Elementary divisors of the abelianization, ascending.
    pub abelian_invariants: Vec<usize>,
    /// `(element order, count)`, ascending by order.
    pub order_counts: Vec<(usize, usize)>,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl FiniteGroup {
    /// Validates a Cayley table (row `a`, column `b` holds `a * b`).
    pub fn from_table(order: usize, table: Vec<u32>) -> Result<FiniteGroup> {
        if order == 0 || table.len() != order * order {
            return Err(Error::invalid("Cayley table has the wrong size"));
        }
        if table.iter().any(|&x| x as usize >= order) {
            return Err(Error::invalid("Cayley table entry out of range"));
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|a| table[e * order + a] as usize == a && table[a * order + e] as usize == a))
            .ok_or_else(|| Error::invalid("no identity element"))?;
        let mut inv = vec![0u32; order];
        for a in 0..order {
            inv[a] = (0..order)
                .find(|&b| table[a * order + b] as usize == identity)
                .ok_or_else(|| Error::invalid("element without inverse"))? as u32;
        }
        Ok(FiniteGroup { order, table, inv, identity })
    }

    pub fn cyclic(n: usize) -> FiniteGroup {
        let table = (0..n * n).map(|k| ((k / n + k % n) % n) as u32).collect();
        FiniteGroup::from_table(n, table).expect("cyclic table is valid")
    }

    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
        let n = a.order * b.order;
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let (xa, xb) = (x / b.order, x % b.order);
                let (ya, yb) = (y / b.order, y % b.order);
                table.push((a.mul(xa, ya) * b.order + b.mul(xb, yb)) as u32);
            }
        }
        FiniteGroup::from_table(n, table).expect("product table is valid")
    }

    /// `(C_p)^k`; element `i` has base-`p` digits as coordinates.
    pub fn elementary_abelian(p: usize, k: usize) -> FiniteGroup {
        (0..k).fold(FiniteGroup::cyclic(1), |acc, _| FiniteGroup::direct_product(&acc, &FiniteGroup::cyclic(p)))
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn elements(&self) -> core::ops::Range<usize> {
        0..self.order
    }

    pub fn all(&self) -> Vec<usize> {
        (0..self.order).collect()
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, a))
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Subgroup generated by `gens`, as a sorted index list.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[self.identity] = true;
        let mut queue = vec![self.identity];
        while let Some(x) = queue.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push(y);
                }
            }
        }
        (0..self.order).filter(|&i| seen[i]).collect()
    }

    pub fn is_subgroup(&self, set: &[usize]) -> bool {
        let mut member = vec![false; self.order];
        for &x in set {
            member[x] = true;
        }
        member[self.identity] && set.iter().all(|&a| set.iter().all(|&b| member[self.mul(a, b)]))
    }

    pub fn exponent(&self, set: &[usize]) -> usize {
        set.iter().map(|&a| self.element_order(a)).fold(1, |l, o| l / gcd(l, o) * o)
    }

    pub fn center(&self, set: &[usize]) -> Vec<usize> {
        set.iter().copied().filter(|&z| set.iter().all(|&g| self.mul(z, g) == self.mul(g, z))).collect()
    }

    /// `[A, B]` for subgroups `A`, `B`.
    pub fn commutator_subgroup(&self, a: &[usize], b: &[usize]) -> Vec<usize> {
        let mut gens: Vec<usize> = Vec::new();
        let mut seen = vec![false; self.order];
        for &x in a {
            for &y in b {
                let c = self.commutator(x, y);
                if !seen[c] {
                    seen[c] = true;
                    gens.push(c);
                }
            }
        }
        self.generated(&gens)
    }

    /// `H = g_1 > g_2 = [g_1, H] > ...`, stopping at the trivial group or
    /// when the series stabilizes.
    pub fn lower_central_series(&self, set: &[usize]) -> Vec<Vec<usize>> {
        let mut series = vec![set.to_vec()];
        loop {
            let last = series.last().unwrap();
            if last.len() == 1 {
                break;
            }
            let next = self.commutator_subgroup(last, set);
            if next.len() == last.len() {
                break;
            }
            series.push(next);
        }
        series
    }

    /// Nilpotency class (`0` for the trivial group), or `None`.
    pub fn nilpotency_class(&self, set: &[usize]) -> Option<usize> {
        let series = self.lower_central_series(set);
        (series.last().unwrap().len() == 1).then(|| series.len() - 1)
    }

    /// The subgroup `set` as a group of its own, reindexed in `set` order.
    pub fn restrict(&self, set: &[usize]) -> Result<FiniteGroup> {
        let mut pos = vec![u32::MAX; self.order];
        for (i, &x) in set.iter().enumerate() {
            pos[x] = i as u32;
        }
        let mut table = Vec::with_capacity(set.len() * set.len());
        for &a in set {
            for &b in set {
                let p = pos[self.mul(a, b)];
                if p == u32::MAX {
                    return Err(Error::invalid("set is not closed under multiplication"));
                }
                table.push(p);
            }
        }
        FiniteGroup::from_table(set.len(), table)
    }

    /// Elementary divisors of `G / [G, G]`, ascending.
    pub fn abelian_invariants(&self) -> Vec<usize> {
        let all = self.all();
        let derived = self.commutator_subgroup(&all, &all);
        let mut in_derived = vec![false; self.order];
        for &d in &derived {
            in_derived[d] = true;
        }
        let quotient_order = self.order / derived.len();
        let coset_order = |g: usize| {
            let mut x = g;
            let mut k = 1;
            while !in_derived[x] {
                x = self.mul(x, g);
                k += 1;
            }
            k
        };
        let orders: Vec<usize> = (0..self.order).map(coset_order).collect();
        let mut out = Vec::new();
        for r in prime_factors(quotient_order) {
            // s[j] = log_r |Q[r^j]|
            let mut s = vec![0usize];
            let mut rj = 1usize;
            loop {
                rj *= r;
                let count = orders.iter().filter(|&&o| rj.is_multiple_of(o)).count() / derived.len();
                let mut lg = 0;
                let mut c = count;
                while c > 1 {
                    c /= r;
                    lg += 1;
                }
                s.push(lg);
                if s[s.len() - 1] == s[s.len() - 2] {
                    break;
                }
            }
            let at_least: Vec<usize> = (1..s.len()).map(|j| s[j] - s[j - 1]).collect();
            for j in 1..=at_least.len() {
                let exactly = at_least[j - 1] - at_least.get(j).copied().unwrap_or(0);
                for _ in 0..exactly {
                    out.push(r.pow(j as u32));
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn order_counts(&self) -> Vec<(usize, usize)> {
        let mut m: BTreeMap<usize, usize> = BTreeMap::new();
        for a in self.elements() {
            *m.entry(self.element_order(a)).or_default() += 1;
        }
        m.into_iter().collect()
    }

    pub fn fingerprint(&self) -> Fingerprint {
        let all = self.all();
        Fingerprint {
            order: self.order,
            class: self.nilpotency_class(&all),
            exponent: self.exponent(&all),
            abelian_invariants: self.abelian_invariants(),
            order_counts: self.order_counts(),
        }
    }

    /// Greedy generating set: scan elements by decreasing order and keep
    /// those outside the span so far.
    pub fn small_generating_set(&self) -> Vec<usize> {
        let mut cand: Vec<usize> = self.all();
        cand.sort_by_key(|&a| (core::cmp::Reverse(self.element_order(a)), a));
        let mut gens = Vec::new();
        let mut span = vec![self.identity];
        for a in cand {
            if span.len() == self.order {
                break;
            }
            if span.binary_search(&a).is_err() {
                gens.push(a);
                span = self.generated(&gens);
            }
        }
        gens
    }

    /// Exhaustive isomorphism test: maps a generating set of `self` into
    /// `other` in every order-compatible way and checks the induced map on
    /// the Cayley graph.
    pub fn is_isomorphic(&self, other: &FiniteGroup) -> bool {
        if self.order != other.order || self.order_counts() != other.order_counts() {
            return false;
        }
        let gens = self.small_generating_set();
        let orders_other: Vec<usize> = other.elements().map(|a| other.element_order(a)).collect();
        let candidates: Vec<Vec<usize>> = gens
            .iter()
            .map(|&g| {
                let o = self.element_order(g);
                other.elements().filter(|&b| orders_other[b] == o).collect()
            })
            .collect();
        let mut images = vec![0usize; gens.len()];
        self.search_iso(other, &gens, &candidates, 0, &mut images)
    }

    fn search_iso(
        &self,
        other: &FiniteGroup,
        gens: &[usize],
        candidates: &[Vec<usize>],
        k: usize,
        images: &mut Vec<usize>,
    ) -> bool {
        if k == gens.len() {
            return self.extends_to_isomorphism(other, gens, images);
        }
        for &c in &candidates[k] {
            images[k] = c;
            if self.search_iso(other, gens, candidates, k + 1, images) {
                return true;
            }
        }
        false
    }

    fn extends_to_isomorphism(&self, other: &FiniteGroup, gens: &[usize], images: &[usize]) -> bool {
        let mut phi = vec![usize::MAX; self.order];
        phi[self.identity] = other.identity;
        let mut queue = vec![self.identity];
        while let Some(x) = queue.pop() {
            for (&g, &img) in gens.iter().zip(images) {
                let y = self.mul(x, g);
                let want = other.mul(phi[x], img);
                if phi[y] == usize::MAX {
                    phi[y] = want;
                    queue.push(y);
                } else if phi[y] != want {
                    return false;
                }
            }
        }
        let mut hit = vec![false; other.order];
        for &v in &phi {
            if v == usize::MAX || hit[v] {
                return false;
            }
            hit[v] = true;
        }
        true
    }
}
