//! Subgroups generated by `m`-tuples of `U_n(F_q)`: isomorphism census and
//! universal word sets.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use super::table::{Fingerprint, FiniteGroup};
use super::unipotent_group;
use crate::field::Field;
use crate::{Error, Result};

/// Groups up to this order get an exhaustive isomorphism check on
/// fingerprint collisions.
const ISO_CHECK_LIMIT: usize = 64;

/// A word in free generators: `k > 0` is `x_k`, `k < 0` is `x_{|k|}^{-1}`.
pub type Word = Vec<i32>;

/// One isomorphism class met by the census.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusClass {
    pub fingerprint: Fingerprint,
    /// Number of generating tuples landing in this class.
    pub tuples: usize,
    /// First tuple (indices into the sorted `U_n(F_q)`) realizing the class.
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub n: usize,
    pub q: u32,
    pub generators: usize,
    pub tuples: usize,
    pub distinct_subgroups: usize,
    pub classes: Vec<CensusClass>,
    /// Largest nilpotency class and exponent met, for the `p`-group bounds.
    pub max_class: usize,
    pub max_exponent: usize,
}

fn tuple_count(order: usize, m: usize, cap: u128) -> Result<usize> {
    let total = (order as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
    if total > cap {
        return Err(Error::cap("generator tuples", total, cap));
    }
    Ok(total as usize)
}

fn tuple_at(mut idx: usize, order: usize, m: usize) -> Vec<usize> {
    let mut t = vec![0; m];
    for slot in t.iter_mut().rev() {
        *slot = idx % order;
        idx /= order;
    }
    t
}

/// Enumerates every `m`-tuple of `U_n(F_q)`, collects the generated subgroups
/// and sorts them into isomorphism classes (fingerprint first, exhaustive
/// isomorphism search on collisions for orders up to 64).
pub fn subgroup_census(field: &Field, n: usize, m: usize, cap: u128) -> Result<Census> {
    let u = unipotent_group(field, n, cap)?;
    let g = u.cayley_table()?;
    let total = tuple_count(g.order(), m, cap)?;
    let mut subgroups: BTreeMap<Vec<usize>, (usize, Vec<usize>)> = BTreeMap::new();
    for idx in 0..total {
        let t = tuple_at(idx, g.order(), m);
        let h = g.generated(&t);
        subgroups.entry(h).or_insert((0, t)).0 += 1;
    }
    let mut classes: Vec<(CensusClass, FiniteGroup)> = Vec::new();
    let (mut max_class, mut max_exponent) = (0, 1);
    for (h, (count, witness)) in &subgroups {
        let sub = g.restrict(h)?;
        let fp = sub.fingerprint();
        max_class = max_class.max(fp.class.unwrap_or(usize::MAX));
        max_exponent = max_exponent.max(fp.exponent);
        let existing = classes
            .iter_mut()
            .find(|(c, rep)| c.fingerprint == fp && (fp.order > ISO_CHECK_LIMIT || rep.is_isomorphic(&sub)));
        match existing {
            Some((c, _)) => c.tuples += count,
            None => classes.push((CensusClass { fingerprint: fp, tuples: *count, witness: witness.clone() }, sub)),
        }
    }
    let mut classes: Vec<CensusClass> = classes.into_iter().map(|(c, _)| c).collect();
    classes.sort_by(|a, b| a.fingerprint.cmp(&b.fingerprint));
    Ok(Census {
        n,
        q: field.order(),
        generators: m,
        tuples: total,
        distinct_subgroups: subgroups.len(),
        classes,
        max_class,
        max_exponent,
    })
}

/// A finite set of words that, evaluated on any `m`-tuple of `U_n(F_q)`,
/// yields exactly the subgroup the tuple generates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordSet {
    pub n: usize,
    pub q: u32,
    pub generators: usize,
    pub words: Vec<Word>,
    /// Number of tuples the equality was checked on.
    pub verified_tuples: usize,
}

pub fn evaluate_word(g: &FiniteGroup, word: &[i32], tuple: &[usize]) -> usize {
    word.iter().fold(g.identity(), |acc, &l| {
        let x = tuple[l.unsigned_abs() as usize - 1];
        g.mul(acc, if l > 0 { x } else { g.inv(x) })
    })
}

/// Breadth-first search over positive words, run on all tuples at once. In a
/// finite group the monoid generated by a tuple is already the subgroup, so
/// inverse letters are never needed. A word is kept when it reaches a new
/// element for at least one tuple; only kept words are extended. Every element
/// at Cayley-digraph distance `d` for a tuple is first reached by a kept word
/// of length `d`, so the search is complete.
pub fn word_set_discover(field: &Field, n: usize, m: usize, cap: u128) -> Result<WordSet> {
    let u = unipotent_group(field, n, cap)?;
    let g = u.cayley_table()?;
    let total = tuple_count(g.order(), m, cap)?;
    let tuples: Vec<Vec<usize>> = (0..total).map(|i| tuple_at(i, g.order(), m)).collect();
    let mut reached: Vec<Vec<bool>> = vec![vec![false; g.order()]; total];
    for r in reached.iter_mut() {
        r[g.identity()] = true;
    }
    let letters: Vec<i32> = (1..=m as i32).collect();
    let mut words: Vec<Word> = vec![Vec::new()];
    let mut frontier: Vec<(Word, Vec<usize>)> = vec![(Vec::new(), vec![g.identity(); total])];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (w, vals) in &frontier {
            for &l in &letters {
                let mut useful = false;
                let new_vals: Vec<usize> = vals
                    .iter()
                    .zip(&tuples)
                    .enumerate()
                    .map(|(t, (&v, tup))| {
                        let x = tup[l.unsigned_abs() as usize - 1];
                        let y = g.mul(v, x);
                        if !reached[t][y] {
                            reached[t][y] = true;
                            useful = true;
                        }
                        y
                    })
                    .collect();
                if useful {
                    let mut w2 = w.clone();
                    w2.push(l);
                    words.push(w2.clone());
                    next.push((w2, new_vals));
                }
            }
        }
        frontier = next;
    }
    // Exhaustive verification of the equality for every tuple.
    for t in &tuples {
        let from_words: BTreeSet<usize> = words.iter().map(|w| evaluate_word(&g, w, t)).collect();
        let generated: BTreeSet<usize> = g.generated(t).into_iter().collect();
        if from_words != generated {
            return Err(Error::Internal("word set misses part of a generated subgroup".into()));
        }
    }
    Ok(WordSet { n, q: field.order(), generators: m, words, verified_tuples: total })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matgroup::DEFAULT_GROUP_CAP;

    #[test]
    fn census_single_generator() {
        let f2 = Field::prime(2).unwrap();
        let c = subgroup_census(&f2, 2, 1, DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(c.classes.len(), 2);
        assert_eq!(c.classes.iter().map(|k| k.fingerprint.order).collect::<Vec<_>>(), vec![1, 2]);
        let f3 = Field::prime(3).unwrap();
        let c = subgroup_census(&f3, 2, 1, DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(c.classes.iter().map(|k| k.fingerprint.order).collect::<Vec<_>>(), vec![1, 3]);
    }

    #[test]
    fn word_sets_single_generator() {
        let f2 = Field::prime(2).unwrap();
        let w = word_set_discover(&f2, 2, 1, DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(w.words, vec![vec![], vec![1]]);
        let f3 = Field::prime(3).unwrap();
        let w = word_set_discover(&f3, 2, 1, DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(w.words, vec![vec![], vec![1], vec![1, 1]]);
    }

    #[test]
    fn census_cap() {
        let f2 = Field::prime(2).unwrap();
        assert!(matches!(subgroup_census(&f2, 3, 2, 10), Err(Error::CapExceeded { .. })));
    }
}
