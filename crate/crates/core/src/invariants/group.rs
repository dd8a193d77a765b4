//! Finitely generated abelian groups and group presentations.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::snf::{smith_normal_form_cancellable, IntMatrix};
use crate::cancel::CancelToken;
use crate::error::Result;

/// Z^rank ⊕ Z/d1 ⊕ ... with d1 | d2 | ... and every d > 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup { rank: 0, torsion: Vec::new() }
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup { rank, torsion: Vec::new() }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Z^n modulo the span of the given vectors (each of length n).
    pub fn cokernel(n: usize, relations: &[Vec<i64>]) -> Self {
        Self::cokernel_cancellable(n, relations, &CancelToken::never()).expect("never cancelled")
    }

    pub fn cokernel_cancellable(n: usize, relations: &[Vec<i64>], cancel: &CancelToken) -> Result<Self> {
        if n == 0 {
            return Ok(Self::trivial());
        }
        if relations.is_empty() {
            return Ok(Self::free(n));
        }
        let r = smith_normal_form_cancellable(&IntMatrix::from_columns(n, relations), cancel)?;
        let torsion = r.invariant_factors().into_iter().filter(|d| !d.is_one()).collect();
        Ok(AbelianGroup { rank: n - r.rank, torsion })
    }

    /// Order of the group, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        if self.rank > 0 {
            None
        } else {
            Some(self.torsion.iter().fold(BigInt::one(), |a, d| a * d))
        }
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// A letter: generator index and exponent sign.
pub type Letter = (usize, i32);
pub type Word = Vec<Letter>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
}

fn reduce(w: &mut Word) {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w.iter() {
        if let Some(&last) = out.last() {
            if last.0 == l.0 && last.1 == -l.1 {
                out.pop();
                continue;
            }
        }
        out.push(l);
    }
    // cyclic reduction
    while out.len() >= 2 {
        let (a, b) = (out[0], out[out.len() - 1]);
        if a.0 == b.0 && a.1 == -b.1 {
            out.pop();
            out.remove(0);
        } else {
            break;
        }
    }
    *w = out;
}

fn inverse(w: &[Letter]) -> Word {
    w.iter().rev().map(|(g, e)| (*g, -e)).collect()
}

impl GroupPresentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Self {
        GroupPresentation { generators, relators }
    }

    pub fn abelianization(&self) -> AbelianGroup {
        let n = self.generators.len();
        let rels: Vec<Vec<i64>> = self
            .relators
            .iter()
            .map(|w| {
                let mut v = vec![0i64; n];
                for (g, e) in w {
                    v[*g] += *e as i64;
                }
                v
            })
            .collect();
        AbelianGroup::cokernel(n, &rels)
    }

    /// Free and cyclic reduction, removal of empty and duplicate relators, and
    /// elimination of generators that occur exactly once in some relator.
    /// Word growth is capped at `max_len` letters per relator.
    pub fn simplify(&mut self, max_len: usize) {
        loop {
            for w in &mut self.relators {
                reduce(w);
            }
            self.relators.retain(|w| !w.is_empty());
            let mut seen = std::collections::BTreeSet::new();
            self.relators.retain(|w| seen.insert(w.clone()));
            if !self.eliminate_one(max_len) {
                break;
            }
        }
    }

    fn eliminate_one(&mut self, max_len: usize) -> bool {
        let mut order: Vec<usize> = (0..self.relators.len()).collect();
        order.sort_by_key(|i| self.relators[*i].len());
        for ri in order {
            let r = self.relators[ri].clone();
            for (pos, &(g, e)) in r.iter().enumerate() {
                if r.iter().filter(|l| l.0 == g).count() != 1 {
                    continue;
                }
                // r = u g^e v  =>  g^e = u^-1 v^-1 (cyclically: g^e = (v u)^-1)
                let mut rest: Word = r[pos + 1..].to_vec();
                rest.extend_from_slice(&r[..pos]);
                let value = if e == 1 { inverse(&rest) } else { rest };
                let grows = self
                    .relators
                    .iter()
                    .any(|w| w.len() + w.iter().filter(|l| l.0 == g).count() * value.len() > max_len);
                if grows {
                    continue;
                }
                let mut rels = Vec::new();
                for (k, w) in self.relators.iter().enumerate() {
                    if k == ri {
                        continue;
                    }
                    let mut nw = Word::new();
                    for &(h, f) in w {
                        if h == g {
                            if f == 1 {
                                nw.extend_from_slice(&value);
                            } else {
                                nw.extend(inverse(&value));
                            }
                        } else {
                            nw.push((h, f));
                        }
                    }
                    rels.push(nw);
                }
                self.relators = rels;
                self.drop_generator(g);
                return true;
            }
        }
        false
    }

    fn drop_generator(&mut self, g: usize) {
        self.generators.remove(g);
        for w in &mut self.relators {
            for l in w.iter_mut() {
                debug_assert_ne!(l.0, g);
                if l.0 > g {
                    l.0 -= 1;
                }
            }
        }
    }

    pub fn word_string(&self, w: &[Letter]) -> String {
        w.iter()
            .map(|(g, e)| if *e == 1 { self.generators[*g].clone() } else { format!("{}^-1", self.generators[*g]) })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|w| self.word_string(w)).collect();
        write!(f, "< {} | {} >", self.generators.join(", "), rels.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cokernels() {
        assert_eq!(AbelianGroup::cokernel(2, &[vec![2, 0], vec![0, 3]]).to_string(), "Z/6");
        assert_eq!(AbelianGroup::cokernel(3, &[vec![2, 0, 0]]).to_string(), "Z^2 + Z/2");
        assert_eq!(AbelianGroup::cokernel(1, &[vec![1]]).to_string(), "0");
        assert!(AbelianGroup::cokernel(0, &[]).is_trivial());
    }

    #[test]
    fn tietze_keeps_abelianization() {
        // < a, b | a b a^-1 b^-1, a^2 b > -> Z
        let mut p = GroupPresentation::new(vec!["a".into(), "b".into()], vec![vec![(0, 1), (1, 1), (0, -1), (1, -1)], vec![(0, 1), (0, 1), (1, 1)]]);
        let before = p.abelianization();
        p.simplify(100);
        assert_eq!(p.abelianization(), before);
        assert_eq!(p.generators.len(), 1);
        assert_eq!(before.to_string(), "Z");
    }

    #[test]
    fn trivial_group_simplifies_away() {
        let mut p = GroupPresentation::new(vec!["x".into()], vec![vec![(0, 1)], vec![(0, 1), (0, -1)]]);
        p.simplify(10);
        assert!(p.generators.is_empty() && p.relators.is_empty());
    }
}
