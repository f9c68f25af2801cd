//! Brute-force reference semantics, written directly from the definitions
//! over bitmasks and an attack matrix. Shares no code with the library.

#![allow(dead_code)]

use argon_core::{ArgId, ArgSet, Framework, Label, Labelling, SemanticsId};

pub struct Oracle {
    n: usize,
    /// `att[a][b]`: a attacks b.
    att: Vec<Vec<bool>>,
}

fn has(s: u32, i: usize) -> bool {
    s >> i & 1 == 1
}

fn subset(a: u32, b: u32) -> bool {
    a & !b == 0
}

impl Oracle {
    pub fn new(af: &Framework) -> Self {
        let n = af.len();
        assert!(n <= 12, "oracle is for small frameworks");
        let att = (0..n)
            .map(|a| (0..n).map(|b| af.attacks(ArgId(a), ArgId(b))).collect())
            .collect();
        Oracle { n, att }
    }

    fn all_sets(&self) -> impl Iterator<Item = u32> {
        0..1u32 << self.n
    }

    fn attacked(&self, s: u32) -> u32 {
        let mut out = 0;
        for b in 0..self.n {
            if (0..self.n).any(|a| has(s, a) && self.att[a][b]) {
                out |= 1 << b;
            }
        }
        out
    }

    fn defends(&self, s: u32, a: usize) -> bool {
        (0..self.n)
            .filter(|&b| self.att[b][a])
            .all(|b| (0..self.n).any(|z| has(s, z) && self.att[z][b]))
    }

    fn conflict_free(&self, s: u32) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| !(has(s, a) && has(s, b) && self.att[a][b])))
    }

    fn admissible(&self, s: u32) -> bool {
        self.conflict_free(s)
            && (0..self.n)
                .filter(|&a| has(s, a))
                .all(|a| self.defends(s, a))
    }

    fn complete(&self, s: u32) -> bool {
        self.admissible(s) && (0..self.n).all(|a| !self.defends(s, a) || has(s, a))
    }

    fn range(&self, s: u32) -> u32 {
        s | self.attacked(s)
    }

    fn full(&self) -> u32 {
        ((1u64 << self.n) - 1) as u32
    }

    fn filter(&self, p: impl Fn(u32) -> bool) -> Vec<u32> {
        self.all_sets().filter(|&s| p(s)).collect()
    }

    /// Members whose projection no other member strictly exceeds.
    fn maximal_by(family: &[u32], proj: impl Fn(u32) -> u32) -> Vec<u32> {
        family
            .iter()
            .copied()
            .filter(|&x| {
                family
                    .iter()
                    .all(|&y| !(subset(proj(x), proj(y)) && proj(x) != proj(y)))
            })
            .collect()
    }

    fn minimal_by(family: &[u32], proj: impl Fn(u32) -> u32) -> Vec<u32> {
        family
            .iter()
            .copied()
            .filter(|&x| {
                family
                    .iter()
                    .all(|&y| !(subset(proj(y), proj(x)) && proj(x) != proj(y)))
            })
            .collect()
    }

    /// Extensions as bitmasks, ascending.
    pub fn extensions(&self, sem: SemanticsId) -> Vec<u32> {
        use SemanticsId::*;
        let co = self.filter(|s| self.complete(s));
        let cf = self.filter(|s| self.conflict_free(s));
        match sem {
            ConflictFree => cf,
            Admissible => self.filter(|s| self.admissible(s)),
            Complete => co,
            Grounded => Self::minimal_by(&co, |s| s),
            Preferred => Self::maximal_by(&co, |s| s),
            Stable => cf
                .into_iter()
                .filter(|&s| self.range(s) == self.full())
                .collect(),
            SemiStable => Self::maximal_by(&co, |s| self.range(s)),
            Stage => Self::maximal_by(&cf, |s| self.range(s)),
            IdealSet | Ideal => {
                let pr = Self::maximal_by(&co, |s| s);
                let ideal: Vec<u32> = self
                    .filter(|s| self.admissible(s))
                    .into_iter()
                    .filter(|&s| pr.iter().all(|&p| subset(s, p)))
                    .collect();
                if sem == IdealSet {
                    ideal
                } else {
                    ideal
                        .iter()
                        .copied()
                        .filter(|&x| ideal.iter().all(|&y| subset(y, x)))
                        .collect()
                }
            }
        }
    }

    /// All `3^n` label vectors, index 0 most significant, `In < Out < Undec`.
    fn all_labels(&self) -> Vec<Vec<Label>> {
        let mut out = vec![vec![]];
        for _ in 0..self.n {
            out = out
                .into_iter()
                .flat_map(|v: Vec<Label>| {
                    [Label::In, Label::Out, Label::Undec].map(|l| {
                        let mut w = v.clone();
                        w.push(l);
                        w
                    })
                })
                .collect();
        }
        out
    }

    fn attackers(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&b| self.att[b][a])
    }

    fn lab_cf(&self, l: &[Label]) -> bool {
        (0..self.n).all(|a| match l[a] {
            Label::In => self.attackers(a).all(|b| l[b] != Label::In),
            Label::Out => self.attackers(a).any(|b| l[b] == Label::In),
            Label::Undec => true,
        })
    }

    fn lab_adm(&self, l: &[Label]) -> bool {
        (0..self.n).all(|a| match l[a] {
            Label::In => self.attackers(a).all(|b| l[b] == Label::Out),
            Label::Out => self.attackers(a).any(|b| l[b] == Label::In),
            Label::Undec => true,
        })
    }

    fn lab_co(&self, l: &[Label]) -> bool {
        self.lab_adm(l)
            && (0..self.n).all(|a| {
                l[a] != Label::Undec
                    || (!self.attackers(a).all(|b| l[b] == Label::Out)
                        && !self.attackers(a).any(|b| l[b] == Label::In))
            })
    }

    fn bits(l: &[Label], which: Label) -> u32 {
        l.iter()
            .enumerate()
            .filter(|(_, &x)| x == which)
            .fold(0, |m, (i, _)| m | 1 << i)
    }

    /// Labellings as label vectors, lexicographic.
    pub fn labellings(&self, sem: SemanticsId) -> Vec<Vec<Label>> {
        use SemanticsId::*;
        let all = self.all_labels();
        let pick = |p: &dyn Fn(&[Label]) -> bool| -> Vec<Vec<Label>> {
            all.iter().filter(|l| p(l)).cloned().collect()
        };
        let co = pick(&|l| self.lab_co(l));
        let cf = pick(&|l| self.lab_cf(l));
        let by = |family: &[Vec<Label>], keep: &dyn Fn(&Vec<Label>, &Vec<Label>) -> bool| {
            family
                .iter()
                .filter(|x| family.iter().all(|y| keep(x, y)))
                .cloned()
                .collect::<Vec<_>>()
        };
        let strictly_below = |a: u32, b: u32| subset(a, b) && a != b;
        let in_of = |l: &Vec<Label>| Self::bits(l, Label::In);
        let out_of = |l: &Vec<Label>| Self::bits(l, Label::Out);
        let undec_of = |l: &Vec<Label>| Self::bits(l, Label::Undec);
        match sem {
            ConflictFree => cf,
            Admissible => pick(&|l| self.lab_adm(l)),
            Complete => co.clone(),
            Grounded => by(&co, &|x, y| !strictly_below(in_of(y), in_of(x))),
            Preferred => by(&co, &|x, y| !strictly_below(in_of(x), in_of(y))),
            Stable => co.into_iter().filter(|l| undec_of(l) == 0).collect(),
            SemiStable => by(&co, &|x, y| !strictly_below(undec_of(y), undec_of(x))),
            Stage => by(&cf, &|x, y| !strictly_below(undec_of(y), undec_of(x))),
            IdealSet | Ideal => {
                let pr = by(&co, &|x, y| !strictly_below(in_of(x), in_of(y)));
                let below = |x: &Vec<Label>, p: &Vec<Label>| {
                    subset(in_of(x), in_of(p)) && subset(out_of(x), out_of(p))
                };
                let quasi: Vec<Vec<Label>> = pick(&|l| self.lab_adm(l))
                    .into_iter()
                    .filter(|l| pr.iter().all(|p| below(l, p)))
                    .collect();
                if sem == IdealSet {
                    quasi
                } else {
                    by(&quasi, &|x, y| below(y, x))
                }
            }
        }
    }
}

pub fn mask(set: &ArgSet) -> u32 {
    set.bits().expect("small universe") as u32
}

pub fn masks(sets: &[ArgSet]) -> Vec<u32> {
    sets.iter().map(mask).collect()
}

pub fn label_vectors(labs: &[Labelling]) -> Vec<Vec<Label>> {
    labs.iter().map(Labelling::labels).collect()
}

/// Framework on `A, B, ...` with attack `(i, j)` present iff `bits[i * n + j]`.
pub fn framework(n: usize, bits: &[bool]) -> Framework {
    let attacks = (0..n * n).filter(|&k| bits[k]).map(|k| (k / n, k % n));
    Framework::from_indices(argon_core::random::letter_names(n), attacks).unwrap()
}

/// Strategy for frameworks with up to `max_n` arguments.
pub fn arb_framework(max_n: usize) -> impl proptest::strategy::Strategy<Value = Framework> {
    use proptest::prelude::*;
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| framework(n, &bits))
    })
}
