//! Signed permutations as the Weyl group `W = W⁰ ⋊ {1, r₀}` of `O_{2n}`,
//! with brute-force relative Weyl groups of standard Levi subgroups and of
//! decorated inertial orbits.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub const WEYL_RANK_CAP: usize = 5;

/// `w(ε_i) = sign_i · ε_{perm[i]}`, coordinates numbered from 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPermutation {
    perm: Vec<u8>,
    neg: u32,
}

impl SignedPermutation {
    pub fn new(perm: Vec<u8>, neg: u32) -> SignedPermutation {
        SignedPermutation { perm, neg }
    }

    pub fn identity(n: usize) -> SignedPermutation {
        SignedPermutation {
            perm: (0..n as u8).collect(),
            neg: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn image(&self, i: usize) -> (usize, bool) {
        (self.perm[i] as usize, self.neg >> i & 1 == 1)
    }

    pub fn sign_changes(&self) -> u32 {
        self.neg.count_ones()
    }

    /// Membership in `W⁰`.
    pub fn is_even(&self) -> bool {
        self.sign_changes().is_multiple_of(2)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        let n = self.rank();
        let mut perm = vec![0u8; n];
        let mut neg = 0u32;
        for i in 0..n {
            let (j, s1) = other.image(i);
            let (k, s2) = self.image(j);
            perm[i] = k as u8;
            if s1 ^ s2 {
                neg |= 1 << i;
            }
        }
        SignedPermutation { perm, neg }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let n = self.rank();
        let mut perm = vec![0u8; n];
        let mut neg = 0u32;
        for i in 0..n {
            let (j, s) = self.image(i);
            perm[j] = i as u8;
            if s {
                neg |= 1 << j;
            }
        }
        SignedPermutation { perm, neg }
    }

    /// Image of the root `s_i ε_i + s_j ε_j`, given as two signed coordinates.
    fn apply_root(
        &self,
        (i, si): (usize, bool),
        (j, sj): (usize, bool),
    ) -> ((usize, bool), (usize, bool)) {
        let (pi, ni) = self.image(i);
        let (pj, nj) = self.image(j);
        ((pi, si ^ ni), (pj, sj ^ nj))
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rank() {
            let (j, s) = self.image(i);
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}{}", if s { "-" } else { "" }, j + 1)?;
        }
        f.write_str("]")
    }
}

impl Serialize for SignedPermutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn permutations(n: usize) -> Vec<Vec<u8>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, (n - 1) as u8);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// All signed permutations of rank `n` (`full`), or the even ones.
pub fn weyl_group(n: usize, full: bool) -> Result<Vec<SignedPermutation>> {
    if n == 0 || n > WEYL_RANK_CAP {
        return Err(Error::CapExceeded {
            what: "Weyl rank",
            value: n as u32,
            cap: WEYL_RANK_CAP as u32,
        });
    }
    let mut out = Vec::new();
    for p in permutations(n) {
        for neg in 0..(1u32 << n) {
            let w = SignedPermutation {
                perm: p.clone(),
                neg,
            };
            if full || w.is_even() {
                out.push(w);
            }
        }
    }
    Ok(out)
}

/// `GL_{k₁} × … × GL_{k_r} × O_{2·tail}` with blocks on consecutive
/// coordinates followed by the tail.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct LeviDescriptor {
    pub composition: Vec<u32>,
    pub tail: u32,
}

impl LeviDescriptor {
    pub fn rank(&self) -> usize {
        (self.composition.iter().sum::<u32>() + self.tail) as usize
    }

    fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut start = 0usize;
        for &k in &self.composition {
            out.push((start..start + k as usize).collect());
            start += k as usize;
        }
        out
    }

    fn tail_coords(&self) -> std::ops::Range<usize> {
        let start = self.composition.iter().sum::<u32>() as usize;
        start..start + self.tail as usize
    }

    /// Positive roots of `M` as pairs of signed coordinates.
    fn positive_roots(&self) -> Vec<((usize, bool), (usize, bool))> {
        let mut out = Vec::new();
        for b in self.blocks() {
            for (x, &i) in b.iter().enumerate() {
                for &j in &b[x + 1..] {
                    out.push(((i, false), (j, true)));
                }
            }
        }
        let t: Vec<usize> = self.tail_coords().collect();
        for (x, &i) in t.iter().enumerate() {
            for &j in &t[x + 1..] {
                out.push(((i, false), (j, true)));
                out.push(((i, false), (j, false)));
            }
        }
        out
    }
}

impl fmt::Display for LeviDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}+{}", self.composition, self.tail)
    }
}

/// Every standard Levi of rank `n`: all compositions of `n − tail`.
pub fn standard_levis(n: usize) -> Vec<LeviDescriptor> {
    fn compositions(m: u32) -> Vec<Vec<u32>> {
        if m == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in 1..=m {
            for mut rest in compositions(m - first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    let mut out = Vec::new();
    for tail in 0..=n as u32 {
        for c in compositions(n as u32 - tail) {
            out.push(LeviDescriptor {
                composition: c,
                tail,
            });
        }
    }
    out
}

/// Orbit label on a GL block; the dual of a non-self-dual label toggles a
/// trailing `∨`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Decoration {
    pub label: String,
    #[serde(rename = "selfDual")]
    pub self_dual: bool,
}

impl Decoration {
    pub fn dual(&self) -> Decoration {
        if self.self_dual {
            return self.clone();
        }
        let label = match self.label.strip_suffix('∨') {
            Some(base) => base.to_string(),
            None => format!("{}∨", self.label),
        };
        Decoration {
            label,
            self_dual: false,
        }
    }
}

/// How `w` permutes the blocks: `Some(targets)` with `(block, negated)` per
/// block when `w` normalizes `M`.
fn block_action(levi: &LeviDescriptor, w: &SignedPermutation) -> Option<Vec<(usize, bool)>> {
    let blocks = levi.blocks();
    let tail = levi.tail_coords();
    for i in tail.clone() {
        if !tail.contains(&w.image(i).0) {
            return None;
        }
    }
    let mut out = Vec::with_capacity(blocks.len());
    for b in &blocks {
        let images: BTreeSet<usize> = b.iter().map(|&i| w.image(i).0).collect();
        let sign = w.image(b[0]).1;
        if b.iter().any(|&i| w.image(i).1 != sign) {
            return None;
        }
        let target = blocks.iter().position(|c| {
            c.len() == b.len() && c.iter().copied().collect::<BTreeSet<_>>() == images
        })?;
        out.push((target, sign));
    }
    Some(out)
}

fn preserves_decorations(act: &[(usize, bool)], decorations: &[Decoration]) -> bool {
    act.iter().enumerate().all(|(b, &(t, neg))| {
        let d = &decorations[b];
        decorations[t] == if neg { d.dual() } else { d.clone() }
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelativeWeyl {
    /// `|W(M)|`.
    pub full: usize,
    /// `|W⁰(M)|`.
    pub even: usize,
    pub equal: bool,
    /// A normalizing element whose class in `W(M)` has no even
    /// representative.
    pub witness: Option<SignedPermutation>,
}

/// The elements of `W(B_n)` normalizing a standard Levi, with their block
/// actions, and the Levi's own Weyl group.
#[derive(Debug, Clone)]
pub struct LeviNormalizer {
    pub levi: LeviDescriptor,
    normalizer: Vec<(SignedPermutation, Vec<(usize, bool)>)>,
    levi_weyl: Vec<SignedPermutation>,
}

impl LeviNormalizer {
    /// `group` must be `W(B_n)` for `n = levi.rank()`.
    pub fn new(group: &[SignedPermutation], levi: &LeviDescriptor) -> LeviNormalizer {
        let mut normalizer = Vec::new();
        let mut levi_weyl = Vec::new();
        for w in group {
            if let Some(act) = block_action(levi, w) {
                if act.iter().enumerate().all(|(b, &(t, s))| t == b && !s) {
                    levi_weyl.push(w.clone());
                }
                normalizer.push((w.clone(), act));
            }
        }
        LeviNormalizer {
            levi: levi.clone(),
            normalizer,
            levi_weyl,
        }
    }
}

fn quotient_sizes(
    ln: &LeviNormalizer,
    keep: impl Fn(&SignedPermutation, &[(usize, bool)]) -> bool,
) -> (
    Vec<SignedPermutation>,
    usize,
    usize,
    Option<SignedPermutation>,
) {
    let stab: Vec<SignedPermutation> = ln
        .normalizer
        .iter()
        .filter(|(w, act)| keep(w, act))
        .map(|(w, _)| w.clone())
        .collect();
    let levi_full = ln.levi_weyl.len();
    let levi_even = ln.levi_weyl.iter().filter(|w| w.is_even()).count();
    let stab_even = stab.iter().filter(|w| w.is_even()).count();
    let full = stab.len() / levi_full;
    let even = stab_even / levi_even;
    let witness = if full == even {
        None
    } else {
        // an element whose coset modulo the Levi Weyl group has no even member
        stab.iter()
            .find(|w| ln.levi_weyl.iter().all(|x| !w.compose(x).is_even()))
            .cloned()
    };
    (stab, full, even, witness)
}

pub fn relative_weyl(levi: &LeviDescriptor) -> Result<RelativeWeyl> {
    let group = weyl_group(levi.rank(), true)?;
    let (_, full, even, witness) = quotient_sizes(&LeviNormalizer::new(&group, levi), |_, _| true);
    Ok(RelativeWeyl {
        full,
        even,
        equal: full == even,
        witness,
    })
}

/// `W(M) ≠ W⁰(M)` exactly when there is no tail and some block has odd size.
pub fn levi_weyl_is_strict(levi: &LeviDescriptor) -> bool {
    levi.tail == 0 && levi.composition.iter().any(|k| k % 2 == 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitStabilizers {
    /// `|W(M, O)|`.
    pub full: usize,
    /// `|W⁰(M, O)|`.
    pub even: usize,
    /// `|R(O)|`: stabilizing elements sending the positive roots of `M` to
    /// positive roots.
    pub r: usize,
    /// `|R⁰(O)|`.
    pub r_even: usize,
    pub equal: bool,
    /// `N(M, O) = W_{M⁰} ⋊ R(O)` checked element by element.
    pub semidirect: bool,
    pub witness: Option<SignedPermutation>,
}

fn is_positive(((i, si), (j, sj)): ((usize, bool), (usize, bool))) -> bool {
    // roots ±ε_a ± ε_b: positive iff the smaller coordinate has sign +
    if i < j {
        !si
    } else {
        !sj
    }
}

pub fn orbit_stabilizers(
    levi: &LeviDescriptor,
    decorations: &[Decoration],
) -> Result<OrbitStabilizers> {
    if decorations.len() != levi.composition.len() {
        return Err(Error::Parse(format!(
            "{} decorations for {} blocks",
            decorations.len(),
            levi.composition.len()
        )));
    }
    let group = weyl_group(levi.rank(), true)?;
    Ok(orbit_stabilizers_in(
        &LeviNormalizer::new(&group, levi),
        decorations,
    ))
}

/// [`orbit_stabilizers`] with the normalizer of the Levi precomputed.
pub fn orbit_stabilizers_in(ln: &LeviNormalizer, decorations: &[Decoration]) -> OrbitStabilizers {
    let levi = &ln.levi;
    let (stab, full, even, witness) =
        quotient_sizes(ln, |_, act| preserves_decorations(act, decorations));
    let roots = levi.positive_roots();
    let r: Vec<&SignedPermutation> = stab
        .iter()
        .filter(|w| roots.iter().all(|&(a, b)| is_positive(w.apply_root(a, b))))
        .collect();
    let r_even = r.iter().filter(|w| w.is_even()).count();
    let levi0: Vec<SignedPermutation> = ln
        .levi_weyl
        .iter()
        .filter(|w| w.is_even())
        .cloned()
        .collect();
    let semidirect = semidirect_holds(&stab, &levi0, &r);
    OrbitStabilizers {
        full,
        even,
        r: r.len(),
        r_even,
        equal: full == even,
        semidirect,
        witness,
    }
}

fn semidirect_holds(
    n: &[SignedPermutation],
    normal: &[SignedPermutation],
    r: &[&SignedPermutation],
) -> bool {
    let nset: BTreeSet<&SignedPermutation> = n.iter().collect();
    let normal_set: BTreeSet<&SignedPermutation> = normal.iter().collect();
    let rset: BTreeSet<&SignedPermutation> = r.iter().copied().collect();
    let r_subgroup = r
        .iter()
        .all(|a| r.iter().all(|b| rset.contains(&a.compose(b))));
    // a subgroup normalizes itself, so conjugation by R covers N = W_{M⁰}·R
    let normal_in_n = normal.iter().all(|x| nset.contains(x))
        && r.iter().all(|g| {
            let gi = g.inverse();
            normal
                .iter()
                .all(|x| normal_set.contains(&g.compose(x).compose(&gi)))
        });
    let mut products = BTreeSet::new();
    for x in normal {
        for y in r {
            products.insert(x.compose(y));
        }
    }
    let unique = products.len() == normal.len() * r.len();
    r_subgroup && normal_in_n && unique && products == n.iter().cloned().collect()
}

/// `W(M, O) ≠ W⁰(M, O)` exactly when there is no tail and some odd block
/// carries a self-dual orbit.
pub fn orbit_weyl_is_strict(levi: &LeviDescriptor, decorations: &[Decoration]) -> bool {
    levi.tail == 0
        && levi
            .composition
            .iter()
            .zip(decorations)
            .any(|(k, d)| k % 2 == 1 && d.self_dual)
}

/// Every decoration of the blocks by orbits drawn from at most
/// `max_labels` base labels, each either self-dual or a dual pair, with
/// equal labels only on blocks of equal size.
pub fn decoration_assignments(levi: &LeviDescriptor, max_labels: usize) -> Vec<Vec<Decoration>> {
    let names = ["A", "B", "C", "D", "E"];
    let r = levi.composition.len();
    let mut out = BTreeSet::new();
    for sd_mask in 0..(1u32 << max_labels) {
        let choices: Vec<Decoration> = (0..max_labels)
            .flat_map(|l| {
                let self_dual = sd_mask >> l & 1 == 1;
                let base = Decoration {
                    label: names[l].to_string(),
                    self_dual,
                };
                if self_dual {
                    vec![base]
                } else {
                    vec![base.clone(), base.dual()]
                }
            })
            .collect();
        let mut idx = vec![0usize; r];
        'outer: loop {
            let decs: Vec<Decoration> = idx.iter().map(|&i| choices[i].clone()).collect();
            let base = |d: &Decoration| d.label.trim_end_matches('∨').to_string();
            let consistent = (0..r).all(|a| {
                (0..r).all(|b| {
                    base(&decs[a]) != base(&decs[b]) || levi.composition[a] == levi.composition[b]
                })
            });
            if consistent {
                out.insert(decs);
            }
            for pos in 0..r {
                idx[pos] += 1;
                if idx[pos] < choices.len() {
                    continue 'outer;
                }
                idx[pos] = 0;
            }
            break;
        }
    }
    out.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn levi(c: &[u32], tail: u32) -> LeviDescriptor {
        LeviDescriptor {
            composition: c.to_vec(),
            tail,
        }
    }

    #[test]
    fn group_orders() {
        assert_eq!(weyl_group(1, false).unwrap().len(), 1);
        assert_eq!(weyl_group(1, true).unwrap().len(), 2);
        assert_eq!(weyl_group(2, true).unwrap().len(), 8);
        assert_eq!(weyl_group(3, true).unwrap().len(), 48);
        assert_eq!(weyl_group(4, false).unwrap().len(), 192);
        assert!(weyl_group(6, true).is_err());
    }

    #[test]
    fn group_law() {
        let g = weyl_group(3, true).unwrap();
        let id = SignedPermutation::identity(3);
        for w in &g {
            assert_eq!(w.compose(&w.inverse()), id);
            assert_eq!(w.inverse().compose(w), id);
        }
        for a in g.iter().step_by(7) {
            for b in g.iter().step_by(5) {
                assert_eq!(a.compose(b).is_even(), a.is_even() == b.is_even());
            }
        }
    }

    #[test]
    fn levi_weyl_examples() {
        let r = relative_weyl(&levi(&[1, 1], 0)).unwrap();
        assert!(!r.equal);
        assert!(r.witness.is_some());
        assert!(relative_weyl(&levi(&[2], 0)).unwrap().equal);
        assert!(relative_weyl(&levi(&[1], 2)).unwrap().equal);
    }

    #[test]
    fn orbit_weyl_examples() {
        let sd = Decoration {
            label: "A".into(),
            self_dual: true,
        };
        let nsd = Decoration {
            label: "A".into(),
            self_dual: false,
        };
        let l = levi(&[1, 2], 0);
        let with_sd = orbit_stabilizers(
            &l,
            &[
                sd.clone(),
                Decoration {
                    label: "B".into(),
                    self_dual: false,
                },
            ],
        )
        .unwrap();
        assert!(!with_sd.equal);
        assert!(with_sd.semidirect);
        let without = orbit_stabilizers(
            &l,
            &[
                nsd,
                Decoration {
                    label: "B".into(),
                    self_dual: true,
                },
            ],
        )
        .unwrap();
        assert!(without.equal);
        assert!(without.semidirect);
    }

    #[test]
    fn levis_and_decorations() {
        assert_eq!(standard_levis(2).len(), 4);
        let decs = decoration_assignments(&levi(&[1], 0), 1);
        assert_eq!(decs.len(), 3);
        let decs = decoration_assignments(&levi(&[1, 2], 0), 1);
        assert!(decs.is_empty());
    }
}
