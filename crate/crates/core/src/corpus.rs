//! Standard inventories and generated corpora of parameters.

use std::collections::BTreeSet;

use crate::num::Sign;
use crate::params::{build_ld_parameter, summand_type, LDParameter, LDSummand};
use crate::weil::{
    is_self_dual_point, non_self_dual_spec, self_dual_spec, DualGroup, Family, InertialPoint,
    Inventory,
    TypeTag::{self, *},
    UnitMonomial,
};

/// The point of `class` with `f = ±1`.
pub fn point(class: &str, f: Sign) -> InertialPoint {
    InertialPoint {
        class: class.to_string(),
        f: UnitMonomial::from_sign(f),
    }
}

/// Six classes covering every duality type: an orthogonal character, a
/// symplectic plane, the two mixed planes and a non-self-dual pair.
pub fn standard_inventory() -> Inventory {
    Inventory::new(&[
        self_dual_spec("triv", 1, 1, Orthogonal, Orthogonal),
        self_dual_spec("rho_s", 2, 1, Symplectic, Symplectic),
        self_dual_spec("rho_os", 2, 2, Orthogonal, Symplectic),
        self_dual_spec("rho_so", 2, 2, Symplectic, Orthogonal),
        non_self_dual_spec("chi", "chi_dual", 1, 2),
        non_self_dual_spec("chi_dual", "chi", 1, 2),
    ])
    .expect("standard inventory is valid")
}

/// The standard inventory plus a ramified quadratic character `chi_ram`.
pub fn example_inventory() -> Inventory {
    let mut specs = standard_inventory().specs();
    specs.push(self_dual_spec("chi_ram", 1, 1, Orthogonal, Orthogonal));
    Inventory::new(&specs).expect("example inventory is valid")
}

/// Conjugate-dual classes for unitary ambients.
pub fn unitary_inventory() -> Inventory {
    Inventory::new(&[
        self_dual_spec("one_E", 1, 1, ConjugateOrthogonal, ConjugateSymplectic),
        self_dual_spec("sgn_E", 1, 1, ConjugateSymplectic, ConjugateOrthogonal),
        self_dual_spec("rho_co", 2, 1, ConjugateOrthogonal, ConjugateOrthogonal),
        self_dual_spec("rho_cs", 2, 1, ConjugateSymplectic, ConjugateSymplectic),
        non_self_dual_spec("mu", "mu_dual", 1, 2),
        non_self_dual_spec("mu_dual", "mu", 1, 2),
    ])
    .expect("unitary inventory is valid")
}

/// Orthogonal ambients of dimension `1..=max_dim` and symplectic ones of even
/// dimension up to `max_dim`.
pub fn standard_ambients(max_dim: u32) -> Vec<DualGroup> {
    let mut out: Vec<DualGroup> = (1..=max_dim)
        .map(|n| DualGroup::new(Family::Orthogonal, n).expect("positive"))
        .collect();
    out.extend((1..=max_dim / 2).map(|h| DualGroup::new(Family::Symplectic, 2 * h).expect("even")));
    out
}

/// Self-dual points `f = ±1` of every self-dual class, in canonical order.
pub fn self_dual_points(inv: &Inventory) -> Vec<InertialPoint> {
    inv.classes()
        .filter(|c| c.is_self_dual())
        .flat_map(|c| Sign::both().map(|s| point(&c.label, s)))
        .collect()
}

fn staircase_summands(p: &InertialPoint, of_type: bool, a_rho: u32) -> Vec<LDSummand> {
    (1..=a_rho)
        .map(|k| LDSummand::new(p.clone(), if of_type { 2 * k - 1 } else { 2 * k }, 1))
        .collect()
}

/// Every parameter of supercuspidal shape for `ambient`.
pub fn supercuspidal_corpus(inv: &Inventory, ambient: &DualGroup) -> Vec<LDParameter> {
    let pts: Vec<(InertialPoint, bool, u32)> = self_dual_points(inv)
        .into_iter()
        .filter_map(|p| {
            let of_type = crate::weil::is_of_type(inv, &p, ambient).ok()?;
            let k = inv.get(&p.class).ok()?.dim;
            Some((p, of_type, k))
        })
        .collect();
    let cost = |of_type: bool, k: u32, a: u32| if of_type { k * a * a } else { k * a * (a + 1) };
    let mut out = Vec::new();
    let mut choice = vec![0u32; pts.len()];
    fn rec(
        i: usize,
        left: u32,
        pts: &[(InertialPoint, bool, u32)],
        choice: &mut Vec<u32>,
        cost: &dyn Fn(bool, u32, u32) -> u32,
        out: &mut Vec<Vec<u32>>,
    ) {
        if i == pts.len() {
            if left == 0 {
                out.push(choice.clone());
            }
            return;
        }
        let (_, of_type, k) = &pts[i];
        let mut a = 0;
        while cost(*of_type, *k, a) <= left {
            choice[i] = a;
            rec(i + 1, left - cost(*of_type, *k, a), pts, choice, cost, out);
            a += 1;
        }
        choice[i] = 0;
    }
    let mut choices = Vec::new();
    rec(0, ambient.dim, &pts, &mut choice, &cost, &mut choices);
    for c in choices {
        let summands: Vec<LDSummand> = pts
            .iter()
            .zip(&c)
            .flat_map(|((p, of_type, _), &a)| staircase_summands(p, *of_type, a))
            .collect();
        if let Ok(phi) = build_ld_parameter(inv, &summands, *ambient) {
            out.push(phi);
        }
    }
    out.sort();
    out
}

/// Every discrete parameter for `ambient`: multiplicity-free sums of
/// self-dual summands of the ambient type.
pub fn discrete_corpus(inv: &Inventory, ambient: &DualGroup) -> Vec<LDParameter> {
    let mut candidates: Vec<(LDSummand, u32)> = Vec::new();
    for p in self_dual_points(inv) {
        let k = inv.get(&p.class).expect("listed class").dim;
        for a in 1..=ambient.dim / k {
            if summand_type(inv, &p, a, ambient) == Ok(true) {
                candidates.push((LDSummand::new(p.clone(), a, 1), k * a));
            }
        }
    }
    let mut out = Vec::new();
    fn rec(
        i: usize,
        left: u32,
        cands: &[(LDSummand, u32)],
        cur: &mut Vec<LDSummand>,
        out: &mut Vec<Vec<LDSummand>>,
    ) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        if i == cands.len() {
            return;
        }
        if cands[i].1 <= left {
            cur.push(cands[i].0.clone());
            rec(i + 1, left - cands[i].1, cands, cur, out);
            cur.pop();
        }
        rec(i + 1, left, cands, cur, out);
    }
    let mut sets = Vec::new();
    rec(0, ambient.dim, &candidates, &mut Vec::new(), &mut sets);
    for s in sets {
        if let Ok(phi) = build_ld_parameter(inv, &s, *ambient) {
            out.push(phi);
        }
    }
    out.sort();
    out
}

/// Every valid normed parameter `φ₀` for `ambient` that is trivial on `SL₂`,
/// built from classes respecting the normed convention.
pub fn normed_corpus(inv: &Inventory, ambient: &DualGroup) -> Vec<LDParameter> {
    let labels: Vec<(String, u32)> = inv
        .classes()
        .filter(|c| inv.orbit_label(&c.label).ok() == Some(c.label.as_str()))
        .filter(|c| inv.violates_normed_convention(&c.label, ambient) == Ok(false))
        .map(|c| {
            (
                c.label.clone(),
                if c.is_self_dual() { c.dim } else { 2 * c.dim },
            )
        })
        .collect();
    let mut out = BTreeSet::new();
    fn rec(
        i: usize,
        left: u32,
        labels: &[(String, u32)],
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if i == labels.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let mut m = 0;
        while m * labels[i].1 <= left {
            cur.push(m);
            rec(i + 1, left - m * labels[i].1, labels, cur, out);
            cur.pop();
            m += 1;
        }
    }
    let mut mults = Vec::new();
    rec(0, ambient.dim, &labels, &mut Vec::new(), &mut mults);
    for ms in mults {
        let mut summands = Vec::new();
        for ((label, _), &m) in labels.iter().zip(&ms) {
            if m == 0 {
                continue;
            }
            let p = InertialPoint {
                class: label.clone(),
                f: UnitMonomial::one(),
            };
            if !is_self_dual_point(inv, &p).unwrap_or(false) {
                let d = inv.dual_label(label).expect("listed class").to_string();
                summands.push(LDSummand::new(
                    InertialPoint {
                        class: d,
                        f: UnitMonomial::one(),
                    },
                    1,
                    m,
                ));
            }
            summands.push(LDSummand::new(p, 1, m));
        }
        if let Ok(phi) = build_ld_parameter(inv, &summands, *ambient) {
            out.insert(phi);
        }
    }
    out.into_iter().collect()
}

/// The tag of the `f = 1` point of a unitary base class of type `^LU_m`.
pub fn unitary_base_tag(m: u32) -> TypeTag {
    if m % 2 == 1 {
        ConjugateOrthogonal
    } else {
        ConjugateSymplectic
    }
}
