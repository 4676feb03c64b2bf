//! Langlands–Deligne parameters as canonical multisets of summands
//! `ρ ⊗ sp(a)`, their component groups and alternating characters, and the
//! supercuspidal counts.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::num::Sign;
use crate::weil::{dual_point, is_of_type, DualGroup, InertialPoint, Inventory, UnitMonomial};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LDSummand {
    #[serde(flatten)]
    pub point: InertialPoint,
    pub a: u32,
    #[serde(default = "one")]
    pub mult: u32,
}

fn one() -> u32 {
    1
}

impl LDSummand {
    pub fn new(point: InertialPoint, a: u32, mult: u32) -> LDSummand {
        LDSummand { point, a, mult }
    }
}

impl fmt::Display for LDSummand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mult > 1 {
            write!(f, "{}·", self.mult)?;
        }
        write!(f, "{}⊗sp({})", self.point, self.a)
    }
}

/// A validated parameter. Summands are sorted by class label, then `f`, then
/// `a`, with equal summands merged.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct LDParameter {
    ambient: DualGroup,
    summands: Vec<LDSummand>,
}

impl LDParameter {
    pub fn ambient(&self) -> &DualGroup {
        &self.ambient
    }

    pub fn summands(&self) -> &[LDSummand] {
        &self.summands
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    /// `m(ρ; φ)`: each `ρ ⊗ sp(a)` contributes `a` copies of `ρ`.
    pub fn weighted_multiplicity(&self, p: &InertialPoint) -> u32 {
        self.summands
            .iter()
            .filter(|s| s.point == *p)
            .map(|s| s.a * s.mult)
            .sum()
    }
}

impl fmt::Display for LDParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}:", self.ambient.family, self.ambient.dim)?;
        if self.summands.is_empty() {
            return f.write_str(" 0");
        }
        for (i, s) in self.summands.iter().enumerate() {
            f.write_str(if i == 0 { " " } else { " ⊕ " })?;
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Parameter file layout: `{ambient, summands, classes?}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ParameterFile {
    pub ambient: DualGroup,
    pub summands: Vec<LDSummand>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classes: Option<Vec<crate::weil::ClassSpec>>,
}

/// Whether `ρ ⊗ sp(a)` is of the type of `g`: the type of `ρ` flips with the
/// parity of `a`.
pub fn summand_type(inv: &Inventory, p: &InertialPoint, a: u32, g: &DualGroup) -> Result<bool> {
    Ok(is_of_type(inv, p, g)? ^ a.is_multiple_of(2))
}

pub fn build_ld_parameter(
    inv: &Inventory,
    summands: &[LDSummand],
    ambient: DualGroup,
) -> Result<LDParameter> {
    DualGroup::tail(ambient.family, ambient.dim)?;
    let mut merged: BTreeMap<(InertialPoint, u32), u32> = BTreeMap::new();
    for s in summands {
        if s.a == 0 || s.mult == 0 {
            return Err(Error::InvalidClass(format!(
                "summand {s} needs a ≥ 1 and mult ≥ 1"
            )));
        }
        inv.get(&s.point.class)?;
        *merged.entry((s.point.clone(), s.a)).or_insert(0) += s.mult;
    }
    let mut total = 0u32;
    for ((p, a), m) in &merged {
        total += inv.get(&p.class)?.dim * a * m;
    }
    if total != ambient.dim {
        return Err(Error::DimensionMismatch {
            expected: ambient.dim,
            found: total,
        });
    }
    for ((p, a), m) in &merged {
        let d = dual_point(inv, p)?;
        if merged.get(&(d.clone(), *a)) != Some(m) {
            return Err(Error::NotDualClosed(format!(
                "{m}·{p}⊗sp({a}) has no matching {d}⊗sp({a})"
            )));
        }
        if d == *p && !summand_type(inv, p, *a, &ambient)? && m % 2 == 1 {
            return Err(Error::OddMultiplicity(format!("{p}⊗sp({a})")));
        }
    }
    let summands = merged
        .into_iter()
        .map(|((point, a), mult)| LDSummand { point, a, mult })
        .collect();
    Ok(LDParameter { ambient, summands })
}

pub fn parameter_from_file(file: &ParameterFile, inv: &Inventory) -> Result<LDParameter> {
    file.ambient.validate()?;
    build_ld_parameter(inv, &file.summands, file.ambient)
}

/// Per-point data of a parameter of supercuspidal shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointBlock {
    pub point: InertialPoint,
    pub of_type: bool,
    /// `a_ρ`: the number of summands carried by the point.
    pub a_rho: u32,
}

/// The staircase decomposition, or `None` when `φ` is not of supercuspidal
/// shape.
pub fn staircase(inv: &Inventory, phi: &LDParameter) -> Option<Vec<PointBlock>> {
    let mut by_point: BTreeMap<&InertialPoint, Vec<u32>> = BTreeMap::new();
    for s in phi.summands() {
        if s.mult != 1 || !crate::weil::is_self_dual_point(inv, &s.point).ok()? {
            return None;
        }
        by_point.entry(&s.point).or_default().push(s.a);
    }
    let mut blocks = Vec::new();
    for (p, dims) in by_point {
        let of_type = is_of_type(inv, p, phi.ambient()).ok()?;
        let expected: Vec<u32> = (1..=dims.len() as u32)
            .map(|k| if of_type { 2 * k - 1 } else { 2 * k })
            .collect();
        if dims != expected {
            return None;
        }
        blocks.push(PointBlock {
            point: p.clone(),
            of_type,
            a_rho: dims.len() as u32,
        });
    }
    Some(blocks)
}

pub fn is_supercuspidal_shape(inv: &Inventory, phi: &LDParameter) -> bool {
    staircase(inv, phi).is_some()
}

pub fn is_discrete(inv: &Inventory, phi: &LDParameter) -> bool {
    phi.summands().iter().all(|s| {
        s.mult == 1
            && crate::weil::is_self_dual_point(inv, &s.point).unwrap_or(false)
            && summand_type(inv, &s.point, s.a, phi.ambient()).unwrap_or(false)
    })
}

pub fn generator_label(s: &LDSummand) -> String {
    format!("{}⊗sp({})", s.point, s.a)
}

/// `S_φ` as the free 𝔽₂-space on the summands; `-id` is the sum of all
/// generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentGroup {
    pub generators: Vec<String>,
    #[serde(rename = "minusElement")]
    pub minus_element: Vec<bool>,
}

impl ComponentGroup {
    pub fn rank(&self) -> usize {
        self.generators.len()
    }
}

pub fn component_group(phi: &LDParameter) -> Result<ComponentGroup> {
    if let Some(s) = phi.summands().iter().find(|s| s.mult > 1) {
        return Err(Error::NotMultiplicityFree(s.to_string()));
    }
    let generators: Vec<String> = phi.summands().iter().map(generator_label).collect();
    let minus_element = vec![true; generators.len()];
    Ok(ComponentGroup {
        generators,
        minus_element,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SignCharacter {
    pub values: BTreeMap<String, Sign>,
    #[serde(rename = "isAlternating")]
    pub is_alternating: bool,
    #[serde(rename = "epsZ")]
    pub eps_z: Sign,
}

/// Checks the alternating condition on an arbitrary sign assignment.
pub fn is_alternating(inv: &Inventory, phi: &LDParameter, values: &BTreeMap<String, Sign>) -> bool {
    let Some(blocks) = staircase(inv, phi) else {
        return false;
    };
    blocks.iter().all(|b| {
        let gens: Vec<Sign> = phi
            .summands()
            .iter()
            .filter(|s| s.point == b.point)
            .map(|s| values.get(&generator_label(s)).copied())
            .collect::<Option<Vec<_>>>()
            .unwrap_or_default();
        if gens.len() != b.a_rho as usize {
            return false;
        }
        let first = gens[0];
        (b.of_type || first == Sign::Minus)
            && gens
                .iter()
                .enumerate()
                .all(|(k, &v)| v == Sign::pow_minus_one(k as u64) * first)
    })
}

fn character(inv: &Inventory, phi: &LDParameter, values: BTreeMap<String, Sign>) -> SignCharacter {
    let eps_z = values.values().copied().product();
    let is_alternating = is_alternating(inv, phi, &values);
    SignCharacter {
        values,
        is_alternating,
        eps_z,
    }
}

/// All alternating characters, built block by block: one choice of
/// `ε(z_{ρ,1})` per point of the ambient type, the forced `-1` otherwise.
pub fn alternating_characters(inv: &Inventory, phi: &LDParameter) -> Result<Vec<SignCharacter>> {
    let blocks = staircase(inv, phi)
        .ok_or_else(|| Error::Unsupported(format!("{phi} is not of supercuspidal shape")))?;
    let free: Vec<&PointBlock> = blocks.iter().filter(|b| b.of_type).collect();
    let mut out = Vec::with_capacity(1 << free.len());
    for mask in 0u64..(1u64 << free.len()) {
        let mut values = BTreeMap::new();
        for b in &blocks {
            let first = match free.iter().position(|f| f.point == b.point) {
                Some(i) => Sign::from_parity(mask >> i & 1 == 1),
                None => Sign::Minus,
            };
            let mut k = 0u64;
            for s in phi.summands().iter().filter(|s| s.point == b.point) {
                values.insert(generator_label(s), Sign::pow_minus_one(k) * first);
                k += 1;
            }
        }
        out.push(character(inv, phi, values));
    }
    out.sort();
    Ok(out)
}

/// Enumerates every sign assignment on the generators and keeps the
/// alternating ones.
pub fn brute_force_alternating(inv: &Inventory, phi: &LDParameter) -> Result<Vec<SignCharacter>> {
    let group = component_group(phi)?;
    let n = group.rank();
    if n > 24 {
        return Err(Error::CapExceeded {
            what: "generators",
            value: n as u32,
            cap: 24,
        });
    }
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        let values: BTreeMap<String, Sign> = group
            .generators
            .iter()
            .enumerate()
            .map(|(i, g)| (g.clone(), Sign::from_parity(mask >> i & 1 == 1)))
            .collect();
        let c = character(inv, phi, values);
        if c.is_alternating {
            out.push(c);
        }
    }
    out.sort();
    Ok(out)
}

/// Counts of points of the ambient type with odd and even `a_ρ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TypeCounts {
    /// Number of points of the ambient type with `a_ρ` odd, without the
    /// convention that replaces 0 by 1.
    pub odd: u32,
    pub even: u32,
    /// `∏ ε_{φ,ρ}` over the points not of type and the even points of type.
    pub sign_product: Sign,
}

impl TypeCounts {
    /// `t_o`, set to 1 when no point of type has odd `a_ρ`.
    pub fn t_o(&self) -> u32 {
        self.odd.max(1)
    }

    pub fn t_e(&self) -> u32 {
        self.even
    }

    /// Number of alternating characters, `2^{odd + even}`.
    pub fn alternating_total(&self) -> u64 {
        1u64 << (self.odd + self.even)
    }
}

pub fn type_counts(inv: &Inventory, phi: &LDParameter) -> Result<TypeCounts> {
    let blocks = staircase(inv, phi)
        .ok_or_else(|| Error::Unsupported(format!("{phi} is not of supercuspidal shape")))?;
    let mut tc = TypeCounts {
        odd: 0,
        even: 0,
        sign_product: Sign::Plus,
    };
    for b in &blocks {
        let a = u64::from(b.a_rho);
        match (b.of_type, a % 2 == 1) {
            (true, true) => tc.odd += 1,
            (true, false) => {
                tc.even += 1;
                tc.sign_product = tc.sign_product * Sign::pow_minus_one(a / 2);
            }
            (false, _) => tc.sign_product = tc.sign_product * Sign::pow_minus_one(a * (a + 1) / 2),
        }
    }
    Ok(tc)
}

/// Closed-form count of supercuspidal representations of `G^form`.
///
/// `G^+` receives `2^{t_o-1} 2^{t_e}` representations when some point of
/// type has odd `a_ρ` or the sign product is `+1`, and none otherwise; the
/// remaining alternating characters belong to `G^-`. When `G` is symplectic
/// the first alternative always holds.
pub fn count_supercuspidals(inv: &Inventory, phi: &LDParameter, form: Sign) -> Result<u64> {
    let tc = type_counts(inv, phi)?;
    let exists = tc.odd > 0 || tc.sign_product == Sign::Plus;
    let plus = if exists {
        1u64 << (tc.t_o() - 1 + tc.t_e())
    } else {
        0
    };
    Ok(match form {
        Sign::Plus => plus,
        Sign::Minus => tc.alternating_total() - plus,
    })
}

/// Oracle: enumerate the alternating characters and route each by its value
/// on `-id`.
pub fn brute_force_supercuspidals(inv: &Inventory, phi: &LDParameter, form: Sign) -> Result<u64> {
    Ok(brute_force_alternating(inv, phi)?
        .iter()
        .filter(|c| c.eps_z == form)
        .count() as u64)
}

/// Compares the determinants of two parameters over the same inventory.
///
/// The base determinant labels must cancel (modulo 2 for self-dual classes).
/// A non-self-dual class contributes the inverse of its partner's label,
/// keyed by the orbit representative. The unramified part of a summand is
/// `f^{k·a}`.
pub fn det_discrepancy(inv: &Inventory, phi: &LDParameter, phi0: &LDParameter) -> Result<Sign> {
    let mut labels: BTreeMap<String, (i64, bool)> = BTreeMap::new();
    let mut unram = UnitMonomial::one();
    for (param, sign) in [(phi, 1i64), (phi0, -1i64)] {
        for s in param.summands() {
            let c = inv.get(&s.point.class)?;
            let rep = inv.orbit_label(&s.point.class)?;
            let (key, dir) = if c.is_self_dual() || rep == s.point.class {
                (c.det_base.clone(), 1)
            } else {
                (inv.get(rep)?.det_base.clone(), -1)
            };
            let copies = i64::from(s.a * s.mult);
            let e = labels.entry(key).or_insert((0, true));
            e.0 += sign * dir * copies;
            e.1 &= c.is_self_dual();
            let pw = s.point.f.pow(i64::from(c.dim * s.a * s.mult));
            unram = unram * if sign > 0 { pw } else { pw.inv() };
        }
    }
    for (label, (n, self_dual)) in &labels {
        let residue = if *self_dual { n % 2 } else { *n };
        if label != "1" && residue != 0 {
            return Err(Error::DetDiscrepancy(format!(
                "base determinant {label} does not cancel"
            )));
        }
    }
    unram
        .as_sign()
        .ok_or_else(|| Error::DetDiscrepancy(format!("unramified ratio {unram}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{example_inventory, point};
    use crate::weil::Family;

    fn inv() -> Inventory {
        example_inventory()
    }

    fn sum(class: &str, f: Sign, a: u32) -> LDSummand {
        LDSummand::new(point(class, f), a, 1)
    }

    fn orth(n: u32) -> DualGroup {
        DualGroup::new(Family::Orthogonal, n).unwrap()
    }

    fn symp(n: u32) -> DualGroup {
        DualGroup::new(Family::Symplectic, n).unwrap()
    }

    fn sp4_example(inv: &Inventory) -> LDParameter {
        build_ld_parameter(
            inv,
            &[
                sum("triv", Sign::Plus, 1),
                sum("triv", Sign::Plus, 3),
                sum("chi_ram", Sign::Plus, 1),
            ],
            orth(5),
        )
        .unwrap()
    }

    #[test]
    fn dual_pairs_cancel_in_determinants() {
        let inv = inv();
        let pair = build_ld_parameter(
            &inv,
            &[sum("chi", Sign::Plus, 1), sum("chi_dual", Sign::Plus, 1)],
            orth(2),
        )
        .unwrap();
        let empty =
            build_ld_parameter(&inv, &[], DualGroup::tail(Family::Orthogonal, 0).unwrap()).unwrap();
        assert_eq!(det_discrepancy(&inv, &empty, &pair).unwrap(), Sign::Plus);
        let single = build_ld_parameter(&inv, &[sum("triv", Sign::Plus, 1)], orth(1)).unwrap();
        assert!(det_discrepancy(&inv, &single, &pair).is_err());
    }

    #[test]
    fn summand_types() {
        let inv = inv();
        let p = point("triv", Sign::Plus);
        assert!(summand_type(&inv, &p, 2, &symp(2)).unwrap());
        assert!(!summand_type(&inv, &p, 1, &symp(2)).unwrap());
        assert!(summand_type(&inv, &p, 3, &orth(3)).unwrap());
        let nsd = point("chi", Sign::Plus);
        assert!(summand_type(&inv, &nsd, 1, &orth(3)).is_err());
    }

    #[test]
    fn build_and_validate() {
        let inv = inv();
        let phi = sp4_example(&inv);
        assert_eq!(phi.summands().len(), 3);
        assert!(matches!(
            build_ld_parameter(&inv, &[sum("triv", Sign::Plus, 2)], orth(5)),
            Err(Error::DimensionMismatch { .. })
        ));
        let twisted = InertialPoint {
            class: "triv".into(),
            f: UnitMonomial::i(),
        };
        assert!(matches!(
            build_ld_parameter(&inv, &[LDSummand::new(twisted, 1, 1)], orth(1)),
            Err(Error::NotDualClosed(_))
        ));
        // a symplectic-type summand in an orthogonal ambient needs even multiplicity
        assert!(matches!(
            build_ld_parameter(&inv, &[sum("triv", Sign::Plus, 2)], orth(2)),
            Err(Error::OddMultiplicity(_))
        ));
        let again = build_ld_parameter(&inv, phi.summands(), *phi.ambient()).unwrap();
        assert_eq!(again, phi);
    }

    #[test]
    fn supercuspidal_shapes() {
        let inv = inv();
        assert!(is_supercuspidal_shape(&inv, &sp4_example(&inv)));
        let only3 = build_ld_parameter(&inv, &[sum("triv", Sign::Plus, 3)], orth(3)).unwrap();
        assert!(!is_supercuspidal_shape(&inv, &only3));
        let single = build_ld_parameter(&inv, &[sum("triv", Sign::Minus, 1)], orth(1)).unwrap();
        assert!(is_supercuspidal_shape(&inv, &single));
    }

    #[test]
    fn component_groups() {
        let inv = inv();
        assert_eq!(component_group(&sp4_example(&inv)).unwrap().rank(), 3);
        let single = build_ld_parameter(&inv, &[sum("triv", Sign::Plus, 1)], orth(1)).unwrap();
        assert_eq!(component_group(&single).unwrap().rank(), 1);
        let double = build_ld_parameter(
            &inv,
            &[LDSummand::new(point("triv", Sign::Plus), 1, 2)],
            orth(2),
        )
        .unwrap();
        assert!(matches!(
            component_group(&double),
            Err(Error::NotMultiplicityFree(_))
        ));
    }

    #[test]
    fn alternating_examples() {
        let inv = inv();
        let phi = sp4_example(&inv);
        let chars = alternating_characters(&inv, &phi).unwrap();
        assert_eq!(chars.len(), 4);
        let mut sorted = chars.clone();
        sorted.sort();
        assert_eq!(sorted, brute_force_alternating(&inv, &phi).unwrap());
        let so3 = build_ld_parameter(&inv, &[sum("triv", Sign::Plus, 2)], symp(2)).unwrap();
        let forced = alternating_characters(&inv, &so3).unwrap();
        assert_eq!(forced.len(), 1);
        assert_eq!(forced[0].values.values().next(), Some(&Sign::Minus));
    }

    #[test]
    fn counting_examples() {
        let inv = inv();
        let phi = sp4_example(&inv);
        let tc = type_counts(&inv, &phi).unwrap();
        assert_eq!((tc.t_o(), tc.t_e()), (1, 1));
        assert_eq!(count_supercuspidals(&inv, &phi, Sign::Plus).unwrap(), 2);
        assert_eq!(
            brute_force_supercuspidals(&inv, &phi, Sign::Plus).unwrap(),
            2
        );

        let so7 = build_ld_parameter(
            &inv,
            &[
                sum("triv", Sign::Plus, 2),
                sum("chi_ram", Sign::Plus, 2),
                sum("rho_s", Sign::Plus, 1),
            ],
            symp(6),
        )
        .unwrap();
        for (form, n) in [(Sign::Plus, 1), (Sign::Minus, 1)] {
            assert_eq!(count_supercuspidals(&inv, &so7, form).unwrap(), n);
            assert_eq!(brute_force_supercuspidals(&inv, &so7, form).unwrap(), n);
        }

        let so3 = build_ld_parameter(&inv, &[sum("triv", Sign::Plus, 2)], symp(2)).unwrap();
        for (form, n) in [(Sign::Plus, 0), (Sign::Minus, 1)] {
            assert_eq!(count_supercuspidals(&inv, &so3, form).unwrap(), n);
            assert_eq!(brute_force_supercuspidals(&inv, &so3, form).unwrap(), n);
        }
    }

    #[test]
    fn block_values_on_minus_id() {
        for a in 1..=12u64 {
            let prod: Sign = (1..=a)
                .map(|k| Sign::pow_minus_one(k - 1))
                .product::<Sign>()
                * Sign::pow_minus_one(a);
            assert_eq!(prod, Sign::pow_minus_one(a * (a + 1) / 2));
            if a % 2 == 0 {
                assert_eq!(
                    Sign::pow_minus_one(a * (a - 1) / 2),
                    Sign::pow_minus_one(a / 2)
                );
            }
        }
    }

    #[test]
    fn discreteness() {
        let inv = inv();
        assert!(is_discrete(&inv, &sp4_example(&inv)));
        let double = build_ld_parameter(
            &inv,
            &[LDSummand::new(point("triv", Sign::Plus), 1, 2)],
            orth(2),
        )
        .unwrap();
        assert!(!is_discrete(&inv, &double));
        let nsd = build_ld_parameter(
            &inv,
            &[
                LDSummand::new(point("chi", Sign::Plus), 1, 1),
                LDSummand::new(point("chi_dual", Sign::Plus), 1, 1),
            ],
            orth(2),
        )
        .unwrap();
        assert!(!is_discrete(&inv, &nsd));
    }

    #[test]
    fn determinants() {
        let inv = inv();
        let phi0 = build_ld_parameter(
            &inv,
            &[LDSummand::new(point("triv", Sign::Plus), 1, 3)],
            orth(3),
        )
        .unwrap();
        assert_eq!(det_discrepancy(&inv, &phi0, &phi0).unwrap(), Sign::Plus);
        let phi = build_ld_parameter(
            &inv,
            &[
                LDSummand::new(point("triv", Sign::Plus), 1, 2),
                LDSummand::new(point("triv", Sign::Minus), 1, 1),
            ],
            orth(3),
        )
        .unwrap();
        assert_eq!(det_discrepancy(&inv, &phi, &phi0).unwrap(), Sign::Minus);
        let r0 = build_ld_parameter(
            &inv,
            &[LDSummand::new(point("rho_s", Sign::Plus), 1, 1)],
            symp(2),
        )
        .unwrap();
        let r1 = build_ld_parameter(
            &inv,
            &[LDSummand::new(point("rho_s", Sign::Minus), 1, 1)],
            symp(2),
        )
        .unwrap();
        assert_eq!(det_discrepancy(&inv, &r1, &r0).unwrap(), Sign::Plus);
    }
}
