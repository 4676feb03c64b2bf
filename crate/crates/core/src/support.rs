//! Supercuspidal supports `S(φ₀)` of a normed parameter, the discrete
//! parameters `φ^S`, the Levi subgroups `M_S` and the cuspidal pairs `(S, ε)`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::num::Sign;
use crate::params::{
    alternating_characters, build_ld_parameter, det_discrepancy, LDParameter, LDSummand,
    SignCharacter,
};
use crate::weil::{
    is_of_type, is_self_dual_point, DualGroup, InertialPoint, Inventory, UnitMonomial,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum OrbitKind {
    NotSelfDual {
        partner: String,
    },
    /// `plus_of_type` / `minus_of_type` record `κ′` for `ρ` and `ρ₋`.
    SelfDual {
        plus_of_type: bool,
        minus_of_type: bool,
    },
}

/// An orbit of `supp(φ₀)/∼`, labelled by its normed representative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Orbit {
    pub label: String,
    pub dim: u32,
    pub torsion: u32,
    /// `m(ρ; φ₀)`.
    pub m: u32,
    pub kind: OrbitKind,
}

impl Orbit {
    pub fn is_self_dual(&self) -> bool {
        matches!(self.kind, OrbitKind::SelfDual { .. })
    }
}

/// `a(a+1)` when not of type, `a²` when of type.
pub fn block_cost(a: u32, of_type: bool) -> u32 {
    if of_type {
        a * a
    } else {
        a * (a + 1)
    }
}

pub fn check_normed(phi0: &LDParameter) -> Result<()> {
    for s in phi0.summands() {
        if !s.point.f.is_one() || s.a != 1 {
            return Err(Error::NotNormed(s.to_string()));
        }
    }
    Ok(())
}

pub fn orbits(inv: &Inventory, phi0: &LDParameter) -> Result<Vec<Orbit>> {
    check_normed(phi0)?;
    let g = phi0.ambient();
    let mut out = Vec::new();
    for s in phi0.summands() {
        let rep = inv.orbit_label(&s.point.class)?;
        if rep != s.point.class {
            continue;
        }
        let c = inv.get(rep)?;
        let kind = if is_self_dual_point(inv, &s.point)? {
            let minus = InertialPoint {
                class: rep.to_string(),
                f: UnitMonomial::minus_one(),
            };
            OrbitKind::SelfDual {
                plus_of_type: is_of_type(inv, &s.point, g)?,
                minus_of_type: is_of_type(inv, &minus, g)?,
            }
        } else {
            OrbitKind::NotSelfDual {
                partner: inv.dual_label(rep)?.to_string(),
            }
        };
        out.push(Orbit {
            label: rep.to_string(),
            dim: c.dim,
            torsion: c.torsion,
            m: s.mult,
            kind,
        });
    }
    Ok(out)
}

/// Per self-dual orbit, the pair `(a₊, a₋)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SupportDatum {
    pub entries: BTreeMap<String, (u32, u32)>,
}

impl SupportDatum {
    pub fn get(&self, label: &str) -> (u32, u32) {
        self.entries.get(label).copied().unwrap_or((0, 0))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.values().all(|&e| e == (0, 0))
    }
}

/// `m_±(ρ; φ^S)` for a self-dual orbit.
pub fn m_pm(orbit: &Orbit, (ap, am): (u32, u32)) -> u32 {
    match orbit.kind {
        OrbitKind::SelfDual {
            plus_of_type,
            minus_of_type,
        } => block_cost(ap, plus_of_type) + block_cost(am, minus_of_type),
        OrbitKind::NotSelfDual { .. } => 0,
    }
}

/// Admissible `(a₊, a₋)` for one self-dual orbit, in lexicographic order.
pub fn orbit_options(orbit: &Orbit) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    let mut ap = 0;
    while m_pm(orbit, (ap, 0)) <= orbit.m {
        let mut am = 0;
        while m_pm(orbit, (ap, am)) <= orbit.m {
            if (orbit.m - m_pm(orbit, (ap, am))).is_multiple_of(2) {
                out.push((ap, am));
            }
            am += 1;
        }
        ap += 1;
    }
    out
}

pub fn supports(inv: &Inventory, phi0: &LDParameter) -> Result<Vec<SupportDatum>> {
    let orbs: Vec<Orbit> = orbits(inv, phi0)?
        .into_iter()
        .filter(Orbit::is_self_dual)
        .collect();
    let mut out = vec![SupportDatum::default()];
    for o in &orbs {
        let opts = orbit_options(o);
        out = out
            .into_iter()
            .flat_map(|s| {
                opts.iter().map(move |&e| {
                    let mut s = s.clone();
                    s.entries.insert(o.label.clone(), e);
                    s
                })
            })
            .collect();
    }
    out.sort();
    Ok(out)
}

pub fn validate_support(
    inv: &Inventory,
    phi0: &LDParameter,
    s: &SupportDatum,
) -> Result<Vec<Orbit>> {
    let orbs = orbits(inv, phi0)?;
    for label in s.entries.keys() {
        if !orbs.iter().any(|o| o.label == *label && o.is_self_dual()) {
            return Err(Error::InvalidSupport(format!(
                "{label} is not a self-dual orbit of φ₀"
            )));
        }
    }
    for o in orbs.iter().filter(|o| o.is_self_dual()) {
        let used = m_pm(o, s.get(&o.label));
        if used > o.m || (o.m - used) % 2 == 1 {
            return Err(Error::InvalidSupport(format!(
                "{}: m = {}, m_± = {used}",
                o.label, o.m
            )));
        }
    }
    Ok(orbs)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PhiS {
    pub phi: LDParameter,
    pub big_l: u32,
    pub small_l: u32,
    pub d_s: Sign,
}

/// `l_S = ⌊L_S / 2⌋`, the rank of the tail group.
pub fn tail_rank(big_l: u32) -> u32 {
    big_l / 2
}

pub fn build_phi_s(inv: &Inventory, phi0: &LDParameter, s: &SupportDatum) -> Result<PhiS> {
    let orbs = validate_support(inv, phi0, s)?;
    let mut summands = Vec::new();
    let mut big_l = 0;
    for o in &orbs {
        let OrbitKind::SelfDual {
            plus_of_type,
            minus_of_type,
        } = o.kind
        else {
            continue;
        };
        let (ap, am) = s.get(&o.label);
        for (f, count, of_type) in [
            (UnitMonomial::one(), ap, plus_of_type),
            (UnitMonomial::minus_one(), am, minus_of_type),
        ] {
            for k in 1..=count {
                let a = 2 * k - u32::from(of_type);
                summands.push(LDSummand::new(
                    InertialPoint {
                        class: o.label.clone(),
                        f,
                    },
                    a,
                    1,
                ));
                big_l += o.dim * a;
            }
        }
    }
    let ambient = DualGroup::tail(phi0.ambient().family, big_l)?;
    let phi = build_ld_parameter(inv, &summands, ambient)?;
    let d_s = det_discrepancy(inv, &phi, phi0)?;
    Ok(PhiS {
        phi,
        big_l,
        small_l: tail_rank(big_l),
        d_s,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GlFactor {
    pub orbit: String,
    #[serde(rename = "glSize")]
    pub gl_size: u32,
    pub mult: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Levi {
    pub gl: Vec<GlFactor>,
    pub tail: DualGroup,
}

pub fn build_levi(inv: &Inventory, phi0: &LDParameter, s: &SupportDatum) -> Result<Levi> {
    let orbs = validate_support(inv, phi0, s)?;
    let mut gl = Vec::new();
    let mut big_l = 0;
    for o in &orbs {
        let mult = if o.is_self_dual() {
            let used = m_pm(o, s.get(&o.label));
            if (o.m - used) % 2 == 1 {
                return Err(Error::InvalidSupport(format!(
                    "{}: odd GL multiplicity",
                    o.label
                )));
            }
            let (ap, am) = s.get(&o.label);
            let OrbitKind::SelfDual {
                plus_of_type,
                minus_of_type,
            } = o.kind
            else {
                unreachable!()
            };
            big_l += o.dim * (block_cost(ap, plus_of_type) + block_cost(am, minus_of_type));
            (o.m - used) / 2
        } else {
            o.m
        };
        if mult > 0 {
            gl.push(GlFactor {
                orbit: o.label.clone(),
                gl_size: o.dim,
                mult,
            });
        }
    }
    Ok(Levi {
        gl,
        tail: DualGroup::tail(phi0.ambient().family, big_l)?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CuspidalSupport {
    #[serde(rename = "S")]
    pub s: SupportDatum,
    #[serde(rename = "phiS")]
    pub phi_s: LDParameter,
    #[serde(rename = "LS")]
    pub big_l: u32,
    #[serde(rename = "lS")]
    pub small_l: u32,
    #[serde(rename = "dS")]
    pub d_s: Sign,
    pub levi: Levi,
    pub epsilon: SignCharacter,
    #[serde(rename = "epsZ")]
    pub eps_z: Sign,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CuspidalPairs {
    pub pairs: Vec<CuspidalSupport>,
    /// Index pairs with equal `(levi, phiS, epsilon)`.
    pub duplicates: Vec<(usize, usize)>,
    /// Indices with `l_S = 0` whose support carries more than one `ε`.
    pub degenerate: Vec<usize>,
}

pub fn cuspidal_pairs(inv: &Inventory, phi0: &LDParameter) -> Result<CuspidalPairs> {
    let mut pairs = Vec::new();
    let mut degenerate = Vec::new();
    for s in supports(inv, phi0)? {
        let ps = build_phi_s(inv, phi0, &s)?;
        let levi = build_levi(inv, phi0, &s)?;
        let chars = alternating_characters(inv, &ps.phi)?;
        let n = chars.len();
        for epsilon in chars {
            if ps.small_l == 0 && n > 1 {
                degenerate.push(pairs.len());
            }
            pairs.push(CuspidalSupport {
                s: s.clone(),
                phi_s: ps.phi.clone(),
                big_l: ps.big_l,
                small_l: ps.small_l,
                d_s: ps.d_s,
                levi: levi.clone(),
                eps_z: epsilon.eps_z,
                epsilon,
            });
        }
    }
    let mut duplicates = Vec::new();
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            let (a, b) = (&pairs[i], &pairs[j]);
            if a.levi == b.levi && a.phi_s == b.phi_s && a.epsilon == b.epsilon {
                duplicates.push((i, j));
            }
        }
    }
    Ok(CuspidalPairs {
        pairs,
        duplicates,
        degenerate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{point, standard_inventory};
    use crate::weil::{non_self_dual_spec, Family};

    fn setting(family: Family, n: u32) -> (Inventory, LDParameter) {
        let inv = standard_inventory();
        let g = DualGroup::new(family, n).unwrap();
        let phi0 = build_ld_parameter(&inv, &[LDSummand::new(point("triv", Sign::Plus), 1, n)], g)
            .unwrap();
        (inv, phi0)
    }

    fn datum(ap: u32, am: u32) -> SupportDatum {
        SupportDatum {
            entries: [("triv".to_string(), (ap, am))].into(),
        }
    }

    #[test]
    fn so7_supports() {
        let (inv, phi0) = setting(Family::Symplectic, 6);
        let got: Vec<(u32, u32)> = supports(&inv, &phi0)
            .unwrap()
            .iter()
            .map(|s| s.get("triv"))
            .collect();
        assert_eq!(got, vec![(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (2, 0)]);
    }

    #[test]
    fn sp4_supports() {
        let (inv, phi0) = setting(Family::Orthogonal, 5);
        let got: Vec<(u32, u32)> = supports(&inv, &phi0)
            .unwrap()
            .iter()
            .map(|s| s.get("triv"))
            .collect();
        assert_eq!(got, vec![(0, 1), (1, 0), (1, 2), (2, 1)]);
    }

    #[test]
    fn empty_parameter_has_one_support() {
        let inv = standard_inventory();
        let phi0 =
            build_ld_parameter(&inv, &[], DualGroup::tail(Family::Orthogonal, 0).unwrap()).unwrap();
        assert_eq!(
            supports(&inv, &phi0).unwrap(),
            vec![SupportDatum::default()]
        );
    }

    #[test]
    fn phi_s_examples() {
        let (inv, phi0) = setting(Family::Symplectic, 6);
        let ps = build_phi_s(&inv, &phi0, &datum(1, 0)).unwrap();
        assert_eq!(
            ps.phi.summands(),
            &[LDSummand::new(point("triv", Sign::Plus), 2, 1)]
        );
        assert_eq!(ps.big_l, 2);
        let zero = build_phi_s(&inv, &phi0, &datum(0, 0)).unwrap();
        assert!(zero.phi.is_empty());
        assert_eq!((zero.big_l, zero.d_s), (0, Sign::Plus));

        let (inv, phi0) = setting(Family::Orthogonal, 5);
        let ps = build_phi_s(&inv, &phi0, &datum(1, 0)).unwrap();
        assert_eq!(
            ps.phi.summands(),
            &[LDSummand::new(point("triv", Sign::Plus), 1, 1)]
        );
        assert_eq!(ps.big_l, 1);
        assert!(build_phi_s(&inv, &phi0, &datum(0, 0)).is_err());
    }

    #[test]
    fn levi_examples() {
        let (inv, phi0) = setting(Family::Symplectic, 6);
        let levi = build_levi(&inv, &phi0, &datum(1, 0)).unwrap();
        assert_eq!(
            levi.gl,
            vec![GlFactor {
                orbit: "triv".into(),
                gl_size: 1,
                mult: 2
            }]
        );
        // 2·GL₁ takes four of the six dimensions
        assert_eq!(levi.tail.dim, 2);
        let full = build_levi(&inv, &phi0, &datum(0, 2)).unwrap();
        assert!(full.gl.is_empty());

        let inv = Inventory::new(&[
            non_self_dual_spec("tau", "tau_dual", 2, 1),
            non_self_dual_spec("tau_dual", "tau", 2, 1),
        ])
        .unwrap();
        let g = DualGroup::new(Family::Orthogonal, 12).unwrap();
        let tau = |c: &str| {
            LDSummand::new(
                InertialPoint {
                    class: c.into(),
                    f: UnitMonomial::one(),
                },
                1,
                3,
            )
        };
        let phi0 = build_ld_parameter(&inv, &[tau("tau"), tau("tau_dual")], g).unwrap();
        let levi = build_levi(&inv, &phi0, &SupportDatum::default()).unwrap();
        assert_eq!(
            levi.gl,
            vec![GlFactor {
                orbit: "tau".into(),
                gl_size: 2,
                mult: 3
            }]
        );
    }

    #[test]
    fn pair_counts() {
        let (inv, phi0) = setting(Family::Symplectic, 6);
        let cp = cuspidal_pairs(&inv, &phi0).unwrap();
        assert_eq!(cp.pairs.len(), 6);
        assert!(cp.duplicates.is_empty());

        // two supports carry one point each, the other two carry two points
        let (inv, phi0) = setting(Family::Orthogonal, 5);
        let cp = cuspidal_pairs(&inv, &phi0).unwrap();
        assert_eq!(cp.pairs.len(), 12);
        assert!(cp.duplicates.is_empty());
    }

    #[test]
    fn not_normed_is_rejected() {
        let inv = standard_inventory();
        let g = DualGroup::new(Family::Orthogonal, 1).unwrap();
        let phi = build_ld_parameter(&inv, &[LDSummand::new(point("triv", Sign::Minus), 1, 1)], g)
            .unwrap();
        assert!(matches!(supports(&inv, &phi), Err(Error::NotNormed(_))));
    }
}
