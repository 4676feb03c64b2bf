//! Affine Hecke algebra descriptors attached to `(φ₀, S)`, the explicit
//! tables for the unipotent settings, and the unipotent reduction.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::corpus::{point, standard_inventory, unitary_inventory};
use crate::error::{Error, Result};
use crate::num::{HalfInt, Sign};
use crate::params::{build_ld_parameter, LDParameter, LDSummand};
use crate::support::{
    cuspidal_pairs, m_pm, orbits, validate_support, Orbit, OrbitKind, SupportDatum,
};
use crate::weil::{DualGroup, Family, Inventory};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum RootFamily {
    GL,
    SO,
    Sp,
}

/// One tensor factor. Exponents are absolute powers of `q`, already
/// multiplied by `t`. `end_long`/`end_short` are `None` for equal parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct HeckeFactor {
    pub family: RootFamily,
    pub size: u32,
    pub extended: bool,
    pub t: u32,
    pub internal: HalfInt,
    #[serde(rename = "endLong")]
    pub end_long: Option<HalfInt>,
    #[serde(rename = "endShort")]
    pub end_short: Option<HalfInt>,
}

impl HeckeFactor {
    pub fn equal(family: RootFamily, size: u32, t: u32) -> HeckeFactor {
        HeckeFactor {
            family,
            size,
            extended: false,
            t,
            internal: HalfInt::from_int(t.into()),
            end_long: None,
            end_short: None,
        }
    }

    pub fn unequal(size: u32, t: u32, end_long: HalfInt, end_short: HalfInt) -> HeckeFactor {
        HeckeFactor {
            family: RootFamily::SO,
            size,
            extended: false,
            t,
            internal: HalfInt::from_int(t.into()),
            end_long: Some(end_long),
            end_short: Some(end_short),
        }
    }

    pub fn is_equal_parameter(&self) -> bool {
        self.end_long.is_none() && self.end_short.is_none()
    }
}

impl fmt::Display for HeckeFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}_{}", self.family, self.size)?;
        if self.extended {
            f.write_str("⋊Z/2")?;
        }
        match (self.end_long, self.end_short) {
            (Some(l), Some(s)) => write!(f, " [q^{}; q^{}, q^{}]", self.internal, l, s),
            _ => write!(f, " [q^{}]", self.internal),
        }
    }
}

/// The factor attached to one orbit of `supp(φ₀)` and a support `S`.
pub fn hecke_factor(
    inv: &Inventory,
    phi0: &LDParameter,
    s: &SupportDatum,
    orbit: &str,
) -> Result<HeckeFactor> {
    let orbs = validate_support(inv, phi0, s)?;
    let o = orbs
        .iter()
        .find(|o| o.label == orbit)
        .ok_or_else(|| Error::InvalidSupport(format!("{orbit} is not an orbit of φ₀")))?;
    Ok(factor_for_orbit(o, s.get(&o.label)))
}

fn factor_for_orbit(o: &Orbit, (ap, am): (u32, u32)) -> HeckeFactor {
    let t = o.torsion;
    match o.kind {
        OrbitKind::NotSelfDual { .. } => HeckeFactor::equal(RootFamily::GL, o.m, t),
        OrbitKind::SelfDual {
            plus_of_type: true,
            minus_of_type: true,
        } if ap == 0 && am == 0 => HeckeFactor {
            extended: true,
            ..HeckeFactor::equal(RootFamily::SO, o.m, t)
        },
        OrbitKind::SelfDual {
            plus_of_type,
            minus_of_type,
        } => {
            let kp = i64::from(!plus_of_type);
            let km = i64::from(!minus_of_type);
            let (ap, am, t64) = (i64::from(ap), i64::from(am), i64::from(t));
            let long = HalfInt::from_twice(t64 * (2 * ap + 2 * am + kp + km));
            let short = HalfInt::from_twice(t64 * (2 * ap - 2 * am + kp - km)).abs();
            let size = o.m - m_pm(o, (ap as u32, am as u32)) + 1;
            HeckeFactor::unequal(size, t, long, short)
        }
    }
}

/// Rewrites `SO_{2n+1}` with parameters `q^t, …, q^t; q^0` as `Sp_{2n}` with
/// equal parameters; any other factor is returned unchanged.
pub fn sp_normalization(f: HeckeFactor) -> HeckeFactor {
    let internal = f.internal;
    match (f.family, f.extended, f.end_long, f.end_short) {
        (RootFamily::SO, false, Some(l), Some(HalfInt::ZERO))
            if l == internal && f.size % 2 == 1 =>
        {
            HeckeFactor::equal(RootFamily::Sp, f.size - 1, f.t)
        }
        _ => f,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitFactor {
    pub orbit: String,
    pub factor: HeckeFactor,
}

/// One factor per orbit of `supp(φ₀)/∼`.
pub fn hecke_descriptor(
    inv: &Inventory,
    phi0: &LDParameter,
    s: &SupportDatum,
) -> Result<Vec<OrbitFactor>> {
    let orbs = validate_support(inv, phi0, s)?;
    Ok(orbs
        .iter()
        .map(|o| OrbitFactor {
            orbit: o.label.clone(),
            factor: factor_for_orbit(o, s.get(&o.label)),
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    SoOdd,
    Sp,
    OEven,
    Unitary,
}

impl Kind {
    pub fn all() -> [Kind; 4] {
        [Kind::SoOdd, Kind::Sp, Kind::OEven, Kind::Unitary]
    }

    pub fn name(self) -> &'static str {
        match self {
            Kind::SoOdd => "so-odd",
            Kind::Sp => "sp",
            Kind::OEven => "o-even",
            Kind::Unitary => "unitary",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Kind> {
        match s.replace('_', "-").as_str() {
            "so-odd" => Ok(Kind::SoOdd),
            "sp" => Ok(Kind::Sp),
            "o-even" => Ok(Kind::OEven),
            "unitary" | "u" => Ok(Kind::Unitary),
            _ => Err(Error::Parse(format!("unknown kind `{s}`"))),
        }
    }
}

impl Serialize for Kind {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// The trivial-inertia setting: an inventory and `φ₀ = N·ρ` for the base
/// class `ρ`. For `Unitary` the rank is `m`, the size of `U_m`.
pub fn setting(kind: Kind, rank: u32) -> Result<(Inventory, LDParameter)> {
    if rank == 0 {
        return Err(Error::Unsupported("rank must be positive".into()));
    }
    let (inv, label, ambient) = match kind {
        Kind::SoOdd => (
            standard_inventory(),
            "triv",
            DualGroup::new(Family::Symplectic, 2 * rank)?,
        ),
        Kind::Sp => (
            standard_inventory(),
            "triv",
            DualGroup::new(Family::Orthogonal, 2 * rank + 1)?,
        ),
        Kind::OEven => (
            standard_inventory(),
            "triv",
            DualGroup::new(Family::Orthogonal, 2 * rank)?,
        ),
        Kind::Unitary => {
            let label = if rank % 2 == 1 { "one_E" } else { "sgn_E" };
            (
                unitary_inventory(),
                label,
                DualGroup::new(Family::UnitaryL, rank)?,
            )
        }
    };
    let phi0 = build_ld_parameter(
        &inv,
        &[LDSummand::new(point(label, Sign::Plus), 1, ambient.dim)],
        ambient,
    )?;
    Ok((inv, phi0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Bucket {
    Plus,
    Minus,
    Any,
}

impl Bucket {
    pub fn from_sign(s: Sign) -> Bucket {
        match s {
            Sign::Plus => Bucket::Plus,
            Sign::Minus => Bucket::Minus,
        }
    }
}

impl Serialize for Bucket {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(match self {
            Bucket::Plus => "+",
            Bucket::Minus => "-",
            Bucket::Any => "any",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TableRow {
    #[serde(rename = "dPlus")]
    pub d_plus: u32,
    #[serde(rename = "dMinus")]
    pub d_minus: u32,
    pub factor: HeckeFactor,
    pub bucket: Bucket,
    pub mult: u32,
}

fn squares_upto(n: u32) -> impl Iterator<Item = u32> {
    (0..).map(|a| a * a).take_while(move |&d| d <= n)
}

fn pronics_upto(n: u32) -> impl Iterator<Item = u32> {
    (0..).map(|a| a * (a + 1)).take_while(move |&d| d <= n)
}

fn isqrt(d: u32) -> u32 {
    (0..=d).find(|a| a * a >= d).unwrap_or(0)
}

fn pronic_root(d: u32) -> u32 {
    (0..=d).find(|a| a * (a + 1) >= d).unwrap_or(0)
}

/// `H(d₊, d₋)` read off the closed forms for each setting.
pub fn table_factor(kind: Kind, rank: u32, d_plus: u32, d_minus: u32) -> HeckeFactor {
    let d = match kind {
        Kind::Unitary => rank / 2,
        _ => rank,
    };
    let sum = d_plus + d_minus;
    let size = if sum.is_multiple_of(2) {
        2 * d + 1 - sum
    } else {
        2 * d + 2 - sum
    };
    let int = |n: u32| HalfInt::from_int(n.into());
    match kind {
        Kind::SoOdd => {
            if sum == 0 {
                return HeckeFactor::equal(RootFamily::Sp, 2 * d, 1);
            }
            let (ap, am) = (pronic_root(d_plus), pronic_root(d_minus));
            HeckeFactor::unequal(2 * d + 1 - sum, 1, int(ap + am + 1), int(ap.abs_diff(am)))
        }
        Kind::Sp | Kind::OEven => {
            if sum == 0 {
                return HeckeFactor {
                    extended: true,
                    ..HeckeFactor::equal(RootFamily::SO, 2 * d, 1)
                };
            }
            let (ap, am) = (isqrt(d_plus), isqrt(d_minus));
            HeckeFactor::unequal(size, 1, int(ap + am), int(ap.abs_diff(am)))
        }
        Kind::Unitary => {
            if sum == 0 {
                return HeckeFactor::unequal(
                    2 * d + 1,
                    1,
                    HalfInt::from_twice(1),
                    HalfInt::from_twice(1),
                );
            }
            let (ap, am) = (i64::from(isqrt(d_plus)), i64::from(pronic_root(d_minus)));
            HeckeFactor::unequal(
                size,
                1,
                HalfInt::from_twice(2 * ap + 2 * am + 1),
                HalfInt::from_twice(2 * ap - 2 * am - 1).abs(),
            )
        }
    }
}

/// `ε⁺_{d₊,d₋}` and `ε⁻_{d₊,d₋}` for pairs of squares.
pub fn epsilon_multiplicity(d_plus: u32, d_minus: u32, sign: Sign) -> u32 {
    let sum = d_plus + d_minus;
    let both = d_plus != 0 && d_minus != 0;
    let plus = if d_plus.is_multiple_of(2) && sum.is_multiple_of(8) && both {
        4
    } else if sum == 0 {
        1
    } else if d_plus.is_multiple_of(2) && sum.is_multiple_of(4) {
        0
    } else {
        2
    };
    match sign {
        Sign::Plus => plus,
        Sign::Minus if both => 4 - plus,
        Sign::Minus if sum != 0 => 2 - plus,
        Sign::Minus => 0,
    }
}

/// The explicit table for a setting, as stated in closed form.
pub fn specialize(kind: Kind, rank: u32) -> Result<Vec<TableRow>> {
    if rank == 0 {
        return Err(Error::Unsupported("rank must be positive".into()));
    }
    let mut rows = Vec::new();
    let mut push = |dp: u32, dm: u32, bucket: Bucket, mult: u32| {
        if mult > 0 {
            rows.push(TableRow {
                d_plus: dp,
                d_minus: dm,
                factor: table_factor(kind, rank, dp, dm),
                bucket,
                mult,
            });
        }
    };
    match kind {
        Kind::SoOdd => {
            let bound = 2 * rank + 1;
            for dp in pronics_upto(bound) {
                for dm in pronics_upto(bound - dp) {
                    let bucket = if ((dp + dm) / 2) % 2 == 0 {
                        Bucket::Plus
                    } else {
                        Bucket::Minus
                    };
                    push(dp, dm, bucket, 1);
                }
            }
        }
        Kind::Sp => {
            let bound = 2 * rank + 1;
            for dp in squares_upto(bound) {
                for dm in squares_upto(bound - dp).filter(|dm| (dp + dm) % 2 == 1) {
                    push(dp, dm, Bucket::Plus, 2);
                }
            }
        }
        Kind::OEven => {
            let bound = 2 * rank + 1;
            for dp in squares_upto(bound) {
                for dm in squares_upto(bound - dp).filter(|dm| (dp + dm) % 2 == 0) {
                    push(
                        dp,
                        dm,
                        Bucket::Plus,
                        epsilon_multiplicity(dp, dm, Sign::Plus),
                    );
                    push(
                        dp,
                        dm,
                        Bucket::Minus,
                        epsilon_multiplicity(dp, dm, Sign::Minus),
                    );
                }
            }
        }
        Kind::Unitary => {
            let d = rank / 2;
            let bound = 2 * d + 1;
            let odd = rank % 2 == 1;
            for dp in squares_upto(bound).filter(|dp| (dp % 2 == 1) == odd) {
                for dm in pronics_upto(bound - dp) {
                    if odd {
                        push(dp, dm, Bucket::Plus, 1);
                        push(dp, dm, Bucket::Minus, 1);
                    } else if (dp / 2) % 2 == 0 {
                        push(dp, dm, Bucket::Plus, if dp != 0 { 2 } else { 1 });
                    } else {
                        push(dp, dm, Bucket::Minus, 2);
                    }
                }
            }
        }
    }
    rows.sort();
    Ok(rows)
}

/// The table produced by enumerating cuspidal pairs of the setting, with the
/// single orbit's factor after [`sp_normalization`] and the bucket given by
/// `ε` on `-1`.
pub fn derived_table(kind: Kind, rank: u32) -> Result<Vec<TableRow>> {
    let (inv, phi0) = setting(kind, rank)?;
    let orbs = orbits(&inv, &phi0)?;
    let o = &orbs[0];
    let OrbitKind::SelfDual {
        plus_of_type,
        minus_of_type,
    } = o.kind
    else {
        return Err(Error::Unsupported("setting orbit must be self-dual".into()));
    };
    let mut counts: BTreeMap<(u32, u32, HeckeFactor, Bucket), u32> = BTreeMap::new();
    for pair in cuspidal_pairs(&inv, &phi0)?.pairs {
        let (ap, am) = pair.s.get(&o.label);
        let dp = crate::support::block_cost(ap, plus_of_type);
        let dm = crate::support::block_cost(am, minus_of_type);
        let factor = sp_normalization(factor_for_orbit(o, (ap, am)));
        *counts
            .entry((dp, dm, factor, Bucket::from_sign(pair.eps_z)))
            .or_insert(0) += 1;
    }
    Ok(counts
        .into_iter()
        .map(|((d_plus, d_minus, factor, bucket), mult)| TableRow {
            d_plus,
            d_minus,
            factor,
            bucket,
            mult,
        })
        .collect())
}

/// Number of cuspidal pairs of the setting at `(d₊, d₋)` whose factor is
/// `H(d₊, d₋)` and whose sign on `-1` is `sign` (any sign when `None`).
pub fn derived_multiplicity(
    kind: Kind,
    rank: u32,
    d_plus: u32,
    d_minus: u32,
    sign: Option<Sign>,
) -> Result<u32> {
    let target = table_factor(kind, rank, d_plus, d_minus);
    Ok(derived_table(kind, rank)?
        .iter()
        .filter(|r| r.d_plus == d_plus && r.d_minus == d_minus && r.factor == target)
        .filter(|r| sign.is_none_or(|s| r.bucket == Bucket::from_sign(s)))
        .map(|r| r.mult)
        .sum())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ReducedFamily {
    GL,
    SO,
    Sp,
    O,
    U,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Reduction {
    pub orbit: String,
    pub family: ReducedFamily,
    pub size: u32,
    /// Degree `t_ρ` of the unramified extension.
    pub degree: u32,
}

/// The group over `F_{t_ρ}` whose unipotent category matches the orbit's
/// Bernstein block.
pub fn unipotent_reduction(inv: &Inventory, phi0: &LDParameter) -> Result<Vec<Reduction>> {
    Ok(orbits(inv, phi0)?
        .into_iter()
        .map(|o| {
            let (family, size) = match o.kind {
                OrbitKind::NotSelfDual { .. } => (ReducedFamily::GL, o.m),
                OrbitKind::SelfDual {
                    plus_of_type: false,
                    ..
                } => (ReducedFamily::SO, o.m + 1),
                OrbitKind::SelfDual {
                    plus_of_type: true,
                    minus_of_type: true,
                } if o.m % 2 == 1 => (ReducedFamily::Sp, o.m - 1),
                OrbitKind::SelfDual {
                    plus_of_type: true,
                    minus_of_type: true,
                } => (ReducedFamily::O, o.m),
                OrbitKind::SelfDual {
                    plus_of_type: true,
                    minus_of_type: false,
                } => (ReducedFamily::U, o.m),
            };
            Reduction {
                orbit: o.label,
                family,
                size,
                degree: o.torsion,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weil::{non_self_dual_spec, self_dual_spec, InertialPoint, TypeTag, UnitMonomial};

    fn datum(ap: u32, am: u32) -> SupportDatum {
        SupportDatum {
            entries: [("triv".to_string(), (ap, am))].into(),
        }
    }

    fn h(n: i64) -> HalfInt {
        HalfInt::from_int(n)
    }

    fn nsd_setting(m: u32, t: i64) -> (Inventory, LDParameter) {
        let inv = Inventory::new(&[
            non_self_dual_spec("tau", "tau_dual", 1, t),
            non_self_dual_spec("tau_dual", "tau", 1, t),
        ])
        .unwrap();
        let g = DualGroup::new(Family::Orthogonal, 2 * m).unwrap();
        let s = |c: &str| {
            LDSummand::new(
                InertialPoint {
                    class: c.into(),
                    f: UnitMonomial::one(),
                },
                1,
                m,
            )
        };
        let phi0 = build_ld_parameter(&inv, &[s("tau"), s("tau_dual")], g).unwrap();
        (inv, phi0)
    }

    #[test]
    fn factor_examples() {
        let (inv, phi0) = nsd_setting(3, 2);
        let f = hecke_factor(&inv, &phi0, &SupportDatum::default(), "tau").unwrap();
        assert_eq!(f, HeckeFactor::equal(RootFamily::GL, 3, 2));
        assert_eq!(f.internal, h(2));

        let (inv, phi0) = setting(Kind::SoOdd, 3).unwrap();
        let f = hecke_factor(&inv, &phi0, &datum(1, 0), "triv").unwrap();
        assert_eq!(f, HeckeFactor::unequal(5, 1, h(2), h(1)));
        assert_eq!(f, table_factor(Kind::SoOdd, 3, 2, 0));

        let (inv, phi0) = setting(Kind::Sp, 2).unwrap();
        let f = hecke_factor(&inv, &phi0, &datum(1, 0), "triv").unwrap();
        assert_eq!(f, HeckeFactor::unequal(5, 1, h(1), h(1)));
        assert_eq!(f, table_factor(Kind::Sp, 2, 1, 0));
    }

    #[test]
    fn normalization() {
        let (inv, phi0) = setting(Kind::SoOdd, 3).unwrap();
        let f = hecke_factor(&inv, &phi0, &datum(0, 0), "triv").unwrap();
        assert_eq!(f, HeckeFactor::unequal(7, 1, h(1), h(0)));
        assert_eq!(
            sp_normalization(f),
            HeckeFactor::equal(RootFamily::Sp, 6, 1)
        );
        let gl = HeckeFactor::equal(RootFamily::GL, 3, 2);
        assert_eq!(sp_normalization(gl), gl);
        let g = hecke_factor(&inv, &phi0, &datum(1, 0), "triv").unwrap();
        assert_eq!(sp_normalization(g), g);
    }

    #[test]
    fn so_odd_rank_two_table() {
        let rows = specialize(Kind::SoOdd, 2).unwrap();
        let pairs: Vec<(u32, u32, Bucket)> = rows
            .iter()
            .map(|r| (r.d_plus, r.d_minus, r.bucket))
            .collect();
        assert_eq!(
            pairs,
            vec![
                (0, 0, Bucket::Plus),
                (0, 2, Bucket::Minus),
                (2, 0, Bucket::Minus),
                (2, 2, Bucket::Plus)
            ]
        );
        assert_eq!(
            table_factor(Kind::SoOdd, 2, 2, 0),
            HeckeFactor::unequal(3, 1, h(2), h(1))
        );
    }

    #[test]
    fn sp_rank_two_table() {
        let rows = specialize(Kind::Sp, 2).unwrap();
        let pairs: Vec<(u32, u32, u32)> =
            rows.iter().map(|r| (r.d_plus, r.d_minus, r.mult)).collect();
        assert_eq!(pairs, vec![(0, 1, 2), (1, 0, 2), (1, 4, 2), (4, 1, 2)]);
    }

    #[test]
    fn unitary_rank_five_table() {
        let rows = specialize(Kind::Unitary, 5).unwrap();
        let mut pairs: Vec<(u32, u32)> = rows.iter().map(|r| (r.d_plus, r.d_minus)).collect();
        pairs.dedup();
        assert_eq!(pairs, vec![(1, 0), (1, 2)]);
        assert_eq!(
            table_factor(Kind::Unitary, 4, 0, 0),
            HeckeFactor::unequal(5, 1, HalfInt::from_twice(1), HalfInt::from_twice(1))
        );
    }

    #[test]
    fn epsilon_table() {
        assert_eq!(epsilon_multiplicity(4, 4, Sign::Plus), 4);
        assert_eq!(epsilon_multiplicity(0, 0, Sign::Plus), 1);
        assert_eq!(epsilon_multiplicity(4, 0, Sign::Plus), 0);
        assert_eq!(epsilon_multiplicity(0, 0, Sign::Minus), 0);
        assert_eq!(epsilon_multiplicity(4, 0, Sign::Minus), 2);
        assert_eq!(epsilon_multiplicity(1, 4, Sign::Minus), 2);
    }

    #[test]
    fn derived_examples() {
        assert_eq!(
            derived_multiplicity(Kind::SoOdd, 2, 2, 0, Some(Sign::Minus)).unwrap(),
            1
        );
        assert_eq!(derived_multiplicity(Kind::Sp, 2, 1, 0, None).unwrap(), 2);
        assert_eq!(
            derived_multiplicity(Kind::OEven, 2, 0, 0, Some(Sign::Plus)).unwrap(),
            1
        );
    }

    #[test]
    fn reductions() {
        let (inv, phi0) = nsd_setting(3, 2);
        assert_eq!(
            unipotent_reduction(&inv, &phi0).unwrap(),
            vec![Reduction {
                orbit: "tau".into(),
                family: ReducedFamily::GL,
                size: 3,
                degree: 2
            }]
        );
        let (inv, phi0) = setting(Kind::Sp, 2).unwrap();
        let r = &unipotent_reduction(&inv, &phi0).unwrap()[0];
        assert_eq!((r.family, r.size), (ReducedFamily::Sp, 4));

        let inv = Inventory::new(&[self_dual_spec(
            "rho_os",
            2,
            3,
            TypeTag::Orthogonal,
            TypeTag::Symplectic,
        )])
        .unwrap();
        let g = DualGroup::new(Family::Orthogonal, 8).unwrap();
        let phi0 = build_ld_parameter(
            &inv,
            &[LDSummand::new(point("rho_os", Sign::Plus), 1, 4)],
            g,
        )
        .unwrap();
        let r = &unipotent_reduction(&inv, &phi0).unwrap()[0];
        assert_eq!((r.family, r.size, r.degree), (ReducedFamily::U, 4, 3));
    }
}
