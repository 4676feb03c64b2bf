//! Centralizers in products of complex classical groups, semisimple classes
//! attached to parameters, `(s, u, Ξ)` triples and an exact matrix
//! realization used as an oracle.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::{Matrix, Q};
use crate::num::{HalfInt, Sign};
use crate::params::{build_ld_parameter, summand_type, LDParameter, LDSummand, SignCharacter};
use crate::support::{orbits, OrbitKind};
use crate::weil::{is_of_type, DualGroup, Family, InertialPoint, Inventory, UnitMonomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum GroupFamily {
    GL,
    Sp,
    O,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GroupFactor {
    pub family: GroupFamily,
    pub size: u32,
    pub block: String,
}

/// A product of classical groups, one factor per labelled block, sorted by
/// label. Factors of size 0 are dropped.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct ClassicalGroup {
    pub factors: Vec<GroupFactor>,
}

impl ClassicalGroup {
    fn from_factors(mut factors: Vec<GroupFactor>) -> ClassicalGroup {
        factors.retain(|f| f.size > 0);
        factors.sort_by(|a, b| a.block.cmp(&b.block).then(a.cmp(b)));
        ClassicalGroup { factors }
    }
}

impl fmt::Display for ClassicalGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, g) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" × ")?;
            }
            write!(f, "{:?}_{}[{}]", g.family, g.size, g.block)?;
        }
        Ok(())
    }
}

/// Orbit block of a point and its value relative to the block's
/// representative class: partner-class points `(c′, y)` map to `y⁻¹`.
pub fn block_value(inv: &Inventory, p: &InertialPoint) -> Result<(String, UnitMonomial)> {
    let rep = inv.orbit_label(&p.class)?;
    let x = if rep == p.class { p.f } else { p.f.inv() };
    Ok((rep.to_string(), x))
}

fn is_self_dual_class(inv: &Inventory, label: &str) -> Result<bool> {
    Ok(inv.get(label)?.is_self_dual())
}

fn block_label(block: &str, x: &UnitMonomial) -> String {
    format!("{block}@{x}")
}

/// Canonical representative of a summand up to duality, with its block
/// label, or `None` for the non-canonical member of a dual pair.
fn canonical_irreducible(inv: &Inventory, s: &LDSummand) -> Result<Option<String>> {
    let (block, x) = block_value(inv, &s.point)?;
    if is_self_dual_class(inv, &s.point.class)? {
        if x != x.pair_rep() {
            return Ok(None);
        }
    } else if block != s.point.class {
        return Ok(None);
    }
    let mut label = block_label(&block, &x);
    if s.a > 1 {
        label.push_str(&format!("⊗sp({})", s.a));
    }
    Ok(Some(label))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ImageCentralizer {
    pub group: ClassicalGroup,
    /// The centralizer inside `GL_N`: `GL_m` per self-dual irreducible,
    /// `GL_m × GL_m` per dual pair.
    #[serde(rename = "glLevel")]
    pub gl_level: ClassicalGroup,
    /// Whether passing to the connected dual group imposes `det = 1`.
    #[serde(rename = "detRestriction")]
    pub det_restriction: bool,
}

pub fn centralizer_of_image(inv: &Inventory, phi: &LDParameter) -> Result<ImageCentralizer> {
    let mut group = Vec::new();
    let mut gl = Vec::new();
    for s in phi.summands() {
        let Some(label) = canonical_irreducible(inv, s)? else {
            continue;
        };
        let self_dual = crate::weil::is_self_dual_point(inv, &s.point)?;
        let family = if !self_dual {
            GroupFamily::GL
        } else if summand_type(inv, &s.point, s.a, phi.ambient())? {
            GroupFamily::O
        } else {
            GroupFamily::Sp
        };
        group.push(GroupFactor {
            family,
            size: s.mult,
            block: label.clone(),
        });
        gl.push(GroupFactor {
            family: GroupFamily::GL,
            size: s.mult,
            block: label.clone(),
        });
        if !self_dual {
            gl.push(GroupFactor {
                family: GroupFamily::GL,
                size: s.mult,
                block: format!("{label}∨"),
            });
        }
    }
    Ok(ImageCentralizer {
        group: ClassicalGroup::from_factors(group),
        gl_level: ClassicalGroup::from_factors(gl),
        det_restriction: phi.ambient().family == Family::Orthogonal,
    })
}

/// Eigenvalue multiset of a semisimple element of `C(Im φ₀)`, keyed by
/// orbit block and value relative to the block representative.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SemisimpleClass {
    pub entries: BTreeMap<(String, UnitMonomial), u32>,
}

impl SemisimpleClass {
    pub fn add(&mut self, block: &str, value: UnitMonomial, mult: u32) {
        if mult > 0 {
            *self.entries.entry((block.to_string(), value)).or_insert(0) += mult;
        }
    }

    pub fn mult(&self, block: &str, value: &UnitMonomial) -> u32 {
        self.entries
            .get(&(block.to_string(), *value))
            .copied()
            .unwrap_or(0)
    }

    pub fn block_total(&self, block: &str) -> u32 {
        self.entries
            .iter()
            .filter(|((b, _), _)| b == block)
            .map(|(_, m)| m)
            .sum()
    }

    pub fn is_identity(&self) -> bool {
        self.entries.keys().all(|(_, v)| v.is_one())
    }
}

#[derive(Serialize)]
struct EigenJson<'a> {
    block: &'a str,
    value: UnitMonomial,
    mult: u32,
}

impl Serialize for SemisimpleClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.entries.iter().map(|((block, value), mult)| EigenJson {
            block,
            value: *value,
            mult: *mult,
        }))
    }
}

/// `x·q^{(a-1)/2}, …, x·q^{-(a-1)/2}`.
pub fn ladder(x: UnitMonomial, a: u32) -> impl Iterator<Item = UnitMonomial> {
    (0..a).map(move |j| {
        x * UnitMonomial::q_pow(HalfInt::from_twice(i64::from(a) - 1 - 2 * i64::from(j)))
    })
}

/// The semisimple class `s_φ`: the eigenvalue ladders of every summand,
/// read in the blocks of the normed parameter. For parameters trivial on
/// `SL₂` these are the `f`-values.
pub fn s_phi(inv: &Inventory, phi: &LDParameter) -> Result<SemisimpleClass> {
    let mut s = SemisimpleClass::default();
    for sm in phi.summands() {
        let (block, x) = block_value(inv, &sm.point)?;
        if !is_self_dual_class(inv, &sm.point.class)? && block != sm.point.class {
            continue;
        }
        for v in ladder(x, sm.a) {
            s.add(&block, v, sm.mult);
        }
    }
    Ok(s)
}

/// The parameter trivial on `SL₂` obtained from `φ₀` by twisting its copies
/// of each block with the eigenvalues of `s`.
pub fn twist(inv: &Inventory, phi0: &LDParameter, s: &SemisimpleClass) -> Result<LDParameter> {
    let orbs = orbits(inv, phi0)?;
    for o in &orbs {
        if s.block_total(&o.label) != o.m {
            return Err(Error::NotCentralizing(format!(
                "block {} has {} eigenvalues, expected {}",
                o.label,
                s.block_total(&o.label),
                o.m
            )));
        }
    }
    let mut summands = Vec::new();
    for ((block, x), &mult) in &s.entries {
        if !orbs.iter().any(|o| o.label == *block) {
            return Err(Error::NotCentralizing(format!(
                "{block} is not a block of φ₀"
            )));
        }
        summands.push(LDSummand::new(
            InertialPoint {
                class: block.clone(),
                f: *x,
            },
            1,
            mult,
        ));
        if !is_self_dual_class(inv, block)? {
            let partner = inv.dual_label(block)?.to_string();
            summands.push(LDSummand::new(
                InertialPoint {
                    class: partner,
                    f: x.inv(),
                },
                1,
                mult,
            ));
        }
    }
    build_ld_parameter(inv, &summands, *phi0.ambient())
        .map_err(|e| Error::NotCentralizing(e.to_string()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SCentralizer {
    /// `C_{C(Im φ₀)}(s)`: each `±1`-eigenspace keeps the family of the
    /// enclosing factor.
    pub group: ClassicalGroup,
    /// The same computation with the family at `±1` read from the type of
    /// the point `f = ±1`; `None` when the twisted multiset is not a
    /// parameter.
    pub typed: Option<ClassicalGroup>,
    pub agree: bool,
    /// Total multiplicity of `-1` over self-dual blocks.
    #[serde(rename = "mMinusOne")]
    pub m_minus_one: u32,
}

fn family_of_type(of_type: bool) -> GroupFamily {
    if of_type {
        GroupFamily::O
    } else {
        GroupFamily::Sp
    }
}

pub fn centralizer_of_s(
    inv: &Inventory,
    phi0: &LDParameter,
    s: &SemisimpleClass,
) -> Result<SCentralizer> {
    let orbs = orbits(inv, phi0)?;
    let mut naive = Vec::new();
    let mut typed = Vec::new();
    let mut typed_ok = true;
    let mut m_minus_one = 0;
    for o in &orbs {
        if s.block_total(&o.label) != o.m {
            return Err(Error::NotCentralizing(format!(
                "block {} has {} eigenvalues, expected {}",
                o.label,
                s.block_total(&o.label),
                o.m
            )));
        }
        let values: Vec<(UnitMonomial, u32)> = s
            .entries
            .iter()
            .filter(|((b, _), _)| *b == o.label)
            .map(|((_, v), m)| (*v, *m))
            .collect();
        match o.kind {
            OrbitKind::NotSelfDual { .. } => {
                for (x, m) in values {
                    naive.push(GroupFactor {
                        family: GroupFamily::GL,
                        size: m,
                        block: block_label(&o.label, &x),
                    });
                    typed.push(GroupFactor {
                        family: GroupFamily::GL,
                        size: m,
                        block: block_label(&o.label, &x),
                    });
                }
            }
            OrbitKind::SelfDual {
                plus_of_type,
                minus_of_type,
            } => {
                let ambient = family_of_type(plus_of_type);
                for (x, m) in values {
                    if s.mult(&o.label, &x.inv()) != m {
                        return Err(Error::NotCentralizing(format!(
                            "{}: {x} and its inverse differ in multiplicity",
                            o.label
                        )));
                    }
                    let label = block_label(&o.label, &x);
                    match x.as_sign() {
                        None if x == x.pair_rep() => {
                            naive.push(GroupFactor {
                                family: GroupFamily::GL,
                                size: m,
                                block: label.clone(),
                            });
                            typed.push(GroupFactor {
                                family: GroupFamily::GL,
                                size: m,
                                block: label,
                            });
                        }
                        None => {}
                        Some(sign) => {
                            if ambient == GroupFamily::Sp && m % 2 == 1 {
                                return Err(Error::NotCentralizing(format!(
                                    "{label}: odd multiplicity in a symplectic factor"
                                )));
                            }
                            let point_type = if sign == Sign::Plus {
                                plus_of_type
                            } else {
                                minus_of_type
                            };
                            let fam = family_of_type(point_type);
                            if sign == Sign::Minus {
                                m_minus_one += m;
                            }
                            typed_ok &= fam != GroupFamily::Sp || m % 2 == 0;
                            naive.push(GroupFactor {
                                family: ambient,
                                size: m,
                                block: label.clone(),
                            });
                            typed.push(GroupFactor {
                                family: fam,
                                size: m,
                                block: label,
                            });
                        }
                    }
                }
            }
        }
    }
    let group = ClassicalGroup::from_factors(naive);
    let typed = typed_ok.then(|| ClassicalGroup::from_factors(typed));
    let agree = typed.as_ref() == Some(&group);
    Ok(SCentralizer {
        group,
        typed,
        agree,
        m_minus_one,
    })
}

/// Orbits of `φ₀` whose points `f = ±1` have different types.
pub fn mixed_orbits(inv: &Inventory, phi0: &LDParameter) -> Result<Vec<String>> {
    Ok(orbits(inv, phi0)?
        .into_iter()
        .filter(|o| matches!(o.kind, OrbitKind::SelfDual { plus_of_type, minus_of_type } if plus_of_type != minus_of_type))
        .map(|o| o.label)
        .collect())
}

/// `C′(s)`: the centralizer of `s`, except that on mixed orbits the
/// eigenspace at `1` is orthogonal and the one at `-1` symplectic.
pub fn c_prime(inv: &Inventory, phi0: &LDParameter, s: &SemisimpleClass) -> Result<ClassicalGroup> {
    let base = centralizer_of_s(inv, phi0, s)?;
    let mixed = mixed_orbits(inv, phi0)?;
    let factors = base
        .group
        .factors
        .into_iter()
        .map(|mut f| {
            let (block, x) = f
                .block
                .split_once('@')
                .map(|(b, x)| (b.to_string(), x.to_string()))
                .unwrap_or_default();
            if mixed.contains(&block) {
                match x.as_str() {
                    "1" => f.family = GroupFamily::O,
                    "-1" => f.family = GroupFamily::Sp,
                    _ => {}
                }
            }
            f
        })
        .collect();
    Ok(ClassicalGroup::from_factors(factors))
}

/// `(s, u, Ξ)` with `u` recorded as one partition per eigenvalue center.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Triple {
    pub ambient: DualGroup,
    /// `C(Im φ₀)` for the normed parameter of the orbit, when that multiset
    /// is itself a parameter.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<ClassicalGroup>,
    #[serde(rename = "eigenvalues")]
    pub s: SemisimpleClass,
    #[serde(serialize_with = "serialize_partitions")]
    pub partitions: BTreeMap<(String, UnitMonomial), Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub xi: Option<SignCharacter>,
}

fn serialize_partitions<S: Serializer>(
    p: &BTreeMap<(String, UnitMonomial), Vec<u32>>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_map(p.iter().map(|((b, x), parts)| (block_label(b, x), parts)))
}

/// The parameter trivial on `SL₂` with all `f = 1` whose blocks carry the
/// same number of copies as `φ`.
pub fn normed_parameter(inv: &Inventory, phi: &LDParameter) -> Result<LDParameter> {
    let mut counts: BTreeMap<String, u32> = BTreeMap::new();
    for sm in phi.summands() {
        let (block, _) = block_value(inv, &sm.point)?;
        if is_self_dual_class(inv, &sm.point.class)? || block == sm.point.class {
            *counts.entry(block).or_insert(0) += sm.a * sm.mult;
        }
    }
    let mut summands = Vec::new();
    for (block, m) in counts {
        if !is_self_dual_class(inv, &block)? {
            let partner = inv.dual_label(&block)?.to_string();
            summands.push(LDSummand::new(
                InertialPoint {
                    class: partner,
                    f: UnitMonomial::one(),
                },
                1,
                m,
            ));
        }
        summands.push(LDSummand::new(
            InertialPoint {
                class: block,
                f: UnitMonomial::one(),
            },
            1,
            m,
        ));
    }
    build_ld_parameter(inv, &summands, *phi.ambient())
}

pub fn parameter_to_triple(inv: &Inventory, phi: &LDParameter) -> Result<Triple> {
    let group = normed_parameter(inv, phi)
        .and_then(|p0| centralizer_of_image(inv, &p0))
        .ok()
        .map(|c| c.group);
    let s = s_phi(inv, phi)?;
    let mut partitions: BTreeMap<(String, UnitMonomial), Vec<u32>> = BTreeMap::new();
    for sm in phi.summands() {
        if canonical_irreducible(inv, sm)?.is_none() {
            continue;
        }
        let key = block_value(inv, &sm.point)?;
        partitions
            .entry(key)
            .or_default()
            .extend(std::iter::repeat_n(sm.a, sm.mult as usize));
    }
    for parts in partitions.values_mut() {
        parts.sort_unstable_by(|a, b| b.cmp(a));
    }
    let t = Triple {
        ambient: *phi.ambient(),
        group,
        s,
        partitions,
        xi: None,
    };
    check_scaling(inv, &t, phi)?;
    Ok(t)
}

fn check_scaling(inv: &Inventory, t: &Triple, phi: &LDParameter) -> Result<()> {
    let expected = s_phi(inv, phi)?;
    if expected != t.s {
        return Err(Error::QScaling(
            "eigenvalues of s are not the union of the ladders of u".into(),
        ));
    }
    Ok(())
}

pub fn triple_to_parameter(inv: &Inventory, t: &Triple) -> Result<LDParameter> {
    let mut summands = Vec::new();
    for ((block, x), parts) in &t.partitions {
        let self_dual_class = is_self_dual_class(inv, block)?;
        for &a in parts {
            summands.push(LDSummand::new(
                InertialPoint {
                    class: block.clone(),
                    f: *x,
                },
                a,
                1,
            ));
            if !self_dual_class {
                summands.push(LDSummand::new(
                    InertialPoint {
                        class: inv.dual_label(block)?.to_string(),
                        f: x.inv(),
                    },
                    a,
                    1,
                ));
            } else if x.as_sign().is_none() {
                summands.push(LDSummand::new(
                    InertialPoint {
                        class: block.clone(),
                        f: x.inv(),
                    },
                    a,
                    1,
                ));
            }
        }
    }
    let phi = build_ld_parameter(inv, &summands, t.ambient)?;
    check_scaling(inv, t, &phi)?;
    Ok(phi)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TripleComponentGroup {
    /// One `ℤ/2` generator per distinct part of the relevant parity in each
    /// orthogonal-type or symplectic-type eigenspace.
    pub generators: Vec<String>,
    /// Rank after imposing `det = 1`.
    #[serde(rename = "detOneRank")]
    pub det_one_rank: u32,
}

impl TripleComponentGroup {
    pub fn order(&self) -> u64 {
        1u64 << self.generators.len()
    }
}

pub fn component_group_of_triple(inv: &Inventory, t: &Triple) -> Result<TripleComponentGroup> {
    let ambient = &t.ambient;
    let mut generators = Vec::new();
    let mut odd_det = false;
    for ((block, x), parts) in &t.partitions {
        let p = InertialPoint {
            class: block.clone(),
            f: *x,
        };
        if !crate::weil::is_self_dual_point(inv, &p)? {
            continue;
        }
        let of_type = is_of_type(inv, &p, ambient)?;
        let k = inv.get(block)?.dim;
        let mut distinct = parts.clone();
        distinct.dedup();
        for a in distinct {
            // a part gives a Z/2 exactly when the summand it describes is of type
            if of_type ^ (a % 2 == 0) {
                generators.push(format!("{}⊗sp({a})", block_label(block, x)));
                odd_det |= (k * a) % 2 == 1;
            }
        }
    }
    let n = generators.len() as u32;
    let det_one_rank = if ambient.family == Family::Orthogonal && odd_det {
        n - 1
    } else {
        n
    };
    Ok(TripleComponentGroup {
        generators,
        det_one_rank,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GramKind {
    Symmetric,
    Alternating,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    pub s: Matrix,
    pub u: Matrix,
    pub gram: Matrix,
    pub gram_kind: GramKind,
    /// `s u s⁻¹ = u^q`.
    pub scaling_holds: bool,
    /// Both `s` and `u` preserve the form.
    pub form_preserved: bool,
}

impl Realization {
    pub fn passes(&self) -> bool {
        self.scaling_holds && self.form_preserved
    }
}

pub const MATRIX_DIM_CAP: u32 = 12;

fn standard_symplectic(k: usize) -> Matrix {
    let mut j = Matrix::zero(k);
    for i in 0..k / 2 {
        j.set(i, k - 1 - i, Q::one());
        j.set(k - 1 - i, i, -Q::one());
    }
    j
}

/// Form on `sp(a)` with antidiagonal entries `(-1)^i`; symmetric exactly
/// when `a` is odd.
fn sl2_form(a: usize) -> Matrix {
    let mut b = Matrix::zero(a);
    for i in 0..a {
        b.set(i, a - 1 - i, if i % 2 == 0 { Q::one() } else { -Q::one() });
    }
    b
}

/// Realizes `s`, `u` and the invariant form of a parameter over exact
/// rationals at `q = 4`, for points with `f = ±1` and orthogonal or
/// symplectic ambients.
pub fn realize_matrices(inv: &Inventory, phi: &LDParameter) -> Result<Realization> {
    let g = phi.ambient();
    if g.dim > MATRIX_DIM_CAP {
        return Err(Error::CapExceeded {
            what: "ambient dimension",
            value: g.dim,
            cap: MATRIX_DIM_CAP,
        });
    }
    if g.family == Family::UnitaryL {
        return Err(Error::Unsupported(
            "matrix realization needs an orthogonal or symplectic ambient".into(),
        ));
    }
    const Q_VALUE: u32 = 4;
    const SQRT_Q: i128 = 2;
    let (mut ss, mut us, mut gs) = (Vec::new(), Vec::new(), Vec::new());
    for sm in phi.summands() {
        let sign = sm
            .point
            .f
            .as_sign()
            .ok_or_else(|| Error::Unsupported(format!("{}: f must be ±1", sm.point)))?;
        if !summand_type(inv, &sm.point, sm.a, g)? {
            return Err(Error::Unsupported(format!(
                "{sm} is not of the ambient type"
            )));
        }
        let k = inv.get(&sm.point.class)?.dim as usize;
        let a = sm.a as usize;
        let of_type = is_of_type(inv, &sm.point, g)?;
        let point_orthogonal = of_type == (g.family == Family::Orthogonal);
        let j_rho = if point_orthogonal {
            Matrix::identity(k)
        } else {
            standard_symplectic(k)
        };
        let f = Q::from_integer(sign.as_i32().into());
        let diag: Vec<Q> = (0..a)
            .map(|j| {
                let e = a as i32 - 1 - 2 * j as i32;
                f * if e >= 0 {
                    Q::from_integer(SQRT_Q.pow(e as u32))
                } else {
                    Q::new(1, SQRT_Q.pow((-e) as u32))
                }
            })
            .collect();
        let mut nil = Matrix::zero(a);
        for i in 0..a.saturating_sub(1) {
            nil.set(i, i + 1, Q::one());
        }
        let s_block = Matrix::diagonal(&diag).kron(&Matrix::identity(k));
        let u_block = nil.exp_nilpotent().kron(&Matrix::identity(k));
        let g_block = sl2_form(a).kron(&j_rho);
        for _ in 0..sm.mult {
            ss.push(s_block.clone());
            us.push(u_block.clone());
            gs.push(g_block.clone());
        }
    }
    let (s, u, gram) = (
        Matrix::direct_sum(&ss),
        Matrix::direct_sum(&us),
        Matrix::direct_sum(&gs),
    );
    let gram_kind = if gram.is_symmetric() {
        GramKind::Symmetric
    } else if gram.is_alternating() {
        GramKind::Alternating
    } else {
        return Err(Error::Unsupported(
            "form is neither symmetric nor alternating".into(),
        ));
    };
    let scaling_holds = &(&s * &u) * &s.diagonal_inverse() == u.pow(Q_VALUE);
    let preserves = |m: &Matrix| &(&m.transpose() * &gram) * m == gram;
    let form_preserved = preserves(&s) && preserves(&u);
    Ok(Realization {
        s,
        u,
        gram,
        gram_kind,
        scaling_holds,
        form_preserved,
    })
}
