//! Inertial classes of irreducible Weil-group representations.
//!
//! A class is input data: its base point (the normed representation) is the
//! point with `f = 1`, and every other point of the orbit under unramified
//! twist is addressed by its invariant `f`, an exact [`UnitMonomial`].

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::num::{format_ratio, parse_ratio, HalfInt, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    Orthogonal,
    Symplectic,
    UnitaryL,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// The dual group `^LG` seen through `ι: ^LG -> GL_N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DualGroup {
    pub family: Family,
    pub dim: u32,
    #[serde(default = "plus")]
    pub twist: Sign,
}

fn plus() -> Sign {
    Sign::Plus
}

impl DualGroup {
    pub fn new(family: Family, dim: u32) -> Result<DualGroup> {
        if dim == 0 {
            return Err(Error::InvalidClass(
                "ambient dimension must be positive".into(),
            ));
        }
        Self::tail(family, dim)
    }

    /// Like [`DualGroup::new`] but allows dimension 0, used for the tail
    /// factor of a Levi subgroup.
    pub fn tail(family: Family, dim: u32) -> Result<DualGroup> {
        if family == Family::Symplectic && dim % 2 == 1 {
            return Err(Error::InvalidClass(format!(
                "symplectic ambient of odd dimension {dim}"
            )));
        }
        Ok(DualGroup {
            family,
            dim,
            twist: Sign::Plus,
        })
    }

    pub fn validate(&self) -> Result<()> {
        DualGroup::new(self.family, self.dim).map(|_| ())
    }

    /// Semisimple rank of the group whose dual is this one.
    pub fn rank(&self) -> u32 {
        self.dim / 2
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TypeTag {
    Orthogonal,
    Symplectic,
    ConjugateOrthogonal,
    ConjugateSymplectic,
}

impl TypeTag {
    pub fn is_conjugate(self) -> bool {
        matches!(
            self,
            TypeTag::ConjugateOrthogonal | TypeTag::ConjugateSymplectic
        )
    }

    /// Whether a point carrying this tag is of the type of `g`.
    pub fn matches(self, g: &DualGroup) -> Result<bool> {
        let mismatch = || Error::TypeMismatch {
            tag: format!("{self:?}"),
            family: g.family.to_string(),
        };
        match g.family {
            Family::Orthogonal | Family::Symplectic if self.is_conjugate() => Err(mismatch()),
            Family::UnitaryL if !self.is_conjugate() => Err(mismatch()),
            Family::Orthogonal => Ok(self == TypeTag::Orthogonal),
            Family::Symplectic => Ok(self == TypeTag::Symplectic),
            Family::UnitaryL => Ok(if g.dim.is_multiple_of(2) {
                self == TypeTag::ConjugateSymplectic
            } else {
                self == TypeTag::ConjugateOrthogonal
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Duality {
    NotSelfDual {
        partner: String,
    },
    SelfDual {
        type_plus: TypeTag,
        type_minus: TypeTag,
    },
}

/// Inventory-file description of a class, before validation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassSpec {
    pub label: String,
    pub dim: i64,
    pub torsion: i64,
    pub duality: Duality,
    #[serde(default = "trivial_det")]
    pub det_base: String,
}

fn trivial_det() -> String {
    "1".to_string()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct InertialClass {
    pub label: String,
    pub dim: u32,
    pub torsion: u32,
    pub duality: Duality,
    pub det_base: String,
}

impl InertialClass {
    pub fn is_self_dual(&self) -> bool {
        matches!(self.duality, Duality::SelfDual { .. })
    }

    pub fn to_spec(&self) -> ClassSpec {
        ClassSpec {
            label: self.label.clone(),
            dim: self.dim.into(),
            torsion: self.torsion.into(),
            duality: self.duality.clone(),
            det_base: self.det_base.clone(),
        }
    }
}

pub fn make_inertial_class(spec: &ClassSpec) -> Result<InertialClass> {
    if spec.label.is_empty() {
        return Err(Error::InvalidClass("empty label".into()));
    }
    let positive = |v: i64, what: &str| -> Result<u32> {
        u32::try_from(v).ok().filter(|&v| v >= 1).ok_or_else(|| {
            Error::InvalidClass(format!("{}: {what} must be positive, got {v}", spec.label))
        })
    };
    let dim = positive(spec.dim, "dim")?;
    let torsion = positive(spec.torsion, "torsion")?;
    match &spec.duality {
        Duality::NotSelfDual { partner } if partner.is_empty() => {
            return Err(Error::InvalidClass(format!(
                "{}: missing partner label",
                spec.label
            )));
        }
        Duality::NotSelfDual { partner } if *partner == spec.label => {
            return Err(Error::InvalidClass(format!(
                "{}: a non-self-dual class cannot be its own partner",
                spec.label
            )));
        }
        Duality::SelfDual {
            type_plus,
            type_minus,
        } => {
            if type_plus.is_conjugate() != type_minus.is_conjugate() {
                return Err(Error::InvalidClass(format!(
                    "{}: mixes conjugate and plain type tags",
                    spec.label
                )));
            }
            for tag in [type_plus, type_minus] {
                if *tag == TypeTag::Symplectic && dim % 2 == 1 {
                    return Err(Error::InvalidClass(format!(
                        "{}: symplectic of odd dimension",
                        spec.label
                    )));
                }
            }
        }
        _ => {}
    }
    Ok(InertialClass {
        label: spec.label.clone(),
        dim,
        torsion,
        duality: spec.duality.clone(),
        det_base: spec.det_base.clone(),
    })
}

/// A registered set of classes with consistent partner labels.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Inventory {
    classes: BTreeMap<String, InertialClass>,
}

impl Inventory {
    pub fn new(specs: &[ClassSpec]) -> Result<Inventory> {
        let mut classes = BTreeMap::new();
        for spec in specs {
            let c = make_inertial_class(spec)?;
            if classes.insert(c.label.clone(), c).is_some() {
                return Err(Error::InvalidClass(format!(
                    "duplicate label {}",
                    spec.label
                )));
            }
        }
        for c in classes.values() {
            if let Duality::NotSelfDual { partner } = &c.duality {
                let p = classes
                    .get(partner)
                    .ok_or_else(|| Error::UnknownClass(partner.clone()))?;
                match &p.duality {
                    Duality::NotSelfDual { partner: back }
                        if *back == c.label && p.dim == c.dim => {}
                    _ => {
                        return Err(Error::InvalidClass(format!(
                            "{} and {} are not mutual partners of equal dimension",
                            c.label, partner
                        )))
                    }
                }
            }
        }
        Ok(Inventory { classes })
    }

    pub fn from_json(text: &str) -> Result<Inventory> {
        let specs: Vec<ClassSpec> =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Inventory::new(&specs)
    }

    pub fn get(&self, label: &str) -> Result<&InertialClass> {
        self.classes
            .get(label)
            .ok_or_else(|| Error::UnknownClass(label.to_string()))
    }

    pub fn classes(&self) -> impl Iterator<Item = &InertialClass> {
        self.classes.values()
    }

    pub fn specs(&self) -> Vec<ClassSpec> {
        self.classes.values().map(InertialClass::to_spec).collect()
    }

    /// Label of the dual class: itself when self-dual, the partner otherwise.
    pub fn dual_label<'a>(&'a self, label: &'a str) -> Result<&'a str> {
        match &self.get(label)?.duality {
            Duality::SelfDual { .. } => Ok(label),
            Duality::NotSelfDual { partner } => Ok(partner.as_str()),
        }
    }

    /// Representative label of the orbit `{ρ, ρ^∨}` of classes.
    pub fn orbit_label<'a>(&'a self, label: &'a str) -> Result<&'a str> {
        let d = self.dual_label(label)?;
        Ok(if d < label { d } else { label })
    }

    /// A self-dual class violates the normed convention for `g` when its base
    /// point is not of type `g` although the `f = -1` point is.
    pub fn violates_normed_convention(&self, label: &str, g: &DualGroup) -> Result<bool> {
        match self.get(label)?.duality {
            Duality::SelfDual {
                type_plus,
                type_minus,
            } => Ok(!type_plus.matches(g)? && type_minus.matches(g)?),
            Duality::NotSelfDual { .. } => Ok(false),
        }
    }
}

/// Exact value `c · q^e` with `c = exp(2πi·root)` a root of unity and `e` a
/// half-integer. `root` is kept reduced in `[0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UnitMonomial {
    root: Ratio<i64>,
    qexp: HalfInt,
}

fn reduce_root(r: Ratio<i64>) -> Ratio<i64> {
    let n = r.numer().mod_floor(r.denom());
    Ratio::new(n, *r.denom())
}

impl UnitMonomial {
    pub fn new(root: Ratio<i64>, qexp: HalfInt) -> UnitMonomial {
        UnitMonomial {
            root: reduce_root(root),
            qexp,
        }
    }

    pub fn one() -> UnitMonomial {
        UnitMonomial::new(Ratio::zero(), HalfInt::ZERO)
    }

    pub fn minus_one() -> UnitMonomial {
        UnitMonomial::new(Ratio::new(1, 2), HalfInt::ZERO)
    }

    /// The primitive 4th root of unity `i`.
    pub fn i() -> UnitMonomial {
        UnitMonomial::new(Ratio::new(1, 4), HalfInt::ZERO)
    }

    pub fn is_one(&self) -> bool {
        self.root.is_zero() && self.qexp == HalfInt::ZERO
    }

    pub fn from_sign(s: Sign) -> UnitMonomial {
        match s {
            Sign::Plus => UnitMonomial::one(),
            Sign::Minus => UnitMonomial::minus_one(),
        }
    }

    /// `q^e` for a half-integer `e`.
    pub fn q_pow(e: HalfInt) -> UnitMonomial {
        UnitMonomial::new(Ratio::zero(), e)
    }

    pub fn root(&self) -> Ratio<i64> {
        self.root
    }

    pub fn qexp(&self) -> HalfInt {
        self.qexp
    }

    pub fn inv(&self) -> UnitMonomial {
        UnitMonomial::new(-self.root, -self.qexp)
    }

    pub fn pow(&self, k: i64) -> UnitMonomial {
        UnitMonomial::new(self.root * Ratio::from_integer(k), self.qexp.scale(k))
    }

    /// `Some(±)` when the value is `±1`.
    pub fn as_sign(&self) -> Option<Sign> {
        if self.qexp != HalfInt::ZERO {
            None
        } else if self.root.is_zero() {
            Some(Sign::Plus)
        } else if self.root == Ratio::new(1, 2) {
            Some(Sign::Minus)
        } else {
            None
        }
    }

    /// Canonical member of `{x, x^{-1}}`.
    pub fn pair_rep(&self) -> UnitMonomial {
        let i = self.inv();
        if i < *self {
            i
        } else {
            *self
        }
    }
}

impl std::ops::Mul for UnitMonomial {
    type Output = UnitMonomial;
    fn mul(self, rhs: UnitMonomial) -> UnitMonomial {
        UnitMonomial::new(self.root + rhs.root, self.qexp + rhs.qexp)
    }
}

impl fmt::Display for UnitMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let unit = if self.root.is_zero() {
            String::new()
        } else if self.root == Ratio::new(1, 2) {
            "-".to_string()
        } else {
            format!("z({})", format_ratio(&self.root))
        };
        if self.qexp == HalfInt::ZERO {
            match unit.as_str() {
                "" => f.write_str("1"),
                "-" => f.write_str("-1"),
                u => f.write_str(u),
            }
        } else {
            write!(f, "{unit}q^{}", self.qexp)
        }
    }
}

#[derive(Serialize, Deserialize)]
struct MonomialJson {
    root: String,
    qexp: String,
}

impl Serialize for UnitMonomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MonomialJson {
            root: format_ratio(&self.root),
            qexp: self.qexp.to_string(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for UnitMonomial {
    fn deserialize<D: serde::Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<UnitMonomial, D::Error> {
        let j = MonomialJson::deserialize(d)?;
        let root = parse_ratio(&j.root).map_err(serde::de::Error::custom)?;
        let qexp: HalfInt = j.qexp.parse().map_err(serde::de::Error::custom)?;
        Ok(UnitMonomial::new(root, qexp))
    }
}

/// The point of the orbit of `class` with invariant `f`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct InertialPoint {
    pub class: String,
    #[serde(default = "UnitMonomial::one")]
    pub f: UnitMonomial,
}

impl fmt::Display for InertialPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.class, self.f)
    }
}

pub fn orbit_point(class: &InertialClass, f: UnitMonomial) -> InertialPoint {
    InertialPoint {
        class: class.label.clone(),
        f,
    }
}

pub fn is_self_dual_point(inv: &Inventory, p: &InertialPoint) -> Result<bool> {
    Ok(inv.get(&p.class)?.is_self_dual() && p.f.as_sign().is_some())
}

pub fn dual_point(inv: &Inventory, p: &InertialPoint) -> Result<InertialPoint> {
    Ok(InertialPoint {
        class: inv.dual_label(&p.class)?.to_string(),
        f: p.f.inv(),
    })
}

/// The type tag carried by a self-dual point.
pub fn point_tag(inv: &Inventory, p: &InertialPoint) -> Result<TypeTag> {
    match (&inv.get(&p.class)?.duality, p.f.as_sign()) {
        (Duality::SelfDual { type_plus, .. }, Some(Sign::Plus)) => Ok(*type_plus),
        (Duality::SelfDual { type_minus, .. }, Some(Sign::Minus)) => Ok(*type_minus),
        _ => Err(Error::NotSelfDual(p.to_string())),
    }
}

pub fn is_of_type(inv: &Inventory, p: &InertialPoint, g: &DualGroup) -> Result<bool> {
    point_tag(inv, p)?.matches(g)
}

/// Convenience for building specs in code and tests.
pub fn self_dual_spec(
    label: &str,
    dim: i64,
    torsion: i64,
    plus: TypeTag,
    minus: TypeTag,
) -> ClassSpec {
    ClassSpec {
        label: label.into(),
        dim,
        torsion,
        duality: Duality::SelfDual {
            type_plus: plus,
            type_minus: minus,
        },
        det_base: if dim % 2 == 0 && plus == TypeTag::Symplectic {
            "1".into()
        } else {
            format!("det_{label}")
        },
    }
}

pub fn non_self_dual_spec(label: &str, partner: &str, dim: i64, torsion: i64) -> ClassSpec {
    ClassSpec {
        label: label.into(),
        dim,
        torsion,
        duality: Duality::NotSelfDual {
            partner: partner.into(),
        },
        det_base: format!("det_{label}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use TypeTag::*;

    fn inv() -> Inventory {
        Inventory::new(&[
            self_dual_spec("triv", 1, 1, Orthogonal, Orthogonal),
            self_dual_spec("rho_mix", 2, 1, Orthogonal, Symplectic),
            non_self_dual_spec("chi", "chi_v", 1, 2),
            non_self_dual_spec("chi_v", "chi", 1, 2),
            self_dual_spec("one_E", 1, 1, ConjugateOrthogonal, ConjugateSymplectic),
        ])
        .unwrap()
    }

    #[test]
    fn class_validation() {
        assert!(make_inertial_class(&self_dual_spec("triv", 1, 1, Orthogonal, Orthogonal)).is_ok());
        assert!(
            make_inertial_class(&self_dual_spec("rho_mix", 2, 1, Orthogonal, Symplectic)).is_ok()
        );
        assert!(make_inertial_class(&self_dual_spec("bad", 0, 1, Orthogonal, Orthogonal)).is_err());
        assert!(make_inertial_class(&self_dual_spec("bad", 1, 0, Orthogonal, Orthogonal)).is_err());
        assert!(make_inertial_class(&non_self_dual_spec("bad", "", 1, 1)).is_err());
        assert!(Inventory::new(&[non_self_dual_spec("a", "b", 1, 1)]).is_err());
    }

    #[test]
    fn orbit_points_and_duals() {
        let inv = inv();
        let triv = inv.get("triv").unwrap();
        let base = orbit_point(triv, UnitMonomial::one());
        assert_eq!(dual_point(&inv, &base).unwrap(), base);
        let minus = orbit_point(triv, UnitMonomial::minus_one());
        assert_eq!(dual_point(&inv, &minus).unwrap(), minus);
        assert!(is_self_dual_point(&inv, &minus).unwrap());
        let pi = orbit_point(triv, UnitMonomial::i());
        assert!(!is_self_dual_point(&inv, &pi).unwrap());
        let d = dual_point(&inv, &pi).unwrap();
        assert_eq!(d.f, UnitMonomial::new(Ratio::new(3, 4), HalfInt::ZERO));
        assert_eq!(d.f * pi.f, UnitMonomial::one());
        let chi = orbit_point(
            inv.get("chi").unwrap(),
            UnitMonomial::q_pow(HalfInt::from_twice(1)),
        );
        let dchi = dual_point(&inv, &chi).unwrap();
        assert_eq!(dchi.class, "chi_v");
        assert_eq!(dual_point(&inv, &dchi).unwrap(), chi);
    }

    #[test]
    fn types() {
        let inv = inv();
        let sp = DualGroup::new(Family::Symplectic, 2).unwrap();
        let o = DualGroup::new(Family::Orthogonal, 3).unwrap();
        let p = InertialPoint {
            class: "triv".into(),
            f: UnitMonomial::one(),
        };
        assert!(!is_of_type(&inv, &p, &sp).unwrap());
        assert!(is_of_type(&inv, &p, &o).unwrap());
        let m = InertialPoint {
            class: "rho_mix".into(),
            f: UnitMonomial::minus_one(),
        };
        assert!(!is_of_type(&inv, &m, &o).unwrap());
        let u = InertialPoint {
            class: "one_E".into(),
            f: UnitMonomial::one(),
        };
        assert!(is_of_type(&inv, &u, &DualGroup::new(Family::UnitaryL, 3).unwrap()).unwrap());
        assert!(!is_of_type(&inv, &u, &DualGroup::new(Family::UnitaryL, 2).unwrap()).unwrap());
        assert!(is_of_type(&inv, &u, &o).is_err());
        let nsd = InertialPoint {
            class: "chi".into(),
            f: UnitMonomial::one(),
        };
        assert!(is_of_type(&inv, &nsd, &o).is_err());
    }

    #[test]
    fn monomial_json() {
        let m = UnitMonomial::new(Ratio::new(5, 4), HalfInt::from_twice(-3));
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"{"root":"1/4","qexp":"-3/2"}"#);
        assert_eq!(serde_json::from_str::<UnitMonomial>(&s).unwrap(), m);
    }
}
