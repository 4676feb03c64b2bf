//! Verification suites. Each suite checks closed forms or structural claims
//! against an independent enumeration and reports one case per input.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::centralizer::{
    c_prime, centralizer_of_image, centralizer_of_s, component_group_of_triple,
    parameter_to_triple, realize_matrices, triple_to_parameter, twist, SemisimpleClass,
    MATRIX_DIM_CAP,
};
use crate::corpus::{
    discrete_corpus, normed_corpus, point, standard_ambients, standard_inventory,
    supercuspidal_corpus, unitary_inventory,
};
use crate::error::{Error, Result};
use crate::hecke::{
    derived_multiplicity, derived_table, epsilon_multiplicity, hecke_descriptor, hecke_factor,
    specialize, table_factor, Bucket, Kind,
};
use crate::num::{HalfInt, Sign};
use crate::params::{
    alternating_characters, brute_force_alternating, brute_force_supercuspidals,
    build_ld_parameter, component_group, count_supercuspidals, type_counts, LDParameter, LDSummand,
};
use crate::report::{Case, Report};
use crate::support::{cuspidal_pairs, orbits, supports, Orbit, OrbitKind, SupportDatum};
use crate::weil::{DualGroup, Family, Inventory, UnitMonomial};
use crate::weyl::{
    decoration_assignments, levi_weyl_is_strict, orbit_stabilizers_in, orbit_weyl_is_strict,
    relative_weyl, standard_levis, weyl_group, LeviNormalizer, WEYL_RANK_CAP,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    /// Closed-form supercuspidal counts against brute force.
    ScCount,
    /// Parity of `L_S`, odd unequal-parameter ranks and injectivity of
    /// `(S, ε)` on normed corpora.
    SupportInjectivity,
    /// Descriptors factor over orbits.
    HeckeProduct,
    /// The `so-odd` table against the enumeration.
    SoOddTable,
    /// `ε±` multiplicities in the `sp` and `o-even` settings.
    EpsilonMult,
    /// The unitary table against the enumeration.
    UnitaryTable,
    /// Exact matrix realizations and triple round trips.
    MatrixOracle,
    /// `W(M) = W⁰(M)` characterization.
    RelativeWeyl,
    /// `W(M, O) = W⁰(M, O)` characterization and the semidirect product.
    OrbitStabilizer,
    /// Centralizer descriptors and the type condition.
    CentralizerType,
}

impl Suite {
    pub fn all() -> [Suite; 10] {
        use Suite::*;
        [
            ScCount,
            SupportInjectivity,
            HeckeProduct,
            SoOddTable,
            EpsilonMult,
            UnitaryTable,
            MatrixOracle,
            RelativeWeyl,
            OrbitStabilizer,
            CentralizerType,
        ]
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::ScCount => "sc-count",
            Suite::SupportInjectivity => "support-injectivity",
            Suite::HeckeProduct => "hecke-product",
            Suite::SoOddTable => "so-odd-table",
            Suite::EpsilonMult => "epsilon-mult",
            Suite::UnitaryTable => "unitary-table",
            Suite::MatrixOracle => "matrix-oracle",
            Suite::RelativeWeyl => "relative-weyl",
            Suite::OrbitStabilizer => "orbit-stabilizer",
            Suite::CentralizerType => "centralizer-type",
        }
    }

    /// The short identifier accepted by the command line.
    pub fn short_id(self) -> &'static str {
        match self {
            Suite::ScCount => "thm11",
            Suite::SupportInjectivity => "thm16",
            Suite::HeckeProduct => "thm18",
            Suite::SoOddTable => "thm31",
            Suite::EpsilonMult => "thm32",
            Suite::UnitaryTable => "thm33",
            Suite::MatrixOracle => "thm26-matrix",
            Suite::RelativeWeyl => "lemA3",
            Suite::OrbitStabilizer => "lemA4",
            Suite::CentralizerType => "lem22",
        }
    }

    /// Ambient dimension for parameter corpora, `d` for the tables, `m` for
    /// the unitary table and `n` for Weyl groups.
    pub fn default_max_rank(self) -> u32 {
        match self {
            Suite::ScCount => 9,
            Suite::SupportInjectivity | Suite::MatrixOracle => 8,
            Suite::HeckeProduct
            | Suite::SoOddTable
            | Suite::EpsilonMult
            | Suite::CentralizerType => 6,
            Suite::UnitaryTable => 12,
            Suite::RelativeWeyl | Suite::OrbitStabilizer => 4,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Suite> {
        Suite::all()
            .into_iter()
            .find(|x| x.name() == s || x.short_id() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite `{s}`")))
    }
}

pub fn run_suite(suite: Suite, max_rank: Option<u32>) -> Result<Report> {
    let k = max_rank.unwrap_or(suite.default_max_rank());
    if k == 0 {
        return Err(Error::Unsupported("max rank must be positive".into()));
    }
    let cases = match suite {
        Suite::ScCount => sc_count(k),
        Suite::SupportInjectivity => support_injectivity(k),
        Suite::HeckeProduct => hecke_product(k),
        Suite::SoOddTable => so_odd_table(k),
        Suite::EpsilonMult => epsilon_mult(k),
        Suite::UnitaryTable => unitary_table(k),
        Suite::MatrixOracle => {
            if k > MATRIX_DIM_CAP {
                return Err(Error::CapExceeded {
                    what: "ambient dimension",
                    value: k,
                    cap: MATRIX_DIM_CAP,
                });
            }
            matrix_oracle(k)
        }
        Suite::RelativeWeyl | Suite::OrbitStabilizer => {
            if k as usize > WEYL_RANK_CAP {
                return Err(Error::CapExceeded {
                    what: "Weyl rank",
                    value: k,
                    cap: WEYL_RANK_CAP as u32,
                });
            }
            if suite == Suite::RelativeWeyl {
                relative_weyl_cases(k)
            } else {
                orbit_stabilizer_cases(k)
            }
        }
        Suite::CentralizerType => centralizer_type(k),
    };
    Ok(Report::new(suite.name(), cases))
}

fn guarded(input: Value, f: impl FnOnce(Value) -> Result<Case>) -> Case {
    f(input.clone()).unwrap_or_else(|e| Case::error(input, &e))
}

fn parameter_input(phi: &LDParameter) -> Value {
    json!({ "parameter": phi })
}

// ---------------------------------------------------------------------------
// counting

fn sc_count(max_dim: u32) -> Vec<Case> {
    let inv = standard_inventory();
    let corpus: Vec<LDParameter> = standard_ambients(max_dim)
        .iter()
        .flat_map(|g| supercuspidal_corpus(&inv, g))
        .collect();
    corpus
        .par_iter()
        .map(|phi| guarded(parameter_input(phi), |input| count_case(&inv, phi, input)))
        .collect()
}

#[derive(Serialize)]
struct Counts {
    plus: u64,
    minus: u64,
    total: u64,
    characters: usize,
}

fn count_case(inv: &Inventory, phi: &LDParameter, input: Value) -> Result<Case> {
    let tc = type_counts(inv, phi)?;
    let brute_chars = brute_force_alternating(inv, phi)?;
    let expected = Counts {
        plus: brute_force_supercuspidals(inv, phi, Sign::Plus)?,
        minus: brute_force_supercuspidals(inv, phi, Sign::Minus)?,
        total: 1 << (tc.odd + tc.even),
        characters: brute_chars.len(),
    };
    let chars = alternating_characters(inv, phi)?;
    let plus = count_supercuspidals(inv, phi, Sign::Plus)?;
    let minus = count_supercuspidals(inv, phi, Sign::Minus)?;
    let actual = Counts {
        plus,
        minus,
        total: plus + minus,
        characters: chars.len(),
    };
    let case = Case::compare(input, expected, actual);
    Ok(if chars != brute_chars {
        Case {
            status: crate::report::Status::Fail,
            ..case
        }
        .with_note("character lists differ")
    } else {
        case
    })
}

// ---------------------------------------------------------------------------
// supports

fn unitary_ambients(max_dim: u32) -> Vec<DualGroup> {
    (1..=max_dim)
        .filter_map(|m| DualGroup::new(Family::UnitaryL, m).ok())
        .collect()
}

/// Normed corpora over the standard inventory and, for unitary ambients,
/// the conjugate-dual inventory.
fn full_normed_corpus(max_dim: u32, with_unitary: bool) -> Vec<(Inventory, LDParameter)> {
    let mut out = Vec::new();
    let inv = standard_inventory();
    for g in standard_ambients(max_dim) {
        out.extend(
            normed_corpus(&inv, &g)
                .into_iter()
                .map(|p| (inv.clone(), p)),
        );
    }
    if with_unitary {
        let uinv = unitary_inventory();
        for g in unitary_ambients(max_dim) {
            out.extend(
                normed_corpus(&uinv, &g)
                    .into_iter()
                    .map(|p| (uinv.clone(), p)),
            );
        }
    }
    out
}

#[derive(Serialize, PartialEq)]
struct StructuralFindings {
    /// Pair indices with `L_S ≢ N (mod 2)`.
    #[serde(rename = "parityViolations")]
    parity_violations: Vec<usize>,
    /// Pair indices whose Levi tail does not have dimension `L_S`.
    #[serde(rename = "tailMismatches")]
    tail_mismatches: Vec<usize>,
    /// Unequal-parameter factors of even rank, as `(support index, orbit)`.
    #[serde(rename = "evenUnequalRanks")]
    even_unequal_ranks: Vec<(usize, String)>,
    duplicates: Vec<(usize, usize)>,
}

fn support_injectivity(max_dim: u32) -> Vec<Case> {
    full_normed_corpus(max_dim, true)
        .par_iter()
        .map(|(inv, phi0)| {
            guarded(parameter_input(phi0), |input| {
                structural_case(inv, phi0, input)
            })
        })
        .collect()
}

fn structural_case(inv: &Inventory, phi0: &LDParameter, input: Value) -> Result<Case> {
    let n = phi0.ambient().dim;
    let cp = cuspidal_pairs(inv, phi0)?;
    let mut even_unequal_ranks = Vec::new();
    for (i, s) in supports(inv, phi0)?.iter().enumerate() {
        for of in hecke_descriptor(inv, phi0, s)? {
            if !of.factor.is_equal_parameter() && of.factor.size % 2 == 0 {
                even_unequal_ranks.push((i, of.orbit));
            }
        }
    }
    let actual = StructuralFindings {
        parity_violations: cp
            .pairs
            .iter()
            .enumerate()
            .filter(|(_, p)| p.big_l % 2 != n % 2)
            .map(|(i, _)| i)
            .collect(),
        tail_mismatches: cp
            .pairs
            .iter()
            .enumerate()
            .filter(|(_, p)| p.levi.tail.dim != p.big_l)
            .map(|(i, _)| i)
            .collect(),
        even_unequal_ranks,
        duplicates: cp.duplicates.clone(),
    };
    let expected = StructuralFindings {
        parity_violations: vec![],
        tail_mismatches: vec![],
        even_unequal_ranks: vec![],
        duplicates: vec![],
    };
    let note = format!(
        "l_S = 0 with several characters at pair indices {:?}",
        cp.degenerate
    );
    Ok(Case::compare(input, expected, actual).flag_if(!cp.degenerate.is_empty(), note))
}

/// The part of `φ₀` in one orbit, as a parameter of the same family.
fn restrict_to_orbit(inv: &Inventory, phi0: &LDParameter, orbit: &str) -> Result<LDParameter> {
    let mut summands = Vec::new();
    let mut dim = 0;
    for s in phi0.summands() {
        if inv.orbit_label(&s.point.class)? == orbit {
            dim += inv.get(&s.point.class)?.dim * s.a * s.mult;
            summands.push(s.clone());
        }
    }
    build_ld_parameter(inv, &summands, DualGroup::new(phi0.ambient().family, dim)?)
}

fn hecke_product(max_dim: u32) -> Vec<Case> {
    full_normed_corpus(max_dim, false)
        .par_iter()
        .map(|(inv, phi0)| {
            guarded(parameter_input(phi0), |input| {
                product_case(inv, phi0, input)
            })
        })
        .collect()
}

#[derive(Serialize)]
struct ProductShape {
    supports: usize,
    pairs: usize,
    factors: Vec<Vec<(String, String)>>,
}

fn product_case(inv: &Inventory, phi0: &LDParameter, input: Value) -> Result<Case> {
    let orbs = orbits(inv, phi0)?;
    let parts: Vec<LDParameter> = orbs
        .iter()
        .map(|o| restrict_to_orbit(inv, phi0, &o.label))
        .collect::<Result<_>>()?;
    let mut n_supports = 1;
    let mut n_pairs = 1;
    for p in &parts {
        n_supports *= supports(inv, p)?.len();
        n_pairs *= cuspidal_pairs(inv, p)?.pairs.len();
    }
    let all = supports(inv, phi0)?;
    let mut expected_factors = Vec::new();
    let mut actual_factors = Vec::new();
    for s in &all {
        let mut row = Vec::new();
        for (o, p) in orbs.iter().zip(&parts) {
            let local = SupportDatum {
                entries: s
                    .entries
                    .iter()
                    .filter(|(k, _)| **k == o.label)
                    .map(|(k, v)| (k.clone(), *v))
                    .collect(),
            };
            row.push((
                o.label.clone(),
                hecke_factor(inv, p, &local, &o.label)?.to_string(),
            ));
        }
        expected_factors.push(row);
        actual_factors.push(
            hecke_descriptor(inv, phi0, s)?
                .into_iter()
                .map(|f| (f.orbit, f.factor.to_string()))
                .collect(),
        );
    }
    let expected = ProductShape {
        supports: n_supports,
        pairs: n_pairs,
        factors: expected_factors,
    };
    let actual = ProductShape {
        supports: all.len(),
        pairs: cuspidal_pairs(inv, phi0)?.pairs.len(),
        factors: actual_factors,
    };
    Ok(Case::compare(input, expected, actual))
}

// ---------------------------------------------------------------------------
// tables

fn so_odd_table(max_d: u32) -> Vec<Case> {
    (1..=max_d)
        .into_par_iter()
        .map(|d| {
            guarded(json!({ "kind": Kind::SoOdd, "rank": d }), |input| {
                Ok(Case::compare(
                    input,
                    specialize(Kind::SoOdd, d)?,
                    derived_table(Kind::SoOdd, d)?,
                ))
            })
        })
        .collect()
}

fn squares_upto(n: u32) -> Vec<u32> {
    (0..).map(|a| a * a).take_while(|&d| d <= n).collect()
}

fn epsilon_mult(max_d: u32) -> Vec<Case> {
    let mut work = Vec::new();
    for d in 1..=max_d {
        for kind in [Kind::Sp, Kind::OEven] {
            let want_odd = kind == Kind::Sp;
            for dp in squares_upto(2 * d + 1) {
                for dm in squares_upto(2 * d + 1 - dp) {
                    if ((dp + dm) % 2 == 1) == want_odd {
                        work.push((kind, d, dp, dm));
                    }
                }
            }
        }
    }
    work.par_iter()
        .flat_map_iter(|&(kind, d, dp, dm)| {
            let mut cases = Vec::new();
            for sign in [Sign::Plus, Sign::Minus] {
                let input = json!({ "kind": kind, "rank": d, "dPlus": dp, "dMinus": dm, "sign": sign });
                cases.push(guarded(input, |input| {
                    let case = Case::compare(input, epsilon_multiplicity(dp, dm, sign), derived_multiplicity(kind, d, dp, dm, Some(sign))?);
                    Ok(case.flag_failure_if(kind == Kind::Sp && dp * dm == 0, "pair with a zero entry in the odd index set"))
                }));
            }
            if kind == Kind::Sp {
                let input = json!({ "kind": kind, "rank": d, "dPlus": dp, "dMinus": dm, "statedMultiplicity": true });
                cases.push(guarded(input, |input| {
                    let stated: u32 = specialize(kind, d)?.iter().filter(|r| r.d_plus == dp && r.d_minus == dm).map(|r| r.mult).sum();
                    let case = Case::compare(input, stated, derived_multiplicity(kind, d, dp, dm, Some(Sign::Plus))?);
                    Ok(case.flag_failure_if(dp * dm == 0, "stated multiplicity 2 at a pair with a zero entry"))
                }));
            }
            cases
        })
        .collect()
}

#[derive(Serialize, PartialEq)]
struct PairEntry {
    mult: u32,
    factors: BTreeSet<String>,
}

fn unitary_table(max_m: u32) -> Vec<Case> {
    (1..=max_m)
        .into_par_iter()
        .flat_map_iter(|m| match unitary_cases(m) {
            Ok(cases) => cases,
            Err(e) => vec![Case::error(json!({ "kind": Kind::Unitary, "rank": m }), &e)],
        })
        .collect()
}

fn unitary_cases(m: u32) -> Result<Vec<Case>> {
    let table = specialize(Kind::Unitary, m)?;
    let derived = derived_table(Kind::Unitary, m)?;
    let pairs: BTreeSet<(u32, u32)> = table
        .iter()
        .chain(&derived)
        .map(|r| (r.d_plus, r.d_minus))
        .collect();
    let mut cases = Vec::new();
    for (dp, dm) in pairs {
        let at = |rows: &[crate::hecke::TableRow]| -> (PairEntry, BTreeMap<Bucket, u32>) {
            let rows: Vec<_> = rows
                .iter()
                .filter(|r| r.d_plus == dp && r.d_minus == dm)
                .collect();
            let mut buckets = BTreeMap::new();
            for r in &rows {
                *buckets.entry(r.bucket).or_insert(0) += r.mult;
            }
            (
                PairEntry {
                    mult: rows.iter().map(|r| r.mult).sum(),
                    factors: rows.iter().map(|r| r.factor.to_string()).collect(),
                },
                buckets,
            )
        };
        let (expected, expected_buckets) = at(&table);
        let (actual, actual_buckets) = at(&derived);
        debug_assert!(expected
            .factors
            .iter()
            .all(|f| *f == table_factor(Kind::Unitary, m, dp, dm).to_string()));
        let input = json!({ "kind": Kind::Unitary, "rank": m, "dPlus": dp, "dMinus": dm });
        let note = format!(
            "buckets differ: stated {:?}, enumerated {:?}",
            expected_buckets, actual_buckets
        );
        cases.push(
            Case::compare(input, expected, actual)
                .flag_if(expected_buckets != actual_buckets, note),
        );
    }
    Ok(cases)
}

// ---------------------------------------------------------------------------
// matrices and triples

#[derive(Serialize)]
struct OracleOutcome {
    scaling: bool,
    #[serde(rename = "formPreserved")]
    form_preserved: bool,
    #[serde(rename = "roundTrip")]
    round_trip: LDParameter,
    #[serde(rename = "componentOrder")]
    component_order: u64,
}

fn matrix_oracle(max_dim: u32) -> Vec<Case> {
    let inv = standard_inventory();
    let corpus: Vec<LDParameter> = standard_ambients(max_dim)
        .iter()
        .flat_map(|g| discrete_corpus(&inv, g))
        .collect();
    corpus
        .par_iter()
        .map(|phi| {
            guarded(parameter_input(phi), |input| {
                let r = realize_matrices(&inv, phi)?;
                let t = parameter_to_triple(&inv, phi)?;
                let expected = OracleOutcome {
                    scaling: true,
                    form_preserved: true,
                    round_trip: phi.clone(),
                    component_order: 1 << component_group(phi)?.rank(),
                };
                let actual = OracleOutcome {
                    scaling: r.scaling_holds,
                    form_preserved: r.form_preserved,
                    round_trip: triple_to_parameter(&inv, &t)?,
                    component_order: component_group_of_triple(&inv, &t)?.order(),
                };
                Ok(Case::compare(input, expected, actual))
            })
        })
        .collect()
}

// ---------------------------------------------------------------------------
// centralizers

fn q() -> UnitMonomial {
    UnitMonomial::q_pow(HalfInt::from_int(1))
}

/// Every eigenvalue distribution on one orbit drawn from `1`, `-1`, `q^{±1}`
/// and `±i`, closed under inversion on self-dual orbits.
fn eigenvalue_splits(o: &Orbit) -> Vec<Vec<(UnitMonomial, u32)>> {
    let m = o.m;
    let mut out = Vec::new();
    for m1 in 0..=m {
        for mm in 0..=m - m1 {
            let rest = m - m1 - mm;
            let mut base = vec![(UnitMonomial::one(), m1), (UnitMonomial::minus_one(), mm)];
            if o.is_self_dual() {
                if rest % 2 == 1 {
                    continue;
                }
                for pq in 0..=rest / 2 {
                    let pi = rest / 2 - pq;
                    let mut v = base.clone();
                    v.extend([
                        (q(), pq),
                        (q().inv(), pq),
                        (UnitMonomial::i(), pi),
                        (UnitMonomial::i().inv(), pi),
                    ]);
                    v.retain(|e| e.1 > 0);
                    out.push(v);
                }
            } else {
                base.push((q(), rest));
                base.retain(|e| e.1 > 0);
                out.push(base);
            }
        }
    }
    out
}

fn semisimple_classes(orbs: &[Orbit]) -> Vec<SemisimpleClass> {
    let mut acc = vec![SemisimpleClass::default()];
    for o in orbs {
        let splits = eigenvalue_splits(o);
        acc = acc
            .iter()
            .flat_map(|s| {
                splits.iter().map(move |split| {
                    let mut s = s.clone();
                    for (x, m) in split {
                        s.add(&o.label, *x, *m);
                    }
                    s
                })
            })
            .collect();
    }
    acc
}

/// `-1` occurs only on orbits whose points `f = ±1` have the same type.
fn type_condition(orbs: &[Orbit], s: &SemisimpleClass) -> bool {
    orbs.iter().all(|o| match o.kind {
        OrbitKind::SelfDual {
            plus_of_type,
            minus_of_type,
        } => plus_of_type == minus_of_type || s.mult(&o.label, &UnitMonomial::minus_one()) == 0,
        OrbitKind::NotSelfDual { .. } => true,
    })
}

/// Generated `(φ₀, s)` instances: every normed parameter of the standard
/// inventory with every eigenvalue distribution that centralizes, plus the
/// family `m·ρ` for an orbit with an orthogonal point at `1` and a symplectic
/// point at `-1`.
pub fn centralizer_instances(max_dim: u32) -> Vec<(Inventory, LDParameter, SemisimpleClass, bool)> {
    let mut out = Vec::new();
    for (inv, phi0) in full_normed_corpus(max_dim, false) {
        let Ok(orbs) = orbits(&inv, &phi0) else {
            continue;
        };
        for s in semisimple_classes(&orbs) {
            if centralizer_of_s(&inv, &phi0, &s).is_ok() && twist(&inv, &phi0, &s).is_ok() {
                out.push((inv.clone(), phi0.clone(), s, false));
            }
        }
    }
    let inv = standard_inventory();
    for m in 1..=max_dim {
        let Ok(g) = DualGroup::new(Family::Orthogonal, 2 * m) else {
            continue;
        };
        let Ok(phi0) = build_ld_parameter(
            &inv,
            &[LDSummand::new(point("rho_os", Sign::Plus), 1, m)],
            g,
        ) else {
            continue;
        };
        let Ok(orbs) = orbits(&inv, &phi0) else {
            continue;
        };
        for s in semisimple_classes(&orbs) {
            if s.mult("rho_os", &UnitMonomial::minus_one()) % 2 == 0 {
                out.push((inv.clone(), phi0.clone(), s, true));
            }
        }
    }
    out
}

fn centralizer_type(max_dim: u32) -> Vec<Case> {
    centralizer_instances(max_dim)
        .par_iter()
        .flat_map_iter(|(inv, phi0, s, mixed_family)| {
            let input = json!({ "phi0": phi0, "s": s, "mixedFamily": mixed_family });
            let mut cases = vec![guarded(input.clone(), |input| {
                let orbs = orbits(inv, phi0)?;
                let a = centralizer_of_image(inv, &twist(inv, phi0, s)?)?.group;
                let b = centralizer_of_s(inv, phi0, s)?.group;
                Ok(Case::compare(
                    input,
                    json!({ "isomorphic": type_condition(&orbs, s) }),
                    json!({ "isomorphic": a == b }),
                ))
            })];
            cases.push(guarded(json!({ "cPrime": input.clone() }), |input| {
                let c = centralizer_of_s(inv, phi0, s)?;
                Ok(Case::compare(input, &c.typed, Some(c_prime(inv, phi0, s)?)))
            }));
            if *mixed_family {
                cases.push(guarded(json!({ "typedDiffers": input }), |input| {
                    let c = centralizer_of_s(inv, phi0, s)?;
                    let differs = c.typed.as_ref() != Some(&c.group);
                    Ok(Case::compare(
                        input,
                        json!({ "differs": c.m_minus_one > 0 }),
                        json!({ "differs": differs }),
                    ))
                }));
            }
            cases
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Weyl groups

fn relative_weyl_cases(max_n: u32) -> Vec<Case> {
    let levis: Vec<_> = (1..=max_n as usize).flat_map(standard_levis).collect();
    levis
        .par_iter()
        .map(|levi| {
            guarded(json!({ "levi": levi }), |input| {
                let rw = relative_weyl(levi)?;
                let expected =
                    json!({ "equal": !levi_weyl_is_strict(levi), "indexAtMostTwo": true });
                let actual = json!({ "equal": rw.equal, "indexAtMostTwo": rw.full <= 2 * rw.even });
                let case = Case::compare(input, expected, actual);
                Ok(match &rw.witness {
                    Some(w) => case.with_note(format!("witness {w}")),
                    None => case,
                })
            })
        })
        .collect()
}

fn orbit_stabilizer_cases(max_n: u32) -> Vec<Case> {
    let mut work = Vec::new();
    for n in 1..=max_n as usize {
        let group = weyl_group(n, true).unwrap_or_default();
        for levi in standard_levis(n) {
            let ln = Arc::new(LeviNormalizer::new(&group, &levi));
            for decs in decoration_assignments(&levi, 3) {
                work.push((Arc::clone(&ln), decs));
            }
        }
    }
    work.par_iter()
        .map(|(ln, decs)| {
            let levi = &ln.levi;
            let input = json!({ "levi": levi, "decorations": decs });
            let os = orbit_stabilizers_in(ln, decs);
            let expected = json!({ "equal": !orbit_weyl_is_strict(levi, decs), "semidirect": true, "indexAtMostTwo": true });
            let actual = json!({ "equal": os.equal, "semidirect": os.semidirect, "indexAtMostTwo": os.full <= 2 * os.even });
            Case::compare(input, expected, actual)
        })
        .collect()
}
