use std::collections::BTreeMap;
use std::path::Path;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::CliError;
use crate::gradedring::{
    CoefficientMap, Coefficients, CohomologyRings, Generator, GradedRing, RewriteRule, RingElement,
    RingPresentation,
};
use crate::obstruct::{BundleClasses, BundleData, Conclusion, Pairing, Status};

pub const SCHEMA_VERSION: u32 = 1;

/// A class written as `{monomial: "coefficient"}`; absent monomials are 0.
pub type ClassSpec = BTreeMap<String, String>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceFile {
    pub schema_version: u32,
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub rings: RingsSection,
    #[serde(default, skip_serializing_if = "MapsSection::is_empty")]
    pub maps: MapsSection,
    pub bundle: BundleSection,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expectations: Option<Expectations>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingsSection {
    /// Defaults to twice the rank.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cutoff: Option<usize>,
    pub integral: RingSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mod2: Option<RingSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mod4: Option<RingSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    pub generators: Vec<Generator>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub relations: Vec<RelationSpec>,
}

/// `lhs → Σ rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationSpec {
    pub lhs: String,
    #[serde(default)]
    pub rhs: ClassSpec,
}

/// Images of source basis monomials; unlisted monomials map to 0.
pub type MapSpec = BTreeMap<String, ClassSpec>;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapsSection {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho2: Option<MapSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho4: Option<MapSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho2_4: Option<MapSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta2: Option<MapSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<MapSpec>,
    /// Sq¹ of each mod 2 generator.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sq1: Option<MapSpec>,
}

impl MapsSection {
    pub fn is_empty(&self) -> bool {
        *self == MapsSection::default()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BundleSection {
    pub rank: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base_dimension: Option<usize>,
    /// `"w2" → class`.
    #[serde(default)]
    pub w: BTreeMap<String, ClassSpec>,
    /// `"p1" → class`.
    #[serde(default)]
    pub p: BTreeMap<String, ClassSpec>,
    #[serde(default)]
    pub euler: ClassSpec,
    /// Value of the fundamental class on each top-degree monomial.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairing: Option<ClassSpec>,
}

/// Expected results, checked by the corpus runner.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expectations {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exit_code: Option<i32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conclusion: Option<Conclusion>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first: Option<Status>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ehresmann_w7: Option<Status>,
    /// `"k" → status`.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub theorem1: BTreeMap<String, Status>,
    #[serde(default, rename = "final", skip_serializing_if = "Option::is_none")]
    pub final_status: Option<Status>,
    /// Each entry maps `"c1"`, `"c2"`, … to a class.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vanishing_candidates: Option<Vec<BTreeMap<String, ClassSpec>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub euler_pairing: Option<String>,
    /// Substrings that must occur among the report notes.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

/// A parsed file together with the bundle it describes.
#[derive(Debug, Clone)]
pub struct LoadedSpace {
    pub file: SpaceFile,
    pub bundle: BundleData,
}

pub fn parse_space_file(path: &Path) -> Result<LoadedSpace, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    parse_space_str(&text).map_err(|e| e.in_file(path))
}

pub fn parse_space_str(text: &str) -> Result<LoadedSpace, CliError> {
    let file: SpaceFile = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    let bundle = file.to_bundle()?;
    Ok(LoadedSpace { file, bundle })
}

fn field<E: std::fmt::Display>(path: &str) -> impl Fn(E) -> CliError + '_ {
    move |e| CliError::Field {
        field: path.to_string(),
        message: e.to_string(),
    }
}

fn parse_int(text: &str, path: &str) -> Result<BigInt, CliError> {
    text.trim().parse().map_err(|_| CliError::Field {
        field: path.into(),
        message: format!("invalid integer {text:?}"),
    })
}

fn presentation(
    spec: &RingSpec,
    coefficients: Coefficients,
    cutoff: usize,
    path: &str,
) -> Result<RingPresentation, CliError> {
    let mut p = RingPresentation::new(coefficients, cutoff, spec.generators.clone());
    for (i, rel) in spec.relations.iter().enumerate() {
        let here = format!("{path}.relations[{i}]");
        let (lhs, lhs_sign) = p.parse_monomial(&rel.lhs).map_err(field(&here))?;
        let mut rhs = Vec::new();
        for (m, c) in &rel.rhs {
            let (mono, sign) = p.parse_monomial(m).map_err(field(&here))?;
            rhs.push((mono, parse_int(c, &here)? * sign * lhs_sign));
        }
        p.rules.push(RewriteRule { lhs, rhs });
    }
    Ok(p)
}

fn class(
    ring: &GradedRing,
    degree: usize,
    spec: &ClassSpec,
    path: &str,
) -> Result<RingElement, CliError> {
    let mut terms = Vec::new();
    for (m, c) in spec {
        terms.push((m.as_str(), parse_int(c, path)?));
    }
    ring.parse_class(degree, terms).map_err(field(path))
}

fn map_images(
    spec: &MapSpec,
    name: &str,
    source: &GradedRing,
    target: &GradedRing,
    shift: usize,
) -> Result<CoefficientMap, CliError> {
    let path = format!("maps.{name}");
    let mut used = 0;
    let mut images = Vec::new();
    for d in 0..=source.cutoff() {
        if d + shift > target.cutoff() {
            break;
        }
        let mut col = Vec::new();
        for m in &source.piece(d).map_err(field(&path))?.basis {
            let key = source.presentation().format_monomial(m);
            match spec.get(&key) {
                Some(img) => {
                    used += 1;
                    col.push(class(target, d + shift, img, &format!("{path}.{key}"))?);
                }
                None => col.push(target.zero(d + shift).map_err(field(&path))?),
            }
        }
        images.push(col);
    }
    if used != spec.len() {
        let known: Vec<String> = (0..=source.cutoff())
            .filter_map(|d| source.piece(d).ok())
            .flat_map(|p| {
                p.basis
                    .iter()
                    .map(|m| source.presentation().format_monomial(m))
            })
            .collect();
        let bad = spec
            .keys()
            .find(|k| !known.contains(k))
            .cloned()
            .unwrap_or_default();
        return Err(CliError::Field {
            field: path,
            message: format!("{bad:?} is not a basis monomial of the source"),
        });
    }
    CoefficientMap::from_images(name, source, target, shift, &images)
        .map_err(field(&format!("maps.{name}")))
}

fn indexed_key(key: &str, prefix: char, path: &str) -> Result<usize, CliError> {
    key.strip_prefix(prefix)
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| CliError::Field {
            field: format!("{path}.{key}"),
            message: format!("expected {prefix}<index>"),
        })
}

impl SpaceFile {
    pub fn to_bundle(&self) -> Result<BundleData, CliError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(CliError::Field {
                field: "schema_version".into(),
                message: format!(
                    "unsupported version {}, expected {SCHEMA_VERSION}",
                    self.schema_version
                ),
            });
        }
        let rank = self.bundle.rank;
        let cutoff = self.rings.cutoff.unwrap_or(2 * rank);
        let integral_p = presentation(
            &self.rings.integral,
            Coefficients::Integers,
            cutoff,
            "rings.integral",
        )?;
        let rings = self.build_rings(integral_p, cutoff)?;

        let b = &self.bundle;
        let mut classes = BundleClasses::default();
        for (key, spec) in &b.w {
            let i = indexed_key(key, 'w', "bundle.w")?;
            if i > cutoff {
                return Err(CliError::Field {
                    field: format!("bundle.w.{key}"),
                    message: "above the cutoff".into(),
                });
            }
            classes
                .w
                .insert(i, class(rings.mod2(), i, spec, &format!("bundle.w.{key}"))?);
        }
        for (key, spec) in &b.p {
            let k = indexed_key(key, 'p', "bundle.p")?;
            if 4 * k > cutoff {
                return Err(CliError::Field {
                    field: format!("bundle.p.{key}"),
                    message: "above the cutoff".into(),
                });
            }
            classes.p.insert(
                k,
                class(rings.integral(), 4 * k, spec, &format!("bundle.p.{key}"))?,
            );
        }
        if rank > cutoff {
            return Err(CliError::Field {
                field: "rings.cutoff".into(),
                message: format!("below the rank {rank}"),
            });
        }
        classes.euler = Some(class(rings.integral(), rank, &b.euler, "bundle.euler")?);
        let pairing = match &b.pairing {
            None => None,
            Some(spec) => Some(self.pairing(rings.integral(), spec)?),
        };
        BundleData::new(rings, rank, b.base_dimension, classes, pairing).map_err(CliError::Bundle)
    }

    fn build_rings(
        &self,
        integral_p: RingPresentation,
        cutoff: usize,
    ) -> Result<CohomologyRings, CliError> {
        let r = &self.rings;
        let path = "rings";
        if r.mod2.is_none()
            && r.mod4.is_none()
            && self.maps.is_empty()
            && integral_p.is_torsion_free()
        {
            return CohomologyRings::from_torsion_free(integral_p).map_err(field(path));
        }
        let mod2_p = match &r.mod2 {
            Some(s) => presentation(s, Coefficients::Mod2, cutoff, "rings.mod2")?,
            None => integral_p.with_coefficients(Coefficients::Mod2),
        };
        let mod4_p = match &r.mod4 {
            Some(s) => presentation(s, Coefficients::Mod4, cutoff, "rings.mod4")?,
            None => integral_p.with_coefficients(Coefficients::Mod4),
        };
        let torsion_free = integral_p.is_torsion_free();
        let integral = GradedRing::build(integral_p).map_err(field("rings.integral"))?;
        let mod2 = GradedRing::build(mod2_p).map_err(field("rings.mod2"))?;
        let mod4 = GradedRing::build(mod4_p).map_err(field("rings.mod4"))?;
        let m = &self.maps;
        let build =
            |spec: &Option<MapSpec>, name: &str, s: &GradedRing, t: &GradedRing, factor: i64| {
                match spec {
                    Some(spec) => map_images(spec, name, s, t, 0),
                    None => CoefficientMap::monomialwise(name, s, t, factor)
                        .map_err(field(&format!("maps.{name}"))),
                }
            };
        let rho2 = build(&m.rho2, "rho2", &integral, &mod2, 1)?;
        let rho4 = build(&m.rho4, "rho4", &integral, &mod4, 1)?;
        let rho2_4 = build(&m.rho2_4, "rho2_4", &mod4, &mod2, 1)?;
        let theta2 = build(&m.theta2, "theta2", &mod2, &mod4, 2)?;
        let beta = match &m.beta {
            Some(spec) => Some(map_images(spec, "beta", &mod2, &integral, 1)?),
            None if torsion_free => Some(
                CoefficientMap::zero("beta", &mod2, &integral, 1).map_err(field("maps.beta"))?,
            ),
            None => None,
        };
        let sq1 = match &m.sq1 {
            None => None,
            Some(spec) => {
                let gens = &mod2.presentation().generators;
                if let Some(bad) = spec.keys().find(|k| !gens.iter().any(|g| &g.name == *k)) {
                    return Err(CliError::Field {
                        field: format!("maps.sq1.{bad}"),
                        message: "unknown generator".into(),
                    });
                }
                let mut table = Vec::new();
                for g in gens {
                    let here = format!("maps.sq1.{}", g.name);
                    if g.degree + 1 > cutoff {
                        table.push(None);
                        continue;
                    }
                    table.push(Some(match spec.get(&g.name) {
                        Some(c) => class(&mod2, g.degree + 1, c, &here)?,
                        None => mod2.zero(g.degree + 1).map_err(field(&here))?,
                    }));
                }
                Some(table)
            }
        };
        CohomologyRings::new(integral, mod2, mod4, rho2, rho4, rho2_4, theta2, beta, sq1)
            .map_err(field("maps"))
    }

    fn pairing(&self, ring: &GradedRing, spec: &ClassSpec) -> Result<Pairing, CliError> {
        let path = "bundle.pairing";
        let mut degree = self.bundle.base_dimension;
        for m in spec.keys() {
            let (mono, _) = ring.presentation().parse_monomial(m).map_err(field(path))?;
            let d = ring.presentation().degree_of(&mono);
            match degree {
                Some(expected) if expected != d => {
                    return Err(CliError::Field {
                        field: format!("{path}.{m}"),
                        message: format!("degree {d} differs from the pairing degree {expected}"),
                    })
                }
                _ => degree = Some(d),
            }
        }
        let degree = degree.ok_or_else(|| CliError::Field {
            field: path.into(),
            message: "cannot infer the pairing degree".into(),
        })?;
        let piece = ring.piece(degree).map_err(field(path))?;
        let mut values = vec![BigInt::zero(); piece.len()];
        for (m, c) in spec {
            let (mono, sign) = ring.presentation().parse_monomial(m).map_err(field(path))?;
            let idx = ring.basis_index(&mono).ok_or_else(|| CliError::Field {
                field: format!("{path}.{m}"),
                message: "not a basis monomial".into(),
            })?;
            values[idx] += parse_int(c, path)? * sign;
        }
        Ok(Pairing { degree, values })
    }
}

/// Writes a class as `{monomial: "coefficient"}`, omitting zero terms.
pub fn class_spec(ring: &GradedRing, x: &RingElement) -> ClassSpec {
    let Ok(piece) = ring.piece(x.degree()) else {
        return ClassSpec::new();
    };
    x.coefficients()
        .iter()
        .zip(&piece.basis)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, m)| (ring.presentation().format_monomial(m), c.to_string()))
        .collect()
}

fn ring_spec(p: &RingPresentation) -> RingSpec {
    RingSpec {
        generators: p.generators.clone(),
        relations: p
            .rules
            .iter()
            .map(|r| RelationSpec {
                lhs: p.format_monomial(&r.lhs),
                rhs: r
                    .rhs
                    .iter()
                    .map(|(m, c)| (p.format_monomial(m), c.to_string()))
                    .collect(),
            })
            .collect(),
    }
}

fn map_spec(
    map: &CoefficientMap,
    source: &GradedRing,
    target: &GradedRing,
) -> Result<MapSpec, CliError> {
    let images = map
        .images(source, target)
        .map_err(field(&format!("maps.{}", map.name)))?;
    let mut spec = MapSpec::new();
    for (d, col) in images.iter().enumerate() {
        for (m, img) in source
            .piece(d)
            .map_err(field("maps"))?
            .basis
            .iter()
            .zip(col)
        {
            if !img.is_zero() {
                spec.insert(
                    source.presentation().format_monomial(m),
                    class_spec(target, img),
                );
            }
        }
    }
    Ok(spec)
}

/// Serializes a bundle with every ring and map written out explicitly.
pub fn space_file_from_bundle(name: &str, d: &BundleData) -> Result<SpaceFile, CliError> {
    let rings = d.rings();
    let (z, m2, m4) = (rings.integral(), rings.mod2(), rings.mod4());
    let sq1 = rings.sq1_generator_table().map(|table| {
        m2.presentation()
            .generators
            .iter()
            .zip(table)
            .filter_map(|(g, v)| v.as_ref().map(|v| (g.name.clone(), class_spec(m2, v))))
            .collect()
    });
    let maps = MapsSection {
        rho2: Some(map_spec(rings.rho2_map(), z, m2)?),
        rho4: Some(map_spec(rings.rho4_map(), z, m4)?),
        rho2_4: Some(map_spec(rings.rho2_4_map(), m4, m2)?),
        theta2: Some(map_spec(rings.theta2_map(), m2, m4)?),
        beta: rings.beta_map().map(|b| map_spec(b, m2, z)).transpose()?,
        sq1,
    };
    let w = d
        .ws()
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (format!("w{i}"), class_spec(m2, x)))
        .collect();
    let p = d
        .ps()
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, x)| !x.is_zero())
        .map(|(k, x)| (format!("p{k}"), class_spec(z, x)))
        .collect();
    let pairing = d.pairing().map(|pr| {
        let piece = z
            .piece(pr.degree)
            .map(|p| p.basis.clone())
            .unwrap_or_default();
        piece
            .iter()
            .zip(&pr.values)
            .map(|(m, v)| (z.presentation().format_monomial(m), v.to_string()))
            .collect()
    });
    Ok(SpaceFile {
        schema_version: SCHEMA_VERSION,
        name: name.to_string(),
        description: None,
        rings: RingsSection {
            cutoff: Some(d.cutoff()),
            integral: ring_spec(z.presentation()),
            mod2: Some(ring_spec(m2.presentation())),
            mod4: Some(ring_spec(m4.presentation())),
        },
        maps,
        bundle: BundleSection {
            rank: d.rank(),
            base_dimension: d.base_dimension(),
            w,
            p,
            euler: class_spec(z, d.euler()),
            pairing,
        },
        expectations: None,
    })
}
