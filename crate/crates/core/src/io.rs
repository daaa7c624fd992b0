//! JSON input formats.
//!
//! * complex: `{ "truncation": D, "simplices": { "0": [..], "1": [..] }, "faces": { "e": ["v", "v"], "c": ["s0 v", ..] }, "action": { "g": { "x": "y" } } }`
//! * group: `{ "elements": [..], "table": [[..]] }`, `{ "cyclic": n }` or one of `"trivial"`, `"Z2"`, `"Z4"`, `"S3"`
//! * abelian group: `{ "gens": n, "rels": [[..]] }` (relations are vectors) or `"Z"`, `"Z/4"`, `"0"`, `"Z^2"`
//! * coefficients: `{ "constant": A }` or `{ "values": { "{e}": A, .. }, "maps": { "{e}->{e,a}@e": matrix } }`
//! * twist: `{ "group": group, "values": { "{e}": { "e": "t" } } }` or
//!   `{ "basepoint": "v", "paths": { "x": [["e01", "+"]] }, "edge_action": { "{e}": { "e01": matrix } } }`
//! * action: `{ "action": { "{e}": { "t": matrix } } }`
//!
//! Matrices are lists of rows. A missing action entry leaves a simplex fixed;
//! a missing coefficient map between equal groups is the identity; a missing
//! twist value or element action is the identity.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::Deserialize;

use crate::abelian::{AbHom, CoefficientSystem, FgAbGroup, IntMatrix, OGGroup, PiModule};
use crate::cartan::CartanTheory;
use crate::equivariant::{action_from_generators, GSimplicialSet};
use crate::error::{Error, Result};
use crate::orbit::{FiniteGroup, OrbitCategory};
use crate::simplicial::FiniteSimplicialSet;
use crate::twisting::{
    EdgeAction, EdgeStep, EdgeTwist, EdgeWord, GroupTwist, Kappa, Twist, TwistingFunction, Untwisted,
};

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexJson {
    pub truncation: usize,
    pub simplices: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    pub faces: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    pub action: BTreeMap<String, BTreeMap<String, String>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum GroupJson {
    Table {
        elements: Vec<String>,
        table: Vec<Vec<usize>>,
    },
    Cyclic {
        cyclic: usize,
    },
    Named(String),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum AbGroupJson {
    Presented {
        gens: usize,
        #[serde(default)]
        rels: Vec<Vec<i64>>,
    },
    Named(String),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoeffsJson {
    #[serde(default)]
    pub constant: Option<AbGroupJson>,
    #[serde(default)]
    pub values: BTreeMap<String, AbGroupJson>,
    #[serde(default)]
    pub maps: BTreeMap<String, Vec<Vec<i64>>>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoryKind {
    #[default]
    Canonical,
    Zero,
}

/// A planted change to a generated theory.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoryModification {
    /// `δ^i = 0`.
    ZeroDifferential(usize),
    /// `ψ^i_H(α) = id` for every `α`.
    TrivialPsi(usize),
}

/// A Cartan theory generated from its declared `M`; bounds default to `(2, 3)`.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TheoryJson {
    #[serde(default)]
    pub group: Option<GroupJson>,
    pub coeffs: CoeffsJson,
    #[serde(default)]
    pub kind: TheoryKind,
    #[serde(default)]
    pub modification: Option<TheoryModification>,
    #[serde(default)]
    pub bounds: Option<(usize, usize)>,
}

pub fn theory_from_json(t: &TheoryJson, bounds: Option<(usize, usize)>, budget: usize) -> Result<CartanTheory> {
    let group = match &t.group {
        Some(g) => group_from_json(g)?,
        None => FiniteGroup::trivial(),
    };
    let orbit = Arc::new(OrbitCategory::new(group));
    let m = coeffs_from_json(&t.coeffs, orbit)?;
    let (i_max, p_max) = bounds.or(t.bounds).unwrap_or((2, 3));
    let theory = match t.kind {
        TheoryKind::Canonical => CartanTheory::canonical(&m, i_max, p_max)?,
        TheoryKind::Zero => CartanTheory::zero(&m, i_max, p_max)?,
    };
    match t.modification {
        None => Ok(theory),
        Some(TheoryModification::ZeroDifferential(i)) => theory.with_zero_differential(i),
        Some(TheoryModification::TrivialPsi(i)) => theory.with_trivial_psi(i, budget),
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum TwistJson {
    Group {
        group: GroupJson,
        #[serde(default)]
        values: BTreeMap<String, BTreeMap<String, String>>,
    },
    Kappa {
        basepoint: String,
        #[serde(default)]
        paths: BTreeMap<String, Vec<(String, String)>>,
        #[serde(default)]
        edge_action: BTreeMap<String, BTreeMap<String, Vec<Vec<i64>>>>,
    },
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionJson {
    pub action: BTreeMap<String, BTreeMap<String, Vec<Vec<i64>>>>,
}

/// Parses JSON text, naming `origin` in errors.
pub fn parse<T: for<'de> Deserialize<'de>>(text: &str, origin: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("{origin}: {e}")))
}

pub fn read<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse(&text, &path.display().to_string())
}

pub fn group_from_json(g: &GroupJson) -> Result<FiniteGroup> {
    match g {
        GroupJson::Table { elements, table } => FiniteGroup::new(elements.clone(), table.clone()),
        GroupJson::Cyclic { cyclic } => {
            if *cyclic == 0 {
                return Err(Error::Invalid("cyclic group of order 0".into()));
            }
            Ok(FiniteGroup::cyclic(*cyclic))
        }
        GroupJson::Named(name) => match name.as_str() {
            "trivial" | "e" | "1" => Ok(FiniteGroup::trivial()),
            "S3" => Ok(FiniteGroup::symmetric3()),
            other => {
                let n = other
                    .trim_start_matches("Z/")
                    .trim_start_matches('Z')
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("unknown group `{other}`")))?;
                if n == 0 {
                    return Err(Error::Invalid("cyclic group of order 0".into()));
                }
                Ok(FiniteGroup::cyclic(n))
            }
        },
    }
}

/// `"Z"`, `"Z/4"`, `"Z4"`, `"Z^2"`, `"0"`, or a presentation.
pub fn abelian_from_json(a: &AbGroupJson) -> Result<FgAbGroup> {
    match a {
        AbGroupJson::Presented { gens, rels } => {
            let cols: Vec<Vec<BigInt>> = rels
                .iter()
                .map(|r| {
                    if r.len() != *gens {
                        return Err(Error::DimensionMismatch(format!(
                            "relation of length {} in a group on {gens} generators",
                            r.len()
                        )));
                    }
                    Ok(r.iter().map(|&x| BigInt::from(x)).collect())
                })
                .collect::<Result<_>>()?;
            FgAbGroup::new(*gens, IntMatrix::from_columns(*gens, &cols))
        }
        AbGroupJson::Named(name) => parse_abelian(name),
    }
}

pub fn parse_abelian(name: &str) -> Result<FgAbGroup> {
    let name = name.trim();
    if name == "0" {
        return Ok(FgAbGroup::trivial());
    }
    if name == "Z" {
        return Ok(FgAbGroup::free(1));
    }
    if let Some(k) = name.strip_prefix("Z^") {
        let k = k.parse().map_err(|_| Error::Parse(format!("bad group `{name}`")))?;
        return Ok(FgAbGroup::free(k));
    }
    let d: u64 = name
        .trim_start_matches("Z/")
        .trim_start_matches('Z')
        .parse()
        .map_err(|_| Error::Parse(format!("unknown abelian group `{name}`")))?;
    Ok(FgAbGroup::cyclic(d))
}

pub fn matrix_from_json(rows: &[Vec<i64>], shape: (usize, usize), what: &str) -> Result<IntMatrix> {
    let ok = rows.len() == shape.0 && rows.iter().all(|r| r.len() == shape.1);
    if !ok {
        return Err(Error::DimensionMismatch(format!(
            "{what}: expected a {}x{} matrix",
            shape.0, shape.1
        )));
    }
    Ok(IntMatrix::from_rows_with_cols(rows, shape.1))
}

pub fn complex_from_json(c: &ComplexJson) -> Result<FiniteSimplicialSet> {
    let mut x = FiniteSimplicialSet::new(c.truncation);
    let mut dims: Vec<(usize, &Vec<String>)> = c
        .simplices
        .iter()
        .map(|(d, names)| {
            d.parse::<usize>()
                .map(|d| (d, names))
                .map_err(|_| Error::Parse(format!("dimension key `{d}` is not a number")))
        })
        .collect::<Result<_>>()?;
    dims.sort_by_key(|(d, _)| *d);
    for (d, names) in dims {
        for name in names {
            let faces = match c.faces.get(name) {
                Some(fs) => fs.iter().map(|f| x.parse_ref(f)).collect::<Result<Vec<_>>>()?,
                None if d == 0 => Vec::new(),
                None => return Err(Error::Parse(format!("simplex `{name}` has no faces listed"))),
            };
            x.add_simplex_at(d, name, faces)?;
        }
    }
    for name in c.faces.keys() {
        if x.id(name).is_none() {
            return Err(Error::UnknownId(format!("faces given for undeclared simplex `{name}`")));
        }
    }
    Ok(x)
}

/// The complex with the action of `group` given on generators.
pub fn g_complex_from_json(c: &ComplexJson, group: FiniteGroup) -> Result<GSimplicialSet> {
    let x = complex_from_json(c)?;
    let orbit = Arc::new(OrbitCategory::new(group));
    let g = orbit.group();
    let mut gens = Vec::new();
    for (elem, table) in &c.action {
        let a = g.element(elem)?;
        let mut perm: Vec<Vec<usize>> = (0..=x.truncation())
            .map(|n| (0..x.num_nondegenerate(n)).collect())
            .collect();
        for (from, to) in table {
            let (s, t) = (x.get(from)?, x.get(to)?);
            if s.dim != t.dim {
                return Err(Error::DimensionMismatch(format!(
                    "`{from}` and `{to}` differ in dimension"
                )));
            }
            perm[s.dim][s.index] = t.index;
        }
        gens.push((a, perm));
    }
    let action = if gens.is_empty() {
        let id: Vec<Vec<usize>> = (0..=x.truncation())
            .map(|n| (0..x.num_nondegenerate(n)).collect())
            .collect();
        vec![id; g.order()]
    } else {
        action_from_generators(&x, &orbit, &gens)?
    };
    GSimplicialSet::new(x, orbit, action)
}

pub fn coeffs_from_json(c: &CoeffsJson, orbit: Arc<OrbitCategory>) -> Result<CoefficientSystem> {
    if let Some(a) = &c.constant {
        if !c.values.is_empty() || !c.maps.is_empty() {
            return Err(Error::Parse("`constant` excludes `values` and `maps`".into()));
        }
        return Ok(CoefficientSystem::constant(orbit.clone(), &abelian_from_json(a)?));
    }
    let mut values = vec![None; orbit.num_objects()];
    for (key, a) in &c.values {
        values[orbit.object_by_key(key)?] = Some(abelian_from_json(a)?);
    }
    let values: Vec<FgAbGroup> = values
        .into_iter()
        .enumerate()
        .map(|(h, v)| v.ok_or_else(|| Error::Parse(format!("no value for {}", orbit.key(h)))))
        .collect::<Result<_>>()?;
    let mut maps = BTreeMap::new();
    for (key, rows) in &c.maps {
        let f = orbit.morphism_by_key(key)?;
        let (s, t) = (&values[f.target], &values[f.source]);
        let m = matrix_from_json(rows, (t.n_gens(), s.n_gens()), key)?;
        maps.insert(f, AbHom::new(s.clone(), t.clone(), m)?);
    }
    for f in orbit.morphisms() {
        if !maps.contains_key(&f) && values[f.source] == values[f.target] {
            maps.insert(f, AbHom::identity(&values[f.source]));
        }
    }
    CoefficientSystem::new(orbit, values, maps)
}

fn pi_module_from_json(a: Option<&ActionJson>, pi: OGGroup, m: CoefficientSystem) -> Result<PiModule> {
    let orbit = m.orbit_category().clone();
    let mut mats: Vec<Vec<IntMatrix>> = orbit
        .objects()
        .map(|h| vec![IntMatrix::identity(m.value(h).n_gens()); pi.value(h).order()])
        .collect();
    if let Some(a) = a {
        for (key, table) in &a.action {
            let h = orbit.object_by_key(key)?;
            let n = m.value(h).n_gens();
            for (elem, rows) in table {
                let u = pi.value(h).element(elem)?;
                mats[h][u] = matrix_from_json(rows, (n, n), &format!("phi({elem}) at {key}"))?;
            }
        }
    }
    PiModule::new(pi, m, mats)
}

/// The twist a computation runs with: untwisted when no twist file is given.
/// The group-valued branch of [`twist_from_json`].
pub fn group_twist_from_json(
    group: &GroupJson,
    values: &BTreeMap<String, BTreeMap<String, String>>,
    action: Option<&ActionJson>,
    space: Arc<GSimplicialSet>,
    m: CoefficientSystem,
) -> Result<GroupTwist> {
    let orbit = space.orbit_category().clone();
    let c = space.complex();
    let grp = group_from_json(group)?;
    let pi = OGGroup::constant(orbit.clone(), &grp);
    let mut tables = vec![BTreeMap::new(); orbit.num_objects()];
    for (key, table) in values {
        let h = orbit.object_by_key(key)?;
        for (name, elem) in table {
            tables[h].insert(c.get(name)?, grp.element(elem)?);
        }
    }
    let tau = TwistingFunction::new(space.clone(), pi.clone(), tables)?;
    let phi = pi_module_from_json(action, pi, m)?;
    GroupTwist::new(tau, phi)
}

pub fn twist_from_json(
    t: Option<&TwistJson>,
    action: Option<&ActionJson>,
    space: Arc<GSimplicialSet>,
    m: CoefficientSystem,
) -> Result<Box<dyn Twist>> {
    let orbit = space.orbit_category().clone();
    let c = space.complex();
    match t {
        None => {
            if action.is_some() {
                return Err(Error::Parse("an action file needs a twist file".into()));
            }
            Ok(Box::new(Untwisted::new(space, m)?))
        }
        Some(TwistJson::Group { group, values }) => {
            Ok(Box::new(group_twist_from_json(group, values, action, space, m)?))
        }
        Some(TwistJson::Kappa {
            basepoint,
            paths,
            edge_action,
        }) => {
            if action.is_some() {
                return Err(Error::Parse("an edge twist carries its own edge_action".into()));
            }
            let mut given = BTreeMap::new();
            for (name, steps) in paths {
                let steps = steps
                    .iter()
                    .map(|(e, o)| {
                        let forward = match o.as_str() {
                            "+" => true,
                            "-" => false,
                            other => return Err(Error::Parse(format!("orientation `{other}` is not + or -"))),
                        };
                        Ok(EdgeStep {
                            edge: c.get(e)?,
                            forward,
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                given.insert(c.get(name)?, EdgeWord { steps });
            }
            let kappa = Kappa::new(space.clone(), c.get(basepoint)?, given)?;
            let mut maps = vec![BTreeMap::new(); orbit.num_objects()];
            for (key, table) in edge_action {
                let h = orbit.object_by_key(key)?;
                let a = m.value(h);
                for (e, rows) in table {
                    let mat = matrix_from_json(rows, (a.n_gens(), a.n_gens()), e)?;
                    maps[h].insert(c.get(e)?, AbHom::new(a.clone(), a.clone(), mat)?);
                }
            }
            let action = EdgeAction::new(space, m, maps)?;
            Ok(Box::new(EdgeTwist::new(kappa, action)))
        }
    }
}

/// Raw JSON texts of one computation; `group` defaults to the trivial group.
#[derive(Debug, Clone, Default)]
pub struct Sources {
    pub complex: (String, String),
    pub group: Option<(String, String)>,
    pub coeffs: Option<(String, String)>,
    pub twist: Option<(String, String)>,
    pub action: Option<(String, String)>,
}

impl Sources {
    /// Reads each path; the first component of every pair is its origin for diagnostics.
    pub fn from_paths(
        complex: &Path,
        group: Option<&Path>,
        coeffs: Option<&Path>,
        twist: Option<&Path>,
        action: Option<&Path>,
    ) -> Result<Self> {
        let load = |p: &Path| -> Result<(String, String)> {
            let text = std::fs::read_to_string(p).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?;
            Ok((p.display().to_string(), text))
        };
        Ok(Self {
            complex: load(complex)?,
            group: group.map(load).transpose()?,
            coeffs: coeffs.map(load).transpose()?,
            twist: twist.map(load).transpose()?,
            action: action.map(load).transpose()?,
        })
    }

    /// Parses every text before building anything.
    pub fn parse(&self) -> Result<Parsed> {
        Ok(Parsed {
            complex: parse(&self.complex.1, &self.complex.0)?,
            group: self.group.as_ref().map(|g| parse(&g.1, &g.0)).transpose()?,
            coeffs: self.coeffs.as_ref().map(|g| parse(&g.1, &g.0)).transpose()?,
            twist: self.twist.as_ref().map(|g| parse(&g.1, &g.0)).transpose()?,
            action: self.action.as_ref().map(|g| parse(&g.1, &g.0)).transpose()?,
        })
    }
}

#[derive(Debug, Clone)]
pub struct Parsed {
    pub complex: ComplexJson,
    pub group: Option<GroupJson>,
    pub coeffs: Option<CoeffsJson>,
    pub twist: Option<TwistJson>,
    pub action: Option<ActionJson>,
}

impl Parsed {
    /// Without a group file the action table is dropped and `X` is taken with
    /// the trivial group.
    pub fn space(&self) -> Result<Arc<GSimplicialSet>> {
        match &self.group {
            Some(g) => Ok(Arc::new(g_complex_from_json(&self.complex, group_from_json(g)?)?)),
            None => {
                let plain = ComplexJson {
                    action: BTreeMap::new(),
                    ..self.complex.clone()
                };
                Ok(Arc::new(g_complex_from_json(&plain, FiniteGroup::trivial())?))
            }
        }
    }

    /// Space, coefficients and twist; coefficients are required.
    pub fn twist(&self) -> Result<Box<dyn Twist>> {
        let space = self.space()?;
        let coeffs = self
            .coeffs
            .as_ref()
            .ok_or_else(|| Error::Parse("coefficients are required".into()))?;
        let m = coeffs_from_json(coeffs, space.orbit_category().clone())?;
        twist_from_json(self.twist.as_ref(), self.action.as_ref(), space, m)
    }

    /// The twist when it is group-valued; an error for edge-path twists.
    pub fn group_twist(&self) -> Result<GroupTwist> {
        let space = self.space()?;
        let coeffs = self
            .coeffs
            .as_ref()
            .ok_or_else(|| Error::Parse("coefficients are required".into()))?;
        let m = coeffs_from_json(coeffs, space.orbit_category().clone())?;
        match &self.twist {
            Some(TwistJson::Group { group, values }) => {
                group_twist_from_json(group, values, self.action.as_ref(), space, m)
            }
            _ => Err(Error::Invalid("not a group-valued twist".into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_errors_name_the_origin() {
        let err = parse::<ComplexJson>("{ \"truncation\": 1, ", "x.json").unwrap_err();
        assert!(matches!(err, Error::Parse(ref s) if s.starts_with("x.json")));
    }

    #[test]
    fn abelian_names() {
        assert_eq!(parse_abelian("Z/4").unwrap().order(), Some(BigInt::from(4)));
        assert_eq!(parse_abelian("Z2").unwrap().order(), Some(BigInt::from(2)));
        assert!(parse_abelian("Z^2").unwrap().order().is_none());
        assert!(parse_abelian("Q").is_err());
    }
}
