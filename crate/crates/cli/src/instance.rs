//! Instance files: one JSON document naming every object a command can act
//! on.
//!
//! Groups are full multiplication tables, modules are invariant factors plus
//! action matrices on a generating set, crossed modules and the optional
//! simplicial group refer to groups by name, and 3-cocycles are value tables
//! over the homotopy data of a named crossed module. Resolution checks each
//! entry with the underlying library and reports the first failure with a
//! JSON path into the file.

use std::collections::BTreeMap;
use std::path::Path;

use abelian_core::{FPAbelianGroup, IntMatrix};
use crossed_core::{homotopy, Cpt3Cocycle, CrossedModule, HomotopyData};
use group_core::{BarCochain, FiniteGroup, GModule, GroupHom};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use simplicial_core::{validate_tsg, TruncatedSimplicialGroup, TsgData};

use crate::error::CliError;

/// The on-disk shape of an instance file. Every section is optional and
/// names are unique within their section.
#[derive(Clone, Debug, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub groups: BTreeMap<String, GroupSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub modules: BTreeMap<String, ModuleSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub crossed_modules: BTreeMap<String, CrossedModuleSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tsg: Option<TsgSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub cocycles3: BTreeMap<String, Cocycle3Spec>,
}

/// A finite group as a multiplication table; row `x`, column `y` holds `x·y`
/// and index 0 is the identity.
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    pub table: Vec<Vec<usize>>,
}

/// A finitely generated abelian group in invariant-factor form, acted on by
/// a named finite group through matrices given on a generating set. An empty
/// `action` list means the trivial action.
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    pub acting_group: String,
    /// Canonical invariant factors; 0 stands for a free factor.
    pub invariant_factors: Vec<u64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub action: Vec<GeneratorAction>,
}

/// One element's matrix. Entry `matrix[i][j]` is the coefficient of the i-th
/// generator in the image of the j-th generator, so matrices multiply
/// coordinate columns from the left.
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorAction {
    pub element: usize,
    pub matrix: Vec<Vec<i64>>,
}

/// A crossed module: group-part and module-part names, the structure map as
/// a table, and one permutation of the module part per group element.
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct CrossedModuleSpec {
    pub group: String,
    pub module: String,
    pub mu: Vec<usize>,
    pub action: Vec<Vec<usize>>,
}

/// A 2-truncated simplicial group: three level names and the face and
/// degeneracy maps as tables. `faces_one[i]` is the i-th face out of level
/// one, `faces_two[i]` out of level two, and `degeneracies_one[i]` the i-th
/// degeneracy into level two.
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct TsgSpec {
    pub levels: [String; 3],
    pub faces_one: [Vec<usize>; 2],
    pub faces_two: [Vec<usize>; 3],
    pub degeneracy_zero: Vec<usize>,
    pub degeneracies_one: [Vec<usize>; 2],
}

/// A 3-cocycle over the homotopy data of a named crossed module.
/// `values[r][q][p]` holds the π₁ coordinates at the tuple (r, q, p).
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct Cocycle3Spec {
    pub crossed_module: String,
    pub values: Vec<Vec<Vec<Vec<i64>>>>,
}

/// Everything in an instance file, checked and in working form. Homotopy
/// data is computed once per crossed module so cocycles and commands agree
/// on π₀ and π₁ indexing.
pub struct ResolvedInstance {
    pub groups: BTreeMap<String, FiniteGroup>,
    pub modules: BTreeMap<String, GModule>,
    pub crossed: BTreeMap<String, CrossedModule>,
    pub homotopy: BTreeMap<String, HomotopyData>,
    pub tsg: Option<TruncatedSimplicialGroup>,
    pub cocycles: BTreeMap<String, NamedCocycle>,
}

/// A resolved 3-cocycle together with the crossed module it lives over.
pub struct NamedCocycle {
    pub crossed_module: String,
    pub cocycle: Cpt3Cocycle,
}

/// Reads and parses a file without resolving it.
pub fn parse(path: &Path) -> Result<InstanceFile, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|e| CliError::Parse {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

/// Reads, parses, and resolves a file.
pub fn load(path: &Path) -> Result<ResolvedInstance, CliError> {
    resolve(&parse(path)?)
}

/// Checks every entry and builds the working objects.
pub fn resolve(file: &InstanceFile) -> Result<ResolvedInstance, CliError> {
    let mut groups = BTreeMap::new();
    for (name, spec) in &file.groups {
        let g = FiniteGroup::validate_group(&spec.table)
            .map_err(|e| CliError::schema(format!("groups.{name}.table"), e))?;
        groups.insert(name.clone(), g);
    }

    let mut modules = BTreeMap::new();
    for (name, spec) in &file.modules {
        let group = groups.get(&spec.acting_group).ok_or_else(|| {
            CliError::schema(
                format!("modules.{name}.acting_group"),
                format!("unknown group '{}'", spec.acting_group),
            )
        })?;
        let factors: Vec<BigInt> = spec.invariant_factors.iter().map(|&f| BigInt::from(f)).collect();
        let coeffs = FPAbelianGroup::new(factors)
            .map_err(|e| CliError::schema(format!("modules.{name}.invariant_factors"), e))?;
        let module = if spec.action.is_empty() {
            GModule::trivial(group.clone(), coeffs)
        } else {
            expand_action(group, coeffs, &spec.action)
                .map_err(|e| CliError::schema(format!("modules.{name}.action"), e))?
        };
        modules.insert(name.clone(), module);
    }

    let mut crossed = BTreeMap::new();
    let mut homotopy_map = BTreeMap::new();
    for (name, spec) in &file.crossed_modules {
        let group = groups.get(&spec.group).ok_or_else(|| {
            CliError::schema(
                format!("crossed_modules.{name}.group"),
                format!("unknown group '{}'", spec.group),
            )
        })?;
        let module = groups.get(&spec.module).ok_or_else(|| {
            CliError::schema(
                format!("crossed_modules.{name}.module"),
                format!("unknown group '{}'", spec.module),
            )
        })?;
        let mu = GroupHom::new(module.clone(), group.clone(), spec.mu.clone())
            .map_err(|e| CliError::schema(format!("crossed_modules.{name}.mu"), e))?;
        let v = CrossedModule::new(mu, spec.action.clone())
            .map_err(|e| CliError::schema(format!("crossed_modules.{name}"), e))?;
        let h = homotopy(&v).map_err(|e| CliError::schema(format!("crossed_modules.{name}"), e))?;
        crossed.insert(name.clone(), v);
        homotopy_map.insert(name.clone(), h);
    }

    let tsg = match &file.tsg {
        None => None,
        Some(spec) => Some(resolve_tsg(spec, &groups)?),
    };

    let mut cocycles = BTreeMap::new();
    for (name, spec) in &file.cocycles3 {
        let h = homotopy_map.get(&spec.crossed_module).ok_or_else(|| {
            CliError::schema(
                format!("cocycles3.{name}.crossed_module"),
                format!("unknown crossed module '{}'", spec.crossed_module),
            )
        })?;
        let n = h.pi0().order();
        let rank = h.pi1().rank();
        let shaped = spec.values.len() == n
            && spec.values.iter().all(|q| {
                q.len() == n
                    && q.iter()
                        .all(|p| p.len() == n && p.iter().all(|c| c.len() == rank))
            });
        if !shaped {
            return Err(CliError::schema(
                format!("cocycles3.{name}.values"),
                format!("expected a {n}x{n}x{n} table of length-{rank} coordinate vectors"),
            ));
        }
        let table = BarCochain::from_fn(h.module(), 3, |t| {
            let coords = spec.values[t[0]][t[1]][t[2]].iter().map(|&c| BigInt::from(c)).collect();
            h.pi1().element(coords)
        })
        .map_err(|e| CliError::schema(format!("cocycles3.{name}.values"), e))?;
        let cocycle = Cpt3Cocycle::new(table)
            .map_err(|e| CliError::schema(format!("cocycles3.{name}.values"), e))?;
        cocycles.insert(
            name.clone(),
            NamedCocycle {
                crossed_module: spec.crossed_module.clone(),
                cocycle,
            },
        );
    }

    Ok(ResolvedInstance {
        groups,
        modules,
        crossed,
        homotopy: homotopy_map,
        tsg,
        cocycles,
    })
}

/// Extends matrices on a generating set to the whole group by M(x·s) =
/// M(x)·M(s); the library then validates the result as an action.
fn expand_action(
    group: &FiniteGroup,
    coeffs: FPAbelianGroup,
    gens: &[GeneratorAction],
) -> Result<GModule, String> {
    let n = group.order();
    let rank = coeffs.rank();
    let mut given: BTreeMap<usize, IntMatrix> = BTreeMap::new();
    for ga in gens {
        if ga.element >= n {
            return Err(format!(
                "element {} is out of range for a group of order {n}",
                ga.element
            ));
        }
        if ga.matrix.len() != rank || ga.matrix.iter().any(|row| row.len() != rank) {
            return Err(format!("the matrix for element {} is not {rank}x{rank}", ga.element));
        }
        let rows: Vec<&[i64]> = ga.matrix.iter().map(|r| r.as_slice()).collect();
        if given.insert(ga.element, IntMatrix::from_rows(&rows)).is_some() {
            return Err(format!("element {} has two matrices", ga.element));
        }
    }
    let mut matrices: Vec<Option<IntMatrix>> = vec![None; n];
    matrices[group.identity()] = Some(IntMatrix::identity(rank));
    let mut queue = vec![group.identity()];
    while let Some(x) = queue.pop() {
        let mx = matrices[x].clone().expect("queued elements carry a matrix");
        for (&s, ms) in &given {
            let y = group.mul(x, s);
            if matrices[y].is_none() {
                matrices[y] = Some(mx.mul(ms));
                queue.push(y);
            }
        }
    }
    let mut full = Vec::with_capacity(n);
    for (x, m) in matrices.into_iter().enumerate() {
        match m {
            Some(m) => full.push(m),
            None => {
                return Err(format!(
                    "the listed elements do not generate: element {x} is unreachable"
                ))
            }
        }
    }
    GModule::new(group.clone(), coeffs, full).map_err(|e| e.to_string())
}

fn resolve_tsg(
    spec: &TsgSpec,
    groups: &BTreeMap<String, FiniteGroup>,
) -> Result<TruncatedSimplicialGroup, CliError> {
    let level = |i: usize| -> Result<FiniteGroup, CliError> {
        groups.get(&spec.levels[i]).cloned().ok_or_else(|| {
            CliError::schema(
                format!("tsg.levels[{i}]"),
                format!("unknown group '{}'", spec.levels[i]),
            )
        })
    };
    let (l0, l1, l2) = (level(0)?, level(1)?, level(2)?);
    let hom = |label: &str, src: &FiniteGroup, dst: &FiniteGroup, map: &[usize]| {
        GroupHom::new(src.clone(), dst.clone(), map.to_vec())
            .map_err(|e| CliError::schema(format!("tsg.{label}"), e))
    };
    let data = TsgData {
        levels: [l0.clone(), l1.clone(), l2.clone()],
        faces_one: [
            hom("faces_one[0]", &l1, &l0, &spec.faces_one[0])?,
            hom("faces_one[1]", &l1, &l0, &spec.faces_one[1])?,
        ],
        faces_two: [
            hom("faces_two[0]", &l2, &l1, &spec.faces_two[0])?,
            hom("faces_two[1]", &l2, &l1, &spec.faces_two[1])?,
            hom("faces_two[2]", &l2, &l1, &spec.faces_two[2])?,
        ],
        degeneracy_zero: hom("degeneracy_zero", &l0, &l1, &spec.degeneracy_zero)?,
        degeneracies_one: [
            hom("degeneracies_one[0]", &l1, &l2, &spec.degeneracies_one[0])?,
            hom("degeneracies_one[1]", &l1, &l2, &spec.degeneracies_one[1])?,
        ],
    };
    validate_tsg(data).map_err(|e| CliError::schema("tsg", e))
}

/// Writes a truncated simplicial group back into on-disk form, together with
/// its three level groups, as a standalone instance.
#[must_use]
pub fn tsg_instance(g: &TruncatedSimplicialGroup, prefix: &str) -> InstanceFile {
    let table = |h: &FiniteGroup| GroupSpec {
        table: (0..h.order())
            .map(|x| (0..h.order()).map(|y| h.mul(x, y)).collect())
            .collect(),
    };
    let names = [format!("{prefix}0"), format!("{prefix}1"), format!("{prefix}2")];
    let mut groups = BTreeMap::new();
    for (i, name) in names.iter().enumerate() {
        groups.insert(name.clone(), table(g.level(i)));
    }
    let spec = TsgSpec {
        levels: names,
        faces_one: [g.face(1, 0).map().to_vec(), g.face(1, 1).map().to_vec()],
        faces_two: [
            g.face(2, 0).map().to_vec(),
            g.face(2, 1).map().to_vec(),
            g.face(2, 2).map().to_vec(),
        ],
        degeneracy_zero: g.degeneracy(0, 0).map().to_vec(),
        degeneracies_one: [g.degeneracy(1, 0).map().to_vec(), g.degeneracy(1, 1).map().to_vec()],
    };
    InstanceFile {
        groups,
        tsg: Some(spec),
        ..InstanceFile::default()
    }
}
