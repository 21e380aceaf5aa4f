//! The subcommands. Each one loads an instance, resolves its target and
//! coefficients, runs the computation, and fills a [`Report`].
//!
//! Commands that act on a crossed module pick the file's only one unless
//! `--target` names it; files with a simplicial group and no crossed module
//! fall back to the simplicial group where that makes sense. Coefficients
//! are either a module name from the file or the shorthand `Z`, `Z/n`, `Zn`
//! for cyclic groups with the trivial action.

use std::path::{Path, PathBuf};

use abelian_core::FPAbelianGroup;
use cm_cohomology::{em_groups, em_h2, CmComplex};
use crossed_core::{postnikov, CrossedModule, HomotopyData};
use group_core::GModule;
use simplicial_core::{cosk1, homotopy01, truncate1, AnalysedComplex, TruncatedSimplicialGroup};
use std_extension::{axiom_sample_check_capped, StandardExtensionObj, DEFAULT_WORD_CAP};

use crate::error::CliError;
use crate::instance::{self, NamedCocycle, ResolvedInstance};
use crate::report::{render_finite_group, render_group, Report};

/// A parsed invocation, free of argument-parsing machinery so tests can call
/// straight in.
#[derive(Clone, Debug)]
pub enum Request {
    Validate,
    Homotopy {
        target: Option<String>,
    },
    Cohomology {
        dim: usize,
        coeffs: String,
        target: Option<String>,
    },
    Postnikov {
        target: Option<String>,
    },
    EmH2 {
        coeffs: String,
        z3: Option<String>,
        target: Option<String>,
    },
    CompareEm {
        z3: Vec<String>,
        coeffs: String,
    },
    Coskeleton {
        target: Option<String>,
        emit: Option<PathBuf>,
    },
    Truncate,
    StdExt {
        z3: String,
        seed: Option<u64>,
        count: Option<usize>,
        word_cap: Option<usize>,
    },
}

impl Request {
    /// The canonical echo of the invocation, flags in a fixed order.
    #[must_use]
    pub fn echo(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        match self {
            Request::Validate => parts.push("validate".into()),
            Request::Homotopy { target } => {
                parts.push("homotopy".into());
                push_target(&mut parts, target);
            }
            Request::Cohomology { dim, coeffs, target } => {
                parts.push(format!("cohomology --dim {dim} --coeffs {coeffs}"));
                push_target(&mut parts, target);
            }
            Request::Postnikov { target } => {
                parts.push("postnikov".into());
                push_target(&mut parts, target);
            }
            Request::EmH2 { coeffs, z3, target } => {
                parts.push(format!("em-h2 --coeffs {coeffs}"));
                if let Some(z) = z3 {
                    parts.push(format!("--z3 {z}"));
                }
                push_target(&mut parts, target);
            }
            Request::CompareEm { z3, coeffs } => {
                parts.push("compare-em".into());
                for z in z3 {
                    parts.push(format!("--z3 {z}"));
                }
                parts.push(format!("--coeffs {coeffs}"));
            }
            Request::Coskeleton { target, emit } => {
                parts.push("coskeleton".into());
                push_target(&mut parts, target);
                if let Some(path) = emit {
                    parts.push(format!("--emit {}", path.display()));
                }
            }
            Request::Truncate => parts.push("truncate".into()),
            Request::StdExt {
                z3,
                seed,
                count,
                word_cap,
            } => {
                parts.push(format!("std-ext --z3 {z3}"));
                if let Some(s) = seed {
                    parts.push(format!("--seed {s}"));
                }
                if let Some(c) = count {
                    parts.push(format!("--count {c}"));
                }
                if let Some(w) = word_cap {
                    parts.push(format!("--word-cap {w}"));
                }
            }
        }
        parts.join(" ")
    }
}

fn push_target(parts: &mut Vec<String>, target: &Option<String>) {
    if let Some(t) = target {
        parts.push(format!("--target {t}"));
    }
}

/// Loads the file and runs one request against it.
pub fn run(path: &Path, request: &Request) -> Result<Report, CliError> {
    let inst = instance::load(path)?;
    let mut report = Report::new(request.echo(), path.display().to_string());
    match request {
        Request::Validate => cmd_validate(&inst, &mut report),
        Request::Homotopy { target } => cmd_homotopy(&inst, &mut report, target.as_deref())?,
        Request::Cohomology { dim, coeffs, target } => {
            cmd_cohomology(&inst, &mut report, *dim, coeffs, target.as_deref())?;
        }
        Request::Postnikov { target } => cmd_postnikov(&inst, &mut report, target.as_deref())?,
        Request::EmH2 { coeffs, z3, target } => {
            cmd_em_h2(&inst, &mut report, coeffs, z3.as_deref(), target.as_deref())?;
        }
        Request::CompareEm { z3, coeffs } => cmd_compare_em(&inst, &mut report, z3, coeffs)?,
        Request::Coskeleton { target, emit } => {
            cmd_coskeleton(&inst, &mut report, target.as_deref(), emit.as_deref())?;
        }
        Request::Truncate => cmd_truncate(&inst, &mut report)?,
        Request::StdExt {
            z3,
            seed,
            count,
            word_cap,
        } => cmd_std_ext(&inst, &mut report, z3, *seed, *count, *word_cap)?,
    }
    Ok(report)
}

fn compute(e: impl ToString) -> CliError {
    CliError::Compute(e.to_string())
}

/// The crossed module a command acts on: the named one, or the file's only
/// one.
fn crossed_target<'a>(
    inst: &'a ResolvedInstance,
    target: Option<&'a str>,
) -> Result<(&'a str, &'a CrossedModule, &'a HomotopyData), CliError> {
    let name = match target {
        Some(name) => {
            if !inst.crossed.contains_key(name) {
                return Err(CliError::Usage(format!(
                    "the file defines no crossed module named '{name}'"
                )));
            }
            name
        }
        None => match inst.crossed.len() {
            0 => return Err(CliError::Usage("the file defines no crossed modules".into())),
            1 => inst.crossed.keys().next().expect("len is 1").as_str(),
            _ => {
                return Err(CliError::Usage(
                    "the file defines several crossed modules; pick one with --target".into(),
                ))
            }
        },
    };
    Ok((name, &inst.crossed[name], &inst.homotopy[name]))
}

enum Subject<'a> {
    Crossed(&'a str, &'a CrossedModule, &'a HomotopyData),
    Simplicial(&'a TruncatedSimplicialGroup, HomotopyData),
}

/// Crossed modules take precedence; a file with only a simplicial group is
/// read through that instead.
fn subject<'a>(
    inst: &'a ResolvedInstance,
    target: Option<&'a str>,
) -> Result<Subject<'a>, CliError> {
    if target.is_some() || !inst.crossed.is_empty() {
        let (name, v, h) = crossed_target(inst, target)?;
        return Ok(Subject::Crossed(name, v, h));
    }
    match &inst.tsg {
        Some(g) => Ok(Subject::Simplicial(g, homotopy01(g).map_err(compute)?)),
        None => Err(CliError::Usage(
            "the file defines neither a crossed module nor a simplicial group".into(),
        )),
    }
}

/// "Z", "Z/n", and "Zn" give cyclic coefficients with the trivial action;
/// n = 0 or absent gives the integers.
fn shorthand_cyclic(name: &str) -> Option<u64> {
    if name == "Z" {
        return Some(0);
    }
    let digits = name.strip_prefix("Z/").or_else(|| name.strip_prefix('Z'))?;
    digits.parse::<u64>().ok()
}

/// Resolves a coefficient name against the file, shorthand first, and checks
/// the acting group is π₀ of the target.
fn coefficients(
    inst: &ResolvedInstance,
    h: &HomotopyData,
    name: &str,
) -> Result<(GModule, String), CliError> {
    if let Some(n) = shorthand_cyclic(name) {
        let coeffs = if n == 1 {
            FPAbelianGroup::trivial()
        } else {
            FPAbelianGroup::cyclic(n)
        };
        let desc = format!("coefficients {} with the trivial action", render_group(&coeffs));
        return Ok((GModule::trivial(h.pi0().clone(), coeffs), desc));
    }
    match inst.modules.get(name) {
        Some(m) => {
            if m.group() != h.pi0() {
                return Err(CliError::Usage(format!(
                    "module '{name}' acts through a group that differs from pi0 of the target"
                )));
            }
            Ok((m.clone(), format!("coefficients '{name}' = {}", render_group(m.coeffs()))))
        }
        None => Err(CliError::Usage(format!(
            "'{name}' is neither a module in the file nor of the form Z or Z/n"
        ))),
    }
}

fn named_cocycle<'a>(
    inst: &'a ResolvedInstance,
    z3: &str,
    target: &str,
) -> Result<&'a NamedCocycle, CliError> {
    let c = inst
        .cocycles
        .get(z3)
        .ok_or_else(|| CliError::Usage(format!("the file defines no 3-cocycle named '{z3}'")))?;
    if c.crossed_module != target {
        return Err(CliError::Usage(format!(
            "cocycle '{z3}' lives over crossed module '{}', not '{target}'",
            c.crossed_module
        )));
    }
    Ok(c)
}

fn cmd_validate(inst: &ResolvedInstance, report: &mut Report) {
    for (name, g) in &inst.groups {
        report.note(format!("group '{name}': order {}", g.order()));
    }
    for (name, m) in &inst.modules {
        report.note(format!(
            "module '{name}': {} over a group of order {}",
            render_group(m.coeffs()),
            m.group().order()
        ));
    }
    for (name, v) in &inst.crossed {
        report.note(format!(
            "crossed module '{name}': module part order {}, group part order {}",
            v.module_part().order(),
            v.group_part().order()
        ));
    }
    if let Some(g) = &inst.tsg {
        report.note(format!(
            "tsg: level orders {}, {}, {}",
            g.level(0).order(),
            g.level(1).order(),
            g.level(2).order()
        ));
    }
    for (name, c) in &inst.cocycles {
        report.note(format!("cocycle3 '{name}': over crossed module '{}'", c.crossed_module));
    }
    let objects = inst.groups.len()
        + inst.modules.len()
        + inst.crossed.len()
        + usize::from(inst.tsg.is_some())
        + inst.cocycles.len();
    report.result("objects", objects);
    report.verdict("all objects valid", true);
}

fn cmd_homotopy(
    inst: &ResolvedInstance,
    report: &mut Report,
    target: Option<&str>,
) -> Result<(), CliError> {
    let h = match subject(inst, target)? {
        Subject::Crossed(name, _, h) => {
            report.note(format!("crossed module '{name}'"));
            h.clone()
        }
        Subject::Simplicial(_, h) => {
            report.note("simplicial group");
            h
        }
    };
    report.result("pi0", render_finite_group(h.pi0()));
    report.result("pi1", render_group(h.pi1()));
    Ok(())
}

fn cmd_cohomology(
    inst: &ResolvedInstance,
    report: &mut Report,
    dim: usize,
    coeffs_name: &str,
    target: Option<&str>,
) -> Result<(), CliError> {
    if dim > 2 {
        return Err(CliError::Usage(format!("--dim must be 0, 1, or 2, not {dim}")));
    }
    let group = match subject(inst, target)? {
        Subject::Crossed(name, v, h) => {
            report.note(format!("crossed module '{name}'"));
            let (coeffs, desc) = coefficients(inst, h, coeffs_name)?;
            report.note(desc);
            let cx = CmComplex::new(v, &coeffs).map_err(compute)?;
            cx.cohomology(dim).map_err(compute)?.group().clone()
        }
        Subject::Simplicial(g, h) => {
            report.note("simplicial group");
            let (coeffs, desc) = coefficients(inst, &h, coeffs_name)?;
            report.note(desc);
            let an = AnalysedComplex::new(g, &coeffs).map_err(compute)?;
            an.cohomology(dim).map_err(compute)?.group().clone()
        }
    };
    report.result(format!("H{dim}"), render_group(&group));
    Ok(())
}

fn cmd_postnikov(
    inst: &ResolvedInstance,
    report: &mut Report,
    target: Option<&str>,
) -> Result<(), CliError> {
    let (name, v, h) = crossed_target(inst, target)?;
    report.note(format!("crossed module '{name}'"));
    let k = postnikov(v, h).map_err(compute)?;
    let rep = k.representative();
    let n = h.pi0().order();
    let mut nonzero = 0usize;
    for r in 0..n {
        for q in 0..n {
            for p in 0..n {
                let value = rep.value(r, q, p);
                if !value.is_zero() {
                    nonzero += 1;
                    report.result(format!("z3[{r},{q},{p}]"), format!("{value:?}"));
                }
            }
        }
    }
    report.result("z3 nonzero entries", nonzero);
    report.verdict("k3 trivial", k.is_trivial().map_err(compute)?);
    Ok(())
}

fn cmd_em_h2(
    inst: &ResolvedInstance,
    report: &mut Report,
    coeffs_name: &str,
    z3_name: Option<&str>,
    target: Option<&str>,
) -> Result<(), CliError> {
    let (name, v, h) = crossed_target(inst, target)?;
    report.note(format!("crossed module '{name}'"));
    let (coeffs, desc) = coefficients(inst, h, coeffs_name)?;
    report.note(desc);
    match z3_name {
        None => {
            let cmp = em_h2(v, &coeffs).map_err(compute)?;
            report.result("H2 direct", render_group(&cmp.h2_cm));
            report.result("H2 EM", render_group(&cmp.h2_em));
            report.verdict("isomorphic", cmp.agree);
        }
        Some(zn) => {
            let c = named_cocycle(inst, zn, name)?;
            report.note(format!("cocycle3 '{zn}'"));
            let em = em_groups(h.module(), &c.cocycle, &coeffs).map_err(compute)?;
            report.result("H2 EM", render_group(&em.h2().group));
        }
    }
    Ok(())
}

fn cmd_compare_em(
    inst: &ResolvedInstance,
    report: &mut Report,
    z3: &[String],
    coeffs_name: &str,
) -> Result<(), CliError> {
    if z3.len() != 2 {
        return Err(CliError::Usage(format!(
            "compare-em needs exactly two --z3 flags, got {}",
            z3.len()
        )));
    }
    let a = inst
        .cocycles
        .get(&z3[0])
        .ok_or_else(|| CliError::Usage(format!("the file defines no 3-cocycle named '{}'", z3[0])))?;
    let b = inst
        .cocycles
        .get(&z3[1])
        .ok_or_else(|| CliError::Usage(format!("the file defines no 3-cocycle named '{}'", z3[1])))?;
    if a.crossed_module != b.crossed_module {
        return Err(CliError::Usage(
            "the two cocycles live over different crossed modules".into(),
        ));
    }
    let name = a.crossed_module.as_str();
    let h = &inst.homotopy[name];
    report.note(format!("crossed module '{name}'"));
    let (coeffs, desc) = coefficients(inst, h, coeffs_name)?;
    report.note(desc);
    let ga = em_groups(h.module(), &a.cocycle, &coeffs).map_err(compute)?;
    let gb = em_groups(h.module(), &b.cocycle, &coeffs).map_err(compute)?;
    report.result(format!("H2 EM [{}]", z3[0]), render_group(&ga.h2().group));
    report.result(format!("H2 EM [{}]", z3[1]), render_group(&gb.h2().group));
    report.verdict(
        "isomorphic",
        ga.h2().group.invariant_factors() == gb.h2().group.invariant_factors(),
    );
    Ok(())
}

fn cmd_coskeleton(
    inst: &ResolvedInstance,
    report: &mut Report,
    target: Option<&str>,
    emit: Option<&Path>,
) -> Result<(), CliError> {
    let (name, v, _) = crossed_target(inst, target)?;
    report.note(format!("crossed module '{name}'"));
    let g = cosk1(v).map_err(compute)?;
    for i in 0..3 {
        report.result(format!("level {i} order"), g.level(i).order());
    }
    let seg = truncate1(&g).map_err(compute)?;
    let moore = seg.moore();
    report.result("N1 order", moore.n1_elements().len());
    report.result("N2 order", moore.n2_elements().len());
    report.result("B0 order", moore.b0_elements().len());
    report.result("B1 order", moore.b1_elements().len());
    if let Some(path) = emit {
        let file = instance::tsg_instance(&g, "level");
        let text = serde_json::to_string_pretty(&file).expect("instances serialize");
        std::fs::write(path, text + "\n").map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
        report.note(format!("emitted: {}", path.display()));
    }
    report.verdict(
        "truncation recovers the crossed module",
        equal_crossed(v, seg.crossed()),
    );
    Ok(())
}

/// Table-level equality of crossed modules: both parts, the structure map,
/// and the action.
fn equal_crossed(a: &CrossedModule, b: &CrossedModule) -> bool {
    if a.group_part() != b.group_part() || a.module_part() != b.module_part() {
        return false;
    }
    if a.mu().map() != b.mu().map() {
        return false;
    }
    (0..a.group_part().order())
        .all(|g| (0..a.module_part().order()).all(|m| a.act(g, m) == b.act(g, m)))
}

fn cmd_truncate(inst: &ResolvedInstance, report: &mut Report) -> Result<(), CliError> {
    let g = inst
        .tsg
        .as_ref()
        .ok_or_else(|| CliError::Usage("the file defines no simplicial group".into()))?;
    report.note("simplicial group");
    let seg = truncate1(g).map_err(compute)?;
    let h = homotopy01(g).map_err(compute)?;
    let moore = seg.moore();
    report.result("pi0", render_finite_group(h.pi0()));
    report.result("pi1", render_group(h.pi1()));
    report.result("module part order", seg.crossed().module_part().order());
    report.result("group part order", seg.crossed().group_part().order());
    report.result("N1 order", moore.n1_elements().len());
    report.result("N2 order", moore.n2_elements().len());
    report.result("B0 order", moore.b0_elements().len());
    report.result("B1 order", moore.b1_elements().len());
    Ok(())
}

fn cmd_std_ext(
    inst: &ResolvedInstance,
    report: &mut Report,
    z3: &str,
    seed_flag: Option<u64>,
    count: Option<usize>,
    word_cap: Option<usize>,
) -> Result<(), CliError> {
    let c = inst
        .cocycles
        .get(z3)
        .ok_or_else(|| CliError::Usage(format!("the file defines no 3-cocycle named '{z3}'")))?;
    let name = c.crossed_module.as_str();
    let h = &inst.homotopy[name];
    report.note(format!("crossed module '{name}'"));
    report.note(format!("cocycle3 '{z3}'"));
    let seed = match seed_flag {
        Some(s) => s,
        None => match std::env::var("H2_SEED") {
            Ok(text) => text.trim().parse::<u64>().map_err(|_| {
                CliError::Usage(format!("H2_SEED must be an unsigned integer, not '{text}'"))
            })?,
            Err(_) => 0,
        },
    };
    let count = count.unwrap_or(1000);
    let cap = word_cap.unwrap_or(DEFAULT_WORD_CAP);
    let ext = StandardExtensionObj::new(h.module().clone(), c.cocycle.clone()).map_err(compute)?;
    let recovered = ext.recover_z3().map_err(compute)?;
    let sample = axiom_sample_check_capped(&ext, seed, count, cap);
    report.result("seed", seed);
    report.result("samples", count);
    report.result("word cap", cap);
    report.result("violations", sample.violations.len());
    for v in sample.violations.iter().take(5) {
        report.result("violation", v);
    }
    report.verdict("recovered z3 equals the input", recovered.matches_input);
    report.verdict("axioms hold on all samples", sample.passed());
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shorthand_covers_the_cyclic_spellings() {
        assert_eq!(shorthand_cyclic("Z"), Some(0));
        assert_eq!(shorthand_cyclic("Z/6"), Some(6));
        assert_eq!(shorthand_cyclic("Z2"), Some(2));
        assert_eq!(shorthand_cyclic("Z/0"), Some(0));
        assert_eq!(shorthand_cyclic("negation"), None);
        assert_eq!(shorthand_cyclic("Z/x"), None);
    }

    #[test]
    fn echo_is_canonical() {
        let r = Request::Cohomology {
            dim: 2,
            coeffs: "Z/2".into(),
            target: Some("squaring".into()),
        };
        assert_eq!(r.echo(), "cohomology --dim 2 --coeffs Z/2 --target squaring");
        let r = Request::CompareEm {
            z3: vec!["zero".into(), "diag".into()],
            coeffs: "Z/2".into(),
        };
        assert_eq!(r.echo(), "compare-em --z3 zero --z3 diag --coeffs Z/2");
        let r = Request::StdExt {
            z3: "diag".into(),
            seed: None,
            count: Some(50),
            word_cap: None,
        };
        assert_eq!(r.echo(), "std-ext --z3 diag --count 50");
    }
}
