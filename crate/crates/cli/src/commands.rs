use std::path::Path;

use anyhow::{bail, Context, Result};
use burnside::abgrp::{wedge_det, FinAbGroup};
use burnside::burncalc::{
    self, burn_eq, header_b, header_bc, BurnVerdict, GFilter, Header, Presentation, Verdict,
};
use burnside::io::{self, Ambient, ClassFile, GroupLiteral, SymbolFile, SymbolFlavor};
use burnside::models::{self, ToricGAction};
use burnside::symb::{compress_witnesses, BSymbol, CContext, CSymbol};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{json, Value};

use crate::output::{self, big, pretty};
use crate::{Config, FlavorArg, Format, PresentationArgs};

type Code = u8;

fn emit(cfg: &Config, text: impl FnOnce() -> String, js: impl FnOnce() -> Value) {
    match cfg.format {
        Format::Text => println!("{}", text()),
        Format::Json => println!("{}", pretty(&js())),
    }
}

/// A group literal given inline or as a file.
fn group_literal(arg: &str) -> Result<GroupLiteral> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?
    };
    serde_json::from_str(&text).with_context(|| format!("parsing group literal {arg}"))
}

fn abelian(cfg: &Config, lit: &GroupLiteral) -> Result<FinAbGroup> {
    let a = lit.abelian()?;
    check_order(cfg, a.order() as usize)?;
    Ok(a)
}

fn check_order(cfg: &Config, order: usize) -> Result<()> {
    if order > cfg.max_group_order {
        bail!("group order {order} exceeds --max-group-order {}", cfg.max_group_order);
    }
    Ok(())
}

fn ambient(cfg: &Config, lit: &GroupLiteral) -> Result<Ambient> {
    Ok(lit.load(cfg.max_group_order)?)
}

fn check_size(cfg: &Config, basis: usize, rows: usize) -> Result<()> {
    if basis > cfg.max_basis {
        bail!("basis has {basis} symbols, above --max-basis {}", cfg.max_basis);
    }
    if rows > cfg.max_rows {
        bail!("presentation has {rows} relation rows, above --max-rows {}", cfg.max_rows);
    }
    Ok(())
}

fn pairs(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

fn cached<S, F>(cfg: &Config, header: &Header, build: F) -> Result<Presentation<S>>
where
    S: Serialize + DeserializeOwned + Clone + Eq + std::hash::Hash,
    F: FnOnce() -> burnside::Result<Presentation<S>>,
{
    match &cfg.cache {
        None => {
            eprintln!("cache: disabled");
            Ok(build()?)
        }
        Some(cache) => {
            let (p, hit) = cache.get_or_build(header, build)?;
            eprintln!("cache: {} {}", if hit { "hit" } else { "stored" }, cache.path(header).display());
            Ok(p)
        }
    }
}

fn b_presentation(cfg: &Config, a: &FinAbGroup, n: usize) -> Result<Presentation<BSymbol>> {
    let basis = burncalc::enumerate_b(a, n)?;
    check_size(cfg, basis.len(), basis.len() * pairs(n))?;
    cached(cfg, &header_b(a, n), || burncalc::present_b(a, n))
}

fn bc_presentation(cfg: &Config, ctx: &CContext, n: usize, filter: Option<&GFilter>) -> Result<Presentation<CSymbol>> {
    let basis = ctx.enumerate(n)?;
    let rows: usize = basis.iter().map(|s| pairs(s.len()) + 2).sum();
    check_size(cfg, basis.len(), rows)?;
    cached(cfg, &header_bc(ctx, n, filter), || burncalc::present_bc(ctx, n, filter))
}

fn filter(amb: &Ambient, path: Option<&Path>) -> Result<Option<GFilter>> {
    Ok(match path {
        Some(p) => Some(io::read_filter(amb, p)?),
        None => None,
    })
}

fn torsion_text(t: &[impl ToString]) -> String {
    format!("[{}]", t.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
}

pub fn present(cfg: &Config, p: &PresentationArgs) -> Result<Code> {
    let lit = group_literal(p.group.as_deref().context("--group is required")?)?;
    let n = p.n.context("--n is required")?;
    let flavor = p.flavor.unwrap_or(FlavorArg::B);
    let (name, header, basis, rows, (free, torsion)) = match flavor {
        FlavorArg::B => {
            if p.filter.is_some() {
                bail!("--filter applies to the bc flavor");
            }
            let pres = b_presentation(cfg, &abelian(cfg, &lit)?, n)?;
            ("b", pres.header.clone(), pres.basis().len(), pres.relations().len(), pres.invariants())
        }
        FlavorArg::Bc => {
            let amb = ambient(cfg, &lit)?;
            let f = filter(&amb, p.filter.as_deref())?;
            let pres = bc_presentation(cfg, &amb.ctx, n, f.as_ref())?;
            ("bc", pres.header.clone(), pres.basis().len(), pres.relations().len(), pres.invariants())
        }
        FlavorArg::K => bail!("present takes the b or bc flavor"),
    };
    emit(
        cfg,
        || {
            let mut lines = vec![format!("flavor: {name}"), format!("group: {}", header.group), format!("n: {n}")];
            if let Some(f) = &header.filter {
                lines.push(format!("filter: {f}"));
            }
            lines.push(format!("basis: {basis}"));
            lines.push(format!("relations: {rows}"));
            lines.push(format!("free_rank: {free}, torsion: {}", torsion_text(&torsion)));
            lines.join("\n")
        },
        || {
            json!({
                "flavor": name,
                "group": header.group,
                "n": n,
                "filter": header.filter,
                "basis": basis,
                "relations": rows,
                "free_rank": free,
                "torsion": torsion.iter().map(big).collect::<Vec<_>>(),
            })
        },
    );
    Ok(0)
}

pub fn class(cfg: &Config, action: &Path) -> Result<Code> {
    let act = io::read_action(action)?;
    check_order(cfg, act.group().order() as usize)?;
    let c = act.class_b()?;
    emit(cfg, || c.to_string(), || serde_json::to_value(ClassFile::from_b(act.group(), act.n(), &c)).unwrap());
    Ok(0)
}

fn verdict_code(v: &Verdict) -> Code {
    if v.is_equal() {
        0
    } else {
        1
    }
}

pub fn eq(cfg: &Config, p: &PresentationArgs, lhs: &Path, rhs: &Path) -> Result<Code> {
    let l = ClassFile::read(lhs)?;
    let r = ClassFile::read(rhs)?;
    let lit = match &p.group {
        Some(g) => group_literal(g)?,
        None => l.group.clone(),
    };
    let n = p.n.unwrap_or(l.n);
    if l.n != n || r.n != n {
        bail!("class dimensions {} and {} do not match n = {n}", l.n, r.n);
    }
    let flavor = p.flavor.unwrap_or(match l.flavor {
        SymbolFlavor::B => FlavorArg::B,
        SymbolFlavor::C => FlavorArg::Bc,
        SymbolFlavor::K => FlavorArg::K,
    });
    match flavor {
        FlavorArg::B => {
            if p.filter.is_some() {
                bail!("--filter applies to the bc and k flavors");
            }
            let a = abelian(cfg, &lit)?;
            if l.group.abelian()? != a || r.group.abelian()? != a {
                bail!("class files are over a different group");
            }
            let pres = b_presentation(cfg, &a, n)?;
            let v = pres.class_eq(&l.to_b()?, &r.to_b()?)?;
            emit(cfg, || output::verdict_text(&v), || output::verdict_json(&v));
            Ok(verdict_code(&v))
        }
        FlavorArg::Bc => {
            let amb = ambient(cfg, &lit)?;
            let f = filter(&amb, p.filter.as_deref())?;
            let pres = bc_presentation(cfg, &amb.ctx, n, f.as_ref())?;
            let v = pres.class_eq(&l.to_c(&amb)?, &r.to_c(&amb)?)?;
            emit(cfg, || output::verdict_text(&v), || output::verdict_json(&v));
            Ok(verdict_code(&v))
        }
        FlavorArg::K => {
            let amb = ambient(cfg, &lit)?;
            let f = filter(&amb, p.filter.as_deref())?;
            let pres = bc_presentation(cfg, &amb.ctx, n, f.as_ref())?;
            let v = burn_eq(&pres, &l.to_k(&amb)?, &r.to_k(&amb)?)?;
            let code = match &v {
                BurnVerdict::Equal => 0,
                BurnVerdict::Distinct { .. } => 1,
                BurnVerdict::Unknown => 3,
            };
            emit(
                cfg,
                || match &v {
                    BurnVerdict::Equal => "Equal".into(),
                    BurnVerdict::Distinct { image } => format!("Distinct\nimage: {}", output::image_text(image)),
                    BurnVerdict::Unknown => "Unknown".into(),
                },
                || match &v {
                    BurnVerdict::Equal => json!({ "verdict": "equal" }),
                    BurnVerdict::Distinct { image } => json!({ "verdict": "distinct", "image": output::image_json(image) }),
                    BurnVerdict::Unknown => json!({ "verdict": "unknown" }),
                },
            );
            Ok(code)
        }
    }
}

pub fn blowup(cfg: &Config, action: &Path, cone: &[usize], out: Option<&Path>) -> Result<Code> {
    let act = io::read_action(action)?;
    check_order(cfg, act.group().order() as usize)?;
    let (new, ray) = act.star_subdivide(cone)?;
    let before = act.class_b()?;
    let after = new.class_b()?;
    let pres = b_presentation(cfg, act.group(), act.n())?;
    let v = pres.class_eq(&before, &after)?;
    let new_json = io::action_json(&new);
    if let Some(path) = out {
        std::fs::write(path, pretty(&new_json) + "\n").with_context(|| format!("writing {}", path.display()))?;
    }
    emit(
        cfg,
        || format!("ray: {ray}\nbefore: {before}\nafter: {after}\nverdict: {}", output::verdict_text(&v)),
        || {
            json!({
                "ray": ray,
                "action": new_json,
                "before": ClassFile::from_b(act.group(), act.n(), &before),
                "after": ClassFile::from_b(act.group(), act.n(), &after),
                "result": output::verdict_json(&v),
            })
        },
    );
    Ok(verdict_code(&v))
}

pub fn det(cfg: &Config, action: &Path) -> Result<Code> {
    let act: ToricGAction = io::read_action(action)?;
    check_order(cfg, act.group().order() as usize)?;
    let rows: Vec<(Vec<usize>, Vec<Vec<u64>>, burnside::abgrp::WedgeClass)> = act
        .fixed_points()
        .into_iter()
        .map(|(cone, w)| {
            let d = wedge_det(act.group(), &w);
            (cone, w.into_iter().map(|c| c.0).collect(), d)
        })
        .collect();
    emit(
        cfg,
        || {
            if rows.is_empty() {
                return "no isolated fixed points".into();
            }
            rows.iter().map(|(cone, _, d)| format!("{cone:?}: {d}")).collect::<Vec<_>>().join("\n")
        },
        || {
            rows.iter()
                .map(|(cone, w, d)| json!({ "cone": cone, "weights": w, "det": d.sign_class() }))
                .collect()
        },
    );
    Ok(0)
}

pub fn vanish(cfg: &Config, symbol: &Path) -> Result<Code> {
    let f = SymbolFile::read(symbol)?;
    let (v, sumzero, stable) = match f.flavor {
        SymbolFlavor::B => {
            let a = abelian(cfg, &f.group)?;
            let s = io::parse_b(&a, &f.symbol, f.n)?;
            (s.vanish_v(), s.vanish_sumzero(&a)?, None)
        }
        SymbolFlavor::C => {
            let s = io::parse_c(&ambient(cfg, &f.group)?, &f.symbol, f.n)?;
            (s.vanish_v(), s.vanish_sumzero()?, None)
        }
        SymbolFlavor::K => {
            let s = io::parse_k(&ambient(cfg, &f.group)?, &f.symbol, f.n)?;
            (s.vanish_v(), s.vanish_sumzero()?, Some(s.vanish_stable()?))
        }
    };
    emit(
        cfg,
        || {
            let mut out = format!("v: {v}\nsumzero: {sumzero}");
            if let Some(st) = stable {
                out += &format!("\nstable: {st}");
            }
            out
        },
        || {
            let mut js = json!({ "v": v, "sumzero": sumzero });
            if let Some(st) = stable {
                js["stable"] = json!(st);
            }
            js
        },
    );
    Ok(0)
}

pub fn compress(cfg: &Config, symbol: &Path) -> Result<Code> {
    let f = SymbolFile::read(symbol)?;
    let amb = ambient(cfg, &f.group)?;
    let s = match f.flavor {
        SymbolFlavor::B | SymbolFlavor::C => io::parse_c(&amb, &f.symbol, f.n)?,
        SymbolFlavor::K => bail!("compress takes a b or c symbol"),
    };
    let ws = compress_witnesses(&amb.ctx, &s, f.n)?;
    emit(
        cfg,
        || {
            let mut lines = vec![format!("symbol: {}", amb.ctx.describe(&s)), format!("witnesses: {}", ws.len())];
            for (p, (i, j)) in &ws {
                lines.push(format!("  {} at ({i},{j})", amb.ctx.describe(p)));
            }
            lines.join("\n")
        },
        || {
            json!({
                "symbol": io::c_literal(&amb, &s),
                "incompressible": ws.is_empty(),
                "witnesses": ws
                    .iter()
                    .map(|(p, (i, j))| json!({ "symbol": io::c_literal(&amb, p), "pair": [i, j] }))
                    .collect::<Vec<_>>(),
            })
        },
    );
    Ok(0)
}

pub fn standardize(cfg: &Config, charts: &Path) -> Result<Code> {
    let cm = io::read_chart_model(charts)?;
    check_order(cfg, cm.group().order() as usize)?;
    let (out, log) = models::standardize(&cm)?;
    let lit = |c: &models::Chart| -> (Vec<Vec<u64>>, Vec<usize>) {
        (c.weights.iter().map(|w| w.0.clone()).collect(), c.boundary.iter().copied().collect())
    };
    emit(
        cfg,
        || {
            let mut lines = vec![
                format!("maxima: {:?}", log.maxima),
                format!("blowups: {}", log.steps.len()),
                format!("charts: {}", out.charts().len()),
            ];
            for c in out.charts() {
                let (w, b) = lit(c);
                lines.push(format!("  weights {w:?} boundary {b:?}"));
            }
            lines.join("\n")
        },
        || {
            json!({
                "schema": io::SCHEMA,
                "group": GroupLiteral::Abelian { orders: out.group().orders().to_vec() },
                "maxima": log.maxima,
                "steps": log.steps,
                "charts": out.charts().iter().map(|c| {
                    let (w, b) = lit(c);
                    json!({ "weights": w, "boundary": b })
                }).collect::<Vec<_>>(),
            })
        },
    );
    Ok(0)
}

pub fn cache_list(cfg: &Config) -> Result<Code> {
    let cache = cfg.cache.as_ref().context("the cache is disabled")?;
    let entries = cache.list()?;
    emit(
        cfg,
        || {
            entries
                .iter()
                .map(|(name, h)| {
                    let flavor = serde_json::to_value(h.flavor).unwrap();
                    let filter = h.filter.as_deref().unwrap_or("none");
                    format!("{name} {} n={} {} filter={filter}", flavor.as_str().unwrap_or("?"), h.n, h.group)
                })
                .collect::<Vec<_>>()
                .join("\n")
        },
        || entries.iter().map(|(name, h)| json!({ "file": name, "header": h })).collect(),
    );
    Ok(0)
}

pub fn cache_clear(cfg: &Config) -> Result<Code> {
    let cache = cfg.cache.as_ref().context("the cache is disabled")?;
    let n = cache.clear()?;
    emit(cfg, || format!("removed: {n}"), || json!({ "removed": n }));
    Ok(0)
}
