//! JSON file formats: group literals, symbols, classes, actions, chart models and
//! filters. Every top-level file carries `"schema": 1`.

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::abgrp::{AbElem, Character, FinAbGroup};
use crate::burncalc::GFilter;
use crate::error::{Error, Result};
use crate::grp::{ElemId, Perm, PermGroup, SubgroupG};
use crate::models::{Chart, ChartModel, Fan, ToricGAction};
use crate::symb::{canon_b, BSymbol, CContext, CSymbol, ClassVector, FieldData, KSymbol, Values};

pub const SCHEMA: u32 = 1;

/// Largest permutation group the file formats will generate.
pub const DEFAULT_GROUP_CAP: usize = 5_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum GroupLiteral {
    Abelian { orders: Vec<u64> },
    /// Generators in 0-based one-line notation.
    Perm { degree: usize, gens: Vec<Vec<u32>> },
}

impl GroupLiteral {
    pub fn abelian(&self) -> Result<FinAbGroup> {
        match self {
            GroupLiteral::Abelian { orders } => FinAbGroup::new(orders.clone()),
            GroupLiteral::Perm { .. } => Err(Error::NotAbelian),
        }
    }

    pub fn load(&self, cap: usize) -> Result<Ambient> {
        Ok(Ambient { ctx: self.context(cap)?, coordinates: matches!(self, GroupLiteral::Abelian { .. }) })
    }

    pub fn context(&self, cap: usize) -> Result<CContext> {
        match self {
            GroupLiteral::Abelian { .. } => {
                let a = self.abelian()?;
                if a.order() as usize > cap {
                    return Err(Error::CapExceeded { cap });
                }
                CContext::from_abelian(&a)
            }
            GroupLiteral::Perm { degree, gens } => {
                let gens = gens.iter().map(|g| Perm::from_one_line(*degree, g)).collect::<Result<Vec<_>>>()?;
                CContext::new(PermGroup::generate_capped(*degree, gens, cap)?)
            }
        }
    }
}

/// A loaded group; `coordinates` selects how its elements are written.
#[derive(Debug)]
pub struct Ambient {
    pub ctx: CContext,
    pub coordinates: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SymbolFlavor {
    B,
    C,
    K,
}

/// A symbol without its ambient data.
///
/// Elements are coordinate vectors for abelian groups and one-line permutations
/// otherwise. Without `H`, the symbol lives over the whole (abelian) group and
/// `beta` holds coordinate characters; with `H`, `beta[i][j]` is the value of the
/// `i`-th character on `H[j]` in `Z/exp(H)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolLiteral {
    #[serde(rename = "H", default, skip_serializing_if = "Option::is_none")]
    pub h: Option<Vec<Vec<i64>>>,
    #[serde(rename = "Y", default, skip_serializing_if = "Vec::is_empty")]
    pub y: Vec<Vec<i64>>,
    pub beta: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldData>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h1_surjective: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolFile {
    pub schema: u32,
    pub flavor: SymbolFlavor,
    pub group: GroupLiteral,
    pub n: usize,
    #[serde(flatten)]
    pub symbol: SymbolLiteral,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub symbol: SymbolLiteral,
    pub coeff: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFile {
    pub schema: u32,
    pub flavor: SymbolFlavor,
    pub group: GroupLiteral,
    pub n: usize,
    pub terms: Vec<Term>,
}

fn check_schema(schema: u32) -> Result<()> {
    if schema != SCHEMA {
        return Err(Error::Parse(format!("unsupported schema {schema}, expected {SCHEMA}")));
    }
    Ok(())
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn coords(a: &FinAbGroup, v: &[i64]) -> Result<AbElem> {
    a.elem(v)
}

pub fn parse_b(a: &FinAbGroup, lit: &SymbolLiteral, n: usize) -> Result<BSymbol> {
    if lit.h.is_some() || !lit.y.is_empty() {
        return Err(Error::Parse("B symbols take only beta".into()));
    }
    if lit.beta.len() != n {
        return Err(Error::Parse(format!("beta has length {} but n = {n}", lit.beta.len())));
    }
    canon_b(a, lit.beta.iter().map(|c| coords(a, c)).collect::<Result<_>>()?)
}

pub fn b_literal(s: &BSymbol) -> SymbolLiteral {
    SymbolLiteral {
        h: None,
        y: vec![],
        beta: s.beta().iter().map(|c| c.0.iter().map(|&x| x as i64).collect()).collect(),
        field: None,
        h1_surjective: None,
    }
}

/// Element id of a literal element of the ambient group.
pub fn parse_element(amb: &Ambient, v: &[i64]) -> Result<ElemId> {
    let ctx = &amb.ctx;
    match ctx.abelian_group() {
        Some(a) if amb.coordinates => {
            ctx.id_of_coords(&coords(a, v)?).ok_or_else(|| Error::NotAnElement(format!("{v:?}")))
        }
        _ => {
            let images = v
                .iter()
                .map(|&x| u32::try_from(x).map_err(|_| Error::InvalidPermutation(format!("{v:?}"))))
                .collect::<Result<Vec<_>>>()?;
            let p = Perm::from_one_line(ctx.group().degree(), &images)?;
            ctx.group().id_of(&p).ok_or_else(|| Error::NotAnElement(format!("{v:?}")))
        }
    }
}

pub fn element_literal(amb: &Ambient, x: ElemId) -> Vec<i64> {
    let ctx = &amb.ctx;
    match ctx.coords_of(x) {
        Some(c) if amb.coordinates => c.0.iter().map(|&v| v as i64).collect(),
        _ => ctx.group().element(x).0.iter().map(|&v| v as i64).collect(),
    }
}

fn parse_subgroup(amb: &Ambient, elems: &[Vec<i64>], base: Option<&SubgroupG>) -> Result<SubgroupG> {
    let ctx = &amb.ctx;
    let mut gens = elems.iter().map(|e| parse_element(amb, e)).collect::<Result<Vec<_>>>()?;
    if let Some(b) = base {
        gens.extend_from_slice(b.elems());
    }
    Ok(ctx.group().closure(&gens))
}

/// Pair `(H, Y_0, β)` in the internal encoding.
fn parse_c_parts(amb: &Ambient, lit: &SymbolLiteral) -> Result<(SubgroupG, SubgroupG, Vec<Values>)> {
    let ctx = &amb.ctx;
    match &lit.h {
        None => {
            let a = ctx.abelian_group().ok_or(Error::NotAbelian)?;
            if !lit.y.is_empty() {
                return Err(Error::Parse("Y must be empty when H is the whole group".into()));
            }
            let whole = ctx.group().whole();
            let beta =
                lit.beta.iter().map(|c| ctx.values_from_coords(&coords(a, c)?)).collect::<Result<Vec<_>>>()?;
            Ok((whole.clone(), whole, beta))
        }
        Some(h_list) => {
            let ids = h_list.iter().map(|e| parse_element(amb, e)).collect::<Result<Vec<_>>>()?;
            let h = SubgroupG::from_elems(ids.clone());
            if h.order() != ids.len() || !ctx.group().is_subgroup(&h) {
                return Err(Error::Parse("H must list the elements of a subgroup exactly once".into()));
            }
            let y0 = parse_subgroup(amb, &lit.y, Some(&h))?;
            let e = ctx.exponent(&h).max(1);
            let beta = lit
                .beta
                .iter()
                .map(|vals| {
                    if vals.len() != ids.len() {
                        return Err(Error::Parse(format!("character {vals:?} must give one value per element of H")));
                    }
                    let mut out = vec![0u64; ids.len()];
                    for (&x, &v) in ids.iter().zip(vals) {
                        out[h.position(x).expect("listed element")] = v.rem_euclid(e as i64) as u64;
                    }
                    Ok(out)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok((h, y0, beta))
        }
    }
}

pub fn parse_c(amb: &Ambient, lit: &SymbolLiteral, n: usize) -> Result<CSymbol> {
    let (h, y0, beta) = parse_c_parts(amb, lit)?;
    amb.ctx.canon_c(&h, &y0, beta, n)
}

pub fn parse_k(amb: &Ambient, lit: &SymbolLiteral, n: usize) -> Result<KSymbol> {
    let (h, y0, beta) = parse_c_parts(amb, lit)?;
    let field = lit.field.clone().ok_or_else(|| Error::Parse("K symbols need a field".into()))?;
    amb.ctx.canon_k(&h, &y0, beta, field, lit.h1_surjective.unwrap_or(true), n)
}

pub fn c_literal(amb: &Ambient, s: &CSymbol) -> SymbolLiteral {
    SymbolLiteral {
        h: Some(s.h().elems().iter().map(|&x| element_literal(amb, x)).collect()),
        y: s.y_reps().iter().map(|&x| element_literal(amb, x)).collect(),
        beta: s.beta().iter().map(|v| v.iter().map(|&x| x as i64).collect()).collect(),
        field: None,
        h1_surjective: None,
    }
}

pub fn k_literal(amb: &Ambient, s: &KSymbol) -> SymbolLiteral {
    SymbolLiteral {
        field: Some(s.field().clone()),
        h1_surjective: Some(s.h1_surjective()),
        ..c_literal(amb, s.c())
    }
}

impl SymbolFile {
    pub fn read(path: &Path) -> Result<Self> {
        let f: SymbolFile = read_json(path)?;
        check_schema(f.schema)?;
        Ok(f)
    }
}

impl ClassFile {
    pub fn read(path: &Path) -> Result<Self> {
        let f: ClassFile = read_json(path)?;
        check_schema(f.schema)?;
        Ok(f)
    }

    pub fn to_b(&self) -> Result<ClassVector<BSymbol>> {
        self.expect(SymbolFlavor::B)?;
        let a = self.group.abelian()?;
        self.collect(|lit| parse_b(&a, lit, self.n))
    }

    pub fn to_c(&self, amb: &Ambient) -> Result<ClassVector<CSymbol>> {
        self.expect(SymbolFlavor::C)?;
        self.collect(|lit| parse_c(amb, lit, self.n))
    }

    pub fn to_k(&self, amb: &Ambient) -> Result<ClassVector<KSymbol>> {
        self.expect(SymbolFlavor::K)?;
        self.collect(|lit| parse_k(amb, lit, self.n))
    }

    fn expect(&self, flavor: SymbolFlavor) -> Result<()> {
        if self.flavor != flavor {
            return Err(Error::Parse(format!("expected a {flavor:?} class, found {:?}", self.flavor)));
        }
        Ok(())
    }

    fn collect<S: Ord + Clone>(&self, parse: impl Fn(&SymbolLiteral) -> Result<S>) -> Result<ClassVector<S>> {
        let mut out = ClassVector::zero();
        for t in &self.terms {
            out.add_term(parse(&t.symbol)?, t.coeff);
        }
        Ok(out)
    }

    pub fn from_b(group: &FinAbGroup, n: usize, c: &ClassVector<BSymbol>) -> ClassFile {
        ClassFile {
            schema: SCHEMA,
            flavor: SymbolFlavor::B,
            group: GroupLiteral::Abelian { orders: group.orders().to_vec() },
            n,
            terms: c.iter().map(|(s, k)| Term { symbol: b_literal(s), coeff: k }).collect(),
        }
    }
}

/// Toric action file: an explicit fan with weights, or a projective space.
pub fn read_action(path: &Path) -> Result<ToricGAction> {
    let v: Value = read_json(path)?;
    parse_action(&v)
}

pub fn parse_action(v: &Value) -> Result<ToricGAction> {
    let schema = v.get("schema").and_then(Value::as_u64).ok_or_else(|| Error::Parse("missing schema".into()))?;
    check_schema(schema as u32)?;
    let field = |obj: &Value, key: &str| obj.get(key).cloned().ok_or_else(|| Error::Parse(format!("missing {key}")));
    let chars = |a: &FinAbGroup, w: Value| -> Result<Vec<Character>> {
        let raw: Vec<Vec<i64>> = serde_json::from_value(w)?;
        raw.iter().map(|c| coords(a, c)).collect()
    };
    if let Some(p) = v.get("pspace") {
        let group: GroupLiteral = serde_json::from_value(field(p, "group")?)?;
        let a = group.abelian()?;
        let weights = chars(&a, field(p, "weights")?)?;
        return crate::models::projective_space_action(&a, &weights);
    }
    let fan: Fan = serde_json::from_value(field(v, "fan")?)?;
    let group: GroupLiteral = serde_json::from_value(field(v, "group")?)?;
    let a = group.abelian()?;
    let w = chars(&a, field(v, "w")?)?;
    ToricGAction::new(fan, a, w)
}

pub fn action_json(act: &ToricGAction) -> Value {
    serde_json::json!({
        "schema": SCHEMA,
        "fan": act.fan(),
        "group": GroupLiteral::Abelian { orders: act.group().orders().to_vec() },
        "w": act.w().iter().map(|c| c.0.clone()).collect::<Vec<_>>(),
    })
}

#[derive(Deserialize)]
struct ChartFile {
    schema: u32,
    group: GroupLiteral,
    charts: Vec<ChartLiteral>,
}

#[derive(Deserialize)]
struct ChartLiteral {
    weights: Vec<Vec<i64>>,
    #[serde(default)]
    boundary: Vec<usize>,
}

pub fn read_chart_model(path: &Path) -> Result<ChartModel> {
    let f: ChartFile = read_json(path)?;
    check_schema(f.schema)?;
    let a = f.group.abelian()?;
    let charts = f
        .charts
        .iter()
        .map(|c| {
            Ok(Chart {
                weights: c.weights.iter().map(|w| coords(&a, w)).collect::<Result<_>>()?,
                boundary: c.boundary.iter().copied().collect(),
            })
        })
        .collect::<Result<_>>()?;
    ChartModel::new(a, charts)
}

#[derive(Deserialize)]
struct FilterFile {
    schema: u32,
    pairs: Vec<FilterPair>,
    /// Take the smallest filter containing `pairs` instead of validating them.
    #[serde(default)]
    close: bool,
}

#[derive(Deserialize)]
struct FilterPair {
    #[serde(rename = "H")]
    h: Vec<Vec<i64>>,
    /// Elements generating `Y_0` together with `H`.
    #[serde(rename = "Y", default)]
    y: Vec<Vec<i64>>,
}

pub fn read_filter(amb: &Ambient, path: &Path) -> Result<GFilter> {
    let f: FilterFile = read_json(path)?;
    check_schema(f.schema)?;
    let pairs = f
        .pairs
        .iter()
        .map(|p| {
            let h = parse_subgroup(amb, &p.h, None)?;
            let y0 = parse_subgroup(amb, &p.y, Some(&h))?;
            Ok((h, y0))
        })
        .collect::<Result<Vec<_>>>()?;
    if f.close {
        GFilter::generated_by(&amb.ctx, pairs)
    } else {
        GFilter::new(&amb.ctx, pairs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_literals() {
        let g: GroupLiteral = serde_json::from_str(r#"{"type":"abelian","orders":[2,4]}"#).unwrap();
        assert_eq!(g.abelian().unwrap().order(), 8);
        let bad: GroupLiteral = serde_json::from_str(r#"{"type":"abelian","orders":[3,2]}"#).unwrap();
        assert!(matches!(bad.abelian(), Err(Error::InvalidGroup(_))));
        let s3: GroupLiteral = serde_json::from_str(r#"{"type":"perm","degree":3,"gens":[[1,0,2],[1,2,0]]}"#).unwrap();
        assert_eq!(s3.context(100).unwrap().group().order(), 6);
        assert_eq!(s3.context(3).unwrap_err(), Error::CapExceeded { cap: 3 });
    }

    #[test]
    fn symbol_round_trips() {
        let g = GroupLiteral::Perm { degree: 3, gens: vec![vec![1, 0, 2], vec![1, 2, 0]] };
        let ctx = g.load(100).unwrap();
        let lit: SymbolLiteral =
            serde_json::from_str(r#"{"H":[[0,1,2],[1,0,2]],"beta":[[0,1]]}"#).unwrap();
        let s = parse_c(&ctx, &lit, 2).unwrap();
        assert_eq!(s.h().order(), 2);
        assert_eq!(parse_c(&ctx, &c_literal(&ctx, &s), 2).unwrap(), s);
        // the conjugate transposition gives the same canonical symbol
        let lit2: SymbolLiteral = serde_json::from_str(r#"{"H":[[2,1,0],[0,1,2]],"beta":[[1,0]]}"#).unwrap();
        assert_eq!(parse_c(&ctx, &lit2, 2).unwrap(), s);

        let z5 = GroupLiteral::Abelian { orders: vec![5] };
        let ctx = z5.load(100).unwrap();
        let top: SymbolLiteral = serde_json::from_str(r#"{"beta":[[1],[4]]}"#).unwrap();
        let s = parse_c(&ctx, &top, 2).unwrap();
        assert!(s.vanish_sumzero().unwrap());
        assert_eq!(parse_c(&ctx, &c_literal(&ctx, &s), 2).unwrap(), s);
        let b = parse_b(&z5.abelian().unwrap(), &top, 2).unwrap();
        assert_eq!(b.to_string(), "(1,4)");
    }

    #[test]
    fn class_files() {
        let a = FinAbGroup::cyclic(5);
        let text = r#"{"schema":1,"flavor":"b","group":{"type":"abelian","orders":[5]},"n":1,
            "terms":[{"symbol":{"beta":[[1]]},"coeff":1},{"symbol":{"beta":[[4]]},"coeff":1}]}"#;
        let f: ClassFile = serde_json::from_str(text).unwrap();
        let c = f.to_b().unwrap();
        assert_eq!(c.to_string(), "[(1)] + [(4)]");
        assert_eq!(ClassFile::from_b(&a, 1, &c).to_b().unwrap(), c);
    }

    #[test]
    fn action_files() {
        let v: Value = serde_json::from_str(
            r#"{"schema":1,"pspace":{"group":{"type":"abelian","orders":[5]},"weights":[[0],[1]]}}"#,
        )
        .unwrap();
        let act = parse_action(&v).unwrap();
        assert_eq!(act.class_b().unwrap().to_string(), "[(1)] + [(4)]");
        let again = parse_action(&action_json(&act)).unwrap();
        assert_eq!(again, act);
        let bad: Value = serde_json::from_str(
            r#"{"schema":1,"pspace":{"group":{"type":"abelian","orders":[2]},"weights":[[0],[0]]}}"#,
        )
        .unwrap();
        assert_eq!(parse_action(&bad).unwrap_err(), Error::NotGenericallyFree);
    }
}
