//! File and flag parsing: tableau JSON, diagonal maps, basis expressions.

use std::collections::BTreeMap;
use std::path::Path;

use schurzeta::qsym::{essential, fundamental, monomial, Composition, QSymExpr};
use schurzeta::scalar::Exponent;
use schurzeta::shapes::{Partition, SkewShape, Tableau};

fn shape_from_value(v: &serde_json::Value) -> Result<SkewShape, String> {
    let outer = v
        .get("outer")
        .and_then(|o| o.as_array())
        .ok_or("shape.outer must be an array")?
        .iter()
        .map(|x| x.as_u64().map(|u| u as usize).ok_or("bad outer part"))
        .collect::<Result<Vec<_>, _>>()?;
    let inner = match v.get("inner") {
        Some(arr) => arr
            .as_array()
            .ok_or("shape.inner must be an array")?
            .iter()
            .map(|x| x.as_u64().map(|u| u as usize).ok_or("bad inner part"))
            .collect::<Result<Vec<_>, _>>()?,
        None => Vec::new(),
    };
    let outer = Partition::new(outer).map_err(|e| e.to_string())?;
    let inner = Partition::new(inner).map_err(|e| e.to_string())?;
    SkewShape::new(outer, inner).map_err(|e| e.to_string())
}

fn exponent_from_value(v: &serde_json::Value) -> Result<Exponent, String> {
    if let Some(i) = v.as_i64() {
        Ok(Exponent::Int(i))
    } else if let Some(x) = v.as_f64() {
        Ok(Exponent::Real(x))
    } else {
        Err(format!("bad entry value {v}"))
    }
}

fn root_from_file(path: &Path) -> Result<serde_json::Value, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("bad JSON in {}: {e}", path.display()))
}

fn tableau_from_value(root: &serde_json::Value) -> Result<Tableau<Exponent>, String> {
    let shape = shape_from_value(root.get("shape").ok_or("missing shape")?)?;
    if let Some(entries) = root.get("entries") {
        let mut map = BTreeMap::new();
        for item in entries.as_array().ok_or("entries must be an array")? {
            let triple = item.as_array().ok_or("entry must be [i,j,v]")?;
            if triple.len() != 3 {
                return Err("entry must be [i,j,v]".into());
            }
            let i = triple[0].as_u64().ok_or("bad row")? as usize;
            let j = triple[1].as_u64().ok_or("bad column")? as usize;
            map.insert((i, j), exponent_from_value(&triple[2])?);
        }
        Tableau::new(shape, map).map_err(|e| e.to_string())
    } else if let Some(diag) = root.get("diag") {
        let mut map = BTreeMap::new();
        for (k, v) in diag.as_object().ok_or("diag must be an object")? {
            let key: i64 = k.parse().map_err(|_| format!("bad diagonal index {k:?}"))?;
            map.insert(key, exponent_from_value(v)?);
        }
        Tableau::diagonal(shape, &map).map_err(|e| e.to_string())
    } else {
        Err("tableau file needs either entries or diag".into())
    }
}

pub fn load_tableau_exponent(path: &Path) -> Result<Tableau<Exponent>, String> {
    tableau_from_value(&root_from_file(path)?)
}

pub fn load_tableau_u32(path: &Path) -> Result<Tableau<u32>, String> {
    let t = load_tableau_exponent(path)?;
    let entries: Result<BTreeMap<_, u32>, String> = t
        .entries()
        .iter()
        .map(|(&c, e)| match e {
            Exponent::Int(v) if *v >= 1 => Ok((c, *v as u32)),
            _ => Err("entries must be positive integers".to_string()),
        })
        .collect();
    Tableau::new(t.shape().clone(), entries?).map_err(|e| e.to_string())
}

pub fn load_pair(path: &Path) -> Result<(Tableau<u32>, Tableau<u32>), String> {
    let root = root_from_file(path)?;
    let to_u32 = |v: &serde_json::Value| -> Result<Tableau<u32>, String> {
        let t = tableau_from_value(v)?;
        let entries: Result<BTreeMap<_, u32>, String> = t
            .entries()
            .iter()
            .map(|(&c, e)| match e {
                Exponent::Int(x) if *x >= 1 => Ok((c, *x as u32)),
                _ => Err("entries must be positive integers".to_string()),
            })
            .collect();
        Tableau::new(t.shape().clone(), entries?).map_err(|e| e.to_string())
    };
    let left = to_u32(root.get("left").ok_or("pair file needs left")?)?;
    let right = to_u32(root.get("right").ok_or("pair file needs right")?)?;
    Ok((left, right))
}

/// Diagonal maps given on the command line as JSON, e.g. `{"-3":2,"0":1}`.
pub fn parse_diag(text: &str) -> Result<BTreeMap<i64, Exponent>, String> {
    let v: serde_json::Value =
        serde_json::from_str(text).map_err(|e| format!("bad diag JSON: {e}"))?;
    let mut map = BTreeMap::new();
    for (k, val) in v.as_object().ok_or("diag must be a JSON object")? {
        let key: i64 = k.parse().map_err(|_| format!("bad diagonal index {k:?}"))?;
        map.insert(key, exponent_from_value(val)?);
    }
    Ok(map)
}

/// Basis expressions like `M[2,1,3]`, `E[1,2]` or `F[3]`.
pub fn parse_expr(text: &str) -> Result<QSymExpr, String> {
    let text = text.trim();
    let (basis, rest) = text.split_at(1);
    let rest = rest
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| format!("expected {basis}[parts], got {text:?}"))?;
    let parts: Result<Vec<u32>, _> = if rest.trim().is_empty() {
        Ok(Vec::new())
    } else {
        rest.split(',').map(|p| p.trim().parse()).collect()
    };
    let comp = Composition::new(parts.map_err(|_| format!("bad parts in {text:?}"))?)
        .map_err(|e| e.to_string())?;
    match basis {
        "M" => Ok(monomial(&comp)),
        "E" => Ok(essential(&comp)),
        "F" => Ok(fundamental(&comp)),
        other => Err(format!("unknown basis {other:?}")),
    }
}
