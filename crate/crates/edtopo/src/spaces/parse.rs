//! Line-oriented text format for point specs.
//!
//! ```text
//! space: telophase
//! coord 0 = inf
//! coord 3 = 5
//! default = periodic(0, inf*)
//! ```
//!
//! Single-valued spaces use `value = ...` (lower real, Golomb) or
//! `scheme = ...` (maximal antichain) instead of coordinates.

use super::*;
use crate::ordinals::{ArensLabel, KBNode, OrdCNF};
use crate::setspec::SetSpec;
use num_bigint::BigInt;
use num_rational::BigRational;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("line {0}: {1}")]
    Line(usize, String),
    #[error("missing `space:` header")]
    MissingHeader,
    #[error("unknown space tag: {0}")]
    UnknownSpace(String),
    #[error("{0}")]
    Invalid(String),
}

fn line_err(no: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Line(no + 1, msg.into())
}

pub fn parse_point_spec(text: &str) -> Result<PointSpec, ParseError> {
    let mut tag = None;
    let mut coords: Vec<(usize, u64, String)> = Vec::new();
    let mut default: Option<(usize, Vec<String>)> = Vec::new().into_iter().next();
    let mut value: Option<(usize, String)> = None;
    let mut scheme: Option<(usize, String)> = None;

    for (no, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("space:") {
            tag = Some(rest.trim().to_string());
        } else if let Some(rest) = line.strip_prefix("coord") {
            let (idx, val) = rest
                .split_once('=')
                .ok_or_else(|| line_err(no, "expected `coord <n> = <value>`"))?;
            let n: u64 = idx
                .trim()
                .parse()
                .map_err(|_| line_err(no, "bad coordinate index"))?;
            coords.push((no, n, val.trim().to_string()));
        } else if let Some(rest) = line.strip_prefix("default") {
            let (_, val) = rest
                .split_once('=')
                .ok_or_else(|| line_err(no, "expected `default = periodic(...)`"))?;
            let inner = val
                .trim()
                .strip_prefix("periodic(")
                .and_then(|v| v.strip_suffix(')'))
                .ok_or_else(|| line_err(no, "expected `periodic(v1, ..., vk)`"))?;
            default = Some((no, split_top_level(inner)));
        } else if let Some(rest) = line.strip_prefix("value") {
            let (_, val) = rest
                .split_once('=')
                .ok_or_else(|| line_err(no, "expected `value = <v>`"))?;
            value = Some((no, val.trim().to_string()));
        } else if let Some(rest) = line.strip_prefix("scheme") {
            let (_, val) = rest
                .split_once('=')
                .ok_or_else(|| line_err(no, "expected `scheme = <s>`"))?;
            scheme = Some((no, val.trim().to_string()));
        } else {
            return Err(line_err(no, format!("unrecognized line: {line}")));
        }
    }

    let tag = tag.ok_or(ParseError::MissingHeader)?;

    macro_rules! build_seq {
        ($parse:expr, $default_cycle:expr) => {{
            let mut overrides = BTreeMap::new();
            for (no, n, v) in &coords {
                overrides.insert(*n, $parse(v).map_err(|e: String| line_err(*no, e))?);
            }
            let cycle = match &default {
                Some((no, vals)) => {
                    let mut c = Vec::new();
                    for v in vals {
                        c.push($parse(v).map_err(|e: String| line_err(*no, e))?);
                    }
                    if c.is_empty() {
                        return Err(line_err(*no, "periodic default must be nonempty"));
                    }
                    c
                }
                None => $default_cycle,
            };
            Seq::table(overrides, cycle)
        }};
    }

    match tag.as_str() {
        "lowerreal" => {
            let (no, v) = value.ok_or_else(|| ParseError::Invalid("lowerreal needs `value =`".into()))?;
            if let Some(inner) = v.strip_prefix("dyadic(").and_then(|x| x.strip_suffix(')')) {
                let (prefix, period) = inner
                    .split_once(';')
                    .ok_or_else(|| line_err(no, "expected dyadic(<bits>;<bits>)"))?;
                let s = SetSpec::from_bits(&parse_bits(prefix, no)?, &parse_bits(period, no)?);
                Ok(PointSpec::LowerReal(LowerReal::dyadic(&s)))
            } else {
                Ok(PointSpec::LowerReal(LowerReal::rational(
                    parse_rational(&v).map_err(|e| line_err(no, e))?,
                )))
            }
        }
        "hilbert" => {
            let seq = build_seq!(
                |v: &str| parse_rational(v),
                vec![BigRational::from_integer(BigInt::from(0))]
            );
            let mut coords_map = BTreeMap::new();
            if let Seq::Table { overrides, cycle } = &seq {
                for (n, q) in overrides {
                    coords_map.insert(*n, q.clone());
                }
                // Hilbert points have default 0; a non-zero cycle is rejected.
                for q in cycle {
                    if !num_traits::Zero::is_zero(q) {
                        return Err(ParseError::Invalid(
                            "hilbert default must be 0".into(),
                        ));
                    }
                }
            }
            Ok(PointSpec::Hilbert(
                HilbertPoint::new(coords_map)
                    .map_err(|e| ParseError::Invalid(e.to_string()))?,
            ))
        }
        "omegahat" => Ok(PointSpec::OmegaHat(OmegaHatPower::new(build_seq!(
            |v: &str| parse_omega_hat(v),
            vec![OmegaHatValue::Fin(0)]
        )))),
        "telophase" => Ok(PointSpec::Telophase(TelophasePower::new(build_seq!(
            |v: &str| parse_telo(v),
            vec![TeloValue::Fin(0)]
        )))),
        "doubleorigin" => Ok(PointSpec::DoubleOrigin(DoubleOriginPower::new(build_seq!(
            |v: &str| parse_do(v),
            vec![DoValue::Pair(OmegaHatValue::Fin(0), P1Value::Fin(0))]
        )))),
        "irrlattice" => Ok(PointSpec::IrrLattice(IrrLatticePower::new(build_seq!(
            |v: &str| parse_irr(v),
            vec![IrrValue::Pair(0, OmegaHatValue::Fin(0))]
        )))),
        "arens" => Ok(PointSpec::Arens(ArensPower::new(build_seq!(
            |v: &str| parse_arens(v),
            vec![ArensPair::new(ArensLabel::Fin(1), OrdCNF::new(0, 0, 1))
                .expect("default pair is valid")]
        )))),
        "roy" => Ok(PointSpec::Roy(RoyPower::new(build_seq!(
            |v: &str| parse_roy(v),
            vec![RoyPair::new(OmegaHatValue::Fin(0), KBNode::root())
                .expect("default pair is valid")]
        )))),
        "cofinite" => Ok(PointSpec::Cofinite(CofinitePower::new(build_seq!(
            |v: &str| parse_nat(v),
            vec![0]
        )))),
        "cocylinder" => Ok(PointSpec::Cocylinder(CocylinderPoint::new(build_seq!(
            |v: &str| parse_nat(v),
            vec![0]
        )))),
        "golombpower" => Ok(PointSpec::GolombPower(GolombPower::new(build_seq!(
            |v: &str| parse_pos(v),
            vec![1]
        )))),
        "golomb" => {
            let (no, v) = value.ok_or_else(|| ParseError::Invalid("golomb needs `value =`".into()))?;
            let n: u64 = v.parse().map_err(|_| line_err(no, "bad integer"))?;
            if n == 0 {
                return Err(line_err(no, "Golomb points are positive"));
            }
            Ok(PointSpec::Golomb(Golomb::new(n)))
        }
        "amax" => {
            let (no, v) = scheme.ok_or_else(|| ParseError::Invalid("amax needs `scheme =`".into()))?;
            if let Some(inner) = v.strip_prefix("all_strings(").and_then(|x| x.strip_suffix(')')) {
                let len = inner
                    .trim()
                    .parse()
                    .map_err(|_| line_err(no, "bad length"))?;
                Ok(PointSpec::Amax(AmaxPoint::all_strings(len)))
            } else if let Some(inner) = v.strip_prefix("sigma(").and_then(|x| x.strip_suffix(')')) {
                let (node, len) = inner
                    .rsplit_once(',')
                    .ok_or_else(|| line_err(no, "expected sigma([..], len)"))?;
                let sigma = KBNode::parse(node.trim())
                    .map(|n| n.entries().to_vec())
                    .or_else(|_| parse_bracket_list(node.trim()))
                    .map_err(|_| line_err(no, "bad string literal"))?;
                let len: u64 = len.trim().parse().map_err(|_| line_err(no, "bad length"))?;
                Ok(PointSpec::Amax(
                    AmaxPoint::sigma_scheme(sigma, len)
                        .map_err(|e| ParseError::Invalid(e.to_string()))?,
                ))
            } else {
                Err(line_err(no, "expected all_strings(n) or sigma([..], len)"))
            }
        }
        other => Err(ParseError::UnknownSpace(other.to_string())),
    }
}

/// Splits on commas that are not nested inside brackets or parentheses.
fn split_top_level(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' | '[' => {
                depth += 1;
                cur.push(c);
            }
            ')' | ']' => {
                depth -= 1;
                cur.push(c);
            }
            ',' if depth == 0 => {
                out.push(cur.trim().to_string());
                cur = String::new();
            }
            _ => cur.push(c),
        }
    }
    if !cur.trim().is_empty() {
        out.push(cur.trim().to_string());
    }
    out
}

fn parse_bits(s: &str, no: usize) -> Result<Vec<u8>, ParseError> {
    s.trim()
        .chars()
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            _ => Err(line_err(no, "bits must be 0 or 1")),
        })
        .collect()
}

fn parse_bracket_list(s: &str) -> Result<Vec<u128>, String> {
    let inner = s
        .strip_prefix('[')
        .and_then(|x| x.strip_suffix(']'))
        .ok_or("expected [..]")?;
    let mut out = Vec::new();
    for tok in inner.split(',') {
        let tok = tok.trim();
        if tok.is_empty() {
            continue;
        }
        out.push(tok.parse().map_err(|_| "bad entry".to_string())?);
    }
    Ok(out)
}

fn parse_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: i64 = n.trim().parse().map_err(|_| "bad numerator".to_string())?;
        let d: i64 = d.trim().parse().map_err(|_| "bad denominator".to_string())?;
        if d == 0 {
            return Err("zero denominator".into());
        }
        Ok(BigRational::new(BigInt::from(n), BigInt::from(d)))
    } else {
        let n: i64 = s.parse().map_err(|_| "bad integer".to_string())?;
        Ok(BigRational::from_integer(BigInt::from(n)))
    }
}

fn parse_nat(s: &str) -> Result<u64, String> {
    s.trim().parse().map_err(|_| format!("bad natural: {s}"))
}

fn parse_pos(s: &str) -> Result<u64, String> {
    let n = parse_nat(s)?;
    if n == 0 {
        Err("value must be positive".into())
    } else {
        Ok(n)
    }
}

fn parse_omega_hat(s: &str) -> Result<OmegaHatValue, String> {
    if s.trim() == "inf" {
        Ok(OmegaHatValue::Inf)
    } else {
        Ok(OmegaHatValue::Fin(parse_nat(s)?))
    }
}

fn parse_telo(s: &str) -> Result<TeloValue, String> {
    match s.trim() {
        "inf" => Ok(TeloValue::Inf),
        "inf*" => Ok(TeloValue::InfStar),
        other => Ok(TeloValue::Fin(parse_nat(other)?)),
    }
}

fn parse_p1(s: &str) -> Result<P1Value, String> {
    let s = s.trim();
    if s == "*" {
        Ok(P1Value::Star)
    } else if let Some(m) = s.strip_prefix('~') {
        Ok(P1Value::BarFin(parse_nat(m)?))
    } else {
        Ok(P1Value::Fin(parse_nat(s)?))
    }
}

fn split_pair(s: &str) -> Result<(String, String), String> {
    let inner = s
        .trim()
        .strip_prefix('(')
        .and_then(|x| x.strip_suffix(')'))
        .ok_or_else(|| format!("expected (a, b): {s}"))?;
    let parts = split_top_level(inner);
    if parts.len() != 2 {
        return Err(format!("expected two components: {s}"));
    }
    Ok((parts[0].clone(), parts[1].clone()))
}

fn parse_do(s: &str) -> Result<DoValue, String> {
    if s.trim() == "o*" {
        return Ok(DoValue::OriginStar);
    }
    let (a, b) = split_pair(s)?;
    Ok(DoValue::Pair(parse_omega_hat(&a)?, parse_p1(&b)?))
}

fn parse_irr(s: &str) -> Result<IrrValue, String> {
    let (a, b) = split_pair(s)?;
    if a.trim() == "inf" {
        if b.trim() == "inf" {
            Ok(IrrValue::InfInf)
        } else {
            Err("pairs (inf, d) with d finite do not exist".into())
        }
    } else {
        Ok(IrrValue::Pair(parse_nat(&a)?, parse_omega_hat(&b)?))
    }
}

fn parse_arens(s: &str) -> Result<ArensPair, String> {
    let (a, b) = split_pair(s)?;
    let label = ArensLabel::parse(&a).map_err(|e| e.to_string())?;
    let ord = OrdCNF::parse(&b).map_err(|e| e.to_string())?;
    ArensPair::new(label, ord).map_err(|e| e.to_string())
}

fn parse_roy(s: &str) -> Result<RoyPair, String> {
    let (a, b) = split_pair(s)?;
    let x = parse_omega_hat(&a)?;
    let y = KBNode::parse(&b).map_err(|e| e.to_string())?;
    RoyPair::new(x, y).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn telophase_file() {
        let p = parse_point_spec(
            "space: telophase\ncoord 0 = inf\ncoord 3 = 5\ndefault = periodic(0, inf*)\n",
        )
        .unwrap();
        let PointSpec::Telophase(t) = p else { panic!() };
        assert_eq!(t.value(0), TeloValue::Inf);
        assert_eq!(t.value(3), TeloValue::Fin(5));
        assert_eq!(t.value(2), TeloValue::Fin(0));
        assert_eq!(t.value(5), TeloValue::InfStar);
    }

    #[test]
    fn lowerreal_file() {
        let p = parse_point_spec("space: lowerreal\nvalue = 1/3\n").unwrap();
        let PointSpec::LowerReal(x) = p else { panic!() };
        assert_eq!(x.value(), &crate::coding::rat(1, 3));
        let p = parse_point_spec("space: lowerreal\nvalue = dyadic(1;0)\n").unwrap();
        let PointSpec::LowerReal(x) = p else { panic!() };
        assert_eq!(x.value(), &crate::coding::rat(1, 2));
    }

    #[test]
    fn pair_spaces() {
        let p = parse_point_spec(
            "space: arens\ncoord 0 = (inf, w2*0 + w*1 + 0)\ndefault = periodic((1, 1))\n",
        )
        .unwrap();
        let PointSpec::Arens(a) = p else { panic!() };
        assert_eq!(a.value(0).label, ArensLabel::Inf);
        assert_eq!(a.value(1).label, ArensLabel::Fin(1));

        let p = parse_point_spec(
            "space: roy\ncoord 0 = (2, [3])\ndefault = periodic((0, []))\n",
        )
        .unwrap();
        let PointSpec::Roy(r) = p else { panic!() };
        assert_eq!(r.value(0).x, OmegaHatValue::Fin(2));

        let p = parse_point_spec(
            "space: doubleorigin\ncoord 0 = o*\ncoord 1 = (inf, *)\ndefault = periodic((1, ~2))\n",
        )
        .unwrap();
        let PointSpec::DoubleOrigin(d) = p else { panic!() };
        assert!(d.value(0).is_origin_star());
        assert!(d.value(1).is_origin());
        assert_eq!(
            d.value(2),
            DoValue::Pair(OmegaHatValue::Fin(1), P1Value::BarFin(2))
        );
    }

    #[test]
    fn amax_and_errors() {
        let p = parse_point_spec("space: amax\nscheme = sigma([1], 3)\n").unwrap();
        let PointSpec::Amax(a) = p else { panic!() };
        assert!(a.in_antichain(&[1]));
        assert!(parse_point_spec("space: arens\ncoord 0 = (inf, w2*0 + w*2 + 0)\n").is_err());
        assert!(parse_point_spec("space: nosuch\n").is_err());
        assert!(parse_point_spec("coord 0 = 1\n").is_err());
    }
}
