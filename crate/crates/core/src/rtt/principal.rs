//! The principal series `s_{ij}(u) = Σ_k (ω^{-ki}/N) t_{k,j+k}(u)` and an
//! oracle for the index pattern of their commutation relation
//!
//! `(u-v)[s_{ij}(u), s_{kl}(v)] = (1/N) Σ_{a,b} ω^{φ·ab} (s_{P₁}(u) s_{P₂}(v) - s_{P₃}(v) s_{P₄}(u))`
//!
//! where each `Pₓ` is a pair of integer-linear index expressions.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::exactfield::json::matrix_to_json;
use crate::exactfield::{rat, CycMatrix, CycNum};
use crate::index::residue;
use crate::report::{Item, Report};

use super::evaluation::{evaluation_entry, Convention, SeriesMatrix};
use super::rmatrix::SpectralOperator;

pub const DEFAULT_PATTERNS: &str = include_str!("../../data/principal_patterns.json");

const VARS: [char; 6] = ['i', 'j', 'k', 'l', 'a', 'b'];

/// `s_{ij}(u)`; indices are residues mod `N`.
pub fn principal_series(n: usize, i: i64, j: i64) -> SeriesMatrix {
    let o = n as u32;
    let mut out = SeriesMatrix::zero(n);
    for k in 0..n as i64 {
        let c = CycNum::omega_power(o, -k * i).scale(&rat(1, n as i64));
        out.add_scaled(&c, &evaluation_entry(n, Convention::Direct, k, j + k));
    }
    out
}

/// `Σ_i ω^{ki} s_{ij}(u)`, which should give back `t_{k,j+k}(u)`.
pub fn forward_fourier(n: usize, k: i64, j: i64) -> SeriesMatrix {
    let mut out = SeriesMatrix::zero(n);
    for i in 0..n as i64 {
        out.add_scaled(
            &CycNum::omega_power(n as u32, k * i),
            &principal_series(n, i, j),
        );
    }
    out
}

/// `c₀ + Σ cᵥ·v` over `v ∈ {i, j, k, l, a, b}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexExpr {
    pub coeffs: [i64; 6],
    pub constant: i64,
}

impl IndexExpr {
    pub fn eval(&self, env: &[i64; 6]) -> i64 {
        self.constant + self.coeffs.iter().zip(env).map(|(c, v)| c * v).sum::<i64>()
    }
}

impl FromStr for IndexExpr {
    type Err = Error;

    /// Parses sums such as `k+a`, `i-a`, `2j - b + 1`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Config(format!("bad index expression {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut out = IndexExpr {
            coeffs: [0; 6],
            constant: 0,
        };
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'+' => (1, &rest[1..]),
                b'-' => (-1, &rest[1..]),
                _ if rest.len() == compact.len() => (1, rest),
                _ => return Err(bad()),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let term = &body[..end];
            rest = &body[end..];
            let digits: String = term.chars().take_while(|c| c.is_ascii_digit()).collect();
            let var = &term[digits.len()..];
            let mag: i64 = if digits.is_empty() {
                1
            } else {
                digits.parse().map_err(|_| bad())?
            };
            match var.len() {
                0 if !digits.is_empty() => out.constant += sign * mag,
                1 => {
                    let v = var.chars().next().expect("one char");
                    let pos = VARS.iter().position(|&c| c == v).ok_or_else(bad)?;
                    out.coeffs[pos] += sign * mag;
                }
                _ => return Err(bad()),
            }
        }
        Ok(out)
    }
}

impl fmt::Display for IndexExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut put = |f: &mut fmt::Formatter<'_>, c: i64, v: &str| -> fmt::Result {
            if c == 0 {
                return Ok(());
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            first = false;
            let mag = c.abs();
            if mag == 1 && !v.is_empty() {
                write!(f, "{sign}{v}")
            } else {
                write!(f, "{sign}{mag}{v}")
            }
        };
        for (c, v) in self.coeffs.iter().zip(VARS) {
            put(f, *c, &v.to_string())?;
        }
        put(f, self.constant, "")?;
        if self.coeffs.iter().all(|&c| c == 0) && self.constant == 0 {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// On-disk form of a pattern.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PatternSpec {
    pub name: String,
    pub slots: Vec<String>,
    pub phase_ab: i64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PatternFile {
    #[serde(default)]
    pub family: String,
    pub patterns: Vec<PatternSpec>,
}

/// Index assignment for the eight right-hand slots and the phase `ω^{φ·ab}`.
#[derive(Clone, Debug, PartialEq)]
pub struct IndexPattern {
    pub name: String,
    pub slots: [IndexExpr; 8],
    pub phase_ab: i64,
}

impl IndexPattern {
    pub fn from_spec(spec: &PatternSpec) -> Result<Self> {
        if spec.slots.len() != 8 {
            return Err(Error::Config(format!(
                "pattern {} needs 8 slots, got {}",
                spec.name,
                spec.slots.len()
            )));
        }
        let parsed: Vec<IndexExpr> = spec
            .slots
            .iter()
            .map(|s| s.parse())
            .collect::<Result<_>>()?;
        let slots: [IndexExpr; 8] = parsed.try_into().expect("length checked");
        Ok(Self {
            name: spec.name.clone(),
            slots,
            phase_ab: spec.phase_ab,
        })
    }

    pub fn to_spec(&self) -> PatternSpec {
        PatternSpec {
            name: self.name.clone(),
            slots: self.slots.iter().map(|s| s.to_string()).collect(),
            phase_ab: self.phase_ab,
        }
    }
}

pub fn parse_patterns(json: &str) -> Result<Vec<IndexPattern>> {
    let file: PatternFile = serde_json::from_str(json)?;
    if file.patterns.is_empty() {
        return Err(Error::Config("pattern file has no patterns".into()));
    }
    file.patterns.iter().map(IndexPattern::from_spec).collect()
}

pub fn default_patterns() -> Vec<IndexPattern> {
    parse_patterns(DEFAULT_PATTERNS).expect("bundled pattern file parses")
}

pub fn find_pattern<'a>(patterns: &'a [IndexPattern], name: &str) -> Result<&'a IndexPattern> {
    patterns
        .iter()
        .find(|p| p.name == name)
        .ok_or_else(|| Error::UnknownPattern(name.to_string()))
}

/// Cleared series `u·s_{ij}(u)`, `v·s_{ij}(v)` and all their products, for one `N`.
pub struct RelationOracle {
    pub n: usize,
    u_products: BTreeMap<(usize, usize), SpectralOperator>,
    v_products: BTreeMap<(usize, usize), SpectralOperator>,
    lhs: BTreeMap<(usize, usize), SpectralOperator>,
}

impl RelationOracle {
    pub fn new(n: usize) -> Self {
        let mut su = Vec::with_capacity(n * n);
        let mut sv = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let s = principal_series(n, i as i64, j as i64);
                su.push(s.cleared(true));
                sv.push(s.cleared(false));
            }
        }
        let o = n as u32;
        let id = CycMatrix::identity(o, n);
        let u_minus_v =
            SpectralOperator::monomial(1, 0, id.clone()).sub(&SpectralOperator::monomial(0, 1, id));
        let mut u_products = BTreeMap::new();
        let mut v_products = BTreeMap::new();
        let mut lhs = BTreeMap::new();
        for p in 0..n * n {
            for q in 0..n * n {
                let uv = su[p].mul(&sv[q]);
                let vu = sv[q].mul(&su[p]);
                lhs.insert((p, q), u_minus_v.mul(&uv.sub(&vu)));
                u_products.insert((p, q), uv);
                v_products.insert((p, q), sv[p].mul(&su[q]));
            }
        }
        Self {
            n,
            u_products,
            v_products,
            lhs,
        }
    }

    fn at(&self, x: i64, y: i64) -> usize {
        residue(self.n, x) * self.n + residue(self.n, y)
    }

    /// Cleared sides for the index tuple `(i, j, k, l)`.
    pub fn sides(
        &self,
        pattern: &IndexPattern,
        i: i64,
        j: i64,
        k: i64,
        l: i64,
    ) -> (SpectralOperator, SpectralOperator) {
        let n = self.n;
        let lhs = self.lhs[&(self.at(i, j), self.at(k, l))].clone();
        let mut rhs = SpectralOperator::zero(n as u32, n);
        for a in 0..n as i64 {
            for b in 0..n as i64 {
                let env = [i, j, k, l, a, b];
                let e: Vec<i64> = pattern.slots.iter().map(|s| s.eval(&env)).collect();
                let w = CycNum::omega_power(n as u32, pattern.phase_ab * a * b);
                rhs.add_scaled(
                    &w,
                    &self.u_products[&(self.at(e[0], e[1]), self.at(e[2], e[3]))],
                );
                rhs.add_scaled(
                    &w.neg(),
                    &self.v_products[&(self.at(e[4], e[5]), self.at(e[6], e[7]))],
                );
            }
        }
        (lhs, rhs.scale_rational(&rat(1, n as i64)))
    }

    /// First index tuple where the pattern fails, if any.
    pub fn first_failure(&self, pattern: &IndexPattern) -> Option<[i64; 4]> {
        let n = self.n as i64;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let (lhs, rhs) = self.sides(pattern, i, j, k, l);
                        if lhs != rhs {
                            return Some([i, j, k, l]);
                        }
                    }
                }
            }
        }
        None
    }

    /// One item per index tuple.
    pub fn check(&self, pattern: &IndexPattern) -> Report {
        let n = self.n as i64;
        let mut items = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let (lhs, rhs) = self.sides(pattern, i, j, k, l);
                        items.push(Item::check(
                            format!("{} (i,j,k,l)=({i},{j},{k},{l})", pattern.name),
                            lhs == rhs,
                            || lhs.diff_json(&rhs),
                        ));
                    }
                }
            }
        }
        Report::new("principal-relation", self.n, items)
    }
}

/// `check_principal_relation` by pattern name.
pub fn check_principal_relation(n: usize, patterns: &[IndexPattern], name: &str) -> Result<Report> {
    let p = find_pattern(patterns, name)?;
    Ok(RelationOracle::new(n).check(p))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PatternStatus {
    /// fails at the first size
    Rejected,
    /// holds at the first size but fails at a later one
    Spurious,
    /// holds at every size checked
    Confirmed,
}

#[derive(Clone, Debug, Serialize)]
pub struct PatternOutcome {
    pub name: String,
    pub status: PatternStatus,
    /// `(N, [i,j,k,l])` of the first counterexample.
    pub counterexample: Option<(usize, [i64; 4])>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchResult {
    pub sizes: Vec<usize>,
    pub outcomes: Vec<PatternOutcome>,
}

impl SearchResult {
    pub fn confirmed(&self) -> impl Iterator<Item = &PatternOutcome> {
        self.outcomes
            .iter()
            .filter(|o| o.status == PatternStatus::Confirmed)
    }

    pub fn outcome(&self, name: &str) -> Option<&PatternOutcome> {
        self.outcomes.iter().find(|o| o.name == name)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }
}

/// Screens every pattern at `sizes[0]` and promotes survivors through the
/// remaining sizes.
pub fn pattern_search(patterns: &[IndexPattern], sizes: &[usize]) -> SearchResult {
    let oracles: Vec<RelationOracle> = sizes.iter().map(|&n| RelationOracle::new(n)).collect();
    let outcomes = patterns
        .iter()
        .map(|p| {
            for (pos, oracle) in oracles.iter().enumerate() {
                if let Some(ce) = oracle.first_failure(p) {
                    let status = if pos == 0 {
                        PatternStatus::Rejected
                    } else {
                        PatternStatus::Spurious
                    };
                    return PatternOutcome {
                        name: p.name.clone(),
                        status,
                        counterexample: Some((oracle.n, ce)),
                    };
                }
            }
            PatternOutcome {
                name: p.name.clone(),
                status: PatternStatus::Confirmed,
                counterexample: None,
            }
        })
        .collect();
    SearchResult {
        sizes: sizes.to_vec(),
        outcomes,
    }
}

/// Principal-relation suite for one `N`: series sanity plus, for every
/// pattern, whether it holds at this `N`. Only the existence of a valid
/// pattern is an item; per-pattern verdicts are notes.
pub fn verify_principal_relation(n: usize, patterns: &[IndexPattern]) -> Report {
    let o = n as u32;
    let mut items = Vec::new();
    let mut roundtrip = true;
    for k in 0..n as i64 {
        for j in 0..n as i64 {
            roundtrip &=
                forward_fourier(n, k, j) == evaluation_entry(n, Convention::Direct, k, j + k);
        }
    }
    items.push(Item::check("fourier roundtrip", roundtrip, || {
        (json!("mismatch"), json!("t_{k,j+k}(u)"))
    }));
    let s00 = principal_series(n, 0, 0);
    let id = CycMatrix::identity(o, n);
    items.push(Item::check(
        "s_00 constant term",
        s00.constant == id,
        || (matrix_to_json(&s00.constant), matrix_to_json(&id)),
    ));
    let mut constants_ok = true;
    for i in 0..n as i64 {
        for j in 0..n as i64 {
            if (i, j) != (0, 0) {
                constants_ok &= principal_series(n, i, j).constant.is_zero();
            }
        }
    }
    items.push(Item::check(
        "s_ij constant term zero off (0,0)",
        constants_ok,
        || (json!("nonzero"), json!("zero")),
    ));
    let mut pole_ok = true;
    for i in 0..n as i64 {
        for j in 0..n as i64 {
            let expect = crate::lie::principal_matrix(n, -i, j).scale_rational(&rat(1, n as i64));
            pole_ok &= principal_series(n, i, j).pole == expect;
        }
    }
    items.push(Item::check("s_ij pole = A_{-i,j}/N", pole_ok, || {
        (json!("mismatch"), json!("A_{-i,j}/N"))
    }));

    let oracle = RelationOracle::new(n);
    let mut holding = Vec::new();
    let mut notes = Vec::new();
    for p in patterns {
        match oracle.first_failure(p) {
            None => holding.push(p.name.clone()),
            Some(ce) => notes.push(format!("pattern {} fails at (i,j,k,l)={ce:?}", p.name)),
        }
    }
    items.push(Item::check(
        "some pattern holds",
        !holding.is_empty(),
        || (json!([]), json!(["at least one pattern"])),
    ));
    let mut report = Report::new("principal-relation", n, items)
        .with_note(format!("holding at N={n}: {}", holding.join(" | ")));
    for note in notes
        .into_iter()
        .filter(|s| s.contains("as-printed") || s.contains("l-restored"))
    {
        report = report.with_note(note);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expression_parsing() {
        let e: IndexExpr = "k+a".parse().unwrap();
        assert_eq!(e.coeffs, [0, 0, 1, 0, 1, 0]);
        let e: IndexExpr = " 2j - b + 1".parse().unwrap();
        assert_eq!(e.coeffs, [0, 2, 0, 0, 0, -1]);
        assert_eq!(e.constant, 1);
        assert_eq!(e.to_string(), "2j-b+1");
        assert_eq!(e.eval(&[0, 3, 0, 0, 0, 2]), 5);
        for bad in ["", "x", "k+", "kk", "1.5"] {
            assert!(bad.parse::<IndexExpr>().is_err(), "{bad}");
        }
        let e: IndexExpr = "-i".parse().unwrap();
        assert_eq!(e.to_string(), "-i");
    }

    #[test]
    fn bundled_family() {
        let ps = default_patterns();
        assert_eq!(ps.len(), 32);
        assert!(find_pattern(&ps, "as-printed").is_ok());
        assert!(find_pattern(&ps, "l-restored").is_ok());
        assert!(matches!(
            find_pattern(&ps, "nope"),
            Err(Error::UnknownPattern(_))
        ));
        for p in &ps {
            assert_eq!(IndexPattern::from_spec(&p.to_spec()).unwrap(), *p);
        }
    }

    #[test]
    fn wrong_slot_count_is_rejected() {
        let spec = PatternSpec {
            name: "x".into(),
            slots: vec!["i".into(); 7],
            phase_ab: -1,
        };
        assert!(IndexPattern::from_spec(&spec).is_err());
    }

    #[test]
    fn search_at_two_and_three() {
        let ps = default_patterns();
        let r = pattern_search(&ps, &[2, 3]);
        assert_eq!(
            r.outcome("as-printed").unwrap().status,
            PatternStatus::Rejected
        );
        assert_ne!(
            r.outcome("l-restored").unwrap().status,
            PatternStatus::Confirmed
        );
        let good: Vec<_> = r.confirmed().map(|o| o.name.as_str()).collect();
        assert!(good.contains(&"k+a,j+b;i-a,l-b;w^-ab"), "{good:?}");
    }

    #[test]
    fn series_suite_n3() {
        assert!(verify_principal_relation(3, &default_patterns()).all_passed());
    }
}
