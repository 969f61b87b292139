//! Problem-file parsing, the command pipeline and report emission.
//!
//! # File format
//!
//! ```text
//! ring: x, y, z          # variables, smallest first: x₁ = x < x₂ = y < x₃ = z
//! order: degrevlex       # optional: lex | deglex | degrevlex (default degrevlex)
//! ideal:
//!   z^2 - y^2 - 2*x^2
//!   x*z + x*y
//!   y*z + y^2 + x^2
//! ```
//!
//! Submodules of a free module are written with tuple generators:
//!
//! ```text
//! ring: x, y
//! module rank 2:
//!   (y^2, 0)
//!   (x*y, 1)
//!   (0, x)
//! ```
//!
//! Coefficients are exact rationals (`3`, `-2`, `1/2`); `^` is the exponent,
//! `*` the product, and a product between a coefficient and a variable may be
//! left implicit (`2x`).  Lines starting with `#` are comments.
//!
//! **Variables listed first are smallest.**

use crate::basis::{
    complete, find_delta_regular_coordinates, CompletionLimits, CompletionOutcome,
    DeltaWitness, InvolutiveBasis,
};
use crate::coord::CoordinateChange;
use crate::decomp::{
    cohen_macaulay, complementary_decomposition_janet, depth, hilbert, krull_dimension,
    primary_decomposition, regularity_bounds, saturate, standard_pairs, trung_invariants,
    ConeDecomposition,
};
use crate::division::Division;
use crate::exponent::Exponent;
use crate::order::OrderKind;
use crate::poly::{Poly, Q};
use crate::syzygy::{extremal_betti, free_resolution, minimize, projective_dimension, regularity};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Map, Value};
use std::collections::BTreeSet;

/// All commands understood by [`run`] and the command line.
pub const COMMANDS: [&str; 12] = [
    "complete",
    "delta-check",
    "regular-coords",
    "analyze",
    "decompose",
    "standard-pairs",
    "primary",
    "resolve",
    "betti",
    "regularity",
    "saturate",
    "trung",
];

// ---------------------------------------------------------------------------
// Problem files
// ---------------------------------------------------------------------------

/// A parsed problem file.
#[derive(Clone, Debug)]
pub struct ProblemSpec {
    /// Variable names, smallest first.
    pub vars: Vec<String>,
    pub order: OrderKind,
    /// Rank of the ambient free module (1 for ideals).
    pub rank: usize,
    pub gens: Vec<Poly>,
    pub is_module: bool,
    /// Non-fatal notes collected while parsing (e.g. skipped zero generators).
    pub warnings: Vec<String>,
}

impl ProblemSpec {
    pub fn n(&self) -> usize {
        self.vars.len()
    }
}

#[derive(Debug, thiserror::Error)]
#[error("line {line}, column {col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

fn perr(line: usize, col: usize, msg: impl Into<String>) -> ParseError {
    ParseError { line, col, msg: msg.into() }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
}

fn lex(line: &str, lineno: usize) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = line.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let col = i + 1;
        match chars[i] {
            ' ' | '\t' => i += 1,
            '+' => {
                out.push((col, Tok::Plus));
                i += 1;
            }
            '-' => {
                out.push((col, Tok::Minus));
                i += 1;
            }
            '*' => {
                out.push((col, Tok::Star));
                i += 1;
            }
            '/' => {
                out.push((col, Tok::Slash));
                i += 1;
            }
            '^' => {
                out.push((col, Tok::Caret));
                i += 1;
            }
            '(' => {
                out.push((col, Tok::LParen));
                i += 1;
            }
            ')' => {
                out.push((col, Tok::RParen));
                i += 1;
            }
            ',' => {
                out.push((col, Tok::Comma));
                i += 1;
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push((col, Tok::Num(s.parse().unwrap())));
            }
            c if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((col, Tok::Ident(chars[start..i].iter().collect())));
            }
            c => return Err(perr(lineno, col, format!("unexpected character {c:?}"))),
        }
    }
    Ok(out)
}

struct ExprParser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    line: usize,
    vars: &'a [String],
    ord: OrderKind,
}

impl<'a> ExprParser<'a> {
    fn new(text: &str, lineno: usize, vars: &'a [String], ord: OrderKind) -> Result<Self, ParseError> {
        Ok(ExprParser { toks: lex(text, lineno)?, pos: 0, line: lineno, vars, ord })
    }

    fn n(&self) -> usize {
        self.vars.len()
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn col(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|(c, _)| *c)
            .unwrap_or_else(|| self.toks.last().map(|(c, _)| c + 1).unwrap_or(1))
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        perr(self.line, self.col(), msg)
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected {what}")))
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    /// expr := ['+'|'-'] product (('+'|'-') product)*
    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.signed_product()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let p = self.signed_product()?;
                    acc = acc.add(&p, self.ord);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let p = self.signed_product()?;
                    acc = acc.sub(&p, self.ord);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn signed_product(&mut self) -> Result<Poly, ParseError> {
        let mut negative = false;
        while let Some(t) = self.peek() {
            match t {
                Tok::Minus => {
                    negative = !negative;
                    self.pos += 1;
                }
                Tok::Plus => self.pos += 1,
                _ => break,
            }
        }
        let p = self.product()?;
        Ok(if negative { p.neg() } else { p })
    }

    /// product := factor (('*' | '/')? factor)*, with implicit products
    fn product(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = acc.mul_poly(&f, self.ord);
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let col = self.col();
                    let f = self.factor()?;
                    let c = constant_value(&f)
                        .ok_or_else(|| perr(self.line, col, "division only by a nonzero constant"))?;
                    if c.is_zero() {
                        return Err(perr(self.line, col, "division by zero"));
                    }
                    acc = acc.scale(&c.recip());
                }
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    let f = self.factor()?;
                    acc = acc.mul_poly(&f, self.ord);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    /// factor := primary ('^' integer)?
    fn factor(&mut self) -> Result<Poly, ParseError> {
        let base = self.primary()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let col = self.col();
            match self.bump() {
                Some(Tok::Num(e)) => {
                    let e = e
                        .to_u32()
                        .ok_or_else(|| perr(self.line, col, "exponent out of range"))?;
                    let mut acc = Poly::constant(self.n(), Q::one());
                    for _ in 0..e {
                        acc = acc.mul_poly(&base, self.ord);
                    }
                    Ok(acc)
                }
                _ => Err(perr(self.line, col, "expected an integer exponent after '^'")),
            }
        } else {
            Ok(base)
        }
    }

    fn primary(&mut self) -> Result<Poly, ParseError> {
        let col = self.col();
        match self.bump() {
            Some(Tok::Num(v)) => Ok(Poly::constant(self.n(), Q::from_integer(v))),
            Some(Tok::Ident(name)) => {
                let i = self
                    .vars
                    .iter()
                    .position(|v| *v == name)
                    .ok_or_else(|| perr(self.line, col, format!("unknown variable '{name}'")))?;
                Ok(Poly::monomial(Exponent::unit(self.n(), i + 1)))
            }
            Some(Tok::LParen) => {
                let p = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(p)
            }
            Some(_) => Err(perr(self.line, col, "expected a coefficient, variable or '('")),
            None => Err(perr(self.line, col, "unexpected end of expression")),
        }
    }

    /// A module generator: '(' expr (',' expr)* ')'.
    fn tuple(&mut self, rank: usize) -> Result<Poly, ParseError> {
        self.expect(Tok::LParen, "'(' starting a module generator")?;
        let mut comps = vec![self.expr()?];
        while self.peek() == Some(&Tok::Comma) {
            self.pos += 1;
            comps.push(self.expr()?);
        }
        self.expect(Tok::RParen, "')'")?;
        if comps.len() != rank {
            return Err(self.err(format!(
                "module generator has {} components, the rank is {rank}",
                comps.len()
            )));
        }
        let mut terms = Vec::new();
        for (i, c) in comps.iter().enumerate() {
            for (t, q) in &c.terms {
                let mut t = t.clone();
                t.comp = i;
                terms.push((t, q.clone()));
            }
        }
        Ok(Poly::from_terms(terms, self.ord))
    }
}

/// The value of a constant polynomial, `None` when any variable appears.
fn constant_value(p: &Poly) -> Option<Q> {
    if p.is_zero() {
        return Some(Q::zero());
    }
    match &p.terms[..] {
        [(t, c)] if t.comp == 0 && t.exp.is_zero() => Some(c.clone()),
        _ => None,
    }
}

fn valid_name(s: &str) -> bool {
    !s.is_empty()
        && s.chars().next().unwrap().is_alphabetic()
        && s.chars().all(|c| c.is_alphanumeric() || c == '_')
}

/// Parse a problem file into a [`ProblemSpec`].
pub fn parse_problem(text: &str) -> Result<ProblemSpec, ParseError> {
    let mut vars: Option<Vec<String>> = None;
    let mut order = OrderKind::DegRevLex;
    let mut rank = 1usize;
    let mut is_module = false;
    let mut in_generators = false;
    let mut gens: Vec<Poly> = Vec::new();
    let mut warnings: Vec<String> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        if !in_generators {
            let t = line.trim();
            if let Some(rest) = t.strip_prefix("ring:") {
                let names: Vec<String> = rest.split(',').map(|s| s.trim().to_string()).collect();
                for name in &names {
                    if !valid_name(name) {
                        return Err(perr(lineno, 1, format!("invalid variable name '{name}'")));
                    }
                }
                let set: BTreeSet<&String> = names.iter().collect();
                if set.len() != names.len() {
                    return Err(perr(lineno, 1, "variable names must be distinct"));
                }
                vars = Some(names);
            } else if let Some(rest) = t.strip_prefix("order:") {
                order = OrderKind::parse(rest.trim()).ok_or_else(|| {
                    perr(lineno, 1, format!("unknown order '{}'", rest.trim()))
                })?;
            } else if t == "ideal:" {
                if vars.is_none() {
                    return Err(perr(lineno, 1, "'ring:' must come before the generators"));
                }
                in_generators = true;
            } else if let Some(rest) = t.strip_prefix("module rank") {
                let rest = rest.trim_end();
                let rest = rest
                    .strip_suffix(':')
                    .ok_or_else(|| perr(lineno, 1, "expected 'module rank N:'"))?;
                rank = rest
                    .trim()
                    .parse()
                    .map_err(|_| perr(lineno, 1, "expected 'module rank N:' with N a positive integer"))?;
                if rank == 0 {
                    return Err(perr(lineno, 1, "the rank must be positive"));
                }
                if vars.is_none() {
                    return Err(perr(lineno, 1, "'ring:' must come before the generators"));
                }
                is_module = true;
                in_generators = true;
            } else {
                return Err(perr(lineno, 1, "expected 'ring:', 'order:', 'ideal:' or 'module rank N:'"));
            }
        } else {
            let vars = vars.as_ref().unwrap();
            let mut parser = ExprParser::new(line, lineno, vars, order)?;
            let g = if is_module { parser.tuple(rank)? } else { parser.expr()? };
            if !parser.at_end() {
                return Err(parser.err("trailing input after the generator"));
            }
            if g.is_zero() {
                warnings.push(format!("line {lineno}: zero generator skipped"));
            } else {
                gens.push(g);
            }
        }
    }
    let vars = vars.ok_or_else(|| perr(1, 1, "missing 'ring:' line"))?;
    if !in_generators {
        return Err(perr(1, 1, "missing 'ideal:' or 'module rank N:' section"));
    }
    Ok(ProblemSpec { vars, order, rank, gens, is_module, warnings })
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

/// Options taken from the command line.
#[derive(Clone, Debug)]
pub struct RunOptions {
    pub division: Division,
    /// Overrides the order named in the problem file.
    pub order: Option<OrderKind>,
    pub limits: CompletionLimits,
    pub seed: u64,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            division: Division::Pommaret,
            order: None,
            limits: CompletionLimits::none(),
            seed: 0,
        }
    }
}

/// A structured report plus the process exit code: 0 success, 1 input error,
/// 2 mathematical divergence witness, 3 cap exceeded.
#[derive(Clone, Debug)]
pub struct Report {
    pub json: Value,
    pub exit_code: i32,
}

fn jq(q: &Q) -> Value {
    if q.is_integer() {
        json!(q.numer().to_string().parse::<i64>().map(Value::from).unwrap_or_else(|_| Value::String(q.numer().to_string())))
    } else {
        Value::String(q.to_string())
    }
}

fn jvars(set: &BTreeSet<usize>, vars: &[String]) -> Value {
    Value::Array(set.iter().map(|&i| Value::String(vars[i - 1].clone())).collect())
}

fn jbasis(b: &InvolutiveBasis, vars: &[String]) -> Value {
    let gens: Vec<Value> = b
        .gens
        .iter()
        .enumerate()
        .map(|(i, g)| {
            json!({
                "poly": g.render(vars, b.rank),
                "lt": Poly::term(g.lt().unwrap().0.clone(), Q::one()).render(vars, b.rank),
                "class": g.le().unwrap().cls(),
                "multiplicative": jvars(&b.assignment.mult[i], vars),
            })
        })
        .collect();
    json!({
        "division": b.division.name(),
        "size": b.gens.len(),
        "degree": b.deg(),
        "generators": gens,
    })
}

fn jwitness(w: &DeltaWitness, partial: &InvolutiveBasis, vars: &[String]) -> Value {
    json!({
        "generator": partial.gens[w.generator].le().unwrap().render(vars),
        "variable": vars[w.variable - 1],
    })
}

fn jchange(c: &CoordinateChange, vars: &[String]) -> Value {
    let rows: Vec<Value> = c
        .matrix
        .iter()
        .map(|row| Value::Array(row.iter().map(jq).collect()))
        .collect();
    // render each substitution x_i ↦ Σ_j A[i][j] x_j
    let forms: Vec<Value> = c
        .matrix
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut parts: Vec<String> = Vec::new();
            for (j, a) in row.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                if a.is_one() {
                    parts.push(vars[j].clone());
                } else {
                    parts.push(format!("{}*{}", a, vars[j]));
                }
            }
            Value::String(format!("{} -> {}", vars[i], parts.join(" + ")))
        })
        .collect();
    json!({ "identity": c.is_identity(), "matrix": rows, "substitutions": forms })
}

fn jcones(dec: &ConeDecomposition, vars: &[String]) -> Value {
    let cones: Vec<Value> = dec
        .cones
        .iter()
        .map(|c| {
            json!({
                "vertex": c.vertex.render(vars),
                "multiplicative": jvars(&c.mult, vars),
                "dimension": c.dim(),
            })
        })
        .collect();
    json!({ "count": dec.cones.len(), "cones": cones })
}

fn jexps(exps: &[Exponent], vars: &[String]) -> Value {
    Value::Array(exps.iter().map(|e| Value::String(e.render(vars))).collect())
}

/// The leading-term ideal of a basis as a monomial Pommaret basis.
fn monomialized(b: &InvolutiveBasis) -> InvolutiveBasis {
    let gens: Vec<Poly> = b.les().into_iter().map(Poly::monomial).collect();
    InvolutiveBasis::new(gens, Division::Pommaret, b.order, b.n, b.rank)
}

enum Stage {
    Done(Value, i32),
    Basis(InvolutiveBasis),
}

/// Complete with the given division; divergence and caps become report blocks.
fn completed(
    spec: &ProblemSpec,
    opts: &RunOptions,
    div: Division,
    ord: OrderKind,
) -> Stage {
    match complete(&spec.gens, div, ord, spec.n(), spec.rank, opts.limits) {
        CompletionOutcome::Basis(b) => Stage::Basis(b),
        CompletionOutcome::Diverged { witness, partial } => Stage::Done(
            json!({
                "diverged": true,
                "witness": jwitness(&witness, &partial, &spec.vars),
                "partial_size": partial.gens.len(),
            }),
            2,
        ),
        CompletionOutcome::LimitExceeded { partial } => Stage::Done(
            json!({
                "cap_exceeded": true,
                "partial_size": partial.gens.len(),
                "partial_degree": partial.deg(),
            }),
            3,
        ),
    }
}

/// A Pommaret basis in δ-regular coordinates (degrevlex), searching for a
/// coordinate change when necessary.
fn regular_basis(spec: &ProblemSpec, opts: &RunOptions) -> Result<(InvolutiveBasis, CoordinateChange, usize), Stage> {
    match find_delta_regular_coordinates(
        &spec.gens,
        OrderKind::DegRevLex,
        spec.n(),
        spec.rank,
        opts.limits,
        opts.seed,
    ) {
        Ok(rc) => Ok((rc.basis, rc.change, rc.rounds)),
        Err(partial) => Err(Stage::Done(
            json!({
                "cap_exceeded": true,
                "partial_size": partial.gens.len(),
                "partial_degree": partial.deg(),
            }),
            3,
        )),
    }
}

fn ideal_only(spec: &ProblemSpec, command: &str) -> Option<(Value, i32)> {
    if spec.rank > 1 {
        Some((
            json!({ "error": format!("'{command}' is defined for ideals, not modules") }),
            1,
        ))
    } else {
        None
    }
}

/// Run one command against a parsed problem and produce the full report.
pub fn run(command: &str, spec: &ProblemSpec, opts: &RunOptions) -> Report {
    let ord = opts.order.unwrap_or(spec.order);
    let vars = &spec.vars;
    let (result, exit_code) = dispatch(command, spec, opts, ord);

    let mut root = Map::new();
    root.insert("schema".into(), json!(1));
    root.insert("command".into(), json!(command));
    root.insert("ring".into(), json!(vars));
    root.insert("order".into(), json!(ord.name()));
    root.insert("division".into(), json!(opts.division.name()));
    root.insert("rank".into(), json!(spec.rank));
    root.insert("variables_smallest_first".into(), json!(true));
    root.insert("seed".into(), json!(opts.seed));
    root.insert(
        "caps".into(),
        json!({ "degcap": opts.limits.degcap, "itercap": opts.limits.itercap }),
    );
    root.insert(
        "generators".into(),
        Value::Array(spec.gens.iter().map(|g| Value::String(g.render(vars, spec.rank))).collect()),
    );
    if !spec.warnings.is_empty() {
        root.insert("warnings".into(), json!(spec.warnings));
    }
    root.insert("result".into(), result);
    root.insert("exit".into(), json!(exit_code));
    Report { json: Value::Object(root), exit_code }
}

fn dispatch(command: &str, spec: &ProblemSpec, opts: &RunOptions, ord: OrderKind) -> (Value, i32) {
    let n = spec.n();
    let vars = &spec.vars;
    match command {
        "complete" => match completed(spec, opts, opts.division, ord) {
            Stage::Done(v, c) => (v, c),
            Stage::Basis(b) => (json!({ "basis": jbasis(&b, vars) }), 0),
        },
        "delta-check" => {
            if !ord.is_class_respecting() {
                return (json!({ "error": "delta-check needs a class-respecting order (deglex or degrevlex)" }), 1);
            }
            match completed(spec, opts, Division::Pommaret, ord) {
                Stage::Done(v, c) => {
                    let mut m = Map::new();
                    m.insert("delta_regular".into(), json!(false));
                    if let Value::Object(o) = v {
                        m.extend(o);
                    }
                    (Value::Object(m), c)
                }
                Stage::Basis(b) => (
                    json!({ "delta_regular": true, "basis": jbasis(&b, vars) }),
                    0,
                ),
            }
        }
        "regular-coords" => match regular_basis(spec, opts) {
            Err(Stage::Done(v, c)) => (v, c),
            Err(Stage::Basis(_)) => unreachable!(),
            Ok((basis, change, rounds)) => (
                json!({
                    "change": jchange(&change, vars),
                    "rounds": rounds,
                    "basis": jbasis(&basis, vars),
                }),
                0,
            ),
        },
        "analyze" => {
            if spec.gens.is_empty() {
                return (
                    json!({
                        "zero_ideal": true,
                        "dimension": n,
                        "depth": n,
                        "projective_dimension": 0,
                        "regularity": 0,
                    }),
                    0,
                );
            }
            let (basis, change, _) = match regular_basis(spec, opts) {
                Ok(t) => t,
                Err(Stage::Done(v, c)) => return (v, c),
                Err(Stage::Basis(_)) => unreachable!(),
            };
            let lt = monomialized(&basis);
            let (d, seq) = depth(&basis);
            let pd = projective_dimension(&basis);
            let mut m = Map::new();
            m.insert("homogeneous".into(), json!(spec.gens.iter().all(|g| g.is_homogeneous())));
            if !change.is_identity() {
                m.insert("change".into(), jchange(&change, vars));
            }
            m.insert(
                "depth".into(),
                json!({
                    "value": d,
                    "regular_sequence": seq.iter().map(|&i| vars[i - 1].clone()).collect::<Vec<_>>(),
                }),
            );
            m.insert("projective_dimension".into(), json!(pd));
            m.insert("regularity".into(), json!(basis.deg()));
            let extremal: Vec<Value> = extremal_betti(&basis)
                .iter()
                .map(|e| json!({ "position": e.position, "degree": e.degree, "value": e.value }))
                .collect();
            m.insert("extremal_betti".into(), Value::Array(extremal));
            if spec.rank == 1 {
                let (dim, indep) = krull_dimension(&lt);
                m.insert(
                    "dimension".into(),
                    json!({
                        "value": dim,
                        "independent_variables": indep.iter().map(|&i| vars[i - 1].clone()).collect::<Vec<_>>(),
                    }),
                );
                let cm = cohen_macaulay(&lt);
                m.insert("cohen_macaulay".into(), json!(cm.is_cohen_macaulay));
                m.insert(
                    "noether_normalization".into(),
                    json!({
                        "dimension": cm.noether.dimension,
                        "module_generators": jexps(&cm.noether.module_generators, vars),
                    }),
                );
            }
            m.insert("basis".into(), jbasis(&basis, vars));
            (Value::Object(m), 0)
        }
        "decompose" => {
            if let Some(e) = ideal_only(spec, command) {
                return e;
            }
            // the Janet decomposition needs no quasi-stability, so a Janet
            // basis of the leading ideal always suffices
            let basis = match completed(spec, opts, Division::Janet, ord) {
                Stage::Done(v, c) => return (v, c),
                Stage::Basis(b) => b,
            };
            let les = basis.les();
            let dec = complementary_decomposition_janet(&les, n);
            let h = hilbert(&dec);
            let result = json!({
                "leading_ideal": !basis.is_monomial(),
                "complement": jcones(&dec, vars),
                "hilbert": {
                    "numerator": h.numerator.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    "denominator_power": h.denominator_power,
                    "dimension": h.dimension,
                    "multiplicity": h.multiplicity.to_string(),
                    "polynomial": h.hilbert_polynomial.iter().map(jq).collect::<Vec<_>>(),
                    "index_of_regularity": h.index_of_regularity,
                },
            });
            (result, 0)
        }
        "standard-pairs" => {
            if let Some(e) = ideal_only(spec, command) {
                return e;
            }
            let basis = match completed(spec, opts, Division::Janet, ord) {
                Stage::Done(v, c) => return (v, c),
                Stage::Basis(b) => b,
            };
            let les = basis.les();
            let dec = complementary_decomposition_janet(&les, n);
            let report = standard_pairs(&dec, &les);
            let pairs: Vec<Value> = report
                .pairs
                .iter()
                .map(|p| json!({ "vertex": p.vertex.render(vars), "multiplicative": jvars(&p.mult, vars) }))
                .collect();
            let comps: Vec<Value> =
                report.irreducible_components.iter().map(|c| jexps(c, vars)).collect();
            (
                json!({
                    "leading_ideal": !basis.is_monomial(),
                    "pairs": pairs,
                    "irreducible_components": comps,
                    "irredundant": report.irredundant,
                }),
                0,
            )
        }
        "primary" => {
            if let Some(e) = ideal_only(spec, command) {
                return e;
            }
            let basis = match completed(spec, opts, Division::Pommaret, ord) {
                Stage::Done(v, c) => return (v, c),
                Stage::Basis(b) => b,
            };
            let les = basis.les();
            match primary_decomposition(&les, n) {
                Err(k) => (
                    json!({ "error": format!("the leading ideal is not quasi-stable at {}", vars[k - 1]) }),
                    2,
                ),
                Ok(pd) => {
                    let comps: Vec<Value> = pd
                        .components
                        .iter()
                        .map(|c| {
                            json!({
                                "generators": jexps(&c.generators, vars),
                                "k": c.k,
                                "associated_prime": c.associated_prime.iter().map(|&i| vars[i - 1].clone()).collect::<Vec<_>>(),
                            })
                        })
                        .collect();
                    let chain: Vec<Value> =
                        pd.sequential_chain.iter().map(|s| jexps(s, vars)).collect();
                    (
                        json!({
                            "leading_ideal": !basis.is_monomial(),
                            "components": comps,
                            "sequential_chain": chain,
                            "depth_index": pd.depth_index,
                            "dimension": pd.dimension,
                        }),
                        0,
                    )
                }
            }
        }
        "resolve" => {
            if opts.division == Division::Thomas {
                return (json!({ "error": "the Thomas division is not of Schreyer type; use pommaret or janet" }), 1);
            }
            let basis = match completed(spec, opts, opts.division, ord) {
                Stage::Done(v, c) => return (v, c),
                Stage::Basis(b) => b,
            };
            let res = free_resolution(&basis);
            let mut prev = res.basis.gens.len();
            let levels: Vec<Value> = res
                .levels
                .iter()
                .map(|lvl| {
                    let syz: Vec<Value> = lvl
                        .gens
                        .iter()
                        .zip(&lvl.labels)
                        .map(|(s, &(g, k))| {
                            json!({
                                "from_generator": g,
                                "variable": vars[k - 1],
                                "syzygy": s.render(vars, prev.max(2)),
                            })
                        })
                        .collect();
                    prev = lvl.gens.len();
                    json!({ "rank": lvl.gens.len(), "syzygies": syz })
                })
                .collect();
            (
                json!({
                    "basis": jbasis(&res.basis, vars),
                    "ranks": res.ranks(),
                    "length": res.levels.len(),
                    "levels": levels,
                }),
                0,
            )
        }
        "betti" => {
            if opts.division == Division::Thomas {
                return (json!({ "error": "the Thomas division is not of Schreyer type; use pommaret or janet" }), 1);
            }
            if !spec.gens.iter().all(|g| g.is_homogeneous()) {
                return (json!({ "error": "Betti numbers need homogeneous generators" }), 1);
            }
            let basis = match completed(spec, opts, opts.division, ord) {
                Stage::Done(v, c) => return (v, c),
                Stage::Basis(b) => b,
            };
            let res = free_resolution(&basis);
            let min = minimize(&res);
            let betti: Vec<Value> = min
                .betti
                .iter()
                .map(|(&(i, j), &v)| json!({ "i": i, "j": j, "value": v }))
                .collect();
            (
                json!({
                    "ranks": res.ranks(),
                    "minimal_ranks": min.degrees.iter().map(|d| d.len()).collect::<Vec<_>>(),
                    "betti": betti,
                    "projective_dimension": min.projective_dimension,
                }),
                0,
            )
        }
        "regularity" => match regularity(&spec.gens, n, opts.limits, opts.seed) {
            Err(partial) => (
                json!({
                    "cap_exceeded": true,
                    "partial_size": partial.gens.len(),
                    "partial_degree": partial.deg(),
                }),
                3,
            ),
            Ok(rep) => {
                let extremal: Vec<Value> = rep
                    .extremal
                    .iter()
                    .map(|e| json!({ "position": e.position, "degree": e.degree, "value": e.value }))
                    .collect();
                (
                    json!({
                        "regularity": rep.regularity,
                        "homogeneous": rep.homogeneous,
                        "change": jchange(&rep.change, vars),
                        "extremal_betti": extremal,
                        "basis": jbasis(&rep.basis, vars),
                    }),
                    0,
                )
            }
        },
        "saturate" => {
            if !ord.is_class_respecting() {
                return (json!({ "error": "saturation needs a class-respecting order (deglex or degrevlex)" }), 1);
            }
            let basis = match completed(spec, opts, Division::Pommaret, ord) {
                Stage::Done(v, c) => return (v, c),
                Stage::Basis(b) => b,
            };
            let (sat, satiety) = saturate(&basis);
            (
                json!({
                    "saturated": satiety.is_none(),
                    "satiety": satiety,
                    "basis": jbasis(&sat, vars),
                }),
                0,
            )
        }
        "trung" => {
            if let Some(e) = ideal_only(spec, command) {
                return e;
            }
            let basis = match completed(spec, opts, Division::Pommaret, ord) {
                Stage::Done(v, c) => return (v, c),
                Stage::Basis(b) => b,
            };
            let les = basis.les();
            match trung_invariants(&les, n, OrderKind::DegRevLex) {
                Err(k) => (
                    json!({ "error": format!("the leading ideal is not quasi-stable at {}", vars[k - 1]) }),
                    2,
                ),
                Ok(t) => {
                    let (lcm_bound, degree_bound) = regularity_bounds(&les, n);
                    (
                        json!({
                            "leading_ideal": !basis.is_monomial(),
                            "c": t.c,
                            "regularity": t.regularity,
                            "depth_index": t.depth_index,
                            "bounds": { "lcm": lcm_bound, "generator_degree": degree_bound },
                        }),
                        0,
                    )
                }
            }
        }
        other => (json!({ "error": format!("unknown command '{other}'") }), 1),
    }
}

// ---------------------------------------------------------------------------
// Emission
// ---------------------------------------------------------------------------

/// Serialize a report: `json` is schema-versioned and deterministic, `text`
/// is a human-readable rendering with basis tables.
pub fn emit(report: &Report, format: &str) -> String {
    match format {
        "json" => {
            let mut s = serde_json::to_string_pretty(&report.json).unwrap();
            s.push('\n');
            s
        }
        _ => {
            let mut out = String::new();
            render_text(&report.json, 0, &mut out);
            out
        }
    }
}

fn scalar_text(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".to_string()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(x) => Some(x.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

fn render_text(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, val) in m {
                if k == "generators" {
                    if let Some(table) = generator_table(val, indent + 1) {
                        out.push_str(&format!("{pad}{k}:\n{table}"));
                        continue;
                    }
                }
                if let Some(s) = scalar_text(val) {
                    out.push_str(&format!("{pad}{k}: {s}\n"));
                } else if let Value::Array(a) = val {
                    if let Some(line) = inline_array(a) {
                        out.push_str(&format!("{pad}{k}: {line}\n"));
                    } else {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_text(val, indent + 1, out);
                    }
                } else {
                    out.push_str(&format!("{pad}{k}:\n"));
                    render_text(val, indent + 1, out);
                }
            }
        }
        Value::Array(a) => {
            for item in a {
                if let Some(s) = scalar_text(item) {
                    out.push_str(&format!("{pad}- {s}\n"));
                } else {
                    out.push_str(&format!("{pad}-\n"));
                    render_text(item, indent + 1, out);
                }
            }
        }
        other => {
            out.push_str(&format!("{pad}{}\n", scalar_text(other).unwrap_or_default()));
        }
    }
}

fn inline_array(a: &[Value]) -> Option<String> {
    let parts: Option<Vec<String>> = a.iter().map(scalar_text).collect();
    parts.map(|p| format!("[{}]", p.join(", ")))
}

/// Aligned table for arrays of basis generators with multiplicative columns.
fn generator_table(v: &Value, indent: usize) -> Option<String> {
    let items = v.as_array()?;
    if items.is_empty() || !items.iter().all(|i| i.get("poly").is_some()) {
        return None;
    }
    let pad = "  ".repeat(indent);
    let rows: Vec<(String, String)> = items
        .iter()
        .map(|i| {
            let poly = i["poly"].as_str().unwrap_or("").to_string();
            let mult = i["multiplicative"]
                .as_array()
                .map(|a| {
                    a.iter()
                        .filter_map(|x| x.as_str())
                        .collect::<Vec<_>>()
                        .join(",")
                })
                .unwrap_or_default();
            (poly, mult)
        })
        .collect();
    let width = rows.iter().map(|(p, _)| p.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (i, (poly, mult)) in rows.iter().enumerate() {
        out.push_str(&format!("{pad}{:>3}. {poly:width$}  | {mult}\n", i + 1));
    }
    Some(out)
}

// ---------------------------------------------------------------------------
// Command line
// ---------------------------------------------------------------------------

use clap::Parser as ClapParser;

#[derive(ClapParser, Debug)]
#[command(
    name = "involutive",
    version,
    about = "Involutive bases over the rationals: completion, structure analysis, resolutions",
    long_about = "Involutive (Pommaret/Janet/Thomas) bases of ideals and modules over \
                  Q[x1..xn], with combinatorial decompositions, Hilbert data, syzygies, \
                  free resolutions, Betti tables and Castelnuovo-Mumford regularity.\n\n\
                  Variables listed first in the problem file are SMALLEST: `ring: x,y,z` \
                  means x1 = x < x2 = y < x3 = z.\n\n\
                  Exit codes: 0 success, 1 input error, 2 divergence witness, 3 cap exceeded.\n\
                  Environment: INVOLUTIVE_DEGCAP and INVOLUTIVE_ITERCAP set default caps."
)]
struct Cli {
    /// Analysis to run
    #[arg(value_parser = COMMANDS)]
    command: String,
    /// Problem file ('-' reads standard input)
    file: String,
    /// Involutive division
    #[arg(long, default_value = "pommaret", value_parser = ["pommaret", "janet", "thomas"])]
    division: String,
    /// Term order, overriding the problem file
    #[arg(long, value_parser = ["lex", "deglex", "degrevlex"])]
    order: Option<String>,
    /// Degree cap for completions (default: $INVOLUTIVE_DEGCAP)
    #[arg(long)]
    degcap: Option<u32>,
    /// Iteration cap for completions (default: $INVOLUTIVE_ITERCAP)
    #[arg(long)]
    itercap: Option<usize>,
    /// Seed for the randomized coordinate search
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output format
    #[arg(long, default_value = "text", value_parser = ["json", "text"])]
    format: String,
}

fn env_cap<T: std::str::FromStr>(name: &str) -> Option<T> {
    std::env::var(name).ok().and_then(|v| v.parse().ok())
}

/// Entry point of the `involutive` binary.
pub fn cli_main() -> ! {
    let cli = Cli::parse();
    let text = if cli.file == "-" {
        use std::io::Read;
        let mut buf = String::new();
        if std::io::stdin().read_to_string(&mut buf).is_err() {
            eprintln!("error: could not read standard input");
            std::process::exit(1);
        }
        buf
    } else {
        match std::fs::read_to_string(&cli.file) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("error: could not read {}: {e}", cli.file);
                std::process::exit(1);
            }
        }
    };
    let spec = match parse_problem(&text) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("parse error: {e}");
            std::process::exit(1);
        }
    };
    let opts = RunOptions {
        division: Division::parse(&cli.division).unwrap(),
        order: cli.order.as_deref().map(|o| OrderKind::parse(o).unwrap()),
        limits: CompletionLimits {
            degcap: cli.degcap.or_else(|| env_cap("INVOLUTIVE_DEGCAP")),
            itercap: cli.itercap.or_else(|| env_cap("INVOLUTIVE_ITERCAP")),
        },
        seed: cli.seed,
    };
    let report = run(&cli.command, &spec, &opts);
    print!("{}", emit(&report, &cli.format));
    std::process::exit(report.exit_code);
}
