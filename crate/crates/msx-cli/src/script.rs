//! The derivation-script DSL: one statement per line.
//!
//! ```text
//! # comments start with '#'
//! obj np  = self(N)
//! obj vp  = fm(V, np)
//! obj s   = em(np, vp)
//! obj kp  = -C1
//! chain ch = chain(Z; I, Z)
//! chain ap = chain(Z; iX, iI) sub
//! ```

use std::fmt;

use msx_core::algebra::Mat2;
use msx_core::chains::{
    chain_label, classify_pair, collapse_distribution, compress, form_chain, harmonic_class,
    ChainMode, ChainSpec, Harmonic,
};
use msx_core::derivation::{
    elsewhere_merge, first_merge, grammatical_equivalence, self_merge, DerivationError,
    LexCategory, SynMatrix, SynObject,
};
use msx_core::groups::{gcp_lookup, parse_token, token_or_display, GcpElem};

use crate::report::{Report, ReportKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScriptError {
    Syntax {
        line: usize,
        col: usize,
        message: String,
    },
    UndefinedIdentifier {
        line: usize,
        name: String,
    },
    Redefinition {
        line: usize,
        name: String,
    },
}

impl fmt::Display for ScriptError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScriptError::Syntax { line, col, message } => {
                write!(f, "syntax error at line {line}, column {col}: {message}")
            }
            ScriptError::UndefinedIdentifier { line, name } => {
                write!(f, "line {line}: identifier {name:?} is not defined")
            }
            ScriptError::Redefinition { line, name } => {
                write!(f, "line {line}: identifier {name:?} is already defined")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    SelfMerge(LexCategory),
    FirstMerge(LexCategory, String),
    ElsewhereMerge(String, String),
    Literal(&'static GcpElem),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Statement {
    Obj {
        line: usize,
        name: String,
        expr: Expr,
        source: String,
    },
    Chain {
        line: usize,
        name: String,
        specifier: &'static GcpElem,
        context_k: &'static GcpElem,
        context_l: &'static GcpElem,
        subtractive: bool,
        source: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Script {
    pub statements: Vec<Statement>,
}

struct LineParser<'a> {
    line_no: usize,
    text: &'a str,
    pos: usize,
}

impl<'a> LineParser<'a> {
    fn new(line_no: usize, text: &'a str) -> Self {
        Self {
            line_no,
            text,
            pos: 0,
        }
    }

    fn error(&self, message: &str) -> ScriptError {
        ScriptError::Syntax {
            line: self.line_no,
            col: self.pos + 1,
            message: message.to_string(),
        }
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        while self.rest().starts_with(' ') || self.rest().starts_with('\t') {
            self.pos += 1;
        }
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), ScriptError> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(&format!("expected {token:?}")))
        }
    }

    fn ident(&mut self) -> Result<String, ScriptError> {
        let start = self.pos;
        for c in self.rest().chars() {
            if c.is_ascii_alphanumeric() || c == '_' {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
        if self.pos == start {
            return Err(self.error("expected an identifier"));
        }
        Ok(self.text[start..self.pos].to_string())
    }

    fn matrix_token(&mut self) -> Result<&'static GcpElem, ScriptError> {
        let start = self.pos;
        for c in self.rest().chars() {
            if c.is_ascii_alphanumeric() || c == '-' {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
        let text = &self.text[start..self.pos];
        if text.is_empty() {
            return Err(self.error("expected a matrix token"));
        }
        parse_token(text).ok_or_else(|| ScriptError::Syntax {
            line: self.line_no,
            col: start + 1,
            message: format!("unknown matrix token {text:?}"),
        })
    }

    fn category(&mut self) -> Result<LexCategory, ScriptError> {
        let start = self.pos;
        let name = self.ident()?;
        LexCategory::from_letter(&name).ok_or(ScriptError::Syntax {
            line: self.line_no,
            col: start + 1,
            message: format!("unknown category token {name:?} (expected N, V, A or P)"),
        })
    }

    fn end(&mut self) -> Result<(), ScriptError> {
        self.skip_ws();
        if self.rest().is_empty() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }
}

/// Parse a script: `obj`/`chain` statements, one per line, `#` comments.
pub fn parse_script(text: &str) -> Result<Script, ScriptError> {
    let mut statements = Vec::new();
    let mut defined: Vec<String> = Vec::new();
    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw_line.find('#') {
            Some(h) => &raw_line[..h],
            None => raw_line,
        };
        if line.trim().is_empty() {
            continue;
        }
        let mut p = LineParser::new(line_no, line);
        p.skip_ws();
        if p.eat("obj") {
            p.skip_ws();
            let name = p.ident()?;
            p.skip_ws();
            p.expect("=")?;
            p.skip_ws();
            let expr = parse_expr(&mut p, &defined)?;
            p.end()?;
            if defined.contains(&name) {
                return Err(ScriptError::Redefinition {
                    line: line_no,
                    name,
                });
            }
            defined.push(name.clone());
            statements.push(Statement::Obj {
                line: line_no,
                name,
                expr,
                source: line.trim().to_string(),
            });
        } else if p.eat("chain") {
            p.skip_ws();
            let name = p.ident()?;
            p.skip_ws();
            p.expect("=")?;
            p.skip_ws();
            p.expect("chain(")?;
            p.skip_ws();
            let specifier = p.matrix_token()?;
            p.skip_ws();
            p.expect(";")?;
            p.skip_ws();
            let context_k = p.matrix_token()?;
            p.skip_ws();
            p.expect(",")?;
            p.skip_ws();
            let context_l = p.matrix_token()?;
            p.skip_ws();
            p.expect(")")?;
            p.skip_ws();
            let subtractive = p.eat("sub");
            p.end()?;
            if defined.contains(&name) {
                return Err(ScriptError::Redefinition {
                    line: line_no,
                    name,
                });
            }
            defined.push(name.clone());
            statements.push(Statement::Chain {
                line: line_no,
                name,
                specifier,
                context_k,
                context_l,
                subtractive,
                source: line.trim().to_string(),
            });
        } else {
            return Err(p.error("expected an `obj` or `chain` statement"));
        }
    }
    Ok(Script { statements })
}

fn parse_expr(p: &mut LineParser, defined: &[String]) -> Result<Expr, ScriptError> {
    if p.eat("self(") {
        p.skip_ws();
        let cat = p.category()?;
        p.skip_ws();
        p.expect(")")?;
        return Ok(Expr::SelfMerge(cat));
    }
    if p.eat("fm(") {
        p.skip_ws();
        let cat = p.category()?;
        p.skip_ws();
        p.expect(",")?;
        p.skip_ws();
        let arg = p.ident()?;
        ensure_defined(p, defined, &arg)?;
        p.skip_ws();
        p.expect(")")?;
        return Ok(Expr::FirstMerge(cat, arg));
    }
    if p.eat("em(") {
        p.skip_ws();
        let left = p.ident()?;
        ensure_defined(p, defined, &left)?;
        p.skip_ws();
        p.expect(",")?;
        p.skip_ws();
        let right = p.ident()?;
        ensure_defined(p, defined, &right)?;
        p.skip_ws();
        p.expect(")")?;
        return Ok(Expr::ElsewhereMerge(left, right));
    }
    Ok(Expr::Literal(p.matrix_token()?))
}

fn ensure_defined(p: &LineParser, defined: &[String], name: &str) -> Result<(), ScriptError> {
    if defined.iter().any(|d| d == name) {
        Ok(())
    } else {
        Err(ScriptError::UndefinedIdentifier {
            line: p.line_no,
            name: name.to_string(),
        })
    }
}

/// A derivation failure, located at its statement.
#[derive(Debug, Clone)]
pub struct RunError {
    pub line: usize,
    pub statement: String,
    pub message: String,
}

#[allow(clippy::large_enum_variant)]
enum Binding {
    Obj(SynObject),
    Chain,
}

fn violation_name(err: &DerivationError) -> String {
    match err {
        DerivationError::OnlyNounsSelfMerge(_) => format!("{err} [only nouns self-merge]"),
        DerivationError::SelectionViolation {
            head,
            complement_label,
        } => format!(
            "selection violation: {head} rejects a {complement_label} complement \
             [Jarret graph; starred head-complement pattern like *[portrait Rome]]"
        ),
        other => other.to_string(),
    }
}

fn matrix_cell(m: &SynMatrix) -> String {
    match m {
        SynMatrix::Single(mat) => token_or_display(mat),
        SynMatrix::Tensor(fs) => fs
            .iter()
            .map(token_or_display)
            .collect::<Vec<_>>()
            .join("\u{2297}"),
    }
}

fn det_cell(m: &SynMatrix) -> String {
    match m {
        SynMatrix::Single(mat) => mat.det().to_string(),
        SynMatrix::Tensor(fs) => {
            // Script objects are built from group elements, whose tensor
            // determinant is the phase Σ phase(det Aᵢ)·2^(k−1); this avoids
            // expanding deeply nested specifiers.
            if fs.iter().all(|f| gcp_lookup(f).is_some()) {
                let mut total: u32 = 0;
                for f in fs {
                    let phase = msx_core::algebra::phase_of(&f.det())
                        .expect("group determinants are units");
                    total = (total + u32::from(phase.index())) % 8;
                }
                let exponent = match fs.len() {
                    k if k >= 4 => 0,
                    k => (1u32 << (k - 1)) % 8,
                };
                msx_core::algebra::PhaseOctant::new(((total * exponent) % 8) as u8)
                    .to_scalar()
                    .to_string()
            } else {
                m.expand().det().to_string()
            }
        }
    }
}

fn category_cell(m: &SynMatrix) -> String {
    match m {
        SynMatrix::Single(mat) => grammatical_equivalence(mat)
            .map(str::to_string)
            .unwrap_or_else(|_| "-".to_string()),
        SynMatrix::Tensor(_) => "-".to_string(),
    }
}

/// Execute a parsed script. Evaluation stops at the first ungrammatical
/// step; the report keeps every row computed up to and including the
/// rejected one.
pub fn run_script(script: &Script) -> (Report, Option<RunError>) {
    let mut report = Report::new(
        ReportKind::Derivation,
        "derivation",
        &[
            "object",
            "expression",
            "matrix",
            "det",
            "label",
            "category",
            "status",
        ],
    );
    let mut env: Vec<(String, Binding)> = Vec::new();
    for statement in &script.statements {
        match statement {
            Statement::Obj {
                line,
                name,
                expr,
                source,
            } => {
                let result: Result<SynObject, DerivationError> = match expr {
                    Expr::SelfMerge(cat) => self_merge(*cat),
                    Expr::FirstMerge(cat, arg) => match lookup_obj(&env, arg) {
                        Ok(obj) => first_merge(*cat, obj),
                        Err(message) => {
                            report.push_row(error_row(name, source, &message));
                            return (
                                report,
                                Some(RunError {
                                    line: *line,
                                    statement: source.clone(),
                                    message,
                                }),
                            );
                        }
                    },
                    Expr::ElsewhereMerge(left, right) => {
                        match (lookup_obj(&env, left), lookup_obj(&env, right)) {
                            (Ok(l), Ok(r)) => elsewhere_merge(l, r),
                            (Err(message), _) | (_, Err(message)) => {
                                report.push_row(error_row(name, source, &message));
                                return (
                                    report,
                                    Some(RunError {
                                        line: *line,
                                        statement: source.clone(),
                                        message,
                                    }),
                                );
                            }
                        }
                    }
                    Expr::Literal(elem) => SynObject::phrase(elem.matrix.clone(), &elem.token),
                };
                match result {
                    Ok(obj) => {
                        report.push_row(vec![
                            name.clone(),
                            source.clone(),
                            matrix_cell(&obj.matrix),
                            det_cell(&obj.matrix),
                            obj.label.to_string(),
                            category_cell(&obj.matrix),
                            "ok".to_string(),
                        ]);
                        env.push((name.clone(), Binding::Obj(obj)));
                    }
                    Err(err) => {
                        let message = violation_name(&err);
                        report.push_row(error_row(name, source, &message));
                        return (
                            report,
                            Some(RunError {
                                line: *line,
                                statement: source.clone(),
                                message,
                            }),
                        );
                    }
                }
            }
            Statement::Chain {
                line,
                name,
                specifier,
                context_k,
                context_l,
                subtractive,
                source,
            } => {
                let mode = if *subtractive {
                    ChainMode::Subtractive
                } else {
                    ChainMode::Additive
                };
                match analyze_chain(
                    &specifier.matrix,
                    &context_k.matrix,
                    &context_l.matrix,
                    mode,
                ) {
                    Ok(cells) => {
                        let (matrix, det, label, category) = cells;
                        report.push_row(vec![
                            name.clone(),
                            source.clone(),
                            matrix,
                            det,
                            label,
                            category,
                            "ok".to_string(),
                        ]);
                        env.push((name.clone(), Binding::Chain));
                    }
                    Err(message) => {
                        report.push_row(error_row(name, source, &message));
                        return (
                            report,
                            Some(RunError {
                                line: *line,
                                statement: source.clone(),
                                message,
                            }),
                        );
                    }
                }
            }
        }
    }
    (report, None)
}

fn error_row(name: &str, source: &str, message: &str) -> Vec<String> {
    vec![
        name.to_string(),
        source.to_string(),
        "-".to_string(),
        "-".to_string(),
        "-".to_string(),
        "-".to_string(),
        format!("rejected: {message}"),
    ]
}

fn lookup_obj<'e>(env: &'e [(String, Binding)], name: &str) -> Result<&'e SynObject, String> {
    match env.iter().find(|(n, _)| n == name) {
        Some((_, Binding::Obj(obj))) => Ok(obj),
        Some((_, Binding::Chain)) => Err(format!("{name:?} names a chain, not an object")),
        None => Err(format!("{name:?} is not defined")),
    }
}

/// Summarize a chain statement: state in token form, compressed eigenvalue,
/// rescaled label, and set/harmonic/separability facts.
fn analyze_chain(
    specifier: &Mat2,
    context_k: &Mat2,
    context_l: &Mat2,
    mode: ChainMode,
) -> Result<(String, String, String, String), String> {
    let spec = ChainSpec::new(
        specifier.clone(),
        context_k.clone(),
        context_l.clone(),
        mode,
    )
    .map_err(|e| e.to_string())?;
    let state = form_chain(&spec).map_err(|e| e.to_string())?;
    let sign = if mode == ChainMode::Subtractive {
        "-"
    } else {
        "+"
    };
    let matrix = format!(
        "{}\u{2297}{} {} {}\u{2297}{}",
        token_or_display(specifier),
        token_or_display(context_k),
        sign,
        token_or_display(specifier),
        token_or_display(context_l),
    );
    let compressed = compress(&state).map_err(|e| e.to_string())?;
    let label =
        chain_label(&compressed.specifier, &compressed.eigenvalue).map_err(|e| e.to_string())?;
    let separable = state.is_separable(1).map_err(|e| e.to_string())?;
    let set_info = {
        // Subtractive chains superpose K with −Λ; classify that pair.
        let second = match mode {
            ChainMode::Additive => context_l.clone(),
            ChainMode::Subtractive => -context_l,
        };
        let (a, b) = (gcp_lookup(context_k), gcp_lookup(&second));
        match (a, b) {
            (Some(a), Some(b)) => match classify_pair(a, b) {
                Ok(rec) => {
                    let harmonic = match harmonic_class(&rec) {
                        Harmonic::Harmonic => "harmonic",
                        Harmonic::NonHarmonic => "non-harmonic",
                    };
                    format!(
                        "chain[set {}, {}, separable={}]",
                        rec.set, harmonic, separable
                    )
                }
                Err(_) => format!("chain[unclassified, separable={separable}]"),
            },
            _ => format!("chain[separable={separable}]"),
        }
    };
    let _ = collapse_distribution(&state).map_err(|e| e.to_string())?;
    Ok((
        matrix,
        compressed.eigenvalue.to_string(),
        label.to_string(),
        set_info,
    ))
}
