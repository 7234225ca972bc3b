//! Implementations of the table emitters and the group/units/chain/basis
//! commands. Every report is order-canonicalized before rendering.

use msx_core::algebra::{GaussianScalar, Mat2};
use msx_core::chains::{
    chain_label, collapse_distribution, compress, enumerate_units, form_chain, harmonic_class,
    sample_collapse, ChainMode, ChainSpec, Harmonic, UnitRecord, UnitSet,
};
use msx_core::derivation::grammatical_equivalence;
use msx_core::groups::{builtin_group, generate, parse_token, token_or_display, BuiltinGroup};
use msx_core::hilbert::{change_basis, inner, Basis, CoordVector};

use crate::report::{Report, ReportKind};

/// Errors at the command layer: usage errors exit 2, domain rejections 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Domain(String),
}

#[derive(Debug)]
pub struct CommandOutput {
    pub report: Report,
    /// Domain-level rejection: report still prints, exit code becomes 1.
    pub rejected: Option<String>,
}

impl CommandOutput {
    fn ok(report: Report) -> Self {
        Self {
            report,
            rejected: None,
        }
    }
}

/// `msx tables <which>`: bit-exact regeneration of the named table.
pub fn emit_table(which: &str) -> Result<Report, CliError> {
    match which {
        "scalar-g8" => Ok(scalar_table("scalar products over G8 representatives", &["I", "Z", "C1", "C2"])),
        "scalar-gcp" => Ok(scalar_table(
            "scalar products over Gcp representatives",
            &["I", "X", "Y", "Z", "C1", "C2", "S1", "S2"],
        )),
        "units-set1" => Ok(units_table(UnitSet::One)),
        "units-set2" => Ok(units_table(UnitSet::Two)),
        "units-set3" => Ok(units_table(UnitSet::Three)),
        "cayley-g8" => Ok(cayley_table()),
        "equivalences" => Ok(equivalence_table()),
        other => Err(CliError::Usage(format!(
            "unknown table {other:?} (expected scalar-g8, scalar-gcp, units-set1, units-set2, units-set3, cayley-g8 or equivalences)"
        ))),
    }
}

fn scalar_table(title: &str, tokens: &[&str]) -> Report {
    let mut columns = vec!["bra\\ket".to_string()];
    columns.extend(tokens.iter().map(|t| t.to_string()));
    let columns_ref: Vec<&str> = columns.iter().map(|s| s.as_str()).collect();
    let mut report = Report::new(ReportKind::Table, title, &columns_ref);
    let mats: Vec<Mat2> = tokens
        .iter()
        .map(|t| parse_token(t).expect("table tokens").matrix.clone())
        .collect();
    for (row_tok, row_mat) in tokens.iter().zip(&mats) {
        let mut cells = vec![row_tok.to_string()];
        for col_mat in &mats {
            cells.push(inner(row_mat, col_mat).to_string());
        }
        report.push_row(cells);
    }
    report
}

fn unit_row(rec: &UnitRecord) -> Vec<String> {
    let harmonic = match harmonic_class(rec) {
        Harmonic::Harmonic => "harmonic",
        Harmonic::NonHarmonic => "non-harmonic",
    };
    vec![
        rec.pair_label(),
        rec.sum.to_string(),
        rec.eigenvalue.to_string(),
        rec.context_label.to_string(),
        rec.hermitian.to_string(),
        rec.orthogonal.to_string(),
        harmonic.to_string(),
        if rec.g8_internal { "yes" } else { "no" }.to_string(),
    ]
}

const UNIT_COLUMNS: [&str; 8] = [
    "pair",
    "U",
    "u_c",
    "context_label",
    "hermitian",
    "orthogonal",
    "harmonic",
    "g8",
];

fn units_table(set: UnitSet) -> Report {
    let mut report = Report::new(
        ReportKind::Table,
        &format!("unit matrices, set {}", set),
        &UNIT_COLUMNS,
    );
    for rec in enumerate_units().iter().filter(|u| u.set == set) {
        report.push_row(unit_row(rec));
    }
    report
}

fn cayley_table() -> Report {
    let g8 = builtin_group(BuiltinGroup::G8);
    let mut columns = vec!["*".to_string()];
    columns.extend(g8.tokens().iter().cloned());
    let columns_ref: Vec<&str> = columns.iter().map(|s| s.as_str()).collect();
    let mut report = Report::new(ReportKind::Table, "Cayley table of G8", &columns_ref);
    for (r, row_tok) in g8.tokens().iter().enumerate() {
        let mut cells = vec![row_tok.clone()];
        for c in 0..g8.order() {
            cells.push(g8.tokens()[g8.cayley(r, c)].clone());
        }
        report.push_row(cells);
    }
    report
}

fn equivalence_table() -> Report {
    let mut report = Report::new(
        ReportKind::Table,
        "postulated grammatical equivalences",
        &["class", "category"],
    );
    for base in ["I", "X", "Y", "Z", "C1", "C2"] {
        for prefix in ["", "i"] {
            let token = format!("{prefix}{base}");
            let m = parse_token(&token)
                .expect("equivalence tokens")
                .matrix
                .clone();
            let category = grammatical_equivalence(&m).expect("mapped classes");
            report.push_row(vec![format!("\u{b1}{token}"), category.to_string()]);
        }
    }
    report
}

/// `msx group <name> [--check iso|gens|abelian]`.
pub fn cmd_group(name: &str, check: Option<&str>) -> Result<Report, CliError> {
    let which: BuiltinGroup = name.parse().map_err(|e| CliError::Usage(format!("{e}")))?;
    let table = builtin_group(which);
    let mut report = Report::new(
        ReportKind::Group,
        &format!("group {}", which.name()),
        &["property", "value"],
    );
    let generator_tokens = which.generator_tokens();
    let wants = |key: &str| check.is_none() || check == Some(key);
    if check.is_none() {
        report.push_row(vec!["order".into(), table.order().to_string()]);
        report.push_row(vec!["elements".into(), table.tokens().join(" ")]);
    }
    if wants("abelian") {
        report.push_row(vec!["abelian".into(), table.is_abelian().to_string()]);
    }
    if wants("iso") {
        report.push_row(vec![
            "order_profile".into(),
            table.order_profile().to_string(),
        ]);
        report.push_row(vec![
            "isomorphic_to_z2xz4".into(),
            table.matches_z2xz4().to_string(),
        ]);
    }
    if wants("gens") {
        let gens: Vec<Mat2> = generator_tokens
            .iter()
            .map(|t| parse_token(t).expect("generator tokens").matrix.clone())
            .collect();
        let closure = generate(&gens).map_err(|e| CliError::Domain(e.to_string()))?;
        let generates = closure.len() == table.order() && closure.iter().all(|m| table.contains(m));
        report.push_row(vec!["generators".into(), generator_tokens.join(" ")]);
        report.push_row(vec!["generators_close_group".into(), generates.to_string()]);
    }
    if let Some(unknown) = check {
        if report.rows.is_empty() {
            return Err(CliError::Usage(format!(
                "unknown check {unknown:?} (expected iso, gens or abelian)"
            )));
        }
    }
    Ok(report)
}

/// `msx units [--set 1|2|3] [--g8-only]`.
pub fn cmd_units(set: Option<u8>, g8_only: bool) -> Result<Report, CliError> {
    let set = match set {
        None => None,
        Some(1) => Some(UnitSet::One),
        Some(2) => Some(UnitSet::Two),
        Some(3) => Some(UnitSet::Three),
        Some(other) => {
            return Err(CliError::Usage(format!(
                "unknown set {other} (expected 1, 2 or 3)"
            )))
        }
    };
    let mut report = Report::new(ReportKind::Units, "unit matrices", &UNIT_COLUMNS);
    for rec in enumerate_units() {
        if let Some(s) = set {
            if rec.set != s {
                continue;
            }
        }
        if g8_only && !rec.g8_internal {
            continue;
        }
        report.push_row(unit_row(&rec));
    }
    report.note(format!("{} records", report.rows.len()));
    Ok(report)
}

pub struct ChainArgs {
    pub spec: String,
    pub subtractive: bool,
    pub samples: Option<u64>,
    pub seed: Option<u64>,
}

fn parse_chain_spec(text: &str) -> Result<(Mat2, Mat2, Mat2), CliError> {
    let (alpha, rest) = text.split_once(';').ok_or_else(|| {
        CliError::Usage(format!(
            "chain spec {text:?} must look like \"<alpha>; <K>, <L>\""
        ))
    })?;
    let (k, l) = rest
        .split_once(',')
        .ok_or_else(|| CliError::Usage(format!("chain spec {text:?} must name two contexts")))?;
    let resolve = |tok: &str| -> Result<Mat2, CliError> {
        let tok = tok.trim();
        parse_token(tok)
            .map(|e| e.matrix.clone())
            .ok_or_else(|| CliError::Usage(format!("unknown matrix token {tok:?}")))
    };
    Ok((resolve(alpha)?, resolve(k)?, resolve(l)?))
}

/// `msx chain --spec "<alpha>; <K>, <L>" [--sub] [--samples N --seed S]`.
pub fn cmd_chain(args: &ChainArgs) -> Result<CommandOutput, CliError> {
    let (alpha, k, l) = parse_chain_spec(&args.spec)?;
    let mode = if args.subtractive {
        ChainMode::Subtractive
    } else {
        ChainMode::Additive
    };
    let mut report = Report::new(
        ReportKind::Chain,
        &format!(
            "chain({}; {}, {})",
            token_or_display(&alpha),
            token_or_display(&k),
            token_or_display(&l)
        ),
        &["property", "value"],
    );
    let spec = match ChainSpec::new(alpha.clone(), k.clone(), l.clone(), mode) {
        Ok(s) => s,
        Err(e) => return Err(CliError::Domain(e.to_string())),
    };
    let state = match form_chain(&spec) {
        Ok(s) => s,
        Err(e) => {
            report.push_row(vec!["rejected".into(), e.to_string()]);
            return Ok(CommandOutput {
                report,
                rejected: Some(e.to_string()),
            });
        }
    };
    report.push_row(vec!["specifier".into(), token_or_display(&alpha)]);
    report.push_row(vec![
        "contexts".into(),
        format!("{}, {}", token_or_display(&k), token_or_display(&l)),
    ]);
    report.push_row(vec![
        "mode".into(),
        if args.subtractive {
            "subtractive"
        } else {
            "additive"
        }
        .to_string(),
    ]);
    report.push_row(vec!["norm_sq".into(), rat_string(&state.norm_sq())]);
    report.push_row(vec![
        "separable".into(),
        state
            .is_separable(1)
            .map_err(|e| CliError::Domain(e.to_string()))?
            .to_string(),
    ]);

    // Set membership and harmonicity of the context sum; subtractive chains
    // superpose K with −Λ.
    let second = match mode {
        ChainMode::Additive => l.clone(),
        ChainMode::Subtractive => -&l,
    };
    let (ea, eb) = (
        msx_core::groups::gcp_lookup(&k),
        msx_core::groups::gcp_lookup(&second),
    );
    if let (Some(ea), Some(eb)) = (ea, eb) {
        match msx_core::chains::classify_pair(ea, eb) {
            Ok(rec) => {
                report.push_row(vec!["set".into(), rec.set.to_string()]);
                report.push_row(vec!["context_label".into(), rec.context_label.to_string()]);
                report.push_row(vec![
                    "harmonic".into(),
                    matches!(harmonic_class(&rec), Harmonic::Harmonic).to_string(),
                ]);
            }
            Err(_) => {
                report.push_row(vec!["set".into(), "none (not a unit pair)".into()]);
            }
        }
    }

    match compress(&state) {
        Ok(c) => {
            report.push_row(vec!["context_sum".into(), token_or_display(&c.context_sum)]);
            report.push_row(vec!["u_c".into(), c.eigenvalue.to_string()]);
            report.push_row(vec!["null_dim".into(), c.null_dim.to_string()]);
            match chain_label(&c.specifier, &c.eigenvalue) {
                Ok(label) => report.push_row(vec!["label".into(), label.to_string()]),
                Err(e) => report.push_row(vec!["label".into(), format!("({e})")]),
            }
        }
        Err(e) => {
            report.push_row(vec!["compression".into(), format!("({e})")]);
        }
    }

    let dist = collapse_distribution(&state).map_err(|e| CliError::Domain(e.to_string()))?;
    for outcome in &dist.outcomes {
        report.push_row(vec![
            format!("p[{}] raw", outcome.context_token),
            rat_string(&outcome.raw),
        ]);
    }
    for outcome in &dist.outcomes {
        report.push_row(vec![
            format!("p[{}]", outcome.context_token),
            rat_string(&outcome.renormalized),
        ]);
    }

    if let Some(n) = args.samples {
        let Some(seed) = args.seed else {
            return Err(CliError::Usage(
                "--samples requires --seed (no wall-clock default)".to_string(),
            ));
        };
        let counts = sample_collapse(&dist.probabilities(), n, seed)
            .map_err(|e| CliError::Domain(e.to_string()))?;
        for (outcome, count) in dist.outcomes.iter().zip(&counts) {
            report.push_row(vec![
                format!("samples[{}]", outcome.context_token),
                count.to_string(),
            ]);
        }
        report.push_row(vec!["seed".into(), seed.to_string()]);
    }
    Ok(CommandOutput::ok(report))
}

fn rat_string(r: &msx_core::algebra::Rat) -> String {
    GaussianScalar::new(r.clone(), msx_core::algebra::rat(0)).to_string()
}

/// `msx basis --from <b> --to <b> --coords a,b[,c,d]`.
pub fn cmd_basis(from: &str, to: &str, coords: &str) -> Result<Report, CliError> {
    let from: Basis = from.parse().map_err(|e| CliError::Usage(format!("{e}")))?;
    let to: Basis = to.parse().map_err(|e| CliError::Usage(format!("{e}")))?;
    let parsed: Result<Vec<GaussianScalar>, _> = coords
        .split(',')
        .map(|c| c.trim().parse::<GaussianScalar>())
        .collect();
    let parsed = parsed.map_err(|e| CliError::Usage(format!("{e}")))?;
    let v = CoordVector::new(from, parsed).map_err(|e| CliError::Usage(format!("{e}")))?;
    let out = change_basis(&v, to).map_err(|e| CliError::Usage(format!("{e}")))?;
    let mut report = Report::new(
        ReportKind::Basis,
        &format!("{} \u{2192} {}", from.name(), to.name()),
        &["basis", "coords"],
    );
    let fmt_coords = |v: &CoordVector| {
        v.coords
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    report.push_row(vec![from.name().to_string(), fmt_coords(&v)]);
    report.push_row(vec![to.name().to_string(), fmt_coords(&out)]);
    report.push_row(vec!["matrix".to_string(), v.to_matrix().to_string()]);
    Ok(report)
}
