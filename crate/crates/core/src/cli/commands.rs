use serde_json::{json, Value};

use super::document::{load, Loaded};
use super::{CombCommand, Command, ProbeSet, Report, RunConfig, Verdict};
use crate::category::{
    check_bifunctoriality, check_diagonal_naturality, check_hom_closure, concrete_quotient,
    is_t_free, scope_objects, t_points, CategoryError, CheckReport, Morphism, Object, Scope,
};
use crate::combinators::{
    basis_of, check_fpc, joinable, normalize_with, parse, Budget, FpcVerdict, JoinVerdict, Status,
    Strategy, Term,
};
use crate::theorems::{
    check_right_projection, diagonal_argument, diagonal_argument_section, fixed_point,
    fixed_point_regular, fixed_point_search, fixed_point_section, FixedPointReport, TheoremError,
};
use crate::uniform::{
    certify, check_internal_hom, fix_from_split_epi, fix_reflexive, uniform_fix, uniform_fix_crisp,
    InternalHom, UniformError, UniformVariant,
};
use crate::zoo::{check_copointed, check_idempotent_comonad, make_flat, FlatVariant, ZooError};

const MAX_TERM_SIZE: usize = 100_000;

/// Why a command stopped short of a verdict of its own.
enum Problem {
    Input(String),
    Budget(String),
    Failed {
        detail: String,
        witness: Option<Value>,
    },
}

impl From<String> for Problem {
    fn from(s: String) -> Self {
        Problem::Input(s)
    }
}

fn witness(m: &Morphism) -> Option<Value> {
    serde_json::to_value(m).ok()
}

impl From<CategoryError> for Problem {
    fn from(e: CategoryError) -> Self {
        match e {
            e if e.is_budget() => Problem::Budget(e.to_string()),
            CategoryError::NotAMorphism { .. } | CategoryError::UnknownObject(_) => {
                Problem::Input(e.to_string())
            }
            e => Problem::Failed {
                detail: e.to_string(),
                witness: None,
            },
        }
    }
}

impl From<TheoremError> for Problem {
    fn from(e: TheoremError) -> Self {
        let w = match &e {
            TheoremError::NotTFree { witness: m }
            | TheoremError::NotComagmaMap { point: m }
            | TheoremError::NotPointSurjective { point: m }
            | TheoremError::HypothesisFailed {
                witness: Some(m), ..
            } => witness(m),
            TheoremError::Shape(s) => return Problem::Input(s.clone()),
            TheoremError::Category(c) => return c.clone().into(),
            _ => None,
        };
        Problem::Failed {
            detail: e.to_string(),
            witness: w,
        }
    }
}

impl From<UniformError> for Problem {
    fn from(e: UniformError) -> Self {
        let w = match &e {
            UniformError::NotRepresentable {
                witness: Some(m), ..
            }
            | UniformError::NoSolution { g: m, .. } => witness(m),
            UniformError::Shape(s) => return Problem::Input(s.clone()),
            UniformError::Category(c) => return c.clone().into(),
            _ => None,
        };
        Problem::Failed {
            detail: e.to_string(),
            witness: w,
        }
    }
}

impl From<ZooError> for Problem {
    fn from(e: ZooError) -> Self {
        match e {
            ZooError::Category(c) => c.into(),
            ZooError::InvalidSpec(s) => Problem::Input(s),
            e => Problem::Failed {
                detail: e.to_string(),
                witness: None,
            },
        }
    }
}

struct Body {
    theorem: String,
    verdict: Verdict,
    lines: Vec<String>,
    details: Value,
}

impl Body {
    fn new(theorem: &str, verdict: Verdict) -> Self {
        Body {
            theorem: theorem.to_string(),
            verdict,
            lines: Vec::new(),
            details: json!({}),
        }
    }

    fn line(&mut self, l: impl Into<String>) {
        self.lines.push(l.into());
    }
}

fn verdict_of(ok: bool) -> Verdict {
    if ok {
        Verdict::Verified
    } else {
        Verdict::Failed
    }
}

fn theorem_name(command: &Command) -> &'static str {
    match command {
        Command::Check { .. } => "axioms of a magmoidal category with diagonals",
        Command::Points { .. } => "points t → X",
        Command::Quotient { .. } => "extensional quotient by t-points",
        Command::Diagonal { .. } => "diagonal argument",
        Command::Fixpoint { .. } => "fixed-point theorem",
        Command::FixpointRegular { .. } => "fixed-point theorem with a regular epi t' → 1",
        Command::HomCheck { .. } => "internal hom representability",
        Command::UniformFix { .. } => "uniform fixed-point theorem",
        Command::FixSplitEpi { .. } => "fixed points from a split epi A → C^A",
        Command::Comb(CombCommand::Reduce { .. }) => "combinatory reduction",
        Command::Comb(CombCommand::Join { .. }) => "joinability of combinator terms",
        Command::Comb(CombCommand::Fpc { .. }) => "fixed-point combinator check",
        Command::Comb(CombCommand::Basis { .. }) => "substructural basis",
    }
}

pub(super) fn dispatch(config: &RunConfig) -> Report {
    let name = config.command.name();
    let mut instance = None;
    let result = match &config.command {
        Command::Comb(c) => comb(c, config),
        Command::Check { file }
        | Command::Points { file }
        | Command::Quotient { file }
        | Command::Diagonal { file }
        | Command::Fixpoint { file, .. }
        | Command::FixpointRegular { file }
        | Command::HomCheck { file }
        | Command::UniformFix { file }
        | Command::FixSplitEpi { file } => match load(file, config.budget, name) {
            Err(e) => Err(Problem::Input(e.to_string())),
            Ok(loaded) => {
                instance = Some(loaded.category.name().to_string());
                on_instance(&loaded, config).map_err(|p| match p {
                    Problem::Input(msg) => Problem::Input(format!("{}: {msg}", file.display())),
                    p => p,
                })
            }
        },
    };
    let body = result.unwrap_or_else(|p| {
        let (verdict, line, details) = match p {
            Problem::Input(msg) => (
                Verdict::InputError,
                format!("input error: {msg}"),
                json!({ "error": msg }),
            ),
            Problem::Budget(msg) => (
                Verdict::Inconclusive,
                format!("budget exhausted: {msg}"),
                json!({ "budget": msg }),
            ),
            Problem::Failed { detail, witness } => {
                let mut line = format!("failed: {detail}");
                if let Some(w) = &witness {
                    line.push_str(&format!("\nwitness: {w}"));
                }
                (
                    Verdict::Failed,
                    line,
                    json!({ "error": detail, "witness": witness }),
                )
            }
        };
        let mut b = Body::new(theorem_name(&config.command), verdict);
        b.line(line);
        b.details = details;
        b
    });
    Report {
        command: name.to_string(),
        theorem: body.theorem,
        instance,
        verdict: body.verdict,
        lines: body.lines,
        details: body.details,
    }
}

fn on_instance(l: &Loaded, config: &RunConfig) -> Result<Body, Problem> {
    match &config.command {
        Command::Check { .. } => check(l),
        Command::Points { .. } => points(l),
        Command::Quotient { .. } => quotient(l),
        Command::Diagonal { .. } => diagonal(l),
        Command::Fixpoint { search, .. } => fixpoint(l, *search),
        Command::FixpointRegular { .. } => fixpoint_regular(l),
        Command::HomCheck { .. } => hom_check(l, &config.probe_set),
        Command::UniformFix { .. } => uniform(l, &config.probe_set),
        Command::FixSplitEpi { .. } => split_epi(l, &config.probe_set),
        Command::Comb(_) => unreachable!("handled without an instance"),
    }
}

fn summarize(b: &mut Body, r: &CheckReport) {
    let status = if r.passed() { "ok" } else { "FAILED" };
    b.line(format!(
        "{}: {status} ({} equations, {} failures)",
        r.name, r.checked, r.failures
    ));
    if let Some(v) = r.first_violation() {
        b.line(format!("  violated: {}", v.law));
        for w in &v.witnesses {
            b.line(format!("  witness: {w}"));
        }
    }
    for n in &r.notes {
        b.line(format!("  note: {n}"));
    }
}

fn check(l: &Loaded) -> Result<Body, Problem> {
    let c = &l.category;
    let mut reports = vec![
        check_hom_closure(c)?,
        check_bifunctoriality(c)?,
        check_diagonal_naturality(c, &Scope::All)?,
    ];
    let mut notes = Vec::new();
    match check_right_projection(c) {
        Ok(r) => reports.push(r),
        Err(TheoremError::MissingProjection { dom, cod }) => {
            notes.push(format!("right projections: none out of {dom}#{cod}"))
        }
        Err(e) => return Err(e.into()),
    }
    if let Some(flat) = &l.flat {
        reports.push(check_copointed(flat)?);
        if flat.has_comultiplication() {
            reports.push(check_idempotent_comonad(flat)?);
        }
    }
    let ok = reports.iter().all(CheckReport::passed);
    let mut b = Body::new(
        theorem_name(&Command::Check {
            file: Default::default(),
        }),
        verdict_of(ok),
    );
    for r in &reports {
        summarize(&mut b, r);
    }
    for n in &notes {
        b.line(n.clone());
    }
    b.details = json!({ "reports": reports, "notes": notes });
    Ok(b)
}

fn points(l: &Loaded) -> Result<Body, Problem> {
    let c = &l.category;
    let mut b = Body::new("points t → X", Verdict::Verified);
    let mut details = Vec::new();
    for x in scope_objects(c) {
        let pts = t_points(c, &x)?;
        b.line(format!("{x}: {} points", pts.len()));
        for p in &pts {
            b.line(format!("  {p}"));
        }
        details.push(json!({ "object": x.id(), "points": pts }));
    }
    let mut free = Value::Null;
    if l.has_role("sigma") {
        let sigma = l.role_morphism("sigma")?;
        let r = is_t_free(c, &sigma)?;
        b.line(format!("sigma is t-free: {}", r.free));
        if let Some(p) = &r.fixed_point {
            b.line(format!("  fixed point: {p}"));
        }
        free = serde_json::to_value(&r).unwrap_or(Value::Null);
    }
    b.details = json!({ "objects": details, "sigma": free });
    Ok(b)
}

fn quotient(l: &Loaded) -> Result<Body, Problem> {
    let q = concrete_quotient(&l.category)?;
    let mut b = Body::new("extensional quotient by t-points", verdict_of(q.verified()));
    let mut homs = Vec::new();
    for h in &q.homs {
        b.line(format!(
            "{} → {}: {} morphisms in {} classes",
            h.dom,
            h.cod,
            h.morphism_count(),
            h.classes.len()
        ));
        homs.push(json!({
            "dom": h.dom.id(), "cod": h.cod.id(),
            "morphisms": h.morphism_count(), "classes": h.classes.len(),
        }));
    }
    for r in [
        &q.congruence,
        &q.point_bijection,
        &q.faithfulness,
        &q.product_compatibility,
    ] {
        summarize(&mut b, r);
    }
    b.details = json!({
        "homs": homs,
        "congruence": q.congruence,
        "point_bijection": q.point_bijection,
        "faithfulness": q.faithfulness,
        "product_compatibility": q.product_compatibility,
    });
    Ok(b)
}

fn diagonal(l: &Loaded) -> Result<Body, Problem> {
    let c = &l.category;
    let f_map = l.role_morphism("F")?;
    let sigma = l.role_morphism("sigma")?;
    let (theorem, r) = if l.has_role("p") {
        let (p, s) = (l.role_morphism("p")?, l.role_morphism("s")?);
        (
            "diagonal argument through a split epi p : B → A",
            diagonal_argument_section(c, &p, &s, &f_map, &sigma)?,
        )
    } else {
        let (a, cc) = (l.role_object("A")?, l.role_object("C")?);
        (
            "diagonal argument",
            diagonal_argument(c, &a, &cc, &f_map, &sigma)?,
        )
    };
    let mut b = Body::new(theorem, verdict_of(r.verified));
    b.line(format!("missed map f: {}", r.f));
    for w in &r.witnesses {
        let rel = if w.lhs != w.rhs { "≠" } else { "=" };
        b.line(format!(
            "  a = {}, b = {}: f∘b {rel} F∘(a # b)∘δ_t",
            w.a, w.b
        ));
    }
    b.details = serde_json::to_value(&r).unwrap_or(Value::Null);
    Ok(b)
}

fn describe_fixed_point(b: &mut Body, r: &FixedPointReport) {
    b.line(format!("a0: {}", r.a0));
    if let Some(lift) = &r.lift {
        b.line(format!("lift: {lift}"));
    }
    b.line(format!("c: {}", r.c));
    b.line(format!("σ∘c = c: {}", r.conclusion_ok));
    for f in &r.facts {
        b.line(format!("  {}: {}", f.name, f.holds));
    }
    b.details = serde_json::to_value(r).unwrap_or(Value::Null);
}

fn fixpoint(l: &Loaded, search: bool) -> Result<Body, Problem> {
    let c = &l.category;
    let f_map = l.role_morphism("F")?;
    let sigma = l.role_morphism("sigma")?;
    if l.has_role("p") && !search {
        let p = l.role_morphism("p")?;
        let a = l.role_morphism("a")?;
        let r = fixed_point_section(c, &p, &f_map, &sigma, &a)?;
        let mut b = Body::new(
            "fixed-point theorem for a map surjective on t-points",
            verdict_of(r.conclusion_ok),
        );
        describe_fixed_point(&mut b, &r);
        return Ok(b);
    }
    let (a, cc) = (l.role_object("A")?, l.role_object("C")?);
    let r = if search {
        match fixed_point_search(c, &a, &cc, &f_map, &sigma)? {
            Some(r) => r,
            None => {
                return Err(Problem::Failed {
                    detail: "NotFound: no t-point a0 of A satisfies the hypothesis".into(),
                    witness: None,
                })
            }
        }
    } else {
        fixed_point(c, &a, &cc, &f_map, &sigma, &l.role_morphism("a0")?)?
    };
    let mut b = Body::new("fixed-point theorem", verdict_of(r.conclusion_ok));
    describe_fixed_point(&mut b, &r);
    Ok(b)
}

fn fixpoint_regular(l: &Loaded) -> Result<Body, Problem> {
    let c = &l.category;
    let r = fixed_point_regular(
        c,
        &l.role_object("A")?,
        &l.role_object("C")?,
        &l.role_morphism("F")?,
        &l.role_morphism("sigma")?,
        &l.role_object("t_prime")?,
        &l.role_morphism("a0")?,
    )?;
    let ok = r.conclusion_ok && r.facts.iter().all(|f| f.holds);
    let mut b = Body::new(
        "fixed-point theorem with a regular epi t' → 1",
        verdict_of(ok),
    );
    b.line("F∘(a0 # id) = σ∘F∘δ_A∘pr₂: true");
    describe_fixed_point(&mut b, &r);
    Ok(b)
}

fn probes(l: &Loaded, set: &ProbeSet) -> Result<Vec<Object>, Problem> {
    match set {
        ProbeSet::All => Ok(scope_objects(&l.category)),
        ProbeSet::List(ids) => ids
            .iter()
            .map(|id| l.object(id).map_err(Problem::Input))
            .collect(),
    }
}

fn describe_hom(b: &mut Body, h: &InternalHom) {
    b.line(format!(
        "{}^{} = {} with ev : {}",
        h.y,
        h.x,
        h.hom,
        h.ev.dom()
    ));
    for p in &h.certificate {
        b.line(format!(
            "  probe {}: {} maps on each side",
            p.probe, p.morphisms
        ));
    }
}

fn hom_check(l: &Loaded, set: &ProbeSet) -> Result<Body, Problem> {
    let (x, y) = (l.role_object("X")?, l.role_object("Y")?);
    let probes = probes(l, set)?;
    // A candidate from the file replaces the instance's own.
    let h = if l.has_role("hom") || l.has_role("ev") {
        let candidate = (l.role_object("hom")?, l.role_morphism("ev")?);
        check_internal_hom(&l.category, &x, &y, candidate, &probes)?
    } else {
        certify(&l.category, &x, &y, &probes)?
    };
    let mut b = Body::new("internal hom representability", Verdict::Verified);
    describe_hom(&mut b, &h);
    b.details = serde_json::to_value(&h).unwrap_or(Value::Null);
    Ok(b)
}

fn uniform(l: &Loaded, set: &ProbeSet) -> Result<Body, Problem> {
    let c = &l.category;
    let flat = match &l.flat {
        Some(f) => f.clone(),
        None => make_flat(c, FlatVariant::Identity)?,
    };
    let cc = l.role_object("C")?;
    let e_hom = certify(c, &cc, &cc, &probes(l, set)?)?;
    let p = l.role_morphism("p")?;
    let f_map = l.role_morphism("F")?;
    let idx = l.role_morphism("idx")?;
    let variant = match l.role("variant").unwrap_or("plain") {
        "plain" => UniformVariant::Plain,
        "crisp_section" => UniformVariant::CrispSection,
        "crisp_index" => UniformVariant::CrispIndex,
        other => return Err(Problem::Input(format!("unknown variant `{other}`"))),
    };
    let r = match variant {
        UniformVariant::Plain => {
            uniform_fix(c, &flat, &e_hom, &p, &l.role_morphism("s")?, &f_map, &idx)?
        }
        v => uniform_fix_crisp(
            c,
            &flat,
            &e_hom,
            &p,
            &l.role_morphism("s_flat")?,
            &f_map,
            &idx,
            v,
        )?,
    };
    let mut b = Body::new("uniform fixed-point theorem", verdict_of(r.conclusion_ok));
    describe_hom(&mut b, &e_hom);
    b.line(format!("♭: {:?}", flat.variant()));
    b.line("hypothesis rectangle: true");
    b.line(format!("fix: {}", r.fix));
    b.line(format!("ev∘(e # fix)∘δ = fix: {}", r.conclusion_ok));
    b.details = serde_json::to_value(&r).unwrap_or(Value::Null);
    Ok(b)
}

fn split_epi(l: &Loaded, set: &ProbeSet) -> Result<Body, Problem> {
    let c = &l.category;
    let probes = probes(l, set)?;
    let (a, cc) = (l.role_object("A")?, l.role_object("C")?);
    let cc_hom = certify(c, &cc, &cc, &probes)?;
    let alpha = l.role_morphism("alpha")?;
    let ell = l.role_morphism("ell")?;
    let (theorem, r) = if a == cc {
        (
            "fixed-point combinator of a reflexive object",
            fix_reflexive(c, &cc, &cc_hom, &alpha, &ell)?,
        )
    } else {
        let ca_hom = certify(c, &a, &cc, &probes)?;
        (
            "fixed points from a split epi A → C^A",
            fix_from_split_epi(c, &a, &ca_hom, &cc_hom, &alpha, &ell)?,
        )
    };
    let mut b = Body::new(theorem, verdict_of(r.verified()));
    b.line(format!("F: {}", r.f_map));
    b.line(format!("idx: {}", r.idx));
    b.line(format!("fix: {}", r.fix));
    for s in &r.squares {
        b.line(format!("  {}: {}", s.name, s.holds));
    }
    b.line(format!(
        "ev∘(id # fix)∘δ = fix: {}",
        r.uniform.conclusion_ok
    ));
    b.details = serde_json::to_value(&r).unwrap_or(Value::Null);
    Ok(b)
}

fn term(text: &str) -> Result<Term, Problem> {
    parse(text).map_err(|e| Problem::Input(format!("`{text}`: {e}")))
}

fn comb(c: &CombCommand, config: &RunConfig) -> Result<Body, Problem> {
    let budget = Budget {
        fuel: config.fuel as usize,
        width: config.width as usize,
        max_size: MAX_TERM_SIZE,
    };
    match c {
        CombCommand::Reduce { term: t } => {
            let trace = normalize_with(
                &term(t)?,
                budget.fuel,
                budget.max_size,
                Strategy::LeftmostOutermost,
            );
            let verdict = match trace.status {
                Status::NormalForm => Verdict::Verified,
                _ => Verdict::Inconclusive,
            };
            let mut b = Body::new("combinatory reduction", verdict);
            b.lines.extend(trace.to_string().lines().map(String::from));
            b.details = serde_json::to_value(&trace).unwrap_or(Value::Null);
            Ok(b)
        }
        CombCommand::Join { left, right } => {
            let v = joinable(&term(left)?, &term(right)?, &budget);
            let mut b = Body::new(
                "joinability of combinator terms",
                if v.is_joinable() {
                    Verdict::Verified
                } else {
                    Verdict::Inconclusive
                },
            );
            match &v {
                JoinVerdict::Joinable(j) => {
                    b.line(format!("Joinable at {}", j.common));
                    b.line(format!(
                        "  left: {} steps, right: {} steps",
                        j.left.len(),
                        j.right.len()
                    ));
                }
                JoinVerdict::NotWithinBudget {
                    explored,
                    truncated,
                } => b.line(format!(
                    "NotWithinBudget ({explored} terms explored, truncated: {truncated})"
                )),
            }
            b.details = serde_json::to_value(&v).unwrap_or(Value::Null);
            Ok(b)
        }
        CombCommand::Fpc { term: t } => {
            let v = check_fpc(&term(t)?, &budget);
            let mut b = Body::new(
                "fixed-point combinator check",
                if v.is_verified() {
                    Verdict::Verified
                } else {
                    Verdict::Inconclusive
                },
            );
            match &v {
                FpcVerdict::Verified { atom, join } => {
                    b.line(format!(
                        "f {atom} and {atom} (f {atom}) meet at {}",
                        join.common
                    ));
                    b.line(format!(
                        "  left: {} steps, right: {} steps",
                        join.left.len(),
                        join.right.len()
                    ));
                }
                FpcVerdict::NotWithinBudget {
                    explored,
                    truncated,
                    ..
                } => b.line(format!(
                    "NotWithinBudget ({explored} terms explored, truncated: {truncated})"
                )),
            }
            b.details = serde_json::to_value(&v).unwrap_or(Value::Null);
            Ok(b)
        }
        CombCommand::Basis { term: t } => {
            let basis = basis_of(&term(t)?);
            let mut b = Body::new("substructural basis", Verdict::Verified);
            let names: Vec<String> = basis.constants.iter().map(|k| k.to_string()).collect();
            b.line(format!("constants: {{{}}}", names.join(",")));
            b.line(format!("logic: {}", basis.logic));
            b.details = serde_json::to_value(&basis).unwrap_or(Value::Null);
            Ok(b)
        }
    }
}
