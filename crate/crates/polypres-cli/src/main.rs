mod jobs;
mod spec;

use clap::{Args, Parser, Subcommand, ValueEnum};
use polypres::actpres::{emit_2transitive_presentation, emit_for_subgroup, emit_theorem_presentation, EmitOptions, HStrategy};
use polypres::catalog::small_groups;
use polypres::deform::{deformation_graph, emit_deform_presentation, DeformPart, DeformPresentation};
use polypres::fpres::{todd_coxeter, verify_presentation, Presentation, Strategy, VerificationReport};
use polypres::glgg::{build_glgg_from_pair, emit_glgg_presentation, CheckBounds, PresentationChoices};
use polypres::matgrp::{emit_family_presentation, FamilyPresentation, PresFamily};
use polypres::perm::{is_isomorphic, parse_perm_list, PermGroup, TableGroup};
use polypres::polygroup::{double_coset_polygroup, stabilizer_polygroup, Polygroup};
use polypres::witt::{mathieu, MathieuStage, MATHIEU_DEGREES};
use polypres::Error;
use serde_json::{json, Value};
use spec::GroupSpec;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

/// Groups above this order are verified over `H` instead of the trivial subgroup.
const FULL_LIMIT: u128 = 5000;

#[derive(Parser)]
#[command(name = "polypres", version, about = "Presentations of finite groups from transitive actions")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct Global {
    /// coset table size limit for enumerations
    #[arg(long, global = true, default_value_t = 1_000_000)]
    max_cosets: usize,
    /// write the report here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// seed for sampled checks
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    JsonLines,
}

#[derive(Subcommand)]
enum Cmd {
    /// Presentation of a transitive group from a point stabilizer
    Present {
        #[arg(long)]
        group: GroupSpec,
        /// base point, 1-based
        #[arg(long, default_value_t = 1)]
        point: usize,
        /// type II relations for every pair of cosets
        #[arg(long)]
        all_pairs: bool,
        #[arg(long)]
        no_verify: bool,
    },
    /// Presentation of a 2-transitive group with a single extra generator
    Present2t {
        #[arg(long)]
        group: GroupSpec,
        #[arg(long, default_value_t = 1)]
        point: usize,
        #[arg(long, default_value_t = 2)]
        point2: usize,
        #[arg(long)]
        no_verify: bool,
    },
    /// Emit a named presentation
    Emit {
        /// gl2q, pgl2q, b2K, sl3q, psl3q, psl34, dphi, bphi, gphi, mq2, m9, m11..m24 (or "gl2:5")
        #[arg(long)]
        family: String,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        verify: bool,
    },
    /// Check a presentation file, optionally against permutation images
    Verify {
        #[arg(long)]
        presentation: PathBuf,
        #[arg(long, requires = "images")]
        group: Option<GroupSpec>,
        /// one permutation per generator, separated by ';'
        #[arg(long, requires = "group")]
        images: Option<String>,
    },
    /// Double-coset polygroup of a subgroup
    Polygroup {
        #[arg(long)]
        group: GroupSpec,
        /// generators of H, separated by ';'
        #[arg(long, conflicts_with = "point")]
        subgroup: Option<String>,
        /// use the stabilizer of this point (1-based)
        #[arg(long)]
        point: Option<usize>,
    },
    /// Deformation graph on the groups of one order
    DeformGraph {
        #[arg(long)]
        order: usize,
    },
    /// Witt extension checks along the Mathieu towers
    Witt {
        /// 11, 12, 22, 23 or 24; all when omitted
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long)]
        verify: bool,
    },
    /// Group-like graph of groups of a pair (G, H)
    Glgg {
        #[arg(long)]
        group: GroupSpec,
        #[arg(long)]
        subgroup: String,
        /// also emit the presentation and compare it with the action presentation
        #[arg(long)]
        presentation: bool,
        /// bound on exhaustive tuple checks before sampling
        #[arg(long, default_value_t = 200_000)]
        max_tuples: usize,
    },
    /// Built-in group lists
    Catalog {
        #[arg(value_enum)]
        which: CatalogKind,
    },
    /// Run every verification job and print a reproducible report
    VerifyAll,
}

#[derive(Clone, Copy, ValueEnum)]
enum CatalogKind {
    Mathieu,
    Small,
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Lib(e)
    }
}

/// Collects the output as text blocks or JSON records.
pub struct Out {
    format: Format,
    buf: String,
}

impl Out {
    fn new(format: Format) -> Out {
        Out { format, buf: String::new() }
    }

    /// `text` in text mode, `{"kind": kind, ..data}` in json-lines mode.
    pub fn emit(&mut self, kind: &str, text: &str, data: Value) {
        match self.format {
            Format::Text => {
                self.buf.push_str(text);
                if !text.is_empty() && !text.ends_with('\n') {
                    self.buf.push('\n');
                }
            }
            Format::JsonLines => {
                let mut obj = serde_json::Map::new();
                obj.insert("kind".into(), json!(kind));
                if let Value::Object(m) = data {
                    obj.extend(m);
                }
                self.buf.push_str(&Value::Object(obj).to_string());
                self.buf.push('\n');
            }
        }
    }
}

fn point(p: usize, g: &PermGroup) -> Result<usize, Failure> {
    if p == 0 || p > g.degree() {
        return Err(Failure::Usage(format!("point {p} outside 1..={}", g.degree())));
    }
    Ok(p - 1)
}

fn report_json(r: &VerificationReport) -> Value {
    json!({
        "relators": r.relators.len(),
        "relators_pass": r.relators_pass(),
        "surjective": r.surjective,
        "target_order": r.target_order.to_string(),
        "enumeration": r.enumeration.as_ref().map(|(s, i, u)| json!({"subgroup": s, "index": i, "cosets_used": u})),
        "order": r.concluded_order.map(|o| o.to_string()),
    })
}

fn presentation_out(out: &mut Out, p: &Presentation) {
    let text = p.to_text();
    out.emit("presentation", &text, json!({"generators": p.gens, "relators": p.relators.len(), "text": text}));
}

fn verification_out(out: &mut Out, r: &VerificationReport) -> bool {
    out.emit("verification", &r.to_string(), report_json(r));
    r.ok()
}

fn run(cmd: Cmd, g: &Global, out: &mut Out) -> Result<bool, Failure> {
    match cmd {
        Cmd::Present { group, point: w, all_pairs, no_verify } => {
            let gp = group.build()?;
            let w = point(w, &gp)?;
            let ap = emit_theorem_presentation(&gp, w, HStrategy::Tower, &EmitOptions { all_pairs })?;
            presentation_out(out, &ap.presentation);
            if no_verify {
                return Ok(true);
            }
            let reports = ap.verify(g.max_cosets, FULL_LIMIT)?;
            let all = reports.iter().all(|r| r.ok());
            let top = reports.last().expect("at least one level");
            Ok(verification_out(out, top) && all)
        }
        Cmd::Present2t { group, point: w0, point2: w1, no_verify } => {
            let gp = group.build()?;
            let (w0, w1) = (point(w0, &gp)?, point(w1, &gp)?);
            let ap = emit_2transitive_presentation(&gp, w0, w1, HStrategy::Tower)?;
            presentation_out(out, &ap.presentation);
            if no_verify {
                return Ok(true);
            }
            let reports = ap.verify(g.max_cosets, FULL_LIMIT)?;
            let all = reports.iter().all(|r| r.ok());
            Ok(verification_out(out, reports.last().expect("at least one level")) && all)
        }
        Cmd::Emit { family, q, verify } => {
            let e = resolve_family(&family, q)?;
            presentation_out(out, e.presentation());
            if !verify {
                return Ok(true);
            }
            let r = e.verify(g.max_cosets)?;
            Ok(verification_out(out, &r))
        }
        Cmd::Verify { presentation, group, images } => {
            let text = std::fs::read_to_string(&presentation)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", presentation.display())))?;
            let p = Presentation::from_text(&text)?;
            match (group, images) {
                (Some(spec), Some(images)) => {
                    let gp = spec.build()?;
                    let assignment = parse_perm_list(&images, gp.degree())?;
                    if assignment.len() != p.gens.len() {
                        return Err(Failure::Usage(format!(
                            "{} images for {} generators",
                            assignment.len(),
                            p.gens.len()
                        )));
                    }
                    let r = verify_presentation(&p, &gp, &assignment, &Strategy::Full, g.max_cosets)?;
                    Ok(verification_out(out, &r))
                }
                _ => {
                    let t = todd_coxeter(&p, &[], g.max_cosets)?;
                    out.emit(
                        "enumeration",
                        &format!("cosets used: {}\norder: {}\n", t.cosets_used, t.index),
                        json!({"cosets_used": t.cosets_used, "order": t.index}),
                    );
                    Ok(true)
                }
            }
        }
        Cmd::Polygroup { group, subgroup, point: w } => {
            let gp = group.build()?;
            let pg = match (subgroup, w) {
                (Some(s), _) => {
                    let h = PermGroup::try_new(gp.degree(), parse_perm_list(&s, gp.degree())?)?;
                    if !h.is_subgroup_of(&gp) {
                        return Err(Failure::Usage("the subgroup generators are not in the group".into()));
                    }
                    double_coset_polygroup(&gp, &h)?
                }
                (None, Some(w)) => stabilizer_polygroup(&gp, point(w, &gp)?)?,
                (None, None) => return Err(Failure::Usage("give --subgroup or --point".into())),
            };
            polygroup_out(out, &pg)
        }
        Cmd::DeformGraph { order } => {
            let dg = deformation_graph(order)?;
            out.emit(
                "deform-graph",
                &dg.to_string(),
                json!({"order": dg.order, "vertices": dg.vertices, "edges": dg.edge_names()}),
            );
            Ok(true)
        }
        Cmd::Witt { degree, verify } => {
            let degrees: Vec<usize> = match degree {
                Some(d) if MATHIEU_DEGREES.contains(&d) => vec![d],
                Some(d) => return Err(Failure::Usage(format!("no Mathieu stage of degree {d}"))),
                None => MATHIEU_DEGREES.to_vec(),
            };
            let mut ok = true;
            for d in degrees {
                let st = mathieu(d)?;
                let rep = st.check();
                let (k, sharp) = st.group.transitivity_profile();
                let head = format!(
                    "stage: {}\ndegree: {}\norder: {}\ntransitivity: {k}{}\n",
                    st.name,
                    st.degree(),
                    st.group.order(),
                    if sharp { " (sharp)" } else { "" }
                );
                out.emit(
                    "witt",
                    &format!("{head}{rep}"),
                    json!({
                        "stage": st.name,
                        "degree": st.degree(),
                        "order": st.group.order().to_string(),
                        "transitivity": k,
                        "sharp": sharp,
                        "hypotheses": rep.items.iter().map(|(n, b)| json!({"name": n, "pass": b})).collect::<Vec<_>>(),
                    }),
                );
                ok &= rep.ok();
                if verify {
                    ok &= verification_out(out, &st.verify(g.max_cosets)?);
                }
            }
            Ok(ok)
        }
        Cmd::Glgg { group, subgroup, presentation, max_tuples } => {
            let gp = group.build()?;
            let h = PermGroup::try_new(gp.degree(), parse_perm_list(&subgroup, gp.degree())?)?;
            if !h.is_subgroup_of(&gp) {
                return Err(Failure::Usage("the subgroup generators are not in the group".into()));
            }
            glgg_run(&gp, &h, presentation, CheckBounds { max_tuples, seed: g.seed }, out)
        }
        Cmd::Catalog { which } => {
            match which {
                CatalogKind::Mathieu => {
                    for d in MATHIEU_DEGREES {
                        let st = mathieu(d)?;
                        let (k, sharp) = st.group.transitivity_profile();
                        let sharp_s = if sharp { "sharply " } else { "" };
                        out.emit(
                            "group",
                            &format!("{}: degree {}, order {}, {sharp_s}{k}-transitive", st.name, d, st.group.order()),
                            json!({"name": st.name, "degree": d, "order": st.group.order().to_string(), "transitivity": k, "sharp": sharp}),
                        );
                    }
                }
                CatalogKind::Small => {
                    for (name, gp) in small_groups()? {
                        let subs = gp.subgroups()?.len();
                        out.emit(
                            "group",
                            &format!("{name}: degree {}, order {}, {subs} subgroups", gp.degree(), gp.order()),
                            json!({"name": name, "degree": gp.degree(), "order": gp.order().to_string(), "subgroups": subs}),
                        );
                    }
                }
            }
            Ok(true)
        }
        Cmd::VerifyAll => Ok(jobs::verify_all(g.max_cosets, g.seed, out)),
    }
}

fn polygroup_out(out: &mut Out, pg: &Polygroup) -> Result<bool, Failure> {
    let axioms = pg.check_axioms()?;
    let known = if pg.len() == 2 && pg.isomorphic(&Polygroup::p2())?.is_some() {
        Some("P2")
    } else if pg.len() == 3 && pg.isomorphic(&Polygroup::p3())?.is_some() {
        Some("P3")
    } else {
        None
    };
    let mut text = format!("size: {}\nelements: {}\n{}", pg.len(), pg.labels.join(", "), pg.table_text());
    text.push_str(&axioms.to_string());
    text.push_str(&format!("group: {}\n", pg.is_group()));
    if let Some(k) = known {
        text.push_str(&format!("isomorphic to: {k}\n"));
    }
    let rows: Vec<Value> = (0..pg.len())
        .flat_map(|a| (0..pg.len()).map(move |b| (a, b)))
        .map(|(a, b)| json!({"a": a, "b": b, "product": pg.op_set(a, b)}))
        .collect();
    out.emit(
        "polygroup",
        &text,
        json!({
            "size": pg.len(),
            "elements": pg.labels,
            "table": rows,
            "axioms_pass": axioms.ok(),
            "group": pg.is_group(),
            "isomorphic_to": known,
        }),
    );
    Ok(axioms.ok())
}

fn glgg_run(g: &PermGroup, h: &PermGroup, with_presentation: bool, bounds: CheckBounds, out: &mut Out) -> Result<bool, Failure> {
    let pair = build_glgg_from_pair(g, h)?;
    let (report, fg) = pair.full_report(&bounds)?;
    let x = &pair.glgg;
    let order = fg.table.order();
    let (iso, how) = if order as u128 == g.order() && order <= polypres::perm::ISO_LIMIT {
        let (t, _) = TableGroup::from_perm_group("G", g)?;
        (is_isomorphic(&fg.table, &t)?.is_some(), "multiplication tables")
    } else {
        let zeta_ok = report.items.iter().filter(|(n, _)| n.starts_with("ζ")).all(|(_, w)| w.is_none());
        (zeta_ok && order as u128 == g.order(), "ζ")
    };
    let text = format!(
        "|H|: {}\n|E|: {}\n{report}|𝔊|: {order}\nisomorphic to G: {} (via {how})\n",
        x.h.order(),
        x.len(),
        if iso { "yes" } else { "no" }
    );
    out.emit(
        "glgg",
        &text,
        json!({
            "h_order": x.h.order(),
            "e_size": x.len(),
            "report": report.items.iter().map(|(n, w)| json!({"name": n, "pass": w.is_none(), "witness": w})).collect::<Vec<_>>(),
            "group_order": order,
            "isomorphic": iso,
        }),
    );
    let mut ok = report.ok() && iso;
    if with_presentation {
        let ap = emit_for_subgroup(g, h, HStrategy::Tower, &EmitOptions::default())?;
        let choices = PresentationChoices::from_action(&ap, &pair, false)?;
        let p = emit_glgg_presentation(x, &choices)?;
        presentation_out(out, &p);
        let same = p == ap.presentation;
        out.emit(
            "comparison",
            &format!("matches action presentation: {}\n", if same { "yes" } else { "no" }),
            json!({"matches_action_presentation": same}),
        );
        ok &= same;
    }
    Ok(ok)
}

enum Emitted {
    Family(FamilyPresentation),
    Deform(DeformPresentation),
    Mathieu(Box<MathieuStage>),
}

impl Emitted {
    fn presentation(&self) -> &Presentation {
        match self {
            Emitted::Family(f) => &f.presentation,
            Emitted::Deform(d) => &d.presentation,
            Emitted::Mathieu(m) => &m.presentation,
        }
    }

    fn verify(&self, max_cosets: usize) -> Result<VerificationReport, Error> {
        match self {
            Emitted::Family(f) => f.verify(max_cosets),
            Emitted::Deform(d) => d.verify(max_cosets),
            Emitted::Mathieu(m) => m.verify(max_cosets),
        }
    }
}

fn resolve_family(name: &str, q: Option<u64>) -> Result<Emitted, Failure> {
    let (name, q) = match name.split_once(':') {
        Some((n, qs)) => {
            let q2: u64 = qs.parse().map_err(|_| Failure::Usage(format!("bad field order {qs:?}")))?;
            if q.is_some_and(|q| q != q2) {
                return Err(Failure::Usage("conflicting field orders".into()));
            }
            (n, Some(q2))
        }
        None => (name, q),
    };
    if let Some(n) = name.strip_prefix('m').and_then(|t| t.parse::<usize>().ok()) {
        if MATHIEU_DEGREES.contains(&n) {
            return Ok(Emitted::Mathieu(Box::new(mathieu(n)?)));
        }
    }
    let alias = match name {
        "gl2" => "gl2q",
        "gl2-alt" => "gl2q-alt",
        "pgl2" => "pgl2q",
        "pgl2-alt" => "pgl2q-alt",
        "sl3" => "sl3q",
        "psl3" => "psl3q",
        "b2" => "b2K",
        other => other,
    };
    if alias == "psl34" {
        return Ok(Emitted::Family(emit_family_presentation(PresFamily::Psl34, q.unwrap_or(4))?));
    }
    let need_q = || q.ok_or_else(|| Failure::Usage(format!("family {name} needs --q")));
    if let Some(f) = PresFamily::parse(alias) {
        return Ok(Emitted::Family(emit_family_presentation(f, need_q()?)?));
    }
    if let Some(part) = DeformPart::parse(alias) {
        let q = if part == DeformPart::M9 { q.unwrap_or(3) } else { need_q()? };
        return Ok(Emitted::Deform(emit_deform_presentation(part, q)?));
    }
    Err(Failure::Usage(format!("unknown family {name:?}")))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Out::new(cli.global.format);
    let result = run(cli.cmd, &cli.global, &mut out);
    let code = match &result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Failure::Usage(_)) => 2,
        Err(Failure::Lib(Error::Overflow(_) | Error::TooLarge(_))) => 3,
        Err(Failure::Lib(_)) => 2,
    };
    let written = match &cli.global.out {
        Some(path) => std::fs::write(path, &out.buf),
        None => std::io::stdout().write_all(out.buf.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(2);
    }
    match result {
        Err(Failure::Usage(m)) => eprintln!("error: {m}"),
        Err(Failure::Lib(e)) => eprintln!("error: {e}"),
        Ok(false) => eprintln!("verification failed"),
        Ok(true) => {}
    }
    ExitCode::from(code)
}
