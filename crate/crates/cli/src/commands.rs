//! The thirteen commands: each loads its input documents, runs the library,
//! and produces a run report plus (for constructions) an output document that
//! parses back as an input.
//!
//! Exit codes: 0 pass, 1 law or construction failure (the report lists the
//! violations), 2 usage error (wrong arity or document kind), 3 isomorphism
//! budget exhausted.

use crate::docs::{Payload, Document};
use crate::report::{index_list, RunReport, Verdict};
use smallcat::action::{
    action_domain, gphi_category, inner_action, opposite_action, restricted_semidirect,
    semidirect_groupoid, semidirect_shared_units, transformation_groupoid, validate_action,
    validate_action_groupoid_form, ActionError, ActionTables, GroupAction, LeftAction,
    SemidirectProduct,
};
use smallcat::bundle::{
    bundle_from_groupoid, standard_groupoid, standardization_iso, ChoicePolicy, GroupBundle,
};
use smallcat::category::{
    validate_category, CategoryError, FiniteCategory, Groupoid, IsoWitness, RawCategory,
};
use smallcat::group::{FiniteGroup, GroupError};
use smallcat::iso::{corollary_check, find_isomorphism, orbits_and_stabilizers, IsoOutcome};
use smallcat::partition::Partition;

/// One parsed invocation: the command, its input documents, and the flags
/// that apply to it.
pub struct Request {
    pub command: &'static str,
    pub inputs: Vec<Document>,
    pub budget: u64,
    pub policy: ChoicePolicy,
}

/// What a command run produced. `exit` is the process exit code.
pub struct Outcome {
    pub report: RunReport,
    pub document: Option<Document>,
    pub exit: u8,
}

fn pass(report: RunReport, document: Option<Document>) -> Outcome {
    Outcome { report, document, exit: 0 }
}

fn usage(mut report: RunReport, message: String) -> Outcome {
    report.verdict = Verdict::Fail;
    report.violation(message);
    Outcome { report, document: None, exit: 2 }
}

fn laws(mut report: RunReport, violations: Vec<String>) -> Outcome {
    report.verdict = Verdict::Fail;
    for v in violations {
        report.violation(v);
    }
    Outcome { report, document: None, exit: 1 }
}

// ---------------------------------------------------------------------------
// loaders: document payload -> validated library value, or violation lines

fn category_violations(e: CategoryError) -> Vec<String> {
    match e {
        CategoryError::Laws(vs) => vs.into_iter().map(|v| v.to_string()).collect(),
        other => vec![other.to_string()],
    }
}

fn group_violations(e: GroupError) -> Vec<String> {
    match e {
        GroupError::Laws(vs) => vs.into_iter().map(|v| v.to_string()).collect(),
        other => vec![other.to_string()],
    }
}

fn action_violations(e: ActionError) -> Vec<String> {
    match e {
        ActionError::Laws(vs) => vs.into_iter().map(|v| v.to_string()).collect(),
        other => vec![other.to_string()],
    }
}

fn load_category(raw: &RawCategory) -> Result<FiniteCategory, Vec<String>> {
    validate_category(raw.clone()).map_err(category_violations)
}

fn load_groupoid(raw: &RawCategory) -> Result<Groupoid, Vec<String>> {
    let category = load_category(raw)?;
    Groupoid::from_category(category).map_err(|e| vec![e.to_string()])
}

fn load_group(rows: &[Vec<usize>]) -> Result<FiniteGroup, Vec<String>> {
    FiniteGroup::from_table(rows).map_err(group_violations)
}

/// Rebuilds the bundle, reordering the written fibers to the canonical class
/// numbering of the partition (classes ordered by least point).
fn load_bundle(
    points: usize,
    classes: &[Vec<usize>],
    fibers: &[Vec<Vec<usize>>],
) -> Result<GroupBundle, Vec<String>> {
    let partition = Partition::from_classes(points, classes).map_err(|e| vec![e.to_string()])?;
    let mut groups: Vec<Option<FiniteGroup>> = vec![None; classes.len()];
    let mut violations = Vec::new();
    for (k, rows) in fibers.iter().enumerate() {
        match FiniteGroup::from_table(rows) {
            Ok(group) => groups[partition.class_of(classes[k][0])] = Some(group),
            Err(e) => violations
                .extend(group_violations(e).into_iter().map(|v| format!("fiber {k}: {v}"))),
        }
    }
    if !violations.is_empty() {
        return Err(violations);
    }
    let fibers = groups.into_iter().map(|g| g.expect("every class got its fiber")).collect();
    GroupBundle::new(partition, fibers).map_err(|e| vec![e.to_string()])
}

fn load_action(tables: &ActionTables) -> Result<LeftAction, Vec<String>> {
    validate_action(tables.clone()).map_err(action_violations)
}

fn load_group_action(
    table: &[Vec<usize>],
    points: usize,
    rows: &[Vec<usize>],
) -> Result<GroupAction, Vec<String>> {
    let group = load_group(table)?;
    GroupAction::new(group, points, rows).map_err(|e| vec![e.to_string()])
}

// ---------------------------------------------------------------------------
// shared emission helpers

fn group_rows(group: &FiniteGroup) -> Vec<Vec<usize>> {
    let n = group.order();
    (0..n).map(|a| (0..n).map(|b| group.mul(a, b)).collect()).collect()
}

fn bundle_payload(bundle: &GroupBundle) -> Payload {
    Payload::Bundle {
        points: bundle.partition.points(),
        classes: bundle.partition.classes().map(|c| c.to_vec()).collect(),
        fibers: bundle.fibers.iter().map(group_rows).collect(),
    }
}

/// Category payload, upgraded to groupoid kind when every morphism inverts.
fn category_payload(category: &FiniteCategory) -> Payload {
    let raw = category.to_raw();
    match Groupoid::from_category(category.clone()) {
        Ok(_) => Payload::Groupoid(raw),
        Err(_) => Payload::Category(raw),
    }
}

fn output_name(input: &Document, command: &str) -> String {
    format!("{}-{}", input.name, command)
}

fn witness_lines(report: &mut RunReport, prefix: &str, witness: &IsoWitness) {
    report.witness(format!("{prefix}objects {}", index_list(&witness.object_map)));
    report.witness(format!("{prefix}morphisms {}", index_list(&witness.morphism_map)));
}

fn pair_lines(report: &mut RunReport, product: &SemidirectProduct) {
    report.detail("pairs", product.pairs().len());
    for (i, &(h, g)) in product.pairs().iter().enumerate() {
        report.detail(format!("pair {i}"), format!("h {} g {}", h.0, g.0));
    }
}

// ---------------------------------------------------------------------------
// arity and kind guards

fn single<'a>(
    request: &'a Request,
    report: RunReport,
) -> Result<(&'a Document, RunReport), Outcome> {
    match request.inputs.as_slice() {
        [doc] => Ok((doc, report)),
        other => Err(usage(
            report,
            format!("{} expects exactly 1 input document, got {}", request.command, other.len()),
        )),
    }
}

fn pair<'a>(
    request: &'a Request,
    report: RunReport,
) -> Result<(&'a Document, &'a Document, RunReport), Outcome> {
    match request.inputs.as_slice() {
        [a, b] => Ok((a, b, report)),
        other => Err(usage(
            report,
            format!("{} expects exactly 2 input documents, got {}", request.command, other.len()),
        )),
    }
}

fn wrong_kind(report: RunReport, command: &str, wanted: &str, doc: &Document) -> Outcome {
    usage(
        report,
        format!("{command} expects a {wanted} document, but '{}' has kind {}", doc.name, doc.payload.kind()),
    )
}

// ---------------------------------------------------------------------------
// commands

fn cmd_validate(request: &Request, report: RunReport) -> Outcome {
    let (doc, mut report) = match single(request, report) {
        Ok(v) => v,
        Err(o) => return o,
    };
    match &doc.payload {
        Payload::Category(raw) | Payload::Groupoid(raw) => {
            let result = if matches!(doc.payload, Payload::Groupoid(_)) {
                load_groupoid(raw).map(Groupoid::into_category)
            } else {
                load_category(raw)
            };
            match result {
                Ok(category) => {
                    report.detail("objects", category.n_objects());
                    report.detail("morphisms", category.n_morphisms());
                    pass(report, Some(doc.clone()))
                }
                Err(vs) => laws(report, vs),
            }
        }
        Payload::Group(rows) => match load_group(rows) {
            Ok(group) => {
                report.detail("order", group.order());
                report.detail("identity", group.identity());
                pass(report, Some(doc.clone()))
            }
            Err(vs) => laws(report, vs),
        },
        Payload::Bundle { points, classes, fibers } => {
            match load_bundle(*points, classes, fibers) {
                Ok(bundle) => {
                    report.detail("points", bundle.partition.points());
                    report.detail("classes", bundle.partition.num_classes());
                    report.detail("standard-size", bundle.standard_size());
                    pass(report, Some(doc.clone()))
                }
                Err(vs) => laws(report, vs),
            }
        }
        Payload::Action(tables) => match load_action(tables) {
            Ok(action) => {
                report.detail("domain", action.domain().len());
                report.detail("acting-morphisms", action.g().n_morphisms());
                report.detail("acted-morphisms", action.h().n_morphisms());
                if action.g_is_groupoid() {
                    match validate_action_groupoid_form(tables) {
                        Ok(_) => report.detail("groupoid-form", "agrees"),
                        Err(e) => {
                            return laws(
                                report,
                                vec![format!("the groupoid-form validator disagrees: {e}")],
                            )
                        }
                    }
                }
                pass(report, Some(doc.clone()))
            }
            Err(vs) => laws(report, vs),
        },
        Payload::GroupAction { table, points, rows } => {
            match load_group_action(table, *points, rows) {
                Ok(action) => {
                    report.detail("order", action.group().order());
                    report.detail("points", action.n_points());
                    pass(report, Some(doc.clone()))
                }
                Err(vs) => laws(report, vs),
            }
        }
    }
}

fn cmd_standardize(request: &Request, report: RunReport) -> Outcome {
    let (doc, mut report) = match single(request, report) {
        Ok(v) => v,
        Err(o) => return o,
    };
    let Payload::Groupoid(raw) = &doc.payload else {
        return wrong_kind(report, request.command, "groupoid", doc);
    };
    let groupoid = match load_groupoid(raw) {
        Ok(g) => g,
        Err(vs) => return laws(report, vs),
    };
    let decomposition = bundle_from_groupoid(&groupoid, request.policy);
    let (standard, witness) = standardization_iso(&groupoid, &decomposition);
    report.detail("classes", decomposition.bundle.partition.num_classes());
    report.detail("standard-size", standard.groupoid.n_morphisms());
    report.detail(
        "representatives",
        index_list(&decomposition.representatives.iter().map(|o| o.0).collect::<Vec<_>>()),
    );
    report.detail(
        "connectors",
        index_list(&decomposition.connectors.iter().map(|m| m.0).collect::<Vec<_>>()),
    );
    witness_lines(&mut report, "", &witness);
    let document = Document {
        name: output_name(doc, request.command),
        payload: bundle_payload(&decomposition.bundle),
    };
    pass(report, Some(document))
}

fn cmd_build_standard(request: &Request, report: RunReport) -> Outcome {
    let (doc, mut report) = match single(request, report) {
        Ok(v) => v,
        Err(o) => return o,
    };
    let Payload::Bundle { points, classes, fibers } = &doc.payload else {
        return wrong_kind(report, request.command, "bundle", doc);
    };
    let bundle = match load_bundle(*points, classes, fibers) {
        Ok(b) => b,
        Err(vs) => return laws(report, vs),
    };
    let standard = standard_groupoid(&bundle);
    report.detail("objects", standard.groupoid.n_objects());
    report.detail("morphisms", standard.groupoid.n_morphisms());
    for (i, t) in standard.morphisms.iter().enumerate() {
        report.detail(format!("triple {i}"), format!("x {} g {} y {}", t.target, t.element, t.source));
    }
    let document = Document {
        name: output_name(doc, request.command),
        payload: Payload::Groupoid(standard.groupoid.category().to_raw()),
    };
    pass(report, Some(document))
}

/// Shared body of `semidirect` and `semidirect-shared`.
fn product_command(
    request: &Request,
    report: RunReport,
    build: impl Fn(&LeftAction) -> Result<SemidirectProduct, ActionError>,
) -> Outcome {
    let (doc, mut report) = match single(request, report) {
        Ok(v) => v,
        Err(o) => return o,
    };
    let Payload::Action(tables) = &doc.payload else {
        return wrong_kind(report, request.command, "action", doc);
    };
    let action = match load_action(tables) {
        Ok(a) => a,
        Err(vs) => return laws(report, vs),
    };
    let product = match build(&action) {
        Ok(p) => p,
        Err(e) => return laws(report, action_violations(e)),
    };
    let payload = category_payload(product.category());
    report.detail("kind", payload.kind());
    pair_lines(&mut report, &product);
    let document = Document { name: output_name(doc, request.command), payload };
    pass(report, Some(document))
}

fn cmd_restricted_semidirect(request: &Request, report: RunReport) -> Outcome {
    let (doc, mut report) = match single(request, report) {
        Ok(v) => v,
        Err(o) => return o,
    };
    let Payload::Action(tables) = &doc.payload else {
        return wrong_kind(report, request.command, "action", doc);
    };
    let action = match load_action(tables) {
        Ok(a) => a,
        Err(vs) => return laws(report, vs),
    };
    let restricted = match restricted_semidirect(&action) {
        Ok(r) => r,
        Err(e) => return laws(report, action_violations(e)),
    };
    let payload = category_payload(restricted.product.category());
    report.detail("kind", payload.kind());
    report.detail("tilde-morphisms", restricted.tilde.triples().len());
    for (i, &(g, u, v)) in restricted.tilde.triples().iter().enumerate() {
        report.detail(format!("triple {i}"), format!("g {} u {} v {}", g.0, u.0, v.0));
    }
    pair_lines(&mut report, &restricted.product);
    let document = Document { name: output_name(doc, request.command), payload };
    pass(report, Some(document))
}

fn cmd_opposite(request: &Request, report: RunReport) -> Outcome {
    let (doc, mut report) = match single(request, report) {
        Ok(v) => v,
        Err(o) => return o,
    };
    let payload = match &doc.payload {
        Payload::Category(raw) => match load_category(raw) {
            Ok(c) => Payload::Category(c.opposite().to_raw()),
            Err(vs) => return laws(report, vs),
        },
        Payload::Groupoid(raw) => match load_groupoid(raw) {
            Ok(g) => Payload::Groupoid(g.category().opposite().to_raw()),
            Err(vs) => return laws(report, vs),
        },
        Payload::Action(tables) => match load_action(tables) {
            Ok(a) => Payload::Action(opposite_action(&a).tables().clone()),
            Err(vs) => return laws(report, vs),
        },
        _ => return wrong_kind(report, request.command, "category, groupoid, or action", doc),
    };
    report.detail("kind", payload.kind());
    let document = Document { name: output_name(doc, request.command), payload };
    pass(report, Some(document))
}

fn cmd_gphi(request: &Request, report: RunReport) -> Outcome {
    let (doc, mut report) = match single(request, report) {
        Ok(v) => v,
        Err(o) => return o,
    };
    let Payload::Action(tables) = &doc.payload else {
        return wrong_kind(report, request.command, "action", doc);
    };
    let action = match load_action(tables) {
        Ok(a) => a,
        Err(vs) => return laws(report, vs),
    };
    let gphi = match gphi_category(&action) {
        Ok(g) => g,
        Err(e) => return laws(report, action_violations(e)),
    };
    let payload = category_payload(gphi.category());
    report.detail("kind", payload.kind());
    report.detail("pairs", gphi.pairs().len());
    for (i, &(g, h)) in gphi.pairs().iter().enumerate() {
        report.detail(format!("pair {i}"), format!("g {} h {}", g.0, h.0));
    }
    let document = Document { name: output_name(doc, request.command), payload };
    pass(report, Some(document))
}

fn cmd_inner_action(request: &Request, report: RunReport) -> Outcome {
    let (doc, mut report) = match single(request, report) {
        Ok(v) => v,
        Err(o) => return o,
    };
    let Payload::Groupoid(raw) = &doc.payload else {
        return wrong_kind(report, request.command, "groupoid", doc);
    };
    let groupoid = match load_groupoid(raw) {
        Ok(g) => g,
        Err(vs) => return laws(report, vs),
    };
    let inner = inner_action(&groupoid);
    report.detail("domain", inner.action.domain().len());
    report.detail("pairs", inner.product.pairs().len());
    report.detail("kernel-size", inner.kernel.category.n_morphisms());
    report.detail("endomorphisms", inner.endos.category.n_morphisms());
    report.detail("psi", index_list(&inner.psi.iter().map(|m| m.0).collect::<Vec<_>>()));
    witness_lines(&mut report, "kernel ", &inner.kernel_witness);
    let document = Document {
        name: output_name(doc, request.command),
        payload: Payload::Action(inner.action.tables().clone()),
    };
    pass(report, Some(document))
}

fn cmd_transformation_groupoid(request: &Request, report: RunReport) -> Outcome {
    let (doc, mut report) = match single(request, report) {
        Ok(v) => v,
        Err(o) => return o,
    };
    let Payload::GroupAction { table, points, rows } = &doc.payload else {
        return wrong_kind(report, request.command, "group-action", doc);
    };
    let action = match load_group_action(table, *points, rows) {
        Ok(a) => a,
        Err(vs) => return laws(report, vs),
    };
    let transformation = transformation_groupoid(&action);
    let orbits = orbits_and_stabilizers(&action);
    report.detail("objects", transformation.groupoid.n_objects());
    report.detail("morphisms", transformation.groupoid.n_morphisms());
    for (i, orbit) in orbits.orbits.iter().enumerate() {
        report.detail(format!("orbit {i}"), index_list(orbit));
        report.detail(
            format!("stabilizer {i}"),
            format!(
                "base {} order {} elements {}",
                orbits.base_points[i],
                orbits.stabilizers[i].order(),
                index_list(&orbits.stabilizer_elements[i]),
            ),
        );
    }
    pair_lines(&mut report, &transformation.product);
    let document = Document {
        name: output_name(doc, request.command),
        payload: Payload::Groupoid(transformation.groupoid.category().to_raw()),
    };
    pass(report, Some(document))
}

/// Loads a category or groupoid document to its underlying category, labeling
/// violations with the document name.
fn load_plain_category(doc: &Document) -> Result<FiniteCategory, Vec<String>> {
    let result = match &doc.payload {
        Payload::Category(raw) => load_category(raw),
        Payload::Groupoid(raw) => load_groupoid(raw).map(Groupoid::into_category),
        _ => unreachable!("kind checked by the caller"),
    };
    result.map_err(|vs| vs.into_iter().map(|v| format!("{}: {v}", doc.name)).collect())
}

/// A one-line reason two categories cannot be isomorphic, for failed checks.
fn non_iso_reason(a: &FiniteCategory, b: &FiniteCategory) -> String {
    if a.n_objects() != b.n_objects() {
        return format!(
            "the structures are not isomorphic: {} objects versus {}",
            a.n_objects(),
            b.n_objects()
        );
    }
    if a.n_morphisms() != b.n_morphisms() {
        return format!(
            "the structures are not isomorphic: {} morphisms versus {}",
            a.n_morphisms(),
            b.n_morphisms()
        );
    }
    let profiles = |c: &FiniteCategory| -> Vec<Vec<(usize, usize)>> {
        let mut all: Vec<Vec<(usize, usize)>> = c
            .objects()
            .map(|x| {
                let mut row: Vec<(usize, usize)> = c
                    .objects()
                    .map(|y| (c.hom_set(x, y).len(), c.hom_set(y, x).len()))
                    .collect();
                row.sort_unstable();
                row
            })
            .collect();
        all.sort();
        all
    };
    if profiles(a) != profiles(b) {
        return "the structures are not isomorphic: their hom-set size profiles differ".to_string();
    }
    "the structures are not isomorphic: exhaustive search refused every candidate bijection"
        .to_string()
}

fn cmd_iso_check(request: &Request, report: RunReport) -> Outcome {
    let (doc_a, doc_b, mut report) = match pair(request, report) {
        Ok(v) => v,
        Err(o) => return o,
    };
    for doc in [doc_a, doc_b] {
        if !matches!(doc.payload, Payload::Category(_) | Payload::Groupoid(_)) {
            return wrong_kind(report, request.command, "category or groupoid", doc);
        }
    }
    let a = match load_plain_category(doc_a) {
        Ok(c) => c,
        Err(vs) => return laws(report, vs),
    };
    let b = match load_plain_category(doc_b) {
        Ok(c) => c,
        Err(vs) => return laws(report, vs),
    };
    report.detail("budget", request.budget);
    match find_isomorphism(&a, &b, request.budget) {
        IsoOutcome::Isomorphic(witness) => {
            report.detail("isomorphic", "yes");
            witness_lines(&mut report, "", &witness);
            pass(report, None)
        }
        IsoOutcome::NotIsomorphic => {
            report.detail("isomorphic", "no");
            laws(report, vec![non_iso_reason(&a, &b)])
        }
        IsoOutcome::BudgetExceeded => {
            report.detail("isomorphic", "unknown");
            report.verdict = Verdict::Unknown;
            Outcome { report, document: None, exit: 3 }
        }
    }
}

fn cmd_corollary_check(request: &Request, report: RunReport) -> Outcome {
    let (doc_a, doc_b, mut report) = match pair(request, report) {
        Ok(v) => v,
        Err(o) => return o,
    };
    let mut actions = Vec::new();
    for doc in [doc_a, doc_b] {
        let Payload::GroupAction { table, points, rows } = &doc.payload else {
            return wrong_kind(report, request.command, "group-action", doc);
        };
        match load_group_action(table, *points, rows) {
            Ok(a) => actions.push(a),
            Err(vs) => {
                return laws(
                    report,
                    vs.into_iter().map(|v| format!("{}: {v}", doc.name)).collect(),
                )
            }
        }
    }
    report.detail("budget", request.budget);
    let result = corollary_check(&actions[0], &actions[1], request.budget);
    for (side, decomposition) in
        [("left", &result.a_decomposition), ("right", &result.b_decomposition)]
    {
        for (i, orbit) in decomposition.orbits.iter().enumerate() {
            report.detail(format!("{side}-orbit {i}"), index_list(orbit));
            report.detail(
                format!("{side}-stabilizer {i}"),
                format!(
                    "base {} order {} elements {}",
                    decomposition.base_points[i],
                    decomposition.stabilizers[i].order(),
                    index_list(&decomposition.stabilizer_elements[i]),
                ),
            );
        }
    }
    let groupoid_verdict = match &result.groupoid_outcome {
        IsoOutcome::Isomorphic(_) => "yes",
        IsoOutcome::NotIsomorphic => "no",
        IsoOutcome::BudgetExceeded => "unknown",
    };
    let matching_verdict = if result.matching.is_some() { "yes" } else { "no" };
    report.detail("groupoid-isomorphic", groupoid_verdict);
    report.detail("orbit-matching", matching_verdict);
    if let IsoOutcome::Isomorphic(witness) = &result.groupoid_outcome {
        witness_lines(&mut report, "groupoid ", witness);
    }
    if let Some(matching) = &result.matching {
        report.witness(format!("point-map {}", index_list(&matching.point_map)));
        report.witness(format!("orbit-pairing {}", index_list(&matching.orbit_pairing)));
    }
    match result.verdicts_agree() {
        Some(true) => {
            report.detail("verdicts-agree", "yes");
            pass(report, None)
        }
        Some(false) => laws(
            report,
            vec![format!(
                "the two criteria disagree: the groupoid search says {groupoid_verdict} but the orbit matching says {matching_verdict}"
            )],
        ),
        None => {
            report.detail("verdicts-agree", "unknown");
            report.verdict = Verdict::Unknown;
            Outcome { report, document: None, exit: 3 }
        }
    }
}

fn cmd_axioms_report(request: &Request, report: RunReport) -> Outcome {
    let (doc, mut report) = match single(request, report) {
        Ok(v) => v,
        Err(o) => return o,
    };
    let Payload::Action(tables) = &doc.payload else {
        return wrong_kind(report, request.command, "action", doc);
    };
    report.detail("acting-morphisms", tables.g.n_morphisms());
    report.detail("acted-morphisms", tables.h.n_morphisms());
    report.detail("domain", action_domain(&tables.g, &tables.h, &tables.phi).len());
    let acting_is_groupoid = Groupoid::from_category(tables.g.clone()).is_ok();
    let form_agrees = |ok: bool| {
        if !acting_is_groupoid {
            return None;
        }
        Some(validate_action_groupoid_form(tables).is_ok() == ok)
    };
    match validate_action(tables.clone()) {
        Ok(action) => {
            report.detail("violations", 0);
            if let Some(agrees) = form_agrees(true) {
                report.detail("groupoid-form", if agrees { "agrees" } else { "disagrees" });
                if !agrees {
                    return laws(
                        report,
                        vec!["the groupoid-form validator rejects a table the axioms accept".to_string()],
                    );
                }
            }
            report.detail("objects-in-image", {
                let mut image: Vec<usize> = action.phi().to_vec();
                image.sort_unstable();
                image.dedup();
                image.len()
            });
            pass(report, Some(doc.clone()))
        }
        Err(ActionError::Laws(violations)) => {
            report.detail("violations", violations.len());
            if let Some(agrees) = form_agrees(false) {
                report.detail("groupoid-form", if agrees { "agrees" } else { "disagrees" });
            }
            laws(report, violations.into_iter().map(|v| v.to_string()).collect())
        }
        Err(other) => laws(report, vec![other.to_string()]),
    }
}

/// Runs one command end to end. The caller stamps the timing afterwards.
pub fn run(request: &Request) -> Outcome {
    let names: Vec<String> = request.inputs.iter().map(|d| d.name.clone()).collect();
    let report = RunReport::new(request.command, &names);
    match request.command {
        "validate" => cmd_validate(request, report),
        "standardize" => cmd_standardize(request, report),
        "build-standard" => cmd_build_standard(request, report),
        "semidirect" => product_command(request, report, semidirect_groupoid),
        "semidirect-shared" => product_command(request, report, semidirect_shared_units),
        "restricted-semidirect" => cmd_restricted_semidirect(request, report),
        "opposite" => cmd_opposite(request, report),
        "gphi" => cmd_gphi(request, report),
        "inner-action" => cmd_inner_action(request, report),
        "transformation-groupoid" => cmd_transformation_groupoid(request, report),
        "iso-check" => cmd_iso_check(request, report),
        "corollary-check" => cmd_corollary_check(request, report),
        "axioms-report" => cmd_axioms_report(request, report),
        other => usage(report, format!("unknown command '{other}'")),
    }
}
