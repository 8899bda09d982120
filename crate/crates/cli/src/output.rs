//! Subcommand bodies: text tables and JSON envelopes.

use burnside_core::{
    artin_exponent, closed_form_exponent, verify_main_theorem, BurnsideRing, ClosedFormCase, FamilySpec, GroupSpec,
    MaxCyclicType, Result, Violation,
};
use serde::Serialize;
use serde_json::json;

use crate::Context;

const TOOL_VERSION: &str = concat!("burnside ", env!("CARGO_PKG_VERSION"));

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    command: &'a str,
    group_spec: &'a str,
    payload: T,
    tool_version: &'a str,
}

/// Prints a JSON envelope. Going through `serde_json::Value` sorts object keys.
fn emit_json<T: Serialize>(command: &str, group_spec: &str, payload: T) {
    let envelope = Envelope {
        command,
        group_spec,
        payload,
        tool_version: TOOL_VERSION,
    };
    let value = serde_json::to_value(envelope).expect("payloads are plain data");
    out!("{}", serde_json::to_string_pretty(&value).expect("values serialize"));
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn family_name(family: FamilySpec) -> &'static str {
    match family {
        FamilySpec::ElementaryAbelian => "elementary abelian",
        FamilySpec::Cyclic => "cyclic",
        FamilySpec::AllSubgroups => "all subgroups",
    }
}

fn case_text(case: ClosedFormCase) -> String {
    let detail = match case {
        ClosedFormCase::Abelian => "abelian, |G : Ū|".to_string(),
        ClosedFormCase::Exceptional(MaxCyclicType::QuaternionType) => "quaternion".into(),
        ClosedFormCase::Exceptional(MaxCyclicType::DihedralType) => "dihedral".into(),
        ClosedFormCase::Exceptional(MaxCyclicType::SemidihedralType) => "semidihedral".into(),
        ClosedFormCase::Exceptional(other) => format!("{other:?}"),
        ClosedFormCase::Generic => "generic, |G|/p".into(),
    };
    format!("({}) {detail}", case.label())
}

fn violation_text(v: &Violation) -> String {
    format!(
        "U-class {}, V-class {}, index {}, sum {}, residue {}",
        v.u_class, v.v_class, v.index, v.sum, v.residue
    )
}

pub fn catalog(specs: &[GroupSpec], json: bool) -> Result<u8> {
    if json {
        let rows: Vec<_> = specs
            .iter()
            .map(|s| json!({ "group": s.to_string(), "order": s.nominal_order() }))
            .collect();
        emit_json("catalog", "", rows);
    } else {
        out!("{:<14} {:>5}", "group", "order");
        for s in specs {
            out!("{:<14} {:>5}", s.to_string(), s.nominal_order().unwrap_or(0));
        }
    }
    Ok(0)
}

pub fn lattice(ctx: &Context, text: &str, json: bool) -> Result<u8> {
    let (spec, lattice) = ctx.lattice(text)?;
    if json {
        let rows: Vec<_> = lattice
            .classes()
            .iter()
            .map(|c| {
                json!({
                    "class": c.class_index,
                    "order": c.order,
                    "size": c.size(),
                    "normal": c.is_normal,
                    "cyclic": c.is_cyclic,
                    "elementary_abelian": c.is_elementary_abelian,
                })
            })
            .collect();
        emit_json("lattice", &spec.to_string(), rows);
        return Ok(0);
    }
    out!(
        "# {} order {}: {} subgroups in {} classes",
        spec,
        lattice.group().order(),
        lattice.all_subgroups().len(),
        lattice.num_classes()
    );
    out!(
        "{:>5} {:>5} {:>5} {:>6} {:>6} {:>8}",
        "class",
        "order",
        "size",
        "normal",
        "cyclic",
        "elem-ab"
    );
    for c in lattice.classes() {
        out!(
            "{:>5} {:>5} {:>5} {:>6} {:>6} {:>8}",
            c.class_index,
            c.order,
            c.size(),
            yes_no(c.is_normal),
            yes_no(c.is_cyclic),
            yes_no(c.is_elementary_abelian)
        );
    }
    Ok(0)
}

pub fn marks(ctx: &Context, text: &str, json: bool) -> Result<u8> {
    let (spec, lattice) = ctx.lattice(text)?;
    let ring = BurnsideRing::new(&lattice);
    let table = ring.marks();
    if json {
        let orders: Vec<_> = lattice.classes().iter().map(|c| c.order).collect();
        let rows: Vec<_> = table.rows().collect();
        emit_json(
            "marks",
            &spec.to_string(),
            json!({ "class_orders": orders, "rows": rows }),
        );
        return Ok(0);
    }
    let width = table
        .rows()
        .flatten()
        .map(|m| m.to_string().len())
        .max()
        .unwrap_or(1)
        .max(2);
    out!("# {} order {}, {} classes", spec, lattice.group().order(), table.size());
    let header: Vec<_> = lattice
        .classes()
        .iter()
        .map(|c| format!("{:>width$}", c.order))
        .collect();
    out!("# class orders: {}", header.join(" ").trim_start());
    for row in table.rows() {
        let cells: Vec<_> = row.iter().map(|m| format!("{m:>width$}")).collect();
        out!("{}", cells.join(" "));
    }
    Ok(0)
}

pub fn member(ctx: &Context, text: &str, vector: Vec<i64>, json: bool) -> Result<u8> {
    let (spec, lattice) = ctx.lattice(text)?;
    let ring = BurnsideRing::new(&lattice);
    let x = ring.ghost_vector(vector)?;
    let dress = ring.dress_membership(&x)?;
    let marks = ring.marks_membership(&x)?;
    let cfb = ring.cfb_check(&x)?;
    let coefficients: Vec<String> = marks.coefficients.iter().map(|c| c.to_string()).collect();
    let first = dress.violations.first();
    if json {
        emit_json(
            "member",
            &spec.to_string(),
            json!({
                "vector": x.values(),
                "dress_member": dress.holds,
                "marks_member": marks.integral,
                "coefficients": coefficients,
                "cfb": cfb,
                "first_violation": first,
                "violation_count": dress.violations.len(),
            }),
        );
        return Ok(0);
    }
    out!("group: {} (order {})", spec, lattice.group().order());
    out!(
        "dress congruences: {}",
        if dress.holds { "member" } else { "not a member" }
    );
    out!(
        "marks inversion:   {}",
        if marks.integral { "member" } else { "not a member" }
    );
    out!("coefficients: {}", coefficients.join(", "));
    out!("cauchy-frobenius-burnside: {}", if cfb { "holds" } else { "fails" });
    if let Some(v) = first {
        out!("first violation: {}", violation_text(v));
    }
    Ok(0)
}

pub fn exponent(ctx: &Context, text: &str, family: FamilySpec, certify: bool, json: bool) -> Result<u8> {
    let (spec, lattice) = ctx.lattice(text)?;
    let ring = BurnsideRing::new(&lattice);
    let result = artin_exponent(&ring, family);
    let group = lattice.group();
    let closed = if group.is_p_group() && family == FamilySpec::ElementaryAbelian {
        Some(closed_form_exponent(group)?)
    } else {
        None
    };
    let case = if group.is_p_group() {
        Some(closed_form_exponent(group)?.1)
    } else {
        None
    };
    if json {
        emit_json(
            "exponent",
            &spec.to_string(),
            json!({
                "family": family,
                "exponent": result.exponent,
                "dress_exponent": result.dress_exponent,
                "family_classes": result.family_classes,
                "case": case.map(|c| c.label()),
                "closed_form": closed.map(|c| c.0),
                "certificate": if certify { Some(&result.certificate) } else { None },
            }),
        );
        return Ok(0);
    }
    out!("group: {} (order {})", spec, group.order());
    out!(
        "family: {} ({} of {} classes)",
        family_name(family),
        result.family_classes.len(),
        lattice.num_classes()
    );
    out!("e = {}", result.exponent);
    match result.dress_exponent {
        Some(d) => out!("dress route: e = {d}"),
        None => out!("dress route: no divisor of |G| passes"),
    }
    if let Some(case) = case {
        out!("case: {}", case_text(case));
    }
    if let Some((value, _)) = closed {
        let verdict = if value == result.exponent {
            "agrees"
        } else {
            "DISAGREES"
        };
        out!("closed form: e = {value} ({verdict})");
    }
    if certify {
        for w in &result.certificate {
            out!("divisor {}: {}", w.divisor, violation_text(&w.violation));
        }
    }
    Ok(0)
}

pub fn verify(ctx: &Context, max_order: usize, json: bool) -> Result<u8> {
    let report = verify_main_theorem(max_order, ctx.caps.lattice)?;
    if json {
        emit_json("verify-main-theorem", "", &report.rows);
    } else {
        out!(
            "{:<14} {:>5} {:>6} {:>6} {:>7} {:>5} {:>6}",
            "group",
            "order",
            "brute",
            "dress",
            "closed",
            "case",
            "agree"
        );
        for r in &report.rows {
            let dress = r.dress.map_or("-".to_string(), |d| d.to_string());
            out!(
                "{:<14} {:>5} {:>6} {:>6} {:>7} {:>5} {:>6}",
                r.group,
                r.order,
                r.brute_force,
                dress,
                r.closed_form,
                r.case.label(),
                yes_no(r.agree)
            );
        }
        let bad = report.disagreements().count();
        out!("# {} groups, {} disagreements", report.rows.len(), bad);
    }
    Ok(if report.all_agree() { 0 } else { 3 })
}
