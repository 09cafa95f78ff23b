//! One function per subcommand. Each returns a finished report or an input
//! error; timing and printing are left to the caller.

use std::path::Path;

use serde_json::{json, Value};

use hallkit::enumeration::{
    count_hall_inclusion_exclusion, count_hall_transfer, verification_campaign,
};
use hallkit::group::{
    power_semigroup, verify_hall_embedding, verify_hall_surjection, GroupSubset,
};
use hallkit::relation::{permanent_count, PERMANENT_MAX_DIM};
use hallkit::semigroup::{
    find_division, is_block_group, j_classes, l_classes, r_classes, DivisionBounds,
    IdempotentClash, J_CLASS_MAX_ORDER,
};
use hallkit::{FiniteSemigroup, Relation};

use crate::input::{parse_cayley_file, parse_relation_file, GroupSpec, InputError};
use crate::report::Report;

type Outcome = Result<Report, InputError>;

fn rows(r: &Relation) -> Value {
    json!(r.label().split('/').collect::<Vec<_>>())
}

fn label_list(s: &FiniteSemigroup, elems: &[usize]) -> Value {
    json!(elems.iter().map(|&i| s.label(i)).collect::<Vec<_>>())
}

fn classes(s: &FiniteSemigroup, cls: &[Vec<usize>]) -> Value {
    Value::Array(cls.iter().map(|c| label_list(s, c)).collect())
}

fn clash_name(c: IdempotentClash) -> &'static str {
    match c {
        IdempotentClash::SameLClass => "same L-class",
        IdempotentClash::SameRClass => "same R-class",
    }
}

/// Block-group verdict plus witness entries on `report`.
fn block_group_into(report: &mut Report, s: &FiniteSemigroup) -> bool {
    let bg = is_block_group(s);
    report.result("is_block_group", bg.is_block_group);
    match bg.witness {
        Some((e, f, clash)) => {
            report.result("block_group_clash", clash_name(clash));
            report.witness("e", s.label(e)).witness("f", s.label(f));
        }
        None => {
            report.result("block_group_clash", Value::Null);
        }
    }
    bg.is_block_group
}

pub fn check_hall(path: &Path) -> Outcome {
    let r = parse_relation_file(path)?;
    let mut report = Report::new("check-hall");
    report.input("file", path.display().to_string()).input("rows", rows(&r));
    let witness = r.hall_witness();
    report
        .result("dim", r.dim())
        .result("is_hall", witness.is_some())
        .result("witness", witness.as_ref().map(|p| json!(p.one_based())).unwrap_or(Value::Null));
    if r.dim() <= PERMANENT_MAX_DIM {
        report.result("permanent", permanent_count(&r)?);
    }
    if let Some(p) = &witness {
        report.witness("permutation", p.to_string());
    }
    report.conclude(witness.is_some(), "the relation contains no permutation");
    Ok(report)
}

pub fn compose(left: &Path, right: &Path) -> Outcome {
    let r = parse_relation_file(left)?;
    let s = parse_relation_file(right)?;
    let mut report = Report::new("compose");
    report
        .input("left", left.display().to_string())
        .input("right", right.display().to_string())
        .input("left_rows", rows(&r))
        .input("right_rows", rows(&s));
    let product = r.compose(&s)?;
    report
        .result("dim", product.dim())
        .result("rows", rows(&product))
        .result("is_hall", product.is_hall())
        .result("is_reflexive", product.is_reflexive())
        .result("is_idempotent", product.is_idempotent());
    Ok(report)
}

pub fn analyze(path: &Path) -> Outcome {
    let s = parse_cayley_file(path)?;
    let mut report = Report::new("analyze");
    report.input("file", path.display().to_string()).input("order", s.order());
    let r = r_classes(&s)?;
    let l = l_classes(&s)?;
    report
        .result("order", s.order())
        .result("identity", s.identity().map(|e| s.label(e).to_string()))
        .result("commutative", s.is_commutative())
        .result("idempotents", label_list(&s, &s.idempotents()))
        .result("r_classes", classes(&s, &r))
        .result("l_classes", classes(&s, &l));
    if s.order() <= J_CLASS_MAX_ORDER {
        let j = j_classes(&s)?;
        report
            .result("is_j_trivial", j.iter().all(|c| c.len() == 1))
            .result("j_classes", classes(&s, &j));
    } else {
        report
            .result("is_j_trivial", Value::Null)
            .result("j_classes", Value::Null)
            .result("j_skipped", format!("order above {J_CLASS_MAX_ORDER}"));
    }
    block_group_into(&mut report, &s);
    report.conclude(true, "");
    Ok(report)
}

pub fn power_group(spec: &GroupSpec) -> Outcome {
    let g = spec.build()?;
    let p = power_semigroup(g.semigroup())?;
    let mut report = Report::new("power-group");
    report.input("group", spec.to_string());
    report
        .result("group_order", g.order())
        .result("power_order", p.semigroup.order())
        .result("idempotents", p.semigroup.idempotents().len());
    let generated = p.semigroup.idempotent_generated();
    report.result("idempotent_generated_order", generated.semigroup.order());
    if generated.semigroup.order() <= J_CLASS_MAX_ORDER {
        let j = j_classes(&generated.semigroup)?;
        report.result("idempotent_generated_j_trivial", j.iter().all(|c| c.len() == 1));
    } else {
        report.result("idempotent_generated_j_trivial", Value::Null);
    }
    let ok = block_group_into(&mut report, &p.semigroup);
    report.conclude(ok, "power semigroup is not a block-group");
    Ok(report)
}

fn subset_label(mask: u64) -> String {
    let elems: Vec<String> = (0..64)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| (i + 1).to_string())
        .collect();
    format!("{{{}}}", elems.join(","))
}

pub fn embed(spec: &GroupSpec, subset: Option<&[usize]>) -> Outcome {
    let g = spec.build()?;
    let v = verify_hall_embedding(&g)?;
    let mut report = Report::new("embed");
    report.input("group", spec.to_string());
    if let Some(elems) = subset {
        report.input("subset", json!(elems));
        let zero_based = elems
            .iter()
            .map(|&i| i.checked_sub(1).ok_or_else(|| InputError("subset indices are 1-based".into())))
            .collect::<Result<Vec<_>, _>>()?;
        let a = GroupSubset::from_elements(&g, &zero_based)?;
        report
            .result("subset_relation", rows(&a.hall_relation()))
            .result("subset_witness", json!(a.translation_witness().one_based()));
    }
    report
        .result("group_order", v.group_order)
        .result("subsets", v.subsets)
        .result("pairs_checked", v.pairs_checked)
        .result("all_hall", v.all_hall)
        .result("injective", v.injective)
        .result("homomorphism", v.homomorphism);
    if let Some((a, b)) = v.injectivity_failure {
        report.witness("same image", format!("{} {}", subset_label(a), subset_label(b)));
    }
    if let Some((a, b)) = v.homomorphism_failure {
        report.witness("product mismatch", format!("{} {}", subset_label(a), subset_label(b)));
    }
    report.conclude(v.passed(), "some subset relation is not Hall");
    Ok(report)
}

pub fn semidirect(n: usize) -> Outcome {
    let v = verify_hall_surjection(n)?;
    let mut report = Report::new("semidirect");
    report.input("n", n);
    report
        .result("domain_order", v.domain_order)
        .result("codomain_order", v.codomain_order)
        .result("homomorphism", v.check.is_homomorphism)
        .result("surjective", v.check.surjective)
        .result("factorization_round_trips", v.factorization_round_trips);
    if let Some((x, y)) = v.check.violation {
        report.witness("pair indices", format!("{} {}", x + 1, y + 1));
    }
    if let Some(sigma) = &v.factorization_failure {
        report.witness("factorization", sigma.label());
    }
    report.conclude(v.passed(), "projection is not onto the Hall relations");
    Ok(report)
}

pub fn count_hall(n: usize, workers: usize, check_oracle: bool) -> Outcome {
    let e = hallkit::enumeration::count_hall(n, workers)?;
    let mut report = Report::new("count-hall");
    report.input("n", n).input("workers", workers).input("check_oracle", check_oracle);
    let c = e.counts;
    report
        .result("total_hall", c.total_hall)
        .result("total_reflexive", c.total_reflexive)
        .result("idempotent_hall", c.idempotent_hall)
        .result("idempotents_all_reflexive", e.idempotents_all_reflexive());
    let mut ok = e.idempotents_all_reflexive();
    if let Some(code) = c.non_reflexive_idempotent {
        report.witness("non-reflexive idempotent", Relation::from_code(n, code)?.label());
    }
    if check_oracle {
        let ie = count_hall_inclusion_exclusion(n)?;
        let transfer = count_hall_transfer(n)?;
        report
            .result("oracle_inclusion_exclusion", ie)
            .result("oracle_transfer", transfer);
        if ie != c.total_hall || transfer != c.total_hall {
            ok = false;
            report.witness(
                "count disagreement",
                format!("stream {} vs {ie} and {transfer}", c.total_hall),
            );
        }
    }
    report.conclude(ok, "");
    Ok(report)
}

pub fn campaign(n: usize) -> Outcome {
    let c = verification_campaign(n)?;
    let mut report = Report::new("campaign");
    report.input("n", n);
    let checks: Vec<Value> = c
        .checks
        .iter()
        .map(|k| json!({ "name": k.name, "passed": k.passed, "detail": k.detail }))
        .collect();
    report.result("checks", checks);
    for k in &c.checks {
        for w in &k.witnesses {
            report.witness(k.name, w.clone());
        }
        if !k.passed && k.witnesses.is_empty() {
            report.witness(k.name, k.detail.clone());
        }
    }
    report.conclude(c.passed(), "");
    Ok(report)
}

pub fn divide(quotient: &Path, target: &Path, max_generators: usize) -> Outcome {
    let s = parse_cayley_file(quotient)?;
    let t = parse_cayley_file(target)?;
    let mut report = Report::new("divide");
    report
        .input("quotient", quotient.display().to_string())
        .input("target", target.display().to_string())
        .input("max_generators", max_generators);
    let search = find_division(&s, &t, DivisionBounds { max_generators })?;
    report
        .result("found", search.witness.is_some())
        .result("subsemigroups_examined", search.subsemigroups_examined);
    match &search.witness {
        Some(w) => {
            report
                .result("generators", label_list(&t, &w.generators))
                .result("subsemigroup", label_list(&t, &w.subsemigroup));
            for (&u, &x) in w.subsemigroup.iter().zip(&w.map) {
                report.witness(format!("maps {}", t.label(u)), s.label(x));
            }
            report.conclude(true, "");
        }
        None => report.conclude(
            false,
            &format!(
                "no division found within bounds (at most {max_generators} generators); \
                 this does not rule out division"
            ),
        ),
    }
    Ok(report)
}
