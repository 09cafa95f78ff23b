use super::{check_range, materialize_hall, materialize_reflexive, MATERIALIZE_MAX_DIM};
use crate::catalog::groups_of_order;
use crate::error::Result;
use crate::group::{power_semigroup, verify_hall_embedding, verify_hall_surjection};
use crate::semigroup::{check_homomorphism, is_block_group, is_j_trivial, j_classes};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub witnesses: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CampaignReport {
    pub n: usize,
    pub checks: Vec<CheckOutcome>,
}

impl CampaignReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Runs the five check groups for ground sets of size `n ≤ 3`, in order:
/// `R_n` is `J`-trivial; `H_n` is a block-group; on `H_n`, being a
/// block-group agrees with the idempotent-generated part being `J`-trivial;
/// `A ↦ ρ_A` embeds `P(G)` into `H_n` for every catalog group of order `n`;
/// `(ρ, π) ↦ ρπ` maps `R_n ⋊ S_n` onto `H_n`.
pub fn verification_campaign(n: usize) -> Result<CampaignReport> {
    check_range(n, MATERIALIZE_MAX_DIM, "campaign dimension")?;
    let reflexive = materialize_reflexive(n)?;
    let hall = materialize_hall(n)?;
    let mut checks = Vec::new();

    let classes = j_classes(&reflexive.semigroup)?;
    let bad: Vec<String> = classes
        .iter()
        .find(|c| c.len() > 1)
        .map(|c| c.iter().map(|&i| reflexive.relation(i).label()).collect())
        .unwrap_or_default();
    checks.push(CheckOutcome {
        name: "reflexive-j-trivial",
        passed: bad.is_empty(),
        detail: format!("|R_{n}| = {}, {} J-classes", reflexive.order(), classes.len()),
        witnesses: bad,
    });

    let bg = is_block_group(&hall.semigroup);
    checks.push(CheckOutcome {
        name: "hall-block-group",
        passed: bg.is_block_group,
        detail: format!(
            "|H_{n}| = {}, {} idempotents",
            hall.order(),
            hall.semigroup.idempotents().len()
        ),
        witnesses: bg
            .witness
            .iter()
            .flat_map(|&(e, f, _)| [hall.relation(e).label(), hall.relation(f).label()])
            .collect(),
    });

    let generated = hall.semigroup.idempotent_generated();
    let gen_trivial = is_j_trivial(&generated.semigroup)?;
    let non_reflexive: Vec<String> = generated
        .embedding
        .iter()
        .map(|&i| hall.relation(i))
        .filter(|r| !r.is_reflexive())
        .map(|r| r.label())
        .collect();
    checks.push(CheckOutcome {
        name: "idempotent-generated-equivalence",
        passed: gen_trivial == bg.is_block_group && non_reflexive.is_empty(),
        detail: format!(
            "idempotent-generated subsemigroup has {} elements, J-trivial = {gen_trivial}, block-group = {}",
            generated.semigroup.order(),
            bg.is_block_group
        ),
        witnesses: non_reflexive,
    });

    let mut embed_ok = true;
    let mut embed_detail = Vec::new();
    let mut embed_witnesses = Vec::new();
    for (name, group) in groups_of_order(n)? {
        let verdict = verify_hall_embedding(&group)?;
        let power = power_semigroup(group.semigroup())?;
        let map = (0..power.semigroup.order())
            .map(|i| {
                let rho = crate::group::hall_relation(&group, power.mask(i))?;
                Ok(hall.index_of(&rho).unwrap_or(usize::MAX))
            })
            .collect::<Result<Vec<_>>>()?;
        let into_hall = if map.contains(&usize::MAX) {
            false
        } else {
            let c = check_homomorphism(&map, &power.semigroup, &hall.semigroup)?;
            c.is_homomorphism && c.injective
        };
        let ok = verdict.passed() && into_hall;
        embed_ok &= ok;
        embed_detail.push(format!(
            "{name}: {} subsets, {} pairs, {}",
            verdict.subsets,
            verdict.pairs_checked,
            if ok { "ok" } else { "FAILED" }
        ));
        if let Some((a, b)) = verdict.injectivity_failure.or(verdict.homomorphism_failure) {
            embed_witnesses.push(format!("{name}: subsets {a:#b}, {b:#b}"));
        } else if !ok {
            embed_witnesses.push(format!("{name}: image not a subsemigroup of H_{n}"));
        }
    }
    checks.push(CheckOutcome {
        name: "hall-embedding",
        passed: embed_ok,
        detail: embed_detail.join("; "),
        witnesses: embed_witnesses,
    });

    let surj = verify_hall_surjection(n)?;
    let mut witnesses = Vec::new();
    if let Some((x, y)) = surj.check.violation {
        witnesses.push(format!("product of pair indices {x} and {y}"));
    }
    if let Some(sigma) = &surj.factorization_failure {
        witnesses.push(sigma.label());
    }
    checks.push(CheckOutcome {
        name: "hall-surjection",
        passed: surj.passed(),
        detail: format!(
            "{} pairs onto {} Hall relations, homomorphism = {}, surjective = {}, factorization round-trips = {}",
            surj.domain_order,
            surj.codomain_order,
            surj.check.is_homomorphism,
            surj.check.surjective,
            surj.factorization_round_trips
        ),
        witnesses,
    });

    Ok(CampaignReport { n, checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn campaign_small() {
        for n in 1..=2 {
            let report = verification_campaign(n).unwrap();
            assert_eq!(report.checks.len(), 5);
            assert!(report.passed(), "{report:?}");
        }
        assert!(verification_campaign(4).is_err());
    }
}
