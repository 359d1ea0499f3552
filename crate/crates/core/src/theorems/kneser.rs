//! Small doubling `|A⁻¹A|, |AA⁻¹| < 2|A|` and the Vosper-subset property.

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Side};
use crate::set::ElementSet;

use super::{GroupContext, TheoremId, VerdictRecord, Witness};

/// `a⁻¹Ha`.
fn conj_by_inverse(g: &FiniteGroup, h: ElementSet, a: usize) -> ElementSet {
    g.translate(g.translate(h, g.inv(a), Side::Left), a, Side::Right)
}

/// `aHa⁻¹`.
fn conj(g: &FiniteGroup, h: ElementSet, a: usize) -> ElementSet {
    g.conjugate(h, a)
}

/// Checks the four-clause description of sets with `|A⁻¹A|, |AA⁻¹| < 2|A|`.
///
/// `G` is the subgroup generated by `A⁻¹A`. Clauses (iii) and (iv) range over
/// subgroups `H ≤ G` with `|H| ≥ 2` in ascending order, then `a ∈ A` ascending.
/// `H = G` is admitted; the witness flags it, and the observations
/// `(iii)proper` / `(iv)proper` say whether a proper subgroup also works.
pub fn verify_main_theorem(ctx: &GroupContext, a: ElementSet) -> Result<VerdictRecord> {
    let g = ctx.group();
    g.check(a)?;
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    let rec = VerdictRecord::start(TheoremId::Kneser, ctx, a);
    let inv = g.set_inverse(a);
    let left = g.set_product(inv, a);
    let right = g.set_product(a, inv);
    if left.len() >= 2 * a.len() || right.len() >= 2 * a.len() {
        return Ok(rec.not_met());
    }
    let mut rec = rec;
    let big = g.generated_subgroup(left).elements();

    let involution = big.iter().find(|&u| {
        g.mul(u, u) == g.identity() && (right == big.without(u) || left == big.without(u))
    });
    let progression = g.is_progression(a);

    let mut third: Option<(ElementSet, usize)> = None;
    let mut fourth: Option<(ElementSet, usize)> = None;
    let (mut third_proper, mut fourth_proper) = (false, false);
    for h in ctx.subgroups() {
        let h = h.elements();
        if h.len() < 2 || !h.is_subset(big) {
            continue;
        }
        let sandwich = g.product_of(&[inv, h, a]);
        if let Some(x) = a.iter().find(|&x| sandwich == left | conj_by_inverse(g, h, x)) {
            third.get_or_insert((h, x));
            third_proper |= h != big;
        }
        let sandwich = g.product_of(&[a, h, inv]);
        if let Some(x) = a.iter().find(|&x| sandwich == right | conj(g, h, x)) {
            fourth.get_or_insert((h, x));
            fourth_proper |= h != big;
        }
    }

    rec.clause("(i)", involution.is_some());
    rec.clause("(ii)", progression.is_some());
    rec.clause("(iii)", third.is_some());
    rec.clause("(iv)", fourth.is_some());
    rec.observe("(iii)proper", third_proper);
    rec.observe("(iv)proper", fourth_proper);

    let witness = if let Some(u) = involution {
        Some(Witness {
            element: Some(u),
            subgroup: Some(big),
            ..Witness::new("(i)")
        })
    } else if let Some(p) = progression {
        Some(Witness {
            progression: Some(p),
            ..Witness::new("(ii)")
        })
    } else {
        third
            .map(|t| ("(iii)", t))
            .or(fourth.map(|t| ("(iv)", t)))
            .map(|(clause, (h, x))| Witness {
                subgroup: Some(h),
                element: Some(x),
                whole_group: h == big,
                ..Witness::new(clause)
            })
    };
    Ok(rec.decide(witness))
}

/// Some `A` with `|A| ≥ 2` and `|A ∪ AS| < min(|G| - 1, |A| + |S|)`, least in set order.
///
/// The condition is invariant under `A ↦ gA`, so only orbit representatives are tried.
pub fn vosper_counterexample(g: &FiniteGroup, s: ElementSet, max_order: usize) -> Result<Option<ElementSet>> {
    g.check(s)?;
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    let n = g.order();
    if n > max_order {
        return Err(Error::BudgetExceeded {
            what: "Vosper subset scan group order",
            limit: max_order,
            actual: n,
        });
    }
    let mut best: Option<ElementSet> = None;
    for bits in 1u64..1 << n {
        let a = ElementSet::from_bits(bits);
        if a.len() < 2 || !g.is_left_orbit_canonical(a) {
            continue;
        }
        let grown = (a | g.set_product(a, s)).len();
        if grown < (n - 1).min(a.len() + s.len()) && best.is_none_or(|b| a < b) {
            best = Some(a);
        }
    }
    Ok(best)
}

/// `|A ∪ AS| ≥ min(|G| - 1, |A| + |S|)` for every `A` with `|A| ≥ 2`.
pub fn check_vosper_subset(g: &FiniteGroup, s: ElementSet, max_order: usize) -> Result<bool> {
    vosper_counterexample(g, s, max_order).map(|c| c.is_none())
}
