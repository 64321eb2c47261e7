//! Checkers for the classification statements on concrete groups, plus the
//! number-theoretic scans they rest on.

use serde::{Deserialize, Serialize};

use crate::analysis::Analysis;
use crate::catalog::{build_with, parse_spec};
use crate::codes::is_perfect_code;
use crate::error::{GroupError, Result};
use crate::group::GroupTable;
use crate::lattice::{sylow, SubgroupLattice};
use crate::limits::Limits;
use crate::numtheory::{factorize, is_power_of_two, is_prime, lemma_scan, odd_part, p_part};
use crate::shape::{bounded_isomorphic, recognize_subgroup_shape, IsoVerdict, ShapeTag};
use crate::subgroup::Subgroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    NotApplicable,
}

/// A counterexample: the group, optionally an offending subgroup, and the
/// offending value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub group: String,
    pub subgroup: Option<Vec<u32>>,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check_name: String,
    pub status: CheckStatus,
    pub witness: Option<Witness>,
    pub details: String,
}

impl CheckResult {
    pub fn pass(name: &str, details: impl Into<String>) -> Self {
        Self {
            check_name: name.into(),
            status: CheckStatus::Pass,
            witness: None,
            details: details.into(),
        }
    }

    pub fn fail(name: &str, witness: Witness, details: impl Into<String>) -> Self {
        Self {
            check_name: name.into(),
            status: CheckStatus::Fail,
            witness: Some(witness),
            details: details.into(),
        }
    }

    pub fn not_applicable(name: &str, details: impl Into<String>) -> Self {
        Self {
            check_name: name.into(),
            status: CheckStatus::NotApplicable,
            witness: None,
            details: details.into(),
        }
    }

    fn verdict(name: &str, ok: bool, a: &Analysis, value: String, details: String) -> Self {
        if ok {
            Self::pass(name, details)
        } else {
            Self::fail(name, witness(a, None, value), details)
        }
    }

    pub fn passed(&self) -> bool {
        self.status != CheckStatus::Fail
    }
}

fn witness(a: &Analysis, h: Option<&Subgroup>, value: String) -> Witness {
    Witness {
        group: a.spec(),
        subgroup: h.map(|h| h.members().iter().map(|x| x.0).collect()),
        value,
    }
}

/// Cyclic 2-groups (order at least 2) and generalized quaternion groups.
pub fn in_empty_delta_family(a: &Analysis) -> bool {
    match a.shape {
        ShapeTag::Cyclic { order } => order >= 2 && is_power_of_two(order as u64),
        ShapeTag::GeneralizedQuaternion { .. } => true,
        _ => false,
    }
}

fn is_two_group(a: &Analysis) -> bool {
    a.order() > 1 && is_power_of_two(a.order() as u64)
}

/// Composite order: `Δ` is empty iff the group is a cyclic 2-group or a
/// generalized quaternion group iff it is a 2-group with one involution.
pub fn check_empty_delta(a: &Analysis) -> CheckResult {
    const NAME: &str = "empty_delta";
    let n = a.order() as u64;
    if n == 1 || is_prime(n) {
        return CheckResult::not_applicable(NAME, format!("order {n} is not composite; Δ has {} classes", a.delta_count()));
    }
    let empty = a.delta_count() == 0;
    let family = in_empty_delta_family(a);
    let unique_involution = is_two_group(a) && a.group.involutions().len() == 1;
    let details = format!("Δ empty: {empty}, cyclic 2-group or quaternion: {family}, 2-group with one involution: {unique_involution}");
    CheckResult::verdict(NAME, empty == family && family == unique_involution, a, format!("|Δ| = {}", a.delta_count()), details)
}

/// Groups exempt from `|Δ| >= |π|`: `Z_p`, `Z_{2^m}` and `Q_{2^(m+1)}` with `m >= 2`.
pub fn is_main_theorem_exception(a: &Analysis) -> bool {
    match a.shape {
        ShapeTag::Cyclic { order } => is_prime(order as u64) || (order >= 4 && is_power_of_two(order as u64)),
        ShapeTag::GeneralizedQuaternion { .. } => true,
        _ => false,
    }
}

/// The row of the equality table the group matches, if any. Semidirect rows
/// admit the trivial action.
pub fn equality_table_row(a: &Analysis) -> Option<&'static str> {
    let g = &a.group;
    let n = a.order() as u64;
    let normal_sylow = |p: u64| sylow(g, p).is_normal_in(g);
    match factorize(n).as_slice() {
        [(p, 2)] if *p != 2 && a.shape.is_cyclic() => return Some("Z_{p^2}"),
        [(p, 1), (q, 1)] if *p != 2 && normal_sylow(*q) => return Some("Z_q:Z_p"),
        _ => {}
    }
    let odd = odd_part(n);
    let two = p_part(n, 2);
    if two >= 2 && is_prime(odd) && normal_sylow(odd) {
        if a.sylow2_shape.is_quaternion() {
            return Some("Z_p:Q_{2^n}");
        }
        if a.sylow2_shape.is_cyclic() {
            return Some("Z_p:Z_{2^n}");
        }
    }
    if n == 24 && a.sylow2_shape == (ShapeTag::GeneralizedQuaternion { order: 8 }) && a.sylow2.is_normal_in(g) {
        return Some("Q_8:Z_3");
    }
    if n == 48 && a.sylow2_shape == (ShapeTag::GeneralizedQuaternion { order: 16 }) {
        let sl23 = build_with(&parse_spec("sl2:3").unwrap(), &a.limits).ok()?;
        let has_sl23 = a.lattice.normal_subgroups().iter().any(|h| {
            h.order() == 24 && bounded_isomorphic(&g.subgroup_table(h).0, &sl23) == IsoVerdict::Isomorphic
        });
        if has_sl23 {
            return Some("SL(2,3).Z_2");
        }
    }
    None
}

/// `|Δ| >= |π|` outside the exceptions, and equality exactly on the rows of
/// the equality table.
pub fn check_main_theorem(a: &Analysis) -> CheckResult {
    const NAME: &str = "main_theorem";
    let (d, pi) = (a.delta_count(), a.pi_count());
    let exception = is_main_theorem_exception(a);
    let row = equality_table_row(a);
    let equality = d == pi && pi >= 1;
    let inequality = d >= pi || exception;
    let details = format!(
        "|Δ| = {d}, |π| = {pi}{}{}",
        if exception { ", exceptional shape" } else { "" },
        row.map(|r| format!(", row {r}")).unwrap_or_default()
    );
    let ok = inequality && equality == row.is_some();
    CheckResult::verdict(NAME, ok, a, format!("|Δ| = {d}, |π| = {pi}, row {row:?}"), details)
}

/// Quotients `G/O_2(G)` allowed in the non-solvable case of `|Δ| = |π| + 1`.
pub fn pi_plus_one_quotients() -> Vec<String> {
    let mut out: Vec<String> = ["psl2:5", "pgl2:5", "pgl2:7", "pgl2:9", "psl2:17", "pgl2:17"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    for p in [3u64, 5, 17, 257, 65537] {
        let f = factorize((p + 1) / 2);
        if (p + 1) % 2 == 0 && f.len() == 2 && f.iter().all(|&(q, e)| e == 1 && q < p && q > 2) {
            out.push(format!("psl2:{p}"));
            out.push(format!("pgl2:{p}"));
        }
    }
    out
}

/// Structure forced by `|Δ| = |π| + 1`.
pub fn check_pi_plus_one(a: &Analysis) -> CheckResult {
    const NAME: &str = "pi_plus_one";
    let (d, pi) = (a.delta_count(), a.pi_count());
    if d != pi + 1 {
        return CheckResult::not_applicable(NAME, format!("|Δ| = {d}, |π| = {pi}"));
    }
    let g = &a.group;
    if a.solvable {
        let n = a.order() as u64;
        let f = factorize(n);
        // (i) Z_{p^3}
        if let [(p, 3)] = f.as_slice() {
            if *p != 2 && a.shape.is_cyclic() {
                return CheckResult::pass(NAME, format!("cyclic of order {p}^3"));
            }
        }
        let cc = g.conjugacy_classes();
        // (ii) 2-group, cyclic center, two involution classes
        if is_two_group(a) {
            let ok = g.center().is_cyclic(g) && cc.involution_class_count == 2;
            return CheckResult::verdict(
                NAME,
                ok,
                a,
                format!("involution classes {}", cc.involution_class_count),
                format!("2-group, center cyclic: {}, involution classes: {}", g.center().is_cyclic(g), cc.involution_class_count),
            );
        }
        // (iii) |G| = 2^n p^a with G/O_2 = Z_p^a : (P/O_2) and one involution class
        if let [(2, _), (p, e)] = f.as_slice() {
            if *e <= 2 {
                let q = match g.quotient(&a.o2) {
                    Ok(q) => q.group,
                    Err(e) => return CheckResult::fail(NAME, witness(a, Some(&a.o2), e.to_string()), "O_2 not normal"),
                };
                let sp = sylow(&q, *p);
                let elementary = sp.is_abelian(&q) && sp.members()[1..].iter().all(|&x| q.element_order(x) as u64 == *p);
                let normal = sp.is_normal_in(&q);
                let single = cc.involution_class_count == 1;
                let sylow_ok = *e == 1 || a.sylow2_shape.is_cyclic_or_quaternion();
                let details = format!(
                    "|G| = 2^n {p}^{e}, |G/O_2| = {}, normal elementary Sylow-{p} in G/O_2: {}, involution classes: {}, Sylow-2 {}",
                    q.order(),
                    normal && elementary,
                    cc.involution_class_count,
                    a.sylow2_shape
                );
                return CheckResult::verdict(NAME, normal && elementary && single && sylow_ok, a, details.clone(), details);
            }
        }
        return CheckResult::fail(NAME, witness(a, None, format!("order {n}")), "solvable but matches no listed shape");
    }
    let quaternion = a.sylow2_shape.is_quaternion();
    let o2_ok = a.o2.order() > 1 && a.o2.is_cyclic(g);
    let quotient = match g.quotient(&a.o2) {
        Ok(q) => q.group,
        Err(e) => return CheckResult::fail(NAME, witness(a, Some(&a.o2), e.to_string()), "O_2 not normal"),
    };
    let mut matched = None;
    for spec in pi_plus_one_quotients() {
        let parsed = parse_spec(&spec).unwrap();
        if parsed.expected_order() != Some(quotient.order() as u64) {
            continue;
        }
        if let Ok(candidate) = build_with(&parsed, &a.limits) {
            let verdict = bounded_isomorphic(&quotient, &candidate);
            if verdict.plausible() {
                matched = Some((spec, verdict));
                break;
            }
        }
    }
    let details = format!(
        "Sylow-2 {}, O_2 order {} cyclic {}, G/O_2 order {} matches {}",
        a.sylow2_shape,
        a.o2.order(),
        a.o2.is_cyclic(g),
        quotient.order(),
        match &matched {
            Some((s, IsoVerdict::FingerprintMatch)) => format!("{s} (fingerprint confidence)"),
            Some((s, _)) => s.clone(),
            None => "nothing".into(),
        }
    );
    CheckResult::verdict(NAME, quaternion && o2_ok && matched.is_some(), a, details.clone(), details)
}

/// Solvable groups: `|Δ| >= 2^|π| - 2`, with equality iff the odd part is
/// squarefree and the Sylow 2-subgroup is cyclic or generalized quaternion.
pub fn check_solvable_bound(a: &Analysis) -> CheckResult {
    const NAME: &str = "solvable_bound";
    if !a.solvable {
        return CheckResult::not_applicable(NAME, "not solvable");
    }
    if a.order() == 1 {
        return CheckResult::not_applicable(NAME, "trivial group");
    }
    let d = a.delta_count() as i64;
    let bound = (1i64 << a.pi_count()) - 2;
    let predicted = a.signature.odd_part_squarefree && a.sylow2_shape.is_cyclic_or_quaternion();
    let ok = d >= bound && (d == bound) == predicted;
    let details = format!(
        "|Δ| = {d}, bound {bound}, odd part {} squarefree {}, Sylow-2 {}",
        a.signature.odd_part, a.signature.odd_part_squarefree, a.sylow2_shape
    );
    CheckResult::verdict(NAME, ok, a, format!("|Δ| = {d}, bound {bound}, equality predicted {predicted}"), details)
}

/// Socle orders allowed for `G/O_2(G)` when `G` is non-solvable with `|Δ| <= 6`.
pub fn small_delta_socle_order_allowed(order: u64) -> bool {
    if [60, 168, 360, 2448, 29120].contains(&order) {
        return true;
    }
    // PSL(2,p) with p odd, p not in {5, 7, 17}, (p^2 - 1)_{2'} = p2 p3.
    let mut p = 3u64;
    while p * (p * p - 1) / 2 <= order {
        if p * (p * p - 1) / 2 == order && is_prime(p) && ![5, 7, 17].contains(&p) {
            let f = factorize(odd_part(p * p - 1));
            if f.len() == 2 && f.iter().all(|&(_, e)| e == 1) {
                return true;
            }
        }
        p += 2;
    }
    false
}

/// Small `Δ` forces solvability and few primes; non-solvable groups with
/// five primes have `|Δ| >= 7`; non-solvable groups with `|Δ| <= 6` have a
/// restricted socle above `O_2`.
pub fn check_small_delta(a: &Analysis) -> CheckResult {
    const NAME: &str = "small_delta";
    let (d, pi) = (a.delta_count(), a.pi_count());
    if d <= 3 && !(a.solvable && pi <= 2) {
        return CheckResult::fail(NAME, witness(a, None, format!("|Δ| = {d}, |π| = {pi}, solvable {}", a.solvable)), "|Δ| <= 3 but not solvable with |π| <= 2");
    }
    if !a.solvable && pi == 5 && d < 7 {
        return CheckResult::fail(NAME, witness(a, None, format!("|Δ| = {d}")), "non-solvable with five primes and |Δ| < 7");
    }
    if !a.solvable && d <= 6 {
        let socle_order = a
            .group
            .quotient(&a.o2)
            .and_then(|q| Ok(SubgroupLattice::compute(&q.group, &a.limits)?.socle(&q.group).order()));
        return match socle_order {
            Ok(s) if small_delta_socle_order_allowed(s as u64) => {
                CheckResult::pass(NAME, format!("|Δ| = {d}, socle of G/O_2 has order {s}"))
            }
            Ok(s) => CheckResult::fail(NAME, witness(a, None, format!("socle order {s}")), "socle of G/O_2 not in the allowed list"),
            Err(e) => CheckResult::fail(NAME, witness(a, None, e.to_string()), "socle of G/O_2 not computable"),
        };
    }
    CheckResult::pass(NAME, format!("|Δ| = {d}, |π| = {pi}, solvable {}", a.solvable))
}

/// Sylow 2-subgroup cyclic or generalized quaternion: codes are exactly the
/// subgroups of odd order or odd index.
pub fn check_odd_order_or_index(a: &Analysis) -> CheckResult {
    const NAME: &str = "odd_order_or_index";
    if !a.sylow2_shape.is_cyclic_or_quaternion() {
        return CheckResult::not_applicable(NAME, format!("Sylow-2 {}", a.sylow2_shape));
    }
    let n = a.order();
    for (ci, c) in a.lattice.classes().iter().enumerate() {
        let h = &a.lattice.subgroups()[c.representative];
        if h.order() == 1 || h.order() == n {
            continue;
        }
        let odd = h.order() % 2 == 1 || (n / h.order()) % 2 == 1;
        if odd != a.class_is_code(ci) {
            return CheckResult::fail(NAME, witness(a, Some(h), format!("odd {odd}, code {}", !odd)), "code status differs from odd order/index");
        }
    }
    CheckResult::pass(NAME, "codes are exactly the odd-order or odd-index subgroups")
}

/// Even order, outside the empty-Δ family: some nontrivial proper code is a
/// cyclic or generalized quaternion 2-group.
pub fn check_even_order_code(a: &Analysis) -> CheckResult {
    const NAME: &str = "even_order_code";
    if a.order() % 2 == 1 {
        return CheckResult::not_applicable(NAME, "odd order");
    }
    if is_two_group(a) && a.group.involutions().len() == 1 {
        return CheckResult::not_applicable(NAME, "2-group with a unique involution has no proper nontrivial code");
    }
    let found = a.delta.classes.iter().find(|c| {
        let h = a.lattice.representative(c.class);
        is_power_of_two(h.order() as u64) && recognize_subgroup_shape(&a.group, h).is_cyclic_or_quaternion()
    });
    match found {
        Some(c) => CheckResult::pass(NAME, format!("class of order {} is a cyclic or quaternion code", c.order)),
        None => CheckResult::fail(NAME, witness(a, None, "none".into()), "no cyclic or quaternion 2-subgroup is a code"),
    }
}

/// 2-groups with several involutions: every involution lies in some
/// nontrivial proper code.
pub fn check_involution_cover(a: &Analysis) -> CheckResult {
    const NAME: &str = "involution_cover";
    let involutions = a.group.involutions();
    if !is_two_group(a) || involutions.len() <= 1 {
        return CheckResult::not_applicable(NAME, "not a 2-group with several involutions");
    }
    let mut covered = fixedbitset::FixedBitSet::with_capacity(a.order());
    for c in &a.delta.classes {
        for &m in &a.lattice.classes()[c.class].members {
            covered.union_with(a.lattice.subgroups()[m].bits());
        }
    }
    match involutions.iter().find(|x| !covered.contains(x.index())) {
        None => CheckResult::pass(NAME, format!("{} involutions covered", involutions.len())),
        Some(x) => CheckResult::fail(NAME, witness(a, None, format!("involution {x}")), "involution outside every code"),
    }
}

/// Solvable groups have Hall subgroups for every prime set, all conjugate.
pub fn check_hall_subgroups(a: &Analysis) -> CheckResult {
    const NAME: &str = "hall_subgroups";
    if !a.solvable {
        return CheckResult::not_applicable(NAME, "not solvable");
    }
    let primes = &a.signature.primes;
    for mask in 0u32..(1 << primes.len()) {
        let set: Vec<u64> = primes.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect();
        let h = match a.lattice.hall_subgroup(&set) {
            Ok(h) => h,
            Err(e) => return CheckResult::fail(NAME, witness(a, None, format!("{set:?}")), e.to_string()),
        };
        let classes: std::collections::BTreeSet<usize> = a
            .lattice
            .subgroups()
            .iter()
            .enumerate()
            .filter(|(_, k)| k.order() == h.order())
            .map(|(i, _)| a.lattice.class_of(i))
            .collect();
        if classes.len() != 1 {
            return CheckResult::fail(NAME, witness(a, Some(h), format!("{} classes for {set:?}", classes.len())), "Hall subgroups not conjugate");
        }
    }
    CheckResult::pass(NAME, format!("{} prime sets", 1 << primes.len()))
}

/// Sylow subgroups for each prime form one class, and are codes.
pub fn check_sylow_subgroups(a: &Analysis) -> CheckResult {
    const NAME: &str = "sylow_subgroups";
    let g = &a.group;
    for &p in &a.signature.primes {
        let s = sylow(g, p);
        let classes: std::collections::BTreeSet<usize> = a
            .lattice
            .subgroups()
            .iter()
            .enumerate()
            .filter(|(_, k)| k.order() == s.order())
            .map(|(i, _)| a.lattice.class_of(i))
            .collect();
        if classes.len() != 1 {
            return CheckResult::fail(NAME, witness(a, Some(&s), format!("p = {p}")), "Sylow subgroups not conjugate");
        }
        if !is_perfect_code(g, &s) {
            return CheckResult::fail(NAME, witness(a, Some(&s), format!("p = {p}")), "Sylow subgroup is not a code");
        }
    }
    CheckResult::pass(NAME, "one class per prime, all codes")
}

/// All per-group checks in a fixed order. Nothing applies to the trivial group.
pub fn run_group_checks(a: &Analysis) -> Vec<CheckResult> {
    let checks = vec![
        check_empty_delta(a),
        check_main_theorem(a),
        check_pi_plus_one(a),
        check_solvable_bound(a),
        check_small_delta(a),
        check_odd_order_or_index(a),
        check_even_order_code(a),
        check_involution_cover(a),
        check_hall_subgroups(a),
        check_sylow_subgroups(a),
    ];
    if a.order() == 1 {
        return checks
            .into_iter()
            .map(|c| CheckResult::not_applicable(&c.check_name, "trivial group"))
            .collect();
    }
    checks
}

/// In `Q_{2^n}`, `3 <= n <= n_max`, every nontrivial normal subgroup with a
/// noncyclic quotient is cyclic.
pub fn check_observation_quaternion(n_max: u32, limits: &Limits) -> Result<CheckResult> {
    const NAME: &str = "quaternion_normal_subgroups";
    if n_max < 3 {
        return Err(GroupError::InvalidRange(format!("n_max must be at least 3, got {n_max}")));
    }
    let mut examined = 0;
    for n in 3..=n_max {
        let spec = format!("quaternion:{}", 1u64 << n);
        let g = build_with(&parse_spec(&spec)?, limits)?;
        let lattice = SubgroupLattice::compute(&g, limits)?;
        for k in lattice.normal_subgroups() {
            if k.is_trivial() {
                continue;
            }
            let q = g.quotient(k)?.group;
            if is_cyclic_group(&q) {
                continue;
            }
            examined += 1;
            if !k.is_cyclic(&g) {
                return Ok(CheckResult::fail(
                    NAME,
                    Witness {
                        group: spec,
                        subgroup: Some(k.members().iter().map(|x| x.0).collect()),
                        value: format!("noncyclic normal subgroup of order {}", k.order()),
                    },
                    "normal subgroup with noncyclic quotient is not cyclic",
                ));
            }
        }
    }
    Ok(CheckResult::pass(NAME, format!("{examined} normal subgroups with noncyclic quotient, all cyclic")))
}

fn is_cyclic_group(g: &GroupTable) -> bool {
    g.element_orders().iter().any(|&o| o as usize == g.order())
}

/// The three number-theoretic scans, each compared with its known solution
/// set restricted to the scanned range.
pub fn lemma_scans(m_max: u32, p_max: u64) -> Result<Vec<CheckResult>> {
    if m_max < 2 || p_max < 5 {
        return Err(GroupError::InvalidRange(format!("need m_max >= 2 and p_max >= 5, got {m_max}, {p_max}")));
    }
    let s = lemma_scan(m_max, p_max);
    let scan_witness = |value: String| Witness {
        group: format!("scan(m_max={m_max}, p_max={p_max})"),
        subgroup: None,
        value,
    };
    let result = |name: &str, ok: bool, value: String| {
        if ok {
            CheckResult::pass(name, value)
        } else {
            CheckResult::fail(name, scan_witness(value.clone()), "unexpected solutions")
        }
    };
    let mersenne: Vec<u64> = [7].into_iter().filter(|&p| p <= p_max).collect();
    let fermat: Vec<u64> = [5, 17].into_iter().filter(|&p| p <= p_max).collect();
    Ok(vec![
        result("fermat_prime_pairs", s.fermat_pairs == [2], format!("m in {:?}", s.fermat_pairs)),
        result(
            "square_neighbours_not_two_powers",
            s.square_neighbours.is_empty(),
            format!("counterexamples {:?}", s.square_neighbours),
        ),
        result(
            "two_power_neighbours",
            s.mersenne_side == mersenne && s.fermat_side == fermat,
            format!("p+1 side {:?}, p-1 side {:?}", s.mersenne_side, s.fermat_side),
        ),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::build;
    use crate::codes::DeltaOptions;

    fn analyze(spec: &str) -> Analysis {
        Analysis::new(build(spec).unwrap(), &Limits::default(), DeltaOptions::default()).unwrap()
    }

    fn status(c: &CheckResult) -> CheckStatus {
        c.status
    }

    #[test]
    fn empty_delta_examples() {
        assert_eq!(status(&check_empty_delta(&analyze("cyclic:7"))), CheckStatus::NotApplicable);
        let q32 = analyze("quaternion:32");
        assert_eq!(q32.delta_count(), 0);
        assert_eq!(status(&check_empty_delta(&q32)), CheckStatus::Pass);
        let c12 = analyze("cyclic:12");
        assert_eq!(c12.delta_count(), 2);
        assert_eq!(status(&check_empty_delta(&c12)), CheckStatus::Pass);
    }

    #[test]
    fn main_theorem_examples() {
        for (spec, row) in [
            ("cyclic:49", Some("Z_{p^2}")),
            ("cyclic:12", Some("Z_p:Z_{2^n}")),
            ("alternating:5", None),
            ("sl2:3", Some("Q_8:Z_3")),
        ] {
            let a = analyze(spec);
            assert_eq!(equality_table_row(&a), row, "{spec}");
            assert_eq!(status(&check_main_theorem(&a)), CheckStatus::Pass, "{spec}");
        }
    }

    #[test]
    fn pi_plus_one_examples() {
        for spec in ["cyclic:27", "alternating:4", "sl2:5"] {
            let a = analyze(spec);
            assert_eq!(a.delta_count(), a.pi_count() + 1, "{spec}");
            let c = check_pi_plus_one(&a);
            assert_eq!(c.status, CheckStatus::Pass, "{spec}: {}", c.details);
        }
        assert_eq!(pi_plus_one_quotients().len(), 8);
        assert!(pi_plus_one_quotients().contains(&"psl2:257".to_string()));
    }

    #[test]
    fn solvable_bound_examples() {
        let c30 = analyze("cyclic:30");
        assert_eq!(c30.delta_count(), 6);
        assert_eq!(status(&check_solvable_bound(&c30)), CheckStatus::Pass);
        let a4 = analyze("alternating:4");
        assert_eq!(a4.delta_count(), 3);
        assert_eq!(status(&check_solvable_bound(&a4)), CheckStatus::Pass);
        let v4 = analyze("elementary_abelian:2:2");
        assert_eq!(v4.delta_count(), 3);
        assert_eq!(status(&check_solvable_bound(&v4)), CheckStatus::Pass);
        assert_eq!(status(&check_solvable_bound(&analyze("alternating:5"))), CheckStatus::NotApplicable);
    }

    #[test]
    fn small_delta_examples() {
        for spec in ["cyclic:12", "sl2:5", "alternating:5"] {
            let c = check_small_delta(&analyze(spec));
            assert_eq!(c.status, CheckStatus::Pass, "{spec}: {}", c.details);
        }
        assert!(small_delta_socle_order_allowed(60));
        assert!(!small_delta_socle_order_allowed(120));
        // PSL(2,11): 11^2 - 1 = 120, odd part 15 = 3 * 5.
        assert!(small_delta_socle_order_allowed(660));
        // PSL(2,13): 168 odd part 21 = 3 * 7.
        assert!(small_delta_socle_order_allowed(1092));
        // PSL(2,19): 360 odd part 45 is not squarefree.
        assert!(!small_delta_socle_order_allowed(3420));
    }

    #[test]
    fn observation_and_scans() {
        let limits = Limits::default();
        assert_eq!(check_observation_quaternion(3, &limits).unwrap().status, CheckStatus::Pass);
        assert!(matches!(check_observation_quaternion(2, &limits), Err(GroupError::InvalidRange(_))));
        let scans = lemma_scans(60, 10_000).unwrap();
        assert!(scans.iter().all(|c| c.status == CheckStatus::Pass), "{scans:?}");
        assert!(matches!(lemma_scans(1, 10), Err(GroupError::InvalidRange(_))));
    }
}
