//! Deciding whether a subgroup is a perfect code in some Cayley graph, and
//! collecting the conjugacy classes of nontrivial ones.
//!
//! Three independent routes are provided: the coset criterion, the Sylow
//! 2-subgroup reduction, and an explicit search for an inverse-closed right
//! transversal (whose nonidentity elements form a connection set in which the
//! subgroup is a perfect code).

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{GroupError, Result};
use crate::group::{ElementId, GroupTable};
use crate::lattice::{normalizer, sylow_in, SubgroupLattice};
use crate::limits::Limits;
use crate::subgroup::Subgroup;

/// Right-coset label of every element: `label[x]` is the index of `Hx`.
/// Cosets are numbered in order of their least element, so `H` itself is 0.
pub fn right_coset_labels(g: &GroupTable, h: &Subgroup) -> (Vec<u32>, usize) {
    let mut label = vec![u32::MAX; g.order()];
    let mut count = 0;
    for x in g.elements() {
        if label[x.index()] != u32::MAX {
            continue;
        }
        for &m in h.members() {
            label[g.mul(m, x).index()] = count;
        }
        count += 1;
    }
    (label, count as usize)
}

/// `Some(true)` when `|H|` or `[G:H]` is odd; `None` otherwise.
pub fn fast_path_odd(g: &GroupTable, h: &Subgroup) -> Option<bool> {
    let index = g.order() / h.order();
    (h.order() % 2 == 1 || index % 2 == 1).then_some(true)
}

/// For every `x` with `x^2 in H` and `|H : H ∩ H^x|` odd, the coset `Hx`
/// contains some `y` with `y^2 = 1`.
pub fn is_perfect_code_criterion(g: &GroupTable, h: &Subgroup) -> bool {
    let (label, count) = right_coset_labels(g, h);
    let mut has_square_root_of_one = FixedBitSet::with_capacity(count);
    for x in g.elements() {
        if g.mul(x, x).is_identity() {
            has_square_root_of_one.insert(label[x.index()] as usize);
        }
    }
    // The intersection H ∩ H^x depends only on the coset Hx.
    let mut odd_ratio: Vec<Option<bool>> = vec![None; count];
    for x in g.elements() {
        let c = label[x.index()] as usize;
        if has_square_root_of_one.contains(c) || !h.contains(g.mul(x, x)) {
            continue;
        }
        let odd = *odd_ratio[c].get_or_insert_with(|| {
            let xi = g.inv(x);
            let meet = h.members().iter().filter(|&&m| h.contains(g.mul(g.mul(x, m), xi))).count();
            (h.order() / meet) % 2 == 1
        });
        if odd {
            return false;
        }
    }
    true
}

/// Decide via `Q in Syl_2(H)` and `P in Syl_2(N_G(Q))`: `H` is a code of
/// `G` iff every `x in P` with `x^2 in Q` has some `y in Qx` with `y^2 = 1`.
pub fn is_perfect_code_sylow_reduction(g: &GroupTable, h: &Subgroup) -> bool {
    let q = sylow_in(g, h, 2);
    let n = normalizer(g, &q);
    let p = crate::lattice::sylow_containing(g, &n, q.clone(), 2);
    two_subgroup_test(g, &q, &p)
}

/// The coset test of a 2-subgroup `q` inside a 2-group `p` containing it.
fn two_subgroup_test(g: &GroupTable, q: &Subgroup, p: &Subgroup) -> bool {
    p.members().iter().all(|&x| {
        !q.contains(g.mul(x, x)) || q.members().iter().any(|&m| {
            let y = g.mul(m, x);
            g.mul(y, y).is_identity()
        })
    })
}

/// One representative per right coset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transversal {
    pub reps: Vec<ElementId>,
    pub inverse_closed: bool,
}

/// Search for an inverse-closed right transversal.
///
/// A rep `t` of `Hx` forces `t^-1` to be the rep of the coset containing it,
/// so such a transversal is a choice, for each coset, of either an element
/// with `t^2 = 1` in it or a partner coset `Hy != Hx` with some `t in Hx`,
/// `t^-1 in Hy`: a perfect matching in which loops are allowed. The search
/// is exhaustive, so `Ok(None)` proves that none exists.
pub fn find_inverse_closed_transversal(g: &GroupTable, h: &Subgroup, limits: &Limits) -> Result<Option<Transversal>> {
    let index = g.order() / h.order();
    if index > limits.transversal_index {
        return Err(GroupError::CapExceeded {
            what: "transversal index",
            limit: limits.transversal_index,
        });
    }
    let (label, count) = right_coset_labels(g, h);
    // loops[c]: a self-inverse element of coset c; edges[c]: partner -> witness.
    let mut loops: Vec<Option<ElementId>> = vec![None; count];
    let mut edges: Vec<Vec<(usize, ElementId)>> = vec![Vec::new(); count];
    for x in g.elements() {
        let c = label[x.index()] as usize;
        let xi = g.inv(x);
        let d = label[xi.index()] as usize;
        if xi == x {
            if loops[c].is_none() || x.is_identity() {
                loops[c] = Some(x);
            }
        } else if c != d && !edges[c].iter().any(|&(e, _)| e == d) {
            edges[c].push((d, x));
        }
    }
    let mut chosen: Vec<Option<ElementId>> = vec![None; count];
    let mut search = Matching {
        loops: &loops,
        edges: &edges,
        chosen: &mut chosen,
        g,
    };
    if !search.solve() {
        return Ok(None);
    }
    let mut reps: Vec<ElementId> = chosen.into_iter().map(Option::unwrap).collect();
    // The identity is a legal self-paired rep of H itself.
    reps[0] = ElementId::IDENTITY;
    reps.sort_unstable();
    Ok(Some(Transversal {
        reps,
        inverse_closed: true,
    }))
}

struct Matching<'a> {
    loops: &'a [Option<ElementId>],
    edges: &'a [Vec<(usize, ElementId)>],
    chosen: &'a mut [Option<ElementId>],
    g: &'a GroupTable,
}

impl Matching<'_> {
    fn options(&self, c: usize) -> usize {
        usize::from(self.loops[c].is_some()) + self.edges[c].iter().filter(|&&(d, _)| self.chosen[d].is_none()).count()
    }

    /// Depth-first search choosing the open coset with the fewest options.
    fn solve(&mut self) -> bool {
        let mut best: Option<(usize, usize)> = None;
        for c in 0..self.chosen.len() {
            if self.chosen[c].is_some() {
                continue;
            }
            let k = self.options(c);
            if k == 0 {
                return false;
            }
            if best.map_or(true, |(_, bk)| k < bk) {
                best = Some((c, k));
                if k == 1 {
                    break;
                }
            }
        }
        let Some((c, _)) = best else {
            return true;
        };
        let partners: Vec<(usize, ElementId)> =
            self.edges[c].iter().copied().filter(|&(d, _)| self.chosen[d].is_none()).collect();
        for (d, t) in partners {
            self.chosen[c] = Some(t);
            self.chosen[d] = Some(self.g.inv(t));
            if self.solve() {
                return true;
            }
            self.chosen[c] = None;
            self.chosen[d] = None;
        }
        if let Some(t) = self.loops[c] {
            self.chosen[c] = Some(t);
            if self.solve() {
                return true;
            }
            self.chosen[c] = None;
        }
        false
    }
}

/// Check from the graph definition that `H` is a perfect code in
/// `Cay(G, T \ {1})`, after validating `T`.
pub fn verify_in_cayley(g: &GroupTable, h: &Subgroup, t: &Transversal) -> Result<bool> {
    let (label, count) = right_coset_labels(g, h);
    if t.reps.len() != count {
        return Err(GroupError::NotATransversal(format!(
            "{} reps for {count} cosets",
            t.reps.len()
        )));
    }
    let mut seen = vec![false; count];
    for &r in &t.reps {
        let c = label[r.index()] as usize;
        if std::mem::replace(&mut seen[c], true) {
            return Err(GroupError::NotATransversal(format!("two reps in the coset of {r}")));
        }
    }
    let mut in_t = FixedBitSet::with_capacity(g.order());
    for &r in &t.reps {
        in_t.insert(r.index());
    }
    if t.reps.iter().any(|&r| !in_t.contains(g.inv(r).index())) {
        return Err(GroupError::NotInverseClosed);
    }
    // Normalize: the rep of H itself is an involution of H or the identity.
    let mut s = in_t;
    for &r in &t.reps {
        if h.contains(r) {
            s.set(r.index(), false);
        }
    }
    s.set(0, false);
    let adjacent = |x: ElementId, y: ElementId| s.contains(g.mul(y, g.inv(x)).index());
    for &a in h.members() {
        for &b in h.members() {
            if adjacent(a, b) {
                return Ok(false);
            }
        }
    }
    for v in g.elements().filter(|&v| !h.contains(v)) {
        let hits = h.members().iter().filter(|&&m| adjacent(v, m)).count();
        if hits != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Which decision procedure confirmed a class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    OddOrder,
    OddIndex,
    Criterion,
    SylowReduction,
    Transversal,
}

/// One class of nontrivial proper perfect codes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaClass {
    /// Index of the class in the lattice.
    pub class: usize,
    pub order: usize,
    pub class_size: usize,
    pub representative: Vec<ElementId>,
    pub routes: Vec<Route>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaReport {
    pub group: String,
    pub group_order: usize,
    pub classes: Vec<DeltaClass>,
    pub delta_count: usize,
    pub pi_count: usize,
    /// Route disagreements found in audit mode (always empty otherwise).
    pub disagreements: Vec<String>,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct DeltaOptions {
    /// Also run the Sylow reduction and transversal routes, with Cayley
    /// verification, and check every member of every class.
    pub audit: bool,
}

/// Evaluate one subgroup by the fast path and then the criterion.
pub fn is_perfect_code(g: &GroupTable, h: &Subgroup) -> bool {
    fast_path_odd(g, h).unwrap_or_else(|| is_perfect_code_criterion(g, h))
}

/// The conjugacy classes of nontrivial proper subgroup perfect codes.
pub fn delta(g: &GroupTable, lattice: &SubgroupLattice, options: DeltaOptions, limits: &Limits) -> DeltaReport {
    let n = g.order();
    let evaluated: Vec<(Option<DeltaClass>, Vec<String>)> = lattice
        .classes()
        .par_iter()
        .enumerate()
        .filter(|(_, c)| {
            let order = lattice.subgroups()[c.representative].order();
            order > 1 && order < n
        })
        .map(|(ci, c)| {
            let h = &lattice.subgroups()[c.representative];
            let mut routes = Vec::new();
            if h.order() % 2 == 1 {
                routes.push(Route::OddOrder);
            }
            if (n / h.order()) % 2 == 1 {
                routes.push(Route::OddIndex);
            }
            let code = if !routes.is_empty() && !options.audit {
                true
            } else {
                let by_criterion = is_perfect_code_criterion(g, h);
                if by_criterion {
                    routes.push(Route::Criterion);
                }
                by_criterion || !routes.is_empty()
            };
            let mut disagreements = Vec::new();
            if options.audit {
                audit_class(g, lattice, ci, code, &mut routes, &mut disagreements, limits);
            }
            let class = code.then(|| DeltaClass {
                class: ci,
                order: h.order(),
                class_size: c.size(),
                representative: h.members().to_vec(),
                routes,
            });
            (class, disagreements)
        })
        .collect();
    let mut classes = Vec::new();
    let mut disagreements = Vec::new();
    for (class, d) in evaluated {
        classes.extend(class);
        disagreements.extend(d);
    }
    DeltaReport {
        group: g.name().to_string(),
        group_order: n,
        delta_count: classes.len(),
        classes,
        pi_count: crate::numtheory::factorize(n as u64).len(),
        disagreements,
    }
}

fn audit_class(
    g: &GroupTable,
    lattice: &SubgroupLattice,
    ci: usize,
    code: bool,
    routes: &mut Vec<Route>,
    disagreements: &mut Vec<String>,
    limits: &Limits,
) {
    let c = &lattice.classes()[ci];
    let h = &lattice.subgroups()[c.representative];
    let mut note = |what: String| disagreements.push(format!("class {ci} (order {}): {what}", h.order()));
    if fast_path_odd(g, h) == Some(true) && !is_perfect_code_criterion(g, h) {
        note("odd order/index but the criterion fails".into());
    }
    let by_sylow = is_perfect_code_sylow_reduction(g, h);
    if by_sylow {
        routes.push(Route::SylowReduction);
    }
    if by_sylow != code {
        note(format!("Sylow reduction says {by_sylow}, expected {code}"));
    }
    match find_inverse_closed_transversal(g, h, limits) {
        Ok(found) => {
            if found.is_some() != code {
                note(format!("transversal search says {}, expected {code}", found.is_some()));
            }
            if let Some(t) = found {
                match verify_in_cayley(g, h, &t) {
                    Ok(true) => routes.push(Route::Transversal),
                    other => note(format!("Cayley verification returned {other:?}")),
                }
            }
        }
        Err(e) => note(format!("transversal search skipped: {e}")),
    }
    for &m in &c.members[1..] {
        if is_perfect_code(g, &lattice.subgroups()[m]) != code {
            note(format!("member {m} disagrees with the representative"));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::build;

    fn subgroups_of_order(g: &GroupTable, order: usize) -> Vec<Subgroup> {
        let l = SubgroupLattice::compute(g, &Limits::default()).unwrap();
        l.subgroups().iter().filter(|h| h.order() == order).cloned().collect()
    }

    #[test]
    fn cyclic_four_has_no_code_of_order_two() {
        let g = build("cyclic:4").unwrap();
        let h = &subgroups_of_order(&g, 2)[0];
        assert!(!is_perfect_code_criterion(&g, h));
        assert!(!is_perfect_code_sylow_reduction(&g, h));
        assert_eq!(find_inverse_closed_transversal(&g, h, &Limits::default()).unwrap(), None);
        assert_eq!(fast_path_odd(&g, h), None);
    }

    #[test]
    fn degenerate_subgroups_are_codes() {
        let g = build("symmetric:4").unwrap();
        let t = Subgroup::trivial(&g);
        let w = Subgroup::whole(&g);
        assert!(is_perfect_code_criterion(&g, &t));
        assert!(is_perfect_code_criterion(&g, &w));
        let tw = find_inverse_closed_transversal(&g, &w, &Limits::default()).unwrap().unwrap();
        assert_eq!(tw.reps, vec![ElementId::IDENTITY]);
        assert!(verify_in_cayley(&g, &w, &tw).unwrap());
    }

    #[test]
    fn klein_and_a4() {
        let v = build("elementary_abelian:2:2").unwrap();
        for h in subgroups_of_order(&v, 2) {
            assert!(is_perfect_code_criterion(&v, &h));
        }
        let a4 = build("alternating:4").unwrap();
        for h in subgroups_of_order(&a4, 2) {
            assert!(is_perfect_code_sylow_reduction(&a4, &h));
        }
    }

    #[test]
    fn s3_transversals() {
        let g = build("dihedral:6").unwrap();
        let z3 = &subgroups_of_order(&g, 3)[0];
        let t = find_inverse_closed_transversal(&g, z3, &Limits::default()).unwrap().unwrap();
        assert_eq!(t.reps.len(), 2);
        assert!(verify_in_cayley(&g, z3, &t).unwrap());
        let inv = g.involutions();
        let bad = Transversal {
            reps: vec![inv[0], inv[1]],
            inverse_closed: true,
        };
        assert!(matches!(verify_in_cayley(&g, z3, &bad), Err(GroupError::NotATransversal(_))));
        let c3 = build("cyclic:3").unwrap();
        let triv = Subgroup::trivial(&c3);
        let x = c3.generators()[0];
        let repeated = Transversal {
            reps: vec![ElementId::IDENTITY, x, x],
            inverse_closed: false,
        };
        assert!(matches!(verify_in_cayley(&c3, &triv, &repeated), Err(GroupError::NotATransversal(_))));
        let all = Transversal {
            reps: vec![ElementId::IDENTITY, x, c3.mul(x, x)],
            inverse_closed: true,
        };
        assert!(verify_in_cayley(&c3, &triv, &all).unwrap());

        let c6 = build("cyclic:6").unwrap();
        let h = Subgroup::generated(&c6, &[ElementId(3)]);
        let one_sided = Transversal {
            reps: vec![ElementId(0), ElementId(1), ElementId(2)],
            inverse_closed: false,
        };
        assert_eq!(verify_in_cayley(&c6, &h, &one_sided), Err(GroupError::NotInverseClosed));
    }

    #[test]
    fn fast_path_examples() {
        let g = build("symmetric:5").unwrap();
        let l = SubgroupLattice::compute(&g, &Limits::default()).unwrap();
        let h5 = l.subgroups().iter().find(|h| h.order() == 5).unwrap();
        assert_eq!(fast_path_odd(&g, h5), Some(true));
        let s4 = build("symmetric:4").unwrap();
        let h8 = &subgroups_of_order(&s4, 8)[0];
        assert_eq!(fast_path_odd(&s4, h8), Some(true));
        let d8 = build("dihedral:8").unwrap();
        assert_eq!(fast_path_odd(&d8, &subgroups_of_order(&d8, 2)[0]), None);
    }

    #[test]
    fn delta_counts() {
        for (spec, expect) in [("alternating:5", 7), ("sl2:5", 4), ("cyclic:81", 3), ("cyclic:8", 0)] {
            let g = build(spec).unwrap();
            let l = SubgroupLattice::compute(&g, &Limits::default()).unwrap();
            let r = delta(&g, &l, DeltaOptions::default(), &Limits::default());
            assert_eq!(r.delta_count, expect, "{spec}");
            let audited = delta(&g, &l, DeltaOptions { audit: true }, &Limits::default());
            assert!(audited.disagreements.is_empty(), "{:?}", audited.disagreements);
            assert_eq!(audited.delta_count, expect);
        }
    }
}
