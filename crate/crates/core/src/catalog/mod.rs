//! Constructors for the named group families, products, semidirect
//! products, matrix groups, and the spec language that drives them.

mod spec;
mod sweep;

pub use spec::{parse_spec, ActionSpec, Family, GroupSpec};
pub use sweep::default_catalogue;

use crate::error::{GroupError, Result};
use crate::field::{FieldElem, GaloisField};
use crate::group::{materialize, ElementId, GroupTable, Realization};
use crate::lattice::SubgroupLattice;
use crate::limits::Limits;
use crate::numtheory::{is_power_of_two, is_prime, prime_power};

/// Parse and build with the environment's limits.
pub fn build(text: &str) -> Result<GroupTable> {
    build_with(&parse_spec(text)?, &Limits::from_env())
}

/// Build a group from a parsed spec.
pub fn build_with(spec: &GroupSpec, limits: &Limits) -> Result<GroupTable> {
    let g = match spec {
        GroupSpec::Family { family, params } => make_family(*family, params, limits)?,
        GroupSpec::Perm(gens) => perm_group(gens, limits)?,
        GroupSpec::Matrix { q, gens } => matrix_group(*q, gens, limits)?,
        GroupSpec::Product(a, b) => direct_product(&build_with(a, limits)?, &build_with(b, limits)?, limits)?,
        GroupSpec::Semidirect { normal, acting, action } => {
            semidirect_product(&build_with(normal, limits)?, &build_with(acting, limits)?, action, limits)?
        }
        GroupSpec::SubgroupOf { parent, order, index } => {
            let parent = build_with(parent, limits)?;
            let lattice = SubgroupLattice::compute(&parent, limits)?;
            let h = lattice
                .subgroups()
                .iter()
                .filter(|h| h.order() == *order)
                .nth(*index)
                .ok_or_else(|| GroupError::NotFound(format!("subgroup #{index} of order {order}")))?;
            parent.subgroup_table(h).0
        }
    };
    Ok(g.with_source(spec.clone()))
}

/// Build a named family with default limits.
pub fn family(family: Family, params: &[u64]) -> Result<GroupTable> {
    build_with(&GroupSpec::family(family, params), &Limits::default())
}

fn param(params: &[u64], i: usize, family: Family) -> Result<u64> {
    if params.len() != family.arity() {
        return Err(GroupError::InvalidParams(format!(
            "{} takes {} parameter(s), got {}",
            family.keyword(),
            family.arity(),
            params.len()
        )));
    }
    Ok(params[i])
}

fn check_order(order: u64, limits: &Limits) -> Result<()> {
    if order > limits.group_order as u64 {
        return Err(GroupError::CapExceeded {
            what: "group order",
            limit: limits.group_order,
        });
    }
    Ok(())
}

/// Construct a member of a named family.
pub fn make_family(family: Family, params: &[u64], limits: &Limits) -> Result<GroupTable> {
    let invalid = |msg: String| GroupError::InvalidParams(msg);
    if let Some(order) = GroupSpec::family(family, params).expected_order() {
        check_order(order, limits)?;
    }
    let name = GroupSpec::family(family, params).to_string();
    match family {
        Family::Cyclic => {
            let n = param(params, 0, family)?;
            if n == 0 {
                return Err(invalid("cyclic order must be positive".into()));
            }
            let real = Cyclic { n: n as u32 };
            Ok(materialize(&real, &[1 % n as u32], name, limits)?.0)
        }
        Family::Dihedral => {
            let n = param(params, 0, family)?;
            if n < 2 || n % 2 != 0 {
                return Err(invalid(format!("dihedral order must be even and at least 2, got {n}")));
            }
            let real = Dihedral { n: (n / 2) as u32 };
            let r = (1 % (n / 2) as u32, 0);
            Ok(materialize(&real, &[r, (0, 1)], name, limits)?.0)
        }
        Family::Quaternion => {
            let n = param(params, 0, family)?;
            if n < 8 || !is_power_of_two(n) {
                return Err(invalid(format!("quaternion order must be a power of 2, at least 8, got {n}")));
            }
            let real = Dicyclic { m: (n / 4) as u32 };
            Ok(materialize(&real, &[(1, 0), (0, 1)], name, limits)?.0)
        }
        Family::ElementaryAbelian => {
            let p = param(params, 0, family)?;
            let k = param(params, 1, family)?;
            if !is_prime(p) || k == 0 {
                return Err(invalid(format!("elementary abelian needs a prime and k >= 1, got ({p}, {k})")));
            }
            let real = Vectors { p: p as u32, k: k as usize };
            let gens: Vec<Vec<u32>> = (0..k as usize)
                .map(|i| (0..k as usize).map(|j| u32::from(i == j)).collect())
                .collect();
            Ok(materialize(&real, &gens, name, limits)?.0)
        }
        Family::Symmetric | Family::Alternating => {
            let n = param(params, 0, family)? as usize;
            if n > 12 {
                return Err(invalid(format!("degree {n} is too large")));
            }
            let degree = n.max(1);
            let cycle = |pts: &[usize]| -> Vec<u16> {
                let mut img: Vec<u16> = (0..degree as u16).collect();
                for w in 0..pts.len() {
                    img[pts[w]] = pts[(w + 1) % pts.len()] as u16;
                }
                img
            };
            let gens: Vec<Vec<u16>> = if family == Family::Symmetric {
                if n < 2 {
                    vec![]
                } else {
                    vec![cycle(&(0..n).collect::<Vec<_>>()), cycle(&[0, 1])]
                }
            } else {
                (2..n).map(|k| cycle(&[0, 1, k])).collect()
            };
            Ok(materialize(&Perms { degree }, &gens, name, limits)?.0)
        }
        Family::Sl2 | Family::Psl2 | Family::Pgl2 => {
            let q = param(params, 0, family)?;
            if prime_power(q).is_none() || q > 31 {
                return Err(invalid(format!("q must be a prime power at most 31, got {q}")));
            }
            matrix_group_family(family, q as u32, limits)
        }
        Family::BinaryOctahedral => {
            if !params.is_empty() {
                return Err(invalid("binary_octahedral takes no parameters".into()));
            }
            binary_octahedral(limits)
        }
    }
}

/// SL(2,q) from matrices; PSL(2,q) and PGL(2,q) as permutation groups on the
/// projective line.
pub fn matrix_group_family(kind: Family, q: u32, limits: &Limits) -> Result<GroupTable> {
    let field = GaloisField::new(q)?;
    let name = GroupSpec::family(kind, &[q as u64]).to_string();
    let k = field.degree() as u64;
    let one = 1;
    let translations: Vec<[FieldElem; 4]> = (0..k)
        .map(|j| [one, field.primitive_power(j), 0, one])
        .collect();
    let w: [FieldElem; 4] = [0, one, field.neg(one), 0];
    match kind {
        Family::Sl2 => {
            let mut gens = translations;
            gens.push(w);
            let real = Matrices { field: &field };
            Ok(materialize(&real, &gens, name, limits)?.0)
        }
        Family::Psl2 | Family::Pgl2 => {
            let mut mats = translations;
            mats.push(w);
            if kind == Family::Pgl2 {
                mats.push([field.primitive(), 0, 0, one]);
            }
            let gens: Vec<Vec<u16>> = mats.iter().map(|m| mobius(&field, m)).collect();
            let real = Perms { degree: q as usize + 1 };
            Ok(materialize(&real, &gens, name, limits)?.0)
        }
        _ => Err(GroupError::InvalidParams(format!("{} is not a matrix family", kind.keyword()))),
    }
}

/// Action of a matrix on the projective line; point `q` is infinity.
fn mobius(field: &GaloisField, m: &[FieldElem; 4]) -> Vec<u16> {
    let q = field.order() as u16;
    let [a, b, c, d] = *m;
    (0..=q)
        .map(|z| {
            if z == q {
                if c == 0 {
                    q
                } else {
                    field.mul(a, field.inv(c))
                }
            } else {
                let num = field.add(field.mul(a, z), b);
                let den = field.add(field.mul(c, z), d);
                if den == 0 {
                    q
                } else {
                    field.mul(num, field.inv(den))
                }
            }
        })
        .collect()
}

/// The order-48 subgroup of SL(2,7) with a unique involution (its Sylow
/// 2-subgroup is generalized quaternion of order 16).
pub fn binary_octahedral(limits: &Limits) -> Result<GroupTable> {
    let sl27 = matrix_group_family(Family::Sl2, 7, limits)?;
    let lattice = SubgroupLattice::compute(&sl27, limits)?;
    let orders = sl27.element_orders();
    let h = lattice
        .subgroups()
        .iter()
        .find(|h| h.order() == 48 && h.members().iter().filter(|x| orders[x.index()] == 2).count() == 1)
        .ok_or_else(|| GroupError::Internal("no order-48 subgroup with a unique involution in SL(2,7)".into()))?;
    let (mut table, _) = sl27.subgroup_table(h);
    table.set_name("binary_octahedral");
    Ok(table)
}

fn perm_group(gens: &[Vec<Vec<u32>>], limits: &Limits) -> Result<GroupTable> {
    let degree = gens
        .iter()
        .flatten()
        .flatten()
        .copied()
        .max()
        .unwrap_or(1)
        .max(1) as usize;
    if degree > u16::MAX as usize {
        return Err(GroupError::InvalidGenerator(format!("point {degree} out of range")));
    }
    let mut images = Vec::with_capacity(gens.len());
    for (gi, cycles) in gens.iter().enumerate() {
        let mut img: Vec<u16> = (0..degree as u16).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (w, &pt) in cycle.iter().enumerate() {
                if pt == 0 {
                    return Err(GroupError::InvalidGenerator(format!("generator {}: points start at 1", gi + 1)));
                }
                let i = pt as usize - 1;
                if used[i] {
                    return Err(GroupError::InvalidGenerator(format!(
                        "generator {}: point {pt} repeated",
                        gi + 1
                    )));
                }
                used[i] = true;
                img[i] = (cycle[(w + 1) % cycle.len()] - 1) as u16;
            }
        }
        images.push(img);
    }
    Ok(materialize(&Perms { degree }, &images, "perm", limits)?.0)
}

fn matrix_group(q: u32, gens: &[[i64; 4]], limits: &Limits) -> Result<GroupTable> {
    let field = GaloisField::new(q)?;
    let prime_field = field.degree() == 1;
    let mut mats = Vec::with_capacity(gens.len());
    for m in gens {
        let mut e = [0 as FieldElem; 4];
        for (slot, &v) in e.iter_mut().zip(m) {
            *slot = if prime_field {
                field.from_int(v)
            } else if (0..q as i64).contains(&v) {
                v as FieldElem
            } else {
                return Err(GroupError::InvalidGenerator(format!("entry {v} is not an element of GF({q})")));
            };
        }
        let det = field.sub(field.mul(e[0], e[3]), field.mul(e[1], e[2]));
        if det == 0 {
            return Err(GroupError::InvalidGenerator(format!("singular matrix {m:?}")));
        }
        mats.push(e);
    }
    let real = Matrices { field: &field };
    Ok(materialize(&real, &mats, "matrix", limits)?.0)
}

/// `a × b`, generated by the generators of `a` then those of `b`.
pub fn direct_product(a: &GroupTable, b: &GroupTable, limits: &Limits) -> Result<GroupTable> {
    check_order(a.order() as u64 * b.order() as u64, limits)?;
    let real = Product { a, b };
    let mut gens: Vec<(ElementId, ElementId)> = a.generators().iter().map(|&x| (x, ElementId::IDENTITY)).collect();
    gens.extend(b.generators().iter().map(|&y| (ElementId::IDENTITY, y)));
    let name = format!("{} x {}", a.name(), b.name());
    Ok(materialize(&real, &gens, name, limits)?.0)
}

/// `n : q` for an action given in spec form.
pub fn semidirect_product(n: &GroupTable, q: &GroupTable, action: &ActionSpec, limits: &Limits) -> Result<GroupTable> {
    let ngens = q.generators().len();
    let broadcast = |len: usize, what: &str| -> Result<Vec<usize>> {
        if len == 1 {
            Ok(vec![0; ngens])
        } else if len == ngens {
            Ok((0..ngens).collect())
        } else {
            Err(GroupError::InvalidAction(format!(
                "{len} {what} given for {ngens} acting generators"
            )))
        }
    };
    let images: Vec<Vec<ElementId>> = match action {
        ActionSpec::Exponents(exps) => {
            let order = n.order() as u64;
            let x = n
                .generators()
                .iter()
                .copied()
                .chain(n.elements())
                .find(|&x| n.element_order(x) as u64 == order)
                .ok_or_else(|| GroupError::InvalidAction("exponent actions need a cyclic normal factor".into()))?;
            let powers: Vec<ElementId> = (0..order).map(|a| n.pow(x, a)).collect();
            let mut log = vec![0u64; n.order()];
            for (a, p) in powers.iter().enumerate() {
                log[p.index()] = a as u64;
            }
            let which = broadcast(exps.len(), "exponents")?;
            which
                .iter()
                .map(|&i| {
                    let e = exps[i].rem_euclid(order as i64) as u64;
                    if crate::numtheory::gcd(e, order) != 1 && order > 1 {
                        return Err(GroupError::InvalidAction(format!(
                            "x -> x^{} is not an automorphism of Z_{order}",
                            exps[i]
                        )));
                    }
                    Ok(n.elements().map(|y| powers[((log[y.index()] * e) % order) as usize]).collect())
                })
                .collect::<Result<_>>()?
        }
        ActionSpec::Matrices(ms) => {
            let (p, basis) = elementary_abelian_basis(n)
                .ok_or_else(|| GroupError::InvalidAction("matrix actions need an elementary abelian normal factor".into()))?;
            let k = basis.len();
            // coordinates of every element
            let total = n.order();
            let mut coords = vec![vec![0u64; k]; total];
            let mut from_coords = std::collections::HashMap::new();
            for idx in 0..total {
                let mut v = vec![0u64; k];
                let mut rest = idx as u64;
                let mut elem = ElementId::IDENTITY;
                for (j, &b) in basis.iter().enumerate() {
                    v[j] = rest % p;
                    rest /= p;
                    elem = n.mul(elem, n.pow(b, v[j]));
                }
                coords[elem.index()] = v.clone();
                from_coords.insert(v, elem);
            }
            let which = broadcast(ms.len(), "matrices")?;
            which
                .iter()
                .map(|&i| {
                    let m = &ms[i];
                    if m.len() != k * k {
                        return Err(GroupError::InvalidAction(format!(
                            "matrix needs {} entries, got {}",
                            k * k,
                            m.len()
                        )));
                    }
                    Ok(n.elements()
                        .map(|y| {
                            let v = &coords[y.index()];
                            let w: Vec<u64> = (0..k)
                                .map(|r| {
                                    (0..k)
                                        .map(|c| m[r * k + c].rem_euclid(p as i64) as u64 * v[c])
                                        .sum::<u64>()
                                        % p
                                })
                                .collect();
                            from_coords[&w]
                        })
                        .collect())
                })
                .collect::<Result<_>>()?
        }
    };
    semidirect_by_automorphisms(n, q, &images, limits)
}

/// A basis (over GF(p)) of an elementary abelian group, or `None`.
fn elementary_abelian_basis(n: &GroupTable) -> Option<(u64, Vec<ElementId>)> {
    if n.order() == 1 {
        return Some((2, Vec::new()));
    }
    let (p, _) = prime_power(n.order() as u64)?;
    if !n.is_abelian() || n.elements().skip(1).any(|x| n.element_order(x) as u64 != p) {
        return None;
    }
    let mut span = crate::subgroup::Subgroup::trivial(n);
    let mut basis = Vec::new();
    for x in n.generators().iter().copied().chain(n.elements()) {
        if !span.contains(x) {
            span = span.extend(n, x);
            basis.push(x);
        }
    }
    Some((p, basis))
}

/// `n : q` where generator `i` of `q` acts on `n` by the element permutation
/// `images[i]` (conjugation `q n q^-1`). Every image must be an automorphism
/// and the assignment must extend to a homomorphism `q -> Aut(n)`.
pub fn semidirect_by_automorphisms(
    n: &GroupTable,
    q: &GroupTable,
    images: &[Vec<ElementId>],
    limits: &Limits,
) -> Result<GroupTable> {
    check_order(n.order() as u64 * q.order() as u64, limits)?;
    if images.len() != q.generators().len() {
        return Err(GroupError::InvalidAction("one automorphism per acting generator required".into()));
    }
    for (i, img) in images.iter().enumerate() {
        if img.len() != n.order() {
            return Err(GroupError::InvalidAction(format!("image {i} has the wrong length")));
        }
        let mut hit = vec![false; n.order()];
        for y in img {
            if y.index() >= n.order() || std::mem::replace(&mut hit[y.index()], true) {
                return Err(GroupError::InvalidAction(format!("image {i} is not a bijection")));
            }
        }
        for x in n.elements() {
            for &s in n.generators() {
                if img[n.mul(x, s).index()] != n.mul(img[x.index()], img[s.index()]) {
                    return Err(GroupError::InvalidAction(format!("image {i} is not a homomorphism")));
                }
            }
        }
    }
    // Extend along breadth-first words: phi(x s_i) = phi(x) o phi(s_i).
    let mut phi: Vec<Vec<u32>> = vec![Vec::new(); q.order()];
    phi[0] = (0..n.order() as u32).collect();
    for x in q.elements().skip(1) {
        let word = q.word(x);
        let (&last, prefix_word) = word.split_last().unwrap();
        // The prefix of a breadth-first word is itself the word of an earlier element.
        let mut prefix = ElementId::IDENTITY;
        for &g in prefix_word {
            prefix = q.mul_gen(prefix, g as usize);
        }
        let before = &phi[prefix.index()];
        let gen = &images[last as usize];
        phi[x.index()] = (0..n.order()).map(|y| before[gen[y].index()]).collect();
    }
    for x in q.elements() {
        for (i, gen) in images.iter().enumerate() {
            let xs = q.mul_gen(x, i);
            let composed: Vec<u32> = (0..n.order()).map(|y| phi[x.index()][gen[y].index()]).collect();
            if phi[xs.index()] != composed {
                return Err(GroupError::InvalidAction(
                    "generator images do not define a homomorphism into Aut(N)".into(),
                ));
            }
        }
    }
    let real = Semidirect { n, q, phi: &phi };
    let mut gens: Vec<(u32, u32)> = n.generators().iter().map(|x| (x.0, 0)).collect();
    gens.extend(q.generators().iter().map(|y| (0, y.0)));
    let name = format!("{} : {}", n.name(), q.name());
    Ok(materialize(&real, &gens, name, limits)?.0)
}

struct Cyclic {
    n: u32,
}

impl Realization for Cyclic {
    type Elem = u32;
    fn identity(&self) -> u32 {
        0
    }
    fn product(&self, a: &u32, b: &u32) -> u32 {
        (a + b) % self.n
    }
    fn inverse(&self, a: &u32) -> u32 {
        (self.n - a) % self.n
    }
}

/// `r^a s^t` with `r` of order `n`.
struct Dihedral {
    n: u32,
}

impl Realization for Dihedral {
    type Elem = (u32, u8);
    fn identity(&self) -> (u32, u8) {
        (0, 0)
    }
    fn product(&self, &(a, s): &(u32, u8), &(b, t): &(u32, u8)) -> (u32, u8) {
        if s == 0 {
            ((a + b) % self.n, t)
        } else {
            ((a + self.n - b) % self.n, 1 - t)
        }
    }
    fn inverse(&self, &(a, s): &(u32, u8)) -> (u32, u8) {
        if s == 0 {
            ((self.n - a) % self.n, 0)
        } else {
            (a, 1)
        }
    }
}

/// `x^a y^t` with `x` of order `2m`, `y^2 = x^m`, `y^-1 x y = x^-1`.
struct Dicyclic {
    m: u32,
}

impl Realization for Dicyclic {
    type Elem = (u32, u8);
    fn identity(&self) -> (u32, u8) {
        (0, 0)
    }
    fn product(&self, &(a, s): &(u32, u8), &(b, t): &(u32, u8)) -> (u32, u8) {
        let n = 2 * self.m;
        match (s, t) {
            (0, _) => ((a + b) % n, t),
            (_, 0) => ((a + n - b) % n, 1),
            _ => ((a + n - b + self.m) % n, 0),
        }
    }
    fn inverse(&self, &(a, s): &(u32, u8)) -> (u32, u8) {
        let n = 2 * self.m;
        if s == 0 {
            ((n - a) % n, 0)
        } else {
            ((a + self.m) % n, 1)
        }
    }
}

struct Vectors {
    p: u32,
    k: usize,
}

impl Realization for Vectors {
    type Elem = Vec<u32>;
    fn identity(&self) -> Vec<u32> {
        vec![0; self.k]
    }
    fn product(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
        a.iter().zip(b).map(|(x, y)| (x + y) % self.p).collect()
    }
    fn inverse(&self, a: &Vec<u32>) -> Vec<u32> {
        a.iter().map(|x| (self.p - x) % self.p).collect()
    }
}

/// Permutations as image vectors; `a * b` applies `a` first.
struct Perms {
    degree: usize,
}

impl Realization for Perms {
    type Elem = Vec<u16>;
    fn identity(&self) -> Vec<u16> {
        (0..self.degree as u16).collect()
    }
    fn product(&self, a: &Vec<u16>, b: &Vec<u16>) -> Vec<u16> {
        a.iter().map(|&i| b[i as usize]).collect()
    }
    fn inverse(&self, a: &Vec<u16>) -> Vec<u16> {
        let mut inv = vec![0; a.len()];
        for (i, &j) in a.iter().enumerate() {
            inv[j as usize] = i as u16;
        }
        inv
    }
}

pub(crate) struct Matrices<'a> {
    pub(crate) field: &'a GaloisField,
}

impl Realization for Matrices<'_> {
    type Elem = [FieldElem; 4];
    fn identity(&self) -> [FieldElem; 4] {
        [1, 0, 0, 1]
    }
    fn product(&self, x: &[FieldElem; 4], y: &[FieldElem; 4]) -> [FieldElem; 4] {
        let f = self.field;
        [
            f.add(f.mul(x[0], y[0]), f.mul(x[1], y[2])),
            f.add(f.mul(x[0], y[1]), f.mul(x[1], y[3])),
            f.add(f.mul(x[2], y[0]), f.mul(x[3], y[2])),
            f.add(f.mul(x[2], y[1]), f.mul(x[3], y[3])),
        ]
    }
    fn inverse(&self, x: &[FieldElem; 4]) -> [FieldElem; 4] {
        let f = self.field;
        let det = f.sub(f.mul(x[0], x[3]), f.mul(x[1], x[2]));
        let d = f.inv(det);
        [f.mul(x[3], d), f.mul(f.neg(x[1]), d), f.mul(f.neg(x[2]), d), f.mul(x[0], d)]
    }
}

struct Product<'a> {
    a: &'a GroupTable,
    b: &'a GroupTable,
}

impl Realization for Product<'_> {
    type Elem = (ElementId, ElementId);
    fn identity(&self) -> Self::Elem {
        (ElementId::IDENTITY, ElementId::IDENTITY)
    }
    fn product(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        (self.a.mul(x.0, y.0), self.b.mul(x.1, y.1))
    }
    fn inverse(&self, x: &Self::Elem) -> Self::Elem {
        (self.a.inv(x.0), self.b.inv(x.1))
    }
}

/// Pairs `(n, q)` with `(n1, q1)(n2, q2) = (n1 phi_q1(n2), q1 q2)`.
struct Semidirect<'a> {
    n: &'a GroupTable,
    q: &'a GroupTable,
    phi: &'a [Vec<u32>],
}

impl Realization for Semidirect<'_> {
    type Elem = (u32, u32);
    fn identity(&self) -> Self::Elem {
        (0, 0)
    }
    fn product(&self, &(n1, q1): &Self::Elem, &(n2, q2): &Self::Elem) -> Self::Elem {
        let acted = ElementId(self.phi[q1 as usize][n2 as usize]);
        (
            self.n.mul(ElementId(n1), acted).0,
            self.q.mul(ElementId(q1), ElementId(q2)).0,
        )
    }
    fn inverse(&self, &(n, q): &Self::Elem) -> Self::Elem {
        // (n, q)^-1 = (phi_{q^-1}(n^-1), q^-1)
        let qi = self.q.inv(ElementId(q));
        let ni = self.n.inv(ElementId(n));
        (self.phi[qi.index()][ni.index()], qi.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn involution_count(g: &GroupTable) -> usize {
        g.involutions().len()
    }

    #[test]
    fn symmetric_closure() {
        let s5 = build("perm:(1,2,3,4,5);(1,2)").unwrap();
        assert_eq!(s5.order(), 120);
        let trivial = build("perm:").unwrap();
        assert_eq!(trivial.order(), 1);
        let v4 = build("perm:(1,2)(3,4);(1,3)(2,4)").unwrap();
        assert_eq!(v4.order(), 4);
        assert!(v4.elements().skip(1).all(|x| v4.element_order(x) == 2));
    }

    #[test]
    fn bad_generators() {
        assert!(matches!(build("perm:(1,2,1)"), Err(GroupError::InvalidGenerator(_))));
        assert!(matches!(build("perm:(0,1)"), Err(GroupError::InvalidGenerator(_))));
        assert!(matches!(build("matrix:5:1,2,2,4"), Err(GroupError::InvalidGenerator(_))));
        let small = Limits {
            group_order: 100,
            ..Limits::default()
        };
        assert!(matches!(
            build_with(&parse_spec("perm:(1,2,3,4,5);(1,2)").unwrap(), &small),
            Err(GroupError::CapExceeded { .. })
        ));
    }

    #[test]
    fn family_basics() {
        let q16 = family(Family::Quaternion, &[16]).unwrap();
        assert_eq!(q16.order(), 16);
        assert_eq!(involution_count(&q16), 1);
        assert_eq!(family(Family::Cyclic, &[1]).unwrap().order(), 1);
        let d12 = family(Family::Dihedral, &[12]).unwrap();
        assert_eq!(d12.order(), 12);
        assert_eq!(involution_count(&d12), 7);
        assert!(matches!(family(Family::Quaternion, &[12]), Err(GroupError::InvalidParams(_))));
        assert!(matches!(family(Family::Dihedral, &[7]), Err(GroupError::InvalidParams(_))));
        assert!(matches!(family(Family::ElementaryAbelian, &[6, 2]), Err(GroupError::InvalidParams(_))));
    }

    #[test]
    fn matrix_families() {
        let psl25 = family(Family::Psl2, &[5]).unwrap();
        assert_eq!(psl25.order(), 60);
        let sl25 = family(Family::Sl2, &[5]).unwrap();
        assert_eq!(sl25.order(), 120);
        assert_eq!(involution_count(&sl25), 1);
        let pgl27 = family(Family::Pgl2, &[7]).unwrap();
        assert_eq!(pgl27.order(), 336);
        for q in [4u64, 8, 9] {
            let expect = q * (q * q - 1) / crate::numtheory::gcd(2, q - 1);
            assert_eq!(family(Family::Psl2, &[q]).unwrap().order() as u64, expect);
        }
    }

    #[test]
    fn semidirect_examples() {
        let g = build("semidirect:cyclic:7:cyclic:3:exp=2").unwrap();
        assert_eq!(g.order(), 21);
        assert!(!g.is_abelian());
        g.audit(0, 0).unwrap();

        let d = build("semidirect:cyclic:5:cyclic:4:exp=1").unwrap();
        assert_eq!(d.order(), 20);
        assert!(d.is_abelian());

        assert!(matches!(
            build("semidirect:cyclic:5:cyclic:3:exp=2"),
            Err(GroupError::InvalidAction(_))
        ));
        assert!(matches!(
            build("semidirect:cyclic:6:cyclic:2:exp=2"),
            Err(GroupError::InvalidAction(_))
        ));

        let m = build("semidirect:elementary_abelian:3:2:cyclic:2:mat=2,0,0,2").unwrap();
        assert_eq!(m.order(), 18);
        assert_eq!(involution_count(&m), 9);
        m.audit(0, 0).unwrap();
    }

    #[test]
    fn binary_octahedral_properties() {
        let g = family(Family::BinaryOctahedral, &[]).unwrap();
        assert_eq!(g.order(), 48);
        assert_eq!(involution_count(&g), 1);
    }

    #[test]
    fn subgroup_spec() {
        let g = build("subgroup:symmetric:4:12:0").unwrap();
        assert_eq!(g.order(), 12);
        assert!(matches!(build("subgroup:symmetric:4:5:0"), Err(GroupError::NotFound(_))));
    }
}
