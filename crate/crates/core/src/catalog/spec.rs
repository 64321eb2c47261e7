//! The group-spec mini-language.
//!
//! ```text
//! spec       := family | perm | matrix | product | semidirect | subgroup
//! family     := name (':' uint)*             e.g. cyclic:8, elementary_abelian:2:3
//! perm       := 'perm:' pgen (';' pgen)*     pgen := '()' | cycle+ ; cycle := '(' uint (',' uint)* ')'
//! matrix     := 'matrix:' q ':' mgen (';' mgen)*   mgen := int ',' int ',' int ',' int  (row-major)
//! product    := 'product:' spec '*' spec
//! semidirect := 'semidirect:' spec ':' spec ':' action
//! action     := 'exp=' int (',' int)*  |  'mat=' mrow (';' mrow)*   mrow := int (',' int)*
//! subgroup   := 'subgroup:' spec ':' uint ':' uint   (parent, subgroup order, index among that order)
//! ```
//!
//! Family names and arities: `cyclic:n`, `dihedral:n` (order `n`),
//! `quaternion:n` (order `n`), `elementary_abelian:p:k`, `symmetric:n`,
//! `alternating:n`, `sl2:q`, `psl2:q`, `pgl2:q`, `binary_octahedral`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{GroupError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    Cyclic,
    Dihedral,
    Quaternion,
    ElementaryAbelian,
    Symmetric,
    Alternating,
    Sl2,
    Psl2,
    Pgl2,
    BinaryOctahedral,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::Cyclic,
        Family::Dihedral,
        Family::Quaternion,
        Family::ElementaryAbelian,
        Family::Symmetric,
        Family::Alternating,
        Family::Sl2,
        Family::Psl2,
        Family::Pgl2,
        Family::BinaryOctahedral,
    ];

    pub fn keyword(self) -> &'static str {
        match self {
            Family::Cyclic => "cyclic",
            Family::Dihedral => "dihedral",
            Family::Quaternion => "quaternion",
            Family::ElementaryAbelian => "elementary_abelian",
            Family::Symmetric => "symmetric",
            Family::Alternating => "alternating",
            Family::Sl2 => "sl2",
            Family::Psl2 => "psl2",
            Family::Pgl2 => "pgl2",
            Family::BinaryOctahedral => "binary_octahedral",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Family::BinaryOctahedral => 0,
            Family::ElementaryAbelian => 2,
            _ => 1,
        }
    }

    fn from_keyword(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.keyword() == s)
    }
}

/// How the acting group of a semidirect product acts on the normal one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ActionSpec {
    /// Cyclic normal factor: generator `i` of the acting group sends `x` to
    /// `x^e_i`. A single exponent applies to every generator.
    Exponents(Vec<i64>),
    /// Elementary abelian normal factor: one square matrix (row-major) per
    /// acting generator, or a single one for all of them.
    Matrices(Vec<Vec<i64>>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupSpec {
    Family { family: Family, params: Vec<u64> },
    /// Generators as lists of cycles over points numbered from 1.
    Perm(Vec<Vec<Vec<u32>>>),
    /// 2x2 matrices over GF(q), entries row-major.
    Matrix { q: u32, gens: Vec<[i64; 4]> },
    Product(Box<GroupSpec>, Box<GroupSpec>),
    Semidirect {
        normal: Box<GroupSpec>,
        acting: Box<GroupSpec>,
        action: ActionSpec,
    },
    SubgroupOf {
        parent: Box<GroupSpec>,
        order: usize,
        index: usize,
    },
}

impl GroupSpec {
    pub fn family(family: Family, params: &[u64]) -> Self {
        GroupSpec::Family {
            family,
            params: params.to_vec(),
        }
    }

    pub fn product(a: GroupSpec, b: GroupSpec) -> Self {
        GroupSpec::Product(Box::new(a), Box::new(b))
    }

    pub fn semidirect(normal: GroupSpec, acting: GroupSpec, action: ActionSpec) -> Self {
        GroupSpec::Semidirect {
            normal: Box::new(normal),
            acting: Box::new(acting),
            action,
        }
    }

    /// Order implied by the spec without building it, when it is known in
    /// closed form.
    pub fn expected_order(&self) -> Option<u64> {
        match self {
            GroupSpec::Family { family, params } => {
                let p = |i: usize| params.get(i).copied();
                Some(match family {
                    Family::Cyclic | Family::Dihedral | Family::Quaternion => p(0)?,
                    Family::ElementaryAbelian => p(0)?.checked_pow(p(1)? as u32)?,
                    Family::Symmetric => factorial(p(0)?)?,
                    Family::Alternating => {
                        let n = p(0)?;
                        if n < 2 {
                            1
                        } else {
                            factorial(n)? / 2
                        }
                    }
                    Family::Sl2 | Family::Pgl2 => {
                        let q = p(0)?;
                        q.checked_mul(q.checked_mul(q)?.checked_sub(1)?)?
                    }
                    Family::Psl2 => {
                        let q = p(0)?;
                        q.checked_mul(q.checked_mul(q)?.checked_sub(1)?)? / crate::numtheory::gcd(2, q.checked_sub(1)?)
                    }
                    Family::BinaryOctahedral => 48,
                })
            }
            GroupSpec::Product(a, b) => a.expected_order()?.checked_mul(b.expected_order()?),
            GroupSpec::Semidirect { normal, acting, .. } => normal.expected_order()?.checked_mul(acting.expected_order()?),
            GroupSpec::SubgroupOf { order, .. } => Some(*order as u64),
            GroupSpec::Perm(_) | GroupSpec::Matrix { .. } => None,
        }
    }
}

fn factorial(n: u64) -> Option<u64> {
    (1..=n).try_fold(1u64, |acc, k| acc.checked_mul(k))
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Family { family, params } => {
                write!(f, "{}", family.keyword())?;
                for p in params {
                    write!(f, ":{p}")?;
                }
                Ok(())
            }
            GroupSpec::Perm(gens) => {
                write!(f, "perm:")?;
                for (i, g) in gens.iter().enumerate() {
                    if i > 0 {
                        write!(f, ";")?;
                    }
                    if g.is_empty() {
                        write!(f, "()")?;
                    }
                    for cycle in g {
                        write!(f, "({})", join(cycle, ","))?;
                    }
                }
                Ok(())
            }
            GroupSpec::Matrix { q, gens } => {
                let gens: Vec<String> = gens.iter().map(|m| join(m, ",")).collect();
                write!(f, "matrix:{q}:{}", gens.join(";"))
            }
            GroupSpec::Product(a, b) => write!(f, "product:{a}*{b}"),
            GroupSpec::Semidirect { normal, acting, action } => {
                write!(f, "semidirect:{normal}:{acting}:")?;
                match action {
                    ActionSpec::Exponents(e) => write!(f, "exp={}", join(e, ",")),
                    ActionSpec::Matrices(ms) => {
                        let ms: Vec<String> = ms.iter().map(|m| join(m, ",")).collect();
                        write!(f, "mat={}", ms.join(";"))
                    }
                }
            }
            GroupSpec::SubgroupOf { parent, order, index } => write!(f, "subgroup:{parent}:{order}:{index}"),
        }
    }
}

impl std::str::FromStr for GroupSpec {
    type Err = GroupError;
    fn from_str(s: &str) -> Result<Self> {
        parse_spec(s)
    }
}

/// Parse a spec; the whole input must be consumed.
pub fn parse_spec(text: &str) -> Result<GroupSpec> {
    let mut p = Parser {
        s: text.trim().as_bytes(),
        pos: 0,
    };
    let spec = p.spec()?;
    if p.pos != p.s.len() {
        return Err(p.error("trailing input"));
    }
    Ok(spec)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> GroupError {
        GroupError::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", c as char)))
        }
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.s[start..self.pos]).into_owned()
    }

    fn uint(&mut self) -> Result<u64> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a non-negative integer"));
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| GroupError::Parse {
                pos: start,
                msg: "integer out of range".into(),
            })
    }

    fn int(&mut self) -> Result<i64> {
        let neg = self.eat(b'-');
        let start = self.pos;
        let v = self.uint()?;
        let v = i64::try_from(v).map_err(|_| GroupError::Parse {
            pos: start,
            msg: "integer out of range".into(),
        })?;
        Ok(if neg { -v } else { v })
    }

    fn int_list(&mut self) -> Result<Vec<i64>> {
        let mut v = vec![self.int()?];
        while self.eat(b',') {
            v.push(self.int()?);
        }
        Ok(v)
    }

    fn spec(&mut self) -> Result<GroupSpec> {
        let start = self.pos;
        let word = self.ident();
        match word.as_str() {
            "perm" => {
                self.expect(b':')?;
                self.perm()
            }
            "matrix" => {
                self.expect(b':')?;
                let q = self.uint()? as u32;
                self.expect(b':')?;
                let mut gens = Vec::new();
                loop {
                    let at = self.pos;
                    let entries = self.int_list()?;
                    let m: [i64; 4] = entries.try_into().map_err(|_| GroupError::Parse {
                        pos: at,
                        msg: "a 2x2 matrix needs exactly 4 entries".into(),
                    })?;
                    gens.push(m);
                    if !self.eat(b';') {
                        break;
                    }
                }
                Ok(GroupSpec::Matrix { q, gens })
            }
            "product" => {
                self.expect(b':')?;
                let a = self.spec()?;
                self.expect(b'*')?;
                let b = self.spec()?;
                Ok(GroupSpec::product(a, b))
            }
            "semidirect" => {
                self.expect(b':')?;
                let normal = self.spec()?;
                self.expect(b':')?;
                let acting = self.spec()?;
                self.expect(b':')?;
                let key = self.ident();
                self.expect(b'=')?;
                let action = match key.as_str() {
                    "exp" => ActionSpec::Exponents(self.int_list()?),
                    "mat" => {
                        let mut ms = vec![self.int_list()?];
                        while self.eat(b';') {
                            ms.push(self.int_list()?);
                        }
                        ActionSpec::Matrices(ms)
                    }
                    _ => return Err(self.error("expected 'exp=' or 'mat='")),
                };
                Ok(GroupSpec::semidirect(normal, acting, action))
            }
            "subgroup" => {
                self.expect(b':')?;
                let parent = self.spec()?;
                self.expect(b':')?;
                let order = self.uint()? as usize;
                self.expect(b':')?;
                let index = self.uint()? as usize;
                Ok(GroupSpec::SubgroupOf {
                    parent: Box::new(parent),
                    order,
                    index,
                })
            }
            other => {
                let family = Family::from_keyword(other).ok_or(GroupError::Parse {
                    pos: start,
                    msg: format!("unknown group kind '{other}'"),
                })?;
                let mut params = Vec::new();
                for _ in 0..family.arity() {
                    self.expect(b':')?;
                    params.push(self.uint()?);
                }
                Ok(GroupSpec::Family { family, params })
            }
        }
    }

    fn perm(&mut self) -> Result<GroupSpec> {
        let mut gens = Vec::new();
        // An empty generator list denotes the trivial group.
        if self.peek() != Some(b'(') {
            return Ok(GroupSpec::Perm(gens));
        }
        loop {
            let mut cycles = Vec::new();
            while self.eat(b'(') {
                if self.eat(b')') {
                    continue;
                }
                let mut cycle = Vec::new();
                loop {
                    cycle.push(u32::try_from(self.uint()?).map_err(|_| self.error("point out of range"))?);
                    if !self.eat(b',') {
                        break;
                    }
                }
                self.expect(b')')?;
                cycles.push(cycle);
            }
            gens.push(cycles);
            if !self.eat(b';') {
                break;
            }
            if self.peek() != Some(b'(') {
                return Err(self.error("expected '(' after ';'"));
            }
        }
        Ok(GroupSpec::Perm(gens))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_documented_examples() {
        let q = parse_spec("quaternion:32").unwrap();
        assert_eq!(q, GroupSpec::family(Family::Quaternion, &[32]));

        let s = parse_spec("semidirect:cyclic:7:cyclic:3:exp=2").unwrap();
        assert_eq!(
            s,
            GroupSpec::semidirect(
                GroupSpec::family(Family::Cyclic, &[7]),
                GroupSpec::family(Family::Cyclic, &[3]),
                ActionSpec::Exponents(vec![2])
            )
        );

        let p = parse_spec("perm:(1,2,3)(4,5);(1,4)").unwrap();
        assert_eq!(p, GroupSpec::Perm(vec![vec![vec![1, 2, 3], vec![4, 5]], vec![vec![1, 4]]]));
        assert_eq!(p.to_string(), "perm:(1,2,3)(4,5);(1,4)");
    }

    #[test]
    fn nested_products_and_actions() {
        for text in [
            "product:cyclic:3*quaternion:8",
            "product:product:cyclic:2*cyclic:2*dihedral:8",
            "semidirect:elementary_abelian:3:2:quaternion:8:mat=0,1,2,0;1,1,1,2",
            "semidirect:cyclic:5:quaternion:16:exp=1,-1",
            "matrix:5:1,1,0,1;0,-1,1,0",
            "subgroup:sl2:7:48:0",
            "perm:",
            "perm:();(1,2)",
            "binary_octahedral",
        ] {
            let spec = parse_spec(text).unwrap();
            assert_eq!(spec.to_string(), text);
        }
    }

    #[test]
    fn parse_errors_carry_positions() {
        match parse_spec("cyclic:") {
            Err(GroupError::Parse { pos, .. }) => assert_eq!(pos, 7),
            other => panic!("unexpected {other:?}"),
        }
        match parse_spec("dodecahedral:5") {
            Err(GroupError::Parse { pos, .. }) => assert_eq!(pos, 0),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_spec("cyclic:4 x"), Err(GroupError::Parse { .. })));
        assert!(matches!(parse_spec("product:cyclic:2"), Err(GroupError::Parse { .. })));
        assert!(matches!(parse_spec("matrix:5:1,2,3"), Err(GroupError::Parse { .. })));
        assert!(matches!(
            parse_spec("semidirect:cyclic:7:cyclic:3:foo=2"),
            Err(GroupError::Parse { .. })
        ));
    }

    #[test]
    fn expected_orders() {
        let o = |s: &str| parse_spec(s).unwrap().expected_order();
        assert_eq!(o("psl2:7"), Some(168));
        assert_eq!(o("psl2:8"), Some(504));
        assert_eq!(o("pgl2:7"), Some(336));
        assert_eq!(o("alternating:5"), Some(60));
        assert_eq!(o("product:cyclic:3*quaternion:8"), Some(24));
        assert_eq!(o("perm:(1,2)"), None);
    }
}
