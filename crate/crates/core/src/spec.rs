// SPDX-License-Identifier: Apache-2.0

//! The group expression language accepted on the command line.
//!
//! ```text
//! expr := atom ('x' atom)*
//! atom := 'Z' INT | 'D' INT | 'Q8'
//!       | 'Ab[' p ';' INT (',' INT)* ']' ('*' 'Ab[' ... ']')*
//!       | 'SD(' p ',' q ',' n (',' 'r=' INT)? ')'
//!       | 'file:' PATH
//! ```
//!
//! `D` takes the group order, so `D6` is the symmetry group of a triangle.
//! Whitespace between tokens is ignored. `file:` takes the rest of the
//! input as its path, so it can only be the last atom.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::automorphisms::AbelianType;
use crate::constructors::{self, SemidirectParams};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::limits::Limits;
use crate::scanner::ingest;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SpecAst {
    Cyclic(u64),
    /// Stores the group order `2n`.
    Dihedral(u64),
    Q8,
    Abelian(AbelianType),
    Semidirect(SemidirectParams),
    /// At least two factors, none of them a product.
    Product(Vec<SpecAst>),
    FromFile(String),
}

impl SpecAst {
    /// Joins factors into a flat product; a single factor is returned as is.
    pub fn product(factors: Vec<SpecAst>) -> SpecAst {
        let mut flat = Vec::with_capacity(factors.len());
        for f in factors {
            match f {
                SpecAst::Product(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        if flat.len() == 1 {
            flat.pop().unwrap()
        } else {
            SpecAst::Product(flat)
        }
    }

    pub fn canonical_string(&self) -> String {
        self.to_string()
    }

    /// Order without building the table; `None` for files or on overflow.
    pub fn order(&self) -> Option<u128> {
        match self {
            SpecAst::Cyclic(n) | SpecAst::Dihedral(n) => Some(*n as u128),
            SpecAst::Q8 => Some(8),
            SpecAst::Abelian(t) => t.order_u128(),
            SpecAst::Semidirect(s) => Some(s.order()),
            SpecAst::Product(fs) => fs.iter().try_fold(1u128, |acc, f| acc.checked_mul(f.order()?)),
            SpecAst::FromFile(_) => None,
        }
    }

    pub fn build(&self, limits: &Limits) -> Result<Group> {
        if let Some(order) = self.order() {
            limits.check_order(order)?;
        }
        let group = match self {
            SpecAst::Cyclic(n) => constructors::cyclic(*n as usize, limits)?,
            SpecAst::Dihedral(order) => constructors::dihedral((*order / 2) as usize, limits)?,
            SpecAst::Q8 => constructors::quaternion8(),
            SpecAst::Abelian(t) => constructors::abelian(t, limits)?,
            SpecAst::Semidirect(s) => constructors::semidirect(s, limits)?,
            SpecAst::Product(fs) => {
                let mut acc = fs[0].build(limits)?;
                for f in &fs[1..] {
                    acc = constructors::direct_product(&acc, &f.build(limits)?, limits)?;
                }
                acc
            }
            SpecAst::FromFile(path) => ingest::read_cayley_file(path, limits)?,
        };
        Ok(group.with_label(self.canonical_string()))
    }
}

impl fmt::Display for SpecAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecAst::Cyclic(n) => write!(f, "Z{n}"),
            SpecAst::Dihedral(order) => write!(f, "D{order}"),
            SpecAst::Q8 => write!(f, "Q8"),
            SpecAst::Abelian(t) if t.primes().next().is_none() => write!(f, "Z1"),
            SpecAst::Abelian(t) => {
                for (i, (p, exps)) in t.iter().enumerate() {
                    if i > 0 {
                        write!(f, "*")?;
                    }
                    let exps: Vec<String> = exps.iter().map(u32::to_string).collect();
                    write!(f, "Ab[{p};{}]", exps.join(","))?;
                }
                Ok(())
            }
            SpecAst::Semidirect(s) => write!(f, "SD({},{},{},r={})", s.p(), s.q(), s.n(), s.r()),
            SpecAst::Product(fs) => {
                for (i, factor) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, "x")?;
                    }
                    write!(f, "{factor}")?;
                }
                Ok(())
            }
            SpecAst::FromFile(path) => write!(f, "file:{path}"),
        }
    }
}

impl FromStr for SpecAst {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

pub fn parse(input: &str) -> Result<SpecAst> {
    Parser { src: input.as_bytes(), pos: 0 }.expr()
}

/// Like [`parse`] but for raw bytes; invalid UTF-8 is a syntax error.
pub fn parse_bytes(input: &[u8]) -> Result<SpecAst> {
    match std::str::from_utf8(input) {
        Ok(s) => parse(s),
        Err(e) => Err(Error::Syntax { offset: e.valid_up_to(), message: "invalid UTF-8".into() }),
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn syntax<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { offset: self.pos, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(token.as_bytes()) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            self.syntax(format!("expected '{token}'"))
        }
    }

    fn int(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.syntax("expected an integer");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ASCII digits");
        match digits.parse::<u64>() {
            Ok(0) => Err(Error::Syntax { offset: start, message: "integer must be positive".into() }),
            Ok(v) => Ok(v),
            Err(_) => Err(Error::Syntax { offset: start, message: "integer too large".into() }),
        }
    }

    fn small_int(&mut self) -> Result<u32> {
        let start = self.pos;
        let v = self.int()?;
        u32::try_from(v).map_err(|_| Error::Syntax { offset: start, message: "integer too large".into() })
    }

    fn expr(&mut self) -> Result<SpecAst> {
        let mut factors = vec![self.atom()?];
        while !matches!(factors.last(), Some(SpecAst::FromFile(_))) && self.eat("x") {
            factors.push(self.atom()?);
        }
        if self.peek().is_some() {
            return self.syntax("unexpected trailing input");
        }
        Ok(SpecAst::product(factors))
    }

    fn atom(&mut self) -> Result<SpecAst> {
        if self.eat("file:") {
            let path = std::str::from_utf8(&self.src[self.pos..]).expect("input is UTF-8").trim();
            if path.is_empty() {
                return self.syntax("expected a path after 'file:'");
            }
            self.pos = self.src.len();
            return Ok(SpecAst::FromFile(path.to_string()));
        }
        if self.eat("Q8") {
            return Ok(SpecAst::Q8);
        }
        if self.eat("Ab[") {
            return self.abelian();
        }
        if self.eat("SD(") {
            return self.semidirect();
        }
        if self.eat("Z") {
            return Ok(SpecAst::Cyclic(self.int()?));
        }
        if self.eat("D") {
            let order = self.int()?;
            if order < 6 || order % 2 != 0 {
                return Err(Error::Semantic(format!("D takes the group order, which must be even and at least 6; got {order}")));
            }
            return Ok(SpecAst::Dihedral(order));
        }
        self.syntax("expected one of 'Z', 'D', 'Q8', 'Ab[', 'SD(', 'file:'")
    }

    /// Called after the first `Ab[`.
    fn abelian(&mut self) -> Result<SpecAst> {
        let mut parts: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        loop {
            let p = self.int()?;
            self.expect(";")?;
            let mut exps = vec![self.small_int()?];
            while self.eat(",") {
                exps.push(self.small_int()?);
            }
            self.expect("]")?;
            if parts.insert(p, exps).is_some() {
                return Err(Error::Semantic(format!("prime {p} appears twice in an abelian type")));
            }
            if !self.eat("*") {
                break;
            }
            self.expect("Ab[")?;
        }
        AbelianType::new(parts).map(SpecAst::Abelian).map_err(|e| match e {
            Error::InvalidArgument(m) => Error::Semantic(m),
            other => other,
        })
    }

    /// Called after `SD(`.
    fn semidirect(&mut self) -> Result<SpecAst> {
        let p = self.int()?;
        self.expect(",")?;
        let q = self.int()?;
        self.expect(",")?;
        let n = self.small_int()?;
        let r = if self.eat(",") {
            self.expect("r=")?;
            Some(self.int()?)
        } else {
            None
        };
        self.expect(")")?;
        let params = match r {
            Some(r) => SemidirectParams::new(p, q, n, r),
            None => SemidirectParams::with_default_residue(p, q, n),
        };
        params.map(SpecAst::Semidirect).map_err(|e| match e {
            Error::InvalidArgument(m) => Error::Semantic(m),
            other => other,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> SpecAst {
        parse(s).unwrap()
    }

    #[test]
    fn atoms() {
        assert_eq!(p("Z12"), SpecAst::Cyclic(12));
        assert_eq!(p("D6"), SpecAst::Dihedral(6));
        assert_eq!(p("Q8"), SpecAst::Q8);
        assert_eq!(
            p("Ab[2;1,1]*Ab[3;1]"),
            SpecAst::Abelian(AbelianType::from_pairs([(2, vec![1, 1]), (3, vec![1])]).unwrap())
        );
        assert_eq!(p("SD(3,2,2)"), SpecAst::Semidirect(SemidirectParams::new(3, 2, 2, 2).unwrap()));
        assert_eq!(p("SD(7,3,1,r=4)"), SpecAst::Semidirect(SemidirectParams::new(7, 3, 1, 4).unwrap()));
        assert_eq!(p("file: some dir/t.txt "), SpecAst::FromFile("some dir/t.txt".into()));
    }

    #[test]
    fn products() {
        assert_eq!(
            p("Z2xZ2xZ3"),
            SpecAst::Product(vec![SpecAst::Cyclic(2), SpecAst::Cyclic(2), SpecAst::Cyclic(3)])
        );
        assert_eq!(p(" Q8 x Z3 ").canonical_string(), "Q8xZ3");
        assert_eq!(p("Z3xfile:a.txt"), SpecAst::Product(vec![SpecAst::Cyclic(3), SpecAst::FromFile("a.txt".into())]));
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(p("SD(3,2,2)").canonical_string(), "SD(3,2,2,r=2)");
        assert_eq!(p("Ab[3;1]*Ab[2;1,1]").canonical_string(), "Ab[2;1,1]*Ab[3;1]");
        assert_eq!(p(" Z 12 ").canonical_string(), "Z12");
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        let offset = |s: &str| match parse(s) {
            Err(Error::Syntax { offset, .. }) => offset,
            other => panic!("{s}: expected a syntax error, got {other:?}"),
        };
        assert_eq!(offset(""), 0);
        assert_eq!(offset("Z"), 1);
        assert_eq!(offset("Z12x"), 4);
        assert_eq!(offset("Z12 Z3"), 4);
        assert_eq!(offset("Ab[2;1,1"), 8);
        assert_eq!(offset("SD(3,2)"), 6);
        assert_eq!(offset("Z0"), 1);
        assert_eq!(offset("Z99999999999999999999999"), 1);
        assert_eq!(offset("Y3"), 0);
        assert!(matches!(parse_bytes(b"Z\xff"), Err(Error::Syntax { offset: 1, .. })));
    }

    #[test]
    fn semantic_errors() {
        assert!(matches!(parse("D7"), Err(Error::Semantic(_))));
        assert!(matches!(parse("D4"), Err(Error::Semantic(_))));
        assert!(matches!(parse("Ab[4;1]"), Err(Error::Semantic(_))));
        assert!(matches!(parse("Ab[2;2,1]"), Err(Error::Semantic(_))));
        assert!(matches!(parse("Ab[2;1]*Ab[2;1]"), Err(Error::Semantic(_))));
        assert_eq!(parse("SD(7,3,1,r=3)").unwrap_err(), Error::InvalidResidue { p: 7, q: 3, r: 3 });
        assert!(matches!(parse("SD(5,3,1)"), Err(Error::InvalidResidue { .. })));
    }

    #[test]
    fn build_labels_with_canonical_string() {
        let g = p("D6 x Z5").build(&Limits::default()).unwrap();
        assert_eq!(g.order(), 30);
        assert_eq!(g.label(), Some("D6xZ5"));
        let g = p("Ab[2;1,1]").build(&Limits::default()).unwrap();
        assert!(g.is_abelian() && !g.is_cyclic());
    }

    #[test]
    fn build_respects_the_cap() {
        let err = p("Z600").build(&Limits::default()).unwrap_err();
        assert_eq!(err, Error::OrderCapExceeded { order: 600, cap: 512 });
        let err = p("Z30xZ30").build(&Limits::default()).unwrap_err();
        assert_eq!(err, Error::OrderCapExceeded { order: 900, cap: 512 });
    }
}
