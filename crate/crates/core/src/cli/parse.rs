//! Parser for link expressions.
//!
//! ```text
//! link   := params | hopf | alias
//! params := "L(" int "," int ";" int "," int [";" sign ["," sign]] ")"
//! hopf   := ["#"] [int] "H" sign { "#" [int] "H" sign }
//! alias  := ("T" | "P") "(" int { "," int } ")" { "'" }
//! sign   := "+" | "-"
//! ```
//!
//! Whitespace is ignored everywhere. Error positions are byte offsets into
//! the input.

use crate::error::{Error, Result};
use crate::link::{AliasFamily, RawSeifertLink, SeifertLink, Sign};

/// A parsed but not yet normalized link expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinkExpr {
    Params(RawSeifertLink),
    Alias { family: AliasFamily, parameters: Vec<i64> },
}

impl LinkExpr {
    pub fn to_link(&self) -> Result<SeifertLink> {
        match self {
            LinkExpr::Params(raw) => raw.normalize(),
            LinkExpr::Alias { family, parameters } => crate::link::resolve_alias(*family, parameters),
        }
    }
}

/// Parses and normalizes in one step.
pub fn parse_and_normalize(text: &str) -> Result<SeifertLink> {
    parse_link(text)?.to_link()
}

pub fn parse_link(text: &str) -> Result<LinkExpr> {
    let mut p = Parser::new(text);
    let expr = match p.peek() {
        Some((_, 'L')) => p.params()?,
        Some((_, 'T' | 'P')) => p.alias()?,
        Some((_, '#' | 'H' | '0'..='9')) => p.hopf()?,
        Some((pos, c)) => return Err(syntax(pos, format!("unexpected `{c}`, expected a link"))),
        None => return Err(syntax(text.len(), "empty input")),
    };
    if let Some((pos, c)) = p.peek() {
        return Err(syntax(pos, format!("unexpected trailing `{c}`")));
    }
    Ok(expr)
}

fn syntax(position: usize, message: impl Into<String>) -> Error {
    Error::Syntax { position, message: message.into() }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser { text, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.text[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<(usize, char)> {
        self.skip_ws();
        self.text[self.pos..].chars().next().map(|c| (self.pos, c))
    }

    fn bump(&mut self) -> Option<char> {
        let (_, c) = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn eat(&mut self, want: char) -> bool {
        if self.peek().is_some_and(|(_, c)| c == want) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some((_, c)) if c == want => {
                self.bump();
                Ok(())
            }
            Some((pos, c)) => Err(syntax(pos, format!("expected `{want}`, found `{c}`"))),
            None => Err(syntax(self.text.len(), format!("expected `{want}`, found end of input"))),
        }
    }

    fn int(&mut self) -> Result<i64> {
        let start = match self.peek() {
            Some((pos, _)) => pos,
            None => return Err(syntax(self.text.len(), "expected an integer, found end of input")),
        };
        let negative = self.eat('-');
        if !negative {
            self.eat('+');
        }
        self.skip_ws();
        let digits_start = self.pos;
        let digits: String = self.text[self.pos..].chars().take_while(char::is_ascii_digit).collect();
        if digits.is_empty() {
            return Err(syntax(digits_start, "expected an integer"));
        }
        self.pos += digits.len();
        let value: i64 = digits.parse().map_err(|_| syntax(start, "integer out of range"))?;
        Ok(if negative { -value } else { value })
    }

    fn sign(&mut self) -> Result<Sign> {
        match self.peek() {
            Some((_, '+')) => {
                self.bump();
                Ok(Sign::Plus)
            }
            Some((_, '-')) => {
                self.bump();
                Ok(Sign::Minus)
            }
            Some((pos, c)) => Err(syntax(pos, format!("expected `+` or `-`, found `{c}`"))),
            None => Err(syntax(self.text.len(), "expected `+` or `-`, found end of input")),
        }
    }

    fn params(&mut self) -> Result<LinkExpr> {
        self.expect('L')?;
        self.expect('(')?;
        let p = self.int()?;
        self.expect(',')?;
        let q = self.int()?;
        self.expect(';')?;
        let k = self.int()?;
        self.expect(',')?;
        let w = self.int()?;
        let raw = if self.eat(';') {
            let eps1 = self.sign()?;
            if self.eat(',') {
                let eps2 = self.sign()?;
                RawSeifertLink::TwoCore { p, q, k, w, eps1, eps2 }
            } else {
                RawSeifertLink::OneCore { p, q, k, w, eps: eps1 }
            }
        } else {
            RawSeifertLink::ZeroCore { p, q, k, w }
        };
        self.expect(')')?;
        Ok(LinkExpr::Params(raw))
    }

    fn hopf_term(&mut self) -> Result<(u32, Sign)> {
        let count = match self.peek() {
            Some((pos, '0'..='9')) => {
                let v = self.int()?;
                u32::try_from(v).map_err(|_| syntax(pos, "too many Hopf summands"))?
            }
            _ => 1,
        };
        self.expect('H')?;
        Ok((count, self.sign()?))
    }

    fn hopf(&mut self) -> Result<LinkExpr> {
        let (mut plus, mut minus) = (0u32, 0u32);
        self.eat('#');
        loop {
            let (count, sign) = self.hopf_term()?;
            match sign {
                Sign::Plus => plus += count,
                Sign::Minus => minus += count,
            }
            if !self.eat('#') {
                break;
            }
        }
        Ok(LinkExpr::Params(RawSeifertLink::HopfSum { plus, minus }))
    }

    fn alias(&mut self) -> Result<LinkExpr> {
        let start = self.peek().map_or(self.pos, |(p, _)| p);
        let head = self.bump().expect("caller checked the head");
        self.expect('(')?;
        let mut parameters = vec![self.int()?];
        while self.eat(',') {
            parameters.push(self.int()?);
        }
        self.expect(')')?;
        let mut primes = 0;
        while self.eat('\'') {
            primes += 1;
        }
        let family = match (head, primes) {
            ('T', 0) => AliasFamily::Torus,
            ('T', 1) => AliasFamily::TorusReoriented,
            ('P', 0) => AliasFamily::Pretzel,
            ('P', 1) => AliasFamily::PretzelReoriented1,
            ('P', 2) => AliasFamily::PretzelReoriented2,
            _ => {
                let name = &self.text[start..self.pos];
                return Err(Error::UnknownAlias(name.split_whitespace().collect()));
            }
        };
        Ok(LinkExpr::Alias { family, parameters })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::link::Shape;

    #[test]
    fn parses_parameters() {
        assert_eq!(
            parse_link("L(2,3;1,1;-)").unwrap(),
            LinkExpr::Params(RawSeifertLink::OneCore { p: 2, q: 3, k: 1, w: 1, eps: Sign::Minus })
        );
        assert_eq!(
            parse_link(" L ( 5 , 3 ; 2 , -2 ; + , - ) ").unwrap(),
            LinkExpr::Params(RawSeifertLink::TwoCore {
                p: 5,
                q: 3,
                k: 2,
                w: -2,
                eps1: Sign::Plus,
                eps2: Sign::Minus
            })
        );
    }

    #[test]
    fn parses_aliases() {
        let l = parse_and_normalize("P(-2,2,6)'").unwrap();
        assert_eq!(l, SeifertLink::one_core(1, 3, 2, 0, Sign::Plus).unwrap());
        assert_eq!(parse_and_normalize("T(3,5)").unwrap(), SeifertLink::zero_core(3, 5, 1, 1).unwrap());
        assert_eq!(parse_and_normalize("T(4,6)").unwrap(), SeifertLink::zero_core(2, 3, 2, 2).unwrap());
        assert_eq!(
            parse_and_normalize("P(-2,2,3)'").unwrap(),
            SeifertLink::one_core(2, 3, 1, 1, Sign::Minus).unwrap()
        );
        assert!(matches!(parse_link("T(2,3)'''"), Err(Error::UnknownAlias(_))));
        assert!(matches!(parse_and_normalize("P(-2,5,7)"), Err(Error::UnknownAlias(_))));
    }

    #[test]
    fn parses_hopf_sums() {
        let l = parse_and_normalize("#2 H+ # 1 H-").unwrap();
        assert_eq!(*l.shape(), Shape::HopfSum { plus: 2, minus: 1 });
        assert_eq!(parse_and_normalize("H-").unwrap(), SeifertLink::hopf());
        assert_eq!(*parse_and_normalize("#3H+").unwrap().shape(), Shape::HopfSum { plus: 3, minus: 0 });
    }

    #[test]
    fn reports_positions() {
        assert_eq!(
            parse_link("L(2,3;1)"),
            Err(Error::Syntax { position: 7, message: "expected `,`, found `)`".into() })
        );
        assert!(matches!(parse_link("L(2,3;1,1;*)"), Err(Error::Syntax { position: 10, .. })));
        assert!(matches!(parse_link(""), Err(Error::Syntax { position: 0, .. })));
        assert!(matches!(parse_link("L(2,3;1,1) x"), Err(Error::Syntax { position: 11, .. })));
        assert!(matches!(parse_link("Q(1)"), Err(Error::Syntax { position: 0, .. })));
    }
}
