//! Parsers for the textual group and ring grammars.
//!
//! Both grammars share a tokenizer and the product syntax
//! `expr := term ('x' term)*`, `term := atom | '(' expr ')'`, with
//! whitespace ignored everywhere. The atoms are:
//!
//! * groups: `C<n>`, `D<m>` (m even), `Q8`, `S<n>`, `Hol(<n>)`,
//!   `AGL1(<q>)`, `GL2(<q>)`, `SL2(<q>)`, `UC(<q>)`
//! * rings: `Z<n>`, `F<q>`, `M(<k>,<ring>)`, `U(<k>,<ring>)`,
//!   `TP(<ring>,<k>)`, `GR(<t>,<group>)`, `End(<d1>,...,<dr>)`
//!
//! Printing a parsed expression (`Display` on the expression types) and
//! re-parsing gives the same tree back; parenthesization is only needed to
//! override the flat left-associative product.

use std::fmt;

use finalg::groups::GroupExpr;
use finalg::rings::RingExpr;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input where the problem starts.
    pub position: usize,
    /// What the parser would have accepted here.
    pub expected: String,
    /// What it saw instead.
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at offset {}: expected {}, found {}",
            self.position, self.expected, self.found
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Word(String),
    Number(u64),
    LParen,
    RParen,
    Comma,
    Cross,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Word(w) => format!("'{w}'"),
            Tok::Number(n) => format!("number {n}"),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Comma => "','".into(),
            Tok::Cross => "'x'".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
        } else if c == 'x' {
            toks.push((Tok::Cross, i));
            i += 1;
        } else if c == '(' {
            toks.push((Tok::LParen, i));
            i += 1;
        } else if c == ')' {
            toks.push((Tok::RParen, i));
            i += 1;
        } else if c == ',' {
            toks.push((Tok::Comma, i));
            i += 1;
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && (bytes[i] as char).is_ascii_alphabetic() && bytes[i] != b'x' {
                i += 1;
            }
            toks.push((Tok::Word(text[start..i].to_string()), start));
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                i += 1;
            }
            let n: u64 = text[start..i].parse().map_err(|_| ParseError {
                position: start,
                expected: "a number that fits in 64 bits".into(),
                found: format!("'{}'", &text[start..i]),
            })?;
            toks.push((Tok::Number(n), start));
        } else {
            return Err(ParseError {
                position: i,
                expected: "a letter, digit, '(', ')', ',' or 'x'".into(),
                found: format!("'{c}'"),
            });
        }
    }
    toks.push((Tok::End, text.len()));
    Ok(toks)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Parser, ParseError> {
        Ok(Parser {
            toks: tokenize(text)?,
            at: 0,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn err(&self, expected: impl Into<String>) -> ParseError {
        ParseError {
            position: self.pos(),
            expected: expected.into(),
            found: self.peek().describe(),
        }
    }

    fn expect_number(&mut self, what: &str) -> Result<u64, ParseError> {
        match self.peek() {
            Tok::Number(n) => {
                let n = *n;
                self.bump();
                Ok(n)
            }
            _ => Err(self.err(what)),
        }
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.err(what))
        }
    }

    fn expect_end(&self) -> Result<(), ParseError> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            Err(self.err("end of input or 'x'"))
        }
    }

    /// `( <n> )`
    fn parenthesized_number(&mut self, what: &str) -> Result<u64, ParseError> {
        self.expect(Tok::LParen, "'('")?;
        let n = self.expect_number(what)?;
        self.expect(Tok::RParen, "')'")?;
        Ok(n)
    }

    // -- groups ------------------------------------------------------------

    fn group_expr(&mut self) -> Result<GroupExpr, ParseError> {
        let mut acc = self.group_term()?;
        while *self.peek() == Tok::Cross {
            self.bump();
            let rhs = self.group_term()?;
            acc = GroupExpr::product(acc, rhs);
        }
        Ok(acc)
    }

    fn group_term(&mut self) -> Result<GroupExpr, ParseError> {
        if *self.peek() == Tok::LParen {
            self.bump();
            let inner = self.group_expr()?;
            self.expect(Tok::RParen, "')'")?;
            return Ok(inner);
        }
        self.group_atom()
    }

    fn group_atom(&mut self) -> Result<GroupExpr, ParseError> {
        const MENU: &str =
            "a group atom: C<n>, D<m>, Q8, S<n>, Hol(<n>), AGL1(<q>), GL2(<q>), SL2(<q>), UC(<q>)";
        let pos = self.pos();
        let word = match self.peek() {
            Tok::Word(w) => w.clone(),
            _ => return Err(self.err(MENU)),
        };
        self.bump();
        match word.as_str() {
            "C" => {
                let n = self.expect_number("a cyclic group order")?;
                if n == 0 {
                    return Err(ParseError {
                        position: pos,
                        expected: "a positive cyclic group order".into(),
                        found: "C0".into(),
                    });
                }
                Ok(GroupExpr::Cyclic(n))
            }
            "D" => {
                let m = self.expect_number("a dihedral group order")?;
                if m < 2 || m % 2 != 0 {
                    return Err(ParseError {
                        position: pos,
                        expected: "an even dihedral group order (D2, D4, D6, …)".into(),
                        found: format!("D{m}"),
                    });
                }
                Ok(GroupExpr::Dihedral(m))
            }
            "Q" => {
                let n = self.expect_number("8 (only Q8 is supported)")?;
                if n != 8 {
                    return Err(ParseError {
                        position: pos,
                        expected: "Q8 (the only supported quaternion group)".into(),
                        found: format!("Q{n}"),
                    });
                }
                Ok(GroupExpr::Quaternion)
            }
            "S" => {
                let n = self.expect_number("a symmetric group degree")?;
                let n = u32::try_from(n).map_err(|_| ParseError {
                    position: pos,
                    expected: "a small symmetric group degree".into(),
                    found: format!("S{n}"),
                })?;
                Ok(GroupExpr::Symmetric(n))
            }
            "Hol" => Ok(GroupExpr::Holomorph(
                self.parenthesized_number("a modulus n for Hol(n)")?,
            )),
            "AGL" => {
                let deg = self.expect_number("1 (only AGL1 is supported)")?;
                if deg != 1 {
                    return Err(ParseError {
                        position: pos,
                        expected: "AGL1 (degree-one affine groups only)".into(),
                        found: format!("AGL{deg}"),
                    });
                }
                Ok(GroupExpr::Affine(
                    self.parenthesized_number("a field order q for AGL1(q)")?,
                ))
            }
            "GL" => {
                let deg = self.expect_number("2 (only GL2 is supported)")?;
                if deg != 2 {
                    return Err(ParseError {
                        position: pos,
                        expected: "GL2 (2×2 matrix groups only)".into(),
                        found: format!("GL{deg}"),
                    });
                }
                Ok(GroupExpr::GeneralLinear2(
                    self.parenthesized_number("a field order q for GL2(q)")?,
                ))
            }
            "SL" => {
                let deg = self.expect_number("2 (only SL2 is supported)")?;
                if deg != 2 {
                    return Err(ParseError {
                        position: pos,
                        expected: "SL2 (2×2 matrix groups only)".into(),
                        found: format!("SL{deg}"),
                    });
                }
                Ok(GroupExpr::SpecialLinear2(
                    self.parenthesized_number("a field order q for SL2(q)")?,
                ))
            }
            "UC" => Ok(GroupExpr::UnitCircle(
                self.parenthesized_number("a field order q for UC(q)")?,
            )),
            other => Err(ParseError {
                position: pos,
                expected: MENU.into(),
                found: format!("'{other}'"),
            }),
        }
    }

    // -- rings -------------------------------------------------------------

    fn ring_expr(&mut self) -> Result<RingExpr, ParseError> {
        let mut acc = self.ring_term()?;
        while *self.peek() == Tok::Cross {
            self.bump();
            let rhs = self.ring_term()?;
            acc = RingExpr::product(acc, rhs);
        }
        Ok(acc)
    }

    fn ring_term(&mut self) -> Result<RingExpr, ParseError> {
        if *self.peek() == Tok::LParen {
            self.bump();
            let inner = self.ring_expr()?;
            self.expect(Tok::RParen, "')'")?;
            return Ok(inner);
        }
        self.ring_atom()
    }

    fn ring_atom(&mut self) -> Result<RingExpr, ParseError> {
        const MENU: &str = "a ring atom: Z<n>, F<q>, M(<k>,<ring>), U(<k>,<ring>), \
                            TP(<ring>,<k>), GR(<t>,<group>), End(<d1>,...,<dr>)";
        let pos = self.pos();
        let word = match self.peek() {
            Tok::Word(w) => w.clone(),
            _ => return Err(self.err(MENU)),
        };
        self.bump();
        match word.as_str() {
            "Z" => Ok(RingExpr::Zmod(self.expect_number("a modulus for Z<n>")?)),
            "F" => Ok(RingExpr::Fq(
                self.expect_number("a prime-power order for F<q>")?,
            )),
            "M" | "U" => {
                self.expect(Tok::LParen, "'('")?;
                let k = self.expect_number("a matrix dimension")?;
                let k = usize::try_from(k).map_err(|_| ParseError {
                    position: pos,
                    expected: "a small matrix dimension".into(),
                    found: format!("{k}"),
                })?;
                self.expect(Tok::Comma, "','")?;
                let base = self.ring_expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(if word == "M" {
                    RingExpr::matrix(k, base)
                } else {
                    RingExpr::upper_triangular(k, base)
                })
            }
            "TP" => {
                self.expect(Tok::LParen, "'('")?;
                let base = self.ring_expr()?;
                self.expect(Tok::Comma, "','")?;
                let k = self.expect_number("a truncation exponent")?;
                let k = usize::try_from(k).map_err(|_| ParseError {
                    position: pos,
                    expected: "a small truncation exponent".into(),
                    found: format!("{k}"),
                })?;
                self.expect(Tok::RParen, "')'")?;
                Ok(RingExpr::trunc_poly(base, k))
            }
            "GR" => {
                self.expect(Tok::LParen, "'('")?;
                let t = self.expect_number("a coefficient modulus t")?;
                self.expect(Tok::Comma, "','")?;
                let group = self.group_expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(RingExpr::GroupRing(t, group))
            }
            "End" => {
                self.expect(Tok::LParen, "'('")?;
                let mut dims = vec![self.expect_number("a cyclic factor order")?];
                while *self.peek() == Tok::Comma {
                    self.bump();
                    dims.push(self.expect_number("a cyclic factor order")?);
                }
                self.expect(Tok::RParen, "')'")?;
                Ok(RingExpr::EndAb(dims))
            }
            other => Err(ParseError {
                position: pos,
                expected: MENU.into(),
                found: format!("'{other}'"),
            }),
        }
    }
}

/// Parse a group expression such as `Hol(12)` or `D8 x D6`.
pub fn parse_group_expr(text: &str) -> Result<GroupExpr, ParseError> {
    let mut p = Parser::new(text)?;
    let e = p.group_expr()?;
    p.expect_end()?;
    Ok(e)
}

/// Parse a ring expression such as `Z4 x M(2,F2)` or `GR(2,SL2(3))`.
pub fn parse_ring_expr(text: &str) -> Result<RingExpr, ParseError> {
    let mut p = Parser::new(text)?;
    let e = p.ring_expr()?;
    p.expect_end()?;
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_grammar_round_trips() {
        for text in [
            "C12",
            "D8 x D6",
            "Q8",
            "S4",
            "Hol(12)",
            "AGL1(4)",
            "GL2(3)",
            "SL2(5)",
            "UC(9)",
            "C2 x C2 x C4",
            "Hol(8) x SL2(3)",
        ] {
            let e = parse_group_expr(text).unwrap();
            assert_eq!(e.to_string(), text, "canonical form should round-trip");
            assert_eq!(parse_group_expr(&e.to_string()).unwrap(), e);
        }
    }

    #[test]
    fn ring_grammar_round_trips() {
        for text in [
            "Z4",
            "F9",
            "M(2,F2)",
            "U(3,F2)",
            "TP(F3,2)",
            "GR(2,D6)",
            "GR(4,SL2(3))",
            "End(4,2)",
            "Z4 x M(2,F2)",
            "M(2,TP(F2,2))",
        ] {
            let e = parse_ring_expr(text).unwrap();
            assert_eq!(e.to_string(), text);
            assert_eq!(parse_ring_expr(&e.to_string()).unwrap(), e);
        }
    }

    #[test]
    fn whitespace_and_parens_are_free() {
        assert_eq!(
            parse_group_expr(" ( D8 )x(D6 x C2) ").unwrap().to_string(),
            "D8 x D6 x C2"
        );
        assert_eq!(
            parse_ring_expr("GR( 2 , SL2( 3 ) )").unwrap(),
            parse_ring_expr("GR(2,SL2(3))").unwrap()
        );
        // Product binds left-to-right; explicit parens on the right build a
        // different (but isomorphic) tree.
        let left = parse_ring_expr("Z2 x Z3 x Z5").unwrap();
        let right = parse_ring_expr("Z2 x (Z3 x Z5)").unwrap();
        assert_ne!(left, right);
    }

    #[test]
    fn odd_dihedral_is_a_parse_error() {
        let err = parse_group_expr("D7").unwrap_err();
        assert_eq!(err.position, 0);
        assert!(err.expected.contains("even"), "{err}");
        assert!(parse_group_expr("D0").is_err());
        assert!(parse_group_expr("D2").is_ok());
    }

    #[test]
    fn errors_carry_position_and_expectation() {
        let err = parse_ring_expr("M(2,F2").unwrap_err();
        assert_eq!(err.position, 6);
        assert!(err.expected.contains("')'"), "{err}");

        let err = parse_ring_expr("Z4 y Z2").unwrap_err();
        assert_eq!(err.position, 3);

        let err = parse_group_expr("Q16").unwrap_err();
        assert!(err.expected.contains("Q8"), "{err}");

        let err = parse_group_expr("GL3(2)").unwrap_err();
        assert!(err.expected.contains("GL2"), "{err}");

        let err = parse_ring_expr("Hol(4)").unwrap_err();
        assert!(err.expected.contains("ring atom"), "{err}");

        let err = parse_group_expr("").unwrap_err();
        assert!(err.found.contains("end of input"), "{err}");
    }

    #[test]
    fn product_without_spaces() {
        assert_eq!(
            parse_ring_expr("Z4xM(2,F2)").unwrap().to_string(),
            "Z4 x M(2,F2)"
        );
    }
}
