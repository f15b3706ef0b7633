//! Calculator expressions over multivectors.
//!
//! ```text
//! expr   := term { ("+" | "-") term } ;
//! term   := unary { ("*" | "^" | "<|" | "|>" | ".") unary } ;
//! unary  := "-" unary | atom ;
//! atom   := number | blade | func "(" expr { "," integer } ")" | "(" expr ")" ;
//! func   := "rev" | "gi" | "grade" | "even" | "odd" ;
//! blade  := "e" digits | "e[" integer { "," integer } "]" ;
//! number := integer [ "/" integer ] | decimal ;
//! ```
//!
//! All five products share one left-associative precedence level, below
//! unary minus and above `+`/`-`. `*` is the geometric product, `^` the outer
//! product, `<|` the left contraction, `|>` the right contraction and `.` the
//! scalar product. `e312` is shorthand for `e3*e1*e2 = e[1,2,3]`; only
//! single-digit indices can be written that way.

use std::fmt;
use std::sync::Arc;

use crate::blades::{IndexSet, Sign};
use crate::error::{Error, Result};
use crate::multivector::{Multivector, Product};
use crate::scalar::{parse_scalar, Rational, Scalar};
use crate::signature::Signature;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnaryOp {
    Neg,
    Rev,
    Gi,
    Grade(i64),
    Even,
    Odd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinaryOp {
    Add,
    Sub,
    Gp,
    Op,
    Lc,
    Rc,
    Sp,
}

impl BinaryOp {
    pub fn symbol(self) -> &'static str {
        match self {
            BinaryOp::Add => "+",
            BinaryOp::Sub => "-",
            BinaryOp::Gp => "*",
            BinaryOp::Op => "^",
            BinaryOp::Lc => "<|",
            BinaryOp::Rc => "|>",
            BinaryOp::Sp => ".",
        }
    }

    fn name(self) -> &'static str {
        match self {
            BinaryOp::Add => "add",
            BinaryOp::Sub => "sub",
            BinaryOp::Gp => "gp",
            BinaryOp::Op => "op",
            BinaryOp::Lc => "lc",
            BinaryOp::Rc => "rc",
            BinaryOp::Sp => "sp",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ExprNode {
    /// Literal text, validated as `a`, `a/b` or a decimal.
    Number(String),
    /// A blade literal after sorting its indices.
    Blade { sign: Sign, set: IndexSet },
    Unary(UnaryOp, Box<ExprNode>),
    Binary(BinaryOp, Box<ExprNode>, Box<ExprNode>),
}

impl fmt::Display for ExprNode {
    /// Prefix form, e.g. `add(gp(e[1], e[2]), 2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExprNode::Number(text) => f.write_str(text),
            ExprNode::Blade { sign, set } => {
                if sign.is_negative() {
                    f.write_str("-")?;
                }
                if set.is_empty() {
                    f.write_str("e[]")
                } else {
                    write!(f, "{set}")
                }
            }
            ExprNode::Unary(op, arg) => match op {
                UnaryOp::Neg => write!(f, "neg({arg})"),
                UnaryOp::Rev => write!(f, "rev({arg})"),
                UnaryOp::Gi => write!(f, "gi({arg})"),
                UnaryOp::Grade(r) => write!(f, "grade({arg}, {r})"),
                UnaryOp::Even => write!(f, "even({arg})"),
                UnaryOp::Odd => write!(f, "odd({arg})"),
            },
            ExprNode::Binary(op, a, b) => write!(f, "{}({a}, {b})", op.name()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Number(String),
    Ident(String),
    Op(BinaryOp),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    End,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    column: usize,
}

fn lex(input: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Op(BinaryOp::Add)),
            '-' => Some(Tok::Op(BinaryOp::Sub)),
            '*' => Some(Tok::Op(BinaryOp::Gp)),
            '^' => Some(Tok::Op(BinaryOp::Op)),
            '.' => Some(Tok::Op(BinaryOp::Sp)),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '[' => Some(Tok::LBracket),
            ']' => Some(Tok::RBracket),
            ',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(tok) = single {
            out.push(Token { tok, column });
            i += 1;
            continue;
        }
        match (c, chars.get(i + 1)) {
            ('<', Some('|')) => {
                out.push(Token { tok: Tok::Op(BinaryOp::Lc), column });
                i += 2;
                continue;
            }
            ('|', Some('>')) => {
                out.push(Token { tok: Tok::Op(BinaryOp::Rc), column });
                i += 2;
                continue;
            }
            _ => {}
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i + 1 < chars.len() && chars[i] == '.' && chars[i + 1].is_ascii_digit() {
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
            } else if i < chars.len() && chars[i] == '/' {
                i += 1;
                let denom = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if i == denom {
                    return Err(Error::syntax(i + 1, "expected denominator after `/`"));
                }
            }
            let text: String = chars[start..i].iter().collect();
            if parse_scalar::<Rational>(&text).is_err() {
                return Err(Error::syntax(column, format!("invalid number `{text}`")));
            }
            out.push(Token { tok: Tok::Number(text), column });
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push(Token {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                column,
            });
            continue;
        }
        return Err(Error::syntax(column, format!("unexpected character `{c}`")));
    }
    out.push(Token {
        tok: Tok::End,
        column: chars.len() + 1,
    });
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<Token> {
        let t = self.next();
        if t.tok == tok {
            Ok(t)
        } else {
            Err(Error::syntax(t.column, format!("expected {what}")))
        }
    }

    fn expr(&mut self) -> Result<ExprNode> {
        let mut lhs = self.term()?;
        while let Tok::Op(op @ (BinaryOp::Add | BinaryOp::Sub)) = self.peek().tok {
            self.next();
            let rhs = self.term()?;
            lhs = ExprNode::Binary(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<ExprNode> {
        let mut lhs = self.unary()?;
        while let Tok::Op(op) = self.peek().tok {
            if matches!(op, BinaryOp::Add | BinaryOp::Sub) {
                break;
            }
            self.next();
            let rhs = self.unary()?;
            lhs = ExprNode::Binary(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<ExprNode> {
        if self.peek().tok == Tok::Op(BinaryOp::Sub) {
            self.next();
            let arg = self.unary()?;
            return Ok(ExprNode::Unary(UnaryOp::Neg, Box::new(arg)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<ExprNode> {
        let t = self.next();
        match t.tok {
            Tok::Number(text) => Ok(ExprNode::Number(text)),
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Tok::Ident(name) => self.ident(name, t.column),
            Tok::End => Err(Error::syntax(t.column, "unexpected end of input")),
            _ => Err(Error::syntax(t.column, "expected a number, blade or `(`")),
        }
    }

    fn ident(&mut self, name: String, column: usize) -> Result<ExprNode> {
        if name == "e" {
            return self.bracket_blade(column);
        }
        if let Some(digits) = name.strip_prefix('e') {
            if digits.chars().all(|c| c.is_ascii_digit()) {
                let indices: Vec<u32> = digits.chars().map(|c| c as u32 - '0' as u32).collect();
                return blade_literal(&indices, column);
            }
        }
        let op = match name.as_str() {
            "rev" => UnaryOp::Rev,
            "gi" => UnaryOp::Gi,
            "grade" => UnaryOp::Grade(0),
            "even" => UnaryOp::Even,
            "odd" => UnaryOp::Odd,
            _ => return Err(Error::syntax(column, format!("unknown name `{name}`"))),
        };
        self.expect(Tok::LParen, &format!("`(` after `{name}`"))?;
        let arg = self.expr()?;
        let op = if let UnaryOp::Grade(_) = op {
            self.expect(Tok::Comma, "`,` and a grade")?;
            UnaryOp::Grade(self.signed_integer()?)
        } else {
            op
        };
        self.expect(Tok::RParen, "`)`")?;
        Ok(ExprNode::Unary(op, Box::new(arg)))
    }

    fn bracket_blade(&mut self, column: usize) -> Result<ExprNode> {
        self.expect(Tok::LBracket, "`[` after `e`")?;
        let mut indices = Vec::new();
        loop {
            let t = self.next();
            let Tok::Number(text) = &t.tok else {
                return Err(Error::syntax(t.column, "expected a blade index"));
            };
            let index: u32 = text
                .parse()
                .map_err(|_| Error::syntax(t.column, format!("invalid blade index `{text}`")))?;
            indices.push(index);
            let sep = self.next();
            match sep.tok {
                Tok::Comma => continue,
                Tok::RBracket => break,
                _ => return Err(Error::syntax(sep.column, "expected `,` or `]`")),
            }
        }
        blade_literal(&indices, column)
    }

    fn signed_integer(&mut self) -> Result<i64> {
        let negative = self.peek().tok == Tok::Op(BinaryOp::Sub);
        if negative {
            self.next();
        }
        let t = self.next();
        let value = match &t.tok {
            Tok::Number(text) => text.parse::<i64>().ok(),
            _ => None,
        }
        .ok_or_else(|| Error::syntax(t.column, "expected an integer"))?;
        Ok(if negative { -value } else { value })
    }
}

fn blade_literal(indices: &[u32], column: usize) -> Result<ExprNode> {
    match IndexSet::from_product(indices) {
        Ok((sign, set)) => Ok(ExprNode::Blade { sign, set }),
        Err(Error::ZeroIndex) => Err(Error::syntax(column, "blade index 0 is not allowed")),
        Err(Error::DuplicateIndex(i)) => Err(Error::syntax(
            column,
            format!("duplicate index {i} in blade literal"),
        )),
        Err(e) => Err(e),
    }
}

pub fn parse(input: &str) -> Result<ExprNode> {
    let mut parser = Parser {
        tokens: lex(input)?,
        pos: 0,
    };
    let ast = parser.expr()?;
    let t = parser.peek();
    if t.tok != Tok::End {
        return Err(Error::syntax(t.column, "unexpected trailing input"));
    }
    Ok(ast)
}

pub fn eval<S: Scalar>(ast: &ExprNode, sig: &Arc<Signature<S>>) -> Result<Multivector<S>> {
    Ok(match ast {
        ExprNode::Number(text) => Multivector::scalar(sig, parse_scalar(text)?),
        ExprNode::Blade { sign, set } => {
            Multivector::blade(sig, set.clone())?.scale(&sign.to_scalar())
        }
        ExprNode::Unary(op, arg) => {
            let x = eval(arg, sig)?;
            match op {
                UnaryOp::Neg => -x,
                UnaryOp::Rev => x.reverse(),
                UnaryOp::Gi => x.involute(),
                UnaryOp::Grade(r) => x.grade(*r),
                UnaryOp::Even => x.even(),
                UnaryOp::Odd => x.odd(),
            }
        }
        ExprNode::Binary(op, a, b) => {
            let (x, y) = (eval(a, sig)?, eval(b, sig)?);
            match op {
                BinaryOp::Add => x.try_add(&y)?,
                BinaryOp::Sub => x.try_sub(&y)?,
                BinaryOp::Gp => x.product(&y, Product::Geometric)?,
                BinaryOp::Op => x.product(&y, Product::Outer)?,
                BinaryOp::Lc => x.product(&y, Product::LeftContraction)?,
                BinaryOp::Rc => x.product(&y, Product::RightContraction)?,
                BinaryOp::Sp => x.product(&y, Product::Scalar)?,
            }
        }
    })
}

/// Parses and evaluates in one step.
pub fn evaluate<S: Scalar>(input: &str, sig: &Arc<Signature<S>>) -> Result<Multivector<S>> {
    eval(&parse(input)?, sig)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(squares: &[i64]) -> Arc<Signature<Rational>> {
        Arc::new(Signature::from_diag(
            squares.iter().map(|q| Rational::from_integer((*q).into())).collect(),
        ))
    }

    fn column_of(input: &str) -> usize {
        match parse(input) {
            Err(Error::Syntax { column, .. }) => column,
            other => panic!("expected syntax error for {input:?}, got {other:?}"),
        }
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse("e1*e2 + 2").unwrap().to_string(), "add(gp(e[1], e[2]), 2)");
        assert_eq!(parse("e21").unwrap().to_string(), "-e[1,2]");
        assert_eq!(parse("e[3,1]").unwrap().to_string(), "-e[1,3]");
        assert_eq!(parse("e[10,2]").unwrap().to_string(), "-e[2,10]");
        assert_eq!(
            parse("grade(e1 ^ e2, -1)").unwrap().to_string(),
            "grade(op(e[1], e[2]), -1)"
        );
    }

    #[test]
    fn product_level_is_flat_and_left_associative() {
        assert_eq!(
            parse("e1 ^ e2 * e3 <| e4").unwrap().to_string(),
            "lc(gp(op(e[1], e[2]), e[3]), e[4])"
        );
        assert_eq!(
            parse("1 - e1 . e2 |> e3 + 2").unwrap().to_string(),
            "add(sub(1, rc(sp(e[1], e[2]), e[3])), 2)"
        );
        assert_eq!(parse("-e1*e2").unwrap().to_string(), "gp(neg(e[1]), e[2])");
        assert_eq!(parse("2*-e1").unwrap().to_string(), "gp(2, neg(e[1]))");
    }

    #[test]
    fn number_literals() {
        assert_eq!(parse("1/2*e1").unwrap().to_string(), "gp(1/2, e[1])");
        assert_eq!(parse("0.25").unwrap().to_string(), "0.25");
        // `2.e1` is a scalar product, not a decimal
        assert_eq!(parse("2.e1").unwrap().to_string(), "sp(2, e[1])");
    }

    #[test]
    fn syntax_errors_carry_columns() {
        assert_eq!(column_of("e[1,1]"), 1);
        assert_eq!(column_of("2 + e0"), 5);
        assert_eq!(column_of("e1 + "), 6);
        assert_eq!(column_of("(e1"), 4);
        assert_eq!(column_of("e1 # e2"), 4);
        assert_eq!(column_of("foo(e1)"), 1);
        assert_eq!(column_of("grade(e1)"), 9);
        assert_eq!(column_of("1/0"), 1);
        assert_eq!(column_of("e1 e2"), 4);
        assert_eq!(column_of("e[1,]"), 5);
        assert_eq!(column_of("e11"), 1);
    }

    #[test]
    fn eval_examples() {
        let s = sig(&[1, 1, 1]);
        assert_eq!(evaluate("e[1,2]*e3*e1*e2", &s).unwrap().to_string(), "-e[3]");
        assert_eq!(evaluate("e1*e1", &sig(&[0])).unwrap().to_string(), "0");
        assert_eq!(evaluate("grade(e1*e2 + 3, 2)", &s).unwrap().to_string(), "e[1,2]");
        assert_eq!(evaluate("rev(e12) + gi(e1)", &s).unwrap().to_string(), "-e[1] - e[1,2]");
        assert_eq!(evaluate("even(1 + e1 + e23)", &s).unwrap().to_string(), "1 + e[2,3]");
        assert_eq!(evaluate("odd(1 + e1 + e23)", &s).unwrap().to_string(), "e[1]");
        assert_eq!(evaluate("e1 <| e12", &s).unwrap().to_string(), "e[2]");
        assert_eq!(evaluate("e12 |> e2", &s).unwrap().to_string(), "e[1]");
        assert_eq!(evaluate("e12 . e12", &s).unwrap().to_string(), "-1");
        assert_eq!(evaluate("0.5*e1 - 1/2*e1", &s).unwrap().to_string(), "0");
    }

    #[test]
    fn eval_reports_undeclared_index() {
        assert_eq!(evaluate("e1 + e4", &sig(&[1, 1])), Err(Error::UndeclaredIndex(4)));
    }

    #[test]
    fn float_eval() {
        let s = Arc::new(Signature::from_diag(vec![2.0f64, -1.0]));
        let x = evaluate("0.1*e1 + e2*e2", &s).unwrap();
        assert_eq!(x.to_string(), "-1 + 0.1*e[1]");
    }
}
