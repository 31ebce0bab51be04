//! Module expressions: `tensor(a, b)`, `dual(a)`, `sum(a, b, ...)`,
//! `omega(a)` over the built-ins `sl3_standard`, `sl2_simple(λ)`, `trivial`,
//! `regular` and `standard`.

use std::sync::Arc;

use thetasheaf::rep::{self, Representation};
use thetasheaf::{Error, GroupDescriptor, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Name(String),
    Number(u32),
    Call(String, Vec<Expr>),
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::Parse(format!("expected '{c}' at offset {} in {:?}", self.pos, self.src)))
        }
    }

    fn word(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(rest.len());
        if len == 0 {
            return Err(Error::Parse(format!("expected a name at offset {} in {:?}", self.pos, self.src)));
        }
        self.pos += len;
        Ok(&rest[..len])
    }

    fn expr(&mut self) -> Result<Expr> {
        let w = self.word()?;
        if w.chars().all(|c| c.is_ascii_digit()) {
            return w
                .parse()
                .map(Expr::Number)
                .map_err(|_| Error::Parse(format!("number {w} is too large")));
        }
        if self.peek() != Some('(') {
            return Ok(Expr::Name(w.to_string()));
        }
        self.expect('(')?;
        let mut args = vec![self.expr()?];
        while self.peek() == Some(',') {
            self.pos += 1;
            args.push(self.expr()?);
        }
        self.expect(')')?;
        Ok(Expr::Call(w.to_string(), args))
    }
}

pub fn parse(src: &str) -> Result<Expr> {
    let mut p = Parser { src, pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(Error::Parse(format!("trailing input at offset {} in {src:?}", p.pos)));
    }
    Ok(e)
}

fn arity(name: &str, args: &[Expr], want: usize) -> Result<()> {
    if args.len() != want {
        return Err(Error::Parse(format!("{name} takes {want} argument(s), got {}", args.len())));
    }
    Ok(())
}

pub fn eval(e: &Expr, group: &Arc<GroupDescriptor>) -> Result<Representation> {
    match e {
        Expr::Number(n) => Err(Error::Parse(format!("a number ({n}) is not a module"))),
        Expr::Name(n) => match n.as_str() {
            "sl3_standard" | "trivial" | "regular" | "standard" => rep::builtin_module(group, n),
            _ => Err(Error::Parse(format!("unknown module {n}"))),
        },
        Expr::Call(f, args) => match f.as_str() {
            "sl2_simple" => {
                arity(f, args, 1)?;
                match args[0] {
                    Expr::Number(l) => rep::sl2_simple(group, l),
                    _ => Err(Error::Parse("sl2_simple takes a highest weight".into())),
                }
            }
            "dual" => {
                arity(f, args, 1)?;
                Ok(eval(&args[0], group)?.dual())
            }
            "omega" => {
                arity(f, args, 1)?;
                eval(&args[0], group)?.heller()
            }
            "tensor" | "sum" => {
                if args.len() < 2 {
                    return Err(Error::Parse(format!("{f} takes at least two arguments")));
                }
                let mut acc = eval(&args[0], group)?;
                for a in &args[1..] {
                    let m = eval(a, group)?;
                    acc = if f == "tensor" { acc.tensor(&m)? } else { acc.direct_sum(&m)? };
                }
                Ok(acc)
            }
            _ => Err(Error::Parse(format!("unknown function {f}"))),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_nested_expressions() {
        let e = parse(" tensor(sl3_standard, dual( sl3_standard ))").unwrap();
        assert_eq!(
            e,
            Expr::Call(
                "tensor".into(),
                vec![
                    Expr::Name("sl3_standard".into()),
                    Expr::Call("dual".into(), vec![Expr::Name("sl3_standard".into())])
                ]
            )
        );
        assert_eq!(
            parse("sl2_simple(2)").unwrap(),
            Expr::Call("sl2_simple".into(), vec![Expr::Number(2)])
        );
    }

    #[test]
    fn rejects_malformed_input() {
        for bad in ["", "tensor(", "dual(a))", "sum(a,)", "(a)"] {
            assert!(matches!(parse(bad), Err(Error::Parse(_))), "{bad}");
        }
    }

    #[test]
    fn evaluates_against_a_group() {
        let g = Arc::new(GroupDescriptor::builtin("ea(2)", 2).unwrap());
        let m = eval(&parse("sum(trivial, omega(trivial))").unwrap(), &g).unwrap();
        assert_eq!(m.dim(), 4);
        assert!(matches!(eval(&parse("dual(trivial, trivial)").unwrap(), &g), Err(Error::Parse(_))));
        assert!(matches!(eval(&parse("mystery").unwrap(), &g), Err(Error::Parse(_))));
    }
}
