//! Extended regular expressions: union, concatenation, star, complement and
//! intersection over single-character literals.
//!
//! Concrete syntax: `#` is the empty language, `_` the empty word,
//! juxtaposition concatenation, `|` union, `&` intersection, postfix `*`
//! star, prefix `!` complement. Precedence, tightest first: `!`, `*`,
//! concatenation, `&`, `|`. An expression with no `*` node can denote any
//! star-free language, which is why complement and intersection are part of
//! the core syntax rather than sugar.

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ExtRegex {
    EmptyLang,
    Epsilon,
    Lit(char),
    Union(Box<ExtRegex>, Box<ExtRegex>),
    Concat(Box<ExtRegex>, Box<ExtRegex>),
    Star(Box<ExtRegex>),
    Complement(Box<ExtRegex>),
    Intersect(Box<ExtRegex>, Box<ExtRegex>),
}

impl ExtRegex {
    pub fn union(l: ExtRegex, r: ExtRegex) -> ExtRegex {
        ExtRegex::Union(Box::new(l), Box::new(r))
    }

    pub fn concat(l: ExtRegex, r: ExtRegex) -> ExtRegex {
        ExtRegex::Concat(Box::new(l), Box::new(r))
    }

    pub fn star(e: ExtRegex) -> ExtRegex {
        ExtRegex::Star(Box::new(e))
    }

    pub fn complement(e: ExtRegex) -> ExtRegex {
        ExtRegex::Complement(Box::new(e))
    }

    pub fn intersect(l: ExtRegex, r: ExtRegex) -> ExtRegex {
        ExtRegex::Intersect(Box::new(l), Box::new(r))
    }

    /// True when no `Star` node occurs anywhere in the tree.
    pub fn is_star_free_syntactic(&self) -> bool {
        match self {
            ExtRegex::EmptyLang | ExtRegex::Epsilon | ExtRegex::Lit(_) => true,
            ExtRegex::Star(_) => false,
            ExtRegex::Complement(e) => e.is_star_free_syntactic(),
            ExtRegex::Union(l, r) | ExtRegex::Concat(l, r) | ExtRegex::Intersect(l, r) => {
                l.is_star_free_syntactic() && r.is_star_free_syntactic()
            }
        }
    }

    /// All literal symbols occurring in the tree, in-order.
    pub fn literals(&self) -> Vec<char> {
        let mut out = Vec::new();
        fn walk(e: &ExtRegex, out: &mut Vec<char>) {
            match e {
                ExtRegex::EmptyLang | ExtRegex::Epsilon => {}
                ExtRegex::Lit(c) => out.push(*c),
                ExtRegex::Star(i) | ExtRegex::Complement(i) => walk(i, out),
                ExtRegex::Union(l, r) | ExtRegex::Concat(l, r) | ExtRegex::Intersect(l, r) => {
                    walk(l, out);
                    walk(r, out);
                }
            }
        }
        walk(self, &mut out);
        out
    }
}

/// Parses the concrete syntax against an alphabet. Binary operators are
/// left-associative; every literal must belong to the alphabet.
pub fn parse_regex(text: &str, alphabet: &Alphabet) -> Result<ExtRegex> {
    let mut parser = Parser {
        chars: text.char_indices().collect(),
        pos: 0,
        alphabet,
    };
    let expr = parser.expr()?;
    match parser.peek() {
        None => Ok(expr),
        Some((at, c)) => Err(Error::Syntax {
            pos: at,
            msg: format!("unexpected {c:?}"),
        }),
    }
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    alphabet: &'a Alphabet,
}

impl Parser<'_> {
    fn peek(&self) -> Option<(usize, char)> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<(usize, char)> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn end_pos(&self) -> usize {
        self.chars
            .last()
            .map(|&(at, c)| at + c.len_utf8())
            .unwrap_or(0)
    }

    // expr := inter ('|' inter)*
    fn expr(&mut self) -> Result<ExtRegex> {
        let mut lhs = self.inter()?;
        while let Some((_, '|')) = self.peek() {
            self.bump();
            let rhs = self.inter()?;
            lhs = ExtRegex::union(lhs, rhs);
        }
        Ok(lhs)
    }

    // inter := cat ('&' cat)*
    fn inter(&mut self) -> Result<ExtRegex> {
        let mut lhs = self.cat()?;
        while let Some((_, '&')) = self.peek() {
            self.bump();
            let rhs = self.cat()?;
            lhs = ExtRegex::intersect(lhs, rhs);
        }
        Ok(lhs)
    }

    // cat := unary+
    fn cat(&mut self) -> Result<ExtRegex> {
        let mut lhs = self.unary()?;
        while let Some((_, c)) = self.peek() {
            if matches!(c, '|' | '&' | ')') {
                break;
            }
            let rhs = self.unary()?;
            lhs = ExtRegex::concat(lhs, rhs);
        }
        Ok(lhs)
    }

    // unary := '!' unary | atom '*'*
    fn unary(&mut self) -> Result<ExtRegex> {
        if let Some((_, '!')) = self.peek() {
            self.bump();
            let inner = self.unary()?;
            return Ok(ExtRegex::complement(inner));
        }
        let mut e = self.atom()?;
        while let Some((_, '*')) = self.peek() {
            self.bump();
            e = ExtRegex::star(e);
        }
        Ok(e)
    }

    // atom := literal | '_' | '#' | '(' expr ')'
    fn atom(&mut self) -> Result<ExtRegex> {
        match self.bump() {
            None => Err(Error::Syntax {
                pos: self.end_pos(),
                msg: "expected an expression".into(),
            }),
            Some((_, '_')) => Ok(ExtRegex::Epsilon),
            Some((_, '#')) => Ok(ExtRegex::EmptyLang),
            Some((at, '(')) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some((_, ')')) => Ok(inner),
                    _ => Err(Error::Syntax {
                        pos: at,
                        msg: "unclosed '('".into(),
                    }),
                }
            }
            Some((at, c)) if matches!(c, '*' | '|' | '&' | ')' | '!') => Err(Error::Syntax {
                pos: at,
                msg: format!("unexpected {c:?}"),
            }),
            Some((_, c)) => {
                if self.alphabet.contains(c) {
                    Ok(ExtRegex::Lit(c))
                } else {
                    Err(Error::UnknownSymbol { symbol: c })
                }
            }
        }
    }
}

/// Prints an expression with minimal parenthesization; the output reparses to
/// an equal tree.
pub fn print_regex(e: &ExtRegex) -> String {
    let mut out = String::new();
    print_into(e, 0, &mut out);
    out
}

// Precedence levels: union 0, intersection 1, concatenation 2, unary 3,
// atoms 4. A node is parenthesized when its level is below the context.
fn level(e: &ExtRegex) -> u8 {
    match e {
        ExtRegex::Union(..) => 0,
        ExtRegex::Intersect(..) => 1,
        ExtRegex::Concat(..) => 2,
        ExtRegex::Complement(..) | ExtRegex::Star(..) => 3,
        ExtRegex::EmptyLang | ExtRegex::Epsilon | ExtRegex::Lit(_) => 4,
    }
}

fn print_into(e: &ExtRegex, ctx: u8, out: &mut String) {
    let paren = level(e) < ctx;
    if paren {
        out.push('(');
        print_into(e, 0, out);
        out.push(')');
        return;
    }
    match e {
        ExtRegex::EmptyLang => out.push('#'),
        ExtRegex::Epsilon => out.push('_'),
        ExtRegex::Lit(c) => out.push(*c),
        // Left-associative binaries: the right child needs one level more.
        ExtRegex::Union(l, r) => {
            print_into(l, 0, out);
            out.push('|');
            print_into(r, 1, out);
        }
        ExtRegex::Intersect(l, r) => {
            print_into(l, 1, out);
            out.push('&');
            print_into(r, 2, out);
        }
        ExtRegex::Concat(l, r) => {
            print_into(l, 2, out);
            print_into(r, 3, out);
        }
        ExtRegex::Complement(inner) => {
            out.push('!');
            print_into(inner, 3, out);
        }
        ExtRegex::Star(inner) => {
            // `!` binds looser than postfix `*`, so a complement under a star
            // must be parenthesized even though both sit at the unary level.
            if matches!(
                **inner,
                ExtRegex::Star(_) | ExtRegex::Lit(_) | ExtRegex::Epsilon | ExtRegex::EmptyLang
            ) {
                print_into(inner, 3, out);
            } else {
                out.push('(');
                print_into(inner, 0, out);
                out.push(')');
            }
            out.push('*');
        }
    }
}
