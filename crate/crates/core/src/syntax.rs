//! Text forms of cactus words, Gauss words and presentations.
//!
//! ```text
//! cactus word   s(1,2) s(2,4)^3 s(1,3)
//! gauss word    t{1,2} t{1,3,4}
//! presentation  gens: x y
//!               rels: x^2 = y^2 = 1, (x y)^3
//! ```

use std::fmt;

use crate::cactus::{CactusLetter, CactusWord};
use crate::error::{check_strands, Error, Result};
use crate::presentation::{inverse, Presentation, SignedWord, Sym};
use crate::racg::{GaussLetter, GaussWord};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(i64),
    Sym(char),
    Newline,
}

fn syntax(pos: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { pos, msg: msg.into() }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            '#' => {
                while i < bytes.len() && bytes[i] != b'\n' {
                    i += 1;
                }
            }
            '\n' => {
                out.push((i, Tok::Newline));
                i += 1;
            }
            c if c.is_ascii_whitespace() => i += 1,
            c if c.is_ascii_digit() => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let v = text[start..i].parse().map_err(|_| syntax(start, "integer too large"))?;
                out.push((start, Tok::Int(v)));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
            }
            '(' | ')' | '{' | '}' | ',' | ';' | ':' | '^' | '=' | '-' | '+' => {
                out.push((i, Tok::Sym(c)));
                i += 1;
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(syntax(i, format!("unexpected character `{ch}`")));
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn new(text: &str, keep_newlines: bool) -> Result<Self> {
        let mut toks = lex(text)?;
        if !keep_newlines {
            toks.retain(|(_, t)| *t != Tok::Newline);
        }
        Ok(Parser { toks, at: 0, end: text.len() })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(_, t)| t.clone());
        self.at += 1;
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(syntax(self.pos(), format!("expected `{c}`")))
        }
    }

    fn int(&mut self) -> Result<(usize, i64)> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Int(v)) => Ok((pos, v)),
            _ => Err(syntax(pos, "expected an integer")),
        }
    }

    fn signed_int(&mut self) -> Result<i64> {
        let neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let (_, v) = self.int()?;
        Ok(if neg { -v } else { v })
    }

    fn exponent(&mut self) -> Result<i64> {
        if self.eat('^') {
            self.signed_int()
        } else {
            Ok(1)
        }
    }

    fn skip_newlines(&mut self) {
        while self.peek() == Some(&Tok::Newline) {
            self.at += 1;
        }
    }
}

/// Parses `s(p,q)^e` terms; each term contributes `|e| mod 2` letters.
pub fn parse_cactus_word(text: &str, n: usize) -> Result<CactusWord> {
    check_strands(n)?;
    let mut ps = Parser::new(text, false)?;
    let mut letters = Vec::new();
    while ps.peek().is_some() {
        let pos = ps.pos();
        match ps.bump() {
            Some(Tok::Ident(s)) if s == "s" => {}
            _ => return Err(syntax(pos, "expected `s(p,q)`")),
        }
        ps.expect('(')?;
        let (_, p) = ps.int()?;
        ps.expect(',')?;
        let (_, q) = ps.int()?;
        ps.expect(')')?;
        let e = ps.exponent()?;
        let (p, q) = (p as usize, q as usize);
        if !(1 <= p && p < q && q <= n) {
            return Err(Error::Bounds { p, q, n });
        }
        if e.rem_euclid(2) == 1 {
            letters.push(CactusLetter::new(p, q)?);
        }
    }
    CactusWord::new(n, letters)
}

/// Parses `t{i,j,...}` terms. Exponents are taken mod 2.
pub fn parse_gauss_word(text: &str, n: usize) -> Result<GaussWord> {
    check_strands(n)?;
    let mut ps = Parser::new(text, false)?;
    let mut letters = Vec::new();
    while ps.peek().is_some() {
        let pos = ps.pos();
        match ps.bump() {
            Some(Tok::Ident(s)) if s == "t" => {}
            _ => return Err(syntax(pos, "expected `t{...}`")),
        }
        ps.expect('{')?;
        let mut labels = Vec::new();
        loop {
            let (lpos, v) = ps.int()?;
            if v < 1 || v as usize > n {
                return Err(syntax(lpos, format!("label {v} outside 1..={n}")));
            }
            labels.push(v as usize);
            if ps.eat('}') {
                break;
            }
            ps.expect(',')?;
        }
        let e = ps.exponent()?;
        let letter = GaussLetter::from_labels(labels).map_err(|e| syntax(pos, e.to_string()))?;
        if e.rem_euclid(2) == 1 {
            letters.push(letter);
        }
    }
    GaussWord::new(n, letters)
}

fn is_keyword(ps: &Parser, name: &str) -> bool {
    matches!(ps.peek(), Some(Tok::Ident(s)) if s == name)
        && ps.toks.get(ps.at + 1).map(|(_, t)| t) == Some(&Tok::Sym(':'))
}

/// Parses a presentation. Each relation is a chain `w1 = w2 = ... = wk`;
/// a lone word is a relator, a chain containing `1` makes each other word a
/// relator, and any other chain contributes `w_i w_{i+1}^-1`. No free
/// reduction is applied.
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut ps = Parser::new(text, true)?;
    ps.skip_newlines();
    if !is_keyword(&ps, "gens") {
        return Err(syntax(ps.pos(), "expected `gens:`"));
    }
    ps.at += 2;
    let mut gens: Vec<String> = Vec::new();
    loop {
        if is_keyword(&ps, "rels") || ps.peek().is_none() {
            break;
        }
        let pos = ps.pos();
        match ps.bump() {
            Some(Tok::Ident(name)) => {
                if gens.contains(&name) {
                    return Err(syntax(pos, format!("duplicate generator `{name}`")));
                }
                gens.push(name);
            }
            Some(Tok::Sym(',' | ';')) | Some(Tok::Newline) => {}
            _ => return Err(syntax(pos, "expected a generator name")),
        }
    }
    let mut relators = Vec::new();
    if is_keyword(&ps, "rels") {
        ps.at += 2;
        loop {
            while matches!(ps.peek(), Some(Tok::Newline) | Some(Tok::Sym(',' | ';'))) {
                ps.at += 1;
            }
            if ps.peek().is_none() {
                break;
            }
            let mut chain = vec![parse_signed(&mut ps, &gens)?];
            while ps.eat('=') {
                chain.push(parse_signed(&mut ps, &gens)?);
            }
            if !matches!(ps.peek(), None | Some(Tok::Newline) | Some(Tok::Sym(',' | ';'))) {
                return Err(syntax(ps.pos(), "expected `,`, `;`, `=` or end of line"));
            }
            if chain.len() == 1 {
                relators.push(chain.pop().expect("one word"));
            } else if chain.iter().any(|w| w.is_empty()) {
                relators.extend(chain.into_iter().filter(|w| !w.is_empty()));
            } else {
                for pair in chain.windows(2) {
                    let mut r = pair[0].clone();
                    r.extend(inverse(&pair[1]));
                    relators.push(r);
                }
            }
        }
    }
    Presentation::new(gens, relators)
}

/// Parses a signed word over `gens`, with `1` for the empty word and
/// parenthesized groups.
pub fn parse_signed_word(text: &str, gens: &[String]) -> Result<SignedWord> {
    let mut ps = Parser::new(text, false)?;
    let w = parse_signed(&mut ps, gens)?;
    if ps.peek().is_some() {
        return Err(syntax(ps.pos(), "unexpected trailing input"));
    }
    Ok(w)
}

fn parse_signed(ps: &mut Parser, gens: &[String]) -> Result<SignedWord> {
    let mut out = Vec::new();
    loop {
        let pos = ps.pos();
        let base: SignedWord = match ps.peek() {
            Some(Tok::Ident(name)) => {
                let g = gens.iter().position(|x| x == name).ok_or_else(|| Error::UnknownGenerator(name.clone()))?;
                ps.at += 1;
                vec![Sym::pos(g)]
            }
            Some(Tok::Int(1)) => {
                ps.at += 1;
                Vec::new()
            }
            Some(Tok::Sym('(')) => {
                ps.at += 1;
                let inner = parse_signed(ps, gens)?;
                ps.expect(')')?;
                inner
            }
            Some(Tok::Int(_)) => return Err(syntax(pos, "only `1` may appear as a number")),
            _ => break,
        };
        let e = ps.exponent()?;
        let piece = if e < 0 { inverse(&base) } else { base };
        for _ in 0..e.unsigned_abs() {
            out.extend_from_slice(&piece);
        }
    }
    Ok(out)
}

pub fn format_cactus_word(w: &CactusWord) -> String {
    w.letters().iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn format_gauss_word(w: &GaussWord) -> String {
    w.letters().iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
}

/// Spells a signed word with runs compressed (`x x` as `x^2`); the empty
/// word is `1`.
pub fn format_signed_word(w: &[Sym], gens: &[String]) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    let mut parts = Vec::new();
    let mut i = 0;
    while i < w.len() {
        let mut j = i;
        while j < w.len() && w[j] == w[i] {
            j += 1;
        }
        let e = (j - i) as i64 * w[i].exp as i64;
        let name = &gens[w[i].gen];
        parts.push(if e == 1 { name.clone() } else { format!("{name}^{e}") });
        i = j;
    }
    parts.join(" ")
}

pub fn format_presentation(p: &Presentation) -> String {
    let rels: Vec<String> = p.relators.iter().map(|r| format_signed_word(r, &p.generators)).collect();
    format!("gens: {}\nrels: {}\n", p.generators.join(" "), rels.join(", "))
}

impl fmt::Display for CactusWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_cactus_word(self))
    }
}

impl fmt::Display for GaussWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_gauss_word(self))
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_presentation(self))
    }
}
