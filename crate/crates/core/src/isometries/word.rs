//! A small grammar for words in named generators.
//!
//! ```text
//! word   := factor*
//! factor := atom ('^' int)?
//! atom   := NAME | '1' | '(' word ')' | 'Delta' '(' word (',' word)* ')'
//! ```
//!
//! Names are `S0..S11`, `SA..SD` and `g0..g11`, `gA..gD`. Factors may be
//! separated by whitespace, `*` or `·`.

use std::fmt;

/// Exact composition, inversion and identity; words multiply left to right.
pub trait Group: Clone {
    fn identity() -> Self;
    fn compose(&self, o: &Self) -> Self;
    fn invert(&self) -> Self;

    fn power(&self, k: i64) -> Self {
        let base = if k < 0 { self.invert() } else { self.clone() };
        let mut out = Self::identity();
        for _ in 0..k.unsigned_abs() {
            out = out.compose(&base);
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WordError {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unresolved symbol {0}")]
    Unresolved(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    Sym(String),
    One,
    Paren(Word),
    Delta(Vec<Word>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub atom: Atom,
    pub exp: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Word(pub Vec<Factor>);

impl Word {
    pub fn sym(name: &str) -> Word {
        Word(vec![Factor { atom: Atom::Sym(name.into()), exp: 1 }])
    }

    /// Concatenation of single symbols.
    pub fn syms<S: AsRef<str>>(names: &[S]) -> Word {
        Word(names.iter().map(|n| Factor { atom: Atom::Sym(n.as_ref().into()), exp: 1 }).collect())
    }

    pub fn concat(&self, o: &Word) -> Word {
        Word(self.0.iter().chain(&o.0).cloned().collect())
    }

    pub fn pow(&self, k: i64) -> Word {
        Word(vec![Factor { atom: Atom::Paren(self.clone()), exp: k }])
    }

    pub fn inverse(&self) -> Word {
        self.pow(-1)
    }

    pub fn delta(args: Vec<Word>) -> Word {
        Word(vec![Factor { atom: Atom::Delta(args), exp: 1 }])
    }

    /// Free expansion into letters with exponents ±1, with `Delta` and
    /// powers written out and adjacent inverse pairs cancelled.
    pub fn letters(&self) -> Vec<(String, i64)> {
        let mut out: Vec<(String, i64)> = Vec::new();
        self.push_letters(1, &mut out);
        out
    }

    fn push_letters(&self, sign: i64, out: &mut Vec<(String, i64)>) {
        let fs: Vec<&Factor> = if sign > 0 { self.0.iter().collect() } else { self.0.iter().rev().collect() };
        for f in fs {
            let e = f.exp * sign;
            for _ in 0..e.unsigned_abs() {
                f.atom.push_letters(e.signum(), out);
            }
        }
    }

    pub fn eval<G: Group>(&self, resolve: &dyn Fn(&str) -> Option<G>) -> Result<G, WordError> {
        let mut acc = G::identity();
        for f in &self.0 {
            let v = f.atom.eval(resolve)?;
            acc = acc.compose(&v.power(f.exp));
        }
        Ok(acc)
    }
}

impl Atom {
    fn push_letters(&self, sign: i64, out: &mut Vec<(String, i64)>) {
        match self {
            Atom::Sym(s) => match out.last() {
                Some((t, e)) if t == s && *e == -sign => {
                    out.pop();
                }
                _ => out.push((s.clone(), sign)),
            },
            Atom::One => {}
            Atom::Paren(w) => w.push_letters(sign, out),
            Atom::Delta(args) => delta_word(args).push_letters(sign, out),
        }
    }

    fn eval<G: Group>(&self, resolve: &dyn Fn(&str) -> Option<G>) -> Result<G, WordError> {
        match self {
            Atom::Sym(s) => resolve(s).ok_or_else(|| WordError::Unresolved(s.clone())),
            Atom::One => Ok(G::identity()),
            Atom::Paren(w) => w.eval(resolve),
            Atom::Delta(args) => delta_word(args).eval(resolve),
        }
    }
}

/// `Δ(g₁,…,g_m) = (g₁⋯g_m)(g₁⋯g_{m−1})⋯(g₁g₂)g₁`
pub fn delta_word(args: &[Word]) -> Word {
    let mut out = Word::default();
    for k in (1..=args.len()).rev() {
        for a in &args[..k] {
            out = out.concat(&a.pow(1));
        }
    }
    out
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            match &x.atom {
                Atom::Sym(s) => write!(f, "{s}")?,
                Atom::One => write!(f, "1")?,
                Atom::Paren(w) => write!(f, "({w})")?,
                Atom::Delta(args) => {
                    write!(f, "Delta(")?;
                    for (k, a) in args.iter().enumerate() {
                        if k > 0 {
                            write!(f, ", ")?;
                        }
                        write!(f, "{a}")?;
                    }
                    write!(f, ")")?;
                }
            }
            if x.exp != 1 {
                write!(f, "^{}", x.exp)?;
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, msg: &str) -> Result<T, WordError> {
        Err(WordError::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() {
            let rest = &self.s[self.pos..];
            if rest[0].is_ascii_whitespace() || rest[0] == b'*' {
                self.pos += 1;
            } else if rest.starts_with("·".as_bytes()) {
                self.pos += "·".len();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn word(&mut self) -> Result<Word, WordError> {
        let mut out = Vec::new();
        while let Some(c) = self.peek() {
            if c == b')' || c == b',' {
                break;
            }
            out.push(self.factor()?);
        }
        Ok(Word(out))
    }

    fn factor(&mut self) -> Result<Factor, WordError> {
        let atom = self.atom()?;
        let mut exp = 1;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            if matches!(self.s.get(self.pos), Some(b'-') | Some(b'+')) {
                self.pos += 1;
            }
            while self.s.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            let txt = std::str::from_utf8(&self.s[start..self.pos]).unwrap_or("");
            exp = match txt.parse() {
                Ok(e) => e,
                Err(_) => return self.err("expected integer exponent"),
            };
        }
        Ok(Factor { atom, exp })
    }

    fn atom(&mut self) -> Result<Atom, WordError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let w = self.word()?;
                self.expect(b')')?;
                Ok(Atom::Paren(w))
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(Atom::One)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.s.get(self.pos).is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.s[start..self.pos]).unwrap_or("");
                if name == "Delta" {
                    self.expect(b'(')?;
                    let mut args = vec![self.word()?];
                    while self.peek() == Some(b',') {
                        self.pos += 1;
                        args.push(self.word()?);
                    }
                    self.expect(b')')?;
                    return Ok(Atom::Delta(args));
                }
                if !valid_symbol(name) {
                    self.pos = start;
                    return self.err(&format!("unknown symbol {name}"));
                }
                Ok(Atom::Sym(name.to_string()))
            }
            Some(_) => self.err("unexpected character"),
            None => self.err("unexpected end of input"),
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), WordError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(&format!("expected '{}'", c as char))
        }
    }
}

fn valid_symbol(name: &str) -> bool {
    let Some(rest) = name.strip_prefix('S').or_else(|| name.strip_prefix('g')) else {
        return false;
    };
    matches!(rest, "A" | "B" | "C" | "D") || rest.parse::<u32>().is_ok_and(|j| j < 12 && rest == j.to_string())
}

pub fn parse_word(s: &str) -> Result<Word, WordError> {
    let mut p = Parser { s: s.as_bytes(), pos: 0 };
    let w = p.word()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Free group on symbols, as reduced letter lists.
    #[derive(Clone, Debug, PartialEq)]
    struct Free(Vec<(String, i64)>);

    impl Group for Free {
        fn identity() -> Self {
            Free(vec![])
        }
        fn compose(&self, o: &Self) -> Self {
            let mut v = self.0.clone();
            for x in &o.0 {
                match v.last() {
                    Some(y) if y.0 == x.0 && y.1 == -x.1 => {
                        v.pop();
                    }
                    _ => v.push(x.clone()),
                }
            }
            Free(v)
        }
        fn invert(&self) -> Self {
            Free(self.0.iter().rev().map(|(s, e)| (s.clone(), -e)).collect())
        }
    }

    fn free(w: &Word) -> Free {
        w.eval(&|s| Some(Free(vec![(s.to_string(), 1)]))).unwrap()
    }

    #[test]
    fn parses_and_prints() {
        let w = parse_word("S1 S2^-1 (SA SB)^3 Delta(S1, S2 S3) 1").unwrap();
        assert_eq!(w.0.len(), 5);
        assert_eq!(parse_word(&w.to_string()).unwrap(), w);
        assert!(parse_word("S12").is_err());
        assert!(parse_word("SE").is_err());
        assert!(parse_word("S1 (S2").is_err());
        assert!(parse_word("S1^x").is_err());
        assert_eq!(parse_word("").unwrap(), Word::default());
        assert_eq!(parse_word("S1·S2*S3").unwrap().0.len(), 3);
    }

    #[test]
    fn delta_expansion() {
        let w = parse_word("Delta(SA, SB, SC)").unwrap();
        let names: Vec<String> = w.letters().into_iter().map(|(s, _)| s).collect();
        assert_eq!(names, ["SA", "SB", "SC", "SA", "SB", "SA"]);
    }

    #[test]
    fn free_reduction_identity() {
        let inc = "S1 S2 S3 S4 S5 S6 S7 S8 S9 S10 S11";
        let dec = "S11 S10 S9 S8 S7 S6 S5 S4 S3 S2 S1";
        let a = parse_word(&format!("{inc} {dec}")).unwrap();
        let b = parse_word("S1 S2 S3 S4 S5 S6 S7 S8 S9 S10 S11^2 S10 S9 S8 S7 S6 S5 S4 S3 S2 S1").unwrap();
        assert_eq!(free(&a), free(&b));
        assert_eq!(free(&parse_word("(S1 S2)^-1 S1 S2").unwrap()), Free(vec![]));
        assert_eq!(free(&Word::default()), Free(vec![]));
        assert_eq!(a.letters(), free(&a).0);
    }
}
