//! Symbolic braid descriptions: loop words in the free group on `x`, `y` and
//! pure Artin words in `s1`, `s2`, `s3`.
//!
//! Loop grammar (whitespace ignored):
//!
//! ```text
//! word   := factor*
//! factor := atom ('^' integer)?
//! atom   := 'x' | 'y' | 'X' | 'Y' | '[' word ',' word ']' | '(' word ')'
//! ```
//!
//! `X`, `Y` are the inverses of `x`, `y` and `[a,b]` expands to `a b a⁻¹ b⁻¹`.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Expanded words longer than this are rejected as exponent overflow.
pub const MAX_WORD_LEN: usize = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LoopLetter {
    /// Positive loop about 0.
    X,
    XInv,
    /// Positive loop about 1.
    Y,
    YInv,
}

impl LoopLetter {
    pub fn inverse(self) -> Self {
        match self {
            LoopLetter::X => LoopLetter::XInv,
            LoopLetter::XInv => LoopLetter::X,
            LoopLetter::Y => LoopLetter::YInv,
            LoopLetter::YInv => LoopLetter::Y,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            LoopLetter::X => 'x',
            LoopLetter::XInv => 'X',
            LoopLetter::Y => 'y',
            LoopLetter::YInv => 'Y',
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LoopWord(Vec<LoopLetter>);

impl LoopWord {
    pub fn new(letters: Vec<LoopLetter>) -> Self {
        LoopWord(letters)
    }

    pub fn letters(&self) -> &[LoopLetter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> LoopWord {
        LoopWord(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn concat(&self, other: &LoopWord) -> LoopWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        LoopWord(v)
    }

    /// Net exponent of `x`.
    pub fn x_exponent(&self) -> i64 {
        self.0
            .iter()
            .map(|l| match l {
                LoopLetter::X => 1,
                LoopLetter::XInv => -1,
                _ => 0,
            })
            .sum()
    }

    /// Net exponent of `y`.
    pub fn y_exponent(&self) -> i64 {
        self.0
            .iter()
            .map(|l| match l {
                LoopLetter::Y => 1,
                LoopLetter::YInv => -1,
                _ => 0,
            })
            .sum()
    }

    /// Both exponent sums vanish.
    pub fn is_balanced(&self) -> bool {
        self.x_exponent() == 0 && self.y_exponent() == 0
    }
}

impl fmt::Display for LoopWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.symbol())?;
        }
        Ok(())
    }
}

impl std::str::FromStr for LoopWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_loop(s)
    }
}

pub fn parse_loop(text: &str) -> Result<LoopWord> {
    let mut p = Parser::new(text);
    let w = p.word()?;
    p.skip_ws();
    if let Some((off, c)) = p.peek() {
        return Err(syntax(off, format!("unexpected '{c}'")));
    }
    Ok(LoopWord(w))
}

fn syntax(offset: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        offset,
        message: message.into(),
    }
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
        let c = self.text[self.pos..].chars().next()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some((_, c)) if c == want => {
                self.bump();
                Ok(())
            }
            Some((off, c)) => Err(syntax(off, format!("expected '{want}', found '{c}'"))),
            None => Err(syntax(self.text.len(), format!("expected '{want}', found end of input"))),
        }
    }

    fn word(&mut self) -> Result<Vec<LoopLetter>> {
        let mut out = Vec::new();
        while let Some((_, c)) = self.peek() {
            if !matches!(c, 'x' | 'y' | 'X' | 'Y' | '[' | '(') {
                break;
            }
            let start = self.pos;
            let f = self.factor()?;
            if out.len() + f.len() > MAX_WORD_LEN {
                return Err(Error::ExponentOverflow { offset: start });
            }
            out.extend(f);
        }
        Ok(out)
    }

    fn factor(&mut self) -> Result<Vec<LoopLetter>> {
        let atom = self.atom()?;
        if let Some((_, '^')) = self.peek() {
            self.bump();
            let (off, exp) = self.integer()?;
            return power(&atom, exp, off);
        }
        Ok(atom)
    }

    fn atom(&mut self) -> Result<Vec<LoopLetter>> {
        let (off, c) = self
            .peek()
            .ok_or_else(|| syntax(self.text.len(), "unexpected end of input"))?;
        self.bump();
        match c {
            'x' => Ok(vec![LoopLetter::X]),
            'X' => Ok(vec![LoopLetter::XInv]),
            'y' => Ok(vec![LoopLetter::Y]),
            'Y' => Ok(vec![LoopLetter::YInv]),
            '(' => {
                let w = self.word()?;
                self.expect(')')?;
                Ok(w)
            }
            '[' => {
                let a = self.word()?;
                self.expect(',')?;
                let b = self.word()?;
                self.expect(']')?;
                let a = LoopWord(a);
                let b = LoopWord(b);
                let w = a.concat(&b).concat(&a.inverse()).concat(&b.inverse());
                if w.len() > MAX_WORD_LEN {
                    return Err(Error::ExponentOverflow { offset: off });
                }
                Ok(w.0)
            }
            other => Err(syntax(off, format!("unexpected '{other}'"))),
        }
    }

    /// Signed decimal integer; returns its offset.
    fn integer(&mut self) -> Result<(usize, i64)> {
        let (off, c) = self
            .peek()
            .ok_or_else(|| syntax(self.text.len(), "expected exponent, found end of input"))?;
        let mut negative = false;
        if c == '-' || c == '+' {
            negative = c == '-';
            self.bump();
        }
        let digits_start = self.pos;
        while let Some(c) = self.text[self.pos..].chars().next() {
            if !c.is_ascii_digit() {
                break;
            }
            self.pos += 1;
        }
        let digits = &self.text[digits_start..self.pos];
        if digits.is_empty() {
            return Err(syntax(self.pos, "expected exponent digits"));
        }
        let value: i64 = digits
            .parse()
            .map_err(|_| Error::ExponentOverflow { offset: off })?;
        Ok((off, if negative { -value } else { value }))
    }
}

fn power(atom: &[LoopLetter], exp: i64, offset: usize) -> Result<Vec<LoopLetter>> {
    let reps = exp.unsigned_abs();
    let total = (atom.len() as u64).checked_mul(reps);
    match total {
        Some(t) if t <= MAX_WORD_LEN as u64 => {}
        _ => return Err(Error::ExponentOverflow { offset }),
    }
    let base: Vec<LoopLetter> = if exp < 0 {
        atom.iter().rev().map(|l| l.inverse()).collect()
    } else {
        atom.to_vec()
    };
    Ok(base.repeat(reps as usize))
}

/// One Artin generator `s_i^e`, `i` in `1..=3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ArtinLetter {
    pub generator: u8,
    pub exponent: i32,
}

/// A pure braid word in `s1, s2, s3`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BraidWord(Vec<ArtinLetter>);

impl BraidWord {
    /// Wraps letters, rejecting words whose permutation is not the identity.
    pub fn new(letters: Vec<ArtinLetter>) -> Result<Self> {
        if let Some(bad) = letters.iter().find(|l| !(1..=3).contains(&l.generator)) {
            return Err(Error::InvalidParameter(format!("generator s{} out of range", bad.generator)));
        }
        let perm = permutation_of(&letters);
        if perm != Permutation::IDENTITY {
            return Err(Error::NotPure { permutation: perm });
        }
        Ok(BraidWord(letters))
    }

    pub fn letters(&self) -> &[ArtinLetter] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord(
            self.0
                .iter()
                .rev()
                .map(|l| ArtinLetter {
                    generator: l.generator,
                    exponent: -l.exponent,
                })
                .collect(),
        )
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        BraidWord(v)
    }

    /// Number of half-twists in the realization.
    pub fn half_twists(&self) -> usize {
        self.0.iter().map(|l| l.exponent.unsigned_abs() as usize).sum()
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if l.exponent == 1 {
                write!(f, "s{}", l.generator)?;
            } else {
                write!(f, "s{}^{}", l.generator, l.exponent)?;
            }
        }
        Ok(())
    }
}

/// Permutation of strand positions induced by a sequence of generators.
pub fn permutation_of(letters: &[ArtinLetter]) -> Permutation {
    letters.iter().fold(Permutation::IDENTITY, |acc, l| {
        if l.exponent % 2 != 0 {
            Permutation::transposition(l.generator, l.generator + 1).compose(&acc)
        } else {
            acc
        }
    })
}

/// Parses `s1`, `s2`, `s3` tokens with optional `^±k`; rejects non-pure words.
pub fn parse_artin(text: &str) -> Result<BraidWord> {
    let mut p = Parser::new(text);
    let mut letters = Vec::new();
    while let Some((off, c)) = p.peek() {
        if c != 's' && c != 'σ' {
            return Err(syntax(off, format!("expected generator, found '{c}'")));
        }
        p.bump();
        let gen_off = p.pos;
        let generator = match p.bump() {
            Some(d @ '1'..='3') => d as u8 - b'0',
            Some(other) => return Err(syntax(gen_off, format!("expected generator index 1-3, found '{other}'"))),
            None => return Err(syntax(gen_off, "expected generator index, found end of input")),
        };
        let mut exponent = 1i64;
        if let Some((_, '^')) = p.peek() {
            p.bump();
            let (eoff, e) = p.integer()?;
            if e.unsigned_abs() > MAX_WORD_LEN as u64 {
                return Err(Error::ExponentOverflow { offset: eoff });
            }
            exponent = e;
        }
        if exponent != 0 {
            letters.push(ArtinLetter {
                generator,
                exponent: exponent as i32,
            });
        }
    }
    BraidWord::new(letters)
}
