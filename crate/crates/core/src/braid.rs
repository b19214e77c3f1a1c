//! Braid words in the `{n,{k1,k2,...}}` text format, their closures, and the
//! two Markov moves.
//!
//! Letter `k > 0` is the Artin generator `s_k`, `-k` its inverse. Words are
//! read bottom-up: the first letter is the first crossing applied.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("braid syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("letter {letter} out of range for {strands} strands (need 1 <= |k| <= {max})", max = strands.saturating_sub(1))]
    LetterOutOfRange { letter: i32, strands: usize },
    #[error("a braid needs at least one strand")]
    NoStrands,
    #[error("strand counts differ: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("line {line}: {source}")]
    Line {
        line: usize,
        #[source]
        source: Box<BraidError>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    strands: usize,
    word: Vec<i32>,
}

/// Number of link components and writhe of a braid closure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosureInfo {
    pub components: usize,
    pub writhe: i64,
}

impl BraidWord {
    pub fn new(strands: usize, word: Vec<i32>) -> Result<Self, BraidError> {
        if strands < 1 {
            return Err(BraidError::NoStrands);
        }
        if let Some(&letter) = word.iter().find(|&&k| k == 0 || k.unsigned_abs() as usize >= strands) {
            return Err(BraidError::LetterOutOfRange { letter, strands });
        }
        Ok(BraidWord { strands, word })
    }

    pub fn identity(strands: usize) -> Self {
        assert!(strands >= 1, "a braid needs at least one strand");
        BraidWord {
            strands,
            word: Vec::new(),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn word(&self) -> &[i32] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// `self` followed by `rhs`.
    pub fn concat(&self, rhs: &BraidWord) -> Result<BraidWord, BraidError> {
        if self.strands != rhs.strands {
            return Err(BraidError::StrandMismatch(self.strands, rhs.strands));
        }
        let mut word = self.word.clone();
        word.extend_from_slice(&rhs.word);
        Ok(BraidWord {
            strands: self.strands,
            word,
        })
    }

    /// Group inverse: reversed, every letter negated.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            word: self.word.iter().rev().map(|k| -k).collect(),
        }
    }

    /// The same word on `strands >= self.strands()` strands; extra strands
    /// are added on the right and never crossed.
    pub fn embed(&self, strands: usize) -> Result<BraidWord, BraidError> {
        if strands < self.strands {
            return Err(BraidError::StrandMismatch(self.strands, strands));
        }
        Ok(BraidWord {
            strands,
            word: self.word.clone(),
        })
    }

    /// `g b g^-1`; the closure is isotopic to that of `self` (Markov move I).
    pub fn conjugate(&self, g: &BraidWord) -> Result<BraidWord, BraidError> {
        g.concat(self)?.concat(&g.inverse())
    }

    /// Moves the first `k` letters to the end; another form of Markov move I.
    pub fn rotate(&self, k: usize) -> BraidWord {
        let mut word = self.word.clone();
        if !word.is_empty() {
            let k = k % word.len();
            word.rotate_left(k);
        }
        BraidWord {
            strands: self.strands,
            word,
        }
    }

    /// Adds a strand and a final crossing `s_n^sign` (Markov move II).
    pub fn stabilize(&self, positive: bool) -> BraidWord {
        let n = self.strands as i32;
        let mut word = self.word.clone();
        word.push(if positive { n } else { -n });
        BraidWord {
            strands: self.strands + 1,
            word,
        }
    }

    /// The permutation of strand positions induced by the word.
    pub fn permutation(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        for &k in &self.word {
            let i = k.unsigned_abs() as usize;
            perm.swap(i - 1, i);
        }
        perm
    }

    pub fn closure_info(&self) -> ClosureInfo {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut components = 0;
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            components += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = perm[i];
            }
        }
        let writhe = self.word.iter().map(|k| k.signum() as i64).sum();
        ClosureInfo { components, writhe }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{{", self.strands)?;
        for (i, k) in self.word.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, "}}}}")
    }
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.text[self.pos..].starts_with(|c: char| c.is_whitespace()) {
            self.pos += self.text[self.pos..].chars().next().map_or(1, char::len_utf8);
        }
    }

    fn error(&self, message: impl Into<String>) -> BraidError {
        BraidError::Syntax {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn expect(&mut self, c: char) -> Result<(), BraidError> {
        self.skip_ws();
        if self.text[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    fn peek_is(&mut self, c: char) -> bool {
        self.skip_ws();
        self.text[self.pos..].starts_with(c)
    }

    fn integer(&mut self) -> Result<i64, BraidError> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.text[start..];
        let len = rest
            .char_indices()
            .take_while(|&(i, c)| c.is_ascii_digit() || (i == 0 && (c == '-' || c == '+')))
            .count();
        self.pos += len;
        rest[..len].parse::<i64>().map_err(|_| BraidError::Syntax {
            offset: start,
            message: "expected an integer".into(),
        })
    }
}

/// Parses `{n,{k1,k2,...}}`, whitespace allowed anywhere between tokens.
pub fn parse_braid(text: &str) -> Result<BraidWord, BraidError> {
    let mut cur = Cursor { text, pos: 0 };
    cur.expect('{')?;
    let n_at = cur.pos;
    let n = cur.integer()?;
    if n < 1 {
        return Err(BraidError::NoStrands);
    }
    cur.expect(',')?;
    cur.expect('{')?;
    let mut word = Vec::new();
    if !cur.peek_is('}') {
        loop {
            let k = cur.integer()?;
            let letter = i32::try_from(k).map_err(|_| BraidError::Syntax {
                offset: cur.pos,
                message: "letter too large".into(),
            })?;
            word.push(letter);
            if cur.peek_is(',') {
                cur.expect(',')?;
            } else {
                break;
            }
        }
    }
    cur.expect('}')?;
    cur.expect('}')?;
    cur.skip_ws();
    if cur.pos != text.len() {
        return Err(cur.error("trailing characters"));
    }
    let strands = usize::try_from(n).map_err(|_| BraidError::Syntax {
        offset: n_at,
        message: "bad strand count".into(),
    })?;
    BraidWord::new(strands, word)
}

impl FromStr for BraidWord {
    type Err = BraidError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_braid(s)
    }
}

/// Reads a braid-list file: one braid per line, `#` starts a comment line,
/// blank lines are ignored.
pub fn parse_braid_list(text: &str) -> Result<Vec<BraidWord>, BraidError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let b = parse_braid(trimmed).map_err(|e| BraidError::Line {
            line: i + 1,
            source: Box::new(e),
        })?;
        out.push(b);
    }
    Ok(out)
}

/// Inverse of [`parse_braid_list`]; `header` lines are written as comments.
pub fn format_braid_list<'a, I: IntoIterator<Item = &'a BraidWord>>(header: &[&str], braids: I) -> String {
    let mut s = String::new();
    for h in header {
        s.push_str("# ");
        s.push_str(h);
        s.push('\n');
    }
    for b in braids {
        s.push_str(&b.to_string());
        s.push('\n');
    }
    s
}
