//! Generating sets of the cubic Hecke algebras `A_2..A_4` as braid words, and
//! the ten families of 5-strand words whose closures span the traces on `A_5`.
//!
//! All orders are fixed: `±` expands as `+` then `-`, products iterate their
//! left factor outermost.

use std::fmt;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::braid::{format_braid_list, BraidWord};

fn word(strands: usize, letters: &[i32]) -> BraidWord {
    BraidWord::new(strands, letters.to_vec()).expect("generator letters are in range")
}

fn cat(parts: &[&[i32]]) -> Vec<i32> {
    parts.iter().flat_map(|p| p.iter().copied()).collect()
}

const SIGNS: [i32; 2] = [1, -1];

fn s2_letters() -> Vec<Vec<i32>> {
    vec![vec![], vec![1], vec![-1]]
}

fn s3_letters() -> Vec<Vec<i32>> {
    let s2 = s2_letters();
    let mut out = s2.clone();
    for left in &s2 {
        for sign in SIGNS {
            for right in &s2 {
                out.push(cat(&[left, &[2 * sign], right]));
            }
        }
    }
    for left in &s2 {
        out.push(cat(&[left, &[-2, 1, -2]]));
    }
    out
}

/// The 27 words `u` with `A_4 = span(U S_3)`.
pub fn u_set() -> Vec<BraidWord> {
    let mut out: Vec<Vec<i32>> = vec![vec![], vec![-3, 2, -1, 2, -3], vec![3, -2, 1, -2, 3]];
    for a in SIGNS {
        out.push(vec![3 * a]);
    }
    for a in SIGNS {
        for b in SIGNS {
            out.push(vec![3 * a, 2 * b]);
        }
    }
    for a in SIGNS {
        for b in SIGNS {
            for c in SIGNS {
                out.push(vec![3 * a, 2 * b, c]);
            }
        }
    }
    for a in SIGNS {
        out.push(vec![3 * a, -2, 1, -2]);
    }
    out.push(vec![3, -2, 3]);
    for a in SIGNS {
        out.push(vec![3, -2, 3, a]);
    }
    out.push(vec![3, -2, 3, 1, -2, 1]);
    for a in SIGNS {
        for b in SIGNS {
            out.push(vec![3, -2, 3, a, 2 * b]);
        }
    }
    out.into_iter().map(|w| word(4, &w)).collect()
}

/// `[], [1], [-1]` on two strands.
pub fn enumerate_s2() -> Vec<BraidWord> {
    s2_letters().iter().map(|w| word(2, w)).collect()
}

/// The 24-element spanning set of `A_3`, on three strands.
pub fn enumerate_s3() -> Vec<BraidWord> {
    s3_letters().iter().map(|w| word(3, w)).collect()
}

/// The 648-element spanning set of `A_4`, on four strands.
///
/// Elements are `w u` with `w` in `S_3` varying fastest. Reading the product
/// the other way round (`u w`) repeats letter sequences, e.g. `[3] [2]` and
/// `[3, 2] []`; this order has no repeats.
pub fn enumerate_s4() -> Vec<BraidWord> {
    let s3 = s3_letters();
    let mut out = Vec::with_capacity(648);
    for u in u_set() {
        for w in &s3 {
            out.push(word(4, &cat(&[w, u.word()])));
        }
    }
    out
}

/// The S4 set itself, or one of the ten 5-strand families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    S4,
    Type1,
    Type2,
    Type3,
    Type4,
    Type5,
    Type6,
    Type7,
    Type8,
    Type9,
    Type10,
}

const W_PLUS: [i32; 5] = [3, -2, 1, -2, 3];
const W_MINUS: [i32; 5] = [-3, 2, -1, 2, -3];

impl Family {
    pub const TYPES: [Family; 10] = [
        Family::Type1,
        Family::Type2,
        Family::Type3,
        Family::Type4,
        Family::Type5,
        Family::Type6,
        Family::Type7,
        Family::Type8,
        Family::Type9,
        Family::Type10,
    ];

    /// `Some(k)` for `Type k`.
    pub fn type_number(self) -> Option<usize> {
        Family::TYPES.iter().position(|&f| f == self).map(|i| i + 1)
    }

    pub fn from_type_number(k: usize) -> Option<Family> {
        k.checked_sub(1).and_then(|i| Family::TYPES.get(i).copied())
    }

    pub fn strands(self) -> usize {
        if self == Family::S4 {
            4
        } else {
            5
        }
    }

    /// The word shared by every member of the family, placed first.
    pub fn fixed_word(self) -> BraidWord {
        let (wp, wm) = (&W_PLUS[..], &W_MINUS[..]);
        let letters: Vec<i32> = match self {
            Family::S4 => vec![],
            Family::Type1 => vec![4, -3, 4],
            Family::Type2 => vec![-4, 3, -2, 3, -4],
            Family::Type3 => vec![4, -3, 2, -3, 4],
            Family::Type4 => cat(&[&[-4], wp, &[-4]]),
            Family::Type5 => cat(&[&[4], wm, &[4]]),
            Family::Type6 => cat(&[&[-4], wm, &[-4]]),
            Family::Type7 => cat(&[&[4], wp, &[4]]),
            Family::Type8 => cat(&[&[4], wm, &[4], wm, &[4]]),
            Family::Type9 => cat(&[&[4], wp, &[-4], wp, &[4]]),
            Family::Type10 => cat(&[&[-4], wm, &[4], wm, &[-4]]),
        };
        word(self.strands(), &letters)
    }

    /// Short tag used in file names and reports: `s4`, `type1`, ...
    pub fn tag(self) -> String {
        match self.type_number() {
            Some(k) => format!("type{k}"),
            None => "s4".to_string(),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag())
    }
}

impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let lower = s.to_ascii_lowercase();
        if lower == "s4" {
            return Ok(Family::S4);
        }
        lower
            .strip_prefix("type")
            .and_then(|k| k.parse().ok())
            .and_then(Family::from_type_number)
            .ok_or_else(|| format!("unknown family '{s}'"))
    }
}

/// A word to be checked: the family's fixed word followed by an S4 element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckWord {
    pub family: Family,
    /// Position of the S4 element in [`enumerate_s4`].
    pub index: usize,
    pub prefix: BraidWord,
    pub suffix: BraidWord,
    pub full: BraidWord,
}

/// The 648 S4 closures as check words with an empty prefix.
pub fn s4_check_words() -> Vec<CheckWord> {
    family_check_words(Family::S4)
}

/// The 648 words of one family, in S4 enumeration order.
pub fn family_check_words(family: Family) -> Vec<CheckWord> {
    let prefix = family.fixed_word();
    enumerate_s4()
        .into_iter()
        .enumerate()
        .map(|(index, s)| {
            let suffix = s.embed(family.strands()).expect("S4 words fit on 5 strands");
            let full = prefix.concat(&suffix).expect("same strand count");
            CheckWord {
                family,
                index,
                prefix: prefix.clone(),
                suffix,
                full,
            }
        })
        .collect()
}

/// All 6480 five-strand check words, family by family.
pub fn enumerate_s5_check_words() -> Vec<CheckWord> {
    Family::TYPES.iter().flat_map(|&f| family_check_words(f)).collect()
}

/// Writes one braid-list file per family (`s4.txt`, `type1.txt`, ...) into
/// `dir` and returns the paths written.
pub fn write_family_files(dir: &Path) -> io::Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    for family in std::iter::once(Family::S4).chain(Family::TYPES) {
        let words: Vec<BraidWord> = family_check_words(family).into_iter().map(|c| c.full).collect();
        let header = format!("{family}: fixed word {}, {} words", family.fixed_word(), words.len());
        let path = dir.join(format!("{}.txt", family.tag()));
        fs::write(&path, format_braid_list(&[header.as_str()], &words))?;
        written.push(path);
    }
    Ok(written)
}
