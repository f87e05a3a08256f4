//! Text syntax shared by the CLI and test fixtures.
//!
//! Set partition `{{1,3},{2}}`; set partition into lists `{[3,1],[2]}`;
//! set composition `[{1,2},{3}]`; permutation `325614` or `3,2,5,6,1,4`;
//! word `1,2,3,4,3,2`; integer partition `[4,2]`.

use std::fmt;
use std::str::FromStr;

use super::*;
use crate::error::Error;

fn join(items: impl Iterator<Item = String>, sep: &str) -> String {
    items.collect::<Vec<_>>().join(sep)
}

fn fmt_set(b: &[u32]) -> String {
    format!("{{{}}}", join(b.iter().map(|x| x.to_string()), ","))
}

fn fmt_list(l: &[u32]) -> String {
    format!("[{}]", join(l.iter().map(|x| x.to_string()), ","))
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", join(self.blocks().iter().map(|b| fmt_set(b)), ","))
    }
}

impl fmt::Display for ListSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", join(self.lists().iter().map(|l| fmt_list(l)), ","))
    }
}

impl fmt::Display for SetComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetComposition::Unit => write!(f, "1"),
            SetComposition::Absorbing(0) => write!(f, "[]"),
            SetComposition::Absorbing(m) => write!(f, "o{m}"),
            SetComposition::Proper { blocks, .. } => {
                write!(f, "[{}]", join(blocks.iter().map(|b| fmt_set(b)), ","))
            }
        }
    }
}

impl fmt::Display for IntegerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", join(self.parts().iter().map(|x| x.to_string()), ","))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.size() <= 9 {
            for &x in self.one_line() {
                write!(f, "{x}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", join(self.one_line().iter().map(|x| x.to_string()), ","))
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", join(self.letters().iter().map(|x| x.to_string()), ","))
    }
}

fn parse_err(s: &str, what: &str) -> Error {
    Error::Parse(format!("cannot parse {what} from {s:?}"))
}

fn strip<'a>(s: &'a str, open: char, close: char, what: &str) -> crate::error::Result<&'a str> {
    let s = s.trim();
    if s.len() < 2 || !s.starts_with(open) || !s.ends_with(close) {
        return Err(parse_err(s, what));
    }
    Ok(&s[1..s.len() - 1])
}

/// Splits at top-level commas, respecting `{}` and `[]` nesting.
pub fn split_top(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '{' | '[' => depth += 1,
            '}' | ']' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

fn parse_ints(s: &str, what: &str) -> crate::error::Result<Vec<u32>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(vec![]);
    }
    s.split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| parse_err(s, what)))
        .collect()
}

fn parse_block(s: &str) -> crate::error::Result<Vec<u32>> {
    parse_ints(strip(s, '{', '}', "block")?, "block")
}

fn parse_seq(s: &str) -> crate::error::Result<Vec<u32>> {
    parse_ints(strip(s, '[', ']', "list")?, "list")
}

impl FromStr for SetPartition {
    type Err = Error;
    fn from_str(s: &str) -> crate::error::Result<Self> {
        let inner = strip(s, '{', '}', "set partition")?;
        if inner.trim().is_empty() {
            return Ok(SetPartition::empty());
        }
        let blocks: Vec<Vec<u32>> = split_top(inner)
            .into_iter()
            .map(parse_block)
            .collect::<crate::error::Result<_>>()?;
        let n = blocks.iter().map(|b| b.len()).sum();
        SetPartition::new(n, blocks)
    }
}

impl FromStr for ListSetPartition {
    type Err = Error;
    fn from_str(s: &str) -> crate::error::Result<Self> {
        let inner = strip(s, '{', '}', "set partition into lists")?;
        if inner.trim().is_empty() {
            return Ok(ListSetPartition::empty());
        }
        let lists: Vec<Vec<u32>> = split_top(inner)
            .into_iter()
            .map(parse_seq)
            .collect::<crate::error::Result<_>>()?;
        let n = lists.iter().map(|l| l.len()).sum();
        ListSetPartition::new(n, lists)
    }
}

impl FromStr for SetComposition {
    type Err = Error;
    fn from_str(s: &str) -> crate::error::Result<Self> {
        let t = s.trim();
        if t == "1" {
            return Ok(SetComposition::Unit);
        }
        if let Some(m) = t.strip_prefix('o') {
            let m = m.parse::<usize>().map_err(|_| parse_err(s, "set composition"))?;
            return Ok(SetComposition::Absorbing(m));
        }
        let inner = strip(t, '[', ']', "set composition")?;
        if inner.trim().is_empty() {
            return Ok(SetComposition::Absorbing(0));
        }
        let blocks: Vec<Vec<u32>> = split_top(inner)
            .into_iter()
            .map(parse_block)
            .collect::<crate::error::Result<_>>()?;
        let n = blocks.iter().map(|b| b.len()).sum();
        SetComposition::proper(n, blocks)
    }
}

impl FromStr for IntegerPartition {
    type Err = Error;
    fn from_str(s: &str) -> crate::error::Result<Self> {
        IntegerPartition::new(parse_seq(s)?)
    }
}

impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> crate::error::Result<Self> {
        let t = s.trim();
        let word: Vec<u32> = if t.contains(',') {
            parse_ints(t, "permutation")?
        } else {
            t.chars()
                .map(|c| c.to_digit(10).ok_or_else(|| parse_err(s, "permutation")))
                .collect::<crate::error::Result<_>>()?
        };
        Permutation::new(word)
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> crate::error::Result<Self> {
        Ok(Word::new(parse_ints(s, "word")?))
    }
}
