//! The lattice text format.
//!
//! ```text
//! # the three-element chain
//! lattice 3
//! bottom 0
//! top 2
//! 0 < 1
//! 1 < 2
//! ```
//!
//! Pairs `i < j` generate the order by reflexive-transitive closure. In
//! strict mode the `bottom` and `top` lines are required and every pair must
//! be a covering pair of the resulting order.

use std::fmt;
use std::fmt::Write as _;

use pointfree_core::Lattice;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based line number, or 0 for whole-file errors.
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

fn index(line: usize, word: &str, n: usize) -> Result<usize, ParseError> {
    let i: usize = word.parse().map_err(|_| err(line, format!("expected an element index, found `{word}`")))?;
    if i >= n {
        return Err(err(line, format!("index {i} out of range for {n} elements")));
    }
    Ok(i)
}

pub fn parse(text: &str, strict: bool) -> Result<Lattice, ParseError> {
    let mut n = None;
    let mut bottom = None;
    let mut top = None;
    let mut pairs = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let words: Vec<&str> = content.split_whitespace().collect();
        match (n, words.as_slice()) {
            (None, ["lattice", count]) => {
                let c: usize = count.parse().map_err(|_| err(line, format!("bad element count `{count}`")))?;
                if c == 0 {
                    return Err(err(line, "a lattice needs at least one element"));
                }
                n = Some(c);
            }
            (None, _) => return Err(err(line, "expected the header `lattice <n>`")),
            (Some(_), ["lattice", ..]) => return Err(err(line, "duplicate header")),
            (Some(c), ["bottom", i]) => {
                if bottom.replace((line, index(line, i, c)?)).is_some() {
                    return Err(err(line, "duplicate bottom line"));
                }
            }
            (Some(c), ["top", i]) => {
                if top.replace((line, index(line, i, c)?)).is_some() {
                    return Err(err(line, "duplicate top line"));
                }
            }
            (Some(c), [a, "<", b]) => pairs.push((line, index(line, a, c)?, index(line, b, c)?)),
            (Some(_), _) => return Err(err(line, format!("unrecognized line `{content}`"))),
        }
    }
    let n = n.ok_or_else(|| err(0, "missing header `lattice <n>`"))?;
    let plain: Vec<(usize, usize)> = pairs.iter().map(|&(_, a, b)| (a, b)).collect();
    let lattice = Lattice::from_covers(n, &plain).map_err(|e| err(0, e.to_string()))?;
    if strict {
        let (bl, b) = bottom.ok_or_else(|| err(0, "strict mode requires a `bottom` line"))?;
        let (tl, t) = top.ok_or_else(|| err(0, "strict mode requires a `top` line"))?;
        if b != lattice.bottom() {
            return Err(err(bl, format!("declared bottom {b} but the order's bottom is {}", lattice.bottom())));
        }
        if t != lattice.top() {
            return Err(err(tl, format!("declared top {t} but the order's top is {}", lattice.top())));
        }
        let covers = lattice.covers();
        if let Some(&(line, a, b)) = pairs.iter().find(|&&(_, a, b)| covers.binary_search(&(a, b)).is_err()) {
            return Err(err(line, format!("{a} < {b} is not a covering pair")));
        }
    } else {
        for (line, v, which, actual) in
            [bottom.map(|(l, v)| (l, v, "bottom", lattice.bottom())), top.map(|(l, v)| (l, v, "top", lattice.top()))]
                .into_iter()
                .flatten()
        {
            if v != actual {
                return Err(err(line, format!("declared {which} {v} but the order's {which} is {actual}")));
            }
        }
    }
    Ok(lattice)
}

/// Canonical form: header, bottom, top, then the covering pairs in
/// increasing order.
pub fn serialize(lattice: &Lattice) -> String {
    let mut out = String::new();
    writeln!(out, "lattice {}", lattice.len()).unwrap();
    writeln!(out, "bottom {}", lattice.bottom()).unwrap();
    writeln!(out, "top {}", lattice.top()).unwrap();
    for (a, b) in lattice.covers() {
        writeln!(out, "{a} < {b}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use pointfree_core::generators::{boolean, chain};

    #[test]
    fn chain_round_trip() {
        let text = serialize(&chain(3));
        assert_eq!(text, "lattice 3\nbottom 0\ntop 2\n0 < 1\n1 < 2\n");
        assert_eq!(parse(&text, true).unwrap(), chain(3));
    }

    #[test]
    fn comments_and_transitive_pairs() {
        let text = "# B2\nlattice 4\n0 < 1\n0 < 2 # atom\n1 < 3\n2 < 3\n0 < 3\n";
        assert_eq!(parse(text, false).unwrap(), boolean(2));
        let e = parse(&format!("{text}bottom 0\ntop 3\n"), true).unwrap_err();
        assert_eq!(e.line, 7);
    }

    #[test]
    fn strict_mode_needs_bounds() {
        assert!(parse("lattice 2\n0 < 1\n", true).is_err());
        assert!(parse("lattice 2\nbottom 0\ntop 1\n0 < 1\n", true).is_ok());
        assert_eq!(parse("lattice 2\nbottom 1\n0 < 1\n", false).unwrap_err().line, 2);
    }

    #[test]
    fn malformed_input() {
        assert_eq!(parse("0 < 1\n", false).unwrap_err().line, 1);
        assert_eq!(parse("lattice 2\n0 < 5\n", false).unwrap_err().line, 2);
        assert!(parse("lattice 3\n0 < 1\n0 < 2\n", false).is_err());
        assert!(parse("lattice 2\n0 < 1\n1 < 0\n", false).is_err());
        assert!(parse("", false).is_err());
    }

    #[test]
    fn single_element() {
        let l = parse("lattice 1\n", true).unwrap_err();
        assert!(l.message.contains("bottom"));
        assert_eq!(parse("lattice 1\nbottom 0\ntop 0\n", true).unwrap(), chain(1));
    }
}
