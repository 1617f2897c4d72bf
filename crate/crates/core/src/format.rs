//! Line-oriented text formats for semigroup input.
//!
//! ```text
//! table 2          transform 3        matrix 2 bool
//! 0 0              2 3 1              1 0
//! 1 1              2 1 3              0 0
//!                  1 1 2
//!                                     0 1
//!                                     1 0
//! ```
//!
//! Any of them may end with an `involution` section holding either the
//! keyword `transpose` (matrix input only) or one `i j` line per element,
//! meaning `i* = j`. Lines starting with `#` are comments.

use crate::error::{Error, Result};
use crate::matrix::{Semiring, SmallMatrix};
use crate::semigroup::{ClosureLimits, ElementId, Semigroup, StarSemigroup};
use crate::transform::Transformation;

/// The involution section of a file, before validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvolutionSpec {
    Transpose,
    Map(Vec<(usize, usize)>),
}

/// A parsed input file.
#[derive(Debug, Clone)]
pub struct SemigroupFile {
    pub semigroup: Semigroup,
    pub involution: Option<InvolutionSpec>,
}

impl SemigroupFile {
    /// Validate the involution section against the semigroup, if present.
    pub fn star(&self) -> Result<Option<StarSemigroup>> {
        let Some(spec) = &self.involution else {
            return Ok(None);
        };
        let star = match spec {
            InvolutionSpec::Transpose => StarSemigroup::with_transpose(self.semigroup.clone())?,
            InvolutionSpec::Map(pairs) => {
                let n = self.semigroup.size();
                let mut map = vec![None; n];
                for &(i, j) in pairs {
                    if i >= n || j >= n {
                        return Err(Error::NotPermutation(i.max(j)));
                    }
                    map[i] = Some(ElementId::from(j));
                }
                let map = map
                    .into_iter()
                    .enumerate()
                    .map(|(i, x)| {
                        x.ok_or(Error::InvolutionLength {
                            expected: n,
                            found: i,
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                StarSemigroup::new(self.semigroup.clone(), map)?
            }
        };
        Ok(Some(star))
    }
}

struct Lines<'a> {
    items: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let items = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.starts_with('#'))
            .collect();
        Lines { items, pos: 0 }
    }

    /// Next nonblank line.
    fn next(&mut self) -> Option<(usize, &'a str)> {
        while let Some(&(n, l)) = self.items.get(self.pos) {
            self.pos += 1;
            if !l.is_empty() {
                return Some((n, l));
            }
        }
        None
    }

    fn peek(&self) -> Option<(usize, &'a str)> {
        self.items[self.pos..]
            .iter()
            .copied()
            .find(|(_, l)| !l.is_empty())
    }

    fn last_line(&self) -> usize {
        self.items.last().map_or(1, |&(n, _)| n)
    }
}

fn numbers(line: usize, text: &str) -> Result<Vec<u64>> {
    text.split_whitespace()
        .map(|w| {
            w.parse::<u64>().map_err(|_| {
                Error::parse(line, format!("expected a nonnegative integer, got `{w}`"))
            })
        })
        .collect()
}

fn header_arg(line: usize, word: Option<&str>, what: &str) -> Result<usize> {
    word.and_then(|w| w.parse().ok())
        .ok_or_else(|| Error::parse(line, format!("missing or invalid {what}")))
}

/// Parse a semigroup file with default closure limits.
pub fn parse_semigroup(text: &str) -> Result<SemigroupFile> {
    parse_semigroup_with(text, ClosureLimits::default())
}

pub fn parse_semigroup_with(text: &str, limits: ClosureLimits) -> Result<SemigroupFile> {
    let mut lines = Lines::new(text);
    let (hline, header) = lines.next().ok_or_else(|| Error::parse(1, "empty input"))?;
    let mut words = header.split_whitespace();
    let kind = words.next().unwrap_or_default();
    let semigroup = match kind {
        "table" => {
            let n = header_arg(hline, words.next(), "table size")?;
            let mut rows = Vec::with_capacity(n);
            for r in 0..n {
                let (ln, l) = lines.next().ok_or_else(|| {
                    Error::parse(lines.last_line(), format!("missing table row {r}"))
                })?;
                let row: Vec<usize> = numbers(ln, l)?.into_iter().map(|x| x as usize).collect();
                if row.len() != n {
                    return Err(Error::parse(
                        ln,
                        format!("expected {n} entries, got {}", row.len()),
                    ));
                }
                if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                    return Err(Error::parse(ln, format!("entry {bad} out of range 0..{n}")));
                }
                rows.push(row);
            }
            Semigroup::from_cayley_table(n, &rows)?
        }
        "transform" => {
            let degree = header_arg(hline, words.next(), "degree")?;
            let mut gens = Vec::new();
            while let Some((ln, l)) = lines.peek() {
                if l == "involution" {
                    break;
                }
                lines.next();
                let images: Vec<usize> = numbers(ln, l)?.into_iter().map(|x| x as usize).collect();
                if images.len() != degree {
                    return Err(Error::parse(
                        ln,
                        format!("expected {degree} images, got {}", images.len()),
                    ));
                }
                gens.push(
                    Transformation::from_images(&images)
                        .map_err(|e| Error::parse(ln, e.to_string()))?,
                );
            }
            if gens.is_empty() {
                return Err(Error::parse(hline, "no generators"));
            }
            Semigroup::from_transformation_generators(degree, &gens, limits)?
        }
        "matrix" => {
            let k = header_arg(hline, words.next(), "matrix size")?;
            let semiring = words
                .next()
                .and_then(Semiring::from_name)
                .ok_or_else(|| Error::parse(hline, "semiring must be `nat` or `bool`"))?;
            let mut gens = Vec::new();
            while let Some((_, l)) = lines.peek() {
                if l == "involution" {
                    break;
                }
                let mut rows = Vec::with_capacity(k);
                for _ in 0..k {
                    let (ln, l) = lines
                        .next()
                        .filter(|(_, l)| *l != "involution")
                        .ok_or_else(|| Error::parse(lines.last_line(), "incomplete matrix"))?;
                    let row = numbers(ln, l)?;
                    if row.len() != k {
                        return Err(Error::parse(
                            ln,
                            format!("expected {k} entries, got {}", row.len()),
                        ));
                    }
                    rows.push(row);
                }
                gens.push(SmallMatrix::new(semiring, rows)?);
            }
            if gens.is_empty() {
                return Err(Error::parse(hline, "no generators"));
            }
            Semigroup::from_matrix_generators(&gens, semiring, limits)?
        }
        other => {
            return Err(Error::parse(
                hline,
                format!("unknown format `{other}`; expected table, transform or matrix"),
            ))
        }
    };

    let involution = match lines.next() {
        None => None,
        Some((_, "involution")) => {
            if let Some((_, "transpose")) = lines.peek() {
                lines.next();
                Some(InvolutionSpec::Transpose)
            } else {
                let mut pairs = Vec::new();
                let mut seen = vec![false; semigroup.size()];
                while let Some((ln, l)) = lines.next() {
                    let v = numbers(ln, l)?;
                    let [i, j] = v[..] else {
                        return Err(Error::parse(ln, "expected `i j`"));
                    };
                    let (i, j) = (i as usize, j as usize);
                    if i >= seen.len() || j >= seen.len() {
                        return Err(Error::parse(ln, "element index out of range"));
                    }
                    if std::mem::replace(&mut seen[i], true) {
                        return Err(Error::parse(ln, format!("element {i} mapped twice")));
                    }
                    pairs.push((i, j));
                }
                if let Some(i) = seen.iter().position(|&x| !x) {
                    return Err(Error::parse(
                        lines.last_line(),
                        format!("involution misses element {i}"),
                    ));
                }
                Some(InvolutionSpec::Map(pairs))
            }
        }
        Some((ln, l)) => return Err(Error::parse(ln, format!("unexpected line `{l}`"))),
    };
    if let Some((ln, l)) = lines.next() {
        return Err(Error::parse(ln, format!("unexpected line `{l}`")));
    }

    Ok(SemigroupFile {
        semigroup,
        involution,
    })
}

/// Cayley serialization, with an explicit involution section when given.
pub fn to_cayley_text(s: &Semigroup, star: Option<&[ElementId]>) -> String {
    let mut out = s.to_cayley_text();
    if let Some(star) = star {
        out.push_str("involution\n");
        for (i, j) in star.iter().enumerate() {
            out.push_str(&format!("{i} {}\n", j.index()));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_table() {
        let f = parse_semigroup("table 2\n0 0\n1 1\n").unwrap();
        assert_eq!(f.semigroup.size(), 2);
        assert!(f.involution.is_none());
        assert!(f.star().unwrap().is_none());
    }

    #[test]
    fn parses_transformations_with_comments() {
        let text = "# T3\ntransform 3\n2 3 1\n2 1 3\n\n1 1 2\n";
        let f = parse_semigroup(text).unwrap();
        assert_eq!(f.semigroup.size(), 27);
    }

    #[test]
    fn parses_matrices_and_transpose() {
        let text = "matrix 2 bool\n1 0\n0 0\n\n0 1\n0 0\n\n0 0\n1 0\ninvolution\ntranspose\n";
        let f = parse_semigroup(text).unwrap();
        let star = f.star().unwrap().unwrap();
        let s = star.semigroup();
        let e12 = s.resolve("b").unwrap();
        assert_eq!(s.label(star.star(e12)), "[[0,0],[1,0]]");
    }

    #[test]
    fn parses_explicit_involution() {
        let text = "table 2\n0 1\n1 0\ninvolution\n0 0\n1 1\n";
        let f = parse_semigroup(text).unwrap();
        assert_eq!(
            f.involution,
            Some(InvolutionSpec::Map(vec![(0, 0), (1, 1)]))
        );
        assert!(f.star().unwrap().is_some());
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let cases = [
            ("", 1),
            ("tabel 2\n", 1),
            ("table 2\n0 0\n1\n", 3),
            ("table 2\n0 0\n1 x\n", 3),
            ("table 2\n0 0\n1 5\n", 3),
            ("transform 3\n1 2\n", 2),
            ("transform 3\n1 2 4\n", 2),
            ("matrix 2 real\n", 1),
            ("matrix 2 nat\n1 0\n0 1 1\n", 3),
            ("table 1\n0\ninvolution\n0 0\n0 0\n", 5),
            ("table 1\n0\nextra\n", 3),
        ];
        for (text, line) in cases {
            match parse_semigroup(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn validation_errors_are_not_parse_errors() {
        assert!(matches!(
            parse_semigroup("table 2\n0 1\n0 0\n"),
            Err(Error::NonAssociative { .. })
        ));
        let f = parse_semigroup("table 2\n0 0\n1 1\ninvolution\n0 0\n1 1\n").unwrap();
        assert!(matches!(f.star(), Err(Error::NotAntihomomorphic(_, _))));
        let f = parse_semigroup("table 1\n0\ninvolution\ntranspose\n").unwrap();
        assert_eq!(f.star().unwrap_err(), Error::TransposeWithoutMatrices);
    }

    #[test]
    fn cayley_round_trip() {
        let f = parse_semigroup("transform 2\n2 1\n1 1\n").unwrap();
        let text = to_cayley_text(&f.semigroup, None);
        let g = parse_semigroup(&text).unwrap();
        assert_eq!(g.semigroup.table_rows(), f.semigroup.table_rows());
    }
}
