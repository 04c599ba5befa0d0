//! Text formats.
//!
//! All formats are line based, UTF-8, with `#` starting a comment anywhere
//! on a line. Blank lines are ignored. Serializers emit the canonical form
//! (row-major, ascending indices, reduced grades) with lines joined by `\n`
//! and no trailing newline.
//!
//! ```text
//! hqg 2            ifs 2              qsg 2        chain 2
//! 0 0 : 0 1        0 : 9/10 1/20      mult         3/5 : 0
//! 0 1 : 0 1        1 : 1/5 3/5        0 1          3/10 : 0 1
//! 1 0 : 0 1                           1 0
//! 1 1 : 0 1                           ldiv
//!                                     ...
//! ```

use crate::error::ParseError;
use crate::fundamental::{Quasigroup, QuasigroupOp};
use crate::grade::{grade_parse, Grade};
use crate::hyperstructure::Hypergroupoid;
use crate::ifs::{FuzzySet, IntuitionisticFuzzySet};
use crate::ifsh::LevelChain;
use crate::subset::{CarrierSubset, MAX_ORDER};

type Parsed<T> = Result<T, ParseError>;

#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    column: usize,
    text: &'a str,
}

struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
}

impl Line<'_> {
    fn err(&self, token: usize, message: impl Into<String>) -> ParseError {
        let column = self
            .tokens
            .get(token)
            .map(|t| t.column)
            .unwrap_or_else(|| self.tokens.last().map_or(1, |t| t.column + t.text.chars().count()));
        ParseError::new(self.number, column, message)
    }
}

/// Splits into non-empty lines of whitespace-separated tokens, dropping comments.
fn lines(text: &str) -> Vec<Line<'_>> {
    let mut out = vec![];
    for (i, raw) in text.split('\n').enumerate() {
        let raw = raw.strip_suffix('\r').unwrap_or(raw);
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = vec![];
        let mut start: Option<(usize, usize)> = None;
        for (col, (byte, ch)) in content.char_indices().enumerate() {
            if ch.is_whitespace() {
                if let Some((c, b)) = start.take() {
                    tokens.push(Token {
                        column: c + 1,
                        text: &content[b..byte],
                    });
                }
            } else if start.is_none() {
                start = Some((col, byte));
            }
        }
        if let Some((c, b)) = start {
            tokens.push(Token {
                column: c + 1,
                text: &content[b..],
            });
        }
        if !tokens.is_empty() {
            out.push(Line { number: i + 1, tokens });
        }
    }
    out
}

fn end_of_input(text: &str) -> usize {
    text.split('\n').count().max(1)
}

fn parse_index(line: &Line, token: usize, bound: usize, what: &str) -> Parsed<usize> {
    let Some(t) = line.tokens.get(token) else {
        return Err(line.err(token, format!("expected {what}")));
    };
    let v: usize = t
        .text
        .parse()
        .ok()
        .filter(|_| t.text.bytes().all(|b| b.is_ascii_digit()))
        .ok_or_else(|| line.err(token, format!("expected {what}, found `{}`", t.text)))?;
    if v >= bound {
        return Err(line.err(token, format!("{what} {v} out of range (order {bound})")));
    }
    Ok(v)
}

fn parse_header<'a>(lines: &[Line<'a>], keyword: &str, text: &str) -> Parsed<usize> {
    let Some(line) = lines.first() else {
        return Err(ParseError::new(
            end_of_input(text),
            1,
            format!("missing `{keyword} <n>` header"),
        ));
    };
    if line.tokens[0].text != keyword {
        return Err(line.err(
            0,
            format!("expected `{keyword}` header, found `{}`", line.tokens[0].text),
        ));
    }
    if line.tokens.len() != 2 {
        return Err(line.err(2.min(line.tokens.len()), format!("header must be `{keyword} <n>`")));
    }
    let n = parse_index(line, 1, MAX_ORDER + 1, "order")?;
    if n == 0 {
        return Err(line.err(1, "order must be positive"));
    }
    Ok(n)
}

fn expect_colon(line: &Line, token: usize) -> Parsed<()> {
    match line.tokens.get(token) {
        Some(t) if t.text == ":" => Ok(()),
        Some(t) => Err(line.err(token, format!("expected `:`, found `{}`", t.text))),
        None => Err(line.err(token, "expected `:`")),
    }
}

fn parse_grade_token(line: &Line, token: usize) -> Parsed<Grade> {
    let Some(t) = line.tokens.get(token) else {
        return Err(line.err(token, "expected grade"));
    };
    grade_parse(t.text).map_err(|e| line.err(token, e.to_string()))
}

fn subset_tokens(line: &Line, from: usize, n: usize) -> Parsed<CarrierSubset> {
    let mut s = CarrierSubset::EMPTY;
    for i in from..line.tokens.len() {
        s.insert(parse_index(line, i, n, "element")?);
    }
    Ok(s)
}

fn join_elements(s: CarrierSubset) -> String {
    s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// Parses `hqg <n>` followed by all `n²` cells `i j : k1 k2 ...` in any order.
pub fn parse_hqg(text: &str) -> Parsed<Hypergroupoid> {
    let lines = lines(text);
    let n = parse_header(&lines, "hqg", text)?;
    let mut table: Vec<Option<CarrierSubset>> = vec![None; n * n];
    for line in &lines[1..] {
        let i = parse_index(line, 0, n, "row index")?;
        let j = parse_index(line, 1, n, "column index")?;
        expect_colon(line, 2)?;
        if line.tokens.len() == 3 {
            return Err(line.err(2, format!("cell ({i}, {j}) is empty")));
        }
        let cell = subset_tokens(line, 3, n)?;
        if table[i * n + j].replace(cell).is_some() {
            return Err(line.err(0, format!("duplicate cell ({i}, {j})")));
        }
    }
    if let Some(missing) = table.iter().position(Option::is_none) {
        return Err(ParseError::new(
            end_of_input(text),
            1,
            format!("missing cell ({}, {})", missing / n, missing % n),
        ));
    }
    Ok(Hypergroupoid::new(n, table.into_iter().map(Option::unwrap).collect()).expect("cells validated during parsing"))
}

pub fn serialize_hqg(h: &Hypergroupoid) -> String {
    let n = h.order();
    let mut out = vec![format!("hqg {n}")];
    for i in 0..n {
        for j in 0..n {
            out.push(format!("{i} {j} : {}", join_elements(h.product(i, j))));
        }
    }
    out.join("\n")
}

/// Parses `ifs <n>` followed by one `i : <mu> <lambda>` line per element.
///
/// The sum constraint is not checked here; pass the result to
/// [`crate::ifs::ifs_validate`].
pub fn parse_ifs(text: &str) -> Parsed<(FuzzySet, FuzzySet)> {
    let lines = lines(text);
    let n = parse_header(&lines, "ifs", text)?;
    let mut rows: Vec<Option<(Grade, Grade)>> = vec![None; n];
    for line in &lines[1..] {
        let i = parse_index(line, 0, n, "element")?;
        expect_colon(line, 1)?;
        let mu = parse_grade_token(line, 2)?;
        let lambda = parse_grade_token(line, 3)?;
        if line.tokens.len() > 4 {
            return Err(line.err(4, "unexpected token after grades"));
        }
        if rows[i].replace((mu, lambda)).is_some() {
            return Err(line.err(0, format!("duplicate element {i}")));
        }
    }
    if let Some(missing) = rows.iter().position(Option::is_none) {
        return Err(ParseError::new(
            end_of_input(text),
            1,
            format!("missing element {missing}"),
        ));
    }
    let (mu, lambda): (Vec<_>, Vec<_>) = rows.into_iter().map(Option::unwrap).unzip();
    Ok((
        FuzzySet::new(mu).expect("order checked"),
        FuzzySet::new(lambda).expect("order checked"),
    ))
}

pub fn serialize_ifs(a: &IntuitionisticFuzzySet) -> String {
    let mut out = vec![format!("ifs {}", a.len())];
    for x in 0..a.len() {
        out.push(format!("{x} : {} {}", a.mu()[x], a.lambda()[x]));
    }
    out.join("\n")
}

/// Parses `chain <n>` followed by `<grade> : k1 k2 ...` lines, one per level.
/// Returns the carrier order and the raw levels.
pub fn parse_chain(text: &str) -> Parsed<(usize, Vec<(Grade, CarrierSubset)>)> {
    let lines = lines(text);
    let n = parse_header(&lines, "chain", text)?;
    let mut levels = vec![];
    for line in &lines[1..] {
        let t = parse_grade_token(line, 0)?;
        expect_colon(line, 1)?;
        if line.tokens.len() == 2 {
            return Err(line.err(1, format!("level {t} has an empty set")));
        }
        levels.push((t, subset_tokens(line, 2, n)?));
    }
    if levels.is_empty() {
        return Err(ParseError::new(end_of_input(text), 1, "chain has no levels"));
    }
    Ok((n, levels))
}

pub fn serialize_chain(order: usize, chain: &LevelChain) -> String {
    let mut out = vec![format!("chain {order}")];
    for (t, k) in chain.levels() {
        out.push(format!("{t} : {}", join_elements(k)));
    }
    out.join("\n")
}

/// Parses the `qsg` format and checks that the division tables agree with
/// the multiplication table.
pub fn parse_qsg(text: &str) -> Parsed<Quasigroup> {
    let lines = lines(text);
    let m = parse_header(&lines, "qsg", text)?;
    let mut cursor = 1;
    let mut blocks: Vec<Vec<usize>> = vec![];
    for op in QuasigroupOp::ALL {
        let label = op.to_string();
        let Some(line) = lines.get(cursor) else {
            return Err(ParseError::new(
                end_of_input(text),
                1,
                format!("missing `{label}` block"),
            ));
        };
        if line.tokens.len() != 1 || line.tokens[0].text != label {
            return Err(line.err(0, format!("expected `{label}`")));
        }
        cursor += 1;
        let mut block = Vec::with_capacity(m * m);
        for _ in 0..m {
            let Some(row) = lines.get(cursor) else {
                return Err(ParseError::new(
                    end_of_input(text),
                    1,
                    format!("`{label}` block is short"),
                ));
            };
            if row.tokens.len() != m {
                return Err(row.err(m.min(row.tokens.len()), format!("expected {m} entries")));
            }
            for k in 0..m {
                block.push(parse_index(row, k, m, "entry")?);
            }
            cursor += 1;
        }
        blocks.push(block);
    }
    if let Some(extra) = lines.get(cursor) {
        return Err(extra.err(0, "unexpected content after `rdiv` block"));
    }
    let mult_line = &lines[1];
    let q = Quasigroup::from_mult(m, blocks[0].clone()).map_err(|e| mult_line.err(0, e.to_string()))?;
    // locate the first disagreeing division entry
    for (b, op) in [(1, QuasigroupOp::LeftDiv), (2, QuasigroupOp::RightDiv)] {
        if let Some(k) = (0..m * m).find(|&k| blocks[b][k] != q.table(op)[k]) {
            let row = &lines[1 + b * (m + 1) + 1 + k / m];
            return Err(row.err(k % m, format!("`{op}` entry disagrees with `mult`")));
        }
    }
    Ok(q)
}

pub fn serialize_quasigroup(q: &Quasigroup) -> String {
    let m = q.order();
    let mut out = vec![format!("qsg {m}")];
    for op in QuasigroupOp::ALL {
        out.push(op.to_string());
        let t = q.table(op);
        for r in 0..m {
            out.push(
                t[r * m..(r + 1) * m]
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
            );
        }
    }
    out.join("\n")
}
