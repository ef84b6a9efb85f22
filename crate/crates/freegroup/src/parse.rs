use crate::{FreeGroupError, FreeGroupMap, Word};

fn perr(pos: usize, msg: impl Into<String>) -> FreeGroupError {
    FreeGroupError::Parse { pos, msg: msg.into() }
}

/// Parses words like `g1 g2 G1 G2`, `g1^3 G2^-2` or `1`. Tokens may be juxtaposed without spaces.
pub fn parse_word(rank: usize, text: &str) -> Result<Word, FreeGroupError> {
    let bytes = text.as_bytes();
    let mut i = 0;
    let mut letters = Vec::new();
    let number = |i: &mut usize| -> Option<i64> {
        let start = *i;
        if *i < bytes.len() && (bytes[*i] == b'-' || bytes[*i] == b'+') {
            *i += 1;
        }
        while *i < bytes.len() && bytes[*i].is_ascii_digit() {
            *i += 1;
        }
        text[start..*i].parse().ok()
    };
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() || c == b'*' || c == b'.' {
            i += 1;
            continue;
        }
        let start = i;
        match c {
            b'g' | b'G' => {
                i += 1;
                let idx = number(&mut i)
                    .filter(|&n| n >= 1)
                    .ok_or_else(|| perr(start, "expected a generator index after g/G"))?;
                let idx = idx as usize - 1;
                if idx >= rank {
                    return Err(perr(start, format!("generator g{} exceeds rank {rank}", idx + 1)));
                }
                let mut e = if c == b'g' { 1 } else { -1 };
                if i < bytes.len() && bytes[i] == b'^' {
                    i += 1;
                    let p = number(&mut i).ok_or_else(|| perr(i, "expected an integer exponent"))?;
                    e *= p;
                }
                letters.push((idx, e));
            }
            b'1' => {
                i += 1;
            }
            _ => return Err(perr(start, format!("unexpected character '{}'", c as char))),
        }
    }
    Word::from_letters(rank, letters)
}

/// A named endomorphism read from the candidate format `name: g1 -> <word>; g2 -> <word>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedMap {
    pub name: String,
    pub line: usize,
    pub map: FreeGroupMap,
}

/// One candidate per non-empty line; `#` starts a comment. Generators not mentioned are fixed.
pub fn parse_candidates(rank: usize, text: &str) -> Result<Vec<NamedMap>, (usize, FreeGroupError)> {
    let mut out = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line_no = ln + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (name, body) = line
            .split_once(':')
            .ok_or_else(|| (line_no, perr(0, "missing ':' after the candidate name")))?;
        let mut changes = Vec::new();
        for clause in body.split(';').map(str::trim).filter(|s| !s.is_empty()) {
            let (lhs, rhs) = clause
                .split_once("->")
                .ok_or_else(|| (line_no, perr(0, format!("clause '{clause}' lacks '->'"))))?;
            let lhs = lhs.trim();
            let idx: usize = lhs
                .strip_prefix('g')
                .and_then(|s| s.parse().ok())
                .filter(|&n| n >= 1 && n <= rank)
                .ok_or_else(|| (line_no, perr(0, format!("bad generator '{lhs}'"))))?;
            let w = parse_word(rank, rhs).map_err(|e| (line_no, e))?;
            changes.push((idx - 1, w));
        }
        let map = FreeGroupMap::with_images(rank, changes).map_err(|e| (line_no, e))?;
        out.push(NamedMap {
            name: name.trim().to_string(),
            line: line_no,
            map,
        });
    }
    Ok(out)
}
