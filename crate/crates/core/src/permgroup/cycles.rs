//! Cycle-notation parsing: `(2,4)(3,5)`, 1-based points, whitespace ignored.
//! The identity may be written `()` or `id`.

use thiserror::Error;

use super::perm::Perm;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("column {column}: {message}")]
pub struct CycleParseError {
    /// 1-based character column in the parsed text.
    pub column: usize,
    pub message: String,
}

impl CycleParseError {
    fn new(column: usize, message: impl Into<String>) -> Self {
        CycleParseError { column, message: message.into() }
    }

    pub(crate) fn shifted(mut self, offset: usize) -> Self {
        self.column += offset;
        self
    }
}

/// Parses a single permutation of the given degree.
pub fn parse_perm(text: &str, degree: usize) -> Result<Perm, CycleParseError> {
    let chars: Vec<(usize, char)> = text
        .chars()
        .enumerate()
        .filter(|(_, c)| !c.is_whitespace())
        .map(|(i, c)| (i + 1, c))
        .collect();
    let end_col = text.chars().count() + 1;

    let compact: String = chars.iter().map(|&(_, c)| c).collect();
    if compact == "id" {
        return Ok(Perm::identity(degree));
    }
    if chars.is_empty() {
        return Err(CycleParseError::new(1, "empty permutation"));
    }

    let mut images: Vec<u32> = (0..degree as u32).collect();
    let mut used = vec![false; degree];
    let mut pos = 0;
    while pos < chars.len() {
        let (col, c) = chars[pos];
        if c != '(' {
            return Err(CycleParseError::new(col, format!("expected '(' but found '{c}'")));
        }
        pos += 1;
        let mut cycle: Vec<(usize, u32)> = Vec::new();
        loop {
            let Some(&(col, c)) = chars.get(pos) else {
                return Err(CycleParseError::new(end_col, "unterminated cycle"));
            };
            if c == ')' {
                if !cycle.is_empty() && chars[pos - 1].1 == ',' {
                    return Err(CycleParseError::new(col, "expected a point before ')'"));
                }
                pos += 1;
                break;
            }
            if !cycle.is_empty() {
                if c != ',' {
                    return Err(CycleParseError::new(col, format!("expected ',' or ')' but found '{c}'")));
                }
                pos += 1;
            }
            let start = pos;
            let mut value: u64 = 0;
            while let Some(&(_, d)) = chars.get(pos) {
                let Some(digit) = d.to_digit(10) else { break };
                value = value.saturating_mul(10).saturating_add(digit as u64);
                pos += 1;
            }
            let (pcol, pc) = chars.get(start).copied().unwrap_or((end_col, ' '));
            if pos == start {
                return Err(CycleParseError::new(pcol, format!("expected a point but found '{pc}'")));
            }
            if value == 0 || value > degree as u64 {
                return Err(CycleParseError::new(pcol, format!("point {value} outside 1..{degree}")));
            }
            let point = (value - 1) as u32;
            if used[point as usize] || cycle.iter().any(|&(_, p)| p == point) {
                return Err(CycleParseError::new(pcol, format!("point {value} repeated")));
            }
            cycle.push((pcol, point));
        }
        for (i, &(_, p)) in cycle.iter().enumerate() {
            used[p as usize] = true;
            images[p as usize] = cycle[(i + 1) % cycle.len()].1;
        }
    }
    Ok(Perm::from_images(images).expect("disjoint cycles always give a bijection"))
}

/// Parses a whitespace-separated list of permutations. Whitespace inside
/// parentheses is ignored; whitespace outside separates elements.
pub fn parse_perm_list(text: &str, degree: usize) -> Result<Vec<Perm>, CycleParseError> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start: Option<usize> = None;
    let chars: Vec<char> = text.chars().collect();
    let flush = |from: usize, to: usize, out: &mut Vec<Perm>| -> Result<(), CycleParseError> {
        let piece: String = chars[from..to].iter().collect();
        out.push(parse_perm(&piece, degree).map_err(|e| e.shifted(from))?);
        Ok(())
    };
    for (i, &c) in chars.iter().enumerate() {
        match c {
            '(' => {
                depth += 1;
                start.get_or_insert(i);
            }
            ')' => {
                if depth == 0 {
                    return Err(CycleParseError::new(i + 1, "unbalanced ')'"));
                }
                depth -= 1;
            }
            c if c.is_whitespace() && depth == 0 => {
                if let Some(s) = start.take() {
                    flush(s, i, &mut out)?;
                }
            }
            _ => {
                start.get_or_insert(i);
            }
        }
    }
    if depth != 0 {
        return Err(CycleParseError::new(chars.len() + 1, "unterminated cycle"));
    }
    if let Some(s) = start {
        flush(s, chars.len(), &mut out)?;
    }
    Ok(out)
}
