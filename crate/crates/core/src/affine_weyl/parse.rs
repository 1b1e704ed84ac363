use super::{AffineElement, AffineWeyl};
use crate::error::{Error, Result};

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        pos,
        msg: msg.into(),
    })
}

/// Parses products such as `t[2,-1]*s1 s2` or `s1 s0 s1`. Factors are
/// separated by whitespace or `*`; `1` and `e` denote the identity.
pub(super) fn parse_element(aw: &AffineWeyl, text: &str) -> Result<AffineElement> {
    let bytes = text.as_bytes();
    let n = aw.rank();
    let mut w = aw.identity();
    let mut pos = 0;
    let mut factors = 0;
    while pos < bytes.len() {
        let c = bytes[pos];
        if c.is_ascii_whitespace() || c == b'*' {
            pos += 1;
            continue;
        }
        factors += 1;
        match c {
            b't' => {
                if bytes.get(pos + 1) != Some(&b'[') {
                    return err(pos + 1, "expected '[' after 't'");
                }
                let start = pos + 2;
                let Some(close) = text[start..].find(']') else {
                    return err(start, "unterminated translation");
                };
                let inner = &text[start..start + close];
                let mut lam = Vec::new();
                let mut off = start;
                for part in inner.split(',') {
                    match part.trim().parse::<i64>() {
                        Ok(v) => lam.push(v),
                        Err(_) => return err(off, format!("bad integer {:?}", part.trim())),
                    }
                    off += part.len() + 1;
                }
                if lam.len() != n {
                    return err(
                        start,
                        format!("translation needs {n} coordinates, got {}", lam.len()),
                    );
                }
                w = aw.mul(&w, &AffineElement::translation(lam));
                pos = start + close + 1;
            }
            b's' => {
                let start = pos + 1;
                let end = start
                    + bytes[start..]
                        .iter()
                        .take_while(|b| b.is_ascii_digit())
                        .count();
                if end == start {
                    return err(start, "expected a reflection index after 's'");
                }
                let k: usize = text[start..end].parse().map_err(|_| Error::Parse {
                    pos: start,
                    msg: "bad index".into(),
                })?;
                if k > n {
                    return err(start, format!("reflection index {k} exceeds rank {n}"));
                }
                w = aw.right_mul(&w, k);
                pos = end;
            }
            b'1' | b'e' => {
                pos += 1;
            }
            _ => return err(pos, format!("unexpected character {:?}", c as char)),
        }
    }
    if factors == 0 {
        return err(0, "empty element");
    }
    Ok(w)
}
