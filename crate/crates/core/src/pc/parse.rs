//! Parser for the line-oriented `.pcg` format:
//!
//! ```text
//! group <name>
//! prime <p>
//! ngens <n>
//! power <i> = <word>
//! comm <j> <i> = <word>        # j > i
//! end
//! ```
//!
//! `<word>` is `id` or `g<k>^<e>` factors joined by `*` with strictly
//! increasing indices and `e` in `1..p` (`^1` may be omitted).

use std::collections::HashSet;
use std::str::FromStr;

use super::{is_prime, PcPresentation, Word};
use crate::{Error, Result};

/// A whitespace-delimited token and its 1-based column.
#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(Token {
                    text: &line[s..i],
                    column: s + 1,
                });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push(Token {
            text: &line[s..],
            column: s + 1,
        });
    }
    out
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn parse_uint(tok: Token<'_>, line: usize, what: &str) -> Result<u64> {
    tok.text
        .parse::<u64>()
        .map_err(|_| syntax(line, tok.column, format!("expected {what}, found `{}`", tok.text)))
}

struct Header {
    name: Option<String>,
    prime: Option<u32>,
    ngens: Option<usize>,
}

/// Parses one `.pcg` source into a presentation.
pub fn parse_presentation(text: &str) -> Result<PcPresentation> {
    let mut header = Header {
        name: None,
        prime: None,
        ngens: None,
    };
    let mut pres: Option<PcPresentation> = None;
    let mut seen_power = HashSet::new();
    let mut seen_comm = HashSet::new();
    let mut ended = false;
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let toks = tokens(line);
        let Some(&head) = toks.first() else {
            continue;
        };
        if ended {
            return Err(syntax(line_no, head.column, "content after `end`"));
        }
        match head.text {
            "group" => {
                if header.name.is_some() {
                    return Err(syntax(line_no, head.column, "duplicate `group` directive"));
                }
                if toks.len() != 2 {
                    return Err(syntax(line_no, head.column, "expected `group <name>`"));
                }
                header.name = Some(toks[1].text.to_string());
            }
            "prime" => {
                if header.name.is_none() {
                    return Err(syntax(line_no, head.column, "`group` must come first"));
                }
                if header.prime.is_some() {
                    return Err(syntax(line_no, head.column, "duplicate `prime` directive"));
                }
                if toks.len() != 2 {
                    return Err(syntax(line_no, head.column, "expected `prime <p>`"));
                }
                let p = parse_uint(toks[1], line_no, "a prime")?;
                if !is_prime(p) || p > u32::MAX as u64 {
                    return Err(Error::NotPrime(p));
                }
                header.prime = Some(p as u32);
            }
            "ngens" => {
                if header.name.is_none() {
                    return Err(syntax(line_no, head.column, "`group` must come first"));
                }
                if header.ngens.is_some() {
                    return Err(syntax(line_no, head.column, "duplicate `ngens` directive"));
                }
                if toks.len() != 2 {
                    return Err(syntax(line_no, head.column, "expected `ngens <n>`"));
                }
                let n = parse_uint(toks[1], line_no, "a generator count")?;
                header.ngens = Some(n as usize);
            }
            "power" | "comm" => {
                if pres.is_none() {
                    let (Some(name), Some(p), Some(n)) =
                        (header.name.clone(), header.prime, header.ngens)
                    else {
                        return Err(syntax(
                            line_no,
                            head.column,
                            "`group`, `prime` and `ngens` must precede relations",
                        ));
                    };
                    pres = Some(PcPresentation::new(name, p, n)?);
                }
                let pres = pres.as_mut().expect("initialised above");
                parse_relation(
                    pres,
                    &toks,
                    line,
                    line_no,
                    &mut seen_power,
                    &mut seen_comm,
                )?;
            }
            "end" => {
                if toks.len() != 1 {
                    return Err(syntax(line_no, toks[1].column, "unexpected token after `end`"));
                }
                ended = true;
            }
            other => {
                return Err(syntax(
                    line_no,
                    head.column,
                    format!("unknown directive `{other}`"),
                ))
            }
        }
    }

    if !ended {
        return Err(syntax(last_line + 1, 1, "missing `end`"));
    }
    match pres {
        Some(p) => Ok(p),
        None => {
            let (Some(name), Some(p), Some(n)) = (header.name, header.prime, header.ngens) else {
                return Err(syntax(last_line, 1, "missing `group`, `prime` or `ngens`"));
            };
            PcPresentation::new(name, p, n)
        }
    }
}

fn generator_index(tok: Token<'_>, line: usize, n: usize) -> Result<usize> {
    let k = parse_uint(tok, line, "a generator index")?;
    if k == 0 || k as usize > n {
        return Err(syntax(
            line,
            tok.column,
            format!("generator index {k} out of range 1..={n}"),
        ));
    }
    Ok(k as usize - 1)
}

fn parse_relation(
    pres: &mut PcPresentation,
    toks: &[Token<'_>],
    line: &str,
    line_no: usize,
    seen_power: &mut HashSet<usize>,
    seen_comm: &mut HashSet<(usize, usize)>,
) -> Result<()> {
    let n = pres.ngens();
    let head = toks[0];
    let (lhs, eq_at) = if head.text == "power" {
        (1, 2)
    } else {
        (2, 3)
    };
    if toks.len() <= eq_at || toks[eq_at].text != "=" {
        let col = toks.get(eq_at).map_or(line.len() + 1, |t| t.column);
        return Err(syntax(
            line_no,
            col,
            format!(
                "expected `{}`",
                if lhs == 1 {
                    "power <i> = <word>"
                } else {
                    "comm <j> <i> = <word>"
                }
            ),
        ));
    }
    let rhs_start = toks[eq_at].column; // 1-based column of '=', so rhs starts after it
    let rhs = &line[rhs_start..];
    let word = parse_word(rhs, rhs_start + 1, line_no, pres.prime(), n)?;

    if lhs == 1 {
        let i = generator_index(toks[1], line_no, n)?;
        if !seen_power.insert(i) {
            return Err(syntax(line_no, head.column, format!("duplicate power relation for g{}", i + 1)));
        }
        if let Some(g) = word.min_generator() {
            if g <= i {
                return Err(Error::IndexOrder {
                    line: line_no,
                    message: format!("g{}^p may only involve generators after g{}, found g{}", i + 1, i + 1, g + 1),
                });
            }
        }
        pres.set_power(i, word)
    } else {
        let j = generator_index(toks[1], line_no, n)?;
        let i = generator_index(toks[2], line_no, n)?;
        if j <= i {
            return Err(syntax(line_no, toks[1].column, "`comm j i` requires j > i"));
        }
        if !seen_comm.insert((j, i)) {
            return Err(syntax(
                line_no,
                head.column,
                format!("duplicate commutator relation for [g{}, g{}]", j + 1, i + 1),
            ));
        }
        if let Some(g) = word.min_generator() {
            if g <= j {
                return Err(Error::IndexOrder {
                    line: line_no,
                    message: format!(
                        "[g{}, g{}] may only involve generators after g{}, found g{}",
                        j + 1,
                        i + 1,
                        j + 1,
                        g + 1
                    ),
                });
            }
        }
        pres.set_commutator(j, i, word)
    }
}

/// Parses `rhs` (which begins at 1-based column `col0` of the line).
fn parse_word(rhs: &str, col0: usize, line: usize, p: u32, n: usize) -> Result<Word> {
    let trimmed = rhs.trim();
    if trimmed.is_empty() {
        return Err(syntax(line, col0, "missing word after `=`"));
    }
    if trimmed == "id" {
        return Ok(Word::identity());
    }
    let mut factors: Vec<(usize, u32)> = Vec::new();
    let mut offset = 0;
    for piece in rhs.split('*') {
        let lead = piece.len() - piece.trim_start().len();
        let col = col0 + offset + lead;
        offset += piece.len() + 1;
        let f = piece.trim();
        if f.is_empty() {
            return Err(syntax(line, col, "empty factor"));
        }
        if f.contains(char::is_whitespace) {
            return Err(syntax(line, col, format!("malformed factor `{f}`")));
        }
        let Some(body) = f.strip_prefix('g') else {
            return Err(syntax(line, col, format!("expected `g<k>` or `id`, found `{f}`")));
        };
        let (idx_text, exp_text) = match body.split_once('^') {
            Some((a, b)) => (a, Some(b)),
            None => (body, None),
        };
        let k: u64 = idx_text
            .parse()
            .map_err(|_| syntax(line, col, format!("bad generator index in `{f}`")))?;
        if k == 0 || k as usize > n {
            return Err(syntax(line, col, format!("generator index {k} out of range 1..={n}")));
        }
        let e: u64 = match exp_text {
            Some(t) => t
                .parse()
                .map_err(|_| syntax(line, col, format!("bad exponent in `{f}`")))?,
            None => 1,
        };
        if e == 0 || e >= p as u64 {
            return Err(Error::ExponentRange {
                line,
                exponent: e,
                prime: p,
            });
        }
        let g = k as usize - 1;
        if let Some(&(prev, _)) = factors.last() {
            if g <= prev {
                return Err(syntax(line, col, "generator indices must strictly increase"));
            }
        }
        factors.push((g, e as u32));
    }
    Ok(Word::from_factors(factors))
}

/// Parses a single normal-form word (`id` or `g1^e1*g3*...`) over `n`
/// generators; errors report line 1.
pub fn parse_word_text(text: &str, p: u32, n: usize) -> Result<Word> {
    parse_word(text, 1, 1, p, n)
}

impl FromStr for PcPresentation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_presentation(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q8: &str = "group q8\nprime 2\nngens 3\npower 1 = g3\npower 2 = g3\ncomm 2 1 = g3\nend\n";

    #[test]
    fn parses_smallest_case() {
        let p = parse_presentation("group c2\nprime 2\nngens 1\nend\n").unwrap();
        assert_eq!(p.ngens(), 1);
        assert_eq!(p.order(), Some(2));
        assert!(p.power(0).is_identity());
    }

    #[test]
    fn parses_q8_with_comments() {
        let text = format!("# quaternion\n{Q8}# trailing\n");
        let p = parse_presentation(&text).unwrap();
        assert_eq!(p.power(0), &Word::generator(2));
        assert_eq!(p.power(1), &Word::generator(2));
        assert!(p.power(2).is_identity());
        assert_eq!(p.commutator(1, 0), &Word::generator(2));
        assert!(p.commutator(2, 0).is_identity());
    }

    #[test]
    fn rejects_commutator_rhs_at_or_below_j() {
        let text = "group bad\nprime 2\nngens 2\ncomm 2 1 = g1\nend\n";
        match parse_presentation(text) {
            Err(Error::IndexOrder { line, .. }) => assert_eq!(line, 4),
            other => panic!("expected index-order error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_power_rhs_at_or_below_i() {
        let text = "group bad\nprime 2\nngens 2\npower 2 = g2\nend\n";
        assert!(matches!(parse_presentation(text), Err(Error::IndexOrder { .. })));
    }

    #[test]
    fn rejects_non_prime() {
        let text = "group bad\nprime 9\nngens 2\nend\n";
        assert!(matches!(parse_presentation(text), Err(Error::NotPrime(9))));
    }

    #[test]
    fn rejects_exponent_out_of_range() {
        let text = "group bad\nprime 3\nngens 2\npower 1 = g2^3\nend\n";
        assert!(matches!(
            parse_presentation(text),
            Err(Error::ExponentRange { exponent: 3, .. })
        ));
        let text = "group bad\nprime 3\nngens 2\npower 1 = g2^0\nend\n";
        assert!(matches!(parse_presentation(text), Err(Error::ExponentRange { .. })));
    }

    #[test]
    fn syntax_errors_carry_position() {
        let text = "group bad\nprime 2\nngens 2\npower 1 = h2\nend\n";
        match parse_presentation(text) {
            Err(Error::Syntax { line, column, .. }) => {
                assert_eq!(line, 4);
                assert_eq!(column, 11);
            }
            other => panic!("expected syntax error, got {other:?}"),
        }
        let text = "group x\nprime 2\nngens 3\npower 1 = g3*g2\nend\n";
        match parse_presentation(text) {
            Err(Error::Syntax { line, column, .. }) => {
                assert_eq!(line, 4);
                assert_eq!(column, 14);
            }
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn requires_end_and_header() {
        assert!(matches!(
            parse_presentation("group x\nprime 2\nngens 1\n"),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_presentation("prime 2\nngens 1\nend\n"),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_presentation("group x\nprime 2\nngens 2\npower 1 = g2\npower 1 = g2\nend\n"),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_presentation("group x\nprime 2\nngens 2\ncomm 1 2 = id\nend\n"),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_presentation("group x\nprime 2\nngens 1\nend\npower 1 = id\n"),
            Err(Error::Syntax { .. })
        ));
    }

    #[test]
    fn serialisation_round_trips() {
        let p = parse_presentation(Q8).unwrap();
        assert_eq!(p.to_pcg(), Q8);
        let again: PcPresentation = p.to_pcg().parse().unwrap();
        assert_eq!(again, p);
    }
}
