//! Edge-list text and graph6 ingestion.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

/// Parses the edge-list format: the first non-comment line holds `d`, each
/// following line holds one edge `i j`. Lines starting with `#` and blank
/// lines are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut d: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match d {
            None => {
                if fields.len() != 1 {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("expected vertex count, got {line:?}"),
                    });
                }
                let n: usize = fields[0].parse().map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("bad vertex count {:?}", fields[0]),
                })?;
                if n == 0 {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: "vertex count must be positive".into(),
                    });
                }
                if n > MAX_VERTICES {
                    return Err(Error::TooManyVertices(n));
                }
                d = Some(n);
            }
            Some(n) => {
                if fields.len() != 2 {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("expected \"i j\", got {line:?}"),
                    });
                }
                let mut ends = [0usize; 2];
                for (slot, f) in ends.iter_mut().zip(&fields) {
                    let v: i64 = f.parse().map_err(|_| Error::Parse {
                        line: line_no,
                        msg: format!("bad vertex {f:?}"),
                    })?;
                    if v < 1 || v > n as i64 {
                        return Err(Error::VertexOutOfRange {
                            line: line_no,
                            vertex: v,
                            d: n,
                        });
                    }
                    *slot = v as usize;
                }
                if ends[0] == ends[1] {
                    return Err(Error::LoopEdge {
                        line: line_no,
                        vertex: ends[0],
                    });
                }
                edges.push((ends[0], ends[1]));
            }
        }
    }
    let d = d.ok_or_else(|| Error::Parse {
        line: text.lines().count().max(1),
        msg: "missing vertex count".into(),
    })?;
    Graph::new(d, edges)
}

const HEADER: &str = ">>graph6<<";

fn sextet(c: u8) -> Result<u32> {
    if !(63..=126).contains(&c) {
        return Err(Error::Graph6(format!("invalid character {:?}", c as char)));
    }
    Ok((c - 63) as u32)
}

/// Decodes one graph6 word. graph6 vertex `k` becomes label `k+1`.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let word = text.trim();
    let word = word.strip_prefix(HEADER).unwrap_or(word).as_bytes();
    if word.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    for &c in word {
        sextet(c)?;
    }
    let (n, body) = if word[0] != 126 {
        (sextet(word[0])? as usize, &word[1..])
    } else if word.len() >= 4 && word[1] != 126 {
        let n = word[1..4]
            .iter()
            .try_fold(0usize, |acc, &c| Ok::<_, Error>((acc << 6) | sextet(c)? as usize))?;
        (n, &word[4..])
    } else if word.len() >= 8 {
        let n = word[2..8]
            .iter()
            .try_fold(0usize, |acc, &c| Ok::<_, Error>((acc << 6) | sextet(c)? as usize))?;
        (n, &word[8..])
    } else {
        return Err(Error::Graph6("truncated vertex count".into()));
    };
    if n == 0 {
        return Err(Error::Graph6("graph with no vertices".into()));
    }
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "length mismatch: {n} vertices need {expected} data bytes, got {}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = (body[k / 6] - 63) as u32;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i + 1, j + 1));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}

/// Encodes `g` as a graph6 word without header.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.d();
    let mut out = Vec::new();
    // Graph holds at most 32 vertices, so the short size form always applies.
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i + 1, j + 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Parses either format: edge-list when the first meaningful line is a bare
/// integer, graph6 otherwise.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.chars().all(|c| c.is_ascii_digit()) => parse_edge_list(text),
        Some(l) => parse_graph6(l),
        None => Err(Error::Parse {
            line: 1,
            msg: "empty graph description".into(),
        }),
    }
}
