//! Graph interchange formats: a whitespace edge list and graph6.

use std::fmt;
use std::str::FromStr;

use betti_cone_core::cone::Recipe;
use betti_cone_core::graph::{pair_index, MAX_VERTICES};
use betti_cone_core::Graph;

/// A parse failure at a byte offset of the input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    fn new(offset: usize, message: impl Into<String>) -> Self {
        ParseError {
            offset,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    /// `n` followed by `u v` pairs, 1-indexed. Tokens are separated by
    /// whitespace or `;`, so `3;1 2;2 3` is accepted too.
    EdgeList,
    Graph6,
}

impl FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "edge_list" | "edge-list" | "edges" => Ok(GraphFormat::EdgeList),
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            other => Err(format!("unknown graph format {other:?}")),
        }
    }
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph, ParseError> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Graph6 => parse_graph6(text),
    }
}

pub fn serialize_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::EdgeList => {
            let mut out = format!("{}\n", g.n());
            for (u, v) in g.edges() {
                out.push_str(&format!("{u} {v}\n"));
            }
            out
        }
        GraphFormat::Graph6 => to_graph6(g),
    }
}

fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut start = None;
    let mut out = Vec::new();
    for (k, c) in text.char_indices() {
        let sep = c.is_whitespace() || c == ';' || c == ',';
        match (sep, start) {
            (true, Some(s)) => {
                out.push((s, &text[s..k]));
                start = None;
            }
            (false, None) => start = Some(k),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &text[s..]));
    }
    out.into_iter()
}

fn number(offset: usize, tok: &str) -> Result<usize, ParseError> {
    tok.parse()
        .map_err(|_| ParseError::new(offset, format!("expected a non-negative integer, found {tok:?}")))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut toks = tokens(text);
    let (off, first) = toks.next().ok_or_else(|| ParseError::new(0, "empty input, expected vertex count"))?;
    let n = number(off, first)?;
    if n > MAX_VERTICES {
        return Err(ParseError::new(off, format!("{n} vertices exceeds the cap of {MAX_VERTICES}")));
    }
    let mut g = Graph::new(n).map_err(|e| ParseError::new(off, e.to_string()))?;
    while let Some((ou, tu)) = toks.next() {
        let u = number(ou, tu)?;
        let (ov, tv) = toks
            .next()
            .ok_or_else(|| ParseError::new(text.len(), format!("edge starting with {u} has no second endpoint")))?;
        let v = number(ov, tv)?;
        for (o, x) in [(ou, u), (ov, v)] {
            if x == 0 || x > n {
                return Err(ParseError::new(o, format!("vertex {x} outside 1..={n}")));
            }
        }
        if u == v {
            return Err(ParseError::new(ou, format!("loop at vertex {u}")));
        }
        g.add_edge(u, v).map_err(|e| ParseError::new(ou, e.to_string()))?;
    }
    Ok(g)
}

/// `n;u v;u v`, the single-line edge list.
pub fn inline_edge_list(g: &Graph) -> String {
    g.to_string()
}

pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let lead = text.len() - text.trim_start().len();
    let mut body = text.trim();
    let mut base = lead;
    if let Some(rest) = body.strip_prefix(">>graph6<<") {
        body = rest;
        base += ">>graph6<<".len();
    }
    let bytes = body.as_bytes();
    for (k, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(ParseError::new(base + k, format!("byte {b:#04x} outside the graph6 range 63..=126")));
        }
    }
    let (n, header) = match bytes {
        [] => return Err(ParseError::new(base, "empty graph6 string")),
        [126, 126, ..] => return Err(ParseError::new(base, "graph6 with more than 258047 vertices")),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(ParseError::new(base + bytes.len(), "truncated graph6 size field"));
            }
            let n = rest[..3].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, 4)
        }
        [b, ..] => ((b - 63) as usize, 1),
    };
    if n > MAX_VERTICES {
        return Err(ParseError::new(base, format!("{n} vertices exceeds the cap of {MAX_VERTICES}")));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let want = pairs.div_ceil(6);
    let data = &bytes[header..];
    if data.len() != want {
        return Err(ParseError::new(
            base + header + data.len().min(want),
            format!("expected {want} data bytes for {n} vertices, found {}", data.len()),
        ));
    }
    let mut g = Graph::new(n).map_err(|e| ParseError::new(base, e.to_string()))?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i + 1, j + 1).expect("in range");
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = vec![n as u8 + 63];
    let pairs = n * n.saturating_sub(1) / 2;
    let mut bits = vec![false; pairs.div_ceil(6) * 6];
    for (u, v) in g.edges() {
        bits[pair_index(u - 1, v - 1)] = true;
    }
    out.extend(bits.chunks(6).map(|c| 63 + c.iter().fold(0u8, |acc, &b| (acc << 1) | b as u8)));
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Parses the recipe notation printed by [`Recipe`]'s `Display`, e.g.
/// `(E_3+K_2)^c+L`.
pub fn parse_recipe(text: &str) -> Result<Recipe, ParseError> {
    let mut p = RecipeParser { s: text.as_bytes(), pos: 0 };
    let r = p.sum()?;
    if p.pos != p.s.len() {
        return Err(ParseError::new(p.pos, "trailing input in recipe"));
    }
    Ok(r)
}

struct RecipeParser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl RecipeParser<'_> {
    fn eat(&mut self, b: u8) -> bool {
        if self.s.get(self.pos) == Some(&b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<Recipe, ParseError> {
        let mut acc = self.term()?;
        while self.eat(b'+') {
            acc = acc.union(self.term()?);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Recipe, ParseError> {
        let start = self.pos;
        let base = if self.eat(b'(') {
            let inner = self.sum()?;
            if !self.eat(b')') {
                return Err(ParseError::new(self.pos, "expected ')'"));
            }
            inner
        } else {
            self.atom()?
        };
        if self.eat(b'^') {
            if !self.eat(b'c') {
                return Err(ParseError::new(self.pos, "expected 'c' after '^'"));
            }
            return Ok(base.complement());
        }
        if matches!(base, Recipe::Union(..)) && self.s[start] == b'(' {
            return Err(ParseError::new(self.pos, "parenthesised sum must be complemented"));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Recipe, ParseError> {
        let start = self.pos;
        let Some(&head) = self.s.get(self.pos) else {
            return Err(ParseError::new(self.pos, "expected a graph name"));
        };
        self.pos += 1;
        if head == b'L' {
            return Ok(Recipe::Edge);
        }
        if !matches!(head, b'K' | b'E' | b'C') || !self.eat(b'_') {
            return Err(ParseError::new(start, "expected K_m, E_m, C_m or L"));
        }
        let digits = self.pos;
        while self.s.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        let m: usize = std::str::from_utf8(&self.s[digits..self.pos])
            .expect("ascii")
            .parse()
            .map_err(|_| ParseError::new(digits, "expected a size"))?;
        Ok(match head {
            b'K' => Recipe::Complete(m),
            b'E' => Recipe::Empty(m),
            _ => Recipe::Cycle(m),
        })
    }
}

/// Output formats shared by the subcommands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Table,
    Csv,
    StructuredText,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "table" => Ok(OutputFormat::Table),
            "csv" => Ok(OutputFormat::Csv),
            "st" | "structured-text" | "toml" => Ok(OutputFormat::StructuredText),
            other => Err(format!("unknown output format {other:?} (table, csv, st)")),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Table => "table",
            OutputFormat::Csv => "csv",
            OutputFormat::StructuredText => "st",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use betti_cone_core::graph::{complete, cycle, empty, single_edge};
    use proptest::prelude::*;

    #[test]
    fn edge_list_examples() {
        assert_eq!(parse_edge_list("3\n1 2\n2 3\n1 3").unwrap(), complete(3).unwrap());
        assert_eq!(parse_edge_list("3;1 2;2 3;1 3").unwrap(), complete(3).unwrap());
        assert_eq!(parse_edge_list("4").unwrap(), empty(4).unwrap());
        let e = parse_edge_list("2\n1 1").unwrap_err();
        assert_eq!(e.offset, 2);
        assert!(e.message.contains("loop"));
        assert_eq!(parse_edge_list("3\n1 4").unwrap_err().offset, 4);
        assert_eq!(parse_edge_list("3\n1 x").unwrap_err().offset, 4);
        assert_eq!(parse_edge_list("3\n1").unwrap_err().offset, 3);
        assert_eq!(parse_edge_list("").unwrap_err().offset, 0);
        assert!(parse_edge_list("40").is_err());
    }

    // Hand-encoded per the format definition: 3 vertices -> 'B' (3 + 63);
    // bits x01 x02 x12 = 111, padded to 111000 = 56, 56 + 63 = 'w'.
    #[test]
    fn graph6_examples() {
        assert_eq!(parse_graph6("Bw").unwrap(), complete(3).unwrap());
        assert_eq!(to_graph6(&complete(3).unwrap()), "Bw");
        assert_eq!(parse_graph6(">>graph6<<Bw\n").unwrap(), complete(3).unwrap());
        // C_5: x01 x02 x12 x03 x13 x23 x04 x14 x24 x34 = 1010011001 -> 101001 100100
        assert_eq!(to_graph6(&cycle(5).unwrap()), "Dhc");
        assert_eq!(to_graph6(&single_edge().unwrap()), "A_");
        assert_eq!(to_graph6(&empty(0).unwrap()), "?");
        assert!(parse_graph6("~?@A").unwrap_err().message.contains("66 vertices"));
        assert_eq!(parse_graph6("Bww").unwrap_err().offset, 2);
        assert_eq!(parse_graph6("B w").unwrap_err().offset, 1);
    }

    #[test]
    fn recipe_notation_round_trips() {
        for s in ["K_4", "L", "(E_3+K_1)^c", "C_5^c", "(C_4+E_1)^c", "(E_2+K_2)^c+L", "C_4^c+L", "K_2+L+L"] {
            assert_eq!(parse_recipe(s).unwrap().to_string(), s);
        }
        assert!(parse_recipe("(K_2+L)").is_err());
        assert!(parse_recipe("K_").is_err());
        assert!(parse_recipe("Q_3").is_err());
        assert!(parse_recipe("K_2)").is_err());
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..=20).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
                let mut g = Graph::new(n).unwrap();
                let mut k = 0;
                for v in 1..n {
                    for u in 0..v {
                        if bits[k] {
                            g.add_edge(u + 1, v + 1).unwrap();
                        }
                        k += 1;
                    }
                }
                g
            })
        })
    }

    proptest! {
        #[test]
        fn formats_round_trip(g in arb_graph()) {
            for f in [GraphFormat::EdgeList, GraphFormat::Graph6] {
                prop_assert_eq!(parse_graph(&serialize_graph(&g, f), f).unwrap(), g);
            }
            prop_assert_eq!(parse_edge_list(&inline_edge_list(&g)).unwrap(), g);
        }
    }
}
