//! Text renderings of diagrams and cone reports.

use std::fmt::Write as _;

use betti_cone_core::cone::{index_set, IndexPair};
use betti_cone_core::{BettiDiagram, ConeReport, Graph};

/// The diagram as a matrix: row `j` holds `β_{i,i+j+1}`, column `i`.
///
/// Zero cells inside the `S_n` window print as `·`, cells outside it stay
/// blank. `n` is the vertex count that fixes the window.
pub fn diagram_table(b: &BettiDiagram, n: usize) -> String {
    let window: Vec<IndexPair> = index_set(n, None).map(|s| s.members().to_vec()).unwrap_or_default();
    let cells = window.iter().copied().chain(b.support());
    let (rows, cols) = cells.fold((0, 0), |(r, c), p| (r.max(p.row()), c.max(p.i + 1)));
    if rows == 0 {
        return "0\n".to_string();
    }
    let text = |i: usize, row: usize| -> String {
        let p = IndexPair::new(i, i + row + 1);
        match b.at(p) {
            0 if window.contains(&p) => "·".to_string(),
            0 => String::new(),
            v => v.to_string(),
        }
    };
    let width = (1..=rows)
        .flat_map(|r| (0..cols).map(move |i| (i, r)))
        .map(|(i, r)| text(i, r).chars().count())
        .chain((0..cols).map(|i| i.to_string().len()))
        .max()
        .unwrap_or(1);
    let label = rows.to_string().len() + 1;
    let mut out = String::new();
    let header: Vec<String> = (0..cols).map(|i| format!("{i:>width$}")).collect();
    writeln!(out, "{:label$} {}", "", header.join(" ")).unwrap();
    for r in 1..=rows {
        let line: Vec<String> = (0..cols).map(|i| format!("{:>width$}", text(i, r))).collect();
        writeln!(out, "{:label$} {}", format!("{r}:"), line.join(" ")).unwrap();
    }
    out.lines().map(str::trim_end).collect::<Vec<_>>().join("\n") + "\n"
}

pub fn diagram_csv(b: &BettiDiagram) -> String {
    let mut out = String::from("i,d,beta\n");
    for (p, v) in b.iter() {
        writeln!(out, "{},{},{}", p.i, p.d, v).unwrap();
    }
    out
}

/// Human-readable summary of a cone report.
pub fn report_table(r: &ConeReport) -> String {
    let mut out = String::new();
    let cone = match r.h {
        Some(h) => format!("C_{}^{}", r.n, h),
        None => format!("C_{}", r.n),
    };
    writeln!(out, "dim {cone} = {}", r.dimension).unwrap();
    writeln!(out, "method: {}", r.method).unwrap();
    writeln!(out, "field: {}", r.field).unwrap();
    let status = match r.upper_bound {
        Some(_) if r.certified => "certified".to_string(),
        Some(ub) => format!("partial (upper bound {ub})"),
        None => "closed form".to_string(),
    };
    writeln!(out, "status: {status}").unwrap();
    if let Some(s) = &r.stats {
        writeln!(
            out,
            "graphs: {} visited, {} matched, {} distinct diagrams",
            s.graphs_visited, s.graphs_matched, s.distinct_diagrams
        )
        .unwrap();
        if s.sandwich_violations > 0 {
            writeln!(out, "diagrams outside the upper-bound space: {}", s.sandwich_violations).unwrap();
        }
        if s.stopped_early {
            writeln!(out, "stopped early").unwrap();
        }
    }
    if !r.witnesses.is_empty() {
        let rows: Vec<[String; 3]> = r
            .witnesses
            .iter()
            .map(|w| [w.position.to_string(), w.recipe.to_string(), w.graph.to_string()])
            .collect();
        let wp = rows.iter().map(|r| r[0].len()).max().unwrap_or(0);
        let wr = rows.iter().map(|r| r[1].len()).max().unwrap_or(0);
        writeln!(out, "witnesses:").unwrap();
        for [p, recipe, g] in rows {
            writeln!(out, "  {p:<wp$}  {recipe:<wr$}  {g}").unwrap();
        }
    }
    out
}

pub fn report_csv(r: &ConeReport) -> String {
    let mut out = String::from("i,d,recipe,graph,diagram\n");
    for w in &r.witnesses {
        writeln!(out, "{},{},{},\"{}\",\"{}\"", w.position.i, w.position.d, w.recipe, w.graph, w.diagram).unwrap();
    }
    if r.witnesses.is_empty() {
        out = String::from("n,h,method,dimension,certified\n");
        let h = r.h.map(|h| h.to_string()).unwrap_or_default();
        writeln!(out, "{},{},{},{},{}", r.n, h, r.method, r.dimension, r.certified).unwrap();
    }
    out
}

/// One line per graph with its diagram, height and HK values.
pub fn hk_table(g: &Graph, height: usize, values: &[i128]) -> String {
    let mut out = String::new();
    writeln!(out, "graph: {g}").unwrap();
    writeln!(out, "height: {height}").unwrap();
    let list: Vec<String> = values.iter().map(i128::to_string).collect();
    writeln!(out, "HK: [{}]", list.join(", ")).unwrap();
    if height <= 1 {
        writeln!(out, "vanishing: no constraints (height {height})").unwrap();
    } else {
        let ok = (1..height).all(|j| values.get(j).is_none_or(|&v| v == 0));
        let verdict = if ok { "yes" } else { "NO" };
        writeln!(out, "vanishing HK_1..HK_{}: {verdict}", height - 1).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_layouts() {
        let k3 = BettiDiagram::from_entries(3, [((0, 2), 3), ((1, 3), 2)]);
        assert_eq!(diagram_table(&k3, 3), "   0 1\n1: 3 2\n");
        let two_l = BettiDiagram::from_entries(4, [((0, 2), 2), ((1, 4), 1)]);
        assert_eq!(diagram_table(&two_l, 4), "   0 1 2\n1: 2 · ·\n2:   1\n");
        assert_eq!(diagram_table(&BettiDiagram::new(1), 1), "0\n");
        let k4 = BettiDiagram::from_entries(4, [((0, 2), 6), ((1, 3), 8), ((2, 4), 3)]);
        assert_eq!(diagram_table(&k4, 4), "   0 1 2\n1: 6 8 3\n2:   ·\n");
    }

    #[test]
    fn csv_layout() {
        let k3 = BettiDiagram::from_entries(3, [((0, 2), 3), ((1, 3), 2)]);
        assert_eq!(diagram_csv(&k3), "i,d,beta\n0,2,3\n1,3,2\n");
    }
}
