//! The verification suite: closed forms, transfer rules, corpus
//! invariants and the cone-dimension formulas, each checked against an
//! independent computation.

use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use betti_cone_core::betti::{
    check_support_cn, check_support_cnh, cycle_complement_formula, diagram_complete, diagram_cycle_complement,
    hk_vector, hochster_diagram, pad_complement_diagram, pad_complement_unweighted, regularity, suspend_diagram,
};
use betti_cone_core::cone::{formula_dim, hk_subspace_dim, index_set, witnesses_cn, witnesses_cnh, EnumerationOptions, IndexPair};
use betti_cone_core::graph::{complete, cycle, empty, pair_count, single_edge};
use betti_cone_core::{BettiDiagram, FieldSpec, Graph};

use crate::formats::parse_recipe;
use crate::parallel::{enumerate_parallel, hochster_parallel, Workers};

/// Outcome of one check.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl Check {
    fn timed(name: &str, f: impl FnOnce() -> Result<String, String>) -> Check {
        let start = Instant::now();
        let (passed, detail) = match f() {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        Check {
            name: name.to_string(),
            passed,
            detail,
            elapsed: start.elapsed(),
        }
    }

    pub fn line(&self) -> String {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        format!("{verdict}  {:<34} {:>8.2}s  {}", self.name, self.elapsed.as_secs_f64(), self.detail)
    }
}

pub fn render(checks: &[Check]) -> String {
    let mut out = String::new();
    for c in checks {
        writeln!(out, "{}", c.line()).unwrap();
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    writeln!(out, "{} checks, {} failed", checks.len(), failed).unwrap();
    out
}

fn all_graphs(n: usize) -> impl ParallelIterator<Item = Graph> {
    (0..1u64 << pair_count(n))
        .into_par_iter()
        .map(move |mask| Graph::from_edge_mask(n, mask).expect("n <= 11"))
}

/// First failure (by edge mask) among all graphs on `n` vertices.
fn first_failure<F>(n: usize, workers: &Workers, f: F) -> Option<String>
where
    F: Fn(&Graph) -> Option<String> + Sync,
{
    workers.install(|| {
        all_graphs(n)
            .filter_map(|g| f(&g).map(|why| (g.edge_mask(), format!("{why} for graph {g}"))))
            .min_by_key(|(mask, _)| *mask)
            .map(|(_, msg)| msg)
    })
}

pub struct Verifier<'a> {
    pub workers: &'a Workers,
    pub field: FieldSpec,
}

impl<'a> Verifier<'a> {
    pub fn new(workers: &'a Workers) -> Self {
        Verifier {
            workers,
            field: FieldSpec::Rationals,
        }
    }

    fn hochster(&self, g: &Graph) -> Result<BettiDiagram, String> {
        hochster_parallel(g, self.field, self.workers).map_err(|e| e.to_string())
    }

    pub fn closed_form_complete(&self, ms: RangeInclusive<usize>) -> Check {
        Check::timed("closed form: complete graphs", || {
            for m in ms.clone() {
                let got = self.hochster(&complete(m).map_err(|e| e.to_string())?)?;
                if got != diagram_complete(m) {
                    return Err(format!("K_{m}: Hochster {got}, closed form {}", diagram_complete(m)));
                }
            }
            Ok(format!("m = {}..={}", ms.start(), ms.end()))
        })
    }

    /// Also reports what the closed form says at `m = 3`.
    pub fn closed_form_cycle_complement(&self, ms: RangeInclusive<usize>) -> Check {
        Check::timed("closed form: cycle complements", || {
            for m in ms.clone() {
                let g = cycle(m).map_err(|e| e.to_string())?.complement();
                let want = diagram_cycle_complement(m).map_err(|e| e.to_string())?;
                let got = self.hochster(&g)?;
                if got != want {
                    return Err(format!("C_{m}^c: Hochster {got}, closed form {want}"));
                }
            }
            let boundary = cycle_complement_formula(3).map_err(|e| e.to_string())?;
            let actual = self.hochster(&cycle(3).map_err(|e| e.to_string())?.complement())?;
            let actual = if actual.is_empty() { "zero".to_string() } else { actual.to_string() };
            Ok(format!(
                "m = {}..={}; m = 3 excluded: formula gives {boundary}, C_3^c = E_3 has diagram {actual}",
                ms.start(),
                ms.end()
            ))
        })
    }

    pub fn suspension(&self, n: usize) -> Check {
        let l = single_edge().expect("L");
        let field = self.field;
        Check::timed("suspension rule", || {
            let bad = first_failure(n, self.workers, |g| {
                let check = || -> betti_cone_core::Result<Option<String>> {
                    let direct = hochster_diagram(&g.disjoint_union(&l)?, field)?;
                    let rule = suspend_diagram(&hochster_diagram(g, field)?);
                    Ok((direct != rule).then(|| format!("G+L has {direct}, rule gives {rule}")))
                };
                check().unwrap_or_else(|e| Some(e.to_string()))
            });
            match bad {
                Some(msg) => Err(msg),
                None => Ok(format!("all {} graphs on {n} vertices", 1u64 << pair_count(n))),
            }
        })
    }

    /// Upper rows of the padding rule against Hochster, for `l <= max_l`,
    /// `l < m <= max_m`. The detail notes where the unweighted partial sum
    /// would have failed.
    pub fn padding(&self, max_l: usize, max_m: usize) -> Check {
        let field = self.field;
        Check::timed("padding rule", || {
            let unweighted_misses = Mutex::new(0u64);
            for l in 0..=max_l {
                let bad = first_failure(l, self.workers, |g| {
                    let check = || -> betti_cone_core::Result<Option<String>> {
                        let base = hochster_diagram(&g.complement(), field)?;
                        for m in l + 1..=max_m {
                            let padded = g.disjoint_union(&empty(m - l)?)?.complement();
                            let full = hochster_diagram(&padded, field)?;
                            let rule = pad_complement_diagram(&base, l, m)?;
                            if let Err(e) = rule.with_row_one(&full) {
                                return Ok(Some(format!("m = {m}: {e}")));
                            }
                            if pad_complement_unweighted(&base, l, m)?.upper != rule.upper {
                                *unweighted_misses.lock().unwrap() += 1;
                            }
                        }
                        Ok(None)
                    };
                    check().unwrap_or_else(|e| Some(e.to_string()))
                });
                if let Some(msg) = bad {
                    return Err(msg);
                }
            }
            Ok(format!(
                "l <= {max_l}, m <= {max_m}; unweighted partial sum differs in {} cases",
                unweighted_misses.into_inner().unwrap()
            ))
        })
    }

    /// HK vanishing, support and regularity over all graphs on `n` vertices.
    pub fn corpus(&self, n: usize) -> [Check; 3] {
        let start = Instant::now();
        let field = self.field;
        let failures = Mutex::new([None::<(u64, String)>, None, None]);
        let note = |k: usize, g: &Graph, msg: String| {
            let mask = g.edge_mask();
            let mut f = failures.lock().unwrap();
            if f[k].as_ref().is_none_or(|(m, _)| mask < *m) {
                f[k] = Some((mask, format!("{msg} for graph {g}")));
            }
        };
        self.workers.install(|| {
            all_graphs(n).for_each(|g| {
                let b = match hochster_diagram(&g, field) {
                    Ok(b) => b,
                    Err(e) => return note(0, &g, e.to_string()),
                };
                let h = g.height();
                match hk_vector(&b, h.saturating_sub(1) as u32) {
                    Ok(hk) if hk.vanishes_below(h) => {}
                    Ok(hk) => note(0, &g, format!("HK = {:?} with height {h}", hk.values)),
                    Err(e) => note(0, &g, e.to_string()),
                }
                if !check_support_cn(&b, n) || !check_support_cnh(&b, n, h) {
                    note(1, &g, format!("support of {b} (height {h})"));
                }
                if g.edge_count() > 0 {
                    let alpha = g.min_maximal_matching_size();
                    match regularity(&b) {
                        Ok(r) if r <= alpha + 1 => {}
                        Ok(r) => note(2, &g, format!("regularity {r} > {alpha} + 1")),
                        Err(e) => note(2, &g, e.to_string()),
                    }
                }
            })
        });
        let elapsed = start.elapsed();
        let count = 1u64 << pair_count(n);
        let names = ["HK vanishing below height", "support patterns", "regularity bound"];
        let failures = failures.into_inner().unwrap();
        std::array::from_fn(|k| Check {
            name: names[k].to_string(),
            passed: failures[k].is_none(),
            detail: match &failures[k] {
                Some((_, msg)) => msg.clone(),
                None => format!("all {count} graphs on {n} vertices"),
            },
            elapsed,
        })
    }

    fn enumeration(&self, name: &str, cases: Vec<(usize, Option<usize>)>, dedupe: bool) -> Check {
        Check::timed(name, || {
            let mut seen = Vec::new();
            for (n, h) in cases {
                let opts = EnumerationOptions {
                    dedupe,
                    field: self.field,
                    ..EnumerationOptions::new(n, h)
                };
                let r = enumerate_parallel(&opts, self.workers).map_err(|e| e.to_string())?;
                let want = formula_dim(n, h).map_err(|e| e.to_string())?;
                let label = match h {
                    Some(h) => format!("({n},{h})"),
                    None => format!("{n}"),
                };
                let violations = r.stats.as_ref().map_or(0, |s| s.sandwich_violations);
                if r.dimension != want || !r.certified || violations > 0 {
                    return Err(format!(
                        "{label}: rank {}, formula {want}, certified {}, {violations} diagrams outside the upper-bound space",
                        r.dimension, r.certified
                    ));
                }
                seen.push(format!("{label}->{}", r.dimension));
            }
            Ok(seen.join(" "))
        })
    }

    pub fn enumeration_plain(&self, ns: RangeInclusive<usize>, dedupe: bool) -> Check {
        self.enumeration("enumeration: C_n", ns.map(|n| (n, None)).collect(), dedupe)
    }

    pub fn enumeration_height(&self, ns: RangeInclusive<usize>, dedupe: bool) -> Check {
        let cases = ns.flat_map(|n| (1..n).map(move |h| (n, Some(h)))).collect();
        self.enumeration("enumeration: C_n^h", cases, dedupe)
    }

    pub fn witnesses(&self, ns: RangeInclusive<usize>) -> Check {
        Check::timed("witness families", || {
            let mut oracle = |g: &Graph| hochster_parallel(g, self.field, self.workers);
            let mut count = 0;
            for n in ns.clone() {
                let r = witnesses_cn(n, &mut oracle).map_err(|e| format!("n = {n}: {e}"))?;
                if r.witnesses.len() != index_set(n, None).map_err(|e| e.to_string())?.len() || !r.certified {
                    return Err(format!("n = {n}: {} witnesses, rank {}", r.witnesses.len(), r.dimension));
                }
                count += r.witnesses.len();
                for h in 1..n {
                    let r = witnesses_cnh(n, h, &mut oracle).map_err(|e| format!("(n, h) = ({n}, {h}): {e}"))?;
                    let want = formula_dim(n, Some(h)).map_err(|e| e.to_string())?;
                    if r.witnesses.len() != want || r.dimension != want || !r.certified {
                        return Err(format!("({n},{h}): {} witnesses, rank {}", r.witnesses.len(), r.dimension));
                    }
                    count += r.witnesses.len();
                }
            }
            let mut detail = format!("n = {}..={}, {count} witnesses verified", ns.start(), ns.end());
            if ns.contains(&6) {
                self.worked_example()?;
                detail.push_str("; (6,3) matches the seven-graph table");
            }
            Ok(detail)
        })
    }

    /// The `(6, 3)` witnesses against the constructions listed for that
    /// case, position by position.
    pub fn worked_example(&self) -> Result<(), String> {
        let table = [
            ((2, 4), "(E_3+K_1)^c"),
            ((3, 5), "(E_3+K_2)^c"),
            ((4, 6), "(E_3+K_3)^c"),
            ((2, 5), "C_5^c"),
            ((1, 4), "(C_4+E_1)^c"),
            ((3, 6), "(K_2+E_2)^c+L"),
            ((2, 6), "L+L+L"),
        ];
        let mut oracle = |g: &Graph| hochster_parallel(g, self.field, self.workers);
        let r = witnesses_cnh(6, 3, &mut oracle).map_err(|e| e.to_string())?;
        if r.witnesses.len() != table.len() {
            return Err(format!("{} witnesses for (6,3)", r.witnesses.len()));
        }
        for (w, (p, recipe)) in r.witnesses.iter().zip(table) {
            let g = parse_recipe(recipe).map_err(|e| e.to_string())?.build().map_err(|e| e.to_string())?;
            let b = self.hochster(&g)?;
            if w.position != IndexPair::from(p) || b != w.diagram || w.graph.height() != g.height() {
                return Err(format!("{} at {} differs from {recipe} at {}", w.recipe, w.position, IndexPair::from(p)));
            }
        }
        Ok(())
    }

    pub fn hk_subspace(&self, max_n: usize) -> Check {
        Check::timed("HK subspace dimension", || {
            for n in 2..=max_n {
                for h in 1..n {
                    let got = hk_subspace_dim(n, h).map_err(|e| e.to_string())?;
                    let want = formula_dim(n, Some(h)).map_err(|e| e.to_string())?;
                    if got != want {
                        return Err(format!("({n},{h}): {got} vs {want}"));
                    }
                }
            }
            Ok(format!("1 <= h < n <= {max_n}"))
        })
    }

    pub fn counting(&self, max_n: usize) -> Check {
        Check::timed("index set sizes", || {
            for n in 1..=max_n {
                let r = n / 2;
                let want = if n % 2 == 0 { r * r } else { r * r + r };
                let got = index_set(n, None).map_err(|e| e.to_string())?.len();
                if got != want {
                    return Err(format!("|S_{n}| = {got}, expected {want}"));
                }
                for h in 1..n {
                    let got = index_set(n, Some(h)).map_err(|e| e.to_string())?.len();
                    if got != h * (n - h) {
                        return Err(format!("|S_{n}^{h}| = {got}, expected {}", h * (n - h)));
                    }
                }
            }
            Ok(format!("n <= {max_n}"))
        })
    }
}

/// Knobs for [`run_suite`].
#[derive(Debug, Clone, Copy)]
pub struct SuiteOptions {
    /// Largest `n` for the exhaustive checks.
    pub max_n: usize,
    pub dedupe: bool,
    pub field: FieldSpec,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            max_n: 6,
            dedupe: false,
            field: FieldSpec::Rationals,
        }
    }
}

/// Every check, scaled by `max_n`. Graph sweeps use at most 6 vertices
/// (5 for the suspension rule); enumeration goes up to `max_n` for `C_n`.
pub fn run_suite(opts: &SuiteOptions, workers: &Workers) -> Vec<Check> {
    let v = Verifier {
        workers,
        field: opts.field,
    };
    let sweep = opts.max_n.min(6);
    let mut checks = vec![
        v.closed_form_complete(2..=8),
        v.closed_form_cycle_complement(4..=9),
        v.suspension(sweep.min(5)),
        v.padding(sweep.saturating_sub(1).min(5), sweep + 1),
    ];
    checks.extend(v.corpus(sweep));
    checks.push(v.enumeration_plain(2..=opts.max_n, opts.dedupe));
    checks.push(v.enumeration_height(2..=sweep, opts.dedupe));
    checks.push(v.witnesses(2..=opts.max_n.max(12)));
    checks.push(v.hk_subspace(20));
    checks.push(v.counting(20));
    checks
}
