//! Comparison of the squared-energy bound with the Hoffman bound over a
//! graph6 corpus.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;

use serde::Serialize;

use crate::bounds::{adjacency_spectrum, energy_ratio, hoffman_ratio};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::graph::{parse_graph6, Graph};
use crate::spectra::squared_energies;

pub const DEFAULT_TIE_EPS: f64 = 1e-9;

/// Number of connected graphs on 8 vertices; an exhaustive corpus must
/// contain exactly this many.
pub const CONNECTED_ON_EIGHT: usize = 11_117;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Winner {
    AndoLin,
    Hoffman,
    Tie,
}

impl Winner {
    pub fn as_str(self) -> &'static str {
        match self {
            Winner::AndoLin => "ando_lin",
            Winner::Hoffman => "hoffman",
            Winner::Tie => "tie",
        }
    }

    /// `|al - hoffman| <= tie_eps` is a tie.
    pub fn decide(ando_lin: f64, hoffman: f64, tie_eps: f64) -> Winner {
        if (ando_lin - hoffman).abs() <= tie_eps {
            Winner::Tie
        } else if ando_lin > hoffman {
            Winner::AndoLin
        } else {
            Winner::Hoffman
        }
    }
}

/// One connected non-bipartite graph of the corpus.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SurveyRow {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub s_plus: f64,
    pub s_minus: f64,
    pub ando_lin: f64,
    pub hoffman: f64,
    pub winner: Winner,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SurveyStats {
    pub corpus_id: String,
    pub total: usize,
    pub connected_nonbipartite: usize,
    pub al_strictly_better: usize,
    pub hoffman_strictly_better: usize,
    pub ties: usize,
    pub tie_eps: f64,
    /// Graphs whose bounds could not be computed. Always 0 after the
    /// non-bipartite filter.
    pub bound_failures: usize,
    /// Connected graphs per order.
    pub connected_by_order: BTreeMap<usize, usize>,
    pub warnings: Vec<String>,
    /// Per-graph records, in corpus order.
    #[serde(skip)]
    pub rows: Vec<SurveyRow>,
}

impl SurveyStats {
    /// Writes the rows as CSV with columns
    /// `graph6,n,m,s_plus,s_minus,ando_lin,hoffman,winner`.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let io = |e: csv::Error| Error::Io(e.to_string());
        w.write_record(["graph6", "n", "m", "s_plus", "s_minus", "ando_lin", "hoffman", "winner"]).map_err(io)?;
        for r in &self.rows {
            w.write_record([
                r.graph6.clone(),
                r.n.to_string(),
                r.m.to_string(),
                format!("{:.12}", r.s_plus),
                format!("{:.12}", r.s_minus),
                format!("{:.12}", r.ando_lin),
                format!("{:.12}", r.hoffman),
                r.winner.as_str().to_string(),
            ])
            .map_err(io)?;
        }
        w.flush().map_err(|e| Error::Io(e.to_string()))
    }

    /// Rows whose winner flips when the tie tolerance moves between `lo`
    /// and `hi`; these are the graphs a different tie convention would
    /// count differently.
    pub fn borderline(&self, lo: f64, hi: f64) -> Vec<&SurveyRow> {
        self.rows
            .iter()
            .filter(|r| Winner::decide(r.ando_lin, r.hoffman, lo) != Winner::decide(r.ando_lin, r.hoffman, hi))
            .collect()
    }
}

impl fmt::Display for SurveyStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "corpus                  {}", self.corpus_id)?;
        writeln!(f, "graphs                  {}", self.total)?;
        writeln!(f, "connected non-bipartite {}", self.connected_nonbipartite)?;
        writeln!(f, "ando-lin strictly better {}", self.al_strictly_better)?;
        writeln!(f, "hoffman strictly better {}", self.hoffman_strictly_better)?;
        writeln!(f, "ties (|diff| <= {:e})    {}", self.tie_eps, self.ties)?;
        for w in &self.warnings {
            writeln!(f, "warning: {w}")?;
        }
        Ok(())
    }
}

/// Parses a graph6 corpus, one graph per line. Blank lines and `>>graph6<<`
/// headers are skipped; errors carry 1-based line numbers.
pub fn parse_corpus(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| {
            let l = l.trim();
            !l.is_empty() && l != ">>graph6<<"
        })
        .map(|(i, l)| parse_graph6(l).map_err(|e| Error::Corpus { line: i + 1, source: Box::new(e) }))
        .collect()
}

pub fn run_survey(corpus_id: &str, text: &str, tie_eps: f64) -> Result<SurveyStats> {
    run_survey_with(corpus_id, text, tie_eps, Execution::default())
}

pub fn run_survey_with(corpus_id: &str, text: &str, tie_eps: f64, exec: Execution) -> Result<SurveyStats> {
    survey_graphs(corpus_id, &parse_corpus(text)?, tie_eps, exec)
}

/// Surveys graphs already in memory.
pub fn survey_graphs(corpus_id: &str, graphs: &[Graph], tie_eps: f64, exec: Execution) -> Result<SurveyStats> {
    if tie_eps.is_nan() || tie_eps < 0.0 {
        return Err(Error::InvalidArguments { generator: "survey".into(), reason: format!("tie_eps must be >= 0, got {tie_eps}") });
    }
    let evaluated = exec.map(graphs, |g| {
        let connected = g.is_connected();
        (connected, (connected && !g.is_bipartite()).then(|| survey_row(g, tie_eps)))
    });
    let mut stats = SurveyStats {
        corpus_id: corpus_id.to_string(),
        total: graphs.len(),
        connected_nonbipartite: 0,
        al_strictly_better: 0,
        hoffman_strictly_better: 0,
        ties: 0,
        tie_eps,
        bound_failures: 0,
        connected_by_order: BTreeMap::new(),
        warnings: Vec::new(),
        rows: Vec::new(),
    };
    for (g, (connected, row)) in graphs.iter().zip(evaluated) {
        if connected {
            *stats.connected_by_order.entry(g.n()).or_default() += 1;
        }
        match row {
            None => {}
            Some(Err(_)) => stats.bound_failures += 1,
            Some(Ok(row)) => {
                stats.connected_nonbipartite += 1;
                match row.winner {
                    Winner::AndoLin => stats.al_strictly_better += 1,
                    Winner::Hoffman => stats.hoffman_strictly_better += 1,
                    Winner::Tie => stats.ties += 1,
                }
                stats.rows.push(row);
            }
        }
    }
    debug_assert_eq!(stats.bound_failures, 0);
    if let Some(&c) = stats.connected_by_order.get(&8) {
        if c != CONNECTED_ON_EIGHT {
            stats.warnings.push(format!(
                "corpus has {c} connected graphs on 8 vertices; an exhaustive corpus has {CONNECTED_ON_EIGHT}"
            ));
        }
    }
    if stats.bound_failures > 0 {
        stats.warnings.push(format!("{} graphs had undefined bounds", stats.bound_failures));
    }
    Ok(stats)
}

fn survey_row(g: &Graph, tie_eps: f64) -> Result<SurveyRow> {
    let spec = adjacency_spectrum(g)?;
    let (s_plus, s_minus) = squared_energies(&spec);
    let ando_lin = 1.0 + energy_ratio(&spec)?;
    let hoffman = 1.0 + hoffman_ratio(&spec)?;
    Ok(SurveyRow {
        graph6: crate::graph::write_graph6(g),
        n: g.n(),
        m: g.edge_count(),
        s_plus,
        s_minus,
        ando_lin,
        hoffman,
        winner: Winner::decide(ando_lin, hoffman, tie_eps),
    })
}
