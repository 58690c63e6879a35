//! Bipartite multigraph diagrams for the product-formula expansion, with
//! canonical forms, enumeration by pairs of set partitions, connectivity, and
//! the dual (diagram-sum vs operator-series) evaluations.

use std::collections::BTreeMap;
use std::fmt;
use std::fmt::Write as _;

use num::BigInt;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{
    enumerate_integer_partitions_with_bound, enumerate_set_partitions_with_bound,
    partition_type_multiplicity, IntegerPartition, SetPartition, INTEGER_PARTITION_BOUND,
};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::series::{apply_diff_operator, BivariatePoly, EGFSeries};

/// Default cap on diagram enumeration; B(7)² is ~769k labelled pairs.
pub const DIAGRAM_BOUND: usize = 7;

/// A bipartite multigraph between white row-vertices and black
/// column-vertices, held in canonical form: the row-major flattening is
/// lexicographically minimal over all row and column permutations.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
#[serde(try_from = "RawDiagram")]
pub struct DiagDiagram {
    mult: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct RawDiagram {
    mult: Vec<Vec<usize>>,
}

impl TryFrom<RawDiagram> for DiagDiagram {
    type Error = Error;
    fn try_from(raw: RawDiagram) -> Result<Self> {
        canonicalize(raw.mult)
    }
}

impl<'de> Deserialize<'de> for DiagDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let raw = RawDiagram::deserialize(deserializer)?;
        DiagDiagram::try_from(raw).map_err(serde::de::Error::custom)
    }
}

/// Canonicalize a multiplicity matrix. Rows and columns may be permuted
/// freely; the result is the lexicographically least row-major flattening.
/// The empty 0×0 matrix is the valid grade-0 diagram.
pub fn canonicalize(mult: Vec<Vec<usize>>) -> Result<DiagDiagram> {
    let nrows = mult.len();
    let ncols = mult.first().map_or(0, |r| r.len());
    if mult.iter().any(|r| r.len() != ncols) {
        return Err(Error::RaggedMatrix);
    }
    for (i, row) in mult.iter().enumerate() {
        if row.iter().all(|&e| e == 0) {
            return Err(Error::ZeroLine {
                kind: "row",
                index: i,
            });
        }
    }
    for j in 0..ncols {
        if mult.iter().all(|r| r[j] == 0) {
            return Err(Error::ZeroLine {
                kind: "column",
                index: j,
            });
        }
    }
    if nrows == 0 {
        return Ok(DiagDiagram { mult: vec![] });
    }

    // For a fixed row order the minimal flattening is reached by sorting the
    // columns ascending as vectors, so only row orders need searching. Equal
    // rows are interchangeable; permute sorted row indices with duplicate
    // skipping.
    let mut sorted_rows = mult.clone();
    sorted_rows.sort();
    let mut best: Option<Vec<Vec<usize>>> = None;
    let mut order: Vec<usize> = Vec::with_capacity(nrows);
    let mut used = vec![false; nrows];

    fn search(
        rows: &[Vec<usize>],
        ncols: usize,
        order: &mut Vec<usize>,
        used: &mut [bool],
        best: &mut Option<Vec<Vec<usize>>>,
    ) {
        let nrows = rows.len();
        if order.len() == nrows {
            let mut cols: Vec<Vec<usize>> = (0..ncols)
                .map(|j| order.iter().map(|&i| rows[i][j]).collect())
                .collect();
            cols.sort();
            let candidate: Vec<Vec<usize>> = (0..nrows)
                .map(|i| cols.iter().map(|c| c[i]).collect())
                .collect();
            if best.as_ref().is_none_or(|b| candidate < *b) {
                *best = Some(candidate);
            }
            return;
        }
        for i in 0..nrows {
            if used[i] || (i > 0 && rows[i] == rows[i - 1] && !used[i - 1]) {
                continue;
            }
            used[i] = true;
            order.push(i);
            search(rows, ncols, order, used, best);
            order.pop();
            used[i] = false;
        }
    }

    search(&sorted_rows, ncols, &mut order, &mut used, &mut best);
    Ok(DiagDiagram {
        mult: best.unwrap(),
    })
}

impl DiagDiagram {
    /// The grade-0 diagram with no vertices.
    pub fn empty() -> Self {
        DiagDiagram { mult: vec![] }
    }

    pub fn mult(&self) -> &[Vec<usize>] {
        &self.mult
    }

    pub fn num_white(&self) -> usize {
        self.mult.len()
    }

    pub fn num_black(&self) -> usize {
        self.mult.first().map_or(0, |r| r.len())
    }

    /// Total number of lines.
    pub fn grade(&self) -> usize {
        self.mult.iter().flatten().sum()
    }

    pub fn row_degrees(&self) -> Vec<usize> {
        self.mult.iter().map(|r| r.iter().sum()).collect()
    }

    pub fn col_degrees(&self) -> Vec<usize> {
        (0..self.num_black())
            .map(|j| self.mult.iter().map(|r| r[j]).sum())
            .collect()
    }

    /// Connectivity of the underlying bipartite graph (an edge wherever the
    /// multiplicity is positive). The empty diagram counts as connected.
    #[allow(clippy::needless_range_loop)]
    pub fn is_connected(&self) -> bool {
        let nw = self.num_white();
        let nb = self.num_black();
        if nw == 0 {
            return true;
        }
        let mut seen_w = vec![false; nw];
        let mut seen_b = vec![false; nb];
        let mut stack = vec![0usize];
        seen_w[0] = true;
        // stack holds white indices; visit their black neighbours in one step
        while let Some(w) = stack.pop() {
            for b in 0..nb {
                if self.mult[w][b] > 0 && !seen_b[b] {
                    seen_b[b] = true;
                    for w2 in 0..nw {
                        if self.mult[w2][b] > 0 && !seen_w[w2] {
                            seen_w[w2] = true;
                            stack.push(w2);
                        }
                    }
                }
            }
        }
        seen_w.iter().all(|&s| s) && seen_b.iter().all(|&s| s)
    }

    /// Graphviz source: white circles, black filled circles, one edge line
    /// per parallel line, vertices named w0.., b0...
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph diag {\n");
        for w in 0..self.num_white() {
            let _ = writeln!(
                out,
                "  w{w} [shape=circle, style=filled, fillcolor=white, label=\"\"];"
            );
        }
        for b in 0..self.num_black() {
            let _ = writeln!(
                out,
                "  b{b} [shape=circle, style=filled, fillcolor=black, label=\"\"];"
            );
        }
        for (w, row) in self.mult.iter().enumerate() {
            for (b, &m) in row.iter().enumerate() {
                for _ in 0..m {
                    let _ = writeln!(out, "  w{w} -- b{b};");
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Display for DiagDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.mult.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// A pair of set partitions of the same ground set `{1..n}`: the white blocks
/// and the black blocks of a labelled line configuration.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LabelledConfiguration {
    pi_white: SetPartition,
    pi_black: SetPartition,
}

impl LabelledConfiguration {
    pub fn new(pi_white: SetPartition, pi_black: SetPartition) -> Result<Self> {
        if pi_white.ground_size() != pi_black.ground_size() {
            return Err(Error::GroundSetMismatch {
                left: pi_white.ground_size(),
                right: pi_black.ground_size(),
            });
        }
        Ok(LabelledConfiguration { pi_white, pi_black })
    }

    pub fn pi_white(&self) -> &SetPartition {
        &self.pi_white
    }

    pub fn pi_black(&self) -> &SetPartition {
        &self.pi_black
    }
}

/// Collapse a labelled configuration to its diagram: entry (w, b) counts the
/// lines shared by white block w and black block b.
pub fn configuration_to_diagram(c: &LabelledConfiguration) -> DiagDiagram {
    let n = c.pi_white.ground_size();
    let mut block_of = vec![0usize; n + 1];
    for (b, block) in c.pi_black.blocks().iter().enumerate() {
        for &e in block {
            block_of[e] = b;
        }
    }
    let nb = c.pi_black.blocks().len();
    let mut mult = vec![vec![0usize; nb]; c.pi_white.blocks().len()];
    for (w, block) in c.pi_white.blocks().iter().enumerate() {
        for &e in block {
            mult[w][block_of[e]] += 1;
        }
    }
    canonicalize(mult).expect("blocks are non-empty, so no zero line can arise")
}

/// Canonical diagrams of one grade with their labelled-configuration counts.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct WeightedDiagramSet {
    entries: BTreeMap<DiagDiagram, BigInt>,
}

impl WeightedDiagramSet {
    pub fn entries(&self) -> &BTreeMap<DiagDiagram, BigInt> {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total_multiplicity(&self) -> BigInt {
        self.entries.values().sum()
    }
}

/// All grade-n diagrams with multiplicities, by exhausting pairs of set
/// partitions of `{1..n}`. Total multiplicity is B(n)².
pub fn enumerate_diag_diagrams(n: usize) -> Result<WeightedDiagramSet> {
    enumerate_diag_diagrams_with_bound(n, DIAGRAM_BOUND)
}

pub fn enumerate_diag_diagrams_with_bound(n: usize, bound: usize) -> Result<WeightedDiagramSet> {
    if n > bound {
        return Err(Error::BoundExceeded {
            what: "diagram enumeration",
            n,
            bound,
        });
    }
    let partitions = enumerate_set_partitions_with_bound(n, bound)?;
    let mut entries: BTreeMap<DiagDiagram, BigInt> = BTreeMap::new();

    let mut block_of = vec![0usize; n + 1];
    for pi_black in &partitions {
        for (b, block) in pi_black.blocks().iter().enumerate() {
            for &e in block {
                block_of[e] = b;
            }
        }
        let nb = pi_black.blocks().len();
        for pi_white in &partitions {
            let mut mult = vec![vec![0usize; nb]; pi_white.blocks().len()];
            for (w, block) in pi_white.blocks().iter().enumerate() {
                for &e in block {
                    mult[w][block_of[e]] += 1;
                }
            }
            let d = canonicalize(mult).expect("partition blocks are non-empty");
            *entries.entry(d).or_default() += 1;
        }
    }
    Ok(WeightedDiagramSet { entries })
}

/// The connected grade-n diagrams in canonical order.
pub fn connected_diagrams(n: usize) -> Result<Vec<DiagDiagram>> {
    connected_diagrams_with_bound(n, DIAGRAM_BOUND)
}

pub fn connected_diagrams_with_bound(n: usize, bound: usize) -> Result<Vec<DiagDiagram>> {
    Ok(enumerate_diag_diagrams_with_bound(n, bound)?
        .entries()
        .keys()
        .filter(|d| d.is_connected())
        .cloned()
        .collect())
}

/// Π_w L_{deg(w)} · Π_b V_{deg(b)} with weights indexed from degree 1.
pub fn diagram_weight(d: &DiagDiagram, l: &[Rational], v: &[Rational]) -> Result<Rational> {
    let mut weight = Rational::one();
    for deg in d.row_degrees() {
        let w = l.get(deg - 1).ok_or(Error::MissingWeight {
            which: "L",
            degree: deg,
        })?;
        weight = &weight * w;
    }
    for deg in d.col_degrees() {
        let w = v.get(deg - 1).ok_or(Error::MissingWeight {
            which: "V",
            degree: deg,
        })?;
        weight = &weight * w;
    }
    Ok(weight)
}

fn check_weights(n: usize, l: &[Rational], v: &[Rational]) -> Result<()> {
    if l.len() < n {
        return Err(Error::MissingWeight {
            which: "L",
            degree: l.len() + 1,
        });
    }
    if v.len() < n {
        return Err(Error::MissingWeight {
            which: "V",
            degree: v.len() + 1,
        });
    }
    Ok(())
}

/// The product-formula integrand evaluated as a weighted diagram sum:
/// F_n = Σ_{grade-n diagrams} multiplicity · weight.
pub fn pfi_by_diagrams(n_max: usize, l: &[Rational], v: &[Rational]) -> Result<EGFSeries> {
    pfi_by_diagrams_with_bound(n_max, l, v, DIAGRAM_BOUND)
}

pub fn pfi_by_diagrams_with_bound(
    n_max: usize,
    l: &[Rational],
    v: &[Rational],
    bound: usize,
) -> Result<EGFSeries> {
    check_weights(n_max, l, v)?;
    let mut coeffs = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut f_n = Rational::zero();
        for (d, m) in enumerate_diag_diagrams_with_bound(n, bound)?.entries() {
            f_n += &(&Rational::from(m) * &diagram_weight(d, l, v)?);
        }
        coeffs.push(f_n);
    }
    EGFSeries::new(n_max, coeffs)
}

/// The same integrand evaluated analytically:
/// F(x) = exp(Σ L_m x^m/m! d^m/dy^m) exp(Σ V_s y^s/s!) at y = 0.
pub fn pfi_by_series(n_max: usize, l: &[Rational], v: &[Rational]) -> Result<EGFSeries> {
    check_weights(n_max, l, v)?;
    let mut v_coeffs = vec![Rational::zero()];
    v_coeffs.extend(v.iter().take(n_max).cloned());
    let inner = EGFSeries::new(n_max, v_coeffs)?.exp()?;
    let g = BivariatePoly::from_y_series(inner.coeffs(), n_max)?;
    apply_diff_operator(&l[..n_max], &g)
}

/// Connected Graph Theorem check: the log of the full generating function
/// must match the connected-diagram sums grade by grade.
pub fn connected_generating_check(n_max: usize, l: &[Rational], v: &[Rational]) -> Result<bool> {
    connected_generating_check_with_bound(n_max, l, v, DIAGRAM_BOUND)
}

pub fn connected_generating_check_with_bound(
    n_max: usize,
    l: &[Rational],
    v: &[Rational],
    bound: usize,
) -> Result<bool> {
    let log_f = pfi_by_series(n_max, l, v)?.log()?;
    for n in 1..=n_max {
        let mut connected_sum = Rational::zero();
        for (d, m) in enumerate_diag_diagrams_with_bound(n, bound)?.entries() {
            if d.is_connected() {
                connected_sum += &(&Rational::from(m) * &diagram_weight(d, l, v)?);
            }
        }
        if connected_sum != *log_f.coeff(n) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Unlabelled single-black-dot diagrams at grade n: one per integer partition
/// shape, with the count of labelled realizations. Multiplicities sum to B(n).
pub fn enumerate_bell_diagrams(n: usize) -> Result<Vec<(IntegerPartition, BigInt)>> {
    Ok(
        enumerate_integer_partitions_with_bound(n, INTEGER_PARTITION_BOUND)?
            .into_iter()
            .map(|shape| {
                let m = partition_type_multiplicity(&shape);
                (shape, m)
            })
            .collect(),
    )
}
