//! Ferrers shapes, stack polyominoes and their sparse 0-1 fillings.
//!
//! Rows are numbered from the bottom starting at 1 and columns from the left.
//! Every shape here is a list of column heights with bottom-justified columns:
//! a Ferrers shape has weakly increasing heights (rows right-justified, longer
//! rows below), a stack polyomino has unimodal heights. A filling stores, for
//! each column, the row of its 1-cell or 0 for a zero column, so fillings are
//! sparse by construction and semi-standard when no column is zero.

use std::collections::BTreeMap;
use std::fmt;

use crate::containment::contains;
use crate::error::{Error, Result};
use crate::seqcore::{format_symbols, parse_symbols, Partition};

/// Kind of diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShapeKind {
    /// Weakly increasing column heights.
    Ferrers,
    /// Unimodal column heights.
    Stack,
}

/// A diagram given by its column heights.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Shape {
    kind: ShapeKind,
    heights: Vec<u8>,
}

fn is_unimodal(h: &[u8]) -> bool {
    let mut i = 1;
    while i < h.len() && h[i - 1] <= h[i] {
        i += 1;
    }
    while i < h.len() && h[i - 1] >= h[i] {
        i += 1;
    }
    i >= h.len()
}

impl Shape {
    /// Ferrers shape with the given heights.
    pub fn ferrers(heights: Vec<u8>) -> Result<Self> {
        if heights.contains(&0) || heights.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Precondition(format!(
                "heights {heights:?} do not form a Ferrers shape"
            )));
        }
        Ok(Shape { kind: ShapeKind::Ferrers, heights })
    }

    /// Stack polyomino with the given heights.
    pub fn stack(heights: Vec<u8>) -> Result<Self> {
        if heights.contains(&0) || !is_unimodal(&heights) {
            return Err(Error::Precondition(format!(
                "heights {heights:?} do not form a stack polyomino"
            )));
        }
        Ok(Shape { kind: ShapeKind::Stack, heights })
    }

    /// Parse `2,4,4,4,4,4` as a shape of the given kind.
    pub fn parse(text: &str, kind: ShapeKind) -> Result<Self> {
        let mut heights = Vec::new();
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            heights.push(part.parse::<u8>().map_err(|_| Error::Parse(format!("bad height `{part}`")))?);
        }
        match kind {
            ShapeKind::Ferrers => Shape::ferrers(heights),
            ShapeKind::Stack => Shape::stack(heights),
        }
    }

    /// Kind of diagram.
    pub fn kind(&self) -> ShapeKind {
        self.kind
    }

    /// Column heights.
    pub fn heights(&self) -> &[u8] {
        &self.heights
    }

    /// Number of rows `r`.
    pub fn rows(&self) -> u8 {
        self.heights.iter().copied().max().unwrap_or(0)
    }

    /// Number of columns `c`.
    pub fn columns(&self) -> usize {
        self.heights.len()
    }

    /// True iff cell (`row`, `col`) (1-based) lies in the shape.
    pub fn has_cell(&self, row: u8, col: usize) -> bool {
        row >= 1 && col >= 1 && col <= self.heights.len() && row <= self.heights[col - 1]
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let h: Vec<String> = self.heights.iter().map(|h| h.to_string()).collect();
        write!(f, "({})", h.join(","))
    }
}

fn weakly_increasing(c: usize, max: u8, out: &mut Vec<Vec<u8>>, cur: &mut Vec<u8>) {
    if cur.len() == c {
        out.push(cur.clone());
        return;
    }
    let lo = cur.last().copied().unwrap_or(1);
    for h in lo..=max {
        cur.push(h);
        weakly_increasing(c, max, out, cur);
        cur.pop();
    }
}

/// All Ferrers shapes with exactly `columns` columns and exactly `rows` rows,
/// in lexicographic order of height vectors.
pub fn ferrers_shapes(columns: usize, rows: u8) -> Vec<Shape> {
    let mut out = Vec::new();
    weakly_increasing(columns, rows, &mut out, &mut Vec::new());
    out.into_iter()
        .filter(|h| h.last().copied().unwrap_or(0) == rows)
        .map(|heights| Shape { kind: ShapeKind::Ferrers, heights })
        .collect()
}

/// All stack polyominoes with exactly `columns` columns and heights at most
/// `max_rows`, in lexicographic order of height vectors.
pub fn stack_shapes(columns: usize, max_rows: u8) -> Vec<Shape> {
    let mut out = Vec::new();
    let mut cur = vec![1u8; columns];
    loop {
        if is_unimodal(&cur) {
            out.push(Shape { kind: ShapeKind::Stack, heights: cur.clone() });
        }
        let mut i = columns;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < max_rows {
                cur[i] += 1;
                for c in cur.iter_mut().skip(i + 1) {
                    *c = 1;
                }
                break;
            }
        }
    }
}

/// A 0-1 filling with at most one 1-cell per column.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Filling {
    shape: Shape,
    cols: Vec<u8>,
}

impl Filling {
    /// `cols[j]` is the row of the 1-cell of column `j+1`, or 0 for a zero
    /// column.
    pub fn new(shape: Shape, cols: Vec<u8>) -> Result<Self> {
        if cols.len() != shape.columns() {
            return Err(Error::Precondition(format!(
                "{} column entries for a shape with {} columns",
                cols.len(),
                shape.columns()
            )));
        }
        if let Some(j) = cols.iter().zip(shape.heights()).position(|(&r, &h)| r > h) {
            return Err(Error::Precondition(format!("1-cell outside column {}", j + 1)));
        }
        Ok(Filling { shape, cols })
    }

    /// The shape.
    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    /// Row of the 1-cell per column, 0 for a zero column.
    pub fn columns(&self) -> &[u8] {
        &self.cols
    }

    /// Exactly one 1-cell in every column.
    pub fn is_semi_standard(&self) -> bool {
        !self.cols.contains(&0)
    }

    /// The 1-cells as (row, column), 1-based, ordered by column.
    pub fn ones(&self) -> Vec<(u8, usize)> {
        self.cols
            .iter()
            .enumerate()
            .filter(|(_, &r)| r > 0)
            .map(|(j, &r)| (r, j + 1))
            .collect()
    }

    /// Number of 1-cells in each row `1..=r`.
    pub fn row_counts(&self) -> Vec<u8> {
        let mut out = vec![0u8; self.shape.rows() as usize];
        for &r in self.cols.iter().filter(|&&r| r > 0) {
            out[r as usize - 1] += 1;
        }
        out
    }

    /// One line per column: the row of its 1-cell, 0 for a zero column.
    pub fn dump(&self) -> String {
        self.cols.iter().map(|r| format!("{r}\n")).collect()
    }
}

impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [", self.shape)?;
        for (j, r) in self.cols.iter().enumerate() {
            if j > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str("]")
    }
}

/// A rectangular 0-1 matrix, stored column by column.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix01 {
    rows: u8,
    // rows (1-based, increasing) holding a 1 in each column
    cols: Vec<Vec<u8>>,
}

impl Matrix01 {
    /// Matrix with `rows` rows and the given 1-cells per column.
    pub fn new(rows: u8, cols: Vec<Vec<u8>>) -> Result<Self> {
        let mut cols = cols;
        for c in &mut cols {
            c.sort_unstable();
            c.dedup();
            if c.iter().any(|&r| r == 0 || r > rows) {
                return Err(Error::Precondition("1-cell outside the matrix".into()));
            }
        }
        Ok(Matrix01 { rows, cols })
    }

    /// `M(S, k)`: `k` rows, column `j` has its 1 in row `s_j`.
    pub fn of_sequence(s: &[u8], k: u8) -> Result<Self> {
        if let Some(&bad) = s.iter().find(|&&v| v == 0 || v > k) {
            return Err(Error::OutOfRange(format!("symbol {bad} exceeds k = {k}")));
        }
        Ok(Matrix01 { rows: k, cols: s.iter().map(|&v| vec![v]).collect() })
    }

    /// Identity matrix `I_k`.
    pub fn identity(k: u8) -> Self {
        Matrix01 { rows: k, cols: (1..=k).map(|i| vec![i]).collect() }
    }

    /// Anti-identity `J_k`: the 1 of column `j` sits in row `k + 1 - j`.
    pub fn anti_identity(k: u8) -> Self {
        Matrix01 { rows: k, cols: (1..=k).rev().map(|i| vec![i]).collect() }
    }

    /// Number of rows.
    pub fn rows(&self) -> u8 {
        self.rows
    }

    /// Number of columns.
    pub fn num_columns(&self) -> usize {
        self.cols.len()
    }

    /// The 1-cells as (row, column), 1-based.
    pub fn ones(&self) -> Vec<(u8, usize)> {
        let mut out = Vec::new();
        for (j, c) in self.cols.iter().enumerate() {
            out.extend(c.iter().map(|&r| (r, j + 1)));
        }
        out
    }
}

/// Shorthand for [`Matrix01::of_sequence`].
pub fn matrix_of(s: &[u8], k: u8) -> Result<Matrix01> {
    Matrix01::of_sequence(s, k)
}

fn next_combination(c: &mut [u8], n: u8) -> bool {
    let r = c.len();
    let mut i = r;
    while i > 0 {
        i -= 1;
        if c[i] < n - (r - 1 - i) as u8 {
            c[i] += 1;
            for j in i + 1..r {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

// Columns are given by height and row of the 1-cell (0 when empty).
fn contains_cols(heights: &[u8], cols: &[u8], m: &Matrix01) -> bool {
    let r = m.rows as usize;
    let total_rows = heights.iter().copied().max().unwrap_or(0);
    // a sparse filling never covers two 1s of one column
    if m.cols.iter().any(|c| c.len() > 1) || m.cols.len() > cols.len() || r > total_rows as usize {
        return false;
    }
    if r == 0 {
        return true;
    }
    let mut rowset: Vec<u8> = (1..=r as u8).collect();
    loop {
        if matched_all(heights, cols, m, &rowset) {
            return true;
        }
        if !next_combination(&mut rowset, total_rows) {
            return false;
        }
    }
}

// Greedy leftmost matching of the columns of `m` for a fixed row choice.
fn matched_all(heights: &[u8], cols: &[u8], m: &Matrix01, rowset: &[u8]) -> bool {
    let top = rowset[rowset.len() - 1];
    let mut j = 0usize;
    for c in &m.cols {
        let want = c.first().map(|&a| rowset[a as usize - 1]);
        loop {
            if j == cols.len() {
                return false;
            }
            let fits = heights[j] >= top && want.map_or(true, |w| cols[j] == w);
            j += 1;
            if fits {
                break;
            }
        }
    }
    true
}

/// True iff some rows `i_1 < ... < i_r` and columns `j_1 < ... < j_c`, all of
/// whose intersections lie in the shape, cover every 1 of `m` by a 1-cell of
/// `f`.
pub fn filling_contains(f: &Filling, m: &Matrix01) -> bool {
    contains_cols(f.shape.heights(), &f.cols, m)
}

/// Which fillings to count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FillMode {
    /// Exactly one 1-cell per column.
    SemiStandard,
    /// At most one 1-cell per column.
    Sparse,
}

fn walk_fillings(
    heights: &[u8],
    avoid: &Matrix01,
    mode: FillMode,
    cur: &mut Vec<u8>,
    visit: &mut dyn FnMut(&[u8]),
) {
    let j = cur.len();
    if j == heights.len() {
        visit(cur);
        return;
    }
    let lo = if mode == FillMode::SemiStandard { 1 } else { 0 };
    for r in lo..=heights[j] {
        cur.push(r);
        if !contains_cols(&heights[..=j], cur, avoid) {
            walk_fillings(heights, avoid, mode, cur, visit);
        }
        cur.pop();
    }
}

/// Number of fillings of `shape` avoiding `avoid`.
pub fn count_fillings(shape: &Shape, avoid: &Matrix01, mode: FillMode) -> Result<u64> {
    let mut n = 0u64;
    let mut overflow = false;
    walk_fillings(shape.heights(), avoid, mode, &mut Vec::new(), &mut |_| match n.checked_add(1) {
        Some(v) => n = v,
        None => overflow = true,
    });
    if overflow {
        return Err(Error::Overflow("filling count"));
    }
    Ok(n)
}

/// All fillings of `shape` avoiding `avoid`, in lexicographic order of their
/// column vectors.
pub fn avoiding_fillings(shape: &Shape, avoid: &Matrix01, mode: FillMode) -> Vec<Filling> {
    let mut out = Vec::new();
    walk_fillings(shape.heights(), avoid, mode, &mut Vec::new(), &mut |c| {
        out.push(Filling { shape: shape.clone(), cols: c.to_vec() })
    });
    out
}

/// Avoiding fillings of `shape` counted by their vector of row sums.
pub fn count_fillings_by_row_sums(
    shape: &Shape,
    avoid: &Matrix01,
    mode: FillMode,
) -> BTreeMap<Vec<u8>, u64> {
    let mut out = BTreeMap::new();
    for f in avoiding_fillings(shape, avoid, mode) {
        *out.entry(f.row_counts()).or_insert(0) += 1;
    }
    out
}

/// Outcome of an equivalence check over a family of shapes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivReport {
    /// Number of shapes compared.
    pub shapes_checked: usize,
    /// First shape with different counts, with both counts.
    pub violation: Option<(Shape, u64, u64)>,
}

impl EquivReport {
    /// True when no shape separated the two matrices.
    pub fn equivalent(&self) -> bool {
        self.violation.is_none()
    }
}

fn equiv_over(shapes: impl Iterator<Item = Shape>, a: &Matrix01, b: &Matrix01) -> Result<EquivReport> {
    let mut checked = 0;
    for s in shapes {
        checked += 1;
        let ca = count_fillings(&s, a, FillMode::SemiStandard)?;
        let cb = count_fillings(&s, b, FillMode::SemiStandard)?;
        if ca != cb {
            return Ok(EquivReport { shapes_checked: checked, violation: Some((s, ca, cb)) });
        }
    }
    Ok(EquivReport { shapes_checked: checked, violation: None })
}

/// Compare semi-standard avoider counts on every Ferrers shape with at most
/// `max_columns` columns and `max_rows` rows, in order of column count then
/// height vector.
pub fn ferrers_equiv_upto(a: &Matrix01, b: &Matrix01, max_columns: usize, max_rows: u8) -> Result<EquivReport> {
    let shapes = (1..=max_columns).flat_map(move |c| (1..=max_rows).flat_map(move |r| ferrers_shapes(c, r)));
    equiv_over(shapes, a, b)
}

/// As [`ferrers_equiv_upto`] over stack polyominoes.
pub fn stack_equiv_upto(a: &Matrix01, b: &Matrix01, max_columns: usize, max_rows: u8) -> Result<EquivReport> {
    let shapes = (1..=max_columns).flat_map(move |c| stack_shapes(c, max_rows));
    equiv_over(shapes, a, b)
}

fn shift_cols(f: &Filling, up: bool) -> Result<Filling> {
    if !is_unimodal(f.shape.heights()) {
        return Err(Error::Precondition("filshift needs a stack polyomino".into()));
    }
    let cols = f
        .cols
        .iter()
        .zip(f.shape.heights())
        .map(|(&r, &h)| match (r, up) {
            (0, _) => 0,
            (r, true) if r < h => r + 1,
            (_, true) => 1,
            (1, false) => h,
            (r, false) => r - 1,
        })
        .collect();
    Ok(Filling { shape: f.shape.clone(), cols })
}

/// In every column, move the topmost cell's value to row 1 and every other
/// value up one row. Zero columns stay zero.
pub fn filshift(f: &Filling) -> Result<Filling> {
    shift_cols(f, true)
}

/// Inverse of [`filshift`].
pub fn filshift_inverse(f: &Filling) -> Result<Filling> {
    shift_cols(f, false)
}

/// True iff rows `1..=t` all contain a 1-cell and the leftmost 1-cell of row
/// `i` lies strictly right of the leftmost 1-cell of row `i+1`.
pub fn is_t_falling(f: &Filling, t: u8) -> bool {
    if t > f.shape.rows() {
        return false;
    }
    let mut prev: Option<usize> = None;
    for row in 1..=t {
        let Some(lm) = f.cols.iter().position(|&r| r == row) else { return false };
        if prev.is_some_and(|p| lm >= p) {
            return false;
        }
        prev = Some(lm);
    }
    true
}

/// The green filling of a partition: in the matrix `M(π, m)`, keep the cells
/// strictly right of each row's leftmost 1-cell and drop the zero columns.
/// The result is a semi-standard filling of a Ferrers shape with `n - m`
/// columns and at most `m` rows.
pub fn green_filling(p: &Partition) -> Filling {
    let mut seen = 0u8;
    let mut heights = Vec::new();
    let mut cols = Vec::new();
    for &v in p.iter() {
        if v > seen {
            seen = v;
        } else {
            heights.push(seen);
            cols.push(v);
        }
    }
    Filling { shape: Shape { kind: ShapeKind::Ferrers, heights }, cols }
}

/// [`green_filling`] for a partition avoiding `12...k S`. Under this map the
/// partition avoids `12...k S` iff the filling avoids `M(S, k)`.
pub fn partition_to_filling(p: &Partition, k: u8, tail: &[u8]) -> Result<Filling> {
    let mut tau: Vec<u8> = (1..=k).collect();
    tau.extend_from_slice(tail);
    if contains(p, &tau) {
        return Err(Error::Precondition(format!("{p} contains {}", format_symbols(&tau))));
    }
    Ok(green_filling(p))
}

/// Inverse of [`green_filling`] for partitions with `m` blocks: re-insert the
/// zero columns of heights `1..m-1`, each just after the rightmost earlier
/// column not taller than it, put a 1 on top of each, and read off the rows.
pub fn filling_to_partition(f: &Filling, m: u8) -> Result<Partition> {
    if !f.is_semi_standard() || f.shape.heights().windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Precondition("need a semi-standard filling of a Ferrers shape".into()));
    }
    if f.shape.rows() > m || (m == 0 && f.shape.columns() > 0) {
        return Err(Error::Precondition(format!("filling has more than {m} rows")));
    }
    // (height, symbol) for every column; first occurrences get height i-1
    let mut seq: Vec<(u8, u8)> = f.shape.heights().iter().copied().zip(f.cols.iter().copied()).collect();
    for i in 2..=m {
        let pos = seq.iter().rposition(|&(h, _)| h < i).map_or(0, |p| p + 1);
        seq.insert(pos, (i - 1, i));
    }
    let mut out: Vec<u8> = Vec::with_capacity(seq.len() + 1);
    if m > 0 {
        out.push(1);
    }
    out.extend(seq.iter().map(|&(_, v)| v));
    Partition::new(out)
}

/// Side of a vertex in an ordered bipartite graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Vertex {
    /// Left vertex `l_j` for row `j`.
    Left(u8),
    /// Right vertex `r_i` for column `i`.
    Right(usize),
}

/// Vertices in their linear order, with edges as index pairs (left, right)
/// into `vertices`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedGraph {
    /// Vertices in order.
    pub vertices: Vec<Vertex>,
    /// Edges as positions in `vertices`, left end first.
    pub edges: Vec<(usize, usize)>,
}

impl OrderedGraph {
    fn is_left(&self, i: usize) -> bool {
        matches!(self.vertices[i], Vertex::Left(_))
    }
}

/// The ordered graph of a filling of a Ferrers shape: `l_j < r_i` iff row `j`
/// meets column `i`, with an edge `l_j r_i` for every 1-cell.
pub fn filling_to_ordered_graph(f: &Filling) -> Result<OrderedGraph> {
    let h = f.shape.heights();
    if h.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Precondition("ordered graphs need a Ferrers shape".into()));
    }
    let mut vertices = Vec::new();
    let mut left_pos = vec![0usize; f.shape.rows() as usize + 1];
    let mut right_pos = vec![0usize; h.len()];
    let mut placed = 0u8;
    for (i, &hi) in h.iter().enumerate() {
        while placed < hi {
            placed += 1;
            left_pos[placed as usize] = vertices.len();
            vertices.push(Vertex::Left(placed));
        }
        right_pos[i] = vertices.len();
        vertices.push(Vertex::Right(i + 1));
    }
    let edges = f
        .cols
        .iter()
        .enumerate()
        .filter(|(_, &r)| r > 0)
        .map(|(i, &r)| (left_pos[r as usize], right_pos[i]))
        .collect();
    Ok(OrderedGraph { vertices, edges })
}

fn pattern_graph(edges: &[(usize, usize)]) -> OrderedGraph {
    OrderedGraph {
        vertices: vec![Vertex::Left(1), Vertex::Left(2), Vertex::Right(1), Vertex::Right(2), Vertex::Right(3)],
        edges: edges.to_vec(),
    }
}

/// `l_j < l_j' < r_i < r_i' < r_i''` with edges `l_j r_i`, `l_j r_i'`,
/// `l_j' r_i''`: the graph form of `M(112, 2)`.
pub fn pattern_graph_g1() -> OrderedGraph {
    pattern_graph(&[(0, 2), (0, 3), (1, 4)])
}

/// Same vertices with edges `l_j r_i'`, `l_j' r_i`, `l_j' r_i''`: the graph
/// form of `M(212, 2)`.
pub fn pattern_graph_g2() -> OrderedGraph {
    pattern_graph(&[(0, 3), (1, 2), (1, 4)])
}

/// True iff `pat` embeds into `host` by an order-preserving, side-preserving
/// injection that maps edges to edges.
pub fn ordered_graph_contains(host: &OrderedGraph, pat: &OrderedGraph) -> bool {
    let n = host.vertices.len();
    let mut adj = vec![vec![false; n]; n];
    for &(a, b) in &host.edges {
        adj[a][b] = true;
        adj[b][a] = true;
    }
    let mut map = vec![usize::MAX; pat.vertices.len()];
    fn go(i: usize, start: usize, host: &OrderedGraph, pat: &OrderedGraph, adj: &[Vec<bool>], map: &mut [usize]) -> bool {
        if i == pat.vertices.len() {
            return true;
        }
        for v in start..host.vertices.len() {
            if host.is_left(v) != pat.is_left(i) {
                continue;
            }
            let ok = pat.edges.iter().all(|&(a, b)| {
                let (x, y) = if a == i { (b, v) } else if b == i { (a, v) } else { return true };
                x > i || adj[map[x]][y]
            });
            if ok {
                map[i] = v;
                if go(i + 1, v + 1, host, pat, adj, map) {
                    return true;
                }
            }
        }
        false
    }
    go(0, 0, host, pat, &adj, &mut map)
}

/// Parse a matrix pattern given as a sequence `S` and row count `k`.
pub fn parse_matrix(seq: &str, k: u8) -> Result<Matrix01> {
    Matrix01::of_sequence(&parse_symbols(seq)?, k)
}
