//! Counting and enumerating fillings of the `Syt(a,i,b)` and `Skyt(a,i,b)` diagrams.
//!
//! Coordinates are `(row, column)` with row 0 at the top.
//!
//! `Syt(a,i,b)`: column 0 has `a` cells, columns `1..=i` have rows 0 and 1,
//! and columns `i+1..=i+b` extend row 0. Requires `a >= 2` when `i >= 1`.
//!
//! `Skyt(a,i,b)`, `i >= 1`, `a, b >= 2`: with `R = b - 2`, column 0 spans rows
//! `R..R+a`, columns `1..i` span rows `R` and `R+1`, and column `i` spans rows
//! `0..b`, rising above the rest. For `i = 0` and `b >= 2` the first and last
//! columns merge into one column of `a + b - 2` cells whose original top sits
//! at row `R`; this reproduces `skyt(a,0,b) = 1` and makes the barred count
//! equal 1 exactly when `b = 2`. Both shapes need `a >= 1`; all other parameters
//! give the empty family.

use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest shape [`enumerate_fillings`] will walk.
pub const ENUMERATION_CAP: usize = 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableauKind {
    Syt,
    Skyt,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TableauShape {
    pub kind: TableauKind,
    pub a: i64,
    pub i: i64,
    pub b: i64,
    pub barred: bool,
}

/// Column `c` occupies rows `top .. top + height`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Column {
    top: usize,
    height: usize,
}

impl TableauShape {
    pub fn syt(a: i64, i: i64, b: i64) -> TableauShape {
        TableauShape {
            kind: TableauKind::Syt,
            a,
            i,
            b,
            barred: false,
        }
    }

    pub fn skyt(a: i64, i: i64, b: i64) -> TableauShape {
        TableauShape {
            kind: TableauKind::Skyt,
            a,
            i,
            b,
            barred: false,
        }
    }

    pub fn barred(self) -> TableauShape {
        TableauShape {
            barred: true,
            ..self
        }
    }

    pub fn unbarred(self) -> TableauShape {
        TableauShape {
            barred: false,
            ..self
        }
    }

    /// Columns of the diagram, or `None` when the parameters name no diagram.
    fn columns(&self) -> Option<Vec<Column>> {
        let (a, i, b) = (self.a, self.i, self.b);
        if a < 0 || i < 0 || b < 0 {
            return None;
        }
        let (a, i, b) = (a as usize, i as usize, b as usize);
        match self.kind {
            TableauKind::Syt => {
                if a < 1 || (i >= 1 && a < 2) {
                    return None;
                }
                let mut cols = vec![Column { top: 0, height: a }];
                cols.extend((0..i).map(|_| Column { top: 0, height: 2 }));
                cols.extend((0..b).map(|_| Column { top: 0, height: 1 }));
                Some(cols)
            }
            TableauKind::Skyt => {
                if b < 2 || a < 1 {
                    return None;
                }
                if i == 0 {
                    return Some(vec![Column {
                        top: 0,
                        height: a + b - 2,
                    }]);
                }
                if a < 2 {
                    return None;
                }
                let r = b - 2;
                let mut cols = vec![Column { top: r, height: a }];
                cols.extend((1..i).map(|_| Column { top: r, height: 2 }));
                cols.push(Column { top: 0, height: b });
                Some(cols)
            }
        }
    }

    /// Cells in column-major order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.columns()
            .map(|cols| {
                cols.iter()
                    .enumerate()
                    .flat_map(|(c, col)| (col.top..col.top + col.height).map(move |r| (r, c)))
                    .collect()
            })
            .unwrap_or_default()
    }

    pub fn cell_count(&self) -> usize {
        self.columns()
            .map_or(0, |cols| cols.iter().map(|c| c.height).sum())
    }

    /// The cell that must hold 1 in the barred skew family: top of the original left column.
    fn forced_min(&self) -> Option<(usize, usize)> {
        (self.barred && self.kind == TableauKind::Skyt && self.b >= 2)
            .then(|| (self.b as usize - 2, 0))
    }

    /// Cells allowed to hold the maximum in the barred straight family.
    fn allowed_max(&self, cols: &[Column]) -> Option<Vec<(usize, usize)>> {
        if !(self.barred && self.kind == TableauKind::Syt) {
            return None;
        }
        let i = self.i as usize;
        let mut cells = vec![(cols[0].top + cols[0].height - 1, 0)];
        let other = (cols[i].top + cols[i].height - 1, i);
        if !cells.contains(&other) {
            cells.push(other);
        }
        Some(cells)
    }
}

/// Memoized count of ways to grow the order ideal `state` into `target`.
struct Counter<'a> {
    cols: &'a [Column],
    target: Vec<u8>,
    memo: HashMap<Vec<u8>, BigInt>,
}

impl<'a> Counter<'a> {
    fn placeable(cols: &[Column], state: &[u8], limit: &[u8], c: usize) -> bool {
        if state[c] >= limit[c] {
            return false;
        }
        let row = cols[c].top + state[c] as usize;
        if c == 0 {
            return true;
        }
        let left = cols[c - 1];
        if row < left.top || row >= left.top + left.height {
            return true;
        }
        state[c - 1] as usize > row - left.top
    }

    fn count(&mut self, state: &mut Vec<u8>) -> BigInt {
        if *state == self.target {
            return BigInt::one();
        }
        if let Some(v) = self.memo.get(state) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for c in 0..self.cols.len() {
            if Self::placeable(self.cols, state, &self.target, c) {
                state[c] += 1;
                total += self.count(state);
                state[c] -= 1;
            }
        }
        self.memo.insert(state.clone(), total.clone());
        total
    }
}

fn count_uncached(shape: &TableauShape) -> BigInt {
    let Some(cols) = shape.columns() else {
        return BigInt::zero();
    };
    let full: Vec<u8> = cols.iter().map(|c| c.height as u8).collect();
    let empty = vec![0u8; cols.len()];
    if let Some((r, c)) = shape.forced_min() {
        // 1 sits at (r, c) only if that cell can be filled first.
        if cols[c].top != r || !Counter::placeable(&cols, &empty, &full, c) {
            return BigInt::zero();
        }
        let mut state = empty;
        state[c] += 1;
        let mut counter = Counter {
            cols: &cols,
            target: full,
            memo: HashMap::new(),
        };
        return counter.count(&mut state);
    }
    if let Some(ends) = shape.allowed_max(&cols) {
        let mut total = BigInt::zero();
        for (r, c) in ends {
            // The maximum must be a corner: nothing to its right.
            let right_blocked = cols
                .get(c + 1)
                .is_some_and(|n| r >= n.top && r < n.top + n.height);
            if right_blocked {
                continue;
            }
            let mut target = full.clone();
            target[c] -= 1;
            let mut counter = Counter {
                cols: &cols,
                target,
                memo: HashMap::new(),
            };
            total += counter.count(&mut empty.clone());
        }
        return total;
    }
    let mut counter = Counter {
        cols: &cols,
        target: full,
        memo: HashMap::new(),
    };
    counter.count(&mut empty.clone())
}

static COUNT_CACHE: Mutex<Option<HashMap<TableauShape, BigInt>>> = Mutex::new(None);

/// Number of legal fillings of `shape` (with its bar constraint).
pub fn count(shape: &TableauShape) -> BigInt {
    if let Some(v) = COUNT_CACHE
        .lock()
        .expect("cache lock")
        .get_or_insert_with(HashMap::new)
        .get(shape)
    {
        return v.clone();
    }
    let v = count_uncached(shape);
    COUNT_CACHE
        .lock()
        .expect("cache lock")
        .get_or_insert_with(HashMap::new)
        .insert(*shape, v.clone());
    v
}

pub fn syt(a: i64, i: i64, b: i64) -> BigInt {
    count(&TableauShape::syt(a, i, b))
}

/// Fillings whose maximum sits at the bottom of column 0 or of column `i`.
pub fn bsyt(a: i64, i: i64, b: i64) -> BigInt {
    count(&TableauShape::syt(a, i, b).barred())
}

pub fn skyt(a: i64, i: i64, b: i64) -> BigInt {
    count(&TableauShape::skyt(a, i, b))
}

/// Fillings with 1 at the top of the left-most column.
pub fn bskyt(a: i64, i: i64, b: i64) -> BigInt {
    count(&TableauShape::skyt(a, i, b).barred())
}

/// A filling: `cells[v - 1]` holds the value `v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Filling {
    pub cells: Vec<(usize, usize)>,
}

impl Filling {
    pub fn value_at(&self, cell: (usize, usize)) -> Option<usize> {
        self.cells.iter().position(|c| *c == cell).map(|p| p + 1)
    }

    /// Rows increase left to right and columns top to bottom, every cell used once.
    pub fn is_legal(&self, shape: &TableauShape) -> bool {
        let cells = shape.cells();
        if cells.len() != self.cells.len() {
            return false;
        }
        let values: HashMap<(usize, usize), usize> = self
            .cells
            .iter()
            .enumerate()
            .map(|(v, c)| (*c, v + 1))
            .collect();
        if values.len() != cells.len() || cells.iter().any(|c| !values.contains_key(c)) {
            return false;
        }
        cells.iter().all(|&(r, c)| {
            let v = values[&(r, c)];
            let above_ok = r == 0 || values.get(&(r - 1, c)).is_none_or(|&u| u < v);
            let left_ok = c == 0 || values.get(&(r, c - 1)).is_none_or(|&u| u < v);
            above_ok && left_ok
        })
    }
}

/// Depth-first stream of legal fillings.
pub struct Fillings {
    cols: Vec<Column>,
    full: Vec<u8>,
    total: usize,
    forced_min: Option<(usize, usize)>,
    allowed_max: Option<Vec<(usize, usize)>>,
    state: Vec<u8>,
    path: Vec<usize>,
    next: Vec<usize>,
    exhausted: bool,
}

impl Fillings {
    fn cell_of(&self, c: usize) -> (usize, usize) {
        (self.cols[c].top + self.state[c] as usize, c)
    }

    fn allowed(&self, depth: usize, c: usize) -> bool {
        if !Counter::placeable(&self.cols, &self.state, &self.full, c) {
            return false;
        }
        let cell = self.cell_of(c);
        if depth == 0 {
            if let Some(m) = self.forced_min {
                if cell != m {
                    return false;
                }
            }
        }
        if depth + 1 == self.total {
            if let Some(ends) = &self.allowed_max {
                if !ends.contains(&cell) {
                    return false;
                }
            }
        }
        true
    }
}

impl Iterator for Fillings {
    type Item = Filling;

    fn next(&mut self) -> Option<Filling> {
        if self.exhausted {
            return None;
        }
        loop {
            let depth = self.path.len();
            if depth == self.total {
                let mut state = vec![0u8; self.cols.len()];
                let cells = self
                    .path
                    .iter()
                    .map(|&c| {
                        let cell = (self.cols[c].top + state[c] as usize, c);
                        state[c] += 1;
                        cell
                    })
                    .collect();
                if !self.backtrack() {
                    self.exhausted = true;
                }
                return Some(Filling { cells });
            }
            let start = self.next[depth];
            match (start..self.cols.len()).find(|&c| self.allowed(depth, c)) {
                Some(c) => {
                    self.next[depth] = c + 1;
                    self.state[c] += 1;
                    self.path.push(c);
                    self.next[depth + 1] = 0;
                }
                None => {
                    if !self.backtrack() {
                        self.exhausted = true;
                        return None;
                    }
                }
            }
        }
    }
}

impl Fillings {
    /// Undo the last placement; false once the search tree is exhausted.
    fn backtrack(&mut self) -> bool {
        match self.path.pop() {
            Some(c) => {
                self.state[c] -= 1;
                true
            }
            None => false,
        }
    }
}

/// Stream every legal filling of `shape`; refuses shapes above [`ENUMERATION_CAP`] cells.
pub fn enumerate_fillings(shape: &TableauShape) -> Result<Fillings> {
    let cells = shape.cell_count();
    if cells > ENUMERATION_CAP {
        return Err(Error::ShapeTooLarge {
            cells,
            cap: ENUMERATION_CAP,
        });
    }
    let cols = shape.columns().unwrap_or_default();
    let full: Vec<u8> = cols.iter().map(|c| c.height as u8).collect();
    let allowed_max = if cols.is_empty() {
        None
    } else {
        shape.allowed_max(&cols)
    };
    let forced_min = shape.forced_min();
    // With no diagram there is nothing to fill, and not even the empty filling counts.
    let exhausted = shape.columns().is_none();
    Ok(Fillings {
        state: vec![0; cols.len()],
        next: vec![0; cells + 1],
        path: Vec::with_capacity(cells),
        total: cells,
        cols,
        full,
        forced_min,
        allowed_max,
        exhausted,
    })
}
