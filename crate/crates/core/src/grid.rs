//! Grid diagrams: one X and one O marker per row and per column, the
//! horizontal segment of each row joining its two markers, the vertical
//! segment of each column joining its two, verticals crossing over.
//!
//! All indices are 1-based with row 1 on top and column 1 on the left.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which marker of a row or column an operation addresses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Marker {
    X,
    O,
}

/// Local configuration of a stabilization: the corner of the inserted
/// 2x2 block that receives the new opposite-type marker.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StabilizeCorner {
    NW,
    NE,
    SW,
    SE,
}

impl StabilizeCorner {
    pub const ALL: [StabilizeCorner; 4] = [
        StabilizeCorner::NW,
        StabilizeCorner::NE,
        StabilizeCorner::SW,
        StabilizeCorner::SE,
    ];

    fn is_north(self) -> bool {
        matches!(self, StabilizeCorner::NW | StabilizeCorner::NE)
    }

    fn is_west(self) -> bool {
        matches!(self, StabilizeCorner::NW | StabilizeCorner::SW)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Horizontal,
    Vertical,
}

/// One segment of a grid diagram. A horizontal edge lives in a row and its
/// span records the X and O columns; a vertical edge lives in a column and
/// its span records the X and O rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridEdge {
    pub orientation: Orientation,
    pub index: usize,
    /// `(x_position, o_position)` along the edge.
    pub span: (usize, usize),
}

impl GridEdge {
    pub fn lo(&self) -> usize {
        self.span.0.min(self.span.1)
    }

    pub fn hi(&self) -> usize {
        self.span.0.max(self.span.1)
    }
}

/// A closed cycle of edges, alternating horizontal and vertical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub edges: Vec<GridEdge>,
}

impl Component {
    /// A rectangle is exactly two horizontal and two vertical edges.
    pub fn is_rectangular(&self) -> bool {
        self.edges.len() == 4
    }
}

#[derive(Serialize, Deserialize)]
struct GridJson {
    size: usize,
    x: Vec<usize>,
    o: Vec<usize>,
}

/// A grid diagram of size n: `x_col[r]` and `o_col[r]` are the marker
/// columns of row r.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridDiagram {
    size: usize,
    x_col: Vec<usize>,
    o_col: Vec<usize>,
}

fn check_permutation(field: &'static str, size: usize, values: &[usize]) -> Result<()> {
    if values.len() != size {
        return Err(Error::GridSizeMismatch {
            field,
            expected: size,
            found: values.len(),
        });
    }
    let mut seen = vec![false; size + 1];
    for (i, &v) in values.iter().enumerate() {
        if v == 0 || v > size || seen[v] {
            return Err(Error::GridNotPermutation {
                field,
                size,
                value: v,
                row: i + 1,
            });
        }
        seen[v] = true;
    }
    Ok(())
}

impl GridDiagram {
    pub fn new(x_col: Vec<usize>, o_col: Vec<usize>) -> Result<GridDiagram> {
        let size = x_col.len();
        if size == 0 {
            return Err(Error::GridEmpty);
        }
        let g = GridDiagram { size, x_col, o_col };
        g.validate()?;
        Ok(g)
    }

    /// Checks both permutation invariants and the per-row marker clash,
    /// reporting the first violation found.
    pub fn validate(&self) -> Result<()> {
        if self.size == 0 {
            return Err(Error::GridEmpty);
        }
        check_permutation("x", self.size, &self.x_col)?;
        check_permutation("o", self.size, &self.o_col)?;
        for r in 1..=self.size {
            if self.x_col[r - 1] == self.o_col[r - 1] {
                return Err(Error::GridMarkerClash {
                    row: r,
                    col: self.x_col[r - 1],
                });
            }
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn x_col(&self, row: usize) -> usize {
        self.x_col[row - 1]
    }

    pub fn o_col(&self, row: usize) -> usize {
        self.o_col[row - 1]
    }

    /// Row of the X marker in a column.
    pub fn x_row(&self, col: usize) -> usize {
        self.x_col.iter().position(|&c| c == col).unwrap() + 1
    }

    /// Row of the O marker in a column.
    pub fn o_row(&self, col: usize) -> usize {
        self.o_col.iter().position(|&c| c == col).unwrap() + 1
    }

    pub fn horizontal_edge(&self, row: usize) -> GridEdge {
        GridEdge {
            orientation: Orientation::Horizontal,
            index: row,
            span: (self.x_col(row), self.o_col(row)),
        }
    }

    pub fn vertical_edge(&self, col: usize) -> GridEdge {
        GridEdge {
            orientation: Orientation::Vertical,
            index: col,
            span: (self.x_row(col), self.o_row(col)),
        }
    }

    pub fn edges(&self) -> Vec<GridEdge> {
        (1..=self.size)
            .map(|r| self.horizontal_edge(r))
            .chain((1..=self.size).map(|c| self.vertical_edge(c)))
            .collect()
    }

    /// Splits the diagram into closed components. Components are ordered by
    /// their topmost row; each starts at its topmost horizontal edge and
    /// proceeds through the vertical at that edge's left endpoint.
    pub fn trace_components(&self) -> Vec<Component> {
        let n = self.size;
        let mut row_seen = vec![false; n + 1];
        let mut components = Vec::new();
        for start_row in 1..=n {
            if row_seen[start_row] {
                continue;
            }
            let mut edges = Vec::new();
            let start = self.horizontal_edge(start_row);
            // Walk markers: (row, col) alternates along horizontals and
            // verticals until the start marker recurs.
            let start_marker = (start_row, start.lo());
            let mut at = start_marker;
            loop {
                let (row, col) = at;
                row_seen[row] = true;
                edges.push(self.horizontal_edge(row));
                // Other end of this row's horizontal edge.
                let other_col = if self.x_col(row) == col {
                    self.o_col(row)
                } else {
                    self.x_col(row)
                };
                edges.push(self.vertical_edge(other_col));
                // Other end of that column's vertical edge.
                let other_row = if self.x_row(other_col) == row {
                    self.o_row(other_col)
                } else {
                    self.x_row(other_col)
                };
                at = (other_row, other_col);
                if at.0 == start_marker.0 {
                    break;
                }
            }
            components.push(Component { edges });
        }
        components
    }

    /// Rotates rows by k: for k > 0 the top k rows wrap to the bottom.
    pub fn cyclic_permute_rows(&self, k: i64) -> GridDiagram {
        let n = self.size as i64;
        let k = k.rem_euclid(n) as usize;
        let rot = |v: &[usize]| -> Vec<usize> {
            (0..self.size)
                .map(|i| v[(i + k) % self.size])
                .collect()
        };
        GridDiagram {
            size: self.size,
            x_col: rot(&self.x_col),
            o_col: rot(&self.o_col),
        }
    }

    /// Shifts every marker column by k modulo n: for k > 0 the rightmost
    /// k columns wrap to the left.
    pub fn cyclic_permute_cols(&self, k: i64) -> GridDiagram {
        let n = self.size as i64;
        let k = k.rem_euclid(n) as usize;
        let shift = |v: &[usize]| -> Vec<usize> {
            v.iter().map(|&c| (c - 1 + k) % self.size + 1).collect()
        };
        GridDiagram {
            size: self.size,
            x_col: shift(&self.x_col),
            o_col: shift(&self.o_col),
        }
    }

    /// Replaces the addressed marker by an L-shaped detour through a fresh
    /// row and a fresh column next to it. The corner names where, within
    /// the new 2x2 block, the single opposite-type marker lands; the two
    /// same-type markers take the adjacent corners and the corner diagonal
    /// to the new marker stays empty.
    pub fn stabilize(
        &self,
        row: usize,
        marker: Marker,
        corner: StabilizeCorner,
    ) -> Result<GridDiagram> {
        let n = self.size;
        if row == 0 || row > n {
            return Err(Error::IndexOutOfRange { index: row, max: n });
        }
        let col = match marker {
            Marker::X => self.x_col(row),
            Marker::O => self.o_col(row),
        };

        // Fresh row index in the new grid; the old `row` keeps its markers
        // and shifts around it.
        let (fresh_row, old_row) = if corner.is_north() {
            (row, row + 1)
        } else {
            (row + 1, row)
        };
        let (fresh_col, old_col) = if corner.is_west() {
            (col, col + 1)
        } else {
            (col + 1, col)
        };

        let bump_col = |c: usize| if c >= fresh_col { c + 1 } else { c };
        let mut x_col: Vec<usize> = Vec::with_capacity(n + 1);
        let mut o_col: Vec<usize> = Vec::with_capacity(n + 1);
        for r in 1..=n + 1 {
            if r == fresh_row {
                // Fresh row: same-type marker under/over the old one, the
                // opposite-type marker in the fresh column.
                let (x, o) = match marker {
                    Marker::X => (old_col, fresh_col),
                    Marker::O => (fresh_col, old_col),
                };
                x_col.push(x);
                o_col.push(o);
            } else {
                let src = if r > fresh_row { r - 1 } else { r };
                let mut x = bump_col(self.x_col(src));
                let mut o = bump_col(self.o_col(src));
                if src == row {
                    // The addressed marker moves sideways into the fresh column.
                    match marker {
                        Marker::X => x = fresh_col,
                        Marker::O => o = fresh_col,
                    }
                }
                x_col.push(x);
                o_col.push(o);
            }
        }
        let _ = old_row;
        let g = GridDiagram {
            size: n + 1,
            x_col,
            o_col,
        };
        debug_assert!(g.validate().is_ok());
        Ok(g)
    }

    /// Inverse of `stabilize`: the 2x2 block anchored at (row, col) must
    /// hold exactly three markers in an L, the lone-type marker cornered by
    /// the two same-type ones. Deletes the lone marker's row and column.
    pub fn destabilize(&self, row: usize, col: usize) -> Result<GridDiagram> {
        let n = self.size;
        if row == 0 || row + 1 > n {
            return Err(Error::IndexOutOfRange { index: row, max: n.saturating_sub(1) });
        }
        if col == 0 || col + 1 > n {
            return Err(Error::IndexOutOfRange { index: col, max: n.saturating_sub(1) });
        }
        let bad = |reason: &'static str| Error::NoDestabilization { row, col, reason };

        // Collect markers inside the block.
        let mut xs = Vec::new();
        let mut os = Vec::new();
        for r in [row, row + 1] {
            for c in [col, col + 1] {
                if self.x_col(r) == c {
                    xs.push((r, c));
                }
                if self.o_col(r) == c {
                    os.push((r, c));
                }
            }
        }
        if xs.len() + os.len() != 3 {
            return Err(bad("block does not hold exactly three markers"));
        }
        let (lone, pair) = match (xs.len(), os.len()) {
            (1, 2) => (xs[0], os),
            (2, 1) => (os[0], xs),
            _ => return Err(bad("block markers are not two of one type and one of the other")),
        };
        // The same-type pair must share the lone marker's row and column.
        let row_mate = pair.iter().find(|&&(r, _)| r == lone.0);
        let col_mate = pair.iter().find(|&&(_, c)| c == lone.1);
        if row_mate.is_none() || col_mate.is_none() || pair[0] == pair[1] {
            return Err(bad("markers do not form an L around the lone marker"));
        }
        let (lone_row, lone_col) = lone;
        // Merge target: the empty corner, diagonal to the lone marker.
        let target_row = row + row + 1 - lone_row;
        let target_col = col + col + 1 - lone_col;

        let lone_is_x = xs.len() == 1;
        let drop_col = |c: usize| if c > lone_col { c - 1 } else { c };
        let mut x_col = Vec::with_capacity(n - 1);
        let mut o_col = Vec::with_capacity(n - 1);
        for r in (1..=n).filter(|&r| r != lone_row) {
            if r == target_row {
                // This row held one of the pair markers; it takes over the
                // merged position.
                let (mut x, mut o) = (self.x_col(r), self.o_col(r));
                if lone_is_x {
                    o = target_col;
                    debug_assert_eq!(drop_col(x), drop_col(self.x_col(r)));
                } else {
                    x = target_col;
                }
                x_col.push(drop_col(x));
                o_col.push(drop_col(o));
            } else {
                x_col.push(drop_col(self.x_col(r)));
                o_col.push(drop_col(self.o_col(r)));
            }
        }
        let g = GridDiagram {
            size: n - 1,
            x_col,
            o_col,
        };
        g.validate().map_err(|_| bad("deletion does not leave a valid grid"))?;
        Ok(g)
    }

    fn interval_relation_ok(a: (usize, usize), b: (usize, usize)) -> Option<bool> {
        // Some(true): nested or disjoint. Some(false): interleaving.
        // None: shared endpoint.
        let (a1, a2) = (a.0.min(a.1), a.0.max(a.1));
        let (b1, b2) = (b.0.min(b.1), b.0.max(b.1));
        if a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2 {
            return None;
        }
        let disjoint = a2 < b1 || b2 < a1;
        let nested = (a1 < b1 && b2 < a2) || (b1 < a1 && a2 < b2);
        Some(disjoint || nested)
    }

    /// Swaps rows i and i+1 when their marker-column intervals are nested
    /// or disjoint and share no endpoint.
    pub fn interchange_rows(&self, i: usize) -> Result<GridDiagram> {
        let n = self.size;
        if i == 0 || i + 1 > n {
            return Err(Error::IndexOutOfRange { index: i, max: n.saturating_sub(1) });
        }
        let a = (self.x_col(i), self.o_col(i));
        let b = (self.x_col(i + 1), self.o_col(i + 1));
        match Self::interval_relation_ok(a, b) {
            None => Err(Error::SharedEndpointRows { row: i, row_plus: i + 1 }),
            Some(false) => Err(Error::InterleavingRows { row: i, row_plus: i + 1 }),
            Some(true) => {
                let mut g = self.clone();
                g.x_col.swap(i - 1, i);
                g.o_col.swap(i - 1, i);
                Ok(g)
            }
        }
    }

    /// Swaps columns j and j+1 when their marker-row intervals are nested
    /// or disjoint and share no endpoint.
    pub fn interchange_cols(&self, j: usize) -> Result<GridDiagram> {
        let n = self.size;
        if j == 0 || j + 1 > n {
            return Err(Error::IndexOutOfRange { index: j, max: n.saturating_sub(1) });
        }
        let a = (self.x_row(j), self.o_row(j));
        let b = (self.x_row(j + 1), self.o_row(j + 1));
        match Self::interval_relation_ok(a, b) {
            None => Err(Error::SharedEndpointCols { col: j, col_plus: j + 1 }),
            Some(false) => Err(Error::InterleavingCols { col: j, col_plus: j + 1 }),
            Some(true) => {
                let swap = |c: usize| {
                    if c == j {
                        j + 1
                    } else if c == j + 1 {
                        j
                    } else {
                        c
                    }
                };
                Ok(GridDiagram {
                    size: n,
                    x_col: self.x_col.iter().map(|&c| swap(c)).collect(),
                    o_col: self.o_col.iter().map(|&c| swap(c)).collect(),
                })
            }
        }
    }

    /// Staircase diagram of the (p,q) torus link on a p+q grid: O markers
    /// on the diagonal, X markers shifted by p.
    pub fn torus(p: usize, q: usize) -> Result<GridDiagram> {
        if p < 2 || p >= q {
            return Err(Error::TorusParams { p, q });
        }
        let n = p + q;
        let o_col = (1..=n).collect();
        let x_col = (1..=n).map(|r| (r + p - 1) % n + 1).collect();
        Ok(GridDiagram { size: n, x_col, o_col })
    }

    /// Staircase unknot on an n grid (n >= 2).
    pub fn unknot(n: usize) -> Result<GridDiagram> {
        if n < 2 {
            return Err(Error::GridEmpty);
        }
        Ok(GridDiagram {
            size: n,
            x_col: (1..=n).map(|r| r % n + 1).collect(),
            o_col: (1..=n).collect(),
        })
    }

    /// The minimal Hopf-link grid: two interleaved rectangles on a 4 grid.
    pub fn hopf() -> GridDiagram {
        GridDiagram {
            size: 4,
            x_col: vec![1, 2, 3, 4],
            o_col: vec![3, 4, 1, 2],
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(&GridJson {
            size: self.size,
            x: self.x_col.clone(),
            o: self.o_col.clone(),
        })
        .expect("grid serialization cannot fail");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<GridDiagram> {
        let raw: GridJson =
            serde_json::from_str(text).map_err(|e| Error::GridJson(e.to_string()))?;
        if raw.x.len() != raw.size {
            return Err(Error::GridSizeMismatch {
                field: "x",
                expected: raw.size,
                found: raw.x.len(),
            });
        }
        if raw.o.len() != raw.size {
            return Err(Error::GridSizeMismatch {
                field: "o",
                expected: raw.size,
                found: raw.o.len(),
            });
        }
        GridDiagram::new(raw.x, raw.o)
    }
}
