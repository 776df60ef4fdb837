//! The triangular table of a GT polytope and its vertices.

use crate::error::{Error, Result};
use crate::signature::Signature;

use super::rank::rank;
use super::OracleLimits;

/// A position in the table: an entry of the fixed top row or a variable
/// cell (index into the cell scan order).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Node {
    Top(usize),
    Cell(usize),
}

/// `lower <= upper` between two positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub lower: Node,
    pub upper: Node,
}

/// Interlacing system for the top row `1^{i_1} ... k^{i_k}`.
///
/// Cells are scanned row by row: row `r = 1..s-1` holds `s - r` cells, and
/// cell `(r, c)` sits between `(r-1, c)` and `(r-1, c+1)` of the row above
/// (row 0 being the top).
#[derive(Clone, Debug)]
pub struct TriangularTable {
    top: Vec<i64>,
    row_starts: Vec<usize>,
    constraints: Vec<Constraint>,
}

impl TriangularTable {
    pub fn new(sig: &Signature) -> Self {
        let top = sig.top_row();
        let s = top.len();
        let mut row_starts = Vec::with_capacity(s);
        let mut next = 0;
        for r in 1..s {
            row_starts.push(next);
            next += s - r;
        }
        let mut table = TriangularTable {
            top,
            row_starts,
            constraints: Vec::new(),
        };
        let mut constraints = Vec::with_capacity(s * s.saturating_sub(1));
        for r in 1..s {
            for c in 0..s - r {
                let cell = Node::Cell(table.cell_index(r, c));
                constraints.push(Constraint {
                    lower: table.node(r - 1, c),
                    upper: cell,
                });
                constraints.push(Constraint {
                    lower: cell,
                    upper: table.node(r - 1, c + 1),
                });
            }
        }
        table.constraints = constraints;
        table
    }

    pub fn s(&self) -> usize {
        self.top.len()
    }

    pub fn top(&self) -> &[i64] {
        &self.top
    }

    pub fn num_cells(&self) -> usize {
        let s = self.s();
        s * s.saturating_sub(1) / 2
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    /// Index of cell `(r, c)` with `r >= 1`.
    pub fn cell_index(&self, r: usize, c: usize) -> usize {
        debug_assert!(r >= 1 && c < self.s() - r);
        self.row_starts[r - 1] + c
    }

    fn node(&self, r: usize, c: usize) -> Node {
        if r == 0 {
            Node::Top(c)
        } else {
            Node::Cell(self.cell_index(r, c))
        }
    }

    /// Value at a node for the cell assignment `point`.
    pub fn value(&self, point: &[i64], node: Node) -> i64 {
        match node {
            Node::Top(i) => self.top[i],
            Node::Cell(i) => point[i],
        }
    }

    pub fn is_feasible(&self, point: &[i64]) -> bool {
        self.constraints
            .iter()
            .all(|c| self.value(point, c.lower) <= self.value(point, c.upper))
    }

    pub fn is_tight(&self, point: &[i64], c: &Constraint) -> bool {
        self.value(point, c.lower) == self.value(point, c.upper)
    }

    /// Vertex test: in the graph whose edges are the tight constraints,
    /// every component of cells must reach the top row. A component that
    /// does not could be shifted up and down inside the polytope.
    pub fn is_vertex(&self, point: &[i64]) -> bool {
        let s = self.s();
        let n = s + self.num_cells();
        let id = |node: Node| match node {
            Node::Top(i) => i,
            Node::Cell(i) => s + i,
        };
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for c in &self.constraints {
            if self.is_tight(point, c) {
                let a = find(&mut parent, id(c.lower));
                let b = find(&mut parent, id(c.upper));
                parent[a] = b;
            }
        }
        let mut anchored = vec![false; n];
        for i in 0..s {
            let root = find(&mut parent, i);
            anchored[root] = true;
        }
        (s..n).all(|x| {
            let root = find(&mut parent, x);
            anchored[root]
        })
    }

    /// Vertex test by definition: the tight constraints have full rank.
    pub fn is_vertex_by_rank(&self, point: &[i64]) -> bool {
        let n = self.num_cells();
        let normals: Vec<Vec<i64>> = self
            .constraints
            .iter()
            .filter(|c| self.is_tight(point, c))
            .map(|c| {
                let mut row = vec![0i64; n];
                if let Node::Cell(i) = c.upper {
                    row[i] += 1;
                }
                if let Node::Cell(i) = c.lower {
                    row[i] -= 1;
                }
                row
            })
            .collect();
        rank(&normals) == n
    }

    /// All vertices, in lexicographic order of the cell scan.
    ///
    /// Vertices are integral with entries among the top values, so it
    /// suffices to search integer assignments cell by cell, each cell
    /// limited to the interval spanned by its two upper neighbours.
    pub fn enumerate_vertices(&self, limits: &OracleLimits) -> Result<Vec<Vec<i64>>> {
        if self.s() > limits.max_s {
            return Err(Error::ResourceLimit(format!(
                "oracle limited to s <= {}, got s = {}",
                limits.max_s,
                self.s()
            )));
        }
        let mut point = vec![0i64; self.num_cells()];
        let mut out = Vec::new();
        let mut visited: u64 = 0;
        self.search(0, &mut point, &mut out, &mut visited, limits)?;
        Ok(out)
    }

    fn search(
        &self,
        cell: usize,
        point: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
        visited: &mut u64,
        limits: &OracleLimits,
    ) -> Result<()> {
        if cell == point.len() {
            *visited += 1;
            if *visited > limits.max_candidates {
                return Err(Error::ResourceLimit(format!(
                    "more than {} candidate points",
                    limits.max_candidates
                )));
            }
            debug_assert!(self.is_feasible(point));
            let vertex = self.is_vertex(point);
            debug_assert_eq!(vertex, self.is_vertex_by_rank(point));
            if vertex {
                out.push(point.clone());
            }
            return Ok(());
        }
        let (r, c) = self.position(cell);
        let lo = self.value(point, self.node(r - 1, c));
        let hi = self.value(point, self.node(r - 1, c + 1));
        for v in lo..=hi {
            point[cell] = v;
            self.search(cell + 1, point, out, visited, limits)?;
        }
        Ok(())
    }

    /// `(r, c)` of a cell index.
    pub fn position(&self, cell: usize) -> (usize, usize) {
        let r = self.row_starts.partition_point(|&start| start <= cell);
        (r, cell - self.row_starts[r - 1])
    }
}
