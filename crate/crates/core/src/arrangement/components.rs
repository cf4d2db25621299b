use std::collections::HashMap;

use super::{Arrangement, Cell};
use crate::geom::Point;

/// A set of arrangement cells.
#[derive(Clone, Debug, Default, PartialEq, Eq, serde::Serialize)]
pub struct CellSet {
    pub faces: Vec<usize>,
    pub edges: Vec<usize>,
    pub vertices: Vec<usize>,
}

impl CellSet {
    pub fn from_cells(cells: impl IntoIterator<Item = Cell>) -> CellSet {
        let mut s = CellSet::default();
        for c in cells {
            match c {
                Cell::Face(f) => s.faces.push(f),
                Cell::Edge(e) => s.edges.push(e),
                Cell::Vertex(v) => s.vertices.push(v),
            }
        }
        s.faces.sort_unstable();
        s.edges.sort_unstable();
        s.vertices.sort_unstable();
        s
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        let f = self.faces.iter().map(|&f| Cell::Face(f));
        let e = self.edges.iter().map(|&e| Cell::Edge(e));
        let v = self.vertices.iter().map(|&v| Cell::Vertex(v));
        f.chain(e).chain(v)
    }

    pub fn len(&self) -> usize {
        self.faces.len() + self.edges.len() + self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Components {
    pub count: usize,
    /// One point per component, in order of each component's first cell.
    pub witnesses: Vec<Point>,
    /// Component index of every selected cell, in [`CellSet::cells`] order.
    pub labels: Vec<usize>,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}

/// Connected components of the union of the selected closed cells.
///
/// Two selected cells are joined when one lies in the closure of the other:
/// face and bounding edge, edge and endpoint, face and corner vertex.
pub fn components_of(arr: &Arrangement, selected: &CellSet) -> Components {
    let cells: Vec<Cell> = selected.cells().filter(|&c| arr.is_cell(c)).collect();
    let index: HashMap<Cell, usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut parent: Vec<usize> = (0..cells.len()).collect();
    let he = arr.half_edges();
    for (i, &c) in cells.iter().enumerate() {
        match c {
            Cell::Edge(e) => {
                for h in [2 * e, 2 * e + 1] {
                    for other in [Cell::Face(he[h].face), Cell::Vertex(he[h].target)] {
                        if let Some(&j) = index.get(&other) {
                            union(&mut parent, i, j);
                        }
                    }
                }
            }
            Cell::Vertex(v) => {
                for h in arr.outgoing(v) {
                    if let Some(&j) = index.get(&Cell::Face(he[h].face)) {
                        union(&mut parent, i, j);
                    }
                }
            }
            Cell::Face(_) => {}
        }
    }
    let mut comp_of_root: HashMap<usize, usize> = HashMap::new();
    let mut witnesses = Vec::new();
    let mut labels = Vec::with_capacity(cells.len());
    for (i, &c) in cells.iter().enumerate() {
        let r = find(&mut parent, i);
        let next = comp_of_root.len();
        let k = *comp_of_root.entry(r).or_insert_with(|| {
            witnesses.push(arr.cell_point(c));
            next
        });
        labels.push(k);
    }
    Components {
        count: witnesses.len(),
        witnesses,
        labels,
    }
}
