//! Signed graphs of ASMs, connectivity and block decomposition.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::model::{validate, Asm, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphMode {
    /// Vertices `0..n` are rows, `n..2n` are columns.
    Bipartite,
    /// Vertices `0..n`; a nonzero diagonal entry is a loop.
    Loopy,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignedEdge {
    pub u: usize,
    pub v: usize,
    pub sign: i8,
}

impl SignedEdge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedEdgeList {
    pub mode: GraphMode,
    pub vertices: usize,
    pub edges: Vec<SignedEdge>,
}

impl SignedEdgeList {
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn negative_count(&self) -> usize {
        self.edges.iter().filter(|e| e.sign < 0).count()
    }

    pub fn loops(&self) -> impl Iterator<Item = &SignedEdge> {
        self.edges.iter().filter(|e| e.is_loop())
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices];
        for e in self.edges.iter().filter(|e| !e.is_loop()) {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        adj
    }

    /// Component label of every vertex, labels in order of first vertex.
    pub fn component_labels(&self) -> Vec<usize> {
        let adj = self.adjacency();
        let mut label = vec![usize::MAX; self.vertices];
        let mut next = 0;
        for s in 0..self.vertices {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = next;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in &adj[x] {
                    if label[y] == usize::MAX {
                        label[y] = next;
                        queue.push_back(y);
                    }
                }
            }
            next += 1;
        }
        label
    }

    pub fn component_count(&self) -> usize {
        self.component_labels().iter().max().map_or(0, |m| m + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Number of independent cycles, loops included: `E - V + c`.
    pub fn cycle_rank(&self) -> usize {
        self.edges.len() + self.component_count() - self.vertices
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.cycle_rank() == 0
    }

    /// Length of the only cycle of a connected unicyclic loop-free graph.
    pub fn unicyclic_cycle_length(&self) -> Option<usize> {
        if !self.is_connected() || self.cycle_rank() != 1 || self.loops().next().is_some() {
            return None;
        }
        let adj = self.adjacency();
        let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
        let mut alive = vec![true; self.vertices];
        let mut leaves: Vec<usize> = (0..self.vertices).filter(|&v| degree[v] <= 1).collect();
        while let Some(v) = leaves.pop() {
            if !alive[v] {
                continue;
            }
            alive[v] = false;
            for &w in &adj[v] {
                if alive[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        leaves.push(w);
                    }
                }
            }
        }
        Some(alive.iter().filter(|&&x| x).count())
    }
}

/// `BG(A)`: one signed edge per nonzero between its row and column vertex.
pub fn bipartite_graph(a: &Asm) -> SignedEdgeList {
    let n = a.n();
    SignedEdgeList {
        mode: GraphMode::Bipartite,
        vertices: 2 * n,
        edges: a
            .grid()
            .nonzeros()
            .map(|(i, j, sign)| SignedEdge { u: i, v: n + j, sign })
            .collect(),
    }
}

/// The signed graph of a symmetric ASM: edge `{i, j}` for each nonzero
/// above the diagonal and a signed loop for each nonzero diagonal entry.
pub fn signed_graph(a: &Asm) -> Result<SignedEdgeList> {
    if !a.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    Ok(SignedEdgeList {
        mode: GraphMode::Loopy,
        vertices: a.n(),
        edges: a
            .grid()
            .nonzeros()
            .filter(|&(i, j, _)| i <= j)
            .map(|(u, v, sign)| SignedEdge { u, v, sign })
            .collect(),
    })
}

pub fn is_connected(a: &Asm) -> bool {
    bipartite_graph(a).is_connected()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub asm: Asm,
}

/// `P A Q = A_1 ⊕ ... ⊕ A_h` with one block per component of `BG(A)`.
///
/// Witnesses list original indices in their new order: row `i` of `P A Q`
/// is row `row_perm.apply(i)` of `A`, likewise for columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentDecomposition {
    pub blocks: Vec<Block>,
    pub row_perm: Permutation,
    pub col_perm: Permutation,
}

impl ComponentDecomposition {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// The block-diagonal matrix `A_1 ⊕ ... ⊕ A_h`.
    pub fn block_diagonal(&self) -> Asm {
        let mut blocks = self.blocks.iter().map(|b| b.asm.clone());
        let first = blocks.next().expect("at least one block");
        blocks.fold(first, |acc, b| acc.direct_sum(&b))
    }
}

/// Blocks are ordered by their smallest row; indices inside a block keep
/// their original relative order.
pub fn components(a: &Asm) -> ComponentDecomposition {
    let n = a.n();
    let labels = bipartite_graph(a).component_labels();
    // Row 0 has the smallest label, and labels are assigned in vertex order,
    // so ordering by label orders blocks by their smallest row.
    let h = labels[..n].iter().max().map_or(0, |m| m + 1);
    let mut blocks = Vec::with_capacity(h);
    for c in 0..h {
        let rows: Vec<usize> = (0..n).filter(|&i| labels[i] == c).collect();
        let cols: Vec<usize> = (0..n).filter(|&j| labels[n + j] == c).collect();
        let asm = validate(a.grid().submatrix(&rows, &cols)).expect("component block is an ASM");
        blocks.push(Block { rows, cols, asm });
    }
    let row_perm =
        Permutation::new(blocks.iter().flat_map(|b| b.rows.clone()).collect()).expect("row sets partition the rows");
    let col_perm = Permutation::new(blocks.iter().flat_map(|b| b.cols.clone()).collect())
        .expect("column sets partition the columns");
    ComponentDecomposition {
        blocks,
        row_perm,
        col_perm,
    }
}
