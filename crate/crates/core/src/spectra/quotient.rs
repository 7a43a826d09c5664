use crate::bitset::VertexSet;
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::poly::IntPolynomial;
use crate::spectra::charpoly::{char_poly, matrix_char_poly};

/// Quotient matrix of an equitable partition.
///
/// `entries[i][j]` is the number of neighbours that any vertex of cell `i`
/// has in cell `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMatrix {
    pub order: usize,
    pub entries: Vec<Vec<u64>>,
    /// Cell index of every vertex.
    pub partition: Vec<usize>,
    /// `det(xI - Q)`.
    pub char_poly: IntPolynomial,
    /// `char_poly(G) / char_poly(Q)`, exact.
    pub cofactor: IntPolynomial,
}

/// Checks that `partition` (cell index per vertex, cells numbered densely
/// from 0) is equitable and returns its quotient matrix.
pub fn quotient_matrix(g: &Graph, partition: &[usize]) -> Result<QuotientMatrix> {
    let n = g.order();
    if partition.len() != n {
        return invalid(format!(
            "partition assigns {} vertices but the graph has {n}",
            partition.len()
        ));
    }
    let order = partition.iter().max().map_or(0, |&c| c + 1);
    let mut cells = vec![VertexSet::EMPTY; order];
    for (v, &c) in partition.iter().enumerate() {
        cells[c].insert(v);
    }
    if let Some(c) = cells.iter().position(|m| m.is_empty()) {
        return invalid(format!("cell {c} is empty"));
    }
    let mut entries = vec![vec![0u64; order]; order];
    for (i, &cell) in cells.iter().enumerate() {
        let rep = cell.trailing_zeros() as usize;
        for (j, &other) in cells.iter().enumerate() {
            let want = (g.row(rep) & other).count_ones();
            for v in crate::graph::ones(cell) {
                if (g.row(v) & other).count_ones() != want {
                    return Err(Error::NotEquitable { vertex: v, cell: j });
                }
            }
            entries[i][j] = want as u64;
        }
    }
    let matrix: Vec<Vec<i64>> = entries
        .iter()
        .map(|r| r.iter().map(|&e| e as i64).collect())
        .collect();
    let q_poly = matrix_char_poly(&matrix);
    let cofactor = char_poly(g)
        .exact_div(&q_poly)
        .expect("the quotient polynomial of an equitable partition divides the graph's");
    Ok(QuotientMatrix {
        order,
        entries,
        partition: partition.to_vec(),
        char_poly: q_poly,
        cofactor,
    })
}
