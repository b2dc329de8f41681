use std::io::{Read, Write};
use std::path::Path;

use rayon::prelude::*;

use crate::error::{PvgError, Result};

/// Undirected simple graph as a dense symmetric bit matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Adjacency {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl std::fmt::Debug for Adjacency {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Adjacency").field("n", &self.n).field("edges", &self.edge_count()).finish()
    }
}

impl Adjacency {
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64);
        Self { n, words, bits: vec![0; n * words] }
    }

    pub fn complete(n: usize) -> Self {
        Self::from_fn(n, |_, _| true)
    }

    pub fn path(n: usize) -> Self {
        Self::from_fn(n, |i, j| j == i + 1)
    }

    /// Builds the graph from a predicate evaluated once per pair `i < j`.
    /// Rows are filled in parallel.
    pub fn from_fn<F>(n: usize, edge: F) -> Self
    where
        F: Fn(usize, usize) -> bool + Sync,
    {
        let mut adj = Self::empty(n);
        if n == 0 {
            return adj;
        }
        let words = adj.words;
        adj.bits.par_chunks_mut(words).enumerate().for_each(|(i, row)| {
            for j in 0..n {
                if j != i && edge(i.min(j), i.max(j)) {
                    row[j / 64] |= 1 << (j % 64);
                }
            }
        });
        adj
    }

    /// Builds the graph from, for each `i`, the neighbours `j > i`.
    pub fn from_upper_lists(n: usize, lists: &[Vec<usize>]) -> Result<Self> {
        let mut adj = Self::empty(n);
        for (i, list) in lists.iter().enumerate() {
            for &j in list {
                adj.add_edge(i, j)?;
            }
        }
        Ok(adj)
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adj = Self::empty(n);
        for (i, j) in edges {
            adj.add_edge(i, j)?;
        }
        Ok(adj)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, i: usize, j: usize) -> Result<()> {
        if i >= self.n || j >= self.n || i == j {
            return Err(PvgError::IndexOutOfRange { i, j, n: self.n });
        }
        self.bits[i * self.words + j / 64] |= 1 << (j % 64);
        self.bits[j * self.words + i / 64] |= 1 << (i % 64);
        Ok(())
    }

    pub fn remove_edge(&mut self, i: usize, j: usize) {
        self.bits[i * self.words + j / 64] &= !(1 << (j % 64));
        self.bits[j * self.words + i / 64] &= !(1 << (i % 64));
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    /// Bit row of node `i`; bit `j` of word `j / 64` marks the edge `(i, j)`.
    #[inline]
    pub fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    pub fn words_per_row(&self) -> usize {
        self.words
    }

    pub fn degree(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(i))
    }

    pub fn edge_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n).flat_map(|i| self.neighbors(i).filter(move |&j| j > i).map(move |j| (i, j))).collect()
    }

    /// True when `self`'s edges are a subset of `other`'s.
    pub fn is_subgraph_of(&self, other: &Adjacency) -> bool {
        self.n == other.n && self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    /// Relabels nodes: node `i` of `self` becomes node `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let mut out = Self::empty(self.n);
        for (i, j) in self.edges() {
            out.add_edge(perm[i], perm[j])?;
        }
        Ok(out)
    }

    /// Edge list CSV `i,j` with `i < j`.
    pub fn write_edge_list<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "i,j")?;
        for (i, j) in self.edges() {
            writeln!(out, "{i},{j}")?;
        }
        Ok(())
    }

    pub fn save_edge_list(&self, path: &Path) -> Result<()> {
        let mut out = std::io::BufWriter::new(std::fs::File::create(path)?);
        self.write_edge_list(&mut out)?;
        out.flush()?;
        Ok(())
    }

    /// Reads an `i,j` edge list. The node count is `n` when given, otherwise
    /// one past the largest index seen.
    pub fn read_edge_list<R: Read>(input: R, n: Option<usize>) -> Result<Self> {
        let mut rdr =
            csv::ReaderBuilder::new().has_headers(false).trim(csv::Trim::All).comment(Some(b'#')).from_reader(input);
        let mut edges = Vec::new();
        for (k, record) in rdr.records().enumerate() {
            let record = record?;
            let line = record.position().map_or(k as u64 + 1, |p| p.line());
            let parse = |s: &str| s.parse::<usize>();
            match (record.get(0).map(parse), record.get(1).map(parse), record.len()) {
                (Some(Ok(i)), Some(Ok(j)), 2) => edges.push((i, j, line)),
                _ if k == 0 => continue,
                _ => {
                    return Err(PvgError::Parse {
                        line,
                        message: format!("expected `i,j` node indices, got {:?}", record.as_slice()),
                    })
                }
            }
        }
        let n = n.unwrap_or_else(|| edges.iter().map(|&(i, j, _)| i.max(j) + 1).max().unwrap_or(0));
        let mut adj = Self::empty(n);
        for (i, j, line) in edges {
            adj.add_edge(i, j).map_err(|e| PvgError::Parse { line, message: e.to_string() })?;
        }
        Ok(adj)
    }

    pub fn load_edge_list(path: &Path, n: Option<usize>) -> Result<Self> {
        Self::read_edge_list(std::fs::File::open(path)?, n)
    }
}

/// Indices of set bits in a bit row.
pub(crate) fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(w, &word)| {
        let mut rest = word;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let b = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(w * 64 + b)
        })
    })
}

/// Degree of every node.
pub fn degree_sequence(adj: &Adjacency) -> Vec<usize> {
    (0..adj.n()).map(|i| adj.degree(i)).collect()
}
