//! Brute-force reference implementations over plain matrices of grade
//! units. Nothing here calls the library's algorithms; results are compared
//! against it.

#![allow(dead_code)]

use fuzzmorph::{FuzzyRelation, UniverseMapping};

pub type Matrix = Vec<Vec<u64>>;

pub fn matrix(r: &FuzzyRelation) -> Matrix {
    let n = r.size();
    (0..n)
        .map(|i| (0..n).map(|j| r.get(i, j).units()).collect())
        .collect()
}

pub fn assignment(f: &UniverseMapping) -> Vec<usize> {
    f.assignment().to_vec()
}

/// `out[y1][y2] = max { m[x1][x2] : f(x1) = y1, f(x2) = y2 }`, 0 if none.
pub fn image(m: &Matrix, f: &[usize], codomain: usize) -> Matrix {
    let mut out = vec![vec![0; codomain]; codomain];
    for (x1, row) in m.iter().enumerate() {
        for (x2, &g) in row.iter().enumerate() {
            out[f[x1]][f[x2]] = out[f[x1]][f[x2]].max(g);
        }
    }
    out
}

pub fn preimage(q: &Matrix, f: &[usize]) -> Matrix {
    let n = f.len();
    (0..n)
        .map(|i| (0..n).map(|j| q[f[i]][f[j]]).collect())
        .collect()
}

/// Same image implies same column.
pub fn pred_consistent(m: &Matrix, f: &[usize]) -> bool {
    let n = m.len();
    (0..n).all(|a| (0..n).all(|b| f[a] != f[b] || (0..n).all(|z| m[z][a] == m[z][b])))
}

/// Same image implies same row.
pub fn succ_consistent(m: &Matrix, f: &[usize]) -> bool {
    let n = m.len();
    (0..n).all(|a| (0..n).all(|b| f[a] != f[b] || m[a] == m[b]))
}

/// `m` constant on every product of kernel classes.
pub fn blockwise(m: &Matrix, f: &[usize]) -> bool {
    let n = m.len();
    for x1 in 0..n {
        for x2 in 0..n {
            for y1 in 0..n {
                for y2 in 0..n {
                    if f[x1] == f[x2] && f[y1] == f[y2] && m[x1][y1] != m[x2][y2] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub fn transitive(m: &Matrix) -> bool {
    let n = m.len();
    (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| m[x][z] >= m[x][y].min(m[y][z]))))
}

pub fn reflexive(m: &Matrix, one: u64) -> bool {
    (0..m.len()).all(|i| m[i][i] == one)
}

pub fn symmetric(m: &Matrix) -> bool {
    let n = m.len();
    (0..n).all(|i| (0..n).all(|j| m[i][j] == m[j][i]))
}

pub enum Sig {
    Pred,
    Succ,
    Both,
}

/// Blocks of elements with equal signatures, each block sorted, blocks
/// ordered by first member.
pub fn signature_blocks(m: &Matrix, sig: Sig) -> Vec<Vec<usize>> {
    let n = m.len();
    let same = |a: usize, b: usize| {
        let cols = (0..n).all(|z| m[z][a] == m[z][b]);
        let rows = m[a] == m[b];
        match sig {
            Sig::Pred => cols,
            Sig::Succ => rows,
            Sig::Both => cols && rows,
        }
    };
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        match blocks.iter_mut().find(|b| same(b[0], x)) {
            Some(block) => block.push(x),
            None => blocks.push(vec![x]),
        }
    }
    blocks
}
