//! Augmented simplicial chain complex with in-place shrinking.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use super::matrix::IntegerMatrix;
use super::snf::smith_normal_form;
use super::{Coefficients, DimHomology, HomologySummary};
use crate::simplicial::SimplicialComplex;

/// Cells of the augmented chain complex of a simplicial complex, indexed
/// level by level starting with the empty face. A cell's boundary list is
/// ordered by the omitted vertex, so the incidence sign of entry `j` is
/// `(-1)^j`.
#[derive(Clone, Debug)]
pub struct BoundaryComplex {
    level_start: Vec<usize>,
    bd_start: Vec<usize>,
    bd: Vec<u32>,
    cb_start: Vec<usize>,
    cb: Vec<u32>,
    alive: Vec<bool>,
    live_faces: Vec<u32>,
    live_cofaces: Vec<u32>,
}

impl BoundaryComplex {
    pub fn from_complex(c: &SimplicialComplex) -> Self {
        let levels = c.f_vector();
        let mut level_start = Vec::with_capacity(levels.len() + 1);
        let mut total = 0;
        for &n in &levels {
            level_start.push(total);
            total += n;
        }
        level_start.push(total);
        let mut bd_start = Vec::with_capacity(total + 1);
        let mut bd: Vec<u32> = Vec::new();
        bd_start.push(0);
        for k in 0..levels.len() {
            let d = k as isize - 1;
            for face in c.faces(d) {
                let mut sub: Vec<u32> = Vec::with_capacity(face.len().saturating_sub(1));
                for skip in 0..face.len() {
                    sub.clear();
                    sub.extend(face.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v));
                    let local = c.face_index(&sub).expect("closed under subsets");
                    bd.push((level_start[k - 1] + local) as u32);
                }
                bd_start.push(bd.len());
            }
        }
        let mut cb_count = vec![0usize; total + 1];
        for &f in &bd {
            cb_count[f as usize + 1] += 1;
        }
        for i in 0..total {
            cb_count[i + 1] += cb_count[i];
        }
        let cb_start = cb_count.clone();
        let mut fill = cb_count;
        let mut cb = vec![0u32; bd.len()];
        for cell in 0..total {
            for &f in &bd[bd_start[cell]..bd_start[cell + 1]] {
                cb[fill[f as usize]] = cell as u32;
                fill[f as usize] += 1;
            }
        }
        let live_faces = (0..total).map(|i| (bd_start[i + 1] - bd_start[i]) as u32).collect();
        let live_cofaces = (0..total).map(|i| (cb_start[i + 1] - cb_start[i]) as u32).collect();
        BoundaryComplex { level_start, bd_start, bd, cb_start, cb, alive: vec![true; total], live_faces, live_cofaces }
    }

    pub fn cell_count(&self) -> usize {
        self.alive.len()
    }

    pub fn live_cell_count(&self) -> usize {
        self.alive.iter().filter(|&&a| a).count()
    }

    fn boundary(&self, cell: usize) -> &[u32] {
        &self.bd[self.bd_start[cell]..self.bd_start[cell + 1]]
    }

    fn coboundary(&self, cell: usize) -> &[u32] {
        &self.cb[self.cb_start[cell]..self.cb_start[cell + 1]]
    }

    fn kill(&mut self, cell: usize, queue: &mut VecDeque<u32>) {
        self.alive[cell] = false;
        for i in self.bd_start[cell]..self.bd_start[cell + 1] {
            let f = self.bd[i] as usize;
            if self.alive[f] {
                self.live_cofaces[f] -= 1;
                queue.push_back(f as u32);
            }
        }
        for i in self.cb_start[cell]..self.cb_start[cell + 1] {
            let g = self.cb[i] as usize;
            if self.alive[g] {
                self.live_faces[g] -= 1;
                queue.push_back(g as u32);
            }
        }
    }

    /// Removes cell pairs joined by a unit incidence while either cell has no
    /// other live neighbour on that side (free faces and coreductions).
    pub fn reduce(&mut self) {
        let mut queue: VecDeque<u32> = (0..self.alive.len() as u32).collect();
        while let Some(x) = queue.pop_front() {
            let x = x as usize;
            if !self.alive[x] {
                continue;
            }
            let partner = if self.live_faces[x] == 1 {
                self.boundary(x).iter().map(|&f| f as usize).find(|&f| self.alive[f])
            } else if self.live_cofaces[x] == 1 {
                self.coboundary(x).iter().map(|&g| g as usize).find(|&g| self.alive[g])
            } else {
                None
            };
            if let Some(y) = partner {
                self.kill(x, &mut queue);
                self.kill(y, &mut queue);
            }
        }
    }

    /// Boundary map from live cells of level `k` to live cells of level `k - 1`.
    fn live_matrix(&self, k: usize, index: &[usize]) -> IntegerMatrix {
        let (lo, hi) = (self.level_start[k], self.level_start[k + 1]);
        let rows = (self.level_start[k - 1]..lo).filter(|&i| self.alive[i]).count();
        let cols: Vec<usize> = (lo..hi).filter(|&i| self.alive[i]).collect();
        let mut m = IntegerMatrix::zeros(rows, cols.len());
        for (j, &cell) in cols.iter().enumerate() {
            for (pos, &f) in self.boundary(cell).iter().enumerate() {
                if self.alive[f as usize] {
                    m.set(index[f as usize], j, if pos % 2 == 0 { 1 } else { -1 });
                }
            }
        }
        m
    }

    /// Integral reduced homology of the (possibly shrunk) complex.
    pub fn homology(&self) -> HomologySummary {
        let levels = self.level_start.len() - 1;
        let mut index = vec![usize::MAX; self.alive.len()];
        let mut live = vec![0usize; levels];
        for k in 0..levels {
            for i in self.level_start[k]..self.level_start[k + 1] {
                if self.alive[i] {
                    index[i] = live[k];
                    live[k] += 1;
                }
            }
        }
        // ranks[k] and torsion[k] for the map out of level k (k >= 1).
        let mut ranks = vec![0usize; levels + 1];
        let mut torsion: Vec<Vec<BigUint>> = vec![Vec::new(); levels + 1];
        for k in 1..levels {
            if live[k] == 0 || live[k - 1] == 0 {
                continue;
            }
            let snf = smith_normal_form(&self.live_matrix(k, &index));
            ranks[k] = snf.rank;
            torsion[k] = snf.torsion();
        }
        let betti = |k: usize| live[k] - ranks[k] - ranks[k + 1];
        let empty_complex = levels > 0 && betti(0) == 1;
        let dims = (1..levels).map(|k| DimHomology { betti: betti(k), torsion: core::mem::take(&mut torsion[k + 1]) }).collect();
        HomologySummary { coefficients: Coefficients::Integers, empty_complex, dims }
    }
}
