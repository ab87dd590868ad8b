//! Tensor-square grid for `dA_α(z) dA_α(w)` on the bidisk.
//!
//! Both variables use the same [`DiskGrid`]. The truncation is joint: the
//! `k`-th partial covers `|z|, |w| ≤ 1−ε_k`, assembled from a panel-pair matrix.

use num_complex::Complex64;
use rayon::prelude::*;

use super::disk::{DiskGrid, GridNode, GridSpec};
use super::result::{joint_partials, NormResult};
use crate::numerics::pairwise_sum;
use crate::Result;

#[derive(Debug, Clone)]
pub struct BidiskGrid {
    disk: DiskGrid,
    nodes: Vec<GridNode>,
}

impl BidiskGrid {
    pub fn new(alpha: f64, spec: GridSpec) -> Result<Self> {
        Ok(Self::from_disk(DiskGrid::new(alpha, spec)?))
    }

    pub fn from_disk(disk: DiskGrid) -> Self {
        let nodes = disk.nodes();
        Self { disk, nodes }
    }

    pub fn disk(&self) -> &DiskGrid {
        &self.disk
    }

    /// Nodes of one factor; the grid is their tensor square.
    pub fn nodes(&self) -> &[GridNode] {
        &self.nodes
    }

    pub fn alpha(&self) -> f64 {
        self.disk.alpha()
    }

    /// `∫∫ f dA_α dA_α` where `f(i, j)` is the integrand at `(nodes[i].z, nodes[j].z)`.
    /// Index access lets callers precompute per-node data.
    pub fn integrate_indexed<F>(&self, f: F) -> NormResult
    where
        F: Fn(usize, usize) -> f64 + Sync,
    {
        let p = self.disk.panel_count();
        let rows: Vec<Vec<f64>> = (0..self.nodes.len())
            .into_par_iter()
            .map(|i| {
                let mut acc = vec![0.0; p];
                for (j, nj) in self.nodes.iter().enumerate() {
                    acc[nj.panel] += nj.weight * f(i, j);
                }
                let wi = self.nodes[i].weight;
                acc.iter_mut().for_each(|a| *a *= wi);
                acc
            })
            .collect();
        let mut cells: Vec<Vec<Vec<f64>>> = vec![vec![Vec::new(); p]; p];
        for (i, row) in rows.iter().enumerate() {
            let pi = self.nodes[i].panel;
            for (pj, &v) in row.iter().enumerate() {
                cells[pi][pj].push(v);
            }
        }
        let m: Vec<Vec<f64>> = cells
            .iter()
            .map(|r| r.iter().map(|c| pairwise_sum(c)).collect())
            .collect();
        let (partials, tail) = joint_partials(&m);
        NormResult::from_partials(partials, tail, self.disk.epsilons().to_vec())
    }

    pub fn integrate<F>(&self, f: F) -> NormResult
    where
        F: Fn(Complex64, Complex64) -> f64 + Sync,
    {
        self.integrate_indexed(|i, j| f(self.nodes[i].z, self.nodes[j].z))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::disk::AngularRule;

    #[test]
    fn tensor_monomials() {
        let spec = GridSpec { radial_nodes: 8, tail_nodes: 8, levels: 6, angular: AngularRule::Uniform { m: 12 } };
        let g = BidiskGrid::new(0.0, spec).unwrap();
        for (i, j) in [(0, 0), (1, 2), (3, 5)] {
            let r = g.integrate(|z, w| z.norm_sqr().powi(i) * w.norm_sqr().powi(j));
            let exact = 1.0 / ((i + 1) * (j + 1)) as f64;
            assert!((r.value / exact - 1.0).abs() < 1e-12, "{i},{j}: {}", r.value);
            assert!(r.partials.windows(2).all(|w| w[1] >= w[0]));
        }
    }
}
