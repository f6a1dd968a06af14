//! Radius graphs over deployments.
//!
//! Two nodes are adjacent when their Euclidean distance is at most
//! `range + epsilon`. Distances are computed on stored full-precision
//! coordinates with a direct all-pairs pass.

use serde::{Deserialize, Serialize};

use crate::deployment::{Deployment, Point};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Edge {
    /// 0-based node indices, `u < v`.
    pub u: usize,
    pub v: usize,
    pub distance: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadiusGraph {
    pub node_count: usize,
    pub transmission_range: f64,
    pub epsilon: f64,
    pub edges: Vec<Edge>,
    pub degrees: Vec<usize>,
}

impl RadiusGraph {
    pub fn effective_range(&self) -> f64 {
        self.transmission_range + self.epsilon
    }

    pub fn isolated(&self) -> impl Iterator<Item = usize> + '_ {
        self.degrees
            .iter()
            .enumerate()
            .filter(|(_, d)| **d == 0)
            .map(|(i, _)| i)
    }

    /// Number of connected components, isolated nodes included.
    pub fn component_count(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.node_count).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut components = self.node_count;
        for e in &self.edges {
            let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
            if a != b {
                parent[a] = b;
                components -= 1;
            }
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let n = self.degrees.len().max(1) as f64;
        DegreeStats {
            min: self.degrees.iter().copied().min().unwrap_or(0),
            max: self.degrees.iter().copied().max().unwrap_or(0),
            mean: self.degrees.iter().sum::<usize>() as f64 / n,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DegreeStats {
    pub min: usize,
    pub max: usize,
    pub mean: f64,
}

pub fn build_graph(deployment: &Deployment, range: f64, epsilon: f64) -> Result<RadiusGraph> {
    graph_over(&deployment.points, range, epsilon)
}

/// Same as [`build_graph`] over a bare point list.
pub fn graph_over(points: &[Point], range: f64, epsilon: f64) -> Result<RadiusGraph> {
    if points.is_empty() {
        return Err(Error::param("deployment has no nodes"));
    }
    if !(range > 0.0 && range.is_finite()) {
        return Err(Error::param(format!(
            "transmission range must be positive, got {range}"
        )));
    }
    if !(epsilon >= 0.0 && epsilon.is_finite()) {
        return Err(Error::param(format!(
            "epsilon must be non-negative, got {epsilon}"
        )));
    }
    let limit = range + epsilon;
    let n = points.len();
    let mut edges = Vec::new();
    let mut degrees = vec![0; n];
    for u in 0..n {
        for v in u + 1..n {
            let distance = points[u].distance(&points[v]);
            if distance <= limit {
                edges.push(Edge { u, v, distance });
                degrees[u] += 1;
                degrees[v] += 1;
            }
        }
    }
    Ok(RadiusGraph {
        node_count: n,
        transmission_range: range,
        epsilon,
        edges,
        degrees,
    })
}

pub fn isolated_count(graph: &RadiusGraph) -> usize {
    graph.isolated().count()
}

/// Isolated-node counts for each range in `ranges`.
pub fn isolated_profile(
    deployment: &Deployment,
    ranges: &[f64],
    epsilon: f64,
) -> Result<Vec<usize>> {
    ranges
        .iter()
        .map(|&r| build_graph(deployment, r, epsilon).map(|g| isolated_count(&g)))
        .collect()
}

/// Symmetric all-pairs Euclidean distances with a zero diagonal.
pub fn distance_matrix(deployment: &Deployment) -> Result<Vec<Vec<f64>>> {
    let pts = &deployment.points;
    if pts.is_empty() {
        return Err(Error::param("deployment has no nodes"));
    }
    let n = pts.len();
    let mut m = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let d = pts[i].distance(&pts[j]);
            m[i][j] = d;
            m[j][i] = d;
        }
    }
    Ok(m)
}
