//! On-disk formats.
//!
//! * Deployment CSV: `node_id,x,y`, ids from 1.
//! * Traffic CSV: `node_id,t1,...,tT`.
//! * Edge list CSV: `u,v,distance`, ids from 1.
//! * JSON: `{"meta": {...}, "points" | "values": ...}`.
//!
//! Floats are written in the shortest decimal form that parses back to the
//! same double. Files are written to a temporary sibling and renamed into
//! place, so a failed write never leaves a partial file.

use std::fs;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::deployment::{Deployment, Mode, Point, YIncrement};
use crate::error::{Error, Result};
use crate::generator::GeneratorParams;
use crate::topology::RadiusGraph;
use crate::traffic::{Distribution, TrafficMatrix};

pub const TOOL_NAME: &str = env!("CARGO_PKG_NAME");
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl Format {
    /// Guesses from the file extension, defaulting to CSV.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("json") => Format::Json,
            _ => Format::Csv,
        }
    }
}

/// Writes `bytes` to `path` via a temporary file in the same directory.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| Error::Io(e.error))?;
    Ok(())
}

fn fmt_f64(v: f64) -> String {
    format!("{v}")
}

fn csv_bytes(header: &[String], rows: impl Iterator<Item = Vec<String>>) -> Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    w.into_inner().map_err(|e| Error::Io(e.into_error()))
}

// ---------------------------------------------------------------- deployment

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DeploymentMeta {
    pub tool: String,
    pub version: String,
    pub seed: u64,
    pub a: f64,
    pub c: f64,
    pub modulus: f64,
    pub mode: Mode,
    pub area: f64,
    pub area_height: f64,
    pub node_count: usize,
    pub y_increment: YIncrement,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NodeRecord {
    pub node_id: usize,
    pub x: f64,
    pub y: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DeploymentFile {
    pub meta: DeploymentMeta,
    pub points: Vec<NodeRecord>,
}

impl From<&Deployment> for DeploymentFile {
    fn from(d: &Deployment) -> Self {
        Self {
            meta: DeploymentMeta {
                tool: TOOL_NAME.into(),
                version: TOOL_VERSION.into(),
                seed: d.seed,
                a: d.params.a,
                c: d.params.c,
                modulus: d.params.modulus,
                mode: d.mode,
                area: d.area_width,
                area_height: d.area_height,
                node_count: d.node_count(),
                y_increment: d.y_increment,
            },
            points: d
                .points
                .iter()
                .enumerate()
                .map(|(i, p)| NodeRecord {
                    node_id: i + 1,
                    x: p.x,
                    y: p.y,
                })
                .collect(),
        }
    }
}

impl TryFrom<DeploymentFile> for Deployment {
    type Error = Error;

    fn try_from(f: DeploymentFile) -> Result<Self> {
        if f.points.len() != f.meta.node_count {
            return Err(Error::parse(
                None,
                format!(
                    "meta says {} nodes but {} points present",
                    f.meta.node_count,
                    f.points.len()
                ),
            ));
        }
        let m = &f.meta;
        Ok(Deployment {
            points: f.points.iter().map(|r| Point::new(r.x, r.y)).collect(),
            area_width: m.area,
            area_height: m.area_height,
            mode: m.mode,
            seed: m.seed,
            params: GeneratorParams::degenerate(m.seed as f64, m.a, m.c, m.modulus)?,
            y_increment: m.y_increment,
        })
    }
}

pub fn deployment_csv(d: &Deployment) -> Result<Vec<u8>> {
    let header = ["node_id", "x", "y"].map(String::from);
    let rows = d
        .points
        .iter()
        .enumerate()
        .map(|(i, p)| vec![(i + 1).to_string(), fmt_f64(p.x), fmt_f64(p.y)]);
    csv_bytes(&header, rows)
}

pub fn deployment_json(d: &Deployment) -> Result<Vec<u8>> {
    let mut out = serde_json::to_vec_pretty(&DeploymentFile::from(d))?;
    out.push(b'\n');
    Ok(out)
}

pub fn write_deployment(d: &Deployment, path: &Path, format: Format) -> Result<()> {
    let bytes = match format {
        Format::Csv => deployment_csv(d)?,
        Format::Json => deployment_json(d)?,
    };
    write_atomic(path, &bytes)
}

pub fn read_deployment_json(path: &Path) -> Result<Deployment> {
    let text = fs::read_to_string(path)?;
    let file: DeploymentFile =
        serde_json::from_str(&text).map_err(|e| Error::parse(Some(path), e.to_string()))?;
    Deployment::try_from(file)
}

/// Points from a `node_id,x,y` file, in row order.
pub fn read_points_csv(path: &Path) -> Result<Vec<Point>> {
    let text = fs::read_to_string(path)?;
    parse_points_csv(&text).map_err(|e| relabel(e, path))
}

pub fn parse_points_csv(text: &str) -> Result<Vec<Point>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let headers = r.headers()?.clone();
    if headers.iter().collect::<Vec<_>>() != ["node_id", "x", "y"] {
        return Err(Error::parse(None, format!("unexpected header {headers:?}")));
    }
    let mut points = Vec::new();
    for (i, rec) in r.records().enumerate() {
        let rec = rec?;
        if rec.len() != 3 {
            return Err(Error::parse(
                None,
                format!("row {} has {} fields", i + 1, rec.len()),
            ));
        }
        let id: usize = parse_field(&rec[0], i)?;
        if id != i + 1 {
            return Err(Error::parse(
                None,
                format!("row {} has node_id {id}", i + 1),
            ));
        }
        points.push(Point::new(
            parse_field(&rec[1], i)?,
            parse_field(&rec[2], i)?,
        ));
    }
    if points.is_empty() {
        return Err(Error::parse(None, "no rows"));
    }
    Ok(points)
}

fn parse_field<T: std::str::FromStr>(s: &str, row: usize) -> Result<T> {
    s.trim()
        .parse()
        .map_err(|_| Error::parse(None, format!("row {}: cannot parse {s:?}", row + 1)))
}

fn relabel(e: Error, path: &Path) -> Error {
    match e {
        Error::Parse { reason, .. } => Error::parse(Some(path), reason),
        Error::Csv(c) => Error::parse(Some(path), c.to_string()),
        other => other,
    }
}

// ------------------------------------------------------------------- traffic

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrafficMeta {
    pub tool: String,
    pub version: String,
    pub distribution: Distribution,
    pub p_min: f64,
    pub p_max: f64,
    pub rate: Option<f64>,
    pub node_count: usize,
    pub slot_count: usize,
    pub seed: f64,
    pub a: f64,
    pub c: f64,
    pub modulus: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrafficFile {
    pub meta: TrafficMeta,
    pub values: Vec<Vec<f64>>,
}

impl From<&TrafficMatrix> for TrafficFile {
    fn from(m: &TrafficMatrix) -> Self {
        Self {
            meta: TrafficMeta {
                tool: TOOL_NAME.into(),
                version: TOOL_VERSION.into(),
                distribution: m.distribution,
                p_min: m.p_min,
                p_max: m.p_max,
                rate: m.rate,
                node_count: m.node_count(),
                slot_count: m.slot_count(),
                seed: m.params.seed,
                a: m.params.a,
                c: m.params.c,
                modulus: m.params.modulus,
            },
            values: m.values.clone(),
        }
    }
}

impl TryFrom<TrafficFile> for TrafficMatrix {
    type Error = Error;

    fn try_from(f: TrafficFile) -> Result<Self> {
        let m = &f.meta;
        if f.values.len() != m.node_count || f.values.iter().any(|r| r.len() != m.slot_count) {
            return Err(Error::parse(None, "matrix shape does not match meta"));
        }
        Ok(TrafficMatrix {
            params: GeneratorParams::degenerate(m.seed, m.a, m.c, m.modulus)?,
            p_min: m.p_min,
            p_max: m.p_max,
            distribution: m.distribution,
            rate: m.rate,
            values: f.values,
        })
    }
}

pub fn traffic_csv(m: &TrafficMatrix) -> Result<Vec<u8>> {
    let header: Vec<String> = std::iter::once("node_id".to_string())
        .chain((1..=m.slot_count()).map(|t| format!("t{t}")))
        .collect();
    let rows = m.values.iter().enumerate().map(|(i, row)| {
        std::iter::once((i + 1).to_string())
            .chain(row.iter().map(|&v| fmt_f64(v)))
            .collect()
    });
    csv_bytes(&header, rows)
}

pub fn traffic_json(m: &TrafficMatrix) -> Result<Vec<u8>> {
    let mut out = serde_json::to_vec_pretty(&TrafficFile::from(m))?;
    out.push(b'\n');
    Ok(out)
}

pub fn write_traffic(m: &TrafficMatrix, path: &Path, format: Format) -> Result<()> {
    let bytes = match format {
        Format::Csv => traffic_csv(m)?,
        Format::Json => traffic_json(m)?,
    };
    write_atomic(path, &bytes)
}

pub fn read_traffic_json(path: &Path) -> Result<TrafficMatrix> {
    let text = fs::read_to_string(path)?;
    let file: TrafficFile =
        serde_json::from_str(&text).map_err(|e| Error::parse(Some(path), e.to_string()))?;
    TrafficMatrix::try_from(file)
}

/// Rows of a `node_id,t1,...` file.
pub fn read_matrix_csv(path: &Path) -> Result<Vec<Vec<f64>>> {
    let text = fs::read_to_string(path)?;
    parse_matrix_csv(&text).map_err(|e| relabel(e, path))
}

pub fn parse_matrix_csv(text: &str) -> Result<Vec<Vec<f64>>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let headers = r.headers()?.clone();
    let slots = headers.len().saturating_sub(1);
    let expected: Vec<String> = std::iter::once("node_id".to_string())
        .chain((1..=slots).map(|t| format!("t{t}")))
        .collect();
    if slots == 0 || headers.iter().ne(expected.iter().map(String::as_str)) {
        return Err(Error::parse(None, format!("unexpected header {headers:?}")));
    }
    let mut rows = Vec::new();
    for (i, rec) in r.records().enumerate() {
        let rec = rec?;
        if rec.len() != slots + 1 {
            return Err(Error::parse(
                None,
                format!("row {} has {} fields", i + 1, rec.len()),
            ));
        }
        let row = rec
            .iter()
            .skip(1)
            .map(|s| parse_field(s, i))
            .collect::<Result<Vec<f64>>>()?;
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::parse(None, "no rows"));
    }
    Ok(rows)
}

// --------------------------------------------------------------------- graph

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub u: usize,
    pub v: usize,
    pub distance: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphFile {
    pub node_count: usize,
    pub transmission_range: f64,
    pub epsilon: f64,
    pub edges: Vec<EdgeRecord>,
    pub degrees: Vec<usize>,
    pub isolated: Vec<usize>,
}

impl From<&RadiusGraph> for GraphFile {
    fn from(g: &RadiusGraph) -> Self {
        Self {
            node_count: g.node_count,
            transmission_range: g.transmission_range,
            epsilon: g.epsilon,
            edges: g
                .edges
                .iter()
                .map(|e| EdgeRecord {
                    u: e.u + 1,
                    v: e.v + 1,
                    distance: e.distance,
                })
                .collect(),
            degrees: g.degrees.clone(),
            isolated: g.isolated().map(|i| i + 1).collect(),
        }
    }
}

pub fn edges_csv(g: &RadiusGraph) -> Result<Vec<u8>> {
    let header = ["u", "v", "distance"].map(String::from);
    let rows = g.edges.iter().map(|e| {
        vec![
            (e.u + 1).to_string(),
            (e.v + 1).to_string(),
            fmt_f64(e.distance),
        ]
    });
    csv_bytes(&header, rows)
}

pub fn graph_json(g: &RadiusGraph) -> Result<Vec<u8>> {
    let mut out = serde_json::to_vec_pretty(&GraphFile::from(g))?;
    out.push(b'\n');
    Ok(out)
}

// ----------------------------------------------------------------------- svg

/// Flat scatter plot of a deployment.
pub fn deployment_svg(d: &Deployment) -> String {
    let (w, h) = (d.area_width, d.area_height);
    let r = w.max(h) / 200.0;
    let mut s = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {w} {h}\" width=\"600\" height=\"{}\">\n\
         <rect width=\"{w}\" height=\"{h}\" fill=\"white\" stroke=\"black\" stroke-width=\"{}\"/>\n",
        (600.0 * h / w).round(),
        r / 2.0
    );
    for p in &d.points {
        // SVG y grows downward
        s.push_str(&format!(
            "<circle cx=\"{}\" cy=\"{}\" r=\"{r}\" fill=\"steelblue\"/>\n",
            p.x,
            h - p.y
        ));
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deployment::{deploy_grid, deploy_nongrid};
    use crate::topology::build_graph;
    use crate::traffic::traffic_exponential_transform;

    #[test]
    fn deployment_json_round_trip() {
        let d = deploy_grid(37, 100.0, 43).unwrap();
        let f: DeploymentFile = serde_json::from_slice(&deployment_json(&d).unwrap()).unwrap();
        assert_eq!(Deployment::try_from(f).unwrap(), d);
    }

    #[test]
    fn deployment_csv_round_trip() {
        let d = deploy_nongrid(100, 100.0, 7).unwrap();
        let text = String::from_utf8(deployment_csv(&d).unwrap()).unwrap();
        assert!(text.starts_with("node_id,x,y\n1,"));
        assert_eq!(text.lines().count(), 101);
        assert_eq!(parse_points_csv(&text).unwrap(), d.points);
    }

    #[test]
    fn traffic_round_trips() {
        let m = traffic_exponential_transform(9, 4, 2.0, 10.0, 1.5).unwrap();
        let text = String::from_utf8(traffic_csv(&m).unwrap()).unwrap();
        assert!(text.starts_with("node_id,t1,t2,t3,t4\n"));
        assert_eq!(parse_matrix_csv(&text).unwrap(), m.values);
        let f: TrafficFile = serde_json::from_slice(&traffic_json(&m).unwrap()).unwrap();
        assert_eq!(TrafficMatrix::try_from(f).unwrap(), m);
    }

    #[test]
    fn malformed_csv_rejected() {
        assert!(parse_points_csv("node_id,x,y\n1,2.0\n").is_err());
        assert!(parse_points_csv("node_id,x,y\n").is_err());
        assert!(parse_points_csv("id,x,y\n1,2,3\n").is_err());
        assert!(parse_points_csv("node_id,x,y\n1,2,abc\n").is_err());
        assert!(parse_points_csv("node_id,x,y\n2,2,3\n").is_err());
        assert!(parse_matrix_csv("node_id,t1,t2\n1,2.5\n").is_err());
        assert!(parse_matrix_csv("node_id,x,y\n1,2,3\n").is_err());
    }

    #[test]
    fn edge_list_uses_one_based_ids() {
        let d = deploy_grid(8, 100.0, 3).unwrap();
        let g = build_graph(&d, 60.0, 0.0).unwrap();
        let text = String::from_utf8(edges_csv(&g).unwrap()).unwrap();
        assert!(text.starts_with("u,v,distance\n1,"));
        let gf = GraphFile::from(&g);
        assert!(gf.edges.iter().all(|e| e.u >= 1 && e.u < e.v && e.v <= 8));
    }

    #[test]
    fn atomic_write_replaces_file() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("out.csv");
        write_atomic(&p, b"one").unwrap();
        write_atomic(&p, b"two").unwrap();
        assert_eq!(fs::read(&p).unwrap(), b"two");
        assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 1);
    }

    #[test]
    fn svg_has_one_circle_per_node() {
        let d = deploy_nongrid(12, 100.0, 5).unwrap();
        assert_eq!(deployment_svg(&d).matches("<circle").count(), 12);
    }
}
