//! Total maps between finite rings and the builders that produce them.
//!
//! Map files are JSON:
//!
//! ```json
//! {"source": "m2_f5", "target": "m2_f5", "repr": {"builder": "neg_transpose_plus_trace"}}
//! {"source": "m2_f5", "target": "m2_f5", "repr": "table", "table": [["0","0","0","0"], ...]}
//! {"source": "m2_f5", "target": "m2_f5", "repr": "structured",
//!  "linear": [[...], ...], "offset": [{"functional": [...], "central": [...]}]}
//! ```
//!
//! Table position `k` holds the image of the source element with index `k`.

use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::identities;
use crate::linalg::{self, Matrix, Subspace, Vector};
use crate::ring::Ring;
use crate::ring_file::{parse_vector, ScalarToken};
use crate::scalar::Scalar;
use crate::structure::center;

/// `x ↦ functional(x) · central`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralTerm {
    pub functional: Vector,
    pub central: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapRepr {
    /// Target index of the image of every source element.
    DenseTable(Vec<u64>),
    Structured { linear: Matrix, offset: Vec<CentralTerm> },
}

/// A total function between two rings over the same domain. Not assumed
/// additive.
#[derive(Clone, Debug)]
pub struct MapTable {
    source: Arc<Ring>,
    target: Arc<Ring>,
    repr: MapRepr,
}

fn same_domain(source: &Ring, target: &Ring) -> Result<()> {
    if source.domain() != target.domain() {
        return Err(AlgebraError::Other(format!(
            "source is over {} but target is over {}",
            source.domain(),
            target.domain()
        )));
    }
    Ok(())
}

/// Span of all commutators, which is the span of the basis commutators.
pub fn commutator_span(ring: &Ring) -> Subspace {
    let n = ring.dim();
    let mut vs = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in i + 1..n {
            vs.push(ring.commutator_coords(&ring.basis_coords(i), &ring.basis_coords(j)));
        }
    }
    Subspace::span(ring.domain(), n, &vs)
}

impl MapTable {
    pub fn dense(source: Arc<Ring>, target: Arc<Ring>, table: Vec<u64>) -> Result<Self> {
        same_domain(&source, &target)?;
        let count = source
            .element_count()
            .ok_or_else(|| AlgebraError::UnsupportedDomain("tables need a finite source".into()))?;
        if table.len() as u64 != count {
            return Err(AlgebraError::DimensionMismatch { expected: count as usize, got: table.len() });
        }
        let tcount = target.element_count().expect("same finite domain");
        if let Some(bad) = table.iter().find(|&&t| t >= tcount) {
            return Err(AlgebraError::Parse(format!("table entry {bad} outside the target")));
        }
        Ok(MapTable { source, target, repr: MapRepr::DenseTable(table) })
    }

    /// Linear part plus central offsets. Each offset must be central in the
    /// target and its functional must vanish on all commutators.
    pub fn structured(source: Arc<Ring>, target: Arc<Ring>, linear: Matrix, offset: Vec<CentralTerm>) -> Result<Self> {
        same_domain(&source, &target)?;
        if linear.rows() != target.dim() {
            return Err(AlgebraError::DimensionMismatch { expected: target.dim(), got: linear.rows() });
        }
        if linear.cols() != source.dim() {
            return Err(AlgebraError::DimensionMismatch { expected: source.dim(), got: linear.cols() });
        }
        if !offset.is_empty() {
            let centre = center(&target);
            let commutators = commutator_span(&source);
            for term in &offset {
                if term.functional.len() != source.dim() {
                    return Err(AlgebraError::DimensionMismatch { expected: source.dim(), got: term.functional.len() });
                }
                if term.central.len() != target.dim() {
                    return Err(AlgebraError::DimensionMismatch { expected: target.dim(), got: term.central.len() });
                }
                if !centre.contains(&term.central) {
                    return Err(AlgebraError::OffsetNotCentral(format!(
                        "{} is not central",
                        target.format_coords(&term.central)
                    )));
                }
                if let Some(c) = commutators.basis().iter().find(|c| !dot(&term.functional, c).is_zero()) {
                    return Err(AlgebraError::OffsetNotCentral(format!(
                        "functional is nonzero on the commutator {}",
                        source.format_coords(c)
                    )));
                }
            }
        }
        Ok(MapTable { source, target, repr: MapRepr::Structured { linear, offset } })
    }

    pub fn linear(source: Arc<Ring>, target: Arc<Ring>, matrix: Matrix) -> Result<Self> {
        Self::structured(source, target, matrix, Vec::new())
    }

    pub fn identity(ring: Arc<Ring>) -> Self {
        let m = Matrix::identity(ring.domain(), ring.dim());
        MapTable { source: ring.clone(), target: ring, repr: MapRepr::Structured { linear: m, offset: Vec::new() } }
    }

    pub fn source(&self) -> &Arc<Ring> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Ring> {
        &self.target
    }

    pub fn repr(&self) -> &MapRepr {
        &self.repr
    }

    pub fn eval(&self, x: &[Scalar]) -> Vector {
        match &self.repr {
            MapRepr::DenseTable(t) => self.target.coords_at(t[self.source.index_of(x) as usize]),
            MapRepr::Structured { linear, offset } => {
                let mut y = linear.mul_vec(x);
                for term in offset {
                    linalg::axpy(&mut y, &dot(&term.functional, x), &term.central);
                }
                y
            }
        }
    }

    /// Image of the source element with index `k`, as a target index.
    pub fn eval_index(&self, k: u64) -> u64 {
        match &self.repr {
            MapRepr::DenseTable(t) => t[k as usize],
            MapRepr::Structured { .. } => self.target.index_of(&self.eval(&self.source.coords_at(k))),
        }
    }

    /// Target indices of the images of all source elements.
    pub fn tabulate(&self, budget: u64) -> Result<Vec<u64>> {
        let count = self.source.enumerable(budget)?;
        Ok(match &self.repr {
            MapRepr::DenseTable(t) => t.clone(),
            MapRepr::Structured { .. } => (0..count).into_par_iter().map(|k| self.eval_index(k)).collect(),
        })
    }

    pub fn to_dense(&self, budget: u64) -> Result<MapTable> {
        let table = self.tabulate(budget)?;
        Ok(MapTable { source: self.source.clone(), target: self.target.clone(), repr: MapRepr::DenseTable(table) })
    }

    /// Copy of the map with the image of one source element replaced.
    pub fn with_entry(&self, x: &[Scalar], image: &[Scalar], budget: u64) -> Result<MapTable> {
        let mut table = self.tabulate(budget)?;
        table[self.source.index_of(x) as usize] = self.target.index_of(image);
        MapTable::dense(self.source.clone(), self.target.clone(), table)
    }

    /// `other ∘ self`
    pub fn then(&self, other: &MapTable, budget: u64) -> Result<MapTable> {
        if other.source.id() != self.target.id() {
            return Err(AlgebraError::RingMismatch);
        }
        match (&self.repr, &other.repr) {
            (MapRepr::Structured { linear: a, offset: oa }, MapRepr::Structured { linear: b, offset: ob })
                if oa.is_empty() && ob.is_empty() =>
            {
                MapTable::linear(self.source.clone(), other.target.clone(), b.mul(a))
            }
            _ => {
                let first = self.tabulate(budget)?;
                let table = first.par_iter().map(|&t| other.eval_index(t)).collect();
                MapTable::dense(self.source.clone(), other.target.clone(), table)
            }
        }
    }
}

fn dot(f: &[Scalar], x: &[Scalar]) -> Scalar {
    let mut acc = f.first().map_or_else(|| x[0].domain().zero(), |s| s.domain().zero());
    for (a, b) in f.iter().zip(x) {
        if !a.is_zero() && !b.is_zero() {
            acc += &(a * b);
        }
    }
    acc
}

/// Builder descriptions, as found under `"repr"` in map files.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "builder", rename_all = "snake_case")]
pub enum MapBuilder {
    Identity,
    /// `target-dim × source-dim` rows.
    Linear { matrix: Vec<Vec<ScalarToken>> },
    /// `x ↦ -xᵀ + tr(x)·1` on a matrix ring with basis `E11, E12, ...`.
    NegTransposePlusTrace,
    /// `x ↦ u x u⁻¹` on an associative ring.
    Conjugation { element: Vec<ScalarToken> },
    /// Applied in order: `maps[0]` first.
    Compose { maps: Vec<MapBuilder> },
    DenseTable { table: Vec<Vec<ScalarToken>> },
    Structured { linear: Vec<Vec<ScalarToken>>, offset: Vec<OffsetTerm> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OffsetTerm {
    pub functional: Vec<ScalarToken>,
    pub central: Vec<ScalarToken>,
}

fn parse_matrix(rows: &[Vec<ScalarToken>], ring: &Ring, cols: usize) -> Result<Matrix> {
    let rows: Vec<Vector> = rows.iter().map(|r| parse_vector(r, ring.domain())).collect::<Result<_>>()?;
    Matrix::from_rows(ring.domain(), cols, &rows)
}

fn require_endomorphism(source: &Arc<Ring>, target: &Arc<Ring>, what: &str) -> Result<()> {
    if source.id() != target.id() {
        return Err(AlgebraError::Other(format!("{what} needs source and target to be the same ring")));
    }
    Ok(())
}

fn require_associative(ring: &Ring, what: &str) -> Result<()> {
    if !identities::is_associative(ring).holds {
        return Err(AlgebraError::NotAssociative(what.into()));
    }
    Ok(())
}

/// Positions of the matrix units `E{i}{j}` in an `m×m` matrix ring basis:
/// `units[i][j]` is the basis index of `E{i+1}{j+1}`.
pub fn matrix_units(ring: &Ring) -> Result<Vec<Vec<usize>>> {
    let n = ring.dim();
    let m = (1..=n).find(|m| m * m == n).ok_or_else(|| {
        AlgebraError::Other(format!("dimension {n} is not a square; not a matrix ring"))
    })?;
    let mut units = vec![vec![usize::MAX; m]; m];
    for (k, name) in ring.basis_names().iter().enumerate() {
        let digits: Vec<usize> = name
            .strip_prefix('E')
            .filter(|d| d.len() == 2)
            .map(|d| d.chars().filter_map(|c| c.to_digit(10)).map(|d| d as usize).collect())
            .unwrap_or_default();
        match digits[..] {
            [i, j] if (1..=m).contains(&i) && (1..=m).contains(&j) => units[i - 1][j - 1] = k,
            _ => return Err(AlgebraError::Other(format!("basis name {name:?} is not a matrix unit E<i><j>"))),
        }
    }
    if units.iter().flatten().any(|&k| k == usize::MAX) {
        return Err(AlgebraError::Other("matrix units are incomplete".into()));
    }
    Ok(units)
}

pub fn neg_transpose_plus_trace(ring: Arc<Ring>) -> Result<MapTable> {
    require_associative(&ring, "neg_transpose_plus_trace")?;
    let units = matrix_units(&ring)?;
    let domain = ring.domain();
    let n = ring.dim();
    let mut linear = Matrix::zeros(domain, n, n);
    let mut trace = linalg::zero_vector(domain, n);
    for (i, row) in units.iter().enumerate() {
        for (j, &k) in row.iter().enumerate() {
            linear.set(units[j][i], k, -domain.one());
        }
        trace[units[i][i]] = domain.one();
    }
    let unit = ring.unit_coords().to_vec();
    MapTable::structured(ring.clone(), ring, linear, vec![CentralTerm { functional: trace, central: unit }])
}

pub fn conjugation(ring: Arc<Ring>, u: &[Scalar]) -> Result<MapTable> {
    require_associative(&ring, "conjugation")?;
    if u.len() != ring.dim() {
        return Err(AlgebraError::DimensionMismatch { expected: ring.dim(), got: u.len() });
    }
    let inv = ring.left_mul_matrix(u).inverse().ok_or(AlgebraError::NotInvertible)?;
    let u_inv = inv.mul_vec(ring.unit_coords());
    if ring.mul_coords(&u_inv, u) != ring.unit_coords() {
        return Err(AlgebraError::NotInvertible);
    }
    let cols: Vec<Vector> = (0..ring.dim())
        .map(|k| ring.mul_coords(&ring.mul_coords(u, &ring.basis_coords(k)), &u_inv))
        .collect();
    let m = Matrix::from_columns(ring.domain(), ring.dim(), &cols)?;
    MapTable::linear(ring.clone(), ring, m)
}

pub fn build_map(source: &Arc<Ring>, target: &Arc<Ring>, builder: &MapBuilder, budget: u64) -> Result<MapTable> {
    let (s, t) = (source.clone(), target.clone());
    match builder {
        MapBuilder::Identity => {
            require_endomorphism(source, target, "identity")?;
            Ok(MapTable::identity(s))
        }
        MapBuilder::Linear { matrix } => MapTable::linear(s, t, parse_matrix(matrix, target, source.dim())?),
        MapBuilder::NegTransposePlusTrace => {
            require_endomorphism(source, target, "neg_transpose_plus_trace")?;
            neg_transpose_plus_trace(s)
        }
        MapBuilder::Conjugation { element } => {
            require_endomorphism(source, target, "conjugation")?;
            conjugation(s, &parse_vector(element, source.domain())?)
        }
        MapBuilder::Compose { maps } => {
            let Some((first, rest)) = maps.split_first() else {
                return Err(AlgebraError::Other("compose needs at least one map".into()));
            };
            if !rest.is_empty() {
                require_endomorphism(source, target, "compose")?;
            }
            let mut acc = build_map(source, target, first, budget)?;
            for b in rest {
                acc = acc.then(&build_map(source, target, b, budget)?, budget)?;
            }
            Ok(acc)
        }
        MapBuilder::DenseTable { table } => {
            let table = table
                .iter()
                .map(|c| {
                    let v = parse_vector(c, target.domain())?;
                    if v.len() != target.dim() {
                        return Err(AlgebraError::DimensionMismatch { expected: target.dim(), got: v.len() });
                    }
                    Ok(target.index_of(&v))
                })
                .collect::<Result<Vec<u64>>>()?;
            MapTable::dense(s, t, table)
        }
        MapBuilder::Structured { linear, offset } => {
            let linear = parse_matrix(linear, target, source.dim())?;
            let offset = offset
                .iter()
                .map(|o| {
                    Ok(CentralTerm {
                        functional: parse_vector(&o.functional, source.domain())?,
                        central: parse_vector(&o.central, target.domain())?,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            MapTable::structured(s, t, linear, offset)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ReprSpec {
    /// `"table"` or `"structured"`, with the data in sibling fields.
    Kind(String),
    Builder(MapBuilder),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapFile {
    pub source: String,
    pub target: String,
    pub repr: ReprSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<Vec<ScalarToken>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub linear: Option<Vec<Vec<ScalarToken>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub offset: Option<Vec<OffsetTerm>>,
}

impl MapFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| AlgebraError::Parse(format!("map file: {e}")))
    }

    pub fn builder(&self) -> Result<MapBuilder> {
        match &self.repr {
            ReprSpec::Builder(b) => Ok(b.clone()),
            ReprSpec::Kind(k) if k == "table" => Ok(MapBuilder::DenseTable {
                table: self.table.clone().ok_or_else(|| AlgebraError::Parse("\"table\" repr needs a table field".into()))?,
            }),
            ReprSpec::Kind(k) if k == "structured" => Ok(MapBuilder::Structured {
                linear: self
                    .linear
                    .clone()
                    .ok_or_else(|| AlgebraError::Parse("\"structured\" repr needs a linear field".into()))?,
                offset: self.offset.clone().unwrap_or_default(),
            }),
            ReprSpec::Kind(k) => Err(AlgebraError::Parse(format!("unknown repr {k:?}"))),
        }
    }

    /// Builds the map after checking the ring names.
    pub fn build(&self, source: &Arc<Ring>, target: &Arc<Ring>, budget: u64) -> Result<MapTable> {
        for (want, ring) in [(&self.source, source), (&self.target, target)] {
            if want != ring.name() {
                return Err(AlgebraError::Parse(format!("map refers to ring {want:?}, got {:?}", ring.name())));
            }
        }
        build_map(source, target, &self.builder()?, budget)
    }

    /// A `"table"` map file for `map`.
    pub fn from_table(map: &MapTable, budget: u64) -> Result<Self> {
        let table = map.tabulate(budget)?;
        Ok(MapFile {
            source: map.source.name().into(),
            target: map.target.name().into(),
            repr: ReprSpec::Kind("table".into()),
            table: Some(table.iter().map(|&t| crate::ring_file::tokens(&map.target.coords_at(t))).collect()),
            linear: None,
            offset: None,
        })
    }
}
