//! Finite simplicial and cubical sets with explicit face data.
//!
//! A space stores, per dimension, a list of cells; each cell records its
//! ordered faces as a target cell plus a degeneracy word, so genuinely
//! degenerate faces (as in classifying spaces of cyclic groups) are
//! representable. Construction validates the simplicial or cubical identities
//! by rewriting face maps through the stored words, so downstream code can
//! rely on `d_i d_j = d_{j-1} d_i` (and the cubical analogue) unconditionally.

use std::collections::BTreeMap;

use crate::chains::{CubeKey, Letter, SimplexKey};
use crate::coeff::{is_prime, BasisKey, Element, Ring};
use crate::error::Error;
use crate::matrix::MatFp;
use crate::Result;

/// The two cell shapes a space can be built from.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Geometry {
    Simplicial,
    Cubical,
}

/// Identifier of a cell: its dimension and its index within that dimension.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct CellId {
    pub dim: u32,
    pub idx: u32,
}

impl BasisKey for CellId {
    fn degree(&self) -> i64 {
        self.dim as i64
    }
    fn render(&self) -> String {
        format!("{}:{}", self.dim, self.idx)
    }
}

/// One face assignment: the face equals `s_{w_1} ... s_{w_k}` applied to
/// `target`, with the word in normal form (strictly decreasing letters). An
/// empty word is an honest nondegenerate face.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FaceRef {
    pub target: CellId,
    pub word: Vec<u8>,
}

impl FaceRef {
    pub fn plain(target: CellId) -> FaceRef {
        FaceRef {
            target,
            word: Vec::new(),
        }
    }
}

/// A single cell: its ordered face list and a human-readable label.
///
/// Face order is `d_0, ..., d_n` for a simplicial n-cell and
/// `d^0_1, d^1_1, d^0_2, d^1_2, ..., d^1_n` for a cubical one.
#[derive(Clone, Debug)]
pub struct Cell {
    pub faces: Vec<FaceRef>,
    pub label: String,
}

/// A finite simplicial or cubical set.
#[derive(Clone, Debug)]
pub struct Space {
    geometry: Geometry,
    cells: Vec<Vec<Cell>>,
}

/// A cell with a degeneracy word still applied to it; the intermediate state
/// of iterated face application.
#[derive(Clone, PartialEq, Eq, Debug)]
struct Worded {
    target: CellId,
    word: Vec<u8>,
}

/// Right-multiply a normal-form degeneracy word by `s_letter`, keeping the
/// normal form via `s_i s_j = s_{j+1} s_i` for `i <= j`.
fn word_push(word: &mut Vec<u8>, letter: u8) {
    let mut f = letter;
    let mut at = word.len();
    while at > 0 && word[at - 1] <= f {
        f += 1;
        at -= 1;
    }
    word.insert(at, f);
}

impl Space {
    /// Build a space from explicit cell data, validating the face identities.
    pub fn new(geometry: Geometry, cells: Vec<Vec<Cell>>) -> Result<Space> {
        let mut cells = cells;
        while cells.last().is_some_and(Vec::is_empty) {
            cells.pop();
        }
        let space = Space { geometry, cells };
        space.validate()?;
        Ok(space)
    }

    pub fn geometry(&self) -> Geometry {
        self.geometry
    }

    /// Largest dimension carrying any cell.
    pub fn top_dim(&self) -> usize {
        self.cells.len().saturating_sub(1)
    }

    /// Number of cells in dimension `d`.
    pub fn rank(&self, d: usize) -> usize {
        self.cells.get(d).map_or(0, Vec::len)
    }

    pub fn cell(&self, id: CellId) -> &Cell {
        &self.cells[id.dim as usize][id.idx as usize]
    }

    pub fn label(&self, id: CellId) -> &str {
        &self.cell(id).label
    }

    /// Look up a cell of dimension `d` by its label.
    pub fn find_label(&self, d: usize, label: &str) -> Option<CellId> {
        let cells = self.cells.get(d)?;
        cells.iter().position(|c| c.label == label).map(|idx| CellId {
            dim: d as u32,
            idx: idx as u32,
        })
    }

    /// Apply the simplicial face `d_i` to a worded cell, rewriting through
    /// the degeneracy word.
    fn simplicial_face(&self, x: &Worded, i: usize) -> Worded {
        debug_assert_eq!(self.geometry, Geometry::Simplicial);
        let mut f = i;
        let mut out: Vec<u8> = Vec::new();
        for (pos, &j) in x.word.iter().enumerate() {
            let j = j as usize;
            if f < j {
                out.push(j as u8 - 1);
            } else if f == j || f == j + 1 {
                // d_i s_j = id: the face is absorbed by the word.
                let mut word = out;
                for &l in &x.word[pos + 1..] {
                    word_push(&mut word, l);
                }
                return Worded {
                    target: x.target,
                    word,
                };
            } else {
                out.push(j as u8);
                f -= 1;
            }
        }
        let fr = &self.cell(x.target).faces[f];
        let mut word = out;
        for &l in &fr.word {
            word_push(&mut word, l);
        }
        Worded {
            target: fr.target,
            word,
        }
    }

    /// Apply the cubical face `d^eps_i` (1-based direction `i`) to a worded
    /// cell.
    fn cubical_face(&self, x: &Worded, i: usize, eps: usize) -> Worded {
        debug_assert_eq!(self.geometry, Geometry::Cubical);
        debug_assert!(i >= 1 && eps < 2);
        let mut f = i;
        let mut out: Vec<u8> = Vec::new();
        for (pos, &j) in x.word.iter().enumerate() {
            let j = j as usize;
            if f < j {
                out.push(j as u8 - 1);
            } else if f == j {
                let mut word = out;
                for &l in &x.word[pos + 1..] {
                    word_push(&mut word, l);
                }
                return Worded {
                    target: x.target,
                    word,
                };
            } else {
                out.push(j as u8);
                f -= 1;
            }
        }
        let fr = &self.cell(x.target).faces[2 * (f - 1) + eps];
        let mut word = out;
        for &l in &fr.word {
            word_push(&mut word, l);
        }
        Worded {
            target: fr.target,
            word,
        }
    }

    fn validate(&self) -> Result<()> {
        for (d, cells) in self.cells.iter().enumerate() {
            for (idx, cell) in cells.iter().enumerate() {
                let here = format!("cell {} of dimension {d}", cell.label);
                let want_faces = match self.geometry {
                    Geometry::Simplicial => {
                        if d == 0 {
                            0
                        } else {
                            d + 1
                        }
                    }
                    Geometry::Cubical => 2 * d,
                };
                if cell.faces.len() != want_faces {
                    return Err(Error::InvalidComplex(format!(
                        "{here}: expected {want_faces} faces, found {}",
                        cell.faces.len()
                    )));
                }
                let _ = idx;
                for fr in &cell.faces {
                    let t = fr.target;
                    if (t.dim as usize) >= self.cells.len()
                        || (t.idx as usize) >= self.cells[t.dim as usize].len()
                    {
                        return Err(Error::InvalidComplex(format!(
                            "{here}: face target {} does not exist",
                            t.render()
                        )));
                    }
                    if t.dim as usize + fr.word.len() != d - 1 {
                        return Err(Error::InvalidComplex(format!(
                            "{here}: face target dimension {} with word length {} does not make a {}-cell",
                            t.dim,
                            fr.word.len(),
                            d - 1
                        )));
                    }
                    let k = fr.word.len();
                    for (pos, &a) in fr.word.iter().enumerate() {
                        // Letter at position pos is applied to a cell of
                        // dimension t.dim + (k - 1 - pos).
                        let m = t.dim as usize + (k - 1 - pos);
                        let (lo, hi) = match self.geometry {
                            Geometry::Simplicial => (0, m),
                            Geometry::Cubical => (1, m + 1),
                        };
                        let a = a as usize;
                        if a < lo || a > hi {
                            return Err(Error::InvalidComplex(format!(
                                "{here}: degeneracy letter {a} out of range"
                            )));
                        }
                        if pos + 1 < k && fr.word[pos] <= fr.word[pos + 1] {
                            return Err(Error::InvalidComplex(format!(
                                "{here}: degeneracy word {:?} is not in normal form",
                                fr.word
                            )));
                        }
                    }
                }
            }
        }
        // Face-map identities, rewritten through degeneracy words.
        for (d, cells) in self.cells.iter().enumerate() {
            if d < 2 {
                continue;
            }
            for (idx, cell) in cells.iter().enumerate() {
                let id = CellId {
                    dim: d as u32,
                    idx: idx as u32,
                };
                let start = Worded {
                    target: id,
                    word: Vec::new(),
                };
                match self.geometry {
                    Geometry::Simplicial => {
                        for j in 1..=d {
                            for i in 0..j {
                                let lhs =
                                    self.simplicial_face(&self.simplicial_face(&start, j), i);
                                let rhs =
                                    self.simplicial_face(&self.simplicial_face(&start, i), j - 1);
                                if lhs != rhs {
                                    return Err(Error::InvalidComplex(format!(
                                        "simplicial identity d_{i} d_{j} fails on cell {}",
                                        cell.label
                                    )));
                                }
                            }
                        }
                    }
                    Geometry::Cubical => {
                        for j in 2..=d {
                            for i in 1..j {
                                for eps in 0..2 {
                                    for delta in 0..2 {
                                        let lhs = self.cubical_face(
                                            &self.cubical_face(&start, j, delta),
                                            i,
                                            eps,
                                        );
                                        let rhs = self.cubical_face(
                                            &self.cubical_face(&start, i, eps),
                                            j - 1,
                                            delta,
                                        );
                                        if lhs != rhs {
                                            return Err(Error::InvalidComplex(format!(
                                                "cubical identity d^{eps}_{i} d^{delta}_{j} fails on cell {}",
                                                cell.label
                                            )));
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Integer boundary of a cell in the normalized chain complex; faces with
    /// a nonempty degeneracy word are degenerate and contribute nothing.
    pub fn boundary_of(&self, id: CellId) -> Element<CellId> {
        let mut out = Element::zero(Ring::Int);
        let d = id.dim as usize;
        let cell = self.cell(id);
        match self.geometry {
            Geometry::Simplicial => {
                for (i, fr) in cell.faces.iter().enumerate() {
                    if fr.word.is_empty() {
                        out.add_term(fr.target, if i % 2 == 0 { 1 } else { -1 });
                    }
                }
            }
            Geometry::Cubical => {
                for i in 1..=d {
                    let sign = if (i - 1) % 2 == 0 { 1 } else { -1 };
                    let lo = &cell.faces[2 * (i - 1)];
                    let hi = &cell.faces[2 * (i - 1) + 1];
                    if hi.word.is_empty() {
                        out.add_term(hi.target, sign);
                    }
                    if lo.word.is_empty() {
                        out.add_term(lo.target, -sign);
                    }
                }
            }
        }
        out
    }

    /// Matrix of the boundary map from d-chains to (d-1)-chains over `F_p`;
    /// rows index (d-1)-cells, columns index d-cells.
    pub fn boundary_matrix(&self, p: u32, d: usize) -> MatFp {
        assert!(d >= 1, "boundary matrix needs d >= 1");
        let mut m = MatFp::zero(p, self.rank(d - 1), self.rank(d));
        for idx in 0..self.rank(d) {
            let id = CellId {
                dim: d as u32,
                idx: idx as u32,
            };
            for (t, c) in self.boundary_of(id).iter() {
                m.add_at(t.idx as usize, idx, c);
            }
        }
        m
    }

    /// Push a face of the standard simplex forward along the characteristic
    /// map of the n-cell `id`; `None` when the image is degenerate.
    pub fn pushforward_simplex(&self, id: CellId, key: &SimplexKey) -> Option<CellId> {
        assert_eq!(self.geometry, Geometry::Simplicial, "geometry mismatch");
        let n = id.dim as usize;
        debug_assert!(key.0.iter().all(|&v| (v as usize) <= n));
        let mut x = Worded {
            target: id,
            word: Vec::new(),
        };
        // Remove missing vertices from the top down so face indices within
        // the intermediate cells stay equal to the vertex labels.
        for v in (0..=n).rev() {
            if !key.0.contains(&(v as u8)) {
                x = self.simplicial_face(&x, v);
            }
        }
        if x.word.is_empty() {
            Some(x.target)
        } else {
            None
        }
    }

    /// Push a face of the standard cube forward along the characteristic map
    /// of the n-cell `id`; `None` when the image is degenerate.
    pub fn pushforward_cube(&self, id: CellId, key: &CubeKey) -> Option<CellId> {
        assert_eq!(self.geometry, Geometry::Cubical, "geometry mismatch");
        let n = id.dim as usize;
        debug_assert_eq!(key.0.len(), n);
        let mut x = Worded {
            target: id,
            word: Vec::new(),
        };
        // Specialize interval coordinates from the top down, so direction i
        // keeps index i in every intermediate cell.
        for i in (1..=n).rev() {
            match key.0[i - 1] {
                Letter::Seg => {}
                Letter::Zero => x = self.cubical_face(&x, i, 0),
                Letter::One => x = self.cubical_face(&x, i, 1),
            }
        }
        if x.word.is_empty() {
            Some(x.target)
        } else {
            None
        }
    }

    /// Build the simplicial complex generated by the given facets (all their
    /// subsets become cells; face maps delete vertices).
    pub fn from_facets(facets: &[Vec<u32>]) -> Result<Space> {
        if facets.is_empty() {
            return Err(Error::InvalidComplex("no facets given".into()));
        }
        let mut by_dim: Vec<Vec<Vec<u32>>> = Vec::new();
        let mut seen: std::collections::BTreeSet<Vec<u32>> = Default::default();
        for facet in facets {
            let mut sorted = facet.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != facet.len() {
                return Err(Error::InvalidComplex(format!(
                    "facet {facet:?} has repeated vertices"
                )));
            }
            // Enumerate all nonempty subsets.
            let k = sorted.len();
            for mask in 1u32..(1 << k) {
                let subset: Vec<u32> = (0..k)
                    .filter(|&b| mask & (1 << b) != 0)
                    .map(|b| sorted[b])
                    .collect();
                if seen.insert(subset.clone()) {
                    let d = subset.len() - 1;
                    while by_dim.len() <= d {
                        by_dim.push(Vec::new());
                    }
                    by_dim[d].push(subset);
                }
            }
        }
        for cells in by_dim.iter_mut() {
            cells.sort_unstable();
        }
        let index: BTreeMap<Vec<u32>, CellId> = by_dim
            .iter()
            .enumerate()
            .flat_map(|(d, cells)| {
                cells.iter().enumerate().map(move |(i, verts)| {
                    (
                        verts.clone(),
                        CellId {
                            dim: d as u32,
                            idx: i as u32,
                        },
                    )
                })
            })
            .collect();
        let cells: Vec<Vec<Cell>> = by_dim
            .iter()
            .enumerate()
            .map(|(d, cells)| {
                cells
                    .iter()
                    .map(|verts| {
                        let faces = if d == 0 {
                            Vec::new()
                        } else {
                            (0..=d)
                                .map(|i| {
                                    let mut sub = verts.clone();
                                    sub.remove(i);
                                    FaceRef::plain(index[&sub])
                                })
                                .collect()
                        };
                        let label = format!(
                            "[{}]",
                            verts
                                .iter()
                                .map(u32::to_string)
                                .collect::<Vec<_>>()
                                .join(",")
                        );
                        Cell { faces, label }
                    })
                    .collect()
            })
            .collect();
        Space::new(Geometry::Simplicial, cells)
    }

    /// The N-skeleton of the classifying space of the cyclic group of prime
    /// order p: nondegenerate n-cells are tuples over {1, .., p-1}, faces
    /// follow the bar rule (drop first, merge adjacent mod p, drop last),
    /// and a merge hitting 0 lands on a degenerate face.
    pub fn classifying_space_skeleton(p: u32, top: usize) -> Result<Space> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let mut by_dim: Vec<Vec<Vec<u32>>> = vec![vec![Vec::new()]];
        for d in 1..=top {
            let mut tuples = Vec::new();
            for prev in &by_dim[d - 1] {
                for g in 1..p {
                    let mut t = prev.clone();
                    t.push(g);
                    tuples.push(t);
                }
            }
            tuples.sort_unstable();
            by_dim.push(tuples);
        }
        let index: BTreeMap<(usize, Vec<u32>), u32> = by_dim
            .iter()
            .enumerate()
            .flat_map(|(d, tuples)| {
                tuples
                    .iter()
                    .enumerate()
                    .map(move |(i, t)| ((d, t.clone()), i as u32))
            })
            .collect();
        let id_of = |t: &[u32]| CellId {
            dim: t.len() as u32,
            idx: index[&(t.len(), t.to_vec())],
        };
        let cells: Vec<Vec<Cell>> = by_dim
            .iter()
            .enumerate()
            .map(|(d, tuples)| {
                tuples
                    .iter()
                    .map(|t| {
                        let mut faces = Vec::new();
                        if d >= 1 {
                            faces.push(FaceRef::plain(id_of(&t[1..])));
                            for i in 1..d {
                                let merged = (t[i - 1] + t[i]) % p;
                                if merged == 0 {
                                    // The face is the degeneracy s_{i-1} of
                                    // the tuple with both entries removed.
                                    let mut rest = t.clone();
                                    rest.remove(i);
                                    rest.remove(i - 1);
                                    faces.push(FaceRef {
                                        target: id_of(&rest),
                                        word: vec![(i - 1) as u8],
                                    });
                                } else {
                                    let mut rest = t.clone();
                                    rest[i - 1] = merged;
                                    rest.remove(i);
                                    faces.push(FaceRef::plain(id_of(&rest)));
                                }
                            }
                            faces.push(FaceRef::plain(id_of(&t[..d - 1])));
                        }
                        let label = format!(
                            "[{}]",
                            t.iter().map(u32::to_string).collect::<Vec<_>>().join("|")
                        );
                        Cell { faces, label }
                    })
                    .collect()
            })
            .collect();
        Space::new(Geometry::Simplicial, cells)
    }

    /// The cubical torus: one vertex, two loop edges, one square with
    /// opposite faces identified.
    pub fn torus() -> Space {
        let v = CellId { dim: 0, idx: 0 };
        let a = CellId { dim: 1, idx: 0 };
        let b = CellId { dim: 1, idx: 1 };
        let cells = vec![
            vec![Cell {
                faces: vec![],
                label: "v".into(),
            }],
            vec![
                Cell {
                    faces: vec![FaceRef::plain(v), FaceRef::plain(v)],
                    label: "a".into(),
                },
                Cell {
                    faces: vec![FaceRef::plain(v), FaceRef::plain(v)],
                    label: "b".into(),
                },
            ],
            vec![Cell {
                faces: vec![
                    FaceRef::plain(b),
                    FaceRef::plain(b),
                    FaceRef::plain(a),
                    FaceRef::plain(a),
                ],
                label: "Q".into(),
            }],
        ];
        Space::new(Geometry::Cubical, cells).expect("torus cells are consistent")
    }

    /// A cubical Klein bottle: the cubulation of a 9-vertex grid
    /// triangulation (three squares per triangle, meeting at its barycenter).
    pub fn klein_bottle() -> Space {
        // Vertices of the triangulated Klein bottle: a 3x3 grid on [0,3)^2
        // with (x,3) ~ (x,0) and (3,y) ~ (0,3-y).
        let canon = |mut x: u32, mut y: u32| -> (u32, u32) {
            if x == 3 {
                x = 0;
                y = 3 - y;
            }
            if y == 3 {
                y = 0;
            }
            (x, y)
        };
        // Triangles of the grid triangulation, each as three distinct grid
        // vertices; identity of a triangle is positional, not by vertex set.
        let mut triangles: Vec<[(u32, u32); 3]> = Vec::new();
        for i in 0..3u32 {
            for j in 0..3u32 {
                let a = canon(i, j);
                let b = canon(i + 1, j);
                let c = canon(i + 1, j + 1);
                let d = canon(i, j + 1);
                triangles.push([a, b, c]);
                triangles.push([a, c, d]);
            }
        }
        // Edges are unordered pairs of grid vertices, shared between
        // triangles; midpoints and barycenters become extra vertices.
        let mut edges: std::collections::BTreeSet<((u32, u32), (u32, u32))> = Default::default();
        for t in &triangles {
            for (u, v) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
                let pair = if u <= v { (u, v) } else { (v, u) };
                assert!(pair.0 != pair.1, "triangle edge collapsed by gluing");
                edges.insert(pair);
            }
        }
        let grid: Vec<(u32, u32)> = (0..3)
            .flat_map(|x| (0..3).map(move |y| (x, y)))
            .collect();
        let edge_list: Vec<((u32, u32), (u32, u32))> = edges.into_iter().collect();
        // Dimension-0 cells: grid vertices, then midpoints, then barycenters.
        let gv = |v: (u32, u32)| -> u32 { grid.iter().position(|&g| g == v).unwrap() as u32 };
        let mid = |e: ((u32, u32), (u32, u32))| -> u32 {
            (grid.len() + edge_list.iter().position(|&f| f == e).unwrap()) as u32
        };
        let bary = |t: usize| -> u32 { (grid.len() + edge_list.len() + t) as u32 };
        let vlabel = |v: (u32, u32)| format!("v{}{}", v.0, v.1);
        let mut cells0: Vec<Cell> = grid
            .iter()
            .map(|&v| Cell {
                faces: vec![],
                label: vlabel(v),
            })
            .collect();
        cells0.extend(edge_list.iter().map(|&(u, v)| Cell {
            faces: vec![],
            label: format!("m({},{})", vlabel(u), vlabel(v)),
        }));
        cells0.extend((0..triangles.len()).map(|t| Cell {
            faces: vec![],
            label: format!("b{t}"),
        }));
        // Dimension-1 cells: half-edges into midpoints, then triangle
        // interiors into barycenters.
        let pair_of = |u: (u32, u32), v: (u32, u32)| if u <= v { (u, v) } else { (v, u) };
        let mut cells1: Vec<Cell> = Vec::new();
        let mut half = BTreeMap::new();
        for (ei, &(u, v)) in edge_list.iter().enumerate() {
            for end in [u, v] {
                half.insert((end, ei), cells1.len() as u32);
                cells1.push(Cell {
                    faces: vec![
                        FaceRef::plain(CellId { dim: 0, idx: gv(end) }),
                        FaceRef::plain(CellId {
                            dim: 0,
                            idx: mid((u, v)),
                        }),
                    ],
                    label: format!("{}-m", vlabel(end)),
                });
            }
        }
        let mut interior = BTreeMap::new();
        for (t, tri) in triangles.iter().enumerate() {
            for (u, v) in [(tri[0], tri[1]), (tri[0], tri[2]), (tri[1], tri[2])] {
                let e = pair_of(u, v);
                let ei = edge_list.iter().position(|&f| f == e).unwrap();
                interior.insert((t, ei), cells1.len() as u32);
                cells1.push(Cell {
                    faces: vec![
                        FaceRef::plain(CellId {
                            dim: 0,
                            idx: mid(e),
                        }),
                        FaceRef::plain(CellId {
                            dim: 0,
                            idx: bary(t),
                        }),
                    ],
                    label: format!("m{ei}-b{t}"),
                });
            }
        }
        // Fix up half-edge labels to be unique per (endpoint, edge).
        for (&(end, ei), &idx) in &half {
            cells1[idx as usize].label = format!("{}-m{}", vlabel(end), ei);
        }
        // Dimension-2 cells: one square per (triangle, corner).
        let mut cells2: Vec<Cell> = Vec::new();
        for (t, tri) in triangles.iter().enumerate() {
            for c in 0..3 {
                let u = tri[c];
                let mut others: Vec<(u32, u32)> = (0..3).filter(|&k| k != c).map(|k| tri[k]).collect();
                others.sort_unstable();
                let (v, w) = (others[0], others[1]);
                let euv = pair_of(u, v);
                let euw = pair_of(u, w);
                let euv_i = edge_list.iter().position(|&f| f == euv).unwrap();
                let euw_i = edge_list.iter().position(|&f| f == euw).unwrap();
                let half_uw = half[&(u, euw_i)];
                let half_uv = half[&(u, euv_i)];
                let int_uv = interior[&(t, euv_i)];
                let int_uw = interior[&(t, euw_i)];
                cells2.push(Cell {
                    faces: vec![
                        FaceRef::plain(CellId { dim: 1, idx: half_uw }),
                        FaceRef::plain(CellId { dim: 1, idx: int_uv }),
                        FaceRef::plain(CellId { dim: 1, idx: half_uv }),
                        FaceRef::plain(CellId { dim: 1, idx: int_uw }),
                    ],
                    label: format!("q{t}c{c}"),
                });
            }
        }
        Space::new(Geometry::Cubical, vec![cells0, cells1, cells2])
            .expect("klein bottle cells are consistent")
    }

    /// Resolve a built-in space name: `boundary-simplex:n`, `rp2`, `bc:p:N`,
    /// `torus2`, or `klein2`.
    pub fn builtin(name: &str) -> Result<Space> {
        if let Some(rest) = name.strip_prefix("boundary-simplex:") {
            // `boundary-simplex:n` is the boundary of the n-simplex, a
            // triangulated (n-1)-sphere.
            let n: usize = rest
                .parse()
                .map_err(|_| Error::InvalidComplex(format!("bad dimension in `{name}`")))?;
            if n == 0 {
                return Err(Error::InvalidComplex(
                    "the 0-simplex has an empty boundary".into(),
                ));
            }
            let verts: Vec<u32> = (0..=n as u32).collect();
            let facets: Vec<Vec<u32>> = (0..verts.len())
                .map(|skip| {
                    verts
                        .iter()
                        .copied()
                        .filter(|&v| v != skip as u32)
                        .collect()
                })
                .collect();
            return Space::from_facets(&facets);
        }
        if let Some(rest) = name.strip_prefix("bc:") {
            let (p, top) = rest
                .split_once(':')
                .ok_or_else(|| Error::InvalidComplex(format!("expected bc:p:N, got `{name}`")))?;
            let p: u32 = p
                .parse()
                .map_err(|_| Error::InvalidComplex(format!("bad prime in `{name}`")))?;
            let top: usize = top
                .parse()
                .map_err(|_| Error::InvalidComplex(format!("bad top degree in `{name}`")))?;
            return Space::classifying_space_skeleton(p, top);
        }
        match name {
            "rp2" => Space::from_facets(&[
                vec![0, 1, 2],
                vec![0, 2, 3],
                vec![0, 3, 4],
                vec![0, 4, 5],
                vec![0, 1, 5],
                vec![1, 2, 4],
                vec![2, 3, 5],
                vec![1, 3, 4],
                vec![2, 4, 5],
                vec![1, 3, 5],
            ]),
            "torus2" => Ok(Space::torus()),
            "klein2" => Ok(Space::klein_bottle()),
            other => Err(Error::InvalidComplex(format!("unknown builtin `{other}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chains::{cube_faces, simplex_faces};

    #[test]
    fn word_normal_form_multiplication() {
        // s_4 s_1 then s_3: s_1 s_3 = s_4 s_1, s_4 s_4 = s_5 s_4.
        let mut w = vec![4u8, 1];
        word_push(&mut w, 3);
        assert_eq!(w, vec![5, 4, 1]);
        let mut w = Vec::new();
        word_push(&mut w, 0);
        word_push(&mut w, 0);
        assert_eq!(w, vec![1, 0]);
    }

    #[test]
    fn simplex_from_facets_counts_and_boundary() {
        let space = Space::builtin("boundary-simplex:2").unwrap();
        assert_eq!(space.rank(0), 3);
        assert_eq!(space.rank(1), 3);
        assert_eq!(space.top_dim(), 1);
        let e = space.find_label(1, "[0,2]").unwrap();
        let b = space.boundary_of(e);
        // d_0 [0,2] = [2], d_1 [0,2] = [0].
        let v0 = space.find_label(0, "[0]").unwrap();
        let v2 = space.find_label(0, "[2]").unwrap();
        let mut want = Element::zero(Ring::Int);
        want.add_term(v2, 1);
        want.add_term(v0, -1);
        assert_eq!(b, want);
    }

    #[test]
    fn boundary_squares_to_zero_on_builtins() {
        for name in ["boundary-simplex:3", "rp2", "bc:3:4", "torus2", "klein2"] {
            let space = Space::builtin(name).unwrap();
            for d in 2..=space.top_dim() {
                for idx in 0..space.rank(d) {
                    let id = CellId {
                        dim: d as u32,
                        idx: idx as u32,
                    };
                    let mut acc: Element<CellId> = Element::zero(Ring::Int);
                    for (t, c) in space.boundary_of(id).iter() {
                        for (u, e) in space.boundary_of(*t).iter() {
                            acc.add_term(*u, c * e);
                        }
                    }
                    assert!(acc.is_zero(), "d^2 != 0 on {} in {name}", space.label(id));
                }
            }
        }
    }

    #[test]
    fn classifying_space_counts_and_degenerate_faces() {
        let space = Space::builtin("bc:3:4").unwrap();
        for d in 0..=4usize {
            assert_eq!(space.rank(d), 1 << d.min(31) as u32 as usize);
        }
        // (1,2): the middle face merges 1 + 2 = 0 mod 3 and degenerates.
        let c = space.find_label(2, "[1|2]").unwrap();
        let faces = &space.cell(c).faces;
        assert!(faces[0].word.is_empty());
        assert_eq!(faces[1].word, vec![0]);
        assert!(faces[2].word.is_empty());
        let b = space.boundary_of(c);
        let g1 = space.find_label(1, "[1]").unwrap();
        let g2 = space.find_label(1, "[2]").unwrap();
        let mut want = Element::zero(Ring::Int);
        want.add_term(g2, 1);
        want.add_term(g1, 1);
        assert_eq!(b, want);
    }

    #[test]
    fn classifying_space_mod2_has_zero_differential() {
        let space = Space::builtin("bc:2:5").unwrap();
        for d in 0..=5usize {
            assert_eq!(space.rank(d), 1);
        }
        for d in 1..=5 {
            let m = space.boundary_matrix(2, d);
            assert_eq!(m.rank(), 0, "differential nonzero in degree {d}");
        }
    }

    #[test]
    fn torus_boundaries_vanish() {
        let space = Space::torus();
        let q = CellId { dim: 2, idx: 0 };
        assert!(space.boundary_of(q).is_zero());
        let a = CellId { dim: 1, idx: 0 };
        assert!(space.boundary_of(a).is_zero());
    }

    #[test]
    fn klein_bottle_cell_counts() {
        let space = Space::klein_bottle();
        assert_eq!(space.rank(0), 54);
        assert_eq!(space.rank(1), 108);
        assert_eq!(space.rank(2), 54);
        // Euler characteristic of the Klein bottle is 0.
        assert_eq!(54 - 108 + 54, 0);
    }

    #[test]
    fn pushforward_hits_the_right_subcells() {
        let space = Space::from_facets(&[vec![0, 1, 2]]).unwrap();
        let top = space.find_label(2, "[0,1,2]").unwrap();
        for key in simplex_faces(2) {
            let img = space.pushforward_simplex(top, &key).unwrap();
            assert_eq!(space.label(img), key.render());
        }
        // A degenerate pushforward: the middle face of [1|2] in bc:3:2.
        let bc = Space::builtin("bc:3:2").unwrap();
        let cell = bc.find_label(2, "[1|2]").unwrap();
        let missing_mid = SimplexKey(vec![0, 2]);
        assert_eq!(bc.pushforward_simplex(cell, &missing_mid), None);
        let front = SimplexKey(vec![0, 1]);
        assert_eq!(
            bc.pushforward_simplex(cell, &front).map(|c| bc.label(c).to_string()),
            Some("[1]".to_string())
        );
    }

    #[test]
    fn cubical_pushforward_on_the_torus() {
        let space = Space::torus();
        let q = CellId { dim: 2, idx: 0 };
        for key in cube_faces(2) {
            let img = space.pushforward_cube(q, &key);
            assert!(img.is_some(), "torus has no degenerate faces");
        }
        let a = space.find_label(1, "a").unwrap();
        let b = space.find_label(1, "b").unwrap();
        use crate::chains::Letter::{One, Seg, Zero};
        assert_eq!(space.pushforward_cube(q, &CubeKey(vec![Seg, Zero])), Some(a));
        assert_eq!(space.pushforward_cube(q, &CubeKey(vec![One, Seg])), Some(b));
    }

    #[test]
    fn invalid_complexes_are_rejected() {
        assert!(Space::builtin("nonsense").is_err());
        assert!(Space::from_facets(&[vec![0, 0, 1]]).is_err());
        // A broken face assignment violating the simplicial identity.
        let v = CellId { dim: 0, idx: 0 };
        let cells = vec![
            vec![
                Cell {
                    faces: vec![],
                    label: "p".into(),
                },
                Cell {
                    faces: vec![],
                    label: "q".into(),
                },
                Cell {
                    faces: vec![],
                    label: "r".into(),
                },
            ],
            vec![
                Cell {
                    faces: vec![FaceRef::plain(CellId { dim: 0, idx: 1 }), FaceRef::plain(v)],
                    label: "e0".into(),
                },
                Cell {
                    faces: vec![FaceRef::plain(CellId { dim: 0, idx: 2 }), FaceRef::plain(v)],
                    label: "e1".into(),
                },
                Cell {
                    faces: vec![
                        FaceRef::plain(CellId { dim: 0, idx: 2 }),
                        FaceRef::plain(CellId { dim: 0, idx: 1 }),
                    ],
                    label: "e2".into(),
                },
            ],
            vec![Cell {
                // d_0 d_0 should equal d_0 d_1 for a 2-cell with these
                // edges only if the vertex targets line up; they do not.
                faces: vec![
                    FaceRef::plain(CellId { dim: 1, idx: 0 }),
                    FaceRef::plain(CellId { dim: 1, idx: 0 }),
                    FaceRef::plain(CellId { dim: 1, idx: 1 }),
                ],
                label: "t".into(),
            }],
        ];
        assert!(Space::new(Geometry::Simplicial, cells).is_err());
    }
}
