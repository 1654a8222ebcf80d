//! On-disk description of a finite simplicial or cubical set.
//!
//! A space file is a JSON document with a `geometry` field and either
//!
//! * `facets`: a list of vertex lists, the maximal simplices of a simplicial
//!   complex (simplicial geometry only), or
//! * `cells`: per-dimension lists of cell labels, dimension 0 first, plus
//!   `faces`: for every positive-dimensional cell the ordered list of its
//!   faces. Simplicial cells list d_0 .. d_d; cubical cells list the front
//!   and back face in each direction, direction 1 first. A face is either a
//!   plain label or `{ "target": label, "degeneracies": [..] }` when it is a
//!   degenerate copy of a lower cell (the word is applied left to right and
//!   must be in decreasing normal form).

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;

use steenrod::complexes::{Cell, FaceRef, Geometry, Space};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SpaceFile {
    geometry: String,
    #[serde(default)]
    facets: Option<Vec<Vec<u32>>>,
    #[serde(default)]
    cells: Option<Vec<Vec<String>>>,
    #[serde(default)]
    faces: Option<BTreeMap<String, Vec<FaceSpec>>>,
}

/// One face entry: either the bare target label, or a worded reference.
#[derive(Deserialize)]
#[serde(untagged)]
enum FaceSpec {
    Plain(String),
    Worded {
        target: String,
        #[serde(default)]
        degeneracies: Vec<u8>,
    },
}

impl FaceSpec {
    fn parts(&self) -> (&str, &[u8]) {
        match self {
            FaceSpec::Plain(t) => (t, &[]),
            FaceSpec::Worded {
                target,
                degeneracies,
            } => (target, degeneracies),
        }
    }
}

/// Load a space from `path`, or fail with a human-readable message.
pub fn load(path: &Path) -> Result<Space, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let file: SpaceFile =
        serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    build(&file)
}

/// Resolve a `--space` argument: a known builtin name, or a path to a file.
pub fn resolve(spec: &str) -> Result<Space, String> {
    match Space::builtin(spec) {
        Ok(space) => Ok(space),
        Err(builtin_err) => {
            let path = Path::new(spec);
            if path.exists() {
                load(path)
            } else {
                Err(format!("{spec}: not a builtin space ({builtin_err}) and not a file"))
            }
        }
    }
}

fn build(file: &SpaceFile) -> Result<Space, String> {
    let geometry = match file.geometry.as_str() {
        "simplicial" => Geometry::Simplicial,
        "cubical" => Geometry::Cubical,
        other => return Err(format!("unknown geometry {other:?}")),
    };

    if let Some(facets) = &file.facets {
        if geometry != Geometry::Simplicial {
            return Err("facets shorthand requires simplicial geometry".into());
        }
        if file.cells.is_some() || file.faces.is_some() {
            return Err("give either facets or cells+faces, not both".into());
        }
        return Space::from_facets(facets).map_err(|e| e.to_string());
    }

    let labels = file
        .cells
        .as_ref()
        .ok_or("a space file needs either facets or cells")?;
    let empty = BTreeMap::new();
    let faces = file.faces.as_ref().unwrap_or(&empty);

    // Label -> id table, filled dimension by dimension so face targets can
    // always be resolved against lower dimensions.
    let mut ids: BTreeMap<&str, steenrod::complexes::CellId> = BTreeMap::new();
    let mut cells: Vec<Vec<Cell>> = Vec::with_capacity(labels.len());
    for (d, layer) in labels.iter().enumerate() {
        let mut row = Vec::with_capacity(layer.len());
        for (idx, label) in layer.iter().enumerate() {
            if ids.contains_key(label.as_str()) {
                return Err(format!("duplicate cell label {label:?}"));
            }
            let listed = faces.get(label).map(Vec::as_slice).unwrap_or(&[]);
            if d == 0 && !listed.is_empty() {
                return Err(format!("vertex {label:?} cannot have faces"));
            }
            let mut refs = Vec::with_capacity(listed.len());
            for spec in listed {
                let (target, word) = spec.parts();
                let id = *ids
                    .get(target)
                    .ok_or_else(|| format!("{label:?}: unknown face target {target:?}"))?;
                refs.push(FaceRef {
                    target: id,
                    word: word.to_vec(),
                });
            }
            row.push(Cell {
                faces: refs,
                label: label.clone(),
            });
            ids.insert(
                label.as_str(),
                steenrod::complexes::CellId {
                    dim: d as u32,
                    idx: idx as u32,
                },
            );
        }
        cells.push(row);
    }
    Space::new(geometry, cells).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> Result<Space, String> {
        let file: SpaceFile = serde_json::from_str(text).map_err(|e| e.to_string())?;
        build(&file)
    }

    #[test]
    fn facets_shorthand_builds_a_complex() {
        let space = parse(r#"{"geometry":"simplicial","facets":[[0,1],[1,2],[0,2]]}"#).unwrap();
        assert_eq!(space.top_dim(), 1);
        assert_eq!(space.rank(0), 3);
        assert_eq!(space.rank(1), 3);
    }

    #[test]
    fn explicit_cells_with_a_degenerate_face() {
        // A circle as a simplicial set: one vertex, one edge whose two faces
        // are the vertex; and a degenerate 2-cell description is rejected
        // only when malformed.
        let space = parse(
            r#"{
                "geometry": "simplicial",
                "cells": [["v"], ["e"]],
                "faces": {"e": ["v", "v"]}
            }"#,
        )
        .unwrap();
        assert_eq!(space.rank(1), 1);

        let torus_like = parse(
            r#"{
                "geometry": "cubical",
                "cells": [["v"], ["a"]],
                "faces": {"a": ["v", "v"]}
            }"#,
        )
        .unwrap();
        assert_eq!(torus_like.top_dim(), 1);
    }

    #[test]
    fn errors_are_reported() {
        assert!(parse(r#"{"geometry":"projective"}"#).is_err());
        assert!(parse(r#"{"geometry":"simplicial"}"#).is_err());
        assert!(parse(
            r#"{"geometry":"simplicial","cells":[["v"],["e"]],"faces":{"e":["w","v"]}}"#
        )
        .is_err());
        // Wrong face count for a simplicial edge.
        assert!(parse(
            r#"{"geometry":"simplicial","cells":[["v"],["e"]],"faces":{"e":["v"]}}"#
        )
        .is_err());
    }
}
