//! Command outputs. Every command produces one `Report`; the JSON mode
//! serializes it and the human mode renders the same data, so the two modes
//! cannot drift apart.

use serde::Serialize;

#[derive(Serialize)]
pub struct Term {
    pub coeff: i64,
    pub key: String,
}

#[derive(Serialize)]
pub struct CellValue {
    pub cell: String,
    pub value: u32,
}

#[derive(Serialize)]
pub struct ClassSelector {
    pub degree: usize,
    pub index: usize,
}

#[derive(Serialize)]
pub struct OperationResult {
    pub degree: usize,
    pub coords: Vec<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cochain: Option<Vec<CellValue>>,
}

#[derive(Serialize)]
#[serde(tag = "command")]
pub enum Report {
    #[serde(rename = "psi")]
    Psi {
        family: String,
        r: usize,
        n: u32,
        count: usize,
        #[serde(skip_serializing_if = "Option::is_none")]
        element: Option<String>,
        #[serde(skip_serializing_if = "Option::is_none")]
        terms: Option<Vec<Term>>,
    },
    #[serde(rename = "cup")]
    Cup {
        geometry: String,
        dim: usize,
        arity: usize,
        index: u32,
        chain: String,
        cochains: Vec<String>,
        value: i64,
    },
    #[serde(rename = "steenrod")]
    Steenrod {
        space: String,
        prime: u32,
        power: i64,
        bockstein: bool,
        operation: String,
        class: ClassSelector,
        result: OperationResult,
    },
    #[serde(rename = "cohomology")]
    Cohomology {
        space: String,
        prime: u32,
        #[serde(skip_serializing_if = "Option::is_none")]
        betti: Option<Vec<usize>>,
        #[serde(skip_serializing_if = "Option::is_none")]
        degree: Option<usize>,
        #[serde(skip_serializing_if = "Option::is_none")]
        rank: Option<usize>,
        #[serde(skip_serializing_if = "Option::is_none")]
        representatives: Option<Vec<Vec<CellValue>>>,
    },
    #[serde(rename = "validate")]
    Validate {
        file: String,
        geometry: String,
        cells: Vec<usize>,
    },
}

fn coords_text(coords: &[u32]) -> String {
    let inner: Vec<String> = coords.iter().map(u32::to_string).collect();
    format!("[{}]", inner.join(", "))
}

fn cochain_lines(out: &mut String, values: &[CellValue]) {
    if values.is_empty() {
        out.push_str("\ncochain: 0");
        return;
    }
    out.push_str("\ncochain:");
    for v in values {
        out.push_str(&format!("\n  {} = {}", v.cell, v.value));
    }
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    /// The default terminal rendering.
    pub fn human(&self) -> String {
        match self {
            Report::Psi {
                count,
                element,
                ..
            } => match element {
                Some(text) => text.clone(),
                None => count.to_string(),
            },
            Report::Cup { value, .. } => value.to_string(),
            Report::Steenrod {
                space,
                operation,
                class,
                result,
                ..
            } => {
                let mut out = format!(
                    "{} on H^{} basis {} of {} -> H^{}: coords {}",
                    operation,
                    class.degree,
                    class.index,
                    space,
                    result.degree,
                    coords_text(&result.coords)
                );
                if let Some(cochain) = &result.cochain {
                    cochain_lines(&mut out, cochain);
                }
                out
            }
            Report::Cohomology {
                space,
                prime,
                betti,
                degree,
                rank,
                representatives,
                ..
            } => {
                if let Some(betti) = betti {
                    let ranks: Vec<String> = betti.iter().map(usize::to_string).collect();
                    return format!("betti numbers of {space} mod {prime}: {}", ranks.join(" "));
                }
                let mut out = format!(
                    "H^{} of {space} mod {prime}: rank {}",
                    degree.unwrap_or(0),
                    rank.unwrap_or(0)
                );
                if let Some(reps) = representatives {
                    for (i, rep) in reps.iter().enumerate() {
                        out.push_str(&format!("\nbasis {i}:"));
                        if rep.is_empty() {
                            out.push_str(" 0");
                        }
                        for v in rep {
                            out.push_str(&format!(" {}={}", v.cell, v.value));
                        }
                    }
                }
                out
            }
            Report::Validate {
                file,
                geometry,
                cells,
            } => {
                let ranks: Vec<String> = cells.iter().map(usize::to_string).collect();
                format!("ok: {file} is a {geometry} space with cells per dimension [{}]", ranks.join(", "))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_is_tagged_and_stable() {
        let report = Report::Cup {
            geometry: "simplicial".into(),
            dim: 2,
            arity: 2,
            index: 0,
            chain: "[0,1,2]".into(),
            cochains: vec!["[0,1]".into(), "[1,2]".into()],
            value: -1,
        };
        let json = report.to_json();
        assert!(json.starts_with("{\n  \"command\": \"cup\""));
        assert_eq!(report.human(), "-1");
    }

    #[test]
    fn optional_sections_are_omitted() {
        let report = Report::Psi {
            family: "surjection".into(),
            r: 4,
            n: 4,
            count: 25,
            element: None,
            terms: None,
        };
        assert!(!report.to_json().contains("terms"));
        assert_eq!(report.human(), "25");
    }
}
