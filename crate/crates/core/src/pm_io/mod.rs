//! Reader and writer for the polymake-style `.poly` section format.
//!
//! A file is a sequence of sections. Each starts with a keyword line and
//! continues with whitespace-separated rational rows up to a blank line or
//! the next keyword. Point rows are homogeneous (`1 x_1 .. x_d`); facet and
//! affine-hull rows `a_0 a_1 .. a_d` mean `a_0 + Σ a_i x_i ≥ 0` (`= 0`).

use std::fmt::{self, Write as _};
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{Int, Rat};
use crate::hull::{normalize, HRep, Inequality};
use crate::polytope::VertexSet01;

/// Supported section keywords, in output order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Section {
    Points,
    Vertices,
    Facets,
    AffineHull,
    Dimension,
}

impl Section {
    pub const ALL: [Section; 5] = [
        Section::Points,
        Section::Vertices,
        Section::Facets,
        Section::AffineHull,
        Section::Dimension,
    ];

    pub fn keyword(self) -> &'static str {
        match self {
            Section::Points => "POINTS",
            Section::Vertices => "VERTICES",
            Section::Facets => "FACETS",
            Section::AffineHull => "AFFINE_HULL",
            Section::Dimension => "DIMENSION",
        }
    }

    fn from_keyword(s: &str) -> Option<Self> {
        Section::ALL.into_iter().find(|k| k.keyword() == s)
    }

    fn is_point_section(self) -> bool {
        matches!(self, Section::Points | Section::Vertices)
    }
}

impl fmt::Display for Section {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

/// Parsed file: at most one block of rows per section.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PolyFile {
    sections: Vec<(Section, Vec<Vec<Rat>>)>,
}

impl PolyFile {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, s: Section) -> Option<&[Vec<Rat>]> {
        self.sections
            .iter()
            .find(|(k, _)| *k == s)
            .map(|(_, rows)| rows.as_slice())
    }

    /// Replaces (or adds) a section, keeping sections in output order.
    pub fn set(&mut self, s: Section, rows: Vec<Vec<Rat>>) {
        self.sections.retain(|(k, _)| *k != s);
        let at = self.sections.partition_point(|(k, _)| *k < s);
        self.sections.insert(at, (s, rows));
    }

    pub fn remove(&mut self, s: Section) {
        self.sections.retain(|(k, _)| *k != s);
    }

    pub fn sections(&self) -> impl Iterator<Item = Section> + '_ {
        self.sections.iter().map(|(k, _)| *k)
    }

    /// Number of coordinates `d` (row length minus one), if any row fixes it.
    pub fn ambient_dim(&self) -> Option<usize> {
        self.sections
            .iter()
            .filter(|(k, _)| *k != Section::Dimension)
            .flat_map(|(_, rows)| rows.first())
            .map(|r| r.len() - 1)
            .next()
    }
}

fn parse_rat(tok: &str, line: usize) -> Result<Rat> {
    let err = || Error::Parse {
        line,
        message: format!("'{tok}' is not a rational number"),
    };
    if let Some((p, q)) = tok.split_once('/') {
        let p = Int::from_str(p).map_err(|_| err())?;
        let q = Int::from_str(q).map_err(|_| err())?;
        if q.is_zero() {
            return Err(err());
        }
        Ok(Rat::new(p, q))
    } else {
        Ok(Rat::from_integer(Int::from_str(tok).map_err(|_| err())?))
    }
}

/// Parses `.poly` text. Lines are numbered from 1 in error messages.
pub fn parse(text: &str) -> Result<PolyFile> {
    let mut file = PolyFile::new();
    let mut current: Option<(Section, Vec<Vec<Rat>>)> = None;
    let mut width: Option<usize> = None;
    let flush = |file: &mut PolyFile, cur: Option<(Section, Vec<Vec<Rat>>)>| {
        if let Some((s, rows)) = cur {
            file.set(s, rows);
        }
    };
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let l = raw.trim();
        if l.is_empty() {
            flush(&mut file, current.take());
            continue;
        }
        if l.starts_with(|c: char| c.is_ascii_alphabetic() || c == '_') {
            flush(&mut file, current.take());
            let s = Section::from_keyword(l).ok_or_else(|| Error::Parse {
                line,
                message: format!("unknown keyword '{l}'"),
            })?;
            if file.get(s).is_some() {
                return Err(Error::Parse {
                    line,
                    message: format!("section {s} appears twice"),
                });
            }
            current = Some((s, Vec::new()));
            continue;
        }
        let Some((section, rows)) = current.as_mut() else {
            return Err(Error::Parse {
                line,
                message: "data outside of a section".into(),
            });
        };
        let row = l
            .split_whitespace()
            .map(|t| parse_rat(t, line))
            .collect::<Result<Vec<_>>>()?;
        if *section == Section::Dimension {
            if row.len() != 1 || !row[0].is_integer() || !rows.is_empty() {
                return Err(Error::Parse {
                    line,
                    message: "DIMENSION holds a single integer".into(),
                });
            }
        } else {
            if row.len() < 2 {
                return Err(Error::Parse {
                    line,
                    message: "row needs at least two entries".into(),
                });
            }
            match width {
                Some(w) if w != row.len() => {
                    return Err(Error::Parse {
                        line,
                        message: format!("row has {} entries, expected {w}", row.len()),
                    })
                }
                _ => width = Some(row.len()),
            }
            if section.is_point_section() && !row[0].is_one() {
                return Err(Error::Parse {
                    line,
                    message: "point row is not homogeneous (leading entry must be 1)".into(),
                });
            }
        }
        rows.push(row);
    }
    flush(&mut file, current.take());
    Ok(file)
}

/// Canonical text: sections in fixed order separated by one blank line,
/// entries separated by single spaces, every row terminated by LF.
pub fn write(file: &PolyFile) -> String {
    let mut out = String::new();
    for (i, (s, rows)) in file.sections.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        out.push_str(s.keyword());
        out.push('\n');
        for row in rows {
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    out.push(' ');
                }
                write!(out, "{x}").expect("writing to a String");
            }
            out.push('\n');
        }
    }
    out
}

/// The 0/1 vertex set of the `VERTICES` section, or of `POINTS` if there
/// are no vertices.
pub fn to_vertex_set(file: &PolyFile) -> Result<VertexSet01> {
    let rows = file
        .get(Section::Vertices)
        .or_else(|| file.get(Section::Points))
        .ok_or_else(|| Error::InvalidInput("file has neither VERTICES nor POINTS".into()))?;
    if rows.is_empty() {
        return Err(Error::InvalidInput("empty point section".into()));
    }
    let d = rows[0].len() - 1;
    let mut coords = Vec::with_capacity(rows.len());
    for (r, row) in rows.iter().enumerate() {
        let mut c = Vec::with_capacity(d);
        for (j, x) in row[1..].iter().enumerate() {
            if x.is_zero() {
                c.push(0u8);
            } else if x.is_one() {
                c.push(1u8);
            } else {
                return Err(Error::InvalidInput(format!(
                    "point row {}: coordinate {} = {x} is not 0/1",
                    r + 1,
                    j + 1
                )));
            }
        }
        coords.push(c);
    }
    VertexSet01::from_coords(d, &coords)
}

fn int_rows(rows: &[Vec<Rat>], what: &str) -> Result<Vec<Inequality>> {
    rows.iter()
        .enumerate()
        .map(|(r, row)| {
            normalize(row)
                .map(|(ineq, _)| ineq)
                .map_err(|e| Error::InvalidInput(format!("{what} row {}: {e}", r + 1)))
        })
        .collect()
}

/// The inequality description stored in `FACETS` and `AFFINE_HULL`, if the
/// file has facets. Rows are rescaled to primitive integers.
pub fn to_hrep(file: &PolyFile) -> Result<Option<HRep>> {
    let Some(facets) = file.get(Section::Facets) else {
        return Ok(None);
    };
    let ambient = file
        .ambient_dim()
        .ok_or_else(|| Error::InvalidInput("cannot infer the dimension".into()))?;
    let equations = int_rows(file.get(Section::AffineHull).unwrap_or(&[]), "AFFINE_HULL")?;
    let facets = int_rows(facets, "FACETS")?;
    Ok(Some(HRep {
        ambient,
        equations,
        facets,
    }))
}

/// `VERTICES` of `p`, plus `FACETS`, `AFFINE_HULL` and `DIMENSION` when a
/// description is given.
pub fn from_polytope(p: &VertexSet01, hrep: Option<&HRep>) -> PolyFile {
    let mut file = PolyFile::new();
    let rows = (0..p.len())
        .map(|v| {
            std::iter::once(Rat::one())
                .chain(p.coords(v).into_iter().map(|c| Rat::from_integer(Int::from(c))))
                .collect()
        })
        .collect();
    file.set(Section::Vertices, rows);
    if let Some(h) = hrep {
        file.set(Section::Facets, h.facets.iter().map(Inequality::rat_row).collect());
        file.set(Section::AffineHull, h.equations.iter().map(Inequality::rat_row).collect());
        file.set(
            Section::Dimension,
            vec![vec![Rat::from_integer(Int::from(h.dim()))]],
        );
    }
    file
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hull::vrep_to_hrep;

    #[test]
    fn segment() {
        let f = parse("POINTS\n1 0\n1 1\n").unwrap();
        let p = to_vertex_set(&f).unwrap();
        assert_eq!(p.to_string(), "{0 1}");
    }

    #[test]
    fn canonical_form() {
        let f = parse("FACETS\n0  1 0\n\n\nPOINTS\n1 0 0\n 1 1/2   0\n").unwrap();
        assert_eq!(write(&f), "POINTS\n1 0 0\n1 1/2 0\n\nFACETS\n0 1 0\n");
        let f = parse("POINTS\n1 2/4 0\n").unwrap();
        assert_eq!(write(&f), "POINTS\n1 1/2 0\n");
    }

    #[test]
    fn errors() {
        assert!(matches!(parse("GRAPH\n1 0\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse("POINTS\n2 0\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse("1 0\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse("POINTS\n1 0\n1 0 1\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse("POINTS\n1 x\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse("POINTS\n1 1/0\n"), Err(Error::Parse { .. })));
        assert!(parse("POINTS\n1 0\n\nPOINTS\n1 1\n").is_err());
        let f = parse("POINTS\n1 0 1\n1 2 0\n").unwrap();
        let e = to_vertex_set(&f).unwrap_err();
        assert!(e.to_string().contains("row 2"), "{e}");
    }

    #[test]
    fn polytope_round_trip() {
        let p = VertexSet01::from_strs(&["000", "011", "101", "110"]).unwrap();
        let h = vrep_to_hrep(&p).unwrap();
        let f = from_polytope(&p, Some(&h));
        let text = write(&f);
        let g = parse(&text).unwrap();
        assert_eq!(g, f);
        assert_eq!(write(&g), text);
        assert_eq!(to_vertex_set(&g).unwrap(), p);
        assert_eq!(to_hrep(&g).unwrap().unwrap(), h);
        assert!(text.ends_with("DIMENSION\n3\n"));
    }
}
