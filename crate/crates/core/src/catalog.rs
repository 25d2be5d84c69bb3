//! The sixteen ℤ-classes of finite non-cyclic subgroups of SL(3, ℤ).

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{KummerError, Result};
use crate::group::{closure, FinMatGroup};
use crate::matrix::IntMat3;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub generators: Vec<IntMat3>,
}

impl CatalogEntry {
    pub fn group(&self) -> Result<FinMatGroup> {
        closure(&self.generators)
    }
}

const fn m(rows: [[i64; 3]; 3]) -> IntMat3 {
    IntMat3(rows)
}

const P: IntMat3 = m([[0, 0, 1], [1, 0, 0], [0, 1, 0]]);

const TABLE: [(&str, [IntMat3; 2]); 16] = [
    (
        "D4(1)",
        [
            m([[-1, 0, 0], [0, -1, 0], [0, 0, 1]]),
            m([[1, 0, 0], [0, -1, 0], [0, 0, -1]]),
        ],
    ),
    (
        "D4(2)",
        [
            m([[-1, 0, 0], [0, -1, 0], [0, 0, 1]]),
            m([[0, 1, 0], [1, 0, 0], [0, 0, -1]]),
        ],
    ),
    (
        "D4(3)",
        [
            m([[-1, 0, 0], [0, 0, -1], [0, -1, 0]]),
            m([[1, 1, 1], [0, -1, 0], [0, 0, -1]]),
        ],
    ),
    (
        "D4(4)",
        [
            m([[-1, -1, -1], [0, 0, 1], [0, 1, 0]]),
            m([[0, 0, 1], [-1, -1, -1], [1, 0, 0]]),
        ],
    ),
    (
        "D6(1)",
        [
            m([[-1, 0, 0], [1, 1, 0], [0, 0, -1]]),
            m([[-1, -1, 0], [1, 0, 0], [0, 0, 1]]),
        ],
    ),
    (
        "D6(2)",
        [
            m([[0, -1, 0], [-1, 0, 0], [0, 0, -1]]),
            m([[-1, 1, 0], [-1, 0, 0], [0, 0, 1]]),
        ],
    ),
    (
        "D6(3)",
        [
            m([[-1, 0, 0], [0, 0, -1], [0, -1, 0]]),
            m([[0, -1, 0], [0, 0, 1], [-1, 0, 0]]),
        ],
    ),
    (
        "D8(1)",
        [
            m([[-1, 0, 0], [0, -1, 0], [0, 0, 1]]),
            m([[0, 0, -1], [0, 1, 0], [1, 0, 0]]),
        ],
    ),
    (
        "D8(2)",
        [
            m([[-1, -1, -1], [0, 0, 1], [0, 1, 0]]),
            m([[0, -1, 0], [0, 0, -1], [1, 1, 1]]),
        ],
    ),
    (
        "D12",
        [
            m([[0, 1, 0], [1, 0, 0], [0, 0, -1]]),
            m([[0, 1, 0], [-1, 1, 0], [0, 0, 1]]),
        ],
    ),
    ("A4(1)", [m([[-1, 0, 0], [0, -1, 0], [0, 0, 1]]), P]),
    ("A4(2)", [m([[-1, -1, -1], [0, 0, 1], [0, 1, 0]]), P]),
    ("A4(3)", [m([[-1, 0, 0], [-1, 0, 1], [-1, 1, 0]]), P]),
    ("S4(1)", [m([[0, 1, 0], [1, 0, 0], [0, 0, -1]]), P]),
    ("S4(2)", [m([[-1, 0, 0], [0, -1, 0], [1, 1, 1]]), P]),
    (
        "S4(3)",
        [
            m([[-1, 0, 0], [0, 0, -1], [0, -1, 0]]),
            m([[-1, 0, 1], [-1, 1, 0], [-1, 0, 0]]),
        ],
    ),
];

/// All entries in table order.
pub fn catalog() -> Vec<CatalogEntry> {
    TABLE
        .iter()
        .map(|(name, gens)| CatalogEntry {
            name: name.to_string(),
            generators: gens.to_vec(),
        })
        .collect()
}

pub fn names() -> Vec<&'static str> {
    TABLE.iter().map(|(n, _)| *n).collect()
}

pub fn lookup(name: &str) -> Result<CatalogEntry> {
    catalog()
        .into_iter()
        .find(|e| e.name.eq_ignore_ascii_case(name))
        .ok_or_else(|| KummerError::UnknownGroup(name.to_string()))
}

/// Reads `{"name": ..., "generators": [[[..],[..],[..]], ...]}`.
pub fn parse_generators(text: &str) -> Result<CatalogEntry> {
    serde_json::from_str(text).map_err(|e| KummerError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

pub fn load_generators(path: &Path) -> Result<CatalogEntry> {
    parse_generators(&std::fs::read_to_string(path)?)
}

pub fn to_json(entry: &CatalogEntry) -> String {
    serde_json::to_string_pretty(entry).expect("catalog entries serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_match_names() {
        for e in catalog() {
            let g = e.group().unwrap();
            let expected = match &e.name[..2] {
                "D4" => 4,
                "D6" => 6,
                "D8" => 8,
                "D1" => 12,
                "A4" => 12,
                "S4" => 24,
                _ => unreachable!(),
            };
            assert_eq!(g.order(), expected, "{}", e.name);
        }
    }

    #[test]
    fn lookup_is_case_insensitive() {
        assert_eq!(lookup("s4(2)").unwrap().name, "S4(2)");
        assert!(matches!(lookup("S5"), Err(KummerError::UnknownGroup(_))));
    }

    #[test]
    fn json_round_trip() {
        let e = lookup("D12").unwrap();
        assert_eq!(parse_generators(&to_json(&e)).unwrap(), e);
    }

    #[test]
    fn parse_errors_carry_position() {
        let err = parse_generators("{\"name\": \"x\",\n \"generators\": [[[1,0]]]}").unwrap_err();
        match err {
            KummerError::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }
}
