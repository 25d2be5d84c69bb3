//! Reference values for the sixteen catalog groups: Poincaré polynomials,
//! strata polynomials, 0-stratum censuses and curve tables.
//!
//! Curve rows name a generator of one cyclic subgroup in the class; the
//! quotient column lists `(count, quotient curve, W_K)`.

use crate::group::IsoType;
use crate::matrix::IntMat3;
use crate::strata::QuotientType;

use IsoType::*;
use QuotientType::{EllipticCurve as A, ProjectiveLine as P1};

#[derive(Clone, Copy, Debug)]
pub struct GoldenRow {
    pub iso: IsoType,
    pub generator: IntMat3,
    pub components: usize,
    pub weyl: &'static str,
    pub quotient: &'static [(usize, QuotientType, &'static str)],
}

#[derive(Clone, Copy, Debug)]
pub struct GoldenCase {
    pub name: &'static str,
    pub p_y: &'static str,
    pub p3: &'static str,
    pub p2: &'static str,
    pub p1: &'static str,
    pub p_x: &'static str,
    pub census: &'static [(IsoType, usize)],
    pub rows: &'static [GoldenRow],
}

const fn m(rows: [[i64; 3]; 3]) -> IntMat3 {
    IntMat3(rows)
}

const fn row(
    iso: IsoType,
    generator: IntMat3,
    components: usize,
    weyl: &'static str,
    quotient: &'static [(usize, QuotientType, &'static str)],
) -> GoldenRow {
    GoldenRow {
        iso,
        generator,
        components,
        weyl,
        quotient,
    }
}

const PY_D4: &str = "t^6 + 3t^4 + 8t^3 + 3t^2 + 1";
const PY_D6: &str = "t^6 + 2t^4 + 6t^3 + 2t^2 + 1";
const PY_S4: &str = "t^6 + t^4 + 4t^3 + t^2 + 1";
const P: IntMat3 = m([[0, 0, 1], [1, 0, 0], [0, 1, 0]]);

pub const CASES: [GoldenCase; 16] = [
    GoldenCase {
        name: "D4(1)",
        p_y: PY_D4,
        p3: "t^6 + 3t^4 + 8t^3 - 45t^2 + 81",
        p2: "48t^4 - 96t^2 - 144",
        p1: "192t^2 + 64",
        p_x: "t^6 + 51t^4 + 8t^3 + 51t^2 + 1",
        census: &[(D4, 64)],
        rows: &[
            row(
                Z2,
                m([[-1, 0, 0], [0, -1, 0], [0, 0, 1]]),
                16,
                "Z2",
                &[(16, P1, "Z2")],
            ),
            row(
                Z2,
                m([[1, 0, 0], [0, -1, 0], [0, 0, -1]]),
                16,
                "Z2",
                &[(16, P1, "Z2")],
            ),
            row(
                Z2,
                m([[-1, 0, 0], [0, 1, 0], [0, 0, -1]]),
                16,
                "Z2",
                &[(16, P1, "Z2")],
            ),
        ],
    },
    GoldenCase {
        name: "D4(2)",
        p_y: PY_D4,
        p3: "t^6 + 3t^4 + 8t^3 - 15t^2 - 12t + 15",
        p2: "18t^4 + 12t^3 - 12t^2 + 12t - 30",
        p1: "48t^2 + 16",
        p_x: "t^6 + 21t^4 + 20t^3 + 21t^2 + 1",
        census: &[(D4, 16)],
        rows: &[
            row(
                Z2,
                m([[-1, 0, 0], [0, -1, 0], [0, 0, 1]]),
                16,
                "Z2",
                &[(4, P1, "Z2"), (6, A, "0")],
            ),
            row(
                Z2,
                m([[0, 1, 0], [1, 0, 0], [0, 0, -1]]),
                4,
                "Z2",
                &[(4, P1, "Z2")],
            ),
            row(
                Z2,
                m([[0, -1, 0], [-1, 0, 0], [0, 0, -1]]),
                4,
                "Z2",
                &[(4, P1, "Z2")],
            ),
        ],
    },
    GoldenCase {
        name: "D4(3)",
        p_y: PY_D4,
        p3: "t^6 + 3t^4 + 8t^3 - 9t^2 + 21",
        p2: "12t^4 - 24t^2 - 36",
        p1: "48t^2 + 16",
        p_x: "t^6 + 15t^4 + 8t^3 + 15t^2 + 1",
        census: &[(D4, 16)],
        rows: &[
            row(
                Z2,
                m([[-1, 0, 0], [0, 0, -1], [0, -1, 0]]),
                4,
                "Z2",
                &[(4, P1, "Z2")],
            ),
            row(
                Z2,
                m([[1, 1, 1], [0, -1, 0], [0, 0, -1]]),
                4,
                "Z2",
                &[(4, P1, "Z2")],
            ),
            row(
                Z2,
                m([[-1, -1, -1], [0, 0, 1], [0, 1, 0]]),
                4,
                "Z2",
                &[(4, P1, "Z2")],
            ),
        ],
    },
    GoldenCase {
        name: "D4(4)",
        p_y: PY_D4,
        p3: "t^6 + 3t^4 + 8t^3 - 9t^2 + 21",
        p2: "12t^4 - 24t^2 - 36",
        p1: "48t^2 + 16",
        p_x: "t^6 + 15t^4 + 8t^3 + 15t^2 + 1",
        census: &[(D4, 16)],
        rows: &[
            row(
                Z2,
                m([[-1, -1, -1], [0, 0, 1], [0, 1, 0]]),
                4,
                "Z2",
                &[(4, P1, "Z2")],
            ),
            row(
                Z2,
                m([[0, 0, 1], [-1, -1, -1], [1, 0, 0]]),
                4,
                "Z2",
                &[(4, P1, "Z2")],
            ),
            row(
                Z2,
                m([[0, 1, 0], [1, 0, 0], [-1, -1, -1]]),
                4,
                "Z2",
                &[(4, P1, "Z2")],
            ),
        ],
    },
    GoldenCase {
        name: "D6(1)",
        p_y: PY_D6,
        p3: "t^6 + 2t^4 + 6t^3 - 7t^2 - 16t - 4",
        p2: "13t^4 + 26t^3 + 14t^2 + 16t + 1",
        p1: "8t^2 + 4",
        p_x: "t^6 + 15t^4 + 32t^3 + 15t^2 + 1",
        census: &[(D6, 4)],
        rows: &[
            row(Z2, m([[-1, 0, 0], [1, 1, 0], [0, 0, -1]]), 4, "0", &[(4, A, "0")]),
            row(
                Z3,
                m([[-1, -1, 0], [1, 0, 0], [0, 0, 1]]),
                9,
                "Z2",
                &[(1, P1, "Z2"), (4, A, "0")],
            ),
        ],
    },
    GoldenCase {
        name: "D6(2)",
        p_y: PY_D6,
        p3: "t^6 + 2t^4 + 6t^3 - 11t^2 - 8t + 24",
        p2: "13t^4 + 26t^3 - 46t^2 + 8t - 59",
        p1: "72t^2 + 36",
        p_x: "t^6 + 15t^4 + 32t^3 + 15t^2 + 1",
        census: &[(D6, 36)],
        rows: &[
            row(
                Z2,
                m([[0, -1, 0], [-1, 0, 0], [0, 0, -1]]),
                4,
                "0",
                &[(4, A, "0")],
            ),
            row(
                Z3,
                m([[-1, 1, 0], [-1, 0, 0], [0, 0, 1]]),
                9,
                "Z2",
                &[(9, P1, "Z2")],
            ),
        ],
    },
    GoldenCase {
        name: "D6(3)",
        p_y: PY_D6,
        // the 6t^3 term is forced by P_Y
        p3: "t^6 + 2t^4 + 6t^3 - 3t^2 - 8t",
        p2: "5t^4 + 10t^3 + 2t^2 + 8t - 3",
        p1: "8t^2 + 4",
        p_x: "t^6 + 7t^4 + 16t^3 + 7t^2 + 1",
        census: &[(D6, 4)],
        rows: &[
            row(
                Z2,
                m([[-1, 0, 0], [0, 0, -1], [0, -1, 0]]),
                4,
                "0",
                &[(4, A, "0")],
            ),
            row(
                Z3,
                m([[0, -1, 0], [0, 0, 1], [-1, 0, 0]]),
                1,
                "Z2",
                &[(1, P1, "Z2")],
            ),
        ],
    },
    GoldenCase {
        name: "D8(1)",
        p_y: PY_D6,
        p3: "t^6 + 2t^4 + 6t^3 - 28t^2 + 51",
        p2: "34t^4 + 8t^3 - 72t^2 - 90",
        p1: "136t^2 + 40",
        p_x: "t^6 + 36t^4 + 14t^3 + 36t^2 + 1",
        census: &[(D4, 24), (D8, 16)],
        rows: &[
            row(
                Z2,
                m([[-1, 0, 0], [0, -1, 0], [0, 0, 1]]),
                16,
                "Z2",
                &[(16, P1, "Z2")],
            ),
            row(
                Z2,
                m([[0, 0, -1], [0, -1, 0], [-1, 0, 0]]),
                4,
                "Z2",
                &[(4, P1, "Z2")],
            ),
            row(
                Z2,
                m([[-1, 0, 0], [0, 1, 0], [0, 0, -1]]),
                16,
                "Z2xZ2",
                &[(6, P1, "Z2")],
            ),
            row(
                Z4,
                m([[0, 0, -1], [0, 1, 0], [1, 0, 0]]),
                4,
                "Z2",
                &[(4, P1, "Z2")],
            ),
        ],
    },
    GoldenCase {
        name: "D8(2)",
        p_y: PY_D6,
        p3: "t^6 + 2t^4 + 6t^3 - 10t^2 + 21",
        p2: "13t^4 + 2t^3 - 27t^2 - 36",
        p1: "52t^2 + 16",
        p_x: "t^6 + 15t^4 + 8t^3 + 15t^2 + 1",
        census: &[(D4, 12), (D8, 4)],
        rows: &[
            row(
                Z2,
                m([[-1, -1, -1], [0, 0, 1], [0, 1, 0]]),
                4,
                "Z2",
                &[(4, P1, "Z2")],
            ),
            row(
                Z2,
                m([[-1, 0, 0], [1, 1, 1], [0, 0, -1]]),
                4,
                "Z2",
                &[(4, P1, "Z2")],
            ),
            row(
                Z2,
                m([[0, 0, 1], [-1, -1, -1], [1, 0, 0]]),
                4,
                "Z2xZ2",
                &[(3, P1, "Z2xZ2")],
            ),
            row(
                Z4,
                m([[0, -1, 0], [0, 0, -1], [1, 1, 1]]),
                1,
                "Z2",
                &[(1, P1, "Z2")],
            ),
        ],
    },
    GoldenCase {
        name: "D12",
        p_y: PY_D6,
        p3: "t^6 + 2t^4 + 6t^3 - 15t^2 - 2t + 32",
        p2: "19t^4 + 14t^3 - 52t^2 + 2t - 63",
        p1: "88t^2 + 32",
        p_x: "t^6 + 21t^4 + 20t^3 + 21t^2 + 1",
        census: &[(D4, 12), (D6, 16), (D12, 4)],
        rows: &[
            row(
                Z2,
                m([[-1, 0, 0], [-1, 1, 0], [0, 0, -1]]),
                4,
                "Z2",
                &[(4, P1, "Z2")],
            ),
            row(
                Z2,
                m([[-1, 1, 0], [0, 1, 0], [0, 0, -1]]),
                4,
                "Z2",
                &[(4, P1, "Z2")],
            ),
            row(
                Z2,
                m([[-1, 0, 0], [0, -1, 0], [0, 0, 1]]),
                16,
                "D6",
                &[(3, P1, "Z2"), (1, A, "0")],
            ),
            row(
                Z3,
                m([[-1, 1, 0], [-1, 0, 0], [0, 0, 1]]),
                9,
                "Z2xZ2",
                &[(4, P1, "Z2")],
            ),
            row(
                Z6,
                m([[0, 1, 0], [-1, 1, 0], [0, 0, 1]]),
                1,
                "Z2",
                &[(1, P1, "Z2")],
            ),
        ],
    },
    GoldenCase {
        name: "A4(1)",
        p_y: PY_S4,
        p3: "t^6 + t^4 + 4t^3 - 16t^2 - 2t + 28",
        p2: "18t^4 + 4t^3 - 37t^2 + 2t - 51",
        p1: "72t^2 + 24",
        p_x: "t^6 + 19t^4 + 8t^3 + 19t^2 + 1",
        census: &[(D4, 20), (A4, 4)],
        rows: &[
            row(
                Z2,
                m([[-1, 0, 0], [0, -1, 0], [0, 0, 1]]),
                16,
                "Z2",
                &[(16, P1, "Z2")],
            ),
            row(Z3, P, 1, "0", &[(1, A, "0")]),
        ],
    },
    GoldenCase {
        name: "A4(2)",
        p_y: PY_S4,
        p3: "t^6 + t^4 + 4t^3 - 4t^2 - 2t + 12",
        p2: "6t^4 + 4t^3 - 37t^2 + 2t - 27",
        p1: "48t^2 + 16",
        p_x: "t^6 + 7t^4 + 8t^3 + 7t^2 + 1",
        census: &[(A4, 16)],
        rows: &[
            row(
                Z2,
                m([[-1, -1, -1], [0, 0, 1], [0, 1, 0]]),
                4,
                "Z2",
                &[(4, P1, "Z2")],
            ),
            row(Z3, P, 1, "0", &[(1, A, "0")]),
        ],
    },
    GoldenCase {
        name: "A4(3)",
        p_y: PY_S4,
        p3: "t^6 + t^4 + 4t^3 - 4t^2 - 2t + 7",
        p2: "6t^4 + 4t^3 - 7t^2 + 2t - 12",
        p1: "18t^2 + 6",
        p_x: "t^6 + 7t^4 + 8t^3 + 7t^2 + 1",
        census: &[(D4, 5), (A4, 1)],
        rows: &[
            row(
                Z2,
                m([[-1, 0, 0], [-1, 0, 1], [-1, 1, 0]]),
                4,
                "Z2",
                &[(4, P1, "Z2")],
            ),
            row(Z3, P, 1, "0", &[(1, A, "0")]),
        ],
    },
    GoldenCase {
        name: "S4(1)",
        p_y: PY_S4,
        p3: "t^6 + t^4 + 4t^3 - 14t^2 + 26",
        p2: "19t^4 + 10t^3 - 42t^2 - 45",
        p1: "76t^2 + 20",
        p_x: "t^6 + 20t^4 + 14t^3 + 20t^2 + 1",
        // D8 rather than D6: P1 = 76t^2 + 20 requires it
        census: &[(D4, 4), (D8, 12), (S4, 4)],
        rows: &[
            row(
                Z2,
                m([[0, 1, 0], [1, 0, 0], [0, 0, -1]]),
                4,
                "Z2",
                &[(4, P1, "Z2")],
            ),
            row(
                Z2,
                m([[-1, 0, 0], [0, -1, 0], [0, 0, 1]]),
                16,
                "Z2xZ2",
                &[(6, P1, "Z2")],
            ),
            row(Z3, P, 1, "Z2", &[(1, P1, "Z2")]),
            row(
                Z4,
                m([[0, -1, 0], [1, 0, 0], [0, 0, 1]]),
                4,
                "Z2",
                &[(4, P1, "Z2")],
            ),
        ],
    },
    GoldenCase {
        name: "S4(2)",
        p_y: PY_S4,
        p3: "t^6 + t^4 + 4t^3 - 8t^2 + 18",
        p2: "10t^4 + 4t^3 - 33t^2 - 33",
        p1: "52t^2 + 16",
        p_x: "t^6 + 11t^4 + 8t^3 + 11t^2 + 1",
        census: &[(D4, 6), (A4, 6), (S4, 4)],
        rows: &[
            row(
                Z2,
                m([[-1, 0, 0], [0, -1, 0], [1, 1, 1]]),
                4,
                "Z2",
                &[(4, P1, "Z2")],
            ),
            row(
                Z2,
                m([[0, 0, 1], [-1, -1, -1], [1, 0, 0]]),
                4,
                "Z2xZ2",
                &[(3, P1, "Z2xZ2")],
            ),
            row(Z3, P, 1, "Z2", &[(1, P1, "Z2")]),
            row(
                Z4,
                m([[0, -1, 0], [0, 0, -1], [1, 1, 1]]),
                1,
                "Z2",
                &[(1, P1, "Z2")],
            ),
        ],
    },
    GoldenCase {
        name: "S4(3)",
        p_y: PY_S4,
        p3: "t^6 + t^4 + 4t^3 - 8t^2 + 17",
        p2: "10t^4 + 4t^3 - 24t^2 - 30",
        p1: "43t^2 + 14",
        p_x: "t^6 + 11t^4 + 8t^3 + 11t^2 + 1",
        census: &[(D4, 7), (D6, 3), (D8, 3), (S4, 1)],
        rows: &[
            row(
                Z2,
                m([[-1, 0, 0], [0, 0, -1], [0, -1, 0]]),
                4,
                "Z2",
                &[(4, P1, "Z2")],
            ),
            row(
                Z2,
                m([[-1, 0, 0], [-1, 0, 1], [-1, 1, 0]]),
                4,
                "Z2xZ2",
                &[(3, P1, "Z2xZ2")],
            ),
            row(
                Z3,
                m([[-1, 0, 1], [-1, 1, 0], [-1, 0, 0]]),
                1,
                "Z2",
                &[(1, P1, "Z2")],
            ),
            row(
                Z4,
                m([[0, -1, 1], [0, 0, 1], [-1, 0, 1]]),
                1,
                "Z2",
                &[(1, P1, "Z2")],
            ),
        ],
    },
];

pub fn case(name: &str) -> Option<&'static GoldenCase> {
    CASES.iter().find(|c| c.name == name)
}
