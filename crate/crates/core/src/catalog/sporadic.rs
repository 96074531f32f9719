use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

/// The 26 sporadic simple groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sporadic {
    M11,
    M12,
    M22,
    M23,
    M24,
    J1,
    J2,
    J3,
    J4,
    HS,
    McL,
    Suz,
    Co1,
    Co2,
    Co3,
    He,
    Ru,
    ON,
    Fi22,
    Fi23,
    Fi24,
    HN,
    Ly,
    Th,
    B,
    M,
}

struct Entry {
    group: Sporadic,
    name: &'static str,
    factors: &'static [(u64, u32)],
    #[cfg_attr(not(test), allow(dead_code))]
    decimal: &'static str,
    out: u64,
}

// Orders are stored twice, as a factorisation and as a decimal literal; the
// unit tests require the two to agree.
const TABLE: [Entry; 26] = [
    Entry { group: Sporadic::M11, name: "M11", factors: &[(2, 4), (3, 2), (5, 1), (11, 1)], decimal: "7920", out: 1 },
    Entry { group: Sporadic::M12, name: "M12", factors: &[(2, 6), (3, 3), (5, 1), (11, 1)], decimal: "95040", out: 2 },
    Entry { group: Sporadic::M22, name: "M22", factors: &[(2, 7), (3, 2), (5, 1), (7, 1), (11, 1)], decimal: "443520", out: 2 },
    Entry { group: Sporadic::M23, name: "M23", factors: &[(2, 7), (3, 2), (5, 1), (7, 1), (11, 1), (23, 1)], decimal: "10200960", out: 1 },
    Entry { group: Sporadic::M24, name: "M24", factors: &[(2, 10), (3, 3), (5, 1), (7, 1), (11, 1), (23, 1)], decimal: "244823040", out: 1 },
    Entry { group: Sporadic::J1, name: "J1", factors: &[(2, 3), (3, 1), (5, 1), (7, 1), (11, 1), (19, 1)], decimal: "175560", out: 1 },
    Entry { group: Sporadic::J2, name: "J2", factors: &[(2, 7), (3, 3), (5, 2), (7, 1)], decimal: "604800", out: 2 },
    Entry { group: Sporadic::J3, name: "J3", factors: &[(2, 7), (3, 5), (5, 1), (17, 1), (19, 1)], decimal: "50232960", out: 2 },
    Entry {
        group: Sporadic::J4,
        name: "J4",
        factors: &[(2, 21), (3, 3), (5, 1), (7, 1), (11, 3), (23, 1), (29, 1), (31, 1), (37, 1), (43, 1)],
        decimal: "86775571046077562880",
        out: 1,
    },
    Entry { group: Sporadic::HS, name: "HS", factors: &[(2, 9), (3, 2), (5, 3), (7, 1), (11, 1)], decimal: "44352000", out: 2 },
    Entry { group: Sporadic::McL, name: "McL", factors: &[(2, 7), (3, 6), (5, 3), (7, 1), (11, 1)], decimal: "898128000", out: 2 },
    Entry {
        group: Sporadic::Suz,
        name: "Suz",
        factors: &[(2, 13), (3, 7), (5, 2), (7, 1), (11, 1), (13, 1)],
        decimal: "448345497600",
        out: 2,
    },
    Entry {
        group: Sporadic::Co1,
        name: "Co1",
        factors: &[(2, 21), (3, 9), (5, 4), (7, 2), (11, 1), (13, 1), (23, 1)],
        decimal: "4157776806543360000",
        out: 1,
    },
    Entry {
        group: Sporadic::Co2,
        name: "Co2",
        factors: &[(2, 18), (3, 6), (5, 3), (7, 1), (11, 1), (23, 1)],
        decimal: "42305421312000",
        out: 1,
    },
    Entry {
        group: Sporadic::Co3,
        name: "Co3",
        factors: &[(2, 10), (3, 7), (5, 3), (7, 1), (11, 1), (23, 1)],
        decimal: "495766656000",
        out: 1,
    },
    Entry { group: Sporadic::He, name: "He", factors: &[(2, 10), (3, 3), (5, 2), (7, 3), (17, 1)], decimal: "4030387200", out: 2 },
    Entry {
        group: Sporadic::Ru,
        name: "Ru",
        factors: &[(2, 14), (3, 3), (5, 3), (7, 1), (13, 1), (29, 1)],
        decimal: "145926144000",
        out: 1,
    },
    Entry {
        group: Sporadic::ON,
        name: "O'N",
        factors: &[(2, 9), (3, 4), (5, 1), (7, 3), (11, 1), (19, 1), (31, 1)],
        decimal: "460815505920",
        out: 2,
    },
    Entry {
        group: Sporadic::Fi22,
        name: "Fi22",
        factors: &[(2, 17), (3, 9), (5, 2), (7, 1), (11, 1), (13, 1)],
        decimal: "64561751654400",
        out: 2,
    },
    Entry {
        group: Sporadic::Fi23,
        name: "Fi23",
        factors: &[(2, 18), (3, 13), (5, 2), (7, 1), (11, 1), (13, 1), (17, 1), (23, 1)],
        decimal: "4089470473293004800",
        out: 1,
    },
    Entry {
        group: Sporadic::Fi24,
        name: "Fi24'",
        factors: &[(2, 21), (3, 16), (5, 2), (7, 3), (11, 1), (13, 1), (17, 1), (23, 1), (29, 1)],
        decimal: "1255205709190661721292800",
        out: 2,
    },
    Entry {
        group: Sporadic::HN,
        name: "HN",
        factors: &[(2, 14), (3, 6), (5, 6), (7, 1), (11, 1), (19, 1)],
        decimal: "273030912000000",
        out: 2,
    },
    Entry {
        group: Sporadic::Ly,
        name: "Ly",
        factors: &[(2, 8), (3, 7), (5, 6), (7, 1), (11, 1), (31, 1), (37, 1), (67, 1)],
        decimal: "51765179004000000",
        out: 1,
    },
    Entry {
        group: Sporadic::Th,
        name: "Th",
        factors: &[(2, 15), (3, 10), (5, 3), (7, 2), (13, 1), (19, 1), (31, 1)],
        decimal: "90745943887872000",
        out: 1,
    },
    Entry {
        group: Sporadic::B,
        name: "B",
        factors: &[
            (2, 41),
            (3, 13),
            (5, 6),
            (7, 2),
            (11, 1),
            (13, 1),
            (17, 1),
            (19, 1),
            (23, 1),
            (31, 1),
            (47, 1),
        ],
        decimal: "4154781481226426191177580544000000",
        out: 1,
    },
    Entry {
        group: Sporadic::M,
        name: "M",
        factors: &[
            (2, 46),
            (3, 20),
            (5, 9),
            (7, 6),
            (11, 2),
            (13, 3),
            (17, 1),
            (19, 1),
            (23, 1),
            (29, 1),
            (31, 1),
            (41, 1),
            (47, 1),
            (59, 1),
            (71, 1),
        ],
        decimal: "808017424794512875886459904961710757005754368000000000",
        out: 1,
    },
];

impl Sporadic {
    pub const ALL: [Sporadic; 26] = [
        Sporadic::M11,
        Sporadic::M12,
        Sporadic::M22,
        Sporadic::M23,
        Sporadic::M24,
        Sporadic::J1,
        Sporadic::J2,
        Sporadic::J3,
        Sporadic::J4,
        Sporadic::HS,
        Sporadic::McL,
        Sporadic::Suz,
        Sporadic::Co1,
        Sporadic::Co2,
        Sporadic::Co3,
        Sporadic::He,
        Sporadic::Ru,
        Sporadic::ON,
        Sporadic::Fi22,
        Sporadic::Fi23,
        Sporadic::Fi24,
        Sporadic::HN,
        Sporadic::Ly,
        Sporadic::Th,
        Sporadic::B,
        Sporadic::M,
    ];

    fn entry(self) -> &'static Entry {
        &TABLE[self as usize]
    }

    pub fn name(self) -> &'static str {
        self.entry().name
    }

    pub fn from_name(name: &str) -> Option<Sporadic> {
        TABLE.iter().find(|e| e.name == name).map(|e| e.group)
    }

    pub fn order(self) -> BigUint {
        self.entry()
            .factors
            .iter()
            .fold(BigUint::one(), |acc, &(p, k)| acc * BigUint::from(p).pow(k))
    }

    pub fn out_order(self) -> u64 {
        self.entry().out
    }
}
