//! The published tables of `D^{N_f}_{m,2n}` for `N_f = 0, 2, 3`, exactly as
//! printed, and the corrections needed to make them self-consistent.

/// One printed row: `(m, n)` for the monomial `p^m S^(2n)`, the value, and
/// the `H`-combination as `(k, weight)` pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrintedRow {
    pub m: u64,
    pub n: u64,
    pub value: &'static str,
    pub combo: &'static [(usize, &'static str)],
}

/// A misprinted `H`-weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Erratum {
    pub nf: u32,
    pub m: u64,
    pub n: u64,
    pub index: usize,
    pub printed: &'static str,
    pub corrected: &'static str,
}

const fn row(m: u64, n: u64, value: &'static str, combo: &'static [(usize, &'static str)]) -> PrintedRow {
    PrintedRow { m, n, value, combo }
}

const NF0: &[PrintedRow] = &[
    row(0, 0, "-1", &[(1, "-1/4"), (0, "6")]),
    row(0, 2, "-3/16", &[(2, "-49/64"), (1, "9/4"), (0, "-2133/64")]),
    row(1, 1, "-5/16", &[(2, "-7/64"), (1, "1/4"), (0, "-195/64")]),
    row(2, 0, "-19/16", &[(2, "-1/64"), (1, "-1/4"), (0, "411/64")]),
    row(0, 4, "-232/256", &[(3, "-14641/1024"), (2, "2401/128"), (1, "44631/1024"), (0, "108741/128")]),
    row(1, 3, "-152/256", &[(3, "-1331/1024"), (2, "-49/128"), (1, "10341/1024"), (0, "-1749/128")]),
    row(2, 2, "-136/256", &[(3, "-121/1024"), (2, "-91/128"), (1, "2895/1024"), (0, "-3687/128")]),
    row(3, 1, "-184/256", &[(3, "-11/1024"), (2, "-29/128"), (1, "589/1024"), (0, "-753/128")]),
    row(4, 0, "-680/256", &[(3, "-1/1024"), (2, "-7/128"), (1, "-505/1024"), (0, "1725/128")]),
    row(0, 6, "-69525/4096", &[(4, "-11390625/16384"), (2, "44838675/16384"), (1, "6075/4"), (0, "-76478175/2048")]),
    row(
        1,
        5,
        "-26907/4096",
        &[(4, "-759375/16384"), (3, "-43923/512"), (2, "4833213/16384"), (1, "185733/512"), (0, "5340591/2048")],
    ),
    row(
        2,
        4,
        "-12853/4096",
        &[(4, "-50625/16384"), (3, "-9317/512"), (2, "462707/16384"), (1, "43587/512"), (0, "1179489/2048")],
    ),
    row(
        3,
        3,
        "-7803/4096",
        &[(4, "-3375/16384"), (3, "-363/128"), (2, "861/16384"), (1, "2829/128"), (0, "-69201/2048")],
    ),
    row(
        4,
        2,
        "-6357/4096",
        &[(4, "-225/16384"), (3, "-99/256"), (2, "-21549/16384"), (1, "1653/256"), (0, "-108639/2048")],
    ),
    row(
        5,
        1,
        "-8155/4096",
        &[(4, "-15/16384"), (3, "-25/512"), (2, "-9475/16384"), (1, "815/512"), (0, "-29265/2048")],
    ),
    row(6, 0, "-29557/4096", &[(4, "-1/16384"), (3, "-3/512"), (2, "-3021/16384"), (1, "-619/512"), (0, "71649/2048")]),
];

const NF2: &[PrintedRow] = &[
    row(0, 0, "-3", &[(2, "-1/4"), (0, "27/4")]),
    row(0, 1, "0", &[(3, "-11/16"), (1, "77/16")]),
    row(1, 0, "0", &[(3, "-1/16"), (1, "7/16")]),
    row(0, 2, "-21/16", &[(4, "-225/64"), (2, "1043/64"), (0, "-567/8")]),
    row(1, 1, "-27/16", &[(4, "-15/64"), (2, "61/64"), (0, "-9/8")]),
    row(2, 0, "-53/16", &[(4, "-1/64"), (2, "-13/64"), (0, "57/8")]),
    row(0, 3, "0", &[(5, "-6859/256"), (3, "22869/256"), (1, "12555/128")]),
    row(1, 2, "0", &[(5, "-361/256"), (3, "759/256"), (1, "2217/128")]),
    row(2, 1, "0", &[(5, "-19/256"), (3, "-115/256"), (1, "659/128")]),
    row(3, 0, "0", &[(5, "-1/256"), (3, "-33/256"), (1, "129/128")]),
    row(0, 4, "-3955/256", &[(6, "-279841/1024"), (4, "664875/1024"), (2, "366667/256"), (0, "4203535/1024")]),
    // the last weight carries no H label in print; it is read as the H_0 weight
    row(1, 3, "-1925/256", &[(6, "-12167/1024"), (4, "10125/1024"), (2, "37709/256"), (0, "-195895/1024")]),
    row(2, 2, "-1219/256", &[(6, "-529/1024"), (4, "-2565/1024"), (2, "5051/256"), (0, "-61409/1024")]),
    row(3, 1, "-949/256", &[(6, "-23/1024"), (4, "-451/256"), (2, "541/256"), (0, "-1735/1024")]),
    row(4, 0, "-1811/256", &[(6, "-1/1024"), (4, "-53/1024"), (2, "-85/256"), (0, "15151/1024")]),
];

const NF3: &[PrintedRow] = &[
    row(0, 0, "-5/4", &[(4, "-1/16"), (2, "3/16"), (0, "3/2")]),
    row(0, 1, "-95/96", &[(6, "-23/128"), (4, "119/384"), (2, "45/32"), (0, "313/128")]),
    row(1, 0, "45/32", &[(6, "-1/128"), (4, "11/128"), (2, "-5/32"), (0, "-209/128")]),
    row(0, 2, "-1787/768", &[(8, "-961/1024"), (6, "851/1024"), (4, "133/24"), (2, "4587/1024"), (0, "-171/128")]),
    row(1, 1, "201/256", &[(8, "-31/1024"), (6, "743/3076"), (4, "-5/24"), (2, "-4577/3072"), (0, "-991/384")]),
    row(2, 0, "-489/256", &[(8, "-1/1024"), (6, "19/1024"), (4, "-1/8"), (2, "171/1024"), (0, "277/128")]),
    row(
        0,
        3,
        "-189187/18432",
        &[
            (10, "-59319/8192"),
            (8, "12493/8192"),
            (6, "70403/2048"),
            (4, "3091945/73728"),
            (2, "600451/12288"),
            (0, "-970759/12288"),
        ],
    ),
    row(
        1,
        2,
        "2211/2048",
        &[
            (10, "-1521/8192"),
            (8, "9579/8192"),
            (6, "-2065/6144"),
            (4, "-128731/24576"),
            (2, "-29563/12288"),
            (0, "35039/12288"),
        ],
    ),
    row(
        2,
        1,
        "-1627/2048",
        &[
            (10, "-39/8192"),
            (8, "1751/24576"),
            (6, "-2087/6144"),
            (4, "4051/24576"),
            (2, "7953/4096"),
            (0, "40585/12288"),
        ],
    ),
    row(
        3,
        0,
        "5843/2048",
        &[(10, "-1/8192"), (8, "27/8192"), (6, "-75/2048"), (4, "1575/8192"), (2, "-825/4096"), (0, "-12987/4096")],
    ),
];

const ERRATA: &[Erratum] = &[
    Erratum { nf: 3, m: 1, n: 1, index: 6, printed: "743/3076", corrected: "743/3072" },
    Erratum { nf: 2, m: 3, n: 1, index: 4, printed: "-451/256", corrected: "-451/1024" },
];

/// The printed table for `N_f`, or an empty slice for other values.
pub fn printed_table(nf: u32) -> &'static [PrintedRow] {
    match nf {
        0 => NF0,
        2 => NF2,
        3 => NF3,
        _ => &[],
    }
}

/// The known misprints in the printed `H`-combinations.
pub fn errata() -> &'static [Erratum] {
    ERRATA
}
