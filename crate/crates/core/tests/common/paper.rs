//! Tables printed in the worked example, transcribed verbatim.

pub const STUDENTS: [&str; 5] = ["S1", "S2", "S3", "S4", "S5"];

pub const GRADES: [[i64; 4]; 5] =
    [[80, 90, 50, 70], [70, 80, 80, 70], [100, 60, 50, 70], [90, 90, 60, 60], [80, 80, 70, 70]];

pub const PERSPECTIVES: [&str; 3] = ["egalitarian", "extreme", "moderate"];

pub const CENTRAL: [[&str; 4]; 3] =
    [["0.25", "0.25", "0.25", "0.25"], ["0.4", "0.4", "0.1", "0.1"], ["0.3", "0.3", "0.2", "0.2"]];

pub const R: &str = "0.15";

/// Holistic comparisons `(better, worse)` per perspective.
pub const ELICITED: [[(&str, &str); 2]; 3] =
    [[("S2", "S3"), ("S4", "S3")], [("S3", "S2"), ("S3", "S5")], [("S4", "S5"), ("S4", "S1")]];

/// Overall evaluations, one row per student, one column per perspective.
pub const EVALUATIONS: [[&str; 3]; 5] =
    [["72.5", "80", "75"], ["75", "75", "75"], ["70", "76", "72"], ["75", "84", "78"], ["75", "78", "76"]];

/// `m,M label` per cell.
pub const MINMAX_PERTURBATION: [[&str; 5]; 3] = [
    [
        "0,0 T | -4.375,-0.625 F | 0.625,4.375 T | -3.625,-1.375 F | -3.625,-1.375 F",
        "0.625,4.375 T | 0,0 T | 2,8 T | -2.25,2.25 U | -0.75,0.75 U",
        "-4.375,-0.625 F | -8,-2 F | 0,0 T | -7.25,-2.75 F | -7.25,-2.75 F",
        "1.375,3.625 T | -2.25,2.25 U | 2.75,7.25 T | 0,0 T | -1.5,1.5 U",
        "1.375,3.625 T | -0.75,0.75 U | 2.75,7.25 T | -1.5,1.5 U | 0,0 T",
    ],
    [
        "0,0 T | 4.25,5.75 T | 1,7 T | -4.9,-3.1 F | 1.1,2.9 T",
        "-5.75,-4.25 F | 0,0 T | -4.45,2.45 U | -10.35,-7.65 F | -3.75,-2.25 F",
        "-7,-1 F | -2.45,4.45 U | 0,0 T | -10.7,-5.3 F | -4.7,0.7 U",
        "3.1,4.9 T | 7.65,10.35 T | 5.3,10.7 T | 0,0 T | 5.4,6.6 T",
        "-2.9,-1.1 F | 2.25,3.75 T | -0.7,4.7 U | -6.6,-5.4 F | 0,0 T",
    ],
    [
        "0,0 T | -1.5,1.5 U | 0.75,5.25 T | -4.05,-1.95 F | -2.05,0.05 U",
        "-1.5,1.5 U | 0,0 T | -.15,6.15 U | -4.95,-1.05 F | -1.75,-0.25 F",
        "-5.25,-0.75 F | -6.15,.15 U | 0,0 T | -8.4,-3.6 F | -6.4,-1.6 F",
        "1.95,4.05 T | 1.05,4.95 T | 3.6,8.4 T | 0,0 T | 0,0 T",
        "-0.05,2.05 U | 0.25,1.75 T | 1.6,6.4 T | -3.2,-0.8 F | 0,0 T",
    ],
];

pub const MINMAX_ORDINAL: [[&str; 5]; 3] = [
    [
        "0,0 T | -30,10 U | -10,30 U | -10,7.5 U | -20,10 U",
        "-10,30 U | 0,0 T | 0,30 T | -14,20 U | -4,10 U",
        "-30,10 U | -30,0 U | 0,0 T | -30,0 U | -20,0 U",
        "-7.5,10 U | -20,14 U | 0,30 T | 0,0 T | -10,10 U",
        "-10,20 U | -10,4 U | 0,20 T | -10,10 U | 0,0 T",
    ],
    [
        "0,0 T | -10,10 U | -20,5 U | -10,10 U | -10,5 U",
        "-10,-10 U | 0,0 T | -30,0 U | -20,10 U | -10,0 U",
        "-5,20 U | 0,30 T | 0,0 T | -10,10 U | 0,20 T",
        "-10,10 U | -10,20 U | -10,10 U | 0,0 T | -10,10 U",
        "-5,10 U | 0,10 T | -20,0 U | -10,10 U | 0,0 T",
    ],
    [
        "0,0 T | -10,10 U | -20,30 U | -10,0 U | -10,10 U",
        "-10,10 U | 0,0 T | -30,25 U | -20,5 U | -10,5 U",
        "-30,20 U | -25,30 U | 0,0 T | -30,10 U | -20,20 U",
        "0,10 T | -5,20 U | -10,30 U | 0,0 T | 0,10 T",
        "-10,10 U | -5,10 U | -20,20 U | -10,0 U | 0,0 T",
    ],
];

/// Vertex rows: four weights followed by the five printed evaluations.
pub const VERTICES_PERTURBATION: [&[&str]; 3] = [
    &[
        "0.2875 0.2875 0.2125 0.2125 | 74.38 75 71.5 77.25 75.75",
        "0.2875 0.2125 0.2875 0.2125 | 71.38 75 70.75 75 75",
        "0.2875 0.2125 0.2125 0.2875 | 72.88 74.25 72.25 75 75",
        "0.2125 0.2875 0.2875 0.2125 | 72.13 75.75 67.75 75 75",
        "0.2125 0.2875 0.2125 0.2875 | 73.63 75 69.25 75 75",
        "0.2125 0.2125 0.2875 0.2875 | 70.63 75 68.5 72.75 74.25",
    ],
    &[
        "0.46 0.37 0.085 0.085 | 80.3 74.55 78.4 84.9 78.3",
        "0.46 0.34 0.115 0.085 | 79.1 74.55 78.1 84 78",
        "0.46 0.34 0.085 0.115 | 79.7 74.25 78.7 84 78",
        "0.37 0.46 0.085 0.085 | 81.2 75.45 74.8 84.9 78.3",
        "0.34 0.46 0.115 0.085 | 80.3 75.75 73.3 84 78",
        "0.34 0.46 0.085 0.115 | 80.9 75.45 73.9 84 78",
        "0.43 0.34 0.115 0.115 | 78.8 74.55 77.2 83.1 77.7",
        "0.34 0.43 0.115 0.115 | 79.7 75.45 73.6 83.1 77.7",
    ],
    &[
        "0.345 0.315 0.17 0.17 | 76.35 74.85 73.8 79.8 76.6",
        "0.345 0.255 0.23 0.17 | 73.95 74.85 73.2 78 76",
        "0.345 0.255 0.17 0.23 | 75.15 74.25 74.4 78 76",
        "0.315 0.345 0.17 0.17 | 76.65 75.15 72.6 79.8 76.6",
        "0.255 0.345 0.23 0.17 | 74.85 75.75 69.6 78 76",
        "0.255 0.345 0.17 0.23 | 76.05 75.15 70.8 78 76",
        "0.285 0.255 0.23 0.23 | 73.35 74.85 71.4 76.2 76",
        "0.255 0.285 0.23 0.23 | 73.65 75.15 70.2 76.2 75.4",
    ],
];

pub const VERTICES_ORDINAL: [&[&str]; 3] = [
    &[
        "0 1 0 0 | 90 80 60 90 80",
        "0 0 1 0 | 50 80 50 60 70",
        "0.4 0.6 0 0 | 86 76 76 90 80",
        "0.5 0 0.5 0 | 65 75 75 75 75",
        "0 0.25 0 0.75 | 75 72.5 67.5 67.5 72.5",
        "0 0 0.5 0.5 | 60 75 60 60 70",
        "0.17 0.25 0 0.58 | 76.67 72.5 72.5 72.5 74.17",
    ],
    &[
        "1 0 0 0 | 80 70 100 90 80",
        "0 0 0 1 | 70 70 70 60 70",
        "0.5 0.5 0 0 | 85 75 80 90 80",
        "0.5 0 0.5 0 | 65 75 75 75 75",
    ],
    &[
        "1 0 0 0 | 80 70 100 90 80",
        "0 1 0 0 | 90 80 60 90 80",
        "0.5 0 0.5 0 | 65 75 75 75 75",
        "0.5 0 0 0.5 | 75 70 85 75 75",
        "0 0.5 0.5 0 | 70 80 55 75 75",
        "0 0.5 0.25 0.25 | 75 77.5 60 75 75",
    ],
];

pub const SEVEN_VALUE: [&str; 5] = ["T fK T F fK", "fK T sT sF sF", "F sF T F sF", "T sT T T sT", "fK sT sT sF T"];

pub const OUTRANKING_Q: &str = "1";
pub const OUTRANKING_K: &str = "0.65";

pub const OUTRANKING_PER_PERSPECTIVE: [[&str; 5]; 3] = [
    ["T T T F T", "F T T F T", "T F T F F", "T F F T F", "T T T F T"],
    ["T T U F T", "F T U F U", "U F T F F", "T T F T T", "U T U F T"],
    ["T T T F T", "F T T F T", "T F T F F", "T U F T U", "T T T F T"],
];

pub const SEVEN_OUTRANKING: [&str; 5] = ["T T sT F T", "F T sT F sT", "T F T F F", "T fK F T fK", "T T sT F T"];

pub const PWI_VALUE: [[[f64; 5]; 5]; 3] = [
    [
        [1.0, 0.0, 1.0, 0.0, 0.0],
        [1.0, 1.0, 1.0, 0.51, 0.51],
        [0.0, 0.0, 1.0, 0.0, 0.0],
        [1.0, 0.49, 1.0, 1.0, 0.5],
        [1.0, 0.49, 1.0, 0.5, 1.0],
    ],
    [
        [1.0, 1.0, 1.0, 0.0, 1.0],
        [0.0, 1.0, 0.35, 0.0, 0.0],
        [0.0, 0.65, 1.0, 0.0, 0.06],
        [1.0, 1.0, 1.0, 1.0, 1.0],
        [0.0, 1.0, 0.94, 0.0, 1.0],
    ],
    [
        [1.0, 0.5, 1.0, 0.0, 0.01],
        [0.5, 1.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0, 0.0],
        [1.0, 1.0, 1.0, 1.0, 1.0],
        [0.99, 1.0, 1.0, 0.0, 1.0],
    ],
];

/// Moderate value-mode relations after thresholding; `X(Y)` marks a changed cell.
pub const CORRECTED_VALUE_MODERATE: [&str; 5] =
    ["T U T F F(U)", "U T T(U) F F", "F F(U) T F F", "T T T T T", "T(U) T T F T"];

pub const PWI_OUTRANKING: [[[f64; 5]; 5]; 3] = [
    [
        [1.0, 1.0, 1.0, 0.0, 1.0],
        [0.0, 1.0, 1.0, 0.0, 1.0],
        [1.0, 0.0, 1.0, 0.0, 0.0],
        [1.0, 0.0, 0.0, 1.0, 0.0],
        [1.0, 1.0, 1.0, 0.0, 1.0],
    ],
    [
        [1.0, 1.0, 0.08, 0.0, 1.0],
        [0.0, 1.0, 0.08, 0.0, 0.08],
        [0.07, 0.0, 1.0, 0.0, 0.0],
        [1.0, 1.0, 0.0, 1.0, 1.0],
        [0.07, 1.0, 0.08, 0.0, 1.0],
    ],
    [
        [1.0, 1.0, 1.0, 0.0, 1.0],
        [0.0, 1.0, 1.0, 0.0, 1.0],
        [1.0, 0.0, 1.0, 0.0, 0.0],
        [1.0, 0.02, 1.0, 1.0, 0.02],
        [1.0, 1.0, 1.0, 0.0, 1.0],
    ],
];

pub const CORRECTED_OUTRANKING: [[&str; 5]; 2] = [
    ["T T F(U) F T", "F T F(U) F F(U)", "F(U) F T F F", "T T F T T", "F(U) T F(U) F T"],
    ["T T T F T", "F T T F T", "T F T F F", "T F(U) F T F(U)", "T T T F T"],
];

pub const SEVEN_OUTRANKING_CORRECTED: [&str; 5] =
    ["T T K(sT) F T", "F T K(sT) F K(sT)", "T F T F F", "T K(fK) F T K(fK)", "T T K(sT) F T"];

pub const SEVEN_ORDINAL: [&str; 5] = ["T U U U U", "U T sT U U", "U sT T U sT", "sT U sT T sT", "U sT sT U T"];

pub const PWI_ORDINAL: [[[f64; 5]; 5]; 3] = [
    [
        [1.0, 0.37, 0.79, 0.23, 0.38],
        [0.63, 1.0, 1.0, 0.57, 0.66],
        [0.21, 0.0, 1.0, 0.0, 0.0],
        [0.77, 0.43, 1.0, 1.0, 0.47],
        [0.62, 0.33, 1.0, 0.53, 1.0],
    ],
    [
        [1.0, 0.72, 0.11, 0.26, 0.39],
        [0.27, 1.0, 0.0, 0.19, 0.0],
        [0.89, 1.0, 1.0, 0.74, 1.0],
        [0.77, 0.81, 0.251, 1.0, 0.70],
        [0.61, 1.0, 0.0, 0.30, 1.0],
    ],
    [
        [1.0, 0.66, 0.54, 0.0, 0.5],
        [0.34, 1.0, 0.51, 0.12, 0.27],
        [0.46, 0.49, 1.0, 0.31, 0.43],
        [1.0, 0.88, 0.69, 1.0, 1.0],
        [0.5, 0.73, 0.57, 0.0, 1.0],
    ],
];

pub const CORRECTED_ORDINAL: [[&str; 5]; 3] = [
    ["T U U U U", "U T T U U", "U F(U) T F(U) F(U)", "U U T T U", "U U T U T"],
    ["T U F(U) U U", "U T F(U) U F(U)", "T(U) T T U T", "U U U T U", "U T F(U) U T"],
    ["T U U F(U) U", "U T U F(U) U", "U U T U U", "T T(U) U T T", "U U U F(U) T"],
];

pub const SEVEN_ORDINAL_SMAA: [&str; 5] = [
    "T U sF(U) sF(U) U",
    "U T fK(sT) sF(U) sF(U)",
    "sT fK(sT) T sF(U) fK(sT)",
    "sT sT(U) sT T sT",
    "U sT fK(sT) sF(U) T",
];

/// Printed global scores.
pub struct Scores {
    pub label: &'static str,
    pub values: [&'static str; 5],
    pub ranking: &'static str,
}

pub const SCORES_VALUE_BASIC: Scores =
    Scores { label: "value basic", values: ["0", "-1", "-6", "6", "1"], ranking: "S4 → S5 → S1 → S2 → S3" };
pub const SCORES_VALUE_DECK: Scores =
    Scores {
        label: "value deck", values: ["0", "-0.77", "-4.62", "4.62", "0.77"], ranking: "S4 → S5 → S1 → S2 → S3"
    };
pub const SCORES_OUTRANKING_BASIC: Scores =
    Scores {
        label: "outranking basic", values: ["-0.5", "-2", "-2.5", "4", "1"], ranking: "S4 → S5 → S1 → S2 → S3"
    };
pub const SCORES_OUTRANKING_DECK: Scores = Scores {
    label: "outranking deck",
    values: ["-0.23", "-1.46", "-2.38", "3.54", "0.54"],
    ranking: "S4 → S5 → S1 → S2 → S3",
};
pub const SCORES_CORRECTED_BASIC: Scores = Scores {
    label: "corrected outranking basic",
    values: ["1", "-3", "-2", "4", "0"],
    ranking: "S4 → S1 → S5 → S3 → S2",
};
pub const SCORES_CORRECTED_DECK: Scores = Scores {
    label: "corrected outranking deck",
    values: ["0.54", "-2.08", "-2", "3.54", "0"],
    ranking: "S4 → S1 → S5 → S3 → S2",
};
pub const SCORES_ORDINAL_BASIC: Scores = Scores {
    label: "ordinal regression basic",
    values: ["-0.5", "-0.5", "-0.5", "1.5", "0"],
    ranking: "S4 → S5 → S1 ∼ S2 ∼ S3",
};
pub const SCORES_ORDINAL_DECK: Scores = Scores {
    label: "ordinal regression deck",
    values: ["0.54", "-2.08", "-2", "3.54", "0"],
    ranking: "S4 → S5 → S1 ∼ S2 ∼ S3",
};
pub const SCORES_FINAL_BASIC: Scores = Scores {
    label: "ordinal regression smaa basic",
    values: ["-2", "-2", "0", "4", "0"],
    ranking: "S4 → S3 ∼ S5 → S1 ∼ S2",
};
pub const SCORES_FINAL_DECK: Scores = Scores {
    label: "ordinal regression smaa deck",
    values: ["-0.31", "-0.31", "-0.31", "0.92", "0"],
    ranking: "S4 → S5 → S1 ∼ S2 ∼ S3",
};

/// Cards `e(F,sF), e(sF,mid), e(mid,sT), e(sT,T)`.
pub const DECK: [u32; 4] = [6, 5, 3, 2];

/// Splits `"X(Y)"` into the current and the original label.
pub fn changed(cell: &str) -> (&str, Option<&str>) {
    match cell.split_once('(') {
        Some((now, was)) => (now, Some(was.trim_end_matches(')'))),
        None => (cell, None),
    }
}

pub fn labels(rows: &[&str]) -> Vec<Vec<String>> {
    rows.iter().map(|r| r.split_whitespace().map(|c| changed(c).0.to_string()).collect()).collect()
}

pub fn student(i: usize) -> &'static str {
    STUDENTS[i]
}
