//! Values as printed in the published λ = 0.5 reference tables.
//!
//! Kept verbatim, including cells that do not agree with recomputation, so
//! that comparisons can point at them.

/// Minimum sample sizes, indexed `[p_star][c][t_ratio]`.
pub const SAMPLE_SIZES: [[[u32; 8]; 11]; 4] = [
    [
        [5, 3, 2, 1, 1, 1, 1, 1],
        [9, 5, 3, 3, 2, 2, 2, 2],
        [12, 7, 5, 4, 3, 3, 3, 3],
        [14, 8, 6, 5, 4, 4, 4, 4],
        [15, 10, 8, 6, 5, 5, 5, 5],
        [19, 11, 9, 8, 6, 6, 6, 6],
        [23, 12, 10, 9, 7, 7, 7, 7],
        [28, 14, 11, 10, 8, 8, 8, 8],
        [31, 16, 12, 11, 9, 9, 9, 9],
        [35, 19, 13, 12, 10, 10, 10, 10],
        [39, 21, 14, 13, 12, 11, 11, 11],
    ],
    [
        [8, 4, 3, 2, 1, 1, 1, 1],
        [13, 7, 4, 3, 2, 2, 2, 2],
        [18, 9, 6, 5, 3, 3, 3, 3],
        [22, 12, 8, 6, 5, 4, 4, 4],
        [27, 14, 9, 8, 6, 5, 5, 5],
        [31, 16, 11, 9, 7, 6, 6, 6],
        [35, 18, 13, 10, 8, 7, 7, 7],
        [38, 20, 14, 11, 9, 8, 8, 8],
        [42, 23, 16, 13, 10, 9, 9, 9],
        [46, 25, 17, 14, 11, 10, 10, 10],
        [50, 27, 19, 15, 12, 11, 11, 11],
    ],
    [
        [11, 5, 3, 2, 1, 1, 1, 1],
        [17, 8, 5, 4, 3, 2, 2, 2],
        [22, 11, 7, 5, 4, 3, 3, 3],
        [27, 13, 9, 7, 5, 4, 4, 4],
        [31, 16, 11, 8, 6, 5, 5, 5],
        [36, 18, 12, 10, 7, 6, 6, 6],
        [41, 21, 14, 11, 8, 7, 7, 7],
        [45, 23, 16, 12, 9, 8, 8, 8],
        [49, 26, 17, 14, 10, 9, 9, 9],
        [54, 28, 19, 15, 11, 10, 10, 10],
        [58, 30, 21, 16, 13, 11, 11, 11],
    ],
    [
        [16, 8, 5, 3, 2, 1, 1, 1],
        [23, 11, 7, 5, 3, 2, 2, 2],
        [30, 14, 9, 7, 4, 4, 4, 4],
        [35, 17, 11, 8, 5, 5, 4, 4],
        [41, 20, 13, 10, 7, 6, 5, 5],
        [46, 23, 15, 11, 8, 7, 6, 6],
        [51, 26, 17, 13, 9, 8, 7, 7],
        [56, 28, 18, 14, 10, 9, 8, 8],
        [61, 31, 20, 16, 11, 10, 9, 9],
        [66, 33, 22, 17, 12, 11, 10, 10],
        [71, 36, 24, 18, 13, 12, 11, 11],
    ],
];

/// Sample size of the `c = 2` plan on each row of the acceptance-probability
/// and producer's-risk tables, indexed `[p_star][t_ratio]`.
pub const OC_PLAN_SIZES: [[u32; 8]; 4] = [
    [12, 7, 5, 4, 3, 3, 3, 3],
    [18, 9, 6, 5, 3, 3, 3, 3],
    [22, 11, 7, 5, 4, 3, 3, 3],
    [30, 14, 9, 7, 4, 4, 3, 3],
];

/// Acceptance probabilities, indexed `[p_star][t_ratio][scale_ratio]`.
pub const ACCEPTANCE_PROBABILITIES: [[[f64; 6]; 8]; 4] = [
    [
        [
            0.9515095, 0.9988092, 0.9998861, 0.9999791, 0.9999944, 0.9999981,
        ],
        [
            0.9237801, 0.9979221, 0.9997971, 0.9999625, 0.99999, 0.9999966,
        ],
        [
            0.8935343, 0.9967775, 0.9996784, 0.9999401, 0.999984, 0.9999946,
        ],
        [
            0.8608107, 0.9952958, 0.9995194, 0.9999097, 0.9999757, 0.9999918,
        ],
        [
            0.7554522, 0.988427, 0.9987212, 0.9997528, 0.9999327, 0.999977,
        ],
        [
            0.4648425, 0.9522578, 0.9937827, 0.998722, 0.9996415, 0.9998754,
        ],
        [
            0.2297293, 0.8746346, 0.9801821, 0.995604, 0.9987206, 0.9995462,
        ],
        [
            0.09606505, 0.7554522, 0.9522344, 0.988427, 0.988427, 0.9987212,
        ],
    ],
    [
        [
            0.8684592, 0.9959309, 0.9995928, 0.9999241, 0.9999797, 0.9999931,
        ],
        [
            0.854900, 0.9953096, 0.9995262, 0.9999114, 0.9999762, 0.9999919,
        ],
        [
            0.8261495, 0.993896, 0.9993724, 0.9998819, 0.9999682, 0.9999892,
        ],
        [
            0.7443875, 0.9891916, 0.9988433, 0.9997791, 0.9999402, 0.9999796,
        ],
        [
            0.7554522, 0.988427, 0.9987212, 0.9997528, 0.9999327, 0.999977,
        ],
        [
            0.4648425, 0.9522578, 0.9937827, 0.998722, 0.9996415, 0.9998754,
        ],
        [
            0.2297293, 0.8746346, 0.9801821, 0.995604, 0.9987206, 0.9995462,
        ],
        [
            0.09606505, 0.7554522, 0.9522344, 0.988427, 0.988427, 0.9987212,
        ],
    ],
    [
        [
            0.797498, 0.9927272, 0.9992501, 0.9998587, 0.999962, 0.9999871,
        ],
        [
            0.7727992, 0.9913324, 0.9990946, 0.9998286, 0.9999538, 0.9999843,
        ],
        [
            0.7506223, 0.9898812, 0.9989282, 0.9997961, 0.9999449, 0.9999812,
        ],
        [
            0.7443875, 0.9891916, 0.9988433, 0.9997791, 0.9999402, 0.9999796,
        ],
        [
            0.4805908, 0.9615614, 0.9953012, 0.9990579, 0.9997389, 0.9999098,
        ],
        [
            0.4648425, 0.9522578, 0.9937827, 0.998722, 0.9996415, 0.9998754,
        ],
        [
            0.2297293, 0.8746346, 0.9801821, 0.995604, 0.9987206, 0.9995462,
        ],
        [
            0.09606505, 0.7554522, 0.9522344, 0.988427, 0.988427, 0.9987212,
        ],
    ],
    [
        [
            0.6403632, 0.9827918, 0.998117, 0.9996377, 0.9999015, 0.9999664,
        ],
        [
            0.6397935, 0.982543, 0.998083, 0.9996306, 0.9998995, 0.9999657,
        ],
        [
            0.5928948, 0.9781937, 0.99755, 0.999524, 0.9998700, 0.9999555,
        ],
        [
            0.5026545, 0.9679963, 0.9962476, 0.9992595, 0.9997963, 0.9999300,
        ],
        [
            0.4805908, 0.9615614, 0.9953012, 0.9990579, 0.9997389, 0.9999098,
        ],
        [
            0.1628271, 0.8609899, 0.9785604, 0.995304, 0.9986423, 0.9995202,
        ],
        [
            0.2297293, 0.8746346, 0.9801821, 0.995604, 0.9987206, 0.9995462,
        ],
        [
            0.09606505, 0.7554522, 0.9522344, 0.988427, 0.988427, 0.9987212,
        ],
    ],
];

/// Producer's risks, indexed `[p_star][t_ratio][scale_ratio]`.
pub const PRODUCER_RISKS: [[[f64; 6]; 8]; 4] = [
    [
        [
            0.0484904,
            0.00119081,
            0.0001138951,
            2.089087e-05,
            5.553451e-06,
            1.874017e-06,
        ],
        [
            0.0762198,
            0.00207792,
            0.0002029209,
            3.749623e-05,
            1.000202e-05,
            3.38152e-06,
        ],
        [
            0.1064657,
            0.00322254,
            0.0003215574,
            5.987798e-05,
            1.602984e-05,
            5.43007e-06,
        ],
        [
            0.1391893,
            0.00470420,
            0.0004806372,
            9.026695e-05,
            2.426185e-05,
            8.236572e-06,
        ],
        [
            0.2445478,
            0.01157296,
            0.0012787930,
            0.0002471642,
            6.733724e-05,
            2.303011e-05,
        ],
        [
            0.5351575,
            0.04774217,
            0.0062173340,
            0.0012780300,
            0.0003585210,
            0.000124607,
        ],
        [
            0.7702707,
            0.12536540,
            0.0198179100,
            0.0043960330,
            0.0012794040,
            0.000453820,
        ],
        [
            0.9039350,
            0.24454780,
            0.0477656100,
            0.0115729600,
            0.0035181410,
            0.001278790,
        ],
    ],
    [
        [
            0.1315408,
            0.00406908,
            0.0004072074,
            7.589678e-05,
            2.03265e-05,
            6.887046e-06,
        ],
        [
            0.1451000,
            0.00469037,
            0.0004737901,
            8.860401e-05,
            2.376705e-05,
            8.059686e-06,
        ],
        [
            0.1738505,
            0.00610397,
            0.0006275758,
            0.0001181129,
            3.177695e-05,
            1.079347e-05,
        ],
        [
            0.2556125,
            0.01080841,
            0.0011566700,
            0.000220857,
            5.982195e-05,
            2.039445e-05,
        ],
        [
            0.2445478,
            0.01157296,
            0.0012787930,
            0.0002471642,
            6.733724e-05,
            2.303011e-05,
        ],
        [
            0.5351575,
            0.04774217,
            0.0062173340,
            0.0012780300,
            0.0003585210,
            0.000124607,
        ],
        [
            0.7702707,
            0.12536540,
            0.0198179100,
            0.0043960330,
            0.0012794040,
            0.000453820,
        ],
        [
            0.9039350,
            0.24454780,
            0.0477656100,
            0.0115729600,
            0.0035181410,
            0.001278790,
        ],
    ],
    [
        [
            0.2025020,
            0.00727277,
            0.000749947,
            0.0001412735,
            3.8023e-05,
            1.2917e-05,
        ],
        [
            0.2272008,
            0.00866759,
            0.000905443,
            0.0001713640,
            4.6223e-05,
            1.5722e-05,
        ],
        [
            0.2493777,
            0.01011879,
            0.001071766,
            0.0002038644,
            5.5119e-05,
            1.8772e-05,
        ],
        [
            0.2556125,
            0.01080841,
            0.001156670,
            0.0002208570,
            5.9821e-05,
            2.0394e-05,
        ],
        [
            0.5194092,
            0.03843864,
            0.004698762,
            0.0009421228,
            0.0002611300,
            9.0154e-05,
        ],
        [
            0.5351575,
            0.04774217,
            0.006217334,
            0.0012780300,
            0.0003585210,
            0.000124607,
        ],
        [
            0.7702707,
            0.12536540,
            0.019817910,
            0.0043960330,
            0.0012794040,
            0.000453820,
        ],
        [
            0.9039350,
            0.24454780,
            0.047765610,
            0.0115729600,
            0.0035181410,
            0.001278790,
        ],
    ],
    [
        [
            0.3596368,
            0.01720824,
            0.00188304,
            0.0003623232,
            9.848695e-05,
            3.364032e-05,
        ],
        [
            0.3602065,
            0.01745705,
            0.001917025,
            0.0003693541,
            0.0001004617,
            3.432682e-05,
        ],
        [
            0.4071052,
            0.02180631,
            0.00244995,
            0.0004759724,
            0.0001299673,
            4.45035e-05,
        ],
        [
            0.4973455,
            0.03200367,
            0.003752446,
            0.0007404669,
            0.0002036755,
            7.002275e-05,
        ],
        [
            0.5194092,
            0.03843864,
            0.004698762,
            0.0009421228,
            0.0002611300,
            9.0154e-05,
        ],
        [
            0.8371729,
            0.13901010,
            0.0214396,
            0.00469604,
            0.001357677,
            0.0004797575,
        ],
        [
            0.7702707,
            0.12536540,
            0.019817910,
            0.0043960330,
            0.0012794040,
            0.000453820,
        ],
        [
            0.9039350,
            0.24454780,
            0.047765610,
            0.0115729600,
            0.0035181410,
            0.001278790,
        ],
    ],
];

/// Minimum quality ratios at producer's risk 0.05, indexed `[p_star][c][t_ratio]`.
pub const MIN_SCALE_RATIOS: [[[f64; 8]; 11]; 4] = [
    [
        [5.37, 6.24, 6.8, 6.0, 9.0, 12.0, 15.0, 18.0],
        [2.66, 2.89, 2.85, 3.56, 4.03, 5.37, 6.72, 8.06],
        [1.99, 2.19, 2.37, 2.53, 2.98, 3.97, 4.96, 5.95],
        [1.64, 1.76, 1.92, 2.08, 2.51, 3.34, 4.18, 5.01],
        [1.39, 1.61, 1.85, 1.82, 2.24, 2.98, 3.73, 4.47],
        [1.36, 1.44, 1.66, 1.88, 2.06, 2.74, 3.43, 4.11],
        [1.34, 1.32, 1.52, 1.73, 1.93, 2.57, 3.21, 3.85],
        [1.34, 1.29, 1.42, 1.62, 1.83, 2.44, 3.05, 3.66],
        [1.3, 1.27, 1.34, 1.54, 1.75, 2.34, 2.92, 3.5],
        [1.28, 1.3, 1.28, 1.47, 1.69, 2.25, 2.81, 3.37],
        [1.27, 1.28, 1.22, 1.41, 1.9, 2.18, 2.72, 3.27],
    ],
    [
        [7.97, 8.06, 8.33, 8.49, 9.0, 12.0, 15.0, 18.0],
        [3.23, 3.48, 3.39, 3.56, 4.03, 5.37, 6.72, 8.06],
        [2.47, 2.54, 2.66, 2.96, 2.98, 3.97, 4.96, 5.95],
        [2.11, 2.25, 2.34, 2.4, 3.11, 3.34, 4.18, 5.01],
        [1.94, 2.0, 2.01, 2.31, 2.73, 2.98, 3.73, 4.47],
        [1.79, 1.84, 1.92, 2.07, 3.31, 2.74, 3.43, 4.11],
        [1.7, 1.73, 1.86, 1.9, 2.3, 2.57, 3.21, 3.85],
        [1.6, 1.64, 1.72, 1.77, 1.45, 2.44, 3.05, 3.66],
        [1.54, 1.62, 1.69, 1.8, 2.06, 2.34, 2.92, 3.5],
        [1.5, 1.57, 1.61, 1.71, 1.98, 2.25, 2.81, 3.37],
        [1.47, 1.52, 1.58, 1.63, 1.9, 2.18, 2.72, 3.27],
    ],
    [
        [7.97, 8.06, 8.33, 8.49, 9.0, 12.0, 15.0, 18.0],
        [3.71, 3.74, 3.86, 4.24, 5.33, 5.37, 6.72, 8.06],
        [2.76, 2.85, 2.93, 2.96, 3.79, 3.97, 4.96, 5.95],
        [2.35, 2.36, 2.52, 2.68, 3.12, 3.34, 4.18, 5.01],
        [2.09, 2.16, 2.3, 2.31, 2.73, 2.98, 3.73, 4.47],
        [1.95, 1.97, 2.04, 2.24, 2.48, 2.74, 3.43, 4.11],
        [1.85, 1.9, 1.96, 2.05, 2.3, 2.57, 3.21, 3.85],
        [1.75, 1.79, 1.89, 1.91, 2.17, 2.44, 3.05, 3.66],
        [1.68, 1.75, 1.77, 1.91, 2.06, 2.34, 2.92, 3.5],
        [1.64, 1.68, 1.74, 1.81, 1.98, 2.25, 2.81, 3.37],
        [1.59, 1.63, 1.71, 1.73, 2.11, 2.18, 2.72, 3.27],
    ],
    [
        [9.61, 10.19, 10.75, 10.4, 12.74, 12.0, 15.0, 18.0],
        [4.33, 4.43, 4.64, 4.82, 5.33, 5.37, 6.72, 8.06],
        [3.24, 3.24, 3.39, 3.66, 3.79, 5.05, 4.96, 5.95],
        [2.69, 2.74, 2.85, 2.93, 3.11, 4.14, 4.18, 5.01],
        [2.42, 2.46, 2.55, 2.7, 3.13, 3.64, 3.73, 4.47],
        [2.22, 2.28, 2.36, 2.4, 2.82, 3.31, 3.43, 4.11],
        [2.08, 2.15, 2.22, 2.32, 2.6, 3.07, 3.21, 3.85],
        [1.97, 2.07, 2.05, 2.15, 2.43, 2.89, 3.05, 3.66],
        [1.89, 1.95, 1.98, 2.12, 2.3, 2.75, 2.92, 3.5],
        [1.83, 1.86, 1.92, 2.0, 2.2, 2.63, 2.81, 3.37],
        [1.78, 1.82, 1.88, 1.9, 2.11, 2.54, 2.72, 3.27],
    ],
];
