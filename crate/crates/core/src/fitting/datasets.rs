//! Reference lifetime data sets.

/// Software failure times in hours from the start of execution (n = 10).
pub const SOFTWARE_FAILURES: [f64; 10] = [
    519.0, 968.0, 1430.0, 1893.0, 2490.0, 3058.0, 3625.0, 4422.0, 5218.0, 5823.0,
];

/// Millions of revolutions to failure for 23 ball bearings (Lawless, 2003).
pub const BALL_BEARINGS: [f64; 23] = [
    17.88, 28.92, 33.0, 41.52, 42.12, 45.60, 48.40, 51.84, 51.96, 54.12, 55.56, 67.80, 68.64,
    68.64, 68.88, 84.12, 93.12, 98.64, 105.12, 105.84, 127.92, 128.04, 173.40,
];
