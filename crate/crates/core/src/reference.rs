//! Published values of K(n) and K'(n) for n = 1..=40, used by the
//! verification report.

pub const NECKLACES: [u64; 40] = [
    0, 1, 1, 2, 1, 4, 3, 8, 11, 20, 31, 64, 105, 202, 367, 696, 1285, 2452, 4599, 8776, 16651,
    31838, 60787, 116640, 223697, 430396, 828525, 1598228, 3085465, 5966000, 11545611, 22371000,
    43383571, 84217616, 163617805, 318150720, 619094385, 1205614054, 2349384031, 4581315968,
];

pub const BRACELETS: [u64; 40] = [
    0, 1, 1, 2, 1, 4, 3, 8, 8, 18, 21, 48, 63, 133, 205, 412, 685, 1354, 2385, 4644, 8496, 16431,
    30735, 59344, 112531, 217246, 415628, 803210, 1545463, 2991192, 5778267, 11201884, 21702708,
    42141576, 81830748, 159140896, 309590883, 602938099, 1174779397, 2290920128,
];
