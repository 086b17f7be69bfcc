//! Tables as they appear in print, entry for entry, including the entries
//! that disagree with computation (see the registry for those).

pub const CLASSICAL: &[&str] =
    &["1", "-1/2", "1/6", "0", "-1/30", "0", "1/42", "0", "-1/30", "0", "5/66", "0", "-691/2730", "0", "7/6"];

pub const EXP_SHIFT2: &[&str] =
    &["1", "-1/3", "1/18", "1/90", "-1/270", "-5/1134", "-1/5670", "7/2430", "13/7290", "-307/133650"];

pub const SIN1: &[&str] =
    &["1", "0", "1/3", "0", "7/15", "0", "31/21", "0", "127/15", "0", "2555/33", "0", "1414477/1365", "0"];

pub const SIN3: &[&str] =
    &["-1", "0", "-1/10", "0", "-11/350", "0", "-17/1050", "0", "-563/57750", "0", "-381/250250", "0"];

pub const COS2: &[&str] =
    &["-1", "0", "-1/6", "0", "-1/10", "0", "-5/42", "0", "-7/30", "0", "-15/22", "0", "-7601/2730", "0"];

pub const ZETA1: &[&str] = &["1", "-1/4", "1/72", "1/96", "61/21600", "-1/640", "-12491/5080320", "-479/580608"];

pub const ZETA2: &[&str] = &["1", "-1/8", "11/432", "1/144", "-217/324000", "-157/64800", "-21503/16669800"];

/// `N = 3`.
pub const ZETA_RISING3: &[&str] =
    &["60", "-15/12", "9/56", "3/64", "401/31360", "127/50176", "-9089/33116160", "-192233/264929280"];

pub const SFAC2: &[&str] =
    &["-1", "-1/4", "5/72", "1/48", "139/21600", "-1/540", "859/2540160", "71/483840", "-9769/36288000"];

pub const SFAC2_POLYS: &[&str] = &[
    "1",
    "x - 1/4",
    "1/2*x^2 - 1/2*x + 5/72",
    "1/6*x^3 - 3/8*x^2 + 5/24*x - 1/48",
    "1/24*x^4 - 1/6*x^3 + 5/24*x^2 - 1/12*x + 139/21600",
    "1/120*x^5 - 5/96*x^4 + 25/216*x^3 - 5/48*x^2 + 139/4320*x - 1/540",
];

/// `C_{2,n}` for `n = 0..=9`.
pub const COMP2: &[&str] =
    &["0", "1", "-2/3", "5/6", "-68/45", "193/54", "-655/53", "19349/540", "-57736/405", "520343/810"];

/// `C_{1,n}(x)` for `n = 0..=7`, rewritten in this crate's polynomial syntax.
pub const COMP1_POLYS: &[&str] = &[
    "1",
    "x",
    "1/2*x^2 - x",
    "1/6*x^3 - x^2 - 2*x",
    "1/24*x^4 - 1/2*x^3 + 5/2*x^2 - 6*x",
    "1/120*x^5 - 1/6*x^4 + 3/2*x^3 - 8*x^2 + 24*x",
    "1/720*x^6 - 1/24*x^5 - 7/12*x^4 - 31/6*x^3 + 32*x^2 - 120*x",
    "1/5040*x^7 - 1/120*x^6 + 1/6*x^5 - 13/6*x^4 + 21*x^3 - 156*x^2 + 720*x",
];
