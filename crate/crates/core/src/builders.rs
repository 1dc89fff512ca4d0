//! Named q-series: Pochhammer symbols, theta products, bilateral quadratic
//! sums, both sides of the Slater identities, the two factorisations of the
//! distinct-partition generating function, and Gauss's identity.

use std::fmt;
use std::str::FromStr;

use crate::error::BuildError;
use crate::series::{Sign, SignedMonomial, TruncatedSeries};

/// `prod_{k=0}^{n-1} (1 + s q^{a + k b})`.
///
/// The empty product (`n = 0`) is `1`. A factor `(1 - q^0)` is rejected.
pub fn pochhammer_finite(s: Sign, a: usize, b: usize, n: usize, order: usize) -> Result<TruncatedSeries, BuildError> {
    check_order(order)?;
    if b == 0 {
        return Err(BuildError::Parameter("Pochhammer step must be positive".into()));
    }
    if a == 0 && s == Sign::Minus && n > 0 {
        return Err(BuildError::DegenerateFactor);
    }
    let mut out = TruncatedSeries::one(order);
    mul_pochhammer(&mut out, s, a, b, Some(n));
    Ok(out)
}

/// `prod_{k>=0} (1 + s q^{a + k b})`, keeping factors below the order.
pub fn pochhammer_infinite(s: Sign, a: usize, b: usize, order: usize) -> Result<TruncatedSeries, BuildError> {
    check_order(order)?;
    if a == 0 || b == 0 {
        return Err(BuildError::Parameter("infinite Pochhammer needs a >= 1 and b >= 1".into()));
    }
    let mut out = TruncatedSeries::one(order);
    mul_pochhammer(&mut out, s, a, b, None);
    Ok(out)
}

/// Multiplies `f` in place by `prod_{k<n} (1 + s q^{a+kb})`; `None` means
/// every factor below the order.
pub(crate) fn mul_pochhammer(f: &mut TruncatedSeries, s: Sign, a: usize, b: usize, n: Option<usize>) {
    let order = f.order();
    let mut k = 0;
    loop {
        if n.is_some_and(|n| k >= n) {
            break;
        }
        let e = a + k * b;
        if e >= order {
            // every later factor is 1 + O(q^order)
            break;
        }
        f.mul_binomial(SignedMonomial::new(s, e));
        k += 1;
    }
}

/// Divides `f` in place by `prod_{k<n} (1 + s q^{a+kb})`; requires `a >= 1`.
pub(crate) fn div_pochhammer(f: &mut TruncatedSeries, s: Sign, a: usize, b: usize, n: Option<usize>) {
    assert!(a >= 1 && b >= 1);
    let order = f.order();
    let mut k = 0;
    loop {
        if n.is_some_and(|n| k >= n) {
            break;
        }
        let e = a + k * b;
        if e >= order {
            break;
        }
        f.div_binomial(SignedMonomial::new(s, e));
        k += 1;
    }
}

fn check_order(order: usize) -> Result<(), BuildError> {
    if order == 0 {
        Err(BuildError::Parameter("order must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// How the sign of each term of a bilateral quadratic sum is chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SignRule {
    AlwaysPlus,
    /// `(-1)^j`
    AlternatingInJ,
    /// `(-1)^(n + j)` where `n` is the exponent.
    AlternatingInNPlusJ,
}

impl SignRule {
    pub fn name(self) -> &'static str {
        match self {
            SignRule::AlwaysPlus => "always_plus",
            SignRule::AlternatingInJ => "alternating_in_j",
            SignRule::AlternatingInNPlusJ => "alternating_in_n_plus_j",
        }
    }

    pub fn sign(self, j: i64, exponent: i64) -> Sign {
        match self {
            SignRule::AlwaysPlus => Sign::Plus,
            SignRule::AlternatingInJ => Sign::parity(j),
            SignRule::AlternatingInNPlusJ => Sign::parity(j + exponent),
        }
    }
}

impl FromStr for SignRule {
    type Err = BuildError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "always_plus" => Ok(SignRule::AlwaysPlus),
            "alternating_in_j" => Ok(SignRule::AlternatingInJ),
            "alternating_in_n_plus_j" => Ok(SignRule::AlternatingInNPlusJ),
            other => Err(BuildError::Parameter(format!("unknown sign rule `{other}`"))),
        }
    }
}

/// The predicted right-hand side of a Legendre-type theorem:
/// `sum_{j in Z} sign(j) q^{A j^2 + B j}`, halved when `half` is set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticIndicator {
    a: i64,
    b: i64,
    rule: SignRule,
    half: bool,
}

impl QuadraticIndicator {
    /// Rejects indicators whose exponent is negative or fractional for some
    /// integer `j`.
    pub fn new(a: i64, b: i64, rule: SignRule, half: bool) -> Result<Self, BuildError> {
        if a < 1 {
            return Err(BuildError::Parameter(format!("leading coefficient {a} must be positive")));
        }
        // A j^2 + B j = (A + B) j mod 2
        if half && (a + b).rem_euclid(2) != 0 {
            return Err(BuildError::NonIntegralExponent { j: 1 });
        }
        let ind = QuadraticIndicator { a, b, rule, half };
        // the integer minimum sits next to the vertex -B / 2A
        let v = (-b).div_euclid(2 * a);
        for j in [v - 1, v, v + 1, v + 2] {
            if ind.raw(j) < 0 {
                return Err(BuildError::NegativeExponent { j });
            }
        }
        Ok(ind)
    }

    pub fn a(&self) -> i64 {
        self.a
    }
    pub fn b(&self) -> i64 {
        self.b
    }
    pub fn rule(&self) -> SignRule {
        self.rule
    }
    pub fn half(&self) -> bool {
        self.half
    }

    fn raw(&self, j: i64) -> i64 {
        let e = self.a * j * j + self.b * j;
        if self.half {
            e / 2
        } else {
            e
        }
    }

    pub fn exponent(&self, j: i64) -> i64 {
        self.raw(j)
    }

    /// Every `(j, exponent, sign)` with exponent below `order`, walking `j`
    /// outward from zero in both directions.
    pub fn terms(&self, order: usize) -> Vec<(i64, usize, Sign)> {
        let limit = order as i64;
        let mut out = Vec::new();
        for dir in [1i64, -1] {
            let mut j = if dir == 1 { 0 } else { -1 };
            loop {
                let e = self.exponent(j);
                if e < limit {
                    out.push((j, e as usize, self.rule.sign(j, e)));
                } else if self.exponent(j + dir) >= e {
                    break;
                }
                j += dir;
            }
        }
        out
    }

    pub fn series(&self, order: usize) -> TruncatedSeries {
        let mut out = TruncatedSeries::zero(order);
        for (_, e, sign) in self.terms(order) {
            out.add_to_coeff(e, sign.as_i64());
        }
        out
    }
}

impl fmt::Display for QuadraticIndicator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "indicator({},{},{}", self.a, self.b, self.rule.name())?;
        if self.half {
            f.write_str(",half")?;
        }
        f.write_str(")")
    }
}

pub fn indicator_series(ind: &QuadraticIndicator, order: usize) -> Result<TruncatedSeries, BuildError> {
    check_order(order)?;
    Ok(ind.series(order))
}

fn check_theta(b: usize, a: usize) -> Result<(), BuildError> {
    if a == 0 || a >= b {
        return Err(BuildError::Parameter(format!("theta parameters need 0 < a < b, got a={a}, b={b}")));
    }
    Ok(())
}

/// `prod_{n>=1} (1 - q^{bn})(1 + s q^{bn-a})(1 + s q^{bn-(b-a)})`.
pub fn theta_product(b: usize, a: usize, s: Sign, order: usize) -> Result<TruncatedSeries, BuildError> {
    check_order(order)?;
    check_theta(b, a)?;
    let mut out = TruncatedSeries::one(order);
    mul_pochhammer(&mut out, Sign::Minus, b, b, None);
    mul_pochhammer(&mut out, s, b - a, b, None);
    mul_pochhammer(&mut out, s, a, b, None);
    Ok(out)
}

/// The indicator with the same coefficients as [`theta_sum`].
pub fn theta_indicator(b: usize, a: usize, s: Sign) -> Result<QuadraticIndicator, BuildError> {
    check_theta(b, a)?;
    let rule = match s {
        Sign::Plus => SignRule::AlwaysPlus,
        Sign::Minus => SignRule::AlternatingInJ,
    };
    QuadraticIndicator::new(b as i64, b as i64 - 2 * a as i64, rule, true)
}

/// `sum_{j in Z} s^j q^{(b j^2 + (b - 2a) j)/2}`.
pub fn theta_sum(b: usize, a: usize, s: Sign, order: usize) -> Result<TruncatedSeries, BuildError> {
    check_order(order)?;
    Ok(theta_indicator(b, a, s)?.series(order))
}

/// `(b, a, s)` of the theta product on the right of Slater identities 2 to 8.
pub fn slater_theta_params(k: u32) -> Option<(usize, usize, Sign)> {
    Some(match k {
        2 => (4, 1, Sign::Minus),
        3 => (4, 1, Sign::Plus),
        4 => (5, 1, Sign::Minus),
        5 => (8, 1, Sign::Plus),
        6 => (12, 5, Sign::Minus),
        7 => (12, 1, Sign::Minus),
        8 => (12, 1, Sign::Plus),
        _ => return None,
    })
}

fn check_slater(k: u32) -> Result<(), BuildError> {
    if (2..=9).contains(&k) {
        Ok(())
    } else {
        Err(BuildError::Parameter(format!("Slater identity index {k} not in 2..=9")))
    }
}

/// Adds `sum_{n>=start} term(n)` to `acc`, stopping once the leading
/// exponent of a term reaches the order. Terms have unit-constant
/// denominators, so the leading exponent is a lower bound.
fn sum_terms<F>(order: usize, start: usize, lead: impl Fn(usize) -> usize, term: F) -> TruncatedSeries
where
    F: Fn(usize, &mut TruncatedSeries),
{
    let mut acc = TruncatedSeries::zero(order);
    let mut n = start;
    loop {
        let e = lead(n);
        if e >= order {
            break;
        }
        let mut t = TruncatedSeries::monomial(order, SignedMonomial::new(Sign::Plus, e));
        term(n, &mut t);
        acc.add_assign(&t);
        n += 1;
    }
    acc
}

/// The left side of Slater identity `k`, prefactor included.
pub fn slater_lhs(k: u32, order: usize) -> Result<TruncatedSeries, BuildError> {
    check_order(order)?;
    check_slater(k)?;
    use Sign::{Minus, Plus};
    let (mut out, prefactor) = match k {
        2 => (
            sum_terms(order, 0, |n| n * (n + 1), |n, t| div_pochhammer(t, Minus, 2, 2, Some(n))),
            pochhammer_infinite(Minus, 1, 1, order)?,
        ),
        3 => (
            sum_terms(order, 0, |n| n * (2 * n + 1), |n, t| div_pochhammer(t, Minus, 1, 1, Some(2 * n + 1))),
            pochhammer_infinite(Minus, 2, 2, order)?,
        ),
        4 => (
            sum_terms(order, 0, |n| n * (n + 1), |n, t| div_pochhammer(t, Minus, 1, 1, Some(n))),
            pochhammer_infinite(Minus, 1, 1, order)?,
        ),
        5 => (
            sum_terms(order, 0, |n| 2 * n * (n + 1), |n, t| div_pochhammer(t, Minus, 1, 1, Some(2 * n + 1))),
            pochhammer_infinite(Minus, 2, 2, order)?,
        ),
        6 => (
            sum_terms(
                order,
                0,
                |n| 4 * n * n,
                |n, t| {
                    mul_pochhammer(t, Minus, 1, 2, Some(2 * n));
                    div_pochhammer(t, Minus, 4, 4, Some(2 * n));
                },
            ),
            pochhammer_infinite(Minus, 4, 4, order)?,
        ),
        7 | 8 => {
            let s = if k == 7 { Minus } else { Plus };
            (
                sum_terms(
                    order,
                    0,
                    |n| 4 * n * (n + 1),
                    |n, t| {
                        mul_pochhammer(t, s, 1, 2, Some(2 * n + 1));
                        div_pochhammer(t, Minus, 4, 4, Some(2 * n + 1));
                    },
                ),
                pochhammer_infinite(Minus, 4, 4, order)?,
            )
        }
        9 => {
            let sum = sum_terms(
                order,
                0,
                |n| n * (n + 2),
                |n, t| {
                    mul_pochhammer(t, Plus, 1, 2, Some(n + 1));
                    mul_pochhammer(t, Plus, 2, 4, Some(n));
                    div_pochhammer(t, Minus, 2, 2, Some(2 * n + 1));
                },
            );
            let mut pre = pochhammer_infinite(Minus, 2, 2, order)?;
            div_pochhammer(&mut pre, Plus, 1, 2, None);
            (sum, pre)
        }
        _ => unreachable!(),
    };
    out = &out * &prefactor;
    Ok(out)
}

/// The two readings of the product side of Slater identity 9.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slater9Variant {
    /// `(1 - q^{16n})(1 - q^{16n-4})(1 + q^{16n-12})`
    MixedSign,
    /// `(1 - q^{16n})(1 - q^{16n-4})(1 - q^{16n-12})`
    AllMinus,
}

impl Slater9Variant {
    pub fn describe(self) -> &'static str {
        match self {
            Slater9Variant::MixedSign => "(1-q^{16n})(1-q^{16n-4})(1+q^{16n-12})",
            Slater9Variant::AllMinus => "(1-q^{16n})(1-q^{16n-4})(1-q^{16n-12})",
        }
    }
}

pub fn slater9_product(variant: Slater9Variant, order: usize) -> Result<TruncatedSeries, BuildError> {
    check_order(order)?;
    let last = match variant {
        Slater9Variant::MixedSign => Sign::Plus,
        Slater9Variant::AllMinus => Sign::Minus,
    };
    let mut out = TruncatedSeries::one(order);
    mul_pochhammer(&mut out, Sign::Minus, 16, 16, None);
    mul_pochhammer(&mut out, Sign::Minus, 12, 16, None);
    mul_pochhammer(&mut out, last, 4, 16, None);
    Ok(out)
}

/// The product side of Slater identity `k`; identity 9 uses the mixed-sign pattern.
pub fn slater_rhs(k: u32, order: usize) -> Result<TruncatedSeries, BuildError> {
    check_order(order)?;
    check_slater(k)?;
    match slater_theta_params(k) {
        Some((b, a, s)) => theta_product(b, a, s, order),
        None => slater9_product(Slater9Variant::MixedSign, order),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LemmaSide {
    Lhs12,
    Rhs12,
    Lhs13,
    Rhs13,
}

/// Sides of the two factorisations of `(-q;q)_inf` split by length parity.
pub fn lemma_side(which: LemmaSide, order: usize) -> Result<TruncatedSeries, BuildError> {
    check_order(order)?;
    Ok(match which {
        LemmaSide::Lhs12 => distinct_odd_length_gf(order),
        LemmaSide::Lhs13 => distinct_even_length_gf(order),
        LemmaSide::Rhs12 | LemmaSide::Rhs13 => {
            // sum_{n>=1} (-1)^{n+1} q^{n^2}, or sum_{n>=0} (-1)^n q^{n^2}
            let odd = which == LemmaSide::Rhs12;
            let mut theta = TruncatedSeries::zero(order);
            let mut n = usize::from(odd);
            while n * n < order {
                let sign = Sign::parity(n as i64 + i64::from(odd));
                theta.add_to_coeff(n * n, sign.as_i64());
                n += 1;
            }
            &pochhammer_infinite(Sign::Plus, 1, 1, order)? * &theta
        }
    })
}

/// `sum_{n>=1} q^{n(2n-1)} / (q;q)_{2n-1}`: distinct partitions of odd length.
pub fn distinct_odd_length_gf(order: usize) -> TruncatedSeries {
    sum_terms(order, 1, |n| n * (2 * n - 1), |n, t| div_pochhammer(t, Sign::Minus, 1, 1, Some(2 * n - 1)))
}

/// `sum_{n>=0} q^{n(2n+1)} / (q;q)_{2n}`: distinct partitions of even length.
pub fn distinct_even_length_gf(order: usize) -> TruncatedSeries {
    sum_terms(order, 0, |n| n * (2 * n + 1), |n, t| div_pochhammer(t, Sign::Minus, 1, 1, Some(2 * n)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Lhs,
    Rhs,
}

/// Gauss: `sum_{n in Z} (-1)^n q^{n^2} = prod (1 - q^n)/(1 + q^n)`.
pub fn gauss_side(which: Side, order: usize) -> Result<TruncatedSeries, BuildError> {
    check_order(order)?;
    Ok(match which {
        Side::Lhs => QuadraticIndicator::new(1, 0, SignRule::AlternatingInJ, false)?.series(order),
        Side::Rhs => {
            let mut out = pochhammer_infinite(Sign::Minus, 1, 1, order)?;
            div_pochhammer(&mut out, Sign::Plus, 1, 1, None);
            out
        }
    })
}

/// Identifiers accepted by the command line `expand` subcommand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesId {
    Euler,
    Distinct,
    Poch { s: Sign, a: usize, b: usize, n: Option<usize> },
    ThetaProd { b: usize, a: usize, s: Sign },
    ThetaSum { b: usize, a: usize, s: Sign },
    SlaterLhs(u32),
    SlaterRhs(u32),
    Lemma(LemmaSide),
    Gauss(Side),
    Indicator(QuadraticIndicator),
}

impl SeriesId {
    pub fn build(&self, order: usize) -> Result<TruncatedSeries, BuildError> {
        match *self {
            SeriesId::Euler => pochhammer_infinite(Sign::Minus, 1, 1, order),
            SeriesId::Distinct => pochhammer_infinite(Sign::Plus, 1, 1, order),
            SeriesId::Poch { s, a, b, n: Some(n) } => pochhammer_finite(s, a, b, n, order),
            SeriesId::Poch { s, a, b, n: None } => pochhammer_infinite(s, a, b, order),
            SeriesId::ThetaProd { b, a, s } => theta_product(b, a, s, order),
            SeriesId::ThetaSum { b, a, s } => theta_sum(b, a, s, order),
            SeriesId::SlaterLhs(k) => slater_lhs(k, order),
            SeriesId::SlaterRhs(k) => slater_rhs(k, order),
            SeriesId::Lemma(which) => lemma_side(which, order),
            SeriesId::Gauss(which) => gauss_side(which, order),
            SeriesId::Indicator(ind) => indicator_series(&ind, order),
        }
    }
}

fn parse_sign(s: &str) -> Result<Sign, BuildError> {
    match s.trim() {
        "1" | "+1" | "+" => Ok(Sign::Plus),
        "-1" | "-" => Ok(Sign::Minus),
        other => Err(BuildError::Parameter(format!("sign must be +1 or -1, got `{other}`"))),
    }
}

fn parse_num<T: FromStr>(s: &str) -> Result<T, BuildError> {
    s.trim().parse().map_err(|_| BuildError::Parameter(format!("expected an integer, got `{}`", s.trim())))
}

fn call_args<'a>(s: &'a str, name: &str) -> Option<Vec<&'a str>> {
    let inner = s.strip_prefix(name)?.strip_prefix('(')?.strip_suffix(')')?;
    Some(inner.split(',').collect())
}

impl FromStr for SeriesId {
    type Err = BuildError;

    fn from_str(raw: &str) -> Result<Self, Self::Err> {
        let s = raw.trim();
        let unknown = || BuildError::UnknownSeries(raw.to_string());
        match s {
            "euler" => return Ok(SeriesId::Euler),
            "distinct" => return Ok(SeriesId::Distinct),
            "lemma12_lhs" => return Ok(SeriesId::Lemma(LemmaSide::Lhs12)),
            "lemma12_rhs" => return Ok(SeriesId::Lemma(LemmaSide::Rhs12)),
            "lemma13_lhs" => return Ok(SeriesId::Lemma(LemmaSide::Lhs13)),
            "lemma13_rhs" => return Ok(SeriesId::Lemma(LemmaSide::Rhs13)),
            "gauss_lhs" => return Ok(SeriesId::Gauss(Side::Lhs)),
            "gauss_rhs" => return Ok(SeriesId::Gauss(Side::Rhs)),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix("slater") {
            let (k, side) = rest.split_once('_').ok_or_else(unknown)?;
            let k: u32 = k.parse().map_err(|_| unknown())?;
            check_slater(k)?;
            return match side {
                "lhs" => Ok(SeriesId::SlaterLhs(k)),
                "rhs" => Ok(SeriesId::SlaterRhs(k)),
                _ => Err(unknown()),
            };
        }
        if let Some(args) = call_args(s, "poch") {
            let n = match args.len() {
                3 => None,
                4 => Some(parse_num(args[3])?),
                _ => return Err(BuildError::Parameter("poch takes (s,a,b[,n])".into())),
            };
            return Ok(SeriesId::Poch { s: parse_sign(args[0])?, a: parse_num(args[1])?, b: parse_num(args[2])?, n });
        }
        for (name, sum) in [("theta_prod", false), ("theta_sum", true)] {
            if let Some(args) = call_args(s, name) {
                if args.len() != 3 {
                    return Err(BuildError::Parameter(format!("{name} takes (b,a,s)")));
                }
                let (b, a, sg) = (parse_num(args[0])?, parse_num(args[1])?, parse_sign(args[2])?);
                check_theta(b, a)?;
                return Ok(if sum { SeriesId::ThetaSum { b, a, s: sg } } else { SeriesId::ThetaProd { b, a, s: sg } });
            }
        }
        if let Some(args) = call_args(s, "indicator") {
            let half = match args.len() {
                3 => false,
                4 => match args[3].trim() {
                    "half" | "true" => true,
                    "false" => false,
                    other => return Err(BuildError::Parameter(format!("bad half flag `{other}`"))),
                },
                _ => return Err(BuildError::Parameter("indicator takes (A,B,rule[,half])".into())),
            };
            let ind = QuadraticIndicator::new(parse_num(args[0])?, parse_num(args[1])?, args[2].trim().parse()?, half)?;
            return Ok(SeriesId::Indicator(ind));
        }
        Err(unknown())
    }
}
