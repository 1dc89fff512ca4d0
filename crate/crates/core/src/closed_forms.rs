//! Generating functions of the partition classes as q-series sums, written
//! out factor by factor rather than derived from the class layouts, so they
//! give an independent route to the enumeration counts.
//!
//! With `signed = false` each sum is the ordinary generating function of the
//! class. With `signed = true` the sign-carrying factor `(-x; q^b)_inf` is
//! replaced by `(x; q^b)_inf`, which yields `sum (even(n) - odd(n)) q^n`.

use crate::builders::{div_pochhammer, mul_pochhammer};
use crate::classes::ClassId;
use crate::error::BuildError;
use crate::series::{Sign, SignedMonomial, TruncatedSeries};

fn carrier(signed: bool) -> Sign {
    if signed {
        Sign::Minus
    } else {
        Sign::Plus
    }
}

/// `sum_{j >= start} q^{lead(j)} * body(j)`, stopping at the first term
/// whose leading exponent reaches the order.
fn param_sum(
    order: usize,
    start: usize,
    lead: impl Fn(usize) -> usize,
    body: impl Fn(usize, &mut TruncatedSeries),
) -> TruncatedSeries {
    let mut acc = TruncatedSeries::zero(order);
    let mut j = start;
    while lead(j) < order {
        let mut t = TruncatedSeries::monomial(order, SignedMonomial::new(Sign::Plus, lead(j)));
        body(j, &mut t);
        acc.add_assign(&t);
        j += 1;
    }
    acc
}

/// Generating function (plain or signed) of a class.
pub fn class_series(class: ClassId, signed: bool, order: usize) -> Result<TruncatedSeries, BuildError> {
    if order == 0 {
        return Err(BuildError::Parameter("order must be at least 1".into()));
    }
    let s = carrier(signed);
    use Sign::{Minus, Plus};
    Ok(match class {
        // (-q;q)_inf, or (q;q)_inf when signed by length
        ClassId::DDistinct => {
            let mut out = TruncatedSeries::one(order);
            mul_pochhammer(&mut out, s, 1, 1, None);
            out
        }
        // sum_t q^{k t(t+1)/2} / (q;q)_t * prod_{p>t} (1 + s q^p + q^{2p} + ... + q^{(k-1)p})
        ClassId::InitK(k) => {
            let k = k as usize;
            param_sum(
                order,
                0,
                |t| k * t * (t + 1) / 2,
                |t, f| {
                    div_pochhammer(f, Minus, 1, 1, Some(t));
                    for p in t + 1..order {
                        mul_short_poly(f, p, k, s);
                    }
                },
            )
        }
        // sum_m q^{2m(2m+1)} / (q;q)_{2m} * (-q^{2m+1};q)_inf
        ClassId::BEven => param_sum(
            order,
            0,
            |m| 2 * m * (2 * m + 1),
            |m, f| {
                div_pochhammer(f, Minus, 1, 1, Some(2 * m));
                mul_pochhammer(f, Plus, 2 * m + 1, 1, None);
            },
        ),
        // sum_{m>=1} q^{2m(2m-1)} / (q;q)_{2m-1} * (-q^{2m};q)_inf
        ClassId::BOdd => param_sum(
            order,
            1,
            |m| 2 * m * (2 * m - 1),
            |m, f| {
                div_pochhammer(f, Minus, 1, 1, Some(2 * m - 1));
                mul_pochhammer(f, Plus, 2 * m, 1, None);
            },
        ),
        // sum_n q^{4n(n+1)} (-q;q^2)_{2n+1} (-q^{8n+8};q^4)_inf
        ClassId::C1 | ClassId::C8 => param_sum(
            order,
            0,
            |n| 4 * n * (n + 1),
            |n, f| {
                mul_pochhammer(f, Plus, 1, 2, Some(2 * n + 1));
                mul_pochhammer(f, s, 8 * n + 8, 4, None);
            },
        ),
        // sum_n q^{2n(n+1)} / (q;q^2)_{n+1} * (-q^{2n+2};q^2)_inf
        ClassId::C2 => param_sum(
            order,
            0,
            |n| 2 * n * (n + 1),
            |n, f| {
                div_pochhammer(f, Minus, 1, 2, Some(n + 1));
                mul_pochhammer(f, s, 2 * n + 2, 2, None);
            },
        ),
        // sum_n q^{n(2n+1)} / (q;q^2)_{n+1} * (-q^{2n+2};q^2)_inf
        ClassId::C3 => param_sum(
            order,
            0,
            |n| n * (2 * n + 1),
            |n, f| {
                div_pochhammer(f, Minus, 1, 2, Some(n + 1));
                mul_pochhammer(f, s, 2 * n + 2, 2, None);
            },
        ),
        // sum_n q^{n(n+1)} (-q^{n+1};q)_inf
        ClassId::C4 => param_sum(order, 0, |n| n * (n + 1), |n, f| mul_pochhammer(f, s, n + 1, 1, None)),
        // sum_n q^{n(n+1)} (-q^{2n+2};q^2)_inf (-q;q^2)_inf
        ClassId::C5 => param_sum(
            order,
            0,
            |n| n * (n + 1),
            |n, f| {
                mul_pochhammer(f, s, 2 * n + 2, 2, None);
                mul_pochhammer(f, Plus, 1, 2, None);
            },
        ),
        // sum_n q^{4n^2} (-q^{8n+4};q^4)_inf (-q;q^2)_{2n}
        ClassId::C6 => param_sum(
            order,
            0,
            |n| 4 * n * n,
            |n, f| {
                mul_pochhammer(f, s, 8 * n + 4, 4, None);
                mul_pochhammer(f, Plus, 1, 2, Some(2 * n));
            },
        ),
        // sum_n q^{n(n+2)} (-q^2;q^4)_n (-q^{4n+4};q^2)_inf / (q^{2n+3};q^2)_inf
        ClassId::C7 => param_sum(
            order,
            0,
            |n| n * (n + 2),
            |n, f| {
                mul_pochhammer(f, Plus, 2, 4, Some(n));
                mul_pochhammer(f, s, 4 * n + 4, 2, None);
                div_pochhammer(f, Minus, 2 * n + 3, 2, None);
            },
        ),
    })
}

/// Multiplies by `1 + s q^p + q^{2p} + ... + q^{(k-1)p}`.
fn mul_short_poly(f: &mut TruncatedSeries, p: usize, k: usize, s: Sign) {
    let order = f.order();
    if p >= order {
        return;
    }
    let src = f.clone();
    for m in 1..k {
        let e = m * p;
        if e >= order {
            break;
        }
        let mut shifted = src.shift(e);
        if m == 1 && s == Sign::Minus {
            shifted = shifted.neg();
        }
        f.add_assign(&shifted);
    }
}

/// Signed c7 series when the odd parts `>= 2j+3` also carry the sign:
/// `sum_n q^{n(n+2)} (-q^2;q^4)_n (q^{4n+4};q^2)_inf / (-q^{2n+3};q^2)_inf`.
pub fn c7_odd_tail_series(order: usize) -> Result<TruncatedSeries, BuildError> {
    if order == 0 {
        return Err(BuildError::Parameter("order must be at least 1".into()));
    }
    Ok(param_sum(
        order,
        0,
        |n| n * (n + 2),
        |n, f| {
            mul_pochhammer(f, Sign::Plus, 2, 4, Some(n));
            mul_pochhammer(f, Sign::Minus, 4 * n + 4, 2, None);
            div_pochhammer(f, Sign::Plus, 2 * n + 3, 2, None);
        },
    ))
}

/// The generating function of the difference `b_even(n) - b_odd(n)`.
pub fn b_difference_series(order: usize) -> Result<TruncatedSeries, BuildError> {
    Ok(&class_series(ClassId::BEven, false, order)? - &class_series(ClassId::BOdd, false, order)?)
}
