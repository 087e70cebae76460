//! Exactly rounded floating-point summation.
//!
//! Every finite double is an integer multiple of `2^-1074`, so a sum of
//! doubles is a (long) fixed-point integer. The accumulator keeps that integer
//! in 32-bit chunks held in `i64` slots, which leaves room for 2^30 additions
//! between carry passes, and rounds once at the end. The result is the
//! correctly rounded exact sum, so it does not depend on the order of the
//! summands. Grid inner products use it so that permuting nodes (lattice
//! shifts) leaves every inner product bit-identical.

use num_complex::Complex64;

const CHUNK_BITS: u32 = 32;
const CHUNK_MASK: i64 = (1 << CHUNK_BITS) - 1;
/// Lowest set bit of a double sits at offset `biased_exponent - 1` (at
/// most 2045) above `2^-1074`, and a mantissa shifted inside its chunk
/// spans at most three chunks.
const CHUNKS: usize = 2046 / CHUNK_BITS as usize + 3;
const CARRY_EVERY: u32 = 1 << 30;

#[derive(Debug, Clone)]
pub struct ExactSum {
    chunks: [i64; CHUNKS],
    pending: u32,
    /// Sum of non-finite inputs, which override the finite part.
    special: Option<f64>,
    /// Every input so far was `-0.0`, so an empty total keeps the sign.
    negative_zero: Option<bool>,
}

impl Default for ExactSum {
    fn default() -> Self {
        Self { chunks: [0; CHUNKS], pending: 0, special: None, negative_zero: None }
    }
}

impl ExactSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let only = self.negative_zero.unwrap_or(true) && x == 0.0 && x.is_sign_negative();
        self.negative_zero = Some(only);
        if x == 0.0 {
            return;
        }
        if !x.is_finite() {
            self.special = Some(self.special.map_or(x, |s| s + x));
            return;
        }
        let bits = x.to_bits();
        let biased = ((bits >> 52) & 0x7ff) as u32;
        let mut mantissa = bits & ((1 << 52) - 1);
        if biased != 0 {
            mantissa |= 1 << 52;
        }
        let lsb = biased.max(1) - 1;
        let idx = (lsb / CHUNK_BITS) as usize;
        let wide = (mantissa as u128) << (lsb % CHUNK_BITS);
        let parts = [
            (wide as i64) & CHUNK_MASK,
            ((wide >> CHUNK_BITS) as i64) & CHUNK_MASK,
            (wide >> (2 * CHUNK_BITS)) as i64,
        ];
        let negative = bits >> 63 == 1;
        for (slot, p) in self.chunks[idx..idx + 3].iter_mut().zip(parts) {
            if negative {
                *slot -= p;
            } else {
                *slot += p;
            }
        }
        self.pending += 1;
        if self.pending == CARRY_EVERY {
            carry(&mut self.chunks);
            self.pending = 0;
        }
    }

    pub fn value(&self) -> f64 {
        if let Some(s) = self.special {
            return s;
        }
        let mut c = self.chunks;
        carry(&mut c);
        let negative = c[CHUNKS - 1] < 0;
        if negative {
            c.iter_mut().for_each(|x| *x = -*x);
            carry(&mut c);
        }
        let Some(top) = c.iter().rposition(|&x| x != 0) else {
            return if self.negative_zero == Some(true) { -0.0 } else { 0.0 };
        };
        let lo = top.saturating_sub(2);
        let mut m: u128 = 0;
        for k in (lo..=top).rev() {
            m = (m << CHUNK_BITS) | c[k] as u128;
        }
        let sticky = c[..lo].iter().any(|&x| x != 0);
        let magnitude = round_scaled(m, sticky, (lo as i32) * CHUNK_BITS as i32 - 1074);
        if negative {
            -magnitude
        } else {
            magnitude
        }
    }
}

/// Brings chunks below the top into `[0, 2^32)`; the top chunk keeps the sign.
fn carry(c: &mut [i64; CHUNKS]) {
    for k in 0..CHUNKS - 1 {
        let hi = c[k] >> CHUNK_BITS;
        c[k] -= hi << CHUNK_BITS;
        c[k + 1] += hi;
    }
}

/// `2^n` for `-1074 <= n <= 1023`.
fn pow2(n: i32) -> f64 {
    if n >= -1022 {
        f64::from_bits(((n + 1023) as u64) << 52)
    } else {
        f64::from_bits(1u64 << (n + 1074))
    }
}

/// `m 2^e` rounded to nearest-even, with `sticky` marking nonzero bits below
/// `m`. `e >= -1074`, so subnormal results are exact and need no rounding.
fn round_scaled(m: u128, sticky: bool, e: i32) -> f64 {
    let width = 128 - m.leading_zeros() as i32;
    let drop = (width - 53).max(0);
    let mut q = m >> drop;
    if drop > 0 {
        let rest = m & ((1u128 << drop) - 1);
        let half = 1u128 << (drop - 1);
        let above_half = rest > half || (rest == half && sticky);
        if above_half || (rest == half && !sticky && q & 1 == 1) {
            q += 1;
        }
    }
    // q < 2^54 is exact; split the scale so neither factor leaves range
    let k = e + drop;
    let a = (k / 2).clamp(-1074, 1023);
    let b = (k - a).clamp(-1074, 1023);
    q as f64 * pow2(a) * pow2(b)
}

pub fn exact_sum<I: IntoIterator<Item = f64>>(xs: I) -> f64 {
    let mut acc = ExactSum::new();
    for x in xs {
        acc.add(x);
    }
    acc.value()
}

/// Exactly rounded sum of the real and imaginary parts separately.
pub fn exact_sum_complex<I: IntoIterator<Item = Complex64>>(zs: I) -> Complex64 {
    let mut re = ExactSum::new();
    let mut im = ExactSum::new();
    for z in zs {
        re.add(z.re);
        im.add(z.im);
    }
    Complex64::new(re.value(), im.value())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Shewchuk's partials algorithm with the correctly rounded finish, as an
    /// independent reference.
    fn partials_sum(xs: &[f64]) -> f64 {
        let mut partials: Vec<f64> = Vec::new();
        for &v in xs {
            let mut x = v;
            let mut i = 0;
            for j in 0..partials.len() {
                let mut y = partials[j];
                if x.abs() < y.abs() {
                    std::mem::swap(&mut x, &mut y);
                }
                let hi = x + y;
                let lo = y - (hi - x);
                if lo != 0.0 {
                    partials[i] = lo;
                    i += 1;
                }
                x = hi;
            }
            partials.truncate(i);
            partials.push(x);
        }
        let p = &partials;
        let Some(mut n) = p.len().checked_sub(1) else { return 0.0 };
        let mut hi = p[n];
        let mut lo = 0.0;
        while n > 0 {
            n -= 1;
            let x = hi;
            let y = p[n];
            hi = x + y;
            lo = y - (hi - x);
            if lo != 0.0 {
                break;
            }
        }
        if n > 0 && ((lo < 0.0 && p[n - 1] < 0.0) || (lo > 0.0 && p[n - 1] > 0.0)) {
            let y = lo * 2.0;
            let x = hi + y;
            if y == x - hi {
                hi = x;
            }
        }
        hi
    }

    #[test]
    fn cancels_catastrophically_small_terms() {
        let xs = [1e100, 1.0, -1e100, 1e-100];
        assert_eq!(exact_sum(xs), 1.0);
        assert_eq!(exact_sum([0.1; 10]), 1.0);
    }

    #[test]
    fn order_independent() {
        let xs: Vec<f64> = (0..1000).map(|i| ((i * 7919) % 1013) as f64 * 1.1e-3 - 0.37).collect();
        let mut rev = xs.clone();
        rev.reverse();
        let mut rot = xs.clone();
        rot.rotate_left(311);
        let s = exact_sum(xs.iter().copied());
        assert_eq!(s, exact_sum(rev));
        assert_eq!(s, exact_sum(rot));
    }

    #[test]
    fn empty_is_zero() {
        assert_eq!(exact_sum(std::iter::empty()), 0.0);
    }

    #[test]
    fn extremes_and_specials() {
        let tiny = f64::from_bits(1);
        assert_eq!(exact_sum([tiny, tiny, -tiny]), tiny);
        assert_eq!(exact_sum([f64::MAX, -f64::MAX, f64::MIN_POSITIVE]), f64::MIN_POSITIVE);
        assert_eq!(exact_sum([f64::MAX, f64::MAX]), f64::INFINITY);
        assert!(exact_sum([-0.0, -0.0]).is_sign_negative());
        assert!(exact_sum([-0.0, 0.0]).is_sign_positive());
        assert_eq!(exact_sum([1.0, f64::INFINITY]), f64::INFINITY);
        assert!(exact_sum([f64::INFINITY, f64::NEG_INFINITY]).is_nan());
        // ties round to even: 1 + 2^-53 stays 1, 1 + 3 * 2^-53 goes up
        let u = pow2(-53);
        assert_eq!(exact_sum([1.0, u]), 1.0);
        assert_eq!(exact_sum([1.0, u, u, u]), 1.0 + 4.0 * u);
        assert_eq!(exact_sum([1.0, u, pow2(-110)]), 1.0 + 2.0 * u);
    }

    #[test]
    fn wide_dynamic_range_matches_reference() {
        // a sum the partials route and an independent fsum agree on
        let xs: Vec<f64> = (0..20_000).map(|i| ((i as f64) * 0.618).sin() * 10f64.powi(i % 600 - 300)).collect();
        assert_eq!(exact_sum(xs.iter().copied()).to_bits(), partials_sum(&xs).to_bits());
    }

    fn wide() -> impl Strategy<Value = f64> {
        prop_oneof![
            (-1.0f64..1.0, -300i32..300).prop_map(|(m, e)| m * 10f64.powi(e)),
            any::<u64>().prop_map(|b| f64::from_bits(b & !(0x7ffu64 << 52))),
            any::<f64>().prop_filter("finite", |x| x.is_finite()).prop_map(|x| x / 4.0),
        ]
    }

    proptest! {
        #[test]
        fn agrees_with_partials(xs in prop::collection::vec(wide(), 0..200)) {
            prop_assert_eq!(exact_sum(xs.iter().copied()).to_bits(), partials_sum(&xs).to_bits());
        }

        #[test]
        fn exact_cancellation(xs in prop::collection::vec(wide(), 1..50)) {
            let mut all = xs.clone();
            all.extend(xs.iter().map(|x| -x));
            all.push(0.5);
            prop_assert_eq!(exact_sum(all), 0.5);
        }
    }
}
