//! Minimal double-double arithmetic (~31 significant digits).
//!
//! Used internally where a terminating hypergeometric sum suffers heavy
//! cancellation and a plain f64 accumulation would lose the result. Only the
//! operations needed by those sums are implemented.

/// Unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

/// Error-free sum of two f64 (Knuth two-sum).
fn two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    let v = s - a;
    let e = (a - (s - v)) + (b - v);
    Dd { hi: s, lo: e }
}

/// Error-free product via fused multiply-add.
fn two_prod(a: f64, b: f64) -> Dd {
    let p = a * b;
    let e = f64::mul_add(a, b, -p);
    Dd { hi: p, lo: e }
}

impl Dd {
    pub fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn add(self, other: Dd) -> Dd {
        let s = two_sum(self.hi, other.hi);
        let t = two_sum(self.lo, other.lo);
        let mut lo = s.lo + t.hi;
        let mut hi = s.hi + lo;
        lo = (s.hi - hi) + lo + t.lo;
        let r = two_sum(hi, lo);
        hi = r.hi;
        lo = r.lo;
        Dd { hi, lo }
    }

    pub fn mul_f64(self, x: f64) -> Dd {
        let p = two_prod(self.hi, x);
        let lo = f64::mul_add(self.lo, x, p.lo);
        let r = two_sum(p.hi, lo);
        Dd { hi: r.hi, lo: r.lo }
    }

    pub fn div_f64(self, x: f64) -> Dd {
        let q1 = self.hi / x;
        // remainder computed exactly: self - q1*x
        let p = two_prod(q1, x);
        let rem = (self.hi - p.hi) + self.lo - p.lo;
        let q2 = rem / x;
        let r = two_sum(q1, q2);
        Dd { hi: r.hi, lo: r.lo }
    }

    pub fn abs(self) -> Dd {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            Dd {
                hi: -self.hi,
                lo: -self.lo,
            }
        } else {
            self
        }
    }
}
