//! Complex scalars carrying one directional derivative, used to evaluate
//! analytic derivatives (in τ, or in a point variable) without finite
//! differences. The direction is chosen by the caller when seeding inputs.

use crate::C64;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DualC {
    /// Value.
    pub v: C64,
    /// Directional derivative of the value.
    pub dt: C64,
}

impl DualC {
    pub const fn new(v: C64, dt: C64) -> Self {
        DualC { v, dt }
    }

    /// A constant (zero derivative).
    pub fn of(v: C64) -> Self {
        DualC { v, dt: C64::new(0.0, 0.0) }
    }

    pub fn of_f64(x: f64) -> Self {
        DualC::of(C64::new(x, 0.0))
    }

    /// The seed of the differentiation variable itself: value `v`,
    /// derivative 1.
    pub fn seed(v: C64) -> Self {
        DualC { v, dt: C64::new(1.0, 0.0) }
    }

    pub fn zero() -> Self {
        DualC::of(C64::new(0.0, 0.0))
    }

    pub fn one() -> Self {
        DualC::of(C64::new(1.0, 0.0))
    }

    pub fn add(self, o: Self) -> Self {
        DualC { v: self.v + o.v, dt: self.dt + o.dt }
    }

    pub fn sub(self, o: Self) -> Self {
        DualC { v: self.v - o.v, dt: self.dt - o.dt }
    }

    pub fn neg(self) -> Self {
        DualC { v: -self.v, dt: -self.dt }
    }

    pub fn mul(self, o: Self) -> Self {
        DualC { v: self.v * o.v, dt: self.v * o.dt + self.dt * o.v }
    }

    pub fn div(self, o: Self) -> Self {
        let inv = C64::new(1.0, 0.0) / o.v;
        let v = self.v * inv;
        DualC { v, dt: (self.dt - v * o.dt) * inv }
    }

    pub fn inv(self) -> Self {
        DualC::one().div(self)
    }

    pub fn scale(self, c: C64) -> Self {
        DualC { v: self.v * c, dt: self.dt * c }
    }

    pub fn exp(self) -> Self {
        let e = self.v.exp();
        DualC { v: e, dt: e * self.dt }
    }

    pub fn sin(self) -> Self {
        DualC { v: self.v.sin(), dt: self.v.cos() * self.dt }
    }

    pub fn cos(self) -> Self {
        DualC { v: self.v.cos(), dt: -self.v.sin() * self.dt }
    }

    pub fn abs(self) -> f64 {
        self.v.norm()
    }

    /// Magnitude including the derivative slot.
    pub fn abs_full(self) -> f64 {
        self.v.norm().max(self.dt.norm())
    }
}
