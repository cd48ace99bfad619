//! Generalised adjoint actions with a spectral parameter and their
//! composites, acting on series in `u^{-1}`.

use serde::Serialize;

use crate::algebra::Ring;
use crate::drinfeld::{CurrentKind, Currents};
use crate::rtt::Yangian;
use crate::scalar::{int, Rational};
use crate::series::AlgebraSeries;

/// Range of `alpha` for which the multiplicative correction is switched on.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Gate {
    /// `i <= alpha < j`, as used inside the displayed operators.
    Full,
    /// `i <= alpha < j - 1`, as written in the accompanying where-clause.
    Narrow,
}

/// Which factor order a correction term uses: `^a` operators multiply the
/// correction on the left of `X`, `_^a` operators on the right.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Flavor {
    /// `±[T_{a,b}^(1), X]`, identity when `a = b`.
    AdPlus,
    AdMinus,
    CalE,
    CalF,
    CalH,
    E,
    F,
    H,
    EHat,
    FHat,
}

/// One adjoint action, elementary or composite. Index conventions follow the
/// subscripts as written: `CalE (i, j)`, `CalF (j, i)`, `CalH (i, j)`, the
/// composites take `k_1 < ... < k_m`, the hatted ones take `[m]`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct AdjointOperator {
    pub flavor: Flavor,
    pub side: Side,
    pub alpha: usize,
    pub indices: Vec<usize>,
    #[serde(serialize_with = "crate::serialize::rational_str")]
    pub shift: Rational,
}

impl AdjointOperator {
    pub fn new(flavor: Flavor, side: Side, alpha: usize, indices: &[usize], shift: Rational) -> Self {
        AdjointOperator {
            flavor,
            side,
            alpha,
            indices: indices.to_vec(),
            shift,
        }
    }

    pub fn apply(&self, ctx: &Adjoint<'_>, x: &AlgebraSeries) -> AlgebraSeries {
        let (side, a, c) = (self.side, self.alpha, &self.shift);
        let ix = &self.indices;
        match self.flavor {
            Flavor::AdPlus => ctx.ad(ix[0], ix[1], 1, x),
            Flavor::AdMinus => ctx.ad(ix[0], ix[1], -1, x),
            Flavor::CalE => ctx.cal_e(side, a, ix[0], ix[1], c, x),
            Flavor::CalF => ctx.cal_f(side, a, ix[0], ix[1], c, x),
            Flavor::CalH => ctx.cal_h(side, a, ix[0], ix[1], c, x),
            Flavor::E => ctx.big_e(side, a, ix, c, x),
            Flavor::F => ctx.big_f(side, a, ix, c, x),
            Flavor::H => ctx.big_h(side, a, ix, c, x),
            Flavor::EHat => ctx.e_hat(ix[0], &HatArgs::e_hat(c), x),
            Flavor::FHat => ctx.f_hat(ix[0], &HatArgs::f_hat(ix[0], c), x),
        }
    }
}

pub struct Adjoint<'a> {
    y: &'a Yangian,
    cur: &'a Currents,
    gate: Gate,
}

impl<'a> Adjoint<'a> {
    pub fn new(y: &'a Yangian, cur: &'a Currents, gate: Gate) -> Self {
        Adjoint { y, cur, gate }
    }

    pub fn gate(&self) -> Gate {
        self.gate
    }

    fn order(&self) -> usize {
        self.y.order()
    }

    fn gated(&self, i: usize, alpha: usize, j: usize) -> bool {
        match self.gate {
            Gate::Full => i <= alpha && alpha < j,
            Gate::Narrow => i <= alpha && alpha + 1 < j,
        }
    }

    fn current(&self, kind: CurrentKind, alpha: usize, c: &Rational) -> AlgebraSeries {
        self.cur.series(kind, alpha).shift(c)
    }

    /// `sign * [T_{a,b}^(1), X]`; `T_{a,b}^(1)` is the degree-zero root
    /// vector `e_{a,b}^(0)` or `f_{a,b}^(0)`.
    pub fn ad(&self, a: usize, b: usize, sign: i64, x: &AlgebraSeries) -> AlgebraSeries {
        if a == b {
            return x.clone();
        }
        let alg = self.y.algebra();
        let root = self.y.generator(a, b, 1);
        let s = int(sign);
        x.map_linear(|c| alg.commutator(&root, c).scale(&s))
    }

    fn attach(&self, side: Side, corr: &AlgebraSeries, x: &AlgebraSeries) -> AlgebraSeries {
        let alg = self.y.algebra();
        match side {
            Side::Left => corr.mul(alg, x),
            Side::Right => x.mul(alg, corr),
        }
    }

    /// `E_{i,j}(u+c)(X) = Ad+_{e_ij}(X) + gate * Ad-_{e_{i,a}}(Ad+_{e_{a+1,j}}(e_a(u+c))) X`.
    pub fn cal_e(&self, side: Side, alpha: usize, i: usize, j: usize, c: &Rational, x: &AlgebraSeries) -> AlgebraSeries {
        let main = self.ad(i, j, 1, x);
        if !self.gated(i, alpha, j) {
            return main;
        }
        let inner = self.ad(alpha + 1, j, 1, &self.current(CurrentKind::E, alpha, c));
        let corr = self.ad(i, alpha, -1, &inner);
        main.add(&self.attach(side, &corr, x))
    }

    /// `F_{j,i}(u+c)(X) = Ad-_{f_ji}(X) + gate * Ad+_{f_{a,i}}(Ad-_{f_{j,a+1}}(f_a(u+c))) X`.
    pub fn cal_f(&self, side: Side, alpha: usize, j: usize, i: usize, c: &Rational, x: &AlgebraSeries) -> AlgebraSeries {
        let main = self.ad(j, i, -1, x);
        if !self.gated(i, alpha, j) {
            return main;
        }
        let inner = self.ad(j, alpha + 1, -1, &self.current(CurrentKind::F, alpha, c));
        let corr = self.ad(alpha, i, 1, &inner);
        main.add(&self.attach(side, &corr, x))
    }

    /// `1` for `i > j`, `X` for `i = j`, otherwise `X + E_ij(F_ji(X))` with
    /// the `u+1` on the inner operator for left actions and on the outer one
    /// for right actions.
    pub fn cal_h(&self, side: Side, alpha: usize, i: usize, j: usize, c: &Rational, x: &AlgebraSeries) -> AlgebraSeries {
        if i > j {
            return AlgebraSeries::one(self.order());
        }
        if i == j {
            return x.clone();
        }
        let c1 = c + int(1);
        let composed = match side {
            Side::Left => self.cal_e(side, alpha, i, j, c, &self.cal_f(side, alpha, j, i, &c1, x)),
            Side::Right => self.cal_e(side, alpha, i, j, &c1, &self.cal_f(side, alpha, j, i, c, x)),
        };
        x.add(&composed)
    }

    /// `(E_{1,k1} ... E_{m-1,k_{m-1}})(E_{m+1,k_m}(X))`, innermost applied first.
    pub fn big_e(&self, side: Side, alpha: usize, ks: &[usize], c: &Rational, x: &AlgebraSeries) -> AlgebraSeries {
        let m = ks.len();
        if m == 0 {
            return AlgebraSeries::one(self.order());
        }
        let mut acc = self.cal_e(side, alpha, m + 1, ks[m - 1], c, x);
        for p in (1..m).rev() {
            acc = self.cal_e(side, alpha, p, ks[p - 1], c, &acc);
        }
        acc
    }

    pub fn big_f(&self, side: Side, alpha: usize, ks: &[usize], c: &Rational, x: &AlgebraSeries) -> AlgebraSeries {
        let m = ks.len();
        if m == 0 {
            return AlgebraSeries::one(self.order());
        }
        let mut acc = self.cal_f(side, alpha, ks[m - 1], m + 1, c, x);
        for p in (1..m).rev() {
            acc = self.cal_f(side, alpha, ks[p - 1], p, c, &acc);
        }
        acc
    }

    pub fn big_h(&self, side: Side, alpha: usize, ks: &[usize], c: &Rational, x: &AlgebraSeries) -> AlgebraSeries {
        let m = ks.len();
        if m == 0 {
            return AlgebraSeries::one(self.order());
        }
        let mut acc = self.cal_h(side, alpha, m + 1, ks[m - 1], c, x);
        for p in (1..m).rev() {
            acc = self.cal_h(side, alpha, p, ks[p - 1], c, &acc);
        }
        acc
    }

    /// The hatted `E` built from right actions with superscript `m`.
    pub fn e_hat(&self, m: usize, args: &HatArgs, x: &AlgebraSeries) -> AlgebraSeries {
        let n = self.y.n();
        let r = Side::Right;
        if m == 1 {
            let inner = self.cal_f(r, 1, n - 1, 1, &args.f, x);
            return self.cal_e(r, 1, 2, n, &args.e, &inner);
        }
        let mut acc = self.cal_f(r, m, n, m, &args.f, x);
        acc = self.cal_e(r, m, m + 1, n, &args.e, &acc);
        for p in (2..m).rev() {
            acc = self.cal_h(r, m, p, n - m + p, &args.h, &acc);
        }
        acc = self.cal_f(r, m, n - m, 1, &args.f, &acc);
        self.cal_e(r, m, 1, n - m + 1, &args.e, &acc)
    }

    /// The hatted `F` built from left actions with superscript `m`.
    pub fn f_hat(&self, m: usize, args: &HatArgs, x: &AlgebraSeries) -> AlgebraSeries {
        let n = self.y.n();
        let l = Side::Left;
        if m == 1 {
            let inner = self.cal_f(l, 1, n, 2, &args.f, x);
            return self.cal_e(l, 1, 1, n - 1, &args.e, &inner);
        }
        let mut acc = self.cal_f(l, m, n, m + 1, &args.f, x);
        acc = self.cal_e(l, m, m, n, &args.e, &acc);
        for p in (2..m).rev() {
            acc = self.cal_h(l, m, p, n - m + p, &args.h, &acc);
        }
        acc = self.cal_f(l, m, n - m + 1, 1, &args.f, &acc);
        self.cal_e(l, m, 1, n - m, &args.e, &acc)
    }
}

/// Spectral arguments of the three kinds of factors inside a hatted
/// operator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HatArgs {
    pub e: Rational,
    pub f: Rational,
    pub h: Rational,
}

impl HatArgs {
    /// Printed arguments at `u + c`: `E` factors at `u+c+1`, the others at
    /// `u+c`.
    pub fn e_hat(c: &Rational) -> Self {
        HatArgs {
            e: c + int(1),
            f: c.clone(),
            h: c.clone(),
        }
    }

    /// As [`HatArgs::e_hat`], except that for `m = 1` the `F` factor sits at
    /// `u+c+1` and the `E` factor at `u+c`.
    pub fn f_hat(m: usize, c: &Rational) -> Self {
        if m == 1 {
            HatArgs {
                e: c.clone(),
                f: c + int(1),
                h: c.clone(),
            }
        } else {
            Self::e_hat(c)
        }
    }
}
