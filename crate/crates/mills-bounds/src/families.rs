//! Every bound family: the classic convergents, the named closed-form
//! bounds, the two Shenton/Kouba j-families, and the three optimal-constant
//! families (square-root, rational, exponential terminal seeds).
//!
//! Each bound is phi(x)/h(x) with h either a closed form or a depth-k
//! continued fraction x + 1/(x + 2/(... x + k/g(x))) closed by a terminal
//! seed g. Evaluation runs the fraction backwards from the seed, which is
//! numerically stable here since every term is positive.

use std::fmt;

use crate::constants;
use crate::dd::{consts, Dd};
use crate::oracle;
use crate::{Error, Result};

/// Practical depth cap for the continued-fraction families.
pub const MAX_ORDER: u32 = 1000;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Convergents of the classic tail fraction (terminal seed x).
    ClassicCf,
    /// Shenton/Kouba seed sqrt(k + 1/2 + (x/2)^2) + x/2.
    ShentonJ1,
    /// Shenton/Kouba seed sqrt(k + 1 + (x/2)^2) + x/2.
    ShentonJ2,
    /// Optimal-constant seed sqrt(c_k* + (x/2)^2) + x/2.
    SqrtStar,
    /// Optimal-constant rational seed sqrt(c_k*) + (c_k* - k) x.
    RationalStar,
    /// Optimal-constant exponential seed x + sqrt(c_k*) exp(-delta_k x).
    ExpStar,
    KomatuLower,
    KomatuUpper,
    Pollak,
    Sampford,
    /// Lower bound pi phi(x) / ((pi - 1) x + sqrt(2 pi + x^2)).
    Lb1,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::ClassicCf,
        Family::ShentonJ1,
        Family::ShentonJ2,
        Family::SqrtStar,
        Family::RationalStar,
        Family::ExpStar,
        Family::KomatuLower,
        Family::KomatuUpper,
        Family::Pollak,
        Family::Sampford,
        Family::Lb1,
    ];

    /// Families evaluated through a terminal seed and the fraction recurrence;
    /// the rest fix their own closed-form shape and ignore the order.
    pub fn is_parametric(self) -> bool {
        matches!(
            self,
            Family::ClassicCf
                | Family::ShentonJ1
                | Family::ShentonJ2
                | Family::SqrtStar
                | Family::RationalStar
                | Family::ExpStar
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::ClassicCf => "classic-cf",
            Family::ShentonJ1 => "shenton-j1",
            Family::ShentonJ2 => "shenton-j2",
            Family::SqrtStar => "sqrt-star",
            Family::RationalStar => "rational-star",
            Family::ExpStar => "exp-star",
            Family::KomatuLower => "komatu-lower",
            Family::KomatuUpper => "komatu-upper",
            Family::Pollak => "pollak",
            Family::Sampford => "sampford",
            Family::Lb1 => "lb1",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == s)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One bound: a family plus (for the parametric families) the fraction depth.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoundId {
    pub family: Family,
    pub k: u32,
}

impl BoundId {
    pub fn new(family: Family, k: u32) -> BoundId {
        BoundId { family, k }
    }

    pub fn validate(self) -> Result<()> {
        if self.family.is_parametric() && self.k > MAX_ORDER {
            return Err(Error::OrderTooLarge {
                k: self.k,
                max: MAX_ORDER,
            });
        }
        Ok(())
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family.is_parametric() {
            write!(f, "{}-{}", self.family.name(), self.k)
        } else {
            f.write_str(self.family.name())
        }
    }
}

impl std::str::FromStr for BoundId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        if let Some(f) = Family::parse(s) {
            return Ok(BoundId::new(f, 0));
        }
        if let Some(i) = s.rfind('-') {
            if let (Some(f), Ok(k)) = (Family::parse(&s[..i]), s[i + 1..].parse::<u32>()) {
                if f.is_parametric() {
                    return Ok(BoundId::new(f, k));
                }
            }
        }
        Err(format!("unknown bound id `{s}`"))
    }
}

/// Which side of 1 - Phi(x) the bound phi/h sits on for x > 0.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Side {
    Upper,
    Lower,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Upper => "upper",
            Side::Lower => "lower",
        })
    }
}

/// Side of the oracle the bound is certified to sit on, determined by the
/// family and the parity of k alone.
pub fn bound_side(bound: BoundId) -> Side {
    let even = bound.k % 2 == 0;
    match bound.family {
        Family::ClassicCf | Family::SqrtStar | Family::RationalStar | Family::ExpStar => {
            if even {
                Side::Upper
            } else {
                Side::Lower
            }
        }
        Family::ShentonJ1 => {
            if even {
                Side::Upper
            } else {
                Side::Lower
            }
        }
        Family::ShentonJ2 => {
            if even {
                Side::Lower
            } else {
                Side::Upper
            }
        }
        Family::KomatuUpper | Family::Pollak | Family::Sampford => Side::Upper,
        Family::KomatuLower | Family::Lb1 => Side::Lower,
    }
}

/// Whether the exponential seed's exp(-delta_k x) term vanishes below the
/// representable range at this x, making the seed collapse to x exactly.
/// Evaluations past this point carry degraded precision.
pub fn exp_seed_underflows(k: u32, x: f64) -> bool {
    constants::delta_k(k).to_f64() * x > 745.0
}

/// Terminal seed g_k(x) closing the depth-k fraction. Only the parametric
/// families have one.
pub fn terminal_g(family: Family, k: u32, x: f64) -> Result<Dd> {
    if !x.is_finite() || x < 0.0 {
        return Err(Error::DomainX {
            bound: BoundId::new(family, k),
            x,
        });
    }
    if k > MAX_ORDER {
        return Err(Error::OrderTooLarge { k, max: MAX_ORDER });
    }
    let half = Dd::from_f64(x).ldexp(-1);
    let quarter_sq = Dd::from_prod(x, x).ldexp(-2);
    match family {
        Family::ClassicCf => {
            if x == 0.0 && k == 0 {
                // h_0(0) = 0 would divide by zero downstream
                return Err(Error::DomainX {
                    bound: BoundId::new(family, k),
                    x,
                });
            }
            Ok(Dd::from_f64(x))
        }
        Family::ShentonJ1 => Ok((Dd::from_f64(k as f64 + 0.5) + quarter_sq).sqrt() + half),
        Family::ShentonJ2 => Ok((Dd::from_f64(k as f64 + 1.0) + quarter_sq).sqrt() + half),
        Family::SqrtStar => Ok((constants::c_star(k) + quarter_sq).sqrt() + half),
        Family::RationalStar => {
            let c = constants::c_star(k);
            Ok(c.sqrt() + (c - Dd::from_f64(k as f64)).mul_f64(x))
        }
        Family::ExpStar => {
            let c = constants::c_star(k);
            let decay = (-constants::delta_k(k).mul_f64(x)).exp();
            Ok(Dd::from_f64(x) + c.sqrt() * decay)
        }
        _ => Err(Error::NoTerminalSeed(family)),
    }
}

/// Backward recurrence r <- x + j/r from r = g, j = k down to 1; for k = 0
/// the result is the seed itself.
pub fn continued_fraction_h(k: u32, x: f64, g_terminal: Dd) -> Result<Dd> {
    if x < 0.0 {
        return Err(Error::NegativeX(x));
    }
    if k > MAX_ORDER {
        return Err(Error::OrderTooLarge { k, max: MAX_ORDER });
    }
    if !(g_terminal > Dd::ZERO) {
        return Err(Error::NonPositiveSeed(g_terminal.to_f64()));
    }
    let xd = Dd::from_f64(x);
    let mut r = g_terminal;
    for j in (1..=k).rev() {
        r = xd + Dd::from_f64(j as f64) / r;
        if !r.is_finite() {
            return Err(Error::NonFinite("continued fraction recurrence"));
        }
    }
    Ok(r)
}

/// h(x) for any bound: closed forms for the named bounds, terminal seed plus
/// fraction recurrence for the rest.
pub fn eval_h(bound: BoundId, x: f64) -> Result<Dd> {
    bound.validate()?;
    if !x.is_finite() || x < 0.0 {
        return Err(Error::DomainX { bound, x });
    }
    let sq = |c: f64| (Dd::from_f64(c) + Dd::from_prod(x, x)).sqrt();
    match bound.family {
        Family::KomatuLower => Ok((sq(4.0).add_f64(x)).ldexp(-1)),
        Family::KomatuUpper => Ok((sq(2.0).add_f64(x)).ldexp(-1)),
        Family::Pollak => {
            let c = Dd::from_f64(8.0) / consts::PI + Dd::from_prod(x, x);
            Ok((c.sqrt().add_f64(x)).ldexp(-1))
        }
        Family::Sampford => Ok((sq(8.0) + Dd::from_prod(3.0, x)).ldexp(-2)),
        Family::Lb1 => {
            let c = consts::PI.ldexp(1) + Dd::from_prod(x, x);
            let num = (consts::PI - Dd::ONE).mul_f64(x) + c.sqrt();
            Ok(num / consts::PI)
        }
        _ => {
            let g = terminal_g(bound.family, bound.k, x)?;
            continued_fraction_h(bound.k, x, g)
        }
    }
}

/// The bound value phi(x)/h(x) together with its certified side.
pub fn tail_bound(bound: BoundId, x: f64) -> Result<(Dd, Side)> {
    let h = eval_h(bound, x)?;
    Ok((oracle::gaussian_density(x) / h, bound_side(bound)))
}
