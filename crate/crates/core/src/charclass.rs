//! Characteristic-class arithmetic: Chern characters, anomaly polynomials and
//! Singer divisibility.
//!
//! Classes are commuting even symbols in one fixed signature. Gauge classes
//! are `c1..c6`, `ch1..ch6`, `p1E`, `p2E`; tangent classes are `p1T`, `p2T`;
//! `a` and `lambda` sit in degree 4.

use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::gca::{Generator, Poly, Signature, Substitution};
use crate::scalar::{int, ratio, Scalar};

pub type CharPoly<S> = Poly<S>;

/// The signature of all class symbols.
pub fn class_signature() -> Arc<Signature> {
    static SIG: OnceLock<Arc<Signature>> = OnceLock::new();
    SIG.get_or_init(|| {
        let mut g = Vec::new();
        for i in 1..=6 {
            g.push(Generator::new(format!("c{i}"), 2 * i));
        }
        for i in 1..=6 {
            g.push(Generator::new(format!("ch{i}"), 2 * i));
        }
        g.push(Generator::new("p1T", 4));
        g.push(Generator::new("p2T", 8));
        g.push(Generator::new("p1E", 4));
        g.push(Generator::new("p2E", 8));
        g.push(Generator::new("a", 4));
        g.push(Generator::new("lambda", 4));
        Signature::new(g).expect("distinct class names")
    })
    .clone()
}

pub fn symbol<S: Scalar>(name: &str) -> Result<CharPoly<S>> {
    Poly::named(&class_signature(), name)
}

fn sym<S: Scalar>(name: &str) -> CharPoly<S> {
    symbol(name).expect("built-in symbol")
}

/// Power sum `s_k` of the Chern roots in terms of `c_i`, by Newton's
/// identities `s_k = Σ_{i<k} (-1)^{i-1} c_i s_{k-i} + (-1)^{k-1} k c_k`.
pub fn power_sum<S: Scalar>(k: usize) -> Result<CharPoly<S>> {
    if !(1..=6).contains(&k) {
        return Err(Error::InvalidArgument(format!("power sum index {k} outside 1..6")));
    }
    let sig = class_signature();
    let mut s: Vec<CharPoly<S>> = vec![Poly::zero(&sig)];
    for m in 1..=k {
        let mut acc = Poly::zero(&sig);
        for i in 1..m {
            let term = &sym::<S>(&format!("c{i}")) * &s[m - i];
            acc = &acc + &term.scale(&int(if i % 2 == 1 { 1 } else { -1 }));
        }
        let last = sym::<S>(&format!("c{m}")).scale(&int((if m % 2 == 1 { 1 } else { -1 }) * m as i64));
        s.push(&acc + &last);
    }
    Ok(s.pop().expect("k ≥ 1"))
}

/// `ch_k = s_k / k!` in terms of `c_i`.
pub fn chern_character_component<S: Scalar>(k: usize) -> Result<CharPoly<S>> {
    let fact: i64 = (1..=k as i64).product();
    Ok(power_sum::<S>(k)?.scale(&ratio(1, fact)))
}

/// Substitutes `symbol := value` for each pair; every value must be
/// homogeneous of its symbol's degree.
pub fn reduce<S: Scalar>(p: &CharPoly<S>, subs: &[(&str, CharPoly<S>)]) -> Result<CharPoly<S>> {
    let sig = class_signature();
    let mut overrides = Vec::new();
    for (name, v) in subs {
        let i = sig.require(name)?;
        if !v.is_homogeneous_of(sig.degree(i)) {
            return Err(Error::DegreeMismatch {
                what: name.to_string(),
                expected: sig.degree(i) as i64,
                found: v.homogeneous_degree().map_or(-1, |d| d as i64),
            });
        }
        overrides.push((i, v.embed(&sig)?));
    }
    Substitution::with_overrides(&sig, &overrides)?.apply(&p.embed(&sig)?)
}

/// Expands every `ch_k` symbol into Chern classes.
pub fn expand_chern_characters<S: Scalar>(p: &CharPoly<S>) -> Result<CharPoly<S>> {
    let subs: Vec<(String, CharPoly<S>)> = (1..=6)
        .map(|k| Ok((format!("ch{k}"), chern_character_component(k)?)))
        .collect::<Result<_>>()?;
    let refs: Vec<(&str, CharPoly<S>)> = subs.iter().map(|(n, p)| (n.as_str(), p.clone())).collect();
    reduce(p, &refs)
}

/// The relation `lambda := ½ p1T`.
pub fn lambda_relation<S: Scalar>() -> (&'static str, CharPoly<S>) {
    ("lambda", sym::<S>("p1T").scale(&ratio(1, 2)))
}

pub const ANOMALY_PRESETS: [&str; 9] = [
    "gs", "het-m", "flux", "dual-gs", "dual-gs-form", "i8", "g8-th", "g4-quant", "g8-string",
];

/// Named anomaly and flux polynomials, up to positive normalization.
pub fn anomaly_polynomial<S: Scalar>(name: &str) -> Result<CharPoly<S>> {
    let p1 = sym::<S>("p1T");
    let p2 = sym::<S>("p2T");
    let a = sym::<S>("a");
    let l = sym::<S>("lambda");
    let half = |p: &CharPoly<S>| p.scale(&ratio(1, 2));
    let dual_gs = || {
        let t = &(&p2.scale(&ratio(1, 48)) - &sym::<S>("ch4")) + &(&p1 * &sym::<S>("ch2")).scale(&ratio(1, 48));
        &t - &(&p1 * &p1).scale(&ratio(1, 64))
    };
    Ok(match name {
        "gs" => &half(&p1) - &half(&sym("p1E")),
        "het-m" | "flux" => &p1.scale(&ratio(1, 4)) - &half(&sym("p1E")),
        "dual-gs" => dual_gs(),
        "dual-gs-form" => -dual_gs(),
        "i8" => &p2.scale(&ratio(1, 48)) - &(&p1 * &p1).scale(&ratio(1, 384)),
        "g8-th" => {
            let t = half(&(&a * &(&a - &l)));
            &t + &(&(&l * &l).scale(&int(7)) - &p2).scale(&ratio(1, 48))
        }
        "g4-quant" => &a - &half(&l),
        "g8-string" => &half(&(&a * &a)) - &p2.scale(&ratio(1, 48)),
        _ => return Err(Error::UnknownPreset(name.to_string())),
    })
}

/// `½ G4² − I8 − G8` with `G4 = a − ½λ`, `I8` evaluated at `p1T = 2λ`, and
/// `G8` the `g8-th` polynomial.
pub fn g8_consistency_residual<S: Scalar>() -> Result<CharPoly<S>> {
    let g4 = anomaly_polynomial::<S>("g4-quant")?;
    let two_l = sym::<S>("lambda").scale(&int(2));
    let i8 = reduce(&anomaly_polynomial::<S>("i8")?, &[("p1T", two_l)])?;
    let lhs = &(&g4 * &g4).scale(&ratio(1, 2)) - &i8;
    Ok(&lhs - &anomaly_polynomial::<S>("g8-th")?)
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Sum of the base-`p` digits of `n`.
pub fn sigma_digit_sum(p: u64, mut n: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut s = 0;
    while n > 0 {
        s += n % p;
        n /= p;
    }
    Ok(s)
}

/// `Π_{p ≤ n prime} p^q` with `q = max(0, ⌊(n − 1 − σ_p(k − 1)) / (p − 1)⌋)`.
pub fn singer_divisibility(n: u64, k: u64) -> Result<BigUint> {
    if n < 2 || k < 1 {
        return Err(Error::InvalidArgument("singer divisibility needs n ≥ 2 and k ≥ 1".into()));
    }
    let mut out = BigUint::one();
    for p in (2..=n).filter(|&p| is_prime(p)) {
        let num = (n - 1) as i64 - sigma_digit_sum(p, k - 1)? as i64;
        if num > 0 {
            let q = num / (p - 1) as i64;
            out *= BigUint::from(p).pow(q as u32);
        }
    }
    // Primes above n contribute nothing: the numerator is below p - 1.
    debug_assert!(((n + 1)..(2 * n + 2)).filter(|&p| is_prime(p)).all(|p| n - 1 < p - 1));
    Ok(out)
}
