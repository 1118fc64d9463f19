use std::fmt;

use super::UmbralError;
use crate::bernoulli;
use crate::numerics::Real;
use crate::special;

/// A bare umbral symbol that the moment table can turn into a number.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    /// B^n for any integer n (negative n: B^{−k} ↦ kζ(k+1)).
    Power(i64),
    /// log B ↦ −γ
    LogB,
    /// B log B ↦ (1 − log 2π)/2
    BLogB,
}

impl Symbol {
    /// Parses `B^n`, `B`, `log B`, `B log B`. Products of a power with a
    /// logarithm other than `B log B` have no tabled value and are refused.
    pub fn parse(text: &str) -> Result<Symbol, UmbralError> {
        let t: String = text.split_whitespace().collect::<Vec<_>>().join(" ");
        match t.as_str() {
            "B" => return Ok(Symbol::Power(1)),
            "log B" | "logB" => return Ok(Symbol::LogB),
            "B log B" | "BlogB" | "B logB" => return Ok(Symbol::BLogB),
            _ => {}
        }
        if let Some(rest) = t.strip_prefix("B^") {
            let rest = rest.trim_matches(|c| c == '(' || c == ')' || c == '{' || c == '}');
            if let Ok(n) = rest.parse::<i64>() {
                return Ok(Symbol::Power(n));
            }
        }
        if t.contains("log") {
            return Err(UmbralError::UnknownSymbol(format!(
                "{t} (composite symbols have no tabled value)"
            )));
        }
        Err(UmbralError::UnknownSymbol(t))
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Power(1) => write!(f, "B"),
            Symbol::Power(n) => write!(f, "B^{n}"),
            Symbol::LogB => write!(f, "log B"),
            Symbol::BLogB => write!(f, "B log B"),
        }
    }
}

/// The umbral moments. Stateless: values are produced at the current
/// precision on request, Bernoulli numbers come from the shared exact table.
#[derive(Clone, Copy, Debug, Default)]
pub struct MomentTable;

impl MomentTable {
    pub fn value(&self, sym: &Symbol) -> Result<Real, UmbralError> {
        match *sym {
            Symbol::Power(n) if n >= 0 => Ok(bernoulli::moment(n as usize)?),
            Symbol::Power(n) => {
                let k = -n;
                let z = special::zeta_real(&Real::from_i64(k + 1))?;
                Ok(z * Real::from_i64(k))
            }
            Symbol::LogB => Ok(-Real::euler_gamma()),
            Symbol::BLogB => Ok((Real::one() - (Real::pi() * Real::from_i64(2)).ln()) / Real::from_i64(2)),
        }
    }
}

pub fn moment_value(sym: &Symbol) -> Result<Real, UmbralError> {
    MomentTable.value(sym)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert!(moment_value(&Symbol::Power(3)).unwrap().is_zero());
        let v = moment_value(&Symbol::Power(-1)).unwrap();
        let pi = Real::pi();
        assert!((v - &pi * &pi / Real::from_i64(6)).abs().to_f64() < 1e-33);
        let g = moment_value(&Symbol::LogB).unwrap();
        assert!((g.to_f64() + 0.5772156649015329).abs() < 1e-15);
        let b = moment_value(&Symbol::BLogB).unwrap();
        assert!((b.to_f64() + 0.4189385332046727).abs() < 1e-15);
    }

    #[test]
    fn negative_powers_follow_zeta() {
        // B^{1−s} = ζ(s)(s − 1) at s = k + 1
        for k in 1..6 {
            let v = moment_value(&Symbol::Power(-k)).unwrap();
            let z = special::zeta_real(&Real::from_i64(k + 1)).unwrap();
            assert!((v - z * Real::from_i64(k)).abs().to_f64() < 1e-32);
        }
    }

    #[test]
    fn parsing() {
        assert_eq!(Symbol::parse("B^3").unwrap(), Symbol::Power(3));
        assert_eq!(Symbol::parse("B^-2").unwrap(), Symbol::Power(-2));
        assert_eq!(Symbol::parse("log B").unwrap(), Symbol::LogB);
        assert_eq!(Symbol::parse("B log B").unwrap(), Symbol::BLogB);
        assert!(matches!(
            Symbol::parse("B^-2 log B"),
            Err(UmbralError::UnknownSymbol(_))
        ));
    }

    #[test]
    fn beyond_cap_rejected() {
        assert!(moment_value(&Symbol::Power(100_000)).is_err());
    }
}
