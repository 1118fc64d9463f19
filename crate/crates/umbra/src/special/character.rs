use super::SpecialError;
use crate::numerics::{Complex, Real};

/// A Dirichlet character given by its value table χ(1), …, χ(k).
#[derive(Clone, Debug)]
pub struct DirichletCharacter {
    modulus: u64,
    values: Vec<Complex>,
    principal: bool,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl DirichletCharacter {
    /// Validates the table: zero exactly off the units, unit modulus on
    /// them, multiplicative, χ(1) = 1.
    pub fn new(modulus: u64, values: Vec<Complex>) -> Result<Self, SpecialError> {
        let k = modulus;
        if k == 0 || values.len() as u64 != k {
            return Err(SpecialError::Character(format!(
                "modulus {k} needs exactly {k} table entries, got {}",
                values.len()
            )));
        }
        let tol = 1e-12;
        for r in 1..=k {
            let v = &values[(r - 1) as usize];
            let unit = gcd(r, k) == 1;
            let m = v.abs().to_f64();
            if unit && (m - 1.0).abs() > tol {
                return Err(SpecialError::Character(format!(
                    "|χ({r})| must be 1 for gcd({r},{k}) = 1"
                )));
            }
            if !unit && m > tol {
                return Err(SpecialError::Character(format!(
                    "χ({r}) must vanish since gcd({r},{k}) > 1"
                )));
            }
        }
        let one = &values[0];
        if (one.re.to_f64() - 1.0).abs() > tol || one.im.to_f64().abs() > tol {
            return Err(SpecialError::Character("χ(1) must be 1".into()));
        }
        let at = |r: u64| &values[((r - 1) % k) as usize];
        for a in 1..=k {
            for b in 1..=k {
                let ab = (a * b - 1) % k + 1;
                let d = &(at(a) * at(b)) - at(ab);
                if d.abs().to_f64() > 1e-10 {
                    return Err(SpecialError::Character(format!(
                        "not multiplicative: χ({a})χ({b}) ≠ χ({ab})"
                    )));
                }
            }
        }
        let principal = (1..=k).all(|r| gcd(r, k) != 1 || (at(r).re.to_f64() - 1.0).abs() < tol);
        Ok(DirichletCharacter {
            modulus,
            values,
            principal,
        })
    }

    /// From real table entries (the common case for quadratic characters).
    pub fn from_reals(values: &[i64]) -> Result<Self, SpecialError> {
        let v = values.iter().map(|&x| Complex::from_real(Real::from_i64(x))).collect();
        Self::new(values.len() as u64, v)
    }

    /// The trivial character mod 1.
    pub fn principal_mod1() -> Self {
        Self::from_reals(&[1]).expect("valid")
    }

    /// The non-principal character mod 4: 1, 0, −1, 0.
    pub fn chi4() -> Self {
        Self::from_reals(&[1, 0, -1, 0]).expect("valid")
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_principal(&self) -> bool {
        self.principal
    }

    /// χ(n), periodic in n.
    pub fn value(&self, n: u64) -> Complex {
        if n == 0 {
            return self.values[(self.modulus - 1) as usize].clone();
        }
        self.values[((n - 1) % self.modulus) as usize].clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins() {
        assert!(DirichletCharacter::principal_mod1().is_principal());
        let c = DirichletCharacter::chi4();
        assert!(!c.is_principal());
        assert_eq!(c.value(7).re.to_f64(), -1.0);
        assert_eq!(c.value(9).re.to_f64(), 1.0);
    }

    #[test]
    fn invalid_tables() {
        assert!(DirichletCharacter::from_reals(&[1, 1, -1, 0]).is_err());
        assert!(DirichletCharacter::from_reals(&[1, 0, 1]).is_err());
        assert!(DirichletCharacter::from_reals(&[1, -1, 1, -1, 1]).is_err());
        assert!(DirichletCharacter::from_reals(&[1, 0]).is_ok());
    }
}
