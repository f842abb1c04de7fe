//! Canonical textual form. Printing then re-parsing reproduces the
//! polynomial exactly: terms descending in the lex order, rationals as
//! `p/q`, explicit `*` and `^`.

use super::{Poly, VarOrder};
use num_traits::{One, Signed};

impl Poly {
    /// Render with variable names taken from `order`.
    pub fn to_string_with(&self, order: &VarOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    out.push('-');
                }
                first = false;
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut parts: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                if abs.denom().is_one() {
                    parts.push(abs.numer().to_string());
                } else {
                    parts.push(format!("{}/{}", abs.numer(), abs.denom()));
                }
            }
            for &(v, e) in m.pairs().iter() {
                let name = order.var_name(v);
                if e == 1 {
                    parts.push(name);
                } else {
                    parts.push(format!("{}^{}", name, e));
                }
            }
            out.push_str(&parts.join("*"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::super::*;

    #[test]
    fn print_forms() {
        let ord = VarOrder::algebraic(vec!["x", "y"]);
        let x = ord.var("x").unwrap();
        let y = ord.var("y").unwrap();
        let p = Poly::var_pow(y, 2)
            .mul(&Poly::var(x))
            .scale_int(-3)
            .add(&Poly::var(x).scale(&num_rational::BigRational::new(1.into(), 2.into())))
            .add(&Poly::from_int(-1));
        assert_eq!(p.to_string_with(&ord), "-3*x*y^2 + 1/2*x - 1");
        assert_eq!(Poly::zero().to_string_with(&ord), "0");
        assert_eq!(Poly::from_int(5).to_string_with(&ord), "5");
    }

    #[test]
    fn print_derivatives() {
        let ord = VarOrder::differential(vec!["x", "y"]);
        let y2 = Var::Deriv { base: 1, order: 2 };
        let y5 = Var::Deriv { base: 1, order: 5 };
        let p = Poly::var(y2).mul(&Poly::var(y5));
        assert_eq!(p.to_string_with(&ord), "y''*y^(5)");
    }
}
