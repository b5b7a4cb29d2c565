//! Descending-power text rendering.
//!
//! Plain output round-trips through the parser exactly; LaTeX output is for
//! human-readable reports. Zero terms are omitted, unit coefficients are
//! dropped in front of the variable, and `^1` is never printed.

use crate::poly::Poly;
use crate::rat::Rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    /// `x^4 - 10*x^3 + 35*x^2 - 50*x + 24`; reparses to the same polynomial.
    Plain,
    /// `x^4 - 10 x^3 + 35 x^2 - 50 x + 24`, `\frac` for rationals.
    Latex,
}

/// Renders a nonnegative rational as a standalone number.
pub fn render_rat(r: &Rat, style: Style) -> String {
    match style {
        Style::Plain => r.to_string(),
        Style::Latex => {
            if r.is_integer() {
                r.numer().to_string()
            } else if r.is_negative() {
                format!("-\\frac{{{}}}{{{}}}", -r.numer(), r.denom())
            } else {
                format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
            }
        }
    }
}

fn power(var: &str, k: usize, style: Style) -> String {
    match (k, style) {
        (1, _) => var.to_string(),
        (_, Style::Plain) => format!("{var}^{k}"),
        (_, Style::Latex) if k < 10 => format!("{var}^{k}"),
        (_, Style::Latex) => format!("{var}^{{{k}}}"),
    }
}

fn term(magnitude: &Rat, k: usize, var: &str, style: Style) -> String {
    if k == 0 {
        return render_rat(magnitude, style);
    }
    let vp = power(var, k, style);
    if magnitude == &Rat::one() {
        return vp;
    }
    match style {
        Style::Plain => format!("{}*{}", render_rat(magnitude, style), vp),
        Style::Latex => format!("{} {}", render_rat(magnitude, style), vp),
    }
}

/// Renders `f` in descending powers of its variable.
pub fn render(f: &Poly, style: Style) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let n = f.degree().expect("nonzero");
    let var = f.variable_name();
    let mut out = String::new();
    for k in (0..=n).rev() {
        let c = f.coeff(k);
        if c.is_zero() {
            continue;
        }
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        out.push_str(&term(&c.abs(), k, var, style));
    }
    out
}
