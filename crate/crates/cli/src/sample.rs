//! CSV sampling of an equation's leading coefficient and its solutions over
//! one period, for plotting.

use riccati_core::riccati_trig::{TrigRiccatiEq, TrigSolutionSet};
use riccati_core::trigring::trig_eval;
use riccati_core::{Error, Result};

/// `%.12g`-style formatting.
pub fn format_sig(v: f64) -> String {
    const DIGITS: i32 = 12;
    if v == 0.0 {
        return "0".into();
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let sci = format!("{:.*e}", (DIGITS - 1) as usize, v);
    let (mantissa, exp) = sci.split_once('e').expect("scientific form");
    let exp: i32 = exp.parse().expect("exponent");
    let trim = |s: &str| -> String {
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s.to_string()
        }
    };
    let out = if (-5..DIGITS).contains(&exp) {
        trim(&format!("{:.*}", (DIGITS - 1 - exp).max(0) as usize, v))
    } else {
        format!("{}e{}{:02}", trim(mantissa), if exp < 0 { '-' } else { '+' }, exp.abs())
    };
    if out == "-0" {
        "0".into()
    } else {
        out
    }
}

/// Header `theta,A,Y1..Yk`, then `n` rows at evenly spaced angles in
/// `[0, 2 pi]`.
pub fn sample_curves_csv(eq: &TrigRiccatiEq, sols: &TrigSolutionSet, n: usize) -> Result<String> {
    if n < 2 {
        return Err(Error::BadGrid(n));
    }
    let grid: Vec<f64> = (0..n).map(|i| std::f64::consts::TAU * i as f64 / (n - 1) as f64).collect();
    let mut columns = vec![grid.clone(), trig_eval(eq.a(), &grid)];
    columns.extend(sols.entries().iter().map(|e| trig_eval(&e.trig, &grid)));
    let mut out = String::from("theta,A");
    for i in 1..=sols.len() {
        out.push_str(&format!(",Y{i}"));
    }
    out.push_str("\r\n");
    for row in 0..n {
        let cells: Vec<String> = columns.iter().map(|c| format_sig(c[row])).collect();
        out.push_str(&cells.join(","));
        out.push_str("\r\n");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(format_sig(36.0), "36");
        assert_eq!(format_sig(0.1 + 0.2), "0.3");
        assert_eq!(format_sig(std::f64::consts::PI), "3.14159265359");
        assert_eq!(format_sig(-1.5e-7), "-1.5e-07");
        assert_eq!(format_sig(1e15), "1e+15");
        assert_eq!(format_sig(-0.0), "0");
    }
}
