use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::SymExpansion;
use crate::combinat::Partition;
use crate::qpoly::{q_int, QPoly};

fn braced(s: String) -> String {
    if s.chars().count() == 1 {
        s
    } else {
        format!("{{{s}}}")
    }
}

fn q_power(k: usize) -> String {
    match k {
        0 => String::new(),
        1 => "q".into(),
        _ => format!("q^{}", braced(k.to_string())),
    }
}

/// Plain ascending rendering, e.g. `1 + 2q + q^2`.
fn raw(p: &QPoly) -> String {
    let mut out = String::new();
    for (i, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let abs = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if i == 0 || !abs.is_one() {
            out.push_str(&abs.to_string());
        }
        out.push_str(&q_power(i));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Factored rendering with q-brackets folded greedily:
/// `c q^s [m]_q! [k]_q … (rest)`, falling back to the raw form.
pub fn latex_poly(p: &QPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut sign = "";
    let mut r = p.clone();
    if r.coeffs().iter().all(|c| !c.is_positive()) {
        sign = "-";
        r = -r;
    }
    let s = r.low_degree().unwrap_or(0);
    r = QPoly::from_coeffs(r.coeffs()[s..].to_vec());
    let content = r.coeffs().iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    r = QPoly::from_coeffs(r.coeffs().iter().map(|c| c / &content).collect());

    let mut brackets: Vec<usize> = Vec::new();
    let mut k = r.degree().unwrap_or(0) + 1;
    while k >= 2 {
        match r.exact_div(&q_int(k)) {
            Ok(quot) => {
                brackets.push(k);
                r = quot;
                k = k.min(r.degree().unwrap_or(0) + 1);
            }
            Err(_) => k -= 1,
        }
    }
    // fold [2][3]…[m] into [m]!
    let mut factorials = Vec::new();
    loop {
        let mut m = 1;
        while brackets.contains(&(m + 1)) {
            m += 1;
        }
        if m < 3 {
            break;
        }
        for j in 2..=m {
            let pos = brackets.iter().position(|&b| b == j).expect("present");
            brackets.remove(pos);
        }
        factorials.push(m);
    }
    let mut parts: Vec<String> = Vec::new();
    if !content.is_one() {
        parts.push(content.to_string());
    }
    if s > 0 {
        parts.push(q_power(s));
    }
    for m in &factorials {
        parts.push(format!("[{m}]_q!"));
    }
    for b in &brackets {
        parts.push(format!("[{b}]_q"));
    }
    let is_unit = r.degree() == Some(0) && r.coeff(0).is_one();
    if !is_unit {
        if parts.is_empty() {
            return format!("{sign}{}", raw(&r));
        }
        parts.push(format!("({})", raw(&r)));
    }
    if parts.is_empty() {
        parts.push("1".into());
    }
    format!("{sign}{}", parts.join(" "))
}

fn index(p: &Partition) -> String {
    let wide = p.parts().iter().any(|&x| x >= 10);
    let s: Vec<String> = p.parts().iter().map(|x| x.to_string()).collect();
    braced(s.join(if wide { "," } else { "" }))
}

/// LaTeX for an expansion, e.g. `[3]_q e_3 + q e_{21}`. Terms appear in
/// decreasing lexicographic order of their partitions.
pub fn latex(f: &SymExpansion) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let letter = f.basis().letter();
    let mut out = String::new();
    for (p, c) in f.terms().iter().rev() {
        let mut coeff = latex_poly(c);
        let neg = coeff.starts_with('-');
        if neg {
            coeff.remove(0);
        }
        if !out.is_empty() {
            out.push_str(if neg { " - " } else { " + " });
        } else if neg {
            out.push('-');
        }
        let basis = if p.is_empty() { "1".to_string() } else { format!("{letter}_{}", index(p)) };
        if coeff == "1" {
            out.push_str(&basis);
        } else if p.is_empty() {
            out.push_str(&coeff);
        } else {
            out.push_str(&format!("{coeff} {basis}"));
        }
    }
    out
}
