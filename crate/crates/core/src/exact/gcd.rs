//! Multivariate gcd over ℚ: content extraction plus a recursive
//! subresultant remainder sequence in one main variable at a time.

use super::{MultiPoly, Ring};

/// Monic greatest common divisor; `gcd(a, 0)` is `a` made monic.
pub fn poly_gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    assert_eq!(a.nvars(), b.nvars(), "variable count");
    gcd_inner(a, b).monic()
}

fn gcd_inner(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    let n = a.nvars();
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one(n);
    }
    if a == b {
        return a.monic();
    }
    // Cheap exit: a monomial divides the other or shares only a monomial part.
    let va = a.support_vars();
    let vb = b.support_vars();
    let v = match va.iter().find(|v| vb.contains(v)) {
        Some(&v) => v,
        None => {
            // disjoint variable sets: gcd is the gcd of contents, which are
            // constants in the other operand's variables
            return MultiPoly::one(n);
        }
    };
    let ca = content(a, v);
    let cb = content(b, v);
    let c = gcd_inner(&ca, &cb);
    let pa = a.div_exact_poly(&ca).expect("content divides");
    let pb = b.div_exact_poly(&cb).expect("content divides");
    let ua = pa.coeffs_in(v);
    let ub = pb.coeffs_in(v);
    let g = if ua.len() >= ub.len() { subresultant_gcd(ua, ub) } else { subresultant_gcd(ub, ua) };
    let g = primitive_part(&g);
    c.times(&MultiPoly::from_coeffs_in(n, v, &g)).monic()
}

/// gcd of all coefficients with respect to variable `v`.
fn content(a: &MultiPoly, v: usize) -> MultiPoly {
    let mut g = MultiPoly::zero(a.nvars());
    for c in a.coeffs_in(v).iter().rev() {
        if c.is_zero() {
            continue;
        }
        g = gcd_inner(&g, c);
        if g.is_constant() {
            return MultiPoly::one(a.nvars());
        }
    }
    g.monic()
}

fn primitive_part(u: &[MultiPoly]) -> Vec<MultiPoly> {
    let n = u[0].nvars();
    let mut g = MultiPoly::zero(n);
    for c in u {
        if !c.is_zero() {
            g = gcd_inner(&g, c);
        }
    }
    if g.is_zero() {
        return u.to_vec();
    }
    u.iter().map(|c| c.div_exact_poly(&g).expect("content divides")).collect()
}

type Uni = Vec<MultiPoly>;

fn trim(mut u: Uni) -> Uni {
    while u.len() > 1 && u.last().is_some_and(|c| c.is_zero()) {
        u.pop();
    }
    u
}

fn is_zero_uni(u: &Uni) -> bool {
    u.iter().all(|c| c.is_zero())
}

fn deg(u: &Uni) -> usize {
    u.len() - 1
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
fn prem(a: &Uni, b: &Uni) -> Uni {
    let mut r = a.clone();
    let db = deg(b);
    let lb = b[db].clone();
    let mut steps = deg(a) as isize - db as isize + 1;
    while !is_zero_uni(&r) && deg(&r) >= db {
        let dr = deg(&r);
        let lr = r[dr].clone();
        let shift = dr - db;
        let mut next: Uni = r.iter().map(|c| c.times(&lb)).collect();
        for (i, bc) in b.iter().enumerate() {
            next[i + shift] = next[i + shift].minus(&bc.times(&lr));
        }
        next.truncate(dr);
        if next.is_empty() {
            next.push(lb.zero_like());
        }
        r = trim(next);
        steps -= 1;
    }
    while steps > 0 {
        r = r.iter().map(|c| c.times(&lb)).collect();
        steps -= 1;
    }
    trim(r)
}

/// Last nonzero subresultant of `a`, `b` (deg a >= deg b), up to a
/// factor from the coefficient domain.
fn subresultant_gcd(a: Uni, b: Uni) -> Uni {
    let mut a = trim(a);
    let mut b = trim(b);
    let one = a[0].one_like();
    let mut g = one.clone();
    let mut h = one.clone();
    loop {
        if is_zero_uni(&b) {
            return a;
        }
        if deg(&b) == 0 {
            return vec![one];
        }
        let delta = (deg(&a) - deg(&b)) as u32;
        let r = prem(&a, &b);
        if is_zero_uni(&r) {
            return b;
        }
        if deg(&r) == 0 {
            return vec![one];
        }
        let divisor = g.times(&h.pow(delta));
        a = b;
        b = r.iter().map(|c| c.div_exact_poly(&divisor).expect("subresultant division")).collect();
        g = a[deg(&a)].clone();
        h = if delta == 0 {
            h
        } else {
            g.pow(delta).div_exact_poly(&h.pow(delta - 1)).expect("subresultant division")
        };
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i - 1)
    }

    #[test]
    fn difference_of_squares_shares_linear_factor() {
        let n = 2;
        let a = l(n, 1).pow(2).minus(&l(n, 2).pow(2));
        let b = l(n, 1).plus(&l(n, 2));
        assert_eq!(poly_gcd(&a, &b), b);
    }

    #[test]
    fn gcd_with_zero_is_monic_input() {
        let n = 2;
        let p = l(n, 1).scale(&3.into()).plus(&l(n, 2));
        assert_eq!(poly_gcd(&p, &MultiPoly::zero(n)), p.monic());
        assert_eq!(poly_gcd(&p, &MultiPoly::zero(n)).leading_coeff(), 1.into());
    }

    #[test]
    fn disjoint_variables_are_coprime() {
        let n = 3;
        let a = l(n, 1).times(&l(n, 2));
        assert_eq!(poly_gcd(&a, &l(n, 3)), MultiPoly::one(n));
    }

    #[test]
    fn nontrivial_multivariate_factor() {
        let n = 3;
        let f = l(n, 1).plus(&l(n, 2)).plus(&l(n, 3));
        let g1 = l(n, 2).times(&l(n, 3)).minus(&l(n, 1));
        let g2 = l(n, 1).pow(2).plus(&l(n, 3));
        let a = f.times(&g1);
        let b = f.times(&g2).times(&l(n, 2));
        assert_eq!(poly_gcd(&a, &b), f);
        let sq = f.pow(2).times(&g1);
        assert_eq!(poly_gcd(&sq, &f.pow(3)), f.pow(2));
    }
}
