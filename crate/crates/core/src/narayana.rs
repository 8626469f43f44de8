//! Higher-dimensional Narayana polynomials, Catalan numbers, and the
//! `A_{m,r}(x)` numerators of the Hankel generating functions.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{factorial, rat, reversal_sign};
use crate::hankel::{d, HankelParams};
use crate::hoggatt::hoggatt_binomial;
use crate::poly::{gamma_report, Polynomial};
use crate::report::{CheckId, PointParams, Status, VerificationReport};
use crate::{Integer, Poly, Rational, Series};

/// Extra series terms beyond what the claimed degree strictly needs.
pub const DEFAULT_MARGIN: usize = 5;

/// Row `s` of the dimension-`r` Narayana numbers, `sum_j N(r, s, j) x^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NarayanaTable {
    pub r: u64,
    pub s: u64,
    pub coeffs: Poly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct APoly {
    pub m: u64,
    pub r: u64,
    pub poly: Poly,
}

/// `(1-x)^(rs+1) sum_k <k+s over s>_r x^k`, certified to be a polynomial
/// of degree at most `(r-1)(s-1)` with integer coefficients.
pub fn narayana_poly(r: u64, s: u64, margin: usize) -> Result<NarayanaTable> {
    if r == 0 {
        return Err(Error::DomainError(
            "Narayana dimension r must be >= 1".into(),
        ));
    }
    let n = (r * s + 1) as usize;
    let bound = ((r - 1) * s.saturating_sub(1)) as usize;
    let order = n + bound + margin.max(1);
    let series = Series::from_fn(order, |k| {
        Rational::from_integer(hoggatt_binomial(k as i64 + s as i64, s as i64, r))
    });
    let coeffs = series.scale_to_polynomial(n, bound)?;
    if let Some(c) = coeffs.coeffs().iter().find(|c| !c.is_integer()) {
        return Err(Error::DomainError(format!(
            "non-integral Narayana coefficient {c}"
        )));
    }
    Ok(NarayanaTable { r, s, coeffs })
}

/// `C_{r,n} = (rn)! prod_{j<r} j! / (n+j)!`.
pub fn catalan_r(r: u64, n: u64) -> Integer {
    let mut num = factorial(r * n);
    let mut den = BigInt::one();
    for j in 0..r {
        num *= factorial(j);
        den *= factorial(n + j);
    }
    debug_assert!((&num % &den).is_zero());
    num / den
}

/// Rows of the `r = 3` Narayana list as printed, `s = 1..=4`.
const PRINTED_R3_ROWS: [&[i64]; 4] = [
    &[1],
    &[1, 3, 1],
    &[1, 10, 20, 10, 1],
    &[1, 22, 113, 119, 113, 22, 1],
];

/// Compare a computed row with the printed `r = 3` list, one note per
/// differing coefficient.
pub fn printed_row_discrepancies(table: &NarayanaTable) -> Vec<String> {
    if table.r != 3 || table.s == 0 || table.s as usize > PRINTED_R3_ROWS.len() {
        return Vec::new();
    }
    let printed = PRINTED_R3_ROWS[table.s as usize - 1];
    let printed_sum: i64 = printed.iter().sum();
    let mut notes: Vec<String> = (0..printed.len().max(table.coeffs.coeffs().len()))
        .filter_map(|j| {
            let p = rat(printed.get(j).copied().unwrap_or(0));
            let c = table.coeffs.coeff(j);
            (p != c).then(|| {
                format!(
                    "printed N(3,{},{j}) = {p} but the extraction gives {c}",
                    table.s
                )
            })
        })
        .collect();
    if !notes.is_empty() {
        notes.push(format!(
            "printed row sums to {printed_sum}, C_(3,{}) = {}",
            table.s,
            catalan_r(3, table.s)
        ));
    }
    notes
}

/// Row-sum, palindromicity and gamma-positivity check of one Narayana row.
pub fn check_narayana_row(r: u64, s: u64, margin: usize) -> VerificationReport {
    let params = PointParams {
        r: Some(r),
        s: Some(s),
        ..Default::default()
    };
    let table = match narayana_poly(r, s, margin) {
        Ok(t) => t,
        Err(e) => return VerificationReport::new(CheckId::Narayana, params, Status::Fail, e, ""),
    };
    let sum = table.coeffs.eval(&rat(1));
    let catalan = Rational::from_integer(catalan_r(r, s));
    let center = ((r - 1) * s.saturating_sub(1)) as usize;
    let gamma = gamma_report(&table.coeffs, center);
    let ok = sum == catalan && gamma.palindromic && gamma.positive;
    let mut rep = VerificationReport::new(
        CheckId::Narayana,
        params,
        Status::from_bool(ok),
        &sum,
        &catalan,
    );
    rep.note(format!("N(r,s,x) = {}", table.coeffs));
    if let Some(g) = &gamma.gamma {
        rep.note(format!("gamma = {}", join(&g.gammas)));
    }
    if !gamma.palindromic {
        rep.note(format!("not palindromic about {center}/2"));
    } else if !gamma.positive {
        rep.note("not gamma-positive");
    }
    for n in printed_row_discrepancies(&table) {
        rep.note(n);
    }
    rep
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn require_m_at_least_r_minus_1(m: u64, r: u64) -> Result<()> {
    if r == 0 || m + 1 < r {
        return Err(Error::DomainError(format!(
            "A_(m,r) needs r >= 1 and m >= r-1, got m={m}, r={r}"
        )));
    }
    Ok(())
}

/// `A_{m,r}` read off the Hankel generating function alone:
/// `(1-x)^(r(m-r+1)+1) sum_k d_k(m,r) x^k = (-1)^C(r,2) x^(m-r+1) A_{m,r}(x)`.
pub fn a_poly_from_hankel(m: u64, r: u64, margin: usize) -> Result<Poly> {
    require_m_at_least_r_minus_1(m, r)?;
    let shift = (m + 1 - r) as usize;
    let n = r as usize * shift + 1;
    let bound = shift + ((r - 1) * (m + 1 - r).saturating_sub(1)) as usize;
    let order = n + bound + margin.max(1);
    let base = HankelParams::binomial(0, m, r as usize);
    let series = Series::from_fn(order, |k| Rational::from_integer(d(base.at(k as u64))));
    let scaled = series.scale_to_polynomial(n, bound)?;
    let signed = scaled.scale(&rat(reversal_sign(r as usize)));
    signed.unshift(shift).ok_or_else(|| {
        Error::MismatchReported(format!(
            "x^{shift} does not divide the scaled series: {signed}"
        ))
    })
}

/// Theorem-2 route, checked against `narayana_poly(r, m-r+1)`.
pub fn a_poly_via_theorem2(m: u64, r: u64, margin: usize) -> Result<APoly> {
    let poly = a_poly_from_hankel(m, r, margin)?;
    let nar = narayana_poly(r, m + 1 - r, margin)?;
    if nar.coeffs != poly {
        return Err(Error::MismatchReported(format!(
            "Hankel route {poly} vs Narayana route {}",
            nar.coeffs
        )));
    }
    Ok(APoly { m, r, poly })
}

/// `F_n(a, b, x) = (x^a D^b)^n 1/(1-x)`, starting from `order` terms.
pub fn f_operator(n: u64, a: usize, b: usize, order: usize) -> Result<Series> {
    let mut f = Series::geometric(order);
    for _ in 0..n {
        f = f.derivative(b)?.shift(a);
    }
    Ok(f)
}

/// Operator route
/// `A_{m,r} = (1-x)^(r(m-r+1)+1) F_{m-r+1}(r-1, r, x) / (x^(r-1) prod_j (m+j+1-r)!/j!)`
/// without comparison to any other route. `A_{r-1,r} = 1`.
pub fn a_poly_from_operator(m: u64, r: u64, margin: usize) -> Result<Poly> {
    require_m_at_least_r_minus_1(m, r)?;
    if m + 1 == r {
        return Ok(Polynomial::one());
    }
    let steps = m + 1 - r;
    let n = (r * steps + 1) as usize;
    let deg = ((r - 1) * (m - r)) as usize;
    let low = (r - 1) as usize;
    // each step trades b = r derivatives for a = r-1 shifts
    let order = steps as usize + n + low + deg + margin.max(1);
    let f = f_operator(steps, low, r as usize, order)?;
    let scaled = f.scale_to_polynomial(n, low + deg)?;
    let stripped = scaled.unshift(low).ok_or_else(|| {
        Error::MismatchReported(format!("x^{low} does not divide the operator numerator"))
    })?;
    let mut norm = rat(1);
    for j in 0..r {
        norm *= Rational::new(factorial(m + j + 1 - r), factorial(j));
    }
    Ok(stripped.scale(&(rat(1) / norm)))
}

/// Operator route, checked against the Hankel route.
pub fn a_poly_via_agapito(m: u64, r: u64, margin: usize) -> Result<APoly> {
    let poly = a_poly_from_operator(m, r, margin)?;
    let hankel = a_poly_from_hankel(m, r, margin)?;
    if hankel != poly {
        return Err(Error::MismatchReported(format!(
            "operator route {poly} vs Hankel route {hankel}"
        )));
    }
    Ok(APoly { m, r, poly })
}

/// Triple-route agreement for `A_{m,r}`, plus its shape.
pub fn check_theorem2(m: u64, r: u64, margin: usize) -> VerificationReport {
    let params = PointParams {
        s: Some(1),
        m: Some(m),
        r: Some(r),
        k: None,
    };
    if r == 0 || m + 1 < r {
        return VerificationReport::skipped(CheckId::Theorem2, params, "requires m >= r-1");
    }
    let routes = (
        narayana_poly(r, m + 1 - r, margin),
        a_poly_from_hankel(m, r, margin),
        a_poly_from_operator(m, r, margin),
    );
    let (nar, hank, op) = match routes {
        (Ok(a), Ok(b), Ok(c)) => (a.coeffs, b, c),
        (a, b, c) => {
            let errs: Vec<String> = [a.err(), b.err(), c.err()]
                .into_iter()
                .flatten()
                .map(|e| e.to_string())
                .collect();
            return VerificationReport::new(
                CheckId::Theorem2,
                params,
                Status::Fail,
                errs.join("; "),
                "",
            );
        }
    };
    let agree = nar == hank && hank == op;
    let status = if agree {
        Status::Pass
    } else {
        Status::Mismatch
    };
    let mut rep = VerificationReport::new(CheckId::Theorem2, params, status, &hank, &nar);
    if op != hank {
        rep.note(format!("operator route gives {op}"));
    }
    let deg = ((r - 1) * (m + 1 - r).saturating_sub(1)) as usize;
    let gamma = gamma_report(&hank, deg);
    if !(gamma.palindromic && hank.is_unimodal() && gamma.positive) {
        rep.status = Status::Fail;
        rep.note("A_(m,r) is not palindromic, unimodal and gamma-positive");
    }
    if hank.coeffs().iter().any(|c| c.is_negative()) {
        rep.note("negative coefficient");
    }
    rep
}
