//! The three reference tables (rank/degree, derivation/structure/conformal
//! algebras, and the reduction constants) with exact consistency checks
//! against the built algebras.

use serde_json::{json, Value};

use crate::error::Result;
use crate::exactnum::Rat;
use crate::jordan::{build_jordan, JordanKind};
use crate::report::Report;
use crate::tkk::{build_tkk, der_dim, der_dim_formula, str_dim_formula};

/// Rank and degree table, symbolic in n.
pub fn table1_md() -> String {
    let mut s = String::new();
    s.push_str("| J | Gamma(n) | H_n(R) | H_n(C) | H_n(H) | H_3(O) |\n");
    s.push_str("|---|----------|--------|--------|--------|--------|\n");
    s.push_str("| rho | 2 | n | n | n | 3 |\n");
    s.push_str("| d | n-1 | 1 | 2 | 4 | 8 |\n");
    s
}

/// Derivation, structure, and conformal algebras, symbolic in n.
pub fn table2_md() -> String {
    let mut s = String::new();
    s.push_str("| J | der | str | co |\n");
    s.push_str("|---|-----|-----|----|\n");
    s.push_str("| Gamma(n) | so(n) | so(n,1)+R | so(2,n+1) |\n");
    s.push_str("| H_n(R) | so(n) | sl(n,R)+R | sp(n,R) |\n");
    s.push_str("| H_n(C) | su(n) | sl(n,C)+R | su(n,n) |\n");
    s.push_str("| H_n(H) | sp(n) | su*(2n)+R | so*(4n) |\n");
    s.push_str("| H_3(O) | f4 | e6(-26)+R | e7(-25) |\n");
    s
}

/// Reduction constants per conformal algebra, symbolic in its own n.
pub fn table3_md() -> String {
    let mut s = String::new();
    s.push_str(
        "| g0 | su(p,q) | sp(n,R) | so*(2n) | so(2,2n-2) | so(2,2n-1) | e6(-14) | e7(-25) |\n",
    );
    s.push_str(
        "|----|---------|---------|---------|------------|------------|---------|--------|\n",
    );
    s.push_str("| C | 1 | 1/2 | 2 | n-2 | n-3/2 | 3 | 4 |\n");
    s.push_str("| r | min{p,q} | n | [n/2] | 2 | 2 | 2 | 3 |\n");
    s.push_str("| (rho,beta^v) | p+q-1 | n | 2n-3 | 2n-3 | 2n-2 | 11 | 17 |\n");
    s
}

/// Per-case reduction constants `(C, r, (ρ, β∨))` of the conformal algebra
/// of `J(kind, n)`.
pub fn ehw_constants(kind: JordanKind, n: usize) -> (Rat, usize, usize) {
    let r = |p: i64, q: i64| Rat::new(p.into(), q.into());
    match kind {
        // co = so(2, m+1) with m = n: C = (m−1)/2, r = 2, (ρ,β∨) = m.
        JordanKind::SpinFactor => (r(n as i64 - 1, 2), 2, n),
        // sp(n,R)
        JordanKind::HermR => (r(1, 2), n, n),
        // su(n,n)
        JordanKind::HermC => (r(1, 1), n, 2 * n - 1),
        // so*(4n): table parameter 2n
        JordanKind::HermH => (r(2, 1), n, 4 * n - 3),
        // e7(−25)
        JordanKind::HermO3 => (r(4, 1), 3, 17),
    }
}

/// Emit the three tables and check the reduction-constant identities
/// `r = ρ` and `2C = d` against the built rank and degree.
pub fn ehw_tables() -> (String, String, String, Report) {
    let mut rep = Report::new();
    let cases = [
        (JordanKind::SpinFactor, 2),
        (JordanKind::SpinFactor, 3),
        (JordanKind::SpinFactor, 4),
        (JordanKind::SpinFactor, 5),
        (JordanKind::HermR, 3),
        (JordanKind::HermR, 4),
        (JordanKind::HermC, 3),
        (JordanKind::HermC, 4),
        (JordanKind::HermH, 2),
        (JordanKind::HermH, 3),
        (JordanKind::HermO3, 3),
    ];
    for (kind, n) in cases {
        let label = format!("{}({n})", kind.name());
        match build_jordan(kind, n).and_then(|a| a.rank_degree()) {
            Ok((rho, d)) => {
                let (c, r, _) = ehw_constants(kind, n);
                rep.check(
                    format!("split rank equals rank: {label}"),
                    r == rho,
                    format!("r = {r}, rho = {rho}"),
                );
                rep.check(
                    format!("2C equals degree: {label}"),
                    c * Rat::from_integer(2.into()) == Rat::from_integer((d as i64).into()),
                    format!("d = {d}"),
                );
            }
            Err(e) => rep.fail(format!("build {label}"), e.to_string()),
        }
    }
    (table1_md(), table2_md(), table3_md(), rep)
}

/// Verify the symbolic dimension columns of the algebra table against
/// dimensions computed from the built algebras.
pub fn verify_table_dimensions() -> Result<Report> {
    let mut rep = Report::new();
    let cases = [
        (JordanKind::SpinFactor, 2),
        (JordanKind::SpinFactor, 3),
        (JordanKind::SpinFactor, 4),
        (JordanKind::HermR, 2),
        (JordanKind::HermR, 3),
        (JordanKind::HermR, 4),
        (JordanKind::HermC, 2),
        (JordanKind::HermC, 3),
        (JordanKind::HermH, 2),
        (JordanKind::HermH, 3),
        (JordanKind::HermO3, 3),
    ];
    for (kind, n) in cases {
        let label = format!("{}({n})", kind.name());
        let jordan = build_jordan(kind, n)?;
        let d = der_dim(&jordan);
        rep.check(
            format!("der dimension: {label}"),
            d == der_dim_formula(kind, n),
            format!("built {d}, table {}", der_dim_formula(kind, n)),
        );
        let tkk = build_tkk(&jordan)?;
        rep.check(
            format!("str dimension: {label}"),
            tkk.str_dim() == str_dim_formula(kind, n),
            format!("built {}", tkk.str_dim()),
        );
        let expected_co = 2 * jordan.dim + str_dim_formula(kind, n);
        rep.check(
            format!("co dimension: {label}"),
            tkk.dim() == expected_co,
            format!("built {}", tkk.dim()),
        );
    }
    Ok(rep)
}

/// Table payloads as JSON (used by the command-line output).
pub fn tables_json() -> Value {
    json!({
        "rank_degree": {
            "spin": {"rho": "2", "d": "n-1"},
            "hermR": {"rho": "n", "d": "1"},
            "hermC": {"rho": "n", "d": "2"},
            "hermH": {"rho": "n", "d": "4"},
            "hermO3": {"rho": "3", "d": "8"},
        },
        "algebras": {
            "spin": {"der": "so(n)", "str": "so(n,1)+R", "co": "so(2,n+1)"},
            "hermR": {"der": "so(n)", "str": "sl(n,R)+R", "co": "sp(n,R)"},
            "hermC": {"der": "su(n)", "str": "sl(n,C)+R", "co": "su(n,n)"},
            "hermH": {"der": "sp(n)", "str": "su*(2n)+R", "co": "so*(4n)"},
            "hermO3": {"der": "f4", "str": "e6(-26)+R", "co": "e7(-25)"},
        },
        "reduction_constants": {
            "su(p,q)": {"C": "1", "r": "min{p,q}", "pairing": "p+q-1"},
            "sp(n,R)": {"C": "1/2", "r": "n", "pairing": "n"},
            "so*(2n)": {"C": "2", "r": "[n/2]", "pairing": "2n-3"},
            "so(2,2n-2)": {"C": "n-2", "r": "2", "pairing": "2n-3"},
            "so(2,2n-1)": {"C": "n-3/2", "r": "2", "pairing": "2n-2"},
            "e6(-14)": {"C": "3", "r": "2", "pairing": "11"},
            "e7(-25)": {"C": "4", "r": "3", "pairing": "17"},
        },
    })
}
