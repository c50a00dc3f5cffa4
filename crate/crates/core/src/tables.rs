//! Published reference data checked by the verification suites.

/// `(n, m, equations, unknowns, long)`: degrees whose over-determined
/// systems were found consistent. `long` marks the expensive ones.
pub const CONSISTENT_DEGREES: &[(u32, u32, usize, usize, bool)] = &[
    (4, 1, 66, 64, false),
    (5, 2, 136, 128, false),
    (5, 1, 171, 163, false),
    (6, 3, 45, 43, false),
    (6, 2, 378, 351, false),
    (6, 1, 435, 401, false),
    (7, 3, 171, 163, true),
    (8, 3, 528, 482, true),
    (9, 4, 45, 43, true),
];

/// A monomial expansion: label, then `(Ω, coefficient)` for every `Ω ≠ Λ`;
/// the leading coefficient is 1.
pub type Expansion = (&'static str, &'static [(&'static str, &'static str)]);

/// `P_Λ` at low degree, grouped by `(n, m)`.
pub const MACDONALD_EXPANSIONS: &[(u32, u32, &[Expansion])] = &[
    (1, 1, &[("1;", &[("0;1", "q(1-t)/(1-qt)")])]),
    (
        2,
        1,
        &[
            ("1;1", &[("0;1,1", "q(1-t^2)/(1-qt^2)")]),
            ("0;2", &[("1;1", "(1-t)/(1-qt)"), ("0;1,1", "(1+q)(1-t)/(1-qt)")]),
            (
                "2;",
                &[
                    ("0;2", "q^2(1-t)/(1-q^2t)"),
                    ("1;1", "q(1+q)(1-t)/(1-q^2t)"),
                    ("0;1,1", "q^2(1+q)(1-t)^2/((1-qt)(1-q^2t))"),
                ],
            ),
        ],
    ),
    (2, 2, &[("2,0;", &[("1,0;1", "q(1-t)/(1-qt)")])]),
    (
        3,
        2,
        &[
            ("1,0;2", &[("1,0;1,1", "(1+qt)(1-t)/(1-qt^2)")]),
            ("2,0;1", &[("1,0;2", "q(1-t)/(1-qt)"), ("1,0;1,1", "2q(1-t)/(1-qt)")]),
            (
                "2,1;",
                &[
                    ("2,0;1", "q(1-t)/(1-qt)"),
                    ("1,0;2", "-q^2t(1-q)(1-t)/((1+qt)(1-qt)^2)"),
                    ("1,0;1,1", "q^2(1-t)^2/(1-qt)^2"),
                ],
            ),
            (
                "3,0;",
                &[
                    ("2,1;", "q(1-t)/(1-q^2t)"),
                    ("2,0;1", "q(1+q)(1-t)/(1-q^2t)"),
                    ("1,0;2", "q^2(1-t)/(1-q^2t)"),
                    ("1,0;1,1", "q^2(1+q)(1-t)^2/((1-qt)(1-q^2t))"),
                ],
            ),
        ],
    ),
    (
        4,
        1,
        &[
            ("1;1,1,1", &[("0;1,1,1,1", "q(1-t^4)/(1-qt^4)")]),
            (
                "0;2,1,1",
                &[("1;1,1,1", "(1-t^3)/(1-qt^3)"), ("0;1,1,1,1", "(1-t)(3qt^2+t^2+2t+2qt+q+3)/(1-qt^3)")],
            ),
            (
                "1;2,1",
                &[
                    ("0;2,1,1", "q(1-t^2)/(1-qt^2)"),
                    ("1;1,1,1", "(1-t)(t+2qt+q+2)/(1-qt^2)"),
                    ("0;1,1,1,1", "q(1-t^2)(1-t)(3qt^2+t^2+2t+2qt+q+3)/((1-qt^3)(1-qt^2))"),
                ],
            ),
            (
                "2;1,1",
                &[
                    ("1;2,1", "q(1-t)/(1-qt)"),
                    ("0;2,1,1", "q^2(1-t)(1-qt^3)/((1-q^2t^3)(1-qt))"),
                    ("1;1,1,1", "-q(1-t)(3q^2t^3+qt^3-q-3)/((1-q^2t^3)(1-qt))"),
                    ("0;1,1,1,1", "q^2(1-t)^2(3qt^2+t^2+2t+2qt+q+3)/((1-q^2t^3)(1-qt))"),
                ],
            ),
            (
                "0;2,2",
                &[
                    ("1;2,1", "(1-t)/(1-qt)"),
                    ("0;2,1,1", "(1+q)(1-t)/(1-qt)"),
                    ("1;1,1,1", "(1-t)^2(t+2qt+q+2)/((1-qt^2)(1-qt))"),
                    ("0;1,1,1,1", "(1+q)(1-t)^2(t+2qt+q+2)/((1-qt^2)(1-qt))"),
                ],
            ),
            (
                "2;2",
                &[
                    ("0;2,2", "q^2(1-t^2)/(1-q^2t^2)"),
                    ("2;1,1", "(1+q)(1-t)/(1-qt)"),
                    ("1;2,1", "q(1+q)(1-t)(1-qt^2)/((1-q^2t^2)(1-qt))"),
                    ("0;2,1,1", "q^2(1+q)(1-t)(1-t^2)/((1-q^2t^2)(1-qt))"),
                    ("1;1,1,1", "q(1+q)(1-t)^2(t+2qt+q+2)/((1-q^2t^2)(1-qt))"),
                    ("0;1,1,1,1", "q^2(1+q)(1-t)^2(1-t^2)(t+2qt+q+2)/((1-qt^2)(1-q^2t^2)(1-qt))"),
                ],
            ),
            (
                "0;3,1",
                &[
                    ("0;2,2", "(1+q)(1-t)/(1-qt)"),
                    ("2;1,1", "(1-t^2)/(1-q^2t^2)"),
                    ("1;2,1", "(1+q)(1-t)(1-qt^2)/((1-q^2t^2)(1-qt))"),
                    ("0;2,1,1", "(1-t)(-2q^2t^2-qt^2-2q^3t^2-qt+q^2t+2q+q^2+2)/((1-q^2t^2)(1-qt))"),
                    ("1;1,1,1", "(1+q)(1-t)^2(t+2qt+q+2)/((1-q^2t^2)(1-qt))"),
                    ("0;1,1,1,1", "(1+q)(1-t)^2(3q^2t+q^2+2qt+2q+t+3)/((1-q^2t^2)(1-qt))"),
                ],
            ),
        ],
    ),
];

/// A `(q,t)`-Kostka table: column labels, then rows `(Λ, entries)` with row
/// `Λ` the integral form being expanded.
pub type KostkaTable = (u32, u32, &'static [&'static str], &'static [(&'static str, &'static [&'static str])]);

pub const KOSTKA_QT_TABLES: &[KostkaTable] = &[
    (1, 1, &["1;", "0;1"], &[("1;", &["1", "q"]), ("0;1", &["t", "1"])]),
    (
        2,
        1,
        &["2;", "0;2", "1;1", "0;1,1"],
        &[
            ("2;", &["1", "q^2", "q", "q^3"]),
            ("0;2", &["t", "1", "qt", "q"]),
            ("1;1", &["t", "qt", "1", "q"]),
            ("0;1,1", &["t^3", "t", "t^2", "1"]),
        ],
    ),
    (2, 2, &["2,0;", "1,0;1"], &[("2,0;", &["1", "q"]), ("1,0;1", &["t", "1"])]),
    (
        3,
        1,
        &["3;", "0;3", "2;1", "1;2", "0;2,1", "1;1,1", "0;1,1,1"],
        &[
            ("3;", &["1", "q^3", "q+q^2", "q^2+q^4", "q^4+q^5", "q^3", "q^6"]),
            ("0;3", &["t", "1", "qt+q^2t", "q+q^2t", "q+q^2", "q^3t", "q^3"]),
            ("2;1", &["t", "q^2t", "1+qt", "q+q^2t", "q^2+q^3t", "q", "q^3"]),
            ("1;2", &["t^2", "qt", "t+qt^2", "1+q^2t^2", "q+q^2t", "qt", "q^2"]),
            ("0;2,1", &["t^3", "t", "t^2+qt^3", "t+qt^2", "1+qt", "qt^2", "q"]),
            ("1;1,1", &["t^3", "qt^3", "t+t^2", "t+qt^2", "qt+qt^2", "1", "q"]),
            ("0;1,1,1", &["t^6", "t^3", "t^4+t^5", "t^2+t^4", "t+t^2", "t^3", "1"]),
        ],
    ),
    (
        3,
        2,
        &["3,0;", "2,1;", "2,0;1", "1,0;2", "1,0;1,1"],
        &[
            ("3,0;", &["1", "q", "q+q^2", "q^2", "q^3"]),
            ("2,1;", &["qt", "1", "q+q^2t", "q^3t", "q^2"]),
            ("2,0;1", &["t", "t", "1+qt", "q", "q"]),
            ("1,0;2", &["t^2", "qt^3", "t+qt^2", "1", "qt"]),
            ("1,0;1,1", &["t^3", "t^2", "t+t^2", "t", "1"]),
        ],
    ),
];

/// `s^Jack_(1,0;3)`, `s_(1,0;3)` and `s̄_(1,0;3)` in monomials.
pub const JACK_SCHUR_103: &[(&str, &str)] =
    &[("1,0;3", "1"), ("2,0;2", "1/2"), ("1,0;2,1", "7/8"), ("2,0;1,1", "1/4"), ("2,1;1", "-1/8"), ("1,0;1,1,1", "3/4")];
pub const SCHUR_103: &[(&str, &str)] = &[("1,0;3", "1"), ("2,0;2", "1"), ("1,0;2,1", "1"), ("2,0;1,1", "1"), ("1,0;1,1,1", "1")];
pub const SCHUR_BAR_103: &[(&str, &str)] = &[("1,0;3", "1"), ("1,0;2,1", "1"), ("1,0;1,1,1", "1")];

/// Closed-form norms quoted as examples.
pub const NORM_EXAMPLES: &[(&str, &str)] = &[("3,0;1", "q^3(1-q)^2(1+q)/((1-t)(1-q^2t))"), ("2,1,0;", "q^3")];

/// `(Λ, N, E_{N,m}[J_Λ])`
pub const EVALUATION_EXAMPLES: &[(&str, usize, &str)] = &[("3,1,0;1,1", 7, "q^-2t^7(1-t^3)(1-t^4)(1-q^3t^7)")];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_ratfunc;
    use crate::SuperPartition;

    #[test]
    fn every_entry_parses() {
        let label = |s: &str| s.parse::<SuperPartition>().unwrap();
        for (n, m, exps) in MACDONALD_EXPANSIONS {
            for (l, terms) in exps.iter() {
                assert_eq!(label(l).degree(), (*n, *m));
                for (o, c) in terms.iter() {
                    assert_eq!(label(o).degree(), (*n, *m));
                    parse_ratfunc(c).unwrap();
                }
            }
        }
        for (n, m, cols, rows) in KOSTKA_QT_TABLES {
            for (l, entries) in rows.iter() {
                assert_eq!(label(l).degree(), (*n, *m));
                assert_eq!(entries.len(), cols.len());
                entries.iter().for_each(|e| drop(parse_ratfunc(e).unwrap()));
            }
        }
        for (l, c) in JACK_SCHUR_103.iter().chain(SCHUR_103).chain(SCHUR_BAR_103).chain(NORM_EXAMPLES) {
            label(l);
            parse_ratfunc(c).unwrap();
        }
        assert_eq!(parse_ratfunc("-1/8").unwrap(), parse_ratfunc("-1").unwrap().div(&parse_ratfunc("8").unwrap()).unwrap());
        for (l, _, c) in EVALUATION_EXAMPLES {
            label(l);
            parse_ratfunc(c).unwrap();
        }
    }
}
