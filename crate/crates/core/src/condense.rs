//! `X(a,b,c) = M(q)^2 M_{a,b,c}(q)`, its condensation recurrence, and the
//! three-way check of the main identity.

use serde::{Deserialize, Serialize};

use crate::doublebox::zdbc;
use crate::doubledimer::{zddc, DoubleDimerError};
use crate::qseries::{macmahon, macmahon_box, QSeries};

/// `M(q)^2 M_{a,b,c}(q)`.
pub fn x_series(a: usize, b: usize, c: usize, trunc_order: usize) -> QSeries {
    let m = macmahon(trunc_order);
    &(&m * &m) * &macmahon_box(a, b, c, trunc_order)
}

/// Which coordinate plays the role of the room height `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Orientation {
    /// `(a, b, c)` as written.
    C,
    /// height along the first coordinate
    A,
    /// height along the second coordinate
    B,
}

impl Orientation {
    pub const ALL: [Orientation; 3] = [Orientation::C, Orientation::A, Orientation::B];

    /// Places `(s, t, h)` (two base sides and a height) into a parameter triple.
    fn place(self, s: usize, t: usize, h: usize) -> [usize; 3] {
        match self {
            Orientation::C => [s, t, h],
            Orientation::A => [h, s, t],
            Orientation::B => [t, h, s],
        }
    }
}

/// Which product the factor `q^c` multiplies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Form {
    /// `F(a,b,c) F(a+1,b+1,c) = F(a+1,b,c) F(a,b+1,c) + q^c F(a+1,b+1,c-1) F(a,b,c+1)`
    Stated,
    /// `F(a,b,c) F(a+1,b+1,c) = q^c F(a+1,b,c) F(a,b+1,c) + F(a+1,b+1,c-1) F(a,b,c+1)`
    Swapped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecurrenceReport {
    pub params: [usize; 3],
    pub trunc_order: usize,
    pub orientation: Orientation,
    pub form: Form,
    pub lhs: QSeries,
    pub rhs: QSeries,
    pub pass: bool,
    pub first_mismatch: Option<usize>,
}

fn report(
    params: [usize; 3],
    trunc_order: usize,
    orientation: Orientation,
    form: Form,
    lhs: QSeries,
    rhs: QSeries,
) -> RecurrenceReport {
    let first_mismatch = lhs.first_mismatch(&rhs).expect("same truncation order");
    RecurrenceReport {
        params,
        trunc_order,
        orientation,
        form,
        lhs,
        rhs,
        pass: first_mismatch.is_none(),
        first_mismatch,
    }
}

/// The recurrence in `form` for a series-valued `F`, with `c` measured
/// along `orientation`.
fn recurrence(
    f: impl Fn([usize; 3]) -> QSeries,
    [a, b, c]: [usize; 3],
    trunc_order: usize,
    orientation: Orientation,
    form: Form,
) -> RecurrenceReport {
    assert!(c >= 1, "the recurrence needs c >= 1");
    let at = |s, t, h| f(orientation.place(s, t, h));
    let lhs = &at(a, b, c) * &at(a + 1, b + 1, c);
    let split = &at(a + 1, b, c) * &at(a, b + 1, c);
    let lowered = &at(a + 1, b + 1, c - 1) * &at(a, b, c + 1);
    let rhs = match form {
        Form::Stated => &split + &lowered.shift(c),
        Form::Swapped => &split.shift(c) + &lowered,
    };
    report([a, b, c], trunc_order, orientation, form, lhs, rhs)
}

/// The recurrence for `X`. Panics if `c == 0`.
pub fn check_x_recurrence(
    a: usize,
    b: usize,
    c: usize,
    trunc_order: usize,
    orientation: Orientation,
    form: Form,
) -> RecurrenceReport {
    recurrence(|[a, b, c]| x_series(a, b, c, trunc_order), [a, b, c], trunc_order, orientation, form)
}

/// The same recurrence with the common `M(q)^4` removed. Panics if `c == 0`.
pub fn check_m_recurrence(
    a: usize,
    b: usize,
    c: usize,
    trunc_order: usize,
    orientation: Orientation,
    form: Form,
) -> RecurrenceReport {
    recurrence(|[a, b, c]| macmahon_box(a, b, c, trunc_order), [a, b, c], trunc_order, orientation, form)
}

/// Both recurrences on `0 <= a,b <= grid`, `1 <= c <= grid` in every
/// orientation.
pub fn recurrence_grid(grid: usize, trunc_order: usize, form: Form) -> Vec<(RecurrenceReport, RecurrenceReport)> {
    use rayon::prelude::*;
    let points: Vec<_> = (0..=grid)
        .flat_map(|a| (0..=grid).flat_map(move |b| (1..=grid).map(move |c| (a, b, c))))
        .flat_map(|p| Orientation::ALL.map(|o| (p, o)))
        .collect();
    points
        .into_par_iter()
        .map(|((a, b, c), o)| {
            (
                check_x_recurrence(a, b, c, trunc_order, o, form),
                check_m_recurrence(a, b, c, trunc_order, o, form),
            )
        })
        .collect()
}

/// The box side, the product side and the stabilized double-dimer side of
/// the main identity at one parameter point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MainReport {
    pub params: [usize; 3],
    pub trunc_order: usize,
    pub zdbc: QSeries,
    pub x: QSeries,
    pub zddc: QSeries,
    /// window size from which the double-dimer side is stable
    pub stable_n: usize,
    pub windows: Vec<(usize, QSeries)>,
    pub mismatch_dbc_x: Option<usize>,
    pub mismatch_dbc_ddc: Option<usize>,
    pub mismatch_x_ddc: Option<usize>,
    pub pass: bool,
}

/// Compares `zdbc`, `x_series` and `zddc` coefficientwise. Fails only if the
/// double-dimer windows do not stabilize by `n_ceiling`.
pub fn verify_main(
    a: usize,
    b: usize,
    c: usize,
    trunc_order: usize,
    n_ceiling: usize,
) -> Result<MainReport, DoubleDimerError> {
    let (dbc, (x, ddc)) = rayon::join(
        || zdbc(a, b, c, trunc_order),
        || (x_series(a, b, c, trunc_order), zddc(a, b, c, trunc_order, n_ceiling)),
    );
    let ddc = ddc?;
    let diff = |p: &QSeries, q: &QSeries| p.first_mismatch(q).expect("same truncation order");
    let (m1, m2, m3) = (diff(&dbc, &x), diff(&dbc, &ddc.series), diff(&x, &ddc.series));
    Ok(MainReport {
        params: [a, b, c],
        trunc_order,
        pass: m1.is_none() && m2.is_none() && m3.is_none(),
        zdbc: dbc,
        x,
        zddc: ddc.series,
        stable_n: ddc.n,
        windows: ddc.windows,
        mismatch_dbc_x: m1,
        mismatch_dbc_ddc: m2,
        mismatch_x_ddc: m3,
    })
}
