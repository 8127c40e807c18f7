//! Shared inputs for the criterion benches.

use detring::{Params, Polynomial};

/// The product of all variables in the first row of `X` times the product of
/// all variables in the first column, a dense input for straightening.
pub fn row_times_column(params: &Params) -> Polynomial {
    let space = params.x_space();
    let row = (1..=params.n)
        .map(|j| format!("x[1,{j}]"))
        .collect::<Vec<_>>()
        .join("*");
    let col = (1..=params.m)
        .map(|i| format!("x[{i},1]"))
        .collect::<Vec<_>>()
        .join("*");
    Polynomial::parse(&format!("{row}*{col}"), space).expect("well-formed input")
}
