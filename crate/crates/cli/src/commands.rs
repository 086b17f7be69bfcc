use clap::ValueEnum;
use compbern_core::bernoulli::{bernoulli_numbers, bernoulli_polynomial_list};
use compbern_core::catalog::hypergeom_series;
use compbern_core::compositional::{comp_bernoulli_numbers, comp_bernoulli_polynomial_list};
use compbern_core::{EgfSeries, SignedRatio};

use crate::error::{CliError, CliResult};
use crate::format::render_rational;
use crate::input::SeriesInput;
use crate::table::Table;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// `B_{N,n}^f`, indices from 0.
    Bernoulli,
    /// `C_{N,n}^f`, indices from 1.
    Comp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesOp {
    Reciprocal,
    Compose,
    Invert,
    Mul,
    Add,
    Hypergeom,
}

fn needed_order(kind: Kind, shift: usize, max_n: usize) -> usize {
    match kind {
        Kind::Bernoulli => shift + max_n,
        Kind::Comp => shift.max((shift + max_n).saturating_sub(1)),
    }
}

fn label(kind: Kind, spec: &str, shift: usize) -> String {
    match kind {
        Kind::Bernoulli => format!("B_{{{shift},n}}^{{{spec}}}"),
        Kind::Comp => format!("C_{{{shift},n}}^{{{spec}}}"),
    }
}

pub fn table(kind: Kind, input: &SeriesInput, spec: &str, shift: usize, max_n: usize) -> CliResult<Table> {
    let f = input.series(needed_order(kind, shift, max_n));
    let entries = match kind {
        Kind::Bernoulli => bernoulli_numbers(&f, shift, max_n)?.values.iter().map(render_rational).enumerate().collect(),
        Kind::Comp => {
            let row = comp_bernoulli_numbers(&f, shift, max_n)?;
            row.values.iter().enumerate().skip(1).map(|(n, v)| (n, render_rational(v))).collect()
        }
    };
    Ok(Table::new(label(kind, spec, shift), entries))
}

pub fn polys(kind: Kind, input: &SeriesInput, spec: &str, shift: usize, n: usize) -> CliResult<Table> {
    let f = input.series(needed_order(kind, shift, n));
    let entries: Vec<(usize, String)> = match kind {
        Kind::Bernoulli => bernoulli_polynomial_list(&f, shift, n)?.iter().map(|p| p.to_string()).enumerate().collect(),
        Kind::Comp => comp_bernoulli_polynomial_list(&f, shift, n)?
            .iter()
            .enumerate()
            .map(|(i, p)| (i + 1, p.to_string()))
            .collect(),
    };
    Ok(Table::new(format!("{}(x)", label(kind, spec, shift)), entries))
}

/// Inputs for `series-op`.
#[derive(Debug, Default)]
pub struct OpArgs {
    pub input: Option<SeriesInput>,
    pub with: Option<SeriesInput>,
    pub ratios: Option<[SignedRatio; 3]>,
}

fn operand(input: Option<&SeriesInput>, flag: &str, order: usize) -> CliResult<EgfSeries> {
    let input = input.ok_or_else(|| CliError::Usage(format!("this operation needs {flag}")))?;
    let f = input.series(order);
    Ok(if f.order() > order { f.truncate(order) } else { f })
}

pub fn series_op(op: SeriesOp, args: &OpArgs, order: usize) -> CliResult<EgfSeries> {
    let f = || operand(args.input.as_ref(), "--in", order);
    let g = || operand(args.with.as_ref(), "--with", order);
    let out = match op {
        SeriesOp::Reciprocal => f()?.reciprocal()?,
        SeriesOp::Invert => f()?.comp_inverse()?,
        SeriesOp::Compose => f()?.compose(&g()?)?,
        SeriesOp::Mul => &f()? * &g()?,
        SeriesOp::Add => &f()? + &g()?,
        SeriesOp::Hypergeom => {
            let [p, q, r] = args.ratios.ok_or_else(|| CliError::Usage("hypergeom needs --p, --q and --r".into()))?;
            hypergeom_series(p, q, r, order)?
        }
    };
    Ok(out)
}
