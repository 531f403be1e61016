use clap::{Args, Subcommand};
use constacode::families::{qr_build_and_check, qr_spec, scan_qr_primes, thm9_instances, QrVariant};
use constacode::nt;
use serde_json::{json, Value};

use crate::output::emit_table;
use crate::{CmdResult, Ctx, Failure, Outcome, VariantArg};

/// Largest n accepted by the listings.
const MAX_N: u64 = 1_000_000;

#[derive(Args, Debug)]
pub struct TableArgs {
    /// 1: negacyclic family; 2: λ primitive in GF(q).
    #[arg(value_parser = clap::value_parser!(u8).range(1..=2))]
    pub table: u8,
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub max_n: u64,
}

#[derive(Subcommand, Debug)]
pub enum ScanCmd {
    /// Primes n ≤ max-n meeting a quadratic-residue family's order condition.
    Qr {
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum)]
        variant: VariantArg,
        #[arg(long)]
        max_n: u64,
    },
    /// Valid closed-form parameter sets (m, e, u, r) over GF(q).
    Thm9 {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        max_m: u64,
        #[arg(long)]
        max_n: u64,
    },
}

fn check_range(q: u64, max_n: u64) -> Result<(), Failure> {
    if q < 2 || nt::prime_power(q).is_none() {
        return Err(Failure::Param(format!("q = {q} is not a prime power")));
    }
    if max_n > MAX_N {
        return Err(Failure::Param(format!("max-n = {max_n} exceeds {MAX_N}")));
    }
    Ok(())
}

pub fn run_table(ctx: &Ctx, a: &TableArgs) -> CmdResult {
    check_range(a.q, a.max_n)?;
    let variant = if a.table == 1 { QrVariant::Negacyclic } else { QrVariant::PrimitiveLambda };
    match variant {
        QrVariant::Negacyclic if a.q % 2 == 0 => return Err(Failure::Param("table 1 needs q odd".into())),
        QrVariant::PrimitiveLambda if a.q == 2 => return Err(Failure::Param("table 2 needs q > 2".into())),
        _ => {}
    }
    let mut rows = Vec::new();
    let mut all_pass = true;
    for n in scan_qr_primes(a.q, a.max_n, variant) {
        let rep = qr_build_and_check(&qr_spec(a.q, n, variant)?, ctx.budget)?;
        all_pass &= rep.passed();
        let cell = |x: Option<u64>, lower: u64| match x {
            Some(d) => json!(d),
            None => json!(format!("≥{lower}")),
        };
        rows.push(vec![json!(n), cell(rep.d, rep.d_lower), cell(rep.d_dual, rep.d_dual_lower), json!(rep.passed())]);
    }
    let meta = json!({ "table": a.table, "q": a.q, "max_n": a.max_n, "variant": variant.name() });
    emit_table(ctx.format, meta, &["n", "d", "d_dual", "checks_pass"], &rows);
    Ok(if all_pass { Outcome::Pass } else { Outcome::Fail })
}

pub fn run_scan(ctx: &Ctx, cmd: &ScanCmd) -> CmdResult {
    match cmd {
        ScanCmd::Qr { q, variant, max_n } => {
            check_range(*q, *max_n)?;
            let v: QrVariant = (*variant).into();
            let rows: Vec<Vec<Value>> = scan_qr_primes(*q, *max_n, v).into_iter().map(|n| vec![json!(n)]).collect();
            emit_table(ctx.format, json!({ "q": q, "variant": v.name(), "max_n": max_n }), &["n"], &rows);
        }
        ScanCmd::Thm9 { q, max_m, max_n } => {
            check_range(*q, *max_n)?;
            let rows: Vec<Vec<Value>> = thm9_instances(*q, *max_m, *max_n)
                .into_iter()
                .map(|p| {
                    vec![json!(p.m), json!(p.e), json!(p.u), json!(p.r), json!(p.n), json!(p.dimension()), json!(p.case.to_string())]
                })
                .collect();
            let meta = json!({ "q": q, "max_m": max_m, "max_n": max_n });
            emit_table(ctx.format, meta, &["m", "e", "u", "r", "n", "k", "case"], &rows);
        }
    }
    Ok(Outcome::Pass)
}
