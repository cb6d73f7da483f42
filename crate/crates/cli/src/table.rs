//! Reference-table reconstruction.
//!
//! The rows recompute length, cardinality and minimum Lee distance for each
//! family, and the self-dual / formally self-dual flag of the Gray image of
//! every extension. Rows whose distance cannot be certified inside the tier
//! budget print an honest interval and are marked `uncertified (budget)`;
//! nothing is ever copied from the reference, so the output diffs cleanly
//! against a checked-in expectation.

use crate::{CmdError, Format, TableArgs, Tier};
use qrv_core::{
    formally_self_dual, gray_image_code, min_distance, qr_family, EnumerationConfig, Error, QrCode,
    Strategy, WeightKind,
};
use serde_json::json;

const TABLE1: &[(u32, u32)] = &[
    (3, 11),
    (3, 13),
    (3, 23),
    (3, 37),
    (5, 11),
    (5, 19),
    (5, 29),
    (5, 31),
    (7, 3),
    (7, 19),
];

const TABLE2: &[(u32, u32)] = &[
    (11, 5),
    (11, 7),
    (11, 19),
    (13, 3),
    (13, 17),
    (17, 13),
    (17, 19),
    (19, 3),
    (19, 5),
    (23, 7),
    (29, 5),
    (29, 7),
];

/// Rows where the published reference entry disagrees with the computed
/// parameters; the discrepancy is annotated rather than silently adjusted.
fn reference_note(p: u32, q: u32, extended: bool) -> Option<&'static str> {
    match (p, q, extended) {
        (11, 5, true) => Some("reference row lists d = 5; exhaustive enumeration certifies d = 6"),
        (13, 3, true) => Some("reference row lists (8, 169^2, 4); computed length is 4"),
        (17, 13, true) => Some("reference row lists 289^14; computed cardinality is 289^7"),
        _ => None,
    }
}

struct TierBudgets {
    enumeration: u64,
    infoset: u64,
}

fn budgets(tier: Tier) -> TierBudgets {
    match tier {
        Tier::Fast => TierBudgets {
            enumeration: 1 << 24,
            infoset: 1 << 22,
        },
        Tier::Full => TierBudgets {
            enumeration: 1 << 28,
            infoset: 1 << 28,
        },
    }
}

struct Row {
    name: String,
    n: usize,
    card: String,
    gray_params: String,
    d_text: String,
    flags: String,
    status: String,
    note: Option<&'static str>,
}

fn compute_row(p: u32, q: u32, extended: bool, tier: Tier) -> Result<Row, Error> {
    let b = budgets(tier);
    let fam = qr_family(p, q)?;
    let code = if extended {
        fam.extend(QrCode::Q1)?
    } else {
        fam.code(QrCode::Q1)
    };
    let n = code.len();
    let k = code.card_exponent();
    let card = format!("{}^{}", p * p, k / 2);

    let dist = match min_distance(
        &code,
        WeightKind::Lee,
        Strategy::Auto,
        &EnumerationConfig {
            budget: b.enumeration,
            workers: 0,
        },
    ) {
        Ok(rep) => Ok(rep),
        // auto picked exhaustive but the tier enumeration budget is
        // tighter: fall back to the information-set engine
        Err(Error::BudgetExceeded { .. }) => min_distance(
            &code,
            WeightKind::Lee,
            Strategy::InfoSet,
            &EnumerationConfig {
                budget: b.infoset,
                workers: 0,
            },
        ),
        Err(e) => Err(e),
    }?;
    // the information-set path gets its own budget
    let dist = if dist.method == qrv_core::Method::InfoSet {
        min_distance(
            &code,
            WeightKind::Lee,
            Strategy::InfoSet,
            &EnumerationConfig {
                budget: b.infoset,
                workers: 0,
            },
        )?
    } else {
        dist
    };

    let (d_text, status) = if dist.certified {
        (format!("{}", dist.d), "certified".to_string())
    } else {
        (
            format!("<={}", dist.d),
            format!("uncertified (budget): d >= {}", dist.lower_bound),
        )
    };
    let gray_params = format!("[{}, {}, {}]_{}", 2 * n, k, d_text, p);

    let flags = if extended {
        let img = gray_image_code(&code)?;
        if img.is_self_dual() {
            "self-dual".to_string()
        } else {
            match formally_self_dual(
                &img,
                &EnumerationConfig {
                    budget: b.enumeration,
                    workers: 0,
                },
            ) {
                Ok(true) => "formally self-dual".to_string(),
                Ok(false) => "not (formally) self-dual".to_string(),
                Err(Error::BudgetExceeded { .. }) => "formally self-dual? (budget)".to_string(),
                Err(e) => return Err(e),
            }
        }
    } else {
        "-".to_string()
    };

    Ok(Row {
        name: format!("{}QR_{}({})", if extended { "ext " } else { "" }, p, q),
        n,
        card,
        gray_params,
        d_text,
        flags,
        status,
        note: reference_note(p, q, extended),
    })
}

pub fn run(args: &TableArgs) -> Result<(), CmdError> {
    let rows_spec: Vec<(u32, u32, bool)> = match args.which {
        1 => TABLE1
            .iter()
            .flat_map(|&(p, q)| [(p, q, false), (p, q, true)])
            .collect(),
        2 => TABLE2.iter().map(|&(p, q)| (p, q, true)).collect(),
        other => {
            return Err(CmdError::Config(Error::NotQrSetting {
                reason: format!("table {other} does not exist; use 1 or 2"),
            }))
        }
    };
    let tier_name = match args.tier {
        Tier::Fast => "fast",
        Tier::Full => "full",
    };
    let mut rows = Vec::with_capacity(rows_spec.len());
    for (p, q, extended) in rows_spec {
        rows.push(compute_row(p, q, extended, args.tier)?);
    }
    let content = match args.format {
        Format::Json => {
            let items: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "code": r.name,
                        "n": r.n,
                        "cardinality": r.card,
                        "d": r.d_text,
                        "gray": r.gray_params,
                        "flags": r.flags,
                        "status": r.status,
                        "note": r.note,
                    })
                })
                .collect();
            let mut s = serde_json::to_string_pretty(&json!({
                "table": args.which,
                "tier": tier_name,
                "rows": items,
            }))
            .expect("serializable");
            s.push('\n');
            s
        }
        Format::Text | Format::Csv => {
            let mut s = format!("# table {} (tier: {})\n", args.which, tier_name);
            s.push_str(&format!(
                "{:<16} {:<18} {:<22} {:<28} {}\n",
                "code", "ring (n, |C|, d)", "gray image", "flags", "status"
            ));
            for r in &rows {
                let ring = format!("({}, {}, {})", r.n, r.card, r.d_text);
                let mut line = format!(
                    "{:<16} {:<18} {:<22} {:<28} {}",
                    r.name, ring, r.gray_params, r.flags, r.status
                );
                if let Some(note) = r.note {
                    line.push_str(&format!(" | note: {note}"));
                }
                s.push_str(line.trim_end());
                s.push('\n');
            }
            s
        }
    };
    crate::commands::emit(args.out.as_deref(), &content)
}
