//! Implementations of the single-code subcommands.

use crate::{AugmentSel, CmdError, CodeSel, Format, InstanceArgs, JobArgs, StrategySel, WeightSel};
use qrv_core::{
    enumerate_weights, min_distance, qr_family, verify_hermitian_family, verify_qr_theorems,
    AugmentUnit, EnumerationConfig, Error, LinearCode, QrCode, RingElement, Strategy, WeightKind,
};
use serde_json::{json, Value};
use std::io::Write;
use std::path::Path;

pub(crate) fn code_sel(sel: CodeSel) -> QrCode {
    match sel {
        CodeSel::Q1 => QrCode::Q1,
        CodeSel::Q2 => QrCode::Q2,
        CodeSel::Q1p => QrCode::Q1Prime,
        CodeSel::Q2p => QrCode::Q2Prime,
    }
}

fn code_name(sel: CodeSel) -> &'static str {
    match sel {
        CodeSel::Q1 => "q1",
        CodeSel::Q2 => "q2",
        CodeSel::Q1p => "q1p",
        CodeSel::Q2p => "q2p",
    }
}

fn weight_kind(sel: WeightSel) -> WeightKind {
    match sel {
        WeightSel::Hamming => WeightKind::Hamming,
        WeightSel::Lee => WeightKind::Lee,
        WeightSel::Bachoc => WeightKind::Bachoc,
    }
}

fn strategy(sel: StrategySel) -> Strategy {
    match sel {
        StrategySel::Auto => Strategy::Auto,
        StrategySel::Exhaustive => Strategy::Exhaustive,
        StrategySel::Infoset => Strategy::InfoSet,
    }
}

/// The resolved target of a job: the family, the selected (possibly
/// transformed) ring code, its display matrix, and the generating
/// idempotent when the code is cyclic.
pub(crate) struct Target {
    pub code: LinearCode,
    pub rows: Vec<Vec<RingElement>>,
    pub idempotent: Option<String>,
    pub transform: Option<&'static str>,
}

pub(crate) fn resolve_target(args: &JobArgs) -> Result<Target, Error> {
    if args.extend && args.augment.is_some() {
        return Err(Error::NotQrSetting {
            reason: "--extend and --augment are mutually exclusive".into(),
        });
    }
    let which = code_sel(args.code);
    if args.extend && !which.is_big() {
        return Err(Error::NotQrSetting {
            reason: "--extend applies to q1 and q2 only".into(),
        });
    }
    if args.augment.is_some() && which.is_big() {
        return Err(Error::NotQrSetting {
            reason: "--augment applies to q1p and q2p only".into(),
        });
    }
    if args.augment.is_some() && (args.p != 2 || args.q % 8 != 1) {
        return Err(Error::AugmentUnsupported {
            p: args.p,
            q: args.q,
        });
    }
    let family = qr_family(args.p, args.q)?;
    let (code, rows, idempotent, transform) = if args.extend {
        let rows = family.extension_rows(which)?;
        let code = family.extend(which)?;
        (
            code,
            rows,
            Some(family.idempotent(which_small(which)).to_string()),
            Some("extend"),
        )
    } else if let Some(unit) = args.augment {
        let unit = match unit {
            AugmentSel::V => AugmentUnit::V,
            AugmentSel::OnePlusV => AugmentUnit::OnePlusV,
        };
        let idem = family.augment_idempotent(which, unit)?;
        let code = family.hermitian_augment(which, unit)?;
        let rows = (0..(args.q as usize + 1) / 2)
            .map(|i| idem.shifted(i))
            .collect();
        (
            code,
            rows,
            Some(idem.to_string()),
            Some(match unit {
                AugmentUnit::V => "augment-v",
                AugmentUnit::OnePlusV => "augment-1v",
            }),
        )
    } else {
        let code = family.code(which);
        let rows = family.generator_rows(which);
        (code, rows, Some(family.idempotent(which).to_string()), None)
    };
    Ok(Target {
        code,
        rows,
        idempotent,
        transform,
    })
}

/// The small companion whose shifts fill the extension matrix.
fn which_small(which: QrCode) -> QrCode {
    match which {
        QrCode::Q1 => QrCode::Q1Prime,
        QrCode::Q2 => QrCode::Q2Prime,
        other => other,
    }
}

fn job_meta(args: &JobArgs, target: &Target) -> Value {
    json!({
        "p": args.p,
        "q": args.q,
        "code": code_name(args.code),
        "transform": target.transform,
        "gray": args.gray,
    })
}

pub(crate) fn emit(out: Option<&Path>, content: &str) -> Result<(), CmdError> {
    match out {
        None => {
            print!("{content}");
            Ok(())
        }
        Some(path) => {
            let mut file = std::fs::File::create(path).map_err(|e| {
                CmdError::Config(Error::Internal(format!("cannot write {path:?}: {e}")))
            })?;
            file.write_all(content.as_bytes()).map_err(|e| {
                CmdError::Config(Error::Internal(format!("cannot write {path:?}: {e}")))
            })?;
            Ok(())
        }
    }
}

fn json_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

pub fn construct(args: &JobArgs) -> Result<(), CmdError> {
    let target = resolve_target(args)?;
    let content = if args.gray {
        let img = qrv_core::gray_image_code(&target.code)?;
        let gens = img.field_generators().expect("field code");
        let matrix: Vec<Vec<u32>> = gens.rows().to_vec();
        let v = json!({
            "parameters": job_meta(args, &target),
            "length": img.len(),
            "cardinality": {"base": args.p, "exponent": img.card_exponent()},
            "idempotent": target.idempotent,
            "generator_matrix": matrix,
        });
        match args.format {
            Format::Json => json_pretty(&v),
            Format::Text | Format::Csv => {
                let mut s = format!(
                    "gray image of {} over F_{}: [{}, {}]\n",
                    code_name(args.code),
                    args.p,
                    img.len(),
                    img.card_exponent()
                );
                for row in gens.rows() {
                    let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                    s.push_str(&cells.join(" "));
                    s.push('\n');
                }
                s
            }
        }
    } else {
        let matrix: Vec<Vec<String>> = target
            .rows
            .iter()
            .map(|r| r.iter().map(|e| e.to_string()).collect())
            .collect();
        // rows serialize as comma-joined strings, same text form as polynomials
        let row_strings: Vec<String> = matrix.iter().map(|r| r.join(",")).collect();
        let v = json!({
            "parameters": job_meta(args, &target),
            "length": target.code.len(),
            "cardinality": {"base": args.p, "exponent": target.code.card_exponent()},
            "idempotent": target.idempotent,
            "generator_matrix": row_strings,
        });
        match args.format {
            Format::Json => json_pretty(&v),
            Format::Text | Format::Csv => {
                let width = matrix.iter().flatten().map(|c| c.len()).max().unwrap_or(1);
                let mut s = format!(
                    "{} over F_{} + vF_{}, q = {}{}: length {}, cardinality {}^{}\n",
                    code_name(args.code),
                    args.p,
                    args.p,
                    args.q,
                    target
                        .transform
                        .map(|t| format!(" ({t})"))
                        .unwrap_or_default(),
                    target.code.len(),
                    args.p,
                    target.code.card_exponent()
                );
                if let Some(idem) = &target.idempotent {
                    s.push_str(&format!("idempotent: {idem}\n"));
                }
                for row in &matrix {
                    let cells: Vec<String> = row.iter().map(|c| format!("{c:width$}")).collect();
                    s.push_str(cells.join(" ").trim_end());
                    s.push('\n');
                }
                s
            }
        }
    };
    emit(args.out.as_deref(), &content)
}

pub fn describe(args: &InstanceArgs) -> Result<(), CmdError> {
    let fam = qr_family(args.p, args.q)?;
    let fp_text = |poly: &qrv_core::FpPoly| -> String {
        poly.coeffs()
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    let card = |which: QrCode| json!({"base": args.p, "exponent": fam.code(which).card_exponent()});
    let v = json!({
        "p": args.p,
        "q": args.q,
        "qset": fam.qset,
        "nset": fam.nset,
        "base_idempotents": {
            "a": fp_text(&fam.a),
            "b": fp_text(&fam.b),
            "a_small": fp_text(&fam.a_small),
            "b_small": fp_text(&fam.b_small),
        },
        "idempotents": {
            "q1": fam.idem_q1.to_string(),
            "q2": fam.idem_q2.to_string(),
            "q1p": fam.idem_q1p.to_string(),
            "q2p": fam.idem_q2p.to_string(),
        },
        "cardinalities": {
            "q1": card(QrCode::Q1),
            "q2": card(QrCode::Q2),
            "q1p": card(QrCode::Q1Prime),
            "q2p": card(QrCode::Q2Prime),
        },
    });
    let content = match args.format {
        Format::Json => json_pretty(&v),
        Format::Text | Format::Csv => {
            let mut s = format!("family (p, q) = ({}, {})\n", args.p, args.q);
            s.push_str(&format!(
                "residues: {:?}\nnon-residues: {:?}\n",
                fam.qset, fam.nset
            ));
            s.push_str(&format!("q1 idempotent: {}\n", fam.idem_q1));
            s.push_str(&format!("q2 idempotent: {}\n", fam.idem_q2));
            s.push_str(&format!("q1p idempotent: {}\n", fam.idem_q1p));
            s.push_str(&format!("q2p idempotent: {}\n", fam.idem_q2p));
            s
        }
    };
    emit(args.out.as_deref(), &content)
}

fn job_code(args: &JobArgs) -> Result<(Target, LinearCode), CmdError> {
    let target = resolve_target(args)?;
    let code = if args.gray {
        qrv_core::gray_image_code(&target.code)?
    } else {
        target.code.clone()
    };
    Ok((target, code))
}

pub fn wenum(args: &JobArgs) -> Result<(), CmdError> {
    let (target, code) = job_code(args)?;
    let cfg = EnumerationConfig {
        budget: args.budget,
        workers: args.workers,
    };
    let en = enumerate_weights(&code, weight_kind(args.weight), &cfg)?;
    let content = match args.format {
        Format::Csv => en.to_csv(),
        Format::Text => format!("{}\n", en.polynomial_string()),
        Format::Json => {
            let counts: serde_json::Map<String, Value> = en
                .counts()
                .iter()
                .map(|(w, c)| (w.to_string(), json!(c)))
                .collect();
            json_pretty(&json!({
                "parameters": job_meta(args, &target),
                "weight": weight_kind(args.weight).to_string(),
                "length": code.len(),
                "cardinality": {"base": args.p, "exponent": code.card_exponent()},
                "total": en.total(),
                "polynomial": en.polynomial_string(),
                "counts": counts,
            }))
        }
    };
    emit(args.out.as_deref(), &content)
}

pub fn mindist(args: &JobArgs) -> Result<(), CmdError> {
    let (target, code) = job_code(args)?;
    let cfg = EnumerationConfig {
        budget: args.budget,
        workers: args.workers,
    };
    let rep = min_distance(
        &code,
        weight_kind(args.weight),
        strategy(args.strategy),
        &cfg,
    )?;
    let content = match args.format {
        Format::Json => json_pretty(&json!({
            "parameters": job_meta(args, &target),
            "weight": weight_kind(args.weight).to_string(),
            "d": rep.d,
            "method": match rep.method { qrv_core::Method::Exhaustive => "exhaustive", qrv_core::Method::InfoSet => "info-set" },
            "certified": rep.certified,
            "lower_bound": rep.lower_bound,
        })),
        Format::Text | Format::Csv => {
            if rep.certified {
                format!("d = {} (certified)\n", rep.d)
            } else {
                format!(
                    "d <= {}, d >= {} (uncertified: budget)\n",
                    rep.d, rep.lower_bound
                )
            }
        }
    };
    emit(args.out.as_deref(), &content)
}

pub fn verify(args: &InstanceArgs) -> Result<(), CmdError> {
    let rep = verify_qr_theorems(args.p, args.q)?;
    let hermitian = if args.p == 2 && args.q % 8 == 1 {
        Some(verify_hermitian_family(
            args.q,
            &EnumerationConfig::default(),
        )?)
    } else {
        None
    };
    let all_pass = rep.all_pass() && hermitian.as_ref().map(|h| h.all_pass()).unwrap_or(true);
    let content = match args.format {
        Format::Json => json_pretty(&json!({
            "p": args.p,
            "q": args.q,
            "qr": serde_json::to_value(&rep).expect("serializable"),
            "hermitian": hermitian.as_ref().map(|h| serde_json::to_value(h).expect("serializable")),
            "all_pass": all_pass,
        })),
        Format::Text | Format::Csv => {
            let mut s = rep.to_text();
            if let Some(h) = &hermitian {
                s.push_str(&h.to_text());
            }
            s
        }
    };
    emit(args.out.as_deref(), &content)?;
    if all_pass {
        Ok(())
    } else {
        Err(CmdError::CheckFailed(format!(
            "structural checks failed for (p, q) = ({}, {})",
            args.p, args.q
        )))
    }
}
