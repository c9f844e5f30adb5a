//! Subcommand implementations; each returns the full text to print.

use std::str::FromStr;

use ntkit::apcount::{ap, frey_ap_formula, ApTable};
use ntkit::classical::{
    abc_quality, abc_scan, eisenstein_lemma_check, exponent_reduce, flt_exponent_bound, n4_search,
    pythag_param, write_abc_csv, ExponentReduction,
};
use ntkit::ecurve::{conductor, frey_curve, reduction_type, two_torsion, WeierstrassModel};
use ntkit::exactnum::primes_between;
use ntkit::exec::Strategy;
use ntkit::galois::{frobenius_is_homomorphism, frobenius_order, subfield_lattice, FiniteField};
use ntkit::lattice::{eisenstein_gk, torus_torsion, uniformization_report, LatticeSpec};
use ntkit::matrix2::{fundamental_reduce, in_fundamental_domain, UpperHalfPoint, DOMAIN_TOLERANCE};
use ntkit::qexp::{delta_series, dim_s2_gamma0, eisenstein_series, hecke_tn_to, j_series, QSeries};
use ntkit::BigInt;
use num::{Complex, Zero};
use serde_json::{json, Map, Value};

use crate::config::{CliConfig, Format};
use crate::output::{complex, fmt_complex, json_line, num, rat};
use crate::{ClassicalCmd, CliError, Command, CurveCmd, GaloisCmd, LatticeCmd};

type Out = Result<String, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn parse_int(s: &str) -> Result<BigInt, CliError> {
    BigInt::from_str(s.trim()).map_err(|_| usage(format!("not an integer: {s:?}")))
}

fn parse_model(s: &str) -> Result<WeierstrassModel, CliError> {
    s.parse()
        .map_err(|e| usage(format!("bad curve model {s:?}: {e}")))
}

fn big(n: &BigInt) -> Value {
    Value::String(n.to_string())
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// `key: value` lines; nested values are shown as compact JSON.
fn text_of(v: &Value) -> String {
    match v {
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| format!("{k}: {}\n", scalar_text(v)))
            .collect(),
        other => format!("{}\n", scalar_text(other)),
    }
}

/// One-row CSV for flat objects.
fn csv_of(v: &Value) -> Out {
    let Value::Object(map) = v else {
        return Err(usage("csv output is not available for this command"));
    };
    if map.values().any(|x| x.is_object() || x.is_array()) {
        return Err(usage("csv output is not available for this command"));
    }
    let header: Vec<&str> = map.keys().map(String::as_str).collect();
    let row: Vec<String> = map.values().map(scalar_text).collect();
    Ok(format!("{}\n{}\n", header.join(","), row.join(",")))
}

fn emit(v: Value, cfg: &CliConfig) -> Out {
    match cfg.format.unwrap_or(Format::Json) {
        Format::Json => Ok(json_line(&v)),
        Format::Text => Ok(text_of(&v)),
        Format::Csv => csv_of(&v),
    }
}

pub fn run(cmd: &Command, cfg: &CliConfig) -> Out {
    match cmd {
        Command::Curve(CurveCmd::Analyze { model }) => curve_analyze(&parse_model(model)?, cfg),
        Command::Curve(CurveCmd::Ap { model }) => curve_ap(&parse_model(model)?, cfg),
        Command::Frey { a, b, c, exponent } => frey(
            &parse_int(a)?,
            &parse_int(b)?,
            &parse_int(c)?,
            *exponent,
            cfg,
        ),
        Command::Qexp { form } => qexp(form, cfg),
        Command::Hecke { n, form } => hecke(*n, form, cfg),
        Command::Dim { level } => dim(*level, cfg),
        Command::Reduce { re, im } => reduce(*re, *im, cfg),
        Command::Lattice(LatticeCmd::Check {
            shape,
            samples,
            seed,
        }) => lattice_check(shape, *samples, *seed, cfg),
        Command::Galois(GaloisCmd::Frob { p, k }) => galois_frob(*p, *k, cfg),
        Command::Classical(c) => classical(c, cfg),
    }
}

fn curve_analyze(m: &WeierstrassModel, cfg: &CliConfig) -> Out {
    let inv = m.invariants()?;
    let (b2, b4, b6) = m.b_invariants();
    let torsion = two_torsion(m)?;
    let primes = primes_between(3, cfg.pmax);
    let rows = Strategy::default().map(&primes, |&p| {
        let mut row = Map::new();
        row.insert("p".into(), json!(p));
        match reduction_type(m, p).and_then(|t| Ok((t, ap(m, p)?))) {
            Ok((t, a)) => {
                row.insert("type".into(), json!(t.to_string()));
                row.insert("ap".into(), json!(a.to_string()));
            }
            Err(e) => {
                row.insert("error".into(), json!(e.to_string()));
            }
        }
        Value::Object(row)
    });
    let cond = match conductor(m) {
        Ok(c) => json!({
            "value": big(&c.value),
            "factors": c.factors.iter().map(|f| json!({"p": f.prime, "f": f.exponent})).collect::<Vec<_>>(),
            "semistable": c.is_semistable(),
        }),
        Err(e) => json!({ "error": e.to_string() }),
    };
    let v = json!({
        "model": m.to_string(),
        "long": m.long_coefficients().iter().map(rat).collect::<Vec<_>>(),
        "b2": rat(&b2),
        "b4": rat(&b4),
        "b6": rat(&b6),
        "c4": rat(&inv.c4),
        "c6": rat(&inv.c6),
        "discriminant": rat(&inv.discriminant),
        "discriminant_short": rat(&inv.discriminant_short),
        "j": rat(&inv.j),
        "short_form": m.to_short_form().to_string(),
        "two_torsion": {
            "structure": torsion.structure.to_string(),
            "points": torsion.points.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        },
        "reduction": rows,
        "conductor": cond,
    });
    emit(v, cfg)
}

fn curve_ap(m: &WeierstrassModel, cfg: &CliConfig) -> Out {
    m.invariants()?;
    let table = ApTable::build(m, cfg.pmax)?;
    match cfg.format.unwrap_or(Format::Csv) {
        Format::Csv | Format::Text => {
            let mut buf = Vec::new();
            table.write_csv(&mut buf)?;
            Ok(String::from_utf8(buf).expect("ascii"))
        }
        Format::Json => emit(
            json!({
                "model": m.to_string(),
                "pmax": cfg.pmax,
                "values": table.values.iter().map(|(n, a)| json!({"n": n, "a_n": big(a)})).collect::<Vec<_>>(),
            }),
            cfg,
        ),
    }
}

fn frey(a: &BigInt, b: &BigInt, c: &BigInt, exponent: u32, cfg: &CliConfig) -> Out {
    let f = frey_curve(a, b, c, exponent)?;
    let mut checks = Vec::new();
    let mut agree = true;
    for p in primes_between(3, cfg.pmax) {
        match frey_ap_formula(&f, p) {
            Ok(formula) => {
                let direct = ap(&f.model, p)?;
                agree &= formula == direct;
                checks.push(
                    json!({"p": p, "formula": formula.to_string(), "count": direct.to_string()}),
                );
            }
            Err(ntkit::Error::BadReductionPrime(_)) => {}
            Err(e) => return Err(e.into()),
        }
    }
    let v = json!({
        "a": big(a),
        "b": big(b),
        "c": big(c),
        "P": exponent,
        "model": f.model.to_string(),
        "discriminant": big(&f.discriminant),
        "root_discriminant": rat(&f.model.root_discriminant().expect("root form")),
        "conductor": big(&f.conductor.value),
        "semistable": f.semistable,
        "ap_check": {
            "agree": agree,
            "primes": checks,
        },
    });
    emit(v, cfg)
}

fn named_form(form: &str, prec: usize) -> Result<QSeries, CliError> {
    Ok(match form.to_ascii_lowercase().as_str() {
        "e4" => eisenstein_series(4, prec)?,
        "e6" => eisenstein_series(6, prec)?,
        "delta" => delta_series(prec.max(2))?,
        "j" => j_series(prec)?,
        other => {
            return Err(usage(format!(
                "unknown form {other:?}; expected E4, E6, delta or j"
            )))
        }
    })
}

fn series_csv(s: &QSeries) -> String {
    let mut out = String::from("n,coeff\n");
    for (i, c) in s.coeffs().iter().enumerate() {
        out.push_str(&format!("{},{}\n", s.lowest() + i as i64, c));
    }
    out
}

fn qexp(form: &str, cfg: &CliConfig) -> Out {
    let s = named_form(form, cfg.prec)?;
    match cfg.format.unwrap_or(Format::Json) {
        Format::Json => Ok(json_line(&s.to_json())),
        Format::Text => Ok(format!("{s}\n")),
        Format::Csv => Ok(series_csv(&s)),
    }
}

fn hecke(n: u64, form: &str, cfg: &CliConfig) -> Out {
    if n == 0 {
        return Err(usage("n must be positive"));
    }
    let out_prec = cfg.prec as i64;
    let input = named_form(form, cfg.prec.saturating_mul(n as usize))?;
    let t = hecke_tn_to(&input, n, out_prec)?;
    // eigenvalue from the first nonzero coefficient of f
    let lead = input.normalize_lowest();
    let eigen = lead.coeffs().first().and_then(|c0| {
        let lambda = t.coeff(lead.lowest())? / c0;
        t.coeffs_eq(&input.truncate(out_prec).scale(&lambda))
            .then_some(lambda)
    });
    match cfg.format.unwrap_or(Format::Json) {
        Format::Json => emit(
            json!({
                "n": n,
                "form": form,
                "series": t.to_json(),
                "eigenform": eigen.is_some(),
                "eigenvalue": eigen.as_ref().map(rat),
            }),
            cfg,
        ),
        Format::Text => Ok(format!("{t}\n")),
        Format::Csv => Ok(series_csv(&t)),
    }
}

fn dim(level: u64, cfg: &CliConfig) -> Out {
    let d = dim_s2_gamma0(level)?;
    emit(
        json!({
            "N": d.level,
            "mu0": d.mu0,
            "mu02": d.mu02,
            "mu03": d.mu03,
            "c0": d.c0,
            "g0": d.genus(),
        }),
        cfg,
    )
}

fn reduce(re: f64, im: f64, cfg: &CliConfig) -> Out {
    let z = UpperHalfPoint::new(re, im)?;
    let r = fundamental_reduce(z)?;
    let m = &r.matrix;
    let v = json!({
        "input": fmt_complex(Complex::new(re, im)),
        "point": fmt_complex(r.point.to_complex()),
        "word": r.word(),
        "matrix": [[big(&m.a), big(&m.b)], [big(&m.c), big(&m.d)]],
        "in_domain": in_fundamental_domain(r.point, DOMAIN_TOLERANCE),
    });
    emit(v, cfg)
}

fn lattice_check(shape: &str, samples: usize, seed: u64, cfg: &CliConfig) -> Out {
    let l = match shape {
        "square" => LatticeSpec::square(cfg.radius)?,
        "hex" | "hexagonal" => LatticeSpec::hexagonal(cfg.radius)?,
        other => {
            return Err(usage(format!(
                "unknown shape {other:?}; expected square or hexagonal"
            )))
        }
    };
    let g4 = eisenstein_gk(&l, 4)?;
    let g6 = eisenstein_gk(&l, 6)?;
    let report = uniformization_report(&l, samples, seed)?;
    let torsion_ok = (1..=6).all(|n| torus_torsion(n).is_ok_and(|t| t.verify(1e-9)));
    let tol = cfg.tolerance;
    let v = json!({
        "shape": shape,
        "radius": cfg.radius,
        "G4": complex(g4.value),
        "G4_error": num(g4.error),
        "G6": complex(g6.value),
        "G6_error": num(g6.error),
        "ode_max_residual": num(report.ode_max_residual),
        "even_max": num(report.even_max),
        "periodic_max": num(report.periodic_max),
        "derivative_odd_max": num(report.derivative_odd_max),
        "homomorphism_max": num(report.homomorphism_max),
        "half_period_values": report.half_period_values.iter().map(|z| complex(*z)).collect::<Vec<_>>(),
        "half_periods_distinct": report.half_periods_distinct,
        "torsion_n_le_6": torsion_ok,
        "samples": samples,
        "tolerance": num(tol),
        "pass": report.ode_max_residual < tol
            && report.periodic_max < tol
            && report.homomorphism_max < tol
            && report.half_periods_distinct
            && torsion_ok,
    });
    emit(v, cfg)
}

fn galois_frob(p: u64, k: u32, cfg: &CliConfig) -> Out {
    let field = FiniteField::new(p, k)?;
    let order = frobenius_order(p, k)?;
    let lattice = match subfield_lattice(p, k) {
        Ok(l) => json!({
            "fixed_sizes": l.fixed_sizes.iter().map(|(d, n)| (d.to_string(), json!(n))).collect::<Map<_, _>>(),
            "consistent": l.is_consistent(),
        }),
        Err(ntkit::Error::FieldTooLarge(_)) => Value::Null,
        Err(e) => return Err(e.into()),
    };
    let modulus_text = {
        let mut coeffs = field.modulus().to_vec();
        coeffs.pop();
        let rest = coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "t".into(),
                (1, c) => format!("{c}t"),
                (i, 1) => format!("t^{i}"),
                (i, c) => format!("{c}t^{i}"),
            });
        let lead = if k == 1 {
            "t".to_string()
        } else {
            format!("t^{k}")
        };
        std::iter::once(lead)
            .chain(rest)
            .collect::<Vec<_>>()
            .join(" + ")
    };
    let v = json!({
        "p": p,
        "k": k,
        "modulus": modulus_text,
        "frobenius_order": order,
        "homomorphism": frobenius_is_homomorphism(&field, 2000, 1),
        "subfields": lattice,
    });
    emit(v, cfg)
}

fn classical(c: &ClassicalCmd, cfg: &CliConfig) -> Out {
    match c {
        ClassicalCmd::Pythag { a, b } => {
            let t = pythag_param(&parse_int(a)?, &parse_int(b)?)?;
            emit(
                json!({"a": big(&t.a), "b": big(&t.b), "x": big(&t.x), "y": big(&t.y), "z": big(&t.z)}),
                cfg,
            )
        }
        ClassicalCmd::ReduceExp { n } => {
            let r = exponent_reduce(*n)?;
            let case = match r {
                ExponentReduction::Four { .. } => "four",
                ExponentReduction::OddPrime { .. } => "odd-prime",
            };
            emit(
                json!({"n": n, "case": case, "exponent": r.exponent(), "r": r.cofactor(), "witness": r.witness()}),
                cfg,
            )
        }
        ClassicalCmd::N4 { bound } => {
            let sols = n4_search(*bound)?;
            let list: Vec<Value> = sols
                .iter()
                .map(|(x, y, z)| json!([x.to_string(), y.to_string(), z.to_string()]))
                .collect();
            emit(
                json!({"bound": bound, "count": list.len(), "solutions": list}),
                cfg,
            )
        }
        ClassicalCmd::Eisenstein { range } => {
            let r = eisenstein_lemma_check(*range)?;
            emit(
                json!({
                    "range": r.range,
                    "elements": r.elements,
                    "cube_cases": r.cube_cases,
                    "norm_lambda": big(&r.norm_lambda),
                    "lambda_valuation_of_3": r.lambda_valuation_of_3,
                    "three_over_lambda_squared_is_unit": r.three_over_lambda_squared_is_unit,
                    "pass": true,
                }),
                cfg,
            )
        }
        ClassicalCmd::Abc { a, b, c } => {
            let (a, b, c) = (parse_int(a)?, parse_int(b)?, parse_int(c)?);
            let q = abc_quality(&a, &b, &c)?;
            let bound = if c > BigInt::from(1) && !a.is_zero() {
                Some(flt_exponent_bound(&a, &b, &c)?)
            } else {
                None
            };
            emit(
                json!({
                    "a": big(&a),
                    "b": big(&b),
                    "c": big(&c),
                    "rad": big(&q.rad),
                    "q": num(q.q),
                    "flt_exponent_bound": bound,
                    "bound_assumption": "K = 1, epsilon = 1/2 (illustrative)",
                }),
                cfg,
            )
        }
        ClassicalCmd::AbcScan { cmax, threshold } => {
            let hits = abc_scan(*cmax, *threshold, Strategy::default())?;
            match cfg.format.unwrap_or(Format::Csv) {
                Format::Csv | Format::Text => {
                    let mut buf = Vec::new();
                    write_abc_csv(&hits, &mut buf)?;
                    Ok(String::from_utf8(buf).expect("ascii"))
                }
                Format::Json => emit(
                    json!({
                        "cmax": cmax,
                        "threshold": num(*threshold),
                        "hits": hits.iter().map(|h| json!({
                            "a": h.a, "b": h.b, "c": h.c, "rad": h.rad, "q": num(h.q),
                        })).collect::<Vec<_>>(),
                    }),
                    cfg,
                ),
            }
        }
    }
}
