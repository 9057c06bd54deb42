//! One function per subcommand. Each returns the JSON to emit and the exit
//! code, or an input error.

use krein_frames::construction::{
    check_majorization, construct_frame, Flavor, MajorizationReport, SpectrumSpec,
};
use krein_frames::coupling::couple_frames_with_tol;
use krein_frames::dilation::{are_similar_with_tol, dilate_with_tol};
use krein_frames::frames::validate_with_tol;
use krein_frames::{linalg, Error, Validation};
use serde_json::{json, Value};

use crate::document::{matrix_rows, Document, OperatorRecord};
use crate::InputError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_NEGATIVE: i32 = 2;

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub output: Value,
}

impl Outcome {
    fn ok(output: Value) -> Self {
        Self {
            code: EXIT_OK,
            output,
        }
    }

    fn negative(output: Value) -> Self {
        Self {
            code: EXIT_NEGATIVE,
            output,
        }
    }
}

/// Library errors that answer the question in the negative, as opposed to
/// rejecting the input.
fn is_negative(e: &Error) -> bool {
    matches!(
        e,
        Error::NotFrame { .. }
            | Error::NotMajorized
            | Error::DegenerateSubspace
            | Error::KMismatch { .. }
            | Error::SingularFrameOperator { .. }
    )
}

fn negative_or_input(e: Error) -> Result<Outcome, InputError> {
    if is_negative(&e) {
        Ok(Outcome::negative(json!({ "error": e.to_string() })))
    } else {
        Err(InputError::new(e.to_string()))
    }
}

pub fn cmd_validate(doc: &Document, family: &str, tol: f64) -> Result<Outcome, InputError> {
    let f = doc.family(family)?;
    let dim = f.space().dim();
    match validate_with_tol(&f, tol).map_err(|e| InputError::new(e.to_string()))? {
        Validation::Frame(b) => Ok(Outcome::ok(json!({
            "family": family,
            "is_frame": true,
            "A": b.lower,
            "B": b.upper,
            "tight": b.tight,
            "exact": b.exact,
            "rank": dim,
        }))),
        Validation::NotFrame { rank, dim } => Ok(Outcome::negative(json!({
            "family": family,
            "is_frame": false,
            "rank": rank,
            "dim": dim,
        }))),
    }
}

fn report_json(r: &MajorizationReport) -> Value {
    json!({
        "partial_ok": r.partial_ok,
        "trace_lhs": r.trace_lhs,
        "trace_rhs": r.trace_rhs,
        "trace_balanced": r.trace_balanced,
        "trace_within_bound": r.trace_within_bound,
        "feasible": r.feasible,
    })
}

/// The input document with the constructed family added under `name`, in
/// the operator's space.
pub fn cmd_construct(
    doc: &Document,
    operator: &str,
    norms: &str,
    flavor: Flavor,
    name: &str,
) -> Result<Outcome, InputError> {
    let (space, s0) = doc.operator(operator)?;
    let a = doc.norms(norms)?;
    match construct_frame(&space, &s0, &a, flavor) {
        Ok(f) => {
            let mut out = doc.clone();
            let space_name = doc.operators[operator].space.clone();
            out.insert_family(name, &space_name, &f)?;
            Ok(Outcome::ok(
                serde_json::to_value(&out).expect("documents always serialize"),
            ))
        }
        Err(Error::NotMajorized) => {
            let eig = linalg::hermitian_eig(&s0).map_err(|e| InputError::new(e.to_string()))?;
            let spectrum =
                SpectrumSpec::new(eig.values).map_err(|e| InputError::new(e.to_string()))?;
            let report = check_majorization(&spectrum, &a);
            Ok(Outcome::negative(json!({
                "error": Error::NotMajorized.to_string(),
                "report": report_json(&report),
            })))
        }
        Err(e) => negative_or_input(e),
    }
}

/// The input document plus the dilation: space and family `name`, and the
/// projector as operator `name_projector`.
pub fn cmd_extend(
    doc: &Document,
    family: &str,
    name: &str,
    tol: f64,
) -> Result<Outcome, InputError> {
    let f = doc.family(family)?;
    let d = match dilate_with_tol(&f, tol) {
        Ok(d) => d,
        Err(e) => return negative_or_input(e),
    };
    let mut out = doc.clone();
    out.insert_family(name, name, &d.big_frame)?;
    out.operators.insert(
        format!("{name}_projector"),
        OperatorRecord {
            space: name.to_string(),
            rows: matrix_rows(&d.projector),
        },
    );
    Ok(Outcome::ok(
        serde_json::to_value(&out).expect("documents always serialize"),
    ))
}

/// The input document plus the coupling: space and family `name`, and the
/// two projections as operators `name_p_k` and `name_p_h`.
pub fn cmd_couple(
    doc: &Document,
    left: &str,
    right: &str,
    name: &str,
    tol: f64,
) -> Result<Outcome, InputError> {
    let f = doc.family(left)?;
    let g = doc.family(right)?;
    let c = match couple_frames_with_tol(&f, &g, tol) {
        Ok(c) => c,
        Err(e) => return negative_or_input(e),
    };
    let mut out = doc.clone();
    out.insert_family(name, name, &c.coupled_frame)?;
    for (suffix, p) in [("p_k", &c.p_k), ("p_h", &c.p_h)] {
        out.operators.insert(
            format!("{name}_{suffix}"),
            OperatorRecord {
                space: name.to_string(),
                rows: matrix_rows(p),
            },
        );
    }
    Ok(Outcome::ok(
        serde_json::to_value(&out).expect("documents always serialize"),
    ))
}

pub fn cmd_similar(
    doc: &Document,
    left: &str,
    right: &str,
    tol: f64,
) -> Result<Outcome, InputError> {
    let f = doc.family(left)?;
    let g = doc.family(right)?;
    let r = match are_similar_with_tol(&f, &g, tol) {
        Ok(r) => r,
        Err(e) => return negative_or_input(e),
    };
    let output = json!({
        "similar": r.similar,
        "range_dim_f": r.range_dim_f,
        "range_dim_g": r.range_dim_g,
        "intertwiner": r.intertwiner.as_ref().map(matrix_rows),
    });
    Ok(if r.similar {
        Outcome::ok(output)
    } else {
        Outcome::negative(output)
    })
}
