//! Expression evaluation behind `qeuclid eval`.

use qeuclid::braided::{invert_in, translate_in, uhat, Variant};
use qeuclid::derivatives::{apply_action, Action, Index};
use qeuclid::qexp::{exp_series, Which};
use qeuclid::series::{parse_cpoly, Axis, CPoly, ParseError, Slot};
use qeuclid::star::star_in;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum EvalError {
    #[error("operand {index}: {source}")]
    Parse { index: usize, source: ParseError },
    #[error("unknown axis `{0}` (expected +, 3 or -)")]
    Axis(String),
    #[error("unknown action `{0}` (expected left, left_bar, right_bar or right)")]
    Action(String),
    #[error("unknown exponential `{0}` (expected xp, px or inverse)")]
    Which(String),
}

pub fn operand(index: usize, src: &str) -> Result<CPoly, EvalError> {
    parse_cpoly(src).map_err(|source| EvalError::Parse { index, source })
}

pub fn axis(s: &str) -> Result<Axis, EvalError> {
    match s.chars().collect::<Vec<_>>().as_slice() {
        [c] => Axis::from_symbol(*c).ok_or_else(|| EvalError::Axis(s.into())),
        _ => Err(EvalError::Axis(s.into())),
    }
}

fn variant(bar: bool) -> Variant {
    if bar {
        Variant::Bar
    } else {
        Variant::Plain
    }
}

pub fn star(f: &str, g: &str) -> Result<CPoly, EvalError> {
    Ok(star_in(&operand(1, f)?, &operand(2, g)?, Slot::X))
}

pub fn translate(f: &str, bar: bool) -> Result<CPoly, EvalError> {
    Ok(translate_in(&operand(1, f)?, variant(bar), Slot::X, Slot::X, Slot::Y))
}

pub fn invert(f: &str, bar: bool) -> Result<CPoly, EvalError> {
    Ok(invert_in(&operand(1, f)?, variant(bar), Slot::X))
}

pub fn uhat_op(f: &str, inverse: bool) -> Result<CPoly, EvalError> {
    Ok(uhat(&operand(1, f)?, if inverse { -1 } else { 1 }))
}

pub fn conj(f: &str) -> Result<CPoly, EvalError> {
    Ok(operand(1, f)?.conjugate_series())
}

pub fn action(name: &str, ax: &str, co: bool, f: &str) -> Result<CPoly, EvalError> {
    let act = Action::from_name(name).ok_or_else(|| EvalError::Action(name.into()))?;
    let a = axis(ax)?;
    let idx = if co { Index::Co(a) } else { Index::Contra(a) };
    Ok(apply_action(act, idx, &operand(1, f)?, Slot::X))
}

pub fn exp(cap: u32, which: &str) -> Result<CPoly, EvalError> {
    let w = Which::from_name(which).ok_or_else(|| EvalError::Which(which.into()))?;
    Ok(exp_series(w, cap).poly.clone())
}
