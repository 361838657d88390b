//! C ABI for polyint.
//!
//! Simplices and polynomials are opaque heap handles created by
//! `polyint_*_new*` functions and released with the matching `*_free`.
//! Every fallible call returns a [`PolyintStatus`]; on failure a message is
//! available from [`polyint_last_error_message`] until the next failing
//! call on the same thread. Strings returned through `char **` outputs are
//! owned by the caller and must be released with [`polyint_string_free`].
//! Rationals cross the boundary as decimal strings `"p/q"` or `"p"`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use polyint::integrate::count_primitive_forms;
use polyint::polynomial::{parse_expression, LinearForm, SparsePolynomial};
use polyint::request::IntegrationRequest;
use polyint::{format_rational, integrate, Error, IntegrationConfig, MethodChoice, PolynomialInput, Simplex};

/// Result codes. Zero means success.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyintStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed JSON, expression, rational literal or method name.
    InvalidInput = 3,
    DimensionMismatch = 4,
    DegenerateSimplex = 5,
    /// A configured cap or enumeration limit was exceeded.
    LimitExceeded = 6,
    /// The chosen method does not apply to this input.
    Unsupported = 7,
    /// A Rust panic was caught at the boundary.
    Internal = 8,
}

/// Opaque simplex handle.
pub struct PolyintSimplex {
    inner: Simplex,
}

/// Opaque polynomial handle.
pub struct PolyintPolynomial {
    inner: PolynomialInput,
    variable_count: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(message: &str) {
    let text = CString::new(message.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
}

fn status_of(error: &Error) -> PolyintStatus {
    match error {
        Error::Syntax { .. }
        | Error::VariableOutOfRange { .. }
        | Error::ZeroDenominator(_)
        | Error::InvalidRational(_)
        | Error::InvalidSimplex(_)
        | Error::InvalidGraph(_)
        | Error::InvalidInput(_) => PolyintStatus::InvalidInput,
        Error::DimensionMismatch { .. } => PolyintStatus::DimensionMismatch,
        Error::DegenerateSimplex => PolyintStatus::DegenerateSimplex,
        Error::FormalDegreeExceeded { .. }
        | Error::ExponentAboveCap { .. }
        | Error::EnumerationLimitExceeded { .. }
        | Error::EffectiveVariableCapExceeded { .. }
        | Error::PolarizationCapExceeded { .. }
        | Error::ExpansionLimitExceeded { .. } => PolyintStatus::LimitExceeded,
        Error::ZeroConstantTerm | Error::IrregularLinearForm | Error::NotHomogeneous => PolyintStatus::Unsupported,
    }
}

/// Run `body`, translating errors and panics into a status code.
fn guard(body: impl FnOnce() -> Result<(), (PolyintStatus, String)>) -> PolyintStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => PolyintStatus::Ok,
        Ok(Err((status, message))) => {
            set_last_error(&message);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            PolyintStatus::Internal
        }
    }
}

fn fail(error: Error) -> (PolyintStatus, String) {
    (status_of(&error), error.to_string())
}

fn null(name: &str) -> (PolyintStatus, String) {
    (PolyintStatus::NullPointer, format!("`{name}` is null"))
}

/// # Safety
/// `text` must be null or a valid NUL-terminated string.
unsafe fn read_str<'a>(text: *const c_char, name: &str) -> Result<&'a str, (PolyintStatus, String)> {
    if text.is_null() {
        return Err(null(name));
    }
    CStr::from_ptr(text)
        .to_str()
        .map_err(|_| (PolyintStatus::InvalidUtf8, format!("`{name}` is not UTF-8")))
}

/// # Safety
/// `out` must be null or valid for a pointer write.
unsafe fn write_string(out: *mut *mut c_char, value: String) -> Result<(), (PolyintStatus, String)> {
    if out.is_null() {
        return Err(null("out"));
    }
    let c = CString::new(value).map_err(|_| (PolyintStatus::Internal, "NUL in output".to_string()))?;
    *out = c.into_raw();
    Ok(())
}

/// # Safety
/// `out` must be null or valid for a pointer write.
unsafe fn write_handle<T>(out: *mut *mut T, value: T) -> Result<(), (PolyintStatus, String)> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

/// Message of the most recent failure on this thread, or an empty string.
/// The pointer stays valid until the next failing call on this thread.
#[no_mangle]
pub extern "C" fn polyint_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
/// `text` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn polyint_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
}

/// Build a simplex from a JSON vertex list such as `[[0,0],[1,0],[0,1]]`.
/// Coordinates may be integers or rational strings.
///
/// # Safety
/// `vertices_json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn polyint_simplex_new_json(
    vertices_json: *const c_char,
    out: *mut *mut PolyintSimplex,
) -> PolyintStatus {
    guard(|| {
        let text = read_str(vertices_json, "vertices_json")?;
        let simplex = Simplex::from_json(text).map_err(fail)?;
        write_handle(out, PolyintSimplex { inner: simplex })
    })
}

/// # Safety
/// `simplex` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn polyint_simplex_free(simplex: *mut PolyintSimplex) {
    if !simplex.is_null() {
        drop(Box::from_raw(simplex));
    }
}

/// Dimension of the simplex, or 0 for a null handle.
///
/// # Safety
/// `simplex` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn polyint_simplex_dimension(simplex: *const PolyintSimplex) -> usize {
    simplex.as_ref().map_or(0, |s| s.inner.dimension())
}

/// Volume under the integral Lebesgue measure of the simplex's affine hull.
///
/// # Safety
/// `simplex` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn polyint_simplex_volume(
    simplex: *const PolyintSimplex,
    out: *mut *mut c_char,
) -> PolyintStatus {
    guard(|| {
        let s = simplex.as_ref().ok_or_else(|| null("simplex"))?;
        write_string(out, format_rational(s.inner.volume()))
    })
}

/// Parse a fully parenthesized expression in `x1..x{variable_count}`.
///
/// # Safety
/// `expression` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn polyint_polynomial_new_expression(
    expression: *const c_char,
    variable_count: usize,
    out: *mut *mut PolyintPolynomial,
) -> PolyintStatus {
    guard(|| {
        let text = read_str(expression, "expression")?;
        let e = parse_expression(text, variable_count).map_err(fail)?;
        write_handle(
            out,
            PolyintPolynomial {
                inner: PolynomialInput::Expression(e),
                variable_count,
            },
        )
    })
}

/// Parse a sparse term list `[{"coef":"3/2","exps":[2,1]}, ...]`.
///
/// # Safety
/// `terms_json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn polyint_polynomial_new_sparse_json(
    terms_json: *const c_char,
    variable_count: usize,
    out: *mut *mut PolyintPolynomial,
) -> PolyintStatus {
    guard(|| {
        let text = read_str(terms_json, "terms_json")?;
        let p = SparsePolynomial::from_json(text, Some(variable_count)).map_err(fail)?;
        if p.variable_count() != variable_count {
            return Err(fail(Error::DimensionMismatch {
                expected: variable_count,
                found: p.variable_count(),
            }));
        }
        write_handle(
            out,
            PolyintPolynomial {
                inner: PolynomialInput::Sparse(p),
                variable_count,
            },
        )
    })
}

/// The power `(Σ c_i x_i)^exponent` with integer coefficients.
///
/// # Safety
/// `coefficients` must point to `variable_count` readable values; `out`
/// must be writable.
#[no_mangle]
pub unsafe extern "C" fn polyint_polynomial_new_linear_power(
    coefficients: *const i64,
    variable_count: usize,
    exponent: u32,
    out: *mut *mut PolyintPolynomial,
) -> PolyintStatus {
    guard(|| {
        if coefficients.is_null() && variable_count > 0 {
            return Err(null("coefficients"));
        }
        let coeffs: &[i64] = if variable_count == 0 {
            &[]
        } else {
            std::slice::from_raw_parts(coefficients, variable_count)
        };
        write_handle(
            out,
            PolyintPolynomial {
                inner: PolynomialInput::LinearPower {
                    form: LinearForm::from_integers(coeffs),
                    exponent,
                },
                variable_count,
            },
        )
    })
}

/// # Safety
/// `polynomial` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn polyint_polynomial_free(polynomial: *mut PolyintPolynomial) {
    if !polynomial.is_null() {
        drop(Box::from_raw(polynomial));
    }
}

/// Integrate a polynomial over a simplex. `method` is one of `auto`,
/// `bigsum`, `brion-regular`, `residue`, `waring`, `duality`, `laurent`,
/// `polarization`; null means `auto`. Writes the exact value to `out_value`
/// and, if `out_method` is not null, the method actually used.
///
/// # Safety
/// Handles must be live; `method` null or NUL-terminated; `out_value`
/// writable; `out_method` null or writable.
#[no_mangle]
pub unsafe extern "C" fn polyint_integrate(
    simplex: *const PolyintSimplex,
    polynomial: *const PolyintPolynomial,
    method: *const c_char,
    out_value: *mut *mut c_char,
    out_method: *mut *mut c_char,
) -> PolyintStatus {
    guard(|| {
        let s = simplex.as_ref().ok_or_else(|| null("simplex"))?;
        let p = polynomial.as_ref().ok_or_else(|| null("polynomial"))?;
        let choice = if method.is_null() {
            MethodChoice::Auto
        } else {
            read_str(method, "method")?.parse().map_err(fail)?
        };
        if p.variable_count != s.inner.ambient_dimension() {
            return Err(fail(Error::DimensionMismatch {
                expected: s.inner.ambient_dimension(),
                found: p.variable_count,
            }));
        }
        let (value, used) = integrate(&s.inner, &p.inner, choice, &IntegrationConfig::default()).map_err(fail)?;
        write_string(out_value, format_rational(&value))?;
        if !out_method.is_null() {
            write_string(out_method, used.name().to_string())?;
        }
        Ok(())
    })
}

/// Run a JSON integration request, as accepted by the command line tool,
/// and write the JSON result.
///
/// # Safety
/// `request_json` must be NUL-terminated; `out_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn polyint_integrate_request_json(
    request_json: *const c_char,
    out_json: *mut *mut c_char,
) -> PolyintStatus {
    guard(|| {
        let text = read_str(request_json, "request_json")?;
        let request = IntegrationRequest::from_json(text).map_err(fail)?;
        let result = request.run(&IntegrationConfig::default()).map_err(fail)?;
        write_string(out_json, result.to_json())
    })
}

/// Number of primitive linear forms in `n` variables needed by power
/// decompositions of degree at most `max_degree`, as a decimal string.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn polyint_count_primitive_forms(
    n: u32,
    max_degree: u32,
    out: *mut *mut c_char,
) -> PolyintStatus {
    guard(|| write_string(out, count_primitive_forms(n, max_degree).to_string()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn polyint_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
