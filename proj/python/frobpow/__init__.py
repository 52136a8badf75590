"""Prime-characteristic ideal calculus: Groebner bases over F_p, Frobenius
and tight closure verdicts, Hilbert-Kunz tables, and flat base-change
verification. Thin wrapper over the C++ core; report-producing calls return
plain dicts decoded from the core's JSON payloads."""

import json as _json

from _frobpow import (  # noqa: F401
    FlatExtension,
    FrobpowError,
    Ideal,
    Ring,
    __version__,
    hilbert_kunz_csv,
    hilbert_series_str,
    multiplicity,
    run_session_file,
    set_degree_cap,
)
import _frobpow as _core


def _decoded(fn):
    def wrapper(*args, **kwargs):
        return _json.loads(fn(*args, **kwargs))
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


frobenius_closure_test = _decoded(_core.frobenius_closure_test)
tight_closure_test = _decoded(_core.tight_closure_test)
tight_closure_candidate = _decoded(_core.tight_closure_candidate)
hilbert_kunz = _decoded(_core.hilbert_kunz)
tau_truncated = _decoded(_core.tau_truncated)
f_injectivity_check = _decoded(_core.f_injectivity_check)
f_rationality_check = _decoded(_core.f_rationality_check)


def check_length_identity(ext, ideal, e_min=1, e_max=3):
    return _json.loads(ext.check_length_identity(ideal, e_min, e_max))


def check_hk_multiplicativity(ext, ideal, e_min=1, e_max=3):
    return _json.loads(ext.check_hk_multiplicativity(ideal, e_min, e_max))


def check_kunz_inequality(ext, e_min=1, e_max=3):
    return _json.loads(ext.check_kunz_inequality(e_min, e_max))


def check_tightly_closed_extension(ext, ideal, t=1, test_element="", test_power=2, emax=3):
    return _json.loads(
        ext.check_tightly_closed_extension(ideal, t, test_element, test_power, emax))


def check_test_exponent_transfer(ext, c, ideal, test_element="", test_power=2, emax=3):
    return _json.loads(
        ext.check_test_exponent_transfer(c, ideal, test_element, test_power, emax))


def check_tau_extension(ext, z_base, tmax=2, test_element="", test_power=2, emax=3):
    return _json.loads(
        ext.check_tau_extension(z_base, tmax, test_element, test_power, emax))


def run_session(path, with_timing=False):
    code, payload = run_session_file(path, with_timing)
    return code, _json.loads(payload)
