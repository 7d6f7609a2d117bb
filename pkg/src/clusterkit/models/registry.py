"""Named verification models for the command line.

A model spec is ``name`` or ``name:group:group`` where each group is a
comma-separated integer list, e.g. ``quadric:5``, ``typeB:4``,
``two_by_n:3:2,2``. Running a spec returns the flat CheckResult list of
every check the model bundles.
"""

from ..ideals import gr36_certificate_check
from .base import CheckResult, initial_exchange_check
from .grid import grid_first_step_check
from .quadric import check_quadric
from .rectangles import (
    cyclic_shift_check,
    muir_embedding_check,
    rectangles_seed,
)
from .transport import mat_k, mat_transport_check
from .two_by_n import (
    two_by_n_structure_check,
    typeB_identity_suite,
    typeC_identity_suite,
)
from .wiring import (
    interval_vertices,
    omega_identity_check,
    sl5_catalog_check,
    special_wiring_seed,
)


class ModelSpecError(ValueError):
    """Unknown model name or malformed arguments."""


def _rectangles_checks(a, b):
    out = initial_exchange_check(rectangles_seed(a, b))
    out += cyclic_shift_check(a, b)
    out += muir_embedding_check(a, b)
    return out


def _base_affine_checks(k):
    out = initial_exchange_check(special_wiring_seed(k))
    mutable, _ = interval_vertices(k)
    for b, c in mutable:
        ok = omega_identity_check(k, b, c)
        out.append(CheckResult(f"exchange identity at [{b},{c}]", ok))
    return out


def _sl5_checks():
    return _base_affine_checks(5) + sl5_catalog_check()


def _mat_checks(k):
    out = mat_transport_check(k, 2 * k)
    out += initial_exchange_check(mat_k(k))
    return out


# name -> (number of ':'-groups, adapter taking one int list per group)
_MODELS = {
    "quadric": (1, lambda g: check_quadric(*g)),
    "typeB": (1, lambda g: typeB_identity_suite(*g)),
    "typeC": (1, lambda g: typeC_identity_suite(*g)),
    "two_by_n": (2, lambda g, parts: two_by_n_structure_check(
        *g, tuple(parts))),
    "rectangles": (1, lambda g: _rectangles_checks(*g)),
    "grassmannian": (1, lambda g: _rectangles_checks(*g)),
    "sl_k_base_affine": (1, lambda g: _base_affine_checks(*g)),
    "sl5": (0, _sl5_checks),
    "mat_k": (1, lambda g: _mat_checks(*g)),
    "grid4": (0, grid_first_step_check),
    "gr36": (0, lambda: [CheckResult(
        "long relation certificate", gr36_certificate_check())]),
}


def model_names():
    return sorted(_MODELS)


def run_model(spec):
    """CheckResults for a model spec; raises ModelSpecError on a spec
    that names no model."""
    parts = spec.strip().split(":")
    name = parts[0]
    if name not in _MODELS:
        known = ", ".join(model_names())
        raise ModelSpecError(f"unknown model {name!r} (known: {known})")
    groupc, fn = _MODELS[name]
    groups = parts[1:]
    if len(groups) != groupc:
        raise ModelSpecError(
            f"model {name} takes {groupc} ':'-group(s), got {len(groups)}"
        )
    args = []
    for g in groups:
        vals = []
        for p in g.split(","):
            try:
                vals.append(int(p))
            except ValueError:
                raise ModelSpecError(
                    f"model {name}: bad integer {p!r}"
                ) from None
        args.append(vals)
    try:
        results = fn(*args)
    except (TypeError, ValueError) as exc:
        raise ModelSpecError(f"model {spec}: {exc}") from None
    return list(results)


def report_lines(results):
    """Human-readable pass/fail lines, one per check."""
    lines = []
    for r in results:
        mark = "pass" if r.ok else "FAIL"
        line = f"[{mark}] {r.name}"
        if r.detail:
            line += f": {r.detail}"
        lines.append(line)
    return lines
