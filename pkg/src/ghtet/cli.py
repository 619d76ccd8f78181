"""JSON command-line front end.

Every command reads one JSON document from ``--input`` (a path, or ``-``
for stdin) and writes one JSON document to stdout.  ``sample`` writes one
configuration document per line instead.  Failures are written to stdout
as ``{"error": {...}}`` with a one-line summary on stderr.

Exit codes: 0 success, 1 parse/usage error, 2 inadmissible input,
3 numeric failure.
"""

import argparse
import json
import logging
import math
import sys
from concurrent.futures import ProcessPoolExecutor, as_completed

import numpy as np

from . import jacobian as jac_mod
from .edges import EDGE_LABELS, LABEL_INDEX
from .errors import (
    DegenerateError,
    GeometryError,
    InadmissibleError,
    PerturbationError,
    SamplingError,
    SolverError,
)
from .kernels import TYPE_CODES, TYPE_NAMES
from .sampling import SIGNATURES, document_rngs, sample_one
from .solver import RANK_RTOL, solve
from .tetra import (
    COS_MARGIN,
    TetConfig,
    admissible,
    angles_cofactor,
    angles_link_detail,
    cofactors,
    det_identities,
    gram,
    principal_minor_dets,
    require_admissible,
)
from .triangle import DET_FLOOR
from .validation import check_types

log = logging.getLogger("ghtet")

EXIT_OK, EXIT_USAGE, EXIT_INADMISSIBLE, EXIT_NUMERIC = 0, 1, 2, 3
SIGNIFICANT_DIGITS = 15


class ParseError(ValueError):
    pass


class NonFiniteOutput(GeometryError):
    pass


# -- serialization -----------------------------------------------------------

def _num(x):
    x = float(x)
    if not math.isfinite(x):
        raise NonFiniteOutput(f"refusing to serialize non-finite value {x!r}")
    return float(f"{x:.{SIGNIFICANT_DIGITS}g}")


def clean(obj):
    """Round floats to 15 significant digits, recursively; reject NaN/inf."""
    if isinstance(obj, dict):
        return {k: clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [clean(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return clean(obj.tolist())
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return _num(obj)
    return obj


def edge_vector(values):
    return {label: values[n] for n, label in enumerate(EDGE_LABELS)}


def labeled_matrix(m):
    return {"rows": list(EDGE_LABELS), "columns": list(EDGE_LABELS), "data": np.asarray(m)}


def config_document(cfg):
    return {"types": [TYPE_NAMES[t] for t in cfg.types], "lengths": edge_vector(cfg.lengths)}


def dump(doc, compact=False):
    doc = clean(doc)
    if compact:
        return json.dumps(doc, separators=(",", ":"), allow_nan=False)
    return json.dumps(doc, indent=2, allow_nan=False)


# -- parsing -----------------------------------------------------------------

def read_document(path):
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("top-level JSON value must be an object")
    return doc


def _finite_number(value, where):
    if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
        raise ParseError(f"{where} must be a finite number, got {value!r}")
    return float(value)


def parse_types(value):
    if not isinstance(value, list) or len(value) != 4:
        raise ParseError("'types' must be an array of four strings")
    out = []
    for t in value:
        if t not in TYPE_CODES:
            raise ParseError(f"unknown vertex type {t!r}; expected one of {sorted(TYPE_CODES)}")
        out.append(TYPE_CODES[t])
    return tuple(out)


def parse_edge_object(value, name, positive=True):
    if isinstance(value, list) and len(value) == 6:
        value = dict(zip(EDGE_LABELS, value))
    if not isinstance(value, dict):
        raise ParseError(f"'{name}' must be an object keyed by {list(EDGE_LABELS)}")
    unknown = [k for k in value if k not in LABEL_INDEX]
    if unknown:
        raise ParseError(f"'{name}' has unknown key {unknown[0]!r}; expected {list(EDGE_LABELS)}")
    missing = [k for k in EDGE_LABELS if k not in value]
    if missing:
        raise ParseError(f"'{name}' is missing key {missing[0]!r}")
    out = np.empty(6)
    for label in EDGE_LABELS:
        x = _finite_number(value[label], f"{name}[{label!r}]")
        if positive and not x > 0:
            raise ParseError(f"{name}[{label!r}] must be positive, got {x}")
        out[LABEL_INDEX[label]] = x
    return out


def parse_config(doc):
    if "types" not in doc or "lengths" not in doc:
        raise ParseError("configuration needs 'types' and 'lengths'")
    return TetConfig(parse_types(doc["types"]), parse_edge_object(doc["lengths"], "lengths"))


def tolerances(**extra):
    base = {"det_floor": DET_FLOOR, "cos_margin": COS_MARGIN}
    base.update(extra)
    return base


# -- commands ----------------------------------------------------------------

def cmd_angles(doc, args):
    cfg = parse_config(doc)
    require_admissible(cfg)
    cof = angles_cofactor(cfg)
    link = angles_link_detail(cfg)
    return {
        "input": doc,
        "edge_order": list(EDGE_LABELS),
        "angles": {"cofactor": edge_vector(cof), "link": edge_vector(link.angles)},
        "route_deviation": float(np.max(np.abs(cof - link.angles))),
        "link_endpoint_deviation": link.discrepancy,
        "tolerances": tolerances(),
    }


def cmd_gram(doc, args):
    cfg = parse_config(doc)
    g = gram(cfg)
    out = {
        "input": doc,
        "vertex_order": [1, 2, 3, 4],
        "gram": g,
        "det": float(np.linalg.det(g)),
        "face_determinants": {str(i + 1): d for i, d in enumerate(principal_minor_dets(g))},
        "cofactors": cofactors(g),
        "tolerances": tolerances(),
    }
    report = admissible(cfg)
    out["admissible"] = report.ok
    if report.ok:
        out["prefactor"] = jac_mod.prefactor(cfg)
    return out


def _symmetry_doc(report):
    return {
        "tol": report.tol,
        "ok": report.ok,
        "families": {
            name: {"max_deviation": dev, "passed": report.passed[name]}
            for name, dev in report.deviations.items()
        },
    }


def _jacobian_payload(cfg, args):
    angles = angles_cofactor(cfg)
    analytic = jac_mod.jacobian_analytic(cfg)
    out = {
        "edge_order": list(EDGE_LABELS),
        "prefactor": jac_mod.prefactor(cfg),
        "analytic": labeled_matrix(analytic),
        "symmetry": _symmetry_doc(jac_mod.check_symmetries(analytic, angles, args.tol)),
    }
    tol = {"symmetry_tol": args.tol}
    if args.fd:
        fd = jac_mod.jacobian_fd(cfg, args.h)
        out["fd"] = labeled_matrix(fd)
        out["fd_max_deviation"] = float(np.max(np.abs(analytic - fd)))
        out["fd_symmetry"] = _symmetry_doc(jac_mod.check_symmetries(fd, angles, args.fd_tol))
        tol.update(fd_step=args.h, fd_symmetry_tol=args.fd_tol)
    return out, tol


def cmd_jacobian(doc, args):
    cfg = parse_config(doc)
    require_admissible(cfg)
    payload, tol = _jacobian_payload(cfg, args)
    return {"input": doc, **payload, "tolerances": tolerances(**tol)}


def cmd_symmetries(doc, args):
    cfg = parse_config(doc)
    require_admissible(cfg)
    payload, tol = _jacobian_payload(cfg, args)
    keep = {k: payload[k] for k in ("symmetry", "fd_symmetry") if k in payload}
    return {"input": doc, **keep, "tolerances": tolerances(**tol)}


def cmd_check(doc, args):
    cfg = parse_config(doc)
    report = admissible(cfg)
    out = {"input": doc, "admissible": report.ok, "failures": report.failures}
    if report.ok:
        res = det_identities(cfg)
        out["det_identities"] = {
            "face_relative": {str(i + 1): v for i, v in enumerate(res.face_relative)},
            "link_relative": {str(i + 1): v for i, v in enumerate(res.link_relative)},
            "max_relative": res.max_relative,
        }
    out["tolerances"] = tolerances()
    return out


def cmd_solve(doc, args):
    """Solve for lengths.  Without ``target``, the angles of ``lengths`` are used."""
    if "types" not in doc:
        raise ParseError("solve request needs 'types'")
    types = parse_types(doc["types"])
    generating = None
    if "target" in doc:
        target = parse_edge_object(doc["target"], "target")
        if not np.all(target < math.pi):
            raise ParseError("target angles must lie in (0, pi)")
    elif "lengths" in doc:
        generating = parse_config(doc)
        target = angles_cofactor(generating)
    else:
        raise ParseError("solve request needs 'target' (or 'lengths' to derive one)")
    initial = None
    if doc.get("initial_lengths") is not None:
        initial = parse_edge_object(doc["initial_lengths"], "initial_lengths")
    tol = _finite_number(doc.get("tolerance", 1e-10), "tolerance")
    if not tol > 0:
        raise ParseError("tolerance must be positive")
    max_it = doc.get("max_iterations", 100)
    if isinstance(max_it, bool) or not isinstance(max_it, int) or max_it < 1:
        raise ParseError("max_iterations must be a positive integer")

    result = solve(types, target, initial, tol, max_it)
    out = {
        "input": doc,
        "edge_order": list(EDGE_LABELS),
        "target": edge_vector(target),
        "lengths": edge_vector(result.lengths),
        "residual": result.residual,
        "iterations": result.iterations,
        "rank_deficient": result.rank_deficient,
        "rank": result.rank,
    }
    if generating is not None:
        out["max_length_deviation"] = float(np.max(np.abs(result.lengths - generating.lengths)))
    out["tolerances"] = tolerances(solver_tolerance=tol, rank_rtol=RANK_RTOL)
    return out


COMMANDS = {
    "angles": cmd_angles,
    "gram": cmd_gram,
    "jacobian": cmd_jacobian,
    "check": cmd_check,
    "solve": cmd_solve,
    "symmetries": cmd_symmetries,
}


def _sample_one_document(types, rng):
    return config_document(sample_one(types, rng))


def iter_samples(signatures, count, seed, parallel=False):
    """Yield sample documents; ``parallel`` trades ordering for throughput."""
    jobs = []
    for n, types in enumerate(signatures):
        entropy = seed if len(signatures) == 1 else (seed, n)
        jobs.extend((types, rng) for rng in document_rngs(entropy, count))
    if not parallel:
        for types, rng in jobs:
            yield _sample_one_document(types, rng)
        return
    with ProcessPoolExecutor() as pool:
        futures = [pool.submit(_sample_one_document, types, rng) for types, rng in jobs]
        for fut in as_completed(futures):
            yield fut.result()


def run_sample(args, out):
    if args.count < 1:
        raise ParseError("--count must be at least 1")
    if args.types == "all":
        signatures = list(SIGNATURES)
    else:
        try:
            signatures = [check_types(args.types)]
        except ValueError as exc:
            raise ParseError(f"bad --types {args.types!r}: {exc}") from exc
    for doc in iter_samples(signatures, args.count, args.seed, args.parallel):
        out.write(dump(doc, compact=True) + "\n")


# -- entry point -------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(prog="ghtet", description=__doc__.split("\n")[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--input", default="-", help="JSON document path, or - for stdin")
        if name in ("jacobian", "symmetries"):
            p.add_argument("--fd", action="store_true", help="also compute the finite-difference Jacobian")
            p.add_argument("--h", type=float, default=jac_mod.DEFAULT_STEP, help="finite-difference step")
            p.add_argument("--tol", type=float, default=1e-9, help="symmetry tolerance for the analytic Jacobian")
            p.add_argument("--fd-tol", type=float, default=1e-5, help="symmetry tolerance for the FD Jacobian")
    p = sub.add_parser("sample")
    p.add_argument("--types", default="all", help="comma-separated vertex types, or 'all' for the 15 signatures")
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--parallel", action="store_true")
    return parser


def _error(kind, message, **extra):
    return {"error": {"kind": kind, "message": message, **extra}}


def main(argv=None, stdout=None):
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr)

    code, payload = EXIT_OK, None
    try:
        if args.command == "sample":
            run_sample(args, stdout)
            return EXIT_OK
        payload = COMMANDS[args.command](read_document(args.input), args)
        if args.command == "check" and not payload["admissible"]:
            code = EXIT_INADMISSIBLE
    except ParseError as exc:
        code, payload = EXIT_USAGE, _error("parse", str(exc))
    except InadmissibleError as exc:
        failures = exc.report.failures if exc.report is not None else []
        code, payload = EXIT_INADMISSIBLE, _error("inadmissible", str(exc), failures=failures)
    except SolverError as exc:
        extra = {"best_residual": exc.best_residual, "iterations": exc.iterations}
        if exc.lengths is not None:
            extra["best_lengths"] = edge_vector(exc.lengths)
        code, payload = EXIT_NUMERIC, _error("solver", str(exc), **extra)
    except PerturbationError as exc:
        code, payload = EXIT_NUMERIC, _error("fd_perturbation", str(exc))
    except SamplingError as exc:
        code, payload = EXIT_NUMERIC, _error("sampling", str(exc))
    except (DegenerateError, NonFiniteOutput) as exc:
        code, payload = EXIT_NUMERIC, _error("numeric", str(exc))
    except GeometryError as exc:
        code, payload = EXIT_USAGE, _error("domain", str(exc))
    except ValueError as exc:
        code, payload = EXIT_USAGE, _error("usage", str(exc))

    if "error" in payload:
        print(f"ghtet {args.command}: {payload['error']['message']}", file=sys.stderr)
    try:
        stdout.write(dump(payload) + "\n")
    except NonFiniteOutput as exc:
        stdout.write(dump(_error("numeric", str(exc))) + "\n")
        code = EXIT_NUMERIC
    return code


def main_exit():
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
