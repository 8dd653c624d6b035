"""Command-line front end with stable JSON I/O.

Verbs: algebra-generate, algebra-dim, algebra-covering, algebra-classify,
incidence-build, incidence-pair, problem-solve, verify.

All output is JSON with rationals as canonical strings; fixed inputs and
--seed produce byte-identical files.  Exit codes: 0 success, 1 certificate
verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .algebra import (Algebra, algebra_from_json, algebra_to_json,
                      covering_matrix, generate, nonneg_covering_exists)
from .constructions import (classify_positive_generation, semicommuting_pair,
                            solve_all_dimensions)
from .incidence import (incidence_of_dimension, pattern_from_json,
                        pattern_to_json)
from .matrices import mat_from_json, mat_to_json
from .verify import verify_document

DEFAULT_MAX_DIM = 16


class UsageError(Exception):
    pass


def _max_dim() -> int:
    raw = os.environ.get("ALGFORGE_MAX_DIM")
    if raw is None:
        return DEFAULT_MAX_DIM
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"ALGFORGE_MAX_DIM is not an integer: {raw!r}")


def _check_dim(n: int) -> None:
    cap = _max_dim()
    if n > cap:
        raise UsageError(f"matrix size {n} exceeds the cap {cap}"
                         " (set ALGFORGE_MAX_DIM to raise it)")
    if n < 0:
        raise UsageError("matrix size must be nonnegative")


def _dump(obj, out: str | None) -> None:
    text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_json(path: str | None):
    try:
        if path and path != "-":
            with open(path) as fh:
                return json.load(fh)
        return json.load(sys.stdin)
    except json.JSONDecodeError as exc:
        raise UsageError(
            f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}")
    except OSError as exc:
        raise UsageError(str(exc))


def _load_algebra_like(doc) -> Algebra:
    """Accept either an algebra document or a generator-set document."""
    if not isinstance(doc, dict):
        raise UsageError("expected a JSON object")
    if "basis" in doc:
        try:
            alg = algebra_from_json(doc)
        except ValueError as exc:
            raise UsageError(f"invalid algebra document: {exc}")
        _check_dim(alg.n)
        return alg
    if "gens" in doc:
        n = doc.get("n")
        if not isinstance(n, int):
            raise UsageError("generator document needs an integer 'n'")
        _check_dim(n)
        try:
            gens = [mat_from_json(m) for m in doc["gens"]]
            return generate(n, gens)
        except ValueError as exc:
            raise UsageError(f"invalid generator document: {exc}")
    raise UsageError("expected an object with 'basis' or 'gens'")


def report(cert_docs: list[dict]) -> str:
    """Human-readable table: one row (k, dim, verified) per certificate,
    plus a totals line."""
    lines = ["   k  dim  verified"]
    good = 0
    for doc in cert_docs:
        dim_value = None
        for p in doc.get("properties", []):
            if p.get("kind") == "dimension":
                dim_value = p.get("value")
        ok = not verify_document(doc)
        good += ok
        shown = "-" if dim_value is None else str(dim_value)
        mark = "ok" if ok else "FAIL"
        lines.append(f"{shown:>4} {shown:>4}  {mark}")
    lines.append(f"total: {good}/{len(cert_docs)} verified")
    return "\n".join(lines) + "\n"


def _cmd_algebra_generate(args) -> int:
    alg = _load_algebra_like(_load_json(args.input))
    _dump(algebra_to_json(alg), args.out)
    return 0


def _cmd_algebra_dim(args) -> int:
    alg = _load_algebra_like(_load_json(args.input))
    _dump({"n": alg.n, "dim": alg.dim}, args.out)
    return 0


def _cmd_algebra_covering(args) -> int:
    alg = _load_algebra_like(_load_json(args.input))
    cov = covering_matrix(alg)
    nn = nonneg_covering_exists(alg)
    _dump({"covering": mat_to_json(cov),
           "nonneg_covering": mat_to_json(nn) if nn is not None else None},
          args.out)
    return 0


def _cmd_algebra_classify(args) -> int:
    alg = _load_algebra_like(_load_json(args.input))
    cert = classify_positive_generation(alg, budget=args.budget, seed=args.seed)
    if cert is None:
        _dump({"result": "unknown", "certificate": None}, args.out)
    else:
        doc = cert.to_json()
        failures = verify_document(doc)
        if failures:
            sys.stderr.write(f"certificate failed verification: {failures[0]}\n")
            return 1
        _dump({"result": "yes", "certificate": doc}, args.out)
    return 0


def _cmd_incidence_build(args) -> int:
    _check_dim(args.n)
    try:
        pattern = incidence_of_dimension(args.n, args.k)
    except ValueError as exc:
        raise UsageError(str(exc))
    _dump(pattern_to_json(pattern), args.out)
    return 0


def _cmd_incidence_pair(args) -> int:
    doc = _load_json(args.input)
    try:
        pattern = pattern_from_json(doc)
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"invalid pattern document: {exc}")
    _check_dim(pattern.n)
    _, _, cert = semicommuting_pair(pattern)
    cert_doc = cert.to_json()
    failures = verify_document(cert_doc)
    if failures:
        sys.stderr.write(f"certificate failed verification: {failures[0]}\n")
        return 1
    _dump(cert_doc, args.out)
    return 0


def _cmd_problem_solve(args) -> int:
    _check_dim(args.n)
    try:
        certs = solve_all_dimensions(args.n)
    except ValueError as exc:
        raise UsageError(str(exc))
    docs = [c.to_json() for c in certs]
    for doc in docs:
        failures = verify_document(doc)
        if failures:
            sys.stderr.write(f"certificate failed verification: {failures[0]}\n")
            return 1
    if args.format == "table":
        text = report(docs)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    else:
        _dump({"n": args.n, "certificates": docs}, args.out)
    return 0


def _cmd_verify(args) -> int:
    doc = _load_json(args.input)
    if isinstance(doc, dict) and "certificates" in doc:
        docs = doc["certificates"]
    elif isinstance(doc, dict) and "certificate" in doc and doc["certificate"]:
        docs = [doc["certificate"]]
    elif isinstance(doc, list):
        docs = doc
    else:
        docs = [doc]
    all_failures: list[str] = []
    for i, cert_doc in enumerate(docs):
        for failure in verify_document(cert_doc):
            all_failures.append(f"certificate {i}: {failure}")
    if all_failures:
        sys.stderr.write(all_failures[0] + "\n")
        return 1
    _dump({"verified": len(docs)}, args.out)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="algforge",
        description="exact rational matrix-algebra computations with"
                    " machine-verifiable certificates")
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_io(p, with_input=True):
        if with_input:
            p.add_argument("input", nargs="?", default=None,
                           help="input JSON file (default: stdin)")
        p.add_argument("--out", default=None, help="output file (default: stdout)")

    p = sub.add_parser("algebra-generate", help="close generators into an algebra")
    add_io(p)
    p.set_defaults(func=_cmd_algebra_generate)

    p = sub.add_parser("algebra-dim", help="dimension of an algebra")
    add_io(p)
    p.set_defaults(func=_cmd_algebra_dim)

    p = sub.add_parser("algebra-covering",
                       help="covering matrix and nonnegative covering if any")
    add_io(p)
    p.set_defaults(func=_cmd_algebra_covering)

    p = sub.add_parser("algebra-classify",
                       help="search for a positive generating system up to"
                            " similarity")
    add_io(p)
    p.add_argument("--budget", type=int, default=64,
                   help="random combinations to try (default 64)")
    p.add_argument("--seed", type=int, default=0, help="search seed (default 0)")
    p.set_defaults(func=_cmd_algebra_classify)

    p = sub.add_parser("incidence-build",
                       help="staircase incidence pattern of a given dimension")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    add_io(p, with_input=False)
    p.set_defaults(func=_cmd_incidence_build)

    p = sub.add_parser("incidence-pair",
                       help="nonnegative semi-commuting pair generating an"
                            " incidence algebra")
    add_io(p)
    p.set_defaults(func=_cmd_incidence_pair)

    p = sub.add_parser("problem-solve",
                       help="semi-commuting nonnegative pairs for every"
                            " realizable dimension")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--format", choices=["json", "table"], default="json")
    p.add_argument("--seed", type=int, default=0,
                   help="accepted for interface stability; the table is"
                        " deterministic")
    add_io(p, with_input=False)
    p.set_defaults(func=_cmd_problem_solve)

    p = sub.add_parser("verify", help="re-check a certificate document")
    add_io(p)
    p.set_defaults(func=_cmd_verify)

    return parser


def run(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
