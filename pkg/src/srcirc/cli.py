"""Command-line client for the service layer.

Every subcommand builds the same request model the HTTP endpoint uses,
calls the shared handler in-process, and prints the response as JSON.
Exit codes: 0 pass (simple-on-circle or certified on-circle), 1 fail,
2 degenerate/inconclusive, 3 input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import List, Optional

from .api import handlers, schemas
from .canonical import NotConstructible, ReconstructionError, SingularStepError
from .embedding import InputError
from .exact.matrix import DimensionError
from .oracle import OracleFailure
from .recursion import RecursionBreakdown

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_DEGENERATE = 2
EXIT_INPUT = 3


def _parse_coeff_list(text: str) -> List[str]:
    items = [part.strip() for part in text.split(",")]
    if not items or any(not part for part in items):
        raise InputError(f"malformed coefficient list: {text!r}")
    return items


def _parse_complex(text: str) -> tuple:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) == 1:
        return (float(parts[0]), 0.0)
    if len(parts) == 2:
        return (float(parts[0]), float(parts[1]))
    raise InputError(f"malformed complex number: {text!r} (want 're' or 're,im')")


def _load_batch(path: str) -> List[List[str]]:
    """Polynomials from a file: JSON {"g":., "c":[..]} (or a list of such),
    or CSV with one comma-separated polynomial per line."""
    raw = Path(path).read_text()
    stripped = raw.lstrip()
    if stripped.startswith("{") or stripped.startswith("["):
        data = json.loads(raw)
        if isinstance(data, dict):
            data = [data]
        out = []
        for item in data:
            coeffs = [str(x) for x in item["c"]]
            if "g" in item and int(item["g"]) != len(coeffs) - 1:
                raise InputError(f"inconsistent g={item['g']} for {len(coeffs)} coefficients")
            out.append(coeffs)
        return out
    out = []
    for line in raw.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            out.append(_parse_coeff_list(line))
    return out


def _dump(model) -> dict:
    return model.model_dump(mode="json", exclude_none=True)


def _run_item(command: str, coeffs: List[str], opts: dict) -> dict:
    """One polynomial through one subcommand; returns {payload, exit_code}."""
    try:
        if command == "check":
            resp = handlers.check(schemas.CheckRequest(
                coeffs=coeffs,
                log_q=opts["log_q"],
                grid=opts.get("grid"),
                certify=opts.get("certify", False),
                oracle=not opts.get("no_oracle", False),
            ))
            return {"payload": _dump(resp), "exit_code": resp.exit_code}
        if command == "delta":
            resp = handlers.delta(schemas.DeltaRequest(coeffs=coeffs, log_q=opts["log_q"], t=opts.get("t")))
            return {"payload": _dump(resp), "exit_code": EXIT_PASS}
        if command == "hamiltonian":
            resp = handlers.hamiltonian_handler(
                schemas.HamiltonianRequest(coeffs=coeffs, log_q=opts["log_q"]))
            return {"payload": _dump(resp), "exit_code": EXIT_PASS}
        if command == "eval":
            resp = handlers.eval_handler(schemas.EvalRequest(
                coeffs=coeffs, log_q=opts["log_q"], z=opts.get("z"),
                z_grid=opts.get("z_grid"), interval=opts.get("interval", 1),
                fraction=opts.get("fraction", 0.0)))
            return {"payload": _dump(resp), "exit_code": EXIT_PASS}
        if command == "oracle":
            resp = handlers.oracle_handler(schemas.OracleRequest(coeffs=coeffs))
            return {"payload": _dump(resp), "exit_code": EXIT_PASS}
        if command == "certify":
            resp = handlers.certify_handler(
                schemas.CertifyRequest(coeffs=coeffs, grid=opts.get("grid")))
            return {"payload": _dump(resp), "exit_code": resp.exit_code}
        raise InputError(f"unknown command {command}")
    except (NotConstructible, SingularStepError, ReconstructionError,
            RecursionBreakdown, OracleFailure) as exc:
        return {"payload": {"error": str(exc)}, "exit_code": EXIT_DEGENERATE}
    except (InputError, DimensionError, ValueError) as exc:
        return {"payload": {"error": str(exc)}, "exit_code": EXIT_INPUT}


def _emit(payload, json_path: Optional[str]) -> None:
    text = json.dumps(payload, indent=2)
    print(text)
    if json_path:
        Path(json_path).write_text(text + "\n")


def _default_workers() -> int:
    return int(os.environ.get("SRCIRC_WORKERS", "1"))


def _run_poly_command(args, command: str, opts: dict) -> int:
    if (args.coeffs is None) == (args.file is None):
        _emit({"error": "provide exactly one polynomial source: --coeffs or --file"}, args.json)
        return EXIT_INPUT
    if args.coeffs is not None:
        try:
            coeffs = _parse_coeff_list(args.coeffs)
        except InputError as exc:
            _emit({"error": str(exc)}, args.json)
            return EXIT_INPUT
        result = _run_item(command, coeffs, opts)
        _emit(result["payload"], args.json)
        return result["exit_code"]
    try:
        batch = _load_batch(args.file)
    except (InputError, OSError, json.JSONDecodeError, KeyError) as exc:
        _emit({"error": f"cannot read batch file: {exc}"}, args.json)
        return EXIT_INPUT
    workers = args.workers or _default_workers()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_pool_entry, [(command, coeffs, opts) for coeffs in batch]))
    else:
        results = [_run_item(command, coeffs, opts) for coeffs in batch]
    _emit([r["payload"] for r in results], args.json)
    return max((r["exit_code"] for r in results), default=EXIT_PASS)


def _pool_entry(triple) -> dict:
    command, coeffs, opts = triple
    return _run_item(command, coeffs, opts)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="srcirc",
        description="Exact unit-circle root location for self-reciprocal polynomials",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_grid=False):
        p.add_argument("--coeffs", help="comma-separated c_0,...,c_g (rationals like 3/4 allowed)")
        p.add_argument("--file", help="batch input: JSON {'g':int,'c':[...]} or CSV lines")
        p.add_argument("--log-q", default="2", dest="log_q", help="rational log-scale surrogate (default 2)")
        if with_grid:
            p.add_argument("--grid", help="comma-separated rational sample points t > 1")
        p.add_argument("--json", help="also write the JSON output to this path")
        p.add_argument("--workers", type=int, default=None,
                       help="batch worker processes (default: SRCIRC_WORKERS or 1)")

    p_check = sub.add_parser("check", help="simple-roots verdict, oracle cross-check, optional certificate")
    add_common(p_check, with_grid=True)
    p_check.add_argument("--certify", action="store_true", help="attach an exact on-circle certificate")
    p_check.add_argument("--no-oracle", action="store_true", help="skip the numeric oracle")

    p_delta = sub.add_parser("delta", help="determinant report delta_1..delta_2g")
    add_common(p_delta)
    p_delta.add_argument("--t", help="shift sample t > 1 (omit for the simple route)")

    p_ham = sub.add_parser("hamiltonian", help="step Hamiltonian gamma_1..gamma_2g")
    add_common(p_ham)

    p_eval = sub.add_parser("eval", help="evaluate (A, B) and the diagonal kernel")
    add_common(p_eval)
    p_eval.add_argument("--z", help="complex point 're' or 're,im'")
    p_eval.add_argument("--z-grid", dest="z_grid", help="semicolon-separated complex points")
    p_eval.add_argument("--interval", type=int, default=1, help="interval index n (default 1)")
    p_eval.add_argument("--fraction", type=float, default=0.0, help="fraction s in [0,1) (default 0)")

    p_rec = sub.add_parser("reconstruct", help="rebuild the polynomial from step values")
    p_rec.add_argument("--gamma", required=True, help="comma-separated gamma_1,...,gamma_2g")
    p_rec.add_argument("--p1", required=True, help="value of the polynomial at x=1")
    p_rec.add_argument("--json", help="also write the JSON output to this path")

    p_or = sub.add_parser("oracle", help="numeric root report and determinant chain")
    add_common(p_or)

    p_cert = sub.add_parser("certify", help="exact certificate for all roots on the circle")
    add_common(p_cert, with_grid=True)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cmd = args.command
    if cmd == "serve":
        import uvicorn

        from .api.app import app

        uvicorn.run(app, host=args.host, port=args.port)
        return EXIT_PASS
    if cmd == "reconstruct":
        try:
            gammas = _parse_coeff_list(args.gamma)
            resp = handlers.reconstruct(schemas.ReconstructRequest(gammas=gammas, p_one=args.p1))
        except (InputError, ValueError) as exc:
            _emit({"error": str(exc)}, args.json)
            return EXIT_INPUT
        except (SingularStepError, ReconstructionError) as exc:
            _emit({"error": str(exc)}, args.json)
            return EXIT_DEGENERATE
        _emit(_dump(resp), args.json)
        return EXIT_PASS

    opts: dict = {"log_q": args.log_q}
    if cmd in ("check", "certify") and getattr(args, "grid", None) is not None:
        opts["grid"] = _parse_coeff_list(args.grid)
    if cmd == "check":
        opts["certify"] = args.certify
        opts["no_oracle"] = args.no_oracle
    if cmd == "delta":
        opts["t"] = args.t
    if cmd == "eval":
        try:
            if args.z is not None:
                opts["z"] = _parse_complex(args.z)
            if args.z_grid is not None:
                opts["z_grid"] = [_parse_complex(p) for p in args.z_grid.split(";") if p.strip()]
        except (InputError, ValueError) as exc:
            _emit({"error": str(exc)}, args.json)
            return EXIT_INPUT
        opts["interval"] = args.interval
        opts["fraction"] = args.fraction
    return _run_poly_command(args, cmd, opts)


if __name__ == "__main__":
    sys.exit(main())
