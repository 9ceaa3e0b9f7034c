"""Command line interface.

Subcommands: eval, audit, convergence, serve.  All computation runs
in-process by default; --server URL routes the same request through a
running HTTP service instead, producing identical bytes.

Exit codes: 0 success, 1 audit found a failing identity, 2 usage or
lookup errors (including an unsupported WP_PRODUCTS_PRECISION), 3 domain
errors, 4 a sampling grid that lost every variant.
"""

from __future__ import annotations

import argparse
import json
import sys

from .audit import EmptyGridError
from .core import (
    DomainError,
    PRECISION_ENV,
    TruncationPolicy,
    UnsupportedPrecisionError,
    active_backend,
    format_value,
    parse_complex,
)
from .registry import XI_PATTERN_HELP, list_functions, resolve
from .service import handlers


def _complex_arg(text: str) -> complex:
    try:
        return parse_complex(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wpaudit",
        description="Evaluate lattice functions and audit the identity catalog.",
    )
    sub = parser.add_subparsers(dest="command")

    names = ", ".join(list_functions())
    p_eval = sub.add_parser("eval", help="evaluate one named function")
    p_eval.add_argument("name", help=f"one of: {names}; or {XI_PATTERN_HELP}")
    p_eval.add_argument("--tau", type=_complex_arg, required=True, help="lattice parameter, Im > 0")
    p_eval.add_argument("--z", type=_complex_arg, default=None,
                        help="argument (for theta functions this is the theta argument v)")
    p_eval.add_argument("--eps", type=float, default=1e-12)
    p_eval.add_argument("--guard", type=int, default=10)
    p_eval.add_argument("--k-max", type=int, default=4096, dest="k_max")
    p_eval.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p_eval.add_argument("--server", default=None, help="route through a running service URL")
    p_eval.set_defaults(handler=_cmd_eval)

    p_audit = sub.add_parser("audit", help="sample-audit the identity catalog")
    p_audit.add_argument("--ids", nargs="+", default=["*"],
                         help="glob patterns of identity ids (default: all)")
    p_audit.add_argument("--seed", type=int, default=0)
    p_audit.add_argument("--samples", type=int, default=50)
    p_audit.add_argument("--eps", type=float, default=1e-12)
    p_audit.add_argument("--n-list", dest="n_list", type=int, nargs="+",
                         default=[3, 5],
                         help="division orders for the n-transform families")
    p_audit.add_argument("--format", choices=("csv", "json"), default="csv")
    p_audit.add_argument("--out", default=None, help="write the report to a file")
    p_audit.add_argument("--server", default=None)
    p_audit.set_defaults(handler=_cmd_audit)

    p_conv = sub.add_parser("convergence", help="value against fixed truncation order")
    p_conv.add_argument("name")
    p_conv.add_argument("--tau", type=_complex_arg, required=True)
    p_conv.add_argument("--z", type=_complex_arg, default=None)
    p_conv.add_argument("--k-max", type=int, default=40, dest="k_max")
    p_conv.add_argument("--eps", type=float, default=1e-12)
    p_conv.add_argument("--server", default=None)
    p_conv.set_defaults(handler=_cmd_convergence)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.set_defaults(handler=_cmd_serve)

    return parser


def _cobj(w: complex | None):
    if w is None:
        return None
    return {"im": w.imag, "re": w.real}


def _eval_output(args, value: complex, terms: int) -> str:
    if args.format == "json":
        payload = {
            "name": args.name,
            "tau": _cobj(args.tau),
            "terms": terms,
            "value": _cobj(value),
            "z": _cobj(args.z),
        }
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if args.format == "csv":
        return (
            "name,value_re,value_im,terms\n"
            f"{args.name},{value.real:.17g},{value.imag:.17g},{terms}\n"
        )
    return f"{format_value(value)}\nterms: {terms}\n"


def _post(server: str, path: str, payload: dict):
    import httpx

    resp = httpx.post(server.rstrip("/") + path, json=payload, timeout=60.0)
    return resp


def _cmd_eval(args) -> int:
    # resolve locally even when remoting so usage errors stay exit 2
    spec = resolve(args.name)
    if spec.needs_z and args.z is None:
        raise ValueError(f"{args.name} requires --z")
    if args.server:
        resp = _post(args.server, "/eval", {
            "name": args.name,
            "tau": _cobj(args.tau),
            "z": _cobj(args.z),
            "eps": args.eps,
            "guard": args.guard,
            "k_max": args.k_max,
        })
        if resp.status_code == 400:
            raise DomainError(resp.json().get("detail", "domain error"))
        resp.raise_for_status()
        body = resp.json()
        value = complex(body["value"]["re"], body["value"]["im"])
        terms = body["terms"]
    else:
        policy = TruncationPolicy(eps=args.eps, guard=args.guard, k_max=args.k_max)
        value, terms = handlers.evaluate(args.name, args.z, args.tau, policy)
    sys.stdout.write(_eval_output(args, value, terms))
    return 0


def _cmd_audit(args) -> int:
    if args.server:
        resp = _post(args.server, "/audit", {
            "ids": list(args.ids),
            "seed": args.seed,
            "n_samples": args.samples,
            "eps": args.eps,
            "n_list": list(args.n_list),
        })
        if resp.status_code == 404:
            raise handlers.NoMatchError(resp.json().get("detail", "no identities matched"))
        if resp.status_code == 422:
            raise EmptyGridError(resp.json().get("detail", "empty grid"))
        resp.raise_for_status()
        body = resp.json()
        any_fail = body["any_fail"]
        if args.format == "csv":
            text = body["csv"]
        else:
            text = json.dumps(body["report"], sort_keys=True, indent=2) + "\n"
    else:
        csv_text, json_text, any_fail = handlers.audit_payload(
            args.ids, args.seed, args.samples, args.eps, n_list=args.n_list
        )
        text = csv_text if args.format == "csv" else json_text
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 1 if any_fail else 0


def _cmd_convergence(args) -> int:
    spec = resolve(args.name)
    if spec.needs_z and args.z is None:
        raise ValueError(f"{args.name} requires --z")
    if args.server:
        resp = _post(args.server, "/convergence", {
            "name": args.name,
            "tau": _cobj(args.tau),
            "z": _cobj(args.z),
            "k_max": args.k_max,
            "eps": args.eps,
        })
        if resp.status_code == 400:
            raise DomainError(resp.json().get("detail", "domain error"))
        resp.raise_for_status()
        rows = [
            (row["k"], complex(row["value"]["re"], row["value"]["im"]), row["abs_delta"])
            for row in resp.json()["rows"]
        ]
    else:
        rows = handlers.convergence_rows(args.name, args.z, args.tau, args.k_max, args.eps)
    lines = ["K,value_re,value_im,abs_delta"]
    for k, v, d in rows:
        lines.append(f"{k},{v.real:.17g},{v.imag:.17g},{d:.12e}")
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return 0


def main(argv=None) -> int:
    try:
        active_backend()
    except UnsupportedPrecisionError as exc:
        print(f"error: {PRECISION_ENV}: {exc}", file=sys.stderr)
        return 2
    parser = _build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "handler"):
        parser.print_help(sys.stderr)
        return 2
    try:
        return args.handler(args)
    except handlers.NoMatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except EmptyGridError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
