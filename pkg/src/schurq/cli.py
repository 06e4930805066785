"""Command-line client for the calculator service.

The CLI never computes anything itself: it builds a request, sends it to
the HTTP service and renders the response.  By default the service app
is driven in-process through an ASGI transport, so no server needs to be
running; pass --server URL to talk to a remote instance instead, or use
the `serve` subcommand to start one.

Exit codes: 0 all checks passed / value printed, 1 verification failure
or transport error, 2 usage error.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys
from typing import Any

import httpx

from .compositions import parse_composition

USAGE_ERROR = 2


class ClientError(Exception):
    """Transport or server-side failure; carries the exit code."""

    def __init__(self, message: str, exit_code: int = 1):
        super().__init__(message)
        self.exit_code = exit_code


async def _asgi_request(method: str, path: str, payload: dict | None) -> httpx.Response:
    from .service.app import app

    transport = httpx.ASGITransport(app=app)
    async with httpx.AsyncClient(transport=transport, base_url="http://schurq.local") as client:
        return await client.request(method, path, json=payload)


def _request(server: str | None, method: str, path: str, payload: dict | None = None) -> Any:
    try:
        if server:
            with httpx.Client(base_url=server, timeout=3600.0) as client:
                response = client.request(method, path, json=payload)
        else:
            response = asyncio.run(_asgi_request(method, path, payload))
    except httpx.HTTPError as exc:
        raise ClientError(f"transport error: {exc}") from exc
    if response.status_code == 400 or response.status_code == 422:
        raise ClientError(f"request rejected: {response.text}", exit_code=USAGE_ERROR)
    if response.status_code != 200:
        raise ClientError(f"server error {response.status_code}: {response.text}")
    return response.json()


def _parse_range(text: str) -> tuple[int, int]:
    """Accept 'A..B' or a single integer."""
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
    else:
        lo = hi = int(text)
    if lo > hi:
        raise ValueError(f"empty range {text!r}")
    return lo, hi


def _print_poly(data: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps({"terms": data["poly"]["terms"]}))
    else:
        print(data["poly"]["text"])


def cmd_compute(args: argparse.Namespace) -> int:
    lam = parse_composition(args.composition)
    data = _request(
        args.server,
        "POST",
        "/compute",
        {"composition": list(lam), "normalize": args.normalize},
    )
    _print_poly(data, args.json)
    return 0


def cmd_skew(args: argparse.Namespace) -> int:
    lam = parse_composition(args.lam)
    mu = parse_composition(args.mu)
    data = _request(
        args.server,
        "POST",
        "/skew",
        {"lam": list(lam), "mu": list(mu), "normalize": args.normalize},
    )
    _print_poly(data, args.json)
    return 0


def cmd_decompose(args: argparse.Namespace) -> int:
    lam = parse_composition(args.lam)
    data = _request(args.server, "POST", "/decompose", {"lam": list(lam), "k": args.k})
    if args.json:
        print(json.dumps(data))
    else:
        rows = data["rows"]
        print("r-row: " + ", ".join(row["recursive"]["text"] for row in rows))
        print("counts: " + ",".join(str(row["decompositions"]) for row in rows))
        print(f"removed-part expansion: {data['expansion']['text']}")
        print(f"direct Pfaffian:        {data['direct']['text']}")
        ok = data["equal"] and all(row["equal"] for row in rows)
        print(f"equal: {'yes' if ok else 'NO'}")
        return 0 if ok else 1
    return 0


def _verify_one(args: argparse.Namespace, identity: str) -> tuple[int, int]:
    payload = {
        "identity": identity,
        "mode": args.mode,
        "max_len": args.max_len,
        "max_part": args.max_part,
        "p_lo": args.p[0],
        "p_hi": args.p[1],
        "n_lo": args.n[0],
        "n_hi": args.n[1],
        "trials": args.trials,
        "seed": args.seed,
        "size": args.size,
    }
    data = _request(args.server, "POST", "/verify", payload)
    for report in data["reports"]:
        if args.json:
            print(json.dumps(report))
        elif not report["equal"]:
            print(
                f"FAIL {report['identity']} [{report['mode']}] "
                f"{json.dumps(report['params'])}: {report['lhs']} != {report['rhs']}"
            )
    marker = "ok  " if data["all_equal"] else "FAIL"
    print(
        f"{marker} {identity}: {data['total'] - data['failed']}/{data['total']} "
        f"checks passed (mode {args.mode})",
        file=sys.stderr if args.json else sys.stdout,
    )
    return data["total"], data["failed"]


def cmd_verify(args: argparse.Namespace) -> int:
    if args.identity == "all":
        names = [entry["name"] for entry in _request(args.server, "GET", "/catalog")]
    else:
        names = [args.identity]
    total = failed = 0
    for name in names:
        n, f = _verify_one(args, name)
        total += n
        failed += f
    if len(names) > 1:
        print(f"total: {total - failed}/{total} checks passed", file=sys.stderr if args.json else sys.stdout)
    return 0 if failed == 0 else 1


def cmd_catalog(args: argparse.Namespace) -> int:
    entries = _request(args.server, "GET", "/catalog")
    if args.json:
        print(json.dumps(entries))
    else:
        width = max(len(e["name"]) for e in entries)
        for e in entries:
            print(f"{e['name']:<{width}}  [{e['level']:9s}]  {e['description']}")
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--server", default=None, help="base URL of a running service; default runs in-process")
    parser.add_argument("--json", action="store_true", help="emit machine-readable JSON")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schurq",
        description="Exact Q-function calculator and identity verifier.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="print Q of a composition, e.g. [5,3,-2]")
    p.add_argument("composition", help="composition, e.g. [2,1] or []")
    p.add_argument("--normalize", action="store_true", help="reduce to the odd-generator normal form")
    _add_common(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("skew", help="print the skew function of two compositions")
    p.add_argument("lam", help="outer composition, e.g. [2,1]")
    p.add_argument("mu", help="inner composition, e.g. [1]")
    p.add_argument("--normalize", action="store_true", help="reduce to the odd-generator normal form")
    _add_common(p)
    p.set_defaults(func=cmd_skew)

    p = sub.add_parser("decompose", help="connection coefficients for removing one part")
    p.add_argument("lam", help="partition, e.g. [3,2,1]")
    p.add_argument("k", type=int, help="1-based position of the part to remove")
    _add_common(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="run one identity suite (or 'all') over a parameter grid")
    p.add_argument("identity", help="catalog name, e.g. vertex, or 'all'")
    p.add_argument("--mode", default="all", choices=("free", "gamma", "oracle", "all"))
    p.add_argument("--max-len", type=int, default=4, dest="max_len")
    p.add_argument("--max-part", type=int, default=6, dest="max_part")
    p.add_argument("--p", type=_parse_range, default=(-4, 5), help="range A..B for the prepended part")
    p.add_argument("--n", type=_parse_range, default=(-3, 6), help="range A..B for the sum degree")
    p.add_argument("--trials", type=int, default=5, help="random instances / oracle points per check")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--size", type=int, default=None, help="fix the matrix size for pf-det")
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("catalog", help="list the identity suites")
    _add_common(p)
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def _join_range_flags(argv: list[str]) -> list[str]:
    # argparse refuses option values that start with '-' unless they are
    # attached; '--p -4..5' becomes '--p=-4..5'.
    out: list[str] = []
    i = 0
    while i < len(argv):
        if argv[i] in ("--p", "--n") and i + 1 < len(argv):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_join_range_flags(list(argv)))
    try:
        return args.func(args)
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except ClientError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
