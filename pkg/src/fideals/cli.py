"""Command-line client for the service.

By default the FastAPI app is mounted in-process, so no server needs to
run; --server points at a remote instance instead.  Exit codes: 0 the
verdict is yes (or the operation succeeded), 3 the verdict is no, 2 bad
input, 4 search budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from random import Random
from typing import Any, Iterator

import httpx

EXIT_OK = 0
EXIT_NO = 3
EXIT_INPUT = 2
EXIT_BUDGET = 4


class ServiceClient:
    """POSTs to either the in-process app or a remote server."""

    def __init__(self, server: str | None = None):
        if server is None:
            import warnings

            with warnings.catch_warnings():
                # the bundled test client import warns about its own httpx use
                warnings.simplefilter("ignore")
                from fastapi.testclient import TestClient

            from .service import app

            self._client: Any = TestClient(app)
        else:
            self._client = httpx.Client(base_url=server, timeout=None)

    def post(self, path: str, payload: dict) -> httpx.Response:
        return self._client.post(path, json=payload)

    def stream(self, path: str, payload: dict):
        return self._client.stream("POST", path, json=payload)

    def close(self) -> None:
        self._client.close()


def _fail(resp: httpx.Response) -> int:
    """Print the error channel and translate the error kind to an exit code."""
    kind, message = "internal", resp.text
    try:
        body = resp.json()
    except ValueError:
        body = {}
    if "error" in body:
        kind = body["error"].get("kind", "internal")
        message = body["error"].get("message", message)
    elif "detail" in body:
        kind = "input"
        message = json.dumps(body["detail"])
    print(f"error: {message}", file=sys.stderr)
    if kind == "budget":
        print("no results were produced", file=sys.stderr)
        return EXIT_BUDGET
    return EXIT_INPUT if kind == "input" else 1


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


def _render_check_human(body: dict) -> str:
    lines = [
        f"n: {body['n']}",
        f"generators: {body['generators']}",
        f"f-ideal: {_yesno(body['is_f_ideal'])}",
        "routes: " + ", ".join(f"{k}={_yesno(v)}" for k, v in body["routes"].items()),
        f"f-vector facet complex: ({', '.join(map(str, body['f_facet']))})",
        f"f-vector non-face complex: ({', '.join(map(str, body['f_nonface']))})",
    ]
    if body.get("failure_detail"):
        lines.append(f"failure: {body['failure_detail']}")
    cls = body.get("classification")
    if cls:
        if cls["kind"] == "type_l":
            parts = cls.get("witness")
            detail = f"type_l (l={cls['l']})"
            if parts:
                detail += (
                    f", parts {{{','.join(map(str, parts[0]))}}}"
                    f" | {{{','.join(map(str, parts[1]))}}}"
                )
            lines.append(f"type: {detail}")
        else:
            lines.append(f"type: {cls['kind']}")
    report = body["unmixedness"]
    lines.append(f"unmixed: {_yesno(report['unmixed'])}")
    lines.append(f"codim: {report['codim']}")
    lines.append(
        "minimal primes: "
        + "; ".join(".".join(map(str, prime)) for prime in report["minimal_primes"])
    )
    return "\n".join(lines)


def cmd_check(client: ServiceClient, args: argparse.Namespace) -> int:
    sources = [args.gens is not None, args.file is not None, args.random is not None]
    if sum(sources) != 1:
        print("error: provide exactly one of --gens, --file, --random", file=sys.stderr)
        return EXIT_INPUT
    inputs: list[tuple[str, str]] = []
    if args.gens is not None:
        inputs = [("", args.gens)]
    elif args.file is not None:
        for number, line in enumerate(Path(args.file).read_text().splitlines(), start=1):
            if line.strip():
                inputs.append((f"line {number}: ", line))
    else:
        rng = Random(args.seed)
        for index in range(args.random):
            ideal = _random_ideal(rng, args.n)
            inputs.append((f"sample {index}: ", ideal))
    all_yes = True
    blocks = []
    for label, gens in inputs:
        resp = client.post(
            "/check",
            {"n": args.n, "generators": gens, "max_scan_bits": args.max_scan_bits},
        )
        if resp.status_code != 200:
            sys.stderr.write(label)
            return _fail(resp)
        body = resp.json()
        all_yes = all_yes and body["is_f_ideal"]
        if args.format == "human":
            blocks.append(_render_check_human(body))
        elif args.format == "json":
            blocks.append(json.dumps(body, indent=2))
        else:
            print(json.dumps(body))
    if args.format in ("human", "json"):
        print("\n\n".join(blocks))
    return EXIT_OK if all_yes else EXIT_NO


def _random_ideal(rng: Random, n: int) -> str:
    from .engine import random_square_free_ideal

    return random_square_free_ideal(rng, n).generators.text()


def cmd_enumerate(client: ServiceClient, args: argparse.Namespace) -> int:
    payload = {
        "n": args.n,
        "d": args.d,
        "max_candidates": args.max_candidates,
        "workers": args.workers,
    }
    total = 0
    with client.stream("/enumerate", payload) as resp:
        if resp.status_code != 200:
            resp.read()
            return _fail(resp)
        for line in resp.iter_lines():
            if not line:
                continue
            total += 1
            if args.format == "ndjson":
                print(line)
            elif args.format == "tsv":
                row = json.loads(line)
                kind = row.get("type") or ""
                l = row.get("l")
                print(f"{row['index']}\t{row['generators']}\t{kind}\t{'' if l is None else l}")
    if args.format == "count":
        print(total)
    return EXIT_OK


def cmd_count(client: ServiceClient, args: argparse.Namespace) -> int:
    method = args.method
    if method is None:
        method = "brute" if args.mode == "perfect-number" else "formula"
    resp = client.post(
        "/count",
        {
            "n": args.n,
            "d": args.d,
            "mode": args.mode,
            "method": method,
            "max_candidates": args.max_candidates,
            "workers": args.workers,
        },
    )
    if resp.status_code != 200:
        return _fail(resp)
    body = resp.json()
    if args.format == "json":
        print(json.dumps(body, indent=2))
    else:
        print(body["value"])
        if body.get("witness"):
            print(f"witness: {body['witness']}")
    return EXIT_OK


def cmd_construct(client: ServiceClient, args: argparse.Namespace) -> int:
    if (args.extra is None) == (not args.auto):
        print("error: provide exactly one of --extra, --auto", file=sys.stderr)
        return EXIT_INPUT
    try:
        part = [int(piece) for piece in args.b.split(",") if piece.strip()]
    except ValueError:
        print(f"error: --b expects comma-separated integers, got {args.b!r}", file=sys.stderr)
        return EXIT_INPUT
    payload: dict = {"n": args.n, "b": part, "max_candidates": args.max_candidates}
    if args.extra is not None:
        payload["extra"] = args.extra
    resp = client.post("/construct", payload)
    if resp.status_code != 200:
        return _fail(resp)
    body = resp.json()
    if args.format == "json":
        print(json.dumps(body, indent=2))
    else:
        print(body["generators"])
    return EXIT_OK


def cmd_perfect(client: ServiceClient, args: argparse.Namespace) -> int:
    resp = client.post("/perfect", {"n": args.n, "d": args.d, "set": args.set})
    if resp.status_code != 200:
        return _fail(resp)
    body = resp.json()
    if args.format == "json":
        print(json.dumps(body, indent=2))
    else:
        print(
            f"upper: {str(body['upper']).lower()}, "
            f"lower: {str(body['lower']).lower()}, "
            f"perfect: {str(body['perfect']).lower()}"
        )
        if body.get("fc"):
            fc = body["fc"]
            print(
                "fc conditions: "
                + ", ".join(
                    f"{name.removeprefix('cond_')}={str(fc[name]).lower()}"
                    for name in (
                        "cond_degree",
                        "cond_clique",
                        "cond_edgecount",
                        "cond_nonbipartite",
                    )
                )
                + f"; satisfied={str(fc['satisfies_fc']).lower()}"
            )
    return EXIT_OK if body["perfect"] else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fideals",
        description="Decide, enumerate, count and construct f-ideals.",
    )
    parser.add_argument(
        "--server",
        default=None,
        help="base URL of a running service; default mounts the app in-process",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="decide the f-ideal property, with classification")
    check.add_argument("--n", type=int, required=True)
    check.add_argument("--gens", help="generator set, e.g. '1.2, 2.3, 3.4, 4.5, 1.5'")
    check.add_argument("--file", help="path with one generator set per line")
    check.add_argument("--random", type=int, help="check this many seeded random ideals")
    check.add_argument("--seed", type=int, default=0, help="seed for --random")
    check.add_argument("--max-scan-bits", type=int, default=22)
    check.add_argument("--format", choices=("human", "json", "ndjson"), default="human")
    check.set_defaults(handler=cmd_check)

    enum = sub.add_parser("enumerate", help="stream all homogeneous degree-d f-ideals")
    enum.add_argument("--n", type=int, required=True)
    enum.add_argument("--d", type=int, required=True)
    enum.add_argument("--workers", type=int, default=1)
    enum.add_argument("--max-candidates", type=int, default=10**8)
    enum.add_argument("--format", choices=("ndjson", "tsv", "count"), default="ndjson")
    enum.set_defaults(handler=cmd_enumerate)

    count = sub.add_parser("count", help="count f-ideals or compute the perfect number")
    count.add_argument("--n", type=int, required=True)
    count.add_argument("--d", type=int, default=2)
    count.add_argument("--mode", choices=("U", "V", "perfect-number"), required=True)
    count.add_argument(
        "--method",
        choices=("formula", "enumeration", "brute"),
        default=None,
        help="default: formula for U/V, brute for perfect-number",
    )
    count.add_argument("--max-candidates", type=int, default=10**8)
    count.add_argument("--workers", type=int, default=1)
    count.add_argument("--format", choices=("human", "json"), default="human")
    count.set_defaults(handler=cmd_count)

    construct = sub.add_parser("construct", help="build an f-ideal from a two-part set")
    construct.add_argument("--n", type=int, required=True)
    construct.add_argument("--b", required=True, help="vertex part, e.g. '1,2'")
    construct.add_argument("--extra", help="extra degree-2 generators to fill the half slice")
    construct.add_argument(
        "--auto", action="store_true", help="pick the lexicographically least valid extra set"
    )
    construct.add_argument("--max-candidates", type=int, default=10**8)
    construct.add_argument("--format", choices=("human", "json"), default="human")
    construct.set_defaults(handler=cmd_construct)

    perfect = sub.add_parser("perfect", help="test a monomial set for perfectness")
    perfect.add_argument("--n", type=int, required=True)
    perfect.add_argument("--d", type=int, required=True)
    perfect.add_argument("--set", required=True, help="monomial set, e.g. '1.2, 3.4'")
    perfect.add_argument("--format", choices=("human", "json"), default="human")
    perfect.set_defaults(handler=cmd_perfect)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    client = ServiceClient(args.server)
    try:
        return args.handler(client, args)
    finally:
        client.close()


if __name__ == "__main__":
    sys.exit(main())
