"""Command-line client.

Every subcommand builds a request model and dispatches it to the service
handlers -- in process by default, or against a running server via
``--server URL``.  Exit codes: pass 0, fail 1, indeterminate 2, usage 64.
"""

from __future__ import annotations

import argparse
import json
import sys
import urllib.error
import urllib.request
from pathlib import Path

from pydantic import ValidationError

from .errors import IndeterminateError, InputError, ParseError, PosetError
from . import service
from .schemas import (
    CertificateDoc,
    CertVerifyRequest,
    DiagRequest,
    DiagResponse,
    ElementCheckRequest,
    FamilyDoc,
    OrderRequest,
    PosetDoc,
    PosetGdeltaRequest,
    PosetVerifyRequest,
    Report,
    SuitesRequest,
    SupRequest,
)

USAGE_EXIT = 64
STATUS_EXIT = {"pass": 0, "fail": 1, "indeterminate": 2}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def build_parser() -> _Parser:
    parser = _Parser(prog="maxgdelta", description=__doc__)
    parser.add_argument("--json", action="store_true", help="emit the JSON report instead of text")
    parser.add_argument("--server", metavar="URL", help="send the request to a running service")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("order", help="compare two elements both ways")
    p.add_argument("u")
    p.add_argument("v")

    p = sub.add_parser("l-check", help="classify one element (variant, length, compact, maximal)")
    p.add_argument("elem")

    p = sub.add_parser("poset-verify", help="list partial-order violations of a relation file")
    p.add_argument("file")

    p = sub.add_parser("poset-gdelta", help="test whether a subset is an intersection of Scott opens")
    p.add_argument("file")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--set", dest="subset", help="comma-separated element labels")
    g.add_argument("--maximals", action="store_true", help="use the poset's maximal elements")

    p = sub.add_parser("sup", help="supremum in a finite poset or the twin-chain fixture")
    p.add_argument("--poset", metavar="FILE")
    p.add_argument("--fixture", choices=["chain-pair"])
    p.add_argument("--order", choices=["base", "extended"], default="base")
    p.add_argument("--elems", help="comma-separated labels")
    p.add_argument("--chain", choices=["x", "y"], help="a whole chain of the fixture")

    p = sub.add_parser("diag", help="diagonalize an indexed family of opens")
    p.add_argument("family", help="'canonical' or a family JSON file")
    p.add_argument("--depth", type=int, default=8)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--force", action="store_true", help="skip the max-coverage screen")
    p.add_argument("--out", default="certificate.json", help="certificate output path")

    p = sub.add_parser("cert-verify", help="re-check a certificate against its family")
    p.add_argument("cert", help="certificate JSON file")
    p.add_argument("--family", required=True, help="'canonical' or a family JSON file")

    p = sub.add_parser("suites", help="run the invariant suites")
    p.add_argument("scope", choices=["seq", "L", "finite", "all"])
    p.add_argument("--bound", type=int, default=3)
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--max-elems", type=int, default=4)
    p.add_argument("--samples", type=int, default=300)
    p.add_argument("--seed", type=int, default=20260)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _read_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except FileNotFoundError:
        raise InputError(f"no such file: {path}")
    except json.JSONDecodeError as e:
        raise InputError(f"{path} is not valid JSON: {e}")


def _family_doc(source: str) -> FamilyDoc:
    if source == "canonical":
        return FamilyDoc(kind="canonical")
    doc = FamilyDoc.model_validate(_read_json(source))
    if doc.kind is None and doc.name is None:
        doc.name = Path(source).stem
    return doc


def _split_labels(text: str) -> list[str]:
    labels = [part.strip() for part in text.split(",") if part.strip()]
    if not labels:
        raise InputError("expected a nonempty comma-separated label list")
    return labels


ENDPOINTS = {
    "order": ("/order", Report),
    "l-check": ("/element/check", Report),
    "poset-verify": ("/poset/verify", Report),
    "poset-gdelta": ("/poset/gdelta", Report),
    "sup": ("/sup", Report),
    "diag": ("/diag", DiagResponse),
    "cert-verify": ("/certificate/verify", Report),
    "suites": ("/suites", Report),
}

HANDLERS = {
    "order": service.handle_order,
    "l-check": service.handle_element_check,
    "poset-verify": service.handle_poset_verify,
    "poset-gdelta": service.handle_poset_gdelta,
    "sup": service.handle_sup,
    "diag": service.handle_diag,
    "cert-verify": service.handle_cert_verify,
    "suites": service.handle_suites,
}


def _build_request(args):
    cmd = args.command
    if cmd == "order":
        return OrderRequest(u=args.u, v=args.v)
    if cmd == "l-check":
        return ElementCheckRequest(elem=args.elem)
    if cmd == "poset-verify":
        return PosetVerifyRequest(poset=PosetDoc.model_validate(_read_json(args.file)))
    if cmd == "poset-gdelta":
        return PosetGdeltaRequest(
            poset=PosetDoc.model_validate(_read_json(args.file)),
            subset=_split_labels(args.subset) if args.subset else None,
            maximals=args.maximals,
        )
    if cmd == "sup":
        return SupRequest(
            poset=PosetDoc.model_validate(_read_json(args.poset)) if args.poset else None,
            fixture=args.fixture,
            order=args.order,
            elements=_split_labels(args.elems) if args.elems else None,
            chain=args.chain,
        )
    if cmd == "diag":
        return DiagRequest(
            family=_family_doc(args.family),
            depth=args.depth,
            budget=args.budget,
            force=args.force,
        )
    if cmd == "cert-verify":
        return CertVerifyRequest(
            certificate=CertificateDoc.model_validate(_read_json(args.cert)),
            family=_family_doc(args.family),
        )
    if cmd == "suites":
        return SuitesRequest(
            scope=args.scope,
            bound=args.bound,
            depth=args.depth,
            max_elems=args.max_elems,
            samples=args.samples,
            seed=args.seed,
        )
    raise InputError(f"unknown command {cmd!r}")


def _dispatch_remote(server: str, command: str, request):
    path, response_model = ENDPOINTS[command]
    url = server.rstrip("/") + path
    data = request.model_dump_json().encode()
    http_req = urllib.request.Request(url, data=data, headers={"Content-Type": "application/json"})
    try:
        with urllib.request.urlopen(http_req) as resp:
            return response_model.model_validate_json(resp.read())
    except urllib.error.HTTPError as e:
        body = e.read().decode(errors="replace")
        raise InputError(f"server rejected the request ({e.code}): {body}")
    except urllib.error.URLError as e:
        raise InputError(f"cannot reach {url}: {e.reason}")


def _render_report(report: Report, as_json: bool, out=None):
    out = out if out is not None else sys.stdout
    if as_json:
        print(report.model_dump_json(), file=out)
        return
    d = report.detail
    cmd = report.command
    if cmd == "order":
        print(f"{d['u']} <= {d['v']}: {d['leq_uv']}", file=out)
        print(f"{d['v']} <= {d['u']}: {d['leq_vu']}", file=out)
        print(f"upper bound exists: {d['has_upper_bound']}", file=out)
    elif cmd == "l-check":
        for key in ("elem", "variant", "length", "column", "level", "compact", "maximal"):
            if d.get(key) is not None:
                print(f"{key}: {d[key]}", file=out)
    elif cmd == "poset-verify":
        if report.status == "pass":
            print(f"valid partial order ({d['elements']} elements)", file=out)
        else:
            print(f"{len(d['violations'])} violations:", file=out)
            for v in d["violations"]:
                print(f"  {v}", file=out)
    elif cmd == "poset-gdelta":
        print(f"subset: {', '.join(d['subset']) or '(empty)'}", file=out)
        print(f"intersection of Scott opens: {d['gdelta']}", file=out)
    elif cmd == "sup":
        if report.status == "indeterminate":
            print(f"indeterminate: {d['reason']}", file=out)
        elif d["kind"] == "sup":
            print(f"sup = {d['value']}", file=out)
        else:
            extra = f" ({', '.join(d['witness'])})" if d.get("witness") else ""
            print(f"no sup: {d['reason']}{extra}", file=out)
    elif cmd == "diag":
        if report.status == "pass":
            print(d["message"], file=out)
            print(f"prefix: {d['prefix']}", file=out)
            print(f"witness: {d['witness']}", file=out)
        else:
            print(f"{report.status} at level {d.get('level', '?')}: {d.get('reason', '')}", file=out)
            for key in ("message", "uncovered", "hint"):
                if d.get(key):
                    print(f"  {key}: {d[key]}", file=out)
    elif cmd == "cert-verify":
        if report.status == "pass":
            print(f"certificate valid for family {d['family']} at depth {d['depth']}", file=out)
        else:
            print("certificate INVALID:", file=out)
            for p in d["problems"]:
                print(f"  {p}", file=out)
    elif cmd == "suites":
        for check in d["checks"]:
            mark = "ok " if check["passed"] else "FAIL"
            print(f"[{mark}] {check['id']}: {check['cases']} cases", file=out)
            for v in check["violations"]:
                print(f"       {v}", file=out)
        print(f"suites {d['scope']}: {report.status}", file=out)
    else:
        print(json.dumps(d), file=out)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return USAGE_EXIT

    if args.command == "serve":
        import uvicorn

        uvicorn.run("maxgdelta.service:app", host=args.host, port=args.port)
        return 0

    try:
        request = _build_request(args)
        if args.server:
            response = _dispatch_remote(args.server, args.command, request)
        else:
            response = HANDLERS[args.command](request)
    except ParseError as e:
        print(f"parse error {e}", file=sys.stderr)
        return USAGE_EXIT
    except PosetError as e:
        print(f"invalid poset: {e}", file=sys.stderr)
        for v in e.violations:
            print(f"  {v}", file=sys.stderr)
        return USAGE_EXIT
    except InputError as e:
        print(f"input error: {e}", file=sys.stderr)
        return USAGE_EXIT
    except ValidationError as e:
        print(f"invalid input: {e}", file=sys.stderr)
        return USAGE_EXIT
    except IndeterminateError as e:
        print(f"indeterminate: {e}", file=sys.stderr)
        return STATUS_EXIT["indeterminate"]

    if isinstance(response, DiagResponse):
        report = response.report
        if response.certificate is not None and report.status == "pass":
            from .diagonal import cert_to_json

            Path(args.out).write_text(cert_to_json(response.certificate.to_certificate()))
            report.detail["certificate_file"] = args.out
        _render_report(report, args.json)
    else:
        report = response
        _render_report(report, args.json)
    return STATUS_EXIT[report.status]


def entry():
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
