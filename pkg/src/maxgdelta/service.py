"""Service layer: one handler per operation, plus the FastAPI app.

Handlers are plain functions from request model to response model; the HTTP
routes bind them to endpoints and the CLI calls them in process, so both
surfaces run identical code.  Bad inputs raise InputError/ParseError (HTTP
422, CLI exit 64); genuinely undecided outcomes come back as reports with
status "indeterminate".
"""

from __future__ import annotations

from fastapi import FastAPI
from fastapi.responses import JSONResponse

from .errors import IndeterminateError, InputError, ParseError, PosetError
from .seq import OMEGA
from .domain import elem_length, has_upper_bound, is_compact, is_maximal, leq
from .parsing import parse_elem
from . import posets
from .posets import ChainPairPoset, X_CHAIN, Y_CHAIN, sup_in_oracle, verify_partial_order
from .opens import uncovered_maximal
from .diagonal import (
    DiagFailure,
    certificate_problems,
    diagonalize,
    witness_element,
)
from .suites import run_suites
from .schemas import (
    CertificateDoc,
    CertVerifyRequest,
    DiagRequest,
    DiagResponse,
    ElementCheckRequest,
    OrderRequest,
    PosetGdeltaRequest,
    PosetVerifyRequest,
    Report,
    SuitesRequest,
    SupRequest,
)


def handle_order(req: OrderRequest) -> Report:
    u = parse_elem(req.u)
    v = parse_elem(req.v)
    return Report(
        command="order",
        status="pass",
        detail={
            "u": str(u),
            "v": str(v),
            "leq_uv": leq(u, v),
            "leq_vu": leq(v, u),
            "has_upper_bound": has_upper_bound(u, v),
        },
    )


def handle_element_check(req: ElementCheckRequest) -> Report:
    u = parse_elem(req.elem)
    n = elem_length(u) if u.is_seqlike else None
    return Report(
        command="l-check",
        status="pass",
        detail={
            "elem": str(u),
            "variant": u.kind,
            "length": ("w" if n is OMEGA else n) if u.is_seqlike else None,
            "column": u.m if u.is_x else None,
            "level": ("w" if u.n is OMEGA else u.n) if u.is_x else None,
            "compact": is_compact(u),
            "maximal": is_maximal(u),
        },
    )


def handle_poset_verify(req: PosetVerifyRequest) -> Report:
    p = req.poset.to_raw_poset()
    violations = verify_partial_order(p)
    return Report(
        command="poset-verify",
        status="pass" if not violations else "fail",
        detail={
            "elements": len(p.elements),
            "violations": [str(v) for v in violations],
        },
    )


def handle_poset_gdelta(req: PosetGdeltaRequest) -> Report:
    p = req.poset.to_poset()
    if req.maximals == (req.subset is not None):
        raise InputError("give exactly one of: a subset, or the maximals flag")
    subset = posets.maximals(p) if req.maximals else frozenset(req.subset)
    verdict = posets.is_gdelta(p, subset)
    return Report(
        command="poset-gdelta",
        status="pass" if verdict else "fail",
        detail={
            "subset": sorted(map(str, subset)),
            "gdelta": verdict,
            "scott_open": posets.is_scott_open(p, subset),
        },
    )


def handle_sup(req: SupRequest) -> Report:
    if (req.poset is None) == (req.fixture is None):
        raise InputError("give exactly one of: a poset file, or a fixture")
    if req.poset is not None:
        if not req.elements:
            raise InputError("sup over a poset file needs a nonempty element list")
        p = req.poset.to_poset()
        sub = p.check_membership(req.elements)
        ubs = [u for u in p.elements if all(p.leq(x, u) for x in sub)]
        value = posets.sup_of(p, sub)
        if value is not None:
            detail = {"kind": "sup", "value": str(value)}
        elif not ubs:
            detail = {"kind": "no_sup", "reason": "no upper bound"}
        else:
            minimal = [u for u in ubs if not any(v != u and p.leq(v, u) for v in ubs)]
            detail = {
                "kind": "no_sup",
                "reason": "incomparable minimal upper bounds",
                "witness": sorted(map(str, minimal[:2])),
            }
        return Report(command="sup", status="pass", detail=detail)
    fixture = ChainPairPoset(extended=req.order == "extended")
    if (req.chain is None) == (req.elements is None):
        raise InputError("the fixture takes exactly one of: a chain, or an element list")
    query = {"x": X_CHAIN, "y": Y_CHAIN}[req.chain] if req.chain else list(req.elements)
    try:
        res = sup_in_oracle(fixture.as_oracle(), query)
    except IndeterminateError as e:
        return Report(command="sup", status="indeterminate", detail={"reason": str(e)})
    detail = {"kind": res.kind, "order": req.order}
    if res.kind == "sup":
        detail["value"] = res.value
    else:
        detail["reason"] = res.reason
        detail["witness"] = sorted(res.witness)
    return Report(command="sup", status="pass", detail=detail)


def handle_diag(req: DiagRequest) -> DiagResponse:
    family = req.family.to_family()
    if req.depth < 1:
        raise InputError(f"depth must be >= 1, got {req.depth}")
    if not req.force:
        for k in range(1, req.depth + 1):
            gap = uncovered_maximal(family.open_at(k))
            if gap is not None:
                report = Report(
                    command="diag",
                    status="indeterminate",
                    detail={
                        "family": family.name,
                        "level": k,
                        "reason": "level not shown to cover the maximal points",
                        "uncovered": str(gap),
                        "hint": "pass force to diagonalize anyway",
                    },
                )
                return DiagResponse(report=report)
    result = diagonalize(family, req.depth, req.budget)
    if isinstance(result, DiagFailure):
        status = "indeterminate" if result.reason == "budget" else "fail"
        report = Report(
            command="diag",
            status=status,
            detail={
                "family": family.name,
                "level": result.level,
                "reason": result.reason,
                "message": result.detail,
            },
        )
        return DiagResponse(report=report)
    problems = certificate_problems(result, family)
    if problems:
        report = Report(
            command="diag",
            status="fail",
            detail={"family": family.name, "problems": problems},
        )
        return DiagResponse(report=report, certificate=CertificateDoc.from_certificate(result))
    witness = witness_element(result)
    report = Report(
        command="diag",
        status="pass",
        detail={
            "family": family.name,
            "depth": result.depth,
            "prefix": list(result.prefix),
            "witness": str(witness),
            "witness_maximal": is_maximal(witness),
            "message": (
                f"family refuted at depth {result.depth}: the witness lies in every "
                f"checked level yet is not maximal"
            ),
        },
    )
    return DiagResponse(report=report, certificate=CertificateDoc.from_certificate(result))


def handle_cert_verify(req: CertVerifyRequest) -> Report:
    family = req.family.to_family()
    cert = req.certificate.to_certificate()
    problems = certificate_problems(cert, family)
    return Report(
        command="cert-verify",
        status="pass" if not problems else "fail",
        detail={
            "family": family.name,
            "depth": cert.depth,
            "problems": problems,
        },
    )


def handle_suites(req: SuitesRequest) -> Report:
    report = run_suites(
        req.scope,
        bound=req.bound,
        depth=req.depth,
        max_elems=req.max_elems,
        samples=req.samples,
        seed=req.seed,
    )
    return Report(
        command="suites",
        status="pass" if report.passed else "fail",
        detail={
            "scope": report.scope,
            "params": report.params,
            "checks": [
                {
                    "id": r.check_id,
                    "description": r.description,
                    "cases": r.cases,
                    "passed": r.passed,
                    "violations": r.violations,
                }
                for r in report.results
            ],
        },
    )


def create_app() -> FastAPI:
    app = FastAPI(
        title="maxgdelta",
        description=(
            "Order queries, poset verification and Scott-open diagonalization "
            "over the spliced counterexample domain."
        ),
        version="0.1.0",
    )

    @app.exception_handler(ParseError)
    async def _parse_error(request, exc: ParseError):
        return JSONResponse(
            status_code=422,
            content={"error": str(exc), "position": exc.position},
        )

    @app.exception_handler(InputError)
    async def _input_error(request, exc: InputError):
        body = {"error": str(exc)}
        if isinstance(exc, PosetError):
            body["violations"] = [str(v) for v in exc.violations]
        return JSONResponse(status_code=422, content=body)

    @app.exception_handler(IndeterminateError)
    async def _indeterminate(request, exc: IndeterminateError):
        return JSONResponse(status_code=200, content={"status": "indeterminate", "error": str(exc)})

    @app.get("/")
    def info():
        return {
            "name": "maxgdelta",
            "endpoints": [
                "/order",
                "/element/check",
                "/poset/verify",
                "/poset/gdelta",
                "/sup",
                "/diag",
                "/certificate/verify",
                "/suites",
            ],
        }

    @app.post("/order", response_model=Report)
    def order(req: OrderRequest):
        return handle_order(req)

    @app.post("/element/check", response_model=Report)
    def element_check(req: ElementCheckRequest):
        return handle_element_check(req)

    @app.post("/poset/verify", response_model=Report)
    def poset_verify(req: PosetVerifyRequest):
        return handle_poset_verify(req)

    @app.post("/poset/gdelta", response_model=Report)
    def poset_gdelta(req: PosetGdeltaRequest):
        return handle_poset_gdelta(req)

    @app.post("/sup", response_model=Report)
    def sup(req: SupRequest):
        return handle_sup(req)

    @app.post("/diag", response_model=DiagResponse)
    def diag(req: DiagRequest):
        return handle_diag(req)

    @app.post("/certificate/verify", response_model=Report)
    def certificate_verify(req: CertVerifyRequest):
        return handle_cert_verify(req)

    @app.post("/suites", response_model=Report)
    def suites(req: SuitesRequest):
        return handle_suites(req)

    return app


app = create_app()
