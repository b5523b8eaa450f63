"""FastAPI service wrapping the engine.

Each endpoint is a thin adapter from the pydantic wire models to the library
calls; the CLI reuses the same handlers in-process.  Semantic errors map to
HTTP 422 with the error class name.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from . import graph as graphmod
from .collapse import CollapsePair, collapse, uncollapse
from .combinat import compress
from .crystal import apply_ops, parse_op_token
from .errors import MlqkitError
from .mlq import MLQ, enumerate_mlq, maj, mlq_type
from .schemas import (
    CollapseRequest,
    CollapseResponse,
    EnumerateRequest,
    EnumerateResponse,
    ExpandRequest,
    ExpansionModel,
    GenfunRequest,
    GraphRequest,
    GraphResponse,
    KostkaRequest,
    KostkaResponse,
    MLQModel,
    OpRequest,
    OpResponse,
    PolynomialModel,
    StatSummary,
    TableauModel,
    TraceRequest,
    TraceResponse,
    TraceStep,
    UncollapseRequest,
    UncollapseResponse,
    VerifyRequest,
    VerifyResponse,
    VertexModel,
)
from .symfun import (
    expand_in_atoms,
    expand_in_qschur,
    expand_in_schur,
    genfun_G,
    genfun_P,
    genfun_atom,
    genfun_f,
    genfun_qschur,
    genfun_schur,
    kostka_foulkes,
    kostka_foulkes_via_mlq,
)
from .tableaux import charge
from .verify import run_suite

app = FastAPI(title="mlqkit", version="0.1.0")


def _stats(m: MLQ) -> StatSummary:
    t = mlq_type(m)
    return StatSummary(type=list(t), strtype=list(compress(t)), maj=maj(m))


def handle_op(req: OpRequest) -> OpResponse:
    m = req.mlq.to_mlq()
    ops = [parse_op_token(tok) for tok in req.ops.split()]
    before = _stats(m)
    result, acted = apply_ops(m, ops)
    return OpResponse(
        mlq=MLQModel.from_mlq(result), acted=acted, before=before, after=_stats(result)
    )


def handle_collapse(req: CollapseRequest) -> CollapseResponse:
    m = req.mlq.to_mlq()
    pair = collapse(m)
    return CollapseResponse(
        nonwrap=MLQModel.from_mlq(pair.nonwrap),
        record=TableauModel.from_ssyt(pair.record),
        maj=maj(m),
        charge=charge(pair.record),
    )


def handle_uncollapse(req: UncollapseRequest) -> UncollapseResponse:
    pair = CollapsePair(req.nonwrap.to_mlq(), req.record.to_ssyt())
    m = uncollapse(pair)
    return UncollapseResponse(mlq=MLQModel.from_mlq(m), maj=maj(m))


_GENFUN = {
    "P": lambda idx, n: genfun_P(idx, n),
    "f": lambda idx, n: genfun_f(idx),
    "G": lambda idx, n: genfun_G(idx, n),
    "schur": lambda idx, n: genfun_schur(idx, n),
    "atom": lambda idx, n: genfun_atom(idx),
    "qschur": lambda idx, n: genfun_qschur(idx, n),
}


def handle_genfun(req: GenfunRequest) -> PolynomialModel:
    from .errors import UsageError

    family = req.family
    if family not in _GENFUN:
        raise UsageError(f"unknown family {family!r}; pick one of {sorted(_GENFUN)}")
    idx = tuple(req.index)
    if family in ("P", "G", "schur", "qschur"):
        if req.cols is None:
            raise UsageError(f"family {family} needs cols")
        return PolynomialModel.from_genfun(_GENFUN[family](idx, req.cols))
    return PolynomialModel.from_genfun(_GENFUN[family](idx, None))


def handle_expand(req: ExpandRequest) -> ExpansionModel:
    from .errors import UsageError

    idx = tuple(req.index)
    if req.basis == "schur":
        if req.cols is None:
            raise UsageError("schur expansion needs cols")
        return ExpansionModel.from_expansion(expand_in_schur(idx, req.cols))
    if req.basis == "atoms":
        return ExpansionModel.from_expansion(expand_in_atoms(idx))
    if req.basis == "qschur":
        if req.cols is None:
            raise UsageError("qschur expansion needs cols")
        return ExpansionModel.from_expansion(expand_in_qschur(idx, req.cols))
    raise UsageError(f"unknown basis {req.basis!r}")


def handle_kostka(req: KostkaRequest) -> KostkaResponse:
    lam, mu = tuple(req.lam), tuple(req.mu)
    direct = kostka_foulkes(lam, mu)
    via = kostka_foulkes_via_mlq(lam, mu)
    if direct != via:
        from .errors import TheoremViolationError

        raise TheoremViolationError(
            f"kostka_foulkes({lam},{mu}): {direct} vs collapse route {via}"
        )
    return KostkaResponse(q=direct.to_list(), cross_checked=True)


def handle_graph(req: GraphRequest) -> GraphResponse:
    g = graphmod.build_graph(tuple(req.shape), req.cols, req.filter)
    return GraphResponse(
        vertex_count=len(g.vertices),
        edge_count=len(g.edges),
        vertices=[
            VertexModel(
                mlq=MLQModel.from_mlq(v.mlq),
                type=list(v.type),
                strtype=list(v.strtype),
                maj=v.maj,
            )
            for v in g.vertices
        ],
        edges=[list(e) for e in g.edges],
        components=g.components() if req.components else None,
        dot=g.to_dot() if req.dot else None,
    )


def handle_enumerate(req: EnumerateRequest) -> EnumerateResponse:
    from .graph import _parse_filter
    from .graph import VertexInfo
    from .collapse import collapse as _collapse

    keep = _parse_filter(req.filter)
    out = []
    for m in enumerate_mlq(tuple(req.shape), req.cols):
        t = mlq_type(m)
        info = VertexInfo(m, t, compress(t), maj(m), None)
        if keep(info):
            out.append(m)
            if req.limit is not None and len(out) >= req.limit:
                break
    return EnumerateResponse(count=len(out), mlqs=[MLQModel.from_mlq(m) for m in out])


def handle_trace(req: TraceRequest) -> TraceResponse:
    m = req.mlq.to_mlq()
    ops = [parse_op_token(tok) for tok in req.ops.split()]
    steps = graphmod.trace_path(m, ops)
    return TraceResponse(
        steps=[
            TraceStep(
                mlq=MLQModel.from_mlq(s["mlq"]), type=list(s["type"]), acted=s["acted"]
            )
            for s in steps
        ],
        stopped_early=not steps[-1]["acted"],
    )


def handle_verify(req: VerifyRequest) -> VerifyResponse:
    report = run_suite(
        req.suite,
        max_size=req.max_size,
        max_cols=req.max_cols,
        seed=req.seed,
        instances=req.instances,
    )
    return VerifyResponse(
        suite=report.suite,
        instances=report.instances,
        failures=report.failures,
        wall_time=report.wall_time,
        ok=report.ok,
    )


def _wrap(handler, req):
    try:
        return handler(req)
    except MlqkitError as exc:
        raise HTTPException(
            status_code=422, detail={"error": type(exc).__name__, "message": str(exc)}
        )
    except IndexError as exc:
        raise HTTPException(
            status_code=422, detail={"error": "IndexError", "message": str(exc)}
        )


@app.get("/health")
def health():
    return {"status": "ok"}


@app.post("/op", response_model=OpResponse)
def op_endpoint(req: OpRequest):
    return _wrap(handle_op, req)


@app.post("/collapse", response_model=CollapseResponse)
def collapse_endpoint(req: CollapseRequest):
    return _wrap(handle_collapse, req)


@app.post("/uncollapse", response_model=UncollapseResponse)
def uncollapse_endpoint(req: UncollapseRequest):
    return _wrap(handle_uncollapse, req)


@app.post("/genfun", response_model=PolynomialModel)
def genfun_endpoint(req: GenfunRequest):
    return _wrap(handle_genfun, req)


@app.post("/expand", response_model=ExpansionModel)
def expand_endpoint(req: ExpandRequest):
    return _wrap(handle_expand, req)


@app.post("/kostka", response_model=KostkaResponse)
def kostka_endpoint(req: KostkaRequest):
    return _wrap(handle_kostka, req)


@app.post("/graph", response_model=GraphResponse)
def graph_endpoint(req: GraphRequest):
    return _wrap(handle_graph, req)


@app.post("/enumerate", response_model=EnumerateResponse)
def enumerate_endpoint(req: EnumerateRequest):
    return _wrap(handle_enumerate, req)


@app.post("/trace", response_model=TraceResponse)
def trace_endpoint(req: TraceRequest):
    return _wrap(handle_trace, req)


@app.post("/verify", response_model=VerifyResponse)
def verify_endpoint(req: VerifyRequest):
    return _wrap(handle_verify, req)
