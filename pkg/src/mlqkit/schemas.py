"""Pydantic request/response models and JSON (de)serialization helpers.

These are the wire formats shared by the service endpoints and the CLI:
queues as {"n": ..., "rows": [[...], ...]} (bottom-up, ascending), label
arrays as {"labels": ..., "pairings": ...}, polynomials as sparse term lists
with q-coefficients by ascending degree.
"""

from __future__ import annotations

from pydantic import BaseModel, Field

from .mlq import MLQ, LabelArray
from .symfun import Expansion, GenFun, QPoly
from .tableaux import SSYT, CompositionFilling


class MLQModel(BaseModel):
    n: int
    rows: list[list[int]]

    @staticmethod
    def from_mlq(m: MLQ) -> "MLQModel":
        return MLQModel(n=m.n, rows=[sorted(r) for r in m.trim().rows])

    def to_mlq(self) -> MLQ:
        return MLQ.make(self.n, self.rows)


class LabelArrayModel(BaseModel):
    labels: list[list[int]]
    pairings: list[list[list[int]]]

    @staticmethod
    def from_labels(la: LabelArray) -> "LabelArrayModel":
        pairs = sorted(la.pairings.items())
        return LabelArrayModel(
            labels=[list(row) for row in la.labels],
            pairings=[[list(src), list(dst)] for src, dst in pairs],
        )


class TableauModel(BaseModel):
    shape: list[int]
    rows: list[list[int]]

    @staticmethod
    def from_ssyt(t: SSYT) -> "TableauModel":
        return TableauModel(shape=[len(r) for r in t], rows=[list(r) for r in t])

    def to_ssyt(self) -> SSYT:
        return tuple(tuple(r) for r in self.rows)


class FillingModel(BaseModel):
    shape: list[int]
    columns: list[list[int]]
    kind: str

    @staticmethod
    def from_filling(f: CompositionFilling) -> "FillingModel":
        return FillingModel(
            shape=list(f.shape), columns=[list(c) for c in f.columns], kind=f.kind
        )


class TermModel(BaseModel):
    exp: list[int]
    q: list[int]


class PolynomialModel(BaseModel):
    n: int
    terms: list[TermModel]

    @staticmethod
    def from_genfun(g: GenFun) -> "PolynomialModel":
        return PolynomialModel(
            n=g.n,
            terms=[
                TermModel(exp=list(e), q=g.terms[e].to_list())
                for e in sorted(g.terms)
            ],
        )

    def to_genfun(self) -> GenFun:
        out = GenFun(self.n)
        for term in self.terms:
            out.add_term(tuple(term.exp), QPoly.from_list(term.q))
        return out


class CoefficientModel(BaseModel):
    index: list[int]
    q: list[int]


class ExpansionModel(BaseModel):
    basis: str
    coefficients: list[CoefficientModel]

    @staticmethod
    def from_expansion(e: Expansion) -> "ExpansionModel":
        return ExpansionModel(
            basis=e.basis,
            coefficients=[
                CoefficientModel(index=list(k), q=e.coefficients[k].to_list())
                for k in sorted(e.coefficients)
            ],
        )


class StatSummary(BaseModel):
    type: list[int]
    strtype: list[int]
    maj: int


class OpRequest(BaseModel):
    mlq: MLQModel
    ops: str = Field(description="space-separated tokens like 'e<2 f>1 ed3 fu1 ed*2'")


class OpResponse(BaseModel):
    mlq: MLQModel
    acted: bool
    before: StatSummary
    after: StatSummary


class CollapseRequest(BaseModel):
    mlq: MLQModel


class CollapseResponse(BaseModel):
    nonwrap: MLQModel
    record: TableauModel
    maj: int
    charge: int


class UncollapseRequest(BaseModel):
    nonwrap: MLQModel
    record: TableauModel


class UncollapseResponse(BaseModel):
    mlq: MLQModel
    maj: int


class GenfunRequest(BaseModel):
    family: str  # P | f | G | schur | atom | qschur
    index: list[int]
    cols: int | None = None


class ExpandRequest(BaseModel):
    basis: str  # schur | atoms | qschur
    index: list[int]
    cols: int | None = None


class KostkaRequest(BaseModel):
    lam: list[int]
    mu: list[int]


class KostkaResponse(BaseModel):
    q: list[int]
    cross_checked: bool


class GraphRequest(BaseModel):
    shape: list[int]
    cols: int
    filter: str = "all"
    dot: bool = False
    components: bool = False


class VertexModel(BaseModel):
    mlq: MLQModel
    type: list[int]
    strtype: list[int]
    maj: int


class GraphResponse(BaseModel):
    vertex_count: int
    edge_count: int
    vertices: list[VertexModel]
    edges: list[list[int]]
    components: list[list[int]] | None = None
    dot: str | None = None


class EnumerateRequest(BaseModel):
    shape: list[int]
    cols: int
    filter: str = "all"
    limit: int | None = None


class EnumerateResponse(BaseModel):
    count: int
    mlqs: list[MLQModel]


class TraceStep(BaseModel):
    mlq: MLQModel
    type: list[int]
    acted: bool


class TraceRequest(BaseModel):
    mlq: MLQModel
    ops: str


class TraceResponse(BaseModel):
    steps: list[TraceStep]
    stopped_early: bool


class VerifyRequest(BaseModel):
    suite: str
    max_size: int = 6
    max_cols: int = 5
    seed: int = 0
    instances: int = 10000


class VerifyResponse(BaseModel):
    suite: str
    instances: int
    failures: list[str]
    wall_time: float
    ok: bool
