"""Pydantic request/response models and JSON wire formats.

These are the documented schemas for poset files, generator-family files,
certificates and reports; the service endpoints and the CLI both speak them.
Element and sequence literals travel as text in the ``x(4,11)`` / ``s[1,5]``
/ ``t[3|2,4]`` syntax.
"""

from __future__ import annotations

from typing import Annotated, Any, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

from .errors import InputError
from .diagonal import DiagCertificate, DiagLevel
from .opens import (
    ExplicitList,
    OpenDesc,
    OpensFamily,
    Single,
    SigmaLenAtLeast,
    StarLenAtLeast,
    XColumn,
    XRankAtLeast,
    canonical_level,
)
from .parsing import parse_elem
from .posets import FinitePoset


class StrictModel(BaseModel):
    model_config = ConfigDict(extra="forbid")


# --- finite poset files ------------------------------------------------------


class PosetDoc(StrictModel):
    """Finite poset file: reflexive pairs implicit; loaders may close transitively."""

    elements: list[str]
    leq: list[tuple[str, str]] = Field(default_factory=list)

    def to_poset(self, *, close: bool = True) -> FinitePoset:
        return FinitePoset.from_relation(self.elements, self.leq, close=close)

    def to_raw_poset(self) -> FinitePoset:
        return FinitePoset(self.elements, self.leq, validate=False)


# --- generator family files --------------------------------------------------


class XRankDoc(StrictModel):
    kind: Literal["x_rank_at_least"]
    k: int


class SigmaLenDoc(StrictModel):
    kind: Literal["sigma_len_at_least"]
    k: int


class StarLenDoc(StrictModel):
    kind: Literal["star_len_at_least"]
    k: int


class XColumnDoc(StrictModel):
    kind: Literal["x_column"]
    m: int
    min_n: int


class SingleDoc(StrictModel):
    kind: Literal["single"]
    elem: str


class ExplicitListDoc(StrictModel):
    kind: Literal["explicit_list"]
    elems: list[str]


GenFamilyDoc = Annotated[
    Union[XRankDoc, SigmaLenDoc, StarLenDoc, XColumnDoc, SingleDoc, ExplicitListDoc],
    Field(discriminator="kind"),
]


class OpenDoc(StrictModel):
    families: list[GenFamilyDoc]

    def to_open(self) -> OpenDesc:
        fams = []
        for doc in self.families:
            if isinstance(doc, XRankDoc):
                fams.append(XRankAtLeast(doc.k))
            elif isinstance(doc, SigmaLenDoc):
                fams.append(SigmaLenAtLeast(doc.k))
            elif isinstance(doc, StarLenDoc):
                fams.append(StarLenAtLeast(doc.k))
            elif isinstance(doc, XColumnDoc):
                fams.append(XColumn(doc.m, doc.min_n))
            elif isinstance(doc, SingleDoc):
                fams.append(Single(parse_elem(doc.elem)))
            else:
                fams.append(ExplicitList(tuple(parse_elem(e) for e in doc.elems)))
        return OpenDesc(tuple(fams))


class FamilyDoc(StrictModel):
    """Indexed family of opens: the canonical shorthand or an explicit list."""

    kind: Optional[Literal["canonical"]] = None
    opens: Optional[list[OpenDoc]] = None
    name: Optional[str] = None

    def to_family(self) -> OpensFamily:
        if self.kind == "canonical":
            if self.opens:
                raise InputError("the canonical shorthand does not take explicit opens")
            return OpensFamily.canonical()
        if not self.opens:
            raise InputError('a family needs either {"kind": "canonical"} or a nonempty "opens" list')
        return OpensFamily.from_list(
            [doc.to_open() for doc in self.opens], name=self.name or "inline"
        )


# --- certificates --------------------------------------------------------------


class LevelDoc(StrictModel):
    k: int
    n: int
    gen: str


class CertificateDoc(StrictModel):
    family: str
    depth: int
    levels: list[LevelDoc]
    prefix: list[int]

    @classmethod
    def from_certificate(cls, cert: DiagCertificate) -> "CertificateDoc":
        return cls(
            family=cert.family,
            depth=cert.depth,
            levels=[LevelDoc(k=lv.k, n=lv.n, gen=str(lv.generator)) for lv in cert.levels],
            prefix=list(cert.prefix),
        )

    def to_certificate(self) -> DiagCertificate:
        return DiagCertificate(
            family=self.family,
            depth=self.depth,
            levels=tuple(
                DiagLevel(k=lv.k, n=lv.n, generator=parse_elem(lv.gen)) for lv in self.levels
            ),
            prefix=tuple(self.prefix),
        )


# --- requests -------------------------------------------------------------------


class OrderRequest(StrictModel):
    u: str
    v: str


class ElementCheckRequest(StrictModel):
    elem: str


class PosetVerifyRequest(StrictModel):
    poset: PosetDoc


class PosetGdeltaRequest(StrictModel):
    poset: PosetDoc
    subset: Optional[list[str]] = None
    maximals: bool = False


class SupRequest(StrictModel):
    poset: Optional[PosetDoc] = None
    fixture: Optional[Literal["chain-pair"]] = None
    order: Literal["base", "extended"] = "base"
    elements: Optional[list[str]] = None
    chain: Optional[Literal["x", "y"]] = None


class DiagRequest(StrictModel):
    family: FamilyDoc
    depth: int = 8
    budget: Optional[int] = None
    force: bool = False


class CertVerifyRequest(StrictModel):
    certificate: CertificateDoc
    family: FamilyDoc


class SuitesRequest(StrictModel):
    scope: Literal["seq", "L", "finite", "all"]
    bound: int = 3
    depth: int = 3
    max_elems: int = 4
    samples: int = 300
    seed: int = 20260


# --- responses -------------------------------------------------------------------


class Report(StrictModel):
    """Uniform command outcome; exit codes map pass->0, fail->1, indeterminate->2."""

    command: str
    status: Literal["pass", "fail", "indeterminate"]
    detail: dict[str, Any] = Field(default_factory=dict)


class DiagResponse(StrictModel):
    report: Report
    certificate: Optional[CertificateDoc] = None
