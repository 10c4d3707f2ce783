"""HTTP service exposing the exact tables, constants and verification runs.

Every endpoint is a pure lookup or a deterministic recomputation, so the
service can run long-lived and fully stateless; the CLI is just a client of
this app (in process by default).
"""

from __future__ import annotations

from fastapi import FastAPI
from fastapi.responses import JSONResponse
from pydantic import BaseModel, ConfigDict, Field

from . import __version__
from .cases import get_case, load_bundled_cases, verify_all, verify_case
from .errors import FdquotError, UnknownNameError
from .fmt import rational_json, vector_json
from .lattice import orbit_volume, structure_constants
from .mero import derive_main_theorem
from .motive import (
    gamma_gm,
    central_torus_dims,
    iwahori_volume_exponent,
    measure_quotient_factor,
    motive_degrees,
    point_count,
)
from .parabolic import adjoint_dimension_check, levi_data, relative_weyl, shahidi_levels
from .roots import BUILTIN_NAMES, builtin_datum, datum_from_json


class GroupsResponse(BaseModel):
    groups: list[str]


class RootEntry(BaseModel):
    coords: list[int]
    coroot: list[int]
    height: int
    lengthClass: str
    dim: int


class RootsResponse(BaseModel):
    group: str
    rank: int
    latticeRank: int
    cartan: list[list[int]]
    simpleLabels: list[str]
    positiveRoots: list[RootEntry]
    count: int


class DatumDocument(BaseModel):
    """Structured root-datum input, mirroring the JSON file format."""

    cartan: list[list[int]]
    latticeRank: int | None = None
    rootEmbed: list[list[int]] | None = None
    corootEmbed: list[list[int]] | None = None
    rootDims: list[int] | None = None
    name: str | None = None
    labels: list[str] | None = None

    def to_doc(self):
        doc = {"cartan": self.cartan}
        for key in ("latticeRank", "rootEmbed", "corootEmbed", "rootDims", "name", "labels"):
            val = getattr(self, key)
            if val is not None:
                doc[key] = val
        return doc


class LevelEntry(BaseModel):
    coroots: list[list[int]]
    dim: int


class AdjointCheckModel(BaseModel):
    ok: bool
    adjointDim: int
    decomposedDim: int


class ParabolicResponse(BaseModel):
    group: str
    removedRoot: str
    theta: list[str]
    dimN: int
    rhoP: list
    alphaTilde: list
    nilradicalRoots: list[list[int]]
    levels: dict[str, LevelEntry]
    mLS: int
    relativeWeylOrder: int
    adjointCheck: AdjointCheckModel | None = None


class MotiveResponse(BaseModel):
    group: str
    degrees: dict[str, int]
    dimG: int
    dimT: int
    iwahoriExponent: int | str
    pointCount: dict


class GammaGMResponse(BaseModel):
    group: str
    removedRoot: str
    dimN: int
    dimAM: int
    dimAG: int
    gamma: dict
    measureFactor: dict


class ConstantsResponse(BaseModel):
    case: str
    group: str
    removedRoot: str
    j: int
    chi: list[int]
    chiPairing: int
    mIdx: int
    heiermannConstant: int | str
    compatConstant: int | str
    dimAM: int
    dimAG: int
    orbitRatio: str


class DerivationStepModel(BaseModel):
    rule: str
    paper_ref: str
    before: str
    after: str


class DerivationResponse(BaseModel):
    case: str
    mLS: int
    j: int
    chiPairing: int
    mIdx: int
    ok: bool
    constant: int | str | None
    surviving: list[str]
    steps: list[DerivationStepModel]
    assumptions: dict[str, bool]


class CheckModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    checkName: str
    paper_ref: str
    computed: str
    expected: str
    passed: bool = Field(alias="pass")


class VerifyResponse(BaseModel):
    case: str
    assumptions: dict[str, bool]
    computed: dict
    perCheck: list[CheckModel]
    overall: bool


class VerifyAllResponse(BaseModel):
    reports: list[VerifyResponse]
    overall: bool


class CaseSummary(BaseModel):
    name: str
    group: dict
    removedRoot: str
    j: int
    componentOrders: list[int]
    source: str


class CasesResponse(BaseModel):
    cases: list[CaseSummary]


app = FastAPI(title="fdquot", version=__version__)


@app.exception_handler(UnknownNameError)
async def _unknown_name(request, exc):
    return JSONResponse(status_code=404, content={"detail": str(exc)})


@app.exception_handler(FdquotError)
async def _bad_input(request, exc):
    return JSONResponse(status_code=400, content={"detail": str(exc)})


def _roots_response(datum):
    rs = datum.root_system
    return RootsResponse(
        group=datum.name,
        rank=rs.rank,
        latticeRank=datum.lattice_rank,
        cartan=[list(row) for row in rs.cartan.entries],
        simpleLabels=list(datum.labels),
        positiveRoots=[
            RootEntry(
                coords=list(r.coords),
                coroot=list(c.coords),
                height=r.height,
                lengthClass=r.length2class,
                dim=d,
            )
            for r, c, d in zip(rs.positive_roots, rs.coroots, rs.root_dims)
        ],
        count=rs.num_positive,
    )


@app.get("/v1/groups", response_model=GroupsResponse)
def list_groups():
    return GroupsResponse(groups=list(BUILTIN_NAMES))


@app.get("/v1/roots/{group}", response_model=RootsResponse)
def roots_of_builtin(group: str):
    return _roots_response(builtin_datum(group))


@app.post("/v1/roots", response_model=RootsResponse)
def roots_of_datum(doc: DatumDocument):
    return _roots_response(datum_from_json(doc.to_doc()))


def _parabolic_response(datum, remove):
    rs = datum.root_system
    alpha = datum.label_index(remove)
    levi = levi_data(rs, alpha)
    levels = shahidi_levels(levi)
    rel = relative_weyl(rs, levi)
    adjoint = None
    if all(d == 1 for d in rs.root_dims):
        chk = adjoint_dimension_check(rs, levi)
        adjoint = AdjointCheckModel(
            ok=chk.ok, adjointDim=chk.adjoint_dim, decomposedDim=chk.decomposed_dim
        )
    return ParabolicResponse(
        group=datum.name,
        removedRoot=datum.labels[alpha],
        theta=[datum.labels[i] for i in levi.theta],
        dimN=levi.dim_n,
        rhoP=vector_json(levi.rho_p),
        alphaTilde=vector_json(levi.alpha_tilde),
        nilradicalRoots=[list(rs.positive_roots[k].coords) for k in levi.sigma_p],
        levels={
            str(lvl): LevelEntry(
                coroots=[list(rs.coroots[k].coords) for k in members],
                dim=sum(rs.root_dims[k] for k in members),
            )
            for lvl, members in levels.levels
        },
        mLS=levels.m_ls,
        relativeWeylOrder=rel.wm_order,
        adjointCheck=adjoint,
    )


@app.get("/v1/parabolic/{group}", response_model=ParabolicResponse)
def parabolic_of_builtin(group: str, remove: str):
    return _parabolic_response(builtin_datum(group), remove)


@app.get("/v1/motive/{group}", response_model=MotiveResponse)
def motive_of_builtin(group: str):
    datum = builtin_datum(group)
    md = motive_degrees(datum)
    return MotiveResponse(
        group=datum.name,
        degrees={str(d): m for d, m in md.degrees},
        dimG=md.dim_g,
        dimT=md.dim_t,
        iwahoriExponent=rational_json(iwahori_volume_exponent(md)),
        pointCount=point_count(datum).to_json(),
    )


@app.get("/v1/gamma-gm/{group}", response_model=GammaGMResponse)
def gamma_gm_of_builtin(group: str, remove: str):
    datum = builtin_datum(group)
    alpha = datum.label_index(remove)
    theta = tuple(i for i in range(datum.semisimple_rank) if i != alpha)
    dim_a_m, dim_a_g = central_torus_dims(datum, theta)
    rs = datum.root_system
    levi = levi_data(rs, alpha)
    return GammaGMResponse(
        group=datum.name,
        removedRoot=datum.labels[alpha],
        dimN=levi.dim_n,
        dimAM=dim_a_m,
        dimAG=dim_a_g,
        gamma=gamma_gm(datum, theta).to_json(),
        measureFactor=measure_quotient_factor(datum, theta).to_json(),
    )


def _case_constants(case):
    datum = case.resolve_datum()
    alpha = datum.label_index(case.removed_root)
    theta = tuple(i for i in range(datum.semisimple_rank) if i != alpha)
    sc = structure_constants(datum, theta, alpha)
    return datum, alpha, sc


@app.get("/v1/constants/{case_name}", response_model=ConstantsResponse)
def constants_of_case(case_name: str):
    case = get_case(case_name)
    datum, alpha, sc = _case_constants(case)
    ratio = orbit_volume(sc, 1, 1).ratio
    return ConstantsResponse(
        case=case.name,
        group=datum.name,
        removedRoot=datum.labels[alpha],
        j=case.j,
        chi=list(sc.chi),
        chiPairing=sc.chi_pairing,
        mIdx=sc.m_idx,
        heiermannConstant=rational_json(sc.heiermann_constant),
        compatConstant=rational_json(sc.compat_constant(case.j)),
        dimAM=sc.dim_a_m,
        dimAG=sc.dim_a_g,
        orbitRatio=str(ratio),
    )


@app.get("/v1/derive/{case_name}", response_model=DerivationResponse)
def derive_case(case_name: str):
    case = get_case(case_name)
    datum, alpha, sc = _case_constants(case)
    levi = levi_data(datum.root_system, alpha)
    levels = shahidi_levels(levi)
    report = derive_main_theorem(levels.m_ls, case.j, sc)
    return DerivationResponse(
        case=case.name,
        mLS=report.m_ls,
        j=report.j,
        chiPairing=report.chi_pairing,
        mIdx=report.m_idx,
        ok=report.ok,
        constant=rational_json(report.constant) if report.constant is not None else None,
        surviving=list(report.surviving),
        steps=[
            DerivationStepModel(
                rule=s.rule, paper_ref=s.paper_ref, before=s.before, after=s.after
            )
            for s in report.steps
        ],
        assumptions=dict(case.assumptions),
    )


def _verify_model(report):
    return VerifyResponse(
        case=report.case,
        assumptions=report.assumptions,
        computed=report.computed,
        perCheck=[
            CheckModel(
                checkName=c.name,
                paper_ref=c.paper_ref,
                computed=c.computed,
                expected=c.expected,
                passed=c.passed,
            )
            for c in report.per_check
        ],
        overall=report.overall,
    )


@app.get("/v1/verify", response_model=VerifyAllResponse)
def verify_everything():
    reports = [_verify_model(r) for r in verify_all()]
    return VerifyAllResponse(reports=reports, overall=all(r.overall for r in reports))


@app.get("/v1/verify/{case_name}", response_model=VerifyResponse)
def verify_one(case_name: str):
    return _verify_model(verify_case(get_case(case_name)))


@app.get("/v1/cases", response_model=CasesResponse)
def cases_index():
    out = []
    for name, case in load_bundled_cases().items():
        out.append(
            CaseSummary(
                name=name,
                group=case.group,
                removedRoot=case.removed_root,
                j=case.j,
                componentOrders=[case.component_order_pi, case.component_order_sigma],
                source=case.source,
            )
        )
    return CasesResponse(cases=out)
