"""List and probabilistic-unique decoders for interleaved subspace codes,
and the interleaved Gabidulin adapters on top of them."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

from iscodes.codes import (CodeParams, InterleavedMessage, SubspaceBasis, decodable,
                           decoding_radius, encode_subspace, subspace_distance,
                           unique_decodable)
from iscodes.interpolation import (InterpolationInstance, check_success, interpolate_basis,
                                   interpolation_kernel, passes_degree_check)
from iscodes.linearized import weighted_degree
from iscodes.rootfinding import (DEFAULT_CAP, ListOverflow, RootFindingError,
                                 build_root_system, enumerate_root_space, find_roots_detailed)

UNIQUE = "unique"
FAILURE = "failure"
LIST = "list"

DEGREE_VIOLATION = "degree-violation"
RANK_DEFICIENT = "rank-deficient"
LIST_OVERFLOW = "list-overflow"


@dataclass
class DecodeOutcome:
    kind: str
    message: InterleavedMessage | None = None
    failure_reason: str | None = None
    candidates: list[InterleavedMessage] | None = None
    diagnostics: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.kind != FAILURE


def _front_end(received: SubspaceBasis, params: CodeParams) -> SubspaceBasis:
    if received.field != params.field or received.arity != params.s + 1:
        raise ValueError("received basis does not match the code's ambient space")
    # canonical F_q basis: dependent rows drop out, any row scrambling is undone
    return received.reduced()


def _prepare(received: SubspaceBasis, params: CodeParams, tau: int | None):
    basis = _front_end(received, params)
    n_r = len(basis)
    diag: dict[str, Any] = {"n_r": n_r}
    if n_r < params.k:
        diag["note"] = "received dimension below k"
        return None, diag
    if tau is None:
        tau = decoding_radius(params, n_r)
    diag["tau"] = tau
    inst = InterpolationInstance(params.field, basis.rows, params.s, params.k, tau)
    if inst.y_len < 1:
        diag["note"] = "tau leaves no room for y-parts"
        return None, diag
    return inst, diag


def unique_decode(received: SubspaceBasis, params: CodeParams, tau: int | None = None,
                  backend: str | None = None) -> DecodeOutcome:
    inst, diag = _prepare(received, params, tau)
    if inst is None:
        return DecodeOutcome(FAILURE, failure_reason=DEGREE_VIOLATION, diagnostics=diag)
    res = interpolate_basis(inst, backend=backend)
    diag["mult_interp"] = res.mult_count
    diag["weighted_degrees"] = [weighted_degree(Q, params.k) for Q in res.polys]
    if not check_success(res, inst):
        return DecodeOutcome(FAILURE, failure_reason=DEGREE_VIOLATION, diagnostics=diag)
    try:
        rf = find_roots_detailed(res.polys, params.k)
    except RootFindingError as exc:
        diag["note"] = str(exc)
        return DecodeOutcome(FAILURE, failure_reason=RANK_DEFICIENT, diagnostics=diag)
    diag["mult_rootfind"] = rf.mult_count
    diag["residual_zero"] = rf.residual_zero
    return DecodeOutcome(UNIQUE, message=rf.message, diagnostics=diag)


def list_decode(received: SubspaceBasis, params: CodeParams, tau: int | None = None,
                cap: int = DEFAULT_CAP, backend: str | None = None) -> DecodeOutcome:
    inst, diag = _prepare(received, params, tau)
    if inst is None:
        return DecodeOutcome(FAILURE, failure_reason=DEGREE_VIOLATION, diagnostics=diag)
    res = interpolate_basis(inst, backend=backend)
    diag["mult_interp"] = res.mult_count
    polys = [Q for Q in res.polys if passes_degree_check(Q, inst)]
    diag["passing"] = len(polys)
    if len(polys) < params.s:
        # fewer than s usable outputs: take the whole solution space instead
        polys = interpolation_kernel(inst, allow_empty=True)
        diag["d_I"] = len(polys)
    system = build_root_system(polys, params.k, inst.n_r, inst.tau, params.field, params.s)
    try:
        cands = enumerate_root_space(system, cap=cap)
    except ListOverflow as exc:
        diag["list_size"] = exc.size
        return DecodeOutcome(FAILURE, failure_reason=LIST_OVERFLOW, diagnostics=diag)
    diag["list_size"] = len(cands)
    return DecodeOutcome(LIST, candidates=cands, diagnostics=diag)


def gabidulin_points(params: CodeParams, received: Sequence[Sequence[int]]) -> SubspaceBasis:
    if len(received) != params.s or any(len(y) != params.n for y in received):
        raise ValueError(f"expected {params.s} received words of length {params.n}")
    rows = [(g,) + tuple(y[i] for y in received) for i, g in enumerate(params.alpha)]
    return SubspaceBasis(params.field, rows, params.s + 1, check=False)


def unique_decode_gabidulin(received: Sequence[Sequence[int]], params: CodeParams,
                            tau: int | None = None, backend: str | None = None) -> DecodeOutcome:
    return unique_decode(gabidulin_points(params, received), params, tau, backend)


def list_decode_gabidulin(received: Sequence[Sequence[int]], params: CodeParams,
                          tau: int | None = None, cap: int = DEFAULT_CAP,
                          backend: str | None = None) -> DecodeOutcome:
    return list_decode(gabidulin_points(params, received), params, tau, cap, backend)


@dataclass
class CandidateCheck:
    basis: SubspaceBasis
    distance: int
    decodable: bool | None
    unique_decodable: bool | None


def verify_candidate(msg: InterleavedMessage, received: SubspaceBasis, params: CodeParams,
                     gamma: int | None = None, delta: int | None = None) -> CandidateCheck:
    basis = encode_subspace(params, msg)
    dist = subspace_distance(basis, received)
    known = gamma is not None and delta is not None
    return CandidateCheck(
        basis, dist,
        decodable(params, gamma, delta) if known else None,
        unique_decodable(params, gamma, delta) if known else None,
    )
