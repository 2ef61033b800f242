"""Generic machinery for checking weight-preserving bijections on graded
families, the telescoping relation their index sum induces, and the
cancelation iteration that turns a telescoping map into a direct bijection.

All checks are exhaustive over explicitly enumerated, weight-capped slices
and report their verdict as a Certificate (machine-readable, with a concrete
counterexample on failure).  Nothing here is probabilistic.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Mapping, Optional

from .qalgebra import LaurentPoly

REASON_NOT_IN_CODOMAIN = "not-in-codomain"
REASON_COLLISION = "collision"
REASON_WEIGHT_MISMATCH = "weight-mismatch"
REASON_NOT_SURJECTIVE = "not-surjective"


class IterationBudgetExceeded(RuntimeError):
    """The cancelation iteration did not land in the target set in time.

    Always indicates a defect in the supplied map (a cycle or an unbounded
    orbit), never a legitimate outcome.
    """


@dataclass(frozen=True, slots=True)
class MarkedObject:
    """A combinatorial object carrying a formal weight marker.

    The marker contributes q^marker_q * z^marker_z to the weight and leaves
    the sign untouched; marker_q == 0 with marker_z == 0 would be the
    unmarked case, which is represented by the bare payload instead.
    """

    marker_q: int
    payload: Any
    marker_z: int = 0

    def __post_init__(self):
        if self.marker_q < 0:
            raise ValueError("marker weight must be nonnegative")

    def to_json_obj(self):
        return {"marker_q": self.marker_q, "marker_z": self.marker_z,
                "payload": _jsonable(self.payload)}


def _jsonable(obj):
    if hasattr(obj, "to_json_obj"):
        return obj.to_json_obj()
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    return obj


@dataclass(frozen=True)
class Certificate:
    """Verdict of one exhaustive check over a capped slice.

    status is "verified" only if every sub-check passed on the full slice;
    otherwise it is "failed" and counterexample holds the offending object,
    its image (or the mismatching values), and a reason code.
    """

    check: str
    params: dict = field(default_factory=dict)
    cap: Optional[int] = None
    status: str = "verified"
    domain_size: int = 0
    codomain_size: int = 0
    counterexample: Optional[dict] = None
    elapsed_ms: int = 0

    @property
    def verified(self) -> bool:
        return self.status == "verified"

    def to_json_obj(self) -> dict:
        out = {
            "check": self.check,
            "params": _jsonable(self.params),
            "cap": self.cap,
            "status": self.status,
            "domain_size": self.domain_size,
            "codomain_size": self.codomain_size,
            "elapsed_ms": self.elapsed_ms,
        }
        if self.counterexample is not None:
            out["counterexample"] = _jsonable(self.counterexample)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)

    def summary(self) -> str:
        flag = "ok " if self.verified else "FAIL"
        args = " ".join(f"{k}={v}" for k, v in self.params.items())
        line = f"[{flag}] {self.check} {args}".rstrip()
        if self.cap is not None:
            line += f" cap={self.cap}"
        if not self.verified and self.counterexample:
            line += f" reason={self.counterexample.get('reason')}"
        return line


def _failure(check, params, cap, domain_size, codomain_size, element, image,
             reason, started) -> Certificate:
    return Certificate(
        check=check, params=dict(params), cap=cap, status="failed",
        domain_size=domain_size, codomain_size=codomain_size,
        counterexample={"element": element, "image": image, "reason": reason},
        elapsed_ms=int((time.monotonic() - started) * 1000))


def check_graded_bijection(map_fn: Callable[[Any], Any],
                           domain: Iterable,
                           codomain: Iterable,
                           weight_fn: Callable[[Any], LaurentPoly],
                           cap: Optional[int] = None,
                           check: str = "graded-bijection",
                           params: Optional[Mapping] = None) -> Certificate:
    """Exhaustively verify that map_fn is a weight-preserving bijection.

    domain and codomain must be complete enumerations of the two sides up
    to the weight cap.  Verifies, in order: every image lies in the
    codomain, images are pairwise distinct, each image's signed weight
    monomial equals its preimage's, and every codomain element is hit.
    """
    started = time.monotonic()
    params = dict(params or {})
    domain = list(domain)
    codomain = list(codomain)
    codomain_set = set(codomain)
    if len(codomain_set) != len(codomain):
        raise ValueError("codomain enumeration contains duplicates")
    seen: dict[Any, Any] = {}
    for x in domain:
        y = map_fn(x)
        if y not in codomain_set:
            return _failure(check, params, cap, len(domain), len(codomain),
                            x, y, REASON_NOT_IN_CODOMAIN, started)
        if y in seen:
            return _failure(check, params, cap, len(domain), len(codomain),
                            {"first": seen[y], "second": x}, y,
                            REASON_COLLISION, started)
        seen[y] = x
        if weight_fn(x) != weight_fn(y):
            return _failure(check, params, cap, len(domain), len(codomain),
                            x, y, REASON_WEIGHT_MISMATCH, started)
    missed = codomain_set - set(seen)
    if missed:
        target = min(missed, key=repr)
        return _failure(check, params, cap, len(domain), len(codomain),
                        None, target, REASON_NOT_SURJECTIVE, started)
    return Certificate(check=check, params=params, cap=cap,
                       domain_size=len(domain), codomain_size=len(codomain),
                       elapsed_ms=int((time.monotonic() - started) * 1000))


def telescoping_sum_check(f_counts: Mapping[int, LaurentPoly],
                          g_counts: Mapping[int, LaurentPoly],
                          h_counts: Mapping[int, LaurentPoly],
                          k_max: int,
                          k_min: int = 0,
                          check: str = "telescoping-sum",
                          params: Optional[Mapping] = None) -> Certificate:
    """Verify f(k) + h(k) = g(k) + h(k+1) for every index, and sum(f) = sum(g).

    The counts are weighted counts per index k (missing keys mean zero).
    Requires the telescoping boundary conditions: h vanishes at k_min and
    at every k > k_max, so summing the per-index relation over
    k_min..k_max makes the h terms cancel pairwise.
    """
    started = time.monotonic()
    params = dict(params or {})
    zero = LaurentPoly.zero()

    def at(counts, k):
        return counts.get(k, zero)

    if not at(h_counts, k_min).is_zero():
        return _failure(check, params, None, len(f_counts), len(g_counts),
                        {"k": k_min}, str(at(h_counts, k_min)),
                        "h-nonzero-at-start", started)
    for k in h_counts:
        if k > k_max and not h_counts[k].is_zero():
            return _failure(check, params, None, len(f_counts), len(g_counts),
                            {"k": k}, str(h_counts[k]),
                            "h-nonzero-beyond-kmax", started)
    for k in range(k_min, k_max + 1):
        lhs = at(f_counts, k) + at(h_counts, k)
        rhs = at(g_counts, k) + at(h_counts, k + 1)
        if lhs != rhs:
            return _failure(check, params, None, len(f_counts), len(g_counts),
                            {"k": k}, {"lhs": str(lhs), "rhs": str(rhs)},
                            "index-relation-violated", started)
    total_f = LaurentPoly.zero()
    total_g = LaurentPoly.zero()
    for k in range(k_min, k_max + 1):
        total_f = total_f + at(f_counts, k)
        total_g = total_g + at(g_counts, k)
    if total_f != total_g:
        return _failure(check, params, None, len(f_counts), len(g_counts),
                        "sum", {"lhs": str(total_f), "rhs": str(total_g)},
                        "sum-mismatch", started)
    return Certificate(check=check, params=params,
                       domain_size=len(f_counts), codomain_size=len(g_counts),
                       elapsed_ms=int((time.monotonic() - started) * 1000))


def cancelation_psi(phi: Callable[[Any], Any],
                    start: Any,
                    b_membership: Callable[[Any], bool],
                    max_iter: int) -> Any:
    """Iterate phi from start and return the first iterate landing in B.

    phi must be total on the union the orbit walks through.  Raises
    IterationBudgetExceeded after max_iter applications without landing,
    which signals a cycle or unbounded orbit in the supplied map.
    """
    if max_iter < 1:
        raise ValueError("max_iter must be at least 1")
    current = start
    for _ in range(max_iter):
        current = phi(current)
        if b_membership(current):
            return current
    raise IterationBudgetExceeded(
        f"no landing within {max_iter} applications starting from {start!r}")
