"""Triples (staircase, distinct-part, even-part) and the constructions that
verify the polynomial form of Andrews' parity identity,

    sum_{k=0}^{n} (q^(n-k+1); q)_{2k} / (q^2; q^2)_k * q^C(n-k,2)
        = (-1)^n q^(n^2) sum_{j=-n}^{n} (-1)^j q^(-j^2),

coefficient by coefficient.  The k-th summand is the signed weighted count
of the family

    P(n,k) = { (tau, lam, mu) : tau the staircase with n-k rows (zero part
               included), lam strictly decreasing with parts in
               [n-k+1, n+k], mu even with largest part <= 2k }

with weight (-1)^len(lam) * q^(|tau| + |lam| + |mu|).  For 0 <= k <= n-2
a weight-preserving bijection lowers n by one (picking up markers
q^(2n-1) / q^(2n-3)); for k in {n-1, n} a sign-reversing involution with
invariant set P(n-1,k-1) does the same job.  Summing over k gives

    F_n + (q^(2n-1) - 1) F_{n-1} - q^(2n-3) F_{n-2} = 0,

which pins F_n to the alternating square sum above.
"""

from __future__ import annotations

import enum
import time
from bisect import bisect_right
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .partitions import (EMPTY, Partition, enum_distinct_range,
                         enum_even_capped, staircase)
from .qalgebra import LaurentPoly, TruncatedSeries, rhs_andrews, truncate
from .telescope import Certificate, MarkedObject, check_graded_bijection


@dataclass(frozen=True, slots=True)
class Triple:
    """A staircase tau, a distinct-part lam, and an even-part mu.

    Signed weight: (-1)^len(lam) * q^(|tau| + |lam| + |mu|).
    """

    tau: Partition
    lam: Partition
    mu: Partition

    @property
    def total_weight(self) -> int:
        return self.tau.weight + self.lam.weight + self.mu.weight

    @property
    def sign(self) -> int:
        return -1 if self.lam.length % 2 else 1

    def weight(self) -> LaurentPoly:
        return LaurentPoly.monomial(self.sign, 0, self.total_weight)

    def to_json_obj(self) -> dict:
        return {"tau": self.tau.to_json_obj(), "lambda": self.lam.to_json_obj(),
                "mu": self.mu.to_json_obj()}


TripleValue = Union[Triple, MarkedObject]


class ClassTag(enum.Enum):
    """Which of the four pieces of the domain / codomain split a triple is in."""

    EMBEDDED = "embedded"
    A = "A"
    B = "B"
    C = "C"
    A_PRIME = "A'"
    B_PRIME = "B'"
    C_PRIME = "C'"
    D = "D"


def weight_of(x: TripleValue) -> LaurentPoly:
    """Signed weight monomial; markers contribute q^marker and no sign."""
    if isinstance(x, MarkedObject):
        return LaurentPoly.monomial(1, x.marker_z, x.marker_q) * weight_of(x.payload)
    return x.weight()


def total_weight_of(x: TripleValue) -> int:
    if isinstance(x, MarkedObject):
        return x.marker_q + total_weight_of(x.payload)
    return x.total_weight


def in_P(n: int, k: int, t: Triple) -> bool:
    """Membership in P(n,k); False outside 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        return False
    if t.tau != staircase(n - k):
        return False
    if not t.lam.has_distinct_parts():
        return False
    if t.lam.parts and (t.lam.last < n - k + 1 or t.lam.first > n + k):
        return False
    return t.mu.has_even_parts() and t.mu.first <= 2 * k


def enum_P(n: int, k: int, cap: int) -> list[Triple]:
    """All members of P(n,k) with total weight <= cap, deterministically ordered.

    tau and lam range over finite sets; mu is enumerated up to the weight
    left over under the cap.
    """
    if n < 0 or k < 0 or k > n or cap < 0:
        return []
    tau = staircase(n - k)
    if tau.weight > cap:
        return []
    mus = sorted(enum_even_capped(2 * k, cap - tau.weight),
                 key=lambda p: (p.weight, p.parts))
    mu_weights = [p.weight for p in mus]
    out = []
    for lam in enum_distinct_range(n - k + 1, n + k):
        budget = cap - tau.weight - lam.weight
        if budget < 0:
            continue
        for mu in mus[:bisect_right(mu_weights, budget)]:
            out.append(Triple(tau, lam, mu))
    out.sort(key=lambda t: (t.total_weight, t.tau.parts, t.lam.parts, t.mu.parts))
    return out


def classify(n: int, k: int, t: Triple) -> ClassTag:
    """Place a member of P(n,k), k >= 1, into its domain class.

    The four predicates are mutually exclusive and exhaustive, keyed on
    whether the two largest admissible lam values n+k and n+k-1 occur and
    on whether mu sits on its boundary 2k.
    """
    if k < 1:
        raise ValueError("classification needs k >= 1")
    if not in_P(n, k, t):
        raise ValueError(f"{t} is not in P({n},{k})")
    top = t.lam.contains(n + k)
    second = t.lam.contains(n + k - 1)
    if top and second:
        return ClassTag.C
    if top != second:
        return ClassTag.B
    if t.mu.first == 2 * k:
        return ClassTag.A
    return ClassTag.EMBEDDED


def classify_image(n: int, k: int, t: Triple) -> ClassTag:
    """Place a member of P(n-2,k) into its codomain class.

    Keyed on whether the two smallest admissible values n-k and n-k-1
    occur in lam and on whether mu sits on its boundary 2k.
    """
    if not in_P(n - 2, k, t):
        raise ValueError(f"{t} is not in P({n - 2},{k})")
    low = t.lam.contains(n - k)
    lower = t.lam.contains(n - k - 1)
    if low and lower:
        return ClassTag.C_PRIME if t.mu.first == 2 * k else ClassTag.D
    if low != lower:
        return ClassTag.B_PRIME
    return ClassTag.A_PRIME


def phi(n: int, k: int, x: TripleValue) -> TripleValue:
    """The n-lowering bijection at index k (0 <= k <= n-2).

    Domain: P(n,k) together with marker-(2n-1) copies of P(n-1,k-1).
    Codomain: P(n-1,k-1) together with marker-(2n-3) copies of P(n-2,k).
    Every case preserves the signed weight, markers included:

      k = 0:    drop two staircase rows, emit marker 2n-3
      embedded: the triple already lies in P(n-1,k-1); identity
      A:        drop two staircase rows and the first row of mu
      B:        drop two staircase rows; the one part from {n+k, n+k-1}
                shrinks by 2k
      C:        drop two staircase rows; both top parts shrink by 2k and
                mu gains a new part 2k
      marked:   drop two staircase rows; lam gains parts n-k and n-k-1
    """
    if not (0 <= k <= n - 2):
        raise ValueError(f"phi needs 0 <= k <= n-2, got n={n}, k={k}")
    marker_out = 2 * n - 3
    if isinstance(x, MarkedObject):
        if x.marker_q != 2 * n - 1 or x.marker_z != 0:
            raise ValueError(f"unexpected marker on {x}")
        t = x.payload
        if not in_P(n - 1, k - 1, t):
            raise ValueError(f"marked payload {t} is not in P({n - 1},{k - 1})")
        lam = t.lam.with_part(n - k).with_part(n - k - 1)
        return MarkedObject(marker_out, Triple(t.tau.drop_first_rows(2), lam, t.mu))
    t = x
    if not in_P(n, k, t):
        raise ValueError(f"{t} is not in P({n},{k})")
    if k == 0:
        return MarkedObject(marker_out,
                            Triple(t.tau.drop_first_rows(2), EMPTY, EMPTY))
    tag = classify(n, k, t)
    tau2 = t.tau.drop_first_rows(2)
    if tag is ClassTag.EMBEDDED:
        return t
    if tag is ClassTag.A:
        return MarkedObject(marker_out, Triple(tau2, t.lam, t.mu.drop_first()))
    if tag is ClassTag.B:
        part = n + k if t.lam.contains(n + k) else n + k - 1
        return MarkedObject(marker_out,
                            Triple(tau2, t.lam.replace_part(part, part - 2 * k), t.mu))
    lam = t.lam.replace_part(n + k, n - k).replace_part(n + k - 1, n - k - 1)
    return MarkedObject(marker_out, Triple(tau2, lam, t.mu.with_part(2 * k)))


def involution(n: int, k: int, x: TripleValue) -> TripleValue:
    """The sign-reversing involution at index k in {n-1, n}, n >= 2.

    Acts on P(n,k) together with marker-(2n-1) copies of P(n-1,k-1).
    With toggle = 2k and marker part 2n-1:

      (a) toggle in lam: move it to mu
      (b) toggle in mu but not lam: move one copy back to lam
      (c) no toggle anywhere and lam starts with 2n-1: strip that part
          and emit the marker
      (d) marked input: absorb the marker, insert part 2n-1 into lam
      (e) otherwise fixed; the fixed set is exactly the embedded copy
          of P(n-1,k-1)

    The toggle rules fire before the marker exchange.  Non-fixed points
    pair up with equal unsigned weight and opposite sign.
    """
    if n < 2 or k not in (n - 1, n):
        raise ValueError(f"involution needs n >= 2 and k in {{n-1, n}}, got {n},{k}")
    toggle = 2 * k
    marker_part = 2 * n - 1
    if isinstance(x, MarkedObject):
        if x.marker_q != marker_part or x.marker_z != 0:
            raise ValueError(f"unexpected marker on {x}")
        t = x.payload
        if not in_P(n - 1, k - 1, t):
            raise ValueError(f"marked payload {t} is not in P({n - 1},{k - 1})")
        return Triple(t.tau, t.lam.with_part(marker_part), t.mu)
    t = x
    if not in_P(n, k, t):
        raise ValueError(f"{t} is not in P({n},{k})")
    if t.lam.contains(toggle):
        return Triple(t.tau, t.lam.without_part(toggle), t.mu.with_part(toggle))
    if t.mu.contains(toggle):
        return Triple(t.tau, t.lam.with_part(toggle), t.mu.without_part(toggle))
    if t.lam.first == marker_part:
        return MarkedObject(marker_part,
                            Triple(t.tau, t.lam.without_part(marker_part), t.mu))
    return t


# slices and certificates --------------------------------------------------

def domain_slice(n: int, k: int, cap: int) -> list[TripleValue]:
    """P(n,k) plus marker-(2n-1) copies of P(n-1,k-1), all of weight <= cap."""
    marked = [MarkedObject(2 * n - 1, t)
              for t in enum_P(n - 1, k - 1, cap - (2 * n - 1))]
    return list(enum_P(n, k, cap)) + marked


def phi_certificate(n: int, k: int, cap: int) -> Certificate:
    """Exhaustive weight-graded bijection check of phi on a capped slice."""
    codomain = (list(enum_P(n - 1, k - 1, cap))
                + [MarkedObject(2 * n - 3, t)
                   for t in enum_P(n - 2, k, cap - (2 * n - 3))])
    return check_graded_bijection(
        lambda x: phi(n, k, x), domain_slice(n, k, cap), codomain, weight_of,
        cap=cap, check="andrews-phi", params={"n": n, "k": k})


def involution_certificate(n: int, k: int, cap: int) -> Certificate:
    """Check the involution laws on a capped slice.

    Verifies that applying the map twice is the identity, that non-fixed
    points pair with equal unsigned weight and opposite sign, and that
    the fixed set is exactly the embedded copy of P(n-1,k-1).
    """
    started = time.monotonic()
    params = {"n": n, "k": k}
    slice_ = domain_slice(n, k, cap)
    embedded = set(enum_P(n - 1, k - 1, cap))
    fixed = set()

    def fail(element, image, reason):
        return Certificate(
            check="andrews-involution", params=params, cap=cap, status="failed",
            domain_size=len(slice_), codomain_size=len(embedded),
            counterexample={"element": element, "image": image, "reason": reason},
            elapsed_ms=int((time.monotonic() - started) * 1000))

    for x in slice_:
        y = involution(n, k, x)
        if involution(n, k, y) != x:
            return fail(x, y, "not-involutive")
        if y == x:
            fixed.add(x)
            continue
        if total_weight_of(y) != total_weight_of(x):
            return fail(x, y, "weight-mismatch")
        if weight_of(y) != -weight_of(x):
            return fail(x, y, "sign-not-reversed")
    if fixed != embedded:
        witness = sorted(fixed ^ embedded, key=repr)[0]
        return fail(witness, None, "fixed-set-mismatch")
    return Certificate(check="andrews-involution", params=params, cap=cap,
                       domain_size=len(slice_), codomain_size=len(embedded),
                       elapsed_ms=int((time.monotonic() - started) * 1000))


# the weighted sums ---------------------------------------------------------

@lru_cache(maxsize=64)
def F_trunc(n: int, cap: int) -> TruncatedSeries:
    """Signed weighted count of the union of all P(n,k), truncated at cap.

    Sums the signed weight of every triple of total weight <= cap; the
    even-part components are pooled by weight so the double loop stays
    cheap at desk scale.
    """
    if n < 0 or cap < 0:
        raise ValueError("n and cap must be nonnegative")
    coeffs: dict[int, int] = {}
    for k in range(n + 1):
        tau_weight = staircase(n - k).weight
        if tau_weight > cap:
            continue
        mu_hist: dict[int, int] = {}
        for mu in enum_even_capped(2 * k, cap - tau_weight):
            mu_hist[mu.weight] = mu_hist.get(mu.weight, 0) + 1
        for lam in enum_distinct_range(n - k + 1, n + k):
            base = tau_weight + lam.weight
            if base > cap:
                continue
            sign = -1 if lam.length % 2 else 1
            for mu_w, count in mu_hist.items():
                w = base + mu_w
                if w <= cap:
                    coeffs[w] = coeffs.get(w, 0) + sign * count
    return TruncatedSeries(cap, coeffs)


def verify_andrews(n: int, cap: int, which: str) -> Certificate:
    """Check one of the three sum-level consequences at truncation cap.

    which = "identity": F_n equals the alternating square sum on [0, cap]
    which = "rec_fn":   F_n + (q^(2n-1) - 1) F_{n-1} - q^(2n-3) F_{n-2} = 0
    which = "gn":       F_n + q^(2n-1) F_{n-1} = 2
    The recurrence forms are compared on the window [0, cap - (2n-1)]
    because multiplying a capped series by q^(2n-1) forfeits the top
    coefficients; the certificate records the effective window.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if cap < n * n:
        raise ValueError(f"cap must be at least n^2 = {n * n}")
    started = time.monotonic()
    zero = TruncatedSeries(cap)
    if which == "identity":
        lhs = F_trunc(n, cap)
        rhs = truncate(rhs_andrews(n), cap)
        window = cap
        check = "andrews-identity"
    elif which == "rec_fn":
        if n < 2:
            raise ValueError("rec_fn needs n >= 2")
        shift = LaurentPoly.monomial(1, 0, 2 * n - 1) - LaurentPoly.one()
        lhs = (F_trunc(n, cap)
               + F_trunc(n - 1, cap).mul_poly(shift)
               - F_trunc(n - 2, cap).mul_poly(LaurentPoly.monomial(1, 0, 2 * n - 3)))
        rhs = zero
        window = cap - (2 * n - 1)
        check = "andrews-rec-fn"
    elif which == "gn":
        if n < 1:
            raise ValueError("gn needs n >= 1")
        lhs = (F_trunc(n, cap)
               + F_trunc(n - 1, cap).mul_poly(LaurentPoly.monomial(1, 0, 2 * n - 1)))
        rhs = TruncatedSeries.constant(2, cap)
        window = cap - (2 * n - 1)
        check = "andrews-gn"
    else:
        raise ValueError(f"unknown check {which!r}")
    params = {"n": n, "which": which, "window": window}
    mismatch = lhs.first_mismatch(rhs, window)
    elapsed = int((time.monotonic() - started) * 1000)
    if mismatch is not None:
        return Certificate(
            check=check, params=params, cap=cap, status="failed",
            counterexample={
                "element": {"q_exp": mismatch},
                "image": {"lhs": lhs.coeff(mismatch), "rhs": rhs.coeff(mismatch)},
                "reason": "coefficient-mismatch"},
            elapsed_ms=elapsed)
    return Certificate(check=check, params=params, cap=cap, elapsed_ms=elapsed)
