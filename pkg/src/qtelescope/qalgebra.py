"""Exact sparse arithmetic for bivariate Laurent polynomials in (z, q).

Everything here is integer-exact: coefficients are Python ints (arbitrary
precision), exponents are signed ints, and there is no floating point or
division anywhere.  Polynomials are immutable and kept in canonical form
(no stored zero coefficients), so equality is plain structural equality.

The module also provides the closed-form building blocks used by the
verification drivers: Gaussian (q-binomial) coefficients in base q^step,
finite products of (1 +/- z^a q^b) factors, and the alternating square
sum that Andrews' identity evaluates to.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Union


class LaurentPoly:
    """A sparse Laurent polynomial in z and q with integer coefficients.

    Terms are stored as a map (z_exp, q_exp) -> coefficient with all zero
    coefficients dropped, so two polynomials are equal iff their term maps
    are equal.  Instances are immutable; all arithmetic returns new values.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping, Iterable, None] = None):
        clean: dict[tuple[int, int], int] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for (z, q), c in items:
                if c:
                    acc = clean.get((z, q), 0) + c
                    if acc:
                        clean[(z, q)] = acc
                    else:
                        clean.pop((z, q), None)
        self._terms = clean

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, coeff: int, z: int = 0, q: int = 0) -> "LaurentPoly":
        """The single-term polynomial coeff * z**z_exp * q**q_exp."""
        return cls({(z, q): coeff})

    def terms(self) -> Iterator[tuple[int, int, int]]:
        """Yield (z_exp, q_exp, coeff) sorted lexicographically by (z, q)."""
        for (z, q) in sorted(self._terms):
            yield z, q, self._terms[(z, q)]

    def coeff(self, z: int = 0, q: int = 0) -> int:
        return self._terms.get((z, q), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_z_free(self) -> bool:
        return all(z == 0 for (z, _q) in self._terms)

    def num_terms(self) -> int:
        return len(self._terms)

    def total_at_one(self) -> int:
        """Sum of all coefficients, i.e. the evaluation at z = q = 1."""
        return sum(self._terms.values())

    def q_degree_range(self) -> tuple[int, int]:
        """(min, max) q-exponent over the support; raises on the zero polynomial."""
        if not self._terms:
            raise ValueError("zero polynomial has no degree range")
        exps = [q for (_z, q) in self._terms]
        return min(exps), max(exps)

    def stretch_q(self, factor: int) -> "LaurentPoly":
        """Substitute q -> q**factor (multiply every q-exponent by factor)."""
        return LaurentPoly({(z, q * factor): c for (z, q), c in self._terms.items()})

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self._terms)
        for key, c in other._terms.items():
            acc = out.get(key, 0) + c
            if acc:
                out[key] = acc
            else:
                out.pop(key, None)
        res = LaurentPoly.__new__(LaurentPoly)
        res._terms = out
        return res

    def __neg__(self) -> "LaurentPoly":
        res = LaurentPoly.__new__(LaurentPoly)
        res._terms = {key: -c for key, c in self._terms.items()}
        return res

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union["LaurentPoly", int]) -> "LaurentPoly":
        if isinstance(other, int):
            res = LaurentPoly.__new__(LaurentPoly)
            res._terms = {k: c * other for k, c in self._terms.items()} if other else {}
            return res
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[tuple[int, int], int] = {}
        for (z1, q1), c1 in self._terms.items():
            for (z2, q2), c2 in other._terms.items():
                key = (z1 + z2, q1 + q2)
                acc = out.get(key, 0) + c1 * c2
                if acc:
                    out[key] = acc
                else:
                    out.pop(key, None)
        res = LaurentPoly.__new__(LaurentPoly)
        res._terms = out
        return res

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers are not defined in this ring")
        out = LaurentPoly.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        return f"LaurentPoly({self._terms!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks = []
        for z, q, c in self.terms():
            factors = []
            if z:
                factors.append("z" if z == 1 else f"z^{z}")
            if q:
                factors.append("q" if q == 1 else f"q^{q}")
            if not factors or abs(c) != 1:
                factors.insert(0, str(abs(c)))
            body = "*".join(factors)
            chunks.append(("- " if c < 0 else "+ ") + body)
        first = chunks[0]
        first = "-" + first[2:] if first.startswith("- ") else first[2:]
        return " ".join([first] + chunks[1:])

    def to_json_obj(self) -> list[dict]:
        """Portable form: [{z, q, c}] sorted by (z, q), c as decimal string."""
        return [{"z": z, "q": q, "c": str(c)} for z, q, c in self.terms()]

    @classmethod
    def from_json_obj(cls, obj: list[dict]) -> "LaurentPoly":
        return cls({(int(t["z"]), int(t["q"])): int(t["c"]) for t in obj})


ZERO = LaurentPoly.zero()
ONE = LaurentPoly.one()


class TruncatedSeries:
    """A q-power series known exactly on exponents 0..cap (z-free).

    Stored sparsely as exponent -> coefficient with zeros dropped.
    Arithmetic on two series keeps the minimum of their caps; coefficients
    above the cap are discarded, never invented.
    """

    __slots__ = ("cap", "_coeffs")

    def __init__(self, cap: int, coeffs: Union[Mapping[int, int], None] = None):
        if cap < 0:
            raise ValueError("cap must be nonnegative")
        self.cap = cap
        clean: dict[int, int] = {}
        if coeffs:
            for e, c in coeffs.items():
                if e < 0:
                    raise ValueError(f"negative exponent {e} in truncated series")
                if c and e <= cap:
                    clean[e] = clean.get(e, 0) + c
                    if not clean[e]:
                        del clean[e]
        self._coeffs = clean

    @classmethod
    def constant(cls, value: int, cap: int) -> "TruncatedSeries":
        return cls(cap, {0: value})

    def coeff(self, e: int) -> int:
        if e > self.cap:
            raise ValueError(f"exponent {e} beyond cap {self.cap}")
        return self._coeffs.get(e, 0)

    def coeffs(self) -> dict[int, int]:
        return dict(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def restrict(self, cap: int) -> "TruncatedSeries":
        """Drop knowledge above a smaller cap."""
        if cap > self.cap:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(cap, {e: c for e, c in self._coeffs.items() if e <= cap})

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        cap = min(self.cap, other.cap)
        out = {e: c for e, c in self._coeffs.items() if e <= cap}
        for e, c in other._coeffs.items():
            if e <= cap:
                acc = out.get(e, 0) + c
                if acc:
                    out[e] = acc
                else:
                    out.pop(e, None)
        res = TruncatedSeries.__new__(TruncatedSeries)
        res.cap, res._coeffs = cap, out
        return res

    def __neg__(self) -> "TruncatedSeries":
        res = TruncatedSeries.__new__(TruncatedSeries)
        res.cap = self.cap
        res._coeffs = {e: -c for e, c in self._coeffs.items()}
        return res

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union["TruncatedSeries", "LaurentPoly", int]):
        if isinstance(other, int):
            res = TruncatedSeries.__new__(TruncatedSeries)
            res.cap = self.cap
            res._coeffs = {e: c * other for e, c in self._coeffs.items()} if other else {}
            return res
        if isinstance(other, LaurentPoly):
            return self.mul_poly(other)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        cap = min(self.cap, other.cap)
        out: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                if e <= cap:
                    acc = out.get(e, 0) + c1 * c2
                    if acc:
                        out[e] = acc
                    else:
                        out.pop(e, None)
        res = TruncatedSeries.__new__(TruncatedSeries)
        res.cap, res._coeffs = cap, out
        return res

    __rmul__ = __mul__

    def mul_poly(self, p: LaurentPoly) -> "TruncatedSeries":
        """Multiply by a z-free polynomial with nonnegative q-exponents.

        The cap is unchanged; anything pushed above it is dropped.
        """
        out: dict[int, int] = {}
        for z, d, c in p.terms():
            if z != 0:
                raise ValueError("polynomial factor must be z-free")
            if d < 0:
                raise ValueError("polynomial factor must have nonnegative q-exponents")
            for e, s in self._coeffs.items():
                key = e + d
                if key <= self.cap:
                    acc = out.get(key, 0) + c * s
                    if acc:
                        out[key] = acc
                    else:
                        out.pop(key, None)
        res = TruncatedSeries.__new__(TruncatedSeries)
        res.cap, res._coeffs = self.cap, out
        return res

    def first_mismatch(self, other: "TruncatedSeries", window: Union[int, None] = None):
        """Smallest exponent <= window where the two series differ, else None.

        The window defaults to the smaller cap and is clamped to it.
        """
        limit = min(self.cap, other.cap)
        if window is not None:
            limit = min(limit, window)
        for e in range(limit + 1):
            if self._coeffs.get(e, 0) != other._coeffs.get(e, 0):
                return e
        return None

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.cap == other.cap and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.cap, frozenset(self._coeffs.items())))

    def __repr__(self) -> str:
        return f"TruncatedSeries(cap={self.cap}, coeffs={self._coeffs!r})"

    def __str__(self) -> str:
        if not self._coeffs:
            return f"0 + O(q^{self.cap + 1})"
        body = str(LaurentPoly({(0, e): c for e, c in self._coeffs.items()}))
        return f"{body} + O(q^{self.cap + 1})"


def truncate(p: LaurentPoly, cap: int) -> TruncatedSeries:
    """View a z-free polynomial with nonnegative q-exponents as a series.

    Coefficients of q^0 .. q^cap are retained; anything above is dropped.
    Raises ValueError if p involves z or negative q-exponents.
    """
    coeffs: dict[int, int] = {}
    for z, q, c in p.terms():
        if z != 0:
            raise ValueError("cannot truncate: polynomial is not z-free")
        if q < 0:
            raise ValueError("cannot truncate: negative q-exponent present")
        if q <= cap:
            coeffs[q] = c
    return TruncatedSeries(cap, coeffs)


@lru_cache(maxsize=None)
def gaussian_binomial(n: int, k: int, step: int = 1) -> LaurentPoly:
    """The Gaussian coefficient [n choose k] in base q**step.

    Computed division-free by the Pascal-type recurrence
    [n, k] = [n-1, k-1] + q^(step*k) [n-1, k], with [n, 0] = 1.
    Returns the zero polynomial when k < 0 or k > n.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if step < 1:
        raise ValueError("step must be positive")
    if k < 0 or k > n:
        return ZERO
    if k == 0 or k == n:
        return ONE
    shifted = LaurentPoly.monomial(1, 0, step * k) * gaussian_binomial(n - 1, k, step)
    return gaussian_binomial(n - 1, k - 1, step) + shifted


def factor_product(count: int, sign: int, z_exp: int, q_offset: int,
                   q_step: int) -> LaurentPoly:
    """Expand prod_{i=0}^{count-1} (1 + sign * z^z_exp * q^(q_offset + i*q_step)).

    count = 0 gives 1.  sign must be +1 or -1, q_step positive.
    """
    if count < 0:
        raise ValueError("count must be nonnegative")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if q_step < 1:
        raise ValueError("q_step must be positive")
    out = ONE
    for i in range(count):
        factor = ONE + LaurentPoly.monomial(sign, z_exp, q_offset + i * q_step)
        out = out * factor
    return out


def rhs_andrews(n: int) -> LaurentPoly:
    """The alternating square sum (-1)^n q^(n^2) sum_{j=-n}^{n} (-1)^j q^(-j^2).

    A z-free polynomial with q-exponents running from 0 (at j = +-n)
    up to n^2 (at j = 0).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    terms: dict[tuple[int, int], int] = {}
    for j in range(n + 1):
        coeff = (2 if j > 0 else 1) * (-1) ** (n + j)
        terms[(0, n * n - j * j)] = coeff
    return LaurentPoly(terms)
