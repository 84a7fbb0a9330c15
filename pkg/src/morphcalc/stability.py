"""Stability normal forms for cell complexes under the rewrite R^j = 2*R^j + R^(j-1).

A cell complex is a quantity with non-negative integer R-coefficients and a
positive leading coefficient.  Both rewrite directions preserve the dimension
and the Euler characteristic, and every complex reduces to exactly one of
a * R^n (a >= 1) or R^n + b * R^(n-1) (b >= 1).  The closed form here reads
that final shape off the preserved pair; `rewrite_reachable` is the search
oracle that certifies it by an explicit rewrite path.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .quantity import (
    MorphError,
    MorphPoly,
    ZeroQuantity,
    classify,
    euler,
)


class InvalidComplex(MorphError):
    pass


class BoundExceeded(MorphError):
    """The search hit its step bound with the frontier still open."""


def dimension(q) -> int:
    q = _as_poly(q)
    if q.is_zero():
        raise ZeroQuantity("the zero quantity has no dimension")
    return q.degree()


def _as_poly(q) -> MorphPoly:
    if isinstance(q, CellComplex):
        return q.quantity()
    return q


class CellComplex:
    """Coefficient vector a0..an (leading first), a0 >= 1, the rest >= 0."""

    __slots__ = ("_by_exp",)

    def __init__(self, source):
        if isinstance(source, CellComplex):
            self._by_exp = source._by_exp
            return
        if isinstance(source, MorphPoly):
            if source.is_zero():
                raise InvalidComplex("the zero quantity is not a cell complex")
            if not classify(source).integrable:
                raise InvalidComplex(
                    "a cell complex needs non-negative integer R-coefficients "
                    "with positive leading coefficient"
                )
            rc = source.r_coeffs()
            n = max(rc)
            self._by_exp = tuple(int(rc.get(j, 0)) for j in range(n + 1))
            return
        coeffs = [int(c) for c in source]  # leading first
        if not coeffs or coeffs[0] < 1 or any(c < 0 for c in coeffs):
            raise InvalidComplex("leading coefficient must be >= 1, the rest >= 0")
        self._by_exp = tuple(reversed(coeffs))

    @property
    def coefficients(self) -> tuple:
        return tuple(reversed(self._by_exp))

    def quantity(self) -> MorphPoly:
        return MorphPoly.from_r_coeffs(dict(enumerate(self._by_exp)))

    def dimension(self) -> int:
        return len(self._by_exp) - 1

    def euler(self) -> int:
        return sum(c if j % 2 == 0 else -c for j, c in enumerate(self._by_exp))

    def total(self) -> int:
        return sum(self._by_exp)

    def __eq__(self, other):
        return isinstance(other, CellComplex) and self._by_exp == other._by_exp

    def __hash__(self):
        return hash(self._by_exp)

    def __repr__(self):
        return f"CellComplex({list(self.coefficients)})"


@dataclass(frozen=True)
class NormalForm:
    dimension: int
    kind: str  # "pure_top" -> count * R^n, "top_plus" -> R^n + count * R^(n-1)
    count: int

    def quantity(self) -> MorphPoly:
        n = self.dimension
        if self.kind == "pure_top":
            return MorphPoly.from_r_coeffs({n: self.count})
        return MorphPoly.from_r_coeffs({n: 1, n - 1: self.count})

    def euler(self) -> int:
        sign = -1 if self.dimension % 2 else 1
        if self.kind == "pure_top":
            return sign * self.count
        return sign - sign * self.count

    def describe(self) -> str:
        n = self.dimension
        top = "R" if n == 1 else f"R^{n}"
        if n == 0:
            return str(self.count)
        if self.kind == "pure_top":
            return top if self.count == 1 else f"{self.count}*{top}"
        low = "1" if n == 1 else ("R" if n == 2 else f"R^{n - 1}")
        lowterm = low if self.count == 1 and n > 1 else (
            str(self.count) if n == 1 else f"{self.count}*{low}"
        )
        return f"{top} + {lowterm}"


def stable_normal_form(c) -> NormalForm:
    """Final shape of a cell complex, read off (dimension, Euler characteristic)."""
    c = c if isinstance(c, CellComplex) else CellComplex(c)
    n = c.dimension()
    e = c.euler()
    sign = -1 if n % 2 else 1
    a = sign * e
    if a >= 1:
        return NormalForm(dimension=n, kind="pure_top", count=a)
    b = 1 - a
    return NormalForm(dimension=n, kind="top_plus", count=b)


def rewrite_neighbors(state: tuple):
    """States one rewrite away; `state` indexed by R-exponent, ascending."""
    n = len(state) - 1
    out = []
    for j in range(1, n + 1):
        if state[j] >= 1:
            t = list(state)
            t[j] += 1
            t[j - 1] += 1
            out.append(tuple(t))
        if state[j] >= 2 and state[j - 1] >= 1:
            t = list(state)
            t[j] -= 1
            t[j - 1] -= 1
            out.append(tuple(t))
    return out


def default_step_bound(c: CellComplex) -> int:
    return 10 * c.total()


def rewrite_reachable(q1, q2, step_bound=None) -> bool:
    """Breadth-first search: can q2 be rewritten from q1 within step_bound steps?

    Returns False definitively when an invariant rules reachability out or the
    component is exhausted; raises BoundExceeded when the bound cuts the search
    off with the frontier still open.
    """
    c1 = q1 if isinstance(q1, CellComplex) else CellComplex(q1)
    c2 = q2 if isinstance(q2, CellComplex) else CellComplex(q2)
    if step_bound is None:
        step_bound = default_step_bound(c1)
    if step_bound < 1:
        raise ValueError("step_bound must be positive")
    if c1 == c2:
        return True
    if c1.dimension() != c2.dimension() or c1.euler() != c2.euler():
        return False

    start, goal = c1._by_exp, c2._by_exp
    seen = {start}
    frontier = deque([start])
    for _ in range(step_bound):
        if not frontier:
            return False
        next_frontier = deque()
        while frontier:
            state = frontier.popleft()
            for nxt in rewrite_neighbors(state):
                if nxt in seen:
                    continue
                if nxt == goal:
                    return True
                seen.add(nxt)
                next_frontier.append(nxt)
        frontier = next_frontier
    if not frontier:
        return False
    raise BoundExceeded(f"no rewrite path of length <= {step_bound} found")
