"""Grassmann division and factorization into catalog irreducibles.

The factor dictionary holds the quantities that act as irreducibles here:
stereographic spheres R^k + 1, even real projective spaces, complex and
quaternionic projective spaces, phantom planes R^(2m) - R^m + 1, and the
middle factors sum(R^(i*k)) of the repeated-suspension identities (s + 1
prime so they do not split into smaller factors of the same shape).

Greedy order: strip powers of R, then try candidates by descending degree
(family order breaks ties), restarting after every hit.  Odd real projective
spaces are intentionally not scanned: RP^(2m+1) = (R + 1) * CP^m, and which
CP the stray (R + 1) belongs to only becomes clear at the end, so leftover
(R + 1) factors are merged into the smallest emitted CP afterwards.  This
deterministic order reproduces all the worked Grassmannian tables.
"""

from __future__ import annotations

from dataclasses import dataclass

from .quantity import (
    MorphError,
    MorphPoly,
    NonZeroRemainder,
    classify,
    div_exact,
    render,
)
from .catalog import (
    BadParams,
    gaussian_binomial,
    grassmannian,
    phantom,
    poincare_sphere,
    projective,
    sphere,
)

R = MorphPoly.line()


class NotIntegerType(MorphError):
    pass


FIELD_STEPS = {"real": 1, "complex": 2, "quaternionic": 4}


def grassmann_divide(field: str, n: int, k: int) -> MorphPoly:
    """Quotient of the k nested frame spheres by the frame spheres of a k-plane."""
    if field not in FIELD_STEPS:
        raise BadParams(f"field must be one of {sorted(FIELD_STEPS)}")
    if not 0 < k < n:
        raise BadParams("grassmann_divide needs 0 < k < n")
    return grassmannian(n, k, FIELD_STEPS[field])


@dataclass(frozen=True)
class Factor:
    name: str  # catalog id, or None for a raw polynomial factor
    params: tuple
    poly: MorphPoly
    multiplicity: int

    def display(self) -> str:
        if self.name is not None:
            base = f"{self.name}({','.join(str(p) for p in self.params)})"
        elif self.poly == R:
            base = "R"
        else:
            base = f"({render(self.poly, 'r')})"
        return base if self.multiplicity == 1 else f"{base}^{self.multiplicity}"


@dataclass(frozen=True)
class FactorizationResult:
    factors: tuple
    residual: MorphPoly

    def product(self) -> MorphPoly:
        total = MorphPoly.constant(1)
        for f in self.factors:
            total = total * f.poly ** f.multiplicity
        return total * self.residual

    def display(self) -> str:
        if not self.factors:
            return f"residual: {render(self.residual, 'r')}"
        text = " * ".join(f.display() for f in self.factors)
        if self.residual != 1:
            text += f"  [residual: {render(self.residual, 'r')}]"
        return text


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


_FAMILY_RANK = {"SS": 0, "RP": 1, "CP": 2, "HP": 3, "hopf": 4, "Ph": 5}


def _dictionary(max_degree: int):
    """Candidate factors of degree <= max_degree, best tried first."""
    out = []
    for k in range(2, max_degree + 1):
        out.append(("SS", (k,), poincare_sphere(k)))
    for m in range(1, max_degree // 2 + 1):
        out.append(("RP", (2 * m,), projective(2 * m, 1)))
    for k in range(2, max_degree // 2 + 1):
        out.append(("CP", (k,), projective(k, 2)))
    for k in range(2, max_degree // 4 + 1):
        out.append(("HP", (k,), projective(k, 4)))
    for k in range(3, max_degree + 1):
        if k == 4:
            continue  # coincides with the quaternionic projective family
        s = 2
        while s * k <= max_degree:
            if _is_prime(s + 1):
                middle = MorphPoly.from_r_coeffs({i * k: 1 for i in range(s + 1)})
                out.append((None, (s, k), middle))
            s += 1
    for m in range(1, max_degree // 2 + 1):
        name = {1: "RPh", 2: "CPh", 4: "HPh"}.get(m)
        out.append((name, (2,) if name else (m,), phantom(2, m)))
    def rank(item):
        name, _, poly = item
        family = name if name in ("SS", "RP", "CP", "HP") else (
            "Ph" if name in ("RPh", "CPh", "HPh") or (name is None and len(poly.p_coeffs()) > 0 and _looks_phantom(poly)) else "hopf"
        )
        return (-poly.degree(), _FAMILY_RANK[family])
    return sorted(out, key=rank)


def _looks_phantom(poly: MorphPoly) -> bool:
    rc = poly.r_coeffs()
    if len(rc) != 3:
        return False
    d = max(rc)
    return d % 2 == 0 and rc.get(d) == 1 and rc.get(d // 2) == -1 and rc.get(0) == 1


def _divides(q: MorphPoly, d: MorphPoly):
    try:
        return div_exact(q, d)
    except NonZeroRemainder:
        return None


def factor_into_catalog(q: MorphPoly) -> FactorizationResult:
    """Greedy exact division by the factor dictionary; leftover is the residual."""
    if not classify(q).integer_type:
        raise NotIntegerType(f"{render(q, 'r')} is not of integer type")

    found = []  # (name, params, poly) with repetition

    # powers of R first: strip the lowest R-exponent
    current = q
    rc = current.r_coeffs()
    low = min(rc)
    for _ in range(low):
        current = div_exact(current, R)
        found.append((None, (), R))

    candidates = _dictionary(current.degree()) if not current.is_zero() else []
    progress = True
    while progress and current.degree() > 0:
        progress = False
        for name, params, poly in candidates:
            if poly.degree() > current.degree():
                continue
            quotient = _divides(current, poly)
            if quotient is not None:
                found.append((name, params, poly))
                current = quotient
                progress = True
                break

    # trailing halfline circles: RP^1 = R + 1
    rp1 = projective(1, 1)
    spare = 0
    while current.degree() > 0:
        quotient = _divides(current, rp1)
        if quotient is None:
            break
        spare += 1
        current = quotient

    # each spare (R + 1) merges with the smallest CP into an odd RP
    merged = []
    cps = sorted(
        (f for f in found if f[0] == "CP"), key=lambda f: f[1][0]
    )
    for f in found:
        if f[0] == "CP" and spare and cps and f is cps[0]:
            m = f[1][0]
            merged.append(("RP", (2 * m + 1,), projective(2 * m + 1, 1)))
            spare -= 1
            cps.pop(0)
        else:
            merged.append(f)
    for _ in range(spare):
        merged.append(("RP", (1,), rp1))

    # collate multiplicities, preserving first-seen order
    order = []
    counts = {}
    for name, params, poly in merged:
        key = (name, params, poly)
        if key not in counts:
            order.append(key)
            counts[key] = 0
        counts[key] += 1
    factors = tuple(
        Factor(name=name, params=params, poly=poly, multiplicity=counts[(name, params, poly)])
        for name, params, poly in order
    )
    return FactorizationResult(factors=factors, residual=current)


# -- periodicity of the real Grassmann factorizations ----------------------


def _shape_token(poly: MorphPoly, n: int):
    """Coarse shape class of a factor, with degree offset where it is stable.

    Suspension-type factors (R^k + 1 for k >= 3 and the middle factors of the
    repeated-suspension identities) are dressing that accumulates with n, so
    they are dropped from the signature.
    """
    rc = poly.r_coeffs()
    deg = poly.degree() if not poly.is_zero() else 0
    if poly == R:
        return ("R", deg - n)
    for m in range(1, deg + 1):
        if poly == projective(m, 2):
            return ("CP", deg - n)
    for m in range(1, deg // 4 + 1):
        if poly == projective(m, 4):
            return ("HP", deg - n)
    for m in range(1, deg + 1):
        if poly == projective(m, 1):
            return ("RPe" if m % 2 == 0 else "RPo", deg - n)
    if _looks_phantom(poly):
        return ("Ph",)
    # suspension-type: every R-exponent a multiple of some k >= 3, coefficients 1
    exps = sorted(rc)
    if all(c == 1 for c in rc.values()) and len(exps) >= 2:
        step = exps[1] - exps[0]
        if step >= 3 and exps == list(range(0, deg + 1, step)):
            return None
    return ("other", deg - n)


@dataclass(frozen=True)
class PeriodicityReport:
    k: int
    entries: tuple  # ((n, signature, factor_display), ...)
    period: int     # 0 when no period detected

    def groups(self):
        by_sig = {}
        for n, sig, _ in self.entries:
            by_sig.setdefault(sig, []).append(n)
        return by_sig

    def records(self):
        return [(n, "|".join(sig)) for n, sig, _ in self.entries]

    def to_text(self) -> str:
        lines = [f"factor shapes of the real Grassmannians, k = {self.k}"]
        for n, sig, disp in self.entries:
            lines.append(f"n = {n:2d}  signature {'|'.join(sig)}  factors {disp}")
        lines.append("groups:")
        for sig, ns in sorted(self.groups().items()):
            lines.append(f"  {'|'.join(sig)}  <-  n in {ns}")
        if self.period:
            lines.append(f"detected period: {self.period}")
        else:
            lines.append("no period detected in range")
        return "\n".join(lines)


def _signature(result: FactorizationResult, n: int):
    tokens = []
    for f in result.factors:
        token = _shape_token(f.poly, n)
        if token is not None:
            tokens.extend([token] * f.multiplicity)
    if result.residual != 1:
        tokens.append(("residual", render(result.residual, "r")))

    def fmt(t):
        if len(t) == 1:
            return t[0]
        return f"{t[0]}{t[1]:+d}" if isinstance(t[1], int) else f"{t[0]}:{t[1]}"

    return tuple(sorted(fmt(t) for t in tokens))


def periodicity_scan(k: int, n_range) -> PeriodicityReport:
    """Factor grassmann_divide(real, n, k) across n_range and group by shape."""
    if k not in (2, 3):
        raise BadParams("periodicity_scan handles k = 2 and k = 3")
    lo, hi = min(n_range), max(n_range)
    if lo <= k or hi > 16:
        raise BadParams("range must stay within k < n <= 16")
    entries = []
    sigs = {}
    for n in range(lo, hi + 1):
        result = factor_into_catalog(grassmann_divide("real", n, k))
        sig = _signature(result, n)
        sigs[n] = sig
        entries.append((n, sig, result.display()))
    period = 0
    for p in range(1, hi - lo + 1):
        if all(sigs[n] == sigs[n + p] for n in range(lo, hi - p + 1)):
            period = p
            break
    return PeriodicityReport(k=k, entries=tuple(entries), period=period)
