"""Catalog of named quantities for the classical manifolds and groups.

Every entry is a constructor from integer parameters to an exact quantity.
Quotient-defined entries run through exact division on purpose: a transcription
slip then surfaces as InternalDivisionFailed instead of a silently wrong
polynomial.  Independent combinatorial oracles (Schubert cell enumeration and
the Gaussian binomial recurrence) live here as well, next to the identity
families they cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .quantity import (
    MorphError,
    MorphPoly,
    NonZeroRemainder,
    div_exact,
)

R = MorphPoly.line()
P = MorphPoly.halfline()


class UnknownEntry(MorphError):
    pass


class BadParams(MorphError):
    pass


class InternalDivisionFailed(MorphError):
    pass


@lru_cache(maxsize=None)
def sphere(n: int) -> MorphPoly:
    """S^n = 2*(R^(n+1) - 1)/(R - 1): two cells in every dimension up to n."""
    if n < 0:
        raise BadParams("sphere dimension must be >= 0")
    return div_exact(2 * (R ** (n + 1) - 1), R - 1)


def poincare_sphere(n: int) -> MorphPoly:
    """The stereographic sphere R^n + 1."""
    if n < 0:
        raise BadParams("sphere dimension must be >= 0")
    return R ** n + 1


@lru_cache(maxsize=None)
def projective(n: int, step: int = 1) -> MorphPoly:
    # (R^(step*(n+1)) - 1) / (R^step - 1): RP^n, CP^n, HP^n for step 1, 2, 4
    if n < 0:
        raise BadParams("projective dimension must be >= 0")
    return div_exact(R ** (step * (n + 1)) - 1, R ** step - 1)


@lru_cache(maxsize=None)
def phantom(n: int, step: int = 1) -> MorphPoly:
    # (R^(step*(n+1)) + 1) / (R^step + 1) for even n: the phantom projective spaces
    if n < 0 or n % 2:
        raise BadParams("phantom projective spaces exist in even dimensions")
    return div_exact(R ** (step * (n + 1)) + 1, R ** step + 1)


def _product(factors) -> MorphPoly:
    total = MorphPoly.constant(1)
    for f in factors:
        total = total * f
    return total


@lru_cache(maxsize=None)
def orthogonal(n: int) -> MorphPoly:
    return _product(sphere(j) for j in range(n))


@lru_cache(maxsize=None)
def special_orthogonal(n: int) -> MorphPoly:
    return _product(sphere(j) for j in range(1, n))


@lru_cache(maxsize=None)
def general_linear(n: int) -> MorphPoly:
    return _product(R ** n - R ** j for j in range(n))


def unitary(n: int) -> MorphPoly:
    return _product(sphere(2 * j - 1) for j in range(1, n + 1))


def special_unitary(n: int) -> MorphPoly:
    return _product(sphere(2 * j - 1) for j in range(2, n + 1))


def symplectic(n: int) -> MorphPoly:
    return _product(sphere(4 * j - 1) for j in range(1, n + 1))


def stiefel(n: int, k: int) -> MorphPoly:
    return _product(sphere(n - j) for j in range(1, k + 1))


def stiefel_linear(n: int, k: int) -> MorphPoly:
    return _product(R ** n - R ** j for j in range(k))


@lru_cache(maxsize=None)
def grassmannian(n: int, k: int, step: int = 1) -> MorphPoly:
    num = _product(sphere(step * (n - j + 1) - 1) for j in range(1, k + 1))
    den = _product(sphere(step * j - 1) for j in range(1, k + 1))
    return div_exact(num, den)


def oriented_grassmannian(n: int, k: int) -> MorphPoly:
    return div_exact(stiefel(n, k), special_orthogonal(k))


_SPIN = {3: [3], 4: [3, 3], 5: [7, 3], 6: [7, 5, 3]}


def spin(m: int) -> MorphPoly:
    return _product(sphere(j) for j in _SPIN[m])


def conformal_compactification(p: int, q: int) -> MorphPoly:
    # recursion: Rbar(p, q) = R^(p+q) + Rbar(p-1, q-1)*R + 1, Rbar(p, 0) = R^p + 1
    if q == 0:
        return R ** p + 1
    return R ** (p + q) + conformal_compactification(p - 1, q - 1) * R + 1


def twistor_stereographic(p: int, q: int) -> MorphPoly:
    # recursion: TT(p, q) = C^(p+q-2)*R + TT(p-1, q-1)*C + 1, TT(p, 1) = C^(p-1)*R + 1
    C = R ** 2
    if q == 1:
        return C ** (p - 1) * R + 1
    return C ** (p + q - 2) * R + twistor_stereographic(p - 1, q - 1) * C + 1


def compact_complex_sphere(m: int) -> MorphPoly:
    return div_exact(sphere(m + 1) * sphere(m), sphere(1))


def conic_compactification(m: int) -> MorphPoly:
    # the complex-coordinate compactification: CP^n * SS^(2n) for m = 2n, CP^m odd
    if m % 2 == 0:
        return projective(m // 2, step=2) * poincare_sphere(m)
    return projective(m, step=2)


def conic_open(m: int) -> MorphPoly:
    if m == 0:
        return MorphPoly.constant(2)
    return conic_compactification(m) - conic_compactification(m - 1)


@dataclass(frozen=True)
class EntrySpec:
    id: str
    arity: str
    validity: str
    citation: str
    check: callable
    build: callable

    def describe(self) -> str:
        return f"{self.id}({self.arity})  valid for {self.validity}"


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    params: tuple
    quantity: MorphPoly
    citation: str


def _fixed(k):
    return lambda ps: len(ps) == k


def _specs():
    C = R ** 2
    H = R ** 4
    rows = [
        ("S", "n", "n >= 0", "round sphere: two cells per dimension",
         lambda ps: _fixed(1)(ps) and ps[0] >= 0,
         lambda ps: sphere(ps[0])),
        ("SS", "n", "n >= 0", "stereographic sphere R^n + 1",
         lambda ps: _fixed(1)(ps) and ps[0] >= 0,
         lambda ps: poincare_sphere(ps[0])),
        ("RP", "n", "n >= 0", "real projective space",
         lambda ps: _fixed(1)(ps) and ps[0] >= 0,
         lambda ps: projective(ps[0], 1)),
        ("CP", "n", "n >= 0", "complex projective space",
         lambda ps: _fixed(1)(ps) and ps[0] >= 0,
         lambda ps: projective(ps[0], 2)),
        ("HP", "n", "n >= 0", "quaternionic projective space",
         lambda ps: _fixed(1)(ps) and ps[0] >= 0,
         lambda ps: projective(ps[0], 4)),
        ("RPh", "n", "even n >= 0", "phantom real projective space",
         lambda ps: _fixed(1)(ps) and ps[0] >= 0 and ps[0] % 2 == 0,
         lambda ps: phantom(ps[0], 1)),
        ("CPh", "n", "even n >= 0", "phantom complex projective space",
         lambda ps: _fixed(1)(ps) and ps[0] >= 0 and ps[0] % 2 == 0,
         lambda ps: phantom(ps[0], 2)),
        ("HPh", "n", "even n >= 0", "phantom quaternionic projective space",
         lambda ps: _fixed(1)(ps) and ps[0] >= 0 and ps[0] % 2 == 0,
         lambda ps: phantom(ps[0], 4)),
        ("O", "n", "n >= 0", "orthogonal group as nested frame spheres",
         lambda ps: _fixed(1)(ps) and ps[0] >= 0,
         lambda ps: orthogonal(ps[0])),
        ("SO", "n", "n >= 1", "special orthogonal group",
         lambda ps: _fixed(1)(ps) and ps[0] >= 1,
         lambda ps: special_orthogonal(ps[0])),
        ("GL", "n", "n >= 0", "general linear group",
         lambda ps: _fixed(1)(ps) and ps[0] >= 0,
         lambda ps: general_linear(ps[0])),
        ("SL", "n", "n >= 1", "special linear group GL(n)/(R - 1)",
         lambda ps: _fixed(1)(ps) and ps[0] >= 1,
         lambda ps: div_exact(general_linear(ps[0]), R - 1)),
        ("SOpq", "p,q", "p >= 1, q >= 1", "pseudo-orthogonal group O(p)*SO(q)*R^(p*q)",
         lambda ps: _fixed(2)(ps) and ps[0] >= 1 and ps[1] >= 1,
         lambda ps: orthogonal(ps[0]) * special_orthogonal(ps[1]) * R ** (ps[0] * ps[1])),
        ("U", "n", "n >= 0", "unitary group: odd spheres",
         lambda ps: _fixed(1)(ps) and ps[0] >= 0,
         lambda ps: unitary(ps[0])),
        ("SU", "n", "n >= 1", "special unitary group",
         lambda ps: _fixed(1)(ps) and ps[0] >= 1,
         lambda ps: special_unitary(ps[0])),
        ("Cstr", "n", "n >= 1", "complex structures SO(2n)/U(n): even spheres",
         lambda ps: _fixed(1)(ps) and ps[0] >= 1,
         lambda ps: _product(sphere(2 * j) for j in range(1, ps[0]))),
        ("Upq", "p,q", "p >= 1, q >= 1", "pseudo-unitary frames with flat factors",
         lambda ps: _fixed(2)(ps) and ps[0] >= 1 and ps[1] >= 1,
         lambda ps: _product(sphere(2 * j - 1) * R ** (2 * ps[1]) for j in range(1, ps[0] + 1))
         * unitary(ps[1])),
        ("Sp", "n", "n >= 0", "compact symplectic group: quaternionic frames",
         lambda ps: _fixed(1)(ps) and ps[0] >= 0,
         lambda ps: symplectic(ps[0])),
        ("Spin", "m", "m in 3..6", "spin group via low-dimensional isomorphisms",
         lambda ps: _fixed(1)(ps) and ps[0] in _SPIN,
         lambda ps: spin(ps[0])),
        ("SOspin", "m", "m in 3..6", "rotation group as Spin(m)/2",
         lambda ps: _fixed(1)(ps) and ps[0] in _SPIN,
         lambda ps: div_exact(spin(ps[0]), MorphPoly.constant(2))),
        ("V", "n,k", "0 <= k <= n", "Stiefel manifold of orthonormal k-frames",
         lambda ps: _fixed(2)(ps) and 0 <= ps[1] <= ps[0],
         lambda ps: stiefel(ps[0], ps[1])),
        ("VL", "n,k", "0 <= k <= n", "linearly independent k-frames",
         lambda ps: _fixed(2)(ps) and 0 <= ps[1] <= ps[0],
         lambda ps: stiefel_linear(ps[0], ps[1])),
        ("G", "n,k", "0 <= k <= n", "real Grassmannian of k-planes",
         lambda ps: _fixed(2)(ps) and 0 <= ps[1] <= ps[0],
         lambda ps: grassmannian(ps[0], ps[1], 1)),
        ("Gor", "n,k", "1 <= k <= n", "oriented Grassmannian",
         lambda ps: _fixed(2)(ps) and 1 <= ps[1] <= ps[0],
         lambda ps: oriented_grassmannian(ps[0], ps[1])),
        ("Gc", "n,k", "0 <= k <= n", "complex Grassmannian",
         lambda ps: _fixed(2)(ps) and 0 <= ps[1] <= ps[0],
         lambda ps: grassmannian(ps[0], ps[1], 2)),
        ("Gh", "n,k", "0 <= k <= n", "quaternionic Grassmannian",
         lambda ps: _fixed(2)(ps) and 0 <= ps[1] <= ps[0],
         lambda ps: grassmannian(ps[0], ps[1], 4)),
        ("Flag", "n,k1..ks", "0 < k1 < .. < ks < n", "flag manifold as nested Grassmannians",
         lambda ps: len(ps) >= 2
         and all(ps[i] < ps[i + 1] for i in range(1, len(ps) - 1))
         and 0 < ps[1] and ps[-1] < ps[0],
         lambda ps: _flag(ps[0], ps[1:])),
        ("NC", "n", "n >= 2", "nullcone 1 + S(n-1)*S(n-2)*Rp",
         lambda ps: _fixed(1)(ps) and ps[0] >= 2,
         lambda ps: 1 + sphere(ps[0] - 1) * sphere(ps[0] - 2) * P),
        ("CS", "m", "m >= 0", "complex sphere: sphere tangent bundle S(m)*R^m",
         lambda ps: _fixed(1)(ps) and ps[0] >= 0,
         lambda ps: sphere(ps[0]) * R ** ps[0]),
        ("CSbar", "m", "m >= 0", "compact complex sphere S(m+1)*S(m)/S(1)",
         lambda ps: _fixed(1)(ps) and ps[0] >= 0,
         lambda ps: compact_complex_sphere(ps[0])),
        ("CSS", "m", "m >= 0", "complex sphere, complex-coordinate count",
         lambda ps: _fixed(1)(ps) and ps[0] >= 0,
         lambda ps: conic_open(ps[0])),
        ("CSSbar", "m", "m >= 0", "compactified complex sphere, complex-coordinate count",
         lambda ps: _fixed(1)(ps) and ps[0] >= 0,
         lambda ps: conic_compactification(ps[0])),
        ("Spq", "a,b", "a, b >= 0", "projectivized nullcone S(a)*RP(b)",
         lambda ps: _fixed(2)(ps) and ps[0] >= 0 and ps[1] >= 0,
         lambda ps: sphere(ps[0]) * projective(ps[1], 1)),
        ("Rbar", "p,q", "p >= q >= 0", "conformal compactification of flat signature space",
         lambda ps: _fixed(2)(ps) and ps[0] >= ps[1] >= 0,
         lambda ps: conformal_compactification(ps[0], ps[1])),
        ("NG", "p,q,k", "p >= q >= k >= 1", "null Grassmannian G(p,k)*S(q-1)..S(q-k)",
         lambda ps: _fixed(3)(ps) and ps[0] >= ps[1] >= ps[2] >= 1,
         lambda ps: grassmannian(ps[0], ps[2], 1)
         * _product(sphere(ps[1] - j) for j in range(1, ps[2] + 1))),
        ("NGs", "p,q,k", "p >= q >= k >= 1", "stereographic null Grassmannian",
         lambda ps: _fixed(3)(ps) and ps[0] >= ps[1] >= ps[2] >= 1,
         lambda ps: grassmannian(ps[1], ps[2], 1)
         * _product(poincare_sphere(ps[0] - j) for j in range(1, ps[2] + 1))),
        ("NGn", "n,k", "n >= 2k >= 2", "null planes in complex n-space",
         lambda ps: _fixed(2)(ps) and ps[1] >= 1 and ps[0] >= 2 * ps[1],
         lambda ps: div_exact(
             _product(sphere(ps[0] - j) for j in range(1, 2 * ps[1] + 1)),
             unitary(ps[1]))),
        ("NGns", "n,k", "n >= 2k >= 2", "stereographic null planes in complex n-space",
         lambda ps: _fixed(2)(ps) and ps[1] >= 1 and ps[0] >= 2 * ps[1],
         lambda ps: div_exact(
             _product(conic_compactification(ps[0] - 2 * j) for j in range(1, ps[1] + 1)),
             _product(projective(i, 2) for i in range(1, ps[1])))),
        ("T", "p,q", "p, q >= 1", "twistor space S(2p-1)*CP(q-1)",
         lambda ps: _fixed(2)(ps) and ps[0] >= 1 and ps[1] >= 1,
         lambda ps: sphere(2 * ps[0] - 1) * projective(ps[1] - 1, 2)),
        ("TT", "p,q", "p >= q >= 1", "stereographic twistor space",
         lambda ps: _fixed(2)(ps) and ps[0] >= ps[1] >= 1,
         lambda ps: twistor_stereographic(ps[0], ps[1])),
        ("NGc", "p,q,k", "p >= q >= k >= 1", "null planes for the pseudo-hermitian form",
         lambda ps: _fixed(3)(ps) and ps[0] >= ps[1] >= ps[2] >= 1,
         lambda ps: div_exact(
             _product(sphere(2 * ps[0] - 2 * j + 1) * sphere(2 * ps[1] - 2 * j + 1)
                      for j in range(1, ps[2] + 1)),
             unitary(ps[2]))),
        ("NGcs", "p,q,k", "p >= q >= k >= 1", "stereographic pseudo-hermitian null planes",
         lambda ps: _fixed(3)(ps) and ps[0] >= ps[1] >= ps[2] >= 1,
         lambda ps: _product(poincare_sphere(2 * ps[0] - 2 * j + 1)
                             for j in range(1, ps[2] + 1))
         * grassmannian(ps[1], ps[2], 2)),
        ("LS", "p", "p >= 1", "Lie sphere S(p-1)*RP(1)",
         lambda ps: _fixed(1)(ps) and ps[0] >= 1,
         lambda ps: sphere(ps[0] - 1) * projective(1, 1)),
    ]
    return [EntrySpec(i, a, v, c, chk, bld) for i, a, v, c, chk, bld in rows]


def _flag(n, ks):
    chain = list(ks) + [n]
    total = MorphPoly.constant(1)
    for i in range(len(chain) - 1, 0, -1):
        total = total * grassmannian(chain[i], chain[i - 1], 1)
    return total


_REGISTRY = {spec.id.lower(): spec for spec in _specs()}


def registry() -> dict:
    return dict(_REGISTRY)


def registry_table():
    """Machine-readable registry rows: (id, arity, validity, citation)."""
    return [
        (spec.id, spec.arity, spec.validity, spec.citation)
        for spec in sorted(_REGISTRY.values(), key=lambda s: s.id)
    ]


def lookup(entry_id: str) -> EntrySpec:
    spec = _REGISTRY.get(entry_id.lower())
    if spec is None:
        raise UnknownEntry(f"unknown catalog entry {entry_id!r}")
    return spec


def catalog_quantity(entry_id: str, params) -> MorphPoly:
    return catalog_entry(entry_id, params).quantity


def catalog_entry(entry_id: str, params) -> CatalogEntry:
    spec = lookup(entry_id)
    params = tuple(int(p) for p in params)
    if not spec.check(params):
        raise BadParams(
            f"{spec.id}({spec.arity}) needs {spec.validity}; got {list(params)}"
        )
    try:
        q = spec.build(params)
    except NonZeroRemainder as exc:
        raise InternalDivisionFailed(
            f"{spec.id}{list(params)}: internal exact division failed: {exc}"
        ) from exc
    return CatalogEntry(id=spec.id, params=params, quantity=q, citation=spec.citation)


# -- independent oracles --------------------------------------------------


def schubert_cells(n: int, k: int):
    """Cell counts of the Grassmannian of k-planes in n-space, top dimension first.

    Brute force: every k-subset {j1 < .. < jk} of {1..n} is a pivot pattern and
    contributes a cell of dimension sum(j_i - i).
    """
    if not 0 < k < n:
        raise BadParams("schubert_cells needs 0 < k < n")
    top = k * (n - k)
    counts = [0] * (top + 1)
    for pivots in combinations(range(1, n + 1), k):
        dim = sum(j - i for i, j in enumerate(pivots, start=1))
        counts[dim] += 1
    return list(reversed(counts))


@lru_cache(maxsize=None)
def gaussian_binomial(n: int, k: int) -> MorphPoly:
    """Gaussian binomial in R by the Pascal-type recurrence C(n,k) = C(n-1,k-1) + R^k*C(n-1,k)."""
    if k < 0 or n < 0 or k > n:
        raise BadParams("gaussian_binomial needs 0 <= k <= n")
    if k == 0 or k == n:
        return MorphPoly.constant(1)
    return gaussian_binomial(n - 1, k - 1) + R ** k * gaussian_binomial(n - 1, k)


# -- identity families ----------------------------------------------------


def sphere_addition(p: int, q: int, r: int = None):
    """The sphere addition identity for a (p, q[, r]) block split, as a corpus record."""
    from .corpus import IdentityRecord  # local import: corpus builds on the parser
    from .lang import parse

    if p < 1 or q < 1 or (r is not None and r < 1):
        raise BadParams("sphere_addition needs positive block sizes")
    if r is None:
        lhs = f"S({p + q - 1})"
        rhs = (
            f"S({p - 1})*S({q - 1})*Rp + S({p - 1}) + S({q - 1})"
        )
        name = f"sphere-addition-{p}-{q}"
    else:
        lhs = f"S({p + q + r - 1})"
        pairs = [
            f"S({p - 1})*S({q - 1})*Rp",
            f"S({p - 1})*S({r - 1})*Rp",
            f"S({q - 1})*S({r - 1})*Rp",
        ]
        rhs = (
            f"S({p - 1})*S({q - 1})*S({r - 1})*Rp^2 + "
            + " + ".join(pairs)
            + f" + S({p - 1}) + S({q - 1}) + S({r - 1})"
        )
        name = f"sphere-addition-{p}-{q}-{r}"
    return IdentityRecord(
        name=name,
        lhs=parse(lhs),
        rhs=parse(rhs),
        expect="equal",
        citation="sphere addition",
        lhs_source=lhs,
        rhs_source=rhs,
    )


def hopf_family(s: int, k: int):
    """The repeated-suspension factorization S((s+1)k - 1) = (R^(sk) + .. + R^k + 1)*S(k-1)."""
    from .corpus import IdentityRecord
    from .lang import parse

    if s < 1 or k < 1:
        raise BadParams("hopf_family needs s >= 1 and k >= 1")
    powers = []
    for i in range(s, 0, -1):
        e = i * k
        powers.append("R" if e == 1 else f"R^{e}")
    lhs = f"S({(s + 1) * k - 1})"
    rhs = f"({' + '.join(powers)} + 1)*S({k - 1})"
    name = f"hopf-{s}-{k}"
    return IdentityRecord(
        name=name,
        lhs=parse(lhs),
        rhs=parse(rhs),
        expect="equal",
        citation="hopf factorization",
        lhs_source=lhs,
        rhs_source=rhs,
    )
