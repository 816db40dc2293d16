"""Defect-1 parameterization, the truncation map on it, the extremal
higher-Auslander algebras, and endomorphism algebras over selfinjective base
algebras."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .core import (
    Algebra,
    QuiverKind,
    UniserialModule,
    canonical_form,
    hom_dim,
    make_algebra,
    truncate_last_vertex,
)
from .errors import InternalError, InvalidParams, NotInDomain
from .homology import (
    INFINITY,
    domdim_algebra,
    global_dim,
    gorenstein_dim,
    proj_dim,
)


@dataclass(frozen=True)
class DOneParams:
    """The cycle algebra with series ``a`` repeated ``s`` times followed by
    ``a+1`` repeated ``n-s`` times; exactly the defect-1 cycle algebras."""

    n: int
    a: int
    s: int

    def __post_init__(self):
        if self.n < 2:
            raise InvalidParams(f"need n >= 2, got {self.n}")
        if self.a < 2:
            raise InvalidParams(f"need a >= 2, got {self.a}")
        if not 1 <= self.s <= self.n - 1:
            raise InvalidParams(f"need 1 <= s <= n-1, got s={self.s}, n={self.n}")


@dataclass(frozen=True)
class CLineMarker:
    """Marker for the line algebra ``[2,...,2,1]`` with ``n`` vertices."""

    n: int


def make_d1(p: DOneParams) -> Algebra:
    return make_algebra(QuiverKind.CYCLE, (p.a,) * p.s + (p.a + 1,) * (p.n - p.s))


def c_line(n: int) -> Algebra:
    """The unique defect-1 line algebra with ``n`` vertices."""
    if n < 2:
        raise InvalidParams(f"need n >= 2, got {n}")
    return make_algebra(QuiverKind.LINE, (2,) * (n - 1) + (1,))


def d1_params(a: Algebra) -> DOneParams | None:
    """Recover the normal-form parameters of a defect-1 cycle algebra.

    A cycle series has defect one iff it has a single descent, i.e. it is a
    rotation of the block form; any other algebra yields None.
    """
    if a.kind is not QuiverKind.CYCLE:
        return None
    n, c = a.n, a.c
    descents = [i for i in range(n) if c[(i - 1) % n] > c[i]]
    if len(descents) != 1:
        return None
    start = descents[0]
    rotated = c[start:] + c[:start]
    low = rotated[0]
    s = 1
    while s < n and rotated[s] == low:
        s += 1
    if rotated[s:] != (low + 1,) * (n - s):
        return None
    return DOneParams(n, low, s)


def e_map(p: DOneParams) -> Algebra:
    """Pass to ``eAe`` for the idempotent omitting the last vertex.

    Defined for ``2 <= a <= n-1`` with dominant dimension at least three,
    i.e. ``s != n-a`` and ``s != n-1-a``.
    """
    if not 2 <= p.a <= p.n - 1:
        raise NotInDomain(f"need 2 <= a <= n-1, got a={p.a}, n={p.n}")
    if p.s == p.n - p.a or p.s == p.n - 1 - p.a:
        raise NotInDomain(f"N_({p.n},{p.a},{p.s}) has dominant dimension below three")
    return truncate_last_vertex(make_d1(p))


def e_map_closed_form(p: DOneParams) -> DOneParams | CLineMarker:
    """Closed form of :func:`e_map` on parameters; agrees with the
    truncation computation."""
    n, a, s = p.n, p.a, p.s
    if not 2 <= a <= n - 1:
        raise NotInDomain(f"need 2 <= a <= n-1, got a={a}, n={n}")
    if s == n - a or s == n - 1 - a:
        raise NotInDomain(f"N_({n},{a},{s}) has dominant dimension below three")
    if a == 2 and s == n - 1:
        return CLineMarker(n - 1)
    if s > n - a:
        return DOneParams(n - 1, a - 1, s - (n - a))
    return DOneParams(n - 1, a, s + a)


def e_map_inverse(p: DOneParams) -> DOneParams:
    """Inverse of the closed form: parameters over ``n`` from parameters over
    ``n-1`` with ``2 <= a <= n-2``."""
    n1, a, s = p.n, p.a, p.s  # input lives over n1 = n - 1
    if not 2 <= a <= n1 - 1:
        raise InvalidParams(f"need 2 <= a <= n-2 over n-1={n1}, got a={a}")
    if s <= a:
        return DOneParams(n1 + 1, a + 1, s - a + n1)
    return DOneParams(n1 + 1, a, s - a)


def z_params(n: int, m: int) -> DOneParams:
    """Closed-form parameters of the unique defect-1 cycle algebra with
    ``n`` simples and finite global dimension ``n + m - 1``."""
    if n < 2 or not 1 <= m <= n - 1:
        raise InvalidParams(f"need n >= 2 and 1 <= m <= n-1, got n={n}, m={m}")
    if (n - m) % 2 == 1:
        a = 2 * n // (n - m + 1)
        num = a * ((a - 1) * n - (a + 1) * m + a - 1)
        if num % 2:
            raise InternalError(f"odd-case numerator not even for n={n}, m={m}")
        s = num // 2 + 1
    else:
        a = 2 * (n - 1) // (n - m)
        num = a * ((a - 1) * n - (a + 1) * m + 2)
        if num % 2:
            raise InternalError(f"even-case numerator not even for n={n}, m={m}")
        s = num // 2
    return DOneParams(n, a, s)


def z_params_recursive(n: int, m: int) -> DOneParams:
    """The same parameters by unwinding the inverse truncation map from the
    base cases ``m = 1`` and ``m = n - 1``."""
    if n < 2 or not 1 <= m <= n - 1:
        raise InvalidParams(f"need n >= 2 and 1 <= m <= n-1, got n={n}, m={m}")
    if m == 1:
        return DOneParams(n, 2, n - 1)
    if m == n - 1:
        return DOneParams(n, n, 1)
    return e_map_inverse(z_params_recursive(n - 1, m - 1))


def z_algebra(n: int, m: int) -> Algebra:
    return make_d1(z_params(n, m))


def is_higher_auslander(a: Algebra) -> bool:
    """Finite global dimension at least two equal to the dominant dimension."""
    g = global_dim(a)
    if g == INFINITY or g < 2:
        return False
    return domdim_algebra(a) == g


def is_min_auslander_gorenstein(a: Algebra) -> bool:
    """Finite Gorenstein dimension at least two equal to the dominant
    dimension."""
    g = gorenstein_dim(a)
    if g == INFINITY or g < 2:
        return False
    return domdim_algebra(a) == g


def d1_gorenstein_criterion(a: Algebra) -> bool:
    """For a defect-1 algebra of infinite global dimension: Gorenstein iff
    the dominant dimension is even.  Returns that parity test."""
    if d1_params(a) is None:
        raise NotInDomain("criterion requires a defect-1 cycle algebra")
    if global_dim(a) != INFINITY:
        raise NotInDomain("criterion requires infinite global dimension")
    return domdim_algebra(a) % 2 == 0


@dataclass(frozen=True)
class MoritaSpec:
    """Endomorphism-algebra datum over a selfinjective cycle algebra with
    ``n`` simples and Loewy length ``w``: the base plus the radical quotients
    ``P(x)/soc`` at the chosen distinct vertices."""

    n: int
    w: int
    points: tuple[int, ...]

    def __post_init__(self):
        if self.n < 2 or self.w < 2:
            raise InvalidParams(f"need n >= 2 and w >= 2, got n={self.n}, w={self.w}")
        if not self.points:
            raise InvalidParams("need at least one point")
        if len(set(x % self.n for x in self.points)) != len(self.points):
            raise InvalidParams(f"points must be distinct mod n: {self.points}")


def morita_domdim_formula(spec: MoritaSpec) -> int:
    """Dominant dimension of the endomorphism algebra, by the congruence
    criterion on the chosen points."""
    n, w = spec.n, spec.w
    points = [x % n for x in spec.points]
    for k in range(1, 2 * n * w + 1):
        half = (k + 2) // 2  # ceil((k + 1) / 2)
        g = 1 if k % 2 == 0 else 0
        target = (half * w - g) % n
        hits = {(x + target) % n for x in points}
        if any((x + w - 1) % n in hits for x in points):
            return k + 1
    raise InternalError(f"no k below 2nw = {2 * n * w} for {spec}")


def _d1_from_dimension_multiset(dims) -> DOneParams:
    values = sorted(set(dims))
    if len(values) != 2 or values[1] != values[0] + 1:
        raise InternalError(f"projective dimension multiset {sorted(dims)} is not of defect-1 form")
    a = values[0]
    return DOneParams(len(dims), a, sum(1 for d in dims if d == a))


def morita_nakayama(n: int, w: int) -> Algebra:
    """The Nakayama algebra ``End(B + P/soc P)`` for ``B`` selfinjective with
    ``n`` simples and Loewy length ``w`` and ``P`` indecomposable projective.

    The Kupisch series is recovered from the Hom dimensions onto each summand,
    which form a defect-1 multiset; that multiset determines the algebra.
    """
    if n < 2 or w < 2:
        raise InvalidParams(f"need n >= 2 and w >= 2, got n={n}, w={w}")
    base = make_algebra(QuiverKind.CYCLE, (w,) * n)
    summands = [UniserialModule(i, w) for i in range(n)]
    summands.append(UniserialModule(0, w - 1))
    dims = [sum(hom_dim(base, y, x) for y in summands) for x in summands]
    return make_d1(_d1_from_dimension_multiset(dims))


def morita_gorenstein(n: int, w: int):
    """Whether ``morita_nakayama(n, w)`` is Gorenstein, with its Gorenstein
    dimension when it is.  Requires ``w > 2`` (Loewy length two is always
    Gorenstein and handled by direct computation)."""
    if w <= 2 or n < 3:
        raise InvalidParams(f"need w > 2 and n >= 3, got w={w}, n={n}")
    if gcd(w, n) != 1:
        return False, INFINITY
    h = 0
    while (h * w + 1) % n != 0:
        h += 1
    return True, 2 * h + 2


def pd_even_minimum(a: Algebra):
    """Half the minimal even projective dimension among simples, or None if
    no simple has even finite projective dimension."""
    best = None
    for i in range(a.n):
        pd = proj_dim(a, UniserialModule(i, 1))
        if pd != INFINITY and pd % 2 == 0 and (best is None or pd < best):
            best = pd
    return None if best is None else best // 2


def z_match(a: Algebra) -> tuple[int, int] | None:
    """Identify ``a`` with some extremal algebra ``(n, m)``, if it is one."""
    p = d1_params(a)
    if p is None:
        return None
    g = global_dim(a)
    if g == INFINITY:
        return None
    m = g - p.n + 1
    if not 1 <= m <= p.n - 1:
        return None
    if canonical_form(make_d1(z_params(p.n, m))) == canonical_form(a):
        return p.n, m
    return None
