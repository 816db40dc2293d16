"""Kupisch series, uniserial modules, and the structural calculus on them.

Conventions (normative for the whole package):

* Vertices are labelled ``0..n-1`` with arrows ``i -> i+1`` (mod ``n`` on a
  cycle).  ``c[i]`` is the vector-space dimension of the indecomposable
  projective right module ``P(i)`` at vertex ``i``.
* ``M(i, l)`` denotes the uniserial module with top vertex ``i`` and
  composition length ``l``; its composition factors are
  ``S_i, S_{i+1}, ..., S_{i+l-1}`` read top to socle, so its socle sits at
  vertex ``(i + l - 1) % n``.  ``M(i, c[i])`` is the projective ``P(i)``.
* A series describes a line quiver iff its last entry is 1; cycle series are
  only determined up to rotation and are canonicalised to the
  lexicographically least rotation.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterator, NamedTuple

from .errors import InvalidSeries, NotApplicable, NotInDomain, Semisimple


class QuiverKind(str, Enum):
    LINE = "line"
    CYCLE = "cycle"


class UniserialModule(NamedTuple):
    """The module ``M(i, l)`` with top vertex ``i`` and length ``l``."""

    i: int
    l: int


@dataclass(frozen=True)
class Algebra:
    """A connected non-semisimple Nakayama algebra, given by its Kupisch series.

    Instances are immutable; build them through :func:`make_algebra`, which
    validates the series.  Derived lookup tables are cached lazily.
    """

    kind: QuiverKind
    c: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.c)

    @property
    def dim(self) -> int:
        return sum(self.c)

    @property
    def selfinjective(self) -> bool:
        return self.kind is QuiverKind.CYCLE and min(self.c) == max(self.c)

    @cached_property
    def _env_table(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Per socle vertex ``s``: top vertex and length of the injective
        envelope of ``S_s`` (the longest module with socle at ``s``)."""
        n, c = self.n, self.c
        cyclic = self.kind is QuiverKind.CYCLE
        tops = []
        lens = []
        for s in range(n):
            top, length = s, 1
            while True:
                prev = top - 1
                if cyclic:
                    prev %= n
                elif prev < 0:
                    break
                if length + 1 > c[prev]:
                    break
                top, length = prev, length + 1
            tops.append(top)
            lens.append(length)
        return tuple(tops), tuple(lens)

    def __str__(self) -> str:
        return f"{self.kind.value}[{format_kupisch(self)}]"


def make_algebra(kind: QuiverKind, c) -> Algebra:
    """Validate a Kupisch series and wrap it in an :class:`Algebra`.

    Raises :class:`InvalidSeries` naming the violated constraint and index,
    or :class:`Semisimple` when every entry is 1.
    """
    series = tuple(c)
    n = len(series)
    if n == 0:
        raise InvalidSeries("Kupisch series must be non-empty")
    for i, ci in enumerate(series):
        if not isinstance(ci, int) or isinstance(ci, bool) or ci < 1:
            raise InvalidSeries(f"entries must be positive integers, got {ci!r}", i)
    if all(ci == 1 for ci in series):
        raise Semisimple("all projectives are simple")
    if kind is QuiverKind.CYCLE:
        for i, ci in enumerate(series):
            if ci < 2:
                raise InvalidSeries("cycle series requires c[i] >= 2", i)
        for i in range(n):
            j = (i + 1) % n
            if series[j] < series[i] - 1:
                raise InvalidSeries(
                    f"c[{j}] = {series[j]} < c[{i}] - 1 = {series[i] - 1}", j
                )
    elif kind is QuiverKind.LINE:
        if series[n - 1] != 1:
            raise InvalidSeries("line series must end with 1", n - 1)
        for i in range(n - 1):
            if series[i] < 2:
                raise InvalidSeries("interior entries must be >= 2 (connectedness)", i)
            if series[i] > n - i:
                raise InvalidSeries(f"c[{i}] = {series[i]} > n - i = {n - i}", i)
            if series[i + 1] < series[i] - 1:
                raise InvalidSeries(
                    f"c[{i + 1}] = {series[i + 1]} < c[{i}] - 1 = {series[i] - 1}",
                    i + 1,
                )
    else:
        raise InvalidSeries(f"unknown quiver kind {kind!r}")
    return Algebra(kind, series)


def parse_kupisch(text: str, kind: QuiverKind | None = None) -> Algebra:
    """Parse a comma-separated Kupisch series.

    The quiver kind is inferred (trailing 1 means line) unless forced.
    """
    try:
        series = tuple(int(part.strip()) for part in text.split(","))
    except ValueError as exc:
        raise InvalidSeries(f"cannot parse series {text!r}: {exc}") from None
    if not series:
        raise InvalidSeries("empty series")
    if kind is None:
        kind = QuiverKind.LINE if series[-1] == 1 else QuiverKind.CYCLE
    return make_algebra(kind, series)


def format_kupisch(a: Algebra) -> str:
    return ",".join(str(ci) for ci in a.c)


def canonical_form(a: Algebra) -> Algebra:
    """Isomorphism-class representative: least rotation for cycles, identity
    for lines."""
    if a.kind is QuiverKind.LINE:
        return a
    n = a.n
    best = min(a.c[i:] + a.c[:i] for i in range(n))
    return Algebra(a.kind, best)


def module(a: Algebra, i: int, l: int) -> UniserialModule:
    """Construct ``M(i, l)``, validating that it exists over ``a``."""
    if not 0 <= i < a.n:
        raise NotInDomain(f"vertex {i} out of range for n = {a.n}")
    if not 1 <= l <= a.c[i]:
        raise NotInDomain(f"length {l} out of range 1..c[{i}] = {a.c[i]}")
    return UniserialModule(i, l)


def modules(a: Algebra) -> Iterator[UniserialModule]:
    """All indecomposable modules, by top vertex then length."""
    for i, ci in enumerate(a.c):
        for l in range(1, ci + 1):
            yield UniserialModule(i, l)


def simples(a: Algebra) -> Iterator[UniserialModule]:
    for i in range(a.n):
        yield UniserialModule(i, 1)


def projectives(a: Algebra) -> Iterator[UniserialModule]:
    for i, ci in enumerate(a.c):
        yield UniserialModule(i, ci)


def injectives(a: Algebra) -> Iterator[UniserialModule]:
    """The n indecomposable injectives, one per socle vertex."""
    tops, lens = a._env_table
    for s in range(a.n):
        yield UniserialModule(tops[s], lens[s])


def top_vertex(a: Algebra, m: UniserialModule) -> int:
    return m.i


def socle_vertex(a: Algebra, m: UniserialModule) -> int:
    s = m.i + m.l - 1
    return s % a.n if a.kind is QuiverKind.CYCLE else s


def is_projective(a: Algebra, m: UniserialModule) -> bool:
    return m.l == a.c[m.i]


def is_injective(a: Algebra, m: UniserialModule) -> bool:
    if a.kind is QuiverKind.LINE:
        return m.i == 0 or a.c[m.i - 1] <= m.l
    return a.c[(m.i - 1) % a.n] <= m.l


def projective_cover(a: Algebra, m: UniserialModule) -> UniserialModule:
    return UniserialModule(m.i, a.c[m.i])


def injective_envelope(a: Algebra, m: UniserialModule) -> UniserialModule:
    tops, lens = a._env_table
    s = socle_vertex(a, m)
    return UniserialModule(tops[s], lens[s])


def syzygy(a: Algebra, m: UniserialModule) -> UniserialModule | None:
    """Kernel of the projective cover; None for projective ``m``."""
    ci = a.c[m.i]
    if m.l == ci:
        return None
    j = m.i + m.l
    if a.kind is QuiverKind.CYCLE:
        j %= a.n
    return UniserialModule(j, ci - m.l)


def cosyzygy(a: Algebra, m: UniserialModule) -> UniserialModule | None:
    """Cokernel of the injective envelope; None for injective ``m``."""
    if is_injective(a, m):
        return None
    env = injective_envelope(a, m)
    return UniserialModule(env.i, env.l - m.l)


def tau(a: Algebra, m: UniserialModule) -> UniserialModule:
    """Auslander-Reiten translate; defined for non-projective modules."""
    if is_projective(a, m):
        raise NotInDomain(f"tau of the projective module {m} is undefined")
    j = m.i + 1
    if a.kind is QuiverKind.CYCLE:
        j %= a.n
    return UniserialModule(j, m.l)


def tau_inverse(a: Algebra, m: UniserialModule) -> UniserialModule:
    if is_injective(a, m):
        raise NotInDomain(f"tau inverse of the injective module {m} is undefined")
    j = m.i - 1
    if a.kind is QuiverKind.CYCLE:
        j %= a.n
    return UniserialModule(j, m.l)


def left_projective_dims(a: Algebra) -> tuple[int, ...]:
    """Dimension of the left projective at each vertex, i.e. the number of
    nonzero paths ending there.  Equals the length of the injective envelope
    of the simple right module at that vertex."""
    n, c = a.n, a.c
    cyclic = a.kind is QuiverKind.CYCLE
    dims = []
    for i in range(n):
        k = 0
        while True:
            start = i - k
            if cyclic:
                start %= n
            elif start < 0:
                break
            if c[start] <= k:
                break
            k += 1
        dims.append(k)
    return tuple(dims)


def opposite(a: Algebra) -> Algebra:
    """The opposite algebra, relabelled so its quiver is again standard.

    The reversal sends vertex ``j`` to ``(n - j) % n`` on a cycle and to
    ``n - 1 - j`` on a line; the new series lists left projective dimensions
    in that order.
    """
    n = a.n
    d = left_projective_dims(a)
    if a.kind is QuiverKind.CYCLE:
        series = tuple(d[(n - j) % n] for j in range(n))
    else:
        series = tuple(d[n - 1 - j] for j in range(n))
    return make_algebra(a.kind, series)


def truncate_last_vertex(a: Algebra) -> Algebra:
    """The algebra ``eAe`` for ``e = e_0 + ... + e_{n-2}`` over a cycle.

    Entry ``i`` of the new series drops one for each nonzero path from ``i``
    to the removed vertex ``n-1``.  The result lives on vertices ``0..n-2``
    and is a line exactly when its last entry is 1.
    """
    if a.kind is not QuiverKind.CYCLE:
        raise NotApplicable("truncation is defined for cycle algebras only")
    n = a.n
    if n < 3:
        raise NotApplicable("truncation would leave fewer than two vertices")
    series = []
    for i in range(n - 1):
        q = n - 1 - i  # length of the shortest path i -> n-1
        ci = a.c[i]
        paths_to_last = 0 if ci <= q else 1 + (ci - 1 - q) // n
        series.append(ci - paths_to_last)
    kind = QuiverKind.LINE if series[-1] == 1 else QuiverKind.CYCLE
    try:
        return make_algebra(kind, series)
    except (InvalidSeries, Semisimple) as exc:
        raise NotApplicable(f"truncated series {series} is not valid: {exc}") from None


def hom_dim(a: Algebra, m: UniserialModule, v: UniserialModule) -> int:
    """Dimension of Hom(m, v).

    Each homomorphism (up to scalar) is determined by its image, a submodule
    of ``v`` of some length ``t <= l(m)`` whose top matches the top of ``m``.
    """
    bound = min(m.l, v.l)
    if a.kind is QuiverKind.LINE:
        t = v.i + v.l - m.i
        return 1 if 1 <= t <= bound else 0
    n = a.n
    r = (v.i + v.l - m.i) % n  # t must be congruent to r mod n
    if r == 0:
        r = n
    return 0 if r > bound else 1 + (bound - r) // n
