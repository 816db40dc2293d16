"""Homological dimensions and resolution quivers.

All dimension functions return either a non-negative ``int`` or
:data:`INFINITY`; the two mix under ``min``/``max``/``+`` with infinity
absorbing, which is all the calculus these invariants need.  Detection of
infinite dimensions is exact: orbits under (co)syzygy run over the finite set
of uniserial modules with a visited set, never an iteration cap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .core import (
    Algebra,
    QuiverKind,
    UniserialModule,
    cosyzygy,
    injective_envelope,
    injectives,
    is_injective,
    is_projective,
    left_projective_dims,
    modules,
    opposite,
    projective_cover,
    projectives,
    simples,
    syzygy,
)
from .errors import InternalError, NotApplicable, SelfinjectiveInput

INFINITY = math.inf

ExtNat = int | float  # a natural number or INFINITY


def is_finite(value: ExtNat) -> bool:
    return value != INFINITY


def proj_dim(a: Algebra, m: UniserialModule):
    """Projective dimension of ``m``; INFINITY iff the syzygy orbit cycles."""
    seen = set()
    k = 0
    cur = m
    while not is_projective(a, cur):
        if cur in seen:
            return INFINITY
        seen.add(cur)
        cur = syzygy(a, cur)
        k += 1
    return k


def inj_dim(a: Algebra, m: UniserialModule):
    """Injective dimension of ``m`` via the cosyzygy orbit."""
    seen = set()
    k = 0
    cur = m
    while not is_injective(a, cur):
        if cur in seen:
            return INFINITY
        seen.add(cur)
        cur = cosyzygy(a, cur)
        k += 1
    return k


def global_dim(a: Algebra):
    return max(proj_dim(a, s) for s in simples(a))


def fin_dim(a: Algebra) -> int:
    """Finitistic dimension: the largest finite projective dimension.

    Always finite here (the algebras are representation-finite); 0 when only
    projectives have finite projective dimension.
    """
    best = 0
    for m in modules(a):
        pd = proj_dim(a, m)
        if pd != INFINITY and pd > best:
            best = pd
    return best


def domdim_module(a: Algebra, m: UniserialModule):
    """Number of leading projective terms in the minimal injective
    coresolution of ``m``; INFINITY when the coresolution never leaves
    projective-injectives."""
    count = 0
    cur = m
    seen = set()
    while True:
        if not is_projective(a, injective_envelope(a, cur)):
            return count
        if is_injective(a, cur):
            return INFINITY
        cur = cosyzygy(a, cur)
        count += 1
        if cur in seen:
            return INFINITY
        seen.add(cur)


def codomdim_module(a: Algebra, m: UniserialModule):
    """Dual of :func:`domdim_module`: leading injective terms of the minimal
    projective resolution."""
    count = 0
    cur = m
    seen = set()
    while True:
        if not is_injective(a, projective_cover(a, cur)):
            return count
        if is_projective(a, cur):
            return INFINITY
        cur = syzygy(a, cur)
        count += 1
        if cur in seen:
            return INFINITY
        seen.add(cur)


def domdim_algebra(a: Algebra):
    """Dominant dimension of the regular module; INFINITY iff selfinjective."""
    return min(domdim_module(a, p) for p in projectives(a))


def defect(a: Algebra) -> int:
    """Number of indecomposable injective non-projective modules."""
    return sum(1 for m in injectives(a) if not is_projective(a, m))


def sdomdim(a: Algebra) -> int:
    """Sum of dominant dimensions over projective non-injective modules."""
    if a.selfinjective:
        raise SelfinjectiveInput("sdomdim is undefined for selfinjective algebras")
    total = 0
    for p in projectives(a):
        if not is_injective(a, p):
            value = domdim_module(a, p)
            if value == INFINITY:
                raise InternalError(f"projective non-injective {p} with infinite domdim")
            total += value
    return total


def scodomdim(a: Algebra) -> int:
    """Sum of codominant dimensions over injective non-projective modules;
    equals ``sdomdim(opposite(a))``."""
    if a.selfinjective:
        raise SelfinjectiveInput("scodomdim is undefined for selfinjective algebras")
    total = 0
    for m in injectives(a):
        if not is_projective(a, m):
            value = codomdim_module(a, m)
            if value == INFINITY:
                raise InternalError(f"injective non-projective {m} with infinite codomdim")
            total += value
    return total


def gorenstein_dim(a: Algebra):
    """Common injective dimension of the regular module on both sides.

    Both sides are computed and compared when finite, so Gorenstein symmetry
    is a runtime check rather than an assumption.
    """
    right = max(inj_dim(a, p) for p in projectives(a))
    aop = opposite(a)
    left = max(inj_dim(aop, p) for p in projectives(aop))
    if (right == INFINITY) != (left == INFINITY):
        raise InternalError(f"one-sided Gorenstein dimension: right={right}, left={left}")
    if right == INFINITY:
        return INFINITY
    if right != left:
        raise InternalError(f"Gorenstein symmetry violated: right={right}, left={left}")
    return right


@dataclass(frozen=True)
class FunctionalGraph:
    """A successor map on vertices with the derived orbit structure.

    ``vertex_dims`` holds the projective dimensions entering cycle weights:
    the Kupisch entries for the resolution quiver, the dual dimensions for
    the injective resolution quiver.  ``black`` marks vertices whose simple
    has (co)resolution depth at least two.
    """

    succ: tuple[int, ...]
    black: tuple[bool, ...]
    vertex_dims: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.succ)

    @cached_property
    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Vertex sets of the cycles, each listed from its least vertex."""
        n = self.n
        state = [0] * n  # 0 new, 1 on current path, 2 settled
        cycles = []
        for v in range(n):
            if state[v]:
                continue
            path = []
            u = v
            while state[u] == 0:
                state[u] = 1
                path.append(u)
                u = self.succ[u]
            if state[u] == 1:
                start = path.index(u)
                cycles.append(path[start:])
            for w in path:
                state[w] = 2
        result = []
        for cyc in cycles:
            least = cyc.index(min(cyc))
            result.append(tuple(cyc[least:] + cyc[:least]))
        return tuple(sorted(result))

    @cached_property
    def cycle_vertices(self) -> frozenset:
        return frozenset(v for cyc in self.cycles for v in cyc)

    @cached_property
    def sources(self) -> tuple[int, ...]:
        indeg = [0] * self.n
        for v in self.succ:
            indeg[v] += 1
        return tuple(v for v in range(self.n) if indeg[v] == 0)

    @cached_property
    def component_count(self) -> int:
        """Weakly connected components; each contains exactly one cycle."""
        n = self.n
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i in range(n):
            ri, rj = find(i), find(self.succ[i])
            if ri != rj:
                parent[ri] = rj
        return len({find(i) for i in range(n)})

    @property
    def connected(self) -> bool:
        return self.component_count == 1

    @cached_property
    def weights(self) -> tuple[Fraction, ...]:
        n = self.n
        return tuple(
            Fraction(sum(self.vertex_dims[v] for v in cyc), n) for cyc in self.cycles
        )

    def weight(self) -> Fraction:
        """The common cycle weight; raises if the cycles disagree."""
        weights = set(self.weights)
        if len(weights) != 1:
            raise InternalError(f"cycle weights disagree: {sorted(weights)}")
        return weights.pop()


def resolution_quiver(a: Algebra) -> FunctionalGraph:
    """Successor map ``i -> (i + c_i) mod n`` on simples of a cycle algebra."""
    if a.kind is not QuiverKind.CYCLE:
        raise NotApplicable("resolution quivers are defined for cycle algebras")
    n, c = a.n, a.c
    succ = tuple((i + c[i]) % n for i in range(n))
    black = tuple(c[(i + 1) % n] != c[i] - 1 for i in range(n))
    return FunctionalGraph(succ, black, c)


def injective_resolution_quiver(a: Algebra) -> FunctionalGraph:
    """The resolution quiver of the opposite algebra, pulled back through the
    orientation-reversing relabelling; equivalently ``i -> (i - d_i) mod n``
    where ``d_i`` is the length of the injective envelope of ``S_i``."""
    if a.kind is not QuiverKind.CYCLE:
        raise NotApplicable("resolution quivers are defined for cycle algebras")
    n = a.n
    d = left_projective_dims(a)
    succ = tuple((i - d[i]) % n for i in range(n))
    black = tuple(d[(i - 1) % n] != d[i] - 1 for i in range(n))
    return FunctionalGraph(succ, black, d)


def shen_finite_gldim(a: Algebra) -> bool:
    """Resolution-quiver test for finite global dimension: connected with
    weight one."""
    rq = resolution_quiver(a)
    return rq.connected and rq.weight() == 1


def shen_gorenstein(a: Algebra) -> bool:
    """Resolution-quiver test for finite Gorenstein dimension.

    For infinite global dimension the test is that every cycle vertex is
    black; finite global dimension (connected quiver of weight one) always
    gives a finite Gorenstein dimension, with or without red cycle vertices.
    """
    rq = resolution_quiver(a)
    if all(rq.black[v] for v in rq.cycle_vertices):
        return True
    return rq.connected and rq.weight() == 1


def phi_dim(a: Algebra) -> int:
    """Smallest k such that the k-th syzygy of every module is zero,
    projective, or periodic.

    Only defined for cycle algebras of infinite global dimension (plus the
    degenerate value 0 for selfinjective ones); refuse anything else.
    """
    if a.kind is not QuiverKind.CYCLE:
        raise NotApplicable("phi-dimension is computed for cycle algebras only")
    if global_dim(a) != INFINITY:
        raise NotApplicable("phi-dimension is only used for infinite global dimension")
    mods = list(modules(a))
    succ = {m: syzygy(a, m) for m in mods}

    # Modules lying on syzygy cycles are exactly the periodic ones.
    periodic = set()
    state = {}
    for m in mods:
        if m in state:
            continue
        path = []
        cur = m
        while cur is not None and cur not in state:
            state[cur] = 1
            path.append(cur)
            cur = succ[cur]
        if cur is not None and state[cur] == 1:
            periodic.update(path[path.index(cur):])
        for w in path:
            state[w] = 2

    # Distance until the orbit becomes projective (next step zero) or periodic.
    depth = {}
    for m in mods:
        chain = []
        cur = m
        while cur is not None and cur not in depth:
            if is_projective(a, cur) or cur in periodic:
                depth[cur] = 0
                break
            chain.append(cur)
            cur = succ[cur]
        base = depth[cur] if cur is not None else 0
        for offset, node in enumerate(reversed(chain), start=1):
            depth[node] = base + offset
    return max(depth[m] for m in mods)


def is_quasi_hereditary_cyclic(a: Algebra) -> bool:
    """A cycle algebra is quasi-hereditary iff some simple has projective
    dimension exactly two."""
    if a.kind is not QuiverKind.CYCLE:
        raise NotApplicable("criterion applies to cycle algebras only")
    return any(proj_dim(a, s) == 2 for s in simples(a))
