"""Shared small algebra families for exhaustive checks."""

from nakayama import Algebra, QuiverKind, iter_cycle_series, iter_line_series


def small_cycles(n_max=6, cap=9):
    for n in range(1, n_max + 1):
        for series in iter_cycle_series(n, cap):
            yield Algebra(QuiverKind.CYCLE, series)


def small_lines(n_max=7):
    for n in range(2, n_max + 1):
        for series in iter_line_series(n):
            yield Algebra(QuiverKind.LINE, series)


def small_algebras(n_max=6, cap=9, line_n_max=7):
    yield from small_cycles(n_max, cap)
    yield from small_lines(line_n_max)
