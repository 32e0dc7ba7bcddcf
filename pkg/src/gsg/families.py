"""Small named table families used throughout the tests and demos."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .core import GammaSemigroup

__all__ = ["zmod", "left_zero", "right_zero", "constant", "relabel"]


def zmod(n: int, gammas: int = 1, name: str | None = None) -> GammaSemigroup:
    """Cyclic family: elements 0..n-1, x g_j y = (x + y + j) mod n.

    With one gamma the sandwich symbol is called ``g``; with more they are
    ``g0``, ``g1``, ...
    """
    if n < 1 or gammas < 1:
        raise ValueError("need n >= 1 and gammas >= 1")
    elements = tuple(str(i) for i in range(n))
    gnames = ("g",) if gammas == 1 else tuple(f"g{j}" for j in range(gammas))
    x = np.arange(n)
    j = np.arange(gammas)
    table = (x[:, None, None] + x[None, None, :] + j[None, :, None]) % n
    return GammaSemigroup(name or f"Z{n}" + (f"x{gammas}" if gammas > 1 else ""),
                          elements, gnames, table)


def left_zero(names: Sequence[str], gammas: Sequence[str] = ("g",),
              name: str = "L") -> GammaSemigroup:
    """x gamma y = x for every gamma."""
    n, g = len(names), len(gammas)
    table = np.broadcast_to(np.arange(n)[:, None, None], (n, g, n))
    return GammaSemigroup(name, tuple(names), tuple(gammas), np.ascontiguousarray(table))


def right_zero(names: Sequence[str], gammas: Sequence[str] = ("g",),
               name: str = "R") -> GammaSemigroup:
    """x gamma y = y for every gamma."""
    n, g = len(names), len(gammas)
    table = np.broadcast_to(np.arange(n)[None, None, :], (n, g, n))
    return GammaSemigroup(name, tuple(names), tuple(gammas), np.ascontiguousarray(table))


def constant(names: Sequence[str], result: str, gammas: Sequence[str] = ("g",),
             name: str = "K") -> GammaSemigroup:
    """x gamma y = result for every x, y, gamma."""
    names = tuple(names)
    n, g = len(names), len(gammas)
    table = np.full((n, g, n), names.index(result), dtype=np.int64)
    return GammaSemigroup(name, names, tuple(gammas), table)


def relabel(s: GammaSemigroup, name: str,
            elements: Sequence[str] | None = None,
            gammas: Sequence[str] | None = None) -> GammaSemigroup:
    """Isomorphic copy with fresh names and the same table."""
    elements = tuple(elements) if elements is not None else s.elements
    gammas = tuple(gammas) if gammas is not None else s.gammas
    if len(elements) != s.n or len(gammas) != s.g:
        raise ValueError("relabel must keep the carrier and gamma sizes")
    return GammaSemigroup(name, elements, gammas, s.table.copy())
