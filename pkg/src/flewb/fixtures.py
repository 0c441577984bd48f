"""Named algebras used throughout the tests and the CLI."""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Mapping, Sequence

from .algebra import FiniteRL, build_algebra, chain, product
from .errors import UnknownFixtureName


def order_from_covers(elements: Sequence[str], covers: Sequence[tuple[str, str]]) -> list[list[bool]]:
    """Reflexive-transitive closure of cover pairs ``(lower, upper)``."""
    n = len(elements)
    idx = {e: i for i, e in enumerate(elements)}
    leq = [[i == j for j in range(n)] for i in range(n)]
    for lo, hi in covers:
        leq[idx[lo]][idx[hi]] = True
    for k in range(n):
        for i in range(n):
            if leq[i][k]:
                for j in range(n):
                    if leq[k][j]:
                        leq[i][j] = True
    return leq


def from_covers(
    elements: Sequence[str],
    covers: Sequence[tuple[str, str]],
    products: Mapping[tuple[str, str], str] | None = None,
    name: str = "",
) -> FiniteRL:
    """Build an algebra from its Hasse diagram.

    ``products`` lists a*b for pairs of non-bound elements (either order);
    missing pairs default to the meet, so ``None`` gives the Heyting algebra.
    """
    n = len(elements)
    idx = {e: i for i, e in enumerate(elements)}
    leq = order_from_covers(elements, covers)
    top = next(t for t in range(n) if all(leq[x][t] for x in range(n)))
    meet = [
        [max((c for c in range(n) if leq[c][a] and leq[c][b]), key=lambda c: sum(leq[x][c] for x in range(n)))
         for b in range(n)]
        for a in range(n)
    ]
    mon = [row[:] for row in meet]
    for (x, y), v in (products or {}).items():
        mon[idx[x]][idx[y]] = mon[idx[y]][idx[x]] = idx[v]
    for a in range(n):
        mon[a][top] = mon[top][a] = a
    return build_algebra(elements, leq, mon, name=name)


def _example5() -> FiniteRL:
    return from_covers(
        ["0", "r", "s", "t", "1"],
        [("0", "r"), ("r", "s"), ("r", "t"), ("s", "1"), ("t", "1")],
        name="Example5",
    )


def _example5_inverted() -> FiniteRL:
    return from_covers(
        ["0", "a1", "a2", "c", "1"],
        [("0", "a1"), ("0", "a2"), ("a1", "c"), ("a2", "c"), ("c", "1")],
        name="Example5_inverted",
    )


def _four_chain_non_idem() -> FiniteRL:
    return from_covers(
        ["0", "a", "b", "1"],
        [("0", "a"), ("a", "b"), ("b", "1")],
        {("a", "a"): "a", ("a", "b"): "a", ("b", "b"): "a"},
        name="FourChainNonIdem",
    )


def _fig4_heyting() -> FiniteRL:
    # The 3x3 grid without its (2,0) corner: c is the join-irreducible coatom,
    # Dc = "Dc", ~Dc = "nDc".
    return from_covers(
        ["0", "b", "nDc", "d", "Dc", "c", "e", "1"],
        [
            ("0", "nDc"), ("0", "b"), ("nDc", "d"), ("b", "d"), ("b", "Dc"),
            ("d", "c"), ("d", "e"), ("Dc", "e"), ("c", "1"), ("e", "1"),
        ],
        name="Fig4Heyting",
    )


FIG1_DIAMOND5_LITERAL = {
    "elements": ["0", "r", "s", "t", "1"],
    "hasse": [["0", "r"], ["r", "s"], ["r", "t"], ["s", "1"], ["t", "1"]],
    "products": {("s", "t"): "0", ("s", "s"): "s", ("t", "t"): "t",
                 ("r", "r"): "0", ("r", "s"): "0", ("r", "t"): "0"},
}
"""The Example5 lattice with s*t = 0, s*s = s, t*t = t. Monotonicity forces every
r-product to 0, and then r = r*(s v t) differs from r*s v r*t, so these
tables have no residuum. Kept to document why ``Fig1Diamond5`` differs."""


def fig1_diamond5_literal() -> FiniteRL:
    """Attempt to build the literal tables above; raises ``NoResiduum``."""
    d = FIG1_DIAMOND5_LITERAL
    return from_covers(d["elements"], [tuple(p) for p in d["hasse"]], d["products"], name="Fig1Diamond5_literal")


def _fig1_diamond() -> FiniteRL:
    # Smallest algebra where a {v, *, ->, 0, B}-closed set misses a meet:
    # the Example5 diamond under a new coatom u, with the drastic product.
    # S = {0, s, t, u, 1} is closed for everything but meet (s ^ t = r).
    elements = ["0", "r", "s", "t", "u", "1"]
    products = {(x, y): "0" for x in elements[1:5] for y in elements[1:5]}
    return from_covers(
        elements,
        [("0", "r"), ("r", "s"), ("r", "t"), ("s", "u"), ("t", "u"), ("u", "1")],
        products,
        name="Fig1Diamond5",
    )


_BUILDERS: dict[str, Callable[[], FiniteRL]] = {
    "G2": lambda: chain(2, "G2"),
    "G3": lambda: chain(3, "G3"),
    "G4": lambda: chain(4, "G4"),
    "G2xG3": lambda: product(chain(2, "G2"), chain(3, "G3"), "G2xG3"),
    "G3xG3": lambda: product(chain(3, "G3"), chain(3, "G3"), "G3xG3"),
    "G2xG2": lambda: product(chain(2, "G2"), chain(2, "G2"), "G2xG2"),
    "Example5": _example5,
    "Example5_inverted": _example5_inverted,
    "Bool4PlusTop": lambda: _example5_inverted().renamed("Bool4PlusTop"),
    "FourChainNonIdem": _four_chain_non_idem,
    "Fig4Heyting": _fig4_heyting,
    "Fig1Diamond5": _fig1_diamond,
    "Trivial": lambda: chain(1, "Trivial"),
}


@lru_cache(maxsize=None)
def fixture(name: str) -> FiniteRL:
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise UnknownFixtureName(name) from None
    return builder()


def fixture_names() -> list[str]:
    return list(_BUILDERS)


def fixtures() -> dict[str, FiniteRL]:
    """Catalog of every named algebra."""
    return {name: fixture(name) for name in _BUILDERS}
