"""Translation of B-formulas into B-free ones.

Each outermost subformula ``Bψ`` becomes a fresh variable whose name is the
printed text of ``Bψ``; everything else is kept. Plain variable names never
start with ``B``, so the fresh names cannot collide with them.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import FormulaSyntaxError, NotInImage
from ..syntax import Binary, Const, Formula, Unary, Var, parse, to_text


@dataclass(frozen=True)
class StarTranslation:
    source: Formula
    image: Formula

    @property
    def fresh(self) -> dict[str, Formula]:
        """Fresh variable name -> the B-subformula it stands for."""
        out: dict[str, Formula] = {}
        _collect(self.source, out)
        return out


def _collect(f: Formula, out: dict[str, Formula]) -> None:
    if isinstance(f, Unary) and f.op == "B":
        out[to_text(f)] = f
    elif isinstance(f, Binary):
        _collect(f.left, out)
        _collect(f.right, out)


def _star(f: Formula) -> Formula:
    if isinstance(f, Unary):
        if f.op != "B":
            raise ValueError(f"only B may occur in logic formulas, found {f.op}")
        return Var(to_text(f))
    if isinstance(f, Binary):
        return Binary(f.op, _star(f.left), _star(f.right))
    return f


def star_translate(f: Formula) -> StarTranslation:
    return StarTranslation(f, _star(f))


def is_fresh_name(name: str) -> bool:
    return name.startswith("B")


def star_untranslate(g: Formula) -> Formula:
    """Invert the translation; a fresh name must parse to a formula ``Bχ``."""
    if isinstance(g, Var):
        if not is_fresh_name(g.name):
            return g
        try:
            f = parse(g.name)
        except FormulaSyntaxError as err:
            raise NotInImage(f"{g.name!r} is not the name of a B-formula") from err
        if not (isinstance(f, Unary) and f.op == "B") or to_text(f) != g.name:
            raise NotInImage(f"{g.name!r} is not the name of a B-formula")
        return f
    if isinstance(g, Binary):
        return Binary(g.op, star_untranslate(g.left), star_untranslate(g.right))
    if isinstance(g, Const):
        return g
    raise NotInImage(f"{to_text(g)} contains B and is not in the image")
