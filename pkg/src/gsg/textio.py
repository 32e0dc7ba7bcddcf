"""Line-based text format for workspaces of semigroups, homs, and amalgams.

Grammar, one directive per line, `#` starts a comment, blank lines are
ignored:

    semigroup <name>          hom <name> : <src> -> <dst>    amalgam <name>
    elements <tok>...         map <x> -> <y>                 core <name>
    gammas <tok>...           gmap <g> -> <h>                parts <s1> <s2>
    op <x> <g> <y> = <z>      end                            maps <f1> <f2>
    end                                                      mode same-gamma|disjoint
                                                             end

Tokens are runs of non-whitespace characters; `#`, `=`, and the two-character
arrow `->` never belong to a token.  References resolve against blocks
declared earlier in the same file.  `serialize` emits the canonical form:
declaration order, op lines sorted by index, single spaces, newline line
endings; its output is a byte-exact fixpoint of parse-then-serialize.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Sequence

from .amalgams import GammaAmalgam, validate_amalgam
from .core import GammaHomomorphism, GammaSemigroup, validate_table
from .errors import (
    DuplicateEntry,
    GsgError,
    ParseError,
    UnknownIdentifier,
    UnresolvedReference,
)
from .words import Mode

__all__ = ["Workspace", "parse", "serialize"]

_TOKEN_RE = re.compile(r"(?:->)|=|(?:(?!->)[^\s#=])+")


@dataclass(frozen=True)
class Workspace:
    """Everything one file declared, in declaration order."""
    semigroups: tuple[GammaSemigroup, ...]
    homs: tuple[GammaHomomorphism, ...]
    amalgams: tuple[GammaAmalgam, ...]
    order: tuple[tuple[str, str], ...]

    @classmethod
    def of(cls, semigroups: Sequence[GammaSemigroup] = (),
           homs: Sequence[GammaHomomorphism] = (),
           amalgams: Sequence[GammaAmalgam] = ()) -> "Workspace":
        order = tuple([("semigroup", s.name) for s in semigroups]
                      + [("hom", f.name) for f in homs]
                      + [("amalgam", a.name) for a in amalgams])
        return cls(tuple(semigroups), tuple(homs), tuple(amalgams), order)

    def semigroup(self, name: str) -> GammaSemigroup:
        for s in self.semigroups:
            if s.name == name:
                return s
        raise UnknownIdentifier(name, "semigroup")

    def hom(self, name: str) -> GammaHomomorphism:
        for f in self.homs:
            if f.name == name:
                return f
        raise UnknownIdentifier(name, "hom")

    def amalgam(self, name: str) -> GammaAmalgam:
        for a in self.amalgams:
            if a.name == name:
                return a
        raise UnknownIdentifier(name, "amalgam")


def _tokenize(raw: str) -> list[tuple[str, int]]:
    line = raw.split("#", 1)[0]
    return [(m.group(), m.start() + 1) for m in _TOKEN_RE.finditer(line)]


def parse(text: str) -> Workspace:
    """Parse one workspace file.  Raises ParseError (or its subclass
    UnresolvedReference) with a 1-based line and column on any problem,
    including table totality and amalgam validity."""
    lines = text.splitlines()
    semigroups: dict[str, GammaSemigroup] = {}
    homs: dict[str, GammaHomomorphism] = {}
    amalgams: dict[str, GammaAmalgam] = {}
    order: list[tuple[str, str]] = []

    i = 0
    while i < len(lines):
        toks = _tokenize(lines[i])
        if not toks:
            i += 1
            continue
        head, col = toks[0]
        hline = i + 1
        if head == "semigroup":
            s, i = _parse_semigroup(lines, i, toks)
            if s.name in semigroups:
                raise ParseError(hline, col, f"semigroup {s.name!r} declared twice")
            semigroups[s.name] = s
            order.append(("semigroup", s.name))
        elif head == "hom":
            f, i = _parse_hom(lines, i, toks, semigroups)
            if f.name in homs:
                raise ParseError(hline, col, f"hom {f.name!r} declared twice")
            homs[f.name] = f
            order.append(("hom", f.name))
        elif head == "amalgam":
            a, i = _parse_amalgam(lines, i, toks, semigroups, homs)
            if a.name in amalgams:
                raise ParseError(hline, col, f"amalgam {a.name!r} declared twice")
            amalgams[a.name] = a
            order.append(("amalgam", a.name))
        else:
            raise ParseError(i + 1, col,
                             f"expected 'semigroup', 'hom', or 'amalgam', got {head!r}")
    return Workspace(tuple(semigroups.values()), tuple(homs.values()),
                     tuple(amalgams.values()), tuple(order))


def _expect_name(toks, lineno: int, what: str) -> str:
    if len(toks) != 2:
        raise ParseError(lineno, toks[0][1], f"expected '{what} <name>'")
    return toks[1][0]


def _parse_semigroup(lines, start: int, header):
    name = _expect_name(header, start + 1, "semigroup")
    elements: Optional[tuple[str, ...]] = None
    gammas: Optional[tuple[str, ...]] = None
    entries: list[tuple[str, str, str, str]] = []
    seen: dict[tuple[str, str, str], str] = {}
    i = start + 1
    while i < len(lines):
        toks = _tokenize(lines[i])
        lineno = i + 1
        if not toks:
            i += 1
            continue
        key, col = toks[0]
        if key == "end":
            if len(toks) != 1:
                raise ParseError(lineno, toks[1][1], "nothing may follow 'end'")
            if elements is None:
                raise ParseError(lineno, col, "semigroup block has no 'elements' line")
            if gammas is None:
                raise ParseError(lineno, col, "semigroup block has no 'gammas' line")
            try:
                return validate_table(name, elements, gammas, entries), i + 1
            except GsgError as e:
                raise ParseError(lineno, col, str(e)) from None
        elif key == "elements":
            if elements is not None:
                raise ParseError(lineno, col, "'elements' given twice")
            if len(toks) < 2:
                raise ParseError(lineno, col, "'elements' needs at least one name")
            elements = tuple(t for t, _ in toks[1:])
        elif key == "gammas":
            if gammas is not None:
                raise ParseError(lineno, col, "'gammas' given twice")
            if len(toks) < 2:
                raise ParseError(lineno, col, "'gammas' needs at least one name")
            gammas = tuple(t for t, _ in toks[1:])
        elif key == "op":
            if elements is None or gammas is None:
                raise ParseError(lineno, col,
                                 "'op' lines must follow 'elements' and 'gammas'")
            if len(toks) != 6 or toks[4][0] != "=":
                raise ParseError(lineno, col, "expected 'op <x> <g> <y> = <z>'")
            x, g, y, z = toks[1], toks[2], toks[3], toks[5]
            for tok, tcol in (x, y, z):
                if tok not in elements:
                    raise UnresolvedReference(tok, lineno, tcol)
            if g[0] not in gammas:
                raise UnresolvedReference(g[0], lineno, g[1])
            triple = (x[0], g[0], y[0])
            if triple in seen and seen[triple] != z[0]:
                raise ParseError(lineno, col, str(DuplicateEntry(
                    x[0], g[0], y[0], seen[triple], z[0])))
            seen[triple] = z[0]
            entries.append((x[0], g[0], y[0], z[0]))
        else:
            raise ParseError(lineno, col,
                             f"expected 'elements', 'gammas', 'op', or 'end', got {key!r}")
        i += 1
    raise ParseError(len(lines), 1, f"semigroup {name!r} is missing 'end'")


def _parse_hom(lines, start: int, header, semigroups):
    lineno = start + 1
    if (len(header) != 6 or header[2][0] != ":" or header[4][0] != "->"):
        raise ParseError(lineno, header[0][1],
                         "expected 'hom <name> : <src> -> <dst>'")
    name = header[1][0]
    src_tok, dst_tok = header[3], header[5]
    if src_tok[0] not in semigroups:
        raise UnresolvedReference(src_tok[0], lineno, src_tok[1])
    if dst_tok[0] not in semigroups:
        raise UnresolvedReference(dst_tok[0], lineno, dst_tok[1])
    src, dst = semigroups[src_tok[0]], semigroups[dst_tok[0]]
    carrier: dict[str, str] = {}
    gmap: dict[str, str] = {}
    i = start + 1
    while i < len(lines):
        toks = _tokenize(lines[i])
        lineno = i + 1
        if not toks:
            i += 1
            continue
        key, col = toks[0]
        if key == "end":
            if len(toks) != 1:
                raise ParseError(lineno, toks[1][1], "nothing may follow 'end'")
            for e in src.elements:
                if e not in carrier:
                    raise ParseError(lineno, col, f"no 'map' line for element {e!r}")
            for h in src.gammas:
                if h not in gmap:
                    raise ParseError(lineno, col, f"no 'gmap' line for gamma {h!r}")
            return GammaHomomorphism(name, src, dst, carrier, gmap), i + 1
        elif key in ("map", "gmap"):
            if len(toks) != 4 or toks[2][0] != "->":
                raise ParseError(lineno, col, f"expected '{key} <a> -> <b>'")
            a, b = toks[1], toks[3]
            if key == "map":
                if a[0] not in src.elements:
                    raise UnresolvedReference(a[0], lineno, a[1])
                if b[0] not in dst.elements:
                    raise UnresolvedReference(b[0], lineno, b[1])
                if a[0] in carrier:
                    raise ParseError(lineno, a[1], f"element {a[0]!r} mapped twice")
                carrier[a[0]] = b[0]
            else:
                if a[0] not in src.gammas:
                    raise UnresolvedReference(a[0], lineno, a[1])
                if b[0] not in dst.gammas:
                    raise UnresolvedReference(b[0], lineno, b[1])
                if a[0] in gmap:
                    raise ParseError(lineno, a[1], f"gamma {a[0]!r} mapped twice")
                gmap[a[0]] = b[0]
        else:
            raise ParseError(lineno, col,
                             f"expected 'map', 'gmap', or 'end', got {key!r}")
        i += 1
    raise ParseError(len(lines), 1, f"hom {name!r} is missing 'end'")


def _parse_amalgam(lines, start: int, header, semigroups, homs):
    name = _expect_name(header, start + 1, "amalgam")
    core: Optional[GammaSemigroup] = None
    parts: Optional[tuple[GammaSemigroup, GammaSemigroup]] = None
    maps: Optional[tuple[GammaHomomorphism, GammaHomomorphism]] = None
    mode: Optional[Mode] = None
    i = start + 1
    while i < len(lines):
        toks = _tokenize(lines[i])
        lineno = i + 1
        if not toks:
            i += 1
            continue
        key, col = toks[0]
        if key == "end":
            if len(toks) != 1:
                raise ParseError(lineno, toks[1][1], "nothing may follow 'end'")
            missing = [k for k, v in (("core", core), ("parts", parts),
                                      ("maps", maps), ("mode", mode)) if v is None]
            if missing:
                raise ParseError(lineno, col,
                                 f"amalgam block is missing: {', '.join(missing)}")
            amalgam = GammaAmalgam(name, core, parts, maps, mode)
            defects = validate_amalgam(amalgam)
            if defects:
                raise ParseError(start + 1, header[0][1],
                                 "; ".join(str(d) for d in defects))
            return amalgam, i + 1
        elif key == "core":
            if core is not None:
                raise ParseError(lineno, col, "'core' given twice")
            tok = (_expect_name(toks, lineno, "core"), toks[1][1])
            if tok[0] not in semigroups:
                raise UnresolvedReference(tok[0], lineno, tok[1])
            core = semigroups[tok[0]]
        elif key == "parts":
            if parts is not None:
                raise ParseError(lineno, col, "'parts' given twice")
            if len(toks) != 3:
                raise ParseError(lineno, col, "expected 'parts <s1> <s2>'")
            found = []
            for tok, tcol in toks[1:]:
                if tok not in semigroups:
                    raise UnresolvedReference(tok, lineno, tcol)
                found.append(semigroups[tok])
            parts = (found[0], found[1])
        elif key == "maps":
            if maps is not None:
                raise ParseError(lineno, col, "'maps' given twice")
            if len(toks) != 3:
                raise ParseError(lineno, col, "expected 'maps <f1> <f2>'")
            found = []
            for tok, tcol in toks[1:]:
                if tok not in homs:
                    raise UnresolvedReference(tok, lineno, tcol)
                found.append(homs[tok])
            maps = (found[0], found[1])
        elif key == "mode":
            if mode is not None:
                raise ParseError(lineno, col, "'mode' given twice")
            word = _expect_name(toks, lineno, "mode")
            try:
                mode = Mode(word)
            except ValueError:
                raise ParseError(lineno, toks[1][1],
                                 "mode must be 'same-gamma' or 'disjoint'") from None
        else:
            raise ParseError(lineno, col,
                             f"expected 'core', 'parts', 'maps', 'mode', or 'end', "
                             f"got {key!r}")
        i += 1
    raise ParseError(len(lines), 1, f"amalgam {name!r} is missing 'end'")


def serialize(w: Workspace) -> str:
    """Canonical text for a workspace; see the module docstring."""
    blocks = []
    for kind, name in w.order:
        if kind == "semigroup":
            blocks.append(_ser_semigroup(w.semigroup(name)))
        elif kind == "hom":
            blocks.append(_ser_hom(w.hom(name)))
        else:
            blocks.append(_ser_amalgam(w.amalgam(name)))
    return "\n".join(blocks)


def _ser_semigroup(s: GammaSemigroup) -> str:
    out = [f"semigroup {s.name}",
           "elements " + " ".join(s.elements),
           "gammas " + " ".join(s.gammas)]
    for i, x in enumerate(s.elements):
        for j, g in enumerate(s.gammas):
            for k, y in enumerate(s.elements):
                out.append(f"op {x} {g} {y} = {s.elements[s.table[i, j, k]]}")
    out.append("end")
    return "\n".join(out) + "\n"


def _ser_hom(f: GammaHomomorphism) -> str:
    out = [f"hom {f.name} : {f.source.name} -> {f.target.name}"]
    for e in f.source.elements:
        out.append(f"map {e} -> {f.carrier_map[e]}")
    for h in f.source.gammas:
        out.append(f"gmap {h} -> {f.gamma_map[h]}")
    out.append("end")
    return "\n".join(out) + "\n"


def _ser_amalgam(a: GammaAmalgam) -> str:
    out = [f"amalgam {a.name}",
           f"core {a.core.name}",
           f"parts {a.parts[0].name} {a.parts[1].name}",
           f"maps {a.maps[0].name} {a.maps[1].name}",
           f"mode {a.mode.value}",
           "end"]
    return "\n".join(out) + "\n"
