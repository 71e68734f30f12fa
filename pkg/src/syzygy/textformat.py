"""Line-oriented declarative input format.

::

    # comment
    ring R = GF(32003)[x,y,z] weights [1,1,1] mod [x*y, x*z]
    module M over R = coker [[y]]
    ideal I over R = [y, z]

``weights`` and ``mod`` are optional.  A module line may end with
``degrees [a, b, ...]`` to fix the generator degrees.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import ParseError, SyzygyError
from .fpmod import FPModule
from .ring import Field, QuotientRing, make_quotient_ring

_NAME = r"[A-Za-z_][A-Za-z0-9_]*"
_RING = re.compile(rf"ring\s+({_NAME})\s*=\s*([^\[]+)\[([^\]]*)\]\s*(.*)$")
_MODULE = re.compile(rf"module\s+({_NAME})\s+over\s+({_NAME})\s*=\s*coker\s*(\[.*?\])\s*(?:degrees\s*(\[[^\]]*\]))?\s*$")
_IDEAL = re.compile(rf"ideal\s+({_NAME})\s+over\s+({_NAME})\s*=\s*(\[[^\]]*\])\s*$")
_OPTION = re.compile(r"(weights|mod)\s*(\[[^\]]*\])\s*")


@dataclass
class Document:
    rings: dict = field(default_factory=dict)
    modules: dict = field(default_factory=dict)
    ideals: dict = field(default_factory=dict)   # name -> (ring name, [Polynomial])
    module_rings: dict = field(default_factory=dict)

    def ring(self, name: str) -> QuotientRing:
        try:
            return self.rings[name]
        except KeyError:
            raise ParseError(f"unknown ring {name!r}") from None

    def module(self, name: str) -> FPModule:
        try:
            return self.modules[name]
        except KeyError:
            raise ParseError(f"unknown module {name!r}") from None

    def ideal(self, name: str) -> list:
        try:
            return self.ideals[name][1]
        except KeyError:
            raise ParseError(f"unknown ideal {name!r}") from None


def _flat_list(text: str) -> list[str]:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ParseError(f"expected a bracketed list, got {text!r}")
    inner = text[1:-1].strip()
    if "[" in inner or "]" in inner:
        raise ParseError(f"nested brackets in a flat list: {text!r}")
    return [t.strip() for t in inner.split(",")] if inner else []


def _matrix(text: str) -> list[list[str]]:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ParseError(f"expected a matrix, got {text!r}")
    inner = text[1:-1].strip()
    rows = re.findall(r"\[[^\[\]]*\]", inner)
    if re.sub(r"\[[^\[\]]*\]", "", inner).replace(",", "").strip():
        raise ParseError(f"malformed matrix {text!r}")
    if not rows:
        raise ParseError("empty matrix")
    out = [_flat_list(r) for r in rows]
    if len({len(r) for r in out}) != 1 or not out[0]:
        raise ParseError(f"ragged or empty matrix {text!r}")
    return out


def _ints(items, what) -> list[int]:
    try:
        return [int(t) for t in items]
    except ValueError:
        raise ParseError(f"{what} must be integers: {items}") from None


def parse_document(text: str, field_override=None) -> Document:
    """Parse a whole document; ``field_override`` replaces every ring's field."""
    doc = Document()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            _parse_line(doc, line, field_override)
        except ParseError as e:
            raise ParseError(f"line {lineno}: {e}") from None
        except SyzygyError as e:
            raise ParseError(f"line {lineno}: {type(e).__name__}: {e}") from None
    return doc


def _parse_line(doc: Document, line: str, field_override):
    m = _RING.match(line)
    if m:
        name, fld, vars_, rest = m.groups()
        variables = [v.strip() for v in vars_.split(",") if v.strip()]
        if not variables:
            raise ParseError("a ring needs at least one variable")
        opts = {}
        pos = 0
        rest = rest.strip()
        while pos < len(rest):
            o = _OPTION.match(rest, pos)
            if not o:
                raise ParseError(f"unexpected text {rest[pos:]!r}")
            if o.group(1) in opts:
                raise ParseError(f"duplicate {o.group(1)}")
            opts[o.group(1)] = _flat_list(o.group(2))
            pos = o.end()
        weights = _ints(opts["weights"], "weights") if "weights" in opts else None
        if weights is not None and len(weights) != len(variables):
            raise ParseError("one weight per variable is required")
        f = Field.parse(field_override) if field_override else Field.parse(fld)
        doc.rings[name] = make_quotient_ring(variables, weights, f, opts.get("mod", []), name=name)
        return
    m = _MODULE.match(line)
    if m:
        name, rname, mat, degs = m.groups()
        ring = doc.ring(rname)
        degrees = _ints(_flat_list(degs), "degrees") if degs else None
        rows = _matrix(mat)
        if degrees is not None and len(degrees) != len(rows):
            raise ParseError("one degree per matrix row is required")
        doc.modules[name] = FPModule.from_matrix(ring, rows, degrees, name=name)
        doc.module_rings[name] = rname
        return
    m = _IDEAL.match(line)
    if m:
        name, rname, gens = m.groups()
        ring = doc.ring(rname)
        doc.ideals[name] = (rname, [ring.ambient(g) for g in _flat_list(gens)])
        return
    raise ParseError(f"cannot parse {line!r}")


def load(path) -> Document:
    with open(path, encoding="utf-8") as fh:
        return parse_document(fh.read())
