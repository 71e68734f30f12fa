"""Bundled rings and modules, written in the declarative text format."""

from __future__ import annotations

from functools import lru_cache

from .fpmod import FPModule
from .textformat import Document, parse_document

FIXTURE_TEXT = """\
# R1 = k[x] x_k k[y]
ring R1 = GF(32003)[x,y] mod [x*y]
module R1_Rx over R1 = coker [[x]]
module R1_Ry over R1 = coker [[y]]
module R1_k over R1 = coker [[x, y]]
ideal R1_I over R1 = [x]
ideal R1_J over R1 = [y]

# R2 = k[x] x_k k[y,z]
ring R2 = GF(32003)[x,y,z] mod [x*y, x*z]
module R2_Ry over R2 = coker [[y]]
module R2_Rx over R2 = coker [[x]]
module R2_RI over R2 = coker [[y, z]]
module R2_TrI over R2 = coker [[x, 0], [0, x], [z, -y]]
module R2_k over R2 = coker [[x, y, z]]
ideal R2_I over R2 = [y, z]
ideal R2_J over R2 = [x]

# R3 = k[x]/(x^2) x_k k[y]
ring R3 = GF(32003)[x,y] mod [x^2, x*y]
module R3_Ry over R3 = coker [[y]]
module R3_Rx over R3 = coker [[x]]
module R3_k over R3 = coker [[x, y]]
ideal R3_I over R3 = [x]
ideal R3_J over R3 = [y]

# R4 = R1[t], depth 2
ring R4 = GF(32003)[x,y,t] mod [x*y]
module R4_Rtx over R4 = coker [[t, x]]
module R4_k over R4 = coker [[x, y, t]]

# R5: 2x2 minors of [[x, y, z], [y, z^2, x]], weights making it graded
ring R5 = GF(32003)[x,y,z] weights [4,5,3] mod [x*z^2 - y^2, x^2 - y*z, x*y - z^3]
module R5_k over R5 = coker [[x, y, z]]

# factors for building fiber products
ring S1 = GF(32003)[a] mod [a^2]
ring T1 = GF(32003)[b,c]
"""

FIBER_PRODUCTS = ("R1", "R2", "R3")


@lru_cache(maxsize=None)
def _document(field=None) -> Document:
    return parse_document(FIXTURE_TEXT, field)


def document(field=None) -> Document:
    return _document(field)


def ring(name: str, field=None):
    return document(field).ring(name)


def module(name: str, field=None) -> FPModule:
    return document(field).module(name)


def ideal(name: str, field=None) -> list:
    return document(field).ideal(name)


# (ring, module, I, J, expected case, anchor)
CLASSIFICATION_CASES = (
    ("R1", "R1_Rx", "R1_I", "R1_J", "v", "Thus, (v) holds"),
    ("R1", "R1_Ry", "R1_I", "R1_J", "iv", "if we set M=R/J, then (iv) holds"),
    ("R2", "R2_TrI", "R2_I", "R2_J", "iv", "shows that (iv) holds"),
    ("R2", "R2_Ry", "R2_I", "R2_J", "ii", "satisfies (ii), but not (i) and (iii)-(v)"),
    ("R3", "R3_Ry", "R3_I", "R3_J", "i", "statement (i) holds true"),
    ("R2", "R2_Rx", "R2_I", "R2_J", "i", "satisfying (i) but not (ii)-(v)"),
)

# modules of infinite projective dimension used for the splitting theorem
INFINITE_PD_MODULES = {
    "R1": ("R1_Rx", "R1_Ry", "R1_k"),
    "R2": ("R2_Ry", "R2_Rx", "R2_TrI", "R2_RI", "R2_k"),
    "R3": ("R3_Ry", "R3_Rx", "R3_k"),
}


def random_module(ring, rng, max_rows: int = 2, max_cols: int = 3, max_degree: int = 2) -> FPModule:
    """Cokernel of a random homogeneous matrix with entries in the maximal ideal.

    Rows sit in degree 0; column ``j`` has a random degree in ``1..max_degree``
    (standard grading assumed).
    """
    from .fpmod import monomials_of_degree
    from .ring import Polynomial

    amb = ring.ambient
    p = ring.field.p or 101
    rows = rng.randint(1, max_rows)
    cols = rng.randint(1, max_cols)
    degs = [rng.randint(1, max_degree) for _ in range(cols)]
    matrix = [[None] * cols for _ in range(rows)]
    for j, d in enumerate(degs):
        monos = [m for m in monomials_of_degree(amb.weights, d) if not ring.is_zero(Polynomial(amb, {m: 1}))]
        for i in range(rows):
            if rng.random() < 0.3:
                matrix[i][j] = amb.zero()
                continue
            picks = rng.sample(monos, min(len(monos), rng.randint(1, 2)))
            matrix[i][j] = ring.reduce(Polynomial(amb, {m: rng.randint(1, p - 1) for m in picks}))
    return FPModule.from_matrix(ring, matrix, [0] * rows, name="random")
