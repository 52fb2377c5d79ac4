"""Built-in example algebras and ortholattices.

These are the desk-scale standards the test suite and the CLI fixtures are
built from: the two- to eight-element Boolean algebras, the six-element
"Chinese lantern" (two incomparable complemented pairs), the six-element
benzene ring (hexagon), and the three-element chain with a self-complemented
midpoint.
"""

from __future__ import annotations

from .algebras import FiniteAlgebra
from .errors import InputError
from .ortho import OrthoLattice, derive_join, from_ortholattice


def boolean_algebra(k: int) -> FiniteAlgebra:
    """Boolean algebra on the subsets of a k-element set, 2**k elements.

    Elements are bitmasks ordered by integer value, so zero is index 0 and
    one is index 2**k - 1; a -> b is the mask complement of (a & ~b).
    """
    n = 1 << k
    full = n - 1
    names = tuple(_mask_name(m, k) for m in range(n))
    table = tuple(tuple((~a | b) & full for b in range(n)) for a in range(n))
    return FiniteAlgebra(names=names, table=table, one=full, zero=0)


def _mask_name(mask: int, k: int) -> str:
    if mask == 0:
        return "0"
    if mask == (1 << k) - 1:
        return "1"
    return "".join("abcdefgh"[i] for i in range(k) if mask >> i & 1)


def b2() -> FiniteAlgebra:
    return boolean_algebra(1)


def b4() -> FiniteAlgebra:
    return boolean_algebra(2)


def b8() -> FiniteAlgebra:
    return boolean_algebra(3)


def o6() -> FiniteAlgebra:
    """The six-element benzene-ring algebra (hexagon), as an implication table.

    Implicative and involutive, but not orthomodular: the commutation
    relation on it is not symmetric.
    """
    names = ("0", "x", "y", "x*", "y*", "1")
    z, x, y, xs, ys, o = range(6)
    table = (
        (o, o, o, o, o, o),
        (xs, o, o, xs, xs, o),
        (ys, o, o, xs, ys, o),
        (x, x, y, o, o, o),
        (y, y, y, o, o, o),
        (z, x, y, xs, ys, o),
    )
    return FiniteAlgebra(names=names, table=table, one=o, zero=z)


def mo2() -> FiniteAlgebra:
    """Two incomparable complemented pairs under common bounds (6 elements).

    The smallest orthomodular lattice that is not Boolean.
    """
    return from_ortholattice(mo2_lattice())


def l3() -> FiniteAlgebra:
    """Three-element chain with self-complemented midpoint.

    Involutive but not implicative: (h -> 0) -> h = 1, not h.
    """
    names = ("0", "h", "1")
    table = ((2, 2, 2), (1, 2, 2), (0, 1, 2))
    return FiniteAlgebra(names=names, table=table, one=2, zero=0)


# -- ortholattices -----------------------------------------------------------


def boolean_lattice(k: int) -> OrthoLattice:
    n = 1 << k
    full = n - 1
    names = tuple(_mask_name(m, k) for m in range(n))
    meet = tuple(tuple(a & b for b in range(n)) for a in range(n))
    join = tuple(tuple(a | b for b in range(n)) for a in range(n))
    ortho = tuple(full ^ a for a in range(n))
    return OrthoLattice(names=names, meet=meet, join=join, ortho=ortho, one=full, zero=0)


def mo2_lattice() -> OrthoLattice:
    """Atoms a, a*, b, b*: distinct atoms meet at 0 and join at 1."""
    names = ("0", "a", "a*", "b", "b*", "1")
    n = 6
    zero, one = 0, 5
    ortho = (one, 2, 1, 4, 3, zero)
    meet_rows = []
    for a in range(n):
        row = []
        for b in range(n):
            if a == b:
                row.append(a)
            elif a == zero or b == zero:
                row.append(zero)
            elif a == one:
                row.append(b)
            elif b == one:
                row.append(a)
            else:
                row.append(zero)
        meet_rows.append(tuple(row))
    meet = tuple(meet_rows)
    return OrthoLattice(names=names, meet=meet, join=derive_join(meet, ortho),
                        ortho=ortho, one=one, zero=zero)


def benzene_lattice() -> OrthoLattice:
    """Hexagon: 0 < x < y < 1 and 0 < y* < x* < 1, complements crosswise."""
    names = ("0", "x", "y", "x*", "y*", "1")
    zero, x, y, xs, ys, one = range(6)
    ortho = (one, xs, ys, x, y, zero)
    below = {
        zero: {zero},
        x: {zero, x},
        y: {zero, x, y},
        ys: {zero, ys},
        xs: {zero, ys, xs},
        one: {zero, x, y, ys, xs, one},
    }
    def lower(a):
        return below[a]

    def meet_of(a, b):
        common = lower(a) & lower(b)
        # the hexagon's chains make every lower set totally ordered
        best = zero
        for c in common:
            if best in lower(c):
                best = c
        return best

    meet = tuple(tuple(meet_of(a, b) for b in range(6)) for a in range(6))
    return OrthoLattice(names=names, meet=meet, join=derive_join(meet, ortho),
                        ortho=ortho, one=one, zero=zero)


def named(name: str):
    """Look up a built-in algebra by its fixture name."""
    table = {"b2": b2, "b4": b4, "b8": b8, "o6": o6, "mo2": mo2, "l3": l3}
    try:
        return table[name]()
    except KeyError:
        raise InputError(f"no built-in algebra named {name!r}") from None
