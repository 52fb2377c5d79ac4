"""Enumeration of all finite models of a class, modulo isomorphism.

Two independent routes exist on purpose.  The production route fixes zero at
index 0 and one at index n-1, chooses the negation column as an involution
pairing 0 with 1 (fixed points on middle elements are permitted: where they
are impossible it is the axioms that kill them, not fiat), propagates the
cells forced by the axioms, and backtracks over the remaining cells with
incremental violation checks.  `brute_force_models` is the unpruned
cross-check: it enumerates every completion of the definitionally forced
frame and post-filters with hand-coded axiom loops, sharing nothing with the
backtracker but the labeling convention.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .algebras import FiniteAlgebra
from .errors import ConsistencyError, InputError
from . import axioms, structure, terms

CLASSES = ("be", "invbe", "implinvbe", "ioml", "iboolean")
DEFAULT_MAX_SIZE = 8

_CLASS_LABEL_CHECK = {
    "be": lambda r: r.is_bounded_be,
    "invbe": lambda r: r.is_involutive_be,
    "implinvbe": lambda r: r.is_implicative_involutive_be,
    "ioml": lambda r: r.is_ioml,
    "iboolean": lambda r: r.is_implicative_boolean,
}


@dataclass(frozen=True)
class EnumerationTask:
    size: int
    klass: str = "implinvbe"
    modulo_iso: bool = True
    statement: str | None = None
    cell_order: str = "row-major"
    orderly: bool = False
    max_size: int = DEFAULT_MAX_SIZE

    def __post_init__(self):
        if self.klass not in CLASSES:
            raise InputError(f"unknown class {self.klass!r}; expected one of {', '.join(CLASSES)}")
        if self.cell_order not in ("row-major", "column-major"):
            raise InputError("cell_order must be 'row-major' or 'column-major'")
        if not 2 <= self.size <= self.max_size:
            raise InputError(
                f"size {self.size} outside 2..{self.max_size}; raise the cap explicitly if intended"
            )


def _middle_names(n: int) -> tuple[str, ...]:
    letters = "abcdefghijklmnop"
    return ("0",) + tuple(letters[i] for i in range(n - 2)) + ("1",)


def _involutions(n: int) -> list[tuple[int, ...]]:
    """All involutions of 0..n-1 that swap 0 and n-1, fixed points allowed."""
    middles = list(range(1, n - 1))
    found: list[tuple[int, ...]] = []

    def rec(remaining, acc):
        if not remaining:
            sigma = list(range(n))
            sigma[0], sigma[n - 1] = n - 1, 0
            for a, b in acc:
                sigma[a] = b
            found.append(tuple(sigma))
            return
        a = remaining[0]
        rec(remaining[1:], acc + [(a, a)])
        for b in remaining[1:]:
            rest = [c for c in remaining[1:] if c != b]
            rec(rest, acc + [(a, b), (b, a)])

    rec(middles, [])
    return found


class _Searcher:
    def __init__(self, n: int, klass: str, cell_order: str):
        self.n = n
        self.klass = klass
        self.cell_order = cell_order
        self.involutive = klass != "be"
        self.implicative = klass in ("implinvbe", "ioml", "iboolean")

    # -- forced frame ------------------------------------------------------

    def _init_table(self, sigma):
        n = self.n
        one = n - 1
        t = [[None] * n for _ in range(n)]

        def put(a, b, v):
            cur = t[a][b]
            if cur is None:
                t[a][b] = v
                return True
            return cur == v

        for b in range(n):
            if not put(0, b, one):          # zero below everything
                return None
            if not put(one, b, b):          # one is a left identity
                return None
        for a in range(n):
            if not put(a, one, one):        # everything below one
                return None
            if not put(a, a, one):          # reflexivity of the arrow
                return None
        if sigma is not None:
            for a in range(n):
                if not put(a, 0, sigma[a]):
                    return None
            if self.implicative:
                # x -> x' = x' and x' -> x = x hold on the implicative class
                for a in range(n):
                    if not put(a, sigma[a], sigma[a]):
                        return None
                    if not put(sigma[a], a, a):
                        return None
            # a -> b equals sigma(b) -> sigma(a) (exchange with the bottom)
            for a in range(n):
                for b in range(n):
                    v = t[a][b]
                    if v is not None and not put(sigma[b], sigma[a], v):
                        return None
        return t

    # -- incremental violation checks ---------------------------------------

    def _violates(self, t, a, b, sigma):
        """Any fully determined axiom instance broken by cell (a, b)?"""
        n = self.n
        v = t[a][b]
        for x in range(n):
            for X, Y, Z in ((x, a, b), (a, x, b)):
                d = t[Y][Z]
                e = t[X][Z]
                if d is None or e is None:
                    continue
                u = t[X][d]
                w = t[Y][e]
                if u is not None and w is not None and u != w:
                    return True
        for p in range(n):
            row = t[p]
            for q in range(n):
                if row[q] == b:
                    for X, Y, Z in ((a, p, q), (p, a, q)):
                        d = t[Y][Z]
                        e = t[X][Z]
                        if d is None or e is None:
                            continue
                        u = t[X][d]
                        w = t[Y][e]
                        if u is not None and w is not None and u != w:
                            return True
        if self.implicative:
            u = t[v][a]
            if u is not None and u != a:
                return True
            rowb = t[b]
            for y in range(n):
                if rowb[y] == a and v != b:
                    return True
        if self.klass == "ioml":
            if self._iom_partial_violation(t, sigma):
                return True
        if self.klass == "iboolean":
            if self._idiv_partial_violation(t, sigma):
                return True
        return False

    def _iom_partial_violation(self, t, sigma):
        # join form: x cup (x -> y)' = x, evaluated lazily on the partial table
        n = self.n
        for x in range(n):
            for y in range(n):
                c = t[x][y]
                if c is None:
                    continue
                d = sigma[c]
                e = t[x][d]
                if e is None:
                    continue
                f = t[e][d]
                if f is not None and f != x:
                    return True
        return False

    def _idiv_partial_violation(self, t, sigma):
        n = self.n
        for x in range(n):
            for y in range(n):
                c = t[x][y]
                if c is None:
                    continue
                lhs = t[x][sigma[c]]
                rhs = t[x][sigma[y]]
                if lhs is not None and rhs is not None and lhs != rhs:
                    return True
        return False

    # -- full checks at the leaves --------------------------------------------

    def _complete_ok(self, t, sigma):
        n = self.n
        one = n - 1
        for a in range(n):
            if t[a][a] != one or t[a][one] != one or t[one][a] != a or t[0][a] != one:
                return False
        for x in range(n):
            tx = t[x]
            for y in range(n):
                ty = t[y]
                for z in range(n):
                    if tx[ty[z]] != ty[tx[z]]:
                        return False
        if self.involutive:
            for a in range(n):
                if t[t[a][0]][0] != a:
                    return False
        if self.implicative:
            for x in range(n):
                for y in range(n):
                    if t[t[x][y]][x] != x:
                        return False
        if self.klass == "ioml":
            neg = [t[a][0] for a in range(n)]

            def cap(u, w):
                return neg[t[t[neg[u]][neg[w]]][neg[w]]]

            for x in range(n):
                for y in range(n):
                    if cap(x, t[y][x]) != x:
                        return False
        if self.klass == "iboolean":
            neg = [t[a][0] for a in range(n)]
            for x in range(n):
                for y in range(n):
                    if t[x][neg[t[x][y]]] != t[x][neg[y]]:
                        return False
        return True

    # -- driver ---------------------------------------------------------------

    def run(self) -> Iterator[tuple[tuple[int, ...], ...]]:
        n = self.n
        sigmas = _involutions(n) if self.involutive else [None]
        for sigma in sigmas:
            t = self._init_table(sigma)
            if t is None:
                continue
            free = [(a, b) for a in range(n) for b in range(n) if t[a][b] is None]
            if self.cell_order == "column-major":
                free.sort(key=lambda cell: (cell[1], cell[0]))
            if sigma is not None:
                kept = []
                for a, b in free:
                    mirror = (sigma[b], sigma[a])
                    if mirror == (a, b) or (a, b) < mirror:
                        kept.append((a, b))
                free = kept
            yield from self._assign(t, free, 0, sigma)

    def _assign(self, t, free, idx, sigma):
        n = self.n
        if idx == len(free):
            if self._complete_ok(t, sigma):
                yield tuple(tuple(row) for row in t)
            return
        a, b = free[idx]
        if t[a][b] is not None:
            # filled by the mirror of an earlier cell
            yield from self._assign(t, free, idx + 1, sigma)
            return
        mirror = None
        if sigma is not None:
            m = (sigma[b], sigma[a])
            if m != (a, b):
                mirror = m
        for v in range(n):
            t[a][b] = v
            placed_mirror = False
            ok = True
            if mirror is not None:
                ma, mb = mirror
                if t[ma][mb] is None:
                    t[ma][mb] = v
                    placed_mirror = True
                elif t[ma][mb] != v:
                    ok = False
            if ok and self._violates(t, a, b, sigma):
                ok = False
            if ok and placed_mirror and self._violates(t, mirror[0], mirror[1], sigma):
                ok = False
            if ok:
                yield from self._assign(t, free, idx + 1, sigma)
            if placed_mirror:
                t[mirror[0]][mirror[1]] = None
            t[a][b] = None


def _table_to_algebra(table, n) -> FiniteAlgebra:
    return FiniteAlgebra(names=_middle_names(n), table=table, one=n - 1, zero=0)


def enumerate_models(task: EnumerationTask) -> Iterator[FiniteAlgebra]:
    """All models of the class at the requested size, deterministically.

    Output is sorted by canonical form ascending; with `modulo_iso` exactly
    one representative per isomorphism class survives.  Every emitted model
    is re-classified against the requested class before being yielded.
    """
    searcher = _Searcher(task.size, task.klass, task.cell_order)
    found = []
    seen = set()
    for table in searcher.run():
        alg = _table_to_algebra(table, task.size)
        key = structure.canonical_key(alg)
        if task.modulo_iso:
            if task.orderly:
                if alg.table != key:
                    continue
            elif key in seen:
                continue
            seen.add(key)
            # emit the canonical labeling so the representative does not
            # depend on the cell-assignment schedule
            alg = _table_to_algebra(key, task.size)
        found.append((key, alg.table, alg))
    found.sort(key=lambda item: (item[0], item[1]))
    checker = _CLASS_LABEL_CHECK[task.klass]
    for _, _, alg in found:
        if not checker(axioms.classify(alg)):
            raise ConsistencyError(
                f"search emitted a table outside class {task.klass!r}"
            )
        yield alg


def count_models(size: int, klass: str, modulo_iso: bool = True,
                 max_size: int = DEFAULT_MAX_SIZE) -> int:
    task = EnumerationTask(size=size, klass=klass, modulo_iso=modulo_iso, max_size=max_size)
    return sum(1 for _ in enumerate_models(task))


def find_counterexample(statement, klass: str, max_size: int):
    """Smallest-size model of the class falsifying the statement, or None.

    Ties are broken by canonical order, so the result is deterministic.
    """
    stmt = terms.parse_statement(statement) if isinstance(statement, str) else statement
    source = statement if isinstance(statement, str) else terms.format_statement(statement)
    for n in range(2, max_size + 1):
        task = EnumerationTask(size=n, klass=klass, modulo_iso=True,
                               statement=source, max_size=max(n, DEFAULT_MAX_SIZE))
        for alg in enumerate_models(task):
            result = terms.holds(stmt, alg)
            if not result.ok:
                return alg, result.witness
    return None


# -- independent unpruned oracle ----------------------------------------------


def _oracle_frame(n: int):
    one = n - 1
    t = [[None] * n for _ in range(n)]
    for b in range(n):
        t[0][b] = one
        t[one][b] = b
    for a in range(n):
        t[a][one] = one
        t[a][a] = one
    return t


def _oracle_ok(t, n, klass) -> bool:
    for x in range(n):
        tx = t[x]
        for y in range(n):
            ty = t[y]
            for z in range(n):
                if tx[ty[z]] != ty[tx[z]]:
                    return False
    if klass == "be":
        return True
    for a in range(n):
        if t[t[a][0]][0] != a:
            return False
    if klass == "invbe":
        return True
    for x in range(n):
        for y in range(n):
            if t[t[x][y]][x] != x:
                return False
    if klass == "implinvbe":
        return True
    neg = [t[a][0] for a in range(n)]
    if klass == "ioml":
        for x in range(n):
            for y in range(n):
                u = t[y][x]
                if neg[t[t[neg[x]][neg[u]]][neg[u]]] != x:
                    return False
        return True
    for x in range(n):
        for y in range(n):
            if t[x][neg[t[x][y]]] != t[x][neg[y]]:
                return False
    return True


def brute_force_models(size: int, klass: str) -> list[FiniteAlgebra]:
    """Enumerate-and-filter oracle; no propagation, no search-tree pruning.

    Intended for cross-checking the backtracking route at small sizes; the
    cost is n ** (free cells), so keep the bottom-row product outermost and
    the sizes modest.
    """
    if klass not in CLASSES:
        raise InputError(f"unknown class {klass!r}")
    n = size
    if n < 2:
        raise InputError("oracle wants size >= 2")
    one = n - 1
    middles = list(range(1, n - 1))
    frame = _oracle_frame(n)
    col0_cells = [(a, 0) for a in middles]
    rest_cells = [
        (a, b) for a in middles for b in middles if frame[a][b] is None
    ]
    involutive = klass != "be"
    out = []
    for col0 in itertools.product(range(n), repeat=len(col0_cells)):
        if involutive:
            neg = [one] + list(col0) + [0]
            if any(not 0 <= neg[a] < n or neg[neg[a]] != a for a in range(n)):
                continue
        for rest in itertools.product(range(n), repeat=len(rest_cells)):
            t = [row[:] for row in frame]
            for (a, b), v in zip(col0_cells, col0):
                t[a][b] = v
            for (a, b), v in zip(rest_cells, rest):
                t[a][b] = v
            if _oracle_ok(t, n, klass):
                out.append(_table_to_algebra(tuple(tuple(r) for r in t), n))
    return out
