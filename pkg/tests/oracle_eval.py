"""Independent brute-force statement evaluator used to cross-check `terms.holds`.

Deliberately shares nothing with the production path: raw table lookups,
its own recursion over assignments, relations expanded from their defining
formulas inline.
"""

from iomlat import terms
from iomlat.algebras import RelationKind


def _ev(t, alg, env):
    tab = alg.table
    if isinstance(t, terms.Var):
        return env[t.name]
    if isinstance(t, terms.Const):
        return alg.one if t.value == 1 else alg.zero
    if isinstance(t, terms.Neg):
        return tab[_ev(t.arg, alg, env)][alg.zero]
    a = _ev(t.lhs, alg, env)
    b = _ev(t.rhs, alg, env)
    if isinstance(t, terms.Imp):
        return tab[a][b]
    if isinstance(t, terms.Cup):
        return tab[tab[a][b]][b]
    # meet-like: ((a' -> b') -> b')'
    na, nb = tab[a][alg.zero], tab[b][alg.zero]
    return tab[tab[tab[na][nb]][nb]][alg.zero]


def _atom(atom, alg, env):
    a = _ev(atom.lhs, alg, env)
    b = _ev(atom.rhs, alg, env)
    tab = alg.table
    z = alg.zero
    if isinstance(atom, terms.Equation):
        return a == b
    if atom.kind is RelationKind.LE:
        return tab[a][b] == alg.one
    if atom.kind is RelationKind.LE_Q:
        na, nb = tab[a][z], tab[b][z]
        return tab[tab[tab[na][nb]][nb]][z] == a
    if atom.kind is RelationKind.LE_L:
        return tab[tab[a][tab[b][z]]][z] == a
    return tab[tab[a][tab[b][z]]][tab[tab[a][b]][z]] == a


def brute_holds(stmt, alg):
    """Recursive assignment sweep; returns the same verdict as terms.holds."""
    names = stmt.vars
    env = {}

    def rec(i):
        if i == len(names):
            if isinstance(stmt, terms.Equation):
                return _atom(stmt, alg, env)
            if all(_atom(h, alg, env) for h in stmt.hypotheses):
                return _atom(stmt.conclusion, alg, env)
            return True
        for v in range(alg.size):
            env[names[i]] = v
            if not rec(i + 1):
                return False
        del env[names[i]]
        return True

    return rec(0)
