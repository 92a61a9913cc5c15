"""Independent sympy oracle for the catalog identities.

Builds prolongations, brackets and invariance residuals directly with sympy,
without sharing any code path with the C++ engine. Used to derive and freeze
expected values (ranks, monomial counts, errata) for the C++ test suites.
"""
import itertools
import sympy as sp


class Jet:
    def __init__(self, ind, dep, order):
        self.ind = [sp.Symbol(n) for n in ind]
        self.dep = [sp.Symbol(n) for n in dep]
        self.order = order
        self.sep = "" if all(len(n) == 1 for n in ind) else "_"
        self.jets = {}  # (dep index, sorted tuple of ind indices) -> symbol
        for k in range(1, order + 2):
            for a, d in enumerate(self.dep):
                for J in itertools.combinations_with_replacement(range(len(ind)), k):
                    name = str(d) + "_" + self.sep.join(ind[j] for j in J)
                    self.jets[(a, J)] = sp.Symbol(name)

    def coord(self, a, J):
        if not J:
            return self.dep[a]
        return self.jets[(a, tuple(sorted(J)))]

    def coords(self, order):
        out = list(self.ind) + list(self.dep)
        for k in range(1, order + 1):
            for a in range(len(self.dep)):
                for J in itertools.combinations_with_replacement(range(len(self.ind)), k):
                    out.append(self.coord(a, J))
        return out

    def D(self, e, i, order):
        r = sp.diff(e, self.ind[i])
        for a in range(len(self.dep)):
            r += self.coord(a, (i,)) * sp.diff(e, self.dep[a])
            for k in range(1, order + 1):
                for J in itertools.combinations_with_replacement(range(len(self.ind)), k):
                    r += self.coord(a, J + (i,)) * sp.diff(e, self.coord(a, J))
        return r

    def prolong(self, xi, eta, order):
        """xi: list per independent, eta: list per dependent. Returns dict coord->coef."""
        coef = {}
        for i, x in enumerate(self.ind):
            coef[x] = xi[i]
        for a, u in enumerate(self.dep):
            coef[u] = eta[a]
        for k in range(1, order + 1):
            for a in range(len(self.dep)):
                for J in itertools.combinations_with_replacement(range(len(self.ind)), k):
                    parent = J[:-1]
                    i = J[-1]
                    base = coef[self.coord(a, parent)]
                    v = self.D(base, i, k - 1)
                    for j in range(len(self.ind)):
                        v -= self.D(xi[j], i, 0) * self.coord(a, parent + (j,))
                    coef[self.coord(a, J)] = sp.expand(v)
        return coef

    def apply(self, coef, e):
        return sum(c * sp.diff(e, s) for s, c in coef.items())


def field(space, **kw):
    xi = [sp.sympify(kw.get(str(x), 0)) for x in space.ind]
    eta = [sp.sympify(kw.get(str(u), 0)) for u in space.dep]
    return xi, eta


def bracket_fields(vars_, A, B):
    """A, B: dict var->coef (+ optional key None for multiplier)."""
    out = {}
    for v in vars_:
        out[v] = sp.simplify(sum(A.get(w, 0) * sp.diff(B.get(v, 0), w) - B.get(w, 0) * sp.diff(A.get(v, 0), w) for w in vars_))
    a0, b0 = A.get(None, 0), B.get(None, 0)
    out[None] = sp.simplify(sum(A.get(w, 0) * sp.diff(b0, w) - B.get(w, 0) * sp.diff(a0, w) for w in vars_))
    return {k: v for k, v in out.items() if v != 0}


def lin(*pairs):
    out = {}
    for c, F in pairs:
        for k, v in F.items():
            out[k] = out.get(k, 0) + c * v
    return {k: sp.simplify(v) for k, v in out.items() if sp.simplify(v) != 0}
