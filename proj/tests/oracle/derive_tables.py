"""Derive structure constants of a realization by solving for constant
coefficients c_k with [A, B] = sum c_k F_k."""
import itertools
import sympy as sp
from jetlie_oracle import bracket_fields


def decompose(V, F, br):
    names = list(F)
    cs = sp.symbols(' '.join(f'c{i}' for i in range(len(names))))
    eqs = []
    for v in V:
        expr = sp.expand(br.get(v, 0) - sum(c * F[n].get(v, 0) for c, n in zip(cs, names)))
        eqs += sp.Poly(expr, *V).coeffs() if expr != 0 else []
    sol = sp.solve(eqs, cs, dict=True)
    if not sol:
        return None
    return {n: sol[0].get(c, 0) for c, n in zip(cs, names) if sol[0].get(c, 0) != 0}


def table(V, F):
    out = {}
    for a, b in itertools.combinations(F, 2):
        br = bracket_fields(V, F[a], F[b])
        if br:
            out[(a, b)] = decompose(V, F, br)
    return out


if __name__ == '__main__':
    t, x, y, u1, u2, w = sp.symbols('t x y u1 u2 w')
    V = [t, x, y, u1, u2, w]
    def Fd(**kw):
        return {sp.Symbol(k): sp.sympify(v) for k, v in kw.items()}
    sw = {
        'Xm1': Fd(t=-1), 'Y1m1': Fd(x=-1), 'Y2m1': Fd(y=-1),
        'Y10': Fd(x=-t, u1=-1), 'Y20': Fd(y=-t, u2=-1),
        'X0': Fd(t=-2*t, x=-x, y=-y, u1=u1, u2=u2, w=2*w),
        'X1': Fd(t=-t**2, x=-t*x, y=-t*y, u1=-(x - t*u1), u2=-(y - t*u2), w=2*t*w),
        'R': Fd(x=y, y=-x, u1=u2, u2=-u1), 'D': Fd(t=t, x=x, y=y),
    }
    for k, v in table(V, sw).items():
        print(k, v)
    u3 = sp.Symbol('u3')
    V = [t, x, y, u1, u2, u3]
    ecga = {
        'Xm1': Fd(t=-1), 'X0': Fd(t=-t, x=-x, y=-y),
        'X1': Fd(t=-t**2, x=-2*t*x, y=-2*t*y, u1=2*x, u2=2*y, u3=-(x*u2 - y*u1)),
        'Y1m1': Fd(x=-1), 'Y10': Fd(x=-t, u1=1, u3=-u2/2), 'Y11': Fd(x=-t**2, u1=2*t, u3=-(2*y + t*u2)),
        'Y2m1': Fd(y=-1), 'Y20': Fd(y=-t, u2=1, u3=u1/2), 'Y21': Fd(y=-t**2, u2=2*t, u3=2*x + t*u1),
        'R': Fd(x=y, y=-x, u1=u2, u2=-u1), 'Theta': Fd(u3=1),
    }
    print('--- ecga')
    for k, v in table(V, ecga).items():
        print(k, v)
