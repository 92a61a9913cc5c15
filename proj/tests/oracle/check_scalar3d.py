import sympy as sp
from jetlie_oracle import *
S = Jet(['t', 'x', 'y', 'z'], ['u'], 2)
t, x, y, z = S.ind
g = lambda n: sp.Symbol(n)
sp_ = 'xyz'
d1 = [g('u_' + c) for c in sp_]
dt1 = [g('u_t' + c) for c in sp_]
H = [[g('u_' + ''.join(sorted(a + b, key='txyz'.index))) for b in sp_] for a in sp_]
WI = sp.Matrix([[g('u_t')] + d1] + [[dt1[i]] + H[i] for i in range(3)]).det()
WII = sp.Matrix([[g('u_tt')] + dt1] + [[dt1[i]] + H[i] for i in range(3)]).det()
WIII = sp.Matrix([[0] + d1] + [[d1[i]] + H[i] for i in range(3)]).det()
uu = sum(c**2 for c in d1)
gens = {
 'Xm1': field(S, t=-1), 'X0': field(S, t=-t, x=-x, y=-y, z=-z), 'X1': field(S, t=-t**2, x=-2*t*x, y=-2*t*y, z=-2*t*z),
 'Y1m': field(S, x=-1), 'Y2m': field(S, y=-1), 'Y3m': field(S, z=-1),
 'Y10': field(S, x=-t), 'Y20': field(S, y=-t), 'Y30': field(S, z=-t),
 'Y11': field(S, x=-t**2), 'R12': field(S, x=y, y=-x), 'R13': field(S, x=z, z=-x), 'R23': field(S, y=z, z=-y)}
for gn, (xi, eta) in gens.items():
    P = S.prolong(xi, eta, 2)
    r = [sp.expand(S.apply(P, e)) for e in (WI, WII, WIII)]
    print(gn, ["0" if v == 0 else "NZ" for v in r])
P = S.prolong(*gens['X1'], 2)
r = sp.expand(S.apply(P, WI))
print("X1(WI) + 6t WI - c*WIII:", sp.factor(r))
q = sp.symbols('c0:3')
print(sp.solve(sp.Poly(sp.expand(r - (q[0]*t*WI + q[1]*WIII)), *S.coords(2)).coeffs(), q))
Z = WI * uu**sp.Rational(-7,2)
print("X1(WI*uu^-7/2)", sp.factor(sp.simplify(S.apply(P, Z))))
