import sympy as sp
from jetlie_oracle import *

t, x, y, v1, v2, w = sp.symbols('t x y u1 u2 u3')
V = [t, x, y, v1, v2, w]
def F(**kw):
    return {sp.Symbol(k): sp.sympify(v) for k, v in kw.items()}
h = sp.Rational(1, 2)
Xm1 = F(t=-1); Y1m = F(x=-1); Y2m = F(y=-1); Th = F(u3=1)
Y10 = F(x=-t, u1=1, u3=-v2/2); Y20 = F(y=-t, u2=1, u3=v1/2)
Y11 = F(x=-t**2, u1=2*t, u3=-(2*y + t*v2)); Y21 = F(y=-t**2, u2=2*t, u3=(2*x + t*v1))
X0 = F(t=-t, x=-x, y=-y)
X1p = F(t=-t**2, x=-2*t*x, y=-2*t*y, u1=x, u2=y, u3=-(x*v2 - y*v1))
X1c = F(t=-t**2, x=-2*t*x, y=-2*t*y, u1=2*x, u2=2*y, u3=-(x*v2 - y*v1))
R = F(x=y, y=-x, u1=v2, u2=-v1)
print("[X1p,Y1m] - 2Y10 =", lin((1, bracket_fields(V, X1p, Y1m)), (-2, Y10)))
print("[X1c,Y1m] - 2Y10 =", lin((1, bracket_fields(V, X1c, Y1m)), (-2, Y10)))
print("[X1c,Y10] - Y11 =", lin((1, bracket_fields(V, X1c, Y10)), (-1, Y11)))
print("[X1c,Y20] - Y21 =", lin((1, bracket_fields(V, X1c, Y20)), (-1, Y21)))
print("[X1c,Xm1] - 2X0 =", lin((1, bracket_fields(V, X1c, Xm1)), (-2, X0)))
print("[R,Y11]-Y21", lin((1, bracket_fields(V, R, Y11)), (-1, Y21)))
print("[R,Y10]-Y20", lin((1, bracket_fields(V, R, Y10)), (-1, Y20)))
print("[X1c,R]", bracket_fields(V, X1c, R))

S = Jet(['t', 'x', 'y'], ['u1', 'u2', 'u3'], 1)
u = lambda a, *J: S.coord(a - 1, tuple({'t': 0, 'x': 1, 'y': 2}[j] for j in J))
W1 = 2*u(1,'t') + 2*u(3,'y') - 2*u(1)*u(1,'x') + u(1)*u(2,'y') - 3*u(2)*u(1,'y')
W2 = 2*u(2,'t') - 2*u(3,'x') - 2*u(2)*u(2,'y') + u(2)*u(1,'x') - 3*u(1)*u(2,'x')
W3 = (2*u(3,'t') - u(2)*u(1,'t') + u(1)*u(2,'t') - 2*u(1)*u(3,'x') - 2*u(2)*u(3,'y')
      + u(1)*u(2)*u(1,'x') - u(1)*u(2)*u(2,'y') - u(1)**2*u(2,'x') + u(2)**2*u(1,'y'))
d = u(1,'y') - u(2,'x')
W12s = (W1**2 + W2**2)/d**2; W3s = W3/d
Ws = (u(1,'x')*W1**2 + u(2,'y')*W2**2 + (u(1,'y') + u(2,'x'))*W1*W2)/d**3
Ustar = ((u(1,'x') - u(2,'y'))**2 + 2*u(1,'y')**2 + 2*u(2,'x')**2)/d**2
Vstar = 2*Ws - (u(1,'x') + u(2,'y'))/d*W12s
def toS(Fd):
    return field(S, **{str(k): v for k, v in Fd.items() if k is not None})
gens = dict(Xm1=Xm1, Y1m=Y1m, Y2m=Y2m, Th=Th, Y10=Y10, Y20=Y20, Y11=Y11, Y21=Y21, X0=X0, X1c=X1c, X1p=X1p, R=R)
invs = dict(u1x=u(1,'x'), W1=W1, W2=W2, W3=W3, W12s=W12s, W3s=W3s, Ws=Ws, Ustar=Ustar, Vstar=Vstar,
            r1=(u(1,'x')+u(2,'y'))/d, r2=(u(1,'x')**2+u(1,'y')**2+u(2,'x')**2+u(2,'y')**2)/d**2,
            t5a=(u(1,'x')-u(2,'y'))/d, t5b=u(1,'y')/d)
for gn, G in gens.items():
    xi, eta = toS(G)
    P = S.prolong(xi, eta, 1)
    res = {k: sp.simplify(S.apply(P, e)) for k, e in invs.items()}
    print(gn, {k: (0 if v == 0 else sp.factor(v)) for k, v in res.items()})
