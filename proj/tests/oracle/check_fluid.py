import sympy as sp
from jetlie_oracle import *
S = Jet(['t','x','y'], ['u1','u2','w'], 1)
t, x, y = S.ind; u1, u2, w = S.dep
g = lambda n: sp.Symbol(n)
def manifold(gens, eqs, solved, label):
    for gn, (xi, eta) in gens.items():
        P = S.prolong(xi, eta, 1)
        out = []
        for e in eqs:
            r = S.apply(P, e)
            for _ in range(4):
                r = r.xreplace(solved)
            out.append(sp.simplify(r))
        print(label, gn, ["0" if v == 0 else "NZ" for v in out])
# shallow water
q = sp.Symbol('q')
sw = [g('u1_t') + u1*g('u1_x') + u2*g('u1_y') + q*g('w_x'),
      g('u2_t') + u1*g('u2_x') + u2*g('u2_y') + q*g('w_y'),
      g('w_t') + g('u1_x')*w + u1*g('w_x') + g('u2_y')*w + u2*g('w_y')]
swsol = {g('u1_t'): -(u1*g('u1_x') + u2*g('u1_y') + q*g('w_x')),
         g('u2_t'): -(u1*g('u2_x') + u2*g('u2_y') + q*g('w_y')),
         g('w_t'): -(g('u1_x')*w + u1*g('w_x') + g('u2_y')*w + u2*g('w_y'))}
swg = {
 'Xm1': field(S, t=-1), 'Y1m': field(S, x=-1), 'Y2m': field(S, y=-1),
 'Y10': field(S, x=-t, u1=-1), 'Y20': field(S, y=-t, u2=-1),
 'X0printed': field(S, t=-t, x=-x, y=-y, u1=u1, u2=u2, w=2*w),
 'X0fixed': field(S, t=-2*t, x=-x, y=-y, u1=u1, u2=u2, w=2*w),
 'X1printed': field(S, t=-t**2, x=-t*x, y=-t*x, u1=-(x-t*u1), u2=-(y-t*u2), w=2*t*w),
 'X1fixed': field(S, t=-t**2, x=-t*x, y=-t*y, u1=-(x-t*u1), u2=-(y-t*u2), w=2*t*w),
 'R': field(S, x=y, y=-x, u1=u2, u2=-u1), 'D': field(S, t=t, x=x, y=y),
 'ecgaY11': field(S, x=-t**2, u1=2*t, w=-(2*y + t*u2)),
}
manifold(swg, sw, swsol, "sw")
# fluid system in new coordinates; ea_3 transported: r = 3/2 X, u^a = -U^a, u^3 = 3/2 q w
# old field components a^t, a^r, a^u, a^3 -> new: X = 2/3 r, U = -u, w = 2/(3q) u^3
R1, R2, V1, V2, W3 = sp.symbols('R1 R2 V1 V2 W3')
old = {'t': t, 'r1': sp.Rational(3,2)*x, 'r2': sp.Rational(3,2)*y, 'v1': -u1, 'v2': -u2, 'u3': sp.Rational(3,2)*q*w}
def transport(ct=0, cr1=0, cr2=0, cv1=0, cv2=0, c3=0):
    # components in old coordinates, given as lambdas of old-coordinate dict
    o = old
    c = [sp.sympify(f(o)) if callable(f) else sp.sympify(f) for f in (ct, cr1, cr2, cv1, cv2, c3)]
    return field(S, t=c[0], x=sp.Rational(2,3)*c[1], y=sp.Rational(2,3)*c[2], u1=-c[3], u2=-c[4], w=2/(3*q)*c[5])
ea3 = {
 'Xm1': transport(ct=-1), 'Y1m': transport(cr1=-1), 'Y2m': transport(cr2=-1), 'Th': transport(c3=1),
 'Y10': transport(cr1=lambda o: -o['t'], cv1=1, c3=lambda o: -o['v2']/2),
 'Y20': transport(cr2=lambda o: -o['t'], cv2=1, c3=lambda o: o['v1']/2),
 'Y11': transport(cr1=lambda o: -o['t']**2, cv1=lambda o: 2*o['t'], c3=lambda o: -(2*o['r2'] + o['t']*o['v2'])),
 'Y21': transport(cr2=lambda o: -o['t']**2, cv2=lambda o: 2*o['t'], c3=lambda o: (2*o['r1'] + o['t']*o['v1'])),
 'X0': transport(ct=lambda o: -o['t'], cr1=lambda o: -o['r1'], cr2=lambda o: -o['r2']),
 'R': transport(cr1=lambda o: o['r2'], cr2=lambda o: -o['r1'], cv1=lambda o: o['v2'], cv2=lambda o: -o['v1']),
 'X1': transport(ct=lambda o: -o['t']**2, cr1=lambda o: -2*o['t']*o['r1'], cr2=lambda o: -2*o['t']*o['r2'],
                 cv1=lambda o: 2*o['r1'], cv2=lambda o: 2*o['r2'], c3=lambda o: -(o['r1']*o['v2'] - o['r2']*o['v1'])),
 'Xinf3': field(S, w=t**3),
}
for k, v in ea3.items():
    print(k, v)
s42 = [g('u1_t') + u1*g('u1_x') + u2*g('u1_y') - q*g('w_y'),
       g('u2_t') + u1*g('u2_x') + u2*g('u2_y') + q*g('w_x'),
       g('u1_x') + g('u2_y')]
sol42 = {g('u1_t'): -(u1*g('u1_x') + u2*g('u1_y') - q*g('w_y')),
         g('u2_t'): -(u1*g('u2_x') + u2*g('u2_y') + q*g('w_x')), g('u2_y'): -g('u1_x')}
manifold(ea3, s42, sol42, "4-2")
