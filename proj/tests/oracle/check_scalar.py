import sympy as sp, random
from jetlie_oracle import *
S = Jet(['t','x','y'], ['u'], 2)
t, x, y = S.ind
g = lambda n: sp.Symbol(n)
ux, uy, ut = g('u_x'), g('u_y'), g('u_t')
uxx, uxy, uyy, utx, uty, utt = g('u_xx'), g('u_xy'), g('u_yy'), g('u_tx'), g('u_ty'), g('u_tt')
uu = ux**2 + uy**2
WI = sp.Matrix([[ut,ux,uy],[utx,uxx,uxy],[uty,uxy,uyy]]).det()
WII = sp.Matrix([[utt,utx,uty],[utx,uxx,uxy],[uty,uxy,uyy]]).det()
WIII = sp.Matrix([[0,ux,uy],[ux,uxx,uxy],[uy,uxy,uyy]]).det()
print("WIII =", sp.expand(WIII))
Z1 = (uxx+uyy)/uu; Z2 = (ux*ux*uxx + 2*ux*uy*uxy + uy*uy*uyy)/uu**2
Z3 = (uxx*uyy-uxy**2)/uu**2; Z4 = WI*uu**sp.Rational(-5,2)
print("Z1-Z2+WIII/uu^2 =", sp.simplify(Z1 - Z2 + WIII/uu**2))
gens = {
 'Xm1': field(S, t=-1), 'X0': field(S, t=-t, x=-x, y=-y), 'X1': field(S, t=-t**2, x=-2*t*x, y=-2*t*y),
 'Y1m': field(S, x=-1), 'Y2m': field(S, y=-1), 'Y10': field(S, x=-t), 'Y20': field(S, y=-t),
 'Y11': field(S, x=-t**2), 'Y21': field(S, y=-t**2), 'R': field(S, x=y, y=-x)}
galargs = [g('u'), uu, uxx+uyy, ux*ux*uxx + 2*ux*uy*uxy + uy*uy*uyy, uxx*uyy-uxy**2, WI, WII]
invs = {'u': g('u'), 'Z1': Z1, 'Z2': Z2, 'Z3': Z3, 'Z4': Z4, 'WII': WII, 'WIIn': WII/uu**3}
for gn, (xi, eta) in gens.items():
    P = S.prolong(xi, eta, 2)
    res = {k: sp.simplify(S.apply(P, e)) for k, e in invs.items()}
    ga = [sp.simplify(S.apply(P, e)) for e in galargs]
    print(gn, {k: (0 if v == 0 else sp.factor(v)) for k, v in res.items()}, "gal args zero:", [a == 0 for a in ga])
# ranks at a random point
def orbit_rank(names, order):
    cs = S.coords(order)
    rows = []
    for n in names:
        xi, eta = gens[n]
        P = S.prolong(xi, eta, order)
        rows.append([P.get(c, 0) for c in cs])
    M = sp.Matrix(rows)
    random.seed(1)
    pt = {c: sp.Rational(random.randint(-50,50), random.randint(1,50)) for c in cs}
    return M.subs(pt).rank(), len(cs)
print("gal0 order2", orbit_rank(['Xm1','Y1m','Y2m','Y10','Y20','R'], 2))
print("thm1 order2", orbit_rank(['Xm1','X0','Y1m','Y2m','Y10','Y20','R'], 2))
print("cga2 order2", orbit_rank(list(gens), 2))
# Z4 pullback under the projective map
p = sp.Symbol('p'); s = 1 - p*t
sub = {ux: ux*s**2, uy: uy*s**2, ut: ut*s**2 - 2*p*(x*ux+y*uy)*s,
       uxx: uxx*s**4, uxy: uxy*s**4, uyy: uyy*s**4,
       utx: s**3*(s*utx - 2*p*(x*uxx+y*uxy) - 2*p*ux), uty: s**3*(s*uty - 2*p*(x*uxy+y*uyy) - 2*p*uy)}
WIp = WI.xreplace(sub)
print("WI' - s^10(WI - 2p/s WIII) =", sp.simplify(WIp - s**10*(WI - 2*p/s*WIII)))
xi, eta = gens['X1']; P = S.prolong(xi, eta, 2)
print("X1(WI) =", sp.factor(S.apply(P, WI)), " X1(WIII)=", sp.factor(S.apply(P, WIII)))
print("X1 u_t coefficient:", P[ut], " u_tx:", P[utx])
