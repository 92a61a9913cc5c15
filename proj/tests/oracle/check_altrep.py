import sympy as sp, itertools
from jetlie_oracle import bracket_fields, lin
def build(N, levels):
    t = sp.Symbol('t'); r = sp.symbols(' '.join(f'r{j}' for j in range(1, N+1)))
    gm = sp.symbols(' '.join(f'g{j}' for j in range(1, N+1))); lam = sp.Symbol('lam')
    if N == 1: r, gm = (r,), (gm,)
    V = [t, *r, *gm]
    F = {}
    for n in levels:
        d = {t: -t**(n+1)}
        for j in range(N): d[r[j]] = -(n+1)*t**n*r[j]
        d[None] = -lam*(n+1)*t**n - n*(n+1)*t**(n-1)*sum(gm[j]*r[j] for j in range(N))
        F[('X', n)] = {k: sp.sympify(v) for k, v in d.items() if v != 0}
        for j in range(N):
            F[('Y', n, j)] = {k: v for k, v in {r[j]: -t**(n+1), None: -(n+1)*t**n*gm[j]}.items() if v != 0}
    for j, k in itertools.combinations(range(N), 2):
        F[('R', j, k)] = {r[j]: r[k], r[k]: -r[j], gm[j]: gm[k], gm[k]: -gm[j]}  # -(r_j d_k - r_k d_j) - (g_j d_gk - g_k d_gj)
    return V, F
def expected(a, b, F, levels):
    if a[0] == 'X' and b[0] == 'X':
        n, m = a[1], b[1]
        return lin(((n-m), F[('X', n+m)])) if (n+m) in levels else (None if n != m else {})
    if a[0] == 'X' and b[0] == 'Y':
        n, m = a[1], b[1]
        return lin(((n-m), F[('Y', n+m, b[2])])) if (n+m) in levels else (None if n != m else {})
    if a[0] == 'R' and b[0] == 'Y':
        j, k = a[1], a[2]; l = b[2]; out = {}
        if j == l: out = lin((1, out), (1, F[('Y', b[1], k)]))
        if k == l: out = lin((1, out), (-1, F[('Y', b[1], j)]))
        return out
    if a[0] == 'Y' and b[0] == 'X':
        e = expected(b, a, F, levels); return None if e is None else lin((-1, e))
    if a[0] == 'Y' and b[0] == 'R':
        e = expected(b, a, F, levels); return lin((-1, e))
    if a[0] == 'R' and b[0] == 'R':
        def Rf(p, q):
            if p == q: return {}
            return F[('R', p, q)] if p < q else lin((-1, F[('R', q, p)]))
        j, k, l, m = a[1], a[2], b[1], b[2]
        out = {}
        if j == l: out = lin((1, out), (1, Rf(k, m)))
        if j == m: out = lin((1, out), (-1, Rf(k, l)))
        if k == l: out = lin((1, out), (-1, Rf(j, m)))
        if k == m: out = lin((1, out), (1, Rf(j, l)))
        return out
    return {}
for N, levels in ((2, range(-1, 2)), (2, range(-3, 4)), (3, range(-1, 2))):
    V, F = build(N, list(levels))
    bad = 0; checked = 0
    for a, b in itertools.combinations(F, 2):
        e = expected(a, b, F, list(levels))
        if e is None: continue
        checked += 1
        d = lin((1, bracket_fields(V, F[a], F[b])), (-1, e))
        if d: bad += 1; print("FAIL", a, b, d)
    print(N, list(levels), "fields", len(F), "pairs checked", checked, "bad", bad)
