# Independent oracle: sympy grevlex Groebner bases + standard monomial counting.
# Invariants under sign involutions = standard monomials fixed by every sign
# (each sign map sends a standard monomial to +-itself).
import itertools, sympy as sp, sys, json

def std_monomials(gens, degs, rels, D):
    G = sp.groebner(rels, *gens, order='grevlex') if rels else None
    lms = [sp.Poly(g, *gens).monoms(order='grevlex')[0] for g in G.exprs] if rels else []
    by_deg = [[] for _ in range(D+1)]
    def rec(i, rem, exps, d):
        if i == len(gens):
            if not any(all(e >= l for e, l in zip(exps, lm)) for lm in lms):
                by_deg[d].append(tuple(exps))
            return
        for a in range(rem // degs[i] + 1):
            rec(i+1, rem - a*degs[i], exps+[a], d + a*degs[i])
    rec(0, D, [], 0)
    return by_deg

def times_ext(t, deg):
    out = list(t)
    for d in range(deg, len(t)): out[d] += t[d-deg]
    return out

def block(prefix, r, parity, primes):
    # returns (gens, degs, total class, euler or None)
    gens, degs = [], []
    total = sp.Integer(1)
    top = r - 1 if parity == 0 else r
    for j in range(1, top+1):
        g = sp.Symbol(f"{prefix}{j}{primes}"); gens.append(g); degs.append(4*j); total += g
    eu = None
    if parity == 0:
        eu = sp.Symbol(f"E{prefix}{primes}"); gens.append(eu); degs.append(2*r); total += eu**2
    return gens, degs, total, eu

def components(expr, gens, degs):
    poly = sp.Poly(sp.expand(expr), *gens)
    comps = {}
    for mon, c in poly.terms():
        d = sum(a*b for a, b in zip(mon, degs))
        comps[d] = comps.get(d, 0) + c * sp.prod([g**a for g, a in zip(gens, mon)])
    return [v for d, v in sorted(comps.items()) if d > 0 and v != 0]

def case(n, k, a, b, ordinary, unoriented, D):
    L = block("p", n, a, ""); L2 = block("p", k, b, "'")
    R = block("P", n, a, ""); R2 = block("P", k, b, "'")
    gens = L[0] + L2[0] + R[0] + R2[0]
    degs = L[1] + L2[1] + R[1] + R2[1]
    rels = components(L[2]*L2[2] - R[2]*R2[2], gens, degs)
    if a == 0 and b == 0:
        rels.append(L[3]*L2[3] - R[3]*R2[3])
    if ordinary:
        rels += R[0] + R2[0]
    std = std_monomials(gens, degs, rels, D)
    neg = []
    if unoriented:
        left_eu = [i for i, g in enumerate(gens) if g in (L[3], L2[3])]
        right_eu = [i for i, g in enumerate(gens) if g in (R[3], R2[3])]
        neg = [left_eu] if ordinary else [left_eu, right_eu]
    t = [sum(1 for m in std[d] if all(sum(m[i] for i in s) % 2 == 0 for s in neg)) for d in range(D+1)]
    if a == 1 and b == 1:
        t = times_ext(t, 2*n+2*k+1)
    return t

out = {}
for n in (1, 2):
    for k in (1, 2):
        for a in (0, 1):
            for b in (0, 1):
                lm = (2*n+a)*(2*k+b)
                D = min(lm+4, 24)
                key = f"{n}{k}{a}{b}"
                out[key] = {
                    "D": D,
                    "oriented": case(n, k, a, b, False, False, D),
                    "unoriented": case(n, k, a, b, False, True, D),
                    "ordinary": case(n, k, a, b, True, False, D),
                    "ordinary_unoriented": case(n, k, a, b, True, True, D),
                }
                print(key, out[key], file=sys.stderr, flush=True)
json.dump(out, sys.stdout, indent=1)
