#!/usr/bin/env python3
# Copyright 2026 The sotype Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates the permutation generator files under data/.

Each group comes from its classical linear action:

  L3(3)      PSL(3,3) on the 13 points of PG(2,3)
  L3(4)      PSL(3,4) on the 21 points of PG(2,4)
  U3(3)      SU(3,3) on the 28 isotropic points of PG(2,9)
  U4(2)      PSp(4,3) on the 40 points of PG(3,3)
  2^4:A7     affine group on GF(2)^4 with an A7 inside GL(4,2)
  L3(4):2    PSL(3,4) extended by the Frobenius field map, on PG(2,4)
  Sz(8)      the Suzuki matrix group on the 65 points of its ovoid

Every output is checked by closure against the known order before it is
written. The C++ side re-checks the same order gates on load.
"""
import itertools
import random
import sys
from pathlib import Path


class GF:
    def __init__(self, p, m, modulus):
        # modulus: coefficient list c0..cm, monic
        self.p, self.m, self.q = p, m, p ** m
        self.mod = modulus
        self.elems = list(range(self.q))
        self._mul = [[self._mul_slow(a, b) for b in range(self.q)] for a in range(self.q)]
        self._add = [[self._add_slow(a, b) for b in range(self.q)] for a in range(self.q)]

    def digits(self, a):
        out = []
        for _ in range(self.m):
            out.append(a % self.p)
            a //= self.p
        return out

    def undigits(self, d):
        return sum(c * self.p ** i for i, c in enumerate(d))

    def _add_slow(self, a, b):
        return self.undigits([(x + y) % self.p for x, y in zip(self.digits(a), self.digits(b))])

    def _mul_slow(self, a, b):
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.m)
        for i, x in enumerate(da):
            for j, y in enumerate(db):
                prod[i + j] = (prod[i + j] + x * y) % self.p
        for k in range(2 * self.m - 1, self.m - 1, -1):
            c = prod[k]
            if c:
                for i in range(self.m + 1):
                    prod[k - self.m + i] = (prod[k - self.m + i] - c * self.mod[i]) % self.p
        return self.undigits(prod[: self.m])

    def add(self, a, b):
        return self._add[a][b]

    def mul(self, a, b):
        return self._mul[a][b]

    def neg(self, a):
        return next(b for b in self.elems if self.add(a, b) == 0)

    def inv(self, a):
        return next(b for b in self.elems if self.mul(a, b) == 1)

    def pow(self, a, e):
        r = 1
        for _ in range(e):
            r = self.mul(r, a)
        return r


def mat_vec(F, v, M):
    # row vector times matrix
    n = len(v)
    out = []
    for j in range(n):
        s = 0
        for i in range(n):
            s = F.add(s, F.mul(v[i], M[i][j]))
        out.append(s)
    return tuple(out)


def normalize(F, v):
    for c in v:
        if c:
            ic = F.inv(c)
            return tuple(F.mul(ic, x) for x in v)
    raise ValueError("zero vector")


def projective_points(F, n):
    pts = set()
    for v in itertools.product(F.elems, repeat=n):
        if any(v):
            pts.add(normalize(F, v))
    return sorted(pts)


def perm_from_action(points, index, f):
    return [index[f(pt)] for pt in points]


def compose(a, b):
    # a then b
    return tuple(b[i] for i in a)


def closure_order(gens, cap=10 ** 6):
    ident = tuple(range(len(gens[0])))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > cap:
                        raise RuntimeError("cap")
        frontier = nxt
    return len(seen)


def elementary(F, n, i, j, a):
    M = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
    M[i][j] = a
    return M


def projective_perms(F, n, mats, points=None):
    pts = points or projective_points(F, n)
    idx = {p: k for k, p in enumerate(pts)}
    return pts, [perm_from_action(pts, idx, lambda v, M=M: normalize(F, mat_vec(F, v, M))) for M in mats]


def psl3(F):
    # SL(3,q) is generated by elementary transvections over a field generator
    gen = next(a for a in F.elems[1:] if len({F.pow(a, k) for k in range(1, F.q)}) == F.q - 1)
    mats = [elementary(F, 3, i, j, a) for i in range(3) for j in range(3) if i != j for a in (1, gen)]
    return projective_perms(F, 3, mats)


def transvection(F, n, form, v, a):
    # x -> x + a * form(x, v) * v, as a matrix acting on row vectors
    rows = []
    for i in range(n):
        e = tuple(1 if k == i else 0 for k in range(n))
        c = F.mul(a, form(e, v))
        rows.append([F.add(e[k], F.mul(c, v[k])) for k in range(n)])
    return rows


def psp43():
    F = GF(3, 1, [0, 1])
    def form(x, y):
        # J = [[0,0,0,1],[0,0,1,0],[0,-1,0,0],[-1,0,0,0]]
        s = F.mul(x[0], y[3])
        s = F.add(s, F.mul(x[1], y[2]))
        s = F.add(s, F.neg(F.mul(x[2], y[1])))
        s = F.add(s, F.neg(F.mul(x[3], y[0])))
        return s
    pts = projective_points(F, 4)
    mats = [transvection(F, 4, form, v, 1) for v in pts]
    return projective_perms(F, 4, mats, pts)


def su33():
    F = GF(3, 2, [1, 0, 1])  # x^2 + 1
    conj = lambda a: F.pow(a, 3)
    def form(x, y):
        s = F.mul(x[0], conj(y[2]))
        s = F.add(s, F.mul(x[1], conj(y[1])))
        s = F.add(s, F.mul(x[2], conj(y[0])))
        return s
    iso = [p for p in projective_points(F, 3) if form(p, p) == 0]
    # unitary transvections need a with a + a^q = 0
    traceless = [a for a in F.elems[1:] if F.add(a, conj(a)) == 0]
    mats = [transvection(F, 3, form, v, a) for v in iso for a in traceless]
    return projective_perms(F, 3, mats, iso)


def gl42_a7(rng):
    F = GF(2, 1, [0, 1])
    vecs = list(itertools.product([0, 1], repeat=4))
    def rand_mat():
        while True:
            M = [[rng.randrange(2) for _ in range(4)] for _ in range(4)]
            if len({mat_vec(F, v, M) for v in vecs}) == 16:
                return M
    idx = {v: k for k, v in enumerate(vecs)}
    def as_perm(M):
        return tuple(idx[mat_vec(F, v, M)] for v in vecs)
    while True:
        a, b = as_perm(rand_mat()), as_perm(rand_mat())
        try:
            if closure_order([a, b], cap=3000) == 2520:
                break
        except RuntimeError:
            continue
    translation = tuple(idx[tuple(x ^ y for x, y in zip(v, (1, 0, 0, 0)))] for v in vecs)
    return [list(a), list(b), list(translation)]


def suzuki_perms(m):
    q = 2 ** (2 * m + 1)
    F = GF(2, 3, [1, 1, 0, 1]) if q == 8 else None
    theta = 2 ** (m + 1)
    t = lambda a: F.pow(a, theta)
    add = F.add
    mul = F.mul
    def S(a, b):
        return [[1, 0, 0, 0],
                [a, 1, 0, 0],
                [b, t(a), 1, 0],
                [add(add(mul(F.pow(a, 2), t(a)), mul(a, b)), t(b)), add(mul(a, t(a)), b), a, 1]]
    lam = 2  # the element x generates GF(8)^*
    e = 2 ** m
    M = [[0] * 4 for _ in range(4)]
    li = F.inv(lam)
    M[0][0] = F.pow(lam, 1 + e)
    M[1][1] = F.pow(lam, e)
    M[2][2] = F.pow(li, e)
    M[3][3] = F.pow(li, 1 + e)
    T = [[1 if r + c == 3 else 0 for c in range(4)] for r in range(4)]
    mats = [S(1, 0), S(0, 1), M, T]
    start = (1, 0, 0, 0)
    orbit = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for A in mats:
                w = normalize(F, mat_vec(F, v, A))
                if w not in orbit:
                    orbit.add(w)
                    nxt.append(w)
        frontier = nxt
    pts = sorted(orbit)
    return projective_perms(F, 4, mats, pts)


def frobenius_perm(F, pts):
    idx = {p: k for k, p in enumerate(pts)}
    return [idx[normalize(F, tuple(F.pow(c, F.p) for c in p))] for p in pts]


def write(path, comment, perms):
    n = len(perms[0])
    lines = ["# " + c for c in comment.splitlines()]
    lines.append(f"degree {n}")
    for p in perms:
        lines.append(" ".join(str(i + 1) for i in p))
    path.write_text("\n".join(lines) + "\n")


def main():
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data"
    out.mkdir(parents=True, exist_ok=True)
    rng = random.Random(20261019)

    def pick(perms, order, tries=40):
        # shrink to two generators where a random pair already suffices
        def word():
            w = tuple(range(len(perms[0])))
            for _ in range(12):
                w = compose(w, tuple(rng.choice(perms)))
            return w
        for _ in range(tries):
            a, b = word(), word()
            try:
                if closure_order([a, b], cap=order) == order:
                    return [a, b]
            except RuntimeError:
                pass
        assert closure_order(perms) == order
        return perms

    jobs = []
    _, g = psl3(GF(3, 1, [0, 1]))
    jobs.append(("L3_3.gens", "L3(3) = PSL(3,3) on the 13 points of PG(2,3)", pick(g, 5616), 5616))
    F4 = GF(2, 2, [1, 1, 1])
    pts4, g = psl3(F4)
    l34 = pick(g, 20160)
    jobs.append(("L3_4.gens", "L3(4) = PSL(3,4) on the 21 points of PG(2,4)", l34, 20160))
    jobs.append(("L3_4_2.gens", "L3(4):2 = PSL(3,4) with the field automorphism, on PG(2,4)",
                 l34 + [frobenius_perm(F4, pts4)], 40320))
    _, g = su33()
    jobs.append(("U3_3.gens", "U3(3) = SU(3,3) on the 28 isotropic points of PG(2,9)", pick(g, 6048), 6048))
    _, g = psp43()
    jobs.append(("U4_2.gens", "U4(2) = PSp(4,3) on the 40 points of PG(3,3)", pick(g, 25920), 25920))
    jobs.append(("2_4_A7.gens", "2^4:A7 = affine group on GF(2)^4 with A7 < GL(4,2)", gl42_a7(rng), 40320))
    _, g = suzuki_perms(1)
    jobs.append(("Sz_8.gens", "Sz(8) on the 65 points of its ovoid in PG(3,8)", pick(g, 29120), 29120))

    for name, comment, perms, order in jobs:
        got = closure_order([tuple(p) for p in perms], cap=10 ** 6)
        assert got == order, (name, got, order)
        write(out / name, comment + f"\norder {order}", perms)
        print(f"{name}: degree {len(perms[0])}, {len(perms)} generators, order {got}")


if __name__ == "__main__":
    main()
