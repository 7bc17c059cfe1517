#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
"""Regenerates the bundled curve files in data/.

Points are found by brute force: every F_q-rational zero of the Groebner
basis, enumerated in lexicographic order of the integer encodings.
"""
import itertools
import pathlib
import sys


class Field:
    def __init__(self, p, m, irr):
        self.p, self.m, self.q = p, m, p ** m
        self.irr = irr  # low degree first, monic, length m + 1

    def digits(self, a):
        out = []
        for _ in range(self.m):
            out.append(a % self.p)
            a //= self.p
        return out

    def value(self, ds):
        v = 0
        for d in reversed(ds):
            v = v * self.p + d
        return v

    def add(self, a, b):
        return self.value([(x + y) % self.p for x, y in zip(self.digits(a), self.digits(b))])

    def mul(self, a, b):
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(da):
            for j, y in enumerate(db):
                prod[i + j] = (prod[i + j] + x * y) % self.p
        for k in range(len(prod) - 1, self.m - 1, -1):
            c = prod[k]
            if c:
                for i in range(self.m + 1):
                    prod[k - self.m + i] = (prod[k - self.m + i] - c * self.irr[i]) % self.p
        return self.value(prod[: self.m])

    def tables(self):
        q = self.q
        self.A = [[self.add(a, b) for b in range(q)] for a in range(q)]
        self.M = [[self.mul(a, b) for b in range(q)] for a in range(q)]


def parse_poly(text, p):
    terms = []
    for t in text.split("+"):
        c, e = t.split(":")
        terms.append((int(c) % p, tuple(int(x) for x in e.split(","))))
    return terms


def evaluate(F, terms, pt):
    acc = 0
    for c, e in terms:
        v = c
        for x, k in zip(pt, e):
            for _ in range(k):
                v = F.M[v][x]
        acc = F.A[acc][v]
    return acc


def points_pruned(F, t, gb):
    """Depth-first search that checks a relation as soon as its variables are fixed."""
    last = []
    for g in gb:
        last.append(max(i for _, e in g for i, k in enumerate(e) if k))
    out = []

    def rec(prefix):
        d = len(prefix)
        if d == t:
            out.append(tuple(prefix))
            return
        for x in range(F.q):
            cand = prefix + [x]
            full = cand + [0] * (t - d - 1)
            ok = True
            for g, l in zip(gb, last):
                if l == d and evaluate(F, g, full) != 0:
                    ok = False
                    break
            if ok:
                rec(cand)

    rec([])
    return out


CURVES = {
    "klein.curve": dict(
        header="Klein quartic over GF(8), standard form with weights 3, 5, 7.",
        field=(2, 3, [1, 1, 0, 1]),
        weights=[3, 5, 7],
        genus=3,
        gb=[
            "1:0,2,0+1:1,0,1",
            "1:0,1,1+1:4,0,0+1:0,1,0",
            "1:0,0,2+1:3,1,0+1:0,0,1",
        ],
    ),
    "hermitian16.curve": dict(
        header="Hermitian curve y^4 + y = x^5 over GF(16); x1 = x (weight 4), x2 = y (weight 5).",
        field=(2, 4, [1, 1, 0, 0, 1]),
        weights=[4, 5],
        genus=6,
        gb=["1:0,4+1:0,1+1:5,0"],
    ),
    "gs9.curve": dict(
        header="Third function field of the Garcia-Stichtenoth tower over GF(9).",
        field=(3, 2, [1, 0, 1]),
        weights=[9, 12, 22, 35, 28, 32],
        genus=22,
        gb=[
            "1:0,3,0,0,0,0+2:4,0,0,0,0,0+1:0,1,0,0,0,0",
            "1:0,1,0,0,1,0+2:2,0,1,0,0,0",
            "1:0,1,0,0,0,1+2:1,0,0,1,0,0",
            "1:0,0,2,0,0,0+2:1,0,0,1,0,0",
            "1:0,2,1,0,0,0+2:2,0,0,0,1,0+1:0,0,1,0,0,0",
            "1:0,0,1,0,1,0+2:2,0,0,0,0,1",
            "1:0,0,1,0,0,1+2:6,0,0,0,0,0+1:2,0,0,0,1,0+1:2,1,0,0,0,0",
            "1:0,0,0,0,2,0+2:1,1,0,1,0,0+2:0,0,0,0,0,1",
            "1:0,0,1,1,0,0+2:5,1,0,0,0,0+1:3,0,1,0,0,0+1:1,2,0,0,0,0",
            "1:0,2,0,1,0,0+2:3,0,0,0,0,1+1:0,0,0,1,0,0",
            "1:0,0,0,0,1,1+2:4,2,0,0,0,0+1:2,1,1,0,0,0+1:0,0,0,0,1,0",
            "1:0,0,0,1,1,0+2:7,0,0,0,0,0+1:3,0,0,0,1,0+1:3,1,0,0,0,0",
            "1:0,0,0,0,0,2+2:4,0,0,0,1,0+1:1,1,0,1,0,0+1:2,0,1,0,0,0+1:0,0,0,0,0,1",
            "1:0,0,0,1,0,1+2:5,0,1,0,0,0+1:3,0,0,0,0,1+1:1,1,1,0,0,0",
            "1:0,0,0,2,0,0+2:4,1,1,0,0,0+1:3,0,0,1,0,0+1:2,0,0,0,1,0+2:0,0,1,0,0,0",
        ],
    ),
}


def main():
    out_dir = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "data")
    out_dir.mkdir(parents=True, exist_ok=True)
    for name, c in CURVES.items():
        p, m, irr = c["field"]
        F = Field(p, m, irr)
        F.tables()
        gb = [parse_poly(g, p) for g in c["gb"]]
        pts = points_pruned(F, len(c["weights"]), gb)
        lines = [f"# {c['header']}",
                 "# Points are all affine F_q-rational zeros of the basis, in lexicographic order.",
                 f"field {p} {m} " + " ".join(map(str, irr)),
                 "weights " + " ".join(map(str, c["weights"])),
                 f"genus {c['genus']}",
                 "gb"]
        lines += c["gb"]
        lines.append("end")
        lines.append("points")
        lines += [" ".join(map(str, pt)) for pt in pts]
        lines.append("end")
        (out_dir / name).write_text("\n".join(lines) + "\n")
        print(name, len(pts), "points")


if __name__ == "__main__":
    main()
