"""Exact reference values for the C++ tests, computed with rational arithmetic.

Run with `python3 tests/oracles/exact_values.py`; the printed numbers are
frozen in the unit and acceptance tests.
"""

from fractions import Fraction as F


def jaccard_p(pairs):
    total = F(0)
    for da, db in pairs:
        if da == 0 or db == 0:
            continue
        total += 1 / sum(max(F(ea) / da, F(eb) / db) for ea, eb in pairs)
    return total


def jaccard_w(pairs):
    return F(sum(min(a, b) for a, b in pairs)) / sum(max(a, b) for a, b in pairs)


def jaccard_n(pairs):
    sa = sum(F(a) for a, _ in pairs)
    sb = sum(F(b) for _, b in pairs)
    return jaccard_w([(F(a) / sa, F(b) / sb) for a, b in pairs])


def alpha(m, u):
    num = sum(F(l) ** u * ((l + 1) ** u + (l - 1) ** u - 2 * F(l) ** u) for l in range(1, m))
    return 1 - num / (F(m - 1) ** (u - 1) * F(m) ** u * (u - 1))


def harmonic(n):
    return sum(F(1, i) for i in range(1, n + 1))


def repeat(groups):
    out = []
    for pair, count in groups:
        out += [pair] * count
    return out


def skewed(n, a_mod, b_mul, b_mod, zero_every):
    out = []
    for i in range(n):
        a = 1 + i % a_mod
        b = 1 + (i * b_mul) % b_mod
        if zero_every > 0 and i % zero_every == zero_every - 1:
            b = 0
        out.append((a, b))
    return out


FIXTURES = {
    "v3-20-30-7": [(3, 20), (30, 7)],
    "binary-3": [(0, 1), (1, 0), (1, 1)],
    "v1-2-2-1": [(1, 2), (2, 1)],
    "binary-2": [(1, 1), (1, 0)],
    "skew-4": [(1, 2), (4, 1), (2, 2), (0, 3)],
    "binary-4": [(1, 1), (1, 1), (1, 0), (0, 1)],
    "binary-10": repeat([((1, 1), 3), ((1, 0), 4), ((0, 1), 3)]),
    "skew-16": skewed(16, 16, 7, 16, 0),
    "binary-64": repeat([((1, 1), 32), ((1, 0), 16), ((0, 1), 16)]),
    "skew-64": skewed(64, 8, 5, 13, 8),
    "binary-32-high": repeat([((1, 1), 29), ((1, 0), 2), ((0, 1), 1)]),
    "skew-8-low": [(1, 8), (8, 1), (2, 0), (0, 2), (1, 1), (5, 0), (0, 5), (3, 1)],
    "bbit-0.1": repeat([((1, 1), 1), ((1, 0), 5), ((0, 1), 4)]),
    "bbit-0.5": repeat([((1, 1), 2), ((1, 0), 1), ((0, 1), 1)]),
    "bbit-0.9": repeat([((1, 1), 9), ((1, 0), 1)]),
}


if __name__ == "__main__":
    print("# jaccard_p / jaccard_w / jaccard_n per fixture")
    for name, pairs in FIXTURES.items():
        print(f"{name:16s} n={len(pairs):3d} jp={float(jaccard_p(pairs))!r} "
              f"jw={float(jaccard_w(pairs))!r} jn={float(jaccard_n(pairs))!r}")
    print("# improvement factor")
    for m, u in [(2, 2), (16, 2), (64, 2), (256, 2), (100, 2), (16, 3), (64, 3), (256, 3),
                 (4, 5), (1024, 16), (16, 64), (256, 64), (16, 4096)]:
        print(f"alpha({m},{u}) = {float(alpha(m, u))!r}")
    print("# harmonic numbers")
    for n in (1, 2, 10, 64, 256):
        print(f"H_{n} = {float(harmonic(n))!r}  n*H_n = {float(n * harmonic(n))!r}")
    mh = 256 * harmonic(256)
    buf = sum(min(F(1), mh / j) for j in range(1, 100001))
    print(f"expected buffer n=1e5 m=256: {float(buf)!r}")
