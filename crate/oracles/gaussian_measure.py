"""Independent oracle for the Gaussian-integer measure fixtures.

Rebuilds A_n for Z[i] with psi = Nm^-2/4 from Gaussian-integer arithmetic
(no ideal machinery) and measures with shapely polygon buffers.
Prints single measures, the R=50 quasi-independence ratio and the
max per-pair ratio over Nm <= 30.
"""
import math
import sys
from fractions import Fraction
from itertools import product

from shapely.geometry import Point, box
from shapely.ops import unary_union

QUAD_SEGS = 2048
SQUARE = box(0, 0, 1, 1)


def gdivmod(a, b):
    q = a / b
    q = complex(round(q.real), round(q.imag))
    return q, a - q * b


def ggcd(a, b):
    while b != 0:
        _, r = gdivmod(a, b)
        a, b = b, r
    return a


def canon(z):
    # representative of z up to units with re > 0, im >= 0
    for u in (1, 1j, -1, -1j):
        w = z * u
        if w.real > 0 and w.imag >= 0:
            return complex(int(w.real), int(w.imag))
    raise ValueError(z)


def norm(z):
    return int(z.real) ** 2 + int(z.imag) ** 2


def ideals_up_to(r):
    out = set()
    lim = int(math.isqrt(r)) + 1
    for a in range(0, lim + 1):
        for b in range(0, lim + 1):
            z = complex(a, b)
            if z != 0 and norm(z) <= r:
                out.add(canon(z))
    return sorted(out, key=lambda z: (norm(z), z.real, z.imag))


def gaussian_primes(r):
    ps = []
    for a, b in product(range(0, r + 1), repeat=2):
        z = complex(a, b)
        n = a * a + b * b
        if z == 0 or n > r or canon(z) != z:
            continue
        if is_gprime(z):
            ps.append(z)
    return ps


def is_rprime(n):
    return n > 1 and all(n % d for d in range(2, int(math.isqrt(n)) + 1))


def is_gprime(z):
    n = norm(z)
    if is_rprime(n):
        return True
    p = int(math.isqrt(n))
    return p * p == n and is_rprime(p) and p % 4 == 3 and (z.imag == 0 or z.real == 0)


def vals(z, primes):
    out = {}
    for p in primes:
        k = 0
        while True:
            q, r = gdivmod(z, p)
            if r != 0:
                break
            z = q
            k += 1
        if k:
            out[p] = k
    return out


def centers(beta):
    n = norm(beta)
    seen = set()
    for x in range(n):
        for y in range(n):
            alpha = complex(x, y)
            g = ggcd(beta, alpha) if alpha != 0 else beta
            if norm(g) != 1:
                continue
            num = alpha * beta.conjugate()
            c = (Fraction(int(num.real), n) % 1, Fraction(int(num.imag), n) % 1)
            seen.add(c)
    return sorted(seen)


def region(beta):
    nm = norm(beta)
    r = 1 / (2 * nm)
    discs = []
    for cx, cy in centers(beta):
        for kx, ky in product((-1, 0, 1), repeat=2):
            discs.append(Point(float(cx) + kx, float(cy) + ky).buffer(r, quad_segs=QUAD_SEGS))
    return unary_union(discs).intersection(SQUARE)


def main():
    R = 50
    ideals = ideals_up_to(R)
    primes = gaussian_primes(R * R)
    regions = {z: region(z) for z in ideals}
    singles = {z: regions[z].area for z in ideals}
    for z in ideals[:6]:
        print(f"single {int(z.real)}+{int(z.imag)}i Nm={norm(z)} phi={len(centers(z))} area={singles[z]:.12f}")
    pair_sum = 0.0
    max_ratio = 0.0
    for m in ideals:
        for n in ideals:
            if norm(m) >= norm(n):
                continue
            inter = regions[m].intersection(regions[n]).area
            pair_sum += inter
            if norm(n) <= 30 and inter > 0:
                g = ggcd(m, n)
                lcm = norm(m) * norm(n) // norm(g)
                d = lcm * max(1 / (4 * norm(m) ** 2), 1 / (4 * norm(n) ** 2))
                q = (m / g) * (n / g)
                q = complex(round(q.real), round(q.imag))
                p = 1.0
                for pr in vals(q, primes):
                    if norm(pr) > d:
                        p *= norm(pr) / (norm(pr) - 1)
                max_ratio = max(max_ratio, inter / (p * singles[m] * singles[n]))
    single_sum = sum(singles.values())
    print(f"ideals={len(ideals)} single_sum={single_sum:.12f} pair_sum={pair_sum:.12f}")
    print(f"ratio={pair_sum / single_sum ** 2:.12f} max_pair_ratio_30={max_ratio:.12f}")
    a, b = complex(1, 1), complex(2, 1)
    inter = regions[canon(a)].intersection(regions[canon(b)]).area
    print(f"(1+i),(2+i): lambda_m={singles[canon(a)]:.12f} lambda_n={singles[canon(b)]:.12f} lambda_mn={inter:.12f}")


if __name__ == "__main__":
    sys.exit(main())
