"""Independent oracle for ideal-counting fixtures in Q, Q(i), Q(sqrt 2).

Ideals are built from the splitting laws of rational primes (no
polynomial factorization): an ideal is a multiset of prime ideals, each
recorded as (label, norm). Prints the values pinned by the Rust tests.
"""
import math
from fractions import Fraction

FIELDS = ("Q", "Q(i)", "Q(sqrt2)")


def rprimes(n):
    s = bytearray([1]) * (n + 1)
    s[0:2] = b"\0\0"
    for i in range(2, int(n ** 0.5) + 1):
        if s[i]:
            s[i * i :: i] = bytearray(len(s[i * i :: i]))
    return [i for i in range(n + 1) if s[i]]


def prime_ideals(field, x):
    out = []
    for p in rprimes(x):
        if field == "Q":
            kinds = [(p, 1)]
        elif field == "Q(i)":
            kinds = [(p, 1)] if p == 2 else [(p, 1), (p, 1)] if p % 4 == 1 else [(p * p, 1)]
        else:
            kinds = [(p, 1)] if p == 2 else [(p, 1), (p, 1)] if p % 8 in (1, 7) else [(p * p, 1)]
        for j, (q, _) in enumerate(kinds):
            if q <= x:
                out.append(((p, j), q))
    out.sort(key=lambda t: t[1])
    return out


def ideals(field, x):
    """All ideals with norm <= x as dicts {prime label: (norm, exponent)}."""
    primes = prime_ideals(field, x)
    out = []

    def rec(i, acc, fac):
        out.append((acc, dict(fac)))
        for k in range(i, len(primes)):
            lab, q = primes[k]
            if acc * q > x:
                break
            e, nn = 1, acc * q
            while nn <= x:
                fac[lab] = (q, e)
                rec(k + 1, nn, fac)
                del fac[lab]
                e += 1
                nn *= q

    rec(0, 1, {})
    return out


def g(fac):
    norms = sorted({q for q, _ in fac.values()})
    for v in [1] + norms:
        tail = sum(Fraction(1, q) for q, _ in fac.values() if q > v)
        if tail < Fraction(1, 2):
            return v
    raise AssertionError


def phi(fac):
    r = 1
    for q, e in fac.values():
        r *= q ** (e - 1) * (q - 1)
    return r


def main():
    for f in FIELDS:
        ids = ideals(f, 10_000)
        gs = [g(fac) for _, fac in ids]
        counts = [sum(1 for v in gs if v >= t) for t in range(1, 6)]
        decay = [counts[v - 1] * math.factorial(v) / 10_000 for v in range(2, 6)]
        print(f"{f}: ideals<=1e4 {len(ids)} count_large_g v=1..5 {counts}")
        print(f"{f}: decay v=2..5 " + " ".join(f"{d:.6f}" for d in decay))
        small = [(n, fac) for n, fac in ids if n <= 1000]
        c_field = max(n / phi(fac) / math.log(2 * g(fac)) for n, fac in small)
        print(f"{f}: max Nm/Phi/log(2g) over Nm<=1000 = {c_field:.9f}")
        tp = max(
            math.prod(q / (q - 1) for q, _ in fac.values() if q > g(fac)) for _, fac in small
        )
        print(f"{f}: max tail product over Nm<=1000 = {tp:.9f}")
        for t in (1, 2, 3):
            for (x, y) in ((10, 100), (10, 1000)):
                s = sum(Fraction(1, n) for (n, fac), gv in zip(ids, gs) if x < n < y and gv == t)
                bound_c = float(s) * math.factorial(t) / (math.log(y / x) + 1)
                print(f"{f}: band T={t} ({x},{y}) = {float(s):.9f}  C_needed={bound_c:.6f}")
        # Selberg final bound: coprime count / (X prod (1 - 1/Nm p)) over n with Nm<=200
        worst = 0.0
        for X in (1000, 10_000):
            pool = [(n, fac) for n, fac in ids if n <= X]
            for nn, nfac in [(n, fac) for n, fac in ids if n <= 200]:
                bad = set(nfac)
                cnt = sum(1 for _, fac in pool if not (bad & set(fac)))
                shape = X * math.prod(1 - 1 / q for q, _ in nfac.values() if q <= X)
                worst = max(worst, cnt / shape)
        print(f"{f}: max coprime/shape over Nm(n)<=200, X in (1e3,1e4) = {worst:.9f}")
    for f in FIELDS:
        worst = 0.0
        for k in range(4, 18):
            x = 2 ** k
            s = sum(math.log(q) / q for _, q in prime_ideals(f, x - 1))
            worst = max(worst, abs(s - math.log(x)))
        print(f"{f}: max |log sum residual| over X = 2^4..2^17 = {worst:.9f}")
    odd = sum(1 for n, fac in ideals("Q(i)", 20) if (2, 0) not in fac)
    print(f"Q(i): ideals of norm <= 20 prime to (1+i) = {odd}")


if __name__ == "__main__":
    main()
