"""Regenerate src/qgdd/_conway.py: Conway polynomials for all q^n <= 2^13.

Usage: python tools/gen_conway.py > src/qgdd/_conway.py
"""

import sys
from itertools import product

LIMIT = 2**13


def primes(n):
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\0\0"
    for i in range(2, int(n**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(n + 1) if sieve[i]]


def factor(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def polymulmod(a, b, f, q):
    # a, b: coefficient lists low-first of length n; f monic of degree n
    n = len(f) - 1
    res = [0] * (2 * n - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                res[i + j] = (res[i + j] + x * y) % q
    for d in range(len(res) - 1, n - 1, -1):
        c = res[d]
        if c:
            for i in range(n + 1):
                res[d - n + i] = (res[d - n + i] - c * f[i]) % q
    return res[:n]


def xpow(e, f, q):
    n = len(f) - 1
    result = [1] + [0] * (n - 1)
    base = [0, 1] + [0] * (n - 2) if n > 1 else [(-f[0]) % q]
    while e:
        if e & 1:
            result = polymulmod(result, base, f, q)
        base = polymulmod(base, base, f, q)
        e >>= 1
    return result


def is_primitive(f, q):
    n = len(f) - 1
    order = q**n - 1
    one = [1] + [0] * (n - 1)
    if xpow(order, f, q) != one:
        return False
    return all(xpow(order // p, f, q) != one for p in factor(order))


def evaluate(poly, root, f, q):
    # poly low-first, root is an element of GF(q)[x]/f
    n = len(f) - 1
    acc = [0] * n
    for c in reversed(poly):
        acc = polymulmod(acc, root, f, q)
        acc[0] = (acc[0] + c) % q
    return acc


def conway(q, n, table):
    divisors = [d for d in range(1, n) if n % d == 0]
    # Conway order: x^n - a1 x^(n-1) + a2 x^(n-2) - ... ; lexicographic on (a1, ..., an)
    for coeffs in product(range(q), repeat=n):
        f = [0] * (n + 1)
        f[n] = 1
        for i, a in enumerate(coeffs, start=1):
            f[n - i] = ((-1) ** i * a) % q
        if f[0] == 0:
            continue
        if not is_primitive(f, q):
            continue
        ok = True
        for d in divisors:
            e = (q**n - 1) // (q**d - 1)
            root = xpow(e, f, q)
            if any(evaluate(table[(q, d)], root, f, q)):
                ok = False
                break
        if ok:
            return f
    raise RuntimeError((q, n))


def main():
    table = {}
    for q in primes(LIMIT):
        n = 1
        while q**n <= LIMIT:
            table[(q, n)] = conway(q, n, table)
            n += 1
    out = sys.stdout
    out.write('"""Conway polynomials (coefficients low-degree-first), generated by tools/gen_conway.py."""\n\n')
    out.write("CONWAY = {\n")
    for key in sorted(table):
        out.write(f"    {key}: {tuple(table[key])},\n")
    out.write("}\n")


if __name__ == "__main__":
    main()
