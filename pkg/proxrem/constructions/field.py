# -*- coding: utf-8 -*-
"""Finite fields GF(q), q = p^m <= 32, as dense arithmetic tables.

An element is an int in [0, q); for m > 1 its base-p digits are the
polynomial coefficients, constant term first (e = sum c_i p^i).
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

import numpy as np
from sympy import factorint
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_add, gf_irreducible_p, gf_mul, gf_rem

from proxrem.util.errors import FieldError

MAX_FIELD_ORDER = 32

# reduction polynomials, coefficients highest degree first
BUILTIN_MODULI: Dict[int, Tuple[int, ...]] = {
    4: (1, 1, 1),           # x^2 + x + 1
    8: (1, 0, 1, 1),        # x^3 + x + 1
    9: (1, 0, 1),           # x^2 + 1
    16: (1, 0, 0, 1, 1),    # x^4 + x + 1
    25: (1, 0, 2),          # x^2 + 2
    27: (1, 0, 2, 1),       # x^3 + 2x + 1
    32: (1, 0, 0, 1, 0, 1),  # x^5 + x^2 + 1
}


@dataclass(frozen=True, eq=False)
class FieldSpec:
    q: int
    p: int
    m: int
    modulus: Optional[Tuple[int, ...]]
    add_table: np.ndarray
    mul_table: np.ndarray
    neg_table: np.ndarray
    inv_table: np.ndarray   # inv_table[0] is 0 by convention

    zero = 0
    one = 1

    @property
    def elements(self) -> range:
        return range(self.q)

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def sub(self, a: int, b: int) -> int:
        return int(self.add_table[a, self.neg_table[b]])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in GF(%d)" % self.q)
        return int(self.inv_table[a])

    def element_str(self, e: int) -> str:
        """Prime fields print the residue, extensions a polynomial in x."""
        if self.m == 1:
            return str(e)
        terms = []
        for i, c in reversed(list(enumerate(_digits(e, self.p, self.m)))):
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            coef = str(c) if (c != 1 or i == 0) else ""
            terms.append(coef + mono)
        return " + ".join(terms) if terms else "0"

    def __repr__(self):
        return f"FieldSpec(q={self.q}, p={self.p}, m={self.m})"


def _digits(e: int, p: int, m: int) -> List[int]:
    out = []
    for _ in range(m):
        out.append(e % p)
        e //= p
    return out


def _to_poly(e: int, p: int, m: int) -> List[int]:
    coeffs = list(reversed(_digits(e, p, m)))
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    return coeffs


def _from_poly(poly: List[int], p: int) -> int:
    e = 0
    for c in poly:
        e = e * p + int(c) % p
    return e


def _readonly(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=np.int64)
    a.setflags(write=False)
    return a


def _verify_axioms(q: int, add: np.ndarray, mul: np.ndarray, neg: np.ndarray, inv: np.ndarray):
    idx = np.arange(q)
    checks = {
        "additive identity": np.array_equal(add[0], idx),
        "multiplicative identity": np.array_equal(mul[1], idx),
        "commutative addition": np.array_equal(add, add.T),
        "commutative multiplication": np.array_equal(mul, mul.T),
        # (a+b)+c == a+(b+c), a(bc) == (ab)c, a(b+c) == ab+ac over all triples
        "associative addition": np.array_equal(add[add[:, :, None], idx[None, None, :]],
                                               add[idx[:, None, None], add[None, :, :]]),
        "associative multiplication": np.array_equal(mul[mul[:, :, None], idx[None, None, :]],
                                                     mul[idx[:, None, None], mul[None, :, :]]),
        "distributivity": np.array_equal(mul[idx[:, None, None], add[None, :, :]],
                                         add[mul[:, :, None], mul[:, None, :]]),
        "additive inverses": bool((add[idx, neg] == 0).all()),
        "multiplicative inverses": bool((mul[idx[1:], inv[1:]] == 1).all()),
    }
    failed = [name for name, ok in checks.items() if not ok]
    if failed:
        raise FieldError(f"GF({q}) tables fail: {', '.join(failed)}")


@lru_cache(maxsize=None)
def make_field(q: int) -> FieldSpec:
    """GF(q) for a prime power 2 <= q <= 32, table-verified."""
    if not isinstance(q, (int, np.integer)) or q < 2:
        raise FieldError(f"field order must be an integer >= 2, got {q}")
    q = int(q)
    factors = factorint(q)
    if len(factors) != 1:
        raise FieldError(f"{q} is not a prime power")
    if q > MAX_FIELD_ORDER:
        raise FieldError(f"GF({q}) is not supported, orders up to {MAX_FIELD_ORDER} only")
    (p, m), = factors.items()
    p, m = int(p), int(m)
    modulus = None
    if m == 1:
        idx = np.arange(q)
        add = np.add.outer(idx, idx) % p
        mul = np.multiply.outer(idx, idx) % p
    else:
        modulus = BUILTIN_MODULI[q]
        mod_poly = [ZZ(c) for c in modulus]
        if not gf_irreducible_p(mod_poly, p, ZZ):
            raise FieldError(f"built-in modulus for GF({q}) is reducible")
        polys = [[ZZ(c) for c in _to_poly(e, p, m)] for e in range(q)]
        add = np.zeros((q, q), dtype=np.int64)
        mul = np.zeros((q, q), dtype=np.int64)
        for a in range(q):
            for b in range(a, q):
                s = _from_poly(gf_add(polys[a], polys[b], p, ZZ), p)
                t = _from_poly(gf_rem(gf_mul(polys[a], polys[b], p, ZZ), mod_poly, p, ZZ), p)
                add[a, b] = add[b, a] = s
                mul[a, b] = mul[b, a] = t
    neg = np.argmin(add, axis=1)   # the unique b with a + b == 0
    inv = np.zeros(q, dtype=np.int64)
    inv[1:] = np.argmax(mul[1:] == 1, axis=1)
    _verify_axioms(q, add, mul, neg, inv)
    return FieldSpec(q=q, p=p, m=m, modulus=modulus,
                     add_table=_readonly(add), mul_table=_readonly(mul),
                     neg_table=_readonly(neg), inv_table=_readonly(inv))
