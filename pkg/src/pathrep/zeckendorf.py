"""Zeckendorf numeration: digits, parity, and the even/odd index sequences.

The Fibonacci convention here starts F_0 = 1, F_1 = 2, F_2 = 3, F_3 = 5, ...;
every n >= 0 has a unique expansion n = sum d_i F_i with d_i in {0, 1} and no
two consecutive ones.  A number is even or odd according to its last digit
d_0; e(i) and o(i) enumerate (1-indexed) the naturals with even respectively
odd expansions.  These are OEIS A022342 and A003622.
"""

from __future__ import annotations

_FIBS = [1, 2]


def _fib_upto(n: int):
    while _FIBS[-1] <= n:
        _FIBS.append(_FIBS[-1] + _FIBS[-2])
    return _FIBS


def zeckendorf(n: int):
    """Digits of the Zeckendorf expansion, least significant first; 0 -> []."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return []
    fibs = _fib_upto(n)
    k = len(fibs) - 1
    while fibs[k] > n:
        k -= 1
    digits = [0] * (k + 1)
    rem = n
    while rem > 0:
        while fibs[k] > rem:
            k -= 1
        digits[k] = 1
        rem -= fibs[k]
        k -= 2  # skip the adjacent index: no two consecutive ones
    return digits


def decode(digits) -> int:
    fibs = _fib_upto(sum(digits) + len(digits) + 1)
    for i in range(len(digits) - 1):
        if digits[i] and digits[i + 1]:
            raise ValueError("consecutive ones are not a valid expansion")
    return sum(f for d, f in zip(digits, fibs) if d)


def digits_string(n: int) -> str:
    """Most-significant-first digit string, e.g. 49 -> '10100010'."""
    d = zeckendorf(n)
    return "".join(str(b) for b in reversed(d)) if d else "0"


def parity(n: int) -> str:
    """'even' if the last Zeckendorf digit is 0, else 'odd'."""
    return "odd" if is_odd(n) else "even"


def is_odd(n: int) -> bool:
    d = zeckendorf(n)
    return bool(d) and d[0] == 1


def parity_array(bound: int):
    """odd-flags for 0..bound in linear time via the Fibonacci block recursion.

    For n in [F_k, F_{k+1}) with k >= 1 the last digit of n equals that of
    n - F_k; the only base case with last digit 1 is n = 1 = F_0.
    """
    flags = [False] * (bound + 1)
    if bound >= 1:
        flags[1] = True
    fibs = _fib_upto(max(bound, 2))
    k = 1
    while k < len(fibs) and fibs[k] <= bound:
        lo = fibs[k]
        hi = min(bound + 1, fibs[k + 1] if k + 1 < len(fibs) else bound + 1)
        for n in range(lo, hi):
            flags[n] = flags[n - lo]
        k += 1
    return flags


class EvenOddTables:
    """Cached enumeration of the even/odd sequences up to a growing bound."""

    def __init__(self):
        self._evens = []
        self._odds = []
        self._scanned = -1

    def _extend(self, count_needed: int, which: str):
        target = self._evens if which == "even" else self._odds
        while len(target) < count_needed:
            grow_to = max(64, 2 * (self._scanned + 1))
            flags = parity_array(grow_to)
            self._evens = [n for n in range(grow_to + 1) if not flags[n]]
            self._odds = [n for n in range(grow_to + 1) if flags[n]]
            self._scanned = grow_to
            target = self._evens if which == "even" else self._odds

    def e(self, i: int) -> int:
        if i < 1:
            raise ValueError("index must be >= 1")
        self._extend(i, "even")
        return self._evens[i - 1]

    def o(self, i: int) -> int:
        if i < 1:
            raise ValueError("index must be >= 1")
        self._extend(i, "odd")
        return self._odds[i - 1]


_TABLES = EvenOddTables()


def e(i: int) -> int:
    """The i-th natural number (1-indexed) with even Zeckendorf expansion."""
    return _TABLES.e(i)


def o(i: int) -> int:
    """The i-th natural number (1-indexed) with odd Zeckendorf expansion."""
    return _TABLES.o(i)


def table(upto: int):
    """Rows (i, e(i), o(i)) for i = 1..upto."""
    return [(i, e(i), o(i)) for i in range(1, upto + 1)]
