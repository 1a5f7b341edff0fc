"""Fast computation of the Fibonacci period h(m) for arbitrary m.

Strategy: classify each prime by its residue mod 5, search the divisors of
the class bound (2p+2 for p = +-2 mod 5, p-1 for p = +-1 mod 5) for the
least one the pair test confirms, lift to prime powers with a verification
guard, and compose over the factorization by lcm.

Caches are plain dicts of immutable values: concurrent writers can only
store identical entries, so the functions stay thread-safe.
"""

from __future__ import annotations

import enum

from .errors import ClaimViolationError, DomainError, PeriodOverflowError
from .fibmod import (
    Method,
    PeriodResult,
    _fib_pair_ints,
    _lucas_pair_ints,
    lucas_brute_period,
    oracle_cap,
)
from .numth import (
    MODULUS_MAX,
    U64_MAX,
    _factor_pairs,
    divisors,
    factorize,
    is_prime,
    lcm,
)


class PrimeClass(enum.Enum):
    """Trichotomy of primes by residue mod 5, with 2 and 5 set apart.

    SPLIT: x^2 - x - 1 has two roots mod p, so h(p) | p - 1.
    IRREDUCIBLE: no roots mod p, so h(p) | 2p + 2.
    """

    SPECIAL_TWO = "special2"
    SPECIAL_FIVE = "special5"
    SPLIT = "split"
    IRREDUCIBLE = "irreducible"


def _classify(p: int) -> PrimeClass:
    # caller guarantees p prime
    if p == 2:
        return PrimeClass.SPECIAL_TWO
    if p == 5:
        return PrimeClass.SPECIAL_FIVE
    if p % 5 in (1, 4):
        return PrimeClass.SPLIT
    return PrimeClass.IRREDUCIBLE


def classify_prime(p: int) -> PrimeClass:
    """Class of a prime p; non-prime input is a domain error."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    return _classify(p)


def period_bound(p: int) -> int:
    """The integer whose divisors contain h(p): 3, 20, p-1, or 2p+2 by class."""
    cls = classify_prime(p)
    if cls is PrimeClass.SPECIAL_TWO:
        return 3
    if cls is PrimeClass.SPECIAL_FIVE:
        return 20
    if cls is PrimeClass.SPLIT:
        return p - 1
    return 2 * p + 2


_PRIME_PERIOD_CACHE: dict[int, int] = {2: 3, 5: 20}
_PRIME_POWER_CACHE: dict[tuple[int, int], tuple[int, int]] = {}


def seed_prime_period_cache(table: dict[int, int]) -> None:
    """Install precomputed prime periods (used by parallel scans)."""
    _PRIME_PERIOD_CACHE.update(table)


def clear_caches() -> None:
    """Drop memoized periods (timing tests want cold starts)."""
    _PRIME_PERIOD_CACHE.clear()
    _PRIME_PERIOD_CACHE.update({2: 3, 5: 20})
    _PRIME_POWER_CACHE.clear()


def _prime_period_value(p: int) -> int:
    """h(p) for prime p: least divisor d of the class bound with
    (F_d, F_{d+1}) = (0, 1) mod p, divisors tried in increasing order."""
    cached = _PRIME_PERIOD_CACHE.get(p)
    if cached is not None:
        return cached
    bound = p - 1 if p % 5 in (1, 4) else 2 * p + 2
    for d in divisors(factorize(bound)):
        if _fib_pair_ints(d, p) == (0, 1):
            _PRIME_PERIOD_CACHE[p] = d
            return d
    raise ClaimViolationError(
        f"no divisor of {bound} is a Fibonacci period of {p};"
        " the divisibility theorem failed (is the input prime?)"
    )


def prime_period(p: int) -> PeriodResult:
    """h(p) by divisor search over the class bound; 2 -> 3 and 5 -> 20."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    return PeriodResult(p, _prime_period_value(p), Method.PRIME_DIVISOR_SEARCH)


def _prime_power_value(p: int, e: int) -> tuple[int, int]:
    """(h(p^e), guard escalations): candidate p^(e-1) h(p), verified, and
    multiplied back up by p while the pair test rejects it."""
    key = (p, e)
    cached = _PRIME_POWER_CACHE.get(key)
    if cached is not None:
        return cached
    pe = p**e
    candidate = p ** (e - 1) * _prime_period_value(p)
    if candidate > U64_MAX:
        raise PeriodOverflowError(
            f"candidate period {candidate} for {p}^{e} exceeds the 64-bit range"
        )
    escalations = 0
    target = (0, 1 % pe)
    while _fib_pair_ints(candidate, pe) != target:
        candidate *= p
        escalations += 1
        if candidate > U64_MAX:
            raise PeriodOverflowError(
                f"period of {p}^{e} exceeds the 64-bit range during verification"
            )
    _PRIME_POWER_CACHE[key] = (candidate, escalations)
    return candidate, escalations


def prime_power_period(p: int, e: int) -> PeriodResult:
    """h(p^e) = p^(e-1) h(p), verified rather than trusted."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if e < 1:
        raise DomainError(f"exponent {e} must be >= 1")
    pe = p**e
    if pe > MODULUS_MAX:
        raise PeriodOverflowError(f"{p}^{e} exceeds the modulus domain 2^63 - 1")
    value, escalations = _prime_power_value(p, e)
    return PeriodResult(pe, value, Method.PRIME_POWER_LIFT, escalations)


def _pisano_value(m: int, seed: int | None = None) -> tuple[int, int, Method]:
    """(h(m), lift escalations, method) without dataclass overhead."""
    if m == 1:
        return 1, 0, Method.LCM_COMPOSITION
    pairs = _factor_pairs(m, seed)
    period = 1
    escalations = 0
    for p, e in pairs:
        value, esc = _prime_power_value(p, e)
        escalations += esc
        period = lcm(period, value)
    if len(pairs) > 1:
        method = Method.LCM_COMPOSITION
    elif pairs[0][1] > 1:
        method = Method.PRIME_POWER_LIFT
    else:
        method = Method.PRIME_DIVISOR_SEARCH
    return period, escalations, method


def pisano_period(m: int) -> PeriodResult:
    """h(m): factor m, lift each prime power, compose by lcm; h(1) = 1."""
    if m < 1:
        raise DomainError(f"modulus {m} must be >= 1")
    if m > MODULUS_MAX:
        raise DomainError(f"modulus {m} exceeds the supported domain 2^63 - 1")
    period, escalations, method = _pisano_value(m)
    return PeriodResult(m, period, method, escalations)


def lucas_period(m: int) -> PeriodResult:
    """Least d with (L_d, L_{d+1}) = (2, 1) mod m.

    The Lucas sequence obeys the same recurrence, so its start pair recurs
    within the Fibonacci cycle and the period divides h(m); search the
    divisors of h(m) in increasing order.  Falls back to the brute oracle
    below the cap should the search ever come up empty.
    """
    fib = pisano_period(m)
    target = (2 % m, 1 % m)
    for d in divisors(factorize(fib.period)) if fib.period > 1 else (1,):
        if _lucas_pair_ints(d, m) == target:
            return PeriodResult(m, d, Method.PRIME_DIVISOR_SEARCH, fib.lift_escalations)
    if m <= oracle_cap():
        return lucas_brute_period(m)
    raise ClaimViolationError(
        f"Lucas start pair did not recur within divisors of h({m}) = {fib.period}"
    )
