"""
Least primes in Artin classes of abelian fields over Q.

For Q(sqrt(d)) the class of an unramified p is the Kronecker symbol (disc | p),
+1 when p splits and -1 when it is inert. For Q(zeta_q) the class of p != q is
p mod q. Ramified primes are never counted.
"""

import math
from functools import lru_cache

import numpy as np

from chebkit import conf
from chebkit.dataclasses import AbelianField, FieldKind, SearchRecord, Survey
from chebkit.exceptions import ChebkitError, DomainError, ScanLimitExceeded
from chebkit.private import errors
from chebkit.private.loggers import logger

try:
    import polars as pl
except ImportError:
    pl = None

# strong probable prime to all of these bases is prime below 3.3 * 10**24
WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

BOUND_EXPONENT = 40


def _jacobi(a, n):
    """(a | n) for odd n > 0."""
    negate = False
    a = a % n
    while a != 0:
        while a % 2 == 0:
            a = a // 2
            if n % 8 == 3 or n % 8 == 5:
                negate = not negate

        if a % 4 == 3 and n % 4 == 3:
            negate = not negate

        n, a = a, n
        a = a % n

    if n == 1:
        return -1 if negate else 1
    return 0


def kronecker(a, n):
    """The Kronecker symbol (a | n), n != 0."""
    if n == 0:
        raise DomainError(errors.zero_modulus())

    sign = 1
    if n < 0:
        n = -n
        if a < 0:
            sign = -1

    twos = 0
    while n % 2 == 0:
        n //= 2
        twos += 1

    if twos:
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5) and twos % 2 == 1:
            sign = -sign

    return sign * _jacobi(a, n)


def is_prime(n):
    """Deterministic Miller-Rabin for every n below 3.3 * 10**24."""
    if n < 2:
        return False
    for p in WITNESSES:
        if n % p == 0:
            return n == p

    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1

    for a in WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=8)
def primes_up_to(limit):
    """Primes <= limit as a read-only int64 array, sieve of Eratosthenes."""
    if limit < 2:
        return np.array([], dtype=np.int64)

    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False

    primes = np.flatnonzero(sieve).astype(np.int64)
    primes.setflags(write=False)
    logger.debug("sieved %s primes up to %s", len(primes), limit)
    return primes


def iter_primes(sieve_limit=conf.SIEVE_LIMIT):
    """All primes in increasing order, sieved first and then tested one by one."""
    for p in primes_up_to(sieve_limit):
        yield int(p)

    n = sieve_limit + 1 if sieve_limit % 2 == 0 else sieve_limit + 2
    while True:
        if is_prime(n):
            yield n
        n += 2


def is_squarefree(n):
    n = abs(n)
    if n == 0:
        return False
    for p in primes_up_to(math.isqrt(n)):
        p = int(p)
        if n % (p * p) == 0:
            return False
    return True


def quadratic_field(d):
    if d in (0, 1) or not is_squarefree(d):
        raise DomainError(errors.not_squarefree(d))

    disc = d if d % 4 == 1 else 4 * d
    return AbelianField(FieldKind.QUADRATIC, d, disc, (1, -1))


def cyclotomic_field(q):
    """Q(zeta_q) for an odd prime q, |disc| = q**(q-2)."""
    if q < 3 or not is_prime(q):
        raise DomainError(errors.not_odd_prime(q))

    sign = (-1) ** ((q - 1) // 2)
    classes = tuple(range(1, q))
    return AbelianField(FieldKind.CYCLOTOMIC, q, sign * q ** (q - 2), classes)


def _record(field, label, p):
    return SearchRecord(
        field=field,
        class_label=label,
        least_prime=p,
        exponent_realized=math.log(p) / math.log(field.dL),
        bound_pass=p <= field.dL**BOUND_EXPONENT,
    )


def _scan_limit(field, label, cap):
    logger.warning("no prime <= %s in class %s of %s", cap, label, field)
    return ScanLimitExceeded(
        errors.scan_limit_exceeded(field, label, cap), field=field, label=label, cap=cap
    )


def least_prime_quadratic(d, cls, cap=conf.SCAN_CAP):
    """Least prime p not dividing d_L with (disc | p) = cls."""
    field = quadratic_field(d)
    if cls not in field.classes:
        raise DomainError(errors.bad_quadratic_class(cls))

    for p in iter_primes():
        if p > cap:
            raise _scan_limit(field, cls, cap)
        if field.dL % p == 0:
            continue
        if kronecker(field.disc, p) == cls:
            return _record(field, cls, p)


def least_prime_ap(q, a, cap=conf.SCAN_CAP):
    """Least prime p = a mod q, the class a of Gal(Q(zeta_q)/Q)."""
    field = cyclotomic_field(q)
    if not 1 <= a < q or math.gcd(a, q) != 1:
        raise DomainError(errors.residue_not_coprime(a, q))

    p = a
    while p <= cap:
        if is_prime(p):
            return _record(field, a, p)
        p += q
    raise _scan_limit(field, a, cap)


def _quadratic_params(max_disc):
    for d in range(-max_disc, max_disc + 1):
        if d in (0, 1) or not is_squarefree(d):
            continue
        dL = abs(d) if d % 4 == 1 else 4 * abs(d)
        if dL <= max_disc:
            yield d


def _cyclotomic_params(max_disc):
    q = 3
    while q ** (q - 2) <= max_disc:
        if is_prime(q):
            yield q
        q += 2


def _sort_key(record):
    return (
        -record.exponent_realized,
        record.field.kind.value,
        record.field.param,
        record.class_label,
    )


def survey(max_disc, cap=conf.SCAN_CAP):
    """Least primes of every class of the abelian fields with d_L <= max_disc.

    Quadratic fields and Q(zeta_q) for odd primes q are covered. A class whose
    scan hits ``cap`` is kept in ``Survey.failures`` and the survey carries on.
    """
    if max_disc < 5:
        raise DomainError(errors.max_disc_too_small(max_disc))

    records = []
    failures = []
    searches = [
        (least_prime_quadratic, d, cls)
        for d in _quadratic_params(max_disc)
        for cls in (1, -1)
    ]
    searches += [
        (least_prime_ap, q, a)
        for q in _cyclotomic_params(max_disc)
        for a in range(1, q)
    ]

    for search, param, label in searches:
        try:
            records.append(search(param, label, cap=cap))
        except ScanLimitExceeded as exc:
            failures.append(exc)

    records.sort(key=_sort_key)
    result = Survey(records, failures)
    logger.info(
        "survey up to d_L = %s: %s records, max exponent %s",
        max_disc,
        len(records),
        result.max_exponent,
    )
    return result


def write_csv(records, path):
    if pl is None:
        raise ChebkitError(errors.polars_missing())

    # d_L = q**(q-2) leaves int64 from q = 19 on, so it is written as text
    frame = pl.DataFrame(
        {
            "kind": [record.field.kind.value for record in records],
            "param": [record.field.param for record in records],
            "class": [record.class_label for record in records],
            "dL": [str(record.field.dL) for record in records],
            "least_prime": [record.least_prime for record in records],
            "exponent_realized": [record.exponent_realized for record in records],
            "bound_pass": [record.bound_pass for record in records],
        },
        schema={
            "kind": pl.Utf8,
            "param": pl.Int64,
            "class": pl.Int64,
            "dL": pl.Utf8,
            "least_prime": pl.Int64,
            "exponent_realized": pl.Float64,
            "bound_pass": pl.Boolean,
        },
    )
    frame.write_csv(path)
    return frame
