"""Reference computations that do not share code paths with the package."""
from fractions import Fraction


def exact_recurrence(q, nu0, B, lambda0, lo, hi):
    """lam(lo..hi) in exact rational arithmetic; needs rational q, B, lambda0 and integer nu0."""
    q, B, lambda0 = Fraction(q), Fraction(B), Fraction(lambda0)

    def source(n):
        sign = -1 if n % 2 else 1
        return q ** (-nu0 - n) * (1 + sign * B)

    values = {0: lambda0}
    for n in range(0, hi):
        values[n + 1] = q * values[n] + source(n)
    for n in range(-1, lo - 1, -1):
        values[n] = (values[n + 1] - source(n)) / q
    return [values[n] for n in range(lo, hi + 1)]


def float_recurrence(q, nu0, B, lambda0, lo, hi):
    values = {0: float(lambda0)}
    for n in range(0, hi):
        values[n + 1] = q * values[n] + q ** (-nu0 - n) * (1 + (-1) ** (n % 2) * B)
    for n in range(-1, lo - 1, -1):
        values[n] = (values[n + 1] - q ** (-nu0 - n) * (1 + (-1) ** (n % 2) * B)) / q
    return values


def magnitude(q, nu0, B, lambda0, n):
    """Upper bound on the size of the terms summing to lam(n)."""
    qm = abs(q - 1 / q)
    qp = q + 1 / q
    return q ** (n - nu0) * (lambda0 * q ** nu0 + 1 / qm + abs(B) / qp) + q ** (-n - nu0) * (1 / qm + abs(B) / qp)


def brute_force_rep(q, nu0, B, lambda0, window=60, rel=1e-9):
    """Independent classification of a label from its spectrum alone.

    Returns (genuine, lo, hi): the basis range cut out by the first vanishing
    lam on either side of 0 and whether every lam on that range is >= 0.
    ``lo``/``hi`` are None when the spectrum runs off the window.
    """
    lam = float_recurrence(q, nu0, B, lambda0, -window, window + 1)

    def zero(n):
        return abs(lam[n]) <= 1e-12 + rel * magnitude(q, nu0, B, lambda0, n)

    def negative(n):
        return lam[n] < -(1e-12 + rel * magnitude(q, nu0, B, lambda0, n))

    lo = next((m for m in range(0, -window - 1, -1) if zero(m)), None)
    top = next((k for k in range(1, window + 2) if zero(k)), None)
    hi = top - 1 if top is not None else None
    first = lo if lo is not None else -window
    last = hi if hi is not None else window
    genuine = not any(negative(n) for n in range(first, last + 1))
    return genuine, lo, hi


def canonical(lo, hi):
    """Whether a basis range sits where the canonical numbering puts it."""
    if lo is None and hi is None:
        return True
    if lo is None:
        return hi == 0
    if hi is None:
        return lo == 0
    return (lo, hi) in {(0, 0), (-1, 0), (0, 1)}
