from frac_gauss_markov.FracGMError import DomainError


def check_time(t: float) -> float:
    if t < 0:
        raise DomainError(f"Time must be nonnegative, instead got {t}")
    return float(t)


def ordered_times(u: float, t: float) -> tuple[float, float]:
    """
    Covariances are symmetric, so (u, t) is returned in increasing order rather than rejected.
    :raises DomainError: if either time is negative
    """
    if u < 0 or t < 0:
        raise DomainError(f"Times must be nonnegative, instead got u={u}, t={t}")
    if u > t:
        return float(t), float(u)
    return float(u), float(t)
