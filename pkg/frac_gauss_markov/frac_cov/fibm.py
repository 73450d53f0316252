from frac_gauss_markov.frac_cov.arguments import check_time, ordered_times
from frac_gauss_markov.frac_cov.closed_forms import ibm_cov
from frac_gauss_markov.quadrature import FracOrder, QuadratureConfig, compute_J, compute_H, gamma_fn, gamma_sq


def fibm_var(t: float, alpha) -> float:
    """
    Variance of the fractional integral of Brownian motion, t^(2a+1) / ((2a+1) Gamma(a+1)^2)
    """
    t = check_time(t)
    a = FracOrder.of(alpha).alpha
    return t ** (2 * a + 1) / ((2 * a + 1) * gamma_fn(a + 1) ** 2)


def fibm_cov(u: float, t: float, alpha, cfg: QuadratureConfig = QuadratureConfig()) -> float:
    """
    Covariance of the fractional integral of Brownian motion:
    (1/Gamma(a)^2) [t^(a+1) u^a / (a^2 (a+1)) - t H(u,t) / (a (a+1)) + J(u,t) / (a (a+1))]
    At alpha = 1 the integrated Brownian motion closed form is returned.
    """
    u, t = ordered_times(u, t)
    order = FracOrder.of(alpha)
    if order.is_integer_order:
        return ibm_cov(u, t)
    if u == 0:
        return 0.0
    a = order.alpha
    bracket = (t ** (a + 1) * u ** a / (a ** 2 * (a + 1))
               - t * compute_H(u, t, order, cfg) / (a * (a + 1))
               + compute_J(u, t, order, cfg) / (a * (a + 1)))
    return bracket / gamma_sq(order)
