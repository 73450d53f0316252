import math

import numpy as np

from frac_gauss_markov.controller.data_objects import CheckResult
from frac_gauss_markov.controller.validation_suite.ValidationSuite import ValidationSuite
from frac_gauss_markov.frac_cov import (fibm_cov, fibm_var, figm_cov, figm_var, fiou_cov, fisou_cov, iou_cov, iou_var,
                                        isou_var, CrossTerm)
from frac_gauss_markov.gm_core import OUParams, SOUParams, bm_spec, ou_spec
from frac_gauss_markov.quadrature import compute_J, compute_H


class LimitsSuite(ValidationSuite):
    """
    Integer-order closed forms, diagonal identities and the small-alpha and small-mu limits
    """
    name = 'limits'

    def run(self) -> list[CheckResult]:
        cfg = self.cfg
        unit_ou = OUParams(mu=1.0, sigma=1.0)
        unit_sou = SOUParams(mu=1.0, sigma=1.0)

        self._close("J at alpha=1 (u=1, t=2)", compute_J(1.0, 2.0, 1.0, cfg), 2 / 3, 1e-8)
        self._close("H at alpha=1 (u=1, t=2)", compute_H(1.0, 2.0, 1.0, cfg), 1.5, 1e-8)
        for alpha in (0.1, 0.5, 0.9):
            self._close(f"J diagonal alpha={alpha}", compute_J(2.0, 2.0, alpha, cfg),
                        2.0 ** (2 * alpha + 1) / (2 * alpha * (2 * alpha + 1)), 1e-6)
            self._close(f"FIBM cov diagonal alpha={alpha}", fibm_cov(2.0, 2.0, alpha, cfg), fibm_var(2.0, alpha), 1e-6)

        self._close("FIBM var alpha=1 t=1", fibm_var(1.0, 1.0), 1 / 3, 1e-12)
        self._close("FIBM var alpha=0.5 t=2", fibm_var(2.0, 0.5), 8 / math.pi, 1e-12)
        self._close("FIBM var alpha=0.01 t=5", fibm_var(5.0, 0.01), 5.0, 0.03)
        gaps = [abs(fibm_var(5.0, alpha) - 5.0) for alpha in (0.05, 0.02, 0.01)]
        self._holds("FIBM var approaches t as alpha decreases", gaps[0] > gaps[1] > gaps[2],
                    "|var(5, alpha) - 5| decreasing over alpha = 0.05, 0.02, 0.01")
        self._close("FIBM cov alpha=0.01 (1, 3)", fibm_cov(1.0, 3.0, 0.01, cfg), 1.0, 0.03)
        self._close("FIGM(BM) cov vs FIBM alpha=0.5 (1, 2)", figm_cov(bm_spec(), 1.0, 2.0, 0.5, cfg),
                    fibm_cov(1.0, 2.0, 0.5, cfg), 1e-5)
        self._close("FIGM(BM) var vs FIBM alpha=0.5 t=2", figm_var(bm_spec(), 2.0, 0.5, cfg), fibm_var(2.0, 0.5), 1e-5)
        self._close("FIGM(OU) alpha=1 vs IOU closed form (1, 2)", figm_cov(ou_spec(unit_ou), 1.0, 2.0, 1.0, cfg),
                    iou_cov(unit_ou, 1.0, 2.0), 1e-6)
        self._close("FIGM(OU) var alpha=1 t=1", figm_var(ou_spec(unit_ou), 1.0, 1.0, cfg), iou_var(unit_ou, 1.0), 1e-6)
        self._close("IOU var near the Brownian limit", iou_var(OUParams(mu=1e-3, sigma=1.0), 1.0), 1 / 3, 0.005)
        slow_ou = OUParams(mu=1e-3, sigma=1.0)
        self._close("FIOU near the Brownian limit alpha=0.5 (1, 2)", fiou_cov(slow_ou, 1.0, 2.0, 0.5, cfg),
                    fibm_cov(1.0, 2.0, 0.5, cfg), 0.005)
        self._close("FISOU alpha=1 t=1", fisou_cov(unit_sou, 1.0, 1.0, 1.0, cfg), math.exp(-1), 1e-4)
        self._close("ISOU var t=1", isou_var(unit_sou, 1.0), math.exp(-1), 1e-12)

        grid = np.linspace(0.5, 5.0, 10)
        smallest_gap = min(fisou_cov(unit_sou, u, t, 0.5, cfg, CrossTerm.INDEPENDENT) - fiou_cov(unit_ou, u, t, 0.5, cfg)
                           for u in grid for t in grid if u <= t)
        self._holds("FISOU exceeds FIOU", smallest_gap >= 0, "fisou - fiou >= 0 on a 10x10 grid")

        return self.results
