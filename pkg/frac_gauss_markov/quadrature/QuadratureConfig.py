from dataclasses import dataclass, replace

from frac_gauss_markov.FracGMError import ParameterError


@dataclass(frozen=True)
class QuadratureConfig:
    """
    Node layout of the composite Gauss-Legendre rule used for every weakly singular integral.
    Panels are graded towards the singular end of the substituted interval: panel k ends at (k/panels)^grading.
    rel_tol is the target for the a posteriori panel-doubling error estimate.
    """
    nodes_per_panel: int = 32
    panels: int = 8
    rel_tol: float = 1e-8
    grading: float = 2.0

    def __post_init__(self):
        if self.nodes_per_panel < 2:
            raise ParameterError(f"nodes_per_panel must be at least 2, instead got {self.nodes_per_panel}")
        if self.panels < 1:
            raise ParameterError(f"panels must be at least 1, instead got {self.panels}")
        if not self.rel_tol > 0:
            raise ParameterError(f"rel_tol must be positive, instead got {self.rel_tol}")
        if not self.grading >= 1:
            raise ParameterError(f"grading must be at least 1, instead got {self.grading}")

    def doubled(self) -> 'QuadratureConfig':
        return replace(self, panels=2 * self.panels)

    def to_metadata(self) -> dict[str, float]:
        return {
            'nodes_per_panel': self.nodes_per_panel,
            'panels': self.panels,
            'rel_tol': self.rel_tol,
            'grading': self.grading
        }
