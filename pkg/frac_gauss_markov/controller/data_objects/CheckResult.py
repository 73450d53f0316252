from dataclasses import dataclass, asdict


@dataclass(frozen=True)
class CheckResult:
    """
    One row of a validation report
    """
    suite: str
    check: str
    value: float
    expected: str
    tolerance: str
    passed: bool

    def to_row(self) -> dict:
        return asdict(self)
