"""
Trial Runner
Runs batches of scenario verifications and summarizes the worst residuals
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Type

import numpy as np

from closedform import BaseScenario
from .tolerances import Tolerances
from .verify import OracleComparison, verify_scenario


@dataclass(frozen=True)
class TrialSummary:
    """Outcome of all trials of one scenario kind"""

    scenario: str
    trials: int
    failures: int
    worst_point_error: float
    worst_objective_error: float
    worst_stationarity: Optional[float] = None

    @property
    def passed(self) -> bool:
        return self.failures == 0


class TrialRunner:
    """Verifies a list of scenarios against the numerical oracle"""

    def __init__(self, tolerances: Tolerances = Tolerances(), perturbation: float = 0.0):
        """
        Args:
            tolerances: Thresholds handed to verify_scenario
            perturbation: Relative error injected into every closed-form envelope
        """
        self.tolerances = tolerances
        self.perturbation = perturbation
        self.scenarios: List[BaseScenario] = []
        self.logger = logging.getLogger(__name__)

    def add_scenario(self, scenario: BaseScenario) -> None:
        self.scenarios.append(scenario)

    def add_trials(self, scenario_cls: Type[BaseScenario], trials: int, rng: np.random.Generator) -> None:
        """
        Queue `trials` instances of one scenario kind

        The first instance is the scenario's worked example, the rest are
        drawn from rng.
        """
        if trials < 1:
            raise ValueError(f"trials must be at least 1, got {trials}")
        self.add_scenario(scenario_cls.worked_example())
        for _ in range(trials - 1):
            self.add_scenario(scenario_cls.sample(rng))

    def run(self) -> List[OracleComparison]:
        """
        Verify every queued scenario in order

        Returns:
            One OracleComparison per scenario
        """
        if not self.scenarios:
            self.logger.warning("No scenarios to verify")
            return []

        comparisons = [
            verify_scenario(scenario, self.tolerances, self.perturbation) for scenario in self.scenarios
        ]

        passed = sum(1 for c in comparisons if c.passed)
        total = len(comparisons)
        glyph = "✅" if passed == total else "❌"
        self.logger.info(f"{glyph} Verified {passed}/{total} trials")
        return comparisons

    def summarize(self, comparisons: List[OracleComparison]) -> List[TrialSummary]:
        """Group comparisons by scenario tag, keeping first-seen order"""
        groups: Dict[str, List[OracleComparison]] = {}
        for comparison in comparisons:
            groups.setdefault(comparison.closed_form.scenario.value, []).append(comparison)

        summaries = []
        for tag, group in groups.items():
            kkt_reports = [c.kkt for c in group if c.kkt is not None]
            summaries.append(
                TrialSummary(
                    scenario=tag,
                    trials=len(group),
                    failures=sum(1 for c in group if not c.passed),
                    worst_point_error=max(c.rel_error_point for c in group),
                    worst_objective_error=max(c.rel_error_objective for c in group),
                    worst_stationarity=max(r.stationarity_residual for r in kkt_reports) if kkt_reports else None,
                )
            )
        return summaries

    def get_summary(self, summaries: List[TrialSummary]) -> str:
        """One line per scenario kind"""
        if not summaries:
            return "No trials run"
        lines = []
        for s in summaries:
            status = "ok" if s.passed else f"{s.failures} FAILED"
            line = (
                f"{s.scenario}: {s.trials} trials, {status}; worst point error {s.worst_point_error:.3e}, "
                f"worst objective error {s.worst_objective_error:.3e}"
            )
            if s.worst_stationarity is not None:
                line += f", worst KKT stationarity {s.worst_stationarity:.3e}"
            lines.append(line)
        return "\n".join(lines)
