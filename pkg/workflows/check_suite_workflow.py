import logging
import time
from typing import Optional

from langgraph.graph import END, StateGraph

from shared.config import NGTLAB_DEFAULT_POINTS, NGTLAB_DEFAULT_SEED, validate_config
from shared.errors import NgtLabError, StructureError
from shared.models import CheckReport, CheckSuiteState, Tolerances
from shared.utils import default_tolerances
from structures import StructureKind, classify_frames
from tensor import GeneralizedMetric

from .suites import SUITE_FOR_KIND, SUITES

logger = logging.getLogger(__name__)

# Validate configuration
validate_config()

AUTO = "auto"


def _fallback_suite(state: CheckSuiteState) -> str:
    requested = state["requested_suite"]
    return "generic" if requested == AUTO else requested


def _node_name(suite: str) -> str:
    return f"suite_{suite.replace('-', '_')}"


class CheckSuiteWorkflow:
    def __init__(self):
        # Create the workflow graph
        self.workflow = self._create_workflow()

    def _create_workflow(self) -> StateGraph:
        workflow = StateGraph(CheckSuiteState)

        # Add nodes
        workflow.add_node("sample_points", self._sample_points_node)
        workflow.add_node("classify", self._classify_node)
        for suite in SUITES:
            workflow.add_node(_node_name(suite), self._suite_node)
        workflow.add_node("assemble_report", self._assemble_report_node)

        # Set entry point
        workflow.set_entry_point("sample_points")

        # Add edges
        workflow.add_edge("sample_points", "classify")
        workflow.add_conditional_edges(
            "classify",
            self._route,
            {_node_name(suite): _node_name(suite) for suite in SUITES}
            | {"assemble_report": "assemble_report"},
        )
        for suite in SUITES:
            workflow.add_edge(_node_name(suite), "assemble_report")
        workflow.add_edge("assemble_report", END)

        return workflow.compile()

    def _sample_points_node(self, state: CheckSuiteState) -> CheckSuiteState:
        """Sample the chart and evaluate a frame at each point."""
        manifold: GeneralizedMetric = state["manifold"]
        count = state["count"]
        seed = state["seed"]
        points = manifold.chart.sample(count, seed)
        logger.info("[SAMPLE] %d point(s) on %s with seed %d", count, state["manifold_name"], seed)

        frames = []
        skipped = 0
        for index, p in enumerate(points):
            try:
                frames.append(manifold.frame(p))
            except (NgtLabError, ArithmeticError) as e:
                skipped += 1
                logger.warning("[SKIP] point %d %s: %s", index, p.tolist(), e)

        errors = list(state.get("errors", []))
        if not frames:
            errors.append("no point could be evaluated")
        return {**state, "points": points, "frames": frames, "skipped": skipped, "errors": errors}

    def _classify_node(self, state: CheckSuiteState) -> CheckSuiteState:
        """Detect the structure class and pick the suite."""
        if not state["frames"]:
            return {**state, "structure": StructureKind.GENERIC.value, "suite": state["requested_suite"]}
        try:
            kind = classify_frames(state["frames"], state["tolerances"].structure)
        except StructureError as e:
            logger.warning("[CLASSIFY] %s", e)
            errors = list(state.get("errors", [])) + [str(e)]
            return {**state, "structure": StructureKind.GENERIC.value, "suite": _fallback_suite(state), "errors": errors}

        suite = state["requested_suite"]
        if suite == AUTO:
            suite = SUITE_FOR_KIND[kind]
        logger.info("[CLASSIFY] structure %s, running suite %s", kind.value, suite)
        return {**state, "structure": kind.value, "suite": suite}

    def _route(self, state: CheckSuiteState) -> str:
        if not state["frames"]:
            return "assemble_report"
        return _node_name(state["suite"])

    def _suite_node(self, state: CheckSuiteState) -> CheckSuiteState:
        """Run the selected suite over every evaluated frame."""
        suite = state["suite"]
        logger.info("[SUITE] %s over %d point(s)", suite, len(state["frames"]))
        records, erratum = SUITES[suite](state["frames"], state["tolerances"], state["seed"])
        return {**state, "records": records, "erratum": erratum}

    def _assemble_report_node(self, state: CheckSuiteState) -> CheckSuiteState:
        """Collect records into a report, ordered by check name."""
        records = sorted(state.get("records", []), key=lambda r: r.name)
        report = CheckReport(
            manifold=state["manifold_name"],
            suite=state["suite"],
            structure=state["structure"],
            seed=state["seed"],
            points=len(state["frames"]),
            skipped=state.get("skipped", 0),
            records=records,
            erratum=state.get("erratum"),
        )
        logger.info(
            "[REPORT] %d check(s), %s",
            len(records),
            "all passed" if report.passed else "not all passed",
        )
        return {**state, "report": report}

    def run(
        self,
        manifold: GeneralizedMetric,
        name: Optional[str] = None,
        suite: str = AUTO,
        count: int = NGTLAB_DEFAULT_POINTS,
        seed: int = NGTLAB_DEFAULT_SEED,
        tolerances: Optional[Tolerances] = None,
    ) -> CheckReport:
        """Run the check-suite workflow and return its report."""
        if count < 1:
            raise ValueError("at least one point is required")
        if suite != AUTO and suite not in SUITES:
            raise ValueError(f"unknown suite {suite!r}; choose from {', '.join([AUTO, *SUITES])}")

        initial_state: CheckSuiteState = {
            "manifold": manifold,
            "manifold_name": name or manifold.name,
            "requested_suite": suite,
            "count": count,
            "seed": seed,
            "tolerances": tolerances or default_tolerances(manifold.is_symbolic),
            "records": [],
            "erratum": None,
            "report": None,
            "errors": [],
        }

        started = time.perf_counter()
        result = self.workflow.invoke(initial_state)
        report: CheckReport = result["report"]
        report.wall_time = time.perf_counter() - started

        for error in result["errors"]:
            logger.warning("[REPORT] %s", error)
        return report
