# Workflows package
from .check_suite_workflow import AUTO, CheckSuiteWorkflow
from .suites import ANCHORS, SUITE_FOR_KIND, SUITES, RecordCollector, anchor_for

__all__ = [
    "CheckSuiteWorkflow",
    "AUTO",
    "SUITES",
    "SUITE_FOR_KIND",
    "ANCHORS",
    "RecordCollector",
    "anchor_for",
]
