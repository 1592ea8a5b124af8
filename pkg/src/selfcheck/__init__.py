# Maxwell Quasi-Trefftz Toolkit - Self-Check Package
# Contains the invariant suites run by the selfcheck command

from .suite_runner import SuiteResult, SelfCheckReport, SelfCheckRunner, selfcheck

__all__ = ["SuiteResult", "SelfCheckReport", "SelfCheckRunner", "selfcheck"]
