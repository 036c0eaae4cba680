"""Invariant stage - generator contract and per-class structure"""

from qbench.core.context import VerificationContext
from qbench.problems.report import class_invariant_report
from qbench.stages.base import BaseStage


class InvariantStage(BaseStage):
    """Run the instance invariant report"""

    name = "invariants"

    async def execute(self, context: VerificationContext) -> VerificationContext:
        context.extend(class_invariant_report(context.instance))
        return context
