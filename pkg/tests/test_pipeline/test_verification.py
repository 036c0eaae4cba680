"""Test verification pipelines"""

import dataclasses

import pytest

from qbench.core.config import VerificationConfig
from qbench.core.exceptions import ValidationError
from qbench.pipeline.verification import (
    FullVerificationPipeline,
    QuickVerificationPipeline,
    create_pipeline,
    verify_instance,
    verify_loaded,
)
from qbench.problems.classes import all_class_names
from tests.conftest import make_instance

COMPATIBLE_AT_TWO = [name for name in all_class_names() if name[:2] not in ("2/", "3/", "4/")]


class TestPipelineStructure:
    """Stage order of both levels"""

    def test_quick_stages(self) -> None:
        pipeline = QuickVerificationPipeline()
        assert [stage.name for stage in pipeline.stages] == [
            "invariants",
            "oracle",
            "weights",
            "gradient",
            "shape",
        ]

    def test_full_adds_grid_front(self) -> None:
        pipeline = FullVerificationPipeline()
        assert pipeline.stages[-1].name == "grid-front"
        assert len(pipeline.stages) == 6

    def test_create_pipeline(self) -> None:
        assert isinstance(create_pipeline("quick"), QuickVerificationPipeline)
        assert isinstance(create_pipeline("full"), FullVerificationPipeline)
        with pytest.raises(ValidationError):
            create_pipeline("exhaustive")  # type: ignore[arg-type]

    def test_stages_share_config(self) -> None:
        config = VerificationConfig(random_points=3)
        pipeline = FullVerificationPipeline(config)
        assert all(stage.config is config for stage in pipeline.stages)


class TestVerifyInstance:
    """End-to-end verification of generated instances"""

    @pytest.mark.parametrize("class_name", ["2|I", "3/J", "8/C"])
    async def test_quick_passes(self, class_name: str, fast_verification: VerificationConfig) -> None:
        context = await verify_instance(class_name, 5, 7, config=fast_verification)
        assert context.level == "quick"
        assert context.passed, context.get_summary_text()

    async def test_full_in_two_dimensions(self, fast_verification: VerificationConfig) -> None:
        context = await verify_instance("5|I", 2, 0, level="full", config=fast_verification)
        names = {check.name for check in context.checks}
        assert {"grid front forward", "grid front converse"} <= names
        assert context.passed, context.get_summary_text()

    @pytest.mark.slow
    @pytest.mark.parametrize("class_name", COMPATIBLE_AT_TWO)
    async def test_full_at_default_grid_size(self, class_name: str) -> None:
        config = VerificationConfig()
        assert config.grid_size == 600
        context = await verify_instance(class_name, 2, 0, level="full", config=config)
        names = {check.name for check in context.checks}
        assert {"grid front forward", "grid front converse"} <= names
        assert context.passed, context.get_summary_text()

    async def test_invalid_dimension(self) -> None:
        with pytest.raises(ValidationError):
            await verify_instance("2/C", 2, 0)

    async def test_tampered_instance_reported(self, fast_verification: VerificationConfig) -> None:
        inst = make_instance("1/C", 4, 0)
        context = await verify_loaded(dataclasses.replace(inst, a1=1e7), config=fast_verification)
        assert not context.passed
        assert "affine range" in {check.name for check in context.failed_checks()}

    async def test_stage_error_becomes_failed_check(self, fast_verification: VerificationConfig) -> None:
        inst = make_instance("1|C", 3, 0)
        broken = dataclasses.replace(inst, x2_star=inst.x1_star.copy())
        context = await verify_loaded(broken, config=fast_verification)
        assert not context.passed
        assert context.failed_checks()
