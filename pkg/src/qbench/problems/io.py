"""Instance JSON documents (schema ``qbench-instance-v1``)"""

import json
from pathlib import Path
from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from pydantic import ValidationError as PydanticValidationError

from qbench.core.exceptions import ConfigurationError, ValidationError
from qbench.problems.classes import DEFAULT_KAPPA, ProblemClass, Spectrum
from qbench.problems.instance import Instance

SCHEMA_VERSION = "qbench-instance-v1"


class InstanceDocument(BaseModel):
    """Serialized instance; matrices are row-major nested lists"""

    model_config = ConfigDict(populate_by_name=True)

    schema_version: Literal["qbench-instance-v1"] = Field(default=SCHEMA_VERSION, alias="schema")
    class_name: str
    dimension: int
    index: int
    kappa: float = DEFAULT_KAPPA
    spectrum: Spectrum = Spectrum.ELLIPSOID
    U1: list[list[float]]
    U2: list[list[float]]
    D1: list[float]
    D2: list[float]
    x1_star: list[float]
    x2_star: list[float]
    a1: float
    a2: float
    b1: float
    b2: float
    s: float
    g_weight: float

    @classmethod
    def from_instance(cls, inst: Instance) -> "InstanceDocument":
        pc = inst.problem_class
        return cls(
            class_name=pc.name,
            dimension=pc.dimension,
            index=inst.index,
            kappa=pc.kappa,
            spectrum=pc.spectrum,
            U1=inst.u1.tolist(),
            U2=inst.u2.tolist(),
            D1=inst.d1.tolist(),
            D2=inst.d2.tolist(),
            x1_star=inst.x1_star.tolist(),
            x2_star=inst.x2_star.tolist(),
            a1=inst.a1,
            a2=inst.a2,
            b1=inst.b1,
            b2=inst.b2,
            s=inst.s,
            g_weight=inst.g_weight,
        )

    def to_instance(self) -> Instance:
        """Rebuild the instance without checking its invariants"""
        problem_class = ProblemClass.from_name(
            self.class_name, self.dimension, self.kappa, self.spectrum
        )
        return Instance(
            problem_class=problem_class,
            index=self.index,
            u1=np.array(self.U1, dtype=float),
            u2=np.array(self.U2, dtype=float),
            d1=np.array(self.D1, dtype=float),
            d2=np.array(self.D2, dtype=float),
            x1_star=np.array(self.x1_star, dtype=float),
            x2_star=np.array(self.x2_star, dtype=float),
            a1=self.a1,
            a2=self.a2,
            b1=self.b1,
            b2=self.b2,
            s=self.s,
            g_weight=self.g_weight,
        )


def save_instance(inst: Instance, path: Path | str) -> Path:
    """Write an instance document; floats use shortest round-trip repr"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    document = InstanceDocument.from_instance(inst).model_dump(mode="json", by_alias=True)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(document, f, indent=2)
        f.write("\n")
    return path


def load_instance(path: Path | str) -> Instance:
    path = Path(path)
    try:
        with open(path, encoding="utf-8") as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise ConfigurationError(f"Cannot read instance file {path}: {e}") from e
    try:
        document = InstanceDocument.model_validate(data)
    except PydanticValidationError as e:
        raise ValidationError(f"Invalid instance document {path}: {e}") from e
    return document.to_instance()
