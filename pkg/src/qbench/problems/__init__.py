"""Problem classes, instance generation and evaluation"""

from qbench.problems.classes import ProblemClass, Shape, Spectrum, all_class_names
from qbench.problems.generator import sample_instance
from qbench.problems.instance import Instance
from qbench.problems.io import load_instance, save_instance
from qbench.problems.report import class_invariant_report

__all__ = [
    "Instance",
    "ProblemClass",
    "Shape",
    "Spectrum",
    "all_class_names",
    "class_invariant_report",
    "load_instance",
    "sample_instance",
    "save_instance",
]
