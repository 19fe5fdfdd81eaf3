"""Evaluation harness: simulated users, ranking metrics, HAR comparison."""

from .compare import compare_strategies
from .datasets import EvalQuery, evaluate_dataset, read_dataset
from .metrics import (
    average_precision,
    mean_average_precision,
    mrr,
    precision,
    recall,
)
from .simulate import fqn_key, simulate_user
from .synth import KINDS, V_DO, V_DO_PO, V_PO, SyntheticQuery, generate_synthetic_queries

__all__ = [
    "KINDS",
    "V_DO",
    "V_DO_PO",
    "V_PO",
    "EvalQuery",
    "SyntheticQuery",
    "average_precision",
    "compare_strategies",
    "evaluate_dataset",
    "fqn_key",
    "generate_synthetic_queries",
    "mean_average_precision",
    "mrr",
    "precision",
    "recall",
    "read_dataset",
    "simulate_user",
]
