"""Validated run configurations for the command-line front end."""
from .run_config import AnalyzeRun, AttackRun, CompareRun, GenerateRun, RunConfig, validate_run

__all__ = [
    'RunConfig',
    'GenerateRun',
    'AnalyzeRun',
    'CompareRun',
    'AttackRun',
    'validate_run',
]
