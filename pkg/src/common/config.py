"""
Configuration for bcom-homology.

Resource caps and run configuration are pydantic models. Caps can be overridden from the
environment (``BCOM_<FIELD>``) and every run setting can come from a YAML file.
"""

import logging
import os
from pathlib import Path
from typing import Any, Literal

import yaml
from pydantic import BaseModel, ConfigDict, Field, field_validator

from src.common.arith import is_prime
from src.common.exceptions import SpecError

logger = logging.getLogger("bcom")

ENV_PREFIX = "BCOM_"


class Caps(BaseModel):
    """Resource caps guarding desk-scale computations."""

    model_config = ConfigDict(frozen=True)

    max_group_order: int = Field(default=500, gt=0)
    max_enumeration_order: int = Field(default=400, gt=0)
    max_subgroups: int = Field(default=5000, gt=0)
    max_simplices: int = Field(default=2_000_000, gt=0)
    dense_elimination_limit: int = Field(default=20_000, gt=0)
    dense_cell_limit: int = Field(default=4_000_000, gt=0)
    quotient_max_degree: int = Field(default=6, gt=0)

    @classmethod
    def from_env(cls, **overrides: int) -> "Caps":
        """
        Build caps from defaults, then ``BCOM_*`` environment variables, then overrides.

        Args:
            **overrides: Explicit values that win over the environment

        Returns:
            Caps: The resolved caps
        """
        values: dict[str, int] = {}
        for name in cls.model_fields:
            raw = os.environ.get(f"{ENV_PREFIX}{name.upper()}")
            if raw is None:
                continue
            try:
                values[name] = int(raw)
            except ValueError as e:
                raise SpecError(
                    f"Environment override {ENV_PREFIX}{name.upper()}={raw!r} is not an integer"
                ) from e
        values.update(overrides)
        return cls(**values)


class RunConfig(BaseModel):
    """Settings of a single CLI run."""

    model_config = ConfigDict(frozen=True)

    group: str = "S3"
    tau: str = "z"
    ell: int = 2
    max_degree: int = Field(default=2, ge=0)
    output_format: Literal["json", "csv", "text"] = "text"
    caps: Caps = Field(default_factory=Caps.from_env)
    seed: int = 0  # reserved for sampling diagnostics

    @field_validator("ell")
    @classmethod
    def _ell_is_prime(cls, value: int) -> int:
        if not is_prime(value):
            raise ValueError(f"ell must be prime, got {value}")
        return value


def load_yaml_config(path: str | Path) -> dict[str, Any]:
    """
    Load a YAML mapping.

    Args:
        path: YAML file path

    Returns:
        dict[str, Any]: Parsed mapping (empty for an empty file)
    """
    path = Path(path)
    if not path.exists():
        raise SpecError(f"Config file {path} does not exist")
    with open(path) as f:
        data = yaml.safe_load(f)
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise SpecError(f"Config file {path} must contain a mapping")
    logger.info(f"Loaded configuration from {path}")
    return data
