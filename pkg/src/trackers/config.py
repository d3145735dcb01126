"""
Tracker Configuration Module
Numeric knobs for path tracking, endgame and real extraction
"""

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class TrackerConfig(BaseModel):
    """Validated tracker parameters; defaults follow the published solver defaults"""

    model_config = ConfigDict(frozen=True, extra="forbid")

    # Step control
    s0: Optional[float] = Field(default=None, description="Start of log-time; None means -20(n+1)")
    end_s: float = 1e-8
    newton_tol: float = 1e-10
    max_corrector_iters: int = 3
    expand_after: int = 2
    min_step: float = 1e-10
    max_halvings_per_step: int = 10
    blowup_norm: float = 1e8
    far_norm: float = 1e6
    warm_start_max_iters: int = 20

    # Endgame
    endgame_max_iters: int = 30
    singular_max_iters: int = 100
    cond_threshold: float = 1e10
    singular_residual_tol: float = 1e-8
    local_dim_eps: float = 1e-3
    local_dim_radii: int = 3
    local_dim_directions: int = 3
    local_dim_max_iters: int = 50

    # Duplicates and clustering
    duplicate_tol: float = 1e-6
    singular_cluster_tol: float = 1e-3

    # Projective retrace
    retrace_step_factor: float = 0.25
    retrace_corrector_iters: int = 2
    stall_x0_tol: float = 1e-4

    # Real extraction
    imag_tol: float = 1e-8
    singular_imag_tol: float = 1e-4
    arclength_max_steps: int = 2000
    arclength_initial_step: float = 0.05
    arclength_max_step: float = 0.5
    arclength_tol: float = 1e-10

    @field_validator("s0")
    @classmethod
    def check_s0(cls, v: Optional[float]) -> Optional[float]:
        if v is not None and v >= 0:
            raise ValueError("s0 must be negative")
        return v

    @field_validator(
        "end_s",
        "newton_tol",
        "min_step",
        "blowup_norm",
        "far_norm",
        "singular_residual_tol",
        "local_dim_eps",
        "duplicate_tol",
        "singular_cluster_tol",
        "retrace_step_factor",
        "stall_x0_tol",
        "imag_tol",
        "singular_imag_tol",
        "arclength_initial_step",
        "arclength_max_step",
        "arclength_tol",
    )
    @classmethod
    def check_positive(cls, v: float) -> float:
        if v <= 0:
            raise ValueError("tolerances and step sizes must be positive")
        return v

    @field_validator(
        "max_corrector_iters",
        "expand_after",
        "max_halvings_per_step",
        "warm_start_max_iters",
        "endgame_max_iters",
        "singular_max_iters",
        "local_dim_radii",
        "local_dim_directions",
        "local_dim_max_iters",
        "retrace_corrector_iters",
        "arclength_max_steps",
    )
    @classmethod
    def check_count(cls, v: int) -> int:
        if v < 1:
            raise ValueError("iteration limits must be at least 1")
        return v

    @model_validator(mode="after")
    def check_relations(self) -> "TrackerConfig":
        if self.duplicate_tol >= 1:
            raise ValueError("duplicate_tol must be below 1")
        if self.cond_threshold <= 1:
            raise ValueError("cond_threshold must exceed 1")
        if self.retrace_step_factor > 1:
            raise ValueError("retrace_step_factor must not exceed 1")
        if self.far_norm > self.blowup_norm:
            raise ValueError("far_norm must not exceed blowup_norm")
        return self

    def resolved_s0(self, n: int) -> float:
        """Start of log-time for n unknown coordinates"""
        return self.s0 if self.s0 is not None else -20.0 * (n + 1)

    def with_overrides(self, **overrides) -> "TrackerConfig":
        """Validated copy with some fields replaced"""
        data = self.model_dump()
        data.update({k: v for k, v in overrides.items() if v is not None})
        return TrackerConfig.model_validate(data)
