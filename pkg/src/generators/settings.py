"""Generator configuration and generation report models."""
from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator

from config import EXTRA_LINK_RETRIES

MAX_SEED = 2**64 - 1

_MODEL_FIELDS = {
    "ba": {"m"},
    "fitness_ba": {"m", "fitness"},
    "inet_like": {"exponent", "k_max", "preference"},
    "rich_club_ba": {"m", "extra_links", "extra_link_retries"},
    "er_random": {"edge_probability", "target_links"},
}
_OPTIONAL_FIELDS = {"m", "exponent", "k_max", "extra_links", "edge_probability", "target_links"}


class GeneratorConfig(BaseModel):
    model: Literal["ba", "fitness_ba", "inet_like", "rich_club_ba", "er_random"]
    node_count: int = Field(..., ge=1, description="N, number of nodes")
    seed: int = Field(..., ge=0, le=MAX_SEED, description="64-bit unsigned seed")
    m: Optional[int] = Field(None, ge=1, description="Links per new node (BA family)")
    fitness: Literal["uniform", "constant"] = Field("uniform", description="Fitness distribution (fitness_ba)")
    exponent: Optional[float] = Field(None, description="Target degree exponent y (inet_like)")
    k_max: Optional[int] = Field(None, ge=1, description="Degree cutoff for inet_like targets, default N-1")
    preference: Literal["degree", "degree_plus_one"] = Field("degree", description="Linear preference weight (inet_like)")
    extra_links: Optional[int] = Field(None, ge=0, description="c, extra links between existing nodes per step (rich_club_ba)")
    extra_link_retries: int = Field(EXTRA_LINK_RETRIES, ge=1, description="Resampling budget per extra link")
    edge_probability: Optional[float] = Field(None, ge=0.0, le=1.0, description="p for G(N, p)")
    target_links: Optional[int] = Field(None, ge=0, description="L for G(N, L)")

    @model_validator(mode="after")
    def _check_model_fields(self):
        allowed = _MODEL_FIELDS[self.model]
        stray = sorted(f for f in _OPTIONAL_FIELDS - allowed if getattr(self, f) is not None)
        if stray:
            raise ValueError(f"Fields {stray} do not apply to model {self.model}")

        if self.model in ("ba", "fitness_ba", "rich_club_ba"):
            if self.m is None:
                raise ValueError(f"Model {self.model} requires m")
            if self.node_count <= self.m:
                raise ValueError(f"Need N > m, got N={self.node_count}, m={self.m}")
        if self.model == "rich_club_ba" and self.extra_links is None:
            raise ValueError("Model rich_club_ba requires extra_links (c)")
        if self.model == "inet_like":
            if self.exponent is None or self.exponent <= 1.0:
                raise ValueError("Model inet_like requires exponent y > 1")
            if self.node_count < 10:
                raise ValueError(f"Model inet_like requires N >= 10, got {self.node_count}")
        if self.model == "er_random":
            if (self.edge_probability is None) == (self.target_links is None):
                raise ValueError("Model er_random requires exactly one of edge_probability or target_links")
            max_links = self.node_count * (self.node_count - 1) // 2
            if self.target_links is not None and self.target_links > max_links:
                raise ValueError(f"target_links={self.target_links} exceeds N(N-1)/2={max_links}")
        return self


class GenerationReport(BaseModel):
    model: str
    seed: int
    node_count: int
    link_count: int
    skipped_extra_links: int = Field(0, description="rich_club_ba extra links abandoned after the retry budget")
    discarded_stubs: int = Field(0, description="inet_like free stubs left unmatched")
    tree_nodes: int = Field(0, description="inet_like nodes in the spanning-tree backbone")
