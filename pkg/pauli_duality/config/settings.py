"""Application settings using pydantic-settings."""

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Backend limits, numerical tolerances and logging."""

    model_config = SettingsConfigDict(
        env_prefix="PAULI_DUALITY_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Backend size limits
    lmax: int | None = Field(
        default=None,
        ge=1,
        description="Overrides both size limits (env PAULI_DUALITY_LMAX)",
    )
    lmax_dense: int = Field(default=12, ge=1, description="Largest L for full dense matrices")
    lmax_states: int = Field(default=14, ge=1, description="Largest L for state vectors / extremal pairs")

    # Tolerances
    commutator_tol: float = Field(default=1e-10, gt=0, description="Commutator coefficient bound")
    nullspace_tol: float = Field(default=1e-10, gt=0, description="Relative null-space cut for fixed points")
    degeneracy_tol: float = Field(default=1e-8, gt=0, description="Eigenvalue degeneracy window")
    entropy_clamp: float = Field(default=1e-12, gt=0, description="Reduced-density eigenvalues below are zero")
    residual_tol: float = Field(default=1e-9, gt=0, description="Bound on |Hv - Ev| for eigenpairs")

    # Application settings
    debug: bool = Field(default=False, description="Debug mode")
    log_level: str = Field(default="INFO", description="Logging level")
    jobs: int = Field(default=1, ge=1, description="Default worker count for grid scans")

    @property
    def dense_limit(self) -> int:
        return self.lmax if self.lmax is not None else self.lmax_dense

    @property
    def state_limit(self) -> int:
        return self.lmax if self.lmax is not None else self.lmax_states


# Global settings instance
settings = Settings()
