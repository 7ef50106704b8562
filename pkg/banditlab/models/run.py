"""
Run Config
"""
from typing import (
    Dict,
    List,
    Optional,
    Union
)

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    model_validator
)

from banditlab.models.enums import AlgorithmType
from banditlab.models.environment import EnvSpec
from banditlab.models.policy import get_policy_config_class

HyperparameterValue = Union[int, float, str]

class RunConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    algorithm: AlgorithmType
    label: Optional[str] = None                                         # Name in outputs, defaults to the algorithm
    env: EnvSpec = Field(default_factory=EnvSpec)
    horizon: int = Field(default=5000, ge=1)                            # T
    seeds: List[int] = Field(default_factory=lambda: list(range(10)), min_length=1)
    hyperparameters: Dict[str, HyperparameterValue] = Field(default_factory=dict)
    output_path: Optional[str] = None

    @model_validator(mode="after")
    def _check_run(self) -> "RunConfig":
        if any(seed < 0 or seed >= 2 ** 64 for seed in self.seeds):
            raise ValueError(f"Seeds must be unsigned 64-bit integers, got {self.seeds}")
        if len(set(self.seeds)) != len(self.seeds):
            raise ValueError(f"Seeds must be distinct, got {self.seeds}")
        # Unknown keys and malformed values fail at load time
        config_class = get_policy_config_class(self.algorithm)
        for key, value in self.hyperparameters.items():
            config_class.coerce(key, value)
        return self

    @property
    def algorithm_id(self) -> str:
        return self.label or self.algorithm.value

    def update(self, **kwargs) -> "RunConfig":
        # Revalidates, unlike model_copy
        return RunConfig(**{**self.model_dump(), **kwargs})
