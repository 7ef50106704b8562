"""
Reference policies bracketing every learner: the oracle reads the hidden
expected rewards, the random policy ignores everything.
"""
from typing import (
    Any,
    ClassVar,
    Dict,
    Optional
)

import numpy as np

from banditlab.models.enums import AlgorithmType
from banditlab.models.environment import (
    ArmContext,
    RoundContext
)
from banditlab.models.policy import (
    OraclePolicyConfig,
    RandomPolicyConfig
)
from banditlab.protocols.policy import BasePolicy

class OraclePolicy(BasePolicy):
    name: ClassVar[AlgorithmType] = AlgorithmType.ORACLE

    def __init__(
            self,
            dim: int,
            seed: int = 0,
            parameter: Optional[Dict[str, Any]] = None,
            config: Optional[OraclePolicyConfig] = None
    ) -> None:
        super().__init__(dim, seed=seed, parameter=parameter, config=config, cls_policy_config=OraclePolicyConfig)

    def select(self, round: RoundContext) -> int:
        self._check_round(round)
        return round.best_index

    def update(self, x: ArmContext, reward: float) -> None:
        pass

class RandomPolicy(BasePolicy):
    name: ClassVar[AlgorithmType] = AlgorithmType.RANDOM

    def __init__(
            self,
            dim: int,
            seed: int = 0,
            parameter: Optional[Dict[str, Any]] = None,
            config: Optional[RandomPolicyConfig] = None
    ) -> None:
        super().__init__(dim, seed=seed, parameter=parameter, config=config, cls_policy_config=RandomPolicyConfig)

    def select(self, round: RoundContext) -> int:
        self._check_round(round)
        return int(self.rng.integers(round.n_arms))

    def update(self, x: ArmContext, reward: float) -> None:
        pass
