import numpy as np

from banditlab.models.environment import RoundContext

def pseudo_regret(round: RoundContext, chosen_index: int) -> float:
    """ h(x_{t,i*}) - h(x_{t,i}) for the chosen arm i; ties at the max are harmless """
    if not 0 <= chosen_index < round.n_arms:
        raise IndexError(f"Arm index {chosen_index} out of range for {round.n_arms} arms")
    return float(np.max(round.expected_rewards) - round.expected_rewards[chosen_index])
