""" Contextual bandit lab: EE-Net, its baselines and the regret harness """
from .lab import BanditLab

__version__ = "0.1.0"

__all__ = [
    "BanditLab",
]
