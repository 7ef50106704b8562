from .eenet import (
    EENetPolicy,
    RandomProjector,
    IdentityProjector,
    exploration_label
)
from .linear import LinUCBPolicy
from .kernel import (
    KernelUCBPolicy,
    rbf_kernel
)
from .neural import (
    DiagCovariance,
    NeuralEpsilonPolicy,
    NeuralUCBPolicy,
    NeuralTSPolicy,
    neural_epsilon_select,
    neuralucb_select,
    neuralts_select
)
from .reference import (
    OraclePolicy,
    RandomPolicy
)

__all__ = [
    "EENetPolicy",
    "RandomProjector",
    "IdentityProjector",
    "exploration_label",
    "LinUCBPolicy",
    "KernelUCBPolicy",
    "rbf_kernel",
    "DiagCovariance",
    "NeuralEpsilonPolicy",
    "NeuralUCBPolicy",
    "NeuralTSPolicy",
    "neural_epsilon_select",
    "neuralucb_select",
    "neuralts_select",
    "OraclePolicy",
    "RandomPolicy",
]
