from .mlp import (
    MlpConfig,
    Mlp,
    ParamVector,
    init_mlp,
    forward,
    forward_batch,
    grad_params,
    grad_params_batch,
    sgd_step,
    squared_loss_grad
)

__all__ = [
    "MlpConfig",
    "Mlp",
    "ParamVector",
    "init_mlp",
    "forward",
    "forward_batch",
    "grad_params",
    "grad_params_batch",
    "sgd_step",
    "squared_loss_grad",
]
