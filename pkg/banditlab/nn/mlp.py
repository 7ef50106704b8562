"""
Dense fully-connected ReLU network without bias terms.
- exact backpropagation of the scalar output w.r.t. every weight
- single-sample SGD with warm start (parameters are updated in place)

Parameters are flattened layer-major and row-major per matrix. This ordering
is fixed, so ParamVector indices are stable identifiers.
"""
from dataclasses import dataclass
from typing import (
    List,
    Tuple
)

import logging
logger = logging.getLogger(__name__)

import numpy as np

# Flat real vector of length p, ordered like Mlp.layers
ParamVector = np.ndarray

@dataclass(frozen=True)
class MlpConfig:
    input_dim: int              # d
    width: int = 100            # m
    depth: int = 2              # L, number of weight matrices
    seed: int = 0

    def __post_init__(self):
        if self.input_dim < 1:
            raise ValueError(f"input_dim must be >= 1, got {self.input_dim}")
        if self.width < 1:
            raise ValueError(f"width must be >= 1, got {self.width}")
        if self.depth < 2:
            raise ValueError(f"depth must be >= 2, got {self.depth}")
        if self.seed < 0:
            raise ValueError(f"seed must be a non-negative integer, got {self.seed}")

    @property
    def layer_shapes(self) -> List[Tuple[int, int]]:
        shapes = [(self.width, self.input_dim)]
        shapes += [(self.width, self.width)] * (self.depth - 2)
        shapes.append((1, self.width))
        return shapes

    @property
    def param_count(self) -> int:
        """ p = m*d + (L-2)*m^2 + m """
        return self.width * self.input_dim + (self.depth - 2) * self.width ** 2 + self.width

@dataclass
class Mlp:
    layers: List[np.ndarray]
    config: MlpConfig

    @property
    def param_count(self) -> int:
        return sum(W.size for W in self.layers)

    def flat(self) -> ParamVector:
        """ Returns a copy of all parameters as one ParamVector """
        return np.concatenate([W.ravel() for W in self.layers])

    def copy(self) -> "Mlp":
        return Mlp(layers=[W.copy() for W in self.layers], config=self.config)

def init_mlp(config: MlpConfig) -> Mlp:
    """
    Draws the initial weights.

    Parameters:
    - config (MlpConfig): the architecture and seed of the network

    Returns:
    A network whose hidden layers are drawn from N(0, 2/m) and whose output
    layer is drawn from N(0, 1/m).
    """
    rng = np.random.default_rng(config.seed)
    m = config.width
    layers = []
    for idx, shape in enumerate(config.layer_shapes):
        std = np.sqrt(2.0 / m) if idx < config.depth - 1 else np.sqrt(1.0 / m)
        layers.append(rng.normal(0.0, std, size=shape))
    logger.debug(f"Initialized network d={config.input_dim} m={m} L={config.depth} p={config.param_count}")
    return Mlp(layers=layers, config=config)

def _check_input(net: Mlp, x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64)
    if x.ndim != 1 or x.shape[0] != net.config.input_dim:
        raise ValueError(
            f"Input of shape {x.shape} does not match the network input dimension {net.config.input_dim}"
        )
    return x

def _check_batch(net: Mlp, X: np.ndarray) -> np.ndarray:
    X = np.asarray(X, dtype=np.float64)
    if X.ndim != 2 or X.shape[1] != net.config.input_dim:
        raise ValueError(
            f"Batch of shape {X.shape} does not match the network input dimension {net.config.input_dim}"
        )
    return X

def forward(net: Mlp, x: np.ndarray) -> float:
    """ f(x) = W_L relu(W_{L-1} ... relu(W_1 x)) """
    h = _check_input(net, x)
    for W in net.layers[:-1]:
        h = np.maximum(W @ h, 0.0)
    return float((net.layers[-1] @ h)[0])

def forward_batch(net: Mlp, X: np.ndarray) -> np.ndarray:
    """ Row-wise forward pass over an (n, d) matrix, returns n outputs """
    H = _check_batch(net, X)
    for W in net.layers[:-1]:
        H = np.maximum(H @ W.T, 0.0)
    return H @ net.layers[-1][0]

def grad_params(net: Mlp, x: np.ndarray) -> ParamVector:
    """
    Gradient of the scalar output w.r.t. all weights.
    The ReLU derivative is 0 where the pre-activation is exactly 0.

    Parameters:
    - net (Mlp): the network at its current parameters
    - x (np.ndarray): input of length d

    Returns:
    The ParamVector df/dtheta.
    """
    x = _check_input(net, x)
    activations = [x]
    pre_activations = []
    for W in net.layers[:-1]:
        z = W @ activations[-1]
        pre_activations.append(z)
        activations.append(np.maximum(z, 0.0))

    grads: List[np.ndarray] = [None] * len(net.layers)
    # Last layer gradient is the last hidden activation
    grads[-1] = activations[-1][np.newaxis, :].copy()
    delta = net.layers[-1][0] * (pre_activations[-1] > 0)
    for idx in range(len(net.layers) - 2, -1, -1):
        grads[idx] = np.outer(delta, activations[idx])
        if idx > 0:
            delta = (net.layers[idx].T @ delta) * (pre_activations[idx - 1] > 0)

    return np.concatenate([g.ravel() for g in grads])

def grad_params_batch(net: Mlp, X: np.ndarray) -> np.ndarray:
    """ Row i of the (n, p) result is grad_params(net, X[i]) """
    X = _check_batch(net, X)
    n = X.shape[0]
    activations = [X]
    pre_activations = []
    for W in net.layers[:-1]:
        Z = activations[-1] @ W.T
        pre_activations.append(Z)
        activations.append(np.maximum(Z, 0.0))

    grads: List[np.ndarray] = [None] * len(net.layers)
    grads[-1] = activations[-1].copy()
    delta = net.layers[-1][0] * (pre_activations[-1] > 0)
    for idx in range(len(net.layers) - 2, -1, -1):
        grads[idx] = (delta[:, :, np.newaxis] * activations[idx][:, np.newaxis, :]).reshape(n, -1)
        if idx > 0:
            delta = (delta @ net.layers[idx]) * (pre_activations[idx - 1] > 0)

    return np.concatenate(grads, axis=1)

def sgd_step(net: Mlp, loss_grad: ParamVector, lr: float) -> Mlp:
    """
    theta <- theta - lr * loss_grad, in place (warm start).

    Parameters:
    - net (Mlp): the network to update
    - loss_grad (ParamVector): gradient of the loss w.r.t. the parameters
    - lr (float): learning rate

    Returns:
    The same (mutated) network.
    """
    loss_grad = np.asarray(loss_grad, dtype=np.float64)
    if loss_grad.shape != (net.param_count,):
        raise ValueError(f"Gradient of shape {loss_grad.shape} does not match the parameter count {net.param_count}")
    if not np.all(np.isfinite(loss_grad)):
        raise ValueError("Gradient contains non-finite entries")
    if lr < 0 or not np.isfinite(lr):
        raise ValueError(f"Learning rate must be a finite non-negative number, got {lr}")

    # All layers are checked before any is written, so a failing step leaves the net unchanged
    updated = []
    offset = 0
    for W in net.layers:
        size = W.size
        updated.append(W - lr * loss_grad[offset:offset + size].reshape(W.shape))
        offset += size
    if not all(np.all(np.isfinite(W)) for W in updated):
        raise ValueError("SGD step produced non-finite parameters")
    for W, new in zip(net.layers, updated):
        W[...] = new
    return net

def squared_loss_grad(pred: float, target: float) -> float:
    """ Derivative of 1/2 (pred - target)^2 w.r.t. pred """
    return pred - target
