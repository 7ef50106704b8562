import numpy as np
import pytest

from banditlab.nn.mlp import (
    Mlp,
    MlpConfig,
    init_mlp,
    forward,
    forward_batch,
    grad_params,
    grad_params_batch,
    sgd_step,
    squared_loss_grad
)

from conftest import unit_rows

def hand_net() -> Mlp:
    """ W1 = I (2x2), W2 = [[1, -1]] """
    return Mlp(layers=[np.eye(2), np.array([[1.0, -1.0]])], config=MlpConfig(input_dim=2, width=2, depth=2))

def reference_forward(net: Mlp, x: np.ndarray) -> float:
    h = x
    for W in net.layers[:-1]:
        h = np.array([max(0.0, float(v)) for v in W @ h])
    return float(net.layers[-1][0] @ h)

def pre_activations(net: Mlp, x: np.ndarray) -> np.ndarray:
    values, h = [], x
    for W in net.layers[:-1]:
        z = W @ h
        values.append(z)
        h = np.maximum(z, 0.0)
    return np.concatenate(values)

class TestInitMlp:
    def test_shapes_and_param_count(self):
        net = init_mlp(MlpConfig(input_dim=4, width=3, depth=2))
        assert [W.shape for W in net.layers] == [(3, 4), (1, 3)]
        assert net.param_count == 15 == net.config.param_count

    def test_deep_param_count(self):
        config = MlpConfig(input_dim=5, width=4, depth=4)
        assert config.param_count == 4 * 5 + 2 * 16 + 4
        assert init_mlp(config).flat().shape == (config.param_count,)

    def test_same_seed_is_bit_identical(self):
        a = init_mlp(MlpConfig(input_dim=6, width=8, depth=3, seed=11))
        b = init_mlp(MlpConfig(input_dim=6, width=8, depth=3, seed=11))
        assert np.array_equal(a.flat(), b.flat())
        c = init_mlp(MlpConfig(input_dim=6, width=8, depth=3, seed=12))
        assert not np.array_equal(a.flat(), c.flat())

    def test_entry_variances(self):
        m = 256
        hidden, last = [], []
        for seed in range(16):
            net = init_mlp(MlpConfig(input_dim=8, width=m, depth=2, seed=seed))
            hidden.append(net.layers[0].ravel())
            last.append(net.layers[-1].ravel())
        assert 1.8 / m <= np.var(np.concatenate(hidden)) <= 2.2 / m
        assert 0.9 / m <= np.var(np.concatenate(last)) <= 1.1 / m

    @pytest.mark.parametrize("kwargs", [
        {"input_dim": 0},
        {"input_dim": 3, "width": 0},
        {"input_dim": 3, "depth": 1},
        {"input_dim": 3, "seed": -1},
    ])
    def test_invalid_config(self, kwargs):
        with pytest.raises(ValueError):
            MlpConfig(**kwargs)

class TestForward:
    def test_zero_input_gives_zero(self):
        net = init_mlp(MlpConfig(input_dim=5, width=16, depth=3, seed=1))
        assert forward(net, np.zeros(5)) == 0.0

    def test_hand_example(self):
        assert forward(hand_net(), np.array([1.0, -1.0])) == 1.0

    def test_matches_reference(self, rng):
        net = init_mlp(MlpConfig(input_dim=7, width=12, depth=3, seed=2))
        for x in unit_rows(rng, 20, 7):
            assert forward(net, x) == pytest.approx(reference_forward(net, x), abs=1e-12)

    def test_batch_matches_rows(self, rng):
        net = init_mlp(MlpConfig(input_dim=7, width=12, depth=2, seed=3))
        X = unit_rows(rng, 10, 7)
        np.testing.assert_allclose(forward_batch(net, X), [forward(net, x) for x in X], atol=1e-12)

    def test_positive_homogeneity(self, rng):
        net = init_mlp(MlpConfig(input_dim=4, width=10, depth=3, seed=4))
        x = unit_rows(rng, 1, 4)[0]
        assert forward(net, 3.0 * x) == pytest.approx(3.0 * forward(net, x), rel=1e-12)

    def test_doubling_last_layer_doubles_output(self, rng):
        net = init_mlp(MlpConfig(input_dim=4, width=10, depth=2, seed=5))
        x = unit_rows(rng, 1, 4)[0]
        before = forward(net, x)
        net.layers[-1] *= 2.0
        assert forward(net, x) == pytest.approx(2.0 * before, rel=1e-12)

    def test_wrong_dimension(self):
        net = init_mlp(MlpConfig(input_dim=4))
        with pytest.raises(ValueError):
            forward(net, np.zeros(3))

class TestGradParams:
    def test_zero_input_gives_zero_gradient(self):
        net = init_mlp(MlpConfig(input_dim=3, width=8, depth=2, seed=1))
        assert not np.any(grad_params(net, np.zeros(3)))

    def test_hand_example(self):
        gradient = grad_params(hand_net(), np.array([1.0, -1.0]))
        np.testing.assert_array_equal(gradient, [1.0, -1.0, 0.0, 0.0, 1.0, 0.0])

    def test_batch_matches_rows(self, rng):
        net = init_mlp(MlpConfig(input_dim=5, width=9, depth=3, seed=6))
        X = unit_rows(rng, 6, 5)
        expected = np.stack([grad_params(net, x) for x in X])
        np.testing.assert_allclose(grad_params_batch(net, X), expected, atol=1e-12)

    def test_finite_differences(self):
        rng = np.random.default_rng(2024)
        step = 1e-5
        checked = 0
        while checked < 100:
            d = int(rng.integers(1, 17))
            m = int(rng.integers(1, 65))
            depth = int(rng.choice([2, 3]))
            net = init_mlp(MlpConfig(input_dim=d, width=m, depth=depth, seed=int(rng.integers(2 ** 32))))
            x = unit_rows(rng, 1, d)[0]
            # Stay clear of ReLU kinks
            if np.min(np.abs(pre_activations(net, x))) < 1e-3:
                continue
            gradient = grad_params(net, x)
            theta = net.flat()
            for j in rng.choice(theta.size, size=min(20, theta.size), replace=False):
                plus, minus = net.copy(), net.copy()
                unit = np.zeros(theta.size)
                unit[j] = step
                sgd_step(plus, -unit, 1.0)
                sgd_step(minus, unit, 1.0)
                numeric = (forward(plus, x) - forward(minus, x)) / (2 * step)
                np.testing.assert_allclose(numeric, gradient[j], rtol=1e-4, atol=1e-8)
            checked += 1

class TestSgdStep:
    def test_single_parameter_example(self):
        net = Mlp(layers=[np.array([[1.0]]), np.array([[1.0]])], config=MlpConfig(input_dim=1, width=1, depth=2))
        sgd_step(net, np.array([2.0, 0.0]), 0.1)
        assert net.layers[0][0, 0] == pytest.approx(0.8)
        assert net.layers[1][0, 0] == 1.0

    def test_zero_gradient_or_rate_leaves_parameters(self):
        net = init_mlp(MlpConfig(input_dim=3, width=5, seed=1))
        before = net.flat()
        sgd_step(net, np.zeros(net.param_count), 0.5)
        sgd_step(net, np.ones(net.param_count), 0.0)
        assert np.array_equal(net.flat(), before)

    def test_updates_in_place(self):
        net = init_mlp(MlpConfig(input_dim=3, width=5, seed=1))
        assert sgd_step(net, np.ones(net.param_count), 0.1) is net

    def test_rejects_bad_gradients(self):
        net = init_mlp(MlpConfig(input_dim=3, width=5, seed=1))
        with pytest.raises(ValueError):
            sgd_step(net, np.ones(net.param_count - 1), 0.1)
        bad = np.ones(net.param_count)
        bad[0] = np.nan
        with pytest.raises(ValueError):
            sgd_step(net, bad, 0.1)
        with pytest.raises(ValueError):
            sgd_step(net, np.ones(net.param_count), -0.1)

    def test_overflowing_step_leaves_net_unchanged(self):
        net = Mlp(layers=[np.array([[1.0]]), np.array([[1e308]])], config=MlpConfig(input_dim=1, width=1, depth=2))
        with np.errstate(over="ignore"):
            with pytest.raises(ValueError, match="non-finite"):
                sgd_step(net, np.array([0.5, -1e308]), 10.0)
        assert net.layers[0][0, 0] == 1.0
        assert net.layers[1][0, 0] == 1e308
        assert all(np.all(np.isfinite(W)) for W in net.layers)

class TestSquaredLossGrad:
    @pytest.mark.parametrize("pred, target, expected", [
        (0.8, 0.3, 0.5),
        (0.3, 0.8, -0.5),
        (0.5, 0.5, 0.0),
    ])
    def test_examples(self, pred, target, expected):
        assert squared_loss_grad(pred, target) == pytest.approx(expected)

    def test_one_step_reduces_loss(self, rng):
        net = init_mlp(MlpConfig(input_dim=4, width=32, seed=9))
        x = unit_rows(rng, 1, 4)[0]
        target = forward(net, x) + 0.5
        loss_before = 0.5 * (forward(net, x) - target) ** 2
        sgd_step(net, squared_loss_grad(forward(net, x), target) * grad_params(net, x), 1e-3)
        assert 0.5 * (forward(net, x) - target) ** 2 < loss_before
