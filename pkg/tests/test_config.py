import pytest
from pydantic import ValidationError

from banditlab.lab import (
    parse_algorithm,
    parse_environment,
    parse_seeds
)
from banditlab.models.enums import (
    AlgorithmType,
    EnvKind,
    LabelVariant,
    NoiseType
)
from banditlab.models.environment import EnvSpec
from banditlab.models.policy import (
    EENetPolicyConfig,
    LinUCBPolicyConfig
)
from banditlab.models.run import RunConfig
from banditlab.utils.config_file import (
    parse_assignment,
    read_run_config_file
)

class TestPolicyConfig:
    def test_coerce(self):
        assert EENetPolicyConfig.coerce("width1", "64") == 64
        assert EENetPolicyConfig.coerce("lr1", "1e-3") == 0.001
        assert EENetPolicyConfig.coerce("variant", "relu") == LabelVariant.RELU

    def test_invalid_values(self):
        with pytest.raises(ValueError, match="Supported"):
            EENetPolicyConfig.coerce("variant", "square")
        with pytest.raises(ValueError):
            EENetPolicyConfig.coerce("width1", "2.5")
        with pytest.raises(ValueError, match="Unknown hyperparameter"):
            LinUCBPolicyConfig.coerce("nu", "0.1")

    def test_with_parameters(self):
        config = LinUCBPolicyConfig().with_parameters({"alpha": "0.5"})
        assert config.alpha == 0.5
        assert config.lam == LinUCBPolicyConfig().lam

class TestRunConfig:
    def test_defaults(self):
        run_config = RunConfig(algorithm=AlgorithmType.EENET)
        assert run_config.horizon == 5000
        assert run_config.seeds == list(range(10))
        assert run_config.algorithm_id == "eenet"

    @pytest.mark.parametrize("kwargs", [
        {"horizon": 0},
        {"seeds": []},
        {"seeds": [1, 1]},
        {"seeds": [-1]},
        {"hyperparameters": {"epsilon": 0.1}},
        {"hyperparameters": {"variant": "square"}},
    ])
    def test_rejected(self, kwargs):
        with pytest.raises(ValidationError):
            RunConfig(algorithm=AlgorithmType.EENET, **kwargs)

    def test_update_revalidates(self):
        run_config = RunConfig(algorithm=AlgorithmType.LINUCB)
        assert run_config.update(horizon=10).horizon == 10
        with pytest.raises(ValidationError):
            run_config.update(hyperparameters={"width": 3})

class TestParsing:
    def test_algorithms(self):
        assert parse_algorithm("linucb") == (AlgorithmType.LINUCB, {}, None)
        assert parse_algorithm("eenet-absolute") == (AlgorithmType.EENET, {"variant": "absolute"}, "eenet-absolute")
        with pytest.raises(ValueError, match="Supported"):
            parse_algorithm("ucb1")

    def test_environments(self):
        assert parse_environment("synthetic-cosine") == {"kind": EnvKind.COSINE}
        assert parse_environment("csv:data/mnist.csv") == {"kind": EnvKind.CLASSIFICATION,
                                                           "dataset_path": "data/mnist.csv"}
        assert parse_environment("pool:x.csv")["kind"] == EnvKind.POOL
        for token in ("classification", "synthetic-cubic", "tsv:x.csv", "csv:"):
            with pytest.raises(ValueError):
                parse_environment(token)

    def test_seeds(self):
        assert parse_seeds("0, 1,2") == [0, 1, 2]
        with pytest.raises(ValueError):
            parse_seeds("0,a")

    def test_assignment(self):
        assert parse_assignment(" lr1 = 0.01 ") == ("lr1", "0.01")
        with pytest.raises(ValueError):
            parse_assignment("lr1")

class TestRunConfigFile:
    def test_flat_file(self, tmp_path):
        path = tmp_path / "run.cfg"
        path.write_text("# comment\nalgo = eenet\nlr1 = 0.01  # inline\nNoise = none\n", encoding="utf-8")
        assert read_run_config_file(path) == {"algo": "eenet", "lr1": "0.01", "Noise": "none"}

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            read_run_config_file(tmp_path / "absent.cfg")

    def test_sections_are_rejected(self, tmp_path):
        path = tmp_path / "run.cfg"
        path.write_text("algo = eenet\n[other]\nx = 1\n", encoding="utf-8")
        with pytest.raises(ValueError):
            read_run_config_file(path)

class TestMakeRunConfig:
    def test_defaults_from_config_ini(self, lab):
        run_config = lab.make_run_config("eenet")
        assert run_config.env.kind == EnvKind.QUADRATIC
        assert run_config.env.dim == 10 and run_config.env.n_arms == 10
        assert run_config.horizon == 5000
        assert run_config.seeds == list(range(10))

    def test_dataset_kinds_use_bernoulli_noise(self, lab, ten_class_csv):
        run_config = lab.make_run_config("random", env=f"csv:{ten_class_csv}", rounds=5, seeds="0")
        assert run_config.env.noise == NoiseType.BERNOULLI

    def test_variant_label_wins(self, lab):
        run_config = lab.make_run_config("eenet-relu", hyperparameters={"variant": "absolute"})
        assert run_config.hyperparameters["variant"] == "relu"
        assert run_config.algorithm_id == "eenet-relu"

    def test_environment_settings(self, lab):
        run_config = lab.make_run_config("linucb", env_settings={"dim": "4", "arms": "3", "noise": "none"})
        assert (run_config.env.dim, run_config.env.n_arms, run_config.env.noise) == (4, 3, NoiseType.NONE)
        with pytest.raises(ValueError):
            lab.make_run_config("linucb", env_settings={"colour": "red"})

    def test_hyperparameters_are_routed(self, lab):
        run_configs = lab.make_run_configs(["linucb", "neuralucb"], hyperparameters={"nu": "0.5", "alpha": "0.2"})
        assert run_configs[0].hyperparameters == {"alpha": "0.2"}
        assert run_configs[1].hyperparameters == {"nu": "0.5"}
        with pytest.raises(ValueError):
            lab.make_run_configs(["linucb"], hyperparameters={"epsilon": "0.1"})

    def test_default_grids(self, lab):
        assert lab.grid_values("nu")
        with pytest.raises(ValueError):
            lab.grid_values("width1")
