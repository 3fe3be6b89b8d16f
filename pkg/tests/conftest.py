import numpy as np
import pytest

from wordsig import TokenizedCorpus, TrainConfig, train


@pytest.fixture(scope="session", autouse=True)
def warm_kernel():
    """Trigger JIT compilation once so timed tests measure steady state."""
    corpus = TokenizedCorpus([["a", "b", "c", "d"] * 5] * 4)
    train(corpus, TrainConfig(dim=4, window=2, negative=2, sample=1.0, epochs=1, seed=0))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
