import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from qmauth import Mode, SchemeParams, keygen, sender_key

TOY = SchemeParams(4, 2, 4)                      # n=16, n1=8, k=4
DEMO = SchemeParams(5, 3, 8, Mode.HYBRID_AUTH)   # n=32, n1=17, k=8


@pytest.fixture(scope="session")
def toy_keys():
    pub, priv = keygen(TOY, random.Random(1001))
    return pub, priv


@pytest.fixture(scope="session")
def toy_sender(toy_keys):
    pub, _ = toy_keys
    return sender_key(pub)


@pytest.fixture(scope="session")
def demo_keys():
    pub, priv = keygen(DEMO, random.Random(2002))
    return pub, priv


@pytest.fixture(scope="session")
def demo_sender(demo_keys):
    pub, priv = demo_keys
    return sender_key(pub, priv.precode)
