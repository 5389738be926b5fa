"""Tamper-injection sweeps: per-weight outcome counts, CSV, and figures.

A sweep runs the quantum round trip under constant-XOR attacks of each
weight and tallies the five possible outcomes.  Random mode draws a fresh
message, sender error, and attack per trial; exhaustive mode fixes the
message and error and enumerates every attack vector of the weight.
"""

from __future__ import annotations

import csv
import io
import math
import random
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Iterator

from .errors import ParamError
from .gf2 import BitVector
from .keys import ErrorWeightPolicy, PrivateKey, SenderKey
from .qsim import QuantumMessage
from .quantum import q_roundtrip

CSV_HEADER = (
    "weight",
    "trials",
    "accept_unchanged",
    "accept_forged",
    "reject_decode_fail",
    "reject_auth_fail",
    "reject_residue",
)

_OUTCOME_FIELDS = CSV_HEADER[2:]


@dataclass
class ExperimentRecord:
    attack_weight: int
    trials: int = 0
    accept_unchanged: int = 0
    accept_forged: int = 0
    reject_decode_fail: int = 0
    reject_auth_fail: int = 0
    reject_residue: int = 0

    def row(self) -> tuple[int, ...]:
        return (
            self.attack_weight,
            self.trials,
            self.accept_unchanged,
            self.accept_forged,
            self.reject_decode_fail,
            self.reject_auth_fail,
            self.reject_residue,
        )

    def tally(self, verdict, original: QuantumMessage) -> None:
        self.trials += 1
        if verdict.accepted:
            if verdict.message == original:
                self.accept_unchanged += 1
            else:
                self.accept_forged += 1
        elif verdict.reason.value == "decode-failure":
            self.reject_decode_fail += 1
        elif verdict.reason.value == "auth-check-failed":
            self.reject_auth_fail += 1
        else:
            self.reject_residue += 1


def random_probe_message(k: int, rng: random.Random) -> QuantumMessage:
    """Two-branch superposition with unequal weights.

    Unequal amplitudes make any constant XOR shift of the basis keys
    distinguishable from the original, so forged accepts are countable
    by comparing extracted amplitudes with the input.
    """
    a = rng.randrange(1 << k)
    b = a
    while b == a:
        b = rng.randrange(1 << k)
    return QuantumMessage(k, {a: complex(math.sqrt(1 / 3)), b: complex(math.sqrt(2 / 3))})


def vectors_of_weight(n: int, w: int) -> Iterator[BitVector]:
    for positions in combinations(range(n), w):
        yield BitVector.from_positions(positions, n)


def random_vector_of_weight(n: int, w: int, rng: random.Random) -> BitVector:
    bits = 0
    count = 0
    while count < w:
        p = rng.randrange(n)
        if not bits >> p & 1:
            bits |= 1 << p
            count += 1
    return BitVector(bits, n)


def sweep_random(
    sk: SenderKey,
    priv: PrivateKey,
    weights: range,
    trials: int,
    rng: random.Random,
    policy: ErrorWeightPolicy = ErrorWeightPolicy.EXACTLY_T,
) -> list[ExperimentRecord]:
    n = priv.params.n
    records = []
    for w in weights:
        rec = ExperimentRecord(w)
        for _ in range(trials):
            msg = random_probe_message(priv.params.k, rng)
            d = random_vector_of_weight(n, w, rng)
            rec.tally(q_roundtrip(msg, sk, priv, d, rng, policy), msg)
        records.append(rec)
    return records


def sweep_exhaustive(
    sk: SenderKey,
    priv: PrivateKey,
    weights: range,
    msg: QuantumMessage,
    error: BitVector,
    rng: random.Random,
) -> list[ExperimentRecord]:
    """Fixed message and sender error, every attack vector of each weight."""
    n = priv.params.n
    records = []
    for w in weights:
        rec = ExperimentRecord(w)
        for d in vectors_of_weight(n, w):
            rec.tally(q_roundtrip(msg, sk, priv, d, rng, error=error), msg)
        records.append(rec)
    return records


def records_to_csv(records: list[ExperimentRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for rec in records:
        writer.writerow(rec.row())
    return buf.getvalue()


def render_figure(records: list[ExperimentRecord], path: str | Path) -> None:
    """Stacked outcome fractions per attack weight, written to an image file."""
    if not records:
        raise ParamError("nothing to plot")
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    weights = [rec.attack_weight for rec in records]
    fractions = {
        name: [getattr(rec, name) / rec.trials if rec.trials else 0.0 for rec in records]
        for name in _OUTCOME_FIELDS
    }
    labels = {
        "accept_unchanged": "accepted (unchanged)",
        "accept_forged": "accepted (forged)",
        "reject_decode_fail": "rejected (decode failure)",
        "reject_auth_fail": "rejected (auth check)",
        "reject_residue": "rejected (residue)",
    }
    colors = {
        "accept_unchanged": "#4c72b0",
        "accept_forged": "#dd8452",
        "reject_decode_fail": "#c44e52",
        "reject_auth_fail": "#55a868",
        "reject_residue": "#8172b3",
    }

    fig, ax = plt.subplots(figsize=(8, 5))
    bottom = [0.0] * len(records)
    for name in _OUTCOME_FIELDS:
        ax.bar(weights, fractions[name], bottom=bottom,
               label=labels[name], color=colors[name], width=0.8)
        bottom = [b + f for b, f in zip(bottom, fractions[name])]
    ax.set_xlabel("attack weight (bits flipped on the channel)")
    ax.set_ylabel("fraction of trials")
    ax.set_title("Tamper detection by attack weight")
    ax.set_xticks(weights)
    ax.set_ylim(0, 1.02)
    ax.legend(loc="center left", bbox_to_anchor=(1.0, 0.5), frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
