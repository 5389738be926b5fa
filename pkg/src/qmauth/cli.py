"""Command-line driver.

Subcommands cover key generation, the classical and quantum pipelines
(with state files as the interchange between separate encode and decode
invocations), and tamper sweeps that emit CSV plus a rendered figure.

Exit codes: 0 success or Accept, 2 protocol Reject, 1 usage/IO error.
``QMA_SEED`` serves as a fallback when ``--seed`` is absent.
"""

from __future__ import annotations

import argparse
import os
import random
import sys
from pathlib import Path

from . import sweep as sweep_mod
from .classical import c_decode, c_encode
from .errors import FormatError, QmauthError
from .gf2 import BitVector
from .keys import (
    ErrorWeightPolicy,
    Mode,
    SchemeParams,
    keygen,
    load_private_key,
    load_public_key,
    load_shared_key,
    save_private_key,
    save_public_key,
    save_shared_key,
    sender_key,
)
from .qsim import QState, QuantumMessage
from .quantum import TransmittedState, channel_tamper, q_decode, q_encode


class _Parser(argparse.ArgumentParser):
    # Usage errors exit with 1; argparse's default of 2 is reserved for
    # protocol rejections.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _resolve_rng(seed: int | None) -> random.Random:
    if seed is None:
        env = os.environ.get("QMA_SEED")
        if env is not None:
            seed = int(env)
    return random.Random(seed)


def _parse_message_spec(spec: str, k: int) -> QuantumMessage:
    """Parse ``hex=amplitude`` pairs, e.g. ``0=0.7071,3=0.5+0.5j``."""
    amps: dict[int, complex] = {}
    for part in spec.split(","):
        basis_text, sep, amp_text = part.partition("=")
        if not sep:
            raise FormatError(f"bad message entry {part!r}, expected <hex>=<amplitude>")
        try:
            basis = int(basis_text, 16)
            amp = complex(amp_text)
        except ValueError as exc:
            raise FormatError(f"bad message entry {part!r}") from exc
        if basis in amps:
            raise FormatError(f"duplicate basis value {basis_text!r}")
        amps[basis] = amp
    return QuantumMessage(k, amps)


def _format_amplitudes(msg: QuantumMessage) -> list[str]:
    digits = (msg.k + 3) // 4
    return [
        f"{basis:0{digits}x} {msg.amplitudes[basis].real!r} {msg.amplitudes[basis].imag!r}"
        for basis in sorted(msg.amplitudes)
    ]


def _load_sender(args):
    pk = load_public_key(args.pub)
    shared = None
    if args.shared is not None:
        shared, shared_params = load_shared_key(args.shared)
        if shared_params != pk.params:
            raise FormatError("shared key parameters do not match the public key")
    return pk, sender_key(pk, shared)


def _quantum_message(args, k: int) -> QuantumMessage:
    if args.uniform:
        return QuantumMessage.uniform(k)
    return _parse_message_spec(args.message, k)


# --- subcommands ------------------------------------------------------------


def cmd_keygen(args) -> int:
    params = SchemeParams(args.m, args.t, args.k, Mode(args.mode))
    rng = _resolve_rng(args.seed)
    pub, priv = keygen(params, rng)
    prefix = Path(args.out_prefix)
    prefix.parent.mkdir(parents=True, exist_ok=True)
    pub_path = prefix.with_name(prefix.name + ".pub")
    priv_path = prefix.with_name(prefix.name + ".priv")
    save_public_key(pub, pub_path)
    save_private_key(priv, priv_path)
    written = [pub_path, priv_path]
    if params.mode is Mode.HYBRID_AUTH:
        shared_path = prefix.with_name(prefix.name + ".shared")
        save_shared_key(priv.precode, params, shared_path)
        written.append(shared_path)
    for path in written:
        print(path)
    return 0


def cmd_cencode(args) -> int:
    _, sk = _load_sender(args)
    rng = _resolve_rng(args.seed)
    s = BitVector.from_hex(args.message, sk.params.k)
    word, _ = c_encode(s, sk, rng, ErrorWeightPolicy(args.policy))
    print(word.to_hex())
    return 0


def cmd_cdecode(args) -> int:
    priv = load_private_key(args.priv)
    ct = BitVector.from_hex(args.ciphertext, priv.params.n)
    verdict = c_decode(ct, priv)
    if verdict.accepted:
        print(f"ACCEPT {verdict.message.to_hex()}")
        return 0
    print(f"REJECT {verdict.reason.value}")
    return 2


def cmd_qencode(args) -> int:
    _, sk = _load_sender(args)
    rng = _resolve_rng(args.seed)
    msg = _quantum_message(args, sk.params.k)
    ts = q_encode(msg, sk, rng, ErrorWeightPolicy(args.policy))
    ts.state.save(args.out)
    print(args.out)
    return 0


def cmd_tamper(args) -> int:
    st = QState.load(args.infile)
    d = BitVector.from_hex(args.d, st.layout.width("II"))
    ts = TransmittedState(st)
    channel_tamper(ts, d)
    ts.state.save(args.out)
    print(args.out)
    return 0


def cmd_qdecode(args) -> int:
    priv = load_private_key(args.priv)
    rng = _resolve_rng(args.seed)
    ts = TransmittedState(QState.load(args.infile))
    verdict = q_decode(ts, priv, rng)
    if verdict.accepted:
        print("ACCEPT")
        for line in _format_amplitudes(verdict.message):
            print(line)
        return 0
    print(f"REJECT {verdict.reason.value}")
    return 2


def cmd_qroundtrip(args) -> int:
    pk, sk = _load_sender(args)
    priv = load_private_key(args.priv)
    if priv.params != pk.params:
        raise FormatError("private key parameters do not match the public key")
    rng = _resolve_rng(args.seed)
    msg = _quantum_message(args, sk.params.k)

    ts = q_encode(msg, sk, rng, ErrorWeightPolicy(args.policy))
    if args.emit_states:
        ts.state.save(f"{args.emit_states}-encoded.qst")
    if args.tamper is not None:
        channel_tamper(ts, BitVector.from_hex(args.tamper, sk.params.n))
    if args.emit_states:
        ts.state.save(f"{args.emit_states}-received.qst")

    verdict = q_decode(ts, priv, rng)
    if verdict.accepted:
        print("ACCEPT")
        for line in _format_amplitudes(verdict.message):
            print(line)
        return 0
    print(f"REJECT {verdict.reason.value}")
    return 2


def cmd_attack_sweep(args) -> int:
    pk, sk = _load_sender(args)
    priv = load_private_key(args.priv)
    if priv.params != pk.params:
        raise FormatError("private key parameters do not match the public key")
    if args.wmin < 0 or args.wmax < args.wmin or args.wmax > priv.params.n:
        raise FormatError(f"bad weight range {args.wmin}..{args.wmax}")
    if not args.exhaustive and args.trials is None:
        raise FormatError("either --trials or --exhaustive is required")
    rng = _resolve_rng(args.seed)
    weights = range(args.wmin, args.wmax + 1)

    if args.exhaustive:
        msg = sweep_mod.random_probe_message(priv.params.k, rng)
        error = sweep_mod.random_vector_of_weight(priv.params.n, priv.params.t, rng)
        records = sweep_mod.sweep_exhaustive(sk, priv, weights, msg, error, rng)
    else:
        records = sweep_mod.sweep_random(
            sk, priv, weights, args.trials, rng, ErrorWeightPolicy(args.policy))

    text = sweep_mod.records_to_csv(records)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)

    figure = args.figure
    if figure is None and args.out and not args.no_figure:
        figure = str(Path(args.out).with_suffix(".png"))
    if figure and not args.no_figure:
        sweep_mod.render_figure(records, figure)
        print(figure, file=sys.stderr)
    return 0


# --- parser -----------------------------------------------------------------


def _add_seed(p) -> None:
    p.add_argument("--seed", type=int, default=None, help="rng seed (fallback: QMA_SEED)")


def _add_policy(p) -> None:
    p.add_argument("--policy", choices=[pol.value for pol in ErrorWeightPolicy],
                   default=ErrorWeightPolicy.EXACTLY_T.value,
                   help="sender error weight policy")


def _add_sender_keys(p) -> None:
    p.add_argument("--pub", required=True, help="public key file")
    p.add_argument("--shared", default=None, help="shared pre-code file (hybrid mode)")


def _add_message(p) -> None:
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--message", help="amplitudes as <hex>=<amp>,... e.g. 0=0.7071,3=0.7071")
    grp.add_argument("--uniform", action="store_true", help="uniform superposition over all 2^k basis states")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qmauth", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("keygen", help="generate a key pair (and shared pre-code in hybrid mode)")
    p.add_argument("--m", type=int, required=True, help="field extension degree (n = 2^m)")
    p.add_argument("--t", type=int, required=True, help="error capacity of the Goppa code")
    p.add_argument("--k", type=int, required=True, help="message length")
    p.add_argument("--mode", choices=[m.value for m in Mode], required=True)
    p.add_argument("--out-prefix", required=True, help="write <prefix>.pub/.priv[/.shared]")
    _add_seed(p)
    p.set_defaults(func=cmd_keygen)

    p = sub.add_parser("cencode", help="classically encode a message")
    _add_sender_keys(p)
    p.add_argument("--message", required=True, help="message bits as hex (LSB-first bytes)")
    _add_policy(p)
    _add_seed(p)
    p.set_defaults(func=cmd_cencode)

    p = sub.add_parser("cdecode", help="classically decode and authenticate a word")
    p.add_argument("--priv", required=True, help="private key file")
    p.add_argument("--ciphertext", required=True, help="received word as hex")
    p.set_defaults(func=cmd_cdecode)

    p = sub.add_parser("qencode", help="encode a quantum message into a state file")
    _add_sender_keys(p)
    _add_message(p)
    _add_policy(p)
    _add_seed(p)
    p.add_argument("--out", required=True, help="state file to write")
    p.set_defaults(func=cmd_qencode)

    p = sub.add_parser("tamper", help="flip payload bits of a state file (channel attack)")
    p.add_argument("--in", dest="infile", required=True, help="state file to read")
    p.add_argument("--d", required=True, help="attack vector as hex")
    p.add_argument("--out", required=True, help="state file to write")
    p.set_defaults(func=cmd_tamper)

    p = sub.add_parser("qdecode", help="decode and authenticate a state file")
    p.add_argument("--priv", required=True, help="private key file")
    p.add_argument("--in", dest="infile", required=True, help="state file to read")
    _add_seed(p)
    p.set_defaults(func=cmd_qdecode)

    p = sub.add_parser("qroundtrip", help="encode, optionally tamper, and decode in one run")
    _add_sender_keys(p)
    p.add_argument("--priv", required=True, help="private key file")
    _add_message(p)
    p.add_argument("--tamper", default=None, help="attack vector as hex")
    p.add_argument("--emit-states", default=None, metavar="PREFIX",
                   help="write <PREFIX>-encoded.qst and <PREFIX>-received.qst")
    _add_policy(p)
    _add_seed(p)
    p.set_defaults(func=cmd_qroundtrip)

    p = sub.add_parser("attack-sweep", help="tamper sweep over attack weights; CSV plus figure")
    _add_sender_keys(p)
    p.add_argument("--priv", required=True, help="private key file")
    p.add_argument("--wmin", type=int, required=True)
    p.add_argument("--wmax", type=int, required=True)
    p.add_argument("--trials", type=int, default=None, help="random trials per weight")
    p.add_argument("--exhaustive", action="store_true",
                   help="enumerate every attack vector per weight (fixed message and error)")
    p.add_argument("--out", default=None, help="CSV file (default: stdout)")
    p.add_argument("--figure", default=None, help="figure file (default: CSV path with .png)")
    p.add_argument("--no-figure", action="store_true", help="skip figure rendering")
    _add_policy(p)
    _add_seed(p)
    p.set_defaults(func=cmd_attack_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except QmauthError as exc:
        print(f"qmauth: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"qmauth: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
