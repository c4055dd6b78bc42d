"""Small shared helpers."""

import hashlib


def derive_seed(root_seed: int, *tokens) -> int:
    """Stable 64-bit seed from a root seed and string tokens.

    Keyed blake2b over the root seed and NUL-separated tokens; used to fan
    one CLI seed out to per-graph and per-stage generators deterministically
    across platforms and runs.
    """
    h = hashlib.blake2b(digest_size=8)
    h.update(int(root_seed).to_bytes(16, "little", signed=True))
    for tok in tokens:
        h.update(str(tok).encode("utf-8"))
        h.update(b"\x00")
    return int.from_bytes(h.digest(), "little")


def format_float(x: float) -> str:
    """Shortest round-trip decimal form, stable across runs."""
    return repr(float(x))
