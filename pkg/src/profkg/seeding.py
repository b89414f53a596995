"""Deterministic seed derivation.

All randomness in the package flows from a single root seed.  Each consumer
(splitting, prompt sampling, init, negative sampling, ...) derives its own
stream from the root seed plus a fixed string label, so adding or reordering
one stage never perturbs another.
"""

import hashlib

_MASK63 = (1 << 63) - 1  # torch.Generator.manual_seed wants a signed 64-bit int


def derive_seed(root: int, *labels) -> int:
    """Hash (root, labels...) into a stable 63-bit seed."""
    msg = ":".join([str(int(root)), *map(str, labels)])
    digest = hashlib.blake2b(msg.encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "little") & _MASK63
