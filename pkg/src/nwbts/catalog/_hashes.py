"""Byte-for-byte digests of the frozen block-data modules.

The catalog refuses to start if a data module no longer matches its
recorded digest; edits to stored designs must go through a deliberate
re-freeze of this table.
"""

import hashlib
from pathlib import Path

DATA_DIGESTS = {
    "data_small": "ffcff662c6eb43bd0e72c6af1fc50282ded872d55e5c04a4f703773e83a7acb5",
    "data_pcs": "1b8d2957db54b0cd99ac9e35be5d406f1e90cf18d265d67063357fb70c90b572",
    "data_double": "dd88ec7544d7bfc01aa816c8ec63d7f871af27aba203e74625ac4aaaf62d5203",
}


def current_digest(name: str) -> str:
    path = Path(__file__).with_name(name + ".py")
    return hashlib.sha256(path.read_bytes()).hexdigest()
