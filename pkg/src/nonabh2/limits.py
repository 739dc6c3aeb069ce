"""Search-size caps, scoped with a context variable so the CLI can override them."""

from __future__ import annotations

import contextlib
import contextvars
import dataclasses


@dataclasses.dataclass(frozen=True)
class Limits:
    max_aut_candidates: int = 10**7
    max_enum_cochains: int = 1 << 14
    max_nodes: int = 10**6
    max_order: int = 2048
    max_degree: int = 3
    max_q_order: int = 16
    max_module_order: int = 64


_current = contextvars.ContextVar("nonabh2_limits", default=Limits())


def current() -> Limits:
    return _current.get()


@contextlib.contextmanager
def using(**overrides):
    token = _current.set(dataclasses.replace(_current.get(), **overrides))
    try:
        yield _current.get()
    finally:
        _current.reset(token)


class NodeBudget:
    """Counts search nodes against ``Limits.max_nodes``."""

    def __init__(self, what, cap=None):
        self.what = what
        self.cap = current().max_nodes if cap is None else cap
        self.used = 0

    def tick(self, n=1):
        self.used += n
        if self.used > self.cap:
            from .errors import SizeLimitExceeded
            raise SizeLimitExceeded(self.what, self.used, self.cap)
