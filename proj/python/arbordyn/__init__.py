"""Python access to the arbordyn library.

Every command returns the same JSON document the command-line tool prints,
decoded into a dict. Integers inside reports are decimal strings.
"""

import json

from . import _core

SCHEMA = _core.SCHEMA


class ArbordynError(ValueError):
    """Library error; ``kind`` matches the CLI's error names."""

    def __init__(self, kind, message):
        super().__init__(f"{kind}: {message}")
        self.kind = kind
        self.message = message


def _call(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except _core.Error as e:
        kind, _, message = str(e).partition(": ")
        raise ArbordynError(kind, message) from None


def _config(overrides):
    cfg = json.loads(_core.default_config())
    for key, value in overrides.items():
        if key not in cfg:
            raise TypeError(f"unknown config field {key!r}")
        cfg[key] = value
    return json.dumps(cfg)


def _opt_str(x):
    return None if x is None else str(x)


def canonical_map(map):
    return _call(_core.canonical_map, map)


def orbit(map, start="0", steps=None, **config):
    return json.loads(_call(_core.orbit, map, str(start), steps, _config(config)))


def critical(map, bound=12, **config):
    return json.loads(_call(_core.critical, map, bound, _config(config)))


def sequence(a=None, map=None, n=8, factor=False, **config):
    return json.loads(_call(_core.sequence, _opt_str(a), map, n, factor, _config(config)))


def certify(m=None, a=None, depth=8, threads=1, **config):
    """Returns (report, exit_code) with the CLI's exit code convention."""
    text, code = _call(_core.certify, _opt_str(m), _opt_str(a), depth, threads, _config(config))
    return json.loads(text), code


def rigid_check(map, exclude=(), n=8, full_factor_depth=6, prime_bound=10000, **config):
    return json.loads(
        _call(_core.rigid_check, map, [str(p) for p in exclude], n, full_factor_depth, prime_bound, _config(config))
    )


def f_sequence(a, n):
    """[f_0 = 0, f_1, ..., f_n] as Python ints."""
    return [int(x) for x in _call(_core.f_sequence, str(a), n)]


def theta(a, n):
    return int(_call(_core.theta, str(a), n))


__all__ = [
    "SCHEMA",
    "ArbordynError",
    "canonical_map",
    "orbit",
    "critical",
    "sequence",
    "certify",
    "rigid_check",
    "f_sequence",
    "theta",
]
