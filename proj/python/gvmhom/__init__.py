"""Scalar generalized Verma module inclusions for maximal parabolics."""

import json

from . import _core
from ._core import GvmError, EXIT_OK, EXIT_VIOLATIONS, EXIT_USAGE

__all__ = [
    "GvmError",
    "EXIT_OK",
    "EXIT_VIOLATIONS",
    "EXIT_USAGE",
    "run",
    "classify",
    "hom_tset",
    "jantzen",
    "rootdata",
    "orbits",
    "cells",
    "elementary",
    "verify",
]


def run(*args):
    """Run the gvm tool in-process. Returns (exit_code, stdout, stderr)."""
    return _core.run([str(a) for a in args])


def _json_command(name, **opts):
    args = [name]
    for key, value in opts.items():
        if value is None or value is False:
            continue
        flag = "--" + key.replace("_", "-")
        if value is True:
            args.append(flag)
        elif isinstance(value, (list, tuple)):
            args += [flag, ",".join(str(v) for v in value)]
        else:
            args += [flag, str(value)]
    code, out, err = run(*args, "--format", "json")
    if code == EXIT_USAGE:
        raise GvmError(err.strip())
    result = json.loads(out)
    if name == "verify":
        result["exit_code"] = code
    return result


def classify(family, k, t, rank=0, s=None):
    """Verdict for M[-t] in M[t] (or M[s] in M[t] when s is given)."""
    if s is None:
        return json.loads(_core.exists_hom_json(family, rank, k, str(t)))
    return _json_command("classify", family=family, rank=rank or None, k=k, t=t, s=s)


def hom_tset(family, k, rank=0):
    """Name of the parameter set: "{0}", "N" or "1/2N"."""
    return _core.hom_tset(family, rank, k)


def jantzen(family, k, rank=0, t=None, lam=None):
    return _json_command("jantzen", family=family, rank=rank or None, k=k, t=t, **{"lambda": lam})


def rootdata(family, rank=0, parabolic=None, commutation=False):
    return _json_command("rootdata", family=family, rank=rank or None, parabolic=parabolic, commutation=commutation)


def orbits(family, rank, k=None):
    if k is not None:
        return json.loads(_core.richardson_json(family, rank, k))
    return _json_command("orbits", family=family, rank=rank)


def cells(family, rank, k, delta=None):
    return _json_command("cells", family=family, rank=rank, k=k, delta=delta)


def elementary(family, kappa, t, rank=0):
    """Elementary inclusions for the type C composition kappa, one parameter per block."""
    return _json_command("elementary", family=family, rank=rank or None, kappa=kappa, t=t)


def verify(max_rank=None, grid=None, families=None, jobs=None, e8=False):
    return _json_command("verify", max_rank=max_rank, grid=grid, families=families, jobs=jobs, e8=e8)
