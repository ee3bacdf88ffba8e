"""Codes correcting a single burst of at most t deletions."""

import json

from ._qburst import (
    DecodeFailure,
    Error,
    InfeasibleParameters,
    InvalidArgument,
    Params,
    dec_den,
    decode,
    delete_burst,
    derive_params,
    enc_den,
    encode,
    is_dense,
    parse_params,
    smallest_feasible_n,
)
from ._qburst import run_campaign as _run_campaign


def run_campaign(params, seed=1, messages=10, bursts="exhaustive", threads=1,
                 inject_fault=False, with_timings=True):
    """Run a burst sweep and return the report as a dict."""
    return json.loads(_run_campaign(params, seed, messages, bursts, threads,
                                    inject_fault, with_timings))


__all__ = [
    "DecodeFailure", "Error", "InfeasibleParameters", "InvalidArgument", "Params",
    "dec_den", "decode", "delete_burst", "derive_params", "enc_den", "encode",
    "is_dense", "parse_params", "run_campaign", "smallest_feasible_n",
]
