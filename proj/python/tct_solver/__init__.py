# Copyright 2026 The tct-solver Authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Deadline time-cost tradeoff solver.

Instances are dicts in the JSON instance format (see README.md). Numbers may
be ints, floats, Fractions or "p/q" strings; "inf" is infinity. Rational
results come back as Fractions.
"""

import json
from fractions import Fraction

from tct_solver import _tct
from tct_solver._tct import (
    DEFAULT_SEED,
    InfeasibleError,
    InvalidInputError,
    ResourceCapError,
    TctError,
)

__all__ = [
    "DEFAULT_SEED",
    "InfeasibleError",
    "InvalidInputError",
    "ResourceCapError",
    "TctError",
    "check_feasible",
    "exact_opt",
    "gen_gap",
    "gen_random",
    "normalize",
    "solve",
    "solve_lp",
]

_RATIONAL_KEYS = {"cost", "mean_cost", "lp_objective", "bound", "objective", "eps", "max_delay"}


def _encode(value):
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else value.numerator
    if isinstance(value, dict):
        return {k: _encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_encode(v) for v in value]
    return value


def _to_number(value):
    if isinstance(value, str) and value != "inf":
        return Fraction(value)
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    return value


def _decode(text):
    out = json.loads(text)
    for key in _RATIONAL_KEYS & out.keys():
        out[key] = _to_number(out[key])
    if isinstance(out.get("x"), dict):
        out["x"] = {k: _to_number(v) for k, v in out["x"].items()}
    return out


def _dump(instance):
    return json.dumps(_encode(instance))


def solve(instance, algorithm="det", *, seed=DEFAULT_SEED, trials=1, eps=Fraction(1, 20),
          exact_lp=False):
    """LP plus rounding. algorithm is one of det, rand, slack-det, slack-rand,
    naive, bye, exact."""
    return _decode(_tct.solve(_dump(instance), algorithm, seed, trials, str(Fraction(eps)),
                              exact_lp))


def solve_lp(instance, *, exact=False, eps=Fraction(1, 20)):
    """Fractional cover: {"x": {id: Fraction}, "objective": Fraction, ...}."""
    return _decode(_tct.solve_lp(_dump(instance), exact, str(Fraction(eps))))


def exact_opt(instance):
    """Minimum-cost acceleration set by exhaustive search (small instances)."""
    return _decode(_tct.exact_opt(_dump(instance)))


def check_feasible(instance, fast):
    """Checks a set of accelerated job ids against a normalized instance."""
    return _decode(_tct.check_feasible(_dump(instance), json.dumps({"fast": list(fast)})))


def normalize(instance):
    return json.loads(_tct.normalize(_dump(instance)))


def gen_gap(d, k):
    return json.loads(_tct.gen_gap(d, k))


def gen_random(depth, num_jobs, seed=DEFAULT_SEED):
    return json.loads(_tct.gen_random(depth, num_jobs, seed))
