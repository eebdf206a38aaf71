# Copyright 2026 The pathsum Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact simulation of Toffoli-Hadamard circuits with path sums."""

import json

from ._core import (
    Amplitude,
    Circuit,
    Error,
    EvalGuardError,
    InvalidArgument,
    NonDeterministicError,
    ParseError,
    hidden_shift_circuit,
    measure_sim,
    normalize_json,
    parse_circuit,
    recover_shift,
    serialize_circuit,
    strong_sim,
)


def normalize(circuit):
    """Normal form of the circuit's path sum and the rewrite trace, as a dict."""
    return json.loads(normalize_json(circuit))


__all__ = [
    "Amplitude",
    "Circuit",
    "Error",
    "EvalGuardError",
    "InvalidArgument",
    "NonDeterministicError",
    "ParseError",
    "hidden_shift_circuit",
    "measure_sim",
    "normalize",
    "parse_circuit",
    "recover_shift",
    "serialize_circuit",
    "strong_sim",
]
