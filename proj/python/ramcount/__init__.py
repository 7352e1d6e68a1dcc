# Copyright 2026 The ramcount Authors
#
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

"""Counting rational maps of P^1 with prescribed ramification."""

import json

from ._core import BudgetExceeded, intersection_number, n_three, pencil_count
from ._core import count_json as _count_json
from ._core import run as _run

__all__ = ["BudgetExceeded", "count", "intersection_number", "n_three", "pencil_count", "run", "cli_json"]


def count(orders, p):
    """Count report for a ramification profile; p is an odd prime or "inf"."""
    return json.loads(_count_json(list(orders), p))


def run(*args):
    """Run a command line as the ramcount tool would: (exit_code, stdout, stderr)."""
    return _run([str(a) for a in args])


def cli_json(*args):
    """Run a command with JSON output and parse it; raises on a nonzero exit."""
    code, out, err = run(*args)
    if code != 0:
        raise RuntimeError(f"ramcount exited with {code}: {err.strip()}")
    return json.loads(out)
