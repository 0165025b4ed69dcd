# Copyright 2026 The cpkit Authors
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

"""Completely positive maps over dagger compact categories."""

from ._core import (
    Error,
    Kraus,
    check_cp,
    choi,
    cp_compose,
    cp_equal,
    eval,
    kraus_from_choi,
    normalize,
    run_cli,
)

__all__ = [
    "Error",
    "Kraus",
    "check_cp",
    "choi",
    "cp_compose",
    "cp_equal",
    "eval",
    "kraus_from_choi",
    "normalize",
    "run_cli",
]
