# Copyright 2026 The Tverberg Graphs Authors.
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

"""Tverberg cycles and matchings with verified witnesses."""

from tverberg._core import (
    BudgetExhausted,
    GeneralPositionError,
    InvalidInput,
    InvariantViolation,
    generate,
    h_value,
    instance_digest,
    max_weight_assignment,
    open_matching,
    power_center,
    redblue_matching,
    redblue_matching_2d,
    support_coefficients,
    sweep_F,
    tverberg_cycle,
    verify,
)

__all__ = [
    "BudgetExhausted",
    "GeneralPositionError",
    "InvalidInput",
    "InvariantViolation",
    "generate",
    "h_value",
    "instance_digest",
    "max_weight_assignment",
    "open_matching",
    "power_center",
    "redblue_matching",
    "redblue_matching_2d",
    "support_coefficients",
    "sweep_F",
    "tverberg_cycle",
    "verify",
]
