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


import math

import numpy as np
import pytest

import tverberg

SQUARE = np.array([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]])
ALTERNATING = ["r", "b", "r", "b"]


def test_power_center_two_segments():
    pts = np.array([[0.0, 0.0], [2.0, 0.0], [4.0, 0.0], [6.0, 0.0]])
    w = tverberg.power_center(pts, [(0, 1), (2, 3)])
    assert w["value"] == pytest.approx(3.0)
    assert w["x"] == pytest.approx([3.0, 0.0], abs=1e-9)
    assert w["tight"] == [0, 1]


def test_verify_modes_on_square():
    assert tverberg.verify(SQUARE, [(0, 1), (2, 3)], "closed")["intersects"]
    assert not tverberg.verify(SQUARE, [(0, 1), (2, 3)], "open")["intersects"]


def test_support_coefficients():
    terms = tverberg.support_coefficients(np.array([[1.0, 0.0], [5.0, 0.0]]), np.array([3.0, 0.0]))
    assert [i for i, _ in terms] == [0, 1]
    assert [w for _, w in terms] == pytest.approx([0.5, 0.5])


def test_cycle_round_trip():
    pts, _ = tverberg.generate(2, 25, seed=4)
    r = tverberg.tverberg_cycle(pts, seed=1)
    assert sorted(r["cycle"]) == list(range(25))
    assert tverberg.h_value(pts, r["edges"], r["witness"]["x"]) <= 1e-9
    assert tverberg.verify(pts, r["edges"])["intersects"]


def test_redblue_planar_and_sweep():
    pts, colors = tverberg.generate(2, 12, seed=2, colors=True)
    r = tverberg.redblue_matching_2d(pts, colors, seed=0)
    assert len(r["edges"]) == 6
    assert tverberg.verify(pts, r["edges"])["intersects"]
    samples = tverberg.sweep_F(pts, colors)
    q = len(samples) // 4
    for k in range(q):
        assert sum(samples[k + s * q][1] for s in range(4)) == 0


def test_open_matching_with_trace():
    pts = np.array([[0.0, 0.0], [1.0, 0.0], [2.0, 0.0], [3.0, 0.0]])
    steps = []
    r = tverberg.open_matching(pts, trace=steps.append)
    assert r["witness"]["value"] < 0
    assert r["iterations"] == len(steps) <= 2
    assert all(s["value_after"] < s["value_before"] for s in steps)


def test_redblue_matching_tight_square():
    r = tverberg.redblue_matching(SQUARE, ALTERNATING)
    assert r["q"] == pytest.approx(2.0)
    assert abs(r["witness"]["value"]) <= 1e-9


def test_assignment():
    perm, value = tverberg.max_weight_assignment(np.array([[1.0, 9.0], [5.0, 1.0]]))
    assert perm == [1, 0]
    assert value == 14.0


def test_errors():
    with pytest.raises(ValueError, match="points must be distinct"):
        tverberg.open_matching(np.array([[0.0, 0.0], [0.0, 0.0]]))
    with pytest.raises(tverberg.InvalidInput):
        tverberg.generate(2, 9, colors=True)


def test_generate_is_deterministic():
    a, _ = tverberg.generate(3, 10, seed=1)
    b, _ = tverberg.generate(3, 10, seed=1)
    assert np.array_equal(a, b)
    assert tverberg.instance_digest(a) == tverberg.instance_digest(b)
    assert math.isclose(np.linalg.norm(tverberg.generate(3, 1, dist="sphere")[0][0]), 1.0)
