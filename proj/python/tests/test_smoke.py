# Copyright 2026 The arbpulse Authors
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

import math

import numpy as np
import pytest

import arbpulse as ap


def test_bb1_cancels_through_second_order():
    seq = ap.wimperis(ap.WimperisName.BB1, math.pi)
    assert seq.label == "B2"
    assert len(seq) == 4
    report = ap.verify_order(seq)
    assert report.exact
    coeffs = ap.series_coefficients(seq, 3)
    assert np.linalg.norm(coeffs[1]) < 1e-10
    assert np.linalg.norm(coeffs[2]) < 1e-10
    assert np.linalg.norm(coeffs[3]) > 1e-3


def test_rotations_and_metrics():
    x = ap.ideal_rotation(0.0, math.pi)
    assert np.allclose(x, [[0, -1j], [-1j, 0]])
    p0 = ap.make_passband(0, math.pi)
    expected = 2 * math.sqrt(2) * math.sin(0.025 * math.pi)
    assert ap.evaluate(p0, 0.1) == pytest.approx(expected, rel=1e-12)
    assert ap.distance(x, -x) == pytest.approx(0.0, abs=1e-15)
    executed = ap.execute_pulses([(0.0, math.pi / 2), (0.0, math.pi / 2)], ap.ErrorKind.amplitude, 0.0)
    assert ap.distance(executed, x) < 1e-15


def test_sk_ladder_and_fit():
    sk3 = ap.make_sk(3, math.pi / 2)
    assert sk3.family == ap.Family.SK
    assert ap.verify_order(sk3).exact
    assert ap.fit_order(sk3) == pytest.approx(4.0, abs=0.15)
    assert ap.evaluate(sk3, 0.01) < ap.evaluate(ap.make_passband(0, math.pi / 2), 0.01)


def test_detuning_sequences():
    seq = ap.make_detuning_corrected(2, math.pi / 2)
    assert seq.model == ap.ErrorKind.detuning
    assert ap.verify_order(seq).passed
    with pytest.raises(ap.ConstructionError):
        ap.make_detuning_corrected(4, math.pi)


def test_errors_map_to_exceptions():
    with pytest.raises(ap.PreconditionError):
        ap.make_sb(4, math.pi)
    with pytest.raises(ap.VerificationError):
        ap.from_json('{"family": "B"}')
    assert issubclass(ap.PreconditionError, ap.Error)


def test_json_round_trip_and_sweep():
    seq = ap.make_broadband(2, 1.1)
    back = ap.from_json(ap.to_json(seq))
    assert [(p.phi, p.theta) for p in back.pulses] == [(p.phi, p.theta) for p in seq.pulses]
    grid = ap.make_grid(1e-3, 0.5, 11)
    a = ap.sweep([seq, ap.make_passband(1, 1.1)], grid, jobs=1)
    b = ap.sweep([seq, ap.make_passband(1, 1.1)], grid, jobs=4)
    assert a.to_csv() == b.to_csv()
    assert a.to_csv().splitlines()[0] == "epsilon,B4,P2"
