# SPDX-License-Identifier: Apache-2.0
#
# rissec - physical-layer secrecy toolkit for RIS-assisted wireless links
# Copyright (C) 2026 rissec contributors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# --------------------------------------------------------------------------

"""Secrecy analysis of RIS-assisted links over cascaded fading channels."""

from ._rissec import (
    CascadeFit,
    ConsistencyError,
    McEstimate,
    McMetrics,
    MgTerm,
    MixtureGamma,
    NumericsError,
    __version__,
    avg_secrecy_rate_full,
    avg_secrecy_rate_partial,
    cascade_moments,
    ergodic_capacity_b,
    ergodic_capacity_e,
    fit_cascade,
    load_channel,
    meijer_g,
    nakagami_channel,
    prob_zero_secrecy,
    rice_channel,
    simulate,
)

__all__ = [
    "CascadeFit",
    "ConsistencyError",
    "McEstimate",
    "McMetrics",
    "MgTerm",
    "MixtureGamma",
    "NumericsError",
    "__version__",
    "avg_secrecy_rate_full",
    "avg_secrecy_rate_partial",
    "cascade_moments",
    "ergodic_capacity_b",
    "ergodic_capacity_e",
    "fit_cascade",
    "load_channel",
    "meijer_g",
    "nakagami_channel",
    "prob_zero_secrecy",
    "rice_channel",
    "simulate",
]
