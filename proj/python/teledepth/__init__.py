# Copyright 2026 The teledepth Authors
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

"""Python bindings for teledepth."""

from teledepth._teledepth import *  # noqa: F401,F403
from teledepth._teledepth import __version__  # noqa: F401


def synthesize(n, defer=True):
    """Teleportation decomposition of MCT_{n+1}, with corrections deferred by default."""
    circuit = decompose_mct(n)  # noqa: F405
    return defer_corrections(circuit) if defer else circuit  # noqa: F405
