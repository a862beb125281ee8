# Copyright 2026 The mpc-kcenter Authors. All rights reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from .disk_graph import DiskGraph, center_covers, covering_radius, disk_graph
from .instance import MetricInstance, PointId, ValidationPolicy, build_instance, find_triangle_violation
from .io import load_points_csv, save_points_csv
from .ordering import Ordering, reorder_prioritizing

__all__ = [
    'DiskGraph',
    'MetricInstance',
    'Ordering',
    'PointId',
    'ValidationPolicy',
    'build_instance',
    'center_covers',
    'covering_radius',
    'disk_graph',
    'find_triangle_violation',
    'load_points_csv',
    'reorder_prioritizing',
    'save_points_csv',
]
