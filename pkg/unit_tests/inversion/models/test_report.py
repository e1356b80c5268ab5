# Copyright 2021 The lsl-inversion Authors. All Rights Reserved.
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

import unittest
import numpy as np
from lsl_inversion.inversion.models import Grid, GridFunction, InversionResult, MethodType, Report


class MyTestCase(unittest.TestCase):

    def setUp(self):
        grid = Grid([1.0], [5])
        self.result = InversionResult(GridFunction(grid, np.linspace(0.0, 1.0, 5)), MethodType.LSL,
                                      singular_values=[3.0, 1.0], rank=2, threshold=1e-3, residual=0.1)
        self.report = Report('unit', {'version': 1})
        self.report.add_result(self.result, {'relative_l2': 0.2, 'relative_linf': 0.3}, 1.5)
        self.report.add_timing('generate', 0.5)

    def test_entries(self):
        methods = self.report.get_methods()
        self.assertEqual(list(methods), ['LSL'])
        self.assertEqual(methods['LSL']['rank'], 2)
        self.assertEqual(methods['LSL']['singular_values'], [3.0, 1.0])
        self.assertEqual(methods['LSL']['flagged_nodes'], 0)
        self.assertEqual(self.report.get_metrics('LSL')['relative_l2'], 0.2)

    def test_timing_is_optional(self):
        self.assertEqual(self.report.to_dict()['timing'], {'LSL': 1.5, 'generate': 0.5})
        self.assertNotIn('timing', self.report.to_dict(include_timing=False))

    def test_is_finite(self):
        self.assertTrue(self.report.is_finite())
        self.report.set_internal_solution_diagnostics([{'lambda': [1.0, 0.0], 'ratio': float('nan')}])
        self.assertFalse(self.report.is_finite())
        self.report.set_internal_solution_diagnostics(list())
        self.report.add_timing('slow', float('inf'))
        self.assertTrue(self.report.is_finite())


if __name__ == '__main__':
    unittest.main()
