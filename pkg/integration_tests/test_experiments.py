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

import os
import subprocess
import sys
import tempfile
import unittest
import numpy as np
from lsl_inversion.inversion.experiment_handler import ExperimentHandler
from lsl_inversion.inversion.internal.utils.file_manager import FileManager
from lsl_inversion.inversion.models import ExperimentConfig, MethodType

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
GOLDEN_FOLDER = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'golden')


def diagonal_points(count):
    return [[k, k] for k in np.geomspace(0.25, 1024.0, count).tolist()]


class MyTestCase(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.folder = tempfile.TemporaryDirectory()
        cls.reports = dict()
        for name in ('experiment1', 'experiment3', 'siso1d'):
            config = ExperimentConfig.load(name)
            cls.reports[name] = ExperimentHandler.run_experiment(config, output_root=cls.folder.name)

    @classmethod
    def tearDownClass(cls):
        cls.folder.cleanup()

    def test_low_contrast_errors(self):
        report = self.reports['experiment1']
        for method in ('LSL', 'BORN', 'CHEATED'):
            self.assertLessEqual(report.get_metrics(method)['relative_l2'], 0.5, method)

    def test_high_contrast_ordering(self):
        config = ExperimentConfig.load('experiment2')
        data, _ = ExperimentHandler.generate_data(config)
        truth = ExperimentHandler.make_medium(config.get_grid(), config.get_bumps())
        inversion = ExperimentHandler.invert(config, data, truth,
                                             [MethodType.LSL, MethodType.BORN, MethodType.CHEATED])
        results = inversion.get_results()
        lsl = ExperimentHandler.metrics(results[MethodType.LSL].get_estimate(), truth)['relative_l2']
        born = ExperimentHandler.metrics(results[MethodType.BORN].get_estimate(), truth)['relative_l2']
        self.assertLessEqual(lsl, 0.5 * born)
        grid = truth.get_grid()
        difference = results[MethodType.LSL].get_estimate().get_values() \
            - results[MethodType.CHEATED].get_estimate().get_values()
        self.assertLessEqual(grid.norm(difference) / truth.norm(), 0.15)

    def test_rectangle_report_is_finite(self):
        report = self.reports['experiment3']
        self.assertTrue(report.is_finite())
        for entry in report.get_methods().values():
            self.assertGreaterEqual(entry['metrics']['relative_l2'], 0.0)

    def test_internal_solution_ratio(self):
        for entry in self.reports['experiment1'].get_internal_solution_diagnostics():
            if not entry['held_out']:
                self.assertLessEqual(entry['ratio'], 0.2, entry['lambda'])

    def test_internal_solution_trend(self):
        ratios = list()
        for count in (3, 8):
            points = 'spectra.points={0}'.format(diagonal_points(count))
            config = ExperimentConfig.load('siso1d').with_overrides([points])
            data, _ = ExperimentHandler.generate_data(config)
            truth = ExperimentHandler.make_medium(config.get_grid(), config.get_bumps())
            inversion = ExperimentHandler.invert(config, data, truth, list())
            diagnostics = ExperimentHandler.internal_solution_diagnostics(inversion, truth, [3 + 1j])
            ratios.append(diagnostics[-1]['ratio'])
        self.assertLessEqual(ratios[1], ratios[0])

    def test_identity_diagnostics(self):
        report = self.reports['experiment1']
        for entry in report.get_identity_diagnostics():
            self.assertLessEqual(entry['resolvent_residual'], 1e-10)
            self.assertLessEqual(entry['reduced_vs_data'], 0.1)
            self.assertLessEqual(entry['integral_vs_data'], 0.1)
        for entry in report.get_interpolation_residuals():
            self.assertLessEqual(entry['residual'], 0.1)

    def test_artifacts(self):
        siso = os.path.join(self.folder.name, 'siso1d')
        for name in ('report.json', 'q_lsl.csv', 'q_true.csv', 'q_backprojection_meta.json'):
            self.assertTrue(os.path.isfile(os.path.join(siso, name)), name)
        self.assertEqual(len(os.listdir(os.path.join(siso, 'internal'))), 12)
        rectangle = os.path.join(self.folder.name, 'experiment3')
        for name in ('q_lsl.png', 'q_lsl.json', 'q_true.png', 'q_cheated.csv'):
            self.assertTrue(os.path.isfile(os.path.join(rectangle, name)), name)

    def test_determinism(self):
        config = ExperimentConfig.load('siso1d').with_overrides(['grid.nodes=[201]'])
        first = ExperimentHandler.run_experiment(config, export=False)
        second = ExperimentHandler.run_experiment(config, export=False)
        self.assertEqual(first.to_dict(include_timing=False), second.to_dict(include_timing=False))

    def test_golden_report(self):
        for name in ('experiment1', 'siso1d'):
            report = self.reports[name].to_dict(include_timing=False)
            path = os.path.join(GOLDEN_FOLDER, name + '_report.json')
            if not os.path.isfile(path):
                FileManager.store_files(report, path)
            golden = FileManager.read_files(path)
            self.assertEqual(sorted(golden['methods']), sorted(report['methods']))
            for method, entry in golden['methods'].items():
                self.assertAlmostEqual(report['methods'][method]['metrics']['relative_l2'],
                                       entry['metrics']['relative_l2'], delta=1e-8)
                self.assertEqual(report['methods'][method]['rank'], entry['rank'])

    def test_forward_then_invert_processes(self):
        with tempfile.TemporaryDirectory() as folder:
            common = ['--config', 'siso1d', '--set', 'grid.nodes=[101]', '--output-dir', folder]
            forward = subprocess.run([sys.executable, '-m', 'lsl_inversion', 'forward'] + common, cwd=ROOT)
            self.assertEqual(forward.returncode, 0)
            data = os.path.join(folder, 'transfer.json')
            invert = subprocess.run([sys.executable, '-m', 'lsl_inversion', 'invert'] + common + ['--data', data],
                                    cwd=ROOT)
            self.assertEqual(invert.returncode, 0)
            self.assertTrue(os.path.isfile(os.path.join(folder, 'q_lsl.csv')))
            self.assertFalse(os.path.isfile(os.path.join(folder, 'q_cheated.csv')))


if __name__ == '__main__':
    unittest.main()
