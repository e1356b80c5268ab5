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

"""
Command line interface: ``lsl-inversion <verb> --config <name or file> [options]``.

Verbs:
  forward     simulate the transfer data of a config and write them as JSON
  invert      invert a transfer data file with the data driven methods
  experiment  run the full pipeline and write every artifact
  compare     run the pipeline and print the error of each method
  diagnose    write the internal solution and ROM identity diagnostics

Exit codes: 0 success, 2 configuration error, 3 numerical failure.
"""
import argparse
import os
import sys
from typing import List, Optional
from .inversion.experiment_handler import ExperimentHandler
from .inversion.internal.common import config_constants
from .inversion.internal.common.config_errors import ConfigError, LslError, PipelineError
from .inversion.internal.utils.grid_exporter import GridExporter
from .inversion.internal.utils.logger import Logger
from .inversion.lsl import LslSolver
from .inversion.models import ExperimentConfig, MethodType
from .lsl_inversion import LslInversion
from .version import __version__


def build_parser() -> argparse.ArgumentParser:
    """Argument parser of the command line interface"""
    parser = argparse.ArgumentParser(prog='lsl-inversion', description=__doc__.strip().splitlines()[0],
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    verbs = parser.add_subparsers(dest='verb', required=True)
    for verb, help_text in (('forward', 'simulate transfer data'),
                            ('invert', 'invert a transfer data file'),
                            ('experiment', 'run a full experiment'),
                            ('compare', 'compare the reconstruction methods'),
                            ('diagnose', 'internal solution and identity diagnostics')):
        sub = verbs.add_parser(verb, help=help_text)
        sub.add_argument('--config', required=True,
                         help='shipped config name ({0}) or path to a JSON config'.format(
                             ', '.join(ExperimentConfig.shipped_configs()) or 'none shipped'))
        sub.add_argument('--set', dest='overrides', action='append', default=list(), metavar='SECTION.KEY=VALUE',
                         help='override a config field, the value is parsed as JSON when possible')
        sub.add_argument('--output-dir', default=None, help='output directory of the experiment')
        sub.add_argument('--seed', type=int, default=None, help='random seed of randomized placements')
        sub.add_argument('--debug', action='store_true', help='enable debug logging')
        if verb == 'forward':
            sub.add_argument('--data', default=None, help='transfer data file to write')
        if verb == 'invert':
            sub.add_argument('--data', required=True, help='transfer data file to invert')
    return parser


def _data_path(arguments, config: ExperimentConfig, sdk: LslInversion) -> str:
    if arguments.data:
        return arguments.data
    folder = ExperimentHandler.output_folder(config, sdk.get_output_root())
    return os.path.join(folder, config_constants.TRANSFER_FILE)


def run_forward(arguments, config: ExperimentConfig, sdk: LslInversion) -> int:
    """forward verb"""
    path = _data_path(arguments, config, sdk)
    data = sdk.simulate(config, path)
    Logger.info('Wrote transfer data (m = {0}, K = {1}) to {2}'.format(
        data.get_spectra().count(), data.source_count(), path))
    return config_constants.EXIT_SUCCESS


def run_invert(arguments, config: ExperimentConfig, sdk: LslInversion) -> int:
    """invert verb"""
    data = sdk.read_transfer_data(arguments.data)
    inversion = sdk.invert(config, data)
    for method, result in inversion.get_results().items():
        Logger.info('{0:<15} rank {1:>4}  residual {2:.3e}'.format(method.value, result.get_rank(),
                                                                   result.get_residual()))
    return config_constants.EXIT_SUCCESS


def _log_metrics(report) -> None:
    for method, entry in report.get_methods().items():
        metrics = entry['metrics']
        Logger.info('{0:<15} relative L2 {1:.4f}  max abs {2:.4f}  rank {3}'.format(
            method, metrics['relative_l2'], metrics['max_abs'], entry['rank']))


def run_experiment(arguments, config: ExperimentConfig, sdk: LslInversion) -> int:
    """experiment verb"""
    report = sdk.run_experiment(config)
    _log_metrics(report)
    Logger.info('Artifacts written to ' + ExperimentHandler.output_folder(config, sdk.get_output_root()))
    return config_constants.EXIT_SUCCESS


def run_compare(arguments, config: ExperimentConfig, sdk: LslInversion) -> int:
    """compare verb"""
    report = sdk.run_experiment(config, export=False)
    _log_metrics(report)
    ranking = sorted(report.get_methods(), key=lambda method: report.get_metrics(method)['relative_l2'])
    folder = ExperimentHandler.output_folder(config, sdk.get_output_root())
    GridExporter.write_json({'ranking': ranking,
                             'errors': {m: report.get_metrics(m) for m in ranking}},
                            os.path.join(folder, 'comparison.json'))
    Logger.info('Ranking: ' + ' < '.join(ranking))
    return config_constants.EXIT_SUCCESS


def run_diagnose(arguments, config: ExperimentConfig, sdk: LslInversion) -> int:
    """diagnose verb"""
    data, _ = ExperimentHandler.generate_data(config)
    truth = ExperimentHandler.make_medium(config.get_grid(), config.get_bumps())
    inversion = ExperimentHandler.invert(config, data, truth, [MethodType.LSL])
    kit = inversion.get_kit()
    identity = LslSolver.verify_rom_identity(inversion.get_factorization(), kit, data, kit.get_data(),
                                             inversion.get_solutions(), truth)
    diagnostics = {
        'identity': identity,
        'interpolation': LslSolver.rom_interpolation_residuals(inversion.get_factorization(), kit, data),
        'internal_solutions': ExperimentHandler.internal_solution_diagnostics(inversion, truth, config.get_held_out())
    }
    folder = ExperimentHandler.output_folder(config, sdk.get_output_root())
    GridExporter.write_json(diagnostics, os.path.join(folder, 'diagnostics.json'))
    for entry in identity:
        Logger.info('lambda {0}: reduced/data {1:.3e}  integral/data {2:.3e}  resolvent {3:.3e}'.format(
            entry['lambda'], entry['reduced_vs_data'], entry['integral_vs_data'], entry['resolvent_residual']))
    return config_constants.EXIT_SUCCESS


VERBS = {
    'forward': run_forward,
    'invert': run_invert,
    'experiment': run_experiment,
    'compare': run_compare,
    'diagnose': run_diagnose
}


def exit_code(error: LslError) -> int:
    """Exit code of a library error"""
    if isinstance(error, PipelineError):
        error = error.cause
    if isinstance(error, ConfigError):
        return config_constants.EXIT_CONFIG_ERROR
    return config_constants.EXIT_NUMERICAL_FAILURE


def main(argv: Optional[List[str]] = None) -> int:
    """Run the command line interface and return its exit code"""
    arguments = build_parser().parse_args(argv)
    LslInversion.enable_debug(arguments.debug)
    sdk = LslInversion.get_instance()
    try:
        config = sdk.load_config(arguments.config, arguments.overrides, arguments.output_dir, arguments.seed)
        return VERBS[arguments.verb](arguments, config, sdk)
    except LslError as err:
        Logger.error(err)
        return exit_code(err)


if __name__ == '__main__':
    sys.exit(main())
