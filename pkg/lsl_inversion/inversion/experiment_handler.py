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
Config driven experiment harness: media, source layouts, the end to end pipeline, metrics and export.
"""

import os
import time
from typing import Dict, List, Optional, Tuple
import numpy as np
from .forward import ForwardModel
from .internal.common import config_constants, config_messages
from .internal.common.config_errors import ConfigError, LslError, PipelineError
from .internal.utils.grid_exporter import GridExporter
from .internal.utils.logger import Logger
from .internal_solutions import InternalSolutions
from .lanczos import LanczosProcess
from .lsl import LslSolver
from .models import (BackgroundKit, Bump, ExperimentConfig, Grid, GridFunction, InternalSolutionSet,
                     InversionResult, LanczosFactorization, MethodType, Report, SourceSet, TransferData)
from .romgen import RomGenerator

SIDES = ('bottom', 'right', 'top', 'left')
SUPPORT_RADIUS = 2.0


class Inversion:
    """Everything produced by inverting one TransferData set"""

    def __init__(self, kit: BackgroundKit, factorization: LanczosFactorization,
                 solutions: InternalSolutionSet, results: Dict[MethodType, InversionResult],
                 timing: Dict[str, float]):
        self.__kit = kit
        self.__factorization = factorization
        self.__solutions = solutions
        self.__results = results
        self.__timing = timing

    def get_kit(self) -> BackgroundKit:
        """Get the background kit"""
        return self.__kit

    def get_factorization(self) -> LanczosFactorization:
        """Get the factorization of the measured data"""
        return self.__factorization

    def get_solutions(self) -> InternalSolutionSet:
        """Get the data driven internal solutions"""
        return self.__solutions

    def get_results(self) -> Dict[MethodType, InversionResult]:
        """Get the result of every method run"""
        return self.__results

    def get_timing(self) -> Dict[str, float]:
        """Get the wall clock time per method"""
        return self.__timing


class ExperimentHandler:
    """Runs the pipeline described by an ExperimentConfig"""

    @classmethod
    def make_medium(cls, grid: Grid, bumps: List[Bump]) -> GridFunction:
        """Sum of Gaussian bumps sampled on ``grid``

        Raises:
            ConfigError: a bump center lies outside the domain.
        """
        coordinates = grid.coordinates()
        values = np.zeros(grid.node_count())
        for bump in bumps:
            if not grid.contains(bump.get_center()):
                raise ConfigError(config_messages.BUMP_OUTSIDE_ERROR + str(bump.get_center()))
            scaled = (coordinates - np.array(bump.get_center())) / np.array(bump.get_width())
            values += bump.get_amplitude() * np.exp(-0.5 * np.sum(scaled ** 2, axis=1))
        return GridFunction(grid, values)

    @classmethod
    def __side_positions(cls, grid: Grid, side: str, count: int) -> np.ndarray:
        (x0, y0), (lx, ly) = grid.get_origin(), grid.get_extents()
        fractions = np.arange(1, count + 1) / (count + 1)
        if side == 'bottom':
            return np.stack([x0 + fractions * lx, np.full(count, y0)], axis=1)
        if side == 'top':
            return np.stack([x0 + fractions * lx, np.full(count, y0 + ly)], axis=1)
        if side == 'left':
            return np.stack([np.full(count, x0), y0 + fractions * ly], axis=1)
        return np.stack([np.full(count, x0 + lx), y0 + fractions * ly], axis=1)

    @classmethod
    def __boundary_nodes(cls, grid: Grid) -> np.ndarray:
        nx, ny = grid.get_nodes()
        i, j = np.meshgrid(np.arange(nx), np.arange(ny), indexing='ij')
        mask = (i == 0) | (i == nx - 1) | (j == 0) | (j == ny - 1)
        return np.sort(grid.flatten(i + nx * j)[grid.flatten(mask)])

    @classmethod
    def place_sources(cls, grid: Grid, count: int, placement: str, width: float = 0.0,
                      seed: int = 0) -> SourceSet:
        """Source layout on the boundary

        ``perimeter`` puts count/4 sources on each side at fractions k/(count/4 + 1);
        a side name puts all sources on that side at fractions k/(count + 1); ``random``
        draws distinct boundary nodes with ``seed``. In 1D, ``left`` is x = 0 and ``ends``
        both end points.
        """
        if grid.get_dim() == 1:
            origin, extent = grid.get_origin()[0], grid.get_extents()[0]
            positions = [[origin]] if placement == 'left' else [[origin], [origin + extent]]
        elif placement == 'perimeter':
            positions = np.concatenate([cls.__side_positions(grid, side, count // 4) for side in SIDES])
        elif placement == 'random':
            nodes = cls.__boundary_nodes(grid)
            if count > nodes.size:
                raise ConfigError(config_messages.CONFIG_FIELD_ERROR + 'sources.count')
            chosen = np.sort(np.random.default_rng(seed).choice(nodes, size=count, replace=False))
            positions = grid.coordinates()[chosen]
        elif placement in SIDES:
            positions = cls.__side_positions(grid, placement, count)
        else:
            raise ConfigError(config_messages.CONFIG_FIELD_ERROR + 'sources.placement')
        positions = np.asarray(positions, dtype=float)
        if width == 0:
            nodes = [grid.nearest_node(position) for position in positions]
            if len(set(nodes)) != len(nodes):
                raise ConfigError(config_messages.CONFIG_FIELD_ERROR + 'sources.count (two sources share a node)')
        return ForwardModel.build_sources(grid, positions, width, placement)

    @classmethod
    def __stage(cls, stage: str, function, *args, **kwargs):
        try:
            return function(*args, **kwargs)
        except PipelineError:
            raise
        except LslError as err:
            Logger.error('Stage {0} failed: {1}'.format(stage, err))
            raise PipelineError(stage, err)

    @classmethod
    def generate_data(cls, config: ExperimentConfig) -> Tuple[TransferData, GridFunction]:
        """Simulate the measured data on the data grid

        Returns:
            (TransferData, q_true on the data grid).
        """
        grid = config.get_data_grid()
        potential = cls.__stage('medium', cls.make_medium, grid, config.get_bumps())
        sources = cls.__stage('sources', cls.place_sources, grid, config.get_source_count(),
                              config.get_placement(), config.get_source_width(), config.get_seed())
        operator = cls.__stage('forward', ForwardModel.build_operator, grid, potential)
        data = cls.__stage('forward', ForwardModel.simulate, operator, sources, config.get_spectra())
        return data, potential

    @classmethod
    def invert(cls, config: ExperimentConfig, data: TransferData, potential: Optional[GridFunction] = None,
               methods: Optional[List[MethodType]] = None) -> Inversion:
        """Invert measured data with every requested method

        Args:
            config: experiment configuration (grid, sources, rank policy).
            data: measured transfer data, the only input of the data driven methods.
            potential: true potential on the inversion grid, used by CHEATED only.
            methods: methods to run, the config methods by default.
        """
        methods = methods if methods is not None else config.get_methods()
        if MethodType.CHEATED in methods and potential is None:
            raise PipelineError('lsl', ConfigError(config_messages.CHEATED_NEEDS_TRUTH_ERROR))
        grid = config.get_grid()
        spectra = data.get_spectra()
        sources = cls.__stage('sources', cls.place_sources, grid, config.get_source_count(),
                              config.get_placement(), config.get_source_width(), config.get_seed())
        if sources.count() != data.source_count():
            raise PipelineError('sources', ConfigError(config_messages.TRANSFER_SHAPE_ERROR))
        kit = cls.__stage('background', InternalSolutions.build_background, grid, sources, spectra,
                          config.get_mass_ratio())
        rom = cls.__stage('romgen', RomGenerator.build_rom, data, config.get_mass_ratio())
        factorization = cls.__stage('lanczos', LanczosProcess.factorize, rom)
        solutions = cls.__stage('internal', InternalSolutions.data_driven_set, kit, factorization, spectra)
        background = InternalSolutions.background_set(kit)
        rank, threshold = config.get_rank(), config.get_threshold()
        results = dict()
        timing = dict()
        for method in methods:
            start = time.perf_counter()
            if method is MethodType.LSL:
                system = cls.__stage('lsl', LslSolver.assemble, background, solutions, data, kit.get_data())
                result = cls.__stage('lsl', LslSolver.solve_tsvd, system, rank, threshold, MethodType.LSL)
            elif method is MethodType.BORN:
                result = cls.__stage('lsl', LslSolver.born_solve, kit, data, kit.get_data(), rank, threshold)
            elif method is MethodType.CHEATED:
                result = cls.__stage('lsl', LslSolver.cheated_solve, kit, data, potential, kit.get_data(),
                                     rank, threshold)
            elif method is MethodType.BACKPROJECTION:
                result = cls.__stage('lsl', LslSolver.back_projection, factorization, kit)
            else:
                result = cls.__stage('lsl', LslSolver.quotient_estimate, kit, solutions)
            timing[method.value] = time.perf_counter() - start
            results[method] = result
            Logger.info('{0} finished with rank {1}'.format(method.value, result.get_rank()))
        return Inversion(kit, factorization, solutions, results, timing)

    @classmethod
    def metrics(cls, estimate: GridFunction, truth: GridFunction, bumps: Optional[List[Bump]] = None) -> dict:
        """Error record of an estimate

        ``relative_l2`` is ||q_hat - q||_w / ||q||_w, or the absolute norm with ``absolute`` set
        when q vanishes. ``support_l2`` is the same quantity restricted to nodes within two
        widths of a bump center.
        """
        grid = truth.get_grid()
        if estimate.get_grid() != grid:
            raise ConfigError(config_messages.GRID_MISMATCH_ERROR)
        difference = np.real(estimate.get_values()) - np.real(truth.get_values())
        truth_norm = grid.norm(truth.get_values())
        absolute = truth_norm == 0
        record = {
            'relative_l2': float(grid.norm(difference) / (1.0 if absolute else truth_norm)),
            'max_abs': float(np.max(np.abs(difference))),
            'absolute': bool(absolute),
            'support_l2': None
        }
        if bumps:
            coordinates = grid.coordinates()
            mask = np.zeros(grid.node_count(), dtype=bool)
            for bump in bumps:
                scaled = (coordinates - np.array(bump.get_center())) / np.array(bump.get_width())
                mask |= np.sum(scaled ** 2, axis=1) <= SUPPORT_RADIUS ** 2
            weights = grid.get_weights()[mask]
            if np.any(mask):
                error = np.sqrt(np.sum(weights * difference[mask] ** 2))
                scale = np.sqrt(np.sum(weights * np.real(truth.get_values())[mask] ** 2))
                record['support_l2'] = float(error / scale) if scale > 0 else float(error)
        return record

    @classmethod
    def internal_solution_diagnostics(cls, inversion: Inversion, potential: GridFunction,
                                      held_out: Optional[list] = None) -> List[dict]:
        """||u_data - u|| / ||u - u_0|| at every data point and held out point"""
        kit = inversion.get_kit()
        grid = kit.get_grid()
        sources = kit.get_sources().get_columns()
        operator = ForwardModel.build_operator(grid, potential)
        background = kit.get_operator()
        points = [(point, False) for point in kit.get_spectra().get_points()]
        points += [(point, True) for point in held_out or list()]
        diagnostics = list()
        for point, is_held_out in points:
            exact = ForwardModel.solve_block(operator, point, sources)
            reference = ForwardModel.solve_block(background, point, sources)
            synthesized = InternalSolutions.data_driven_internal(kit, inversion.get_factorization(), point)
            error = grid.norm(synthesized - exact)
            scattered = grid.norm(exact - reference)
            diagnostics.append({
                'lambda': [float(np.real(point)), float(np.imag(point))],
                'held_out': is_held_out,
                'data_error': float(error),
                'born_error': float(scattered),
                'ratio': float(error / scattered) if scattered > 0 else 0.0
            })
        return diagnostics

    @classmethod
    def output_folder(cls, config: ExperimentConfig, output_root: Optional[str] = None) -> str:
        """Resolve the output folder of an experiment"""
        directory = config.get_output_directory()
        if os.path.isabs(directory):
            return directory
        root = output_root or os.environ.get(config_constants.OUTPUT_ROOT_ENV, config_constants.DEFAULT_OUTPUT_ROOT)
        return os.path.join(root, directory)

    @classmethod
    def export_results(cls, inversion: Inversion, folder: str, metrics: Optional[Dict[str, dict]] = None) -> list:
        """CSV grid, grayscale image and JSON metadata per method"""
        written = list()
        grid = inversion.get_kit().get_grid()
        for method, result in inversion.get_results().items():
            name = 'q_' + method.value.lower()
            written += GridExporter.write_field(grid, result.get_estimate().get_values(), folder, name)
            metadata = result.to_dict()
            if metrics and method.value in metrics:
                metadata['metrics'] = metrics[method.value]
            written.append(GridExporter.write_json(metadata, os.path.join(folder, name + '_meta.json')))
        return written

    @classmethod
    def run_experiment(cls, config: ExperimentConfig, output_root: Optional[str] = None,
                       export: bool = True) -> Report:
        """Run the full pipeline of an experiment

        forward data -> ROM -> Lanczos -> background kit -> internal solutions -> inversions ->
        metrics, diagnostics and export. Module errors surface as PipelineError naming the stage.
        """
        Logger.info('Running experiment ' + config.get_name())
        report = Report(config.get_name(), config.to_dict())
        start = time.perf_counter()
        data, _ = cls.generate_data(config)
        report.add_timing('forward', time.perf_counter() - start)
        truth = cls.__stage('medium', cls.make_medium, config.get_grid(), config.get_bumps())
        start = time.perf_counter()
        inversion = cls.invert(config, data, truth)
        report.add_timing('inversion', time.perf_counter() - start)
        metrics = dict()
        for method, result in inversion.get_results().items():
            metrics[method.value] = cls.metrics(result.get_estimate(), truth, config.get_bumps())
            report.add_result(result, metrics[method.value], inversion.get_timing()[method.value])
        kit = inversion.get_kit()
        diagnostics = cls.__stage('diagnostics', cls.internal_solution_diagnostics, inversion, truth,
                                  config.get_held_out())
        report.set_internal_solution_diagnostics(diagnostics)
        report.set_identity_diagnostics(cls.__stage('diagnostics', LslSolver.verify_rom_identity,
                                                    inversion.get_factorization(), kit, data, kit.get_data(),
                                                    inversion.get_solutions(), truth))
        report.set_interpolation_residuals(cls.__stage('diagnostics', LslSolver.rom_interpolation_residuals,
                                                       inversion.get_factorization(), kit, data))
        if export:
            folder = cls.output_folder(config, output_root)
            cls.__stage('export', cls.export_results, inversion, folder, metrics)
            cls.__stage('export', GridExporter.write_field, config.get_grid(), truth.get_values(), folder, 'q_true')
            if config.to_dict().get('output', dict()).get('internal', False):
                cls.__stage('export', GridExporter.write_internal_solutions, inversion.get_solutions(),
                            os.path.join(folder, 'internal'))
            cls.__stage('export', GridExporter.write_json, report.to_dict(),
                        os.path.join(folder, config_constants.REPORT_FILE))
        Logger.success('Experiment {0} finished'.format(config.get_name()))
        return report
