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
Lippmann-Schwinger-Lanczos inversion.

Recover an unknown potential q(x) of -Laplace u + q u + lambda u = g from samples of the
boundary transfer function F(lambda): a data driven reduced order model is built from the
samples, its Lanczos coordinates give internal solutions without knowing q, and a
linearized Lippmann-Schwinger system is solved for q with truncated SVD.
"""
import os
from typing import List, Optional
from dotenv import load_dotenv
from .inversion.experiment_handler import ExperimentHandler, Inversion
from .inversion.internal.common import config_constants, config_messages
from .inversion.internal.common.config_errors import ConfigError, LslError
from .inversion.internal.utils.file_manager import FileManager
from .inversion.internal.utils.grid_exporter import GridExporter
from .inversion.internal.utils.logger import Logger
from .inversion.models import ExperimentConfig, MethodType, Report, TransferData


class LslInversion:
    """ LslInversion class"""
    __instance = None

    @staticmethod
    def get_instance():
        """ Static access method. """
        if LslInversion.__instance is None:
            return LslInversion()
        return LslInversion.__instance

    @staticmethod
    def enable_debug(enable: bool):
        """Set the logger in debug mode

        Args:
            enable: A boolean value to set the logger debug mode
        """
        Logger.set_debug(enable)

    def __init__(self):
        """ Virtually private constructor. """
        if LslInversion.__instance is not None:
            raise LslError("LslInversion " + config_messages.SINGLETON_EXCEPTION)
        load_dotenv()
        self.__output_root = os.environ.get(config_constants.OUTPUT_ROOT_ENV,
                                            config_constants.DEFAULT_OUTPUT_ROOT)
        LslInversion.__instance = self

    def set_output_root(self, output_root: str):
        """Set the folder under which relative experiment outputs are written"""
        self.__output_root = output_root

    def get_output_root(self) -> str:
        """Get the output root"""
        return self.__output_root

    @staticmethod
    def load_config(name_or_path: str, overrides: Optional[List[str]] = None,
                    output_directory: Optional[str] = None, seed: Optional[int] = None) -> ExperimentConfig:
        """Load a shipped config by name or a config file, then apply overrides"""
        config = ExperimentConfig.load(name_or_path)
        if overrides or output_directory is not None or seed is not None:
            config = config.with_overrides(overrides, output_directory, seed)
        return config

    def simulate(self, config: ExperimentConfig, file_path: Optional[str] = None) -> TransferData:
        """Generate the measured transfer data of a config

        Args:
            config: experiment configuration.
            file_path: when given, the data are also written there as JSON.
        """
        data, _ = ExperimentHandler.generate_data(config)
        if file_path:
            GridExporter.write_json(data.to_dict(), file_path)
        return data

    @staticmethod
    def read_transfer_data(file_path: str) -> TransferData:
        """Read a transfer data JSON file"""
        transfer_data = FileManager.read_files(file_path)
        if transfer_data is None:
            raise ConfigError(config_messages.CONFIG_FILE_ERROR + file_path)
        return TransferData.from_dict(transfer_data)

    def invert(self, config: ExperimentConfig, data: TransferData, export: bool = True) -> Inversion:
        """Invert measured data with the data driven methods of the config

        CHEATED needs the true potential and is skipped here.
        """
        methods = [method for method in config.get_methods() if method is not MethodType.CHEATED]
        inversion = ExperimentHandler.invert(config, data, None, methods)
        if export:
            ExperimentHandler.export_results(inversion, ExperimentHandler.output_folder(config, self.__output_root))
        return inversion

    def run_experiment(self, config: ExperimentConfig, export: bool = True) -> Report:
        """Run a full experiment and write its artifacts under the output root"""
        return ExperimentHandler.run_experiment(config, self.__output_root, export)
