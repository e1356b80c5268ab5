# Copyright 2021 The lsl-inversion Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except in compliance with
# the License. You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software distributed under the License is distributed on
# an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the License for the
# specific language governing permissions and limitations under the License.

from setuptools import setup, find_packages

NAME = "lsl-inversion-python-sdk"
VERSION = "0.1.0"
# To install the library, run the following
#
# python setup.py install
#
# prerequisite: setuptools
# http://pypi.python.org/pypi/setuptools

REQUIRES = [
    "numpy>=1.20",
    "scipy>=1.6",
    "Pillow>=8.0",
    "python-dotenv>=0.17.1"
]
with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setup(
    name=NAME,
    version=VERSION,
    author="The lsl-inversion Authors",
    license='Apache 2.0',
    description="Lippmann-Schwinger-Lanczos inversion with data driven reduced order models",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=['unit_tests*', 'integration_tests*']),
    install_requires=REQUIRES,
    include_package_data=True,
    package_data={'lsl_inversion': ['configs/*.json']},
    entry_points={'console_scripts': ['lsl-inversion=lsl_inversion.cli:main']},
    keywords=['python', 'lsl_inversion', 'inverse problems', 'reduced order models', 'lanczos'],
    classifiers=[
        "Development Status :: 3 - Alpha",
        "License :: OSI Approved :: Apache Software License",
        "Intended Audience :: Science/Research",
        "Programming Language :: Python :: 3"
    ],
    python_requires='>=3.7'
)
