#!/usr/bin/env python
import os
import sys
import typing

from setuptools import Command, find_packages, setup


class BasePytestCommand(Command):
    user_options: typing.List = []
    test_dir: typing.Optional[str] = None

    def initialize_options(self):
        pass

    def finalize_options(self):
        pass

    def run(self):
        import pytest

        args = [self.test_dir, "--cov=damspec", "--cov-report=xml", "--cov-report=html"]

        errno = pytest.main(args)
        sys.exit(errno)


class UnitTestCommand(BasePytestCommand):
    test_dir: str = "test/unit"


class IntegrationTestCommand(BasePytestCommand):
    test_dir = "test/integration"


custom_cmds = {
    "unit_test": UnitTestCommand,
    "integration_test": IntegrationTestCommand,
}

# read the contents of your README file
this_directory = os.path.abspath(os.path.dirname(__file__))
with open(os.path.join(this_directory, "README.rst"), encoding="utf-8") as f:
    long_description = f.read()
exec(open(os.path.join(this_directory, "damspec/version.py")).read())

setup(
    name="damspec",
    version=__version__,  # type: ignore
    description="Dressed-atom multiphoton spectroscopy of degenerate two-level atoms",
    long_description=long_description,
    long_description_content_type="text/x-rst",
    license="Apache License 2.0",
    python_requires=">=3.7",
    install_requires=open(os.path.join(this_directory, "requirements.txt")).read().strip().split("\n"),
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Physics",
    ],
    keywords="optical bloch equations dressed states electromagnetically induced absorption",
    include_package_data=True,
    packages=find_packages(exclude=["test*"]),
    entry_points={"console_scripts": ["damspec=damspec.cli:main"]},
    cmdclass=custom_cmds,
)
