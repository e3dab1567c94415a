"""Setup module."""

import os
from pathlib import Path

from setuptools import find_packages, setup


def parse_requirements_file():
    """Parse requirements.txt style files."""
    path = os.path.join(Path(__file__).parent, "requirements.txt")
    reqs = []
    with open(path) as file:
        for line in file:
            line = line.strip()
            if line and not line.startswith("#"):
                reqs.append(line)

    return reqs


setup(
    name="sdskit",
    version="0.1.0",
    packages=find_packages(exclude=["examples", "examples.*"]),
    description="Randomized social choice: social decision schemes, lottery "
    "extensions, efficiency and participation audits, with exact arithmetic",
    # requirements from the requirements.txt file
    install_requires=parse_requirements_file(),
    python_requires=">=3.8",
    entry_points={"console_scripts": ["sdskit = sdskit.cli:main"]},
)
