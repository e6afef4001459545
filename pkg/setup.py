import os
import setuptools

from setuptools import setup, find_packages

here = os.path.abspath(os.path.dirname(__file__))

os.chdir(here)


with open(os.path.join(here, "README.md"), "r", encoding="utf-8") as f:
    long_description = f.read()

version_contents = {}
with open(os.path.join(here, "antidiffusive", "version.py"), "r", encoding="utf-8") as f:
    exec(f.read(), version_contents)

requirementPath = os.path.join(here, "requirements.txt")
install_requires = []
if os.path.isfile(requirementPath):
    with open(requirementPath, "r", encoding="utf-8") as f:
        install_requires = [line for line in f.read().splitlines()
                            if line.strip() and not line.lstrip().startswith("#")]

setuptools.setup(
    name="antidiffusive-advection",
    version=version_contents["VERSION"],
    description="Anti-diffusive and classical schemes for 1D linear advection, with long-time behavior analysis",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=["tests"]),
    install_requires=install_requires,
    extras_require={
        "test": ["hypothesis==6.112.1"],
    },
    entry_points={
        "console_scripts": [
            "antidiffusive=antidiffusive.experiments.cli:main",
        ],
    },
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "Operating System :: OS Independent",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires='>=3.8',
)
